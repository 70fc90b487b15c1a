//! Named Riordan arrays and their closed-form entries.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::production::{produced_matrix_closed_form, ProductionError};
use crate::riordan::{RiordanElement, RiordanError, TriMatrix};
use crate::series::{catalan_gf, int, parse_coefficient, Coefficient, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("entry ({n}, {k}) is outside the triangle 0 <= k <= n")]
    Domain { n: usize, k: usize },
    #[error("unknown family '{0}'; valid names: pascal, binomial:r, catalan, moment:r, a085478")]
    UnknownFamily(String),
    #[error("bad parameter '{0}': expected an integer or num/den")]
    BadParameter(String),
    #[error("precision exhausted after {completed} step(s) of the iterated process")]
    PrecisionExhausted { completed: usize },
    #[error(transparent)]
    Riordan(#[from] RiordanError),
    #[error(transparent)]
    Production(#[from] ProductionError),
}

/// Binomial coefficient by the multiplicative formula.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn geometric_in(r: &Coefficient, order: usize) -> TruncatedSeries {
    // 1 / (1 - r x)
    TruncatedSeries::polynomial(&[int(1), -r.clone()], order).recip().expect("unit constant term")
}

/// Pascal's triangle `(1/(1-x), x/(1-x))`.
pub fn pascal(order: usize) -> RiordanElement {
    binomial_power(&int(1), order)
}

/// `B^r = (1/(1 - r x), x/(1 - r x))`.
pub fn binomial_power(r: &Coefficient, order: usize) -> RiordanElement {
    let g = geometric_in(r, order);
    let f = g.shift_up(1).truncate(order);
    RiordanElement::new(g, f).expect("binomial powers are valid elements")
}

/// The Catalan array `(c(x), x c(x))`.
pub fn catalan_array(order: usize) -> RiordanElement {
    let c = catalan_gf(order);
    let f = c.shift_up(1).truncate(order);
    RiordanElement::new(c, f).expect("the Catalan array is a valid element")
}

/// `(1/(1-x), x/(1-x)^2)`, the triangle of `C(n+k, 2k)`.
pub fn a085478_element(order: usize) -> RiordanElement {
    let g = geometric_in(&int(1), order);
    let f = g.mul(&g).shift_up(1).truncate(order);
    RiordanElement::new(g, f).expect("valid element")
}

/// `M(r) = (c(r x)^2, x c(r x)^2)`.
pub fn moment_element(r: &Coefficient, order: usize) -> RiordanElement {
    let c = catalan_gf(order).scale_arg(r);
    let g = c.mul(&c);
    let f = g.shift_up(1).truncate(order);
    RiordanElement::new(g, f).expect("valid element")
}

/// `M(r)_{n,k} = 2(k+1)/(n+k+2) C(2n+1, n-k) r^{n-k}`.
pub fn moment_entry(r: &Coefficient, n: usize, k: usize) -> Result<Coefficient, FamilyError> {
    if k > n {
        return Err(FamilyError::Domain { n, k });
    }
    let (n64, k64) = (n as u64, k as u64);
    let lead = Coefficient::new(BigInt::from(2 * (k64 + 1)), BigInt::from(n64 + k64 + 2));
    Ok(lead * Coefficient::from_integer(binomial(2 * n64 + 1, n64 - k64)) * r.pow((n - k) as i32))
}

/// The moment array of `M(r)` built from its generating functions.
pub fn moment_array(r: &Coefficient, size: usize) -> TriMatrix {
    moment_element(r, size.max(2)).matrix(size).expect("element built at the needed order")
}

/// The same array evaluated entry by entry from the closed form.
pub fn moment_array_closed_form(r: &Coefficient, size: usize) -> TriMatrix {
    let rows: Vec<Vec<Coefficient>> =
        (0..size).map(|n| (0..=n).map(|k| moment_entry(r, n, k).expect("k <= n")).collect()).collect();
    TriMatrix::new(crate::matrix::Matrix::from_rows(&rows, size)).expect("lower triangular")
}

/// Coefficients of `P_n(x; r)` in ascending powers of `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialRow(Vec<Coefficient>);

impl PolynomialRow {
    pub fn new(coeffs: Vec<Coefficient>) -> Self {
        Self(coeffs)
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&Coefficient> {
        self.degree().map(|d| &self.0[d])
    }

    fn coeff(&self, i: usize) -> Coefficient {
        self.0.get(i).cloned().unwrap_or_else(Coefficient::zero)
    }

    /// `P_n - (x - 2r) P_{n-1} + r^2 P_{n-2}`, which vanishes for the family.
    pub fn recurrence_residual(r: &Coefficient, pn: &Self, pn1: &Self, pn2: &Self) -> Self {
        let len = pn.0.len().max(pn1.0.len() + 1).max(pn2.0.len());
        let two_r = r * int(2);
        let r2 = r * r;
        let coeffs = (0..len)
            .map(|i| {
                let shifted = if i == 0 { Coefficient::zero() } else { pn1.coeff(i - 1) };
                pn.coeff(i) - shifted + &two_r * pn1.coeff(i) + &r2 * pn2.coeff(i)
            })
            .collect();
        Self(coeffs)
    }
}

impl fmt::Display for PolynomialRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = TruncatedSeries::from_coeffs(self.0.clone()).to_string();
        let cut = s.rfind(" + O(").unwrap_or(s.len());
        f.write_str(&s[..cut])
    }
}

/// `M(r)^{-1} = (1/(1+rx)^2, x/(1+rx)^2)`.
pub fn polynomial_element(r: &Coefficient, order: usize) -> RiordanElement {
    let base = TruncatedSeries::polynomial(&[int(1), r.clone()], order);
    let g = base.mul(&base).recip().expect("unit");
    let f = g.shift_up(1).truncate(order);
    RiordanElement::new(g, f).expect("valid element")
}

/// First `count` rows of the coefficient array of the orthogonal family.
pub fn orthogonal_polys(r: &Coefficient, count: usize) -> Vec<PolynomialRow> {
    let m = polynomial_element(r, count.max(2)).matrix(count).expect("order suffices");
    (0..count).map(|n| PolynomialRow(m.as_matrix().row(n)[..=n].to_vec())).collect()
}

/// `sum_{i=0}^n (2i+2)/(3n+2-i) C(3n+2-i, n-i) C(i+k, 2k)`: entries of the array
/// produced by the second production matrix of `(1/(1-x), x/(1-x)^2)`.
pub fn a085478_second_entry(n: usize, k: usize) -> Result<Coefficient, FamilyError> {
    if k > n {
        return Err(FamilyError::Domain { n, k });
    }
    let (n, k) = (n as u64, k as u64);
    let mut total = Coefficient::zero();
    for i in 0..=n {
        let top = 3 * n + 2 - i;
        let weight = Coefficient::new(BigInt::from(2 * i + 2), BigInt::from(top));
        total += weight * Coefficient::from_integer(binomial(top, n - i) * binomial(i + k, 2 * k));
    }
    Ok(total)
}

/// `(2k+2)/(3n-k+2) C(3n-k+2, n-k)`, the array `((1-x)^2, x(1-x)^2)^{-1}`.
///
/// The numerator is `2k+2`; with `2k+1` the entries would not be integers.
pub fn a092276_entry(n: usize, k: usize) -> Result<Coefficient, FamilyError> {
    if k > n {
        return Err(FamilyError::Domain { n, k });
    }
    let (n, k) = (n as u64, k as u64);
    let top = 3 * n - k + 2;
    Ok(Coefficient::new(BigInt::from(2 * k + 2), BigInt::from(top)) * Coefficient::from_integer(binomial(top, n - k)))
}

/// `e, e_1, e_2, ...` where each element is produced by the second production
/// matrix of the one before. Each step costs one order of precision.
pub fn iterate_second_production(e: &RiordanElement, steps: usize) -> Result<Vec<RiordanElement>, FamilyError> {
    let mut chain = vec![e.clone()];
    for step in 0..steps {
        let current = chain.last().expect("chain starts non-empty");
        if current.order() < 2 {
            return Err(FamilyError::PrecisionExhausted { completed: step });
        }
        chain.push(produced_matrix_closed_form(current, 2)?);
    }
    Ok(chain)
}

/// Family identifiers accepted on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Pascal,
    Binomial(Coefficient),
    Catalan,
    Moment(Coefficient),
    A085478,
}

impl Family {
    pub fn element(&self, order: usize) -> RiordanElement {
        match self {
            Family::Pascal => pascal(order),
            Family::Binomial(r) => binomial_power(r, order),
            Family::Catalan => catalan_array(order),
            Family::Moment(r) => moment_element(r, order),
            Family::A085478 => a085478_element(order),
        }
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let param = |p: &str| parse_coefficient(p).ok_or_else(|| FamilyError::BadParameter(p.to_string()));
        match s.trim().split_once(':') {
            None => match s.trim() {
                "pascal" => Ok(Family::Pascal),
                "catalan" => Ok(Family::Catalan),
                "a085478" => Ok(Family::A085478),
                other => Err(FamilyError::UnknownFamily(other.to_string())),
            },
            Some(("binomial", r)) => Ok(Family::Binomial(param(r)?)),
            Some(("moment", r)) => Ok(Family::Moment(param(r)?)),
            Some(_) => Err(FamilyError::UnknownFamily(s.trim().to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::series::format_coefficient;
        match self {
            Family::Pascal => write!(f, "pascal"),
            Family::Binomial(r) => write!(f, "binomial:{}", format_coefficient(r)),
            Family::Catalan => write!(f, "catalan"),
            Family::Moment(r) => write!(f, "moment:{}", format_coefficient(r)),
            Family::A085478 => write!(f, "a085478"),
        }
    }
}
