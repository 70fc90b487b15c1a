//! Exact truncated formal power series.
//!
//! A [`TruncatedSeries`] of order `N` stores `c_0, ..., c_N` and stands for
//! every power series that agrees with those coefficients modulo `x^{N+1}`.
//! Binary operations return results at the smaller of the two orders, and no
//! operation ever invents a coefficient past the known precision.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// The scalar used everywhere: an arbitrary-precision rational, always kept
/// in lowest terms with a positive denominator.
pub type Coefficient = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("coefficient {index} is beyond the known precision (series order {order})")]
    OutOfPrecision { index: usize, order: usize },
    #[error("divisor has zero constant term")]
    NonUnit,
    #[error("composition requires an inner series with zero constant term")]
    CompositionDomain,
    #[error("series is not revertible: {0}")]
    NotRevertible(&'static str),
    #[error("constant term {0} has no rational square root")]
    NoRationalSqrt(String),
    #[error("series is not divisible by x^{power}")]
    NotDivisibleByX { power: usize },
}

/// Convenience constructor for an integer coefficient.
pub fn int(n: i64) -> Coefficient {
    Coefficient::from_integer(BigInt::from(n))
}

/// Convenience constructor for `num/den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Coefficient {
    Coefficient::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical text for a coefficient: `n` for integers, `n/d` otherwise.
pub fn format_coefficient(c: &Coefficient) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Always `n/d`, including integers (`3/1`). Used by the JSON encoding.
pub fn format_coefficient_exact(c: &Coefficient) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Parses `n` or `n/d` (optionally signed) into an exact coefficient.
pub fn parse_coefficient(text: &str) -> Option<Coefficient> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Coefficient::new(n, d))
        }
        None => Some(Coefficient::from_integer(text.parse().ok()?)),
    }
}

#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    coeffs: Vec<Coefficient>,
}

impl TruncatedSeries {
    /// Builds a series whose order is `coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty: a series always knows at least `c_0`.
    pub fn from_coeffs(coeffs: Vec<Coefficient>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        Self { coeffs }
    }

    /// Integer coefficients `c_0..c_k`, padded with zeros up to `order`.
    /// Coefficients past `order` are dropped.
    pub fn from_ints(values: &[i64], order: usize) -> Self {
        let mut coeffs = vec![Coefficient::zero(); order + 1];
        for (slot, v) in coeffs.iter_mut().zip(values) {
            *slot = int(*v);
        }
        Self { coeffs }
    }

    /// Polynomial coefficients padded with zeros (or cut) to the given order.
    pub fn polynomial(values: &[Coefficient], order: usize) -> Self {
        let mut coeffs = vec![Coefficient::zero(); order + 1];
        for (slot, v) in coeffs.iter_mut().zip(values) {
            *slot = v.clone();
        }
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Coefficient::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Coefficient::one(), order)
    }

    pub fn constant(c: Coefficient, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`. At order 0 this is just the zero constant.
    pub fn x(order: usize) -> Self {
        Self::monomial(Coefficient::one(), 1, order)
    }

    /// `c x^k` at the given order (zero if `k > order`).
    pub fn monomial(c: Coefficient, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Coefficient> {
        self.coeffs
    }

    /// `[x^n] s`. Asking past the order is an error, never a silent zero.
    pub fn coefficient(&self, n: usize) -> Result<&Coefficient, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::OutOfPrecision { index: n, order: self.order() })
    }

    /// Drops coefficients above `order`. A larger `order` leaves the series unchanged.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        Self { coeffs: self.coeffs[..keep].to_vec() }
    }

    /// Index of the first nonzero known coefficient; `None` if all known ones vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    /// Multiplies by `x^k`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![Coefficient::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by `x^k`; the low `k` coefficients must vanish and the order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if k > self.order() {
            return Err(SeriesError::OutOfPrecision { index: k, order: self.order() });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisibleByX { power: k });
        }
        Ok(Self { coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `s(r x)`: coefficient `n` is multiplied by `r^n`.
    pub fn scale_arg(&self, r: &Coefficient) -> Self {
        let mut power = Coefficient::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c * &power;
                power *= r;
                out
            })
            .collect();
        Self { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order()) + 1;
        Self { coeffs: (0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order()) + 1;
        Self { coeffs: (0..n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect() }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order()) + 1;
        let mut coeffs = vec![Coefficient::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// `self / other` for a divisor with nonzero constant term.
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        if !other.is_unit() {
            return Err(SeriesError::NonUnit);
        }
        let n = self.order().min(other.order()) + 1;
        let lead = &other.coeffs[0];
        let mut q: Vec<Coefficient> = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = self.coeffs[i].clone();
            for j in 1..=i {
                acc -= &other.coeffs[j] * &q[i - j];
            }
            q.push(acc / lead);
        }
        Ok(Self { coeffs: q })
    }

    pub fn recip(&self) -> Result<Self, SeriesError> {
        Self::one(self.order()).div(self)
    }

    /// Quotient that first cancels the common power of `x`.
    ///
    /// With `v` the valuation of the divisor, both operands are divided by
    /// `x^v` before the ordinary division, so the result order drops by `v`.
    /// Fails if the numerator has a nonzero coefficient below `x^v`.
    pub fn div_cancelling_x(&self, other: &Self) -> Result<Self, SeriesError> {
        let v = other.valuation().ok_or(SeriesError::NonUnit)?;
        if v == 0 {
            return self.div(other);
        }
        let num = self.shift_down(v)?;
        let den = other.shift_down(v)?;
        num.div(&den)
    }

    /// `self(inner)` by Horner's rule; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::CompositionDomain);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for c in self.coeffs[..order].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse: the series `u` with `u(0) = 0` and `self(u) = x`.
    ///
    /// Solved coefficient by coefficient. The coefficient of `x^m` in `u^k`
    /// (`k >= 2`) only involves `u_1..u_{m-k+1}`, so a table of power
    /// coefficients can be filled column by column as each `u_n` is found.
    pub fn revert(&self) -> Result<Self, SeriesError> {
        let order = self.order();
        if order == 0 {
            return Err(SeriesError::NotRevertible("linear coefficient unknown at order 0"));
        }
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NotRevertible("constant term must be zero"));
        }
        let f1 = &self.coeffs[1];
        if f1.is_zero() {
            return Err(SeriesError::NotRevertible("linear coefficient must be nonzero"));
        }
        let mut u = vec![Coefficient::zero(); order + 1];
        // powers[k][m] = [x^m] u^k
        let mut powers = vec![vec![Coefficient::zero(); order + 1]; order + 1];
        u[1] = f1.recip();
        powers[1][1] = u[1].clone();
        for n in 2..=order {
            let mut rest = Coefficient::zero();
            for k in 2..=n {
                let mut acc = Coefficient::zero();
                for j in 1..=(n - k + 1) {
                    acc += &u[j] * &powers[k - 1][n - j];
                }
                if !self.coeffs[k].is_zero() {
                    rest += &self.coeffs[k] * &acc;
                }
                powers[k][n] = acc;
            }
            u[n] = -rest / f1;
            powers[1][n] = u[n].clone();
        }
        Ok(Self { coeffs: u })
    }

    /// Square root with positive rational constant term.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let s0 = &self.coeffs[0];
        let b0 = rational_sqrt(s0).ok_or_else(|| SeriesError::NoRationalSqrt(format_coefficient(s0)))?;
        let two_b0 = &b0 * int(2);
        let mut b: Vec<Coefficient> = vec![b0];
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc -= &b[i] * &b[n - i];
            }
            b.push(acc / &two_b0);
        }
        Ok(Self { coeffs: b })
    }

    /// Integer power; negative exponents need a unit.
    pub fn pow(&self, k: i64) -> Result<Self, SeriesError> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut result = Self::one(self.order());
        let mut square = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&square);
            }
            e >>= 1;
            if e > 0 {
                square = square.mul(&square);
            }
        }
        Ok(result)
    }
}

fn rational_sqrt(c: &Coefficient) -> Option<Coefficient> {
    if !c.is_positive() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    if &(&n * &n) == c.numer() && &(&d * &d) == c.denom() {
        Some(Coefficient::new(n, d))
    } else {
        None
    }
}

/// The Catalan generating function `c(x) = (1 - sqrt(1 - 4x)) / (2x)`.
pub fn catalan_gf(order: usize) -> TruncatedSeries {
    let inner = TruncatedSeries::from_ints(&[1, -4], order + 1);
    let root = inner.sqrt().expect("constant term 1 is a square");
    TruncatedSeries::one(order + 1)
        .sub(&root)
        .shift_down(1)
        .expect("1 - sqrt(1 - 4x) has zero constant term")
        .scale(&ratio(1, 2))
}

/// Equality up to the smaller of the two orders.
impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let mag_text = format_coefficient(&mag);
            match i {
                0 => write!(f, "{mag_text}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag_text}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}
