//! Algebraic invariants over randomly generated inputs.

mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use riordan::gfexpr::{evaluate, parse, ExprKind, GfExpression};
use riordan::oeis::{flatten_triangle, OeisIndex};
use riordan::production::{
    generate_from_production, nth_az, nth_production_matrix, nth_production_matrix_via_matrices,
    nth_production_matrix_via_series, produced_matrix_closed_form, produced_matrix_via_reversion, production_matrix,
};
use riordan::series::{catalan_gf, int, ratio};
use riordan::{Coefficient, RiordanElement, TriMatrix, TruncatedSeries};

const ORDER: usize = 8;

fn coefficient() -> impl Strategy<Value = Coefficient> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_coefficient() -> impl Strategy<Value = Coefficient> {
    (prop_oneof![-4i64..=-1, 1i64..=4], 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

fn series() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(coefficient(), ORDER + 1).prop_map(TruncatedSeries::from_coeffs)
}

fn unit_series() -> impl Strategy<Value = TruncatedSeries> {
    (nonzero_coefficient(), prop::collection::vec(coefficient(), ORDER)).prop_map(|(c0, rest)| {
        let mut coeffs = vec![c0];
        coeffs.extend(rest);
        TruncatedSeries::from_coeffs(coeffs)
    })
}

/// `f(0) = 0`, `f'(0) != 0`.
fn revertible_series() -> impl Strategy<Value = TruncatedSeries> {
    (nonzero_coefficient(), prop::collection::vec(coefficient(), ORDER - 1)).prop_map(|(c1, rest)| {
        let mut coeffs = vec![int(0), c1];
        coeffs.extend(rest);
        TruncatedSeries::from_coeffs(coeffs)
    })
}

fn small_int_poly(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, len)
}

/// Normalized element with polynomial `g`, `f` of degree at most 4.
fn normalized_element(order: usize) -> impl Strategy<Value = RiordanElement> {
    (small_int_poly(4), small_int_poly(3)).prop_map(move |(gt, ft)| {
        let mut g = vec![1];
        g.extend(gt);
        let mut f = vec![0, 1];
        f.extend(ft);
        common::element(&g, &f, order)
    })
}

fn element() -> impl Strategy<Value = RiordanElement> {
    (unit_series(), revertible_series()).prop_map(|(g, f)| RiordanElement::new(g, f).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mul_is_commutative_and_associative(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn division_inverts_multiplication(a in series(), u in unit_series()) {
        prop_assert_eq!(a.mul(&u).div(&u).unwrap(), a.clone());
        prop_assert_eq!(a.div(&u).unwrap().mul(&u), a);
        prop_assert_eq!(u.recip().unwrap().recip().unwrap(), u);
    }

    #[test]
    fn composition_is_associative(a in series(), f in revertible_series(), h in revertible_series()) {
        let left = a.compose(&f).unwrap().compose(&h).unwrap();
        let right = a.compose(&f.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn reversion_round_trips(f in revertible_series()) {
        let fbar = f.revert().unwrap();
        let x = TruncatedSeries::x(ORDER);
        prop_assert_eq!(f.compose(&fbar).unwrap(), x.clone());
        prop_assert_eq!(fbar.compose(&f).unwrap(), x);
        prop_assert_eq!(fbar.revert().unwrap(), f);
    }

    #[test]
    fn reversion_agrees_with_lagrange_inversion(f in revertible_series()) {
        // [x^n] fbar = (1/n) [x^{n-1}] (x/f)^n
        let fbar = f.revert().unwrap();
        let x_over_f = f.shift_down(1).unwrap().recip().unwrap();
        for n in 1..ORDER {
            let power = x_over_f.pow(n as i64).unwrap();
            let expected = power.coefficient(n - 1).unwrap() / int(n as i64);
            prop_assert_eq!(fbar.coefficient(n).unwrap(), &expected);
        }
    }

    #[test]
    fn square_root_squares_back(u in unit_series(), b in 1i64..=4, d in 1i64..=3) {
        // rescale so the constant term is a rational square
        let c0 = u.coefficient(0).unwrap().clone();
        let s = u.scale(&(ratio(b * b, d * d) / c0));
        let root = s.sqrt().unwrap();
        prop_assert_eq!(root.mul(&root), s);
    }

    #[test]
    fn powers_add_exponents(u in unit_series(), j in -4i64..=4, k in -4i64..=4) {
        prop_assert_eq!(u.pow(j).unwrap().mul(&u.pow(k).unwrap()), u.pow(j + k).unwrap());
    }
}

#[test]
fn catalan_functional_equation() {
    for order in [1, 5, 20] {
        let c = catalan_gf(order);
        let rhs = TruncatedSeries::one(order).add(&c.mul(&c).shift_up(1).truncate(order));
        assert_eq!(c, rhs);
    }
}

fn expression() -> impl Strategy<Value = GfExpression> {
    let leaf = prop_oneof![(0i64..=9).prop_map(GfExpression::literal), Just(GfExpression::var())];
    leaf.prop_recursive(4, 24, 2, |inner| {
        let b = |e: GfExpression| Box::new(e);
        prop_oneof![
            inner.clone().prop_map(move |a| GfExpression::new(ExprKind::Neg(b(a)))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| GfExpression::new(ExprKind::Add(b(l), b(r)))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| GfExpression::new(ExprKind::Sub(b(l), b(r)))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| GfExpression::new(ExprKind::Mul(b(l), b(r)))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| GfExpression::new(ExprKind::Div(b(l), b(r)))),
            (inner.clone(), -3i64..=3).prop_map(move |(a, k)| GfExpression::new(ExprKind::Pow(b(a), k))),
            inner.clone().prop_map(move |a| GfExpression::new(ExprKind::Sqrt(b(a)))),
            inner.prop_map(move |a| GfExpression::new(ExprKind::Catalan(b(a)))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn printing_then_parsing_is_identity(e in expression()) {
        let text = e.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &e, "printed as {}", text);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn evaluation_is_consistent_across_orders(e in expression()) {
        // whenever both orders succeed, the lower is a truncation of the higher
        if let (Ok(low), Ok(high)) = (evaluate(&e, 4), evaluate(&e, 9)) {
            prop_assert!(low.order() >= 4 && high.order() >= 9);
            prop_assert_eq!(low.truncate(4), high.truncate(4));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn matrix_is_a_group_homomorphism(a in element(), b in element()) {
        let size = ORDER + 1;
        let product = a.group_mul(&b).unwrap().matrix(size).unwrap();
        prop_assert_eq!(product, a.matrix(size).unwrap().mul(&b.matrix(size).unwrap()));
    }

    #[test]
    fn inverse_element_gives_inverse_matrix(a in element()) {
        let size = ORDER + 1;
        let inverse = a.inverse().unwrap();
        prop_assert_eq!(inverse.matrix(size).unwrap(), a.matrix(size).unwrap().inverse().unwrap());
        prop_assert_eq!(a.group_mul(&inverse).unwrap().matrix(size).unwrap(), TriMatrix::identity(size));
    }

    #[test]
    fn columns_follow_the_fundamental_theorem(a in element(), h in series()) {
        // M times the coefficient vector of h is the coefficient vector of g h(f)
        let size = ORDER + 1;
        let m = a.matrix(size).unwrap();
        let image = a.ftra_apply(&h).unwrap();
        for n in 0..size {
            let mut acc = int(0);
            for k in 0..=n {
                acc += m.get(n, k) * h.coefficient(k).unwrap();
            }
            prop_assert_eq!(&acc, image.coefficient(n).unwrap());
        }
    }

    #[test]
    fn a_and_z_sequences_rebuild_the_element(a in normalized_element(12)) {
        let rebuilt = RiordanElement::from_az(&a.a_sequence().unwrap(), &a.z_sequence().unwrap()).unwrap();
        prop_assert_eq!(rebuilt.matrix(10).unwrap(), a.matrix(10).unwrap());
    }

    #[test]
    fn production_matrix_round_trips(a in element()) {
        let p = production_matrix(&a, ORDER).unwrap();
        prop_assert!(p.as_matrix().is_lower_hessenberg());
        let normalized = a.g().coefficient(0).unwrap() == &int(1);
        let rebuilt = generate_from_production(&p, ORDER).unwrap();
        if normalized {
            prop_assert_eq!(rebuilt, a.matrix(ORDER).unwrap());
        } else {
            // rows scale by g_0: the generated matrix is M / g_0
            let g0 = a.g().coefficient(0).unwrap().clone();
            let m = a.matrix(ORDER).unwrap();
            for i in 0..ORDER {
                for j in 0..=i {
                    prop_assert_eq!(rebuilt.get(i, j), &(m.get(i, j) / &g0));
                }
            }
        }
    }

    #[test]
    fn nth_production_matrices_have_riordan_shape(a in normalized_element(16), n in 1usize..=6) {
        let p = nth_production_matrix(&a, n, 8).unwrap();
        prop_assert!(p.has_riordan_shape());
        prop_assert!(p.superdiagonal().iter().all(|c| c == &int(1)));
        let (az_a, az_z) = nth_az(&a, n).unwrap();
        for i in 0..7 {
            prop_assert_eq!(p.get(i, 0), az_z.coefficient(i).unwrap());
            prop_assert_eq!(p.get(i, 1), az_a.coefficient(i).unwrap());
        }
    }

    #[test]
    fn matrix_and_series_paths_agree(a in element(), n in 1usize..=4) {
        let size = ORDER - n + 1;
        let via_matrices = nth_production_matrix_via_matrices(&a, n, size).unwrap();
        let via_series = nth_production_matrix_via_series(&a, n, size).unwrap();
        prop_assert_eq!(via_matrices, via_series);
    }

    #[test]
    fn closed_forms_agree(a in element(), n in 1usize..=5) {
        let closed = produced_matrix_closed_form(&a, n).unwrap();
        let reverted = produced_matrix_via_reversion(&a, n).unwrap();
        prop_assert_eq!(closed.matrix(ORDER - 1).unwrap(), reverted.matrix(ORDER - 1).unwrap());
    }
}

fn triangle() -> impl Strategy<Value = TriMatrix> {
    (3usize..=7).prop_flat_map(|size| prop::collection::vec(prop::collection::vec(-20i64..=20, size), size)).prop_map(
        |rows| {
            let ragged: Vec<Vec<i64>> = rows.iter().enumerate().map(|(i, r)| r[..=i].to_vec()).collect();
            let slices: Vec<&[i64]> = ragged.iter().map(Vec::as_slice).collect();
            TriMatrix::from_int_rows(&slices)
        },
    )
}

const DUMP: &str = "A000012 ,1,1,1,1,1,1,1,1,1,1,\n\
    A000027 ,1,2,3,4,5,6,7,8,9,10,\n\
    A000108 ,1,1,2,5,14,42,132,429,1430,\n\
    A007318 ,1,1,1,1,2,1,1,3,3,1,1,4,6,4,1,\n";

proptest! {
    #[test]
    fn lookups_are_deterministic(values in prop::collection::vec(0i64..=5, 6..12)) {
        let index = OeisIndex::parse_str(DUMP).unwrap();
        let query: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
        let first = index.identify_sequence(&query).unwrap();
        prop_assert_eq!(&first, &index.identify_sequence(&query).unwrap());
        prop_assert!(first.windows(2).all(|w| w[0] < w[1]));
        for m in &first {
            let stored = index.get(&m.a_number).unwrap();
            prop_assert_eq!(&stored[m.offset..m.offset + query.len()], query.as_slice());
        }
    }

    #[test]
    fn triangle_lookup_is_lookup_of_flattened_rows(m in triangle()) {
        let index = OeisIndex::parse_str(DUMP).unwrap();
        let flat = flatten_triangle(&m).unwrap();
        prop_assert_eq!(flat.len(), m.size() * (m.size() + 1) / 2);
        prop_assert_eq!(index.identify_triangle(&m).unwrap(), index.identify_sequence(&flat).unwrap());
    }
}
