//! Independent checks of the basis: nonequivariant and fixed-point images
//! of basis elements must be integral bases of the classical groups.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use bu2_core::maps::{self, components, eta, forget_fixed, forget_noneq, rho};
use bu2_core::parse::{parse_grading, parse_poly, parse_triple};
use bu2_core::presentation::bu2;
use bu2_core::rewrite::enumerate_basis;
use bu2_core::{CoeffElt, Grading, Poly, Scalar, Triple};

fn basis_polys(page: Grading, a_max: i64) -> Vec<(i64, i64, Poly<CoeffElt>)> {
    enumerate_basis(bu2(), page, a_max)
        .into_iter()
        .map(|b| (b.position.a, b.position.b, Poly::monomial(bu2().signature(), b.monomial, CoeffElt::one())))
        .collect()
}

/// Exponents `(i, j)` of `u^i v^j` with `deg u * i + deg v * j = degree`.
fn monomials(degree: i64, du: i64, dv: i64) -> Vec<(i32, i32)> {
    let mut out = Vec::new();
    if degree < 0 {
        return out;
    }
    for j in 0..=degree / dv {
        let rest = degree - dv * j;
        if rest % du == 0 {
            out.push(((rest / du) as i32, j as i32));
        }
    }
    out
}

#[test]
fn bareiss_small_cases() {
    assert_eq!(common::det(&[vec![2, 1], vec![1, 1]]), 1);
    assert_eq!(common::det(&[vec![0, 1], vec![1, 0]]), -1);
    assert_eq!(common::rank(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]), 2);
    assert_eq!(common::det(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), -3);
}

#[test]
fn rho_diagonals_are_integral_bases() {
    // On the diagonal a + b = n of page 0 the basis restricts to a basis of
    // H^n(BU(2)), spanned by c1^i c2^j with 2i + 4j = n.
    let basis = basis_polys(Grading::zero(3), 12);
    for n in (0..=12).step_by(2) {
        let xs: Vec<_> = basis.iter().filter(|(a, b, _)| a + b == n).map(|(_, _, x)| x).collect();
        let keys = monomials(n, 2, 4);
        assert_eq!(xs.len(), keys.len(), "diagonal {n}");
        let rows: Vec<Vec<i128>> = xs
            .iter()
            .map(|x| {
                let r = forget_noneq(&rho().apply(x).unwrap());
                for (m, _) in r.terms() {
                    assert!(keys.contains(&(m.exp(0), m.exp(1))), "rho({x}) leaves degree {n}");
                }
                keys.iter().map(|(i, j)| r.coeff(&bu2_core::Monomial::from_exps(&[*i, *j])) as i128).collect()
            })
            .collect();
        assert_eq!(common::det(&rows).abs(), 1, "diagonal {n}");
    }
}

/// Each column of `page` maps onto an integral basis of the fixed-point
/// groups; component `k` sits `shifts[k]` below the column degree.
fn column_check(page: &str, shifts: [i64; 3], a_max: i64) {
    let basis = basis_polys(parse_grading(3, page).unwrap(), a_max);
    for a in (0..=a_max).step_by(2) {
        let xs: Vec<_> = basis.iter().filter(|(x, _, _)| *x == a).map(|(_, _, p)| p).collect();
        let mut keys = Vec::new();
        for (k, shift) in shifts.iter().enumerate() {
            let (du, dv) = if k == 1 { (2, 2) } else { (2, 4) };
            keys.extend(monomials(a - shift, du, dv).into_iter().map(|m| (k, m)));
        }
        assert_eq!(xs.len(), keys.len(), "page {page}, column {a}");
        let rows: Vec<Vec<i128>> = xs
            .iter()
            .map(|x| {
                let t: Triple<i64> = forget_fixed(&maps::phi(x).unwrap());
                for (k, comp) in t.0.iter().enumerate() {
                    for (m, _) in comp.terms() {
                        assert!(keys.contains(&(k, (m.exp(0), m.exp(1)))), "fixed set of {x} leaves column {a}");
                    }
                }
                keys.iter()
                    .map(|(k, (i, j))| t.0[*k].coeff(&bu2_core::Monomial::from_exps(&[*i, *j])) as i128)
                    .collect()
            })
            .collect();
        assert_eq!(common::det(&rows).abs(), 1, "page {page}, column {a}");
    }
}

#[test]
fn fixed_point_columns_are_integral_bases() {
    column_check("0", [0, 0, 0], 8);
    column_check("O1 + 2*O2", [0, 2, 4], 8);
}

#[test]
fn page_zero_diagonal_counts_match_classical_ranks() {
    let basis = basis_polys(Grading::zero(3), 16);
    for d in 0..=8 {
        let n = basis.iter().filter(|(a, b, _)| a + b == 2 * d).count();
        assert_eq!(n as i64, d / 2 + 1, "diagonal {}", 2 * d);
    }
}

#[test]
fn eta_images_of_a_column_are_independent() {
    let basis = basis_polys(parse_grading(3, "O1 + 2*O2").unwrap(), 6);
    let positions: BTreeSet<(i64, i64)> = basis.iter().map(|(a, b, _)| (*a, *b)).collect();
    for (a, b) in positions {
        let images: Vec<_> =
            basis.iter().filter(|(x, y, _)| (*x, *y) == (a, b)).map(|(_, _, p)| eta().apply(p).unwrap()).collect();
        for i in 0..images.len() {
            for j in i + 1..images.len() {
                assert_ne!(images[i], images[j], "position ({a}, {b})");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn printed_elements_parse_back(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let x = bu2().normal_form(&common::random_homogeneous(&mut rng, bu2(), 4, 4));
        let back: Poly<CoeffElt> = parse_poly(bu2().signature(), &x.to_string()).unwrap();
        prop_assert_eq!(&back, &x);
        let t = eta().apply(&x).unwrap();
        let back: Triple<CoeffElt> = parse_triple(components(), &t.to_string()).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn printed_gradings_parse_back(a in -20i64..20, b in -20i64..20, m in proptest::collection::vec(-5i64..5, 3)) {
        let g = Grading::new(a, b, &m);
        prop_assert_eq!(parse_grading(3, &g.to_string()).unwrap(), g);
    }
}
