#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use bu2_core::presentation::Presentation;
use bu2_core::{CoeffElt, CoeffSymbol, Grading, Monomial, Poly, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random term of grading `target` with every exponent at most `max_exp`,
/// or `None` if the draw does not fit.
fn term_in(rng: &mut impl Rng, pres: &Presentation, target: Grading, max_exp: i32) -> Option<(Monomial, CoeffElt)> {
    let sig = pres.signature();
    let mut m = Monomial::one();
    for &i in &pres.classes {
        m.0[i] = rng.gen_range(0..=2.min(max_exp));
    }
    let (_, _, om) = (target - sig.monomial_grading(&m)).natural();
    let lift = rng.gen_range(0..=1);
    for (k, &z) in pres.zetas.iter().enumerate() {
        m.0[z] = (om[k] + lift) as i32;
    }
    if (0..sig.len()).any(|i| m.exp(i) > max_exp) {
        return None;
    }
    let rest = (target - sig.monomial_grading(&m)).ro2_part()?;
    let syms = CoeffSymbol::symbols_at(rest);
    let s = *syms.get(rng.gen_range(0..syms.len().max(1)))?;
    let n = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let c = CoeffElt::symbol(s).mul(&CoeffElt::from_int(n));
    (!c.is_zero()).then_some((m, c))
}

/// A random monomial with exponents at most `max_exp`.
pub fn random_monomial(rng: &mut impl Rng, pres: &Presentation, max_exp: i32) -> Monomial {
    let mut m = Monomial::one();
    for i in 0..pres.signature().len() {
        m.0[i] = rng.gen_range(0..=max_exp);
    }
    m
}

/// A nonzero homogeneous polynomial with up to `max_terms` terms, all
/// exponents at most `max_exp`.
pub fn random_homogeneous(rng: &mut impl Rng, pres: &Presentation, max_exp: i32, max_terms: usize) -> Poly<CoeffElt> {
    let sig = pres.signature();
    let lead = random_monomial(rng, pres, max_exp);
    let target = sig.monomial_grading(&lead);
    let mut p = Poly::monomial(sig, lead, CoeffElt::from_int(rng.gen_range(1..=3)));
    let want = rng.gen_range(1..=max_terms);
    let mut tries = 0;
    while p.len() < want && tries < 40 {
        tries += 1;
        if let Some((m, c)) = term_in(rng, pres, target, max_exp) {
            p.add_term(m, c);
        }
    }
    if p.is_zero() {
        Poly::monomial(sig, lead, CoeffElt::from_int(1))
    } else {
        p
    }
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn rank(rows: &[Vec<i128>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let n_rows = a.len();
    let n_cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..n_cols {
        let Some(p) = (r..n_rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in r + 1..n_rows {
            for j in c + 1..n_cols {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        r += 1;
        if r == n_rows {
            break;
        }
    }
    r
}

/// Determinant of a square integer matrix (Bareiss).
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}
