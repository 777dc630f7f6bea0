//! Workloads shared by the benchmarks.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use bu2_core::presentation::Presentation;
use bu2_core::{CoeffElt, Monomial, Poly, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A monomial with every exponent in `0..=max_exp`.
pub fn random_monomial(rng: &mut impl Rng, pres: &Presentation, max_exp: i32) -> Monomial {
    let mut m = Monomial::one();
    for i in 0..pres.signature().len() {
        m.0[i] = rng.gen_range(0..=max_exp);
    }
    m
}

/// A sum of `terms` random monomials with small integer coefficients,
/// not reduced and not necessarily homogeneous.
pub fn random_poly(rng: &mut impl Rng, pres: &Presentation, max_exp: i32, terms: usize) -> Poly<CoeffElt> {
    let mut p = Poly::zero(pres.signature());
    for _ in 0..terms {
        let c = CoeffElt::from_int(rng.gen_range(1..=5));
        p.add_term(random_monomial(rng, pres, max_exp), c);
    }
    p
}

/// `count` polynomials from a fixed seed, so runs are comparable.
pub fn workload(pres: &Presentation, seed: u64, count: usize, max_exp: i32, terms: usize) -> Vec<Poly<CoeffElt>> {
    let mut r = rng(seed);
    (0..count).map(|_| random_poly(&mut r, pres, max_exp, terms)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use bu2_core::presentation::bu2;

    #[test]
    fn workloads_are_reproducible() {
        let a = workload(bu2(), 3, 5, 3, 4);
        let b = workload(bu2(), 3, 5, 3, 4);
        assert_eq!(a, b);
        assert!(a.iter().all(|p| !p.is_zero()));
    }
}
