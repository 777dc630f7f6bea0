use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grading::Grading;

pub const MAX_GENERATORS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub grading: Grading,
    pub invertible: bool,
}

impl Generator {
    pub fn new(name: &str, grading: Grading) -> Self {
        Generator { name: name.to_string(), grading, invertible: false }
    }

    pub fn invertible(name: &str, grading: Grading) -> Self {
        Generator { name: name.to_string(), grading, invertible: true }
    }
}

/// Weighted order on monomials: total weight first, ties broken
/// lexicographically with later generators more significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    weights: Vec<i64>,
}

impl MonomialOrder {
    pub fn new(weights: Vec<i64>) -> Self {
        MonomialOrder { weights }
    }

    pub fn weight(&self, m: &Monomial) -> i64 {
        self.weights.iter().zip(m.0.iter()).map(|(w, e)| w * *e as i64).sum()
    }

    pub fn cmp(&self, x: &Monomial, y: &Monomial) -> Ordering {
        self.weight(x).cmp(&self.weight(y)).then_with(|| {
            for i in (0..self.weights.len()).rev() {
                match x.0[i].cmp(&y.0[i]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    /// A key whose derived order agrees with [`MonomialOrder::cmp`].
    pub fn key(&self, m: &Monomial) -> (i64, [i32; MAX_GENERATORS]) {
        let mut rev = [0; MAX_GENERATORS];
        let n = self.weights.len();
        for (r, e) in rev.iter_mut().zip(m.0[..n].iter().rev()) {
            *r = *e;
        }
        (self.weight(m), rev)
    }
}

/// Generators of a polynomial ring, with their gradings.
#[derive(Debug, PartialEq, Eq)]
pub struct Signature {
    name: String,
    generators: Vec<Generator>,
    rank: usize,
    order: MonomialOrder,
}

impl Signature {
    /// Build a signature ordered by the given weights.
    pub fn new(name: &str, generators: Vec<Generator>, weights: Vec<i64>) -> Arc<Self> {
        assert!(generators.len() <= MAX_GENERATORS, "too many generators");
        assert_eq!(generators.len(), weights.len());
        let rank = generators.first().map(|g| g.grading.rank()).unwrap_or(1);
        assert!(generators.iter().all(|g| g.grading.rank() == rank));
        Arc::new(Signature {
            name: name.to_string(),
            generators,
            rank,
            order: MonomialOrder::new(weights),
        })
    }

    /// Signature ordered by plain degree-lex (all weights one).
    pub fn unweighted(name: &str, generators: Vec<Generator>) -> Arc<Self> {
        let n = generators.len();
        Self::new(name, generators, vec![1; n])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Number of fixed components in the grading group.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    /// Monomial from `(generator name, exponent)` pairs.
    pub fn monomial(&self, exps: &[(&str, i32)]) -> Result<Monomial> {
        let mut m = Monomial::one();
        for (name, e) in exps {
            let i = self.index(name)?;
            if *e < 0 && !self.generators[i].invertible {
                return Err(Error::NotInvertible(name.to_string()));
            }
            m.0[i] += e;
        }
        Ok(m)
    }

    pub fn monomial_grading(&self, m: &Monomial) -> Grading {
        self.generators
            .iter()
            .zip(m.0.iter())
            .fold(Grading::zero(self.rank), |acc, (g, e)| acc + (*e as i64) * g.grading)
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = self
            .generators
            .iter()
            .zip(m.0.iter())
            .filter(|(_, e)| **e != 0)
            .map(|(g, e)| if *e == 1 { g.name.clone() } else { format!("{}^{}", g.name, e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Exponent vector over a [`Signature`]. Unused slots stay zero.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [i32; MAX_GENERATORS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_GENERATORS])
    }

    pub fn from_exps(exps: &[i32]) -> Self {
        let mut m = Self::one();
        m.0[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn exp(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (x, y) in r.0.iter_mut().zip(o.0.iter()) {
            *x += y;
        }
        r
    }

    /// `self / d` if every exponent of `d` is at most the matching one here.
    pub fn div(&self, d: &Monomial) -> Option<Monomial> {
        let mut r = *self;
        for (x, y) in r.0.iter_mut().zip(d.0.iter()) {
            if *x < *y {
                return None;
            }
            *x -= y;
        }
        Some(r)
    }

    pub fn divides(&self, m: &Monomial) -> bool {
        m.div(self).is_some()
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (x, y) in r.0.iter_mut().zip(o.0.iter()) {
            *x = (*x).min(*y);
        }
        r
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (x, y) in r.0.iter_mut().zip(o.0.iter()) {
            *x = (*x).max(*y);
        }
        r
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|e| *e as i64).sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_weight_then_reverse_lex() {
        let ord = MonomialOrder::new(vec![1, 1, 2]);
        let a = Monomial::from_exps(&[2, 0, 0]);
        let b = Monomial::from_exps(&[0, 2, 0]);
        let c = Monomial::from_exps(&[0, 0, 1]);
        assert_eq!(ord.cmp(&a, &b), Ordering::Less);
        assert_eq!(ord.cmp(&b, &c), Ordering::Less);
        assert_eq!(ord.cmp(&a, &a), Ordering::Equal);
        assert!(ord.key(&a) < ord.key(&b));
        assert!(ord.key(&b) < ord.key(&c));
    }

    #[test]
    fn divisibility() {
        let a = Monomial::from_exps(&[2, 1]);
        let b = Monomial::from_exps(&[1, 1]);
        assert_eq!(a.div(&b), Some(Monomial::from_exps(&[1, 0])));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.gcd(&Monomial::from_exps(&[0, 3])), Monomial::from_exps(&[0, 1]));
        assert_eq!(a.lcm(&Monomial::from_exps(&[0, 3])), Monomial::from_exps(&[2, 3]));
    }
}
