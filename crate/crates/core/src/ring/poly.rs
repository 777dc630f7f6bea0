use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::grading::Grading;

use super::signature::{Monomial, Signature};

/// Elements that carry a grading.
pub trait GradedElem {
    /// Common grading of all terms; `None` for zero.
    fn grading(&self) -> Result<Option<Grading>>;
}

/// A finite sum `sum c_m * m` of Laurent monomials over `sig` with
/// coefficients in `S`. Zero coefficients are never stored.
#[derive(Clone)]
pub struct Poly<S: Scalar> {
    sig: Arc<Signature>,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero(sig: &Arc<Signature>) -> Self {
        Poly { sig: sig.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(sig: &Arc<Signature>, c: S) -> Self {
        Self::monomial(sig, Monomial::one(), c)
    }

    pub fn one(sig: &Arc<Signature>) -> Self {
        Self::constant(sig, S::one())
    }

    pub fn int(sig: &Arc<Signature>, n: i64) -> Self {
        Self::constant(sig, S::from_int(n))
    }

    pub fn monomial(sig: &Arc<Signature>, m: Monomial, c: S) -> Self {
        let mut p = Self::zero(sig);
        p.add_term(m, c);
        p
    }

    /// The generator called `name`, to the first power.
    pub fn generator(sig: &Arc<Signature>, name: &str) -> Result<Self> {
        let m = sig.monomial(&[(name, 1)])?;
        Ok(Self::monomial(sig, m, S::one()))
    }

    pub fn from_terms(sig: &Arc<Signature>, it: impl IntoIterator<Item = (Monomial, S)>) -> Self {
        let mut p = Self::zero(sig);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, S> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// Terms sorted from largest to smallest in the signature's order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &S)> {
        let ord = self.sig.order();
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(x, _), (y, _)| ord.cmp(y, x));
        v
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn same_signature(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.sig, &other.sig) || *self.sig == *other.sig
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.same_signature(other) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                left: self.sig.name().to_string(),
                right: other.sig.name().to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = Self::zero(&self.sig);
        for (m, c) in self.terms() {
            for (n, d) in other.terms() {
                out.add_term(m.mul(n), c.mul(d));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_terms(&self.sig, self.terms().map(|(m, c)| (*m, c.mul(s))))
    }

    pub fn mul_term(&self, mono: &Monomial, s: &S) -> Self {
        Self::from_terms(&self.sig, self.terms().map(|(m, c)| (m.mul(mono), c.mul(s))))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.sig);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The constant coefficient, if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Apply `f` to every coefficient and move to the signature `sig`.
    pub fn map_scalars<T: Scalar>(&self, sig: &Arc<Signature>, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::from_terms(sig, self.terms().map(|(m, c)| (*m, f(c))))
    }

    /// Sum of `coeff * monomial` with the same monomials replaced by `f(m)`.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        Self::from_terms(&self.sig, self.terms().map(|(m, c)| (f(m), c.clone())))
    }

    /// Gradings of the individual nonzero terms.
    pub fn term_gradings(&self) -> Vec<Grading> {
        let mut out = Vec::new();
        for (m, c) in self.terms() {
            let base = self.sig.monomial_grading(m);
            for g in c.gradings() {
                out.push(base.add_ro2(g));
            }
        }
        out
    }
}

impl<S: Scalar> GradedElem for Poly<S> {
    fn grading(&self) -> Result<Option<Grading>> {
        let gs = self.term_gradings();
        match gs.first() {
            None => Ok(None),
            Some(g) if gs.iter().all(|h| h == g) => Ok(Some(*g)),
            Some(_) => Err(Error::NotHomogeneous(self.to_string())),
        }
    }
}

impl<S: Scalar> PartialEq for Poly<S> {
    fn eq(&self, other: &Self) -> bool {
        self.same_signature(other) && self.terms == other.terms
    }
}

impl<S: Scalar> Eq for Poly<S> {}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.sig.name(), self)
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let mono = self.sig.fmt_monomial(m);
            let (neg, coeff) = if c.term_count() > 1 {
                (false, format!("({c})"))
            } else {
                let s = c.to_string();
                match s.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, s),
                }
            };
            let body = match (coeff.as_str(), m.is_one()) {
                (c, true) => c.to_string(),
                ("1", false) => mono,
                (c, false) => format!("{c}*{mono}"),
            };
            match (i, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

fn expect<T>(r: Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("{e}"))
}

impl<S: Scalar> Add for &Poly<S> {
    type Output = Poly<S>;
    fn add(self, o: &Poly<S>) -> Poly<S> {
        expect(self.try_add(o))
    }
}

impl<S: Scalar> Add for Poly<S> {
    type Output = Poly<S>;
    fn add(self, o: Poly<S>) -> Poly<S> {
        &self + &o
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        self.scale(&S::from_int(-1))
    }
}

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        -&self
    }
}

impl<S: Scalar> Sub for &Poly<S> {
    type Output = Poly<S>;
    fn sub(self, o: &Poly<S>) -> Poly<S> {
        self + &(-o)
    }
}

impl<S: Scalar> Sub for Poly<S> {
    type Output = Poly<S>;
    fn sub(self, o: Poly<S>) -> Poly<S> {
        &self - &o
    }
}

impl<S: Scalar> Mul for &Poly<S> {
    type Output = Poly<S>;
    fn mul(self, o: &Poly<S>) -> Poly<S> {
        expect(self.try_mul(o))
    }
}

impl<S: Scalar> Mul for Poly<S> {
    type Output = Poly<S>;
    fn mul(self, o: Poly<S>) -> Poly<S> {
        &self * &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffElt;
    use crate::ring::Generator;

    fn sig() -> Arc<Signature> {
        Signature::unweighted(
            "t",
            vec![
                Generator::new("u", Grading::bu1(0, 0, 1, 0)),
                Generator::invertible("v", Grading::bu1(0, 0, 0, 1)),
            ],
        )
    }

    #[test]
    fn arithmetic_and_display() {
        let s = sig();
        let u: Poly<CoeffElt> = Poly::generator(&s, "u").unwrap();
        let v: Poly<CoeffElt> = Poly::generator(&s, "v").unwrap();
        let p = &(&u * &v) - &Poly::int(&s, 2);
        assert_eq!(p.to_string(), "u*v - 2");
        assert!((&p - &p).is_zero());
        let k = Poly::constant(&s, CoeffElt::kappa());
        assert_eq!((&k * &u).to_string(), "(2 - g)*u");
    }

    #[test]
    fn gradings() {
        let s = sig();
        let u: Poly<CoeffElt> = Poly::generator(&s, "u").unwrap();
        let v: Poly<CoeffElt> = Poly::generator(&s, "v").unwrap();
        let uv = &u * &v;
        let xi = Poly::constant(&s, CoeffElt::xi_pow(1));
        // u*v sits in O0 + O1 = 2s - 2, the grading of xi.
        assert_eq!(uv.grading().unwrap(), xi.grading().unwrap());
        assert!((&uv + &xi).grading().is_ok());
        assert!((&u + &v).grading().is_err());
        assert_eq!(Poly::<CoeffElt>::zero(&s).grading().unwrap(), None);
    }

    #[test]
    fn signature_mismatch() {
        let a: Poly<i64> = Poly::one(&sig());
        let b: Poly<i64> = Poly::one(&Signature::unweighted("other", vec![]));
        assert!(matches!(a.try_mul(&b), Err(Error::SignatureMismatch { .. })));
    }
}
