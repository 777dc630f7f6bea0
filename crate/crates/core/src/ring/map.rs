use std::collections::HashMap;
use std::fmt;
use std::marker::PhantomData;
use std::sync::Arc;

use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::grading::GradingMap;

use super::poly::{GradedElem, Poly};
use super::signature::{Monomial, Signature};
use super::triple::Triple;

/// A commutative ring that ring maps can land in.
pub trait TargetRing {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;
    fn normalize(&self, x: Self::Elem) -> Self::Elem;
}

/// Reduction to a canonical representative in a quotient of a polynomial ring.
pub trait Normalizer<S: Scalar>: Send + Sync {
    fn normalize(&self, p: Poly<S>) -> Poly<S>;

    /// A known product that should replace the formal one, if any.
    fn product(&self, _x: &Poly<S>, _y: &Poly<S>) -> Option<Poly<S>> {
        None
    }
}

/// Quotient by `gen^power`.
pub struct Truncation {
    pub generator: usize,
    pub power: i32,
}

impl<S: Scalar> Normalizer<S> for Truncation {
    fn normalize(&self, p: Poly<S>) -> Poly<S> {
        let sig = p.signature().clone();
        Poly::from_terms(
            &sig,
            p.into_terms().into_iter().filter(|(m, _)| m.exp(self.generator) < self.power),
        )
    }
}

/// No relations except a finite list of recorded products `x * y = z`.
///
/// Used for rings only known through a few facts: every other product is
/// kept formal, and later evaluation rejects anything it does not recognise.
pub struct ProductFacts<S: Scalar> {
    pub facts: Vec<(Poly<S>, Poly<S>, Poly<S>)>,
}

impl<S: Scalar> Normalizer<S> for ProductFacts<S> {
    fn normalize(&self, p: Poly<S>) -> Poly<S> {
        p
    }

    fn product(&self, x: &Poly<S>, y: &Poly<S>) -> Option<Poly<S>> {
        self.facts
            .iter()
            .find(|(a, b, _)| (a == x && b == y) || (a == y && b == x))
            .map(|(_, _, z)| z.clone())
    }
}

/// A polynomial ring over `S`, optionally reduced by a [`Normalizer`].
#[derive(Clone)]
pub struct PolyRing<S: Scalar> {
    sig: Arc<Signature>,
    normalizer: Option<Arc<dyn Normalizer<S>>>,
}

impl<S: Scalar> PolyRing<S> {
    pub fn free(sig: &Arc<Signature>) -> Self {
        PolyRing { sig: sig.clone(), normalizer: None }
    }

    pub fn quotient(sig: &Arc<Signature>, n: Arc<dyn Normalizer<S>>) -> Self {
        PolyRing { sig: sig.clone(), normalizer: Some(n) }
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }
}

impl<S: Scalar> TargetRing for PolyRing<S> {
    type Elem = Poly<S>;

    fn zero(&self) -> Poly<S> {
        Poly::zero(&self.sig)
    }

    fn one(&self) -> Poly<S> {
        Poly::one(&self.sig)
    }

    fn add(&self, x: &Poly<S>, y: &Poly<S>) -> Result<Poly<S>> {
        x.try_add(y)
    }

    fn mul(&self, x: &Poly<S>, y: &Poly<S>) -> Result<Poly<S>> {
        if let Some(n) = &self.normalizer {
            if let Some(z) = n.product(x, y) {
                return Ok(z);
            }
        }
        Ok(self.normalize(x.try_mul(y)?))
    }

    fn normalize(&self, x: Poly<S>) -> Poly<S> {
        match &self.normalizer {
            Some(n) => n.normalize(x),
            None => x,
        }
    }
}

/// Direct sum of three free polynomial rings.
pub struct TripleRing<S: Scalar> {
    pub comps: [Arc<Signature>; 3],
    _scalar: PhantomData<S>,
}

impl<S: Scalar> TripleRing<S> {
    pub fn new(comps: [Arc<Signature>; 3]) -> Self {
        TripleRing { comps, _scalar: PhantomData }
    }
}

impl<S: Scalar> Clone for TripleRing<S> {
    fn clone(&self) -> Self {
        TripleRing::new(self.comps.clone())
    }
}

impl<S: Scalar> TargetRing for TripleRing<S> {
    type Elem = Triple<S>;

    fn zero(&self) -> Triple<S> {
        Triple::zero(&self.comps)
    }

    fn one(&self) -> Triple<S> {
        Triple::constant(&self.comps, &S::one())
    }

    fn add(&self, x: &Triple<S>, y: &Triple<S>) -> Result<Triple<S>> {
        x.try_add(y)
    }

    fn mul(&self, x: &Triple<S>, y: &Triple<S>) -> Result<Triple<S>> {
        x.try_mul(y)
    }

    fn normalize(&self, x: Triple<S>) -> Triple<S> {
        x
    }
}

type ScalarFn<S, E> = Arc<dyn Fn(&S) -> E + Send + Sync>;

/// A ring homomorphism out of a Laurent polynomial ring, determined by a map
/// on scalars and the images of the generators.
#[derive(Clone)]
pub struct RingMap<S: Scalar, T: TargetRing> {
    name: String,
    source: Arc<Signature>,
    target: T,
    scalar_map: ScalarFn<S, T::Elem>,
    images: Vec<Option<T::Elem>>,
    inverses: Vec<Option<T::Elem>>,
}

impl<S: Scalar, T: TargetRing> RingMap<S, T> {
    pub fn new(
        name: &str,
        source: &Arc<Signature>,
        target: T,
        scalar_map: impl Fn(&S) -> T::Elem + Send + Sync + 'static,
    ) -> Self {
        let n = source.len();
        RingMap {
            name: name.to_string(),
            source: source.clone(),
            target,
            scalar_map: Arc::new(scalar_map),
            images: vec![None; n],
            inverses: vec![None; n],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<Signature> {
        &self.source
    }

    pub fn target(&self) -> &T {
        &self.target
    }

    pub fn set_image(&mut self, generator: &str, img: T::Elem) -> Result<()> {
        let i = self.source.index(generator)?;
        self.images[i] = Some(img);
        Ok(())
    }

    /// Image of `generator^-1`, for invertible generators.
    pub fn set_inverse_image(&mut self, generator: &str, img: T::Elem) -> Result<()> {
        let i = self.source.index(generator)?;
        if !self.source.generators()[i].invertible {
            return Err(Error::NotInvertible(generator.to_string()));
        }
        self.inverses[i] = Some(img);
        Ok(())
    }

    pub fn image(&self, generator: &str) -> Option<&T::Elem> {
        self.source.index_of(generator).and_then(|i| self.images[i].as_ref())
    }

    fn power(&self, i: usize, e: i32, cache: &mut HashMap<(usize, i32), T::Elem>) -> Result<T::Elem> {
        if let Some(v) = cache.get(&(i, e)) {
            return Ok(v.clone());
        }
        let table = if e > 0 { &self.images } else { &self.inverses };
        let base = table[i].as_ref().ok_or_else(|| {
            let g = &self.source.generators()[i].name;
            let what = if e > 0 { g.clone() } else { format!("{g}^-1") };
            Error::Unsupported(format!("{} has no image for `{what}`", self.name))
        })?;
        let mut acc = base.clone();
        for _ in 1..e.unsigned_abs() {
            acc = self.target.mul(&acc, base)?;
        }
        cache.insert((i, e), acc.clone());
        Ok(acc)
    }

    pub fn apply_monomial(&self, m: &Monomial, c: &S) -> Result<T::Elem> {
        let mut cache = HashMap::new();
        self.apply_term(m, c, &mut cache)
    }

    fn apply_term(
        &self,
        m: &Monomial,
        c: &S,
        cache: &mut HashMap<(usize, i32), T::Elem>,
    ) -> Result<T::Elem> {
        let mut acc = (self.scalar_map)(c);
        for i in 0..self.source.len() {
            let e = m.exp(i);
            if e != 0 {
                let pw = self.power(i, e, cache)?;
                acc = self.target.mul(&acc, &pw)?;
            }
        }
        Ok(acc)
    }

    pub fn apply(&self, p: &Poly<S>) -> Result<T::Elem> {
        if !Arc::ptr_eq(p.signature(), &self.source) && **p.signature() != *self.source {
            return Err(Error::SignatureMismatch {
                left: p.signature().name().to_string(),
                right: self.source.name().to_string(),
            });
        }
        let mut cache = HashMap::new();
        let mut sum = self.target.zero();
        for (m, c) in p.terms() {
            let t = self.apply_term(m, c, &mut cache)?;
            sum = self.target.add(&sum, &t)?;
        }
        Ok(self.target.normalize(sum))
    }
}

impl<S: Scalar, T: TargetRing> RingMap<S, T>
where
    T::Elem: GradedElem,
{
    /// Check that every known generator image sits in the grading predicted
    /// by `gm`.
    pub fn check_gradings(&self, gm: &GradingMap) -> Result<()> {
        let gens = self.source.generators();
        for (i, g) in gens.iter().enumerate() {
            let expected = gm.apply(&g.grading);
            for (img, sign) in [(&self.images[i], 1), (&self.inverses[i], -1)] {
                let Some(img) = img else { continue };
                let want = if sign > 0 { expected } else { -expected };
                if let Some(found) = img.grading()? {
                    if found != want {
                        return Err(Error::GradingMismatch {
                            expected: format!("{want} for image of {}", g.name),
                            found: found.to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::Grading;
    use crate::ring::Generator;

    #[test]
    fn truncation_and_maps() {
        let src = Signature::unweighted("src", vec![Generator::new("t", Grading::zero(2))]);
        let dst = Signature::unweighted("dst", vec![Generator::new("u", Grading::zero(2))]);
        let ring = PolyRing::quotient(&dst, Arc::new(Truncation { generator: 0, power: 3 }));
        let dst2 = dst.clone();
        let mut f: RingMap<i64, PolyRing<i64>> =
            RingMap::new("f", &src, ring, move |c| Poly::int(&dst2, *c));
        let u: Poly<i64> = Poly::generator(&dst, "u").unwrap();
        f.set_image("t", &u + &Poly::one(&dst)).unwrap();
        let t: Poly<i64> = Poly::generator(&src, "t").unwrap();
        // (1 + u)^3 = 1 + 3u + 3u^2 mod u^3
        let img = f.apply(&t.pow(3)).unwrap();
        assert_eq!(img.to_string(), "3*u^2 + 3*u + 1");
    }

    #[test]
    fn missing_image_is_unsupported() {
        let src = Signature::unweighted("src", vec![Generator::new("t", Grading::zero(2))]);
        let dst = Signature::unweighted("dst", vec![]);
        let d = dst.clone();
        let f: RingMap<i64, PolyRing<i64>> =
            RingMap::new("f", &src, PolyRing::free(&dst), move |c| Poly::int(&d, *c));
        let t: Poly<i64> = Poly::generator(&src, "t").unwrap();
        assert!(matches!(f.apply(&t), Err(Error::Unsupported(_))));
    }
}
