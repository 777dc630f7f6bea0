use std::fmt;
use std::sync::Arc;

use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::grading::Grading;

use super::poly::{GradedElem, Poly};
use super::signature::Signature;

/// An element of a direct sum of three polynomial rings, one per fixed
/// component.
#[derive(Clone, PartialEq, Eq)]
pub struct Triple<S: Scalar>(pub [Poly<S>; 3]);

impl<S: Scalar> Triple<S> {
    pub fn zero(comps: &[Arc<Signature>; 3]) -> Self {
        Triple([Poly::zero(&comps[0]), Poly::zero(&comps[1]), Poly::zero(&comps[2])])
    }

    /// The diagonal element `(c, c, c)`.
    pub fn constant(comps: &[Arc<Signature>; 3], c: &S) -> Self {
        Triple([
            Poly::constant(&comps[0], c.clone()),
            Poly::constant(&comps[1], c.clone()),
            Poly::constant(&comps[2], c.clone()),
        ])
    }

    pub fn comp(&self, i: usize) -> &Poly<S> {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Poly::is_zero)
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        Ok(Triple([
            self.0[0].try_add(&o.0[0])?,
            self.0[1].try_add(&o.0[1])?,
            self.0[2].try_add(&o.0[2])?,
        ]))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        Ok(Triple([
            self.0[0].try_mul(&o.0[0])?,
            self.0[1].try_mul(&o.0[1])?,
            self.0[2].try_mul(&o.0[2])?,
        ]))
    }

    pub fn neg(&self) -> Self {
        Triple([-&self.0[0], -&self.0[1], -&self.0[2]])
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&Poly<S>) -> Poly<T>) -> Triple<T> {
        Triple([f(&self.0[0]), f(&self.0[1]), f(&self.0[2])])
    }
}

impl<S: Scalar> GradedElem for Triple<S> {
    fn grading(&self) -> Result<Option<Grading>> {
        let mut found: Option<Grading> = None;
        for p in &self.0 {
            if let Some(g) = p.grading()? {
                match found {
                    Some(h) if h != g => return Err(Error::NotHomogeneous(self.to_string())),
                    _ => found = Some(g),
                }
            }
        }
        Ok(found)
    }
}

impl<S: Scalar> fmt::Display for Triple<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl<S: Scalar> fmt::Debug for Triple<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Triple{self}")
    }
}
