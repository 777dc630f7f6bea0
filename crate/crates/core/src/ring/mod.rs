//! Laurent polynomial rings over a [`Scalar`](crate::coeff::Scalar) ring and
//! homomorphisms out of them.

mod map;
mod poly;
mod signature;
mod triple;

pub use map::{Normalizer, PolyRing, ProductFacts, RingMap, TargetRing, Truncation, TripleRing};
pub use poly::{GradedElem, Poly};
pub use signature::{Generator, Monomial, MonomialOrder, Signature, MAX_GENERATORS};
pub use triple::Triple;
