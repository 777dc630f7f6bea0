//! Symbolic engine for the C2-equivariant cohomology ring of BU(2).
//!
//! The ring is presented over the coefficient ring of a point (see [`coeff`])
//! by seven generators and six rewriting rules ([`presentation`]). On top of
//! the normal form the crate builds the restriction maps to fixed points and
//! to nonequivariant cohomology ([`maps`]), the degree-zero unit group
//! ([`units`]) and characteristic numbers of small test manifolds
//! ([`charnum`]).

pub mod charnum;
pub mod coeff;
pub mod error;
pub mod grading;
pub mod maps;
pub mod parse;
pub mod presentation;
pub mod rewrite;
pub mod ring;
pub mod units;
pub mod verify;

pub use coeff::{CoeffElt, CoeffSymbol, FixedScalar, NoneqScalar, Ro2Grading, Scalar};
pub use error::{Error, Result};
pub use grading::Grading;
pub use ring::{Monomial, Poly, Signature, Triple};
