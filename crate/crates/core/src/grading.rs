//! Gradings in `RO(Pi B)`: integer combinations of `1`, `sigma` and the
//! classes `O0, .., O{n-1}` of the fixed components, modulo the relation
//! `O0 + .. + O{n-1} = 2 sigma - 2`.
//!
//! BU(2) uses three components and BU(1) two. A [`Grading`] is always kept in
//! the canonical representative whose last omega coefficient is zero, so the
//! derived equality is equality in the quotient group.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::coeff::Ro2Grading;
use crate::error::{Error, Result};

pub const MAX_COMPONENTS: usize = 3;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Grading {
    a: i64,
    b: i64,
    omega: [i64; MAX_COMPONENTS],
    rank: u8,
}

impl Grading {
    /// `a + b*sigma + sum omega[i]*Oi`, with `omega.len()` fixed components.
    pub fn new(a: i64, b: i64, omega: &[i64]) -> Self {
        assert!(
            (1..=MAX_COMPONENTS).contains(&omega.len()),
            "unsupported number of components: {}",
            omega.len()
        );
        let mut om = [0; MAX_COMPONENTS];
        om[..omega.len()].copy_from_slice(omega);
        Grading { a, b, omega: om, rank: omega.len() as u8 }.canonical()
    }

    pub fn bu2(a: i64, b: i64, m0: i64, m1: i64, m2: i64) -> Self {
        Self::new(a, b, &[m0, m1, m2])
    }

    pub fn bu1(a: i64, b: i64, m0: i64, m1: i64) -> Self {
        Self::new(a, b, &[m0, m1])
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(0, 0, &vec![0; rank])
    }

    /// The class `Oi` itself.
    pub fn omega_unit(rank: usize, i: usize) -> Self {
        let mut om = vec![0; rank];
        om[i] = 1;
        Self::new(0, 0, &om)
    }

    pub fn from_ro2(rank: usize, g: Ro2Grading) -> Self {
        Self::new(g.a, g.b, &vec![0; rank])
    }

    fn canonical(self) -> Self {
        let n = self.rank as usize;
        let k = self.omega[n - 1];
        self.shift(k)
    }

    /// Add `-k` times the relation vector `(2, -2, 1, .., 1)`.
    fn shift(mut self, k: i64) -> Self {
        let n = self.rank as usize;
        self.a -= 2 * k;
        self.b += 2 * k;
        for m in &mut self.omega[..n] {
            *m -= k;
        }
        self
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    /// Omega coefficients of the canonical representative.
    pub fn omega(&self) -> &[i64] {
        &self.omega[..self.rank as usize]
    }

    /// Representative with all omega coefficients nonnegative and the
    /// smallest one zero, returned as `(a, b, omega)`.
    pub fn natural(&self) -> (i64, i64, Vec<i64>) {
        let t = *self.omega().iter().min().expect("rank >= 1");
        let s = self.shift(t);
        (s.a, s.b, s.omega().to_vec())
    }

    /// The RO(C2) part, if the omega part vanishes.
    pub fn ro2_part(&self) -> Option<Ro2Grading> {
        self.omega().iter().all(|m| *m == 0).then(|| Ro2Grading::new(self.a, self.b))
    }

    /// Degree after restricting to the trivial group.
    pub fn rho_degree(&self) -> i64 {
        self.a + self.b
    }

    /// Integer degree of the fixed-point restriction to each component.
    pub fn phi_degree(&self) -> Vec<i64> {
        self.omega().iter().map(|m| self.a - 2 * m).collect()
    }

    pub fn is_even(&self) -> bool {
        self.a % 2 == 0 && self.b % 2 == 0
    }

    pub fn add_ro2(&self, g: Ro2Grading) -> Self {
        *self + Grading::from_ro2(self.rank(), g)
    }

    fn check_rank(&self, other: &Grading) {
        assert_eq!(self.rank, other.rank, "gradings with different numbers of components");
    }
}

impl Add for Grading {
    type Output = Grading;
    fn add(self, o: Grading) -> Grading {
        self.check_rank(&o);
        let om: Vec<i64> = self.omega().iter().zip(o.omega()).map(|(x, y)| x + y).collect();
        Grading::new(self.a + o.a, self.b + o.b, &om)
    }
}

impl Neg for Grading {
    type Output = Grading;
    fn neg(self) -> Grading {
        let om: Vec<i64> = self.omega().iter().map(|x| -x).collect();
        Grading::new(-self.a, -self.b, &om)
    }
}

impl Sub for Grading {
    type Output = Grading;
    fn sub(self, o: Grading) -> Grading {
        self + (-o)
    }
}

impl Mul<Grading> for i64 {
    type Output = Grading;
    fn mul(self, g: Grading) -> Grading {
        let om: Vec<i64> = g.omega().iter().map(|x| self * x).collect();
        Grading::new(self * g.a, self * g.b, &om)
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, om) = self.natural();
        let mut parts: Vec<(i64, String)> = Vec::new();
        if a != 0 {
            parts.push((a, String::new()));
        }
        if b != 0 {
            parts.push((b, "s".into()));
        }
        for (i, m) in om.iter().enumerate() {
            if *m != 0 {
                parts.push((*m, format!("O{i}")));
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        for (idx, (c, name)) in parts.iter().enumerate() {
            let mag = c.unsigned_abs();
            if idx == 0 {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if *c < 0 { '-' } else { '+' })?;
            }
            match (mag, name.is_empty()) {
                (m, true) => write!(f, "{m}")?,
                (1, false) => write!(f, "{name}")?,
                (m, false) => write!(f, "{m}{name}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Grading {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A group homomorphism between grading groups, given by the images of the
/// omega classes. `1` and `sigma` map to themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingMap {
    images: Vec<Grading>,
}

impl GradingMap {
    pub fn new(images: Vec<Grading>) -> Result<Self> {
        let first = images.first().ok_or_else(|| Error::Fixture("empty grading map".into()))?;
        let rank = first.rank();
        if images.iter().any(|g| g.rank() != rank) {
            return Err(Error::Fixture("grading map images of mixed rank".into()));
        }
        let sum = images.iter().fold(Grading::zero(rank), |acc, g| acc + *g);
        let rel = Grading::from_ro2(rank, Ro2Grading::new(-2, 2));
        if sum != rel {
            return Err(Error::Fixture(format!(
                "grading map does not respect the omega relation: images sum to {sum}"
            )));
        }
        Ok(GradingMap { images })
    }

    pub fn identity(rank: usize) -> Self {
        GradingMap { images: (0..rank).map(|i| Grading::omega_unit(rank, i)).collect() }
    }

    pub fn source_rank(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, g: &Grading) -> Grading {
        assert_eq!(g.rank(), self.images.len(), "grading map applied to wrong rank");
        let rank = self.images[0].rank();
        g.omega()
            .iter()
            .zip(&self.images)
            .fold(Grading::from_ro2(rank, Ro2Grading::new(g.a(), g.b())), |acc, (m, img)| {
                acc + *m * *img
            })
    }
}
