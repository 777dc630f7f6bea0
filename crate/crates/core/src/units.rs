//! The ring in grading zero and its units.
//!
//! Grading zero is free of rank four over the integers, with basis
//! `1, g, eps_l, eps_w` where `eps_l = e^-2 k z0 z2 cl` and
//! `eps_w = e^-4 k z0^2 z1 cw`. Each of `g`, `eps_l`, `eps_w` squares to twice
//! itself and the products of distinct ones vanish.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::coeff::{CoeffElt, CoeffSymbol, Scalar};
use crate::error::{Error, Result};
use crate::grading::GradingMap;
use crate::presentation::bu2;
use crate::ring::{GradedElem, Poly, PolyRing, RingMap};
use crate::verify::Certificate;

/// `a[0] + a[1] g + a[2] eps_l + a[3] eps_w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GradingZeroElt(pub [i64; 4]);

pub const EPS_LAMBDA: &str = "einv^2*k*z0*z2*cl";
pub const EPS_OMEGA: &str = "einv^4*k*z0^2*z1*cw";

impl GradingZeroElt {
    pub const ONE: GradingZeroElt = GradingZeroElt([1, 0, 0, 0]);

    /// Products use `x^2 = 2x` for the three idempotent-like basis elements
    /// and `xy = 0` between distinct ones.
    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = (self.0, o.0);
        let mut c = [a[0] * b[0], 0, 0, 0];
        for i in 1..4 {
            c[i] = a[0] * b[i] + a[i] * b[0] + 2 * a[i] * b[i];
        }
        GradingZeroElt(c)
    }

    pub fn neg(&self) -> Self {
        GradingZeroElt(self.0.map(|x| -x))
    }

    pub fn to_poly(&self) -> Poly<CoeffElt> {
        let p = bu2();
        let sig = p.signature();
        let parts = [
            Poly::int(sig, self.0[0]),
            Poly::constant(sig, CoeffElt::g().mul(&CoeffElt::from_int(self.0[1]))),
            p.parse(EPS_LAMBDA).expect("eps_l").scale(&CoeffElt::from_int(self.0[2])),
            p.parse(EPS_OMEGA).expect("eps_w").scale(&CoeffElt::from_int(self.0[3])),
        ];
        parts.iter().fold(Poly::zero(sig), |acc, x| &acc + x)
    }

    /// Read off the coordinates of a normal form in grading zero.
    pub fn from_poly(x: &Poly<CoeffElt>) -> Result<Self> {
        let p = bu2();
        let sig = p.signature();
        let x = p.normal_form(x);
        if let Some(g) = x.grading()? {
            if g.ro2_part() != Some(crate::coeff::Ro2Grading::ZERO) {
                return Err(Error::NotDegreeZero(x.to_string()));
            }
        }
        let lam = sig.monomial(&[("z0", 1), ("z2", 1), ("cl", 1)])?;
        let om = sig.monomial(&[("z0", 2), ("z1", 1), ("cw", 1)])?;
        let one = crate::ring::Monomial::one();
        let mut a = [0i64; 4];
        for (m, c) in x.terms() {
            let bad = || Error::NotDegreeZero(x.to_string());
            if *m == one {
                a[0] = c.coeff_of(CoeffSymbol::One);
                a[1] = c.coeff_of(CoeffSymbol::G);
                if c.term_count() != usize::from(a[0] != 0) + usize::from(a[1] != 0) {
                    return Err(bad());
                }
            } else if *m == lam || *m == om {
                let (i, sym) = if *m == lam { (2, 2) } else { (3, 4) };
                let k = c.coeff_of(CoeffSymbol::NegKappa { m: sym });
                if c.term_count() != 1 || k == 0 {
                    return Err(bad());
                }
                a[i] = k;
            } else {
                return Err(bad());
            }
        }
        Ok(GradingZeroElt(a))
    }

    /// Units are `±1` times products of the involutions `1 - k`, `1 - eps_l`,
    /// `1 - eps_w`; in coordinates, `a0 = ±1` and every other coordinate is
    /// `0` or `-a0`.
    pub fn is_unit(&self) -> bool {
        let a0 = self.0[0];
        a0.abs() == 1 && self.0[1..].iter().all(|x| *x == 0 || *x == -a0)
    }
}

impl fmt::Display for GradingZeroElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// The 16 units, as `±(1 - k)^a (1 - eps_l)^b (1 - eps_w)^c`.
pub fn unit_group() -> Vec<GradingZeroElt> {
    let one_minus_k = GradingZeroElt([-1, 1, 0, 0]);
    let one_minus_l = GradingZeroElt([1, 0, -1, 0]);
    let one_minus_w = GradingZeroElt([1, 0, 0, -1]);
    let mut out = Vec::new();
    for sign in [1, -1] {
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let mut u = GradingZeroElt([sign, 0, 0, 0]);
                    for (use_it, f) in [(a, one_minus_k), (b, one_minus_l), (c, one_minus_w)] {
                        if use_it == 1 {
                            u = u.mul(&f);
                        }
                    }
                    out.push(u);
                }
            }
        }
    }
    out
}

pub type DualMap = RingMap<CoeffElt, PolyRing<CoeffElt>>;

/// The automorphism induced by complex conjugation on the universal bundle.
pub fn dual_map() -> &'static DualMap {
    static M: OnceLock<DualMap> = OnceLock::new();
    M.get_or_init(|| {
        let p = bu2();
        let sig = p.signature().clone();
        let ring = PolyRing::quotient(&sig, Arc::new(p.system.clone()));
        let s2 = sig.clone();
        let mut m = RingMap::new("dual", &sig, ring, move |c: &CoeffElt| Poly::constant(&s2, c.clone()));
        let table = [
            ("z0", "z0".to_string()),
            ("z1", "z1".to_string()),
            ("z2", "z2".to_string()),
            ("cl", format!("-(1 - {EPS_LAMBDA})*cl")),
            ("cxl", format!("-(1 - k)*(1 - {EPS_LAMBDA})*cxl")),
            ("cw", format!("(1 - {EPS_LAMBDA})*cw")),
            ("cxw", format!("(1 - {EPS_LAMBDA})*cxw")),
        ];
        for (g, t) in table {
            m.set_image(g, p.parse(&t).expect("dual table")).expect("generator");
        }
        m
    })
}

pub fn dualize(x: &Poly<CoeffElt>) -> Result<Poly<CoeffElt>> {
    dual_map().apply(x)
}

/// Structure constants, the unit list and the dual relations.
pub fn verify_units() -> Certificate {
    let mut cert = Certificate::new("grading-zero units and duality");
    let p = bu2();
    let nf = |s: &str| p.parse(s).expect("fixed expression");
    let products = [
        ("eps_l^2 = 2 eps_l", format!("({EPS_LAMBDA})^2"), format!("2*{EPS_LAMBDA}")),
        ("eps_w^2 = 2 eps_w", format!("({EPS_OMEGA})^2"), format!("2*{EPS_OMEGA}")),
        ("eps_l eps_w = 0", format!("({EPS_LAMBDA})*({EPS_OMEGA})"), "0".into()),
        ("g eps_l = 0", format!("g*{EPS_LAMBDA}"), "0".into()),
        ("g eps_w = 0", format!("g*{EPS_OMEGA}"), "0".into()),
        ("(1 - k)^2 = 1", "(1 - k)^2".into(), "1".into()),
    ];
    for (name, lhs, rhs) in products {
        cert.check(name, &nf(&rhs), &nf(&lhs));
    }
    let units = unit_group();
    let distinct: std::collections::BTreeSet<_> = units.iter().collect();
    cert.check("sixteen distinct units", &16usize, &distinct.len());
    for u in &units {
        let inv_in_list = units.iter().any(|v| u.mul(v) == GradingZeroElt::ONE);
        let sq = GradingZeroElt::from_poly(&(&u.to_poly() * &u.to_poly()));
        cert.check(format!("{u} is a unit with inverse listed"), &true, &(u.is_unit() && inv_in_list));
        match sq {
            Ok(s) => cert.check(format!("({u})^2 via normal form"), &u.mul(u), &s),
            Err(e) => cert.fail(format!("({u})^2 via normal form"), u.mul(u), e),
        }
    }
    let dual_rels = [
        ("R1", "z0*z1*z2 - xi"),
        ("R2", "z1*cxl - (1 - k)*z0*z2*cl - e^2"),
        ("R4", "z2^2*cxw - (1 - k)*z0^2*cw - e^2*cxl"),
    ];
    for (rule, rel) in dual_rels {
        let name = format!("dual of {rule} vanishes");
        match parse_and_dualize(rel) {
            Ok(v) => cert.check(name, &Poly::zero(p.signature()), &v),
            Err(e) => cert.fail(name, 0, e),
        }
    }
    for g in ["cl", "cxl", "cw", "cxw"] {
        let name = format!("dual is an involution on {g}");
        let x = nf(g);
        match dualize(&x).and_then(|y| dualize(&y)) {
            Ok(v) => cert.check(name, &x, &v),
            Err(e) => cert.fail(name, &x, e),
        }
    }
    let from_duals = [
        ("eps_l from the dual class", EPS_LAMBDA, "einv^2*k*z0*z2"),
        ("eps_w from the dual class", EPS_OMEGA, "einv^4*k*z0^2*z1"),
    ];
    for (name, eps, factor) in from_duals {
        let (gen, want) = if eps == EPS_LAMBDA { ("cl", [0, 0, 1, 0]) } else { ("cw", [0, 0, 0, 1]) };
        let found = dualize(&nf(gen)).and_then(|d| GradingZeroElt::from_poly(&(&nf(factor) * &d)));
        let want = GradingZeroElt(want);
        match found {
            Ok(v) => cert.check(name, &want, &v),
            Err(e) => cert.fail(name, want, e),
        }
    }
    for u in &units {
        let x = u.to_poly();
        let name = format!("{u} restricts to a unit");
        let rho_ok = crate::maps::rho().apply(&x).map(|r| r.as_constant().and_then(|c| c.as_int()).is_some_and(|v| v.abs() == 1));
        let phi_ok = crate::maps::phi(&x).map(|t| {
            t.0.iter().all(|c| c.as_constant().and_then(|c| c.as_int()).is_some_and(|v| v.abs() == 1))
        });
        match rho_ok.and_then(|r| phi_ok.map(|f| r && f)) {
            Ok(b) => cert.check(name, &true, &b),
            Err(e) => cert.fail(name, true, e),
        }
    }
    match dualize(&nf("cl")).and_then(|d| crate::maps::rho().apply(&d)) {
        Ok(v) => {
            let want = crate::parse::parse_poly(crate::maps::noneq_signature(), "-z1*c1").expect("fixed expression");
            cert.check("rho of the dual of cl", &want, &v)
        }
        Err(e) => cert.fail("rho of the dual of cl", "-z1*c1", e),
    }
    match dual_map().check_gradings(&GradingMap::identity(3)) {
        Ok(()) => cert.check("dual images are homogeneous", &"ok", &"ok"),
        Err(e) => cert.fail("dual images are homogeneous", "ok", e),
    }
    cert
}

fn parse_and_dualize(text: &str) -> Result<Poly<CoeffElt>> {
    let x = crate::parse::parse_poly(bu2().signature(), text)?;
    dualize(&x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificate_passes() {
        let c = verify_units();
        assert!(c.passed(), "{c}");
    }

    #[test]
    fn one_minus_kappa_is_a_unit() {
        let u = GradingZeroElt::from_poly(&bu2().parse("1 - k").unwrap()).unwrap();
        assert_eq!(u, GradingZeroElt([-1, 1, 0, 0]));
        assert!(u.is_unit());
        assert!(!GradingZeroElt([1, 1, 0, 0]).is_unit());
    }

    // Oracle: a brute-force search over a box of coordinates for elements
    // with a two-sided inverse in the same box.
    #[test]
    fn exactly_sixteen_units_in_box() {
        let r = -3..=3i64;
        let mut box_elts = Vec::new();
        for a in r.clone() {
            for b in r.clone() {
                for c in r.clone() {
                    for d in r.clone() {
                        box_elts.push(GradingZeroElt([a, b, c, d]));
                    }
                }
            }
        }
        let invertible: Vec<_> = box_elts
            .iter()
            .filter(|x| box_elts.iter().any(|y| x.mul(y) == GradingZeroElt::ONE))
            .copied()
            .collect();
        let mut listed = unit_group();
        listed.sort();
        let mut found = invertible.clone();
        found.sort();
        assert_eq!(found, listed);
        assert!(box_elts.iter().all(|x| x.is_unit() == invertible.contains(x)));
    }

    #[test]
    fn rejects_other_gradings() {
        let x = bu2().parse("cl").unwrap();
        assert!(matches!(GradingZeroElt::from_poly(&x), Err(Error::NotDegreeZero(_))));
    }
}
