//! The presentations of the cohomology of BU(2) and BU(1).
//!
//! BU(2) has fixed components indexed 0, 1, 2 and generators
//! `z0, z1, z2, cl, cxl, cw, cxw` (the Euler classes `zeta_i` and the
//! Chern classes of `lambda`, `chi lambda`, `omega`, `chi omega`). BU(1) has
//! two components and generators `z0, z1, cw, cxw`.

use std::sync::{Arc, OnceLock};

use crate::coeff::{CoeffElt, Scalar};
use crate::error::Result;
use crate::grading::Grading;
use crate::parse::parse_poly;
use crate::rewrite::{check_confluence, ReductionSystem, Rule};
use crate::verify::Certificate;
use crate::ring::{Generator, Poly, Signature};

/// A presentation: generators, rewriting rules, and which generators are
/// the Euler classes of the fixed components.
pub struct Presentation {
    pub system: ReductionSystem<CoeffElt>,
    /// Index of `zeta_i` for each fixed component `i`.
    pub zetas: Vec<usize>,
    /// The remaining (Chern class) generators.
    pub classes: Vec<usize>,
    /// The defining relations as `(name, lhs, rhs)`.
    pub relations: Vec<(String, Poly<CoeffElt>, Poly<CoeffElt>)>,
}

impl Presentation {
    pub fn signature(&self) -> &Arc<Signature> {
        self.system.signature()
    }

    pub fn rank(&self) -> usize {
        self.zetas.len()
    }

    /// Parse an element and reduce it to normal form.
    pub fn parse(&self, text: &str) -> Result<Poly<CoeffElt>> {
        Ok(self.system.normal_form(&parse_poly(self.signature(), text)?))
    }

    pub fn normal_form(&self, p: &Poly<CoeffElt>) -> Poly<CoeffElt> {
        self.system.normal_form(p)
    }
}

fn build(
    name: &str,
    gens: Vec<Generator>,
    weights: Vec<i64>,
    rules: &[(&str, &str, &str)],
    relations: &[&str],
) -> Presentation {
    let sig = Signature::new(name, gens, weights);
    let rank = sig.rank();
    let rules = rules
        .iter()
        .map(|(n, l, r)| {
            let lhs = parse_poly::<CoeffElt>(&sig, l).expect("rule lhs");
            let (m, _) = lhs.terms().next().expect("monomial lhs");
            Rule { name: n.to_string(), lhs: *m, rhs: parse_poly(&sig, r).expect("rule rhs") }
        })
        .collect();
    let system = ReductionSystem::new(&sig, rules).expect("rules decrease the order");
    let relations = relations
        .iter()
        .map(|n| {
            let r = system.rule(n).expect("relation names a rule");
            (n.to_string(), Poly::monomial(&sig, r.lhs, CoeffElt::from_int(1)), r.rhs.clone())
        })
        .collect();
    let zetas: Vec<usize> = (0..rank).map(|i| sig.index(&format!("z{i}")).expect("zeta")).collect();
    let classes = (0..sig.len()).filter(|i| !zetas.contains(i)).collect();
    Presentation { system, zetas, classes, relations }
}

/// BU(2): rules `R1`..`R6`, of which `R1`, `R2`, `R4` are the defining relations.
pub fn bu2() -> &'static Presentation {
    static P: OnceLock<Presentation> = OnceLock::new();
    P.get_or_init(|| {
        let g = Grading::bu2;
        let gens = vec![
            Generator::new("z0", g(0, 0, 1, 0, 0)),
            Generator::new("z1", g(0, 0, 0, 1, 0)),
            Generator::new("z2", g(0, 0, 0, 0, 1)),
            Generator::new("cl", g(2, 0, 0, 1, 0)),
            Generator::new("cxl", g(2, 0, 1, 0, 1)),
            Generator::new("cw", g(4, 0, 0, 1, 2)),
            Generator::new("cxw", g(4, 0, 2, 1, 0)),
        ];
        let rules = [
            ("R1", "z0*z1*z2", "xi"),
            ("R2", "z1*cxl", "(1 - k)*z0*z2*cl + e^2"),
            ("R3", "z0^2*z2^2*cl", "xi*cxl + e^2*z0*z2"),
            ("R4", "z2^2*cxw", "(1 - k)*z0^2*cw + e^2*cxl"),
            ("R5", "z0^3*z1*cw", "xi*z2*cxw - e^2*z0^2*z2*cl + e^4*z0"),
            ("R6", "z0^4*cl*cw", "xi*cxl*cxw + e^2*z0^2*cl*cxl - e^2*z0*z2*cxw"),
        ];
        build("BU(2)", gens, vec![1, 2, 1, 4, 5, 6, 7], &rules, &["R1", "R2", "R4"])
    })
}

/// BU(1): rules `B1`..`B3`, all of them defining relations.
pub fn bu1() -> &'static Presentation {
    static P: OnceLock<Presentation> = OnceLock::new();
    P.get_or_init(|| {
        let g = Grading::bu1;
        let gens = vec![
            Generator::new("z0", g(0, 0, 1, 0)),
            Generator::new("z1", g(0, 0, 0, 1)),
            Generator::new("cw", g(2, 0, 0, 1)),
            Generator::new("cxw", g(2, 0, 1, 0)),
        ];
        let rules = [
            ("B1", "z0*z1", "xi"),
            ("B2", "z1*cxw", "(1 - k)*z0*cw + e^2"),
            ("B3", "z0^2*cw", "xi*cxw + e^2*z0"),
        ];
        build("BU(1)", gens, vec![1, 2, 4, 5], &rules, &["B1", "B2", "B3"])
    })
}

/// Presentation for a grading group with `rank` fixed components.
pub fn for_rank(rank: usize) -> Option<&'static Presentation> {
    match rank {
        2 => Some(bu1()),
        3 => Some(bu2()),
        _ => None,
    }
}

/// Common normal forms of the overlapping rule pairs of [`bu2`].
///
/// For `R1`/`R4` the join is `xi*z2*cxw`; a value in `cxl` would not even be
/// in the grading of the overlap.
pub const CRITICAL_PAIR_FINALS: [(&str, &str, &str); 10] = [
    ("R1", "R2", "xi*cxl"),
    ("R1", "R3", "xi*z0*z2*cl"),
    ("R1", "R4", "xi*z2*cxw"),
    ("R1", "R5", "xi*z0^2*cw"),
    ("R1", "R6", "xi*z0^3*cl*cw"),
    ("R2", "R5", "xi*z2*cxl*cxw - e^2*z0^2*z2*cl*cxl + e^4*z0*cxl"),
    ("R3", "R4", "xi*cxl*cxw + e^2*z0*z2*cxw"),
    ("R3", "R5", "xi*z0^2*z2*cl*cw"),
    ("R3", "R6", "xi*z0^2*cxl*cw + e^2*z0^3*z2*cw"),
    ("R5", "R6", "xi*z0*z2*cl*cxw - e^2*z0^3*z2*cl^2 + e^4*z0^2*cl"),
];

/// Pairs of [`bu2`] rules with coprime left sides.
pub const COPRIME_PAIRS: [(&str, &str); 5] = [("R2", "R3"), ("R2", "R4"), ("R2", "R6"), ("R4", "R5"), ("R4", "R6")];

/// Every critical pair of [`bu2`] joins, at the recorded normal form.
pub fn verify_confluence() -> Certificate {
    let p = bu2();
    let report = check_confluence(&p.system);
    let mut cert = Certificate::new("critical pairs of the BU(2) rules");
    cert.check("pairs examined", &15usize, &report.pairs.len());
    for (a, b, want) in CRITICAL_PAIR_FINALS {
        let name = format!("{a}/{b} joins");
        let want = parse_poly::<CoeffElt>(p.signature(), want).expect("fixed expression");
        match report.pair(a, b) {
            Some(pr) if pr.joined && !pr.trivial => {
                cert.check(name, &want, pr.final_form().expect("joined"));
            }
            Some(pr) => cert.fail(name, &want, format!("joined={} trivial={}", pr.joined, pr.trivial)),
            None => cert.fail(name, &want, "pair missing"),
        }
    }
    for (a, b) in COPRIME_PAIRS {
        let trivial = report.pair(a, b).is_some_and(|pr| pr.trivial && pr.joined);
        cert.check(format!("{a}/{b} coprime"), &true, &trivial);
    }
    cert.check("confluent", &true, &report.confluent);
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GradedElem;

    #[test]
    fn confluence_certificate() {
        let c = verify_confluence();
        assert!(c.passed(), "{c}");
    }

    #[test]
    fn bu1_rules_are_confluent() {
        assert!(check_confluence(&bu1().system).confluent);
    }

    #[test]
    fn rules_are_homogeneous() {
        for p in [bu2(), bu1()] {
            for r in p.system.rules() {
                let lhs = p.signature().monomial_grading(&r.lhs);
                assert_eq!(r.rhs.grading().unwrap(), Some(lhs), "{}", r.name);
            }
        }
    }

    #[test]
    fn generator_gradings() {
        let sig = bu2().signature();
        let cw = &sig.generators()[sig.index("cw").unwrap()];
        assert_eq!(cw.grading.to_string(), "4 + O1 + 2O2");
        assert_eq!(cw.grading.rho_degree(), 4);
    }

    #[test]
    fn derived_rules_follow_from_defining_ones() {
        // The congruences behind R3, R5, R6: each left side times a suitable
        // monomial reduces, using only R1, R2, R4, to the corresponding
        // multiple of the right side.
        let p = bu2();
        let sig = p.signature();
        let keep = |names: &[&str]| {
            let rules = p.system.rules().iter().filter(|r| names.contains(&r.name.as_str())).cloned().collect();
            ReductionSystem::new(sig, rules).unwrap()
        };
        let base = keep(&["R1", "R2", "R4"]);
        let check = |mult: &str, rule: &str, sys: &ReductionSystem<CoeffElt>| {
            let r = p.system.rule(rule).unwrap();
            let m: Poly<CoeffElt> = parse_poly(sig, mult).unwrap();
            let lhs = &m * &Poly::monomial(sig, r.lhs, CoeffElt::from_int(1));
            let rhs = &m * &r.rhs;
            assert_eq!(sys.normal_form(&lhs), sys.normal_form(&rhs), "{rule}");
        };
        // Multiplying by z1 brings each left side into reach of R1/R2.
        check("z1", "R3", &base);
        let with_r3 = keep(&["R1", "R2", "R3", "R4"]);
        check("z2", "R5", &with_r3);
        let with_r5 = keep(&["R1", "R2", "R3", "R4", "R5"]);
        check("z1", "R6", &with_r5);
    }
}
