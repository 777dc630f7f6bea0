//! Critical-pair check for a [`ReductionSystem`].
//!
//! For two rules whose left sides share a variable, both rules are applied
//! once to the least common multiple and each side is reduced to normal form.
//! The system is locally confluent when every such pair joins; since the
//! order is well founded this gives confluence.

use std::fmt;

use serde::Serialize;

use crate::coeff::Scalar;
use crate::ring::Poly;

use super::{ReductionSystem, Step};

/// One side of a critical pair.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct Branch<S: Scalar> {
    pub rule: String,
    /// The lcm after one application of `rule`.
    pub first_step: String,
    pub steps: Vec<Step>,
    pub normal_form: String,
    #[serde(skip)]
    pub value: Poly<S>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct PairReport<S: Scalar> {
    pub rules: (String, String),
    pub gcd: String,
    pub lcm: String,
    /// The left sides are coprime, so the pair resolves without work.
    pub trivial: bool,
    pub left: Option<Branch<S>>,
    pub right: Option<Branch<S>>,
    pub joined: bool,
}

impl<S: Scalar> PairReport<S> {
    /// Common normal form of a nontrivial joined pair.
    pub fn final_form(&self) -> Option<&Poly<S>> {
        match (&self.left, self.joined) {
            (Some(b), true) => Some(&b.value),
            _ => None,
        }
    }

    pub fn names(&self) -> (&str, &str) {
        (&self.rules.0, &self.rules.1)
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct ConfluenceReport<S: Scalar> {
    pub pairs: Vec<PairReport<S>>,
    pub confluent: bool,
}

impl<S: Scalar> ConfluenceReport<S> {
    pub fn pair(&self, a: &str, b: &str) -> Option<&PairReport<S>> {
        self.pairs
            .iter()
            .find(|p| (p.rules.0 == a && p.rules.1 == b) || (p.rules.0 == b && p.rules.1 == a))
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = &PairReport<S>> {
        self.pairs.iter().filter(|p| !p.trivial)
    }
}

/// Check every unordered pair of distinct rules.
pub fn check_confluence<S: Scalar>(sys: &ReductionSystem<S>) -> ConfluenceReport<S> {
    let sig = sys.signature();
    let rules = sys.rules();
    let mut pairs = Vec::new();
    for i in 0..rules.len() {
        for j in i + 1..rules.len() {
            let (ri, rj) = (&rules[i], &rules[j]);
            let gcd = ri.lhs.gcd(&rj.lhs);
            let lcm = ri.lhs.lcm(&rj.lhs);
            let trivial = gcd.is_one();
            let mut report = PairReport {
                rules: (ri.name.clone(), rj.name.clone()),
                gcd: sig.fmt_monomial(&gcd),
                lcm: sig.fmt_monomial(&lcm),
                trivial,
                left: None,
                right: None,
                joined: true,
            };
            if !trivial {
                let branch = |r: &super::Rule<S>| {
                    let once = sys.rewrite_term(r, &lcm, &S::one());
                    let (nf, steps) = sys.normal_form_traced(&once);
                    Branch {
                        rule: r.name.clone(),
                        first_step: once.to_string(),
                        steps,
                        normal_form: nf.to_string(),
                        value: nf,
                    }
                };
                let (l, r) = (branch(ri), branch(rj));
                report.joined = l.value == r.value;
                report.left = Some(l);
                report.right = Some(r);
            }
            pairs.push(report);
        }
    }
    let confluent = pairs.iter().all(|p| p.joined);
    ConfluenceReport { pairs, confluent }
}

impl<S: Scalar> fmt::Display for ConfluenceReport<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.pairs {
            let (a, b) = p.names();
            if p.trivial {
                writeln!(f, "{a}/{b}: coprime left sides, trivially resolved")?;
                continue;
            }
            let verdict = if p.joined { "joins" } else { "DOES NOT JOIN" };
            writeln!(f, "{a}/{b}: overlap {} at {}, {verdict}", p.gcd, p.lcm)?;
            for br in [&p.left, &p.right].into_iter().flatten() {
                writeln!(f, "  via {}: {}", br.rule, br.first_step)?;
                for s in &br.steps {
                    writeln!(f, "    {} at {} => {}", s.rule, s.at, s.result)?;
                }
                writeln!(f, "    normal form {}", br.normal_form)?;
            }
        }
        write!(f, "{}", if self.confluent { "confluent" } else { "NOT confluent" })
    }
}
