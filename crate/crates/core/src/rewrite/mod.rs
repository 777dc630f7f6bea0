//! Monomial rewriting: normal forms, critical pairs and enumeration of the
//! irreducible monomials.

mod basis;
mod confluence;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::ring::{Monomial, Normalizer, Poly, Signature};

pub use basis::{enumerate_basis, render_page, BasisElement, PageGrid};
pub use confluence::{check_confluence, Branch, ConfluenceReport, PairReport};

/// A rewriting rule `lhs -> rhs`, applied to any multiple of `lhs`.
#[derive(Clone, Debug)]
pub struct Rule<S: Scalar> {
    pub name: String,
    pub lhs: Monomial,
    pub rhs: Poly<S>,
}

/// One rewrite of a single monomial, with the whole element afterwards.
#[derive(Clone, Debug, Serialize)]
pub struct Step {
    pub rule: String,
    pub at: String,
    pub result: String,
}

/// Ordered rewriting rules over a signature.
#[derive(Clone, Debug)]
pub struct ReductionSystem<S: Scalar> {
    sig: Arc<Signature>,
    rules: Vec<Rule<S>>,
}

impl<S: Scalar> ReductionSystem<S> {
    /// Build a system, checking that every rule strictly decreases the
    /// signature's monomial order.
    pub fn new(sig: &Arc<Signature>, rules: Vec<Rule<S>>) -> Result<Self> {
        let ord = sig.order();
        for r in &rules {
            let bad_lhs = (0..sig.len()).any(|i| r.lhs.exp(i) < 0);
            let bad_rhs = r.rhs.terms().any(|(m, _)| ord.cmp(m, &r.lhs).is_ge());
            if bad_lhs || bad_rhs || !r.rhs.same_signature(&Poly::zero(sig)) {
                return Err(Error::NonDecreasingRule { rule: r.name.clone() });
            }
        }
        Ok(ReductionSystem { sig: sig.clone(), rules })
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn rules(&self) -> &[Rule<S>] {
        &self.rules
    }

    pub fn rule(&self, name: &str) -> Option<&Rule<S>> {
        self.rules.iter().find(|r| r.name == name)
    }

    /// First rule whose left side divides `m`.
    pub fn find_rule(&self, m: &Monomial) -> Option<&Rule<S>> {
        self.rules.iter().find(|r| r.lhs.divides(m))
    }

    pub fn is_reducible(&self, m: &Monomial) -> bool {
        self.find_rule(m).is_some()
    }

    /// `q * rhs` where `m = q * lhs`, scaled by `c`.
    pub fn rewrite_term(&self, rule: &Rule<S>, m: &Monomial, c: &S) -> Poly<S> {
        let q = m.div(&rule.lhs).expect("rule applies");
        rule.rhs.mul_term(&q, c)
    }

    /// Rewrite until no monomial is divisible by a left side, always
    /// reducing the largest reducible monomial first.
    pub fn normal_form(&self, p: &Poly<S>) -> Poly<S> {
        self.reduce(p, None)
    }

    /// [`ReductionSystem::normal_form`], recording every step.
    pub fn normal_form_traced(&self, p: &Poly<S>) -> (Poly<S>, Vec<Step>) {
        let mut steps = Vec::new();
        let nf = self.reduce(p, Some(&mut steps));
        (nf, steps)
    }

    fn reduce(&self, p: &Poly<S>, mut trace: Option<&mut Vec<Step>>) -> Poly<S> {
        let ord = self.sig.order();
        let mut pending: BTreeMap<_, (Monomial, S)> = BTreeMap::new();
        for (m, c) in p.terms() {
            pending.insert(ord.key(m), (*m, c.clone()));
        }
        let mut done: Vec<(Monomial, S)> = Vec::new();
        while let Some((_, (m, c))) = pending.pop_last() {
            let Some(rule) = self.find_rule(&m) else {
                done.push((m, c));
                continue;
            };
            // Everything produced is smaller than `m`, hence smaller than
            // every monomial already moved to `done`.
            for (n, d) in self.rewrite_term(rule, &m, &c).into_terms() {
                let key = ord.key(&n);
                match pending.get_mut(&key) {
                    Some((_, old)) => {
                        let s = old.add(&d);
                        if s.is_zero() {
                            pending.remove(&key);
                        } else {
                            *old = s;
                        }
                    }
                    None => {
                        pending.insert(key, (n, d));
                    }
                }
            }
            if let Some(t) = trace.as_deref_mut() {
                let current = Poly::from_terms(
                    &self.sig,
                    done.iter().cloned().chain(pending.values().cloned()),
                );
                t.push(Step {
                    rule: rule.name.clone(),
                    at: self.sig.fmt_monomial(&m),
                    result: current.to_string(),
                });
            }
        }
        Poly::from_terms(&self.sig, done)
    }

    pub fn is_normal(&self, p: &Poly<S>) -> bool {
        p.terms().all(|(m, _)| !self.is_reducible(m))
    }

    /// The same rules with scalars pushed through `f`.
    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Result<ReductionSystem<T>> {
        let rules = self
            .rules
            .iter()
            .map(|r| Rule { name: r.name.clone(), lhs: r.lhs, rhs: r.rhs.map_scalars(&self.sig, &f) })
            .collect();
        ReductionSystem::new(&self.sig, rules)
    }
}

impl<S: Scalar> Normalizer<S> for ReductionSystem<S> {
    fn normalize(&self, p: Poly<S>) -> Poly<S> {
        self.normal_form(&p)
    }
}
