//! Irreducible monomials on a page `alpha + RO(C2)`.
//!
//! A monomial lies on the page of its grading modulo RO(C2). Once the Chern
//! class exponents are fixed, the zeta exponents are determined up to adding
//! the product of all zetas, which is always reducible; so each tuple of
//! class exponents contributes at most one candidate, the one whose smallest
//! zeta exponent is zero.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::coeff::Ro2Grading;
use crate::grading::Grading;
use crate::presentation::Presentation;
use crate::ring::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisElement {
    #[serde(skip)]
    pub monomial: Monomial,
    pub name: String,
    pub grading: Grading,
    /// Offset from the page origin, `a + b*sigma`.
    pub position: Ro2Grading,
}

fn class_tuples(n: usize, bound: i32) -> impl Iterator<Item = Vec<i32>> {
    let total = (bound as usize + 1).pow(n as u32);
    (0..total).map(move |mut k| {
        let mut v = vec![0; n];
        for x in v.iter_mut() {
            *x = (k % (bound as usize + 1)) as i32;
            k /= bound as usize + 1;
        }
        v
    })
}

/// Enumerate normal-form monomials on the page of `page` whose position
/// relative to `page` has first coordinate at most `a_max`.
///
/// The result is sorted by position, then by the monomial order.
pub fn enumerate_basis(pres: &Presentation, page: Grading, a_max: i64) -> Vec<BasisElement> {
    enumerate_with_bound(pres, page, a_max, None)
}

pub(crate) fn enumerate_with_bound(
    pres: &Presentation,
    page: Grading,
    a_max: i64,
    bound: Option<i32>,
) -> Vec<BasisElement> {
    let sig = pres.signature();
    let rank = pres.rank();
    assert_eq!(page.rank(), rank, "page and presentation disagree on components");
    // Origin with nonnegative omega part, smallest coefficient zero.
    let (oa, ob, om) = page.natural();
    let shift = page - Grading::new(oa, ob, &om);
    let shift = shift.ro2_part().expect("same page");
    let window = a_max + shift.a;
    if window < 0 {
        return Vec::new();
    }
    let p_max = *om.iter().max().expect("rank >= 1");
    let bound = bound.unwrap_or((window + 2 * p_max + 4) as i32);

    let mut out = Vec::new();
    for exps in class_tuples(pres.classes.len(), bound) {
        let mut m = Monomial::one();
        for (&i, &e) in pres.classes.iter().zip(&exps) {
            m.0[i] = e;
        }
        let g = sig.monomial_grading(&m);
        let k = (0..rank).map(|i| g.omega()[i] - om[i]).max().expect("rank >= 1");
        for (i, &z) in pres.zetas.iter().enumerate() {
            m.0[z] = (om[i] - g.omega()[i] + k) as i32;
        }
        if pres.system.is_reducible(&m) {
            continue;
        }
        let grading = sig.monomial_grading(&m);
        let position = (grading - page).ro2_part().expect("monomial lies on the page");
        if position.a > a_max {
            continue;
        }
        out.push(BasisElement { monomial: m, name: sig.fmt_monomial(&m), grading, position });
    }
    let ord = sig.order();
    out.sort_by(|x, y| {
        (x.position.a, x.position.b).cmp(&(y.position.a, y.position.b)).then_with(|| ord.cmp(&x.monomial, &y.monomial))
    });
    out
}

/// Number of basis elements at each position of a page.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PageGrid {
    pub page: Grading,
    pub a_max: i64,
    /// `a -> (b -> count)`.
    pub columns: BTreeMap<i64, BTreeMap<i64, usize>>,
}

impl PageGrid {
    pub fn count(&self, a: i64, b: i64) -> usize {
        self.columns.get(&a).and_then(|c| c.get(&b)).copied().unwrap_or(0)
    }

    /// Counts of column `a`, in increasing `b`.
    pub fn column(&self, a: i64) -> Vec<usize> {
        self.columns.get(&a).map(|c| c.values().copied().collect()).unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }
}

pub fn render_page(pres: &Presentation, page: Grading, a_max: i64) -> PageGrid {
    let mut columns: BTreeMap<i64, BTreeMap<i64, usize>> = BTreeMap::new();
    for b in enumerate_basis(pres, page, a_max) {
        *columns.entry(b.position.a).or_default().entry(b.position.b).or_default() += 1;
    }
    PageGrid { page, a_max, columns }
}

impl fmt::Display for PageGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "page {} + RO(C2), a <= {}", self.page, self.a_max)?;
        if self.columns.is_empty() {
            return write!(f, "(empty)");
        }
        let lines: Vec<String> = self
            .columns
            .iter()
            .map(|(a, col)| {
                let cells: Vec<String> = col.iter().map(|(b, n)| format!("{b}s:{n}")).collect();
                format!("a={a:<3} {}", cells.join("  "))
            })
            .collect();
        write!(f, "{}", lines.join("\n"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{bu1, bu2};

    fn names(v: &[BasisElement]) -> Vec<&str> {
        v.iter().map(|b| b.name.as_str()).collect()
    }

    #[test]
    fn bu1_page() {
        let page = Grading::bu1(0, 0, 0, 1);
        let basis = enumerate_basis(bu1(), page, 4);
        assert_eq!(names(&basis), ["z1", "cw", "z0*cw^2", "cw^2*cxw", "z0*cw^3*cxw"]);
    }

    #[test]
    fn empty_window() {
        assert!(enumerate_basis(bu2(), Grading::zero(3), -1).is_empty());
        assert!(render_page(bu2(), Grading::zero(3), -2).is_empty());
    }

    #[test]
    fn page_zero_low_columns() {
        let grid = render_page(bu2(), Grading::zero(3), 6);
        assert_eq!(grid.column(0), [1, 1, 1]);
        assert_eq!(grid.column(2), [1, 2, 1]);
        assert_eq!(grid.count(0, 4), 1);
    }

    #[test]
    fn bound_is_large_enough() {
        for page in [Grading::zero(3), Grading::bu2(0, 0, 0, 1, 2), Grading::bu2(0, 0, 1, 0, 0)] {
            let a = enumerate_basis(bu2(), page, 6);
            let b = enumerate_with_bound(bu2(), page, 6, Some(24));
            assert_eq!(a, b, "{page}");
        }
    }
}
