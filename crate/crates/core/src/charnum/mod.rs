//! Tangential characteristic numbers of equivariant lines and surfaces.
//!
//! A class `c` in the cohomology of BU(n) gives the number
//! `c[M] = <tau*(c), [M]>` in the coefficient ring, where `tau` classifies
//! the tangent bundle of `M`. Only classes on the page of the tautological
//! bundle whose offset from it supports a nonzero coefficient group in the
//! positive cone can pair nontrivially.

mod manifold;

use serde::Serialize;

use crate::coeff::{CoeffElt, CoeffSymbol, Ro2Grading, Scalar};
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::presentation::{for_rank, Presentation};
use crate::rewrite::enumerate_basis;
use crate::ring::{GradedElem, Poly, TargetRing};

pub use manifold::{builtin, builtin_manifolds, ManifoldData, Pullback, PullbackMap, MANIFOLD_RANK};

/// Grading of the tautological bundle over BU(n), the page the relevant
/// classes live on.
pub fn bundle_grading(n: usize) -> Result<Grading> {
    match n {
        1 => Ok(Grading::bu1(2, 0, 0, 1)),
        2 => Ok(Grading::bu2(4, 0, 0, 1, 2)),
        _ => Err(Error::Unsupported(format!("no classifying space for complex dimension {n}"))),
    }
}

/// Whether an offset `a + b sigma` lies in the positive cone and carries a
/// nonzero coefficient group.
pub fn in_positive_wedge(pos: Ro2Grading) -> bool {
    pos.a <= 0 && pos.a + pos.b >= 0 && CoeffSymbol::group_nonzero(pos)
}

fn presentation(dim: &Grading) -> Result<&'static Presentation> {
    for_rank(dim.rank()).ok_or_else(|| Error::Unsupported(format!("no presentation with {} components", dim.rank())))
}

/// Basis monomials on the page of `dim` that can pair nontrivially with a
/// homology class in grading `dim`, in order of position.
pub fn relevant_classes(dim: Grading, a_max: i64) -> Result<Vec<Poly<CoeffElt>>> {
    let pres = presentation(&dim)?;
    let one = CoeffElt::from_int(1);
    Ok(enumerate_basis(pres, dim, a_max.min(0))
        .into_iter()
        .filter(|b| in_positive_wedge(b.position))
        .map(|b| Poly::monomial(pres.signature(), b.monomial, one.clone()))
        .collect())
}

/// `tau*(class)` in the cohomology of `m`.
pub fn tangent_pullback(m: &ManifoldData, class: &Poly<CoeffElt>) -> Result<Poly<CoeffElt>> {
    let pres = m.presentation();
    if **class.signature() != **pres.signature() {
        return Err(Error::SignatureMismatch {
            left: class.signature().name().to_string(),
            right: pres.signature().name().to_string(),
        });
    }
    match &m.pullback {
        Pullback::Generators(map) => map.apply(&pres.normal_form(class)),
        Pullback::Classes(table) => {
            let class = pres.normal_form(class);
            let mut out = m.ring.zero();
            for (mono, c) in class.terms() {
                let (_, img) = table.iter().find(|(k, _)| k == mono).ok_or_else(|| {
                    Error::Unsupported(format!(
                        "no pullback to {} recorded for {}",
                        m.name,
                        pres.signature().fmt_monomial(mono)
                    ))
                })?;
                out = out.try_add(&img.scale(c))?;
            }
            Ok(m.ring.normalize(out))
        }
    }
}

/// `<x, [m]>`, extended linearly over the coefficients from the evaluation
/// table.
pub fn evaluate(m: &ManifoldData, x: &Poly<CoeffElt>) -> Result<CoeffElt> {
    let x = m.ring.normalize(x.clone());
    let sig = m.signature();
    let mut out = CoeffElt::zero();
    for (mono, c) in x.terms() {
        let g = sig.monomial_grading(mono);
        if (g - m.dimension).ro2_part().is_none() {
            return Err(Error::GradingMismatch {
                expected: format!("a grading in {} + RO(C2)", m.dimension),
                found: g.to_string(),
            });
        }
        let (_, v) = m.evaluation.iter().find(|(k, _)| k == mono).ok_or_else(|| {
            Error::Unsupported(format!("{} is outside the evaluation basis of {}", sig.fmt_monomial(mono), m.name))
        })?;
        out = out.add(&c.mul(v));
    }
    Ok(out)
}

pub fn characteristic_number(m: &ManifoldData, class: &Poly<CoeffElt>) -> Result<CoeffElt> {
    evaluate(m, &tangent_pullback(m, class)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct CharNumber {
    pub class: String,
    pub grading: Grading,
    pub pullback: String,
    pub value: String,
}

/// Every relevant characteristic number of `m`.
pub fn characteristic_numbers(m: &ManifoldData) -> Result<Vec<(Poly<CoeffElt>, CoeffElt)>> {
    relevant_classes(bundle_grading(m.complex_dimension)?, 0)?
        .into_iter()
        .map(|c| {
            let v = characteristic_number(m, &c)?;
            Ok((c, v))
        })
        .collect()
}

/// Rows for display: each relevant class with its pullback and number.
pub fn characteristic_table(m: &ManifoldData) -> Result<Vec<CharNumber>> {
    relevant_classes(bundle_grading(m.complex_dimension)?, 0)?
        .into_iter()
        .map(|c| {
            let p = tangent_pullback(m, &c)?;
            Ok(CharNumber {
                class: c.to_string(),
                grading: c.grading()?.expect("nonzero monomial"),
                pullback: p.to_string(),
                value: evaluate(m, &p)?.to_string(),
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub class: String,
    pub left: String,
    pub right: String,
}

/// Relevant classes on which the characteristic numbers of `a` and `b`
/// differ; any witness shows the two are not equivariantly cobordant.
pub fn distinguishing_classes(a: &ManifoldData, b: &ManifoldData) -> Result<Vec<Witness>> {
    if a.complex_dimension != b.complex_dimension || a.dimension.rank() != b.dimension.rank() {
        return Err(Error::DimensionMismatch(format!(
            "{} has complex dimension {}, {} has {}",
            a.name, a.complex_dimension, b.name, b.complex_dimension
        )));
    }
    let mut out = Vec::new();
    for c in relevant_classes(bundle_grading(a.complex_dimension)?, 0)? {
        let (x, y) = (characteristic_number(a, &c)?, characteristic_number(b, &c)?);
        if x != y {
            out.push(Witness { class: c.to_string(), left: x.to_string(), right: y.to_string() });
        }
    }
    Ok(out)
}

pub fn bordism_distinguish(a: &ManifoldData, b: &ManifoldData) -> Result<bool> {
    Ok(!distinguishing_classes(a, b)?.is_empty())
}

/// Reference characteristic numbers of the built-in manifolds, by class.
pub const KNOWN_NUMBERS: [(&str, &str, &str); 16] = [
    ("X20", "cw", "2"),
    ("X20", "z0*cw^2", "0"),
    ("X11", "cw", "2"),
    ("X11", "z0*cw^2", "2*e^2"),
    ("X30", "z0*z2^3*cl^2", "9*xi"),
    ("X30", "cw", "3"),
    ("X30", "z2^2*cl^2*cxl", "9*e^2"),
    ("X30", "z0*z2*cl*cw", "0"),
    ("X30", "z0^2*z1*cw^2", "0"),
    ("X30", "z0*z2^3*cl^3*cxl", "0"),
    ("X21", "z0*z2^3*cl^2", "9*xi"),
    ("X21", "cw", "3"),
    ("X21", "z2^2*cl^2*cxl", "3*e^2"),
    ("X21", "z0*z2*cl*cw", "2*e^2"),
    ("X21", "z0^2*z1*cw^2", "e^4"),
    ("X21", "z0*z2^3*cl^3*cxl", "3*e^4"),
];

pub fn verify_characteristic_numbers() -> crate::verify::Certificate {
    let mut cert = crate::verify::Certificate::new("characteristic numbers of lines and surfaces");
    for (m, class, want) in KNOWN_NUMBERS {
        let name = format!("{class}[{m}]");
        let want: CoeffElt = crate::parse::parse_poly::<CoeffElt>(crate::presentation::bu2().signature(), want)
            .ok()
            .and_then(|p| p.as_constant())
            .expect("fixed scalar");
        let got = builtin(m).and_then(|md| characteristic_number(md, &md.presentation().parse(class)?));
        match got {
            Ok(v) => cert.check(name, &want, &v),
            Err(e) => cert.fail(name, &want, e),
        }
    }
    for (a, b, want) in [("X20", "X11", true), ("X30", "X21", true), ("X30", "X30", false)] {
        let name = format!("{a} and {b} distinguished");
        match builtin(a).and_then(|x| builtin(b).and_then(|y| bordism_distinguish(x, y))) {
            Ok(v) => cert.check(name, &want, &v),
            Err(e) => cert.fail(name, want, e),
        }
    }
    cert
}
