//! Cohomology data of small test manifolds, loaded from JSON.

use std::path::Path;
use std::sync::{Arc, OnceLock};

use serde::Deserialize;

use crate::coeff::{CoeffElt, Scalar};
use crate::error::{Error, Result};
use crate::grading::{Grading, GradingMap};
use crate::parse::{parse_grading, parse_poly};
use crate::presentation::{for_rank, Presentation};
use crate::ring::{GradedElem, Generator, Monomial, Poly, PolyRing, ProductFacts, RingMap, Signature, TargetRing, Truncation};

/// Manifold cohomology is graded on two fixed components.
pub const MANIFOLD_RANK: usize = 2;

#[derive(Deserialize)]
struct GeneratorSpec {
    name: String,
    grading: String,
    #[serde(default)]
    invertible: bool,
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case")]
enum RelationSpec {
    Truncate(String, i32),
    Products(Vec<(String, String, String)>),
}

#[derive(Deserialize)]
struct ManifoldSpec {
    name: String,
    #[serde(default)]
    description: String,
    complex_dimension: usize,
    generators: Vec<GeneratorSpec>,
    relations: RelationSpec,
    dimension: String,
    grading_map: Vec<String>,
    evaluation: Vec<(String, String)>,
    #[serde(default)]
    generator_pullbacks: Vec<(String, String)>,
    #[serde(default)]
    class_pullbacks: Vec<(String, String)>,
}

pub type PullbackMap = RingMap<CoeffElt, PolyRing<CoeffElt>>;

/// How classes of the classifying space pull back along the tangent map.
pub enum Pullback {
    /// Images of generators, extended multiplicatively.
    Generators(PullbackMap),
    /// Images of individual normal-form monomials, extended linearly.
    Classes(Vec<(Monomial, Poly<CoeffElt>)>),
}

pub struct ManifoldData {
    pub name: String,
    pub description: String,
    /// Complex dimension `n`; classes come from BU(n).
    pub complex_dimension: usize,
    pub ring: PolyRing<CoeffElt>,
    /// Grading of the fundamental class.
    pub dimension: Grading,
    /// Effect of the tangent map on gradings.
    pub grading_map: GradingMap,
    pub evaluation: Vec<(Monomial, CoeffElt)>,
    pub pullback: Pullback,
}

impl std::fmt::Debug for ManifoldData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ManifoldData").field("name", &self.name).field("dimension", &self.dimension).finish()
    }
}

fn fixture_err(name: &str, e: impl std::fmt::Display) -> Error {
    Error::Fixture(format!("{name}: {e}"))
}

fn single_monomial(p: &Poly<CoeffElt>, what: &str) -> Result<Monomial> {
    let mut it = p.terms();
    match (it.next(), it.next()) {
        (Some((m, c)), None) if c.as_int() == Some(1) => Ok(*m),
        _ => Err(Error::Fixture(format!("`{what}` is not a single monomial"))),
    }
}

impl ManifoldData {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: ManifoldSpec = serde_json::from_str(text).map_err(|e| Error::Fixture(e.to_string()))?;
        let name = spec.name.clone();
        Self::build(spec).map_err(|e| match e {
            Error::Fixture(_) => e,
            other => fixture_err(&name, other),
        })
    }

    fn build(spec: ManifoldSpec) -> Result<Self> {
        let pres = Self::presentation_for(spec.complex_dimension)?;
        let gens = spec
            .generators
            .iter()
            .map(|g| {
                let gr = parse_grading(MANIFOLD_RANK, &g.grading)?;
                Ok(if g.invertible { Generator::invertible(&g.name, gr) } else { Generator::new(&g.name, gr) })
            })
            .collect::<Result<Vec<_>>>()?;
        let sig = Signature::unweighted(&spec.name, gens);
        let ring = match &spec.relations {
            RelationSpec::Truncate(g, power) => {
                PolyRing::quotient(&sig, Arc::new(Truncation { generator: sig.index(g)?, power: *power }))
            }
            RelationSpec::Products(facts) => {
                let facts = facts
                    .iter()
                    .map(|(x, y, z)| Ok((parse_poly(&sig, x)?, parse_poly(&sig, y)?, parse_poly(&sig, z)?)))
                    .collect::<Result<Vec<_>>>()?;
                PolyRing::quotient(&sig, Arc::new(ProductFacts { facts }))
            }
        };
        let dimension = parse_grading(MANIFOLD_RANK, &spec.dimension)?;
        let images = spec
            .grading_map
            .iter()
            .map(|t| parse_grading(MANIFOLD_RANK, t))
            .collect::<Result<Vec<_>>>()?;
        if images.len() != pres.rank() {
            return Err(fixture_err(&spec.name, "grading map has the wrong number of images"));
        }
        let grading_map = GradingMap::new(images)?;

        let mut evaluation = Vec::new();
        for (m, v) in &spec.evaluation {
            let mono = single_monomial(&parse_poly(&sig, m)?, m)?;
            let value: Poly<CoeffElt> = parse_poly(&sig, v)?;
            let value = value.as_constant().ok_or_else(|| fixture_err(&spec.name, format!("value `{v}` is not a scalar")))?;
            evaluation.push((mono, value));
        }

        let pullback = match (spec.generator_pullbacks.is_empty(), spec.class_pullbacks.is_empty()) {
            (false, true) => {
                let target = sig.clone();
                let mut map = RingMap::new(&format!("tangent map of {}", spec.name), pres.signature(), ring.clone(), move |c: &CoeffElt| {
                    Poly::constant(&target, c.clone())
                });
                for (g, img) in &spec.generator_pullbacks {
                    map.set_image(g, parse_poly(&sig, img)?)?;
                }
                map.check_gradings(&grading_map)?;
                Pullback::Generators(map)
            }
            (true, false) => {
                let mut table = Vec::new();
                for (c, img) in &spec.class_pullbacks {
                    let class = pres.parse(c)?;
                    let mono = single_monomial(&class, c)?;
                    let img: Poly<CoeffElt> = parse_poly(&sig, img)?;
                    let want = grading_map.apply(&pres.signature().monomial_grading(&mono));
                    if let Some(found) = img.grading()? {
                        if found != want {
                            return Err(Error::GradingMismatch {
                                expected: format!("{want} for pullback of {c}"),
                                found: found.to_string(),
                            });
                        }
                    }
                    table.push((mono, img));
                }
                Pullback::Classes(table)
            }
            _ => return Err(fixture_err(&spec.name, "give exactly one of generator_pullbacks and class_pullbacks")),
        };

        Ok(ManifoldData {
            name: spec.name,
            description: spec.description,
            complex_dimension: spec.complex_dimension,
            ring,
            dimension,
            grading_map,
            evaluation,
            pullback,
        })
    }

    fn presentation_for(n: usize) -> Result<&'static Presentation> {
        for_rank(n + 1).ok_or_else(|| Error::Unsupported(format!("no presentation for complex dimension {n}")))
    }

    /// The presentation whose classes pull back to this manifold.
    pub fn presentation(&self) -> &'static Presentation {
        Self::presentation_for(self.complex_dimension).expect("checked on load")
    }

    pub fn signature(&self) -> &Arc<Signature> {
        self.ring.signature()
    }

    pub fn parse(&self, text: &str) -> Result<Poly<CoeffElt>> {
        Ok(self.ring.normalize(parse_poly(self.signature(), text)?))
    }

    /// Load every `*.json` file in `dir`, sorted by file name.
    pub fn load_dir(dir: &Path) -> Result<Vec<ManifoldData>> {
        let mut paths: Vec<_> = std::fs::read_dir(dir)
            .map_err(|e| Error::Fixture(format!("{}: {e}", dir.display())))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        paths
            .iter()
            .map(|p| {
                let text = std::fs::read_to_string(p).map_err(|e| Error::Fixture(format!("{}: {e}", p.display())))?;
                ManifoldData::from_json(&text)
            })
            .collect()
    }
}

const BUILTIN: [&str; 4] = [
    include_str!("../../fixtures/x20.json"),
    include_str!("../../fixtures/x11.json"),
    include_str!("../../fixtures/x30.json"),
    include_str!("../../fixtures/x21.json"),
];

/// The built-in manifolds: two lines followed by two surfaces.
pub fn builtin_manifolds() -> &'static [ManifoldData] {
    static M: OnceLock<Vec<ManifoldData>> = OnceLock::new();
    M.get_or_init(|| BUILTIN.iter().map(|t| ManifoldData::from_json(t).expect("built-in fixture")).collect())
}

pub fn builtin(name: &str) -> Result<&'static ManifoldData> {
    builtin_manifolds()
        .iter()
        .find(|m| m.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
}
