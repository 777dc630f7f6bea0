//! Restriction maps out of the BU(2) presentation.
//!
//! * `eta`: restriction to the three fixed components, landing in a direct
//!   sum of Laurent rings over the coefficients of a point.
//! * `rho`: restriction to nonequivariant cohomology with `iota` adjoined.
//! * `phibar`: geometric fixed points, defined on the presentation with
//!   scalars pushed to `Z[e, e^-1]`; it is an isomorphism and `psi` lists
//!   preimages of the generators of the target.

use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::coeff::{coeff_phi, coeff_rho, CoeffElt, FixedScalar, NoneqScalar, Ro2Grading, Scalar};
use crate::error::Result;
use crate::grading::{Grading, GradingMap};
use crate::parse::{parse_poly, parse_triple};
use crate::presentation::{bu2, Presentation};
use crate::rewrite::{enumerate_basis, ReductionSystem};
use crate::ring::{
    Generator, Monomial, Normalizer, Poly, PolyRing, RingMap, Signature, Triple, TripleRing,
};
use crate::verify::Certificate;

pub type EtaMap = RingMap<CoeffElt, TripleRing<CoeffElt>>;
pub type RhoMap = RingMap<CoeffElt, PolyRing<NoneqScalar>>;
pub type PhiMap = RingMap<FixedScalar, TripleRing<FixedScalar>>;

/// Signatures of the three fixed components.
pub fn components() -> &'static [Arc<Signature>; 3] {
    static C: OnceLock<[Arc<Signature>; 3]> = OnceLock::new();
    C.get_or_init(|| {
        let g = Grading::bu2;
        let z = |i: usize| Generator::invertible(&format!("z{i}"), Grading::omega_unit(3, i));
        let deg = |name: &str, d: i64| Generator::new(name, g(d, 0, 0, 0, 0));
        [
            Signature::unweighted("fixed0", vec![deg("c1", 2), deg("c2", 4), z(1), z(2)]),
            Signature::unweighted("fixed1", vec![deg("x1", 2), deg("x2", 2), z(0), z(2)]),
            Signature::unweighted("fixed2", vec![deg("c1", 2), deg("c2", 4), z(0), z(1)]),
        ]
    })
}

/// Nonequivariant target `Z[iota^+-][c1, c2, z0^+-, z1^+-, z2^+-]`.
pub fn noneq_signature() -> &'static Arc<Signature> {
    static S: OnceLock<Arc<Signature>> = OnceLock::new();
    S.get_or_init(|| {
        let z = |i: usize| Generator::invertible(&format!("z{i}"), Grading::omega_unit(3, i));
        Signature::unweighted(
            "nonequivariant",
            vec![
                Generator::new("c1", Grading::bu2(2, 0, 0, 0, 0)),
                Generator::new("c2", Grading::bu2(4, 0, 0, 0, 0)),
                z(0),
                z(1),
                z(2),
            ],
        )
    })
}

/// Imposes `z0*z1*z2 = iota^2`, keeping iota exponents in `{0, 1}`.
struct IotaSquare;

impl Normalizer<NoneqScalar> for IotaSquare {
    fn normalize(&self, p: Poly<NoneqScalar>) -> Poly<NoneqScalar> {
        let sig = p.signature().clone();
        let zs: Vec<usize> = (0..3).map(|i| sig.index(&format!("z{i}")).expect("zeta")).collect();
        let mut out = Poly::zero(&sig);
        for (m, c) in p.terms() {
            for (k, n) in c.terms() {
                let (q, r) = (k.div_euclid(2), k.rem_euclid(2));
                let mut mm = *m;
                for &z in &zs {
                    mm.0[z] += q as i32;
                }
                out.add_term(mm, NoneqScalar::monomial(r, n));
            }
        }
        out
    }
}

const ETA_TABLE: [(&str, &str); 7] = [
    ("z0", "(xi*z1^-1*z2^-1, z0, z0)"),
    ("z1", "(z1, xi*z0^-1*z2^-1, z1)"),
    ("z2", "(z2, z2, xi*z0^-1*z1^-1)"),
    ("cl", "(c1*z1, (e^2 + xi*(x1 + x2))*z0^-1*z2^-1, c1*z1)"),
    ("cxl", "((e^2 + xi*c1)*z1^-1, (x1 + x2)*z0*z2, (e^2 + xi*c1)*z1^-1)"),
    (
        "cw",
        "(c2*z1*z2^2, x1*(e^2 + xi*x2)*z0^-1*z2, (e^4 + e^2*xi*c1 + xi^2*c2)*z0^-2*z1^-1)",
    ),
    (
        "cxw",
        "((e^4 + e^2*xi*c1 + xi^2*c2)*z1^-1*z2^-2, x2*(e^2 + xi*x1)*z0*z2^-1, c2*z0^2*z1)",
    ),
];

const RHO_TABLE: [(&str, &str); 7] = [
    ("z0", "z0"),
    ("z1", "z1"),
    ("z2", "z2"),
    ("cl", "z1*c1"),
    ("cxl", "z0*z2*c1"),
    ("cw", "z1*z2^2*c2"),
    ("cxw", "z0^2*z1*c2"),
];

const PHI_TABLE: [(&str, &str); 7] = [
    ("z0", "(0, z0, z0)"),
    ("z1", "(z1, 0, z1)"),
    ("z2", "(z2, z2, 0)"),
    ("cl", "(c1*z1, e^2*z0^-1*z2^-1, c1*z1)"),
    ("cxl", "(e^2*z1^-1, (x1 + x2)*z0*z2, e^2*z1^-1)"),
    ("cw", "(c2*z1*z2^2, e^2*x1*z0^-1*z2, e^4*z0^-2*z1^-1)"),
    ("cxw", "(e^4*z1^-1*z2^-2, e^2*x2*z0*z2^-1, c2*z0^2*z1)"),
];

/// Elements of the presentation over `Z[e^+-]` with their fixed-point images.
pub const PHI_DERIVED: [(&str, &str); 11] = [
    ("e^-2*cl*cxl", "(c1, x1 + x2, c1)"),
    ("e^-4*cw*cxw", "(c2, x1*x2, c2)"),
    ("e^-6*z1^2*z2^2*cxl*cxw", "(1, 0, 0)"),
    ("e^-2*z0*z2*cl", "(0, 1, 0)"),
    ("e^-6*z0^2*z1^2*cxl*cw", "(0, 0, 1)"),
    ("e^-6*z1*z2^2*cxl*cxw", "(z1^-1, 0, 0)"),
    ("e^-6*z1^2*z2*cxl*cxw", "(z2^-1, 0, 0)"),
    ("e^-2*z2*cl*(1 - e^-2*z1*cxl)", "(0, z0^-1, 0)"),
    ("e^-2*z0*cl*(1 - e^-2*z1*cxl)", "(0, z2^-1, 0)"),
    ("e^-6*z0*z1^2*cxl*cw", "(0, 0, z0^-1)"),
    ("e^-6*z0^2*z1*cxl*cw", "(0, 0, z1^-1)"),
];

/// Preimages under `phibar` of the ring generators of the fixed-point target.
pub const PSI_TABLE: [(&str, &str); 21] = [
    ("(1, 0, 0)", "e^-6*z1^2*z2^2*cxl*cxw"),
    ("(0, 1, 0)", "e^-2*z0*z2*cl"),
    ("(0, 0, 1)", "e^-6*z0^2*z1^2*cxl*cw"),
    ("(z1, 0, 0)", "z1*e^-6*z1^2*z2^2*cxl*cxw"),
    ("(z2, 0, 0)", "z2*e^-6*z1^2*z2^2*cxl*cxw"),
    ("(z1^-1, 0, 0)", "e^-6*z1*z2^2*cxl*cxw"),
    ("(z2^-1, 0, 0)", "e^-6*z1^2*z2*cxl*cxw"),
    ("(c1, 0, 0)", "e^-2*cl*cxl*e^-6*z1^2*z2^2*cxl*cxw"),
    ("(c2, 0, 0)", "e^-4*cw*cxw*e^-6*z1^2*z2^2*cxl*cxw"),
    ("(0, z0, 0)", "z0*e^-2*z0*z2*cl"),
    ("(0, z2, 0)", "z2*e^-2*z0*z2*cl"),
    ("(0, z0^-1, 0)", "e^-2*z2*cl*(1 - e^-2*z1*cxl)"),
    ("(0, z2^-1, 0)", "e^-2*z0*cl*(1 - e^-2*z1*cxl)"),
    ("(0, x1, 0)", "e^-2*z0*cw*e^-2*z0*cl*(1 - e^-2*z1*cxl)"),
    ("(0, x2, 0)", "e^-2*z2*cxw*e^-2*z2*cl*(1 - e^-2*z1*cxl)"),
    ("(0, 0, z0)", "z0*e^-6*z0^2*z1^2*cxl*cw"),
    ("(0, 0, z1)", "z1*e^-6*z0^2*z1^2*cxl*cw"),
    ("(0, 0, z0^-1)", "e^-6*z0*z1^2*cxl*cw"),
    ("(0, 0, z1^-1)", "e^-6*z0^2*z1*cxl*cw"),
    ("(0, 0, c1)", "e^-2*cl*cxl*e^-6*z0^2*z1^2*cxl*cw"),
    ("(0, 0, c2)", "e^-4*cw*cxw*e^-6*z0^2*z1^2*cxl*cw"),
];

pub fn eta() -> &'static EtaMap {
    static M: OnceLock<EtaMap> = OnceLock::new();
    M.get_or_init(|| {
        let comps = components().clone();
        let c2 = comps.clone();
        let mut m = RingMap::new("eta", bu2().signature(), TripleRing::new(comps), move |c: &CoeffElt| {
            Triple::constant(&c2, c)
        });
        for (g, t) in ETA_TABLE {
            m.set_image(g, parse_triple(components(), t).expect("eta table")).expect("generator");
        }
        m
    })
}

pub fn rho() -> &'static RhoMap {
    static M: OnceLock<RhoMap> = OnceLock::new();
    M.get_or_init(|| {
        let sig = noneq_signature().clone();
        let ring = PolyRing::quotient(&sig, Arc::new(IotaSquare));
        let ring2 = ring.clone();
        let mut m = RingMap::new("rho", bu2().signature(), ring, move |c: &CoeffElt| {
            use crate::ring::TargetRing;
            ring2.normalize(Poly::constant(ring2.signature(), coeff_rho(c)))
        });
        for (g, t) in RHO_TABLE {
            m.set_image(g, parse_poly(&sig, t).expect("rho table")).expect("generator");
        }
        m
    })
}

/// The presentation with scalars pushed to `Z[e, e^-1]`.
pub fn fixed_system() -> &'static ReductionSystem<FixedScalar> {
    static S: OnceLock<ReductionSystem<FixedScalar>> = OnceLock::new();
    S.get_or_init(|| bu2().system.map_scalars(coeff_phi).expect("base change keeps the order"))
}

pub fn phibar() -> &'static PhiMap {
    static M: OnceLock<PhiMap> = OnceLock::new();
    M.get_or_init(|| {
        let comps = components().clone();
        let c2 = comps.clone();
        let mut m =
            RingMap::new("phibar", bu2().signature(), TripleRing::new(comps), move |c: &FixedScalar| {
                Triple::constant(&c2, c)
            });
        for (g, t) in PHI_TABLE {
            m.set_image(g, parse_triple(components(), t).expect("phi table")).expect("generator");
        }
        m
    })
}

/// Push coefficients to `Z[e, e^-1]`.
pub fn base_change_phi(p: &Poly<CoeffElt>) -> Poly<FixedScalar> {
    p.map_scalars(p.signature(), coeff_phi)
}

/// Push coefficients to `Z[iota, iota^-1]`, keeping the generators.
pub fn base_change_rho(p: &Poly<CoeffElt>) -> Poly<NoneqScalar> {
    p.map_scalars(p.signature(), coeff_rho)
}

/// Geometric fixed points of an element of the presentation.
pub fn phi(p: &Poly<CoeffElt>) -> Result<Triple<FixedScalar>> {
    phibar().apply(&base_change_phi(p))
}

/// Parse an element of the presentation over `Z[e^+-]` and reduce it.
pub fn parse_fixed(text: &str) -> Result<Poly<FixedScalar>> {
    Ok(fixed_system().normal_form(&parse_poly(bu2().signature(), text)?))
}

pub fn parse_fixed_triple(text: &str) -> Result<Triple<FixedScalar>> {
    parse_triple(components(), text)
}

/// Forget `e` and the zetas (set them to one) in a fixed-point image.
pub fn forget_fixed(t: &Triple<FixedScalar>) -> Triple<i64> {
    t.map(|p| {
        let sig = p.signature();
        let zs: Vec<usize> = (0..sig.len()).filter(|i| sig.generators()[*i].invertible).collect();
        let mut out = Poly::zero(sig);
        for (m, c) in p.terms() {
            let mut mm = *m;
            for &z in &zs {
                mm.0[z] = 0;
            }
            let total: i64 = c.terms().map(|(_, n)| n).sum();
            out.add_term(mm, total);
        }
        out
    })
}

/// Forget `iota` and the zetas in a nonequivariant image.
pub fn forget_noneq(p: &Poly<NoneqScalar>) -> Poly<i64> {
    let sig = p.signature();
    let mut out = Poly::zero(sig);
    for (m, c) in p.terms() {
        let mut mm = Monomial::one();
        for i in 0..2 {
            mm.0[i] = m.0[i];
        }
        out.add_term(mm, c.terms().map(|(_, n)| n).sum());
    }
    out
}

fn check_map_gradings(cert: &mut Certificate) {
    let id = GradingMap::identity(3);
    for (name, r) in [
        ("eta", eta().check_gradings(&id)),
        ("rho", rho().check_gradings(&id)),
        ("phibar", phibar().check_gradings(&id)),
    ] {
        match r {
            Ok(()) => cert.check(format!("{name} images are homogeneous"), &"ok", &"ok"),
            Err(e) => cert.fail(format!("{name} images are homogeneous"), "ok", e),
        }
    }
}

/// The defining relations (and the derived rules) hold after `eta`.
pub fn verify_relations_via_eta() -> Certificate {
    let mut cert = Certificate::new("relations hold after restriction to fixed points");
    let p = bu2();
    for r in p.system.rules() {
        let lhs = Poly::monomial(p.signature(), r.lhs, CoeffElt::one());
        let name = format!("{}: eta({}) = eta({})", r.name, lhs, r.rhs);
        match (eta().apply(&lhs), eta().apply(&r.rhs)) {
            (Ok(a), Ok(b)) => cert.check(name, &a, &b),
            (Err(e), _) | (_, Err(e)) => cert.fail(name, "equal images", e),
        }
    }
    check_map_gradings(&mut cert);
    cert
}

/// Under `rho` the relations become the nonequivariant ones.
pub fn verify_rho_presentation() -> Certificate {
    let mut cert = Certificate::new("nonequivariant restriction of the relations");
    let p = bu2();
    let sig = p.signature();
    let displayed = [("R1", "z0*z1*z2", "iota^2"), ("R2", "z1*cxl", "z0*z2*cl"), ("R4", "z2^2*cxw", "z0^2*cw")];
    for (rule, l, r) in displayed {
        let rel = p.relations.iter().find(|x| x.0 == rule).expect("defining relation");
        let got = base_change_rho(&(&rel.1 - &rel.2));
        let want: Poly<NoneqScalar> = parse_poly(sig, &format!("{l} - ({r})")).expect("displayed relation");
        cert.check(format!("{rule} becomes {l} = {r}"), &want, &got);
        let name = format!("{rule}: rho(lhs) = rho(rhs)");
        match (rho().apply(&rel.1), rho().apply(&rel.2)) {
            (Ok(a), Ok(b)) => cert.check(name, &a, &b),
            (Err(e), _) | (_, Err(e)) => cert.fail(name, "equal images", e),
        }
    }
    for (s, want) in [("k", "0"), ("1 - k", "1"), ("e^2", "0"), ("xi", "iota^2"), ("g", "2")] {
        let c: Poly<CoeffElt> = parse_poly(sig, s).expect("scalar");
        let w: Poly<NoneqScalar> = parse_poly(sig, want).expect("scalar");
        cert.check(format!("rho({s}) = {want}"), &w, &base_change_rho(&c));
    }
    cert
}

/// `phibar` agrees with `eta` followed by fixed points of coefficients, hits
/// the listed elements, and `psi` is a right inverse on generators.
pub fn verify_phi_iso() -> Certificate {
    let mut cert = Certificate::new("geometric fixed points");
    let p = bu2();
    let sig = p.signature();
    for (g, _) in PHI_TABLE {
        let x: Poly<CoeffElt> = Poly::generator(sig, g).expect("generator");
        let via_eta = eta().apply(&x).map(|t| t.map(|q| q.map_scalars(q.signature(), coeff_phi)));
        match (phi(&x), via_eta) {
            (Ok(a), Ok(b)) => cert.check(format!("phibar({g}) = phi(eta({g}))"), &b, &a),
            (Err(e), _) | (_, Err(e)) => cert.fail(g, "agreement", e),
        }
    }
    for r in fixed_system().rules() {
        let lhs = Poly::monomial(sig, r.lhs, FixedScalar::one());
        let name = format!("{} holds after phibar", r.name);
        match (phibar().apply(&lhs), phibar().apply(&r.rhs)) {
            (Ok(a), Ok(b)) => cert.check(name, &a, &b),
            (Err(e), _) | (_, Err(e)) => cert.fail(name, "equal images", e),
        }
    }
    for (src, want) in PHI_DERIVED {
        let name = format!("phibar({src})");
        let r = parse_fixed(src).and_then(|x| phibar().apply(&x));
        let want = parse_fixed_triple(want).expect("derived table");
        match r {
            Ok(got) => cert.check(name, &want, &got),
            Err(e) => cert.fail(name, want, e),
        }
    }
    for (t, src) in PSI_TABLE {
        let name = format!("phibar(psi{t})");
        let want = parse_fixed_triple(t).expect("psi table");
        match parse_fixed(src).and_then(|x| phibar().apply(&x)) {
            Ok(got) => cert.check(name, &want, &got),
            Err(e) => cert.fail(name, want, e),
        }
    }
    cert
}

/// A basis monomial with its fixed-point image, `e` and zetas set to one.
#[derive(Clone, Debug, Serialize)]
pub struct FixedRow {
    pub monomial: String,
    pub position: Ro2Grading,
    pub fixed: String,
    #[serde(skip)]
    pub image: Triple<i64>,
}

pub fn fixed_sets_of_basis(pres: &Presentation, page: Grading, a_max: i64) -> Result<Vec<FixedRow>> {
    enumerate_basis(pres, page, a_max)
        .into_iter()
        .map(|b| {
            let x = Poly::monomial(pres.signature(), b.monomial, CoeffElt::one());
            let image = forget_fixed(&phi(&x)?);
            Ok(FixedRow { monomial: b.name, position: b.position, fixed: image.to_string(), image })
        })
        .collect()
}
