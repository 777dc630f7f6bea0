use bu2_core::charnum::{
    builtin, bundle_grading, characteristic_number, distinguishing_classes, relevant_classes, tangent_pullback,
};
use bu2_core::coeff::{coeff_phi, coeff_rho};
use bu2_core::presentation::{bu1, bu2};
use bu2_core::ring::TargetRing;
use bu2_core::{CoeffElt, Scalar};

fn number(manifold: &str, class: &str) -> CoeffElt {
    let m = builtin(manifold).unwrap();
    let c = m.presentation().parse(class).unwrap();
    characteristic_number(m, &c).unwrap()
}

fn scalar(text: &str) -> CoeffElt {
    bu2().parse(text).unwrap().as_constant().unwrap()
}

const SURFACE_CLASSES: [&str; 6] =
    ["z0*z2^3*cl^2", "cw", "z2^2*cl^2*cxl", "z0*z2*cl*cw", "z0^2*z1*cw^2", "z0*z2^3*cl^3*cxl"];

#[test]
fn line_numbers() {
    for (m, want) in [("X20", ["2", "0"]), ("X11", ["2", "2*e^2"])] {
        for (class, w) in ["cw", "z0*cw^2"].iter().zip(want) {
            assert_eq!(number(m, class), scalar(w), "{class}[{m}]");
        }
    }
}

#[test]
fn surface_numbers() {
    let x30 = ["9*xi", "3", "9*e^2", "0", "0", "0"];
    let x21 = ["9*xi", "3", "3*e^2", "2*e^2", "e^4", "3*e^4"];
    for (m, want) in [("X30", x30), ("X21", x21)] {
        for (class, w) in SURFACE_CLASSES.iter().zip(want) {
            assert_eq!(number(m, class), scalar(w), "{class}[{m}]");
        }
    }
}

#[test]
fn recorded_pullbacks() {
    let x21 = builtin("X21").unwrap();
    let c = bu2().parse("z0^2*z1*cw^2").unwrap();
    assert_eq!(tangent_pullback(x21, &c).unwrap(), x21.parse("e^4*z0*cd^2").unwrap());
    let x20 = builtin("X20").unwrap();
    let c = bu1().parse("z0*cw^2").unwrap();
    assert!(tangent_pullback(x20, &c).unwrap().is_zero());
}

#[test]
fn pullback_is_multiplicative_on_truncated_rings() {
    for name in ["X20", "X30"] {
        let m = builtin(name).unwrap();
        let pres = m.presentation();
        let sig = pres.signature();
        let usable: Vec<&str> = sig
            .generators()
            .iter()
            .map(|g| g.name.as_str())
            .filter(|g| !g.starts_with("cx") || (*g == "cxl" && name == "X30"))
            .collect();
        for a in &usable {
            for b in &usable {
                let x = pres.parse(a).unwrap();
                let y = pres.parse(b).unwrap();
                let xy = pres.normal_form(&(&x * &y));
                let lhs = tangent_pullback(m, &xy).unwrap();
                let prod = &tangent_pullback(m, &x).unwrap() * &tangent_pullback(m, &y).unwrap();
                assert_eq!(lhs, m.ring.normalize(prod), "{name}: {a}*{b}");
            }
        }
    }
}

// The nonequivariant restriction of each number is the classical one:
// c1 of the line is 2, c1^2 and c2 of the plane are 9 and 3, and the
// remaining classes restrict to zero.
#[test]
fn restriction_gives_classical_numbers() {
    let forget = |x: &CoeffElt| coeff_rho(x).terms().map(|(_, c)| c).sum::<i64>();
    for m in ["X20", "X11"] {
        assert_eq!(forget(&number(m, "cw")), 2);
        assert_eq!(forget(&number(m, "z0*cw^2")), 0);
    }
    for m in ["X30", "X21"] {
        let got: Vec<i64> = SURFACE_CLASSES.iter().map(|c| forget(&number(m, c))).collect();
        assert_eq!(got, [9, 3, 0, 0, 0, 0], "{m}");
    }
}

// Fixed points of an evaluation on the line with two isolated fixed points
// add the evaluations at each of them.
#[test]
fn fixed_points_of_evaluations() {
    let x11 = builtin("X11").unwrap();
    let forget = |x: &CoeffElt| coeff_phi(x).terms().map(|(_, c)| c).sum::<i64>();
    let one = bu2_core::charnum::evaluate(x11, &x11.parse("1").unwrap()).unwrap();
    assert_eq!(forget(&one), 2);
    let top = bu2_core::charnum::evaluate(x11, &x11.parse("z0*cd").unwrap()).unwrap();
    assert_eq!(forget(&top), 1);
}

#[test]
fn euler_characteristic_lies_in_degree_zero() {
    for m in ["X20", "X11", "X30", "X21"] {
        let g = number(m, "cw").gradings();
        assert!(g.iter().all(|g| g.a == 0 && g.b == 0), "{m}");
    }
}

#[test]
fn bordism_witnesses() {
    let w = distinguishing_classes(builtin("X20").unwrap(), builtin("X11").unwrap()).unwrap();
    assert_eq!(w.len(), 1);
    assert_eq!((w[0].class.as_str(), w[0].left.as_str(), w[0].right.as_str()), ("z0*cw^2", "0", "2*e^2"));

    let w = distinguishing_classes(builtin("X30").unwrap(), builtin("X21").unwrap()).unwrap();
    let sq = w.iter().find(|w| w.class == "z2^2*cl^2*cxl").unwrap();
    assert_eq!((sq.left.as_str(), sq.right.as_str()), ("9*e^2", "3*e^2"));
    assert_eq!(w.len(), 4);

    let x30 = builtin("X30").unwrap();
    assert!(distinguishing_classes(x30, x30).unwrap().is_empty());
}

#[test]
fn relevant_lists_are_stable_under_larger_windows() {
    for n in [1, 2] {
        let d = bundle_grading(n).unwrap();
        assert_eq!(relevant_classes(d, 0).unwrap(), relevant_classes(d, 6).unwrap());
    }
}
