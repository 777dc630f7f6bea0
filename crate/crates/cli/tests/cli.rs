use std::path::PathBuf;
use std::process::{Command, Output};

fn bu2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bu2")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn normal_form_and_trace() {
    let o = bu2(&["nf", "z0*z1*z2*cxl"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "xi*cxl");
    let o = bu2(&["nf", "--trace", "z0^2*z1*z2^2*cl"]);
    assert!(stdout(&o).lines().next().unwrap().starts_with("R"));
}

#[test]
fn json_output_parses() {
    let o = bu2(&["--format", "json", "nf", "z1*cxl"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["normal_form"], "(-1 + g)*z0*z2*cl + e^2");
    assert_eq!(v["steps"].as_array().unwrap().len(), 1);
}

#[test]
fn restrictions() {
    assert_eq!(stdout(&bu2(&["rho", "cl"])).trim(), "c1*z1");
    let eta = stdout(&bu2(&["eta", "z0"]));
    assert!(eta.starts_with('('), "{eta}");
    let phi = stdout(&bu2(&["phi", "cl*cxl"]));
    assert!(phi.lines().nth(1).unwrap().contains("x2 + x1"), "{phi}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bu2(&["nf", "z0*("]).status.code(), Some(2));
    assert_eq!(bu2(&["nf", "q7"]).status.code(), Some(2));
    assert_eq!(bu2(&["bogus"]).status.code(), Some(2));
    assert_eq!(bu2(&["charnum", "--manifold", "X99"]).status.code(), Some(2));
}

#[test]
fn unsupported_queries_exit_one() {
    let o = bu2(&["charnum", "--manifold", "X21", "--class", "cxw"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no pullback"));
}

#[test]
fn pages_and_bases() {
    let grid = stdout(&bu2(&["page", "--coset", "0", "--amax", "4"]));
    assert!(grid.contains("a=0   0s:1  2s:1  4s:1"), "{grid}");
    let basis = stdout(&bu2(&["basis", "--page", "O1 + 2O2", "--amax", "0"]));
    assert_eq!(basis.lines().count(), 1);
    let empty = stdout(&bu2(&["page", "--coset", "0", "--amax", "-1"]));
    assert!(empty.contains("(empty)"));
}

#[test]
fn units_and_duals() {
    let o = bu2(&["--format", "json", "units"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["units"].as_array().unwrap().len(), 16);
    let d = stdout(&bu2(&["dualize", "cw"]));
    assert_eq!(d.trim(), "-einv^2*k*z0*z2*cl*cw + cw");
}

#[test]
fn characteristic_numbers() {
    let o = bu2(&["charnum", "--manifold", "X11", "--class", "z0*cw^2"]);
    assert!(stdout(&o).starts_with("z0*cw^2[X11] = 2*e^2"));
    let o = bu2(&["--format", "json", "charnum", "--manifold", "X30", "--against", "X21"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["distinguished"], true);
    let w = v["witnesses"].as_array().unwrap();
    assert!(w.iter().any(|x| x["class"] == "z2^2*cl^2*cxl" && x["left"] == "9*e^2" && x["right"] == "3*e^2"));
}

#[test]
fn fixture_directory_override() {
    let src = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures");
    let dir = std::env::temp_dir().join(format!("bu2-fixtures-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let text = std::fs::read_to_string(src.join("x20.json")).unwrap();
    std::fs::write(dir.join("line.json"), text.replace("\"X20\"", "\"Line\"")).unwrap();
    let d = dir.to_str().unwrap();
    let o = bu2(&["--fixtures", d, "charnum", "--manifold", "Line", "--class", "cw"]);
    assert!(stdout(&o).starts_with("cw[Line] = 2"), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(bu2(&["--fixtures", d, "charnum", "--manifold", "X20"]).status.code(), Some(2));

    std::fs::write(dir.join("zbroken.json"), "{ \"name\": 3 }").unwrap();
    assert_eq!(bu2(&["--fixtures", d, "charnum", "--manifold", "Line"]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_all_passes() {
    let o = bu2(&["verify-all"]);
    assert!(o.status.success());
    assert!(stdout(&o).trim_end().ends_with("all certificates passed"));
}
