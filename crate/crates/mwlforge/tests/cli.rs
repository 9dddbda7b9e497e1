use std::process::{Command, Output};

use mwlforge::cli::main_with;
use mwlforge::curvefile::CurveSet;
use mwlforge::data::{DATA_ENV, EMBEDDED};
use mwlforge::report::maps_report;

fn bin(args: &[&str], data: Option<&std::path::Path>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_mwlforge"));
    c.args(args).env_remove(DATA_ENV);
    if let Some(p) = data {
        c.env(DATA_ENV, p);
    }
    c.output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    main_with(std::iter::once("mwlforge").chain(args.iter().copied()))
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["frame", "--lattice", "D64"]), 0);
    assert_eq!(code(&["frame", "--lattice", "a92d6", "--embedding", "i2"]), 0);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["frame", "--lattice", "E8"]), 2);
    assert_eq!(code(&["tables", "--lattice", "D64", "--embedding", "i2"]), 2);
    assert_eq!(code(&["qform", "--gram", "1,2;3", "--against", "1"]), 2);
    assert_eq!(code(&["verify-maps", "--curves", "/nonexistent/curves.toml"]), 2);
    assert_eq!(code(&["fibers", "--model", "Ex"]), 2);
    assert_eq!(code(&["qform", "--gram", "1", "--against", "2", "--expect", "equivalent"]), 1);
    assert_eq!(code(&["qform", "--gram", "1", "--against", "2", "--expect", "inequivalent"]), 0);
}

#[test]
fn json_output_is_deterministic() {
    let a = bin(&["frame", "--lattice", "A92D6"], None);
    let b = bin(&["frame", "--lattice", "A92D6"], None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["root_type"], serde_json::json!(["A7", "A9"]));
    assert_eq!(v["discriminant"], "-12");
}

#[test]
fn error_record_on_stderr() {
    let o = bin(&["tables", "--fibration", "41"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(v["kind"], "bad_input");
    assert_eq!(v["exit_code"], 2);
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("frame.txt");
    let p = path.to_str().unwrap();
    assert_eq!(code(&["--format", "text", "--output", p, "frame", "--lattice", "D64"]), 0);
    let written = std::fs::read(&path).unwrap();
    let shown = bin(&["frame", "--lattice", "D64", "--format", "text"], None);
    assert_eq!(written, shown.stdout);
    assert!(String::from_utf8(written).unwrap().contains("A1 + D4 + D6 + D6"));
}

#[test]
fn data_file_override() {
    let dir = tempfile::tempdir().unwrap();
    let copy = dir.path().join("meets.json");
    std::fs::write(&copy, EMBEDDED).unwrap();
    let args = ["tables", "--fibration", "40bis"];
    let default = bin(&args, None);
    let same = bin(&args, Some(&copy));
    assert!(default.status.success());
    assert_eq!(default.stdout, same.stdout);

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"fibrations\": [").unwrap();
    assert_eq!(bin(&args, Some(&broken)).status.code(), Some(2));
    assert_eq!(bin(&args, Some(&dir.path().join("missing.json"))).status.code(), Some(2));

    let edited = dir.path().join("edited.json");
    let mut v: serde_json::Value = serde_json::from_str(EMBEDDED).unwrap();
    let fib = v["fibrations"].as_array_mut().unwrap().iter_mut().find(|f| f["name"] == "#36").unwrap();
    fib["sections"][1]["printed"]["height"] = "5/2".into();
    std::fs::write(&edited, serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(bin(&["tables", "--fibration", "36"], Some(&edited)).status.code(), Some(1));
}

#[test]
fn shipped_models_file_matches_builtin() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/models.toml");
    let file = CurveSet::read(std::path::Path::new(path)).unwrap();
    let builtin = CurveSet::builtin().unwrap();
    assert_eq!(file.curves.len(), builtin.curves.len());
    for b in &builtin.curves {
        let f = file.curve(&b.curve.name).unwrap();
        assert_eq!(f.curve.a, b.curve.a, "{}", b.curve.name);
        let mut fp = f.points.clone();
        let mut bp = b.points.clone();
        fp.sort_by(|x, y| x.0.cmp(&y.0));
        bp.sort_by(|x, y| x.0.cmp(&y.0));
        assert_eq!(fp, bp, "{}", b.curve.name);
    }
    assert_eq!(file.maps.len(), 3);
    assert_eq!(file.components.len(), 1);
    let r = maps_report(&file).unwrap();
    assert!(r.checks.iter().all(|c| c.pass), "{:?}", r.checks);
    assert_eq!(code(&["verify-maps", "--curves", path]), 0);
}
