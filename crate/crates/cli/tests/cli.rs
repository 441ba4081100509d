use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const QUATERNIONS: &str = r#"{"form": "gamma", "gammas": ["-1", "-1"], "level": 2}"#;

fn cdpoly() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cdpoly"));
    cmd.env_remove("CDPOLY_TOL");
    cmd
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn poly(dir: &TempDir, name: &str, scalar: &str, algebra: &str, coeffs: &str) -> PathBuf {
    write(
        dir,
        name,
        &format!(r#"{{"algebra": {algebra}, "scalar": "{scalar}", "coeffs": {coeffs}}}"#),
    )
}

fn quaternion_cubic(dir: &TempDir) -> PathBuf {
    poly(
        dir,
        "cubic.json",
        "rational",
        QUATERNIONS,
        r#"[["1","0","0","0"], ["0","1","-1","1"], ["0","-1","-1","-1"], ["1","0","0","0"]]"#,
    )
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn arg(p: &Path) -> &std::ffi::OsStr {
    p.as_os_str()
}

#[test]
fn eval_finds_the_root_k() {
    let dir = TempDir::new().unwrap();
    let f = quaternion_cubic(&dir);
    let k = write(
        &dir,
        "k.json",
        &format!(r#"{{"algebra": {QUATERNIONS}, "scalar": "rational", "coeffs": ["0","0","0","1"]}}"#),
    );
    let out = json(&run(cdpoly()
        .args(["eval", "--companion", "--poly"])
        .arg(arg(&f))
        .arg("--at")
        .arg(arg(&k))));
    assert_eq!(out["value"], serde_json::json!(["0", "0", "0", "0"]));
    assert_eq!(out["companion"], serde_json::json!(["1", "0", "3", "0", "3", "0", "1"]));
}

#[test]
fn eval_rejects_mismatched_algebras() {
    let dir = TempDir::new().unwrap();
    let f = quaternion_cubic(&dir);
    let oct = r#"{"form": "gamma", "gammas": ["-1", "-1", "-1"], "level": 3}"#;
    let x = write(
        &dir,
        "x.json",
        &format!(r#"{{"algebra": {oct}, "scalar": "rational", "coeffs": ["0","1","0","0","0","0","0","0"]}}"#),
    );
    let out = run(cdpoly().arg("eval").arg("--poly").arg(arg(&f)).arg("--at").arg(arg(&x)));
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn cubic_has_one_candidate_class_and_no_spherical_ones() {
    let dir = TempDir::new().unwrap();
    let f = quaternion_cubic(&dir);
    let out = json(&run(cdpoly().arg("spherical").arg("--poly").arg(arg(&f))));
    assert_eq!(out["classes"], serde_json::json!([]));
    assert_eq!(
        out["candidates"],
        serde_json::json!([{"trace": "0", "norm": "1", "multiplicity": 3}])
    );
}

#[test]
fn spherical_with_supplied_candidates() {
    let dir = TempDir::new().unwrap();
    // (x^2 + 1)(x^2 - 1) over the quaternions
    let f = poly(
        &dir,
        "f.json",
        "rational",
        QUATERNIONS,
        r#"[["-1","0","0","0"], ["0","0","0","0"], ["0","0","0","0"], ["0","0","0","0"], ["1","0","0","0"]]"#,
    );
    let c = write(
        &dir,
        "c.json",
        r#"{"classes": [["0", "1"], ["0", "2"]], "central": ["1", "-1", "3"]}"#,
    );
    let out = json(&run(cdpoly()
        .arg("spherical")
        .arg("--poly")
        .arg(arg(&f))
        .arg("--candidates")
        .arg(arg(&c))));
    let classes = out["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 1, "{out}");
    assert_eq!(classes[0]["norm"], "1");
    assert_eq!(out["central_roots"].as_array().unwrap().len(), 2, "{out}");
}

#[test]
fn bounds_of_the_cubic() {
    let dir = TempDir::new().unwrap();
    let f = quaternion_cubic(&dir);
    let out = json(&run(cdpoly().arg("bounds").arg("--poly").arg(arg(&f))));
    let r3 = out["r3"].as_f64().unwrap();
    assert!((r3 - (1.0 + 2.0 * 3f64.sqrt())).abs() < 1e-12);
    assert_eq!(out["monic"], true);
}

#[test]
fn non_monic_sedenion_bounds_are_refused() {
    let dir = TempDir::new().unwrap();
    let sed = r#"{"form": "gamma", "gammas": ["-1", "-1", "-1", "-1"], "level": 4}"#;
    let zero = format!("[{}]", vec!["0"; 16].join(","));
    let mut a = vec!["0"; 16];
    a[1] = "1";
    a[10] = "1";
    let mut one = vec!["0"; 16];
    one[0] = "1";
    let coeffs = format!("[{zero}, [{}], [{}]]", one.join(","), a.join(","));
    let f = poly(&dir, "f.json", "float64", sed, &coeffs);
    let out = run(cdpoly().arg("bounds").arg("--poly").arg(arg(&f)));
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn rho_and_glucas_of_the_cubic() {
    let dir = TempDir::new().unwrap();
    let f = quaternion_cubic(&dir);
    let rho = json(&run(cdpoly().arg("rho").arg("--poly").arg(arg(&f))));
    assert!((rho["rho"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(rho["partial"], false);
    let gl = json(&run(cdpoly().arg("glucas").arg("--poly").arg(arg(&f))));
    assert_eq!(gl["passed"], true);
}

#[test]
fn jensen_needs_real_coefficients() {
    let dir = TempDir::new().unwrap();
    let f = quaternion_cubic(&dir);
    assert_eq!(
        run(cdpoly().arg("jensen").arg("--poly").arg(arg(&f))).status.code(),
        Some(3)
    );

    let g = poly(
        &dir,
        "g.json",
        "float64",
        QUATERNIONS,
        "[[-1,0,0,0], [1,0,0,0], [-1,0,0,0], [1,0,0,0]]",
    );
    let out = json(&run(cdpoly().arg("jensen").arg("--poly").arg(arg(&g))));
    assert_eq!(out["passed"], true, "{out}");
    let out = json(&run(cdpoly().args(["jensen", "--companion", "--poly"]).arg(arg(&g))));
    assert_eq!(out["passed"], true, "{out}");
}

#[test]
fn snail_writes_csv_and_svg() {
    let dir = TempDir::new().unwrap();
    let f = poly(
        &dir,
        "f.json",
        "float64",
        QUATERNIONS,
        "[[0,0,0,0], [1,0,0,0], [0,1,0,0]]",
    );
    let csv = dir.path().join("out.csv");
    let svg = dir.path().join("out.svg");
    let out = json(&run(cdpoly()
        .args(["snail", "--slices", "8", "--seed", "3", "--poly"])
        .arg(arg(&f))
        .arg("--csv")
        .arg(arg(&csv))
        .arg("--svg")
        .arg(arg(&svg))));
    assert_eq!(out["slices"], 8);

    let mut reader = csv::Reader::from_path(&csv).unwrap();
    let headers: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        headers,
        [
            "slice_index",
            "I_0",
            "I_1",
            "I_2",
            "I_3",
            "vertex_index",
            "re",
            "im_along_I"
        ]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let slices: std::collections::BTreeSet<&str> = rows.iter().map(|r| r.get(0).unwrap()).collect();
    assert_eq!(slices.len(), 8);

    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg") && text.trim_end().ends_with("</svg>"));
    assert!(text.contains("<polyline") || text.contains("<polygon"));
}

#[test]
fn snail_is_reproducible_for_a_seed() {
    let dir = TempDir::new().unwrap();
    let f = quaternion_cubic(&dir);
    let go = |seed: &str| {
        let csv = dir.path().join(format!("s{seed}.csv"));
        json(&run(cdpoly()
            .args(["snail", "--seed", seed, "--poly"])
            .arg(arg(&f))
            .arg("--csv")
            .arg(arg(&csv))));
        std::fs::read_to_string(csv).unwrap()
    };
    assert_eq!(go("7"), go("7"));
}

#[test]
fn unwritable_output_is_an_io_error() {
    let dir = TempDir::new().unwrap();
    let f = quaternion_cubic(&dir);
    let bad = dir.path().join("no/such/dir/out.svg");
    let out = run(cdpoly()
        .args(["snail", "--poly"])
        .arg(arg(&f))
        .arg("--svg")
        .arg(arg(&bad)));
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn missing_and_malformed_inputs() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(
        run(cdpoly().arg("bounds").arg("--poly").arg(arg(&missing)))
            .status
            .code(),
        Some(4)
    );
    let bad = write(&dir, "bad.json", "{ not json");
    assert_eq!(
        run(cdpoly().arg("bounds").arg("--poly").arg(arg(&bad))).status.code(),
        Some(2)
    );
    let short = poly(&dir, "short.json", "rational", QUATERNIONS, r#"[["1","0"]]"#);
    assert_eq!(
        run(cdpoly().arg("bounds").arg("--poly").arg(arg(&short))).status.code(),
        Some(2)
    );
    let zero_gamma = poly(
        &dir,
        "z.json",
        "rational",
        r#"{"form": "gamma", "gammas": ["0"], "level": 1}"#,
        r#"[["1","0"]]"#,
    );
    assert_eq!(
        run(cdpoly().arg("bounds").arg("--poly").arg(arg(&zero_gamma)))
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(cdpoly().arg("frobnicate")).status.code(), Some(2));
}

#[test]
fn tolerance_from_environment_and_flag() {
    let dir = TempDir::new().unwrap();
    let f = quaternion_cubic(&dir);
    let out = run(cdpoly().env("CDPOLY_TOL", "nope").arg("rho").arg("--poly").arg(arg(&f)));
    assert_eq!(out.status.code(), Some(2));
    // the flag overrides a bad environment value
    let out = run(cdpoly()
        .env("CDPOLY_TOL", "nope")
        .args(["--tol", "1e-8", "rho", "--poly"])
        .arg(arg(&f)));
    assert!(out.status.success());
    let out = run(cdpoly().args(["rho", "--tol", "-1", "--poly"]).arg(arg(&f)));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_on_this_build() {
    let out = run(cdpoly().args(["verify", "--suite", "paper"]));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{text}{}", String::from_utf8_lossy(&out.stderr));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_catches_a_flipped_doubling_sign() {
    let out = run(cdpoly().args(["verify", "--suite", "paper", "--mutant", "doubling-sign"]));
    assert_eq!(out.status.code(), Some(1));
    let table = String::from_utf8_lossy(&out.stderr);
    assert!(table.contains("FAIL  sedenion zero divisors"), "{table}");
}

#[test]
fn verify_catches_a_skipped_centrality_check() {
    let out = run(cdpoly().args(["verify", "--suite", "paper", "--mutant", "skip-centrality"]));
    assert_eq!(out.status.code(), Some(1));
    let table = String::from_utf8_lossy(&out.stderr);
    assert!(table.contains("FAIL  companion centrality check"), "{table}");
}

fn sedenion_documents(dir: &TempDir) -> (PathBuf, PathBuf) {
    use cdpoly::{CDElement, CDParams, CDPolynomial, Rational, Scalar};
    use cdpoly_cli::doc::{ElementDocument, PolynomialDocument};
    let s = CDParams::<Rational>::main_sequence(4);
    let a = &CDElement::basis(&s, 1) + &CDElement::basis(&s, 10);
    let b = &CDElement::basis(&s, 7) + &CDElement::basis(&s, 12);
    let g = CDPolynomial::new(
        &s,
        vec![CDElement::scalar(&s, Rational::from_i64(2)), a, CDElement::one(&s)],
    )
    .unwrap();
    let g_path = write(dir, "g.json", &PolynomialDocument::from_poly(&g).to_json());
    let b_path = write(
        dir,
        "b.json",
        &serde_json::to_string(&ElementDocument::from_element(&b)).unwrap(),
    );
    (g_path, b_path)
}

#[test]
fn sedenion_quadratic_vanishes_at_b() {
    let dir = TempDir::new().unwrap();
    let (g, b) = sedenion_documents(&dir);
    let out = json(&run(cdpoly()
        .args(["eval", "--companion", "--poly"])
        .arg(arg(&g))
        .arg("--at")
        .arg(arg(&b))));
    assert!(out["value"].as_array().unwrap().iter().all(|v| v == "0"), "{out}");
    assert_eq!(out["companion"], serde_json::json!(["4", "0", "6", "0", "1"]));
    let cv = out["companion_value"].as_array().unwrap();
    assert_eq!(cv[0], "-4");
    assert!(cv[1..].iter().all(|v| v == "0"));

    let out = json(&run(cdpoly().arg("spherical").arg("--poly").arg(arg(&g))));
    assert_eq!(out["classes"], serde_json::json!([]));
}

#[test]
fn linear_polynomial_has_a_central_root() {
    let dir = TempDir::new().unwrap();
    let f = poly(
        &dir,
        "f.json",
        "rational",
        QUATERNIONS,
        r#"[["-3","0","0","0"], ["1","0","0","0"]]"#,
    );
    let out = json(&run(cdpoly().arg("spherical").arg("--poly").arg(arg(&f))));
    assert_eq!(out["classes"], serde_json::json!([]));
    assert_eq!(
        out["central_roots"],
        serde_json::json!([{"value": "3", "multiplicity": 1}]),
        "{out}"
    );
}

#[test]
fn real_coefficients_give_identical_slices() {
    let dir = TempDir::new().unwrap();
    let f = poly(
        &dir,
        "f.json",
        "float64",
        QUATERNIONS,
        "[[2,0,0,0], [0,0,0,0], [-1,0,0,0], [1,0,0,0]]",
    );
    let csv = dir.path().join("out.csv");
    json(&run(cdpoly()
        .args(["snail", "--slices", "6", "--poly"])
        .arg(arg(&f))
        .arg("--csv")
        .arg(arg(&csv))));
    let mut per_slice: std::collections::BTreeMap<String, Vec<(f64, f64)>> = Default::default();
    for rec in csv::Reader::from_path(&csv).unwrap().records() {
        let rec = rec.unwrap();
        let re: f64 = rec.get(6).unwrap().parse().unwrap();
        let im: f64 = rec.get(7).unwrap().parse().unwrap();
        per_slice
            .entry(rec.get(0).unwrap().to_string())
            .or_default()
            .push((re, im));
    }
    let hulls: Vec<_> = per_slice.into_values().collect();
    assert_eq!(hulls.len(), 6);
    for h in &hulls[1..] {
        assert_eq!(h.len(), hulls[0].len());
        for (p, q) in h.iter().zip(&hulls[0]) {
            assert!(
                (p.0 - q.0).abs() < 1e-9 && (p.1 - q.1).abs() < 1e-9,
                "{h:?} vs {:?}",
                hulls[0]
            );
        }
    }
}
