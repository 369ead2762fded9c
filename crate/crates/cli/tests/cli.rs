use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superlie")).args(args).output().expect("binary runs")
}

fn text(args: &[&str]) -> (i32, String) {
    let o = run(args);
    (o.status.code().expect("exit code"), String::from_utf8(o.stdout).expect("utf-8"))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--out", "json"];
    all.extend_from_slice(args);
    let o = run(&all);
    let v: Value = serde_json::from_slice(&o.stdout).expect("json report");
    assert_eq!(v["exit_code"].as_i64().unwrap() as i32, o.status.code().unwrap());
    (o.status.code().unwrap(), v)
}

/// The `(even, odd)` of the first dim row with this label.
fn dim(report: &Value, label: &str) -> (u64, u64) {
    for s in report["results"].as_array().unwrap() {
        for r in s["rows"].as_array().unwrap() {
            if r["kind"] == "dim" && r["label"] == label {
                return (r["even"].as_u64().unwrap(), r["odd"].as_u64().unwrap());
            }
        }
    }
    panic!("no row {label:?} in {report:#}");
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

const CATALOG: [&str; 13] = [
    "abelian10",
    "abelian01",
    "abelian11",
    "abelian21",
    "heis",
    "solvable2",
    "gl11",
    "sl21",
    "sl30",
    "q",
    "dual",
    "grassmann",
    "m11",
];

#[test]
fn bundled_corpus_matches_the_catalog() {
    for name in CATALOG {
        let o = run(&["export", name]);
        assert_eq!(o.status.code(), Some(0));
        let exported = String::from_utf8(o.stdout).unwrap();
        let on_disk = fs::read_to_string(corpus(&format!("{name}.json"))).unwrap();
        assert!(exported.starts_with(&on_disk), "{name}.json is stale");
        assert_eq!(text(&["check", &corpus(&format!("{name}.json"))]).0, 0, "{name}");
    }
}

#[test]
fn check_reports_class_and_flags() {
    let (code, out) = text(&["check", &corpus("heis.json")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("certified, dim (3|0), class 2"), "{out}");
    let (code, out) = text(&["check", &corpus("dual.json")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("associative, unital, supercommutative"), "{out}");
}

#[test]
fn tampered_file_prints_a_witness_triple() {
    let (code, out) = text(&["check", &corpus("tampered_heis.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("graded Jacobi fails at (x, y, z)"), "{out}");
}

#[test]
fn uce_kernel_matches_h2() {
    for name in ["sl21.json", "sl30.json"] {
        let (code, r) = json(&["tensor", &corpus(name), "--uce"]);
        assert_eq!(code, 0, "{r:#}");
        assert_eq!(dim(&r, "kernel"), dim(&r, "H₂"));
    }
    let (code, r) = json(&["uce", &corpus("heis.json")]);
    assert_eq!(code, 1);
    assert!(r["error"].as_str().unwrap().contains("not perfect"));
}

#[test]
fn abelian_pair_with_trivial_actions() {
    let (code, r) = json(&["tensor", &corpus("abelian11.json"), &corpus("abelian21.json")]);
    assert_eq!(code, 0);
    // (1|1) ⊗ (2|1) as super vector spaces
    assert_eq!(dim(&r, "M⊗N"), (3, 3));
    assert_eq!(dim(&r, "Ker μ"), (3, 3));
}

#[test]
fn incompatible_actions_exit_one_with_witness() {
    let (code, out) = text(&[
        "tensor",
        &corpus("solvable2.json"),
        &corpus("abelian10.json"),
        "--act-mn",
        &corpus("solvable2_on_line.json"),
        "--act-nm",
        &corpus("line_on_solvable2.json"),
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("compatibility") && out.contains("fails at ("), "{out}");
}

#[test]
fn explicit_adjoint_actions_give_the_tensor_square() {
    let adj = corpus("solvable2_adjoint.json");
    let sol = corpus("solvable2.json");
    let (_, a) = json(&["tensor", &sol, &sol, "--act-mn", &adj, "--act-nm", &adj]);
    let (_, b) = json(&["tensor", &sol]);
    assert_eq!(a["results"], b["results"]);
}

#[test]
fn exterior_square_of_heis() {
    let (code, r) = json(&["exterior", &corpus("heis.json")]);
    assert_eq!(code, 0);
    let t = dim(&r, "M⊗N");
    let (sq, w) = (dim(&r, "M□M"), dim(&r, "M∧M"));
    assert_eq!((sq.0 + w.0, sq.1 + w.1), t);
}

#[test]
fn homology_of_heis() {
    let (code, out) = text(&["homology", &corpus("heis.json"), "-n", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("H₀=(1|0), H₁=(2|0), H₂=(2|0)"), "{out}");
}

#[test]
fn hopf_formula_and_ce_agree_on_heis() {
    for pres in ["heis_presentation.json", "heis_relators.json"] {
        let (code, r) = json(&["homology", &corpus("heis.json"), "--hopf", &corpus(pres), "--class", "2"]);
        assert_eq!(code, 0, "{r:#}");
        assert_eq!(dim(&r, "Hopf formula"), (2, 0));
        assert_eq!(dim(&r, "Chevalley–Eilenberg"), (2, 0));
    }
    let (code, r) = json(&["hopf", &corpus("heis_presentation.json"), "--class", "1"]);
    assert_eq!(code, 1, "{r:#}");
    assert!(r["error"].as_str().unwrap().contains("class above 1"));
}

#[test]
fn nonabelian_homology_of_identity_is_h2() {
    let (code, r) = json(&["homology", &corpus("sl21.json"), "--nonabelian", "identity"]);
    assert_eq!(code, 0, "{r:#}");
    assert_eq!(dim(&r, "𝓗₀"), (0, 0));
    assert_eq!(dim(&r, "𝓗₁"), dim(&r, "H₂"));
}

#[test]
fn nonabelian_homology_of_a_module_is_ordinary_homology() {
    let (code, r) = json(&["nahomology", &corpus("solvable2.json"), &corpus("solvable2_line_crossed.json")]);
    assert_eq!(code, 0, "{r:#}");
    assert_eq!(dim(&r, "𝓗₀"), dim(&r, "H₀(P,M)"));
    assert_eq!(dim(&r, "𝓗₁"), dim(&r, "H₁(P,M)"));
    let (code, r) = json(&["nahomology", &corpus("heis.json"), &corpus("heis_center_crossed.json")]);
    assert_eq!(code, 0);
    // ν: heis ⊗ Z → Z is zero, so 𝓗₀ = Z and 𝓗₁ = heis ⊗ Z = heis^ab ⊗ Z
    assert_eq!(dim(&r, "𝓗₀"), (1, 0));
    assert_eq!(dim(&r, "𝓗₁"), (2, 0));
}

#[test]
fn module_coefficients() {
    let (code, r) = json(&["homology", &corpus("solvable2.json"), "-n", "1", "-m", &corpus("solvable2_weight.json")]);
    assert_eq!(code, 0);
    // a acts invertibly on the line, so everything vanishes
    assert_eq!(dim(&r, "H₀"), (0, 0));
    assert_eq!(dim(&r, "H₁"), (0, 0));
}

#[test]
fn cyclic_homology_examples() {
    let (code, r) = json(&["cyclic", &corpus("q.json"), "--sixterm"]);
    assert_eq!(code, 0, "{r:#}");
    assert_eq!(dim(&r, "HC₀"), (1, 0));
    assert_eq!(dim(&r, "HC₁"), (0, 0));
    let (code, out) = text(&["cyclic-sixterm", &corpus("m11.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("six-term sequence certified") && out.contains("exact at all"), "{out}");
    let (code, r) = json(&["cyclic", &corpus("grassmann.json")]);
    assert_eq!(code, 0);
    assert_eq!(dim(&r, "HC₁"), (1, 0));
    assert_eq!(dim(&r, "HC₁^M"), (1, 0));
    assert!(serde_json::to_string(&r).unwrap().contains("supercommutative: HC₁ = HC₁^M"));
}

#[test]
fn non_unital_algebra_is_refused() {
    let path = scratch("null.json");
    fs::write(
        &path,
        r#"{"name":"null","field":"Q","kind":"assoc","basis":[{"label":"n","parity":"even"}],"table":[]}"#,
    )
    .unwrap();
    let (code, r) = json(&["cyclic", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(r["error"].as_str().unwrap().contains("not unital"));
}

#[test]
fn verify_suites() {
    let (code, out) = text(&["verify", "d3-lemma"]);
    assert_eq!(code, 0, "{out}");
    for name in ["abelian21", "heis", "gl11", "sl21"] {
        assert!(out.contains(name), "{out}");
    }
    let (code, r) = json(&["verify", "all"]);
    assert_eq!(code, 0, "{r:#}");
    assert_eq!(r["results"].as_array().unwrap().len(), 9);
    assert_eq!(text(&["verify-sequence"]).0, 0);
}

#[test]
fn emitted_tensor_product_recertifies() {
    let path = scratch("gl11_square.json");
    let (code, r) = json(&["tensor", &corpus("gl11.json"), "--emit", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, c) = json(&["check", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{c:#}");
    assert_eq!(dim(&c, "dimension"), dim(&r, "M⊗N"));
}

#[test]
fn reports_are_deterministic() {
    let (sl21, m11) = (corpus("sl21.json"), corpus("m11.json"));
    for args in [
        vec!["--out", "json", "tensor", &sl21, "--exterior"],
        vec!["--out", "json", "cyclic", &m11, "--sixterm"],
        vec!["--out", "json", "verify", "snake"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}

#[test]
fn input_errors_exit_two() {
    let bad = scratch("extra_field.json");
    fs::write(&bad, r#"{"name":"x","field":"Q","kind":"lie","basis":[],"table":[],"colour":1}"#).unwrap();
    assert_eq!(text(&["check", bad.to_str().unwrap()]).0, 2);
    let label = scratch("bad_label.json");
    fs::write(
        &label,
        r#"{"name":"x","field":"Q","kind":"lie","basis":[{"label":"a","parity":"even"}],
            "table":[{"left":"a","right":"b","value":[]}]}"#,
    )
    .unwrap();
    assert_eq!(text(&["check", label.to_str().unwrap()]).0, 2);
    let coeff = scratch("bad_coeff.json");
    fs::write(
        &coeff,
        r#"{"name":"x","field":"Q","kind":"lie","basis":[{"label":"a","parity":"even"}],
            "table":[{"left":"a","right":"a","value":[["a","0.5"]]}]}"#,
    )
    .unwrap();
    assert_eq!(text(&["check", coeff.to_str().unwrap()]).0, 2);
    assert_eq!(text(&["check", "/nonexistent/file.json"]).0, 2);
    assert_eq!(text(&["verify", "nonsense"]).0, 2);
    assert_eq!(text(&["frobnicate"]).0, 2);
}

#[test]
fn field_mismatch_is_an_input_error() {
    let f5 = scratch("abelian10_f5.json");
    let text5 = fs::read_to_string(corpus("abelian10.json")).unwrap().replace("\"Q\"", "\"Fp:5\"");
    fs::write(&f5, text5).unwrap();
    assert_eq!(text(&["check", f5.to_str().unwrap()]).0, 0);
    let (code, r) = json(&["tensor", &corpus("abelian10.json"), f5.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(r["error"].as_str().unwrap().contains("field mismatch"));
}

#[test]
fn inputs_are_digested() {
    let (_, r) = json(&["nahomology", &corpus("heis.json"), &corpus("heis_center_crossed.json")]);
    let inputs = r["inputs"].as_array().unwrap();
    assert_eq!(inputs.len(), 4);
    assert!(inputs.iter().all(|i| i["sha256"].as_str().unwrap().len() == 64));
}
