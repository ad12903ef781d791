use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fusion_core::families::{gen_ising, gen_moore_read};
use fusion_core::group::GroupTable;
use fusion_core::io::{parse, serialize, serialize_group_table};
use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fusionring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn keys(v: &Value) -> Vec<&str> {
    let mut k: Vec<&str> = v.as_object().expect("object").keys().map(String::as_str).collect();
    k.sort_unstable();
    k
}

#[test]
fn generate_then_verify_every_family() {
    let dir = tempfile::tempdir().unwrap();
    let table = write(&dir, "s3.txt", &serialize_group_table(&GroupTable::symmetric(3)));
    let table_param = format!("table={}", s(&table));
    let groups = ["1", "2", "4", "2,2", "2,4", "3,3", "S3", "D4", "Q8"];
    let mut cases: Vec<Vec<String>> = Vec::new();
    for family in ["pointed", "ty"] {
        for g in groups {
            cases.push(vec![family.into(), format!("group={g}")]);
        }
        cases.push(vec![family.into(), table_param.clone()]);
    }
    for g in ["1", "2", "3", "2,2"] {
        for kappa in [0, 1, 2, 5] {
            cases.push(vec!["near_group".into(), format!("group={g}"), format!("kappa={kappa}")]);
        }
    }
    for n in (0..=10).chain([62]) {
        cases.push(vec!["verlinde".into(), format!("n={n}")]);
    }
    for family in ["moore_read", "ising", "yang_lee"] {
        cases.push(vec![family.into()]);
    }
    for params in [
        "group=4 subgroup=2 coset=1",
        "group=4 subgroup=1",
        "group=2,2 subgroup=1,0 coset=0,1",
        "group=2,4 subgroup=0,2;1,0 coset=0,1",
        "group=8 subgroup=4 coset=3",
        "group=3,3 subgroup=1,1 coset=2,0",
    ] {
        let mut c = vec!["gen_ty".to_string()];
        c.extend(params.split(' ').map(String::from));
        cases.push(c);
    }
    for key in ["S3", "D4", "Q8", "A4"] {
        cases.push(vec!["rep_corpus".into(), format!("key={key}")]);
    }

    for (n, case) in cases.iter().enumerate() {
        let out = dir.path().join(format!("ring{n}.txt"));
        let mut args: Vec<&str> = vec!["generate"];
        args.extend(case.iter().map(String::as_str));
        args.extend(["-o", s(&out)]);
        let g = run(&args);
        assert_eq!(code(&g), 0, "{case:?}: {}", stderr(&g));
        let v = run(&["verify", s(&out)]);
        assert_eq!(code(&v), 0, "{case:?}: {}", stdout(&v));
        let text = std::fs::read_to_string(&out).unwrap();
        assert!(text.contains(&format!("meta family {}", case[0])), "{case:?}");
    }
}

#[test]
fn generate_writes_to_stdout_without_output() {
    let out = run(&["generate", "ising"]);
    assert_eq!(code(&out), 0);
    assert_eq!(parse(&stdout(&out)).unwrap(), gen_ising());
}

#[test]
fn unknown_family_prints_usage() {
    let out = run(&["generate", "no_such_family"]);
    assert_eq!(code(&out), 2);
    let err = stderr(&out);
    assert!(err.contains("usage: fusionring generate"), "{err}");
    assert!(err.contains("verlinde"), "{err}");

    for bad in [&["generate", "verlinde"][..], &["generate", "verlinde", "n=x"], &["generate", "ising", "n=1"]] {
        let out = run(bad);
        assert_eq!(code(&out), 2, "{bad:?}");
        assert!(stderr(&out).contains("usage:"), "{bad:?}");
    }
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(&dir, "good.txt", &serialize(&gen_moore_read()));
    assert_eq!(code(&run(&["verify", s(&good)])), 0);

    // X and X' declared self-dual
    let text = serialize(&gen_moore_read()).replace("dual 0 3 2 1 5 4", "dual 0 3 2 1 4 5");
    let bad = write(&dir, "bad.txt", &text);
    let out = run(&["verify", s(&bad), "--json"]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(v["identity"], "duality");
    assert_eq!(v["indices"], serde_json::json!([4, 4, 0]));

    let garbled = write(&dir, "garbled.txt", "fusionring 1\nrank two\n");
    let out = run(&["verify", s(&garbled)]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    let missing = dir.path().join("missing.txt");
    assert_eq!(code(&run(&["verify", s(&missing)])), 2);
    // other commands treat an invalid ring as unusable input
    assert_eq!(code(&run(&["analyze", s(&bad)])), 2);
}

#[test]
fn iso_and_product() {
    let dir = tempfile::tempdir().unwrap();
    let ising = write(&dir, "ising.txt", &stdout(&run(&["generate", "ising"])));
    let v2 = write(&dir, "v2.txt", &stdout(&run(&["generate", "verlinde", "n=2"])));
    let z4 = write(&dir, "z4.txt", &stdout(&run(&["generate", "pointed", "group=4"])));
    let z22 = write(&dir, "z22.txt", &stdout(&run(&["generate", "pointed", "group=2,2"])));

    let out = run(&["iso", s(&ising), s(&v2)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("isomorphic"));
    let out = run(&["iso", s(&z4), s(&z22)]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "not isomorphic");

    let product = dir.path().join("p.txt");
    let out = run(&["product", s(&ising), s(&z4), "-o", s(&product)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let out = run(&["analyze", s(&product), "--json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rank"], 12);
    assert!((v["fpdim"].as_f64().unwrap() - 16.0).abs() < 1e-9);
    assert_eq!(v["universal_group"]["structure"], "Z2 × Z4");
}

#[test]
fn theorems_over_corpus_and_file() {
    let out = run(&["theorems", "--corpus", "--json"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["failures"], 0);
    assert!(v["evaluated"].as_u64().unwrap() > 0);
    let names: Vec<&str> = v["rings"].as_array().unwrap().iter().map(|r| r["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted, "corpus report is ordered by ring name");
    assert!(names.len() >= 60);

    let text = stdout(&run(&["theorems", "--corpus"]));
    assert!(text.trim_end().ends_with("0 failure(s)"), "{text}");

    let dir = tempfile::tempdir().unwrap();
    let mr = write(&dir, "mr.txt", &serialize(&gen_moore_read()));
    let out = run(&["theorems", s(&mr)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("pass a1"), "{}", stdout(&out));
}

#[test]
fn ty_modularize_reports() {
    let out = run(&["ty-modularize", "--rank", "1", "--bichar", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "non-integral; modularization: Ising");

    let out = run(&["ty-modularize", "--rank", "2", "--bichar", "10,01"]);
    assert_eq!(stdout(&out).trim(), "integral; modularization: pointed, FPdim 4");

    let out = run(&["ty-modularize", "--rank", "2", "--bichar", "01,10", "--tau", "-1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("either symmetric"));
    assert!(stderr(&out).contains("--tau is ignored"));

    // not symmetric
    assert_eq!(code(&run(&["ty-modularize", "--rank", "2", "--bichar", "11,01"])), 2);
}

#[test]
fn json_schema_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let mr = write(&dir, "mr.txt", &serialize(&gen_moore_read()));
    let json = |args: &[&str]| -> Value {
        let mut all = args.to_vec();
        all.push("--json");
        serde_json::from_str(&stdout(&run(&all))).unwrap()
    };

    let v = json(&["analyze", s(&mr)]);
    assert_eq!(
        keys(&v),
        [
            "adjoint", "command", "commutative", "faithful", "fpdim", "gen_ty", "integral", "invertibles",
            "nilpotency_class", "rank", "schema_version", "simples", "universal_group", "upper_central_series"
        ]
    );
    assert_eq!(
        keys(&v["simples"][0]),
        ["degree", "dual", "faithful", "fpdim", "index", "invertible", "label", "order"]
    );
    assert_eq!(keys(&v["universal_group"]), ["cyclic", "exponent", "order", "structure"]);
    assert_eq!(
        keys(&v["gen_ty"]),
        ["decomposition_detail", "g_order", "gamma_order", "ising_decomposition", "type_name", "universal_order"]
    );
    assert_eq!(v["gen_ty"]["type_name"], "(Z4, Z2)");

    let v = json(&["grade", s(&mr)]);
    assert_eq!(keys(&v), ["command", "components", "elements", "group", "schema_version", "table", "universal", "verified"]);
    assert_eq!(keys(&v["components"][0]), ["element", "element_order", "fpdim", "simples"]);

    let v = json(&["verify", s(&mr)]);
    assert_eq!(keys(&v), ["command", "file", "identity", "indices", "message", "rank", "schema_version", "valid"]);

    let v = json(&["iso", s(&mr), s(&mr)]);
    assert_eq!(keys(&v), ["command", "isomorphic", "map", "schema_version"]);

    let v = json(&["theorems", s(&mr)]);
    assert_eq!(keys(&v), ["command", "evaluated", "failures", "rings", "schema_version", "shadow_violations"]);
    assert_eq!(
        keys(&v["rings"][0]["checks"][0]),
        ["conclusion_holds", "counterexample", "detail", "hypotheses_met", "id", "statement"]
    );

    let v = json(&["generate", "ising"]);
    assert_eq!(keys(&v), ["command", "document", "labels", "output", "rank", "schema_version"]);

    let v = json(&["ty-modularize", "--rank", "1", "--bichar", "1"]);
    assert_eq!(keys(&v), ["command", "prediction", "schema_version", "summary"]);
    assert_eq!(
        keys(&v["prediction"]),
        ["integral", "m", "modularization", "modularization_fpdim", "symmetric_possible", "transparent"]
    );
    assert_eq!(v["prediction"]["modularization"], "ising");
}

#[test]
fn grade_reports_components() {
    let dir = tempfile::tempdir().unwrap();
    let mr = write(&dir, "mr.txt", &serialize(&gen_moore_read()));
    let out = run(&["grade", s(&mr)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("U(C) ≅ Z4"));
    assert!(text.contains("{e, g^2}, FPdim 2"));
    assert!(text.contains("universal: yes"));
}
