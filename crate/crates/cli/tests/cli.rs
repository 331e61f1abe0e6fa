use std::io::Write;
use std::process::{Command, Output};

use polya::{Format, GroupExpr};
use proptest::prelude::*;

fn polya(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polya"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn catalog_file(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("polya-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::File::create(&p)
        .unwrap()
        .write_all(body.as_bytes())
        .unwrap();
    p
}

#[test]
fn verify_c4() {
    let o = polya(&["verify", "--group", "C(4)", "--char", "index:1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("x0^3*x1 + x0^2*x1^2 + x0*x1^3"));
}

#[test]
fn cycle_index_sign() {
    let o = polya(&["cycle-index", "--group", "S(3)", "--char", "sign"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(1/6)*p1^3 - (1/2)*p1*p2 + (1/3)*p3\n");
}

#[test]
fn characters_of_s3() {
    let o = polya(&["characters", "--group", "S(3)", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["characters"].as_array().unwrap().len(), 2);
    assert_eq!(v["generators"], serde_json::json!(["(1 2)", "(1 2 3)"]));
}

#[test]
fn json_is_exact() {
    let o = polya(&[
        "cycle-index",
        "--group",
        "C(4)",
        "--char",
        "index:1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let terms = v["cycle_index"]["terms"].as_array().unwrap();
    // (1/4)*p1^4 - (1/4)*p2^2 for χ(σ) = i^k
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["exponents"], serde_json::json!([4]));
    assert_eq!(
        terms[0]["coeff"],
        serde_json::json!({"num": "1", "den": "4"})
    );
    assert_eq!(
        terms[1]["coeff"],
        serde_json::json!({"num": "-1", "den": "4"})
    );
    let o = polya(&[
        "verify-basis",
        "--group",
        "S(3)",
        "--char",
        "sign",
        "--n",
        "2",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in [
        "group",
        "character",
        "n",
        "d",
        "dim",
        "trace",
        "rank",
        "J_size",
        "ok",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["J_size"], 1);
    assert_eq!(v["dim"], 27);
}

#[test]
fn orbits_tsv() {
    let o = polya(&[
        "orbits", "--group", "C(4)", "--char", "index:2", "--n", "1", "--format", "tsv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(
        lines.next(),
        Some("rep\tsize\tstab_order\ttau_H\th_len\tchi_orbit")
    );
    assert_eq!(lines.next(), Some("(0,0,0,0)\t1\t4\t1\t1\tfalse"));
    // χ = -1 on the rotation, so the stabilizer {e, (1 3)(2 4)} of
    // (0,1,0,1) lies in the kernel
    assert!(s.contains("(0,1,0,1)\t2\t2\t2\t1\ttrue"));
    assert!(s.contains("(0,0,0,1)\t4\t1\t2\t2\ttrue"));
    assert_eq!(s.lines().count(), 7);
}

#[test]
fn exit_codes() {
    let usage = [
        vec!["verify", "--group", "S(3)", "--char", "sign"],
        vec!["verify", "--group", "S(", "--char", "sign", "--n", "1"],
        vec!["verify", "--group", "S(3)", "--char", "index:9", "--n", "1"],
        vec![
            "verify",
            "--group",
            "S(3)",
            "--char",
            "vals{g1:1/3}",
            "--n",
            "1",
        ],
        vec!["verify-product", "--group", "S(3)", "--char", "sign"],
        vec![
            "gn", "--group", "S(3)", "--char", "sign", "--n", "1", "--format", "xml",
        ],
        vec!["frobnicate"],
    ];
    for args in usage {
        assert_eq!(polya(&args).status.code(), Some(2), "{args:?}");
    }
    let o = polya(&[
        "gn", "--group", "S(5)", "--char", "unit", "--n", "3", "--cap", "1000",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_polya"))
        .args(["orbits", "--group", "S(4)", "--char", "unit", "--n", "1"])
        .env(polya::ENV_ORBIT_CAP, "383")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = polya(&[
        "verify-basis",
        "--group",
        "S(5)",
        "--char",
        "sign",
        "--n",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn composition_commands() {
    let o = polya(&[
        "verify-plethysm",
        "--group",
        "S(2)",
        "--char",
        "unit",
        "--group",
        "S(2)",
        "--char",
        "unit",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(1/8)*p1^4 + (1/4)*p1^2*p2 + (3/8)*p2^2 + (1/4)*p4"));
    let o = polya(&[
        "verify-product",
        "--group",
        "S(2)",
        "--char",
        "sign",
        "--group",
        "S(3)",
        "--char",
        "sign",
        "--n",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ok g_n at n=2"));
    let o = polya(&[
        "verify-basis",
        "--group",
        "D(4)",
        "--char",
        "all",
        "--n",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = polya(&[
        "verify-basis",
        "--group",
        "D(4)",
        "--char",
        "index:3",
        "--n",
        "1",
        "--seed",
        "9",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn suite_exit_codes() {
    let ok = catalog_file(
        "ok.catalog",
        "verify | S(3) | all | 0..2\nverify-plethysm | S(2) | sign | S(2) | unit | 1\n",
    );
    let o = polya(&["suite", "--catalog", ok.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("summary: 7 jobs, 7 passed, 0 failed, 0 capped\n"));

    // ζ_3 on a transposition cannot extend to a character
    let bad = catalog_file(
        "bad.catalog",
        "verify | C(3) | all | 1\nverify | S(3) | vals{g1:1/3} | 1\n",
    );
    let o = polya(&[
        "suite",
        "--catalog",
        bad.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["failed"], 1);
    assert_eq!(v["jobs"][3]["job"], "verify | S(3) | vals{g1:1/3} | 1");

    let empty = catalog_file("empty.catalog", "# nothing here\n\n");
    assert_eq!(
        polya(&["suite", "--catalog", empty.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let broken = catalog_file("broken.catalog", "verify | S(3)\n");
    assert_eq!(
        polya(&["suite", "--catalog", broken.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let capped = catalog_file(
        "capped.catalog",
        "verify | S(3) | unit | 1\nverify | S(5) | unit | 3\n",
    );
    let o = polya(&[
        "suite",
        "--catalog",
        capped.to_str().unwrap(),
        "--cap",
        "10000",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "orbits",
        "--group",
        "wreath(S(2),S(2))",
        "--char",
        "index:2",
        "--n",
        "2",
        "--format",
        "json",
    ];
    assert_eq!(polya(&args).stdout, polya(&args).stdout);
}

fn group_expr() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (1usize..5).prop_map(|d| format!("S({d})")),
        (1usize..5).prop_map(|d| format!("C({d})")),
        (3usize..5).prop_map(|d| format!("D({d})")),
        (3usize..5).prop_map(|d| format!("A({d})")),
        Just("gen[4]{(1 2)(3 4),(1 3)(2 4)}".to_string()),
        Just("gen[3]{}".to_string()),
    ];
    leaf.prop_recursive(2, 6, 2, |inner| {
        (inner.clone(), inner, any::<bool>()).prop_map(|(a, b, wreath)| {
            if wreath {
                format!("wreath({a},{b})")
            } else {
                format!("product({a},{b})")
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn printed_expressions_reparse(src in group_expr()) {
        let e = GroupExpr::parse(&src).unwrap();
        let printed = e.to_string();
        let again = GroupExpr::parse(&printed).unwrap();
        prop_assert_eq!(&again, &e);
        if e.degree() <= 8 {
            if let (Ok(a), Ok(b)) = (e.build(), again.build()) {
                prop_assert_eq!(a, b);
            }
        }
    }
}

#[test]
fn format_default_is_text() {
    assert_eq!(Format::default(), Format::Text);
}
