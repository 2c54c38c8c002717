use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn rdd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rdd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn nine_vertex() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data/nine_vertex.txt")
        .display()
        .to_string()
}

fn tmp(name: &str, contents: &str) -> String {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p.display().to_string()
}

#[test]
fn complete_graph_energy() {
    let o = rdd(&["energy", "--family", "complete", "--param", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("8.0000000000"));
}

#[test]
fn nine_vertex_charpoly_is_exact() {
    let o = rdd(&["charpoly", "--input", &nine_vertex()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).lines().next(),
        Some("1 -4 -171 -1034 -2339 -1284 2659 4438 2410 444")
    );
    let o = rdd(&["charpoly", "--input", &nine_vertex(), "--format", "json"]);
    let coeffs: Vec<String> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(coeffs.first().map(String::as_str), Some("444"));
    assert_eq!(coeffs.last().map(String::as_str), Some("1"));
}

#[test]
fn nine_vertex_rdf_is_unique() {
    let o = rdd(&["rdf", "--input", &nine_vertex(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["gamma_r"], 4);
    assert_eq!(v["gamma"], 3);
    assert_eq!(v["min_rdf_count"], 1);
    assert_eq!(v["canonical"]["v2"], serde_json::json!([0]));
    assert_eq!(v["canonical"]["v1"], serde_json::json!([6, 8]));
    assert_eq!(v["canonical"]["weight"], 4);
}

#[test]
fn spectrum_json_shape() {
    let o = rdd(&["spectrum", "--input", &nine_vertex(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 9);
    assert!((v["energy"].as_f64().unwrap() - 33.6237).abs() < 1e-3);
    assert!(v["residual"].as_f64().unwrap() < 1e-10);
}

#[test]
fn verify_emits_ledger_and_flags_mismatch() {
    let o = rdd(&["verify", "--input", &nine_vertex(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(3));
    let rows: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let find = |id: &str| rows.iter().find(|r| r["formula_id"] == id).unwrap();
    let printed = find("S4_ii_printed");
    assert_eq!(printed["holds"], false);
    assert_eq!(printed["corrected_holds"], true);
    assert_eq!(printed["formula"]["value"], 356.0);
    assert!((printed["computed"].as_f64().unwrap() - 358.0).abs() < 1e-9);
    assert_eq!(find("S4_ii_forced")["holds"], true);
    assert_eq!(find("S5_rho1_wiener")["holds"], true);
    for id in ["S4_i", "S5_mcclelland_2n", "S5_cor"] {
        find(id);
    }
}

#[test]
fn verify_family_csv() {
    let o = rdd(&[
        "verify", "--family", "crown", "--param", "4", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("family,param,gamma_R_predicted,gamma_R_computed,energy_predicted,energy_computed,abs_error,charpoly_match,notes")
    );
    let row = lines.next().unwrap();
    assert!(row.starts_with("crown,4,4,4,"), "{row}");
    assert!(row.contains("printed=no;self-consistent=yes"), "{row}");
}

#[test]
fn batch_is_byte_stable() {
    let args = ["batch", "--seed", "11", "--count", "5", "--format", "json"];
    let a = rdd(&args);
    let b = rdd(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
    let c = rdd(&["batch", "--seed", "12", "--count", "5", "--format", "json"]);
    assert_ne!(a.stdout, c.stdout);
    assert_eq!(a.status.code(), c.status.code());
}

#[test]
fn generate_round_trips() {
    let o = rdd(&["generate", "--family", "spider", "--param", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let path = tmp("spider4.txt", &stdout(&o));
    let from_file = rdd(&["charpoly", "--input", &path]);
    let from_family = rdd(&["charpoly", "--family", "spider", "--param", "4"]);
    assert_eq!(from_file.stdout, from_family.stdout);
}

#[test]
fn energy_all_reports_spread() {
    let o = rdd(&[
        "energy",
        "--family",
        "bipartite",
        "--param",
        "3",
        "--rdf",
        "all",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["energies"].as_array().unwrap().len(), 15);
    assert_eq!(v["min"], "14.7874820942");
    assert_eq!(v["max"], "15.5440037453");
}

#[test]
fn exit_codes() {
    assert_eq!(
        rdd(&["energy", "--input", "/nonexistent/graph.txt"])
            .status
            .code(),
        Some(1)
    );
    let bad = tmp("bad.txt", "3 2\n0 1\n");
    assert_eq!(rdd(&["energy", "--input", &bad]).status.code(), Some(1));
    assert_eq!(
        rdd(&["energy", "--family", "nonsense", "--param", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        rdd(&["energy", "--family", "star", "--param", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rdd(&["energy", "--input", &nine_vertex(), "--rdf", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rdd(&["rdf", "--family", "path", "--param", "31"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rdd(&["energy", "--family", "star", "--param", "3", "--tol", "0"])
            .status
            .code(),
        Some(1)
    );
}
