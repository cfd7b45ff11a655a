use std::process::{Command, Output};

use domipoly::graph::{contract_vertex, edgelist, family};
use domipoly::DominationPolynomial;

fn domipoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domipoly"))
        .args(args)
        .env_remove("DOMIPOLY_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn poly_output_parses_back() {
    let o = domipoly(&["poly", "family:friendship(3)"]);
    assert!(o.status.success());
    let p: DominationPolynomial = stdout(&o).trim().parse().unwrap();
    assert_eq!(p, domipoly::formulas::d_friendship(3).unwrap());
}

#[test]
fn book_contraction_from_file_is_equivalent_to_friendship() {
    let witness = contract_vertex(&family::book(2).unwrap(), 1).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b2v.txt");
    std::fs::write(&path, edgelist::format(&witness)).unwrap();
    let o = domipoly(&["equiv", "family:friendship(2)", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("equal\n"), "{}", stdout(&o));
}

#[test]
fn graph6_file_is_read() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.g6");
    std::fs::write(&path, "Ch\n").unwrap();
    let o = domipoly(&["poly", path.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "4x^2 + 4x^3 + x^4");
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "corona-k1", "3"];
    let first = domipoly(&args);
    assert!(first.status.success());
    for jobs in ["1", "3"] {
        let again = domipoly(&["--jobs", jobs, "verify", "corona-k1", "3"]);
        assert_eq!(again.stdout, first.stdout);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(domipoly(&["no-such-verb"]).status.code(), Some(1));
    assert_eq!(domipoly(&["poly", "family:path(x)"]).status.code(), Some(2));
    assert_eq!(
        domipoly(&["--limit", "4", "poly", "family:path(5)"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        domipoly(&["poly", "missing/graph.txt"]).status.code(),
        Some(4)
    );
}

#[test]
fn limit_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_domipoly"))
        .args(["poly", "family:path(5)"])
        .env("DOMIPOLY_LIMIT", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(!o.stderr.is_empty());
    assert!(o.stdout.is_empty());
}

#[test]
fn reduce_reports_connectors() {
    let o = domipoly(&["reduce", "family:h_graph(6)"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("deleted: 2\n1 2\n3 4\nfinal:\n"), "{text}");
    let d: DominationPolynomial = text
        .lines()
        .find_map(|l| l.strip_prefix("polynomial: "))
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(d, domipoly::formulas::d_h_even(3).unwrap());
}

#[test]
fn class_json_is_well_formed() {
    let o = domipoly(&["class", "family:cycle(4)"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["size"], 1);
    assert_eq!(doc["members"][0], "Cr");
}
