use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alpharep")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(rel).display().to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("alpharep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn alpha_json_for_a5() {
    let o = run(&["alpha", &data("groups/a5.grp"), "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let alphas: Vec<&str> = v["alpha"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(alphas, ["1", "2", "2", "5", "1"]);
    assert_eq!(v["characters"][3]["degree"], 4);
}

#[test]
fn single_character() {
    let o = run(&["alpha", "s5", "--char", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("chi_1"));
    assert_eq!(run(&["alpha", "s5", "--char", "99"]).status.code(), Some(2));
}

#[test]
fn orbit_type_graph_of_the_degree_four_character() {
    let o = run(&["orbit-types", "a5.grp", "--char", "4", "--dot"]);
    assert!(o.status.success());
    let s = stdout(&o);
    for name in ["A5", "A4", "D3", "Z3", "Z2", "Z1"] {
        assert!(s.contains(&format!("label=\"{name}\"")), "{name} missing:\n{s}");
    }
    assert_eq!(s.matches(" -> ").count(), 8);
}

#[test]
fn s5_has_three_two_transitive_actions() {
    let o = run(&["twotrans", "scan", "s5.grp"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let rows: Vec<&str> = s.lines().skip(2).collect();
    assert_eq!(rows.len(), 3, "{s}");
    let alphas: Vec<&str> = rows.iter().map(|r| r.split_whitespace().last().unwrap()).collect();
    assert_eq!(alphas, ["2", "5", "1"]);
}

#[test]
fn output_is_deterministic() {
    for args in [&["alpha", "psl2_8"][..], &["twotrans", "scan", "a5"], &["verify-paper", "--only", "5,7"]] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["alpha"]).status.code(), Some(2));
    assert_eq!(run(&["alpha", "no-such-group"]).status.code(), Some(2));
    assert_eq!(run(&["alpha", "a5", "--bound", "10"]).status.code(), Some(3));
    assert_eq!(run(&["alpha", "s9"]).status.code(), Some(3));

    let bad = scratch("bad_excerpt.txt");
    std::fs::write(&bad, "11 | | PSL(2,11) | 1 | 1 | yes\n").unwrap();
    let o = run(&["twotrans", "verify-table", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL line 1"));
}

#[test]
fn bundled_classification_excerpt_holds() {
    let o = run(&["twotrans", "verify-table", &data("classification.txt")]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn table_round_trip_through_files() {
    let path = scratch("s4.tbl");
    let o = run(&["chartab", "compute", "s4", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let o = run(&["chartab", "load", path.to_str().unwrap(), "--group", "s4", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mut degrees: Vec<i64> = v["degrees"].as_array().unwrap().iter().map(|d| d.as_i64().unwrap()).collect();
    degrees.sort();
    assert_eq!(degrees, [1, 1, 2, 3, 3]);
    let o = run(&["alpha", "s4", "--table", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(run(&["chartab", "show", path.to_str().unwrap()]).status.success());
    assert_eq!(run(&["chartab", "load", path.to_str().unwrap(), "--group", "a5"]).status.code(), Some(2));
}

#[test]
fn solvability_and_trivial_scans() {
    let o = run(&["solvable-check", "sl2_3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS"));
    let o = run(&["scan-trivial", "a5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["all_alpha_one"], false);
}

#[test]
fn group_info() {
    let s = stdout(&run(&["group", "info", "m11"]));
    assert!(s.contains("order    7920"));
    assert!(s.contains("solvable no"));
    assert!(s.contains("classes  10"));
}

#[test]
fn groebner_file() {
    let path = scratch("system.txt");
    std::fs::write(&path, "x1^2 + x2^2\nx1*x2\n").unwrap();
    let o = run(&["groebner", path.to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["only_trivial_zero"], true);
    assert_eq!(v["unit_ideal"], false);
}

#[test]
fn norton_and_congruence() {
    assert!(stdout(&run(&["norton", "5"])).contains("only w = 0"));
    assert!(stdout(&run(&["norton", "6"])).contains("over 20 sets"));
    assert_eq!(stdout(&run(&["congruence", "--alpha", "8", "--k", "2", "--dim", "2"])), "deg ≡ 4 (mod 8)\n");
    assert_eq!(stdout(&run(&["congruence", "--alpha", "10", "--k", "2", "--dim", "4"])), "deg ≡ 16 ≡ 6 (mod 10)\n");
}

#[test]
fn quadratic_maps() {
    let o = run(&["quadmap", "check", "--source", &data("reps/s5_vminus.rep"), "--target", "4"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS: admissible"));
    let o = run(&["quadmap", "build", "--source", "s5_vminus", "--target", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("constituents are"));
    assert!(run(&["quadmap", "check"]).status.success());
}

#[test]
fn verify_paper_subset_and_missing_corpus() {
    let o = run(&["verify-paper", "--only", "1,12"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("PASS criterion 1"));
    let empty = scratch("empty-corpus");
    std::fs::create_dir_all(&empty).unwrap();
    assert_eq!(run(&["verify-paper", "--corpus", empty.to_str().unwrap()]).status.code(), Some(2));
}
