use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_kostant");

const G3: &str = r#"{"n_plus_1":3,"kind":"A","edges":[{"i":1,"j":2,"sign":"-","mult":1},{"i":1,"j":3,"sign":"-","mult":1},{"i":2,"j":3,"sign":"-","mult":1}]}"#;

const K4: &str = r#"{"n_plus_1":4,"kind":"A","edges":[{"i":1,"j":2,"sign":"-","mult":1},{"i":1,"j":3,"sign":"-","mult":1},{"i":1,"j":4,"sign":"-","mult":1},{"i":2,"j":3,"sign":"-","mult":1},{"i":2,"j":4,"sign":"-","mult":1},{"i":3,"j":4,"sign":"-","mult":1}]}"#;

// mixed-sign graph where the identity breaks at y = min(a_{n-1}+1, a_n+1)
const BOUNDARY: &str = r#"{"n_plus_1":4,"kind":"C","edges":[{"i":1,"j":2,"sign":"-","mult":2},{"i":1,"j":2,"sign":"+","mult":1},{"i":1,"j":3,"sign":"+","mult":1},{"i":1,"j":4,"sign":"-","mult":2},{"i":2,"j":3,"sign":"-","mult":1},{"i":2,"j":4,"sign":"-","mult":1},{"i":3,"j":4,"sign":"-","mult":1}]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn count_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g3.json", G3);
    let a = write(dir.path(), "a.json", r#"{"a":[1,0,-1]}"#);
    let o = run(&["count", "--graph", &g, "--netflow", &a]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "2\n"));
    let o = run(&["count", "--graph", &g, "--a", "[1,0,-1]"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "2\n"));
}

#[test]
fn backends_agree_on_k4() {
    for backend in ["dp", "brute", "partial"] {
        let o = run(&["count", "--graph-json", K4, "--a", "[3,1,0,-4]", "--backend", backend]);
        assert_eq!((code(&o), stdout(&o).as_str()), (0, "30\n"), "{backend}");
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.txt");
    let o = run(&[
        "count",
        "--graph-json",
        G3,
        "--a",
        "[1,0,-1]",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(out).unwrap(), "2\n");
}

#[test]
fn enumerate_lists_flows() {
    let o = run(&["enumerate", "--graph-json", G3, "--a", "[1,0,-1]"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
    assert_eq!(v["flows"], serde_json::json!([[0, 1, 0], [1, 0, 1]]));

    let o = run(&["enumerate", "--graph-json", K4, "--a", "[3,1,0,-4]", "--limit", "5"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["flows"].as_array().unwrap().len(), 5);

    let o = run(&[
        "enumerate",
        "--graph-json",
        K4,
        "--a",
        "[3,1,0,-4]",
        "--limit",
        "5",
        "--complete",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_k4_holds() {
    let o = run(&["verify", "--theorem", "a", "--graph-json", K4, "--a", "[3,1,0,-4]"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], true);
    assert_eq!(v["lhs"], "30");
    assert_eq!(v["rhs"], "10");
}

#[test]
fn verify_violation_exits_one() {
    let o = run(&[
        "verify",
        "--theorem",
        "c32",
        "--graph-json",
        BOUNDARY,
        "--a",
        "[3,2,2,-1]",
    ]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], false);
    assert_eq!((v["lhs"].as_str(), v["rhs"].as_str()), (Some("5"), Some("2")));
}

#[test]
fn verify_skip_exits_three() {
    // odd coordinate sum in type C
    let o = run(&[
        "verify",
        "--theorem",
        "c32",
        "--graph-json",
        BOUNDARY,
        "--a",
        "[3,2,2,0]",
    ]);
    assert_eq!(code(&o), 3);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["skipped"], true);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(
        code(&run(&["count", "--graph", "/nonexistent.json", "--a", "[1,0,-1]"])),
        2
    );
    assert_eq!(code(&run(&["count", "--graph-json", "{", "--a", "[1,0,-1]"])), 2);
    assert_eq!(code(&run(&["count", "--graph-json", G3, "--a", "[1,0]"])), 2);
    assert_eq!(
        code(&run(&["generate", "--n-plus-1", "2", "--kind", "A", "--theorem", "a"])),
        2
    );
    assert_eq!(code(&run(&["catalan", "--n", "0"])), 2);
    assert_eq!(code(&run(&["count"])), 2);
}

#[test]
fn generated_graphs_feed_every_subcommand() {
    for (kind, theorem) in [("A", "a"), ("C", "c31"), ("C", "c32")] {
        for seed in ["0", "7"] {
            let o = run(&[
                "generate",
                "--n-plus-1",
                "4",
                "--kind",
                kind,
                "--theorem",
                theorem,
                "--seed",
                seed,
            ]);
            assert_eq!(code(&o), 0);
            let g = stdout(&o);
            let again = run(&[
                "generate",
                "--n-plus-1",
                "4",
                "--kind",
                kind,
                "--theorem",
                theorem,
                "--seed",
                seed,
            ]);
            assert_eq!(g, stdout(&again), "generation is deterministic");
            let g = g.trim();
            // c32 netflow kept strictly below the boundary y = min(a_2+1, a_3+1)
            let a = match theorem {
                "a" => "[2,1,1,-4]",
                "c31" => "[3,1,1,-1]",
                _ => "[2,1,1,-2]",
            };

            let counts: Vec<String> = ["dp", "brute", "partial"]
                .iter()
                .map(|b| stdout(&run(&["count", "--graph-json", g, "--a", a, "--backend", b])))
                .collect();
            assert!(counts.iter().all(|c| c == &counts[0]), "{counts:?}");

            let o = run(&["enumerate", "--graph-json", g, "--a", a]);
            let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
            assert_eq!(v["flows"].as_array().unwrap().len().to_string(), counts[0].trim());

            let o = run(&["witness", "--graph-json", g, "--a", a]);
            assert_eq!(code(&o), 0);
            let certs: Value = serde_json::from_str(&stdout(&o)).unwrap();
            let total: u64 = certs
                .as_array()
                .unwrap()
                .iter()
                .map(|c| c["fiber_size"].as_u64().unwrap())
                .sum();
            assert_eq!(total.to_string(), counts[0].trim());

            let o = run(&["verify", "--theorem", theorem, "--graph-json", g, "--a", a]);
            let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
            assert_eq!(v["satisfied"], true);
            assert_ne!(v["verdict"], false);
        }
    }
}

#[test]
fn campaign_emits_one_line_per_instance() {
    let o = run(&[
        "verify",
        "--theorem",
        "c31",
        "--campaign",
        "--n-plus-1",
        "4",
        "--seeds",
        "3",
        "--netflows-per-seed",
        "2",
    ]);
    assert_eq!(code(&o), 0);
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 6);
    let seeds: Vec<u64> = lines.iter().map(|l| l["seed"].as_u64().unwrap()).collect();
    assert_eq!(seeds, [0, 0, 1, 1, 2, 2]);
    assert!(lines.iter().all(|l| l["report"]["verdict"] != false));

    let o = run(&["verify", "--theorem", "a", "--campaign", "--graph-json", G3]);
    assert_eq!(code(&o), 2);
}

#[test]
fn catalan_subcommand() {
    let o = run(&["catalan", "--n", "4"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["a"], serde_json::json!([1, 2, 3, 4, -10]));
    assert_eq!(v["kostant"], "140");
    assert_eq!(v["equal"], true);
}
