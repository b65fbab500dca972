use serde_json::Value;

use turanlab::cli::run;
use turanlab::Graph;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn turanlab(args: &[&str], stdin: &str) -> Output {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("turanlab").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> Value {
    let o = turanlab(args, "");
    assert_eq!(o.code, 0, "{args:?}: {}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

fn close(v: &Value, x: f64) -> bool {
    (v.as_f64().unwrap() - x).abs() < 1e-9
}

#[test]
fn spectrum_of_petersen() {
    let v = json(&["spectrum", "--named", "petersen"]);
    assert!(close(&v["lambda1"], 3.0));
    assert!(close(&v["s_plus"], 14.0));
    assert!(close(&v["s_minus"], 16.0));
    assert_eq!(v["n_plus"], 6);
    assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 10);
}

#[test]
fn spectrum_accepts_graph6_literal_and_random_graphs() {
    let v = json(&["spectrum", "--g6", "Bw"]);
    assert!(close(&v["lambda1"], 2.0));
    let a = json(&["spectrum", "--gnp", "12,0.5", "--seed", "9"]);
    let b = json(&["spectrum", "--gnp", "12,0.5", "--seed", "9"]);
    assert_eq!(a, b);
}

#[test]
fn profile_of_diamond() {
    let v = json(&["profile", "--named", "diamond"]);
    assert_eq!(v["omega"], 3);
    assert_eq!(v["t"], 2);
    assert_eq!(v["c_v"], serde_json::json!([3, 3, 3, 3]));
    assert_eq!(v["predicates"]["diamond_free"], false);
}

#[test]
fn check_reports_equality_on_octahedron() {
    let v = json(&["check", "--named", "octahedron", "--id", "wilf"]);
    let r = &v[0];
    assert_eq!(r["id"], "wilf");
    assert_eq!(r["equality"], true);
    assert!(close(&r["lhs"], 4.0));
}

#[test]
fn check_csv_marks_nonbinding_failure() {
    let o = turanlab(&["check", "--named", "complete:4", "--checks", "bn,wilf", "--format", "csv"], "");
    assert_eq!(o.code, 0);
    let mut rows = csv::Reader::from_reader(o.stdout.as_bytes());
    let records: Vec<csv::StringRecord> = rows.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 2);
    assert_eq!(&records[0][0], "bn");
    assert_eq!(&records[0][5], "false");
    assert_eq!(&records[0][6], "false");
    assert_eq!(&records[1][0], "wilf");
}

#[test]
fn check_with_weights_file() {
    let dir = std::env::temp_dir().join(format!("turanlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("w.csv");
    std::fs::write(&path, "u,v,w\n0,1,1\n1,2,2\n0,2,3\n").unwrap();
    let v = json(&["check", "--named", "complete:3", "--id", "weighted_edge_local_turan", "--weights", path.to_str().unwrap()]);
    assert_eq!(v[0]["holds"], true);

    std::fs::write(&path, "u,v,w\n0,1,1\n1,2,2\n").unwrap();
    let o = turanlab(&["check", "--named", "complete:3", "--id", "weighted_edge_local_turan", "--weights", path.to_str().unwrap()], "");
    assert_eq!(o.code, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn walks_on_cycle() {
    let v = json(&["walks", "--named", "cycle:5", "--r", "3"]);
    assert_eq!(v["per_vertex"], serde_json::json!([4, 4, 4, 4, 4]));
    assert_eq!(v["total"], 20);
}

#[test]
fn motzkin_straus_values() {
    let v = json(&["ms", "--named", "petersen"]);
    assert!(close(&v["value"], 0.5));
    assert!(close(&v["classical_bound"], 0.5));
    assert_eq!(v["x"].as_array().unwrap().len(), 10);

    for scheme in ["avg_local", "geo_local"] {
        let v = json(&["ms", "--named", "diamond", "--scheme", scheme]);
        assert!(v["value"].as_f64().unwrap() <= 1.0 + 1e-6);
        assert!(close(&v["witness_value"], 1.0));
    }
}

#[test]
fn scan_enumeration_finds_balanced_bipartite_extremum() {
    let o = turanlab(&["scan", "--enumerate", "4", "--checks", "splus_triangle", "--top-k", "1"], "");
    assert_eq!(o.code, 0);
    let last: Value = serde_json::from_str(o.stdout.lines().last().unwrap()).unwrap();
    let summary = &last["summary"];
    assert_eq!(summary["graphs_processed"], 64);
    let top = &summary["checks"][0]["top_k"][0];
    assert!(top["slack"].as_f64().unwrap().abs() < 1e-9);
    let g = Graph::from_graph6(top["graph6"].as_str().unwrap()).unwrap();
    assert_eq!(g.size(), 4);
    assert!(g.bipartition().is_some());
}

#[test]
fn scan_output_is_independent_of_workers() {
    let args = |w: &'static str| ["scan", "--enumerate", "5", "--checks", "conjectures", "--workers", w];
    let one = turanlab(&args("1"), "");
    let three = turanlab(&args("3"), "");
    assert_eq!(one.code, 0);
    assert_eq!(one.stdout, three.stdout);
}

#[test]
fn scan_stdin_records_bad_lines() {
    let o = turanlab(&["scan", "--g6", "-", "--checks", "wilf"], "A_\nzz\nBw\n");
    assert_eq!(o.code, 0);
    let v: Value = serde_json::from_str(o.stdout.lines().last().unwrap()).unwrap();
    assert_eq!(v["summary"]["graphs_processed"], 2);
    assert_eq!(v["summary"]["parse_errors"][0]["line"], 2);
    assert!(o.stderr.contains("line 2"));

    let strict = turanlab(&["scan", "--g6", "-", "--checks", "wilf", "--strict"], "A_\nzz\n");
    assert_eq!(strict.code, 2);
    assert!(strict.stderr.starts_with("error:"));
}

#[test]
fn scan_csv_summary() {
    let o = turanlab(&["scan", "--enumerate", "3", "--checks", "bn", "--format", "csv"], "");
    assert_eq!(o.code, 0);
    let mut lines = o.stdout.lines();
    assert!(lines.next().unwrap().starts_with("id,status,evaluated"));
    assert!(lines.next().unwrap().starts_with("bn,conjecture,8,7,0,1,"));
}

#[test]
fn small_random_experiment() {
    let v = json(&["random", "--gnp", "20,0.5", "--trials", "2", "--seed", "3"]);
    assert_eq!(v["completed"], 2);
    assert_eq!(v["clique_numbers_exact"], true);
    assert_eq!(v["binding_violations"], 0);
}

#[test]
fn errors_exit_with_code_two() {
    for args in [
        &["check", "--named", "nonsense"][..],
        &["check", "--named", "petersen", "--id", "no_such_check"],
        &["walks", "--named", "petersen", "--r", "0"],
        &["scan", "--enumerate", "8"],
        &["spectrum"],
        &["frobnicate"],
    ] {
        let o = turanlab(args, "");
        assert_eq!(o.code, 2, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_lists_catalogue() {
    let o = turanlab(&["--help"], "");
    assert_eq!(o.code, 0);
    for key in ["wilf", "local_bn", "splus_triangle", "walk_recursion"] {
        assert!(o.stdout.contains(key), "{key}");
    }
}
