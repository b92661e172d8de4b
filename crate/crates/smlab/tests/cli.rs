use std::path::Path;
use std::process::{Command, Output};

fn smlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smlab")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn classify_integer_module_z12() {
    let dir = tempfile::tempdir().unwrap();
    let ws = write(dir.path(), "ws.txt", "ring R = zn 12\nmodule M = cyclic 12 over Z\nmodule P = cyclic 4 over R\n");
    let o = smlab(&["classify", "--spec", &ws, "--module", "M", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    let flag = |row: &serde_json::Value, f: &str| -> String {
        row["flags"].as_array().unwrap().iter().find(|p| p[0] == f).unwrap()[1].as_str().unwrap().to_string()
    };
    for row in rows {
        let proper = row["submodule"] != "M";
        assert_eq!(flag(row, "n_sub"), if proper { "false" } else { "na" }, "{row}");
        assert_eq!(flag(row, "r_sub"), if proper { "true" } else { "na" }, "{row}");
        assert_eq!(flag(row, "semi_n"), if proper { "true" } else { "na" }, "{row}");
        if proper {
            assert!(row["witnesses"].as_array().unwrap().iter().any(|w| w[0] == "n_sub"), "{row}");
        }
    }
    let text = stdout(&smlab(&["classify", "--spec", &ws, "--module", "M"]));
    assert!(text.lines().next().unwrap().contains("Z12"));
    assert_eq!(text.lines().count(), 2 + 6);
    let all = stdout(&smlab(&["classify", "--spec", &ws]));
    assert_eq!(all.lines().count(), 2 * 2 + 6 + 3);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "ring R = zn 12\nmodule M = cyclic 5 over R\n");
    let o = smlab(&["classify", "--spec", &bad]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("5 does not divide 12"));
    let syn = write(dir.path(), "syn.txt", "ring R = zn\n");
    let o = smlab(&["classify", "--spec", &syn]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1, column 12"));
    assert_eq!(code(&smlab(&["classify", "--spec", "/nonexistent/ws.txt"])), 2);
    assert_eq!(code(&smlab(&["theorems", "--ids", "no-such-check", "--caps", "minimal"])), 2);
    let ok = write(dir.path(), "ok.txt", "ring R = zn 4\n");
    assert_eq!(code(&smlab(&["classify", "--spec", &ok, "--module", "Q"])), 2);
}

#[test]
fn capacity_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let big = write(dir.path(), "big.txt", "option caps minimal\nring R = zn 5000\n");
    let o = smlab(&["classify", "--spec", &big]);
    assert_eq!(code(&o), 3, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn replay_reports_mismatches() {
    let dir = tempfile::tempdir().unwrap();
    let good =
        write(dir.path(), "good.txt", "module M = cyclic 12 over Z\nsubmodule N = gen M 4\nexpect semi_n N true\nexpect n_sub N false\n");
    let o = smlab(&["replay", "--spec", &good]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("2 expectations, 0 mismatched"));
    let bad = write(dir.path(), "bad.txt", "module M = cyclic 12 over Z\nsubmodule N = gen M 4\nexpect n_sub N true\n");
    let o = smlab(&["replay", "--spec", &bad]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("MISMATCH"));
}

#[test]
fn search_prints_replayable_witness() {
    let o = smlab(&["search", "--a", "semi_n", "--b", "n_sub", "--caps", "minimal"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("found: "), "{out}");
    let spec = out.split_once('\n').unwrap().1;
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "w.txt", spec);
    let r = smlab(&["replay", "--spec", &p]);
    assert_eq!(code(&r), 0, "{}", stdout(&r));

    let o = smlab(&["search", "--a", "n_sub", "--b", "semi_n", "--caps", "minimal", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"], "not_found");
    assert!(v["witness"].is_null());
    assert_eq!(code(&smlab(&["search", "--a", "bogus", "--b", "n_sub"])), 2);
}

#[test]
fn catalog_summary() {
    let o = smlab(&["catalog", "--caps", "minimal"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("preset: minimal\n"));
    assert!(out.contains("rings: "));
    assert!(out.contains("amalgams: "));
}

#[test]
fn theorem_reports_have_the_schema_keys() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o =
        smlab(&["theorems", "--ids", "diagram,thm-char1,thm-Ide-fwd", "--caps", "minimal", "--seed", "3", "--out", out.to_str().unwrap()]);
    let raw = std::fs::read_to_string(&out).unwrap();
    let json: serde_json::Value = serde_json::from_str(&raw).unwrap();
    let reports = json["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 3);
    let keys = ["theorem", "instances_scanned", "hypothesis_satisfied", "vacuous", "status", "witness", "wall_time_ms", "seed"];
    for r in reports {
        let obj = r.as_object().unwrap();
        let mut got: Vec<_> = obj.keys().map(String::as_str).collect();
        let mut want = keys.to_vec();
        got.sort();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(r["seed"], 3);
        assert!(r["wall_time_ms"].is_null());
    }
    let first = &raw[raw.find("\"theorem\"").unwrap()..];
    let pos: Vec<_> = keys.iter().map(|k| first.find(&format!("\"{k}\"")).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "emitted key order {pos:?}");
    let failed = json["summary"]["failed"].as_u64().unwrap();
    assert_eq!(code(&o), if failed > 0 { 1 } else { 0 });
    let ids: Vec<_> = reports.iter().map(|r| r["theorem"].as_str().unwrap()).collect();
    assert_eq!(ids, ["diagram", "thm-Ide-fwd", "thm-char1"]);
}

#[test]
fn failing_checks_exit_1_with_witness() {
    let o = smlab(&["theorems", "--ids", "diagram", "--caps", "minimal", "--mutation", "semi_n-drop-nilpotent-guard", "--format", "text"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("diagram") && out.contains("fail"), "{out}");
    assert!(out.contains("    | expect "), "{out}");
}

#[test]
fn timings_are_opt_in() {
    let o = smlab(&["theorems", "--ids", "diagram", "--caps", "minimal", "--timings"]);
    assert_eq!(code(&o), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(json["reports"][0]["wall_time_ms"].is_u64());
}

#[test]
fn spec_options_supply_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "o.txt", "option caps minimal\noption seed 11\n");
    let o = smlab(&["theorems", "--ids", "lemma-int", "--spec", &p]);
    assert_eq!(code(&o), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["caps"], "minimal");
    assert_eq!(json["seed"], 11);
    let o = smlab(&["theorems", "--ids", "lemma-int", "--spec", &p, "--seed", "12"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["seed"], 12);
}
