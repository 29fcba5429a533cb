use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn crosskit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crosskit"))
        .args(args)
        .env_remove("CROSSKIT_DEFAULT_GRID")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn eval_hexagon_is_clean() {
    let o = crosskit(&["eval", "--named", "hexagon_pair"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("(β,λ,ρ,ε,τ) = (F,T,F,T,T)"));
    assert!(out.contains("expected: match"));
}

#[test]
fn eval_named_record_in_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "h.json",
        r#"{"version": 1, "shapes": [{"kind": "named", "name": "hexagon_pair"}]}"#,
    );
    let o = crosskit(&["eval", &f, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let p = &v["pairs"][0]["report"]["predicates"];
    assert_eq!(p["lambda"], true);
    assert_eq!(p["rho"], false);
}

#[test]
fn eval_identical_disks_all_false() {
    let dir = tempfile::tempdir().unwrap();
    let disk = r#"{"kind": "disk", "center": [0.5, -1], "radius": 2}"#;
    let f = write(
        dir.path(),
        "dd.json",
        &format!(r#"{{"version": 1, "shapes": [{disk}, {disk}]}}"#),
    );
    let o = crosskit(&["eval", &f, "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let p = &v["pairs"][0]["report"]["predicates"];
    for k in ["beta", "lambda", "rho", "epsilon", "tau"] {
        assert_eq!(p[k], false, "{k}");
    }
}

#[test]
fn eval_ambiguity_exits_2() {
    // bottom and top lines have extremes 5e-7 apart: inside the ambiguity band
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "amb.json",
        r#"{"version": 1, "shapes": [
            {"kind": "polygon", "vertices": [[0,0],[1,0],[1,1],[0,1]]},
            {"kind": "polygon", "vertices": [[5e-7,0],[1.0000005,0],[1.0000005,1],[5e-7,1]]}]}"#,
    );
    let o = crosskit(&["eval", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("flag: ambiguous extreme"));
}

#[test]
fn schema_error_exits_1_with_path() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "bad.json",
        r#"{"version": 1, "shapes": [{"kind": "disk", "center": [0, 0], "radius": 1},
            {"kind": "transform", "base": {"kind": "disk", "center": [0, 0], "radius": 0}}]}"#,
    );
    let o = crosskit(&["eval", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).contains("shapes[1].base.radius"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn missing_file_and_bad_pair_exit_1() {
    assert_eq!(
        crosskit(&["eval", "/nonexistent/shapes.json"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        crosskit(&["eval", "--named", "disk_pair", "--pair", "0,5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        crosskit(&["eval", "--named", "disk_pair", "--tol", "1e-3"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn eval_with_oracle_reports_agreement() {
    let o = crosskit(&["eval", "--named", "octagon_pair", "--oracle", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let oracle = &v["pairs"][0]["oracle"];
    assert_eq!(oracle["resolution"], 2048);
    assert_eq!(oracle["tau_agree"], true);
    assert_eq!(oracle["counts_agree"], true);
}

#[test]
fn json_is_byte_deterministic_and_timing_is_opt_in() {
    let a = crosskit(&["eval", "--named", "ellipse_pair", "--json"]);
    let b = crosskit(&["eval", "--named", "ellipse_pair", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains("timing_ms"));
    let t = crosskit(&["eval", "--named", "ellipse_pair", "--json", "--timing"]);
    assert!(stdout(&t).contains("timing_ms"));
}

#[test]
fn grid_env_var_sets_default() {
    let o = Command::new(env!("CARGO_BIN_EXE_crosskit"))
        .args(["eval", "--named", "disk_pair", "--json"])
        .env("CROSSKIT_DEFAULT_GRID", "1024")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["config"]["grid_n"], 1024);
    let o = Command::new(env!("CARGO_BIN_EXE_crosskit"))
        .args(["eval", "--named", "disk_pair", "--json", "--grid-n", "512"])
        .env("CROSSKIT_DEFAULT_GRID", "1024")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["config"]["grid_n"], 512);
}

#[test]
fn hierarchy_restricted_suites() {
    let o = crosskit(&["hierarchy", "--named", "octagon_pair", "--random", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("octagon_pair   tau without epsilon"));
    let o = crosskit(&["hierarchy", "--named", "hexagon_pair", "--random", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("lambda without rho"));
}

#[test]
fn hierarchy_is_deterministic() {
    let args = ["hierarchy", "--random", "40", "--seed", "5", "--json"];
    let a = crosskit(&args);
    let b = crosskit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn golden_mismatch_exits_3_with_replay() {
    let dir = tempfile::tempdir().unwrap();
    let export = crosskit(&["export", "disk_pair"]);
    assert_eq!(export.status.code(), Some(0));
    let good = write(dir.path(), "disk.json", &stdout(&export));
    let o = crosskit(&["hierarchy", "--no-named", "--random", "0", "--pairs", &good]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    // a golden file claiming the disks cross in the Fejes Tóth sense
    let wrong = stdout(&export).replace("\"tau\": false", "\"tau\": true");
    assert_ne!(wrong, stdout(&export));
    let bad = write(dir.path(), "wrong.json", &wrong);
    let replay_dir = dir.path().join("replay");
    fs::create_dir(&replay_dir).unwrap();
    let o = crosskit(&[
        "hierarchy",
        "--no-named",
        "--random",
        "0",
        "--pairs",
        &bad,
        "--replay-dir",
        replay_dir.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    let replay = replay_dir.join("violation-0.json");
    let text = fs::read_to_string(&replay).unwrap();
    let again = crosskit(&["eval", replay.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert!(text.contains("\"kind\": \"pieces\""));
}

#[test]
fn render_outputs() {
    let o = crosskit(&["render", "--named", "hexagon_pair"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("class=\"support\"").count(), 4);

    let o = crosskit(&["render", "--named", "octagon_pair"]);
    let svg = stdout(&o);
    assert_eq!(svg.matches("data-graph=\"parabolic\"").count(), 4);
    assert_eq!(svg.matches("data-graph=\"quartic\"").count(), 4);

    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "disk.json",
        r#"{"version": 1, "shapes": [{"kind": "disk", "center": [0, 0], "radius": 1}]}"#,
    );
    let out = dir.path().join("disk.svg");
    let o = crosskit(&["render", &f, "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = fs::read_to_string(out).unwrap();
    assert_eq!(svg.matches("<circle").count(), 1);

    let a = crosskit(&["render", "--named", "ellipse_pair"]);
    let b = crosskit(&["render", "--named", "ellipse_pair"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn pgm_dump() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("grid.pgm");
    let o = crosskit(&[
        "eval",
        "--named",
        "disk_pair",
        "--oracle-n",
        "128",
        "--pgm",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let bytes = fs::read(out).unwrap();
    assert!(bytes.starts_with(b"P5\n128 128\n255\n"));
}
