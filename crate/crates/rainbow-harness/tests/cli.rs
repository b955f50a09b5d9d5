//! End-to-end tests of the `rainbow` binary: subcommands, exit codes,
//! schema round-trips, and the bundled fixture.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rainbow_harness::io::{self, FamilyDto};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_rainbow")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary launches")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn stderr_text(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/glued-squares.json")
}

fn write_family(dir: &Path, name: &str, json: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, json).unwrap();
    path
}

// ---------------------------------------------------------------------------
// Fixture + find
// ---------------------------------------------------------------------------

#[test]
fn fixture_parses_to_six_members_on_six_vertices() {
    let family = io::import_family(fixture()).expect("fixture parses");
    assert_eq!(family.n(), 6);
    assert_eq!(family.len(), 6);
    assert_eq!(family.union().vertices().len(), 6);
}

#[test]
fn fixture_round_trips_through_export_and_import() {
    let family = io::import_family(fixture()).expect("fixture parses");
    let dir = tempfile::tempdir().unwrap();
    let back = dir.path().join("copy.json");
    io::export_family(&family, &back).expect("export");
    let again = io::import_family(&back).expect("re-import");
    assert_eq!(
        FamilyDto::from_family(&family),
        FamilyDto::from_family(&again)
    );
}

#[test]
fn find_reports_parity_sensitive_results_on_the_fixture() {
    let fix = fixture();
    let fix = fix.to_str().unwrap();
    // The glued squares admit rainbow odd cycles (through both squares)
    // but no rainbow even cycle.
    let even = run(&["find", "--parity", "even", "--in", fix]);
    assert_eq!(exit_code(&even), 1, "{}", stderr_text(&even));
    let odd = run(&["find", "--parity", "odd", "--in", fix]);
    assert_eq!(exit_code(&odd), 0, "{}", stderr_text(&odd));
    assert_eq!(stdout_json(&odd)["kind"], "rainbowCycle");
    assert_eq!(stdout_json(&odd)["parity"], "odd");
    let any = run(&["find", "--parity", "any", "--in", fix]);
    assert_eq!(exit_code(&any), 0);
    assert_eq!(stdout_json(&any)["kind"], "rainbowCycle");
}

#[test]
fn find_locates_a_rainbow_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let fam = write_family(
        dir.path(),
        "triangles.json",
        r#"{"n": 4, "members": [
            [[0,1],[1,2],[0,2]],
            [[0,1],[1,3],[0,3]],
            [[1,2],[2,3],[1,3]]
        ]}"#,
    );
    let out = run(&["find", "--parity", "odd", "--in", fam.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "{}", stderr_text(&out));
    let cert = stdout_json(&out);
    assert_eq!(cert["kind"], "rainbowCycle");
    assert_eq!(cert["edges"].as_array().unwrap().len(), 3);
}

// ---------------------------------------------------------------------------
// Import validation
// ---------------------------------------------------------------------------

#[test]
fn import_rejects_out_of_range_vertices_with_a_location() {
    let dir = tempfile::tempdir().unwrap();
    let fam = write_family(dir.path(), "bad.json", r#"{"n": 3, "members": [[[0,5]]]}"#);
    let out = run(&["find", "--parity", "any", "--in", fam.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    let err = stderr_text(&out);
    assert!(err.contains("members[0][0]"), "missing location: {err}");
    assert!(err.contains("out of range"), "missing reason: {err}");
}

#[test]
fn import_rejects_duplicate_edges_within_a_member() {
    let dir = tempfile::tempdir().unwrap();
    let fam = write_family(
        dir.path(),
        "dup.json",
        r#"{"n": 3, "members": [[[0,1],[1,0]]]}"#,
    );
    let out = run(&["find", "--parity", "any", "--in", fam.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_text(&out).contains("duplicate edge"));
}

#[test]
fn import_rejects_malformed_json() {
    let dir = tempfile::tempdir().unwrap();
    let fam = write_family(dir.path(), "broken.json", "{ this is not json");
    let out = run(&["find", "--parity", "any", "--in", fam.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

// ---------------------------------------------------------------------------
// Gen + recognize + decide-cut
// ---------------------------------------------------------------------------

#[test]
fn generated_cactus_is_recognized_and_its_witness_clusters_the_dot_output() {
    let dir = tempfile::tempdir().unwrap();
    let script = write_family(
        dir.path(),
        "cactus-script.json",
        r#"{"blocks": [{"len": 3}, {"len": 5, "glue": 1}]}"#,
    );
    let fam = dir.path().join("cactus.json");
    let gen = run(&[
        "gen",
        "--kind",
        "cactus",
        "--script",
        script.to_str().unwrap(),
        "--out",
        fam.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&gen), 0, "{}", stderr_text(&gen));

    let cert_path = dir.path().join("cert.json");
    let rec = run(&[
        "recognize",
        "--structure",
        "cactus",
        "--in",
        fam.to_str().unwrap(),
        "--out",
        cert_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&rec), 0, "{}", stderr_text(&rec));
    let cert: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert_path).unwrap()).unwrap();
    assert_eq!(cert["kind"], "prunedCactus");

    // A pruned cactus is in particular a saguaro.
    let sag = run(&[
        "recognize",
        "--structure",
        "saguaro",
        "--in",
        fam.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&sag), 0);

    let dot_path = dir.path().join("cactus.dot");
    let dot = run(&[
        "export-dot",
        "--in",
        fam.to_str().unwrap(),
        "--out",
        dot_path.to_str().unwrap(),
        "--cert",
        cert_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&dot), 0, "{}", stderr_text(&dot));
    let text = std::fs::read_to_string(&dot_path).unwrap();
    assert!(text.starts_with("graph"));
    assert!(text.contains("subgraph cluster_"), "no clusters: {text}");
    assert!(text.contains("--"), "no edges: {text}");
    assert!(text.contains("label="), "no edge labels: {text}");
}

#[test]
fn fixture_is_neither_cactus_nor_saguaro() {
    // Its two squares share two vertices, so the union is a single
    // 2-connected non-cycle block — and it has rainbow odd cycles anyway.
    let fix = fixture();
    let fix = fix.to_str().unwrap();
    let cactus = run(&["recognize", "--structure", "cactus", "--in", fix]);
    assert_eq!(exit_code(&cactus), 1);
    let saguaro = run(&["recognize", "--structure", "saguaro", "--in", fix]);
    assert_eq!(exit_code(&saguaro), 1);
}

#[test]
fn generated_linkleaf_is_recognized_and_cut_decided() {
    let dir = tempfile::tempdir().unwrap();
    let script = write_family(
        dir.path(),
        "link-script.json",
        r#"{"kind": "link",
            "left": {"kind": "empty"},
            "bridge": [[{"side": "left", "index": 0}, {"side": "right", "index": 0}]],
            "right": {"kind": "empty"}}"#,
    );
    let fam = dir.path().join("link.json");
    let gen = run(&[
        "gen",
        "--kind",
        "linkleaf",
        "--script",
        script.to_str().unwrap(),
        "--out",
        fam.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&gen), 0, "{}", stderr_text(&gen));
    let rec = run(&[
        "recognize",
        "--structure",
        "linkleaf",
        "--in",
        fam.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&rec), 0, "{}", stderr_text(&rec));
    // One edge on two vertices: the total procedure must emit a cut.
    let cut = run(&["decide-cut", "--in", fam.to_str().unwrap()]);
    assert_eq!(exit_code(&cut), 0, "{}", stderr_text(&cut));
    assert_eq!(stdout_json(&cut)["kind"], "monoCut");
}

#[test]
fn decide_cut_refuses_families_with_shared_edges() {
    let out = run(&["decide-cut", "--in", fixture().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_text(&out).contains("share"));
}

#[test]
fn gen_rejects_an_invalid_script_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let script = write_family(dir.path(), "bad-script.json", r#"{"blocks": [{"len": 2}]}"#);
    let out = run(&[
        "gen",
        "--kind",
        "cactus",
        "--script",
        script.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn glued_squares_generation_matches_the_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let script = write_family(dir.path(), "gs.json", r#"{"copies": 1}"#);
    let fam = dir.path().join("gs-family.json");
    let gen = run(&[
        "gen",
        "--kind",
        "glued-squares",
        "--script",
        script.to_str().unwrap(),
        "--out",
        fam.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&gen), 0, "{}", stderr_text(&gen));
    let generated = io::import_family(&fam).unwrap();
    let bundled = io::import_family(fixture()).unwrap();
    assert_eq!(
        FamilyDto::from_family(&generated),
        FamilyDto::from_family(&bundled)
    );
}

// ---------------------------------------------------------------------------
// Verify + threshold
// ---------------------------------------------------------------------------

#[test]
fn verify_passes_every_theorem_at_its_smallest_instance() {
    for id in [
        "odd-cycles",
        "woc",
        "odd-char",
        "rgc",
        "cycles-char",
        "edge-disjoint",
        "linkleaf",
        "even-cycles-bound",
        "matroid-span",
    ] {
        let out = run(&["verify", "--theorem", id, "--n", "3"]);
        assert_eq!(exit_code(&out), 0, "theorem {id}: {}", stderr_text(&out));
        let report = stdout_json(&out);
        assert_eq!(report["theoremId"], id);
        assert_eq!(report["totalFailures"], 0);
    }
}

#[test]
fn verify_writes_a_loadable_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "verify",
        "--theorem",
        "odd-cycles",
        "--n",
        "4",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let report = rainbow_harness::report::VerificationReport::load(&path).expect("loads");
    assert_eq!(report.theorem_id, "odd-cycles");
    assert_eq!(report.families_checked, 20);
    assert!(report.passed());
}

#[test]
fn verify_refuses_exhaustive_mode_beyond_the_envelope() {
    let out = run(&["verify", "--theorem", "odd-char", "--n", "5"]);
    assert_eq!(exit_code(&out), 2);
    assert!(
        stderr_text(&out).contains("envelope exceeded without sample mode"),
        "got: {}",
        stderr_text(&out)
    );
}

#[test]
fn verify_rejects_unknown_theorem_ids() {
    let out = run(&["verify", "--theorem", "flux-capacitor", "--n", "4"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn sampled_verification_is_reproducible_for_a_seed() {
    let args = [
        "verify",
        "--theorem",
        "woc",
        "--n",
        "6",
        "--sample",
        "100",
        "--seed",
        "9",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(exit_code(&a), 0, "{}", stderr_text(&a));
    let mut ja = stdout_json(&a);
    let mut jb = stdout_json(&b);
    ja.as_object_mut().unwrap().remove("elapsed");
    jb.as_object_mut().unwrap().remove("elapsed");
    assert_eq!(ja, jb);
    assert_eq!(ja["familiesChecked"], 100);
    assert_eq!(ja["mode"], "sample");
}

#[test]
fn threshold_reports_f4_and_flags_budget_exhaustion() {
    let exact = run(&["threshold", "--n", "4"]);
    assert_eq!(exit_code(&exact), 0, "{}", stderr_text(&exact));
    let result = stdout_json(&exact);
    assert_eq!(result["fOfN"], 4);
    assert_eq!(result["lowerBoundOnly"], false);

    let rushed = run(&["threshold", "--n", "5", "--budget", "0.000001"]);
    assert_eq!(exit_code(&rushed), 1, "{}", stderr_text(&rushed));
    assert_eq!(stdout_json(&rushed)["lowerBoundOnly"], true);
}
