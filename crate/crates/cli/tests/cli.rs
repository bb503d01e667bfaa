use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use kprom::harness::{CheckReport, Status};
use kprom::noncrossing::NoncrossingMatching;
use kprom::plabic::{Classification, Face, TripDigraph};
use kprom::tableaux::{AnyTableau, LatticeWord};
use kprom::{NoncrossingSetPartition, PlabicGraph, PromotionDigraph};
use serde::de::DeserializeOwned;
use serde_json::Value;

const T_432: &str = r#"{"kind":"standard","shape":[4,3,2],"rows":[[1,3,4,6],[2,5,9],[7,8]],"q":9,"offset":0}"#;
const U_333: &str = r#"{"kind":"standard","shape":[3,3,3],"rows":[[1,2,6],[3,5,8],[4,7,9]],"q":9,"offset":0}"#;
const INC_543: &str = r#"{"kind":"increasing","shape":[5,4,3],"rows":[[1,2,3,5,7],[2,3,6,9],[4,6,8]],"q":9,"offset":0}"#;
const INC_2ROW: &str = r#"{"kind":"increasing","shape":[3,3],"rows":[[1,2,4],[3,5,6]],"q":6,"offset":0}"#;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn kprom(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kprom"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Runs with JSON on stdin and expects success.
fn ok(args: &[&str], stdin: &str) -> String {
    let r = kprom(args, Some(stdin));
    assert_eq!(r.code, 0, "kprom {args:?} failed: {}", r.stderr);
    assert!(r.stdout.ends_with('\n'), "output is newline-terminated");
    r.stdout
}

fn parse<T: DeserializeOwned>(s: &str) -> T {
    serde_json::from_str(s.trim()).unwrap_or_else(|e| panic!("{e}: {s}"))
}

fn rows(t: &AnyTableau) -> Vec<Vec<u32>> {
    t.as_dyn().rows().to_vec()
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, content).unwrap();
    p
}

#[test]
fn promote_standard_golden() {
    let t: AnyTableau = parse(&ok(&["promote"], T_432));
    assert_eq!(rows(&t), vec![vec![1, 2, 3, 5], vec![4, 7, 8], vec![6, 9]]);
    let u: AnyTableau = parse(&ok(&["promote", "--steps", "1"], U_333));
    assert_eq!(rows(&u), vec![vec![1, 4, 5], vec![2, 6, 7], vec![3, 8, 9]]);
}

#[test]
fn promote_increasing_golden_via_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "T.json", INC_543);
    let output = dir.path().join("out.json");
    let r = kprom(
        &["promote", "--input", input.to_str().unwrap(), "--output", output.to_str().unwrap()],
        None,
    );
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.is_empty());
    let t: AnyTableau = parse(&std::fs::read_to_string(output).unwrap());
    assert_eq!(
        rows(&t),
        vec![vec![1, 2, 4, 6, 9], vec![2, 5, 7, 8], vec![3, 7, 9]]
    );
}

#[test]
fn promote_steps_compose() {
    let two: AnyTableau = parse(&ok(&["promote", "--steps", "2"], U_333));
    let once = ok(&["promote"], U_333);
    let twice: AnyTableau = parse(&ok(&["promote"], &once));
    assert_eq!(two, twice);
    // Rectangular 3×3: order divides 9.
    let nine: AnyTableau = parse(&ok(&["promote", "--steps", "9"], U_333));
    assert_eq!(nine, parse::<AnyTableau>(U_333));
}

#[test]
fn digraph_dot_golden() {
    let dot = ok(&["digraph", "--i", "1", "--format", "dot"], U_333);
    assert!(dot.starts_with("digraph prom_1 {"));
    let mut edges: Vec<(u32, u32)> = dot
        .lines()
        .filter_map(|l| l.trim().trim_end_matches(';').split_once(" -> "))
        .map(|(a, b)| (a.parse().unwrap(), b.parse().unwrap()))
        .collect();
    edges.sort();
    // Cycles (1 5 8 9 6 7)(2 3 4).
    let mut expected = vec![(1, 5), (5, 8), (8, 9), (9, 6), (6, 7), (7, 1), (2, 3), (3, 4), (4, 2)];
    expected.sort();
    assert_eq!(edges, expected);
}

#[test]
fn digraph_json_roundtrips_through_reconstruct() {
    let one: PromotionDigraph = parse(&ok(&["digraph", "--i", "2"], U_333));
    assert_eq!(one.index(), 2);
    let all = ok(&["digraph"], U_333);
    let ds: Vec<PromotionDigraph> = parse(&all);
    assert_eq!(ds.len(), 2);
    assert_eq!(ds[1], one);
    let back: AnyTableau = parse(&ok(&["reconstruct", "--kind", "standard", "--shape", "3,3,3"], &all));
    assert_eq!(back, parse::<AnyTableau>(U_333));
}

#[test]
fn reconstruct_rect_increasing_roundtrip() {
    let t = r#"{"kind":"increasing","shape":[4,4,4],"rows":[[1,2,3,6],[4,5,6,9],[7,8,9,10]],"q":10}"#;
    let ds = ok(&["digraph"], t);
    let a: AnyTableau = parse(&ok(&["reconstruct", "--kind", "rect-increasing", "--shape", "3x4"], &ds));
    let b: AnyTableau = parse(&ok(
        &["reconstruct", "--kind", "rect-increasing", "--rows", "3", "--cols", "4", "--q", "10"],
        &ds,
    ));
    assert_eq!(a, b);
    assert_eq!(a, parse::<AnyTableau>(t));
}

#[test]
fn reconstruct_rejects_inconsistent_digraphs() {
    let bogus = r#"[{"n":4,"i":1,"edges":[[1,2]]}]"#;
    let r = kprom(&["reconstruct", "--kind", "standard", "--shape", "2,2"], Some(bogus));
    assert_eq!(r.code, 65, "{}", r.stderr);
    let r = kprom(&["reconstruct", "--kind", "rect-increasing"], Some("[]"));
    assert_eq!(r.code, 64);
}

#[test]
fn orbit_reports_period() {
    let v: Value = parse(&ok(&["orbit"], U_333));
    let period = v["period"].as_u64().unwrap() as usize;
    assert!(9 % period == 0);
    let orbit: Vec<AnyTableau> = serde_json::from_value(v["orbit"].clone()).unwrap();
    assert_eq!(orbit.len(), period);
    assert_eq!(orbit[0], parse::<AnyTableau>(U_333));

    let g: Value = parse(&ok(&["orbit", "--gromotion"], U_333));
    let steps = g["orbit"].as_array().unwrap();
    assert_eq!(steps.len(), period);
    let first: AnyTableau = serde_json::from_value(steps[0]["tableau"].clone()).unwrap();
    assert_eq!(rows(&first), vec![vec![2, 5, 6], vec![3, 7, 8], vec![4, 9, 1]]);
}

#[test]
fn lattice_word_roundtrip() {
    let text = ok(&["lattice", "word", "--text"], T_432);
    assert_eq!(text.trim(), "1 2 1 1 2 1 3 3 2");
    let w = ok(&["lattice", "word"], T_432);
    let _: LatticeWord = parse(&w);
    let t: AnyTableau = parse(&ok(&["lattice", "tableau"], &w));
    assert_eq!(t, parse::<AnyTableau>(T_432));
    let u: AnyTableau = parse(&ok(&["lattice", "tableau", "--word", "112321323"], ""));
    assert_eq!(u, parse::<AnyTableau>(U_333));
    let r = kprom(&["lattice", "tableau", "--word", "21"], None);
    assert_eq!(r.code, 65);
}

#[test]
fn nc_subcommands_roundtrip() {
    let two_row = r#"{"kind":"standard","shape":[3,3],"rows":[[1,2,4],[3,5,6]],"q":6}"#;
    let m = ok(&["nc", "tograph"], two_row);
    let matching: NoncrossingMatching = parse(&m);
    let mut pairs = matching.pairs();
    pairs.sort();
    assert_eq!(pairs, vec![(1, 6), (2, 3), (4, 5)]);
    let back: AnyTableau = parse(&ok(&["nc", "tograph-inverse"], &m));
    assert_eq!(back, parse::<AnyTableau>(two_row));

    let p = ok(&["nc", "pi"], INC_2ROW);
    let part: NoncrossingSetPartition = parse(&p);
    assert_eq!(part.block_count(), 3);
    let back: AnyTableau = parse(&ok(&["nc", "pi-inverse", "--cols", "3"], &p));
    assert_eq!(back, parse::<AnyTableau>(INC_2ROW));

    let rot: NoncrossingSetPartition = parse(&ok(&["nc", "rotate"], &p));
    assert_eq!(rot.q(), 6);
    assert_eq!(rot.block_count(), part.block_count());
}

#[test]
fn plabic_subcommands_roundtrip() {
    let part = r#"{"q":6,"blocks":[[1,2,3],[4,5,6]]}"#;
    let web = ok(&["plabic", "from-partition"], part);
    let g: PlabicGraph = parse(&web);
    assert_eq!(g.boundary_count(), 6);

    let v: Value = parse(&ok(&["plabic", "validate"], &web));
    assert_eq!(v["valid"], Value::Bool(true));
    let faces: Vec<Face> = parse(&ok(&["plabic", "faces"], &web));
    assert!(!faces.is_empty());
    let c: Classification = parse(&ok(&["plabic", "classify"], &web));
    assert!(c.planar && c.flamingo);
    assert_eq!(c.k, 2);

    let trip: TripDigraph = parse(&ok(&["plabic", "trip", "--i", "1", "--r", "2"], &web));
    assert_eq!((trip.i, trip.r, trip.n), (1, 2, 6));
    let dot = ok(&["plabic", "trip", "--i", "1", "--r", "2", "--format", "dot"], &web);
    assert!(dot.starts_with("digraph prom_1 {"));

    let rotated: PlabicGraph = parse(&ok(&["plabic", "rotate"], &web));
    assert_eq!(rotated.boundary_count(), 6);
}

#[test]
fn plabic_validate_rejects_bad_graph() {
    let bad = r#"{"n":2,"interior":[],"edges":[[1,3]]}"#;
    let r = kprom(&["plabic", "validate"], Some(bad));
    assert_eq!(r.code, 65);
    let v: Value = parse(&r.stdout);
    assert_eq!(v["valid"], Value::Bool(false));
}

fn lines<T: DeserializeOwned>(s: &str) -> Vec<T> {
    s.lines().map(parse).collect()
}

#[test]
fn enumerate_json_lines() {
    let syt: Vec<AnyTableau> = lines(&ok(&["enumerate", "syt", "--shape", "3,2"], ""));
    assert_eq!(syt.len(), 5);
    let all: Vec<AnyTableau> = lines(&ok(&["enumerate", "syt", "--n", "4"], ""));
    assert_eq!(all.len(), 10);
    let inc: Vec<AnyTableau> = lines(&ok(&["enumerate", "increasing", "--shape", "2x2", "--q", "4"], ""));
    assert!(inc.iter().all(|t| matches!(t, AnyTableau::Increasing(_))));
    let nc: Vec<NoncrossingSetPartition> = lines(&ok(&["enumerate", "nc-partitions", "--q", "5"], ""));
    assert_eq!(nc.len(), 42);
    let m: Vec<NoncrossingMatching> = lines(&ok(&["enumerate", "nc-matchings", "--n", "8"], ""));
    assert_eq!(m.len(), 14);
    let webs: Vec<PlabicGraph> = lines(&ok(&["enumerate", "flamingo", "--n", "6", "--k", "2"], ""));
    assert_eq!(webs.len(), 5);
    let parts: Vec<Vec<usize>> = lines(&ok(&["enumerate", "partitions", "--n", "5"], ""));
    assert_eq!(parts.len(), 7);
    // Same parameters, same stream.
    assert_eq!(
        ok(&["enumerate", "nc-partitions", "--q", "5"], ""),
        ok(&["enumerate", "nc-partitions", "--q", "5"], "")
    );
}

#[test]
fn enumerate_caps_come_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_kprom"))
        .args(["enumerate", "nc-partitions", "--q", "6"])
        .env("KPROM_MAX_NC", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&out.stderr).contains("KPROM_MAX_NC"));
}

#[test]
fn verify_selected_checks() {
    let r = kprom(&["verify", "counting", "balance-two-row", "--balance-two-row-max-q", "6", "--no-timing"], None);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let reports: Vec<CheckReport> = lines(&r.stdout);
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|x| x.status == Status::Pass && x.wall_time_ms.is_none()));
    assert_eq!(reports[1].parameters["max_q"], 6);

    let again = kprom(&["verify", "counting", "balance-two-row", "--balance-two-row-max-q", "6", "--no-timing"], None);
    assert_eq!(again.stdout, r.stdout);
}

#[test]
fn verify_all_on_defaults_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("reports.jsonl");
    let r = kprom(&["verify", "--all", "--output", out.to_str().unwrap()], None);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let reports: Vec<CheckReport> = lines(&std::fs::read_to_string(out).unwrap());
    assert!(reports.len() >= kprom::harness::CHECK_IDS.len());
    assert!(reports.iter().all(|x| matches!(x.status, Status::Pass | Status::ConjectureConsistent)));
}

#[test]
fn exit_codes() {
    assert_eq!(kprom(&[], None).code, 64);
    assert_eq!(kprom(&["frobnicate"], None).code, 64);
    assert_eq!(kprom(&["promote", "--steps", "x"], None).code, 64);
    assert_eq!(kprom(&["promote", "--input", "/nonexistent/T.json"], None).code, 64);
    assert_eq!(kprom(&["promote"], Some("{not json")).code, 65);
    let not_tableau = r#"{"kind":"standard","shape":[2],"rows":[[2,1]],"q":2}"#;
    assert_eq!(kprom(&["promote"], Some(not_tableau)).code, 65);
    assert_eq!(kprom(&["verify", "no-such-check"], None).code, 64);
    assert_eq!(kprom(&["verify"], None).code, 64);
    assert_eq!(kprom(&["--help"], None).code, 0);
    for sub in ["promote", "orbit", "digraph", "reconstruct", "lattice", "nc", "plabic", "enumerate", "verify"] {
        let r = kprom(&[sub, "--help"], None);
        assert_eq!(r.code, 0, "{sub} --help");
        assert!(r.stdout.contains("Usage"));
    }
}

#[test]
fn verify_list_names_every_check() {
    let out = ok(&["verify", "--list"], "");
    let ids: Vec<&str> = out.lines().collect();
    assert_eq!(ids, kprom::harness::CHECK_IDS);
}
