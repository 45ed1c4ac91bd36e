use std::io::Cursor;
use std::path::{Path, PathBuf};
use std::process::Command;

use plats::canonical::{apply_symmetry, SymmetryElement};
use plats::format::{parse_plat, serialize_plat};
use plats_cli::{run, run_with_input, CommandOutcome};

const FIG1: &str = "plat m=3 n=6 closure=standard\n-3 -4\n-4 -3 -4\n-4 -4\n-4 -4 -4\n-4 -4\n";

fn fig1_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/fig1.plat")
}

struct Scratch(tempfile::TempDir);

impl Scratch {
    fn new(tag: &str) -> Self {
        Scratch(tempfile::Builder::new().prefix(&format!("plats-{tag}-")).tempdir().unwrap())
    }

    fn file(&self, name: &str, body: &str) -> String {
        let p = self.0.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_string()
    }
}

fn cli(args: &[&str]) -> CommandOutcome {
    run(std::iter::once("plats").chain(args.iter().copied()))
}

fn cli_stdin(args: &[&str], input: &str) -> CommandOutcome {
    run_with_input(std::iter::once("plats").chain(args.iter().copied()), &mut Cursor::new(input.as_bytes().to_vec()))
}

/// Asserts a domain failure whose machine report names `error`.
fn domain_error(args: &[&str], error: &str) {
    let mut full = vec!["--format", "machine"];
    full.extend_from_slice(args);
    let out = cli(&full);
    assert_eq!(out.exit_status, 1, "{args:?}: {}", out.report);
    assert!(out.report.starts_with(&format!("error={error}\n")), "{args:?}: {}", out.report);
    let human = cli(args);
    assert_eq!(human.exit_status, 1);
    assert!(human.report.starts_with(&format!("error: {error}:")), "{}", human.report);
}

fn field<'a>(report: &'a str, key: &str) -> &'a str {
    report
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in {report}"))
}

#[test]
fn shipped_fig1_matches_fixture() {
    assert_eq!(std::fs::read_to_string(fig1_path()).unwrap(), FIG1);
}

#[test]
fn validate_fig1() {
    let out = cli(&["--format", "machine", "validate", fig1_path().to_str().unwrap()]);
    assert_eq!(out.exit_status, 0);
    assert_eq!(field(&out.report, "twist_regions"), "12");
    assert_eq!(field(&out.report, "crossings"), "46");
    assert_eq!(field(&out.report, "components"), "2");
    assert_eq!(field(&out.report, "three_highly_twisted"), "true");
}

#[test]
fn reads_standard_input() {
    let a = cli_stdin(&["--format", "machine", "validate"], FIG1);
    let b = cli_stdin(&["--format", "machine", "validate", "-"], FIG1);
    assert_eq!(a.exit_status, 0);
    assert_eq!(a, b);
    assert_eq!(field(&a.report, "m"), "3");
}

#[test]
fn distance_prints_banner() {
    let out = cli(&["distance", fig1_path().to_str().unwrap()]);
    assert_eq!(out.exit_status, 0);
    assert!(out.report.contains("4m(m-2) = 12"), "{}", out.report);
    assert!(out.report.contains("bridge distance: 3"));
    let machine = cli(&["--format", "machine", "distance", fig1_path().to_str().unwrap()]);
    assert_eq!(field(&machine.report, "bridge_distance"), "3");
    assert_eq!(field(&machine.report, "length_ok"), "false");
}

#[test]
fn distance_without_banner_when_long_enough() {
    let s = Scratch::new("long");
    let rows: String = (1..14).map(|i| if i % 2 == 1 { "3 3\n" } else { "3 3 3\n" }).collect();
    let f = s.file("long.plat", &format!("plat m=3 n=14 closure=standard\n{rows}"));
    let out = cli(&["distance", &f]);
    assert_eq!(out.exit_status, 0);
    assert!(!out.report.contains("note:"));
    assert!(out.report.contains("bridge distance: 7"));
}

fn qualifying_grid() -> plats::plat::PlatGrid {
    // m=3, n=14, every |a| >= 3 and no symmetry
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for i in 1..14 {
        let w = if i % 2 == 1 { 2 } else { 3 };
        rows.push((0..w).map(|j| 3 + ((i * 7 + j * 3) % 4) as i64).collect());
    }
    rows[0][0] = -5;
    plats::plat::PlatGrid::standard(3, 14, rows).unwrap()
}

#[test]
fn eq_on_orbit_images() {
    let s = Scratch::new("eq");
    let g = qualifying_grid();
    let a = s.file("a.plat", &serialize_plat(&g));
    for sym in SymmetryElement::ALL {
        let b = s.file("b.plat", &serialize_plat(&apply_symmetry(&g, sym).unwrap()));
        let out = cli(&["eq", &a, &b]);
        assert_eq!(out.exit_status, 0);
        assert_eq!(out.report, "EQUAL\n", "{sym:?}");
    }
    let other = s.file("c.plat", &serialize_plat(&g.with_entry(7, 2, 9)));
    assert_eq!(cli(&["eq", &a, &other]).report, "DISTINCT\n");
    let machine = cli(&["--format", "machine", "eq", &a, &other]);
    assert_eq!(machine.report, "verdict=DISTINCT\n");
}

#[test]
fn eq_outside_the_hypotheses() {
    let f = fig1_path();
    let f = f.to_str().unwrap();
    let out = cli(&["--format", "machine", "eq", f, f]);
    assert_eq!(out.exit_status, 0);
    assert_eq!(field(&out.report, "verdict"), "HYPOTHESES_NOT_MET");
    assert!(field(&out.report, "first_unmet").contains("length n=6"));
}

#[test]
fn canon_output_parses_and_is_fixed() {
    let out = cli(&["canon", fig1_path().to_str().unwrap()]);
    assert_eq!(out.exit_status, 0);
    assert!(out.report.starts_with("# realized by both, orbit size 4\n"));
    let c = parse_plat(&out.report).unwrap();
    assert_eq!(c.rows(), &[vec![-4, -4], vec![-4, -4, -4], vec![-4, -4], vec![-4, -3, -4], vec![-4, -3]]);
    let again = cli_stdin(&["canon"], &out.report);
    assert!(again.report.starts_with("# realized by identity"));
    let machine = cli(&["--format", "machine", "canon", fig1_path().to_str().unwrap()]);
    assert_eq!(machine.report.lines().filter(|l| l.starts_with("row=")).count(), 5);
}

#[test]
fn braid_both_directions() {
    let out = cli(&["braid", fig1_path().to_str().unwrap()]);
    assert_eq!(out.exit_status, 0);
    let word = out.report.trim();
    assert!(word.starts_with("s2^-3 s4^-4 s1^-4"));
    let back = cli(&["braid", "--word", word, "--strands", "6"]);
    assert_eq!(back.exit_status, 0, "{}", back.report);
    assert_eq!(back.report, FIG1);
    let padded = cli(&["braid", "--word", "s2^3 s1^-3 s3^-3", "--strands", "4", "--n", "4"]);
    assert_eq!(padded.report, "plat m=2 n=4 closure=standard\n3\n-3 -3\n0\n");
}

#[test]
fn spheres_listing_and_checks() {
    let f = fig1_path();
    let f = f.to_str().unwrap();
    let out = cli(&["--format", "machine", "spheres", f]);
    assert_eq!(field(&out.report, "vertical_spheres"), "4");
    assert!(out.report.contains("sphere=S(1,1,1,1,1)\n"));

    let check = cli(&["--format", "machine", "spheres", f, "--check", "1,1,1,1,1"]);
    assert_eq!(field(&check.report, "kind"), "vertical");
    assert_eq!(field(&check.report, "gaps"), "3,2,3,2,3");
    let almost = cli(&["--format", "machine", "spheres", f, "--check", "0,1,1,1,1"]);
    assert_eq!(field(&almost.report, "kind"), "almost-vertical");

    let region = cli(&["--format", "machine", "spheres", f, "--region", "3,2"]);
    assert_eq!(region.exit_status, 0);
    assert_eq!(field(&region.report, "class"), "almost-allowable");

    let corners = cli(&["--format", "machine", "spheres", f, "--corner", "all"]);
    assert_eq!(field(&corners.report, "corner_TL"), "-4/13");
    assert_eq!(field(&corners.report, "corner_BR"), "-4/17");

    let classes = cli(&["--format", "machine", "spheres", f, "--classify"]);
    let extreme = classes.report.lines().filter(|l| l.ends_with("=extreme")).count();
    assert_eq!(extreme, 8);
}

#[test]
fn knot_codes() {
    let s = Scratch::new("codes");
    let trefoil = s.file("t.plat", "plat m=2 n=2 closure=standard\n3\n");
    let pd = cli(&["pd", &trefoil]);
    assert_eq!(pd.exit_status, 0);
    assert_eq!(pd.report.matches("X(").count(), 3);
    let gauss = cli(&["gauss", &trefoil]);
    assert_eq!(gauss.report.split_whitespace().count(), 6);
    let fp = cli(&["--format", "machine", "fingerprint", &trefoil]);
    assert_eq!(field(&fp.report, "determinant"), "3");
    assert_eq!(field(&fp.report, "alexander_polynomial"), "1 - t + t^2");
    let link = cli(&["--format", "machine", "fingerprint", fig1_path().to_str().unwrap()]);
    assert_eq!(field(&link.report, "components"), "2");
    assert!(!link.report.contains("alexander"));
}

#[test]
fn svg_with_overlay() {
    let f = fig1_path();
    let f = f.to_str().unwrap();
    let plain = cli(&["svg", f]);
    assert!(plain.report.starts_with("<svg"));
    assert!(!plain.report.contains("class=\"sphere\""));
    let overlay = cli(&["svg", f, "--sphere", "1,1,1,1,1"]);
    assert!(overlay.report.contains("class=\"sphere\""));
    domain_error(&["svg", f, "--sphere", "1,1"], "NotASphere");
}

#[test]
fn census_reports_and_is_reproducible() {
    let args = ["--format", "machine", "census", "--m", "3", "--n", "6", "--coeffs", "-3,-4", "--sample-k", "20", "--seed", "9", "--dump"];
    let a = cli(&args);
    assert_eq!(a.exit_status, 0, "{}", a.report);
    assert_eq!(field(&a.report, "total_grids"), "4096");
    assert_eq!(field(&a.report, "orbits"), "1104");
    assert_eq!(a.report.lines().filter(|l| l.starts_with("grid=")).count(), 20);
    assert_eq!(a, cli(&args));
    let other_seed = cli(&["--format", "machine", "census", "--m", "3", "--n", "6", "--coeffs", "-3,-4", "--sample-k", "20", "--seed", "10", "--dump"]);
    assert_ne!(a.report, other_seed.report);
}

#[test]
fn machine_output_is_stable() {
    let f = fig1_path();
    let f = f.to_str().unwrap();
    for cmd in ["validate", "canon", "distance", "spheres", "pd", "fingerprint", "braid"] {
        assert_eq!(cli(&["--format", "machine", cmd, f]), cli(&["--format", "machine", cmd, f]), "{cmd}");
    }
}

#[test]
fn every_error_type_is_reachable() {
    let s = Scratch::new("errors");
    let fig1 = fig1_path();
    let fig1 = fig1.to_str().unwrap();
    let odd = s.file("odd.plat", "plat m=3 n=5 closure=standard\n3 3\n3 3 3\n3 3\n3 3 3\n");
    let ragged = s.file("ragged.plat", "plat m=3 n=4 closure=standard\n3 3\n3 3\n3 3\n");
    let junk = s.file("junk.plat", "plot m=3\n");
    let zero = s.file("zero.plat", "plat m=3 n=6 closure=standard\n0 0\n0 0 0\n0 0\n0 0 0\n0 0\n");
    let narrow = s.file("narrow.plat", "plat m=2 n=6 closure=standard\n3\n3 3\n3\n3 3\n3\n");
    let even = s.file("even.plat", "plat m=3 n=5 closure=even\n3 3\n3 3 3\n3 3\n3 3 3\n");

    domain_error(&["validate", &odd], "ParityError");
    domain_error(&["validate", &ragged], "ShapeError");
    domain_error(&["validate", &junk], "SyntaxError");
    domain_error(&["validate", "/nonexistent/x.plat"], "IoError");

    domain_error(&["braid", "--word", "s2^x", "--strands", "6"], "SyntaxError");
    domain_error(&["braid", "--word", "s9^1", "--strands", "6"], "SyntaxError");
    domain_error(&["braid", "--word", "s1^1", "--strands", "2"], "ShapeError");
    domain_error(&["braid", "--word", "s1^1 s2^1", "--strands", "6"], "NotStandardForm");
    domain_error(&["braid", "--word", "s2^3 s1^-3 s3^-3", "--strands", "4"], "AmbiguousLength");

    domain_error(&["spheres", fig1, "--check", "1,1,1"], "NotASphere");
    domain_error(&["spheres", fig1, "--check", "1,5,1,1,1"], "NotASphere");
    domain_error(&["spheres", fig1, "--check", "1,1,2,1,1"], "NotASphere");
    domain_error(&["spheres", fig1, "--check", "0,1,1,1,0"], "NotAlmostVertical");
    domain_error(&["spheres", fig1, "--region", "9,9"], "IndexOutOfRange");
    domain_error(&["spheres", fig1, "--region", "1,1"], "ExtremeRegion");
    domain_error(&["spheres", &narrow, "--region", "3,1"], "NoIsolatingSphere");
    domain_error(&["spheres", &zero, "--corner", "TL"], "DegenerateFraction");

    domain_error(&["census", "--m", "3", "--n", "6", "--coeffs", "1", "--cmin", "3"], "InvalidCensus");
    domain_error(&["census", "--m", "3", "--n", "5", "--coeffs", "3"], "InvalidCensus");

    domain_error(&["pd", &zero], "EmptyDiagram");
    domain_error(&["gauss", fig1], "NotAKnot");
    domain_error(&["distance", &narrow], "HypothesesNotMet");
    domain_error(&["canon", &even], "EvenPlatUnsupported");
}

#[test]
fn usage_errors_name_the_flag() {
    let out = cli(&["validate", "--bogus"]);
    assert_eq!(out.exit_status, 2);
    assert!(out.report.contains("--bogus"));
    let out = cli(&["census", "--m", "3", "--n", "6"]);
    assert_eq!(out.exit_status, 2);
    assert!(out.report.contains("--coeffs"));
    let out = cli(&["spheres", "--region", "1"]);
    assert_eq!(out.exit_status, 2);
    assert!(out.report.contains("--region"));
    let out = cli(&["--format", "yaml", "validate"]);
    assert_eq!(out.exit_status, 2);
    assert!(out.report.contains("--format"));
    assert_eq!(cli(&[]).exit_status, 2);
    assert_eq!(cli(&["--help"]).exit_status, 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_plats");
    let ok = Command::new(bin).args(["distance", fig1_path().to_str().unwrap()]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("bridge distance: 3"));

    let s = Scratch::new("bin");
    let odd = s.file("odd.plat", "plat m=3 n=5 closure=standard\n3 3\n3 3 3\n3 3\n3 3 3\n");
    let bad = Command::new(bin).args(["validate", &odd]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("ParityError"));

    let usage = Command::new(bin).args(["validate", "--nope"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
