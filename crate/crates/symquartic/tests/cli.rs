//! End-to-end command coverage: every subcommand, every exit status, plus a
//! smoke test of the installed binary itself.

use std::fs;
use std::path::Path;
use std::process::Command;

use symquartic::cli::{dispatch, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};
use symquartic::forms::{make_l, make_robinson, orbit_sum};
use symquartic::poly::Polynomial;
use symquartic::sos::even_l_sos_identity;

fn run(args: &[&str]) -> (i32, String) {
    let owned: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    dispatch(&owned)
}

fn write_poly(dir: &Path, name: &str, f: &Polynomial) -> String {
    let path = dir.join(name);
    fs::write(&path, f.to_canonical_string()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn form_prints_canonical_text_that_round_trips() {
    let (code, out) = run(&["form", "L:5"]);
    assert_eq!(code, EXIT_OK);
    let parsed = Polynomial::parse(&out).unwrap();
    assert_eq!(parsed, make_l(5).unwrap());
    assert!(out.starts_with("poly n=5 d=4\n"));
}

#[test]
fn form_rejects_unknown_and_malformed_identifiers() {
    for bad in ["L:3", "C:5", "Q:4", "L:", "lift:0:L:4", "robinson:extra"] {
        let (code, out) = run(&["form", bad]);
        assert_eq!(code, EXIT_USAGE, "form {bad} should be a usage error");
        assert!(out.starts_with("error:"), "got: {out}");
    }
}

#[test]
fn eval_prints_an_exact_rational() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_poly(dir.path(), "l4.poly", &make_l(4).unwrap());

    let (code, out) = run(&["eval", &path, "1,0,0,0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "3/1\n");

    let (code, out) = run(&["eval", &path, "1/2,-1/2,0,0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1/1\n"); // homogeneous degree 4: (1/2)^4 * f(1,-1,0,0) = 16/16

    let (code, out) = run(&["eval", &path, "1,0,0"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.contains("error:"));
}

#[test]
fn psd_distinguishes_the_three_outcomes() {
    let dir = tempfile::tempdir().unwrap();

    let psd_path = write_poly(dir.path(), "l5.poly", &make_l(5).unwrap());
    let (code, out) = run(&["psd", &psd_path]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verdict: psd"));

    let neg = make_l(5).unwrap().neg();
    let neg_path = write_poly(dir.path(), "neg.poly", &neg);
    let (code, out) = run(&["psd", &neg_path]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert!(out.contains("verdict: not_psd"));
    assert!(out.contains("witness:"));

    // Degree 6 is out of scope for the quartic decision procedure.
    let sextic_path = write_poly(dir.path(), "sextic.poly", &make_robinson());
    let (code, out) = run(&["psd", &sextic_path]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.starts_with("error:"));
}

#[test]
fn notsos_reports_verdicts_weights_and_seed() {
    let dir = tempfile::tempdir().unwrap();
    let l5_path = write_poly(dir.path(), "l5.poly", &make_l(5).unwrap());

    let (code, out) = run(&["notsos", &l5_path]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("weights: 2,3"));
    assert!(out.contains("kernel_dimension: 0"));
    assert!(out.contains("verdict: not_sos"));
    assert!(out.contains("replay: passed"));

    // Explicit weights equal to the default change nothing.
    let (code, explicit) = run(&["notsos", &l5_path, "--weights", "2,3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(explicit, out);

    // A strict subset of zeros leaves surviving square candidates.
    let (code, out) = run(&["notsos", &l5_path, "--weights", "2"]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert!(out.contains("verdict: inconclusive"));
    assert!(out.contains("reason:"));

    // The replay seed is recorded for reproducibility.
    let (code, out) = run(&["notsos", &l5_path, "--seed", "7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("replay_seed: 7"));

    // A strictly positive form does not vanish on the candidate zero set,
    // so the method reports inconclusive rather than claiming anything.
    let positive = orbit_sum(4, &[4]).unwrap();
    let pos_path = write_poly(dir.path(), "pos.poly", &positive);
    let (code, out) = run(&["notsos", &pos_path]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert!(out.contains("verdict: inconclusive"));

    let (code, out) = run(&["notsos", &l5_path, "--weights", "2,x"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.starts_with("error:"));

    let (code, out) = run(&["notsos", &l5_path, "--weights", "9"]);
    assert_eq!(code, EXIT_USAGE, "weight exceeding n must be rejected: {out}");
}

#[test]
fn verify_sos_answers_true_and_false() {
    let dir = tempfile::tempdir().unwrap();
    let id = even_l_sos_identity(4).unwrap();

    let target_path = write_poly(dir.path(), "target.poly", &id.target);
    let summands_path = dir.path().join("summands.txt");
    fs::write(&summands_path, id.summands_to_text()).unwrap();
    let summands_path = summands_path.to_str().unwrap().to_string();

    let (code, out) = run(&["verify-sos", &target_path, &summands_path]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "identity: true\n");

    // Any perturbation of the target breaks exact equality.
    let wrong = id.target.add(&orbit_sum(4, &[4]).unwrap()).unwrap();
    let wrong_path = write_poly(dir.path(), "wrong.poly", &wrong);
    let (code, out) = run(&["verify-sos", &wrong_path, &summands_path]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert_eq!(out, "identity: false\n");
}

#[test]
fn chart_renders_and_validates_bounds() {
    let (code, out) = run(&["chart", "6", "8"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("2d\\n"));
    assert!(out.contains('Y') && out.contains('N'));

    let (code, out) = run(&["chart", "6", "8", "--unicode"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains('\u{2713}') && out.contains('\u{00d7}'));

    let (code, _) = run(&["chart", "1", "8"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _) = run(&["chart", "6", "7"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn lift_multiplies_by_the_squared_coordinate_sum() {
    let dir = tempfile::tempdir().unwrap();
    let l4_path = write_poly(dir.path(), "l4.poly", &make_l(4).unwrap());

    let (code, out) = run(&["lift", &l4_path, "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("poly n=4 d=6\n"));
    let lifted = Polynomial::parse(&out).unwrap();
    assert_eq!(lifted, symquartic::forms::lift(&make_l(4).unwrap(), 1).unwrap());

    let (code, out) = run(&["lift", &l4_path, "0"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.starts_with("error:"));
}

#[test]
fn installed_binary_matches_dispatch_and_splits_streams() {
    let exe = env!("CARGO_BIN_EXE_symq");

    let ok = Command::new(exe).args(["form", "L:4"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let (_, expected) = run(&["form", "L:4"]);
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), expected);
    assert!(ok.stderr.is_empty());

    let err = Command::new(exe).output().unwrap();
    assert_eq!(err.status.code(), Some(EXIT_USAGE));
    assert!(err.stdout.is_empty());
    assert!(String::from_utf8(err.stderr).unwrap().contains("usage:"));

    let negative = Command::new(exe).args(["chart", "1", "2"]).output().unwrap();
    assert_eq!(negative.status.code(), Some(EXIT_USAGE));
}
