use qloop_cli::{run, truncation_order, EXIT_FAIL, EXIT_OK, EXIT_USAGE, TRUNC_ENV};
use std::path::PathBuf;

fn spec(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "specs", name].iter().collect();
    p.display().to_string()
}

fn qloop(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qloop").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Data rows as column vectors, header lines dropped.
fn rows(out: &str) -> Vec<Vec<String>> {
    out.lines().skip(2).map(|l| l.split('\t').map(String::from).collect()).collect()
}

fn col(out: &str, name: &str) -> usize {
    out.lines().nth(1).unwrap().split('\t').position(|c| c == name).unwrap()
}

/// Output without the timing column, for reproducibility checks.
fn without_runtime(out: &str) -> Vec<Vec<String>> {
    let rt = col(out, "runtime_ms");
    rows(out)
        .into_iter()
        .map(|mut r| {
            r.remove(rt);
            r
        })
        .collect()
}

#[test]
fn rmatrix_check_reports_seven_passes() {
    let (code, out, _) = qloop(&["rmatrix", "--check", "2", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("#qloop-tsv\t1\trmatrix\n"));
    let r = rows(&out);
    assert_eq!(r.len(), 7);
    assert!(r.iter().all(|row| row[2] == "PASS"));
}

#[test]
fn pairing_values() {
    let (code, out, _) = qloop(&["pairing", "1", "1", "2", "2", "0", "2", "2", "0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(rows(&out)[0][3], "(1)/(q^2)");
    let (_, out, _) = qloop(&["rmatrix", "--pairing", "1", "1", "1", "1", "0", "1", "1", "0"]);
    assert_eq!(rows(&out)[0][3], "1");
    let (code, _, err) = qloop(&["pairing", "1", "1", "3", "1", "0", "1", "1", "0"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("outside"));
}

#[test]
fn natural_sweep_has_one_false_row() {
    let f = spec("natural.spec");
    let (code, out, _) = qloop(&["sweep", "--spec", &f, "--grid", "a2=q^-3..q^3"]);
    assert_eq!(code, EXIT_OK);
    let (p, o) = (col(&out, "predicate"), col(&out, "oracle"));
    let r = rows(&out);
    assert_eq!(r.len(), 7);
    let false_rows: Vec<_> = r.iter().filter(|row| row[p] == "false").collect();
    assert_eq!(false_rows.len(), 1);
    assert_eq!(false_rows[0][0], "a2=q^2");
    assert!(r.iter().all(|row| row[p] == row[o]));
}

#[test]
fn output_is_reproducible_and_ordered() {
    let f = spec("web_a.spec");
    let (_, a, _) = qloop(&["cyclicity", "--spec", &f, "--mode", "lowest"]);
    let (_, b, _) = qloop(&["--sequential", "cyclicity", "--spec", &f, "--mode", "lowest"]);
    assert_eq!(without_runtime(&a), without_runtime(&b));
    assert_eq!(rows(&a)[0][0], "b1=0,a2=0");
    assert_eq!(rows(&a).last().unwrap()[0], "b1=q^3,a2=q^3");
}

#[test]
fn web_grid_predicate_matches_oracle() {
    let f = spec("web_a.spec");
    for mode in ["highest", "lowest", "simple"] {
        let (code, out, _) = qloop(&["cyclicity", "--spec", &f, "--mode", mode, "--oracle", "--predicate"]);
        assert_eq!(code, EXIT_OK, "{mode}");
        let (p, o) = (col(&out, "predicate"), col(&out, "oracle"));
        let r = rows(&out);
        assert_eq!(r.len(), 20);
        assert!(r.iter().all(|row| row[p] == row[o] && row[p] != "-"));
    }
}

#[test]
fn flags_select_columns() {
    let f = spec("kr21.spec");
    let (_, out, _) = qloop(&["cyclicity", "--spec", &f, "--predicate"]);
    let r = &rows(&out)[0];
    assert_eq!(r[col(&out, "oracle")], "-");
    assert_eq!(r[col(&out, "predicate")], "true");
}

#[test]
fn kr_hypothesis_and_violation() {
    let (code, out, _) = qloop(&["cyclicity", "--spec", &spec("kr21.spec"), "--oracle", "--predicate"]);
    assert_eq!(code, EXIT_OK);
    let r = &rows(&out)[0];
    assert_eq!(r[col(&out, "criterion")], "kr-sufficient");
    assert_eq!(r[col(&out, "oracle")], "true");

    let (code, out, _) = qloop(&["cyclicity", "--spec", &spec("kr_violating.spec")]);
    assert_eq!(code, EXIT_OK);
    let r = &rows(&out)[0];
    assert_eq!(r[col(&out, "predicate")], "false");
    assert_eq!(r[col(&out, "oracle")], "false");
    assert_eq!(r[col(&out, "closure_dim")], "5");
}

#[test]
fn character_of_kr_product() {
    let (code, out, _) = qloop(&["character", "--spec", &spec("kr21.spec")]);
    assert_eq!(code, EXIT_OK);
    let total: u64 = rows(&out).iter().map(|r| r[1].parse::<u64>().unwrap()).sum();
    assert_eq!(total, 16);
    assert!(rows(&out).iter().all(|r| r[0].split(',').count() == 3));
}

#[test]
fn drinfeld_relations_pass() {
    let f = spec("natural21.spec");
    let (code, out, _) = qloop(&["drinfeld", "--spec", &f, "--order", "6", "--verify", "cartan", "--verify", "xx"]);
    assert_eq!(code, EXIT_OK);
    let r = rows(&out);
    assert!(r.iter().any(|row| row[0] == "gauss-s"));
    assert!(r.iter().any(|row| row[0].starts_with('[')));
    assert!(r.iter().all(|row| row[3] == "PASS"));

    let (code, out, _) = qloop(&["drinfeld", "--spec", &f, "--verify", "appendix"]);
    assert_eq!(code, EXIT_OK);
    assert!(rows(&out).iter().any(|row| row[0] == "zero node" && row[4].starts_with("scalar")));
}

#[test]
fn drinfeld_needs_both_halves() {
    let (code, _, err) = qloop(&["drinfeld", "--spec", &spec("dual_prime.spec")]);
    assert_eq!(code, EXIT_FAIL);
    assert!(err.contains("T(z)"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qloop(&[]).0, EXIT_USAGE);
    assert_eq!(qloop(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(qloop(&["rmatrix"]).0, EXIT_USAGE);
    assert_eq!(qloop(&["cyclicity", "--spec", "/no/such/file"]).0, EXIT_USAGE);
    assert_eq!(qloop(&["cyclicity", "--spec", &spec("kr21.spec"), "--mode", "sideways"]).0, EXIT_USAGE);
    let (code, _, err) = qloop(&["sweep", "--spec", &spec("natural.spec"), "--grid", "a2=q..2*q"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("coefficient"));
    // grids are only expanded by cyclicity and sweep
    assert_eq!(qloop(&["character", "--spec", &spec("natural.spec")]).0, EXIT_USAGE);
}

#[test]
fn spec_errors_are_positioned() {
    let dir = std::env::temp_dir().join(format!("qloop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("bad.spec");
    std::fs::write(&f, "algebra 1 1\nfactor natural a=q\nfactor gl11prime a=1 b=1\n").unwrap();
    let (code, _, err) = qloop(&["character", "--spec", f.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 3, column 8"), "{err}");
}

#[test]
fn help_and_version_succeed() {
    let (code, out, _) = qloop(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("sweep"));
}

#[test]
fn truncation_order_precedence() {
    // the only test touching the environment
    std::env::remove_var(TRUNC_ENV);
    assert_eq!(truncation_order(None, 8).unwrap(), 8);
    std::env::set_var(TRUNC_ENV, "5");
    assert_eq!(truncation_order(None, 8).unwrap(), 5);
    assert_eq!(truncation_order(Some(3), 8).unwrap(), 3);
    std::env::set_var(TRUNC_ENV, "many");
    assert!(truncation_order(None, 8).is_err());
    std::env::remove_var(TRUNC_ENV);
}
