use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/corpus")
        .join(file)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superdim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(file: &str) -> String {
    corpus(file).display().to_string()
}

#[test]
fn ksdim_of_xy() {
    let o = run(&["ksdim", &path("xy.salg")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("Ksdim = 1|0\n"), "{}", stdout(&o));
}

#[test]
fn orbit_through_a_point() {
    let o = run(&[
        "orbit",
        &path("a11.salg"),
        "--derivation",
        "x->0; y->1",
        "--point",
        "x=2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "I = (x - 2), orbit ≅ Λ(y), sdim 0|1, stabilizer trivial\n"
    );
}

#[test]
fn fixed_point_orbit() {
    let o = run(&["orbit", &path("fixed_origin.salg"), "--point", "x=0"]);
    assert_eq!(
        stdout(&o),
        "I = (y, x), orbit ≅ k, sdim 0|0, stabilizer full\n"
    );
}

#[test]
fn predicates_set_the_exit_code() {
    let yes = run(&["odd-regular", &path("lambda2.salg"), "--seq", "y1,y2"]);
    assert_eq!(
        (yes.status.code(), stdout(&yes).as_str()),
        (Some(0), "true\n")
    );
    let no = run(&["odd-regular", &path("xy.salg"), "--seq", "y"]);
    assert_eq!(
        (no.status.code(), stdout(&no).as_str()),
        (Some(1), "false\n")
    );
    assert_eq!(
        run(&["hc", "validate", &path("gl1_bad.shc")]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["hc", "validate", &path("unipotent.shc")])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&["hc", "graded", &path("gl1.shc")]).status.code(),
        Some(0)
    );
    assert_eq!(
        run(&["hc", "graded", &path("unipotent.shc")]).status.code(),
        Some(1)
    );
    let mono = run(&[
        "mono-check",
        &path("a11.salg"),
        &path("xy.salg"),
        "--images",
        "x; y",
    ]);
    assert_eq!(mono.status.code(), Some(0));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = std::env::temp_dir().join(format!("superdim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.salg");
    std::fs::write(&bad, "superalgebra A even x odd y\n  rel x* end\n").unwrap();
    let o = run(&["ksdim", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains(":2:10:"), "{err}");
    assert_eq!(run(&["ksdim", "/nonexistent.salg"]).status.code(), Some(2));
    assert_eq!(
        run(&["odd-regular", &path("xy.salg"), "--seq", "x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["ksdim", &path("xy.salg"), "--field", "fp", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn json_schema() {
    let o = run(&["ksdim", &path("xyy.salg"), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "ksdim");
    assert_eq!(v["result"]["sdim"], "1|1");
    assert_eq!(v["certificate"]["elements"].as_array().unwrap().len(), 1);
    assert_eq!(v["inputs"]["seed"], 0);
    let again = run(&["ksdim", &path("xyy.salg"), "--json"]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn cover_and_localization() {
    let o = run(&[
        "localize",
        &path("plane_xy.salg"),
        "--cover",
        "x1, x2, 1 - x1 - x2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("global 2|0: true"), "{}", stdout(&o));
    let z = run(&["localize", &path("cusp.salg"), "--at", "x"]);
    assert!(stdout(&z).contains("zero ring"));
    let nc = run(&["localize", &path("xy.salg"), "--cover", "x"]);
    assert_eq!(nc.status.code(), Some(2));
}

#[test]
fn hc_arithmetic() {
    let f = path("unipotent.shc");
    let o = run(&[
        "hc",
        "mul",
        &f,
        "[[1, s*t], [0, 1]] | s",
        "[[1, 0], [0, 1]] | t",
    ]);
    assert_eq!(o.status.code(), Some(0));
    // e(s) e(t) = f(-st, 2 E12) e(s + t), and f(-st, 2 E12) cancels the s t entry
    assert!(
        stdout(&o).starts_with("(g = [[1, 0], [0, 1]], a = [s + t])"),
        "{}",
        stdout(&o)
    );
    let r = run(&[
        "hc",
        "mul",
        &f,
        "[[1, s*t], [0, 1]] | s",
        "[[1, 0], [0, 1]] | t",
        "--strategy",
        "rightmost",
    ]);
    assert_eq!(stdout(&o).lines().next(), stdout(&r).lines().next());
    let inv = run(&["hc", "inv", &f, "[[1, 0], [0, 1]] | s"]);
    assert_eq!(stdout(&inv), "(g = [[1, 0], [0, 1]], a = [-s])\n");
    assert_eq!(
        stdout(&run(&["hc", "sdim", &path("gl11.shc")])),
        "sdim = 2|2\n"
    );
}

#[test]
fn verify_orbits_on_the_corpus() {
    for file in ["translate.salg", "fixed_origin.salg", "diagonal.salg"] {
        let o = run(&["verify-orbits", &path(file)]);
        assert_eq!(o.status.code(), Some(0), "{file}: {}", stdout(&o));
        assert_eq!(stdout(&o).lines().count(), 6);
    }
}

#[test]
fn gr_and_bar() {
    let g = run(&["gr", &path("cusp.salg")]);
    assert!(stdout(&g).contains("rel x^2\n"));
    let b = run(&["bar", &path("xy.salg")]);
    assert!(!stdout(&b).contains("rel"));
}

#[test]
fn prime_fields() {
    let o = run(&["--field", "fp", "7", "ksdim", &path("lambda2.salg")]);
    assert!(stdout(&o).starts_with("Ksdim = 0|2"));
}
