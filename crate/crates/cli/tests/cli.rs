use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

const TETRA: &str = "g 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
const EDGE: &str = "g 2 1\n1 2\n";
const WHEEL: &str = "g 6 10\n2 3\n3 4\n4 5\n5 6\n6 2\n1 2\n1 3\n1 4\n1 5\n1 6\n";
const SO3: &str = "dim 3\nx3*xi1*xi2 + x1*xi2*xi3 + x2*xi3*xi1\n";

fn file(name: &str, body: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

fn gckit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gckit"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn version_names_the_format() {
    let o = gckit(&["--version"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "gckit-fmt/1\n");
}

#[test]
fn reduced_tetrahedral_flow() {
    let t = file("tetra_reduce", TETRA);
    let o = gckit(&["orient", "--reduce", t.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "1 * o 4 : 0 1 ; 2 4 ; 2 5 ; 2 3\n\
         -3 * o 4 : 0 3 ; 1 4 ; 2 5 ; 2 3\n\
         -3 * o 4 : 0 3 ; 4 5 ; 1 2 ; 2 4\n"
    );
}

#[test]
fn output_does_not_depend_on_jobs() {
    let t = file("tetra_jobs", TETRA);
    let w = file("wheel_jobs", WHEEL);
    let (t, w) = (t.to_str().unwrap(), w.to_str().unwrap());
    for args in [
        vec!["orient", t],
        vec!["d", w],
        vec!["kernel", "--vertices", "5", "--edges", "8"],
    ] {
        let one = gckit(&[&["--jobs", "1"], args.as_slice()].concat());
        let four = gckit(&[&["--jobs", "4"], args.as_slice()].concat());
        assert_eq!(code(&one), 0);
        assert_eq!(one.stdout, four.stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    let e = file("edge", EDGE);
    let t = file("tetra", TETRA);
    let w = file("wheel", WHEEL);
    let bad = file("bad", "g 3 1\n1 9\n");
    let (e, t, w) = (
        e.to_str().unwrap(),
        t.to_str().unwrap(),
        w.to_str().unwrap(),
    );

    let d = gckit(&["d", e]);
    assert_eq!((code(&d), stdout(&d)), (0, "0\n".to_string()));
    assert_eq!(code(&gckit(&["cocycle", t])), 0);

    let no = gckit(&["cocycle", w]);
    assert_eq!((code(&no), stdout(&no)), (1, "cocycle: no\n".to_string()));
    assert_eq!(code(&gckit(&["rules-check", t])), 1);

    assert_eq!(code(&gckit(&["d", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&gckit(&["d", "/nonexistent/graph"])), 2);
    assert_eq!(code(&gckit(&["bogus"])), 2);
    assert_eq!(code(&gckit(&["--jobs", "0", "d", e])), 2);
}

#[test]
fn fold_rejects_an_unpaired_term() {
    let s = file("unpaired", "1 * o 4 : 0 3 ; 1 4 ; 2 5 ; 2 3\n");
    assert_eq!(code(&gckit(&["fold", s.to_str().unwrap()])), 1);
}

#[test]
fn emitted_sums_read_back() {
    let t = file("tetra_round", TETRA);
    let flow = stdout(&gckit(&["orient", t.to_str().unwrap()]));
    let folded = stdout(&gckit(&["fold", file("flow", &flow).to_str().unwrap()]));
    assert!(folded.contains("skew"));
    // the folded text is itself a valid orgraph sum with the same evaluation
    let p = file("so3", SO3);
    let direct = gckit(&[
        "eval",
        "--poisson",
        p.to_str().unwrap(),
        file("flow2", &flow).to_str().unwrap(),
    ]);
    let via = gckit(&[
        "eval",
        "--poisson",
        p.to_str().unwrap(),
        file("folded", &folded).to_str().unwrap(),
    ]);
    assert_eq!(code(&direct), 0);
    assert_eq!(direct.stdout, via.stdout);

    let w = file("wheel_round", WHEEL);
    let d = stdout(&gckit(&["d", w.to_str().unwrap()]));
    let again = gckit(&["cocycle", file("dw", &d).to_str().unwrap()]);
    assert_eq!(code(&again), 0);
}

#[test]
fn corollary_and_schouten() {
    let t = file("tetra_cor", TETRA);
    let p = file("so3_cor", SO3);
    let o = gckit(&[
        "verify-corollary",
        "--graph",
        t.to_str().unwrap(),
        "--poisson",
        p.to_str().unwrap(),
    ]);
    assert_eq!(
        (code(&o), stdout(&o)),
        (0, "corollary 1: holds\n".to_string())
    );

    let f = file("f", "xi1\n");
    let g = file("g", "x1^2\n");
    let s = gckit(&[
        "--dim",
        "1",
        "schouten",
        f.to_str().unwrap(),
        g.to_str().unwrap(),
    ]);
    assert_eq!(code(&s), 0);
    assert_eq!(stdout(&s), "2*x1\n");
    assert_eq!(
        code(&gckit(&[
            "schouten",
            f.to_str().unwrap(),
            g.to_str().unwrap()
        ])),
        2
    );
}
