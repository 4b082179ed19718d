use std::path::Path;
use std::process::{Command, Output};

use cssc_core::gen::{gen_skeletal_cocycle, skz2};
use cssc_core::FiniteGroup;
use cssc_toolkit::{serialize, Structure, StructureDoc};

fn cssc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cssc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, file: &str, doc: StructureDoc) -> String {
    let p = dir.join(file);
    std::fs::write(&p, serialize(&doc)).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn roundtrip_tl_on_bz2_passes() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bz2.json");
    let f = f.to_str().unwrap();
    assert_eq!(code(&cssc(&["generate", "delooping", "2", "--out", f])), 0);
    let o = cssc(&["roundtrip", "TL", f]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("[pass] FP=1"));
    assert!(stdout(&o).contains("[pass] PF=1"));
}

#[test]
fn broken_pentagon_fails_validation_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let mut omega = vec![0; 8];
    omega[7] = 1;
    let c = gen_skeletal_cocycle(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4), &omega).unwrap();
    let f = write(
        dir.path(),
        "broken.json",
        StructureDoc::new("broken", Structure::CatGroup(c)),
    );
    let o = cssc(&["validate", &f]);
    assert_eq!(code(&o), 1);
    let line = stdout(&o)
        .lines()
        .find(|l| l.contains("[FAIL] pentagon"))
        .map(str::to_owned)
        .expect("pentagon line");
    assert!(line.contains("x=") && line.contains("t="), "{line}");
}

#[test]
fn t_on_non_cssc_module_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let sk = write(
        dir.path(),
        "skz2.json",
        StructureDoc::new("SkZ2", Structure::CatGroup(skz2())),
    );
    let l = dir.path().join("l.json");
    let l = l.to_str().unwrap();
    assert_eq!(code(&cssc(&["functor", "L", &sk, "--out", l])), 0);
    let o = cssc(&["functor", "T", l]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not cssc"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(code(&cssc(&["frobnicate"])), 2);
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(
        &p,
        "{\"kind\":\"catgroup\",\"name\":\"x\",\"format_version\":7,\"payload\":{}}",
    )
    .unwrap();
    let o = cssc(&["validate", p.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("format version 7"));
}

#[test]
fn empty_corpus_passes() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("corpus.manifest"), "# nothing\n").unwrap();
    let o = cssc(&["equivalence", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn generated_corpus_reports_are_independent_of_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("corpus");
    let d = d.to_str().unwrap();
    assert_eq!(code(&cssc(&["generate", "corpus", "--out", d])), 0);
    let r1 = dir.path().join("r1.json");
    let r4 = dir.path().join("r4.json");
    let a = cssc(&[
        "equivalence",
        d,
        "--jobs",
        "1",
        "--report",
        r1.to_str().unwrap(),
    ]);
    let b = cssc(&[
        "equivalence",
        d,
        "--jobs",
        "4",
        "--report",
        r4.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(std::fs::read(&r1).unwrap(), std::fs::read(&r4).unwrap());
    // SkZ2 is in the default corpus and its L-image is not cssc.
    assert_eq!(code(&a), 1);
    assert!(stdout(&a).contains("TL SkZ2: FAIL"));
    assert!(stdout(&a).contains("TL BZ2: pass"));
}

#[test]
fn closure_lists_special_arrows() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "skz2.json",
        StructureDoc::new("SkZ2", Structure::CatGroup(skz2())),
    );
    let o = cssc(&["closure", &f]);
    assert_eq!(code(&o), 0);
    assert!(!stdout(&o).is_empty());
}
