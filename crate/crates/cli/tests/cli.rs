use std::path::Path;
use std::process::{Command, Output};

fn malcev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_malcev")).args(args).output().expect("run malcev")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn build(dir: &Path, name: &str, descriptor: &[&str]) -> String {
    let path = dir.join(name);
    let p = path.to_str().unwrap().to_string();
    let mut args = vec!["build"];
    args.extend_from_slice(descriptor);
    args.extend(["-o", &p]);
    let o = malcev(&args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    p
}

#[test]
fn build_descriptors() {
    let dir = tempfile::tempdir().unwrap();
    for (desc, dim) in [(&["paper-example"][..], 23), (&["free", "2", "3"], 3), (&["zoo", "heisenberg"], 3)] {
        let p = build(dir.path(), "a.alg", desc);
        let text = std::fs::read_to_string(&p).unwrap();
        assert!(text.starts_with(&format!("dim {dim}\n")), "{desc:?}");
    }
    let o = malcev(&["build", "free", "2", "3"]);
    assert!(stdout(&o).contains("label 2 [x1,x2]"));
    assert_eq!(malcev(&["build", "zoo", "nope"]).status.code(), Some(2));
    assert_eq!(malcev(&["build", "bogus"]).status.code(), Some(2));
    let cap = malcev(&["build", "free", "6", "8"]);
    assert_eq!(cap.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&cap.stderr).contains("exceeds the cap"));
}

#[test]
fn check_commands() {
    let dir = tempfile::tempdir().unwrap();
    let a = build(dir.path(), "atilde.alg", &["paper-example"]);
    let o = malcev(&["check", &a, "malcev"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("malcev: holds (linearized)"));
    let o = malcev(&["check", &a, "jacobian_product_zero"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "jacobian_product_zero: fails at (x=x1, y=x2, u=x3, v=x4) -> -2*v\n");
    let o = malcev(&["check", &a, "z5 : x,y,z,u | J(x,y,z)*u = 0"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "z5: fails at (x=x1, y=x2, z=x3, u=x4) -> -3*v\n");
    let o = malcev(&["--format", "machine", "check", &a, "z5 : x,y,z,u | J(x,y,z)*u = 0"]);
    assert!(stdout(&o).contains("witness.u:x4\nresidual:-3*v\n"));
    let o = malcev(&["check", &a, "t : x,y,z | x*y*z = 0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column"));
    assert_eq!(malcev(&["check", &a, "no_such_identity"]).status.code(), Some(2));
    assert_eq!(malcev(&["check", "/nonexistent.alg", "malcev"]).status.code(), Some(2));
}

#[test]
fn classify_round_trip_matches_in_memory() {
    use malcev_core::classify::classify;
    use malcev_core::constructor::zoo;
    let dir = tempfile::tempdir().unwrap();
    for (name, summary) in [("so3", "lie"), ("malcev7", "malcev"), ("atilde", "second_type"), ("free-2-5", "anticommutative")] {
        let p = build(dir.path(), "z.alg", &["zoo", name]);
        let o = malcev(&["--format", "machine", "classify", &p]);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        let mem = classify(&zoo::get(name).unwrap().algebra);
        assert_eq!(mem.summary(), summary);
        assert!(out.contains(&format!("type:{summary}\n")), "{name}: {out}");
        for (key, val) in [("lie", mem.lie), ("malcev", mem.malcev), ("first_type", mem.first_type), ("second_type", mem.second_type)] {
            assert!(out.contains(&format!("\n{key}:{val}\n")), "{name} {key}");
        }
    }
}

#[test]
fn subspace_commands() {
    let dir = tempfile::tempdir().unwrap();
    let a = build(dir.path(), "atilde.alg", &["paper-example"]);
    let o = malcev(&["--format", "machine", "kernel", &a]);
    assert!(stdout(&o).starts_with("dim:13\n"));
    let o = malcev(&["--format", "machine", "powers", &a, "--max", "5"]);
    assert_eq!(stdout(&o), "power.1:23\npower.2:19\npower.3:13\npower.4:1\npower.5:0\nnilpotent:true\nclass:5\n");
    let sub = dir.path().join("sub.alg");
    let o = malcev(&["generate", &a, "x1", "x2", "x3", "-o", sub.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("generated subalgebra: dim 9\n"));
    let o = malcev(&["check", sub.to_str().unwrap(), "jacobian_product_zero"]);
    assert_eq!(o.status.code(), Some(0));
    let o = malcev(&["generate", &a, "2*x1 - [x3,x4] + 1/2*v", "x2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(malcev(&["generate", &a, "y7"]).status.code(), Some(2));
}

#[test]
fn corrupted_psi_breaks_malcev() {
    let o = malcev(&["--jobs", "0", "--format", "machine", "verify-paper", "--corrupt-psi"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("criterion.3.status:fail\n"));
    assert!(out.contains("criterion.3.detail.0:unexpected: malcev fails at "), "{out}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(malcev(&[]).status.code(), Some(2));
    assert_eq!(malcev(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(malcev(&["--format", "xml", "verify-paper"]).status.code(), Some(2));
}

#[test]
fn verify_paper_is_deterministic() {
    let a = malcev(&["verify-paper", "--seed", "0"]);
    let b = malcev(&["verify-paper", "--seed", "0"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
    let text = stdout(&a);
    assert!(text.starts_with("verification suite, seed 0\nalgebra atilde (dim 23)\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]") || l.starts_with("[FAIL]")).count(), 11);
}
