use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oscspec"))
}

fn lattice_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("oscspec-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::File::create(&p).unwrap().write_all(text.as_bytes()).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_plus_type_of_order_two() {
    let p = lattice_file("plus.lat", "r = 2\nlambda = pi\nmodulus = rat(1/3, 3/2)\nx_delta = 1/2\ny_delta = 1/2\n");
    let o = run(&["classify", p.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("L2+(r=2)\n"), "{out}");
    assert!(out.contains("s_L = 0"));
}

#[test]
fn spectrum_of_order_two_lattice() {
    let p = lattice_file("t2.lat", "r = 3\nlambda = pi\nmodulus = rat(1/3, 3/2)\n");
    let o = run(&["spectrum", "--part", "h1", "--mmax", "2", "--nmax", "4", p.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    // m = 1: n even -> 2, n odd -> 1
    assert!(out.contains("\nF(c=3, d=0) x2\n"), "{out}");
    assert!(out.contains("\nF(c=3, d=(1/2)/pi) x1\n"), "{out}");
    assert!(out.contains("\nF(c=6, d=0) x4\n"), "{out}");
    assert!(out.contains("part=h1 convention=oracle"));
}

#[test]
fn standardize_reports_the_chain() {
    let p = lattice_file("sh.lat", "r = 1\nlambda = 1/2 pi\nz_delta = 1/10\nscale = 3\n");
    let out = stdout(&run(&["standardize", p.to_str().unwrap()]));
    assert!(out.starts_with("L4(r=1, lambda=pi/2)\n"), "{out}");
    assert!(out.contains("chain: rescale by 1/3"));
    assert!(out.contains("chain: shift z_delta by"));
}

#[test]
fn wave_under_both_conventions() {
    let p = lattice_file("st.lat", "r = 1\nlambda = 2 pi\nmodulus = I\n");
    let args = |c: &'static str| vec!["wave", "--nmax", "0", "--mmax", "0", "--amax", "1", "--convention", c];
    let mut a = args("paper");
    a.push(p.to_str().unwrap());
    let out = stdout(&run(&a));
    assert!(out.contains("(4)*pi ~ 12.566370614359 x4"), "{out}");
    let mut a = args("oracle");
    a.push(p.to_str().unwrap());
    let out = stdout(&run(&a));
    assert!(out.contains("(4)*pi^2 ~ 39.478417604357 x4"), "{out}");
}

#[test]
fn output_is_deterministic() {
    let p = lattice_file("det.lat", "r = 2\nlambda = 2/3 pi\nz_delta = 1/5\nscale = 2\n");
    let args = ["spectrum", "--format", "records", "--amax", "4", p.to_str().unwrap()];
    let a = run(&args);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, run(&args).stdout);
    assert!(stdout(&a).lines().all(|l| l.starts_with("kind=")));
}

#[test]
fn exit_codes() {
    let bad = lattice_file("bad.lat", "r = 1\nlambda pi\n");
    assert_eq!(run(&["classify", bad.to_str().unwrap()]).status.code(), Some(2));
    let inadmissible = lattice_file("inad.lat", "r = 1\nlambda = 1/4 pi\n");
    assert_eq!(run(&["classify", inadmissible.to_str().unwrap()]).status.code(), Some(3));
    let not_lattice = lattice_file("nl.lat", "r = 1\nlambda = pi\nmodulus = I\nz_alpha = 1/5\n");
    assert_eq!(run(&["classify", not_lattice.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(run(&["classify", "/nonexistent/file.lat"]).status.code(), Some(1));
    let p = lattice_file("ok.lat", "r = 1\nlambda = 2 pi\nmodulus = I\n");
    assert_eq!(run(&["spectrum", "--amax", "x", p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn verify_gauss_passes() {
    let o = run(&["verify", "gauss"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS gauss-reciprocity: 12800 cases"));
}

#[test]
fn accumulation_demo() {
    let o = run(&["demo-accumulation", "--count", "20"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("n'=")).count(), 20);
    let o = run(&["demo-accumulation", "--u", "1.5"]);
    assert!(stdout(&o).contains("degenerate"));
}
