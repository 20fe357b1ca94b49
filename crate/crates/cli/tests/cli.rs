use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_halftwist"))
        .args(args)
        .output()
        .unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_halftwist"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn boolean_queries_use_exit_codes() {
    assert_eq!(code(&run(&["eq", "3; 1 2 1", "3; 2 1 2"])), 0);
    assert_eq!(code(&run(&["eq", "3; 1 2", "3; 2 1"])), 1);
    assert_eq!(code(&run(&["commutes", "4; 1", "4; 3"])), 0);
    assert_eq!(code(&run(&["braidrel", "4; 1", "4; 2"])), 0);
    assert_eq!(code(&run(&["central", "3; 1 2 1 2 1 2"])), 0);
    assert_eq!(code(&run(&["central", "3; 1"])), 1);
    assert_eq!(code(&run(&["arc", "adjacent", "5; 1 @", "5; 2 @"])), 0);
    assert_eq!(code(&run(&["arc", "disjoint", "5; 1 @", "5; 2 @"])), 1);
    assert_eq!(
        code(&run(&["--backend", "both", "eq", "4; 1 2 1", "4; 2 1 2"])),
        0
    );
}

#[test]
fn errors_exit_two_with_a_tag() {
    let o = run(&["eq", "3; 1", "4; 1"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).starts_with("StrandMismatch"));
    let o = run_stdin(&["straighten"], "vertex 4 2\n4; 1 @\n4; 3 @\n");
    assert_eq!(code(&o), 2);
    assert!(
        stderr(&o).starts_with("UnsupportedParameters"),
        "{}",
        stderr(&o)
    );
    let o = run(&["random-vertex", "--n", "6", "--k", "2"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).starts_with("UnsupportedParameters"));
    let o = run_stdin(&["straighten"], "vertex 6 2\n6; 1 @\n6; 2 @\n");
    assert!(stderr(&o).starts_with("EndsCollide"), "{}", stderr(&o));
}

#[test]
fn arc_queries_print_values() {
    assert_eq!(stdout(&run(&["arc", "ends", "5; 1 @ 2"])), "1 3\n");
    let h = stdout(&run(&["arc", "halftwist", "5; 1 @ 2"]));
    assert_eq!(code(&run(&["eq", h.trim(), "5; 2 1 -2"])), 0);
}

#[test]
fn diagrams_round_trip_through_the_geometry_commands() {
    let a = stdout(&run(&["realize", "5; 1 @ 2"]));
    let b = stdout(&run(&["realize", "5; 2 @"]));
    assert_eq!(stdout(&run(&["crossings", a.trim(), b.trim()])), "0\n");
    let c = stdout(&run(&["realize", "5; 2 @ 1 3"]));
    let d = stdout(&run(&["realize", "5; 1 @"]));
    let k: usize = stdout(&run(&["crossings", c.trim(), d.trim()]))
        .trim()
        .parse()
        .unwrap();
    let norm = stdout(&run(&["normalize", c.trim(), d.trim()]));
    let parts: Vec<&str> = norm.lines().collect();
    assert_eq!(parts.len(), 2);
    let again = stdout(&run(&["crossings", parts[0], parts[1]]));
    assert_eq!(again.trim().parse::<usize>().unwrap(), k);
}

#[test]
fn straightening_certificates_check_out() {
    let dir = std::env::temp_dir().join(format!("halftwist-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let v = run(&["random-vertex", "--n", "7", "--k", "3", "--seed", "5"]);
    assert_eq!(code(&v), 0);
    assert_eq!(
        stdout(&v),
        stdout(&run(&[
            "random-vertex",
            "--n",
            "7",
            "--k",
            "3",
            "--seed",
            "5"
        ]))
    );
    let vf = dir.join("v.txt");
    std::fs::write(&vf, stdout(&v)).unwrap();
    let at = format!("@{}", vf.display());
    let path = run(&["straighten", &at]);
    assert_eq!(code(&path), 0, "{}", stderr(&path));
    let checked = run_stdin(&["check-path"], &stdout(&path));
    assert_eq!(code(&checked), 0);
    assert!(stdout(&checked).contains("ends_straight true"));
    // determinism
    assert_eq!(stdout(&path), stdout(&run(&["straighten", &at])));
    // a vertex with a duplicated arc is not a valid certificate
    let text = stdout(&path);
    let mut lines: Vec<&str> = text.lines().collect();
    let n = lines.len();
    lines[n - 1] = lines[n - 2];
    let tampered = run_stdin(&["check-path"], &(lines.join("\n") + "\n"));
    assert_eq!(code(&tampered), 1);
    assert!(stdout(&tampered).starts_with("invalid"));
    let w = run(&["random-vertex", "--n", "7", "--k", "3", "--seed", "6"]);
    let wf = dir.join("w.txt");
    std::fs::write(&wf, stdout(&w)).unwrap();
    let joined = run(&["connect", &at, &format!("@{}", wf.display())]);
    assert_eq!(code(&joined), 0, "{}", stderr(&joined));
    assert_eq!(code(&run_stdin(&["check-path"], &stdout(&joined))), 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn dot_lists_straight_neighbours() {
    let o = run_stdin(&["dot"], "vertex 6 2\n6; 1 @\n6; 3 @\n");
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("graph neighborhood {"));
    // e_1 can move to e_5; e_3 can move to e_4 or e_5
    assert_eq!(out.matches(" -- ").count(), 3);
}

#[test]
fn morphism_commands() {
    let built = run(&["morph", "build", "kind=z_twist t=1 n=4"]);
    assert_eq!(code(&built), 0);
    let images = stdout(&built);
    assert!(images.starts_with("images 4 4\n"));
    assert_eq!(code(&run_stdin(&["morph", "verify", "-"], &images)), 0);
    assert_eq!(code(&run(&["morph", "verify", "kind=doubling n=4"])), 0);
    let squares = "images 4 4\n4; 1 1\n4; 2 2\n4; 3 3\n";
    let failed = run_stdin(&["morph", "verify", "-"], squares);
    assert_eq!(code(&failed), 1);
    assert!(stdout(&failed).contains("braid 1 2 FAIL"));
    assert_eq!(
        stdout(&run(&["morph", "apply", "kind=mirror n=4", "4; 1 -2"])),
        "4; -1 2\n"
    );
    let w = stdout(&run(&["morph", "witness", "kind=z_twist t=2 n=4"]));
    assert!(w.starts_with("divisor 25\n"));
    assert_eq!(code(&run(&["morph", "witness", "kind=z_twist t=0 n=4"])), 2);
    let sample = run(&[
        "morph",
        "sample",
        "kind=cabling n=4",
        "--trials",
        "20",
        "--seed",
        "1",
    ]);
    assert_eq!(code(&sample), 0);
    assert!(stdout(&sample).contains("collisions 0"));
}

#[test]
fn suite_runs_single_criteria() {
    let o = run(&["suite", "--criterion", "1", "--seed", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("PASS"));
    assert_eq!(code(&run(&["suite", "--criterion", "1"])), 2);
}
