use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurflex"))
        .args(args)
        .output()
        .expect("spawn schurflex")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn list_lg5_has_table_columns() {
    let out = run(&["list", "--family", "C", "--rank", "5", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 33);
    assert!(lines.iter().any(|l| l.contains(",3:1 2 4,") || l.contains(",3:1,2,4,")));
    assert_eq!(lines.iter().filter(|l| l.contains(",true,")).count(), 10);
}

#[test]
fn list_spinor_has_r_column() {
    let out = run(&["list", "--family", "D", "--rank", "6", "--node", "6", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("id,dim,degree,aj,partition,r,rigid,h1,h2"));
    assert_eq!(text.lines().count(), 33);
}

#[test]
fn list_projective_line() {
    let out = run(&["list", "--family", "A", "--rank", "1", "--node", "1", "--format", "md"]);
    assert!(out.status.success());
    let rows = stdout(&out).lines().filter(|l| l.starts_with("| ") && !l.starts_with("| id")).count();
    assert_eq!(rows, 2);
}

#[test]
fn json_is_sorted_and_stable() {
    let args = ["list", "--family", "E6", "--format", "json"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["space"], "E6/P6");
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 27);
    let keys: Vec<&String> = classes[0].as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    for k in ["id", "dim", "degree", "a", "J", "partition", "rigid", "witnesses"] {
        assert!(classes[0].get(k).is_some(), "missing {k}");
    }
    assert_eq!(classes.iter().filter(|c| c["rigid"] == true).count(), 8);
}

#[test]
fn dot_marks_rigid_nodes() {
    for (args, nodes, doubled, top) in [
        (vec!["hasse", "--family", "E6", "--dot"], 27, 8, "\"16/78\""),
        (vec!["hasse", "--family", "E7", "--dot"], 56, 14, "\"27/13110\""),
        (vec!["hasse", "--family", "A", "--rank", "3", "--node", "2", "--dot"], 6, 4, "\"4/2\""),
    ] {
        let out = run(&args);
        assert!(out.status.success());
        let text = stdout(&out);
        assert!(text.contains("rankdir=BT"));
        assert_eq!(text.matches("label=").count(), nodes);
        assert_eq!(text.matches("peripheries=2").count(), doubled);
        assert!(text.contains(top));
    }
}

#[test]
fn translate_grassmannian_example() {
    let out = run(&[
        "translate", "--family", "A", "--rank", "12", "--node", "5", "--partition", "3,4,7,11,12",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("a:J        2:2,3,7,9,12"));
    assert!(text.contains("rigid      no"));
    assert!(text.contains("H1 witness (β, γ) = (α9, α3+α4+α5+α6+α7+α8)"));
}

#[test]
fn translate_lagrangian_example() {
    let out = run(&["translate", "--family", "C", "--rank", "5", "--aj", "3:1,2,4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("partition  (2,5,7,8,10)"));
    assert!(text.contains("rigid      no"));
    assert!(text.contains("H2 witness"));
    let out = run(&["translate", "--family", "C", "--rank", "5", "--partition", "6,7,8,9,10"]);
    let text = stdout(&out);
    assert!(text.contains("whole space") && text.contains("rigid      yes"));
}

#[test]
fn decreasing_convention() {
    let out = run(&[
        "translate", "--family", "C", "--rank", "5", "--partition", "5,3,2", "--convention",
        "decreasing",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("a:J        3:1,2,4"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["list", "--family", "C"]).status.code(), Some(1));
    assert_eq!(run(&["list", "--family", "C", "--rank", "4", "--node", "1"]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let out = run(&["translate", "--family", "C", "--rank", "3", "--partition", "1,2,2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("strictly increasing"));
    assert_eq!(run(&["translate", "--family", "C", "--rank", "5", "--aj", "9:1"]).status.code(), Some(1));
}

#[test]
fn verify_suites_pass() {
    for suite in ["figures", "duality", "criteria", "examples"] {
        let out = run(&["verify", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", stdout(&out));
    }
}
