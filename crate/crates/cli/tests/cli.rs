use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tamagawa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn tamagawa_prints_reduction_json() {
    let out = run(&[
        "tamagawa",
        "--curve",
        r#"{"field":{"kind":"Q"},"a":["0","0","0","0","5"]}"#,
        "--place",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{\"type\":\"II\",\"c\":1,\"vdelta\":2}\n");
}

#[test]
fn torsion_order_of_fixture() {
    let out = run(&["torsion-order", "--fixture", "krumm-17-quartic"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "17\n");
}

#[test]
fn symbolic_check_and_perturbation() {
    assert_eq!(run(&["check11-symbolic"]).status.code(), Some(0));
    assert_eq!(
        run(&["check11-symbolic", "--perturb"]).status.code(),
        Some(1)
    );
}

#[test]
fn check_ff_is_deterministic_and_writes_report() {
    let dir = std::env::temp_dir().join(format!("tamagawa-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let report = dir.join("report.json");
    let args = [
        "check-ff", "--p", "7", "--count", "3", "--seed", "42", "--report",
    ];
    let mut first_args = args.to_vec();
    first_args.push(report.to_str().unwrap());
    let first = run(&first_args);
    let second = run(&args[..7]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    assert!(text.starts_with("p\tf\tplace\tdegree\ttype\tsplit\tvdelta_min\tc_v\n"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["summary"]["passed"], 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn input_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["tamagawa", "--curve", "{", "--place", "5"],
        &[
            "tamagawa",
            "--curve",
            r#"{"field":{"kind":"Q"},"a":["0","0","0","0","0"]}"#,
            "--place",
            "5",
        ],
        &[
            "tamagawa",
            "--curve",
            r#"{"field":{"kind":"Q"},"a":["0","0","0","0","5"]}"#,
            "--place",
            "4",
        ],
        &["check-ff", "--p", "13"],
        &["check-ff", "--p", "5", "--f", "2"],
        &["check11-padic", "--primes", "9"],
        &["torsion-order", "--fixture", "nope"],
        &["torsion-order"],
        &["no-such-command"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!out.stderr.is_empty());
    }
}
