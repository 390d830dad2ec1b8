mod common;

use std::collections::HashMap;
use std::process::{Command, Output};

fn ocws(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ocws"))
        .args(args)
        .output()
        .unwrap()
}

fn fixture(name: &str) -> String {
    common::fixture(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn induce_reproduces_the_ring5_tables() {
    let out = ocws(&[
        "--format",
        "lines",
        "induce",
        &fixture("ring5_r2.ocws"),
        "--weight",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 15);

    // letter -> (raw per qubit, reduced per qubit)
    let raw = [
        ('Z', ["ZIIII", "IZIII", "IIZII", "IIIZI", "IIIIZ"]),
        ('X', ["IZIIZ", "ZIZII", "IZIZI", "IIZIZ", "ZIIZI"]),
        ('Y', ["ZZIIZ", "ZZZII", "IZZZI", "IIZZZ", "ZIIZZ"]),
    ];
    let reduced = [
        ('Z', ["ZIIII", "IZIII", "IIZII", "IIIII", "IIIII"]),
        ('X', ["IZIII", "ZIZII", "IZIII", "IIZII", "ZIIII"]),
        ('Y', ["ZZIII", "ZZZII", "IZZII", "IIZII", "ZIIII"]),
    ];
    let mut expected = HashMap::new();
    for ((letter, raws), (_, reds)) in raw.iter().zip(&reduced) {
        for q in 0..5 {
            let mut pauli = vec!['I'; 5];
            pauli[q] = *letter;
            expected.insert(pauli.into_iter().collect::<String>(), (raws[q], reds[q]));
        }
    }
    for line in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(fields[0], "CLASS");
        let (want_raw, want_reduced) = expected[fields[1]];
        assert_eq!((fields[3], fields[5]), (want_raw, want_reduced), "{line}");
    }
}

#[test]
fn searched_fixtures_pass_verify() {
    for name in ["ring8_d3.ocws", "ring9_d3.ocws", "ring10_d3.ocws"] {
        let out = ocws(&["verify", &fixture(name), "--distance", "3"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert!(stdout(&out).contains("VERDICT pass"));
    }
}

#[test]
fn reference_fixtures_are_distance_two() {
    for (name, witness) in [
        ("8_1_1_3.ocws", "IIIIIZXI"),
        ("9_3_1_3.ocws", "XZIIIIIII"),
        ("9_4_1_3.ocws", "XZIIIIIII"),
    ] {
        let out = ocws(&[
            "--format",
            "lines",
            "verify",
            &fixture(name),
            "--distance",
            "3",
        ]);
        assert_eq!(out.status.code(), Some(1), "{name}");
        let text = stdout(&out);
        assert!(text.starts_with("VERDICT fail"), "{text}");
        assert!(text.contains(" d=2 "), "{text}");
        assert!(
            text.contains(&format!("WITNESS {witness} diagonal")),
            "{text}"
        );
    }
}

#[test]
fn broken_toy_fails_everywhere() {
    let toy = fixture("toy_broken.ocws");
    let verify = ocws(&["verify", &toy]);
    assert_eq!(verify.status.code(), Some(1));
    let oracle = ocws(&["--format", "lines", "oracle-check", &toy, "--weight", "1"]);
    assert_eq!(oracle.status.code(), Some(1));
    assert!(stdout(&oracle).starts_with("VERDICT fail max_off_block=1.000e0"));
}

#[test]
fn oracle_check_passes_on_a_searched_code() {
    let out = ocws(&[
        "oracle-check",
        &fixture("ring8_d3.ocws"),
        "--weight",
        "1",
        "--tol",
        "1e-9",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("VERDICT pass"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(ocws(&["verify"]).status.code(), Some(2));
    assert_eq!(ocws(&["verify", "--bogus"]).status.code(), Some(2));
    let dir = std::env::temp_dir().join(format!("ocws-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.ocws");
    std::fs::write(&bad, "n = 5\nr = 2\ngraph = ring\nword = 00002\n").unwrap();
    let out = ocws(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let runs = [
        vec!["verify".to_string(), fixture("9_3_1_3.ocws")],
        vec![
            "induce".to_string(),
            fixture("8_1_1_3.ocws"),
            "--weight".into(),
            "2".into(),
        ],
        vec![
            "search".into(),
            "--n".into(),
            "9".into(),
            "--r".into(),
            "1".into(),
            "--distance".into(),
            "2".into(),
            "--mode".into(),
            "greedy".into(),
            "--seed".into(),
            "4".into(),
        ],
        vec!["oracle-check".to_string(), fixture("9_4_1_3.ocws")],
    ];
    for args in runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = ocws(&args);
        let b = ocws(
            &["--threads", "1"]
                .iter()
                .copied()
                .chain(args.iter().copied())
                .collect::<Vec<_>>(),
        );
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn search_writes_a_verifiable_file() {
    let dir = std::env::temp_dir().join(format!("ocws-search-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ring8.ocws");
    let out = ocws(&[
        "--format",
        "lines",
        "search",
        "--graph",
        "ring",
        "--n",
        "8",
        "--r",
        "1",
        "--distance",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "CODE n=8 K=2 r=1 d=3 complete=true\n");
    assert_eq!(
        ocws(&["verify", path.to_str().unwrap()]).status.code(),
        Some(0)
    );
    let reused = ocws(&[
        "search",
        "--graph",
        &format!("file:{}", path.display()),
        "--r",
        "1",
        "--distance",
        "3",
    ]);
    assert_eq!(reused.status.code(), Some(0));
}
