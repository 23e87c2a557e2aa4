use std::io::Write;
use std::process::{Command, Stdio};

use liemult::cli;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("liemult").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn field<'a>(out: &'a str, key: &str) -> Option<&'a str> {
    out.lines()
        .find_map(|line| line.strip_prefix(key)?.strip_prefix('\t'))
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["info", "--name", "37B"], 0),
        (&["multiplier", "--name", "L_{5,8}"], 0),
        (&["oracle", "--name", "37B"], 0),
        (&["exact-sequence", "--name", "37B"], 0),
        (&["capability", "--name", "L_{6,10}"], 0),
        (&["classify", "--name", "37C"], 0),
        (&["catalogue", "list"], 0),
        (&["catalogue", "show", "257K"], 0),
        (&["catalogue", "export"], 0),
        (&["lemmas"], 0),
        (&["verify-tables", "--table", "Table 4"], 0),
        (&["verify-tables", "--table", "Table 7"], 1),
        (&["--help"], 0),
        (&["info"], 2),
        (&["info", "--name", "nonexistent"], 2),
        (&["info", "/no/such/file"], 2),
        (&["exact-sequence", "--name", "L_{5,7}"], 2),
        (&["classify", "--name", "A(3)"], 2),
        (
            &["multiplier", "--name", "L_{6,22}", "--param", "zeta=1"],
            2,
        ),
        (&["frobnicate"], 2),
    ];
    for (args, code) in cases {
        let (got, _, err) = run(args);
        assert_eq!(got, *code, "{args:?}: {err}");
    }
}

#[test]
fn machine_output() {
    let (_, out, _) = run(&["--machine", "multiplier", "--name", "37B"]);
    assert_eq!(field(&out, "dim M"), Some("11"));
    assert_eq!(field(&out, "s"), Some("5"));
    let (_, out, _) = run(&[
        "--machine",
        "multiplier",
        "--name",
        "L_{6,22}",
        "--param",
        "eps=0",
    ]);
    assert_eq!(field(&out, "dim M"), Some("8"));
    let (_, out, _) = run(&["--machine", "oracle", "--name", "L_{6,23}"]);
    assert_eq!(field(&out, "agree"), Some("yes"));
    let (_, out, _) = run(&["--machine", "capability", "--name", "27A"]);
    assert_eq!(field(&out, "capable"), Some("no"));
    let (_, out, _) = run(&["--machine", "exact-sequence", "--name", "37D"]);
    assert_eq!(field(&out, "dim ker g"), Some("4"));
    let (_, out, _) = run(&["--machine", "classify", "--name", "L_{6,25}"]);
    assert_eq!(field(&out, "candidates"), Some("L_{6,23}, L_{6,25}"));
}

#[test]
fn verify_tables_reports_only_the_known_row() {
    let (code, out, _) = run(&["--machine", "verify-tables"]);
    assert_eq!(code, 1);
    let failing: Vec<&str> = out.lines().filter(|l| l.contains("\tFAIL\t")).collect();
    assert_eq!(failing.len(), 2, "{out}");
    assert!(failing.iter().all(|l| l.starts_with("1357C\t")));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify-tables", "--oracle"][..],
        &["catalogue", "export"],
        &["lemmas"],
    ] {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn reads_files_and_stdin() {
    let dir = std::env::temp_dir().join(format!("liemult-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h1.lie");
    std::fs::write(&path, "dim 3\n[1,2] = 3\n").unwrap();
    let (code, out, _) = run(&["--machine", "multiplier", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "dim M"), Some("2"));

    std::fs::write(&path, "dim 3\n[1,2] = 3\n[1,3] = 1\n").unwrap();
    let (code, _, err) = run(&["info", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("Jacobi"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();

    let mut child = Command::new(env!("CARGO_BIN_EXE_liemult"))
        .args(["--machine", "info", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"dim 5\n[1,2] = 3\n[1,3] = 4\n[1,4] = 5\n")
        .unwrap();
    let output = child.wait_with_output().unwrap();
    assert!(output.status.success());
    let out = String::from_utf8(output.stdout).unwrap();
    assert_eq!(field(&out, "class"), Some("4"));
}

#[test]
fn exported_catalogue_reparses() {
    let (_, out, _) = run(&["catalogue", "export"]);
    let sections = liemult::format::split_sections(&out);
    assert_eq!(sections.len(), liemult::catalogue::list_entries().len());
    for (name, body) in sections {
        let parsed = liemult::format::parse_algebra_file(&body).unwrap();
        let e = liemult::catalogue::entry(&name).unwrap();
        assert_eq!(&parsed, e.file(), "{name}");
    }
}
