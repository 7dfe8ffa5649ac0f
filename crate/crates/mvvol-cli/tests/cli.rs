use std::path::PathBuf;
use std::process::{Command, Output};

fn mvvol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvvol"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = mvvol(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!("{name}-{}", std::process::id()))
}

#[test]
fn volumes() {
    assert_eq!(stdout(&["volume", "--g", "1", "--n", "1"]), "2/3 * pi^2");
    assert_eq!(stdout(&["volume", "--g", "0", "--n", "4"]), "2 * pi^2");
    assert_eq!(stdout(&["volume", "--g", "2", "--n", "0"]), "1/15 * pi^6");
    assert_eq!(
        stdout(&["volume", "--g", "1", "--n", "1", "--format", "latex"]),
        "\\frac{2}{3}\\pi^{2}"
    );
    assert_eq!(
        stdout(&["volume", "--g", "1", "--n", "1", "--format", "decimal"]),
        "6.57973626739"
    );
}

#[test]
fn unstable_type_is_a_usage_error() {
    let out = mvvol(&["volume", "--g", "1", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unstable type"));
    assert_eq!(mvvol(&["polynomial", "--g", "0", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn malformed_flags() {
    assert_eq!(mvvol(&["volume", "--g", "one", "--n", "1"]).status.code(), Some(2));
    assert_eq!(mvvol(&["verify", "--suite", "everything"]).status.code(), Some(2));
    assert_eq!(
        mvvol(&["sts", "--g", "1", "--n", "1", "--lengths", "0", "--order", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn polynomials() {
    assert_eq!(
        stdout(&["polynomial", "--g", "1", "--n", "1"]),
        "d=[0]: 1/12*pi^2 ; d=[1]: 1/8"
    );
    assert_eq!(stdout(&["polynomial", "--g", "0", "--n", "3"]), "d=[0,0,0]: 1");
}

#[test]
fn methods_agree() {
    for (g, n) in [("1", "2"), ("0", "5"), ("2", "1")] {
        let rec = stdout(&["polynomial", "--g", g, "--n", n, "--method", "virasoro"]);
        let graphs = stdout(&["polynomial", "--g", g, "--n", n, "--method", "graphs"]);
        assert_eq!(rec, graphs, "({g},{n})");
    }
}

#[test]
fn siegel_veech_and_series() {
    assert_eq!(stdout(&["sv", "--g", "2", "--n", "0"]), "pi^2*SV = 19/6");
    assert_eq!(
        stdout(&["sts", "--g", "1", "--n", "1", "--lengths", "2", "--order", "3"]),
        "1/2*q + 3/2*q^2 + 2*q^3"
    );
    assert_eq!(
        stdout(&["sts", "--g", "0", "--n", "3", "--lengths", "1,1,2", "--order", "2"]),
        "1"
    );
}

#[test]
fn verify_tables_passes() {
    let out = mvvol(&["--threads", "4", "verify", "--suite", "tables"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("CHECK ") && l.ends_with(" OK")));
}

#[test]
fn thread_count_does_not_change_output() {
    let one = stdout(&["--threads", "1", "verify", "--suite", "dual"]);
    let many = stdout(&["--threads", "6", "verify", "--suite", "dual"]);
    assert_eq!(one, many);
    let one = stdout(&["--threads", "1", "table", "--max-g", "2", "--max-n", "5"]);
    let many = stdout(&["--threads", "3", "table", "--max-g", "2", "--max-n", "5"]);
    assert_eq!(one, many);
}

#[test]
fn csv_table() {
    let csv = stdout(&["table", "--max-g", "1", "--max-n", "3"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines,
        [
            "g,n,value_rational,pi_power",
            "0,3,4,0",
            "1,1,2/3,2",
            "1,2,1/3,4",
            "1,3,11/60,6"
        ]
    );
}

#[test]
fn cache_round_trip() {
    let path = scratch("cache");
    let p = path.to_str().unwrap();
    stdout(&["cache", "save", "--path", p, "--max-g", "2", "--max-n", "3"]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("mvvol-cache 1 masur-veech\n"));
    assert!(text.lines().any(|l| l == "1 1 0 1:1/12"));
    assert!(stdout(&["cache", "load", "--path", p]).starts_with("loaded "));

    let queries: [&[&str]; 4] = [
        &["polynomial", "--g", "2", "--n", "2"],
        &["volume", "--g", "2", "--n", "3"],
        &["sv", "--g", "2", "--n", "1"],
        &["verify", "--suite", "dual"],
    ];
    for q in queries {
        let cold = stdout(q);
        let mut warm_args = vec!["--cache", p];
        warm_args.extend_from_slice(q);
        assert_eq!(stdout(&warm_args), cold, "{q:?}");
    }
    let _ = std::fs::remove_file(path);
}

#[test]
fn corrupt_cache_is_rejected() {
    let path = scratch("corrupt");
    std::fs::write(&path, "mvvol-cache 1 masur-veech\n1 1 1 1:1/8\n").unwrap();
    let out = mvvol(&["--cache", path.to_str().unwrap(), "volume", "--g", "1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let _ = std::fs::remove_file(path);
}
