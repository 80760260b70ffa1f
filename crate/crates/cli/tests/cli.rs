use std::path::PathBuf;
use std::process::{Command, Output};

use crbc::gaussian::{prop2_min_nc, GaussianCrbcParams};

fn crbc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crbc"))
        .args(args)
        .output()
        .unwrap()
}

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    root.join(name).to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

struct Row {
    a: f64,
    alpha: f64,
    gamma: f64,
    nc: f64,
    re1: f64,
    re2: f64,
}

fn rows(csv: &str) -> Vec<Row> {
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("scheme,a,alpha,beta,gamma,nc,re1,re2"));
    lines
        .map(|l| {
            let f: Vec<f64> = l.split(',').skip(1).map(|v| v.parse().unwrap()).collect();
            assert_eq!(f.len(), 7, "{l}");
            Row {
                a: f[0],
                alpha: f[1],
                gamma: f[3],
                nc: f[4],
                re1: f[5],
                re2: f[6],
            }
        })
        .collect()
}

fn max_by(rows: &[Row], key: impl Fn(&Row) -> f64) -> f64 {
    rows.iter().map(key).fold(f64::NEG_INFINITY, f64::max)
}

const ANCHOR: [&str; 8] = ["--P", "8", "--N1", "1", "--N2", "2", "--a", "100"];

#[test]
fn relaying_frontier_hits_both_extremes() {
    let mut args = vec!["region", "--scheme", "prop1"];
    args.extend(ANCHOR);
    let o = crbc(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = rows(&stdout(&o));
    assert!((max_by(&r, |r| r.re2) - 0.2511).abs() < 0.005);
    assert!((max_by(&r, |r| r.re1) - 0.4240).abs() < 0.005);
    assert!(stderr(&o).contains("max re2 0.251147"));
}

#[test]
fn jamming_frontier_reaches_full_jamming_rate() {
    let mut args = vec!["region", "--scheme", "prop3"];
    args.extend(ANCHOR);
    let o = crbc(&args);
    assert_eq!(o.status.code(), Some(0));
    let r = rows(&stdout(&o));
    assert!((max_by(&r, |r| r.re1) - 1.578).abs() < 0.01);
}

#[test]
fn rows_are_feasible_and_nondominated_per_family() {
    let o = crbc(&[
        "region",
        "--scheme",
        "prop2",
        "--P",
        "8",
        "--N1",
        "1",
        "--N2",
        "2",
        "--a",
        "1,100",
        "--grid",
        "41,2,21",
        "--gamma-range",
        "-1:1",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = rows(&stdout(&o));
    for a in [1.0, 100.0] {
        let g = GaussianCrbcParams::new(8.0, a, 1.0, 2.0).unwrap();
        let fam: Vec<&Row> = r.iter().filter(|x| x.a == a).collect();
        assert!(!fam.is_empty());
        for p in &fam {
            assert!((-1.0..=1.0).contains(&p.gamma));
            let floor = prop2_min_nc(p.alpha, p.gamma, &g).unwrap().nc_min.unwrap();
            // nc is printed rounded to 6 decimals
            assert!(p.nc >= floor - 5e-7, "{} < {floor}", p.nc);
            assert!(!fam
                .iter()
                .any(|q| q.re1 >= p.re1 && q.re2 >= p.re2 && (q.re1 > p.re1 || q.re2 > p.re2)));
        }
    }
}

#[test]
fn output_is_byte_identical_across_runs_and_thread_counts() {
    let args = [
        "region", "--scheme", "prop4", "--P", "8", "--N1", "1", "--N2", "2", "--a", "10", "--grid",
        "21,11,9",
    ];
    let runs: Vec<Vec<u8>> = ["1", "4", "4"]
        .iter()
        .map(|t| {
            Command::new(env!("CARGO_BIN_EXE_crbc"))
                .args(args)
                .env("CRBC_THREADS", t)
                .output()
                .unwrap()
                .stdout
        })
        .collect();
    assert!(!runs[0].is_empty());
    assert!(runs.iter().all(|r| r == &runs[0]));
}

#[test]
fn out_flag_writes_file_and_prints_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.csv");
    let mut args = vec![
        "region",
        "--scheme",
        "prop1",
        "--out",
        path.to_str().unwrap(),
    ];
    args.extend(ANCHOR);
    let o = crbc(&args);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("prop1 a=100: "));
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("scheme,a,alpha"));
}

#[test]
fn two_sided_scheme_uses_its_own_columns() {
    let o = crbc(&[
        "region", "--scheme", "prop5", "--P", "8", "--N1", "1", "--N2", "2", "--a1", "100", "--a2",
        "100", "--grid", "11,6",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("scheme,a1,a2,alpha,beta1,beta2,nc1,nc2,re1,re2\nprop5,"));
    assert!(out.lines().skip(1).all(|l| l.split(',').count() == 10));
}

#[test]
fn invalid_input_exits_2() {
    let o = crbc(&[
        "region", "--scheme", "prop1", "--N1", "1", "--N2", "2", "--a", "100",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--P"));

    let cases: [&[&str]; 7] = [
        &["limit", "--P", "8", "--N1", "-1", "--N2", "2"],
        &[
            "region", "--scheme", "prop9", "--P", "8", "--N1", "1", "--N2", "2", "--a", "1",
        ],
        &[
            "region", "--scheme", "prop1", "--P", "8", "--N1", "1", "--N2", "2", "--a", "1,x",
        ],
        &[
            "region", "--scheme", "prop1", "--P", "8", "--N1", "1", "--N2", "2", "--a", "-1",
        ],
        &[
            "region", "--scheme", "prop1", "--P", "8", "--N1", "1", "--N2", "2", "--a1", "1",
            "--a2", "1",
        ],
        &[
            "region",
            "--scheme",
            "prop2",
            "--P",
            "8",
            "--N1",
            "1",
            "--N2",
            "2",
            "--a",
            "1",
            "--gamma-range",
            "2:-2",
        ],
        &["verify", "--filter", "nothing"],
    ];
    for args in cases {
        let o = crbc(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(stderr(&o).starts_with("error"), "{args:?}");
    }

    let o = Command::new(env!("CARGO_BIN_EXE_crbc"))
        .args(["limit", "--P", "8", "--N1", "1", "--N2", "2"])
        .env("CRBC_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn no_feasible_point_exits_3() {
    let mut args = vec!["region", "--scheme", "prop1", "--nc", "0.001"];
    args.extend(ANCHOR);
    let o = crbc(&args);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
}

#[test]
fn limit_prints_both_values() {
    let o = crbc(&["limit", "--P", "8", "--N1", "1", "--N2", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "corollary1_limit = 0.265257\ngaussian_sato_bound = 0.265257\n"
    );
    let o = crbc(&["limit", "--P", "0.000001", "--N1", "1", "--N2", "2"]);
    assert_eq!(
        stdout(&o),
        "corollary1_limit = 0.000000\ngaussian_sato_bound = 0.000000\n"
    );
}

#[test]
fn dmc_outer_bound_examples() {
    let o = crbc(&[
        "dmc-eval",
        "--channel",
        &data("degraded.dmc"),
        "--theorem",
        "3",
        "--maximize",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("re2_bound = 0.000000\n"));

    let o = crbc(&[
        "dmc-eval",
        "--channel",
        &data("noiseless.dmc"),
        "--theorem",
        "3",
        "--input-dist",
        &data("uniform_input.dist"),
    ]);
    assert_eq!(stdout(&o), "re2_bound = 1.000000\n");
}

#[test]
fn helper_equal_to_relay_input_prints_identical_output() {
    let channel = data("noisy_relay.dmc");
    let a = crbc(&[
        "dmc-eval",
        "--channel",
        &channel,
        "--dist",
        &data("relay.dist"),
        "--theorem",
        "1",
    ]);
    let b = crbc(&[
        "dmc-eval",
        "--channel",
        &channel,
        "--dist",
        &data("relay_helper_is_input.dist"),
        "--theorem",
        "4",
    ]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("constraints = satisfied"));

    let v = crbc(&[
        "dmc-eval",
        "--channel",
        &data("degraded.dmc"),
        "--dist",
        &data("relay.dist"),
        "--theorem",
        "1",
    ]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("constraints = VIOLATED"));
}

#[test]
fn malformed_files_report_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.dmc");
    std::fs::write(&path, "dmc 2 1 1 2\n0 0 0 0 1\n1 0 0 7 1\n").unwrap();
    let o = crbc(&[
        "dmc-eval",
        "--channel",
        path.to_str().unwrap(),
        "--theorem",
        "3",
        "--maximize",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let o = crbc(&[
        "dmc-eval",
        "--channel",
        &data("degraded.dmc"),
        "--theorem",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--dist"));
}

#[test]
fn verify_runs_selected_criteria() {
    let o = crbc(&["verify", "--filter", "anchor"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("4/4 criteria passed\n"));

    let o = crbc(&["verify", "--filter", "anchor", "--anchor-n1", "1.5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().take(4).all(|l| l.starts_with("FAIL")));
}

#[test]
fn verify_passes_on_a_fresh_build() {
    let o = crbc(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("11/11 criteria passed\n"));
}
