use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TRIANGLE: &str = "3\n010\n001\n100\n";
const CYCLE3: &str = "PATTERN\n3\n010\n001\n100\n";

fn scd(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scd")).args(args).current_dir(dir).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn workdir() -> TempDir {
    let dir = TempDir::new().unwrap();
    file(&dir, "tri.scd", TRIANGLE);
    file(&dir, "c3.pat", CYCLE3);
    dir
}

#[test]
fn triangle_cutwidth_one_prints_an_ordering() {
    let dir = workdir();
    let o = scd(&["cutwidth", "exact", "tri.scd", "-k", "1"], dir.path());
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "YES width 1");
    let mut order: Vec<usize> = lines[1].split_whitespace().map(|x| x.parse().unwrap()).collect();
    order.sort_unstable();
    assert_eq!(order, vec![0, 1, 2]);
}

#[test]
fn triangle_pathwidth_zero_prints_a_tangle_path() {
    let dir = workdir();
    let o = scd(&["pathwidth", "exact", "tri.scd", "-k", "0", "-o", "w.cert"], dir.path());
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.starts_with("NO pathwidth > 0"));
    assert!(out.contains("certificate: w.cert"), "{out}");
    let cert = fs::read_to_string(dir.path().join("w.cert")).unwrap();
    assert!(cert.contains("TANGLE"), "{cert}");
    let v = scd(&["verify-cert", "tri.scd", "w.cert"], dir.path());
    assert_eq!(code(&v), 0, "{}", stdout(&v));
}

#[test]
fn transitive_tournament_has_pathwidth_zero() {
    let dir = workdir();
    let g = scd(&["gen", "--model", "transitive", "--n", "5", "-o", "tt5.scd"], dir.path());
    assert_eq!(code(&g), 0);
    let o = scd(&["pathwidth", "opt", "tt5.scd"], dir.path());
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("0"));
}

#[test]
fn validate_distinguishes_bad_content_from_bad_input() {
    let dir = workdir();
    file(&dir, "digon.scd", "2\n01\n10\n");
    file(&dir, "gap.scd", "3\n010\n000\n100\n");
    file(&dir, "garbage.scd", "3\n01x\n001\n100\n");
    assert_eq!(code(&scd(&["validate", "tri.scd", "--tournament"], dir.path())), 0);
    assert_eq!(code(&scd(&["validate", "digon.scd"], dir.path())), 0);
    assert_eq!(code(&scd(&["validate", "digon.scd", "--tournament"], dir.path())), 1);
    assert_eq!(code(&scd(&["validate", "gap.scd"], dir.path())), 1);
    assert_eq!(code(&scd(&["validate", "garbage.scd"], dir.path())), 2);
    assert_eq!(code(&scd(&["validate", "missing.scd"], dir.path())), 2);
    assert_eq!(code(&scd(&["validate", "c3.pat", "--pattern"], dir.path())), 0);
}

#[test]
fn usage_errors_exit_two() {
    let dir = workdir();
    assert_eq!(code(&scd(&[], dir.path())), 2);
    assert_eq!(code(&scd(&["frobnicate"], dir.path())), 2);
    assert_eq!(code(&scd(&["cutwidth", "exact", "tri.scd"], dir.path())), 2);
    assert_eq!(code(&scd(&["gen", "--model", "qr", "--n", "8"], dir.path())), 2);
    assert_eq!(code(&scd(&["verify-cert", "tri.scd", "c3.pat", "--kind", "model"], dir.path())), 2);
}

#[test]
fn budgets_exit_three() {
    let dir = workdir();
    let g = scd(&["gen", "--model", "random", "--n", "21", "--seed", "1", "-o", "big.scd"], dir.path());
    assert_eq!(code(&g), 0);
    assert_eq!(code(&scd(&["oracle", "cutwidth", "big.scd"], dir.path())), 3);
    file(&dir, "w.dec", "1\n0 1 2\n");
    let o = scd(&["contains", "tri.scd", "c3.pat", "--decomposition", "w.dec", "--budget", "0"], dir.path());
    assert_eq!(code(&o), 3);
}

#[test]
fn contains_agrees_with_the_oracle_and_models_verify() {
    let dir = workdir();
    for seed in 0..6 {
        let name = format!("h{seed}.scd");
        scd(&["gen", "--model", "random", "--n", "5", "--seed", &seed.to_string(), "-o", &name], dir.path());
        let o = scd(&["oracle", "contains", &name, "c3.pat"], dir.path());
        let c = scd(&["contains", &name, "c3.pat", "--selfcheck", "-o", "m.cert"], dir.path());
        assert_eq!(code(&o), code(&c), "seed {seed}");
        if code(&c) == 0 {
            let v = scd(&["verify-cert", &name, "m.cert", "--pattern", "c3.pat"], dir.path());
            assert_eq!(code(&v), 0, "{}", stdout(&v));
        }
    }
    file(&dir, "w.dec", "1\n0 1 2\n");
    let o = scd(&["contains", "tri.scd", "c3.pat", "--decomposition", "w.dec"], dir.path());
    assert_eq!(code(&o), 0);
    file(&dir, "bad.dec", "1\n0 1\n");
    assert_eq!(code(&scd(&["contains", "tri.scd", "c3.pat", "--decomposition", "bad.dec"], dir.path())), 2);
}

#[test]
fn verify_cert_rejects_tampered_certificates() {
    let dir = workdir();
    file(&dir, "ord.cert", "0 1 2\n");
    let o = scd(&["verify-cert", "tri.scd", "ord.cert"], dir.path());
    assert_eq!((code(&o), stdout(&o).trim()), (0, "ordering width 1"));
    assert_eq!(code(&scd(&["verify-cert", "tri.scd", "ord.cert", "-k", "0"], dir.path())), 1);
    file(&dir, "dec.cert", "1\n0 1 2\n");
    assert_eq!(code(&scd(&["verify-cert", "tri.scd", "dec.cert"], dir.path())), 0);
    file(&dir, "short.cert", "2\n0 1\n1\n");
    assert_eq!(code(&scd(&["verify-cert", "tri.scd", "short.cert"], dir.path())), 1);
    file(&dir, "tangle.cert", "DEGREE_TANGLE 3 0\n0 1 2\n");
    assert_eq!(code(&scd(&["verify-cert", "tri.scd", "tangle.cert"], dir.path())), 0);
    file(&dir, "far.cert", "DEGREE_TANGLE 4 0\n0 1 2\n");
    assert_eq!(code(&scd(&["verify-cert", "tri.scd", "far.cert"], dir.path())), 1);
    file(&dir, "model.cert", "MODEL expansion\n0 1 2\n0 1\n1 2\n2 0\n");
    assert_eq!(code(&scd(&["verify-cert", "tri.scd", "model.cert", "--pattern", "c3.pat"], dir.path())), 0);
    file(&dir, "wrong.cert", "MODEL expansion\n0 2 1\n0 2\n2 1\n1 0\n");
    assert_eq!(code(&scd(&["verify-cert", "tri.scd", "wrong.cert", "--pattern", "c3.pat"], dir.path())), 1);
}

#[test]
fn constants_profile_is_applied_and_checked() {
    let dir = workdir();
    file(&dir, "desk.toml", "cutwidth_m = 0\npathwidth_window = 1\n");
    file(&dir, "typo.toml", "cutwdth_m = 0\n");
    file(&dir, "neg.toml", "cutwidth_m = -1\n");
    let o = scd(&["cutwidth", "approx", "tri.scd", "-k", "1", "--constants", "desk.toml", "--selfcheck"], dir.path());
    assert_eq!(code(&o), 1, "{}", stdout(&o));
    assert!(stdout(&o).contains("BACKWARD_TANGLE"));
    let d = scd(&["cutwidth", "approx", "tri.scd", "-k", "1"], dir.path());
    assert_eq!(code(&d), 0);
    assert_eq!(code(&scd(&["cutwidth", "approx", "tri.scd", "-k", "1", "--constants", "typo.toml"], dir.path())), 2);
    assert_eq!(code(&scd(&["cutwidth", "approx", "tri.scd", "-k", "1", "--constants", "neg.toml"], dir.path())), 2);
}

#[test]
fn solvers_match_the_oracles_through_the_binary() {
    let dir = workdir();
    for seed in 0..5 {
        let name = format!("t{seed}.scd");
        scd(
            &["gen", "--model", "semicomplete", "--p", "0.2", "--n", "7", "--seed", &seed.to_string(), "-o", &name],
            dir.path(),
        );
        for what in ["cutwidth", "pathwidth"] {
            let opt = scd(&[what, "opt", &name, "--selfcheck"], dir.path());
            let oracle = scd(&["oracle", what, &name], dir.path());
            assert_eq!(code(&opt), 0);
            assert_eq!(stdout(&opt).lines().next(), stdout(&oracle).lines().next(), "{what} seed {seed}");
        }
    }
}

fn without_time(csv: &str) -> Vec<String> {
    csv.lines().map(|l| l.rsplit_once(',').map(|(head, _)| head.to_string()).unwrap_or_default()).collect()
}

#[test]
fn bench_is_deterministic_given_the_seed() {
    let dir = workdir();
    let args = |threads: &'static str| {
        vec![
            "bench",
            "--cmd",
            "pathwidth-approx",
            "--sizes",
            "6,9",
            "--count",
            "4",
            "--seed",
            "11",
            "-k",
            "1",
            "--threads",
            threads,
        ]
    };
    let a = scd(&args("1"), dir.path());
    let b = scd(&args("4"), dir.path());
    assert_eq!(code(&a), 0);
    let rows = without_time(&stdout(&a));
    assert_eq!(rows, without_time(&stdout(&b)));
    assert_eq!(rows.len(), 9);
    assert_eq!(stdout(&a).lines().next(), Some("instance,n,seed,cmd,k,outcome,width,time_ms"));
    assert!(rows[1].starts_with("random-n6-s11,6,11,pathwidth-approx,1,"), "{}", rows[1]);

    let c = scd(
        &["bench", "--cmd", "contains", "--pattern", "c3.pat", "--sizes", "5", "--count", "3", "--cert-dir", "certs"],
        dir.path(),
    );
    assert_eq!(code(&c), 0);
    for row in without_time(&stdout(&c)).iter().skip(1) {
        let outcome = row.split(',').nth(5).unwrap();
        assert!(["yes", "no", "jungle", "tangle"].contains(&outcome), "{row}");
    }
    assert_eq!(code(&scd(&["bench", "--cmd", "contains", "--sizes", "5"], dir.path())), 2);
}
