use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn cx2lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cx2lab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_catalog(dir: &Path, name: &[&str], file: &str) -> String {
    let mut args = vec!["catalog"];
    args.extend_from_slice(name);
    let path = dir.join(file);
    fs::write(&path, stdout(&cx2lab(&args))).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn catalog_density_homology_collapse() {
    let dir = tempfile::tempdir().unwrap();
    let torus = write_catalog(dir.path(), &["torus7"], "torus.txt");
    let rp2 = write_catalog(dir.path(), &["rp2_6"], "rp2.txt");
    let triod = write_catalog(dir.path(), &["triod", "8"], "y8.txt");

    let d = stdout(&cx2lab(&["density", &torus]));
    assert_eq!(d.lines().nth(1).unwrap(), "7,21,14,1/2,1/2,true,0,14");
    let d = stdout(&cx2lab(&["density", "--subdivide", "1", &triod]));
    let row: Vec<&str> = d.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[2], "81");
    assert_eq!(row[6], "-1");

    let h = stdout(&cx2lab(&["homology", &rp2]));
    assert_eq!(h.lines().nth(1).unwrap(), "1,0,0,1,1,1,2,1");

    let c = stdout(&cx2lab(&["collapse", &triod]));
    assert!(c.lines().nth(1).unwrap().starts_with("graph,"));
    assert!(c.lines().nth(1).unwrap().ends_with(",true"));

    let list = stdout(&cx2lab(&["catalog", "--list"]));
    assert!(list.lines().any(|l| l == "klein8"));
}

#[test]
fn embed_modes() {
    let dir = tempfile::tempdir().unwrap();
    let torus = write_catalog(dir.path(), &["torus7"], "torus.txt");
    let lxy = write_catalog(dir.path(), &["lxy", "6", "6"], "l66.txt");
    let tri = write_catalog(dir.path(), &["triangle"], "tri.txt");

    let out = stdout(&cx2lab(&["embed", "--pattern", &lxy, "--host", &torus, "--mode", "immersion"]));
    assert_eq!(out.lines().next(), Some("found"));
    assert_eq!(out.lines().count(), 11);
    let out = stdout(&cx2lab(&["embed", "--pattern", &lxy, "--host", &torus]));
    assert_eq!(out.trim(), "none");
    let out = stdout(&cx2lab(&["embed", "--pattern", &tri, "--host", &torus, "--mode", "count"]));
    assert_eq!(out.lines().nth(1), Some("84,84"));
    let out = stdout(&cx2lab(&["embed", "--pattern", &tri, "--host", &torus, "--mode", "count", "--subdivide", "1"]));
    assert_eq!(out.lines().nth(1), Some("0,0"));
}

#[test]
fn sample_is_reproducible() {
    let a = stdout(&cx2lab(&["sample", "--n", "25", "--p", "0.1", "--seed", "9"]));
    let b = stdout(&cx2lab(&["sample", "--n", "25", "--p", "0.1", "--seed", "9"]));
    assert_eq!(a, b);
    assert_eq!(a.lines().next(), Some("skeleton 25"));
    let s = complex2::format::parse_complex(&a).unwrap();
    assert_eq!(s.num_edges(), 300);
}

#[test]
fn experiment_from_config_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("moment.cfg");
    let out = dir.path().join("moment.csv");
    fs::write(
        &cfg,
        format!("name = moment_check\nn = 12\np = 0.5\ntrials = 40\nseed = 1\npattern = tetrahedron\nout = {}\n", out.display()),
    )
    .unwrap();
    let printed = stdout(&cx2lab(&["experiment", "--config", cfg.to_str().unwrap(), "--trials", "10"]));
    assert!(printed.starts_with("experiment,n,grid_key"));
    let mut records = csv::Reader::from_path(&out).unwrap();
    let headers = records.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        [
            "trial", "seed", "n", "grid_value", "p", "f2", "chi", "collapse_kind", "steps", "chi_preserved",
            "contained", "embedding_count"
        ]
    );
    assert_eq!(records.records().count(), 10);
    let summary = fs::read_to_string(dir.path().join("moment.summary.csv")).unwrap();
    assert_eq!(summary.lines().count(), 2);

    let again = stdout(&cx2lab(&["experiment", "--config", cfg.to_str().unwrap(), "--trials", "10"]));
    assert_eq!(printed, again);
}

#[test]
fn errors_exit_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "f 1 2 2\n").unwrap();
    let o = cx2lab(&["density", bad.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));

    assert!(!cx2lab(&["catalog", "dodecahedron"]).status.success());
    assert!(!cx2lab(&["sample", "--n", "5", "--p", "2"]).status.success());
    assert!(!cx2lab(&["experiment", "--name", "euler_regime", "--n", "20", "--c", "3", "--trials", "0"]).status.success());
    assert!(!cx2lab(&["experiment", "--name", "containment_curve", "--n", "20", "--alpha", "1", "--trials", "3"]).status.success());
    assert!(!cx2lab(&["density", dir.path().join("missing").to_str().unwrap()]).status.success());
}
