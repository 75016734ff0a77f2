use std::path::Path;
use std::process::{Command, Output};

use gamma_zeta_core::graph::parse_graph;

const TRIANGLE: &str = "gamma-graph v1\nvertex a\nvertex b\nvertex c\nedge e0 a b\nedge e1 b c\nedge e2 c a\n";

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gamma-zeta-lab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn triangle_determinant() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "t.graph", TRIANGLE);
    let o = lab(&["zeta", "det", "--in", &g]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("gamma-zeta-lab "));
    assert!(text.lines().any(|l| l == "poly 1 0 0 -2 0 0 1"), "{text}");
}

#[test]
fn header_records_seed() {
    let o = lab(&["--seed", "42", "holonomy", "sphere", "--loops", "octant"]);
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert_eq!(first, format!("gamma-zeta-lab {} seed=42", env!("CARGO_PKG_VERSION")));
}

#[test]
fn leaf_solve_reports_slope_constant() {
    let o = lab(&["leaf", "solve"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("a 1.15470053837925")), "{text}");
    for key in ["b_star ", "arc_length ", "rho_max ", "K ", "sample "] {
        assert!(text.lines().any(|l| l.starts_with(key)), "missing {key}");
    }
}

#[test]
fn same_seed_same_bytes() {
    let a = lab(&["--seed", "7", "leaf", "profile", "--b", "1.5", "--n", "32"]);
    let b = lab(&["--seed", "7", "leaf", "profile", "--b", "1.5", "--n", "32"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn delta_angle_zero_is_identity() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("oct.graph");
    let g = gamma_zeta_core::delta::shifted_octahedron(1, 0.4, 0.1, 17).unwrap();
    std::fs::write(&src, gamma_zeta_core::graph::serialize_graph(&g)).unwrap();
    let dst = dir.path().join("out.graph");
    let o = lab(&[
        "delta",
        "apply",
        "--in",
        src.to_str().unwrap(),
        "--plane",
        "x1",
        "--angle",
        "0",
        "--out",
        dst.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let h = parse_graph(&std::fs::read_to_string(&dst).unwrap()).unwrap();
    assert!(h.structurally_equal(&g, 1e-12));
}

#[test]
fn delta_quarter_turn_keeps_zeta() {
    let dir = tempfile::tempdir().unwrap();
    let g = gamma_zeta_core::delta::shifted_octahedron(1, 0.4, 0.1, 17).unwrap();
    let src = write(dir.path(), "a.graph", &gamma_zeta_core::graph::serialize_graph(&g));
    let dst = dir.path().join("b.graph");
    let dst = dst.to_str().unwrap();
    let o = lab(&["delta", "apply", "--in", &src, "--plane", "x1", "--angle", "90", "--out", dst]);
    assert_eq!(o.status.code(), Some(0));
    let o = lab(&["delta", "check", "--a", &src, "--b", dst]);
    assert!(stdout(&o).lines().any(|l| l == "equal true"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(lab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(lab(&["leaf", "solve", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(lab(&["delta", "apply", "--in", "x", "--plane", "x1", "--angle", "45"]).status.code(), Some(2));
}

#[test]
fn domain_errors_exit_one_with_name() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p.graph", "gamma-graph v1\nvertex a\nvertex b\nedge e a b\n");
    let o = lab(&["zeta", "det", "--in", &g]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("NotMd2"));
    let bad = write(dir.path(), "bad.graph", "not a graph\n");
    let o = lab(&["zeta", "series", "--in", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("ParseError"));
}

#[test]
fn report_goes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "t.graph", TRIANGLE);
    let out = dir.path().join("r.txt");
    let o = lab(&["zeta", "series", "--in", &g, "--max-length", "6", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.lines().any(|l| l == "series 6 1 0 0 2 0 0 3"), "{text}");
}

#[test]
fn octant_graph_round_trips_through_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("o.graph");
    let o = lab(&["gamma", "octant", "--out", out.to_str().unwrap()]);
    assert!(stdout(&o).lines().any(|l| l == "vertices 6"));
    let g = parse_graph(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (6, 12));
    let o = lab(&["holonomy", "classify", "--in", out.to_str().unwrap(), "--max-length", "4"]);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("total ")));
    let o = lab(&["holonomy", "duality", "--in", out.to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("pole ")));
    assert!(text.lines().any(|l| l.starts_with("generator ")));
}

#[test]
fn strata_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let rp2 = write(
        dir.path(),
        "rp2.strata",
        "strata v1\nstratum rp2\ncells 0 1\ncells 1 1\ncells 2 1\nboundary 2\nrow 0 0 2\n",
    );
    let text = stdout(&lab(&["strata", "cohomology", "--in", &rp2]));
    assert!(text.lines().any(|l| l == "stratum rp2 H2 rank 0 torsion 2"), "{text}");
    let text = stdout(&lab(&["strata", "cohomology", "--in", &rp2, "--ring", "rat", "--degree", "2"]));
    assert!(text.lines().any(|l| l == "glued H2 rank 0 torsion -"), "{text}");

    let swap = write(
        dir.path(),
        "swap.strata",
        "strata v1\nstratum a\ncells 0 1\ncells 1 1\nstratum b\ncells 0 1\ncells 1 1\nsigma 0 1\nsigma 1 0\n",
    );
    let text = stdout(&lab(&["strata", "invariant", "--in", &swap, "--degree", "1"]));
    assert!(text.lines().any(|l| l == "invariant H1 1"), "{text}");
    let text = stdout(&lab(&["strata", "twisted", "--in", &swap]));
    assert!(text.lines().any(|l| l == "twisted H1 rank 2 torsion -"), "{text}");

    let mism = write(
        dir.path(),
        "m.strata",
        "strata v1\nstratum a\ncells 0 1\ncells 1 1\nstratum p\ncells 0 1\nsigma 0 1\nsigma 1 0\n",
    );
    let o = lab(&["strata", "twisted", "--in", &mism]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("ShapeMismatch"));
}
