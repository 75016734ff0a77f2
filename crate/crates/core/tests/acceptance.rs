//! Acceptance criteria, one PASS/FAIL line each.
//!
//! The lines go straight to the process stderr so they show up even when
//! libtest captures test output.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use gamma_zeta_core::delta::{apply_delta, check_zeta_invariance, shifted_octahedron, DeltaSpec, EPS_GLUE};
use gamma_zeta_core::gamma::{
    assemble_gamma, build_gamma, extract_level_curves, octant_graph, refine_junctions, sphere_surface, EPS_CLOSE,
    EPS_VERTEX, MID_PLANE,
};
use gamma_zeta_core::graph::fixtures;
use gamma_zeta_core::holonomy::{
    classify_paths, cycle_holonomy_sign, duality_report, octant_holonomies, sphere_parallel_transport, total_holonomy,
    transport_steps, wrap_angle, GeodesicArc,
};
use gamma_zeta_core::leaf::{
    arc_length, curvature_report, profile_curve, solve_b, volume, DEFAULT_TOL, DIAGONAL, SLOPE_A,
};
use gamma_zeta_core::strata::{
    apply_twist, cohomology_stratum, invariant_classes, twisted_cohomology, CellRef, CohomologyGroup, Ring,
    StratifiedComplex, StratumComplex,
};
use gamma_zeta_core::zeta::{
    enumerate_cycles, reciprocal_series, trace_counts, zeta_euler_truncated, zeta_reciprocal, zeta_series,
};
use gamma_zeta_core::{geom, Multigraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

const SEED: u64 = 20_240_501;
const SAMPLE: usize = 60;
const MAX_LEN: usize = 12;
/// Per-length cap on closed-walk counts of sampled graphs; keeps class
/// enumeration through length 12 small.
const WALK_BUDGET: i128 = 200_000;

fn sample() -> Vec<Multigraph> {
    sample_graphs(&mut ChaCha8Rng::seed_from_u64(SEED), SAMPLE, MAX_LEN, WALK_BUDGET)
}

fn zeta_triple_agreement() -> Check {
    let graphs = sample();
    ensure!(graphs.len() >= 50, "only {} graphs", graphs.len());
    for (i, g) in graphs.iter().enumerate() {
        ensure!(g.vertex_count() <= 6 && g.edge_count() <= 9, "graph {i} too large");
        let classes = enumerate_cycles(g, MAX_LEN).map_err(|e| e.to_string())?;
        let euler = zeta_euler_truncated(&classes, MAX_LEN).map_err(|e| e.to_string())?.coeffs;
        let exp = zeta_series(g, MAX_LEN).map_err(|e| e.to_string())?.coeffs;
        let det = reciprocal_series(&zeta_reciprocal(g).map_err(|e| e.to_string())?.poly, MAX_LEN)
            .map_err(|e| e.to_string())?;
        ensure!(euler == exp && exp == det, "graph {i}: {euler:?} / {exp:?} / {det:?}");
    }
    Ok(())
}

fn known_reciprocals() -> Check {
    let triangle = zeta_reciprocal(&fixtures::cycle(3)).map_err(|e| e.to_string())?.poly;
    ensure!(triangle == vec![1, 0, 0, -2, 0, 0, 1], "triangle {triangle:?}");
    ensure!(triangle == bass_reciprocal(&fixtures::cycle(3)), "triangle vertex formula");
    let k4 = poly_mul(&poly_mul(&poly_pow(&[1, 0, -1], 2), &poly_mul(&[1, -1], &[1, -2])), &poly_pow(&[1, 1, 2], 3));
    let got = zeta_reciprocal(&fixtures::complete(4)).map_err(|e| e.to_string())?.poly;
    ensure!(got == k4, "K4 {got:?} vs {k4:?}");
    ensure!(bass_reciprocal(&fixtures::complete(4)) == k4, "K4 vertex formula");
    Ok(())
}

fn trace_identity() -> Check {
    for (i, g) in sample().iter().enumerate() {
        let n = zeta_series(g, MAX_LEN).map_err(|e| e.to_string())?.counts;
        let t = trace_counts(g, MAX_LEN).map_err(|e| e.to_string())?;
        ensure!(n == t, "graph {i}: N {n:?} vs trace {t:?}");
        ensure!(t == trace_powers(g, MAX_LEN), "graph {i}: trace oracle");
    }
    Ok(())
}

fn leaf_solver() -> Check {
    let b = solve_b(DIAGONAL, DEFAULT_TOL).map_err(|e| e.to_string())?;
    let s = arc_length(b, DEFAULT_TOL).map_err(|e| e.to_string())?;
    ensure!((s - DIAGONAL).abs() <= 1e-8, "S(b*) - sqrt 3 = {:e}", s - DIAGONAL);
    let k = curvature_report(b, &mut ChaCha8Rng::seed_from_u64(SEED)).map_err(|e| e.to_string())?;
    ensure!(k.k == b, "K = {} but b* = {b}", k.k);
    ensure!(k.max_deviation <= 1e-6, "finite-difference curvature off by {:e}", k.max_deviation);
    let p = profile_curve(b, 256).map_err(|e| e.to_string())?;
    let slope = p.origin_slope();
    ensure!((slope - 0.5f64.sqrt()).abs() <= 1e-6, "xi'(0) = {slope}");
    let v_u = volume(b, DEFAULT_TOL).map_err(|e| e.to_string())?;
    let v_x = shoot(SLOPE_A, b, 1e-4).volume;
    ensure!((v_u - v_x).abs() / v_u <= 1e-6, "volume {v_u} vs {v_x}");
    let v_p = gamma_zeta_core::numeric::integrate(|x| p.xi_at(x).0.powi(2), 0.0, p.x_max(), 1e-12)
        .map_err(|e| e.to_string())?
        .value
        * std::f64::consts::PI;
    ensure!((v_u - v_p).abs() / v_u <= 1e-6, "volume {v_u} vs profile {v_p}");
    Ok(())
}

fn golden_lines(build: &gamma_zeta_core::gamma::GammaBuild, grid: usize) -> Vec<String> {
    let mut lines = vec!["gamma v1".to_string(), format!("grid {grid}")];
    lines.extend(build.raw_counts.iter().map(|c| format!("raw {} x{} {}", c.leaf, c.plane, c.count)));
    lines.push(format!("loops {}", build.curves.len()));
    lines.push(format!("vertices {}", build.graph.vertex_count()));
    lines.push(format!("edges {}", build.graph.edge_count()));
    let mut d = build.graph.degrees();
    d.sort_unstable();
    lines.push(format!("degrees {}", d.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")));
    lines
}

fn gamma_pipeline() -> Check {
    let s = sphere_surface("S", [0.5; 3], [1.0, 1.0, 1.0], 0.4);
    let mut circles = Vec::new();
    for plane in 1..=3 {
        circles.extend(extract_level_curves(&s, plane, MID_PLANE, 1e-12, 128).map_err(|e| e.to_string())?);
    }
    ensure!(circles.len() == 3, "{} sphere curves", circles.len());
    refine_junctions(&s, &mut circles).map_err(|e| e.to_string())?;
    let g = assemble_gamma(&circles, EPS_VERTEX).map_err(|e| e.to_string())?;
    ensure!((g.vertex_count(), g.edge_count()) == (6, 12), "sphere graph {} / {}", g.vertex_count(), g.edge_count());

    let b = solve_b(DIAGONAL, DEFAULT_TOL).map_err(|e| e.to_string())?;
    let build = build_gamma(b, 512, EPS_VERTEX).map_err(|e| e.to_string())?;
    for c in circles.iter().chain(&build.curves) {
        ensure!(c.closure_gap() <= EPS_CLOSE, "curve on {} gap {:e}", c.leaf, c.closure_gap());
    }
    let golden = include_str!("golden/gamma_bstar_512.txt");
    let got = golden_lines(&build, 512);
    ensure!(got.iter().map(String::as_str).eq(golden.lines()), "golden mismatch:\n{}", got.join("\n"));
    Ok(())
}

fn delta_invariance() -> Check {
    let g = shifted_octahedron(1, 0.4, 0.1, 17).map_err(|e| e.to_string())?;
    let spec = DeltaSpec::new(1, 90, EPS_GLUE).map_err(|e| e.to_string())?;
    let (h, rep) = apply_delta(&g, &spec).map_err(|e| e.to_string())?;
    ensure!(rep.cut_points > 0 && rep.matched == rep.cut_points, "matched {} of {}", rep.matched, rep.cut_points);
    let z = check_zeta_invariance(&g, &h).map_err(|e| e.to_string())?;
    ensure!(z.equal, "zeta differs at degree {:?}", z.first_difference);
    let mut cur = g.clone();
    for _ in 0..4 {
        cur = apply_delta(&cur, &spec).map_err(|e| e.to_string())?.0;
    }
    ensure!(cur.structurally_equal(&g, 1e-9), "four quarter turns do not restore the graph");
    Ok(())
}

fn holonomy() -> Check {
    for h in octant_holonomies().map_err(|e| e.to_string())? {
        ensure!((h.angle.abs() - std::f64::consts::FRAC_PI_2).abs() <= 1e-6, "{} angle {}", h.loop_id, h.angle);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut done = 0;
    while done < 20 {
        let (a, b, c) = (random_unit(&mut rng), random_unit(&mut rng), random_unit(&mut rng));
        if triple(a, b, c).abs() < 1e-3 {
            continue;
        }
        let arcs = [
            GeodesicArc::between(a, b).map_err(|e| e.to_string())?,
            GeodesicArc::between(b, c).map_err(|e| e.to_string())?,
            GeodesicArc::between(c, a).map_err(|e| e.to_string())?,
        ];
        let v0 = gamma_zeta_core::gamma::normal_frame(a).0;
        let h = sphere_parallel_transport(&arcs, a, v0).map_err(|e| e.to_string())?;
        let excess = spherical_excess(a, b, c) * triple(a, b, c).signum();
        ensure!(wrap_angle(h.angle - excess).abs() <= 1e-6, "triangle {done}: {} vs {excess}", h.angle);
        for v in transport_steps(&arcs, v0) {
            ensure!((geom::norm(v) - 1.0).abs() <= 1e-9, "norm drift {:e}", geom::norm(v) - 1.0);
        }
        done += 1;
    }
    let mut graphs = sample();
    graphs.push(octant_graph().0);
    for g in &graphs {
        let classes = enumerate_cycles(g, 8).map_err(|e| e.to_string())?;
        for c in &classes {
            let expect = if c.length % 2 == 0 { 1 } else { -1 };
            ensure!(cycle_holonomy_sign(c).sign == expect, "sign of length-{} class", c.length);
        }
        let (ferm, bos) = classify_paths(&classes);
        ensure!(total_holonomy(&classes) == bos.len() as i64 - ferm.len() as i64, "total holonomy");
    }
    Ok(())
}

fn strata_fixtures() -> Vec<StratifiedComplex> {
    let circle = |n: &str| StratumComplex::new(n, vec![1, 1], vec![]).unwrap();
    let point = StratumComplex::new("p", vec![1], vec![]).unwrap();
    let rp2 = StratumComplex::new("rp2", vec![1, 1, 1], vec![(2, vec![vec![2]])]).unwrap();
    let square = StratumComplex::new(
        "sq",
        vec![4, 4, 1],
        vec![
            (1, vec![vec![-1, 0, 0, 1], vec![1, -1, 0, 0], vec![0, 1, -1, 0], vec![0, 0, 1, -1]]),
            (2, vec![vec![1], vec![1], vec![1], vec![1]]),
        ],
    )
    .unwrap();
    let swap = StratifiedComplex::new(vec![circle("a"), circle("b")], vec![])
        .unwrap()
        .with_twist(vec![1, 0], vec![vec![vec![vec![1]], vec![vec![1]]]; 2])
        .unwrap();
    // quarter rotation of the square disc
    let rot1 = vec![vec![0, 0, 0, 1], vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]];
    let rotated = StratifiedComplex::new(vec![square.clone()], vec![])
        .unwrap()
        .with_twist(vec![0], vec![vec![rot1.clone(), rot1, vec![vec![1]]]])
        .unwrap();
    let wedge = StratifiedComplex::new(
        vec![circle("a"), circle("b")],
        vec![(CellRef { stratum: 0, degree: 0, cell: 0 }, CellRef { stratum: 1, degree: 0, cell: 0 })],
    )
    .unwrap();
    vec![
        StratifiedComplex::new(vec![circle("c")], vec![]).unwrap(),
        StratifiedComplex::new(vec![point], vec![]).unwrap(),
        StratifiedComplex::new(vec![rp2], vec![]).unwrap(),
        StratifiedComplex::new(vec![square], vec![]).unwrap(),
        swap,
        rotated,
        wedge,
    ]
}

fn oracle_group(s: &StratumComplex, k: usize) -> CohomologyGroup {
    let inv_k = invariant_factors(&s.boundary(k), s.count(k.wrapping_sub(1)), s.count(k));
    let inv_next = invariant_factors(&s.boundary(k + 1), s.count(k), s.count(k + 1));
    CohomologyGroup {
        rank: s.count(k) - inv_k.len() - inv_next.len(),
        torsion: inv_k.into_iter().filter(|&t| t > 1).collect(),
    }
}

fn squares_to_zero(s: &StratumComplex) -> bool {
    (2..s.cells.len()).all(|k| {
        let (a, b, c) = (s.cells[k - 2], s.cells[k - 1], s.cells[k]);
        (0..a).all(|i| (0..c).all(|j| (0..b).map(|l| s.boundary[k - 1][i][l] * s.boundary[k][l][j]).sum::<i128>() == 0))
    })
}

fn strata() -> Check {
    let all = strata_fixtures();
    for (f, sc) in all.iter().enumerate() {
        for s in &sc.strata {
            ensure!(squares_to_zero(s), "fixture {f}: boundary of {} does not square to zero", s.name);
        }
        let tw = apply_twist(sc).map_err(|e| e.to_string())?;
        for s in &tw.strata {
            ensure!(squares_to_zero(s), "fixture {f}: twisted boundary of {} does not square to zero", s.name);
        }
        for s in &sc.strata {
            for k in 0..=s.top() {
                let got = cohomology_stratum(s, k, Ring::Integer).map_err(|e| e.to_string())?;
                ensure!(got == oracle_group(s, k), "{} H{k}: {got:?} vs {:?}", s.name, oracle_group(s, k));
            }
        }
    }
    let expect = |sc: &StratifiedComplex, want: &[(usize, Vec<i128>)]| -> Check {
        for (k, (rank, torsion)) in want.iter().enumerate() {
            let g = cohomology_stratum(&sc.strata[0], k, Ring::Integer).map_err(|e| e.to_string())?;
            ensure!(g.rank == *rank && g.torsion == *torsion, "{} H{k} = {g}", sc.strata[0].name);
        }
        Ok(())
    };
    expect(&all[0], &[(1, vec![]), (1, vec![])])?;
    expect(&all[1], &[(1, vec![])])?;
    expect(&all[2], &[(1, vec![]), (0, vec![]), (0, vec![2])])?;

    let pair = StratifiedComplex::new(vec![all[2].strata[0].clone(), all[0].strata[0].clone()], vec![])
        .map_err(|e| e.to_string())?;
    for k in 0..=2 {
        let parts = pair
            .strata
            .iter()
            .filter(|s| k <= s.top())
            .map(|s| cohomology_stratum(s, k, Ring::Integer))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let sum = CohomologyGroup::direct_sum(&parts).map_err(|e| e.to_string())?;
        let tw = twisted_cohomology(&pair, k, Ring::Integer).map_err(|e| e.to_string())?;
        ensure!(tw == sum, "H{k}: twisted {tw} vs direct sum {sum}");
    }
    let inv = invariant_classes(&all[4], 1).map_err(|e| e.to_string())?;
    ensure!(inv == 1, "swap invariant rank {inv}");
    Ok(())
}

fn duality() -> Check {
    let g = octant_graph().0;
    let run = || -> Result<Vec<String>, String> {
        let h = octant_holonomies().map_err(|e| e.to_string())?;
        let r = duality_report(&g, &h, 1e-10).map_err(|e| e.to_string())?;
        let degree = zeta_reciprocal(&g).map_err(|e| e.to_string())?.degree();
        let total: usize = r.poles.iter().map(|p| p.multiplicity).sum();
        ensure!(total == degree, "poles cover {total} of {degree} roots");
        ensure!(r.generator_dims.len() == h.len(), "{} generator rows", r.generator_dims.len());
        Ok(r.lines())
    };
    let (a, b) = (run()?, run()?);
    ensure!(a == b, "report is not deterministic");
    ensure!(a.iter().filter(|l| l.starts_with("generator ")).count() == 8, "generator lines");
    ensure!(a.iter().any(|l| l.starts_with("pole ")), "pole lines");
    ensure!(a.iter().any(|l| l.starts_with("fixed_dim ")), "fixed_dim line");
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("zeta triple agreement", Duration::from_secs(60), zeta_triple_agreement),
        ("known reciprocals", Duration::from_secs(1), known_reciprocals),
        ("trace identity", Duration::from_secs(60), trace_identity),
        ("leaf solver", Duration::from_secs(5), leaf_solver),
        ("gamma pipeline", Duration::from_secs(120), gamma_pipeline),
        ("delta invariance", Duration::from_secs(5), delta_invariance),
        ("holonomy", Duration::from_secs(5), holonomy),
        ("strata", Duration::from_secs(5), strata),
        ("duality report", Duration::from_secs(5), duality),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr().lock();
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            if elapsed <= *limit {
                Ok(())
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
        });
        let status = if result.is_ok() { "PASS" } else { "FAIL" };
        let _ = writeln!(err, "criterion {} {status} {name} ({:.2} s)", i + 1, elapsed.as_secs_f64());
        if let Err(msg) = result {
            let _ = writeln!(err, "  {msg}");
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
