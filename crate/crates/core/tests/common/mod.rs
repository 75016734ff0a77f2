//! Independent reference computations used by the integration tests.
//! Nothing here calls into the algorithms it is used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use gamma_zeta_core::graph::Multigraph;
use rand::Rng;

pub type Poly = Vec<i128>;

pub fn poly_mul(a: &[i128], b: &[i128]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn poly_add(a: &[i128], b: &[i128]) -> Poly {
    let mut out = vec![0i128; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

pub fn poly_pow(a: &[i128], n: usize) -> Poly {
    (0..n).fold(vec![1], |acc, _| poly_mul(&acc, a))
}

pub fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

/// Arcs of `g`: arc `2e` runs along edge `e` from its first endpoint, `2e+1`
/// back. Returns (tail, head) pairs.
pub fn arcs(g: &Multigraph) -> Vec<(usize, usize)> {
    g.edges().iter().flat_map(|e| [(e.endpoints.0, e.endpoints.1), (e.endpoints.1, e.endpoints.0)]).collect()
}

/// `b` may follow `a`: head of `a` is the tail of `b`, and `b` is not `a` reversed.
pub fn follows(arcs: &[(usize, usize)], a: usize, b: usize) -> bool {
    arcs[a].1 == arcs[b].0 && b != (a ^ 1)
}

fn walks(arcs: &[(usize, usize)], path: &mut Vec<usize>, max_len: usize, visit: &mut dyn FnMut(&[usize])) {
    let first = path[0];
    let last = *path.last().unwrap();
    if follows(arcs, last, first) {
        visit(path);
    }
    if path.len() == max_len {
        return;
    }
    for b in 0..arcs.len() {
        if follows(arcs, last, b) {
            path.push(b);
            walks(arcs, path, max_len, visit);
            path.pop();
        }
    }
}

/// Closed non-backtracking tail-less walks of each length `1..=max_len`,
/// counted by exhaustive search over arc sequences.
pub fn brute_walk_counts(g: &Multigraph, max_len: usize) -> Vec<i128> {
    let a = arcs(g);
    let mut counts = vec![0i128; max_len];
    for s in 0..a.len() {
        walks(&a, &mut vec![s], max_len, &mut |p| counts[p.len() - 1] += 1);
    }
    counts
}

fn least_rotation(w: &[usize]) -> Vec<usize> {
    (0..w.len()).map(|s| [&w[s..], &w[..s]].concat()).min().unwrap()
}

fn primitive(w: &[usize]) -> bool {
    let n = w.len();
    (1..n).filter(|d| n.is_multiple_of(*d)).all(|d| w[d..] != w[..n - d] || w[..d] != w[n - d..])
}

/// Primitive classes as least-rotation arc sequences, by exhaustive search.
pub fn brute_classes(g: &Multigraph, max_len: usize) -> BTreeSet<Vec<usize>> {
    let a = arcs(g);
    let mut out = BTreeSet::new();
    for s in 0..a.len() {
        walks(&a, &mut vec![s], max_len, &mut |p| {
            if primitive(p) {
                out.insert(least_rotation(p));
            }
        });
    }
    out
}

/// Walk counts from class lengths: `N_n = sum over classes with l | n of l`.
pub fn counts_from_classes(classes: &BTreeSet<Vec<usize>>, max_len: usize) -> Vec<i128> {
    let mut counts = vec![0i128; max_len];
    for c in classes {
        let l = c.len();
        for n in (l..=max_len).step_by(l) {
            counts[n - 1] += l as i128;
        }
    }
    counts
}

/// `trace(T^n)` for `n = 1..=max_len` with `T` built from [`follows`].
pub fn trace_powers(g: &Multigraph, max_len: usize) -> Vec<i128> {
    let a = arcs(g);
    let m = a.len();
    let t: Vec<Vec<i128>> = (0..m).map(|i| (0..m).map(|j| follows(&a, i, j) as i128).collect()).collect();
    let mut p = t.clone();
    let mut out = Vec::new();
    for _ in 0..max_len {
        out.push((0..m).map(|i| p[i][i]).sum());
        p = (0..m).map(|i| (0..m).map(|j| (0..m).map(|k| p[i][k] * t[k][j]).sum()).collect()).collect();
    }
    out
}

/// Determinant of a square matrix of polynomials by the Leibniz expansion.
pub fn leibniz_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total: Poly = vec![0];
    permute(&mut perm, 0, m, &mut total);
    trim(total)
}

fn sign(p: &[usize]) -> i128 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn permute(p: &mut Vec<usize>, k: usize, m: &[Vec<Poly>], total: &mut Poly) {
    if k == p.len() {
        let mut term: Poly = vec![sign(p)];
        for (i, &j) in p.iter().enumerate() {
            term = poly_mul(&term, &m[i][j]);
        }
        *total = poly_add(total, &term);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, m, total);
        p.swap(k, i);
    }
}

/// `det(I - uT)` from the vertex-sized determinant
/// `(1-u^2)^{|E|-|V|} det(I - A u + (D - I) u^2)`.
pub fn bass_reciprocal(g: &Multigraph) -> Poly {
    let n = g.vertex_count();
    let mut adj = vec![vec![0i128; n]; n];
    for e in g.edges() {
        let (a, b) = e.endpoints;
        adj[a][b] += 1;
        adj[b][a] += 1;
    }
    let deg = g.degrees();
    let m: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c0 = (i == j) as i128;
                    let c2 = if i == j { deg[i] as i128 - 1 } else { 0 };
                    vec![c0, -adj[i][j], c2]
                })
                .collect()
        })
        .collect();
    let extra = g.edge_count() - n;
    trim(poly_mul(&poly_pow(&[1, 0, -1], extra), &leibniz_det(&m)))
}

/// Power-series coefficients of `1/p` through degree `n`.
pub fn series_inverse(p: &[i128], n: usize) -> Poly {
    let mut c = vec![0i128; n + 1];
    c[0] = 1;
    for k in 1..=n {
        c[k] = -(1..=k.min(p.len() - 1)).map(|j| p[j] * c[k - j]).sum::<i128>();
    }
    c
}

/// Random connected multigraph with minimum degree 2, at most `max_v`
/// vertices and `max_e` edges; self-loops and parallel edges allowed.
pub fn random_md2<R: Rng>(rng: &mut R, max_v: usize, max_e: usize) -> Multigraph {
    loop {
        let n = rng.random_range(1..=max_v);
        let m = rng.random_range(n.max(1)..=max_e);
        let mut ends = Vec::new();
        for v in 1..n {
            ends.push((rng.random_range(0..v), v));
        }
        while ends.len() < m {
            ends.push((rng.random_range(0..n), rng.random_range(0..n)));
        }
        let mut deg = vec![0; n];
        for &(a, b) in &ends {
            deg[a] += 1;
            deg[b] += 1;
        }
        if deg.iter().any(|&d| d < 2) {
            continue;
        }
        let mut g = Multigraph::new();
        for v in 0..n {
            g.add_vertex(&format!("v{v}"), None).unwrap();
        }
        for (i, &(a, b)) in ends.iter().enumerate() {
            g.add_edge_idx(&format!("e{i}"), a, b, None).unwrap();
        }
        return g;
    }
}

/// Random md2 graphs whose closed-walk count `N_n` stays within `budget`
/// for every `n <= max_len`, so that exhaustive enumeration stays cheap.
pub fn sample_graphs<R: Rng>(rng: &mut R, count: usize, max_len: usize, budget: i128) -> Vec<Multigraph> {
    let mut out = Vec::new();
    while out.len() < count {
        let g = random_md2(rng, 6, 9);
        if trace_powers(&g, max_len).iter().all(|&t| t <= budget) {
            out.push(g);
        }
    }
    out
}

/// Profile of the leaf by shooting in the axial coordinate `x`.
///
/// State `(xi, p, v)` with `p = phi'(u)`: `xi' = p / sqrt(4 - p^2)`,
/// `p' = -4 b xi / sqrt(4 - p^2)`, `v' = pi xi^2`, started at the cone point
/// with `p = a`. Integration stops where `xi` returns to zero.
pub struct Shot {
    pub length: f64,
    pub volume: f64,
    pub max_xi: f64,
    pub initial_slope: f64,
}

pub fn shoot(a: f64, b: f64, h: f64) -> Shot {
    let rhs = |s: [f64; 3]| {
        let q = (4.0 - s[1] * s[1]).sqrt();
        [s[1] / q, -4.0 * b * s[0] / q, std::f64::consts::PI * s[0] * s[0]]
    };
    let step = |s: [f64; 3], h: f64| {
        let add = |s: [f64; 3], k: [f64; 3], f: f64| [s[0] + f * k[0], s[1] + f * k[1], s[2] + f * k[2]];
        let k1 = rhs(s);
        let k2 = rhs(add(s, k1, h / 2.0));
        let k3 = rhs(add(s, k2, h / 2.0));
        let k4 = rhs(add(s, k3, h));
        [
            s[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            s[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
            s[2] + h / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]),
        ]
    };
    let mut s = [0.0, a, 0.0];
    let mut x = 0.0;
    let mut max_xi: f64 = 0.0;
    loop {
        let next = step(s, h);
        if next[1] < 0.0 && next[0] <= 0.0 {
            // Newton on the step length for xi = 0.
            let mut t = h * s[0] / (s[0] - next[0]);
            for _ in 0..8 {
                let st = step(s, t);
                t -= st[0] / rhs(st)[0];
            }
            let end = step(s, t);
            return Shot { length: x + t, volume: end[2], max_xi, initial_slope: a / (4.0 - a * a).sqrt() };
        }
        s = next;
        x += h;
        max_xi = max_xi.max(s[0]);
    }
}

/// Parameter whose shot length equals `target`, by bisection.
pub fn shoot_parameter(a: f64, target: f64, h: f64) -> f64 {
    let (mut lo, mut hi) = (0.5, 10.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if shoot(a, mid, h).length > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Area of the spherical triangle `(a, b, c)` on the unit sphere by the
/// half-angle tangent formula.
pub fn spherical_excess(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    let dot = |x: [f64; 3], y: [f64; 3]| x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    let cross = [b[1] * c[2] - b[2] * c[1], b[2] * c[0] - b[0] * c[2], b[0] * c[1] - b[1] * c[0]];
    let triple = dot(a, cross);
    2.0 * triple.abs().atan2(1.0 + dot(a, b) + dot(b, c) + dot(c, a))
}

pub fn triple(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) + a[1] * (b[2] * c[0] - b[0] * c[2]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

pub fn random_unit<R: Rng>(rng: &mut R) -> [f64; 3] {
    loop {
        let v: [f64; 3] = [rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 0.1 && n <= 1.0 {
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn small_det(m: &[Vec<i128>]) -> i128 {
    let p: Vec<Vec<Poly>> = m.iter().map(|r| r.iter().map(|&x| vec![x]).collect()).collect();
    leibniz_det(&p)[0]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Nonzero invariant factors from determinantal divisors: `d_k` is the gcd
/// of all `k x k` minors and the factors are `d_k / d_{k-1}`.
pub fn invariant_factors(m: &[Vec<i128>], rows: usize, cols: usize) -> Vec<i128> {
    let mut out = Vec::new();
    let mut prev = 1;
    for k in 1..=rows.min(cols) {
        let mut d = 0;
        for r in subsets(rows, k) {
            for c in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = r.iter().map(|&i| c.iter().map(|&j| m[i][j]).collect()).collect();
                d = gcd(d, small_det(&minor));
            }
        }
        if d == 0 {
            break;
        }
        out.push(d / prev);
        prev = d;
    }
    out
}
