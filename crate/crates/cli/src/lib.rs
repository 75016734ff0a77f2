//! Batch driver for the gamma-zeta lab.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gamma_zeta_core::delta::{apply_delta, check_zeta_invariance, DeltaSpec, EPS_GLUE};
use gamma_zeta_core::gamma::{build_gamma, octant_graph, DEFAULT_GRID, EPS_VERTEX};
use gamma_zeta_core::graph::{parse_graph, serialize_graph, validate};
use gamma_zeta_core::holonomy::{
    classify_paths, duality_report, format_cycle_report, format_transport_report, octant_holonomies,
};
use gamma_zeta_core::leaf::{curvature_report, format_leaf_report, profile_curve, solve_b, DEFAULT_TOL, DIAGONAL};
use gamma_zeta_core::strata::{
    cohomology_glued, cohomology_stratum, invariant_classes, parse_strata, twisted_cohomology, Ring,
};
use gamma_zeta_core::zeta::{
    enumerate_cycles, format_poles, format_poly, format_series, zeta_poles, zeta_reciprocal, zeta_series,
};
use gamma_zeta_core::{Error, Multigraph, VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gamma-zeta-lab", version, about = "Zeta, leaf geometry, holonomy and strata computations")]
pub struct RunConfig {
    /// Seed for every randomized step; recorded in the report header.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Constant-curvature leaf profile.
    #[command(subcommand)]
    Leaf(LeafCmd),
    /// Mid-plane intersection graph and the octant graph.
    #[command(subcommand)]
    Gamma(GammaCmd),
    /// Ihara zeta series, reciprocal polynomial or poles of a graph file.
    Zeta(ZetaArgs),
    /// Slice, rotate and re-glue an embedded graph.
    #[command(subcommand)]
    Delta(DeltaCmd),
    /// Cycle signs, sphere transport and the duality listing.
    #[command(subcommand)]
    Holonomy(HolonomyCmd),
    /// Cohomology of stratified complexes.
    #[command(subcommand)]
    Strata(StrataCmd),
}

#[derive(Debug, Args)]
pub struct OutArg {
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum LeafCmd {
    /// Solve for the curvature parameter and report the resulting leaf.
    Solve {
        #[arg(long, default_value_t = 1e-8, value_parser = positive)]
        tol: f64,
        #[arg(long, default_value_t = 256)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Report the leaf for a given parameter.
    Profile {
        #[arg(long, value_parser = positive)]
        b: f64,
        #[arg(long, default_value_t = 256)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum GammaCmd {
    /// Trace the leaves on the mid-planes and assemble the graph.
    Build {
        /// Curvature parameter; solved for when omitted.
        #[arg(long, value_parser = positive)]
        b: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        #[arg(long, default_value_t = EPS_VERTEX, value_parser = positive)]
        eps: f64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Octant graph of three great circles on the unit sphere.
    Octant {
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ZetaMode {
    Series,
    Det,
    Poles,
}

#[derive(Debug, Args)]
pub struct ZetaArgs {
    pub mode: ZetaMode,
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, default_value_t = 12)]
    pub max_length: usize,
    #[arg(long, default_value_t = 1e-10, value_parser = positive)]
    pub tol: f64,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Plane {
    X1,
    X2,
    X3,
}

#[derive(Debug, Subcommand)]
pub enum DeltaCmd {
    /// Slice along a mid-plane, rotate the far side and re-glue.
    Apply {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        plane: Plane,
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(["0", "90", "180", "270"]))]
        angle: String,
        #[arg(long, default_value_t = EPS_GLUE, value_parser = positive)]
        eps: f64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Compare the zeta reciprocals of two graphs.
    Check {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum LoopFamily {
    Octant,
}

#[derive(Debug, Subcommand)]
pub enum HolonomyCmd {
    /// Sign character of every primitive cycle class.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_length: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Parallel transport around a loop family on the unit sphere.
    Sphere {
        #[arg(long, default_value = "octant")]
        loops: LoopFamily,
        #[command(flatten)]
        out: OutArg,
    },
    /// Holonomy fixed spaces listed next to the zeta poles of a graph.
    Duality {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1e-10, value_parser = positive)]
        tol: f64,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RingArg {
    Int,
    Rat,
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Self {
        match r {
            RingArg::Int => Ring::Integer,
            RingArg::Rat => Ring::Rational,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum StrataCmd {
    /// Cohomology of each stratum and of the glued complex.
    Cohomology {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "int")]
        ring: RingArg,
        #[arg(long)]
        degree: Option<usize>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Cohomology of the twisted complex in every degree.
    Twisted {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "int")]
        ring: RingArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Rank of the twist-invariant part of a rational cohomology group.
    Invariant {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        out: OutArg,
    },
}

fn positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` must be positive"))
    }
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// A finished run: the report lines and, for commands that produce a
/// graph, the graph text and its destination.
struct Report {
    lines: Vec<String>,
    out: Option<PathBuf>,
    artifact: Option<String>,
}

impl Report {
    fn text(lines: Vec<String>, out: &OutArg) -> Self {
        Self { lines, out: out.out.clone(), artifact: None }
    }

    /// Graph reports print the graph inline unless `--out` names a file.
    fn graph(mut lines: Vec<String>, g: &Multigraph, out: &OutArg) -> Self {
        let text = serialize_graph(g);
        if out.out.is_none() {
            lines.extend(text.lines().map(str::to_string));
        }
        Self { lines, out: out.out.clone(), artifact: Some(text) }
    }
}

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn write(path: &Path, text: &str) -> Outcome<()> {
    fs::write(path, text).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load_graph(path: &Path) -> Outcome<Multigraph> {
    Ok(parse_graph(&read(path)?)?)
}

fn graph_summary(g: &Multigraph) -> Vec<String> {
    let r = validate(g);
    let mut degs = g.degrees();
    degs.sort_unstable();
    let degs: Vec<String> = degs.iter().map(usize::to_string).collect();
    vec![
        format!("vertices {}", g.vertex_count()),
        format!("edges {}", g.edge_count()),
        format!("connected {}", r.connected),
        format!("md2 {}", r.md2),
        format!("degrees {}", degs.join(" ")),
    ]
}

fn leaf_lines(b: f64, solved: bool, n: usize, seed: u64) -> Outcome<Vec<String>> {
    let p = profile_curve(b, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = curvature_report(b, &mut rng)?;
    Ok(format_leaf_report(&p, solved, k.k))
}

fn execute(cfg: &RunConfig) -> Outcome<Report> {
    Ok(match &cfg.command {
        Command::Leaf(LeafCmd::Solve { tol, n, out }) => {
            let b = solve_b(DIAGONAL, *tol)?;
            Report::text(leaf_lines(b, true, *n, cfg.seed)?, out)
        }
        Command::Leaf(LeafCmd::Profile { b, n, out }) => Report::text(leaf_lines(*b, false, *n, cfg.seed)?, out),
        Command::Gamma(GammaCmd::Build { b, grid, eps, out }) => {
            let b = match b {
                Some(b) => *b,
                None => solve_b(DIAGONAL, DEFAULT_TOL)?,
            };
            let build = build_gamma(b, *grid, *eps)?;
            let mut lines =
                vec!["gamma v1".to_string(), format!("b {}", gamma_zeta_core::numfmt::g17(b)), format!("grid {grid}")];
            lines.extend(build.raw_counts.iter().map(|c| format!("raw {} x{} {}", c.leaf, c.plane, c.count)));
            lines.push(format!("loops {}", build.curves.len()));
            lines.extend(graph_summary(&build.graph));
            Report::graph(lines, &build.graph, out)
        }
        Command::Gamma(GammaCmd::Octant { out }) => {
            let (g, faces) = octant_graph();
            let mut lines = vec!["gamma v1".to_string(), format!("faces {}", faces.len())];
            lines.extend(graph_summary(&g));
            Report::graph(lines, &g, out)
        }
        Command::Zeta(a) => {
            let g = load_graph(&a.input)?;
            let lines = match a.mode {
                ZetaMode::Series => {
                    let s = zeta_series(&g, a.max_length)?;
                    let counts: Vec<String> = s.counts.iter().map(i128::to_string).collect();
                    vec![format!("counts {} {}", a.max_length, counts.join(" ")), format_series(&s)]
                }
                ZetaMode::Det => vec![format_poly(&zeta_reciprocal(&g)?.poly)],
                ZetaMode::Poles => format_poles(&zeta_poles(&zeta_reciprocal(&g)?, a.tol)?),
            };
            Report::text(lines, &a.out)
        }
        Command::Delta(DeltaCmd::Apply { input, plane, angle, eps, out }) => {
            let g = load_graph(input)?;
            let angle: u32 = angle.parse().expect("restricted by the parser");
            let spec = DeltaSpec::new(*plane as usize + 1, angle, *eps)?;
            let (h, rep) = apply_delta(&g, &spec)?;
            let mut lines = vec![
                "delta v1".to_string(),
                format!("plane x{} angle {angle}", spec.plane),
                format!("cut_points {}", rep.cut_points),
                format!("matched {}", rep.matched),
                format!("max_mismatch {:e}", rep.max_mismatch),
            ];
            lines.extend(graph_summary(&h));
            Report::graph(lines, &h, out)
        }
        Command::Delta(DeltaCmd::Check { a, b, out }) => {
            let r = check_zeta_invariance(&load_graph(a)?, &load_graph(b)?)?;
            Report::text(r.lines(), out)
        }
        Command::Holonomy(HolonomyCmd::Classify { input, max_length, out }) => {
            let classes = enumerate_cycles(&load_graph(input)?, *max_length)?;
            let (ferm, bos) = classify_paths(&classes);
            let mut lines = format_cycle_report(&classes);
            lines.push(format!("fermionic {}", ferm.len()));
            lines.push(format!("bosonic {}", bos.len()));
            Report::text(lines, out)
        }
        Command::Holonomy(HolonomyCmd::Sphere { loops: LoopFamily::Octant, out }) => {
            Report::text(format_transport_report(&octant_holonomies()?)?, out)
        }
        Command::Holonomy(HolonomyCmd::Duality { input, tol, out }) => {
            let g = load_graph(input)?;
            Report::text(duality_report(&g, &octant_holonomies()?, *tol)?.lines(), out)
        }
        Command::Strata(StrataCmd::Cohomology { input, ring, degree, out }) => {
            let sc = parse_strata(&read(input)?)?;
            let ring = Ring::from(*ring);
            let degrees: Vec<usize> = match degree {
                Some(k) => vec![*k],
                None => (0..=sc.top()).collect(),
            };
            let mut lines = Vec::new();
            for s in &sc.strata {
                for &k in degrees.iter().filter(|&&k| k <= s.top()) {
                    lines.push(format!("stratum {} H{k} {}", s.name, cohomology_stratum(s, k, ring)?));
                }
            }
            for &k in &degrees {
                lines.push(format!("glued H{k} {}", cohomology_glued(&sc, k, ring)?));
            }
            Report::text(lines, out)
        }
        Command::Strata(StrataCmd::Twisted { input, ring, out }) => {
            let sc = parse_strata(&read(input)?)?;
            let lines = (0..=sc.top())
                .map(|k| Ok(format!("twisted H{k} {}", twisted_cohomology(&sc, k, Ring::from(*ring))?)))
                .collect::<Outcome<Vec<_>>>()?;
            Report::text(lines, out)
        }
        Command::Strata(StrataCmd::Invariant { input, degree, out }) => {
            let sc = parse_strata(&read(input)?)?;
            Report::text(vec![format!("invariant H{degree} {}", invariant_classes(&sc, *degree)?)], out)
        }
    })
}

/// Parse `args` (program name first), run, and return the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = execute(&cfg).and_then(|rep| {
        let mut text = format!("gamma-zeta-lab {VERSION} seed={}\n", cfg.seed);
        for l in &rep.lines {
            text.push_str(l);
            text.push('\n');
        }
        match (&rep.out, &rep.artifact) {
            (Some(path), Some(artifact)) => {
                write(path, artifact)?;
                Ok(text)
            }
            (Some(path), None) => write(path, &text).map(|_| String::new()),
            (None, _) => Ok(text),
        }
    });
    match result {
        Ok(text) => match stdout.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "IoError: {e}");
                EXIT_DOMAIN
            }
        },
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "{}: {e}", e.name());
            EXIT_DOMAIN
        }
        Err(Failure::Io(path, e)) => {
            let _ = writeln!(stderr, "IoError: {}: {e}", path.display());
            EXIT_DOMAIN
        }
    }
}
