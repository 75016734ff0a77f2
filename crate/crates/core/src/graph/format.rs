//! `gamma-graph v1` text format.
//!
//! ```text
//! gamma-graph v1
//! vertex <id> [<x> <y> <z>]
//! edge <id> <vid> <vid> [poly <x> <y> <z> ; <x> <y> <z> ; ...]
//! ```
//!
//! `#` starts a comment line; blank lines are ignored.

use std::fmt::Write as _;

use super::Multigraph;
use crate::error::{Error, Result};
use crate::geom::Point3;
use crate::numfmt::g17;

pub const HEADER: &str = "gamma-graph v1";

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::ParseError { line, msg: msg.into() }
}

fn parse_f64(tok: &str, line: usize) -> Result<f64> {
    let v: f64 = tok.parse().map_err(|_| perr(line, format!("bad number `{tok}`")))?;
    if !v.is_finite() {
        return Err(perr(line, format!("non-finite number `{tok}`")));
    }
    Ok(v)
}

fn parse_point(toks: &[&str], line: usize) -> Result<Point3> {
    if toks.len() != 3 {
        return Err(perr(line, "expected three coordinates"));
    }
    Ok([parse_f64(toks[0], line)?, parse_f64(toks[1], line)?, parse_f64(toks[2], line)?])
}

pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let mut g = Multigraph::new();
    let mut seen_header = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if !seen_header {
            if trimmed != HEADER {
                return Err(perr(line, format!("expected header `{HEADER}`")));
            }
            seen_header = true;
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        match toks[0] {
            "vertex" => {
                let coords = match toks.len() {
                    2 => None,
                    5 => Some(parse_point(&toks[2..5], line)?),
                    _ => return Err(perr(line, "vertex takes an id and optional x y z")),
                };
                g.add_vertex(toks[1], coords).map_err(|e| match e {
                    Error::InvalidArgument(m) => perr(line, m),
                    other => other,
                })?;
            }
            "edge" => {
                if toks.len() < 4 {
                    return Err(perr(line, "edge takes an id and two vertex ids"));
                }
                let polyline = if toks.len() > 4 {
                    if toks[4] != "poly" {
                        return Err(perr(line, format!("unexpected token `{}`", toks[4])));
                    }
                    let mut pts = Vec::new();
                    for chunk in toks[5..].split(|t| *t == ";") {
                        pts.push(parse_point(chunk, line)?);
                    }
                    Some(pts)
                } else {
                    None
                };
                g.add_edge(toks[1], toks[2], toks[3], polyline).map_err(|e| match e {
                    Error::InvalidArgument(m) => perr(line, m),
                    other => other,
                })?;
            }
            other => return Err(perr(line, format!("unknown record `{other}`"))),
        }
    }
    if !seen_header {
        return Err(perr(1, format!("missing header `{HEADER}`")));
    }
    Ok(g)
}

fn write_point(out: &mut String, p: &Point3) {
    let _ = write!(out, "{} {} {}", g17(p[0]), g17(p[1]), g17(p[2]));
}

pub fn serialize_graph(g: &Multigraph) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for v in g.vertices() {
        out.push_str("vertex ");
        out.push_str(&v.id);
        if let Some(c) = &v.coords {
            out.push(' ');
            write_point(&mut out, c);
        }
        out.push('\n');
    }
    for e in g.edges() {
        let a = &g.vertices()[e.endpoints.0].id;
        let b = &g.vertices()[e.endpoints.1].id;
        let _ = write!(out, "edge {} {} {}", e.id, a, b);
        if let Some(poly) = &e.polyline {
            out.push_str(" poly");
            for (k, p) in poly.iter().enumerate() {
                out.push_str(if k == 0 { " " } else { " ; " });
                write_point(&mut out, p);
            }
        }
        out.push('\n');
    }
    out
}
