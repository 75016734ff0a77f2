//! `curves v1`: a header line, then per curve `curve <leaf> x<plane>`
//! followed by `pt <x> <y> <z>` lines.

use super::contour::EmbeddedCurve;
use crate::error::{Error, Result};
use crate::numfmt::g17;

pub const CURVES_HEADER: &str = "curves v1";

pub fn format_curves(curves: &[EmbeddedCurve]) -> String {
    let mut out = String::from(CURVES_HEADER);
    out.push('\n');
    for c in curves {
        out.push_str(&format!("curve {} x{}\n", c.leaf, c.plane));
        for p in &c.points {
            out.push_str(&format!("pt {} {} {}\n", g17(p[0]), g17(p[1]), g17(p[2])));
        }
    }
    out
}

pub fn parse_curves(text: &str) -> Result<Vec<EmbeddedCurve>> {
    let err = |line: usize, msg: &str| Error::ParseError { line, msg: msg.to_string() };
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, CURVES_HEADER)) => {}
        Some((n, _)) => return Err(err(n, "expected `curves v1` header")),
        None => return Err(err(1, "empty input")),
    }
    let mut out: Vec<EmbeddedCurve> = Vec::new();
    for (n, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["curve", leaf, plane] => {
                let plane = plane
                    .strip_prefix('x')
                    .and_then(|p| p.parse::<usize>().ok())
                    .filter(|p| (1..=3).contains(p))
                    .ok_or_else(|| err(n, "plane must be x1, x2 or x3"))?;
                out.push(EmbeddedCurve { plane, leaf: leaf.to_string(), points: Vec::new(), params: Vec::new() });
            }
            ["pt", x, y, z] => {
                let c = out.last_mut().ok_or_else(|| err(n, "`pt` before any `curve`"))?;
                let mut p = [0.0; 3];
                for (slot, t) in p.iter_mut().zip([x, y, z]) {
                    *slot = t.parse().map_err(|_| err(n, "bad coordinate"))?;
                }
                c.points.push(p);
            }
            _ => return Err(err(n, "unknown record")),
        }
    }
    Ok(out)
}
