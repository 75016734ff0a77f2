//! Plain-text `strata v1` format.
//!
//! ```text
//! strata v1
//! stratum <name>
//! cells <k> <count>
//! boundary <k>
//! row <i> <j> <value>
//! glue <name>.<k>.<cell> <name>.<k>.<cell>
//! sigma <i> <j>
//! twist <name> <k>
//! row <i> <j> <value>
//! ```
//!
//! `row` lines fill the most recent `boundary` or `twist` block; omitted
//! entries are zero, omitted twists are identities and an omitted `sigma`
//! is the identity permutation. `#` starts a comment.

use std::fmt::Write;

use super::complex::{identity_twists, CellRef, StratifiedComplex, StratumComplex};
use crate::error::{Error, Result};
use crate::exact::{identity, zeros, IMatrix};

pub const STRATA_HEADER: &str = "strata v1";

/// `(row, column, value)` of a sparse matrix entry.
type Entry = (usize, usize, i128);

struct RawStratum {
    name: String,
    cells: Vec<(usize, usize)>,
    boundaries: Vec<(usize, Vec<Entry>)>,
}

struct RawTwist {
    stratum: String,
    degree: usize,
    entries: Vec<Entry>,
    line: usize,
}

enum Block {
    None,
    Boundary,
    Twist,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::ParseError { line, msg: msg.into() }
}

fn num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    tok.ok_or_else(|| perr(line, format!("missing {what}")))?.parse().map_err(|_| perr(line, format!("bad {what}")))
}

fn parse_ref(tok: &str, line: usize) -> Result<(String, usize, usize)> {
    let parts: Vec<&str> = tok.split('.').collect();
    if parts.len() != 3 {
        return Err(perr(line, format!("cell reference `{tok}` must be <stratum>.<k>.<cell>")));
    }
    Ok((parts[0].to_string(), num(Some(parts[1]), line, "degree")?, num(Some(parts[2]), line, "cell")?))
}

pub fn parse_strata(text: &str) -> Result<StratifiedComplex> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()));
    match lines.find(|(_, l)| !l.is_empty()) {
        Some((_, l)) if l == STRATA_HEADER => {}
        Some((n, _)) => return Err(perr(n, format!("expected `{STRATA_HEADER}`"))),
        None => return Err(perr(1, "empty input")),
    }
    let mut strata: Vec<RawStratum> = Vec::new();
    let mut glue = Vec::new();
    let mut sigma_pairs = Vec::new();
    let mut twists: Vec<RawTwist> = Vec::new();
    let mut block = Block::None;
    for (n, l) in lines {
        if l.is_empty() {
            continue;
        }
        let mut tok = l.split_whitespace();
        let kw = tok.next().unwrap_or("");
        match kw {
            "stratum" => {
                let name = tok.next().ok_or_else(|| perr(n, "missing stratum name"))?;
                if strata.iter().any(|s| s.name == name) {
                    return Err(Error::DuplicateId(name.to_string()));
                }
                strata.push(RawStratum { name: name.to_string(), cells: Vec::new(), boundaries: Vec::new() });
                block = Block::None;
            }
            "cells" => {
                let s = strata.last_mut().ok_or_else(|| perr(n, "`cells` outside a stratum"))?;
                s.cells.push((num(tok.next(), n, "degree")?, num(tok.next(), n, "count")?));
                block = Block::None;
            }
            "boundary" => {
                let s = strata.last_mut().ok_or_else(|| perr(n, "`boundary` outside a stratum"))?;
                s.boundaries.push((num(tok.next(), n, "degree")?, Vec::new()));
                block = Block::Boundary;
            }
            "row" => {
                let entry = (num(tok.next(), n, "row")?, num(tok.next(), n, "column")?, num(tok.next(), n, "value")?);
                match block {
                    Block::Boundary => strata.last_mut().unwrap().boundaries.last_mut().unwrap().1.push(entry),
                    Block::Twist => twists.last_mut().unwrap().entries.push(entry),
                    Block::None => return Err(perr(n, "`row` outside a boundary or twist block")),
                }
            }
            "glue" => {
                let a = parse_ref(tok.next().ok_or_else(|| perr(n, "missing cell"))?, n)?;
                let b = parse_ref(tok.next().ok_or_else(|| perr(n, "missing cell"))?, n)?;
                glue.push((a, b));
                block = Block::None;
            }
            "sigma" => {
                sigma_pairs.push((num::<usize>(tok.next(), n, "index")?, num::<usize>(tok.next(), n, "index")?, n));
                block = Block::None;
            }
            "twist" => {
                let stratum = tok.next().ok_or_else(|| perr(n, "missing stratum name"))?.to_string();
                twists.push(RawTwist { stratum, degree: num(tok.next(), n, "degree")?, entries: Vec::new(), line: n });
                block = Block::Twist;
            }
            other => return Err(perr(n, format!("unknown record `{other}`"))),
        }
        if tok.next().is_some() {
            return Err(perr(n, "trailing tokens"));
        }
    }

    let mut built = Vec::new();
    for s in strata {
        let mut cells = vec![None; s.cells.len()];
        for &(k, c) in &s.cells {
            if k >= cells.len() || cells[k].replace(c).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "stratum `{}`: cell degrees must be 0..=top, once each",
                    s.name
                )));
            }
        }
        let cells: Vec<usize> = cells.into_iter().map(|c| c.unwrap()).collect();
        let mut bds = Vec::new();
        for (k, entries) in s.boundaries {
            if k == 0 || k >= cells.len() {
                return Err(Error::ShapeMismatch(format!("stratum `{}`: no boundary in degree {k}", s.name)));
            }
            bds.push((k, fill(zeros(cells[k - 1], cells[k]), &entries, &s.name)?));
        }
        built.push(StratumComplex::new(&s.name, cells, bds)?);
    }

    let index = |name: &str| {
        built
            .iter()
            .position(|s| s.name == name)
            .ok_or_else(|| Error::ReferenceError(format!("unknown stratum `{name}`")))
    };
    let cell = |(name, degree, cell): (String, usize, usize)| -> Result<CellRef> {
        Ok(CellRef { stratum: index(&name)?, degree, cell })
    };
    let gluing = glue.into_iter().map(|(a, b)| Ok((cell(a)?, cell(b)?))).collect::<Result<Vec<_>>>()?;

    let mut sigma: Vec<usize> = (0..built.len()).collect();
    for (i, j, n) in sigma_pairs {
        if i >= sigma.len() {
            return Err(perr(n, format!("sigma index {i} out of range")));
        }
        sigma[i] = j;
    }
    let mut tw = identity_twists(&built);
    for RawTwist { stratum: name, degree: k, entries, line: n } in twists {
        let i = index(&name)?;
        let size = built[i].count(k);
        if k > built[i].top() {
            return Err(perr(n, format!("stratum `{name}` has no cells in degree {k}")));
        }
        tw[i][k] = fill(zeros(size, size), &entries, &name)?;
    }
    let sc = StratifiedComplex::new(built, gluing)?;
    sc.with_twist(sigma, tw)
}

fn fill(mut m: IMatrix, entries: &[Entry], name: &str) -> Result<IMatrix> {
    for &(i, j, v) in entries {
        let slot = m
            .get_mut(i)
            .and_then(|r| r.get_mut(j))
            .ok_or_else(|| Error::ShapeMismatch(format!("stratum `{name}`: entry ({i}, {j}) out of range")))?;
        *slot = v;
    }
    Ok(m)
}

fn write_rows(out: &mut String, m: &IMatrix) {
    for (i, row) in m.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v != 0 {
                let _ = writeln!(out, "row {i} {j} {v}");
            }
        }
    }
}

pub fn serialize_strata(sc: &StratifiedComplex) -> String {
    let mut out = format!("{STRATA_HEADER}\n");
    for s in &sc.strata {
        let _ = writeln!(out, "stratum {}", s.name);
        for (k, c) in s.cells.iter().enumerate() {
            let _ = writeln!(out, "cells {k} {c}");
        }
        for k in 1..s.cells.len() {
            if s.boundary[k].iter().flatten().any(|&v| v != 0) {
                let _ = writeln!(out, "boundary {k}");
                write_rows(&mut out, &s.boundary[k]);
            }
        }
    }
    for (a, b) in &sc.gluing {
        let r = |c: &CellRef| format!("{}.{}.{}", sc.strata[c.stratum].name, c.degree, c.cell);
        let _ = writeln!(out, "glue {} {}", r(a), r(b));
    }
    for (i, &j) in sc.sigma.iter().enumerate() {
        if i != j {
            let _ = writeln!(out, "sigma {i} {j}");
        }
    }
    for (i, blocks) in sc.twists.iter().enumerate() {
        for (k, m) in blocks.iter().enumerate() {
            if *m != identity(m.len()) {
                let _ = writeln!(out, "twist {} {k}", sc.strata[i].name);
                write_rows(&mut out, m);
            }
        }
    }
    out
}
