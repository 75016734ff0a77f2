//! `zeta v1` text lines.

use super::poles::Pole;
use super::series::ZetaSeries;
use crate::error::{Error, Result};
use crate::numfmt::fixed;

pub fn format_poly(poly: &[i128]) -> String {
    let mut s = String::from("poly");
    for c in poly {
        s.push(' ');
        s.push_str(&c.to_string());
    }
    s
}

pub fn parse_poly(line: &str) -> Result<Vec<i128>> {
    let mut toks = line.split_whitespace();
    if toks.next() != Some("poly") {
        return Err(Error::ParseError { line: 1, msg: "expected `poly`".into() });
    }
    toks.map(|t| t.parse().map_err(|_| Error::ParseError { line: 1, msg: format!("bad coefficient `{t}`") })).collect()
}

pub fn format_series(s: &ZetaSeries) -> String {
    let mut out = format!("series {}", s.max_length);
    for c in &s.coeffs {
        out.push(' ');
        out.push_str(&c.to_string());
    }
    out
}

pub fn format_poles(poles: &[Pole]) -> Vec<String> {
    poles.iter().map(|p| format!("pole {} {} {}", fixed(p.root.re, 12), fixed(p.root.im, 12), p.multiplicity)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_line_round_trip() {
        let p = vec![1, 0, 0, -2, 0, 0, 1];
        assert_eq!(format_poly(&p), "poly 1 0 0 -2 0 0 1");
        assert_eq!(parse_poly(&format_poly(&p)).unwrap(), p);
    }
}
