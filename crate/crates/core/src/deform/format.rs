//! Text serialization of deformation data.
//!
//! Axes data:
//!
//! ```text
//! # comment
//! n 3
//! m 3
//! 1 2: x2^-1 + 5
//! 2 1: x1^-1
//! ```
//!
//! The `m` line is optional (default `m = n`); each entry line holds `φ_ij` as a Laurent
//! polynomial in `x_j`. Plane data is the triple `f; ψ; φ` in a ring `k[u, v]`, with `ψ, φ`
//! Laurent in `u`.

use std::fmt::Write;

use super::cn::CnDeformation;
use super::plane::{CurveSectionRep, PlaneCurveDeformation};
use crate::error::{Error, Result};
use crate::expr::{parse_laurent, parse_poly, shift};
use crate::poly::{Field, Ring};

pub fn format_cn(d: &CnDeformation) -> String {
    let mut out = format!("n {}\n", d.n());
    if d.m() != d.n() {
        writeln!(out, "m {}", d.m()).expect("write to string");
    }
    for ((i, j), phi) in d.entries() {
        writeln!(out, "{i} {j}: {phi}").expect("write to string");
    }
    out
}

fn line_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

/// Parses [`format_cn`] output; offsets in errors refer to the whole text.
pub fn parse_cn(text: &str, field: Field) -> Result<CnDeformation> {
    let mut n = None;
    let mut m = None;
    let mut entries = Vec::new();
    let mut start = 0;
    for raw in text.split_inclusive('\n') {
        let line_start = start;
        start += raw.len();
        let content = raw.split('#').next().unwrap_or("");
        let lead = content.len() - content.trim_start().len();
        let line = content.trim();
        if line.is_empty() {
            continue;
        }
        let at = line_start + lead;
        if let Some((idx, expr)) = line.split_once(':') {
            let mut it = idx.split_whitespace();
            let (Some(i), Some(j), None) = (it.next(), it.next(), it.next()) else {
                return Err(line_err(at, "expected `i j: <expression>`"));
            };
            let (Ok(i), Ok(j)) = (i.parse::<usize>(), j.parse::<usize>()) else {
                return Err(line_err(at, "indices must be positive integers"));
            };
            let var = format!("x{j}");
            let ring = Ring::new(field, &[var.as_str()])?;
            let expr_at = at + idx.len() + 1;
            let phi = parse_laurent(expr, &ring, &var).map_err(|e| shift(e, expr_at))?;
            entries.push((at, (i, j), phi));
            continue;
        }
        let mut it = line.split_whitespace();
        let key = it.next().unwrap_or("");
        let value = it.next().and_then(|v| v.parse::<usize>().ok());
        match (key, value, it.next()) {
            ("n", Some(v), None) => n = Some(v),
            ("m", Some(v), None) => m = Some(v),
            _ => return Err(line_err(at, format!("unrecognized line `{line}`"))),
        }
    }
    let n = n.ok_or_else(|| line_err(0, "missing `n` line"))?;
    let mut d = CnDeformation::zero(n, m.unwrap_or(n), field)?;
    for (at, (i, j), phi) in entries {
        d = d.with(i, j, phi).map_err(|e| line_err(at, e.to_string()))?;
    }
    Ok(d)
}

pub fn format_plane(d: &PlaneCurveDeformation) -> String {
    format!("{}; {}; {}", d.f(), d.psi(), d.phi())
}

/// Parses `f; ψ; φ` in a two-variable ring `k[u, v]`.
pub fn parse_plane(text: &str, ring: &Ring) -> Result<PlaneCurveDeformation> {
    let parts: Vec<&str> = text.split(';').collect();
    if parts.len() != 3 {
        return Err(line_err(0, format!("expected `f; psi; phi`, found {} parts", parts.len())));
    }
    if ring.nvars() != 2 {
        return Err(Error::Precondition(format!("plane data needs two variables, got {ring}")));
    }
    let u = ring.vars()[0].clone();
    let f = parse_poly(parts[0], ring)?;
    let at1 = parts[0].len() + 1;
    let at2 = at1 + parts[1].len() + 1;
    let psi = parse_laurent(parts[1], ring, &u).map_err(|e| shift(e, at1))?;
    let phi = parse_laurent(parts[2], ring, &u).map_err(|e| shift(e, at2))?;
    PlaneCurveDeformation::new(CurveSectionRep::from_laurent(&f, &psi)?, CurveSectionRep::from_laurent(&f, &phi)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cn_round_trip() {
        let text = "# symmetric simple poles\nn 3\n1 2: x2^-1 + 5\n2 1: x1^-1\n";
        let d = parse_cn(text, Field::Rationals).unwrap();
        assert_eq!(d.residue(1, 2), Field::Rationals.one());
        let printed = format_cn(&d);
        assert_eq!(printed, "n 3\n1 2: 5 + x2^-1\n2 1: x1^-1\n");
        assert_eq!(parse_cn(&printed, Field::Rationals).unwrap(), d);
        assert!(matches!(parse_cn("n 3\n1 2: x1^-1\n", Field::Rationals), Err(Error::Parse { offset: 9, .. })));
        assert!(parse_cn("n 3\n1 1: 1\n", Field::Rationals).is_err());
    }

    #[test]
    fn plane_round_trip() {
        let ring = Ring::new(Field::Rationals, &["u", "v"]).unwrap();
        let d = parse_plane("v^2 - u^3; 0; v^3 u^-2 + u^-1", &ring).unwrap();
        let printed = format_plane(&d);
        assert_eq!(parse_plane(&printed, &ring).unwrap(), d);
        assert!(d.monomial_curve().is_some());
    }
}
