//! Turning flag values into rings, polynomials and ideals.

use std::fmt;
use std::path::Path;

use kflat_core::expr::{parse_laurent, parse_poly, parse_poly_list};
use kflat_core::{Error, Field, Ideal, LaurentPoly, MonomialOrder, Poly, Ring, Scalar};

/// Failure with enough context to point at the offending input.
#[derive(Debug)]
pub enum CliError {
    Input { flag: String, source: String, err: Error },
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Core(err)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input { flag, source, err } => {
                write!(f, "{flag}: {err}")?;
                if let Error::Parse { offset, .. } = err {
                    // caret under the offending byte of a single-line input
                    if !source.contains('\n') {
                        let col = source[..(*offset).min(source.len())].chars().count();
                        write!(f, "\n  {source}\n  {}^", " ".repeat(col))?;
                    }
                }
                Ok(())
            }
            CliError::Core(err) => write!(f, "{err}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn at<T>(flag: &str, source: &str, r: kflat_core::Result<T>) -> CliResult<T> {
    r.map_err(|err| CliError::Input { flag: flag.to_string(), source: source.to_string(), err })
}

/// Global settings shared by every command.
pub struct Env {
    pub field: Field,
    pub vars: Option<Vec<String>>,
    pub laurent: Option<String>,
    pub order: MonomialOrder,
    pub seed: u64,
}

/// Identifiers in order of appearance, deduplicated.
fn identifiers(src: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut cur = String::new();
    for ch in src.chars().chain(std::iter::once(' ')) {
        if ch.is_alphanumeric() || ch == '_' {
            // digits before any letter belong to a numeric literal
            if !(cur.is_empty() && ch.is_ascii_digit()) {
                cur.push(ch);
            }
            continue;
        }
        if !cur.is_empty() && !out.contains(&cur) {
            out.push(cur.clone());
        }
        cur.clear();
    }
    out
}

/// Splits an identifier into its alphabetic stem and numeric suffix, so `x2 < x10`.
fn natural_key(s: &str) -> (String, u64, String) {
    let stem = s.trim_end_matches(|c: char| c.is_ascii_digit());
    let num = s[stem.len()..].parse().unwrap_or(0);
    (stem.to_string(), num, s.to_string())
}

impl Env {
    /// `--vars` if given, else the identifiers of `sources` in natural order, else `fallback`.
    pub fn ring(&self, sources: &[&str], fallback: &[&str]) -> CliResult<Ring> {
        let vars = match &self.vars {
            Some(v) => v.clone(),
            None => {
                let mut found: Vec<String> = Vec::new();
                for v in sources.iter().flat_map(|s| identifiers(s)).chain(self.laurent.clone()) {
                    if !found.contains(&v) {
                        found.push(v);
                    }
                }
                if found.is_empty() {
                    found = fallback.iter().map(|s| s.to_string()).collect();
                }
                found.sort_by_key(|v| natural_key(v));
                found
            }
        };
        Ok(Ring::new(self.field, &vars)?.with_order(self.order))
    }

    /// The Laurent variable, `default` when `--laurent` is absent.
    pub fn laurent_var<'a>(&'a self, default: &'a str) -> &'a str {
        self.laurent.as_deref().unwrap_or(default)
    }
}

pub fn poly(ring: &Ring, flag: &str, src: &str) -> CliResult<Poly> {
    at(flag, src, parse_poly(src, ring))
}

pub fn poly_list(ring: &Ring, flag: &str, src: &str) -> CliResult<Vec<Poly>> {
    at(flag, src, parse_poly_list(src, ring))
}

pub fn ideal(ring: &Ring, flag: &str, src: &str) -> CliResult<Ideal> {
    let gens = poly_list(ring, flag, src)?;
    Ok(Ideal::new(ring, gens)?)
}

pub fn laurent(ring: &Ring, var: &str, flag: &str, src: &str) -> CliResult<LaurentPoly> {
    at(flag, src, parse_laurent(src, ring, var))
}

/// Comma-separated field constants.
pub fn scalars(field: Field, flag: &str, src: &str) -> CliResult<Vec<Scalar>> {
    let ring = Ring::new(field, &[] as &[&str])?;
    poly_list(&ring, flag, src)?
        .into_iter()
        .map(|p| {
            p.as_constant()
                .ok_or_else(|| CliError::Usage(format!("{flag}: `{p}` is not a constant")))
        })
        .collect()
}

pub fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inferred_variables() {
        assert_eq!(identifiers("x10^2 + 3x2*y - x2"), ["x10", "x2", "y"]);
        let env = Env { field: Field::Rationals, vars: None, laurent: None, order: MonomialOrder::GrevLex, seed: 0 };
        let r = env.ring(&["x10 + y", "x2"], &["x"]).unwrap();
        assert_eq!(r.vars(), ["x2", "x10", "y"]);
        assert_eq!(env.ring(&["1"], &["x"]).unwrap().vars(), ["x"]);
    }
}
