use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kflat_core::deform::{
    check_semigroup_lemma, cn_central_fiber_torsion, cn_chow_vanishing, cn_is_flat, cn_is_kflat, cn_refute_kflat,
    cn_smoothing, cn_smoothing_span_rank, format_cn, parse_cn, parse_plane, plane_classify, monomial_cflat_nonglobal_dim,
    MonomialCurve, NumericalSemigroup, PlaneCurveDeformation, PlaneFlags, RefuteOptions,
};
use kflat_core::{Ring, Scalar};
use serde_json::Value;

use crate::input::{laurent, read_file, scalars, CliError, CliResult, Env};
use crate::report::{yes_no, Report};
use crate::CheckCnArgs;

fn plane_flags(r: &mut Report, flags: &PlaneFlags) {
    let glob = flags.globalizes.map_or("unknown", yes_no);
    r.line(format!("flat: {}; globalizes: {glob}; C-flat: {}", yes_no(flags.flat), yes_no(flags.cflat)))
        .set("flat", flags.flat)
        .set("globalizes", flags.globalizes.map_or(Value::Null, Value::Bool))
        .set("cflat", flags.cflat)
        .flag("psi regular", "psi_regular", flags.psi_regular);
    match &flags.diagnostic {
        Some(d) => r.field("note", "note", d.clone()),
        None => r.set("note", Value::Null),
    };
    r.verdict(flags.cflat);
}

pub fn check_plane(env: &Env, text: &str) -> CliResult<Report> {
    let ring = env.ring(&[text], &["u", "v"])?;
    if ring.nvars() != 2 {
        return Err(CliError::Usage(format!("plane data needs exactly two variables, found {}", ring.vars().join(","))));
    }
    let d = parse_plane(text, &ring).map_err(|err| CliError::Input { flag: "--def".into(), source: text.into(), err })?;
    let mut r = Report::new("check-plane");
    r.field("ring", "ring", ring.to_string());
    match d.monomial_curve() {
        Some(c) => r.field("curve", "curve", format!("monomial ({}, {})", c.a(), c.c())),
        None => r.field("curve", "curve", d.f().to_string()),
    };
    plane_flags(&mut r, &plane_classify(&d)?);
    Ok(r)
}

pub fn check_monomial(env: &Env, a: u32, c: u32, psi: &str, phi: &str) -> CliResult<Report> {
    let curve = MonomialCurve::new(a, c)?;
    let plane = Ring::new(env.field, &["u", "v"])?;
    let tring = Ring::new(env.field, &["t"])?;
    let psi_t = laurent(&tring, "t", "--psi", psi)?;
    let phi_t = laurent(&tring, "t", "--phi", phi)?;
    let d = PlaneCurveDeformation::monomial(curve, &plane, &psi_t, &phi_t)?;
    let e = curve.semigroup();
    let mut r = Report::new("check-monomial");
    r.field("curve", "curve", d.f().to_string())
        .field("frobenius number", "frobenius", e.frobenius())
        .field("psi", "psi", d.psi().to_string())
        .field("phi", "phi", d.phi().to_string());
    plane_flags(&mut r, &plane_classify(&d)?);
    Ok(r)
}

fn with_n_line(text: &str, n: Option<usize>) -> CliResult<String> {
    let declared = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find_map(|l| l.strip_prefix("n ").map(|v| v.trim().to_string()));
    match (n, declared) {
        (Some(n), None) => Ok(format!("n {n}\n{text}")),
        (Some(n), Some(d)) if d != n.to_string() => {
            Err(CliError::Usage(format!("--n {n} disagrees with `n {d}` in the file")))
        }
        _ => Ok(text.to_string()),
    }
}

pub fn check_cn(env: &Env, a: &CheckCnArgs) -> CliResult<Report> {
    let text = with_n_line(&read_file(&a.def)?, a.n)?;
    let d = parse_cn(&text, env.field)
        .map_err(|err| CliError::Input { flag: a.def.display().to_string(), source: text.clone(), err })?;
    let kflat = cn_is_kflat(&d);
    let flat = cn_is_flat(&d)?;
    let mut r = Report::new("check-cn");
    r.line(format!("K-flat: {}; flat: {}", yes_no(kflat), yes_no(flat)))
        .set("kflat", kflat)
        .set("flat", flat)
        .field("n", "n", d.n())
        .field("m", "m", d.m())
        .field("max pole order", "max_pole_order", d.max_pole_order());
    if d.n() >= 3 {
        r.flag("chow equations vanish", "chow_vanishing", cn_chow_vanishing(&d)?);
    } else {
        r.set("chow_vanishing", Value::Null);
    }
    if a.refute {
        let opts = RefuteOptions { plain_draws: a.draws, scaled_draws: a.draws, seed: env.seed, ..Default::default() };
        match cn_refute_kflat(&d, &opts)? {
            Some(w) => {
                r.field("refutation", "refutation", format!("pole {}", w.witness))
                    .list("lambda", "lambda", &w.lambda)
                    .list("abar", "abar", &w.abar)
                    .list("aprime", "aprime", &w.aprime);
            }
            None => {
                r.field("refutation", "refutation", format!("none in {} draws", 2 * a.draws));
            }
        }
    }
    if a.torsion {
        r.field("central fiber torsion", "torsion_length", cn_central_fiber_torsion(&d)?);
    }
    r.verdict(kflat);
    Ok(r)
}

pub fn cn_smooth(env: &Env, p: &str, lambda: Option<&str>) -> CliResult<Report> {
    let p = scalars(env.field, "--p", p)?;
    let lambda = match lambda {
        Some(l) => scalars(env.field, "--lambda", l)?,
        None => vec![env.field.one(); p.len()],
    };
    let s = cn_smoothing(&p, &lambda)?;
    let mut r = Report::new("cn-smooth");
    r.polys("equations", "equations", &s.equations);
    let data = format_cn(&s.first_order);
    r.line("first-order data:");
    for l in data.lines() {
        r.line(format!("  {l}"));
    }
    r.set("first_order", data.clone())
        .flag("first order flat", "first_order_flat", cn_is_flat(&s.first_order)?)
        .flag("first order K-flat", "first_order_kflat", cn_is_kflat(&s.first_order));
    Ok(r)
}

pub fn cn_smooth_rank(env: &Env, n: usize, samples: usize) -> CliResult<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(env.seed);
    let field = env.field;
    let mut draws: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::with_capacity(samples);
    for _ in 0..samples {
        let mut p: Vec<Scalar> = Vec::with_capacity(n);
        while p.len() < n {
            let s = field.from_i64(rng.gen_range(-50..=50));
            if !p.contains(&s) {
                p.push(s);
            }
        }
        let lambda = (0..n)
            .map(|_| loop {
                let s = field.from_i64(rng.gen_range(-50..=50));
                if !s.is_zero() {
                    break s;
                }
            })
            .collect();
        draws.push((p, lambda));
    }
    let rank = cn_smoothing_span_rank(&draws, n)?;
    let mut r = Report::new("cn-smooth");
    r.field("n", "n", n)
        .field("samples", "samples", samples)
        .field("rank", "rank", rank.raw)
        .field("rank modulo translations", "rank_modulo_translations", rank.modulo_translations)
        .field("ordered pairs", "ordered_pairs", n * (n - 1));
    Ok(r)
}

pub fn semigroup(a: u32, c: u32) -> CliResult<Report> {
    let e = NumericalSemigroup::new(a, c)?;
    let gaps = e.gaps();
    let lemma = check_semigroup_lemma(a, c)?;
    let mut r = Report::new("semigroup");
    r.list("generators", "generators", &[a, c])
        .field("frobenius number", "frobenius", e.frobenius())
        .list("gaps", "gaps", &gaps)
        .field("genus", "genus", gaps.len())
        .field("C-flat non-globalizing dimension", "cflat_nonglobal_dim", monomial_cflat_nonglobal_dim(a, c)?)
        .flag("symmetry lemma", "lemma", lemma.passed());
    if let Some((part, m)) = lemma.counterexample {
        r.field("counterexample", "counterexample", format!("part {part:?}, m = {m}"));
    }
    r.verdict(lemma.passed());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_line() {
        assert_eq!(with_n_line("1 2: x2^-1\n", Some(3)).unwrap(), "n 3\n1 2: x2^-1\n");
        assert!(with_n_line("n 4\n", Some(3)).is_err());
        assert_eq!(with_n_line("# c\nn 3\n", Some(3)).unwrap(), "# c\nn 3\n");
    }

}
