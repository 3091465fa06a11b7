use kflat_core::chow::{
    axes_chow_monomial, axes_cycle, axes_ring, chow_hull as hull, chow_ideal_axes, chow_ideal_hypersurface_pair,
    find_weight_subset, sample_chow_ideal, CycleSpec, PairForm, SampleOptions,
};
use kflat_core::deform::{cartier_principal_test, example_ideal_generators, ExampleKind};
use kflat_core::dsupp::{dsupp as dsupp_plain, dsupp_dual, dsupp_torsion, SquareMatrix};
use kflat_core::groebner::{pure_part, PowerScalars};
use kflat_core::poly::monomial::exponents_of_degree;
use kflat_core::{Dual, LaurentPoly, Ring};
use serde_json::Value;

use crate::input::{ideal, laurent, poly, poly_list, scalars, CliError, CliResult, Env};
use crate::report::{basis, yes_no, Report};
use crate::{Example, SampleArgs};

fn matrix(ring: &Ring, var: &str, flag: &str, src: &str) -> CliResult<SquareMatrix<LaurentPoly>> {
    let rows = src
        .split(';')
        .map(|row| row.split(',').map(|e| laurent(ring, var, flag, e)).collect::<CliResult<Vec<_>>>())
        .collect::<CliResult<Vec<_>>>()?;
    Ok(SquareMatrix::new(rows)?)
}

pub fn dsupp(env: &Env, src: &str, eps: Option<&str>, v: &str) -> CliResult<Report> {
    let u = env.laurent_var("u");
    let ring = env.ring(&[src, eps.unwrap_or(""), u], &[u])?;
    let body = matrix(&ring, u, "--matrix", src)?;
    let res = match eps {
        None => dsupp_plain(&body, v)?,
        Some(e) => {
            let eps = matrix(&ring, u, "--eps", e)?;
            if eps.size() != body.size() {
                return Err(CliError::Usage(format!("--eps is {0}x{0}, --matrix is {1}x{1}", eps.size(), body.size())));
            }
            let rows = (0..body.size())
                .map(|i| (0..body.size()).map(|j| Dual::new(body.get(i, j).clone(), eps.get(i, j).clone())).collect())
                .collect();
            dsupp_dual(&SquareMatrix::new(rows)?, v)?
        }
    };
    let mut r = Report::new("dsupp");
    r.field("equation", "equation", res.equation.body.to_string())
        .field("eps part", "eps_part", res.equation.eps.to_string())
        .flag("cartier", "cartier", res.is_cartier);
    match &res.polar_witness {
        Some(w) => r.field("polar term", "polar_term", w.to_string()),
        None => r.set("polar_term", Value::Null),
    };
    Ok(r)
}

pub fn dsupp_modules(env: &Env, src: &str, var: &str) -> CliResult<Report> {
    let ring = env.ring(&[src, var], &[var])?;
    let d = dsupp_torsion(&poly_list(&ring, "--modules", src)?, var)?;
    let mut r = Report::new("dsupp");
    r.field("equation", "equation", d.to_string());
    Ok(r)
}

pub fn cartier(env: &Env, f: &str, g: &str, y: &str, r_exp: u32) -> CliResult<Report> {
    let ring = env.ring(&[f, g, y], &[y])?;
    let rep = cartier_principal_test(&poly(&ring, "--f", f)?, &poly(&ring, "--g", g)?, y, r_exp)?;
    let mut r = Report::new("cartier");
    let yr = if r_exp == 1 { y.to_string() } else { format!("{y}^{r_exp}") };
    r.flag(&format!("g in (f, {yr})"), "member", rep.member)
        .flag(&format!("{y} regular mod f"), "y_regular_mod_f", rep.y_regular_mod_f)
        .flag(&format!("{y} regular mod g"), "y_regular_mod_g", rep.y_regular_mod_g);
    match rep.principal() {
        Some(p) => {
            r.field("principal", "principal", yes_no(p)).verdict(p);
        }
        None => {
            r.field("principal", "principal", "undecided").verdict(false);
        }
    }
    Ok(r)
}

pub fn cartier_example(
    env: &Env,
    kind: Example,
    r_exp: u32,
    q: &str,
    f: Option<&str>,
    g: Option<&str>,
) -> CliResult<Report> {
    let kind = match kind {
        Example::Smooth => ExampleKind::SmoothR { r: r_exp, q: scalars(env.field, "--q", q)? },
        Example::Cusp => ExampleKind::Cusp,
        Example::Jfg => {
            let (Some(f), Some(g)) = (f, g) else {
                return Err(CliError::Usage("--example jfg needs --f and --g".into()));
            };
            let ring = env.ring(&[f, g], &["x"])?;
            ExampleKind::Jfg { f: poly(&ring, "--f", f)?, g: poly(&ring, "--g", g)? }
        }
    };
    let ex = example_ideal_generators(&kind, env.field)?;
    let mut r = Report::new("cartier");
    r.field("ring", "ring", ex.ideal.ring().to_string())
        .polys("ideal", "ideal", ex.ideal.gens())
        .polys("central fiber", "central_fiber", &basis(&ex.central_fiber, env.order))
        .field("torsion length", "torsion_length", ex.torsion)
        .field("expected torsion length", "expected_torsion_length", ex.expected_torsion);
    Ok(r)
}

pub fn chow_pair(env: &Env, f: &str, z: &str, homogeneous: bool) -> CliResult<Report> {
    let ring = env.ring(&[f, z], &[z])?;
    let form = if homogeneous { PairForm::Homogeneous } else { PairForm::Local };
    let i = chow_ideal_hypersurface_pair(&poly(&ring, "--f", f)?, z, form)?;
    let mut r = Report::new("chow-pair");
    r.field("ring", "ring", ring.to_string()).polys("basis", "basis", &basis(&i, env.order));
    Ok(r)
}

pub fn chow_axes(env: &Env, n: usize) -> CliResult<Report> {
    let i = chow_ideal_axes(n, env.field)?;
    let mut r = Report::new("chow-axes");
    r.field("ring", "ring", i.ring().to_string()).polys("basis", "basis", &basis(&i, env.order));
    Ok(r)
}

fn cycle(env: &Env, specs: &[String]) -> CliResult<CycleSpec> {
    let mut parts = Vec::new();
    for s in specs {
        let (m, gens) = s
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("--component `{s}`: expected `m:g1,g2,…`")))?;
        let m: u32 = m.trim().parse().map_err(|_| CliError::Usage(format!("--component `{s}`: bad multiplicity")))?;
        parts.push((m, gens));
    }
    let sources: Vec<&str> = parts.iter().map(|(_, g)| *g).collect();
    let ring = env.ring(&sources, &["x"])?;
    let comps = parts.iter().map(|(m, g)| Ok((ideal(&ring, "--component", g)?, *m))).collect::<CliResult<Vec<_>>>()?;
    Ok(CycleSpec::new(comps)?)
}

pub fn chow_hull(env: &Env, specs: &[String], scalars: PowerScalars) -> CliResult<Report> {
    let c = cycle(env, specs)?;
    let h = hull(&c, scalars)?;
    let mut r = Report::new("chow-hull");
    r.field("ring", "ring", c.ring().to_string()).polys("basis", "basis", &basis(&h, env.order));
    Ok(r)
}

pub fn chow_sample(env: &Env, a: &SampleArgs) -> CliResult<Report> {
    let c = match a.axes {
        Some(n) => axes_cycle(n, env.field)?,
        None => cycle(env, &a.component)?,
    };
    let opts = SampleOptions { trials: a.trials, seed: env.seed, bound: a.bound, batch: a.batch, ..Default::default() };
    let rep = sample_chow_ideal(&c, &opts)?;
    let mut r = Report::new("chow-sample");
    r.field("ring", "ring", c.ring().to_string())
        .polys("basis", "basis", &basis(&rep.ideal, env.order))
        .flag("stabilized", "stabilized", rep.stabilized)
        .field("draws", "draws", rep.draws)
        .field("rejected", "rejected", rep.rejected);
    if a.compare {
        // axes: the sampled ideal itself; components: its pure part against the hull
        let same = match a.axes {
            Some(n) => rep.ideal.ideal_equal(&chow_ideal_axes(n, env.field)?)?,
            None => pure_part(&rep.ideal)?.ideal_equal(&hull(&c, PowerScalars::AlgebraicClosure)?)?,
        };
        r.flag("matches closed form", "matches_closed_form", same).verdict(same);
    }
    Ok(r)
}

fn monomial(w: &[u32]) -> String {
    let ring = axes_ring(w.len(), kflat_core::Field::Rationals).expect("axes ring");
    ring.monomial(w.to_vec(), kflat_core::Field::Rationals.one()).to_string()
}

pub fn subset_lemma(n: usize, w: Option<&[u32]>) -> CliResult<Report> {
    let mut r = Report::new("subset-lemma");
    if let Some(w) = w {
        if w.len() != n {
            return Err(CliError::Usage(format!("--w has {} entries, expected {n}", w.len())));
        }
        let found = find_weight_subset(w)?;
        r.field("monomial", "monomial", monomial(w));
        let one_based: Vec<usize> = found.iter().flatten().map(|i| i + 1).collect();
        r.list("subset", "subset", &one_based);
        r.verdict(found.is_some());
        return Ok(r);
    }
    let all = exponents_of_degree(n, n as u32);
    let mut found = 0;
    let mut mismatches = Vec::new();
    for w in &all {
        let ok = find_weight_subset(w)?.is_some();
        found += usize::from(ok);
        if ok != axes_chow_monomial(w) {
            mismatches.push(monomial(w));
        }
    }
    r.field("monomials", "monomials", all.len())
        .field("with subset", "with_subset", found)
        .field("exceptional", "exceptional", all.len() - found)
        .list("mismatches", "mismatches", &mismatches)
        .flag("agrees with exceptional set", "agrees", mismatches.is_empty())
        .verdict(mismatches.is_empty());
    Ok(r)
}
