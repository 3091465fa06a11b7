use kflat_core::groebner::{
    elementwise_power, intersect_all, pure_part, pure_part_by, quotient_ideal, saturate_ideal, saturate_maximal,
    torsion_length, PowerScalars,
};
use kflat_core::Ideal;

use crate::input::{ideal, poly, CliResult, Env};
use crate::report::{basis, Report};

fn header(r: &mut Report, env: &Env, ring: &kflat_core::Ring) {
    r.field("ring", "ring", ring.to_string()).field("order", "order", env.order.to_string());
}

fn ideal_report(name: &'static str, env: &Env, result: &Ideal) -> Report {
    let mut r = Report::new(name);
    header(&mut r, env, result.ring());
    r.polys("basis", "basis", &basis(result, env.order));
    r
}

pub fn gb(env: &Env, src: &str) -> CliResult<Report> {
    let ring = env.ring(&[src], &["x"])?;
    Ok(ideal_report("gb", env, &ideal(&ring, "--ideal", src)?))
}

pub fn member(env: &Env, ideal_src: &str, poly_src: &str) -> CliResult<Report> {
    let ring = env.ring(&[ideal_src, poly_src], &["x"])?;
    let i = ideal(&ring, "--ideal", ideal_src)?;
    let p = poly(&ring, "--poly", poly_src)?;
    let yes = i.contains(&p)?;
    let mut r = Report::new("member");
    header(&mut r, env, &ring);
    r.field("normal form", "normal_form", i.normal_form(&p)?.to_string()).flag("member", "member", yes).verdict(yes);
    Ok(r)
}

pub fn intersect(env: &Env, srcs: &[String]) -> CliResult<Report> {
    let all: Vec<&str> = srcs.iter().map(String::as_str).collect();
    let ring = env.ring(&all, &["x"])?;
    let ideals = srcs.iter().map(|s| ideal(&ring, "--ideal", s)).collect::<CliResult<Vec<_>>>()?;
    Ok(ideal_report("intersect", env, &intersect_all(&ideals)?))
}

pub fn quotient(env: &Env, ideal_src: &str, by: &str) -> CliResult<Report> {
    let ring = env.ring(&[ideal_src, by], &["x"])?;
    let q = quotient_ideal(&ideal(&ring, "--ideal", ideal_src)?, &ideal(&ring, "--by", by)?)?;
    Ok(ideal_report("quotient", env, &q))
}

pub fn saturate(env: &Env, ideal_src: &str, by: Option<&str>) -> CliResult<Report> {
    let ring = env.ring(&[ideal_src, by.unwrap_or("")], &["x"])?;
    let i = ideal(&ring, "--ideal", ideal_src)?;
    let s = match by {
        Some(b) => saturate_ideal(&i, &ideal(&ring, "--by", b)?)?,
        None => saturate_maximal(&i)?,
    };
    Ok(ideal_report("saturate", env, &s))
}

pub fn frob_power(env: &Env, src: &str, m: u32, scalars: PowerScalars) -> CliResult<Report> {
    let ring = env.ring(&[src], &["x"])?;
    let p = elementwise_power(&ideal(&ring, "--ideal", src)?, m, scalars)?;
    let mut r = ideal_report("frob-power", env, &p);
    r.set("m", m);
    Ok(r)
}

pub fn pure(env: &Env, src: &str, by: Option<&str>) -> CliResult<Report> {
    let ring = env.ring(&[src, by.unwrap_or("")], &["x"])?;
    let i = ideal(&ring, "--ideal", src)?;
    let p = match by {
        Some(b) => pure_part_by(&i, &poly(&ring, "--by", b)?)?,
        None => pure_part(&i)?,
    };
    Ok(ideal_report("pure", env, &p))
}

pub fn torsion(env: &Env, src: &str) -> CliResult<Report> {
    let ring = env.ring(&[src], &["x"])?;
    let i = ideal(&ring, "--ideal", src)?;
    let len = torsion_length(&i)?;
    let mut r = Report::new("torsion");
    header(&mut r, env, &ring);
    r.polys("pure part", "pure_part", &basis(&pure_part(&i)?, env.order)).field("torsion length", "torsion_length", len);
    Ok(r)
}
