//! `kflat`: command-line front end for kflat-core.
//!
//! Exit status: 0 on success or a "yes" answer, 1 on a "no" answer from a check, 2 on
//! usage, parse or precondition errors.

mod algebra;
mod chow;
mod deform;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use input::{CliResult, Env};
use kflat_core::{Field, MonomialOrder};
use report::Report;

#[derive(Parser)]
#[command(name = "kflat", version, about = "Exact computations with ideals, divisors and first-order deformations")]
struct Cli {
    /// Coefficient field: `Q` or `Fp:p`.
    #[arg(long, global = true, default_value = "Q")]
    field: Field,
    /// Ring variables in order, comma separated; inferred from the input when absent.
    #[arg(long, global = true, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Variable allowed to carry negative exponents.
    #[arg(long, global = true)]
    laurent: Option<String>,
    /// Monomial order: `lex`, `grevlex` or `elim:k`.
    #[arg(long, global = true, default_value = "grevlex")]
    order: MonomialOrder,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print a JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis.
    Gb(IdealArg),
    /// Ideal membership.
    Member(MemberArgs),
    /// Intersection of two or more ideals.
    Intersect(IntersectArgs),
    /// Colon ideal `I : J`.
    Quotient(ByArgs),
    /// Saturation `I : J^∞`; by the maximal ideal of the origin when `--by` is absent.
    Saturate(OptByArgs),
    /// Element-wise power `I^[m]`.
    FrobPower(FrobArgs),
    /// Pure part: the saturation by the maximal ideal, or by `(ℓ)` with `--by`.
    Pure(PureArgs),
    /// Length of the torsion of `R/I` at the origin.
    Torsion(IdealArg),
    /// Divisorial support of a module given by a multiplication matrix.
    Dsupp(DsuppArgs),
    /// Principality of `f + ε·y^{−r}·g`, or the explicit example ideals.
    Cartier(CartierArgs),
    /// Ideal of Chow equations of a hypersurface pair `(f = z = 0)`.
    ChowPair(ChowPairArgs),
    /// Ideal of Chow equations of the coordinate axes of affine n-space.
    ChowAxes(NArg),
    /// Chow hull of a cycle.
    ChowHull(CycleArgs),
    /// Ideal of Chow equations sampled from random projections.
    ChowSample(SampleArgs),
    /// Classify a first-order deformation of a plane curve.
    CheckPlane(CheckPlaneArgs),
    /// Classify a deformation of the monomial curve `x^a = y^c` given in the parameter `t`.
    CheckMonomial(CheckMonomialArgs),
    /// Classify a first-order deformation of the coordinate axes.
    CheckCn(CheckCnArgs),
    /// Smoothings of the coordinate axes and their first-order data.
    CnSmooth(CnSmoothArgs),
    /// Weight subsets for degree-n monomials.
    SubsetLemma(SubsetArgs),
    /// The numerical semigroup generated by `a` and `c`.
    Semigroup(SemigroupArgs),
}

#[derive(Args)]
struct IdealArg {
    /// Comma-separated generators.
    #[arg(long)]
    ideal: String,
}

#[derive(Args)]
struct MemberArgs {
    #[arg(long)]
    ideal: String,
    #[arg(long)]
    poly: String,
}

#[derive(Args)]
struct IntersectArgs {
    /// Repeat once per ideal.
    #[arg(long, required = true, num_args = 1)]
    ideal: Vec<String>,
}

#[derive(Args)]
struct ByArgs {
    #[arg(long)]
    ideal: String,
    #[arg(long)]
    by: String,
}

#[derive(Args)]
struct OptByArgs {
    #[arg(long)]
    ideal: String,
    #[arg(long)]
    by: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scalars {
    /// Multinomial products (scalars from the algebraic closure).
    Closure,
    /// Powers of base-field combinations of the generators.
    Base,
    /// Every base-field combination, enumerated (finite fields only).
    Exhaustive,
}

#[derive(Args)]
struct FrobArgs {
    #[arg(long)]
    ideal: String,
    #[arg(long)]
    m: u32,
    #[arg(long, value_enum, default_value = "closure")]
    scalars: Scalars,
}

#[derive(Args)]
struct PureArgs {
    #[arg(long)]
    ideal: String,
    /// A linear form `ℓ`; saturate by `(ℓ)` instead of the maximal ideal.
    #[arg(long)]
    by: Option<String>,
}

#[derive(Args)]
struct DsuppArgs {
    /// Matrix rows separated by `;`, entries by `,`; entries may be Laurent in `--laurent` (default `u`).
    #[arg(long, conflicts_with = "modules", required_unless_present = "modules")]
    matrix: Option<String>,
    /// ε-part of the matrix, same shape.
    #[arg(long, requires = "matrix")]
    eps: Option<String>,
    /// Monic polynomials `g_j` of a torsion module `⊕ k[x]/(g_j)`.
    #[arg(long)]
    modules: Option<String>,
    /// Variable of the characteristic polynomial (or of the `g_j`).
    #[arg(long, default_value = "v")]
    var: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Example {
    /// `(v², v·u^r + q(u)ε, vε)`.
    Smooth,
    /// `((v² − u³)², v(v² − u³) + ε, (v² − u³)ε)`.
    Cusp,
    /// `(f², fg + ε, fε)`.
    Jfg,
}

#[derive(Args)]
struct CartierArgs {
    #[arg(long, required_unless_present = "example")]
    f: Option<String>,
    #[arg(long, required_unless_present = "example")]
    g: Option<String>,
    /// The variable `y`.
    #[arg(long, required_unless_present = "example")]
    y: Option<String>,
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Print one of the explicit ideals over `k[ε]` instead.
    #[arg(long, value_enum)]
    example: Option<Example>,
    /// Coefficients of `q(u)` from the constant term up, for `--example smooth`.
    #[arg(long, default_value = "1")]
    q: String,
}

#[derive(Args)]
struct ChowPairArgs {
    #[arg(long)]
    f: String,
    #[arg(long)]
    z: String,
    /// Stop at the degree of `f` instead of its multiplicity at the origin.
    #[arg(long)]
    homogeneous: bool,
}

#[derive(Args)]
struct NArg {
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct CycleArgs {
    /// `m:g1,g2,…`, the ideal of a component with multiplicity `m`; repeat per component.
    #[arg(long, required = true, num_args = 1)]
    component: Vec<String>,
    #[arg(long, value_enum, default_value = "closure")]
    scalars: Scalars,
}

#[derive(Args)]
struct SampleArgs {
    /// Sample the coordinate axes of affine n-space.
    #[arg(long, conflicts_with = "component", required_unless_present = "component")]
    axes: Option<usize>,
    /// `m:g1,g2,…`, repeat per component.
    #[arg(long, num_args = 1)]
    component: Vec<String>,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[arg(long, default_value_t = 10)]
    batch: usize,
    #[arg(long, default_value_t = 7)]
    bound: i64,
    /// Also compare with the closed form (axes) or the Chow hull (components).
    #[arg(long)]
    compare: bool,
}

#[derive(Args)]
struct CheckPlaneArgs {
    /// `f; psi; phi`, with `psi, phi` Laurent in the first variable.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    def: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct CheckMonomialArgs {
    #[arg(long)]
    a: u32,
    #[arg(long)]
    c: u32,
    /// `φ` as a Laurent polynomial in `t`.
    #[arg(long)]
    phi: String,
    /// `ψ` as a Laurent polynomial in `t`.
    #[arg(long, default_value = "0")]
    psi: String,
}

#[derive(Args)]
struct CheckCnArgs {
    /// Expected `n`; supplies the `n` line when the file has none.
    #[arg(long)]
    n: Option<usize>,
    /// Deformation file (`n N`, optional `m M`, then `i j: φ_ij` lines).
    #[arg(long)]
    def: PathBuf,
    /// Search random projections for a witness of non-K-flatness.
    #[arg(long)]
    refute: bool,
    /// Draws per refutation phase (plain and rescaled).
    #[arg(long, default_value_t = 25)]
    draws: usize,
    /// Compute the torsion of the central fiber (simple poles, `m = n`).
    #[arg(long)]
    torsion: bool,
}

#[derive(Args)]
struct CnSmoothArgs {
    /// Distinct points `p_1, …, p_n`.
    #[arg(long, conflicts_with = "rank", required_unless_present = "rank")]
    p: Option<String>,
    /// Nonzero weights `λ_i`; all ones when absent.
    #[arg(long)]
    lambda: Option<String>,
    /// Rank of the span of first-order data of random smoothings of `C_n`.
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long, default_value_t = 40)]
    samples: usize,
}

#[derive(Args)]
struct SubsetArgs {
    #[arg(long)]
    n: usize,
    /// A single exponent vector; all degree-n monomials when absent.
    #[arg(long, value_delimiter = ',')]
    w: Option<Vec<u32>>,
}

#[derive(Args)]
struct SemigroupArgs {
    #[arg(long)]
    a: u32,
    #[arg(long)]
    c: u32,
}

fn run(cmd: &Command, env: &Env) -> CliResult<Report> {
    match cmd {
        Command::Gb(a) => algebra::gb(env, &a.ideal),
        Command::Member(a) => algebra::member(env, &a.ideal, &a.poly),
        Command::Intersect(a) => algebra::intersect(env, &a.ideal),
        Command::Quotient(a) => algebra::quotient(env, &a.ideal, &a.by),
        Command::Saturate(a) => algebra::saturate(env, &a.ideal, a.by.as_deref()),
        Command::FrobPower(a) => algebra::frob_power(env, &a.ideal, a.m, a.scalars.into()),
        Command::Pure(a) => algebra::pure(env, &a.ideal, a.by.as_deref()),
        Command::Torsion(a) => algebra::torsion(env, &a.ideal),
        Command::Dsupp(a) => match &a.modules {
            Some(mods) => chow::dsupp_modules(env, mods, &a.var),
            None => chow::dsupp(env, a.matrix.as_deref().unwrap_or_default(), a.eps.as_deref(), &a.var),
        },
        Command::Cartier(a) => match a.example {
            Some(kind) => chow::cartier_example(env, kind, a.r, &a.q, a.f.as_deref(), a.g.as_deref()),
            None => chow::cartier(env, a.f.as_deref().unwrap_or_default(), a.g.as_deref().unwrap_or_default(), a.y.as_deref().unwrap_or_default(), a.r),
        },
        Command::ChowPair(a) => chow::chow_pair(env, &a.f, &a.z, a.homogeneous),
        Command::ChowAxes(a) => chow::chow_axes(env, a.n),
        Command::ChowHull(a) => chow::chow_hull(env, &a.component, a.scalars.into()),
        Command::ChowSample(a) => chow::chow_sample(env, a),
        Command::CheckPlane(a) => {
            let text = match (&a.def, &a.file) {
                (Some(d), _) => d.clone(),
                (None, Some(path)) => input::read_file(path)?,
                (None, None) => unreachable!("clap requires one of --def, --file"),
            };
            deform::check_plane(env, text.trim())
        }
        Command::CheckMonomial(a) => deform::check_monomial(env, a.a, a.c, &a.psi, &a.phi),
        Command::CheckCn(a) => deform::check_cn(env, a),
        Command::CnSmooth(a) => match a.rank {
            Some(n) => deform::cn_smooth_rank(env, n, a.samples),
            None => deform::cn_smooth(env, a.p.as_deref().unwrap_or_default(), a.lambda.as_deref()),
        },
        Command::SubsetLemma(a) => chow::subset_lemma(a.n, a.w.as_deref()),
        Command::Semigroup(a) => deform::semigroup(a.a, a.c),
    }
}

impl From<Scalars> for kflat_core::groebner::PowerScalars {
    fn from(s: Scalars) -> Self {
        match s {
            Scalars::Closure => Self::AlgebraicClosure,
            Scalars::Base => Self::BaseField,
            Scalars::Exhaustive => Self::ExhaustiveBaseField,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env = Env { field: cli.field, vars: cli.vars, laurent: cli.laurent, order: cli.order, seed: cli.seed };
    match run(&cli.command, &env) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
