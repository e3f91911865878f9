//! Command-line front end: job parsing, dispatch and report rendering.

use std::collections::BTreeMap;
use std::path::Path;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use crate::bar::{self, Route};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, RationalField};
use crate::groups;
use crate::hochschild;
use crate::hopf::{group_algebra, HopfAlgebra};
use crate::json::{AlgebraSource, ModuleJson};
use crate::modules::{regular_bimodule, regular_module, trivial_bimodule, trivial_module, Bimodule, LeftModule};
use crate::resolution::{self, cp_rank_table, CpRankRow, ResolutionComplex};
use crate::tensor;

pub const DEFAULT_BUDGET: u64 = 200_000;
pub const BUDGET_ENV: &str = "SYMCOH_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Mode {
    #[value(name = "H")]
    #[serde(rename = "H")]
    H,
    #[value(name = "SH")]
    #[serde(rename = "SH")]
    Sh,
    #[value(name = "HH")]
    #[serde(rename = "HH")]
    Hh,
    #[value(name = "SHH")]
    #[serde(rename = "SHH")]
    Shh,
    #[value(name = "resolution")]
    #[serde(rename = "resolution")]
    Resolution,
    #[value(name = "cp-table")]
    #[serde(rename = "cp-table")]
    CpTable,
    #[value(name = "validate")]
    #[serde(rename = "validate")]
    Validate,
    #[value(name = "compare-adjoint")]
    #[serde(rename = "compare-adjoint")]
    CompareAdjoint,
    #[value(name = "corollary-check")]
    #[serde(rename = "corollary-check")]
    CorollaryCheck,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::H => "H",
            Mode::Sh => "SH",
            Mode::Hh => "HH",
            Mode::Shh => "SHH",
            Mode::Resolution => "resolution",
            Mode::CpTable => "cp-table",
            Mode::Validate => "validate",
            Mode::CompareAdjoint => "compare-adjoint",
            Mode::CorollaryCheck => "corollary-check",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Homogeneous,
    Nonhomogeneous,
    Resolution,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::Homogeneous => Route::Homogeneous,
            RouteArg::Nonhomogeneous => Route::Nonhomogeneous,
            RouteArg::Resolution => Route::Resolution,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// Exact cohomology of finite-dimensional Hopf algebras.
#[derive(Parser, Debug, Clone)]
#[command(name = "symcoh", version)]
pub struct Cli {
    /// Builtin name (Cp:<p>, Cn:<n>, S3, Sn:<n>, V4, products like C2xC3),
    /// a JSON file, or inline JSON.
    #[arg(long)]
    pub algebra: String,
    /// q, gf:<p>; overrides the field of a JSON algebra.
    #[arg(long)]
    pub field: Option<String>,
    /// trivial, regular, a JSON file, or inline JSON.
    #[arg(long)]
    pub module: Option<String>,
    #[arg(long, value_enum, ignore_case = true)]
    pub mode: Mode,
    #[arg(long, default_value_t = 5)]
    pub max_degree: usize,
    #[arg(long, value_enum)]
    pub route: Option<RouteArg>,
    /// Run every applicable realization and fail if they disagree.
    #[arg(long)]
    pub cross_check: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Coordinate budget; defaults to $SYMCOH_BUDGET or 200000.
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Clone, Debug)]
pub enum AlgebraInput {
    Builtin(String),
    Document(AlgebraSource),
}

#[derive(Clone, Debug)]
pub enum ModuleInput {
    Trivial,
    Regular,
    Document(ModuleJson),
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub algebra: AlgebraInput,
    pub field: FieldSpec,
    pub module: Option<ModuleInput>,
    pub mode: Mode,
    pub max_degree: usize,
    pub route: Route,
    pub cross_check: bool,
    pub format: Format,
    pub budget: u64,
}

fn read_source(s: &str) -> Result<String> {
    let t = s.trim_start();
    if t.starts_with('{') {
        return Ok(s.to_string());
    }
    std::fs::read_to_string(Path::new(s)).map_err(|e| Error::Schema(format!("cannot read '{s}': {e}")))
}

fn looks_like_document(s: &str) -> bool {
    s.trim_start().starts_with('{') || s.ends_with(".json") || Path::new(s).is_file()
}

/// Default field for a builtin: GF(p) for a cyclic group of prime order,
/// otherwise the rationals.
fn builtin_field(name: &str) -> FieldSpec {
    match cyclic_order(name) {
        Some(p) if crate::field::is_prime(p as u64) => FieldSpec::Prime { p: p as u64 },
        _ => FieldSpec::Rational,
    }
}

fn cyclic_order(name: &str) -> Option<usize> {
    let lower = name.trim().to_ascii_lowercase();
    let rest = lower
        .strip_prefix("cp:")
        .or_else(|| lower.strip_prefix("cn:"))
        .or_else(|| lower.strip_prefix('c'))?;
    rest.parse().ok()
}

impl JobSpec {
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        if cli.max_degree == 0 {
            return Err(Error::Schema("max-degree must be at least 1".into()));
        }
        let algebra = if looks_like_document(&cli.algebra) {
            AlgebraInput::Document(AlgebraSource::from_json(&read_source(&cli.algebra)?)?)
        } else {
            AlgebraInput::Builtin(cli.algebra.clone())
        };
        let field = match (&cli.field, &algebra) {
            (Some(s), _) => s.parse()?,
            (None, AlgebraInput::Document(d)) => d.field().ok_or_else(|| Error::Schema("no field given".into()))?,
            (None, AlgebraInput::Builtin(name)) => builtin_field(name),
        };
        field.validate()?;
        let module = match cli.module.as_deref() {
            None => None,
            Some("trivial") | Some("k") => Some(ModuleInput::Trivial),
            Some("regular") | Some("A") => Some(ModuleInput::Regular),
            Some(s) => Some(ModuleInput::Document(ModuleJson::from_json(&read_source(s)?)?)),
        };
        let budget = match cli.budget {
            Some(b) => b,
            None => match std::env::var(BUDGET_ENV) {
                Ok(v) => v.trim().parse().map_err(|_| Error::Schema(format!("{BUDGET_ENV} must be an integer")))?,
                Err(_) => DEFAULT_BUDGET,
            },
        };
        Ok(JobSpec {
            algebra,
            field,
            module,
            mode: cli.mode,
            max_degree: cli.max_degree,
            route: cli.route.map(Route::from).unwrap_or(Route::Homogeneous),
            cross_check: cli.cross_check,
            format: cli.format,
            budget,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool) -> Self {
        Check { name: name.into(), pass, detail: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub mode: String,
    pub dims: Vec<usize>,
    pub routes: BTreeMap<String, Vec<usize>>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub properties: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<CpRankRow>>,
}

impl Report {
    fn new(mode: Mode) -> Self {
        Report {
            mode: mode.name().to_string(),
            dims: Vec::new(),
            routes: BTreeMap::new(),
            checks: Vec::new(),
            warnings: Vec::new(),
            properties: BTreeMap::new(),
            table: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// 1 validation, 2 schema, 3 budget, 4 internal assertion.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Schema(_) | Error::DimensionMismatch(_) | Error::DegreeOutOfRange { .. } | Error::InvalidPrime(_) => 2,
        Error::BudgetExceeded { .. } => 3,
        Error::CheckFailed(_) | Error::ActionNotCompatible(_) | Error::ActionLeavesSubspace(_) | Error::NotASubcomplex(_) => 4,
        Error::NotAGroup(_)
        | Error::NotCocommutative(_)
        | Error::NotCommutative(_)
        | Error::CharacteristicDivides { .. }
        | Error::InvalidModule(_)
        | Error::InvalidBimodule(_) => 1,
    }
}

/// Exit code for a finished report.
pub fn report_code(r: &Report) -> i32 {
    match (r.passed(), r.mode.as_str()) {
        (true, _) => 0,
        (false, "validate") => 1,
        (false, _) => 4,
    }
}

pub fn run(job: &JobSpec) -> Result<Report> {
    if job.mode == Mode::CpTable {
        return run_cp_table(job);
    }
    match job.field {
        FieldSpec::Rational => run_in(&RationalField, job),
        FieldSpec::Prime { p } => run_in(&PrimeField::new(p)?, job),
    }
}

fn run_cp_table(job: &JobSpec) -> Result<Report> {
    let name = match &job.algebra {
        AlgebraInput::Builtin(n) => n,
        AlgebraInput::Document(_) => return Err(Error::Schema("cp-table needs a builtin cyclic algebra Cp:<p>".into())),
    };
    let p = cyclic_order(name).ok_or_else(|| Error::Schema(format!("'{name}' is not a cyclic group")))? as u64;
    if job.field != (FieldSpec::Prime { p }) {
        return Err(Error::Schema(format!("cp-table runs over gf:{p}, not {}", job.field)));
    }
    let rows = cp_rank_table(p, job.max_degree)?;
    let mut r = Report::new(job.mode);
    r.dims = rows.iter().map(|row| row.rank).collect();
    r.routes.insert("dim".into(), rows.iter().map(|row| row.dim).collect());
    for row in &rows {
        r.checks.push(Check {
            name: format!("free n={}", row.n),
            pass: row.is_free,
            detail: Some(format!("{} orbit generators, expected rank {}", row.generators.len(), row.rank)),
        });
    }
    r.table = Some(rows);
    Ok(r)
}

fn build_algebra<F: Field>(f: &F, job: &JobSpec) -> Result<HopfAlgebra<F>> {
    match &job.algebra {
        AlgebraInput::Builtin(name) => {
            let (table, labels) = groups::builtin(name)?;
            group_algebra(f, &table, Some(labels))
        }
        AlgebraInput::Document(d) => d.build(f),
    }
}

fn left_module<F: Field>(h: &HopfAlgebra<F>, input: Option<&ModuleInput>) -> Result<LeftModule<F::Elem>> {
    match input {
        None | Some(ModuleInput::Trivial) => Ok(trivial_module(h)),
        Some(ModuleInput::Regular) => Ok(regular_module(h)),
        Some(ModuleInput::Document(m)) => m.left_module(h),
    }
}

fn bimodule<F: Field>(h: &HopfAlgebra<F>, input: Option<&ModuleInput>) -> Result<Bimodule<F::Elem>> {
    match input {
        None | Some(ModuleInput::Regular) => Ok(regular_bimodule(h)),
        Some(ModuleInput::Trivial) => Ok(trivial_bimodule(h)),
        Some(ModuleInput::Document(m)) => m.bimodule(h),
    }
}

/// Largest coinvariant space of degree ≤ n (sorted-tuple count), or the
/// ambient tensor when the generic quotient is needed.
fn resolution_size(d: usize, n: usize, extra: usize, char2: bool) -> u64 {
    if char2 {
        return tensor::pow(d, n + 1 + extra) as u64;
    }
    (0..=n).map(|k| tensor::binomial(d as u64, k as u64 + 1) * tensor::pow(d, extra) as u64).max().unwrap_or(1)
}

/// Largest coordinate space a route builds up to degree n.
fn route_cost(route: Route, bimodule: bool, d: usize, m: usize, n: usize, char2: bool) -> u64 {
    let extra = bimodule as usize;
    let m = m as u64;
    match route {
        Route::Nonhomogeneous => m * tensor::pow(d, n) as u64,
        Route::Homogeneous => m * tensor::pow(d, n + 1 + extra) as u64,
        Route::Resolution => m * resolution_size(d, n, extra, char2),
    }
}

fn check_budget(needed: u64, budget: u64) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

fn routes_for(job: &JobSpec, allow_resolution: bool) -> Result<Vec<Route>> {
    if job.route == Route::Resolution && !allow_resolution {
        return Err(Error::Schema(format!("mode {} has no resolution route", job.mode.name())));
    }
    let mut routes = vec![job.route];
    if job.cross_check {
        let all = [Route::Homogeneous, Route::Nonhomogeneous, Route::Resolution];
        routes.extend(all.into_iter().filter(|r| *r != job.route && (allow_resolution || *r != Route::Resolution)));
    }
    Ok(routes)
}

fn agreement(r: &mut Report) {
    if r.routes.len() > 1 {
        let first = r.routes.values().next().cloned();
        let pass = r.routes.values().all(|v| Some(v) == first.as_ref());
        r.checks.push(Check::new("routes agree", pass));
    }
}

fn run_in<F: Field>(f: &F, job: &JobSpec) -> Result<Report> {
    let h = build_algebra(f, job)?;
    let d = h.dim();
    let n = job.max_degree;
    let char2 = f.characteristic() == 2;
    let mut r = Report::new(job.mode);
    if matches!(job.mode, Mode::Sh | Mode::Shh | Mode::Resolution | Mode::CompareAdjoint | Mode::CorollaryCheck) {
        h.require_cocommutative()?;
    }
    if job.mode == Mode::CorollaryCheck {
        h.require_commutative()?;
    }
    match job.mode {
        Mode::Validate => {
            let v = h.validate(false);
            r.checks = v
                .checks
                .iter()
                .map(|c| Check { name: c.name.clone(), pass: c.pass, detail: c.witness.as_ref().map(|w| w.join(", ")) })
                .collect();
            r.properties.insert("commutative".into(), v.commutative);
            r.properties.insert("cocommutative".into(), v.cocommutative);
        }
        Mode::H | Mode::Sh => {
            let m = left_module(&h, job.module.as_ref())?;
            let symmetric = job.mode == Mode::Sh;
            let routes = routes_for(job, symmetric)?;
            let cost = routes.iter().map(|&rt| route_cost(rt, false, d, m.dim, n, char2)).max().unwrap_or(0);
            check_budget(cost, job.budget)?;
            for rt in routes {
                let rep = if symmetric {
                    bar::symmetric_cohomology(&h, &m, n, rt)?
                } else {
                    bar::cohomology(&h, &m, n, rt)?
                };
                if rt == job.route {
                    r.dims = rep.dims.clone();
                }
                r.routes.insert(rt.to_string(), rep.dims);
            }
            agreement(&mut r);
        }
        Mode::Hh | Mode::Shh => {
            let m = bimodule(&h, job.module.as_ref())?;
            let symmetric = job.mode == Mode::Shh;
            let routes = routes_for(job, symmetric)?;
            let cost = routes.iter().map(|&rt| route_cost(rt, true, d, m.dim, n, char2)).max().unwrap_or(0);
            check_budget(cost, job.budget)?;
            for rt in routes {
                let rep = if symmetric {
                    hochschild::symmetric_hochschild_cohomology(&h, &m, n, rt)?
                } else {
                    hochschild::hochschild_cohomology(&h, &m, n, rt)?
                };
                if rt == job.route {
                    r.dims = rep.dims.clone();
                }
                r.routes.insert(rt.to_string(), rep.dims);
            }
            agreement(&mut r);
        }
        Mode::CompareAdjoint => {
            let m = bimodule(&h, job.module.as_ref())?;
            check_budget(route_cost(job.route, true, d, m.dim, n, char2), job.budget)?;
            let c = hochschild::compare_adjoint(&h, &m, n, job.route)?;
            r.dims = c.left.clone();
            r.routes.insert("SHH(A,M)".into(), c.left);
            r.routes.insert("SH(A,adM)".into(), c.right);
            r.checks.push(Check::new("SHH(A,M) = SH(A,adM)", c.pass));
        }
        Mode::CorollaryCheck => {
            check_budget(route_cost(job.route, true, d, d, n, char2), job.budget)?;
            let c = hochschild::commutative_factorization_check(&h, n, job.route)?;
            r.dims = c.left.clone();
            r.routes.insert("SHH(A,A)".into(), c.left);
            r.routes.insert("dimA*SH(A,k)".into(), c.right);
            r.checks.push(Check::new("SHH(A,A) = dim A * SH(A,k)", c.pass));
        }
        Mode::Resolution => {
            check_budget(resolution_size(d, n, 1, char2), job.budget)?;
            run_resolution(&h, job, &mut r);
        }
        Mode::CpTable => unreachable!("handled before field dispatch"),
    }
    Ok(r)
}

fn run_resolution<F: Field>(h: &HopfAlgebra<F>, job: &JobSpec, r: &mut Report) {
    let f = h.field();
    let n = job.max_degree;
    let budget = job.budget as usize;
    let plain = ResolutionComplex::build(h, n, false, false);
    let env = ResolutionComplex::build(h, n, true, false);
    r.dims = plain.dims();
    r.routes.insert("S".into(), plain.dims());
    r.routes.insert("Se".into(), env.dims());
    r.warnings = plain.warnings();
    r.checks.push(Check::new("S complex", plain.is_complex()));
    for c in plain.exactness() {
        r.checks.push(Check::new(format!("S exact at degree {}", c.degree), c.pass));
    }
    for c in plain.contracting_homotopy_check(h) {
        r.checks.push(Check::new(format!("S homotopy at degree {}", c.degree), c.pass));
    }
    r.checks.push(Check::new("S well defined", plain.well_defined(h, budget)));
    r.checks.push(Check::new("Se complex", env.is_complex()));
    for c in env.exactness() {
        r.checks.push(Check::new(format!("Se exact at degree {}", c.degree), c.pass));
    }
    for c in env.tensor_factorization(h, &plain) {
        r.checks.push(Check::new(format!("Se = S (x) A at degree {}", c.degree), c.pass));
    }
    if plain.spaces.iter().all(|s| s.fast_path) && tensor::pow(h.dim(), n + 1) <= budget {
        let generic = ResolutionComplex::build(h, n, false, true);
        r.checks.push(Check::new("sorted basis matches generic quotient", generic.dims() == plain.dims()));
    }
    let p = f.characteristic();
    for k in 1..=n {
        if p != 0 && (k as u64 + 1) % p == 0 {
            r.warnings.push(format!("splitting at degree {k} skipped: characteristic {p} divides {}", k + 1));
            continue;
        }
        match resolution::splitting_maps(h, k) {
            Ok(s) => r.checks.push(Check::new(format!("splitting at degree {k}"), s.retract_ok && s.equivariant_ok)),
            Err(e) => r.checks.push(Check { name: format!("splitting at degree {k}"), pass: false, detail: Some(e.to_string()) }),
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    reason: &'a str,
    message: String,
    exit_code: i32,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    mode: &'a str,
    error: ErrorBody<'a>,
}

pub fn render_json(r: &Report) -> String {
    serde_json::to_string_pretty(r).expect("reports serialize")
}

pub fn render_error_json(mode: &str, e: &Error) -> String {
    let body = ErrorReport { mode, error: ErrorBody { reason: e.reason(), message: e.to_string(), exit_code: exit_code(e) } };
    serde_json::to_string_pretty(&body).expect("errors serialize")
}

fn join(v: &[usize]) -> String {
    format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

pub fn render_table(r: &Report) -> String {
    let mut rows: Vec<(String, String, String)> = vec![("mode".into(), r.mode.clone(), String::new())];
    rows.push(("dims".into(), join(&r.dims), String::new()));
    for (k, v) in &r.routes {
        rows.push(("route".into(), k.clone(), join(v)));
    }
    for (k, v) in &r.properties {
        rows.push(("property".into(), k.clone(), v.to_string()));
    }
    if let Some(t) = &r.table {
        for row in t {
            rows.push(("n".into(), row.n.to_string(), format!("dim {} rank {} free {}", row.dim, row.rank, row.is_free)));
        }
    }
    for c in &r.checks {
        let mut s = if c.pass { "pass".to_string() } else { "FAIL".to_string() };
        if let Some(d) = &c.detail {
            s.push_str(&format!(" ({d})"));
        }
        rows.push(("check".into(), c.name.clone(), s));
    }
    for w in &r.warnings {
        rows.push(("warning".into(), w.clone(), String::new()));
    }
    let w0 = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    let w1 = rows.iter().map(|r| r.1.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (a, b, c) in rows {
        let line = format!("{a:<w0$}  {b:<w1$}  {c}");
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Parses `args`, runs the job and writes the report to stdout. Returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let mode = cli.mode.name();
    let outcome = JobSpec::from_cli(&cli).and_then(|job| run(&job));
    match outcome {
        Ok(r) => {
            match cli.format {
                Format::Json => println!("{}", render_json(&r)),
                Format::Table => print!("{}", render_table(&r)),
            }
            report_code(&r)
        }
        Err(e) => {
            if cli.format == Format::Json {
                println!("{}", render_error_json(mode, &e));
            }
            eprintln!("error ({}): {e}", e.reason());
            exit_code(&e)
        }
    }
}
