//! The `eqss` command line.
//!
//! Exit codes: 0 success, 2 parse or malformed input, 3 validation or
//! hypothesis failure, 4 convergence audit failure.

pub mod corpus;
pub mod input;
pub mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::ceforms::relative_subcomplex;
use crate::cohom::{invariant_cohomology, relative_cohomology, GroupActionOnCohomology};
use crate::error::Error;
use crate::exactla::{parse_rational, DEFAULT_GROUP_BOUND};
use crate::liealg::Subalgebra;
use crate::obstruct::s3::{Completeness, NullMethod, DEFAULT_HEIGHT_BOUND};
use crate::obstruct::{
    gysin_check, gysin_gap, orbit_table_verify, s3_check_4manifold, s3_check_5manifold,
    wang_check, CheckReport, GysinOptions, NullHyperplane, NullSearchOptions, OrbitTableVerdict,
    OrbitTypeTable, TermDim, DEFAULT_SOLVER_CAP,
};
use crate::specseq::{page, run_to_stabilization, Page};

use input::{CupFormEntry, InputDocument, Workspace};
use report::{form_json, form_text, list_text, matrix_json, ReportDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_AUDIT: i32 = 4;

pub const SOLVER_CAP_ENV: &str = "EQSS_SOLVER_CAP";
pub const GROUP_BOUND_ENV: &str = "EQSS_GROUP_BOUND";

#[derive(Debug, Parser)]
#[command(name = "eqss", version, about = "Spectral sequences and exclusion criteria for equidimensional actions")]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Absolute, relative and invariant Lie algebra cohomology.
    Cohomology {
        /// Input document.
        file: PathBuf,
        /// Name of the Lie algebra.
        #[arg(long)]
        algebra: String,
        /// Name of a subalgebra h; computes H(g,h).
        #[arg(long)]
        relative: Option<String>,
        /// Names of automorphisms generating the acting group.
        #[arg(long, value_delimiter = ',')]
        invariants: Vec<String>,
    },
    /// Pages, E∞ and the convergence audit of a filtered complex.
    Specseq {
        /// Input document.
        file: PathBuf,
        /// Name of a complex with filtration weights.
        #[arg(long)]
        complex: String,
        /// Last page to report; defaults to the stabilization page.
        #[arg(long)]
        max_page: Option<usize>,
    },
    /// Exclusion criteria.
    Obstruct {
        #[command(subcommand)]
        check: Check,
    },
}

#[derive(Debug, Subcommand)]
pub enum Check {
    /// Effective S³ actions on compact 4-manifolds.
    #[command(name = "s3-4m")]
    S3FourManifold {
        /// Betti numbers b0,...,b4.
        #[arg(long, value_delimiter = ',', required = true)]
        betti: Vec<usize>,
    },
    /// Effective S³ actions on compact 5-manifolds.
    #[command(name = "s3-5m")]
    S3FiveManifold {
        #[arg(long)]
        b2: usize,
        /// JSON file `{"b2": n, "matrices": [...]}`.
        #[arg(long)]
        cup: PathBuf,
        /// Assert a hyperplane of H² generated by embedded 2-spheres.
        #[arg(long)]
        spheres: bool,
        /// Normal vector of a hyperplane to try first.
        #[arg(long, value_delimiter = ',')]
        candidate: Vec<String>,
        /// Coefficient bound of the bounded search.
        #[arg(long, default_value_t = DEFAULT_HEIGHT_BOUND)]
        height: u64,
        /// Skip the exact decision for b2 ≥ 3.
        #[arg(long)]
        bounded_only: bool,
    },
    /// Gysin sequence of a two-row action.
    Gysin {
        /// Degree l with H(g,h) concentrated in degrees 0 and l.
        #[arg(long)]
        l: Option<usize>,
        /// Dimensions of the basic cohomology.
        #[arg(long, value_delimiter = ',', required = true)]
        basic: Vec<usize>,
        /// Betti numbers of the manifold to test.
        #[arg(long, value_delimiter = ',')]
        total: Option<Vec<usize>>,
        #[arg(long)]
        orientable: bool,
        /// Split sequences for even l.
        #[arg(long)]
        split: bool,
        /// Input document holding the pair (g, h); derives l.
        #[arg(long, requires_all = ["algebra", "relative"])]
        file: Option<PathBuf>,
        #[arg(long, requires = "file")]
        algebra: Option<String>,
        #[arg(long, requires = "file")]
        relative: Option<String>,
    },
    /// Wang type sequences for orbit codimension 1, 2 or 3.
    Wang {
        /// Codimension of the orbits.
        #[arg(long)]
        codim: usize,
        #[arg(long)]
        simply_connected: bool,
        #[arg(long)]
        oriented: bool,
        /// Dimensions of H(g,h), the relative cohomology of an orbit.
        #[arg(long, value_delimiter = ',')]
        gh: Vec<usize>,
    },
    /// Verifies the SU(2) orbit type table.
    OrbitTable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub solver_cap: usize,
    pub group_bound: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            solver_cap: DEFAULT_SOLVER_CAP,
            group_bound: DEFAULT_GROUP_BOUND,
        }
    }
}

impl Settings {
    /// Defaults overridden by `EQSS_SOLVER_CAP` and `EQSS_GROUP_BOUND`.
    pub fn from_vars(get: impl Fn(&str) -> Option<String>) -> Result<Self, Failure> {
        let read = |key: &str, default: usize| match get(key) {
            None => Ok(default),
            Some(v) => v
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| Failure::new(EXIT_PARSE, format!("{key} must be a positive integer, got {v:?}"))),
        };
        let d = Self::default();
        Ok(Self {
            solver_cap: read(SOLVER_CAP_ENV, d.solver_cap)?,
            group_bound: read(GROUP_BOUND_ENV, d.group_bound)?,
        })
    }

    pub fn from_env() -> Result<Self, Failure> {
        Self::from_vars(|k| std::env::var(k).ok())
    }
}

/// A failed invocation: exit code and message.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::AuditFailure { .. } => EXIT_AUDIT,
        Error::Malformed(_) => EXIT_PARSE,
        _ => EXIT_VALIDATION,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = match e {
            Error::AuditFailure { .. } => format!("internal audit failure (engine bug): {e}"),
            _ => e.to_string(),
        };
        Self::new(exit_code(&e), message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation with settings from the environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Settings::from_env() {
        Ok(s) => run_with(args, s),
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

pub fn run_with<I, T>(args: I, settings: Settings) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_PARSE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let echo = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli, echo, settings) {
        Ok(doc) => Outcome {
            code: EXIT_OK,
            stdout: if cli.json { doc.to_json() } else { doc.to_text() },
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

/// Runs a parsed command.
pub fn execute(cli: &Cli, echo: Vec<String>, settings: Settings) -> Result<ReportDocument, Failure> {
    let (inputs, results, text) = match &cli.command {
        Command::Cohomology {
            file,
            algebra,
            relative,
            invariants,
        } => {
            let (bytes, ws) = load_workspace(file, settings)?;
            let (r, t) = cmd_cohomology(&ws, algebra, relative.as_deref(), invariants, settings)?;
            (vec![bytes], r, t)
        }
        Command::Specseq {
            file,
            complex,
            max_page,
        } => {
            let (bytes, ws) = load_workspace(file, settings)?;
            let (r, t) = cmd_specseq(&ws, complex, *max_page)?;
            (vec![bytes], r, t)
        }
        Command::Obstruct { check } => cmd_obstruct(check, settings)?,
    };
    let refs: Vec<&[u8]> = inputs.iter().map(Vec::as_slice).collect();
    Ok(ReportDocument::new(echo, &refs, results, text))
}

fn read_file(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path, bytes: &[u8]) -> Result<T, Failure> {
    serde_json::from_slice(bytes).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

pub fn load_workspace(path: &Path, settings: Settings) -> Result<(Vec<u8>, Workspace), Failure> {
    let bytes = read_file(path)?;
    let doc: InputDocument = parse_json(path, &bytes)?;
    let ws = Workspace::build(&doc, settings.group_bound)?;
    Ok((bytes, ws))
}

/// `H(𝔤)`, `H(𝔤,𝔥)` or `H(𝔤,𝔥)^G` with representatives.
pub fn cmd_cohomology(
    ws: &Workspace,
    algebra: &str,
    relative: Option<&str>,
    invariants: &[String],
    settings: Settings,
) -> Result<(Value, String), Failure> {
    let g = ws
        .algebras
        .get(algebra)
        .ok_or_else(|| Error::Unresolved(format!("no Lie algebra named {algebra:?}")))?;
    let h = match relative {
        Some(name) => {
            let h = ws
                .subalgebras
                .get(name)
                .ok_or_else(|| Error::Unresolved(format!("no subalgebra named {name:?}")))?;
            if !Arc::ptr_eq(h.parent(), g) {
                return Err(Error::Unresolved(format!(
                    "subalgebra {name} lives in {}, not {algebra}",
                    h.parent().name()
                ))
                .into());
            }
            h.clone()
        }
        None => Subalgebra::zero(Arc::clone(g)),
    };
    let full = relative_cohomology(&relative_subcomplex(&h)?)?;
    let mut title = match relative {
        Some(r) => format!("H({algebra}, {r})"),
        None => format!("H({algebra})"),
    };
    let mut results = json!({
        "algebra": algebra,
        "dim": g.dim(),
        "relative_to": relative,
        "invariants_under": invariants,
    });
    let mut extra = String::new();
    let res = if invariants.is_empty() {
        full
    } else {
        let auts = invariants
            .iter()
            .map(|n| {
                let a = ws
                    .automorphisms
                    .get(n)
                    .ok_or_else(|| Error::Unresolved(format!("no automorphism named {n:?}")))?;
                if !Arc::ptr_eq(a.algebra(), g) {
                    return Err(Error::InvalidAction(format!("automorphism {n} is not an automorphism of {algebra}")));
                }
                if !a.preserves(h.basis()) {
                    return Err(Error::InvalidAction(format!(
                        "automorphism {n} does not preserve {}",
                        h.name()
                    )));
                }
                Ok(a.clone())
            })
            .collect::<Result<Vec<_>, Error>>()?;
        let action = GroupActionOnCohomology::from_automorphisms(&full, &auts, settings.group_bound)?;
        let inv = invariant_cohomology(&full, &action, settings.group_bound)?;
        results["dims_before_invariants"] = json!(full.dims());
        results["group_order"] = json!(action.group_order());
        results["action_on_cohomology"] = Value::from(
            action
                .generators()
                .iter()
                .map(|per| Value::from(per.iter().map(matrix_json).collect::<Vec<_>>()))
                .collect::<Vec<_>>(),
        );
        title = format!("{title}^<{}>", invariants.join(","));
        extra = format!(
            "group of order {} acting on {}\n",
            action.group_order(),
            list_text(full.dims())
        );
        inv
    };
    let dim = g.dim();
    let dims = res.dims().to_vec();
    results["dims"] = json!(dims);
    results["euler_characteristic"] = json!(res.euler_characteristic());
    results["representatives"] = Value::from(
        (0..dims.len())
            .map(|k| Value::from(res.representatives(k).iter().map(|v| form_json(dim, k, v)).collect::<Vec<_>>()))
            .collect::<Vec<_>>(),
    );
    let mut text = format!("{extra}{title} = {}\n", list_text(&dims));
    for (k, &dk) in dims.iter().enumerate() {
        for v in res.representatives(k).iter().take(dk) {
            text.push_str(&format!("  degree {k}: {}\n", form_text(dim, k, v)));
        }
    }
    Ok((results, text))
}

fn page_json(pg: &Page) -> Value {
    json!({
        "r": pg.r(),
        "entries": pg
            .entries()
            .iter()
            .map(|e| json!({"p": e.p, "q": e.q(), "dim": e.dim}))
            .collect::<Vec<_>>(),
    })
}

/// Grid with `q` decreasing downwards and `p` increasing rightwards; `.` is zero.
fn page_grid(pg: &Page, pmax: usize, qmin: i64, qmax: i64) -> String {
    let mut out = String::new();
    for q in (qmin..=qmax).rev() {
        out.push_str(&format!("  {q:>3} |"));
        for p in 0..=pmax {
            match pg.dim(p as i64, q) {
                0 => out.push_str("   ."),
                d => out.push_str(&format!("{d:>4}")),
            }
        }
        out.push('\n');
    }
    out.push_str(&format!("      +{}\n", "----".repeat(pmax + 1)));
    out.push_str("       ");
    for p in 0..=pmax {
        out.push_str(&format!("{p:>4}"));
    }
    out.push('\n');
    out
}

/// Pages `0..=stabilization` (or `0..=max_page`), E∞ and the audit.
pub fn cmd_specseq(ws: &Workspace, name: &str, max_page: Option<usize>) -> Result<(Value, String), Failure> {
    let fc = ws.filtered(name)?;
    let table = run_to_stabilization(&fc)?;
    let last = max_page.unwrap_or(table.stabilized_at);
    let pages = (0..=last)
        .map(|r| match table.page(r) {
            Some(p) => Ok(p.clone()),
            None => page(&fc, r),
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let all: Vec<&Page> = pages.iter().chain(std::iter::once(&table.einf)).collect();
    let pmax = fc.max_weight();
    let qs = all.iter().flat_map(|pg| pg.entries().iter().map(|e| e.q()));
    let (qmin, qmax) = qs.fold((0, 0), |(lo, hi), q| (lo.min(q), hi.max(q)));
    let einf_by_degree = table.einf_by_degree();
    let results = json!({
        "complex": name,
        "dims": fc.complex().dims(),
        "max_weight": pmax,
        "pages": pages.iter().map(page_json).collect::<Vec<_>>(),
        "stabilized_at": table.stabilized_at,
        "einf": page_json(&table.einf),
        "total_cohomology": table.total_cohomology,
        "audit": {
            "status": "passed",
            "einf_by_degree": einf_by_degree,
            "cohomology": table.total_cohomology,
        },
    });
    let mut text = format!("filtered complex {name}, dims {}\n", list_text(fc.complex().dims()));
    for pg in &pages {
        text.push_str(&format!("E_{}:\n{}", pg.r(), page_grid(pg, pmax, qmin, qmax)));
    }
    text.push_str(&format!(
        "E_inf (stable from page {}):\n{}",
        table.stabilized_at,
        page_grid(&table.einf, pmax, qmin, qmax)
    ));
    text.push_str(&format!(
        "H = {}\naudit passed: sum over p+q=n of E_inf = dim H^n for every n\n",
        list_text(&table.total_cohomology)
    ));
    Ok((results, text))
}

fn surds_json(v: &[crate::obstruct::surd::QuadraticSurd]) -> Value {
    Value::from(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn hyperplane_json(h: &NullHyperplane) -> Value {
    match h {
        NullHyperplane::Found { normal, basis, method } => json!({
            "found": true,
            "method": match method {
                NullMethod::ZeroSubspace => "zero subspace",
                NullMethod::Candidate => "candidate",
                NullMethod::BoundedSearch => "bounded search",
                NullMethod::ExactDecision => "exact decision",
            },
            "normal": surds_json(normal),
            "basis": basis.as_ref().map(|b| b.vectors().iter().map(|v| report::vec_json(v)).collect::<Vec<_>>()),
        }),
        NullHyperplane::NotFound { completeness } => json!({
            "found": false,
            "completeness": match completeness {
                Completeness::Exact => "exact",
                Completeness::BoundedSearch => "bounded search",
            },
        }),
    }
}

/// `H^k(M)` for `k ≥ 0` read off a solution.
fn total_dims(r: &CheckReport, dims: &[usize]) -> Vec<usize> {
    let p = r.problem.as_ref().expect("sequence report");
    p.terms
        .iter()
        .zip(dims)
        .filter(|(t, _)| t.name.ends_with("(M)") && !t.name.starts_with("H^-"))
        .map(|(_, &d)| d)
        .collect()
}

fn check_json(kind: &str, r: &CheckReport) -> Value {
    let mut v = json!({
        "check": kind,
        "verdict": r.verdict.as_str(),
        "citation": r.citation,
        "notes": r.notes,
    });
    if let Some(p) = &r.problem {
        v["sequence"] = json!({
            "name": p.name,
            "terms": p.terms.iter().map(|t| match &t.dim {
                TermDim::Known(d) => json!({"name": t.name, "dim": d}),
                TermDim::Unknown(l) => json!({"name": t.name, "unknown": l}),
            }).collect::<Vec<_>>(),
            "zero_arrows": p.zero_arrows,
            "constraints": p.constraints,
        });
        v["solutions"] = Value::from(
            r.solutions
                .iter()
                .map(|s| {
                    let dims = s.term_dims(p).expect("complete solution");
                    json!({
                        "total": total_dims(r, &dims),
                        "assignments": s.assignments,
                        "map_ranks": s.map_ranks,
                    })
                })
                .collect::<Vec<_>>(),
        );
    }
    if let Some(h) = &r.hyperplane {
        v["hyperplane"] = hyperplane_json(h);
    }
    v
}

fn check_text(r: &CheckReport) -> String {
    let mut t = format!("verdict: {}\ntheorem: {}\n", r.verdict.as_str(), r.citation);
    for n in &r.notes {
        t.push_str(&format!("note: {n}\n"));
    }
    if let Some(p) = &r.problem {
        t.push_str(&format!("{} solution(s) for H^*(M):\n", r.solutions.len()));
        for s in &r.solutions {
            let dims = s.term_dims(p).expect("complete solution");
            t.push_str(&format!("  {}\n", list_text(&total_dims(r, &dims))));
        }
    }
    match &r.hyperplane {
        Some(h @ NullHyperplane::Found { normal, .. }) => t.push_str(&format!(
            "cup-null hyperplane: kernel of {} ({})\n",
            list_text(normal),
            hyperplane_json(h)["method"].as_str().unwrap_or_default()
        )),
        Some(NullHyperplane::NotFound { completeness }) => t.push_str(match completeness {
            Completeness::Exact => "no cup-null hyperplane (exact)\n",
            Completeness::BoundedSearch => "no cup-null hyperplane within the height bound\n",
        }),
        None => {}
    }
    t
}

type CommandOutput = (Vec<Vec<u8>>, Value, String);

pub fn cmd_obstruct(check: &Check, settings: Settings) -> Result<CommandOutput, Failure> {
    match check {
        Check::S3FourManifold { betti } => {
            let r = s3_check_4manifold(betti)?;
            Ok((vec![], check_json("s3-4m", &r), check_text(&r)))
        }
        Check::S3FiveManifold {
            b2,
            cup,
            spheres,
            candidate,
            height,
            bounded_only,
        } => {
            let bytes = read_file(cup)?;
            let entry: CupFormEntry = parse_json(cup, &bytes)?;
            let form = entry.build()?;
            let candidate = if candidate.is_empty() {
                None
            } else {
                let c = candidate.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
                if c.len() != *b2 {
                    return Err(Failure::new(
                        EXIT_PARSE,
                        format!("candidate has {} entries, b2 = {b2}", c.len()),
                    ));
                }
                Some(c)
            };
            let opts = NullSearchOptions {
                candidate,
                height_bound: *height,
                exact: !bounded_only,
            };
            let r = s3_check_5manifold(*b2, &form, *spheres, &opts)?;
            Ok((vec![bytes], check_json("s3-5m", &r), check_text(&r)))
        }
        Check::Gysin {
            l,
            basic,
            total,
            orientable,
            split,
            file,
            algebra,
            relative,
        } => {
            let mut inputs = Vec::new();
            let l = match (l, file) {
                (None, None) => {
                    return Err(Failure::new(EXIT_PARSE, "gysin needs --l or a pair via --file/--algebra/--relative"))
                }
                (Some(l), None) => *l,
                (l, Some(path)) => {
                    let (bytes, ws) = load_workspace(path, settings)?;
                    inputs.push(bytes);
                    let (a, s) = (algebra.as_deref().unwrap_or_default(), relative.as_deref().unwrap_or_default());
                    let h = ws
                        .subalgebras
                        .get(s)
                        .ok_or_else(|| Error::Unresolved(format!("no subalgebra named {s:?}")))?;
                    if h.parent().name() != a {
                        return Err(Error::Unresolved(format!("subalgebra {s} is not in {a}")).into());
                    }
                    let gap = gysin_gap(h)?;
                    if let Some(l) = l.filter(|&l| l != gap) {
                        return Err(Error::Hypothesis(format!("--l {l} but H({a}, {s}) has gap {gap}")).into());
                    }
                    gap
                }
            };
            let opts = GysinOptions {
                orientable: *orientable,
                split_even: *split,
            };
            let r = gysin_check(l, basic, total.as_deref(), opts, settings.solver_cap)?;
            let mut v = check_json("gysin", &r);
            v["l"] = json!(l);
            Ok((inputs, v, format!("l = {l}\n{}", check_text(&r))))
        }
        Check::Wang {
            codim,
            simply_connected,
            oriented,
            gh,
        } => {
            if (2..=3).contains(codim) && gh.is_empty() {
                return Err(Failure::new(EXIT_PARSE, format!("codimension {codim} needs --gh")));
            }
            let r = wang_check(*codim, *simply_connected, *oriented, gh, settings.solver_cap)?;
            Ok((vec![], check_json("wang", &r), check_text(&r)))
        }
        Check::OrbitTable => {
            let table = OrbitTypeTable::su2();
            let verdict = orbit_table_verify(&table)?;
            let entries: Vec<Value> = table
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "orbit": e.orbit,
                        "isotropy": e.isotropy.describe(),
                        "dim": e.dim,
                        "cohomology": e.cohomology,
                    })
                })
                .collect();
            let mut text = String::new();
            for e in &table.entries {
                text.push_str(&format!(
                    "  {:<6} isotropy {:<28} dim {} H = {}\n",
                    e.orbit,
                    e.isotropy.describe(),
                    e.dim,
                    list_text(&e.cohomology)
                ));
            }
            match verdict {
                OrbitTableVerdict::Ok { warnings } => {
                    for w in &warnings {
                        text.push_str(&format!("warning: {w}\n"));
                    }
                    text.push_str("orbit table verified\n");
                    let v = json!({"check": "orbit-table", "status": "ok", "warnings": warnings, "entries": entries});
                    Ok((vec![], v, text))
                }
                OrbitTableVerdict::Failed { entry, reason } => {
                    Err(Failure::new(EXIT_VALIDATION, format!("orbit table entry {entry}: {reason}")))
                }
            }
        }
    }
}
