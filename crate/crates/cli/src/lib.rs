//! Batch front end: correlators, diagram enumeration, verification runs and
//! the Virasoro specialization, reported as text or JSON.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 pole at
//! the evaluation point.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use jordan_voa::closed_form::{
    derangements_in_display_order, prop2_terms, theorem1_symbolic, theorem1_terms, CorrelatorTerm, PairSequence,
    SequenceFile, Var,
};
use jordan_voa::combinatorics::{diagram_to_derangement, enumerate_diagrams, fibre, induced_sign};
use jordan_voa::scalars::{format_rational, parse_rational};
use jordan_voa::series::{iota_expand, paired_domain, single_domain, LaurentSeries};
use jordan_voa::verify::{random_sequence, run_suite, seeded_rng, SuiteConfig, VerifyReport};
use jordan_voa::{CentralPoly, Error, Rational};
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_POLE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Correlator,
    Diagrams,
    Verify,
    Virasoro,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DataSource {
    Random,
    Virasoro,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "jordan-voa", version, about = "Exact genus-zero correlators of Jordan-algebra VOAs")]
pub struct Args {
    #[arg(long, value_enum)]
    pub command: Command,
    /// Sequence file: {"dim": d, "gram": [[...]], "pairs": [[a, b], ...]}.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Central charge parameter: "symbolic" or a rational such as 3/2.
    #[arg(long, default_value = "symbolic")]
    pub r: String,
    /// Evaluation point, e.g. "z1=1,z2=0". Missing w_i default to z_i.
    #[arg(long)]
    pub points: Option<String>,
    /// Print series coefficients with total absolute degree at most N.
    #[arg(long)]
    pub bound: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Number of pairs when no input file is given.
    #[arg(long)]
    pub n: Option<usize>,
    /// Dimension of random verification data.
    #[arg(long, default_value_t = 1)]
    pub dim: usize,
    /// Data for `verify` when no input file is given.
    #[arg(long, value_enum, default_value = "random")]
    pub data: DataSource,
    /// Also report the two-variable diagram sum.
    #[arg(long)]
    pub prop2: bool,
    /// Negative control: corrupt the closed forms before comparing.
    #[arg(long, hide = true)]
    pub corrupt: bool,
}

#[derive(Clone, Debug)]
pub enum RValue {
    Symbolic,
    Value(Rational),
}

impl RValue {
    fn label(&self) -> String {
        match self {
            RValue::Symbolic => "symbolic".into(),
            RValue::Value(q) => format_rational(q),
        }
    }

    fn apply(&self, p: &CentralPoly) -> CentralPoly {
        match self {
            RValue::Symbolic => p.clone(),
            RValue::Value(q) => CentralPoly::constant(p.eval(q)),
        }
    }
}

/// Validated job description.
#[derive(Clone, Debug)]
pub struct JobConfig {
    pub command: Command,
    pub input: Option<PathBuf>,
    pub r: RValue,
    pub points: Option<BTreeMap<Var, Rational>>,
    pub bound: Option<u32>,
    pub seed: u64,
    pub format: Format,
    pub n: Option<usize>,
    pub dim: usize,
    pub data: DataSource,
    pub prop2: bool,
    pub corrupt: bool,
}

/// What a run prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn input_error(msg: impl Into<String>) -> Self {
        Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {}\n", msg.into()) }
    }

    fn from_error(e: Error) -> Self {
        let code = if matches!(e, Error::Pole { .. }) { EXIT_POLE } else { EXIT_INPUT };
        Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

/// Parses `"z1=1,w1=1/2,z2=0"`. A variable named twice is an input error.
pub fn parse_points(s: &str) -> Result<BTreeMap<Var, Rational>, String> {
    let mut out = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let (name, value) = item.split_once('=').ok_or_else(|| format!("expected var=value, got {item:?}"))?;
        let var: Var = name.trim().parse().map_err(|e| format!("{e}"))?;
        let q = parse_rational(value.trim()).map_err(|e| format!("{e}"))?;
        if out.insert(var, q).is_some() {
            return Err(format!("{var} assigned twice"));
        }
    }
    Ok(out)
}

impl TryFrom<Args> for JobConfig {
    type Error = String;

    fn try_from(a: Args) -> Result<Self, String> {
        let r = match a.r.trim() {
            "symbolic" => RValue::Symbolic,
            v => RValue::Value(parse_rational(v).map_err(|e| format!("--r: {e}"))?),
        };
        let points = a.points.as_deref().map(parse_points).transpose()?;
        Ok(JobConfig {
            command: a.command,
            input: a.input,
            r,
            points,
            bound: a.bound,
            seed: a.seed,
            format: a.format,
            n: a.n,
            dim: a.dim,
            data: a.data,
            prop2: a.prop2,
            corrupt: a.corrupt,
        })
    }
}

/// Parses a full argument list (program name first) and runs it.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let parsed = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match JobConfig::try_from(parsed) {
        Ok(cfg) => run(&cfg),
        Err(e) => Outcome::input_error(e),
    }
}

pub fn run(cfg: &JobConfig) -> Outcome {
    match cfg.command {
        Command::Correlator => run_correlator(cfg),
        Command::Diagrams => run_diagrams(cfg),
        Command::Verify => run_verify(cfg),
        Command::Virasoro => run_virasoro(cfg),
    }
}

fn load_sequence(path: &PathBuf) -> Result<PairSequence, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let file: SequenceFile = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    PairSequence::try_from(file).map_err(|e| format!("{}: {e}", path.display()))
}

fn to_json_string(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn header(cfg: &JobConfig, command: &str, extra: &str) -> String {
    format!("# {command} r={} seed={}{extra}\n", cfg.r.label(), cfg.seed)
}

/// Terms, their value at the point and their series, for one sequence.
fn correlator_report(cfg: &JobConfig, t: &PairSequence, command: &str) -> Outcome {
    let n = t.len();
    let terms = match theorem1_terms(t) {
        Ok(x) => x,
        Err(e) => return Outcome::from_error(e),
    };
    let diagram_terms = if cfg.prop2 {
        match prop2_terms(t) {
            Ok(x) => Some(x),
            Err(e) => return Outcome::from_error(e),
        }
    } else {
        None
    };

    let point = cfg.points.as_ref().map(|p| {
        let mut full = p.clone();
        for i in 1..=n {
            if let Some(z) = p.get(&Var::z(i)) {
                full.entry(Var::w(i)).or_insert_with(|| z.clone());
            }
        }
        full
    });
    let value = match &point {
        Some(p) => match jordan_voa::closed_form::evaluate_terms(&terms, p) {
            Ok(v) => Some(cfg.r.apply(&v)),
            Err(e) => return Outcome::from_error(e),
        },
        None => None,
    };
    let diagram_value = match (&point, &diagram_terms) {
        (Some(p), Some(dt)) => match jordan_voa::closed_form::evaluate_terms(dt, p) {
            Ok(v) => Some(cfg.r.apply(&v)),
            Err(e) => return Outcome::from_error(e),
        },
        _ => None,
    };
    let series = match cfg.bound {
        Some(b) => match iota_expand(&terms, &single_domain(n), b) {
            Ok(s) => Some(s),
            Err(e) => return Outcome::from_error(e),
        },
        None => None,
    };
    let diagram_series = match (cfg.bound, &diagram_terms) {
        (Some(b), Some(dt)) => match iota_expand(dt, &paired_domain(n), b) {
            Ok(s) => Some(s),
            Err(e) => return Outcome::from_error(e),
        },
        _ => None,
    };

    let show = |t: &CorrelatorTerm| -> String {
        let c = cfg.r.apply(&t.coefficient());
        if t.denominator.is_empty() {
            c.to_string()
        } else {
            format!("{c} / {}", t.denominator_text())
        }
    };
    let series_json = |s: &LaurentSeries| -> Vec<Value> {
        s.iter().map(|(e, c)| json!({"exponents": e, "coeff": cfg.r.apply(c)})).collect()
    };

    match cfg.format {
        Format::Json => {
            let mut doc = json!({
                "command": command,
                "n": n,
                "dim": t.space().dim(),
                "r": cfg.r.label(),
                "seed": cfg.seed,
                "terms": terms.iter().map(CorrelatorTerm::to_json).collect::<Vec<_>>(),
            });
            if let Some(v) = &value {
                doc["value"] = json!(v);
            }
            if let Some(s) = &series {
                doc["bound"] = json!(cfg.bound);
                doc["series"] = json!(series_json(s));
            }
            if let Some(dt) = &diagram_terms {
                doc["diagram_terms"] = json!(dt.iter().map(CorrelatorTerm::to_json).collect::<Vec<_>>());
            }
            if let Some(v) = &diagram_value {
                doc["diagram_value"] = json!(v);
            }
            if let Some(s) = &diagram_series {
                doc["diagram_series"] = json!(series_json(s));
            }
            Outcome::ok(to_json_string(&doc))
        }
        Format::Text => {
            let mut out = header(cfg, command, &format!(" n={n} d={}", t.space().dim()));
            let _ = writeln!(out, "terms: {}", terms.len());
            let width = terms.iter().map(|t| t.cycles.chars().count()).max().unwrap_or(0);
            for term in &terms {
                let _ = writeln!(out, "{:<width$}  {}", term.cycles, show(term));
            }
            if let Some(v) = &value {
                let _ = writeln!(out, "value: {v}");
            }
            if let Some(s) = &series {
                write_series(&mut out, "series", s, &cfg.r);
            }
            if let Some(dt) = &diagram_terms {
                let _ = writeln!(out, "diagram terms: {}", dt.len());
                for term in dt {
                    let edges = term.diagram.as_ref().map(ToString::to_string).unwrap_or_default();
                    let _ = writeln!(out, "{:<width$}  {edges}  {}", term.cycles, show(term));
                }
            }
            if let Some(v) = &diagram_value {
                let _ = writeln!(out, "diagram value: {v}");
            }
            if let Some(s) = &diagram_series {
                write_series(&mut out, "diagram series", s, &cfg.r);
            }
            Outcome::ok(out)
        }
    }
}

fn write_series(out: &mut String, label: &str, s: &LaurentSeries, r: &RValue) {
    let vars: Vec<String> = s.variables().iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "{label} in ({}), bound {}: {} nonzero", vars.join(","), s.bound(), s.len());
    for (e, c) in s.iter() {
        let e: Vec<String> = e.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "  [{}]  {}", e.join(","), r.apply(c));
    }
}

/// Without an input file, prints the derangement sum with symbolic traces.
fn symbolic_report(cfg: &JobConfig, n: usize) -> Outcome {
    let terms = theorem1_symbolic(n);
    match cfg.format {
        Format::Json => {
            let items: Vec<Value> = terms
                .iter()
                .map(|t| {
                    json!({
                        "cycles": t.sigma.cycle_notation(),
                        "traces": t.traces(),
                        "r_power": t.r_power,
                        "coefficient": format_rational(&t.prefactor),
                        "denominator": t.denominator.iter().map(|f| f.to_json()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Outcome::ok(to_json_string(&json!({
                "command": "correlator",
                "n": n,
                "r": "symbolic",
                "seed": cfg.seed,
                "terms": items,
            })))
        }
        Format::Text => {
            let mut out = header(cfg, "correlator", &format!(" n={n} traces=symbolic"));
            let _ = writeln!(out, "terms: {}", terms.len());
            let width = terms.iter().map(|t| t.sigma.cycle_notation().chars().count()).max().unwrap_or(0);
            for t in &terms {
                let _ = writeln!(out, "{:<width$}  {t}", t.sigma.cycle_notation());
            }
            Outcome::ok(out)
        }
    }
}

pub fn run_correlator(cfg: &JobConfig) -> Outcome {
    match (&cfg.input, cfg.n) {
        (Some(path), _) => match load_sequence(path) {
            Ok(t) => correlator_report(cfg, &t, "correlator"),
            Err(e) => Outcome::input_error(e),
        },
        (None, Some(n)) => symbolic_report(cfg, n),
        (None, None) => Outcome::input_error("correlator needs --input FILE or --n N"),
    }
}

pub fn run_virasoro(cfg: &JobConfig) -> Outcome {
    let n = match (&cfg.input, cfg.n) {
        (_, Some(n)) => n,
        (Some(path), None) => match load_sequence(path) {
            Ok(t) => t.len(),
            Err(e) => return Outcome::input_error(e),
        },
        (None, None) => return Outcome::input_error("virasoro needs --n N"),
    };
    correlator_report(cfg, &PairSequence::virasoro(n), "virasoro")
}

pub fn run_diagrams(cfg: &JobConfig) -> Outcome {
    let n = match (&cfg.input, cfg.n) {
        (_, Some(n)) => n,
        (Some(path), None) => match load_sequence(path) {
            Ok(t) => t.len(),
            Err(e) => return Outcome::input_error(e),
        },
        (None, None) => return Outcome::input_error("diagrams needs --n N or --input FILE"),
    };
    let sigmas = derangements_in_display_order(n);
    let diagrams = enumerate_diagrams(n);
    // the diagram map is only defined from two pairs on
    let mut fibres: Vec<Option<usize>> = Vec::with_capacity(sigmas.len());
    let mut images: Vec<Option<String>> = Vec::with_capacity(diagrams.len());
    if n >= 2 {
        for s in &sigmas {
            match fibre(s) {
                Ok(f) => fibres.push(Some(f.len())),
                Err(e) => return Outcome::from_error(e),
            }
        }
        for d in &diagrams {
            match diagram_to_derangement(d) {
                Ok(s) => images.push(Some(s.cycle_notation())),
                Err(e) => return Outcome::from_error(e),
            }
        }
    } else {
        fibres.resize(sigmas.len(), None);
        images.resize(diagrams.len(), None);
    }

    match cfg.format {
        Format::Json => {
            let ds: Vec<Value> = sigmas
                .iter()
                .zip(&fibres)
                .map(|(s, f)| {
                    json!({
                        "image": s.image(),
                        "cycles": s.cycle_notation(),
                        "cycle_count": s.cycle_count(),
                        "fibre_size": f,
                    })
                })
                .collect();
            let gs: Vec<Value> = diagrams
                .iter()
                .zip(&images)
                .map(|(d, s)| json!({"edges": d.edge_labels(), "sign": induced_sign(d).to_string(), "derangement": s}))
                .collect();
            Outcome::ok(to_json_string(&json!({
                "command": "diagrams",
                "n": n,
                "seed": cfg.seed,
                "derangement_count": sigmas.len(),
                "diagram_count": diagrams.len(),
                "derangements": ds,
                "diagrams": gs,
            })))
        }
        Format::Text => {
            let mut out = format!("# diagrams n={n} seed={}\n", cfg.seed);
            let _ = writeln!(out, "derangements: {}", sigmas.len());
            let _ = writeln!(out, "diagrams: {}", diagrams.len());
            for (s, f) in sigmas.iter().zip(&fibres) {
                let image: Vec<String> = s.image().iter().map(ToString::to_string).collect();
                let f = f.map_or("-".to_string(), |k| k.to_string());
                let _ = writeln!(out, "{}  image [{}]  cycles {}  fibre {f}", s.cycle_notation(), image.join(","), s.cycle_count());
            }
            for (d, s) in diagrams.iter().zip(&images) {
                let _ = writeln!(out, "{d}  sign {}  -> {}", induced_sign(d), s.as_deref().unwrap_or("-"));
            }
            Outcome::ok(out)
        }
    }
}

pub fn run_verify(cfg: &JobConfig) -> Outcome {
    let (t, source) = match &cfg.input {
        Some(path) => match load_sequence(path) {
            Ok(t) => (t, "file"),
            Err(e) => return Outcome::input_error(e),
        },
        None => {
            let n = cfg.n.unwrap_or(2);
            match cfg.data {
                DataSource::Virasoro => (PairSequence::virasoro(n), "virasoro"),
                DataSource::Random => {
                    if cfg.dim == 0 {
                        return Outcome::input_error("--dim must be positive");
                    }
                    (random_sequence(&mut seeded_rng(cfg.seed), cfg.dim, n), "random")
                }
            }
        }
    };
    let n = t.len();
    let bound = cfg.bound.unwrap_or(2 * n as u32 + 2);
    let mut suite = SuiteConfig::new(cfg.seed);
    suite.bound = Some(bound);
    suite.corrupt = cfg.corrupt;
    let report = match run_suite(&t, &suite) {
        Ok(r) => r,
        Err(e) => return Outcome::from_error(e),
    };
    let code = if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };
    let stdout = match cfg.format {
        Format::Json => to_json_string(&json!({
            "command": "verify",
            "seed": cfg.seed,
            "n": n,
            "dim": t.space().dim(),
            "bound": bound,
            "data_source": source,
            "data": t.to_file(),
            "passed": report.passed(),
            "cases": report.cases,
        })),
        Format::Text => verify_text(cfg, &t, source, bound, &report),
    };
    Outcome { code, stdout, stderr: String::new() }
}

fn verify_text(cfg: &JobConfig, t: &PairSequence, source: &str, bound: u32, report: &VerifyReport) -> String {
    let mut out = format!(
        "# verify seed={} n={} d={} bound={bound} data={source}\n",
        cfg.seed,
        t.len(),
        t.space().dim()
    );
    let _ = writeln!(out, "# data {}", serde_json::to_string(&t.to_file()).expect("data serializes"));
    for c in &report.cases {
        match &c.mismatch {
            None => {
                let _ = writeln!(out, "PASS {} ({} checked, {} nonzero)", c.name, c.checked, c.nonzero);
            }
            Some(m) => {
                let _ = writeln!(out, "FAIL {}: {m}", c.name);
            }
        }
    }
    let _ = writeln!(out, "result: {}", if report.passed() { "PASS" } else { "FAIL" });
    out
}
