//! Command-line front end: parse a semigroup, dispatch to the solvers and
//! render text, JSON or CSV reports.
//!
//! Exit codes: 0 success, 1 parse or usage errors, 2 undefined invariants
//! (smooth input, undefined Clifford index, empty dual), 3 internal
//! assertion failures.

use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use cliffsemi::{
    clifford_brute_oracle, clifford_of_curve, nonplanar_family, plane_closed_form,
    survey_row, CurveReport, Error, MonomialSheaf, NumericalSemigroup, Pencil, ScrollReport,
    SemigroupSpec, SurveyRow, SCHEMA_VERSION, SURVEY_COLUMNS, SURVEY_SCHEMA_COMMENT,
};

/// Default bound on the genus of analyzed or enumerated semigroups;
/// the CLIFFSEMI_MAX_GENUS environment variable overrides it.
const DEFAULT_MAX_GENUS: usize = 25;
/// Hard bound for the brute-force oracle subcommand.
const ORACLE_MAX_GENUS: usize = 8;

#[derive(Parser)]
#[command(
    name = "cliffsemi",
    version,
    about = "Clifford index, gonality and scroll geometry of unicuspidal monomial curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for one curve
    Analyze {
        /// Semigroup description: "5,6" (generators) or "gaps:1,2,3"
        input: Option<String>,
        /// Generators, comma separated
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        gens: Option<Vec<u64>>,
        /// Gap set, comma separated
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        gaps: Option<Vec<u64>>,
        /// Plane curve <alpha, alpha+1>; cross-checked against its closed form
        #[arg(long, value_name = "ALPHA")]
        plane_family: Option<u64>,
        /// Nonplanar family member of multiplicity alpha; cross-checked
        #[arg(long, value_name = "ALPHA")]
        nonplanar_family: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Genus bound for this run (default 25 or CLIFFSEMI_MAX_GENUS)
        #[arg(long)]
        max_genus: Option<usize>,
        /// Also run the brute-force oracle and require agreement (genus <= 12)
        #[arg(long)]
        with_oracle: bool,
    },
    /// Pencil matrix and rational normal scroll of a sheaf
    Scroll {
        /// Semigroup description: "5,6" (generators) or "gaps:1,2,3"
        input: Option<String>,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        gens: Option<Vec<u64>>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        gaps: Option<Vec<u64>>,
        /// Sheaf generator exponents, e.g. 4,5,6
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        sheaf: Vec<i64>,
        /// Two section exponents spanning the pencil, e.g. 0,5
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        pencil: Vec<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// One row of invariants per semigroup of genus up to the bound
    Survey {
        #[arg(long, default_value_t = 6)]
        max_genus: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Worker threads (0 = one per core); output order is independent
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Cross-check the Clifford solver against the brute-force oracle
    Oracle {
        #[arg(long, default_value_t = 6)]
        max_genus: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

fn main() {
    let code = match std::panic::catch_unwind(run) {
        Ok(Ok(output)) => {
            print!("{output}");
            0
        }
        Ok(Err((code, message))) => {
            eprintln!("error: {message}");
            code
        }
        Err(_) => {
            eprintln!("error: internal assertion failure");
            3
        }
    };
    std::process::exit(code);
}

type CmdResult = Result<String, (i32, String)>;

fn run() -> CmdResult {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match cli.command {
        Command::Analyze {
            input,
            gens,
            gaps,
            plane_family,
            nonplanar_family,
            format,
            max_genus,
            with_oracle,
        } => cmd_analyze(
            input,
            gens,
            gaps,
            plane_family,
            nonplanar_family,
            format,
            max_genus,
            with_oracle,
        ),
        Command::Scroll {
            input,
            gens,
            gaps,
            sheaf,
            pencil,
            format,
        } => cmd_scroll(input, gens, gaps, sheaf, pencil, format),
        Command::Survey {
            max_genus,
            format,
            jobs,
        } => cmd_survey(max_genus, format, jobs),
        Command::Oracle { max_genus, jobs } => cmd_oracle(max_genus, jobs),
    }
}

fn lib_err(e: Error) -> (i32, String) {
    let code = match e {
        Error::SmoothCurve
        | Error::CliffordUndefined { .. }
        | Error::EmptyDual
        | Error::NotAPencilSource { .. } => 2,
        Error::ChainConsistency(_) => 3,
        _ => 1,
    };
    (code, e.to_string())
}

fn usage(message: impl Into<String>) -> (i32, String) {
    (1, message.into())
}

fn safety_cap() -> usize {
    std::env::var("CLIFFSEMI_MAX_GENUS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_GENUS)
}

/// Which curve the user asked for, plus closed-form expectations for the
/// built-in families.
enum CurveInput {
    Spec(SemigroupSpec),
    Plane(u64),
    Nonplanar(u64),
}

fn resolve_input(
    input: Option<String>,
    gens: Option<Vec<u64>>,
    gaps: Option<Vec<u64>>,
    plane_family: Option<u64>,
    nonplanar_family: Option<u64>,
) -> Result<CurveInput, (i32, String)> {
    let mut sources: Vec<CurveInput> = Vec::new();
    if let Some(text) = input {
        sources.push(CurveInput::Spec(
            text.parse::<SemigroupSpec>().map_err(lib_err)?,
        ));
    }
    if let Some(g) = gens {
        sources.push(CurveInput::Spec(SemigroupSpec::Generators(g)));
    }
    if let Some(g) = gaps {
        sources.push(CurveInput::Spec(SemigroupSpec::Gaps(g)));
    }
    if let Some(alpha) = plane_family {
        sources.push(CurveInput::Plane(alpha));
    }
    if let Some(alpha) = nonplanar_family {
        sources.push(CurveInput::Nonplanar(alpha));
    }
    match sources.len() {
        0 => Err(usage(
            "no curve given: pass a positional description, --gens, --gaps, \
             --plane-family or --nonplanar-family",
        )),
        1 => Ok(sources.pop().unwrap()),
        _ => Err(usage("give exactly one curve description")),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_analyze(
    input: Option<String>,
    gens: Option<Vec<u64>>,
    gaps: Option<Vec<u64>>,
    plane_family: Option<u64>,
    nonplanar_family: Option<u64>,
    format: Format,
    max_genus: Option<usize>,
    with_oracle: bool,
) -> CmdResult {
    let resolved = resolve_input(input, gens, gaps, plane_family, nonplanar_family)?;
    let mut notes: Vec<String> = Vec::new();
    let semigroup = match &resolved {
        CurveInput::Spec(spec) => spec.build().map_err(lib_err)?,
        CurveInput::Plane(alpha) => plane_closed_form(*alpha).map_err(lib_err)?.semigroup,
        CurveInput::Nonplanar(alpha) => nonplanar_family_build(*alpha)?,
    };
    let cap = max_genus.unwrap_or_else(safety_cap);
    if semigroup.genus() > cap {
        return Err(usage(format!(
            "genus {} exceeds the cap {cap}; raise --max-genus or CLIFFSEMI_MAX_GENUS",
            semigroup.genus()
        )));
    }
    let s = Arc::new(semigroup);
    let report = CurveReport::analyze(&s).map_err(lib_err)?;
    if !report.all_relations_hold() {
        return Err((3, "theorem-backed relation checks failed".into()));
    }

    match &resolved {
        CurveInput::Plane(alpha) => {
            check_plane_family(&s, &report, *alpha)?;
            notes.push(format!("closed form for plane multiplicity {alpha}: consistent"));
        }
        CurveInput::Nonplanar(alpha) => {
            check_nonplanar_family(&s, &report, *alpha)?;
            notes.push(format!(
                "closed form for nonplanar multiplicity {alpha}: consistent"
            ));
        }
        CurveInput::Spec(_) => {}
    }
    if with_oracle {
        let fast = clifford_of_curve(&s).map_err(lib_err)?;
        let slow = clifford_brute_oracle(&s, s.genus()).map_err(lib_err)?;
        if !fast.agrees_with(&slow) {
            return Err((3, "solver disagrees with the brute-force oracle".into()));
        }
        notes.push("brute-force oracle: agreement".into());
    }

    match format {
        Format::Text => {
            let mut out = report.to_text();
            for note in notes {
                out += &format!("note: {note}\n");
            }
            Ok(out)
        }
        Format::Json => Ok(to_json(&report)?),
        Format::Csv => Err(usage("analyze supports --format text or json")),
    }
}

fn nonplanar_family_build(alpha: u64) -> Result<NumericalSemigroup, (i32, String)> {
    Ok(nonplanar_family(alpha).map_err(lib_err)?.semigroup)
}

fn check_plane_family(
    s: &Arc<NumericalSemigroup>,
    report: &CurveReport,
    alpha: u64,
) -> Result<(), (i32, String)> {
    let facts = plane_closed_form(alpha).map_err(lib_err)?;
    let witness = MonomialSheaf::new(
        s,
        &facts
            .witness_exponents
            .iter()
            .map(|&e| e as i64)
            .collect::<Vec<_>>(),
    );
    let witness_listed = report
        .computing_sheaves
        .iter()
        .map(|rec| sheaf_of_record(s, &rec.exponents))
        .any(|f| f.dedup_key() == witness.dedup_key());
    let ok = report.clifford == facts.clifford
        && report.clifford_dimension == facts.clifford_dimension
        && report.gonality == facts.gonality
        && witness_listed;
    if ok {
        Ok(())
    } else {
        Err((3, "solver output contradicts the plane closed form".into()))
    }
}

fn check_nonplanar_family(
    s: &Arc<NumericalSemigroup>,
    report: &CurveReport,
    alpha: u64,
) -> Result<(), (i32, String)> {
    let facts = nonplanar_family(alpha).map_err(lib_err)?;
    let outcome = clifford_of_curve(s).map_err(lib_err)?;
    let ok = report.clifford == facts.clifford
        && report.clifford_dimension == facts.clifford_dimension
        && outcome.computing.iter().all(|f| !f.is_invertible());
    if ok {
        Ok(())
    } else {
        Err((3, "solver output contradicts the nonplanar closed form".into()))
    }
}

fn sheaf_of_record(s: &Arc<NumericalSemigroup>, exponents: &[u64]) -> MonomialSheaf {
    let exps: Vec<i64> = exponents.iter().map(|&e| e as i64).collect();
    MonomialSheaf::new(s, &exps)
}

fn cmd_scroll(
    input: Option<String>,
    gens: Option<Vec<u64>>,
    gaps: Option<Vec<u64>>,
    sheaf_exponents: Vec<i64>,
    pencil: Vec<u64>,
    format: Format,
) -> CmdResult {
    let resolved = resolve_input(input, gens, gaps, None, None)?;
    let CurveInput::Spec(spec) = resolved else {
        unreachable!("scroll takes no family selectors")
    };
    let s = Arc::new(spec.build().map_err(lib_err)?);
    let [u, v] = pencil[..] else {
        return Err(usage("--pencil takes exactly two exponents, e.g. --pencil 0,5"));
    };
    let sheaf = MonomialSheaf::new(&s, &sheaf_exponents);
    let pencil = Pencil::new(&sheaf, u, v).map_err(lib_err)?;
    let matrix = pencil.matrix().map_err(lib_err)?;
    let scroll = pencil.scroll_type().map_err(lib_err)?;
    let (u, v) = pencil.exponents();
    let report = ScrollReport::new(&s, &sheaf, u, v, pencil.is_standard(), &matrix, &scroll);
    match format {
        Format::Text => Ok(report.to_text()),
        Format::Json => Ok(to_json(&report)?),
        Format::Csv => Err(usage("scroll supports --format text or json")),
    }
}

fn cmd_survey(max_genus: usize, format: Format, jobs: usize) -> CmdResult {
    let cap = safety_cap();
    if max_genus > cap {
        return Err(usage(format!(
            "survey bound {max_genus} exceeds the cap {cap}; raise CLIFFSEMI_MAX_GENUS"
        )));
    }
    let semigroups: Vec<Arc<NumericalSemigroup>> = cliffsemi::enumerate_semigroups(max_genus)
        .map(Arc::new)
        .collect();
    let rows = in_pool(jobs, || {
        semigroups.par_iter().map(survey_row).collect::<Vec<_>>()
    })?;
    match format {
        Format::Csv => {
            let mut out = String::new();
            out += SURVEY_SCHEMA_COMMENT;
            out.push('\n');
            out += &SURVEY_COLUMNS.join(",");
            out.push('\n');
            for row in &rows {
                out += &row.csv_line();
                out.push('\n');
            }
            Ok(out)
        }
        Format::Json => {
            let doc = SurveyDoc {
                schema_version: SCHEMA_VERSION,
                max_genus,
                rows,
            };
            Ok(to_json(&doc)?)
        }
        Format::Text => Err(usage("survey supports --format csv or json")),
    }
}

#[derive(serde::Serialize)]
struct SurveyDoc {
    schema_version: u32,
    max_genus: usize,
    rows: Vec<SurveyRow>,
}

fn cmd_oracle(max_genus: usize, jobs: usize) -> CmdResult {
    if max_genus > ORACLE_MAX_GENUS {
        return Err(lib_err(Error::GenusTooLarge {
            genus: max_genus,
            max: ORACLE_MAX_GENUS,
        }));
    }
    let semigroups: Vec<Arc<NumericalSemigroup>> = cliffsemi::enumerate_semigroups(max_genus)
        .map(Arc::new)
        .collect();
    let failures: Vec<String> = in_pool(jobs, || {
        semigroups
            .par_iter()
            .filter_map(|s| check_one_semigroup(s).err())
            .collect()
    })?;
    let mut out = String::new();
    for g in 0..=max_genus {
        let count = semigroups.iter().filter(|s| s.genus() == g).count();
        out += &format!("genus {g}: {count} semigroups checked\n");
    }
    if failures.is_empty() {
        out += &format!(
            "oracle: PASS ({} semigroups of genus <= {max_genus})\n",
            semigroups.len()
        );
        Ok(out)
    } else {
        for f in &failures {
            eprintln!("oracle mismatch: {f}");
        }
        Err((3, format!("{} oracle mismatches", failures.len())))
    }
}

/// Solver-vs-oracle agreement plus the dual-route Clifford check on every
/// candidate sheaf of one semigroup.
fn check_one_semigroup(s: &Arc<NumericalSemigroup>) -> Result<(), String> {
    if s.is_smooth() {
        return Ok(());
    }
    // Materializing a sheaf re-derives every invariant and asserts the
    // definitional and combinatorial Clifford routes agree.
    let mut candidate_mismatch = None;
    cliffsemi::visit_candidates(s, |c| {
        if candidate_mismatch.is_some() {
            return;
        }
        let sheaf = MonomialSheaf::new(
            s,
            &c.section_exponents(s)
                .iter()
                .map(|&e| e as i64)
                .collect::<Vec<_>>(),
        );
        let inv = sheaf.invariants();
        if (inv.h0, inv.h1, inv.degree, inv.clifford) != (c.h0, c.h1, c.degree, c.clifford) {
            candidate_mismatch = Some(format!(
                "{s}: candidate a_max={} disagrees with sheaf invariants",
                c.a_max
            ));
        }
    });
    if let Some(m) = candidate_mismatch {
        return Err(m);
    }
    let fast = clifford_of_curve(s);
    let slow = clifford_brute_oracle(s, s.genus());
    match (fast, slow) {
        (Ok(a), Ok(b)) => {
            if a.agrees_with(&b) {
                Ok(())
            } else {
                Err(format!(
                    "{s}: solver found {} (dim {}), oracle found {} (dim {})",
                    a.clifford, a.clifford_dimension, b.clifford, b.clifford_dimension
                ))
            }
        }
        (Err(a), Err(b)) if a == b => Ok(()),
        (a, b) => Err(format!("{s}: outcomes differ: {a:?} vs {b:?}")),
    }
}

fn in_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> Result<T, (i32, String)> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| (1, format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(work))
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, (i32, String)> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| (3, format!("cannot serialize report: {e}")))
}
