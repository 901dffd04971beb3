//! Command-line driver. Output goes to the given writers so that commands
//! can be exercised in-process.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use monoinv_core::gin::{gin, GinConfig};
use monoinv_core::{Ideal, MonomialIdeal, MultiIndex, PrimeField, DEFAULT_PRIME};

use crate::corpus_file::{self, CorpusFile, FileError};
use crate::parse::{parse_ideal, ParseError, ParseErrorKind};
use crate::regen;
use crate::report::{self, full_report, level_box, RunOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;
pub const EXIT_COMPUTATION: i32 = 4;
pub const EXIT_CHECK_FAILED: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "monoinv", version, about = "Generic initial ideals and monomial invariants of codimension-two varieties")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Ideal file: a corpus file or a plain list of generators.
    #[arg(long = "in", global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Generators separated by commas, e.g. "x0*x2 - x1^2, x0*x3 - x1*x2".
    #[arg(long, global = true, value_name = "STR")]
    pub gens: Option<String>,
    /// Ambient projective dimension; the ring has n + 1 variables.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Field characteristic [default: 32003, or the prime of a corpus file].
    #[arg(long, global = true)]
    pub prime: Option<u32>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Agreeing coordinate samples required for gin.
    #[arg(long, global = true, default_value_t = 2)]
    pub votes: usize,
    #[arg(long, global = true)]
    pub dmax: Option<u32>,
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generic initial ideal with the voting certificate.
    Gin,
    /// Table of monomial invariants and s_Z, s_Gamma.
    Invariants,
    /// Connectedness of the invariants plus the slice, gap and trace checks.
    Check,
    /// Compare gin((I : h^p)|_h) with (gin(I) : x_n^p)|_{x_n}.
    Slice {
        #[arg(long, default_value_t = 3)]
        forms: usize,
        #[arg(long, default_value_t = 3)]
        p_max: u32,
    },
    /// Borel-fixedness of a monomial ideal.
    Borel,
    /// Hilbert function of the quotient ring.
    Hilbert,
    /// Iterated quotient-restriction ideal J, gap degree and gcd degree.
    Trace {
        /// Comma-separated multi-index; all indices up to --level when absent.
        #[arg(long)]
        p_hat: Option<String>,
        #[arg(long, default_value_t = 2)]
        level: u32,
        #[arg(long, default_value_t = 3)]
        specializations: usize,
    },
    /// Full run over every file of a corpus directory.
    CorpusRun {
        #[arg(long, value_name = "DIR")]
        dir: Option<PathBuf>,
    },
    /// Rewrite the corpus directory from the built-in constructors.
    CorpusRegen {
        #[arg(long, value_name = "DIR")]
        dir: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure { code: EXIT_PARSE, message: message.into() }
    }

    fn config(message: impl Into<String>) -> Self {
        Failure { code: EXIT_CONFIG, message: message.into() }
    }

    fn computation(e: monoinv_core::Error) -> Self {
        Failure { code: EXIT_COMPUTATION, message: e.to_string() }
    }

    fn check(message: impl Into<String>) -> Self {
        Failure { code: EXIT_CHECK_FAILED, message: message.into() }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        match e.kind {
            ParseErrorKind::CoefficientTooLarge(_) => Failure::config(e.to_string()),
            _ => Failure::parse(e.to_string()),
        }
    }
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Self {
        match e {
            FileError::Io { .. } => Failure::config(e.to_string()),
            FileError::Parse { source, path } => {
                let f = Failure::from(source);
                Failure { message: format!("{}: {}", path.display(), f.message), ..f }
            }
            FileError::Format { .. } => Failure::parse(e.to_string()),
        }
    }
}

impl From<monoinv_core::Error> for Failure {
    fn from(e: monoinv_core::Error) -> Self {
        Failure::computation(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::config(e.to_string())
    }
}

pub fn default_corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

struct Input {
    ideal: Ideal,
    name: Option<String>,
    expected: Option<monoinv_core::corpus::Expected>,
}

fn field(g: &GlobalArgs, file_prime: Option<u32>) -> Result<PrimeField, Failure> {
    let p = g.prime.or(file_prime).unwrap_or(DEFAULT_PRIME);
    PrimeField::new(p).map_err(|e| Failure::config(e.to_string()))
}

fn load_input(g: &GlobalArgs) -> Result<Input, Failure> {
    let nvars = g.n.map(|n| n + 1);
    match (&g.input, &g.gens) {
        (Some(_), Some(_)) => Err(Failure::config("give either --in or --gens, not both")),
        (None, None) => Err(Failure::config("no ideal given: use --in FILE or --gens STR")),
        (None, Some(text)) => Ok(Input { ideal: parse_ideal(text, field(g, None)?, nvars)?, name: None, expected: None }),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::config(format!("{}: {e}", path.display())))?;
            if text.lines().any(|l| l.trim() == "gens:") {
                let file = CorpusFile::parse(&text, path)?;
                if g.prime.is_some_and(|p| p != file.prime) {
                    return Err(Failure::config("--prime differs from the prime of the corpus file"));
                }
                let e = file.entry;
                Ok(Input { ideal: e.ideal, name: Some(e.name), expected: Some(e.expected) })
            } else {
                let ideal = parse_ideal(&text, field(g, None)?, nvars).map_err(|e| {
                    let f = Failure::from(e);
                    Failure { message: format!("{}: {}", path.display(), f.message), ..f }
                })?;
                Ok(Input { ideal, name: None, expected: None })
            }
        }
    }
}

fn gin_config(g: &GlobalArgs) -> Result<GinConfig, Failure> {
    GinConfig::new(g.seed, g.votes).map_err(|e| Failure::config(e.to_string()))
}

fn paren_list(items: &[String]) -> String {
    format!("({})", items.join(", "))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Failure::config(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn require_proper(ideal: &Ideal) -> Result<(), Failure> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Failure::computation(monoinv_core::Error::InvalidArgument("the ideal must be nonzero and proper")));
    }
    Ok(())
}

fn ideal_strings(ideal: &Ideal) -> Vec<String> {
    ideal.generators().iter().map(|f| f.to_string()).collect()
}

fn cmd_gin(g: &GlobalArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let input = load_input(g)?;
    require_proper(&input.ideal)?;
    let r = gin(&input.ideal, &gin_config(g)?)?;
    let gens = report::monomials(&r.gin);
    if g.json {
        emit_json(
            out,
            &json!({
                "ideal": ideal_strings(&input.ideal),
                "seed": g.seed,
                "prime": input.ideal.ring().field().characteristic(),
                "gin": gens,
                "agreed": r.agreed,
                "samples_used": r.samples_used,
            }),
        )
    } else {
        writeln!(out, "gin: {}", paren_list(&gens))?;
        writeln!(out, "agreed: {}", r.agreed)?;
        writeln!(out, "samples: {}", r.samples_used)?;
        writeln!(out, "seed: {}", g.seed)?;
        Ok(())
    }
}

fn cmd_invariants(g: &GlobalArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let input = load_input(g)?;
    require_proper(&input.ideal)?;
    let inv = monoinv_core::variety_invariants(&input.ideal, &gin_config(g)?)?;
    let rows = report::table_rows(&inv);
    if g.json {
        return emit_json(
            out,
            &json!({
                "gin": report::monomials(&inv.gin.gin),
                "invariant_table": rows,
                "s_Z": inv.s_z,
                "s_Gamma": inv.s_gamma,
            }),
        );
    }
    writeln!(out, "gin: {}", inv.gin.gin)?;
    for r in &rows {
        let lambda: Vec<String> = r.lambda.iter().map(u32::to_string).collect();
        writeln!(out, "p_hat={} s={} lambda=({})", MultiIndex(r.p_hat.clone()), r.s, lambda.join(","))?;
    }
    writeln!(out, "s_Z={} s_Gamma={}", inv.s_z, inv.s_gamma)?;
    Ok(())
}

fn run_options(g: &GlobalArgs) -> RunOptions {
    RunOptions { seed: g.seed, votes: g.votes, ..RunOptions::default() }
}

fn cmd_check(g: &GlobalArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let input = load_input(g)?;
    require_proper(&input.ideal)?;
    gin_config(g)?;
    let r = full_report(input.name.as_deref(), &input.ideal, input.expected.as_ref(), &run_options(g))?;
    if g.json {
        emit_json(out, &r)?;
    } else {
        writeln!(
            out,
            "s_Z={} s_Gamma={} hypothesis={} connected={}",
            r.s_z,
            r.s_gamma,
            yes(r.hypothesis),
            yes(r.connected)
        )?;
        for v in &r.violations {
            writeln!(
                out,
                "violation: p_hat={} i={} lambda_i={} lambda_i+1={}",
                MultiIndex(v.p_hat.clone()),
                v.index,
                v.lambda_i,
                v.lambda_next
            )?;
        }
        writeln!(out, "levels_0_1_connected={}", yes(r.low_levels_connected))?;
        let c = &r.checks;
        writeln!(out, "slice: {}", if c.slice.passed { "pass" } else { "FAIL" })?;
        let gap = if c.gap_truncation.vacuous {
            "vacuous"
        } else if c.gap_truncation.passed {
            "pass"
        } else {
            "FAIL"
        };
        writeln!(out, "gap_truncation: {gap}")?;
        writeln!(out, "proof_trace: {}", if c.proof_trace.passed { "pass" } else { "FAIL" })?;
        for m in &r.expectation_mismatches {
            writeln!(out, "mismatch: {m}")?;
        }
    }
    if r.passed {
        Ok(())
    } else {
        Err(Failure::check(json!({"failed": r.name.unwrap_or_else(|| "input".into())}).to_string()))
    }
}

fn cmd_slice(g: &GlobalArgs, forms: usize, p_max: u32, out: &mut dyn Write) -> Result<(), Failure> {
    let input = load_input(g)?;
    require_proper(&input.ideal)?;
    let cfg = gin_config(g)?;
    let gi = gin(&input.ideal, &cfg)?.gin;
    let opts = RunOptions { slice_forms: forms, slice_p_max: p_max, ..run_options(g) };
    let s = report::slice_summary(&input.ideal, &gi, &opts, &cfg.derive("slice", 0))?;
    if g.json {
        emit_json(out, &s)?;
    } else {
        for c in &s.checks {
            writeln!(
                out,
                "form={} p={} equal={} lhs={} rhs={}",
                c.form,
                c.p,
                yes(c.equal),
                paren_list(&c.lhs),
                paren_list(&c.rhs)
            )?;
        }
    }
    if s.passed {
        Ok(())
    } else {
        Err(Failure::check(r#"{"failed":"slice"}"#))
    }
}

fn monomial_input(ideal: &Ideal) -> Result<MonomialIdeal, Failure> {
    let monos = ideal
        .generators()
        .iter()
        .map(|f| match f.terms() {
            [t] => Some(t.mono),
            _ => None,
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Failure::parse("borel expects monomial generators"))?;
    Ok(MonomialIdeal::new(ideal.ring().nvars(), monos)?)
}

fn cmd_borel(g: &GlobalArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let m = monomial_input(&load_input(g)?.ideal)?;
    let w = m.borel_violation();
    if g.json {
        let witness = w.map(|w| json!({"generator": w.generator.to_string(), "move": w.move_index}));
        return emit_json(out, &json!({"ideal": report::monomials(&m), "borel_fixed": w.is_none(), "witness": witness}));
    }
    match w {
        None => writeln!(out, "borel_fixed: true")?,
        Some(w) => writeln!(out, "borel_fixed: false witness: ({}, e_{})", w.generator, w.move_index)?,
    }
    Ok(())
}

fn cmd_hilbert(g: &GlobalArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let ideal = load_input(g)?.ideal;
    let initial = ideal.initial_ideal();
    let n = ideal.ring().nvars() as u32 - 1;
    let dmax = g.dmax.unwrap_or(initial.max_degree().unwrap_or(0) + n + 1);
    let h = initial.hilbert_function(dmax);
    if g.json {
        return emit_json(out, &json!({"initial_ideal": report::monomials(&initial), "dmax": dmax, "values": h.values}));
    }
    for (d, v) in h.values.iter().enumerate() {
        writeln!(out, "H({d})={v}")?;
    }
    Ok(())
}

fn cmd_trace(
    g: &GlobalArgs,
    p_hat: Option<&str>,
    level: u32,
    specializations: usize,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let input = load_input(g)?;
    require_proper(&input.ideal)?;
    let cfg = gin_config(g)?;
    let gi = gin(&input.ideal, &cfg)?.gin;
    let len = input.ideal.ring().nvars().saturating_sub(3);
    let indices = match p_hat {
        Some(s) => {
            let v = s
                .split(',')
                .filter(|w| !w.trim().is_empty())
                .map(|w| w.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| Failure::parse(format!("invalid multi-index {s:?}")))?;
            if v.len() != len {
                return Err(Failure::config(format!("multi-index needs {len} entries")));
            }
            vec![MultiIndex(v)]
        }
        None => level_box(len, level),
    };
    let opts = RunOptions { specializations, ..run_options(g) };
    let rows = indices
        .iter()
        .enumerate()
        .map(|(k, p)| report::trace_row(&input.ideal, &gi, p, &opts, &cfg.derive("trace", k as u64)))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = rows.iter().all(|r| r.passed);
    if g.json {
        emit_json(out, &json!({"passed": passed, "traces": rows}))?;
    } else {
        for r in &rows {
            writeln!(
                out,
                "p_hat={} gin_J={} step1={} delta={}{} deg_F={} expected={} step2={} family={:?}",
                MultiIndex(r.p_hat.clone()),
                paren_list(&r.gin_j),
                yes(r.step1),
                r.delta,
                if r.delta_internal { "" } else { " (past last generator)" },
                r.f_degree,
                r.expected_f_degree,
                yes(r.step2),
                r.family_degrees
            )?;
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::check(r#"{"failed":"proof_trace"}"#))
    }
}

fn cmd_corpus_run(g: &GlobalArgs, dir: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    gin_config(g)?;
    let dir = dir.map(Path::to_path_buf).unwrap_or_else(default_corpus_dir);
    let files = corpus_file::read_dir(&dir)?;
    if files.is_empty() {
        return Err(Failure::config(format!("no .ideal files in {}", dir.display())));
    }
    let entries: Vec<_> = files.into_iter().map(|f| f.entry).collect();
    let r = report::corpus_report(&entries, &run_options(g));
    if g.json {
        emit_json(out, &r)?;
    } else {
        for e in &r.entries {
            match e {
                report::EntryOutcome::Report(rep) => writeln!(
                    out,
                    "{:<22} {} s_Z={} s_Gamma={} hypothesis={} connected={} gin={}",
                    e.name(),
                    if rep.passed { "pass" } else { "FAIL" },
                    rep.s_z,
                    rep.s_gamma,
                    yes(rep.hypothesis),
                    yes(rep.connected),
                    paren_list(&rep.gin)
                )?,
                report::EntryOutcome::Error { name, error } => writeln!(out, "{name:<22} ERROR {error}")?,
            }
        }
    }
    if r.passed {
        Ok(())
    } else {
        let failed: Vec<&str> = r.entries.iter().filter(|e| !e.passed()).map(|e| e.name()).collect();
        Err(Failure::check(json!({ "failed": failed }).to_string()))
    }
}

fn cmd_corpus_regen(g: &GlobalArgs, dir: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    let dir = dir.map(Path::to_path_buf).unwrap_or_else(default_corpus_dir);
    std::fs::create_dir_all(&dir)?;
    for file in regen::regenerate(field(g, None)?, g.seed)? {
        let path = dir.join(format!("{}.ideal", file.entry.name));
        file.write(&path)?;
        writeln!(out, "{}", path.display())?;
    }
    Ok(())
}

/// Runs a parsed command line and returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let g = &cli.global;
    let result = match &cli.command {
        Command::Gin => cmd_gin(g, out),
        Command::Invariants => cmd_invariants(g, out),
        Command::Check => cmd_check(g, out),
        Command::Slice { forms, p_max } => cmd_slice(g, *forms, *p_max, out),
        Command::Borel => cmd_borel(g, out),
        Command::Hilbert => cmd_hilbert(g, out),
        Command::Trace { p_hat, level, specializations } => cmd_trace(g, p_hat.as_deref(), *level, *specializations, out),
        Command::CorpusRun { dir } => cmd_corpus_run(g, dir.as_deref(), out),
        Command::CorpusRegen { dir } => cmd_corpus_regen(g, dir.as_deref(), out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Parses `args` (program name first) and runs them.
pub fn run_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            code
        }
    }
}
