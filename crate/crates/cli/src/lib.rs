//! Command-line driver: parses ideal and decomposition files, runs the
//! searches and prints plain text or JSON.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use stanley_core::families::{family_ideal, instantiate, FamilySpec};
use stanley_core::format::{self, IdealFile};
use stanley_core::search::{self, Decision, DepthResult, DepthStatus, SearchBudget};
use stanley_core::{
    CharacteristicPoset, Error, ExponentVector, Partition, StanleyDecomposition, Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "stanley",
    version,
    about = "Exact Stanley depth and fdepth of monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Print JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,

    /// Use this g instead of the join of the generators, e.g. "7 6"
    #[arg(long, value_name = "EXPONENTS", global = true)]
    g: Option<String>,

    /// Stop searching after this many seconds
    #[arg(long, value_name = "SECONDS", global = true)]
    time_limit: Option<f64>,

    /// Stop searching after this many search nodes
    #[arg(long, value_name = "N", global = true)]
    node_limit: Option<u64>,

    /// Worker threads (default: all cores)
    #[arg(
        long,
        value_name = "N",
        global = true,
        conflicts_with = "single_thread"
    )]
    threads: Option<usize>,

    /// Run the sequential reference search (reproducible witnesses)
    #[arg(long, global = true)]
    single_thread: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stanley depth
    Sdepth {
        file: PathBuf,
        /// Also print the partition and its Stanley decomposition
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        common: Common,
    },
    /// fdepth (best prime filtration)
    Fdepth {
        file: PathBuf,
        /// Also print the ordered partition and the filtration it induces
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Krull dimension
    Dim {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Cheap lower and upper bounds
    Bounds {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// A Stanley decomposition with sdepth at least TARGET
    Decompose {
        file: PathBuf,
        #[arg(long)]
        target: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Check a decomposition file against an ideal file
    Verify {
        ideal: PathBuf,
        decomposition: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Dump the characteristic poset, one point per line with its rho
    Poset {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Instantiate a named family (maximal N, skeleton N D, figure1, figure4, rp2, delta-12-34)
    Family {
        name: String,
        params: Vec<usize>,
        /// Take S/I instead of I
        #[arg(long)]
        quotient: bool,
        /// Write the ideal file
        #[arg(long)]
        emit: bool,
        /// Write to this path instead of standard output
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Serialize)]
struct IntervalJson {
    bottom: Vec<u32>,
    top: Vec<u32>,
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    value: Value,
    status: &'static str,
    witness: Option<Vec<IntervalJson>>,
    poset_size: Option<usize>,
    elapsed_ms: u128,
    #[serde(flatten)]
    extra: serde_json::Map<String, Value>,
}

impl Report {
    fn new(command: &'static str, started: Instant) -> Self {
        Report {
            command,
            value: Value::Null,
            status: "exact",
            witness: None,
            poset_size: None,
            elapsed_ms: started.elapsed().as_millis(),
            extra: Default::default(),
        }
    }
}

fn witness_json(p: &Partition) -> Vec<IntervalJson> {
    p.interval_vectors()
        .into_iter()
        .map(|(c, d)| IntervalJson {
            bottom: c.entries().to_vec(),
            top: d.entries().to_vec(),
        })
        .collect()
}

/// Failure that ends a command with a message and an exit code.
struct Fail(i32, String);

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail(EXIT_USAGE, e.to_string())
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(EXIT_USAGE, e.to_string())
    }
}

type CmdResult = Result<i32, Fail>;

struct Ctx<'a> {
    out: &'a mut dyn Write,
    common: Common,
    started: Instant,
}

impl Ctx<'_> {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            time_limit: self.common.time_limit.map(Duration::from_secs_f64),
            node_limit: self.common.node_limit,
            threads: if self.common.single_thread {
                Some(1)
            } else {
                self.common.threads
            },
        }
    }

    fn emit_json(&mut self, report: &Report) -> std::io::Result<()> {
        serde_json::to_writer(&mut *self.out, report)?;
        writeln!(self.out)
    }

    fn empty_module(&mut self, command: &'static str) -> CmdResult {
        if self.common.json {
            let mut r = Report::new(command, self.started);
            r.status = "empty_module";
            self.emit_json(&r)?;
        } else {
            writeln!(self.out, "empty module")?;
        }
        Ok(EXIT_OK)
    }
}

enum Loaded {
    Module(IdealFile),
    Empty,
}

fn read(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| Fail(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Loaded, Fail> {
    match format::parse_ideal_file(&read(path)?) {
        Ok(f) => Ok(Loaded::Module(f)),
        Err(e) if e.is_empty_module() => Ok(Loaded::Empty),
        Err(e) => Err(Fail(EXIT_USAGE, format!("{}: {e}", path.display()))),
    }
}

fn parse_g(text: &str, n: usize) -> Result<ExponentVector, Fail> {
    let entries = text
        .split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u32>()
                .map_err(|e| Fail(EXIT_USAGE, format!("--g: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if entries.len() != n {
        return Err(Fail(
            EXIT_USAGE,
            format!("--g has {} entries, expected {n}", entries.len()),
        ));
    }
    Ok(ExponentVector::new(entries))
}

/// `--g` on the command line wins over a `g` line in the file.
fn chosen_g(ctx: &Ctx, file: &IdealFile) -> Result<Option<ExponentVector>, Fail> {
    match &ctx.common.g {
        Some(text) => {
            let g = parse_g(text, file.pair.num_vars())?;
            file.pair.check_admissible(&g)?;
            Ok(Some(g))
        }
        None => Ok(file.g.clone()),
    }
}

fn poset_for(ctx: &Ctx, file: &IdealFile) -> Result<Arc<CharacteristicPoset>, Fail> {
    let poset = match chosen_g(ctx, file)? {
        Some(g) => CharacteristicPoset::build(&file.pair, &g)?,
        None => CharacteristicPoset::canonical(&file.pair)?,
    };
    Ok(Arc::new(poset))
}

fn depth(ctx: &mut Ctx, path: &Path, witness: bool, fdepth: bool) -> CmdResult {
    let command = if fdepth { "fdepth" } else { "sdepth" };
    let file = match load(path)? {
        Loaded::Module(f) => f,
        Loaded::Empty => return ctx.empty_module(command),
    };
    let g = chosen_g(ctx, &file)?;
    let budget = ctx.budget();
    let result: DepthResult = if fdepth {
        search::fdepth_exact(&file.pair, g.as_ref(), &budget)?
    } else {
        search::sdepth_exact(&file.pair, g.as_ref(), &budget)?
    };
    let exact = result.status == DepthStatus::Exact;
    if ctx.common.json {
        let mut r = Report::new(command, ctx.started);
        r.value = json!(result.value);
        r.status = if exact { "exact" } else { "lower_bound" };
        r.witness = result.witness.as_ref().map(witness_json);
        r.poset_size = Some(result.poset_size);
        ctx.emit_json(&r)?;
    } else {
        if exact {
            writeln!(ctx.out, "{}", result.value)?;
        } else {
            writeln!(ctx.out, "{} (lower bound, budget exhausted)", result.value)?;
        }
        if let (true, Some(w)) = (witness, &result.witness) {
            writeln!(ctx.out, "partition:")?;
            write!(ctx.out, "{w}")?;
            let d = if fdepth {
                w.filtration_decomposition()
            } else {
                w.to_decomposition()
            };
            writeln!(ctx.out, "decomposition:")?;
            write!(ctx.out, "{}", format::emit_decomposition(&d))?;
        }
    }
    Ok(if exact { EXIT_OK } else { EXIT_BUDGET })
}

fn dim(ctx: &mut Ctx, path: &Path) -> CmdResult {
    let file = match load(path)? {
        Loaded::Module(f) => f,
        Loaded::Empty => return ctx.empty_module("dim"),
    };
    let poset = poset_for(ctx, &file)?;
    let d = search::krull_dim(&poset)?;
    if ctx.common.json {
        let mut r = Report::new("dim", ctx.started);
        r.value = json!(d);
        r.poset_size = Some(poset.len());
        ctx.emit_json(&r)?;
    } else {
        writeln!(ctx.out, "{d}")?;
    }
    Ok(EXIT_OK)
}

fn bounds(ctx: &mut Ctx, path: &Path) -> CmdResult {
    let file = match load(path)? {
        Loaded::Module(f) => f,
        Loaded::Empty => return ctx.empty_module("bounds"),
    };
    let b = search::bounds(&file.pair)?;
    if ctx.common.json {
        let mut r = Report::new("bounds", ctx.started);
        r.value = json!({
            "minrho": b.minrho,
            "gencount": b.gencount,
            "recursive": b.recursive,
            "upper": b.upper,
        });
        ctx.emit_json(&r)?;
    } else {
        let show = |v: Option<u32>| v.map_or("n/a".to_string(), |v| v.to_string());
        writeln!(ctx.out, "minrho {}", b.minrho)?;
        writeln!(ctx.out, "gencount {}", show(b.gencount))?;
        writeln!(ctx.out, "recursive {}", show(b.recursive))?;
        writeln!(ctx.out, "upper {}", b.upper)?;
    }
    Ok(EXIT_OK)
}

fn decompose(ctx: &mut Ctx, path: &Path, target: u32) -> CmdResult {
    let file = match load(path)? {
        Loaded::Module(f) => f,
        Loaded::Empty => return ctx.empty_module("decompose"),
    };
    let poset = poset_for(ctx, &file)?;
    let decision = search::sdepth_decision(&poset, target, &ctx.budget())?;
    let json = ctx.common.json;
    let mut r = Report::new("decompose", ctx.started);
    r.poset_size = Some(poset.len());
    r.extra.insert("target".into(), json!(target));
    let code = match &decision {
        Decision::Yes(p) => {
            let sdepth = p.stats().sdepth;
            if json {
                r.value = json!(sdepth);
                r.witness = Some(witness_json(p));
                r.extra.insert("feasible".into(), json!(true));
                r.extra.insert(
                    "decomposition".into(),
                    json!(format::emit_decomposition(&p.to_decomposition())),
                );
            } else {
                write!(
                    ctx.out,
                    "{}",
                    format::emit_decomposition(&p.to_decomposition())
                )?;
            }
            EXIT_OK
        }
        Decision::No => {
            if json {
                r.extra.insert("feasible".into(), json!(false));
            } else {
                writeln!(ctx.out, "no Stanley decomposition with sdepth >= {target}")?;
            }
            EXIT_OK
        }
        Decision::Unknown => {
            r.status = "lower_bound";
            if !json {
                writeln!(ctx.out, "unknown (budget exhausted)")?;
            }
            EXIT_BUDGET
        }
    };
    if json {
        r.elapsed_ms = ctx.started.elapsed().as_millis();
        ctx.emit_json(&r)?;
    }
    Ok(code)
}

fn verify(ctx: &mut Ctx, ideal: &Path, dec: &Path) -> CmdResult {
    let dec_text = read(dec)?;
    let file = match load(ideal)? {
        Loaded::Module(f) => f,
        Loaded::Empty => {
            // nothing to cover: only the empty decomposition is valid
            let has_spaces = dec_text
                .lines()
                .any(|l| !l.split('#').next().unwrap_or("").trim().is_empty());
            if !has_spaces {
                return ctx.empty_module("verify");
            }
            report_verdict(
                ctx,
                false,
                "invalid: the module is zero but the decomposition is not empty",
            )?;
            return Ok(EXIT_INVALID);
        }
    };
    let n = file.pair.num_vars();
    let spaces = format::parse_decomposition(&dec_text, n)
        .map_err(|e| Fail(EXIT_USAGE, format!("{}: {e}", dec.display())))?;
    let d = StanleyDecomposition::new(file.pair, spaces)?;
    match d.verify() {
        Verdict::Valid => {
            let msg = format!("valid, sdepth {}", d.stats().sdepth);
            report_verdict(ctx, true, &msg)?;
            Ok(EXIT_OK)
        }
        Verdict::Counterexample {
            point,
            count,
            expected,
        } => {
            let msg = format!("invalid: x^{point} lies in {count} spaces, expected {expected}");
            report_verdict(ctx, false, &msg)?;
            Ok(EXIT_INVALID)
        }
    }
}

fn report_verdict(ctx: &mut Ctx, valid: bool, msg: &str) -> std::io::Result<()> {
    if ctx.common.json {
        let mut r = Report::new("verify", ctx.started);
        r.value = json!(valid);
        r.extra.insert("message".into(), json!(msg));
        ctx.emit_json(&r)
    } else {
        writeln!(ctx.out, "{msg}")
    }
}

fn poset(ctx: &mut Ctx, path: &Path) -> CmdResult {
    let file = match load(path)? {
        Loaded::Module(f) => f,
        Loaded::Empty => return ctx.empty_module("poset"),
    };
    let poset = poset_for(ctx, &file)?;
    if ctx.common.json {
        let mut r = Report::new("poset", ctx.started);
        r.value = json!(poset.len());
        r.poset_size = Some(poset.len());
        let points: Vec<Value> = (0..poset.len())
            .map(|i| json!({"point": poset.point(i).entries(), "rho": poset.rho(i)}))
            .collect();
        r.extra.insert("g".into(), json!(poset.g().entries()));
        r.extra.insert("points".into(), Value::Array(points));
        ctx.emit_json(&r)?;
    } else {
        write!(ctx.out, "{}", poset.dump())?;
    }
    Ok(EXIT_OK)
}

fn family(
    ctx: &mut Ctx,
    name: &str,
    params: &[usize],
    quotient: bool,
    emit: bool,
    out: Option<&Path>,
) -> CmdResult {
    let mut spec = FamilySpec::parse(name, params)?;
    if quotient {
        spec = spec.quotient();
    }
    let pair = instantiate(&spec)?;
    let text = if emit {
        format::emit_ideal_file(&pair, spec.suggested_g().as_ref())
    } else {
        let ideal = family_ideal(&spec)?;
        format!(
            "{spec}: {} variables, {} generators\n",
            pair.num_vars(),
            ideal.generators().len()
        )
    };
    match out {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| Fail(EXIT_USAGE, format!("{}: {e}", path.display())))?,
        None => ctx.out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let started = Instant::now();
    let common = match &cli.command {
        Command::Sdepth { common, .. }
        | Command::Fdepth { common, .. }
        | Command::Dim { common, .. }
        | Command::Bounds { common, .. }
        | Command::Decompose { common, .. }
        | Command::Verify { common, .. }
        | Command::Poset { common, .. }
        | Command::Family { common, .. } => common.clone(),
    };
    let mut ctx = Ctx {
        out,
        common,
        started,
    };
    let result = match &cli.command {
        Command::Sdepth { file, witness, .. } => depth(&mut ctx, file, *witness, false),
        Command::Fdepth { file, witness, .. } => depth(&mut ctx, file, *witness, true),
        Command::Dim { file, .. } => dim(&mut ctx, file),
        Command::Bounds { file, .. } => bounds(&mut ctx, file),
        Command::Decompose { file, target, .. } => decompose(&mut ctx, file, *target),
        Command::Verify {
            ideal,
            decomposition,
            ..
        } => verify(&mut ctx, ideal, decomposition),
        Command::Poset { file, .. } => poset(&mut ctx, file),
        Command::Family {
            name,
            params,
            quotient,
            emit,
            out,
            ..
        } => family(&mut ctx, name, params, *quotient, *emit, out.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
