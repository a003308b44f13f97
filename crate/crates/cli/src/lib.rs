//! Argument parsing and command implementations for the `palcomp` binary.

pub mod concordance;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use palcomp::verify::FormulaFn;
use palcomp::{
    decode_pair, encode_pair, Composition, Count, CountSpec, Counter, Family, FormulaVariant,
    Method, Modulus, Oracle, PairSequences, Sign, Verifier, VerifyConfig, DEFAULT_CAP,
};

/// Largest `n` enumerated without `--force`.
pub const BRUTE_LIMIT: u32 = 20;
/// Enumeration cap once `--force` is given.
pub const FORCED_CAP: u32 = 30;

#[derive(Debug, Parser)]
#[command(
    name = "palcomp",
    version,
    about = "Count compositions by how close they are to being palindromic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a single count.
    Count(CountArgs),
    /// Print a tab-separated grid of counts, one row per n and one column per k.
    Table(TableArgs),
    /// Export a sequence as an OEIS b-file or as CSV.
    Sequence(SequenceArgs),
    /// Cross-check formulas, generating functions and enumeration.
    Verify(VerifyArgs),
    /// Map between Plus-class compositions and pair sequences.
    #[command(subcommand)]
    Bijection(BijectionCommand),
}

#[derive(Debug, Clone, Args)]
pub struct SpecArgs {
    #[arg(long, value_name = "pc|ac")]
    pub family: Family,
    /// Count classes under swapping mirrored parts.
    #[arg(long)]
    pub reduced: bool,
    #[arg(long, value_name = "plus|minus|total")]
    pub sign: Sign,
    #[arg(long = "mod", value_name = "M|inf", default_value = "inf")]
    pub modulus: Modulus,
}

impl SpecArgs {
    fn spec(&self, k: u32) -> CountSpec {
        CountSpec::new(self.family, self.reduced, self.sign, self.modulus, k)
    }
}

#[derive(Debug, Clone, Args)]
pub struct MethodArgs {
    #[arg(long, value_name = "formula|gf|brute", default_value = "formula")]
    pub method: Method,
    /// Formula variant; only meaningful with --method formula.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub variant: Option<u8>,
    /// Allow exhaustive enumeration above n = 20.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 0)]
    pub k: u32,
    #[command(flatten)]
    pub method: MethodArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long)]
    pub n_max: u32,
    #[arg(long, default_value_t = 0)]
    pub k_max: u32,
    #[command(flatten)]
    pub method: MethodArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceFormat {
    Bfile,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct SequenceArgs {
    #[arg(long, value_name = "pc|ac", required_unless_present = "concordance")]
    pub family: Option<Family>,
    #[arg(long)]
    pub reduced: bool,
    #[arg(
        long,
        value_name = "plus|minus|total",
        required_unless_present = "concordance"
    )]
    pub sign: Option<Sign>,
    #[arg(long = "mod", value_name = "M|inf")]
    pub modulus: Option<Modulus>,
    /// Statistic value; with --concordance it picks the row of a triangle.
    #[arg(long)]
    pub k: Option<u32>,
    /// Last index written.
    #[arg(long)]
    pub n_max: u32,
    /// First index written.
    #[arg(long, default_value_t = 0)]
    pub offset: u32,
    #[arg(long, value_enum, default_value = "bfile")]
    pub format: SequenceFormat,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Take family, sign, modulus, k and index shift from a bundled OEIS entry.
    #[arg(long, value_name = "ID", conflicts_with_all = ["family", "reduced", "sign", "modulus"])]
    pub concordance: Option<String>,
    #[command(flatten)]
    pub method: MethodArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 14)]
    pub n_max: u32,
    #[arg(long, default_value_t = 4)]
    pub k_max: u32,
    /// Comma-separated moduli; `inf` means equality.
    #[arg(long, default_value = "1,2,3,4,5,inf")]
    pub mods: String,
    #[arg(long, value_enum, default_value = "text")]
    pub report: ReportFormat,
}

#[derive(Debug, Clone, Subcommand)]
pub enum BijectionCommand {
    /// Composition such as "2,1,3,4,1,1,5" to a pair such as "0,1,1,3,0,0;0,4,1,1,0,0".
    Encode { composition: String },
    /// Pair sequences back to the composition.
    Decode { pair: String },
}

/// Error for flag combinations that parse but make no sense together.
fn usage(msg: impl std::fmt::Display) -> anyhow::Error {
    Cli::command()
        .error(ErrorKind::ArgumentConflict, msg)
        .into()
}

struct Evaluator {
    counter: Counter,
    method: Method,
    variant: Option<FormulaVariant>,
}

impl Evaluator {
    /// Validates the method flags against the largest `n` the command will touch.
    fn new(args: &MethodArgs, n_max: u32) -> Result<Self> {
        if args.variant.is_some() && args.method != Method::Formula {
            return Err(usage(format!(
                "--variant applies only to --method formula, not {}",
                args.method
            )));
        }
        if args.method == Method::Brute && n_max > BRUTE_LIMIT && !args.force {
            bail!(
                "refusing to enumerate all 2^{} compositions of {n_max} above n = {BRUTE_LIMIT}; pass --force to allow n up to {FORCED_CAP}",
                n_max - 1
            );
        }
        let cap = if args.force { FORCED_CAP } else { DEFAULT_CAP };
        let variant = args.variant.map(FormulaVariant::from_number).transpose()?;
        Ok(Self {
            counter: Counter::new(Oracle::with_cap(cap)),
            method: args.method,
            variant,
        })
    }

    fn count(&self, spec: &CountSpec, n: u32) -> Result<Count> {
        Ok(self.counter.count(spec, n, self.method, self.variant)?)
    }
}

pub fn cmd_count(args: &CountArgs, out: &mut dyn Write) -> Result<()> {
    let eval = Evaluator::new(&args.method, args.n)?;
    let value = eval.count(&args.spec.spec(args.k), args.n)?;
    writeln!(out, "{value}")?;
    Ok(())
}

pub fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Result<()> {
    let eval = Evaluator::new(&args.method, args.n_max)?;
    let mut header = String::from("n");
    for k in 0..=args.k_max {
        header.push_str(&format!("\tk={k}"));
    }
    writeln!(out, "{header}")?;
    for n in 0..=args.n_max {
        let mut row = n.to_string();
        for k in 0..=args.k_max {
            let v = eval.count(&args.spec.spec(k), n)?;
            row.push('\t');
            row.push_str(&v.to_string());
        }
        writeln!(out, "{row}")?;
    }
    Ok(())
}

/// The terms `offset..=n_max` of the requested sequence.
pub fn sequence_terms(args: &SequenceArgs) -> Result<Vec<(u32, Count)>> {
    let record = match &args.concordance {
        Some(id) => {
            let r = concordance::lookup(id)?;
            if let (Some(fixed), Some(asked)) = (r.k, args.k) {
                if fixed != asked {
                    return Err(usage(format!(
                        "{} fixes k = {fixed}; drop --k or pass --k {fixed}",
                        r.id
                    )));
                }
            }
            r.clone()
        }
        None => concordance::Record {
            id: "custom".into(),
            relation: String::new(),
            family: args.family.expect("required by clap"),
            reduced: args.reduced,
            sign: args.sign.expect("required by clap"),
            modulus: args.modulus.unwrap_or(Modulus::Infinity),
            k: None,
            scale: 1,
            shift: 0,
            shift_per_k: 0,
            divisor: 1,
        },
    };
    let k = record.k.or(args.k).unwrap_or(0);
    let spec = record.spec(k);
    let indices: Vec<(u32, Option<u32>)> = (args.offset..=args.n_max)
        .map(|n| (n, record.index(n, k)))
        .collect();
    let deepest = indices.iter().filter_map(|&(_, i)| i).max().unwrap_or(0);
    let eval = Evaluator::new(&args.method, deepest)?;
    indices
        .into_iter()
        .map(|(n, i)| {
            let raw = match i {
                Some(i) => eval.count(&spec, i)?,
                None => Count::from(0u32),
            };
            Ok((n, record.term(raw)?))
        })
        .collect()
}

pub fn cmd_sequence(args: &SequenceArgs, out: &mut dyn Write) -> Result<()> {
    let sep = match args.format {
        SequenceFormat::Bfile => ' ',
        SequenceFormat::Csv => ',',
    };
    let mut text = String::new();
    for (n, v) in sequence_terms(args)? {
        text.push_str(&format!("{n}{sep}{v}\n"));
    }
    match &args.out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Parses a b-file back into (index, value) pairs.
pub fn parse_bfile(text: &str) -> Result<Vec<(u32, Count)>> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|line| {
            let (i, v) = line
                .split_once(' ')
                .with_context(|| format!("malformed b-file line {line:?}"))?;
            Ok((i.parse()?, v.parse()?))
        })
        .collect()
}

fn parse_moduli(text: &str) -> Result<Vec<Modulus>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.parse::<Modulus>()
                .map_err(|e| usage(format!("--mods: {e}")))
        })
        .collect()
}

/// Runs the verifier and writes the report. Returns whether every check passed.
pub fn cmd_verify(
    args: &VerifyArgs,
    formula: Option<FormulaFn>,
    out: &mut dyn Write,
) -> Result<bool> {
    if args.n_max > DEFAULT_CAP {
        bail!(
            "verification enumerates every composition; --n-max {} exceeds the limit {DEFAULT_CAP}",
            args.n_max
        );
    }
    let config = VerifyConfig {
        n_max: args.n_max,
        k_max: args.k_max,
        moduli: parse_moduli(&args.mods)?,
        bijection_n_max: args.n_max,
        ..VerifyConfig::default()
    };
    let verifier = match formula {
        Some(f) => Verifier::with_formula(config, f),
        None => Verifier::new(config),
    };
    let report = verifier.run();
    match args.report {
        ReportFormat::Text => write!(out, "{report}")?,
        ReportFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
    }
    Ok(report.passed())
}

pub fn cmd_bijection(cmd: &BijectionCommand, out: &mut dyn Write) -> Result<()> {
    match cmd {
        BijectionCommand::Encode { composition } => {
            let c: Composition = composition.parse()?;
            writeln!(out, "{}", encode_pair(&c)?)?;
        }
        BijectionCommand::Decode { pair } => {
            let p: PairSequences = pair.parse()?;
            writeln!(out, "{}", decode_pair(&p)?)?;
        }
    }
    Ok(())
}

/// Executes a parsed command. `Ok(false)` means verification found failures.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    match &cli.command {
        Command::Count(a) => cmd_count(a, out)?,
        Command::Table(a) => cmd_table(a, out)?,
        Command::Sequence(a) => cmd_sequence(a, out)?,
        Command::Verify(a) => return cmd_verify(a, None, out),
        Command::Bijection(c) => cmd_bijection(c, out)?,
    }
    Ok(true)
}

/// Runs the command line `args` (program name first) and collects standard output.
pub fn run_to_string<I, T>(args: I) -> Result<(bool, String)>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    let mut buf = Vec::new();
    let ok = run(&cli, &mut buf)?;
    Ok((ok, String::from_utf8(buf)?))
}
