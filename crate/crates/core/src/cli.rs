//! Command-line front end: `factorize`, `verify`, `bound` and `overlap`.
//!
//! [`run`] takes its streams as arguments so the whole interface can be
//! driven from tests. Exit codes: 0 success, 1 property violation, 2 usage
//! or input error, 3 precondition not applicable.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::alphabet::{Order, OrderedAlphabet, Word};
use crate::error::Error;
use crate::factorization::{Factorization, FactorizationKind};
use crate::icfl::{icfl, is_grouping};
use crate::lyndon::cfl;
use crate::overlap::{analyze_overlap, overlap_lengths, Degenerate, OverlapReport};
use crate::suffixes::{verify_lcp_bound_with, LcpBoundOptions};
use crate::sweep::{suite_names, Sweep, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_APPLICABLE: i32 = 3;

/// Inputs above this size are refused.
pub const MAX_INPUT_BYTES: u64 = 64 << 20;

#[derive(Parser, Debug)]
#[command(name = "icfl", version, about = "Lyndon and inverse Lyndon factorizations of words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print CFL, CFL_in and ICFL of a word
    Factorize(FactorizeArgs),
    /// Run exhaustive property sweeps over small alphabets
    Verify(VerifyArgs),
    /// Report the LCP bound M derived from ICFL
    Bound(BoundArgs),
    /// Match the Lyndon factorization of an overlap against CFL of both words
    Overlap(OverlapArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// The word; read from --file or stdin when omitted
    word: Option<String>,
    /// Read the word from a file (one trailing newline is stripped)
    #[arg(long, conflicts_with = "word")]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OrderArgs {
    /// Symbols from smallest to largest; unlisted bytes follow in byte order
    #[arg(long)]
    order: Option<String>,
}

#[derive(Args, Debug)]
struct FactorizeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    order: OrderArgs,
    #[arg(long, value_enum, default_value_t = KindArg::All)]
    kind: KindArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite to run (repeatable); all suites when omitted
    #[arg(long)]
    suite: Vec<String>,
    /// Overrides each suite's default length cap
    #[arg(long)]
    max_len: Option<usize>,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=26))]
    alphabet_size: u8,
}

#[derive(Args, Debug)]
struct BoundArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    order: OrderArgs,
    /// Seed for pair sampling on long words
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug)]
struct OverlapArgs {
    /// Word whose suffix overlaps
    first: String,
    /// Word whose prefix overlaps
    second: String,
    #[command(flatten)]
    order: OrderArgs,
    /// Analyze only this overlap length; otherwise every length where a
    /// suffix of the first word equals a prefix of the second
    #[arg(long)]
    overlap_len: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum KindArg {
    Cfl,
    CflIn,
    Icfl,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Records,
}

/// A failure carrying its exit code.
struct Exit {
    code: i32,
    message: String,
}

impl Exit {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InverseLyndonWord => EXIT_NOT_APPLICABLE,
            Error::Invariant(_) => EXIT_VIOLATION,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Exit {
    fn from(e: io::Error) -> Self {
        Self::usage(e.to_string())
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Factorize(a) => factorize(a, stdin, out),
        Command::Verify(a) => verify(a, out),
        Command::Bound(a) => bound(a, stdin, out),
        Command::Overlap(a) => overlap(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn alphabet(order: &OrderArgs) -> Result<Arc<OrderedAlphabet>, Exit> {
    match &order.order {
        None => Ok(OrderedAlphabet::shared_bytes()),
        Some(spec) => OrderedAlphabet::with_priority(spec.as_bytes())
            .map(Arc::new)
            .map_err(|e| Exit::usage(format!("bad --order: {e}"))),
    }
}

fn read_limited(reader: impl Read) -> Result<Vec<u8>, Exit> {
    let mut buf = Vec::new();
    reader.take(MAX_INPUT_BYTES + 1).read_to_end(&mut buf)?;
    if buf.len() as u64 > MAX_INPUT_BYTES {
        return Err(Exit::usage(format!(
            "input exceeds {} MiB; split it into smaller words",
            MAX_INPUT_BYTES >> 20
        )));
    }
    Ok(buf)
}

fn strip_newline(mut bytes: Vec<u8>) -> Vec<u8> {
    if bytes.last() == Some(&b'\n') {
        bytes.pop();
        if bytes.last() == Some(&b'\r') {
            bytes.pop();
        }
    }
    bytes
}

fn read_word(input: &InputArgs, order: &OrderArgs, stdin: &mut dyn Read) -> Result<Word, Exit> {
    let bytes = match (&input.word, &input.file) {
        (Some(w), _) => w.as_bytes().to_vec(),
        (None, Some(path)) => {
            let file = File::open(path).map_err(|e| Exit::usage(format!("{}: {e}", path.display())))?;
            strip_newline(read_limited(file)?)
        }
        (None, None) => strip_newline(read_limited(stdin)?),
    };
    make_word(&bytes, order)
}

fn make_word(bytes: &[u8], order: &OrderArgs) -> Result<Word, Exit> {
    if bytes.is_empty() {
        return Err(Error::EmptyWord.into());
    }
    Ok(Word::new(&alphabet(order)?, bytes)?)
}

/// Escapes bytes for a record field: printable ASCII except `\`, `'` and
/// `"` stays as is, everything else becomes `\t`, `\n`, `\xNN` and so on.
pub fn escape(bytes: &[u8]) -> String {
    bytes.escape_ascii().to_string()
}

/// Inverse of [`escape`].
pub fn unescape(text: &str) -> Option<Vec<u8>> {
    let mut out = Vec::with_capacity(text.len());
    let mut it = text.bytes();
    while let Some(c) = it.next() {
        if c != b'\\' {
            out.push(c);
            continue;
        }
        out.push(match it.next()? {
            b't' => b'\t',
            b'n' => b'\n',
            b'r' => b'\r',
            b'0' => 0,
            c @ (b'\\' | b'\'' | b'"') => c,
            b'x' => {
                let hex = [it.next()?, it.next()?];
                u8::from_str_radix(std::str::from_utf8(&hex).ok()?, 16).ok()?
            }
            _ => return None,
        });
    }
    Some(out)
}

/// One line of `--format records` output:
/// `kind \t index \t start \t end \t escaped-bytes`.
///
/// Factor records use the factorization name as `kind`. A `witness` record
/// says that ICFL factor `index` is the product of `CFL_in` factors
/// `start..=end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub kind: String,
    pub index: usize,
    pub start: usize,
    pub end: usize,
    pub bytes: Vec<u8>,
}

impl Record {
    pub fn to_line(&self) -> String {
        format!("{}\t{}\t{}\t{}\t{}", self.kind, self.index, self.start, self.end, escape(&self.bytes))
    }
}

/// Parses records output back into records.
pub fn parse_records(text: &str) -> Result<Vec<Record>, String> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(n, line)| {
            let bad = |what: &str| format!("line {}: {what}", n + 1);
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 5 {
                return Err(bad("expected 5 tab-separated fields"));
            }
            let num = |s: &str| s.parse::<usize>().map_err(|_| bad("bad number"));
            Ok(Record {
                kind: fields[0].to_string(),
                index: num(fields[1])?,
                start: num(fields[2])?,
                end: num(fields[3])?,
                bytes: unescape(fields[4]).ok_or_else(|| bad("bad escape"))?,
            })
        })
        .collect()
}

fn factor_records(f: &Factorization) -> Vec<Record> {
    f.spans()
        .enumerate()
        .map(|(i, (s, e))| Record {
            kind: f.kind().name().to_string(),
            index: i + 1,
            start: s,
            end: e,
            bytes: f.word().to_bytes()[s - 1..e].to_vec(),
        })
        .collect()
}

fn runs_text(f: &Factorization) -> String {
    f.runs()
        .iter()
        .map(|r| {
            if r.exponent == 1 {
                format!("({})", r.factor)
            } else {
                format!("({})^{}", r.factor, r.exponent)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn factorize(a: FactorizeArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Exit> {
    let w = read_word(&a.input, &a.order, stdin)?;
    let kinds: &[FactorizationKind] = match a.kind {
        KindArg::Cfl => &[FactorizationKind::Cfl],
        KindArg::CflIn => &[FactorizationKind::CflIn],
        KindArg::Icfl => &[FactorizationKind::Icfl],
        KindArg::All => &[FactorizationKind::Cfl, FactorizationKind::CflIn, FactorizationKind::Icfl],
    };
    let mut text = String::new();
    let mut records = Vec::new();
    if a.format == Format::Text {
        writeln!(text, "word: {w} ({} symbols)", w.len()).unwrap();
    }
    for &kind in kinds {
        let f = match kind {
            FactorizationKind::Cfl => cfl(&w, Order::Normal)?,
            FactorizationKind::CflIn => cfl(&w, Order::Inverse)?,
            _ => icfl(&w)?,
        };
        let witness = if kind == FactorizationKind::Icfl {
            let base = cfl(&w, Order::Inverse)?;
            match is_grouping(&f, &base)? {
                Some(g) => Some(g),
                None => return Err(Error::Invariant("ICFL is not a grouping of CFL_in".into()).into()),
            }
        } else {
            None
        };
        match a.format {
            Format::Text => {
                writeln!(text, "{}: {f}", kind.name()).unwrap();
                let cuts: Vec<String> = f.cuts().iter().map(|c| c.to_string()).collect();
                writeln!(text, "  cuts: {}", cuts.join(" ")).unwrap();
                writeln!(text, "  runs: {}", runs_text(&f)).unwrap();
                if let Some(g) = &witness {
                    let b: Vec<String> = g.boundaries.iter().map(|c| c.to_string()).collect();
                    writeln!(text, "  grouping of cfl-in: boundaries {}", b.join(" ")).unwrap();
                }
            }
            Format::Records => {
                records.extend(factor_records(&f));
                if let Some(g) = &witness {
                    for (j, pair) in g.boundaries.windows(2).enumerate() {
                        records.push(Record {
                            kind: "witness".into(),
                            index: j + 1,
                            start: pair[0] + 1,
                            end: pair[1],
                            bytes: f.factor(j + 1)?.to_bytes(),
                        });
                    }
                }
            }
        }
    }
    for r in &records {
        writeln!(text, "{}", r.to_line()).unwrap();
    }
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32, Exit> {
    let names = suite_names();
    let selected: Vec<&str> = if a.suite.is_empty() {
        names.clone()
    } else {
        let mut v = Vec::new();
        for s in &a.suite {
            match names.iter().find(|n| **n == s.as_str()) {
                Some(n) => v.push(*n),
                None => return Err(Exit::usage(format!("unknown suite {s:?}; known suites: {}", names.join(", ")))),
            }
        }
        v
    };
    let sweep = Sweep::new(SweepConfig {
        alphabet_size: a.alphabet_size as usize,
        max_len: a.max_len,
    });
    let mut failed = 0;
    for name in selected {
        let outcome = sweep.run(name).expect("suite name checked");
        if !outcome.passed() {
            failed += 1;
        }
        writeln!(out, "{outcome}")?;
    }
    if failed > 0 {
        writeln!(out, "{failed} suite(s) failed")?;
        Ok(EXIT_VIOLATION)
    } else {
        writeln!(out, "all suites passed")?;
        Ok(EXIT_OK)
    }
}

fn bound(a: BoundArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Exit> {
    let w = read_word(&a.input, &a.order, stdin)?;
    let mut opts = LcpBoundOptions::default();
    if let Some(seed) = a.seed {
        opts.seed = seed;
    }
    let report = match verify_lcp_bound_with(&w, &opts) {
        Err(Error::InverseLyndonWord) => {
            return Err(Exit {
                code: EXIT_NOT_APPLICABLE,
                message: "bound not defined: the word is an inverse Lyndon word, so ICFL has a single factor".into(),
            })
        }
        r => r?,
    };
    let i = report.argmax_pair;
    writeln!(out, "M = {} (|m_{i} m_{}|)", report.m, i + 1)?;
    write!(out, "max observed LCP = {}", report.max_observed_lcp)?;
    if let Some(p) = report.witness {
        write!(out, " at positions {} and {}", p.first.0, p.second.0)?;
    }
    writeln!(out)?;
    writeln!(out, "method: {} ({} pairs)", report.method.name(), report.pairs)?;
    if report.holds() {
        writeln!(out, "bound holds")?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "bound VIOLATED")?;
        Ok(EXIT_VIOLATION)
    }
}

fn overlap_text(r: &OverlapReport) -> String {
    let cfl_y: Vec<String> = r.overlap_cfl.factors().map(|f| f.to_string()).collect();
    let mut s = format!("overlap {} (length {}), CFL(y) = ({})", r.overlap, r.overlap.len(), cfl_y.join(", "));
    match (r.degenerate, &r.chosen) {
        (Some(d), _) => {
            let why = match d {
                Degenerate::SimpleSuffix => "simple suffix of the first word",
                Degenerate::SimplePrefix => "simple prefix of the second word",
                Degenerate::Both => "simple on both sides",
                Degenerate::WholeWord => "covers a whole word",
            };
            write!(s, ": outside the lemma ({why})").unwrap();
        }
        (None, Some(c)) => {
            write!(s, ": case {} with i = {}, j = {}", c.case.number(), c.i, c.j).unwrap();
            if let Some(p) = c.pivot {
                let name = if c.case.number() == 2 { "j'" } else { "i'" };
                write!(s, ", {name} = {p}").unwrap();
            }
            if !c.shared.is_empty() {
                let pairs: Vec<String> = c.shared.iter().map(|(a, b)| format!("f_{a} = ℓ_{b}")).collect();
                write!(s, "; shared {}", pairs.join(", ")).unwrap();
            }
            if r.ambiguous {
                let others: Vec<String> = r
                    .matching
                    .iter()
                    .filter(|&&m| m != c.case)
                    .map(|m| m.number().to_string())
                    .collect();
                write!(s, " (also matches case {})", others.join(" and ")).unwrap();
            }
        }
        (None, None) => {
            s.push_str(": no case holds");
            if r.boundary_covered {
                s.push_str(" (the shared run covers all of CFL(y))");
            }
        }
    }
    s
}

fn overlap(a: OverlapArgs, out: &mut dyn Write) -> Result<i32, Exit> {
    let w = make_word(a.first.as_bytes(), &a.order)?;
    let w2 = make_word(a.second.as_bytes(), &a.order)?;
    let lengths = match a.overlap_len {
        Some(len) => vec![len],
        None => overlap_lengths(&w, &w2)?,
    };
    if lengths.is_empty() {
        return Err(Exit {
            code: EXIT_NOT_APPLICABLE,
            message: "no overlap: no suffix of the first word is a prefix of the second".into(),
        });
    }
    let mut code = EXIT_OK;
    for len in lengths {
        let r = analyze_overlap(&w, &w2, len)?;
        if r.uncovered() {
            code = EXIT_VIOLATION;
        }
        writeln!(out, "{}", overlap_text(&r))?;
    }
    Ok(code)
}
