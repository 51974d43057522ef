//! Command-line front end. Plain output prints the bare result; `--json`
//! wraps it as `{"ok": true, "result": ...}` with every count as a decimal
//! string.
//!
//! Exit codes: 0 on success, 1 for an out-of-range index or a non-member
//! word, 2 for malformed arguments.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::derangement::{count_prefix_d, DerangementFamily};
use crate::engine::{enumerate_range, rank, sample_uniform, total_count, unrank, PrefixCountFamily};
use crate::error::Error;
use crate::lyndon::{conjecture_row, conjecture_table, BinaryWord, ConjectureRow};
use crate::menage::{count_prefix_m, MenageFamily};
use crate::numeric::Count;
use crate::words::Word;

#[derive(Debug, Parser)]
#[command(
    name = "rankperm",
    version,
    about = "Rank, unrank, count and sample derangements and menage permutations in lexicographic order"
)]
pub struct CliRequest {
    /// Wrap output as JSON
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of members of the family
    Count(FamilyArgs),
    /// Number of members beginning with a prefix
    CountPrefix {
        #[command(flatten)]
        family: FamilyArgs,
        /// Space-separated letters, e.g. "6 1"
        #[arg(long, default_value = "")]
        prefix: String,
    },
    /// 1-based lexicographic index of a member
    Rank {
        #[command(flatten)]
        family: FamilyArgs,
        /// Space-separated letters of the member
        #[arg(long)]
        word: String,
    },
    /// Member at a 1-based lexicographic index
    Unrank {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_parser = parse_count)]
        index: Count,
    },
    /// Uniform random members, reproducible for a fixed seed
    Sample {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Members with indices from..=to
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_parser = parse_count)]
        from: Count,
        #[arg(long, value_parser = parse_count)]
        to: Count,
    },
    /// Lyndon prefix counts, Euler transforms and conjectured recurrences
    LyndonTable {
        /// Number of word lengths per row
        #[arg(long, default_value_t = 12)]
        n: usize,
        /// Single binary prefix instead of the full table, e.g. "0110"
        #[arg(long)]
        prefix: Option<String>,
    },
    /// Check the built-in golden vectors
    Selftest,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Derangement,
    Menage,
}

/// Either registered family, so the CLI can dispatch on a runtime name.
#[derive(Debug, Clone, Copy)]
pub enum AnyFamily {
    Derangement(DerangementFamily),
    Menage(MenageFamily),
}

impl AnyFamily {
    pub fn new(name: FamilyName, n: usize) -> Result<Self, Error> {
        Ok(match name {
            FamilyName::Derangement => AnyFamily::Derangement(DerangementFamily::new(n)?),
            FamilyName::Menage => AnyFamily::Menage(MenageFamily::new(n)?),
        })
    }

    fn inner(&self) -> &dyn PrefixCountFamily {
        match self {
            AnyFamily::Derangement(f) => f,
            AnyFamily::Menage(f) => f,
        }
    }

    fn count_letters(&self, prefix: &[usize]) -> Count {
        match self {
            AnyFamily::Derangement(f) => count_prefix_d(f.n(), prefix),
            AnyFamily::Menage(f) => count_prefix_m(f.n(), prefix),
        }
    }
}

impl PrefixCountFamily for AnyFamily {
    fn alphabet_size(&self) -> usize {
        self.inner().alphabet_size()
    }
    fn count_prefix(&self, prefix: &Word) -> Count {
        self.count_letters(prefix.letters())
    }
    fn contains(&self, word: &Word) -> bool {
        self.inner().contains(word)
    }
    fn quick_letter_ok(&self, position: usize, letter: usize) -> bool {
        self.inner().quick_letter_ok(position, letter)
    }
}

fn parse_count(s: &str) -> Result<Count, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("expected a decimal integer, got {s:?}"));
    }
    s.parse::<Count>().map_err(|e| e.to_string())
}

enum Output {
    Scalar(String),
    Lines(Vec<String>),
    Json(Value),
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::IndexOutOfRange { .. } | Error::NotAMember | Error::EmptyFamily => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn words_output(words: Vec<Word>, json_mode: bool) -> Output {
    let lines: Vec<String> = words.iter().map(Word::to_string).collect();
    if json_mode {
        Output::Json(json!(lines))
    } else {
        Output::Lines(lines)
    }
}

fn row_json(row: &ConjectureRow) -> Value {
    let strings = |v: &[Count]| v.iter().map(Count::to_string).collect::<Vec<_>>();
    json!({
        "prefix": row.prefix.to_string(),
        "counts": strings(&row.counts),
        "transformed": strings(&row.transformed),
        "recurrence": row.recurrence.as_ref().map(|r| json!({
            "order": r.order,
            "coefficients": r.coefficients,
            "valid_from": r.valid_from,
            "text": r.to_string(),
        })),
        "extended_check": row.extended_check,
    })
}

fn row_line(row: &ConjectureRow) -> String {
    let join = |v: &[Count]| v.iter().map(Count::to_string).collect::<Vec<_>>().join(" ");
    let recurrence = match &row.recurrence {
        Some(r) if row.extended_check => r.to_string(),
        Some(r) => format!("{r} [fails extended check]"),
        None => "none found".to_string(),
    };
    format!(
        "{}\t{}\t{}\t{}",
        row.prefix,
        join(&row.counts),
        join(&row.transformed),
        recurrence
    )
}

/// Golden vectors checked by `selftest`: (name, family, n, index, word).
const GOLDEN: [(&str, FamilyName, usize, &str, &str); 4] = [
    (
        "derangement n=20 index 5*10^17",
        FamilyName::Derangement,
        20,
        "500000000000000000",
        "12 14 2 9 13 20 6 3 1 17 5 11 19 15 10 18 8 7 4 16",
    ),
    (
        "menage n=20 index 10^17",
        FamilyName::Menage,
        20,
        "100000000000000000",
        "7 16 19 12 2 8 15 1 18 14 3 9 20 10 5 17 13 4 11 6",
    ),
    (
        "derangement n=8 index 1000",
        FamilyName::Derangement,
        8,
        "1000",
        "2 5 4 8 7 3 6 1",
    ),
    (
        "menage n=8 index 1000",
        FamilyName::Menage,
        8,
        "1000",
        "3 5 4 8 2 7 1 6",
    ),
];

fn selftest() -> Vec<(String, bool)> {
    let mut results = Vec::new();
    for (name, family, n, index, word) in GOLDEN {
        let f = AnyFamily::new(family, n).expect("golden family");
        let i: Count = index.parse().expect("golden index");
        let unranked = unrank(&f, &i).map(|w| w.to_string());
        results.push((format!("unrank {name}"), unranked.as_deref() == Ok(word)));
        let w = Word::parse(n, word).expect("golden word");
        results.push((format!("rank {name}"), rank(&f, &w) == Ok(i)));
    }
    let menage20 = AnyFamily::new(FamilyName::Menage, 20).expect("n = 20");
    results.push((
        "menage n=20 total".to_string(),
        total_count(&menage20).to_string() == "312400218671253762",
    ));
    results
}

fn execute(request: &CliRequest) -> Result<Output, Failure> {
    let json_mode = request.json;
    let scalar = |s: String| {
        if json_mode {
            Output::Json(json!(s))
        } else {
            Output::Scalar(s)
        }
    };
    match &request.command {
        Command::Count(fam) => {
            let f = AnyFamily::new(fam.family, fam.n)?;
            Ok(scalar(total_count(&f).to_string()))
        }
        Command::CountPrefix { family, prefix } => {
            let f = AnyFamily::new(family.family, family.n)?;
            let alpha = Word::parse(family.n, prefix)?;
            Ok(scalar(f.count_prefix(&alpha).to_string()))
        }
        Command::Rank { family, word } => {
            let f = AnyFamily::new(family.family, family.n)?;
            let w = Word::parse(family.n, word)?;
            Ok(scalar(rank(&f, &w)?.to_string()))
        }
        Command::Unrank { family, index } => {
            let f = AnyFamily::new(family.family, family.n)?;
            Ok(scalar(unrank(&f, index)?.to_string()))
        }
        Command::Sample { family, seed, count } => {
            let f = AnyFamily::new(family.family, family.n)?;
            let words = sample_uniform(&f, *seed, *count as usize)?;
            Ok(words_output(words, json_mode))
        }
        Command::Enumerate { family, from, to } => {
            let f = AnyFamily::new(family.family, family.n)?;
            let words = enumerate_range(f, from, to)?.collect::<Result<Vec<_>, _>>()?;
            Ok(words_output(words, json_mode))
        }
        Command::LyndonTable { n, prefix } => {
            let rows = match prefix {
                Some(p) => vec![conjecture_row(&BinaryWord::parse(p)?, *n)?],
                None => conjecture_table(*n)?,
            };
            if json_mode {
                Ok(Output::Json(Value::Array(rows.iter().map(row_json).collect())))
            } else {
                Ok(Output::Lines(rows.iter().map(row_line).collect()))
            }
        }
        Command::Selftest => {
            let results = selftest();
            let failed = results.iter().filter(|(_, ok)| !ok).count();
            if failed > 0 {
                let names: Vec<_> = results
                    .iter()
                    .filter(|(_, ok)| !ok)
                    .map(|(name, _)| name.as_str())
                    .collect();
                return Err(Failure {
                    code: 1,
                    message: format!("{failed} golden vectors failed: {}", names.join(", ")),
                });
            }
            if json_mode {
                Ok(Output::Json(json!(results
                    .iter()
                    .map(|(name, ok)| json!({"name": name, "passed": ok}))
                    .collect::<Vec<_>>())))
            } else {
                Ok(Output::Lines(
                    results.iter().map(|(name, _)| format!("ok {name}")).collect(),
                ))
            }
        }
    }
}

/// Parses `args` (program name first), runs the request and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let request = match CliRequest::try_parse_from(args) {
        Ok(r) => r,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&request) {
        Ok(output) => {
            let written = match output {
                Output::Scalar(s) => writeln!(out, "{s}"),
                Output::Lines(lines) => lines.iter().try_for_each(|l| writeln!(out, "{l}")),
                Output::Json(v) => writeln!(out, "{}", json!({"ok": true, "result": v})),
            };
            if written.is_err() {
                return 1;
            }
            0
        }
        Err(failure) => {
            if request.json && failure.code == 1 {
                let _ = writeln!(out, "{}", json!({"ok": false, "error": failure.message}));
            }
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}
