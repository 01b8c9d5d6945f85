//! Command-line front end. [`run`] takes an argument vector and returns
//! the process exit code: 0 on success, 1 on a domain error, 2 on a usage
//! error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, OccurrenceString};
use crate::deduce::{solve, BPrimeProfile, SolveOptions};
use crate::error::{Error, Result};
use crate::invariants::{alexander, homogeneous_genus, jones, seifert_surface};
use crate::search::{self, Budget, ExclusionCertificate, MinLength, SearchConstraints, TargetResult, Witness};
use crate::table::{KnotTable, RowReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "braidrank", version, about = "Braid words, knot invariants and certified minimal braid lengths")]
struct Cli {
    #[command(flatten)]
    config: CliConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Debug, Args)]
pub struct CliConfig {
    /// Knot table CSV; defaults to $BRAIDRANK_TABLE, then the bundled table.
    #[arg(long, global = true, value_name = "PATH")]
    pub table: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for searches.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Search budget in enumeration nodes.
    #[arg(long, global = true, value_name = "NODES", value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,
    /// Wall-clock cap for searches, in milliseconds.
    #[arg(long, global = true, value_name = "MS", value_parser = clap::value_parser!(u64).range(1..))]
    pub time_limit: Option<u64>,
}

impl CliConfig {
    fn budget(&self) -> Budget {
        Budget { max_nodes: self.budget, max_millis: self.time_limit }
    }

    fn load_table(&self) -> Result<KnotTable> {
        match &self.table {
            Some(p) => KnotTable::load_path(p),
            None => KnotTable::default_table(),
        }
    }
}

#[derive(Debug, Args)]
struct WordArg {
    /// Braid word, e.g. "B3:1,-2,1,-2".
    #[arg(long)]
    word: BraidWord,
}

#[derive(Debug, Args)]
struct ShapeArgs {
    #[arg(long)]
    strands: usize,
    /// Word length; implied by --occurrence when omitted.
    #[arg(long)]
    length: Option<usize>,
    /// Exact per-generator counts, e.g. 2,2,2,2.
    #[arg(long)]
    occurrence: Option<OccurrenceString>,
    /// Keep every word instead of one per rotation/flip class.
    #[arg(long)]
    all_words: bool,
    /// Drop words with a cancelling pair (adjacent or cyclic).
    #[arg(long)]
    reduced: bool,
    /// Only positive letters.
    #[arg(long)]
    positive: bool,
}

impl ShapeArgs {
    fn constraints(&self, knots_only: bool) -> Result<SearchConstraints> {
        let length = match (&self.occurrence, self.length) {
            (Some(o), None) => o.total(),
            (_, Some(l)) => l,
            (None, None) => return Err(Error::Precondition("give --length or --occurrence".into())),
        };
        let c = SearchConstraints {
            strands: self.strands,
            length,
            occurrence: self.occurrence.clone(),
            knots_only,
            canonical_only: !self.all_words,
            prune_reducible: self.reduced,
            positive_only: self.positive,
        };
        c.validate()?;
        Ok(c)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a word and report its basic data.
    Parse(WordArg),
    /// Alexander and Jones polynomials and surface data of a knot closure.
    Invariants(WordArg),
    /// Look a closure up in the knot table.
    Identify(WordArg),
    /// List words meeting the constraints.
    Enumerate {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Include closures with more than one component.
        #[arg(long)]
        links: bool,
        /// Print only the counts.
        #[arg(long)]
        count: bool,
    },
    /// Exhaustive search for target knots; prints an exclusion certificate.
    Exclude {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        targets: Vec<String>,
    },
    /// First word of the given shape closing to the knot.
    Witness {
        name: String,
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        length: usize,
    },
    /// b_n of a knot, with exclusions below it.
    Minlen {
        name: String,
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        upper: usize,
    },
    /// Certified profile b_n' of a knot.
    Solve {
        name: String,
        #[arg(long, default_value_t = 8)]
        max_strands: usize,
        /// Do not use the table's recorded b_n at the braid index.
        #[arg(long)]
        no_index_length: bool,
    },
    /// Knot table maintenance.
    Table {
        #[command(subcommand)]
        command: TableCommand,
    },
}

#[derive(Debug, Subcommand)]
enum TableCommand {
    /// Recompute every row's fingerprint.
    Validate,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ParseReport {
    pub word: BraidWord,
    pub strands: usize,
    pub length: usize,
    pub occurrence: OccurrenceString,
    pub components: usize,
    pub positive: bool,
    pub homogeneous: bool,
    pub canonical_form: BraidWord,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct InvariantReport {
    pub word: BraidWord,
    pub alexander: crate::poly::LaurentPoly,
    pub jones: crate::poly::LaurentPoly,
    pub circles: usize,
    pub bands: usize,
    pub surface_genus: usize,
    pub homogeneous_genus: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MatchEntry {
    pub name: String,
    pub mirror: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct IdentifyReport {
    pub word: BraidWord,
    pub matches: Vec<MatchEntry>,
    pub ambiguous: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub constraints: SearchConstraints,
    pub count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<BraidWord>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WitnessReport {
    pub target: String,
    pub strands: usize,
    pub length: usize,
    pub witness: Option<Witness>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ValidateReport {
    pub version: String,
    pub rows: usize,
    pub failures: Vec<RowReport>,
}

enum Output {
    Parse(ParseReport),
    Invariants(InvariantReport),
    Identify(IdentifyReport),
    Enumerate(EnumerateReport),
    Exclude(ExclusionCertificate),
    Witness(WitnessReport),
    Minlen(MinLength),
    Solve(BPrimeProfile),
    Validate(ValidateReport),
}

impl Output {
    fn to_json(&self) -> Result<String> {
        let s = match self {
            Output::Parse(r) => serde_json::to_string_pretty(r),
            Output::Invariants(r) => serde_json::to_string_pretty(r),
            Output::Identify(r) => serde_json::to_string_pretty(r),
            Output::Enumerate(r) => serde_json::to_string_pretty(r),
            Output::Exclude(r) => serde_json::to_string_pretty(r),
            Output::Witness(r) => serde_json::to_string_pretty(r),
            Output::Minlen(r) => serde_json::to_string_pretty(r),
            Output::Solve(r) => serde_json::to_string_pretty(r),
            Output::Validate(r) => serde_json::to_string_pretty(r),
        }?;
        Ok(s)
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        match self {
            Output::Parse(r) => {
                line(format!("word        {}", r.word));
                line(format!("strands     {}", r.strands));
                line(format!("length      {}", r.length));
                line(format!("occurrence  {}", r.occurrence));
                line(format!("components  {}", r.components));
                line(format!("positive    {}", r.positive));
                line(format!("homogeneous {}", r.homogeneous));
                line(format!("canonical   {}", r.canonical_form));
            }
            Output::Invariants(r) => {
                line(format!("word       {}", r.word));
                line(format!("alexander  {}", r.alexander));
                line(format!("jones      {}", r.jones));
                line(format!("surface    {} circles, {} bands, genus {}", r.circles, r.bands, r.surface_genus));
                if let Some(g) = r.homogeneous_genus {
                    line(format!("knot genus {g} (homogeneous word)"));
                }
            }
            Output::Identify(r) => {
                if r.matches.is_empty() {
                    line(format!("{}: no match in table", r.word));
                }
                for m in &r.matches {
                    line(format!("{}{}", m.name, if m.mirror { " (mirror)" } else { "" }));
                }
                if r.ambiguous {
                    line("ambiguous: several table entries share this fingerprint".into());
                }
            }
            Output::Enumerate(r) => {
                if let Some(ws) = &r.words {
                    for w in ws {
                        line(w.to_string());
                    }
                }
                line(format!("{} words", r.count));
            }
            Output::Exclude(c) => {
                let k = &c.constraints;
                let occ = k.occurrence.as_ref().map(|o| format!(" occurrence {o}")).unwrap_or_default();
                line(format!("constraints  n={} c={}{occ}", k.strands, k.length));
                line(format!("words        {}", c.words_examined));
                line(format!("classes      {}", c.canonical_classes));
                for (name, r) in &c.result {
                    match r {
                        TargetResult::Absent => line(format!("{name:12} ABSENT")),
                        TargetResult::Found { witness } => line(format!(
                            "{name:12} FOUND {}{}",
                            witness.word,
                            if witness.mirror { " (mirror)" } else { "" }
                        )),
                    }
                }
                line(format!("table        {}", c.table_version));
                line(format!("elapsed      {:.3}s", c.elapsed));
            }
            Output::Witness(r) => match &r.witness {
                Some(w) => line(format!("{} {}{}", r.target, w.word, if w.mirror { " (mirror)" } else { "" })),
                None => line(format!("{}: no {}-strand word of length {}", r.target, r.strands, r.length)),
            },
            Output::Minlen(m) => {
                line(format!("b_{}({}) = {}", m.strands, m.target, m.value));
                line(format!("witness {}", m.witness.word));
                for e in &m.exclusions {
                    line(format!("excluded c={} ({} words)", e.constraints.length, e.words_examined));
                }
            }
            Output::Solve(p) => {
                line(format!("{} (braid index {})", p.knot, p.domain_start));
                for (n, k) in &p.known {
                    line(format!(
                        "  b_{n} = {:3}   b_{n}' = {:3}{}",
                        k.length,
                        k.value,
                        if k.unconfirmed { "  UNCONFIRMED" } else { "" }
                    ));
                }
                match &p.eventual {
                    Some(e) => {
                        let rule = p.certificates[e.certificate].rule_name.clone().unwrap_or_default();
                        line(format!("  b_n' = {} for n ≥ {} [{rule}]", e.value, e.from));
                    }
                    None => line(format!("  eventual value not determined ({:?})", p.status)),
                }
                line(format!(
                    "  {}",
                    match p.constant {
                        Some(true) => "constant",
                        Some(false) => "not constant",
                        None => "constancy undetermined",
                    }
                ));
                let axioms = p.certificates.iter().filter(|c| c.unproven_premise).count();
                line(format!("  {} certificates, {} resting on an unproven premise", p.certificates.len(), axioms));
            }
            Output::Validate(r) => {
                line(format!("table {} : {} rows", r.version, r.rows));
                for f in &r.failures {
                    line(format!("row {} {}: {}", f.row, f.name, f.message.clone().unwrap_or_default()));
                }
                line(if r.failures.is_empty() { "all rows valid".into() } else { format!("{} invalid rows", r.failures.len()) });
            }
        }
        out
    }

    fn failed(&self) -> bool {
        match self {
            Output::Validate(r) => !r.failures.is_empty(),
            Output::Solve(p) => p.status != crate::deduce::ProfileStatus::Complete,
            _ => false,
        }
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let cfg = &cli.config;
    Ok(match &cli.command {
        Command::Parse(WordArg { word }) => {
            let class = word.classify();
            Output::Parse(ParseReport {
                word: word.clone(),
                strands: word.strands(),
                length: word.len(),
                occurrence: word.occurrence_string(),
                components: word.component_count(),
                positive: class.positive,
                homogeneous: class.homogeneous,
                canonical_form: word.canonical_form(),
            })
        }
        Command::Invariants(WordArg { word }) => {
            let s = seifert_surface(word)?;
            Output::Invariants(InvariantReport {
                word: word.clone(),
                alexander: alexander(word)?,
                jones: jones(word)?,
                circles: s.circles,
                bands: s.bands,
                surface_genus: s.genus,
                homogeneous_genus: homogeneous_genus(word).ok(),
            })
        }
        Command::Identify(WordArg { word }) => {
            let table = cfg.load_table()?;
            let id = table.identify(&crate::invariants::fingerprint(word)?);
            Output::Identify(IdentifyReport {
                word: word.clone(),
                matches: id.matches.into_iter().map(|(name, mirror)| MatchEntry { name, mirror }).collect(),
                ambiguous: id.ambiguous,
            })
        }
        Command::Enumerate { shape, links, count } => {
            let c = shape.constraints(!links)?;
            if *count {
                let (n, _) = search::count(&c)?;
                Output::Enumerate(EnumerateReport { constraints: c, count: n, words: None })
            } else {
                let words = search::enumerate_with_budget(&c, cfg.budget())?;
                Output::Enumerate(EnumerateReport { constraints: c, count: words.len() as u64, words: Some(words) })
            }
        }
        Command::Exclude { shape, targets } => {
            let table = cfg.load_table()?;
            let c = shape.constraints(true)?;
            Output::Exclude(search::exclusion_search(&c, targets, &table, cfg.budget())?)
        }
        Command::Witness { name, strands, length } => {
            let table = cfg.load_table()?;
            let witness = search::find_witness(name, *strands, *length, &table, cfg.budget())?;
            Output::Witness(WitnessReport { target: name.clone(), strands: *strands, length: *length, witness })
        }
        Command::Minlen { name, strands, upper } => {
            let table = cfg.load_table()?;
            Output::Minlen(search::min_length(name, *strands, *upper, &table, cfg.budget())?)
        }
        Command::Solve { name, max_strands, no_index_length } => {
            let table = cfg.load_table()?;
            let record = table.lookup(name)?.clone();
            let opts = SolveOptions {
                budget: cfg.budget(),
                max_strands: *max_strands,
                use_index_length: !no_index_length,
                ..SolveOptions::default()
            };
            Output::Solve(solve(&record, &table, &opts)?)
        }
        Command::Table { command: TableCommand::Validate } => {
            let table = match &cfg.table {
                Some(p) => KnotTable::parse_csv(std::fs::File::open(p)?)?,
                None => match std::env::var_os(crate::table::TABLE_ENV) {
                    Some(p) if !p.is_empty() => KnotTable::parse_csv(std::fs::File::open(p)?)?,
                    _ => KnotTable::bundled().clone(),
                },
            };
            let reports = table.validate_all();
            Output::Validate(ValidateReport {
                version: table.version().to_string(),
                rows: reports.len(),
                failures: reports.into_iter().filter(|r| !r.ok).collect(),
            })
        }
    })
}

/// Runs the command line, writing results to `out` and diagnostics to `err`.
pub fn run_with<O: Write, E: Write>(argv: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match cli.config.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t as usize).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => {
                let _ = writeln!(err, "error: cannot start {t} worker threads: {e}");
                return 1;
            }
        },
        None => execute(&cli),
    };
    match result {
        Ok(output) => {
            let rendered = match cli.config.format {
                Format::Json => output.to_json().map(|mut s| {
                    s.push('\n');
                    s
                }),
                Format::Text => Ok(output.to_text()),
            };
            match rendered {
                Ok(s) => {
                    let _ = out.write_all(s.as_bytes());
                    i32::from(output.failed())
                }
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Runs the command line against the process's standard streams.
pub fn run(argv: &[String]) -> i32 {
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
