//! `magiclab`: build, verify and search magic labelings from the shell.
//!
//! Exit codes: 0 success (or magic), 1 verified not magic / nothing found,
//! 2 usage, parse or hypothesis error, 3 search indeterminate.

mod input;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use magiclab::families::{complete_with_search, eit_feasible, eit_schedule, theta, FamilySpec};
use magiclab::graph::IndexBase;
use magiclab::index::Theta;
use magiclab::labeling::{verify_s_magic, LabelSet, Labeling};
use magiclab::rectangles::{self, balanced_even, balanced_odd, case1, case2, case3, construct_deleted};
use magiclab::search::{compute_index, enumerate_with, find_labeling, SearchConfig, SearchOutcome};
use magiclab::{IndexResult64, Rectangle64};

const EXIT_NOT_MAGIC: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INDETERMINATE: u8 = 3;

#[derive(Parser)]
#[command(name = "magiclab", version, about = "Distance magic labelings: constructions, verification and exact search")]
struct Cli {
    /// Vertex ids in edge lists start at 1 instead of 0.
    #[arg(long, global = true)]
    one_indexed: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Hnp,
    MHnp,
    MCycleLex,
    Lex,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum RectCase {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    Even,
    Odd,
    Deleted,
    Complement,
    Split,
}

#[derive(clap::Args)]
struct Budget {
    /// Stop after this many search nodes per label set.
    #[arg(long)]
    budget: Option<u64>,
    /// Wall-clock budget in milliseconds per label set.
    #[arg(long, env = "MAGICLAB_BUDGET_MS")]
    budget_ms: Option<u64>,
}

impl Budget {
    fn config(&self, cap: u64) -> SearchConfig {
        SearchConfig {
            node_limit: self.budget,
            time_budget: self.budget_ms.map(Duration::from_millis),
            ..SearchConfig::with_cap(cap)
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form index of a graph family, with a verified witness.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        /// Part or fiber size.
        #[arg(long)]
        n: usize,
        /// Number of parts, or cycle length. Not used with `lex`.
        #[arg(long)]
        p: Option<usize>,
        /// Number of disjoint copies.
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Regular base graph for `lex`.
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        out: OutFormat,
        /// Search for a witness when the closed form has none and the graph
        /// has at most this many vertices.
        #[arg(long, default_value_t = 12)]
        search_up_to: usize,
        #[command(flatten)]
        budget: Budget,
    },
    /// Check a labeling of a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labels: PathBuf,
    },
    /// Distance magic index by exact search.
    Index {
        #[arg(long)]
        graph: PathBuf,
        /// Largest index tried.
        #[arg(long, default_value_t = 2)]
        cap: u64,
        #[command(flatten)]
        budget: Budget,
    },
    /// Search for labelings from one label set.
    Search {
        #[arg(long)]
        graph: PathBuf,
        /// Comma separated labels. Defaults to 1..=order.
        #[arg(long, value_delimiter = ',', conflicts_with = "deleted")]
        set: Option<Vec<i64>>,
        /// Use {1..order+1} without this label.
        #[arg(long)]
        deleted: Option<usize>,
        /// List every labeling (capped at a small number of vertices).
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// Balanced rectangles as CSV.
    Rect {
        #[arg(long, value_enum)]
        case: RectCase,
        /// Rows for `3`, `even`, `odd`, `deleted`.
        #[arg(long)]
        n: Option<usize>,
        /// Columns for `even`, `odd`, `deleted`.
        #[arg(long)]
        p: Option<usize>,
        /// Size parameter for `1`, `2`, `3`; piece count for `split`.
        #[arg(long)]
        m: Option<usize>,
        /// Input CSV for `complement` and `split`.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Print only this piece of a split (0-based).
        #[arg(long)]
        piece: Option<usize>,
    },
    /// Equalized incomplete tournaments.
    Eit {
        #[arg(long)]
        teams: usize,
        #[arg(long)]
        rounds: usize,
        /// Schedule graph; with it a full schedule is printed.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Team strengths. Searched for when absent.
        #[arg(long, requires = "graph")]
        labels: Option<PathBuf>,
        /// Print the schedule as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
}

/// A message plus the exit code it maps to.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<magiclab::Error> for Failure {
    fn from(e: magiclab::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn json<S: serde::Serialize>(value: &S) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let base = if cli.one_indexed { IndexBase::One } else { IndexBase::Zero };
    let outcome = match cli.command {
        Command::Construct { family, n, p, m, base: base_path, out, search_up_to, budget } => {
            construct(family, n, p, m, base_path, out, search_up_to, &budget, base)
        }
        Command::Verify { graph, labels } => verify(&graph, &labels, base),
        Command::Index { graph, cap, budget } => index(&graph, cap, &budget, base),
        Command::Search { graph, set, deleted, all, budget } => search(&graph, set, deleted, all, &budget, base),
        Command::Rect { case, n, p, m, input, piece } => rect(case, n, p, m, input, piece),
        Command::Eit { teams, rounds, graph, labels, json } => eit(teams, rounds, graph, labels, json, base),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::usage(format!("--{flag} is required here")))
}

#[allow(clippy::too_many_arguments)]
fn construct(
    family: Family,
    n: usize,
    p: Option<usize>,
    m: usize,
    base_path: Option<PathBuf>,
    out: OutFormat,
    search_up_to: usize,
    budget: &Budget,
    base: IndexBase,
) -> Outcome {
    let spec = match family {
        Family::Hnp if m != 1 => return Err(Failure::usage("--m applies to m-hnp and m-cycle-lex")),
        Family::Hnp | Family::MHnp => FamilySpec::Multipartite { n, p: need(p, "p")?, m },
        Family::MCycleLex => FamilySpec::CycleLex { p: need(p, "p")?, n, m },
        Family::Lex => {
            let path = base_path.ok_or_else(|| Failure::usage("--base is required for lex"))?;
            FamilySpec::LexBlowup { base: input::graph(&path, base)?, n }
        }
    };
    spec.validate()?;
    let cfg = budget.config(SearchConfig::default().theta_cap);
    let result: IndexResult64 = theta(&spec, &cfg)?;
    let result = complete_with_search(result, &spec.graph()?, search_up_to, &cfg)?;
    match out {
        OutFormat::Json => println!("{}", json(&result)),
        OutFormat::Csv => {
            let w = result.witness.as_ref().ok_or_else(|| Failure::usage("no witness to print as CSV"))?;
            let mut csv = String::from("vertex,label\n");
            for (v, l) in w.assignment().iter().enumerate() {
                let _ = writeln!(csv, "{},{l}", v + usize::from(base == IndexBase::One));
            }
            print!("{csv}");
        }
    }
    Ok(0)
}

fn verify(graph: &Path, labels: &Path, base: IndexBase) -> Outcome {
    let g = &input::graph(graph, base)?;
    let labels = input::labels(labels)?;
    if labels.len() != g.order() {
        return Err(Failure::usage(format!("{} labels for {} vertices", labels.len(), g.order())));
    }
    let report = verify_s_magic(g, &labels);
    println!("{}", json(&report));
    Ok(if report.is_magic { 0 } else { EXIT_NOT_MAGIC })
}

fn index(path: &Path, cap: u64, budget: &Budget, base: IndexBase) -> Outcome {
    let g = input::graph(path, base)?;
    let result: IndexResult64 = compute_index(&g, &budget.config(cap))?;
    println!("{}", json(&result));
    Ok(if matches!(result.theta, Theta::UnknownAtCap(_)) { EXIT_INDETERMINATE } else { 0 })
}

fn search(
    path: &Path,
    set: Option<Vec<i64>>,
    deleted: Option<usize>,
    all: bool,
    budget: &Budget,
    base: IndexBase,
) -> Outcome {
    let g = input::graph(path, base)?;
    let s = match (set, deleted) {
        (Some(values), _) => LabelSet::new(values)?,
        (None, Some(a)) => LabelSet::without(g.order() + 1, a)?,
        (None, None) => LabelSet::initial(g.order())?,
    };
    let cfg = budget.config(0);
    let with_constant = |l: Labeling<i64>| {
        let c = verify_s_magic(&g, l.assignment()).constant;
        l.to_doc(c)
    };
    if all {
        let found: Vec<_> = enumerate_with(&g, &s, &cfg)?.into_iter().map(with_constant).collect();
        println!("{}", json(&found));
        return Ok(if found.is_empty() { EXIT_NOT_MAGIC } else { 0 });
    }
    match find_labeling(&g, &s, &cfg)? {
        SearchOutcome::Found(l) => {
            println!("{}", json(&with_constant(l)));
            Ok(0)
        }
        SearchOutcome::NotFound => {
            println!("null");
            Ok(EXIT_NOT_MAGIC)
        }
        SearchOutcome::Indeterminate => {
            eprintln!("search budget exhausted");
            Ok(EXIT_INDETERMINATE)
        }
    }
}

fn rect(
    case: RectCase,
    n: Option<usize>,
    p: Option<usize>,
    m: Option<usize>,
    input_path: Option<PathBuf>,
    piece: Option<usize>,
) -> Outcome {
    let input = || input::rectangle(input_path.as_deref().ok_or_else(|| Failure::usage("--input is required here"))?);
    let r: Rectangle64 = match case {
        RectCase::One => case1(need(m, "m")?)?,
        RectCase::Two => case2(need(m, "m")?)?,
        RectCase::Three => case3(need(n, "n")?, need(m, "m")?)?,
        RectCase::Even => balanced_even(need(n, "n")?, need(p, "p")?)?,
        RectCase::Odd => balanced_odd(need(n, "n")?, need(p, "p")?)?,
        RectCase::Deleted => construct_deleted(need(n, "n")?, need(p, "p")?)?,
        RectCase::Complement => rectangles::complement(&input()?)?,
        RectCase::Split => {
            let pieces = rectangles::split(&input()?, need(m, "m")?)?;
            match piece {
                Some(k) => print!("{}", pieces.get(k).ok_or_else(|| Failure::usage(format!("no piece {k}")))?.to_csv()),
                None => {
                    let text: Vec<String> = pieces.iter().map(Rectangle64::to_csv).collect();
                    print!("{}", text.join("\n"));
                }
            }
            return Ok(0);
        }
    };
    print!("{}", r.to_csv());
    Ok(0)
}

fn eit(
    teams: usize,
    rounds: usize,
    graph: Option<PathBuf>,
    labels: Option<PathBuf>,
    as_json: bool,
    base: IndexBase,
) -> Outcome {
    let Some(path) = graph else {
        println!("{}", json(&eit_feasible(teams, rounds)));
        return Ok(0);
    };
    let g = input::graph(&path, base)?;
    if g.order() != teams || g.regular_degree() != Some(rounds) {
        return Err(Failure::usage(format!(
            "schedule graph must be {rounds}-regular on {teams} vertices (order {}, degree {:?})",
            g.order(),
            g.regular_degree()
        )));
    }
    let strengths = match labels {
        Some(p) => Labeling::new(input::labels(&p)?)?,
        None => match find_labeling(&g, &LabelSet::initial(teams)?, &SearchConfig::default())? {
            SearchOutcome::Found(l) => l,
            SearchOutcome::NotFound => {
                eprintln!("no distance magic labeling of this graph");
                return Ok(EXIT_NOT_MAGIC);
            }
            SearchOutcome::Indeterminate => return Ok(EXIT_INDETERMINATE),
        },
    };
    let schedule = match eit_schedule(&g, &strengths) {
        Ok(s) => s,
        Err(magiclab::Error::NotMagic(why)) => {
            eprintln!("labels are not magic: {why}");
            return Ok(EXIT_NOT_MAGIC);
        }
        Err(e) => return Err(e.into()),
    };
    if as_json {
        println!("{}", json(&schedule));
    } else {
        print!("{schedule}");
    }
    Ok(0)
}
