//! The `closedg` command line.
//!
//! Exit status: 0 success, 1 usage or parse error, 2 precondition error,
//! 3 a theorem verdict or oracle cross-check came out false.

mod records;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::census::{
    census_total, census_total_bruteforce, count_closed_graphs, enumerate_closed_graphs,
    LayerPartition,
};
use crate::closedness::{
    first_violation, is_closed_by_intervals, layer_decomposition, verify_layer_theorems,
};
use crate::clustering::{clustering_profile, verify_clustering_bounds, Exact};
use crate::edge_list::parse_edge_list;
use crate::error::Error;
use crate::exchange::{count_closed_labelings, enumerate_closed_labelings, exchange_partition};
use crate::graph::{diameter, Graph};
use crate::search::{find_closed_labeling, is_closed_graph, Oracle, DEFAULT_ORACLE_BOUND};

pub use records::Record;

/// Largest oracle bound accepted on the command line.
pub const MAX_ORACLE_BOUND: usize = 10;
/// Largest `n` for the brute-force census cross-check.
pub const MAX_CENSUS_CHECK_N: usize = 7;

#[derive(Parser, Debug)]
#[command(name = "closedg", version, about = "Closed labelings and closed graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    /// Largest vertex count for brute-force cross-checks (at most 10).
    #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND, global = true)]
    oracle_bound: usize,
    /// Maximum number of items emitted by an enumeration.
    #[arg(long, default_value_t = 1000, global = true)]
    page: u64,
    /// Number of enumerated items to skip before the page starts.
    #[arg(long, default_value_t = 0, global = true)]
    offset: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Records,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Edge-list file (`-` for stdin).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Inline edge list with `;` separating lines, e.g. "3 2;1 2;2 3".
    #[arg(long)]
    inline: Option<String>,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct CensusTarget {
    /// Layer sizes, e.g. "1,2,1" or "2,1".
    #[arg(long)]
    partition: Option<String>,
    /// All layer sizes summing to this vertex count.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum LabelMode {
    Find,
    Count,
    Enumerate,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CensusMode {
    Count,
    Enumerate,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closedness of the given labeling, layers and diameter.
    Check {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Find, count or list closed labelings.
    Label {
        #[arg(value_enum)]
        mode: LabelMode,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Count or list connected closed graphs by layer sizes.
    Census {
        #[arg(value_enum)]
        mode: CensusMode,
        #[command(flatten)]
        target: CensusTarget,
    },
    /// Clustering coefficients and their bounds.
    Cluster {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Cross-check search and formulas against brute force.
    Oracle {
        #[arg(long, conflicts_with_all = ["input", "inline"])]
        census_n: Option<usize>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        inline: Option<String>,
    },
}

#[derive(Clone, Debug)]
pub enum InputSource {
    File(PathBuf),
    Inline(String),
}

/// Settings shared by all subcommands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub format: Format,
    pub oracle_bound: usize,
    pub page: u64,
    pub offset: u64,
}

/// Records produced by a command plus the exit status they imply.
#[derive(Debug)]
pub struct Outcome {
    pub records: Vec<Record>,
    pub status: i32,
}

impl Outcome {
    fn ok(records: Vec<Record>) -> Self {
        Outcome { records, status: 0 }
    }

    fn verdict(records: Vec<Record>, holds: bool) -> Self {
        Outcome { records, status: if holds { 0 } else { 3 } }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn status(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Lib(e) => match e {
                Error::Parse { .. }
                | Error::InvalidPartition(_)
                | Error::Domain(_)
                | Error::InvalidLabeling(_)
                | Error::InvalidSequence(_)
                | Error::VertexOutOfRange { .. } => 1,
                _ => 2,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

fn load(src: &InputSource) -> Result<Graph, Failure> {
    let text = match src {
        InputSource::File(p) if p.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            s
        }
        InputSource::File(p) => std::fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?,
        InputSource::Inline(s) => s.replace(';', "\n"),
    };
    Ok(parse_edge_list(&text)?)
}

fn source(input: Option<PathBuf>, inline: Option<String>) -> Result<InputSource, Failure> {
    match (input, inline) {
        (Some(p), None) => Ok(InputSource::File(p)),
        (None, Some(s)) => Ok(InputSource::Inline(s)),
        _ => Err(Failure::Usage("give exactly one of --input or --inline".into())),
    }
}

pub fn cmd_check(g: &Graph) -> Result<Outcome, Error> {
    let connected = g.is_connected();
    let violation = first_violation(g);
    let mut records = vec![Record::Input { n: g.n(), m: g.edge_count(), connected }];
    let (intervals, layers, diam) = if connected {
        let ld = layer_decomposition(g)?;
        (
            Some(is_closed_by_intervals(g)?),
            Some(ld.layers().to_vec()),
            Some(diameter(g)?),
        )
    } else {
        (None, None, None)
    };
    records.push(Record::Check {
        closed_by_definition: violation.is_none(),
        violation: violation.map(|v| v.to_string()),
        closed_by_intervals: intervals,
        h: layers.as_ref().map(|l| l.len() - 1),
        layers,
        diameter: diam,
    });
    if !connected {
        records.push(Record::Warning {
            message: "input is not connected; layers and diameter skipped".into(),
        });
        return Ok(Outcome::ok(records));
    }
    if violation.is_none() {
        let report = verify_layer_theorems(g)?;
        let holds = report.all_hold();
        records.push(Record::LayerTheorems(report));
        return Ok(Outcome::verdict(records, holds));
    }
    Ok(Outcome::ok(records))
}

pub fn cmd_label_find(g: &Graph) -> Outcome {
    Outcome::ok(vec![Record::Find { labeling: find_closed_labeling(g) }])
}

pub fn cmd_label_count(g: &Graph, cfg: &RunConfig) -> Result<Outcome, Error> {
    let formula = count_closed_labelings(g)?;
    let oracle = if g.n() <= cfg.oracle_bound {
        Some(BigUint::from(Oracle::with_bound(cfg.oracle_bound).count(g)?))
    } else {
        None
    };
    let agree = oracle.as_ref().map(|o| *o == formula);
    let rec = Record::Count {
        classes: exchange_partition(g).classes().to_vec(),
        formula: formula.to_string(),
        oracle: oracle.map(|o| o.to_string()),
        agree,
    };
    Ok(Outcome::verdict(vec![rec], agree != Some(false)))
}

pub fn cmd_label_enumerate(g: &Graph, cfg: &RunConfig) -> Result<Outcome, Error> {
    let total = count_closed_labelings(g)?;
    let mut records: Vec<Record> = enumerate_closed_labelings(g)?
        .enumerate()
        .skip(cfg.offset as usize)
        .take(cfg.page as usize)
        .map(|(i, labeling)| Record::Labeling { index: i as u64, labeling })
        .collect();
    records.push(Record::Page {
        offset: cfg.offset,
        emitted: records.len() as u64,
        total: total.to_string(),
    });
    Ok(Outcome::ok(records))
}

fn census_partitions(target: &CensusTarget) -> Result<Vec<LayerPartition>, Error> {
    match (&target.partition, target.n) {
        (Some(p), None) => Ok(vec![LayerPartition::parse(p)?]),
        (None, Some(n)) => LayerPartition::all(n),
        _ => Err(Error::Domain("give exactly one of --partition or --n".into())),
    }
}

pub fn cmd_census_count_partition(p: &LayerPartition) -> Outcome {
    Outcome::ok(vec![Record::CensusCount {
        partition: p.clone(),
        count: count_closed_graphs(p).to_string(),
    }])
}

pub fn cmd_census_count_n(n: usize) -> Result<Outcome, Error> {
    let total = census_total(n)?;
    let compositions = BigUint::from(2u32).pow(n.saturating_sub(2) as u32);
    Ok(Outcome::ok(vec![Record::CensusTotal {
        n,
        compositions: compositions.to_string(),
        total: total.to_string(),
    }]))
}

pub fn cmd_census_enumerate(parts: &[LayerPartition], cfg: &RunConfig) -> Outcome {
    let total: BigUint = parts.iter().map(count_closed_graphs).sum();
    let mut records: Vec<Record> = parts
        .iter()
        .flat_map(|p| enumerate_closed_graphs(p).map(move |(f, g)| (p.clone(), f, g)))
        .enumerate()
        .skip(cfg.offset as usize)
        .take(cfg.page as usize)
        .map(|(i, (partition, sequences, g))| Record::ClosedGraph {
            index: i as u64,
            partition,
            sequences,
            n: g.n(),
            edges: g.edges(),
        })
        .collect();
    records.push(Record::Page {
        offset: cfg.offset,
        emitted: records.len() as u64,
        total: total.to_string(),
    });
    Outcome::ok(records)
}

pub fn cmd_cluster(g: &Graph) -> Result<Outcome, Error> {
    let profile = clustering_profile(g);
    let mut records: Vec<Record> = profile
        .per_vertex
        .iter()
        .map(|v| {
            let e = Exact::from(&v.coefficient);
            Record::Vertex { vertex: v.vertex, degree: v.degree, c_v: e.exact, c_v_approx: e.approx }
        })
        .collect();
    let cws = Exact::from(&profile.cws);
    let cl = profile.classes;
    records.push(Record::Clustering {
        n: g.n(),
        cws: cws.exact,
        cws_approx: cws.approx,
        high_degree: cl.high,
        closed_wedges: cl.closed_wedge,
        open_wedges: cl.open_wedge,
        leaves: cl.leaves,
        isolated: cl.isolated,
    });
    let skip_reason = if g.n() <= 1 {
        Some("skipped (single vertex)")
    } else if !g.is_connected() {
        Some("skipped (input not connected)")
    } else if !is_closed_graph(g) {
        Some("skipped (input not closed)")
    } else {
        None
    };
    if let Some(reason) = skip_reason {
        records.push(Record::Warning { message: format!("bound verdicts {reason}") });
        records.push(Record::Bounds { status: reason.into(), h: None, cws_floor: None, verdicts: None });
        return Ok(Outcome::ok(records));
    }
    let report = verify_clustering_bounds(g)?;
    let holds = report.verdicts.all_hold();
    records.push(Record::Bounds {
        status: "checked".into(),
        h: Some(report.h),
        cws_floor: Some(Exact::from(&report.cws_floor).exact),
        verdicts: Some(report.verdicts),
    });
    Ok(Outcome::verdict(records, holds))
}

pub fn cmd_oracle_graph(g: &Graph, cfg: &RunConfig) -> Result<Outcome, Error> {
    let oracle = Oracle::with_bound(cfg.oracle_bound);
    let all = oracle.closed_labelings(g)?;
    let found = find_closed_labeling(g);
    let search_agrees = found.is_some() == !all.is_empty();
    let least_labeling_agrees = found.as_ref() == all.first();
    let (formula, formula_agrees, enumeration_agrees) = if g.is_connected() && !all.is_empty() {
        let formula = count_closed_labelings(g)?;
        let mut listed: Vec<_> = enumerate_closed_labelings(g)?.collect();
        listed.sort();
        (
            Some(formula.to_string()),
            Some(formula == BigUint::from(all.len())),
            Some(listed == all),
        )
    } else {
        (None, None, None)
    };
    let holds = search_agrees
        && least_labeling_agrees
        && formula_agrees != Some(false)
        && enumeration_agrees != Some(false);
    Ok(Outcome::verdict(
        vec![Record::OracleCheck {
            n: g.n(),
            bound: cfg.oracle_bound,
            oracle_count: all.len() as u64,
            search_agrees,
            least_labeling_agrees,
            formula,
            formula_agrees,
            enumeration_agrees,
        }],
        holds,
    ))
}

pub fn cmd_oracle_census(n: usize) -> Result<Outcome, Error> {
    if n == 0 || n > MAX_CENSUS_CHECK_N {
        return Err(Error::Domain(format!(
            "census cross-check supports 1 <= n <= {MAX_CENSUS_CHECK_N}"
        )));
    }
    let formula = census_total(n)?;
    let brute = census_total_bruteforce(n)?;
    let agree = formula == BigUint::from(brute);
    Ok(Outcome::verdict(
        vec![Record::CensusCheck { n, formula: formula.to_string(), bruteforce: brute, agree }],
        agree,
    ))
}

fn dispatch(cli: Cli) -> Result<Outcome, Failure> {
    if cli.oracle_bound > MAX_ORACLE_BOUND {
        return Err(Failure::Usage(format!(
            "--oracle-bound must be at most {MAX_ORACLE_BOUND}"
        )));
    }
    if cli.page == 0 {
        return Err(Failure::Usage("--page must be at least 1".into()));
    }
    let cfg = RunConfig {
        format: cli.format,
        oracle_bound: cli.oracle_bound,
        page: cli.page,
        offset: cli.offset,
    };
    let out = match cli.command {
        Command::Check { input } => cmd_check(&load(&source(input.input, input.inline)?)?)?,
        Command::Label { mode, input } => {
            let g = load(&source(input.input, input.inline)?)?;
            match mode {
                LabelMode::Find => cmd_label_find(&g),
                LabelMode::Count => cmd_label_count(&g, &cfg)?,
                LabelMode::Enumerate => cmd_label_enumerate(&g, &cfg)?,
            }
        }
        Command::Census { mode, target } => match (mode, target.n) {
            (CensusMode::Count, Some(n)) => cmd_census_count_n(n)?,
            (CensusMode::Count, None) => {
                let parts = census_partitions(&target)?;
                cmd_census_count_partition(&parts[0])
            }
            (CensusMode::Enumerate, _) => cmd_census_enumerate(&census_partitions(&target)?, &cfg),
        },
        Command::Cluster { input } => cmd_cluster(&load(&source(input.input, input.inline)?)?)?,
        Command::Oracle { census_n: Some(n), .. } => cmd_oracle_census(n)?,
        Command::Oracle { census_n: None, input, inline } => {
            cmd_oracle_graph(&load(&source(input, inline)?)?, &cfg)?
        }
    };
    Ok(out)
}

/// Parses `args` (including the program name), runs the command and writes
/// its output; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let format = cli.format;
    match dispatch(cli) {
        Ok(outcome) => {
            for r in &outcome.records {
                let line = match format {
                    Format::Human => r.to_human(),
                    Format::Records => r.to_json(),
                };
                let _ = writeln!(out, "{line}");
            }
            if outcome.status == 3 {
                let _ = writeln!(err, "error: a theorem verdict came out false");
            }
            outcome.status
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.status()
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
