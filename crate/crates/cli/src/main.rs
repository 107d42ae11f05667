use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use permlab::bounds::{sandwich_report, write_csv, write_sweep_csv, BoundReport};
use permlab::claims::{run_claim, ClaimId, ClaimReport};
use permlab::graphs::{
    enumerate_maximal, export_graph, is_maximal, is_permutation_labeling, maximal_graph, EnumerationCaps,
    ExportFormat, Policy, VertexLabeledGraph,
};
use permlab::labels::{CollisionTable, TableMode};
use permlab::numtheory::{install_prime_table, PrimeTable};
use permlab::witness::{SetId, WitnessConfig, WitnessSets};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "permlab", version, about = "Edge counts and bounds for maximal permutation graphs")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct RunConfig {
    /// Smallest s admitted in S2
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..=3))]
    s_min: u32,

    /// Use strict top < n for S4/S5
    #[arg(long, global = true)]
    strict_tops: bool,

    /// Largest n for exact collision counts
    #[arg(long, global = true, default_value_t = 300)]
    oracle_cap: u32,

    /// Largest number of graphs `enumerate` may produce
    #[arg(long, global = true, default_value_t = 1_000_000)]
    enumeration_cap: u128,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,

    /// Seed for the random graph policy
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

impl RunConfig {
    fn witness(&self) -> WitnessConfig {
        WitnessConfig::new(self.s_min, self.strict_tops)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    EdgeList,
    Dot,
}

impl From<GraphFormat> for ExportFormat {
    fn from(f: GraphFormat) -> Self {
        match f {
            GraphFormat::EdgeList => ExportFormat::EdgeList,
            GraphFormat::Dot => ExportFormat::Dot,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    LexMin,
    LexMax,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Fingerprint,
}

#[derive(Subcommand)]
enum Command {
    /// Lower bound, upper bound and exact edge count at one n
    Bounds {
        #[arg(long)]
        n: u32,
        /// Fail instead of omitting the exact count beyond the oracle cap
        #[arg(long)]
        with_exact: bool,
    },
    /// Exact edge count D(n) of a maximal permutation graph
    Exact {
        #[arg(long)]
        n: u32,
    },
    /// Collision classes as CSV
    Classes {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        min_size: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
    },
    /// Witness sets S1..S6 as CSV
    Witness {
        #[arg(long)]
        n: u32,
        /// Restrict to one set (S1..S6)
        #[arg(long)]
        set: Option<String>,
    },
    /// Check lemma and theorem statements; prints JSON reports
    Verify {
        /// Comma-separated ids: L1..L5, T31, T32, T41, T43
        #[arg(long, value_delimiter = ',', required = true)]
        claims: Vec<String>,
        #[arg(long)]
        n_max: u32,
        /// Exit 1 when any counterexample is found
        #[arg(long)]
        strict: bool,
    },
    /// One maximal permutation graph
    Graph {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = PolicyArg::LexMin)]
        policy: PolicyArg,
        #[arg(long = "graph-format", value_enum, default_value_t = GraphFormat::EdgeList)]
        graph_format: GraphFormat,
    },
    /// Every maximal permutation graph on n vertices
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long = "graph-format", value_enum, default_value_t = GraphFormat::EdgeList)]
        graph_format: GraphFormat,
        /// Largest n accepted
        #[arg(long, default_value_t = 12)]
        max_n: u32,
    },
    /// Read an edge list and report permutation/maximality
    Check {
        #[arg(long)]
        file: PathBuf,
        /// Vertex count; defaults to the largest vertex in the file
        #[arg(long)]
        n: Option<u32>,
    },
    /// One bounds row per n, as CSV
    Sweep {
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl Command {
    /// Largest integer the command needs primes up to.
    fn prime_limit(&self) -> u64 {
        let n = match self {
            Command::Bounds { n, .. }
            | Command::Exact { n }
            | Command::Classes { n, .. }
            | Command::Witness { n, .. }
            | Command::Graph { n, .. }
            | Command::Enumerate { n, .. } => *n,
            Command::Verify { n_max, .. } => *n_max,
            Command::Sweep { to, .. } => *to,
            Command::Check { .. } => 0,
        };
        (n as u64).max(1024)
    }
}

/// An error mapped to a specific exit code.
struct Exit(u8);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(Exit(code)) = e.downcast_ref::<Exit>() {
                return ExitCode::from(*code);
            }
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

impl std::fmt::Debug for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "exit {}", self.0)
    }
}

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "exit {}", self.0)
    }
}

impl std::error::Error for Exit {}

fn load_prime_cache(limit: u64) -> anyhow::Result<()> {
    if let Some(dir) = std::env::var_os("PERMLAB_CACHE_DIR") {
        let table = PrimeTable::load_or_build(limit, dir.as_ref()).context("prime cache")?;
        install_prime_table(table);
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    load_prime_cache(cli.command.prime_limit())?;
    let cfg = &cli.run;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Bounds { n, with_exact } => {
            if n < 3 {
                bail!("bounds need n >= 3");
            }
            let exact = with_exact || n <= cfg.oracle_cap;
            let report = sandwich_report(n, cfg.witness(), exact, cfg.oracle_cap)?;
            print_report(&report, cfg.format, &mut out)?;
        }
        Command::Exact { n } => {
            check_cap(n, cfg.oracle_cap)?;
            let d = CollisionTable::build(n, TableMode::Exact)?.distinct_count();
            writeln!(out, "{d}")?;
        }
        Command::Classes { n, min_size, mode } => {
            check_cap(n, cfg.oracle_cap)?;
            let mode = match mode {
                ModeArg::Exact => TableMode::Exact,
                ModeArg::Fingerprint => TableMode::Fingerprint,
            };
            CollisionTable::build(n, mode)?.write_csv(min_size, &mut out)?;
        }
        Command::Witness { n, set } => {
            let sets = WitnessSets::generate(n, cfg.witness())?;
            match set {
                None => sets.write_csv(&mut out)?,
                Some(name) => {
                    let id = SetId::ALL
                        .into_iter()
                        .find(|s| s.to_string().eq_ignore_ascii_case(&name))
                        .with_context(|| format!("unknown set `{name}`"))?;
                    let mut only = sets;
                    for s in only.sets.iter_mut().filter(|s| s.set != id) {
                        s.elements.clear();
                        s.values.clear();
                    }
                    only.write_csv(&mut out)?;
                }
            }
        }
        Command::Verify { claims, n_max, strict } => {
            let ids = claims
                .iter()
                .map(|c| c.parse::<ClaimId>().map_err(anyhow::Error::msg))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let reports = ids
                .into_iter()
                .map(|id| run_claim(id, n_max, cfg.witness(), cfg.oracle_cap))
                .collect::<permlab::Result<Vec<ClaimReport>>>()?;
            serde_json::to_writer_pretty(&mut out, &reports)?;
            writeln!(out)?;
            out.flush()?;
            if strict && reports.iter().any(|r| !r.is_verified()) {
                return Err(Exit(EXIT_VIOLATION).into());
            }
        }
        Command::Graph { n, policy, graph_format } => {
            check_cap(n, cfg.oracle_cap)?;
            let policy = match policy {
                PolicyArg::LexMin => Policy::LexMin,
                PolicyArg::LexMax => Policy::LexMax,
                PolicyArg::Random => Policy::SeededRandom(cfg.seed),
            };
            let g = maximal_graph(n, policy)?;
            write!(out, "{}", export_graph(&g, graph_format.into()))?;
        }
        Command::Enumerate { n, graph_format, max_n } => {
            let caps = EnumerationCaps { max_n, max_graphs: cfg.enumeration_cap };
            let graphs = enumerate_maximal(n, caps)?;
            let total = graphs.total();
            for (i, g) in graphs.enumerate() {
                writeln!(out, "# graph {} of {total}", i + 1)?;
                write!(out, "{}", export_graph(&g, graph_format.into()))?;
            }
        }
        Command::Check { file, n } => {
            let text = std::fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let g = VertexLabeledGraph::parse_edge_list(&text, n)?;
            let permutation = is_permutation_labeling(&g);
            let maximal = if permutation { Some(is_maximal(&g)?) } else { None };
            let summary = serde_json::json!({
                "n": g.n(),
                "edges": g.edge_count(),
                "permutation": permutation,
                "maximal": maximal,
            });
            serde_json::to_writer(&mut out, &summary)?;
            writeln!(out)?;
        }
        Command::Sweep { from, to, out: path } => {
            if from < 3 || from > to {
                bail!("sweep needs 3 <= from <= to, got {from}..{to}");
            }
            match path {
                Some(path) => {
                    let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                    let mut w = BufWriter::new(file);
                    write_sweep_csv(from, to, cfg.witness(), cfg.oracle_cap, &mut w)?;
                    w.flush()?;
                }
                None => write_sweep_csv(from, to, cfg.witness(), cfg.oracle_cap, &mut out)?,
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn check_cap(n: u32, cap: u32) -> anyhow::Result<()> {
    if n > cap {
        bail!(permlab::Error::OracleCap { n: n as u64, cap: cap as u64 });
    }
    Ok(())
}

fn print_report<W: Write>(report: &BoundReport, format: OutputFormat, out: &mut W) -> anyhow::Result<()> {
    match format {
        OutputFormat::Csv => write_csv(std::slice::from_ref(report), None, out)?,
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)?;
        }
        OutputFormat::Text => {
            let exact = report.exact.map_or("-".to_string(), |d| d.to_string());
            writeln!(out, "n              {}", report.n)?;
            writeln!(out, "lower (union)  {}", report.lower_union)?;
            writeln!(out, "lower (closed) {}", report.lower_formula)?;
            writeln!(out, "exact D(n)     {exact}")?;
            writeln!(out, "upper          {}", report.upper)?;
            writeln!(out, "upper (all h)  {}", report.upper_extended)?;
            writeln!(out, "delta          {}", report.delta)?;
            let c = &report.set_cards;
            writeln!(out, "|S1|={} |S2|={} |S3|={} |S4∪S5|={} |S6|={}", c.s1, c.s2, c.s3, c.s45, c.s6)?;
            writeln!(out, "config         {}", report.config.id())?;
        }
    }
    Ok(())
}
