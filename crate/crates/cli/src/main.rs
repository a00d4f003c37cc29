use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use steiner_core::enumerate::{self, EnumFilter, Shard};
use steiner_core::extremal::{self, ExtremalQuery, SearchOptions, DEFAULT_WITNESS_CAP};
use steiner_core::families::{self, FamilySpec};
use steiner_core::report::{self, ExtremalRecord, ReportDocument};
use steiner_core::steiner::{Method, SteinerContext, TerminalSet};
use steiner_core::verify::{self, ClaimId, Status};
use steiner_core::{graph6, Error as CoreError};

const EXIT_CLAIM_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "steiner", version, about = "Steiner k-diameters and the extremal function e_k(n, l, d)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print sdiam_k of each graph6 line read from FILE (or stdin).
    Sdiam {
        #[arg(short, default_value_t = 3)]
        k: usize,
        file: Option<PathBuf>,
    },
    /// Steiner distance of a terminal set.
    Steiner {
        /// Graph in graph6.
        graph: String,
        /// Terminal vertices (0-based), at least two.
        #[arg(required = true, num_args = 2..)]
        terminals: Vec<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Also print the edges of a minimum Steiner tree.
        #[arg(long)]
        witness: bool,
    },
    /// Build a named family member, e.g. `cycle:9`, `tabc:1,2,3`, `layered:3,3,5`.
    Construct {
        spec: String,
        /// Print measured order, size, degrees and sdiam_3.
        #[arg(long)]
        props: bool,
    },
    /// Stream non-isomorphic graphs as graph6.
    Enumerate {
        #[arg(short)]
        n: usize,
        /// Exact maximum degree.
        #[arg(short = 'l')]
        max_degree: Option<usize>,
        /// Exact edge count.
        #[arg(short = 'm')]
        edges: Option<usize>,
        /// Include disconnected graphs.
        #[arg(long)]
        all: bool,
        /// Print only the number of graphs.
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        shard: ShardArgs,
    },
    /// Compute e_k(n, l, d) exactly, sweep a range of orders, or merge shard reports.
    Extremal(ExtremalArgs),
    /// Check closed-form claims against the exhaustive search.
    Verify {
        /// Claim id such as THM_4_2.
        claim: Option<String>,
        #[arg(long, conflicts_with = "claim")]
        all: bool,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ShardArgs {
    /// Split the search into this many disjoint parts.
    #[arg(long, default_value_t = 1, requires = "shard")]
    shards: usize,
    /// Which part to run (0-based).
    #[arg(long, requires = "shards")]
    shard: Option<usize>,
}

impl ShardArgs {
    fn resolve(&self) -> Result<Shard> {
        Ok(Shard::new(self.shard.unwrap_or(0), self.shards)?)
    }

    fn echo(&self) -> serde_json::Value {
        match self.shard {
            Some(i) => json!({ "shard": i, "shards": self.shards }),
            None => json!({}),
        }
    }
}

#[derive(Args)]
struct ExtremalArgs {
    #[arg(short)]
    n: Option<usize>,
    #[arg(short = 'l')]
    ell: Option<usize>,
    #[arg(short)]
    d: Option<usize>,
    #[arg(short, default_value_t = 3)]
    k: usize,
    /// Every cell (n, l, d) for orders LO..=HI, written as LO:HI.
    #[arg(long, value_name = "LO:HI", conflicts_with_all = ["n", "ell", "d"])]
    sweep: Option<String>,
    /// Merge these shard reports instead of searching.
    #[arg(long, num_args = 1.., value_name = "REPORT", conflicts_with_all = ["n", "ell", "d", "sweep"])]
    merge: Vec<PathBuf>,
    /// Keep every minimal witness instead of the first ten.
    #[arg(long)]
    all_witnesses: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    shard: ShardArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Median,
    Dp,
    Superset,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Median => Method::Median,
            MethodArg::Dp => Method::SubsetDp,
            MethodArg::Superset => Method::Superset,
        }
    }
}

/// An error that maps to the usage exit code.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            if err
                .downcast_ref::<io::Error>()
                .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
            {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Usage>().is_some() {
        return EXIT_USAGE;
    }
    match err.downcast_ref::<CoreError>() {
        Some(e) if e.is_cap() => EXIT_CAP,
        Some(CoreError::Report(_)) | None => EXIT_CLAIM_FAILED,
        Some(_) => EXIT_USAGE,
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Sdiam { k, file } => sdiam(&mut out, k, file.as_deref())?,
        Command::Steiner {
            graph,
            terminals,
            method,
            witness,
        } => {
            let g = graph6::decode(&graph)?;
            let s = TerminalSet::new(terminals, g.order())?;
            let cx = SteinerContext::new(&g);
            let (value, tree) = cx.distance_with_witness(&s, method.into())?;
            writeln!(out, "{value}")?;
            if witness {
                let edges: Vec<String> = tree
                    .map(|t| t.tree_edges.iter().map(|(u, v)| format!("{u}-{v}")).collect())
                    .unwrap_or_default();
                writeln!(out, "{}", edges.join(" "))?;
            }
        }
        Command::Construct { spec, props } => {
            let spec: FamilySpec = spec.parse()?;
            let g = families::build(&spec)?;
            writeln!(out, "{}", graph6::encode(&g)?)?;
            if props {
                let p = g.degree_profile();
                let sdiam3 = if g.order() >= 3 {
                    SteinerContext::new(&g).sdiam(3)?.to_string()
                } else {
                    "undefined".into()
                };
                writeln!(
                    out,
                    "order={} edges={} max_degree={} min_degree={} leaves={} sdiam3={sdiam3}",
                    g.order(),
                    g.edge_count(),
                    p.max_degree,
                    p.min_degree,
                    p.leaf_count
                )?;
                if spec.is_interpretation() {
                    writeln!(out, "note: {spec} follows a reconstructed reading of an inconsistent definition")?;
                }
            }
        }
        Command::Enumerate {
            n,
            max_degree,
            edges,
            all,
            count,
            shard,
        } => {
            let mut filter = if all { EnumFilter::all(n) } else { EnumFilter::connected(n) };
            filter.max_degree = max_degree;
            filter.edge_count = edges;
            let shard = shard.resolve()?;
            if count {
                writeln!(out, "{}", enumerate::count(&filter, shard)?)?;
            } else {
                for g in enumerate::generate(&filter, shard)? {
                    writeln!(out, "{}", graph6::encode(&g)?)?;
                }
            }
        }
        Command::Extremal(args) => extremal(&mut out, args)?,
        Command::Verify {
            claim,
            all,
            n_max,
            format,
            output,
        } => return verify_cmd(&mut out, claim, all, n_max, format, output.as_deref()),
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn sdiam(out: &mut impl Write, k: usize, file: Option<&Path>) -> Result<()> {
    let reader: Box<dyn BufRead> = match file {
        Some(path) => Box::new(BufReader::new(
            fs::File::open(path).with_context(|| format!("cannot open {}", path.display()))?,
        )),
        None => Box::new(io::stdin().lock()),
    };
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let g = graph6::decode(line.trim()).with_context(|| format!("line {}", i + 1))?;
        let value = SteinerContext::new(&g)
            .sdiam(k)
            .with_context(|| format!("line {}", i + 1))?;
        writeln!(out, "{value}")?;
    }
    Ok(())
}

fn emit(out: &mut impl Write, output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_sweep(spec: &str) -> Result<(usize, usize)> {
    let bad = || usage(format!("--sweep expects LO:HI, got {spec:?}"));
    let (lo, hi) = spec.split_once(':').ok_or_else(bad)?;
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn extremal(out: &mut impl Write, args: ExtremalArgs) -> Result<()> {
    let doc = if !args.merge.is_empty() {
        let docs = args
            .merge
            .iter()
            .map(|p| {
                let text = fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?;
                report::parse_extremal_document(&text).with_context(|| p.display().to_string())
            })
            .collect::<Result<Vec<_>>>()?;
        report::merge_documents(&docs)?
    } else {
        let opts = SearchOptions {
            witness_cap: (!args.all_witnesses).then_some(DEFAULT_WITNESS_CAP),
            shard: args.shard.resolve()?,
        };
        let mut query = args.shard.echo();
        let map = query.as_object_mut().expect("echo is an object");
        map.insert("k".into(), json!(args.k));
        map.insert("all_witnesses".into(), json!(args.all_witnesses));
        if let Some(sweep) = &args.sweep {
            let (lo, hi) = parse_sweep(sweep)?;
            map.insert("orders".into(), json!([lo, hi]));
            let results = extremal::sweep(lo..=hi, args.k, &opts)?;
            report::extremal_document("sweep", query, &results)?
        } else {
            let (Some(n), Some(ell), Some(d)) = (args.n, args.ell, args.d) else {
                return Err(usage("extremal needs -n, -l and -d (or --sweep / --merge)"));
            };
            map.insert("n".into(), json!(n));
            map.insert("ell".into(), json!(ell));
            map.insert("d".into(), json!(d));
            let q = ExtremalQuery::new(n, ell, d).with_k(args.k);
            let result = extremal::compute_e_with(&q, &opts)?;
            report::extremal_document("extremal", query, &[result])?
        }
    };
    emit(out, args.output.as_deref(), &render_extremal(&doc, args.format)?)
}

fn render_extremal(doc: &ReportDocument<ExtremalRecord>, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => doc.to_json()?,
        Format::Csv => report::extremal_csv(&doc.results)?,
    })
}

fn verify_cmd(
    out: &mut impl Write,
    claim: Option<String>,
    all: bool,
    n_max: usize,
    format: Format,
    output: Option<&Path>,
) -> Result<ExitCode> {
    let start = Instant::now();
    let suite = match (claim, all) {
        (Some(id), false) => {
            let id: ClaimId = id.parse()?;
            verify::suite(n_max, vec![verify::run_claim(id, n_max)?])
        }
        (None, true) => verify::run_all(n_max)?,
        _ => return Err(usage("verify needs a claim id or --all")),
    };
    let query = json!({
        "claims": suite.claims.iter().map(|c| c.claim.as_str()).collect::<Vec<_>>(),
        "n_max": n_max,
    });
    let text = match format {
        Format::Json => report::suite_document(query, &suite, start.elapsed())?.to_json()?,
        Format::Csv => report::suite_csv(&suite)?,
    };
    emit(out, output, &text)?;
    out.flush()?;
    for w in &suite.summary.warnings {
        eprintln!("warning: discrepancy-documented: {w}");
    }
    for c in suite.claims.iter().filter(|c| c.status == Status::Fail) {
        for case in c.failures() {
            eprintln!(
                "FAIL {} [{}]: expected {}, computed {}",
                c.claim, case.params, case.expected, case.computed
            );
        }
    }
    Ok(if suite.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CLAIM_FAILED)
    })
}
