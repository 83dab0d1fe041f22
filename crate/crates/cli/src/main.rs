use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use noverlap::bench::{self, BenchConfig, CsvOptions, GroupBy, Preset, RunOptions};
use noverlap::corpus::{self, CorpusSpec, GraphModel, DEFAULT_LAYOUT_ITERATIONS};
use noverlap::io::{read_graph_file, read_paired_json, write_json, write_json_file};
use noverlap::metrics::{compute_metrics, MetricOptions};
use noverlap::{adjust, AdjustParams, AdjustmentPair, Algorithm, Embedding, Metric, SizedGraph};

/// Node overlap removal for graph layouts, with quality metrics and a
/// benchmark harness.
#[derive(Parser)]
#[command(name = "noverlap", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one graph, or a whole corpus as JSON files.
    Generate(GenerateArgs),
    /// Compute an initial force-directed layout.
    Layout(LayoutArgs),
    /// Remove node overlaps from a laid-out graph.
    Adjust(AdjustArgs),
    /// Compare an initial and an adjusted layout.
    Metrics(MetricsArgs),
    /// Run every algorithm over a corpus and write one CSV row per run.
    Bench(BenchArgs),
    /// Summarize a benchmark CSV: quartiles per algorithm and metric
    /// correlations.
    Report(ReportArgs),
    /// Draw a layout (optionally next to its adjusted version) as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum PresetArg {
    Desk,
    Full,
}

impl From<PresetArg> for Preset {
    fn from(p: PresetArg) -> Self {
        match p {
            PresetArg::Desk => Preset::Desk,
            PresetArg::Full => Preset::Full,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(clap::Args)]
struct GenerateArgs {
    /// Graph model for a single graph (random, tree, small_world, scale_free).
    #[arg(long, requires = "nodes")]
    model: Option<String>,
    /// Node count for a single graph.
    #[arg(long)]
    nodes: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Corpus preset, used when no model is given.
    #[arg(long, value_enum, conflicts_with = "config")]
    preset: Option<PresetArg>,
    /// Benchmark config whose corpus section is generated.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Skip the initial layout and write graphs without positions.
    #[arg(long)]
    no_layout: bool,
    /// Output file for a single graph (stdout when omitted).
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Output directory for a corpus.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(clap::Args)]
struct LayoutArgs {
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_LAYOUT_ITERATIONS)]
    iterations: usize,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct AdjustArgs {
    input: PathBuf,
    #[arg(short, long)]
    algorithm: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.0)]
    padding: f64,
    #[arg(long, default_value_t = 1000)]
    max_iterations: usize,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct MetricsArgs {
    /// Initial layout, or a paired file {"initial": ..., "adjusted": ...}.
    initial: PathBuf,
    adjusted: Option<PathBuf>,
    /// Report all 21 metrics instead of the 5 selected ones.
    #[arg(long)]
    all_metrics: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(clap::Args)]
struct BenchArgs {
    /// TOML or JSON benchmark config.
    #[arg(long, conflicts_with = "preset")]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    preset: Option<PresetArg>,
    /// CSV output (stdout when omitted).
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    parallelism: usize,
    /// Only report how many graphs and runs the config describes.
    #[arg(long)]
    dry_run: bool,
    /// Record all 21 metrics.
    #[arg(long)]
    all_metrics: bool,
    /// Write 0 for every time_ms so outputs can be diffed.
    #[arg(long)]
    mask_time: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Algorithm,
    Size,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(clap::Args)]
struct ReportArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value = "algorithm")]
    group_by: GroupArg,
    /// Metrics to summarize (default: every metric present in the file).
    #[arg(long, value_delimiter = ',')]
    metrics: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: TableFormat,
}

#[derive(clap::Args)]
struct RenderArgs {
    input: PathBuf,
    /// Adjusted layout drawn to the right of the input.
    #[arg(long)]
    after: Option<PathBuf>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

/// Some benchmark runs failed; the CSV was still written.
#[derive(Debug)]
struct RunFailures(usize);

impl std::fmt::Display for RunFailures {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} run(s) failed; see the error column", self.0)
    }
}

impl std::error::Error for RunFailures {}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<RunFailures>().is_some() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate(a) => generate(a),
        Command::Layout(a) => layout(a),
        Command::Adjust(a) => adjust_cmd(a),
        Command::Metrics(a) => metrics(a),
        Command::Bench(a) => bench_cmd(a),
        Command::Report(a) => report(a),
        Command::Render(a) => render(a),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) if p != Path::new("-") => {
            fs::write(p, text).with_context(|| format!("writing {}", p.display()))
        }
        _ => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<(SizedGraph, Option<Embedding>)> {
    read_graph_file(path).with_context(|| format!("reading {}", path.display()))
}

fn load_positioned(path: &Path) -> Result<(SizedGraph, Embedding)> {
    let (g, e) = load(path)?;
    match e {
        Some(e) => Ok((g, e)),
        None => bail!(
            "{}: nodes have no positions (run `noverlap layout` first)",
            path.display()
        ),
    }
}

fn generate(a: GenerateArgs) -> Result<()> {
    if let Some(model) = a.model {
        let model: GraphModel = model.parse()?;
        let n = a.nodes.expect("clap enforces --nodes");
        let graph = corpus::generate(model, n, a.seed)?;
        let layout = (!a.no_layout)
            .then(|| corpus::initial_layout(&graph, a.seed, DEFAULT_LAYOUT_ITERATIONS));
        return emit(a.out.as_deref(), &write_json(&graph, layout.as_ref())?);
    }
    let spec: CorpusSpec = match (&a.config, a.preset) {
        (Some(path), _) => BenchConfig::load(path)?.corpus,
        (None, Some(p)) => Preset::from(p).corpus(),
        (None, None) => {
            bail!("give --model and --nodes for one graph, or --preset/--config for a corpus")
        }
    };
    spec.validate()?;
    let Some(dir) = a.out_dir else {
        bail!("--out-dir is required when generating a corpus");
    };
    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    let entries = spec.entries();
    for entry in &entries {
        let path = dir.join(format!("{}.json", entry.graph_id));
        if a.no_layout {
            let g = corpus::generate_with(
                entry.model,
                entry.n,
                entry.seed,
                &spec.node_size,
                entry.graph_id.clone(),
            )?;
            write_json_file(&path, &g, None)?;
        } else {
            let (g, e) = spec.build(entry)?;
            write_json_file(&path, &g, Some(&e))?;
        }
    }
    eprintln!("wrote {} graphs to {}", entries.len(), dir.display());
    Ok(())
}

fn layout(a: LayoutArgs) -> Result<()> {
    if a.iterations == 0 {
        bail!("--iterations must be positive");
    }
    let (graph, _) = load(&a.input)?;
    let e = corpus::initial_layout(&graph, a.seed, a.iterations);
    emit(a.out.as_deref(), &write_json(&graph, Some(&e))?)
}

fn adjust_cmd(a: AdjustArgs) -> Result<()> {
    let algorithm: Algorithm = a.algorithm.parse()?;
    let (graph, initial) = load_positioned(&a.input)?;
    let params = AdjustParams {
        seed: a.seed,
        padding: a.padding,
        max_outer_iterations: a.max_iterations,
        ..AdjustParams::new(algorithm)
    };
    let out = adjust(&graph, &initial, &params)?;
    eprintln!(
        "{algorithm}: {} outer iteration(s), {:.3} ms{}",
        out.outer_iterations,
        out.wall_time.as_secs_f64() * 1000.0,
        if out.fallback_used {
            ", scaling fallback applied"
        } else {
            ""
        }
    );
    emit(a.out.as_deref(), &write_json(&graph, Some(&out.adjusted))?)
}

fn metrics(a: MetricsArgs) -> Result<()> {
    let (graph, initial, adjusted) = match &a.adjusted {
        Some(adj) => {
            let (g0, e0) = load_positioned(&a.initial)?;
            let (g1, e1) = load_positioned(adj)?;
            noverlap::io::pair_up(g0, Some(e0), g1, Some(e1))?
        }
        None => {
            let text = fs::read_to_string(&a.initial)
                .with_context(|| format!("reading {}", a.initial.display()))?;
            read_paired_json(&text).with_context(|| format!("reading {}", a.initial.display()))?
        }
    };
    if graph.n() == 0 {
        bail!("graph has no nodes");
    }
    let pair = AdjustmentPair::new(&graph, &initial, &adjusted)?;
    let report = compute_metrics(&pair, &MetricOptions::default());
    let selected: Vec<Metric> = if a.all_metrics {
        Metric::ALL.to_vec()
    } else {
        Metric::SELECTED.to_vec()
    };
    let value = |m: Metric| report.get(m);
    let text = match a.format {
        Format::Text => selected
            .iter()
            .map(|&m| {
                format!(
                    "{:<11} {}\n",
                    m.abbreviation(),
                    value(m)
                        .map(|v| v.to_string())
                        .unwrap_or_else(|| "undefined".into())
                )
            })
            .collect(),
        Format::Csv => {
            let head: Vec<&str> = selected.iter().map(|m| m.abbreviation()).collect();
            let vals: Vec<String> = selected
                .iter()
                .map(|&m| value(m).map(|v| v.to_string()).unwrap_or_default())
                .collect();
            format!("{}\n{}\n", head.join(","), vals.join(","))
        }
        Format::Json => {
            let mut parts = Vec::new();
            for &m in &selected {
                let v = match value(m) {
                    Some(v) if v.is_finite() => v.to_string(),
                    _ => "null".into(),
                };
                parts.push(format!("  \"{}\": {v}", m.abbreviation()));
            }
            format!("{{\n{}\n}}\n", parts.join(",\n"))
        }
    };
    emit(None, &text)
}

fn bench_cmd(a: BenchArgs) -> Result<()> {
    let mut config = match (&a.config, a.preset) {
        (Some(path), _) => {
            BenchConfig::load(path).with_context(|| format!("loading {}", path.display()))?
        }
        (None, p) => BenchConfig::from_preset(p.map(Preset::from).unwrap_or(Preset::Desk)),
    };
    if a.all_metrics {
        config.metrics = Metric::ALL.to_vec();
    }
    config.validate()?;
    let (graphs, runs) = config.plan();
    if a.dry_run {
        println!("graphs: {graphs}");
        println!("algorithms: {}", config.algorithms.len());
        println!("runs: {runs}");
        return Ok(());
    }
    let inputs = bench::corpus_graphs(&config.corpus, a.parallelism)?;
    let records = bench::run_benchmark(&inputs, &RunOptions::from_config(&config, a.parallelism))?;
    let mut buf = Vec::new();
    bench::write_csv(
        &mut buf,
        &records,
        CsvOptions {
            mask_time: a.mask_time,
        },
    )?;
    emit(a.out.as_deref(), std::str::from_utf8(&buf)?)?;
    let failed = records.iter().filter(|r| r.error.is_some()).count();
    eprintln!(
        "{} runs over {graphs} graphs, {failed} failed",
        records.len()
    );
    if failed > 0 {
        return Err(RunFailures(failed).into());
    }
    Ok(())
}

fn report(a: ReportArgs) -> Result<()> {
    let file =
        fs::File::open(&a.input).with_context(|| format!("opening {}", a.input.display()))?;
    let records =
        bench::read_csv(file).with_context(|| format!("reading {}", a.input.display()))?;
    let metrics: Vec<Metric> = if a.metrics.is_empty() {
        Metric::ALL
            .into_iter()
            .filter(|&m| records.iter().any(|r| r.metrics.get(m).is_some()))
            .collect()
    } else {
        a.metrics
            .iter()
            .map(|m| m.parse::<Metric>())
            .collect::<noverlap::Result<_>>()?
    };
    let group_by = match a.group_by {
        GroupArg::Algorithm => GroupBy::Algorithm,
        GroupArg::Size => GroupBy::AlgorithmAndSize,
    };
    let table = bench::aggregate(&records, group_by, &metrics)?;
    let corr = bench::correlation_matrix(&records, &metrics);
    let text = match a.format {
        TableFormat::Csv => format!(
            "{}\n{}",
            bench::aggregate_csv(&table),
            bench::correlation_csv(&corr)
        ),
        TableFormat::Text => {
            format!(
                "{}correlations (Pearson)\n{}",
                bench::aggregate_text(&table),
                bench::correlation_text(&corr)
            )
        }
    };
    emit(None, &text)
}

fn render(a: RenderArgs) -> Result<()> {
    let (graph, before) = load_positioned(&a.input)?;
    let after = match &a.after {
        Some(p) => {
            let (g, e) = load_positioned(p)?;
            Some(noverlap::io::pair_up(graph.clone(), Some(before.clone()), g, Some(e))?.2)
        }
        None => None,
    };
    emit(
        a.out.as_deref(),
        &bench::render_svg(&graph, &before, after.as_ref()),
    )
}
