//! Command-line front end. One subcommand per stage — `generate`,
//! `diffuse`, `walk`, `eval`, `export` — plus `pipeline`, which chains all
//! of them and prints a summary. Exit codes: 0 success, 2 usage error,
//! 3 I/O error, 4 domain error (message tagged with the error name).

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};

use crate::diffusion::{self, DEFAULT_STEPS};
use crate::error::{Error, Result};
use crate::eval::{
    hbedge_color_ratios, spearman, sweep_hbedges, sweep_vertices, DEFAULT_SWEEP_STEPS,
};
use crate::genrand::{generate, GeneratorConfig};
use crate::io::config::parse_generator_config;
use crate::io::csv;
use crate::io::document::{parse_graph, serialize_graph, ParsedGraph};
use crate::io::dot::export_dot;
use crate::rwalk::{self, WalkConfig, DEFAULT_BETA, DEFAULT_WALKS};

#[derive(Parser)]
#[command(
    name = "hbdiff",
    version,
    about = "Exchange-based diffusion on hyper-bag-graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random hb-graph from a TOML config
    Generate(GenerateArgs),
    /// Run the two-phase exchange diffusion and write its trace
    Diffuse(DiffuseArgs),
    /// Aggregate random walks and write passage counts
    Walk(WalkArgs),
    /// Sweep superlevel sets of a diffusion trace
    Eval(EvalArgs),
    /// Render the extra-vertex view as Graphviz DOT
    Export(ExportArgs),
    /// Run generate, diffuse, walk, eval and export in one go
    Pipeline(PipelineArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Generator config (TOML)
    #[arg(long)]
    config: PathBuf,
    /// Overrides the seed from the config file
    #[arg(long)]
    seed: Option<u64>,
    /// Output graph document (JSON)
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct DiffuseArgs {
    /// Input graph document (JSON)
    #[arg(long)]
    graph: PathBuf,
    /// Whole diffusion steps to run
    #[arg(long, default_value_t = DEFAULT_STEPS as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    steps: u64,
    /// Output trace (CSV)
    #[arg(long)]
    trace: PathBuf,
}

#[derive(Args)]
struct WalkArgs {
    /// Input graph document (JSON)
    #[arg(long)]
    graph: PathBuf,
    /// Move probability; 1 - beta is the teleport probability
    #[arg(long, default_value_t = DEFAULT_BETA)]
    beta: f64,
    /// Number of full-exploration walks to aggregate
    #[arg(long, default_value_t = DEFAULT_WALKS as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    walks: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output passage counts (CSV)
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct EvalArgs {
    /// Input graph document (JSON)
    #[arg(long)]
    graph: PathBuf,
    /// Diffusion trace to evaluate (CSV)
    #[arg(long)]
    trace: PathBuf,
    /// Number of equal threshold increments per sweep
    #[arg(long, default_value_t = DEFAULT_SWEEP_STEPS as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    sweep_steps: u64,
    /// Output sweep curves (CSV)
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ExportArgs {
    /// Input graph document (JSON)
    #[arg(long)]
    graph: PathBuf,
    /// Diffusion trace supplying the colors (CSV)
    #[arg(long)]
    trace: PathBuf,
    /// Output Graphviz file
    #[arg(long)]
    dot: PathBuf,
    /// Also write the per-vertex report here (CSV)
    #[arg(long)]
    vertices: Option<PathBuf>,
    /// Also write the per-hb-edge report here (CSV)
    #[arg(long)]
    hbedges: Option<PathBuf>,
}

#[derive(Args)]
struct PipelineArgs {
    /// Generator config (TOML)
    #[arg(long)]
    config: PathBuf,
    /// Overrides the seed from the config file
    #[arg(long)]
    seed: Option<u64>,
    /// Directory receiving every artifact
    #[arg(long)]
    out_dir: PathBuf,
    #[arg(long, default_value_t = DEFAULT_STEPS as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    steps: u64,
    #[arg(long, default_value_t = DEFAULT_BETA)]
    beta: f64,
    #[arg(long, default_value_t = DEFAULT_WALKS as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    walks: u64,
    #[arg(long, default_value_t = DEFAULT_SWEEP_STEPS as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    sweep_steps: u64,
}

/// Entry point for `main`: parses `std::env::args_os()`.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Parses and executes an argument vector; returns the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Generate(a) => cmd_generate(a),
        Command::Diffuse(a) => cmd_diffuse(a),
        Command::Walk(a) => cmd_walk(a),
        Command::Eval(a) => cmd_eval(a),
        Command::Export(a) => cmd_export(a),
        Command::Pipeline(a) => cmd_pipeline(a),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.name());
            if e.is_io() {
                3
            } else {
                4
            }
        }
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| io_with_path(path, e))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| io_with_path(path, e))
}

fn io_with_path(path: &Path, e: std::io::Error) -> Error {
    Error::Io(std::io::Error::new(
        e.kind(),
        format!("{}: {e}", path.display()),
    ))
}

fn load_graph(path: &Path) -> Result<ParsedGraph> {
    parse_graph(&read_file(path)?)
}

fn load_config(path: &Path, seed_override: Option<u64>) -> Result<GeneratorConfig> {
    let mut cfg = parse_generator_config(&read_file(path)?)?;
    if let Some(seed) = seed_override {
        cfg.seed = seed;
    }
    Ok(cfg)
}

fn cmd_generate(a: GenerateArgs) -> Result<()> {
    let cfg = load_config(&a.config, a.seed)?;
    let generated = generate(&cfg)?;
    write_file(&a.out, &serialize_graph(&generated.to_document()))?;
    println!(
        "generated {} vertices, {} hb-edges (seed {})",
        generated.graph.vertex_count(),
        generated.graph.hbedge_count(),
        cfg.seed
    );
    Ok(())
}

fn cmd_diffuse(a: DiffuseArgs) -> Result<()> {
    let parsed = load_graph(&a.graph)?;
    let started = Instant::now();
    let trace = diffusion::run(&parsed.graph, a.steps as usize);
    let took = started.elapsed();
    write_file(&a.trace, &csv::write_trace_csv(&parsed.graph, &trace))?;
    println!("diffused {} steps in {:.6} s", a.steps, took.as_secs_f64());
    Ok(())
}

fn cmd_walk(a: WalkArgs) -> Result<()> {
    let parsed = load_graph(&a.graph)?;
    let cfg = WalkConfig {
        beta: a.beta,
        n_walks: a.walks as usize,
        seed: a.seed,
        ..WalkConfig::default()
    };
    let started = Instant::now();
    let outcome = rwalk::run_n_walks(&parsed.graph, &cfg)?;
    let took = started.elapsed();
    write_file(&a.out, &csv::write_walk_csv(&parsed.graph, &outcome))?;
    let moves: u64 = outcome.per_walk_steps.iter().sum();
    println!(
        "{} walks, {} moves in {:.6} s",
        a.walks,
        moves,
        took.as_secs_f64()
    );
    Ok(())
}

fn cmd_eval(a: EvalArgs) -> Result<()> {
    let parsed = load_graph(&a.graph)?;
    let trace = csv::parse_trace_csv(&parsed.graph, &read_file(&a.trace)?)?;
    let sweeps = [
        sweep_vertices(&parsed.graph, trace.final_alpha(), a.sweep_steps as usize)?,
        sweep_hbedges(&parsed.graph, trace.final_epsilon(), a.sweep_steps as usize)?,
    ];
    write_file(&a.out, &csv::write_sweep_csv(&sweeps))?;
    println!(
        "swept {} vertex and {} hb-edge thresholds",
        sweeps[0].points.len(),
        sweeps[1].points.len()
    );
    Ok(())
}

fn cmd_export(a: ExportArgs) -> Result<()> {
    let parsed = load_graph(&a.graph)?;
    let trace = csv::parse_trace_csv(&parsed.graph, &read_file(&a.trace)?)?;
    let ratios = hbedge_color_ratios(&parsed.graph, trace.final_epsilon())?;
    write_file(
        &a.dot,
        &export_dot(&parsed.graph, trace.final_alpha(), &ratios)?,
    )?;
    if let Some(path) = &a.vertices {
        write_file(path, &csv::write_vertex_csv(&parsed.graph, &trace, None))?;
    }
    if let Some(path) = &a.hbedges {
        write_file(path, &csv::write_hbedge_csv(&parsed.graph, &trace)?)?;
    }
    println!("wrote {}", a.dot.display());
    Ok(())
}

fn cmd_pipeline(a: PipelineArgs) -> Result<()> {
    let opts = PipelineOptions {
        config: load_config(&a.config, a.seed)?,
        steps: a.steps as usize,
        beta: a.beta,
        walks: a.walks as usize,
        sweep_steps: a.sweep_steps as usize,
    };
    let summary = run_pipeline(&opts, &a.out_dir)?;
    print!("{}", summary.render(&a.out_dir));
    Ok(())
}

/// Knobs for a full generate → diffuse → walk → eval → export run.
#[derive(Debug, Clone)]
pub struct PipelineOptions {
    pub config: GeneratorConfig,
    pub steps: usize,
    pub beta: f64,
    pub walks: usize,
    pub sweep_steps: usize,
}

impl PipelineOptions {
    pub fn new(config: GeneratorConfig) -> Self {
        Self {
            config,
            steps: DEFAULT_STEPS,
            beta: DEFAULT_BETA,
            walks: DEFAULT_WALKS,
            sweep_steps: DEFAULT_SWEEP_STEPS,
        }
    }
}

/// What the pipeline reports besides its files.
#[derive(Debug, Clone)]
pub struct PipelineSummary {
    pub seed: u64,
    pub vertex_count: usize,
    pub hbedge_count: usize,
    pub steps: usize,
    pub walks: usize,
    pub total_walk_moves: u64,
    pub diffusion_time: Duration,
    pub walk_time: Duration,
    /// Rank agreement between final vertex values and walk passage counts.
    pub rank_spearman: f64,
}

impl PipelineSummary {
    pub fn render(&self, out_dir: &Path) -> String {
        let ratio = self.diffusion_time.as_secs_f64() / self.walk_time.as_secs_f64();
        format!(
            "seed: {}\n\
             graph: {} vertices, {} hb-edges\n\
             diffusion: {} steps in {:.6} s\n\
             walks: {} full explorations, {} moves in {:.6} s\n\
             diffusion/walk time ratio: {ratio:.3e}\n\
             spearman(diffusion rank, walk rank): {:.6}\n\
             artifacts: {}\n",
            self.seed,
            self.vertex_count,
            self.hbedge_count,
            self.steps,
            self.diffusion_time.as_secs_f64(),
            self.walks,
            self.total_walk_moves,
            self.walk_time.as_secs_f64(),
            self.rank_spearman,
            out_dir.display(),
        )
    }
}

/// Runs every stage and writes graph.json, trace.csv, walk.csv,
/// sweeps.csv, vertices.csv, hbedges.csv and graph.dot under `out_dir`.
/// Timing is measured around the pure compute calls and never reaches the
/// files, so reruns with the same config are byte-identical.
pub fn run_pipeline(opts: &PipelineOptions, out_dir: &Path) -> Result<PipelineSummary> {
    fs::create_dir_all(out_dir).map_err(|e| io_with_path(out_dir, e))?;
    let generated = generate(&opts.config)?;
    let g = &generated.graph;
    write_file(
        &out_dir.join("graph.json"),
        &serialize_graph(&generated.to_document()),
    )?;

    let diffusion_started = Instant::now();
    let trace = diffusion::run(g, opts.steps);
    let diffusion_time = diffusion_started.elapsed();
    write_file(&out_dir.join("trace.csv"), &csv::write_trace_csv(g, &trace))?;

    let wcfg = WalkConfig {
        beta: opts.beta,
        n_walks: opts.walks,
        seed: opts.config.seed,
        ..WalkConfig::default()
    };
    let walk_started = Instant::now();
    let outcome = rwalk::run_n_walks(g, &wcfg)?;
    let walk_time = walk_started.elapsed();
    write_file(&out_dir.join("walk.csv"), &csv::write_walk_csv(g, &outcome))?;

    let sweeps = [
        sweep_vertices(g, trace.final_alpha(), opts.sweep_steps)?,
        sweep_hbedges(g, trace.final_epsilon(), opts.sweep_steps)?,
    ];
    write_file(&out_dir.join("sweeps.csv"), &csv::write_sweep_csv(&sweeps))?;

    write_file(
        &out_dir.join("vertices.csv"),
        &csv::write_vertex_csv(g, &trace, Some(&outcome)),
    )?;
    write_file(
        &out_dir.join("hbedges.csv"),
        &csv::write_hbedge_csv(g, &trace)?,
    )?;
    let ratios = hbedge_color_ratios(g, trace.final_epsilon())?;
    write_file(
        &out_dir.join("graph.dot"),
        &export_dot(g, trace.final_alpha(), &ratios)?,
    )?;

    let passages: Vec<f64> = outcome
        .counts
        .vertex_passages
        .iter()
        .map(|&c| c as f64)
        .collect();
    Ok(PipelineSummary {
        seed: opts.config.seed,
        vertex_count: g.vertex_count(),
        hbedge_count: g.hbedge_count(),
        steps: opts.steps,
        walks: opts.walks,
        total_walk_moves: outcome.per_walk_steps.iter().sum(),
        diffusion_time,
        walk_time,
        rank_spearman: spearman(trace.final_alpha(), &passages)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_subcommand_is_a_usage_error() {
        assert_eq!(run_from(["hbdiff", "frobnicate"]), 2);
        assert_eq!(run_from(["hbdiff"]), 2);
    }

    #[test]
    fn zero_steps_is_a_usage_error() {
        assert_eq!(
            run_from(["hbdiff", "diffuse", "--graph", "g.json", "--steps", "0", "--trace", "t.csv"]),
            2
        );
    }

    #[test]
    fn missing_graph_file_is_an_io_error() {
        let dir = tempfile::tempdir().unwrap();
        let trace = dir.path().join("t.csv");
        let code = run_from([
            "hbdiff",
            "diffuse",
            "--graph",
            "/nonexistent/graph.json",
            "--trace",
            trace.to_str().unwrap(),
        ]);
        assert_eq!(code, 3);
    }

    #[test]
    fn invalid_document_is_a_domain_error() {
        let dir = tempfile::tempdir().unwrap();
        let graph = dir.path().join("g.json");
        fs::write(&graph, "{\"schema_version\": 99}").unwrap();
        let code = run_from([
            "hbdiff",
            "diffuse",
            "--graph",
            graph.to_str().unwrap(),
            "--trace",
            dir.path().join("t.csv").to_str().unwrap(),
        ]);
        assert_eq!(code, 4);
    }

    #[test]
    fn pipeline_produces_every_artifact() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = GeneratorConfig {
            n_max: 120,
            n_components: 2,
            n_interconnect: 4,
            important_per_group: vec![3, 2],
            n_hbedges: 20,
            max_support_cardinality: 6,
            max_important_per_edge: 2,
            seed: 7,
            ..GeneratorConfig::default()
        };
        let opts = PipelineOptions::new(cfg);
        let summary = run_pipeline(&opts, dir.path()).unwrap();
        assert!(summary.vertex_count > 0);
        assert!(summary.rank_spearman.is_finite());
        for name in [
            "graph.json",
            "trace.csv",
            "walk.csv",
            "sweeps.csv",
            "vertices.csv",
            "hbedges.csv",
            "graph.dot",
        ] {
            assert!(dir.path().join(name).is_file(), "missing {name}");
        }
    }
}
