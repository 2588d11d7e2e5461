//! Command-line front end: graph generation, exact and structured age
//! tables, simulation, analytic bounds, expansion probes, and the seeded
//! experiment sweeps. Everything prints CSV to stdout unless `--out` names
//! a file.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a request
//! exceeds a hard size limit (exhaustive solvers and sweeps are capped).

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use gossip_age::bounds::{
    bipartite_log_bound, bound_reports_csv, chernoff_tail, chernoff_union_bound, dreg_bound_sums,
    gnp_singleton_bound, isolated_expectation, BoundReport,
};
use gossip_age::exact::solve_exact;
use gossip_age::experiments::{run_experiment, ExperimentKind, ExperimentSpec};
use gossip_age::export::float17;
use gossip_age::graph::{
    cheeger_bruteforce, cheeger_sampled, gen_gnp, gen_random_regular, ExpansionReport,
};
use gossip_age::sim::{estimates_csv, simulate, simulate_with_trace, SimConfig};
use gossip_age::structured::{bipartite_grid, clique_age};
use gossip_age::{Error, GossipRates, Graph, Result, VertexSet};
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "gossip-age",
    version,
    about = "Version age of information on gossip networks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sample a random graph and emit its edge list
    Generate(GenerateArgs),
    /// Exact subset ages of a graph (n <= 20)
    Exact(ExactArgs),
    /// Complete-bipartite age grid u(i, j)
    Bipartite(BipartiteArgs),
    /// Complete-graph ages by informed-set size
    Clique(CliqueArgs),
    /// Discrete-event simulation estimates
    Simulate(SimulateArgs),
    /// Analytic bound evaluations
    Bounds(BoundsArgs),
    /// Edge expansion (exact when small, sampled otherwise)
    Expansion(ExpansionArgs),
    /// Seeded experiment sweeps emitting CSV tables
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Random graph model: `gnp` or `regular`
    #[arg(long)]
    model: String,
    #[arg(long)]
    n: usize,
    /// Edge probability (gnp)
    #[arg(long)]
    p: Option<f64>,
    /// Degree (regular)
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExactArgs {
    /// Edge-list file (`n m` header, one `u v` line per edge, 1-based)
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = 1.0)]
    lambda_e: f64,
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    /// Restrict output to these sets (comma-separated 1-based vertices;
    /// repeatable); default is the full subset table
    #[arg(long)]
    set: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BipartiteArgs {
    #[arg(long)]
    left: usize,
    #[arg(long)]
    right: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CliqueArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    /// Edge-list file (`n m` header, one `u v` line per edge, 1-based)
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = 1.0)]
    lambda_e: f64,
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    #[arg(long, default_value_t = 2e5)]
    t_end: f64,
    #[arg(long, default_value_t = 0.1)]
    burn_in: f64,
    #[arg(long, default_value_t = 20)]
    batches: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Track this set's age (comma-separated 1-based vertices; repeatable)
    #[arg(long)]
    track: Vec<String>,
    /// Also write every event to this CSV file
    #[arg(long)]
    trace: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(subcommand)]
    which: BoundsCmd,
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// Logarithmic cap for the one-informed-vertex bipartite age
    BipartiteLog {
        #[arg(long)]
        left: usize,
        #[arg(long)]
        right: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expander worst-vertex age caps (raw sum and harmonic closed form)
    Dreg {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        d: usize,
        /// Expansion-to-degree ratio, in (0, 1/2)
        #[arg(long)]
        c_d: f64,
        #[arg(long, default_value_t = 1.0)]
        lambda_e: f64,
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sparse random-graph singleton age cap
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expected isolated-vertex count n(1-p)^(n-1)
    Isolated {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Boundary-concentration tail bounds
    Chernoff {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        delta: f64,
        /// Set size for a single tail; omitted = union over all sizes
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ExpansionArgs {
    /// Edge-list file (`n m` header, one `u v` line per edge, 1-based)
    #[arg(long)]
    graph: PathBuf,
    /// Sample this many random subsets instead of exhausting all of them
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Experiment family (see `--help` for the list); may come from config
    #[arg(long)]
    kind: Option<String>,
    /// Flat JSON config mirroring these flags; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    n_grid: Option<Vec<usize>>,
    #[arg(long)]
    replications: Option<usize>,
    #[arg(long)]
    base_seed: Option<u64>,
    #[arg(long)]
    lambda_e: Option<f64>,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    t_end: Option<f64>,
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    c_grid: Option<Vec<f64>>,
    #[arg(long)]
    d_exponent: Option<f64>,
    /// Worker-pool size; GOSSIP_AGE_THREADS caps it and sets the default
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        let code = match e {
            Error::TooLarge { .. } => 2,
            _ => 1,
        };
        std::process::exit(code);
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Generate(a) => generate(a),
        Cmd::Exact(a) => exact(a),
        Cmd::Bipartite(a) => bipartite(a),
        Cmd::Clique(a) => clique(a),
        Cmd::Simulate(a) => simulate_cmd(a),
        Cmd::Bounds(a) => bounds(a.which),
        Cmd::Expansion(a) => expansion(a),
        Cmd::Experiment(a) => experiment(a),
    }
}

/// Writes `text` to the `--out` file, or stdout when absent.
fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn load_graph(path: &Path) -> Result<Graph> {
    let file = File::open(path)
        .map_err(|e| Error::param(format!("cannot open {}: {e}", path.display())))?;
    Graph::read_edge_list(BufReader::new(file))
}

/// Parses a comma-separated 1-based vertex list like `1,3,5`.
fn parse_set(text: &str) -> Result<VertexSet> {
    let mut members = Vec::new();
    for field in text.split(',') {
        let v: usize = field
            .trim()
            .parse()
            .map_err(|_| Error::param(format!("bad vertex `{field}` in set `{text}`")))?;
        if v == 0 {
            return Err(Error::param("vertex labels are 1-based"));
        }
        members.push(v - 1);
    }
    Ok(VertexSet::new(members))
}

fn generate(a: GenerateArgs) -> Result<()> {
    let g = match a.model.as_str() {
        "gnp" => {
            let p = a.p.ok_or_else(|| Error::param("gnp needs --p"))?;
            gen_gnp(a.n, p, a.seed)?
        }
        "regular" => {
            let d = a.d.ok_or_else(|| Error::param("regular needs --d"))?;
            gen_random_regular(a.n, d, a.seed)?
        }
        other => {
            return Err(Error::param(format!(
                "unknown model `{other}`; expected gnp or regular"
            )))
        }
    };
    let mut buf = Vec::new();
    g.write_edge_list(&mut buf)?;
    emit(a.out.as_deref(), std::str::from_utf8(&buf).unwrap())
}

fn exact(a: ExactArgs) -> Result<()> {
    let g = load_graph(&a.graph)?;
    let rates = GossipRates::new(a.lambda_e, a.lambda, g.n())?;
    let table = solve_exact(&g, rates)?;
    let mut buf = Vec::new();
    if a.set.is_empty() {
        table.write_csv(&mut buf)?;
    } else {
        writeln!(buf, "set,age")?;
        for text in &a.set {
            let s = parse_set(text)?;
            writeln!(buf, "\"{s}\",{}", float17(table.age(&s)?))?;
        }
    }
    emit(a.out.as_deref(), std::str::from_utf8(&buf).unwrap())
}

fn bipartite(a: BipartiteArgs) -> Result<()> {
    let grid = bipartite_grid(a.left, a.right)?;
    let mut buf = Vec::new();
    grid.write_csv(&mut buf)?;
    emit(a.out.as_deref(), std::str::from_utf8(&buf).unwrap())
}

fn clique(a: CliqueArgs) -> Result<()> {
    let ages = clique_age(a.n)?;
    let mut text = String::from("k,u\n");
    for (i, u) in ages.iter().enumerate() {
        text.push_str(&format!("{},{}\n", i + 1, float17(*u)));
    }
    emit(a.out.as_deref(), &text)
}

fn simulate_cmd(a: SimulateArgs) -> Result<()> {
    let g = load_graph(&a.graph)?;
    let mut cfg = SimConfig::new(
        GossipRates::new(a.lambda_e, a.lambda, g.n())?,
        a.t_end,
        a.seed,
    );
    cfg.burn_in = a.burn_in;
    cfg.batches = a.batches;
    for text in &a.track {
        cfg.tracked.push(parse_set(text)?);
    }
    let est = match &a.trace {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| Error::param(format!("cannot create {}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            let est = simulate_with_trace(&g, &cfg, &mut w)?;
            w.flush()?;
            est
        }
        None => simulate(&g, &cfg)?,
    };
    emit(a.out.as_deref(), &estimates_csv(&est))
}

fn bounds(cmd: BoundsCmd) -> Result<()> {
    let (reports, out) = match cmd {
        BoundsCmd::BipartiteLog { left, right, out } => (
            vec![BoundReport {
                formula_id: "bipartite_log".into(),
                n: left + right,
                params: format!("l={left};r={right}"),
                value: bipartite_log_bound(left, right)?,
            }],
            out,
        ),
        BoundsCmd::Dreg {
            n,
            d,
            c_d,
            lambda_e,
            lambda,
            out,
        } => {
            let sums = dreg_bound_sums(n, d, c_d, lambda_e, lambda)?;
            let params = format!("d={d};c_d={c_d};lambda_e={lambda_e};lambda={lambda}");
            (
                vec![
                    BoundReport {
                        formula_id: "dreg_raw".into(),
                        n,
                        params: params.clone(),
                        value: sums.raw,
                    },
                    BoundReport {
                        formula_id: "dreg_harmonic".into(),
                        n,
                        params,
                        value: sums.harmonic,
                    },
                ],
                out,
            )
        }
        BoundsCmd::Gnp { n, out } => (
            vec![BoundReport {
                formula_id: "gnp_singleton".into(),
                n,
                params: String::new(),
                value: gnp_singleton_bound(n)?,
            }],
            out,
        ),
        BoundsCmd::Isolated { n, p, out } => (
            vec![BoundReport {
                formula_id: "isolated_expectation".into(),
                n,
                params: format!("p={p}"),
                value: isolated_expectation(n, p)?,
            }],
            out,
        ),
        BoundsCmd::Chernoff {
            n,
            p,
            delta,
            k,
            out,
        } => {
            let report = match k {
                Some(k) => BoundReport {
                    formula_id: "chernoff_tail".into(),
                    n,
                    params: format!("p={p};delta={delta};k={k}"),
                    value: chernoff_tail(k, n, p, delta)?,
                },
                None => BoundReport {
                    formula_id: "chernoff_union".into(),
                    n,
                    params: format!("p={p};delta={delta}"),
                    value: chernoff_union_bound(n, p, delta)?,
                },
            };
            (vec![report], out)
        }
    };
    emit(out.as_deref(), &bound_reports_csv(&reports))
}

fn expansion_csv(r: &ExpansionReport, exhaustive: bool) -> String {
    format!(
        "h,boundary,set_size,subsets_examined,exhaustive,witness\n{},{},{},{},{},\"{}\"\n",
        float17(r.h()),
        r.boundary,
        r.argmin_set.len(),
        r.subsets_examined,
        exhaustive,
        r.argmin_set
    )
}

fn expansion(a: ExpansionArgs) -> Result<()> {
    let g = load_graph(&a.graph)?;
    let (report, exhaustive) = match a.samples {
        None => (cheeger_bruteforce(&g)?, true),
        Some(samples) => (cheeger_sampled(&g, samples, a.seed)?, false),
    };
    emit(a.out.as_deref(), &expansion_csv(&report, exhaustive))
}

/// Applies one flat JSON config value to the spec. Keys mirror the flag
/// names (kebab or snake case).
fn apply_config_entry(
    spec: &mut ExperimentSpec,
    key: &str,
    value: &serde_json::Value,
) -> Result<()> {
    let bad = |what: &str| Error::param(format!("config key `{key}`: expected {what}"));
    let as_usize =
        |v: &serde_json::Value, what: &str| v.as_u64().map(|x| x as usize).ok_or_else(|| bad(what));
    let as_f64 = |v: &serde_json::Value, what: &str| v.as_f64().ok_or_else(|| bad(what));
    match key {
        "kind" => {} // handled during kind resolution
        "n_grid" => {
            let arr = value.as_array().ok_or_else(|| bad("an array of sizes"))?;
            spec.n_grid = arr
                .iter()
                .map(|v| as_usize(v, "an array of sizes"))
                .collect::<Result<_>>()?;
        }
        "replications" => spec.replications = as_usize(value, "a count")?,
        "base_seed" => {
            spec.base_seed = value.as_u64().ok_or_else(|| bad("a seed"))?;
        }
        "lambda_e" => spec.lambda_e = as_f64(value, "a rate")?,
        "lambda" => spec.lambda = as_f64(value, "a rate")?,
        "t_end" => spec.t_end = as_f64(value, "a horizon")?,
        "degree" => spec.degree = as_usize(value, "a degree")?,
        "c_grid" => {
            let arr = value
                .as_array()
                .ok_or_else(|| bad("an array of multipliers"))?;
            spec.c_grid = arr
                .iter()
                .map(|v| as_f64(v, "an array of multipliers"))
                .collect::<Result<_>>()?;
        }
        "d_exponent" => spec.d_exponent = as_f64(value, "an exponent")?,
        "threads" => spec.threads = as_usize(value, "a thread count")?,
        "out" | "output_path" => {} // handled during output resolution
        other => {
            return Err(Error::param(format!("unknown config key `{other}`")));
        }
    }
    Ok(())
}

fn experiment(a: ExperimentArgs) -> Result<()> {
    let config: Option<serde_json::Map<String, serde_json::Value>> = match &a.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::param(format!("cannot read {}: {e}", path.display())))?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| Error::param(format!("config is not valid JSON: {e}")))?;
            match value {
                serde_json::Value::Object(map) => Some(
                    map.into_iter()
                        .map(|(k, v)| (k.replace('-', "_"), v))
                        .collect(),
                ),
                _ => return Err(Error::param("config must be a flat JSON object")),
            }
        }
        None => None,
    };

    let kind_name = a
        .kind
        .clone()
        .or_else(|| {
            config
                .as_ref()
                .and_then(|m| m.get("kind"))
                .and_then(|v| v.as_str().map(str::to_owned))
        })
        .ok_or_else(|| Error::param("experiment needs --kind or a config with one"))?;
    let kind: ExperimentKind = kind_name.parse()?;

    let mut spec = ExperimentSpec::new(kind);
    if let Some(map) = &config {
        for (key, value) in map {
            apply_config_entry(&mut spec, key, value)?;
        }
    }
    if let Some(v) = a.n_grid {
        spec.n_grid = v;
    }
    if let Some(v) = a.replications {
        spec.replications = v;
    }
    if let Some(v) = a.base_seed {
        spec.base_seed = v;
    }
    if let Some(v) = a.lambda_e {
        spec.lambda_e = v;
    }
    if let Some(v) = a.lambda {
        spec.lambda = v;
    }
    if let Some(v) = a.t_end {
        spec.t_end = v;
    }
    if let Some(v) = a.degree {
        spec.degree = v;
    }
    if let Some(v) = a.c_grid {
        spec.c_grid = v;
    }
    if let Some(v) = a.d_exponent {
        spec.d_exponent = v;
    }
    if let Some(v) = a.threads {
        spec.threads = v;
    }
    if let Ok(text) = std::env::var("GOSSIP_AGE_THREADS") {
        let cap: usize = text
            .parse()
            .map_err(|_| Error::param(format!("GOSSIP_AGE_THREADS=`{text}` is not a count")))?;
        let cap = cap.max(1);
        spec.threads =
            if a.threads.is_none() && config.as_ref().is_none_or(|m| !m.contains_key("threads")) {
                cap
            } else {
                spec.threads.min(cap)
            };
    }

    let out = a.out.or_else(|| {
        config
            .as_ref()
            .and_then(|m| m.get("out").or_else(|| m.get("output_path")))
            .and_then(|v| v.as_str())
            .map(PathBuf::from)
    });
    let csv = run_experiment(&spec)?;
    emit(out.as_deref(), &csv)
}
