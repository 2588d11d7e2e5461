//! Seeded experiment sweeps over graph families, producing CSV tables.
//!
//! Each experiment kind maps a parameter grid to typed rows plus a
//! fixed-schema CSV rendering (header row, full float precision). All
//! randomness derives from `base_seed` through per-task seed chains keyed by
//! the task's parameters (size, grid index, replication), never by execution
//! order, and parallel results are merged in task order; reruns with the
//! same spec are byte-identical regardless of worker-pool size.

use crate::bounds::isolated_concentration;
use crate::exact::{monotonicity_check, solve_exact};
use crate::export::float17;
use crate::graph::{gen_gnp, gen_random_regular, reference_corpus, structure_report, VertexSet};
use crate::rates::GossipRates;
use crate::rng::derive_seed;
use crate::sim::{simulate, simulate_vertex_ages, SimConfig};
use crate::structured::{bipartite_grid, clique_age};
use crate::{Error, Graph, Result};
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;

/// Largest size accepted by the bipartite scaling sweep; the half-split
/// regime needs an (n/2)^2 table per point.
pub const BIPARTITE_SCALING_LIMIT: usize = 4096;
/// Largest size for the exhaustive monotonicity sweep (2^(n choose 2)
/// labeled graphs per point).
pub const MONOTONICITY_SWEEP_LIMIT: usize = 6;

/// The experiment families the harness knows how to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentKind {
    /// Bipartite one-informed-vertex age across split regimes.
    BipartiteScaling,
    /// Clique singleton age against its large-n limit e - 1.
    CliqueScaling,
    /// Worst-vertex age on random regular graphs against ln n.
    DregScaling,
    /// Average age across the sparse random-graph connectivity window.
    GnpThreshold,
    /// Simulation cross-validated against the exact solver on small graphs.
    SimVsExact,
    /// Exhaustive edge-addition sweep reporting age increases.
    MonotonicitySweep,
    /// Isolated-vertex counts in sparse random graphs vs expectation.
    IsolatedVertices,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 7] = [
        ExperimentKind::BipartiteScaling,
        ExperimentKind::CliqueScaling,
        ExperimentKind::DregScaling,
        ExperimentKind::GnpThreshold,
        ExperimentKind::SimVsExact,
        ExperimentKind::MonotonicitySweep,
        ExperimentKind::IsolatedVertices,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::BipartiteScaling => "bipartite_scaling",
            ExperimentKind::CliqueScaling => "clique_scaling",
            ExperimentKind::DregScaling => "dreg_scaling",
            ExperimentKind::GnpThreshold => "gnp_threshold",
            ExperimentKind::SimVsExact => "sim_vs_exact",
            ExperimentKind::MonotonicitySweep => "monotonicity_sweep",
            ExperimentKind::IsolatedVertices => "isolated_vertices",
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentKind {
    type Err = Error;

    /// Accepts the canonical snake_case name or its kebab-case spelling.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        ExperimentKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| {
                let known: Vec<&str> = ExperimentKind::ALL.iter().map(|k| k.name()).collect();
                Error::param(format!(
                    "unknown experiment kind: {s} (expected one of {})",
                    known.join(", ")
                ))
            })
    }
}

/// Full description of one experiment run.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub kind: ExperimentKind,
    /// Sizes to sweep, strictly increasing.
    pub n_grid: Vec<usize>,
    /// Independent repetitions per grid point (samples, seeds).
    pub replications: usize,
    pub base_seed: u64,
    pub lambda_e: f64,
    pub lambda: f64,
    /// Simulation horizon for the kinds that simulate.
    pub t_end: f64,
    /// Regular-graph degree for `dreg_scaling`.
    pub degree: usize,
    /// Multipliers of ln n / n used as edge probabilities by `gnp_threshold`.
    pub c_grid: Vec<f64>,
    /// Exponent d in p = d ln n / n for `isolated_vertices`, in (1/2, 1).
    pub d_exponent: f64,
    /// Worker-pool size; results do not depend on it.
    pub threads: usize,
}

impl ExperimentSpec {
    /// Desk-scale defaults for the given kind.
    pub fn new(kind: ExperimentKind) -> Self {
        let n_grid: Vec<usize> = match kind {
            ExperimentKind::BipartiteScaling | ExperimentKind::CliqueScaling => {
                (4..=12).map(|e| 1usize << e).collect()
            }
            ExperimentKind::DregScaling => (6..=12).map(|e| 1usize << e).collect(),
            ExperimentKind::GnpThreshold | ExperimentKind::IsolatedVertices => vec![2000],
            ExperimentKind::SimVsExact => vec![8],
            ExperimentKind::MonotonicitySweep => vec![3, 4, 5],
        };
        let replications = match kind {
            ExperimentKind::IsolatedVertices => 200,
            _ => 20,
        };
        let t_end = match kind {
            ExperimentKind::SimVsExact => 2e5,
            _ => 1e4,
        };
        ExperimentSpec {
            kind,
            n_grid,
            replications,
            base_seed: 0,
            lambda_e: 1.0,
            lambda: 1.0,
            t_end,
            degree: 3,
            c_grid: vec![0.5, 1.0, 2.0, 4.0, 8.0],
            d_exponent: 0.75,
            threads: 1,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_grid.is_empty() {
            return Err(Error::param("size grid is empty"));
        }
        if self.n_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::param("size grid must be strictly increasing"));
        }
        if self.replications == 0 {
            return Err(Error::param("need at least one replication"));
        }
        if self.threads == 0 {
            return Err(Error::param("need at least one worker thread"));
        }
        for &x in &[self.lambda_e, self.lambda] {
            if !(x > 0.0) || !x.is_finite() {
                return Err(Error::param(format!("rates must be positive, got {x}")));
            }
        }
        match self.kind {
            ExperimentKind::BipartiteScaling => {
                let &max = self.n_grid.last().unwrap();
                if max > BIPARTITE_SCALING_LIMIT {
                    return Err(Error::TooLarge {
                        what: "bipartite scaling",
                        limit: BIPARTITE_SCALING_LIMIT,
                        got: max,
                    });
                }
                if self.n_grid[0] < 2 {
                    return Err(Error::param("bipartite scaling needs n >= 2"));
                }
            }
            ExperimentKind::DregScaling => {
                if self.degree < 3 {
                    return Err(Error::param(format!(
                        "regular-graph sweeps use degree >= 3, got {}",
                        self.degree
                    )));
                }
                for &n in &self.n_grid {
                    if n <= self.degree {
                        return Err(Error::param(format!(
                            "degree {} needs more than {} vertices",
                            self.degree, n
                        )));
                    }
                    if n * self.degree % 2 != 0 {
                        return Err(Error::param(format!(
                            "no {}-regular graph on {n} vertices: n*d is odd",
                            self.degree
                        )));
                    }
                }
            }
            ExperimentKind::GnpThreshold => {
                if self.c_grid.is_empty() {
                    return Err(Error::param("multiplier grid is empty"));
                }
                if self.c_grid.iter().any(|&c| !(c > 0.0) || !c.is_finite()) {
                    return Err(Error::param("multipliers must be positive"));
                }
                if self.n_grid[0] < 2 {
                    return Err(Error::param("threshold sweep needs n >= 2"));
                }
            }
            ExperimentKind::MonotonicitySweep => {
                let &max = self.n_grid.last().unwrap();
                if max > MONOTONICITY_SWEEP_LIMIT {
                    return Err(Error::TooLarge {
                        what: "monotonicity sweep",
                        limit: MONOTONICITY_SWEEP_LIMIT,
                        got: max,
                    });
                }
            }
            _ => {}
        }
        Ok(())
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .map_err(|e| Error::param(format!("worker pool: {e}")))
    }

    fn sim_config(&self, n: usize, seed: u64) -> Result<SimConfig> {
        Ok(SimConfig::new(
            GossipRates::new(self.lambda_e, self.lambda, n)?,
            self.t_end,
            seed,
        ))
    }
}

/// One bipartite scaling measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteScalingRow {
    pub n: usize,
    /// Split regime: `one`, `sqrt`, `pow34`, or `half`.
    pub regime: &'static str,
    pub l: usize,
    /// Age with a single informed right-side vertex.
    pub u01: f64,
    /// `u01` divided by the regime's growth shape.
    pub ratio_to_theory: f64,
}

const BIPARTITE_REGIMES: [&str; 4] = ["one", "sqrt", "pow34", "half"];

fn regime_split(regime: &str, n: usize) -> usize {
    let l = match regime {
        "one" => 1,
        "sqrt" => (n as f64).sqrt().floor() as usize,
        // Fractional-power regime, exponent fixed at 3/4.
        "pow34" => (n as f64).powf(0.75).floor() as usize,
        "half" => n / 2,
        _ => unreachable!("unknown regime"),
    };
    l.clamp(1, n - 1)
}

fn regime_theory(regime: &str, n: usize, l: usize) -> f64 {
    let nf = n as f64;
    match regime {
        "one" => nf,
        "sqrt" => nf / l as f64,
        "pow34" => nf.powf(0.25),
        "half" => nf.ln(),
        _ => unreachable!("unknown regime"),
    }
}

/// Evaluates the one-informed-vertex age `u(0,1)` on complete bipartite
/// splits of each grid size, one row per (size, regime). Deterministic; no
/// simulation involved.
pub fn run_bipartite_scaling(spec: &ExperimentSpec) -> Result<Vec<BipartiteScalingRow>> {
    spec.validate()?;
    let tasks: Vec<(usize, &'static str)> = spec
        .n_grid
        .iter()
        .flat_map(|&n| BIPARTITE_REGIMES.iter().map(move |&r| (n, r)))
        .collect();
    spec.pool()?.install(|| {
        tasks
            .par_iter()
            .map(|&(n, regime)| {
                let l = regime_split(regime, n);
                let grid = bipartite_grid(l, n - l)?;
                let u01 = grid.u(0, 1);
                Ok(BipartiteScalingRow {
                    n,
                    regime,
                    l,
                    u01,
                    ratio_to_theory: u01 / regime_theory(regime, n, l),
                })
            })
            .collect()
    })
}

pub fn bipartite_scaling_csv(rows: &[BipartiteScalingRow]) -> String {
    let mut out = String::from("n,regime,l,u01,ratio_to_theory\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            r.regime,
            r.l,
            float17(r.u01),
            float17(r.ratio_to_theory)
        ));
    }
    out
}

/// One clique scaling measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct CliqueScalingRow {
    pub n: usize,
    /// Singleton age on the complete graph.
    pub u1: f64,
    /// `u1 / ln n`; the singleton age gains about ln 2 per doubling, so
    /// this drifts down toward 1. Undefined shape at n = 1 (ln 1 = 0).
    pub ratio_to_log: f64,
}

/// Evaluates the clique singleton age across the grid. Deterministic.
pub fn run_clique_scaling(spec: &ExperimentSpec) -> Result<Vec<CliqueScalingRow>> {
    spec.validate()?;
    if spec.n_grid[0] < 2 {
        return Err(Error::param("clique scaling needs n >= 2"));
    }
    spec.n_grid
        .iter()
        .map(|&n| {
            let u1 = clique_age(n)?[0];
            Ok(CliqueScalingRow {
                n,
                u1,
                ratio_to_log: u1 / (n as f64).ln(),
            })
        })
        .collect()
}

pub fn clique_scaling_csv(rows: &[CliqueScalingRow]) -> String {
    let mut out = String::from("n,u1,ratio_to_log\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            r.n,
            float17(r.u1),
            float17(r.ratio_to_log)
        ));
    }
    out
}

/// One random-regular scaling point, aggregated over replications.
#[derive(Debug, Clone, PartialEq)]
pub struct DregScalingRow {
    pub n: usize,
    pub d: usize,
    /// Mean over replications of the worst per-vertex time-average age.
    pub avg_age_estimate: f64,
    /// `avg_age_estimate / ln n`.
    pub ratio_to_log: f64,
}

/// Samples `replications` random d-regular graphs per size, simulates each,
/// and reports the worst single-vertex mean age against ln n. The seed chain
/// is (base_seed, n, replication), split once more into the graph draw and
/// the simulation run.
pub fn run_dreg_scaling(spec: &ExperimentSpec) -> Result<Vec<DregScalingRow>> {
    spec.validate()?;
    let tasks: Vec<(usize, usize)> = spec
        .n_grid
        .iter()
        .flat_map(|&n| (0..spec.replications).map(move |rep| (n, rep)))
        .collect();
    let worst: Vec<f64> = spec.pool()?.install(|| {
        tasks
            .par_iter()
            .map(|&(n, rep)| {
                let rep_seed = derive_seed(derive_seed(spec.base_seed, n as u64), rep as u64);
                let g = gen_random_regular(n, spec.degree, derive_seed(rep_seed, 0))?;
                let cfg = spec.sim_config(n, derive_seed(rep_seed, 1))?;
                let ages = simulate_vertex_ages(&g, &cfg)?;
                Ok(ages.means.iter().copied().fold(f64::NEG_INFINITY, f64::max))
            })
            .collect::<Result<_>>()
    })?;
    Ok(spec
        .n_grid
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            let chunk = &worst[i * spec.replications..(i + 1) * spec.replications];
            let avg = chunk.iter().sum::<f64>() / chunk.len() as f64;
            DregScalingRow {
                n,
                d: spec.degree,
                avg_age_estimate: avg,
                ratio_to_log: avg / (n as f64).ln(),
            }
        })
        .collect())
}

pub fn dreg_scaling_csv(rows: &[DregScalingRow]) -> String {
    let mut out = String::from("n,d,avg_age_estimate,ratio_to_log\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.n,
            r.d,
            float17(r.avg_age_estimate),
            float17(r.ratio_to_log)
        ));
    }
    out
}

/// One sparse random-graph replication.
#[derive(Debug, Clone, PartialEq)]
pub struct GnpThresholdRow {
    pub n: usize,
    /// Edge-probability multiplier: p = c ln n / n (capped at 1).
    pub c: f64,
    pub p: f64,
    /// Network-average age estimate for this replication's graph.
    pub avg_age_estimate: f64,
    /// Degree-zero vertices in this replication's graph.
    pub isolated_count: usize,
}

/// Sweeps edge probabilities `c ln n / n` across the grid, one row per
/// (size, multiplier, replication) in that order. Seed chain:
/// (base_seed, n, multiplier index, replication), split into graph draw and
/// simulation.
pub fn run_gnp_threshold(spec: &ExperimentSpec) -> Result<Vec<GnpThresholdRow>> {
    spec.validate()?;
    let tasks: Vec<(usize, usize, usize)> = spec
        .n_grid
        .iter()
        .flat_map(|&n| {
            (0..spec.c_grid.len())
                .flat_map(move |ci| (0..spec.replications).map(move |rep| (n, ci, rep)))
        })
        .collect();
    spec.pool()?.install(|| {
        tasks
            .par_iter()
            .map(|&(n, ci, rep)| {
                let c = spec.c_grid[ci];
                let p = (c * (n as f64).ln() / n as f64).min(1.0);
                let rep_seed = derive_seed(
                    derive_seed(derive_seed(spec.base_seed, n as u64), ci as u64),
                    rep as u64,
                );
                let g = gen_gnp(n, p, derive_seed(rep_seed, 0))?;
                let isolated = structure_report(&g).isolated;
                let cfg = spec.sim_config(n, derive_seed(rep_seed, 1))?;
                let est = simulate(&g, &cfg)?;
                Ok(GnpThresholdRow {
                    n,
                    c,
                    p,
                    avg_age_estimate: est.network_average.mean_age,
                    isolated_count: isolated,
                })
            })
            .collect()
    })
}

pub fn gnp_threshold_csv(rows: &[GnpThresholdRow]) -> String {
    let mut out = String::from("n,c,p,avg_age_estimate,isolated_count\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            float17(r.c),
            float17(r.p),
            float17(r.avg_age_estimate),
            r.isolated_count
        ));
    }
    out
}

/// One (graph, tracked set) cross-validation.
#[derive(Debug, Clone, PartialEq)]
pub struct SimVsExactRow {
    pub graph_id: String,
    pub set: VertexSet,
    pub exact: f64,
    pub simulated: f64,
    /// `(simulated - exact) / batch standard error`.
    pub z_score: f64,
}

/// Runs the simulator against the exact solver on the small-graph corpus
/// (sizes up to the grid maximum, capped at 8). Tracked sets per graph: all
/// singletons, the pair {first, last} when n >= 2, and the full set. One
/// simulation per graph, seeded by (base_seed, corpus index).
pub fn run_sim_vs_exact(spec: &ExperimentSpec) -> Result<Vec<SimVsExactRow>> {
    spec.validate()?;
    let max_n = (*spec.n_grid.last().unwrap()).min(8);
    let corpus = reference_corpus(max_n);
    let per_graph: Vec<Vec<SimVsExactRow>> = spec.pool()?.install(|| {
        corpus
            .par_iter()
            .enumerate()
            .map(|(idx, (id, g))| {
                let n = g.n();
                let rates = GossipRates::new(spec.lambda_e, spec.lambda, n)?;
                let table = solve_exact(g, rates)?;
                let mut tracked: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
                if n >= 2 {
                    tracked.push(VertexSet::new(vec![0, n - 1]));
                }
                tracked.push(VertexSet::full(n));
                let mut cfg = spec.sim_config(n, derive_seed(spec.base_seed, idx as u64))?;
                cfg.tracked = tracked;
                let est = simulate(g, &cfg)?;
                est.set_ages
                    .iter()
                    .map(|(s, e)| {
                        let exact = table.age(s)?;
                        let diff = e.mean_age - exact;
                        let z = if diff == 0.0 { 0.0 } else { diff / e.batch_std };
                        Ok(SimVsExactRow {
                            graph_id: id.clone(),
                            set: s.clone(),
                            exact,
                            simulated: e.mean_age,
                            z_score: z,
                        })
                    })
                    .collect()
            })
            .collect::<Result<_>>()
    })?;
    Ok(per_graph.into_iter().flatten().collect())
}

pub fn sim_vs_exact_csv(rows: &[SimVsExactRow]) -> String {
    let mut out = String::from("graph_id,set,exact,simulated,z_score\n");
    for r in rows {
        out.push_str(&format!(
            "{},\"{}\",{},{},{}\n",
            r.graph_id,
            r.set,
            float17(r.exact),
            float17(r.simulated),
            float17(r.z_score)
        ));
    }
    out
}

/// Exhaustive edge-addition results for one size.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotonicitySweepRow {
    pub n: usize,
    /// Labeled graphs examined (2^(n choose 2)).
    pub graphs: u64,
    /// (edge, subset) pairs compared across all of them.
    pub candidate_edges: u64,
    /// Graphs where some added edge increased some subset age.
    pub violating_graphs: u64,
    /// Largest signed age increase seen across the sweep.
    pub worst_violation: f64,
}

/// Checks every labeled graph on each grid size for subset ages that grow
/// when an edge is added. Increases do occur: splitting a vertex's relay
/// rate across a new neighbor can starve the set being watched, so this
/// sweep measures how common and how large the reversals are.
pub fn run_monotonicity_sweep(spec: &ExperimentSpec) -> Result<Vec<MonotonicitySweepRow>> {
    spec.validate()?;
    spec.n_grid
        .iter()
        .map(|&n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let rates = GossipRates::unit(n);
            let mut row = MonotonicitySweepRow {
                n,
                graphs: 0,
                candidate_edges: 0,
                violating_graphs: 0,
                worst_violation: 0.0,
            };
            for code in 0u64..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| code >> b & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges)?;
                let report = monotonicity_check(&g, rates)?;
                row.graphs += 1;
                row.candidate_edges += report.candidates;
                if !report.holds {
                    row.violating_graphs += 1;
                }
                row.worst_violation = row.worst_violation.max(report.worst_violation);
            }
            Ok(row)
        })
        .collect()
}

pub fn monotonicity_sweep_csv(rows: &[MonotonicitySweepRow]) -> String {
    let mut out = String::from("n,graphs,candidate_edges,violating_graphs,worst_violation\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            r.graphs,
            r.candidate_edges,
            r.violating_graphs,
            float17(r.worst_violation)
        ));
    }
    out
}

/// Isolated-vertex concentration summary for one size.
#[derive(Debug, Clone, PartialEq)]
pub struct IsolatedVerticesRow {
    pub n: usize,
    pub p: f64,
    /// Expected isolated count n(1-p)^(n-1).
    pub expected: f64,
    pub empirical_mean: f64,
    pub std_error: f64,
    pub band_halfwidth: f64,
    /// Fraction of samples within `expected ± band_halfwidth`.
    pub inside_fraction: f64,
}

/// Samples sparse random graphs at p = d ln n / n and compares isolated
/// counts with the closed-form expectation; `replications` is the sample
/// count per size. Seeded by (base_seed, n).
pub fn run_isolated_vertices(spec: &ExperimentSpec) -> Result<Vec<IsolatedVerticesRow>> {
    spec.validate()?;
    spec.n_grid
        .iter()
        .map(|&n| {
            let summary = isolated_concentration(
                n,
                spec.d_exponent,
                spec.replications,
                derive_seed(spec.base_seed, n as u64),
            )?;
            Ok(IsolatedVerticesRow {
                n,
                p: spec.d_exponent * (n as f64).ln() / n as f64,
                expected: summary.mu,
                empirical_mean: summary.empirical_mean,
                std_error: summary.std_error,
                band_halfwidth: summary.band_halfwidth,
                inside_fraction: summary.inside_fraction,
            })
        })
        .collect()
}

pub fn isolated_vertices_csv(rows: &[IsolatedVerticesRow]) -> String {
    let mut out =
        String::from("n,p,expected,empirical_mean,std_error,band_halfwidth,inside_fraction\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n,
            float17(r.p),
            float17(r.expected),
            float17(r.empirical_mean),
            float17(r.std_error),
            float17(r.band_halfwidth),
            float17(r.inside_fraction)
        ));
    }
    out
}

/// Runs the spec's experiment and renders its CSV table.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<String> {
    match spec.kind {
        ExperimentKind::BipartiteScaling => {
            Ok(bipartite_scaling_csv(&run_bipartite_scaling(spec)?))
        }
        ExperimentKind::CliqueScaling => Ok(clique_scaling_csv(&run_clique_scaling(spec)?)),
        ExperimentKind::DregScaling => Ok(dreg_scaling_csv(&run_dreg_scaling(spec)?)),
        ExperimentKind::GnpThreshold => Ok(gnp_threshold_csv(&run_gnp_threshold(spec)?)),
        ExperimentKind::SimVsExact => Ok(sim_vs_exact_csv(&run_sim_vs_exact(spec)?)),
        ExperimentKind::MonotonicitySweep => {
            Ok(monotonicity_sweep_csv(&run_monotonicity_sweep(spec)?))
        }
        ExperimentKind::IsolatedVertices => {
            Ok(isolated_vertices_csv(&run_isolated_vertices(spec)?))
        }
    }
}
