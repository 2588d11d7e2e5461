//! Discrete-event Monte Carlo estimation of version ages.
//!
//! The process keeps one integer counter per node plus the source counter.
//! Three event classes drive it, superposed into a single exponential clock
//! of total rate `lambda_e + lambda + lambda * |{i: deg(i) > 0}|`:
//!
//! 1. source self-update: the source counter increments;
//! 2. delivery: the source pushes its counter to a uniformly random node
//!    (aggregate rate `lambda`, so `lambda/n` per node);
//! 3. gossip: a non-isolated node fires (rate `lambda` each), picks a
//!    neighbor uniformly, and the neighbor adopts the larger counter.
//!
//! A node's age is `source_counter - node_counter`, a piecewise-constant
//! function of time; a set's age is its minimum over members. All means are
//! exact time integrals between events, so the only estimation error is the
//! finite horizon. Batch means over the post-burn-in window supply a
//! standard error. Runs are deterministic given the seed.

use crate::export::float17;
use crate::graph::{Graph, VertexSet};
use crate::rates::GossipRates;
use crate::rng::rng_from_seed;
use crate::{Error, Result};
use rand::Rng;
use rand_distr::Exp1;
use std::io::Write;

/// Parameters of one simulation run.
#[derive(Debug, Clone)]
pub struct SimConfig {
    pub rates: GossipRates,
    /// Simulated time horizon; aim for `lambda_e * t_end >= 1000` so the
    /// time average has seen a thousand source versions.
    pub t_end: f64,
    /// Fraction of the horizon discarded before averaging starts.
    pub burn_in: f64,
    /// Number of equal batch windows for the batch-means standard error.
    pub batches: usize,
    pub seed: u64,
    /// Vertex sets whose minimum age is tracked; the network average is
    /// always tracked on top of these.
    pub tracked: Vec<VertexSet>,
}

impl SimConfig {
    /// Defaults: 10% burn-in, 20 batches, nothing tracked.
    pub fn new(rates: GossipRates, t_end: f64, seed: u64) -> Self {
        SimConfig {
            rates,
            t_end,
            burn_in: 0.1,
            batches: 20,
            seed,
            tracked: Vec::new(),
        }
    }

    pub fn track(mut self, set: VertexSet) -> Self {
        self.tracked.push(set);
        self
    }
}

/// A time-average and its batch-means standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub mean_age: f64,
    /// Standard error from batch means; 0 when only one batch was used.
    pub batch_std: f64,
}

/// Result of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct SimEstimate {
    /// One estimate per tracked set, in `tracked` order.
    pub set_ages: Vec<(VertexSet, Estimate)>,
    /// Time average of `(1/n) sum_j X_j(t)`.
    pub network_average: Estimate,
    /// Total events fired, including ones that changed nothing.
    pub events: u64,
    /// Source counter at the horizon.
    pub versions_generated: u64,
}

/// Per-vertex means from one run, for sweeps that need every vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexAges {
    /// Post-burn-in mean age of each vertex.
    pub means: Vec<f64>,
    pub network_average: Estimate,
    pub events: u64,
    pub versions_generated: u64,
}

/// Piecewise-constant integrator: `integral` covers [start, last_t] and the
/// current level extends from `last_t` onward.
#[derive(Debug, Clone, Copy, Default)]
struct Lazy {
    integral: f64,
    last_t: f64,
    level: f64,
}

impl Lazy {
    fn settle(&mut self, t: f64) {
        self.integral += self.level * (t - self.last_t);
        self.last_t = t;
    }

    /// Settle at `t`, then jump the level.
    fn jump(&mut self, t: f64, level: f64) {
        self.settle(t);
        self.level = level;
    }
}

fn validate(g: &Graph, cfg: &SimConfig) -> Result<()> {
    if cfg.rates.n != g.n() {
        return Err(Error::param(format!(
            "rates are for n = {} but the graph has {} vertices",
            cfg.rates.n,
            g.n()
        )));
    }
    if !(cfg.t_end > 0.0) || !cfg.t_end.is_finite() {
        return Err(Error::param(format!(
            "horizon must be positive and finite, got {}",
            cfg.t_end
        )));
    }
    if !(0.0..1.0).contains(&cfg.burn_in) {
        return Err(Error::param(format!(
            "burn-in fraction must lie in [0, 1), got {}",
            cfg.burn_in
        )));
    }
    if cfg.batches == 0 {
        return Err(Error::param("need at least one batch"));
    }
    for s in &cfg.tracked {
        if s.is_empty() {
            return Err(Error::param("tracked set is empty"));
        }
        if s.members().last().copied().unwrap_or(0) >= g.n() {
            return Err(Error::param(format!(
                "tracked set {s} has a vertex outside the graph"
            )));
        }
    }
    Ok(())
}

/// Shared event loop. `per_vertex` turns on per-vertex integration; `trace`
/// receives one CSV row per event (columns
/// `t,event_class,actor,target,source_counter`, source counter taken after
/// the event, vertices 1-based with 0 for the source).
fn run(
    g: &Graph,
    cfg: &SimConfig,
    per_vertex: bool,
    mut trace: Option<&mut dyn Write>,
) -> Result<(SimEstimate, Option<Vec<f64>>)> {
    validate(g, cfg)?;
    let n = g.n();
    let (lambda_e, lambda) = (cfg.rates.lambda_e, cfg.rates.lambda);
    let active: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    let total_rate = lambda_e + lambda + lambda * active.len() as f64;

    // Batch boundaries over the post-burn-in window; the last one is the
    // horizon itself.
    let t0 = cfg.burn_in * cfg.t_end;
    let width = cfg.t_end - t0;
    let b = cfg.batches;
    let boundaries: Vec<f64> = (0..=b)
        .map(|i| {
            if i == b {
                cfg.t_end
            } else {
                t0 + width * i as f64 / b as f64
            }
        })
        .collect();

    let mut counters = vec![0u64; n];
    let mut source = 0u64;
    // Integrals of the source counter and of sum_j counter_j; ages are
    // recovered as differences, e.g. int X_j = int source - int counter_j.
    let mut source_int = Lazy::default();
    let mut sum_int = Lazy::default();
    // Per tracked set: the running max counter over members.
    let mut set_int: Vec<Lazy> = vec![Lazy::default(); cfg.tracked.len()];
    // vertex -> indices of tracked sets containing it
    let mut member_of: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (k, s) in cfg.tracked.iter().enumerate() {
        for &v in s.members() {
            member_of[v].push(k as u32);
        }
    }
    let mut vertex_int: Vec<Lazy> = if per_vertex {
        vec![Lazy::default(); n]
    } else {
        Vec::new()
    };
    let mut vertex_int_at_t0: Vec<f64> = Vec::new();

    let mut source_snaps = Vec::with_capacity(b + 1);
    let mut sum_snaps = Vec::with_capacity(b + 1);
    let mut set_snaps: Vec<Vec<f64>> = vec![Vec::with_capacity(b + 1); cfg.tracked.len()];

    let mut rng = rng_from_seed(cfg.seed);
    let mut t = 0.0_f64;
    let mut events = 0u64;
    let mut next_boundary = 0usize;

    loop {
        let dt: f64 = rng.sample::<f64, _>(Exp1) / total_rate;
        let t_next = t + dt;
        let horizon = t_next >= cfg.t_end;
        let stop_at = if horizon { cfg.t_end } else { t_next };

        while next_boundary <= b && boundaries[next_boundary] <= stop_at {
            let tb = boundaries[next_boundary];
            source_int.settle(tb);
            sum_int.settle(tb);
            source_snaps.push(source_int.integral);
            sum_snaps.push(sum_int.integral);
            for (k, li) in set_int.iter_mut().enumerate() {
                li.settle(tb);
                set_snaps[k].push(li.integral);
            }
            if per_vertex {
                for li in vertex_int.iter_mut() {
                    li.settle(tb);
                }
                if next_boundary == 0 {
                    vertex_int_at_t0 = vertex_int.iter().map(|li| li.integral).collect();
                }
            }
            next_boundary += 1;
        }
        if horizon {
            break;
        }
        t = t_next;
        events += 1;

        // (actor, target) for the trace; state change via adopt below.
        let x = rng.random::<f64>() * total_rate;
        let adopt = |v: usize,
                     newc: u64,
                     counters: &mut [u64],
                     sum_int: &mut Lazy,
                     set_int: &mut [Lazy],
                     vertex_int: &mut [Lazy]| {
            let old = counters[v];
            if newc <= old {
                return;
            }
            counters[v] = newc;
            sum_int.jump(t, sum_int.level + (newc - old) as f64);
            for &k in &member_of[v] {
                let li = &mut set_int[k as usize];
                if (newc as f64) > li.level {
                    li.jump(t, newc as f64);
                }
            }
            if per_vertex {
                vertex_int[v].jump(t, newc as f64);
            }
        };

        let (class, actor, target) = if x < lambda_e {
            source += 1;
            source_int.jump(t, source as f64);
            ("update", 0usize, 0usize)
        } else if x < lambda_e + lambda {
            let v = rng.random_range(0..n);
            adopt(
                v,
                source,
                &mut counters,
                &mut sum_int,
                &mut set_int,
                &mut vertex_int,
            );
            ("deliver", 0, v + 1)
        } else {
            let i = active[rng.random_range(0..active.len())];
            let nbrs = g.neighbors(i);
            let j = nbrs[rng.random_range(0..nbrs.len())];
            let c = counters[i];
            adopt(
                j,
                c,
                &mut counters,
                &mut sum_int,
                &mut set_int,
                &mut vertex_int,
            );
            ("gossip", i + 1, j + 1)
        };
        if let Some(w) = trace.as_deref_mut() {
            writeln!(w, "{},{class},{actor},{target},{source}", float17(t))?;
        }
    }

    // Batch means: integral difference per window over its width.
    let bw = width / b as f64;
    let batch_means = |snaps: &[f64], against_source: bool, scale: f64| -> Vec<f64> {
        (0..b)
            .map(|i| {
                let d = (snaps[i + 1] - snaps[i]) * scale;
                if against_source {
                    (source_snaps[i + 1] - source_snaps[i] - d) / bw
                } else {
                    d / bw
                }
            })
            .collect()
    };
    let summarize = |means: &[f64]| -> Estimate {
        let m = means.iter().sum::<f64>() / means.len() as f64;
        let se = if means.len() > 1 {
            let var = means.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (means.len() - 1) as f64;
            (var / means.len() as f64).sqrt()
        } else {
            0.0
        };
        Estimate {
            mean_age: m,
            batch_std: se,
        }
    };

    let set_ages = cfg
        .tracked
        .iter()
        .cloned()
        .zip(
            set_snaps
                .iter()
                .map(|s| summarize(&batch_means(s, true, 1.0))),
        )
        .collect();
    let network_average = summarize(&batch_means(&sum_snaps, true, 1.0 / n as f64));

    let vertex_means = per_vertex.then(|| {
        let s_total = source_int.integral - source_snaps[0];
        vertex_int
            .iter()
            .zip(&vertex_int_at_t0)
            .map(|(li, at_t0)| (s_total - (li.integral - at_t0)) / width)
            .collect()
    });

    Ok((
        SimEstimate {
            set_ages,
            network_average,
            events,
            versions_generated: source,
        },
        vertex_means,
    ))
}

/// Runs the process and reports each tracked set's time-average age plus
/// the network average.
pub fn simulate(g: &Graph, cfg: &SimConfig) -> Result<SimEstimate> {
    run(g, cfg, false, None).map(|(est, _)| est)
}

/// Like [`simulate`], writing one CSV row per event to `w`
/// (`t,event_class,actor,target,source_counter`; header written first).
pub fn simulate_with_trace(g: &Graph, cfg: &SimConfig, w: &mut dyn Write) -> Result<SimEstimate> {
    writeln!(w, "t,event_class,actor,target,source_counter")?;
    run(g, cfg, false, Some(w)).map(|(est, _)| est)
}

/// Time average of the per-vertex mean age `(1/n) sum_j X_j(t)`. Tracked
/// sets in `cfg` are estimated too but the headline value is the average.
pub fn average_network_age(g: &Graph, cfg: &SimConfig) -> Result<SimEstimate> {
    simulate(g, cfg)
}

/// Post-burn-in mean age of every vertex from a single run; the whole-window
/// mean, without per-vertex batching. Tracked sets in `cfg` are ignored.
pub fn simulate_vertex_ages(g: &Graph, cfg: &SimConfig) -> Result<VertexAges> {
    let stripped = SimConfig {
        tracked: Vec::new(),
        ..cfg.clone()
    };
    let (est, means) = run(g, &stripped, true, None)?;
    Ok(VertexAges {
        means: means.expect("per-vertex mode"),
        network_average: est.network_average,
        events: est.events,
        versions_generated: est.versions_generated,
    })
}

/// Renders estimates as `set,mean_age,batch_std,events` CSV; tracked sets
/// first (1-based, quoted), then the network average as `avg`.
pub fn estimates_csv(est: &SimEstimate) -> String {
    let mut out = String::from("set,mean_age,batch_std,events\n");
    for (s, e) in &est.set_ages {
        out.push_str(&format!(
            "\"{}\",{},{},{}\n",
            s,
            float17(e.mean_age),
            float17(e.batch_std),
            est.events
        ));
    }
    out.push_str(&format!(
        "avg,{},{},{}\n",
        float17(est.network_average.mean_age),
        float17(est.network_average.batch_std),
        est.events
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::solve_exact;

    const HORIZON: f64 = 2e5;

    fn unit_cfg(n: usize, seed: u64) -> SimConfig {
        SimConfig::new(GossipRates::unit(n), HORIZON, seed)
    }

    /// |estimate - target| within 3 batch standard errors and 3% relative.
    fn assert_close(e: &Estimate, target: f64, what: &str) {
        let err = (e.mean_age - target).abs();
        assert!(
            err <= 3.0 * e.batch_std,
            "{what}: {} vs {target} (3 se = {})",
            e.mean_age,
            3.0 * e.batch_std
        );
        assert!(
            err <= 0.03 * target,
            "{what}: {} vs {target} beyond 3%",
            e.mean_age
        );
    }

    #[test]
    fn edgeless_graph_singleton_matches_closed_form() {
        let g = Graph::empty(5).unwrap();
        let cfg = unit_cfg(5, 51).track(VertexSet::singleton(0));
        let est = simulate(&g, &cfg).unwrap();
        assert_close(&est.set_ages[0].1, 5.0, "singleton");
        assert_close(&est.network_average, 5.0, "average");
        assert!(est.events >= est.versions_generated);
    }

    #[test]
    fn k2_singleton_matches_exact_value() {
        let g = Graph::complete(2).unwrap();
        let cfg = unit_cfg(2, 52).track(VertexSet::singleton(0));
        let est = simulate(&g, &cfg).unwrap();
        assert_close(&est.set_ages[0].1, 4.0 / 3.0, "K_2 singleton");
    }

    #[test]
    fn k3_singleton_matches_exact_value() {
        let g = Graph::complete(3).unwrap();
        let cfg = unit_cfg(3, 53).track(VertexSet::singleton(1));
        let est = simulate(&g, &cfg).unwrap();
        assert_close(&est.set_ages[0].1, 33.0 / 20.0, "K_3 singleton");
    }

    #[test]
    fn star_network_average_matches_exact_mix() {
        // Center 51/35 plus two leaves at 48/25 each.
        let g = Graph::star(3).unwrap();
        let est = average_network_age(&g, &unit_cfg(3, 54)).unwrap();
        let target = (51.0 / 35.0 + 2.0 * 48.0 / 25.0) / 3.0;
        assert_close(&est.network_average, target, "star average");
    }

    #[test]
    fn pair_set_tracks_the_fresher_member() {
        let g = Graph::complete(3).unwrap();
        let rates = GossipRates::unit(3);
        let table = solve_exact(&g, rates).unwrap();
        let pair = VertexSet::new(vec![0, 2]);
        let target = table.age(&pair).unwrap();
        let cfg = unit_cfg(3, 55).track(pair);
        let est = simulate(&g, &cfg).unwrap();
        assert_close(&est.set_ages[0].1, target, "K_3 pair");
    }

    #[test]
    fn vertex_transitive_average_agrees_with_singleton() {
        let g = Graph::cycle(4).unwrap();
        let cfg = unit_cfg(4, 56).track(VertexSet::singleton(2));
        let est = simulate(&g, &cfg).unwrap();
        let (avg, single) = (est.network_average, est.set_ages[0].1);
        let slack = 3.0 * (avg.batch_std + single.batch_std);
        assert!(
            (avg.mean_age - single.mean_age).abs() <= slack,
            "{} vs {}",
            avg.mean_age,
            single.mean_age
        );
    }

    #[test]
    fn per_vertex_means_match_tracked_singletons() {
        let g = Graph::path(4).unwrap();
        let mut cfg = unit_cfg(4, 57);
        for v in 0..4 {
            cfg = cfg.track(VertexSet::singleton(v));
        }
        let est = simulate(&g, &cfg).unwrap();
        let ages = simulate_vertex_ages(&g, &cfg).unwrap();
        // Same seed, same event stream: the whole-window integral equals
        // the batch-mean average exactly up to float rounding.
        for v in 0..4 {
            assert!(
                (ages.means[v] - est.set_ages[v].1.mean_age).abs() < 1e-9,
                "vertex {v}"
            );
        }
        assert_eq!(ages.events, est.events);
    }

    #[test]
    fn same_seed_reproduces_bitwise() {
        let g = Graph::cycle(5).unwrap();
        let cfg = unit_cfg(5, 58).track(VertexSet::singleton(0));
        let a = simulate(&g, &cfg).unwrap();
        let b = simulate(&g, &cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a.set_ages[0].1.mean_age.to_bits(),
            b.set_ages[0].1.mean_age.to_bits()
        );
        let other = simulate(
            &g,
            &SimConfig {
                seed: 59,
                ..cfg.clone()
            },
        )
        .unwrap();
        assert_ne!(a.set_ages[0].1.mean_age, other.set_ages[0].1.mean_age);
    }

    #[test]
    fn version_count_is_poisson_at_rate_lambda_e() {
        let g = Graph::empty(3).unwrap();
        let cfg = SimConfig::new(GossipRates::new(2.0, 1.0, 3).unwrap(), 1e5, 60);
        let est = simulate(&g, &cfg).unwrap();
        let rate = est.versions_generated as f64 / cfg.t_end;
        let se = (2.0 / cfg.t_end).sqrt();
        assert!((rate - 2.0).abs() <= 3.0 * se, "rate {rate}");
    }

    #[test]
    fn trace_on_edgeless_graph_has_no_gossip_rows() {
        let g = Graph::empty(4).unwrap();
        let cfg = SimConfig::new(GossipRates::unit(4), 50.0, 61);
        let mut buf = Vec::new();
        let est = simulate_with_trace(&g, &cfg, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("t,event_class,actor,target,source_counter")
        );
        let mut rows = 0u64;
        let mut last_counter = 0u64;
        for line in lines {
            rows += 1;
            let fields: Vec<&str> = line.split(',').collect();
            assert_eq!(fields.len(), 5);
            assert_ne!(fields[1], "gossip");
            let c: u64 = fields[4].parse().unwrap();
            assert!(c >= last_counter, "source counter decreased");
            if fields[1] == "update" {
                assert_eq!(c, last_counter + 1);
            } else {
                assert_eq!(c, last_counter);
            }
            last_counter = c;
        }
        assert_eq!(rows, est.events);
    }

    #[test]
    fn estimates_render_as_csv() {
        let g = Graph::complete(2).unwrap();
        let cfg = SimConfig::new(GossipRates::unit(2), 500.0, 62).track(VertexSet::singleton(0));
        let est = simulate(&g, &cfg).unwrap();
        let csv = estimates_csv(&est);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("set,mean_age,batch_std,events"));
        assert!(lines.next().unwrap().starts_with("\"{1}\","));
        assert!(lines.next().unwrap().starts_with("avg,"));
        assert!(lines.next().is_none());
    }

    #[test]
    fn rejects_degenerate_configs() {
        let g = Graph::complete(3).unwrap();
        let good = unit_cfg(3, 1);
        assert!(simulate(
            &g,
            &SimConfig {
                t_end: 0.0,
                ..good.clone()
            }
        )
        .is_err());
        assert!(simulate(
            &g,
            &SimConfig {
                burn_in: 1.0,
                ..good.clone()
            }
        )
        .is_err());
        assert!(simulate(
            &g,
            &SimConfig {
                batches: 0,
                ..good.clone()
            }
        )
        .is_err());
        assert!(simulate(&g, &unit_cfg(4, 1)).is_err());
        let empty_set = SimConfig {
            tracked: vec![VertexSet::new(Vec::new())],
            ..good.clone()
        };
        assert!(simulate(&g, &empty_set).is_err());
        let out_of_range = good.track(VertexSet::singleton(3));
        assert!(simulate(&g, &out_of_range).is_err());
    }
}
