//! Property tests: structural invariants that must hold on randomly drawn
//! inputs, not just the hand-picked cases in the unit tests.

use gossip_age::bounds::{chernoff_tail, digamma, dreg_bound_sums};
use gossip_age::exact::{identity_residual, solve_exact};
use gossip_age::graph::edge_boundary;
use gossip_age::sim::{simulate, SimConfig};
use gossip_age::structured::bipartite_grid;
use gossip_age::{GossipRates, Graph, VertexSet};
use proptest::prelude::*;

/// Builds the graph on `n` vertices whose edge set is the low bits of
/// `code` over the lexicographic pair list.
fn graph_from_code(n: usize, code: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(b, _)| code >> b & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..=7, any::<u64>()).prop_map(|(n, code)| {
        let bits = n * (n - 1) / 2;
        graph_from_code(n, code & ((1 << bits) - 1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The full informed set always sits at the source's own refresh lag.
    #[test]
    fn full_set_age_is_the_rate_ratio(g in small_graph(),
                                      lambda_e in 0.1f64..10.0,
                                      lambda in 0.1f64..10.0) {
        let n = g.n();
        let table = solve_exact(&g, GossipRates::new(lambda_e, lambda, n).unwrap()).unwrap();
        let full = table.age(&VertexSet::full(n)).unwrap();
        prop_assert!((full - lambda_e / lambda).abs() <= 1e-12 * (lambda_e / lambda));
    }

    /// Growing the watched set can only lower its age: the minimum over a
    /// superset is smaller pathwise.
    #[test]
    fn adding_a_member_never_raises_the_age(g in small_graph(), seed in any::<u64>()) {
        let n = g.n();
        let table = solve_exact(&g, GossipRates::unit(n)).unwrap();
        // Walk a random chain from a singleton to the full set.
        let mut order: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        let mut set = VertexSet::singleton(order[0]);
        let mut last = table.age(&set).unwrap();
        for &v in &order[1..] {
            set = set.with_vertex(v);
            let next = table.age(&set).unwrap();
            prop_assert!(next <= last + 1e-12, "age rose from {last} to {next} at {set}");
            last = next;
        }
    }

    /// Ages are homogeneous: scaling both rates together changes nothing,
    /// and the source rate scales them linearly.
    #[test]
    fn ages_scale_with_the_rates(g in small_graph(),
                                 scale in 0.1f64..10.0,
                                 mask_seed in any::<u64>()) {
        let n = g.n();
        let mask = 1 + mask_seed % ((1 << n) - 1);
        let s = VertexSet::from_mask(mask);
        let base = solve_exact(&g, GossipRates::unit(n)).unwrap().age(&s).unwrap();
        let both = solve_exact(&g, GossipRates::new(scale, scale, n).unwrap())
            .unwrap()
            .age(&s)
            .unwrap();
        prop_assert!((both - base).abs() <= 1e-9 * base.abs());
        let source_only = solve_exact(&g, GossipRates::new(scale, 1.0, n).unwrap())
            .unwrap()
            .age(&s)
            .unwrap();
        prop_assert!((source_only - scale * base).abs() <= 1e-9 * (scale * base).abs());
    }

    /// Every solved table satisfies the stationary balance identity on
    /// every subset, not only the corpus graphs.
    #[test]
    fn conservation_holds_on_random_graphs(g in small_graph()) {
        let n = g.n();
        let rates = GossipRates::unit(n);
        let table = solve_exact(&g, rates).unwrap();
        for mask in 1u64..(1 << n) {
            let r = identity_residual(&g, rates, &table, &VertexSet::from_mask(mask)).unwrap();
            prop_assert!(r <= 1e-10, "residual {r} at mask {mask}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The two-sided grid is symmetric under swapping the sides and is
    /// monotone in both informed counts.
    #[test]
    fn bipartite_grid_is_symmetric_and_monotone(l in 1usize..=10, r in 1usize..=10) {
        let grid = bipartite_grid(l, r).unwrap();
        let flipped = bipartite_grid(r, l).unwrap();
        for i in 0..=l {
            for j in 0..=r {
                if i + j == 0 {
                    continue;
                }
                let u = grid.u(i, j);
                prop_assert!((u - flipped.u(j, i)).abs() <= 1e-12 * u);
                if i > 1 || (i == 1 && j > 0) {
                    prop_assert!(grid.u(i - 1, j) >= u - 1e-12);
                }
                if j > 1 || (j == 1 && i > 0) {
                    prop_assert!(grid.u(i, j - 1) >= u - 1e-12);
                }
            }
        }
        prop_assert!((grid.u(l, r) - 1.0).abs() <= 1e-12);
    }

    /// A set and its complement share every boundary edge.
    #[test]
    fn edge_boundary_is_complement_symmetric(g in small_graph(), mask_seed in any::<u64>()) {
        let n = g.n();
        let mask = 1 + mask_seed % ((1 << n) - 1);
        let s = VertexSet::from_mask(mask);
        let c = s.complement(n);
        if !c.is_empty() {
            prop_assert_eq!(
                edge_boundary(&g, &s).unwrap(),
                edge_boundary(&g, &c).unwrap()
            );
        }
    }

    /// Structured-sum cross-check: the running-product form never exceeds
    /// its harmonic closed-form cap.
    #[test]
    fn dreg_raw_form_stays_under_harmonic(n in 4usize..=2000, c_d in 0.01f64..0.49) {
        let sums = dreg_bound_sums(n, 3, c_d, 1.0, 1.0).unwrap();
        prop_assert!(sums.raw <= sums.harmonic * (1.0 + 1e-12));
        prop_assert!(sums.raw > 0.0);
    }

    /// Shift identity on random arguments.
    #[test]
    fn digamma_recurrence_holds(x in 0.01f64..80.0) {
        let lhs = digamma(x + 1.0).unwrap();
        let rhs = digamma(x).unwrap() + 1.0 / x;
        prop_assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs().max(1.0));
    }

    /// Concentration tails shrink as the deviation parameter grows.
    #[test]
    fn chernoff_tail_decreases_in_delta(k in 1usize..=8, p in 0.0f64..1.5) {
        let n = 16;
        let loose = chernoff_tail(k, n, p, 0.2).unwrap();
        let tight = chernoff_tail(k, n, p, 0.8).unwrap();
        prop_assert!(tight <= loose);
        prop_assert!(loose <= 3.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Same seed, same estimate, bit for bit; simulation output is a pure
    /// function of (graph, config).
    #[test]
    fn simulation_is_deterministic(g in small_graph(), seed in any::<u64>()) {
        let n = g.n();
        let cfg = SimConfig {
            tracked: vec![VertexSet::singleton(0), VertexSet::full(n)],
            ..SimConfig::new(GossipRates::unit(n), 200.0, seed)
        };
        let a = simulate(&g, &cfg).unwrap();
        let b = simulate(&g, &cfg).unwrap();
        prop_assert_eq!(&a, &b);
        for (_, e) in &a.set_ages {
            prop_assert!(e.mean_age.is_finite() && e.mean_age >= 0.0);
        }
        prop_assert!(a.events >= a.versions_generated);
    }
}
