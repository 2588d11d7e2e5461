//! Exact version ages for every nonempty vertex subset.
//!
//! For a subset `S`, writing `lambda_0(S) = lambda * |S| / n` for the
//! source-to-set delivery rate and `lambda_i(S) = lambda * |N(i) cap S| /
//! deg(i)` for the flow from an outside node `i` into `S` (zero for isolated
//! `i`), the limiting age satisfies
//!
//! ```text
//! v(S) = (lambda_e + sum_{i not in S} lambda_i(S) * v(S + i))
//!        / (lambda_0(S) + sum_{i not in S} lambda_i(S))
//! ```
//!
//! anchored at `v(full set) = lambda_e / lambda`. Each `v(S)` depends only on
//! strict supersets, so one sweep in decreasing subset order solves the whole
//! lattice; no fixpoint iteration is involved. The empty set has no age and
//! is never evaluated.
//!
//! The equivalent conservation form, used as a cross-check on any solved
//! table, is
//!
//! ```text
//! lambda_e = lambda_0(S) v(S) + sum_{i not in S} lambda_i(S) (v(S) - v(S + i))
//! ```
//!
//! whose residual should be zero to rounding for every subset.

use crate::export::float17;
use crate::graph::{Graph, VertexSet};
use crate::rates::GossipRates;
use crate::structured::clique_age;
use crate::{Error, Result};
use std::io::Write;

/// Exhaustive solving is exponential in `n`; 2^20 table entries is the
/// supported ceiling.
pub const MAX_EXACT_VERTICES: usize = 20;

/// Absolute slack for the edge-addition monotonicity check.
pub const MONOTONICITY_TOL: f64 = 1e-12;

/// Ages of every nonempty subset of one graph, indexed by bitmask.
#[derive(Debug, Clone)]
pub struct SubsetAgeTable {
    n: usize,
    ages: Vec<f64>,
    /// Fingerprint of the solved graph (see [`Graph::signature`]).
    pub graph_id: String,
    pub rates: GossipRates,
}

impl SubsetAgeTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Age of a subset given as a bitmask over vertices `0..n`.
    pub fn age_of_mask(&self, mask: u64) -> Result<f64> {
        let full = full_mask(self.n);
        if mask == 0 || mask & !full != 0 {
            return Err(Error::param(format!(
                "mask {mask:#b} is not a nonempty subset of 0..{}",
                self.n
            )));
        }
        Ok(self.ages[mask as usize])
    }

    pub fn age(&self, s: &VertexSet) -> Result<f64> {
        let mask = s
            .mask()
            .ok_or_else(|| Error::param("set does not fit in a 64-bit mask"))?;
        self.age_of_mask(mask)
    }

    /// Overwrites one entry; used to probe how diagnostics react to
    /// perturbed tables.
    pub fn set_age(&mut self, s: &VertexSet, value: f64) -> Result<()> {
        let mask = s
            .mask()
            .ok_or_else(|| Error::param("set does not fit in a 64-bit mask"))?;
        self.age_of_mask(mask)?; // validates
        self.ages[mask as usize] = value;
        Ok(())
    }

    /// All `(mask, age)` pairs in increasing mask order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.ages
            .iter()
            .enumerate()
            .skip(1)
            .map(|(m, &a)| (m as u64, a))
    }

    /// Table export: header `subset_bitmask,size,age`, one row per nonempty
    /// subset in increasing mask order, ages at full float precision.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> Result<()> {
        writeln!(w, "subset_bitmask,size,age")?;
        for (mask, age) in self.iter() {
            writeln!(w, "{mask},{},{}", mask.count_ones(), float17(age))?;
        }
        Ok(())
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Solves the subset recursion over all `2^n - 1` nonempty subsets.
///
/// Time `O(n * 2^n)`, memory `O(2^n)`; `n` is capped at
/// [`MAX_EXACT_VERTICES`]. `rates.n` must match the graph order.
pub fn solve_exact(g: &Graph, rates: GossipRates) -> Result<SubsetAgeTable> {
    let n = g.n();
    if n > MAX_EXACT_VERTICES {
        return Err(Error::TooLarge {
            what: "solve_exact",
            limit: MAX_EXACT_VERTICES,
            got: n,
        });
    }
    if rates.n != n {
        return Err(Error::param(format!(
            "rates are for n = {}, graph has n = {n}",
            rates.n
        )));
    }
    let masks = g.adjacency_masks().expect("n <= 20 fits in u64 masks");
    let full = full_mask(n);
    let mut ages = vec![f64::NAN; (full as usize) + 1];
    ages[full as usize] = rates.lambda_e / rates.lambda;

    // Adding a vertex can only raise the mask value, so a descending sweep
    // sees every superset before the sets that need it.
    for mask in (1..full).rev() {
        let mut num = rates.lambda_e;
        let mut den = rates.source_set_rate(mask.count_ones() as usize);
        let mut outside = !mask & full;
        while outside != 0 {
            let i = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            let shared = (masks[i] & mask).count_ones();
            if shared == 0 {
                continue;
            }
            let flow = rates.lambda * shared as f64 / g.degree(i) as f64;
            num += flow * ages[(mask | (1 << i)) as usize];
            den += flow;
        }
        ages[mask as usize] = num / den;
    }

    Ok(SubsetAgeTable {
        n,
        ages,
        graph_id: g.signature(),
        rates,
    })
}

/// Absolute residual of the conservation identity at `s` for a solved (or
/// deliberately perturbed) table. Zero to rounding on consistent tables.
pub fn identity_residual(
    g: &Graph,
    rates: GossipRates,
    table: &SubsetAgeTable,
    s: &VertexSet,
) -> Result<f64> {
    if table.n != g.n() {
        return Err(Error::param("table and graph sizes differ"));
    }
    let mask = s
        .mask()
        .ok_or_else(|| Error::param("set does not fit in a 64-bit mask"))?;
    let v_s = table.age_of_mask(mask)?;
    let adj = g.adjacency_masks().expect("table size is capped at 20");
    let full = full_mask(g.n());
    let mut acc = rates.lambda_e - rates.source_set_rate(s.len()) * v_s;
    let mut outside = !mask & full;
    while outside != 0 {
        let i = outside.trailing_zeros() as usize;
        outside &= outside - 1;
        let shared = (adj[i] & mask).count_ones();
        if shared == 0 {
            continue;
        }
        let flow = rates.lambda * shared as f64 / g.degree(i) as f64;
        acc -= flow * (v_s - table.ages[(mask | (1 << i)) as usize]);
    }
    Ok(acc.abs())
}

/// Outcome of checking that adding any single edge never increases any
/// subset age.
#[derive(Debug, Clone)]
pub struct MonotonicityReport {
    /// True when no `(edge, subset)` pair increased by more than
    /// [`MONOTONICITY_TOL`].
    pub holds: bool,
    /// Largest signed increase observed (usually negative or zero);
    /// 0 when there were no candidate edges.
    pub worst_violation: f64,
    /// Number of `(edge, subset)` pairs compared.
    pub candidates: u64,
    /// The `(edge, subset)` pair attaining `worst_violation`, if any
    /// candidate existed.
    pub witness: Option<((usize, usize), VertexSet)>,
}

/// Maximum order for the all-edges monotonicity sweep; each missing edge
/// costs one extra exact solve.
pub const MAX_MONOTONICITY_VERTICES: usize = 12;

/// Re-solves the graph once per missing edge and compares every subset age
/// against the base table. Vacuously holds on complete graphs.
///
/// Edge addition is not always an improvement under degree-normalized
/// relaying: a new edge at `u` splits `u`'s outgoing rate across one more
/// neighbor, which can slow the flow into sets that relied on `u`'s
/// attention. Smallest case: closing the path 1-2-3 into a triangle lifts
/// the center's singleton age from 51/35 to 33/20. This checker is a
/// detector for such reversals, not a proof that none exist.
pub fn monotonicity_check(g: &Graph, rates: GossipRates) -> Result<MonotonicityReport> {
    let n = g.n();
    if n > MAX_MONOTONICITY_VERTICES {
        return Err(Error::TooLarge {
            what: "monotonicity_check",
            limit: MAX_MONOTONICITY_VERTICES,
            got: n,
        });
    }
    let base = solve_exact(g, rates)?;
    let mut report = MonotonicityReport {
        holds: true,
        worst_violation: 0.0,
        candidates: 0,
        witness: None,
    };
    let mut worst = f64::NEG_INFINITY;
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) {
                continue;
            }
            let denser = solve_exact(&g.with_edge(u, v)?, rates)?;
            for (mask, age) in denser.iter() {
                let diff = age - base.ages[mask as usize];
                report.candidates += 1;
                if diff > worst {
                    worst = diff;
                    report.witness = Some(((u, v), VertexSet::from_mask(mask)));
                }
            }
        }
    }
    if report.candidates > 0 {
        report.worst_violation = worst;
        report.holds = worst <= MONOTONICITY_TOL;
    }
    Ok(report)
}

/// Checks the singleton sandwich on a solved table: the complete-graph age
/// as lower end, the no-edge age `n * lambda_e / lambda` as upper end (both
/// attained, so comparison allows `rel_tol`).
///
/// The upper end is sound: gossip only ever replaces a counter with a
/// fresher one, so no topology does worse than no edges at all. The lower
/// end is a heuristic reference point, not a true bound; K_n does not
/// minimize singleton ages under degree-normalized relaying (a star center
/// beats it), so this returns false on such graphs.
pub fn singleton_sandwich_check(table: &SubsetAgeTable, rates: GossipRates) -> Result<bool> {
    let n = table.n;
    let clique_u1 = clique_age(n)?[0];
    let scale = rates.lambda_e / rates.lambda;
    let lower = clique_u1 * scale;
    let upper = n as f64 * scale;
    let rel_tol = 1e-12;
    for v in 0..n {
        let age = table.age_of_mask(1u64 << v)?;
        if age < lower * (1.0 - rel_tol) || age > upper * (1.0 + rel_tol) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::reference_corpus;

    const TIGHT: f64 = 1e-12;

    fn unit_table(g: &Graph) -> SubsetAgeTable {
        solve_exact(g, GossipRates::unit(g.n())).unwrap()
    }

    /// Hand-unrolled oracle, K_2 with unit rates:
    ///   v({1,2}) = 1.
    ///   For S = {1}: lambda_0 = 1/2, flow from node 2 is 1, so
    ///   v = (1 + 1*1) / (1/2 + 1) = 4/3.
    #[test]
    fn k2_singleton_is_four_thirds() {
        let t = unit_table(&Graph::complete(2).unwrap());
        assert!((t.age_of_mask(0b01).unwrap() - 4.0 / 3.0).abs() < TIGHT);
        assert!((t.age_of_mask(0b10).unwrap() - 4.0 / 3.0).abs() < TIGHT);
        assert!((t.age_of_mask(0b11).unwrap() - 1.0).abs() < TIGHT);
    }

    /// Hand-unrolled oracle, K_3 with unit rates:
    ///   v(pair) = (1 + 1) / (2/3 + 1) = 6/5,
    ///   v({1})  = (1 + (1/2)(6/5) + (1/2)(6/5)) / (1/3 + 1) = 33/20.
    #[test]
    fn k3_ages_match_hand_unrolled_values() {
        let t = unit_table(&Graph::complete(3).unwrap());
        for pair in [0b011u64, 0b101, 0b110] {
            assert!((t.age_of_mask(pair).unwrap() - 6.0 / 5.0).abs() < TIGHT);
        }
        for single in [0b001u64, 0b010, 0b100] {
            assert!((t.age_of_mask(single).unwrap() - 33.0 / 20.0).abs() < TIGHT);
        }
    }

    /// Hand-unrolled oracle, star K_{1,2} with unit rates (center is vertex 1):
    ///   v({2,3})   = 6/5        (the two leaves)
    ///   v({1})     = 51/35      (center singleton)
    ///   v({2})     = 48/25      (leaf singleton)
    #[test]
    fn star_k12_ages_match_hand_unrolled_values() {
        let t = unit_table(&Graph::star(3).unwrap());
        assert!((t.age_of_mask(0b110).unwrap() - 6.0 / 5.0).abs() < TIGHT);
        assert!((t.age_of_mask(0b001).unwrap() - 51.0 / 35.0).abs() < TIGHT);
        assert!((t.age_of_mask(0b010).unwrap() - 48.0 / 25.0).abs() < TIGHT);
        assert!((t.age_of_mask(0b100).unwrap() - 48.0 / 25.0).abs() < TIGHT);
    }

    /// With no edges the recursion collapses to v(S) = lambda_e * n /
    /// (lambda * |S|): only source deliveries reach the set.
    #[test]
    fn empty_graph_ages_are_n_over_size() {
        let t = unit_table(&Graph::empty(3).unwrap());
        for v in 0..3 {
            assert!((t.age_of_mask(1 << v).unwrap() - 3.0).abs() < TIGHT);
        }
        assert!((t.age_of_mask(0b011).unwrap() - 1.5).abs() < TIGHT);
        assert!((t.age_of_mask(0b111).unwrap() - 1.0).abs() < TIGHT);
    }

    #[test]
    fn full_set_age_is_rate_ratio() {
        for (_, g) in reference_corpus(6) {
            let rates = GossipRates::new(2.5, 4.0, g.n()).unwrap();
            let t = solve_exact(&g, rates).unwrap();
            let full = (1u64 << g.n()) - 1;
            assert!((t.age_of_mask(full).unwrap() - 2.5 / 4.0).abs() < TIGHT);
        }
    }

    #[test]
    fn rejects_oversized_graphs_and_mismatched_rates() {
        let g = Graph::empty(21).unwrap();
        assert!(matches!(
            solve_exact(&g, GossipRates::unit(21)),
            Err(Error::TooLarge { .. })
        ));
        let g = Graph::complete(3).unwrap();
        assert!(solve_exact(&g, GossipRates::unit(4)).is_err());
    }

    #[test]
    fn table_lookup_validates_masks() {
        let t = unit_table(&Graph::complete(3).unwrap());
        assert!(t.age_of_mask(0).is_err());
        assert!(t.age_of_mask(0b1000).is_err());
        assert!(t.age(&VertexSet::new(vec![0, 2])).is_ok());
    }

    /// Doubling lambda_e doubles every age; scaling both rates together
    /// leaves the normalized age v * (lambda / lambda_e) unchanged.
    #[test]
    fn ages_scale_linearly_in_the_rates() {
        let g = Graph::path(5).unwrap();
        let base = solve_exact(&g, GossipRates::unit(5)).unwrap();
        let doubled = solve_exact(&g, GossipRates::new(2.0, 1.0, 5).unwrap()).unwrap();
        let scaled = solve_exact(&g, GossipRates::new(3.0, 3.0, 5).unwrap()).unwrap();
        for (mask, age) in base.iter() {
            assert!((doubled.age_of_mask(mask).unwrap() - 2.0 * age).abs() < 1e-11);
            assert!((scaled.age_of_mask(mask).unwrap() - age).abs() < 1e-11);
        }
    }

    /// Pathwise, a superset's minimum age can only be smaller.
    #[test]
    fn ages_decrease_along_supersets() {
        for (name, g) in reference_corpus(7) {
            let t = unit_table(&g);
            let full = (1u64 << g.n()) - 1;
            for mask in 1..=full {
                let age = t.age_of_mask(mask).unwrap();
                for v in 0..g.n() {
                    if mask >> v & 1 == 0 {
                        let bigger = t.age_of_mask(mask | (1 << v)).unwrap();
                        assert!(bigger <= age + TIGHT, "{name} mask {mask:#b} + {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn residual_is_zero_on_solved_tables() {
        for (name, g) in reference_corpus(7) {
            let rates = GossipRates::new(1.5, 0.8, g.n()).unwrap();
            let t = solve_exact(&g, rates).unwrap();
            let full = (1u64 << g.n()) - 1;
            for mask in 1..=full {
                let r = identity_residual(&g, rates, &t, &VertexSet::from_mask(mask)).unwrap();
                assert!(r <= 1e-10, "{name} mask {mask:#b} residual {r}");
            }
        }
    }

    /// Perturbing K_2's v({1}) by +1 must show up as residual exactly 1.5:
    /// the identity reads 1 - (1/2)v({1}) - (v({1}) - 1) and moving v by +1
    /// moves it by -(1/2 + 1).
    #[test]
    fn residual_detects_perturbation() {
        let g = Graph::complete(2).unwrap();
        let rates = GossipRates::unit(2);
        let mut t = solve_exact(&g, rates).unwrap();
        let s = VertexSet::singleton(0);
        t.set_age(&s, 4.0 / 3.0 + 1.0).unwrap();
        let r = identity_residual(&g, rates, &t, &s).unwrap();
        assert!((r - 1.5).abs() < TIGHT, "residual {r}");
    }

    /// Hand-unrolled counterexample to edge monotonicity. On the path 1-2-3
    /// each endpoint has one neighbor and relays to the center at rate 1,
    /// giving v({2}) = (1 + 6/5 + 6/5) / (1/3 + 2) = 51/35. Closing the
    /// triangle halves both endpoint rates and the center's age rises to the
    /// K_3 singleton value 33/20. Increase: 33/20 - 51/35 = 27/140.
    #[test]
    fn closing_a_path_raises_the_center_age() {
        let g = Graph::path(3).unwrap();
        let t = unit_table(&g);
        assert!((t.age_of_mask(0b010).unwrap() - 51.0 / 35.0).abs() < TIGHT);

        let r = monotonicity_check(&g, GossipRates::unit(3)).unwrap();
        assert!(!r.holds);
        assert!(
            (r.worst_violation - 27.0 / 140.0).abs() < TIGHT,
            "worst {}",
            r.worst_violation
        );
        let ((u, v), s) = r.witness.unwrap();
        assert_eq!((u, v), (0, 2));
        assert_eq!(s.members(), &[1]);
    }

    /// Adding the first edge between two isolated vertices dilutes nothing,
    /// so every age weakly drops and the empty graph passes.
    #[test]
    fn empty_graph_passes_monotonicity_check() {
        let r = monotonicity_check(&Graph::empty(4).unwrap(), GossipRates::unit(4)).unwrap();
        assert!(r.holds, "worst {}", r.worst_violation);
        assert_eq!(r.candidates, 6 * 15);
    }

    #[test]
    fn monotonicity_on_complete_graph_is_vacuous() {
        let r = monotonicity_check(&Graph::complete(4).unwrap(), GossipRates::unit(4)).unwrap();
        assert!(r.holds);
        assert_eq!(r.candidates, 0);
        assert!(r.witness.is_none());
        assert_eq!(r.worst_violation, 0.0);
    }

    /// Sweep of all 64 labeled graphs on 4 vertices (11 isomorphism classes).
    /// Reversals exist but only where the added edge dilutes an existing
    /// flow, which needs an endpoint that already has a neighbor: joining
    /// two isolated vertices adds flow without taking any away.
    #[test]
    fn monotonicity_covers_every_labeled_4_vertex_graph() {
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|u| ((u + 1)..4).map(move |v| (u, v)))
            .collect();
        let mut violating = 0u32;
        for mask in 0u32..(1 << 6) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(4, &edges).unwrap();
            let r = monotonicity_check(&g, GossipRates::unit(4)).unwrap();
            if !r.holds {
                violating += 1;
                let ((u, v), _) = r.witness.clone().unwrap();
                assert!(
                    g.degree(u) > 0 || g.degree(v) > 0,
                    "edge mask {mask:#b}: reversal from a dilution-free edge ({u},{v})"
                );
            }
        }
        assert!(
            violating > 0,
            "the single-edge graph must be among the reversals"
        );

        // Hand-unrolled instance: start from the one-edge graph {(0,1)} and
        // add (0,2). With unit rates, v({1,3}) = (1 + 4/3)/(1/2 + 1) = 14/9
        // before (vertex 0 relays into the set at rate 1) and
        // (1 + (1/2)(8/7))/1 = 11/7 after (rate halved). The set's age rises
        // by 11/7 - 14/9 = 1/63.
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        let r = monotonicity_check(&g, GossipRates::unit(4)).unwrap();
        assert!(!r.holds);
        assert!(
            (r.worst_violation - 1.0 / 63.0).abs() < TIGHT,
            "worst {}",
            r.worst_violation
        );
        let ((u, v), s) = r.witness.unwrap();
        assert_eq!((u, v), (0, 2));
        assert_eq!(s.members(), &[1, 3]);
    }

    #[test]
    fn monotonicity_rejects_large_graphs() {
        let g = Graph::empty(13).unwrap();
        assert!(matches!(
            monotonicity_check(&g, GossipRates::unit(13)),
            Err(Error::TooLarge { .. })
        ));
    }

    /// The no-gossip value n * lambda_e / lambda caps every singleton age:
    /// a delivery or relay only ever replaces a counter with a fresher one,
    /// so any topology does at least as well as no edges at all. Checked
    /// over every labeled 4-vertex graph and the n <= 7 reference corpus.
    #[test]
    fn no_topology_beats_the_empty_graph_upper_end() {
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|u| ((u + 1)..4).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << 6) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let t = unit_table(&Graph::from_edges(4, &edges).unwrap());
            for v in 0..4 {
                let age = t.age_of_mask(1 << v).unwrap();
                assert!(
                    age <= 4.0 * (1.0 + TIGHT),
                    "mask {mask:#b} vertex {v}: {age}"
                );
            }
        }
        for (name, g) in reference_corpus(7) {
            let rates = GossipRates::new(2.0, 0.5, g.n()).unwrap();
            let t = solve_exact(&g, rates).unwrap();
            let cap = g.n() as f64 * rates.lambda_e / rates.lambda;
            for v in 0..g.n() {
                let age = t.age_of_mask(1 << v).unwrap();
                assert!(age <= cap * (1.0 + TIGHT), "{name} vertex {v}: {age}");
            }
        }
    }

    /// The complete graph does not minimize singleton ages: the path 1-2-3
    /// serves its center at 51/35 < 33/20 (both endpoints aim their whole
    /// rate at it), so the sandwich flag is false there. On K_3 and its
    /// complement both ends are attained and the flag is true.
    #[test]
    fn sandwich_flag_matches_hand_values() {
        let rates = GossipRates::unit(3);

        let t = unit_table(&Graph::complete(3).unwrap());
        assert!(singleton_sandwich_check(&t, rates).unwrap());
        let t = unit_table(&Graph::empty(3).unwrap());
        assert!(singleton_sandwich_check(&t, rates).unwrap());

        let t = unit_table(&Graph::path(3).unwrap());
        let center = t.age_of_mask(0b010).unwrap();
        assert!((center - 51.0 / 35.0).abs() < TIGHT);
        assert!(center < clique_age(3).unwrap()[0]);
        assert!(!singleton_sandwich_check(&t, rates).unwrap());

        // Tightness at both ends, n = 5.
        let t = unit_table(&Graph::complete(5).unwrap());
        let clique_u1 = clique_age(5).unwrap()[0];
        assert!((t.age_of_mask(1).unwrap() - clique_u1).abs() < TIGHT);
        let t = unit_table(&Graph::empty(5).unwrap());
        assert!((t.age_of_mask(1).unwrap() - 5.0).abs() < TIGHT);
    }

    #[test]
    fn csv_export_shape_and_values() {
        let t = unit_table(&Graph::complete(2).unwrap());
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "subset_bitmask,size,age");
        assert_eq!(lines.len(), 4); // header + 3 nonempty subsets
        assert_eq!(lines[1], "1,1,1.3333333333333333e0");
        assert_eq!(lines[3], "3,2,1.0000000000000000e0");
    }
}
