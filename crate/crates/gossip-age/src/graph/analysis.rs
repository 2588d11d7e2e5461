//! Structural probes: connectivity, edge boundaries, edge expansion.

use super::{Graph, VertexSet};
use crate::rng::rng_from_seed;
use crate::{Error, Result};
use rand::Rng;

/// Degree and connectivity summary from one BFS sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub isolated: usize,
    pub connected: bool,
    pub min_degree: usize,
    pub max_degree: usize,
    pub largest_component: usize,
}

pub fn structure_report(g: &Graph) -> StructureReport {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut largest = 0;
    let mut components = 0;
    let mut queue = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut size = 0;
        seen[start] = true;
        queue.push(start);
        while let Some(v) = queue.pop() {
            size += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        largest = largest.max(size);
    }
    StructureReport {
        isolated: (0..n).filter(|&v| g.degree(v) == 0).count(),
        connected: components == 1,
        min_degree: (0..n).map(|v| g.degree(v)).min().unwrap_or(0),
        max_degree: (0..n).map(|v| g.degree(v)).max().unwrap_or(0),
        largest_component: largest,
    }
}

/// Number of edges with exactly one endpoint in `s`.
///
/// `s` must be a nonempty subset of the vertices. By symmetry
/// `edge_boundary(g, s) == edge_boundary(g, complement(s))`.
pub fn edge_boundary(g: &Graph, s: &VertexSet) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::param("edge boundary of the empty set is undefined"));
    }
    if s.members().last().is_some_and(|&v| v >= g.n()) {
        return Err(Error::param("set contains a vertex outside the graph"));
    }
    let mut inside = vec![false; g.n()];
    for &v in s.members() {
        inside[v] = true;
    }
    let mut count = 0;
    for &v in s.members() {
        count += g.neighbors(v).iter().filter(|&&w| !inside[w]).count();
    }
    Ok(count)
}

/// Result of an edge-expansion scan: the minimizing subset and the value
/// `h = |boundary| / |witness|` kept as an exact integer ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionReport {
    pub boundary: usize,
    pub argmin_set: VertexSet,
    pub subsets_examined: u64,
}

impl ExpansionReport {
    /// Expansion value as a float; the exact ratio is
    /// `boundary / argmin_set.len()`.
    pub fn h(&self) -> f64 {
        self.boundary as f64 / self.argmin_set.len() as f64
    }
}

pub const MAX_CHEEGER_VERTICES: usize = 24;

/// Exact edge expansion `h(G) = min |boundary(S)| / |S|` over all nonempty
/// subsets with `|S| <= n/2`, by exhaustive enumeration (so `n <= 24`).
/// Ties keep the first witness in increasing-bitmask order.
pub fn cheeger_bruteforce(g: &Graph) -> Result<ExpansionReport> {
    let n = g.n();
    if n > MAX_CHEEGER_VERTICES {
        return Err(Error::TooLarge {
            what: "cheeger_bruteforce",
            limit: MAX_CHEEGER_VERTICES,
            got: n,
        });
    }
    if n < 2 {
        return Err(Error::param("edge expansion needs at least 2 vertices"));
    }
    let masks = g.adjacency_masks().expect("n <= 24 fits in u64 masks");
    let half = n / 2;
    let mut best: Option<(usize, usize, u64)> = None; // (boundary, size, mask)
    let mut examined = 0u64;
    for set in 1u64..(1 << n) {
        let size = set.count_ones() as usize;
        if size > half {
            continue;
        }
        examined += 1;
        let mut boundary = 0usize;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            boundary += (masks[v] & !set).count_ones() as usize;
        }
        // Strict cross-multiplied comparison keeps the first minimizer.
        let better = match best {
            None => true,
            Some((bb, bs, _)) => boundary * bs < bb * size,
        };
        if better {
            best = Some((boundary, size, set));
        }
    }
    let (boundary, _, mask) = best.expect("n >= 2 guarantees a candidate subset");
    Ok(ExpansionReport {
        boundary,
        argmin_set: VertexSet::from_mask(mask),
        subsets_examined: examined,
    })
}

/// Expansion probe for graphs beyond exhaustive range: minimizes
/// `|boundary(S)| / |S|` over `trials` sampled subsets (size uniform in
/// `1..=n/2`, subset uniform at that size). The result upper-bounds `h(G)`.
pub fn cheeger_sampled(g: &Graph, trials: usize, seed: u64) -> Result<ExpansionReport> {
    let n = g.n();
    if n < 2 {
        return Err(Error::param("edge expansion needs at least 2 vertices"));
    }
    if trials == 0 {
        return Err(Error::param("need at least one trial"));
    }
    let mut rng = rng_from_seed(seed);
    let mut pool: Vec<usize> = (0..n).collect();
    let mut best: Option<(usize, VertexSet)> = None;
    for _ in 0..trials {
        let k = rng.random_range(1..=n / 2);
        partial_shuffle(&mut pool, k, &mut rng);
        let s = VertexSet::new(pool[..k].to_vec());
        let boundary = edge_boundary(g, &s)?;
        let better = match &best {
            None => true,
            Some((bb, bs)) => boundary * bs.len() < bb * s.len(),
        };
        if better {
            best = Some((boundary, s));
        }
    }
    let (boundary, argmin_set) = best.unwrap();
    Ok(ExpansionReport {
        boundary,
        argmin_set,
        subsets_examined: trials as u64,
    })
}

/// Outcome of sampling edge boundaries against their `G(n,p)` expectation.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcentrationReport {
    pub trials: usize,
    pub inside: usize,
    /// Fraction of sampled subsets with `|boundary|` within
    /// `(1 +- delta) * k(n-k)p`.
    pub fraction: f64,
}

/// Samples `trials` random subsets (size uniform in `1..=n/2`, subset uniform
/// at that size) and reports how many have edge boundary within the
/// multiplicative `delta`-band around the expectation `k(n-k)p`.
///
/// When the expectation is zero (`p = 0`) the band degenerates to the exact
/// requirement `|boundary| = 0`.
pub fn boundary_concentration_check(
    g: &Graph,
    p: f64,
    delta: f64,
    trials: usize,
    seed: u64,
) -> Result<ConcentrationReport> {
    let n = g.n();
    if n < 2 {
        return Err(Error::param("need at least 2 vertices"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::param(format!("p must lie in [0, 1], got {p}")));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::param(format!(
            "delta must lie in (0, 1), got {delta}"
        )));
    }
    if trials == 0 {
        return Err(Error::param("need at least one trial"));
    }
    let mut rng = rng_from_seed(seed);
    let mut pool: Vec<usize> = (0..n).collect();
    let mut inside = 0usize;
    for _ in 0..trials {
        let k = rng.random_range(1..=n / 2);
        partial_shuffle(&mut pool, k, &mut rng);
        let s = VertexSet::new(pool[..k].to_vec());
        let boundary = edge_boundary(g, &s)? as f64;
        let expected = (k * (n - k)) as f64 * p;
        let ok = if expected == 0.0 {
            boundary == 0.0
        } else {
            (boundary - expected).abs() <= delta * expected
        };
        inside += ok as usize;
    }
    Ok(ConcentrationReport {
        trials,
        inside,
        fraction: inside as f64 / trials as f64,
    })
}

/// First `k` entries of `pool` become a uniform random `k`-subset.
fn partial_shuffle<R: Rng>(pool: &mut [usize], k: usize, rng: &mut R) {
    let n = pool.len();
    for i in 0..k {
        let j = rng.random_range(i..n);
        pool.swap(i, j);
    }
}
