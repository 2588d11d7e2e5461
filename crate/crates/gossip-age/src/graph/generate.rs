//! Random graph models.

use super::Graph;
use crate::rng::rng_from_seed;
use crate::{Error, Result};
use rand::seq::SliceRandom;
use rand::Rng;

/// Erdos-Renyi `G(n, p)`: each of the `n(n-1)/2` pairs is an edge
/// independently with probability `p`.
///
/// Pairs are enumerated lexicographically and sampled by geometric skipping,
/// so the cost is `O(n + m)` rather than `O(n^2)`; the output is a
/// deterministic function of `(n, p, seed)`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::param("n must be at least 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::param(format!("p must lie in [0, 1], got {p}")));
    }
    if p == 1.0 {
        return Graph::complete(n);
    }
    let mut g = Graph::empty(n)?;
    if p == 0.0 || n == 1 {
        return Ok(g);
    }

    let mut rng = rng_from_seed(seed);
    let ln_q = (1.0 - p).ln(); // < 0
                               // Walk the pair stream (0,1), (0,2), .., (0,n-1), (1,2), .. by geometric
                               // skips: each skip length is the number of non-edges before the next edge.
    let mut row = 0usize;
    let mut col = 0usize; // last visited column in `row`; col == row means "row start"
    let mut edges: Vec<(usize, usize)> = Vec::new();
    'walk: loop {
        let u: f64 = rng.random();
        // Skip s pairs, then take the next one; saturating cast handles huge skips.
        let s = ((1.0 - u).ln() / ln_q).floor();
        let mut remaining = if s >= u64::MAX as f64 {
            u64::MAX
        } else {
            s as u64 + 1
        };
        loop {
            let row_left = (n - 1 - col) as u64;
            if remaining <= row_left {
                col += remaining as usize;
                break;
            }
            remaining -= row_left;
            row += 1;
            col = row;
            if row >= n - 1 {
                break 'walk;
            }
        }
        edges.push((row, col));
    }

    for &(u, v) in &edges {
        g.adj[u].push(v);
        g.adj[v].push(u);
    }
    for list in &mut g.adj {
        list.sort_unstable();
    }
    g.m = edges.len();
    Ok(g)
}

const MAX_PAIRING_ATTEMPTS: usize = 1_000_000;

/// Uniform random simple `d`-regular graph via the pairing (configuration)
/// model: `d` stubs per vertex are matched uniformly at random and the whole
/// matching is discarded and retried whenever it contains a self-loop or a
/// repeated edge. Conditioned on acceptance the simple graph is uniform.
///
/// Rejection odds grow roughly like `exp(d^2/4)`, so this is practical for
/// small constant degrees; the attempt cap turns pathological parameters into
/// an error instead of a hang.
pub fn gen_random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::param("n must be at least 1"));
    }
    if d >= n {
        return Err(Error::param(format!(
            "degree {d} needs at least {} vertices",
            d + 1
        )));
    }
    if (n * d) % 2 != 0 {
        return Err(Error::param(format!(
            "n*d must be even, got n = {n}, d = {d}"
        )));
    }
    if d == 0 {
        return Graph::empty(n);
    }

    let mut rng = rng_from_seed(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(n * d / 2);
    for _ in 0..MAX_PAIRING_ATTEMPTS {
        stubs.shuffle(&mut rng);
        pairs.clear();
        let mut simple = true;
        for chunk in stubs.chunks_exact(2) {
            let (a, b) = (chunk[0], chunk[1]);
            if a == b {
                simple = false;
                break;
            }
            pairs.push((a.min(b), a.max(b)));
        }
        if !simple {
            continue;
        }
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        return Graph::from_edges(n, &pairs);
    }
    Err(Error::param(format!(
        "no simple {d}-regular pairing found in {MAX_PAIRING_ATTEMPTS} attempts"
    )))
}
