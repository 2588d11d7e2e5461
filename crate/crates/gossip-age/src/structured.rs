//! Collapsed age recursions for symmetric graphs.
//!
//! On a complete bipartite graph `K_{L,R}` the age of a subset depends only
//! on how many members it has on each side, so the `2^n` subset lattice
//! collapses to an `(L+1) x (R+1)` grid. On a clique it collapses further to
//! a single chain over subset sizes, and on the empty graph it is closed
//! form. All values here are normalized ages `u = v * lambda / lambda_e`,
//! so the full set always has `u = 1`.

use crate::export::float17;
use crate::{Error, Result};
use std::io::Write;

/// Normalized ages `u(i, j)` for subsets of `K_{L,R}` with `i` members on
/// the left side and `j` on the right. `(0, 0)` is the empty set and has no
/// age; every other entry with `i <= L`, `j <= R` is defined.
#[derive(Debug, Clone)]
pub struct BipartiteAgeGrid {
    left: usize,
    right: usize,
    u: Vec<f64>, // row-major (L+1) x (R+1); [0] unused
}

impl BipartiteAgeGrid {
    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    /// Total vertex count `L + R`.
    pub fn n(&self) -> usize {
        self.left + self.right
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.right + 1) + j
    }

    /// Age at `(i, j)`; panics on `(0, 0)` or out-of-range coordinates.
    pub fn u(&self, i: usize, j: usize) -> f64 {
        self.get(i, j).unwrap_or_else(|| {
            panic!(
                "u({i}, {j}) is undefined on a {}x{} grid",
                self.left, self.right
            )
        })
    }

    /// Age at `(i, j)`, or `None` for `(0, 0)` / out-of-range coordinates.
    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        if i > self.left || j > self.right || (i == 0 && j == 0) {
            return None;
        }
        Some(self.u[self.idx(i, j)])
    }

    /// Grid export: header `i,j,u`, defined entries in row-major order.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> Result<()> {
        writeln!(w, "i,j,u")?;
        for i in 0..=self.left {
            for j in 0..=self.right {
                if i == 0 && j == 0 {
                    continue;
                }
                writeln!(w, "{i},{j},{}", float17(self.u[self.idx(i, j)]))?;
            }
        }
        Ok(())
    }

    /// One summary row of the sweep export (see [`write_sweep_csv`]).
    pub fn sweep_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n(),
            self.left,
            self.right,
            float17(self.u(0, 1)),
            float17(self.u(1, 1)),
            float17(self.u(1, 0)),
        )
    }
}

/// Sweep export for a list of grids: header `n,L,R,u01,u11,u10`, one row per
/// grid in input order.
pub fn write_sweep_csv<W: Write>(grids: &[BipartiteAgeGrid], w: &mut W) -> Result<()> {
    writeln!(w, "n,L,R,u01,u11,u10")?;
    for g in grids {
        writeln!(w, "{}", g.sweep_row())?;
    }
    Ok(())
}

/// Fills the `K_{L,R}` grid by the two-index recursion
///
/// ```text
/// u(i,j) = (1 + a * u(i+1, j) + b * u(i, j+1)) / ((i+j)/n + a + b)
///   with a = (L - i) * j / R,  b = (R - j) * i / L,  n = L + R,
/// ```
///
/// anchored at `u(L, R) = 1` and evaluated in decreasing `i + j` order.
/// Coefficients vanish exactly at the boundary, so no out-of-range entry is
/// ever read and `(0, 0)` is never produced.
pub fn bipartite_grid(l: usize, r: usize) -> Result<BipartiteAgeGrid> {
    if l == 0 || r == 0 {
        return Err(Error::param("both sides must be nonempty"));
    }
    let n = (l + r) as f64;
    let mut grid = BipartiteAgeGrid {
        left: l,
        right: r,
        u: vec![f64::NAN; (l + 1) * (r + 1)],
    };
    let base = grid.idx(l, r);
    grid.u[base] = 1.0;
    for s in (1..(l + r)).rev() {
        for i in s.saturating_sub(r)..=l.min(s) {
            let j = s - i;
            if i == l && j == r {
                continue;
            }
            let a = ((l - i) * j) as f64 / r as f64;
            let b = ((r - j) * i) as f64 / l as f64;
            let mut num = 1.0;
            if a > 0.0 {
                num += a * grid.u[grid.idx(i + 1, j)];
            }
            if b > 0.0 {
                num += b * grid.u[grid.idx(i, j + 1)];
            }
            let den = (i + j) as f64 / n + a + b;
            let idx = grid.idx(i, j);
            grid.u[idx] = num / den;
        }
    }
    Ok(grid)
}

/// Normalized clique ages by subset size: entry `j - 1` is `u(j)` for
/// `1 <= j <= n`, from the chain
///
/// ```text
/// u(j) = (1 + (n-j) * (j/(n-1)) * u(j+1)) / (j/n + (n-j) * j/(n-1))
/// ```
///
/// anchored at `u(n) = 1`. Strictly decreasing in `j` for `n >= 2`.
pub fn clique_age(n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::param("clique needs at least one vertex"));
    }
    let mut u = vec![1.0; n];
    let nf = n as f64;
    for j in (1..n).rev() {
        let jf = j as f64;
        let relay = (n - j) as f64 * jf / (nf - 1.0);
        u[j - 1] = (1.0 + relay * u[j]) / (jf / nf + relay);
    }
    Ok(u)
}

/// Closed-form normalized age on the edgeless graph: `u(S) = n / |S|`.
pub fn empty_graph_age(n: usize, set_size: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::param("graph needs at least one vertex"));
    }
    if set_size == 0 || set_size > n {
        return Err(Error::param(format!(
            "set size must lie in 1..={n}, got {set_size}"
        )));
    }
    Ok(n as f64 / set_size as f64)
}

/// Fixed-split comparison: the `(1,2)` and `(2,1)` corner ages of
/// `K_{floor(c*n), n - floor(c*n)}` against the same split at `2n`.
/// Growing the network can only increase these ages.
#[derive(Debug, Clone, Copy)]
pub struct DoublingComparison {
    pub base_12: f64,
    pub doubled_12: f64,
    pub base_21: f64,
    pub doubled_21: f64,
}

impl DoublingComparison {
    /// True when both corners are monotone under doubling.
    pub fn holds(&self) -> bool {
        self.base_12 <= self.doubled_12 && self.base_21 <= self.doubled_21
    }
}

/// Evaluates [`DoublingComparison`] for split fraction `c` in `(0, 1)` at sizes
/// `n` (even) and `2n`. Non-integral `c * n` is floored; both sides of both
/// graphs must keep at least 2 vertices.
pub fn doubling_monotonicity_check(c: f64, n: usize) -> Result<DoublingComparison> {
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::param(format!(
            "split fraction must lie in (0, 1), got {c}"
        )));
    }
    if n % 2 != 0 {
        return Err(Error::param(format!("n must be even, got {n}")));
    }
    let split = |total: usize| -> Result<(usize, usize)> {
        let l = (c * total as f64).floor() as usize;
        let r = total - l;
        if l < 2 || r < 2 {
            return Err(Error::param(format!(
                "degenerate sizes: c = {c}, total = {total} gives ({l}, {r})"
            )));
        }
        Ok((l, r))
    };
    let (l1, r1) = split(n)?;
    let (l2, r2) = split(2 * n)?;
    let small = bipartite_grid(l1, r1)?;
    let large = bipartite_grid(l2, r2)?;
    Ok(DoublingComparison {
        base_12: small.u(1, 2),
        doubled_12: large.u(1, 2),
        base_21: small.u(2, 1),
        doubled_21: large.u(2, 1),
    })
}
