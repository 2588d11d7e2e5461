//! Closed-form evaluators for the analytic age bounds and random-graph
//! expectations that the experiment suite compares against.
//!
//! Everything here is a pure formula; nothing solves a graph. The bounds
//! come in pairs where a raw form and a relaxed closed form coexist
//! ([`dreg_bound_sums`]) or where a finite sum has a digamma companion
//! ([`gnp_singleton_bound`]); the pairs are kept together because their
//! agreement is a cheap correctness check on both.

use crate::export::float17;
use crate::graph::gen_gnp;
use crate::rng::derive_seed;
use crate::{Error, Result};
use std::f64::consts::PI;

/// Euler-Mascheroni constant, -psi(1).
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Inputs with |x| beyond this are outside the digamma accuracy contract.
pub const DIGAMMA_RANGE: f64 = 1e6;

/// One evaluated bound, ready for CSV export.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    /// Which formula produced the value, e.g. `bipartite_log`.
    pub formula_id: String,
    pub n: usize,
    /// Remaining inputs as `key=value` pairs joined with `;`.
    pub params: String,
    pub value: f64,
}

/// Renders bound reports as `formula_id,n,params,value` CSV.
pub fn bound_reports_csv(reports: &[BoundReport]) -> String {
    let mut out = String::from("formula_id,n,params,value\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.formula_id,
            r.n,
            r.params,
            float17(r.value)
        ));
    }
    out
}

/// Upper bound `min(R ln L, L ln R)` on the normalized age u(1,1) of a
/// complete bipartite network with one informed vertex per side.
///
/// The underlying recursion telescopes to `R*H_{L-1} + u(L,1)`; collapsing
/// the harmonic number to `ln L` and dropping the trailing term costs
/// nothing asymptotically but makes the smallest corner too tight: at
/// L = R = 2 the true u(1,1) = 10/7 sits 0.0423 above 2 ln 2. Every other
/// side pair from 2 through 64 is dominated with growing margin.
pub fn bipartite_log_bound(l: usize, r: usize) -> Result<f64> {
    if l < 2 || r < 2 {
        return Err(Error::param(format!(
            "bipartite_log_bound needs both sides >= 2, got ({l}, {r})"
        )));
    }
    let (lf, rf) = (l as f64, r as f64);
    Ok((rf * lf.ln()).min(lf * rf.ln()))
}

/// Raw and relaxed forms of the worst-vertex age bound on an expander with
/// edge expansion at least `c_d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DregBounds {
    /// Telescoping product-sum form, the sharper of the two.
    pub raw: f64,
    /// Harmonic relaxation `(lambda_e/(c_d lambda)) (1 + sum 1/(i+1))`.
    pub harmonic: f64,
}

/// Evaluates both forms of the expansion-based age bound for a d-regular
/// network on `n` vertices whose every small subset has edge expansion at
/// least `c_d`. The degree `d` itself cancels out of the sums (each vertex
/// splits rate `lambda` over `d` neighbors while the boundary supplies
/// `c_d * d * |S|` edges); it is kept as an input because `c_d` is only
/// meaningful for a stated degree.
pub fn dreg_bound_sums(
    n: usize,
    d: usize,
    c_d: f64,
    lambda_e: f64,
    lambda: f64,
) -> Result<DregBounds> {
    if n < 2 {
        return Err(Error::param(format!("need n >= 2, got {n}")));
    }
    if d == 0 || d >= n {
        return Err(Error::param(format!(
            "degree must be in 1..n = 1..{n}, got {d}"
        )));
    }
    if !(c_d > 0.0 && c_d < 0.5) {
        return Err(Error::param(format!(
            "expansion constant must lie in (0, 1/2), got {c_d}"
        )));
    }
    if !(lambda_e > 0.0 && lambda > 0.0) || !lambda_e.is_finite() || !lambda.is_finite() {
        return Err(Error::param("rates must be positive and finite"));
    }
    let nf = n as f64;
    let half = n / 2;

    // Each summand is the product over j = 1..=i of the per-step
    // contraction; the running product makes the whole sum O(n/2).
    let mut raw_sum = 1.0;
    let mut prod = 1.0;
    for j in 1..=half {
        let jf = j as f64;
        prod *= c_d * jf / ((jf + 1.0) / nf + c_d * (jf + 1.0));
        raw_sum += prod;
    }
    let raw = (lambda_e / lambda) / (c_d + 1.0 / nf) * raw_sum;

    let mut tail = 1.0;
    for i in 1..=half {
        tail += 1.0 / (i as f64 + 1.0);
    }
    let harmonic = lambda_e / (c_d * lambda) * tail;

    Ok(DregBounds { raw, harmonic })
}

/// Digamma function psi(x), accurate to 1e-10 absolute for
/// |x| <= [`DIGAMMA_RANGE`] away from the poles at non-positive integers.
/// Inputs very close to a pole are limited by the conditioning of
/// pi*cot(pi*x) itself.
///
/// Method: reflect x < 1/2 through psi(x) = psi(1-x) - pi*cot(pi*x) with
/// the cotangent argument reduced to (-1/2, 1/2] exactly (the subtraction
/// x - round(x) is exact in doubles), then shift to x >= 10 by the
/// recurrence and finish with the asymptotic series through the 1/x^12
/// term, whose truncation error at 10 is below 1e-15.
pub fn digamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x.abs() > DIGAMMA_RANGE {
        return Err(Error::param(format!(
            "digamma argument must be finite with |x| <= {DIGAMMA_RANGE:e}, got {x}"
        )));
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::param(format!("digamma pole at {x}")));
    }
    if x < 0.5 {
        let r = x - x.round();
        let (sin, cos) = (PI * r).sin_cos();
        Ok(digamma_right_half(1.0 - x) - PI * cos / sin)
    } else {
        Ok(digamma_right_half(x))
    }
}

/// psi on [1/2, inf): recurrence shift to >= 10, then the Bernoulli tail.
fn digamma_right_half(mut x: f64) -> f64 {
    debug_assert!(x >= 0.5);
    let mut acc = 0.0;
    while x < 10.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let series = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2
                        * (1.0 / 252.0
                            - inv2
                                * (1.0 / 240.0
                                    - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0))))));
    acc + x.ln() - 0.5 * inv - series
}

/// Logarithmic-shape upper bound on the normalized singleton age in a dense
/// random network: the direct sum `3n * sum_{i=1}^{n} 1/(i(n-i+1/3))`.
///
/// The value is cross-checked against its exact digamma closed form (see
/// [`gnp_singleton_bound_digamma_form`]) whenever that form is in range;
/// disagreement would mean a broken evaluator and reports as an error.
pub fn gnp_singleton_bound(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::param(format!("need n >= 2, got {n}")));
    }
    let nf = n as f64;
    // Summed from i = n down so the large 1/(n * 1/3) end joins last.
    let mut sum = 0.0;
    for i in (1..=n).rev() {
        let fi = i as f64;
        sum += 1.0 / (fi * (nf - fi + 1.0 / 3.0));
    }
    let direct = 3.0 * nf * sum;
    if nf + 4.0 / 3.0 <= DIGAMMA_RANGE {
        let closed = gnp_singleton_bound_digamma_form(n)?;
        let rel = (direct - closed).abs() / direct.max(1.0);
        if rel > 1e-8 {
            return Err(Error::param(format!(
                "digamma cross-check failed at n = {n}: direct {direct}, closed {closed}"
            )));
        }
    }
    Ok(direct)
}

/// Exact digamma closed form of [`gnp_singleton_bound`]'s direct sum.
///
/// Partial fractions turn the sum over 1..=n into a difference of two
/// infinite series, each a digamma value by `psi(1+z) = -gamma +
/// sum z/(k(k+z))`; with a = n + 1/3 the result collapses to
///
/// ```text
/// (3n/a) * (psi(1-a) + psi(n+1) + gamma - psi(2/3))
/// ```
///
/// which matches the direct sum exactly, not just asymptotically (checked
/// by hand at n = 2 where both sides are 27/2).
pub fn gnp_singleton_bound_digamma_form(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::param(format!("need n >= 2, got {n}")));
    }
    let nf = n as f64;
    let a = nf + 1.0 / 3.0;
    let reflected = digamma(1.0 - a)?;
    let shifted = digamma(nf + 1.0)?;
    let third = digamma(2.0 / 3.0)?;
    Ok(3.0 * nf / a * (reflected + shifted + EULER_GAMMA - third))
}

/// Expected number of isolated vertices in G(n, p): `n (1-p)^(n-1)`.
/// Exact at every scale, unlike the exponential approximation
/// `n exp(-p(n-1))` that is only asymptotic.
pub fn isolated_expectation(n: usize, p: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::param("need n >= 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::param(format!("probability out of range: {p}")));
    }
    Ok(n as f64 * (1.0 - p).powi(n as i32 - 1))
}

/// Monte Carlo check of isolated-vertex concentration at the sparse
/// connectivity scale p = d ln(n)/n.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcentrationSummary {
    pub samples: usize,
    /// Mean isolated-vertex count across samples.
    pub empirical_mean: f64,
    /// Exact expectation `n (1-p)^(n-1)`.
    pub mu: f64,
    /// Half-width `n^d` of the concentration band around `mu`.
    pub band_halfwidth: f64,
    /// Fraction of samples with |count - mu| <= band_halfwidth.
    pub inside_fraction: f64,
    /// Standard error of the empirical mean.
    pub std_error: f64,
}

/// Samples G(n, p) at p = d ln(n)/n and compares the isolated-vertex count
/// against its exact expectation and the band `mu +/- n^d`. The exponent
/// must lie strictly inside (1/2, 1): at d = 1 isolated vertices vanish and
/// the band statement degenerates.
pub fn isolated_concentration(
    n: usize,
    d_exponent: f64,
    samples: usize,
    seed: u64,
) -> Result<ConcentrationSummary> {
    if n < 2 {
        return Err(Error::param(format!("need n >= 2, got {n}")));
    }
    if !(d_exponent > 0.5 && d_exponent < 1.0) {
        return Err(Error::param(format!(
            "exponent must lie strictly in (1/2, 1), got {d_exponent}"
        )));
    }
    if samples == 0 {
        return Err(Error::param("need at least one sample"));
    }
    let nf = n as f64;
    let p = d_exponent * nf.ln() / nf;
    if p >= 1.0 {
        return Err(Error::param(format!(
            "p = d ln(n)/n = {p} is not a probability at n = {n}"
        )));
    }
    let mu = isolated_expectation(n, p)?;
    let band = nf.powf(d_exponent);

    let mut counts = Vec::with_capacity(samples);
    for i in 0..samples {
        let g = gen_gnp(n, p, derive_seed(seed, i as u64))?;
        counts.push((0..n).filter(|&v| g.degree(v) == 0).count());
    }
    let mean = counts.iter().sum::<usize>() as f64 / samples as f64;
    let inside = counts
        .iter()
        .filter(|&&c| (c as f64 - mu).abs() <= band)
        .count();
    let var = if samples > 1 {
        counts
            .iter()
            .map(|&c| (c as f64 - mean).powi(2))
            .sum::<f64>()
            / (samples - 1) as f64
    } else {
        0.0
    };
    Ok(ConcentrationSummary {
        samples,
        empirical_mean: mean,
        mu,
        band_halfwidth: band,
        inside_fraction: inside as f64 / samples as f64,
        std_error: (var / samples as f64).sqrt(),
    })
}

/// Tail probability bound `3 exp(-delta^2 k(n-k) p / 8)` for the edge
/// boundary of a size-k subset missing its expectation by a `delta`
/// fraction. `p` enters as a rate parameter of the formula and may exceed
/// 1 (the interesting corner pushes `p` past the connectivity scale).
pub fn chernoff_tail(k: usize, n: usize, p: f64, delta: f64) -> Result<f64> {
    if k == 0 || 2 * k > n {
        return Err(Error::param(format!(
            "subset size must lie in 1..=n/2 = 1..={}, got {k}",
            n / 2
        )));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::param(format!(
            "deviation fraction must lie in (0, 1), got {delta}"
        )));
    }
    if !(p >= 0.0) || !p.is_finite() {
        return Err(Error::param(format!(
            "rate parameter must be >= 0, got {p}"
        )));
    }
    let alpha_sq = delta * delta * k as f64 * (n - k) as f64 * p;
    Ok(3.0 * (-alpha_sq / 8.0).exp())
}

/// Union of [`chernoff_tail`] over every subset size up to n/2 with
/// binomial multiplicity: `3 sum_k C(n,k) exp(-delta^2 k(n-k) p / 8)`.
/// Binomials are accumulated in log space so n in the thousands is fine.
pub fn chernoff_union_bound(n: usize, p: f64, delta: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::param(format!("need n >= 2, got {n}")));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::param(format!(
            "deviation fraction must lie in (0, 1), got {delta}"
        )));
    }
    if !(p >= 0.0) || !p.is_finite() {
        return Err(Error::param(format!(
            "rate parameter must be >= 0, got {p}"
        )));
    }
    let mut ln_choose = 0.0;
    let mut total = 0.0;
    for k in 1..=(n / 2) {
        ln_choose += ((n - k + 1) as f64 / k as f64).ln();
        let exponent = ln_choose - delta * delta * k as f64 * (n - k) as f64 * p / 8.0;
        total += exponent.exp();
    }
    Ok(3.0 * total)
}
