//! Poisson rate parameters of the gossip model.

use crate::{Error, Result};

/// Rates of the gossip process on `n` nodes.
///
/// The source refreshes its own version at rate `lambda_e` and delivers the
/// current version to each node as an independent Poisson process of rate
/// `lambda / n` (total delivery rate `lambda`). A node `i` with `deg(i) > 0`
/// relays to each neighbor at rate `lambda / deg(i)`, so each non-isolated
/// node gossips at total rate `lambda`; isolated nodes do not gossip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GossipRates {
    pub lambda_e: f64,
    pub lambda: f64,
    pub n: usize,
}

impl GossipRates {
    pub fn new(lambda_e: f64, lambda: f64, n: usize) -> Result<Self> {
        if !(lambda_e.is_finite() && lambda_e > 0.0) {
            return Err(Error::param(format!(
                "lambda_e must be positive, got {lambda_e}"
            )));
        }
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::param(format!(
                "lambda must be positive, got {lambda}"
            )));
        }
        if n == 0 {
            return Err(Error::param("network size must be at least 1"));
        }
        Ok(GossipRates {
            lambda_e,
            lambda,
            n,
        })
    }

    /// Unit rates `lambda_e = lambda = 1`, the normalization in which the
    /// full-network age is exactly 1.
    pub fn unit(n: usize) -> Self {
        GossipRates {
            lambda_e: 1.0,
            lambda: 1.0,
            n,
        }
    }

    /// Source-to-set delivery rate `lambda * |S| / n`.
    pub(crate) fn source_set_rate(&self, set_size: usize) -> f64 {
        self.lambda * set_size as f64 / self.n as f64
    }
}
