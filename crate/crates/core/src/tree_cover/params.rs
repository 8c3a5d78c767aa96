use crate::error::{Error, Result};

/// Largest micro parameter; micro trees then have at most 59 nodes, so their
/// keys fit in 128 bits.
pub const MAX_MICRO_B: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverParams {
    pub micro_b: usize,
    pub mini_b: usize,
}

fn lg(n: usize) -> f64 {
    (n as f64 + 2.0).log2()
}

impl CoverParams {
    /// `micro_b = max(1, ⌈lg(n+2)/8⌉)`, `mini_b = max(micro_b, ⌈lg²(n+2)⌉)`.
    pub fn for_size(n: usize) -> Self {
        let micro_b = ((lg(n) / 8.0).ceil() as usize).clamp(1, MAX_MICRO_B);
        let mini_b = micro_b.max((lg(n) * lg(n)).ceil() as usize);
        Self { micro_b, mini_b }
    }

    /// Defaults for `n`, with either parameter overridden.
    pub fn with_overrides(n: usize, micro_b: Option<usize>, mini_b: Option<usize>) -> Result<Self> {
        let d = Self::for_size(n);
        let micro_b = micro_b.unwrap_or(d.micro_b);
        let p = Self {
            micro_b,
            mini_b: mini_b.unwrap_or(d.mini_b.max(micro_b)),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=MAX_MICRO_B).contains(&self.micro_b) {
            return Err(Error::Param(format!("micro_b = {} must lie in 1..={MAX_MICRO_B}", self.micro_b)));
        }
        if self.mini_b < self.micro_b {
            return Err(Error::Param(format!("mini_b = {} is below micro_b = {}", self.mini_b, self.micro_b)));
        }
        Ok(())
    }

    /// Most nodes a micro tree can have.
    pub fn max_micro_nodes(&self) -> usize {
        2 * self.micro_b - 1
    }
}
