//! Shannon entropy of vertex partitions, size-weighted means, the min/max
//! bounds for a given core size, and the refinement inequality.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::cdp::CoreDistancePartition;
use crate::error::{Error, Result};
use crate::graph::{check_partition, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LogBase {
    Two,
    #[default]
    E,
    Ten,
}

impl LogBase {
    pub fn log(self, x: f64) -> f64 {
        match self {
            LogBase::Two => x.log2(),
            LogBase::E => x.ln(),
            LogBase::Ten => x.log10(),
        }
    }

    /// `ln(base)`.
    pub fn ln_base(self) -> f64 {
        match self {
            LogBase::Two => std::f64::consts::LN_2,
            LogBase::E => 1.0,
            LogBase::Ten => std::f64::consts::LN_10,
        }
    }
}

impl fmt::Display for LogBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LogBase::Two => "2",
            LogBase::E => "e",
            LogBase::Ten => "10",
        })
    }
}

impl FromStr for LogBase {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "2" => Ok(LogBase::Two),
            "e" => Ok(LogBase::E),
            "10" => Ok(LogBase::Ten),
            other => Err(format!("unsupported log base `{other}` (expected 2, e or 10)")),
        }
    }
}

impl Serialize for LogBase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `-p log p` for `p = count / n`, with `0 log 0 = 0`.
fn plogp(count: usize, n: usize, base: LogBase) -> f64 {
    if count == 0 || count == n {
        return 0.0;
    }
    let p = count as f64 / n as f64;
    -p * base.log(p)
}

/// Entropy of the distribution `sizes[i] / n`, where `n = Σ sizes`.
pub fn entropy_of_sizes(sizes: &[usize], base: LogBase) -> f64 {
    let n: usize = sizes.iter().sum();
    sizes.iter().map(|&s| plogp(s, n, base)).sum()
}

/// Shannon entropy of the block-size distribution of a partition of
/// `{1..n}`.
pub fn partition_entropy(blocks: &[VertexSet], n: usize, base: LogBase) -> Result<f64> {
    check_partition(blocks, n)?;
    Ok(entropy_of_sizes(&sizes(blocks), base))
}

fn sizes(blocks: &[VertexSet]) -> Vec<usize> {
    blocks.iter().map(VertexSet::len).collect()
}

/// Mean of per-block values weighted by block size.
pub fn weighted_mean(p: &CoreDistancePartition, values: &[f64]) -> Result<f64> {
    weighted_mean_of_sizes(&p.block_sizes(), values)
}

pub fn weighted_mean_of_sizes(sizes: &[usize], values: &[f64]) -> Result<f64> {
    if sizes.len() != values.len() {
        return Err(Error::LengthMismatch { expected: sizes.len(), got: values.len() });
    }
    let n: usize = sizes.iter().sum();
    Ok(sizes.iter().zip(values).map(|(&s, x)| s as f64 * x).sum::<f64>() / n as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyBounds {
    pub lower: f64,
    pub upper: f64,
}

impl EntropyBounds {
    pub fn contains(&self, value: f64, slack: f64) -> bool {
        self.lower - slack <= value && value <= self.upper + slack
    }
}

/// Range of partition entropies for a core of `k` vertices out of `n`.
///
/// The lower bound is reached by a two-block partition (core and the rest),
/// the upper bound by the core plus `n - k` singletons.
pub fn entropy_bounds(n: usize, k: usize, base: LogBase) -> Result<EntropyBounds> {
    if k == 0 || k > n {
        return Err(Error::CoreSizeOutOfRange { k, n });
    }
    let core_term = plogp(k, n, base);
    let lower = if k == n { 0.0 } else { core_term + plogp(n - k, n, base) };
    let upper = core_term + (n - k) as f64 * plogp(1, n, base);
    Ok(EntropyBounds { lower, upper })
}

/// Entropy value together with the data it came from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropyReport {
    pub value: f64,
    pub base: LogBase,
    pub n: usize,
    /// Numerators of the block probabilities `size / n`.
    pub block_sizes: Vec<usize>,
    /// Core size, when the partition is a core distance partition.
    pub core_size: Option<usize>,
    pub bounds: Option<EntropyBounds>,
}

impl EntropyReport {
    pub fn for_cdp(p: &CoreDistancePartition, base: LogBase) -> Result<Self> {
        let n = p.order();
        let value = partition_entropy(&p.blocks, n, base)?;
        let k = p.core().len();
        Ok(EntropyReport {
            value,
            base,
            n,
            block_sizes: p.block_sizes(),
            core_size: Some(k),
            bounds: Some(entropy_bounds(n, k, base)?),
        })
    }

    /// Entropy of an arbitrary partition, e.g. the orbit partition.
    pub fn for_partition(blocks: &[VertexSet], n: usize, base: LogBase) -> Result<Self> {
        Ok(EntropyReport {
            value: partition_entropy(blocks, n, base)?,
            base,
            n,
            block_sizes: sizes(blocks),
            core_size: None,
            bounds: None,
        })
    }

    pub fn distribution(&self) -> Vec<f64> {
        self.block_sizes.iter().map(|&s| s as f64 / self.n as f64).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RefinementInequality {
    /// Entropy of the finer partition.
    pub lhs: f64,
    /// `I + W({log k_i})` for the coarser partition.
    pub rhs: f64,
    /// Number of finer blocks inside each coarse block.
    pub k_values: Vec<usize>,
    pub holds: bool,
}

pub fn refinement_inequality(
    p: &CoreDistancePartition,
    finer: &[VertexSet],
    base: LogBase,
) -> Result<RefinementInequality> {
    refinement_inequality_for(&p.blocks, finer, base)
}

/// Checks `H(finer) ≤ H(coarse) + W({log k_i})` where every finer block lies
/// in one coarse block and coarse block `i` contains `k_i` finer blocks.
pub fn refinement_inequality_for(
    coarse: &[VertexSet],
    finer: &[VertexSet],
    base: LogBase,
) -> Result<RefinementInequality> {
    let n: usize = coarse.iter().map(VertexSet::len).sum();
    check_partition(coarse, n)?;
    check_partition(finer, n)?;
    let mut k_values = vec![0; coarse.len()];
    for block in finer {
        let parent = coarse
            .iter()
            .position(|c| block.is_subset(c))
            .ok_or_else(|| Error::NotARefinement(format!("block {block} straddles coarse blocks")))?;
        k_values[parent] += 1;
    }
    let lhs = entropy_of_sizes(&sizes(finer), base);
    let logs: Vec<f64> = k_values.iter().map(|&k| base.log(k as f64)).collect();
    let rhs = entropy_of_sizes(&sizes(coarse), base) + weighted_mean_of_sizes(&sizes(coarse), &logs)?;
    Ok(RefinementInequality { lhs, rhs, k_values, holds: lhs <= rhs + 1e-12 })
}

/// Both sides of the log-sum inequality
/// `Σ x log(x/y) ≥ (Σx) log(Σx / Σy)` for non-negative `x` and positive `y`.
pub fn log_sum_sides(x: &[f64], y: &[f64], base: LogBase) -> Result<(f64, f64)> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { expected: x.len(), got: y.len() });
    }
    let term = |a: f64, b: f64| if a == 0.0 { 0.0 } else { a * base.log(a / b) };
    let lhs = x.iter().zip(y).map(|(&a, &b)| term(a, b)).sum();
    let rhs = term(x.iter().sum(), y.iter().sum());
    Ok((lhs, rhs))
}
