//! Exhaustive ground-truth solver for small graphs.
//!
//! The subset scan ascends by cardinality and, within a cardinality, by
//! lexicographic order of the member sequence, so the first hit is the
//! minimum with the smallest member sequence. Deliberately simple so it
//! stays trustworthy as the reference for every other solver.

use crate::error::Error;
use crate::graph::{Graph, Method, RdsResult, VertexSet};

/// Size limit for the 2^n subset scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimit {
    pub max_n: usize,
}

impl OracleLimit {
    pub const HARD_CAP: usize = 24;

    pub fn new(max_n: usize) -> Result<Self, Error> {
        if max_n > Self::HARD_CAP {
            return Err(Error::Invalid(format!(
                "oracle limit {max_n} exceeds hard cap {}",
                Self::HARD_CAP
            )));
        }
        Ok(OracleLimit { max_n })
    }
}

impl Default for OracleLimit {
    fn default() -> Self {
        OracleLimit { max_n: 20 }
    }
}

/// Bitmask adjacency for the subset scan.
struct Masks {
    n: usize,
    open: Vec<u32>,
}

impl Masks {
    fn build(g: &Graph) -> Self {
        let n = g.n();
        let open = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
            .collect();
        Masks { n, open }
    }

    fn full(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    fn is_dominating(&self, d: u32) -> bool {
        (0..self.n).all(|v| d >> v & 1 == 1 || self.open[v] & d != 0)
    }

    fn is_restrained_dominating(&self, d: u32) -> bool {
        let out = self.full() & !d;
        (0..self.n).all(|v| d >> v & 1 == 1 || (self.open[v] & d != 0 && self.open[v] & out != 0))
    }
}

/// First size-`k` subset of `0..n`, in lexicographic order of the member
/// sequence, satisfying `pred`.
fn first_combination(n: usize, k: usize, pred: &impl Fn(u32) -> bool) -> Option<u32> {
    fn rec(n: usize, start: usize, left: usize, acc: u32, pred: &impl Fn(u32) -> bool) -> Option<u32> {
        if left == 0 {
            return pred(acc).then_some(acc);
        }
        for v in start..=n - left {
            if let Some(hit) = rec(n, v + 1, left - 1, acc | 1 << v, pred) {
                return Some(hit);
            }
        }
        None
    }
    if k > n {
        return None;
    }
    rec(n, 0, k, 0, pred)
}

/// All size-`k` subsets satisfying `pred`, lexicographic by member sequence.
fn all_combinations(n: usize, k: usize, pred: &impl Fn(u32) -> bool) -> Vec<u32> {
    fn rec(n: usize, start: usize, left: usize, acc: u32, pred: &impl Fn(u32) -> bool, out: &mut Vec<u32>) {
        if left == 0 {
            if pred(acc) {
                out.push(acc);
            }
            return;
        }
        for v in start..=n - left {
            rec(n, v + 1, left - 1, acc | 1 << v, pred, out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(n, 0, k, 0, pred, &mut out);
    }
    out
}

fn mask_to_set(mask: u32) -> VertexSet {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

fn check_limit(g: &Graph, limit: OracleLimit) -> Result<(), Error> {
    if g.n() > limit.max_n {
        return Err(Error::TooLarge {
            n: g.n(),
            max: limit.max_n,
        });
    }
    Ok(())
}

/// Minimum restrained dominating set by exhaustive scan.
pub fn brute_force_gamma_r(g: &Graph) -> Result<RdsResult, Error> {
    brute_force_gamma_r_with_limit(g, OracleLimit::default())
}

pub fn brute_force_gamma_r_with_limit(g: &Graph, limit: OracleLimit) -> Result<RdsResult, Error> {
    check_limit(g, limit)?;
    let masks = Masks::build(g);
    let pred = |d: u32| masks.is_restrained_dominating(d);
    for size in 0..=g.n() {
        if let Some(d) = first_combination(g.n(), size, &pred) {
            return Ok(RdsResult::new(mask_to_set(d), Method::Oracle));
        }
    }
    // the full vertex set always qualifies, so the loop cannot fall through
    unreachable!("V is always a restrained dominating set")
}

/// Minimum dominating set by exhaustive scan.
pub fn brute_force_gamma(g: &Graph) -> Result<(usize, VertexSet), Error> {
    brute_force_gamma_with_limit(g, OracleLimit::default())
}

pub fn brute_force_gamma_with_limit(
    g: &Graph,
    limit: OracleLimit,
) -> Result<(usize, VertexSet), Error> {
    check_limit(g, limit)?;
    let masks = Masks::build(g);
    let pred = |d: u32| masks.is_dominating(d);
    for size in 0..=g.n() {
        if let Some(d) = first_combination(g.n(), size, &pred) {
            return Ok((size, mask_to_set(d)));
        }
    }
    unreachable!("V is always a dominating set")
}

/// All minimum restrained dominating sets, ascending lexicographic.
pub fn enumerate_min_rds(g: &Graph) -> Result<Vec<VertexSet>, Error> {
    enumerate_min_rds_with_limit(g, OracleLimit::default())
}

pub fn enumerate_min_rds_with_limit(
    g: &Graph,
    limit: OracleLimit,
) -> Result<Vec<VertexSet>, Error> {
    let gamma_r = brute_force_gamma_r_with_limit(g, limit)?.gamma_r;
    let masks = Masks::build(g);
    let pred = |d: u32| masks.is_restrained_dominating(d);
    Ok(all_combinations(g.n(), gamma_r, &pred)
        .into_iter()
        .map(mask_to_set)
        .collect())
}
