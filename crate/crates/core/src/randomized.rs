//! Probabilistic upper bound on the restrained domination number and the
//! sampling algorithm attaining it in expectation.
//!
//! Each vertex joins a random set `A` independently with probability
//! `p = ln(δ+1)/(δ+1)`. The vertices with no neighbor in `A` form `B`, and
//! the vertices outside `A ∪ B` whose whole neighborhood lies inside
//! `A ∪ B` form `C`. The union `A ∪ B ∪ C` is always a restrained
//! dominating set: a vertex left out has a neighbor in `A` and a neighbor
//! `w` outside `A ∪ B`, and that `w` cannot be in `C` because it sees the
//! vertex itself outside `A ∪ B`. The expected size is at most
//! `2np + 2n·e^{−p(δ+1)}`, which at the chosen `p` equals
//! `2n(1 + ln(δ+1))/(δ+1)`.

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// The bound evaluated at a given order and minimum degree.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub delta: usize,
    /// Sampling probability `ln(δ+1)/(δ+1)`.
    pub p: f64,
    /// `2np + 2n·e^{−p(δ+1)}` at that `p`.
    pub bound: f64,
    /// `2n(1 + ln(δ+1))/(δ+1)`.
    pub closed_form: f64,
}

pub fn upper_bound(n: usize, delta: usize) -> Result<BoundReport, Error> {
    if n == 0 {
        return Err(Error::Invalid("order must be positive".into()));
    }
    if delta == 0 {
        return Err(Error::Invalid(
            "minimum degree must be positive (connected graphs only)".into(),
        ));
    }
    let nf = n as f64;
    let d1 = (delta + 1) as f64;
    let p = (d1.ln() / d1).clamp(0.0, 1.0);
    let bound = 2.0 * nf * p + 2.0 * nf * (-p * d1).exp();
    let closed_form = 2.0 * nf * (1.0 + d1.ln()) / d1;
    Ok(BoundReport {
        n,
        delta,
        p,
        bound,
        closed_form,
    })
}

/// One run of the sampling algorithm: the random set and the two repair
/// sets, all deterministic in `(graph, seed)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomRun {
    pub seed: u64,
    pub a_set: VertexSet,
    pub b_set: VertexSet,
    pub c_set: VertexSet,
    pub result: VertexSet,
}

/// Counter-based uniform draw in `[0, 1)` keyed by `(seed, vertex)`, so the
/// per-vertex decisions are independent of iteration order.
fn draw(seed: u64, v: usize) -> f64 {
    let mut z = seed.wrapping_add((v as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^= z >> 31;
    (z >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

pub fn randomized_rds(g: &Graph, seed: u64) -> Result<RandomRun, Error> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Invalid(
            "randomized algorithm needs at least two vertices".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let delta = g.min_degree().expect("n >= 2");
    let d1 = (delta + 1) as f64;
    let p = (d1.ln() / d1).clamp(0.0, 1.0);

    let in_a: Vec<bool> = (0..n).map(|v| draw(seed, v) < p).collect();
    let in_b: Vec<bool> = (0..n)
        .map(|v| !in_a[v] && !g.neighbors(v).iter().any(|&w| in_a[w]))
        .collect();
    let in_c: Vec<bool> = (0..n)
        .map(|v| {
            !in_a[v] && !in_b[v] && g.neighbors(v).iter().all(|&w| in_a[w] || in_b[w])
        })
        .collect();

    let a_set: VertexSet = (0..n).filter(|&v| in_a[v]).collect();
    let b_set: VertexSet = (0..n).filter(|&v| in_b[v]).collect();
    let c_set: VertexSet = (0..n).filter(|&v| in_c[v]).collect();
    let result: VertexSet = (0..n).filter(|&v| in_a[v] || in_b[v] || in_c[v]).collect();
    Ok(RandomRun {
        seed,
        a_set,
        b_set,
        c_set,
        result,
    })
}
