//! Minimum restrained domination on threshold graphs.
//!
//! A threshold graph is a split graph whose clique side has nested closed
//! neighborhoods and whose independent side has nested open neighborhoods.
//! Recognition peels vertices that are isolated or universal in the
//! remaining graph; the peel completes exactly on threshold graphs.

use crate::error::Error;
use crate::graph::{Graph, Method, RdsResult, VertexSet};

/// Split partition with both nesting chains.
///
/// `clique_order` is `x_1..x_p` with `N[x_1] ⊆ … ⊆ N[x_p]`;
/// `independent_order` is `y_1..y_q` with `N(y_1) ⊇ … ⊇ N(y_q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdOrdering {
    pub clique_order: Vec<usize>,
    pub independent_order: Vec<usize>,
}

fn closed_neighborhood(g: &Graph, v: usize) -> Vec<usize> {
    let mut nb: Vec<usize> = g.neighbors(v).to_vec();
    nb.push(v);
    nb.sort_unstable();
    nb
}

fn sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

pub fn recognize_threshold(g: &Graph) -> Result<ThresholdOrdering, Error> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Invalid(
            "threshold recognition needs at least two vertices".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    // peel isolated-or-universal vertices from the remaining graph
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut remaining = n;
    let mut clique = Vec::new();
    let mut independent = Vec::new();
    while remaining > 0 {
        let isolated = (0..n).find(|&v| alive[v] && deg[v] == 0);
        let universal = (0..n).find(|&v| alive[v] && deg[v] == remaining - 1);
        let (v, to_clique) = match (isolated, universal) {
            (Some(v), _) => (v, false),
            (None, Some(v)) => (v, true),
            (None, None) => return Err(Error::NotInClass { class: "threshold" }),
        };
        if to_clique {
            clique.push(v);
        } else {
            independent.push(v);
        }
        alive[v] = false;
        remaining -= 1;
        for &u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }

    // degree ties are harmless: nested neighborhoods of equal size coincide
    clique.sort_by_key(|&v| (g.degree(v), v));
    independent.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    for w in clique.windows(2) {
        if !sorted_subset(&closed_neighborhood(g, w[0]), &closed_neighborhood(g, w[1])) {
            return Err(Error::NotInClass { class: "threshold" });
        }
    }
    for w in independent.windows(2) {
        if !sorted_subset(g.neighbors(w[1]), g.neighbors(w[0])) {
            return Err(Error::NotInClass { class: "threshold" });
        }
    }
    Ok(ThresholdOrdering {
        clique_order: clique,
        independent_order: independent,
    })
}

/// Closed-form minimum restrained dominating set of a connected threshold
/// graph with at least three vertices. Two-vertex graphs are the caller's
/// special case.
pub fn solve_threshold(g: &Graph) -> Result<RdsResult, Error> {
    if g.n() < 3 {
        return Err(Error::Invalid(
            "threshold solver needs at least three vertices".into(),
        ));
    }
    let ord = recognize_threshold(g)?;
    let p = ord.clique_order.len();
    let witness: VertexSet = if p == 1 {
        VertexSet::full(g.n())
    } else {
        let xp = ord.clique_order[p - 1];
        let xp1 = ord.clique_order[p - 2];
        if closed_neighborhood(g, xp) == closed_neighborhood(g, xp1) {
            [xp].into_iter().collect()
        } else {
            let mut d: VertexSet = [xp].into_iter().collect();
            for &y in &ord.independent_order {
                if g.has_edge(y, xp) && !g.has_edge(y, xp1) {
                    d.insert(y);
                }
            }
            d
        }
    };
    Ok(RdsResult::new(witness, Method::Threshold))
}
