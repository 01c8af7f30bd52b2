//! Minimum restrained domination on connected chain graphs.
//!
//! A chain graph is a bipartite graph whose neighborhoods on each side form
//! inclusion chains. The answer is always within two of the pendant count
//! `t`, and the solver classifies the graph by trying canonical witnesses in
//! ascending size: the pendants alone (`t`, exactly for K2 and bi-stars),
//! the whole vertex set when the graph is a star (`t+1`), the pendants plus
//! the center of the pruned graph when that is a star (`t+1`), and finally
//! the pendants plus the two dominating ends of the chain ordering (`t+2`).

use crate::error::Error;
use crate::graph::{
    is_restrained_dominating_set, pendant_vertices, Graph, Method, RdsResult, VertexSet,
};

/// Bipartition with verified nesting chains: `N(x_1) ⊆ … ⊆ N(x_p)` and
/// `N(y_1) ⊇ … ⊇ N(y_q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainOrdering {
    pub x_order: Vec<usize>,
    pub y_order: Vec<usize>,
}

/// Which branch of the classification produced the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainCaseLabel {
    /// γ_r = t: the pendants alone suffice (K2 or a bi-star).
    BistarOrK2,
    /// γ_r = t + 1: the graph is a star, the answer is everything.
    Star,
    /// γ_r = t + 1: the graph pruned of pendants and their supports is a
    /// star; pendants plus its center.
    PrunedStar,
    /// γ_r = t + 2: pendants plus the two chain ends.
    General,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCase {
    pub label: ChainCaseLabel,
    /// Number of pendant vertices.
    pub t: usize,
    /// Star center of the pruned graph, for `PrunedStar`.
    pub pruned_center: Option<usize>,
}

fn sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

pub fn recognize_chain(g: &Graph) -> Result<ChainOrdering, Error> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Invalid("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    // 2-color by BFS; the class of vertex 0 is the X side
    let mut color = vec![usize::MAX; n];
    color[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if color[v] == usize::MAX {
                color[v] = 1 - color[u];
                queue.push_back(v);
            } else if color[v] == color[u] {
                return Err(Error::NotInClass { class: "chain" });
            }
        }
    }
    let mut x_order: Vec<usize> = (0..n).filter(|&v| color[v] == 0).collect();
    let mut y_order: Vec<usize> = (0..n).filter(|&v| color[v] == 1).collect();
    x_order.sort_by_key(|&v| (g.degree(v), v));
    y_order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for w in x_order.windows(2) {
        if !sorted_subset(g.neighbors(w[0]), g.neighbors(w[1])) {
            return Err(Error::NotInClass { class: "chain" });
        }
    }
    for w in y_order.windows(2) {
        if !sorted_subset(g.neighbors(w[1]), g.neighbors(w[0])) {
            return Err(Error::NotInClass { class: "chain" });
        }
    }
    Ok(ChainOrdering { x_order, y_order })
}

/// Star center of the subgraph induced by `verts`: a single vertex adjacent
/// to all others, all others of induced degree one. A lone vertex counts as
/// its own center.
fn star_center_within(g: &Graph, verts: &[usize]) -> Option<usize> {
    match verts.len() {
        0 => None,
        1 => Some(verts[0]),
        len => {
            let in_sub: std::collections::BTreeSet<usize> = verts.iter().copied().collect();
            let deg =
                |v: usize| g.neighbors(v).iter().filter(|w| in_sub.contains(w)).count();
            let center = verts.iter().copied().find(|&v| deg(v) == len - 1)?;
            verts
                .iter()
                .all(|&v| v == center || deg(v) == 1)
                .then_some(center)
        }
    }
}

fn classify(g: &Graph) -> Result<(ChainCase, VertexSet), Error> {
    let ord = recognize_chain(g)?;
    let n = g.n();
    if n < 2 {
        return Err(Error::Invalid(
            "chain solver needs at least two vertices".into(),
        ));
    }
    let pendants = pendant_vertices(g);
    let t = pendants.len();
    if n == 2 {
        return Ok((
            ChainCase {
                label: ChainCaseLabel::BistarOrK2,
                t,
                pruned_center: None,
            },
            VertexSet::full(2),
        ));
    }
    // t: pendants alone
    if is_restrained_dominating_set(g, &pendants) {
        return Ok((
            ChainCase {
                label: ChainCaseLabel::BistarOrK2,
                t,
                pruned_center: None,
            },
            pendants,
        ));
    }
    // t + 1: the whole graph is a star
    if star_center_within(g, &(0..n).collect::<Vec<_>>()).is_some() {
        return Ok((
            ChainCase {
                label: ChainCaseLabel::Star,
                t,
                pruned_center: None,
            },
            VertexSet::full(n),
        ));
    }
    // t + 1: the graph minus pendants and their supports is a star
    let support: VertexSet = (0..n)
        .filter(|&v| g.neighbors(v).iter().any(|&w| pendants.contains(w)))
        .collect();
    let rest: Vec<usize> = (0..n)
        .filter(|&v| !pendants.contains(v) && !support.contains(v))
        .collect();
    if let Some(center) = star_center_within(g, &rest) {
        let mut d = pendants.clone();
        d.insert(center);
        if is_restrained_dominating_set(g, &d) {
            return Ok((
                ChainCase {
                    label: ChainCaseLabel::PrunedStar,
                    t,
                    pruned_center: Some(center),
                },
                d,
            ));
        }
    }
    // t + 2: pendants plus the dominating ends of both chains
    let xp = *ord.x_order.last().unwrap();
    let y1 = ord.y_order[0];
    let mut d = pendants;
    d.insert(xp);
    d.insert(y1);
    debug_assert!(is_restrained_dominating_set(g, &d));
    Ok((
        ChainCase {
            label: ChainCaseLabel::General,
            t,
            pruned_center: None,
        },
        d,
    ))
}

/// Classification of a connected chain graph; the label pins γ_r relative
/// to the pendant count.
pub fn classify_chain(g: &Graph) -> Result<ChainCase, Error> {
    classify(g).map(|(case, _)| case)
}

/// Minimum restrained dominating set of a connected chain graph.
pub fn solve_chain(g: &Graph) -> Result<RdsResult, Error> {
    let (_, witness) = classify(g)?;
    Ok(RdsResult::new(witness, Method::Chain))
}
