//! Cotree construction and minimum (restrained) domination on cographs.
//!
//! A cograph decomposes recursively: every induced subgraph with at least
//! two vertices is either disconnected (a union of its components) or has a
//! disconnected complement (a join of the complement's components). The
//! canonical multiway cotree records that decomposition; the solvers fold
//! multiway nodes left-associatively into binary applications of the
//! recurrences.
//!
//! The join recurrence for `γ_r` with a singleton side guards against an
//! edgeless partner: if the larger side has no edge, its minimum dominating
//! set is the whole side and the singleton would be left without a neighbor
//! outside the set, so only the `1 + I(G₂)` branch is admissible there.

use crate::error::Error;
use crate::graph::{Graph, Method, RdsResult, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn leaf_count(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            Cotree::Union(cs) | Cotree::Join(cs) => cs.iter().map(Cotree::leaf_count).sum(),
        }
    }
}

/// Connected components of the subgraph induced by `verts`, each sorted,
/// ordered by smallest member. `in_sub` must flag exactly `verts`.
fn components_within(g: &Graph, verts: &[usize], in_sub: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut comps = Vec::new();
    for &s in verts {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if in_sub[v] && !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Components of the complement of the subgraph induced by `verts`.
fn complement_components_within(g: &Graph, verts: &[usize], in_sub: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut comps = Vec::new();
    for &s in verts {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in verts {
                if v != u && in_sub[v] && !seen[v] && !g.has_edge(u, v) {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Canonical multiway cotree: no union child is a union, no join child is a
/// join, children ordered by smallest vertex.
pub fn build_cotree(g: &Graph) -> Result<Cotree, Error> {
    fn rec(g: &Graph, verts: Vec<usize>) -> Result<Cotree, Error> {
        if verts.len() == 1 {
            return Ok(Cotree::Leaf(verts[0]));
        }
        let mut in_sub = vec![false; g.n()];
        for &v in &verts {
            in_sub[v] = true;
        }
        let comps = components_within(g, &verts, &in_sub);
        if comps.len() >= 2 {
            let children = comps
                .into_iter()
                .map(|c| rec(g, c))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Cotree::Union(children));
        }
        let co_comps = complement_components_within(g, &verts, &in_sub);
        if co_comps.len() >= 2 {
            let children = co_comps
                .into_iter()
                .map(|c| rec(g, c))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Cotree::Join(children));
        }
        Err(Error::NotInClass { class: "cograph" })
    }
    if g.n() == 0 {
        return Err(Error::Invalid("cotree of an empty graph".into()));
    }
    rec(g, (0..g.n()).collect())
}

/// Everything the recurrences need about an evaluated subtree.
#[derive(Debug, Clone)]
pub struct CotreeEval {
    pub size: usize,
    pub isolated_count: usize,
    isolated_vertices: Vec<usize>,
    min_vertex: usize,
    pub gamma: usize,
    gamma_witness: Vec<usize>,
    pub gamma_r: usize,
    gamma_r_witness: Vec<usize>,
    /// Value the unguarded singleton-join formula would produce at this
    /// node, when it differs from `gamma_r`. Debug surface for the guard.
    pub unguarded_gamma_r: Option<usize>,
}

impl CotreeEval {
    fn leaf(v: usize) -> Self {
        CotreeEval {
            size: 1,
            isolated_count: 1,
            isolated_vertices: vec![v],
            min_vertex: v,
            gamma: 1,
            gamma_witness: vec![v],
            gamma_r: 1,
            gamma_r_witness: vec![v],
            unguarded_gamma_r: None,
        }
    }

    pub fn gamma_witness(&self) -> VertexSet {
        self.gamma_witness.iter().copied().collect()
    }

    pub fn gamma_r_witness(&self) -> VertexSet {
        self.gamma_r_witness.iter().copied().collect()
    }

    fn has_edge(&self) -> bool {
        self.isolated_count < self.size
    }
}

fn combine_union(x: CotreeEval, y: CotreeEval) -> CotreeEval {
    let mut isolated_vertices = x.isolated_vertices;
    isolated_vertices.extend_from_slice(&y.isolated_vertices);
    let mut gamma_witness = x.gamma_witness;
    gamma_witness.extend_from_slice(&y.gamma_witness);
    let mut gamma_r_witness = x.gamma_r_witness;
    gamma_r_witness.extend_from_slice(&y.gamma_r_witness);
    CotreeEval {
        size: x.size + y.size,
        isolated_count: x.isolated_count + y.isolated_count,
        isolated_vertices,
        min_vertex: x.min_vertex.min(y.min_vertex),
        gamma: x.gamma + y.gamma,
        gamma_witness,
        gamma_r: x.gamma_r + y.gamma_r,
        gamma_r_witness,
        unguarded_gamma_r: None,
    }
}

fn combine_join(x: CotreeEval, y: CotreeEval) -> CotreeEval {
    let size = x.size + y.size;
    let min_vertex = x.min_vertex.min(y.min_vertex);

    // domination: a single dominating vertex on either side dominates the
    // join; otherwise one vertex from each side suffices
    let gamma = x.gamma.min(y.gamma).min(2);
    let gamma_witness = if x.gamma <= y.gamma.min(2) {
        x.gamma_witness.clone()
    } else if y.gamma <= 2 {
        y.gamma_witness.clone()
    } else {
        vec![x.min_vertex, y.min_vertex]
    };

    let (gamma_r, gamma_r_witness, unguarded) = if x.size == 1 && y.size == 1 {
        (2, vec![x.min_vertex, y.min_vertex], None)
    } else if x.size >= 2 && y.size >= 2 {
        let value = x.gamma.min(y.gamma).min(2);
        let witness = if x.gamma == 1 {
            x.gamma_witness.clone()
        } else if y.gamma == 1 {
            y.gamma_witness.clone()
        } else {
            // a cross pair is restrained-valid because each side keeps a
            // vertex outside the set
            vec![x.min_vertex, y.min_vertex]
        };
        (value, witness, None)
    } else {
        let (single, big) = if x.size == 1 { (&x, &y) } else { (&y, &x) };
        // singleton in the set: the isolated vertices of the partner have no
        // other neighbor outside, so they must join too
        let branch_a = 1 + big.isolated_count;
        let mut wit_a = vec![single.min_vertex];
        wit_a.extend_from_slice(&big.isolated_vertices);
        // singleton out: a minimum dominating set of the partner works, but
        // only if the partner has an edge (otherwise it swallows the whole
        // side and strands the singleton)
        let raw = branch_a.min(big.gamma);
        if big.has_edge() && big.gamma < branch_a {
            (big.gamma, big.gamma_witness.clone(), None)
        } else {
            let unguarded = (raw != branch_a).then_some(raw);
            (branch_a, wit_a, unguarded)
        }
    };

    CotreeEval {
        size,
        isolated_count: 0,
        isolated_vertices: Vec::new(),
        min_vertex,
        gamma,
        gamma_witness,
        gamma_r,
        gamma_r_witness,
        unguarded_gamma_r: unguarded,
    }
}

/// Evaluates the recurrences over the cotree.
pub fn evaluate_cotree(t: &Cotree) -> CotreeEval {
    match t {
        Cotree::Leaf(v) => CotreeEval::leaf(*v),
        Cotree::Union(cs) => cs
            .iter()
            .map(evaluate_cotree)
            .reduce(combine_union)
            .expect("cotree nodes have children"),
        Cotree::Join(cs) => cs
            .iter()
            .map(evaluate_cotree)
            .reduce(combine_join)
            .expect("cotree nodes have children"),
    }
}

/// Domination number of the cograph described by the cotree, with a witness.
pub fn cograph_gamma(t: &Cotree) -> (usize, VertexSet) {
    let eval = evaluate_cotree(t);
    (eval.gamma, eval.gamma_witness())
}

/// Minimum restrained dominating set of a cograph (connected or not).
pub fn solve_cograph(g: &Graph) -> Result<RdsResult, Error> {
    let t = build_cotree(g)?;
    let eval = evaluate_cotree(&t);
    let witness = eval.gamma_r_witness();
    debug_assert_eq!(witness.len(), eval.gamma_r);
    Ok(RdsResult {
        gamma_r: eval.gamma_r,
        witness,
        method: Method::Cograph,
    })
}
