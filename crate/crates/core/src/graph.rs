//! Simple undirected graphs, the DIMACS-like file format, vertex sets and
//! the certificate checks every solver is validated against.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted; there are no self-loops and no duplicate
/// edges, and adjacency is symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, Error> {
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Invalid(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Invalid(format!("self-loop at vertex {u}")));
            }
            seen.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &seen {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, m: seen.len() })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).min()
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * (n.saturating_sub(1)) / 2
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Parses the graph file format: optional `c` comment lines, one header
    /// `p edge <n> <m>`, then exactly `m` lines `e <u> <v>` with 1-based
    /// endpoints. Duplicate edge lines collapse to one edge; self-loops are
    /// an error.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut edge_lines = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('c') {
                continue;
            }
            let mut it = l.split_whitespace();
            match it.next() {
                Some("p") => {
                    if header.is_some() {
                        return Err(Error::Parse {
                            line,
                            msg: "duplicate problem line".into(),
                        });
                    }
                    if it.next() != Some("edge") {
                        return Err(Error::Parse {
                            line,
                            msg: "expected 'p edge <n> <m>'".into(),
                        });
                    }
                    let n = parse_num(it.next(), line, "vertex count")?;
                    let m = parse_num(it.next(), line, "edge count")?;
                    if it.next().is_some() {
                        return Err(Error::Parse {
                            line,
                            msg: "trailing tokens on problem line".into(),
                        });
                    }
                    header = Some((n, m));
                }
                Some("e") => {
                    let (n, _) = header.ok_or(Error::Parse {
                        line,
                        msg: "edge before problem line".into(),
                    })?;
                    let u = parse_num(it.next(), line, "edge endpoint")?;
                    let v = parse_num(it.next(), line, "edge endpoint")?;
                    if it.next().is_some() {
                        return Err(Error::Parse {
                            line,
                            msg: "trailing tokens on edge line".into(),
                        });
                    }
                    if u < 1 || u > n || v < 1 || v > n {
                        return Err(Error::Parse {
                            line,
                            msg: format!("vertex id out of range 1..={n}"),
                        });
                    }
                    if u == v {
                        return Err(Error::Parse {
                            line,
                            msg: format!("self-loop at vertex {u}"),
                        });
                    }
                    edges.push((u - 1, v - 1));
                    edge_lines += 1;
                }
                Some(tok) => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("unrecognized line type '{tok}'"),
                    });
                }
                None => unreachable!(),
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: text.lines().count() + 1,
            msg: "missing problem line".into(),
        })?;
        if edge_lines != m {
            return Err(Error::Parse {
                line: text.lines().count() + 1,
                msg: format!("declared {m} edges but found {edge_lines} edge lines"),
            });
        }
        Graph::from_edges(n, edges).map_err(|e| Error::Parse {
            line: 0,
            msg: e.to_string(),
        })
    }

    /// Canonical serialization: `p edge <n> <m>` then edges sorted with
    /// `u < v`, 1-based, single spaces, LF line endings.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, Error> {
    tok.ok_or(Error::Parse {
        line,
        msg: format!("missing {what}"),
    })?
    .parse()
    .map_err(|_| Error::Parse {
        line,
        msg: format!("malformed {what}"),
    })
}

/// A set of vertex ids, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    /// Membership mask for a graph on `n` vertices.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for v in self.iter() {
            if v < n {
                m[v] = true;
            }
        }
        m
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, usize>>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Which clause of the restrained-domination certificate a vertex violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// The vertex is outside `D` and has no neighbor in `D`.
    NotDominated,
    /// The vertex is outside `D` and has no neighbor outside `D`.
    NoOutsideNeighbor,
}

impl ViolationKind {
    pub fn describe(&self) -> &'static str {
        match self {
            ViolationKind::NotDominated => "no neighbor in D",
            ViolationKind::NoOutsideNeighbor => "no neighbor outside D",
        }
    }
}

/// First violation of the restrained-domination conditions, if any.
/// Vertices are scanned in ascending order; domination is checked before
/// the outside-neighbor clause.
pub fn restrained_violation(g: &Graph, d: &VertexSet) -> Option<(usize, ViolationKind)> {
    let in_d = d.mask(g.n());
    for v in 0..g.n() {
        if in_d[v] {
            continue;
        }
        if !g.neighbors(v).iter().any(|&w| in_d[w]) {
            return Some((v, ViolationKind::NotDominated));
        }
        if !g.neighbors(v).iter().any(|&w| !in_d[w]) {
            return Some((v, ViolationKind::NoOutsideNeighbor));
        }
    }
    None
}

/// True iff every vertex outside `d` has a neighbor in `d` and a neighbor
/// outside `d`.
pub fn is_restrained_dominating_set(g: &Graph, d: &VertexSet) -> bool {
    restrained_violation(g, d).is_none()
}

/// True iff every vertex is in `d` or has a neighbor in `d`.
pub fn is_dominating_set(g: &Graph, d: &VertexSet) -> bool {
    let in_d = d.mask(g.n());
    (0..g.n()).all(|v| in_d[v] || g.neighbors(v).iter().any(|&w| in_d[w]))
}

/// The degree-1 vertices. Every restrained dominating set contains them.
pub fn pendant_vertices(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&v| g.degree(v) == 1).collect()
}

/// Checks whether `ordering` is a doubly perfect elimination ordering: each
/// vertex must be simplicial in the subgraph induced by the suffix starting
/// at it, and must have a maximum neighbor there (a `u` in its closed
/// neighborhood with `N[w] ⊆ N[u]` for every closed neighbor `w`, all
/// neighborhoods taken in the suffix subgraph).
pub fn verify_dpeo(g: &Graph, ordering: &[usize]) -> Result<bool, Error> {
    let n = g.n();
    if ordering.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut seen = vec![false; n];
    for &v in ordering {
        if v >= n || seen[v] {
            return Err(Error::NotAPermutation);
        }
        seen[v] = true;
    }

    let mut alive = vec![true; n];
    for &v in ordering {
        let closed_nb = |x: usize| -> Vec<usize> {
            let mut nb: Vec<usize> = g.neighbors(x).iter().copied().filter(|&w| alive[w]).collect();
            nb.push(x);
            nb.sort_unstable();
            nb
        };
        let nv = closed_nb(v);
        // simplicial: closed neighborhood induces a clique
        for (idx, &a) in nv.iter().enumerate() {
            for &b in &nv[idx + 1..] {
                if a != v && b != v && !g.has_edge(a, b) {
                    return Ok(false);
                }
            }
        }
        // maximum neighbor in the suffix subgraph
        let hoods: Vec<Vec<usize>> = nv.iter().map(|&w| closed_nb(w)).collect();
        let has_max = (0..nv.len()).any(|ui| {
            hoods
                .iter()
                .all(|wh| wh.iter().all(|x| hoods[ui].binary_search(x).is_ok()))
        });
        if !has_max {
            return Ok(false);
        }
        alive[v] = false;
    }
    Ok(true)
}

/// How a result was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Oracle,
    BlockDp,
    Threshold,
    Cograph,
    Chain,
    Randomized,
    Trivial,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::BlockDp => "block_dp",
            Method::Threshold => "threshold",
            Method::Cograph => "cograph",
            Method::Chain => "chain",
            Method::Randomized => "randomized",
            Method::Trivial => "trivial",
        }
    }

    pub fn from_str(s: &str) -> Option<Method> {
        Some(match s {
            "oracle" => Method::Oracle,
            "block_dp" => Method::BlockDp,
            "threshold" => Method::Threshold,
            "cograph" => Method::Cograph,
            "chain" => Method::Chain,
            "randomized" => Method::Randomized,
            "trivial" => Method::Trivial,
            _ => return None,
        })
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A restrained domination number together with a witness set and the
/// solver that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RdsResult {
    pub gamma_r: usize,
    pub witness: VertexSet,
    pub method: Method,
}

impl RdsResult {
    pub fn new(witness: VertexSet, method: Method) -> Self {
        RdsResult {
            gamma_r: witness.len(),
            witness,
            method,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    gamma_r: usize,
    witness: Vec<usize>,
    method: String,
}

impl RdsResult {
    /// JSON form: `{"gamma_r": int, "witness": [1-based ids ascending],
    /// "method": string}`.
    pub fn to_json(&self) -> String {
        let j = WitnessJson {
            gamma_r: self.gamma_r,
            witness: self.witness.iter().map(|v| v + 1).collect(),
            method: self.method.as_str().to_string(),
        };
        serde_json::to_string(&j).expect("witness serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        let j: WitnessJson =
            serde_json::from_str(s).map_err(|e| Error::Invalid(format!("witness JSON: {e}")))?;
        let mut witness = VertexSet::new();
        for v in j.witness {
            if v == 0 {
                return Err(Error::Invalid("witness ids are 1-based".into()));
            }
            witness.insert(v - 1);
        }
        let method = Method::from_str(&j.method)
            .ok_or_else(|| Error::Invalid(format!("unknown method '{}'", j.method)))?;
        Ok(RdsResult {
            gamma_r: j.gamma_r,
            witness,
            method,
        })
    }
}
