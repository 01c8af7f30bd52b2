//! Generators and desk-scale verifiers for two hardness constructions.
//!
//! The first takes an exact-cover-by-3-sets instance over a 3q-element
//! universe and produces a graph whose restrained domination number is at
//! most 2q exactly when the instance has an exact cover; the generated graph
//! carries a doubly perfect elimination ordering. The second appends a
//! three-edge pendant path to every vertex of an arbitrary base graph,
//! pinning the restrained domination number at twice the base order while
//! preserving the hardness of plain domination.

use crate::error::Error;
use crate::graph::{is_dominating_set, Graph, Method, RdsResult, VertexSet};
use crate::oracle::brute_force_gamma_r;

/// Exact cover by 3-sets: a universe of `3q` elements (ids `0..3q`) and a
/// collection of 3-element subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X3cInstance {
    q: usize,
    triples: Vec<[usize; 3]>,
}

impl X3cInstance {
    /// Validates element ranges and triple sizes; elements inside a triple
    /// are stored sorted.
    pub fn new(q: usize, triples: Vec<[usize; 3]>) -> Result<Self, Error> {
        if q == 0 {
            return Err(Error::Invalid("universe must be non-empty".into()));
        }
        if triples.is_empty() {
            return Err(Error::Invalid("collection must be non-empty".into()));
        }
        let mut canon = Vec::with_capacity(triples.len());
        for t in triples {
            let mut t = t;
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::Invalid(format!(
                    "triple {t:?} has repeated elements"
                )));
            }
            if t[2] >= 3 * q {
                return Err(Error::Invalid(format!(
                    "triple {t:?} outside universe of size {}",
                    3 * q
                )));
            }
            canon.push(t);
        }
        Ok(X3cInstance { q, triples: canon })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn universe_size(&self) -> usize {
        3 * self.q
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    /// File format: first line `q m`, then `m` lines of three 1-based
    /// element ids.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (idx, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing header".into(),
        })?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse())
            .collect::<Result<_, _>>()
            .map_err(|_| Error::Parse {
                line: idx + 1,
                msg: "header must be 'q m'".into(),
            })?;
        let [q, m] = nums[..] else {
            return Err(Error::Parse {
                line: idx + 1,
                msg: "header must be 'q m'".into(),
            });
        };
        let mut triples = Vec::with_capacity(m);
        for _ in 0..m {
            let (idx, l) = lines.next().ok_or(Error::Parse {
                line: 0,
                msg: format!("expected {m} triples"),
            })?;
            let ids: Vec<usize> = l
                .split_whitespace()
                .map(|t| t.parse())
                .collect::<Result<_, _>>()
                .map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: "triple must be three element ids".into(),
                })?;
            let [a, b, c] = ids[..] else {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: "triple must be three element ids".into(),
                });
            };
            if a == 0 || b == 0 || c == 0 {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: "element ids are 1-based".into(),
                });
            }
            triples.push([a - 1, b - 1, c - 1]);
        }
        X3cInstance::new(q, triples).map_err(|e| Error::Parse {
            line: 0,
            msg: e.to_string(),
        })
    }
}

/// Role of a vertex in the exact-cover construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum X3cRole {
    /// Universe element `i`.
    X(usize),
    /// Triple vertex `j`; the triple vertices form a clique.
    C(usize),
    /// Pendant attached to `W(i)`.
    Z(usize),
    /// Bridge between the hub and pendant `Z(i)`.
    W(usize),
    /// Hub adjacent to every element, triple and bridge vertex.
    R,
}

impl X3cRole {
    pub fn label(&self) -> String {
        match self {
            X3cRole::X(i) => format!("x{}", i + 1),
            X3cRole::C(j) => format!("c{}", j + 1),
            X3cRole::Z(i) => format!("z{}", i + 1),
            X3cRole::W(i) => format!("w{}", i + 1),
            X3cRole::R => "r".into(),
        }
    }
}

/// The generated decision-problem graph, its budget `k = 2q`, the role of
/// every vertex, and the attached doubly perfect elimination ordering.
#[derive(Debug, Clone)]
pub struct ReductionGraph {
    pub graph: Graph,
    pub role_map: Vec<X3cRole>,
    pub k: usize,
    pub dpeo: Vec<usize>,
}

/// Builds the decision graph: element vertices first, then the triple
/// clique, the pendants, the bridges, and finally the hub.
pub fn gen_x3c_graph(inst: &X3cInstance) -> ReductionGraph {
    let q = inst.q;
    let m = inst.triples.len();
    let x0 = 0;
    let c0 = x0 + 3 * q;
    let z0 = c0 + m;
    let w0 = z0 + q;
    let r = w0 + q;
    let n = r + 1;

    let mut edges = Vec::new();
    for (j, t) in inst.triples.iter().enumerate() {
        for &e in t {
            edges.push((x0 + e, c0 + j));
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            edges.push((c0 + i, c0 + j));
        }
    }
    for i in 0..3 * q {
        edges.push((r, x0 + i));
    }
    for j in 0..m {
        edges.push((r, c0 + j));
    }
    for i in 0..q {
        edges.push((r, w0 + i));
        edges.push((w0 + i, z0 + i));
    }
    let graph = Graph::from_edges(n, edges).expect("construction is simple by design");

    let mut role_map = Vec::with_capacity(n);
    role_map.extend((0..3 * q).map(X3cRole::X));
    role_map.extend((0..m).map(X3cRole::C));
    role_map.extend((0..q).map(X3cRole::Z));
    role_map.extend((0..q).map(X3cRole::W));
    role_map.push(X3cRole::R);

    // elimination order: elements, triples, pendants, bridges, hub
    let dpeo: Vec<usize> = (0..n).collect();

    ReductionGraph {
        graph,
        role_map,
        k: 2 * q,
        dpeo,
    }
}

/// Exhaustive exact-cover check: do some `q` triples partition the universe?
pub fn exact_cover_exists(inst: &X3cInstance) -> Result<bool, Error> {
    let m = inst.triples.len();
    if m > 25 {
        return Err(Error::TooLarge { n: m, max: 25 });
    }
    if 3 * inst.q > 128 {
        return Err(Error::TooLarge {
            n: 3 * inst.q,
            max: 128,
        });
    }
    let masks: Vec<u128> = inst
        .triples
        .iter()
        .map(|t| t.iter().fold(0u128, |acc, &e| acc | 1 << e))
        .collect();
    let full = if inst.universe_size() == 128 {
        u128::MAX
    } else {
        (1u128 << inst.universe_size()) - 1
    };
    // cover the lowest uncovered element at each step
    fn search(masks: &[u128], covered: u128, full: u128) -> bool {
        if covered == full {
            return true;
        }
        let lowest = (covered ^ full).trailing_zeros();
        masks
            .iter()
            .any(|&m| m >> lowest & 1 == 1 && m & covered == 0 && search(masks, covered | m, full))
    }
    Ok(search(&masks, 0, full))
}

/// Desk-scale check that the construction preserves the decision: the
/// instance has an exact cover exactly when the generated graph has a
/// restrained dominating set of size at most `2q`. Also insists that the
/// attached ordering really is a doubly perfect elimination ordering.
pub fn verify_x3c_equivalence(inst: &X3cInstance) -> Result<bool, Error> {
    let rg = gen_x3c_graph(inst);
    if !crate::graph::verify_dpeo(&rg.graph, &rg.dpeo)? {
        return Err(Error::Invalid(
            "generated ordering is not a doubly perfect elimination ordering".into(),
        ));
    }
    let cover = exact_cover_exists(inst)?;
    let gamma_r = brute_force_gamma_r(&rg.graph)?.gamma_r;
    Ok(cover == (gamma_r <= rg.k))
}

/// Role of a vertex in the pendant-path construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GpRole {
    /// Base-graph vertex `i`.
    V(usize),
    /// First path vertex off `V(i)`.
    X(usize),
    /// Second path vertex.
    Y(usize),
    /// Pendant end of the path.
    Z(usize),
}

impl GpRole {
    pub fn label(&self) -> String {
        match self {
            GpRole::V(i) => format!("v{}", i + 1),
            GpRole::X(i) => format!("x{}", i + 1),
            GpRole::Y(i) => format!("y{}", i + 1),
            GpRole::Z(i) => format!("z{}", i + 1),
        }
    }
}

/// A base graph with a path `v_i – x_i – y_i – z_i` appended to each vertex.
/// Vertices `0..n` are the base, then the x, y and z layers.
#[derive(Debug, Clone)]
pub struct GpGraph {
    pub graph: Graph,
    pub base_n: usize,
    pub role_map: Vec<GpRole>,
}

impl GpGraph {
    pub fn x(&self, i: usize) -> usize {
        self.base_n + i
    }

    pub fn y(&self, i: usize) -> usize {
        2 * self.base_n + i
    }

    pub fn z(&self, i: usize) -> usize {
        3 * self.base_n + i
    }

    /// The base graph, recovered as the induced subgraph on `0..base_n`.
    pub fn base_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .graph
            .edges()
            .filter(|&(u, v)| u < self.base_n && v < self.base_n)
            .collect();
        Graph::from_edges(self.base_n, edges).expect("induced subgraph of a simple graph")
    }
}

pub fn gen_gp_graph(h: &Graph) -> Result<GpGraph, Error> {
    let n = h.n();
    if n == 0 {
        return Err(Error::Invalid("base graph must have a vertex".into()));
    }
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    for i in 0..n {
        edges.push((i, n + i));
        edges.push((n + i, 2 * n + i));
        edges.push((2 * n + i, 3 * n + i));
    }
    let graph = Graph::from_edges(4 * n, edges).expect("construction is simple by design");
    let mut role_map = Vec::with_capacity(4 * n);
    role_map.extend((0..n).map(GpRole::V));
    role_map.extend((0..n).map(GpRole::X));
    role_map.extend((0..n).map(GpRole::Y));
    role_map.extend((0..n).map(GpRole::Z));
    Ok(GpGraph {
        graph,
        base_n: n,
        role_map,
    })
}

/// The canonical optimum: all base vertices plus all pendant ends, size
/// twice the base order.
pub fn gp_canonical_rds(gp: &GpGraph) -> RdsResult {
    let n = gp.base_n;
    let witness: VertexSet = (0..n).chain((0..n).map(|i| gp.z(i))).collect();
    debug_assert_eq!(witness.len(), 2 * n);
    RdsResult {
        gamma_r: 2 * n,
        witness,
        method: Method::Trivial,
    }
}

/// Lifts a dominating set of the base graph to one of the augmented graph by
/// adding every `y_i`.
pub fn dom_set_h_to_gp(gp: &GpGraph, d_h: &VertexSet) -> Result<VertexSet, Error> {
    let h = gp.base_graph();
    if d_h.iter().any(|v| v >= gp.base_n) {
        return Err(Error::Invalid("set uses non-base vertices".into()));
    }
    if !is_dominating_set(&h, d_h) {
        return Err(Error::Invalid("not a dominating set of the base graph".into()));
    }
    let mut d: VertexSet = d_h.iter().collect();
    for i in 0..gp.base_n {
        d.insert(gp.y(i));
    }
    Ok(d)
}

/// Projects a dominating set of the augmented graph back to the base: drop
/// the y and z layers, then slide any surviving `x_i` down to `v_i`.
pub fn dom_set_gp_to_h(gp: &GpGraph, d: &VertexSet) -> Result<VertexSet, Error> {
    if !is_dominating_set(&gp.graph, d) {
        return Err(Error::Invalid(
            "not a dominating set of the augmented graph".into(),
        ));
    }
    let n = gp.base_n;
    let mut out = VertexSet::new();
    for v in d.iter() {
        if v < n {
            out.insert(v);
        } else if v < 2 * n {
            out.insert(v - n); // x_i becomes v_i
        }
        // y and z layers are dropped
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_restrained_dominating_set, verify_dpeo};
    use crate::oracle::brute_force_gamma;

    /// q = 2 instance over six elements with five triples; it has the exact
    /// cover {C1, C3}.
    pub fn reference_instance() -> X3cInstance {
        X3cInstance::new(
            2,
            vec![[0, 3, 5], [0, 1, 4], [1, 2, 4], [1, 3, 5], [2, 4, 5]],
        )
        .unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn reference_graph_shape() {
        let rg = gen_x3c_graph(&reference_instance());
        assert_eq!(rg.graph.n(), 16); // 3q + m + 2q + 1
        assert_eq!(rg.k, 4);
        assert!(rg.graph.is_connected());
        assert!(verify_dpeo(&rg.graph, &rg.dpeo).unwrap());
    }

    #[test]
    fn smallest_instance() {
        let inst = X3cInstance::new(1, vec![[0, 1, 2]]).unwrap();
        let rg = gen_x3c_graph(&inst);
        assert_eq!(rg.graph.n(), 3 + 1 + 2 + 1); // 3q + m + 2q + 1
        assert_eq!(rg.k, 2);
        assert!(verify_dpeo(&rg.graph, &rg.dpeo).unwrap());
    }

    #[test]
    fn malformed_triples_rejected() {
        assert!(X3cInstance::new(1, vec![[0, 1, 1]]).is_err());
        assert!(X3cInstance::new(1, vec![[0, 1, 3]]).is_err());
        assert!(X3cInstance::new(0, vec![]).is_err());
    }

    #[test]
    fn instance_parsing() {
        let inst = X3cInstance::parse("2 2\n1 2 3\n4 5 6\n").unwrap();
        assert_eq!(inst.q(), 2);
        assert_eq!(inst.triples(), &[[0, 1, 2], [3, 4, 5]]);
        assert!(X3cInstance::parse("2 2\n1 2 3\n").is_err());
        assert!(X3cInstance::parse("2 1\n0 1 2\n").is_err());
    }

    #[test]
    fn exact_cover_examples() {
        assert!(exact_cover_exists(&reference_instance()).unwrap());
        let inst = X3cInstance::new(2, vec![[0, 1, 2]]).unwrap();
        assert!(!exact_cover_exists(&inst).unwrap());
        let covered = X3cInstance::new(2, vec![[0, 1, 2], [3, 4, 5]]).unwrap();
        assert!(exact_cover_exists(&covered).unwrap());
    }

    #[test]
    fn equivalence_on_reference_and_negative_instance() {
        assert!(verify_x3c_equivalence(&reference_instance()).unwrap());
        // every triple contains element 0, so no two disjoint triples exist
        let no_cover =
            X3cInstance::new(2, vec![[0, 1, 2], [0, 3, 4], [0, 4, 5], [0, 2, 5]]).unwrap();
        assert!(!exact_cover_exists(&no_cover).unwrap());
        assert!(verify_x3c_equivalence(&no_cover).unwrap());
        let tiny = X3cInstance::new(1, vec![[0, 1, 2]]).unwrap();
        assert!(verify_x3c_equivalence(&tiny).unwrap());
    }

    #[test]
    fn gp_of_a_single_vertex_is_a_path() {
        let gp = gen_gp_graph(&Graph::new(1)).unwrap();
        assert_eq!(gp.graph.n(), 4);
        assert_eq!(gp.graph.m(), 3);
        assert!(gp.graph.has_edge(0, 1) && gp.graph.has_edge(1, 2) && gp.graph.has_edge(2, 3));
    }

    #[test]
    fn gp_shapes() {
        let gp = gen_gp_graph(&complete(3)).unwrap();
        assert_eq!(gp.graph.n(), 12);
        assert_eq!(gp.graph.m(), 12); // base 3 + 9 path edges
        let gp = gen_gp_graph(&Graph::from_edges(2, [(0, 1)]).unwrap()).unwrap();
        assert_eq!(gp.graph.n(), 8);
    }

    #[test]
    fn canonical_rds_examples() {
        let gp = gen_gp_graph(&Graph::new(1)).unwrap();
        let r = gp_canonical_rds(&gp);
        assert_eq!(r.gamma_r, 2);
        assert_eq!(r.witness.to_vec(), vec![0, 3]);
        assert!(is_restrained_dominating_set(&gp.graph, &r.witness));

        let gp = gen_gp_graph(&complete(3)).unwrap();
        let r = gp_canonical_rds(&gp);
        assert_eq!(r.gamma_r, 6);
        assert!(is_restrained_dominating_set(&gp.graph, &r.witness));
        assert_eq!(brute_force_gamma_r(&gp.graph).unwrap().gamma_r, 6);

        let gp = gen_gp_graph(&Graph::from_edges(2, [(0, 1)]).unwrap()).unwrap();
        assert_eq!(brute_force_gamma_r(&gp.graph).unwrap().gamma_r, 4);
    }

    #[test]
    fn dominating_set_transforms() {
        let gp = gen_gp_graph(&complete(3)).unwrap();
        let d_h: VertexSet = [0usize].into_iter().collect();
        let lifted = dom_set_h_to_gp(&gp, &d_h).unwrap();
        assert_eq!(lifted.len(), 4);
        assert!(is_dominating_set(&gp.graph, &lifted));
        let back = dom_set_gp_to_h(&gp, &lifted).unwrap();
        assert_eq!(back.to_vec(), vec![0]);

        // an x vertex slides down to its base vertex
        let gp1 = gen_gp_graph(&Graph::new(1)).unwrap();
        let d: VertexSet = [1usize, 2].into_iter().collect();
        let back = dom_set_gp_to_h(&gp1, &d).unwrap();
        assert_eq!(back.to_vec(), vec![0]);

        // rejects non-dominating input
        let bad: VertexSet = [0usize].into_iter().collect();
        assert!(dom_set_gp_to_h(&gp1, &bad).is_err());
        let gp2 = gen_gp_graph(&Graph::from_edges(2, [(0, 1)]).unwrap()).unwrap();
        let d2: VertexSet = [0, 1, gp2.y(0), gp2.y(1)].into_iter().collect();
        let back = dom_set_gp_to_h(&gp2, &d2).unwrap();
        assert!(back.len() <= 2);
        assert!(is_dominating_set(&gp2.base_graph(), &back));
    }

    #[test]
    fn gamma_shifts_by_base_order() {
        // the augmentation adds exactly n to the domination number
        for h in [complete(3), Graph::from_edges(2, [(0, 1)]).unwrap()] {
            let gp = gen_gp_graph(&h).unwrap();
            let gh = brute_force_gamma(&h).unwrap().0;
            let ggp = brute_force_gamma(&gp.graph).unwrap().0;
            assert_eq!(ggp, gh + h.n());
        }
    }
}
