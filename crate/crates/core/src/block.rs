//! Minimum restrained domination on block graphs via dynamic programming
//! over the refined cut-tree.
//!
//! The refined cut-tree is a bipartite tree whose nodes are the cut vertices
//! of the graph and one block node per block. A block node carries the block
//! vertex set `BC_i` and the subset `B_i` of its vertices that are not cut
//! vertices. The tree is rooted at a cut vertex and a fixed family of
//! parameters is evaluated bottom-up; the restrained domination number is
//! `min(A, B)` at the root.
//!
//! Parameters at a cut node `r` over the subgraph spanned by its subtree:
//!   A  minimum restrained dominating set containing r
//!   B  minimum restrained dominating set avoiding r
//!   C  r out, dominates everything except possibly r, everyone outside the
//!      set (including r) has a neighbor outside it
//!   D  like C but r is exempt from the outside-neighbor condition
//!   E  like D but r must be dominated
//!
//! Parameters at a block node `B_i` over the subgraph spanned by its subtree
//! (which excludes the parent cut vertex):
//!   A  dominates everything below the block, outside-neighbor condition on
//!      every vertex outside the set
//!   B  dominates everything, outside-neighbor condition only off the block
//!   F  B plus at least one block vertex outside the set
//!   H  B plus at least one block vertex inside the set
//!   I  B plus both
//! and, when `B_i` is empty, C/D/E coincide with F/H/I and get their own
//! recurrences.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::graph::{Graph, Method, RdsResult, VertexSet};

pub type NodeId = usize;

/// DP value in `ℕ ∪ {∞}` with saturating addition.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cost(u32);

impl Cost {
    pub const INF: Cost = Cost(u32::MAX);

    pub fn finite(v: usize) -> Cost {
        debug_assert!(v < u32::MAX as usize);
        Cost(v as u32)
    }

    pub fn is_finite(self) -> bool {
        self != Cost::INF
    }

    pub fn value(self) -> Option<usize> {
        self.is_finite().then_some(self.0 as usize)
    }

    pub fn add(self, rhs: Cost) -> Cost {
        if self.is_finite() && rhs.is_finite() {
            Cost(self.0 + rhs.0)
        } else {
            Cost::INF
        }
    }
}

impl fmt::Debug for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "inf"),
        }
    }
}

/// Sum of a fixed multiset of costs supporting "total minus one/two terms".
#[derive(Clone, Copy)]
struct SumExcl {
    finite: u64,
    infs: usize,
}

impl SumExcl {
    fn new(costs: impl Iterator<Item = Cost>) -> Self {
        let mut finite = 0u64;
        let mut infs = 0usize;
        for c in costs {
            match c.value() {
                Some(v) => finite += v as u64,
                None => infs += 1,
            }
        }
        SumExcl { finite, infs }
    }

    fn total(self) -> Cost {
        if self.infs > 0 {
            Cost::INF
        } else {
            Cost(self.finite as u32)
        }
    }

    fn excl(self, c: Cost) -> Cost {
        let infs = self.infs - usize::from(!c.is_finite());
        if infs > 0 {
            Cost::INF
        } else {
            Cost((self.finite - c.value().unwrap_or(0) as u64) as u32)
        }
    }

    fn excl2(self, c1: Cost, c2: Cost) -> Cost {
        let infs = self.infs - usize::from(!c1.is_finite()) - usize::from(!c2.is_finite());
        if infs > 0 {
            Cost::INF
        } else {
            let f = self.finite - c1.value().unwrap_or(0) as u64 - c2.value().unwrap_or(0) as u64;
            Cost(f as u32)
        }
    }
}

/// Parameter labels. A..E live on cut nodes; A, B, F, H, I on block nodes,
/// plus C, D, E exactly when the block's non-cut set is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Param {
    A,
    B,
    C,
    D,
    E,
    F,
    H,
    I,
}

impl Param {
    fn idx(self) -> usize {
        match self {
            Param::A => 0,
            Param::B => 1,
            Param::C => 2,
            Param::D => 3,
            Param::E => 4,
            Param::F => 5,
            Param::H => 6,
            Param::I => 7,
        }
    }
}

/// Witness backpointer for one parameter value.
#[derive(Debug, Clone)]
enum Plan {
    /// Vertices chosen at a leaf.
    Explicit(Vec<usize>),
    /// Vertices chosen at this node plus one parameter per selected child
    /// (children addressed by position).
    Combine {
        local: Vec<usize>,
        parts: Vec<(usize, Param)>,
    },
    /// Same node, different parameter.
    Alias(Param),
}

#[derive(Debug, Clone)]
struct Entry {
    cost: Cost,
    plan: Plan,
}

/// The parameter vector computed at one tree node.
#[derive(Debug, Clone, Default)]
pub struct DpValues {
    slots: [Option<Entry>; 8],
}

impl DpValues {
    pub fn cost(&self, p: Param) -> Option<Cost> {
        self.slots[p.idx()].as_ref().map(|e| e.cost)
    }

    fn entry(&self, p: Param) -> Option<&Entry> {
        self.slots[p.idx()].as_ref()
    }

    fn set(&mut self, p: Param, cost: Cost, plan: Plan) {
        self.slots[p.idx()] = Some(Entry { cost, plan });
    }
}

/// Node payload: a cut vertex or a block with its vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    Cut {
        vertex: usize,
    },
    Block {
        block: usize,
        /// Non-cut vertices of the block, sorted.
        b_set: Vec<usize>,
        /// All vertices of the block, sorted.
        full_block: Vec<usize>,
    },
}

#[derive(Debug, Clone)]
pub struct CutTreeNode {
    pub kind: NodeKind,
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
}

/// Biconnected components (as sorted vertex lists, in canonical order) and
/// the cut-vertex indicator. Requires a connected graph.
pub fn blocks_and_cut_vertices(g: &Graph) -> Result<(Vec<Vec<usize>>, Vec<bool>), Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut estack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    let root = 0usize;
    let mut root_children = 0usize;
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    // frames: (vertex, parent, next neighbor index)
    let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
    while let Some(frame) = frames.last().copied() {
        let (u, parent, i) = frame;
        if i < g.neighbors(u).len() {
            frames.last_mut().unwrap().2 += 1;
            let v = g.neighbors(u)[i];
            if v == parent {
                continue;
            }
            if disc[v] == usize::MAX {
                estack.push((u, v));
                disc[v] = timer;
                low[v] = timer;
                timer += 1;
                if u == root {
                    root_children += 1;
                }
                frames.push((v, u, 0));
            } else if disc[v] < disc[u] {
                estack.push((u, v));
                low[u] = low[u].min(disc[v]);
            }
        } else {
            frames.pop();
            if let Some(&(p, _, _)) = frames.last() {
                low[p] = low[p].min(low[u]);
                if low[u] >= disc[p] {
                    let mut verts = BTreeSet::new();
                    while let Some(&(a, b)) = estack.last() {
                        estack.pop();
                        verts.insert(a);
                        verts.insert(b);
                        if (a, b) == (p, u) {
                            break;
                        }
                    }
                    blocks.push(verts.into_iter().collect());
                    if p != root {
                        is_cut[p] = true;
                    }
                }
            }
        }
    }
    if root_children >= 2 {
        is_cut[root] = true;
    }
    if blocks.is_empty() {
        // single vertex, no edges
        blocks.push(vec![root]);
    }
    blocks.sort();
    Ok((blocks, is_cut))
}

fn induces_clique(g: &Graph, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// True iff every biconnected component of the (connected) graph is a clique.
pub fn is_block_graph(g: &Graph) -> Result<bool, Error> {
    let (blocks, _) = blocks_and_cut_vertices(g)?;
    Ok(blocks.iter().all(|b| induces_clique(g, b)))
}

/// Refined cut-tree of a connected block graph with at least two blocks,
/// rooted at a cut vertex.
#[derive(Debug)]
pub struct RefinedCutTree {
    nodes: Vec<CutTreeNode>,
    root: NodeId,
}

impl RefinedCutTree {
    /// Builds the tree rooted at the lowest-id cut vertex.
    pub fn build(g: &Graph) -> Result<Self, Error> {
        Self::build_inner(g, None)
    }

    /// Builds the tree rooted at the given cut vertex.
    pub fn build_rooted(g: &Graph, root_vertex: usize) -> Result<Self, Error> {
        Self::build_inner(g, Some(root_vertex))
    }

    fn build_inner(g: &Graph, root_vertex: Option<usize>) -> Result<Self, Error> {
        let (blocks, is_cut) = blocks_and_cut_vertices(g)?;
        if !blocks.iter().all(|b| induces_clique(g, b)) {
            return Err(Error::NotInClass { class: "block" });
        }
        if blocks.len() < 2 {
            return Err(Error::SingleBlock);
        }
        let cut_vertices: Vec<usize> = (0..g.n()).filter(|&v| is_cut[v]).collect();
        let root_vertex = match root_vertex {
            Some(v) => {
                if !is_cut[v] {
                    return Err(Error::Invalid(format!("vertex {v} is not a cut vertex")));
                }
                v
            }
            None => cut_vertices[0],
        };

        // cut nodes first (ascending vertex id), then block nodes (canonical
        // block order); child lists sorted by node id therefore give
        // deterministic traversals.
        let mut nodes: Vec<CutTreeNode> = Vec::with_capacity(cut_vertices.len() + blocks.len());
        let mut cut_node_of = vec![usize::MAX; g.n()];
        for &v in &cut_vertices {
            cut_node_of[v] = nodes.len();
            nodes.push(CutTreeNode {
                kind: NodeKind::Cut { vertex: v },
                parent: None,
                children: Vec::new(),
            });
        }
        let block_offset = nodes.len();
        for (bi, verts) in blocks.iter().enumerate() {
            let b_set: Vec<usize> = verts.iter().copied().filter(|&v| !is_cut[v]).collect();
            nodes.push(CutTreeNode {
                kind: NodeKind::Block {
                    block: bi,
                    b_set,
                    full_block: verts.clone(),
                },
                parent: None,
                children: Vec::new(),
            });
        }

        let mut adj: Vec<Vec<NodeId>> = vec![Vec::new(); nodes.len()];
        for (bi, verts) in blocks.iter().enumerate() {
            let bnode = block_offset + bi;
            for &v in verts {
                if is_cut[v] {
                    adj[cut_node_of[v]].push(bnode);
                    adj[bnode].push(cut_node_of[v]);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }

        let root = cut_node_of[root_vertex];
        let mut seen = vec![false; nodes.len()];
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    nodes[v].parent = Some(u);
                    nodes[u].children.push(v);
                    queue.push_back(v);
                }
            }
        }
        debug_assert!(seen.iter().all(|&s| s));
        Ok(RefinedCutTree { nodes, root })
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn nodes(&self) -> &[CutTreeNode] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &CutTreeNode {
        &self.nodes[id]
    }

    pub fn cut_node(&self, vertex: usize) -> Option<NodeId> {
        self.nodes
            .iter()
            .position(|n| matches!(n.kind, NodeKind::Cut { vertex: v } if v == vertex))
    }

    /// Block node whose full block equals `verts` (sorted).
    pub fn block_node(&self, verts: &[usize]) -> Option<NodeId> {
        self.nodes.iter().position(
            |n| matches!(&n.kind, NodeKind::Block { full_block, .. } if full_block == verts),
        )
    }

    fn post_order(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![self.root];
        while let Some(u) = stack.pop() {
            order.push(u);
            stack.extend_from_slice(&self.nodes[u].children);
        }
        order.reverse();
        order
    }

    /// Evaluates all parameters bottom-up; `result[id]` are node `id`'s values.
    pub fn evaluate(&self) -> Vec<DpValues> {
        let mut values: Vec<DpValues> = vec![DpValues::default(); self.nodes.len()];
        for id in self.post_order() {
            let node = &self.nodes[id];
            let child_values: Vec<DpValues> = node
                .children
                .iter()
                .map(|&c| values[c].clone())
                .collect();
            let dv = match &node.kind {
                NodeKind::Block { .. } if node.children.is_empty() => dp_leaf_block(node),
                NodeKind::Block { .. } => dp_block_vertex(node, &child_values),
                NodeKind::Cut { .. } => dp_cut_vertex(node, &child_values),
            }
            .expect("tree construction guarantees rule preconditions");
            values[id] = dv;
        }
        values
    }

    /// Expands the stored backpointers into the witness vertex set for the
    /// given node and parameter.
    pub fn reconstruct(&self, values: &[DpValues], node: NodeId, param: Param) -> VertexSet {
        let mut out = VertexSet::new();
        let mut stack = vec![(node, param)];
        while let Some((id, p)) = stack.pop() {
            let entry = values[id].entry(p).expect("parameter defined at node");
            debug_assert!(entry.cost.is_finite(), "cannot reconstruct an infeasible value");
            match &entry.plan {
                Plan::Explicit(vs) => out.extend_from(vs),
                Plan::Alias(p2) => stack.push((id, *p2)),
                Plan::Combine { local, parts } => {
                    out.extend_from(local);
                    for &(pos, cp) in parts {
                        stack.push((self.nodes[id].children[pos], cp));
                    }
                }
            }
        }
        out
    }
}

impl VertexSet {
    fn extend_from(&mut self, vs: &[usize]) {
        for &v in vs {
            self.insert(v);
        }
    }
}

/// Leaf rule. A leaf of the tree is always a block node with a non-empty
/// non-cut set.
pub fn dp_leaf_block(node: &CutTreeNode) -> Result<DpValues, Error> {
    let b_set = match &node.kind {
        NodeKind::Block { b_set, .. } => b_set,
        NodeKind::Cut { .. } => {
            return Err(Error::Invalid("leaf rule requires a block node".into()))
        }
    };
    if !node.children.is_empty() {
        return Err(Error::Invalid("leaf rule applied to a non-leaf node".into()));
    }
    if b_set.is_empty() {
        return Err(Error::Invalid(
            "leaf block node must have a non-empty non-cut set".into(),
        ));
    }
    let single = b_set.len() == 1;
    let b0 = b_set[0];
    let one = Cost::finite(1);
    let mut dv = DpValues::default();
    if single {
        dv.set(Param::A, one, Plan::Explicit(vec![b0]));
        dv.set(Param::F, Cost::INF, Plan::Explicit(Vec::new()));
        dv.set(Param::I, Cost::INF, Plan::Explicit(Vec::new()));
    } else {
        dv.set(Param::A, Cost::finite(0), Plan::Explicit(Vec::new()));
        dv.set(Param::F, one, Plan::Explicit(vec![b0]));
        dv.set(Param::I, one, Plan::Explicit(vec![b0]));
    }
    dv.set(Param::B, one, Plan::Explicit(vec![b0]));
    dv.set(Param::H, one, Plan::Explicit(vec![b0]));
    Ok(dv)
}

fn need(values: &DpValues, i: usize, p: Param) -> Result<Cost, Error> {
    values
        .cost(p)
        .ok_or_else(|| Error::Invalid(format!("child {i} lacks parameter {p:?}")))
}

/// Cut-vertex rule. Children are block nodes.
pub fn dp_cut_vertex(node: &CutTreeNode, child_values: &[DpValues]) -> Result<DpValues, Error> {
    let vertex = match node.kind {
        NodeKind::Cut { vertex } => vertex,
        NodeKind::Block { .. } => {
            return Err(Error::Invalid("cut rule requires a cut node".into()))
        }
    };
    let k = child_values.len();
    if k == 0 {
        return Err(Error::Invalid(
            "cut node must have at least one block child".into(),
        ));
    }
    let mut a = Vec::with_capacity(k);
    let mut b = Vec::with_capacity(k);
    let mut f = Vec::with_capacity(k);
    let mut h = Vec::with_capacity(k);
    let mut i_in_out = Vec::with_capacity(k);
    for (i, cv) in child_values.iter().enumerate() {
        a.push(need(cv, i, Param::A)?);
        b.push(need(cv, i, Param::B)?);
        f.push(need(cv, i, Param::F)?);
        h.push(need(cv, i, Param::H)?);
        i_in_out.push(need(cv, i, Param::I)?);
    }

    let mut dv = DpValues::default();
    let all_b = |p: Param| (0..k).map(|i| (i, p)).collect::<Vec<_>>();

    // A: the cut vertex joins the set and dominates all its blocks.
    let a_cost = SumExcl::new(a.iter().copied()).total().add(Cost::finite(1));
    dv.set(
        Param::A,
        a_cost,
        Plan::Combine {
            local: vec![vertex],
            parts: all_b(Param::A),
        },
    );

    let b_sum = SumExcl::new(b.iter().copied());

    // B: either one block supplies both a dominator and an outside neighbor
    // for the cut vertex, or two distinct blocks split the roles.
    let mut phi = (Cost::INF, 0usize);
    for i in 0..k {
        let c = i_in_out[i].add(b_sum.excl(b[i]));
        if c < phi.0 {
            phi = (c, i);
        }
    }
    let mut psi = (Cost::INF, (0usize, 0usize));
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let c = f[i].add(h[j]).add(b_sum.excl2(b[i], b[j]));
            if c < psi.0 {
                psi = (c, (i, j));
            }
        }
    }
    if phi.0 <= psi.0 {
        let mut parts = all_b(Param::B);
        parts[phi.1] = (phi.1, Param::I);
        dv.set(
            Param::B,
            phi.0,
            Plan::Combine {
                local: Vec::new(),
                parts,
            },
        );
    } else {
        let (i, j) = psi.1;
        let mut parts = all_b(Param::B);
        parts[i] = (i, Param::F);
        parts[j] = (j, Param::H);
        dv.set(
            Param::B,
            psi.0,
            Plan::Combine {
                local: Vec::new(),
                parts,
            },
        );
    }

    // C: one block leaves a vertex out to serve as the cut vertex's outside
    // neighbor; domination of the cut vertex is not required.
    let mut c_best = (Cost::INF, 0usize);
    for i in 0..k {
        let c = f[i].add(b_sum.excl(b[i]));
        if c < c_best.0 {
            c_best = (c, i);
        }
    }
    let mut parts = all_b(Param::B);
    parts[c_best.1] = (c_best.1, Param::F);
    dv.set(
        Param::C,
        c_best.0,
        Plan::Combine {
            local: Vec::new(),
            parts,
        },
    );

    // D: every block solved with the relaxed boundary condition.
    dv.set(
        Param::D,
        b_sum.total(),
        Plan::Combine {
            local: Vec::new(),
            parts: all_b(Param::B),
        },
    );

    // E: the cut vertex must be dominated from below. A non-empty child
    // block dominates it for free; otherwise one child must commit a block
    // vertex to the set.
    let all_children_empty = child_values.iter().all(|cv| cv.cost(Param::D).is_some());
    if !all_children_empty {
        dv.set(
            Param::E,
            b_sum.total(),
            Plan::Combine {
                local: Vec::new(),
                parts: all_b(Param::B),
            },
        );
    } else {
        let mut e_best = (Cost::INF, 0usize);
        for (i, cv) in child_values.iter().enumerate() {
            let di = need(cv, i, Param::D)?;
            let c = di.add(b_sum.excl(b[i]));
            if c < e_best.0 {
                e_best = (c, i);
            }
        }
        let mut parts = all_b(Param::B);
        parts[e_best.1] = (e_best.1, Param::D);
        dv.set(
            Param::E,
            e_best.0,
            Plan::Combine {
                local: Vec::new(),
                parts,
            },
        );
    }
    Ok(dv)
}

/// Non-leaf block rule. Children are cut nodes.
pub fn dp_block_vertex(node: &CutTreeNode, child_values: &[DpValues]) -> Result<DpValues, Error> {
    let b_set = match &node.kind {
        NodeKind::Block { b_set, .. } => b_set.clone(),
        NodeKind::Cut { .. } => {
            return Err(Error::Invalid("block rule requires a block node".into()))
        }
    };
    let p = child_values.len();
    if p == 0 {
        return Err(Error::Invalid(
            "non-leaf block node must have cut children".into(),
        ));
    }
    let mut a = Vec::with_capacity(p);
    let mut c = Vec::with_capacity(p);
    let mut d = Vec::with_capacity(p);
    let mut e = Vec::with_capacity(p);
    for (i, cv) in child_values.iter().enumerate() {
        a.push(need(cv, i, Param::A)?);
        c.push(need(cv, i, Param::C)?);
        d.push(need(cv, i, Param::D)?);
        e.push(need(cv, i, Param::E)?);
    }
    // per-child best of "child in the set" (A) vs "child out, boundary
    // relaxed" (D); ties prefer A
    let min_ad: Vec<(Cost, Param)> = (0..p)
        .map(|i| {
            if a[i] <= d[i] {
                (a[i], Param::A)
            } else {
                (d[i], Param::D)
            }
        })
        .collect();
    let minad_sum = SumExcl::new(min_ad.iter().map(|&(c, _)| c));
    let a_sum = SumExcl::new(a.iter().copied());
    let e_sum = SumExcl::new(e.iter().copied());

    let minad_parts = |overrides: &[(usize, Param)]| -> Vec<(usize, Param)> {
        let mut parts: Vec<(usize, Param)> =
            min_ad.iter().enumerate().map(|(i, &(_, pa))| (i, pa)).collect();
        for &(i, pa) in overrides {
            parts[i] = (i, pa);
        }
        parts
    };
    let uniform = |pa: Param| (0..p).map(|i| (i, pa)).collect::<Vec<_>>();
    let combine = |local: Vec<usize>, parts: Vec<(usize, Param)>| Plan::Combine { local, parts };

    let b_len = b_set.len();
    let mut dv = DpValues::default();

    // Parameter A: block vertices need no domination (the parent cut vertex
    // is in the set), but everyone outside the set needs an outside neighbor.
    if b_len >= 2 {
        // two non-cut block vertices stay out and serve each other
        dv.set(
            Param::A,
            minad_sum.total(),
            combine(Vec::new(), minad_parts(&[])),
        );
    } else if b_len == 1 {
        // the lone block vertex stays out: some child must also stay out
        let mut d1 = (Cost::INF, 0usize);
        for i in 0..p {
            let cost = d[i].add(minad_sum.excl(min_ad[i].0));
            if cost < d1.0 {
                d1 = (cost, i);
            }
        }
        // or the block vertex joins the set: all children must join too
        let d2 = a_sum.total().add(Cost::finite(1));
        if d1.0 <= d2 {
            dv.set(
                Param::A,
                d1.0,
                combine(Vec::new(), minad_parts(&[(d1.1, Param::D)])),
            );
        } else {
            dv.set(Param::A, d2, combine(vec![b_set[0]], uniform(Param::A)));
        }
    } else if p == 1 {
        // empty block, single child: the child is in the set or supplies its
        // own outside neighbor from below
        if a[0] <= c[0] {
            dv.set(
                Param::A,
                a[0],
                combine(Vec::new(), vec![(0, Param::A)]),
            );
        } else {
            dv.set(
                Param::A,
                c[0],
                combine(Vec::new(), vec![(0, Param::C)]),
            );
        }
    } else {
        // empty block, several children: all in the set / exactly one out /
        // at least two out (they serve each other)
        let d1 = a_sum.total();
        let mut d2 = (Cost::INF, 0usize);
        for i in 0..p {
            let cost = c[i].add(a_sum.excl(a[i]));
            if cost < d2.0 {
                d2 = (cost, i);
            }
        }
        let mut d3 = (Cost::INF, (0usize, 0usize));
        for i in 0..p {
            for j in i + 1..p {
                let cost = d[i].add(d[j]).add(minad_sum.excl2(min_ad[i].0, min_ad[j].0));
                if cost < d3.0 {
                    d3 = (cost, (i, j));
                }
            }
        }
        if d1 <= d2.0 && d1 <= d3.0 {
            dv.set(Param::A, d1, combine(Vec::new(), uniform(Param::A)));
        } else if d2.0 <= d3.0 {
            let mut parts = uniform(Param::A);
            parts[d2.1] = (d2.1, Param::C);
            dv.set(Param::A, d2.0, combine(Vec::new(), parts));
        } else {
            let (i, j) = d3.1;
            dv.set(
                Param::A,
                d3.0,
                combine(Vec::new(), minad_parts(&[(i, Param::D), (j, Param::D)])),
            );
        }
    }

    // Shared sub-expression: one child joins the set and dominates the whole
    // block; the rest take their best of A and D.
    let mut one_child_in = (Cost::INF, 0usize);
    for i in 0..p {
        let cost = a[i].add(minad_sum.excl(min_ad[i].0));
        if cost < one_child_in.0 {
            one_child_in = (cost, i);
        }
    }
    let one_child_in_plan = || combine(Vec::new(), minad_parts(&[(one_child_in.1, Param::A)]));

    // Parameter B: dominate the whole subgraph; block vertices are exempt
    // from the outside-neighbor condition (the parent cut vertex is outside).
    if b_len >= 1 {
        let d1 = minad_sum.total().add(Cost::finite(1));
        if d1 <= one_child_in.0 {
            dv.set(Param::B, d1, combine(vec![b_set[0]], minad_parts(&[])));
        } else {
            dv.set(Param::B, one_child_in.0, one_child_in_plan());
        }
    } else {
        // empty block: either no child joins (each dominated from below) or
        // some child joins and dominates the block
        let d1 = e_sum.total();
        if d1 <= one_child_in.0 {
            dv.set(Param::B, d1, combine(Vec::new(), uniform(Param::E)));
        } else {
            dv.set(Param::B, one_child_in.0, one_child_in_plan());
        }
    }

    if b_len == 0 {
        // E: one child in the set, one out (p = 1 cannot satisfy both).
        let e_entry;
        if p == 1 {
            e_entry = (Cost::INF, (0usize, 0usize));
        } else {
            let mut best = (Cost::INF, (0usize, 0usize));
            for i in 0..p {
                for j in 0..p {
                    if i == j {
                        continue;
                    }
                    let cost = a[i].add(d[j]).add(minad_sum.excl2(min_ad[i].0, min_ad[j].0));
                    if cost < best.0 {
                        best = (cost, (i, j));
                    }
                }
            }
            e_entry = best;
        }
        let (i, j) = e_entry.1;
        dv.set(
            Param::E,
            e_entry.0,
            combine(Vec::new(), minad_parts(&[(i, Param::A), (j, Param::D)])),
        );

        // D: at least one child in the set.
        dv.set(Param::D, one_child_in.0, one_child_in_plan());

        // C: at least one child out of the set; either none are in (all
        // dominated from below) or both kinds occur (parameter E).
        let d1 = e_sum.total();
        let e_cost = dv.cost(Param::E).unwrap();
        if d1 <= e_cost {
            dv.set(Param::C, d1, combine(Vec::new(), uniform(Param::E)));
        } else {
            dv.set(Param::C, e_cost, Plan::Alias(Param::E));
        }

        dv.set(Param::F, dv.cost(Param::C).unwrap(), Plan::Alias(Param::C));
        dv.set(Param::H, dv.cost(Param::D).unwrap(), Plan::Alias(Param::D));
        dv.set(Param::I, dv.cost(Param::E).unwrap(), Plan::Alias(Param::E));
    } else {
        let b_cost = dv.cost(Param::B).unwrap();
        dv.set(Param::F, b_cost, Plan::Alias(Param::B));
        dv.set(Param::H, b_cost, Plan::Alias(Param::B));
        dv.set(Param::I, b_cost, Plan::Alias(Param::B));
    }
    Ok(dv)
}

/// Minimum restrained dominating set of a connected block graph.
pub fn solve_block_graph(g: &Graph) -> Result<RdsResult, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_block_graph(g)? {
        return Err(Error::NotInClass { class: "block" });
    }
    let n = g.n();
    if n <= 2 {
        // K1 and K2: the whole vertex set is the only restrained dominating set
        return Ok(RdsResult {
            gamma_r: n,
            witness: VertexSet::full(n),
            method: Method::BlockDp,
        });
    }
    match RefinedCutTree::build(g) {
        Err(Error::SingleBlock) => {
            // a single block is a complete graph: any one vertex works
            let witness: VertexSet = [0usize].into_iter().collect();
            Ok(RdsResult {
                gamma_r: 1,
                witness,
                method: Method::BlockDp,
            })
        }
        Err(e) => Err(e),
        Ok(tree) => {
            let values = tree.evaluate();
            let root = tree.root();
            let a = values[root].cost(Param::A).unwrap();
            let b = values[root].cost(Param::B).unwrap();
            let (best, param) = if a <= b { (a, Param::A) } else { (b, Param::B) };
            let gamma_r = best
                .value()
                .expect("a block graph always has a restrained dominating set");
            let witness = tree.reconstruct(&values, root, param);
            debug_assert_eq!(witness.len(), gamma_r);
            Ok(RdsResult {
                gamma_r,
                witness,
                method: Method::BlockDp,
            })
        }
    }
}
