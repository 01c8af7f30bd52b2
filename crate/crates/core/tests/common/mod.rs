//! Instance generators and fixtures shared by the integration tests.

#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use restrained_domination::reductions::X3cInstance;
use restrained_domination::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    Graph::from_edges(n, e).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

/// 14-vertex block graph with seven blocks, the worked example of the block
/// solver: cliques {5,6,7}, {2,3,4,5}, {1,2}, {7,8,9,10}, {10,11}, {11,12},
/// {9,13,14} on 1-based ids.
pub fn seven_block_graph() -> Graph {
    let cliques: [&[usize]; 7] = [
        &[5, 6, 7],
        &[2, 3, 4, 5],
        &[1, 2],
        &[7, 8, 9, 10],
        &[10, 11],
        &[11, 12],
        &[9, 13, 14],
    ];
    let mut edges = Vec::new();
    for cl in cliques {
        for (i, &u) in cl.iter().enumerate() {
            for &v in &cl[i + 1..] {
                edges.push((u - 1, v - 1));
            }
        }
    }
    Graph::from_edges(14, edges).unwrap()
}

/// q = 2 instance over six elements with five triples and an exact cover.
pub fn reference_x3c_instance() -> X3cInstance {
    X3cInstance::new(
        2,
        vec![[0, 3, 5], [0, 1, 4], [1, 2, 4], [1, 3, 5], [2, 4, 5]],
    )
    .unwrap()
}

/// Connected block graph on exactly `n` vertices: a tree of cliques, each
/// new clique glued at a random existing vertex.
pub fn random_connected_block_graph(rng: &mut ChaCha8Rng, n: usize, max_block: usize) -> Graph {
    assert!(n >= 1);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let first = (rng.gen_range(2..=max_block.max(2))).min(n);
    let mut next = first;
    let clique = |verts: &[usize], edges: &mut Vec<(usize, usize)>| {
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                edges.push((u, v));
            }
        }
    };
    clique(&(0..first).collect::<Vec<_>>(), &mut edges);
    while next < n {
        let size = rng.gen_range(2..=max_block.max(2)).min(n - next + 1);
        let attach = rng.gen_range(0..next);
        let mut verts = vec![attach];
        verts.extend(next..next + size - 1);
        next += size - 1;
        clique(&verts, &mut edges);
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Connected threshold graph: a creation sequence of isolated/dominating
/// additions ending with a dominating vertex.
pub fn random_threshold_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    assert!(n >= 2);
    let mut edges = Vec::new();
    for v in 1..n {
        let dominating = v == n - 1 || rng.gen_bool(0.5);
        if dominating {
            for u in 0..v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random cograph on `n` vertices by a random recursive union/join split.
/// May be disconnected (top-level unions) and can produce edgeless sides.
pub fn random_cograph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    fn rec(rng: &mut ChaCha8Rng, verts: &[usize], join: bool, edges: &mut Vec<(usize, usize)>) {
        if verts.len() <= 1 {
            return;
        }
        // random split into two nonempty parts
        let cut = rng.gen_range(1..verts.len());
        let mut shuffled = verts.to_vec();
        shuffled.shuffle(rng);
        let (left, right) = shuffled.split_at(cut);
        if join {
            for &u in left {
                for &v in right {
                    edges.push((u, v));
                }
            }
        }
        // flip the operation most of the time, keeping some multiway nodes
        let flip_l = rng.gen_bool(0.8);
        let flip_r = rng.gen_bool(0.8);
        rec(rng, left, join ^ flip_l, edges);
        rec(rng, right, join ^ flip_r, edges);
    }
    let verts: Vec<usize> = (0..n).collect();
    let mut edges = Vec::new();
    let top_join = rng.gen_bool(0.6);
    rec(rng, &verts, top_join, &mut edges);
    Graph::from_edges(n, edges).unwrap()
}

/// Connected chain graph with both sides non-empty (when `n >= 2`): nested
/// neighborhoods with the largest X-vertex adjacent to all of Y.
pub fn random_chain_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    assert!(n >= 2);
    let p = rng.gen_range(1..n);
    let q = n - p;
    // non-decreasing thresholds, last one = q so the graph is connected
    let mut t: Vec<usize> = (0..p).map(|_| rng.gen_range(1..=q)).collect();
    t.sort_unstable();
    t[p - 1] = q;
    let mut edges = Vec::new();
    for (i, &ti) in t.iter().enumerate() {
        for j in 0..ti {
            edges.push((i, p + j));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Connected graph: random attachment tree plus extra random edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra_prob: f64) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(extra_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// All labeled graphs on `n` vertices, as edge bitmasks over the pairs
/// `(0,1), (0,2), (1,2), (0,3), …` (column-major by larger endpoint).
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Random X3C instance with q = 2 over six elements; `planted` forces an
/// exact cover to exist.
pub fn random_x3c_instance(rng: &mut ChaCha8Rng, m: usize, planted: bool) -> X3cInstance {
    assert!((2..=6).contains(&m));
    let mut triples: Vec<[usize; 3]> = Vec::new();
    if planted {
        let mut elems: Vec<usize> = (0..6).collect();
        elems.shuffle(rng);
        triples.push([elems[0], elems[1], elems[2]]);
        triples.push([elems[3], elems[4], elems[5]]);
    }
    while triples.len() < m {
        let mut elems: Vec<usize> = (0..6).collect();
        elems.shuffle(rng);
        let t = [elems[0], elems[1], elems[2]];
        let mut canon = t;
        canon.sort_unstable();
        if !triples.iter().any(|existing| {
            let mut e = *existing;
            e.sort_unstable();
            e == canon
        }) {
            triples.push(t);
        }
    }
    triples.shuffle(rng);
    X3cInstance::new(2, triples).unwrap()
}
