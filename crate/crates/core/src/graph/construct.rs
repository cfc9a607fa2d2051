//! Graph constructions: standard families, products, Cayley and orbital graphs.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;

use super::Graph;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
    Graph::from_edges(n, &edges, false).expect("cycle edges")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges, false).expect("complete edges")
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..m as u32 {
        for v in 0..n as u32 {
            edges.push((u, m as u32 + v));
        }
    }
    Graph::from_edges(m + n, &edges, false).expect("bipartite edges")
}

/// `Q_k` on bit strings; adjacent strings differ in one bit.
pub fn hypercube(k: usize) -> Graph {
    let n = 1u32 << k;
    let mut edges = Vec::new();
    for u in 0..n {
        for b in 0..k {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n as usize, &edges, false).expect("hypercube edges")
}

/// 2-subsets of `{0..5}` in lexicographic order.
pub fn pairs_of_five() -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            out.push((a, b));
        }
    }
    out
}

/// Petersen graph: 2-subsets of a 5-set, adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs = pairs_of_five();
    let mut edges = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        for (j, q) in pairs.iter().enumerate().skip(i + 1) {
            if p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1 {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Graph::from_edges(10, &edges, false).expect("petersen edges")
}

/// Cartesian product; vertex `(x, y)` is `x * |Y| + y`.
pub fn cartesian_product(x: &Graph, y: &Graph) -> Graph {
    let ny = y.order() as u32;
    let mut adj = vec![Vec::new(); x.order() * y.order()];
    for a in 0..x.order() as u32 {
        for b in 0..ny {
            let v = &mut adj[(a * ny + b) as usize];
            v.extend(x.neighbours(a).iter().map(|&a2| a2 * ny + b));
            v.extend(y.neighbours(b).iter().map(|&b2| a * ny + b2));
        }
    }
    Graph::from_adjacency(adj, x.is_directed() || y.is_directed())
}

/// Cartesian power `K_m^k`; vertices are tuples, first coordinate most significant.
pub fn hamming(k: usize, m: usize) -> Graph {
    let km = complete(m);
    let mut g = km.clone();
    for _ in 1..k {
        g = cartesian_product(&g, &km);
    }
    g
}

/// Lexicographic product `X[Y]`: `(x,y) ~ (x',y')` iff `x ~ x'`, or `x = x'`
/// and `y ~ y'`. Vertex `(x, y)` is `x * |Y| + y`.
pub fn lexicographic_product(x: &Graph, y: &Graph) -> Graph {
    let ny = y.order() as u32;
    let mut adj = vec![Vec::new(); x.order() * y.order()];
    for a in 0..x.order() as u32 {
        for b in 0..ny {
            let v = &mut adj[(a * ny + b) as usize];
            for &a2 in x.neighbours(a) {
                v.extend((0..ny).map(|b2| a2 * ny + b2));
            }
            v.extend(y.neighbours(b).iter().map(|&b2| a * ny + b2));
        }
    }
    Graph::from_adjacency(adj, x.is_directed() || y.is_directed())
}

/// Cayley digraph with its vertex labelling by group elements.
#[derive(Clone, Debug)]
pub struct CayleyGraph {
    pub graph: Graph,
    /// Vertex `i` is `elements[i]`; elements are sorted.
    pub elements: Vec<Permutation>,
}

/// `Cay(N, S)`: the arc `(n, n')` is present iff `n n'^-1` lies in `S`.
///
/// Right multiplication by elements of `N` acts by automorphisms. The
/// number of weak components is checked against `|N : <S>|`.
pub fn cayley_digraph(n: &PermGroup, s: &[Permutation]) -> Result<CayleyGraph> {
    for x in s {
        if x.is_identity() {
            return Err(Error::invalid("connection set contains the identity"));
        }
        if !n.contains(x) {
            return Err(Error::NotMember(format!("connection set element {x} is not in the group")));
        }
    }
    let mut elements = n.elements()?;
    elements.sort();
    let index: HashMap<&Permutation, u32> = elements.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
    let s_inv: Vec<Permutation> = s.iter().map(|x| x.inverse()).collect();
    let adj: Vec<Vec<u32>> = elements
        .iter()
        .map(|e| s_inv.iter().map(|si| index[&si.compose(e)]).collect())
        .collect();
    let mut s_set: Vec<&Permutation> = s.iter().collect();
    s_set.sort();
    s_set.dedup();
    let symmetric = s_inv.iter().all(|x| s_set.binary_search(&x).is_ok());
    let graph = Graph::from_adjacency(adj, !symmetric);
    let sub = PermGroup::new(n.degree(), s.to_vec())?;
    let index_ns = n.order() / sub.order();
    if BigUint::from(graph.components().len()) != index_ns {
        return Err(Error::assertion(format!(
            "Cayley digraph has {} components but |N:<S>| = {index_ns}",
            graph.components().len()
        )));
    }
    Ok(CayleyGraph { graph, elements })
}

#[derive(Clone, Debug)]
pub struct OrbitalGraph {
    pub graph: Graph,
    pub self_paired: bool,
}

/// Orbital (di)graph of the arc `(a, b)` under `g`.
///
/// Self-paired orbitals give undirected graphs; otherwise a digraph is
/// returned unless `symmetrize` is set.
pub fn orbital_graph(g: &PermGroup, a: u32, b: u32, symmetrize: bool) -> Result<OrbitalGraph> {
    let n = g.degree();
    if a as usize >= n || b as usize >= n {
        return Err(Error::invalid("orbital base pair out of range"));
    }
    if a == b {
        return Err(Error::invalid("diagonal orbital gives loops"));
    }
    let key = |u: u32, v: u32| (u as u64) << 32 | v as u64;
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(key(a, b));
    let mut queue = vec![(a, b)];
    let mut head = 0;
    while head < queue.len() {
        let (u, v) = queue[head];
        head += 1;
        for s in g.generators() {
            let (u2, v2) = (s.apply(u), s.apply(v));
            if seen.insert(key(u2, v2)) {
                queue.push((u2, v2));
            }
        }
    }
    let self_paired = seen.contains(&key(b, a));
    let undirected = self_paired || symmetrize;
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &queue {
        adj[u as usize].push(v);
        if undirected {
            adj[v as usize].push(u);
        }
    }
    Ok(OrbitalGraph {
        graph: Graph::from_adjacency(adj, !undirected),
        self_paired,
    })
}

#[derive(Clone, Debug)]
pub struct DeltaGraph {
    pub graph: Graph,
    /// Vertex `i` of `graph` is `vertices[i]` of the original graph.
    pub vertices: Vec<u32>,
}

/// Graph on `half` joining vertices at distance at most 2 in `graph`.
///
/// `cross_edges_only` certifies that every edge of `graph` joins `half` to
/// its complement. The claim is checked, and when it holds the valency is
/// asserted to be at most `d(d-1)` where `d` is the valency of `graph`.
pub fn delta_graph(graph: &Graph, half: &[u32], cross_edges_only: bool) -> Result<DeltaGraph> {
    if graph.is_directed() {
        return Err(Error::invalid("distance-two graph needs an undirected graph"));
    }
    let mut vertices = half.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    let mut index = vec![u32::MAX; graph.order()];
    for (i, &v) in vertices.iter().enumerate() {
        if v as usize >= graph.order() {
            return Err(Error::invalid("vertex out of range"));
        }
        index[v as usize] = i as u32;
    }
    if cross_edges_only {
        for (u, v) in graph.edges() {
            if (index[u as usize] == u32::MAX) == (index[v as usize] == u32::MAX) {
                return Err(Error::invalid(format!("edge ({u},{v}) does not cross the halves")));
            }
        }
    }
    let mut adj = vec![Vec::new(); vertices.len()];
    for (i, &u) in vertices.iter().enumerate() {
        for &w in graph.neighbours(u) {
            if index[w as usize] != u32::MAX {
                adj[i].push(index[w as usize]);
            }
            for &x in graph.neighbours(w) {
                if x != u && index[x as usize] != u32::MAX {
                    adj[i].push(index[x as usize]);
                }
            }
        }
    }
    let out = Graph::from_adjacency(adj, false);
    if cross_edges_only {
        let d = graph.max_valency();
        if out.max_valency() > d * d.saturating_sub(1) {
            return Err(Error::assertion(format!(
                "distance-two graph valency {} exceeds d(d-1) = {}",
                out.max_valency(),
                d * d.saturating_sub(1)
            )));
        }
    }
    Ok(DeltaGraph { graph: out, vertices })
}
