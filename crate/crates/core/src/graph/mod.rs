//! Simple graphs and digraphs on `{0, .., n-1}` without loops.

pub mod construct;
pub mod coset;

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest order for which `invariants` computes the diameter.
pub const DIAMETER_LIMIT: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    directed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub vertices: usize,
    pub edges: usize,
    pub directed: bool,
    pub connected: bool,
    pub min_valency: usize,
    pub max_valency: usize,
    pub diameter: Option<u32>,
}

impl Graph {
    /// Builds a graph from an edge (or arc) list. Repeated edges are merged;
    /// loops are rejected.
    pub fn from_edges(n: usize, edges: &[(u32, u32)], directed: bool) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::invalid(format!("edge ({u},{v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            adj[u as usize].push(v);
            if !directed {
                adj[v as usize].push(u);
            }
        }
        Ok(Self::from_adjacency(adj, directed))
    }

    pub(crate) fn from_adjacency(mut adj: Vec<Vec<u32>>, directed: bool) -> Graph {
        for a in adj.iter_mut() {
            a.sort_unstable();
            a.dedup();
        }
        Graph { adj, directed }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Out-neighbours, sorted.
    pub fn neighbours(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges `u < v` for graphs, all arcs for digraphs.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (u, a) in self.adj.iter().enumerate() {
            for &v in a {
                if self.directed || (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let arcs: usize = self.adj.iter().map(|a| a.len()).sum();
        if self.directed {
            arcs
        } else {
            arcs / 2
        }
    }

    /// Common out-degree, if the graph is regular.
    pub fn valency(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, |a| a.len());
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn max_valency(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    /// Weakly connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.order();
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(p: &mut [u32], mut x: u32) -> u32 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        for (u, a) in self.adj.iter().enumerate() {
            for &v in a {
                let (ru, rv) = (find(&mut parent, u as u32), find(&mut parent, v));
                if ru != rv {
                    parent[ru.max(rv) as usize] = ru.min(rv);
                }
            }
        }
        let mut groups: std::collections::BTreeMap<u32, Vec<u32>> = Default::default();
        for v in 0..n as u32 {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        let mut out: Vec<Vec<u32>> = groups.into_values().collect();
        out.sort_by_key(|c| c[0]);
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Distances along out-arcs; unreachable vertices get `u32::MAX`.
    pub fn distances_from(&self, v: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.order()];
        dist[v as usize] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u as usize] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Diameter along out-arcs, `None` if some vertex is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for v in 0..self.order() as u32 {
            let d = self.distances_from(v);
            let m = *d.iter().max().unwrap_or(&0);
            if m == u32::MAX {
                return None;
            }
            best = best.max(m);
        }
        Some(best)
    }

    pub fn is_automorphism(&self, g: &Permutation) -> bool {
        g.degree() == self.order()
            && self.adj.iter().enumerate().all(|(u, a)| {
                let gu = g.apply(u as u32);
                a.iter().all(|&v| self.has_edge(gu, g.apply(v)))
            })
    }

    pub fn invariants(&self) -> GraphInvariants {
        let connected = self.is_connected();
        GraphInvariants {
            vertices: self.order(),
            edges: self.edge_count(),
            directed: self.directed,
            connected,
            min_valency: self.adj.iter().map(|a| a.len()).min().unwrap_or(0),
            max_valency: self.max_valency(),
            diameter: if connected && self.order() <= DIAMETER_LIMIT {
                self.diameter()
            } else {
                None
            },
        }
    }

    /// Subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced_subgraph(&self, vertices: &[u32]) -> Graph {
        let mut index = vec![u32::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v as usize] = i as u32;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v as usize]
                    .iter()
                    .filter_map(|&w| (index[w as usize] != u32::MAX).then_some(index[w as usize]))
                    .collect()
            })
            .collect();
        Graph::from_adjacency(adj, self.directed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_range() {
        assert!(Graph::from_edges(3, &[(1, 1)], false).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)], false).is_err());
    }

    #[test]
    fn cycle_invariants() {
        let c = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)], false).unwrap();
        let inv = c.invariants();
        assert_eq!((inv.edges, inv.min_valency, inv.max_valency, inv.diameter), (5, 2, 2, Some(2)));
        assert!(inv.connected);
        let rot = Permutation::from_images(vec![1, 2, 3, 4, 0]).unwrap();
        assert!(c.is_automorphism(&rot));
        let bad = Permutation::from_images(vec![1, 0, 2, 3, 4]).unwrap();
        assert!(!c.is_automorphism(&bad));
    }

    #[test]
    fn weak_components_of_digraph() {
        let d = Graph::from_edges(4, &[(0, 1), (2, 1), (3, 2)], true);
        let d = d.unwrap();
        assert_eq!(d.components(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(d.diameter(), None);
    }
}
