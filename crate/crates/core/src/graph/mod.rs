//! Finite undirected multigraphs with dense vertex ids and the generic
//! algorithms the rest of the crate is built on.

mod color;
mod cycles;
mod format;
mod iso;

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

pub use color::{chromatic_number_small, is_bipartite};
pub use cycles::{enumerate_cycles_upto, Cycle};
pub use format::{parse_graph, write_graph, ParseError};
pub use iso::{automorphism_orbits, isomorphic, isomorphic_fixing};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index} = ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { index: usize, u: usize, v: usize, n: usize },
    #[error("edge id {0} does not exist")]
    NoSuchEdge(EdgeId),
}

/// Undirected multigraph. Edges keep the id of their position in the input
/// list; loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    // (neighbour, edge id); a loop appears twice in its vertex's list
    adj: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut stored = Vec::with_capacity(edges.len());
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { index, u, v, n });
            }
            stored.push((u.min(v), u.max(v)));
        }
        let adj = build_adjacency(n, &stored);
        Ok(Graph { n, edges: stored, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of an edge, smaller id first.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// Degree counting a loop twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    /// First edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        let c = self.adj[u].iter().filter(|&&(w, _)| w == v).count();
        if u == v {
            c / 2
        } else {
            c
        }
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// First parallel pair found, as the two edge ids.
    pub fn first_parallel_pair(&self) -> Option<(EdgeId, EdgeId)> {
        let mut seen: BTreeMap<(VertexId, VertexId), EdgeId> = BTreeMap::new();
        for (e, &key) in self.edges.iter().enumerate() {
            if key.0 == key.1 {
                continue;
            }
            if let Some(&f) = seen.get(&key) {
                return Some((f, e));
            }
            seen.insert(key, e);
        }
        None
    }

    pub fn is_simple(&self) -> bool {
        self.loop_count() == 0 && self.first_parallel_pair().is_none()
    }

    /// Checks that the stored adjacency index matches a fresh rebuild from the
    /// edge list.
    pub fn adjacency_consistent(&self) -> bool {
        let mut fresh = build_adjacency(self.n, &self.edges);
        let mut ours = self.adj.clone();
        for list in fresh.iter_mut().chain(ours.iter_mut()) {
            list.sort_unstable();
        }
        fresh == ours
    }

    /// BFS distances from `s`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, s: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Row-major all-pairs distance table.
    pub fn all_distances(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|s| self.distances_from(s)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(|&d| d != usize::MAX)
    }

    /// Length of a shortest cycle: a loop counts 1, a parallel pair 2, `None`
    /// for forests.
    pub fn girth(&self) -> Option<usize> {
        if self.loop_count() > 0 {
            return Some(1);
        }
        if self.first_parallel_pair().is_some() {
            return Some(2);
        }
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut via = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            via[s] = usize::MAX;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] >= b {
                        break 'bfs;
                    }
                }
                for &(w, e) in &self.adj[u] {
                    if e == via[u] {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        via[w] = e;
                        queue.push_back(w);
                    } else {
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Identifies the endpoints of every edge in `set`. The contracted edges
    /// disappear; every other edge survives, possibly as a loop or a parallel
    /// copy. New vertex ids follow the order of the smallest old id in each
    /// class.
    pub fn contract_edges(&self, set: &[EdgeId]) -> Result<Contraction, GraphError> {
        let mut uf = UnionFind::new(self.n);
        let mut contracted = vec![false; self.edges.len()];
        for &e in set {
            let &(u, v) = self.edges.get(e).ok_or(GraphError::NoSuchEdge(e))?;
            contracted[e] = true;
            if u != v {
                uf.union(u, v);
            }
        }
        let mut new_id = vec![usize::MAX; self.n];
        let mut projection = vec![0; self.n];
        let mut count = 0;
        for v in 0..self.n {
            let r = uf.find(v);
            if new_id[r] == usize::MAX {
                new_id[r] = count;
                count += 1;
            }
            projection[v] = new_id[r];
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if contracted[e] {
                continue;
            }
            edges.push((projection[u], projection[v]));
            origin.push(e);
        }
        let graph = Graph::new(count, &edges).expect("projection stays in range");
        Ok(Contraction { graph, projection, edge_origin: origin })
    }

    /// Drops loops and keeps the lowest-id edge of each parallel class.
    pub fn simplify(&self) -> Graph {
        self.simplify_tracked().0
    }

    /// Like [`Graph::simplify`], also returning for each kept edge the id it
    /// had in `self`.
    pub fn simplify_tracked(&self) -> (Graph, Vec<EdgeId>) {
        let mut seen = std::collections::HashSet::new();
        let mut edges = Vec::new();
        let mut kept = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if u != v && seen.insert((u, v)) {
                edges.push((u, v));
                kept.push(e);
            }
        }
        (Graph::new(self.n, &edges).expect("same vertex set"), kept)
    }

    /// Graph with vertices renamed by `perm` (old id -> new id); edge order
    /// is preserved.
    pub fn relabeled(&self, perm: &[VertexId]) -> Graph {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges).expect("permutation stays in range")
    }

    /// Sorted multiset of normalised edges; handy for structural equality.
    pub fn edge_multiset(&self) -> Vec<(VertexId, VertexId)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[VertexId]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]))
            .collect();
        Graph::new(vertices.len(), &edges).expect("induced ids in range")
    }
}

fn build_adjacency(n: usize, edges: &[(VertexId, VertexId)]) -> Vec<Vec<(VertexId, EdgeId)>> {
    let mut adj = vec![Vec::new(); n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, e));
        adj[v].push((u, e));
    }
    adj
}

/// Result of [`Graph::contract_edges`].
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: Graph,
    /// old vertex id -> new vertex id
    pub projection: Vec<VertexId>,
    /// new edge id -> old edge id
    pub edge_origin: Vec<EdgeId>,
}

#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// Small named graphs used in tests and examples.
pub mod named {
    use super::Graph;

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &edges).unwrap()
    }

    pub fn octahedron() -> Graph {
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if v != u + 3 {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(6, &edges).unwrap()
    }

    pub fn icosahedron() -> Graph {
        // top 0, upper ring 1..=5, lower ring 6..=10, bottom 11
        let mut edges = Vec::new();
        for i in 0..5 {
            let up = 1 + i;
            let up_next = 1 + (i + 1) % 5;
            let low = 6 + i;
            let low_next = 6 + (i + 1) % 5;
            edges.push((0, up));
            edges.push((up, up_next));
            edges.push((up, low));
            edges.push((up_next, low));
            edges.push((low, low_next));
            edges.push((low, 11));
        }
        Graph::new(12, &edges).unwrap()
    }

    /// Rectangular `rows x cols` grid, vertex `(i, j)` at `i * cols + j`.
    pub fn grid(rows: usize, cols: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..rows {
            for j in 0..cols {
                let v = i * cols + j;
                if j + 1 < cols {
                    edges.push((v, v + 1));
                }
                if i + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Graph::new(rows * cols, &edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn construction_basics() {
        let g = Graph::new(0, &[]).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);

        let c6 = cycle(6);
        assert!(c6.is_regular(2));
        assert!(c6.adjacency_consistent());

        let k4 = complete(4);
        assert!(k4.is_regular(3));
        assert_eq!(k4.edge_count(), 6);
    }

    #[test]
    fn out_of_range_endpoint_is_named() {
        let err = Graph::new(3, &[(0, 1), (1, 3)]).unwrap_err();
        assert_eq!(err, GraphError::EndpointOutOfRange { index: 1, u: 1, v: 3, n: 3 });
        assert!(err.to_string().contains("(1, 3)"));
    }

    #[test]
    fn girth_values() {
        assert_eq!(cycle(6).girth(), Some(6));
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(complete(4).girth(), Some(3));
        assert_eq!(path(5).girth(), None);
        let multi = Graph::new(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(multi.girth(), Some(2));
        let looped = Graph::new(2, &[(0, 1), (1, 1)]).unwrap();
        assert_eq!(looped.girth(), Some(1));
        assert_eq!(grid(3, 3).girth(), Some(4));
    }

    #[test]
    fn contraction_of_cycles() {
        let c6 = cycle(6);
        let one = c6.contract_edges(&[0]).unwrap();
        assert_eq!(one.graph.vertex_count(), 5);
        assert!(isomorphic(&one.graph, &cycle(5)).is_some());

        let matching = c6.contract_edges(&[0, 2, 4]).unwrap();
        assert_eq!(matching.graph.vertex_count(), 3);
        assert!(isomorphic(&matching.graph, &complete(3)).is_some());

        let none = c6.contract_edges(&[]).unwrap();
        assert!(isomorphic(&none.graph, &c6).is_some());
    }

    #[test]
    fn contraction_keeps_parallels_and_loops() {
        // triangle: contracting one edge leaves a double edge
        let t = complete(3);
        let c = t.contract_edges(&[0]).unwrap();
        assert_eq!(c.graph.vertex_count(), 2);
        assert_eq!(c.graph.edge_count(), 2);
        assert_eq!(c.graph.multiplicity(0, 1), 2);
        // contracting two triangle edges turns the third into a loop
        let c = t.contract_edges(&[0, 1]).unwrap();
        assert_eq!(c.graph.vertex_count(), 1);
        assert_eq!(c.graph.loop_count(), 1);
        // loops in the set are just removed
        let g = Graph::new(2, &[(0, 1), (1, 1)]).unwrap();
        let c = g.contract_edges(&[1]).unwrap();
        assert_eq!(c.graph.vertex_count(), 2);
        assert_eq!(c.graph.edge_count(), 1);
        assert_eq!(c.edge_origin, vec![0]);
    }

    #[test]
    fn simplify_collapses() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (1, 2), (2, 2)]).unwrap();
        let s = g.simplify();
        assert_eq!(s.edge_multiset(), vec![(0, 1), (1, 2)]);
        assert_eq!(s.vertex_count(), 3);
        let c6 = cycle(6);
        assert_eq!(c6.simplify().edge_multiset(), c6.edge_multiset());
        assert_eq!(s.simplify().edge_multiset(), s.edge_multiset());
    }

    #[test]
    fn named_graphs_shape() {
        assert!(octahedron().is_regular(4));
        assert_eq!(octahedron().edge_count(), 12);
        assert!(icosahedron().is_regular(5));
        assert_eq!(icosahedron().edge_count(), 30);
        assert!(petersen().is_regular(3));
    }
}
