use std::collections::VecDeque;

use rayon::prelude::*;

use super::{EdgeId, Graph, VertexId};

/// A simple cycle: `edges[i]` joins `vertices[i]` and `vertices[i + 1]`
/// (indices taken cyclically).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl Cycle {
    /// Builds a cycle from a cyclic vertex sequence, taking the first edge
    /// between each consecutive pair. Returns `None` if a pair is not
    /// adjacent or a vertex repeats.
    pub fn from_vertices(g: &Graph, vertices: &[VertexId]) -> Option<Cycle> {
        let len = vertices.len();
        if len == 0 {
            return None;
        }
        let mut seen = vertices.to_vec();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != len {
            return None;
        }
        let mut edges = Vec::with_capacity(len);
        for i in 0..len {
            let (u, v) = (vertices[i], vertices[(i + 1) % len]);
            let e = if len == 2 {
                // the two edges of a 2-cycle must differ
                let mut it = g.incident(u).iter().filter(|&&(w, _)| w == v).map(|&(_, e)| e);
                let first = it.next()?;
                if i == 0 {
                    first
                } else {
                    it.next()?
                }
            } else {
                g.edge_between(u, v)?
            };
            edges.push(e);
        }
        Some(Cycle { vertices: vertices.to_vec(), edges })
    }

    pub(crate) fn from_parts(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Cycle {
        debug_assert_eq!(vertices.len(), edges.len());
        Cycle { vertices, edges }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Rotation starting at the smallest vertex, heading towards its smaller
    /// cycle neighbour.
    pub fn canonical(&self) -> Cycle {
        let len = self.len();
        if len == 0 {
            return self.clone();
        }
        let start = (0..len).min_by_key(|&i| self.vertices[i]).unwrap();
        let next = self.vertices[(start + 1) % len];
        let prev = self.vertices[(start + len - 1) % len];
        let mut vertices = Vec::with_capacity(len);
        let mut edges = Vec::with_capacity(len);
        if next <= prev {
            for k in 0..len {
                vertices.push(self.vertices[(start + k) % len]);
                edges.push(self.edges[(start + k) % len]);
            }
        } else {
            for k in 0..len {
                vertices.push(self.vertices[(start + len - k) % len]);
                edges.push(self.edges[(start + 2 * len - k - 1) % len]);
            }
        }
        Cycle { vertices, edges }
    }

    /// Whether every recorded edge really joins its consecutive vertices.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let len = self.len();
        if len == 0 || self.edges.len() != len {
            return false;
        }
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != len {
            return false;
        }
        (0..len).all(|i| {
            let e = self.edges[i];
            if e >= g.edge_count() {
                return false;
            }
            let (a, b) = g.endpoints(e);
            let (u, v) = (self.vertices[i], self.vertices[(i + 1) % len]);
            (a, b) == (u.min(v), u.max(v))
        })
    }

    /// Directed traversal steps `(from, to, edge)`.
    pub fn steps(&self) -> impl Iterator<Item = (VertexId, VertexId, EdgeId)> + '_ {
        let len = self.len();
        (0..len).map(move |i| (self.vertices[i], self.vertices[(i + 1) % len], self.edges[i]))
    }
}

/// All simple cycles of length `3..=max_len`, each reported once in
/// canonical rotation. Output is sorted by length, then lexicographically.
///
/// On multigraphs only the vertex sequence is enumerated; the first edge of
/// each parallel class stands in for the step.
pub fn enumerate_cycles_upto(g: &Graph, max_len: usize) -> Vec<Cycle> {
    let n = g.vertex_count();
    // deduplicated sorted neighbour lists
    let nbrs: Vec<Vec<VertexId>> = (0..n)
        .map(|v| {
            let mut l: Vec<_> = g.neighbors(v).filter(|&w| w != v).collect();
            l.sort_unstable();
            l.dedup();
            l
        })
        .collect();
    let mut cycles: Vec<Cycle> = (0..n)
        .into_par_iter()
        .flat_map_iter(|s| cycles_from(g, &nbrs, s, max_len))
        .collect();
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.vertices.cmp(&b.vertices)));
    cycles
}

/// Cycles whose smallest vertex is `s`.
fn cycles_from(g: &Graph, nbrs: &[Vec<VertexId>], s: VertexId, max_len: usize) -> Vec<Cycle> {
    let n = g.vertex_count();
    if max_len < 3 {
        return Vec::new();
    }
    // distances back to s inside the subgraph on vertices >= s
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if dist[u] >= max_len / 2 + 1 {
            continue;
        }
        for &w in &nbrs[u] {
            if w > s && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut out = Vec::new();
    let mut path = vec![s];
    let mut on_path = vec![false; n];
    on_path[s] = true;
    extend(g, nbrs, &dist, max_len, &mut path, &mut on_path, &mut out);
    out
}

fn extend(
    g: &Graph,
    nbrs: &[Vec<VertexId>],
    dist: &[usize],
    max_len: usize,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let s = path[0];
    let u = *path.last().unwrap();
    let edges_so_far = path.len() - 1;
    for &w in &nbrs[u] {
        if w == s {
            if path.len() >= 3 && path[1] < u {
                let c = Cycle::from_vertices(g, path).expect("path closes into a cycle");
                out.push(c);
            }
            continue;
        }
        if w < s || on_path[w] || dist[w] == usize::MAX {
            continue;
        }
        // one step to w, then at least dist[w] steps home
        if edges_so_far + 1 + dist[w] > max_len {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        extend(g, nbrs, dist, max_len, path, on_path, out);
        on_path[w] = false;
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn single_hexagon() {
        let cs = enumerate_cycles_upto(&cycle(6), 6);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].vertices(), &[0, 1, 2, 3, 4, 5]);
        assert!(enumerate_cycles_upto(&cycle(6), 5).is_empty());
    }

    #[test]
    fn k4_has_seven() {
        let cs = enumerate_cycles_upto(&complete(4), 4);
        assert_eq!(cs.len(), 7);
        assert_eq!(cs.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cs.iter().filter(|c| c.len() == 4).count(), 3);
        for c in &cs {
            assert!(c.is_valid_in(&complete(4)));
            assert_eq!(&c.canonical(), c);
        }
    }

    #[test]
    fn petersen_cycle_counts() {
        // 12 pentagons, 10 hexagons
        let cs = enumerate_cycles_upto(&petersen(), 6);
        assert_eq!(cs.iter().filter(|c| c.len() == 5).count(), 12);
        assert_eq!(cs.iter().filter(|c| c.len() == 6).count(), 10);
    }

    #[test]
    fn canonical_form_is_rotation_invariant() {
        let g = complete(5);
        let c = Cycle::from_vertices(&g, &[3, 1, 4, 0, 2]).unwrap();
        let canon = c.canonical();
        assert_eq!(canon.vertices(), &[0, 2, 3, 1, 4]);
        assert!(canon.is_valid_in(&g));
        let rev = Cycle::from_vertices(&g, &[2, 0, 4, 1, 3]).unwrap();
        assert_eq!(rev.canonical(), canon);
    }

    #[test]
    fn rejects_non_cycles() {
        let g = cycle(6);
        assert!(Cycle::from_vertices(&g, &[0, 1, 3]).is_none());
        assert!(Cycle::from_vertices(&g, &[0, 1, 0]).is_none());
    }
}
