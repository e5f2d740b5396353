use std::collections::VecDeque;

use super::{Graph, VertexId};

pub fn is_bipartite(g: &Graph) -> bool {
    two_coloring(g).is_some()
}

fn two_coloring(g: &Graph) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// Exact chromatic number: 1 when edgeless, 2 when bipartite, otherwise the
/// least `k >= 3` for which a backtracking search finds a proper colouring.
/// Cubic inputs always finish at 3 or 4. Loops make a graph uncolourable;
/// `usize::MAX` is returned then.
pub fn chromatic_number_small(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    if g.loop_count() > 0 {
        return usize::MAX;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    if is_bipartite(g) {
        return 2;
    }
    let order = bfs_order(g);
    (3..=n).find(|&k| colorable(g, &order, k)).unwrap_or(n)
}

fn bfs_order(g: &Graph) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut roots: Vec<VertexId> = (0..n).collect();
    roots.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for r in roots {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut queue = VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

fn colorable(g: &Graph, order: &[VertexId], k: usize) -> bool {
    let n = g.vertex_count();
    let mut color = vec![usize::MAX; n];
    let mut next_try = vec![0usize; n];
    let mut pos = 0usize;
    while pos < order.len() {
        let v = order[pos];
        // symmetry breaking: never open more than one new colour at a time
        let used_max = order[..pos].iter().map(|&u| color[u]).max().map_or(0, |c| c + 1);
        let limit = k.min(used_max + 1);
        let mut placed = false;
        while next_try[v] < limit {
            let c = next_try[v];
            next_try[v] += 1;
            if g.neighbors(v).all(|w| color[w] != c) {
                color[v] = c;
                placed = true;
                break;
            }
        }
        if placed {
            pos += 1;
        } else {
            next_try[v] = 0;
            color[v] = usize::MAX;
            if pos == 0 {
                return false;
            }
            pos -= 1;
            color[order[pos]] = usize::MAX;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn small_cases() {
        assert_eq!(chromatic_number_small(&cycle(6)), 2);
        assert_eq!(chromatic_number_small(&cycle(5)), 3);
        assert_eq!(chromatic_number_small(&complete(4)), 4);
        assert_eq!(chromatic_number_small(&complete(5)), 5);
        assert_eq!(chromatic_number_small(&petersen()), 3);
        assert_eq!(chromatic_number_small(&Graph::empty(3)), 1);
    }
}
