//! Isomorphism by individualisation and backtracking.
//!
//! Vertices are first split by a cheap invariant (degree, loop count and the
//! full BFS distance profile). The search then maps vertices of `g` in BFS
//! order, so every vertex after the first of its component has an already
//! mapped neighbour whose image restricts the candidates to a handful. Each
//! tentative pair must agree on edge multiplicities with every mapped
//! neighbour and on distances to a set of anchor vertices.

use std::collections::{BTreeMap, VecDeque};

use super::{Graph, UnionFind, VertexId};

const ANCHORS: usize = 12;

struct Side<'a> {
    g: &'a Graph,
    dist: Vec<Vec<u16>>,
    class: Vec<usize>,
}

impl<'a> Side<'a> {
    fn mult(&self, u: VertexId, v: VertexId) -> usize {
        self.g.multiplicity(u, v)
    }
}

fn profiles(g: &Graph) -> (Vec<Vec<u16>>, Vec<Vec<u32>>) {
    let n = g.vertex_count();
    let mut dist = Vec::with_capacity(n);
    let mut keys = Vec::with_capacity(n);
    for v in 0..n {
        let d = g.distances_from(v);
        let mut profile = vec![g.degree(v) as u32, g.multiplicity(v, v) as u32];
        let mut counts: Vec<u32> = Vec::new();
        let mut unreachable = 0u32;
        for &x in &d {
            if x == usize::MAX {
                unreachable += 1;
            } else {
                if counts.len() <= x {
                    counts.resize(x + 1, 0);
                }
                counts[x] += 1;
            }
        }
        profile.push(unreachable);
        profile.extend(counts);
        keys.push(profile);
        dist.push(d.into_iter().map(|x| if x == usize::MAX { u16::MAX } else { x as u16 }).collect());
    }
    (dist, keys)
}

fn prepare<'a>(g: &'a Graph, h: &'a Graph) -> Option<(Side<'a>, Side<'a>)> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (dg, kg) = profiles(g);
    let (dh, kh) = profiles(h);
    let mut ids: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for k in kg.iter().chain(kh.iter()) {
        let next = ids.len();
        ids.entry(k.clone()).or_insert(next);
    }
    let cg: Vec<usize> = kg.iter().map(|k| ids[k]).collect();
    let ch: Vec<usize> = kh.iter().map(|k| ids[k]).collect();
    let mut sg = cg.clone();
    let mut sh = ch.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return None;
    }
    Some((Side { g, dist: dg, class: cg }, Side { g: h, dist: dh, class: ch }))
}

/// Returns a bijection `f` (indexed by vertices of `g`) with
/// `mult_g(u, v) = mult_h(f(u), f(v))` for all pairs, or `None`.
pub fn isomorphic(g: &Graph, h: &Graph) -> Option<Vec<VertexId>> {
    let (a, b) = prepare(g, h)?;
    search(&a, &b, None)
}

/// As [`isomorphic`] but insists on `f(u) = v`.
pub fn isomorphic_fixing(g: &Graph, h: &Graph, u: VertexId, v: VertexId) -> Option<Vec<VertexId>> {
    let (a, b) = prepare(g, h)?;
    if a.class[u] != b.class[v] {
        return None;
    }
    search(&a, &b, Some((u, v)))
}

/// Orbits of the automorphism group on vertices, each sorted, listed by
/// smallest member.
pub fn automorphism_orbits(g: &Graph) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let Some((a, b)) = prepare(g, g) else {
        unreachable!("a graph always matches itself");
    };
    let mut uf = UnionFind::new(n);
    for w in 0..n {
        let mut tried_roots = Vec::new();
        for r in 0..w {
            if a.class[r] != a.class[w] {
                continue;
            }
            let root = uf.find(r);
            if root == uf.find(w) {
                break;
            }
            if tried_roots.contains(&root) {
                continue;
            }
            tried_roots.push(root);
            if let Some(f) = search(&a, &b, Some((root, w))) {
                for (x, &y) in f.iter().enumerate() {
                    uf.union(x, y);
                }
                break;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
    for v in 0..n {
        groups.entry(uf.find(v)).or_default().push(v);
    }
    groups.into_values().collect()
}

fn search_order(a: &Side<'_>, start: Option<VertexId>) -> (Vec<VertexId>, Vec<Option<usize>>) {
    let n = a.g.vertex_count();
    let mut freq: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &a.class {
        *freq.entry(c).or_default() += 1;
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut parent = Vec::with_capacity(n);
    let mut pos = vec![usize::MAX; n];
    let mut first = start;
    loop {
        let root = match first.take() {
            Some(r) => r,
            None => match (0..n).filter(|&v| !seen[v]).min_by_key(|&v| (freq[&a.class[v]], v)) {
                Some(r) => r,
                None => break,
            },
        };
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            pos[u] = order.len();
            // parent: earliest placed neighbour
            let p = a.g.neighbors(u).filter(|&w| pos[w] != usize::MAX && w != u).map(|w| pos[w]).min();
            parent.push(p);
            order.push(u);
            for w in a.g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    (order, parent)
}

fn search(a: &Side<'_>, b: &Side<'_>, fixed: Option<(VertexId, VertexId)>) -> Option<Vec<VertexId>> {
    let n = a.g.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    let (order, parent) = search_order(a, fixed.map(|(u, _)| u));
    let mut fwd = vec![usize::MAX; n];
    let mut back = vec![usize::MAX; n];
    let mut cands: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut next: Vec<usize> = vec![0; n];

    let candidates = |t: usize, fwd: &[usize], back: &[usize]| -> Vec<VertexId> {
        let x = order[t];
        let cls = a.class[x];
        let mut out: Vec<VertexId> = match (t, fixed, parent[t]) {
            (0, Some((_, v)), _) => vec![v],
            (_, _, Some(p)) => {
                let img = fwd[order[p]];
                let mut l: Vec<_> = b.g.neighbors(img).collect();
                l.sort_unstable();
                l.dedup();
                l
            }
            _ => (0..n).collect(),
        };
        out.retain(|&y| back[y] == usize::MAX && b.class[y] == cls);
        out
    };

    let consistent = |t: usize, y: VertexId, fwd: &[usize], back: &[usize]| -> bool {
        let x = order[t];
        if a.mult(x, x) != b.mult(y, y) {
            return false;
        }
        let mut mapped_g = 0usize;
        for w in a.g.neighbors(x) {
            if w != x && fwd[w] != usize::MAX {
                mapped_g += 1;
                if b.mult(y, fwd[w]) != a.mult(x, w) {
                    return false;
                }
            }
        }
        let mapped_h = b.g.neighbors(y).filter(|&w| w != y && back[w] != usize::MAX).count();
        if mapped_g != mapped_h {
            return false;
        }
        order[..t.min(ANCHORS)].iter().all(|&z| a.dist[x][z] == b.dist[y][fwd[z]])
    };

    let mut t = 0usize;
    cands[0] = candidates(0, &fwd, &back);
    next[0] = 0;
    loop {
        let x = order[t];
        let mut placed = false;
        while next[t] < cands[t].len() {
            let y = cands[t][next[t]];
            next[t] += 1;
            if consistent(t, y, &fwd, &back) {
                fwd[x] = y;
                back[y] = x;
                placed = true;
                break;
            }
        }
        if placed {
            if t + 1 == n {
                return Some(fwd);
            }
            t += 1;
            cands[t] = candidates(t, &fwd, &back);
            next[t] = 0;
        } else {
            if t == 0 {
                return None;
            }
            t -= 1;
            let px = order[t];
            back[fwd[px]] = usize::MAX;
            fwd[px] = usize::MAX;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn check_bijection(g: &Graph, h: &Graph, f: &[VertexId]) {
        let mut image: Vec<_> = f.to_vec();
        image.sort_unstable();
        assert_eq!(image, (0..g.vertex_count()).collect::<Vec<_>>());
        assert_eq!(g.relabeled(f).edge_multiset(), h.edge_multiset());
    }

    #[test]
    fn self_isomorphism() {
        for g in [cycle(6), petersen(), complete(4), grid(3, 4), icosahedron()] {
            let f = isomorphic(&g, &g).expect("reflexive");
            check_bijection(&g, &g, &f);
        }
    }

    #[test]
    fn c6_is_not_two_triangles() {
        let two = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(isomorphic(&cycle(6), &two).is_none());
        assert!(isomorphic(&two, &two).is_some());
    }

    #[test]
    fn relabelled_petersen() {
        let g = petersen();
        let perm = [7, 3, 9, 0, 5, 1, 8, 2, 6, 4];
        let h = g.relabeled(&perm);
        let f = isomorphic(&g, &h).unwrap();
        check_bijection(&g, &h, &f);
    }

    #[test]
    fn multigraph_multiplicities_matter() {
        let a = Graph::new(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        let b = Graph::new(3, &[(0, 1), (1, 2), (1, 2)]).unwrap();
        let c = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(isomorphic(&a, &b).is_some());
        assert!(isomorphic(&a, &c).is_none());
    }

    #[test]
    fn orbits_of_small_graphs() {
        assert_eq!(automorphism_orbits(&cycle(6)), vec![(0..6).collect::<Vec<_>>()]);
        assert_eq!(automorphism_orbits(&path(3)), vec![vec![0, 2], vec![1]]);
        assert_eq!(automorphism_orbits(&petersen()).len(), 1);
        // 3x3 grid: corners, edge midpoints, centre
        assert_eq!(automorphism_orbits(&grid(3, 3)).len(), 3);
    }

    #[test]
    fn fixing_respects_orbits() {
        let p = path(3);
        assert!(isomorphic_fixing(&p, &p, 0, 2).is_some());
        assert!(isomorphic_fixing(&p, &p, 0, 1).is_none());
    }
}
