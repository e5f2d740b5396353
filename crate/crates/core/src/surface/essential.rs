use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use super::cover::{double_cover, DoubleCover};
use super::homology::{H1Class, H1Shape, Homology};
use super::orient::{edge_signature, orientation_signs, walk_sign, Orientation};
use super::HexTiling;
use crate::graph::{enumerate_cycles_upto, Cycle, VertexId};

/// Shortest essential cycles: their length and how many there are, counted
/// as undirected unrooted cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShortestEssential {
    pub length: usize,
    pub count: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("no essential cycle of length at most {cap}")]
pub struct ExceedsCap {
    pub cap: usize,
}

/// A tiling with its orientation data, homology and, when non-orientable,
/// its orientation double cover.
#[derive(Debug, Clone)]
pub struct Surface {
    tiling: HexTiling,
    orientation: Orientation,
    signature: Vec<i8>,
    homology: Homology,
    cover: Option<(DoubleCover, Homology)>,
}

impl Surface {
    pub fn new(tiling: HexTiling) -> Surface {
        let orientation = orientation_signs(&tiling);
        let signature = edge_signature(&tiling);
        let homology = Homology::new(&tiling);
        let cover = (!orientation.is_orientable()).then(|| {
            let dc = double_cover(&tiling).expect("non-orientable tiling has a double cover");
            let h = Homology::new(dc.tiling());
            (dc, h)
        });
        Surface { tiling, orientation, signature, homology, cover }
    }

    pub fn tiling(&self) -> &HexTiling {
        &self.tiling
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn is_orientable(&self) -> bool {
        self.orientation.is_orientable()
    }

    /// Edge signs of the sorted-neighbour rotation system.
    pub fn signature(&self) -> &[i8] {
        &self.signature
    }

    pub fn homology(&self) -> &Homology {
        &self.homology
    }

    pub fn h1_shape(&self) -> H1Shape {
        self.homology.shape()
    }

    pub fn double_cover(&self) -> Option<&DoubleCover> {
        self.cover.as_ref().map(|(dc, _)| dc)
    }

    pub fn homology_class(&self, c: &Cycle) -> H1Class {
        self.homology.class_of(self.tiling.graph(), c)
    }

    /// Whether `c` reverses the local orientation when carried around it.
    pub fn is_orientation_reversing(&self, c: &Cycle) -> bool {
        walk_sign(&self.signature, c.edges()) < 0
    }

    pub fn is_essential(&self, c: &Cycle) -> bool {
        match &self.cover {
            None => !self.homology_class(c).is_zero(),
            Some((dc, h)) => match dc.lift_cycle(self.tiling.graph(), c) {
                None => true,
                Some(lift) => !h.class_of(dc.tiling().graph(), &lift).is_zero(),
            },
        }
    }

    /// Shortest essential cycles by breadth-first search in the orientable
    /// surface above the tiling (the tiling itself or its double cover),
    /// tracking the homology class of the walk.
    ///
    /// From each base vertex `s` the search counts shortest closed walks at
    /// `s` that are not null-homotopic: walks whose lift returns to the start
    /// with a nonzero class, or ends on the other sheet. A shortest such walk
    /// is a simple cycle, and each cycle of length `l` is seen `2 l` times
    /// (every start vertex, both directions).
    pub fn shortest_essential(&self, cap: usize) -> Result<ShortestEssential, ExceedsCap> {
        let (graph, homology, sheets) = match &self.cover {
            None => (self.tiling.graph(), &self.homology, 1usize),
            Some((dc, h)) => (dc.tiling().graph(), h, 2usize),
        };
        let rows = homology.free_weights();
        assert_eq!(rows.len(), 2, "orientable surface above a tiling is a torus");
        let weights: Vec<[i64; 2]> = (0..graph.edge_count()).map(|e| [rows[0][e], rows[1][e]]).collect();
        let base_n = self.tiling.graph().vertex_count();
        let best = AtomicUsize::new(cap);
        let found: Vec<(usize, u128)> = (0..base_n)
            .into_par_iter()
            .filter_map(|s| {
                let start = s * sheets;
                let mut seen: HashSet<(VertexId, [i64; 2])> = HashSet::new();
                let mut frontier: HashMap<(VertexId, [i64; 2]), u128> = HashMap::from([((start, [0, 0]), 1)]);
                seen.insert((start, [0, 0]));
                let mut depth = 0usize;
                while !frontier.is_empty() && depth < best.load(Ordering::Relaxed) {
                    let mut next: HashMap<(VertexId, [i64; 2]), u128> = HashMap::new();
                    for (&(x, c), &count) in &frontier {
                        for &(y, e) in graph.incident(x) {
                            let w = weights[e];
                            let d = if x < y { [c[0] + w[0], c[1] + w[1]] } else { [c[0] - w[0], c[1] - w[1]] };
                            if seen.contains(&(y, d)) {
                                continue;
                            }
                            *next.entry((y, d)).or_default() += count;
                        }
                    }
                    depth += 1;
                    for &key in next.keys() {
                        seen.insert(key);
                    }
                    let hits: u128 = next
                        .iter()
                        .filter(|&(&(y, c), _)| y / sheets == s && (y != start || c != [0, 0]))
                        .map(|(_, &k)| k)
                        .sum();
                    if hits > 0 {
                        best.fetch_min(depth, Ordering::Relaxed);
                        return Some((depth, hits));
                    }
                    frontier = next;
                }
                None
            })
            .collect();
        let length = found.iter().map(|&(d, _)| d).min().ok_or(ExceedsCap { cap })?;
        let walks: u128 = found.iter().filter(|&&(d, _)| d == length).map(|&(_, k)| k).sum();
        let per_cycle = 2 * length as u128;
        assert_eq!(walks % per_cycle, 0, "closed walk count not a multiple of 2l");
        Ok(ShortestEssential { length, count: walks / per_cycle })
    }

    /// Reference answer: enumerate every cycle up to `cap` and test each.
    pub fn shortest_essential_slow(&self, cap: usize) -> Result<ShortestEssential, ExceedsCap> {
        let mut length = usize::MAX;
        let mut count = 0u128;
        for c in enumerate_cycles_upto(self.tiling.graph(), cap) {
            if !self.is_essential(&c) {
                continue;
            }
            if c.len() < length {
                length = c.len();
                count = 0;
            }
            if c.len() == length {
                count += 1;
            }
        }
        if count == 0 {
            return Err(ExceedsCap { cap });
        }
        Ok(ShortestEssential { length, count })
    }
}

pub fn is_essential(t: &HexTiling, c: &Cycle) -> bool {
    Surface::new(t.clone()).is_essential(c)
}

pub fn shortest_essential(t: &HexTiling, cap: usize) -> Result<ShortestEssential, ExceedsCap> {
    Surface::new(t.clone()).shortest_essential(cap)
}

pub fn shortest_essential_slow(t: &HexTiling, cap: usize) -> Result<ShortestEssential, ExceedsCap> {
    Surface::new(t.clone()).shortest_essential_slow(cap)
}
