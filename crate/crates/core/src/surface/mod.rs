//! Hexagonal tilings as cellular embeddings: certification of the cell
//! structure, orientability, first homology and essential cycles.

mod cover;
mod essential;
mod homology;
mod orient;

use std::fmt;

use crate::graph::{enumerate_cycles_upto, Cycle, EdgeId, Graph, VertexId};

pub use cover::{double_cover, CoverError, DoubleCover};
pub use essential::{is_essential, shortest_essential, shortest_essential_slow, ExceedsCap, ShortestEssential, Surface};
pub use homology::{homology_class, H1Class, H1Shape, Homology};
pub use orient::{edge_signature, orientation_signs, Orientation};

/// Why a graph is not a hexagonal tiling. The first failing condition is
/// reported together with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    Empty,
    Disconnected { unreachable: VertexId },
    Loop { edge: EdgeId },
    ParallelEdges { first: EdgeId, second: EdgeId },
    NotCubic { vertex: VertexId, degree: usize },
    Girth { girth: Option<usize> },
    /// A 2-path `(a, v, b)` lies on no 6-cycle.
    UncoveredTwoPath { path: [VertexId; 3] },
    /// Some 2-path lies on several 6-cycles and no sub-collection of 6-cycles
    /// covers every 2-path exactly once.
    NoCellCollection { path: [VertexId; 3] },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Empty => write!(f, "empty graph"),
            Rejection::Disconnected { unreachable } => {
                write!(f, "not connected: vertex {unreachable} unreachable from 0")
            }
            Rejection::Loop { edge } => write!(f, "not simple: edge {edge} is a loop"),
            Rejection::ParallelEdges { first, second } => {
                write!(f, "not simple: edges {first} and {second} are parallel")
            }
            Rejection::NotCubic { vertex, degree } => {
                write!(f, "not cubic: vertex {vertex} has degree {degree}")
            }
            Rejection::Girth { girth: Some(g) } => write!(f, "girth {g}, expected 6"),
            Rejection::Girth { girth: None } => write!(f, "acyclic, expected girth 6"),
            Rejection::UncoveredTwoPath { path } => {
                write!(f, "2-path {}-{}-{} lies on no 6-cycle", path[0], path[1], path[2])
            }
            Rejection::NoCellCollection { path } => write!(
                f,
                "2-path {}-{}-{} lies on several 6-cycles and no cell collection exists",
                path[0], path[1], path[2]
            ),
        }
    }
}

impl std::error::Error for Rejection {}

/// A certified hexagonal tiling: the graph together with its cells.
#[derive(Debug, Clone)]
pub struct HexTiling {
    graph: Graph,
    cells: Vec<Cycle>,
    /// per edge, the two cells containing it (smaller id first)
    cell_index: Vec<[usize; 2]>,
    /// per vertex, the cell holding the corner that avoids the k-th
    /// neighbour (neighbours sorted ascending)
    corners: Vec<[usize; 3]>,
    /// how many cell collections satisfy the 2-path condition (capped)
    collections: usize,
}

/// Upper bound on the number of cell collections counted during
/// certification.
pub const COLLECTION_COUNT_CAP: usize = 8;

impl HexTiling {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cells(&self) -> &[Cycle] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// The two cells containing edge `e`.
    pub fn cells_of_edge(&self, e: EdgeId) -> [usize; 2] {
        self.cell_index[e]
    }

    /// Number of valid cell collections seen while certifying (1 when the
    /// cells are forced, capped at [`COLLECTION_COUNT_CAP`]).
    pub fn collection_count(&self) -> usize {
        self.collections
    }

    /// Cell containing the 2-path `a - v - b`.
    pub fn corner_cell(&self, a: VertexId, v: VertexId, b: VertexId) -> usize {
        let nb = sorted_neighbors(&self.graph, v);
        let k = (0..3).find(|&k| nb[k] != a && nb[k] != b).expect("a and b are neighbours of v");
        self.corners[v][k]
    }

    /// `cell <id>: v0 v1 v2 v3 v4 v5` lines.
    pub fn dump_cells(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.cells.iter().enumerate() {
            let vs: Vec<String> = c.vertices().iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("cell {i}: {}\n", vs.join(" ")));
        }
        out
    }

    /// Builds a tiling from an explicit cell list, checking the 2-path
    /// condition. Used for covers whose cells are known by construction.
    pub fn from_cells(graph: Graph, cells: Vec<Cycle>) -> Result<HexTiling, Rejection> {
        basic_checks(&graph)?;
        let n = graph.vertex_count();
        let mut owner = vec![usize::MAX; 3 * n];
        for (ci, c) in cells.iter().enumerate() {
            if c.len() != 6 || !c.is_valid_in(&graph) {
                return Err(Rejection::UncoveredTwoPath { path: corner_path(&graph, 0, 0) });
            }
            for slot in cycle_corners(&graph, c) {
                if owner[slot] != usize::MAX {
                    return Err(Rejection::NoCellCollection { path: corner_path(&graph, slot / 3, slot % 3) });
                }
                owner[slot] = ci;
            }
        }
        if let Some(slot) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Rejection::UncoveredTwoPath { path: corner_path(&graph, slot / 3, slot % 3) });
        }
        Ok(assemble(graph, cells, &owner, 1))
    }
}

fn sorted_neighbors(g: &Graph, v: VertexId) -> [VertexId; 3] {
    let mut nb = [0; 3];
    for (i, w) in g.neighbors(v).enumerate() {
        nb[i] = w;
    }
    nb.sort_unstable();
    nb
}

/// The 2-path at `v` avoiding its k-th sorted neighbour.
fn corner_path(g: &Graph, v: VertexId, k: usize) -> [VertexId; 3] {
    let nb = sorted_neighbors(g, v);
    let others: Vec<_> = (0..3).filter(|&i| i != k).map(|i| nb[i]).collect();
    [others[0], v, others[1]]
}

/// 2-path slots `3 v + k` covered by a cycle.
fn cycle_corners(g: &Graph, c: &Cycle) -> Vec<usize> {
    let vs = c.vertices();
    let len = vs.len();
    (0..len)
        .map(|i| {
            let v = vs[i];
            let (a, b) = (vs[(i + len - 1) % len], vs[(i + 1) % len]);
            let nb = sorted_neighbors(g, v);
            let k = (0..3).find(|&k| nb[k] != a && nb[k] != b).unwrap();
            3 * v + k
        })
        .collect()
}

fn basic_checks(g: &Graph) -> Result<(), Rejection> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Rejection::Empty);
    }
    let d = g.distances_from(0);
    if let Some(v) = d.iter().position(|&x| x == usize::MAX) {
        return Err(Rejection::Disconnected { unreachable: v });
    }
    if let Some(e) = g.edges().iter().position(|(u, v)| u == v) {
        return Err(Rejection::Loop { edge: e });
    }
    if let Some((first, second)) = g.first_parallel_pair() {
        return Err(Rejection::ParallelEdges { first, second });
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) != 3) {
        return Err(Rejection::NotCubic { vertex: v, degree: g.degree(v) });
    }
    let girth = g.girth();
    if girth != Some(6) {
        return Err(Rejection::Girth { girth });
    }
    Ok(())
}

fn assemble(graph: Graph, cells: Vec<Cycle>, owner: &[usize], collections: usize) -> HexTiling {
    let n = graph.vertex_count();
    let mut cell_index = vec![[usize::MAX; 2]; graph.edge_count()];
    for (ci, c) in cells.iter().enumerate() {
        for &e in c.edges() {
            let slot = &mut cell_index[e];
            if slot[0] == usize::MAX {
                slot[0] = ci;
            } else {
                slot[1] = ci;
            }
        }
    }
    let corners = (0..n).map(|v| [owner[3 * v], owner[3 * v + 1], owner[3 * v + 2]]).collect();
    HexTiling { graph, cells, cell_index, corners, collections }
}

/// Certifies `g` as a hexagonal tiling.
///
/// Cells are the 6-cycles. When every 2-path lies on exactly one 6-cycle the
/// cells are forced. When some 2-path lies on several (short essential
/// 6-cycles exist), the cells are the first sub-collection, in canonical
/// cycle order, that covers every 2-path exactly once; the number of such
/// collections is recorded.
pub fn certify_tiling(g: &Graph) -> Result<HexTiling, Rejection> {
    basic_checks(g)?;
    let n = g.vertex_count();
    let hexagons = enumerate_cycles_upto(g, 6);
    let corner_sets: Vec<Vec<usize>> = hexagons.iter().map(|c| cycle_corners(g, c)).collect();
    let mut options_of: Vec<Vec<usize>> = vec![Vec::new(); 3 * n];
    for (ci, slots) in corner_sets.iter().enumerate() {
        for &s in slots {
            options_of[s].push(ci);
        }
    }
    if let Some(slot) = options_of.iter().position(|o| o.is_empty()) {
        return Err(Rejection::UncoveredTwoPath { path: corner_path(g, slot / 3, slot % 3) });
    }
    if options_of.iter().all(|o| o.len() == 1) {
        let owner: Vec<usize> = options_of.iter().map(|o| o[0]).collect();
        return Ok(assemble(g.clone(), hexagons, &owner, 1));
    }
    let overcovered = options_of.iter().position(|o| o.len() > 1).unwrap();
    let mut search = ExactCover {
        corner_sets: &corner_sets,
        options_of: &options_of,
        owner: vec![usize::MAX; 3 * n],
        chosen: Vec::new(),
        first: None,
        found: 0,
    };
    search.run();
    let Some(chosen) = search.first else {
        return Err(Rejection::NoCellCollection { path: corner_path(g, overcovered / 3, overcovered % 3) });
    };
    let mut chosen = chosen;
    chosen.sort_unstable();
    let cells: Vec<Cycle> = chosen.iter().map(|&i| hexagons[i].clone()).collect();
    let mut owner = vec![usize::MAX; 3 * n];
    for (ci, &hi) in chosen.iter().enumerate() {
        for &s in &corner_sets[hi] {
            owner[s] = ci;
        }
    }
    Ok(assemble(g.clone(), cells, &owner, search.found))
}

/// Algorithm X over 2-path slots; each 6-cycle covers six slots.
struct ExactCover<'a> {
    corner_sets: &'a [Vec<usize>],
    options_of: &'a [Vec<usize>],
    owner: Vec<usize>,
    chosen: Vec<usize>,
    first: Option<Vec<usize>>,
    found: usize,
}

impl ExactCover<'_> {
    fn fits(&self, option: usize) -> bool {
        self.corner_sets[option].iter().all(|&s| self.owner[s] == usize::MAX)
    }

    fn run(&mut self) {
        if self.found >= COLLECTION_COUNT_CAP {
            return;
        }
        // most constrained open slot
        let mut pick: Option<(usize, usize)> = None;
        for slot in 0..self.owner.len() {
            if self.owner[slot] != usize::MAX {
                continue;
            }
            let live = self.options_of[slot].iter().filter(|&&o| self.fits(o)).count();
            if pick.is_none_or(|(_, c)| live < c) {
                pick = Some((slot, live));
                if live <= 1 {
                    break;
                }
            }
        }
        let Some((slot, live)) = pick else {
            self.found += 1;
            if self.first.is_none() {
                self.first = Some(self.chosen.clone());
            }
            return;
        };
        if live == 0 {
            return;
        }
        let options_of = self.options_of;
        for &o in &options_of[slot] {
            if !self.fits(o) {
                continue;
            }
            for &s in &self.corner_sets[o] {
                self.owner[s] = o;
            }
            self.chosen.push(o);
            self.run();
            self.chosen.pop();
            for &s in &self.corner_sets[o] {
                self.owner[s] = usize::MAX;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn rejects_with_reasons() {
        assert_eq!(certify_tiling(&petersen()).unwrap_err(), Rejection::Girth { girth: Some(5) });
        assert!(matches!(certify_tiling(&cycle(6)).unwrap_err(), Rejection::NotCubic { degree: 2, .. }));
        assert_eq!(certify_tiling(&Graph::empty(0)).unwrap_err(), Rejection::Empty);
        let two = Graph::new(12, &[]).unwrap();
        assert!(matches!(certify_tiling(&two).unwrap_err(), Rejection::Disconnected { .. }));
    }

    #[test]
    fn heawood_graph_needs_exact_cover() {
        // the 7-hexagon torus map; its 28 hexagons overlap on every 2-path
        let mut edges = Vec::new();
        for i in 0..14 {
            edges.push((i, (i + 1) % 14));
        }
        for i in (0..14).step_by(2) {
            edges.push((i, (i + 5) % 14));
        }
        let g = Graph::new(14, &edges).unwrap();
        assert_eq!(g.girth(), Some(6));
        let t = certify_tiling(&g).unwrap();
        assert_eq!(t.cell_count(), 7);
        assert!(t.collection_count() > 1);
    }
}
