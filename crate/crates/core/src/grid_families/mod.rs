//! Locally grid graphs: the five families on `Z_p x Z_q`, the local
//! verifier, duals through squares and recognition of a graph as a family
//! member.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{enumerate_cycles_upto, isomorphic, Cycle, EdgeId, Graph, VertexId};
use crate::hex_families::{Builder, EdgeRole, Label, LabeledGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GridFamily {
    T,
    K0,
    K1,
    K2,
    S,
}

impl GridFamily {
    pub const ALL: [GridFamily; 5] = [GridFamily::T, GridFamily::K0, GridFamily::K1, GridFamily::K2, GridFamily::S];

    pub fn tag(self) -> &'static str {
        match self {
            GridFamily::T => "T",
            GridFamily::K0 => "K0",
            GridFamily::K1 => "K1",
            GridFamily::K2 => "K2",
            GridFamily::S => "S",
        }
    }
}

/// A locally grid graph on `p * q` vertices; `delta` is the torus shift and
/// is 0 outside family T.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridFamilyId {
    pub family: GridFamily,
    pub p: usize,
    pub q: usize,
    pub delta: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("malformed grid family spec `{0}`")]
    Syntax(String),
    #[error("{id}: parameters out of range ({reason})")]
    Range { id: GridFamilyId, reason: &'static str },
}

/// Why a graph is not locally grid.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridViolation {
    #[error("graph is empty")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has loops or parallel edges")]
    NotSimple,
    #[error("vertex {vertex} has degree {degree}")]
    Degree { vertex: VertexId, degree: usize },
    #[error("no neighbour ordering at vertex {vertex} gives the 3x3 grid pattern")]
    Neighbourhood { vertex: VertexId },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SquareRejection {
    #[error("edge {edge} lies in {count} squares")]
    EdgeSquares { edge: EdgeId, count: usize },
}

impl GridFamilyId {
    pub fn new(family: GridFamily, p: usize, q: usize) -> GridFamilyId {
        GridFamilyId { family, p, q, delta: 0 }
    }

    pub fn torus(p: usize, q: usize, delta: usize) -> GridFamilyId {
        GridFamilyId { family: GridFamily::T, p, q, delta }
    }

    pub fn vertex_count(&self) -> usize {
        self.p * self.q
    }

    pub fn validate(&self) -> Result<(), GridError> {
        let (p, q, d) = (self.p, self.q, self.delta);
        let fail = |reason| Err(GridError::Range { id: *self, reason });
        if self.family != GridFamily::T && d != 0 {
            return fail("only family T takes a shift");
        }
        match self.family {
            GridFamily::T => {
                if p < 5 || 2 * d > p || q == 0 {
                    return fail("needs p >= 5, q >= 1, 0 <= delta <= p/2");
                }
                match q {
                    1 if 4 <= d && 2 * d < p && 3 * d != p && 4 * d != p => Ok(()),
                    1 => fail("q = 1 needs 4 <= delta < p/2, delta not p/3 or p/4"),
                    2 | 3 if d + q >= 6 => Ok(()),
                    2 | 3 => fail("q in {2, 3} needs delta + q >= 6"),
                    _ if d + q >= 5 => Ok(()),
                    _ => fail("needs delta + q >= 5"),
                }
            }
            GridFamily::K1 if p >= 5 && p % 2 == 1 && q >= 5 => Ok(()),
            GridFamily::K1 => fail("needs p odd >= 5, q >= 5"),
            GridFamily::K0 if p >= 5 && p % 2 == 0 && q >= 4 => Ok(()),
            GridFamily::K0 => fail("needs p even >= 6, q >= 4"),
            GridFamily::K2 if p >= 5 && p % 2 == 0 && q >= 5 => Ok(()),
            GridFamily::K2 => fail("needs p even >= 6, q >= 5"),
            GridFamily::S if p >= 3 && q >= 6 => Ok(()),
            GridFamily::S => fail("needs p >= 3, q >= 6"),
        }
    }

    /// Every valid id on exactly `n` vertices, in recognition order: family
    /// T, K0, K1, K2, S, then ascending `p`, then ascending `delta`.
    pub fn all_with_vertex_count(n: usize) -> Vec<GridFamilyId> {
        let mut out = Vec::new();
        for family in GridFamily::ALL {
            for p in 1..=n {
                if n % p != 0 {
                    continue;
                }
                let q = n / p;
                let deltas = if family == GridFamily::T { 0..=p / 2 } else { 0..=0 };
                for delta in deltas {
                    let id = GridFamilyId { family, p, q, delta };
                    if id.validate().is_ok() {
                        out.push(id);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for GridFamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{},{}", self.family.tag(), self.p, self.q)?;
        if self.family == GridFamily::T {
            write!(f, ",{}", self.delta)?;
        }
        Ok(())
    }
}

impl FromStr for GridFamilyId {
    type Err = GridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GridError::Syntax(s.to_string());
        let (tag, rest) = s.split_once(':').ok_or_else(bad)?;
        let family = GridFamily::ALL.into_iter().find(|f| f.tag() == tag).ok_or_else(bad)?;
        let nums: Vec<usize> = rest
            .split(',')
            .map(|x| if !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit()) { x.parse().ok() } else { None })
            .collect::<Option<_>>()
            .ok_or_else(bad)?;
        match (family, nums.as_slice()) {
            (GridFamily::T, &[p, q, delta]) => Ok(GridFamilyId::torus(p, q, delta)),
            (GridFamily::T, _) => Err(bad()),
            (_, &[p, q]) => Ok(GridFamilyId::new(family, p, q)),
            _ => Err(bad()),
        }
    }
}

/// The family's graph on labels `(i, j)` in `Z_p x Z_q`. Grid edges get role
/// `Wall`, the added identifications `Closing`.
pub fn build_grid(id: &GridFamilyId) -> Result<LabeledGraph, GridError> {
    id.validate()?;
    Ok(build_grid_unchecked(id))
}

/// The edge recipe without the range check; needs `p, q >= 1`. Outside the
/// ranges the result need not be locally grid (e.g. `K2:p,4`).
pub fn build_grid_unchecked(id: &GridFamilyId) -> LabeledGraph {
    build_with(id, id.p <= id.q)
}

/// `s_tall` picks the S recipe written for `p <= q`.
fn build_with(id: &GridFamilyId, s_tall: bool) -> LabeledGraph {
    let (p, q, d) = (id.p, id.q, id.delta);
    let mut b = Builder::default();
    for i in 0..p {
        for j in 0..q {
            b.vertex(Label::Cell(i, j));
        }
    }
    for i in 0..p {
        for j in 0..q {
            if i + 1 < p {
                b.edge(Label::Cell(i, j), Label::Cell(i + 1, j), EdgeRole::Wall);
            }
            if j + 1 < q {
                b.edge(Label::Cell(i, j), Label::Cell(i, j + 1), EdgeRole::Wall);
            }
        }
    }
    let mut add = |a: (usize, usize), c: (usize, usize)| {
        b.edge(Label::Cell(a.0 % p, a.1 % q), Label::Cell(c.0 % p, c.1 % q), EdgeRole::Closing)
    };
    if id.family != GridFamily::S {
        for j in 0..q {
            add((0, j), (p - 1, j));
        }
    }
    match id.family {
        GridFamily::T => {
            for i in 0..p {
                add((i, 0), (i + d, q - 1));
            }
        }
        GridFamily::K0 | GridFamily::K1 => {
            for j in 0..p {
                add((j, 0), (p - j - 1, q - 1));
            }
        }
        GridFamily::K2 => {
            for j in 0..p {
                add((j, 0), (p - j, q - 1));
            }
        }
        GridFamily::S if s_tall => {
            for j in 0..p {
                add((j, 0), (p - 1, q - p + j));
            }
            for i in 0..p {
                add((0, i), (i, q - 1));
            }
            for i in p..q {
                add((0, i), (p - 1, i - p));
            }
        }
        GridFamily::S => {
            for j in 0..q {
                add((j, 0), (0, q - 1 - j));
            }
            for i in 0..q {
                add((p - 1 - i, q - 1), (p - 1, i));
            }
            for i in 0..p - q {
                add((i, q - 1), (i + q, 0));
            }
        }
    }
    b.finish()
}

/// Checks the 3x3 neighbourhood condition at every vertex; the error names
/// the first failure.
pub fn is_locally_grid(g: &Graph) -> Result<(), GridViolation> {
    if g.vertex_count() == 0 {
        return Err(GridViolation::Empty);
    }
    if !g.is_simple() {
        return Err(GridViolation::NotSimple);
    }
    if let Some(vertex) = (0..g.vertex_count()).find(|&v| g.degree(v) != 4) {
        return Err(GridViolation::Degree { vertex, degree: g.degree(vertex) });
    }
    if !g.is_connected() {
        return Err(GridViolation::Disconnected);
    }
    let nbrs: Vec<BTreeSet<VertexId>> = (0..g.vertex_count()).map(|v| g.neighbors(v).collect()).collect();
    match (0..g.vertex_count()).find(|&x| !grid_at(g, &nbrs, x)) {
        Some(vertex) => Err(GridViolation::Neighbourhood { vertex }),
        None => Ok(()),
    }
}

fn grid_at(g: &Graph, nbrs: &[BTreeSet<VertexId>], x: VertexId) -> bool {
    let n: Vec<VertexId> = nbrs[x].iter().copied().collect();
    let orders = [[n[0], n[1], n[2], n[3]], [n[0], n[1], n[3], n[2]], [n[0], n[2], n[1], n[3]]];
    orders.iter().any(|ord| {
        let mut named = vec![x];
        named.extend_from_slice(ord);
        for i in 0..4 {
            let (a, b, c) = (ord[i], ord[(i + 1) % 4], ord[(i + 2) % 4]);
            let side: Vec<_> = nbrs[a].intersection(&nbrs[b]).copied().collect();
            let Some(&y) = side.iter().find(|&&y| y != x) else {
                return false;
            };
            if side.len() != 2 || !side.contains(&x) {
                return false;
            }
            if nbrs[a].intersection(&nbrs[c]).ne(std::iter::once(&x)) {
                return false;
            }
            named.push(y);
        }
        let mut distinct = named.clone();
        distinct.sort_unstable();
        distinct.dedup();
        distinct.len() == 9 && g.induced(&named).edge_count() == 12
    })
}

/// The square dual: one vertex per 4-cycle, one edge per primal edge.
#[derive(Debug, Clone)]
pub struct GridDual {
    pub graph: Graph,
    pub squares: Vec<Cycle>,
}

pub fn grid_dual(g: &Graph) -> Result<GridDual, SquareRejection> {
    let squares: Vec<Cycle> = enumerate_cycles_upto(g, 4).into_iter().filter(|c| c.len() == 4).collect();
    let mut on_edge: Vec<Vec<usize>> = vec![Vec::new(); g.edge_count()];
    for (s, c) in squares.iter().enumerate() {
        for &e in c.edges() {
            on_edge[e].push(s);
        }
    }
    let mut edges = Vec::with_capacity(g.edge_count());
    for (edge, sq) in on_edge.iter().enumerate() {
        match sq.as_slice() {
            &[a, b] => edges.push((a, b)),
            _ => return Err(SquareRejection::EdgeSquares { edge, count: sq.len() }),
        }
    }
    let graph = Graph::new(squares.len(), &edges).expect("square ids in range");
    Ok(GridDual { graph, squares })
}

/// First id, in [`GridFamilyId::all_with_vertex_count`] order, whose graph is
/// isomorphic to `g`.
pub fn identify_grid(g: &Graph) -> Option<GridFamilyId> {
    is_locally_grid(g).ok()?;
    GridFamilyId::all_with_vertex_count(g.vertex_count())
        .into_iter()
        .find(|id| isomorphic(&build_grid(id).expect("listed ids are valid").graph, g).is_some())
}

/// Every id on `g`'s vertex count whose graph is isomorphic to `g`.
pub fn grid_aliases(g: &Graph) -> Vec<GridFamilyId> {
    let mut cache: HashMap<GridFamilyId, bool> = HashMap::new();
    GridFamilyId::all_with_vertex_count(g.vertex_count())
        .into_iter()
        .filter(|id| {
            *cache
                .entry(*id)
                .or_insert_with(|| isomorphic(&build_grid(id).expect("listed ids are valid").graph, g).is_some())
        })
        .collect()
}
