//! Edge selections whose contraction turns a hexagonal tiling into a locally
//! grid graph, and the matching deletion/contraction on the dual.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::duality::DualTiling;
use crate::graph::{EdgeId, Graph};
use crate::grid_families::{GridFamily, GridFamilyId};
use crate::hex_families::{
    build_hex_labeled, klein_presentation, klein_presentation_labeled, build_hex, FamilyError, HexFamily,
    HexFamilyId, Label, LabeledGraph,
};
use crate::surface::HexTiling;

/// Which labelled construction a plan's coordinates refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Presentation {
    Native,
    Klein,
}

#[derive(Debug, Clone)]
pub struct MatchingPlan {
    pub family: HexFamilyId,
    /// Sorted edge ids in the presentation's graph.
    pub edges: Vec<EdgeId>,
    pub is_matching: bool,
    pub presentation: Presentation,
    graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("{id}: selected pair {a}-{b} is not an edge of the construction")]
    MissingEdge { id: HexFamilyId, a: Label, b: Label },
    #[error("plan for {0} was made on a different graph")]
    PlanMismatch(HexFamilyId),
}

/// Strip offset used for family F; any even `l` with `l + 2 < k` works.
pub const F_STRIP: usize = 2;

impl MatchingPlan {
    /// The graph the plan's edge ids refer to.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn check(&self, g: &Graph) -> Result<(), MinorError> {
        if *g == self.graph {
            Ok(())
        } else {
            Err(MinorError::PlanMismatch(self.family))
        }
    }
}

/// The tiling on whose labelling `matching_plan(id)` is written.
pub fn plan_tiling(id: &HexFamilyId) -> Result<HexTiling, FamilyError> {
    match id.family {
        HexFamily::C | HexFamily::F => klein_presentation(id),
        _ => build_hex(id),
    }
}

pub fn matching_plan(id: &HexFamilyId) -> Result<MatchingPlan, MinorError> {
    matching_plan_with_strip(id, F_STRIP)
}

/// As [`matching_plan`], choosing the strip offset `l` for family F.
pub fn matching_plan_with_strip(id: &HexFamilyId, l: usize) -> Result<MatchingPlan, MinorError> {
    let (k, m) = (id.k, id.m);
    let (lg, presentation) = match id.family {
        HexFamily::C | HexFamily::F => (klein_presentation_labeled(id)?, Presentation::Klein),
        _ => (build_hex_labeled(id)?, Presentation::Native),
    };
    let mut pairs: Vec<(Label, Label)> = Vec::new();
    let row_pairs = |pairs: &mut Vec<(Label, Label)>, parity: &dyn Fn(usize) -> usize| {
        for &label in &lg.labels {
            if let Label::Cell(i, c) = label {
                let next = Label::Cell(i, c + 1);
                if c % 2 == parity(i) && lg.vertex(next).is_some() {
                    pairs.push((label, next));
                }
            }
        }
    };
    match id.family {
        HexFamily::R | HexFamily::A | HexFamily::B | HexFamily::C => row_pairs(&mut pairs, &|_| 0),
        HexFamily::F => {
            for i in 0..2 * m + 4 {
                for c in (0..=l).step_by(2) {
                    pairs.push((Label::Cell(i, c), Label::Cell(i, c + 1)));
                }
                for c in (l + 1..k - 1).step_by(2) {
                    pairs.push((Label::Cell(i, c), Label::Cell(i, c + 1)));
                }
            }
        }
        HexFamily::H => {
            // ladder rows start their pairs at column m - i - 1; the pair
            // that would start at -1 in row m is replaced by the side vertex
            row_pairs(&mut pairs, &|i| (m + i + 1) % 2);
            pairs.push((Label::Cell(m - k - 1, 3 * k + 2), Label::Cell(m, 0)));
        }
        HexFamily::G => {
            row_pairs(&mut pairs, &|i| (m + i) % 2);
            pairs.push((Label::Cell(0, 2 * k + m), Label::Cell(m + 1, 2 * (k - m - 1))));
        }
    }
    let mut edges = BTreeSet::new();
    for (a, b) in pairs {
        let e = lg
            .vertex(a)
            .zip(lg.vertex(b))
            .and_then(|(u, v)| lg.graph.edge_between(u, v))
            .ok_or(MinorError::MissingEdge { id: *id, a, b })?;
        edges.insert(e);
    }
    let edges: Vec<EdgeId> = edges.into_iter().collect();
    let is_matching = is_perfect_matching(&lg, &edges);
    Ok(MatchingPlan { family: *id, edges, is_matching, presentation, graph: lg.graph })
}

fn is_perfect_matching(lg: &LabeledGraph, edges: &[EdgeId]) -> bool {
    let mut hit = vec![0usize; lg.graph.vertex_count()];
    for &e in edges {
        let (u, v) = lg.graph.endpoints(e);
        hit[u] += 1;
        hit[v] += 1;
    }
    hit.iter().all(|&h| h == 1)
}

/// Result of a contraction followed by removal of parallel edges.
#[derive(Debug, Clone)]
pub struct Minor {
    pub graph: Graph,
    /// Edges of the input graph removed as parallel copies (or loops) after
    /// contraction.
    pub removed: Vec<EdgeId>,
}

/// Contracts the plan's edges in `t` and deletes the resulting parallel
/// edges.
pub fn tiling_minor(t: &HexTiling, plan: &MatchingPlan) -> Result<Minor, MinorError> {
    plan.check(t.graph())?;
    Ok(contract_simplify(t.graph(), &plan.edges))
}

fn contract_simplify(g: &Graph, set: &[EdgeId]) -> Minor {
    let c = g.contract_edges(set).expect("plan edges exist");
    let (graph, kept) = c.graph.simplify_tracked();
    let kept: BTreeSet<EdgeId> = kept.into_iter().collect();
    let removed = (0..c.graph.edge_count()).filter(|e| !kept.contains(e)).map(|e| c.edge_origin[e]).collect();
    Minor { graph, removed }
}

/// Deletes the duals of the plan's edges from `d`, then contracts the duals
/// of the edges that the primal contraction removed as parallel.
pub fn c6_minor(d: &DualTiling, plan: &MatchingPlan) -> Result<Graph, MinorError> {
    if d.graph.edge_count() != plan.graph.edge_count() {
        return Err(MinorError::PlanMismatch(plan.family));
    }
    let primal = contract_simplify(&plan.graph, &plan.edges);
    let deleted: BTreeSet<EdgeId> = plan.edges.iter().map(|&e| d.dual_edge(e)).collect();
    let keep: Vec<EdgeId> = (0..d.graph.edge_count()).filter(|e| !deleted.contains(e)).collect();
    let rest = Graph::new(d.graph.vertex_count(), &keep.iter().map(|&e| d.graph.endpoints(e)).collect::<Vec<_>>())
        .expect("same vertex set");
    let position = |e: EdgeId| keep.binary_search(&e).expect("removed edges are not in the plan");
    let contract: Vec<EdgeId> = primal.removed.iter().map(|&e| position(d.dual_edge(e))).collect();
    Ok(rest.contract_edges(&contract).expect("edge ids in range").graph)
}

/// Locally grid graphs predicted for the contraction of the tiling and of
/// its dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorTarget {
    pub primal: GridFamilyId,
    pub dual: GridFamilyId,
}

pub fn minor_target(id: &HexFamilyId) -> Result<MinorTarget, FamilyError> {
    id.validate()?;
    let (k, m, r) = (id.k, id.m, id.r);
    let g = GridFamilyId::new;
    let same = |x| MinorTarget { primal: x, dual: x };
    Ok(match id.family {
        HexFamily::R => same(GridFamilyId::torus(k, m + 1, r)),
        HexFamily::A if k % 2 == 0 => MinorTarget { primal: g(GridFamily::K0, k, m + 1), dual: g(GridFamily::K2, k, m + 1) },
        HexFamily::A => same(g(GridFamily::K1, k, m + 1)),
        HexFamily::B => MinorTarget { primal: g(GridFamily::K2, k, m + 1), dual: g(GridFamily::K0, k, m + 1) },
        HexFamily::C => {
            MinorTarget { primal: g(GridFamily::K0, 2 * m + 2, k / 2), dual: g(GridFamily::K2, 2 * m + 2, k / 2) }
        }
        HexFamily::F => MinorTarget {
            primal: g(GridFamily::K2, 2 * m + 4, (k - 1) / 2),
            dual: g(GridFamily::K0, 2 * m + 4, (k - 1) / 2),
        },
        HexFamily::G => same(g(GridFamily::S, m + 1, k + 2)),
        HexFamily::H => same(g(GridFamily::S, m + 1, k + 1)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::dual_tiling;
    use crate::graph::isomorphic;
    use crate::grid_families::{build_grid_unchecked, identify_grid};

    fn id(s: &str) -> HexFamilyId {
        s.parse().unwrap()
    }

    #[test]
    fn plans_are_matchings_except_f() {
        for s in ["Hr:5,4,2", "Ha:5,4", "Hb:6,5", "Hc:6,4", "Hg:7,4", "Hg:4,3", "Hh:2,4", "Hh:3,6"] {
            let p = matching_plan(&id(s)).unwrap();
            assert!(p.is_matching, "{s}");
            assert_eq!(p.edges.len() * 2, p.graph().vertex_count(), "{s}");
        }
        assert!(!matching_plan(&id("Hf:7,4")).unwrap().is_matching);
    }

    #[test]
    fn contractions_hit_their_targets() {
        for s in ["Hr:5,4,2", "Ha:5,4", "Ha:6,4", "Hb:6,5", "Hc:6,4", "Hf:7,4", "Hg:7,4", "Hh:5,7", "Hh:2,4", "Hg:4,3", "Hb:4,3"] {
            let i = id(s);
            let t = plan_tiling(&i).unwrap();
            let plan = matching_plan(&i).unwrap();
            let target = minor_target(&i).unwrap();
            let primal = tiling_minor(&t, &plan).unwrap().graph;
            let want = build_grid_unchecked(&target.primal).graph;
            assert!(isomorphic(&primal, &want).is_some(), "{s} primal: got {:?}", identify_grid(&primal));
            let dual = c6_minor(&dual_tiling(&t), &plan).unwrap();
            let want = build_grid_unchecked(&target.dual).graph;
            assert!(isomorphic(&dual, &want).is_some(), "{s} dual: got {:?}", identify_grid(&dual));
        }
    }
}
