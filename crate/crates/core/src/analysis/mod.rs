//! Family-blind invariant reports, recognition of a graph as a family
//! member, and the parameter census.

mod census;
mod recognize;

use serde::{Deserialize, Serialize};

use crate::graph::{automorphism_orbits, chromatic_number_small};
use crate::surface::{HexTiling, Surface};

pub use census::{census, census_ids, Census, CensusConfig, CensusRecord, MinorCheck};
pub use recognize::{hex_ids_with_vertex_count, recognize, Recognition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub girth: Option<usize>,
    pub orientable: bool,
    pub h1_rank: usize,
    pub h1_torsion: Vec<i64>,
    /// `None` when no essential cycle was found within `cap`.
    pub l_g: Option<usize>,
    pub essential_count: Option<u128>,
    /// Largest length bound the essential search ran with.
    pub cap: usize,
    pub chi: usize,
    pub vertex_transitive: bool,
}

/// How the essential-cycle search bounds cycle length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapPolicy {
    /// Start here and double until a cycle is found or the bound passes the
    /// vertex count.
    Doubling(usize),
    Fixed(usize),
}

/// Every invariant of `t` from first principles, with the search bound
/// starting at twice the girth.
pub fn invariants(t: &HexTiling) -> InvariantReport {
    let girth = t.graph().girth().unwrap_or(6);
    invariants_with(t, CapPolicy::Doubling(2 * girth))
}

pub fn invariants_with(t: &HexTiling, policy: CapPolicy) -> InvariantReport {
    let g = t.graph();
    let n = g.vertex_count();
    let surface = Surface::new(t.clone());
    let shape = surface.h1_shape();
    let (mut cap, doubling) = match policy {
        CapPolicy::Doubling(c) => (c.max(1), true),
        CapPolicy::Fixed(c) => (c, false),
    };
    let found = loop {
        match surface.shortest_essential(cap) {
            Ok(s) => break Some(s),
            Err(_) if doubling && cap < n => cap = (2 * cap).min(n),
            Err(_) => break None,
        }
    };
    InvariantReport {
        n,
        girth: g.girth(),
        orientable: surface.is_orientable(),
        h1_rank: shape.rank,
        h1_torsion: shape.torsion,
        l_g: found.map(|s| s.length),
        essential_count: found.map(|s| s.count),
        cap,
        chi: chromatic_number_small(g),
        vertex_transitive: automorphism_orbits(g).len() == 1,
    }
}

impl InvariantReport {
    /// `key=value` lines, one per field.
    pub fn to_key_values(&self) -> String {
        let opt = |x: Option<String>| x.unwrap_or_else(|| "unknown".into());
        let torsion: Vec<String> = self.h1_torsion.iter().map(i64::to_string).collect();
        [
            format!("n={}", self.n),
            format!("girth={}", opt(self.girth.map(|x| x.to_string()))),
            format!("orientable={}", self.orientable),
            format!("h1_rank={}", self.h1_rank),
            format!("h1_torsion={}", torsion.join(",")),
            format!("l_g={}", opt(self.l_g.map(|x| x.to_string()))),
            format!("essential_count={}", opt(self.essential_count.map(|x| x.to_string()))),
            format!("cap={}", self.cap),
            format!("chi={}", self.chi),
            format!("vertex_transitive={}", self.vertex_transitive),
        ]
        .join("\n")
    }
}
