use crate::graph::{chromatic_number_small, isomorphic, Graph, VertexId};
use crate::hex_families::{build_hex_labeled, HexFamily, HexFamilyId};
use crate::surface::{certify_tiling, orientation_signs, Rejection};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    NotATiling(Rejection),
    /// A tiling matching no family member; this would contradict the
    /// classification.
    Unmatched,
    /// `mapping[v]` is the vertex of the member's construction matched to
    /// `v`.
    Member { id: HexFamilyId, mapping: Vec<VertexId> },
}

/// Valid ids on exactly `n` vertices, sorted by family, then `k`, `m`, `r`.
/// Members that fail certification (degenerate `m = 0` cases) are included.
pub fn hex_ids_with_vertex_count(n: usize) -> Vec<HexFamilyId> {
    let mut out = Vec::new();
    if n % 2 == 1 {
        return out;
    }
    for family in HexFamily::ALL {
        for k in 1..=n / 2 {
            for m in 0..=n / 2 {
                let rs = if family == HexFamily::R { 0..=k / 2 } else { 0..=0 };
                for r in rs {
                    let id = HexFamilyId { family, k, m, r };
                    if id.vertex_count() == n && id.validate().is_ok() {
                        out.push(id);
                    }
                }
            }
        }
    }
    out
}

/// Certifies `g`, then searches the members on `g`'s vertex count. Chromatic
/// number and orientability only prune; a match is confirmed by an explicit
/// isomorphism.
pub fn recognize(g: &Graph) -> Recognition {
    let t = match certify_tiling(g) {
        Ok(t) => t,
        Err(e) => return Recognition::NotATiling(e),
    };
    let chi = chromatic_number_small(g);
    let orientable = orientation_signs(&t).is_orientable();
    for id in hex_ids_with_vertex_count(g.vertex_count()) {
        if id.family.chromatic_number() != chi || id.family.orientable() != orientable {
            continue;
        }
        let Ok(built) = build_hex_labeled(&id) else { continue };
        if let Some(mapping) = isomorphic(g, &built.graph) {
            return Recognition::Member { id, mapping };
        }
    }
    Recognition::Unmatched
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::hex_families::build_hex;

    fn round_trip(s: &str) -> Option<HexFamilyId> {
        let t = build_hex(&s.parse().unwrap()).unwrap();
        match recognize(t.graph()) {
            Recognition::Member { id, mapping } => {
                let built = build_hex(&id).unwrap();
                let moved = t.graph().relabeled(&mapping);
                assert_eq!(moved.edge_multiset(), built.graph().edge_multiset());
                Some(id)
            }
            _ => None,
        }
    }

    #[test]
    fn round_trips() {
        for s in ["Hc:6,4", "Hr:5,4,2", "Hf:7,0", "Ha:5,4", "Hf:9,3"] {
            assert_eq!(round_trip(s).map(|i| i.to_string()).as_deref(), Some(s));
        }
    }

    #[test]
    fn isomorphic_members_resolve_to_the_first_id() {
        for (s, first) in [("Hb:4,3", "Ha:4,3"), ("Hg:7,4", "Hf:9,3"), ("Hh:2,4", "Ha:5,2"), ("Hg:4,3", "Hc:6,3")] {
            assert_eq!(round_trip(s).map(|i| i.to_string()).as_deref(), Some(first), "{s}");
        }
    }

    #[test]
    fn petersen_is_not_a_tiling() {
        assert!(matches!(recognize(&named::petersen()), Recognition::NotATiling(Rejection::Girth { .. })));
    }

    #[test]
    fn ids_by_size() {
        let ids = hex_ids_with_vertex_count(18);
        assert!(ids.contains(&"Hr:3,2,0".parse().unwrap()));
        assert!(ids.iter().all(|i| i.vertex_count() == 18));
        assert!(hex_ids_with_vertex_count(19).is_empty());
    }
}
