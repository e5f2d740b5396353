use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{invariants_with, recognize, CapPolicy, InvariantReport, Recognition};
use crate::duality::{dual_tiling, is_locally_c6, triangle_dual};
use crate::graph::{isomorphic, Graph};
use crate::grid_families::{build_grid_unchecked, identify_grid};
use crate::hex_families::{build_hex, predicted_invariants, HexFamily, HexFamilyId};
use crate::minors::{c6_minor, matching_plan, minor_target, plan_tiling, tiling_minor};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusConfig {
    pub max_n: usize,
    /// Recognition and pairwise isomorphism tests run only up to this size.
    pub heavy_max_n: usize,
    pub minors: bool,
}

impl CensusConfig {
    pub fn new(max_n: usize) -> CensusConfig {
        CensusConfig { max_n, heavy_max_n: max_n.min(120), minors: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorCheck {
    pub primal_target: String,
    pub dual_target: String,
    /// Isomorphic to the target's recipe graph.
    pub primal_ok: bool,
    pub dual_ok: bool,
    /// What `identify_grid` says.
    pub primal_identified: Option<String>,
    pub dual_identified: Option<String>,
    pub is_matching: bool,
    pub parallel_removed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub id: String,
    pub n: usize,
    /// Why certification failed, if it did.
    pub rejection: Option<String>,
    pub report: Option<InvariantReport>,
    pub predicted_l_g: usize,
    pub predicted_count: Option<u128>,
    pub predicted_case: String,
    pub predicted_chi: usize,
    pub predicted_vertex_transitive: bool,
    pub predicted_orientable: bool,
    pub minor: Option<MinorCheck>,
    /// `None` when the dual is locally C6, else the violation.
    pub dual_violation: Option<String>,
    pub double_dual_ok: Option<bool>,
    pub recognized: Option<String>,
}

impl CensusRecord {
    pub fn l_g_matches(&self) -> Option<bool> {
        self.report.as_ref().map(|r| r.l_g == Some(self.predicted_l_g))
    }

    /// `None` if no report or the tables give no count.
    pub fn count_matches(&self) -> Option<bool> {
        let r = self.report.as_ref()?;
        let p = self.predicted_count?;
        Some(r.essential_count == Some(p))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub max_n: usize,
    pub heavy_max_n: usize,
    pub records: Vec<CensusRecord>,
    /// Isomorphic pairs from different families.
    pub cross_family_isomorphisms: Vec<(String, String)>,
    /// Isomorphic pairs with different parameters in one family.
    pub within_family_aliases: Vec<(String, String)>,
}

/// Valid ids with at most `max_n` vertices, sorted by family tag then
/// parameters.
pub fn census_ids(max_n: usize) -> Vec<HexFamilyId> {
    let mut ids: Vec<HexFamilyId> = (1..=max_n).flat_map(super::hex_ids_with_vertex_count).collect();
    ids.sort_by_key(|id| (id.family.tag(), id.k, id.m, id.r));
    ids
}

pub fn census(config: CensusConfig) -> Census {
    let ids = census_ids(config.max_n);
    let built: Vec<(CensusRecord, Option<Graph>)> = ids.par_iter().map(|id| record(id, &config)).collect();
    let mut pairs: BTreeMap<Vec<u64>, Vec<usize>> = BTreeMap::new();
    for (i, (rec, g)) in built.iter().enumerate() {
        if let (Some(g), Some(r)) = (g, &rec.report) {
            if rec.n <= config.heavy_max_n {
                pairs.entry(iso_key(g, r)).or_default().push(i);
            }
        }
    }
    let candidates: Vec<(usize, usize)> = pairs
        .values()
        .flat_map(|class| {
            class.iter().enumerate().flat_map(move |(a, &i)| class[a + 1..].iter().map(move |&j| (i, j)))
        })
        .collect();
    let iso: Vec<(usize, usize)> = candidates
        .into_par_iter()
        .filter(|&(i, j)| isomorphic(built[i].1.as_ref().unwrap(), built[j].1.as_ref().unwrap()).is_some())
        .collect();
    let (mut cross, mut within) = (Vec::new(), Vec::new());
    for (i, j) in iso {
        let pair = (ids[i].to_string(), ids[j].to_string());
        if ids[i].family == ids[j].family {
            within.push(pair);
        } else {
            cross.push(pair);
        }
    }
    Census {
        max_n: config.max_n,
        heavy_max_n: config.heavy_max_n,
        records: built.into_iter().map(|(r, _)| r).collect(),
        cross_family_isomorphisms: cross,
        within_family_aliases: within,
    }
}

/// Isomorphism-invariant fingerprint: measured invariants plus the sorted
/// distance histograms of all vertices.
fn iso_key(g: &Graph, r: &InvariantReport) -> Vec<u64> {
    let mut rows: Vec<Vec<u64>> = (0..g.vertex_count())
        .map(|v| {
            let mut h = vec![0u64; g.vertex_count()];
            for d in g.distances_from(v) {
                if d < h.len() {
                    h[d] += 1;
                }
            }
            h
        })
        .collect();
    rows.sort_unstable();
    let mut key = vec![
        r.n as u64,
        r.l_g.unwrap_or(0) as u64,
        r.essential_count.unwrap_or(0) as u64,
        r.orientable as u64,
        r.chi as u64,
    ];
    rows.dedup();
    for row in rows {
        key.extend(row);
        key.push(u64::MAX);
    }
    key
}

fn record(id: &HexFamilyId, config: &CensusConfig) -> (CensusRecord, Option<Graph>) {
    let p = predicted_invariants(id);
    let mut rec = CensusRecord {
        id: id.to_string(),
        n: id.vertex_count(),
        rejection: None,
        report: None,
        predicted_l_g: p.l_g,
        predicted_count: p.essential_count,
        predicted_case: p.case.to_string(),
        predicted_chi: p.chi,
        predicted_vertex_transitive: p.vertex_transitive,
        predicted_orientable: p.orientable,
        minor: None,
        dual_violation: None,
        double_dual_ok: None,
        recognized: None,
    };
    let t = match build_hex(id) {
        Ok(t) => t,
        Err(e) => {
            rec.rejection = Some(e.to_string());
            return (rec, None);
        }
    };
    let girth = t.graph().girth().unwrap_or(6);
    rec.report = Some(invariants_with(&t, CapPolicy::Doubling(girth.max(p.l_g) + 4)));
    let d = dual_tiling(&t);
    rec.dual_violation = is_locally_c6(&d.graph).err().map(|e| match d.parallel_cells() {
        Some((a, b)) => format!("{e} (cells {a} and {b} share two edges)"),
        None => e.to_string(),
    });
    rec.double_dual_ok = Some(triangle_dual(&d.graph).is_ok_and(|back| isomorphic(&back, t.graph()).is_some()));
    let heavy = rec.n <= config.heavy_max_n;
    if config.minors {
        rec.minor = minor_check(id);
    }
    if heavy {
        rec.recognized = match recognize(t.graph()) {
            Recognition::Member { id, .. } => Some(id.to_string()),
            _ => None,
        };
    }
    (rec, Some(t.graph().clone()))
}

fn minor_check(id: &HexFamilyId) -> Option<MinorCheck> {
    let target = minor_target(id).ok()?;
    let t = plan_tiling(id).ok()?;
    let plan = matching_plan(id).ok()?;
    let primal = tiling_minor(&t, &plan).ok()?;
    let dual = c6_minor(&dual_tiling(&t), &plan).ok()?;
    let matches = |g: &Graph, target| isomorphic(g, &build_grid_unchecked(target).graph).is_some();
    let name = |g: &Graph| identify_grid(g).map(|x| x.to_string());
    Some(MinorCheck {
        primal_target: target.primal.to_string(),
        dual_target: target.dual.to_string(),
        primal_ok: matches(&primal.graph, &target.primal),
        dual_ok: matches(&dual, &target.dual),
        primal_identified: name(&primal.graph),
        dual_identified: name(&dual),
        is_matching: plan.is_matching,
        parallel_removed: primal.removed.len(),
    })
}

impl Census {
    /// One `key=value` block per record, blank-line separated, followed by
    /// a summary block.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&format!("id={}\nn={}\n", r.id, r.n));
            match (&r.rejection, &r.report) {
                (Some(why), _) => out.push_str(&format!("status=rejected\nreason={why}\n")),
                (None, Some(rep)) => {
                    out.push_str("status=ok\n");
                    out.push_str(&rep.to_key_values());
                    out.push('\n');
                }
                (None, None) => out.push_str("status=unknown\n"),
            }
            out.push_str(&format!(
                "predicted_l_g={}\npredicted_count={}\npredicted_case={}\npredicted_chi={}\n\
                 predicted_vertex_transitive={}\npredicted_orientable={}\n",
                r.predicted_l_g,
                r.predicted_count.map_or("unknown".into(), |c| c.to_string()),
                r.predicted_case,
                r.predicted_chi,
                r.predicted_vertex_transitive,
                r.predicted_orientable
            ));
            if let Some(m) = &r.minor {
                out.push_str(&format!(
                    "minor_primal={} ok={} identified={}\nminor_dual={} ok={} identified={}\n\
                     minor_is_matching={}\nminor_parallel_removed={}\n",
                    m.primal_target,
                    m.primal_ok,
                    m.primal_identified.as_deref().unwrap_or("-"),
                    m.dual_target,
                    m.dual_ok,
                    m.dual_identified.as_deref().unwrap_or("-"),
                    m.is_matching,
                    m.parallel_removed
                ));
            }
            if r.report.is_some() {
                out.push_str(&format!(
                    "dual_locally_c6={}\ndouble_dual_ok={}\n",
                    r.dual_violation.as_deref().unwrap_or("true"),
                    r.double_dual_ok.unwrap_or(false)
                ));
            }
            if let Some(id) = &r.recognized {
                out.push_str(&format!("recognized={id}\n"));
            }
            out.push('\n');
        }
        out.push_str(&format!("max_n={}\nheavy_max_n={}\nrecords={}\n", self.max_n, self.heavy_max_n, self.records.len()));
        for (a, b) in &self.cross_family_isomorphisms {
            out.push_str(&format!("cross_family_isomorphism={a}~{b}\n"));
        }
        for (a, b) in &self.within_family_aliases {
            out.push_str(&format!("within_family_alias={a}~{b}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("census serialises")
    }

    pub fn records_of(&self, family: HexFamily) -> impl Iterator<Item = &CensusRecord> {
        let tag = format!("H{}:", family.tag());
        self.records.iter().filter(move |r| r.id.starts_with(&tag))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_census() {
        let c = census(CensusConfig::new(50));
        assert!(c.records.iter().any(|r| r.id == "Hr:3,2,0" && r.n == 18));
        let pair = |a: &str, b: &str| (a.to_string(), b.to_string());
        assert!(c.cross_family_isomorphisms.contains(&pair("Ha:4,3", "Hb:4,3")));
        assert!(c.cross_family_isomorphisms.contains(&pair("Ha:5,2", "Hh:2,4")));
        for r in c.records.iter().filter(|r| r.report.is_some()) {
            let got = r.recognized.clone().unwrap();
            let linked = got == r.id
                || c.cross_family_isomorphisms.iter().chain(&c.within_family_aliases).any(|p| *p == pair(&got, &r.id));
            assert!(linked, "{} recognized as {got}", r.id);
            assert_eq!(r.double_dual_ok, Some(r.dual_violation.is_none()), "{}", r.id);
            if r.report.as_ref().unwrap().l_g >= Some(8) {
                assert_eq!(r.dual_violation, None, "{}", r.id);
            }
        }
        let json: Census = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(json, c);
        assert!(c.to_text().contains("id=Hr:3,2,0\nn=18\n"));
    }
}
