use std::collections::BTreeSet;

use hextile::analysis::{invariants, recognize, Recognition};
use hextile::graph::{automorphism_orbits, chromatic_number_small, enumerate_cycles_upto, isomorphic, named, Cycle, Graph};
use hextile::grid_families::{build_grid, identify_grid, is_locally_grid};
use hextile::hex_families::{build_hex, build_hex_labeled, predicted_invariants, HexFamilyId, Label};
use hextile::minors::{matching_plan, minor_target, plan_tiling, tiling_minor};
use hextile::surface::{certify_tiling, double_cover, homology_class, is_essential, orientation_signs, HexTiling};

fn id(s: &str) -> HexFamilyId {
    s.parse().unwrap()
}

fn hex(s: &str) -> HexTiling {
    build_hex(&id(s)).unwrap()
}

fn grid(s: &str) -> Graph {
    build_grid(&s.parse().unwrap()).unwrap().graph
}

/// Orders an edge set forming one cycle into a `Cycle`.
fn cycle_of_edges(g: &Graph, edges: &BTreeSet<usize>) -> Cycle {
    let start = g.endpoints(*edges.iter().next().unwrap()).0;
    let mut walk = vec![start];
    let mut used = BTreeSet::new();
    loop {
        let v = *walk.last().unwrap();
        let next = g.incident(v).iter().find(|(_, e)| edges.contains(e) && !used.contains(e));
        let Some(&(w, e)) = next else { break };
        used.insert(e);
        if w == start {
            break;
        }
        walk.push(w);
    }
    assert_eq!(used.len(), edges.len());
    Cycle::from_vertices(g, &walk).unwrap()
}

fn cell_edges(t: &HexTiling, c: usize) -> BTreeSet<usize> {
    t.cells()[c].edges().iter().copied().collect()
}

#[test]
fn girth_and_colouring() {
    assert_eq!(named::cycle(6).girth(), Some(6));
    assert_eq!(named::petersen().girth(), Some(5));
    assert_eq!(hex("Ha:5,4").graph().girth(), Some(6));
    assert_eq!(chromatic_number_small(&named::cycle(6)), 2);
    assert_eq!(chromatic_number_small(&named::cycle(5)), 3);
    assert_eq!(chromatic_number_small(hex("Hc:6,4").graph()), 3);
}

#[test]
fn cycle_enumeration() {
    assert_eq!(enumerate_cycles_upto(&named::cycle(6), 6).len(), 1);
    assert_eq!(enumerate_cycles_upto(&named::complete(4), 4).len(), 7);
    let t = hex("Hr:3,2,0");
    assert_eq!(t.graph().vertex_count(), 18);
    assert_eq!(t.cell_count(), 9);
    let hexagons = enumerate_cycles_upto(t.graph(), 6);
    let essential = hexagons.iter().filter(|c| is_essential(&t, c)).count();
    assert_eq!((hexagons.len(), essential), (21, 12));
}

#[test]
fn orbits() {
    assert_eq!(automorphism_orbits(&named::cycle(6)).len(), 1);
    let mut p3 = automorphism_orbits(&named::path(3));
    p3.sort();
    assert_eq!(p3, vec![vec![0, 2], vec![1]]);
    assert_eq!(automorphism_orbits(hex("Hr:5,2,1").graph()).len(), 1);
}

#[test]
fn certification() {
    assert!(certify_tiling(&named::petersen()).is_err());
    assert!(certify_tiling(&named::cycle(6)).is_err());
    let t = hex("Hc:6,4");
    assert_eq!((t.graph().vertex_count(), t.cell_count()), (60, 30));
}

#[test]
fn orientability_and_cover() {
    assert!(orientation_signs(&hex("Hr:5,4,1")).is_orientable());
    assert!(!orientation_signs(&hex("Hc:6,1")).is_orientable());
    assert!(!orientation_signs(&hex("Hf:7,0")).is_orientable());
    let cover = double_cover(&hex("Hc:6,1")).unwrap();
    assert_eq!(cover.tiling().graph().vertex_count(), 48);
    assert!(orientation_signs(cover.tiling()).is_orientable());
}

#[test]
fn homology_classes() {
    let t = hex("Hr:5,4,1");
    let [a, b] = t.cells_of_edge(0);
    let ten: BTreeSet<usize> = cell_edges(&t, a).symmetric_difference(&cell_edges(&t, b)).copied().collect();
    let c = cycle_of_edges(t.graph(), &ten);
    assert_eq!(c.len(), 10);
    assert!(homology_class(&t, &c).is_zero());

    let around = t.corner_cell(t.graph().incident(0)[0].0, 0, t.graph().incident(0)[1].0);
    let cells: Vec<usize> = (0..t.cell_count()).filter(|&i| t.cells()[i].vertices().contains(&0)).collect();
    assert!(cells.contains(&around));
    let mut disk = BTreeSet::new();
    for &i in &cells {
        disk = disk.symmetric_difference(&cell_edges(&t, i)).copied().collect();
    }
    let rim = cycle_of_edges(t.graph(), &disk);
    assert_eq!(rim.len(), 12);
    assert!(!is_essential(&t, &rim));

    let lg = build_hex_labeled(&id("Hr:5,4,1")).unwrap();
    let row: Vec<usize> = (0..10).map(|c| lg.vertex(Label::Cell(0, c)).unwrap()).collect();
    let row = Cycle::from_vertices(t.graph(), &row).unwrap();
    assert!(!homology_class(&t, &row).is_zero());
}

#[test]
fn peripheral_cycle_of_a_short_torus() {
    let i = id("Hr:3,5,1");
    let t = build_hex(&i).unwrap();
    let lg = build_hex_labeled(&i).unwrap();
    let row: Vec<usize> = (0..6).map(|c| lg.vertex(Label::Cell(0, c)).unwrap()).collect();
    let row = Cycle::from_vertices(t.graph(), &row).unwrap();
    assert!(is_essential(&t, &row));
    assert_eq!(invariants(&t).l_g, Some(6));
}

#[test]
fn shortest_essential_examples() {
    let r = invariants(&hex("Hr:6,3,1"));
    assert_eq!((r.n, r.l_g, r.essential_count, r.chi), (48, Some(8), Some(24), 2));
    let f = invariants(&hex("Hf:7,4"));
    assert_eq!((f.l_g, f.essential_count, f.chi, f.orientable), (Some(7), Some(2), 3, false));
    let h = invariants(&hex("Hh:2,4"));
    assert_eq!((h.l_g, h.essential_count), (Some(6), Some(8)));
    let b = invariants(&hex("Hb:8,3"));
    assert_eq!((b.l_g, b.chi), (Some(8), 2));
    assert_eq!(predicted_invariants(&id("Hg:9,3")).essential_count, None);
    assert!(invariants(&hex("Hr:5,2,1")).vertex_transitive);
}

#[test]
fn vertex_counts() {
    for (s, n) in [("Hr:5,4,2", 50), ("Hf:7,4", 84), ("Hg:7,4", 90)] {
        assert_eq!(hex(s).graph().vertex_count(), n);
    }
    assert_eq!(grid("T:5,5,0").vertex_count(), 25);
    assert!(grid("T:5,5,0").is_regular(4));
    assert_eq!((grid("K0:6,5").vertex_count(), grid("K0:6,5").edge_count()), (30, 60));
    assert_eq!(grid("S:4,9").vertex_count(), 36);
}

#[test]
fn locally_grid_checks() {
    assert!(is_locally_grid(&grid("T:5,5,0")).is_ok());
    assert!(is_locally_grid(&named::grid(4, 4)).is_err());
    assert!(is_locally_grid(&named::complete(4)).is_err());
    assert_eq!(identify_grid(&grid("T:5,5,2")).map(|i| i.to_string()).as_deref(), Some("T:5,5,2"));
    assert_eq!(identify_grid(&named::cycle(6)), None);
}

#[test]
fn contractions() {
    let c6 = named::cycle(6);
    assert_eq!(c6.contract_edges(&[0]).unwrap().graph.simplify().edge_count(), 5);
    let tri = c6.contract_edges(&[0, 2, 4]).unwrap().graph;
    assert!(isomorphic(&tri, &named::cycle(3)).is_some());

    let i = id("Hf:7,4");
    let minor = tiling_minor(&plan_tiling(&i).unwrap(), &matching_plan(&i).unwrap()).unwrap().graph;
    assert_eq!(minor.vertex_count(), 36);
    assert!(minor.is_regular(4));
    // K2:12,3 is below the K2 range and its 3x3 neighbourhoods wrap
    assert!(is_locally_grid(&minor).is_err());
    assert_eq!(identify_grid(&minor), None);

    let t = minor_target(&id("Hc:6,4")).unwrap();
    assert_eq!((t.primal.to_string(), t.dual.to_string()), ("K0:10,3".into(), "K2:10,3".into()));
    let t = minor_target(&id("Hh:2,4")).unwrap();
    assert_eq!((t.primal.to_string(), t.dual.to_string()), ("S:5,3".into(), "S:5,3".into()));
    let t = minor_target(&id("Ha:5,4")).unwrap();
    assert_eq!((t.primal.to_string(), t.dual.to_string()), ("K1:5,5".into(), "K1:5,5".into()));
}

#[test]
fn a_and_b_at_k4_m3_coincide() {
    let a = hex("Ha:4,3");
    let b = hex("Hb:4,3");
    assert!(isomorphic(a.graph(), b.graph()).is_some());
    match recognize(b.graph()) {
        Recognition::Member { id, .. } => assert_eq!(id.to_string(), "Ha:4,3"),
        other => panic!("{other:?}"),
    }
    assert_eq!(automorphism_orbits(a.graph()).len(), 3);
}

#[test]
fn recognition() {
    match recognize(hex("Hc:6,4").graph()) {
        Recognition::Member { id, .. } => assert_eq!(id.to_string(), "Hc:6,4"),
        other => panic!("{other:?}"),
    }
    assert!(matches!(recognize(&named::petersen()), Recognition::NotATiling(_)));
}
