use super::blocks::{self, grid_builder, tc1_builder, tc2_builder, wall_builder, Builder, EdgeRole, Label, LabeledGraph};
use super::{FamilyError, HexFamily, HexFamilyId};
use crate::surface::{certify_tiling, HexTiling};

/// Building blocks with their parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    Grid { p: usize, q: usize },
    CylinderGrid { p: usize, q: usize },
    Wall { k: usize, m: usize },
    Cylinder { k: usize, m: usize },
    CylinderCircuit { k: usize },
    MoebiusCircuit { k: usize },
    ParallelMoebius { k: usize },
    Ladder { k: usize, m: usize },
    Tc1 { k: usize, m: usize },
    Tc2 { k: usize, m: usize },
}

pub fn build_block(kind: BlockKind) -> Result<LabeledGraph, FamilyError> {
    let check = |ok: bool, reason| if ok { Ok(()) } else { Err(FamilyError::Block(reason)) };
    Ok(match kind {
        BlockKind::Grid { p, q } => {
            check(p >= 1 && q >= 1, "grid needs p, q >= 1")?;
            blocks::grid(p, q)
        }
        BlockKind::CylinderGrid { p, q } => {
            check(p >= 1 && q >= 3, "cylinder grid needs p >= 1, q >= 3")?;
            blocks::cylinder_grid(p, q)
        }
        BlockKind::Wall { k, m } => {
            check(k >= 1, "wall needs k >= 1")?;
            blocks::wall(k, m)
        }
        BlockKind::Cylinder { k, m } => {
            check(k >= 2, "cylinder needs k >= 2")?;
            blocks::cylinder(k, m)
        }
        BlockKind::CylinderCircuit { k } => {
            check(k >= 2, "cylinder circuit needs k >= 2")?;
            blocks::cylinder_circuit(k)
        }
        BlockKind::MoebiusCircuit { k } => {
            check(k >= 2, "Moebius circuit needs k >= 2")?;
            blocks::moebius_circuit(k)
        }
        BlockKind::ParallelMoebius { k } => {
            check(k >= 1, "parallel Moebius circuit needs k >= 1")?;
            blocks::parallel_moebius(k)
        }
        BlockKind::Ladder { k, m } => {
            check(k >= 1 && m >= 1, "ladder needs k, m >= 1")?;
            blocks::ladder(k, m)
        }
        BlockKind::Tc1 { k, m } => {
            check(k >= 1 && k + 2 <= m, "TC1 needs 1 <= k <= m - 2")?;
            blocks::tc1(k, m)
        }
        BlockKind::Tc2 { k, m } => {
            check(m >= 1 && k > m, "TC2 needs k >= m + 1, m >= 1")?;
            blocks::tc2(k, m)
        }
    })
}

fn close(b: &mut Builder, a: (char, usize), c: (char, usize)) {
    let (u, v) = (b.named(a.0, a.1), b.named(c.0, c.1));
    b.edge_ids(u, v, EdgeRole::Closing);
}

/// The construction of `id` before certification, with labels and edge
/// roles.
pub fn build_hex_labeled(id: &HexFamilyId) -> Result<LabeledGraph, FamilyError> {
    id.validate()?;
    let (k, m, r) = (id.k, id.m, id.r);
    let b = match id.family {
        HexFamily::R => {
            let mut b = wall_builder(k, m, true);
            for j in 0..k {
                close(&mut b, ('z', j), ('x', (j + r) % k));
            }
            b
        }
        HexFamily::A => {
            let mut b = wall_builder(k, m, true);
            close(&mut b, ('z', 0), ('x', 1));
            close(&mut b, ('z', 1), ('x', 0));
            for i in 2..k {
                close(&mut b, ('z', i), ('x', k + 1 - i));
            }
            b
        }
        HexFamily::B => {
            let mut b = wall_builder(k, m, true);
            close(&mut b, ('z', 0), ('x', 0));
            for i in 1..k {
                close(&mut b, ('z', i), ('x', k - i));
            }
            b
        }
        HexFamily::C => {
            let mut b = wall_builder(k, m, true);
            for i in 0..k / 2 {
                close(&mut b, ('z', i), ('z', i + k / 2));
                close(&mut b, ('x', i), ('x', i + k / 2));
            }
            b
        }
        HexFamily::F => {
            let mut b = wall_builder(k, m, true);
            for (ch, ring) in [('z', 'w'), ('x', 'v')] {
                for i in 0..k {
                    b.vertex(Label::Aux(ring, i));
                }
                for i in 0..k {
                    let (u, v) = (b.id(Label::Aux(ring, i)), b.id(Label::Aux(ring, (i + 1) % k)));
                    b.edge_ids(u, v, EdgeRole::Closing);
                }
                for j in 0..k {
                    let u = b.named(ch, j);
                    let v = b.id(Label::Aux(ring, (2 * j) % k));
                    b.edge_ids(u, v, EdgeRole::Closing);
                }
            }
            b
        }
        HexFamily::G => {
            let mut b = tc2_builder(k, m);
            for i in 0..=m {
                close(&mut b, ('z', i), ('w', i));
                close(&mut b, ('x', i), ('v', i));
            }
            b
        }
        HexFamily::H => {
            let mut b = tc1_builder(k, m);
            for i in 0..=k {
                close(&mut b, ('z', i), ('x', i));
                close(&mut b, ('v', i), ('w', i));
            }
            b
        }
    };
    Ok(b.finish())
}

fn certify(id: &HexFamilyId, g: &LabeledGraph) -> Result<HexTiling, FamilyError> {
    certify_tiling(&g.graph).map_err(|rejection| FamilyError::NotATiling { id: *id, rejection })
}

pub fn build_hex(id: &HexFamilyId) -> Result<HexTiling, FamilyError> {
    certify(id, &build_hex_labeled(id)?)
}

/// Grid presentation of families C and F whose rows close up with a
/// half-turn, exhibiting the Klein-bottle embedding.
pub fn klein_presentation_labeled(id: &HexFamilyId) -> Result<LabeledGraph, FamilyError> {
    id.validate()?;
    let (k, m) = (id.k, id.m);
    let rows = match id.family {
        HexFamily::C => 2 * m + 2,
        HexFamily::F => 2 * m + 4,
        _ => return Err(FamilyError::Range { id: *id, reason: "Klein presentation exists for C and F only" }),
    };
    let mut b = grid_builder(rows, k, false);
    b.remove_edge_where(|x, y| match (x, y) {
        (Label::Cell(r1, c1), Label::Cell(r2, c2)) => c1 == c2 && r2 == r1 + 1 && (r1 + c1) % 2 == 1,
        _ => false,
    });
    for c in (1..k).step_by(2) {
        b.edge(Label::Cell(0, c), Label::Cell(rows - 1, c), EdgeRole::Seam);
    }
    for i in 0..rows {
        b.name('z', i, Label::Cell(i, 0));
        b.name('x', i, Label::Cell(i, k - 1));
    }
    match id.family {
        HexFamily::C => {
            for i in 0..rows {
                close(&mut b, ('z', i), ('x', rows - 1 - i));
            }
        }
        _ => {
            close(&mut b, ('z', 0), ('x', 0));
            for i in 1..rows {
                close(&mut b, ('z', i), ('x', rows - i));
            }
        }
    }
    Ok(b.finish())
}

pub fn klein_presentation(id: &HexFamilyId) -> Result<HexTiling, FamilyError> {
    certify(id, &klein_presentation_labeled(id)?)
}
