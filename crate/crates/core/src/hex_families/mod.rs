//! The seven families of hexagonal tilings, their building blocks and the
//! closed-form invariants predicted for them.

mod blocks;
mod build;
mod predict;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::surface::Rejection;

pub use blocks::{
    cylinder, cylinder_circuit, cylinder_grid, grid, ladder, moebius_circuit, parallel_moebius, tc1, tc2, wall,
    EdgeRole, Label, LabeledGraph,
};
pub use build::{build_block, build_hex, build_hex_labeled, klein_presentation, klein_presentation_labeled, BlockKind};
pub use predict::{predicted_invariants, Prediction};

pub(crate) use blocks::Builder;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HexFamily {
    R,
    A,
    B,
    C,
    F,
    G,
    H,
}

impl HexFamily {
    pub const ALL: [HexFamily; 7] =
        [HexFamily::R, HexFamily::A, HexFamily::B, HexFamily::C, HexFamily::F, HexFamily::G, HexFamily::H];

    pub fn tag(self) -> char {
        match self {
            HexFamily::R => 'r',
            HexFamily::A => 'a',
            HexFamily::B => 'b',
            HexFamily::C => 'c',
            HexFamily::F => 'f',
            HexFamily::G => 'g',
            HexFamily::H => 'h',
        }
    }

    pub fn from_tag(c: char) -> Option<HexFamily> {
        HexFamily::ALL.into_iter().find(|f| f.tag() == c)
    }

    /// Chromatic number claimed for the whole family.
    pub fn chromatic_number(self) -> usize {
        match self {
            HexFamily::C | HexFamily::F | HexFamily::G => 3,
            _ => 2,
        }
    }

    /// Only the twisted torus family closes its cylinder by a translation;
    /// every other family glues with a reflection somewhere.
    pub fn orientable(self) -> bool {
        self == HexFamily::R
    }
}

/// A member of one of the families, e.g. `Hr:5,4,2` or `Hg:7,4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HexFamilyId {
    pub family: HexFamily,
    pub k: usize,
    pub m: usize,
    /// Twist, family R only (0 elsewhere).
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("malformed family spec `{0}`")]
    Syntax(String),
    #[error("{id}: parameters out of range ({reason})")]
    Range { id: HexFamilyId, reason: &'static str },
    #[error("building block parameters out of range ({0})")]
    Block(&'static str),
    #[error("{id}: construction is not a hexagonal tiling: {rejection}")]
    NotATiling { id: HexFamilyId, rejection: Rejection },
}

impl HexFamilyId {
    pub fn new(family: HexFamily, k: usize, m: usize) -> HexFamilyId {
        HexFamilyId { family, k, m, r: 0 }
    }

    pub fn twisted(k: usize, m: usize, r: usize) -> HexFamilyId {
        HexFamilyId { family: HexFamily::R, k, m, r }
    }

    /// Parameter ranges of the classification. Family R at `m = 0` (the
    /// spiral) and family F at `m = 0` are admitted here; whether they tile
    /// is left to certification.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let (k, m, r) = (self.k, self.m, self.r);
        let fail = |reason| Err(FamilyError::Range { id: *self, reason });
        if self.family != HexFamily::R && r != 0 {
            return fail("only family R takes a twist");
        }
        match self.family {
            HexFamily::R => {
                if r > k / 2 {
                    return fail("r > k/2");
                }
                match m {
                    0 if k >= 2 => Ok(()),
                    0 => fail("k < 2"),
                    1 if k > 3 && r >= 2 => Ok(()),
                    1 => fail("m = 1 needs k > 3 and r >= 2"),
                    _ if k >= 3 => Ok(()),
                    _ => fail("k < 3"),
                }
            }
            HexFamily::A => {
                if m >= 2 && k >= 3 {
                    Ok(())
                } else {
                    fail("needs m >= 2, k >= 3")
                }
            }
            HexFamily::B => {
                if k % 2 == 0 && m % 2 == 1 && m >= 3 && k >= 4 {
                    Ok(())
                } else {
                    fail("needs k even >= 4, m odd >= 3")
                }
            }
            HexFamily::C => {
                if k % 2 == 0 && k >= 6 && m >= 1 {
                    Ok(())
                } else {
                    fail("needs k even >= 6, m >= 1")
                }
            }
            HexFamily::F => {
                if k % 2 == 1 && k >= 7 {
                    Ok(())
                } else {
                    fail("needs k odd >= 7")
                }
            }
            HexFamily::G => {
                if m >= 3 && k > m {
                    Ok(())
                } else {
                    fail("needs k >= m + 1, m >= 3")
                }
            }
            HexFamily::H => {
                if k >= 2 && k + 2 <= m {
                    Ok(())
                } else {
                    fail("needs 2 <= k <= m - 2")
                }
            }
        }
    }

    /// Vertex count by the classification formula.
    pub fn vertex_count(&self) -> usize {
        let (k, m) = (self.k, self.m);
        match self.family {
            HexFamily::R | HexFamily::A | HexFamily::B | HexFamily::C => 2 * k * (m + 1),
            HexFamily::F => 2 * k * (m + 2),
            HexFamily::G => 2 * (m + 1) * (k + 2),
            HexFamily::H => 2 * (m + 1) * (k + 1),
        }
    }
}

impl fmt::Display for HexFamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{}:{},{}", self.family.tag(), self.k, self.m)?;
        if self.family == HexFamily::R {
            write!(f, ",{}", self.r)?;
        }
        Ok(())
    }
}

impl FromStr for HexFamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::Syntax(s.to_string());
        let rest = s.strip_prefix('H').ok_or_else(bad)?;
        let mut chars = rest.chars();
        let family = chars.next().and_then(HexFamily::from_tag).ok_or_else(bad)?;
        let rest = chars.as_str().strip_prefix(':').ok_or_else(bad)?;
        let nums: Vec<usize> = rest
            .split(',')
            .map(|x| if x.bytes().all(|b| b.is_ascii_digit()) && !x.is_empty() { x.parse().ok() } else { None })
            .collect::<Option<_>>()
            .ok_or_else(bad)?;
        match (family, nums.as_slice()) {
            (HexFamily::R, &[k, m, r]) => Ok(HexFamilyId { family, k, m, r }),
            (HexFamily::R, _) => Err(bad()),
            (_, &[k, m]) => Ok(HexFamilyId::new(family, k, m)),
            _ => Err(bad()),
        }
    }
}
