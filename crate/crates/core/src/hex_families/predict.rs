use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{HexFamily, HexFamilyId};

/// Invariants the classification tables assign to a family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub n: usize,
    pub l_g: usize,
    /// `None` where the tables give no count.
    pub essential_count: Option<u128>,
    pub chi: usize,
    pub vertex_transitive: bool,
    pub orientable: bool,
    /// Which table row produced `l_g` and the count.
    pub case: &'static str,
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc.to_u128().expect("binomial fits in u128")
}

fn pow2(e: usize) -> u128 {
    1u128 << e
}

pub fn predicted_invariants(id: &HexFamilyId) -> Prediction {
    let (k, m, r) = (id.k, id.m, id.r);
    let (l_g, essential_count, case) = match id.family {
        HexFamily::R => {
            let h = (m + 1) / 2;
            if k < m + 1 {
                (2 * k, Some((m + 1) as u128), "k<m+1")
            } else if k == m + 1 {
                (2 * k, Some((m + 1) as u128 + k as u128 * binom(m + 1, h.saturating_sub(r))), "k=m+1")
            } else if r < h {
                // covers r < floor((m+1)/2) < floor(k/2) and the boundary
                // floor((m+1)/2) = floor(k/2) that the table leaves open
                (2 * (m + 1), Some(k as u128 * binom(m + 1, h - r)), "r<(m+1)/2")
            } else {
                (2 * (m + 1 + r - h), Some(k as u128 * binom(r + h, m)), "(m+1)/2<=r<=k/2")
            }
        }
        HexFamily::A => {
            let l = (2 * k).min(2 * m + 2);
            match k.cmp(&(m + 1)) {
                std::cmp::Ordering::Less => (l, Some((m + 1) as u128), "k<m+1"),
                std::cmp::Ordering::Greater => (l, Some(pow2(m + 1)), "k>m+1"),
                std::cmp::Ordering::Equal => (l, Some(pow2(m + 1) + (m + 1) as u128), "k=m+1"),
            }
        }
        HexFamily::B => {
            let l = (2 * k).min(2 * m + 2);
            let half = (m + 1) / 2;
            let mut s = 2 * binom(m + 1, half);
            for j in 1..=(m - 1) / 4 {
                s += 4 * binom(m + 1, half - 2 * j);
            }
            match k.cmp(&(m + 1)) {
                std::cmp::Ordering::Less => (l, Some((m + 1) as u128), "k<m+1"),
                std::cmp::Ordering::Greater => (l, Some(s), "k>m+1"),
                std::cmp::Ordering::Equal => (l, Some(s + (m + 1) as u128), "k=m+1"),
            }
        }
        HexFamily::C => {
            if 4 * m + 4 < k + 1 {
                (4 * m + 4, Some((k / 2) as u128 * binom(2 * m + 2, m + 1)), "4m+4<k+1")
            } else {
                (k + 1, Some(2 * k as u128), "4m+4>k+1")
            }
        }
        HexFamily::F => {
            if 4 * m + 8 < k {
                (4 * m + 8, Some(((k - 1) / 2) as u128 * binom(2 * m + 4, m + 2)), "4m+8<k")
            } else {
                (k, Some(2), "4m+8>k")
            }
        }
        HexFamily::G => {
            if k > 2 * m + 1 {
                (2 * (k - m) - 2 * ((m + 1) / 2) + 3, None, "k>2m+1")
            } else if k % 2 == 1 {
                (k + 2, Some(2), "k<=2m+1, k odd")
            } else {
                (k + 3, Some(2 * (k + 2) as u128), "k<2m+1, k even")
            }
        }
        HexFamily::H => (2 * k + 2, Some(pow2(k + 1)), "all"),
    };
    Prediction {
        n: id.vertex_count(),
        l_g,
        essential_count,
        chi: id.family.chromatic_number(),
        vertex_transitive: id.family == HexFamily::R || (id.family == HexFamily::A && k == 4 && m % 2 == 1),
        orientable: id.family.orientable(),
        case,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Prediction {
        predicted_invariants(&s.parse().unwrap())
    }

    #[test]
    fn table_values() {
        let h = p("Hr:6,3,1");
        assert_eq!((h.l_g, h.essential_count, h.chi, h.n), (8, Some(24), 2, 48));
        assert_eq!(p("Hb:8,3").l_g, 8);
        assert_eq!(p("Hg:9,3").essential_count, None);
        assert_eq!((p("Hf:7,4").l_g, p("Hf:7,4").essential_count), (7, Some(2)));
        assert_eq!((p("Hh:2,4").l_g, p("Hh:2,4").essential_count), (6, Some(8)));
        assert!(p("Ha:4,3").vertex_transitive);
        assert!(!p("Ha:4,4").vertex_transitive);
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 1), 4);
        assert_eq!(binom(10, 5), 252);
        assert_eq!(binom(3, 4), 0);
    }
}
