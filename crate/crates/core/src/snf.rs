//! Smith normal form over the integers.
//!
//! The elimination runs on `i64` with checked arithmetic first and is redone
//! on `BigInt` if any intermediate value overflows. Only the left transform
//! is ever needed downstream, so column operations are not recorded.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("integer overflow during elimination")]
pub struct Overflow;

pub trait SnfInt: Clone + Debug + PartialEq + Zero + One + Signed + Integer + CheckedMul + CheckedSub {}

impl SnfInt for i64 {}
impl SnfInt for BigInt {}

/// `U * A * V = diag(invariant_factors, 0, ...)` with `U`, `V` unimodular.
#[derive(Debug, Clone, PartialEq)]
pub struct SmithForm<T> {
    /// Positive invariant factors, each dividing the next.
    pub invariant_factors: Vec<T>,
    /// Row transform `U` (rows x rows), when requested.
    pub left: Option<Vec<Vec<T>>>,
}

impl<T: SnfInt> SmithForm<T> {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<T> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_i64(a: &[Vec<i64>], track_left: bool) -> Result<SmithForm<i64>, Overflow> {
    smith_generic(a.to_vec(), track_left)
}

pub fn smith_big(a: &[Vec<BigInt>], track_left: bool) -> SmithForm<BigInt> {
    smith_generic(a.to_vec(), track_left).expect("BigInt arithmetic cannot overflow")
}

/// Invariant factors of an `i64` matrix, promoting to big integers when
/// needed.
pub fn invariant_factors(a: &[Vec<i64>]) -> Vec<BigInt> {
    match smith_i64(a, false) {
        Ok(s) => s.invariant_factors.into_iter().map(BigInt::from).collect(),
        Err(Overflow) => {
            let big: Vec<Vec<BigInt>> =
                a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            smith_big(&big, false).invariant_factors
        }
    }
}

fn row_axpy<T: SnfInt>(target: &mut [T], q: &T, source: &[T]) -> Result<(), Overflow> {
    // target -= q * source
    for (t, s) in target.iter_mut().zip(source) {
        if s.is_zero() {
            continue;
        }
        let prod = q.checked_mul(s).ok_or(Overflow)?;
        *t = t.checked_sub(&prod).ok_or(Overflow)?;
    }
    Ok(())
}

fn sub_rows<T: SnfInt>(m: &mut [Vec<T>], i: usize, q: &T, t: usize) -> Result<(), Overflow> {
    debug_assert_ne!(i, t);
    let (target, source) = if i < t {
        let (lo, hi) = m.split_at_mut(t);
        (&mut lo[i], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(i);
        (&mut hi[0], &lo[t])
    };
    row_axpy(target, q, source)
}

fn sub_cols<T: SnfInt>(m: &mut [Vec<T>], j: usize, q: &T, t: usize) -> Result<(), Overflow> {
    for row in m.iter_mut() {
        if row[t].is_zero() {
            continue;
        }
        let prod = q.checked_mul(&row[t]).ok_or(Overflow)?;
        row[j] = row[j].checked_sub(&prod).ok_or(Overflow)?;
    }
    Ok(())
}

fn smith_generic<T: SnfInt>(mut a: Vec<Vec<T>>, track_left: bool) -> Result<SmithForm<T>, Overflow> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut u: Option<Vec<Vec<T>>> = track_left.then(|| {
        (0..rows)
            .map(|i| (0..rows).map(|j| if i == j { T::one() } else { T::zero() }).collect())
            .collect()
    });
    let mut diag = Vec::new();

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut a, &mut u, t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                sub_rows(&mut a, i, &q, t)?;
                if let Some(u) = u.as_mut() {
                    sub_rows(u, i, &q, t)?;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                sub_cols(&mut a, j, &q, t)?;
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // a remainder smaller than the pivot is left somewhere in row
                // or column t; move the smallest one into the pivot spot
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    swap_rows(&mut a, &mut u, t, best.0);
                } else if best.1 != t {
                    for row in a.iter_mut() {
                        row.swap(t, best.1);
                    }
                }
                continue;
            }
            // the pivot must divide the rest of the block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    let minus_one = -T::one();
                    sub_rows(&mut a, t, &minus_one, i)?;
                    if let Some(u) = u.as_mut() {
                        sub_rows(u, t, &minus_one, i)?;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -x.clone();
            }
            if let Some(u) = u.as_mut() {
                for x in u[t].iter_mut() {
                    *x = -x.clone();
                }
            }
        }
        diag.push(a[t][t].clone());
    }
    Ok(SmithForm { invariant_factors: diag, left: u })
}

fn swap_rows<T>(a: &mut [Vec<T>], u: &mut Option<Vec<Vec<T>>>, i: usize, j: usize) {
    if i != j {
        a.swap(i, j);
        if let Some(u) = u.as_mut() {
            u.swap(i, j);
        }
    }
}

/// Integer matrix product, used by callers composing transforms.
pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Result<Vec<Vec<i64>>, Overflow> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            debug_assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| {
                    row.iter().zip(b).try_fold(0i64, |acc, (&x, brow)| {
                        if x == 0 || brow[j] == 0 {
                            Ok(acc)
                        } else {
                            x.checked_mul(brow[j]).and_then(|p| acc.checked_add(p)).ok_or(Overflow)
                        }
                    })
                })
                .collect()
        })
        .collect()
}
