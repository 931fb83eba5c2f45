//! Determinants over commutative rings by memoised cofactor expansion.
//!
//! The minor on rows `0..k` and a column set `S` (|S| = k) is expanded along
//! its last row, reusing the minors on rows `0..k-1` for every `S \ {c}`.
//! This visits each of the `2^n` column subsets once instead of the `n!`
//! permutations of the Leibniz sum.

use std::collections::HashMap;

use num_complex::Complex64;

use super::{LaurentPoly, RationalFn};
use crate::rational::ExactComplex;
use crate::error::{Error, Result};

/// Largest side accepted by [`det`].
pub const MAX_SIDE: usize = 8;

/// Commutative-ring operations needed for a determinant.
pub trait RingElement: Clone {
    fn ring_add(&self, other: &Self) -> Result<Self>;
    fn ring_mul(&self, other: &Self) -> Result<Self>;
    fn ring_neg(&self) -> Self;
}

impl RingElement for LaurentPoly {
    fn ring_add(&self, other: &Self) -> Result<Self> {
        self.checked_add(other)
    }

    fn ring_mul(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)
    }

    fn ring_neg(&self) -> Self {
        -self
    }
}

impl RingElement for RationalFn {
    fn ring_add(&self, other: &Self) -> Result<Self> {
        self.checked_add(other)
    }

    fn ring_mul(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)
    }

    fn ring_neg(&self) -> Self {
        self.neg()
    }
}

impl RingElement for Complex64 {
    fn ring_add(&self, other: &Self) -> Result<Self> {
        Ok(self + other)
    }

    fn ring_mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }

    fn ring_neg(&self) -> Self {
        -self
    }
}

impl RingElement for ExactComplex {
    fn ring_add(&self, other: &Self) -> Result<Self> {
        Ok(self + other)
    }

    fn ring_mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }

    fn ring_neg(&self) -> Self {
        -self.clone()
    }
}

impl RingElement for num_complex::Complex<num_bigint::BigInt> {
    fn ring_add(&self, other: &Self) -> Result<Self> {
        Ok(self + other)
    }

    fn ring_mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }

    fn ring_neg(&self) -> Self {
        -self.clone()
    }
}

/// Determinant of a square matrix given as rows.
pub fn det<T: RingElement>(rows: &[Vec<T>]) -> Result<T> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::InputDomain("determinant of an empty matrix".into()));
    }
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::InputDomain(format!(
            "matrix is not square: {n} rows but a row of length {}",
            r.len()
        )));
    }
    if n > MAX_SIDE {
        return Err(Error::InputDomain(format!(
            "matrix side {n} exceeds the supported maximum {MAX_SIDE}"
        )));
    }

    // level k: minors on rows 0..k keyed by column mask
    let mut prev: HashMap<u32, T> = HashMap::new();
    for c in 0..n {
        prev.insert(1 << c, rows[0][c].clone());
    }
    for k in 1..n {
        let mut next = HashMap::new();
        for mask in (0u32..1 << n).filter(|m| m.count_ones() as usize == k + 1) {
            let mut acc: Option<T> = None;
            let cols = (0..n).filter(|c| mask & (1 << c) != 0);
            for (pos, c) in cols.enumerate() {
                let minor = &prev[&(mask & !(1 << c))];
                let mut term = rows[k][c].ring_mul(minor)?;
                if (k + pos) % 2 == 1 {
                    term = term.ring_neg();
                }
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.ring_add(&term)?,
                });
            }
            next.insert(mask, acc.expect("mask has k + 1 columns"));
        }
        prev = next;
    }
    Ok(prev.remove(&((1u32 << n) - 1)).expect("full mask present"))
}

/// Determinant over the Laurent-polynomial ring.
pub fn poly_det(rows: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    det(rows)
}
