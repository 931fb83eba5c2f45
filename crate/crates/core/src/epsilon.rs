//! The Levi-Civita symbol and the small-integer identities built on it.
//!
//! Three independent formulations are provided:
//!
//! * [`sign_oracle`] counts inversions and is the ground truth everything else
//!   is checked against;
//! * [`epsilon_product`] evaluates the normalised pairwise-difference product
//!   (a scaled Vandermonde product) in exact rational arithmetic;
//! * [`epsilon_generalized`] replaces each index by its image under an
//!   injective table before forming the same quotient product.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An `N`-tuple of 1-based indices, each in `1..=N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndex {
    indices: Vec<usize>,
}

impl MultiIndex {
    /// Builds an index tuple whose dimension is its length.
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        let dim = indices.len();
        Self::with_dim(indices, dim)
    }

    /// Builds an index tuple that must address an epsilon of dimension `dim`.
    pub fn with_dim(indices: Vec<usize>, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InputDomain("index dimension must be positive".into()));
        }
        if indices.len() != dim {
            return Err(Error::InputDomain(format!(
                "index tuple has length {}, expected {dim}",
                indices.len()
            )));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i < 1 || i > dim) {
            return Err(Error::InputDomain(format!(
                "index {bad} outside 1..={dim}"
            )));
        }
        Ok(Self { indices })
    }

    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Returns a copy with positions `a` and `b` (0-based) exchanged.
    pub fn swapped(&self, a: usize, b: usize) -> Self {
        let mut indices = self.indices.clone();
        indices.swap(a, b);
        Self { indices }
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")")
    }
}

/// A value of the Levi-Civita symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EpsilonValue {
    Negative,
    Zero,
    Positive,
}

impl EpsilonValue {
    pub fn to_i64(self) -> i64 {
        match self {
            EpsilonValue::Negative => -1,
            EpsilonValue::Zero => 0,
            EpsilonValue::Positive => 1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Self> {
        match v {
            -1 => Some(EpsilonValue::Negative),
            0 => Some(EpsilonValue::Zero),
            1 => Some(EpsilonValue::Positive),
            _ => None,
        }
    }

    /// Converts an exact rational, accepting only `-1`, `0` and `1`.
    pub fn from_rational(v: &BigRational) -> Option<Self> {
        if !v.is_integer() {
            return None;
        }
        v.to_integer().to_i64().and_then(Self::from_i64)
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.to_i64()))
    }

    pub fn negate(self) -> Self {
        match self {
            EpsilonValue::Negative => EpsilonValue::Positive,
            EpsilonValue::Zero => EpsilonValue::Zero,
            EpsilonValue::Positive => EpsilonValue::Negative,
        }
    }
}

impl fmt::Display for EpsilonValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_i64())
    }
}

/// Levi-Civita symbol by inversion-count parity.
pub fn sign_oracle(idx: &MultiIndex) -> EpsilonValue {
    let ix = idx.indices();
    let mut inversions = 0usize;
    for a in 0..ix.len() {
        for b in a + 1..ix.len() {
            match ix[a].cmp(&ix[b]) {
                std::cmp::Ordering::Equal => return EpsilonValue::Zero,
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    if inversions % 2 == 0 {
        EpsilonValue::Positive
    } else {
        EpsilonValue::Negative
    }
}

/// The exact value of the quotient product
/// `prod_{p=1}^{N-1} prod_{q=1}^{N-p} (n_{N+1-p} - n_q) / (N+1-p-q)`.
///
/// Each factor is divided in rational arithmetic; intermediate partial
/// products are generally not integers.
pub fn epsilon_product_exact(idx: &MultiIndex) -> Result<BigRational> {
    let n = idx.dim();
    if n < 2 {
        return Err(Error::UnsupportedDimension {
            dim: n,
            min: 2,
            max: usize::MAX,
        });
    }
    let ix = idx.indices();
    let mut acc = BigRational::one();
    for p in 1..n {
        for q in 1..=n - p {
            let num = ix[n - p] as i64 - ix[q - 1] as i64;
            let den = (n + 1 - p - q) as i64;
            acc *= BigRational::new(BigInt::from(num), BigInt::from(den));
        }
    }
    Ok(acc)
}

/// Levi-Civita symbol from the closed-form difference product.
pub fn epsilon_product(idx: &MultiIndex) -> Result<EpsilonValue> {
    let v = epsilon_product_exact(idx)?;
    EpsilonValue::from_rational(&v).ok_or_else(|| {
        Error::InputDomain(format!("difference product of {idx} evaluated to {v}"))
    })
}

/// A lookup table `G: {1..N} -> F` with pairwise-distinct values.
#[derive(Debug, Clone, PartialEq)]
pub struct InjectionTable<T> {
    values: Vec<T>,
}

impl<T: Clone + PartialEq> InjectionTable<T> {
    /// `values[k]` is the image of index `k + 1`.
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InputDomain("injection table is empty".into()));
        }
        for a in 0..values.len() {
            for b in a + 1..values.len() {
                if values[a] == values[b] {
                    return Err(Error::DegenerateDenominator(format!(
                        "table maps {} and {} to the same value",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        Ok(Self { values })
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Image of the 1-based index `i`.
    pub fn get(&self, i: usize) -> &T {
        &self.values[i - 1]
    }
}

impl<T: Num + Clone> InjectionTable<T> {
    /// The identity table `k -> k` on `1..=dim`.
    pub fn identity(dim: usize) -> Self {
        let mut values = Vec::with_capacity(dim);
        let mut k = T::zero();
        for _ in 0..dim {
            k = k + T::one();
            values.push(k.clone());
        }
        Self { values }
    }
}

/// The quotient product with every index `n` replaced by `G(n)`:
/// `prod (G(n_{N+1-p}) - G(n_q)) / (G(N+1-p) - G(q))`.
///
/// Exact for exact fields such as [`BigRational`]; for floating-point fields
/// the result carries the usual rounding error.
pub fn epsilon_generalized<T>(idx: &MultiIndex, g: &InjectionTable<T>) -> Result<T>
where
    T: Num + Clone,
{
    let n = idx.dim();
    if n < 2 {
        return Err(Error::UnsupportedDimension {
            dim: n,
            min: 2,
            max: usize::MAX,
        });
    }
    if g.dim() != n {
        return Err(Error::InputDomain(format!(
            "injection table covers {} indices, tuple has {n}",
            g.dim()
        )));
    }
    let ix = idx.indices();
    let mut acc = T::one();
    for p in 1..n {
        for q in 1..=n - p {
            let num = g.get(ix[n - p]).clone() - g.get(ix[q - 1]).clone();
            let den = g.get(n + 1 - p).clone() - g.get(q).clone();
            if den.is_zero() {
                return Err(Error::DegenerateDenominator(format!(
                    "G({}) == G({q})",
                    n + 1 - p
                )));
            }
            acc = acc * (num / den);
        }
    }
    Ok(acc)
}

/// `Gamma(k) = (k-1)!` for positive integers.
pub fn gamma_int(k: u32) -> i64 {
    assert!(k >= 1, "gamma_int is defined for positive integers");
    (1..k as i64).product()
}

/// Kronecker delta `delta_{m-p}` for `m, p in {1,2,3}` evaluated from the
/// gamma/cosine identity
/// `[2 G(m) c + m - 2](G(p) - 1) - (p G(m) - m) c + 1` with `c = cos(p pi)`.
pub fn kron_delta(m: i64, p: i64) -> Result<i64> {
    if !(1..=3).contains(&m) || !(1..=3).contains(&p) {
        return Err(Error::InputDomain(format!(
            "kron_delta arguments ({m}, {p}) must lie in {{1, 2, 3}}"
        )));
    }
    let gm = gamma_int(m as u32);
    let gp = gamma_int(p as u32);
    // cos(p pi) for integer p
    let c = if p % 2 == 0 { 1 } else { -1 };
    Ok((2 * gm * c + m - 2) * (gp - 1) - (p * gm - m) * c + 1)
}

/// Lexicographic odometer over all `dim^dim` index tuples.
#[derive(Debug, Clone)]
pub struct IndexTuples {
    dim: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for IndexTuples {
    type Item = MultiIndex;

    fn next(&mut self) -> Option<MultiIndex> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = self.dim;
        while pos > 0 {
            pos -= 1;
            if succ[pos] < self.dim {
                succ[pos] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos] = 1;
        }
        Some(MultiIndex { indices: current })
    }
}

/// All `dim^dim` tuples over `{1..dim}` in lexicographic order.
pub fn enumerate_indices(dim: usize) -> IndexTuples {
    IndexTuples {
        dim,
        next: (dim > 0).then(|| vec![1; dim]),
    }
}

/// `sign_oracle` over every tuple, returning `(nonzero, positive)` counts.
pub fn nonzero_counts(dim: usize) -> (usize, usize) {
    enumerate_indices(dim).fold((0, 0), |(nz, pos), idx| match sign_oracle(&idx) {
        EpsilonValue::Zero => (nz, pos),
        EpsilonValue::Positive => (nz + 1, pos + 1),
        EpsilonValue::Negative => (nz + 1, pos),
    })
}
