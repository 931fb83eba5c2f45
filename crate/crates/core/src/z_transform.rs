//! Z-domain constructions: windowed moment sums, the brute-force
//! multidimensional transform, and its scaled-determinant closed form.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::epsilon::{enumerate_indices, gamma_int, sign_oracle, EpsilonValue};
use crate::error::{check_dim, Error, Result};
use crate::laurent::{poly_det, LaurentPoly};
use crate::rational::{
    exact_complex, exact_real, format_rational, latex_rational, round_complex, serde_rational,
    ExactComplex,
};

/// Largest dimension for which the brute-force oracle is built.
pub const MAX_Z_DIM: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RocKind {
    /// `z_q != 0`; every transform body is a finite Laurent sum.
    NonzeroModulus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RocConstraint {
    /// 1-based variable index.
    pub var: usize,
    pub kind: RocKind,
}

/// Region of convergence as a Cartesian product of per-variable sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RocSpec {
    pub constraints: Vec<RocConstraint>,
}

impl RocSpec {
    pub fn contains(&self, pt: &[Complex64]) -> bool {
        pt.len() == self.constraints.len()
            && self.constraints.iter().all(|c| match c.kind {
                RocKind::NonzeroModulus => !pt[c.var - 1].is_zero(),
            })
    }

    pub fn to_text(&self) -> String {
        self.constraints
            .iter()
            .map(|c| format!("|z{}| > 0", c.var))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// A closed-form Z-transform `scale * body` in variables `z_1..z_N`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TransformResult {
    pub dim: usize,
    #[serde(with = "serde_rational")]
    pub scale: BigRational,
    pub body: LaurentPoly,
    pub roc: RocSpec,
}

impl TransformResult {
    /// `scale * body` as a single polynomial.
    pub fn expanded(&self) -> LaurentPoly {
        self.body.scale(&self.scale)
    }

    /// Exact equality of the represented transforms, regardless of how the
    /// scale is split off.
    pub fn same_transform(&self, other: &TransformResult) -> bool {
        self.dim == other.dim && self.expanded() == other.expanded()
    }

    pub fn eval(&self, z: &[Complex64]) -> Result<Complex64> {
        Ok(self.body.eval(z)? * crate::rational::to_f64(&self.scale))
    }

    pub fn eval_exact(&self, z: &[BigRational]) -> Result<BigRational> {
        Ok(self.body.eval_exact(z)? * &self.scale)
    }

    /// Exact evaluation at the given floating-point point, rounded once.
    pub fn eval_precise(&self, z: &[Complex64]) -> Result<Complex64> {
        let exact = z.iter().map(|&c| exact_complex(c)).collect::<Result<Vec<_>>>()?;
        Ok(round_complex(&self.eval_gaussian(&exact)?))
    }

    pub fn eval_gaussian(&self, z: &[ExactComplex]) -> Result<ExactComplex> {
        Ok(self.body.eval_gaussian(z)? * exact_real(self.scale.clone()))
    }

    /// True when every exponent of every variable lies in `[-N, -1]`.
    pub fn exponents_in_window(&self) -> bool {
        let n = self.dim as i32;
        self.body
            .terms()
            .all(|(m, _)| m.exponents().iter().all(|&e| (-n..=-1).contains(&e)))
    }

    pub fn to_text(&self) -> String {
        let body = self.body.to_text("z");
        if self.scale.is_one() {
            body
        } else {
            format!("{} ({body})", format_rational(&self.scale))
        }
    }

    pub fn to_latex(&self) -> String {
        let body = self.body.to_latex("z");
        if self.scale.is_one() {
            body
        } else {
            format!("{} \\left( {body} \\right)", latex_rational(&self.scale))
        }
    }
}

/// Discrete unit step `u[n - n0]`.
pub fn heaviside(n: i64, n0: i64) -> i64 {
    i64::from(n >= n0)
}

fn check_moment_args(n: usize, p: usize, q: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InputDomain("dimension must be positive".into()));
    }
    if p >= n {
        return Err(Error::InputDomain(format!("moment order {p} outside 0..={}", n - 1)));
    }
    if q < 1 || q > n {
        return Err(Error::InputDomain(format!("variable index {q} outside 1..={n}")));
    }
    Ok(())
}

/// `S_N(p, q) = sum_{r=1}^{N} r^p z_q^{-r}`, as a polynomial in all `N`
/// variables that only involves `z_q`.
pub fn s_sum(n: usize, p: usize, q: usize) -> Result<LaurentPoly> {
    check_moment_args(n, p, q)?;
    LaurentPoly::from_terms(
        n,
        (1..=n).map(|r| {
            let mut exps = vec![0; n];
            exps[q - 1] = -(r as i32);
            let weight = num_traits::pow(BigInt::from(r), p);
            (exps, BigRational::from_integer(weight))
        }),
    )
}

/// `roc(N)`: one nonzero-modulus constraint per variable.
pub fn roc(n: usize) -> RocSpec {
    RocSpec {
        constraints: (1..=n)
            .map(|var| RocConstraint {
                var,
                kind: RocKind::NonzeroModulus,
            })
            .collect(),
    }
}

/// `prod_{p=1}^{N-1} prod_{q=1}^{N-p} (N+1-p-q)`.
pub fn scale_constant(n: usize) -> BigRational {
    let mut acc = BigInt::one();
    for p in 1..n {
        for q in 1..=n - p {
            acc *= BigInt::from(n + 1 - p - q);
        }
    }
    BigRational::from_integer(acc)
}

/// Direct sum of `eps(n) * prod z_i^{-n_i}` over all `N^N` index tuples.
pub fn brute_force_ztransform(n: usize) -> Result<TransformResult> {
    check_dim(n, 2, MAX_Z_DIM)?;
    let terms = enumerate_indices(n).filter_map(|idx| {
        let eps = sign_oracle(&idx);
        (eps != EpsilonValue::Zero).then(|| {
            let exps = idx.indices().iter().map(|&i| -(i as i32)).collect();
            (exps, eps.to_rational())
        })
    });
    Ok(TransformResult {
        dim: n,
        scale: BigRational::one(),
        body: LaurentPoly::from_terms(n, terms)?,
        roc: roc(n),
    })
}

/// The `N x N` matrix with entry `(p, q) = S_N(p, q + 1)`.
pub fn moment_matrix(n: usize) -> Result<Vec<Vec<LaurentPoly>>> {
    (0..n)
        .map(|p| (1..=n).map(|q| s_sum(n, p, q)).collect())
        .collect()
}

/// `det[S_N(p, q)] / scale_constant(N)`.
pub fn determinant_ztransform(n: usize) -> Result<TransformResult> {
    check_dim(n, 2, MAX_Z_DIM)?;
    let body = poly_det(&moment_matrix(n)?)?;
    Ok(TransformResult {
        dim: n,
        scale: scale_constant(n).recip(),
        body,
        roc: roc(n),
    })
}

/// The three-dimensional double sum
/// `1/2 sum_{m=1}^{3} sum_{k=1}^{2} (-1)^{k+m} S(m-1,1) S(G(m)-m+1,k+1) S(3-G(m),4-k)`
/// with `G` the gamma function on `{1, 2, 3}`.
pub fn compact_form_3d() -> TransformResult {
    let s = |p: i64, q: i64| s_sum(3, p as usize, q as usize).expect("indices in range");
    let mut body = LaurentPoly::zero(3);
    for m in 1..=3i64 {
        let g = gamma_int(m as u32);
        for k in 1..=2i64 {
            let term = &(&s(m - 1, 1) * &s(g - m + 1, k + 1)) * &s(3 - g, 4 - k);
            body = if (k + m) % 2 == 0 { &body + &term } else { &body - &term };
        }
    }
    TransformResult {
        dim: 3,
        scale: BigRational::new(BigInt::one(), BigInt::from(2)),
        body,
        roc: roc(3),
    }
}
