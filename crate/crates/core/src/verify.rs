//! Cross-checks of every closed form against its oracle, packaged as
//! itemised pass/fail outcomes.

use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use crate::epsilon::{enumerate_indices, epsilon_product, sign_oracle};
use crate::error::{check_dim, Result};
use crate::rational::{exact_complex, round_complex};
use crate::s_domain::{
    laplace_determinant, laplace_pointwise_exact, tustin_map_exact, TustinParams, MAX_S_DIM,
};
use crate::sampling::{rel_diff, SampleRng};
use crate::z_transform::{brute_force_ztransform, determinant_ztransform, MAX_Z_DIM};

/// Parameters for [`run_verification`].
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub dim: usize,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub params: TustinParams,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// First few offending cases when the check fails.
    pub diffs: Vec<String>,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}: {}", self.name, self.detail)?;
        for d in &self.diffs {
            write!(f, "\n    {d}")?;
        }
        Ok(())
    }
}

const MAX_DIFFS: usize = 10;

/// Closed-form epsilon against inversion parity over all `N^N` tuples.
pub fn check_epsilon(dim: usize) -> Result<CheckOutcome> {
    let mut total = 0usize;
    let mut diffs = Vec::new();
    let mut mismatches = 0usize;
    for idx in enumerate_indices(dim) {
        total += 1;
        let oracle = sign_oracle(&idx);
        let formula = epsilon_product(&idx);
        if formula.as_ref().ok() != Some(&oracle) {
            mismatches += 1;
            if diffs.len() < MAX_DIFFS {
                diffs.push(format!("{idx}: oracle {oracle}, product {formula:?}"));
            }
        }
    }
    Ok(CheckOutcome {
        name: "epsilon-product".into(),
        passed: mismatches == 0,
        detail: format!("{total} tuples, {mismatches} mismatches"),
        diffs,
    })
}

/// Scaled determinant against the brute-force sum, as exact polynomials.
pub fn check_determinant(dim: usize) -> Result<CheckOutcome> {
    let bf = brute_force_ztransform(dim)?;
    let det = determinant_ztransform(dim)?;
    let diff = &det.expanded() - &bf.expanded();
    let diffs = diff
        .terms()
        .take(MAX_DIFFS)
        .map(|(m, c)| format!("residual {c} at exponents {:?}", m.exponents()))
        .collect();
    Ok(CheckOutcome {
        name: "determinant-vs-brute-force".into(),
        passed: diff.is_zero(),
        detail: format!(
            "{} brute-force terms, scale {}, {} residual terms",
            bf.body.len(),
            det.scale,
            diff.len()
        ),
        diffs,
    })
}

/// Tustin-substituted Z-form against the Laplace forms at seeded random
/// points. Sample points are floats, but each route evaluates them in exact
/// arithmetic and rounds once, so the comparison measures the formulas and
/// not floating-point cancellation. The symbolic Laplace determinant joins
/// the comparison when the dimension allows it; the pointwise determinant of
/// `R_N` entries is always used.
pub fn check_tustin(cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let dim = cfg.dim;
    let zt = determinant_ztransform(dim)?;
    let symbolic = if dim <= MAX_S_DIM {
        Some(laplace_determinant(dim, &cfg.params)?)
    } else {
        None
    };
    let steps = cfg.params.steps_f64();
    let mut rng = SampleRng::new(cfg.seed);
    let mut worst = 0.0f64;
    let mut diffs = Vec::new();
    let mut failures = 0usize;
    for _ in 0..cfg.samples {
        let s = rng.s_point(&steps, 3.0, 0.25);
        let z = s
            .iter()
            .zip(cfg.params.steps())
            .map(|(&x, t)| tustin_map_exact(&exact_complex(x)?, t))
            .collect::<Result<Vec<_>>>()?;
        let reference = round_complex(&zt.eval_gaussian(&z)?);
        let mut others = vec![("pointwise", laplace_pointwise_exact(dim, &cfg.params, &s)?)];
        if let Some(l) = &symbolic {
            others.push(("symbolic", l.eval_precise(&s)?));
        }
        for (label, v) in others {
            let d = rel_diff(reference, v);
            worst = worst.max(d);
            if d > cfg.tol {
                failures += 1;
                if diffs.len() < MAX_DIFFS {
                    diffs.push(format!("s = {s:?}: z-form {reference}, {label} {v}, rel {d:e}"));
                }
            }
        }
    }
    let routes = if symbolic.is_some() { "symbolic+pointwise" } else { "pointwise" };
    Ok(CheckOutcome {
        name: "tustin-substitution".into(),
        passed: failures == 0,
        detail: format!(
            "{} points, routes {routes}, max rel diff {worst:.3e} (tol {:e})",
            cfg.samples, cfg.tol
        ),
        diffs,
    })
}

/// Runs every check for `cfg.dim`.
pub fn run_verification(cfg: &VerifyConfig) -> Result<Vec<CheckOutcome>> {
    check_dim(cfg.dim, 2, MAX_Z_DIM)?;
    Ok(vec![
        check_epsilon(cfg.dim)?,
        check_determinant(cfg.dim)?,
        check_tustin(cfg)?,
    ])
}

/// Default params helper: a uniform step across `dim` dimensions.
pub fn uniform_config(dim: usize, step: BigRational, samples: usize, seed: u64, tol: f64) -> Result<VerifyConfig> {
    Ok(VerifyConfig {
        dim,
        samples,
        seed,
        tol,
        params: TustinParams::uniform(dim, step)?,
    })
}
