//! Laplace-domain forms obtained by substituting the bilinear (Tustin) map
//! `z_q = (1 + s_q T_q / 2) / (1 - s_q T_q / 2)` into the Z-domain results.
//!
//! Under the map, `z_q^{-1} = (2 - T_q s_q) / (2 + T_q s_q)`, so every moment
//! sum becomes a rational function of `s_q` over `(T_q s_q + 2)^N`.

use std::fmt;

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::epsilon::gamma_int;
use crate::error::{check_dim, Error, Result};
use crate::laurent::{det, LaurentPoly, RationalFn};
use crate::rational::{
    exact_complex, exact_real, format_rational, int, latex_rational, round_complex,
    serde_rational, serde_rational_vec, to_f64, ExactComplex,
};
use crate::z_transform::scale_constant;

/// Largest dimension for the exact Laplace determinant.
pub const MAX_S_DIM: usize = 5;

/// Per-dimension positive step constants `T_q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TustinParams {
    #[serde(with = "serde_rational_vec")]
    steps: Vec<BigRational>,
}

impl TustinParams {
    pub fn new(steps: Vec<BigRational>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InputDomain("at least one step constant is required".into()));
        }
        if let Some(t) = steps.iter().find(|t| !t.is_positive()) {
            return Err(Error::InputDomain(format!(
                "step constant {} must be positive",
                format_rational(t)
            )));
        }
        Ok(Self { steps })
    }

    /// The same `T` in every one of `dim` dimensions.
    pub fn uniform(dim: usize, t: BigRational) -> Result<Self> {
        Self::new(vec![t; dim])
    }

    /// A single step broadcast to `dim`, or exactly `dim` steps.
    pub fn broadcast(dim: usize, steps: Vec<BigRational>) -> Result<Self> {
        match steps.len() {
            1 => Self::uniform(dim, steps.into_iter().next().expect("one step")),
            len if len == dim => Self::new(steps),
            len => Err(Error::InputDomain(format!(
                "got {len} step constants for {dim} dimensions"
            ))),
        }
    }

    pub fn dim(&self) -> usize {
        self.steps.len()
    }

    pub fn steps(&self) -> &[BigRational] {
        &self.steps
    }

    pub fn step(&self, q: usize) -> &BigRational {
        &self.steps[q - 1]
    }

    pub fn steps_f64(&self) -> Vec<f64> {
        self.steps.iter().map(to_f64).collect()
    }

    pub fn uniform_step(&self) -> Option<&BigRational> {
        let first = &self.steps[0];
        self.steps.iter().all(|t| t == first).then_some(first)
    }
}

/// `(1 + sT/2) / (1 - sT/2)`.
pub fn tustin_map(s: Complex64, t: f64) -> Result<Complex64> {
    let half = s * t / 2.0;
    let den = Complex64::one() - half;
    if den.is_zero() {
        return Err(Error::MapSingularity(format!("s = {s}, T = {t}")));
    }
    Ok((Complex64::one() + half) / den)
}

/// The bilinear map in exact arithmetic, `(2 + T s) / (2 - T s)`.
pub fn tustin_map_exact(s: &ExactComplex, t: &BigRational) -> Result<ExactComplex> {
    let ts = s * exact_real(t.clone());
    let two = exact_real(int(2));
    let den = &two - &ts;
    if den.is_zero() {
        return Err(Error::MapSingularity(format!("s = {s}, T = {t}")));
    }
    Ok((two + ts) / den)
}

/// `w = (2 - T s) / (2 + T s)`, i.e. `z^{-1}` under the bilinear map.
fn inverse_image<F>(s: F, t: F) -> Option<F>
where
    F: Clone + num_traits::Num,
{
    let two = F::one() + F::one();
    let ts = s * t;
    let den = two.clone() + ts.clone();
    (!den.is_zero()).then(|| (two - ts) / den)
}

fn affine(n: usize, q: usize, slope: &BigRational, offset: i64) -> LaurentPoly {
    let s = LaurentPoly::var(n, q - 1).expect("q within arity");
    &s.scale(slope) + &LaurentPoly::constant(n, int(offset))
}

/// `T_q s_q + 2` in `n` variables.
pub fn pole_factor(n: usize, q: usize, t: &BigRational) -> LaurentPoly {
    affine(n, q, t, 2)
}

/// `R_N(p, q) = sum_{r=1}^{N} ((2 - T_q s_q) / (2 + T_q s_q))^r r^p`, kept
/// over the common denominator `(T_q s_q + 2)^N`.
pub fn r_sum(n: usize, p: usize, q: usize, params: &TustinParams) -> Result<RationalFn> {
    if n == 0 || p >= n || q < 1 || q > n {
        return Err(Error::InputDomain(format!(
            "R_{n}({p}, {q}) needs 0 <= p < {n} and 1 <= q <= {n}"
        )));
    }
    if params.dim() != n {
        return Err(Error::InputDomain(format!(
            "{} step constants for dimension {n}",
            params.dim()
        )));
    }
    let t = params.step(q);
    let minus = affine(n, q, &-t, 2); // 2 - T s
    let plus = pole_factor(n, q, t); // 2 + T s
    let mut numerator = LaurentPoly::zero(n);
    for r in 1..=n {
        let weight = BigRational::from_integer(num_traits::pow(BigInt::from(r), p));
        let term = &minus.pow(r as u32) * &plus.pow((n - r) as u32);
        numerator = &numerator + &term.scale(&weight);
    }
    RationalFn::new(numerator, plus.pow(n as u32))
}

/// A Laplace-domain transform `scale * body` in `s_1..s_N`.
///
/// The denominator of `body` is exactly
/// `prod_q (T_q s_q + 2)^{pole_orders[q-1]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LaplaceResult {
    pub dim: usize,
    #[serde(rename = "T")]
    pub params: TustinParams,
    #[serde(with = "serde_rational")]
    pub scale: BigRational,
    #[serde(flatten)]
    pub body: RationalFn,
    pub pole_orders: Vec<u32>,
}

impl LaplaceResult {
    /// `scale` folded into the numerator.
    pub fn to_ratfn(&self) -> RationalFn {
        self.body.scale(&self.scale)
    }

    /// Cross-multiplication equality of the represented functions.
    pub fn equivalent(&self, other: &LaplaceResult) -> bool {
        self.to_ratfn().equivalent(&other.to_ratfn())
    }

    pub fn eval(&self, s: &[Complex64]) -> Result<Complex64> {
        Ok(self.body.eval(s)? * to_f64(&self.scale))
    }

    pub fn eval_exact(&self, s: &[BigRational]) -> Result<BigRational> {
        Ok(self.body.eval_exact(s)? * &self.scale)
    }

    /// Exact evaluation at the given floating-point point, rounded once.
    pub fn eval_precise(&self, s: &[Complex64]) -> Result<Complex64> {
        let exact = s.iter().map(|&c| exact_complex(c)).collect::<Result<Vec<_>>>()?;
        let v = self.body.eval_gaussian(&exact)? * exact_real(self.scale.clone());
        Ok(round_complex(&v))
    }

    fn factor_list(&self, render: impl Fn(&LaurentPoly, u32) -> String) -> Vec<String> {
        self.pole_orders
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| render(&pole_factor(self.dim, i + 1, self.params.step(i + 1)), k))
            .collect()
    }

    pub fn to_text(&self) -> String {
        let den = self
            .factor_list(|f, k| {
                if k == 1 {
                    format!("({})", f.to_text("s"))
                } else {
                    format!("({})^{k}", f.to_text("s"))
                }
            })
            .join(" ");
        let frac = format!("({}) / ({den})", self.body.numerator().to_text("s"));
        if self.scale.is_one() {
            frac
        } else {
            format!("{} {frac}", format_rational(&self.scale))
        }
    }

    pub fn to_latex(&self) -> String {
        let den = self
            .factor_list(|f, k| {
                if k == 1 {
                    format!("\\left({}\\right)", f.to_latex("s"))
                } else {
                    format!("\\left({}\\right)^{{{k}}}", f.to_latex("s"))
                }
            })
            .join(" ");
        let frac = format!("\\frac{{{}}}{{{den}}}", self.body.numerator().to_latex("s"));
        if self.scale.is_one() {
            frac
        } else {
            format!("{} {frac}", latex_rational(&self.scale))
        }
    }
}

/// `det[R_N(p, q)] / scale_constant(N)`.
pub fn laplace_determinant(n: usize, params: &TustinParams) -> Result<LaplaceResult> {
    check_dim(n, 2, MAX_S_DIM)?;
    let rows = (0..n)
        .map(|p| (1..=n).map(|q| r_sum(n, p, q, params)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let body = det(&rows)?;
    Ok(LaplaceResult {
        dim: n,
        params: params.clone(),
        scale: scale_constant(n).recip(),
        body,
        pole_orders: vec![n as u32; n],
    })
}

/// `4T(s1 - s2)(T s1 - 2)(T s2 - 2) / ((T s1 + 2)^2 (T s2 + 2)^2)` built
/// directly, for a single `T` shared by both dimensions.
pub fn laplace_2d_closed(params: &TustinParams) -> Result<LaplaceResult> {
    if params.dim() != 2 {
        return Err(Error::InputDomain(format!(
            "the two-dimensional closed form needs 2 step constants, got {}",
            params.dim()
        )));
    }
    let t = params
        .uniform_step()
        .ok_or_else(|| Error::InputDomain("the two-dimensional closed form needs a uniform T".into()))?
        .clone();
    let s1 = LaurentPoly::var(2, 0)?;
    let s2 = LaurentPoly::var(2, 1)?;
    let numerator = &(&(&s1 - &s2).scale(&(int(4) * &t)) * &affine(2, 1, &t, -2)) * &affine(2, 2, &t, -2);
    let denominator = &pole_factor(2, 1, &t).pow(2) * &pole_factor(2, 2, &t).pow(2);
    Ok(LaplaceResult {
        dim: 2,
        params: params.clone(),
        scale: BigRational::one(),
        body: RationalFn::new(numerator, denominator)?,
        pole_orders: vec![2, 2],
    })
}

/// Numeric evaluator for the three-dimensional quintuple sum
/// `1/2 sum_{m,k,r1,r2,r3} (-1)^{k+m} w_1^{r1} w_{k+1}^{r2} w_{4-k}^{r3}
///  r1^{m-1} r2^{G(m)-m+1} r3^{3-G(m)}`, with `w_q = (2 - T_q s_q)/(2 + T_q s_q)`.
#[derive(Debug, Clone)]
pub struct Compact3d {
    steps: [f64; 3],
    exact_steps: [BigRational; 3],
}

impl Compact3d {
    /// Floating-point evaluation.
    pub fn eval(&self, s: &[Complex64]) -> Result<Complex64> {
        if s.len() != 3 {
            return Err(Error::ArityMismatch { left: 3, right: s.len() });
        }
        let mut powers = Vec::with_capacity(3);
        for q in 0..3 {
            let w = inverse_image(s[q], Complex64::new(self.steps[q], 0.0))
                .ok_or_else(|| pole_at(q, s[q]))?;
            powers.push((0..=3).map(|e| w.powi(e)).collect());
        }
        Ok(quintuple_sum(&powers, |v| Complex64::new(v as f64, 0.0)) * 0.5)
    }

    /// The same sum in exact arithmetic at the rational value of `s`,
    /// rounded once; requires the exact step constants.
    pub fn eval_precise(&self, s: &[Complex64]) -> Result<Complex64> {
        if s.len() != 3 {
            return Err(Error::ArityMismatch { left: 3, right: s.len() });
        }
        // each term has degree at most 3 in every w_q, so with w_q = a_q / d_q
        // the sum times 2 d_1^3 d_2^3 d_3^3 is a Gaussian integer
        let mut powers = Vec::with_capacity(3);
        let mut den = BigInt::from(2);
        for q in 0..3 {
            let w = inverse_image(exact_complex(s[q])?, exact_real(self.exact_steps[q].clone()))
                .ok_or_else(|| pole_at(q, s[q]))?;
            let (a, d) = gaussian_parts(&w);
            powers.push(
                (0..=3usize)
                    .map(|r| num_traits::pow(a.clone(), r) * num_traits::pow(d.clone(), 3 - r))
                    .collect(),
            );
            den *= num_traits::pow(d, 3);
        }
        let sum = quintuple_sum(&powers, |v| Complex::new(BigInt::from(v), BigInt::zero()));
        Ok(round_complex(&over_integer(sum, den)))
    }
}

/// `z = a / d` with `a` a Gaussian integer and `d` a positive integer.
fn gaussian_parts(z: &ExactComplex) -> (Complex<BigInt>, BigInt) {
    let d = z.re.denom().lcm(z.im.denom());
    let a = Complex::new(z.re.numer() * (&d / z.re.denom()), z.im.numer() * (&d / z.im.denom()));
    (a, d)
}

fn over_integer(a: Complex<BigInt>, d: BigInt) -> ExactComplex {
    let d = BigRational::from_integer(d);
    Complex::new(
        BigRational::from_integer(a.re) / &d,
        BigRational::from_integer(a.im) / d,
    )
}

fn pole_at(q: usize, s: Complex64) -> Error {
    Error::EvaluationPole(format!("T_{0} s_{0} = -2 at s_{0} = {1}", q + 1, s))
}

/// `sum_{m,k,r1,r2,r3} (-1)^{k+m} w_1^{r1} w_{k+1}^{r2} w_{4-k}^{r3}
///  r1^{m-1} r2^{G(m)-m+1} r3^{3-G(m)}` without the leading one half, given
/// `powers[q][r]` standing for `w_{q+1}^r`.
fn quintuple_sum<F>(powers: &[Vec<F>], from_int: impl Fn(i64) -> F) -> F
where
    F: Clone + num_traits::Num,
{
    let mut acc = F::zero();
    for m in 1..=3i64 {
        let g = gamma_int(m as u32);
        for k in 1..=2usize {
            let sign = if (k as i64 + m) % 2 == 0 { 1 } else { -1 };
            for r1 in 1..=3i64 {
                for r2 in 1..=3i64 {
                    for r3 in 1..=3i64 {
                        let weight = r1.pow((m - 1) as u32)
                            * r2.pow((g - m + 1) as u32)
                            * r3.pow((3 - g) as u32);
                        let term = powers[0][r1 as usize].clone()
                            * powers[k][r2 as usize].clone()
                            * powers[3 - k][r3 as usize].clone();
                        acc = acc + term * from_int(sign * weight);
                    }
                }
            }
        }
    }
    acc
}

pub fn laplace_compact_3d(params: &TustinParams) -> Result<Compact3d> {
    if params.dim() != 3 {
        return Err(Error::InputDomain(format!(
            "the three-dimensional sum needs 3 step constants, got {}",
            params.dim()
        )));
    }
    let s = params.steps_f64();
    let e = params.steps();
    Ok(Compact3d {
        steps: [s[0], s[1], s[2]],
        exact_steps: [e[0].clone(), e[1].clone(), e[2].clone()],
    })
}

/// `[R_N(p, q)]` evaluated from the per-variable images `w_q`.
fn r_matrix<F>(w: &[F]) -> Vec<Vec<F>>
where
    F: Clone + num_traits::Num,
{
    let n = w.len();
    (0..n)
        .map(|p| {
            w.iter()
                .map(|wq| {
                    let mut acc = F::zero();
                    let mut wr = F::one();
                    let mut r_f = F::zero();
                    for _ in 1..=n {
                        wr = wr * wq.clone();
                        r_f = r_f + F::one();
                        acc = acc + wr.clone() * num_traits::pow(r_f.clone(), p);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Floating-point route: the determinant of numerically evaluated `R_N`
/// entries. Accepts any positive real steps, including ones with no exact
/// rational form.
pub fn laplace_numeric(n: usize, steps: &[f64], s: &[Complex64]) -> Result<Complex64> {
    check_dim(n, 2, crate::laurent::MAX_SIDE)?;
    if steps.len() != n || s.len() != n {
        return Err(Error::InputDomain(format!(
            "dimension {n} needs {n} steps and {n} coordinates"
        )));
    }
    if let Some(t) = steps.iter().find(|t| t.is_nan() || **t <= 0.0) {
        return Err(Error::InputDomain(format!("step constant {t} must be positive")));
    }
    let w = (0..n)
        .map(|q| inverse_image(s[q], Complex64::new(steps[q], 0.0)).ok_or_else(|| pole_at(q, s[q])))
        .collect::<Result<Vec<_>>>()?;
    Ok(det(&r_matrix(&w))? / to_f64(&scale_constant(n)))
}

/// The same determinant-of-`R_N` route in exact arithmetic at the rational
/// value of `s`, rounded once.
pub fn laplace_pointwise_exact(n: usize, params: &TustinParams, s: &[Complex64]) -> Result<Complex64> {
    check_dim(n, 2, crate::laurent::MAX_SIDE)?;
    if params.dim() != n || s.len() != n {
        return Err(Error::InputDomain(format!(
            "dimension {n} needs {n} steps and {n} coordinates"
        )));
    }
    let w = (0..n)
        .map(|q| {
            inverse_image(exact_complex(s[q])?, exact_real(params.step(q + 1).clone()))
                .ok_or_else(|| pole_at(q, s[q]))
        })
        .collect::<Result<Vec<_>>>()?;
    // column q scaled by d_q^N, where w_q = a_q / d_q, keeps every entry a
    // Gaussian integer
    let mut den = BigInt::one();
    let mut cols = Vec::with_capacity(n);
    for wq in &w {
        let (a, d) = gaussian_parts(wq);
        let col: Vec<Complex<BigInt>> = (0..n)
            .map(|p| {
                (1..=n).fold(Complex::zero(), |acc, r| {
                    let weight = num_traits::pow(BigInt::from(r), p) * num_traits::pow(d.clone(), n - r);
                    acc + num_traits::pow(a.clone(), r) * weight
                })
            })
            .collect();
        den *= num_traits::pow(d, n);
        cols.push(col);
    }
    let rows: Vec<Vec<_>> = (0..n).map(|p| cols.iter().map(|c| c[p].clone()).collect()).collect();
    let d = det(&rows)?;
    let scale = scale_constant(n).numer() * den;
    Ok(round_complex(&over_integer(d, scale)))
}

/// A pole or zero confined to one variable's plane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneSingularity {
    /// 1-based variable index.
    pub var: usize,
    #[serde(with = "serde_rational")]
    pub location: BigRational,
    pub multiplicity: u32,
}

/// Pole/zero structure of the two-dimensional Laplace transform.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleZeroReport {
    pub dim: usize,
    #[serde(rename = "T", with = "serde_rational")]
    pub step: BigRational,
    pub poles: Vec<PlaneSingularity>,
    pub zeros: Vec<PlaneSingularity>,
    pub inter_dimensional_zeros: Vec<String>,
}

/// Poles at `-2/T` (double) and zeros at `2/T` in each plane, plus the
/// zero set `s1 = s2`.
pub fn pole_zero_report_2d(params: &TustinParams) -> Result<PoleZeroReport> {
    if params.dim() != 2 {
        return Err(Error::NotImplemented(format!(
            "closed-form pole/zero report exists only for dimension 2 (got {}); \
             use sampling-based verification for higher dimensions",
            params.dim()
        )));
    }
    let t = params
        .uniform_step()
        .ok_or_else(|| Error::InputDomain("pole/zero report needs a uniform T".into()))?
        .clone();
    let pole = -int(2) / &t;
    let zero = int(2) / &t;
    Ok(PoleZeroReport {
        dim: 2,
        step: t,
        poles: (1..=2)
            .map(|var| PlaneSingularity { var, location: pole.clone(), multiplicity: 2 })
            .collect(),
        zeros: (1..=2)
            .map(|var| PlaneSingularity { var, location: zero.clone(), multiplicity: 1 })
            .collect(),
        inter_dimensional_zeros: vec!["s1 = s2".into()],
    })
}

impl fmt::Display for PoleZeroReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dimension: {}", self.dim)?;
        writeln!(f, "T: {}", format_rational(&self.step))?;
        for p in &self.poles {
            writeln!(
                f,
                "pole: s{} = {} (multiplicity {})",
                p.var,
                format_rational(&p.location),
                p.multiplicity
            )?;
        }
        for z in &self.zeros {
            writeln!(
                f,
                "zero: s{} = {} (multiplicity {})",
                z.var,
                format_rational(&z.location),
                z.multiplicity
            )?;
        }
        for z in &self.inter_dimensional_zeros {
            writeln!(f, "inter-dimensional zero: {z}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::sampling::{rel_close, SampleRng};
    use crate::z_transform::{determinant_ztransform, s_sum};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn params_validation() {
        assert!(TustinParams::new(vec![]).is_err());
        assert!(TustinParams::new(vec![int(0)]).is_err());
        assert!(TustinParams::new(vec![int(1), rat(-1, 2)]).is_err());
        let p = TustinParams::broadcast(3, vec![rat(1, 2)]).unwrap();
        assert_eq!(p.dim(), 3);
        assert_eq!(p.uniform_step(), Some(&rat(1, 2)));
        assert!(TustinParams::broadcast(3, vec![int(1), int(2)]).is_err());
        let mixed = TustinParams::new(vec![int(1), int(2)]).unwrap();
        assert_eq!(mixed.uniform_step(), None);
    }

    #[test]
    fn map_basics() {
        assert_eq!(tustin_map(c(0.0, 0.0), 0.3).unwrap(), c(1.0, 0.0));
        let on_axis = tustin_map(c(0.0, 3.7), 0.5).unwrap();
        assert!((on_axis.norm() - 1.0).abs() < 1e-15);
        assert!(tustin_map(c(-0.2, 1.0), 1.0).unwrap().norm() < 1.0);
        assert!(matches!(tustin_map(c(2.0, 0.0), 1.0), Err(Error::MapSingularity(_))));
        assert!(tustin_map(c(4.0, 0.0), 0.5).is_err());
    }

    #[test]
    fn r_sum_values() {
        let p = TustinParams::uniform(2, int(1)).unwrap();
        let r = r_sum(2, 0, 1, &p).unwrap();
        assert_eq!(r.eval_exact(&[int(0), int(5)]).unwrap(), int(2));
        // T s = 2 kills every summand
        let p3 = TustinParams::uniform(3, rat(1, 2)).unwrap();
        let r3 = r_sum(3, 0, 2, &p3).unwrap();
        assert_eq!(r3.eval_exact(&[int(1), int(4), int(1)]).unwrap(), int(0));
        assert!(r_sum(3, 3, 1, &p3).is_err());
        assert!(r_sum(3, 0, 4, &p3).is_err());
        assert!(r_sum(2, 0, 1, &p3).is_err());
    }

    #[test]
    fn r_sum_is_substituted_moment_sum() {
        let params = TustinParams::new(vec![int(1), rat(1, 3), rat(5, 2)]).unwrap();
        let steps = params.steps_f64();
        let mut rng = SampleRng::new(11);
        for _ in 0..25 {
            let s = rng.s_point(&steps, 3.0, 0.25);
            let z: Vec<_> = s.iter().zip(&steps).map(|(&x, &t)| tustin_map(x, t).unwrap()).collect();
            for p in 0..3 {
                for q in 1..=3 {
                    let via_z = s_sum(3, p, q).unwrap().eval(&z).unwrap();
                    let via_s = r_sum(3, p, q, &params).unwrap().eval(&s).unwrap();
                    assert!(rel_close(via_z, via_s, 1e-10), "p={p} q={q}: {via_z} vs {via_s}");
                }
            }
        }
    }

    #[test]
    fn two_dimensional_identity() {
        for t in [int(1), rat(1, 2), int(3)] {
            let params = TustinParams::uniform(2, t).unwrap();
            let d = laplace_determinant(2, &params).unwrap();
            let closed = laplace_2d_closed(&params).unwrap();
            assert!(d.equivalent(&closed));
        }
    }

    #[test]
    fn two_dimensional_zeros() {
        let params = TustinParams::uniform(2, rat(1, 2)).unwrap();
        let closed = laplace_2d_closed(&params).unwrap();
        assert_eq!(closed.eval_exact(&[rat(3, 7), rat(3, 7)]).unwrap(), int(0));
        assert_eq!(closed.eval_exact(&[int(4), rat(-1, 3)]).unwrap(), int(0));
        assert!(matches!(
            closed.eval_exact(&[int(-4), int(1)]),
            Err(Error::EvaluationPole(_))
        ));
        assert!(laplace_2d_closed(&TustinParams::new(vec![int(1), int(2)]).unwrap()).is_err());
        assert!(laplace_2d_closed(&TustinParams::uniform(3, int(1)).unwrap()).is_err());
    }

    #[test]
    fn substituted_two_dimensional_ratfn_by_hand() {
        // R(0,1) R(1,2) - R(1,1) R(0,2)
        let params = TustinParams::uniform(2, int(1)).unwrap();
        let r = |p, q| r_sum(2, p, q, &params).unwrap();
        let lhs = r(0, 1).checked_mul(&r(1, 2)).unwrap();
        let rhs = r(1, 1).checked_mul(&r(0, 2)).unwrap();
        let combined = lhs.checked_sub(&rhs).unwrap();
        assert!(combined.equivalent(&laplace_2d_closed(&params).unwrap().to_ratfn()));
    }

    #[test]
    fn vanishes_at_origin() {
        for n in 2..=4 {
            let params = TustinParams::uniform(n, rat(2, 3)).unwrap();
            let l = laplace_determinant(n, &params).unwrap();
            assert_eq!(l.eval_exact(&vec![int(0); n]).unwrap(), int(0));
        }
    }

    #[test]
    fn denominator_is_product_of_pole_factors() {
        let params = TustinParams::new(vec![rat(1, 2), int(3)]).unwrap();
        let l = laplace_determinant(2, &params).unwrap();
        let want = &pole_factor(2, 1, &rat(1, 2)).pow(2) * &pole_factor(2, 2, &int(3)).pow(2);
        assert_eq!(l.body.denominator(), &want);
    }

    #[test]
    fn compact_3d_agrees() {
        let params = TustinParams::new(vec![int(1), rat(1, 2), rat(3, 2)]).unwrap();
        let det3 = laplace_determinant(3, &params).unwrap();
        let compact = laplace_compact_3d(&params).unwrap();
        let steps = params.steps_f64();
        let mut rng = SampleRng::new(3);
        for _ in 0..25 {
            let s = rng.s_point(&steps, 3.0, 0.25);
            let a = det3.eval_precise(&s).unwrap();
            let b = compact.eval_precise(&s).unwrap();
            let c = laplace_pointwise_exact(3, &params, &s).unwrap();
            assert!(rel_close(a, b, 1e-13), "{a} vs {b}");
            assert!(rel_close(a, c, 1e-13), "{a} vs {c}");
            // float routes lose digits to cancellation but stay close
            let d = compact.eval(&s).unwrap();
            let e = laplace_numeric(3, &steps, &s).unwrap();
            assert!(rel_close(a, d, 1e-6), "{a} vs {d}");
            assert!(rel_close(a, e, 1e-6), "{a} vs {e}");
        }
        assert_eq!(compact.eval(&[c(0.0, 0.0); 3]).unwrap(), c(0.0, 0.0));
        assert!(compact.eval(&[c(-2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]).is_err());
    }

    #[test]
    fn compact_3d_equal_coordinates_vanish() {
        let params = TustinParams::uniform(3, int(1)).unwrap();
        let compact = laplace_compact_3d(&params).unwrap();
        let v = compact.eval(&[c(0.4, -1.3); 3]).unwrap();
        assert!(v.norm() < 1e-12, "{v}");
    }

    #[test]
    fn substitution_consistency() {
        for n in [2, 3] {
            let params = TustinParams::uniform(n, rat(3, 4)).unwrap();
            let zt = determinant_ztransform(n).unwrap();
            let st = laplace_determinant(n, &params).unwrap();
            let steps = params.steps_f64();
            let mut rng = SampleRng::new(99);
            for _ in 0..20 {
                let s = rng.s_point(&steps, 3.0, 0.25);
                let z: Vec<_> = s.iter().zip(&steps).map(|(&x, &t)| tustin_map(x, t).unwrap()).collect();
                let a = zt.eval(&z).unwrap();
                let b = st.eval_precise(&s).unwrap();
                let exact_z: Vec<_> = s
                    .iter()
                    .map(|&x| tustin_map_exact(&exact_complex(x).unwrap(), &rat(3, 4)).unwrap())
                    .collect();
                let c = round_complex(&zt.eval_gaussian(&exact_z).unwrap());
                assert!(rel_close(b, c, 1e-13), "N={n}: {b} vs {c}");
                assert!(rel_close(a, b, 1e-6), "N={n}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn pointwise_exact_reaches_six() {
        let params = TustinParams::uniform(6, rat(1, 2)).unwrap();
        let zero = laplace_pointwise_exact(6, &params, &[c(0.0, 0.0); 6]).unwrap();
        assert_eq!(zero, c(0.0, 0.0));
        let s = [c(0.1, 0.2), c(-0.3, 1.0), c(0.7, -0.4), c(1.1, 0.0), c(-0.5, -0.9), c(0.2, 2.0)];
        let a = laplace_pointwise_exact(6, &params, &s).unwrap();
        // the float determinant is badly conditioned at this size
        let b = laplace_numeric(6, &params.steps_f64(), &s).unwrap();
        assert!(rel_close(a, b, 1e-4), "{a} vs {b}");
        assert!(tustin_map_exact(&exact_complex(c(4.0, 0.0)).unwrap(), &rat(1, 2)).is_err());
    }

    #[test]
    fn dimension_limits() {
        let p6 = TustinParams::uniform(6, int(1)).unwrap();
        assert!(matches!(laplace_determinant(6, &p6), Err(Error::UnsupportedDimension { .. })));
        let p1 = TustinParams::uniform(1, int(1)).unwrap();
        assert!(laplace_determinant(1, &p1).is_err());
        assert!(laplace_compact_3d(&TustinParams::uniform(2, int(1)).unwrap()).is_err());
        assert!(laplace_numeric(2, &[1.0, -1.0], &[c(0.0, 0.0); 2]).is_err());
    }

    #[test]
    fn report_structure() {
        let r = pole_zero_report_2d(&TustinParams::uniform(2, int(1)).unwrap()).unwrap();
        assert!(r.poles.iter().all(|p| p.location == int(-2) && p.multiplicity == 2));
        assert!(r.zeros.iter().all(|z| z.location == int(2)));
        assert_eq!(r.inter_dimensional_zeros, vec!["s1 = s2".to_string()]);
        let half = pole_zero_report_2d(&TustinParams::uniform(2, rat(1, 2)).unwrap()).unwrap();
        assert!(half.poles.iter().all(|p| p.location == int(-4)));
        assert!(half.zeros.iter().all(|z| z.location == int(4)));
        assert!(matches!(
            pole_zero_report_2d(&TustinParams::uniform(3, int(1)).unwrap()),
            Err(Error::NotImplemented(_))
        ));
        let text = r.to_string();
        assert!(text.contains("pole: s1 = -2 (multiplicity 2)"));
        assert!(text.contains("inter-dimensional zero: s1 = s2"));
        let j: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(j["poles"][0]["location"]["num"], "-2");
    }

    #[test]
    fn renders() {
        let params = TustinParams::uniform(2, int(1)).unwrap();
        let closed = laplace_2d_closed(&params).unwrap();
        let text = closed.to_text();
        assert!(text.ends_with("/ ((s1 + 2)^2 (s2 + 2)^2)"), "{text}");
        let latex = closed.to_latex();
        assert!(latex.contains("\\left(s_{1} + 2\\right)^{2}"), "{latex}");
        let half = laplace_2d_closed(&TustinParams::uniform(2, rat(1, 2)).unwrap()).unwrap();
        assert!(half.to_text().contains("(1/2 s1 + 2)^2"));
    }

    #[test]
    fn json_shape() {
        let params = TustinParams::uniform(2, rat(1, 2)).unwrap();
        let d = laplace_determinant(2, &params).unwrap();
        let v: serde_json::Value = serde_json::to_value(&d).unwrap();
        assert_eq!(v["dim"], 2);
        assert_eq!(v["T"][0]["den"], "2");
        assert!(v["numerator"]["terms"].is_array());
        assert!(v["denominator"]["terms"].is_array());
        let back: LaplaceResult = serde_json::from_value(v).unwrap();
        assert!(back.equivalent(&d));
    }
}
