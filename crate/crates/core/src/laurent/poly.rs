use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{
    exact_complex, format_rational, latex_rational, round_complex, to_f64, ExactComplex,
    RationalJson,
};

/// Exponent vector of a Laurent monomial, one (possibly negative) entry per
/// variable.
///
/// Ordered graded-lexicographically: by total degree first, then
/// lexicographically on the exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<i32>,
}

impl Monomial {
    pub fn new(exps: Vec<i32>) -> Self {
        Self { exps }
    }

    pub fn unit(arity: usize) -> Self {
        Self { exps: vec![0; arity] }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[i32] {
        &self.exps
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&e| i64::from(e)).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms are kept in a sorted map with no zero coefficients, so structural
/// equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    arity: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl LaurentPoly {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigRational::one())
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        let mut p = Self::zero(arity);
        p.push_term(Monomial::unit(arity), c);
        p
    }

    /// The variable with 0-based position `var`, raised to `exp`.
    pub fn var_pow(arity: usize, var: usize, exp: i32) -> Result<Self> {
        if var >= arity {
            return Err(Error::InputDomain(format!(
                "variable {var} out of range for arity {arity}"
            )));
        }
        let mut exps = vec![0; arity];
        exps[var] = exp;
        Ok(Self::constant(arity, BigRational::one()).mul_monomial(&Monomial::new(exps)))
    }

    pub fn var(arity: usize, var: usize) -> Result<Self> {
        Self::var_pow(arity, var, 1)
    }

    pub fn monomial(exps: Vec<i32>, coeff: BigRational) -> Self {
        let arity = exps.len();
        let mut p = Self::zero(arity);
        p.push_term(Monomial::new(exps), coeff);
        p
    }

    /// Collects terms, summing repeated monomials.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, BigRational)>,
    {
        let mut p = Self::zero(arity);
        for (exps, c) in terms {
            if exps.len() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: exps.len(),
                });
            }
            p.push_term(Monomial::new(exps), c);
        }
        Ok(p)
    }

    fn push_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the highest monomial to the lowest.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[i32]) -> BigRational {
        self.terms
            .get(&Monomial::new(exps.to_vec()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Smallest and largest exponent of variable `var` over all terms.
    pub fn exponent_bounds(&self, var: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.exps[var]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.exps.iter().all(|&e| e >= 0))
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.push_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.push_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.push_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        assert_eq!(m.arity(), self.arity, "monomial arity mismatch");
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.arity);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a complex point. Coefficients are rounded to `f64` here
    /// and nowhere else.
    pub fn eval(&self, pt: &[Complex64]) -> Result<Complex64> {
        if pt.len() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: pt.len(),
            });
        }
        let mut acc = Complex64::zero();
        for (m, c) in &self.terms {
            let mut term = Complex64::new(to_f64(c), 0.0);
            for (v, (&e, z)) in m.exps.iter().zip(pt).enumerate() {
                if e < 0 && z.is_zero() {
                    return Err(Error::EvaluationPole(format!(
                        "variable {} is zero but appears with exponent {e}",
                        v + 1
                    )));
                }
                if e != 0 {
                    term *= z.powi(e);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Exact evaluation at a rational point.
    pub fn eval_exact(&self, pt: &[BigRational]) -> Result<BigRational> {
        if pt.len() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: pt.len(),
            });
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, (&e, z)) in m.exps.iter().zip(pt).enumerate() {
                if e < 0 && z.is_zero() {
                    return Err(Error::EvaluationPole(format!(
                        "variable {} is zero but appears with exponent {e}",
                        v + 1
                    )));
                }
                if e != 0 {
                    term *= num_traits::pow::Pow::pow(z, e);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Exact evaluation at a point with Gaussian-rational coordinates.
    ///
    /// Each variable's powers are brought over one integer denominator and
    /// the sum is accumulated in Gaussian integers, so only the final result
    /// is reduced.
    pub fn eval_gaussian(&self, pt: &[ExactComplex]) -> Result<ExactComplex> {
        if pt.len() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: pt.len(),
            });
        }
        if self.is_zero() {
            return Ok(ExactComplex::zero());
        }
        let mut tables = Vec::with_capacity(self.arity);
        let mut den = BigInt::one();
        for (v, z) in pt.iter().enumerate() {
            let (lo, hi) = self.exponent_bounds(v).unwrap_or((0, 0));
            if lo < 0 && z.is_zero() {
                return Err(Error::EvaluationPole(format!(
                    "variable {} is zero but appears with exponent {lo}",
                    v + 1
                )));
            }
            let (table, d) = power_table(z, lo.min(0), hi.max(0));
            den *= d;
            tables.push((lo.min(0), table));
        }
        let coeff_den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut acc = GaussInt::zero();
        for (m, c) in &self.terms {
            let weight = c.numer() * (&coeff_den / c.denom());
            let mut term = GaussInt::new(weight, BigInt::zero());
            for (v, &e) in m.exps.iter().enumerate() {
                let (lo, table) = &tables[v];
                term *= &table[(e - lo) as usize];
            }
            acc += term;
        }
        den *= coeff_den;
        let d = BigRational::from_integer(den);
        Ok(Complex::new(
            BigRational::from_integer(acc.re) / &d,
            BigRational::from_integer(acc.im) / d,
        ))
    }

    /// Evaluates exactly at the rational value of a floating-point point and
    /// rounds once at the end, so cancellation between terms costs nothing.
    pub fn eval_precise(&self, pt: &[Complex64]) -> Result<Complex64> {
        let exact = pt.iter().map(|&z| exact_complex(z)).collect::<Result<Vec<_>>>()?;
        Ok(round_complex(&self.eval_gaussian(&exact)?))
    }

    /// Plain-text rendering, e.g. `z1^-1 z2^-2 - z1^-2 z2^-1`.
    pub fn to_text(&self, prefix: &str) -> String {
        self.render(|var, e| {
            if e == 1 {
                format!("{prefix}{var}")
            } else {
                format!("{prefix}{var}^{e}")
            }
        }, " ", format_rational)
    }

    /// LaTeX rendering, e.g. `z_{1}^{-1} z_{2}^{-2} - z_{1}^{-2} z_{2}^{-1}`.
    pub fn to_latex(&self, prefix: &str) -> String {
        self.render(|var, e| {
            if e == 1 {
                format!("{prefix}_{{{var}}}")
            } else {
                format!("{prefix}_{{{var}}}^{{{e}}}")
            }
        }, " ", latex_rational)
    }

    fn render(
        &self,
        factor: impl Fn(usize, i32) -> String,
        sep: &str,
        coeff: impl Fn(&BigRational) -> String,
    ) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            let factors: Vec<String> = m
                .exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(v, &e)| factor(v + 1, e))
                .collect();
            if factors.is_empty() {
                out.push_str(&coeff(&mag));
            } else {
                if !mag.is_one() {
                    out.push_str(&coeff(&mag));
                    out.push_str(sep);
                }
                out.push_str(&factors.join(sep));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("z"))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;

            /// Panics on arity mismatch; use the `checked_*` form otherwise.
            fn $method(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("Laurent polynomial arity mismatch")
            }
        }

        impl $trait for LaurentPoly {
            type Output = LaurentPoly;

            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<i32>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    arity: usize,
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            arity: self.arity,
            terms: self
                .terms()
                .map(|(m, c)| TermJson {
                    exp: m.exps.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = PolyJson::deserialize(d)?;
        let terms = j
            .terms
            .into_iter()
            .map(|t| {
                let c = BigRational::try_from(RationalJson { num: t.num, den: t.den })
                    .map_err(D::Error::custom)?;
                Ok((t.exp, c))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        LaurentPoly::from_terms(j.arity, terms).map_err(D::Error::custom)
    }
}

/// Sum of two polynomials of equal arity.
pub fn poly_add(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    a.checked_add(b)
}

/// Product of two polynomials of equal arity.
pub fn poly_mul(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    a.checked_mul(b)
}

pub fn poly_eval(a: &LaurentPoly, pt: &[Complex64]) -> Result<Complex64> {
    a.eval(pt)
}

type GaussInt = Complex<BigInt>;

/// Integer numerators of `z^e` for `e` in `lo..=hi` over one shared
/// denominator, returned with that denominator.
fn power_table(z: &ExactComplex, lo: i32, hi: i32) -> (Vec<GaussInt>, BigInt) {
    // z = a / d with a Gaussian, d a positive integer
    let d = z.re.denom().lcm(z.im.denom());
    let a = GaussInt::new(z.re.numer() * (&d / z.re.denom()), z.im.numer() * (&d / z.im.denom()));
    let up = hi.max(0) as usize;
    let down = (-lo).max(0) as usize;
    // 1/z = conj(a) d / |a|^2
    let b = a.conj() * &d;
    let c = a.norm_sqr();
    let pow = |x: &GaussInt, k: usize| num_traits::pow(x.clone(), k);
    let ipow = |x: &BigInt, k: usize| num_traits::pow(x.clone(), k);
    let mut table = Vec::with_capacity(up + down + 1);
    for k in (1..=down).rev() {
        table.push(pow(&b, k) * (ipow(&c, down - k) * ipow(&d, up)));
    }
    for k in 0..=up {
        table.push(pow(&a, k) * (ipow(&d, up - k) * ipow(&c, down)));
    }
    (table, ipow(&d, up) * ipow(&c, down))
}
