use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::LaurentPoly;
use crate::error::{Error, Result};
use crate::rational::ExactComplex;

/// Quotient of two Laurent polynomials.
///
/// No gcd normal form is maintained: two rational functions are equal when
/// their cross products agree (see [`RationalFn::equivalent`]). Addition of
/// operands that already share a denominator keeps that denominator.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "RawRationalFn")]
pub struct RationalFn {
    numerator: LaurentPoly,
    denominator: LaurentPoly,
}

#[derive(Deserialize)]
struct RawRationalFn {
    numerator: LaurentPoly,
    denominator: LaurentPoly,
}

impl TryFrom<RawRationalFn> for RationalFn {
    type Error = Error;

    fn try_from(raw: RawRationalFn) -> Result<Self> {
        Self::new(raw.numerator, raw.denominator)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
}

impl RationalFn {
    pub fn new(numerator: LaurentPoly, denominator: LaurentPoly) -> Result<Self> {
        if numerator.arity() != denominator.arity() {
            return Err(Error::ArityMismatch {
                left: numerator.arity(),
                right: denominator.arity(),
            });
        }
        if denominator.is_zero() {
            return Err(Error::DegenerateDenominator(
                "rational function denominator is identically zero".into(),
            ));
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let arity = p.arity();
        Self {
            numerator: p,
            denominator: LaurentPoly::one(arity),
        }
    }

    pub fn zero(arity: usize) -> Self {
        Self::from_poly(LaurentPoly::zero(arity))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    pub fn arity(&self) -> usize {
        self.numerator.arity()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        if self.denominator == other.denominator {
            return Self::new(
                self.numerator.checked_add(&other.numerator)?,
                self.denominator.clone(),
            );
        }
        Self::new(
            &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator),
            &self.denominator * &other.denominator,
        )
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Self::new(
            &self.numerator * &other.numerator,
            &self.denominator * &other.denominator,
        )
    }

    pub fn neg(&self) -> Self {
        Self {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
        }
    }

    /// `a/b == c/d` iff `a d - c b` is the zero polynomial.
    pub fn equivalent(&self, other: &Self) -> bool {
        if self.arity() != other.arity() {
            return false;
        }
        let lhs = &self.numerator * &other.denominator;
        let rhs = &other.numerator * &self.denominator;
        lhs == rhs
    }

    pub fn eval(&self, pt: &[Complex64]) -> Result<Complex64> {
        let den = self.denominator.eval(pt)?;
        if den.is_zero() {
            return Err(Error::EvaluationPole("denominator vanishes".into()));
        }
        Ok(self.numerator.eval(pt)? / den)
    }

    /// See [`LaurentPoly::eval_precise`].
    pub fn eval_precise(&self, pt: &[Complex64]) -> Result<Complex64> {
        let exact = pt
            .iter()
            .map(|&z| crate::rational::exact_complex(z))
            .collect::<Result<Vec<_>>>()?;
        Ok(crate::rational::round_complex(&self.eval_gaussian(&exact)?))
    }

    pub fn eval_gaussian(&self, pt: &[ExactComplex]) -> Result<ExactComplex> {
        let den = self.denominator.eval_gaussian(pt)?;
        if den.is_zero() {
            return Err(Error::EvaluationPole("denominator vanishes".into()));
        }
        Ok(self.numerator.eval_gaussian(pt)? / den)
    }

    pub fn eval_exact(&self, pt: &[BigRational]) -> Result<BigRational> {
        let den = self.denominator.eval_exact(pt)?;
        if den.is_zero() {
            return Err(Error::EvaluationPole("denominator vanishes".into()));
        }
        Ok(self.numerator.eval_exact(pt)? / den)
    }
}

/// Field operation on two rational functions of equal arity.
pub fn ratfn_arith(a: &RationalFn, b: &RationalFn, op: RatOp) -> Result<RationalFn> {
    match op {
        RatOp::Add => a.checked_add(b),
        RatOp::Sub => a.checked_sub(b),
        RatOp::Mul => a.checked_mul(b),
    }
}

/// Cross-multiplication equality.
pub fn ratfn_eq(a: &RationalFn, b: &RationalFn) -> bool {
    a.equivalent(b)
}
