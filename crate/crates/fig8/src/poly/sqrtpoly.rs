use super::mpoly::{MPoly, Point};
use super::ratfunc::RatFunc;
use super::PolyError;
use crate::numtower::FieldElem;

/// p0 + p1·s with s² = delta.
#[derive(Clone, Debug)]
pub struct SqrtPoly {
    pub p0: RatFunc,
    pub p1: RatFunc,
    pub delta: MPoly,
}

/// Outcome of a symbolic zero test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroTest {
    Zero,
    NonZero,
    Budget,
}

impl SqrtPoly {
    pub fn new(p0: RatFunc, p1: RatFunc, delta: MPoly) -> Self {
        SqrtPoly { p0, p1, delta }
    }

    pub fn base(p: RatFunc, delta: &MPoly) -> Self {
        SqrtPoly { p0: p, p1: RatFunc::zero(), delta: delta.clone() }
    }

    pub fn s(delta: &MPoly) -> Self {
        SqrtPoly { p0: RatFunc::zero(), p1: RatFunc::one(), delta: delta.clone() }
    }

    pub fn add(&self, o: &SqrtPoly) -> SqrtPoly {
        SqrtPoly { p0: &self.p0 + &o.p0, p1: &self.p1 + &o.p1, delta: self.delta.clone() }
    }

    pub fn sub(&self, o: &SqrtPoly) -> SqrtPoly {
        SqrtPoly { p0: &self.p0 - &o.p0, p1: &self.p1 - &o.p1, delta: self.delta.clone() }
    }

    pub fn mul(&self, o: &SqrtPoly) -> SqrtPoly {
        let d = RatFunc::poly(self.delta.clone());
        let p0 = &(&self.p0 * &o.p0) + &(&(&self.p1 * &o.p1) * &d);
        let p1 = &(&self.p0 * &o.p1) + &(&self.p1 * &o.p0);
        SqrtPoly { p0, p1, delta: self.delta.clone() }
    }

    pub fn scale(&self, r: &RatFunc) -> SqrtPoly {
        SqrtPoly { p0: &self.p0 * r, p1: &self.p1 * r, delta: self.delta.clone() }
    }

    /// Zero test in Frac(base)[s]/(s² − Δ), by full expansion of both numerators.
    pub fn expand_is_zero(&self, budget: usize) -> ZeroTest {
        for part in [&self.p0, &self.p1] {
            if part.num.num_terms() > budget {
                return ZeroTest::Budget;
            }
            if !part.num.is_zero() {
                return ZeroTest::NonZero;
            }
        }
        ZeroTest::Zero
    }

    /// Evaluate with `s0` a chosen square root of Δ at the point.
    pub fn eval(&self, pt: &Point, s0: &FieldElem) -> Result<FieldElem, PolyError> {
        let d = self.delta.eval(pt)?;
        if &(s0 * s0) != &d {
            return Err(PolyError::BadRoot);
        }
        Ok(self.p0.eval(pt)? + self.p1.eval(pt)? * s0)
    }
}
