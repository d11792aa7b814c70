use super::mpoly::{MPoly, Point};
use super::vars::Var;
use super::PolyError;
use crate::numtower::FieldElem;
use std::collections::HashMap;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// num/den, never reduced; equality by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc {
    pub num: MPoly,
    pub den: MPoly,
}

impl RatFunc {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivByZero);
        }
        Ok(RatFunc { num, den })
    }

    pub fn poly(p: MPoly) -> Self {
        RatFunc { num: p, den: MPoly::one() }
    }

    pub fn zero() -> Self {
        Self::poly(MPoly::zero())
    }

    pub fn one() -> Self {
        Self::poly(MPoly::one())
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::poly(MPoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::poly(MPoly::var(v))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self, PolyError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        RatFunc { num: self.num.pow(n), den: self.den.pow(n) }
    }

    pub fn eval(&self, pt: &Point) -> Result<FieldElem, PolyError> {
        let d = self.den.eval(pt)?;
        if d.is_zero() {
            return Err(PolyError::DenominatorVanishes);
        }
        Ok(self.num.eval(pt)? / d)
    }

    /// Drop a constant factor from the denominator when possible.
    pub fn normalize_const(self) -> Self {
        match self.den.as_constant() {
            Some(c) if !c.is_one() => {
                let ci = c.inv().unwrap();
                RatFunc { num: self.num.scale(&ci), den: MPoly::one() }
            }
            _ => self,
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &RatFunc) -> bool {
        (&self.num * &o.den) == (&o.num * &self.den)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc { num: &self.num + &o.num, den: self.den.clone() };
        }
        if o.den.as_constant().is_some_and(|c| c.is_one()) {
            return RatFunc { num: &self.num + &(&o.num * &self.den), den: self.den.clone() };
        }
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            return RatFunc { num: &(&self.num * &o.den) + &o.num, den: o.den.clone() };
        }
        RatFunc { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        RatFunc { num: &self.num * &o.num, den: &self.den * &o.den }
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        assert!(!o.num.is_zero(), "division by zero rational function");
        RatFunc { num: &self.num * &o.den, den: &self.den * &o.num }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
    };
}
owned!(Add, add);
owned!(Sub, sub);
owned!(Mul, mul);
owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<MPoly> for RatFunc {
    fn from(p: MPoly) -> Self {
        RatFunc::poly(p)
    }
}

impl MPoly {
    /// Substitute rational functions for variables. Each image denominator is
    /// raised only to the top degree of its variable, so the result has
    /// denominator Π den_v^{deg_v}.
    pub fn compose(&self, images: &[(Var, RatFunc)]) -> RatFunc {
        let degs: Vec<u16> = images.iter().map(|(v, _)| self.degree_in(*v)).collect();
        let mut num_pows: HashMap<(usize, u16), MPoly> = HashMap::new();
        let mut den_pows: HashMap<(usize, u16), MPoly> = HashMap::new();
        let mut acc = MPoly::zero();
        for (e, c) in self.terms() {
            let mut rest = *e;
            let mut t = MPoly::one();
            for (j, (v, img)) in images.iter().enumerate() {
                let k = e[v.index()];
                rest[v.index()] = 0;
                let top = degs[j];
                if top == 0 {
                    continue;
                }
                if k > 0 {
                    let np = num_pows.entry((j, k)).or_insert_with(|| img.num.pow(k as u32)).clone();
                    t = &t * &np;
                }
                if top > k && img.den.as_constant().is_none_or(|c| !c.is_one()) {
                    let dp = den_pows.entry((j, top - k)).or_insert_with(|| img.den.pow((top - k) as u32)).clone();
                    t = &t * &dp;
                }
            }
            let mono = MPoly::from_terms([(rest, c.clone())]);
            acc = &acc + &(&t * &mono);
        }
        let mut den = MPoly::one();
        for (j, (_, img)) in images.iter().enumerate() {
            if degs[j] > 0 {
                den = &den * &img.den.pow(degs[j] as u32);
            }
        }
        RatFunc { num: acc, den }
    }
}
