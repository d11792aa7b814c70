use super::cyclo::Cyclo12;
use super::quad::QuadExt;
use super::rational::Rational;
use num::traits::{One, Zero};
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

/// A scalar of the tower Q ⊂ Q(ζ12) ⊂ Q(ζ12)(√d).
///
/// Values are kept in the smallest layer that holds them, so derived equality
/// is exact equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FieldElem {
    Rat(Rational),
    Cyc(Cyclo12),
    Quad(QuadExt),
}

use FieldElem::*;

impl FieldElem {
    pub fn zero() -> Self {
        Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Rat(Rational::one())
    }

    pub fn int(n: i64) -> Self {
        Rat(Rational::from_integer(n.into()))
    }

    pub fn rat(n: i64, d: i64) -> Self {
        Rat(Rational::new(n.into(), d.into()))
    }

    pub fn i() -> Self {
        Cyc(Cyclo12::i())
    }

    pub fn omega() -> Self {
        Cyc(Cyclo12::omega())
    }

    pub fn from_cyclo(c: Cyclo12) -> Self {
        Self::norm_cyc(c)
    }

    /// p + q·s in the extension with s² = d (no square check).
    pub fn from_quad(p: Cyclo12, q: Cyclo12, d: Arc<Cyclo12>) -> Self {
        Self::norm_quad(QuadExt { p, q, d })
    }

    fn norm_cyc(c: Cyclo12) -> Self {
        if c.is_rational() {
            let [c0, ..] = c.c;
            Rat(c0)
        } else {
            Cyc(c)
        }
    }

    fn norm_quad(q: QuadExt) -> Self {
        if q.q.is_zero() {
            Self::norm_cyc(q.p)
        } else {
            Quad(q)
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn to_cyclo(&self) -> Option<Cyclo12> {
        match self {
            Rat(r) => Some(Cyclo12::from_rational(r.clone())),
            Cyc(c) => Some(c.clone()),
            Quad(_) => None,
        }
    }

    /// The square-root modulus this element lives over, if any.
    pub fn modulus(&self) -> Option<&Arc<Cyclo12>> {
        match self {
            Quad(q) => Some(&q.d),
            _ => None,
        }
    }

    fn lift(&self, d: &Arc<Cyclo12>) -> QuadExt {
        match self {
            Quad(q) => {
                assert!(
                    Arc::ptr_eq(&q.d, d) || *q.d == **d,
                    "mixed square-root moduli: {} vs {}",
                    q.d,
                    d
                );
                q.clone()
            }
            other => QuadExt { p: other.to_cyclo().unwrap(), q: Cyclo12::zero(), d: d.clone() },
        }
    }

    fn binop(
        &self,
        o: &Self,
        fr: impl Fn(&Rational, &Rational) -> Rational,
        fc: impl Fn(&Cyclo12, &Cyclo12) -> Cyclo12,
        fq: impl Fn(&QuadExt, &QuadExt) -> QuadExt,
    ) -> Self {
        match (self, o) {
            (Rat(a), Rat(b)) => Rat(fr(a, b)),
            (Quad(q), _) | (_, Quad(q)) => {
                let d = q.d.clone();
                let (a, b) = (self.lift(&d), o.lift(&d));
                Self::norm_quad(fq(&a, &b))
            }
            _ => Self::norm_cyc(fc(&self.to_cyclo().unwrap(), &o.to_cyclo().unwrap())),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            Rat(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Rat(r.recip()))
                }
            }
            Cyc(c) => c.inv().map(Self::norm_cyc),
            Quad(q) => q.inv().map(Self::norm_quad),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn powi(&self, e: i32) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u32))
        } else {
            self.inv().map(|x| x.pow((-e) as u32))
        }
    }

    /// Galois conjugate s ↦ −s (identity below the quadratic layer).
    pub fn sqrt_conj(&self) -> Self {
        match self {
            Quad(q) => Self::norm_quad(q.conj()),
            x => x.clone(),
        }
    }

    /// Complex conjugation on the cyclotomic layer.
    pub fn cyclo_conj(&self) -> Option<Self> {
        match self {
            Rat(r) => Some(Rat(r.clone())),
            Cyc(c) => Some(Self::norm_cyc(c.complex_conj())),
            Quad(_) => None,
        }
    }

    /// An exact square root inside the element's current field, if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        match self {
            Rat(_) | Cyc(_) => self.to_cyclo().unwrap().sqrt().map(Self::norm_cyc),
            Quad(x) => {
                let two_inv = Cyclo12::from_rational(Rational::new(1.into(), 2.into()));
                let n = x.norm().sqrt()?;
                for cand in [&x.p + &n, &x.p - &n] {
                    let a2 = &cand * &two_inv;
                    if let Some(a) = a2.sqrt() {
                        if a.is_zero() {
                            continue;
                        }
                        let b = &(&x.q * &two_inv) * &a.inv().unwrap();
                        let r = Self::norm_quad(QuadExt { p: a, q: b, d: x.d.clone() });
                        if &(&r * &r) == self {
                            return Some(r);
                        }
                    }
                }
                None
            }
        }
    }
}

macro_rules! ref_ops {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $m(self, o: &FieldElem) -> FieldElem {
                let f: fn(&FieldElem, &FieldElem) -> FieldElem = $body;
                f(self, o)
            }
        }
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: &FieldElem) -> FieldElem {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem {
                self.$m(&o)
            }
        }
    };
}

ref_ops!(Add, add, |a, b| a.binop(b, |x, y| x + y, |x, y| x + y, |x, y| x.add(y)));
ref_ops!(Sub, sub, |a, b| a.binop(b, |x, y| x - y, |x, y| x - y, |x, y| x.sub(y)));
ref_ops!(Mul, mul, |a, b| a.binop(b, |x, y| x * y, |x, y| x * y, |x, y| x.mul(y)));
ref_ops!(Div, div, |a, b| a * &b.inv().expect("division by zero"));

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            Rat(r) => Rat(-r),
            Cyc(c) => Cyc(-c),
            Quad(q) => Quad(q.neg()),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, o: &FieldElem) {
        *self = &*self + o;
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, o: &FieldElem) {
        *self = &*self - o;
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, o: &FieldElem) {
        *self = &*self * o;
    }
}

impl Sum for FieldElem {
    fn sum<I: Iterator<Item = FieldElem>>(it: I) -> FieldElem {
        it.fold(FieldElem::zero(), |a, b| a + b)
    }
}

impl Product for FieldElem {
    fn product<I: Iterator<Item = FieldElem>>(it: I) -> FieldElem {
        it.fold(FieldElem::one(), |a, b| a * b)
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::int(n)
    }
}

impl From<Rational> for FieldElem {
    fn from(r: Rational) -> Self {
        Rat(r)
    }
}

impl From<Cyclo12> for FieldElem {
    fn from(c: Cyclo12) -> Self {
        FieldElem::from_cyclo(c)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::parse::format_elem(self))
    }
}
