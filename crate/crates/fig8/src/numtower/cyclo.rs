//! The cyclotomic field Q(g), g a primitive 12th root of unity, g⁴ = g² − 1.

use super::rational::{rat_sqrt, Rational};
use num::traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// c0 + c1·g + c2·g² + c3·g³.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclo12 {
    pub c: [Rational; 4],
}

impl Cyclo12 {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> Self {
        Cyclo12 { c: [c0, c1, c2, c3] }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclo12 { c: [r, Rational::zero(), Rational::zero(), Rational::zero()] }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn g() -> Self {
        let z = Rational::zero;
        Cyclo12 { c: [z(), Rational::one(), z(), z()] }
    }

    /// i = g³
    pub fn i() -> Self {
        let z = Rational::zero;
        Cyclo12 { c: [z(), z(), z(), Rational::one()] }
    }

    /// ϖ = g² − 1, a primitive cube root of unity.
    pub fn omega() -> Self {
        Cyclo12 { c: [-Rational::one(), Rational::zero(), Rational::one(), Rational::zero()] }
    }

    /// √3 = 2g − g³
    pub fn sqrt3() -> Self {
        Cyclo12 { c: [Rational::zero(), Rational::from_integer(2.into()), Rational::zero(), -Rational::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(|x| x.is_zero())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclo12 { c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r] }
    }

    /// Image under g ↦ g^k, k ∈ {1, 5, 7, 11}.
    pub fn conj(&self, k: u32) -> Self {
        let h = Self::g().pow(k);
        let h2 = &h * &h;
        let h3 = &h2 * &h;
        Self::from_rational(self.c[0].clone()) + h.scale(&self.c[1]) + h2.scale(&self.c[2]) + h3.scale(&self.c[3])
    }

    /// Complex conjugate, g ↦ g¹¹.
    pub fn complex_conj(&self) -> Self {
        self.conj(11)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn norm(&self) -> Rational {
        let p = self * &self.conj(5) * self.conj(7) * self.conj(11);
        debug_assert!(p.is_rational());
        p.c[0].clone()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let co = self.conj(5) * self.conj(7) * self.conj(11);
        let n = (self * &co).c[0].clone();
        Some(co.scale(&(Rational::one() / n)))
    }

    /// Exact square root in Q(ζ12), if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        let (x, y) = self.split_sqrt3();
        let r = if y.is_zero() {
            if let Some(u) = x.sqrt() {
                Some((u, Qi::zero()))
            } else {
                x.scale(&(Rational::one() / Rational::from_integer(3.into()))).sqrt().map(|v| (Qi::zero(), v))
            }
        } else {
            let disc = x.mul(&x).sub(&y.mul(&y).scale(&Rational::from_integer(3.into())));
            let rd = disc.sqrt()?;
            let sixth = Rational::one() / Rational::from_integer(6.into());
            let mut out = None;
            for cand in [x.add(&rd), x.sub(&rd)] {
                if let Some(v) = cand.scale(&sixth).sqrt() {
                    if v.is_zero() {
                        continue;
                    }
                    let u = y.mul(&v.inv()).scale(&Rational::new(1.into(), 2.into()));
                    out = Some((u, v));
                    break;
                }
            }
            out
        }?;
        let d = Self::join_sqrt3(&r.0, &r.1);
        debug_assert_eq!(&(&d * &d), self);
        Some(d)
    }

    pub fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }

    /// Write self = X + Y·√3 with X, Y ∈ Q(i).
    fn split_sqrt3(&self) -> (Qi, Qi) {
        let half = Rational::new(1.into(), 2.into());
        let [c0, c1, c2, c3] = &self.c;
        let x = Qi { re: c0 + c2 * &half, im: c1 * &half + c3 };
        let y = Qi { re: c1 * &half, im: c2 * &half };
        (x, y)
    }

    fn join_sqrt3(x: &Qi, y: &Qi) -> Self {
        let c1 = &y.re * Rational::from_integer(2.into());
        let c2 = &y.im * Rational::from_integer(2.into());
        let c0 = &x.re - &y.im;
        let c3 = &x.im - &y.re;
        Cyclo12 { c: [c0, c1, c2, c3] }
    }

    /// Coordinates in the printing basis (1, i, ϖ, ϖi).
    pub fn print_basis(&self) -> [Rational; 4] {
        let [c0, c1, c2, c3] = &self.c;
        [c0 + c2, c3.clone(), c2.clone(), -c1]
    }

    pub fn from_print_basis(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Self {
        Cyclo12 { c: [a - c, -d, c.clone(), b.clone()] }
    }
}

fn mul_raw(a: &Cyclo12, b: &Cyclo12) -> Cyclo12 {
    let mut r: [Rational; 7] = Default::default();
    for (i, x) in a.c.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.c.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            r[i + j] += x * y;
        }
    }
    let [r0, r1, r2, r3, r4, r5, r6] = r;
    Cyclo12 { c: [r0 - &r4 - r6, r1 - &r5, r2 + r4, r3 + r5] }
}

impl<'a> Mul<&'a Cyclo12> for &'a Cyclo12 {
    type Output = Cyclo12;
    fn mul(self, o: &Cyclo12) -> Cyclo12 {
        mul_raw(self, o)
    }
}

impl Mul for Cyclo12 {
    type Output = Cyclo12;
    fn mul(self, o: Cyclo12) -> Cyclo12 {
        mul_raw(&self, &o)
    }
}

impl<'a> Add<&'a Cyclo12> for &'a Cyclo12 {
    type Output = Cyclo12;
    fn add(self, o: &Cyclo12) -> Cyclo12 {
        Cyclo12 { c: [&self.c[0] + &o.c[0], &self.c[1] + &o.c[1], &self.c[2] + &o.c[2], &self.c[3] + &o.c[3]] }
    }
}

impl Add for Cyclo12 {
    type Output = Cyclo12;
    fn add(self, o: Cyclo12) -> Cyclo12 {
        &self + &o
    }
}

impl<'a> Sub<&'a Cyclo12> for &'a Cyclo12 {
    type Output = Cyclo12;
    fn sub(self, o: &Cyclo12) -> Cyclo12 {
        Cyclo12 { c: [&self.c[0] - &o.c[0], &self.c[1] - &o.c[1], &self.c[2] - &o.c[2], &self.c[3] - &o.c[3]] }
    }
}

impl Sub for Cyclo12 {
    type Output = Cyclo12;
    fn sub(self, o: Cyclo12) -> Cyclo12 {
        &self - &o
    }
}

impl Neg for &Cyclo12 {
    type Output = Cyclo12;
    fn neg(self) -> Cyclo12 {
        Cyclo12 { c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]] }
    }
}

impl Neg for Cyclo12 {
    type Output = Cyclo12;
    fn neg(self) -> Cyclo12 {
        -&self
    }
}

impl fmt::Display for Cyclo12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = super::parse::cyclo_terms(self, "");
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", super::parse::join_terms(&terms))
        }
    }
}

/// Gaussian rationals, used only inside the square-root search.
#[derive(Clone, PartialEq, Debug)]
struct Qi {
    re: Rational,
    im: Rational,
}

impl Qi {
    fn zero() -> Self {
        Qi { re: Rational::zero(), im: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &Qi) -> Qi {
        Qi { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Qi) -> Qi {
        Qi { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Qi) -> Qi {
        Qi { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
    fn scale(&self, r: &Rational) -> Qi {
        Qi { re: &self.re * r, im: &self.im * r }
    }
    fn inv(&self) -> Qi {
        let n = &self.re * &self.re + &self.im * &self.im;
        Qi { re: &self.re / &n, im: -&self.im / &n }
    }
    fn sqrt(&self) -> Option<Qi> {
        if self.im.is_zero() {
            if !self.re.is_negative() {
                return rat_sqrt(&self.re).map(|r| Qi { re: r, im: Rational::zero() });
            }
            return rat_sqrt(&-&self.re).map(|r| Qi { re: Rational::zero(), im: r });
        }
        let n = rat_sqrt(&(&self.re * &self.re + &self.im * &self.im))?;
        let a2 = (&self.re + n) / Rational::from_integer(2.into());
        let a = rat_sqrt(&a2)?;
        let b = &self.im / (&a * Rational::from_integer(2.into()));
        Some(Qi { re: a, im: b })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtower::rational::rat;

    #[test]
    fn generator_relations() {
        let g = Cyclo12::g();
        assert_eq!(g.pow(4), g.pow(2) - Cyclo12::one());
        assert_eq!(g.pow(12), Cyclo12::one());
        assert_ne!(g.pow(6), Cyclo12::one());
        let i = Cyclo12::i();
        assert_eq!(&i * &i, Cyclo12::from_i64(-1));
        let w = Cyclo12::omega();
        assert_eq!(w.pow(3), Cyclo12::one());
        assert_ne!(w, Cyclo12::one());
        assert!((w.pow(2) + w + Cyclo12::one()).is_zero());
        let r3 = Cyclo12::sqrt3();
        assert_eq!(&r3 * &r3, Cyclo12::from_i64(3));
    }

    #[test]
    fn inverse_and_norm() {
        let x = Cyclo12::new(rat(1, 2), rat(-3, 1), rat(2, 7), rat(5, 1));
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Cyclo12::one());
        assert!(Cyclo12::zero().inv().is_none());
        assert_eq!(Cyclo12::i().norm(), rat(1, 1));
    }

    #[test]
    fn square_roots() {
        for x in [
            Cyclo12::from_i64(4),
            Cyclo12::from_i64(-3),
            Cyclo12::from_i64(-1),
            Cyclo12::from_i64(3),
            Cyclo12::omega(),
            Cyclo12::i(),
            Cyclo12::new(rat(1, 3), rat(2, 1), rat(-1, 5), rat(7, 2)),
        ] {
            let sq = &x * &x;
            let r = sq.sqrt().expect("square");
            assert_eq!(&r * &r, sq);
        }
        assert!(Cyclo12::from_i64(5).sqrt().is_none());
        assert!(Cyclo12::from_i64(2).sqrt().is_none());
        assert!(Cyclo12::from_i64(-7).sqrt().is_none());
        assert!(Cyclo12::from_i64(-3).sqrt().is_some());
        assert!(Cyclo12::from_i64(-12).sqrt().is_some());
        assert!(Cyclo12::from_i64(6).sqrt().is_none());
        // 2i = (1+i)²
        assert!(Cyclo12::i().scale(&rat(2, 1)).sqrt().is_some());
        // a square root of i is a primitive 8th root of unity
        assert!(Cyclo12::i().sqrt().is_none());
        assert_eq!(Cyclo12::g().pow(2).sqrt().map(|r| r.pow(2)), Some(Cyclo12::g().pow(2)));
    }

    #[test]
    fn print_basis_roundtrip() {
        let x = Cyclo12::new(rat(1, 2), rat(-3, 1), rat(2, 7), rat(5, 1));
        let [a, b, c, d] = x.print_basis();
        assert_eq!(Cyclo12::from_print_basis(&a, &b, &c, &d), x);
    }
}
