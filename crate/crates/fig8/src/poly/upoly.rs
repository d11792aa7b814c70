use super::mpoly::MPoly;
use super::vars::Var;
use super::PolyError;
use crate::numtower::FieldElem;
use std::fmt;

/// Dense univariate polynomial over FieldElem, coefficients low to high.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    c: Vec<FieldElem>,
}

impl UPoly {
    pub fn new(mut c: Vec<FieldElem>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&n| FieldElem::int(n)).collect())
    }

    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.c
    }

    pub fn lead(&self) -> Option<&FieldElem> {
        self.c.last()
    }

    /// From an MPoly whose only variable is `v`.
    pub fn from_mpoly(p: &MPoly, v: Var) -> Result<Self, PolyError> {
        let cs = p.coeffs_in(v);
        let mut out = Vec::with_capacity(cs.len());
        for c in cs {
            out.push(c.as_constant().ok_or(PolyError::NotUnivariate(v.name()))?);
        }
        Ok(Self::new(out))
    }

    pub fn to_mpoly(&self, v: Var) -> MPoly {
        let cs: Vec<MPoly> = self.c.iter().map(|x| MPoly::constant(x.clone())).collect();
        MPoly::from_coeffs_in(v, &cs)
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let li = l.inv().unwrap();
                UPoly { c: self.c.iter().map(|x| x * &li).collect() }
            }
        }
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let mut acc = FieldElem::zero();
        for c in self.c.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn divrem(&self, d: &UPoly) -> Result<(UPoly, UPoly), PolyError> {
        let dd = d.degree().ok_or(PolyError::DivByZero)?;
        let li = d.lead().unwrap().inv().unwrap();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut q = vec![FieldElem::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let f = &r[k] * &li;
            if f.is_zero() {
                continue;
            }
            for j in 0..=dd {
                let t = &f * &d.c[j];
                r[k - dd + j] -= &t;
            }
            q[k - dd] = f;
        }
        r.truncate(dd);
        Ok((UPoly::new(q), UPoly::new(r)))
    }

    pub fn rem(&self, d: &UPoly) -> Result<UPoly, PolyError> {
        Ok(self.divrem(d)?.1)
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![FieldElem::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        UPoly::new(c)
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        let z = FieldElem::zero();
        UPoly::new((0..n).map(|k| self.c.get(k).unwrap_or(&z) - o.c.get(k).unwrap_or(&z)).collect())
    }

    /// The root of a degree-1 polynomial.
    pub fn linear_root(&self) -> Option<FieldElem> {
        if self.degree() == Some(1) {
            Some(-&self.c[0] / &self.c[1])
        } else {
            None
        }
    }
}

/// Monic gcd by the Euclidean algorithm.
pub fn gcd_univar(p: &UPoly, q: &UPoly) -> Result<UPoly, PolyError> {
    if p.is_zero() && q.is_zero() {
        return Err(PolyError::BothZero);
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = r.monic();
    }
    Ok(a.monic())
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_mpoly(super::vars::W))
    }
}
