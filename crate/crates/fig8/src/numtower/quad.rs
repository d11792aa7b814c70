use super::cyclo::Cyclo12;
use std::sync::Arc;

/// p + q·s with s² = d, d a non-square of Q(ζ12).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadExt {
    pub p: Cyclo12,
    pub q: Cyclo12,
    pub d: Arc<Cyclo12>,
}

impl QuadExt {
    pub fn same_modulus(&self, o: &QuadExt) -> bool {
        Arc::ptr_eq(&self.d, &o.d) || self.d == o.d
    }

    pub fn add(&self, o: &QuadExt) -> QuadExt {
        QuadExt { p: &self.p + &o.p, q: &self.q + &o.q, d: self.d.clone() }
    }

    pub fn sub(&self, o: &QuadExt) -> QuadExt {
        QuadExt { p: &self.p - &o.p, q: &self.q - &o.q, d: self.d.clone() }
    }

    pub fn mul(&self, o: &QuadExt) -> QuadExt {
        let pp = &self.p * &o.p;
        let qq = &self.q * &o.q;
        let p = &pp + &(&qq * &self.d);
        let q = &(&self.p * &o.q) + &(&self.q * &o.p);
        QuadExt { p, q, d: self.d.clone() }
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt { p: -&self.p, q: -&self.q, d: self.d.clone() }
    }

    /// s ↦ −s
    pub fn conj(&self) -> QuadExt {
        QuadExt { p: self.p.clone(), q: -&self.q, d: self.d.clone() }
    }

    /// p² − q²d
    pub fn norm(&self) -> Cyclo12 {
        &(&self.p * &self.p) - &(&(&self.q * &self.q) * &self.d)
    }

    pub fn inv(&self) -> Option<QuadExt> {
        let n = self.norm().inv()?;
        Some(QuadExt { p: &self.p * &n, q: -&(&self.q * &n), d: self.d.clone() })
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }
}
