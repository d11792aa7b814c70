//! SL(2), PGL(2) and GL(2) characters of Γ: Fricke coordinates, component
//! tests, a Riley-slice constructor, and the symmetric-square bridge.

use crate::coords::{extract, CharCoords, CoordError};
use crate::grp::{Alphabet, Gen, GrpError, Rep2, Representation, Word};
use crate::mat3::{sym2, Mat, Mat2};
use crate::numtower::{sqrt_adjoin_elem, FieldElem, NumError};
use crate::poly::{vars, MPoly, Point, RatFunc, UPoly};
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Sl2Error {
    #[error("s must be nonzero")]
    ZeroS,
    #[error("w must be nonzero")]
    ZeroW,
    #[error("x1 = 1 is excluded")]
    X1IsOne,
    #[error("the Wirtinger relation fails at this (s, u)")]
    Relation,
    #[error(transparent)]
    Group(#[from] GrpError),
    #[error(transparent)]
    Coords(#[from] CoordError),
    #[error(transparent)]
    Num(#[from] NumError),
}

/// x1 = χ(a), x2 = χ(b), y0 = χ(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SL2Coords {
    pub x1: FieldElem,
    pub x2: FieldElem,
    pub y0: FieldElem,
}

/// (v, w, x1) = (tr ρ(t), det ρ(t), tr ρ(a)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GL2Coords {
    pub v: FieldElem,
    pub w: FieldElem,
    pub x1: FieldElem,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Sl2Set {
    pub reducible: bool,
    pub irreducible: bool,
}

pub fn classify_sl2(c: &SL2Coords) -> Sl2Set {
    let one = FieldElem::one();
    let two = FieldElem::int(2);
    Sl2Set {
        reducible: c.x1 == two && c.x2 == two,
        irreducible: (&(&c.x1 - &one) * &(&c.x2 - &one)).is_one() && c.y0.pow(2) == &(&c.x1 + &c.x2) + &one,
    }
}

/// Same components in (x1, x2, z0 = y0²).
pub fn classify_pgl2(x1: &FieldElem, x2: &FieldElem, z0: &FieldElem) -> Sl2Set {
    let one = FieldElem::one();
    let two = FieldElem::int(2);
    Sl2Set {
        reducible: *x1 == two && *x2 == two,
        irreducible: (&(x1 - &one) * &(x2 - &one)).is_one() && *z0 == &(x1 + x2) + &one,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Gl2Set {
    /// x1 = 2.
    pub reducible: bool,
    /// (x1² + x1 − 1)w = (x1 − 1)v².
    pub x2: bool,
}

impl Gl2Set {
    /// On both components: x1 = 2 and 5w = v².
    pub fn intersection(&self) -> bool {
        self.reducible && self.x2
    }
}

pub fn classify_gl2(c: &GL2Coords) -> Result<Gl2Set, Sl2Error> {
    let one = FieldElem::one();
    if c.w.is_zero() {
        return Err(Sl2Error::ZeroW);
    }
    let d = &c.x1 - &one;
    if d.is_zero() {
        return Err(Sl2Error::X1IsOne);
    }
    let k = &(&c.x1.pow(2) + &c.x1) - &one;
    Ok(Gl2Set { reducible: c.x1 == FieldElem::int(2), x2: &k * &c.w == &d * &c.v.pow(2) })
}

fn riley_matrices<T: Clone>(s: T, si: T, u: T, zero: T, one: T) -> (Mat<T, 2>, Mat<T, 2>) {
    (Mat { m: [[s.clone(), one], [zero.clone(), si.clone()]] }, Mat { m: [[s, zero], [u, si]] })
}

/// Admissibility polynomial in (r, u) for ρ(S) = [[r,1],[0,1/r]], ρ(T) = [[r,0],[u,1/r]],
/// obtained by expanding the Wirtinger relation and stripping monomial factors.
pub fn riley_polynomial() -> &'static MPoly {
    static P: OnceLock<MPoly> = OnceLock::new();
    P.get_or_init(|| {
        let r = RatFunc::var(vars::R);
        let ri = RatFunc::new(MPoly::one(), MPoly::var(vars::R)).unwrap();
        let (s, t) = riley_matrices(r, ri, RatFunc::var(vars::U), RatFunc::zero(), RatFunc::one());
        let (si, ti) = (s.adj(), t.adj());
        let lhs = s.mul(&ti).mul(&si).mul(&t).mul(&s);
        let rhs = t.mul(&s).mul(&ti).mul(&si).mul(&t);
        let diff = lhs.sub(&rhs);
        let mut best: Option<MPoly> = None;
        for row in &diff.m {
            for e in row {
                if e.num.is_zero() {
                    continue;
                }
                let p = strip_monomial(&e.num);
                if best.as_ref().map_or(true, |b| p.num_terms() < b.num_terms()) {
                    best = Some(p);
                }
            }
        }
        let p = best.expect("relation is not identically satisfied");
        let lead = p.coeffs_in(vars::U).last().unwrap().as_constant();
        match lead {
            Some(c) => p.scale(&c.inv().unwrap()),
            None => p,
        }
    })
}

/// Divide out the largest monomial r^a u^b dividing every term.
fn strip_monomial(p: &MPoly) -> MPoly {
    let mut min = [u16::MAX; 2];
    for (e, _) in p.terms() {
        min[0] = min[0].min(e[vars::R.index()]);
        min[1] = min[1].min(e[vars::U.index()]);
    }
    MPoly::from_terms(p.terms().map(|(e, c)| {
        let mut e = *e;
        e[vars::R.index()] -= min[0];
        e[vars::U.index()] -= min[1];
        (e, c.clone())
    }))
}

/// Riley representation on the Wirtinger generators, relation-checked.
pub fn riley_rep(s: &FieldElem, u: &FieldElem) -> Result<Rep2, Sl2Error> {
    let si = s.inv().ok_or(Sl2Error::ZeroS)?;
    let (ms, mt) = riley_matrices(s.clone(), si, u.clone(), FieldElem::zero(), FieldElem::one());
    let rho = Representation::new(Alphabet::ST, &[(Gen::S, ms), (Gen::T, mt)])?;
    rho.check_relations().map_err(|_| Sl2Error::Relation)?;
    Ok(rho)
}

/// Roots u of the admissibility polynomial at r = s, adjoining a
/// square root when needed. Requires s free of any adjoined root.
pub fn riley_u(s: &FieldElem) -> Result<Vec<FieldElem>, Sl2Error> {
    if s.is_zero() {
        return Err(Sl2Error::ZeroS);
    }
    let p = riley_polynomial().partial_eval(&Point::new().with(vars::R, s.clone()));
    let q = UPoly::from_mpoly(&p, vars::U).expect("univariate after specialization");
    let c = q.coeffs();
    Ok(match q.degree() {
        Some(1) => vec![q.linear_root().unwrap()],
        Some(2) => {
            let disc = &(&c[1] * &c[1]) - &(&FieldElem::int(4) * &(&c[0] * &c[2]));
            let root = match disc.sqrt() {
                Some(r) => r,
                None => sqrt_adjoin_elem(&disc)?.s(),
            };
            let den = &FieldElem::int(2) * &c[2];
            vec![&(-&c[1] + &root) / &den, &(-&c[1] - &root) / &den]
        }
        _ => Vec::new(),
    })
}

pub fn sl2_coords(rho: &Rep2) -> Result<SL2Coords, Sl2Error> {
    let tr = |s: &str| rho.trace(&s.parse::<Word>().unwrap());
    Ok(SL2Coords { x1: tr("a")?, x2: tr("b")?, y0: tr("t")? })
}

/// Characters of Sym² ∘ ρ2.
pub fn sym2_bridge(rho: &Rep2) -> Result<CharCoords, Sl2Error> {
    rho.check_relations()?;
    let gens: Vec<(Gen, _)> = rho.generators().map(|(g, m)| (g, sym2(m).expect("SL2 generator"))).collect();
    let r3 = Representation::new(rho.alphabet(), &gens)?;
    Ok(extract(&r3)?)
}

/// The 2×2 identity representation.
pub fn trivial_rep2() -> Rep2 {
    Representation::new(Alphabet::ST, &[(Gen::S, Mat2::identity()), (Gen::T, Mat2::identity())]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::components::{classify, v0_radical_generators};
    use crate::coords::Component;
    use crate::numtower::{sqrt_adjoin, Cyclo12};

    #[test]
    fn sl2_components() {
        let e = |n| FieldElem::int(n);
        assert_eq!(classify_sl2(&SL2Coords { x1: e(2), x2: e(2), y0: e(0) }), Sl2Set { reducible: true, irreducible: false });
        let r5 = sqrt_adjoin(&Cyclo12::from_i64(5)).unwrap().s();
        assert_eq!(classify_sl2(&SL2Coords { x1: e(2), x2: e(2), y0: r5 }), Sl2Set { reducible: true, irreducible: true });
        let y0 = sqrt_adjoin_elem(&FieldElem::rat(11, 2)).unwrap().s();
        assert_eq!(classify_sl2(&SL2Coords { x1: e(3), x2: FieldElem::rat(3, 2), y0 }), Sl2Set { reducible: false, irreducible: true });
        assert_eq!(classify_pgl2(&e(2), &e(2), &e(5)), Sl2Set { reducible: true, irreducible: true });
        let g = classify_gl2(&GL2Coords { v: e(5), w: e(5), x1: e(2) }).unwrap();
        assert!(g.intersection());
        let g = classify_gl2(&GL2Coords { v: e(11), w: e(22), x1: e(3) }).unwrap();
        assert_eq!(g, Gl2Set { reducible: false, x2: true });
        assert!(classify_gl2(&GL2Coords { v: e(1), w: e(1), x1: e(1) }).is_err());
    }

    #[test]
    fn riley_polynomial_is_quadratic_in_u() {
        let p = riley_polynomial();
        assert_eq!(p.degree_in(vars::U), 2, "{p}");
    }

    #[test]
    fn riley_reps() {
        // u = 0 is admissible exactly where the polynomial vanishes (Alexander roots).
        for s in [FieldElem::int(3), FieldElem::rat(1, 2)] {
            let at = riley_polynomial().eval(&Point::new().with(vars::R, s.clone()).with(vars::U, FieldElem::zero())).unwrap();
            assert_eq!(riley_rep(&s, &FieldElem::zero()).is_ok(), at.is_zero());
        }
        assert_eq!(riley_rep(&FieldElem::int(3), &FieldElem::int(5)).unwrap_err(), Sl2Error::Relation);
        for s in [FieldElem::one(), FieldElem::int(2), FieldElem::rat(-3, 5)] {
            for u in riley_u(&s).unwrap() {
                let rho = riley_rep(&s, &u).unwrap();
                let c = sl2_coords(&rho).unwrap();
                assert!(classify_sl2(&c).irreducible, "s={s} u={u}");
                let x = sym2_bridge(&rho).unwrap();
                assert_eq!(x.alpha, &c.x1.pow(2) - &FieldElem::one());
                assert_eq!(x.beta, &c.x2.pow(2) - &FieldElem::one());
                assert!(classify(&x).contains(Component::V0));
                for g in v0_radical_generators() {
                    assert!(x.eval(g).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn bridge_of_trivial_rep() {
        assert_eq!(sym2_bridge(&trivial_rep2()).unwrap(), CharCoords::from_ints([3; 8]).with_eta(FieldElem::int(3)));
    }
}
