//! Exact points and representations on each component of the character
//! variety, plus the D(3,3,4) slice and its Dehn-filling pullbacks.

mod families;
mod slice;

pub use families::{closed_orbit, v0_family, v0_identities, v1_family, v2_family, v2_identities, Family};
pub use slice::{
    dehn_rep, exception_locus, hypersurface, slice_f, slice_f_polys, slice_g, slice_g_ratfuncs, slice_ideal, slice_rep,
    w_point_from, SlicePoint, WPoint,
};

use crate::coords::{CharCoords, Component, CoordError};
use crate::grp::{Alphabet, Gen, GrpError, Representation};
use crate::mat3::{Mat2, Mat3};
use crate::numtower::{sqrt_adjoin_elem, FieldElem, NumError};
use crate::poly::{parse_poly, MPoly, Point};
use crate::sl2::{riley_rep, riley_u, Sl2Error};
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstructError {
    #[error("parameter excluded: {0}")]
    Excluded(String),
    #[error("constraint violated: {0}")]
    Constraint(&'static str),
    #[error("intertwiner space has dimension {0}, expected 1")]
    Intertwiner(usize),
    #[error("det T0 = 0: normalize-by-limit unsupported at this point")]
    DegenerateNormalization,
    #[error("point is not on the slice X")]
    NotOnSlice,
    #[error("point is not on the hypersurface W")]
    NotOnW,
    #[error("g undefined: {0}")]
    GUndefined(String),
    #[error("branch index {0} out of range")]
    Branch(usize),
    #[error(transparent)]
    Group(#[from] GrpError),
    #[error(transparent)]
    Coords(#[from] CoordError),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Sl2(#[from] Sl2Error),
}

/// A lazily parsed polynomial literal.
pub(crate) struct Lit(&'static str, OnceLock<MPoly>);

impl Lit {
    pub(crate) const fn new(text: &'static str) -> Self {
        Lit(text, OnceLock::new())
    }

    pub(crate) fn poly(&self) -> &MPoly {
        self.1.get_or_init(|| parse_poly(self.0, None).expect("literal polynomial"))
    }

    pub(crate) fn at(&self, pt: &Point) -> FieldElem {
        self.poly().eval(pt).expect("all variables bound")
    }
}

/// √d on the requested branch; d = 0 gives 0.
pub(crate) fn sqrt_branch(d: &FieldElem, plus: bool) -> Result<FieldElem, ConstructError> {
    if d.is_zero() {
        return Ok(FieldElem::zero());
    }
    Ok(sqrt_adjoin_elem(d)?.branch(plus))
}

/// (y, ȳ, y²−2ȳ, ȳ²−2y, 3, 3, 3, 3).
pub fn xtr_point(y: &FieldElem, yb: &FieldElem) -> CharCoords {
    let two = FieldElem::int(2);
    let three = FieldElem::int(3);
    CharCoords {
        y: y.clone(),
        yb: yb.clone(),
        z: y.pow(2) - &two * yb,
        zb: yb.pow(2) - &two * y,
        alpha: three.clone(),
        alphab: three.clone(),
        beta: three.clone(),
        betab: three.clone(),
        eta: Some(three),
    }
}

/// t ↦ companion matrix of X³ − yX² + ȳX − 1, a, b ↦ Id.
pub fn xtr_rep(y: &FieldElem, yb: &FieldElem) -> Representation {
    let (o, l) = (FieldElem::zero(), FieldElem::one());
    let t = Mat3::from_rows([[o.clone(), o.clone(), l.clone()], [l.clone(), o.clone(), -yb], [o, l, y.clone()]]);
    Representation::new(Alphabet::TAB, &[(Gen::Tt, t), (Gen::A, Mat3::identity()), (Gen::B, Mat3::identity())])
        .expect("companion matrix is invertible")
}

/// Φ(v, w, x1) on the partially reducible component.
pub fn xpr_point(v: &FieldElem, w: &FieldElem, x1: &FieldElem) -> Result<CharCoords, ConstructError> {
    let one = FieldElem::one();
    let wi = w.inv().ok_or_else(|| ConstructError::Excluded("w = 0".into()))?;
    let d = x1 - &one;
    if d.is_zero() {
        return Err(ConstructError::Excluded("x1 = 1".into()));
    }
    if (x1.pow(2) + x1 - &one) * w != &d * &v.pow(2) {
        return Err(ConstructError::Constraint("(x1^2 + x1 - 1) w = (x1 - 1) v^2"));
    }
    let alpha = x1 + &one;
    let beta = x1 / &d + &one;
    Ok(CharCoords {
        y: v + &wi,
        yb: w + &(v * &wi),
        z: w * &alpha + wi.pow(2),
        zb: &alpha * &wi + w.pow(2),
        alphab: alpha.clone(),
        alpha,
        betab: beta.clone(),
        beta,
        eta: None,
    })
}

/// λσ ⊕ λ⁻² with σ the Riley representation at (s, u), u the chosen root.
pub fn xpr_rep(s: &FieldElem, lambda: &FieldElem, root: usize) -> Result<Representation, ConstructError> {
    let li2 = lambda.pow(2).inv().ok_or_else(|| ConstructError::Excluded("lambda = 0".into()))?;
    let us = riley_u(s)?;
    let u = us.get(root).ok_or(ConstructError::Branch(root))?;
    let sigma = riley_rep(s, u)?;
    let gens: Vec<(Gen, Mat3<FieldElem>)> =
        sigma.generators().map(|(g, m): (Gen, &Mat2<FieldElem>)| (g, Mat3::block(&m.scale(lambda), &li2))).collect();
    Ok(Representation::new(Alphabet::ST, &gens)?)
}

/// The five characters with y = ȳ = z = z̄ = 0 and η = 3.
pub fn metabelian_points() -> Vec<(Component, CharCoords)> {
    let e = FieldElem::int;
    let p = &e(-1) + &(&e(2) * &FieldElem::i());
    let q = &e(-1) - &(&e(2) * &FieldElem::i());
    let pt = |a: &FieldElem, ab: &FieldElem, b: &FieldElem, bb: &FieldElem| {
        CharCoords::new([e(0), e(0), e(0), e(0), a.clone(), ab.clone(), b.clone(), bb.clone()]).with_eta(e(3))
    };
    let (m1, one) = (e(-1), e(1));
    vec![
        (Component::V0, pt(&m1, &m1, &m1, &m1)),
        (Component::V1, pt(&one, &one, &p, &q)),
        (Component::V1, pt(&one, &one, &q, &p)),
        (Component::V2, pt(&p, &q, &one, &one)),
        (Component::V2, pt(&q, &p, &one, &one)),
    ]
}
