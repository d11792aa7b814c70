//! Trace coordinates, the center action, the symmetries f* and h*, and the
//! μ3-invariant coordinates used for PGL(3) and GL(3).

use crate::grp::{GrpError, Representation, Word};
use crate::numtower::{parse_elem_in, FieldElem, NumError, SqrtCtx};
use crate::poly::{vars, MPoly, Point, PolyError, Var};
use num::{BigInt, Signed, ToPrimitive};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoordError {
    #[error(transparent)]
    Group(#[from] GrpError),
    #[error("det of the meridian image is {0}, not 1; use orbit coordinates")]
    NotSpecial(FieldElem),
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("expected 8 comma-separated elements, got {0}")]
    Arity(usize),
    #[error("element {0}: {1}")]
    Elem(usize, NumError),
    #[error("monomial is not invariant under the center action")]
    NotInvariant,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("the meridian image is singular")]
    Singular,
}

/// (y, ȳ, z, z̄, α, ᾱ, β, β̄) with optional η.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharCoords {
    pub y: FieldElem,
    pub yb: FieldElem,
    pub z: FieldElem,
    pub zb: FieldElem,
    pub alpha: FieldElem,
    pub alphab: FieldElem,
    pub beta: FieldElem,
    pub betab: FieldElem,
    pub eta: Option<FieldElem>,
}

impl CharCoords {
    pub fn new(v: [FieldElem; 8]) -> Self {
        let [y, yb, z, zb, alpha, alphab, beta, betab] = v;
        CharCoords { y, yb, z, zb, alpha, alphab, beta, betab, eta: None }
    }

    pub fn from_ints(v: [i64; 8]) -> Self {
        Self::new(v.map(FieldElem::int))
    }

    pub fn with_eta(mut self, eta: FieldElem) -> Self {
        self.eta = Some(eta);
        self
    }

    pub fn to_array(&self) -> [FieldElem; 8] {
        [
            self.y.clone(),
            self.yb.clone(),
            self.z.clone(),
            self.zb.clone(),
            self.alpha.clone(),
            self.alphab.clone(),
            self.beta.clone(),
            self.betab.clone(),
        ]
    }

    /// Evaluation point binding the ambient variables (and η when known).
    pub fn point(&self) -> Point {
        let mut pt = Point::new();
        for (v, x) in vars::AMBIENT.iter().zip(self.to_array()) {
            pt.set(*v, x);
        }
        if let Some(e) = &self.eta {
            pt.set(vars::ETA, e.clone());
        }
        pt
    }

    pub fn eval(&self, p: &MPoly) -> Result<FieldElem, PolyError> {
        p.eval(&self.point())
    }

    /// Comma-separated element strings.
    pub fn parse(text: &str, ctx: Option<&SqrtCtx>) -> Result<Self, CoordError> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 8 {
            return Err(CoordError::Arity(parts.len()));
        }
        let mut v = Vec::with_capacity(8);
        for (k, s) in parts.iter().enumerate() {
            v.push(parse_elem_in(s, ctx).map_err(|e| CoordError::Elem(k, e))?);
        }
        Ok(Self::new(v.try_into().unwrap()))
    }

    /// Equality up to the center action.
    pub fn same_orbit(&self, o: &CharCoords) -> bool {
        (0..3).any(|k| {
            let m = mu3_act(k, o);
            m.to_array() == self.to_array()
        })
    }

    pub fn orbit(&self) -> OrbitCoords {
        let (y, yb, z, zb) = (&self.y, &self.yb, &self.z, &self.zb);
        OrbitCoords {
            u: [
                y.pow(3),
                yb.pow(3),
                y * yb,
                z.pow(3),
                zb.pow(3),
                z * zb,
                y * z,
                yb * zb,
                y * &zb.pow(2),
                &y.pow(2) * zb,
                yb * &z.pow(2),
                &yb.pow(2) * z,
            ],
            alpha: self.alpha.clone(),
            alphab: self.alphab.clone(),
            beta: self.beta.clone(),
            betab: self.betab.clone(),
            eta: self.eta.clone(),
        }
    }
}

impl fmt::Display for CharCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.to_array();
        for (k, x) in a.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Center-invariant coordinates. `u` follows the order
/// y³, ȳ³, yȳ, z³, z̄³, zz̄, yz, ȳz̄, yz̄², y²z̄, ȳz², ȳ²z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCoords {
    pub u: [FieldElem; 12],
    pub alpha: FieldElem,
    pub alphab: FieldElem,
    pub beta: FieldElem,
    pub betab: FieldElem,
    pub eta: Option<FieldElem>,
}

pub const U_NAMES: [&str; 12] = ["y^3", "yb^3", "y*yb", "z^3", "zb^3", "z*zb", "y*z", "yb*zb", "y*zb^2", "y^2*zb", "yb*z^2", "yb^2*z"];

/// Exponents of (y, ȳ, z, z̄) for each orbit generator.
const U_EXPS: [[u16; 4]; 12] = [
    [3, 0, 0, 0],
    [0, 3, 0, 0],
    [1, 1, 0, 0],
    [0, 0, 3, 0],
    [0, 0, 0, 3],
    [0, 0, 1, 1],
    [1, 0, 1, 0],
    [0, 1, 0, 1],
    [1, 0, 0, 2],
    [2, 0, 0, 1],
    [0, 1, 2, 0],
    [0, 2, 1, 0],
];

/// Weight of y^a ȳ^b z^c z̄^d under the center action, mod 3.
pub fn weight(e: [u16; 4]) -> u32 {
    (e[0] as u32 + 2 * e[1] as u32 + 2 * e[2] as u32 + e[3] as u32) % 3
}

/// Split an invariant exponent vector into orbit generators (indices into `u`).
fn decompose(e: [u16; 4]) -> Result<Vec<usize>, CoordError> {
    if weight(e) != 0 {
        return Err(CoordError::NotInvariant);
    }
    let [mut y, mut yb, mut z, mut zb] = e;
    let mut out = Vec::new();
    // Weight-one letters y, z̄ pair with weight-two letters ȳ, z.
    for (a, b, idx) in [(0usize, 1usize, 2usize), (0, 2, 6), (3, 1, 7), (3, 2, 5)] {
        let mut cur = [y, yb, z, zb];
        let n = cur[a].min(cur[b]);
        cur[a] -= n;
        cur[b] -= n;
        out.extend(std::iter::repeat(idx).take(n as usize));
        [y, yb, z, zb] = cur;
    }
    // What remains is of a single weight, in total degree divisible by 3.
    while y >= 3 {
        y -= 3;
        out.push(0);
    }
    while yb >= 3 {
        yb -= 3;
        out.push(1);
    }
    match (y, zb) {
        (1, _) => {
            zb -= 2;
            out.push(8);
        }
        (2, _) => {
            zb -= 1;
            out.push(9);
        }
        _ => {}
    }
    match (yb, z) {
        (1, _) => {
            z -= 2;
            out.push(10);
        }
        (2, _) => {
            z -= 1;
            out.push(11);
        }
        _ => {}
    }
    out.extend(std::iter::repeat(3).take((z / 3) as usize));
    out.extend(std::iter::repeat(4).take((zb / 3) as usize));
    debug_assert!(z % 3 == 0 && zb % 3 == 0);
    Ok(out)
}

impl OrbitCoords {
    pub fn get(&self, name: &str) -> Option<&FieldElem> {
        U_NAMES.iter().position(|n| *n == name).map(|k| &self.u[k])
    }

    /// Evaluate a polynomial whose (y, ȳ, z, z̄)-monomials are all invariant.
    pub fn eval_invariant(&self, p: &MPoly) -> Result<FieldElem, CoordError> {
        let ys = [vars::Y, vars::YB, vars::Z, vars::ZB];
        let mut pt = Point::new()
            .with(vars::ALPHA, self.alpha.clone())
            .with(vars::ALPHAB, self.alphab.clone())
            .with(vars::BETA, self.beta.clone())
            .with(vars::BETAB, self.betab.clone());
        if let Some(e) = &self.eta {
            pt.set(vars::ETA, e.clone());
        }
        let mut acc = FieldElem::zero();
        for (e, c) in p.terms() {
            let ye = ys.map(|v| e[v.index()]);
            let mut rest = *e;
            for v in ys {
                rest[v.index()] = 0;
            }
            let mut t = MPoly::from_terms([(rest, c.clone())]).eval(&pt)?;
            for k in decompose(ye)? {
                t = &t * &self.u[k];
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// True iff `p` vanishes on the orbit; `p` may be any polynomial.
    pub fn vanishes(&self, p: &MPoly) -> Result<bool, CoordError> {
        for q in weight_components(p) {
            if q.is_zero() {
                continue;
            }
            let w = q.terms().next().map(|(e, _)| weight(ys_exps(e))).unwrap_or(0);
            let inv = if w == 0 { q } else { q.pow(3) };
            if !self.eval_invariant(&inv)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A representative of the orbit, when a needed cube root exists.
    pub fn lift(&self) -> Option<CharCoords> {
        let [y3, yb3, yyb, z3, zb3, zzb, yz, ybzb, _, y2zb, _, yb2z] = &self.u;
        let base = |y, yb, z, zb| CharCoords {
            y,
            yb,
            z,
            zb,
            alpha: self.alpha.clone(),
            alphab: self.alphab.clone(),
            beta: self.beta.clone(),
            betab: self.betab.clone(),
            eta: self.eta.clone(),
        };
        let c = if !y3.is_zero() {
            let y = cube_root(y3)?;
            let yi = y.inv()?;
            let yi2 = yi.pow(2);
            base(y.clone(), yyb * &yi, yz * &yi, y2zb * &yi2)
        } else if !yb3.is_zero() {
            let yb = cube_root(yb3)?;
            let yi = yb.inv()?;
            base(FieldElem::zero(), yb.clone(), yb2z * &yi.pow(2), ybzb * &yi)
        } else if !z3.is_zero() {
            let z = cube_root(z3)?;
            let zi = z.inv()?;
            base(FieldElem::zero(), FieldElem::zero(), z.clone(), zzb * &zi)
        } else {
            base(FieldElem::zero(), FieldElem::zero(), FieldElem::zero(), cube_root(zb3)?)
        };
        (c.orbit() == *self).then_some(c)
    }
}

fn ys_exps(e: &crate::poly::Exps) -> [u16; 4] {
    [vars::Y, vars::YB, vars::Z, vars::ZB].map(|v| e[v.index()])
}

/// Weight-homogeneous parts of `p` for the center action.
pub fn weight_components(p: &MPoly) -> [MPoly; 3] {
    let mut parts: [Vec<_>; 3] = Default::default();
    for (e, c) in p.terms() {
        parts[weight(ys_exps(e)) as usize].push((*e, c.clone()));
    }
    parts.map(MPoly::from_terms)
}

/// Exact cube root of a rational element; other fields are not searched.
pub fn cube_root(x: &FieldElem) -> Option<FieldElem> {
    let r = x.as_rational()?;
    let root = |n: &BigInt| -> Option<BigInt> {
        let c = n.abs().cbrt();
        (&c * &c * &c == n.abs()).then(|| if n.is_negative() { -c } else { c })
    };
    let (n, d) = (root(r.numer())?, root(r.denom())?);
    Some(FieldElem::Rat(num::BigRational::new(n, d)))
}

impl fmt::Display for OrbitCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, x) in U_NAMES.iter().zip(&self.u) {
            write!(f, "{n}={x} ")?;
        }
        write!(f, "alpha={} alphab={} beta={} betab={}", self.alpha, self.alphab, self.beta, self.betab)?;
        if let Some(e) = &self.eta {
            write!(f, " eta={e}")?;
        }
        Ok(())
    }
}

/// Words whose traces are the coordinates, in the fibered alphabet:
/// y, ȳ, z, z̄, α, ᾱ, β, β̄, η.
pub fn coordinate_words() -> &'static [Word; 9] {
    static W: OnceLock<[Word; 9]> = OnceLock::new();
    W.get_or_init(|| {
        ["t", "t'", "t.a'.t.a", "a'.t'.a.t'", "a", "a'", "b", "b'", "a.b.a'.b'"].map(|s| s.parse().unwrap())
    })
}

/// Trace coordinates of an SL(3) representation of Γ.
pub fn extract(rho: &Representation) -> Result<CharCoords, CoordError> {
    rho.check_relations()?;
    let t = rho.eval(&"t".parse::<Word>().unwrap())?;
    let d = t.det();
    if !d.is_one() {
        return Err(CoordError::NotSpecial(d));
    }
    let tr: Vec<FieldElem> = coordinate_words().iter().map(|w| rho.trace(w)).collect::<Result<_, _>>()?;
    let mut c = CharCoords::new(tr[..8].to_vec().try_into().unwrap());
    c.eta = Some(tr[8].clone());
    Ok(c)
}

/// Orbit coordinates of a GL(3) representation, without cube roots:
/// with d = det ρ(t), y³ = Y³/d, ȳ³ = Ȳ³/d², z³ = Z³/d², z̄³ = Z̄³/d⁴, where
/// Y = tr ρ(t), Ȳ = tr adj ρ(t), Z = tr ρ(t a⁻¹ t a), Z̄ = tr(a⁻¹ adj(t) a adj(t)).
pub fn orbit_of_rep(rho: &Representation) -> Result<OrbitCoords, CoordError> {
    rho.check_relations()?;
    let ev = |s: &str| rho.eval(&s.parse::<Word>().unwrap());
    let t = ev("t")?;
    let a = ev("a")?;
    let ai = ev("a'")?;
    let d = t.det();
    let di = d.inv().ok_or(CoordError::Singular)?;
    let adj = t.adj();
    let y = t.trace();
    let yb = adj.trace();
    let z = t.mul(&ai).mul(&t).mul(&a).trace();
    let zb = ai.mul(&adj).mul(&a).mul(&adj).trace();
    let d2 = di.pow(2);
    let u = [
        &y.pow(3) * &di,
        &yb.pow(3) * &d2,
        &(&y * &yb) * &di,
        &z.pow(3) * &d2,
        &zb.pow(3) * &d2.pow(2),
        &(&z * &zb) * &d2,
        &(&y * &z) * &di,
        &(&yb * &zb) * &d2,
        &(&y * &zb.pow(2)) * &(&d2 * &di),
        &(&y.pow(2) * &zb) * &d2,
        &(&yb * &z.pow(2)) * &d2,
        &(&yb.pow(2) * &z) * &d2,
    ];
    let tr = |s: &str| -> Result<FieldElem, CoordError> { Ok(ev(s)?.trace()) };
    Ok(OrbitCoords { u, alpha: tr("a")?, alphab: tr("a'")?, beta: tr("b")?, betab: tr("b'")?, eta: Some(tr("a.b.a'.b'")?) })
}

/// (ϖ^k y, ϖ^{2k} ȳ, ϖ^{2k} z, ϖ^k z̄, α, ᾱ, β, β̄).
pub fn mu3_act(k: u32, c: &CharCoords) -> CharCoords {
    let w1 = FieldElem::omega().pow(k % 3);
    let w2 = FieldElem::omega().pow((2 * k) % 3);
    CharCoords { y: &w1 * &c.y, yb: &w2 * &c.yb, z: &w2 * &c.z, zb: &w1 * &c.zb, ..c.clone() }
}

/// f*: swap y↔ȳ, z↔z̄, α↔ᾱ.
pub fn sym_f(c: &CharCoords) -> CharCoords {
    CharCoords {
        y: c.yb.clone(),
        yb: c.y.clone(),
        z: c.zb.clone(),
        zb: c.z.clone(),
        alpha: c.alphab.clone(),
        alphab: c.alpha.clone(),
        beta: c.beta.clone(),
        betab: c.betab.clone(),
        eta: None,
    }
}

/// h*: y↔ȳ, z ↦ ȳ² − z̄, z̄ ↦ y² − z, (α, ᾱ, β, β̄) ↦ (β̄, β, α, ᾱ).
pub fn sym_h(c: &CharCoords) -> CharCoords {
    CharCoords {
        y: c.yb.clone(),
        yb: c.y.clone(),
        z: &c.yb.pow(2) - &c.zb,
        zb: &c.y.pow(2) - &c.z,
        alpha: c.betab.clone(),
        alphab: c.beta.clone(),
        beta: c.alpha.clone(),
        betab: c.alphab.clone(),
        eta: None,
    }
}

/// Duality from ρ ↦ ρ^{-T}: every coordinate swaps with its barred partner.
pub fn iota(c: &CharCoords) -> CharCoords {
    CharCoords {
        y: c.yb.clone(),
        yb: c.y.clone(),
        z: c.zb.clone(),
        zb: c.z.clone(),
        alpha: c.alphab.clone(),
        alphab: c.alpha.clone(),
        beta: c.betab.clone(),
        betab: c.beta.clone(),
        eta: None,
    }
}

/// The coordinate maps as polynomial images of the ambient variables.
pub fn symbolic_images(op: Sym) -> Vec<(Var, MPoly)> {
    let v = MPoly::var;
    use vars::*;
    match op {
        Sym::F => vec![(Y, v(YB)), (YB, v(Y)), (Z, v(ZB)), (ZB, v(Z)), (ALPHA, v(ALPHAB)), (ALPHAB, v(ALPHA)), (BETA, v(BETA)), (BETAB, v(BETAB))],
        Sym::H => vec![
            (Y, v(YB)),
            (YB, v(Y)),
            (Z, &v(YB).pow(2) - &v(ZB)),
            (ZB, &v(Y).pow(2) - &v(Z)),
            (ALPHA, v(BETAB)),
            (ALPHAB, v(BETA)),
            (BETA, v(ALPHA)),
            (BETAB, v(ALPHAB)),
        ],
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sym {
    F,
    H,
}

/// f* or h* on orbit coordinates: each generator's image is a center-invariant
/// polynomial, evaluated on the orbit. η is dropped.
pub fn sym_orbit(op: Sym, o: &OrbitCoords) -> Result<OrbitCoords, CoordError> {
    let images = symbolic_images(op);
    let ys = [vars::Y, vars::YB, vars::Z, vars::ZB];
    let img = |p: MPoly| o.eval_invariant(&p.subst_many(&images));
    let mut u = Vec::with_capacity(12);
    for e in U_EXPS {
        let pows: Vec<(Var, u16)> = ys.iter().zip(e).map(|(v, k)| (*v, k)).collect();
        u.push(img(MPoly::monomial(FieldElem::one(), &pows))?);
    }
    Ok(OrbitCoords {
        u: u.try_into().unwrap(),
        alpha: img(MPoly::var(vars::ALPHA))?,
        alphab: img(MPoly::var(vars::ALPHAB))?,
        beta: img(MPoly::var(vars::BETA))?,
        betab: img(MPoly::var(vars::BETAB))?,
        eta: None,
    })
}

/// Compose coordinate maps given as image lists: (p ∘ q)(x) = p(q(x)).
pub fn compose_images(p: &[(Var, MPoly)], q: &[(Var, MPoly)]) -> Vec<(Var, MPoly)> {
    p.iter().map(|(v, img)| (*v, img.subst_many(q))).collect()
}

pub fn is_identity_map(m: &[(Var, MPoly)]) -> bool {
    m.iter().all(|(v, img)| *img == MPoly::var(*v))
}

/// u1..u12 in the order of [`U_NAMES`].
pub fn pgl3_coords(c: &CharCoords) -> [FieldElem; 12] {
    c.orbit().u
}

/// GL(3) invariants: u1..u12, then v1..v6 = yλ², y²λ, ȳλ, zλ, z̄λ², z̄²λ, then λ³.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gl3Coords {
    pub u: [FieldElem; 12],
    pub v: [FieldElem; 6],
    pub lambda3: FieldElem,
}

pub fn gl3_coords(c: &CharCoords, lambda: &FieldElem) -> Result<Gl3Coords, CoordError> {
    if lambda.is_zero() {
        return Err(CoordError::ZeroLambda);
    }
    let l2 = lambda.pow(2);
    Ok(Gl3Coords {
        u: pgl3_coords(c),
        v: [&c.y * &l2, &c.y.pow(2) * lambda, &c.yb * lambda, &c.z * lambda, &c.zb * &l2, &c.zb.pow(2) * lambda],
        lambda3: lambda.pow(3),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Component {
    XTR,
    XPR,
    V0,
    V1,
    V2,
}

impl Component {
    pub const ALL: [Component; 5] = [Component::XTR, Component::XPR, Component::V0, Component::V1, Component::V2];

    pub fn name(self) -> &'static str {
        match self {
            Component::XTR => "XTR",
            Component::XPR => "XPR",
            Component::V0 => "V0",
            Component::V1 => "V1",
            Component::V2 => "V2",
        }
    }

    pub fn by_name(s: &str) -> Option<Component> {
        Component::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(s))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ComponentSet(pub BTreeSet<Component>);

impl ComponentSet {
    pub fn of(cs: &[Component]) -> Self {
        ComponentSet(cs.iter().copied().collect())
    }

    pub fn contains(&self, c: Component) -> bool {
        self.0.contains(&c)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn insert(&mut self, c: Component) {
        self.0.insert(c);
    }
}

impl fmt::Display for ComponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.0.iter().map(|c| c.name()).collect();
        write!(f, "{}", names.join(" "))
    }
}

/// Small helper for tests and tables: an integer element as `usize` when it is one.
pub fn as_small_int(x: &FieldElem) -> Option<i64> {
    x.as_rational().filter(|r| r.is_integer()).and_then(|r| r.to_integer().to_i64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{Alphabet, Gen};
    use crate::mat3::Mat3;

    fn o() -> FieldElem {
        FieldElem::omega()
    }

    #[test]
    fn center_action() {
        let c = CharCoords::from_ints([4, 4, 8, 8, 3, 3, 3, 3]);
        assert_eq!(mu3_act(0, &c), c);
        let m = mu3_act(1, &c);
        assert_eq!(m.y, FieldElem::int(4) * o());
        assert_eq!(m.yb, FieldElem::int(4) * o().pow(2));
        assert_eq!(m.z, FieldElem::int(8) * o().pow(2));
        assert_eq!(m.zb, FieldElem::int(8) * o());
        assert_eq!(mu3_act(1, &mu3_act(2, &c)), c);
        assert_eq!(m.orbit(), c.orbit());
        assert!(m.same_orbit(&c));
    }

    #[test]
    fn decomposition_covers_invariant_monomials() {
        for a in 0..5u16 {
            for b in 0..5u16 {
                for cc in 0..5u16 {
                    for d in 0..5u16 {
                        let e = [a, b, cc, d];
                        if weight(e) != 0 {
                            assert!(decompose(e).is_err());
                            continue;
                        }
                        let mut tot = [0u16; 4];
                        for k in decompose(e).unwrap() {
                            for j in 0..4 {
                                tot[j] += U_EXPS[k][j];
                            }
                        }
                        assert_eq!(tot, e);
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_eval_and_lift() {
        let c = CharCoords::new([FieldElem::int(2), FieldElem::rat(1, 3), FieldElem::int(-5), FieldElem::int(7), 1.into(), 2.into(), 3.into(), 4.into()]);
        let oc = c.orbit();
        let p = crate::poly::parse_poly("y^2*zb - 3*yb*z^2*alpha + y^6", None).unwrap();
        assert_eq!(oc.eval_invariant(&p).unwrap(), c.eval(&p).unwrap());
        assert!(oc.eval_invariant(&MPoly::var(vars::Y)).is_err());
        assert!(!oc.vanishes(&crate::poly::parse_poly("y - 2", None).unwrap()).unwrap());
        assert!(oc.vanishes(&crate::poly::parse_poly("z*zb + 35", None).unwrap()).unwrap());
        assert!(oc.lift().unwrap().same_orbit(&c));
        let c0 = CharCoords::from_ints([0, 0, 0, 0, -1, -1, -1, -1]);
        assert_eq!(c0.orbit().lift().unwrap(), c0);
    }

    #[test]
    fn extraction_trivial_and_central() {
        let id = Mat3::identity();
        let rho = Representation::new(Alphabet::TAB, &[(Gen::Tt, id.clone()), (Gen::A, id.clone()), (Gen::B, id.clone())]).unwrap();
        let c = extract(&rho).unwrap();
        assert_eq!(c, CharCoords::from_ints([3; 8]).with_eta(3.into()));
        let rho = Representation::new(Alphabet::TAB, &[(Gen::Tt, Mat3::scalar(&o())), (Gen::A, id.clone()), (Gen::B, id)]).unwrap();
        let c = extract(&rho).unwrap();
        let three = FieldElem::int(3);
        assert_eq!(c.y, &three * &o());
        assert_eq!(c.yb, &three * &o().pow(2));
        assert_eq!(c.z, &three * &o().pow(2));
        assert_eq!(c.zb, &three * &o());
        assert_eq!(&c.z, &(&c.y.pow(2) - &(&FieldElem::int(2) * &c.yb)));
        assert_eq!(orbit_of_rep(&rho).unwrap(), c.orbit());
    }

    #[test]
    fn symmetry_group_relations() {
        let f = symbolic_images(Sym::F);
        let h = symbolic_images(Sym::H);
        assert!(is_identity_map(&compose_images(&f, &f)));
        let h2 = compose_images(&h, &h);
        let h4 = compose_images(&h2, &h2);
        assert!(is_identity_map(&h4));
        assert!(!is_identity_map(&h2));
        let fh = compose_images(&f, &h);
        assert!(is_identity_map(&compose_images(&fh, &fh)));
        let c = CharCoords::from_ints([3, 3, 3, 3, 1, 1, 2, 2]);
        assert_eq!(sym_h(&c), CharCoords::from_ints([3, 3, 6, 6, 2, 2, 1, 1]));
        let x = CharCoords::from_ints([4, 4, 8, 8, 3, 3, 3, 3]);
        assert_eq!(sym_f(&x), x);
    }

    #[test]
    fn invariant_lists() {
        let c = CharCoords::from_ints([3; 8]);
        let u = pgl3_coords(&c);
        assert_eq!(u[0], FieldElem::int(27));
        assert_eq!(u[2], FieldElem::int(9));
        let g = gl3_coords(&c, &FieldElem::one()).unwrap();
        assert_eq!(g.v[0], c.y);
        assert_eq!(g.v[1], c.y.pow(2));
        assert_eq!(gl3_coords(&c, &FieldElem::zero()), Err(CoordError::ZeroLambda));
        let m = mu3_act(1, &c);
        let lam = FieldElem::int(5);
        assert_eq!(gl3_coords(&m, &(&lam * &o())).unwrap(), gl3_coords(&c, &lam).unwrap());
    }
}
