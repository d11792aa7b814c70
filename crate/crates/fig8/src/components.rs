//! Equation catalogs for the five components, the point classifier, and the
//! boundary-curve and discriminant helpers.
//!
//! ```
//! use fig8::components::classify;
//! use fig8::coords::CharCoords;
//! let c = CharCoords::from_ints([4, 4, 8, 8, 3, 3, 3, 3]);
//! assert_eq!(classify(&c).to_string(), "XTR XPR V0");
//! ```

use crate::coords::{weight_components, CharCoords, Component, ComponentSet, CoordError, OrbitCoords};
use crate::numtower::{sqrt_adjoin_elem, FieldElem};
use crate::poly::{gcd_univar, parse_catalog, parse_poly, vars, MPoly, Point, PolyError, UPoly};
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ComponentError {
    #[error("parameter value {0} is excluded")]
    Excluded(&'static str),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Defining polynomials of one component.
#[derive(Clone, Debug)]
pub struct EquationCatalog {
    pub component: Component,
    pub polys: Vec<MPoly>,
    /// Center-invariant forms: weight-zero parts as they are, others cubed.
    invariant: Vec<MPoly>,
}

impl EquationCatalog {
    fn load(component: Component, text: &str) -> Self {
        let polys = parse_catalog(text).expect("shipped catalog parses");
        let mut invariant = Vec::new();
        for p in &polys {
            for (w, q) in weight_components(p).into_iter().enumerate() {
                if !q.is_zero() {
                    invariant.push(if w == 0 { q } else { q.pow(3) });
                }
            }
        }
        EquationCatalog { component, polys, invariant }
    }

    pub fn vanishes_at(&self, c: &CharCoords) -> bool {
        let pt = c.point();
        self.polys.iter().all(|p| p.eval(&pt).map(|x| x.is_zero()).unwrap_or(false))
    }

    pub fn vanishes_on_orbit(&self, o: &OrbitCoords) -> Result<bool, CoordError> {
        for p in &self.invariant {
            if !o.eval_invariant(p)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub const XTR_TEXT: &str = include_str!("../data/xtr.poly");
pub const V0_TEXT: &str = include_str!("../data/v0.poly");
pub const V0_SYSTEM_TEXT: &str = include_str!("../data/v0_system.poly");
pub const V1_TEXT: &str = include_str!("../data/v1.poly");
pub const V2_TEXT: &str = include_str!("../data/v2.poly");
pub const W_TEXT: &str = include_str!("../data/w.poly");

/// Catalog for XTR, V0 (radical generators), V1 or V2. XPR has none.
pub fn catalog(c: Component) -> Option<&'static EquationCatalog> {
    static CATS: OnceLock<[EquationCatalog; 4]> = OnceLock::new();
    let cats = CATS.get_or_init(|| {
        [
            EquationCatalog::load(Component::XTR, XTR_TEXT),
            EquationCatalog::load(Component::V0, V0_TEXT),
            EquationCatalog::load(Component::V1, V1_TEXT),
            EquationCatalog::load(Component::V2, V2_TEXT),
        ]
    });
    cats.iter().find(|k| k.component == c)
}

/// The 18 radical generators of V0 (the catalog minus α−ᾱ and β−β̄).
pub fn v0_radical_generators() -> &'static [MPoly] {
    &catalog(Component::V0).unwrap().polys[2..]
}

/// The non-radical V0 system, checked as identities on constructed points.
pub fn v0_system() -> &'static [MPoly] {
    static S: OnceLock<Vec<MPoly>> = OnceLock::new();
    S.get_or_init(|| parse_catalog(V0_SYSTEM_TEXT).unwrap())
}

/// One of the three double covers cut out by the commutator trace η.
#[derive(Clone, Debug)]
pub struct WEntry {
    pub name: &'static str,
    pub p: MPoly,
    pub q: MPoly,
    pub disc_factors: Vec<(MPoly, u32)>,
}

impl WEntry {
    pub fn discriminant(&self) -> MPoly {
        &self.p.pow(2) - &self.q.scale(&FieldElem::int(4))
    }

    pub fn factored_discriminant(&self) -> MPoly {
        self.disc_factors.iter().fold(MPoly::one(), |acc, (f, m)| &acc * &f.pow(*m))
    }

    /// η² − Pη + Q.
    pub fn eta_relation(&self) -> MPoly {
        let e = MPoly::var(vars::ETA);
        &(&e.pow(2) - &(&self.p * &e)) + &self.q
    }
}

pub fn w_catalog() -> &'static [WEntry; 3] {
    static W: OnceLock<[WEntry; 3]> = OnceLock::new();
    W.get_or_init(|| {
        let mut out = Vec::new();
        let mut cur: Option<WEntry> = None;
        for line in W_TEXT.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                out.extend(cur.take());
                let name: &'static str = match name {
                    "W0" => "W0",
                    "W1" => "W1",
                    _ => "W2",
                };
                cur = Some(WEntry { name, p: MPoly::zero(), q: MPoly::zero(), disc_factors: Vec::new() });
                continue;
            }
            let e = cur.as_mut().expect("block header precedes entries");
            let (tag, body) = line.split_once(':').expect("tagged line");
            match tag {
                "P" => e.p = parse_poly(body, None).unwrap(),
                "Q" => e.q = parse_poly(body, None).unwrap(),
                _ => {
                    let (f, m) = body.rsplit_once('^').unwrap();
                    e.disc_factors.push((parse_poly(f, None).unwrap(), m.trim().parse().unwrap()));
                }
            }
        }
        out.extend(cur);
        out.try_into().unwrap()
    })
}

/// The W-cover attached to a non-reducible component.
pub fn w_entry(c: Component) -> Option<&'static WEntry> {
    let w = w_catalog();
    match c {
        Component::V0 => Some(&w[0]),
        Component::V1 => Some(&w[1]),
        Component::V2 => Some(&w[2]),
        _ => None,
    }
}

/// Outcome of the partially reducible membership test.
#[derive(Clone, Debug, PartialEq)]
pub enum XprMembership {
    /// Member, with a recovered parameter (v, w, x1).
    Member { v: FieldElem, w: FieldElem, x1: FieldElem },
    NotMember,
    /// The common root lies in a cubic extension.
    Undecided,
}

/// C1 = w³ − ȳw² + yw − 1, C2 = αw³ − zw² + 1, C3 = w³ − z̄w + α.
pub fn xpr_cubics(c: &CharCoords) -> [UPoly; 3] {
    let z0 = FieldElem::zero();
    let one = FieldElem::one();
    [
        UPoly::new(vec![-&one, c.y.clone(), -&c.yb, one.clone()]),
        UPoly::new(vec![one.clone(), z0.clone(), -&c.z, c.alpha.clone()]),
        UPoly::new(vec![c.alpha.clone(), -&c.zb, z0, one]),
    ]
}

pub fn xpr_membership(c: &CharCoords) -> XprMembership {
    let (a, b) = (&c.alpha, &c.beta);
    let two = FieldElem::int(2);
    if c.alpha != c.alphab || c.beta != c.betab || a == &two {
        return XprMembership::NotMember;
    }
    if !(&(a - &two) * &(b - &two)).is_one() {
        return XprMembership::NotMember;
    }
    let [c1, c2, c3] = xpr_cubics(c);
    let g = gcd_univar(&gcd_univar(&c1, &c2).unwrap(), &c3).unwrap();
    let roots: Vec<FieldElem> = match g.degree() {
        Some(0) | None => return XprMembership::NotMember,
        Some(1) => vec![g.linear_root().unwrap()],
        Some(2) => {
            let cs = g.coeffs();
            let disc = &(&cs[1] * &cs[1]) - &(&FieldElem::int(4) * &(&cs[0] * &cs[2]));
            let s = match disc.sqrt() {
                Some(s) => s,
                None if disc.modulus().is_none() => match sqrt_adjoin_elem(&disc) {
                    Ok(ctx) => ctx.s(),
                    Err(_) => return XprMembership::Undecided,
                },
                None => return XprMembership::Undecided,
            };
            let den = &two * &cs[2];
            vec![&(-&cs[1] + &s) / &den, &(-&cs[1] - &s) / &den]
        }
        Some(_) => return XprMembership::Undecided,
    };
    let k = &(&(a * a) - a) - &FieldElem::one();
    for w in roots {
        if w.is_zero() {
            continue;
        }
        let v = &c.y - &w.inv().unwrap();
        if &v * &v == &(&w * &k) / &(a - &two) {
            return XprMembership::Member { v, w, x1: a - &FieldElem::one() };
        }
    }
    XprMembership::NotMember
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub set: ComponentSet,
    pub xpr: XprMembership,
}

pub fn classify_detail(c: &CharCoords) -> Classification {
    let mut set = ComponentSet::default();
    for comp in [Component::XTR, Component::V0, Component::V1, Component::V2] {
        if catalog(comp).unwrap().vanishes_at(c) {
            set.insert(comp);
        }
    }
    let xpr = xpr_membership(c);
    if matches!(xpr, XprMembership::Member { .. }) {
        set.insert(Component::XPR);
    }
    Classification { set, xpr }
}

pub fn classify(c: &CharCoords) -> ComponentSet {
    classify_detail(c).set
}

/// Classification from center-invariant data. XPR is decided only when the
/// orbit lifts to coordinates over the current field.
pub fn classify_orbit(o: &OrbitCoords) -> Result<ComponentSet, CoordError> {
    let mut set = ComponentSet::default();
    for comp in [Component::XTR, Component::V0, Component::V1, Component::V2] {
        if catalog(comp).unwrap().vanishes_on_orbit(o)? {
            set.insert(comp);
        }
    }
    if let Some(c) = o.lift() {
        if matches!(xpr_membership(&c), XprMembership::Member { .. }) {
            set.insert(Component::XPR);
        }
    }
    Ok(set)
}

/// The XTR ∩ XPR curve.
pub fn xpr_xtr_curve(c: &CharCoords) -> bool {
    let three = FieldElem::int(3);
    if [&c.alpha, &c.alphab, &c.beta, &c.betab].iter().any(|x| **x != three) {
        return false;
    }
    static P: OnceLock<MPoly> = OnceLock::new();
    let p = P.get_or_init(|| parse_poly("64 - 28*y*yb - y^2*yb^2 + 5*y^3 + 5*yb^3", None).unwrap());
    let two = FieldElem::int(2);
    c.eval(p).unwrap().is_zero() && c.z == &c.y.pow(2) - &(&two * &c.yb) && c.zb == &c.yb.pow(2) - &(&two * &c.y)
}

/// w⁶ − 2w³(2x1² + x1 − 1)/(x1 − 1) + 1 = 0.
pub fn boundary_curve(w: &FieldElem, x1: &FieldElem) -> Result<bool, ComponentError> {
    let d = x1 - &FieldElem::one();
    if d.is_zero() {
        return Err(ComponentError::Excluded("x1 = 1"));
    }
    let n = &(&(&FieldElem::int(2) * &x1.pow(2)) + x1) - &FieldElem::one();
    let w3 = w.pow(3);
    Ok((&(&(&w3 * &w3) - &(&(&FieldElem::int(2) * &w3) * &(&n / &d))) + &FieldElem::one()).is_zero())
}

/// w⁶ − 2w³α(2α − 3)/(α − 2) + 1 = 0.
pub fn boundary_curve_alpha(w: &FieldElem, alpha: &FieldElem) -> Result<bool, ComponentError> {
    let d = alpha - &FieldElem::int(2);
    if d.is_zero() {
        return Err(ComponentError::Excluded("alpha = 2"));
    }
    let n = alpha * &(&(&FieldElem::int(2) * alpha) - &FieldElem::int(3));
    let w3 = w.pow(3);
    Ok((&(&(&w3 * &w3) - &(&(&FieldElem::int(2) * &w3) * &(&n / &d))) + &FieldElem::one()).is_zero())
}

/// α²(2α − 3)² − (α − 2)², the reduced discriminant of the boundary sextic
/// as a quadratic in w³, cleared of its denominator.
pub fn sextic_discriminant_check(alpha: &FieldElem) -> Result<FieldElem, ComponentError> {
    let d = alpha - &FieldElem::int(2);
    if d.is_zero() {
        return Err(ComponentError::Excluded("alpha = 2"));
    }
    let m = alpha * &(&(&FieldElem::int(2) * alpha) - &FieldElem::int(3));
    Ok(&(&m * &m) - &(&d * &d))
}

/// Symbolic form of [`sextic_discriminant_check`] in the variable α.
pub fn sextic_discriminant_poly() -> MPoly {
    parse_poly("alpha^2*(2*alpha - 3)^2 - (alpha - 2)^2", None).unwrap()
}

/// Evaluate a polynomial at a (v, w, x1) parameter.
pub fn param_point(v: &FieldElem, w: &FieldElem, x1: &FieldElem) -> Point {
    Point::new().with(vars::V, v.clone()).with(vars::W, w.clone()).with(vars::X1, x1.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coords::mu3_act;

    fn set(cs: &[Component]) -> ComponentSet {
        ComponentSet::of(cs)
    }

    #[test]
    fn catalog_sizes() {
        assert_eq!(v0_radical_generators().len(), 18);
        assert_eq!(catalog(Component::V1).unwrap().polys.len(), 6);
        assert_eq!(v0_system().len(), 9);
    }

    #[test]
    fn intersection_points() {
        use Component::*;
        let a = CharCoords::from_ints([4, 4, 8, 8, 3, 3, 3, 3]);
        let b = CharCoords::from_ints([2, 2, 2, 2, 1, 1, 1, 1]);
        for k in 0..3 {
            assert_eq!(classify(&mu3_act(k, &a)), set(&[XTR, XPR, V0]));
            assert_eq!(classify(&mu3_act(k, &b)), set(&[XPR, V0, V1, V2]));
            assert_eq!(classify_orbit(&mu3_act(k, &b).orbit()).unwrap(), set(&[XPR, V0, V1, V2]));
        }
        assert_eq!(classify(&CharCoords::from_ints([0, 0, 0, 0, -1, -1, -1, -1])), set(&[V0]));
        assert!(classify(&CharCoords::from_ints([1; 8])).is_empty());
        match classify_detail(&b).xpr {
            XprMembership::Member { v, w, x1 } => {
                assert!(v.is_one() && w.is_one() && x1.is_zero());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn w_discriminants_factor() {
        for e in w_catalog() {
            assert_eq!(e.discriminant(), e.factored_discriminant(), "{}", e.name);
        }
    }

    #[test]
    fn xtr_xpr_curve_and_boundary() {
        assert!(xpr_xtr_curve(&CharCoords::from_ints([4, 4, 8, 8, 3, 3, 3, 3])));
        assert!(!xpr_xtr_curve(&CharCoords::from_ints([3; 8])));
        assert!(!xpr_xtr_curve(&CharCoords::from_ints([4, 4, 8, 8, 4, 3, 3, 3])));
        assert_eq!(sextic_discriminant_check(&FieldElem::one()).unwrap(), FieldElem::zero());
        assert_eq!(sextic_discriminant_check(&FieldElem::zero()).unwrap(), FieldElem::int(-4));
        assert!(sextic_discriminant_check(&FieldElem::int(2)).is_err());
        assert!(boundary_curve(&FieldElem::one(), &FieldElem::one()).is_err());
        // (1 ± √5)/2 is a root of α² − α − 1
        let ctx = crate::numtower::sqrt_adjoin(&crate::numtower::Cyclo12::from_i64(5)).unwrap();
        let phi = &(&FieldElem::one() + &ctx.s()) / &FieldElem::int(2);
        assert!(sextic_discriminant_check(&phi).unwrap().is_zero());
    }
}
