//! The D(3,3,4) slice X = V(I) ⊂ C⁴, the character hypersurface W, the
//! birational maps f: X → W and g: W → X, and pullbacks to Γ.

use super::{sqrt_branch, ConstructError};
use crate::coords::Component;
use crate::grp::{Alphabet, Automorphism, Gen, Representation};
use crate::mat3::Mat3;
use crate::numtower::FieldElem;
use crate::poly::{parse_poly, vars, MPoly, Point, RatFunc};
use std::sync::OnceLock;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlicePoint {
    pub x0: FieldElem,
    pub x1: FieldElem,
    pub y0: FieldElem,
    pub y1: FieldElem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPoint {
    pub nu: FieldElem,
    pub nub: FieldElem,
    pub zeta: FieldElem,
}

impl SlicePoint {
    /// Checked constructor: the point must satisfy both generators of I.
    pub fn new(x0: FieldElem, x1: FieldElem, y0: FieldElem, y1: FieldElem) -> Result<Self, ConstructError> {
        let p = SlicePoint { x0, x1, y0, y1 };
        if !p.on_slice() {
            return Err(ConstructError::NotOnSlice);
        }
        Ok(p)
    }

    pub fn point(&self) -> Point {
        Point::from_pairs(&[
            (vars::X0, self.x0.clone()),
            (vars::X1, self.x1.clone()),
            (vars::Y0, self.y0.clone()),
            (vars::Y1, self.y1.clone()),
        ])
    }

    pub fn on_slice(&self) -> bool {
        let pt = self.point();
        slice_ideal().iter().all(|g| g.eval(&pt).unwrap().is_zero())
    }
}

impl WPoint {
    pub fn new(nu: FieldElem, nub: FieldElem, zeta: FieldElem) -> Result<Self, ConstructError> {
        let q = WPoint { nu, nub, zeta };
        if !q.on_w() {
            return Err(ConstructError::NotOnW);
        }
        Ok(q)
    }

    pub fn point(&self) -> Point {
        Point::from_pairs(&[(vars::NU, self.nu.clone()), (vars::NUB, self.nub.clone()), (vars::ZETA, self.zeta.clone())])
    }

    pub fn on_w(&self) -> bool {
        hypersurface().eval(&self.point()).unwrap().is_zero()
    }
}

/// Generators of I: tr KL = 1 and tr (KL)⁻¹ = 1.
pub fn slice_ideal() -> &'static [MPoly; 2] {
    static I: OnceLock<[MPoly; 2]> = OnceLock::new();
    I.get_or_init(|| {
        ["x0*y0 + x1 - y1 - 2", "x0*y1 - x1*y1 - x0 - y0 + y1 - 2"].map(|t| parse_poly(t, None).unwrap())
    })
}

/// ζ² − (νν̄ − 2)ζ + ν³ + ν̄³ − 5νν̄ + 5.
pub fn hypersurface() -> &'static MPoly {
    static H: OnceLock<MPoly> = OnceLock::new();
    H.get_or_init(|| parse_poly("zeta^2 - (nu*nub - 2)*zeta + nu^3 + nub^3 - 5*nu*nub + 5", None).unwrap())
}

fn kl<T: crate::mat3::Ring>(x0: T, x1: T, y0: T, y1: T) -> (Mat3<T>, Mat3<T>) {
    let (o, l) = (T::zero(), T::one());
    let m = |x: &T| x.neg();
    let k = Mat3::from_rows([[o.clone(), o.clone(), l.clone()], [x0, l.clone(), x1], [m(&l), o.clone(), m(&l)]]);
    let ll = Mat3::from_rows([[l.clone(), y0, y1], [o.clone(), m(&l), m(&l)], [o.clone(), l.clone(), o]]);
    (k, ll)
}

/// (ν, ν̄, ζ) = (tr K⁻¹L, tr KL⁻¹, tr [K, L]) as polynomials in x0, x1, y0, y1.
pub fn slice_f_polys() -> &'static [MPoly; 3] {
    static F: OnceLock<[MPoly; 3]> = OnceLock::new();
    F.get_or_init(|| {
        let v = MPoly::var;
        let (k, l) = kl(v(vars::X0), v(vars::X1), v(vars::Y0), v(vars::Y1));
        // det K = det L = 1, so inverses are adjugates.
        let (ki, li) = (k.adj(), l.adj());
        [ki.mul(&l).trace(), k.mul(&li).trace(), k.mul(&l).mul(&ki).mul(&li).trace()]
    })
}

/// The rational inverse g, as four functions of (ν, ν̄, ζ), with ν = tr K⁻¹L
/// as in f.
pub fn slice_g_ratfuncs() -> &'static [RatFunc; 4] {
    static G: OnceLock<[RatFunc; 4]> = OnceLock::new();
    G.get_or_init(|| {
        let p = |t: &str| parse_poly(t, None).unwrap();
        let d1 = p("zeta - 1");
        let d2 = p("zeta + 3 - nu*nub");
        let r = |n: &str, d: &MPoly| RatFunc::new(p(n), d.clone()).unwrap();
        [
            r("nub^2 + nu*nub - 2*nu - zeta - 3", &d1),
            r("nub^2 - nu^2 + 2*nub - 2*nu + zeta - 1", &d1),
            r("nu*nub - nu^2 + 2*nub - 2*zeta - 2", &d2),
            r("-nub^2 + 2*nu - zeta + 1", &d2),
        ]
    })
}

/// The lines of W on which g is undefined, as defining pairs. ε runs over
/// both primitive sixth roots of unity.
pub fn exception_locus() -> &'static [(String, [MPoly; 2])] {
    static Y: OnceLock<Vec<(String, [MPoly; 2])>> = OnceLock::new();
    Y.get_or_init(|| {
        let (nu, nub, zeta) = (MPoly::var(vars::NU), MPoly::var(vars::NUB), MPoly::var(vars::ZETA));
        let c = |x: FieldElem| MPoly::constant(x);
        let n = |k: i64| MPoly::int(k);
        let lin = |a: &FieldElem, b: &FieldElem| &(&nu + &(&c(a.clone()) * &nub)) + &c(b.clone());
        let mut out = vec![
            ("Y1".to_string(), [&zeta - &n(1), &(&nu + &nub) + &n(2)]),
            ("Y4".to_string(), [&(&nu + &nub) + &n(2), &(&(&nub.pow(2) + &(&n(2) * &nub)) + &zeta) + &n(3)]),
        ];
        let omega = FieldElem::omega();
        for (tag, eps) in [("+", &FieldElem::one() + &omega), ("-", -&omega)] {
            let e2 = eps.pow(2);
            let two = FieldElem::int(2);
            let l2 = lin(&e2, &-(&two * &eps));
            let l3 = lin(&-&eps, &(&two * &e2));
            out.push((format!("Y2{tag}"), [&zeta - &n(1), l2.clone()]));
            out.push((format!("Y3{tag}"), [&zeta - &n(1), l3.clone()]));
            let q5 = &(&(&nub.pow(2) + &(&c(&two * &e2) * &nub)) - &(&c(eps.clone()) * &zeta)) - &c(&FieldElem::int(3) * &eps);
            let q6 =
                &(&(&nub.pow(2) - &(&c(&two * &eps) * &nub)) + &(&c(e2.clone()) * &zeta)) + &c(&FieldElem::int(3) * &e2);
            out.push((format!("Y5{tag}"), [l2, q5]));
            out.push((format!("Y6{tag}"), [l3, q6]));
        }
        out
    })
}

/// K, L as the images of k, l; relations and the trace conditions are checked.
pub fn slice_rep(p: &SlicePoint) -> Result<Representation, ConstructError> {
    if !p.on_slice() {
        return Err(ConstructError::NotOnSlice);
    }
    let (k, l) = kl(p.x0.clone(), p.x1.clone(), p.y0.clone(), p.y1.clone());
    let rho = Representation::new(Alphabet::KL, &[(Gen::K, k), (Gen::L, l)])?;
    rho.check_relations()?;
    Ok(rho)
}

pub fn slice_f(p: &SlicePoint) -> Result<WPoint, ConstructError> {
    if !p.on_slice() {
        return Err(ConstructError::NotOnSlice);
    }
    let pt = p.point();
    let [nu, nub, zeta] = slice_f_polys().clone().map(|f| f.eval(&pt).unwrap());
    Ok(WPoint { nu, nub, zeta })
}

pub fn slice_g(q: &WPoint) -> Result<SlicePoint, ConstructError> {
    if !q.on_w() {
        return Err(ConstructError::NotOnW);
    }
    let pt = q.point();
    for (name, pair) in exception_locus() {
        if pair.iter().all(|f| f.eval(&pt).unwrap().is_zero()) {
            return Err(ConstructError::GUndefined(format!("point lies on {name}")));
        }
    }
    let mut out = Vec::with_capacity(4);
    for g in slice_g_ratfuncs() {
        if g.den.eval(&pt).unwrap().is_zero() {
            return Err(ConstructError::GUndefined(format!("denominator {} vanishes", g.den)));
        }
        out.push(g.eval(&pt).unwrap());
    }
    let [x0, x1, y0, y1]: [FieldElem; 4] = out.try_into().unwrap();
    SlicePoint::new(x0, x1, y0, y1)
}

/// A point of W over (ν, ν̄), choosing the root of the quadratic in ζ.
pub fn w_point_from(nu: &FieldElem, nub: &FieldElem, plus: bool) -> Result<WPoint, ConstructError> {
    let b = nu * nub - FieldElem::int(2);
    let c = nu.pow(3) + nub.pow(3) - FieldElem::int(5) * nu * nub + FieldElem::int(5);
    let disc = b.pow(2) - FieldElem::int(4) * &c;
    let zeta = (&b + &sqrt_branch(&disc, plus)?) / FieldElem::int(2);
    WPoint::new(nu.clone(), nub.clone(), zeta)
}

/// Pullback of the slice representation to Γ along φ (target V2) or
/// φ∘h (target V1), on the Wirtinger generators.
pub fn dehn_rep(p: &SlicePoint, target: Component) -> Result<Representation, ConstructError> {
    let rho = slice_rep(p)?.dehn()?;
    let rho = match target {
        Component::V2 => rho,
        Component::V1 => rho.twist(Automorphism::H)?,
        other => return Err(ConstructError::Excluded(format!("dehn target {}", other.name()))),
    };
    rho.check_relations()?;
    Ok(rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::components::classify;
    use crate::coords::extract;
    use crate::numtower::{sqrt_adjoin, Cyclo12};

    fn i() -> FieldElem {
        FieldElem::i()
    }

    #[test]
    fn zeta_matches_closed_form() {
        let text = "x0^2*y0*y1 - x0*x1*y0*y1 - x0^2*y0 + x0*y0^2 - x1*y0^2 + x0*x1*y1 - x1^2*y1 - x0*y0*y1 + x1*y0*y1 \
                    + x0*y1^2 - x0*x1 + 2*x0*y0 - x1*y0 - 3*x0*y1 + 2*x1*y1 + y0*y1 - y1^2 + 4*x0 - x1 - 2*y0 - 2";
        let closed = parse_poly(text, None).unwrap();
        let f = slice_f_polys();
        assert_eq!(f[0], parse_poly("x0*y0 - x1*y0 + x0 + y1 - 2", None).unwrap());
        assert_eq!(f[1], parse_poly("x0*y1 - x1 + y0 - y1 + 1", None).unwrap());
        assert_eq!(f[2], closed);
    }

    #[test]
    fn example_points() {
        let e = FieldElem::int;
        let z = &e(-1) + &(&e(2) * &i());
        let q = WPoint::new(e(0), e(0), z.clone()).unwrap();
        let p = slice_g(&q).unwrap();
        assert_eq!(p, SlicePoint { x0: i(), x1: e(1), y0: &e(-1) - &i(), y1: -i() });
        assert_eq!(slice_f(&p).unwrap(), q);
        assert!(WPoint::new(e(2), e(2), e(1)).is_ok());
        assert!(matches!(slice_g(&WPoint::new(e(2), e(2), e(1)).unwrap()), Err(ConstructError::GUndefined(_))));
    }

    #[test]
    fn exception_lines_lie_in_w() {
        // Each line, sampled at ν̄ = 0, 1, 2, lies on W and kills a denominator of g.
        for (name, [p, q]) in exception_locus() {
            for t in 0..3 {
                let mut pt = Point::new().with(vars::NUB, FieldElem::int(t));
                let (p1, q1) = (p.partial_eval(&pt), q.partial_eval(&pt));
                let (v, other) = if p1.degree_in(vars::ZETA) == 1 { (vars::ZETA, vars::NU) } else { (vars::NU, vars::ZETA) };
                let root = |f: &MPoly, v| {
                    let c = f.coeffs_in(v);
                    -&c[0].as_constant().unwrap() / &c[1].as_constant().unwrap()
                };
                let x = root(&p1, v);
                pt.set(v, x.clone());
                let q2 = q1.partial_eval(&Point::new().with(v, x));
                pt.set(other, root(&q2, other));
                assert!(hypersurface().eval(&pt).unwrap().is_zero(), "{name}");
                assert!(slice_g_ratfuncs().iter().any(|g| g.den.eval(&pt).unwrap().is_zero()), "{name}");
            }
        }
    }

    #[test]
    fn slice_to_dehn_pipeline() {
        let r = sqrt_adjoin(&Cyclo12::from_i64(-7)).unwrap().s();
        let zeta = &FieldElem::rat(7, 2) + &(&r * &FieldElem::rat(1, 2));
        let q = WPoint::new(FieldElem::int(3), FieldElem::int(3), zeta).unwrap();
        let p = slice_g(&q).unwrap();
        let k = slice_rep(&p).unwrap();
        assert_eq!(k.eval(&"k.l".parse().unwrap()).unwrap().trace(), FieldElem::one());
        for target in [Component::V1, Component::V2] {
            let rho = dehn_rep(&p, target).unwrap();
            let c = extract(&rho).unwrap();
            assert_eq!((c.y.clone(), c.yb.clone()), (FieldElem::int(3), FieldElem::int(3)));
            assert!(classify(&c).contains(target), "{target:?} {c}");
            let ell = rho.eval(&"a.b.a'.b'".parse().unwrap()).unwrap();
            let one = FieldElem::one();
            assert_eq!(ell.charpoly(), [-one.clone(), FieldElem::int(3), FieldElem::int(-3), one]);
        }
        let c = extract(&dehn_rep(&p, Component::V1).unwrap()).unwrap();
        assert_eq!(&c.beta + &c.betab, FieldElem::int(7));
        assert_eq!(&c.beta * &c.betab, FieldElem::int(14));
    }
}
