//! Matrix families for V0, V1, V2: A, B in closed form, T0 from the
//! intertwiner solver, orbit coordinates without cube roots.

use super::{sqrt_branch, ConstructError, Lit};
use crate::components::{v0_radical_generators, v0_system, w_entry};
use crate::coords::{orbit_of_rep, Component, OrbitCoords};
use crate::grp::{Alphabet, Automorphism, Gen, Representation};
use crate::mat3::{solve_intertwiner, Mat3};
use crate::numtower::FieldElem;
use crate::poly::{parse_poly, vars, MPoly, Point};

#[derive(Clone, Debug)]
pub struct Family {
    pub component: Component,
    pub a: Mat3<FieldElem>,
    pub b: Mat3<FieldElem>,
    pub t0: Mat3<FieldElem>,
    pub d0: FieldElem,
    /// The chosen square root of the component's discriminant.
    pub s: FieldElem,
    pub orbit: OrbitCoords,
    /// t ↦ T0, a ↦ A, b ↦ B (GL, det T0 = d0).
    pub rep: Representation,
    /// V0 only: αβ − 2α − 2β + 3 = 0, where the character is reducible.
    pub boundary: bool,
}

fn e(n: i64) -> FieldElem {
    FieldElem::int(n)
}

fn finish(component: Component, a: Mat3<FieldElem>, b: Mat3<FieldElem>, s: FieldElem) -> Result<Family, ConstructError> {
    let basis = solve_intertwiner(&a, &b);
    if basis.len() != 1 {
        return Err(ConstructError::Intertwiner(basis.len()));
    }
    let t0 = basis.into_iter().next().unwrap();
    let d0 = t0.det();
    if d0.is_zero() {
        return Err(ConstructError::DegenerateNormalization);
    }
    let rep = Representation::new(Alphabet::TAB, &[(Gen::Tt, t0.clone()), (Gen::A, a.clone()), (Gen::B, b.clone())])?;
    let orbit = orbit_of_rep(&rep)?;
    Ok(Family { component, a, b, t0, d0, s, orbit, rep, boundary: false })
}

fn w_delta(c: Component, pt: &Point) -> FieldElem {
    w_entry(c).unwrap().disc_factors[0].0.eval(pt).expect("bound")
}

/// V2 at (α, ᾱ): B = diag(1, i, −i); `plus` picks the sign of √Δ in A.
pub fn v2_family(alpha: &FieldElem, alphab: &FieldElem, plus: bool) -> Result<Family, ConstructError> {
    let pt = Point::new().with(vars::ALPHA, alpha.clone()).with(vars::ALPHAB, alphab.clone());
    let s = sqrt_branch(&w_delta(Component::V2, &pt), plus)?;
    let i = FieldElem::i();
    let (one, a) = (e(1), alpha);
    let b = Mat3::diag([one.clone(), i.clone(), -&i]);
    let (mi, pi) = (&one - &i, &one + &i);
    let a00 = (a + &one) / e(2);
    let a11 = &mi * &(a - &one) / e(4);
    let a22 = &pi * &(a - &one) / e(4);
    let c0 = a.pow(2) - e(2) * alphab + &one;
    let charts: Vec<Mat3<FieldElem>> = if !c0.is_zero() {
        let n = a.pow(3) - a.pow(2) - e(4) * a * alphab - a + e(5);
        let two_is = e(2) * &i * &s;
        vec![Mat3::from_rows([
            [a00, &mi * &c0 / e(8), &pi * &c0 / e(8)],
            [one.clone(), a11, &pi / e(4) * (&n + &two_is) / &c0],
            [one, &mi / e(4) * (&n - &two_is) / &c0, a22],
        ])]
    } else {
        let p = (-a.pow(3) - a.pow(2) - e(3) * a + e(5)) / e(8);
        let q = (-a.pow(2) - e(2) * a - e(5)) / e(8);
        let z = e(0);
        vec![
            Mat3::from_rows([[a00.clone(), z.clone(), p.clone()], [one.clone(), a11.clone(), q.clone()], [z.clone(), one.clone(), a22.clone()]]),
            Mat3::from_rows([[a00, p, z.clone()], [z, a11, one.clone()], [one, q, a22]]),
        ]
    };
    // In the degenerate chart the two matrices realize the two sheets.
    let f = Lit::new("alpha*alphab + 5*alpha + 5*alphab + 5").at(&pt);
    let mut last = None;
    for m in charts {
        let fam = finish(Component::V2, m, b.clone(), s.clone())?;
        if &e(2) * &fam.orbit.u[0] - &f == s {
            return Ok(fam);
        }
        last = Some(fam);
    }
    Ok(last.unwrap())
}

/// V1 at (β, β̄): the V2 family twisted by h.
pub fn v1_family(beta: &FieldElem, betab: &FieldElem, plus: bool) -> Result<Family, ConstructError> {
    let base = v2_family(beta, betab, plus)?;
    let rep = base.rep.twist(Automorphism::H)?.to_alphabet(Alphabet::TAB)?;
    let t0 = rep.image(Gen::Tt).clone();
    let d0 = t0.det();
    let orbit = orbit_of_rep(&rep)?;
    Ok(Family {
        component: Component::V1,
        a: rep.image(Gen::A).clone(),
        b: rep.image(Gen::B).clone(),
        t0,
        d0,
        s: base.s,
        orbit,
        rep,
        boundary: false,
    })
}

static V0_A01: Lit = Lit::new("2*(alpha*beta - 2*alpha - 2*beta + 3)*(beta - alpha)");
static V0_A02: Lit = Lit::new("(alpha*beta - 2*alpha - 2*beta + 3)*(beta - alpha)*(beta - 1)");
static V0_N11: Lit = Lit::new("4*alpha^2 - alpha*beta^3 + 4*alpha*beta^2 - 9*alpha*beta - 6*alpha + 7*beta^2 - 6*beta - 9");
static V0_N12: Lit = Lit::new(
    "4*alpha*beta^3 - alpha*beta^4 + 5*beta^3 - 5*alpha*beta^2 + 2*alpha^2*beta - 8*beta^2 - 2*alpha^2 - 2*alpha*beta - 9*beta",
);
static V0_N22: Lit = Lit::new(
    "alpha*beta^3 + 2*beta^3 - 8*alpha*beta^2 + 2*alpha^2*beta - 5*beta^2 - 2*alpha^2 + 5*alpha*beta + 6*alpha + 6*beta + 9",
);

/// V0 at (α, β) with B = [[1,0,0],[0,β−1,1],[0,−1,0]]; `plus` picks the sign of √Δ in A.
pub fn v0_family(alpha: &FieldElem, beta: &FieldElem, plus: bool) -> Result<Family, ConstructError> {
    let (a, bt) = (alpha, beta);
    for (bad, name) in [(e(3), "beta = 3"), (e(-1), "beta = -1"), (a.clone(), "beta = alpha")] {
        if *bt == bad {
            return Err(ConstructError::Excluded(name.into()));
        }
    }
    let pt = Point::new().with(vars::ALPHA, a.clone()).with(vars::BETA, bt.clone());
    let s = sqrt_branch(&w_delta(Component::V0, &pt), plus)?;
    let one = e(1);
    let (b3, b1) = (bt - e(3), bt + &one);
    let k = &b3 * &b1;
    let den = e(2) * &k * (bt - a);
    let ks = &k * &s;
    let d2 = b3.pow(2) * &b1;
    let a00 = (a * bt - e(2) * a - bt) / &b3;
    let a11 = (V0_N11.at(&pt) + &ks) / &den;
    let a12 = (V0_N12.at(&pt) + &ks * &(bt - e(2))) / &den;
    let a21 = (V0_N11.at(&pt) - &ks) / &den;
    let a22 = (V0_N22.at(&pt) - &ks) / &den;
    let am = Mat3::from_rows([
        [a00, V0_A01.at(&pt) / &d2, V0_A02.at(&pt) / &d2],
        [one.clone(), a11, a12],
        [one.clone(), a21, a22],
    ]);
    let z = e(0);
    let bm = Mat3::from_rows([[one.clone(), z.clone(), z.clone()], [z.clone(), bt - &one, one], [z.clone(), e(-1), z]]);
    let mut fam = finish(Component::V0, am, bm, s)?;
    fam.boundary = Lit::new("alpha*beta - 2*alpha - 2*beta + 3").at(&pt).is_zero();
    Ok(fam)
}

/// Orbit coordinates from the component's closed-form identities, defined
/// also where the matrix family is not (e.g. β = α on V0). For V0 the
/// parameters are (α, β); for V1 (β, β̄); for V2 (α, ᾱ).
pub fn closed_orbit(component: Component, p: &FieldElem, q: &FieldElem, plus: bool) -> Result<OrbitCoords, ConstructError> {
    let (one, three) = (e(1), e(3));
    let half = FieldElem::rat(1, 2);
    match component {
        Component::V0 => {
            let pt = Point::new().with(vars::ALPHA, p.clone()).with(vars::BETA, q.clone());
            let s = sqrt_branch(&w_delta(Component::V0, &pt), plus)?;
            let lit = |t: &'static str| Lit::new(t).at(&pt);
            let f = lit("alpha^2*beta + alpha*beta^2 + 6*alpha*beta + 3*alpha + 3*beta + 2");
            let g = lit("alpha^4*beta^2 + 10*alpha^2*beta + 9*alpha^2 - 2*alpha^3 - 2");
            let h = lit("alpha^2*beta + 3*alpha*beta + 3*alpha + 1");
            let pp = lit("alpha^2*beta^2 - 2*alpha^2*beta - 2*alpha*beta^2 + 2*alpha^2 + 2*beta^2 - 3");
            let am = p - q;
            let gs = lit("alpha^3*beta + 3*alpha^2 - 4*alpha") * &s;
            let hs = (&one - p) * &s;
            let y3 = (&f - &(&am * &s)) * &half;
            let yb3 = (&f + &(&am * &s)) * &half;
            let yyb = (p + &one) * (q + &one);
            let z3 = (&g - &gs) * &half;
            let zb3 = (&g + &gs) * &half;
            let zzb = lit("1 + alpha^2 + 2*alpha^2*beta");
            let yz = (&h + &hs) * &half;
            let ybzb = (&h - &hs) * &half;
            let eta = (&pp - &(lit("alpha*beta - 2*alpha - 2*beta + 3") * &s)) * &half;
            let head = [y3, yb3, yyb, z3, zb3, zzb, yz, ybzb];
            let [m0, m1, m2, m3] = mixed_terms(&head)?;
            let [y3, yb3, yyb, z3, zb3, zzb, yz, ybzb] = head;
            let u = [y3, yb3, yyb, z3, zb3, zzb, yz, ybzb, m0, m1, m2, m3];
            Ok(OrbitCoords { u, alpha: p.clone(), alphab: p.clone(), beta: q.clone(), betab: q.clone(), eta: Some(eta) })
        }
        Component::V1 | Component::V2 => {
            let pt = Point::new().with(vars::ALPHA, p.clone()).with(vars::ALPHAB, q.clone());
            let s = sqrt_branch(&w_entry(Component::V2).unwrap().disc_factors[0].0.eval(&pt).unwrap(), plus)?;
            let f = p * q + e(5) * p + e(5) * q + e(5);
            let sum = p + q;
            let hi = (&f + &s) * &half;
            let lo = (&f - &s) * &half;
            // V2: 2y³ = F + s, z = y² − ȳ. V1 mirrors it: 2ȳ³ = F + s, z = ȳ.
            let (y3, yb3, z, zb) = match component {
                Component::V2 => (hi, lo, "y^2 - yb", "yb^2 - y"),
                _ => (lo, hi, "yb", "y"),
            };
            let eta = match component {
                Component::V2 => &yb3 - &(&three * &(&sum + &one)),
                _ => &y3 - &(&three * &(&sum + &one)),
            };
            let (a, ab, b, bb) = match component {
                Component::V2 => (p.clone(), q.clone(), one.clone(), one.clone()),
                _ => (one.clone(), one.clone(), p.clone(), q.clone()),
            };
            let mut u: [FieldElem; 12] = std::array::from_fn(|_| e(0));
            u[0] = y3;
            u[1] = yb3;
            u[2] = &sum + &e(2);
            let base = OrbitCoords { u: u.clone(), alpha: a.clone(), alphab: ab.clone(), beta: b.clone(), betab: bb.clone(), eta: None };
            let (zp, zbp) = (parse_poly(z, None).unwrap(), parse_poly(zb, None).unwrap());
            let yv = MPoly::var(vars::Y);
            let ybv = MPoly::var(vars::YB);
            let ev = |m: MPoly| base.eval_invariant(&m).map_err(ConstructError::from);
            u[3] = ev(zp.pow(3))?;
            u[4] = ev(zbp.pow(3))?;
            u[5] = ev(&zp * &zbp)?;
            u[6] = ev(&yv * &zp)?;
            u[7] = ev(&ybv * &zbp)?;
            u[8] = ev(&yv * &zbp.pow(2))?;
            u[9] = ev(&yv.pow(2) * &zbp)?;
            u[10] = ev(&ybv * &zp.pow(2))?;
            u[11] = ev(&ybv.pow(2) * &zp)?;
            Ok(OrbitCoords { u, alpha: a, alphab: ab, beta: b, betab: bb, eta: Some(eta) })
        }
        other => Err(ConstructError::Excluded(format!("no closed form for {}", other.name()))),
    }
}

/// yz̄², y²z̄, ȳz², ȳ²z from the other generators.
fn mixed_terms(u: &[FieldElem; 8]) -> Result<[FieldElem; 4], ConstructError> {
    let [y3, yb3, yyb, z3, zb3, zzb, yz, ybzb] = u;
    let yyb_i = yyb.inv();
    let z3_i = z3.inv();
    let zzb_i = zzb.inv();
    let mut out: [FieldElem; 4] = std::array::from_fn(|_| e(0));
    for (k, slot) in out.iter_mut().enumerate() {
        // A monomial vanishes with either of its letters' cubes.
        let (first, second) = if k < 2 { (y3, zb3) } else { (yb3, z3) };
        if first.is_zero() || second.is_zero() {
            continue;
        }
        *slot = match (k, &yyb_i, &z3_i, &zzb_i) {
            (0, Some(i), _, _) => ybzb.pow(2) * y3 * i.pow(2),
            (1, Some(i), _, _) => y3 * ybzb * i,
            (2, Some(i), _, _) => yz.pow(2) * yb3 * i.pow(2),
            (3, Some(i), _, _) => yb3 * yz * i,
            (0, None, Some(i), _) => yz * zzb.pow(2) * i,
            (1, None, Some(i), _) => yz.pow(2) * zzb * i,
            (2, None, Some(_), Some(j)) => ybzb * z3 * j,
            (3, None, Some(_), Some(j)) => ybzb.pow(2) * z3 * j.pow(2),
            _ => return Err(ConstructError::DegenerateNormalization),
        };
    }
    Ok(out)
}

/// Residual of `p` on an orbit: each weight part, cubed if needed, evaluated.
fn orbit_residual(o: &OrbitCoords, p: &MPoly) -> FieldElem {
    for q in crate::coords::weight_components(p) {
        if q.is_zero() {
            continue;
        }
        let homogeneous_zero_weight = o.eval_invariant(&q).ok();
        let r = homogeneous_zero_weight.unwrap_or_else(|| o.eval_invariant(&q.pow(3)).expect("cube is invariant"));
        if !r.is_zero() {
            return r;
        }
    }
    FieldElem::zero()
}

fn residuals(o: &OrbitCoords, s: &FieldElem, table: &[(&'static str, &Lit, &Lit)]) -> Vec<(&'static str, FieldElem)> {
    let mut pt = Point::new()
        .with(vars::ALPHA, o.alpha.clone())
        .with(vars::ALPHAB, o.alphab.clone())
        .with(vars::BETA, o.beta.clone())
        .with(vars::BETAB, o.betab.clone());
    if let Some(eta) = &o.eta {
        pt.set(vars::ETA, eta.clone());
    }
    table
        .iter()
        .map(|(name, lhs, coeff)| {
            // lhs is an orbit-level invariant; coeff multiplies √Δ.
            let v = orbit_residual(o, &lhs.poly().partial_eval(&pt));
            (*name, v - s * &coeff.at(&pt))
        })
        .collect()
}

static V2_TABLE: [(&str, Lit, Lit); 8] = [
    ("beta = 1", Lit::new("beta - 1"), Lit::new("0")),
    ("betab = 1", Lit::new("betab - 1"), Lit::new("0")),
    ("y yb = alpha + alphab + 2", Lit::new("y*yb - alpha - alphab - 2"), Lit::new("0")),
    ("y^3 + yb^3 = alpha alphab + 5 alpha + 5 alphab + 5", Lit::new("y^3 + yb^3 - alpha*alphab - 5*alpha - 5*alphab - 5"), Lit::new("0")),
    ("2 y^3 = F + s", Lit::new("2*y^3 - alpha*alphab - 5*alpha - 5*alphab - 5"), Lit::new("1")),
    ("eta = yb^3 - 3(alpha + alphab + 1)", Lit::new("eta - yb^3 + 3*alpha + 3*alphab + 3"), Lit::new("0")),
    ("z = y^2 - yb", Lit::new("z - y^2 + yb"), Lit::new("0")),
    ("zb = yb^2 - y", Lit::new("zb - yb^2 + y"), Lit::new("0")),
];

static V1_TABLE: [(&str, Lit, Lit); 8] = [
    ("alpha = 1", Lit::new("alpha - 1"), Lit::new("0")),
    ("alphab = 1", Lit::new("alphab - 1"), Lit::new("0")),
    ("y yb = beta + betab + 2", Lit::new("y*yb - beta - betab - 2"), Lit::new("0")),
    ("y^3 + yb^3 = beta betab + 5 beta + 5 betab + 5", Lit::new("y^3 + yb^3 - beta*betab - 5*beta - 5*betab - 5"), Lit::new("0")),
    ("2 yb^3 = F + s", Lit::new("2*yb^3 - beta*betab - 5*beta - 5*betab - 5"), Lit::new("1")),
    ("eta = y^3 - 3(beta + betab + 1)", Lit::new("eta - y^3 + 3*beta + 3*betab + 3"), Lit::new("0")),
    ("z = yb", Lit::new("z - yb"), Lit::new("0")),
    ("zb = y", Lit::new("zb - y"), Lit::new("0")),
];

/// Residuals of the V1/V2 identity sets (all zero on a family output).
pub fn v2_identities(component: Component, o: &OrbitCoords, s: &FieldElem) -> Vec<(&'static str, FieldElem)> {
    let table = match component {
        Component::V1 => &V1_TABLE,
        _ => &V2_TABLE,
    };
    let rows: Vec<(&'static str, &Lit, &Lit)> = table.iter().map(|(n, l, c)| (*n, l, c)).collect();
    residuals(o, s, &rows)
}

static V0_TABLE: [(&str, Lit, Lit); 9] = [
    ("y yb = (alpha + 1)(beta + 1)", Lit::new("y*yb - (alpha + 1)*(beta + 1)"), Lit::new("0")),
    (
        "2 y^3 = F - (alpha - beta) s",
        Lit::new("2*y^3 - (alpha^2*beta + alpha*beta^2 + 6*alpha*beta + 3*alpha + 3*beta + 2)"),
        Lit::new("beta - alpha"),
    ),
    (
        "2 yb^3 = F + (alpha - beta) s",
        Lit::new("2*yb^3 - (alpha^2*beta + alpha*beta^2 + 6*alpha*beta + 3*alpha + 3*beta + 2)"),
        Lit::new("alpha - beta"),
    ),
    (
        "2 eta = P - (alpha beta - 2 alpha - 2 beta + 3) s",
        Lit::new("2*eta - (alpha^2*beta^2 - 2*alpha^2*beta - 2*alpha*beta^2 + 2*alpha^2 + 2*beta^2 - 3)"),
        Lit::new("-(alpha*beta - 2*alpha - 2*beta + 3)"),
    ),
    (
        "2 z^3 = G - (alpha^3 beta + 3 alpha^2 - 4 alpha) s",
        Lit::new("2*z^3 - (alpha^4*beta^2 + 10*alpha^2*beta + 9*alpha^2 - 2*alpha^3 - 2)"),
        Lit::new("-(alpha^3*beta + 3*alpha^2 - 4*alpha)"),
    ),
    (
        "2 zb^3 = G + (alpha^3 beta + 3 alpha^2 - 4 alpha) s",
        Lit::new("2*zb^3 - (alpha^4*beta^2 + 10*alpha^2*beta + 9*alpha^2 - 2*alpha^3 - 2)"),
        Lit::new("alpha^3*beta + 3*alpha^2 - 4*alpha"),
    ),
    ("z zb = 1 + alpha^2 + 2 alpha^2 beta", Lit::new("z*zb - 1 - alpha^2 - 2*alpha^2*beta"), Lit::new("0")),
    (
        "2 y z = H + (1 - alpha) s",
        Lit::new("2*y*z - (alpha^2*beta + 3*alpha*beta + 3*alpha + 1)"),
        Lit::new("1 - alpha"),
    ),
    (
        "2 yb zb = H - (1 - alpha) s",
        Lit::new("2*yb*zb - (alpha^2*beta + 3*alpha*beta + 3*alpha + 1)"),
        Lit::new("alpha - 1"),
    ),
];

/// Residuals of the distinguished-component identity block, followed by the
/// defining system and the 18 radical generators (all zero on a family output).
pub fn v0_identities(o: &OrbitCoords, s: &FieldElem) -> Vec<(String, FieldElem)> {
    let rows: Vec<(&'static str, &Lit, &Lit)> = V0_TABLE.iter().map(|(n, l, c)| (*n, l, c)).collect();
    let mut out: Vec<(String, FieldElem)> = residuals(o, s, &rows).into_iter().map(|(n, v)| (n.to_string(), v)).collect();
    let sym = |p: &MPoly| {
        let pt = Point::new().with(vars::ALPHA, o.alpha.clone()).with(vars::BETA, o.beta.clone());
        orbit_residual(o, &p.partial_eval(&pt))
    };
    for (k, p) in v0_system().iter().enumerate() {
        out.push((format!("system[{k}]"), sym(p)));
    }
    for (k, p) in v0_radical_generators().iter().enumerate() {
        out.push((format!("radical[{k}]"), sym(p)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::components::{catalog, classify_orbit};
    use crate::coords::CharCoords;

    fn all_zero<N: std::fmt::Debug>(rs: &[(N, FieldElem)]) -> bool {
        let bad: Vec<_> = rs.iter().filter(|(_, v)| !v.is_zero()).collect();
        if !bad.is_empty() {
            eprintln!("nonzero residuals: {bad:?}");
        }
        bad.is_empty()
    }

    #[test]
    fn v2_samples() {
        for (a, ab) in [(FieldElem::rat(3, 2), FieldElem::int(-2)), (FieldElem::int(5), FieldElem::rat(1, 3)), (FieldElem::int(1), FieldElem::int(1))] {
            for plus in [true, false] {
                let f = v2_family(&a, &ab, plus).unwrap();
                assert!(f.a.det().is_one());
                assert!(f.rep.check_relations().is_ok());
                assert!(all_zero(&v2_identities(Component::V2, &f.orbit, &f.s)), "({a}, {ab}) {plus}");
                assert!(catalog(Component::V2).unwrap().vanishes_on_orbit(&f.orbit).unwrap());
                assert!(classify_orbit(&f.orbit).unwrap().contains(Component::V2));
            }
        }
    }

    #[test]
    fn v2_degenerate_chart() {
        // α² − 2ᾱ + 1 = 0 at (3, 5).
        for plus in [true, false] {
            let f = v2_family(&FieldElem::int(3), &FieldElem::int(5), plus).unwrap();
            assert!(all_zero(&v2_identities(Component::V2, &f.orbit, &f.s)), "{plus}");
        }
    }

    #[test]
    fn v2_trivial_corner() {
        let f = v2_family(&FieldElem::int(1), &FieldElem::int(1), true).unwrap();
        let two = CharCoords::from_ints([2, 2, 2, 2, 1, 1, 1, 1]);
        assert_eq!(f.orbit.u[2], FieldElem::int(4));
        assert_eq!(f.orbit.lift().unwrap().orbit(), CharCoords { eta: f.orbit.eta.clone(), ..two }.orbit());
    }

    #[test]
    fn v1_samples() {
        for (b, bb) in [(FieldElem::rat(3, 2), FieldElem::int(-2)), (FieldElem::int(2), FieldElem::rat(-1, 4))] {
            for plus in [true, false] {
                let f = v1_family(&b, &bb, plus).unwrap();
                assert_eq!((&f.orbit.beta, &f.orbit.betab), (&b, &bb));
                assert!(all_zero(&v2_identities(Component::V1, &f.orbit, &f.s)), "({b}, {bb}) {plus}");
                assert!(classify_orbit(&f.orbit).unwrap().contains(Component::V1));
            }
        }
    }

    #[test]
    fn closed_forms_match_families() {
        let pairs = [(FieldElem::rat(3, 2), FieldElem::int(-2)), (FieldElem::int(5), FieldElem::rat(1, 3)), (FieldElem::int(2), FieldElem::int(7))];
        for (p, q) in &pairs {
            for plus in [true, false] {
                assert_eq!(closed_orbit(Component::V2, p, q, plus).unwrap(), v2_family(p, q, plus).unwrap().orbit);
                assert_eq!(closed_orbit(Component::V1, p, q, plus).unwrap(), v1_family(p, q, plus).unwrap().orbit);
                assert_eq!(closed_orbit(Component::V0, p, q, plus).unwrap(), v0_family(p, q, plus).unwrap().orbit);
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let e = FieldElem::int;
        let o = closed_orbit(Component::V0, &e(3), &e(3), true).unwrap();
        assert_eq!(o, CharCoords::from_ints([4, 4, 8, 8, 3, 3, 3, 3]).with_eta(e(3)).orbit());
        let o = closed_orbit(Component::V0, &e(1), &e(1), true).unwrap();
        assert_eq!((&o.u[0], &o.u[2]), (&e(8), &e(4)));
        assert_eq!(closed_orbit(Component::V0, &e(-1), &e(-1), true).unwrap().eta, Some(e(3)));
        let p = &e(-1) + &(&e(2) * &FieldElem::i());
        let q = &e(-1) - &(&e(2) * &FieldElem::i());
        for c in [Component::V1, Component::V2] {
            let o = closed_orbit(c, &p, &q, true).unwrap();
            assert!(o.u[..2].iter().all(|x| x.is_zero()));
            assert_eq!(o.eta, Some(e(3)));
        }
        // T0 is singular there; only the closed form reaches the point.
        assert!(matches!(v2_family(&p, &q, true), Err(ConstructError::DegenerateNormalization)));
        let o = v1_family(&e(1), &e(1), true).unwrap().orbit;
        assert_eq!(o, CharCoords::from_ints([2, 2, 2, 2, 1, 1, 1, 1]).with_eta(o.eta.clone().unwrap()).orbit());
    }

    #[test]
    fn v0_samples() {
        for (a, b) in [(FieldElem::int(3), FieldElem::int(5)), (FieldElem::rat(1, 2), FieldElem::rat(-7, 3)), (FieldElem::int(1), FieldElem::int(2))] {
            for plus in [true, false] {
                let f = v0_family(&a, &b, plus).unwrap();
                assert!(f.rep.check_relations().is_ok());
                assert!(all_zero(&v0_identities(&f.orbit, &f.s)), "({a}, {b}) {plus}");
                assert!(classify_orbit(&f.orbit).unwrap().contains(Component::V0));
            }
        }
        assert!(v0_family(&FieldElem::int(2), &FieldElem::int(3), true).is_err());
    }
}
