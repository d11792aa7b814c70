//! Sparse multivariate polynomials, formal fractions, square-root extensions of
//! them, univariate gcd and Sylvester resultants.
//!
//! ```
//! use fig8::poly::{parse_poly, vars, Point};
//! use fig8::numtower::FieldElem;
//! let p = parse_poly("alpha^2*beta^2 - 6*alpha*beta - 4*alpha - 4*beta - 3", None).unwrap();
//! let pt = Point::new().with(vars::ALPHA, FieldElem::int(3)).with(vars::BETA, FieldElem::int(3));
//! assert!(p.eval(&pt).unwrap().is_zero());
//! ```

mod mpoly;
mod ratfunc;
mod sqrtpoly;
mod text;
mod upoly;
pub mod vars;

pub use mpoly::{Exps, MPoly, Point};
pub use ratfunc::RatFunc;
pub use sqrtpoly::{SqrtPoly, ZeroTest};
pub use text::{parse_catalog, parse_poly};
pub use upoly::{gcd_univar, UPoly};
pub use vars::Var;

use crate::numtower::NumError;
use thiserror::Error;

/// Default cap on intermediate monomial counts during symbolic expansion.
pub const DEFAULT_TERM_BUDGET: usize = 2_000_000;

/// The expansion budget, overridable through `FIG8_TERM_BUDGET`.
pub fn term_budget() -> usize {
    std::env::var("FIG8_TERM_BUDGET").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_TERM_BUDGET)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("term budget of {0} monomials exceeded")]
    Budget(usize),
    #[error("variable `{0}` is not bound")]
    Unbound(&'static str),
    #[error("denominator vanishes at this point")]
    DenominatorVanishes,
    #[error("division by zero")]
    DivByZero,
    #[error("leading coefficient in `{0}` is not a nonzero constant")]
    NotMonic(&'static str),
    #[error("polynomial has degree 0 in `{0}`")]
    Degree0(&'static str),
    #[error("polynomial involves variables other than `{0}`")]
    NotUnivariate(&'static str),
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("supplied root does not square to the discriminant")]
    BadRoot,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVar(String),
    #[error("line {0}: {1}")]
    Line(usize, Box<PolyError>),
    #[error(transparent)]
    Num(#[from] NumError),
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_det(mut m: Vec<Vec<MPoly>>) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::one();
    }
    let mut sign = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return MPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Sylvester resultant of `p` and `q` eliminating `v`.
pub fn resultant_in(p: &MPoly, q: &MPoly, v: Var) -> Result<MPoly, PolyError> {
    let (dp, dq) = (p.degree_in(v) as usize, q.degree_in(v) as usize);
    if dp == 0 || dq == 0 {
        return Err(PolyError::Degree0(v.name()));
    }
    let (pc, qc) = (p.coeffs_in(v), q.coeffs_in(v));
    let n = dp + dq;
    let mut m = vec![vec![MPoly::zero(); n]; n];
    for r in 0..dq {
        for (k, c) in pc.iter().enumerate() {
            m[r][r + dp - k] = c.clone();
        }
    }
    for r in 0..dp {
        for (k, c) in qc.iter().enumerate() {
            m[dq + r][r + dq - k] = c.clone();
        }
    }
    Ok(bareiss_det(m))
}

#[cfg(test)]
mod tests {
    use super::vars::*;
    use super::*;
    use crate::numtower::FieldElem;

    fn p(s: &str) -> MPoly {
        parse_poly(s, None).unwrap()
    }

    #[test]
    fn parse_print_roundtrip() {
        for s in ["alpha^2*beta - 3/2*y*zb + i*z - w*eta + 7", "0", "-x0*y1 + (1+i)*nu^3"] {
            let a = p(s);
            let b = p(&a.to_string());
            assert_eq!(a, b, "{s} -> {a}");
        }
        assert_eq!(p("(alpha+1)^2").to_string(), "alpha^2 + 2*alpha + 1");
        assert!(matches!(parse_poly("q + 1", None), Err(PolyError::UnknownVar(_))));
    }

    #[test]
    fn eval_examples() {
        let hyp = p("zeta^2 - (nu*nub - 2)*zeta + nu^3 + nub^3 - 5*nu*nub + 5");
        let pt = Point::new().with(NU, 2.into()).with(NUB, 2.into()).with(ZETA, 1.into());
        assert!(hyp.eval(&pt).unwrap().is_zero());
        let disc = p("alpha^2*beta^2 - 6*alpha*beta - 4*alpha - 4*beta - 3");
        let pt = Point::new().with(ALPHA, 3.into()).with(BETA, 3.into());
        assert!(disc.eval(&pt).unwrap().is_zero());
        let q = p("y*z + alpha^2");
        let zero = Point::new().with(Y, 0.into()).with(Z, 0.into()).with(ALPHA, 0.into());
        assert!(q.eval(&zero).unwrap().is_zero());
        assert_eq!(q.eval(&Point::new()), Err(PolyError::Unbound("alpha")));
    }

    #[test]
    fn resultant_examples() {
        assert!(resultant_in(&p("W - 2"), &p("W^2 - 4"), W).unwrap().is_zero());
        assert_eq!(resultant_in(&p("W - 2"), &p("W^2 + 4"), W).unwrap(), MPoly::int(8));
        assert!(matches!(resultant_in(&p("alpha"), &p("W"), W), Err(PolyError::Degree0(_))));
        // generic: Res_x(x² + a x + b, x − c) = c² + a c + b
        let r = resultant_in(&p("t^2 + alpha*t + beta"), &p("t - y"), T).unwrap();
        assert_eq!(r, p("y^2 + alpha*y + beta"));
    }

    #[test]
    fn xpr_cubic_resultant_vanishes() {
        let c1 = p("W^3 - yb*W^2 + y*W - 1");
        let c2 = p("alpha*W^3 - z*W^2 + 1");
        let r = resultant_in(&c1, &c2, W).unwrap();
        // Φ(11, 22, 3) = (243/22, 45/2, 42593/484, 5326/11, 4, 4, 5/2, 5/2)
        let pt = Point::new()
            .with(Y, FieldElem::rat(243, 22))
            .with(YB, FieldElem::rat(45, 2))
            .with(Z, FieldElem::rat(42593, 484))
            .with(ALPHA, 4.into());
        assert!(r.eval(&pt).unwrap().is_zero());
    }

    #[test]
    fn gcd_examples() {
        let g = gcd_univar(&UPoly::from_ints(&[-1, 0, 1]), &UPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(g, UPoly::from_ints(&[-1, 1]));
        let g = gcd_univar(&UPoly::from_ints(&[-1, 0, 0, 1]), &UPoly::from_ints(&[1, 1, 1])).unwrap();
        assert_eq!(g, UPoly::from_ints(&[1, 1, 1]));
        assert_eq!(gcd_univar(&UPoly::zero(), &UPoly::zero()), Err(PolyError::BothZero));
    }

    #[test]
    fn exact_division_and_remainder() {
        let a = p("(alpha - beta)*(y^2 + 3*z - 1)");
        assert_eq!(a.div_exact(&p("alpha - beta")).unwrap(), p("y^2 + 3*z - 1"));
        assert!(p("alpha + 1").div_exact(&p("alpha - 1")).is_none());
        let r = p("zeta^3").rem_in(ZETA, &p("zeta^2 - nu*zeta + 1")).unwrap();
        assert_eq!(r, p("(nu^2 - 1)*zeta - nu"));
    }

    #[test]
    fn sqrt_poly_zero_test() {
        let delta = p("alpha^2 + 1");
        let s = SqrtPoly::s(&delta);
        let e = s.mul(&s).sub(&SqrtPoly::base(RatFunc::poly(delta.clone()), &delta));
        assert_eq!(e.expand_is_zero(DEFAULT_TERM_BUDGET), ZeroTest::Zero);
        let xtr = p("y*yb - (alpha+1)*(beta+1)");
        let pt = Point::new().with(Y, 3.into()).with(YB, 3.into()).with(ALPHA, 3.into()).with(BETA, 3.into());
        assert_eq!(xtr.eval(&pt).unwrap(), FieldElem::int(-7));
    }

    #[test]
    fn compose_rational() {
        // x0 ↦ 1/(zeta-1), y0 ↦ nu/(zeta-1): x0*y0 + x0 = (nu + zeta - 1)/(zeta-1)^2
        let f = p("x0*y0 + x0");
        let a = RatFunc::new(MPoly::one(), p("zeta - 1")).unwrap();
        let b = RatFunc::new(p("nu"), p("zeta - 1")).unwrap();
        let r = f.compose(&[(X0, a), (Y0, b)]);
        let expect = RatFunc::new(p("nu + zeta - 1"), p("(zeta-1)^2")).unwrap();
        assert_eq!(r, expect);
    }
}
