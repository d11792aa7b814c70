//! Exact scalars: rationals, the 12th cyclotomic field, and one quadratic layer above it.
//!
//! ```
//! use fig8::numtower::{parse_elem, FieldElem};
//! let x = parse_elem("i^2", None).unwrap();
//! assert_eq!(x, FieldElem::int(-1));
//! assert_eq!(parse_elem("w*w*w", None).unwrap(), FieldElem::one());
//! ```

mod cyclo;
mod elem;
mod parse;
mod quad;
pub mod rational;

pub use cyclo::Cyclo12;
pub use elem::FieldElem;
pub use quad::QuadExt;
pub use rational::Rational;

use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("symbol `s` at byte {pos} used without a declared square-root modulus")]
    SqrtWithoutModulus { pos: usize },
    #[error("modulus {0} is a perfect square; the extension would not be a field")]
    SquareModulus(String),
    #[error("cannot adjoin the square root of zero")]
    ZeroModulus,
    #[error("nested quadratic extensions are not supported")]
    Nested,
}

/// A square root of `d`: either a genuine quadratic extension or, when `d` is
/// already a square, the embedding `s ↦ root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SqrtCtx {
    Proper { d: Arc<Cyclo12> },
    Degenerate { d: Cyclo12, root: Cyclo12 },
}

impl SqrtCtx {
    pub fn is_degenerate(&self) -> bool {
        matches!(self, SqrtCtx::Degenerate { .. })
    }

    pub fn modulus(&self) -> &Cyclo12 {
        match self {
            SqrtCtx::Proper { d } => d,
            SqrtCtx::Degenerate { d, .. } => d,
        }
    }

    /// The chosen square root s.
    pub fn s(&self) -> FieldElem {
        match self {
            SqrtCtx::Proper { d } => FieldElem::from_quad(Cyclo12::zero(), Cyclo12::one(), d.clone()),
            SqrtCtx::Degenerate { root, .. } => FieldElem::from_cyclo(root.clone()),
        }
    }

    /// `+s` for `branch = true`, `−s` otherwise.
    pub fn branch(&self, plus: bool) -> FieldElem {
        if plus {
            self.s()
        } else {
            -self.s()
        }
    }

    pub fn arc(&self) -> Option<&Arc<Cyclo12>> {
        match self {
            SqrtCtx::Proper { d } => Some(d),
            SqrtCtx::Degenerate { .. } => None,
        }
    }
}

/// Adjoin √d. A square `d` yields the flagged degenerate context.
pub fn sqrt_adjoin(d: &Cyclo12) -> Result<SqrtCtx, NumError> {
    if d.is_zero() {
        return Err(NumError::ZeroModulus);
    }
    Ok(match d.sqrt() {
        Some(root) => SqrtCtx::Degenerate { d: d.clone(), root },
        None => SqrtCtx::Proper { d: Arc::new(d.clone()) },
    })
}

/// [`sqrt_adjoin`] for a field element; only the cyclotomic layer may be extended.
pub fn sqrt_adjoin_elem(d: &FieldElem) -> Result<SqrtCtx, NumError> {
    match d.to_cyclo() {
        Some(c) => sqrt_adjoin(&c),
        None => Err(NumError::Nested),
    }
}

/// Parse an element; `s` requires a non-square modulus `d`.
pub fn parse_elem(text: &str, d: Option<&Cyclo12>) -> Result<FieldElem, NumError> {
    match d {
        None => parse::parse(text, None),
        Some(d) => match sqrt_adjoin(d)? {
            SqrtCtx::Proper { d } => parse::parse(text, Some(&d)),
            SqrtCtx::Degenerate { .. } => Err(NumError::SquareModulus(d.to_string())),
        },
    }
}

/// Parse inside an existing proper context, sharing its modulus handle.
pub fn parse_elem_in(text: &str, ctx: Option<&SqrtCtx>) -> Result<FieldElem, NumError> {
    match ctx {
        None => parse::parse(text, None),
        Some(SqrtCtx::Proper { d }) => parse::parse(text, Some(d)),
        Some(SqrtCtx::Degenerate { d, .. }) => Err(NumError::SquareModulus(d.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtower::rational::rat;

    #[test]
    fn parse_examples() {
        assert!(parse_elem("0", None).unwrap().is_zero());
        assert_eq!(parse_elem("i^2", None).unwrap(), FieldElem::int(-1));
        assert_eq!(parse_elem("i*i", None).unwrap(), FieldElem::int(-1));
        let d7 = Cyclo12::from_i64(7);
        let x = parse_elem("1/2+1/2*s", Some(&d7)).unwrap();
        let sq = &x * &x;
        assert_eq!(sq.to_string(), "2+1/2*s");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_elem("s", None), Err(NumError::SqrtWithoutModulus { pos: 0 })));
        assert!(matches!(parse_elem("1+s", Some(&Cyclo12::from_i64(4))), Err(NumError::SquareModulus(_))));
        assert!(matches!(parse_elem("1 + ", None), Err(NumError::Syntax { .. })));
        assert!(matches!(parse_elem("2/0", None), Err(NumError::Syntax { .. })));
        assert!(matches!(parse_elem("x", None), Err(NumError::Syntax { pos: 0, .. })));
        assert!(matches!(parse_elem("3 4", None), Err(NumError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_elem("", None), Err(NumError::Syntax { .. })));
    }

    #[test]
    fn canonical_print_order() {
        let x = parse_elem("w*i*3 + 2*w - i + 5/3", None).unwrap();
        assert_eq!(x.to_string(), "5/3-i+2*w+3*w*i");
        let d = Cyclo12::from_i64(-7);
        let y = parse_elem("s*i - 1/2*s + 7", Some(&d)).unwrap();
        assert_eq!(y.to_string(), "7-1/2*s+i*s");
        assert_eq!(parse_elem(&y.to_string(), Some(&d)).unwrap(), y);
        assert_eq!(parse_elem("-w^2", None).unwrap().to_string(), "1+w");
    }

    #[test]
    fn sqrt_adjoin_examples() {
        let c4 = sqrt_adjoin(&Cyclo12::from_i64(4)).unwrap();
        assert!(c4.is_degenerate());
        assert_eq!(&c4.s() * &c4.s(), FieldElem::int(4));
        let c5 = sqrt_adjoin(&Cyclo12::from_i64(5)).unwrap();
        assert!(!c5.is_degenerate());
        assert_eq!(&c5.s() * &c5.s(), FieldElem::int(5));
        let c7 = sqrt_adjoin(&Cyclo12::from_i64(-7)).unwrap();
        assert!(!c7.is_degenerate());
        assert_eq!(sqrt_adjoin(&Cyclo12::zero()), Err(NumError::ZeroModulus));
        // −3 is a square in Q(ζ12)
        assert!(sqrt_adjoin(&Cyclo12::from_i64(-3)).unwrap().is_degenerate());
        assert!(sqrt_adjoin(&Cyclo12::from_rational(rat(-12, 49))).unwrap().is_degenerate());
    }
}
