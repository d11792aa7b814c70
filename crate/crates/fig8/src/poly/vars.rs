//! The global variable table. Order fixes lexicographic leading terms.

use std::fmt;

pub const NVARS: usize = 23;

pub const NAMES: [&str; NVARS] = [
    "alpha", "alphab", "beta", "betab", "y", "yb", "z", "zb", "eta", "v", "W", "x1", "nu", "nub", "zeta", "x0",
    "y0", "y1", "x2", "lambda", "t", "r", "u",
];

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(pub u8);

impl Var {
    pub fn name(self) -> &'static str {
        NAMES[self.0 as usize]
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn by_name(name: &str) -> Option<Var> {
        NAMES.iter().position(|n| *n == name).map(|i| Var(i as u8))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub const ALPHA: Var = Var(0);
pub const ALPHAB: Var = Var(1);
pub const BETA: Var = Var(2);
pub const BETAB: Var = Var(3);
pub const Y: Var = Var(4);
pub const YB: Var = Var(5);
pub const Z: Var = Var(6);
pub const ZB: Var = Var(7);
pub const ETA: Var = Var(8);
pub const V: Var = Var(9);
/// GL2 determinant parameter and the common-root variable of the XPR cubics.
pub const W: Var = Var(10);
pub const X1: Var = Var(11);
pub const NU: Var = Var(12);
pub const NUB: Var = Var(13);
pub const ZETA: Var = Var(14);
pub const X0: Var = Var(15);
pub const Y0: Var = Var(16);
pub const Y1: Var = Var(17);
pub const X2: Var = Var(18);
pub const LAMBDA: Var = Var(19);
pub const T: Var = Var(20);
/// Riley diagonal entry.
pub const R: Var = Var(21);
/// Riley off-diagonal entry.
pub const U: Var = Var(22);

/// The eight ambient coordinates in tuple order (y, ȳ, z, z̄, α, ᾱ, β, β̄).
pub const AMBIENT: [Var; 8] = [Y, YB, Z, ZB, ALPHA, ALPHAB, BETA, BETAB];
