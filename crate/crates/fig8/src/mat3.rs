//! Dense 2×2 and 3×3 matrices over a ring, the symmetric square, and the
//! intertwiner solver.
//!
//! ```
//! use fig8::mat3::{Mat3, Mat2, sym2};
//! use fig8::numtower::FieldElem;
//! let m = Mat2::from_ints([[2, 3], [1, 2]]);
//! let s = sym2(&m).unwrap();
//! assert_eq!(s.trace(), FieldElem::int(15)); // (tr m)² − 1
//! assert!(s.det().is_one());
//! ```

use crate::numtower::FieldElem;
use crate::poly::{MPoly, RatFunc};
use std::fmt;
use thiserror::Error;

pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

impl Ring for FieldElem {
    fn zero() -> Self {
        FieldElem::zero()
    }
    fn one() -> Self {
        FieldElem::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
}

impl Field for FieldElem {
    fn inv(&self) -> Option<Self> {
        FieldElem::inv(self)
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self).ok()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatError {
    #[error("matrix is singular")]
    Singular,
    #[error("sym2 requires determinant 1")]
    DetNotOne,
}

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<T, const N: usize> {
    pub m: [[T; N]; N],
}

pub type Mat3<T = FieldElem> = Mat<T, 3>;
pub type Mat2<T = FieldElem> = Mat<T, 2>;

impl<T: Ring, const N: usize> Mat<T, N> {
    pub fn from_fn(f: impl Fn(usize, usize) -> T) -> Self {
        Mat { m: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))) }
    }

    pub fn from_rows(m: [[T; N]; N]) -> Self {
        Mat { m }
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| T::zero())
    }

    pub fn scalar(c: &T) -> Self {
        Self::from_fn(|i, j| if i == j { c.clone() } else { T::zero() })
    }

    pub fn diag(d: [T; N]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { T::zero() })
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.m[i][j]
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| {
            let mut acc = T::zero();
            for k in 0..N {
                acc = acc.add(&self.m[i][k].mul(&o.m[k][j]));
            }
            acc
        })
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| self.m[i][j].add(&o.m[i][j]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| self.m[i][j].sub(&o.m[i][j]))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_fn(|i, j| self.m[i][j].mul(c))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.m[j][i].clone())
    }

    pub fn trace(&self) -> T {
        (0..N).fold(T::zero(), |acc, i| acc.add(&self.m[i][i]))
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Mat<U, N> {
        Mat::from_fn(|i, j| f(&self.m[i][j]))
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> Vec<Vec<T>> {
        (0..N)
            .filter(|&r| r != skip_r)
            .map(|r| (0..N).filter(|&c| c != skip_c).map(|c| self.m[r][c].clone()).collect())
            .collect()
    }

    pub fn det(&self) -> T {
        det_vec(&self.m.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    /// Classical adjugate, M·adj(M) = det(M)·Id.
    pub fn adj(&self) -> Self {
        if N == 1 {
            return Self::identity();
        }
        Self::from_fn(|i, j| {
            let d = det_vec(&self.minor(j, i));
            if (i + j) % 2 == 0 {
                d
            } else {
                d.neg()
            }
        })
    }
}

fn det_vec<T: Ring>(m: &[Vec<T>]) -> T {
    match m.len() {
        0 => T::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        n => {
            let mut acc = T::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<T>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, x)| x.clone()).collect()).collect();
                let t = m[0][c].mul(&det_vec(&sub));
                acc = if c % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc
        }
    }
}

impl<T: Field, const N: usize> Mat<T, N> {
    pub fn inv(&self) -> Result<Self, MatError> {
        let d = self.det().inv().ok_or(MatError::Singular)?;
        Ok(self.adj().scale(&d))
    }
}

impl<T: Ring> Mat3<T> {
    /// Coefficients [c0, c1, c2, c3] of t³ − tr(M)t² + tr(adj M)t − det M, low to high.
    pub fn charpoly(&self) -> [T; 4] {
        [self.det().neg(), self.adj().trace(), self.trace().neg(), T::one()]
    }

    /// p(M) for a polynomial given by coefficients low to high.
    pub fn eval_poly(&self, c: &[T]) -> Self {
        let mut acc = Self::zero();
        for k in c.iter().rev() {
            acc = acc.mul(self).add(&Self::scalar(k));
        }
        acc
    }

    /// Block sum of a 2×2 block and a 1×1 block.
    pub fn block(m2: &Mat2<T>, c: &T) -> Self {
        Self::from_fn(|i, j| match (i, j) {
            (2, 2) => c.clone(),
            (2, _) | (_, 2) => T::zero(),
            _ => m2.m[i][j].clone(),
        })
    }
}

impl Mat3<FieldElem> {
    pub fn from_ints(r: [[i64; 3]; 3]) -> Self {
        Self::from_fn(|i, j| FieldElem::int(r[i][j]))
    }
}

impl Mat2<FieldElem> {
    pub fn from_ints(r: [[i64; 2]; 2]) -> Self {
        Self::from_fn(|i, j| FieldElem::int(r[i][j]))
    }
}

/// Action on symmetric 2-tensors in the basis (e1², e1e2, e2²).
pub fn sym2<T: Ring>(m: &Mat2<T>) -> Result<Mat3<T>, MatError> {
    if m.det() != T::one() {
        return Err(MatError::DetNotOne);
    }
    Ok(sym2_unchecked(m))
}

/// Symmetric square without the determinant check (GL2 to GL3).
pub fn sym2_unchecked<T: Ring>(m: &Mat2<T>) -> Mat3<T> {
    let [[a, b], [c, d]] = &m.m;
    let two = T::one().add(&T::one());
    Mat::from_rows([
        [a.mul(a), a.mul(b).mul(&two), b.mul(b)],
        [a.mul(c), a.mul(d).add(&b.mul(c)), b.mul(d)],
        [c.mul(c), c.mul(d).mul(&two), d.mul(d)],
    ])
}

/// Basis of the right nullspace of a dense matrix (rows × cols).
pub fn nullspace<T: Field>(mut a: Vec<Vec<T>>, cols: usize) -> Vec<Vec<T>> {
    let rows = a.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().unwrap();
        for k in c..cols {
            a[r][k] = a[r][k].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in c..cols {
                    let t = f.mul(&a[r][k]);
                    a[i][k] = a[i][k].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); cols];
            v[f] = T::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = a[ri][f].neg();
            }
            v
        })
        .collect()
}

/// Basis of {T : T·A = A·B·T, T·B = B·A·B·T}.
pub fn solve_intertwiner<T: Field>(a: &Mat3<T>, b: &Mat3<T>) -> Vec<Mat3<T>> {
    let ab = a.mul(b);
    let bab = b.mul(&ab);
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(18);
    // (T·X − Y·T)_{ij} is linear in the entries t_{kl}, index 3k + l.
    for (x, y) in [(a, &ab), (b, &bab)] {
        for i in 0..3 {
            for j in 0..3 {
                let mut row = vec![T::zero(); 9];
                for k in 0..3 {
                    row[3 * i + k] = row[3 * i + k].add(&x.m[k][j]);
                    row[3 * k + j] = row[3 * k + j].sub(&y.m[i][k]);
                }
                rows.push(row);
            }
        }
    }
    nullspace(rows, 9).into_iter().map(|v| Mat::from_fn(|i, j| v[3 * i + j].clone())).collect()
}

impl<T: Ring + fmt::Display, const N: usize> fmt::Display for Mat<T, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.m.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn fe(n: i64) -> FieldElem {
        FieldElem::int(n)
    }

    #[test]
    fn charpoly_identity() {
        let c = Mat3::<FieldElem>::identity().charpoly();
        assert_eq!(c, [fe(-1), fe(3), fe(-3), fe(1)]);
    }

    #[test]
    fn charpoly_kl_symbolic() {
        let p = |s: &str| parse_poly(s, None).unwrap();
        let k = Mat3::from_rows([
            [p("0"), p("0"), p("1")],
            [p("x0"), p("1"), p("x1")],
            [p("-1"), p("0"), p("-1")],
        ]);
        let l = Mat3::from_rows([
            [p("1"), p("y0"), p("y1")],
            [p("0"), p("-1"), p("-1")],
            [p("0"), p("1"), p("0")],
        ]);
        let kl = k.mul(&l);
        let c = kl.charpoly();
        assert_eq!(c[2], p("-(x0*y0 + x1 - y1 - 1)"));
        assert_eq!(c[1], p("x0*y1 - x1*y1 - x0 - y0 + y1 - 1"));
        assert_eq!(c[0], p("-1"));
        assert!(kl.eval_poly(&c).is_zero());
        assert!(k.pow(3).sub(&Mat3::identity()).is_zero());
        assert!(l.pow(3).sub(&Mat3::identity()).is_zero());
    }

    #[test]
    fn sym2_examples() {
        assert_eq!(sym2(&Mat2::<FieldElem>::identity()).unwrap(), Mat3::identity());
        let m = FieldElem::rat(3, 2);
        let d = Mat2::diag([m.clone(), m.inv().unwrap()]);
        assert_eq!(sym2(&d).unwrap(), Mat3::diag([&m * &m, fe(1), (&m * &m).inv().unwrap()]));
        let u = Mat2::from_ints([[1, 1], [0, 1]]);
        assert_eq!(sym2(&u).unwrap().trace(), fe(3));
        assert_eq!(sym2(&Mat2::from_ints([[2, 0], [0, 1]])), Err(MatError::DetNotOne));
        let a = Mat2::from_ints([[2, 1], [1, 1]]);
        let b = Mat2::from_ints([[1, -1], [3, -2]]);
        assert_eq!(sym2(&a.mul(&b)).unwrap(), sym2(&a).unwrap().mul(&sym2(&b).unwrap()));
    }

    #[test]
    fn adjugate_and_inverse() {
        let m = Mat3::from_ints([[2, -1, 0], [1, 3, 5], [-4, 2, 7]]);
        assert_eq!(m.mul(&m.adj()), Mat3::scalar(&m.det()));
        assert_eq!(m.mul(&m.inv().unwrap()), Mat3::identity());
        let s = Mat3::from_ints([[1, 2, 3], [2, 4, 6], [0, 0, 1]]);
        assert_eq!(s.inv(), Err(MatError::Singular));
    }

    #[test]
    fn intertwiner_trivial() {
        let id = Mat3::<FieldElem>::identity();
        assert_eq!(solve_intertwiner(&id, &id).len(), 9);
        // commuting-free generic pair: only T = 0 unless equivariant
        let a = Mat3::from_ints([[1, 1, 0], [0, 1, 0], [0, 0, 1]]);
        let b = Mat3::from_ints([[2, 0, 0], [0, 3, 0], [0, 0, 5]]);
        for t in solve_intertwiner(&a, &b) {
            assert_eq!(t.mul(&a), a.mul(&b).mul(&t));
            assert_eq!(t.mul(&b), b.mul(&a).mul(&b).mul(&t));
        }
    }
}
