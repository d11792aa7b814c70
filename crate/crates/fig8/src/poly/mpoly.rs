use super::vars::{Var, NVARS};
use super::PolyError;
use crate::numtower::FieldElem;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Exps = [u16; NVARS];

/// Sparse polynomial; keys are exponent vectors, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Exps, FieldElem>,
}

/// Assignment of values to variables.
#[derive(Clone, Debug, Default)]
pub struct Point {
    vals: [Option<FieldElem>; NVARS],
}

impl Point {
    pub fn new() -> Self {
        Point::default()
    }

    pub fn with(mut self, v: Var, x: FieldElem) -> Self {
        self.vals[v.index()] = Some(x);
        self
    }

    pub fn set(&mut self, v: Var, x: FieldElem) {
        self.vals[v.index()] = Some(x);
    }

    pub fn get(&self, v: Var) -> Option<&FieldElem> {
        self.vals[v.index()].as_ref()
    }

    pub fn from_pairs(pairs: &[(Var, FieldElem)]) -> Self {
        let mut p = Point::new();
        for (v, x) in pairs {
            p.set(*v, x.clone());
        }
        p
    }
}

fn zero_exps() -> Exps {
    [0; NVARS]
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(FieldElem::one())
    }

    pub fn constant(c: FieldElem) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(zero_exps(), c);
        }
        MPoly { terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(FieldElem::int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(FieldElem::one(), &[(v, 1)])
    }

    pub fn monomial(c: FieldElem, pows: &[(Var, u16)]) -> Self {
        let mut e = zero_exps();
        for (v, k) in pows {
            e[v.index()] += k;
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Exps, FieldElem)>) -> Self {
        let mut terms: BTreeMap<Exps, FieldElem> = BTreeMap::new();
        for (e, c) in it {
            let slot = terms.entry(e).or_insert_with(FieldElem::zero);
            *slot += &c;
        }
        terms.retain(|_, c| !c.is_zero());
        MPoly { terms }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &FieldElem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<FieldElem> {
        match self.terms.len() {
            0 => Some(FieldElem::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                if e.iter().all(|&k| k == 0) {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Lex-leading term.
    pub fn leading(&self) -> Option<(&Exps, &FieldElem)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().map(|&k| k as u32).sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    pub fn vars(&self) -> Vec<Var> {
        (0..NVARS).map(|i| Var(i as u8)).filter(|v| self.degree_in(*v) > 0).collect()
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Product with a term budget on the result size.
    pub fn mul_budget(&self, o: &MPoly, budget: usize) -> Result<MPoly, PolyError> {
        let (a, b) = if self.terms.len() <= o.terms.len() { (self, o) } else { (o, self) };
        let mut acc: HashMap<Exps, FieldElem> = HashMap::with_capacity(a.terms.len() * b.terms.len() / 2 + 1);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let mut e = *ea;
                for k in 0..NVARS {
                    e[k] += eb[k];
                }
                let p = ca * cb;
                match acc.get_mut(&e) {
                    Some(slot) => *slot += &p,
                    None => {
                        acc.insert(e, p);
                        if acc.len() > budget {
                            return Err(PolyError::Budget(budget));
                        }
                    }
                }
            }
        }
        Ok(MPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, pt: &Point) -> Result<FieldElem, PolyError> {
        let mut powers: Vec<Vec<FieldElem>> = vec![Vec::new(); NVARS];
        for v in 0..NVARS {
            let d = self.degree_in(Var(v as u8));
            if d == 0 {
                continue;
            }
            let x = pt.vals[v].as_ref().ok_or(PolyError::Unbound(Var(v as u8).name()))?;
            let mut pw = vec![FieldElem::one()];
            for k in 1..=d as usize {
                let nx = &pw[k - 1] * x;
                pw.push(nx);
            }
            powers[v] = pw;
        }
        let mut acc = FieldElem::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for v in 0..NVARS {
                if e[v] > 0 {
                    t = &t * &powers[v][e[v] as usize];
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Evaluate the variables bound in `pt`, keeping the rest symbolic.
    pub fn partial_eval(&self, pt: &Point) -> MPoly {
        let mut out: Vec<(Exps, FieldElem)> = Vec::with_capacity(self.terms.len());
        let mut cache: HashMap<(usize, u16), FieldElem> = HashMap::new();
        for (e, c) in &self.terms {
            let mut c = c.clone();
            let mut ne = *e;
            for v in 0..NVARS {
                if e[v] > 0 {
                    if let Some(x) = &pt.vals[v] {
                        let p = cache.entry((v, e[v])).or_insert_with(|| x.pow(e[v] as u32)).clone();
                        c = &c * &p;
                        ne[v] = 0;
                    }
                }
            }
            out.push((ne, c));
        }
        MPoly::from_terms(out)
    }

    /// Coefficients in `v`: `self = Σ_k coeffs[k]·v^k`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MPoly> {
        let d = self.degree_in(v) as usize;
        let mut out: Vec<Vec<(Exps, FieldElem)>> = vec![Vec::new(); d + 1];
        for (e, c) in &self.terms {
            let k = e[v.index()] as usize;
            let mut ne = *e;
            ne[v.index()] = 0;
            out[k].push((ne, c.clone()));
        }
        out.into_iter().map(MPoly::from_terms).collect()
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[MPoly]) -> Self {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (e, x) in &c.terms {
                let mut ne = *e;
                ne[v.index()] += k as u16;
                terms.push((ne, x.clone()));
            }
        }
        MPoly::from_terms(terms)
    }

    /// Substitute a polynomial for one variable.
    pub fn subst(&self, v: Var, q: &MPoly) -> MPoly {
        let cs = self.coeffs_in(v);
        let mut acc = MPoly::zero();
        for c in cs.iter().rev() {
            acc = &(&acc * q) + c;
        }
        acc
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn subst_many(&self, images: &[(Var, MPoly)]) -> MPoly {
        let mut cache: HashMap<(Var, u16), MPoly> = HashMap::new();
        let mut acc = MPoly::zero();
        for (e, c) in &self.terms {
            let mut ne = *e;
            let mut t = MPoly::one();
            for (v, q) in images {
                let k = e[v.index()];
                if k > 0 {
                    ne[v.index()] = 0;
                    let p = cache.entry((*v, k)).or_insert_with(|| q.pow(k as u32)).clone();
                    t = &t * &p;
                }
            }
            let mono = MPoly { terms: [(ne, c.clone())].into_iter().collect() };
            acc = &acc + &(&t * &mono);
        }
        acc
    }

    /// Rename variables (a permutation or injection of the variables present).
    pub fn rename(&self, map: &[(Var, Var)]) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(e, c)| {
            let mut ne = *e;
            for (from, _) in map {
                ne[from.index()] = 0;
            }
            for (from, to) in map {
                ne[to.index()] += e[from.index()];
            }
            (ne, c.clone())
        }))
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        let (le, lc) = d.leading()?;
        let (le, lc_inv) = (*le, lc.inv()?);
        let mut rem = self.clone();
        let mut quo: Vec<(Exps, FieldElem)> = Vec::new();
        while let Some((e, c)) = rem.leading() {
            let mut qe = zero_exps();
            for k in 0..NVARS {
                if e[k] < le[k] {
                    return None;
                }
                qe[k] = e[k] - le[k];
            }
            let qc = c * &lc_inv;
            let t = MPoly { terms: [(qe, qc.clone())].into_iter().collect() };
            rem = &rem - &(&t * d);
            quo.push((qe, qc));
        }
        Some(MPoly::from_terms(quo))
    }

    /// Remainder modulo `m`, viewed as a polynomial in `v` whose leading
    /// coefficient is a nonzero constant.
    pub fn rem_in(&self, v: Var, m: &MPoly) -> Result<MPoly, PolyError> {
        let mc = m.coeffs_in(v);
        let dm = mc.len() - 1;
        let lc = mc[dm].as_constant().filter(|c| !c.is_zero()).ok_or(PolyError::NotMonic(v.name()))?;
        let lc_inv = lc.inv().unwrap();
        let mut cs = self.coeffs_in(v);
        while cs.len() > dm {
            let top = cs.pop().unwrap().scale(&lc_inv);
            let shift = cs.len() - dm;
            for (j, mj) in mc.iter().enumerate().take(dm) {
                cs[shift + j] = &cs[shift + j] - &(&top * mj);
            }
        }
        Ok(MPoly::from_coeffs_in(v, &cs))
    }

    pub fn derivative(&self, v: Var) -> MPoly {
        MPoly::from_terms(self.terms.iter().filter(|(e, _)| e[v.index()] > 0).map(|(e, c)| {
            let mut ne = *e;
            let k = ne[v.index()];
            ne[v.index()] -= 1;
            (ne, c * &FieldElem::int(k as i64))
        }))
    }

    /// Map coefficients (e.g. Galois action on constants).
    pub fn map_coeffs(&self, f: impl Fn(&FieldElem) -> FieldElem) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &o.terms {
            match terms.get_mut(e) {
                Some(x) => {
                    *x += c;
                    if x.is_zero() {
                        terms.remove(e);
                    }
                }
                None => {
                    terms.insert(*e, c.clone());
                }
            }
        }
        MPoly { terms }
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        self + &(-o)
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        self.mul_budget(o, usize::MAX).unwrap()
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, o: MPoly) -> MPoly {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, o: &MPoly) -> MPoly {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $m(self, o: MPoly) -> MPoly {
                self.$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl From<FieldElem> for MPoly {
    fn from(c: FieldElem) -> Self {
        MPoly::constant(c)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

impl From<i64> for MPoly {
    fn from(n: i64) -> Self {
        MPoly::int(n)
    }
}

fn monomial_string(e: &Exps) -> String {
    let mut parts = Vec::new();
    for (k, &p) in e.iter().enumerate() {
        match p {
            0 => {}
            1 => parts.push(Var(k as u8).name().to_string()),
            _ => parts.push(format!("{}^{}", Var(k as u8).name(), p)),
        }
    }
    parts.join("*")
}

/// Poly text format, terms in descending lex order; each coefficient is
/// split into its basis terms so the output stays inside the element grammar.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut pieces: Vec<String> = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono = monomial_string(e);
            let cs = c.to_string();
            for t in split_elem_terms(&cs) {
                pieces.push(if mono.is_empty() {
                    t
                } else if t == "1" {
                    mono.clone()
                } else if t == "-1" {
                    format!("-{mono}")
                } else {
                    format!("{t}*{mono}")
                });
            }
        }
        let mut s = String::new();
        for (k, p) in pieces.iter().enumerate() {
            if k > 0 {
                if let Some(rest) = p.strip_prefix('-') {
                    s.push_str(" - ");
                    s.push_str(rest);
                    continue;
                }
                s.push_str(" + ");
            }
            s.push_str(p);
        }
        write!(f, "{s}")
    }
}

/// Split a canonical element string into signed terms.
fn split_elem_terms(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for (k, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && k > 0 && !cur.ends_with('/') {
            out.push(std::mem::take(&mut cur));
            if ch == '-' {
                cur.push('-');
            }
        } else {
            cur.push(ch);
        }
    }
    out.push(cur);
    out
}
