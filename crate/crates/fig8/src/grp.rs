//! Words in the two presentations of the figure-eight knot group, the
//! triangle group D(3,3,4), the Dehn-filling morphism, the automorphisms
//! f and h, and matrix representations.
//!
//! ```
//! use fig8::grp::{Word, Alphabet};
//! let b: Word = "b".parse().unwrap();
//! assert_eq!(b.convert(Alphabet::ST).unwrap().to_string(), "T.S'");
//! assert_eq!(b.dehn_phi().to_string(), "k.l");
//! ```

use crate::mat3::{Mat, MatError, Ring};
use crate::numtower::FieldElem;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    /// Wirtinger generators S, T.
    ST,
    /// Fibered generators t, a, b.
    TAB,
    /// Triangle group generators k, l.
    KL,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    S,
    T,
    Tt,
    A,
    B,
    K,
    L,
}

impl Gen {
    pub fn alphabet(self) -> Alphabet {
        match self {
            Gen::S | Gen::T => Alphabet::ST,
            Gen::Tt | Gen::A | Gen::B => Alphabet::TAB,
            Gen::K | Gen::L => Alphabet::KL,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Gen::S => 'S',
            Gen::T => 'T',
            Gen::Tt => 't',
            Gen::A => 'a',
            Gen::B => 'b',
            Gen::K => 'k',
            Gen::L => 'l',
        }
    }

    pub fn from_symbol(c: char) -> Option<Gen> {
        Some(match c {
            'S' => Gen::S,
            'T' => Gen::T,
            't' => Gen::Tt,
            'a' => Gen::A,
            'b' => Gen::B,
            'k' => Gen::K,
            'l' => Gen::L,
            _ => return None,
        })
    }

    pub fn of(alphabet: Alphabet) -> &'static [Gen] {
        match alphabet {
            Alphabet::ST => &[Gen::S, Gen::T],
            Alphabet::TAB => &[Gen::Tt, Gen::A, Gen::B],
            Alphabet::KL => &[Gen::K, Gen::L],
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrpError {
    #[error("bad word syntax at `{0}`")]
    Syntax(String),
    #[error("word mixes alphabets")]
    MixedAlphabet,
    #[error("conversion involving the KL alphabet is not defined")]
    KlConversion,
    #[error("relation {0} fails")]
    Relation(String),
    #[error("generator {0} has no image")]
    MissingGenerator(char),
    #[error("generator {0} is not invertible")]
    Singular(char),
}

/// A letter is a generator with exponent ±1.
pub type Letter = (Gen, bool);

/// Freely reduced word; `bool` marks an inverse letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(alphabet: Alphabet) -> Self {
        Word { alphabet, letters: Vec::new() }
    }

    pub fn gen(g: Gen) -> Self {
        Word { alphabet: g.alphabet(), letters: vec![(g, false)] }
    }

    pub fn from_letters(alphabet: Alphabet, letters: impl IntoIterator<Item = Letter>) -> Result<Self, GrpError> {
        let mut w = Word::identity(alphabet);
        for l in letters {
            if l.0.alphabet() != alphabet {
                return Err(GrpError::MixedAlphabet);
            }
            w.push(l);
        }
        Ok(w)
    }

    fn push(&mut self, l: Letter) {
        if self.letters.last().is_some_and(|&(g, inv)| g == l.0 && inv != l.1) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, o: &Word) -> Word {
        assert_eq!(self.alphabet, o.alphabet, "product of words in different alphabets");
        let mut w = self.clone();
        for &l in &o.letters {
            w.push(l);
        }
        w
    }

    pub fn inv(&self) -> Word {
        Word { alphabet: self.alphabet, letters: self.letters.iter().rev().map(|&(g, i)| (g, !i)).collect() }
    }

    pub fn pow(&self, n: i32) -> Word {
        let base = if n < 0 { self.inv() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Word::identity(self.alphabet), |acc, _| acc.mul(&base))
    }

    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.mul(v).mul(&u.inv()).mul(&v.inv())
    }

    /// Replace each generator by a word in `target`.
    pub fn substitute(&self, target: Alphabet, image: impl Fn(Gen) -> Word) -> Word {
        let mut out = Word::identity(target);
        for &(g, inv) in &self.letters {
            let w = image(g);
            out = out.mul(&if inv { w.inv() } else { w });
        }
        out
    }

    /// Rewrite between the Wirtinger and fibered presentations.
    pub fn convert(&self, target: Alphabet) -> Result<Word, GrpError> {
        if self.alphabet == Alphabet::KL || target == Alphabet::KL {
            return Err(GrpError::KlConversion);
        }
        if self.alphabet == target {
            return Ok(self.clone());
        }
        Ok(self.substitute(target, |g| match g {
            Gen::Tt => w("S"),
            Gen::A => w("T'.S.T.S'"),
            Gen::B => w("T.S'"),
            Gen::S => w("t"),
            // T = b·S, so Wirtinger → fibered → Wirtinger is the identity on words.
            Gen::T => w("b.t"),
            _ => unreachable!(),
        }))
    }

    /// Image under φ: S ↦ klk, T ↦ klklk.
    pub fn dehn_phi(&self) -> Word {
        let st = self.convert(Alphabet::ST).unwrap_or_else(|_| self.clone());
        st.substitute(Alphabet::KL, |g| match g {
            Gen::S => w("k.l.k"),
            Gen::T => w("k.l.k.l.k"),
            Gen::K | Gen::L => Word::gen(g),
            _ => unreachable!(),
        })
    }

    /// Image under an automorphism, returned in the input alphabet.
    pub fn apply(&self, g: Automorphism) -> Result<Word, GrpError> {
        let st = self.convert(Alphabet::ST)?;
        let out = st.substitute(Alphabet::ST, |x| match (g, x) {
            (Automorphism::F, Gen::S) => w("T'"),
            (Automorphism::F, Gen::T) => w("S'"),
            (Automorphism::H, Gen::S) => w("S.T'.S'"),
            (Automorphism::H, Gen::T) => w("T.S'.T'"),
            _ => unreachable!(),
        });
        out.convert(self.alphabet)
    }

    /// Equality in Γ witnessed by free equality of the Wirtinger rewrites.
    pub fn st_equal(&self, o: &Word) -> bool {
        match (self.convert(Alphabet::ST), o.convert(Alphabet::ST)) {
            (Ok(a), Ok(b)) => a == b,
            _ => self == o,
        }
    }
}

/// Parse a word literal; panics on malformed input, for internal constants.
fn w(s: &str) -> Word {
    s.parse().expect("internal word literal")
}

impl FromStr for Word {
    type Err = GrpError;
    fn from_str(s: &str) -> Result<Self, GrpError> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Err(GrpError::Syntax("empty word; name the alphabet with Word::identity".into()));
        }
        let mut letters = Vec::new();
        for tok in s.split('.') {
            let tok = tok.trim();
            let mut cs = tok.chars();
            let g = cs.next().and_then(Gen::from_symbol).ok_or_else(|| GrpError::Syntax(tok.into()))?;
            let inv = match cs.as_str() {
                "" => false,
                "'" => true,
                _ => return Err(GrpError::Syntax(tok.into())),
            };
            letters.push((g, inv));
        }
        let alphabet = letters[0].0.alphabet();
        Word::from_letters(alphabet, letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, (g, inv)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, ".")?;
            }
            write!(f, "{}{}", g.symbol(), if *inv { "'" } else { "" })?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Automorphism {
    F,
    H,
}

/// Defining relations of an alphabet as pairs (lhs, rhs).
pub fn relations(alphabet: Alphabet) -> Vec<(&'static str, Word, Word)> {
    match alphabet {
        Alphabet::ST => vec![("S.T'.S'.T.S = T.S.T'.S'.T", w("S.T'.S'.T.S"), w("T.S.T'.S'.T"))],
        Alphabet::TAB => vec![
            ("t.a.t' = a.b", w("t.a.t'"), w("a.b")),
            ("t.b.t' = b.a.b", w("t.b.t'"), w("b.a.b")),
        ],
        Alphabet::KL => {
            let id = Word::identity(Alphabet::KL);
            vec![
                ("k^3 = 1", w("k.k.k"), id.clone()),
                ("l^3 = 1", w("l.l.l"), id.clone()),
                ("(k.l)^4 = 1", w("k.l").pow(4), id),
            ]
        }
    }
}

/// Generator images together with their inverses.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<T: Ring = FieldElem, const N: usize = 3> {
    alphabet: Alphabet,
    images: BTreeMap<Gen, (Mat<T, N>, Mat<T, N>)>,
}

pub type Rep2 = Representation<FieldElem, 2>;

impl<const N: usize> Representation<FieldElem, N> {
    pub fn new(alphabet: Alphabet, gens: &[(Gen, Mat<FieldElem, N>)]) -> Result<Self, GrpError> {
        let mut images = BTreeMap::new();
        for g in Gen::of(alphabet) {
            let m = gens.iter().find(|(h, _)| h == g).map(|(_, m)| m.clone()).ok_or(GrpError::MissingGenerator(g.symbol()))?;
            let mi = m.inv().map_err(|_: MatError| GrpError::Singular(g.symbol()))?;
            images.insert(*g, (m, mi));
        }
        Ok(Representation { alphabet, images })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn image(&self, g: Gen) -> &Mat<FieldElem, N> {
        &self.images[&g].0
    }

    /// Matrix of a word, rewriting between ST and TAB as needed.
    pub fn eval(&self, word: &Word) -> Result<Mat<FieldElem, N>, GrpError> {
        let word = if word.alphabet() == self.alphabet { word.clone() } else { word.convert(self.alphabet)? };
        let mut acc = Mat::identity();
        for &(g, inv) in word.letters() {
            let (m, mi) = &self.images[&g];
            acc = acc.mul(if inv { mi } else { m });
        }
        Ok(acc)
    }

    pub fn trace(&self, word: &Word) -> Result<FieldElem, GrpError> {
        Ok(self.eval(word)?.trace())
    }

    pub fn check_relations(&self) -> Result<(), GrpError> {
        for (name, l, r) in relations(self.alphabet) {
            if self.eval(&l)? != self.eval(&r)? {
                return Err(GrpError::Relation(name.into()));
            }
        }
        Ok(())
    }

    /// Re-express on another presentation of Γ.
    pub fn to_alphabet(&self, target: Alphabet) -> Result<Self, GrpError> {
        let gens: Vec<_> = Gen::of(target).iter().map(|&g| Ok((g, self.eval(&Word::gen(g))?))).collect::<Result<_, GrpError>>()?;
        Representation::new(target, &gens)
    }

    /// ρ∘ψ where ψ sends each generator of `target` to a word evaluated by `self`.
    pub fn pullback(&self, target: Alphabet, image: impl Fn(Gen) -> Word) -> Result<Self, GrpError> {
        let gens: Vec<_> = Gen::of(target).iter().map(|&g| Ok((g, self.eval(&image(g))?))).collect::<Result<_, GrpError>>()?;
        Representation::new(target, &gens)
    }

    /// ρ∘g for an automorphism g of Γ, on the Wirtinger generators.
    pub fn twist(&self, g: Automorphism) -> Result<Self, GrpError> {
        self.pullback(Alphabet::ST, |x| Word::gen(x).apply(g).expect("ST word"))
    }

    /// Pull a triangle group representation back along φ.
    pub fn dehn(&self) -> Result<Self, GrpError> {
        if self.alphabet != Alphabet::KL {
            return Err(GrpError::KlConversion);
        }
        self.pullback(Alphabet::ST, |x| Word::gen(x).dehn_phi())
    }

    pub fn map_generators(&self, f: impl Fn(Gen, &Mat<FieldElem, N>) -> Mat<FieldElem, N>) -> Result<Self, GrpError> {
        let gens: Vec<_> = self.images.iter().map(|(g, (m, _))| (*g, f(*g, m))).collect();
        Representation::new(self.alphabet, &gens)
    }

    pub fn generators(&self) -> impl Iterator<Item = (Gen, &Mat<FieldElem, N>)> {
        self.images.iter().map(|(g, (m, _))| (*g, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat3::Mat3;

    #[test]
    fn conversions() {
        assert_eq!(w("t").convert(Alphabet::ST).unwrap(), w("S"));
        assert_eq!(w("a").convert(Alphabet::ST).unwrap(), w("T'.S.T.S'"));
        assert_eq!(w("T").convert(Alphabet::TAB).unwrap(), w("b.t"));
        for g in ["S", "T", "S.T'.S'.T.S", "t", "b"] {
            let x = w(g);
            let other = if x.alphabet() == Alphabet::ST { Alphabet::TAB } else { Alphabet::ST };
            assert_eq!(x.convert(other).unwrap().convert(x.alphabet()).unwrap(), x);
        }
        // a comes back as t'.b'.t.b, which equals a in Γ
        assert!(w("a").convert(Alphabet::ST).unwrap().convert(Alphabet::TAB).unwrap().st_equal(&w("a")));
        assert_eq!(w("k").convert(Alphabet::ST), Err(GrpError::KlConversion));
    }

    #[test]
    fn free_reduction_and_parse() {
        assert!(w("S.S'").is_empty());
        assert_eq!(w("T.S.S'.T'.S").to_string(), "S");
        assert!("S.x".parse::<Word>().is_err());
        assert_eq!("S.t".parse::<Word>(), Err(GrpError::MixedAlphabet));
    }

    #[test]
    fn dehn_images() {
        assert_eq!(w("b").dehn_phi(), w("k.l"));
        assert_eq!(w("t").dehn_phi(), w("k.l.k"));
        assert_eq!(w("a").dehn_phi(), w("k'.l'.k.l"));
    }

    #[test]
    fn automorphisms() {
        let a = w("a");
        assert!(a.apply(Automorphism::F).unwrap().st_equal(&a.inv()));
        assert_eq!(w("S").apply(Automorphism::F).unwrap().apply(Automorphism::F).unwrap(), w("S"));
        assert!(w("b").apply(Automorphism::F).unwrap().st_equal(&w("S'.T").convert(Alphabet::TAB).unwrap()));
    }

    #[test]
    fn trivial_and_central_reps() {
        let id = Mat3::identity();
        let rho = Representation::new(Alphabet::TAB, &[(Gen::Tt, id.clone()), (Gen::A, id.clone()), (Gen::B, id.clone())]).unwrap();
        assert!(rho.check_relations().is_ok());
        let c = Mat3::scalar(&FieldElem::omega());
        let rho = Representation::new(Alphabet::TAB, &[(Gen::Tt, c), (Gen::A, id.clone()), (Gen::B, id.clone())]).unwrap();
        assert!(rho.check_relations().is_ok());
        assert!(rho.to_alphabet(Alphabet::ST).unwrap().check_relations().is_ok());
        let bad = Representation::new(Alphabet::TAB, &[(Gen::Tt, id.clone()), (Gen::A, Mat3::from_ints([[1, 1, 0], [0, 1, 0], [0, 0, 1]])), (Gen::B, id)]).unwrap();
        assert!(matches!(bad.check_relations(), Err(GrpError::Relation(_))));
    }
}
