//! JSON representation files.

use fig8::grp::{Alphabet, Gen, GrpError, Representation};
use fig8::mat3::Mat;
use fig8::numtower::{parse_elem, parse_elem_in, sqrt_adjoin, FieldElem, NumError, SqrtCtx};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDecl {
    pub base: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sqrt: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReprFile {
    pub field: FieldDecl,
    pub alphabet: String,
    pub generators: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Debug, Error)]
pub enum FileError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported base field `{0}` (expected Qzeta12)")]
    Base(String),
    #[error("unknown alphabet `{0}`")]
    Alphabet(String),
    #[error("generator `{0}` does not belong to the declared alphabet")]
    Generator(String),
    #[error("generator `{0}`: matrix must be 2x2 or 3x3, all the same size")]
    Shape(String),
    #[error("element `{0}`: {1}")]
    Elem(String, NumError),
    #[error("sqrt modulus: {0}")]
    Sqrt(NumError),
    #[error(transparent)]
    Group(#[from] GrpError),
}

/// A loaded representation of either size.
pub enum Loaded {
    Three(Representation),
    Two(Representation<FieldElem, 2>),
}

pub fn alphabet_name(a: Alphabet) -> &'static str {
    match a {
        Alphabet::ST => "ST",
        Alphabet::TAB => "TAB",
        Alphabet::KL => "KL",
    }
}

fn alphabet_by_name(s: &str) -> Option<Alphabet> {
    match s {
        "ST" => Some(Alphabet::ST),
        "TAB" => Some(Alphabet::TAB),
        "KL" => Some(Alphabet::KL),
        _ => None,
    }
}

/// Parse a sqrt modulus string into a proper context; a square modulus is rejected.
pub fn sqrt_ctx(d: &str) -> Result<SqrtCtx, FileError> {
    let x = parse_elem(d, None).map_err(FileError::Sqrt)?;
    let c = x.to_cyclo().ok_or(FileError::Sqrt(NumError::Nested))?;
    let ctx = sqrt_adjoin(&c).map_err(FileError::Sqrt)?;
    if ctx.is_degenerate() {
        return Err(FileError::Sqrt(NumError::SquareModulus(d.into())));
    }
    Ok(ctx)
}

fn square<const N: usize>(name: &str, rows: &[Vec<String>], ctx: Option<&SqrtCtx>) -> Result<Mat<FieldElem, N>, FileError> {
    if rows.len() != N || rows.iter().any(|r| r.len() != N) {
        return Err(FileError::Shape(name.into()));
    }
    let mut m: [[FieldElem; N]; N] = std::array::from_fn(|_| std::array::from_fn(|_| FieldElem::zero()));
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            m[i][j] = parse_elem_in(s, ctx).map_err(|e| FileError::Elem(s.clone(), e))?;
        }
    }
    Ok(Mat::from_rows(m))
}

impl ReprFile {
    pub fn from_json(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("file serializes") + "\n"
    }

    /// Parse into a representation. Relations are not checked here.
    pub fn load(&self) -> Result<Loaded, FileError> {
        if self.field.base != "Qzeta12" {
            return Err(FileError::Base(self.field.base.clone()));
        }
        let ctx = self.field.sqrt.as_deref().map(sqrt_ctx).transpose()?;
        let alphabet = alphabet_by_name(&self.alphabet).ok_or_else(|| FileError::Alphabet(self.alphabet.clone()))?;
        let mut gens = Vec::new();
        for (name, rows) in &self.generators {
            let mut chars = name.chars();
            let g = match (chars.next().and_then(Gen::from_symbol), chars.next()) {
                (Some(g), None) if g.alphabet() == alphabet => g,
                _ => return Err(FileError::Generator(name.clone())),
            };
            gens.push((g, name, rows));
        }
        let two = gens.first().is_some_and(|(_, _, rows)| rows.len() == 2);
        if two {
            let ms = gens
                .iter()
                .map(|(g, n, r)| Ok((*g, square::<2>(n, r, ctx.as_ref())?)))
                .collect::<Result<Vec<_>, FileError>>()?;
            Ok(Loaded::Two(Representation::new(alphabet, &ms)?))
        } else {
            let ms = gens
                .iter()
                .map(|(g, n, r)| Ok((*g, square::<3>(n, r, ctx.as_ref())?)))
                .collect::<Result<Vec<_>, FileError>>()?;
            Ok(Loaded::Three(Representation::new(alphabet, &ms)?))
        }
    }

    pub fn from_rep<const N: usize>(rho: &Representation<FieldElem, N>) -> Self {
        let mut sqrt = None;
        let mut generators = BTreeMap::new();
        for (g, m) in rho.generators() {
            let rows = m
                .m
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| {
                            if let Some(d) = x.modulus() {
                                sqrt = Some(d.to_string());
                            }
                            x.to_string()
                        })
                        .collect()
                })
                .collect();
            generators.insert(g.symbol().to_string(), rows);
        }
        ReprFile {
            field: FieldDecl { base: "Qzeta12".into(), sqrt },
            alphabet: alphabet_name(rho.alphabet()).into(),
            generators,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fig8::constructors::v2_family;

    #[test]
    fn roundtrip_is_exact() {
        let f = v2_family(&FieldElem::int(3), &FieldElem::rat(-1, 2), true).unwrap();
        let file = ReprFile::from_rep(&f.rep);
        let back = ReprFile::from_json(&file.to_json()).unwrap();
        assert_eq!(back, file);
        match back.load().unwrap() {
            Loaded::Three(rho) => assert_eq!(ReprFile::from_rep(&rho), file),
            Loaded::Two(_) => panic!("expected 3x3"),
        }
    }

    #[test]
    fn rejects_foreign_generators() {
        let text = r#"{"field":{"base":"Qzeta12"},"alphabet":"TAB","generators":{"k":[["1"]]}}"#;
        assert!(matches!(ReprFile::from_json(text).unwrap().load(), Err(FileError::Generator(_))));
    }
}
