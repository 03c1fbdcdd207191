//! Divisor literals: JSON objects mapping curve names to integer
//! multiplicities, e.g. `{"l1": 2, "e12": 3, "mu_12_34": 1}`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::catalog::{CatalogError, CurveName};
use crate::lattice::{hyperplane, DivisorClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisorError {
    #[error("malformed divisor JSON: {0}")]
    Json(String),
    #[error("divisor must be a JSON object of name -> integer")]
    NotObject,
    #[error("multiplicity of `{name}` is not an integer: {value}")]
    NotInteger { name: String, value: String },
    #[error("multiplicity of `{name}` must be positive, got {value}")]
    NonPositive { name: String, value: i64 },
    #[error("unknown curve name `{0}`")]
    UnknownName(String),
    #[error("`{0}` is a class, not a curve, and cannot be a fiber component")]
    NotACurve(String),
    #[error("`{name}` appears twice after canonicalization")]
    Duplicate { name: String },
    #[error("empty divisor")]
    Empty,
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

impl DivisorError {
    /// The input token responsible for the error, if any.
    pub fn token(&self) -> Option<&str> {
        match self {
            DivisorError::NotInteger { name, .. }
            | DivisorError::NonPositive { name, .. }
            | DivisorError::Duplicate { name } => Some(name),
            DivisorError::UnknownName(n) | DivisorError::NotACurve(n) => Some(n),
            _ => None,
        }
    }
}

/// A term of a divisor literal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Term {
    Hyperplane,
    Curve(CurveName),
}

impl Term {
    pub fn parse(s: &str) -> Result<Term, DivisorError> {
        if s == "H" {
            return Ok(Term::Hyperplane);
        }
        match s.parse::<CurveName>() {
            Ok(n) => Ok(Term::Curve(n)),
            Err(CatalogError::UnknownName(_)) => Err(DivisorError::UnknownName(s.to_string())),
            Err(e) => Err(e.into()),
        }
    }

    pub fn class(&self) -> Result<DivisorClass, DivisorError> {
        match self {
            Term::Hyperplane => Ok(hyperplane()),
            Term::Curve(n) => Ok(n.class()?),
        }
    }
}

/// A parsed, canonicalized divisor literal with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorLiteral {
    terms: BTreeMap<Term, i64>,
}

impl DivisorLiteral {
    pub fn from_terms<'a>(terms: impl IntoIterator<Item = (&'a str, i64)>) -> Result<Self, DivisorError> {
        let mut out = BTreeMap::new();
        for (name, m) in terms {
            if m <= 0 {
                return Err(DivisorError::NonPositive { name: name.to_string(), value: m });
            }
            let t = Term::parse(name)?;
            if out.insert(t, m).is_some() {
                return Err(DivisorError::Duplicate { name: name.to_string() });
            }
        }
        if out.is_empty() {
            return Err(DivisorError::Empty);
        }
        Ok(DivisorLiteral { terms: out })
    }

    pub fn from_json(text: &str) -> Result<Self, DivisorError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| DivisorError::Json(e.to_string()))?;
        let obj = value.as_object().ok_or(DivisorError::NotObject)?;
        let mut terms = Vec::with_capacity(obj.len());
        for (name, v) in obj {
            let m = v.as_i64().ok_or_else(|| DivisorError::NotInteger {
                name: name.clone(),
                value: v.to_string(),
            })?;
            terms.push((name.as_str(), m));
        }
        Self::from_terms(terms)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, i64)> {
        self.terms.iter().map(|(t, m)| (t, *m))
    }

    pub fn class(&self) -> Result<DivisorClass, DivisorError> {
        let mut d = DivisorClass::zero();
        for (t, m) in &self.terms {
            d += *m * t.class()?;
        }
        Ok(d)
    }

    /// The curve components with multiplicities; fails on `H`.
    pub fn curves(&self) -> Result<Vec<(CurveName, i64)>, DivisorError> {
        self.terms
            .iter()
            .map(|(t, m)| match t {
                Term::Hyperplane => Err(DivisorError::NotACurve("H".into())),
                Term::Curve(n) => Ok((n.clone(), *m)),
            })
            .collect()
    }

    /// Canonical JSON rendering with sorted names.
    pub fn to_json(&self) -> String {
        let map: BTreeMap<String, i64> = self
            .terms
            .iter()
            .map(|(t, m)| {
                let k = match t {
                    Term::Hyperplane => "H".to_string(),
                    Term::Curve(n) => n.to_string(),
                };
                (k, *m)
            })
            .collect();
        serde_json::to_string(&map).expect("plain map")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Rational;

    #[test]
    fn parses_and_sums() {
        let d = DivisorLiteral::from_json(r#"{"l1": 2, "e12": 3, "mu_12_34": 1}"#).unwrap();
        assert_eq!(d.terms().count(), 3);
        let h = DivisorLiteral::from_json(r#"{"H": 1}"#).unwrap();
        assert_eq!(h.class().unwrap().square(), Rational::from_integer(2));
        assert!(matches!(h.curves(), Err(DivisorError::NotACurve(_))));
    }

    #[test]
    fn rejects_bad_tokens() {
        let e = DivisorLiteral::from_json(r#"{"l9": 1}"#).unwrap_err();
        assert_eq!(e.token(), Some("l9"));
        let e = DivisorLiteral::from_json(r#"{"l1": 0}"#).unwrap_err();
        assert!(matches!(e, DivisorError::NonPositive { .. }));
        assert_eq!(e.token(), Some("l1"));
        let e = DivisorLiteral::from_json(r#"{"l1": 1.5}"#).unwrap_err();
        assert_eq!(e.token(), Some("l1"));
        assert!(matches!(DivisorLiteral::from_json("[1]"), Err(DivisorError::NotObject)));
        assert!(matches!(DivisorLiteral::from_json("{"), Err(DivisorError::Json(_))));
        assert!(matches!(DivisorLiteral::from_json("{}"), Err(DivisorError::Empty)));
        let e = DivisorLiteral::from_json(r#"{"mu_12_34": 1, "mu_34_12": 1}"#).unwrap_err();
        assert!(matches!(e, DivisorError::Duplicate { .. }));
    }

    #[test]
    fn canonical_json() {
        let d = DivisorLiteral::from_json(r#"{"mu_56_23": 1, "l1": 2}"#).unwrap();
        assert_eq!(d.to_json(), r#"{"l1":2,"mu_23_56":1}"#);
    }
}
