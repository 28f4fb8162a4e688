//! JSON algebra documents.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "name": "UT2^g",
//!   "group": {"kind": "cyclic", "data": 2},
//!   "mode": "graded",
//!   "basis": ["e11", "e12", "e22"],
//!   "structure": [[0, 0, ["1", "0", "0"]], [0, 1, ["0", "1", "0"]]],
//!   "grading": ["1", "g", "1"]
//! }
//! ```
//!
//! Structure triples `[i, j, v]` give `b_i b_j = v` with 0-based indices;
//! omitted pairs multiply to zero. Rationals are strings `"p"` or `"p/q"`.
//! Star-mode documents carry `"involution"`, whose row `i` is `b_i^*`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraData, AlgebraError, Coords, GradedAlgebra, Mode};
use crate::group::{FiniteGroup, GroupError, GroupSpec};
use crate::linalg::{format_rat, parse_rat, Rat};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub format_version: u32,
    pub name: String,
    pub group: GroupSpec,
    pub mode: Mode,
    pub basis: Vec<String>,
    pub structure: Vec<(usize, usize, Vec<String>)>,
    pub grading: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("unsupported format_version {0}")]
    UnsupportedVersion(u32),
    #[error("schema: {0}")]
    Schema(String),
    #[error("group: {0}")]
    Group(#[from] GroupError),
    #[error("algebra: {}", .0.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; "))]
    Algebra(Vec<AlgebraError>),
}

impl DocumentError {
    /// Individual messages, one per violation.
    pub fn messages(&self) -> Vec<String> {
        match self {
            DocumentError::Algebra(v) => v.iter().map(|e| e.to_string()).collect(),
            other => vec![other.to_string()],
        }
    }
}

fn schema(msg: impl Into<String>) -> DocumentError {
    DocumentError::Schema(msg.into())
}

fn parse_vector(v: &[String], d: usize, what: &str) -> Result<Coords, DocumentError> {
    if v.len() != d {
        return Err(schema(format!("{what} has {} entries, expected {d}", v.len())));
    }
    v.iter()
        .map(|s| parse_rat(s).ok_or_else(|| schema(format!("{what}: `{s}` is not a rational"))))
        .collect()
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Schema-level conversion; algebra axioms are not checked.
    pub fn to_data(&self) -> Result<AlgebraData, DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::UnsupportedVersion(self.format_version));
        }
        let group = FiniteGroup::build(self.group.clone())?;
        let d = self.basis.len();
        if d == 0 {
            return Err(schema("basis is empty"));
        }
        if self.grading.len() != d {
            return Err(schema(format!("grading has {} entries, expected {d}", self.grading.len())));
        }
        let grades = self
            .grading
            .iter()
            .map(|l| group.element_by_label(l).ok_or_else(|| schema(format!("unknown grade label `{l}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        let mut products: Vec<Vec<Option<Coords>>> = vec![vec![None; d]; d];
        for (i, j, v) in &self.structure {
            if *i >= d || *j >= d {
                return Err(schema(format!("structure index ({i}, {j}) out of range")));
            }
            if products[*i][*j].is_some() {
                return Err(schema(format!("structure pair ({i}, {j}) given twice")));
            }
            products[*i][*j] = Some(parse_vector(v, d, &format!("product ({i}, {j})"))?);
        }
        let involution = match (self.mode, &self.involution) {
            (Mode::Graded, None) => None,
            (Mode::Graded, Some(_)) => return Err(schema("involution given in graded mode")),
            (Mode::Star, None) => return Err(schema("star mode requires an involution")),
            (Mode::Star, Some(rows)) => {
                if rows.len() != d {
                    return Err(schema(format!("involution has {} rows, expected {d}", rows.len())));
                }
                Some(
                    rows.iter()
                        .enumerate()
                        .map(|(i, r)| parse_vector(r, d, &format!("involution row {i}")))
                        .collect::<Result<Vec<_>, _>>()?,
                )
            }
        };
        Ok(AlgebraData {
            name: self.name.clone(),
            group,
            basis_labels: self.basis.clone(),
            products: products
                .into_iter()
                .map(|row| row.into_iter().map(|v| v.unwrap_or_else(|| vec![Rat::zero(); d])).collect())
                .collect(),
            grades,
            involution,
        })
    }

    /// Every problem with the document; empty iff it loads.
    pub fn violations(&self) -> Vec<String> {
        match self.to_data() {
            Ok(data) => GradedAlgebra::violations(&data).iter().map(|e| e.to_string()).collect(),
            Err(e) => e.messages(),
        }
    }

    pub fn load(&self) -> Result<GradedAlgebra, DocumentError> {
        let data = self.to_data()?;
        let violations = GradedAlgebra::violations(&data);
        if !violations.is_empty() {
            return Err(DocumentError::Algebra(violations));
        }
        GradedAlgebra::new(data).map_err(|e| DocumentError::Algebra(vec![e]))
    }

    pub fn from_algebra(a: &GradedAlgebra) -> Self {
        let data = a.data();
        let fmt = |v: &Coords| v.iter().map(format_rat).collect::<Vec<_>>();
        let structure = data
            .products
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (i, j, v)))
            .filter(|(_, _, v)| v.iter().any(|x| !x.is_zero()))
            .map(|(i, j, v)| (i, j, fmt(v)))
            .collect();
        AlgebraDocument {
            format_version: FORMAT_VERSION,
            name: data.name.clone(),
            group: data.group.spec().clone(),
            mode: a.mode(),
            basis: data.basis_labels.clone(),
            structure,
            grading: data.grades.iter().map(|&g| data.group.label(g).to_string()).collect(),
            involution: data.involution.as_ref().map(|m| m.iter().map(fmt).collect()),
        }
    }
}

/// Parses and validates a JSON document.
pub fn load_algebra(text: &str) -> Result<GradedAlgebra, DocumentError> {
    AlgebraDocument::from_json(text)?.load()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Kind;
    use crate::builtins;

    fn builtin_list() -> Vec<GradedAlgebra> {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let g = c2.element_by_label("g").unwrap();
        let v4 = FiniteGroup::product(&[2, 2]).unwrap();
        vec![
            builtins::ut2(&c2, g).unwrap(),
            builtins::k_algebra(&c2, g).unwrap(),
            builtins::grassmann2(&v4, v4.element_by_label("g").unwrap(), v4.element_by_label("h").unwrap()).unwrap(),
            builtins::m2_transpose().unwrap(),
        ]
    }

    #[test]
    fn round_trip_preserves_structure() {
        for a in builtin_list() {
            let doc = AlgebraDocument::from_algebra(&a);
            let text = doc.to_json();
            let b = load_algebra(&text).unwrap();
            assert_eq!(b.data().products, a.data().products);
            assert_eq!(b.data().grades, a.data().grades);
            assert_eq!(b.data().involution, a.data().involution);
            for g in a.group().elements() {
                for &k in &[Kind::Plain, Kind::Symmetric, Kind::Skew] {
                    assert_eq!(a.component(g, k), b.component(g, k));
                }
            }
            assert_eq!(AlgebraDocument::from_json(&text).unwrap(), doc);
        }
    }

    #[test]
    fn schema_errors() {
        let ok = AlgebraDocument::from_algebra(&builtin_list()[0]);
        let mut bad = ok.clone();
        bad.grading[1] = "q".into();
        assert!(matches!(bad.load(), Err(DocumentError::Schema(_))));
        let mut bad = ok.clone();
        bad.structure.push((0, 0, vec!["1".into(), "0".into(), "0".into()]));
        assert!(matches!(bad.load(), Err(DocumentError::Schema(_))));
        let mut bad = ok.clone();
        bad.format_version = 9;
        assert_eq!(bad.load().unwrap_err(), DocumentError::UnsupportedVersion(9));
        let mut bad = ok.clone();
        bad.structure[0].2[0] = "1/0".into();
        assert!(matches!(bad.load(), Err(DocumentError::Schema(_))));
        assert!(matches!(load_algebra("{"), Err(DocumentError::Json(_))));
        assert!(matches!(load_algebra(r#"{"format_version":1}"#), Err(DocumentError::Json(_))));
    }

    #[test]
    fn algebra_violations_are_all_listed() {
        let mut doc = AlgebraDocument::from_algebra(&builtin_list()[0]);
        // e12 e12 = e11 breaks associativity, e11 in grade g breaks homogeneity
        doc.structure.push((1, 1, vec!["1".into(), "0".into(), "0".into()]));
        doc.grading[0] = "g".into();
        let v = doc.violations();
        assert!(v.len() >= 2, "{v:?}");
        assert!(matches!(doc.load(), Err(DocumentError::Algebra(list)) if list.len() == v.len()));
    }

    #[test]
    fn minimal_document() {
        let text = r#"{
            "format_version": 1, "name": "F", "group": {"kind": "cyclic", "data": 1},
            "mode": "star", "basis": ["1"], "structure": [[0, 0, ["1"]]],
            "grading": ["1"], "involution": [["1"]]
        }"#;
        let a = load_algebra(text).unwrap();
        assert!(a.has_star());
        assert_eq!(a.component(a.group().identity(), Kind::Symmetric).len(), 1);
    }
}
