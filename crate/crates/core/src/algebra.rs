//! Finite-dimensional graded algebras over the rationals, given by
//! structure constants on a homogeneous basis, optionally carrying a graded
//! involution.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{FiniteGroup, GroupElem};
use crate::linalg::{self, Rat};

/// Coordinates of an algebra element in the chosen basis.
pub type Coords = Vec<Rat>;

/// Variable / subspace kind: plain in graded mode; symmetric or skew in
/// star mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Plain,
    Symmetric,
    Skew,
}

impl Kind {
    pub fn suffix(self) -> &'static str {
        match self {
            Kind::Plain => "",
            Kind::Symmetric => "+",
            Kind::Skew => "-",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Graded,
    Star,
}

impl Mode {
    pub fn kinds(self) -> &'static [Kind] {
        match self {
            Mode::Graded => &[Kind::Plain],
            Mode::Star => &[Kind::Symmetric, Kind::Skew],
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Graded => "graded",
            Mode::Star => "star",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("homogeneity violation: {left}*{right} has a component along {target}, expected grade {expected}")]
    HomogeneityViolation { left: String, right: String, target: String, expected: String },
    #[error("associativity violation on basis triple ({0}, {1}, {2})")]
    AssociativityViolation(String, String, String),
    #[error("involution violation: {0}")]
    InvolutionViolation(String),
    #[error("support of a star algebra must be a commutative subset of the group")]
    NonAbelianSupportWithStar,
    #[error("star mode requires an abelian group")]
    NonAbelianGroupWithStar,
    #[error("operation requires an algebra with involution")]
    StarRequired,
    #[error("element {0} does not have order 2")]
    ElementNotOrderTwo(String),
    #[error("precondition violation: {0}")]
    PreconditionViolation(String),
}

/// Unvalidated algebra data, as read from a document or assembled by a
/// built-in constructor.
#[derive(Debug, Clone)]
pub struct AlgebraData {
    pub name: String,
    pub group: FiniteGroup,
    pub basis_labels: Vec<String>,
    /// `products[i][j]` = coordinates of `b_i b_j`.
    pub products: Vec<Vec<Coords>>,
    pub grades: Vec<GroupElem>,
    /// Row `i` holds the coordinates of `b_i^*`.
    pub involution: Option<Vec<Coords>>,
}

/// Basis of a homogeneous component (or of its symmetric / skew part).
#[derive(Debug, Clone, PartialEq)]
pub struct HomBasis {
    pub grade: GroupElem,
    pub kind: Kind,
    pub vectors: Vec<Coords>,
}

/// A validated graded algebra, possibly with graded involution.
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    data: AlgebraData,
    sparse: Vec<Vec<Vec<(usize, Rat)>>>,
    components: BTreeMap<(GroupElem, Kind), Vec<Coords>>,
}

impl GradedAlgebra {
    /// Validates `data`, returning the first violation found.
    pub fn new(data: AlgebraData) -> Result<Self, AlgebraError> {
        if let Some(e) = Self::violations(&data).into_iter().next() {
            return Err(e);
        }
        let sparse = data
            .products
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        v.iter()
                            .enumerate()
                            .filter(|(_, x)| !x.is_zero())
                            .map(|(k, x)| (k, x.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut algebra = GradedAlgebra { data, sparse, components: BTreeMap::new() };
        algebra.components = algebra.compute_components();
        Ok(algebra)
    }

    /// Every invariant violation of `data`, in a deterministic order.
    pub fn violations(data: &AlgebraData) -> Vec<AlgebraError> {
        let mut out = Vec::new();
        let d = data.basis_labels.len();
        if d == 0 {
            out.push(AlgebraError::Schema("basis must be non-empty".into()));
            return out;
        }
        if data.grades.len() != d {
            out.push(AlgebraError::Schema(format!(
                "grading lists {} entries for {d} basis elements",
                data.grades.len()
            )));
        }
        if data.grades.iter().any(|g| g.0 >= data.group.order()) {
            out.push(AlgebraError::Schema("grade outside the group".into()));
        }
        let shape_ok = data.products.len() == d
            && data.products.iter().all(|row| row.len() == d && row.iter().all(|v| v.len() == d));
        if !shape_ok {
            out.push(AlgebraError::Schema("structure constants must form a d x d x d array".into()));
        }
        if let Some(m) = &data.involution {
            if m.len() != d || m.iter().any(|r| r.len() != d) {
                out.push(AlgebraError::Schema("involution must be a d x d matrix".into()));
            }
        }
        if !out.is_empty() {
            return out;
        }
        let group = &data.group;
        let label = |i: usize| data.basis_labels[i].clone();
        let mul = |u: &Coords, v: &Coords| dense_multiply(&data.products, u, v);
        let unit = |i: usize| unit_vector(d, i);

        for i in 0..d {
            for j in 0..d {
                let expected = group.mul(data.grades[i], data.grades[j]);
                for (k, x) in data.products[i][j].iter().enumerate() {
                    if !x.is_zero() && data.grades[k] != expected {
                        out.push(AlgebraError::HomogeneityViolation {
                            left: label(i),
                            right: label(j),
                            target: label(k),
                            expected: group.label(expected).to_string(),
                        });
                    }
                }
            }
        }
        'assoc: for i in 0..d {
            for j in 0..d {
                let ij = &data.products[i][j];
                for k in 0..d {
                    let left = mul(ij, &unit(k));
                    let right = mul(&unit(i), &data.products[j][k]);
                    if left != right {
                        out.push(AlgebraError::AssociativityViolation(label(i), label(j), label(k)));
                        break 'assoc;
                    }
                }
            }
        }
        if let Some(m) = &data.involution {
            let star = |u: &Coords| row_times(u, m);
            for (i, row) in m.iter().enumerate() {
                if star(row) != unit(i) {
                    out.push(AlgebraError::InvolutionViolation(format!(
                        "applying the involution twice to {} does not return it",
                        label(i)
                    )));
                    break;
                }
            }
            'anti: for i in 0..d {
                for j in 0..d {
                    if star(&data.products[i][j]) != mul(&m[j], &m[i]) {
                        out.push(AlgebraError::InvolutionViolation(format!(
                            "({}{})* != {}* {}*",
                            label(i),
                            label(j),
                            label(j),
                            label(i)
                        )));
                        break 'anti;
                    }
                }
            }
            'grade: for (i, row) in m.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    if !x.is_zero() && data.grades[i] != data.grades[j] {
                        out.push(AlgebraError::InvolutionViolation(format!(
                            "{}* leaves the homogeneous component of {}",
                            label(i),
                            group.label(data.grades[i])
                        )));
                        break 'grade;
                    }
                }
            }
            if !group.is_abelian() {
                out.push(AlgebraError::NonAbelianGroupWithStar);
            }
            let support: Vec<GroupElem> = support_of(&data.grades);
            if !group.commutes_pairwise(&support) {
                out.push(AlgebraError::NonAbelianSupportWithStar);
            }
        }
        out
    }

    fn compute_components(&self) -> BTreeMap<(GroupElem, Kind), Vec<Coords>> {
        let mut out = BTreeMap::new();
        let d = self.dim();
        for g in self.data.group.elements() {
            let idx: Vec<usize> = (0..d).filter(|&i| self.data.grades[i] == g).collect();
            out.insert((g, Kind::Plain), idx.iter().map(|&i| unit_vector(d, i)).collect());
            if let Some(m) = &self.data.involution {
                for (kind, sign) in [(Kind::Symmetric, 1), (Kind::Skew, -1)] {
                    // Row vectors v over the grade-g coordinates with v M = sign v.
                    let sys: Vec<Vec<Rat>> = idx
                        .iter()
                        .map(|&col| {
                            idx.iter()
                                .map(|&row| {
                                    let mut x = m[row][col].clone();
                                    if row == col {
                                        x -= linalg::rat(sign);
                                    }
                                    x
                                })
                                .collect()
                        })
                        .collect();
                    let kernel = linalg::nullspace(&sys, idx.len());
                    let vectors = kernel
                        .into_iter()
                        .map(|w| {
                            let mut v = vec![Rat::zero(); d];
                            for (&i, x) in idx.iter().zip(w) {
                                v[i] = x;
                            }
                            v
                        })
                        .collect();
                    out.insert((g, kind), vectors);
                }
            }
        }
        out
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.data.group
    }

    pub fn dim(&self) -> usize {
        self.data.basis_labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.data.basis_labels
    }

    pub fn grade_of(&self, i: usize) -> GroupElem {
        self.data.grades[i]
    }

    pub fn has_star(&self) -> bool {
        self.data.involution.is_some()
    }

    pub fn mode(&self) -> Mode {
        if self.has_star() {
            Mode::Star
        } else {
            Mode::Graded
        }
    }

    pub fn data(&self) -> &AlgebraData {
        &self.data
    }

    pub fn support(&self) -> Vec<GroupElem> {
        support_of(&self.data.grades)
    }

    pub fn basis_vector(&self, i: usize) -> Coords {
        unit_vector(self.dim(), i)
    }

    pub fn zero(&self) -> Coords {
        vec![Rat::zero(); self.dim()]
    }

    pub fn multiply(&self, u: &[Rat], v: &[Rat]) -> Coords {
        let mut out = self.zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let c = ui * vj;
                for (k, x) in &self.sparse[i][j] {
                    out[*k] += &c * x;
                }
            }
        }
        out
    }

    pub fn involve(&self, u: &[Rat]) -> Result<Coords, AlgebraError> {
        let m = self.data.involution.as_ref().ok_or(AlgebraError::StarRequired)?;
        Ok(row_times(u, m))
    }

    /// Cached basis of `A^(g)` (plain) or of its symmetric / skew part.
    pub fn component(&self, g: GroupElem, kind: Kind) -> &[Coords] {
        self.components.get(&(g, kind)).map_or(&[], Vec::as_slice)
    }

    pub fn homogeneous_component_basis(&self, g: GroupElem, kind: Kind) -> Result<HomBasis, AlgebraError> {
        if kind != Kind::Plain && !self.has_star() {
            return Err(AlgebraError::StarRequired);
        }
        Ok(HomBasis { grade: g, kind, vectors: self.component(g, kind).to_vec() })
    }

    /// True iff `u` lies in the component `(g, kind)`.
    pub fn is_in_component(&self, u: &[Rat], g: GroupElem, kind: Kind) -> bool {
        let homogeneous = u
            .iter()
            .enumerate()
            .all(|(i, x)| x.is_zero() || self.data.grades[i] == g);
        if !homogeneous {
            return false;
        }
        match (kind, &self.data.involution) {
            (Kind::Plain, _) => true,
            (_, None) => false,
            (Kind::Symmetric, Some(m)) => row_times(u, m) == u,
            (Kind::Skew, Some(m)) => row_times(u, m).iter().zip(u).all(|(a, b)| *a == -b.clone()),
        }
    }

    /// Human-readable form such as `e12 - 1/2 e21`.
    pub fn format_element(&self, u: &[Rat]) -> String {
        let terms: Vec<String> = u
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| {
                let l = &self.data.basis_labels[i];
                if x.is_one() {
                    l.clone()
                } else if *x == -Rat::one() {
                    format!("-{l}")
                } else {
                    format!("{} {l}", linalg::format_rat(x))
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }
}

fn support_of(grades: &[GroupElem]) -> Vec<GroupElem> {
    let mut s: Vec<GroupElem> = grades.to_vec();
    s.sort();
    s.dedup();
    s
}

pub(crate) fn unit_vector(d: usize, i: usize) -> Coords {
    let mut v = vec![Rat::zero(); d];
    v[i] = Rat::one();
    v
}

fn row_times(u: &[Rat], m: &[Coords]) -> Coords {
    let d = m.len();
    let mut out = vec![Rat::zero(); d];
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (j, x) in m[i].iter().enumerate() {
            if !x.is_zero() {
                out[j] += ui * x;
            }
        }
    }
    out
}

fn dense_multiply(products: &[Vec<Coords>], u: &[Rat], v: &[Rat]) -> Coords {
    let d = products.len();
    let mut out = vec![Rat::zero(); d];
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (k, x) in products[i][j].iter().enumerate() {
                if !x.is_zero() {
                    out[k] += ui * vj * x;
                }
            }
        }
    }
    out
}
