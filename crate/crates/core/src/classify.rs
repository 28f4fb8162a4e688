//! Mechanical checks of the classification results: sandwich identities
//! and bounded multiplicities for graded algebras, the multiplicity-one
//! identity lists for algebras with graded involution, and the
//! supporting lemmas.

use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{GradedAlgebra, Kind, Mode};
use crate::builtins;
use crate::eval::{self, EvalError, EvalOptions, EvaluationMatrix};
use crate::group::GroupElem;
use crate::linalg::{self, rat, Rat};
use crate::poly::{self, parse_poly, GradedPoly, Var};
use crate::shapes::{partitions, slot_types, Multipartition, Multitableau, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("requires {expected} mode, the algebra is in {found} mode")]
    ModeMismatch { expected: Mode, found: Mode },
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

fn require_mode(a: &GradedAlgebra, mode: Mode) -> Result<(), ClassifyError> {
    if a.mode() != mode {
        return Err(ClassifyError::ModeMismatch { expected: mode, found: a.mode() });
    }
    Ok(())
}

/// `Σ α_i x_{1,1}^{i-1} x_{2,g} x_{1,1}^{n-i} ≡ 0` with `α` normalized so
/// its first nonzero entry is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichWitness {
    pub grade: GroupElem,
    pub n: usize,
    pub alpha: Vec<Rat>,
    /// Dimension of the space of all such coefficient vectors.
    pub nullity: usize,
}

impl SandwichWitness {
    pub fn polynomial(&self, a: &GradedAlgebra) -> GradedPoly {
        sandwich_candidates(a, self.grade, self.n)
            .iter()
            .zip(&self.alpha)
            .fold(GradedPoly::zero(Mode::Graded), |acc, (f, c)| acc.add(&f.scale(c)))
    }
}

/// `x_{1,1}^{i-1} x_{2,g} x_{1,1}^{n-i}` for `i = 1..=n`.
pub fn sandwich_candidates(a: &GradedAlgebra, g: GroupElem, n: usize) -> Vec<GradedPoly> {
    let x = Var::new(1, a.group().identity(), Kind::Plain);
    let y = Var::new(2, g, Kind::Plain);
    (1..=n)
        .map(|i| {
            let mut m = vec![x; n];
            m[i - 1] = y;
            GradedPoly::monomial(Mode::Graded, m, Rat::one())
        })
        .collect()
}

/// Searches the coefficient space of the sandwich candidates of degree
/// `n`. Among the dependency basis the sparsest vector is returned.
pub fn find_sandwich_identity(a: &GradedAlgebra, g: GroupElem, n: usize) -> Result<Option<SandwichWitness>, ClassifyError> {
    require_mode(a, Mode::Graded)?;
    if n < 2 {
        return Err(ClassifyError::PreconditionViolation("n must be at least 2".into()));
    }
    let columns = sandwich_candidates(a, g, n)
        .iter()
        .map(poly::multilinearize)
        .collect::<Result<Vec<_>, _>>()
        .map_err(EvalError::from)?;
    let deps = EvaluationMatrix::build(a, &columns).dependencies();
    let nullity = deps.len();
    let Some(mut alpha) = deps.into_iter().min_by_key(|v| v.iter().filter(|x| !x.is_zero()).count()) else {
        return Ok(None);
    };
    linalg::normalize(&mut alpha);
    let w = SandwichWitness { grade: g, n, alpha, nullity };
    if !eval::is_identity(&w.polynomial(a), a)? {
        return Err(EvalError::ConsistencyViolation("sandwich witness does not vanish".into()).into());
    }
    Ok(Some(w))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundedVerdict {
    Bounded,
    UndecidedAtCap,
}

impl fmt::Display for BoundedVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundedVerdict::Bounded => "BOUNDED",
            BoundedVerdict::UndecidedAtCap => "UNDECIDED-AT-CAP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradeWitness {
    pub grade: GroupElem,
    /// Least-degree witness up to the cap.
    pub witness: Option<SandwichWitness>,
    /// Whether the witness fails on `UT_2^g`, excluding it from the variety.
    pub excludes_ut2: Option<bool>,
    /// For grades without a witness: `(n, m)` with `m` the multiplicity of
    /// `((n-1)_1, (1)_g)` (or the largest `m_((λ)_1)` when `g = 1`).
    pub growth: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedReport {
    pub n_max: usize,
    pub grades: Vec<GradeWitness>,
    pub verdict: BoundedVerdict,
    /// Largest multiplicity over all shapes of degree `≤ n_max`.
    pub max_multiplicity: usize,
}

/// Semi-decides bounded multiplicities: a witness for every grade proves
/// boundedness; missing witnesses up to the cap prove nothing.
pub fn bounded_multiplicity_report(a: &GradedAlgebra, n_max: usize) -> Result<BoundedReport, ClassifyError> {
    require_mode(a, Mode::Graded)?;
    if n_max < 2 {
        return Err(ClassifyError::PreconditionViolation("n_max must be at least 2".into()));
    }
    if n_max > eval::HARD_DEGREE_CAP {
        return Err(EvalError::CapExceeded { n: n_max, cap: eval::HARD_DEGREE_CAP }.into());
    }
    let group = a.group();
    let grades: Vec<GroupElem> = group.elements().collect();
    let found = grades
        .par_iter()
        .map(|&g| {
            let mut witness = None;
            for n in 2..=n_max {
                if let Some(w) = find_sandwich_identity(a, g, n)? {
                    witness = Some(w);
                    break;
                }
            }
            let excludes_ut2 = match &witness {
                Some(w) => {
                    let ut = builtins::ut2(group, g)
                        .map_err(|e| ClassifyError::PreconditionViolation(e.to_string()))?;
                    Some(!eval::is_identity(&w.polynomial(&ut), &ut)?)
                }
                None => None,
            };
            let growth = if witness.is_none() { growth_evidence(a, g, n_max)? } else { Vec::new() };
            Ok(GradeWitness { grade: g, witness, excludes_ut2, growth })
        })
        .collect::<Result<Vec<_>, ClassifyError>>()?;
    let verdict = if found.iter().all(|w| w.witness.is_some()) {
        BoundedVerdict::Bounded
    } else {
        BoundedVerdict::UndecidedAtCap
    };
    let mut max_multiplicity = 0;
    for n in 1..=n_max {
        max_multiplicity = max_multiplicity.max(eval::cocharacter_table(a, n, EvalOptions::default())?.max_multiplicity());
    }
    Ok(BoundedReport { n_max, grades: found, verdict, max_multiplicity })
}

fn single_slot_shape(a: &GradedAlgebra, parts: &[(GroupElem, Kind, Partition)]) -> Multipartition {
    let slots = slot_types(a.group(), a.mode());
    let mut components = vec![Partition::default(); slots.len()];
    for (g, k, p) in parts {
        let i = slots.iter().position(|s| s.grade == *g && s.kind == *k).expect("slot in mode");
        components[i] = p.clone();
    }
    Multipartition { components }
}

fn growth_evidence(a: &GradedAlgebra, g: GroupElem, n_max: usize) -> Result<Vec<(usize, usize)>, ClassifyError> {
    let one = a.group().identity();
    (2..=n_max)
        .map(|n| {
            let m = if g == one {
                partitions(n)
                    .into_iter()
                    .map(|p| eval::multiplicity(a, &single_slot_shape(a, &[(one, Kind::Plain, p)]), EvalOptions::default()))
                    .collect::<Result<Vec<_>, _>>()?
                    .into_iter()
                    .max()
                    .unwrap_or(0)
            } else {
                let shape = single_slot_shape(
                    a,
                    &[(one, Kind::Plain, Partition(vec![n - 1])), (g, Kind::Plain, Partition(vec![1]))],
                );
                eval::multiplicity(a, &shape, EvalOptions::default())?
            };
            Ok((n, m))
        })
        .collect()
}

/// The coefficients tried in the multiplicity-one lists.
pub const UNIT_COEFFICIENTS: [i64; 3] = [0, 1, -1];

/// `u + c v`.
fn combo(u: &GradedPoly, v: &GradedPoly, c: i64) -> GradedPoly {
    u.add(&v.scale(&rat(c)))
}

fn star_var(index: usize, grade: GroupElem, kind: Kind) -> GradedPoly {
    GradedPoly::var(Mode::Star, Var::new(index, grade, kind))
}

/// Coefficients `c ∈ {0, 1, -1}` for which `u + c v` is an identity.
fn valid_coefficients(a: &GradedAlgebra, u: &GradedPoly, v: &GradedPoly) -> Result<Vec<i64>, ClassifyError> {
    let mut out = Vec::new();
    for c in UNIT_COEFFICIENTS {
        if eval::is_identity(&combo(u, v, c), a)? {
            out.push(c);
        }
    }
    Ok(out)
}

/// `x_{1,g} x_{2,h} + α x_{2,h} x_{1,g}` for one ordered pair of distinct
/// grades and one choice of kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairEntry {
    pub g: GroupElem,
    pub h: GroupElem,
    pub kinds: (Kind, Kind),
    pub alphas: Vec<i64>,
}

/// `y_{1,g} z_{2,g} + β z_{2,g} y_{1,g}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradeEntry {
    pub g: GroupElem,
    pub betas: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultOneReport {
    pub pairs: Vec<PairEntry>,
    pub grades: Vec<GradeEntry>,
    pub satisfied: bool,
    /// `(n, largest multiplicity at n)` for the empirical check.
    pub empirical: Vec<(usize, usize)>,
}

impl MultOneReport {
    pub fn verdict(&self) -> &'static str {
        if self.satisfied {
            "SATISFIED"
        } else {
            "NOT SATISFIED"
        }
    }
}

/// Scans both identity lists; no cocharacter computation.
pub fn star_multone_scan(a: &GradedAlgebra) -> Result<MultOneReport, ClassifyError> {
    require_mode(a, Mode::Star)?;
    let group = a.group();
    let kinds = [Kind::Symmetric, Kind::Skew];
    let pair_jobs: Vec<(GroupElem, GroupElem, Kind, Kind)> = group
        .elements()
        .cartesian_product(group.elements().collect::<Vec<_>>())
        .filter(|(g, h)| g != h)
        .flat_map(|(g, h)| kinds.iter().cartesian_product(kinds.iter()).map(move |(&k1, &k2)| (g, h, k1, k2)))
        .collect();
    let pairs = pair_jobs
        .par_iter()
        .map(|&(g, h, k1, k2)| {
            let (x1, x2) = (star_var(1, g, k1), star_var(2, h, k2));
            let alphas = valid_coefficients(a, &x1.mul(&x2), &x2.mul(&x1))?;
            Ok(PairEntry { g, h, kinds: (k1, k2), alphas })
        })
        .collect::<Result<Vec<_>, ClassifyError>>()?;
    let grades = group
        .elements()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&g| {
            let (y, z) = (star_var(1, g, Kind::Symmetric), star_var(2, g, Kind::Skew));
            let betas = valid_coefficients(a, &y.mul(&z), &z.mul(&y))?;
            Ok(GradeEntry { g, betas })
        })
        .collect::<Result<Vec<_>, ClassifyError>>()?;
    let satisfied = pairs.iter().all(|p| !p.alphas.is_empty()) && grades.iter().all(|g| !g.betas.is_empty());
    Ok(MultOneReport { pairs, grades, satisfied, empirical: Vec::new() })
}

/// [`star_multone_scan`] plus the cocharacter tables for `n ≤ n_check`. A
/// multiplicity above 1 under a satisfied verdict is a consistency
/// violation.
pub fn star_multone_report(a: &GradedAlgebra, n_check: usize) -> Result<MultOneReport, ClassifyError> {
    let mut report = star_multone_scan(a)?;
    for n in 1..=n_check {
        let m = eval::cocharacter_table(a, n, EvalOptions::default())?.max_multiplicity();
        report.empirical.push((n, m));
        if report.satisfied && m > 1 {
            return Err(EvalError::ConsistencyViolation(format!(
                "identity lists hold but a multiplicity {m} occurs at n = {n}"
            ))
            .into());
        }
    }
    Ok(report)
}

/// Whether `f_T ≡ ± Π_i f_{T_{λ_i}}` modulo the identities of `a`.
pub fn hwv_factorization_check(a: &GradedAlgebra, t: &Multitableau) -> Result<bool, ClassifyError> {
    require_mode(a, Mode::Star)?;
    if t.shape.size() > eval::HARD_DEGREE_CAP {
        return Err(EvalError::CapExceeded { n: t.shape.size(), cap: eval::HARD_DEGREE_CAP }.into());
    }
    if !star_multone_scan(a)?.satisfied {
        return Err(ClassifyError::PreconditionViolation("the multiplicity-one identity lists do not hold".into()));
    }
    let sig = eval::shape_signature(a, &t.shape)?;
    let f = poly::highest_weight_vector(t, &sig).map_err(EvalError::from)?;
    let product = poly::component_highest_weight_vectors(t, &sig)
        .map_err(EvalError::from)?
        .iter()
        .fold(GradedPoly::monomial(Mode::Star, vec![], Rat::one()), |acc, p| acc.mul(p));
    for sign in [1, -1] {
        if eval::is_identity(&combo(&f, &product, -sign), a)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A lemma from the multiplicity-one classification: hypothesis items
/// (each satisfied by at least one alternative) and the slice it bounds.
struct Lemma {
    name: &'static str,
    /// Items of polynomial templates; `{g}`, `{g2}`, `{g3}` stand for the
    /// labels of `g`, `g²`, `g³`; `{c}` ranges over `0, 1, -1`.
    items: &'static [&'static [&'static str]],
    kinds: &'static [Kind],
    degrees: (usize, Option<usize>),
    identity_grade: bool,
}

const EQ1: &str = "y{1,{g}}y{3,{g}}y{2,{g}} + y{2,{g}}y{3,{g}}y{1,{g}}";
const EQ2: &str = "y{1,{g}}y{2,{g}}y{4,{g}}y{3,{g}} + y{2,{g}}y{4,{g}}y{3,{g}}y{1,{g}}";

const LEMMAS: &[Lemma] = &[
    Lemma {
        name: "grade-one",
        items: &[&["y{1,{g}}z{2,{g}} + {c}*z{2,{g}}y{1,{g}}"]],
        kinds: &[Kind::Symmetric, Kind::Skew],
        degrees: (3, None),
        identity_grade: true,
    },
    Lemma {
        name: "square-grade",
        items: &[&["y{1,{g2}}y{2,{g}}", "z{1,{g2}}y{2,{g}}"]],
        kinds: &[Kind::Symmetric],
        degrees: (3, None),
        identity_grade: false,
    },
    Lemma { name: "cubic-symmetric", items: &[&[EQ1]], kinds: &[Kind::Symmetric], degrees: (3, Some(3)), identity_grade: false },
    Lemma { name: "quartic", items: &[&[EQ1], &[EQ2]], kinds: &[Kind::Symmetric], degrees: (4, Some(4)), identity_grade: false },
    Lemma { name: "higher", items: &[&[EQ1], &[EQ2]], kinds: &[Kind::Symmetric], degrees: (5, None), identity_grade: false },
    Lemma {
        name: "cubic-shift",
        items: &[&["y{1,{g}}y{3,{g}}y{2,{g}} - y{2,{g}}y{1,{g}}y{3,{g}}"]],
        kinds: &[Kind::Symmetric],
        degrees: (3, None),
        identity_grade: false,
    },
    Lemma {
        name: "symmetric-lists",
        items: &[
            &["y{1,{g2}}y{2,{g}} + {c}*y{2,{g}}y{1,{g2}}"],
            &["z{1,{g2}}y{2,{g}} + {c}*y{2,{g}}z{1,{g2}}"],
            &["y{1,{g}}z{2,{g3}} + {c}*z{2,{g3}}y{1,{g}}"],
        ],
        kinds: &[Kind::Symmetric],
        degrees: (3, None),
        identity_grade: false,
    },
    Lemma {
        name: "skew-lists",
        items: &[
            &["y{1,{g2}}z{2,{g}} + {c}*z{2,{g}}y{1,{g2}}"],
            &["z{1,{g2}}z{2,{g}} + {c}*z{2,{g}}z{1,{g2}}"],
            &["z{1,{g}}y{2,{g3}} + {c}*y{2,{g3}}z{1,{g}}"],
        ],
        kinds: &[Kind::Skew],
        degrees: (3, None),
        identity_grade: false,
    },
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeCheck {
    pub n: usize,
    pub shape: Multipartition,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaEntry {
    pub lemma: &'static str,
    pub grade: GroupElem,
    /// One identity per hypothesis item, as satisfied by the algebra.
    pub satisfied_by: Vec<String>,
    pub checks: Vec<ShapeCheck>,
    pub conclusion_verified: bool,
}

fn expand_template(a: &GradedAlgebra, template: &str, g: GroupElem) -> Vec<GradedPoly> {
    let group = a.group();
    let g2 = group.mul(g, g);
    let g3 = group.mul(g2, g);
    let text = template
        .replace("{g}", group.label(g))
        .replace("{g2}", group.label(g2))
        .replace("{g3}", group.label(g3));
    let coefficients: Vec<String> = if text.contains("{c}") {
        UNIT_COEFFICIENTS.iter().map(|c| text.replace("{c}", &format!("({c})"))).collect()
    } else {
        vec![text]
    };
    coefficients
        .iter()
        .map(|t| parse_poly(t, Mode::Star, group).expect("lemma templates parse"))
        .collect()
}

/// For every lemma and grade where the hypothesis holds, checks
/// `m_<λ> ≤ 1` on the single-slot shapes the lemma covers for
/// `3 ≤ n ≤ n_max`.
pub fn verify_multone_lemmas(a: &GradedAlgebra, n_max: usize) -> Result<Vec<LemmaEntry>, ClassifyError> {
    require_mode(a, Mode::Star)?;
    if n_max > eval::HARD_DEGREE_CAP {
        return Err(EvalError::CapExceeded { n: n_max, cap: eval::HARD_DEGREE_CAP }.into());
    }
    let group = a.group();
    let one = group.identity();
    let mut out = Vec::new();
    for lemma in LEMMAS {
        let grades: Vec<GroupElem> =
            if lemma.identity_grade { vec![one] } else { group.elements().filter(|&g| g != one).collect() };
        for g in grades {
            let mut satisfied_by = Vec::new();
            for item in lemma.items {
                let hit = item
                    .iter()
                    .flat_map(|t| expand_template(a, t, g))
                    .map(|f| Ok::<_, EvalError>((eval::is_identity(&f, a)?, f)))
                    .find_map(|r| match r {
                        Ok((true, f)) => Some(Ok(f)),
                        Ok((false, _)) => None,
                        Err(e) => Some(Err(e)),
                    })
                    .transpose()?;
                match hit {
                    Some(f) => satisfied_by.push(f.display(group)),
                    None => break,
                }
            }
            if satisfied_by.len() < lemma.items.len() {
                continue;
            }
            let hi = lemma.degrees.1.unwrap_or(n_max).min(n_max);
            let mut checks = Vec::new();
            for n in lemma.degrees.0..=hi {
                for &kind in lemma.kinds {
                    for p in partitions(n) {
                        let shape = single_slot_shape(a, &[(g, kind, p)]);
                        let multiplicity = eval::multiplicity(a, &shape, EvalOptions::default())?;
                        checks.push(ShapeCheck { n, shape, multiplicity });
                    }
                }
            }
            let conclusion_verified = checks.iter().all(|c| c.multiplicity <= 1);
            out.push(LemmaEntry { lemma: lemma.name, grade: g, satisfied_by, checks, conclusion_verified });
        }
    }
    Ok(out)
}
