//! Exact evaluation of polynomials on an algebra, identity testing, and
//! evaluation-matrix ranks: slice codimensions, multiplicities and
//! cocharacter tables.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{Coords, GradedAlgebra, Kind, Mode};
use crate::linalg::{self, RankStrategy, Rat};
use crate::poly::{self, GradedPoly, PolyError, Signature, Var};
use crate::shapes::{
    all_multitableaux, compositions, multinomial, multipartitions, standard_multitableaux, Composition,
    Multipartition, ShapeError,
};

/// Degrees above this are refused outright.
pub const HARD_DEGREE_CAP: usize = 7;

/// Cap for the all-fillings multiplicity oracle.
pub const ALL_FILLINGS_ORACLE_CAP: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("value for {0} is not homogeneous of the variable's grade")]
    GradeMismatch(String),
    #[error("value for {0} is not of the variable's kind")]
    KindMismatch(String),
    #[error("no value assigned to {0}")]
    MissingVariable(String),
    #[error("polynomial has a constant term")]
    ConstantTerm,
    #[error("expected a {expected} polynomial or shape, got {found}")]
    ModeMismatch { expected: Mode, found: Mode },
    #[error("shape has {found} components, the algebra has {expected} slots")]
    SlotCountMismatch { expected: usize, found: usize },
    #[error("degree {n} exceeds the cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("consistency violation: {0}")]
    ConsistencyViolation(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// Which multitableaux supply the highest weight vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fillings {
    /// Fillings whose components are standard.
    #[default]
    Standard,
    /// All `n!` fillings; capped at [`ALL_FILLINGS_ORACLE_CAP`].
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EvalOptions {
    pub strategy: RankStrategy,
    pub fillings: Fillings,
}

fn var_name(a: &GradedAlgebra, v: &Var) -> String {
    v.display(a.group())
}

/// Value of `f` at the given assignment, after checking every assigned
/// vector lies in its variable's component.
pub fn evaluate(f: &GradedPoly, a: &GradedAlgebra, assignment: &BTreeMap<Var, Coords>) -> Result<Coords, EvalError> {
    for v in f.variables() {
        let u = assignment.get(&v).ok_or_else(|| EvalError::MissingVariable(var_name(a, &v)))?;
        if !a.is_in_component(u, v.grade, Kind::Plain) {
            return Err(EvalError::GradeMismatch(var_name(a, &v)));
        }
        if !a.is_in_component(u, v.grade, v.kind) {
            return Err(EvalError::KindMismatch(var_name(a, &v)));
        }
    }
    if f.terms().keys().any(Vec::is_empty) {
        return Err(EvalError::ConstantTerm);
    }
    Ok(evaluate_unchecked(f, a, &|v: &Var| &assignment[v]))
}

fn evaluate_unchecked<'v>(f: &GradedPoly, a: &GradedAlgebra, value: &dyn Fn(&Var) -> &'v Coords) -> Coords {
    let mut out = a.zero();
    for (m, c) in f.terms() {
        let mut acc: Coords = value(&m[0]).clone();
        for v in &m[1..] {
            if linalg::is_zero_vec(&acc) {
                break;
            }
            acc = a.multiply(&acc, value(v));
        }
        for (o, x) in out.iter_mut().zip(&acc) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    out
}

/// Columns are polynomials, rows are (basis tuple, coordinate) pairs. A
/// polynomial vanishes on the algebra iff its column is zero.
#[derive(Debug, Clone)]
pub struct EvaluationMatrix {
    pub algebra: String,
    pub variables: Vec<Var>,
    pub columns: usize,
    /// Nonzero rows only.
    pub rows: Vec<Vec<Rat>>,
    /// Number of basis tuples evaluated.
    pub tuples: usize,
}

impl EvaluationMatrix {
    /// Evaluates multilinear polynomials on every tuple of component basis
    /// vectors. A variable whose component is zero yields no tuples.
    pub fn build(a: &GradedAlgebra, polys: &[GradedPoly]) -> Self {
        let variables: Vec<Var> = polys.iter().flat_map(GradedPoly::variables).sorted().dedup().collect();
        debug_assert!(polys.iter().all(GradedPoly::is_multilinear));
        let bases: Vec<&[Coords]> = variables.iter().map(|v| a.component(v.grade, v.kind)).collect();
        let tuples: Vec<Vec<usize>> = if bases.iter().any(|b| b.is_empty()) {
            Vec::new()
        } else {
            bases.iter().map(|b| 0..b.len()).multi_cartesian_product().collect()
        };
        let blocks: Vec<Vec<Vec<Rat>>> = tuples
            .par_iter()
            .map(|tuple| {
                let value = |v: &Var| {
                    let i = variables.binary_search(v).expect("variable listed");
                    &bases[i][tuple[i]]
                };
                let values: Vec<Coords> = polys.iter().map(|f| evaluate_unchecked(f, a, &value)).collect();
                (0..a.dim())
                    .map(|k| values.iter().map(|col| col[k].clone()).collect::<Vec<Rat>>())
                    .filter(|row| !linalg::is_zero_vec(row))
                    .collect()
            })
            .collect();
        EvaluationMatrix {
            algebra: a.name().to_string(),
            variables,
            columns: polys.len(),
            rows: blocks.into_iter().flatten().collect(),
            tuples: tuples.len(),
        }
    }

    pub fn rank(&self, strategy: RankStrategy) -> usize {
        linalg::rank(&self.rows, strategy)
    }

    /// Basis of the column dependencies: coefficient vectors `c` with
    /// `Σ c_j f_j ≡ 0` on the algebra.
    pub fn dependencies(&self) -> Vec<Vec<Rat>> {
        linalg::nullspace(&self.rows, self.columns)
    }

    pub fn is_zero_column(&self, j: usize) -> bool {
        self.rows.iter().all(|r| r[j].is_zero())
    }
}

/// True iff `f` is an identity of `a`. Each multihomogeneous component is
/// multilinearized and evaluated on all basis tuples.
pub fn is_identity(f: &GradedPoly, a: &GradedAlgebra) -> Result<bool, EvalError> {
    if f.terms().keys().any(Vec::is_empty) {
        return Err(EvalError::ConstantTerm);
    }
    for part in f.multihomogeneous_components() {
        let lin = poly::multilinearize(&part)?;
        let m = EvaluationMatrix::build(a, std::slice::from_ref(&lin));
        if !m.rows.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_slots(a: &GradedAlgebra, sig: &Signature) -> Result<(), EvalError> {
    if sig.mode() != a.mode() && sig.degree() > 0 {
        return Err(EvalError::ModeMismatch { expected: a.mode(), found: sig.mode() });
    }
    Ok(())
}

/// Some slot with positive count has a zero component, so the whole slice
/// consists of identities.
fn slice_vanishes(a: &GradedAlgebra, sig: &Signature) -> bool {
    sig.slots
        .iter()
        .zip(&sig.counts)
        .any(|(s, &n)| n > 0 && a.component(s.grade, s.kind).is_empty())
}

/// `c_<n>(A)`: rank of the evaluation matrix of all `n!` monomials of the
/// multilinear slice.
pub fn slice_codimension(a: &GradedAlgebra, sig: &Signature, strategy: RankStrategy) -> Result<usize, EvalError> {
    check_slots(a, sig)?;
    let n = sig.degree();
    if n > HARD_DEGREE_CAP {
        return Err(EvalError::CapExceeded { n, cap: HARD_DEGREE_CAP });
    }
    if n == 0 || slice_vanishes(a, sig) {
        return Ok(0);
    }
    Ok(EvaluationMatrix::build(a, &sig.monomials()).rank(strategy))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceCodimension {
    pub composition: Composition,
    pub weight: u64,
    pub codimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codimensions {
    pub n: usize,
    pub slices: Vec<SliceCodimension>,
    pub total: u64,
}

/// `c_n = Σ multinomial(n; <n>) c_<n>` over all compositions of `n`.
pub fn total_codimension(a: &GradedAlgebra, n: usize, strategy: RankStrategy) -> Result<Codimensions, EvalError> {
    if n > HARD_DEGREE_CAP {
        return Err(EvalError::CapExceeded { n, cap: HARD_DEGREE_CAP });
    }
    let slots = crate::shapes::slot_types(a.group(), a.mode()).len();
    let slices = compositions(n, slots)
        .into_par_iter()
        .map(|c| {
            let sig = Signature::new(a.group(), a.mode(), &c);
            let codimension = slice_codimension(a, &sig, strategy)?;
            Ok(SliceCodimension { weight: multinomial(&c.parts), composition: c, codimension })
        })
        .collect::<Result<Vec<_>, EvalError>>()?;
    let total = slices.iter().map(|s| s.weight * s.codimension as u64).sum();
    Ok(Codimensions { n, slices, total })
}

/// The multilinearized highest weight vectors of the chosen fillings of
/// `shape`.
pub fn hwv_columns(a: &GradedAlgebra, shape: &Multipartition, fillings: Fillings) -> Result<Vec<GradedPoly>, EvalError> {
    let sig = shape_signature(a, shape)?;
    let tableaux = match fillings {
        Fillings::Standard => standard_multitableaux(shape),
        Fillings::All => all_multitableaux(shape, ALL_FILLINGS_ORACLE_CAP)?,
    };
    tableaux
        .iter()
        .map(|t| Ok(poly::multilinearize(&poly::highest_weight_vector(t, &sig)?)?))
        .collect()
}

pub fn shape_signature(a: &GradedAlgebra, shape: &Multipartition) -> Result<Signature, EvalError> {
    let slots = crate::shapes::slot_types(a.group(), a.mode());
    if slots.len() != shape.components.len() {
        return Err(EvalError::SlotCountMismatch { expected: slots.len(), found: shape.components.len() });
    }
    Ok(Signature::new(a.group(), a.mode(), &shape.composition()))
}

/// `m_<λ>(A)`: the number of linearly independent highest weight vectors
/// of shape `<λ>` modulo the identities of `A`.
pub fn multiplicity(a: &GradedAlgebra, shape: &Multipartition, opts: EvalOptions) -> Result<usize, EvalError> {
    let sig = shape_signature(a, shape)?;
    let n = shape.size();
    if n > HARD_DEGREE_CAP {
        return Err(EvalError::CapExceeded { n, cap: HARD_DEGREE_CAP });
    }
    if n == 0 || slice_vanishes(a, &sig) {
        return Ok(0);
    }
    let columns = hwv_columns(a, shape, opts.fillings)?;
    Ok(EvaluationMatrix::build(a, &columns).rank(opts.strategy))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeMultiplicity {
    pub shape: Multipartition,
    pub multiplicity: usize,
    pub degree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocharacterTable {
    pub n: usize,
    pub mode: Mode,
    pub entries: Vec<ShapeMultiplicity>,
    pub codimensions: Codimensions,
}

impl CocharacterTable {
    /// Shapes with nonzero multiplicity.
    pub fn support(&self) -> Vec<&ShapeMultiplicity> {
        self.entries.iter().filter(|e| e.multiplicity > 0).collect()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).max().unwrap_or(0)
    }
}

/// Multiplicities of every shape of degree `n`, with slice codimensions.
/// Fails if some slice violates `c_<n> = Σ m_<λ> d_<λ>` or some
/// multiplicity exceeds `multinomial(n; <n>) d_<λ>`.
pub fn cocharacter_table(a: &GradedAlgebra, n: usize, opts: EvalOptions) -> Result<CocharacterTable, EvalError> {
    if n > HARD_DEGREE_CAP {
        return Err(EvalError::CapExceeded { n, cap: HARD_DEGREE_CAP });
    }
    let codimensions = total_codimension(a, n, opts.strategy)?;
    let mut entries = Vec::new();
    for slice in &codimensions.slices {
        let shapes = multipartitions(&slice.composition);
        let found = shapes
            .into_par_iter()
            .map(|shape| {
                let multiplicity = multiplicity(a, &shape, opts)?;
                Ok(ShapeMultiplicity { degree: shape.degree(), shape, multiplicity })
            })
            .collect::<Result<Vec<_>, EvalError>>()?;
        let sum: u64 = found.iter().map(|e| e.multiplicity as u64 * e.degree).sum();
        if sum != slice.codimension as u64 {
            return Err(EvalError::ConsistencyViolation(format!(
                "slice {} has codimension {} but Σ m·d = {sum}",
                slice.composition, slice.codimension
            )));
        }
        // P_<n> is a free S_<n>-module of rank multinomial(n; <n>)
        if let Some(e) = found.iter().find(|e| e.multiplicity as u64 > slice.weight * e.degree) {
            return Err(EvalError::ConsistencyViolation(format!(
                "multiplicity {} of {} exceeds {} x {}",
                e.multiplicity, slice.composition, slice.weight, e.degree
            )));
        }
        entries.extend(found);
    }
    Ok(CocharacterTable { n, mode: a.mode(), entries, codimensions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::group::FiniteGroup;
    use crate::linalg::rat;
    use crate::poly::parse_poly;

    fn c2_ut2() -> (GradedAlgebra, GradedAlgebra) {
        let g = FiniteGroup::cyclic(2).unwrap();
        let gen = g.element_by_label("g").unwrap();
        (builtins::ut2(&g, gen).unwrap(), builtins::ut2(&g, g.identity()).unwrap())
    }

    fn p(a: &GradedAlgebra, s: &str) -> GradedPoly {
        parse_poly(s, a.mode(), a.group()).unwrap()
    }

    fn assign(a: &GradedAlgebra, f: &GradedPoly, vals: &[usize]) -> BTreeMap<Var, Coords> {
        f.variables().into_iter().zip(vals).map(|(v, &i)| (v, a.basis_vector(i))).collect()
    }

    #[test]
    fn evaluate_examples() {
        let (ut, _) = c2_ut2();
        let f = p(&ut, "[x{1,1},x{2,1}]");
        assert_eq!(evaluate(&f, &ut, &assign(&ut, &f, &[0, 2])).unwrap(), ut.zero());
        let f = p(&ut, "x{1,1}x{2,g}");
        assert_eq!(evaluate(&f, &ut, &assign(&ut, &f, &[0, 1])).unwrap(), ut.basis_vector(1));
        // e12 is not of grade 1
        assert!(matches!(evaluate(&f, &ut, &assign(&ut, &f, &[1, 1])), Err(EvalError::GradeMismatch(_))));
        let g = FiniteGroup::cyclic(2).unwrap();
        let k = builtins::k_algebra(&g, g.element_by_label("g").unwrap()).unwrap();
        let f = p(&k, "x{1,1}x{2,g}x{3,1}");
        // variables sort by index: x1 = e22, x2 = e23, x3 = e13
        assert_eq!(evaluate(&f, &k, &assign(&k, &f, &[2, 3, 1])).unwrap(), k.zero());
    }

    #[test]
    fn kind_mismatch() {
        let m2 = builtins::m2_transpose().unwrap();
        let f = p(&m2, "z{1,1}");
        let mut asg = BTreeMap::new();
        asg.insert(f.variables()[0], m2.basis_vector(0));
        assert!(matches!(evaluate(&f, &m2, &asg), Err(EvalError::KindMismatch(_))));
    }

    #[test]
    fn identities_of_ut2() {
        let (ut_g, ut_1) = c2_ut2();
        assert!(is_identity(&p(&ut_1, "[x{1,1},x{2,1}][x{3,1},x{4,1}]"), &ut_1).unwrap());
        assert!(is_identity(&p(&ut_1, "x{1,g}"), &ut_1).unwrap());
        assert!(!is_identity(&p(&ut_1, "[x{1,1},x{2,1}]"), &ut_1).unwrap());
        assert!(is_identity(&p(&ut_g, "[x{1,1},x{2,1}]"), &ut_g).unwrap());
        assert!(is_identity(&p(&ut_g, "x{1,g}x{2,g}"), &ut_g).unwrap());
        assert!(!is_identity(&p(&ut_g, "x{1,g}"), &ut_g).unwrap());
        // non-multilinear input: x^2 with x of grade g
        assert!(is_identity(&p(&ut_g, "x{1,g}^2"), &ut_g).unwrap());
        assert!(!is_identity(&p(&ut_g, "x{1,1}^3 + x{1,g}x{2,g}"), &ut_g).unwrap());
    }

    #[test]
    fn slice_codimensions_of_ut2() {
        let (ut, _) = c2_ut2();
        let g = ut.group().clone();
        let sig = |parts: Vec<usize>| Signature::new(&g, Mode::Graded, &Composition { parts });
        let s = RankStrategy::Exact;
        assert_eq!(slice_codimension(&ut, &sig(vec![1, 0]), s).unwrap(), 1);
        assert_eq!(slice_codimension(&ut, &sig(vec![2, 0]), s).unwrap(), 1);
        assert_eq!(slice_codimension(&ut, &sig(vec![1, 1]), s).unwrap(), 2);
        assert_eq!(slice_codimension(&ut, &sig(vec![0, 2]), s).unwrap(), 0);
        assert_eq!(total_codimension(&ut, 1, s).unwrap().total, 2);
        assert_eq!(total_codimension(&ut, 2, s).unwrap().total, 5);
    }

    #[test]
    fn field_codimensions() {
        let f = builtins::field(&FiniteGroup::trivial(), false).unwrap();
        for n in 1..=4 {
            assert_eq!(total_codimension(&f, n, RankStrategy::default()).unwrap().total, 1);
            let t = cocharacter_table(&f, n, EvalOptions::default()).unwrap();
            let support = t.support();
            assert_eq!(support.len(), 1);
            assert_eq!(support[0].shape.components[0].0, vec![n]);
        }
    }

    #[test]
    fn ut2_multiplicities() {
        let (ut, _) = c2_ut2();
        let g = ut.group().clone();
        let shape = Multipartition::parse("((2)@1,(1)@g)", &g, Mode::Graded).unwrap();
        assert_eq!(multiplicity(&ut, &shape, EvalOptions::default()).unwrap(), 3);
        let all = EvalOptions { fillings: Fillings::All, ..Default::default() };
        assert_eq!(multiplicity(&ut, &shape, all).unwrap(), 3);
    }

    #[test]
    fn k_multiplicity_of_column_shape() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let k = builtins::k_algebra(&g, g.element_by_label("g").unwrap()).unwrap();
        let shape = Multipartition::parse("((1)@1,(1,1)@g)", &g, Mode::Graded).unwrap();
        let m = multiplicity(&k, &shape, EvalOptions::default()).unwrap();
        assert!((1..=2).contains(&m));
        let all = EvalOptions { fillings: Fillings::All, ..Default::default() };
        assert_eq!(multiplicity(&k, &shape, all).unwrap(), m);
    }

    #[test]
    fn vanishing_slot_forces_zero() {
        let (ut, _) = c2_ut2();
        let g = ut.group().clone();
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let k = builtins::k_algebra(&c4, c4.element_by_label("g^2").unwrap()).unwrap();
        let sig = Signature::from_counts(&c4, Mode::Graded, &[(c4.element_by_label("g").unwrap(), Kind::Plain, 1)]);
        assert_eq!(slice_codimension(&k, &sig, RankStrategy::Exact).unwrap(), 0);
        let star = Signature::from_counts(&g, Mode::Star, &[(g.identity(), Kind::Symmetric, 1)]);
        assert!(matches!(slice_codimension(&ut, &star, RankStrategy::Exact), Err(EvalError::ModeMismatch { .. })));
    }

    #[test]
    fn dependencies_of_commutator() {
        let (ut, _) = c2_ut2();
        let cols = vec![p(&ut, "x{1,1}x{2,1}"), p(&ut, "x{2,1}x{1,1}")];
        let m = EvaluationMatrix::build(&ut, &cols);
        assert_eq!(m.dependencies(), vec![vec![rat(-1), rat(1)]]);
    }

    #[test]
    fn caps() {
        let (ut, _) = c2_ut2();
        assert!(matches!(cocharacter_table(&ut, 8, EvalOptions::default()), Err(EvalError::CapExceeded { n: 8, cap: 7 })));
    }
}
