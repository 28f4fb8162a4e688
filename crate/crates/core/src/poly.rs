//! Noncommutative graded polynomials, the standard polynomial, highest
//! weight vectors, multilinearization and the expression parser.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{Kind, Mode};
use crate::group::{FiniteGroup, GroupElem};
use crate::linalg::{self, rat, Rat};
use crate::shapes::{slot_types, tableau_to_permutation, Composition, Multitableau, Partition, SlotType};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown grade label `{0}`")]
    UnknownGradeLabel(String),
    #[error("variable `{var}` is not allowed in {mode} mode")]
    KindInWrongMode { var: char, mode: Mode },
    #[error("polynomial is not multihomogeneous")]
    NotMultihomogeneous,
    #[error("shape does not match the signature")]
    ShapeSignatureMismatch,
}

/// A variable `x_{index,grade}` (or `y`/`z` in star mode). `copy` is 0 for
/// ordinary variables and `1..=m` for the copies introduced by
/// multilinearization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub index: usize,
    pub copy: usize,
    pub grade: GroupElem,
    pub kind: Kind,
}

impl Var {
    pub fn new(index: usize, grade: GroupElem, kind: Kind) -> Self {
        Var { index, copy: 0, grade, kind }
    }

    pub fn slot(&self) -> SlotType {
        SlotType { grade: self.grade, kind: self.kind }
    }

    fn letter(&self) -> char {
        match self.kind {
            Kind::Plain => 'x',
            Kind::Symmetric => 'y',
            Kind::Skew => 'z',
        }
    }

    pub fn display(&self, group: &FiniteGroup) -> String {
        if self.copy == 0 {
            format!("{}{{{},{}}}", self.letter(), self.index, group.label(self.grade))
        } else {
            format!("{}{{{}:{},{}}}", self.letter(), self.index, self.copy, group.label(self.grade))
        }
    }
}

pub type Monomial = Vec<Var>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPoly {
    pub mode: Mode,
    terms: BTreeMap<Monomial, Rat>,
}

impl GradedPoly {
    pub fn zero(mode: Mode) -> Self {
        GradedPoly { mode, terms: BTreeMap::new() }
    }

    pub fn monomial(mode: Mode, m: Monomial, c: Rat) -> Self {
        let mut p = Self::zero(mode);
        p.add_term(m, c);
        p
    }

    pub fn var(mode: Mode, v: Var) -> Self {
        Self::monomial(mode, vec![v], Rat::one())
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Self {
        let mut out = Self::zero(self.mode);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.mode);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut m = a.clone();
                m.extend_from_slice(b);
                out.add_term(m, x * y);
            }
        }
        out
    }

    /// Distinct variables, sorted.
    pub fn variables(&self) -> Vec<Var> {
        self.terms.keys().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }

    /// True iff no monomial repeats a variable.
    pub fn is_multilinear(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all_unique())
    }

    /// Variable multiplicities if every monomial has the same ones.
    pub fn multidegree(&self) -> Option<BTreeMap<Var, usize>> {
        let mut degrees = self.terms.keys().map(|m| m.iter().copied().counts().into_iter().collect::<BTreeMap<_, _>>());
        let first = degrees.next().unwrap_or_default();
        degrees.all(|d| d == first).then_some(first)
    }

    /// Splits into multihomogeneous components, ordered by multidegree.
    pub fn multihomogeneous_components(&self) -> Vec<GradedPoly> {
        let mut parts: BTreeMap<Vec<(Var, usize)>, GradedPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<(Var, usize)> = m.iter().copied().counts().into_iter().sorted().collect();
            parts.entry(key).or_insert_with(|| Self::zero(self.mode)).add_term(m.clone(), c.clone());
        }
        parts.into_values().collect()
    }

    /// Applies `new[σ(p)] = old[p]` to every monomial (1-based positions).
    pub fn permute_positions(&self, sigma: &crate::shapes::Permutation) -> Self {
        let mut out = Self::zero(self.mode);
        for (m, c) in &self.terms {
            assert_eq!(m.len(), sigma.0.len(), "permutation degree must match the monomial length");
            let mut new = m.clone();
            for (p, v) in m.iter().enumerate() {
                new[sigma.0[p]] = *v;
            }
            out.add_term(new, c.clone());
        }
        out
    }

    pub fn display(&self, group: &FiniteGroup) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = *c < Rat::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let vars = m.iter().map(|v| v.display(group)).join("*");
            if !abs.is_one() || m.is_empty() {
                s.push_str(&linalg::format_rat(&abs));
                if !m.is_empty() {
                    s.push('*');
                }
            }
            s.push_str(&vars);
        }
        s
    }
}

/// Variable content of a multilinear space: one count per slot, slots in
/// canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    pub slots: Vec<SlotType>,
    pub counts: Vec<usize>,
}

impl Signature {
    pub fn new(group: &FiniteGroup, mode: Mode, c: &Composition) -> Self {
        let slots = slot_types(group, mode);
        assert_eq!(slots.len(), c.parts.len(), "composition length must match the slot count");
        Signature { slots, counts: c.parts.clone() }
    }

    /// Builds a signature from `(grade, kind, count)` triples; unlisted
    /// slots get count 0.
    pub fn from_counts(group: &FiniteGroup, mode: Mode, counts: &[(GroupElem, Kind, usize)]) -> Self {
        let slots = slot_types(group, mode);
        let mut c = vec![0; slots.len()];
        for &(grade, kind, n) in counts {
            let i = slots.iter().position(|s| *s == SlotType { grade, kind }).expect("slot in mode");
            c[i] += n;
        }
        Signature { slots, counts: c }
    }

    pub fn composition(&self) -> Composition {
        Composition { parts: self.counts.clone() }
    }

    pub fn degree(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn mode(&self) -> Mode {
        match self.slots.first().map(|s| s.kind) {
            Some(Kind::Plain) | None => Mode::Graded,
            _ => Mode::Star,
        }
    }

    /// The variables of `P_<n>`: slot `i` gets the next `n_i` indices.
    pub fn variables(&self) -> Vec<Var> {
        let mut next = 1;
        let mut out = Vec::new();
        for (s, &n) in self.slots.iter().zip(&self.counts) {
            for _ in 0..n {
                out.push(Var::new(next, s.grade, s.kind));
                next += 1;
            }
        }
        out
    }

    /// All `n!` arrangements of the signature's variables.
    pub fn monomials(&self) -> Vec<GradedPoly> {
        let vars = self.variables();
        let n = vars.len();
        vars.into_iter()
            .permutations(n)
            .map(|m| GradedPoly::monomial(self.mode(), m, Rat::one()))
            .collect()
    }
}

/// `St_r = Σ sgn(σ) x_{σ(1)}⋯x_{σ(r)}`.
pub fn standard_poly(mode: Mode, vars: &[Var]) -> GradedPoly {
    let r = vars.len();
    let mut out = GradedPoly::zero(mode);
    for perm in (0..r).permutations(r) {
        let sign = crate::shapes::Permutation(perm.clone()).sign();
        out.add_term(perm.iter().map(|&i| vars[i]).collect(), rat(sign));
    }
    out
}

/// `f_λ` for one component: the product over columns of standard
/// polynomials in the first `h_j` variables of the slot, numbered from
/// `offset + 1`.
fn component_generator(mode: Mode, p: &Partition, slot: SlotType, offset: usize) -> GradedPoly {
    let mut f = GradedPoly::monomial(mode, vec![], Rat::one());
    for h in p.column_heights() {
        let vars: Vec<Var> = (1..=h).map(|i| Var::new(offset + i, slot.grade, slot.kind)).collect();
        f = f.mul(&standard_poly(mode, &vars));
    }
    f
}

/// Variable index offsets per component: `Σ_{j<i} h(λ_j)`.
fn offsets(components: &[Partition]) -> Vec<usize> {
    components
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.height();
            Some(o)
        })
        .collect()
}

fn check_shape(t: &Multitableau, sig: &Signature) -> Result<(), PolyError> {
    if t.shape.composition().parts != sig.counts {
        return Err(PolyError::ShapeSignatureMismatch);
    }
    Ok(())
}

/// `f_<λ>`, the highest weight vector of the standard multitableau.
pub fn shape_generator(components: &[Partition], sig: &Signature) -> GradedPoly {
    let mode = sig.mode();
    let mut f = GradedPoly::monomial(mode, vec![], Rat::one());
    for ((p, &slot), off) in components.iter().zip(&sig.slots).zip(offsets(components)) {
        f = f.mul(&component_generator(mode, p, slot, off));
    }
    f
}

/// `f_T = f_<λ> σ⁻¹` with `σ` the tableau permutation of `T`, acting on
/// monomial positions.
pub fn highest_weight_vector(t: &Multitableau, sig: &Signature) -> Result<GradedPoly, PolyError> {
    check_shape(t, sig)?;
    let f = shape_generator(&t.shape.components, sig);
    Ok(f.permute_positions(&tableau_to_permutation(t)))
}

/// The highest weight vectors of the individual components of `T`, each
/// on its own entries relabelled to `1..=n_i`, with the same variable
/// numbering as [`highest_weight_vector`]. Empty components are skipped.
pub fn component_highest_weight_vectors(t: &Multitableau, sig: &Signature) -> Result<Vec<GradedPoly>, PolyError> {
    check_shape(t, sig)?;
    let mode = sig.mode();
    let offs = offsets(&t.shape.components);
    let mut out = Vec::new();
    for (i, p) in t.shape.components.iter().enumerate() {
        if p.is_empty() {
            continue;
        }
        let entries = t.component_entries(i);
        let relabel = |e: usize| entries.binary_search(&e).expect("entry of the component") + 1;
        let single = Multitableau {
            shape: crate::shapes::Multipartition { components: vec![p.clone()] },
            fillings: vec![t.fillings[i].iter().map(|row| row.iter().map(|&e| relabel(e)).collect()).collect()],
            standard: t.standard,
        };
        let f = component_generator(mode, p, sig.slots[i], offs[i]);
        out.push(f.permute_positions(&tableau_to_permutation(&single)));
    }
    Ok(out)
}

/// Full polarization: every variable of multiplicity `m > 1` becomes
/// copies `1..=m`, summed over all `m!` assignments of copies to its
/// occurrences.
pub fn multilinearize(f: &GradedPoly) -> Result<GradedPoly, PolyError> {
    let degrees = f.multidegree().ok_or(PolyError::NotMultihomogeneous)?;
    let repeated: Vec<(Var, usize)> = degrees.into_iter().filter(|&(_, m)| m > 1).collect();
    if repeated.is_empty() {
        return Ok(f.clone());
    }
    let mut out = GradedPoly::zero(f.mode);
    for (mono, c) in f.terms() {
        let choices = repeated.iter().map(|&(_, m)| (1..=m).permutations(m).collect::<Vec<_>>());
        for assignment in choices.multi_cartesian_product() {
            let mut next = vec![0; repeated.len()];
            let new: Monomial = mono
                .iter()
                .map(|v| match repeated.iter().position(|(r, _)| r == v) {
                    Some(k) => {
                        let copy = assignment[k][next[k]];
                        next[k] += 1;
                        Var { copy, ..*v }
                    }
                    None => *v,
                })
                .collect();
            out.add_term(new, c.clone());
        }
    }
    Ok(out)
}

/// Parses a polynomial. Constant terms are rejected.
pub fn parse_poly(text: &str, mode: Mode, group: &FiniteGroup) -> Result<GradedPoly, PolyError> {
    let mut p = Parser { chars: text.char_indices().collect(), pos: 0, len: text.len(), mode, group };
    let f = p.sum()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected input"));
    }
    if f.terms().keys().any(Vec::is_empty) {
        return Err(PolyError::Parse { pos: 0, msg: "constant terms are not allowed".into() });
    }
    if f.is_zero() {
        return Err(PolyError::Parse { pos: 0, msg: "polynomial is zero".into() });
    }
    Ok(f)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
    mode: Mode,
    group: &'a FiniteGroup,
}

impl Parser<'_> {
    fn byte_pos(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(b, _)| b)
    }

    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.byte_pos(), msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.peek_raw().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), PolyError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn sum(&mut self) -> Result<GradedPoly, PolyError> {
        let mut acc = self.circle()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.circle()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.circle()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn circle(&mut self) -> Result<GradedPoly, PolyError> {
        let mut acc = self.product()?;
        while self.eat('o') || self.eat('∘') {
            let rhs = self.product()?;
            acc = acc.mul(&rhs).add(&rhs.mul(&acc));
        }
        Ok(acc)
    }

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || matches!(c, 'x' | 'y' | 'z' | '(' | '['))
    }

    fn product(&mut self) -> Result<GradedPoly, PolyError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.starts_atom() {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<GradedPoly, PolyError> {
        if self.eat('-') {
            Ok(self.unary()?.scale(&rat(-1)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<GradedPoly, PolyError> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.integer()?;
            if e == 0 {
                return Err(self.err("exponent must be positive"));
            }
            let mut acc = base.clone();
            for _ in 1..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<usize, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        s.parse().map_err(|_| PolyError::Parse { pos: self.chars.get(start).map_or(self.len, |p| p.0), msg: "expected an integer".into() })
    }

    fn atom(&mut self) -> Result<GradedPoly, PolyError> {
        let mode = self.mode;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let f = self.sum()?;
                self.expect(')')?;
                Ok(f)
            }
            Some('[') => {
                self.pos += 1;
                let a = self.sum()?;
                self.expect(',')?;
                let b = self.sum()?;
                self.expect(']')?;
                Ok(a.mul(&b).sub(&b.mul(&a)))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.byte_pos();
                let num = self.integer()?;
                let mut value = Rat::from_integer(num.into());
                if self.eat('/') {
                    let den = self.integer()?;
                    if den == 0 {
                        return Err(PolyError::Parse { pos: start, msg: "zero denominator".into() });
                    }
                    value /= Rat::from_integer(den.into());
                }
                Ok(GradedPoly::monomial(mode, vec![], value))
            }
            Some(c @ ('x' | 'y' | 'z')) => {
                let kind = match (c, mode) {
                    ('x', Mode::Graded) => Kind::Plain,
                    ('y', Mode::Star) => Kind::Symmetric,
                    ('z', Mode::Star) => Kind::Skew,
                    _ => return Err(PolyError::KindInWrongMode { var: c, mode }),
                };
                self.pos += 1;
                self.expect('{')?;
                let index = self.integer()?;
                if index == 0 {
                    return Err(self.err("variable indices start at 1"));
                }
                self.expect(',')?;
                self.skip_ws();
                let start = self.pos;
                let mut depth = 0usize;
                while let Some(ch) = self.peek_raw() {
                    match ch {
                        '(' => depth += 1,
                        ')' => depth = depth.saturating_sub(1),
                        '}' if depth == 0 => break,
                        _ => {}
                    }
                    self.pos += 1;
                }
                let label: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
                self.expect('}')?;
                let grade = self
                    .group
                    .element_by_label(label.trim())
                    .ok_or_else(|| PolyError::UnknownGradeLabel(label.trim().to_string()))?;
                Ok(GradedPoly::var(mode, Var::new(index, grade, kind)))
            }
            _ => Err(self.err("expected a term")),
        }
    }
}
