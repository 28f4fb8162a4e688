//! Compositions, multipartitions, multitableaux and the hook formula.
//!
//! Tableau entries are the integers `1..=n`. Cells of a component are
//! visited column by column (columns left to right, each top to bottom),
//! and components in slot order; the standard multitableau places
//! `1..=n` in exactly that order.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::algebra::{Kind, Mode};
use crate::group::{FiniteGroup, GroupElem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("degree {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("malformed shape literal at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown grade label `{0}`")]
    UnknownGradeLabel(String),
    #[error("slot {0} appears twice in the shape")]
    DuplicateSlot(String),
    #[error("kind suffix does not match the {0} mode")]
    KindInWrongMode(Mode),
}

/// Default cap for enumerating all `n!` fillings.
pub const ALL_FILLINGS_CAP: usize = 6;

/// A (grade, kind) pair labelling one slot of a composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SlotType {
    pub grade: GroupElem,
    pub kind: Kind,
}

/// Canonical slot order: grades in group order; in star mode symmetric
/// before skew within each grade.
pub fn slot_types(group: &FiniteGroup, mode: Mode) -> Vec<SlotType> {
    group
        .elements()
        .flat_map(|grade| mode.kinds().iter().map(move |&kind| SlotType { grade, kind }))
        .collect()
}

pub fn format_slot(group: &FiniteGroup, slot: SlotType) -> String {
    format!("{}{}", group.label(slot.grade), slot.kind.suffix())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of rows.
    pub fn height(&self) -> usize {
        self.0.len()
    }

    /// Heights of the columns, left to right.
    pub fn column_heights(&self) -> Vec<usize> {
        let width = self.0.first().copied().unwrap_or(0);
        (0..width).map(|c| self.0.iter().filter(|&&r| r > c).count()).collect()
    }

    /// Cells `(row, col)` in column-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.column_heights()
            .iter()
            .enumerate()
            .flat_map(|(c, &h)| (0..h).map(move |r| (r, c)))
            .collect()
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        let cols = self.column_heights();
        self.cells()
            .into_iter()
            .map(|(r, c)| (self.0[r] - c - 1) + (cols[c] - r - 1) + 1)
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        self.0.iter().all(|&p| p > 0) && self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// One partition per slot; empty components are kept.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition {
    pub components: Vec<Partition>,
}

impl Multipartition {
    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn composition(&self) -> Composition {
        Composition { parts: self.components.iter().map(Partition::size).collect() }
    }

    /// `d_<λ>`, the product of the component hook dimensions.
    pub fn degree(&self) -> u64 {
        self.components.iter().map(hook_dimension).product()
    }

    /// Maximum component height.
    pub fn height(&self) -> usize {
        self.components.iter().map(Partition::height).max().unwrap_or(0)
    }

    /// Display form with slot labels, empty components omitted, e.g.
    /// `((2,1)@1+,(1)@g-)`.
    pub fn display(&self, group: &FiniteGroup, slots: &[SlotType]) -> String {
        let parts = self
            .components
            .iter()
            .zip(slots)
            .filter(|(p, _)| !p.is_empty())
            .map(|(p, &s)| format!("{p}@{}", format_slot(group, s)))
            .join(",");
        format!("({parts})")
    }

    /// Parses the shape literal syntax. Star-mode components without a
    /// kind suffix are symmetric.
    pub fn parse(text: &str, group: &FiniteGroup, mode: Mode) -> Result<Self, ShapeError> {
        let slots = slot_types(group, mode);
        let mut components = vec![Partition::default(); slots.len()];
        let mut seen = vec![false; slots.len()];
        let mut p = ShapeParser { s: text.as_bytes(), pos: 0 };
        p.expect(b'(')?;
        p.skip_ws();
        if p.peek() == Some(b')') {
            p.pos += 1;
        } else {
            loop {
                let part = p.partition()?;
                p.expect(b'@')?;
                let label = p.label()?;
                let grade = group
                    .element_by_label(&label)
                    .ok_or_else(|| ShapeError::UnknownGradeLabel(label.clone()))?;
                let kind = match (p.peek(), mode) {
                    (Some(b'+'), Mode::Star) => {
                        p.pos += 1;
                        Kind::Symmetric
                    }
                    (Some(b'-'), Mode::Star) => {
                        p.pos += 1;
                        Kind::Skew
                    }
                    (Some(b'+' | b'-'), Mode::Graded) => return Err(ShapeError::KindInWrongMode(mode)),
                    (_, Mode::Star) => Kind::Symmetric,
                    (_, Mode::Graded) => Kind::Plain,
                };
                let idx = slots.iter().position(|s| *s == SlotType { grade, kind }).expect("slot exists");
                if std::mem::replace(&mut seen[idx], true) {
                    return Err(ShapeError::DuplicateSlot(format_slot(group, slots[idx])));
                }
                components[idx] = part;
                p.skip_ws();
                match p.next() {
                    Some(b',') => continue,
                    Some(b')') => break,
                    _ => return Err(p.err("expected `,` or `)`")),
                }
            }
        }
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(Multipartition { components })
    }
}

struct ShapeParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl ShapeParser<'_> {
    fn err(&self, msg: &str) -> ShapeError {
        ShapeError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn next(&mut self) -> Option<u8> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn expect(&mut self, c: u8) -> Result<(), ShapeError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn number(&mut self) -> Result<usize, ShapeError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| ShapeError::Syntax { pos: start, msg: "expected a number".into() })
    }

    fn partition(&mut self) -> Result<Partition, ShapeError> {
        self.expect(b'(')?;
        let start = self.pos;
        let mut parts = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b')') {
            self.pos += 1;
            return Ok(Partition(parts));
        }
        loop {
            let part = self.number()?;
            // `1^2` is shorthand for `1,1`
            self.skip_ws();
            let reps = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.number()?
            } else {
                1
            };
            parts.extend(std::iter::repeat_n(part, reps));
            self.skip_ws();
            match self.next() {
                Some(b',') => continue,
                Some(b')') => break,
                _ => return Err(self.err("expected `,` or `)` in partition")),
            }
        }
        let p = Partition(parts);
        if !p.is_valid() {
            return Err(ShapeError::Syntax { pos: start, msg: "parts must be positive and weakly decreasing".into() });
        }
        Ok(p)
    }

    fn label(&mut self) -> Result<String, ShapeError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'(') {
            while let Some(c) = self.next() {
                if c == b')' {
                    break;
                }
            }
        } else {
            while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == b'^' || c == b'_') {
                self.pos += 1;
            }
        }
        if self.pos == start {
            return Err(self.err("expected a grade label"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos.min(self.s.len())]).into_owned())
    }
}

/// A permutation of `{1..n}` stored as 0-based images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// The transposition `(a b)` on `{1..n}`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a - 1, b - 1);
        p
    }

    pub fn sign(&self) -> i64 {
        let inversions = self
            .0
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| self.0[i + 1..].iter().map(move |&b| (a > b) as usize))
            .sum::<usize>();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// A bijective filling of a multipartition by `1..=n`; `fillings[i][r][c]`
/// is the entry in row `r`, column `c` of component `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multitableau {
    pub shape: Multipartition,
    pub fillings: Vec<Vec<Vec<usize>>>,
    pub standard: bool,
}

impl Multitableau {
    fn from_cell_entries(shape: &Multipartition, entries: &[usize]) -> Self {
        let mut it = entries.iter().copied();
        let fillings: Vec<Vec<Vec<usize>>> = shape
            .components
            .iter()
            .map(|p| {
                let mut rows: Vec<Vec<usize>> = p.0.iter().map(|&len| vec![0; len]).collect();
                for (r, c) in p.cells() {
                    rows[r][c] = it.next().expect("one entry per cell");
                }
                rows
            })
            .collect();
        let standard = fillings.iter().all(|rows| is_standard(rows));
        Multitableau { shape: shape.clone(), fillings, standard }
    }

    /// The standard multitableau: `1..=n` column by column, component by
    /// component.
    pub fn canonical(shape: &Multipartition) -> Self {
        let entries: Vec<usize> = (1..=shape.size()).collect();
        Self::from_cell_entries(shape, &entries)
    }

    /// Entries in canonical cell order.
    pub fn cell_entries(&self) -> Vec<usize> {
        self.shape
            .components
            .iter()
            .zip(&self.fillings)
            .flat_map(|(p, rows)| p.cells().into_iter().map(move |(r, c)| rows[r][c]))
            .collect()
    }

    /// Entries of component `i`, sorted.
    pub fn component_entries(&self, i: usize) -> Vec<usize> {
        let mut e: Vec<usize> = self.fillings[i].iter().flatten().copied().collect();
        e.sort_unstable();
        e
    }
}

fn is_standard(rows: &[Vec<usize>]) -> bool {
    let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
    let cols_ok = rows
        .windows(2)
        .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above));
    rows_ok && cols_ok
}

/// All compositions of `n` into `parts` non-negative parts, first part
/// decreasing fastest to slowest: `(2,0), (1,1), (0,2)`.
pub fn compositions(n: usize, parts: usize) -> Vec<Composition> {
    fn rec(n: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if parts == 1 {
            prefix.push(n);
            out.push(Composition { parts: prefix.clone() });
            prefix.pop();
            return;
        }
        for first in (0..=n).rev() {
            prefix.push(first);
            rec(n - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(n, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Partitions of `n` in reverse lexicographic order; `partitions(0)` is
/// the single empty partition.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn multipartitions(c: &Composition) -> Vec<Multipartition> {
    c.parts
        .iter()
        .map(|&n| partitions(n))
        .multi_cartesian_product()
        .map(|components| Multipartition { components })
        .collect()
}

/// Standard Young tableaux of `p` on `1..=|p|`, as row lists.
pub fn standard_tableaux(p: &Partition) -> Vec<Vec<Vec<usize>>> {
    fn rec(p: &Partition, rows: &mut Vec<Vec<usize>>, next: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if next > p.size() {
            out.push(rows.clone());
            return;
        }
        for r in 0..p.height() {
            let len = rows[r].len();
            let fits = len < p.0[r] && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(next);
                rec(p, rows, next + 1, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(p, &mut vec![Vec::new(); p.height()], 1, &mut out);
    out
}

/// Every filling whose components are each standard, over every way of
/// distributing `1..=n` among the components. The standard multitableau
/// comes first.
pub fn standard_multitableaux(shape: &Multipartition) -> Vec<Multitableau> {
    let n = shape.size();
    let per_component: Vec<Vec<Vec<Vec<usize>>>> =
        shape.components.iter().map(standard_tableaux).collect();
    let mut out = Vec::new();
    let assign = |sets: &[Vec<usize>], out: &mut Vec<Multitableau>| {
        let choices = per_component.iter().map(|tabs| 0..tabs.len()).multi_cartesian_product();
        for choice in choices {
            let fillings: Vec<Vec<Vec<usize>>> = choice
                .iter()
                .zip(&per_component)
                .zip(sets)
                .map(|((&t, tabs), set)| {
                    tabs[t].iter().map(|row| row.iter().map(|&e| set[e - 1]).collect()).collect()
                })
                .collect();
            out.push(Multitableau { shape: shape.clone(), fillings, standard: true });
        }
    };
    distribute(&(1..=n).collect::<Vec<_>>(), &shape.composition().parts, &mut Vec::new(), &mut |sets| {
        assign(sets, &mut out)
    });
    let canonical = Multitableau::canonical(shape);
    if let Some(pos) = out.iter().position(|t| *t == canonical) {
        let t = out.remove(pos);
        out.insert(0, t);
    }
    out
}

fn distribute(
    remaining: &[usize],
    sizes: &[usize],
    acc: &mut Vec<Vec<usize>>,
    f: &mut dyn FnMut(&[Vec<usize>]),
) {
    let Some((&size, rest)) = sizes.split_first() else {
        f(acc);
        return;
    };
    for chosen in remaining.iter().copied().combinations(size) {
        let left: Vec<usize> = remaining.iter().copied().filter(|e| !chosen.contains(e)).collect();
        acc.push(chosen);
        distribute(&left, rest, acc, f);
        acc.pop();
    }
}

/// All `n!` bijective fillings, identity permutation first.
pub fn all_multitableaux(shape: &Multipartition, cap: usize) -> Result<Vec<Multitableau>, ShapeError> {
    let n = shape.size();
    if n > cap {
        return Err(ShapeError::CapExceeded { n, cap });
    }
    Ok((1..=n)
        .permutations(n)
        .map(|entries| Multitableau::from_cell_entries(shape, &entries))
        .collect())
}

/// The permutation sending the entry of each cell of the standard
/// multitableau to the entry of the same cell of `t`.
pub fn tableau_to_permutation(t: &Multitableau) -> Permutation {
    let entries = t.cell_entries();
    // the standard entry of the k-th cell is k + 1
    Permutation(entries.iter().map(|e| e - 1).collect())
}

/// `d_λ = n! / Π hooks`; `d_∅ = 1`.
pub fn hook_dimension(p: &Partition) -> u64 {
    let n = p.size() as u64;
    let fact: u128 = (1..=n as u128).product();
    let hooks: u128 = p.hook_lengths().iter().map(|&h| h as u128).product();
    (fact / hooks) as u64
}

pub fn multinomial(parts: &[usize]) -> u64 {
    let mut total = 0u64;
    let mut acc = 1u128;
    for &p in parts {
        for i in 1..=p as u64 {
            total += 1;
            acc = acc * total as u128 / i as u128;
        }
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition(v.to_vec())
    }

    fn mp(v: &[&[usize]]) -> Multipartition {
        Multipartition { components: v.iter().map(|p| part(p)).collect() }
    }

    /// Oracle: count fillings of `p` by 1..n with increasing rows and
    /// columns by checking every permutation.
    fn brute_force_standard_count(p: &Partition) -> usize {
        let n = p.size();
        (1..=n)
            .permutations(n)
            .filter(|perm| {
                let mut it = perm.iter();
                let rows: Vec<Vec<usize>> =
                    p.0.iter().map(|&len| (0..len).map(|_| *it.next().unwrap()).collect()).collect();
                is_standard(&rows)
            })
            .count()
    }

    #[test]
    fn compositions_examples() {
        let c: Vec<Vec<usize>> = compositions(2, 2).into_iter().map(|c| c.parts).collect();
        assert_eq!(c, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions(5, 1).len(), 1);
        assert_eq!(compositions(3, 2).len(), 4);
        // C(n+parts-1, parts-1)
        assert_eq!(compositions(4, 8).len(), 330);
    }

    #[test]
    fn multipartition_examples() {
        let c = Composition { parts: vec![1, 1] };
        assert_eq!(multipartitions(&c), vec![mp(&[&[1], &[1]])]);
        let c = Composition { parts: vec![2, 0] };
        assert_eq!(multipartitions(&c), vec![mp(&[&[2], &[]]), mp(&[&[1, 1], &[]])]);
        assert_eq!(multipartitions(&Composition { parts: vec![2, 1] }).len(), 2);
    }

    #[test]
    fn standard_multitableaux_examples() {
        assert_eq!(standard_multitableaux(&mp(&[&[1], &[1]])).len(), 2);
        assert_eq!(standard_multitableaux(&mp(&[&[4]])).len(), 1);
        let two_one = standard_multitableaux(&mp(&[&[2, 1]]));
        assert_eq!(two_one.len(), brute_force_standard_count(&part(&[2, 1])));
        assert_eq!(two_one.len(), 2);
        // canonical first, filled column by column
        assert_eq!(two_one[0].fillings, vec![vec![vec![1, 3], vec![2]]]);
        let mixed = mp(&[&[2, 1], &[1, 1]]);
        let all = standard_multitableaux(&mixed);
        assert_eq!(all[0], Multitableau::canonical(&mixed));
        assert_eq!(all.len() as u64, multinomial(&[3, 2]) * mixed.degree());
    }

    #[test]
    fn all_fillings() {
        assert_eq!(all_multitableaux(&mp(&[&[1]]), 6).unwrap().len(), 1);
        let two = all_multitableaux(&mp(&[&[2]]), 6).unwrap();
        assert_eq!(two.iter().map(|t| t.fillings.clone()).collect::<Vec<_>>(), vec![
            vec![vec![vec![1, 2]]],
            vec![vec![vec![2, 1]]]
        ]);
        assert!(two[0].standard && !two[1].standard);
        assert!(matches!(
            all_multitableaux(&mp(&[&[7]]), 6),
            Err(ShapeError::CapExceeded { n: 7, cap: 6 })
        ));
    }

    #[test]
    fn sandwich_tableaux_are_transpositions() {
        // shape ((n-1), (1)) with entry i in the second component and n in its place
        let n = 4;
        let shape = mp(&[&[n - 1], &[1]]);
        let all = all_multitableaux(&shape, 6).unwrap();
        for i in 1..=n {
            let mut row: Vec<usize> = (1..n).collect();
            if i < n {
                row[i - 1] = n;
            }
            let t = all
                .iter()
                .find(|t| t.fillings == vec![vec![row.clone()], vec![vec![i]]])
                .expect("T^i is among all fillings");
            assert_eq!(tableau_to_permutation(t), Permutation::transposition(n, n, i));
        }
    }

    #[test]
    fn permutation_examples() {
        let shape = mp(&[&[2, 1], &[1]]);
        assert!(tableau_to_permutation(&Multitableau::canonical(&shape)).is_identity());
        let t = Multitableau {
            shape: mp(&[&[1], &[1]]),
            fillings: vec![vec![vec![2]], vec![vec![1]]],
            standard: true,
        };
        assert_eq!(tableau_to_permutation(&t), Permutation::transposition(2, 1, 2));
    }

    #[test]
    fn hook_dimension_examples() {
        assert_eq!(hook_dimension(&part(&[5])), 1);
        assert_eq!(hook_dimension(&part(&[1, 1, 1, 1])), 1);
        assert_eq!(hook_dimension(&part(&[2, 1])), 2);
        assert_eq!(hook_dimension(&part(&[])), 1);
        assert_eq!(mp(&[&[2, 1], &[], &[2, 2]]).degree(), 4);
    }

    #[test]
    fn hook_formula_matches_brute_force() {
        for n in 0..=6 {
            let mut sum_sq = 0;
            for p in partitions(n) {
                let d = hook_dimension(&p);
                assert_eq!(d as usize, brute_force_standard_count(&p), "{p}");
                assert_eq!(d as usize, standard_tableaux(&p).len());
                sum_sq += d * d;
            }
            assert_eq!(sum_sq, (1..=n as u64).product::<u64>());
        }
    }

    #[test]
    fn tableau_permutation_is_bijective() {
        for n in 1..=4 {
            for c in compositions(n, 3) {
                for shape in multipartitions(&c) {
                    let perms: std::collections::HashSet<Permutation> = all_multitableaux(&shape, 6)
                        .unwrap()
                        .iter()
                        .map(tableau_to_permutation)
                        .collect();
                    assert_eq!(perms.len(), (1..=n).product::<usize>());
                }
            }
        }
    }

    #[test]
    fn shape_literals() {
        let v4 = FiniteGroup::product(&[2, 2]).unwrap();
        let slots = slot_types(&v4, Mode::Star);
        let s = Multipartition::parse("((2,1)@1+,(1)@g-)", &v4, Mode::Star).unwrap();
        assert_eq!(s.size(), 4);
        assert_eq!(s.display(&v4, &slots), "((2,1)@1+,(1)@g-)");
        let s2 = Multipartition::parse(" ( (1^2)@(1,1)- ) ", &v4, Mode::Star).unwrap();
        assert_eq!(s2.display(&v4, &slots), "((1,1)@gh-)");
        assert!(matches!(
            Multipartition::parse("((1)@q+)", &v4, Mode::Star),
            Err(ShapeError::UnknownGradeLabel(_))
        ));
        assert!(matches!(
            Multipartition::parse("((1)@g+,(2)@g+)", &v4, Mode::Star),
            Err(ShapeError::DuplicateSlot(_))
        ));
        let c2 = FiniteGroup::cyclic(2).unwrap();
        assert!(matches!(
            Multipartition::parse("((1)@g+)", &c2, Mode::Graded),
            Err(ShapeError::KindInWrongMode(_))
        ));
        assert!(matches!(Multipartition::parse("((1,2)@g)", &c2, Mode::Graded), Err(ShapeError::Syntax { .. })));
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[1, 1]), 2);
        assert_eq!(multinomial(&[2, 1, 1]), 12);
        assert_eq!(multinomial(&[0, 0]), 1);
    }
}
