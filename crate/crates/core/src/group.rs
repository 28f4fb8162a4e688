//! Finite groups given by explicit multiplication tables.
//!
//! Every group, including the cyclic and direct-product shorthands, is
//! realized as a validated Cayley table so the rest of the crate has a
//! single code path. Elements are referred to by [`GroupElem`] indices into
//! the table.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of an element inside a [`FiniteGroup`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElem(pub usize);

/// Letters used for the generators of cyclic factors. `o`, `x`, `y`, `z`
/// are reserved by the polynomial grammar.
const GENERATOR_LETTERS: [&str; 8] = ["g", "h", "k", "l", "m", "p", "q", "r"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "lowercase")]
pub enum GroupSpec {
    Cyclic(usize),
    Product(Vec<usize>),
    Table(TableSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableSpec {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order must be at least 1")]
    EmptyGroup,
    #[error("too many cyclic factors ({0}); at most {max} are supported", max = GENERATOR_LETTERS.len())]
    TooManyFactors(usize),
    #[error("table is not square or has entries out of range")]
    MalformedTable,
    #[error("labels must be {0} distinct non-empty strings")]
    BadLabels(usize),
    #[error("declared identity {0} does not act as the identity")]
    NoIdentity(usize),
    #[error("table is not a Latin square (row or column {0} repeats an element)")]
    NotLatinSquare(usize),
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociativeTable { a: String, b: String, c: String },
}

/// A finite group realized by its Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    spec: GroupSpec,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    aliases: HashMap<String, usize>,
}

impl FiniteGroup {
    pub fn build(spec: GroupSpec) -> Result<Self, GroupError> {
        match &spec {
            GroupSpec::Cyclic(n) => Self::from_orders(&[*n], spec.clone()),
            GroupSpec::Product(orders) => Self::from_orders(orders, spec.clone()),
            GroupSpec::Table(t) => Self::from_table(t.clone(), spec.clone()),
        }
    }

    pub fn cyclic(order: usize) -> Result<Self, GroupError> {
        Self::build(GroupSpec::Cyclic(order))
    }

    pub fn product(orders: &[usize]) -> Result<Self, GroupError> {
        Self::build(GroupSpec::Product(orders.to_vec()))
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).expect("trivial group")
    }

    fn from_orders(orders: &[usize], spec: GroupSpec) -> Result<Self, GroupError> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(GroupError::EmptyGroup);
        }
        if orders.len() > GENERATOR_LETTERS.len() {
            return Err(GroupError::TooManyFactors(orders.len()));
        }
        // Exponent tuples in lexicographic order, first factor slowest.
        let mut tuples: Vec<Vec<usize>> = vec![vec![]];
        for &o in orders {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    (0..o).map(move |e| {
                        let mut t = t.clone();
                        t.push(e);
                        t
                    })
                })
                .collect();
        }
        let index: HashMap<Vec<usize>, usize> =
            tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let table = tuples
            .iter()
            .map(|a| {
                tuples
                    .iter()
                    .map(|b| {
                        let c: Vec<usize> = a
                            .iter()
                            .zip(b)
                            .zip(orders)
                            .map(|((x, y), o)| (x + y) % o)
                            .collect();
                        index[&c]
                    })
                    .collect()
            })
            .collect();
        let labels: Vec<String> = tuples.iter().map(|t| word_label(t)).collect();
        let mut aliases = HashMap::new();
        for (i, t) in tuples.iter().enumerate() {
            let tuple_label = format!(
                "({})",
                t.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
            );
            aliases.insert(tuple_label, i);
        }
        let group = FiniteGroup { spec, labels, table, identity: 0, aliases };
        group.validate()?;
        Ok(group)
    }

    fn from_table(t: TableSpec, spec: GroupSpec) -> Result<Self, GroupError> {
        let k = t.labels.len();
        if k == 0 {
            return Err(GroupError::EmptyGroup);
        }
        if t.table.len() != k || t.table.iter().any(|row| row.len() != k || row.iter().any(|&e| e >= k)) {
            return Err(GroupError::MalformedTable);
        }
        let mut seen = std::collections::HashSet::new();
        if t.labels.iter().any(|l| l.trim().is_empty() || !seen.insert(l.as_str())) {
            return Err(GroupError::BadLabels(k));
        }
        if t.identity >= k {
            return Err(GroupError::NoIdentity(t.identity));
        }
        let group = FiniteGroup {
            spec,
            labels: t.labels,
            table: t.table,
            identity: t.identity,
            aliases: HashMap::new(),
        };
        group.validate()?;
        Ok(group)
    }

    fn validate(&self) -> Result<(), GroupError> {
        let k = self.order();
        let e = self.identity;
        for i in 0..k {
            if self.table[e][i] != i || self.table[i][e] != i {
                return Err(GroupError::NoIdentity(e));
            }
        }
        for a in 0..k {
            for b in 0..k {
                let ab = self.table[a][b];
                for c in 0..k {
                    if self.table[ab][c] != self.table[a][self.table[b][c]] {
                        return Err(GroupError::NonAssociativeTable {
                            a: self.labels[a].clone(),
                            b: self.labels[b].clone(),
                            c: self.labels[c].clone(),
                        });
                    }
                }
            }
        }
        for i in 0..k {
            let mut row = vec![false; k];
            let mut col = vec![false; k];
            for j in 0..k {
                if std::mem::replace(&mut row[self.table[i][j]], true)
                    || std::mem::replace(&mut col[self.table[j][i]], true)
                {
                    return Err(GroupError::NotLatinSquare(i));
                }
            }
        }
        Ok(())
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem(self.identity)
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElem> + '_ {
        (0..self.order()).map(GroupElem)
    }

    pub fn label(&self, a: GroupElem) -> &str {
        &self.labels[a.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Resolves a canonical label, an exponent-tuple alias such as `(1,0)`,
    /// or `1` for the identity.
    pub fn element_by_label(&self, label: &str) -> Option<GroupElem> {
        let label: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(i) = self.labels.iter().position(|l| *l == label) {
            return Some(GroupElem(i));
        }
        if label == "1" || label == "e" && !self.labels.iter().any(|l| l == "e") {
            return Some(self.identity());
        }
        self.aliases.get(&label).map(|&i| GroupElem(i))
    }

    pub fn mul(&self, a: GroupElem, b: GroupElem) -> GroupElem {
        GroupElem(self.table[a.0][b.0])
    }

    pub fn inverse(&self, a: GroupElem) -> GroupElem {
        let j = self.table[a.0]
            .iter()
            .position(|&c| c == self.identity)
            .expect("validated table has inverses");
        GroupElem(j)
    }

    pub fn element_order(&self, a: GroupElem) -> usize {
        let mut power = a;
        let mut n = 1;
        while power != self.identity() {
            power = self.mul(power, a);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        let k = self.order();
        (0..k).all(|i| (0..k).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// True iff every pair drawn from `subset` commutes.
    pub fn commutes_pairwise(&self, subset: &[GroupElem]) -> bool {
        subset
            .iter()
            .all(|&a| subset.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(", "))
    }
}

fn word_label(exponents: &[usize]) -> String {
    let mut s = String::new();
    for (letter, &e) in GENERATOR_LETTERS.iter().zip(exponents) {
        match e {
            0 => {}
            1 => s.push_str(letter),
            _ => s.push_str(&format!("{letter}^{e}")),
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}
