//! Graded polynomial identities of finite-dimensional algebras graded by a
//! finite group, with or without a graded involution: codimensions,
//! cocharacters, identity testing and multiplicity classification.

pub mod algebra;
pub mod builtins;
pub mod classify;
pub mod document;
pub mod eval;
pub mod group;
pub mod linalg;
pub mod poly;
pub mod shapes;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

pub use algebra::{AlgebraError, Coords, GradedAlgebra, Kind, Mode};
pub use classify::{BoundedReport, BoundedVerdict, ClassifyError, LemmaEntry, MultOneReport, SandwichWitness};
pub use document::{load_algebra, AlgebraDocument, DocumentError};
pub use eval::{CocharacterTable, Codimensions, EvalError, EvalOptions, EvaluationMatrix, Fillings};
pub use group::{FiniteGroup, GroupElem, GroupError, GroupSpec};
pub use linalg::{Rat, RankStrategy};
pub use poly::{parse_poly, GradedPoly, PolyError, Signature, Var};
pub use shapes::{Composition, Multipartition, Multitableau, Partition, Permutation, ShapeError, SlotType};
