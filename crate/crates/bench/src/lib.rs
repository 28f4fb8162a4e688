//! Fixtures shared by the benchmarks.

use gpw_core::builtins;
use gpw_core::shapes::{compositions, slot_types};
use gpw_core::{EvaluationMatrix, FiniteGroup, GradedAlgebra, Rat};

pub fn ut2_g() -> GradedAlgebra {
    let c2 = FiniteGroup::cyclic(2).expect("C2");
    builtins::ut2(&c2, c2.element_by_label("g").expect("g")).expect("UT2^g")
}

pub fn k_g() -> GradedAlgebra {
    let c2 = FiniteGroup::cyclic(2).expect("C2");
    builtins::k_algebra(&c2, c2.element_by_label("g").expect("g")).expect("K^g")
}

pub fn grassmann2() -> GradedAlgebra {
    let v4 = FiniteGroup::product(&[2, 2]).expect("C2xC2");
    let (g, h) = (v4.element_by_label("g").expect("g"), v4.element_by_label("h").expect("h"));
    builtins::grassmann2(&v4, g, h).expect("G2")
}

pub fn m2t() -> GradedAlgebra {
    builtins::m2_transpose().expect("M2")
}

/// Rows of the evaluation matrix of the widest degree-`n` slice of `a`,
/// the one with every variable in the first slot.
pub fn slice_matrix(a: &GradedAlgebra, n: usize) -> Vec<Vec<Rat>> {
    let slots = slot_types(a.group(), a.mode()).len();
    let c = compositions(n, slots).into_iter().next().expect("a composition");
    let sig = gpw_core::Signature::new(a.group(), a.mode(), &c);
    EvaluationMatrix::build(a, &sig.monomials()).rows
}
