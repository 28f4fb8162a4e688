//! Built-in example algebras.

use num_traits::Zero;

use crate::algebra::{AlgebraData, AlgebraError, Coords, GradedAlgebra};
use crate::group::{FiniteGroup, GroupElem};
use crate::linalg::{rat, Rat};

/// Structure constants of the span of the given matrix units
/// `e_{rc}`, which must be closed under multiplication.
fn matrix_unit_products(units: &[(usize, usize)]) -> Vec<Vec<Coords>> {
    let d = units.len();
    units
        .iter()
        .map(|&(a, b)| {
            units
                .iter()
                .map(|&(c, e)| {
                    let mut v = vec![Rat::zero(); d];
                    if b == c {
                        let k = units
                            .iter()
                            .position(|&u| u == (a, e))
                            .expect("matrix units must span a subalgebra");
                        v[k] = rat(1);
                    }
                    v
                })
                .collect()
        })
        .collect()
}

fn unit_label(r: usize, c: usize) -> String {
    format!("e{r}{c}")
}

/// `UT_2` with the elementary grading induced by `(1, g)`; `g = 1` gives
/// the trivial grading.
pub fn ut2(group: &FiniteGroup, g: GroupElem) -> Result<GradedAlgebra, AlgebraError> {
    let units = [(1, 1), (1, 2), (2, 2)];
    let one = group.identity();
    let name = if g == one { "UT2^1".to_string() } else { format!("UT2^{}", group.label(g)) };
    GradedAlgebra::new(AlgebraData {
        name,
        group: group.clone(),
        basis_labels: units.iter().map(|&(r, c)| unit_label(r, c)).collect(),
        products: matrix_unit_products(&units),
        grades: vec![one, g, one],
        involution: None,
    })
}

/// The subalgebra `span{e12, e13, e22, e23}` of 3x3 matrices, with
/// `e22, e13` in grade 1 and `e12, e23` in grade `g`, where `g` has order 2.
pub fn k_algebra(group: &FiniteGroup, g: GroupElem) -> Result<GradedAlgebra, AlgebraError> {
    if group.element_order(g) != 2 {
        return Err(AlgebraError::ElementNotOrderTwo(group.label(g).to_string()));
    }
    let units = [(1, 2), (1, 3), (2, 2), (2, 3)];
    let one = group.identity();
    GradedAlgebra::new(AlgebraData {
        name: format!("K^{}", group.label(g)),
        group: group.clone(),
        basis_labels: units.iter().map(|&(r, c)| unit_label(r, c)).collect(),
        products: matrix_unit_products(&units),
        grades: vec![g, one, one, g],
        involution: None,
    })
}

/// The four-dimensional Grassmann algebra `<1, e1, e2>` with `e2` in grade
/// `g`, `e1` in grade `h`, `e1e2` in grade `gh`, and the graded involution
/// negating `e1` and `e2` (hence also `e1e2`).
pub fn grassmann2(group: &FiniteGroup, g: GroupElem, h: GroupElem) -> Result<GradedAlgebra, AlgebraError> {
    if !group.is_abelian() {
        return Err(AlgebraError::PreconditionViolation("group must be abelian".into()));
    }
    if g == h {
        return Err(AlgebraError::PreconditionViolation("g and h must differ".into()));
    }
    let gh = group.mul(g, h);
    if gh == group.identity() {
        return Err(AlgebraError::PreconditionViolation("gh must not be the identity".into()));
    }
    // basis order: 1, e1, e2, e1e2
    let e = |i: usize, c: i64| {
        let mut v = vec![Rat::zero(); 4];
        if c != 0 {
            v[i] = rat(c);
        }
        v
    };
    let zero = || vec![Rat::zero(); 4];
    let products = vec![
        vec![e(0, 1), e(1, 1), e(2, 1), e(3, 1)],
        vec![e(1, 1), zero(), e(3, 1), zero()],
        vec![e(2, 1), e(3, -1), zero(), zero()],
        vec![e(3, 1), zero(), zero(), zero()],
    ];
    // (e1e2)* = e2* e1* = e2e1 = -e1e2
    let involution = vec![e(0, 1), e(1, -1), e(2, -1), e(3, -1)];
    GradedAlgebra::new(AlgebraData {
        name: format!("G2^{{{},{}}}", group.label(g), group.label(h)),
        group: group.clone(),
        basis_labels: vec!["1".into(), "e1".into(), "e2".into(), "e1e2".into()],
        products,
        grades: vec![group.identity(), h, g, gh],
        involution: Some(involution),
    })
}

/// The one-dimensional algebra `F` in grade 1, with the trivial involution
/// when `star` is set.
pub fn field(group: &FiniteGroup, star: bool) -> Result<GradedAlgebra, AlgebraError> {
    GradedAlgebra::new(AlgebraData {
        name: "F".into(),
        group: group.clone(),
        basis_labels: vec!["1".into()],
        products: vec![vec![vec![rat(1)]]],
        grades: vec![group.identity()],
        involution: star.then(|| vec![vec![rat(1)]]),
    })
}

/// `M_2` with trivial grading over the trivial group and the transpose
/// involution.
pub fn m2_transpose() -> Result<GradedAlgebra, AlgebraError> {
    let units = [(1, 1), (1, 2), (2, 1), (2, 2)];
    let group = FiniteGroup::trivial();
    let involution = units
        .iter()
        .map(|&(r, c)| {
            let mut v = vec![Rat::zero(); 4];
            v[units.iter().position(|&u| u == (c, r)).unwrap()] = rat(1);
            v
        })
        .collect();
    GradedAlgebra::new(AlgebraData {
        name: "M2^t".into(),
        group: group.clone(),
        basis_labels: units.iter().map(|&(r, c)| unit_label(r, c)).collect(),
        products: matrix_unit_products(&units),
        grades: vec![group.identity(); 4],
        involution: Some(involution),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Kind;

    fn c2() -> (FiniteGroup, GroupElem) {
        let g = FiniteGroup::cyclic(2).unwrap();
        let gen = g.element_by_label("g").unwrap();
        (g, gen)
    }

    #[test]
    fn ut2_grading() {
        let (g, gen) = c2();
        let a = ut2(&g, gen).unwrap();
        let comp = a.homogeneous_component_basis(gen, Kind::Plain).unwrap();
        assert_eq!(comp.vectors, vec![a.basis_vector(1)]);
        let trivial = ut2(&g, g.identity()).unwrap();
        assert!((0..3).all(|i| trivial.grade_of(i) == g.identity()));
        assert_eq!(trivial.support(), vec![g.identity()]);
    }

    #[test]
    fn ut2_products() {
        let (g, gen) = c2();
        let a = ut2(&g, gen).unwrap();
        let (e11, e12) = (a.basis_vector(0), a.basis_vector(1));
        assert_eq!(a.multiply(&e11, &e12), e12);
        assert_eq!(a.multiply(&e12, &e11), a.zero());
        assert_eq!(a.multiply(&e12, &e12), a.zero());
    }

    #[test]
    fn k_grading_and_products() {
        let (g, gen) = c2();
        let k = k_algebra(&g, gen).unwrap();
        let (e22, e23) = (k.basis_vector(2), k.basis_vector(3));
        assert_eq!(k.multiply(&e22, &e23), e23);
        assert_eq!(k.multiply(&e23, &e22), k.zero());
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let two = c4.element_by_label("g^2").unwrap();
        let k4 = k_algebra(&c4, two).unwrap();
        for r in c4.elements().filter(|&r| r != c4.identity() && r != two) {
            assert!(k4.component(r, Kind::Plain).is_empty());
        }
    }

    #[test]
    fn k_requires_order_two() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let gen = c3.element_by_label("g").unwrap();
        assert_eq!(
            k_algebra(&c3, gen).unwrap_err(),
            AlgebraError::ElementNotOrderTwo("g".into())
        );
    }

    #[test]
    fn grassmann_structure() {
        let v4 = FiniteGroup::product(&[2, 2]).unwrap();
        let g = v4.element_by_label("(1,0)").unwrap();
        let h = v4.element_by_label("(0,1)").unwrap();
        let a = grassmann2(&v4, g, h).unwrap();
        assert_eq!(v4.label(a.grade_of(3)), "gh");
        assert_eq!(a.grade_of(3), v4.element_by_label("(1,1)").unwrap());
        let (one, e1, e2, e12) = (a.basis_vector(0), a.basis_vector(1), a.basis_vector(2), a.basis_vector(3));
        let neg = |v: &Coords| v.iter().map(|x| -x.clone()).collect::<Coords>();
        assert_eq!(a.involve(&e1).unwrap(), neg(&e1));
        assert_eq!(a.involve(&e12).unwrap(), neg(&e12));
        assert_eq!(a.multiply(&e2, &e1), neg(&e12));
        assert_eq!(a.involve(&one).unwrap(), one);
        // the identity is symmetric, so the skew part of grade 1 vanishes
        assert!(a.component(v4.identity(), Kind::Skew).is_empty());
        assert_eq!(a.component(v4.identity(), Kind::Symmetric).len(), 1);
    }

    #[test]
    fn grassmann_preconditions() {
        let v4 = FiniteGroup::product(&[2, 2]).unwrap();
        let g = v4.element_by_label("g").unwrap();
        assert!(matches!(grassmann2(&v4, g, g), Err(AlgebraError::PreconditionViolation(_))));
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let gen = c2.element_by_label("g").unwrap();
        assert!(matches!(grassmann2(&c2, gen, gen), Err(AlgebraError::PreconditionViolation(_))));
        assert!(grassmann2(&c2, gen, c2.identity()).is_ok());
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let (a, b) = (c3.element_by_label("g").unwrap(), c3.element_by_label("g^2").unwrap());
        assert!(matches!(grassmann2(&c3, a, b), Err(AlgebraError::PreconditionViolation(_))));
    }

    #[test]
    fn direct_sum_dimensions() {
        let (g, gen) = c2();
        let v4 = FiniteGroup::product(&[2, 2]).unwrap();
        let algebras = vec![
            ut2(&g, gen).unwrap(),
            k_algebra(&g, gen).unwrap(),
            grassmann2(&v4, v4.element_by_label("g").unwrap(), v4.element_by_label("h").unwrap()).unwrap(),
            m2_transpose().unwrap(),
            field(&g, true).unwrap(),
        ];
        for a in &algebras {
            let plain: usize = a.group().elements().map(|x| a.component(x, Kind::Plain).len()).sum();
            assert_eq!(plain, a.dim(), "{}", a.name());
            if a.has_star() {
                let split: usize = a
                    .group()
                    .elements()
                    .map(|x| a.component(x, Kind::Symmetric).len() + a.component(x, Kind::Skew).len())
                    .sum();
                assert_eq!(split, a.dim(), "{}", a.name());
            }
        }
    }
}
