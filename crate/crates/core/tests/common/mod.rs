//! Independent oracles: a naive rational row reduction and the
//! substitution-grid identity test.

#![allow(dead_code)]

use std::collections::BTreeMap;

use gpw_core::builtins;
use gpw_core::eval::evaluate;
use gpw_core::linalg::rat;
use gpw_core::{Coords, FiniteGroup, GradedAlgebra, GradedPoly, Rat, Var};
use itertools::Itertools;
use num_traits::Zero;

/// Rank by textbook Gauss-Jordan elimination over the rationals.
pub fn naive_rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        let pivot_row: Vec<Rat> = m[rank].iter().map(|x| x / &pivot).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Grid points for every variable of `f`: a variable of degree `m` in a
/// component with basis `b_1..b_r` takes the values `Σ t_j b_j` with each
/// `t_j ∈ {0..m}`. A multihomogeneous polynomial vanishes on the algebra
/// iff it vanishes on every grid point.
pub fn grid_points(a: &GradedAlgebra, vars: &[(Var, usize)]) -> Vec<BTreeMap<Var, Coords>> {
    let per_var: Vec<Vec<Coords>> = vars
        .iter()
        .map(|&(v, m)| {
            let basis = a.component(v.grade, v.kind);
            (0..basis.len())
                .map(|_| 0..=m as i64)
                .multi_cartesian_product()
                .map(|ts| {
                    let mut u = a.zero();
                    for (t, b) in ts.iter().zip(basis) {
                        for (x, y) in u.iter_mut().zip(b) {
                            *x += rat(*t) * y;
                        }
                    }
                    u
                })
                .collect()
        })
        .collect();
    if per_var.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    per_var
        .iter()
        .map(|vals| 0..vals.len())
        .multi_cartesian_product()
        .map(|idx| vars.iter().zip(&idx).zip(&per_var).map(|((&(v, _), &i), vals)| (v, vals[i].clone())).collect())
        .collect()
}

fn multidegree(polys: &[GradedPoly]) -> Vec<(Var, usize)> {
    let mut deg: BTreeMap<Var, usize> = BTreeMap::new();
    for f in polys {
        for (v, m) in f.multidegree().expect("multihomogeneous") {
            let e = deg.entry(v).or_insert(0);
            *e = (*e).max(m);
        }
    }
    deg.into_iter().collect()
}

/// Rows: grid point x coordinate; columns: the polynomials evaluated
/// directly, without multilinearization.
pub fn grid_matrix(a: &GradedAlgebra, polys: &[GradedPoly]) -> Vec<Vec<Rat>> {
    let vars = multidegree(polys);
    let mut rows = Vec::new();
    for point in grid_points(a, &vars) {
        let values: Vec<Coords> = polys.iter().map(|f| evaluate(f, a, &point).expect("grid point is admissible")).collect();
        for k in 0..a.dim() {
            let row: Vec<Rat> = values.iter().map(|v| v[k].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    rows
}

pub fn grid_is_identity(a: &GradedAlgebra, f: &GradedPoly) -> bool {
    f.multihomogeneous_components().iter().all(|part| grid_matrix(a, std::slice::from_ref(part)).is_empty())
}

pub fn combination(polys: &[GradedPoly], coeffs: &[Rat]) -> GradedPoly {
    polys.iter().zip(coeffs).fold(GradedPoly::zero(polys[0].mode), |acc, (f, c)| acc.add(&f.scale(c)))
}

pub struct Builtins {
    pub c2: FiniteGroup,
    pub v4: FiniteGroup,
    pub ut2_g: GradedAlgebra,
    pub ut2_1: GradedAlgebra,
    pub k_g: GradedAlgebra,
    pub g2: GradedAlgebra,
    pub m2t: GradedAlgebra,
}

pub fn builtins() -> Builtins {
    let c2 = FiniteGroup::cyclic(2).unwrap();
    let g = c2.element_by_label("g").unwrap();
    let v4 = FiniteGroup::product(&[2, 2]).unwrap();
    let (vg, vh) = (v4.element_by_label("g").unwrap(), v4.element_by_label("h").unwrap());
    Builtins {
        ut2_g: builtins::ut2(&c2, g).unwrap(),
        ut2_1: builtins::ut2(&c2, c2.identity()).unwrap(),
        k_g: builtins::k_algebra(&c2, g).unwrap(),
        g2: builtins::grassmann2(&v4, vg, vh).unwrap(),
        m2t: builtins::m2_transpose().unwrap(),
        c2,
        v4,
    }
}
