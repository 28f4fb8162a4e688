//! Exact linear algebra over the rationals.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination on an integer
//! matrix obtained by clearing denominators column by column. A modular
//! rank over a 61-bit prime is available as a fast path: it never exceeds
//! the rational rank, so a full modular rank is already exact and anything
//! smaller is recomputed exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

/// 2^61 - 1.
pub const MODULUS: u64 = (1u64 << 61) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RankStrategy {
    /// Bareiss elimination only.
    Exact,
    /// Rank mod [`MODULUS`], confirmed exactly unless it is already full.
    #[default]
    ModularFirst,
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Rank of a dense row-major matrix.
pub fn rank(rows: &[Vec<Rat>], strategy: RankStrategy) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let bound = rows.len().min(ncols);
    if bound == 0 {
        return 0;
    }
    if strategy == RankStrategy::ModularFirst {
        if let Some(r) = rank_mod_p(rows) {
            if r == bound {
                return r;
            }
        }
    }
    rank_exact(rows)
}

/// Clears denominators column by column, yielding an integer matrix with
/// the same rank.
fn integer_matrix(rows: &[Vec<Rat>]) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut scale = vec![BigInt::one(); ncols];
    for row in rows {
        for (s, x) in scale.iter_mut().zip(row) {
            if !x.denom().is_one() {
                *s = s.lcm(x.denom());
            }
        }
    }
    rows.iter()
        .map(|row| {
            row.iter()
                .zip(&scale)
                .map(|(x, s)| x.numer() * (s / x.denom()))
                .collect()
        })
        .collect()
}

pub fn rank_exact(rows: &[Vec<Rat>]) -> usize {
    let mut m = integer_matrix(rows);
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for (x, p) in row[c + 1..].iter_mut().zip(&pivot_row[c + 1..]) {
                *x = (&pivot * &*x - &lead * p) / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

fn to_mod_p(x: &Rat) -> Option<u64> {
    let p = BigInt::from(MODULUS);
    let num = x.numer().mod_floor(&p).to_u64()?;
    let den = x.denom().mod_floor(&p).to_u64()?;
    if den == 0 {
        return None;
    }
    Some(mul_mod(num, inv_mod(den)))
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn sub_mod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + MODULUS - b
    }
}

fn inv_mod(a: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a;
    let mut e = MODULUS - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
    }
    result
}

/// Rank over GF(p); `None` if some denominator vanishes mod p.
pub fn rank_mod_p(rows: &[Vec<Rat>]) -> Option<usize> {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| row.iter().map(to_mod_p).collect::<Option<Vec<_>>>())
        .collect::<Option<_>>()?;
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = inv_mod(m[r][c]);
        for x in m[r][c..].iter_mut() {
            *x = mul_mod(*x, inv);
        }
        let (pivot_rows, rest) = m.split_at_mut(r + 1);
        let pivot_row = &pivot_rows[r];
        for row in rest.iter_mut() {
            let f = row[c];
            if f != 0 {
                for j in c..ncols {
                    row[j] = sub_mod(row[j], mul_mod(f, pivot_row[j]));
                }
            }
        }
        r += 1;
    }
    Some(r)
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rat>]) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right kernel `{v : M v = 0}`, one vector per free column,
/// with the free coordinate set to 1.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f].clone();
            }
            v
        })
        .collect()
}

/// Scales `v` so that its first nonzero entry is 1.
pub fn normalize(v: &mut [Rat]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        for x in v.iter_mut() {
            *x /= &lead;
        }
    }
}

pub fn transpose(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let ncols = rows.first().map_or(0, Vec::len);
    (0..ncols)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `-p` or `p/q` exactly.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    let d_neg = d.is_negative();
    let r = Rat::new(n, d.abs());
    Some(if d_neg { -r } else { r })
}
