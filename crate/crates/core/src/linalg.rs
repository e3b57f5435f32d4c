//! Exact dense linear algebra over a field: row reduction, kernels and
//! subspaces in reduced row echelon form.

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Minimal field interface. Elements carry whatever context they need
/// (the cyclotomic field needs its modulus), hence `zero_like`/`one_like`.
pub trait Field: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Panics on zero; callers only invert pivots.
    fn inv_ref(&self) -> Self;
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv_ref(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
}

/// Reduces `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].inv_ref();
        for x in rows[r].iter_mut().skip(col) {
            *x = x.mul_ref(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x = x.sub_ref(&factor.mul_ref(p));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{v : A v = 0}` for the matrix with the given rows and `ncols`
/// columns. `sample` supplies the field context.
pub fn kernel<F: Field>(rows: &[Vec<F>], ncols: usize, sample: &F) -> Vec<Vec<F>> {
    let zero = sample.zero_like();
    let one = sample.one_like();
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&free| !is_pivot[free])
        .map(|free| {
            let mut v = vec![zero.clone(); ncols];
            v[free] = one.clone();
            for (row, &p) in m.iter().zip(&pivots) {
                if !row[free].is_zero() {
                    v[p] = row[free].neg_ref();
                }
            }
            v
        })
        .collect()
}

/// A subspace of `F^n` held as an RREF basis.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        let mut basis = vectors.to_vec();
        debug_assert!(basis.iter().all(|v| v.len() == ambient));
        let pivots = rref(&mut basis);
        Subspace { ambient, basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical representative of `v` modulo the subspace: the result is
    /// zero in every pivot column.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for (x, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = x.sub_ref(&factor.mul_ref(b));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(Field::is_zero)
    }
}
