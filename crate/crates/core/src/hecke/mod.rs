//! The Iwahori–Hecke algebra `H_q̄(S_p)` at `q̄ = ζ_m`, over `ℚ(ζ_m)`.
//!
//! Basis `T_w`, `w ∈ S_p`, with
//! `T_w·T_i = T_{w s_i}` if `ℓ(w s_i) > ℓ(w)` and
//! `(1−q̄)·T_w + q̄·T_{w s_i}` otherwise.

mod cyclotomic;
mod simples;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

pub use cyclotomic::{cyclotomic_polynomial, totient, CyclotomicField, CyclotomicNumber};
pub use simples::{count_simples, radical, radical_basis, trace_form_gram, SimpleCount, SplitAudit};

/// Dense coordinates in the basis `{T_w}` of a [`HeckeAlgebra`], ordered as
/// [`HeckeAlgebra::basis`].
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    p: usize,
    coeffs: Vec<CyclotomicNumber>,
}

impl HeckeElement {
    pub fn rank(&self) -> usize {
        self.p
    }

    pub fn coeffs(&self) -> &[CyclotomicNumber] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CyclotomicNumber::is_zero)
    }

    pub fn scale(&self, s: &CyclotomicNumber) -> Self {
        HeckeElement { p: self.p, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    fn from_coeffs(p: usize, coeffs: Vec<CyclotomicNumber>) -> Self {
        HeckeElement { p, coeffs }
    }
}

impl std::ops::Add for &HeckeElement {
    type Output = HeckeElement;

    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.p, rhs.p, "adding Hecke elements of different rank");
        HeckeElement { p: self.p, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl std::ops::Sub for &HeckeElement {
    type Output = HeckeElement;

    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.p, rhs.p, "subtracting Hecke elements of different rank");
        HeckeElement { p: self.p, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = Permutation::all(self.p);
        let terms: Vec<String> =
            basis.iter().zip(&self.coeffs).filter(|(_, c)| !c.is_zero()).map(|(w, c)| format!("[{c}]T{w}")).collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

pub struct HeckeAlgebra {
    p: usize,
    field: Arc<CyclotomicField>,
    q: CyclotomicNumber,
    one_minus_q: CyclotomicNumber,
    basis: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    lengths: Vec<usize>,
    /// `right[w][i]` is the index of `w·s_i`.
    right: Vec<Vec<usize>>,
    /// `left[w][i]` is the index of `s_i·w`.
    left: Vec<Vec<usize>>,
}

impl HeckeAlgebra {
    pub fn new(p: usize, m: u32) -> Result<Self> {
        if p == 0 || p > 7 {
            return Err(Error::OutOfRange { what: "p", detail: format!("need 1 <= p <= 7, got {p}") });
        }
        let field = CyclotomicField::new(m)?;
        let q = field.zeta();
        let one_minus_q = &field.one() - &q;
        let basis = Permutation::all(p);
        let index: HashMap<Permutation, usize> = basis.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        let lengths = basis.iter().map(Permutation::length).collect();
        let right = basis.iter().map(|w| (0..p - 1).map(|i| index[&w.times_simple(i)]).collect()).collect();
        let left = basis
            .iter()
            .map(|w| (0..p - 1).map(|i| index[&Permutation::simple(p, i).compose(w)]).collect())
            .collect();
        Ok(HeckeAlgebra { p, field, q, one_minus_q, basis, index, lengths, right, left })
    }

    pub fn rank(&self) -> usize {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.field.m()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// The deformation parameter `q̄ = ζ_m`.
    pub fn q(&self) -> &CyclotomicNumber {
        &self.q
    }

    pub fn basis(&self) -> &[Permutation] {
        &self.basis
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn zero(&self) -> HeckeElement {
        HeckeElement::from_coeffs(self.p, vec![self.field.zero(); self.dim()])
    }

    pub fn one(&self) -> HeckeElement {
        self.basis_element(0)
    }

    /// `T_w` for the `k`-th basis permutation.
    pub fn basis_element(&self, k: usize) -> HeckeElement {
        let mut e = self.zero();
        e.coeffs[k] = self.field.one();
        e
    }

    pub fn t(&self, w: &Permutation) -> Result<HeckeElement> {
        let k = self
            .index_of(w)
            .ok_or_else(|| Error::SizeMismatch { left: self.p, right: w.degree() })?;
        Ok(self.basis_element(k))
    }

    /// `T_i = T_{s_i}`, 0-based.
    pub fn generator(&self, i: usize) -> HeckeElement {
        self.basis_element(self.index[&Permutation::simple(self.p, i)])
    }

    pub fn scalar(&self, s: &CyclotomicNumber) -> HeckeElement {
        self.one().scale(s)
    }

    /// Coefficient of `T_w`.
    pub fn coeff(&self, a: &HeckeElement, w: &Permutation) -> CyclotomicNumber {
        self.index_of(w).map_or_else(|| self.field.zero(), |k| a.coeffs[k].clone())
    }

    /// Nonzero terms `(w, coefficient)`.
    pub fn terms<'a>(&'a self, a: &'a HeckeElement) -> impl Iterator<Item = (&'a Permutation, &'a CyclotomicNumber)> + 'a {
        self.basis.iter().zip(&a.coeffs).filter(|(_, c)| !c.is_zero())
    }

    pub fn from_vector(&self, coeffs: Vec<CyclotomicNumber>) -> HeckeElement {
        assert_eq!(coeffs.len(), self.dim());
        HeckeElement::from_coeffs(self.p, coeffs)
    }

    /// `a·T_i`.
    pub fn mul_generator_right(&self, a: &HeckeElement, i: usize) -> HeckeElement {
        let mut out = self.zero();
        for (w, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ws = self.right[w][i];
            if self.lengths[ws] > self.lengths[w] {
                out.coeffs[ws] = &out.coeffs[ws] + c;
            } else {
                out.coeffs[w] = &out.coeffs[w] + &(c * &self.one_minus_q);
                out.coeffs[ws] = &out.coeffs[ws] + &(c * &self.q);
            }
        }
        out
    }

    /// `T_i·a`.
    pub fn mul_generator_left(&self, i: usize, a: &HeckeElement) -> HeckeElement {
        let mut out = self.zero();
        for (w, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sw = self.left[w][i];
            if self.lengths[sw] > self.lengths[w] {
                out.coeffs[sw] = &out.coeffs[sw] + c;
            } else {
                out.coeffs[w] = &out.coeffs[w] + &(c * &self.one_minus_q);
                out.coeffs[sw] = &out.coeffs[sw] + &(c * &self.q);
            }
        }
        out
    }

    /// A right descent `i` of the `k`-th basis permutation, if it is not the identity.
    fn right_descent(&self, k: usize) -> Option<usize> {
        (0..self.p - 1).find(|&i| self.lengths[self.right[k][i]] < self.lengths[k])
    }

    /// Basis indices sorted by length, identity first.
    fn by_length(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.dim()).collect();
        order.sort_by_key(|&k| (self.lengths[k], k));
        order
    }

    /// `a·T_w` for every basis permutation `w`.
    pub fn right_products(&self, a: &HeckeElement) -> Vec<HeckeElement> {
        let mut out: Vec<Option<HeckeElement>> = vec![None; self.dim()];
        for k in self.by_length() {
            let value = match self.right_descent(k) {
                None => a.clone(),
                Some(i) => {
                    let shorter = out[self.right[k][i]].as_ref().expect("shorter element computed first");
                    self.mul_generator_right(shorter, i)
                }
            };
            out[k] = Some(value);
        }
        out.into_iter().map(|x| x.expect("all computed")).collect()
    }

    /// `a·T_w` by inserting a reduced word of `w` letter by letter.
    pub fn mul_basis_right(&self, a: &HeckeElement, w: &Permutation) -> HeckeElement {
        w.reduced_word().into_iter().fold(a.clone(), |acc, i| self.mul_generator_right(&acc, i))
    }

    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        hecke_multiply(self, a, b)
    }
}

/// Bilinear product in `H_q̄(S_p)`.
pub fn hecke_multiply(alg: &HeckeAlgebra, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
    assert_eq!(a.p, b.p, "multiplying Hecke elements of different rank");
    assert_eq!(a.p, alg.p, "Hecke element does not belong to this algebra");
    let support: Vec<usize> = (0..alg.dim()).filter(|&k| !b.coeffs[k].is_zero()).collect();
    let mut out = alg.zero();
    if support.len() <= alg.p {
        for k in support {
            let prod = alg.mul_basis_right(a, &alg.basis[k]);
            out = &out + &prod.scale(&b.coeffs[k]);
        }
    } else {
        for (k, prod) in alg.right_products(a).into_iter().enumerate() {
            if !b.coeffs[k].is_zero() {
                out = &out + &prod.scale(&b.coeffs[k]);
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub p: usize,
    pub m: u32,
    pub checks: usize,
    pub violations: Vec<String>,
}

impl PresentationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the quadratic, braid and far-commutation relations, and that
/// `T_w` equals the product of generators along its reduced word.
pub fn verify_presentation(p: usize, m: u32) -> Result<PresentationReport> {
    if p < 2 {
        return Err(Error::OutOfRange { what: "p", detail: format!("need p >= 2, got {p}") });
    }
    let alg = HeckeAlgebra::new(p, m)?;
    let one = alg.one();
    let mut checks = 0;
    let mut violations = Vec::new();
    let mut check = |name: String, lhs: HeckeElement, rhs: HeckeElement| {
        checks += 1;
        if lhs != rhs {
            violations.push(name);
        }
    };
    let gens: Vec<HeckeElement> = (0..p - 1).map(|i| alg.generator(i)).collect();
    for i in 0..p - 1 {
        let left = &gens[i] - &one;
        let right = &gens[i] + &alg.scalar(alg.q());
        check(format!("(T{0}-1)(T{0}+q)=0", i + 1), alg.mul(&left, &right), alg.zero());
        if i + 1 < p - 1 {
            let a = alg.mul(&alg.mul(&gens[i], &gens[i + 1]), &gens[i]);
            let b = alg.mul(&alg.mul(&gens[i + 1], &gens[i]), &gens[i + 1]);
            check(format!("T{0}T{1}T{0}=T{1}T{0}T{1}", i + 1, i + 2), a, b);
        }
        for j in i + 2..p - 1 {
            check(format!("T{}T{}=T{}T{}", i + 1, j + 1, j + 1, i + 1), alg.mul(&gens[i], &gens[j]), alg.mul(&gens[j], &gens[i]));
        }
    }
    for (k, w) in alg.basis().iter().enumerate() {
        // Left insertion, so this is independent of the right-multiplication rule.
        let product = w.reduced_word().into_iter().rev().fold(one.clone(), |acc, i| alg.mul_generator_left(i, &acc));
        check(format!("T_{w} from reduced word"), product, alg.basis_element(k));
    }
    Ok(PresentationReport { p, m, checks, violations })
}

#[derive(Clone, Debug, Serialize)]
pub struct AssociativityReport {
    pub p: usize,
    pub m: u32,
    pub seed: u64,
    pub samples: usize,
    /// Triples `(a, b, c)` with `(T_a T_b) T_c ≠ T_a (T_b T_c)`.
    pub failures: Vec<[Permutation; 3]>,
}

impl AssociativityReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares `(T_a T_b) T_c` with `T_a (T_b T_c)` on `samples` basis triples
/// drawn from a ChaCha8 stream seeded with `seed`.
pub fn check_associativity(p: usize, m: u32, samples: usize, seed: u64) -> Result<AssociativityReport> {
    let alg = HeckeAlgebra::new(p, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let idx = [rng.gen_range(0..alg.dim()), rng.gen_range(0..alg.dim()), rng.gen_range(0..alg.dim())];
        let [x, y, z] = idx.map(|k| alg.basis_element(k));
        if alg.mul(&alg.mul(&x, &y), &z) != alg.mul(&x, &alg.mul(&y, &z)) {
            failures.push(idx.map(|k| alg.basis()[k].clone()));
        }
    }
    Ok(AssociativityReport { p, m, seed, samples, failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_relation_expansion() {
        for m in [2, 3, 4] {
            let alg = HeckeAlgebra::new(3, m).unwrap();
            let t = alg.generator(0);
            let expected = &t.scale(&alg.one_minus_q) + &alg.scalar(alg.q());
            assert_eq!(alg.mul(&t, &t), expected);
        }
        // q̄ = −1: (T_1 − 1)² = 0
        let alg = HeckeAlgebra::new(2, 2).unwrap();
        let x = &alg.generator(0) - &alg.one();
        assert!(alg.mul(&x, &x).is_zero());
    }

    #[test]
    fn identity_and_braid_examples() {
        let alg = HeckeAlgebra::new(3, 3).unwrap();
        let a = &alg.generator(1).scale(&alg.field().zeta()) + &alg.generator(0);
        assert_eq!(alg.mul(&alg.one(), &a), a);
        assert_eq!(alg.mul(&a, &alg.one()), a);
        let (t1, t2) = (alg.generator(0), alg.generator(1));
        let lhs = alg.mul(&alg.mul(&t1, &t2), &t1);
        let rhs = alg.mul(&t1, &alg.mul(&t2, &t1));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, alg.t(&Permutation::new(vec![2, 1, 0]).unwrap()).unwrap());
    }

    #[test]
    fn presentation_examples() {
        assert!(verify_presentation(3, 2).unwrap().ok());
        assert!(verify_presentation(4, 3).unwrap().ok());
        assert!(verify_presentation(2, 2).unwrap().ok());
        assert!(verify_presentation(1, 2).is_err());
    }

    fn assert_associative(alg: &HeckeAlgebra, a: usize, b: usize, c: usize) {
        let (x, y, z) = (alg.basis_element(a), alg.basis_element(b), alg.basis_element(c));
        assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)), "({a},{b},{c})");
    }

    #[test]
    fn associativity_exhaustive_small() {
        for p in 2..=3 {
            for m in [2, 3, 4] {
                let alg = HeckeAlgebra::new(p, m).unwrap();
                for a in 0..alg.dim() {
                    for b in 0..alg.dim() {
                        for c in 0..alg.dim() {
                            assert_associative(&alg, a, b, c);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn associativity_sampled() {
        for p in [4, 5] {
            for m in [2, 3, 4] {
                let report = check_associativity(p, m, 25, 7).unwrap();
                assert!(report.ok(), "{:?}", report.failures);
            }
        }
    }

    #[test]
    fn dense_and_sparse_products_agree() {
        let alg = HeckeAlgebra::new(4, 3).unwrap();
        let z = alg.field().zeta();
        let mut a = alg.zero();
        let mut b = alg.zero();
        for k in 0..alg.dim() {
            a = &a + &alg.basis_element(k).scale(&alg.field().from_int(k as i64 % 3 - 1));
            if k % 5 == 0 {
                b = &b + &alg.basis_element(k).scale(&z);
            }
        }
        let dense = alg.mul(&a, &b);
        let mut sparse = alg.zero();
        for k in 0..alg.dim() {
            if !b.coeffs()[k].is_zero() {
                sparse = &sparse + &alg.mul_basis_right(&a, &alg.basis()[k]).scale(&b.coeffs()[k]);
            }
        }
        assert_eq!(dense, sparse);
    }
}
