//! Radical of `H_q̄(S_p)` and the number of simple modules.
//!
//! In characteristic zero the Jacobson radical is the kernel of the trace
//! form `(a, b) ↦ tr(L_{ab})` on the regular representation. Simples of
//! `H/rad` are counted by the dimension of its centre; that count is only
//! trusted after the centre has been split into primitive idempotents over
//! `ℚ(ζ_m)` and every block turns out to be a full matrix algebra by
//! dimension.

use num_complex::Complex64;
use serde::Serialize;

use super::cyclotomic::{integer_sqrt, CyclotomicNumber};
use super::{HeckeAlgebra, HeckeElement};
use crate::error::{check_modulus, Result};
use crate::linalg::{self, Subspace};
use crate::partitions::enumerate_m_regular;

/// Gram matrix `G[a][b] = tr(L_{T_a T_b})` in the basis order of `alg`.
pub fn trace_form_gram(alg: &HeckeAlgebra) -> Vec<Vec<CyclotomicNumber>> {
    let dim = alg.dim();
    // τ(T_u) = tr(L_{T_u}) = Σ_v [T_u T_v]_v
    let tau: Vec<CyclotomicNumber> = (0..dim)
        .map(|u| {
            let prods = alg.right_products(&alg.basis_element(u));
            prods.iter().enumerate().fold(alg.field.zero(), |acc, (v, x)| &acc + &x.coeffs[v])
        })
        .collect();
    // Row w is the functional x ↦ τ(T_w x); for w = w′s_i it is the row of
    // w′ composed with left multiplication by T_i.
    let mut rows: Vec<Option<Vec<CyclotomicNumber>>> = vec![None; dim];
    for k in alg.by_length() {
        let row = match alg.right_descent(k) {
            None => tau.clone(),
            Some(i) => {
                let f = rows[alg.right[k][i]].as_ref().expect("shorter row computed first");
                (0..dim)
                    .map(|v| {
                        let sv = alg.left[v][i];
                        if alg.lengths[sv] > alg.lengths[v] {
                            f[sv].clone()
                        } else {
                            &(&f[v] * &alg.one_minus_q) + &(&f[sv] * &alg.q)
                        }
                    })
                    .collect()
            }
        };
        rows[k] = Some(row);
    }
    rows.into_iter().map(|r| r.expect("all rows computed")).collect()
}

/// The radical as a subspace of coordinate vectors.
pub fn radical(alg: &HeckeAlgebra) -> Subspace<CyclotomicNumber> {
    let gram = trace_form_gram(alg);
    let kernel = linalg::kernel(&gram, alg.dim(), &alg.field.zero());
    Subspace::span(alg.dim(), &kernel)
}

/// Basis of the radical of `H_q̄(S_p)` at `q̄ = ζ_m`.
pub fn radical_basis(p: usize, m: u32) -> Result<Vec<HeckeElement>> {
    let alg = HeckeAlgebra::new(p, m)?;
    Ok(radical(&alg).basis().iter().map(|v| alg.from_vector(v.clone())).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitAudit {
    pub center_dim: usize,
    /// `dim e_k·(H/rad)` for each primitive central idempotent `e_k`.
    pub block_dims: Vec<usize>,
    pub passed: bool,
    pub warning: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SimpleCount {
    pub p: usize,
    pub m: u32,
    pub dim: usize,
    pub rad_dim: usize,
    /// Number of simple modules; only an upper bound when the audit fails.
    pub simples: usize,
    pub expected_m_regular: usize,
    pub ok: bool,
    pub audit: SplitAudit,
}

struct Quotient<'a> {
    alg: &'a HeckeAlgebra,
    rad: Subspace<CyclotomicNumber>,
}

impl Quotient<'_> {
    fn reduce(&self, a: &HeckeElement) -> HeckeElement {
        self.alg.from_vector(self.rad.reduce(&a.coeffs))
    }

    fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        self.reduce(&self.alg.mul(a, b))
    }

    fn is_zero(&self, a: &HeckeElement) -> bool {
        self.rad.contains(&a.coeffs)
    }

    /// Basis of the centre of `H/rad` as reduced representatives.
    fn center(&self) -> Vec<HeckeElement> {
        let alg = self.alg;
        let free: Vec<usize> = (0..alg.dim()).filter(|k| !self.rad.pivots().contains(k)).collect();
        let mut rows: Vec<Vec<CyclotomicNumber>> = Vec::new();
        for i in 0..alg.rank() - 1 {
            let comm: Vec<Vec<CyclotomicNumber>> = free
                .iter()
                .map(|&w| {
                    let t = alg.basis_element(w);
                    let c = &alg.mul_generator_right(&t, i) - &alg.mul_generator_left(i, &t);
                    self.rad.reduce(&c.coeffs)
                })
                .collect();
            for u in 0..alg.dim() {
                let row: Vec<CyclotomicNumber> = comm.iter().map(|c| c[u].clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        linalg::kernel(&rows, free.len(), &alg.field.zero())
            .into_iter()
            .map(|v| {
                let mut coeffs = vec![alg.field.zero(); alg.dim()];
                for (&w, c) in free.iter().zip(v) {
                    coeffs[w] = c;
                }
                alg.from_vector(coeffs)
            })
            .collect()
    }

    /// Monic minimal polynomial of `b` inside the unital algebra `e·Z`,
    /// ascending coefficients.
    fn minimal_polynomial(&self, b: &HeckeElement, e: &HeckeElement) -> Vec<CyclotomicNumber> {
        let zero = self.alg.field.zero();
        let mut powers = vec![e.clone()];
        loop {
            let next = self.mul(powers.last().expect("nonempty"), b);
            powers.push(next);
            let rows: Vec<Vec<CyclotomicNumber>> =
                (0..self.alg.dim()).map(|u| powers.iter().map(|x| x.coeffs[u].clone()).collect()).collect();
            if let Some(dep) = linalg::kernel(&rows, powers.len(), &zero).into_iter().next() {
                let lead = dep.last().expect("nonempty").inverse().expect("kernel vector of a minimal dependency");
                return dep.iter().map(|c| c * &lead).collect();
            }
        }
    }

    fn block_dim(&self, f: &HeckeElement) -> usize {
        let rows: Vec<Vec<CyclotomicNumber>> =
            self.alg.right_products(f).iter().map(|x| self.rad.reduce(&x.coeffs)).collect();
        linalg::rank(&rows)
    }
}

/// Complex roots of a monic polynomial by Durand–Kerner iteration.
fn complex_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let deg = coeffs.len() - 1;
    let mut roots: Vec<Complex64> = (0..deg).map(|k| Complex64::new(0.4, 0.9).powu(k as u32 + 1)).collect();
    let eval = |z: Complex64| coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
    for _ in 0..5000 {
        let mut delta = 0.0f64;
        for k in 0..deg {
            let denom: Complex64 = (0..deg).filter(|&j| j != k).map(|j| roots[k] - roots[j]).product();
            let step = eval(roots[k]) / denom;
            roots[k] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    roots
}

/// Roots of a monic polynomial over `ℚ(ζ_m)` lying in `ℚ(ζ_m)`, found
/// numerically under every embedding and confirmed exactly. Returns `None`
/// unless all of them are found.
fn exact_roots(poly: &[CyclotomicNumber]) -> Option<Vec<CyclotomicNumber>> {
    let field = poly[0].field().clone();
    let embeddings = field.embeddings();
    let per_embedding: Vec<Vec<Complex64>> = embeddings
        .iter()
        .map(|&j| complex_roots(&poly.iter().map(|c| c.embed(j)).collect::<Vec<_>>()))
        .collect();
    let deg = poly.len() - 1;
    let is_root = |r: &CyclotomicNumber| poly.iter().rev().fold(field.zero(), |acc, c| &(&acc * r) + c).is_zero();
    let mut found: Vec<CyclotomicNumber> = Vec::new();
    for &z in &per_embedding[0] {
        // A root r ∈ ℚ(ζ_m) has σ_j(r) among the roots of σ_j(poly); try
        // every choice of conjugates.
        let mut choice = vec![0usize; embeddings.len()];
        let hit = loop {
            let values: Vec<Complex64> =
                std::iter::once(z).chain((1..embeddings.len()).map(|e| per_embedding[e][choice[e]])).collect();
            if let Some(r) = CyclotomicNumber::recognize(&field, &values) {
                if is_root(&r) && !found.contains(&r) {
                    break Some(r);
                }
            }
            let Some(e) = (1..embeddings.len()).find(|&e| choice[e] + 1 < deg) else {
                break None;
            };
            choice[e] += 1;
            for c in choice.iter_mut().take(e).skip(1) {
                *c = 0;
            }
        };
        found.push(hit?);
    }
    Some(found)
}

/// Counts simple `H_q̄(S_p)`-modules at `q̄ = ζ_m` and audits splitness.
pub fn count_simples(p: usize, m: u32) -> Result<SimpleCount> {
    check_modulus(m)?;
    let alg = HeckeAlgebra::new(p, m)?;
    let rad = radical(&alg);
    let rad_dim = rad.dim();
    let quotient = Quotient { alg: &alg, rad };
    let center = quotient.center();
    let expected_m_regular = enumerate_m_regular(p, m)?.len();

    let mut warning = None;
    let mut pending = vec![quotient.reduce(&alg.one())];
    let mut primitive: Vec<HeckeElement> = Vec::new();
    'split: while let Some(e) = pending.pop() {
        let local: Vec<HeckeElement> = center.iter().map(|z| quotient.mul(&e, z)).collect();
        let local_dim = linalg::rank(&local.iter().map(|x| x.coeffs.clone()).collect::<Vec<_>>());
        if local_dim <= 1 {
            primitive.push(e);
            continue;
        }
        for b in &local {
            let poly = quotient.minimal_polynomial(b, &e);
            if poly.len() <= 2 {
                continue;
            }
            let Some(roots) = exact_roots(&poly) else {
                warning = Some(format!("a central element has eigenvalues outside Q(zeta_{m})"));
                primitive.push(e);
                continue 'split;
            };
            for (j, rj) in roots.iter().enumerate() {
                let mut f = e.clone();
                for (l, rl) in roots.iter().enumerate() {
                    if l != j {
                        let scale = (rj - rl).inverse().expect("distinct roots");
                        let factor = (b - &e.scale(rl)).scale(&scale);
                        f = quotient.mul(&f, &factor);
                    }
                }
                pending.push(f);
            }
            continue 'split;
        }
        warning = Some("no central element separates a non-primitive block".to_string());
        primitive.push(e);
    }

    let mut passed = warning.is_none();
    let sum = primitive.iter().fold(alg.zero(), |acc, f| &acc + f);
    if !quotient.is_zero(&(&sum - &alg.one())) {
        passed = false;
        warning.get_or_insert_with(|| "central idempotents do not sum to 1".to_string());
    }
    for f in &primitive {
        if !quotient.is_zero(&(&quotient.mul(f, f) - f)) {
            passed = false;
            warning.get_or_insert_with(|| "a block element is not idempotent".to_string());
        }
    }
    let block_dims: Vec<usize> = primitive.iter().map(|f| quotient.block_dim(f)).collect();
    let quotient_dim = alg.dim() - rad_dim;
    if block_dims.iter().any(|&d| integer_sqrt(d).is_none()) {
        passed = false;
        warning.get_or_insert_with(|| "a block dimension is not a perfect square".to_string());
    }
    if block_dims.iter().sum::<usize>() != quotient_dim || primitive.len() != center.len() {
        passed = false;
        warning.get_or_insert_with(|| "blocks do not exhaust the semisimple quotient".to_string());
    }
    let mut block_dims = block_dims;
    block_dims.sort_unstable_by(|a, b| b.cmp(a));
    let simples = center.len();
    Ok(SimpleCount {
        p,
        m,
        dim: alg.dim(),
        rad_dim,
        simples,
        expected_m_regular,
        ok: passed && simples == expected_m_regular,
        audit: SplitAudit { center_dim: center.len(), block_dims, passed, warning },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_rows_match_direct_traces() {
        let alg = HeckeAlgebra::new(3, 3).unwrap();
        let gram = trace_form_gram(&alg);
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let ab = alg.mul(&alg.basis_element(a), &alg.basis_element(b));
                let direct = alg
                    .right_products(&ab)
                    .iter()
                    .enumerate()
                    .fold(alg.field.zero(), |acc, (v, x)| &acc + &x.coeffs[v]);
                assert_eq!(gram[a][b], direct);
            }
        }
    }

    #[test]
    fn radical_examples() {
        let basis = radical_basis(2, 2).unwrap();
        assert_eq!(basis.len(), 1);
        let alg = HeckeAlgebra::new(2, 2).unwrap();
        let expected = &alg.generator(0) - &alg.one();
        // span{T_1 − T_e}
        assert!(Subspace::span(2, &[basis[0].coeffs().to_vec()]).contains(expected.coeffs()));
        assert!(radical_basis(2, 3).unwrap().is_empty());
        for m in 4..=6 {
            assert!(radical_basis(3, m).unwrap().is_empty());
        }
    }

    #[test]
    fn radical_is_two_sided_ideal() {
        for (p, m) in [(3, 2), (3, 3), (4, 2)] {
            let alg = HeckeAlgebra::new(p, m).unwrap();
            let rad = radical(&alg);
            assert!(rad.dim() > 0);
            for r in rad.basis() {
                let r = alg.from_vector(r.clone());
                for i in 0..p - 1 {
                    assert!(rad.contains(alg.mul_generator_right(&r, i).coeffs()));
                    assert!(rad.contains(alg.mul_generator_left(i, &r).coeffs()));
                }
            }
        }
    }

    #[test]
    fn simple_count_examples() {
        for (p, m, expected) in [(2, 2, 1), (2, 3, 2), (3, 2, 2), (3, 3, 2), (3, 4, 3), (1, 2, 1)] {
            let count = count_simples(p, m).unwrap();
            assert_eq!(count.simples, expected, "p={p} m={m}");
            assert_eq!(count.expected_m_regular, expected);
            assert!(count.audit.passed, "{:?}", count.audit);
            assert!(count.ok);
        }
    }

    #[test]
    fn generic_parameter_is_semisimple() {
        let count = count_simples(3, 5).unwrap();
        assert_eq!(count.rad_dim, 0);
        assert_eq!(count.audit.block_dims, vec![4, 1, 1]);
    }
}
