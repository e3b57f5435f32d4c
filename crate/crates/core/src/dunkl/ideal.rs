//! Graded pieces of the vanishing ideal `I_q` of the stratum
//! `X_q = ⋃_w w·X_q′` and their stability under Dunkl operators.
//!
//! Each translate `w·X_q′` is parametrized by gluing `q` blocks of `m`
//! coordinates to a common value; a polynomial vanishes on it iff the
//! substitution is zero. `(I_q)_d` is the common kernel of these
//! substitution maps on degree-`d` polynomials.

use num_traits::{One, Zero};
use serde::Serialize;

use super::polynomial::{coordinates, monomials_of_degree, SparsePolynomial};
use super::EngineConfig;
use crate::error::{check_modulus, Error, Result};
use crate::linalg;
use crate::rational::{self, Rational};

/// Every way to choose `q` disjoint unordered blocks of size `m` from
/// `{0, …, n−1}`, as a substitution map `variable ↦ parameter`.
fn block_gluings(n: usize, m: usize, q: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, m: usize, q: usize, min_first: usize, used: &mut Vec<bool>, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<usize>>) {
        if blocks.len() == q {
            let mut target = vec![usize::MAX; n];
            for (b, block) in blocks.iter().enumerate() {
                for &k in block {
                    target[k] = b;
                }
            }
            for (next, t) in (q..).zip(target.iter_mut().filter(|t| **t == usize::MAX)) {
                *t = next;
            }
            out.push(target);
            return;
        }
        // The block's smallest element increases with the block index, so
        // each unordered family is produced once.
        for first in min_first..n {
            if used[first] {
                continue;
            }
            used[first] = true;
            let rest: Vec<usize> = (first + 1..n).filter(|&k| !used[k]).collect();
            for tail in combinations(&rest, m - 1) {
                for &k in &tail {
                    used[k] = true;
                }
                let mut block = vec![first];
                block.extend(&tail);
                blocks.push(block);
                go(n, m, q, first + 1, used, blocks, out);
                blocks.pop();
                for &k in &tail {
                    used[k] = false;
                }
            }
            used[first] = false;
        }
    }
    let mut out = Vec::new();
    go(n, m, q, 0, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut tail in combinations(&items[i + 1..], k - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

fn vanishes_on(f: &SparsePolynomial, gluings: &[Vec<usize>], nparams: usize) -> bool {
    gluings.iter().all(|g| f.substitute(g, nparams).is_zero())
}

fn check_range(n: usize, m: u32, q: usize) -> Result<()> {
    check_modulus(m)?;
    if q == 0 || q * m as usize > n {
        return Err(Error::OutOfRange { what: "q", detail: format!("need 1 <= q <= n/m, got q={q}, n={n}, m={m}") });
    }
    Ok(())
}

/// Basis of `(I_q)_d`, the degree-`d` polynomials vanishing on `X_q`.
pub fn vanishing_ideal_basis(n: usize, m: u32, q: usize, d: u32) -> Result<Vec<SparsePolynomial>> {
    check_range(n, m, q)?;
    let gluings = block_gluings(n, m as usize, q);
    let nparams = n - q * (m as usize - 1);
    Ok(ideal_piece(n, &gluings, nparams, d))
}

fn ideal_piece(n: usize, gluings: &[Vec<usize>], nparams: usize, d: u32) -> Vec<SparsePolynomial> {
    let cols = monomials_of_degree(n, d);
    let targets = monomials_of_degree(nparams, d);
    let mut rows = Vec::new();
    for g in gluings {
        let images: Vec<Vec<Rational>> = cols
            .iter()
            .map(|e| coordinates(&SparsePolynomial::monomial(e.clone(), Rational::one()).substitute(g, nparams), &targets))
            .collect();
        for t in 0..targets.len() {
            rows.push(images.iter().map(|img| img[t].clone()).collect());
        }
    }
    linalg::kernel(&rows, cols.len(), &Rational::zero())
        .into_iter()
        .map(|v| {
            let mut f = SparsePolynomial::zero(n);
            for (e, c) in cols.iter().zip(v) {
                f.add_term(e.clone(), c);
            }
            f
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorCheck {
    pub degree: u32,
    pub generator: SparsePolynomial,
    pub stable: bool,
    /// 1-based indices `i` with `D_i(generator) ∉ I_q`.
    pub failing_dunkl: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilityReport {
    pub n: usize,
    pub m: u32,
    pub q: usize,
    #[serde(serialize_with = "rational::serialize")]
    pub c: Rational,
    pub max_degree: u32,
    pub translates: usize,
    /// `dim (I_q)_d` for `d = 1..=max_degree`.
    pub ideal_dims: Vec<usize>,
    pub generators: Vec<GeneratorCheck>,
    pub stable: bool,
}

/// Checks `D_i(I_q) ⊆ I_q` in degrees up to `max_degree` at `c = 1/m`.
pub fn ideal_stability_check(n: usize, m: u32, q: usize, max_degree: u32) -> Result<StabilityReport> {
    ideal_stability_check_with(n, m, q, max_degree, rational::rat(1, i64::from(m.max(1))))
}

/// As [`ideal_stability_check`], with an arbitrary `c` (for negative controls).
pub fn ideal_stability_check_with(n: usize, m: u32, q: usize, max_degree: u32, c: Rational) -> Result<StabilityReport> {
    check_range(n, m, q)?;
    let cfg = EngineConfig::new(n, c.clone())?;
    let gluings = block_gluings(n, m as usize, q);
    let nparams = n - q * (m as usize - 1);
    let mut ideal_dims = Vec::new();
    let mut generators = Vec::new();
    for d in 1..=max_degree {
        let piece = ideal_piece(n, &gluings, nparams, d);
        ideal_dims.push(piece.len());
        for g in piece {
            let mut failing = Vec::new();
            for i in 0..n {
                if !vanishes_on(&cfg.dunkl(i, &g)?, &gluings, nparams) {
                    failing.push(i + 1);
                }
            }
            generators.push(GeneratorCheck { degree: d, generator: g, stable: failing.is_empty(), failing_dunkl: failing });
        }
    }
    let stable = generators.iter().all(|g| g.stable);
    Ok(StabilityReport { n, m, q, c, max_degree, translates: gluings.len(), ideal_dims, generators, stable })
}
