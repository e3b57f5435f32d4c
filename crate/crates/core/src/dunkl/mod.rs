//! The polynomial representation `ℂ[x_1, …, x_n]` of `H_c(S_n, ℂⁿ)`.
//!
//! `x_i` acts by multiplication, `S_n` by permuting variables, and `y_i` by
//! the Dunkl operator
//!
//! ```text
//! D_i f = ∂_i f − c Σ_{j≠i} (f − s_ij f) / (x_i − x_j).
//! ```
//!
//! The sign is fixed by the commutation relation
//! `[y, x] = ⟨y, x⟩ − Σ_s c ⟨y, α_s⟩⟨α_s^∨, x⟩ s`, with `α_s = x_i − x_j`,
//! `α_s^∨ = y_i − y_j` and `λ_s = −1`; [`verify_relations`] checks it.

mod ideal;
pub mod polynomial;

use num_traits::{One, Zero};
use serde::Serialize;

pub use ideal::{ideal_stability_check, ideal_stability_check_with, vanishing_ideal_basis, GeneratorCheck, StabilityReport};
pub use polynomial::{monomials_of_degree, Exponents, PolyTerm, SparsePolynomial};

use crate::error::{Error, Result};
use crate::linalg;
use crate::permutation::Permutation;
use crate::rational::{self, Rational};

/// A reflection `s_ij` with its root data.
#[derive(Clone, Debug, PartialEq)]
pub struct ReflectionData {
    pub i: usize,
    pub j: usize,
    /// `α_s = x_i − x_j ∈ h*`, as coordinates.
    pub alpha: Vec<Rational>,
    /// `α_s^∨ = y_i − y_j ∈ h`, as coordinates.
    pub alpha_check: Vec<Rational>,
    pub lambda_s: Rational,
}

impl ReflectionData {
    pub fn new(n: usize, i: usize, j: usize) -> Self {
        let mut alpha = vec![Rational::zero(); n];
        alpha[i] = Rational::one();
        alpha[j] = -Rational::one();
        ReflectionData { i, j, alpha_check: alpha.clone(), alpha, lambda_s: -Rational::one() }
    }

    /// `⟨α_s^∨, α_s⟩`; equals 2 under the chosen normalization.
    pub fn pairing(&self) -> Rational {
        self.alpha.iter().zip(&self.alpha_check).map(|(a, b)| a * b).sum()
    }

    pub fn permutation(&self, n: usize) -> Permutation {
        Permutation::transposition(n, self.i, self.j)
    }
}

/// All transpositions of `S_n`, `i < j`.
pub fn reflections(n: usize) -> Vec<ReflectionData> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| ReflectionData::new(n, i, j))).collect()
}

/// Number of variables and the (constant) parameter `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    pub n: usize,
    pub c: Rational,
}

impl EngineConfig {
    pub fn new(n: usize, c: Rational) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange { what: "n", detail: format!("need n >= 2, got {n}") });
        }
        Ok(EngineConfig { n, c })
    }

    fn check(&self, f: &SparsePolynomial) -> Result<()> {
        if f.nvars() != self.n {
            return Err(Error::SizeMismatch { left: f.nvars(), right: self.n });
        }
        Ok(())
    }

    /// `D_y f` for `y ∈ h` given by coordinates. The reflection term uses
    /// `2c/(1 − λ_s) = c` for `λ_s = −1`.
    pub fn dunkl_along(&self, y: &[Rational], f: &SparsePolynomial) -> Result<SparsePolynomial> {
        self.check(f)?;
        let mut out = SparsePolynomial::zero(self.n);
        for (i, yi) in y.iter().enumerate() {
            if !yi.is_zero() {
                out = &out + &f.partial(i).scale(yi);
            }
        }
        let two = rational::int(2);
        for s in reflections(self.n) {
            let pairing: Rational = y.iter().zip(&s.alpha).map(|(a, b)| a * b).sum();
            if pairing.is_zero() {
                continue;
            }
            let quotient = f.divided_difference(s.i, s.j);
            let numerator = f - &f.swap_vars(s.i, s.j);
            let alpha = &SparsePolynomial::variable(self.n, s.i) - &SparsePolynomial::variable(self.n, s.j);
            assert_eq!(&alpha * &quotient, numerator, "divided difference left a remainder");
            let weight = &self.c * &two / (Rational::one() - &s.lambda_s) * pairing;
            out = &out - &quotient.scale(&weight);
        }
        Ok(out)
    }

    /// `D_i f` (0-based `i`).
    pub fn dunkl(&self, i: usize, f: &SparsePolynomial) -> Result<SparsePolynomial> {
        if i >= self.n {
            return Err(Error::OutOfRange { what: "index", detail: format!("{i} >= {}", self.n) });
        }
        let mut y = vec![Rational::zero(); self.n];
        y[i] = Rational::one();
        self.dunkl_along(&y, f)
    }

    /// `eu·f = Σ_i x_i D_i f + Σ_s c·2/(λ_s − 1)·s f = Σ_i x_i D_i f − c Σ_{i<j} s_ij f`.
    pub fn euler(&self, f: &SparsePolynomial) -> Result<SparsePolynomial> {
        self.check(f)?;
        let mut out = SparsePolynomial::zero(self.n);
        for i in 0..self.n {
            out = &out + &self.dunkl(i, f)?.mul_var(i);
        }
        let two = rational::int(2);
        for s in reflections(self.n) {
            let weight = &self.c * &two / (&s.lambda_s - Rational::one());
            out = &out + &f.swap_vars(s.i, s.j).scale(&weight);
        }
        Ok(out)
    }

    /// `d − c·n(n−1)/2`: the eigenvalue of `eu` on homogeneous polynomials of degree `d`.
    pub fn euler_eigenvalue(&self, d: u32) -> Rational {
        let pairs = rational::int((self.n * (self.n - 1) / 2) as i64);
        rational::int(i64::from(d)) - &self.c * pairs
    }

    /// Basis of the degree-`d` polynomials killed by every `D_i`.
    pub fn singular_vectors(&self, d: u32) -> Result<Vec<SparsePolynomial>> {
        if d == 0 {
            return Err(Error::OutOfRange { what: "degree", detail: "singular vectors need d >= 1".into() });
        }
        let cols = monomials_of_degree(self.n, d);
        let targets = monomials_of_degree(self.n, d - 1);
        let images: Vec<Vec<SparsePolynomial>> = cols
            .iter()
            .map(|e| (0..self.n).map(|i| self.dunkl(i, &SparsePolynomial::monomial(e.clone(), Rational::one()))).collect())
            .collect::<Result<_>>()?;
        let mut rows = Vec::with_capacity(self.n * targets.len());
        for i in 0..self.n {
            for t in &targets {
                rows.push(images.iter().map(|img| img[i].coeff(t)).collect::<Vec<_>>());
            }
        }
        let kernel = linalg::kernel(&rows, cols.len(), &Rational::zero());
        Ok(kernel
            .into_iter()
            .map(|v| {
                let mut f = SparsePolynomial::zero(self.n);
                for (e, c) in cols.iter().zip(v) {
                    f.add_term(e.clone(), c);
                }
                f
            })
            .collect())
    }
}

/// The isomorphism `H_c → H_{−c}` induced by `s ↦ −s`.
pub fn sign_twist(cfg: &EngineConfig) -> EngineConfig {
    EngineConfig { n: cfg.n, c: -cfg.c.clone() }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationViolation {
    pub relation: String,
    pub input: SparsePolynomial,
    pub difference: SparsePolynomial,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub n: usize,
    #[serde(serialize_with = "rational::serialize")]
    pub c: Rational,
    pub max_degree: u32,
    pub basis_size: usize,
    pub checks: usize,
    pub violations: Vec<RelationViolation>,
}

impl RelationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn monomial_basis_up_to(n: usize, max_degree: u32) -> Vec<SparsePolynomial> {
    (0..=max_degree)
        .flat_map(|d| monomials_of_degree(n, d))
        .map(|e| SparsePolynomial::monomial(e, Rational::one()))
        .collect()
}

struct Checker {
    checks: usize,
    violations: Vec<RelationViolation>,
}

impl Checker {
    fn expect(&mut self, relation: impl FnOnce() -> String, input: &SparsePolynomial, lhs: SparsePolynomial, rhs: SparsePolynomial) {
        self.checks += 1;
        let difference = &lhs - &rhs;
        if !difference.is_zero() {
            self.violations.push(RelationViolation { relation: relation(), input: input.clone(), difference });
        }
    }
}

/// Checks every defining relation of `H_c` on all monomials of degree at most
/// `max_degree`:
///
/// * `[D_i, X_i] = 1 − c Σ_{k≠i} s_ik` and `[D_i, X_j] = c s_ij` for `i ≠ j`,
/// * `[D_i, D_j] = 0` and `[X_i, X_j] = 0`,
/// * `w D_i w⁻¹ = D_{w(i)}` and `w X_i w⁻¹ = X_{w(i)}` for every `w ∈ S_n`.
pub fn verify_relations(cfg: &EngineConfig, max_degree: u32) -> Result<RelationReport> {
    if max_degree < 1 {
        return Err(Error::OutOfRange { what: "degree", detail: "relation checks need degree >= 1".into() });
    }
    let n = cfg.n;
    let basis = monomial_basis_up_to(n, max_degree);
    let group = Permutation::all(n);
    let mut checker = Checker { checks: 0, violations: Vec::new() };

    for f in &basis {
        let d: Vec<SparsePolynomial> = (0..n).map(|i| cfg.dunkl(i, f)).collect::<Result<_>>()?;
        for i in 0..n {
            for j in 0..n {
                let lhs = &cfg.dunkl(i, &f.mul_var(j))? - &d[i].mul_var(j);
                let rhs = if i == j {
                    let mut r = f.clone();
                    for k in (0..n).filter(|&k| k != i) {
                        r = &r - &f.swap_vars(i, k).scale(&cfg.c);
                    }
                    r
                } else {
                    f.swap_vars(i, j).scale(&cfg.c)
                };
                checker.expect(|| format!("[y{},x{}]", i + 1, j + 1), f, lhs, rhs);

                if i < j {
                    let lhs = &cfg.dunkl(i, &d[j])? - &cfg.dunkl(j, &d[i])?;
                    checker.expect(|| format!("[y{},y{}]", i + 1, j + 1), f, lhs, SparsePolynomial::zero(n));
                    let lhs = &f.mul_var(j).mul_var(i) - &f.mul_var(i).mul_var(j);
                    checker.expect(|| format!("[x{},x{}]", i + 1, j + 1), f, lhs, SparsePolynomial::zero(n));
                }
            }
        }
        for w in &group {
            let w_inv = w.inverse();
            let pulled = f.permute(&w_inv)?;
            for i in 0..n {
                let lhs = cfg.dunkl(i, &pulled)?.permute(w)?;
                checker.expect(|| format!("{w}·y{}·{w}^-1", i + 1), f, lhs, d[w.apply(i)].clone());
                let lhs = pulled.mul_var(i).permute(w)?;
                checker.expect(|| format!("{w}·x{}·{w}^-1", i + 1), f, lhs, f.mul_var(w.apply(i)));
            }
        }
    }
    Ok(RelationReport {
        n,
        c: cfg.c.clone(),
        max_degree,
        basis_size: basis.len(),
        checks: checker.checks,
        violations: checker.violations,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerReport {
    pub n: usize,
    #[serde(serialize_with = "rational::serialize")]
    pub c: Rational,
    pub max_degree: u32,
    /// `(degree, expected eigenvalue, monomials checked)`.
    pub spectrum: Vec<EulerLayer>,
    pub violations: Vec<RelationViolation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerLayer {
    pub degree: u32,
    #[serde(serialize_with = "rational::serialize")]
    pub eigenvalue: Rational,
    pub monomials: usize,
}

impl EulerReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `eu` acts on each degree-`d` monomial by `d − c·n(n−1)/2`,
/// and that `[eu, X_i] = X_i`, `[eu, D_i] = −D_i` on all monomials of degree
/// at most `max_degree`.
pub fn verify_euler(cfg: &EngineConfig, max_degree: u32) -> Result<EulerReport> {
    let n = cfg.n;
    let mut checker = Checker { checks: 0, violations: Vec::new() };
    let mut spectrum = Vec::new();
    for d in 0..=max_degree {
        let monomials = monomials_of_degree(n, d);
        let eigenvalue = cfg.euler_eigenvalue(d);
        for e in &monomials {
            let f = SparsePolynomial::monomial(e.clone(), Rational::one());
            let eu_f = cfg.euler(&f)?;
            checker.expect(|| format!("eu on degree {d}"), &f, eu_f.clone(), f.scale(&eigenvalue));
            for i in 0..n {
                let lhs = &cfg.euler(&f.mul_var(i))? - &eu_f.mul_var(i);
                checker.expect(|| format!("[eu,x{}]", i + 1), &f, lhs, f.mul_var(i));
                let di = cfg.dunkl(i, &f)?;
                let lhs = &cfg.euler(&di)? - &cfg.dunkl(i, &eu_f)?;
                checker.expect(|| format!("[eu,y{}]", i + 1), &f, lhs, -&di);
            }
        }
        spectrum.push(EulerLayer { degree: d, eigenvalue, monomials: monomials.len() });
    }
    Ok(EulerReport { n, c: cfg.c.clone(), max_degree, spectrum, violations: checker.violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn x(n: usize, i: usize) -> SparsePolynomial {
        SparsePolynomial::variable(n, i)
    }

    fn konst(n: usize, c: Rational) -> SparsePolynomial {
        SparsePolynomial::constant(n, c)
    }

    #[test]
    fn reflection_normalization() {
        for s in reflections(4) {
            assert_eq!(s.pairing(), int(2));
            assert_eq!(s.lambda_s, int(-1));
        }
        assert_eq!(reflections(4).len(), 6);
    }

    #[test]
    fn dunkl_examples() {
        let c = rat(2, 9);
        let cfg = EngineConfig::new(2, c.clone()).unwrap();
        assert!(cfg.dunkl(0, &SparsePolynomial::one(2)).unwrap().is_zero());
        assert_eq!(cfg.dunkl(0, &x(2, 0)).unwrap(), konst(2, int(1) - &c));
        assert_eq!(cfg.dunkl(0, &x(2, 1)).unwrap(), konst(2, c.clone()));
        assert!(cfg.dunkl(2, &x(2, 1)).is_err());
        assert!(cfg.dunkl(0, &x(3, 1)).is_err());
    }

    #[test]
    fn dunkl_is_linear_and_lowers_degree() {
        let cfg = EngineConfig::new(3, rat(5, 7)).unwrap();
        let f = &(&x(3, 0) * &x(3, 0)) * &x(3, 2);
        let g = &x(3, 1) * &x(3, 2);
        let sum = cfg.dunkl(1, &(&f + &g.scale(&int(3)))).unwrap();
        let parts = &cfg.dunkl(1, &f).unwrap() + &cfg.dunkl(1, &g).unwrap().scale(&int(3));
        assert_eq!(sum, parts);
        assert_eq!(cfg.dunkl(1, &f).unwrap().degree(), Some(2));
    }

    #[test]
    fn relations_hold_small() {
        for (n, c) in [(2, rat(1, 2)), (3, rat(5, 7))] {
            let report = verify_relations(&EngineConfig::new(n, c).unwrap(), 3).unwrap();
            assert!(report.ok(), "{:?}", report.violations.first());
        }
    }

    #[test]
    fn commutator_on_constant() {
        let c = rat(3, 11);
        let cfg = EngineConfig::new(2, c.clone()).unwrap();
        let one = SparsePolynomial::one(2);
        let lhs = &cfg.dunkl(0, &one.mul_var(0)).unwrap() - &cfg.dunkl(0, &one).unwrap().mul_var(0);
        assert_eq!(lhs, konst(2, int(1) - c));
    }

    #[test]
    fn wrong_sign_convention_is_caught() {
        // D_i with +c instead of −c violates [y_i, x_j] = c s_ij unless c = 0.
        let cfg = EngineConfig::new(2, rat(1, 2)).unwrap();
        let flipped = sign_twist(&cfg);
        let f = SparsePolynomial::one(2);
        let lhs = &flipped.dunkl(0, &f.mul_var(1)).unwrap() - &flipped.dunkl(0, &f).unwrap().mul_var(1);
        assert_ne!(lhs, f.swap_vars(0, 1).scale(&cfg.c));
    }

    #[test]
    fn euler_examples() {
        let c = rat(1, 4);
        let cfg = EngineConfig::new(2, c.clone()).unwrap();
        assert_eq!(cfg.euler(&SparsePolynomial::one(2)).unwrap(), konst(2, -c.clone()));
        assert_eq!(cfg.euler(&x(2, 0)).unwrap(), x(2, 0).scale(&(int(1) - &c)));
        let f = &x(2, 0) + &x(2, 1);
        assert_eq!(cfg.euler(&f).unwrap(), f.scale(&(int(1) - &c)));
        assert!(verify_euler(&cfg, 3).unwrap().ok());
    }

    #[test]
    fn singular_vector_examples() {
        let at = |n, c| EngineConfig::new(n, c).unwrap().singular_vectors(1).unwrap();
        let sv = at(2, rat(1, 2));
        assert_eq!(sv.len(), 1);
        let diff = &x(2, 0) - &x(2, 1);
        assert!(sv[0] == diff || sv[0] == -&diff);
        assert!(at(2, rat(1, 3)).is_empty());
        let sv = at(3, rat(1, 3));
        assert_eq!(sv.len(), 2);
        for v in &sv {
            // each basis vector lies in the span of differences: coefficients sum to 0
            let total: Rational = v.terms().map(|(_, c)| c.clone()).sum();
            assert!(total.is_zero());
        }
        assert!(EngineConfig::new(2, rat(1, 2)).unwrap().singular_vectors(0).is_err());
    }

    #[test]
    fn sign_twist_examples() {
        let cfg = EngineConfig::new(3, rat(1, 2)).unwrap();
        assert_eq!(sign_twist(&cfg).c, rat(-1, 2));
        assert_eq!(sign_twist(&sign_twist(&cfg)), cfg);
    }
}
