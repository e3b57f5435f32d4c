//! Fock space of the Heisenberg algebra `[α_i, α_j] = i·δ_{i,−j}` and the
//! bivariate series `tr_F(s^{A_1} t^{A_m})`.
//!
//! A partition `ν` stands for the basis vector `Π_i α_{−i}^{ν_i}·|0⟩`, where
//! `ν_i` is the multiplicity of the part `i`; the empty partition is the
//! vacuum. `α_i` (`i > 0`) annihilates the vacuum.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{check_modulus, Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    coefficients: BTreeMap<Partition, Rational>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(nu: Partition) -> Self {
        let mut v = Self::zero();
        v.add_term(nu, Rational::one());
        v
    }

    pub fn add_term(&mut self, nu: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coefficients.entry(nu.clone()).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coefficients.remove(&nu);
        }
    }

    pub fn coeff(&self, nu: &Partition) -> Rational {
        self.coefficients.get(nu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coefficients.iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (nu, x) in &self.coefficients {
            out.add_term(nu.clone(), x * c);
        }
        out
    }

    pub fn add(&self, other: &FockVector) -> Self {
        let mut out = self.clone();
        for (nu, x) in &other.coefficients {
            out.add_term(nu.clone(), x.clone());
        }
        out
    }

    fn max_part(&self) -> u32 {
        self.coefficients.keys().filter_map(|nu| nu.parts().first().copied()).max().unwrap_or(0)
    }
}

/// `α_i` for `i ≥ 1`: `ν ↦ i·ν_i·(ν with one part i removed)`.
pub fn annihilate(i: u32, v: &FockVector) -> FockVector {
    assert!(i >= 1, "annihilation index must be positive");
    let mut out = FockVector::zero();
    for (nu, x) in v.iter() {
        let k = nu.multiplicity(i);
        if k == 0 {
            continue;
        }
        let mut parts = nu.parts().to_vec();
        let pos = parts.iter().position(|&p| p == i).expect("part present");
        parts.remove(pos);
        let factor = rational::int(i64::from(i) * k as i64);
        out.add_term(Partition::new(parts).expect("still decreasing"), x * factor);
    }
    out
}

/// `α_{−i}` for `i ≥ 1`: inserts a part `i`.
pub fn create(i: u32, v: &FockVector) -> FockVector {
    assert!(i >= 1, "creation index must be positive");
    let mut out = FockVector::zero();
    for (nu, x) in v.iter() {
        let mut parts = nu.parts().to_vec();
        parts.push(i);
        out.add_term(Partition::from_unsorted(parts), x.clone());
    }
    out
}

/// `A_m = Σ_{i>0} α_{−im} α_{im}`, by composing the mode operators.
pub fn apply_a_m(m: u32, v: &FockVector) -> FockVector {
    assert!(m >= 1, "A_m needs m >= 1");
    let mut out = FockVector::zero();
    let mut mode = m;
    while mode <= v.max_part() {
        out = out.add(&create(mode, &annihilate(mode, v)));
        mode += m;
    }
    out
}

/// The closed-form `A_m`-eigenvalue `Σ_{m|i} i·ν_i` of the basis vector `ν`.
pub fn a_m_eigenvalue(nu: &Partition, m: u32) -> usize {
    nu.parts().iter().filter(|&&p| p % m == 0).map(|&p| p as usize).sum()
}

/// Eigenvalue of `A_m` on `ν`, read off from the operator action; fails if
/// `ν` is not an eigenvector.
fn operator_eigenvalue(nu: &Partition, m: u32) -> Result<usize> {
    let image = apply_a_m(m, &FockVector::basis(nu.clone()));
    let value = image.coeff(nu);
    if image.iter().any(|(other, _)| other != nu) || !rational::is_integer(&value) {
        return Err(Error::InvariantViolation(format!("basis vector {nu} is not an A_{m}-eigenvector")));
    }
    Ok(value.to_integer().to_usize().expect("eigenvalue is nonnegative"))
}

/// `dim` of the `e`-eigenspace of `A_m` on the degree-`n` part of `F`,
/// computed from the operator and cross-checked against the closed form.
pub fn eigenspace_dimension(n: usize, m: u32, e: usize) -> Result<usize> {
    if m < 1 {
        return Err(Error::InvalidModulus(m));
    }
    let mut by_operator = 0;
    let mut by_formula = 0;
    for nu in enumerate_partitions(n) {
        let eig = operator_eigenvalue(&nu, m)?;
        if eig != a_m_eigenvalue(&nu, m) {
            return Err(Error::InvariantViolation(format!("A_{m} eigenvalue of {nu}: operator {eig}, formula {}", a_m_eigenvalue(&nu, m))));
        }
        by_operator += usize::from(eig == e);
        by_formula += usize::from(a_m_eigenvalue(&nu, m) == e);
    }
    debug_assert_eq!(by_operator, by_formula);
    Ok(by_operator)
}

/// Integer series in `s, t`, dense on the triangle `deg_t ≤ deg_s ≤ truncation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries2 {
    truncation: usize,
    coeffs: Vec<Vec<i64>>,
}

impl PowerSeries2 {
    pub fn zero(truncation: usize) -> Self {
        PowerSeries2 { truncation, coeffs: (0..=truncation).map(|n| vec![0; n + 1]).collect() }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.coeffs[0][0] = 1;
        s
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Coefficient of `s^n t^e`; zero outside the stored triangle.
    pub fn coeff(&self, n: usize, e: usize) -> i64 {
        if n > self.truncation || e > n {
            return 0;
        }
        self.coeffs[n][e]
    }

    fn add_at(&mut self, n: usize, e: usize, x: i64) {
        assert!(e <= n, "t-degree exceeds s-degree");
        if n <= self.truncation {
            self.coeffs[n][e] += x;
        }
    }

    /// Multiplies by `Σ_{k≥0} s^{a·k} t^{b·k}` (that is, `1/(1 − s^a t^b)`), truncated.
    fn mul_geometric(&mut self, a: usize, b: usize) {
        assert!(a >= 1 && b <= a);
        // In place, ascending in s: each coefficient picks up the already
        // updated one `a` steps below.
        for n in a..=self.truncation {
            for e in b..=n {
                if e - b <= n - a {
                    let prev = self.coeffs[n - a][e - b];
                    self.coeffs[n][e] += prev;
                }
            }
        }
    }

    /// CSV rows `deg_s,deg_t,coeff` over the whole triangle, with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("deg_s,deg_t,coeff\n");
        for (n, row) in self.coeffs.iter().enumerate() {
            for (e, c) in row.iter().enumerate() {
                let _ = writeln!(out, "{n},{e},{c}");
            }
        }
        out
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(n, row)| row.iter().enumerate().map(move |(e, &c)| (n, e, c)))
    }
}

/// `tr_F(s^{A_1} t^{A_m})` up to `s`-degree `truncation`, computed both by
/// summing `s^{|ν|} t^{A_m(ν)}` over the Fock basis (eigenvalues from the
/// operator) and by expanding `Π_{m∤i} 1/(1−s^i) · Π_{m|i} 1/(1−(st)^i)`
/// mode by mode. The two must agree.
pub fn trace_series(m: u32, truncation: usize) -> Result<PowerSeries2> {
    check_modulus(m)?;
    let mut by_basis = PowerSeries2::zero(truncation);
    for n in 0..=truncation {
        for nu in enumerate_partitions(n) {
            by_basis.add_at(n, operator_eigenvalue(&nu, m)?, 1);
        }
    }
    let mut by_modes = PowerSeries2::one(truncation);
    for i in 1..=truncation {
        let t_power = if i % m as usize == 0 { i } else { 0 };
        by_modes.mul_geometric(i, t_power);
    }
    if let Some((n, e, _)) = by_basis.entries().find(|&(n, e, c)| c != by_modes.coeff(n, e)) {
        return Err(Error::InvariantViolation(format!(
            "trace series mismatch at s^{n} t^{e}: basis sum {} vs product {}",
            by_basis.coeff(n, e),
            by_modes.coeff(n, e)
        )));
    }
    Ok(by_basis)
}

/// `N(s,t) = (Π_{p>0, m∤p} 1/(1−s^p)) · (Π_{q>0} 1/(1−(st)^{qm}))`, expanded
/// as two univariate products and then combined.
pub fn product_series_n(m: u32, truncation: usize) -> Result<PowerSeries2> {
    check_modulus(m)?;
    let regular = m_regular_counts(truncation, m)?;
    let m = m as usize;
    let mut blocks = vec![0i64; truncation + 1];
    blocks[0] = 1;
    let mut q = 1;
    while q * m <= truncation {
        for k in q * m..=truncation {
            blocks[k] += blocks[k - q * m];
        }
        q += 1;
    }
    let mut out = PowerSeries2::zero(truncation);
    for (e, &b) in blocks.iter().enumerate() {
        for (p, &r) in regular.iter().enumerate().take(truncation + 1 - e) {
            out.add_at(e + p, e, b * r);
        }
    }
    Ok(out)
}

/// `p̄_n` for `n ≤ max`, from `Π_{n>0} 1/(1 − t^n)`.
pub fn partition_counts(max: usize) -> Vec<i64> {
    euler_product(max, |_| true)
}

/// Number of `m`-regular partitions of `n ≤ max`, from `Π_{m∤n} 1/(1 − t^n)`.
pub fn m_regular_counts(max: usize, m: u32) -> Result<Vec<i64>> {
    check_modulus(m)?;
    Ok(euler_product(max, |k| k % m as usize != 0))
}

fn euler_product(max: usize, include: impl Fn(usize) -> bool) -> Vec<i64> {
    let mut series = vec![0i64; max + 1];
    series[0] = 1;
    for part in (1..=max).filter(|&k| include(k)) {
        for k in part..=max {
            series[k] += series[k - part];
        }
    }
    series
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoRow {
    pub q: usize,
    /// `#{λ ⊢ n : q_m(λ) = q}`.
    pub count_qm: i64,
    /// `p̄_q · p̄_{n−qm, m}`.
    pub count_product: i64,
    pub dim_eigenspace: i64,
    #[serde(rename = "coeff_N")]
    pub coeff_n: i64,
    pub coeff_trace: i64,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoReport {
    pub n: usize,
    pub m: u32,
    pub rows: Vec<BoRow>,
}

impl BoReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }

    pub fn total(&self) -> i64 {
        self.rows.iter().map(|r| r.count_qm).sum()
    }
}

/// The four-way count per stratum `q` (`0 ≤ qm ≤ n`).
pub fn verify_bo(n: usize, m: u32) -> Result<BoReport> {
    let n_series = product_series_n(m, n)?;
    let t_series = trace_series(m, n)?;
    verify_bo_with(n, m, &n_series, &t_series)
}

/// [`verify_bo`] for every `n ≤ n_max`, sharing the series expansions.
pub fn verify_bo_range(n_max: usize, m: u32) -> Result<Vec<BoReport>> {
    let n_series = product_series_n(m, n_max)?;
    let t_series = trace_series(m, n_max)?;
    (0..=n_max).map(|n| verify_bo_with(n, m, &n_series, &t_series)).collect()
}

fn verify_bo_with(n: usize, m: u32, n_series: &PowerSeries2, t_series: &PowerSeries2) -> Result<BoReport> {
    check_modulus(m)?;
    let mu = m as usize;
    let partitions = enumerate_partitions(n);
    let count_where = |k: usize, pred: &dyn Fn(&Partition) -> bool| enumerate_partitions(k).iter().filter(|p| pred(p)).count() as i64;
    let mut rows = Vec::new();
    for q in 0..=n / mu {
        let mut count_qm = 0;
        for lambda in &partitions {
            count_qm += i64::from(lambda.q_m(m)? == q);
        }
        let p_q = count_where(q, &|_| true);
        let regular = count_where(n - q * mu, &|p| p.q_m(m).map(|x| x == 0).unwrap_or(false));
        let count_product = p_q * regular;
        let dim_eigenspace = eigenspace_dimension(n, m, q * mu)? as i64;
        let coeff_n = n_series.coeff(n, q * mu);
        let coeff_trace = t_series.coeff(n, q * mu);
        let ok = [count_product, dim_eigenspace, coeff_n, coeff_trace].iter().all(|&x| x == count_qm);
        rows.push(BoRow { q, count_qm, count_product, dim_eigenspace, coeff_n, coeff_trace, ok });
    }
    Ok(BoReport { n, m, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn basis(s: &str) -> FockVector {
        FockVector::basis(p(s))
    }

    #[test]
    fn annihilate_examples() {
        assert!(annihilate(1, &FockVector::vacuum()).is_zero());
        assert_eq!(annihilate(2, &basis("2")), FockVector::vacuum().scale(&int(2)));
        assert_eq!(annihilate(2, &basis("2,2")), basis("2").scale(&int(4)));
        assert!(annihilate(3, &basis("2,1")).is_zero());
    }

    #[test]
    fn create_examples() {
        assert_eq!(create(3, &FockVector::vacuum()), basis("3"));
        assert_eq!(create(1, &basis("2")), basis("2,1"));
        assert_eq!(create(2, &annihilate(2, &basis("2"))), basis("2").scale(&int(2)));
    }

    #[test]
    fn a_m_examples() {
        assert!(apply_a_m(2, &basis("3,1")).is_zero());
        assert_eq!(apply_a_m(2, &basis("2,2")), basis("2,2").scale(&int(4)));
        for nu in enumerate_partitions(6) {
            assert_eq!(apply_a_m(1, &FockVector::basis(nu.clone())), FockVector::basis(nu).scale(&int(6)));
        }
    }

    #[test]
    fn eigenspace_examples() {
        assert_eq!(eigenspace_dimension(4, 2, 4).unwrap(), 2);
        assert_eq!(eigenspace_dimension(4, 2, 2).unwrap(), 1);
        assert_eq!(eigenspace_dimension(4, 2, 0).unwrap(), 2);
        assert_eq!(eigenspace_dimension(4, 2, 3).unwrap(), 0);
    }

    #[test]
    fn series_examples() {
        let tr = trace_series(2, 6).unwrap();
        assert_eq!(tr.coeff(0, 0), 1);
        assert_eq!(tr.coeff(4, 4), 2);
        for n in 0..=6 {
            for e in (1..=n).filter(|e| e % 2 == 1) {
                assert_eq!(tr.coeff(n, e), 0);
            }
        }
        let big_n = product_series_n(2, 6).unwrap();
        assert_eq!(big_n.coeff(4, 4), 2);
        assert_eq!(big_n.coeff(4, 2), 1);
        let regular = m_regular_counts(6, 2).unwrap();
        for n in 0..=6 {
            assert_eq!(big_n.coeff(n, 0), regular[n]);
        }
    }

    #[test]
    fn euler_product_counts() {
        assert_eq!(partition_counts(10), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        // partitions of 6 into odd parts = into distinct parts = 4
        assert_eq!(m_regular_counts(6, 2).unwrap()[6], 4);
    }

    #[test]
    fn bo_examples() {
        let r = verify_bo(4, 2).unwrap();
        assert!(r.ok());
        let counts: Vec<i64> = r.rows.iter().map(|row| row.count_qm).collect();
        assert_eq!(counts, vec![2, 1, 2]);
        let r = verify_bo(1, 3).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].count_qm, 1);
        let r = verify_bo(6, 3).unwrap();
        assert!(r.ok());
        assert_eq!(r.total(), 11);
    }

    #[test]
    fn csv_dump() {
        let csv = product_series_n(2, 2).unwrap().to_csv();
        assert_eq!(csv, "deg_s,deg_t,coeff\n0,0,1\n1,0,1\n1,1,0\n2,0,1\n2,1,0\n2,2,1\n");
    }

    #[test]
    fn bo_row_json_keys() {
        let r = verify_bo(2, 2).unwrap();
        let json = serde_json::to_value(&r.rows[1]).unwrap();
        let keys: Vec<&str> = json.as_object().unwrap().keys().map(String::as_str).collect();
        for k in ["q", "count_qm", "count_product", "dim_eigenspace", "coeff_N", "coeff_trace", "ok"] {
            assert!(keys.contains(&k), "missing {k}");
        }
    }
}
