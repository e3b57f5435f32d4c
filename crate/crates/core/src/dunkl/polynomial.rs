//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::rational::{self, Rational};

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePolynomial {
    n: usize,
    terms: BTreeMap<Exponents, Rational>,
}

/// One `{exponents, coeff}` record of the JSON form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub exponents: Exponents,
    #[serde(serialize_with = "rational::serialize", deserialize_with = "rational::deserialize")]
    pub coeff: Rational,
}

impl SparsePolynomial {
    pub fn zero(n: usize) -> Self {
        SparsePolynomial { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(vec![0; n], c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    /// The coordinate function `x_i` (0-based).
    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exponents: Exponents, coeff: Rational) -> Self {
        let n = exponents.len();
        let mut p = Self::zero(n);
        p.add_term(exponents, coeff);
        p
    }

    pub fn from_terms(n: usize, terms: Vec<PolyTerm>) -> Result<Self> {
        let mut p = Self::zero(n);
        for t in terms {
            if t.exponents.len() != n {
                return Err(Error::SizeMismatch { left: t.exponents.len(), right: n });
            }
            p.add_term(t.exponents, t.coeff);
        }
        Ok(p)
    }

    pub fn to_terms(&self) -> Vec<PolyTerm> {
        self.terms.iter().map(|(e, c)| PolyTerm { exponents: e.clone(), coeff: c.clone() }).collect()
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, exponents: Exponents, coeff: Rational) {
        debug_assert_eq!(exponents.len(), self.n);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        SparsePolynomial { n: self.n, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// `x_i · f`.
    pub fn mul_var(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e[i] += 1;
                (e, c.clone())
            })
            .collect();
        SparsePolynomial { n: self.n, terms }
    }

    /// `∂f/∂x_i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * Rational::from_integer(e[i].into()));
        }
        out
    }

    /// `w·f`, where `w·x_i = x_{w(i)}`.
    pub fn permute(&self, w: &Permutation) -> Result<Self> {
        if w.degree() != self.n {
            return Err(Error::SizeMismatch { left: w.degree(), right: self.n });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut moved = vec![0; self.n];
                for (i, &k) in e.iter().enumerate() {
                    moved[w.apply(i)] = k;
                }
                (moved, c.clone())
            })
            .collect();
        Ok(SparsePolynomial { n: self.n, terms })
    }

    /// Swaps `x_i` and `x_j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.swap(i, j);
                (e, c.clone())
            })
            .collect();
        SparsePolynomial { n: self.n, terms }
    }

    /// `(f − s_ij f) / (x_i − x_j)`, computed monomial by monomial from
    /// `(x_i^k − x_j^k)/(x_i − x_j) = Σ_{u+v=k−1} x_i^u x_j^v`, so the
    /// quotient is exact by construction.
    pub fn divided_difference(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let (a, b) = (e[i], e[j]);
            if a == b {
                continue;
            }
            let (low, k, coeff) = if a > b { (b, a - b, c.clone()) } else { (a, b - a, -c) };
            for u in 0..k {
                let mut e2 = e.clone();
                e2[i] = low + u;
                e2[j] = low + (k - 1 - u);
                out.add_term(e2, coeff.clone());
            }
        }
        out
    }

    /// Evaluates after substituting `x_k ↦ y_{target[k]}` into a ring with
    /// `nparams` variables.
    pub fn substitute(&self, target: &[usize], nparams: usize) -> SparsePolynomial {
        let mut out = Self::zero(nparams);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; nparams];
            for (k, &x) in e.iter().enumerate() {
                e2[target[k]] += x;
            }
            out.add_term(e2, c.clone());
        }
        out
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn neg(self) -> SparsePolynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.n, rhs.n, "multiplying polynomials in different rings");
        let mut out = SparsePolynomial::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Serialize for SparsePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_terms().serialize(s)
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, x) })
                .collect();
            match (vars.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "({c})*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Exponent vectors of total degree exactly `d` in `n` variables, in
/// lexicographically decreasing order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Exponents> {
    fn go(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponents>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=left).rev() {
            cur.push(x);
            go(n, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// Coordinates of `f` in the given monomial list.
pub(crate) fn coordinates(f: &SparsePolynomial, basis: &[Exponents]) -> Vec<Rational> {
    basis.iter().map(|e| f.coeff(e)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn x(n: usize, i: usize) -> SparsePolynomial {
        SparsePolynomial::variable(n, i)
    }

    #[test]
    fn permute_examples() {
        let s12 = Permutation::simple(2, 0);
        assert_eq!(x(2, 0).permute(&s12).unwrap(), x(2, 1));
        let f = &(&x(2, 0) * &x(2, 0)) + &x(2, 1);
        assert_eq!(f.permute(&Permutation::identity(2)).unwrap(), f);
        let sym = &x(2, 0) * &x(2, 1);
        assert_eq!(sym.permute(&s12).unwrap(), sym);
        assert!(sym.permute(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn permutation_action_is_a_homomorphism() {
        let n = 3;
        let f = &(&x(n, 0) * &x(n, 0)) * &x(n, 1);
        for v in Permutation::all(n) {
            for w in Permutation::all(n) {
                let lhs = f.permute(&v).unwrap().permute(&w).unwrap();
                assert_eq!(lhs, f.permute(&w.compose(&v)).unwrap());
            }
        }
    }

    #[test]
    fn divided_difference_is_exact() {
        let n = 3;
        let f = &(&(&x(n, 0) * &x(n, 0)) * &x(n, 0)) * &x(n, 2);
        let f = &f + &(&x(n, 1) * &x(n, 1)).scale(&int(5));
        let q = f.divided_difference(0, 1);
        let alpha = &x(n, 0) - &x(n, 1);
        assert_eq!(&alpha * &q, &f - &f.swap_vars(0, 1));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(5, 4).len(), 70);
        assert_eq!(monomials_of_degree(2, 0), vec![vec![0, 0]]);
    }

    #[test]
    fn json_terms() {
        let f = &x(2, 0).scale(&crate::rational::rat(1, 2)) - &SparsePolynomial::one(2);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"[{"exponents":[0,0],"coeff":"-1/1"},{"exponents":[1,0],"coeff":"1/2"}]"#);
        let terms: Vec<PolyTerm> = serde_json::from_str(&json).unwrap();
        assert_eq!(SparsePolynomial::from_terms(2, terms).unwrap(), f);
    }
}
