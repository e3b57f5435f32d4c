//! Exact arithmetic in `ℚ(ζ_m) = ℚ[x]/Φ_m(x)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{check_modulus, Error, Result};
use crate::rational::Rational;

/// Coefficients (ascending) of the `m`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    assert!(m >= 1);
    // x^m − 1 divided by Φ_d for every proper divisor d.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in (1..m).filter(|&d| m.is_multiple_of(d)) {
        let divisor = cyclotomic_polynomial(d);
        num = exact_monic_division(&num, &divisor);
    }
    num
}

fn exact_monic_division(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let lead = rem[k + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (j, c) in den.iter().enumerate() {
            rem[k + j] -= &lead * c;
        }
        quot[k] = lead;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "cyclotomic division left a remainder");
    quot
}

#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    m: u32,
    /// `Φ_m`, monic, ascending.
    modulus: Vec<Rational>,
}

impl CyclotomicField {
    pub fn new(m: u32) -> Result<Arc<Self>> {
        check_modulus(m)?;
        let modulus = cyclotomic_polynomial(m).into_iter().map(Rational::from_integer).collect();
        Ok(Arc::new(CyclotomicField { m, modulus }))
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `[ℚ(ζ_m) : ℚ] = φ(m)`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Exponents `j` coprime to `m`, one per complex embedding `ζ ↦ e^{2πij/m}`.
    pub fn embeddings(&self) -> Vec<u32> {
        (1..=self.m).filter(|j| j.gcd(&self.m) == 1).collect()
    }

    pub fn zero(self: &Arc<Self>) -> CyclotomicNumber {
        CyclotomicNumber { field: Arc::clone(self), coeffs: vec![Rational::zero(); self.degree()] }
    }

    pub fn one(self: &Arc<Self>) -> CyclotomicNumber {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(self: &Arc<Self>, r: Rational) -> CyclotomicNumber {
        let mut z = self.zero();
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(self: &Arc<Self>, k: i64) -> CyclotomicNumber {
        self.from_rational(Rational::from_integer(k.into()))
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> CyclotomicNumber {
        let k = k.rem_euclid(i64::from(self.m)) as usize;
        let mut poly = vec![Rational::zero(); k + 1];
        poly[k] = Rational::one();
        self.reduce(poly)
    }

    pub fn zeta(self: &Arc<Self>) -> CyclotomicNumber {
        self.zeta_pow(1)
    }

    /// `a + b·ζ`.
    pub fn from_pair(self: &Arc<Self>, a: Rational, b: Rational) -> CyclotomicNumber {
        &self.from_rational(a) + &self.zeta().scale(&b)
    }

    fn reduce(self: &Arc<Self>, mut poly: Vec<Rational>) -> CyclotomicNumber {
        let d = self.degree();
        while poly.len() > d {
            let lead = poly.pop().expect("nonempty");
            if lead.is_zero() {
                continue;
            }
            let shift = poly.len() - d;
            for (j, c) in self.modulus[..d].iter().enumerate() {
                poly[shift + j] -= &lead * c;
            }
        }
        poly.resize(d, Rational::zero());
        CyclotomicNumber { field: Arc::clone(self), coeffs: poly }
    }
}

#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.m == other.field.m && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl CyclotomicNumber {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Coefficients of `1, ζ, …, ζ^{φ(m)−1}`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CyclotomicNumber { field: Arc::clone(&self.field), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(self.field.one(), |acc, _| &acc * self)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        // Extended Euclid in ℚ[x]: s·a + t·Φ = gcd, a nonzero constant
        // because Φ is irreducible.
        let mut r0 = self.field.modulus.clone();
        let mut r1 = trim(self.coeffs.clone());
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while r1.len() > 1 {
            let (q, r) = divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let g = r1[0].clone();
        let inv: Vec<Rational> = s1.iter().map(|c| c / &g).collect();
        Ok(self.field.reduce(inv))
    }

    /// Image under `ζ ↦ e^{2πi/m}`.
    pub fn to_complex(&self) -> Complex64 {
        self.embed(1)
    }

    /// Image under the embedding `ζ ↦ e^{2πij/m}`.
    pub fn embed(&self, j: u32) -> Complex64 {
        let m = f64::from(self.field.m);
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let angle = 2.0 * std::f64::consts::PI * (k as f64) * f64::from(j) / m;
                Complex64::from_polar(1.0, angle) * c.to_f64().unwrap_or(f64::NAN)
            })
            .sum()
    }

    /// Best guess for the element whose images under the embeddings
    /// [`CyclotomicField::embeddings`] (in that order) are `values`. The
    /// caller must verify the guess exactly.
    pub fn recognize(field: &Arc<CyclotomicField>, values: &[Complex64]) -> Option<CyclotomicNumber> {
        let js = field.embeddings();
        let d = field.degree();
        if values.len() != d {
            return None;
        }
        // Σ_k a_k ζ^{jk} = values[j]: a complex Vandermonde system.
        let mut a: Vec<Vec<Complex64>> = js
            .iter()
            .zip(values)
            .map(|(&j, &v)| {
                let mut row: Vec<Complex64> = (0..d)
                    .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (k as f64) * f64::from(j) / f64::from(field.m)))
                    .collect();
                row.push(v);
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d).max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))?;
            a.swap(col, piv);
            let p = a[col][col];
            if p.norm() < 1e-12 {
                return None;
            }
            for r in 0..d {
                if r != col {
                    let f = a[r][col] / p;
                    let pivot_row = a[col].clone();
                    for (x, p) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                        *x -= f * p;
                    }
                }
            }
        }
        let scale = 1.0 + values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let mut coeffs = Vec::with_capacity(d);
        for (k, row) in a.iter().enumerate() {
            let x = row[d] / row[k];
            if x.im.abs() > 1e-6 * scale {
                return None;
            }
            coeffs.push(approximate_rational(x.re)?);
        }
        Some(CyclotomicNumber { field: Arc::clone(field), coeffs })
    }
}

/// Continued-fraction approximation with denominator at most `10^6`.
fn approximate_rational(x: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut y = x;
    for _ in 0..40 {
        let a = y.floor();
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if k2 > BigInt::from(1_000_000) {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let approx = h1.to_f64()? / k1.to_f64()?;
        if (approx - x).abs() <= 1e-9 * (1.0 + x.abs()) {
            break;
        }
        let frac = y - a;
        if frac.abs() < 1e-12 {
            break;
        }
        y = 1.0 / frac;
    }
    if k1.is_zero() {
        return None;
    }
    Some(Rational::new(h1, k1))
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    let lead = b.last().expect("nonzero divisor").clone();
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let factor = rem.last().expect("nonempty") / &lead;
        for (j, c) in b.iter().enumerate() {
            rem[shift + j] -= &factor * c;
        }
        quot[shift] = factor;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

impl std::ops::Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        debug_assert_eq!(self.field.m, rhs.field.m);
        CyclotomicNumber { field: Arc::clone(&self.field), coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl std::ops::Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        debug_assert_eq!(self.field.m, rhs.field.m);
        CyclotomicNumber { field: Arc::clone(&self.field), coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl std::ops::Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { field: Arc::clone(&self.field), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl std::ops::Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        debug_assert_eq!(self.field.m, rhs.field.m);
        let d = self.coeffs.len();
        if d == 1 {
            return CyclotomicNumber { field: Arc::clone(&self.field), coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]] };
        }
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.field.reduce(prod)
    }
}

impl crate::linalg::Field for CyclotomicNumber {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn is_zero(&self) -> bool {
        CyclotomicNumber::is_zero(self)
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
        self.inverse().expect("inverse of zero")
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})z"),
                _ => format!("({c})z^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Euler's totient, used to cross-check `Φ_m` degrees.
pub fn totient(m: u32) -> u32 {
    (1..=m).filter(|k| k.gcd(&m) == 1).count() as u32
}

/// Integer square root of `k` if `k` is a perfect square.
pub(crate) fn integer_sqrt(k: usize) -> Option<usize> {
    let r = (k as f64).sqrt().round() as usize;
    (r * r == k).then_some(r)
}
