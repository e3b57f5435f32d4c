//! Integer partitions: the labels of `S_n`-irreducibles, Fock basis vectors
//! and Hecke simples.
//!
//! Partitions are stored canonically as weakly decreasing positive parts;
//! the empty partition is the unique partition of 0. For `c = r/m` the
//! support of `L(τ_λ)` is governed by
//!
//! ```text
//! q_m(λ) = Σ_{i≥1} i·⌊(λ_i − λ_{i+1}) / m⌋,
//! ```
//!
//! which is `|μ|` in the unique splitting `λ = m·μ + ν` with all row
//! differences of `ν` below `m`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_modulus, Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates weak decrease; trailing zeros are stripped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// `λ_i` with 1-based `i`, zero past the last part.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.0.iter().filter(|&&p| p == value).count()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().take_while(|&&p| p >= j).count() as u32).collect())
    }

    /// Row differences `λ_i − λ_{i+1}` for `i = 1..=len`.
    fn differences(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.len()).map(move |i| self.part(i) - self.part(i + 1))
    }

    /// Inverse of [`differences`](Self::differences).
    fn from_differences(diffs: &[u32]) -> Partition {
        let mut parts = vec![0u32; diffs.len()];
        let mut acc = 0;
        for (i, d) in diffs.iter().enumerate().rev() {
            acc += d;
            parts[i] = acc;
        }
        Partition::new(parts).expect("suffix sums are weakly decreasing")
    }

    pub fn is_m_regular(&self, m: u32) -> Result<bool> {
        check_modulus(m)?;
        let mut i = 0;
        while i < self.0.len() {
            let run = self.0[i..].iter().take_while(|&&p| p == self.0[i]).count();
            if run >= m as usize {
                return Ok(false);
            }
            i += run;
        }
        Ok(true)
    }

    pub fn q_m(&self, m: u32) -> Result<usize> {
        check_modulus(m)?;
        Ok(self.differences().enumerate().map(|(i, d)| (i + 1) * (d / m) as usize).sum())
    }

    pub fn scale(&self, m: u32) -> Partition {
        if m == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|&p| p * m).collect())
    }

    /// Componentwise sum `(λ_1 + μ_1, λ_2 + μ_2, …)`.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition((1..=len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Union of parts, the conjugate operation to [`add`](Self::add).
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::from_unsorted(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn decompose(&self, m: u32, convention: Regularity) -> Result<Decomposition> {
        check_modulus(m)?;
        match convention {
            Regularity::Conjugate => {
                let diffs: Vec<u32> = self.differences().collect();
                let nu: Vec<u32> = diffs.iter().map(|d| d % m).collect();
                let mu: Vec<u32> = diffs.iter().map(|d| d / m).collect();
                Ok(Decomposition {
                    mu: Partition::from_differences(&mu),
                    nu: Partition::from_differences(&nu),
                    m,
                    convention,
                })
            }
            Regularity::Direct => {
                let d = self.conjugate().decompose(m, Regularity::Conjugate)?;
                Ok(Decomposition { mu: d.mu.conjugate(), nu: d.nu.conjugate(), m, convention })
            }
        }
    }

    /// Cells `(row, column)`, both 0-based, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    /// Rows `i` (0-based) from which a box can be removed.
    pub fn corners(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.part(i + 1) > self.part(i + 2)).collect()
    }

    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        if row >= self.len() || self.part(row + 1) <= self.part(row + 2) {
            return None;
        }
        let mut parts = self.0.clone();
        parts[row] -= 1;
        Partition::new(parts).ok()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `3,1`, `[3,1]`, `(3,1)`, or the empty string / `[]`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']).trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Which side of `λ = m·μ + ν` is required to be `m`-regular.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regularity {
    /// `ν′` is `m`-regular; `+` is componentwise. `|μ| = q_m(λ)`.
    Conjugate,
    /// `ν` is `m`-regular and `λ = ν ∪ μ^m`, where every part of `μ` is
    /// repeated `m` times. `|μ| = q_m(λ′)`.
    Direct,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub mu: Partition,
    pub nu: Partition,
    pub m: u32,
    pub convention: Regularity,
}

impl Decomposition {
    pub fn recombine(&self) -> Partition {
        match self.convention {
            Regularity::Conjugate => self.mu.scale(self.m).add(&self.nu),
            Regularity::Direct => self.mu.conjugate().scale(self.m).conjugate().union(&self.nu),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DominanceRelation {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// Compares all prefix sums of two partitions of the same size.
pub fn dominance(alpha: &Partition, beta: &Partition) -> Result<DominanceRelation> {
    if alpha.size() != beta.size() {
        return Err(Error::SizeMismatch { left: alpha.size(), right: beta.size() });
    }
    if alpha == beta {
        return Ok(DominanceRelation::Equal);
    }
    let (mut sa, mut sb) = (0u64, 0u64);
    let (mut ge, mut le) = (true, true);
    for i in 1..=alpha.len().max(beta.len()) {
        sa += u64::from(alpha.part(i));
        sb += u64::from(beta.part(i));
        match sa.cmp(&sb) {
            Ordering::Greater => le = false,
            Ordering::Less => ge = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (ge, le) {
        (true, _) => DominanceRelation::Greater,
        (_, true) => DominanceRelation::Less,
        _ => DominanceRelation::Incomparable,
    })
}

/// All partitions of `n` in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            prefix.push(first);
            go(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` in which no part repeats `m` or more times.
pub fn enumerate_m_regular(n: usize, m: u32) -> Result<Vec<Partition>> {
    check_modulus(m)?;
    Ok(enumerate_partitions(n).into_iter().filter(|p| p.is_m_regular(m).unwrap_or(false)).collect())
}

/// Sign of the parameter `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CSign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl CSign {
    pub fn flip(self) -> Self {
        match self {
            CSign::Positive => CSign::Negative,
            CSign::Negative => CSign::Positive,
        }
    }
}

impl FromStr for CSign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "pos" | "positive" => Ok(CSign::Positive),
            "-" | "−" | "neg" | "negative" => Ok(CSign::Negative),
            other => Err(Error::Parse(format!("sign must be + or -, got {other:?}"))),
        }
    }
}

impl fmt::Display for CSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CSign::Positive => "+",
            CSign::Negative => "-",
        })
    }
}

/// The `q` with `supp L(τ_λ) = X_q`: `q_m(λ)` for `c > 0`, `q_m(λ′)` for `c < 0`.
pub fn support_level(lambda: &Partition, m: u32, sign: CSign) -> Result<usize> {
    match sign {
        CSign::Positive => lambda.q_m(m),
        CSign::Negative => lambda.conjugate().q_m(m),
    }
}

/// The label `m·μ + ν′` of the simple corresponding to `τ_μ ⊗ D_ν`
/// (conjugated when `c < 0`).
pub fn label_from_pair(mu: &Partition, nu: &Partition, m: u32, sign: CSign) -> Result<Partition> {
    if !nu.is_m_regular(m)? {
        return Err(Error::NotRegular(nu.to_string(), m));
    }
    let label = mu.scale(m).add(&nu.conjugate());
    Ok(match sign {
        CSign::Positive => label,
        CSign::Negative => label.conjugate(),
    })
}

/// Human-readable description of `X_q′` inside `ℂ^n`: coordinates in each of
/// the first `q` blocks of size `m` are equal.
pub fn stratum_description(n: usize, m: u32, q: usize) -> String {
    if q == 0 {
        return format!("X_0 = C^{n}");
    }
    let m = m as usize;
    let blocks: Vec<String> = (0..q)
        .map(|b| {
            let idx: Vec<String> = (b * m + 1..=(b + 1) * m).map(|i| format!("b{i}")).collect();
            idx.join("=")
        })
        .collect();
    format!("X_{q} = S_{n}-orbit of {{{}}}", blocks.join(", "))
}
