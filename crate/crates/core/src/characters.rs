//! Character data for symmetric groups at the level of Grothendieck groups:
//! lowest weights `h(τ_λ)`, character values, Littlewood–Richardson
//! induction, branching and truncated graded characters of Verma modules.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{dominance, enumerate_partitions, DominanceRelation, Partition};
use crate::rational::{self, Rational};

/// Integer combination of irreducibles `[τ_λ]`, all `λ` of the same size.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterVector {
    entries: BTreeMap<Partition, i64>,
}

impl CharacterVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(lambda: Partition) -> Self {
        let mut v = Self::new();
        v.add_term(lambda, 1);
        v
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: i64) {
        if let Some(first) = self.entries.keys().next() {
            assert_eq!(first.size(), lambda.size(), "character vector mixes sizes");
        }
        let entry = self.entries.entry(lambda).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.entries.retain(|_, c| *c != 0);
        }
    }

    pub fn get(&self, lambda: &Partition) -> i64 {
        self.entries.get(lambda).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &i64)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of multiplicities times dimensions.
    pub fn dimension(&self) -> i64 {
        self.entries.iter().map(|(p, &c)| c * dimension(p) as i64).sum()
    }
}

impl FromIterator<(Partition, i64)> for CharacterVector {
    fn from_iter<I: IntoIterator<Item = (Partition, i64)>>(iter: I) -> Self {
        let mut v = CharacterVector::new();
        for (p, c) in iter {
            v.add_term(p, c);
        }
        v
    }
}

impl Serialize for CharacterVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.entries.len()))?;
        for (p, c) in &self.entries {
            map.serialize_entry(&p.to_string(), c)?;
        }
        map.end()
    }
}

/// `Ch[M]` truncated in `t`: layer `d` holds the `eu`-eigenspace of
/// eigenvalue `base_weight + d` as an `S_n`-character.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GradedCharacter {
    #[serde(serialize_with = "rational::serialize")]
    pub base_weight: Rational,
    pub layers: BTreeMap<usize, CharacterVector>,
    pub truncation_degree: usize,
}

/// Sum of contents `j − i` over the cells of `λ`.
pub fn content_sum(lambda: &Partition) -> i64 {
    lambda.cells().map(|(i, j)| j as i64 - i as i64).sum()
}

/// `h(τ_λ) = −c Σ_{i≥1} [½λ_i² − (i − ½)λ_i]`.
pub fn lowest_weight(lambda: &Partition, c: &Rational) -> Rational {
    let half = rational::rat(1, 2);
    let sum = lambda.parts().iter().enumerate().fold(Rational::zero(), |acc, (idx, &part)| {
        let a = rational::int(i64::from(part));
        let i = rational::int(idx as i64 + 1);
        acc + &half * &a * &a - (i - &half) * a
    });
    -(c * sum)
}

/// Same value as [`lowest_weight`], via contents.
pub fn lowest_weight_by_contents(lambda: &Partition, c: &Rational) -> Rational {
    -(c * rational::int(content_sum(lambda)))
}

/// Number of standard Young tableaux, by the hook length formula.
pub fn dimension(lambda: &Partition) -> u64 {
    let conj = lambda.conjugate();
    let mut num = BigInt::from(1u32);
    for k in 2..=lambda.size() {
        num *= k;
    }
    let mut hooks = BigInt::from(1u32);
    for (i, j) in lambda.cells() {
        let arm = lambda.part(i + 1) as usize - j - 1;
        let leg = conj.part(j + 1) as usize - i - 1;
        hooks *= arm + leg + 1;
    }
    (num / hooks).to_u64().expect("dimension fits in u64")
}

type CharKey = (Partition, Partition);

fn character_memo() -> &'static Mutex<HashMap<CharKey, i64>> {
    static MEMO: OnceLock<Mutex<HashMap<CharKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `χ_λ` on the class of cycle type `μ`, by Murnaghan–Nakayama.
pub fn character_value(lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
    if lambda.size() != cycle_type.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: cycle_type.size() });
    }
    Ok(murnaghan_nakayama(lambda, cycle_type.parts()))
}

fn murnaghan_nakayama(lambda: &Partition, cycles: &[u32]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let key = (lambda.clone(), Partition::new(cycles.to_vec()).expect("cycle type is a partition"));
    if let Some(&v) = character_memo().lock().unwrap().get(&key) {
        return v;
    }
    let value = rim_hooks(lambda, r as usize)
        .into_iter()
        .map(|(smaller, sign)| sign * murnaghan_nakayama(&smaller, rest))
        .sum();
    character_memo().lock().unwrap().insert(key, value);
    value
}

/// Every way to strip a rim hook of length `r`, with sign `(−1)^{height}`.
/// Works on beta-numbers: a hook removal moves one bead down by `r`.
fn rim_hooks(lambda: &Partition, r: usize) -> Vec<(Partition, i64)> {
    let k = lambda.len();
    let beta: Vec<usize> = (0..k).map(|i| lambda.parts()[i] as usize + k - 1 - i).collect();
    let mut out = Vec::new();
    for &b in &beta {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved: Vec<usize> = beta.iter().map(|&x| if x == b { target } else { x }).collect();
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved.iter().enumerate().map(|(i, &x)| (x + i + 1 - k) as u32).collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_unsorted(parts), sign));
    }
    out
}

/// `[Ind(τ_λ ⊗ τ_μ)]` via Littlewood–Richardson tableaux.
pub fn lr_induce(lambda: &Partition, mu: &Partition) -> CharacterVector {
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); lambda.len() + mu.len()];
    let shape: Vec<u32> = lambda.parts().to_vec();
    fill_strips(mu.parts(), 1, shape, &mut rows, &mut counts);
    counts.into_iter().collect()
}

fn fill_strips(
    content: &[u32],
    label: u32,
    shape: Vec<u32>,
    rows: &mut Vec<Vec<u32>>,
    counts: &mut BTreeMap<Partition, i64>,
) {
    let Some((&r, rest)) = content.split_first() else {
        if is_lattice(rows) {
            *counts.entry(Partition::from_unsorted(shape)).or_insert(0) += 1;
        }
        return;
    };
    for grown in horizontal_strips(&shape, r) {
        for (i, row) in rows.iter_mut().enumerate() {
            let added = grown.get(i).copied().unwrap_or(0) - shape.get(i).copied().unwrap_or(0);
            row.extend(std::iter::repeat_n(label, added as usize));
        }
        fill_strips(rest, label + 1, grown.clone(), rows, counts);
        for (i, row) in rows.iter_mut().enumerate() {
            let added = grown.get(i).copied().unwrap_or(0) - shape.get(i).copied().unwrap_or(0);
            row.truncate(row.len() - added as usize);
        }
    }
}

/// Shapes obtained from `shape` by adding `r` boxes, no two in one column.
fn horizontal_strips(shape: &[u32], r: u32) -> Vec<Vec<u32>> {
    fn go(shape: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i > shape.len() {
            if left == 0 {
                let mut s = cur.clone();
                while s.last() == Some(&0) {
                    s.pop();
                }
                out.push(s);
            }
            return;
        }
        let base = shape.get(i).copied().unwrap_or(0);
        let cap = if i == 0 { base + left } else { shape[i - 1].min(base + left) };
        for new in base..=cap {
            cur.push(new);
            go(shape, i + 1, left - (new - base), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(shape, 0, r, &mut Vec::new(), &mut out);
    out
}

/// Reverse reading word (rows top to bottom, each right to left) is a
/// lattice word.
fn is_lattice(rows: &[Vec<u32>]) -> bool {
    let mut seen: Vec<usize> = Vec::new();
    for row in rows {
        for &x in row.iter().rev() {
            let x = x as usize;
            if seen.len() < x {
                seen.resize(x, 0);
            }
            seen[x - 1] += 1;
            if x > 1 && seen[x - 1] > seen[x - 2] {
                return false;
            }
        }
    }
    true
}

/// `Res^{S_n}_{S_{n−1}} τ_λ`: one term per removable corner.
pub fn restrict(lambda: &Partition) -> Result<CharacterVector> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    Ok(lambda
        .corners()
        .into_iter()
        .filter_map(|row| lambda.remove_box(row))
        .map(|p| (p, 1))
        .collect())
}

/// Centralizer order `z_μ = Π_i i^{k_i} k_i!` of the class of cycle type `μ`.
pub fn centralizer_order(cycle_type: &Partition) -> BigInt {
    let mut z = BigInt::from(1u32);
    let mut i = 0;
    let parts = cycle_type.parts();
    while i < parts.len() {
        let value = parts[i];
        let k = parts[i..].iter().take_while(|&&p| p == value).count();
        for j in 1..=k {
            z *= BigInt::from(value) * j;
        }
        i += k;
    }
    z
}

/// Coefficient of `t^d` in `Π_i 1/(1 − t^{μ_i})`: the trace of a permutation
/// of cycle type `μ` on degree-`d` polynomials.
pub fn symmetric_power_trace(cycle_type: &Partition, d: usize) -> BigInt {
    let mut series = vec![BigInt::zero(); d + 1];
    series[0] = BigInt::from(1u32);
    for &len in cycle_type.parts() {
        let len = len as usize;
        for k in len..=d {
            let prev = series[k - len].clone();
            series[k] += prev;
        }
    }
    series.swap_remove(d)
}

/// Multiplicity of `τ_λ` in the degree-`d` polynomials on `ℂ^n`.
pub fn graded_poly_multiplicity(lambda: &Partition, n: usize, d: usize) -> Result<u64> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch { left: lambda.size(), right: n });
    }
    let mut total = Rational::zero();
    for mu in enumerate_partitions(n) {
        let chi = character_value(lambda, &mu)?;
        let trace = symmetric_power_trace(&mu, d);
        total += Rational::new(trace * chi, centralizer_order(&mu));
    }
    as_multiplicity(total)
}

fn as_multiplicity(r: Rational) -> Result<u64> {
    if !rational::is_integer(&r) || r.is_negative() {
        return Err(Error::InvariantViolation(format!("multiplicity {} is not a nonnegative integer", r)));
    }
    Ok(r.to_integer().to_u64().expect("multiplicity fits in u64"))
}

/// Truncated `Ch[M(τ_λ)]`: layer `d` is `ℂ[h]_d ⊗ τ_λ` decomposed through
/// pointwise products of characters.
pub fn ch_verma(lambda: &Partition, c: &Rational, max_degree: usize) -> Result<GradedCharacter> {
    let n = lambda.size();
    let classes = enumerate_partitions(n);
    let irreps = enumerate_partitions(n);
    let mut layers = BTreeMap::new();
    for d in 0..=max_degree {
        let mut layer = CharacterVector::new();
        for nu in &irreps {
            let mut total = Rational::zero();
            for mu in &classes {
                let chi = character_value(lambda, mu)? * character_value(nu, mu)?;
                if chi == 0 {
                    continue;
                }
                total += Rational::new(symmetric_power_trace(mu, d) * chi, centralizer_order(mu));
            }
            let mult = as_multiplicity(total)?;
            if mult > 0 {
                layer.add_term(nu.clone(), mult as i64);
            }
        }
        layers.insert(d, layer);
    }
    Ok(GradedCharacter { base_weight: lowest_weight(lambda, c), layers, truncation_degree: max_degree })
}

/// The lowest `t`-power term of `Ch[M(Ind(τ_λ ⊗ τ_μ))]` for `c > 0`: the
/// constituent `λ + μ` with its lowest weight. Fails if `λ + μ` is missing,
/// has multiplicity other than 1, or is not the unique minimizer.
pub fn leading_term_of_induction(lambda: &Partition, mu: &Partition, c: &Rational) -> Result<(Partition, Rational)> {
    if !c.is_positive() {
        return Err(Error::OutOfRange { what: "c", detail: format!("{} must be positive", rational::format_rational(c)) });
    }
    let sum = lambda.add(mu);
    let induced = lr_induce(lambda, mu);
    if induced.get(&sum) != 1 {
        return Err(Error::InvariantViolation(format!(
            "[τ_{sum}] has multiplicity {} in Ind(τ_{lambda} ⊗ τ_{mu})",
            induced.get(&sum)
        )));
    }
    let h_sum = lowest_weight(&sum, c);
    for (nu, _) in induced.iter().filter(|(nu, _)| **nu != sum) {
        if dominance(&sum, nu)? != DominanceRelation::Greater {
            return Err(Error::InvariantViolation(format!("{nu} is not dominated by {sum}")));
        }
        if lowest_weight(nu, c) <= h_sum {
            return Err(Error::InvariantViolation(format!("h({nu}) does not exceed h({sum})")));
        }
    }
    Ok((sum, h_sum))
}
