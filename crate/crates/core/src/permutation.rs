use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{0, …, p−1}` in one-line notation: `w[i] = w(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; word.len()];
        for &x in &word {
            if x >= word.len() || seen[x] {
                return Err(Error::Parse(format!("{word:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(p: usize) -> Self {
        Permutation((0..p).collect())
    }

    pub fn transposition(p: usize, i: usize, j: usize) -> Self {
        let mut w: Vec<usize> = (0..p).collect();
        w.swap(i, j);
        Permutation(w)
    }

    /// The simple reflection `s_i` swapping `i` and `i+1` (0-based).
    pub fn simple(p: usize, i: usize) -> Self {
        Self::transposition(p, i, i + 1)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// `w·s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Permutation {
        let mut w = self.0.clone();
        w.swap(i, i + 1);
        Permutation(w)
    }

    /// Whether `ℓ(w·s_i) > ℓ(w)`.
    pub fn is_right_ascent(&self, i: usize) -> bool {
        self.0[i] < self.0[i + 1]
    }

    /// A reduced word `[i_1, …, i_k]` with `w = s_{i_1} ⋯ s_{i_k}`, found by
    /// bubble-sorting the one-line word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut sorting = Vec::new();
        let mut swapped = true;
        while swapped {
            swapped = false;
            for i in 0..w.len().saturating_sub(1) {
                if w[i] > w[i + 1] {
                    w.swap(i, i + 1);
                    sorting.push(i);
                    swapped = true;
                }
            }
        }
        // w·s_{j_1}⋯s_{j_k} = e, so w = s_{j_k}⋯s_{j_1}.
        sorting.reverse();
        sorting
    }

    /// All permutations of degree `p` in lexicographic order.
    pub fn all(p: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..p).collect();
        loop {
            out.push(Permutation(cur.clone()));
            let Some(i) = (0..p.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..p).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", word.join(","))
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}
