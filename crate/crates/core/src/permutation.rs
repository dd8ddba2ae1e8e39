//! Permutations of tensor slots.
//!
//! A [`Permutation`] stores the images of `0..k`. Its action on tensors is
//! `U_σ(f_1⊗…⊗f_k) = f_σ(1)⊗…⊗f_σ(k)` (see [`crate::tensor::permute`]), which
//! composes contravariantly: `U_σ ∘ U_τ = U_{τ∘σ}`. Operators built from several
//! permutations are always formed by composing their actions on tensors.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from 0-based images, rejecting non-bijections.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &i in &images {
            if i >= k || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{k}"
                )));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(k: usize) -> Self {
        Self {
            images: (0..k).collect(),
        }
    }

    /// The cycle `(c_0 c_1 … c_m)` on `0..k`, sending `c_j` to `c_{j+1}`.
    pub fn cycle(k: usize, cycle: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..k).collect();
        for (j, &c) in cycle.iter().enumerate() {
            if c >= k {
                return Err(Error::InvalidPermutation(format!(
                    "cycle entry {c} out of range 0..{k}"
                )));
            }
            images[c] = cycle[(j + 1) % cycle.len()];
        }
        Self::new(images)
    }

    pub fn transposition(k: usize, a: usize, b: usize) -> Result<Self> {
        Self::cycle(k, &[a, b])
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Self { images: inv }
    }

    /// The map `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different length");
        Self {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// `(−1)^σ`, computed from the cycle decomposition.
    pub fn sign(&self) -> i32 {
        let k = self.images.len();
        let mut seen = vec![false; k];
        let mut transpositions = 0;
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Every element of `S_k` in lexicographic order of the image sequence.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..k).collect();
        loop {
            out.push(Self {
                images: current.clone(),
            });
            if !next_permutation(&mut current) {
                break;
            }
        }
        out
    }

    /// Cycles of length at least two, 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.images.len();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for start in 0..k {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }
}

/// Advances `v` to the next lexicographic permutation; false when `v` was the last.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Cycle notation with 1-based labels, e.g. `(1,2,3)`; identity prints as `id`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for c in cycles {
            let labels: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", labels.join(","))?;
        }
        Ok(())
    }
}
