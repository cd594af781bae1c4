//! Permutations and signed permutations.
//!
//! Permutations act on the left and compose right to left:
//! `(w ∘ x)(i) = w(x(i))`. Letters are 0-based internally and printed
//! 1-based.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symfun::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize);
        Perm((0..n as u8).collect())
    }

    /// One-line notation, 0-based: `images[i] = w(i)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i >= n || seen[i] {
                return Err(Error::Unsupported(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(Perm(images.iter().map(|&i| i as u8).collect()))
    }

    /// Product of the given disjoint cycles (0-based letters) in `S_n`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut img: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for (k, &i) in c.iter().enumerate() {
                if i >= n || used[i] {
                    return Err(Error::Unsupported(format!(
                        "cycles {cycles:?} are not disjoint in S_{n}"
                    )));
                }
                used[i] = true;
                img[i] = c[(k + 1) % c.len()];
            }
        }
        Perm::from_images(&img)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn pow(&self, k: usize) -> Perm {
        (0..k).fold(Perm::identity(self.len()), |acc, _| acc.compose(self))
    }

    /// All cycles, fixed points included, each starting at its least letter,
    /// ordered by that letter.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                c.push(i);
                i = self.apply(i);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| acc.lcm(&c.len()))
    }

    pub fn sign(&self) -> i64 {
        self.cycle_type().sign()
    }

    /// Permutation matrix, row-major: `M[w(i)][i] = 1`.
    pub fn matrix(&self) -> Vec<i64> {
        let n = self.len();
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[self.apply(i) * n + i] = 1;
        }
        m
    }
}

fn letter(i: usize, n: usize) -> String {
    if n >= 10 {
        format!("{},", i + 1)
    } else {
        (i + 1).to_string()
    }
}

fn write_cycle(f: &mut fmt::Formatter<'_>, c: &[usize], n: usize) -> fmt::Result {
    let body: String = c.iter().map(|&i| letter(i, n)).collect();
    write!(f, "({})", body.trim_end_matches(','))
}

/// Cycle notation without fixed points, e.g. `(123)(456)`; the identity
/// prints as `()`. Letters are comma separated once `n ≥ 10`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in &cycles {
            write_cycle(f, c, self.len())?;
        }
        Ok(())
    }
}

/// Signed permutation: `w(e_i) = ±e_{π(i)}`, with the sign negative when
/// `neg[i]` is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPerm {
    perm: Perm,
    neg: Vec<bool>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: Perm::identity(n),
            neg: vec![false; n],
        }
    }

    pub fn new(perm: Perm, neg: Vec<bool>) -> Self {
        assert_eq!(perm.len(), neg.len());
        SignedPerm { perm, neg }
    }

    /// `-1` on every coordinate.
    pub fn minus_identity(n: usize) -> Self {
        SignedPerm {
            perm: Perm::identity(n),
            neg: vec![true; n],
        }
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn negations(&self) -> &[bool] {
        &self.neg
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// Image of `e_i` as (index, negative?).
    pub fn apply(&self, i: usize) -> (usize, bool) {
        (self.perm.apply(i), self.neg[i])
    }

    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let perm = self.perm.compose(&other.perm);
        let neg = (0..self.len())
            .map(|i| other.neg[i] ^ self.neg[other.perm.apply(i)])
            .collect();
        SignedPerm { perm, neg }
    }

    pub fn inverse(&self) -> SignedPerm {
        let perm = self.perm.inverse();
        let mut neg = vec![false; self.len()];
        for i in 0..self.len() {
            neg[self.perm.apply(i)] = self.neg[i];
        }
        SignedPerm { perm, neg }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && !self.neg.iter().any(|&b| b)
    }

    pub fn num_negations(&self) -> usize {
        self.neg.iter().filter(|&&b| b).count()
    }

    /// Cycles of the underlying permutation with their signs (true when the
    /// product of the signs along the cycle is negative).
    pub fn signed_cycles(&self) -> Vec<(Vec<usize>, bool)> {
        self.perm
            .cycles()
            .into_iter()
            .map(|c| {
                let negative = c.iter().filter(|&&i| self.neg[i]).count() % 2 == 1;
                (c, negative)
            })
            .collect()
    }

    /// Lengths of the positive and of the negative cycles.
    pub fn signed_cycle_type(&self) -> (Partition, Partition) {
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for (c, negative) in self.signed_cycles() {
            if negative {
                neg.push(c.len());
            } else {
                pos.push(c.len());
            }
        }
        (Partition::from_unsorted(pos), Partition::from_unsorted(neg))
    }

    pub fn order(&self) -> usize {
        self.signed_cycles().iter().fold(1, |acc, (c, negative)| {
            acc.lcm(&(c.len() * if *negative { 2 } else { 1 }))
        })
    }

    /// Row-major matrix: `M[π(i)][i] = ±1`.
    pub fn matrix(&self) -> Vec<i64> {
        let n = self.len();
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[self.perm.apply(i) * n + i] = if self.neg[i] { -1 } else { 1 };
        }
        m
    }
}

/// Cycle notation on the underlying permutation, each negative cycle
/// prefixed by `-`; positive fixed points are omitted, e.g. `(12)-(3)`.
impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self
            .signed_cycles()
            .into_iter()
            .filter(|(c, neg)| *neg || c.len() > 1)
            .collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for (c, negative) in &cycles {
            if *negative {
                write!(f, "-")?;
            }
            write_cycle(f, c, self.len())?;
        }
        Ok(())
    }
}
