use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition, stored as weakly decreasing positive parts.
///
/// The derived ordering compares part lists lexicographically, so the
/// partitions of 4 sort as `(1,1,1,1) < (2,1,1) < (2,2) < (3,1) < (4)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing with no zero part.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(k)`, or the empty partition for `k = 0`.
    pub fn row(k: usize) -> Self {
        Self::from_unsorted(vec![k])
    }

    /// `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of the part `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Map part ↦ multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Order of the centralizer of an element of cycle type `self` in
    /// `S_n`: `∏ i^{m_i} m_i!`.
    pub fn z(&self) -> u128 {
        self.multiplicities()
            .into_iter()
            .map(|(i, m)| (i as u128).pow(m as u32) * (1..=m as u128).product::<u128>())
            .product()
    }

    /// Sign of a permutation of cycle type `self`.
    pub fn sign(&self) -> i64 {
        if self.parts.iter().filter(|&&p| p % 2 == 0).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::from_unsorted(parts)
    }

    /// Every part repeated `k` times.
    pub fn repeat(&self, k: usize) -> Self {
        Self::from_unsorted(
            self.parts
                .iter()
                .flat_map(|&p| std::iter::repeat_n(p, k))
                .collect(),
        )
    }

    /// Dominance order `self ⊵ other` (for partitions of the same size).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n`, in increasing order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Parses `"2,2,1"`, optionally parenthesised; `""` and `"()"` give the
/// empty partition. Parts need not be sorted.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidPartition(format!("cannot parse part {t:?} in {s:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{s:?} has a zero part")));
        }
        Ok(Partition::from_unsorted(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts_and_order() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let four: Vec<String> = Partition::all(4).iter().map(ToString::to_string).collect();
        assert_eq!(four, ["(1,1,1,1)", "(2,1,1)", "(2,2)", "(3,1)", "(4)"]);
    }

    #[test]
    fn statistics() {
        assert_eq!(p(&[2, 2]).n_stat(), 2);
        assert_eq!(p(&[1, 1, 1, 1]).n_stat(), 6);
        assert_eq!(p(&[4]).n_stat(), 0);
        assert_eq!(p(&[2, 1, 1]).z(), 4);
        assert_eq!(p(&[1, 1, 1, 1]).z(), 24);
        assert_eq!(p(&[2, 2]).z(), 8);
        assert_eq!(p(&[3, 2, 2]).conjugate(), p(&[3, 3, 1]));
        assert_eq!(p(&[2, 1]).repeat(2), p(&[2, 2, 1, 1]));
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
    }

    #[test]
    fn parse_and_reject() {
        assert_eq!("2,2".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert_eq!("1,3".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=9 {
            let fact: u128 = (1..=n as u128).product();
            let total: u128 = Partition::all(n).iter().map(|r| fact / r.z()).sum();
            assert_eq!(total, fact);
        }
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(parts in proptest::collection::vec(1usize..6, 0..6)) {
            let l = Partition::from_unsorted(parts);
            prop_assert_eq!(l.conjugate().conjugate(), l.clone());
            prop_assert_eq!(l.conjugate().size(), l.size());
            let s = serde_json::to_string(&l).unwrap();
            prop_assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), l);
        }
    }
}
