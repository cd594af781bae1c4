use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Semistandard tableau in English notation; entries start at 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect()).map_err(|_| {
            Error::InvalidPartition("tableau rows must have weakly decreasing length".into())
        })?;
        let t = Tableau { shape, rows };
        if !t.is_semistandard() {
            return Err(Error::InvalidPartition(format!(
                "{:?} is not semistandard",
                t.rows
            )));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    fn is_semistandard(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|r| r.iter().all(|&x| x >= 1) && r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| lo > hi));
        rows_ok && cols_ok
    }

    /// `content[v-1]` is the number of entries equal to `v`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &x in self.rows.iter().flatten() {
            c[x - 1] += 1;
        }
        c
    }

    /// Row reading word: rows from bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

/// All semistandard tableaux of shape `shape` and content `weight`.
///
/// Entries are placed value by value, each value filling a horizontal strip.
pub fn enumerate_ssyt(shape: &Partition, weight: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.size() != weight.size() {
        return out;
    }
    let rows = vec![Vec::new(); shape.len()];
    fill(shape, weight.parts(), 0, rows, &mut out);
    out
}

fn fill(
    shape: &Partition,
    weight: &[usize],
    v: usize,
    rows: Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if v == weight.len() {
        let mut rows = rows;
        rows.retain(|r| !r.is_empty());
        out.push(Tableau {
            shape: shape.clone(),
            rows,
        });
        return;
    }
    let cur: Vec<usize> = rows.iter().map(Vec::len).collect();
    // number of boxes added to each row: row i may grow up to the old
    // length of row i-1 (horizontal strip) and up to the target shape
    let mut add = vec![0; cur.len()];
    strips(shape, &cur, weight[v], 0, &mut add, &mut |add| {
        let mut next = rows.clone();
        for (r, &k) in add.iter().enumerate() {
            next[r].extend(std::iter::repeat_n(v + 1, k));
        }
        fill(shape, weight, v + 1, next, out);
    });
}

fn strips(
    shape: &Partition,
    cur: &[usize],
    left: usize,
    row: usize,
    add: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if left == 0 {
        f(add);
        return;
    }
    if row == cur.len() {
        return;
    }
    let cap = if row == 0 {
        shape.part(0)
    } else {
        shape.part(row).min(cur[row - 1])
    };
    let room = cap.saturating_sub(cur[row]);
    for k in (0..=room.min(left)).rev() {
        add[row] = k;
        strips(shape, cur, left - k, row + 1, add, f);
    }
    add[row] = 0;
}

/// Charge of a word whose content is a partition (as many 1s as 2s as ...).
pub fn charge_word(word: &[usize]) -> Result<usize> {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut content = vec![0usize; max];
    for &x in word {
        if x == 0 {
            return Err(Error::NonPartitionContent(format!("{word:?} contains 0")));
        }
        content[x - 1] += 1;
    }
    if content.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NonPartitionContent(format!("content {content:?}")));
    }

    let mut alive = vec![true; word.len()];
    let mut total = 0;
    let mut remaining = word.len();
    while remaining > 0 {
        // letters still present form an initial segment 1..=k
        let k = (1..=max)
            .take_while(|&v| word.iter().zip(&alive).any(|(&x, &a)| a && x == v))
            .count();
        let mut pos = word.len();
        let mut index = 0;
        for v in 1..=k {
            // scan leftwards from pos, wrapping around to the right end
            let left = (0..pos).rev().find(|&i| alive[i] && word[i] == v);
            let p = match left {
                Some(p) => p,
                None => {
                    if v > 1 {
                        index += 1;
                    }
                    (0..word.len())
                        .rev()
                        .find(|&i| alive[i] && word[i] == v)
                        .expect("letter present")
                }
            };
            total += index;
            alive[p] = false;
            pos = p;
        }
        remaining -= k;
    }
    Ok(total)
}

pub fn charge(t: &Tableau) -> Result<usize> {
    charge_word(&t.reading_word())
}

type KfKey = (Partition, Partition);
static KF_CACHE: LazyLock<Mutex<HashMap<KfKey, Arc<IntPolynomial>>>> =
    LazyLock::new(Default::default);

/// `K_{λμ}(q) = Σ_T q^{charge(T)}` over semistandard tableaux of shape `λ`
/// and content `μ`. Results are memoized.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Arc<IntPolynomial> {
    let key = (lambda.clone(), mu.clone());
    if let Some(p) = KF_CACHE.lock().expect("cache poisoned").get(&key) {
        return p.clone();
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    for t in enumerate_ssyt(lambda, mu) {
        let c = charge(&t).expect("partition content");
        if coeffs.len() <= c {
            coeffs.resize(c + 1, BigInt::from(0));
        }
        coeffs[c] += 1;
    }
    let p = Arc::new(IntPolynomial::new(coeffs));
    KF_CACHE
        .lock()
        .expect("cache poisoned")
        .insert(key, p.clone());
    p
}

/// Cocharge version `K̃_{λμ}(q) = q^{n(μ)} K_{λμ}(q^{-1})`.
pub fn kostka_foulkes_tilde(lambda: &Partition, mu: &Partition) -> IntPolynomial {
    let k = kostka_foulkes(lambda, mu);
    if k.is_zero() {
        return IntPolynomial::zero();
    }
    k.reverse_within(mu.n_stat())
}
