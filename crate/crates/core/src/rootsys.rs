//! Crystallographic root systems, their reflection representations and the
//! Levi data `Φ_L`, `Π′`, `Φ_{L′}` attached to a subset of simple roots.
//!
//! Coordinates:
//! * `A_{n-1}` lives in `Q^n` with `α_i = e_i - e_{i+1}` (the full
//!   permutation representation, so `W` acts by permutation matrices);
//! * `B_n`, `C_n`, `D_n` live in `Q^n` with the usual simple roots;
//! * `E`, `F`, `G` live in the abstract basis of simple roots, with the
//!   inner product obtained by symmetrizing the Cartan matrix.
//!
//! All simple roots are indexed from 0, so `α_1` is index 0. The exceptional
//! `E_6`/`E_7`/`E_8` diagrams use the chain `α_1 - α_2 - α_4 - α_5 - α_6 -
//! α_7 (- α_8)` with the branch node `α_3` attached to `α_4`. This is the
//! Bourbaki labelling with `α_2` and `α_3` exchanged.
//!
//! Every root and Weyl group matrix is integral in these coordinates, so
//! vectors are stored as `i64`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::InvalidRootSystem(format!(
                "unknown family {other:?}"
            ))),
        }
    }
}

pub type Vector = Vec<i64>;

#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    /// Gram matrix of the ambient inner product, row-major.
    gram: Vec<i64>,
    dim: usize,
    simple_roots: Vec<Vector>,
    roots: Vec<Vector>,
    /// Coordinates of each root in the basis of simple roots.
    root_coeffs: Vec<Vector>,
    /// `cartan[i][j] = 2 (α_i, α_j) / (α_i, α_i)`.
    cartan: Vec<Vec<i64>>,
}

fn unit(dim: usize, i: usize, c: i64) -> Vector {
    let mut v = vec![0; dim];
    v[i] = c;
    v
}

fn e_minus(dim: usize, i: usize, j: usize) -> Vector {
    let mut v = vec![0; dim];
    v[i] = 1;
    v[j] = -1;
    v
}

/// Cartan matrix from bonds `(i, j, cartan[i][j], cartan[j][i])`.
fn cartan_from_edges(rank: usize, edges: &[(usize, usize, i64, i64)]) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j, cij, cji) in edges {
        c[i][j] = cij;
        c[j][i] = cji;
    }
    c
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidRootSystem(format!("{family}{rank}: {msg}")));
        match family {
            Family::A if rank >= 1 => {
                let n = rank + 1;
                let simple = (0..rank).map(|i| e_minus(n, i, i + 1)).collect();
                Ok(Self::from_ambient(
                    family,
                    rank,
                    n,
                    identity_gram(n),
                    simple,
                ))
            }
            Family::B | Family::C if rank >= 1 => {
                let n = rank;
                let mut simple: Vec<Vector> = (0..n - 1).map(|i| e_minus(n, i, i + 1)).collect();
                let last = if family == Family::B { 1 } else { 2 };
                simple.push(unit(n, n - 1, last));
                Ok(Self::from_ambient(
                    family,
                    rank,
                    n,
                    identity_gram(n),
                    simple,
                ))
            }
            Family::D if rank >= 2 => {
                let n = rank;
                let mut simple: Vec<Vector> = (0..n - 1).map(|i| e_minus(n, i, i + 1)).collect();
                let mut last = vec![0; n];
                last[n - 2] = 1;
                last[n - 1] = 1;
                simple.push(last);
                Ok(Self::from_ambient(
                    family,
                    rank,
                    n,
                    identity_gram(n),
                    simple,
                ))
            }
            Family::E if (6..=8).contains(&rank) => {
                // chain α1-α2-α4-α5-α6-α7-α8, α3 attached to α4 (0-based below)
                let mut edges = vec![(0, 1, -1, -1), (1, 3, -1, -1), (2, 3, -1, -1)];
                for i in 3..rank - 1 {
                    edges.push((i, i + 1, -1, -1));
                }
                let cartan = cartan_from_edges(rank, &edges);
                Ok(Self::from_cartan(family, rank, cartan, vec![2; rank]))
            }
            Family::F if rank == 4 => {
                // α1, α2 long; α3, α4 short; double bond α2 => α3
                let cartan =
                    cartan_from_edges(4, &[(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)]);
                Ok(Self::from_cartan(family, rank, cartan, vec![4, 4, 2, 2]))
            }
            Family::G if rank == 2 => {
                // α1 short, α2 long
                let cartan = cartan_from_edges(2, &[(0, 1, -3, -1)]);
                Ok(Self::from_cartan(family, rank, cartan, vec![2, 6]))
            }
            Family::E => bad("E needs rank 6, 7 or 8"),
            Family::F => bad("F needs rank 4"),
            Family::G => bad("G needs rank 2"),
            Family::D => bad("D needs rank >= 2"),
            _ => bad("rank must be positive"),
        }
    }

    fn from_ambient(
        family: Family,
        rank: usize,
        dim: usize,
        gram: Vec<i64>,
        simple_roots: Vec<Vector>,
    ) -> Self {
        let ip = |a: &Vector, b: &Vector| inner(&gram, dim, a, b);
        let cartan = simple_roots
            .iter()
            .map(|a| {
                simple_roots
                    .iter()
                    .map(|b| 2 * ip(a, b) / ip(a, a))
                    .collect()
            })
            .collect();
        Self::finish(family, rank, dim, gram, simple_roots, cartan)
    }

    /// Abstract basis of simple roots; `lengths[i] = (α_i, α_i)`.
    fn from_cartan(family: Family, rank: usize, cartan: Vec<Vec<i64>>, lengths: Vec<i64>) -> Self {
        let mut gram = vec![0; rank * rank];
        for i in 0..rank {
            for j in 0..rank {
                let v = cartan[i][j] * lengths[i];
                assert_eq!(v % 2, 0, "non-integral symmetrized Cartan entry");
                gram[i * rank + j] = v / 2;
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                assert_eq!(
                    gram[i * rank + j],
                    gram[j * rank + i],
                    "Cartan matrix not symmetrizable"
                );
            }
        }
        let simple = (0..rank).map(|i| unit(rank, i, 1)).collect();
        Self::finish(family, rank, rank, gram, simple, cartan)
    }

    fn finish(
        family: Family,
        rank: usize,
        dim: usize,
        gram: Vec<i64>,
        simple_roots: Vec<Vector>,
        cartan: Vec<Vec<i64>>,
    ) -> Self {
        // Closure of the simple roots under simple reflections, in
        // simple-root coordinates: s_i(β) = β - <α_i^∨, β> α_i.
        let mut seen: HashSet<Vector> = HashSet::new();
        let mut order: Vec<Vector> = Vec::new();
        let mut queue: VecDeque<Vector> = (0..rank).map(|i| unit(rank, i, 1)).collect();
        while let Some(beta) = queue.pop_front() {
            if !seen.insert(beta.clone()) {
                continue;
            }
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| cartan[i][j] * beta[j]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut next = beta.clone();
                next[i] -= pairing;
                if !seen.contains(&next) {
                    queue.push_back(next);
                }
            }
            order.push(beta);
        }
        // positive roots first (by height, then lexicographic), then negatives
        order.sort_by_key(|b| {
            (
                b.iter().sum::<i64>() < 0,
                b.iter().sum::<i64>().abs(),
                b.clone(),
            )
        });
        let roots = order
            .iter()
            .map(|c| {
                let mut v = vec![0; dim];
                for (k, &ck) in c.iter().enumerate() {
                    for (x, s) in v.iter_mut().zip(&simple_roots[k]) {
                        *x += ck * s;
                    }
                }
                v
            })
            .collect();
        RootSystem {
            family,
            rank,
            gram,
            dim,
            simple_roots,
            roots,
            root_coeffs: order,
            cartan,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the ambient space `V`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple_roots
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn root_coeffs(&self) -> &[Vector] {
        &self.root_coeffs
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[i64] {
        &self.gram
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        inner(&self.gram, self.dim, a, b)
    }

    /// `G a`, the linear form `v ↦ (v, a)` written as a coordinate vector.
    pub fn dual(&self, a: &[i64]) -> Vector {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.gram[i * self.dim + j] * a[j])
                    .sum()
            })
            .collect()
    }

    /// Matrix (row-major, `dim × dim`) of the reflection in `alpha`.
    pub fn reflection_matrix(&self, alpha: &[i64]) -> Vec<i64> {
        let d = self.dim;
        let aa = self.inner(alpha, alpha);
        let dual = self.dual(alpha);
        let mut m = vec![0; d * d];
        for j in 0..d {
            // image of basis vector e_j: e_j - 2 (α, e_j)/(α, α) α
            let num = 2 * dual[j];
            assert_eq!(num % aa, 0, "non-integral reflection");
            let c = num / aa;
            for i in 0..d {
                m[i * d + j] = i64::from(i == j) - c * alpha[i];
            }
        }
        m
    }

    pub fn simple_reflection(&self, i: usize) -> Vec<i64> {
        self.reflection_matrix(&self.simple_roots[i])
    }

    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r == v)
    }

    /// Order of the Weyl group, from the classical formulas.
    pub fn weyl_order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        let n = self.rank;
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Dynkin type of the subdiagram on the given simple-root indices,
    /// e.g. `"D5"`, `"A2+A1"`; the empty set gives `"∅"`.
    pub fn dynkin_type(&self, nodes: &[usize]) -> String {
        let comps = self.components(nodes);
        if comps.is_empty() {
            return "∅".to_string();
        }
        let mut names: Vec<(usize, String)> = comps
            .iter()
            .map(|c| (c.len(), self.classify_component(c)))
            .collect();
        names.sort_by(|a, b| b.cmp(a));
        names
            .into_iter()
            .map(|(_, s)| s)
            .collect::<Vec<_>>()
            .join("+")
    }

    /// Connected components of the Dynkin subdiagram on `nodes`.
    pub fn components(&self, nodes: &[usize]) -> Vec<Vec<usize>> {
        let mut left: Vec<usize> = nodes.to_vec();
        left.sort_unstable();
        left.dedup();
        let mut comps = Vec::new();
        while let Some(start) = left.first().copied() {
            let mut comp = vec![start];
            let mut frontier = vec![start];
            left.retain(|&x| x != start);
            while let Some(x) = frontier.pop() {
                let (adj, rest): (Vec<usize>, Vec<usize>) =
                    left.iter().partition(|&&y| self.cartan[x][y] != 0);
                left = rest;
                comp.extend(&adj);
                frontier.extend(adj);
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    fn classify_component(&self, c: &[usize]) -> String {
        let k = c.len();
        if k == 1 {
            return "A1".into();
        }
        let bond = |i: usize, j: usize| self.cartan[i][j] * self.cartan[j][i];
        let degree = |i: usize| c.iter().filter(|&&j| j != i && bond(i, j) > 0).count();
        let length = |i: usize| self.inner(&self.simple_roots[i], &self.simple_roots[i]);
        let mut multi = None;
        for (a, &i) in c.iter().enumerate() {
            for &j in &c[a + 1..] {
                if bond(i, j) > 1 {
                    multi = Some((i, j, bond(i, j)));
                }
            }
        }
        if let Some((i, j, m)) = multi {
            if m == 3 {
                return "G2".into();
            }
            if k == 2 {
                return "B2".into();
            }
            let ends_i = degree(i) == 1;
            let ends_j = degree(j) == 1;
            if !ends_i && !ends_j {
                return "F4".into();
            }
            let leaf = if ends_i { i } else { j };
            let other = if ends_i { j } else { i };
            return if length(leaf) < length(other) {
                format!("B{k}")
            } else {
                format!("C{k}")
            };
        }
        let Some(&branch) = c.iter().find(|&&i| degree(i) == 3) else {
            return format!("A{k}");
        };
        // leg lengths from the branch node
        let mut legs: Vec<usize> = c
            .iter()
            .filter(|&&j| j != branch && bond(branch, j) > 0)
            .map(|&start| {
                let (mut prev, mut cur, mut len) = (branch, start, 1);
                loop {
                    let next = c
                        .iter()
                        .copied()
                        .find(|&x| x != prev && x != cur && bond(cur, x) > 0);
                    match next {
                        Some(n) => {
                            prev = cur;
                            cur = n;
                            len += 1;
                        }
                        None => break len,
                    }
                }
            })
            .collect();
        legs.sort_unstable();
        match legs.as_slice() {
            [1, 1, _] => format!("D{k}"),
            [1, 2, 2] => "E6".into(),
            [1, 2, 3] => "E7".into(),
            [1, 2, 4] => "E8".into(),
            _ => format!("?{k}"),
        }
    }
}

fn identity_gram(n: usize) -> Vec<i64> {
    let mut g = vec![0; n * n];
    for i in 0..n {
        g[i * n + i] = 1;
    }
    g
}

fn inner(gram: &[i64], dim: usize, a: &[i64], b: &[i64]) -> i64 {
    let mut s = 0;
    for i in 0..dim {
        if a[i] == 0 {
            continue;
        }
        for j in 0..dim {
            s += a[i] * gram[i * dim + j] * b[j];
        }
    }
    s
}

/// Levi data attached to a subset `Π_L` of the simple roots.
#[derive(Clone, Debug)]
pub struct LeviConfig {
    parent: Arc<RootSystem>,
    pi_l: Vec<usize>,
    phi_l: Vec<usize>,
    pi_prime: Vec<usize>,
    phi_lprime: Vec<usize>,
}

impl LeviConfig {
    /// `pi_l` holds 0-based simple-root indices.
    pub fn new(parent: Arc<RootSystem>, pi_l: &[usize]) -> Result<Self> {
        let mut pi_l = pi_l.to_vec();
        pi_l.sort_unstable();
        pi_l.dedup();
        if let Some(&bad) = pi_l.iter().find(|&&i| i >= parent.rank()) {
            return Err(Error::InvalidConfig(format!(
                "simple root index {} out of range for {}",
                bad + 1,
                parent.name()
            )));
        }
        let pi_prime: Vec<usize> = (0..parent.rank())
            .filter(|&i| {
                pi_l.iter()
                    .all(|&j| parent.inner(&parent.simple_roots[i], &parent.simple_roots[j]) == 0)
            })
            .collect();
        let supported_in = |set: &[usize]| -> Vec<usize> {
            parent
                .root_coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| {
                    c.iter()
                        .enumerate()
                        .all(|(k, &x)| x == 0 || set.contains(&k))
                })
                .map(|(i, _)| i)
                .collect()
        };
        let phi_l = supported_in(&pi_l);
        let phi_lprime = supported_in(&pi_prime);
        Ok(LeviConfig {
            parent,
            pi_l,
            phi_l,
            pi_prime,
            phi_lprime,
        })
    }

    pub fn parent(&self) -> &Arc<RootSystem> {
        &self.parent
    }

    pub fn pi_l(&self) -> &[usize] {
        &self.pi_l
    }

    /// Indices (into `parent.roots()`) of `Φ_L`.
    pub fn phi_l(&self) -> &[usize] {
        &self.phi_l
    }

    pub fn pi_prime(&self) -> &[usize] {
        &self.pi_prime
    }

    /// Indices (into `parent.roots()`) of `Φ_{L′}`.
    pub fn phi_lprime(&self) -> &[usize] {
        &self.phi_lprime
    }

    /// Indices of `Φ - Φ_L`.
    pub fn outside_l(&self) -> Vec<usize> {
        (0..self.parent.roots.len())
            .filter(|i| !self.phi_l.contains(i))
            .collect()
    }

    pub fn l_type(&self) -> String {
        self.parent.dynkin_type(&self.pi_l)
    }

    pub fn lprime_type(&self) -> String {
        self.parent.dynkin_type(&self.pi_prime)
    }
}
