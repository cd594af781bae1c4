use num_rational::BigRational;
use num_traits::One;

use super::partition::Partition;
use crate::poly::RationalMatrix;

/// Irreducible character `χ^λ` of `S_n` at cycle type `ρ`, by the
/// Murnaghan–Nakayama rule on beta-sets.
pub fn char_sn(lambda: &Partition, rho: &Partition) -> i64 {
    if lambda.size() != rho.size() {
        return 0;
    }
    let l = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i)
        .collect();
    mn(beta, rho.parts())
}

fn mn(beta: Vec<usize>, rho: &[usize]) -> i64 {
    let Some((&k, rest)) = rho.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let height = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let mut next = beta.clone();
        next[idx] = b - k;
        let v = mn(next, rest);
        total += if height % 2 == 0 { v } else { -v };
    }
    total
}

/// `f^λ = χ^λ(1)`.
pub fn dim_sn(lambda: &Partition) -> i64 {
    char_sn(lambda, &Partition::column(lambda.size()))
}

/// Standard Young tableaux of shape `λ`, each given as the (row, column) of
/// the entries `1..=n` in order.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        shape: &Partition,
        lens: &mut Vec<usize>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if cur.len() == shape.size() {
            out.push(cur.clone());
            return;
        }
        for r in 0..shape.len() {
            let c = lens[r];
            if c < shape.part(r) && (r == 0 || lens[r - 1] > c) {
                lens[r] += 1;
                cur.push((r, c));
                rec(shape, lens, cur, out);
                cur.pop();
                lens[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(
        lambda,
        &mut vec![0; lambda.len()],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Matrices of the simple transpositions `s_1, …, s_{n-1}` in Young's
/// seminormal form on the basis of standard tableaux of shape `λ`.
/// Column `t` of each matrix is the image of basis vector `t`.
pub fn seminormal_generators(lambda: &Partition) -> Vec<RationalMatrix> {
    let n = lambda.size();
    let tabs = standard_tableaux(lambda);
    let d = tabs.len();
    let content = |t: &[(usize, usize)], i: usize| t[i].1 as i64 - t[i].0 as i64;
    (0..n.saturating_sub(1))
        .map(|i| {
            let mut m = RationalMatrix::zeros((), d, d);
            for (col, t) in tabs.iter().enumerate() {
                let (a, b) = (t[i], t[i + 1]);
                if a.0 == b.0 {
                    m.set(col, col, BigRational::one());
                } else if a.1 == b.1 {
                    m.set(col, col, -BigRational::one());
                } else {
                    let rho = content(t, i + 1) - content(t, i);
                    let inv = BigRational::new(1.into(), rho.into());
                    let mut swapped = t.clone();
                    swapped.swap(i, i + 1);
                    let other = tabs
                        .iter()
                        .position(|s| *s == swapped)
                        .expect("swap stays standard");
                    m.set(col, col, inv.clone());
                    let off = if rho > 0 {
                        BigRational::one()
                    } else {
                        BigRational::one() - &inv * &inv
                    };
                    m.set(other, col, off);
                }
            }
            m
        })
        .collect()
}

/// Matrix of an arbitrary permutation (one-line, 0-based images) in the
/// seminormal form, from a reduced word via bubble sort.
pub fn seminormal_matrix(gens: &[RationalMatrix], dim: usize, perm: &[usize]) -> RationalMatrix {
    // write perm = s_{i_1} ... s_{i_k} by sorting: each adjacent swap of
    // positions i, i+1 in the one-line word multiplies on the right by s_i
    let mut word = perm.to_vec();
    let mut letters = Vec::new();
    while let Some(i) = (0..word.len().saturating_sub(1)).find(|&i| word[i] > word[i + 1]) {
        word.swap(i, i + 1);
        letters.push(i);
    }
    // perm · s_{l_1} ⋯ s_{l_k} = 1, so perm = s_{l_k} ⋯ s_{l_1}
    let mut m = RationalMatrix::identity((), dim);
    for &i in letters.iter().rev() {
        m = m.mul(&gens[i]);
    }
    m
}

/// Trace of a rational matrix, asserting it is an integer.
pub fn integer_trace(m: &RationalMatrix) -> i64 {
    let t = m.trace();
    assert!(t.is_integer(), "non-integral trace");
    t.to_integer().try_into().expect("trace fits in i64")
}
