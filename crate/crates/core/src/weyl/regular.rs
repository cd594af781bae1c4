use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::element::WeylElt;
use super::perm::{Perm, SignedPerm};
use crate::error::{Error, Result};
use crate::poly::{cyclotomic_poly, Cyclotomic, IntPolynomial, Matrix};
use crate::rootsys::{Family, LeviConfig, RootSystem};

/// Catalog variant of a regular element of a classical Weyl group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::A => "a",
            Variant::B => "b",
            Variant::C => "c",
            Variant::D => "d",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(Variant::A),
            "b" => Ok(Variant::B),
            "c" => Ok(Variant::C),
            "d" => Ok(Variant::D),
            _ => Err(Error::Inadmissible(format!("unknown variant {s:?}"))),
        }
    }
}

fn inadmissible(msg: String) -> Error {
    Error::Inadmissible(msg)
}

/// Product of `count` consecutive cycles of length `len` starting at
/// letter `start`, negative if `negative`: `e_b → e_{b+1} → … → -e_b`.
fn block_cycles(
    n: usize,
    start: usize,
    len: usize,
    count: usize,
    negative: bool,
    neg: &mut [bool],
) -> Vec<Vec<usize>> {
    let mut cycles = Vec::new();
    for c in 0..count {
        let b = start + c * len;
        cycles.push((b..b + len).collect());
        if negative {
            neg[b + len - 1] = true;
        }
    }
    debug_assert!(start + len * count <= n);
    cycles
}

fn signed(n: usize, parts: &[(usize, usize, bool)]) -> WeylElt {
    // parts: (cycle length, count, negative)
    let mut neg = vec![false; n];
    let mut cycles = Vec::new();
    let mut start = 0;
    for &(len, count, negative) in parts {
        cycles.extend(block_cycles(n, start, len, count, negative, &mut neg));
        start += len * count;
    }
    let perm = Perm::from_cycles(n, &cycles).expect("disjoint cycles");
    WeylElt::Signed(SignedPerm::new(perm, neg))
}

/// The regular element of the classical catalog for `(family, rank, e,
/// variant)`. Type `A_{n-1}` has rank `n - 1`; type `C` uses the type `B`
/// list.
pub fn regular_element(family: Family, rank: usize, e: usize, variant: Variant) -> Result<WeylElt> {
    if e == 0 {
        return Err(inadmissible("e must be positive".into()));
    }
    let odd = e % 2 == 1;
    match family {
        Family::A => {
            let n = rank + 1;
            let used = match variant {
                Variant::A if n.is_multiple_of(e) => n,
                Variant::A => {
                    return Err(inadmissible(format!(
                        "type A(a) needs e | n, but {e} ∤ {n}"
                    )))
                }
                Variant::B if (n - 1).is_multiple_of(e) => n - 1,
                Variant::B => {
                    return Err(inadmissible(format!(
                        "type A(b) needs e | n-1, but {e} ∤ {}",
                        n - 1
                    )))
                }
                _ => return Err(inadmissible("type A has variants a and b only".into())),
            };
            let cycles: Vec<Vec<usize>> = (0..used / e)
                .map(|c| (c * e..(c + 1) * e).collect())
                .collect();
            Ok(WeylElt::Perm(Perm::from_cycles(n, &cycles)?))
        }
        Family::B | Family::C => {
            let n = rank;
            match variant {
                Variant::A if odd && n.is_multiple_of(e) => Ok(signed(n, &[(e, n / e, false)])),
                Variant::A => Err(inadmissible(format!(
                    "type B(a) needs e odd with e | n, got e={e}, n={n}"
                ))),
                Variant::B if !odd && (2 * n).is_multiple_of(e) => {
                    Ok(signed(n, &[(e / 2, 2 * n / e, true)]))
                }
                Variant::B => Err(inadmissible(format!(
                    "type B(b) needs e even with e | 2n, got e={e}, n={n}"
                ))),
                _ => Err(inadmissible("type B has variants a and b only".into())),
            }
        }
        Family::D => {
            let n = rank;
            match variant {
                Variant::A if odd && n.is_multiple_of(e) => Ok(signed(n, &[(e, n / e, false)])),
                Variant::A => Err(inadmissible(format!(
                    "type D(a) needs e odd with e | n, got e={e}, n={n}"
                ))),
                Variant::B if odd && (n - 1).is_multiple_of(e) => {
                    Ok(signed(n, &[(1, 1, false), (e, (n - 1) / e, false)]))
                }
                Variant::B => Err(inadmissible(format!(
                    "type D(b) needs e odd with e | n-1, got e={e}, n={n}"
                ))),
                Variant::C if !odd && n.is_multiple_of(e) => {
                    Ok(signed(n, &[(e / 2, 2 * n / e, true)]))
                }
                Variant::C => Err(inadmissible(format!(
                    "type D(c) needs e even with e | n, got e={e}, n={n}"
                ))),
                Variant::D if !odd && (2 * n - 2).is_multiple_of(e) => {
                    let k = (2 * n - 2) / e;
                    Ok(signed(n, &[(1, 1, k % 2 == 1), (e / 2, k, true)]))
                }
                Variant::D => Err(inadmissible(format!(
                    "type D(d) needs e even with e | 2n-2, got e={e}, n={n}"
                ))),
            }
        }
        _ => Err(Error::Unsupported(format!(
            "no built-in catalog for type {family}"
        ))),
    }
}

/// Basis of `V(a, ζ^j) = ker(a - ζ^j)` over `Q(ζ_e)`.
pub fn eigenspace(a: &WeylElt, e: usize, j: i64) -> Vec<Vec<Cyclotomic>> {
    let d = a.dim();
    let z = Cyclotomic::root_power(e, j);
    let mut m = a.cyclotomic_matrix(e);
    for i in 0..d {
        let v = m.get(i, i).sub(&z);
        m.set(i, i, v);
    }
    m.kernel_basis()
}

/// `(v, α)` for a cyclotomic vector `v` and a root `α`.
fn pairing(rs: &RootSystem, v: &[Cyclotomic], alpha: &[i64]) -> Cyclotomic {
    let dual = rs.dual(alpha);
    let e = v.first().map_or(1, Cyclotomic::conductor);
    v.iter()
        .zip(&dual)
        .filter(|(_, &c)| c != 0)
        .fold(Cyclotomic::zero(e), |acc, (x, &c)| {
            acc.add(&x.scale(&BigRational::from_integer(c.into())))
        })
}

/// Whether the space spanned by `basis` lies on none of the hyperplanes
/// orthogonal to the given roots.
fn avoids_hyperplanes<'a>(
    rs: &RootSystem,
    basis: &[Vec<Cyclotomic>],
    roots: impl IntoIterator<Item = &'a Vec<i64>>,
) -> bool {
    roots
        .into_iter()
        .all(|alpha| basis.iter().any(|v| !pairing(rs, v, alpha).is_zero()))
}

/// Springer regularity: `V(a, ζ)` is contained in no reflecting hyperplane.
pub fn is_regular(a: &WeylElt, e: usize, rs: &RootSystem) -> bool {
    is_regular_at(a, e, 1, rs)
}

pub fn is_regular_at(a: &WeylElt, e: usize, j: i64, rs: &RootSystem) -> bool {
    let basis = eigenspace(a, e, j);
    !basis.is_empty() && avoids_hyperplanes(rs, &basis, rs.roots())
}

/// `V(a, ζ)` avoids `H_α` for every `α ∈ Φ - Φ_L`.
pub fn is_l_regular(a: &WeylElt, e: usize, cfg: &LeviConfig) -> bool {
    is_l_regular_at(a, e, 1, cfg)
}

pub fn is_l_regular_at(a: &WeylElt, e: usize, j: i64, cfg: &LeviConfig) -> bool {
    let rs = cfg.parent();
    let basis = eigenspace(a, e, j);
    let outside = cfg.outside_l();
    !basis.is_empty() && avoids_hyperplanes(rs, &basis, outside.iter().map(|&i| &rs.roots()[i]))
}

/// Regularity inside `W_{L′}`: `V(a, ζ)` avoids `H_α` for `α ∈ Φ_{L′}`.
pub fn is_regular_in_lprime(a: &WeylElt, e: usize, cfg: &LeviConfig) -> bool {
    let rs = cfg.parent();
    let basis = eigenspace(a, e, 1);
    !basis.is_empty()
        && avoids_hyperplanes(rs, &basis, cfg.phi_lprime().iter().map(|&i| &rs.roots()[i]))
}

/// Characteristic polynomial of `a` on the reflection representation.
pub fn char_poly(a: &WeylElt) -> IntPolynomial {
    IntPolynomial::new(a.char_poly())
}

/// Multiplicity of `Φ_e` in the characteristic polynomial, which for a
/// regular element is `dim V(a, ζ)`.
pub fn phi_multiplicity(a: &WeylElt, e: usize) -> usize {
    let phi = cyclotomic_poly(e);
    let mut p = char_poly(a);
    let mut k = 0;
    while let Some((q, r)) = p.div_rem(&phi) {
        if !r.is_zero() {
            break;
        }
        p = q;
        k += 1;
    }
    k
}

/// Whether `a` fixes pointwise the orthogonal complement of the span of
/// `Π′`, i.e. lies in the parabolic subgroup `W_{L′}`.
pub fn lies_in_lprime(a: &WeylElt, cfg: &LeviConfig) -> bool {
    let rs = cfg.parent();
    let d = rs.dim();
    let rows: Vec<i64> = cfg
        .pi_prime()
        .iter()
        .flat_map(|&i| rs.dual(&rs.simple_roots()[i]))
        .collect();
    let perp: Vec<Vec<BigRational>> = if rows.is_empty() {
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| BigRational::from_integer(BigInt::from(i64::from(i == j))))
                    .collect()
            })
            .collect()
    } else {
        Matrix::<BigRational>::from_ints((), cfg.pi_prime().len(), d, &rows).kernel_basis()
    };
    let am = a.rational_matrix();
    perp.iter().all(|v| am.mul_vec(v) == *v)
}

/// Whether `a` maps `Φ_L` onto itself.
pub fn normalizes_levi(a: &WeylElt, cfg: &LeviConfig) -> bool {
    let rs = cfg.parent();
    cfg.phi_l().iter().all(|&i| {
        let img = a.apply(&rs.roots()[i]);
        rs.root_index(&img)
            .is_some_and(|k| cfg.phi_l().contains(&k))
    })
}
