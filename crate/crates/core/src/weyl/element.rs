use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::perm::{Perm, SignedPerm};
use crate::error::{Error, Result};
use crate::poly::{CyclotomicField, CyclotomicMatrix, Matrix, RationalMatrix};
use crate::rootsys::{Family, RootSystem};

/// Integral square matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn new(dim: usize, entries: Vec<i64>) -> Self {
        assert_eq!(entries.len(), dim * dim);
        IntMatrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        IntMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let d = self.dim;
        let mut entries = vec![0; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a != 0 {
                    for j in 0..d {
                        entries[i * d + j] += a * other.entries[k * d + j];
                    }
                }
            }
        }
        IntMatrix { dim: d, entries }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let d = self.dim;
        (0..d)
            .map(|i| (0..d).map(|j| self.entries[i * d + j] * v[j]).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.dim)
    }
}

/// An element of a Weyl group in the reflection representation of its
/// root system: a permutation for type `A`, a signed permutation for
/// `B`/`C`/`D`, an integral matrix otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeylElt {
    Perm(Perm),
    Signed(SignedPerm),
    Matrix(IntMatrix),
}

impl WeylElt {
    pub fn identity_for(rs: &RootSystem) -> WeylElt {
        match rs.family() {
            Family::A => WeylElt::Perm(Perm::identity(rs.dim())),
            Family::B | Family::C | Family::D => WeylElt::Signed(SignedPerm::identity(rs.dim())),
            _ => WeylElt::Matrix(IntMatrix::identity(rs.dim())),
        }
    }

    /// Converts a matrix of the reflection representation into the
    /// natural form for the family. Fails if the matrix does not permute
    /// the roots.
    pub fn from_matrix(rs: &RootSystem, entries: &[i64]) -> Result<WeylElt> {
        let d = rs.dim();
        if entries.len() != d * d {
            return Err(Error::Unsupported("matrix has the wrong size".into()));
        }
        let m = IntMatrix::new(d, entries.to_vec());
        if !rs
            .roots()
            .iter()
            .all(|r| rs.root_index(&m.apply(r)).is_some())
        {
            return Err(Error::Unsupported(
                "matrix does not permute the roots".into(),
            ));
        }
        match rs.family() {
            Family::A | Family::B | Family::C | Family::D => {
                let mut img = vec![0; d];
                let mut neg = vec![false; d];
                for j in 0..d {
                    let nz: Vec<usize> = (0..d).filter(|&i| entries[i * d + j] != 0).collect();
                    let [i] = nz[..] else {
                        return Err(Error::Unsupported("not a signed permutation matrix".into()));
                    };
                    img[j] = i;
                    neg[j] = entries[i * d + j] < 0;
                }
                let p = Perm::from_images(&img)?;
                if rs.family() == Family::A {
                    if neg.iter().any(|&b| b) {
                        return Err(Error::Unsupported("not a permutation matrix".into()));
                    }
                    Ok(WeylElt::Perm(p))
                } else {
                    Ok(WeylElt::Signed(SignedPerm::new(p, neg)))
                }
            }
            _ => Ok(WeylElt::Matrix(m)),
        }
    }

    pub fn simple_reflection(rs: &RootSystem, i: usize) -> WeylElt {
        WeylElt::from_matrix(rs, &rs.simple_reflection(i)).expect("simple reflections lie in W")
    }

    pub fn reflection(rs: &RootSystem, alpha: &[i64]) -> WeylElt {
        WeylElt::from_matrix(rs, &rs.reflection_matrix(alpha)).expect("reflections lie in W")
    }

    pub fn dim(&self) -> usize {
        match self {
            WeylElt::Perm(p) => p.len(),
            WeylElt::Signed(s) => s.len(),
            WeylElt::Matrix(m) => m.dim(),
        }
    }

    /// Row-major integral matrix in the reflection representation.
    pub fn matrix(&self) -> Vec<i64> {
        match self {
            WeylElt::Perm(p) => p.matrix(),
            WeylElt::Signed(s) => s.matrix(),
            WeylElt::Matrix(m) => m.entries().to_vec(),
        }
    }

    pub fn rational_matrix(&self) -> RationalMatrix {
        let d = self.dim();
        Matrix::from_ints((), d, d, &self.matrix())
    }

    pub fn cyclotomic_matrix(&self, e: usize) -> CyclotomicMatrix {
        let d = self.dim();
        Matrix::from_ints(CyclotomicField::get(e), d, d, &self.matrix())
    }

    pub fn compose(&self, other: &WeylElt) -> WeylElt {
        match (self, other) {
            (WeylElt::Perm(a), WeylElt::Perm(b)) => WeylElt::Perm(a.compose(b)),
            (WeylElt::Signed(a), WeylElt::Signed(b)) => WeylElt::Signed(a.compose(b)),
            (WeylElt::Matrix(a), WeylElt::Matrix(b)) => WeylElt::Matrix(a.mul(b)),
            _ => panic!("composing Weyl elements of different kinds"),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            WeylElt::Perm(p) => p.is_identity(),
            WeylElt::Signed(s) => s.is_identity(),
            WeylElt::Matrix(m) => m.is_identity(),
        }
    }

    pub fn identity_like(&self) -> WeylElt {
        match self {
            WeylElt::Perm(p) => WeylElt::Perm(Perm::identity(p.len())),
            WeylElt::Signed(s) => WeylElt::Signed(SignedPerm::identity(s.len())),
            WeylElt::Matrix(m) => WeylElt::Matrix(IntMatrix::identity(m.dim())),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            WeylElt::Perm(p) => p.order(),
            WeylElt::Signed(s) => s.order(),
            WeylElt::Matrix(_) => {
                let mut k = 1;
                let mut x = self.clone();
                while !x.is_identity() {
                    x = x.compose(self);
                    k += 1;
                }
                k
            }
        }
    }

    pub fn inverse(&self) -> WeylElt {
        match self {
            WeylElt::Perm(p) => WeylElt::Perm(p.inverse()),
            WeylElt::Signed(s) => WeylElt::Signed(s.inverse()),
            WeylElt::Matrix(_) => self.pow(self.order() - 1),
        }
    }

    pub fn pow(&self, k: usize) -> WeylElt {
        (0..k).fold(self.identity_like(), |acc, _| acc.compose(self))
    }

    /// Power with a possibly negative exponent.
    pub fn pow_signed(&self, k: i64) -> WeylElt {
        let o = self.order() as i64;
        self.pow(k.rem_euclid(o) as usize)
    }

    /// `self · other · self^{-1}`.
    pub fn conjugate(&self, other: &WeylElt) -> WeylElt {
        self.compose(other).compose(&self.inverse())
    }

    /// Image of a vector of the ambient space.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        match self {
            WeylElt::Perm(p) => {
                let mut out = vec![0; v.len()];
                for (i, &x) in v.iter().enumerate() {
                    out[p.apply(i)] = x;
                }
                out
            }
            WeylElt::Signed(s) => {
                let mut out = vec![0; v.len()];
                for (i, &x) in v.iter().enumerate() {
                    let (j, neg) = s.apply(i);
                    out[j] = if neg { -x } else { x };
                }
                out
            }
            WeylElt::Matrix(m) => m.apply(v),
        }
    }

    pub fn as_perm(&self) -> Option<&Perm> {
        match self {
            WeylElt::Perm(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_signed(&self) -> Option<&SignedPerm> {
        match self {
            WeylElt::Signed(s) => Some(s),
            _ => None,
        }
    }

    /// Characteristic polynomial `det(x - w)`, coefficients low to high.
    pub fn char_poly(&self) -> Vec<BigInt> {
        self.rational_matrix()
            .char_poly()
            .into_iter()
            .map(|c: BigRational| {
                assert!(c.is_integer());
                c.to_integer()
            })
            .collect()
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylElt::Perm(p) => write!(f, "{p}"),
            WeylElt::Signed(s) => write!(f, "{s}"),
            WeylElt::Matrix(m) => {
                let d = m.dim();
                let rows: Vec<String> = (0..d)
                    .map(|i| {
                        let r: Vec<String> = m.entries()[i * d..(i + 1) * d]
                            .iter()
                            .map(ToString::to_string)
                            .collect();
                        format!("[{}]", r.join(","))
                    })
                    .collect();
                write!(f, "[{}]", rows.join(","))
            }
        }
    }
}
