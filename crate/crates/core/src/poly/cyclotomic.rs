//! Elements of the cyclotomic field `Q(ζ_e)`, stored in the power basis
//! `1, ζ, …, ζ^{φ(e)-1}` of `Q[x]/(Φ_e)`.
//!
//! `ζ` always denotes the class of `x`, i.e. the distinguished primitive
//! `e`-th root of unity. Every element is kept fully reduced, so equality
//! is coordinate-wise.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::int_poly::{cyclotomic_poly, IntPolynomial};

/// Reduction data for `Q(ζ_e)`. Shared between all elements of one conductor.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    e: usize,
    /// Coefficients of `Φ_e`, low to high; monic.
    modulus: Vec<BigInt>,
}

static FIELDS: LazyLock<Mutex<HashMap<usize, Arc<CyclotomicField>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

impl CyclotomicField {
    /// Returns the shared field descriptor for conductor `e`.
    pub fn get(e: usize) -> Arc<CyclotomicField> {
        assert!(e >= 1, "conductor must be positive");
        let mut cache = FIELDS.lock().expect("cyclotomic cache poisoned");
        cache
            .entry(e)
            .or_insert_with(|| {
                Arc::new(CyclotomicField {
                    e,
                    modulus: cyclotomic_poly(e).coeffs().to_vec(),
                })
            })
            .clone()
    }

    pub fn conductor(&self) -> usize {
        self.e
    }

    /// `φ(e)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Reduces an arbitrary-length coefficient vector modulo `Φ_e`.
    fn reduce(&self, mut c: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        while c.len() > d {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = c.len() - d;
            for (j, m) in self.modulus[..d].iter().enumerate() {
                c[shift + j] -= &top * BigRational::from_integer(m.clone());
            }
        }
        c.resize(d, BigRational::zero());
        c
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coords: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(e: usize) -> Self {
        Self::from_field_zero(CyclotomicField::get(e))
    }

    fn from_field_zero(field: Arc<CyclotomicField>) -> Self {
        let coords = vec![BigRational::zero(); field.degree()];
        Cyclotomic { field, coords }
    }

    pub fn one(e: usize) -> Self {
        Self::from_rational(e, BigRational::one())
    }

    pub fn from_rational(e: usize, r: BigRational) -> Self {
        let mut z = Self::zero(e);
        z.coords[0] = r;
        z
    }

    pub fn from_integer(e: usize, n: impl Into<BigInt>) -> Self {
        Self::from_rational(e, BigRational::from_integer(n.into()))
    }

    /// `ζ^k` for any integer `k`.
    pub fn root_power(e: usize, k: i64) -> Self {
        let field = CyclotomicField::get(e);
        let k = k.rem_euclid(e as i64) as usize;
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = BigRational::one();
        Self::from_raw(field, c)
    }

    fn from_raw(field: Arc<CyclotomicField>, coeffs: Vec<BigRational>) -> Self {
        let coords = field.reduce(coeffs);
        Cyclotomic { field, coords }
    }

    /// Builds an element from a power-basis coordinate vector of any length
    /// (reduced on the way in).
    pub fn from_coeffs(e: usize, coeffs: Vec<BigRational>) -> Self {
        Self::from_raw(CyclotomicField::get(e), coeffs)
    }

    pub fn conductor(&self) -> usize {
        self.field.e
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// The integer value, if the element lies in `Z`.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.field.e, other.field.e,
            "mixing cyclotomic elements of different conductors"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_field(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Cyclotomic {
            field: self.field.clone(),
            coords,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same_field(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Cyclotomic {
            field: self.field.clone(),
            coords,
        }
    }

    pub fn neg(&self) -> Self {
        let coords = self.coords.iter().map(|a| -a).collect();
        Cyclotomic {
            field: self.field.clone(),
            coords,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same_field(other);
        let d = self.field.degree();
        if d == 1 {
            let coords = vec![&self.coords[0] * &other.coords[0]];
            return Cyclotomic {
                field: self.field.clone(),
                coords,
            };
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Self::from_raw(self.field.clone(), prod)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let coords = self.coords.iter().map(|a| a * r).collect();
        Cyclotomic {
            field: self.field.clone(),
            coords,
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Φ_e`. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in Q(ζ)");
        let modulus: Vec<BigRational> = self
            .field
            .modulus
            .iter()
            .map(|m| BigRational::from_integer(m.clone()))
            .collect();
        // Invariant: s * self ≡ r (mod Φ_e) for each (r, s) pair.
        let (mut r0, mut r1) = (modulus, trim(self.coords.clone()));
        let (mut s0, mut s1) = (Vec::<BigRational>::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = qpoly_div_rem(&r0, &r1);
            let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since Φ_e is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let coeffs = s0.into_iter().map(|s| s * &c).collect();
        Self::from_raw(self.field.clone(), coeffs)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.conductor()), |acc, _| acc.mul(self))
    }

    /// Applies the Galois automorphism `ζ ↦ ζ^j` (requires `gcd(j, e) = 1`).
    pub fn galois(&self, j: i64) -> Self {
        let e = self.field.e as i64;
        assert_eq!(
            j.gcd(&e),
            1,
            "Galois exponent must be prime to the conductor"
        );
        let mut c = vec![BigRational::zero(); self.field.e];
        for (k, a) in self.coords.iter().enumerate() {
            let idx = (j * k as i64).rem_euclid(e) as usize;
            c[idx] += a;
        }
        Self::from_raw(self.field.clone(), c)
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn qpoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let len = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..len)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn qpoly_div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + b.len() - 1] / lead;
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            rem[i + j] -= &c * y;
        }
        quot[i] = c;
    }
    (trim(quot), trim(rem))
}

/// Evaluates `p` at `ζ^j` where `ζ` is the distinguished primitive `e`-th
/// root of unity.
pub fn eval_at_root(p: &IntPolynomial, e: usize, j: i64) -> Cyclotomic {
    let field = CyclotomicField::get(e);
    let mut c = vec![BigRational::zero(); e];
    let j = j.rem_euclid(e as i64) as usize;
    for (n, a) in p.coeffs().iter().enumerate() {
        c[(n * j) % e] += BigRational::from_integer(a.clone());
    }
    Cyclotomic::from_raw(field, c)
}

impl fmt::Display for Cyclotomic {
    /// Rationals print plainly; other elements print as a polynomial in
    /// `z`, the distinguished primitive root.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = abs.is_one();
            match k {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "z")?,
                1 => write!(f, "{abs}*z")?,
                _ if unit => write!(f, "z^{k}")?,
                _ => write!(f, "{abs}*z^{k}")?,
            }
        }
        Ok(())
    }
}
