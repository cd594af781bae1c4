use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::characters::char_sn;
use super::partition::Partition;
use super::tableau::kostka_foulkes_tilde;
use crate::error::{Error, Result};
use crate::poly::{eval_at_root, Cyclotomic, IntPolynomial};

/// Largest `n` accepted by [`springer_graded_char`] unless overridden.
pub const DEFAULT_SIZE_BOUND: usize = 10;

/// Graded character `w ↦ Σ_d Tr(w, H^{2d}) q^d` of `S_n`, keyed by cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedCharacter {
    n: usize,
    values: BTreeMap<Partition, IntPolynomial>,
}

impl GradedCharacter {
    pub fn new(n: usize, values: BTreeMap<Partition, IntPolynomial>) -> Self {
        debug_assert!(values.keys().all(|k| k.size() == n));
        GradedCharacter { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &BTreeMap<Partition, IntPolynomial> {
        &self.values
    }

    pub fn value(&self, rho: &Partition) -> &IntPolynomial {
        &self.values[rho]
    }

    /// Graded dimension: the value at the identity class.
    pub fn poincare(&self) -> &IntPolynomial {
        self.value(&Partition::column(self.n))
    }

    pub fn dim(&self) -> BigInt {
        self.poincare().eval_one()
    }
}

static SPRINGER_CACHE: LazyLock<Mutex<HashMap<Partition, Arc<GradedCharacter>>>> =
    LazyLock::new(Default::default);

/// Graded Springer character of `GL_n` for the unipotent class of Jordan
/// type `μ`: at cycle type `ρ` the Green polynomial
/// `Σ_λ χ^λ_ρ · q^{n(μ)} K_{λμ}(q^{-1})`.
pub fn springer_graded_char(mu: &Partition) -> Result<Arc<GradedCharacter>> {
    springer_graded_char_bounded(mu, DEFAULT_SIZE_BOUND)
}

pub fn springer_graded_char_bounded(mu: &Partition, bound: usize) -> Result<Arc<GradedCharacter>> {
    let n = mu.size();
    if n > bound {
        return Err(Error::SizeBound { n, bound });
    }
    if let Some(g) = SPRINGER_CACHE.lock().expect("cache poisoned").get(mu) {
        return Ok(g.clone());
    }
    let lambdas = Partition::all(n);
    let ktilde: Vec<IntPolynomial> = lambdas
        .iter()
        .map(|l| kostka_foulkes_tilde(l, mu))
        .collect();
    let values = Partition::all(n)
        .into_iter()
        .map(|rho| {
            let v = lambdas
                .iter()
                .zip(&ktilde)
                .filter(|(_, k)| !k.is_zero())
                .map(|(l, k)| k.scale(&BigInt::from(char_sn(l, &rho))))
                .sum();
            (rho, v)
        })
        .collect();
    let g = Arc::new(GradedCharacter::new(n, values));
    SPRINGER_CACHE
        .lock()
        .expect("cache poisoned")
        .insert(mu.clone(), g.clone());
    Ok(g)
}

/// Green polynomial at cycle type `ρ`, evaluated at `ζ^j` with `ζ` a
/// primitive `e`-th root of unity.
pub fn green_at_root(mu: &Partition, rho: &Partition, e: usize, j: i64) -> Result<Cyclotomic> {
    let g = springer_graded_char(mu)?;
    let p = g.values().get(rho).ok_or_else(|| {
        Error::InvalidPartition(format!("{rho} is not a partition of {}", mu.size()))
    })?;
    Ok(eval_at_root(p, e, j))
}

/// The two readings of the divisibility condition in the closed formula for
/// the value at a primitive `e`-th root when `μ = (m^e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reading {
    /// `e` divides every multiplicity of `ρ`.
    Printed,
    /// `e` divides every part of `ρ`.
    Amended,
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reading::Printed => "printed",
            Reading::Amended => "amended",
        })
    }
}

impl FromStr for Reading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" => Ok(Reading::Printed),
            "amended" => Ok(Reading::Amended),
            _ => Err(Error::Unsupported(format!("unknown reading {s:?}"))),
        }
    }
}

/// `e^{ℓ(ρ)}` when the divisibility condition of `reading` holds, else 0.
pub fn remark38_closed_form(
    m: usize,
    e: usize,
    rho: &Partition,
    reading: Reading,
) -> Result<BigInt> {
    if rho.size() != e * m {
        return Err(Error::InvalidPartition(format!(
            "{rho} is not a partition of {}",
            e * m
        )));
    }
    let holds = match reading {
        Reading::Printed => rho.multiplicities().values().all(|&l| l % e == 0),
        Reading::Amended => rho.parts().iter().all(|&p| p % e == 0),
    };
    Ok(if holds {
        BigInt::from(e).pow(rho.len() as u32)
    } else {
        BigInt::from(0)
    })
}
