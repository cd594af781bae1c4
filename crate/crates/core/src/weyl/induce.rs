use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::config::InductionConfig;
use super::element::WeylElt;
use super::group::{ClassLabel, SubgroupTable, WeylGroup};
use crate::error::{Error, Result};
use crate::poly::Cyclotomic;
use crate::rootsys::{Family, RootSystem};

type GroupKey = (Family, usize);
static GROUPS: LazyLock<Mutex<HashMap<GroupKey, Arc<WeylGroup>>>> = LazyLock::new(Default::default);

/// The Weyl group of `rs` with its classes, shared across callers.
pub fn weyl_group(rs: &Arc<RootSystem>, bound: u128) -> Result<Arc<WeylGroup>> {
    let key = (rs.family(), rs.rank());
    if let Some(g) = GROUPS.lock().expect("cache poisoned").get(&key) {
        if g.order() <= bound {
            return Ok(g.clone());
        }
    }
    let g = Arc::new(WeylGroup::new(rs.clone(), bound)?);
    GROUPS
        .lock()
        .expect("cache poisoned")
        .insert(key, g.clone());
    Ok(g)
}

/// Explicit groups attached to an induction configuration: `W`, `W_L`
/// and `W̃_L = ⟨a⟩ ⋉ W_L`.
#[derive(Debug)]
pub struct InductionContext {
    group: Arc<WeylGroup>,
    wl: SubgroupTable,
    wtilde: SubgroupTable,
    // coset index i with y ∈ a^i W_L, per element y of W̃_L
    coset_of: Vec<usize>,
    a: WeylElt,
    e: usize,
}

impl InductionContext {
    pub fn new(cfg: &InductionConfig, bound: u128) -> Result<Self> {
        let rs = cfg.root_system();
        let group = weyl_group(rs, bound)?;
        let id = WeylElt::identity_for(rs);
        let gens: Vec<WeylElt> = cfg
            .levi()
            .pi_l()
            .iter()
            .map(|&i| WeylElt::simple_reflection(rs, i))
            .collect();
        let wl = SubgroupTable::generate(id.clone(), &gens, bound)?;
        let mut tgens = gens;
        tgens.push(cfg.a().clone());
        let wtilde = SubgroupTable::generate(id, &tgens, bound)?;
        let e = cfg.e();
        if wtilde.len() != e * wl.len() {
            return Err(Error::InvalidConfig(format!(
                "⟨a⟩W_L has order {}, expected e·|W_L| = {}",
                wtilde.len(),
                e * wl.len()
            )));
        }
        let a_inv = cfg.a().inverse();
        let powers: Vec<WeylElt> = (0..e).map(|i| a_inv.pow(i)).collect();
        let coset_of = wtilde
            .elements()
            .iter()
            .map(|y| {
                powers
                    .iter()
                    .position(|p| wl.contains(&p.compose(y)))
                    .expect("W̃_L is the union of the a^i W_L")
            })
            .collect();
        Ok(InductionContext {
            group,
            wl,
            wtilde,
            coset_of,
            a: cfg.a().clone(),
            e,
        })
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn wl(&self) -> &SubgroupTable {
        &self.wl
    }

    pub fn wtilde(&self) -> &SubgroupTable {
        &self.wtilde
    }

    pub fn a(&self) -> &WeylElt {
        &self.a
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// `i` such that the `k`-th element of `W̃_L` lies in `a^i W_L`.
    pub fn coset_index(&self, k: usize) -> usize {
        self.coset_of[k]
    }

    /// Elements of `a^j W_L` (for any integer `j`).
    pub fn coset(&self, j: i64) -> impl Iterator<Item = &WeylElt> {
        let j = j.rem_euclid(self.e as i64) as usize;
        self.wtilde
            .elements()
            .iter()
            .zip(&self.coset_of)
            .filter(move |(_, &i)| i == j)
            .map(|(y, _)| y)
    }

    /// `|W_L|^{-1} #{x ∈ W : x^{-1} w x ∈ a^j W_L}`, summing `|C_W(w)|` over
    /// the elements of `a^j W_L` conjugate to `w`.
    pub fn coset_count(&self, w: &WeylElt, j: i64) -> BigRational {
        let label = self.group.class_label(w);
        let hits = self
            .coset(j)
            .filter(|y| self.group.class_label(y) == label)
            .count();
        let c = self.group.centralizer_order(&label);
        BigRational::new(
            BigInt::from(hits) * BigInt::from(c),
            BigInt::from(self.wl.len()),
        )
    }

    /// The same count by looping over all of `W`.
    pub fn coset_count_naive(&self, w: &WeylElt, j: i64) -> BigRational {
        let aj_inv = self.a.pow_signed(-j);
        let hits = self
            .group
            .table()
            .elements()
            .iter()
            .filter(|x| {
                self.wl
                    .contains(&aj_inv.compose(&x.inverse().compose(w).compose(x)))
            })
            .count();
        BigRational::new(BigInt::from(hits), BigInt::from(self.wl.len()))
    }

    /// `ψ̃^{(-k)}` on `W̃_L`, listed per element: `ζ^{-ki}` on `a^i W_L`.
    pub fn psi_tilde(&self, k: i64) -> Vec<Cyclotomic> {
        let roots: Vec<Cyclotomic> = (0..self.e)
            .map(|i| Cyclotomic::root_power(self.e, -k * i as i64))
            .collect();
        self.coset_of.iter().map(|&i| roots[i].clone()).collect()
    }
}

/// Class function on a Weyl group with values in a cyclotomic field.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    values: BTreeMap<ClassLabel, Cyclotomic>,
}

impl ClassFunction {
    pub fn new(values: BTreeMap<ClassLabel, Cyclotomic>) -> Self {
        ClassFunction { values }
    }

    pub fn values(&self) -> &BTreeMap<ClassLabel, Cyclotomic> {
        &self.values
    }

    pub fn value(&self, label: &ClassLabel) -> &Cyclotomic {
        &self.values[label]
    }

    /// Values in class order, as integers when they are rational integers.
    pub fn integer_values(&self) -> Option<Vec<BigInt>> {
        self.values.values().map(Cyclotomic::to_integer).collect()
    }
}

/// `Ind_H^W χ` for `χ` given per element of `H` (in `H`'s order), via
/// `(Ind χ)(w) = |C_W(w)| / |H| · Σ_{h ∈ H, h ∼ w} χ(h)`.
pub fn induced_character(
    group: &WeylGroup,
    h: &SubgroupTable,
    chi: &[Cyclotomic],
    e: usize,
) -> ClassFunction {
    assert_eq!(chi.len(), h.len());
    let mut sums: BTreeMap<ClassLabel, Cyclotomic> = BTreeMap::new();
    for (y, v) in h.elements().iter().zip(chi) {
        let s = sums
            .entry(group.class_label(y))
            .or_insert_with(|| Cyclotomic::zero(e));
        *s = s.add(v);
    }
    let values = group
        .classes()
        .iter()
        .map(|c| {
            let s = sums.remove(&c.label).unwrap_or_else(|| Cyclotomic::zero(e));
            let factor = BigRational::new(
                BigInt::from(group.centralizer_order(&c.label)),
                BigInt::from(h.len()),
            );
            (c.label.clone(), s.scale(&factor))
        })
        .collect();
    ClassFunction { values }
}

/// Frobenius formula by a loop over all of `W` (reference implementation).
pub fn induced_character_naive(
    group: &WeylGroup,
    h: &SubgroupTable,
    chi: &[Cyclotomic],
    e: usize,
) -> ClassFunction {
    let values = group
        .classes()
        .iter()
        .map(|c| {
            let w = &c.representative;
            let mut s = Cyclotomic::zero(e);
            for x in group.table().elements() {
                let y = x.inverse().compose(w).compose(x);
                if let Some(k) = h.position(&y) {
                    s = s.add(&chi[k]);
                }
            }
            let factor = BigRational::new(BigInt::from(1), BigInt::from(h.len()));
            (c.label.clone(), s.scale(&factor))
        })
        .collect();
    ClassFunction { values }
}

/// Permutation character of `W` on `W/W_L` at `w`, i.e. the count at `j = 0`.
pub fn permutation_character(ctx: &InductionContext, w: &WeylElt) -> BigRational {
    ctx.coset_count(w, 0)
}

/// Whether every value is a nonnegative integer.
pub fn is_nonnegative_integer(r: &BigRational) -> bool {
    r.is_integer() && !(r < &BigRational::zero())
}
