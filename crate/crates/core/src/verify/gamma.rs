use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::extension::ExtendedGradedCharacter;
use crate::error::Result;
use crate::poly::{eval_at_root, Cyclotomic, IntPolynomial};
use crate::weyl::{ClassLabel, InductionContext, WeylElt, WeylGroup};

/// Trace of `(a^i, w)` on `Γ-Ind_{W_L}^W V^{(ζ)}` with `ζ = ζ_e^{j_root}`.
///
/// The coset `xW_L` is fixed exactly when `x⁻¹wx ∈ a^i W_L`, where the
/// diagonal block is `ζ^{in}` times the action of `x⁻¹wx` on `V_n`, so the
/// trace is `|C_W(w)| / |W_L| · Σ_{y ∈ a^iW_L, y ∼ w} P_y(ζ^i)`.
pub fn gamma_ind_trace(
    ctx: &InductionContext,
    ext: &ExtendedGradedCharacter,
    w: &WeylElt,
    i: i64,
    j_root: i64,
) -> Result<Cyclotomic> {
    let g = ctx.group();
    let label = g.class_label(w);
    let mut sum = IntPolynomial::zero();
    for y in ctx.coset(i) {
        if g.class_label(y) == label {
            sum = &sum + &ext.trace(y)?;
        }
    }
    Ok(finish(g, &label, ctx.wl().len(), &sum, ctx.e(), i, j_root))
}

fn finish(
    g: &WeylGroup,
    label: &ClassLabel,
    wl: usize,
    sum: &IntPolynomial,
    e: usize,
    i: i64,
    j_root: i64,
) -> Cyclotomic {
    let factor = BigRational::new(BigInt::from(g.centralizer_order(label)), BigInt::from(wl));
    eval_at_root(sum, e, i * j_root).scale(&factor)
}

/// `gamma_ind_trace` for all classes at once: the graded traces over each
/// `a^i W_L` are summed per `W`-class up front.
pub struct GammaTable {
    group: Arc<WeylGroup>,
    wl: usize,
    e: usize,
    sums: BTreeMap<(usize, ClassLabel), IntPolynomial>,
}

impl GammaTable {
    pub fn new(ctx: &InductionContext, ext: &ExtendedGradedCharacter) -> Result<Self> {
        let g = ctx.group().clone();
        let mut sums: BTreeMap<(usize, ClassLabel), IntPolynomial> = BTreeMap::new();
        for (k, y) in ctx.wtilde().elements().iter().enumerate() {
            let key = (ctx.coset_index(k), g.class_label(y));
            let t = ext.trace(y)?;
            let s = sums.entry(key).or_insert_with(IntPolynomial::zero);
            *s = &*s + &t;
        }
        Ok(GammaTable {
            group: g,
            wl: ctx.wl().len(),
            e: ctx.e(),
            sums,
        })
    }

    pub fn trace(&self, label: &ClassLabel, i: i64, j_root: i64) -> Cyclotomic {
        let ii = i.rem_euclid(self.e as i64) as usize;
        match self.sums.get(&(ii, label.clone())) {
            Some(s) => finish(&self.group, label, self.wl, s, self.e, i, j_root),
            None => Cyclotomic::zero(self.e),
        }
    }
}
