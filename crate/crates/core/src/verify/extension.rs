use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::symfun::{springer_graded_char, Partition};
use crate::weyl::{InductionConfig, InductionContext, Perm, WeylElt};

/// For each letter block of a type `A` Levi: the block it is sent to by
/// `z`, and the induced permutation of positions inside the block.
pub fn block_action(blocks: &[Range<usize>], z: &Perm) -> Result<Vec<(usize, Perm)>> {
    let block_of = |x: usize| {
        blocks
            .iter()
            .position(|b| b.contains(&x))
            .expect("blocks cover all letters")
    };
    blocks
        .iter()
        .map(|b| {
            let t = block_of(z.apply(b.start));
            let target = &blocks[t];
            if target.len() != b.len() || b.clone().any(|x| !target.contains(&z.apply(x))) {
                return Err(Error::InvalidConfig(format!(
                    "{z} does not permute the Levi blocks"
                )));
            }
            let local: Vec<usize> = b.clone().map(|x| z.apply(x) - target.start).collect();
            Ok((t, Perm::from_images(&local)?))
        })
        .collect()
}

/// Conjugacy data of an element `z` of `W̃_L` acting on the tensor factors:
/// for each cycle of blocks, its length `c`, the Jordan type on those blocks
/// and the cycle type of `z^c` on the first block of the cycle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwistedCycleType(pub Vec<(usize, Partition, Partition)>);

impl TwistedCycleType {
    pub fn of(blocks: &[Range<usize>], types: &[Partition], z: &Perm) -> Result<Self> {
        let act = block_action(blocks, z)?;
        let mut seen = vec![false; blocks.len()];
        let mut parts = Vec::new();
        for b in 0..blocks.len() {
            if seen[b] {
                continue;
            }
            let mut local = Perm::identity(blocks[b].len());
            let (mut c, mut len) = (b, 0);
            loop {
                seen[c] = true;
                let (t, p) = &act[c];
                if types[*t] != types[c] {
                    return Err(Error::InvalidConfig(format!(
                        "block {} with type {} is sent to block {} with type {}",
                        c + 1,
                        types[c],
                        t + 1,
                        types[*t]
                    )));
                }
                local = p.compose(&local);
                c = *t;
                len += 1;
                if c == b {
                    break;
                }
            }
            parts.push((len, types[b].clone(), local.cycle_type()));
        }
        parts.sort();
        Ok(TwistedCycleType(parts))
    }

    /// Graded trace on the tensor product of the block modules: each cycle
    /// of length `c` contributes its block character at `q^c`.
    pub fn graded_trace(&self) -> Result<IntPolynomial> {
        let mut p = IntPolynomial::one();
        for (c, nu, rho) in &self.0 {
            let g = springer_graded_char(nu)?;
            p = &p * &g.value(rho).compose_power(*c);
        }
        Ok(p)
    }
}

impl fmt::Display for TwistedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(c, nu, rho)| format!("{c}x{nu}:{rho}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Graded character of `W̃_L` on `H*(𝔅_u^L)`, where `a` permutes the tensor
/// factors of the block modules. Keys are `(i, type)` for elements of
/// `a^i W_L`.
#[derive(Clone, Debug)]
pub struct ExtendedGradedCharacter {
    e: usize,
    blocks: Vec<Range<usize>>,
    types: Vec<Partition>,
    values: BTreeMap<(usize, TwistedCycleType), IntPolynomial>,
}

impl ExtendedGradedCharacter {
    pub fn e(&self) -> usize {
        self.e
    }

    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    pub fn block_types(&self) -> &[Partition] {
        &self.types
    }

    pub fn values(&self) -> &BTreeMap<(usize, TwistedCycleType), IntPolynomial> {
        &self.values
    }

    /// `Σ_n Tr(z, H^{2n}(𝔅_u^L)) q^n`.
    pub fn trace(&self, z: &WeylElt) -> Result<IntPolynomial> {
        let p = z
            .as_perm()
            .ok_or_else(|| Error::Unsupported("extension traces exist for type A only".into()))?;
        TwistedCycleType::of(&self.blocks, &self.types, p)?.graded_trace()
    }

    /// Graded dimension of `H*(𝔅_u^L)`.
    pub fn poincare(&self) -> Result<IntPolynomial> {
        let mut p = IntPolynomial::one();
        for nu in &self.types {
            p = &p * springer_graded_char(nu)?.poincare();
        }
        Ok(p)
    }
}

/// The `W̃_L`-module structure on the tensor product of the block modules
/// with `a` permuting factors (trivially on blocks it fixes).
pub fn tensor_cyclic_extension(
    cfg: &InductionConfig,
    ctx: &InductionContext,
) -> Result<ExtendedGradedCharacter> {
    let blocks = cfg.blocks()?;
    let types = cfg.block_types()?;
    let mut values = BTreeMap::new();
    for (k, z) in ctx.wtilde().elements().iter().enumerate() {
        let p = z.as_perm().expect("type A");
        let t = TwistedCycleType::of(&blocks, &types, p)?;
        if let std::collections::btree_map::Entry::Vacant(slot) =
            values.entry((ctx.coset_index(k), t))
        {
            let v = slot.key().1.graded_trace()?;
            slot.insert(v);
        }
    }
    Ok(ExtendedGradedCharacter {
        e: cfg.e(),
        blocks,
        types,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{case_b_layout, USpec, DEFAULT_BOUND};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn setup(k: usize, m: usize, e: usize, nu: &[usize]) -> (InductionConfig, InductionContext) {
        let mut types = Vec::new();
        if k > 0 {
            types.push(Partition::row(k));
        }
        types.extend(std::iter::repeat_n(p(nu), e));
        let cfg = case_b_layout(k, m, e, USpec::Blocks(types)).unwrap();
        let ctx = InductionContext::new(&cfg, DEFAULT_BOUND).unwrap();
        (cfg, ctx)
    }

    #[test]
    fn tensor_square_of_coinvariants() {
        let (cfg, ctx) = setup(0, 2, 2, &[1, 1]);
        let ext = tensor_cyclic_extension(&cfg, &ctx).unwrap();
        // a alone swaps the two copies of 1 + q
        assert_eq!(
            ext.trace(cfg.a()).unwrap(),
            IntPolynomial::from_i64s(&[1, 0, 1])
        );
        let id = WeylElt::Perm(Perm::identity(4));
        assert_eq!(
            ext.trace(&id).unwrap(),
            IntPolynomial::from_i64s(&[1, 2, 1])
        );
        assert_eq!(
            ext.poincare().unwrap(),
            IntPolynomial::from_i64s(&[1, 2, 1])
        );
    }

    #[test]
    fn trivial_cases() {
        let (cfg, ctx) = setup(0, 1, 3, &[1]);
        let ext = tensor_cyclic_extension(&cfg, &ctx).unwrap();
        assert!(ext.values().values().all(|v| *v == IntPolynomial::one()));
        let (cfg, ctx) = setup(0, 2, 2, &[2]);
        let ext = tensor_cyclic_extension(&cfg, &ctx).unwrap();
        assert_eq!(ext.trace(cfg.a()).unwrap(), IntPolynomial::one());
    }

    #[test]
    fn restriction_to_levi() {
        let (cfg, ctx) = setup(1, 2, 2, &[1, 1]);
        let ext = tensor_cyclic_extension(&cfg, &ctx).unwrap();
        let g = springer_graded_char(&p(&[1, 1])).unwrap();
        for y in ctx.wl().elements() {
            let perm = y.as_perm().unwrap();
            let mut expected = IntPolynomial::one();
            for b in ext.blocks().iter().filter(|b| b.len() == 2) {
                let local: Vec<usize> = b.clone().map(|x| perm.apply(x) - b.start).collect();
                expected = &expected * g.value(&Perm::from_images(&local).unwrap().cycle_type());
            }
            assert_eq!(ext.trace(y).unwrap(), expected);
        }
    }

    #[test]
    fn constant_on_conjugates() {
        let (cfg, ctx) = setup(0, 2, 3, &[1, 1]);
        let ext = tensor_cyclic_extension(&cfg, &ctx).unwrap();
        let els = ctx.wtilde().elements();
        for (k, z) in els.iter().enumerate().step_by(7) {
            for t in els.iter().step_by(5) {
                let c = t.conjugate(z);
                let kc = ctx.wtilde().position(&c).unwrap();
                assert_eq!(ctx.coset_index(kc), ctx.coset_index(k));
                assert_eq!(ext.trace(&c).unwrap(), ext.trace(z).unwrap());
            }
        }
    }

    #[test]
    fn rejects_elements_outside() {
        let (_, ctx) = setup(0, 2, 2, &[1, 1]);
        let blocks = vec![0..2, 2..4];
        let bad = Perm::from_cycles(4, &[vec![1, 2]]).unwrap();
        assert!(block_action(&blocks, &bad).is_err());
        assert_eq!(ctx.wtilde().len(), 8);
    }
}
