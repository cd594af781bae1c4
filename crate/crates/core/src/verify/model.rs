//! Explicit matrices for `Γ-Ind_{W_L}^W V^{(ζ)}`, built directly from the
//! action `b(x ⊗ v) = ζ^n (x b⁻¹ ⊗ b v)` on a basis indexed by (coset,
//! basis vector of `V`). Used as a reference for the trace formula.

use std::ops::Range;

use num_rational::BigRational;
use num_traits::Zero;

use super::extension::block_action;
use crate::error::{Error, Result};
use crate::poly::{Cyclotomic, CyclotomicField, CyclotomicMatrix, RationalMatrix};
use crate::symfun::{
    dim_sn, kostka_foulkes_tilde, seminormal_generators, seminormal_matrix, Partition,
};
use crate::weyl::{InductionConfig, InductionContext, Perm, WeylElt};

/// `H*(𝔅_ν)` as a graded `S_m`-module: `[q^d] K̃_{λν}` copies of the Specht
/// module `S^λ` (seminormal form) in degree `d`.
#[derive(Debug)]
struct SpringerModule {
    dim: usize,
    degrees: Vec<usize>,
    // (generators of S^λ, offset, dim of S^λ)
    summands: Vec<(usize, usize, usize)>,
    generators: Vec<Vec<RationalMatrix>>,
}

impl SpringerModule {
    fn new(nu: &Partition) -> Self {
        let mut degrees = Vec::new();
        let mut summands = Vec::new();
        let mut generators = Vec::new();
        for lambda in Partition::all(nu.size()) {
            let kt = kostka_foulkes_tilde(&lambda, nu);
            if kt.is_zero() {
                continue;
            }
            let d = dim_sn(&lambda) as usize;
            let g = generators.len();
            generators.push(seminormal_generators(&lambda));
            for (deg, c) in kt.coeffs().iter().enumerate() {
                let copies: usize = c
                    .try_into()
                    .expect("Kostka-Foulkes coefficients are small and nonnegative");
                for _ in 0..copies {
                    summands.push((g, degrees.len(), d));
                    degrees.extend(std::iter::repeat_n(deg, d));
                }
            }
        }
        SpringerModule {
            dim: degrees.len(),
            degrees,
            summands,
            generators,
        }
    }

    fn matrix(&self, p: &Perm) -> RationalMatrix {
        let mut m = RationalMatrix::zeros((), self.dim, self.dim);
        let images = p.images();
        let mut cache: Vec<Option<RationalMatrix>> = vec![None; self.generators.len()];
        for &(g, off, d) in &self.summands {
            let block =
                cache[g].get_or_insert_with(|| seminormal_matrix(&self.generators[g], d, &images));
            for r in 0..d {
                for c in 0..d {
                    m.set(off + r, off + c, block.get(r, c).clone());
                }
            }
        }
        m
    }
}

/// `V = ⊗_b H*(𝔅_{ν_b})` with `W̃_L` acting through its block action.
#[derive(Debug)]
struct TensorModule {
    blocks: Vec<Range<usize>>,
    factors: Vec<SpringerModule>,
    dim: usize,
    degrees: Vec<usize>,
}

impl TensorModule {
    fn new(blocks: Vec<Range<usize>>, types: &[Partition]) -> Self {
        let factors: Vec<SpringerModule> = types.iter().map(SpringerModule::new).collect();
        let dim = factors.iter().map(|f| f.dim).product();
        let mut t = TensorModule {
            blocks,
            factors,
            dim,
            degrees: Vec::new(),
        };
        t.degrees = (0..dim)
            .map(|s| {
                t.decode(s)
                    .iter()
                    .zip(&t.factors)
                    .map(|(&k, f)| f.degrees[k])
                    .sum()
            })
            .collect();
        t
    }

    fn decode(&self, mut s: usize) -> Vec<usize> {
        let mut idx = vec![0; self.factors.len()];
        for (b, f) in self.factors.iter().enumerate().rev() {
            idx[b] = s % f.dim;
            s /= f.dim;
        }
        idx
    }

    /// The factor `v_b` of `⊗ v_b` is moved to the position of the block
    /// `z` sends `b` to, after acting by the induced local permutation.
    fn matrix(&self, z: &Perm) -> Result<RationalMatrix> {
        let act = block_action(&self.blocks, z)?;
        let local: Vec<RationalMatrix> = act
            .iter()
            .zip(&self.factors)
            .map(|((_, p), f)| f.matrix(p))
            .collect();
        let mut m = RationalMatrix::zeros((), self.dim, self.dim);
        for s in 0..self.dim {
            let src = self.decode(s);
            for t in 0..self.dim {
                let dst = self.decode(t);
                let mut x = BigRational::from_integer(1.into());
                for (b, (target, _)) in act.iter().enumerate() {
                    x *= local[b].get(dst[*target], src[b]);
                    if x.is_zero() {
                        break;
                    }
                }
                if !x.is_zero() {
                    m.set(t, s, x);
                }
            }
        }
        Ok(m)
    }
}

/// Explicit model of `Γ-Ind_{W_L}^W V^{(ζ)}` for type `A`.
#[derive(Debug)]
pub struct InducedModel<'a> {
    ctx: &'a InductionContext,
    reps: Vec<WeylElt>,
    module: TensorModule,
}

impl<'a> InducedModel<'a> {
    /// Fails with `SizeBound` when `[W : W_L] · dim V` exceeds `max_dim`.
    pub fn new(cfg: &InductionConfig, ctx: &'a InductionContext, max_dim: usize) -> Result<Self> {
        let module = TensorModule::new(cfg.blocks()?, &cfg.block_types()?);
        let reps = ctx.group().table().left_coset_reps(ctx.wl());
        let dim = reps.len() * module.dim;
        if dim > max_dim {
            return Err(Error::SizeBound {
                n: dim,
                bound: max_dim,
            });
        }
        Ok(InducedModel { ctx, reps, module })
    }

    pub fn dim(&self) -> usize {
        self.reps.len() * self.module.dim
    }

    /// Matrix of `(a^i, w)` with `ζ = ζ_e^{j_root}`.
    pub fn matrix(&self, w: &WeylElt, i: i64, j_root: i64) -> Result<CyclotomicMatrix> {
        let e = self.ctx.e();
        let ai = self.ctx.a().pow_signed(i);
        let ai_inv = ai.inverse();
        let d = self.module.dim;
        let mut m = CyclotomicMatrix::zeros(CyclotomicField::get(e), self.dim(), self.dim());
        for (k, x) in self.reps.iter().enumerate() {
            let g = w.compose(x).compose(&ai_inv);
            let (k2, h) = self
                .reps
                .iter()
                .enumerate()
                .find_map(|(k2, x2)| {
                    let h = x2.inverse().compose(&g);
                    self.ctx.wl().contains(&h).then_some((k2, h))
                })
                .expect("cosets cover W");
            let z = h.compose(&ai);
            let mz = self.module.matrix(z.as_perm().expect("type A"))?;
            for s in 0..d {
                let weight = Cyclotomic::root_power(e, i * j_root * self.module.degrees[s] as i64);
                for r in 0..d {
                    let v = mz.get(r, s);
                    if !v.is_zero() {
                        m.set(k2 * d + r, k * d + s, weight.scale(v));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn trace(&self, w: &WeylElt, i: i64, j_root: i64) -> Result<Cyclotomic> {
        Ok(self.matrix(w, i, j_root)?.trace())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{gamma_ind_trace, primitive_exponents, tensor_cyclic_extension};
    use crate::weyl::{case_a_config, case_b_config, regular_config, DEFAULT_BOUND};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn agree(cfg: &InductionConfig) {
        let ctx = InductionContext::new(cfg, DEFAULT_BOUND).unwrap();
        let ext = tensor_cyclic_extension(cfg, &ctx).unwrap();
        let model = InducedModel::new(cfg, &ctx, 200).unwrap();
        let e = cfg.e() as i64;
        for c in ctx.group().classes() {
            for i in 0..e {
                for jr in primitive_exponents(cfg.e()) {
                    let fast = gamma_ind_trace(&ctx, &ext, &c.representative, i, jr).unwrap();
                    assert_eq!(
                        model.trace(&c.representative, i, jr).unwrap(),
                        fast,
                        "{} i={i} j={jr}",
                        c.label
                    );
                }
            }
        }
    }

    #[test]
    fn s4_walkthrough_values() {
        let cfg = regular_config(&p(&[2, 2]), 2).unwrap();
        let ctx = InductionContext::new(&cfg, DEFAULT_BOUND).unwrap();
        let model = InducedModel::new(&cfg, &ctx, 200).unwrap();
        assert_eq!(model.dim(), 6);
        let w = |c: &[Vec<usize>]| WeylElt::Perm(Perm::from_cycles(4, c).unwrap());
        let two = |n: i64| Cyclotomic::from_integer(2, n);
        assert_eq!(
            model.trace(&w(&[vec![0, 1], vec![2, 3]]), 1, 1).unwrap(),
            two(4)
        );
        assert_eq!(model.trace(&w(&[vec![0, 1, 2, 3]]), 1, 1).unwrap(), two(2));
        assert_eq!(model.trace(&w(&[]), 0, 1).unwrap(), two(6));
        agree(&cfg);
    }

    #[test]
    fn formula_matches_model() {
        agree(&case_b_config(None, 2, &p(&[1, 1])).unwrap());
        agree(&case_b_config(None, 3, &p(&[1])).unwrap());
        agree(&case_b_config(Some(&p(&[1])), 2, &p(&[1, 1])).unwrap());
        agree(&case_a_config(5, 3, &p(&[1, 1])).unwrap());
        agree(&case_a_config(4, 2, &p(&[1, 1])).unwrap());
        agree(&case_a_config(5, 3, &p(&[2])).unwrap());
    }

    #[test]
    fn model_is_a_representation() {
        let cfg = case_b_config(None, 2, &p(&[1, 1])).unwrap();
        let ctx = InductionContext::new(&cfg, DEFAULT_BOUND).unwrap();
        let model = InducedModel::new(&cfg, &ctx, 200).unwrap();
        assert_eq!(model.dim(), 24);
        let els = ctx.group().table().elements();
        for (x, y) in [(3, 7), (10, 22), (5, 5), (17, 1)] {
            for (i1, i2) in [(0, 1), (1, 1)] {
                let lhs = model
                    .matrix(&els[x], i1, 1)
                    .unwrap()
                    .mul(&model.matrix(&els[y], i2, 1).unwrap());
                let rhs = model.matrix(&els[x].compose(&els[y]), i1 + i2, 1).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        let id = model.matrix(&els[0].identity_like(), 2, 1).unwrap();
        assert_eq!(id, CyclotomicMatrix::identity(CyclotomicField::get(2), 24));
    }

    #[test]
    fn size_bound() {
        let cfg = case_b_config(None, 2, &p(&[1, 1, 1])).unwrap();
        let ctx = InductionContext::new(&cfg, DEFAULT_BOUND).unwrap();
        assert!(matches!(
            InducedModel::new(&cfg, &ctx, 200),
            Err(Error::SizeBound { n: 720, bound: 200 })
        ));
    }
}
