use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::element::WeylElt;
use super::perm::Perm;
use super::regular::{is_l_regular, is_regular_in_lprime, lies_in_lprime, normalizes_levi};
use crate::error::{Error, Result};
use crate::rootsys::{Family, LeviConfig, RootSystem};
use crate::symfun::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    /// `W_{L′} ≠ 1`, `a` an `L`-regular element of `W_{L′}`.
    A,
    /// `W_{L′} = 1`, `a` permuting isomorphic type `A` components cyclically.
    B,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::A => "a",
            CaseTag::B => "b",
        })
    }
}

/// Unipotent class in `L`: regular, or a Jordan type per block of a type
/// `A` Levi (blocks in increasing letter order, singletons included).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum USpec {
    Regular,
    Blocks(Vec<Partition>),
}

#[derive(Clone, Debug)]
pub struct InductionConfig {
    levi: LeviConfig,
    e: usize,
    a: WeylElt,
    u_spec: USpec,
}

impl InductionConfig {
    pub fn new(levi: LeviConfig, e: usize, a: WeylElt, u_spec: USpec) -> Self {
        InductionConfig { levi, e, a, u_spec }
    }

    pub fn levi(&self) -> &LeviConfig {
        &self.levi
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        self.levi.parent()
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn a(&self) -> &WeylElt {
        &self.a
    }

    pub fn u_spec(&self) -> &USpec {
        &self.u_spec
    }

    pub fn is_type_a(&self) -> bool {
        self.root_system().family() == Family::A
    }

    /// Letter blocks of the type `A` Levi.
    pub fn blocks(&self) -> Result<Vec<Range<usize>>> {
        if !self.is_type_a() {
            return Err(Error::Unsupported(
                "letter blocks exist for type A only".into(),
            ));
        }
        Ok(type_a_blocks(self.root_system().dim(), self.levi.pi_l()))
    }

    /// Jordan type of `u` in each block.
    pub fn block_types(&self) -> Result<Vec<Partition>> {
        let blocks = self.blocks()?;
        match &self.u_spec {
            USpec::Regular => Ok(blocks.iter().map(|b| Partition::row(b.len())).collect()),
            USpec::Blocks(nus) => {
                if nus.len() != blocks.len() {
                    return Err(Error::InvalidConfig(format!(
                        "{} Jordan types given for {} blocks",
                        nus.len(),
                        blocks.len()
                    )));
                }
                for (nu, b) in nus.iter().zip(&blocks) {
                    if nu.size() != b.len() {
                        return Err(Error::InvalidConfig(format!(
                            "{nu} is not a partition of the block size {}",
                            b.len()
                        )));
                    }
                }
                Ok(nus.clone())
            }
        }
    }

    /// Jordan type of `u` in `GL_n`: the union of the block types.
    pub fn merged_jordan_type(&self) -> Result<Partition> {
        Ok(self
            .block_types()?
            .iter()
            .fold(Partition::empty(), |acc, p| acc.union(p)))
    }

    pub fn u_is_regular(&self) -> bool {
        match &self.u_spec {
            USpec::Regular => true,
            USpec::Blocks(nus) => nus.iter().all(|p| p.len() <= 1),
        }
    }
}

/// Maximal runs of letters joined by the simple roots `e_i - e_{i+1}`,
/// `i ∈ Π_L`.
pub fn type_a_blocks(n: usize, pi_l: &[usize]) -> Vec<Range<usize>> {
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 0..n {
        if !pi_l.contains(&i) {
            blocks.push(start..i + 1);
            start = i + 1;
        }
    }
    blocks
}

/// Simple roots of the standard Levi with the given block sizes.
pub fn pi_l_for_blocks(sizes: &[usize]) -> Vec<usize> {
    let mut pi = Vec::new();
    let mut start = 0;
    for &s in sizes {
        pi.extend(start..start + s.saturating_sub(1));
        start += s;
    }
    pi
}

/// Permutation moving the blocks of each orbit cyclically: copy `t` of an
/// orbit is sent to copy `t + 1` letter by letter. Blocks outside the
/// orbits are fixed pointwise.
pub fn cyclic_block_element(sizes: &[usize], orbits: &[Vec<usize>]) -> Result<Perm> {
    let starts: Vec<usize> = sizes
        .iter()
        .scan(0, |s, &k| {
            let b = *s;
            *s += k;
            Some(b)
        })
        .collect();
    let n: usize = sizes.iter().sum();
    let mut img: Vec<usize> = (0..n).collect();
    let mut used = vec![false; sizes.len()];
    for orbit in orbits {
        let Some(&first) = orbit.first() else {
            continue;
        };
        for (t, &b) in orbit.iter().enumerate() {
            if b >= sizes.len() || used[b] {
                return Err(Error::InvalidConfig(format!(
                    "orbits {orbits:?} do not partition distinct blocks"
                )));
            }
            used[b] = true;
            if sizes[b] != sizes[first] {
                return Err(Error::InvalidConfig(format!(
                    "blocks of unequal size in orbit {orbit:?}"
                )));
            }
            let next = orbit[(t + 1) % orbit.len()];
            for k in 0..sizes[b] {
                img[starts[b] + k] = starts[next] + k;
            }
        }
    }
    Perm::from_images(&img)
}

/// Case (b) element for a type `A` configuration: blocks are grouped by
/// size in order of appearance into runs of `e`, at most one block being
/// left over as the fixed component; each run is rotated.
pub fn case_b_element(cfg: &InductionConfig) -> Result<WeylElt> {
    let blocks = cfg.blocks()?;
    let sizes: Vec<usize> = blocks.iter().map(Range::len).collect();
    let e = cfg.e();
    let orbits = case_b_orbits(&sizes, e)?;
    Ok(WeylElt::Perm(cyclic_block_element(&sizes, &orbits)?))
}

/// Groups blocks of equal size into orbits of length `e`.
pub fn case_b_orbits(sizes: &[usize], e: usize) -> Result<Vec<Vec<usize>>> {
    if e == 0 {
        return Err(Error::InvalidConfig("e must be positive".into()));
    }
    let mut by_size: Vec<(usize, Vec<usize>)> = Vec::new();
    for (b, &s) in sizes.iter().enumerate() {
        match by_size.iter_mut().find(|(k, _)| *k == s) {
            Some((_, v)) => v.push(b),
            None => by_size.push((s, vec![b])),
        }
    }
    let mut leftover = 0;
    let mut orbits = Vec::new();
    for (_, bs) in &by_size {
        let extra = bs.len() % e;
        leftover += extra;
        // the leftover block is the first of its size
        orbits.extend(bs[extra..].chunks(e).map(<[usize]>::to_vec));
    }
    if leftover > 1 {
        return Err(Error::InvalidConfig(format!(
            "block sizes {sizes:?} cannot be arranged as one fixed block plus orbits of length {e}"
        )));
    }
    Ok(orbits)
}

/// Type `A_{n-1}` configuration with the given block sizes and block orbits.
pub fn type_a_config(
    sizes: &[usize],
    orbits: &[Vec<usize>],
    e: usize,
    u_spec: USpec,
) -> Result<InductionConfig> {
    let n: usize = sizes.iter().sum();
    if n < 2 {
        return Err(Error::InvalidConfig(
            "type A configurations need n ≥ 2".into(),
        ));
    }
    let rs = Arc::new(RootSystem::new(Family::A, n - 1)?);
    let levi = LeviConfig::new(rs, &pi_l_for_blocks(sizes))?;
    let a = WeylElt::Perm(cyclic_block_element(sizes, orbits)?);
    Ok(InductionConfig::new(levi, e, a, u_spec))
}

/// `GL_{k+em} ⊃ GL_k × GL_m^e` with the `e` copies of `GL_m` rotated; the
/// fixed block comes first and is omitted when `k = 0`.
pub fn case_b_layout(k: usize, m: usize, e: usize, u_spec: USpec) -> Result<InductionConfig> {
    let mut sizes = Vec::new();
    if k > 0 {
        sizes.push(k);
    }
    let first = sizes.len();
    sizes.extend(std::iter::repeat_n(m, e));
    type_a_config(&sizes, &[(first..first + e).collect()], e, u_spec)
}

/// `GL_n ⊃ GL_1^{n-m} × GL_m` with `a` a product of `e`-cycles on the first
/// `n - m` letters.
pub fn case_a_layout(n: usize, m: usize, e: usize, u_spec: USpec) -> Result<InductionConfig> {
    if m > n || e == 0 || !(n - m).is_multiple_of(e) {
        return Err(Error::InvalidConfig(format!(
            "need e | n - m, got n={n}, m={m}, e={e}"
        )));
    }
    let mut sizes = vec![1; n - m];
    if m > 0 {
        sizes.push(m);
    }
    let orbits: Vec<Vec<usize>> = (0..(n - m) / e)
        .map(|c| (c * e..(c + 1) * e).collect())
        .collect();
    type_a_config(&sizes, &orbits, e, u_spec)
}

/// Type `A` configuration with the given block sizes, the blocks of each
/// size rotated in runs of `e` and at most one block fixed.
pub fn block_config(sizes: &[usize], e: usize, u_spec: USpec) -> Result<InductionConfig> {
    type_a_config(sizes, &case_b_orbits(sizes, e)?, e, u_spec)
}

/// `u` regular in `L` with Jordan type `μ` in `GL_n`: the blocks are the
/// parts of `μ`.
pub fn regular_config(mu: &Partition, e: usize) -> Result<InductionConfig> {
    block_config(mu.parts(), e, USpec::Regular)
}

/// Case (a) layout with Jordan type `ν` on the trailing `GL_m` block.
pub fn case_a_config(n: usize, e: usize, nu: &Partition) -> Result<InductionConfig> {
    let m = nu.size();
    let mut types = vec![Partition::row(1); n.saturating_sub(m)];
    types.push(nu.clone());
    case_a_layout(n, m, e, USpec::Blocks(types))
}

/// Case (b) layout `GL_k × GL_m^e` with Jordan types `fixed` and `ν`.
pub fn case_b_config(
    fixed: Option<&Partition>,
    e: usize,
    nu: &Partition,
) -> Result<InductionConfig> {
    let mut types: Vec<Partition> = fixed.into_iter().cloned().collect();
    types.extend(std::iter::repeat_n(nu.clone(), e));
    case_b_layout(
        fixed.map_or(0, Partition::size),
        nu.size(),
        e,
        USpec::Blocks(types),
    )
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidConfig(msg.into())
}

/// Classifies the configuration as case (a) or (b), or names the first
/// violated condition.
pub fn validate_config(cfg: &InductionConfig) -> Result<CaseTag> {
    let levi = cfg.levi();
    let rs = levi.parent();
    let a = cfg.a();
    let e = cfg.e();
    if a.dim() != rs.dim() {
        return Err(invalid(
            "a does not act on the ambient space of the root system",
        ));
    }
    if a.order() != e {
        return Err(invalid(format!(
            "a has order {}, expected e = {e}",
            a.order()
        )));
    }
    if !normalizes_levi(a, levi) {
        return Err(invalid(
            "a does not normalize W_L (it does not preserve Φ_L)",
        ));
    }
    let tag = if !levi.pi_prime().is_empty() {
        if rs.components(levi.pi_l()).len() > 1 {
            return Err(invalid(format!(
                "case (a) needs L simple modulo center, but Π_L has type {}",
                levi.l_type()
            )));
        }
        if !lies_in_lprime(a, levi) {
            return Err(invalid(format!(
                "case (a) needs a ∈ W_L′ (Π′ of type {})",
                levi.lprime_type()
            )));
        }
        if !is_regular_in_lprime(a, e, levi) {
            return Err(invalid("case (a) needs a regular in W_L′"));
        }
        if !is_l_regular(a, e, levi) {
            return Err(invalid(
                "case (a) needs a L-regular: V(a,ζ) lies on H_β for some β ∈ Φ − Φ_L",
            ));
        }
        CaseTag::A
    } else {
        validate_case_b(cfg)?;
        CaseTag::B
    };
    validate_u_spec(cfg, tag)?;
    Ok(tag)
}

fn validate_case_b(cfg: &InductionConfig) -> Result<()> {
    let levi = cfg.levi();
    let rs = levi.parent();
    let a = cfg.a();
    let e = cfg.e();
    let comps = rs.components(levi.pi_l());
    // component containing the support of a root of Φ_L
    let comp_of_root = |v: &[i64]| -> Option<usize> {
        let k = rs.root_index(v)?;
        let coeffs = &rs.root_coeffs()[k];
        let support: Vec<usize> = (0..coeffs.len()).filter(|&i| coeffs[i] != 0).collect();
        comps
            .iter()
            .position(|c| support.iter().all(|i| c.contains(i)))
    };
    let mut sigma = Vec::with_capacity(comps.len());
    for c in &comps {
        let images: Vec<Option<usize>> = c
            .iter()
            .map(|&i| comp_of_root(&a.apply(&rs.simple_roots()[i])))
            .collect();
        match images[0] {
            Some(t) if images.iter().all(|&x| x == Some(t)) => sigma.push(t),
            _ => return Err(invalid("a does not permute the components of Π_L")),
        }
    }
    let mut fixed = Vec::new();
    let mut cycled = Vec::new();
    for (i, c) in comps.iter().enumerate() {
        let mut len = 1;
        let mut j = sigma[i];
        while j != i {
            j = sigma[j];
            len += 1;
        }
        if len == 1 && e > 1 {
            fixed.push(i);
        } else if len == e {
            cycled.push(i);
            if !rs.dynkin_type(c).starts_with('A') {
                return Err(invalid(format!(
                    "case (b): cycled component of type {} is not of type A",
                    rs.dynkin_type(c)
                )));
            }
        } else {
            return Err(invalid(format!(
                "case (b): a permutes a component of Π_L in an orbit of length {len} ≠ e = {e}"
            )));
        }
    }
    if fixed.len() > 1 {
        return Err(invalid(format!(
            "case (b): {} components of Π_L are fixed by a, at most one allowed",
            fixed.len()
        )));
    }
    for &i in &fixed {
        if comps[i]
            .iter()
            .any(|&k| a.apply(&rs.simple_roots()[k]) != rs.simple_roots()[k])
        {
            return Err(invalid(
                "case (b): a does not act trivially on the fixed component X_0",
            ));
        }
    }
    let cycled_roots: Vec<&Vec<i64>> = cycled
        .iter()
        .flat_map(|&i| comps[i].iter().map(|&k| &rs.simple_roots()[k]))
        .collect();
    for k in levi.outside_l() {
        let beta = &rs.roots()[k];
        if cycled_roots.iter().all(|g| rs.inner(beta, g) == 0) {
            return Err(invalid(format!(
                "case (b): the root {beta:?} ∈ Φ − Φ_L is orthogonal to the cycled components"
            )));
        }
    }
    Ok(())
}

fn validate_u_spec(cfg: &InductionConfig, tag: CaseTag) -> Result<()> {
    let USpec::Blocks(_) = cfg.u_spec() else {
        return Ok(());
    };
    let types = cfg.block_types()?;
    if tag == CaseTag::B {
        let blocks = cfg.blocks()?;
        let p = cfg.a().as_perm().expect("type A element");
        for (b, block) in blocks.iter().enumerate() {
            let target = p.apply(block.start);
            let t = blocks
                .iter()
                .position(|x| x.contains(&target))
                .expect("blocks cover all letters");
            if types[t] != types[b] {
                return Err(invalid(format!(
                    "case (b): a sends block {} (type {}) to block {} (type {})",
                    b + 1,
                    types[b],
                    t + 1,
                    types[t]
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn blocks_round_trip() {
        assert_eq!(type_a_blocks(4, &[0, 2]), vec![0..2, 2..4]);
        assert_eq!(type_a_blocks(3, &[]), vec![0..1, 1..2, 2..3]);
        assert_eq!(pi_l_for_blocks(&[2, 1, 3]), vec![0, 3, 4]);
        assert_eq!(
            type_a_blocks(6, &pi_l_for_blocks(&[2, 1, 3])),
            vec![0..2, 2..3, 3..6]
        );
    }

    #[test]
    fn case_b_elements() {
        let cfg = case_b_layout(0, 2, 2, USpec::Regular).unwrap();
        assert_eq!(case_b_element(&cfg).unwrap().to_string(), "(13)(24)");
        assert_eq!(cfg.a().to_string(), "(13)(24)");
        let cfg = case_b_layout(0, 2, 3, USpec::Regular).unwrap();
        assert_eq!(case_b_element(&cfg).unwrap().to_string(), "(135)(246)");
        let cfg = case_b_layout(0, 1, 3, USpec::Regular).unwrap();
        assert_eq!(case_b_element(&cfg).unwrap().to_string(), "(123)");
        let cfg = case_b_layout(3, 2, 2, USpec::Regular).unwrap();
        assert_eq!(cfg.a().to_string(), "(46)(57)");
    }

    #[test]
    fn validation_examples() {
        let cfg = case_b_layout(0, 2, 2, USpec::Blocks(vec![p(&[2]), p(&[2])])).unwrap();
        assert_eq!(validate_config(&cfg).unwrap(), CaseTag::B);

        // S_5 with W_L = S_2 on the last two letters and a = (123)
        let rs = Arc::new(RootSystem::new(Family::A, 4).unwrap());
        let levi = LeviConfig::new(rs.clone(), &[3]).unwrap();
        let a = WeylElt::Perm(Perm::from_cycles(5, &[vec![0, 1, 2]]).unwrap());
        let cfg = InductionConfig::new(levi.clone(), 3, a.clone(), USpec::Regular);
        assert_eq!(validate_config(&cfg).unwrap(), CaseTag::A);

        let bad = InductionConfig::new(levi, 2, a, USpec::Regular);
        assert!(
            matches!(validate_config(&bad), Err(Error::InvalidConfig(m)) if m.contains("order"))
        );

        // in S_6 the fixed letter 4 puts V(a, ζ) on the hyperplane of e_4 - e_5
        let rs = Arc::new(RootSystem::new(Family::A, 5).unwrap());
        let levi = LeviConfig::new(rs, &[4]).unwrap();
        let a = WeylElt::Perm(Perm::from_cycles(6, &[vec![0, 1, 2]]).unwrap());
        let cfg = InductionConfig::new(levi, 3, a, USpec::Regular);
        assert!(
            matches!(validate_config(&cfg), Err(Error::InvalidConfig(m)) if m.contains("L-regular"))
        );
    }

    #[test]
    fn rejections() {
        // unequal block types along an orbit
        let cfg = case_b_layout(0, 2, 2, USpec::Blocks(vec![p(&[2]), p(&[1, 1])])).unwrap();
        assert!(validate_config(&cfg).is_err());
        // a transposition does not normalize GL_2 × GL_1 × GL_1 in this position
        let rs = Arc::new(RootSystem::new(Family::A, 3).unwrap());
        let levi = LeviConfig::new(rs, &[0]).unwrap();
        let a = WeylElt::Perm(Perm::from_cycles(4, &[vec![1, 2]]).unwrap());
        assert!(validate_config(&InductionConfig::new(levi, 2, a, USpec::Regular)).is_err());
        // Π_L disconnected with Π′ ≠ ∅: GL_2 × GL_1 × GL_1 × GL_2
        let cfg = type_a_config(&[2, 1, 1, 2], &[], 1, USpec::Regular).unwrap();
        assert!(
            matches!(validate_config(&cfg), Err(Error::InvalidConfig(m)) if m.contains("simple modulo center"))
        );
        // a fixed letter orthogonal to both blocks: GL_2 × GL_1 × GL_2 × GL_1
        let cfg = type_a_config(&[2, 1, 2, 1], &[], 1, USpec::Regular).unwrap();
        assert!(
            matches!(validate_config(&cfg), Err(Error::InvalidConfig(m)) if m.contains("orthogonal"))
        );
        assert!(case_b_orbits(&[2, 3, 1], 2).is_err());
    }

    #[test]
    fn acceptance_layouts_classify() {
        for (m, e) in [(2, 2), (3, 2), (4, 2), (2, 3), (2, 4)] {
            let cfg = case_b_layout(0, m, e, USpec::Regular).unwrap();
            assert_eq!(validate_config(&cfg).unwrap(), CaseTag::B, "m={m} e={e}");
        }
        // L = T: the rotation of singletons is a regular element of W = W_L′
        for e in 2..=6 {
            let cfg = case_b_layout(0, 1, e, USpec::Regular).unwrap();
            assert_eq!(validate_config(&cfg).unwrap(), CaseTag::A, "e={e}");
        }
        let cfg = case_b_layout(2, 2, 2, USpec::Regular).unwrap();
        assert_eq!(validate_config(&cfg).unwrap(), CaseTag::B);
        let cfg = case_b_layout(2, 1, 2, USpec::Regular).unwrap();
        assert_eq!(validate_config(&cfg).unwrap(), CaseTag::A);
        let cfg = case_a_layout(
            5,
            2,
            3,
            USpec::Blocks(vec![p(&[1]), p(&[1]), p(&[1]), p(&[1, 1])]),
        )
        .unwrap();
        assert_eq!(validate_config(&cfg).unwrap(), CaseTag::A);
        assert_eq!(cfg.merged_jordan_type().unwrap(), Partition::column(5));
    }
}
