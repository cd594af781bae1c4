use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use super::extension::{tensor_cyclic_extension, ExtendedGradedCharacter};
use super::gamma::GammaTable;
use super::report::{ReportBuilder, VerificationReport};
use crate::error::{Error, Result};
use crate::poly::{eval_at_root, Cyclotomic};
use crate::rootsys::{Family, LeviConfig, RootSystem};
use crate::symfun::{
    green_at_root, remark38_closed_form, springer_graded_char, GradedCharacter, Partition, Reading,
};
use crate::weyl::{
    case_b_layout, induced_character, is_l_regular, is_regular_in_lprime, lies_in_lprime,
    regular_element, type_a_config, validate_config, CaseTag, ClassInfo, InductionConfig,
    InductionContext, Perm, SignedPerm, SubgroupTable, USpec, Variant, WeylElt,
};

/// `j` with `1 ≤ j ≤ e` and `gcd(j, e) = 1` (just `1` when `e = 1`).
pub fn primitive_exponents(e: usize) -> Vec<i64> {
    if e <= 1 {
        return vec![1];
    }
    (1..e)
        .filter(|j| j.gcd(&e) == 1)
        .map(|j| j as i64)
        .collect()
}

struct Prepared {
    tag: Option<CaseTag>,
    ctx: InductionContext,
    mu: Partition,
    springer: Arc<GradedCharacter>,
}

fn prepare(cfg: &InductionConfig, bound: u128) -> Result<Prepared> {
    prepare_with(cfg, bound, true)
}

fn prepare_with(cfg: &InductionConfig, bound: u128, validate: bool) -> Result<Prepared> {
    if !cfg.is_type_a() {
        return Err(Error::Unsupported(format!(
            "this check needs type A, got {}",
            cfg.root_system().name()
        )));
    }
    let tag = if validate {
        Some(validate_config(cfg)?)
    } else {
        None
    };
    let ctx = InductionContext::new(cfg, bound)?;
    let mu = cfg.merged_jordan_type()?;
    let springer = springer_graded_char(&mu)?;
    Ok(Prepared {
        tag,
        ctx,
        mu,
        springer,
    })
}

fn echo(b: ReportBuilder, cfg: &InductionConfig, p: &Prepared) -> Result<ReportBuilder> {
    let sizes: Vec<String> = cfg.blocks()?.iter().map(|r| r.len().to_string()).collect();
    let types: Vec<String> = cfg.block_types()?.iter().map(ToString::to_string).collect();
    Ok(b.config("n", cfg.root_system().dim())
        .config("blocks", sizes.join(","))
        .config("nu", types.join(";"))
        .config("e", cfg.e())
        .config("a", cfg.a())
        .config("case", p.tag.map_or("-".to_string(), |t| t.to_string()))
        .config("mu", &p.mu))
}

fn require_regular(cfg: &InductionConfig, check: &str) -> Result<()> {
    if cfg.u_is_regular() {
        Ok(())
    } else {
        Err(Error::InvalidConfig(format!(
            "{check} needs u regular in L"
        )))
    }
}

/// Evaluates `f` on every class in parallel, keeping class order.
fn per_class<T: Send>(classes: &[ClassInfo], f: impl Fn(&ClassInfo) -> T + Sync + Send) -> Vec<T> {
    classes.par_iter().map(f).collect()
}

type Mismatch = (String, i64, String, String);

fn record(b: &mut ReportBuilder, rows: Vec<Vec<Mismatch>>) {
    for (class, index, lhs, rhs) in rows.into_iter().flatten() {
        b.mismatch(class, index, lhs, rhs);
    }
}

/// `Γ-Ind_{W_L}^W H*(𝔅_u^L)^{(ζ)} ≃ H*(𝔅_u)^{(ζ)}`: traces of `(a^i, w)` on
/// both sides for all classes, all `i` and every primitive `ζ`.
pub fn check_theorem17(cfg: &InductionConfig, bound: u128) -> Result<VerificationReport> {
    let p = prepare(cfg, bound)?;
    let mut b = echo(ReportBuilder::new("theorem17"), cfg, &p)?;
    let ext = tensor_cyclic_extension(cfg, &p.ctx)?;
    let table = GammaTable::new(&p.ctx, &ext)?;
    let e = cfg.e();
    let prims = primitive_exponents(e);
    let rows = per_class(p.ctx.group().classes(), |c| {
        let rho = c.label.cycle_type().expect("type A");
        let q = p.springer.value(rho);
        let mut out = Vec::new();
        for i in 0..e as i64 {
            for &jr in &prims {
                let lhs = table.trace(&c.label, i, jr);
                let rhs = eval_at_root(q, e, i * jr);
                if lhs != rhs {
                    out.push((
                        format!("{} (zeta^{jr})", c.label),
                        i,
                        lhs.to_string(),
                        rhs.to_string(),
                    ));
                }
            }
        }
        out
    });
    record(&mut b, rows);
    b.set("primitive_exponents", format!("{prims:?}"));
    Ok(b.finish())
}

/// `dim V_{e,k}` (degrees `≡ k mod e`) is the same for every `k` and equals
/// `[W : W̃_L] · dim H*(𝔅_u^L)`.
pub fn check_prop33_dims(cfg: &InductionConfig, bound: u128) -> Result<VerificationReport> {
    let p = prepare(cfg, bound)?;
    let mut b = echo(ReportBuilder::new("prop33"), cfg, &p)?;
    let e = cfg.e();
    let poincare = p.springer.poincare();
    let mut dim_l = BigInt::from(1);
    for nu in cfg.block_types()? {
        dim_l *= springer_graded_char(&nu)?.dim();
    }
    let index = p.ctx.group().order() / p.ctx.wtilde().len() as u128;
    let expected = BigInt::from(index) * &dim_l;
    let dims: Vec<BigInt> = (0..e).map(|k| poincare.residue_class_sum(e, k)).collect();
    for (k, d) in dims.iter().enumerate() {
        b.compare("dim V_{e,k}", k as i64, d, &expected);
    }
    let shown: Vec<String> = dims.iter().map(ToString::to_string).collect();
    b.set("dims", shown.join(","));
    b.set("expected", &expected);
    Ok(b.finish())
}

/// `Q_{w}(ζ^j) = |W_L|⁻¹ #{x ∈ W : x⁻¹wx ∈ a^jW_L}` for all classes and `j`,
/// and the same value at every other primitive root.
pub fn check_prop37(cfg: &InductionConfig, bound: u128) -> Result<VerificationReport> {
    require_regular(cfg, "prop37")?;
    let p = prepare(cfg, bound)?;
    let mut b = echo(ReportBuilder::new("prop37"), cfg, &p)?;
    let e = cfg.e();
    let prims = primitive_exponents(e);
    let rows = per_class(p.ctx.group().classes(), |c| {
        let rho = c.label.cycle_type().expect("type A");
        let mut out = Vec::new();
        for j in 0..e as i64 {
            let count = p.ctx.coset_count(&c.representative, j);
            let rhs = Cyclotomic::from_rational(e, count);
            for &r in &prims {
                let lhs = green_at_root(&p.mu, rho, e, j * r).expect("partition sizes agree");
                if lhs != rhs {
                    let class = if r == 1 {
                        c.label.to_string()
                    } else {
                        format!("{} (zeta^{r})", c.label)
                    };
                    out.push((class, j, lhs.to_string(), rhs.to_string()));
                }
            }
        }
        out
    });
    record(&mut b, rows);
    Ok(b.finish())
}

/// `Σ_{n ≡ k} [q^n] Q_w(q)` against `Ind_{W̃_L}^W ψ̃^{(-k)}` for each `k`.
pub fn check_cor35(cfg: &InductionConfig, bound: u128) -> Result<VerificationReport> {
    require_regular(cfg, "cor35")?;
    let p = prepare(cfg, bound)?;
    let mut b = echo(ReportBuilder::new("cor35"), cfg, &p)?;
    let e = cfg.e();
    let g = p.ctx.group();
    for k in 0..e {
        let ind = induced_character(g, p.ctx.wtilde(), &p.ctx.psi_tilde(k as i64), e);
        for c in g.classes() {
            let rho = c.label.cycle_type().expect("type A");
            let lhs = Cyclotomic::from_integer(e, p.springer.value(rho).residue_class_sum(e, k));
            b.compare(&c.label, k as i64, &lhs, ind.value(&c.label));
        }
    }
    Ok(b.finish())
}

/// Case (a): `⊕_{n≡k} H^{2n}(𝔅_u)` against the character induced from
/// `Γ × W_L` of `Σ_j ψ^{(-k+j)} ⊗ H^{2j}(𝔅_u^L)`.
pub fn check_prop332_case_a(cfg: &InductionConfig, bound: u128) -> Result<VerificationReport> {
    let p = prepare(cfg, bound)?;
    let rs = cfg.root_system();
    let a = cfg.a();
    for &i in cfg.levi().pi_l() {
        let s = WeylElt::simple_reflection(rs, i);
        if a.compose(&s) != s.compose(a) {
            return Err(Error::InvalidConfig(format!(
                "a = {a} does not centralize W_L"
            )));
        }
    }
    let mut b = echo(ReportBuilder::new("prop332"), cfg, &p)?;
    let e = cfg.e();
    let g = p.ctx.group();
    let blocks = cfg.blocks()?;
    let types = cfg.block_types()?;
    // graded character of W_L, read off on a^{-i} z for z ∈ a^i W_L
    let a_inv = a.inverse();
    let levi_traces: Vec<(usize, _)> = p
        .ctx
        .wtilde()
        .elements()
        .iter()
        .enumerate()
        .map(|(k, z)| {
            let i = p.ctx.coset_index(k);
            let y = a_inv.pow(i).compose(z);
            let perm = y.as_perm().expect("type A");
            let mut t = crate::poly::IntPolynomial::one();
            for (r, nu) in blocks.iter().zip(&types) {
                let local: Vec<usize> = r.clone().map(|x| perm.apply(x) - r.start).collect();
                let rho = Perm::from_images(&local)
                    .expect("W_L preserves blocks")
                    .cycle_type();
                t = &t
                    * springer_graded_char(nu)
                        .expect("block sizes are small")
                        .value(&rho);
            }
            (i, t)
        })
        .collect();
    for k in 0..e as i64 {
        let chi: Vec<Cyclotomic> = levi_traces
            .iter()
            .map(|(i, t)| {
                let i = *i as i64;
                eval_at_root(t, e, i).mul(&Cyclotomic::root_power(e, -k * i))
            })
            .collect();
        let ind = induced_character(g, p.ctx.wtilde(), &chi, e);
        for c in g.classes() {
            let rho = c.label.cycle_type().expect("type A");
            let lhs =
                Cyclotomic::from_integer(e, p.springer.value(rho).residue_class_sum(e, k as usize));
            b.compare(&c.label, k, &lhs, ind.value(&c.label));
        }
    }
    Ok(b.finish())
}

/// `Σ(-1)^n H^n(𝔅_u) = Ind_{W_L}^W Σ(-1)^n H^n(𝔅_u^L)` at `q = 1`, for a type
/// `A` Levi with the given block sizes and Jordan types.
pub fn check_induction_e1(
    sizes: &[usize],
    nus: &[Partition],
    bound: u128,
) -> Result<VerificationReport> {
    let cfg = type_a_config(sizes, &[], 1, USpec::Blocks(nus.to_vec()))?;
    // any Levi works here: no cyclic element is involved
    let p = prepare_with(&cfg, bound, false)?;
    let mut b = echo(ReportBuilder::new("induction_e1"), &cfg, &p)?;
    let ext: ExtendedGradedCharacter = tensor_cyclic_extension(&cfg, &p.ctx)?;
    let chi: Vec<Cyclotomic> = p
        .ctx
        .wl()
        .elements()
        .iter()
        .map(|y| Ok(Cyclotomic::from_integer(1, ext.trace(y)?.eval_one())))
        .collect::<Result<_>>()?;
    let g = p.ctx.group();
    let ind = induced_character(g, p.ctx.wl(), &chi, 1);
    for c in g.classes() {
        let rho = c.label.cycle_type().expect("type A");
        let lhs = Cyclotomic::from_integer(1, p.springer.value(rho).eval_one());
        b.compare(&c.label, 0, &lhs, ind.value(&c.label));
    }
    Ok(b.finish())
}

/// Both readings of the closed formula for `μ = (m^e)` at a primitive root
/// against the coset counts; the amended reading decides the status.
pub fn check_remark38(m: usize, e: usize, bound: u128) -> Result<VerificationReport> {
    let cfg = case_b_layout(0, m, e, USpec::Regular)?;
    let p = prepare(&cfg, bound)?;
    let mut b = echo(ReportBuilder::new("remark38"), &cfg, &p)?;
    let mut printed_differs = Vec::new();
    for c in p.ctx.group().classes().iter().rev() {
        let rho = c.label.cycle_type().expect("type A");
        let count = p.ctx.coset_count(&c.representative, 1);
        let brute = count.to_integer();
        let amended = remark38_closed_form(m, e, rho, Reading::Amended)?;
        let printed = remark38_closed_form(m, e, rho, Reading::Printed)?;
        b.compare(&c.label, 1, &amended, &brute);
        if printed != brute {
            printed_differs.push(c.label.to_string());
        }
    }
    let amended_ok = b.mismatches() == 0;
    let mut note = String::from(if amended_ok {
        "amended reading matches"
    } else {
        "amended reading differs"
    });
    if printed_differs.is_empty() {
        note += "; printed reading matches";
    } else {
        note += &format!(
            "; printed reading differs on classes [{}]",
            printed_differs.join(", ")
        );
    }
    b.note(note);
    Ok(b.finish())
}

fn nodes_1based(nodes: &[usize]) -> String {
    let v: Vec<String> = nodes.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", v.join(","))
}

/// Embeds a permutation of the first letters into a larger type `A`, `B`/`C`
/// or `D` group.
fn embed(rs: &RootSystem, p: &Perm) -> WeylElt {
    let n = rs.dim();
    let mut img = p.images();
    img.extend(img.len()..n);
    let perm = Perm::from_images(&img).expect("extension of a permutation");
    match rs.family() {
        Family::A => WeylElt::Perm(perm),
        _ => WeylElt::Signed(SignedPerm::new(perm, vec![false; n])),
    }
}

/// Classical part: `W_L` of the same type as `W` on the last simple roots,
/// `W_{L′}` of type `A`, and the type (a) elements of `W_{L′}`.
fn lemma15_classical(b: &mut ReportBuilder, family: Family, rank: usize) -> Result<usize> {
    let rs = Arc::new(RootSystem::new(family, rank)?);
    let min_m = if family == Family::D { 3 } else { 1 };
    let mut tested = 0;
    for m in min_m..rank {
        // W_{L′} permutes the first `letters` coordinates
        let letters = rank - m;
        if letters < 2 {
            continue;
        }
        let pi_l: Vec<usize> = (rank - m..rank).collect();
        let levi = LeviConfig::new(rs.clone(), &pi_l)?;
        for e in 2..=letters {
            if !letters.is_multiple_of(e) {
                continue;
            }
            let inner = regular_element(Family::A, letters - 1, e, Variant::A)?;
            let a = embed(&rs, inner.as_perm().expect("type A catalog"));
            let what = format!(
                "{} Pi_L={} {} a={a}",
                rs.name(),
                nodes_1based(&pi_l),
                levi.l_type()
            );
            if !lies_in_lprime(&a, &levi) || !is_regular_in_lprime(&a, e, &levi) {
                b.mismatch(&what, e as i64, "not regular in W_L'", "regular in W_L'");
                continue;
            }
            tested += 1;
            if !is_l_regular(&a, e, &levi) {
                b.mismatch(&what, e as i64, "not L-regular", "L-regular");
            }
        }
    }
    Ok(tested)
}

fn connected_subsets(rs: &RootSystem) -> Vec<Vec<usize>> {
    let r = rs.rank();
    (1u32..(1 << r) - 1)
        .map(|mask| (0..r).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|s| rs.components(s).len() == 1)
        .collect()
}

fn lprime_group(rs: &Arc<RootSystem>, levi: &LeviConfig, bound: u128) -> Result<SubgroupTable> {
    let gens: Vec<WeylElt> = levi
        .pi_prime()
        .iter()
        .map(|&i| WeylElt::simple_reflection(rs, i))
        .collect();
    SubgroupTable::generate(WeylElt::identity_for(rs), &gens, bound)
}

/// Negative part: no regular element of `W_{L′}` is `L`-regular for any
/// connected `Π_L ≠ ∅` with `Π′ ≠ ∅`.
fn lemma15_none(b: &mut ReportBuilder, family: Family, rank: usize, bound: u128) -> Result<usize> {
    let rs = Arc::new(RootSystem::new(family, rank)?);
    let mut candidates = 0;
    let mut skipped = 0;
    for pi_l in connected_subsets(&rs) {
        let levi = LeviConfig::new(rs.clone(), &pi_l)?;
        if levi.pi_prime().is_empty() {
            continue;
        }
        if family == Family::E && levi.pi_prime().len() > 2 {
            skipped += 1;
            continue;
        }
        for a in lprime_group(&rs, &levi, bound)?.elements() {
            let e = a.order();
            if e < 2 || !is_regular_in_lprime(a, e, &levi) {
                continue;
            }
            candidates += 1;
            if is_l_regular(a, e, &levi) {
                let what = format!("{} Pi_L={} a={a}", rs.name(), nodes_1based(&pi_l));
                b.mismatch(what, e as i64, "L-regular", "no L-regular elements");
            }
        }
    }
    if skipped > 0 {
        b.note(format!(
            "{}: {skipped} Levi subsystems with |Pi'| > 2 not swept",
            rs.name()
        ));
    }
    Ok(candidates)
}

/// Orders of the type (a) regular elements of `W_{L′}`: the common
/// divisors `e ≥ 2` of `j + 1` over components `A_j`, or odd divisors of `n`
/// for a single `D_n`.
fn type_a_orders(rs: &RootSystem, levi: &LeviConfig) -> Vec<usize> {
    let comps = rs.components(levi.pi_prime());
    let types: Vec<String> = comps.iter().map(|c| rs.dynkin_type(c)).collect();
    let rank_of = |t: &str| t[1..].parse::<usize>().expect("Dynkin type like A4");
    if let [t] = types.as_slice() {
        if t.starts_with('D') {
            let n = rank_of(t);
            return (3..=n).filter(|e| e % 2 == 1 && n % e == 0).collect();
        }
    }
    if types.iter().any(|t| !t.starts_with('A')) {
        return Vec::new();
    }
    let sizes: Vec<usize> = types.iter().map(|t| rank_of(t) + 1).collect();
    (2..=sizes.iter().copied().max().unwrap_or(0))
        .filter(|e| sizes.iter().all(|s| s % e == 0))
        .collect()
}

/// Exceptional part: `Π_L = {α_k, …, α_last}`, `k ≥ 3`, in `E_6` and `E_7`.
fn lemma15_exceptional(b: &mut ReportBuilder, rank: usize, bound: u128) -> Result<usize> {
    let rs = Arc::new(RootSystem::new(Family::E, rank)?);
    let mut tested = 0;
    for k in 3..=rank {
        let pi_l: Vec<usize> = (k - 1..rank).collect();
        let levi = LeviConfig::new(rs.clone(), &pi_l)?;
        let lp = levi.lprime_type();
        let orders = type_a_orders(&rs, &levi);
        let what = |e: usize| format!("{} Pi_L={} W_L'={lp} e={e}", rs.name(), nodes_1based(&pi_l));
        if orders.is_empty() {
            b.note(format!(
                "{} Pi_L={}: W_L' of type {lp} has no type (a) regular element",
                rs.name(),
                nodes_1based(&pi_l)
            ));
            continue;
        }
        let group = lprime_group(&rs, &levi, bound)?;
        for e in orders {
            let found = group
                .elements()
                .iter()
                .find(|a| a.order() == e && is_regular_in_lprime(a, e, &levi));
            match found {
                None => b.mismatch(
                    what(e),
                    e as i64,
                    "no regular element found",
                    "regular element",
                ),
                Some(a) => {
                    tested += 1;
                    if !is_l_regular(a, e, &levi) {
                        b.mismatch(what(e), e as i64, "not L-regular", "L-regular");
                    }
                }
            }
        }
    }
    Ok(tested)
}

/// The classification of `L`-regular elements: part (i) for `A`, `B`, `D`
/// up to rank 7, part (ii) for `G_2`, `F_4` and `E_8`, part (iii) for `E_6`
/// and `E_7`. With `only` set, just that root system is swept.
pub fn check_lemma15(only: Option<(Family, usize)>, bound: u128) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new("lemma15");
    let systems: Vec<(Family, usize)> = match only {
        Some(s) => vec![s],
        None => {
            let mut v = Vec::new();
            v.extend((2..=7).map(|r| (Family::A, r)));
            v.extend((2..=7).map(|r| (Family::B, r)));
            v.extend((4..=7).map(|r| (Family::D, r)));
            v.extend([
                (Family::G, 2),
                (Family::F, 4),
                (Family::E, 8),
                (Family::E, 6),
                (Family::E, 7),
            ]);
            v
        }
    };
    if let Some((f, r)) = only {
        b.set("system", format!("{f}{r}"));
    }
    for (family, rank) in systems {
        let name = format!("{family}{rank}");
        match (family, rank) {
            (Family::A | Family::B | Family::C | Family::D, _) => {
                let family = if family == Family::C {
                    Family::B
                } else {
                    family
                };
                let n = lemma15_classical(&mut b, family, rank)?;
                b.set(&format!("{name} type (a) elements tested"), n);
            }
            (Family::G, _) | (Family::F, _) | (Family::E, 8) => {
                let before = b.mismatches();
                let n = lemma15_none(&mut b, family, rank, bound)?;
                b.set(&format!("{name} regular elements of W_L' tested"), n);
                if b.mismatches() == before {
                    b.note(format!("{name}: no L-regular elements"));
                }
            }
            (Family::E, _) => {
                let n = lemma15_exceptional(&mut b, rank, bound)?;
                b.set(&format!("{name} type (a) elements tested"), n);
            }
        }
    }
    Ok(b.finish())
}

/// All three parts of the classification.
pub fn check_lemma15_catalog(bound: u128) -> Result<VerificationReport> {
    check_lemma15(None, bound)
}

/// Configuration echo for a report about `cfg` without running a check.
pub fn describe_config(cfg: &InductionConfig) -> Result<BTreeMap<String, String>> {
    let tag = validate_config(cfg)?;
    let mut m = BTreeMap::new();
    m.insert("root_system".into(), cfg.root_system().name());
    m.insert("pi_L".into(), nodes_1based(cfg.levi().pi_l()));
    m.insert("pi_prime".into(), nodes_1based(cfg.levi().pi_prime()));
    m.insert("L".into(), cfg.levi().l_type());
    m.insert("L_prime".into(), cfg.levi().lprime_type());
    m.insert("e".into(), cfg.e().to_string());
    m.insert("a".into(), cfg.a().to_string());
    m.insert("case".into(), tag.to_string());
    if cfg.is_type_a() {
        m.insert("mu".into(), cfg.merged_jordan_type()?.to_string());
    }
    Ok(m)
}
