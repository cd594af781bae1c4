use std::collections::BTreeMap;

use rayon::prelude::*;
use springer_core::rootsys::RootSystem;
use springer_core::symfun::{green_at_root, springer_graded_char, Partition};
use springer_core::verify::{
    check_cor35, check_induction_e1, check_lemma15, check_prop332_case_a, check_prop33_dims,
    check_prop37, check_remark38, check_theorem17, describe_config, ReportBuilder,
    VerificationReport,
};
use springer_core::weyl::{
    eigenspace, is_regular, phi_multiplicity, regular_config, regular_element, validate_config,
    ClassLabel, InductionConfig, InductionContext,
};
use springer_core::{Error, Result};

use crate::args::{CheckName, RunArgs};
use crate::output::{
    EvalRow, EvalTable, GreenRow, GreenTable, Output, RegularReport, ValidateReport,
};

pub fn green(args: &RunArgs) -> Result<Output> {
    let mu = args.mu()?;
    let gc = springer_graded_char(&mu)?;
    let rows = gc
        .values()
        .iter()
        .map(|(rho, p)| GreenRow {
            class: rho.to_string(),
            coefficients: p.clone().into(),
        })
        .collect();
    let mut config = BTreeMap::new();
    config.insert("n".into(), mu.size().to_string());
    config.insert("mu".into(), mu.to_string());
    Ok(Output::Green(GreenTable {
        command: "green".into(),
        config,
        rows,
    }))
}

/// The Levi configuration attached to `eval`: the one described by
/// `--pi-L`, or else `u` regular in the blocks given by the parts of `μ`
/// when that validates.
fn eval_config(
    args: &RunArgs,
    mu: &Partition,
    e: usize,
) -> Result<Option<(InductionConfig, &'static str)>> {
    if args.pi_l.is_some() {
        let cfg = args.type_a_config(e)?;
        if !cfg.u_is_regular() {
            return Err(Error::InvalidConfig(
                "coset counts need u regular in L".into(),
            ));
        }
        validate_config(&cfg)?;
        return Ok(Some((cfg, "given")));
    }
    Ok(regular_config(mu, e)
        .ok()
        .filter(|c| validate_config(c).is_ok())
        .map(|c| (c, "derived")))
}

pub fn eval(args: &RunArgs, bound: u128) -> Result<Output> {
    let e = args.e()?;
    let mu = match (&args.mu, &args.pi_l) {
        (None, Some(_)) => args.type_a_config(e)?.merged_jordan_type()?,
        _ => args.mu()?,
    };
    let exponents: Vec<i64> = match args.j {
        Some(j) => vec![j],
        None => (0..e as i64).collect(),
    };
    let levi = eval_config(args, &mu, e)?;
    let mut b = ReportBuilder::new("eval")
        .config("n", mu.size())
        .config("mu", &mu)
        .config("e", e);
    let ctx = match &levi {
        Some((cfg, how)) => {
            for (k, v) in describe_config(cfg)? {
                b.set(&k, v);
            }
            b.set("levi", how);
            Some(InductionContext::new(cfg, bound)?)
        }
        None => {
            b.set("levi", "none");
            None
        }
    };
    let gc = springer_graded_char(&mu)?;
    let mut rows = Vec::new();
    for rho in gc.values().keys() {
        let values: Vec<_> = exponents
            .iter()
            .map(|&j| green_at_root(&mu, rho, e, j))
            .collect::<Result<_>>()?;
        let counts = ctx.as_ref().map(|ctx| {
            let info = ctx
                .group()
                .class(&ClassLabel::Cycle(rho.clone()))
                .expect("every cycle type is a class");
            exponents
                .iter()
                .map(|&j| ctx.coset_count(&info.representative, j))
                .collect::<Vec<_>>()
        });
        if let Some(counts) = &counts {
            for ((&j, v), c) in exponents.iter().zip(&values).zip(counts) {
                if v.to_rational().as_ref() != Some(c) {
                    b.mismatch(rho, j, v, c);
                }
            }
        }
        rows.push(EvalRow {
            class: rho.to_string(),
            values: values.iter().map(ToString::to_string).collect(),
            counts: counts.map(|c| c.iter().map(ToString::to_string).collect()),
        });
    }
    let r = b.finish();
    Ok(Output::Eval(EvalTable {
        command: "eval".into(),
        config: r.config,
        exponents,
        rows,
        status: r.status,
        counterexamples: r.counterexamples,
    }))
}

fn run_check(check: CheckName, args: &RunArgs, bound: u128) -> Result<VerificationReport> {
    let mut report = match check {
        CheckName::Theorem17 => check_theorem17(&args.type_a_config(args.e()?)?, bound),
        CheckName::Prop33 => check_prop33_dims(&args.type_a_config(args.e()?)?, bound),
        CheckName::Prop37 => check_prop37(&args.type_a_config(args.e()?)?, bound),
        CheckName::Cor35 => check_cor35(&args.type_a_config(args.e()?)?, bound),
        CheckName::Prop332 => check_prop332_case_a(&args.type_a_config(args.e()?)?, bound),
        CheckName::Induction => {
            let sizes = args.block_sizes()?;
            let nus = if args.nu.is_empty() {
                sizes.iter().map(|&s| Partition::row(s)).collect()
            } else {
                args.nu.clone()
            };
            check_induction_e1(&sizes, &nus, bound)
        }
        CheckName::Remark38 => {
            let m = args
                .m
                .ok_or_else(|| Error::InvalidConfig("missing --m".into()))?;
            check_remark38(m, args.e()?, bound)
        }
        CheckName::Lemma15 => {
            let only = match args.family {
                Some(f) => Some((f, args.rank()?)),
                None => None,
            };
            check_lemma15(only, bound)
        }
    }?;
    report.config.insert("bound".into(), bound.to_string());
    Ok(report)
}

/// Checks run in parallel; reports come back in the order requested.
pub fn verify(checks: &[CheckName], args: &RunArgs, bound: u128) -> Result<Output> {
    let reports = checks
        .par_iter()
        .map(|&c| run_check(c, args, bound))
        .collect::<Result<Vec<_>>>()?;
    Ok(Output::Reports(reports))
}

pub fn regular(args: &RunArgs) -> Result<Output> {
    let family = args.family();
    let rank = args.rank()?;
    let e = args.e()?;
    let variant = args
        .variant
        .ok_or_else(|| Error::Inadmissible("missing --variant".into()))?;
    let a = regular_element(family, rank, e, variant)?;
    let rs = RootSystem::new(family, rank)?;
    let mut config = BTreeMap::new();
    config.insert("root_system".into(), rs.name());
    config.insert("e".into(), e.to_string());
    config.insert("variant".into(), variant.to_string());
    Ok(Output::Regular(RegularReport {
        command: "regular".into(),
        config,
        element: a.to_string(),
        order: a.order(),
        regular: is_regular(&a, e, &rs),
        a_e: phi_multiplicity(&a, e),
        eigenspace_dim: eigenspace(&a, e, 1).len(),
    }))
}

pub fn config_validate(args: &RunArgs, bound: u128) -> Result<Output> {
    let cfg = args.any_config(bound)?;
    let mut config = describe_config(&cfg)?;
    let case = config.remove("case").unwrap_or_default();
    Ok(Output::Validate(ValidateReport {
        command: "config-validate".into(),
        config,
        case,
    }))
}
