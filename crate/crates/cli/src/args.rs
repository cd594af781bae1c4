use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use springer_core::rootsys::{Family, LeviConfig, RootSystem};
use springer_core::symfun::Partition;
use springer_core::weyl::{
    block_config, default_bound, is_l_regular, is_regular_in_lprime, type_a_blocks, type_a_config,
    InductionConfig, SubgroupTable, USpec, Variant, WeylElt,
};
use springer_core::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "springer",
    version,
    about = "Springer characters, Green polynomials and their values at roots of unity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for verification sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Maximal group order to enumerate; overrides SPRINGER_BOUND.
    #[arg(long, global = true)]
    pub bound: Option<u128>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Green polynomial table Q_{w,C}(q) for u of Jordan type mu.
    Green(RunArgs),
    /// Green polynomials at powers of a primitive e-th root of unity.
    Eval(RunArgs),
    /// Run one or more verification checks.
    Verify {
        #[arg(long, value_enum, required = true)]
        check: Vec<CheckName>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Catalog regular element of a Weyl group.
    Regular(RunArgs),
    /// Classify an induction configuration as case (a) or (b).
    ConfigValidate(RunArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    Theorem17,
    Prop33,
    Prop37,
    Cor35,
    Prop332,
    Induction,
    Remark38,
    Lemma15,
}

#[derive(Args, Debug, Clone, Default)]
pub struct RunArgs {
    /// Root system family (A to G).
    #[arg(long, value_parser = parse_family)]
    pub family: Option<Family>,

    #[arg(long)]
    pub rank: Option<usize>,

    /// Degree of GL_n.
    #[arg(long)]
    pub n: Option<usize>,

    /// Jordan type of u, e.g. 2,2.
    #[arg(long, value_parser = parse_partition)]
    pub mu: Option<Partition>,

    /// Jordan type in one Levi block; repeat once per block.
    #[arg(long, value_parser = parse_partition)]
    pub nu: Vec<Partition>,

    /// Simple roots of the Levi subsystem, 1-based, e.g. 1,3.
    #[arg(long = "pi-L", value_delimiter = ',')]
    pub pi_l: Option<Vec<usize>>,

    #[arg(long)]
    pub e: Option<usize>,

    #[arg(long, value_parser = parse_variant)]
    pub variant: Option<Variant>,

    /// Single root-of-unity exponent instead of all of 0..e-1.
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<i64>,

    /// Block size for remark38.
    #[arg(long)]
    pub m: Option<usize>,
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_variant(s: &str) -> std::result::Result<Variant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn front_orbits(sizes: &[usize], e: usize) -> Vec<Vec<usize>> {
    let mut by_size: Vec<(usize, Vec<usize>)> = Vec::new();
    for (b, &s) in sizes.iter().enumerate() {
        match by_size.iter_mut().find(|(k, _)| *k == s) {
            Some((_, v)) => v.push(b),
            None => by_size.push((s, vec![b])),
        }
    }
    by_size
        .iter()
        .flat_map(|(_, bs)| bs.chunks_exact(e.max(1)).map(<[usize]>::to_vec))
        .collect()
}

fn missing(flag: &str) -> Error {
    Error::InvalidConfig(format!("missing --{flag}"))
}

pub fn bound(cli: &Cli) -> u128 {
    cli.bound.unwrap_or_else(default_bound)
}

impl RunArgs {
    pub fn family(&self) -> Family {
        self.family.unwrap_or(Family::A)
    }

    pub fn e(&self) -> Result<usize> {
        match self.e {
            Some(0) => Err(Error::InvalidConfig("e must be positive".into())),
            Some(e) => Ok(e),
            None => Err(missing("e")),
        }
    }

    pub fn mu(&self) -> Result<Partition> {
        let mu = self.mu.clone().ok_or_else(|| missing("mu"))?;
        if let Some(n) = self.n {
            if n != mu.size() {
                return Err(Error::InvalidConfig(format!(
                    "{mu} is not a partition of n = {n}"
                )));
            }
        }
        Ok(mu)
    }

    pub fn rank(&self) -> Result<usize> {
        match (self.rank, self.n) {
            (Some(r), _) => Ok(r),
            (None, Some(n)) if self.family() == Family::A => Ok(n.saturating_sub(1)),
            _ => Err(missing("rank")),
        }
    }

    fn pi_l0(&self) -> Result<Option<Vec<usize>>> {
        let Some(pi) = &self.pi_l else {
            return Ok(None);
        };
        pi.iter()
            .map(|&i| match i {
                0 => Err(Error::InvalidConfig("--pi-L indices are 1-based".into())),
                _ => Ok(i - 1),
            })
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }

    /// Letter block sizes of a type `A` Levi: from `--pi-L` if given, else
    /// the parts of `--mu`.
    pub fn block_sizes(&self) -> Result<Vec<usize>> {
        if let Some(pi) = self.pi_l0()? {
            let n = match (self.n, self.rank, &self.mu) {
                (Some(n), _, _) => n,
                (None, Some(r), _) => r + 1,
                (None, None, Some(mu)) => mu.size(),
                _ => return Err(missing("n")),
            };
            if let Some(&bad) = pi.iter().find(|&&i| i + 1 >= n) {
                return Err(Error::InvalidConfig(format!(
                    "simple root {} does not exist in A{}",
                    bad + 1,
                    n - 1
                )));
            }
            return Ok(type_a_blocks(n, &pi).iter().map(|b| b.len()).collect());
        }
        Ok(self.mu()?.parts().to_vec())
    }

    fn u_spec(&self) -> USpec {
        if self.nu.is_empty() {
            USpec::Regular
        } else {
            USpec::Blocks(self.nu.clone())
        }
    }

    /// Induction configuration for a type `A` Levi, with `a` rotating equal
    /// blocks in runs of `e`. When the blocks do not fit one fixed block plus
    /// full orbits, runs are taken from the front and the rest stay fixed.
    pub fn type_a_config(&self, e: usize) -> Result<InductionConfig> {
        if self.family() != Family::A {
            return Err(Error::Unsupported(format!(
                "this command needs type A, got {}",
                self.family()
            )));
        }
        let sizes = self.block_sizes()?;
        let cfg = match block_config(&sizes, e, self.u_spec()) {
            Ok(cfg) => cfg,
            Err(_) => type_a_config(&sizes, &front_orbits(&sizes, e), e, self.u_spec())?,
        };
        let merged = cfg.merged_jordan_type()?;
        if let (Some(mu), Some(_)) = (&self.mu, &self.pi_l) {
            if *mu != merged {
                return Err(Error::InvalidConfig(format!(
                    "--mu {mu} differs from the Jordan type {merged} of the blocks"
                )));
            }
        }
        Ok(cfg)
    }

    /// Any configuration: type `A` as in `type_a_config`, otherwise `Π_L`
    /// from `--pi-L` with `a` the first element of `W_{L′}` of order `e`
    /// that is regular there, preferring an `L`-regular one.
    pub fn any_config(&self, bound: u128) -> Result<InductionConfig> {
        let e = self.e()?;
        if self.family() == Family::A {
            return self.type_a_config(e);
        }
        let rs = Arc::new(RootSystem::new(self.family(), self.rank()?)?);
        let pi = self.pi_l0()?.ok_or_else(|| missing("pi-L"))?;
        let levi = LeviConfig::new(rs.clone(), &pi)?;
        let gens: Vec<WeylElt> = levi
            .pi_prime()
            .iter()
            .map(|&i| WeylElt::simple_reflection(&rs, i))
            .collect();
        let lprime = SubgroupTable::generate(WeylElt::identity_for(&rs), &gens, bound)?;
        let candidates: Vec<&WeylElt> = lprime
            .elements()
            .iter()
            .filter(|a| a.order() == e && is_regular_in_lprime(a, e, &levi))
            .collect();
        let a = candidates
            .iter()
            .find(|a| is_l_regular(a, e, &levi))
            .or(candidates.first())
            .ok_or_else(|| {
                Error::InvalidConfig(format!(
                    "W_L' of type {} has no regular element of order {e}",
                    levi.lprime_type()
                ))
            })?;
        Ok(InductionConfig::new(levi, e, (*a).clone(), self.u_spec()))
    }
}
