//! Seeded random instances.
//!
//! The generator is ChaCha8 seeded with `seed_from_u64`, and every draw is
//! a `gen_range` over `u32`, so a seed gives the same ideal on every
//! platform.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};

pub type Prng = ChaCha8Rng;

pub fn prng(seed: u64) -> Prng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of a random ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSpec {
    pub nvars: usize,
    pub ngens: usize,
    pub max_degree: u32,
    /// Largest exponent of any variable; ignored for square-free ideals.
    pub max_exponent: u32,
    pub squarefree: bool,
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

impl RandomSpec {
    fn validate(&self) -> Result<()> {
        if self.nvars == 0 || self.ngens == 0 || self.max_degree == 0 || self.max_exponent == 0 {
            return Err(Error::domain("random ideal bounds must be positive"));
        }
        if self.nvars > u32::MAX as usize {
            return Err(Error::domain("too many variables"));
        }
        if self.squarefree {
            let top = (self.max_degree as u64).min(self.nvars as u64);
            let available: u64 = (1..=top).map(|d| binomial(self.nvars as u64, d)).sum();
            if (self.ngens as u64) > available {
                return Err(Error::domain(format!(
                    "only {available} square-free monomials of degree 1..{top} exist in {} variables",
                    self.nvars
                )));
            }
        } else if self.max_exponent as u64 * self.nvars as u64 == 0 {
            return Err(Error::domain("no monomials fit the bounds"));
        }
        Ok(())
    }
}

/// One random monomial of degree `1..=max_degree`.
pub fn random_monomial(rng: &mut Prng, spec: &RandomSpec) -> Monomial {
    let n = spec.nvars as u32;
    let mut exps = vec![0u32; spec.nvars];
    if spec.squarefree {
        let d = rng.gen_range(1..=spec.max_degree.min(n));
        let mut chosen = BTreeSet::new();
        while chosen.len() < d as usize {
            chosen.insert(rng.gen_range(0..n) as usize);
        }
        for v in chosen {
            exps[v] = 1;
        }
    } else {
        let cap = (spec.max_exponent as u64 * spec.nvars as u64).min(spec.max_degree as u64) as u32;
        let d = rng.gen_range(1..=cap);
        let mut placed = 0;
        while placed < d {
            let v = rng.gen_range(0..n) as usize;
            if exps[v] < spec.max_exponent {
                exps[v] += 1;
                placed += 1;
            }
        }
    }
    Monomial::from_exponents(exps)
}

/// `ngens` random monomials, minimalized, in the ring `x1..xn`.
pub fn random_ideal_with(rng: &mut Prng, spec: &RandomSpec) -> Result<MonomialIdeal> {
    spec.validate()?;
    let ring = RingContext::with_vars(spec.nvars)?;
    let gens: Vec<Monomial> = (0..spec.ngens)
        .map(|_| random_monomial(rng, spec))
        .collect();
    MonomialIdeal::new(&ring, gens)
}

/// Reproducible random ideal with exponents bounded by `maxdeg`.
pub fn random_ideal(
    seed: u64,
    nvars: usize,
    ngens: usize,
    maxdeg: u32,
    squarefree: bool,
) -> Result<MonomialIdeal> {
    let spec = RandomSpec {
        nvars,
        ngens,
        max_degree: maxdeg,
        max_exponent: maxdeg,
        squarefree,
    };
    random_ideal_with(&mut prng(seed), &spec)
}
