//! Unranking and uniform random generation.
//!
//! [`unrank`] returns the element at a given rank of the enumeration order
//! of [`crate::generate`] by descending through the counting buckets: at
//! each node the rank is reduced by the sizes of the buckets it skips,
//! then split between the sub-terms of the chosen one. Only counts are
//! needed, never the enumeration itself.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::characteristic::Characteristic;
use crate::count::{bindings, count_kind, count_sort, no_binding, Sort};
use crate::error::{Error, Result};
use crate::term::{Cheese, Family, Kind, SizeModel, Term};

/// The cheese of rank `rank` among those of `kind` with size `n` and
/// characteristic `m`.
pub fn unrank(kind: Kind, n: usize, m: &Characteristic, rank: &BigUint) -> Result<Cheese> {
    let count = count_kind(kind, n, m);
    if *rank >= count {
        return Err(Error::RankOutOfRange {
            rank: rank.clone(),
            count,
        });
    }
    Ok(descend(
        kind.class.into(),
        kind.family,
        kind.model,
        n,
        m,
        rank.clone(),
    ))
}

/// The closed term of rank `rank` of `kind` and size `n`.
pub fn unrank_closed(kind: Kind, n: usize, rank: &BigUint) -> Result<Term> {
    unrank(kind, n, &Characteristic::empty(), rank)
        .map(|c| c.to_term().expect("closed cheese has no holes"))
}

// Caller guarantees rank < count(sort, n, m).
fn descend(
    sort: Sort,
    family: Family,
    model: SizeModel,
    n: usize,
    m: &Characteristic,
    mut rank: BigUint,
) -> Cheese {
    if n == 0 {
        debug_assert!(rank.is_zero() && m.as_slice() == [1]);
        return Cheese::Hole(0);
    }
    let (left, right) = match sort {
        Sort::All => (Sort::All, Sort::All),
        Sort::Neutral => (Sort::Neutral, Sort::Normal),
        Sort::Normal => {
            let neutral = count_sort(Sort::Neutral, family, model, n, m);
            if rank < neutral {
                return descend(Sort::Neutral, family, model, n, m, rank);
            }
            rank -= neutral;
            return abstraction(Sort::Normal, family, model, n, m, rank);
        }
    };
    for ((q, r), (k, rest)) in m.all_combinations(n - 1) {
        let a = count_sort(left, family, model, k, &q);
        if a.is_zero() {
            continue;
        }
        let b = count_sort(right, family, model, rest, &r);
        let block = &a * &b;
        if rank < block {
            let (i, j) = rank.div_rem(&b);
            let fun = descend(left, family, model, k, &q, i);
            let arg = descend(right, family, model, rest, &r, j);
            return fun.apply(arg);
        }
        rank -= block;
    }
    debug_assert!(sort == Sort::All, "neutral cheeses are applications");
    abstraction(sort, family, model, n, m, rank)
}

fn abstraction(
    sort: Sort,
    family: Family,
    model: SizeModel,
    n: usize,
    m: &Characteristic,
    mut rank: BigUint,
) -> Cheese {
    for b in bindings(model, n, m) {
        let inner = count_sort(sort, family, model, b.inner_size, &b.inner);
        let block = &inner * b.choices;
        if rank < block {
            let (i, occurrence) = rank.div_rem(&BigUint::from(b.choices));
            let body = descend(sort, family, model, b.inner_size, &b.inner, i);
            let occurrence = usize::try_from(&occurrence).expect("below the number of choices");
            return body
                .abstract_with_binding(b.level, occurrence)
                .expect("body has a hole at this level per its characteristic");
        }
        rank -= block;
    }
    let (size, body) = no_binding(n, m)
        .filter(|_| family == Family::Affine)
        .expect("rank below the total count");
    descend(sort, family, model, size, &body, rank).abstract_no_binding()
}

/// Everything that determines a stream of samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    pub seed: u64,
    pub kind: Kind,
    pub n: usize,
}

/// A sampling session: draws closed terms of one kind and size uniformly,
/// independently of each other.
pub struct Sampler {
    config: SamplerConfig,
    total: BigUint,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(config: SamplerConfig) -> Result<Self> {
        let total = count_kind(config.kind, config.n, &Characteristic::empty());
        if total.is_zero() {
            return Err(Error::EmptyDomain {
                kind: config.kind,
                n: config.n,
            });
        }
        Ok(Sampler {
            config,
            total,
            rng: ChaCha8Rng::seed_from_u64(config.seed),
        })
    }

    /// Number of terms being sampled from.
    pub fn total(&self) -> &BigUint {
        &self.total
    }

    /// A uniform rank in `[0, total)`.
    pub fn draw_rank(&mut self) -> BigUint {
        uniform_below(&mut self.rng, &self.total)
    }

    pub fn draw(&mut self) -> Term {
        let rank = self.draw_rank();
        unrank_closed(self.config.kind, self.config.n, &rank).expect("rank drawn below the count")
    }
}

impl Iterator for Sampler {
    type Item = Term;

    fn next(&mut self) -> Option<Term> {
        Some(self.draw())
    }
}

/// `k` closed terms drawn independently and uniformly.
pub fn sample(config: SamplerConfig, k: usize) -> Result<Vec<Term>> {
    if k == 0 {
        return Ok(Vec::new());
    }
    Ok(Sampler::new(config)?.take(k).collect())
}

/// Rejection sampling on the bit width of `bound - 1`.
fn uniform_below(rng: &mut impl RngCore, bound: &BigUint) -> BigUint {
    debug_assert!(!bound.is_zero());
    let bits = (bound - 1u8).bits();
    if bits == 0 {
        return BigUint::zero();
    }
    let len = bits.div_ceil(8) as usize;
    let spare = len as u64 * 8 - bits;
    let mut bytes = vec![0u8; len];
    loop {
        rng.fill_bytes(&mut bytes);
        bytes[len - 1] &= 0xff >> spare;
        let candidate = BigUint::from_bytes_le(&bytes);
        if candidate < *bound {
            return candidate;
        }
    }
}
