//! Seeded instance generators.
//!
//! Trial `t` of a campaign with seed `s` draws from ChaCha8 seeded with `s`
//! on stream `t`, so each trial is reproducible on its own and independent of
//! evaluation order.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::colorful::ConicInstance;
use crate::error::{Error, Limits, Result};
use crate::om::{positive_circuits, topes, Chirotope, RationalMatrix, Sign, SignVector};

/// Matrix entries are drawn uniformly from `[−ENTRY_BOUND, ENTRY_BOUND]`.
pub const ENTRY_BOUND: i64 = 10;
/// Draws before a generator gives up.
pub const MAX_ATTEMPTS: usize = 10_000;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn random_matrix<R: Rng>(rng: &mut R, r: usize, n: usize) -> RationalMatrix {
    let rows: Vec<Vec<i64>> = (0..r)
        .map(|_| {
            (0..n)
                .map(|_| rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND))
                .collect()
        })
        .collect();
    RationalMatrix::from_rows(&rows).expect("rectangular rows")
}

fn exhausted(what: &str) -> Error {
    Error::invalid(format!("no {what} after {MAX_ATTEMPTS} draws"))
}

/// Random `r × n` matrix in general position, with its chirotope.
pub fn random_uniform<R: Rng>(
    rng: &mut R,
    r: usize,
    n: usize,
) -> Result<(RationalMatrix, Chirotope)> {
    if r == 0 || r > n {
        return Err(Error::invalid(format!("rank {r} on {n} elements")));
    }
    for _ in 0..MAX_ATTEMPTS {
        let m = random_matrix(rng, r, n);
        if let Ok(chi) = Chirotope::from_matrix(&m) {
            if chi.is_uniform() {
                return Ok((m, chi));
            }
        }
    }
    Err(exhausted("uniform matrix"))
}

/// Random uniform instance of the conic search: `r` positive circuits
/// (repetition allowed) through a random element `e`.
pub fn random_conic_instance<R: Rng>(
    rng: &mut R,
    r: usize,
    n: usize,
) -> Result<(RationalMatrix, ConicInstance)> {
    for _ in 0..MAX_ATTEMPTS {
        let (m, chi) = random_uniform(rng, r, n)?;
        let e = rng.gen_range(0..n);
        let through: Vec<SignVector> = positive_circuits(&chi)
            .into_iter()
            .filter(|c| c.get(e) == Sign::Plus)
            .collect();
        if through.is_empty() {
            continue;
        }
        let circuits = (0..r)
            .map(|_| *through.choose(rng).expect("non-empty"))
            .collect();
        return Ok((m, ConicInstance::new(chi, e, circuits)?));
    }
    Err(exhausted("positive circuit"))
}

/// Random uniform instance of the convex search: `r + 1` positive circuits
/// drawn with repetition.
pub fn random_convex_instance<R: Rng>(
    rng: &mut R,
    r: usize,
    n: usize,
) -> Result<(RationalMatrix, Chirotope, Vec<SignVector>)> {
    for _ in 0..MAX_ATTEMPTS {
        let (m, chi) = random_uniform(rng, r, n)?;
        let pool = positive_circuits(&chi);
        if pool.is_empty() {
            continue;
        }
        let circuits = (0..=r)
            .map(|_| *pool.choose(rng).expect("non-empty"))
            .collect();
        return Ok((m, chi, circuits));
    }
    Err(exhausted("positive circuit"))
}

/// `k` topes drawn with repetition.
pub fn random_topes<R: Rng>(
    rng: &mut R,
    chi: &Chirotope,
    k: usize,
    limits: &Limits,
) -> Result<Vec<SignVector>> {
    let all = topes(chi, limits)?;
    if all.is_empty() {
        return Err(Error::invalid("no topes"));
    }
    Ok((0..k)
        .map(|_| *all.choose(rng).expect("non-empty"))
        .collect())
}

/// `k` topes drawn with repetition among those carrying the sign of a random
/// tope at a random element; returns the element too.
pub fn random_agreeing_topes<R: Rng>(
    rng: &mut R,
    chi: &Chirotope,
    k: usize,
    limits: &Limits,
) -> Result<(usize, Vec<SignVector>)> {
    let all = topes(chi, limits)?;
    let anchor = *all.choose(rng).ok_or_else(|| Error::invalid("no topes"))?;
    let j = rng.gen_range(0..chi.n());
    let pool: Vec<SignVector> = all
        .into_iter()
        .filter(|t| t.get(j) == anchor.get(j))
        .collect();
    Ok((
        j,
        (0..k)
            .map(|_| *pool.choose(rng).expect("anchor is in the pool"))
            .collect(),
    ))
}
