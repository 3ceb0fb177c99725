//! Sampling approximation for `IS_k` in bipartite graphs.
//!
//! Draws `t = 10 · ⌈2^k / ε²⌉` uniform size-`k` vertex subsets and returns
//! `z = X · C(n, k) / t` where `X` counts the independent ones. Each sample
//! has its own ChaCha8 stream selected by its index, so the outcome depends
//! only on `(seed, index)` and samples can be evaluated in any order.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::math::binomial;
use crate::Count;

/// Identifier of the sample generator, recorded in results.
pub const GENERATOR: &str = "chacha8-stream-per-sample";

/// Default largest accepted sample count.
pub const DEFAULT_SAMPLE_BUDGET: u64 = 1 << 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FptrasResult {
    /// `hits · C(n, k) / samples`, exact.
    pub estimate: BigRational,
    pub samples: u64,
    pub hits: u64,
    pub epsilon: BigRational,
    pub seed: u64,
    pub generator: String,
}

impl FptrasResult {
    pub fn estimate_f64(&self) -> f64 {
        ratio_to_f64(&self.estimate)
    }
}

pub fn ratio_to_f64(r: &BigRational) -> f64 {
    let num = r.numer().to_f64().unwrap_or(f64::NAN);
    let den = r.denom().to_f64().unwrap_or(f64::NAN);
    if num.is_finite() && den.is_finite() {
        return num / den;
    }
    // scale both sides down so they fit
    let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
    let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// `10 · ⌈2^k / ε²⌉` in exact arithmetic.
pub fn sample_count(k: usize, epsilon: &BigRational) -> Result<BigUint> {
    check_epsilon(epsilon)?;
    // 2^k / (p/q)^2 = 2^k q^2 / p^2
    let p = epsilon.numer().magnitude();
    let q = epsilon.denom().magnitude();
    let num = (BigUint::one() << k) * q * q;
    let den = p * p;
    Ok(num.div_ceil(&den) * 10u32)
}

fn check_epsilon(epsilon: &BigRational) -> Result<()> {
    if !epsilon.is_positive() || epsilon >= &BigRational::one() {
        return Err(Error::InvalidParameter(format!("epsilon must lie in (0, 1), got {epsilon}")));
    }
    Ok(())
}

/// Parses a decimal (`0.25`) or fraction (`1/4`) into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidParameter(format!("not a rational number: {s:?}"));
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(a, b));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.chars().any(|c| !c.is_ascii_digit()) || (int.is_empty() && frac.is_empty()) {
        return Err(bad());
    }
    let digits = format!("{}{}", if int.is_empty() { "0" } else { int }, frac);
    let n: BigInt = digits.parse().map_err(|_| bad())?;
    Ok(BigRational::new(n, BigInt::from(10u32).pow(frac.len() as u32)))
}

/// Uniform size-`k` subset of `0..n` by partial Fisher–Yates.
pub fn sample_k_subset<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<Vec<usize>> {
    if k > n {
        return Err(Error::InvalidParameter(format!("cannot sample {k} of {n} vertices")));
    }
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.gen_range(i..n);
        idx.swap(i, j);
    }
    idx.truncate(k);
    Ok(idx)
}

/// RNG for sample `index` of a run seeded with `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Whether a set of combined-index vertices is independent, using `C(k, 2)` edge queries.
pub fn is_independent(g: &BipartiteGraph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| !g.adjacent(a, b)))
}

pub fn fptras_is_k(g: &BipartiteGraph, k: usize, epsilon: &BigRational, seed: u64) -> Result<FptrasResult> {
    fptras_is_k_with_budget(g, k, epsilon, seed, DEFAULT_SAMPLE_BUDGET)
}

pub fn fptras_is_k_with_budget(
    g: &BipartiteGraph,
    k: usize,
    epsilon: &BigRational,
    seed: u64,
    budget: u64,
) -> Result<FptrasResult> {
    let t = sample_count(k, epsilon)?;
    let samples = match t.to_u64() {
        Some(t) if t <= budget => t,
        _ => return Err(Error::SampleBudget { needed: t.to_string(), budget }),
    };
    let n = g.n();
    let hits = if k > n {
        0
    } else {
        (0..samples)
            .filter(|&i| {
                let set = sample_k_subset(n, k, &mut sample_rng(seed, i)).expect("k <= n checked");
                is_independent(g, &set)
            })
            .count() as u64
    };
    let estimate = BigRational::new(BigInt::from(binomial(n, k) * hits), BigInt::from(samples));
    Ok(FptrasResult {
        estimate,
        samples,
        hits,
        epsilon: epsilon.clone(),
        seed,
        generator: GENERATOR.to_string(),
    })
}

/// `Σ_{|S| = k} [S independent]` over all subsets; equals `IS_k` and is what
/// the estimator averages.
pub fn exhaustive_hit_count(g: &BipartiteGraph, k: usize) -> Count {
    let hits = crate::math::Combinations::new(g.n(), k).filter(|s| is_independent(g, s)).count();
    Count::from(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random_bounded_degree_bipartite;
    use crate::oracle::brute_is_k;

    fn eps(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn sample_counts_are_exact() {
        assert_eq!(sample_count(4, &eps("0.25")).unwrap(), BigUint::from(2560u32));
        assert_eq!(sample_count(0, &eps("0.5")).unwrap(), BigUint::from(40u32));
        // 2^1 / (1/3)^2 = 18
        assert_eq!(sample_count(1, &eps("1/3")).unwrap(), BigUint::from(180u32));
        // 2 / 0.09 = 22.2.. -> 23
        assert_eq!(sample_count(1, &eps("0.3")).unwrap(), BigUint::from(230u32));
        assert!(sample_count(1, &eps("1")).is_err());
        assert!(sample_count(1, &eps("0")).is_err());
    }

    #[test]
    fn trivial_estimates() {
        let g = random_bounded_degree_bipartite(4, 4, 3, 3);
        let r = fptras_is_k(&g, 0, &eps("0.1"), 5).unwrap();
        assert_eq!(r.estimate, BigRational::one());
        assert_eq!(fptras_is_k(&g, 9, &eps("0.1"), 5).unwrap().estimate, BigRational::zero());
        let e = BipartiteGraph::empty(3, 4);
        let r = fptras_is_k(&e, 3, &eps("0.5"), 1).unwrap();
        assert_eq!(r.hits, r.samples);
        assert_eq!(r.estimate, BigRational::from_integer(BigInt::from(35u32)));
    }

    #[test]
    fn budget_is_enforced() {
        let g = BipartiteGraph::empty(2, 2);
        let err = fptras_is_k_with_budget(&g, 3, &eps("0.5"), 0, 100).unwrap_err();
        assert!(matches!(err, Error::SampleBudget { budget: 100, .. }));
        assert!(matches!(fptras_is_k(&g, 40, &eps("0.01"), 0), Err(Error::SampleBudget { .. })));
    }

    #[test]
    fn sampling_is_deterministic_and_uniform_enough() {
        let a = sample_k_subset(5, 2, &mut sample_rng(9, 3)).unwrap();
        let b = sample_k_subset(5, 2, &mut sample_rng(9, 3)).unwrap();
        assert_eq!(a, b);
        assert!(sample_k_subset(5, 0, &mut sample_rng(1, 1)).unwrap().is_empty());
        let mut all = sample_k_subset(5, 5, &mut sample_rng(1, 1)).unwrap();
        all.sort();
        assert_eq!(all, vec![0, 1, 2, 3, 4]);
        assert!(sample_k_subset(2, 3, &mut sample_rng(1, 1)).is_err());
        let mut hist = [0u32; 4];
        for i in 0..4000 {
            hist[sample_k_subset(4, 1, &mut sample_rng(2, i)).unwrap()[0]] += 1;
        }
        assert!(hist.iter().all(|&h| (850..1150).contains(&h)), "{hist:?}");
    }

    #[test]
    fn estimator_is_unbiased_over_all_subsets() {
        for seed in 0..10 {
            let g = random_bounded_degree_bipartite(6, 6, 3, seed);
            for k in 0..=5 {
                assert_eq!(exhaustive_hit_count(&g, k), brute_is_k(&g, k).unwrap());
            }
        }
    }

    #[test]
    fn rationals_parse() {
        assert_eq!(eps("0.25"), BigRational::new(1.into(), 4.into()));
        assert_eq!(eps("1/4"), BigRational::new(1.into(), 4.into()));
        assert_eq!(eps(".5"), BigRational::new(1.into(), 2.into()));
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!((ratio_to_f64(&eps("0.125")) - 0.125).abs() < 1e-12);
    }
}
