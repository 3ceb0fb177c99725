//! Bounded-degree exact counters for `IS_k`, `LIS_l` and `MAXLIS_l`.
//!
//! `N_{l,r}(G)` is the number of size-`l` sets `X ⊆ U` with `|Γ(X)| = r`.
//! Summing `Ind(K, G)` over bipartite patterns `K` with `l` left and `r`
//! right vertices and no isolated right vertex counts pairs `(X, Y)` with
//! `Y ⊆ Γ(X)`, `|Y| = r`, which gives
//! `N'_{l,r} = Σ_{i ≥ r} C(i, r) · N_{l,i}`. Peeling from the top recovers
//! `N_{l,r}`, and `LIS_l = Σ_r N_{l,r} · 2^{|V| - r}`.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::canon::{CanonicalForm, SmallGraph, DEFAULT_PATTERN_CAP};
use crate::colsub::{InducedCounter, PatternClass};
use crate::error::{Error, Result};
use crate::graph::{to_coloured, to_monochrome, BipartiteGraph, ColouredGraph, Graph, MaxDegree};
use crate::math::{binomial, pow2};
use crate::Count;

/// `N_{l,r}(G)` for `r = 0..=Δl`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighbourhoodProfile {
    pub ell: usize,
    pub values: Vec<Count>,
}

impl NeighbourhoodProfile {
    pub fn get(&self, r: usize) -> Count {
        self.values.get(r).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> Count {
        self.values.iter().sum()
    }

    /// Smallest `r` with `N_{l,r} ≠ 0`.
    pub fn min_support(&self) -> Option<usize> {
        self.values.iter().position(|v| !v.is_zero())
    }
}

type PatternSet = Arc<Vec<Arc<PatternClass>>>;

/// Representatives of the bipartite patterns with `l` colour-1 vertices,
/// `r` colour-2 vertices, degrees at most `Δ`, edges only across and no
/// isolated colour-2 vertex.
///
/// Generated as multisets of right-vertex neighbourhoods, then deduplicated
/// by canonical form.
pub fn neighbourhood_patterns(ell: usize, r: usize, delta: usize) -> Result<PatternSet> {
    if ell + r > DEFAULT_PATTERN_CAP {
        return Err(Error::PatternTooLarge { size: ell + r, cap: DEFAULT_PATTERN_CAP });
    }
    type Memo = Mutex<HashMap<(usize, usize, usize), PatternSet>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(p) = memo.lock().expect("pattern memo").get(&(ell, r, delta)) {
        return Ok(p.clone());
    }
    let types: Vec<u32> = (1u32..1 << ell).filter(|t| t.count_ones() as usize <= delta).collect();
    let mut found: BTreeSet<CanonicalForm> = BTreeSet::new();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(r);
    let mut degree = vec![0usize; ell];
    choose_types(&types, 0, r, delta, &mut chosen, &mut degree, &mut |chosen| {
        let mut colours = vec![1u32; ell];
        colours.extend(std::iter::repeat_n(2, r));
        let mut g = SmallGraph::new(colours);
        for (j, &t) in chosen.iter().enumerate() {
            for i in 0..ell {
                if t >> i & 1 == 1 {
                    g.add_edge(i, ell + j);
                }
            }
        }
        let class = PatternClass::new(&g);
        if found.insert(class.form.clone()) {
            out.push(Arc::new(class));
        }
    });
    let set = Arc::new(out);
    memo.lock().expect("pattern memo").insert((ell, r, delta), set.clone());
    Ok(set)
}

fn choose_types(
    types: &[u32],
    from: usize,
    left: usize,
    delta: usize,
    chosen: &mut Vec<u32>,
    degree: &mut [usize],
    f: &mut impl FnMut(&[u32]),
) {
    if left == 0 {
        f(chosen);
        return;
    }
    for ti in from..types.len() {
        let t = types[ti];
        let fits = (0..degree.len()).all(|i| t >> i & 1 == 0 || degree[i] < delta);
        if !fits {
            continue;
        }
        for (i, d) in degree.iter_mut().enumerate() {
            *d += (t >> i & 1) as usize;
        }
        chosen.push(t);
        choose_types(types, ti, left - 1, delta, chosen, degree, f);
        chosen.pop();
        for (i, d) in degree.iter_mut().enumerate() {
            *d -= (t >> i & 1) as usize;
        }
    }
}

/// Exact counters for one bipartite host, sharing pattern caches across queries.
pub struct BoundedCounter {
    graph: BipartiteGraph,
    delta: usize,
    coloured: InducedCounter,
    monochrome: OnceLock<InducedCounter>,
}

impl BoundedCounter {
    /// Fails if the host has a vertex of degree above `delta`.
    pub fn new(graph: &BipartiteGraph, delta: usize) -> Result<Self> {
        if graph.max_degree() > delta {
            return Err(Error::DegreeBound { actual: graph.max_degree(), bound: delta });
        }
        Ok(Self {
            graph: graph.clone(),
            delta,
            coloured: InducedCounter::new(&to_coloured(graph), delta)?,
            monochrome: OnceLock::new(),
        })
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// `N_{l,·}(G)`.
    pub fn profile(&self, ell: usize) -> Result<NeighbourhoodProfile> {
        let top = self.delta * ell;
        let mut values = vec![Count::zero(); top + 1];
        if ell == 0 {
            values[0] = Count::from(1u32);
            return Ok(NeighbourhoodProfile { ell, values });
        }
        if ell > self.graph.n_left() {
            return Ok(NeighbourhoodProfile { ell, values });
        }
        let reach = top.min(self.graph.n_right());
        if ell + reach > DEFAULT_PATTERN_CAP {
            return Err(Error::PatternTooLarge { size: ell + reach, cap: DEFAULT_PATTERN_CAP });
        }
        let mut exact: Vec<BigInt> = vec![BigInt::zero(); reach + 1];
        for r in (0..=reach).rev() {
            let mut n = BigInt::zero();
            for k in neighbourhood_patterns(ell, r, self.delta)?.iter() {
                n += BigInt::from(self.coloured.count_class(k)?);
            }
            for i in r + 1..=reach {
                if !exact[i].is_zero() {
                    n -= BigInt::from(binomial(i, r)) * &exact[i];
                }
            }
            if n.is_negative() {
                return Err(Error::Internal(format!("negative N_{{{ell},{r}}} in profile recurrence")));
            }
            exact[r] = n;
        }
        for (r, v) in exact.into_iter().enumerate() {
            values[r] = v.to_biguint().expect("checked non-negative");
        }
        let profile = NeighbourhoodProfile { ell, values };
        if profile.total() != binomial(self.graph.n_left(), ell) {
            return Err(Error::Internal("neighbourhood profile does not sum to C(|U|, l)".into()));
        }
        Ok(profile)
    }

    /// `LIS_l(G)`.
    pub fn lis(&self, ell: usize) -> Result<Count> {
        let p = self.profile(ell)?;
        let nv = self.graph.n_right();
        Ok(p.values
            .iter()
            .enumerate()
            .take(nv + 1)
            .filter(|(_, v)| !v.is_zero())
            .map(|(r, v)| v * pow2(nv - r))
            .sum())
    }

    /// `(μ_l(G), MAXLIS_l(G))`.
    pub fn maxlis(&self, ell: usize) -> Result<(usize, Count)> {
        if ell > self.graph.n_left() {
            return Err(Error::InvalidParameter(format!(
                "no {ell}-left independent set: |U| = {}",
                self.graph.n_left()
            )));
        }
        let p = self.profile(ell)?;
        let mu = p.min_support().ok_or_else(|| Error::Internal("empty neighbourhood profile".into()))?;
        Ok((ell + self.graph.n_right() - mu, p.get(mu)))
    }

    /// `IS_k(G)`.
    pub fn is_k(&self, k: usize) -> Result<Count> {
        if k == 0 {
            return Ok(Count::from(1u32));
        }
        if k > DEFAULT_PATTERN_CAP {
            return Err(Error::PatternTooLarge { size: k, cap: DEFAULT_PATTERN_CAP });
        }
        if k > self.graph.n() {
            return Ok(Count::zero());
        }
        let counter = match self.monochrome.get() {
            Some(c) => c,
            None => {
                let c = InducedCounter::new(&to_monochrome(&self.graph), self.delta)?;
                self.monochrome.get_or_init(|| c)
            }
        };
        counter.count(&ColouredGraph::monochrome(Graph::empty(k)))
    }
}

pub fn neighbourhood_profile(g: &BipartiteGraph, ell: usize, delta: usize) -> Result<NeighbourhoodProfile> {
    BoundedCounter::new(g, delta)?.profile(ell)
}

pub fn count_is_k_bounded(g: &BipartiteGraph, k: usize, delta: usize) -> Result<Count> {
    BoundedCounter::new(g, delta)?.is_k(k)
}

pub fn count_lis_bounded(g: &BipartiteGraph, ell: usize, delta: usize) -> Result<Count> {
    BoundedCounter::new(g, delta)?.lis(ell)
}

/// Returns `(μ_l(G), MAXLIS_l(G))`: the largest size of an independent set
/// with exactly `l` left vertices, and how many reach it.
pub fn count_maxlis_bounded(g: &BipartiteGraph, ell: usize, delta: usize) -> Result<(usize, Count)> {
    BoundedCounter::new(g, delta)?.maxlis(ell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random_bipartite_with_budget;
    use crate::oracle::{brute_is_k, brute_lis, brute_maxlis, brute_n_lr};

    fn c(x: u64) -> Count {
        Count::from(x)
    }

    fn path() -> BipartiteGraph {
        BipartiteGraph::new(2, 1, [(0, 0), (1, 0)]).unwrap()
    }

    #[test]
    fn is_k_examples() {
        assert_eq!(count_is_k_bounded(&BipartiteGraph::empty(3, 3), 2, 3).unwrap(), c(15));
        assert_eq!(count_is_k_bounded(&path(), 2, 3).unwrap(), c(1));
        assert_eq!(count_is_k_bounded(&path(), 0, 3).unwrap(), c(1));
        assert_eq!(count_is_k_bounded(&path(), 4, 3).unwrap(), c(0));
    }

    #[test]
    fn profile_examples() {
        let p = neighbourhood_profile(&BipartiteGraph::empty(4, 3), 2, 3).unwrap();
        assert_eq!(p.values.len(), 7);
        assert_eq!(p.get(0), c(6));
        assert!(p.values[1..].iter().all(Zero::is_zero));
        let p = neighbourhood_profile(&path(), 1, 3).unwrap();
        assert_eq!((p.get(1), p.get(0)), (c(2), c(0)));
        let p = neighbourhood_profile(&BipartiteGraph::complete(2, 2), 2, 2).unwrap();
        assert_eq!(p.get(2), c(1));
        assert_eq!(p.total(), c(1));
        assert_eq!(neighbourhood_profile(&path(), 0, 3).unwrap().values[0], c(1));
    }

    #[test]
    fn lis_and_maxlis_examples() {
        assert_eq!(count_lis_bounded(&path(), 0, 3).unwrap(), c(2));
        assert_eq!(count_lis_bounded(&path(), 1, 3).unwrap(), c(2));
        assert_eq!(count_lis_bounded(&BipartiteGraph::complete(2, 2), 1, 2).unwrap(), c(2));
        assert_eq!(count_maxlis_bounded(&BipartiteGraph::empty(3, 2), 2, 3).unwrap(), (4, c(3)));
        assert_eq!(count_maxlis_bounded(&BipartiteGraph::complete(2, 2), 1, 2).unwrap(), (1, c(2)));
        assert_eq!(count_maxlis_bounded(&path(), 1, 3).unwrap(), (1, c(2)));
        assert!(matches!(count_maxlis_bounded(&path(), 3, 3), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let g = BipartiteGraph::complete(1, 4);
        assert_eq!(count_lis_bounded(&g, 1, 3), Err(Error::DegreeBound { actual: 4, bound: 3 }));
    }

    #[test]
    fn pattern_sets_have_the_right_shape() {
        let p = neighbourhood_patterns(1, 2, 3).unwrap();
        assert_eq!(p.len(), 1);
        assert!(neighbourhood_patterns(1, 4, 3).unwrap().is_empty());
        assert_eq!(neighbourhood_patterns(2, 1, 3).unwrap().len(), 2);
        for k in neighbourhood_patterns(3, 4, 2).unwrap().iter() {
            let g = k.graph();
            assert!(g.max_degree() <= 2);
            assert_eq!(g.colour_count(1), 3);
            assert_eq!(g.colour_count(2), 4);
            assert!((0..g.n()).all(|v| g.colour(v) == 1 || g.graph().degree(v) > 0));
        }
    }

    #[test]
    fn agrees_with_oracles() {
        for seed in 0..30u64 {
            let nl = 3 + (seed % 5) as usize;
            let nr = 3 + (seed / 5 % 5) as usize;
            let delta = 1 + (seed % 3) as usize;
            let g = random_bipartite_with_budget(nl, nr, delta, 1 + seed as usize % 12, seed);
            let counter = BoundedCounter::new(&g, delta).unwrap();
            for ell in 0..=nl.min(3) {
                let p = counter.profile(ell).unwrap();
                for r in 0..p.values.len() {
                    assert_eq!(p.get(r), brute_n_lr(&g, ell, r).unwrap(), "seed {seed} l {ell} r {r}");
                }
                assert_eq!(counter.lis(ell).unwrap(), brute_lis(&g, ell).unwrap());
                assert_eq!(counter.maxlis(ell).unwrap(), brute_maxlis(&g, ell).unwrap());
            }
            for k in 0..=3 {
                assert_eq!(counter.is_k(k).unwrap(), brute_is_k(&g, k).unwrap());
            }
        }
    }
}
