//! Exhaustive reference counters.
//!
//! Everything here is deliberately naive: subsets are enumerated as bitmasks
//! (or lexicographic combinations when only one side is enumerated), maps are
//! enumerated as odometers, isomorphism is tested by permutation search. None
//! of it shares code with the fast counters it is used to check.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, ColouredGraph, Graph};
use crate::math::{pow2, Combinations};
use crate::Count;

/// Size limits for exponential enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest vertex count for `2^n` subset enumeration.
    pub vertices: usize,
    /// Largest pattern for `|V(G)|^{|V(H)|}` map enumeration.
    pub pattern: usize,
    /// Largest host accepted by pattern oracles.
    pub host: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Self { vertices: 24, pattern: 8, host: 64 }
    }
}

impl Guards {
    /// Defaults, with `vertices` replaced by `BISCOUNT_GUARD` when it parses.
    pub fn from_env() -> Self {
        let mut g = Self::default();
        if let Some(v) = std::env::var("BISCOUNT_GUARD").ok().and_then(|s| s.trim().parse().ok()) {
            g.vertices = v;
        }
        g
    }
}

/// Brute-force counters bound to a set of [`Guards`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Brute {
    pub guards: Guards,
}

const MASK_LIMIT: usize = 63;

impl Brute {
    pub fn new(guards: Guards) -> Self {
        Self { guards }
    }

    fn check_vertices(&self, n: usize) -> Result<()> {
        let guard = self.guards.vertices.min(MASK_LIMIT);
        if n > guard {
            return Err(Error::GuardExceeded { size: n, guard });
        }
        Ok(())
    }

    fn check_pattern(&self, h: usize, g: usize) -> Result<()> {
        if h > self.guards.pattern {
            return Err(Error::GuardExceeded { size: h, guard: self.guards.pattern });
        }
        if g > self.guards.host {
            return Err(Error::GuardExceeded { size: g, guard: self.guards.host });
        }
        Ok(())
    }

    /// Visits every independent set of `g` as a bitmask over the combined index space.
    fn for_each_independent(&self, g: &BipartiteGraph, mut f: impl FnMut(u64)) -> Result<()> {
        let n = g.n();
        self.check_vertices(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in g.edges() {
            let w = g.n_left() + v;
            adj[u] |= 1 << w;
            adj[w] |= 1 << u;
        }
        for mask in 0..1u64 << n {
            let mut rest = mask;
            let mut independent = true;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if adj[v] & mask != 0 {
                    independent = false;
                    break;
                }
            }
            if independent {
                f(mask);
            }
        }
        Ok(())
    }

    /// `IS(G)`.
    pub fn is(&self, g: &BipartiteGraph) -> Result<Count> {
        let mut count = 0u64;
        self.for_each_independent(g, |_| count += 1)?;
        Ok(Count::from(count))
    }

    /// `IS_k(G)`.
    pub fn is_k(&self, g: &BipartiteGraph, k: usize) -> Result<Count> {
        let mut count = 0u64;
        self.for_each_independent(g, |m| {
            if m.count_ones() as usize == k {
                count += 1
            }
        })?;
        Ok(Count::from(count))
    }

    /// `LIS_l(G)`: independent sets with exactly `l` left vertices.
    pub fn lis(&self, g: &BipartiteGraph, l: usize) -> Result<Count> {
        let left = (1u64 << g.n_left()) - 1;
        let mut count = 0u64;
        self.for_each_independent(g, |m| {
            if (m & left).count_ones() as usize == l {
                count += 1
            }
        })?;
        Ok(Count::from(count))
    }

    /// `(μ_l(G), MAXLIS_l(G))`.
    pub fn maxlis(&self, g: &BipartiteGraph, l: usize) -> Result<(usize, Count)> {
        if l > g.n_left() {
            return Err(Error::InvalidParameter(format!("no {l}-left independent set: |U| = {}", g.n_left())));
        }
        let left = (1u64 << g.n_left()) - 1;
        let mut best = (0usize, 0u64);
        self.for_each_independent(g, |m| {
            if (m & left).count_ones() as usize == l {
                let size = m.count_ones() as usize;
                if size > best.0 || best.1 == 0 {
                    best = (size, 1);
                } else if size == best.0 {
                    best.1 += 1;
                }
            }
        })?;
        Ok((best.0, Count::from(best.1)))
    }

    /// `(μ(G), MAXIS(G))`.
    pub fn maxis(&self, g: &BipartiteGraph) -> Result<(usize, Count)> {
        let mut best = (0usize, 0u64);
        self.for_each_independent(g, |m| {
            let size = m.count_ones() as usize;
            if size > best.0 || best.1 == 0 {
                best = (size, 1);
            } else if size == best.0 {
                best.1 += 1;
            }
        })?;
        Ok((best.0, Count::from(best.1)))
    }

    /// `N_{l,r}(G)`: size-`l` subsets of `U` with exactly `r` neighbours.
    pub fn n_lr(&self, g: &BipartiteGraph, l: usize, r: usize) -> Result<Count> {
        self.check_vertices(g.n_left())?;
        let mut count = 0u64;
        for_each_left_subset(g, l, |size| {
            if size == r {
                count += 1
            }
        });
        Ok(Count::from(count))
    }

    /// `LIS_l(G)` by enumerating the `C(|U|, l)` left parts only: each left
    /// part `X` extends by any subset of `V \ Γ(X)`.
    pub fn lis_by_left(&self, g: &BipartiteGraph, l: usize) -> Result<Count> {
        self.check_vertices(g.n_left())?;
        let mut by_size = vec![0u64; g.n_right() + 1];
        for_each_left_subset(g, l, |size| by_size[size] += 1);
        Ok(by_size
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(r, &c)| Count::from(c) * pow2(g.n_right() - r))
            .sum())
    }

    /// `(μ_l(G), MAXLIS_l(G))` by left-part enumeration: a maximum `l`-left
    /// set is `X ∪ (V \ Γ(X))` with `|Γ(X)|` minimal.
    pub fn maxlis_by_left(&self, g: &BipartiteGraph, l: usize) -> Result<(usize, Count)> {
        if l > g.n_left() {
            return Err(Error::InvalidParameter(format!("no {l}-left independent set: |U| = {}", g.n_left())));
        }
        self.check_vertices(g.n_left())?;
        let mut best = (usize::MAX, 0u64);
        for_each_left_subset(g, l, |size| {
            if size < best.0 {
                best = (size, 1);
            } else if size == best.0 {
                best.1 += 1;
            }
        });
        Ok((l + g.n_right() - best.0, Count::from(best.1)))
    }

    /// `Hom(H, G)` for coloured graphs.
    pub fn hom(&self, h: &ColouredGraph, g: &ColouredGraph) -> Result<Count> {
        self.check_pattern(h.n(), g.n())?;
        let mut count = 0u64;
        for_each_map(h, g, |_| count += 1);
        Ok(Count::from(count))
    }

    /// Vertex-surjective homomorphisms `K → K2`.
    pub fn shom(&self, k: &ColouredGraph, k2: &ColouredGraph) -> Result<Count> {
        self.check_pattern(k.n(), k2.n())?;
        self.check_pattern(k2.n(), k2.n())?;
        let mut count = 0u64;
        let target = k2.n();
        for_each_map(k, k2, |phi| {
            let mut hit = vec![false; target];
            for &x in phi {
                hit[x] = true;
            }
            if hit.iter().all(|&b| b) {
                count += 1;
            }
        });
        Ok(Count::from(count))
    }

    /// `Ind(H, G)`: vertex sets `X` with `G[X] ≃ H`.
    pub fn ind(&self, h: &ColouredGraph, g: &ColouredGraph) -> Result<Count> {
        self.check_pattern(h.n(), g.n())?;
        let mut count = 0u64;
        for subset in Combinations::new(g.n(), h.n()) {
            let sub = g.induced(&subset)?;
            if isomorphic(h, &sub) {
                count += 1;
            }
        }
        Ok(Count::from(count))
    }

    /// Number of `k`-cliques.
    pub fn cliques(&self, g: &Graph, k: usize) -> Result<Count> {
        self.check_vertices(g.n())?;
        let count = Combinations::new(g.n(), k)
            .filter(|s| s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| g.has_edge(a, b))))
            .count();
        Ok(Count::from(count))
    }

    /// Number of dominating sets of size `k`.
    pub fn dominating(&self, g: &Graph, k: usize) -> Result<Count> {
        self.check_vertices(g.n())?;
        let n = g.n();
        let count = Combinations::new(n, k)
            .filter(|s| {
                let mut covered = vec![false; n];
                for &v in s {
                    covered[v] = true;
                    for &w in g.neighbours(v) {
                        covered[w] = true;
                    }
                }
                covered.iter().all(|&c| c)
            })
            .count();
        Ok(Count::from(count))
    }

    /// `Sub(𝒢, 𝓗)` for a `2t`-coloured balanced biclique `H` using every colour once.
    pub fn rainbow(&self, t: usize, g: &ColouredGraph, h: &ColouredGraph) -> Result<Count> {
        check_rainbow_biclique(t, h)?;
        self.check_vertices(g.n())?;
        // A copy of H uses one vertex per colour, so it is fixed by that choice.
        let mut by_colour: Vec<Vec<usize>> = vec![Vec::new(); 2 * t];
        for v in 0..g.n() {
            let c = g.colour(v) as usize;
            if (1..=2 * t).contains(&c) {
                by_colour[c - 1].push(v);
            }
        }
        let mut vertex_of_colour = vec![0usize; 2 * t];
        for v in 0..h.n() {
            vertex_of_colour[h.colour(v) as usize - 1] = v;
        }
        let required: Vec<(usize, usize)> = h
            .edges()
            .into_iter()
            .map(|(a, b)| (h.colour(a) as usize - 1, h.colour(b) as usize - 1))
            .collect();
        let mut count = 0u64;
        let mut choice = vec![0usize; 2 * t];
        if by_colour.iter().any(|c| c.is_empty()) {
            return Ok(Count::zero());
        }
        loop {
            let ok = required
                .iter()
                .all(|&(a, b)| g.has_edge(by_colour[a][choice[a]], by_colour[b][choice[b]]));
            if ok {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == 2 * t {
                    return Ok(Count::from(count));
                }
                choice[i] += 1;
                if choice[i] < by_colour[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }
}

/// Calls `f(|Γ(X)|)` for every size-`l` subset `X` of `U`.
fn for_each_left_subset(g: &BipartiteGraph, l: usize, mut f: impl FnMut(usize)) {
    let mut mark = vec![usize::MAX; g.n_right()];
    for (stamp, x) in Combinations::new(g.n_left(), l).enumerate() {
        let mut size = 0;
        for &u in &x {
            for &v in g.left_neighbours(u) {
                if mark[v] != stamp {
                    mark[v] = stamp;
                    size += 1;
                }
            }
        }
        f(size);
    }
}

/// Calls `f(φ)` for every colour-preserving homomorphism `φ: H → G`.
fn for_each_map(h: &ColouredGraph, g: &ColouredGraph, mut f: impl FnMut(&[usize])) {
    let k = h.n();
    let candidates: Vec<Vec<usize>> =
        (0..k).map(|v| (0..g.n()).filter(|&w| g.colour(w) == h.colour(v)).collect()).collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return;
    }
    let edges = h.edges();
    let mut idx = vec![0usize; k];
    let mut phi: Vec<usize> = candidates.iter().map(|c| c[0]).collect();
    loop {
        if edges.iter().all(|&(a, b)| g.has_edge(phi[a], phi[b])) {
            f(&phi);
        }
        let mut i = 0;
        loop {
            if i == k {
                return;
            }
            idx[i] += 1;
            if idx[i] < candidates[i].len() {
                phi[i] = candidates[i][idx[i]];
                break;
            }
            idx[i] = 0;
            phi[i] = candidates[i][0];
            i += 1;
        }
    }
}

/// Colour-preserving isomorphism test by backtracking over bijections.
pub fn isomorphic(a: &ColouredGraph, b: &ColouredGraph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut ca = a.colours().to_vec();
    let mut cb = b.colours().to_vec();
    ca.sort_unstable();
    cb.sort_unstable();
    if ca != cb {
        return false;
    }
    fn extend(a: &ColouredGraph, b: &ColouredGraph, phi: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = phi.len();
        if v == a.n() {
            return true;
        }
        for w in 0..b.n() {
            if used[w] || a.colour(v) != b.colour(w) {
                continue;
            }
            let consistent = (0..v).all(|x| a.has_edge(x, v) == b.has_edge(phi[x], w));
            if consistent {
                used[w] = true;
                phi.push(w);
                if extend(a, b, phi, used) {
                    return true;
                }
                phi.pop();
                used[w] = false;
            }
        }
        false
    }
    extend(a, b, &mut Vec::with_capacity(a.n()), &mut vec![false; b.n()])
}

/// Checks that `h` is a balanced biclique on `2t` vertices using each colour of `1..=2t` once.
pub fn check_rainbow_biclique(t: usize, h: &ColouredGraph) -> Result<()> {
    let bad = |m: &str| Err(Error::InvalidParameter(format!("malformed biclique pattern: {m}")));
    if t == 0 || h.n() != 2 * t {
        return bad("needs 2t vertices with t >= 1");
    }
    let mut colours = h.colours().to_vec();
    colours.sort_unstable();
    if colours != (1..=2 * t as u32).collect::<Vec<_>>() {
        return bad("every colour in 1..=2t must appear exactly once");
    }
    if h.edge_count() != t * t {
        return bad("a balanced biclique has t^2 edges");
    }
    // two-colour the graph and require sides of size t with all cross pairs adjacent
    let mut side = vec![None; h.n()];
    side[0] = Some(false);
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for &w in h.neighbours(v) {
            match side[w] {
                None => {
                    side[w] = Some(!side[v].unwrap());
                    stack.push(w);
                }
                Some(s) if s == side[v].unwrap() => return bad("not bipartite"),
                _ => {}
            }
        }
    }
    if side.iter().any(Option::is_none) {
        return bad("not connected");
    }
    let left: Vec<usize> = (0..h.n()).filter(|&v| side[v] == Some(false)).collect();
    let right: Vec<usize> = (0..h.n()).filter(|&v| side[v] == Some(true)).collect();
    if left.len() != t || !left.iter().all(|&a| right.iter().all(|&b| h.has_edge(a, b))) {
        return bad("not a balanced biclique");
    }
    Ok(())
}

/// The standard rainbow biclique: colours `1..=t` on one side, `t+1..=2t` on the other.
pub fn standard_biclique(t: usize) -> ColouredGraph {
    let colours = (1..=2 * t as u32).collect();
    let edges = (0..t).flat_map(|a| (t..2 * t).map(move |b| (a, b)));
    ColouredGraph::new(colours, edges).expect("biclique is simple")
}

macro_rules! with_default_guards {
    ($($(#[$doc:meta])* $name:ident => $method:ident($($arg:ident: $ty:ty),*) -> $ret:ty;)*) => {
        $(
            $(#[$doc])*
            pub fn $name($($arg: $ty),*) -> Result<$ret> {
                Brute::default().$method($($arg),*)
            }
        )*
    };
}

with_default_guards! {
    /// `IS(G)` by exhaustive enumeration.
    brute_is => is(g: &BipartiteGraph) -> Count;
    brute_is_k => is_k(g: &BipartiteGraph, k: usize) -> Count;
    brute_lis => lis(g: &BipartiteGraph, l: usize) -> Count;
    brute_maxlis => maxlis(g: &BipartiteGraph, l: usize) -> (usize, Count);
    brute_maxis => maxis(g: &BipartiteGraph) -> (usize, Count);
    brute_n_lr => n_lr(g: &BipartiteGraph, l: usize, r: usize) -> Count;
    brute_hom => hom(h: &ColouredGraph, g: &ColouredGraph) -> Count;
    brute_shom => shom(k: &ColouredGraph, k2: &ColouredGraph) -> Count;
    brute_ind => ind(h: &ColouredGraph, g: &ColouredGraph) -> Count;
    brute_cliques => cliques(g: &Graph, k: usize) -> Count;
    brute_dominating => dominating(g: &Graph, k: usize) -> Count;
    brute_rainbow => rainbow(t: usize, g: &ColouredGraph, h: &ColouredGraph) -> Count;
}

/// Sum over `k` of `IS_k`, used by the summation identity checks.
pub fn sum_is_k(g: &BipartiteGraph) -> Result<Count> {
    (0..=g.n()).try_fold(Count::zero(), |acc, k| Ok(acc + brute_is_k(g, k)?))
}

/// `Σ_r N_{l,r} · 2^{|V|-r}` evaluated with oracle `N` values.
pub fn lis_from_profile(g: &BipartiteGraph, l: usize) -> Result<Count> {
    let mut total = Count::zero();
    for r in 0..=g.n_right() {
        let n = brute_n_lr(g, l, r)?;
        if !n.is_zero() {
            total += n * pow2(g.n_right() - r);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{random_bounded_degree_bipartite, to_coloured};
    use crate::math::binomial;

    fn c(x: u64) -> Count {
        Count::from(x)
    }

    fn k11() -> BipartiteGraph {
        BipartiteGraph::complete(1, 1)
    }
    fn k22() -> BipartiteGraph {
        BipartiteGraph::complete(2, 2)
    }
    fn path() -> BipartiteGraph {
        BipartiteGraph::new(2, 1, [(0, 0), (1, 0)]).unwrap()
    }

    #[test]
    fn independent_set_examples() {
        assert_eq!(brute_is(&k11()).unwrap(), c(3));
        assert_eq!(brute_is(&BipartiteGraph::empty(2, 3)).unwrap(), c(32));
        assert_eq!(brute_is(&k22()).unwrap(), c(7));
        assert_eq!(brute_is_k(&k22(), 0).unwrap(), c(1));
        assert_eq!(brute_is_k(&BipartiteGraph::empty(3, 3), 2).unwrap(), binomial(6, 2));
        assert_eq!(brute_is_k(&path(), 2).unwrap(), c(1));
        assert_eq!(brute_is_k(&path(), 4).unwrap(), c(0));
    }

    #[test]
    fn left_independent_examples() {
        assert_eq!(brute_lis(&k22(), 0).unwrap(), c(4));
        assert_eq!(brute_lis(&k22(), 1).unwrap(), c(2));
        assert_eq!(brute_lis(&path(), 1).unwrap(), c(2));
        assert_eq!(brute_maxlis(&k11(), 0).unwrap(), (1, c(1)));
        assert_eq!(brute_maxlis(&k11(), 1).unwrap(), (1, c(1)));
        assert_eq!(brute_maxlis(&k22(), 1).unwrap(), (1, c(2)));
        assert!(matches!(brute_maxlis(&k11(), 2), Err(Error::InvalidParameter(_))));
        assert_eq!(brute_n_lr(&path(), 1, 1).unwrap(), c(2));
        assert_eq!(brute_n_lr(&BipartiteGraph::empty(4, 2), 2, 0).unwrap(), c(6));
        assert_eq!(brute_n_lr(&k22(), 2, 2).unwrap(), c(1));
    }

    #[test]
    fn guard_is_enforced() {
        let big = BipartiteGraph::empty(13, 12);
        assert_eq!(brute_is(&big), Err(Error::GuardExceeded { size: 25, guard: 24 }));
        let loose = Brute::new(Guards { vertices: 30, ..Guards::default() });
        assert!(loose.check_vertices(25).is_ok());
    }

    #[test]
    fn left_enumeration_agrees_with_full() {
        for seed in 0..30 {
            let g = random_bounded_degree_bipartite(5, 6, 3, seed);
            for l in 0..=5 {
                assert_eq!(Brute::default().lis_by_left(&g, l).unwrap(), brute_lis(&g, l).unwrap());
                assert_eq!(Brute::default().maxlis_by_left(&g, l).unwrap(), brute_maxlis(&g, l).unwrap());
            }
        }
    }

    #[test]
    fn summation_identities() {
        for seed in 0..20 {
            let g = random_bounded_degree_bipartite(4, 5, 2, seed);
            let total = brute_is(&g).unwrap();
            assert_eq!(sum_is_k(&g).unwrap(), total);
            let by_left: Count = (0..=4).map(|l| brute_lis(&g, l).unwrap()).sum();
            assert_eq!(by_left, total);
            for l in 0..=4 {
                assert_eq!(lis_from_profile(&g, l).unwrap(), brute_lis(&g, l).unwrap());
            }
        }
    }

    #[test]
    fn hom_examples() {
        let g = ColouredGraph::new(vec![1, 2, 1, 1], [(0, 1), (1, 2)]).unwrap();
        let v1 = ColouredGraph::new(vec![1], []).unwrap();
        assert_eq!(brute_hom(&v1, &g).unwrap(), c(3));
        let edge = ColouredGraph::new(vec![1, 2], [(0, 1)]).unwrap();
        assert_eq!(brute_hom(&edge, &to_coloured(&k11())).unwrap(), c(1));
        let two = ColouredGraph::new(vec![1, 1], []).unwrap();
        assert_eq!(brute_hom(&two, &g).unwrap(), c(9));
        assert_eq!(brute_hom(&edge, &to_coloured(&k22())).unwrap(), c(4));
    }

    #[test]
    fn shom_examples() {
        let edge = ColouredGraph::new(vec![1, 2], [(0, 1)]).unwrap();
        assert_eq!(brute_shom(&edge, &edge).unwrap(), c(1));
        let path = ColouredGraph::new(vec![1, 2, 1], [(0, 1), (1, 2)]).unwrap();
        assert_eq!(brute_shom(&edge, &path).unwrap(), c(0));
        let two = ColouredGraph::new(vec![1, 1], []).unwrap();
        let one = ColouredGraph::new(vec![1], []).unwrap();
        assert_eq!(brute_shom(&two, &one).unwrap(), c(1));
        assert_eq!(brute_shom(&path, &edge).unwrap(), c(1));
    }

    #[test]
    fn ind_examples() {
        let g = ColouredGraph::new(vec![1, 2, 1, 1], [(0, 1), (1, 2)]).unwrap();
        let v1 = ColouredGraph::new(vec![1], []).unwrap();
        assert_eq!(brute_ind(&v1, &g).unwrap(), c(3));
        assert_eq!(brute_ind(&g, &g).unwrap(), c(1));
        let edge = ColouredGraph::new(vec![1, 2], [(0, 1)]).unwrap();
        let path = ColouredGraph::new(vec![1, 2, 1], [(0, 1), (1, 2)]).unwrap();
        assert_eq!(brute_ind(&edge, &path).unwrap(), c(2));
        let relabelled = ColouredGraph::new(vec![2, 1], [(0, 1)]).unwrap();
        assert_eq!(brute_ind(&relabelled, &path).unwrap(), c(2));
    }

    #[test]
    fn clique_and_domination_examples() {
        let tri = Graph::complete(3);
        assert_eq!(brute_cliques(&tri, 3).unwrap(), c(1));
        assert_eq!(brute_cliques(&tri, 2).unwrap(), c(3));
        assert_eq!(brute_cliques(&Graph::path(5), 1).unwrap(), c(5));
        assert_eq!(brute_dominating(&Graph::star(3), 1).unwrap(), c(1));
        assert_eq!(brute_dominating(&tri, 1).unwrap(), c(3));
        assert_eq!(brute_dominating(&Graph::empty(3), 3).unwrap(), c(1));
    }

    #[test]
    fn rainbow_examples() {
        let h = standard_biclique(1);
        let edge = ColouredGraph::new(vec![1, 2], [(0, 1)]).unwrap();
        assert_eq!(brute_rainbow(1, &edge, &h).unwrap(), c(1));
        let apart = ColouredGraph::new(vec![1, 2], []).unwrap();
        assert_eq!(brute_rainbow(1, &apart, &h).unwrap(), c(0));
        let two = ColouredGraph::new(vec![1, 2, 1, 2], [(0, 1), (2, 3)]).unwrap();
        assert_eq!(brute_rainbow(1, &two, &h).unwrap(), c(2));
        let not_biclique = ColouredGraph::new(vec![1, 2, 3, 4], [(0, 2), (1, 3)]).unwrap();
        assert!(brute_rainbow(2, &two, &not_biclique).is_err());
        assert!(check_rainbow_biclique(2, &standard_biclique(2)).is_ok());
    }

    #[test]
    fn ind_is_relabelling_invariant() {
        for seed in 0..10 {
            let g = crate::graph::random_bounded_degree_coloured(9, 2, 3, seed);
            let h = crate::graph::random_bounded_degree_coloured(4, 2, 2, seed + 100);
            let r = h.relabel(&[3, 1, 0, 2]);
            assert_eq!(brute_ind(&h, &g).unwrap(), brute_ind(&r, &g).unwrap());
        }
    }
}
