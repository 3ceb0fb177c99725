use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::json;

use super::linalg::{binomial_matrix, clone_matrix, counts_to_rationals, solve_exact, to_counts, ExactMatrix};
use super::{CountingOracle, InstanceSummary, Outcome, ReductionTrace};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, ColouredGraph, Graph};
use crate::oracle::Brute;
use crate::Count;

/// Which summation [`bis_via_summation`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Summation {
    /// `IS(G) = Σ_k IS_k(G)`.
    BySize,
    /// `IS(G) = Σ_l LIS_l(G)`.
    ByLeftSize,
}

/// `IS(G)` from size-restricted counts.
pub fn bis_via_summation(g: &BipartiteGraph, oracle: &dyn CountingOracle, how: Summation) -> Result<Outcome> {
    let (name, top) = match how {
        Summation::BySize => ("is-by-size", g.n()),
        Summation::ByLeftSize => ("is-by-left-size", g.n_left()),
    };
    let mut trace = ReductionTrace::new(name, oracle.name(), json!({ "n_left": g.n_left(), "n_right": g.n_right() }));
    trace.instances.push(InstanceSummary::of("G", g));
    let mut total = Count::zero();
    for k in 0..=top {
        let a = match how {
            Summation::BySize => oracle.is_k(g, k)?,
            Summation::ByLeftSize => oracle.lis(g, k)?,
        };
        trace.oracle_answers.push(a.to_string());
        total += a;
    }
    trace.result = total.to_string();
    Ok(Outcome { value: total, trace })
}

/// `G` plus `m` disjoint edges whose endpoints are appended to `U` and `V`.
fn with_matching(g: &BipartiteGraph, m: usize) -> BipartiteGraph {
    let (nl, nr) = (g.n_left(), g.n_right());
    let edges = g.edges().iter().copied().chain((0..m).map(|j| (nl + j, nr + j)));
    BipartiteGraph::new(nl + m, nr + m, edges).expect("matching edges are fresh")
}

fn check_resolves(m: &ExactMatrix, x: &[BigRational], w: &[BigRational]) -> Result<()> {
    if m.mul_vec(x)? != w {
        return Err(Error::Internal("solved vector does not reproduce the oracle answers".into()));
    }
    Ok(())
}

/// `MAXIS(G)` from `MAXLIS_s` queries, `s = |U|`.
///
/// `G_i` is `G` plus a disjoint matching of `s + i` edges. A maximum
/// independent set of `G` with `s - j` left vertices extends to a maximum
/// `s`-left set of `G_i` in `C(s + i, j)` ways, so
/// `MAXLIS_s(G_i) = Σ_j C(s + i, j) · x_j` and `MAXIS(G) = Σ_j x_j`.
pub fn maxis_via_maxlis(g: &BipartiteGraph, oracle: &dyn CountingOracle) -> Result<Outcome> {
    let s = g.n_left();
    let mut trace = ReductionTrace::new("maxis", oracle.name(), json!({ "s": s }));
    let mut w = Vec::with_capacity(s + 1);
    let mut offset = None;
    for i in 0..=s {
        let gi = with_matching(g, s + i);
        trace.instances.push(InstanceSummary::of(format!("G_{i}"), &gi));
        let (size, count) = oracle.maxlis(&gi, s)?;
        trace.oracle_answers.push(format!("size={size} count={count}"));
        // the maximum size is μ(G) + s + i for every i
        let mu = size.checked_sub(s + i).ok_or_else(|| Error::Internal("maximum size below padding".into()))?;
        if offset.replace(mu).is_some_and(|prev| prev != mu) {
            return Err(Error::Internal("maximum sizes of padded instances are inconsistent".into()));
        }
        w.push(count);
    }
    let m = binomial_matrix(s);
    let w = counts_to_rationals(&w);
    let x = solve_exact(&m, &w)?;
    check_resolves(&m, &x, &w)?;
    let x = to_counts(&x)?;
    let value: Count = x.iter().sum();
    trace.matrix = Some(m.to_strings());
    trace.solution = x.iter().map(ToString::to_string).collect();
    trace.result = value.to_string();
    Ok(Outcome { value, trace })
}

/// Bipartite split graph: `(u_a, v_b)` adjacent iff `a = b` or `ab ∈ E`.
pub fn split_graph(g: &Graph) -> BipartiteGraph {
    let n = g.n();
    let edges = (0..n).flat_map(|a| std::iter::once((a, a)).chain(g.neighbours(a).iter().map(move |&b| (a, b))));
    BipartiteGraph::new(n, n, edges).expect("split graph edges are distinct")
}

/// Every right vertex replaced by `copies` twins.
fn clone_right(g: &BipartiteGraph, copies: usize) -> BipartiteGraph {
    let edges = g.edges().iter().flat_map(|&(u, v)| (0..copies).map(move |c| (u, v * copies + c)));
    BipartiteGraph::new(g.n_left(), g.n_right() * copies, edges).expect("cloned edges are distinct")
}

/// Number of dominating sets of size `k` from `LIS_k` queries.
///
/// In the split graph a `k`-set `X` dominates iff `|Γ(X)| = n`. Cloning
/// every right vertex `i` times gives
/// `LIS_k(G'_i) = Σ_r Z_{k,r} · 2^{i(n - r)}` where `Z_{k,r}` counts `k`-sets
/// with `r` neighbours; solving for `i = 1..=n+1` recovers `Z_{k,n}`.
pub fn domsets_via_lis(g: &Graph, k: usize, oracle: &dyn CountingOracle) -> Result<Outcome> {
    let n = g.n();
    let mut trace = ReductionTrace::new("domset", oracle.name(), json!({ "n": n, "k": k }));
    let split = split_graph(g);
    let mut w = Vec::with_capacity(n + 1);
    for i in 1..=n + 1 {
        let gi = clone_right(&split, i);
        trace.instances.push(InstanceSummary::of(format!("G'_{i}"), &gi));
        let a = oracle.lis(&gi, k)?;
        trace.oracle_answers.push(a.to_string());
        w.push(a);
    }
    let m = clone_matrix(n);
    let w = counts_to_rationals(&w);
    let z = solve_exact(&m, &w)?;
    check_resolves(&m, &z, &w)?;
    let z = to_counts(&z)?;
    let value = z[n].clone();
    trace.matrix = Some(m.to_strings());
    trace.solution = z.iter().map(ToString::to_string).collect();
    trace.result = value.to_string();
    Ok(Outcome { value, trace })
}

/// Rainbow copies of the balanced `2t`-vertex biclique (colours `1..=t` on
/// one side, `t+1..=2t` on the other) from `IS_{2t}` queries.
///
/// In the bipartite graph joining a low-coloured and a high-coloured vertex
/// iff they are non-adjacent in `G`, rainbow `2t`-sets are independent
/// exactly when they span a biclique in `G`. Inclusion–exclusion over the
/// colour sets `S` used by an independent set isolates the rainbow ones.
pub fn rainbow_via_is_k(t: usize, g: &ColouredGraph, oracle: &dyn CountingOracle) -> Result<Outcome> {
    if t == 0 || 2 * t > 30 {
        return Err(Error::InvalidParameter(format!("rainbow biclique needs 1 <= t <= 15, got {t}")));
    }
    let mut trace = ReductionTrace::new("rainbow", oracle.name(), json!({ "t": t, "n": g.n() }));
    let colours = 2 * t;
    let mut total = BigInt::zero();
    for s in 0u32..1 << colours {
        let keep = |v: usize| {
            let c = g.colour(v) as usize;
            (1..=colours).contains(&c) && s >> (c - 1) & 1 == 1
        };
        let left: Vec<usize> = (0..g.n()).filter(|&v| keep(v) && (g.colour(v) as usize) <= t).collect();
        let right: Vec<usize> = (0..g.n()).filter(|&v| keep(v) && (g.colour(v) as usize) > t).collect();
        let edges = left.iter().enumerate().flat_map(|(a, &u)| {
            right.iter().enumerate().filter(move |&(_, &v)| !g.has_edge(u, v)).map(move |(b, _)| (a, b))
        });
        let gs = BipartiteGraph::new(left.len(), right.len(), edges).expect("restricted edges are distinct");
        trace.instances.push(InstanceSummary::of(format!("G_S S={s:#b}"), &gs));
        let a = oracle.is_k(&gs, colours)?;
        trace.oracle_answers.push(a.to_string());
        if (colours - s.count_ones() as usize) % 2 == 0 {
            total += BigInt::from(a);
        } else {
            total -= BigInt::from(a);
        }
    }
    if total.is_negative() {
        return Err(Error::Internal("inclusion-exclusion produced a negative count".into()));
    }
    let value = total.to_biguint().expect("checked non-negative");
    trace.result = value.to_string();
    Ok(Outcome { value, trace })
}

/// Graph on `U ∪ V` whose `k`-cliques are the size-`k` independent sets of `g`:
/// same-side pairs are adjacent, cross pairs are adjacent iff not an edge of `g`.
pub fn kbis_to_clique(g: &BipartiteGraph, k: usize) -> (Graph, usize) {
    let (nl, nr) = (g.n_left(), g.n_right());
    let mut edges = Vec::new();
    for a in 0..nl + nr {
        for b in a + 1..nl + nr {
            let same_side = (a < nl) == (b < nl);
            if same_side || !g.has_edge(a, b - nl) {
                edges.push((a, b));
            }
        }
    }
    (Graph::new(nl + nr, edges).expect("complement edges are distinct"), k)
}

/// `IS_k(G)` as the `k`-clique count of [`kbis_to_clique`].
pub fn cliques_via_complement(g: &BipartiteGraph, k: usize, brute: &Brute) -> Result<Outcome> {
    let mut trace = ReductionTrace::new("clique-complement", "exhaustive-cliques", json!({ "k": k }));
    trace.instances.push(InstanceSummary::of("G", g));
    let (h, k) = kbis_to_clique(g, k);
    let value = brute.cliques(&h, k)?;
    trace.oracle_answers.push(value.to_string());
    trace.result = value.to_string();
    Ok(Outcome { value, trace })
}

/// Largest powered-and-anchored graph [`clique_gadget`] will build.
pub const MAX_GADGET_VERTICES: usize = 4096;

#[derive(Clone, Debug)]
pub struct CliqueGadget {
    /// Vertex-edge incidence graph: `U` is the edge set, `V` the vertex set.
    pub incidence: BipartiteGraph,
    pub ell: usize,
    pub t: usize,
    /// `G` blown up `t` times plus an anchor clique on `k` new vertices.
    pub powered: Graph,
}

/// Incidence gadget whose `C(k,2)`-left maximum sets are the `k`-cliques of
/// the powered graph, so `MAXLIS_l = t^k · Cliques_k(G) + 1`.
pub fn clique_gadget(g: &Graph, k: usize, c: u32) -> Result<CliqueGadget> {
    if k < 2 {
        return Err(Error::InvalidParameter("clique gadget needs k >= 2".into()));
    }
    let n = g.n();
    let t = n
        .checked_pow(2 * c)
        .filter(|&t| t.checked_mul(n).and_then(|v| v.checked_add(k)).is_some_and(|v| v <= MAX_GADGET_VERTICES))
        .ok_or_else(|| Error::SizeBudget(format!("n^(2c) blow-up exceeds {MAX_GADGET_VERTICES} vertices")))?;
    let t = t.max(1);
    let total = n * t + k;
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        for x in 0..t {
            for y in 0..t {
                edges.push((a * t + x, b * t + y));
            }
        }
    }
    let anchor = n * t;
    for x in 0..k {
        for y in x + 1..k {
            edges.push((anchor + x, anchor + y));
        }
    }
    let powered = Graph::new(total, edges)?;
    let incidence_edges = powered.edges().into_iter().enumerate().flat_map(|(e, (a, b))| [(e, a), (e, b)]);
    let incidence = BipartiteGraph::new(powered.edge_count(), total, incidence_edges)?;
    Ok(CliqueGadget { incidence, ell: k * (k - 1) / 2, t, powered })
}

/// `Cliques_k(G)` recovered from one `MAXLIS` query on the `c = 0` gadget.
pub fn clique_gadget_identity(g: &Graph, k: usize, oracle: &dyn CountingOracle) -> Result<Outcome> {
    let gadget = clique_gadget(g, k, 0)?;
    let mut trace = ReductionTrace::new("clique-gadget", oracle.name(), json!({ "k": k, "c": 0, "t": gadget.t, "ell": gadget.ell }));
    trace.instances.push(InstanceSummary::of("G''", &gadget.incidence));
    let (size, count) = oracle.maxlis(&gadget.incidence, gadget.ell)?;
    trace.oracle_answers.push(format!("size={size} count={count}"));
    // the anchor guarantees a k-clique, so the best ℓ edges span exactly k vertices
    if size + k != gadget.ell + gadget.incidence.n_right() {
        return Err(Error::Internal("gadget maximum does not correspond to a k-clique".into()));
    }
    let value = count - Count::from(1u32);
    trace.solution = vec![value.to_string()];
    trace.result = value.to_string();
    Ok(Outcome { value, trace })
}
