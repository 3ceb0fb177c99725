//! Induced coloured subgraph counting in bounded-degree hosts.
//!
//! For patterns `K` and a host `G`,
//! `Hom(K, G) = Σ_{K'} SHom(K, K') · Ind(K', G)` where `K'` runs over
//! isomorphism classes and `SHom` counts vertex-surjective homomorphisms.
//! Ordering classes by (vertex count descending, edge count ascending,
//! canonical form) makes the system upper triangular with `|Aut(K)|` on the
//! diagonal, so `Ind` falls out of back-substitution.
//!
//! Two ways of building the system are provided. [`enumerate_pattern_basis`]
//! lists every `q`-coloured pattern up to `k` vertices and fills the matrix
//! with the exhaustive [`brute_shom`](crate::oracle::brute_shom); it is only
//! usable for very small `k`. [`count_induced`] and [`InducedCounter`] restrict
//! the system to the vertex-surjective images of the query pattern that could
//! occur in the host (degree at most `Δ`, edges only on colour pairs the host
//! has) and compute each row by enumerating quotients of the pattern.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rustc_hash::FxHashMap;

use crate::canon::{canonicalize_small, CanonicalForm, SmallGraph, DEFAULT_PATTERN_CAP};
use crate::error::{Error, Result};
use crate::graph::{ColouredGraph, MaxDegree};
use crate::homcount::HomCounter;
use crate::math::factorial_u128;
use crate::oracle::{Brute, Guards};
use crate::Count;

/// Largest `k` accepted by [`enumerate_pattern_basis`].
pub const FULL_BASIS_LIMIT: usize = 6;

/// One isomorphism class of patterns, stored in canonical labelling.
#[derive(Clone, Debug)]
pub struct PatternClass {
    pub form: CanonicalForm,
    pub small: SmallGraph,
    pub automorphisms: u128,
}

impl PatternClass {
    /// Canonically relabelled copy of `g`.
    pub fn new(g: &SmallGraph) -> Self {
        let c = canonicalize_small(g);
        Self { small: g.relabel(&c.order), form: c.form, automorphisms: c.automorphisms }
    }

    pub fn graph(&self) -> ColouredGraph {
        self.small.to_coloured()
    }

    pub fn vertices(&self) -> usize {
        self.small.n()
    }

    pub fn edges(&self) -> usize {
        self.small.edge_count()
    }

    fn order_key(&self) -> (std::cmp::Reverse<usize>, usize, &CanonicalForm) {
        (std::cmp::Reverse(self.vertices()), self.edges(), &self.form)
    }
}

fn sort_classes(classes: &mut [PatternClass]) {
    classes.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
}

/// All `q`-coloured patterns on `1..=k` vertices with maximum degree at most `Δ`.
#[derive(Debug)]
pub struct PatternBasis {
    pub q: u32,
    pub k: usize,
    pub delta: usize,
    pub classes: Vec<PatternClass>,
    index: HashMap<CanonicalForm, usize>,
}

impl PatternBasis {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn position(&self, h: &ColouredGraph) -> Result<Option<usize>> {
        let small = SmallGraph::from_coloured(h)?;
        Ok(self.index.get(&canonicalize_small(&small).form).copied())
    }
}

type BasisMemo = Mutex<HashMap<(u32, usize, usize), Arc<PatternBasis>>>;

/// Enumerates and memoizes the full pattern basis for `(q, k, Δ)`.
pub fn enumerate_pattern_basis(q: u32, k: usize, delta: usize) -> Result<Arc<PatternBasis>> {
    if k > FULL_BASIS_LIMIT {
        return Err(Error::PatternTooLarge { size: k, cap: FULL_BASIS_LIMIT });
    }
    if q == 0 {
        return Err(Error::InvalidParameter("need at least one colour".into()));
    }
    static MEMO: OnceLock<BasisMemo> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(b) = memo.lock().expect("basis memo").get(&(q, k, delta)) {
        return Ok(b.clone());
    }
    let mut seen: HashMap<CanonicalForm, PatternClass> = HashMap::new();
    for n in 1..=k {
        let mut colours = vec![1u32; n];
        loop {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            let mut g = SmallGraph::new(colours.clone());
            for_each_edge_set(&mut g, &pairs, 0, delta, &mut |g| {
                let class = PatternClass::new(g);
                seen.entry(class.form.clone()).or_insert(class);
            });
            // next non-decreasing colour sequence
            let Some(i) = (0..n).rev().find(|&i| colours[i] < q) else { break };
            let c = colours[i] + 1;
            for x in &mut colours[i..] {
                *x = c;
            }
        }
    }
    let mut classes: Vec<PatternClass> = seen.into_values().collect();
    sort_classes(&mut classes);
    let index = classes.iter().enumerate().map(|(i, c)| (c.form.clone(), i)).collect();
    let basis = Arc::new(PatternBasis { q, k, delta, classes, index });
    memo.lock().expect("basis memo").insert((q, k, delta), basis.clone());
    Ok(basis)
}

/// Calls `f` on every spanning supergraph of `g` that adds edges from
/// `pairs[i..]` while keeping degrees at most `delta`.
fn for_each_edge_set(g: &mut SmallGraph, pairs: &[(usize, usize)], i: usize, delta: usize, f: &mut impl FnMut(&SmallGraph)) {
    if i == pairs.len() {
        f(g);
        return;
    }
    for_each_edge_set(g, pairs, i + 1, delta, f);
    let (a, b) = pairs[i];
    if g.degree(a) < delta && g.degree(b) < delta {
        g.add_edge(a, b);
        for_each_edge_set(g, pairs, i + 1, delta, f);
        g.adj[a] &= !(1 << b);
        g.adj[b] &= !(1 << a);
    }
}

/// Square matrix of `SHom` values indexed by a [`PatternBasis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShomMatrix {
    pub entries: Vec<Vec<Count>>,
}

impl ShomMatrix {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| !row[i].is_zero() && row[..i].iter().all(Zero::is_zero))
    }
}

/// Fills the `SHom` matrix of a basis by exhaustive map enumeration.
pub fn build_shom_matrix(basis: &PatternBasis) -> Result<ShomMatrix> {
    let brute = Brute::new(Guards { pattern: basis.k.max(1), host: basis.k.max(1), ..Guards::default() });
    let graphs: Vec<ColouredGraph> = basis.classes.iter().map(PatternClass::graph).collect();
    let mut entries = Vec::with_capacity(graphs.len());
    for a in &graphs {
        let mut row = Vec::with_capacity(graphs.len());
        for b in &graphs {
            row.push(if b.n() > a.n() { Count::zero() } else { brute.shom(a, b)? });
        }
        entries.push(row);
    }
    let m = ShomMatrix { entries };
    if !m.is_upper_triangular() {
        return Err(Error::Internal("surjective-homomorphism matrix is not upper triangular".into()));
    }
    Ok(m)
}

/// Solves `A x = b` for upper triangular `A` with integral solution.
///
/// Fails with [`Error::Internal`] if a quotient is not an exact non-negative
/// integer, which can only happen if the matrix or the ordering is wrong.
pub fn back_substitute(a: &[Vec<Count>], b: &[Count]) -> Result<Vec<Count>> {
    let n = b.len();
    let mut x: Vec<BigInt> = vec![BigInt::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigInt::from(b[i].clone());
        for j in i + 1..n {
            if !a[i][j].is_zero() && !x[j].is_zero() {
                acc -= BigInt::from(a[i][j].clone()) * &x[j];
            }
        }
        let d = BigInt::from(a[i][i].clone());
        if d.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let (q, r) = acc.div_rem(&d);
        if !r.is_zero() || q.is_negative() {
            return Err(Error::Internal(format!("back-substitution row {i} is not an exact non-negative quotient")));
        }
        x[i] = q;
    }
    Ok(x.into_iter().map(|v| v.to_biguint().expect("checked non-negative")).collect())
}

/// `Ind(H, G)` by solving the full-basis system; exponential in `k`, for cross-checks.
pub fn count_induced_via_basis(h: &ColouredGraph, g: &ColouredGraph, delta: usize) -> Result<Count> {
    check_degrees(h, g, delta)?;
    let q = h.max_colour().max(g.max_colour()).max(1);
    let basis = enumerate_pattern_basis(q, h.n(), delta)?;
    let Some(target) = basis.position(h)? else {
        return Err(Error::Internal("pattern missing from its own basis".into()));
    };
    let a = build_shom_matrix(&basis)?;
    let homs = HomCounter::new(g);
    let b = basis.classes.iter().map(|c| homs.count_small(&c.small)).collect::<Result<Vec<_>>>()?;
    Ok(back_substitute(&a.entries, &b)?.swap_remove(target))
}

fn check_degrees(h: &ColouredGraph, g: &ColouredGraph, delta: usize) -> Result<()> {
    for d in [h.max_degree(), g.max_degree()] {
        if d > delta {
            return Err(Error::DegreeBound { actual: d, bound: delta });
        }
    }
    Ok(())
}

/// Colour pairs `(a, b)` with `a <= b` that occur on host edges.
pub type Support = Arc<Vec<(u32, u32)>>;

fn supported(support: &[(u32, u32)], a: u32, b: u32) -> bool {
    support.binary_search(&(a.min(b), a.max(b))).is_ok()
}

/// One nonzero entry `SHom(K, K')` of a row.
#[derive(Clone, Debug)]
pub struct RowEntry {
    pub target: Arc<PatternClass>,
    pub shom: u128,
}

type RowKey = (usize, Support, CanonicalForm);
type Row = Arc<Vec<RowEntry>>;
type Supergraphs = Arc<Vec<(Arc<PatternClass>, u128)>>;

fn rows_cache() -> &'static Mutex<HashMap<RowKey, Row>> {
    static CACHE: OnceLock<Mutex<HashMap<RowKey, Row>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn supergraph_cache() -> &'static Mutex<HashMap<RowKey, Supergraphs>> {
    static CACHE: OnceLock<Mutex<HashMap<RowKey, Supergraphs>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Nonzero `SHom(K, ·)` entries over patterns with degree at most `delta`
/// whose edges lie on `support` pairs. `k` must be in canonical labelling.
pub fn shom_row(k: &PatternClass, delta: usize, support: &Support) -> Row {
    let key = (delta, support.clone(), k.form.clone());
    if let Some(r) = rows_cache().lock().expect("row cache").get(&key) {
        return r.clone();
    }
    let mut acc: FxHashMap<CanonicalForm, (Arc<PatternClass>, u128)> = FxHashMap::default();
    for (quotient, weight) in quotients(&k.small, delta) {
        for (target, count) in supergraphs(&quotient, delta, support).iter() {
            let slot = acc.entry(target.form.clone()).or_insert_with(|| (target.clone(), 0));
            slot.1 = count.checked_mul(weight).and_then(|c| c.checked_add(slot.1)).expect("SHom fits in 128 bits");
        }
    }
    let mut row: Vec<RowEntry> = acc
        .into_values()
        .map(|(target, s)| RowEntry { shom: s * target.automorphisms, target })
        .collect();
    row.sort_by(|a, b| a.target.order_key().cmp(&b.target.order_key()));
    let row = Arc::new(row);
    rows_cache().lock().expect("row cache").insert(key, row.clone());
    row
}

/// Spanning supergraphs of `q` within the degree and colour-pair constraints,
/// grouped by isomorphism class with their multiplicities.
fn supergraphs(q: &PatternClass, delta: usize, support: &Support) -> Arc<Vec<(Arc<PatternClass>, u128)>> {
    let key = (delta, support.clone(), q.form.clone());
    if let Some(s) = supergraph_cache().lock().expect("supergraph cache").get(&key) {
        return s.clone();
    }
    let g = &q.small;
    let n = g.n();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| {
            !g.has_edge(a, b)
                && g.degree(a) < delta
                && g.degree(b) < delta
                && supported(support, g.colours[a], g.colours[b])
        })
        .collect();
    let mut found: FxHashMap<CanonicalForm, (Arc<PatternClass>, u128)> = FxHashMap::default();
    let mut work = g.clone();
    for_each_edge_set(&mut work, &pairs, 0, delta, &mut |s| {
        let c = canonicalize_small(s);
        found
            .entry(c.form.clone())
            .or_insert_with(|| {
                let class = PatternClass { small: s.relabel(&c.order), form: c.form, automorphisms: c.automorphisms };
                (Arc::new(class), 0)
            })
            .1 += 1;
    });
    let out = Arc::new(found.into_values().collect::<Vec<_>>());
    supergraph_cache().lock().expect("supergraph cache").insert(key, out.clone());
    out
}

struct TwinClass {
    members: Vec<usize>,
    colour: u32,
    /// Neighbours outside the class.
    outside: u64,
    clique: bool,
}

fn twin_classes(g: &SmallGraph) -> Vec<TwinClass> {
    let n = g.n();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<TwinClass> = Vec::new();
    for v in 0..n {
        if class_of[v].is_some() {
            continue;
        }
        let open: Vec<usize> =
            (v..n).filter(|&w| class_of[w].is_none() && g.colours[w] == g.colours[v] && g.adj[w] == g.adj[v]).collect();
        let closed: Vec<usize> = (v..n)
            .filter(|&w| class_of[w].is_none() && g.colours[w] == g.colours[v] && g.adj[w] | 1 << w == g.adj[v] | 1 << v)
            .collect();
        let (members, clique) = if closed.len() > open.len() { (closed, true) } else { (open, false) };
        let mask = members.iter().fold(0u64, |m, &w| m | 1 << w);
        for &w in &members {
            class_of[w] = Some(classes.len());
        }
        classes.push(TwinClass { colour: g.colours[v], outside: g.adj[v] & !mask, members, clique });
    }
    // place classes so that each one touches earlier ones where possible
    let mut order: Vec<usize> = Vec::with_capacity(classes.len());
    let mut placed = 0u64;
    let mut used = vec![false; classes.len()];
    while order.len() < classes.len() {
        let next = (0..classes.len())
            .filter(|&c| !used[c])
            .max_by_key(|&c| ((classes[c].outside & placed).count_ones(), std::cmp::Reverse(c)))
            .expect("unplaced class exists");
        used[next] = true;
        placed |= classes[next].members.iter().fold(0u64, |m, &w| m | 1 << w);
        order.push(next);
    }
    let mut slots: Vec<Option<TwinClass>> = classes.into_iter().map(Some).collect();
    order.into_iter().map(|c| slots[c].take().expect("each class placed once")).collect()
}

/// Quotients of `g` by partitions into independent colour classes whose
/// quotient has maximum degree at most `delta`, grouped by isomorphism class
/// with the number of partitions producing each.
fn quotients(g: &SmallGraph, delta: usize) -> Vec<(PatternClass, u128)> {
    let classes = twin_classes(g);
    let mut q = Quotients {
        g,
        delta,
        classes: &classes,
        block_of: vec![usize::MAX; g.n()],
        blocks: Vec::new(),
        out: FxHashMap::default(),
        seen: FxHashMap::default(),
    };
    q.run(0, 1);
    q.out.into_values().collect()
}

struct Quotients<'a> {
    g: &'a SmallGraph,
    delta: usize,
    classes: &'a [TwinClass],
    block_of: Vec<usize>,
    /// `(colour, member mask)` per block.
    blocks: Vec<(u32, u64)>,
    out: FxHashMap<CanonicalForm, (PatternClass, u128)>,
    /// Labelled quotients already canonicalized.
    seen: FxHashMap<SmallGraph, CanonicalForm>,
}

impl Quotients<'_> {
    fn run(&mut self, ci: usize, weight: u128) {
        if ci == self.classes.len() {
            self.emit(weight);
            return;
        }
        let class = &self.classes[ci];
        let compatible: Vec<usize> = (0..self.blocks.len())
            .filter(|&b| self.blocks[b].0 == class.colour && self.blocks[b].1 & class.outside == 0)
            .collect();
        let m = class.members.len();
        let mut plans: Vec<(Vec<usize>, Vec<usize>, u128)> = Vec::new();
        if class.clique {
            for e in 0..=m.min(compatible.len()) {
                let w = factorial_u128(m) / factorial_u128(m - e);
                for chosen in crate::math::Combinations::new(compatible.len(), e) {
                    let targets = chosen.iter().map(|&i| compatible[i]).collect();
                    plans.push((targets, vec![1; m - e], w));
                }
            }
        } else {
            let mut counts = vec![0usize; compatible.len()];
            distribute(&mut counts, 0, m, &mut |counts, rest| {
                for lambda in integer_partitions(rest) {
                    let mut denom: u128 = counts.iter().map(|&c| factorial_u128(c)).product();
                    denom *= lambda.iter().map(|&p| factorial_u128(p)).product::<u128>();
                    let mut run = 1;
                    for i in 1..=lambda.len() {
                        if i < lambda.len() && lambda[i] == lambda[i - 1] {
                            run += 1;
                        } else {
                            denom *= factorial_u128(run);
                            run = 1;
                        }
                    }
                    let targets =
                        counts.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(compatible[i], c)).collect();
                    plans.push((targets, lambda, factorial_u128(m) / denom));
                }
            });
        }
        for (targets, new_blocks, w) in plans {
            let base = self.blocks.len();
            let mut members = class.members.iter().copied();
            for &b in &targets {
                let v = members.next().expect("enough members");
                self.blocks[b].1 |= 1 << v;
                self.block_of[v] = b;
            }
            for &size in &new_blocks {
                let id = self.blocks.len();
                let mut mask = 0u64;
                for v in members.by_ref().take(size) {
                    mask |= 1 << v;
                    self.block_of[v] = id;
                }
                self.blocks.push((class.colour, mask));
            }
            if self.degrees_ok() {
                self.run(ci + 1, weight.checked_mul(w).expect("partition weight fits in 128 bits"));
            }
            self.blocks.truncate(base);
            for (&b, &v) in targets.iter().zip(&class.members) {
                self.blocks[b].1 &= !(1 << v);
            }
            for &v in &class.members {
                self.block_of[v] = usize::MAX;
            }
        }
    }

    fn neighbour_blocks(&self, mask: u64) -> u64 {
        let mut around = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            around |= self.g.adj[v];
        }
        let mut blocks = 0u64;
        while around != 0 {
            let w = around.trailing_zeros() as usize;
            around &= around - 1;
            if self.block_of[w] != usize::MAX {
                blocks |= 1 << self.block_of[w];
            }
        }
        blocks
    }

    fn degrees_ok(&self) -> bool {
        self.blocks.iter().all(|&(_, mask)| self.neighbour_blocks(mask).count_ones() as usize <= self.delta)
    }

    fn emit(&mut self, weight: u128) {
        let mut q = SmallGraph::new(self.blocks.iter().map(|b| b.0).collect());
        for (i, &(_, mask)) in self.blocks.iter().enumerate() {
            q.adj[i] = self.neighbour_blocks(mask);
        }
        if let Some(form) = self.seen.get(&q) {
            self.out.get_mut(form).expect("seen quotients are recorded").1 += weight;
            return;
        }
        let class = PatternClass::new(&q);
        self.seen.insert(q, class.form.clone());
        let slot = self.out.entry(class.form.clone()).or_insert((class, 0));
        slot.1 += weight;
    }
}

/// Calls `f(counts, rest)` for every way of putting at most `left` items into the slots.
fn distribute(counts: &mut Vec<usize>, i: usize, left: usize, f: &mut impl FnMut(&[usize], usize)) {
    if i == counts.len() {
        f(counts, left);
        return;
    }
    for c in 0..=left {
        counts[i] = c;
        distribute(counts, i + 1, left - c, f);
    }
    counts[i] = 0;
}

/// Integer partitions of `n` as non-increasing part lists.
fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Host-side state for many `Ind(·, G)` queries against one host.
pub struct InducedCounter {
    homs: HomCounter,
    delta: usize,
    support: Support,
    colour_counts: HashMap<u32, usize>,
    cache: Mutex<FxHashMap<CanonicalForm, Count>>,
    cap: usize,
}

impl InducedCounter {
    /// Fails if the host has a vertex of degree above `delta`.
    pub fn new(host: &ColouredGraph, delta: usize) -> Result<Self> {
        if host.max_degree() > delta {
            return Err(Error::DegreeBound { actual: host.max_degree(), bound: delta });
        }
        let support: BTreeSet<(u32, u32)> = host.edge_colour_pairs();
        let mut colour_counts = HashMap::new();
        for &c in host.colours() {
            *colour_counts.entry(c).or_insert(0) += 1;
        }
        Ok(Self {
            homs: HomCounter::new(host),
            delta,
            support: Arc::new(support.into_iter().collect()),
            colour_counts,
            cache: Mutex::default(),
            cap: DEFAULT_PATTERN_CAP,
        })
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn host(&self) -> &ColouredGraph {
        self.homs.host()
    }

    /// `Ind(H, G)`.
    pub fn count(&self, h: &ColouredGraph) -> Result<Count> {
        if h.n() > self.cap {
            return Err(Error::PatternTooLarge { size: h.n(), cap: self.cap });
        }
        if h.max_degree() > self.delta {
            return Err(Error::DegreeBound { actual: h.max_degree(), bound: self.delta });
        }
        self.count_class(&Arc::new(PatternClass::new(&SmallGraph::from_coloured(h)?)))
    }

    /// Whether a pattern could occur as an induced subgraph at all.
    fn admissible(&self, k: &SmallGraph) -> bool {
        let mut counts: HashMap<u32, usize> = HashMap::new();
        for &c in &k.colours {
            *counts.entry(c).or_insert(0) += 1;
        }
        if counts.iter().any(|(c, &n)| self.colour_counts.get(c).copied().unwrap_or(0) < n) {
            return false;
        }
        (0..k.n()).all(|a| {
            (a + 1..k.n()).all(|b| !k.has_edge(a, b) || supported(&self.support, k.colours[a], k.colours[b]))
        })
    }

    /// `Ind` of a pattern already in canonical labelling.
    pub fn count_class(&self, k: &Arc<PatternClass>) -> Result<Count> {
        if let Some(c) = self.cache.lock().expect("ind cache").get(&k.form) {
            return Ok(c.clone());
        }
        let value = if self.admissible(&k.small) { self.solve(k)? } else { Count::zero() };
        self.cache.lock().expect("ind cache").insert(k.form.clone(), value.clone());
        Ok(value)
    }

    fn solve(&self, k: &Arc<PatternClass>) -> Result<Count> {
        let mut acc = BigInt::from(self.homs.count_small(&k.small)?);
        let mut diagonal = 0u128;
        for entry in shom_row(k, self.delta, &self.support).iter() {
            if entry.target.form == k.form {
                diagonal = entry.shom;
                continue;
            }
            let ind = self.count_class(&entry.target)?;
            if !ind.is_zero() {
                acc -= BigInt::from(ind) * BigInt::from(entry.shom);
            }
        }
        if diagonal == 0 {
            return Err(Error::Internal("pattern missing from its own surjective-homomorphism row".into()));
        }
        let (q, r) = acc.div_rem(&BigInt::from(diagonal));
        if !r.is_zero() || q.is_negative() {
            return Err(Error::Internal("induced count is not an exact non-negative quotient".into()));
        }
        Ok(q.to_biguint().expect("checked non-negative"))
    }
}

/// The restricted linear system for one query, kept for inspection.
#[derive(Clone, Debug)]
pub struct InducedSystem {
    pub patterns: Vec<Arc<PatternClass>>,
    pub matrix: Vec<Vec<Count>>,
    pub rhs: Vec<Count>,
    pub solution: Vec<Count>,
    /// Index of the query pattern.
    pub target: usize,
}

impl InducedSystem {
    /// Collects every admissible vertex-surjective image of `h`, builds
    /// `A` and `b = Hom(·, G)`, and solves by back-substitution.
    pub fn build(h: &ColouredGraph, g: &ColouredGraph, delta: usize) -> Result<Self> {
        check_degrees(h, g, delta)?;
        let counter = InducedCounter::new(g, delta)?;
        let root = Arc::new(PatternClass::new(&SmallGraph::from_coloured(h)?));
        let mut patterns = vec![root.clone()];
        let mut seen: BTreeSet<CanonicalForm> = BTreeSet::from([root.form.clone()]);
        let mut i = 0;
        while i < patterns.len() {
            let row = shom_row(&patterns[i], delta, &counter.support);
            for e in row.iter() {
                if counter.admissible(&e.target.small) && seen.insert(e.target.form.clone()) {
                    patterns.push(e.target.clone());
                }
            }
            i += 1;
        }
        if !counter.admissible(&root.small) {
            patterns.clear();
        }
        patterns.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
        let index: HashMap<&CanonicalForm, usize> = patterns.iter().enumerate().map(|(i, p)| (&p.form, i)).collect();
        let mut matrix = vec![vec![Count::zero(); patterns.len()]; patterns.len()];
        for (i, p) in patterns.iter().enumerate() {
            for e in shom_row(p, delta, &counter.support).iter() {
                if let Some(&j) = index.get(&e.target.form) {
                    matrix[i][j] = Count::from(e.shom);
                }
            }
        }
        let rhs = patterns.iter().map(|p| counter.homs.count_small(&p.small)).collect::<Result<Vec<_>>>()?;
        let solution = back_substitute(&matrix, &rhs)?;
        let target = index.get(&root.form).copied().unwrap_or(usize::MAX);
        Ok(Self { patterns, matrix, rhs, solution, target })
    }

    /// `Ind(H, G)` for the query pattern.
    pub fn value(&self) -> Count {
        self.solution.get(self.target).cloned().unwrap_or_default()
    }

    /// Checks `A x = b` exactly.
    pub fn verify(&self) -> bool {
        self.matrix.iter().zip(&self.rhs).all(|(row, b)| {
            let ax: Count = row.iter().zip(&self.solution).map(|(a, x)| a * x).sum();
            &ax == b
        })
    }

    pub fn is_upper_triangular(&self) -> bool {
        ShomMatrix { entries: self.matrix.clone() }.is_upper_triangular()
    }
}

/// `Ind(H, G)` for hosts of maximum degree at most `delta`.
pub fn count_induced(h: &ColouredGraph, g: &ColouredGraph, delta: usize) -> Result<Count> {
    check_degrees(h, g, delta)?;
    if h.n() > DEFAULT_PATTERN_CAP {
        return Err(Error::PatternTooLarge { size: h.n(), cap: DEFAULT_PATTERN_CAP });
    }
    let host_colours = g.colour_set();
    if h.colour_set().iter().any(|c| !host_colours.contains(c) || h.colour_count(*c) > g.colour_count(*c)) {
        return Ok(Count::zero());
    }
    let support = g.edge_colour_pairs();
    if !h.edge_colour_pairs().is_subset(&support) {
        return Ok(Count::zero());
    }
    Ok(InducedSystem::build(h, g, delta)?.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{random_bounded_degree_coloured, random_coloured_with_budget, to_coloured, BipartiteGraph, Graph};
    use crate::oracle::{brute_ind, brute_shom};

    fn c(x: u64) -> Count {
        Count::from(x)
    }

    #[test]
    fn basis_examples() {
        assert_eq!(enumerate_pattern_basis(1, 1, 2).unwrap().len(), 1);
        let b = enumerate_pattern_basis(1, 2, 1).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.classes[0].edges(), 0);
        assert_eq!(b.classes[1].edges(), 1);
        assert_eq!(b.classes[2].vertices(), 1);
        assert_eq!(enumerate_pattern_basis(2, 1, 0).unwrap().len(), 2);
        assert!(enumerate_pattern_basis(1, FULL_BASIS_LIMIT + 1, 2).is_err());
    }

    #[test]
    fn shom_matrix_examples() {
        let b = enumerate_pattern_basis(1, 2, 1).unwrap();
        let m = build_shom_matrix(&b).unwrap();
        assert!(m.is_upper_triangular());
        // two isolated vertices onto one vertex
        assert_eq!(m.entries[0][2], c(1));
        assert_eq!(m.entries[2][0], c(0));
        assert_eq!(m.entries[0][0], c(2));
    }

    #[test]
    fn basis_order_is_a_linear_extension() {
        let b = enumerate_pattern_basis(2, 4, 2).unwrap();
        let m = build_shom_matrix(&b).unwrap();
        for i in 0..b.len() {
            for j in 0..b.len() {
                if i != j && !m.entries[i][j].is_zero() {
                    let (ki, kj) = (&b.classes[i], &b.classes[j]);
                    assert!(kj.vertices() < ki.vertices() || kj.edges() > ki.edges());
                }
            }
        }
    }

    #[test]
    fn quotient_rows_match_exhaustive_shom() {
        let all: Arc<Vec<(u32, u32)>> = Arc::new(vec![(1, 1), (1, 2), (2, 2)]);
        let b = enumerate_pattern_basis(2, 4, 3).unwrap();
        for k in &b.classes {
            let row = shom_row(k, 3, &all);
            let mut expected = 0;
            for t in &b.classes {
                let s = brute_shom(&k.graph(), &t.graph()).unwrap();
                let got = row.iter().find(|e| e.target.form == t.form).map(|e| e.shom).unwrap_or(0);
                assert_eq!(Count::from(got), s);
                if !s.is_zero() {
                    expected += 1;
                }
            }
            assert_eq!(row.len(), expected);
        }
    }

    #[test]
    fn twin_weights_match_exhaustive_shom() {
        // large twin classes on both sides
        let k = ColouredGraph::new(vec![1, 1, 2, 2, 2, 1], [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (5, 2)]).unwrap();
        let k = PatternClass::new(&SmallGraph::from_coloured(&k).unwrap());
        let support: Support = Arc::new(vec![(1, 2)]);
        let row = shom_row(&k, 3, &support);
        for e in row.iter() {
            assert_eq!(Count::from(e.shom), brute_shom(&k.graph(), &e.target.graph()).unwrap());
        }
        let tri = PatternClass::new(&SmallGraph::from_coloured(&ColouredGraph::monochrome(Graph::complete(3))).unwrap());
        let row = shom_row(&tri, 3, &Arc::new(vec![(1, 1)]));
        assert_eq!(row.len(), 1);
        for e in row.iter() {
            assert_eq!(Count::from(e.shom), brute_shom(&tri.graph(), &e.target.graph()).unwrap());
        }
    }

    #[test]
    fn induced_examples() {
        let g = ColouredGraph::new(vec![1, 2, 1, 1], [(0, 1), (1, 2)]).unwrap();
        let v1 = ColouredGraph::new(vec![1], []).unwrap();
        assert_eq!(count_induced(&v1, &g, 2).unwrap(), c(3));
        let edge = ColouredGraph::new(vec![1, 2], [(0, 1)]).unwrap();
        let path = to_coloured(&BipartiteGraph::new(2, 1, [(0, 0), (1, 0)]).unwrap());
        assert_eq!(count_induced(&edge, &path, 2).unwrap(), c(2));
        let pair = ColouredGraph::new(vec![1, 1], []).unwrap();
        let isolated = ColouredGraph::new(vec![1, 1, 1], []).unwrap();
        assert_eq!(count_induced(&pair, &isolated, 1).unwrap(), c(3));
        let absent = ColouredGraph::new(vec![3], []).unwrap();
        assert_eq!(count_induced(&absent, &g, 2).unwrap(), c(0));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let star = ColouredGraph::monochrome(Graph::star(4));
        let v = ColouredGraph::new(vec![1], []).unwrap();
        assert_eq!(count_induced(&v, &star, 3), Err(Error::DegreeBound { actual: 4, bound: 3 }));
        assert!(InducedCounter::new(&star, 3).is_err());
    }

    #[test]
    fn agrees_with_brute_force() {
        for seed in 0..25u64 {
            let q = 1 + (seed % 3) as u32;
            let delta = 1 + (seed % 3) as usize;
            let g = random_bounded_degree_coloured(8 + (seed as usize % 7), q, delta, seed);
            let counter = InducedCounter::new(&g, delta).unwrap();
            for hs in 0..5u64 {
                let h = random_coloured_with_budget(1 + (hs as usize % 4), q, delta, hs as usize, 500 + seed * 7 + hs);
                let expected = brute_ind(&h, &g).unwrap();
                assert_eq!(count_induced(&h, &g, delta).unwrap(), expected, "seed {seed} pattern {hs}");
                assert_eq!(counter.count(&h).unwrap(), expected);
            }
        }
    }

    #[test]
    fn full_basis_agrees_with_closure() {
        for seed in 0..6 {
            let g = random_bounded_degree_coloured(9, 2, 2, seed);
            let h = random_coloured_with_budget(3, 2, 2, 1, 90 + seed);
            assert_eq!(count_induced_via_basis(&h, &g, 2).unwrap(), count_induced(&h, &g, 2).unwrap());
        }
    }

    #[test]
    fn system_satisfies_ax_eq_b() {
        let g = random_bounded_degree_coloured(12, 2, 3, 11);
        let h = ColouredGraph::new(vec![1, 2, 1, 2], [(0, 1), (2, 3)]).unwrap();
        let s = InducedSystem::build(&h, &g, 3).unwrap();
        assert!(s.verify());
        assert!(s.is_upper_triangular());
        assert_eq!(s.value(), brute_ind(&h, &g).unwrap());
    }
}
