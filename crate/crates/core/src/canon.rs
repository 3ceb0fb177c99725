//! Canonical forms of small coloured graphs.
//!
//! Two coloured graphs receive the same [`CanonicalForm`] exactly when a
//! colour-preserving isomorphism exists between them.
//!
//! Twin classes (vertices of equal colour with equal open or equal closed
//! neighbourhoods) are collapsed first; the collapsed graph carries
//! `(colour, class size, twin kind)` as vertex labels. The collapsed graph is
//! then labelled by an individualization-refinement search that visits every
//! leaf and keeps the smallest encoding. Counting the leaves that reach the
//! smallest encoding gives the automorphism group order as a by-product.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::ColouredGraph;
use crate::math::factorial_u128;

/// Default largest pattern accepted by canonicalization and the pattern
/// counters built on it.
pub const DEFAULT_PATTERN_CAP: usize = 20;

/// Hard upper limit: adjacency is stored in `u64` masks and automorphism
/// counts must fit in `u128`.
pub const MAX_PATTERN_CAP: usize = 32;

/// Isomorphism-invariant byte encoding of a coloured graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Result of canonical labelling.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub form: CanonicalForm,
    /// `order[i]` is the input vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// Order of the colour-preserving automorphism group.
    pub automorphisms: u128,
}

/// Dense coloured graph with bitmask adjacency, at most [`MAX_PATTERN_CAP`] vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    pub colours: Vec<u32>,
    pub adj: Vec<u64>,
}

impl SmallGraph {
    pub fn new(colours: Vec<u32>) -> Self {
        assert!(colours.len() <= MAX_PATTERN_CAP, "small graphs hold at most {MAX_PATTERN_CAP} vertices");
        let n = colours.len();
        Self { colours, adj: vec![0; n] }
    }

    pub fn from_coloured(g: &ColouredGraph) -> Result<Self> {
        if g.n() > MAX_PATTERN_CAP {
            return Err(Error::PatternTooLarge { size: g.n(), cap: MAX_PATTERN_CAP });
        }
        let mut s = Self::new(g.colours().to_vec());
        for (a, b) in g.edges() {
            s.add_edge(a, b);
        }
        Ok(s)
    }

    pub fn to_coloured(&self) -> ColouredGraph {
        let mut edges = Vec::new();
        for a in 0..self.n() {
            let mut rest = self.adj[a] >> a >> 1;
            let mut b = a + 1;
            while rest != 0 {
                if rest & 1 == 1 {
                    edges.push((a, b));
                }
                rest >>= 1;
                b += 1;
            }
        }
        ColouredGraph::new(self.colours.clone(), edges).expect("small graphs are simple")
    }

    pub fn n(&self) -> usize {
        self.colours.len()
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert!(a != b);
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Vertex `i` of the result is vertex `order[i]` of `self`.
    pub fn relabel(&self, order: &[usize]) -> SmallGraph {
        let mut pos = vec![0usize; self.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let colours = order.iter().map(|&v| self.colours[v]).collect();
        let adj = order
            .iter()
            .map(|&v| {
                let mut m = 0u64;
                let mut rest = self.adj[v];
                while rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    m |= 1 << pos[w];
                }
                m
            })
            .collect();
        SmallGraph { colours, adj }
    }

    /// Connected components as vertex bitmasks, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let n = self.n();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on the vertices of `mask`, in increasing order.
    pub fn induced_mask(&self, mask: u64) -> SmallGraph {
        let order: Vec<usize> = (0..self.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut out = SmallGraph::new(order.iter().map(|&v| self.colours[v]).collect());
        for (i, &v) in order.iter().enumerate() {
            let mut rest = self.adj[v] & mask;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.adj[i] |= 1 << pos[w];
            }
        }
        out
    }
}

pub fn canonical_form(h: &ColouredGraph) -> Result<CanonicalForm> {
    canonical_form_with_cap(h, DEFAULT_PATTERN_CAP)
}

pub fn canonical_form_with_cap(h: &ColouredGraph, cap: usize) -> Result<CanonicalForm> {
    Ok(canonicalize_with_cap(h, cap)?.form)
}

pub fn canonicalize(h: &ColouredGraph) -> Result<Canonical> {
    canonicalize_with_cap(h, DEFAULT_PATTERN_CAP)
}

pub fn canonicalize_with_cap(h: &ColouredGraph, cap: usize) -> Result<Canonical> {
    let cap = cap.min(MAX_PATTERN_CAP);
    if h.n() > cap {
        return Err(Error::PatternTooLarge { size: h.n(), cap });
    }
    Ok(canonicalize_small(&SmallGraph::from_coloured(h)?))
}

/// Canonical representative: `h` relabelled by its canonical order.
pub fn canonical_representative(h: &ColouredGraph) -> Result<ColouredGraph> {
    let c = canonicalize(h)?;
    Ok(h.relabel(&c.order))
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct ClassLabel {
    colour: u32,
    size: u8,
    /// 0 singleton, 1 false twins (independent), 2 true twins (clique).
    kind: u8,
}

struct Collapsed {
    labels: Vec<ClassLabel>,
    adj: Vec<u64>,
    members: Vec<Vec<usize>>,
}

fn collapse_twins(g: &SmallGraph) -> Collapsed {
    let n = g.n();
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut kinds: Vec<u8> = Vec::new();
    let mut class_of = vec![0usize; n];
    for v in 0..n {
        let found = members.iter().position(|m| {
            let w = m[0];
            g.colours[w] == g.colours[v]
                && (g.adj[w] == g.adj[v] || g.adj[w] | 1 << w == g.adj[v] | 1 << v)
        });
        match found {
            Some(c) => {
                let w = members[c][0];
                kinds[c] = if g.adj[w] == g.adj[v] { 1 } else { 2 };
                members[c].push(v);
                class_of[v] = c;
            }
            None => {
                class_of[v] = members.len();
                members.push(vec![v]);
                kinds.push(0);
            }
        }
    }
    let labels = members
        .iter()
        .zip(&kinds)
        .map(|(m, &kind)| ClassLabel { colour: g.colours[m[0]], size: m.len() as u8, kind })
        .collect();
    let adj = members
        .iter()
        .map(|m| {
            let mut mask = 0u64;
            let mut rest = g.adj[m[0]];
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                mask |= 1 << class_of[w];
            }
            mask
        })
        .collect();
    Collapsed { labels, adj, members }
}

struct Search<'a> {
    g: &'a Collapsed,
    best: Option<(Vec<u8>, Vec<usize>)>,
    best_count: u128,
}

impl Search<'_> {
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
            let mut next = Vec::with_capacity(cells.len());
            let mut changed = false;
            for cell in cells {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(Vec<u8>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let sig = masks.iter().map(|&m| (self.g.adj[v] & m).count_ones() as u8).collect();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        changed |= start > 0 || i < keyed.len();
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }

    fn encode(&self, order: &[usize]) -> Vec<u8> {
        let m = order.len();
        let mut out = Vec::with_capacity(1 + 6 * m + m * m / 16 + 1);
        out.push(m as u8);
        for &v in order {
            let l = self.g.labels[v];
            out.extend_from_slice(&l.colour.to_be_bytes());
            out.push(l.size);
            out.push(l.kind);
        }
        let mut byte = 0u8;
        let mut bits = 0;
        for i in 0..m {
            for j in i + 1..m {
                byte = byte << 1 | (self.g.adj[order[i]] >> order[j] & 1) as u8;
                bits += 1;
                if bits == 8 {
                    out.push(byte);
                    byte = 0;
                    bits = 0;
                }
            }
        }
        if bits > 0 {
            out.push(byte << (8 - bits));
        }
        out
    }

    fn run(&mut self, cells: Vec<Vec<usize>>) {
        let cells = self.refine(cells);
        if cells.iter().all(|c| c.len() == 1) {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let code = self.encode(&order);
            match self.best.as_ref().map(|(b, _)| code.cmp(b)) {
                None | Some(Ordering::Less) => {
                    self.best = Some((code, order));
                    self.best_count = 1;
                }
                Some(Ordering::Equal) => self.best_count += 1,
                Some(Ordering::Greater) => {}
            }
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("a non-singleton cell exists");
        for &v in &cells[target] {
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.run(next);
        }
    }
}

/// Canonical labelling of a [`SmallGraph`]; no size check beyond the type's own.
pub fn canonicalize_small(g: &SmallGraph) -> Canonical {
    let collapsed = collapse_twins(g);
    let m = collapsed.labels.len();
    let mut by_label: Vec<usize> = (0..m).collect();
    by_label.sort_by_key(|&v| collapsed.labels[v]);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in by_label {
        match cells.last_mut() {
            Some(cell) if collapsed.labels[cell[0]] == collapsed.labels[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut search = Search { g: &collapsed, best: None, best_count: 0 };
    search.run(cells);
    let (code, class_order) = search.best.expect("search reaches at least one leaf");
    let order = class_order.iter().flat_map(|&c| collapsed.members[c].iter().copied()).collect();
    let twin_symmetry = collapsed
        .members
        .iter()
        .map(|m| factorial_u128(m.len()))
        .fold(1u128, |a, b| a.saturating_mul(b));
    Canonical {
        form: CanonicalForm(code),
        order,
        automorphisms: search.best_count.saturating_mul(twin_symmetry),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random_bounded_degree_coloured;

    /// Colour-preserving isomorphism by exhaustive permutation search.
    fn brute_isomorphic(a: &ColouredGraph, b: &ColouredGraph) -> bool {
        brute_isomorphisms(a, b) > 0
    }

    fn brute_isomorphisms(a: &ColouredGraph, b: &ColouredGraph) -> u64 {
        if a.n() != b.n() || a.edge_count() != b.edge_count() {
            return 0;
        }
        let n = a.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0;
        permute(&mut perm, 0, &mut |p| {
            let ok = (0..n).all(|v| a.colour(v) == b.colour(p[v]))
                && a.edges().iter().all(|&(x, y)| b.has_edge(p[x], p[y]));
            if ok {
                count += 1;
            }
        });
        count
    }

    fn permute(perm: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize])) {
        if i == perm.len() {
            f(perm);
            return;
        }
        for j in i..perm.len() {
            perm.swap(i, j);
            permute(perm, i + 1, f);
            perm.swap(i, j);
        }
    }

    fn path121() -> ColouredGraph {
        ColouredGraph::new(vec![1, 2, 1], [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn relabelled_paths_match() {
        let a = path121();
        let b = ColouredGraph::new(vec![2, 1, 1], [(0, 1), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn distinguishes_edges_and_colours() {
        let edge = ColouredGraph::new(vec![1, 2], [(0, 1)]).unwrap();
        let apart = ColouredGraph::new(vec![1, 2], []).unwrap();
        assert_ne!(canonical_form(&edge).unwrap(), canonical_form(&apart).unwrap());
        let one = ColouredGraph::new(vec![1], []).unwrap();
        let two = ColouredGraph::new(vec![2], []).unwrap();
        assert_ne!(canonical_form(&one).unwrap(), canonical_form(&two).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let g = ColouredGraph::monochrome(crate::graph::Graph::empty(11));
        assert_eq!(
            canonical_form_with_cap(&g, 10),
            Err(Error::PatternTooLarge { size: 11, cap: 10 })
        );
        assert!(canonical_form_with_cap(&g, 11).is_ok());
    }

    #[test]
    fn automorphism_counts() {
        let star = ColouredGraph::monochrome(crate::graph::Graph::star(3));
        assert_eq!(canonicalize(&star).unwrap().automorphisms, 6);
        let c6 = ColouredGraph::monochrome(crate::graph::Graph::cycle(6));
        assert_eq!(canonicalize(&c6).unwrap().automorphisms, 12);
        let k4 = ColouredGraph::monochrome(crate::graph::Graph::complete(4));
        assert_eq!(canonicalize(&k4).unwrap().automorphisms, 24);
        assert_eq!(canonicalize(&path121()).unwrap().automorphisms, 2);
        let empty = ColouredGraph::new(vec![], []).unwrap();
        assert_eq!(canonicalize(&empty).unwrap().automorphisms, 1);
    }

    /// All coloured graphs on up to `n` vertices with colours from `1..=q`.
    fn all_graphs(n: usize, q: u32) -> Vec<ColouredGraph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut out = Vec::new();
        let colourings = (q as usize).pow(n as u32);
        for c in 0..colourings {
            let mut x = c;
            let colours: Vec<u32> = (0..n)
                .map(|_| {
                    let col = (x % q as usize) as u32 + 1;
                    x /= q as usize;
                    col
                })
                .collect();
            for mask in 0..1u32 << pairs.len() {
                let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
                out.push(ColouredGraph::new(colours.clone(), edges).unwrap());
            }
        }
        out
    }

    #[test]
    fn congruence_exhaustive_small() {
        // every pair of 4-vertex 2-coloured graphs and every pair of 5-vertex 1-coloured graphs
        for (n, q) in [(3, 3), (4, 2), (5, 1)] {
            let graphs = all_graphs(n, q);
            let forms: Vec<_> = graphs.iter().map(|g| canonicalize(g).unwrap()).collect();
            for i in 0..graphs.len() {
                assert_eq!(forms[i].automorphisms, brute_isomorphisms(&graphs[i], &graphs[i]) as u128);
                assert_eq!(graphs[i].relabel(&forms[i].order), canonical_representative(&graphs[i]).unwrap());
                for j in i + 1..graphs.len() {
                    let same = forms[i].form == forms[j].form;
                    assert_eq!(same, brute_isomorphic(&graphs[i], &graphs[j]), "{:?} vs {:?}", graphs[i], graphs[j]);
                }
            }
        }
    }

    #[test]
    fn congruence_six_vertices_sampled() {
        // pairs of random relabellings and random bounded-degree graphs on 6 vertices
        let graphs: Vec<_> = (0..120).map(|s| random_bounded_degree_coloured(6, 2, 3, s)).collect();
        let forms: Vec<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                assert_eq!(forms[i] == forms[j], brute_isomorphic(&graphs[i], &graphs[j]));
            }
        }
    }

    #[test]
    fn invariant_under_relabelling() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for seed in 0..40 {
            let g = random_bounded_degree_coloured(14, 3, 3, seed);
            let mut order: Vec<usize> = (0..g.n()).collect();
            order.shuffle(&mut rng);
            let h = g.relabel(&order);
            let (cg, ch) = (canonicalize(&g).unwrap(), canonicalize(&h).unwrap());
            assert_eq!(cg.form, ch.form);
            assert_eq!(cg.automorphisms, ch.automorphisms);
            assert_eq!(g.relabel(&cg.order), h.relabel(&ch.order));
        }
    }
}
