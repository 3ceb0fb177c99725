//! Coloured homomorphism counting in bounded-degree hosts.
//!
//! A connected pattern is placed vertex by vertex along a traversal: the
//! first vertex ranges over the host vertices of its colour, every later
//! vertex over the host neighbours of its traversal parent's image. Partial
//! results are memoized on the images of the placed vertices that still have
//! unplaced neighbours, since nothing else influences the remaining count.
//! Disconnected patterns are the product of their components.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use rustc_hash::FxHashMap;

use crate::canon::{canonicalize_small, CanonicalForm, SmallGraph, DEFAULT_PATTERN_CAP};
use crate::error::{Error, Result};
use crate::graph::ColouredGraph;
use crate::Count;

/// Vertex order of a connected pattern in which every vertex after the first
/// is adjacent to an earlier one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Traversal {
    pub order: Vec<usize>,
    /// `parent[i]` is the position in `order` of an earlier neighbour of `order[i]`.
    pub parent: Vec<Option<usize>>,
}

impl Traversal {
    /// Checks the traversal property against `h`.
    pub fn is_valid_for(&self, h: &ColouredGraph) -> bool {
        let n = h.n();
        let mut seen = vec![false; n];
        for (i, &v) in self.order.iter().enumerate() {
            if v >= n || seen[v] {
                return false;
            }
            if i > 0 && !self.order[..i].iter().any(|&w| h.has_edge(v, w)) {
                return false;
            }
            seen[v] = true;
        }
        seen.iter().all(|&s| s)
    }
}

/// Breadth-first traversal from vertex 0.
pub fn build_traversal(h: &ColouredGraph) -> Result<Traversal> {
    build_traversal_from(h, 0)
}

pub fn build_traversal_from(h: &ColouredGraph, start: usize) -> Result<Traversal> {
    if h.n() == 0 {
        return Err(Error::InvalidParameter("traversal of an empty pattern".into()));
    }
    if start >= h.n() {
        return Err(Error::VertexOutOfRange { vertex: start, bound: h.n() });
    }
    let small = SmallGraph::from_coloured(h)?;
    let t = bfs(&small, start);
    if t.order.len() != h.n() {
        return Err(Error::NotConnected);
    }
    Ok(t)
}

fn bfs(g: &SmallGraph, start: usize) -> Traversal {
    let mut order = vec![start];
    let mut parent = vec![None];
    let mut pos = vec![usize::MAX; g.n()];
    pos[start] = 0;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        let mut rest = g.adj[v];
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if pos[w] == usize::MAX {
                pos[w] = order.len();
                order.push(w);
                parent.push(Some(head));
            }
        }
        head += 1;
    }
    Traversal { order, parent }
}

/// A traversal compiled into per-position lookups.
struct Plan {
    colours: Vec<u32>,
    parent: Vec<usize>,
    /// Earlier positions adjacent to position `i`, other than the parent.
    back: Vec<Vec<usize>>,
    /// Earlier positions that still have a neighbour at position `i` or later.
    active: Vec<Vec<usize>>,
}

impl Plan {
    fn new(g: &SmallGraph, t: &Traversal) -> Self {
        let k = t.order.len();
        let mut pos = vec![0usize; g.n()];
        for (i, &v) in t.order.iter().enumerate() {
            pos[v] = i;
        }
        let mut back = vec![Vec::new(); k];
        let mut last_neighbour = vec![0usize; k];
        for (i, &v) in t.order.iter().enumerate() {
            let mut rest = g.adj[v];
            while rest != 0 {
                let w = pos[rest.trailing_zeros() as usize];
                rest &= rest - 1;
                last_neighbour[i] = last_neighbour[i].max(w);
                if w < i && Some(w) != t.parent[i] {
                    back[i].push(w);
                }
            }
        }
        let active = (0..k).map(|i| (0..i).filter(|&j| last_neighbour[j] >= i).collect()).collect();
        Plan {
            colours: t.order.iter().map(|&v| g.colours[v]).collect(),
            parent: t.parent.iter().map(|p| p.unwrap_or(0)).collect(),
            back,
            active,
        }
    }

    fn width(&self) -> usize {
        self.active.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Host-side state for repeated homomorphism counts into one coloured graph.
pub struct HomCounter {
    host: ColouredGraph,
    by_colour: HashMap<u32, Vec<usize>>,
    cache: Mutex<FxHashMap<CanonicalForm, u128>>,
    prefixes: AtomicU64,
    cap: usize,
}

impl HomCounter {
    pub fn new(host: &ColouredGraph) -> Self {
        let mut by_colour: HashMap<u32, Vec<usize>> = HashMap::new();
        for v in 0..host.n() {
            by_colour.entry(host.colour(v)).or_default().push(v);
        }
        Self { host: host.clone(), by_colour, cache: Mutex::default(), prefixes: AtomicU64::new(0), cap: DEFAULT_PATTERN_CAP }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn host(&self) -> &ColouredGraph {
        &self.host
    }

    /// Traversal prefixes explored so far, over all uncached components.
    pub fn prefixes(&self) -> u64 {
        self.prefixes.load(Ordering::Relaxed)
    }

    /// `Hom(H, G)`.
    pub fn count(&self, h: &ColouredGraph) -> Result<Count> {
        if h.n() > self.cap {
            return Err(Error::PatternTooLarge { size: h.n(), cap: self.cap });
        }
        self.count_small(&SmallGraph::from_coloured(h)?)
    }

    pub fn count_small(&self, h: &SmallGraph) -> Result<Count> {
        if h.n() > self.cap {
            return Err(Error::PatternTooLarge { size: h.n(), cap: self.cap });
        }
        let mut total = Count::from(1u32);
        for mask in h.component_masks() {
            let c = self.count_connected(&h.induced_mask(mask))?;
            if c == 0 {
                return Ok(Count::from(0u32));
            }
            total *= c;
        }
        Ok(total)
    }

    fn count_connected(&self, h: &SmallGraph) -> Result<u128> {
        let canon = canonicalize_small(h);
        if let Some(&c) = self.cache.lock().expect("cache lock").get(&canon.form) {
            return Ok(c);
        }
        let h = h.relabel(&canon.order);
        let value = self.count_uncached(&h)?;
        self.cache.lock().expect("cache lock").insert(canon.form, value);
        Ok(value)
    }

    /// Counts a connected pattern with the narrowest breadth-first traversal.
    fn count_uncached(&self, h: &SmallGraph) -> Result<u128> {
        let plan = (0..h.n())
            .map(|s| Plan::new(h, &bfs(h, s)))
            .min_by_key(Plan::width)
            .expect("pattern is nonempty");
        let roots = match self.by_colour.get(&plan.colours[0]) {
            Some(r) => r,
            None => return Ok(0),
        };
        let mut dfs = Dfs {
            host: &self.host,
            plan: &plan,
            image: vec![0; plan.colours.len()],
            memo: vec![FxHashMap::default(); plan.colours.len()],
            prefixes: 0,
        };
        let mut total: u128 = 0;
        for &r in roots {
            dfs.image[0] = r;
            for m in dfs.memo.iter_mut() {
                m.clear();
            }
            let c = dfs.go(1).ok_or_else(overflow)?;
            total = total.checked_add(c).ok_or_else(overflow)?;
        }
        self.prefixes.fetch_add(dfs.prefixes, Ordering::Relaxed);
        Ok(total)
    }
}

fn overflow() -> Error {
    Error::Internal("homomorphism count exceeds 128 bits".into())
}

struct Dfs<'p> {
    host: &'p ColouredGraph,
    plan: &'p Plan,
    image: Vec<usize>,
    memo: Vec<FxHashMap<Vec<u32>, u128>>,
    prefixes: u64,
}

impl Dfs<'_> {
    /// Number of extensions of the placed prefix `image[..i]`.
    fn go(&mut self, i: usize) -> Option<u128> {
        self.prefixes += 1;
        let k = self.plan.colours.len();
        if i == k {
            return Some(1);
        }
        let key: Vec<u32> = self.plan.active[i].iter().map(|&j| self.image[j] as u32).collect();
        if let Some(&c) = self.memo[i].get(&key) {
            return Some(c);
        }
        let anchor = self.image[self.plan.parent[i]];
        let mut total: u128 = 0;
        for &w in self.host.neighbours(anchor) {
            if self.host.colour(w) != self.plan.colours[i] {
                continue;
            }
            if !self.plan.back[i].iter().all(|&j| self.host.has_edge(self.image[j], w)) {
                continue;
            }
            self.image[i] = w;
            total = total.checked_add(self.go(i + 1)?)?;
        }
        self.memo[i].insert(key, total);
        Some(total)
    }
}

/// `Hom(H, G)` with a throwaway counter.
pub fn count_hom(h: &ColouredGraph, g: &ColouredGraph) -> Result<Count> {
    HomCounter::new(g).count(h)
}
