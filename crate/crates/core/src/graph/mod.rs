//! Graph data model shared by every counter.
//!
//! Vertices are dense 0-based indices in memory; the text formats in [`io`]
//! use 1-based names.

mod generate;
mod io;

pub use generate::{
    random_bipartite_with_budget, random_bounded_degree_bipartite, random_bounded_degree_coloured,
    random_coloured_with_budget, random_graph,
};
pub use io::{parse_bipartite, parse_coloured, serialize_bipartite, serialize_coloured};

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Maximum vertex degree, `0` for edgeless graphs.
pub trait MaxDegree {
    fn max_degree(&self) -> usize;
}

/// Bipartite graph `(U, V, E)` with `E ⊆ U × V`.
///
/// Left vertices are `0..n_left`, right vertices `0..n_right`. When a single
/// index space is needed (sampling, colouring) left vertex `u` is `u` and
/// right vertex `v` is `n_left + v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    n_left: usize,
    n_right: usize,
    edges: Vec<(usize, usize)>,
    left_adj: Vec<Vec<usize>>,
    right_adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new<I>(n_left: usize, n_right: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            if u >= n_left {
                return Err(Error::VertexOutOfRange { vertex: u, bound: n_left });
            }
            if v >= n_right {
                return Err(Error::VertexOutOfRange { vertex: v, bound: n_right });
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge((u, v)));
            }
        }
        let edges: Vec<_> = seen.into_iter().collect();
        let mut left_adj = vec![Vec::new(); n_left];
        let mut right_adj = vec![Vec::new(); n_right];
        for &(u, v) in &edges {
            left_adj[u].push(v);
            right_adj[v].push(u);
        }
        for list in right_adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(Self { n_left, n_right, edges, left_adj, right_adj })
    }

    pub fn empty(n_left: usize, n_right: usize) -> Self {
        Self::new(n_left, n_right, std::iter::empty()).expect("edgeless graph is valid")
    }

    pub fn complete(n_left: usize, n_right: usize) -> Self {
        let edges = (0..n_left).flat_map(|u| (0..n_right).map(move |v| (u, v)));
        Self::new(n_left, n_right, edges).expect("complete bipartite graph is valid")
    }

    pub fn n_left(&self) -> usize {
        self.n_left
    }

    pub fn n_right(&self) -> usize {
        self.n_right
    }

    /// Total number of vertices `|U| + |V|`.
    pub fn n(&self) -> usize {
        self.n_left + self.n_right
    }

    /// Edges `(u, v)` in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn left_neighbours(&self, u: usize) -> &[usize] {
        &self.left_adj[u]
    }

    pub fn right_neighbours(&self, v: usize) -> &[usize] {
        &self.right_adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n_left && self.left_adj[u].binary_search(&v).is_ok()
    }

    /// Adjacency in the combined index space `0..n()`.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        a < self.n_left && b >= self.n_left && self.has_edge(a, b - self.n_left)
    }

    /// `Γ(X)` for a set of left vertices.
    pub fn left_neighbourhood(&self, left: &[usize]) -> BTreeSet<usize> {
        left.iter().flat_map(|&u| self.left_adj[u].iter().copied()).collect()
    }

    /// Left vertices keep their indices; `other`'s left vertices follow ours,
    /// and likewise on the right.
    pub fn disjoint_union(&self, other: &BipartiteGraph) -> BipartiteGraph {
        let edges = self.edges.iter().copied().chain(
            other.edges.iter().map(|&(u, v)| (u + self.n_left, v + self.n_right)),
        );
        BipartiteGraph::new(self.n_left + other.n_left, self.n_right + other.n_right, edges)
            .expect("disjoint union of valid graphs is valid")
    }

    /// `copies` disjoint copies of `self`.
    pub fn repeat(&self, copies: usize) -> BipartiteGraph {
        let mut edges = Vec::with_capacity(self.edges.len() * copies);
        for c in 0..copies {
            edges.extend(self.edges.iter().map(|&(u, v)| (u + c * self.n_left, v + c * self.n_right)));
        }
        BipartiteGraph::new(self.n_left * copies, self.n_right * copies, edges)
            .expect("disjoint copies of a valid graph are valid")
    }

    /// Forgets the bipartition.
    pub fn to_graph(&self) -> Graph {
        let edges = self.edges.iter().map(|&(u, v)| (u, self.n_left + v));
        Graph::new(self.n(), edges).expect("bipartite edges are simple")
    }
}

impl MaxDegree for BipartiteGraph {
    fn max_degree(&self) -> usize {
        self.left_adj.iter().chain(self.right_adj.iter()).map(Vec::len).max().unwrap_or(0)
    }
}

/// Simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, bound: n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(key));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(Self { adj, edge_count: seen.len() })
    }

    pub fn empty(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Self::new(n, edges).expect("complete graph is valid")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path is valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is valid")
    }

    /// Star with centre `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let list = &self.adj[a];
        if list.len() <= 8 {
            list.contains(&b)
        } else {
            list.binary_search(&b).is_ok()
        }
    }

    /// Edges `(a, b)` with `a < b`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (a, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&b| b > a).map(|&b| (a, b)));
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, bound: n });
            }
            if pos[v] != usize::MAX {
                return Err(Error::InvalidParameter(format!("vertex {v} listed twice")));
            }
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = pos[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), edges)
    }
}

impl MaxDegree for Graph {
    fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Graph with a total colour map into positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColouredGraph {
    graph: Graph,
    colours: Vec<u32>,
}

impl ColouredGraph {
    pub fn new<I>(colours: Vec<u32>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let graph = Graph::new(colours.len(), edges)?;
        Self::from_graph(graph, colours)
    }

    pub fn from_graph(graph: Graph, colours: Vec<u32>) -> Result<Self> {
        if colours.len() != graph.n() {
            return Err(Error::InvalidParameter(format!(
                "{} colours for {} vertices",
                colours.len(),
                graph.n()
            )));
        }
        if let Some((vertex, &colour)) = colours.iter().enumerate().find(|(_, &c)| c == 0) {
            return Err(Error::InvalidColour { vertex, colour });
        }
        Ok(Self { graph, colours })
    }

    /// Every vertex gets colour 1.
    pub fn monochrome(graph: Graph) -> Self {
        let colours = vec![1; graph.n()];
        Self { graph, colours }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> u32 {
        self.colours[v]
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        self.graph.neighbours(v)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.graph.has_edge(a, b)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }

    /// Largest colour in use, `0` for the empty graph.
    pub fn max_colour(&self) -> u32 {
        self.colours.iter().copied().max().unwrap_or(0)
    }

    pub fn colour_set(&self) -> BTreeSet<u32> {
        self.colours.iter().copied().collect()
    }

    /// Number of vertices of colour `c`.
    pub fn colour_count(&self, c: u32) -> usize {
        self.colours.iter().filter(|&&x| x == c).count()
    }

    /// Unordered colour pairs `(min, max)` spanned by at least one edge.
    pub fn edge_colour_pairs(&self) -> BTreeSet<(u32, u32)> {
        self.edges()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (self.colours[a], self.colours[b]);
                (x.min(y), x.max(y))
            })
            .collect()
    }

    /// `𝒢[X]` with the restricted colouring, relabelled in the order of `vertices`.
    pub fn induced(&self, vertices: &[usize]) -> Result<ColouredGraph> {
        let graph = self.graph.induced(vertices)?;
        let colours = vertices.iter().map(|&v| self.colours[v]).collect();
        Ok(ColouredGraph { graph, colours })
    }

    /// Vertex `i` of the result is vertex `order[i]` of `self`.
    pub fn relabel(&self, order: &[usize]) -> ColouredGraph {
        assert_eq!(order.len(), self.n(), "relabelling must be a permutation");
        self.induced(order).expect("permutation is a valid vertex list")
    }

    pub fn disjoint_union(&self, other: &ColouredGraph) -> ColouredGraph {
        let shift = self.n();
        let edges = self
            .edges()
            .into_iter()
            .chain(other.edges().into_iter().map(|(a, b)| (a + shift, b + shift)));
        let colours = self.colours.iter().chain(other.colours.iter()).copied().collect();
        ColouredGraph::new(colours, edges).expect("disjoint union of valid graphs is valid")
    }

    /// Connected components as induced coloured subgraphs.
    pub fn components(&self) -> Vec<ColouredGraph> {
        self.graph
            .components()
            .into_iter()
            .map(|c| self.induced(&c).expect("component vertices are in range"))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }
}

impl MaxDegree for ColouredGraph {
    fn max_degree(&self) -> usize {
        self.graph.max_degree()
    }
}

/// The 2-colouring of a bipartite graph: `U` gets colour 1, `V` colour 2.
///
/// Left vertex `u` becomes vertex `u`, right vertex `v` becomes `|U| + v`.
pub fn to_coloured(g: &BipartiteGraph) -> ColouredGraph {
    let colours = std::iter::repeat_n(1, g.n_left()).chain(std::iter::repeat_n(2, g.n_right())).collect();
    let graph = g.to_graph();
    ColouredGraph { graph, colours }
}

/// Same vertex numbering as [`to_coloured`] but every vertex has colour 1.
pub fn to_monochrome(g: &BipartiteGraph) -> ColouredGraph {
    ColouredGraph::monochrome(g.to_graph())
}

/// `𝒢[X] = (G[X], c|_X)`; vertices keep the relative order of `vertices`.
pub fn induced_coloured_subgraph(h: &ColouredGraph, vertices: &[usize]) -> Result<ColouredGraph> {
    h.induced(vertices)
}
