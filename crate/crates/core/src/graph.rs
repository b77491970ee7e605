//! Simple undirected graphs on `{1, ..., n}` and their cycle structure.
//!
//! The two cycle conditions are decided on chordless odd cycles only: a chord
//! of an odd cycle splits it into two shorter cycles, one of them odd, whose
//! vertex set lies inside the original. Disjointness and non-adjacency of a
//! pair of odd cycles are inherited by such contained cycles.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::{Error, Result};

/// An edge `{i, j}` stored as `(min, max)`, 1-indexed.
pub type Edge = (usize, usize);

pub fn edge(i: usize, j: usize) -> Edge {
    (i.min(j), i.max(j))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
            }
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{i},{j}}} is outside the vertex range 1..={n}"
                )));
            }
            if !set.insert(edge(i, j)) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{i},{j}}}")));
            }
        }
        Ok(Graph { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        Graph { n, edges }
    }

    /// The cycle through `vertices` in order, on `n` vertices.
    pub fn cycle_on(n: usize, vertices: &[usize]) -> Result<Self> {
        let k = vertices.len();
        Graph::new(n, (0..k).map(|i| edge(vertices[i], vertices[(i + 1) % k])))
    }

    /// The path through `vertices` in order, on `n` vertices.
    pub fn path_on(n: usize, vertices: &[usize]) -> Result<Self> {
        Graph::new(n, vertices.windows(2).map(|w| edge(w[0], w[1])))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&edge(i, j))
    }

    /// Sorted neighbor lists, indexed by vertex (index 0 unused).
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let mut m = vec![vec![false; self.n + 1]; self.n + 1];
        for &(i, j) in &self.edges {
            m[i][j] = true;
            m[j][i] = true;
        }
        m
    }

    /// Vertices touched by at least one edge.
    pub fn support(&self) -> BTreeSet<usize> {
        self.edges.iter().flat_map(|&(i, j)| [i, j]).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(i, j)| i == v || j == v).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([1]);
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// A proper 2-coloring, or `None` when the graph has an odd cycle. Each
    /// component's smallest vertex goes to the first side.
    pub fn bipartition(&self) -> Option<(BTreeSet<usize>, BTreeSet<usize>)> {
        let adj = self.adjacency_lists();
        let mut color: Vec<Option<bool>> = vec![None; self.n + 1];
        for start in 1..=self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &w in &adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut u, mut v) = (BTreeSet::new(), BTreeSet::new());
        for x in 1..=self.n {
            if color[x] == Some(false) {
                u.insert(x);
            } else {
                v.insert(x);
            }
        }
        Some((u, v))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Every chordless cycle, once each, in canonical form.
    pub fn induced_cycles(&self) -> Vec<Cycle> {
        let adj = self.adjacency_lists();
        let matrix = self.adjacency_matrix();
        let mut out = Vec::new();
        for s in 1..=self.n {
            let mut path = vec![s];
            self.extend_chordless(&adj, &matrix, &mut path, &mut out);
        }
        out.sort();
        out
    }

    fn extend_chordless(
        &self,
        adj: &[Vec<usize>],
        matrix: &[Vec<bool>],
        path: &mut Vec<usize>,
        out: &mut Vec<Cycle>,
    ) {
        let s = path[0];
        let last = *path.last().unwrap();
        for &w in &adj[last] {
            if w <= s || path.contains(&w) {
                continue;
            }
            let inner = if path.len() > 2 { &path[1..path.len() - 1] } else { &[][..] };
            if inner.iter().any(|&u| matrix[u][w]) {
                continue;
            }
            if path.len() >= 2 && matrix[s][w] {
                if path[1] < w {
                    let mut vs = path.clone();
                    vs.push(w);
                    out.push(Cycle { vertices: vs });
                }
                continue;
            }
            path.push(w);
            self.extend_chordless(adj, matrix, path, out);
            path.pop();
        }
    }

    /// Chordless cycles of odd length, in canonical form.
    pub fn induced_odd_cycles(&self) -> Vec<Cycle> {
        self.induced_cycles().into_iter().filter(Cycle::is_odd).collect()
    }

    /// Any two vertex-disjoint odd cycles are joined by an edge.
    pub fn odd_cycle_condition(&self) -> Result<bool> {
        self.require_connected()?;
        let cycles = self.induced_odd_cycles();
        let matrix = self.adjacency_matrix();
        for (a, c1) in cycles.iter().enumerate() {
            for c2 in &cycles[a + 1..] {
                if !c1.is_disjoint(c2) {
                    continue;
                }
                let joined = c1
                    .vertices
                    .iter()
                    .any(|&u| c2.vertices.iter().any(|&v| matrix[u][v]));
                if !joined {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Any two odd cycles share a vertex.
    pub fn common_vertex_condition(&self) -> Result<bool> {
        self.require_connected()?;
        let cycles = self.induced_odd_cycles();
        Ok(cycles
            .iter()
            .enumerate()
            .all(|(a, c1)| cycles[a + 1..].iter().all(|c2| !c1.is_disjoint(c2))))
    }

    fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Biconnected components by the lowpoint DFS. A bridge is its own
    /// single-edge component; isolated vertices belong to none.
    pub fn two_connected_components(&self) -> Vec<Graph> {
        let adj = self.adjacency_lists();
        let mut state = BlockState {
            disc: vec![0; self.n + 1],
            low: vec![0; self.n + 1],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
        };
        for root in 1..=self.n {
            if state.disc[root] == 0 && !adj[root].is_empty() {
                state.visit(&adj, root, 0);
            }
        }
        let mut blocks: Vec<Graph> = state
            .blocks
            .into_iter()
            .map(|edges| Graph {
                n: self.n,
                edges: edges.into_iter().collect(),
            })
            .collect();
        blocks.sort_by(|a, b| a.edges.iter().next().cmp(&b.edges.iter().next()));
        blocks
    }

    /// The first even cycle found by depth-first search from the smallest
    /// vertex, if any. Not necessarily chordless.
    pub fn find_even_cycle(&self) -> Option<Cycle> {
        let adj = self.adjacency_lists();
        for s in 1..=self.n {
            let mut path = vec![s];
            let mut on_path = vec![false; self.n + 1];
            on_path[s] = true;
            if let Some(c) = even_cycle_from(&adj, &mut path, &mut on_path) {
                return Some(c);
            }
        }
        None
    }

    pub fn is_subgraph_of(&self, g: &Graph) -> Result<bool> {
        if self.n != g.n {
            return Err(Error::VertexCountMismatch(self.n, g.n));
        }
        Ok(self.edges.is_subset(&g.edges))
    }
}

/// Cycles whose smallest vertex is `path[0]`, other vertices larger.
fn even_cycle_from(adj: &[Vec<usize>], path: &mut Vec<usize>, on_path: &mut [bool]) -> Option<Cycle> {
    let s = path[0];
    let last = *path.last().unwrap();
    for &w in &adj[last] {
        if w == s && path.len() >= 4 && path.len().is_multiple_of(2) {
            return Some(Cycle::new(path.clone()));
        }
        if w <= s || on_path[w] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        if let Some(c) = even_cycle_from(adj, path, on_path) {
            return Some(c);
        }
        on_path[w] = false;
        path.pop();
    }
    None
}

struct BlockState {
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<Edge>,
    blocks: Vec<Vec<Edge>>,
}

impl BlockState {
    fn visit(&mut self, adj: &[Vec<usize>], v: usize, parent: usize) {
        self.time += 1;
        self.disc[v] = self.time;
        self.low[v] = self.time;
        for &w in &adj[v] {
            if w == parent {
                continue;
            }
            if self.disc[w] == 0 {
                self.stack.push(edge(v, w));
                self.visit(adj, w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push(e);
                        if e == edge(v, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if self.disc[w] < self.disc[v] {
                self.stack.push(edge(v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Edge union of graphs on a common vertex set.
pub fn graph_sum(gs: &[Graph]) -> Result<Graph> {
    let first = gs.first().ok_or_else(|| Error::InvalidGraph("empty graph list".into()))?;
    let mut edges = BTreeSet::new();
    for g in gs {
        if g.n != first.n {
            return Err(Error::VertexCountMismatch(first.n, g.n));
        }
        edges.extend(g.edges.iter().copied());
    }
    Ok(Graph { n: first.n, edges })
}

/// One representative of every isomorphism class of connected graphs on
/// `n <= 7` vertices, ordered by edge count. Each representative is the
/// relabeling whose edge bitmask is smallest.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "isomorphism sweep supports 1..=7 vertices");
    let pairs: Vec<Edge> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let mut index = vec![vec![0usize; n + 1]; n + 1];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        index[i][j] = b;
        index[j][i] = b;
    }
    let perms: Vec<Vec<usize>> = (1..=n).permutations(n).collect();
    let relabel = |mask: u32, perm: &[usize]| -> u32 {
        pairs
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .fold(0, |acc, (_, &(i, j))| acc | 1 << index[perm[i - 1]][perm[j - 1]])
    };
    let from_mask = |mask: u32| Graph {
        n,
        edges: pairs
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect(),
    };
    let canonical: BTreeSet<(u32, u32)> = (0..1u32 << pairs.len())
        .into_par_iter()
        .filter(|&mask| from_mask(mask).is_connected())
        .map(|mask| perms.iter().map(|p| relabel(mask, p)).min().unwrap())
        .collect::<Vec<u32>>()
        .into_iter()
        .map(|m| (m.count_ones(), m))
        .collect();
    canonical.into_iter().map(|(_, m)| from_mask(m)).collect()
}

/// A cycle `v_0, ..., v_{k-1}` of distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Builds a cycle in canonical form: smallest vertex first, then its
    /// smaller neighbor.
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(vertices.len() >= 3, "a cycle needs at least three vertices");
        let k = vertices.len();
        let start = (0..k).min_by_key(|&i| vertices[i]).unwrap();
        let mut fwd: Vec<usize> = (0..k).map(|i| vertices[(start + i) % k]).collect();
        if fwd[1] > fwd[k - 1] {
            fwd[1..].reverse();
        }
        Cycle { vertices: fwd }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    /// Edges `{v_i, v_{i+1}}` in cycle order.
    pub fn edges(&self) -> Vec<Edge> {
        let k = self.len();
        (0..k)
            .map(|i| edge(self.vertices[i], self.vertices[(i + 1) % k]))
            .collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn is_disjoint(&self, other: &Cycle) -> bool {
        !self.vertices.iter().any(|v| other.contains(*v))
    }

    /// The same cycle traversed from `v`, keeping canonical orientation.
    pub fn starting_at(&self, v: usize) -> Option<Vec<usize>> {
        let pos = self.vertices.iter().position(|&x| x == v)?;
        let k = self.len();
        Some((0..k).map(|i| self.vertices[(pos + i) % k]).collect())
    }

    pub fn is_chordless_in(&self, g: &Graph) -> bool {
        let k = self.len();
        (0..k).all(|i| {
            (i + 2..k).all(|j| (i == 0 && j == k - 1) || !g.has_edge(self.vertices[i], self.vertices[j]))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    fn bridged_triangles() -> Graph {
        g(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)])
    }

    fn triangles_via_path() -> Graph {
        g(7, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 7), (7, 4)])
    }

    fn two_pentagons() -> Graph {
        let mut edges: Vec<Edge> = Graph::cycle_on(9, &[1, 2, 3, 4, 5]).unwrap().edges().iter().copied().collect();
        edges.extend(Graph::cycle_on(9, &[5, 6, 7, 8, 9]).unwrap().edges().iter().copied());
        Graph::new(9, edges).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(1, 4)]).is_err());
        assert!(Graph::new(3, [(0, 1)]).is_err());
        assert!(Graph::new(3, [(1, 2), (2, 1)]).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(g(2, &[(1, 2)]).is_connected());
        let disjoint = g(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]);
        assert!(!disjoint.is_connected());
        assert!(bridged_triangles().is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn bipartitions() {
        let c4 = Graph::cycle_on(4, &[1, 2, 3, 4]).unwrap();
        let (u, v) = c4.bipartition().unwrap();
        assert_eq!(u, BTreeSet::from([1, 3]));
        assert_eq!(v, BTreeSet::from([2, 4]));
        assert_eq!(Graph::complete(3).bipartition(), None);
        let (u, v) = Graph::path_on(3, &[1, 2, 3]).unwrap().bipartition().unwrap();
        assert_eq!(u, BTreeSet::from([1, 3]));
        assert_eq!(v, BTreeSet::from([2]));
    }

    #[test]
    fn odd_cycle_enumeration() {
        let c5 = Graph::cycle_on(5, &[1, 2, 3, 4, 5]).unwrap();
        let cycles = c5.induced_odd_cycles();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices(), &[1, 2, 3, 4, 5]);

        let k4 = Graph::complete(4).induced_odd_cycles();
        assert_eq!(k4.len(), 4);
        assert!(k4.iter().all(|c| c.len() == 3));

        let c6 = Graph::cycle_on(6, &[1, 2, 3, 4, 5, 6]).unwrap();
        assert!(c6.induced_odd_cycles().is_empty());
        assert_eq!(c6.induced_cycles().len(), 1);
    }

    #[test]
    fn chorded_cycle_is_not_induced() {
        // 5-cycle with chord {1,3}: induced cycles are the triangle 1-2-3
        // and the 4-cycle 1-3-4-5.
        let mut gr = Graph::cycle_on(5, &[1, 2, 3, 4, 5]).unwrap();
        gr.edges.insert((1, 3));
        let cycles = gr.induced_cycles();
        assert_eq!(cycles.len(), 2);
        assert_eq!(gr.induced_odd_cycles()[0].vertices(), &[1, 2, 3]);
    }

    #[test]
    fn odd_cycle_condition_examples() {
        assert!(Graph::cycle_on(6, &[1, 2, 3, 4, 5, 6]).unwrap().odd_cycle_condition().unwrap());
        assert!(bridged_triangles().odd_cycle_condition().unwrap());
        assert!(!triangles_via_path().odd_cycle_condition().unwrap());
        let disjoint = g(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]);
        assert_eq!(disjoint.odd_cycle_condition(), Err(Error::Disconnected));
    }

    #[test]
    fn common_vertex_condition_examples() {
        assert!(Graph::cycle_on(4, &[1, 2, 3, 4]).unwrap().common_vertex_condition().unwrap());
        assert!(two_pentagons().common_vertex_condition().unwrap());
        assert!(!bridged_triangles().common_vertex_condition().unwrap());
    }

    #[test]
    fn blocks() {
        let tri = Graph::complete(3);
        assert_eq!(tri.two_connected_components(), vec![tri.clone()]);

        let path = Graph::path_on(3, &[1, 2, 3]).unwrap();
        let blocks = path.two_connected_components();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.edge_count() == 1));

        let bowtie = g(5, &[(1, 2), (2, 5), (1, 5), (3, 4), (4, 5), (3, 5)]);
        let blocks = bowtie.two_connected_components();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.edge_count() == 3));

        let blocks = bridged_triangles().two_connected_components();
        assert_eq!(blocks.iter().map(Graph::edge_count).collect::<Vec<_>>(), vec![3, 1, 3]);
    }

    #[test]
    fn sums_and_subgraphs() {
        let gr = bridged_triangles();
        assert_eq!(graph_sum(&[gr.clone(), gr.clone()]).unwrap(), gr);
        assert_eq!(graph_sum(&[gr.clone(), Graph::empty(6)]).unwrap(), gr);
        let m1 = g(6, &[(1, 2), (3, 4), (5, 6)]);
        let m2 = g(6, &[(1, 6), (2, 3), (4, 5)]);
        assert_eq!(
            graph_sum(&[m1.clone(), m2.clone()]).unwrap(),
            Graph::cycle_on(6, &[1, 2, 3, 4, 5, 6]).unwrap()
        );
        assert!(gr.is_subgraph_of(&gr).unwrap());
        assert!(g(3, &[(1, 2)]).is_subgraph_of(&Graph::complete(3)).unwrap());
        assert!(m1.is_subgraph_of(&gr).unwrap());
        assert!(!m2.is_subgraph_of(&gr).unwrap());
        assert!(graph_sum(&[gr.clone(), Graph::empty(5)]).is_err());
        assert!(gr.is_subgraph_of(&Graph::empty(5)).is_err());
    }

    #[test]
    fn even_cycles() {
        assert!(Graph::complete(3).find_even_cycle().is_none());
        assert!(two_pentagons().find_even_cycle().is_none());
        let c = Graph::complete(4).find_even_cycle().unwrap();
        assert_eq!(c.len(), 4);
        // A theta graph made of two triangles sharing an edge holds a 4-cycle.
        let theta = g(4, &[(1, 2), (2, 3), (1, 3), (2, 4), (3, 4)]);
        assert_eq!(theta.find_even_cycle().unwrap().len(), 4);
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert!(connected_graphs(5).iter().all(Graph::is_connected));
    }

    #[test]
    fn canonical_cycles() {
        let c = Cycle::new(vec![4, 2, 5, 1, 3]);
        assert_eq!(c.vertices(), &[1, 3, 4, 2, 5]);
        assert_eq!(c.starting_at(4).unwrap(), vec![4, 2, 5, 1, 3]);
        assert_eq!(Cycle::new(vec![3, 2, 1]).vertices(), &[1, 2, 3]);
    }
}
