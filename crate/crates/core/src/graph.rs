//! Immutable simple undirected graphs on dense vertex labels `0..n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// A simple undirected graph with one neighbor bitmask per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

/// Outcome of a regularity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularityInfo {
    pub regular: bool,
    /// Common degree; `None` unless `regular`.
    pub k: Option<usize>,
}

/// A graph together with the original label of each of its vertices.
#[derive(Debug, Clone)]
pub struct Relabeled {
    pub graph: Graph,
    /// `original[new] = old`
    pub original: Vec<usize>,
}

/// Line graph with the edge each of its vertices stands for.
#[derive(Debug, Clone)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edges[i]` is the `(u, v)`, `u < v`, edge of the source graph that vertex `i` represents.
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![VertexSet::empty(n); n], m: 0 }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!("edge {u}-{v} out of range for n = {n}")));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        if self.adj[u].contains(v) {
            return Err(Error::InvalidGraph(format!("duplicate edge {u}-{v}")));
        }
        self.add_edge_unchecked(u, v);
        Ok(())
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.adj[u].contains(v));
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut others = s.clone();
            others.remove(v);
            others.is_subset(&self.adj[v])
        })
    }

    /// `N[X]`: `X` together with every vertex adjacent to it.
    pub fn closed_neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = x.clone();
        for v in x {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// Sum of degrees over `s`.
    pub fn degree_sum(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.degree(v)).sum()
    }

    pub fn regularity(&self) -> Result<RegularityInfo> {
        if self.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        let k = self.degree(0);
        let regular = (1..self.n()).all(|v| self.degree(v) == k);
        Ok(RegularityInfo { regular, k: regular.then_some(k) })
    }

    /// Common degree if the graph is nonempty and regular.
    pub fn regular_degree(&self) -> Option<usize> {
        self.regularity().ok().and_then(|r| r.k)
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::empty(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            let comp = self.reach(s, &self.vertices());
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `root` using only vertices of `within`.
    pub fn reach(&self, root: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::empty(self.n());
        seen.insert(root);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.n());
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(within);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// Whether `G[s]` is connected; the empty set counts as connected.
    pub fn is_connected_within(&self, s: &VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(r) => self.reach(r, s).len() == s.len(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(&self.vertices())
    }

    /// BFS order from `root` inside `within`, neighbors visited in increasing index.
    pub fn bfs_order(&self, root: usize, within: &VertexSet) -> Vec<usize> {
        let mut seen = VertexSet::empty(self.n());
        seen.insert(root);
        let mut order = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for u in &self.adj[v] {
                if within.contains(u) && !seen.contains(u) {
                    seen.insert(u);
                    order.push(u);
                    queue.push_back(u);
                }
            }
        }
        order
    }

    /// `G[s]`, relabeled `0..|s|` in increasing original order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Relabeled {
        let original = s.to_vec();
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in original.iter().enumerate() {
            position[v] = i;
        }
        let mut g = Graph::empty(original.len());
        for (i, &v) in original.iter().enumerate() {
            for u in self.adj[v].intersection(s).iter().filter(|&u| u > v) {
                g.add_edge_unchecked(i, position[u]);
            }
        }
        Relabeled { graph: g, original }
    }

    /// `G - X`.
    pub fn remove_vertices(&self, x: &VertexSet) -> Relabeled {
        self.induced_subgraph(&x.complement())
    }

    /// Disjoint union with block offsets in list order.
    pub fn disjoint_union(gs: &[Graph]) -> Graph {
        let n = gs.iter().map(Graph::n).sum();
        let mut out = Graph::empty(n);
        let mut offset = 0;
        for g in gs {
            for (u, v) in g.edges() {
                out.add_edge_unchecked(u + offset, v + offset);
            }
            offset += g.n();
        }
        out
    }

    /// Line graph; vertex `i` is the `i`-th edge in lexicographic order.
    pub fn line_graph(&self) -> LineGraph {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut g = Graph::empty(edges.len());
        for list in &incident {
            for (a, &i) in list.iter().enumerate() {
                for &j in &list[a + 1..] {
                    // two distinct edges of a simple graph share at most one endpoint
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        LineGraph { graph: g, edges }
    }

    /// `G □ H`; vertex `(i, j)` gets index `i * |V(H)| + j`.
    pub fn cartesian_product(&self, h: &Graph) -> Graph {
        let hn = h.n();
        let mut out = Graph::empty(self.n() * hn);
        for i in 0..self.n() {
            for (u, v) in h.edges() {
                out.add_edge_unchecked(i * hn + u, i * hn + v);
            }
        }
        for (x, y) in self.edges() {
            for j in 0..hn {
                out.add_edge_unchecked(x * hn + j, y * hn + j);
            }
        }
        out
    }

    /// Edge count inside `x`.
    pub fn edges_within(&self, x: &VertexSet) -> usize {
        x.iter().map(|v| self.adj[v].intersection_len(x)).sum::<usize>() / 2
    }

    /// Edge count between `x` and `y`; the sets are expected to be disjoint.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> usize {
        x.iter().map(|v| self.adj[v].intersection_len(y)).sum()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=", self.n(), self.m)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    fn k(n: usize) -> Graph {
        generate(&Family::Complete(n)).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        generate(&Family::Cycle(n)).unwrap()
    }

    fn petersen() -> Graph {
        generate(&Family::Petersen).unwrap()
    }

    #[test]
    fn components_examples() {
        let two_triangles = Graph::disjoint_union(&[cycle(3), cycle(3)]);
        let comps = two_triangles.components();
        assert_eq!(comps.iter().map(VertexSet::len).collect::<Vec<_>>(), vec![3, 3]);
        assert_eq!(petersen().components().len(), 1);
        let mixed = Graph::disjoint_union(&[k(5), cycle(7)]);
        assert_eq!(mixed.components().iter().map(VertexSet::len).collect::<Vec<_>>(), vec![5, 7]);
    }

    #[test]
    fn induced_subgraph_examples() {
        let sub = k(4).induced_subgraph(&VertexSet::from_vertices(4, [0, 1, 2]));
        assert_eq!((sub.graph.n(), sub.graph.m()), (3, 3));
        let sub = cycle(5).induced_subgraph(&VertexSet::from_vertices(5, [0, 2]));
        assert_eq!((sub.graph.n(), sub.graph.m()), (2, 0));
        let p = petersen();
        let (u, v) = p.edges().next().unwrap();
        let nj = p.closed_neighborhood(&VertexSet::from_vertices(10, [u, v]));
        assert_eq!(nj.len(), 6);
        assert_eq!(p.remove_vertices(&nj).graph.n(), 4);
    }

    #[test]
    fn disjoint_union_examples() {
        let g = Graph::disjoint_union(&[cycle(3), cycle(3)]);
        assert_eq!((g.n(), g.m()), (6, 6));
        let g = Graph::disjoint_union(&[k(5), k(5), k(5), k(5)]);
        assert_eq!((g.n(), g.m()), (20, 40));
        assert_eq!(Graph::disjoint_union(&[k(1)]), k(1));
    }

    #[test]
    fn line_graph_examples() {
        let l = cycle(5).line_graph();
        assert_eq!(l.graph.regular_degree(), Some(2));
        assert!(l.graph.is_connected());
        assert_eq!(l.graph.n(), 5);
        let star = generate(&Family::CompleteBipartite(1, 3)).unwrap();
        assert_eq!(star.line_graph().graph, k(3));
        let l = k(5).line_graph();
        assert_eq!(l.graph.regular_degree(), Some(6));
        assert_eq!(l.edges[0], (0, 1));
    }

    #[test]
    fn cartesian_product_examples() {
        let c4 = k(2).cartesian_product(&k(2));
        assert_eq!(c4.regular_degree(), Some(2));
        assert_eq!((c4.n(), c4.m()), (4, 4));
        let prism = cycle(3).cartesian_product(&k(2));
        assert_eq!((prism.n(), prism.m()), (6, 9));
        let lg = k(5).line_graph().graph.cartesian_product(&k(4));
        assert_eq!(lg.n(), 40);
        assert_eq!(lg.regular_degree(), Some(9));
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(petersen().regularity().unwrap(), RegularityInfo { regular: true, k: Some(3) });
        let star = generate(&Family::CompleteBipartite(1, 3)).unwrap();
        assert_eq!(star.regularity().unwrap(), RegularityInfo { regular: false, k: None });
        assert_eq!(k(5).regular_degree(), Some(4));
        assert_eq!(Graph::empty(0).regularity(), Err(Error::EmptyGraph));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn edge_counts() {
        let g = k(4);
        let tri = VertexSet::from_vertices(4, [0, 1, 2]);
        assert_eq!(g.edges_within(&tri), 3);
        assert_eq!(g.edges_between(&tri, &tri.complement()), 3);
    }
}
