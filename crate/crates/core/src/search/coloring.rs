use log::warn;

use super::SearchBudget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// A proper vertex coloring with dense color indices `0..count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    count: usize,
}

impl Coloring {
    /// Wraps raw color labels, compressing them to `0..count` while keeping their order.
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let mut used: Vec<usize> = colors.clone();
        used.sort_unstable();
        used.dedup();
        let colors = colors.iter().map(|c| used.binary_search(c).unwrap()).collect();
        Self { colors, count: used.len() }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn num_colors(&self) -> usize {
        self.count
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        let n = self.colors.len();
        let mut out = vec![VertexSet::empty(n); self.count];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].insert(v);
        }
        out
    }

    /// Largest color class; ties go to the smallest color index.
    pub fn largest_class(&self) -> VertexSet {
        let mut best = VertexSet::empty(self.colors.len());
        for class in self.classes() {
            if class.len() > best.len() {
                best = class;
            }
        }
        best
    }
}

/// A proper edge coloring; `colors[i]` belongs to `edges[i]`, edges in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub edges: Vec<(usize, usize)>,
    pub colors: Vec<usize>,
}

impl EdgeColoring {
    pub fn num_colors(&self) -> usize {
        self.colors.iter().max().map_or(0, |c| c + 1)
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        let expected: Vec<_> = g.edges().collect();
        if expected != self.edges || self.colors.len() != self.edges.len() {
            return false;
        }
        let mut seen = vec![0u128; g.n()];
        for (&(u, v), &c) in self.edges.iter().zip(&self.colors) {
            if c >= 128 {
                return false;
            }
            let bit = 1u128 << c;
            if seen[u] & bit != 0 || seen[v] & bit != 0 {
                return false;
            }
            seen[u] |= bit;
            seen[v] |= bit;
        }
        true
    }
}

fn smallest_free_color<'a>(taken: impl Iterator<Item = &'a Option<usize>>) -> usize {
    let mut used: Vec<usize> = taken.flatten().copied().collect();
    used.sort_unstable();
    used.dedup();
    used.iter().enumerate().find(|&(i, &c)| i != c).map_or(used.len(), |(i, _)| i)
}

/// Colors `order` greedily, considering only already-colored neighbors inside `mask`.
fn greedy_in_order(g: &Graph, order: impl Iterator<Item = usize>, mask: &VertexSet, scratch: &mut [Option<usize>]) {
    for v in order {
        let taken: Vec<Option<usize>> = g.neighbors(v).intersection(mask).iter().map(|u| scratch[u]).collect();
        scratch[v] = Some(smallest_free_color(taken.iter()));
    }
}

/// Greedy coloring in the given vertex order; uses at most `Δ + 1` colors.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring> {
    let mut seen = VertexSet::empty(g.n());
    for &v in order {
        if v >= g.n() || seen.contains(v) {
            return Err(Error::Precondition("order is not a permutation of the vertices".into()));
        }
        seen.insert(v);
    }
    if order.len() != g.n() {
        return Err(Error::Precondition("order is not a permutation of the vertices".into()));
    }
    let mut scratch = vec![None; g.n()];
    greedy_in_order(g, order.iter().copied(), &g.vertices(), &mut scratch);
    Ok(Coloring::from_colors(scratch.into_iter().map(Option::unwrap).collect()))
}

/// Coloring that meets Brooks' bound: every connected component that is neither
/// complete nor an odd cycle gets at most `Δ(component)` colors.
///
/// Per component with `Δ >= 3`:
/// * a vertex of degree `< Δ` roots a BFS tree, colored greedily leaves-first;
/// * otherwise a cut vertex splits the component into pieces in which it has
///   degree `< Δ`, each colored as above and aligned on the cut vertex's color;
/// * otherwise (2-connected) an induced path `a - x - b` with `G - {a, b}` connected
///   gives `a` and `b` a shared color, and the rest is colored leaves-first towards `x`.
pub fn brooks_coloring(g: &Graph) -> Result<Coloring> {
    let n = g.n();
    let mut colors = vec![0usize; n];
    for comp in g.components() {
        let delta = comp.iter().map(|v| g.degree(v)).max().unwrap_or(0);
        let mut scratch = vec![None; n];
        color_component(g, &comp, delta, &mut scratch);

        let exceptional = is_complete_component(g, &comp) || (delta == 2 && is_odd_cycle(g, &comp));
        let limit = if exceptional { delta + 1 } else { delta.max(1) };
        let proper =
            comp.iter().all(|v| scratch[v].is_some() && g.neighbors(v).iter().all(|u| scratch[u] != scratch[v]));
        let used = {
            let mut c: Vec<usize> = comp.iter().filter_map(|v| scratch[v]).collect();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        if proper && used <= limit {
            for v in &comp {
                colors[v] = scratch[v].unwrap();
            }
            continue;
        }

        warn!("Brooks construction missed its bound on a component of size {}; using exact search", comp.len());
        let sub = g.induced_subgraph(&comp);
        let exact = is_k_colorable(&sub.graph, limit)?
            .ok_or_else(|| Error::ConstructionFailed(format!("component is not {limit}-colorable")))?;
        for (i, &v) in sub.original.iter().enumerate() {
            colors[v] = exact.color(i);
        }
    }
    let coloring = Coloring::from_colors(colors);
    if !coloring.is_proper(g) {
        return Err(Error::ConstructionFailed("Brooks coloring is not proper".into()));
    }
    Ok(coloring)
}

fn is_complete_component(g: &Graph, comp: &VertexSet) -> bool {
    let s = comp.len();
    comp.iter().all(|v| g.degree(v) == s - 1)
}

fn is_odd_cycle(g: &Graph, comp: &VertexSet) -> bool {
    comp.len() % 2 == 1 && comp.iter().all(|v| g.degree(v) == 2)
}

fn color_component(g: &Graph, comp: &VertexSet, delta: usize, scratch: &mut [Option<usize>]) {
    let root = comp.first().expect("components are nonempty");
    if is_complete_component(g, comp) {
        for (i, v) in comp.iter().enumerate() {
            scratch[v] = Some(i);
        }
        return;
    }
    if delta <= 2 {
        // paths and cycles: BFS order alternates colors along distance layers
        greedy_in_order(g, g.bfs_order(root, comp).into_iter(), comp, scratch);
        return;
    }

    if let Some(low) = comp.iter().find(|&v| g.degree(v) < delta) {
        greedy_in_order(g, g.bfs_order(low, comp).into_iter().rev(), comp, scratch);
        return;
    }

    if let Some(cut) = comp.iter().find(|&v| {
        let mut rest = comp.clone();
        rest.remove(v);
        !g.is_connected_within(&rest)
    }) {
        let mut rest = comp.clone();
        rest.remove(cut);
        let mut remaining = rest.clone();
        while let Some(start) = remaining.first() {
            let piece = g.reach(start, &rest);
            remaining.difference_with(&piece);
            let mut mask = piece.clone();
            mask.insert(cut);
            let mut local = vec![None; g.n()];
            greedy_in_order(g, g.bfs_order(cut, &mask).into_iter().rev(), &mask, &mut local);
            let pivot = local[cut].unwrap();
            let swap = |c: usize| {
                if c == pivot {
                    0
                } else if c == 0 {
                    pivot
                } else {
                    c
                }
            };
            for v in &piece {
                scratch[v] = local[v].map(swap);
            }
        }
        scratch[cut] = Some(0);
        return;
    }

    if let Some((x, a, b)) = find_brooks_triple(g, comp) {
        let mut rest = comp.clone();
        rest.remove(a);
        rest.remove(b);
        scratch[a] = Some(0);
        scratch[b] = Some(0);
        greedy_in_order(g, g.bfs_order(x, &rest).into_iter().rev(), comp, scratch);
        return;
    }

    // not reachable for non-complete 2-connected regular components; the caller's check falls back to search
    greedy_in_order(g, comp.iter(), comp, scratch);
}

/// Vertex `x` with nonadjacent neighbors `a < b` such that removing `a` and `b` keeps the component connected.
fn find_brooks_triple(g: &Graph, comp: &VertexSet) -> Option<(usize, usize, usize)> {
    for x in comp {
        let nbrs = g.neighbors(x).to_vec();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut rest = comp.clone();
                rest.remove(a);
                rest.remove(b);
                if g.is_connected_within(&rest) {
                    return Some((x, a, b));
                }
            }
        }
    }
    None
}

/// Exact `k`-colorability by backtracking under the default node budget.
pub fn is_k_colorable(g: &Graph, k: usize) -> Result<Option<Coloring>> {
    is_k_colorable_with_budget(g, k, &mut SearchBudget::default())
}

pub fn is_k_colorable_with_budget(g: &Graph, k: usize, budget: &mut SearchBudget) -> Result<Option<Coloring>> {
    let n = g.n();
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if n == 0 {
        return Ok(Some(Coloring::from_colors(Vec::new())));
    }
    if k > g.max_degree() {
        let order: Vec<usize> = (0..n).collect();
        return greedy_coloring(g, &order).map(Some);
    }
    if k > 64 {
        return Err(Error::Precondition(format!("exact coloring supports k <= 64, got {k}")));
    }

    let order = max_cardinality_order(g);
    let mut search = ColorSearch { g, k, order: &order, colors: vec![usize::MAX; n], budget };
    if search.extend(0, 0)? {
        Ok(Some(Coloring::from_colors(search.colors)))
    } else {
        Ok(None)
    }
}

/// Each next vertex has the most already-ordered neighbors; ties go to the smallest index.
fn max_cardinality_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = VertexSet::empty(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (g.neighbors(v).intersection_len(&placed), std::cmp::Reverse(v)))
            .unwrap();
        placed.insert(v);
        order.push(v);
    }
    order
}

struct ColorSearch<'a> {
    g: &'a Graph,
    k: usize,
    order: &'a [usize],
    colors: Vec<usize>,
    budget: &'a mut SearchBudget,
}

impl ColorSearch<'_> {
    /// `used`: number of distinct colors on the vertices placed so far. A vertex
    /// may open color `used` but never skip past it.
    fn extend(&mut self, pos: usize, used: usize) -> Result<bool> {
        if pos == self.order.len() {
            return Ok(true);
        }
        self.budget.tick()?;
        let v = self.order[pos];
        let mut forbidden = 0u64;
        for u in self.g.neighbors(v) {
            if self.colors[u] != usize::MAX {
                forbidden |= 1 << self.colors[u];
            }
        }
        for c in 0..self.k.min(used + 1) {
            if forbidden >> c & 1 == 1 {
                continue;
            }
            self.colors[v] = c;
            if self.extend(pos + 1, used.max(c + 1))? {
                return Ok(true);
            }
        }
        self.colors[v] = usize::MAX;
        Ok(false)
    }
}

/// Exact `k`-edge-colorability, solved as `k`-colorability of the line graph.
pub fn is_k_edge_colorable(g: &Graph, k: usize) -> Result<Option<EdgeColoring>> {
    is_k_edge_colorable_with_budget(g, k, &mut SearchBudget::default())
}

pub fn is_k_edge_colorable_with_budget(g: &Graph, k: usize, budget: &mut SearchBudget) -> Result<Option<EdgeColoring>> {
    let line = g.line_graph();
    Ok(is_k_colorable_with_budget(&line.graph, k, budget)?
        .map(|c| EdgeColoring { edges: line.edges, colors: c.colors().to_vec() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{circulant, complete, complete_bipartite, cycle, petersen};

    #[test]
    fn greedy_examples() {
        let c4 = cycle(4).unwrap();
        assert_eq!(greedy_coloring(&c4, &[0, 1, 2, 3]).unwrap().num_colors(), 2);
        let k4 = complete(4).unwrap();
        assert_eq!(greedy_coloring(&k4, &[3, 1, 0, 2]).unwrap().num_colors(), 4);
        let p = petersen();
        let order: Vec<usize> = (0..10).rev().collect();
        let c = greedy_coloring(&p, &order).unwrap();
        assert!(c.is_proper(&p) && c.num_colors() <= 4);
        assert!(greedy_coloring(&p, &[0, 0]).is_err());
    }

    #[test]
    fn brooks_examples() {
        let c = brooks_coloring(&petersen()).unwrap();
        assert!(c.is_proper(&petersen()));
        assert_eq!(c.num_colors(), 3);
        assert_eq!(brooks_coloring(&cycle(7).unwrap()).unwrap().num_colors(), 3);
        assert_eq!(brooks_coloring(&cycle(8).unwrap()).unwrap().num_colors(), 2);
        assert_eq!(brooks_coloring(&complete(5).unwrap()).unwrap().num_colors(), 5);
        assert_eq!(brooks_coloring(&Graph::empty(3)).unwrap().num_colors(), 1);
    }

    #[test]
    fn brooks_uses_cut_vertex_split() {
        // two copies of K5 minus an edge, the four deficient vertices joined to a shared vertex 10
        let mut edges = Vec::new();
        for base in [0, 5] {
            for u in 0..5 {
                for v in u + 1..5 {
                    if (u, v) != (0, 1) {
                        edges.push((base + u, base + v));
                    }
                }
            }
        }
        for v in [0, 1, 5, 6] {
            edges.push((v, 10));
        }
        let g = Graph::from_edges(11, edges).unwrap();
        assert_eq!(g.regular_degree(), Some(4));
        let c = brooks_coloring(&g).unwrap();
        assert!(c.is_proper(&g));
        assert!(c.num_colors() <= 4);
    }

    #[test]
    fn brooks_on_two_connected_regular() {
        for g in [
            circulant(8, &[1, 2]).unwrap(),
            circulant(12, &[1, 3]).unwrap(),
            complete_bipartite(4, 4).unwrap(),
            circulant(9, &[1, 2]).unwrap(),
        ] {
            let c = brooks_coloring(&g).unwrap();
            assert!(c.is_proper(&g));
            assert!(c.num_colors() <= g.max_degree(), "{g:?}");
        }
    }

    #[test]
    fn exact_coloring_examples() {
        let c5 = cycle(5).unwrap();
        assert!(is_k_colorable(&c5, 2).unwrap().is_none());
        assert!(is_k_colorable(&c5, 3).unwrap().unwrap().is_proper(&c5));
        let p = petersen();
        assert!(is_k_colorable(&p, 3).unwrap().unwrap().is_proper(&p));
        assert!(is_k_colorable(&p, 2).unwrap().is_none());
        assert!(is_k_colorable(&p, 0).is_err());
    }

    #[test]
    fn exact_edge_coloring_examples() {
        let k4 = complete(4).unwrap();
        let ec = is_k_edge_colorable(&k4, 3).unwrap().unwrap();
        assert!(ec.is_proper(&k4));
        assert!(is_k_edge_colorable(&petersen(), 3).unwrap().is_none());
        assert!(is_k_edge_colorable(&petersen(), 4).unwrap().is_some());
        assert!(is_k_edge_colorable(&complete(5).unwrap(), 4).unwrap().is_none());
    }

    #[test]
    fn exhausted_budget_is_an_error() {
        let p = petersen();
        let mut budget = SearchBudget::new(3);
        assert!(matches!(is_k_colorable_with_budget(&p, 2, &mut budget), Err(Error::BudgetExhausted(3))));
        assert!(budget.is_exhausted());
    }
}
