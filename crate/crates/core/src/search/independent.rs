use super::SearchBudget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Maximum independent set by branch and bound under the default node budget.
pub fn max_independent_set(g: &Graph) -> Result<VertexSet> {
    max_independent_set_with_budget(g, &mut SearchBudget::default())
}

pub fn max_independent_set_with_budget(g: &Graph, budget: &mut SearchBudget) -> Result<VertexSet> {
    let mut search = MisSearch::new(g, None, budget);
    search.run()?;
    Ok(search.best_set())
}

/// An independent set of exactly `k` vertices if `α(g) >= k`, `None` if `α(g) < k`.
/// A larger find is truncated to its `k` smallest vertices.
pub fn independent_set_at_least(g: &Graph, k: usize) -> Result<Option<VertexSet>> {
    independent_set_at_least_with_budget(g, k, &mut SearchBudget::default())
}

pub fn independent_set_at_least_with_budget(
    g: &Graph,
    k: usize,
    budget: &mut SearchBudget,
) -> Result<Option<VertexSet>> {
    if k > g.n() {
        return Err(Error::Precondition(format!("k = {k} exceeds n = {}", g.n())));
    }
    if k == 0 {
        return Ok(Some(VertexSet::empty(g.n())));
    }
    let mut search = MisSearch::new(g, Some(k), budget);
    search.run()?;
    if search.best.len() < k {
        return Ok(None);
    }
    let mut chosen = search.best.clone();
    chosen.sort_unstable();
    Ok(Some(VertexSet::from_vertices(g.n(), chosen.into_iter().take(k))))
}

/// Number of cliques in a greedy cover of `p`, an upper bound on `α(G[p])`.
/// Cliques grow from the smallest remaining vertex, always adding the smallest candidate.
fn greedy_clique_cover_size(g: &Graph, p: &VertexSet) -> usize {
    let mut rest = p.clone();
    let mut count = 0;
    while let Some(v) = rest.first() {
        rest.remove(v);
        let mut cand = rest.intersection(g.neighbors(v));
        while let Some(u) = cand.first() {
            rest.remove(u);
            cand.intersect_with(g.neighbors(u));
        }
        count += 1;
    }
    count
}

struct MisSearch<'a> {
    g: &'a Graph,
    target: Option<usize>,
    budget: &'a mut SearchBudget,
    current: Vec<usize>,
    best: Vec<usize>,
    done: bool,
}

impl<'a> MisSearch<'a> {
    fn new(g: &'a Graph, target: Option<usize>, budget: &'a mut SearchBudget) -> Self {
        Self { g, target, budget, current: Vec::new(), best: Vec::new(), done: false }
    }

    fn run(&mut self) -> Result<()> {
        let all = self.g.vertices();
        self.branch(all)
    }

    fn best_set(&self) -> VertexSet {
        VertexSet::from_vertices(self.g.n(), self.best.iter().copied())
    }

    /// Size a branch must exceed to be worth exploring.
    fn threshold(&self) -> usize {
        match self.target {
            Some(t) => self.best.len().max(t - 1),
            None => self.best.len(),
        }
    }

    fn record(&mut self) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
            if self.target.is_some_and(|t| self.best.len() >= t) {
                self.done = true;
            }
        }
    }

    fn branch(&mut self, mut p: VertexSet) -> Result<()> {
        if self.done {
            return Ok(());
        }
        self.budget.tick()?;
        let saved = self.current.len();

        // a vertex with at most one candidate neighbor lies in some maximum independent set of G[p]
        while let Some(u) = p.iter().find(|&u| self.g.neighbors(u).intersection_len(&p) <= 1) {
            self.current.push(u);
            p.difference_with(self.g.neighbors(u));
            p.remove(u);
        }

        if p.is_empty() {
            self.record();
        } else if self.current.len() + greedy_clique_cover_size(self.g, &p) > self.threshold() {
            let v = p.iter().max_by_key(|&v| (self.g.neighbors(v).intersection_len(&p), std::cmp::Reverse(v))).unwrap();

            let mut with_v = p.difference(self.g.neighbors(v));
            with_v.remove(v);
            self.current.push(v);
            self.branch(with_v)?;
            self.current.pop();

            if !self.done {
                p.remove(v);
                self.branch(p)?;
            }
        }
        self.current.truncate(saved);
        Ok(())
    }
}

/// Maximum independent set when `parts` partitions the vertices into cliques.
/// At most one vertex per part can be chosen, so the search branches on whole
/// parts and bounds by the number of parts that still have an available vertex.
pub fn max_independent_set_in_clique_partition(
    g: &Graph,
    parts: &[VertexSet],
    budget: &mut SearchBudget,
) -> Result<VertexSet> {
    let n = g.n();
    let mut covered = VertexSet::empty(n);
    for part in parts {
        if part.universe() != n || !g.is_clique(part) || !part.is_disjoint(&covered) {
            return Err(Error::Precondition("parts must be disjoint cliques of the graph".into()));
        }
        covered.union_with(part);
    }
    if covered.len() != n {
        return Err(Error::Precondition("parts must cover every vertex".into()));
    }

    let mut search = FiberSearch { g, parts, budget, current: Vec::new(), best: Vec::new() };
    let open = vec![true; parts.len()];
    search.branch(g.vertices(), open)?;
    Ok(VertexSet::from_vertices(n, search.best))
}

struct FiberSearch<'a> {
    g: &'a Graph,
    parts: &'a [VertexSet],
    budget: &'a mut SearchBudget,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl FiberSearch<'_> {
    fn branch(&mut self, available: VertexSet, mut open: Vec<bool>) -> Result<()> {
        self.budget.tick()?;
        // open parts that still have an available vertex, fewest choices first
        let mut pick: Option<(usize, usize)> = None;
        let mut live = 0;
        for (i, part) in self.parts.iter().enumerate() {
            if !open[i] {
                continue;
            }
            let choices = part.intersection_len(&available);
            if choices == 0 {
                open[i] = false;
                continue;
            }
            live += 1;
            if pick.is_none_or(|(_, c)| choices < c) {
                pick = Some((i, choices));
            }
        }
        let Some((i, _)) = pick else {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return Ok(());
        };
        if self.current.len() + live <= self.best.len() {
            return Ok(());
        }

        open[i] = false;
        for v in self.parts[i].intersection(&available).iter() {
            let mut next = available.difference(self.g.neighbors(v));
            next.remove(v);
            self.current.push(v);
            self.branch(next, open.clone())?;
            self.current.pop();
        }
        // leave part i empty
        if self.current.len() + live - 1 > self.best.len() {
            self.branch(available, open)?;
        }
        Ok(())
    }
}
