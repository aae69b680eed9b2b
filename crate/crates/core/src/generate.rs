//! Named graph families and the seeded random regular generator.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Rejections allowed per `random_regular` call.
pub const PAIRING_RETRY_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `Circulant(n, s)`: `i ~ i ± d (mod n)` for every `d` in `s`.
    Circulant(usize, Vec<usize>),
    Hypercube(usize),
    Petersen,
    RandomRegular {
        n: usize,
        k: usize,
        seed: u64,
    },
}

pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Cycle(n) => cycle(n),
        Family::Complete(n) => complete(n),
        Family::CompleteBipartite(a, b) => complete_bipartite(a, b),
        Family::Circulant(n, ref s) => circulant(n, s),
        Family::Hypercube(d) => hypercube(d),
        Family::Petersen => Ok(petersen()),
        Family::RandomRegular { n, k, seed } => random_regular(n, k, seed),
    }
}

fn nonempty(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    nonempty(n)?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    nonempty(a + b)?;
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn circulant(n: usize, connections: &[usize]) -> Result<Graph> {
    nonempty(n)?;
    let mut g = Graph::empty(n);
    for &d in connections {
        if d == 0 || d > n / 2 {
            return Err(Error::Precondition(format!("circulant connection {d} outside 1..={}", n / 2)));
        }
        for i in 0..n {
            let j = (i + d) % n;
            if !g.has_edge(i, j) {
                g.add_edge_unchecked(i, j);
            }
        }
    }
    Ok(g)
}

pub fn hypercube(d: usize) -> Result<Graph> {
    if d >= 20 {
        return Err(Error::Precondition(format!("hypercube dimension {d} too large")));
    }
    let n = 1usize << d;
    Graph::from_edges(n, (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ 1 << b))).filter(|&(u, v)| u < v))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("Petersen edges are simple")
}

/// Uniform simple `k`-regular graph via the pairing model with rejection.
/// Deterministic for a fixed seed.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    nonempty(n)?;
    if n * k % 2 == 1 || k >= n {
        return Err(Error::NoSuchRegularGraph { n, k });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    'attempt: for _ in 0..PAIRING_RETRY_CAP {
        points.shuffle(&mut rng);
        let mut g = Graph::empty(n);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'attempt;
            }
            g.add_edge_unchecked(u, v);
        }
        return Ok(g);
    }
    Err(Error::RetryBudget(PAIRING_RETRY_CAP))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        let c6 = cycle(6).unwrap();
        assert_eq!((c6.m(), c6.regular_degree()), (6, Some(2)));
        assert_eq!(complete(5).unwrap().m(), 10);
        assert_eq!(complete_bipartite(3, 3).unwrap().regular_degree(), Some(3));
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.n(), q3.m(), q3.regular_degree()), (8, 12, Some(3)));
        let p = petersen();
        assert_eq!((p.n(), p.m(), p.regular_degree()), (10, 15, Some(3)));
        let c8 = circulant(8, &[1, 2]).unwrap();
        assert_eq!(c8.regular_degree(), Some(4));
        // d = n/2 contributes a perfect matching
        assert_eq!(circulant(6, &[3]).unwrap().regular_degree(), Some(1));
        assert!(circulant(6, &[4]).is_err());
    }

    #[test]
    fn random_regular_contract() {
        let g = random_regular(10, 3, 1).unwrap();
        assert_eq!((g.n(), g.regular_degree()), (10, Some(3)));
        assert_eq!(g, random_regular(10, 3, 1).unwrap());
        assert_eq!(random_regular(5, 3, 0), Err(Error::NoSuchRegularGraph { n: 5, k: 3 }));
        assert!(random_regular(4, 4, 0).is_err());
        assert_eq!(random_regular(20, 4, 7).unwrap().regular_degree(), Some(4));
    }
}
