//! Corpora and brute-force oracles shared by the integration tests. The
//! oracles here work from edge lists only and share no code with the library.
#![allow(dead_code)]

use balance_lab::generate::{circulant, complete, complete_bipartite, cycle, hypercube, petersen, random_regular};
use balance_lab::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

fn half(l: usize, m: usize) -> bool {
    l == m / 2 || l == m.div_ceil(2)
}

/// `(internally balanced set exists, externally balanced partition exists)`.
pub fn brute_balance(g: &Graph) -> (bool, bool) {
    let n = g.n();
    assert!(n <= 22, "brute oracle is for tiny graphs");
    let edges = edge_list(g);
    let m = edges.len();
    let (mut internal, mut external) = (false, false);
    for mask in 0u32..(1u32 << n) {
        let inside = |v: usize| mask >> v & 1 == 1;
        let within = edges.iter().filter(|&&(u, v)| inside(u) && inside(v)).count();
        let cut = edges.iter().filter(|&&(u, v)| inside(u) != inside(v)).count();
        internal |= half(within, m);
        external |= half(cut, m);
        if internal && external {
            break;
        }
    }
    (internal, external)
}

pub fn brute_balanceable(g: &Graph) -> bool {
    let (a, b) = brute_balance(g);
    a && b
}

pub fn brute_simply_balanceable(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 22, "brute oracle is for tiny graphs");
    let edges = edge_list(g);
    let m = edges.len();
    let mut deg = vec![0usize; n];
    for &(u, v) in &edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    (0u32..(1u32 << n)).any(|mask| {
        let inside = |v: usize| mask >> v & 1 == 1;
        if edges.iter().any(|&(u, v)| inside(u) && inside(v)) {
            return false;
        }
        half((0..n).filter(|&v| inside(v)).map(|v| deg[v]).sum(), m)
    })
}

/// Proper-coloring check straight from the edge list.
pub fn proper(g: &Graph, colors: &[usize]) -> bool {
    edge_list(g).iter().all(|&(u, v)| colors[u] != colors[v])
}

/// Independent graph6 encoder for n < 63.
pub fn encode_graph6(n: usize, edges: &[(usize, usize)]) -> String {
    assert!(n < 63);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(edges.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i)));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        s.push((v + 63) as char);
    }
    s
}

pub fn union(parts: &[Graph]) -> Graph {
    Graph::disjoint_union(parts)
}

pub fn copies(g: &Graph, k: usize) -> Graph {
    union(&vec![g.clone(); k])
}

/// Generalized Petersen graph GP(n, k).
pub fn generalized_petersen(n: usize, k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    let mut norm: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    norm.sort();
    norm.dedup();
    Graph::from_edges(2 * n, norm).unwrap()
}

pub fn prism(k: usize) -> Graph {
    cycle(k).unwrap().cartesian_product(&complete(2).unwrap())
}

pub fn moebius_ladder(k: usize) -> Graph {
    circulant(2 * k, &[1, k]).unwrap()
}

pub struct Named {
    pub name: String,
    pub graph: Graph,
}

fn named(name: impl Into<String>, graph: Graph) -> Named {
    Named { name: name.into(), graph }
}

pub fn cubic_corpus() -> Vec<Named> {
    let mut out = vec![
        named("K4", complete(4).unwrap()),
        named("K3,3", complete_bipartite(3, 3).unwrap()),
        named("Q3", hypercube(3).unwrap()),
        named("Petersen", petersen()),
        named("Moebius-Kantor", generalized_petersen(8, 3)),
        named("Desargues", generalized_petersen(10, 3)),
        named("Dodecahedron", generalized_petersen(10, 2)),
        named("2K4", copies(&complete(4).unwrap(), 2)),
        named("K4+K3,3", union(&[complete(4).unwrap(), complete_bipartite(3, 3).unwrap()])),
    ];
    for k in 3..=10 {
        out.push(named(format!("prism{k}"), prism(k)));
    }
    for k in 3..=10 {
        out.push(named(format!("moebius{k}"), moebius_ladder(k)));
    }
    for n in (8..=20).step_by(2) {
        for seed in 0..27 {
            out.push(named(format!("cubic{n}s{seed}"), random_regular(n, 3, seed).unwrap()));
        }
    }
    out
}

pub fn k5() -> Graph {
    complete(5).unwrap()
}

pub fn octahedron() -> Graph {
    circulant(6, &[1, 2]).unwrap()
}

pub fn square_cycle(n: usize) -> Graph {
    circulant(n, &[1, 2]).unwrap()
}

/// 4-regular graphs of order divisible by 4.
pub fn four_regular_corpus() -> Vec<Named> {
    let mut out = vec![
        named("4K5", copies(&k5(), 4)),
        named("8K5", copies(&k5(), 8)),
        named("K5+C7^2", union(&[k5(), square_cycle(7)])),
        named("2K5+oct", union(&[k5(), k5(), octahedron()])),
        named("2K5+C10^2", union(&[k5(), k5(), square_cycle(10)])),
        named("K5+3C9^2", union(&[k5(), square_cycle(9), square_cycle(9), square_cycle(9)])),
        named("3K5+C9^2", union(&[k5(), k5(), k5(), square_cycle(9)])),
        named("2K5+2C9^2", union(&[k5(), k5(), square_cycle(9), square_cycle(9)])),
        named("K5+C9^2+oct", union(&[k5(), square_cycle(9), octahedron()])),
        named("K5+C11^2", union(&[k5(), square_cycle(11)])),
        named("6K5+oct", union(&[copies(&k5(), 6), octahedron()])),
        named("oct+oct+C8^2", union(&[octahedron(), octahedron(), square_cycle(8)])),
        named("oct+oct", copies(&octahedron(), 2)),
        named("C8(1,2)", circulant(8, &[1, 2]).unwrap()),
        named("C12(1,3)", circulant(12, &[1, 3]).unwrap()),
        named("C12(1,5)", circulant(12, &[1, 5]).unwrap()),
        named("C16(1,4)", circulant(16, &[1, 4]).unwrap()),
        named("K4,4", complete_bipartite(4, 4).unwrap()),
        named("Q4", hypercube(4).unwrap()),
        named("C20(2,3)", circulant(20, &[2, 3]).unwrap()),
    ];
    for n in [8, 12, 16, 20] {
        for seed in 0..8 {
            out.push(named(format!("quartic{n}s{seed}"), random_regular(n, 4, seed).unwrap()));
        }
    }
    out
}

/// Every multiset of cycle lengths (each ≥ 3) with total at most `max_n`.
pub fn cycle_unions(max_n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for len in min..=remaining {
            cur.push(len);
            rec(remaining - len, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_n, 3, &mut Vec::new(), &mut out);
    out
}

pub fn cycle_union(lengths: &[usize]) -> Graph {
    union(&lengths.iter().map(|&l| cycle(l).unwrap()).collect::<Vec<_>>())
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn gnp_corpus() -> Vec<Named> {
    let mut out = Vec::new();
    for n in 4..=10 {
        for (i, p) in [0.3, 0.5, 0.7].into_iter().enumerate() {
            for seed in 0..3 {
                out.push(named(format!("gnp{n}p{p}s{seed}"), gnp(n, p, 1000 * n as u64 + 10 * i as u64 + seed)));
            }
        }
    }
    out
}
