//! Exhaustive deciders for small graphs.
//!
//! Subset scans run in increasing bitmask order. Stepping from `s - 1` to `s`
//! clears the trailing ones and sets one bit, so on average two vertices move
//! per step and each move updates the running edge count with one popcount.
//! The first witness found is therefore the one with the smallest bitmask.

use super::verdict::{Method, Property, Refutation, Verdict};
use super::{essentially_half, BalanceCertificate};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

pub const DEFAULT_ORACLE_CAP: usize = 28;
/// Scans keep subsets in one `u64`; this is the hard ceiling whatever the configured cap.
pub const MAX_ORACLE_CAP: usize = 62;

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_ORACLE_CAP);
    if g.n() > cap {
        return Err(Error::OverCap { n: g.n(), cap });
    }
    Ok(())
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).low_mask()).collect()
}

/// Smallest (by bitmask) `W` with `e(W)` essentially half of `m`, or `None` if there is none.
pub fn find_internally_balanced_set(g: &Graph, cap: usize) -> Result<Option<VertexSet>> {
    check_cap(g, cap)?;
    let n = g.n();
    let m = g.m();
    let adj = adjacency_masks(g);
    let mut w = 0u64;
    let mut inside = 0usize;
    if essentially_half(0, m) {
        return Ok(Some(VertexSet::empty(n)));
    }
    for mask in 1u64..1 << n {
        let top = mask.trailing_zeros() as usize;
        for (b, nb) in adj.iter().enumerate().take(top) {
            w &= !(1 << b);
            inside -= (nb & w).count_ones() as usize;
        }
        inside += (adj[top] & w).count_ones() as usize;
        w |= 1 << top;
        debug_assert_eq!(w, mask);
        if essentially_half(inside, m) {
            return Ok(Some(VertexSet::from_mask(n, mask)));
        }
    }
    Ok(None)
}

/// Smallest (by bitmask) `X` with cut essentially half of `m`, or `None` if there is none.
/// `X` and `V \ X` have the same cut, so only sets avoiding the last vertex are scanned.
pub fn find_externally_balanced_partition(g: &Graph, cap: usize) -> Result<Option<VertexSet>> {
    check_cap(g, cap)?;
    let n = g.n();
    let m = g.m();
    if essentially_half(0, m) {
        return Ok(Some(VertexSet::empty(n)));
    }
    let adj = adjacency_masks(g);
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut x = 0u64;
    let mut cut = 0usize;
    for mask in 1u64..1 << (n - 1) {
        let top = mask.trailing_zeros() as usize;
        for b in 0..top {
            x &= !(1 << b);
            let into_x = (adj[b] & x).count_ones() as usize;
            // b leaves X: its edges to X join the cut, its edges to V \ X leave it
            cut = cut + 2 * into_x - deg[b];
        }
        let into_x = (adj[top] & x).count_ones() as usize;
        cut = cut + deg[top] - 2 * into_x;
        x |= 1 << top;
        if essentially_half(cut, m) {
            return Ok(Some(VertexSet::from_mask(n, mask)));
        }
    }
    Ok(None)
}

fn over_cap_verdict(property: Property, err: Error) -> Result<Verdict> {
    match err {
        Error::OverCap { .. } => Ok(Verdict::undecided(property, Method::Oracle, err.to_string())),
        other => Err(other),
    }
}

/// Decides balanceability by the two independent existence scans.
pub fn decide_balanceable_oracle(g: &Graph, cap: usize) -> Result<Verdict> {
    let p = Property::Balanceable;
    let internal = match find_internally_balanced_set(g, cap) {
        Ok(Some(w)) => w,
        Ok(None) => {
            return Ok(
                Verdict::fails(p, Refutation::ExhaustiveSearch, Method::Oracle).with_note("no internally balanced set")
            )
        }
        Err(e) => return over_cap_verdict(p, e),
    };
    let external = match find_externally_balanced_partition(g, cap) {
        Ok(Some(x)) => x,
        Ok(None) => {
            return Ok(
                Verdict::fails(p, Refutation::ExhaustiveSearch, Method::Oracle).with_note("no externally balanced set")
            )
        }
        Err(e) => return over_cap_verdict(p, e),
    };
    Ok(Verdict::holds(p, BalanceCertificate::TwoPart { internal, external }, Method::Oracle))
}

/// Decides simple balanceability by depth-first search over independent sets.
///
/// Vertices are decided from the highest index down with exclusion tried first,
/// so the first witness is the smallest bitmask. Branches are cut when the degree
/// sum already overshoots `⌈m/2⌉` or cannot reach `⌊m/2⌋` even with every
/// remaining available vertex.
pub fn decide_simply_balanceable_oracle(g: &Graph, cap: usize) -> Result<Verdict> {
    let p = Property::SimplyBalanceable;
    if let Err(e) = check_cap(g, cap) {
        return over_cap_verdict(p, e);
    }
    let n = g.n();
    let m = g.m();
    let search =
        SbSearch { adj: adjacency_masks(g), deg: (0..n).map(|v| g.degree(v)).collect(), lo: m / 2, hi: m.div_ceil(2) };
    Ok(match search.run(n, 0, 0, 0) {
        Some(mask) => Verdict::holds(
            p,
            BalanceCertificate::SimplyBalanced { independent: VertexSet::from_mask(n, mask) },
            Method::Oracle,
        ),
        None => Verdict::fails(p, Refutation::ExhaustiveSearch, Method::Oracle),
    })
}

struct SbSearch {
    adj: Vec<u64>,
    deg: Vec<usize>,
    lo: usize,
    hi: usize,
}

impl SbSearch {
    /// Vertices `>= undecided` are settled; `blocked` holds neighbors of the chosen set.
    fn run(&self, undecided: usize, chosen: u64, sum: usize, blocked: u64) -> Option<u64> {
        if sum > self.hi {
            return None;
        }
        if sum >= self.lo {
            return Some(chosen);
        }
        let reachable: usize = (0..undecided).filter(|&v| blocked >> v & 1 == 0).map(|v| self.deg[v]).sum();
        if sum + reachable < self.lo {
            return None;
        }
        let v = undecided.checked_sub(1)?;
        if let Some(found) = self.run(v, chosen, sum, blocked) {
            return Some(found);
        }
        if blocked >> v & 1 == 0 {
            return self.run(v, chosen | 1 << v, sum + self.deg[v], blocked | self.adj[v]);
        }
        None
    }
}
