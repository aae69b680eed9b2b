//! Certificate constructors for cubic and 4-regular graphs and for disjoint unions.

use log::warn;

use crate::balance::{verify_certificate, BalanceCertificate};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::{brooks_coloring, independent_set_at_least};
use crate::set::VertexSet;

fn ensure_valid(g: &Graph, cert: BalanceCertificate, what: &str) -> Result<BalanceCertificate> {
    let check = verify_certificate(g, &cert)?;
    if check.valid {
        Ok(cert)
    } else {
        Err(Error::ConstructionFailed(format!("{what}: {}", check.diagnostic.unwrap_or_default())))
    }
}

/// An independent set with exactly `size` vertices: the first vertices of the
/// largest Brooks color class, or exact search if that class is too small.
pub fn independent_set_of_size(g: &Graph, size: usize) -> Result<VertexSet> {
    let class = brooks_coloring(g)?.largest_class();
    if class.len() >= size {
        return Ok(VertexSet::from_vertices(g.n(), class.iter().take(size)));
    }
    warn!("largest Brooks class has {} < {size} vertices; falling back to exact search", class.len());
    independent_set_at_least(g, size)?
        .ok_or_else(|| Error::ConstructionFailed(format!("no independent set of size {size}")))
}

/// Certificate for a cubic graph.
///
/// For `n = 4k` the certificate is an independent set of `k` vertices. For
/// `n = 4k + 2` take the first edge `xy`, an independent set `I` of `k - 1`
/// vertices in `G - N[{x, y}]`, and `X = I ∪ {x, y}`. Then `xy` is the only edge
/// inside `X`, so `e(X, V \ X) = 3(k - 1) + 4 = 3k + 1`, and `W = V \ X` spans
/// `(6k + 3) - 1 - (3k + 1) = 3k + 1` edges.
pub fn cubic_balance_certificate(g: &Graph) -> Result<BalanceCertificate> {
    if g.regular_degree() != Some(3) {
        return Err(Error::Inapplicable("graph is not cubic".into()));
    }
    let n = g.n();
    if n.is_multiple_of(4) {
        let independent = independent_set_of_size(g, n / 4)?;
        return ensure_valid(g, BalanceCertificate::SimplyBalanced { independent }, "cubic n = 0 mod 4");
    }

    let k = (n - 2) / 4;
    let (x, y) = g.edges().next().expect("cubic graphs have edges");
    let pair = VertexSet::from_vertices(n, [x, y]);
    let rest = g.remove_vertices(&g.closed_neighborhood(&pair));
    if rest.graph.n() < 4 * k.saturating_sub(1) {
        return Err(Error::ConstructionFailed(format!(
            "G - N[xy] has {} vertices, expected at least {}",
            rest.graph.n(),
            4 * (k - 1)
        )));
    }
    let local = independent_set_of_size(&rest.graph, k.saturating_sub(1))?;
    let mut external = pair;
    for v in &local {
        external.insert(rest.original[v]);
    }
    let internal = external.complement();

    let cut = crate::balance::balance_counts(g, &external).cut;
    let inside = g.edges_within(&internal);
    if cut != 3 * k + 1 || inside != 3 * k + 1 {
        return Err(Error::ConstructionFailed(format!(
            "cubic n = 4k+2 counts are ({inside}, {cut}), expected both {}",
            3 * k + 1
        )));
    }
    ensure_valid(g, BalanceCertificate::TwoPart { internal, external }, "cubic n = 2 mod 4")
}

/// Combines certificates of `g` and `h` into one for `g + h` (h's labels offset by `|V(g)|`).
/// Requires `|E(h)|` even, so `h`'s certificate splits its edges exactly in half.
pub fn join_certificates(
    g: &Graph,
    cg: &BalanceCertificate,
    h: &Graph,
    ch: &BalanceCertificate,
) -> Result<BalanceCertificate> {
    if h.m() % 2 == 1 {
        return Err(Error::Precondition("the second graph must have an even number of edges".into()));
    }
    for (graph, cert, name) in [(g, cg, "first"), (h, ch, "second")] {
        let check = verify_certificate(graph, cert)?;
        if !check.valid {
            return Err(Error::Precondition(format!(
                "{name} certificate does not verify: {}",
                check.diagnostic.unwrap_or_default()
            )));
        }
    }
    let n = g.n() + h.n();
    let (wg, xg) = cg.to_two_part();
    let (wh, xh) = ch.to_two_part();
    let internal = wg.shifted(n, 0).union(&wh.shifted(n, g.n()));
    let external = xg.shifted(n, 0).union(&xh.shifted(n, g.n()));
    let union = Graph::disjoint_union(&[g.clone(), h.clone()]);
    ensure_valid(&union, BalanceCertificate::TwoPart { internal, external }, "joined certificate")
}

/// Component structure of a 4-regular graph: the `K5` components and the
/// residues mod 4 of the orders of the others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentProfile {
    pub complete_k5_components: Vec<VertexSet>,
    pub other_components: Vec<VertexSet>,
    /// `residue_counts[i]`: non-`K5` components of order `≡ i (mod 4)`.
    pub residue_counts: [usize; 4],
    /// Union of the `K5` components.
    pub k5_vertices: VertexSet,
}

impl ComponentProfile {
    pub fn k5_count(&self) -> usize {
        self.complete_k5_components.len()
    }
}

pub fn component_profile(g: &Graph) -> Result<ComponentProfile> {
    if g.regular_degree() != Some(4) {
        return Err(Error::Inapplicable("graph is not 4-regular".into()));
    }
    let mut profile = ComponentProfile {
        complete_k5_components: Vec::new(),
        other_components: Vec::new(),
        residue_counts: [0; 4],
        k5_vertices: VertexSet::empty(g.n()),
    };
    for comp in g.components() {
        // 4-regular on 5 vertices forces K5
        if comp.len() == 5 {
            profile.k5_vertices.union_with(&comp);
            profile.complete_k5_components.push(comp);
        } else {
            profile.residue_counts[comp.len() % 4] += 1;
            profile.other_components.push(comp);
        }
    }
    Ok(profile)
}

/// Certificate for a 4-regular graph of order divisible by 4.
///
/// Recursive: whenever some proper nonempty family of components has total
/// order divisible by 4, both sides are 4-regular of order divisible by 4, so
/// they are certified separately and joined (a 4-regular graph has an even
/// edge count). Otherwise the graph is `4·K5`, certified by joining two copies
/// of a two-part certificate of `2·K5`, or an independent set of exactly `n/4`
/// vertices is assembled from one vertex per `K5` and up to `⌈|C|/4⌉` vertices
/// of a Brooks color class of every other component `C`.
pub fn four_regular_certificate(g: &Graph) -> Result<BalanceCertificate> {
    if g.regular_degree() != Some(4) {
        return Err(Error::Inapplicable("graph is not 4-regular".into()));
    }
    if !g.n().is_multiple_of(4) {
        return Err(Error::Inapplicable(format!("order {} is not divisible by 4", g.n())));
    }
    let cert = build_four_regular(g)?;
    ensure_valid(g, cert, "4-regular certificate")
}

fn build_four_regular(g: &Graph) -> Result<BalanceCertificate> {
    let comps = g.components();
    if let Some(chosen) = split_by_order(&comps) {
        let mut side = VertexSet::empty(g.n());
        for &i in &chosen {
            side.union_with(&comps[i]);
        }
        let left = g.induced_subgraph(&side);
        let right = g.remove_vertices(&side);
        let cl = build_four_regular(&left.graph)?;
        let cr = build_four_regular(&right.graph)?;
        let joined = join_certificates(&left.graph, &cl, &right.graph, &cr)?;
        let original: Vec<usize> = left.original.iter().chain(&right.original).copied().collect();
        return Ok(joined.pull_back(&original, g.n()));
    }

    let profile = component_profile(g)?;
    debug_assert!(comps.len() == 1 || profile.residue_counts[0] == 0);
    if profile.k5_count() == 4 && profile.other_components.is_empty() {
        return four_k5_certificate(g, &profile.complete_k5_components);
    }
    assemble_independent_set(g, &profile)
}

/// A nonempty proper family of components (as indices) whose orders sum to `0 mod 4`.
///
/// Only families avoiding the last component are searched: the complement of
/// a family containing it is such a family too, since the total is `0 mod 4`.
fn split_by_order(comps: &[VertexSet]) -> Option<Vec<usize>> {
    let mut reach: [Option<Vec<usize>>; 4] = Default::default();
    for (i, comp) in comps.iter().enumerate().take(comps.len().saturating_sub(1)) {
        let r = comp.len() % 4;
        let mut next = reach.clone();
        if next[r].is_none() {
            next[r] = Some(vec![i]);
        }
        for (residue, family) in reach.iter().enumerate() {
            if let Some(family) = family {
                let target = (residue + r) % 4;
                if next[target].is_none() {
                    let mut f = family.clone();
                    f.push(i);
                    next[target] = Some(f);
                }
            }
        }
        reach = next;
        if reach[0].is_some() {
            break;
        }
    }
    reach[0].take()
}

/// `4·K5`: in each pair of `K5`s take `W` = the first, `X` = one vertex of the
/// first and two of the second (both split 20 edges into 10 + 10), then join.
fn four_k5_certificate(g: &Graph, k5s: &[VertexSet]) -> Result<BalanceCertificate> {
    let half = |a: &VertexSet, b: &VertexSet| -> Result<(Graph, Vec<usize>, BalanceCertificate)> {
        let sub = g.induced_subgraph(&a.union(b));
        let local = |v: usize| sub.original.binary_search(&v).expect("vertex is in the pair");
        let n = sub.graph.n();
        let internal = VertexSet::from_vertices(n, a.iter().map(local));
        let b_first_two: Vec<usize> = b.iter().take(2).collect();
        let external = VertexSet::from_vertices(
            n,
            std::iter::once(local(a.first().unwrap())).chain(b_first_two.into_iter().map(local)),
        );
        let cert = ensure_valid(&sub.graph, BalanceCertificate::TwoPart { internal, external }, "2·K5 half")?;
        Ok((sub.graph, sub.original, cert))
    };
    let (h1, o1, c1) = half(&k5s[0], &k5s[1])?;
    let (h2, o2, c2) = half(&k5s[2], &k5s[3])?;
    let joined = join_certificates(&h1, &c1, &h2, &c2)?;
    let original: Vec<usize> = o1.into_iter().chain(o2).collect();
    Ok(joined.pull_back(&original, g.n()))
}

/// Independent set of exactly `n/4` vertices drawn component by component.
///
/// Every component starts at its largest guaranteed contribution (1 for `K5`,
/// `⌈|C|/4⌉` otherwise); the surplus is removed one vertex at a time from the
/// component currently contributing most, lowest index first on ties.
fn assemble_independent_set(g: &Graph, profile: &ComponentProfile) -> Result<BalanceCertificate> {
    let n = g.n();
    let target = n / 4;
    let mut pools: Vec<Vec<usize>> = Vec::new();
    for k5 in &profile.complete_k5_components {
        pools.push(vec![k5.first().unwrap()]);
    }
    for comp in &profile.other_components {
        let sub = g.induced_subgraph(comp);
        let need = comp.len().div_ceil(4);
        let local = independent_set_of_size(&sub.graph, need)?;
        pools.push(local.iter().map(|v| sub.original[v]).collect());
    }

    let mut take: Vec<usize> = pools.iter().map(Vec::len).collect();
    let total: usize = take.iter().sum();
    if total < target {
        return Err(Error::ConstructionFailed(format!(
            "components supply at most {total} independent vertices, need {target} \
             (K5 count {}, residues {:?})",
            profile.k5_count(),
            profile.residue_counts
        )));
    }
    for _ in 0..total - target {
        let (i, _) =
            take.iter().enumerate().max_by_key(|&(i, &t)| (t, std::cmp::Reverse(i))).expect("at least one component");
        take[i] -= 1;
    }

    let independent =
        VertexSet::from_vertices(n, pools.iter().zip(&take).flat_map(|(pool, &t)| pool[..t].iter().copied()));
    ensure_valid(g, BalanceCertificate::SimplyBalanced { independent }, "assembled independent set")
}
