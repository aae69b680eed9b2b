//! Hardness instances `G' = L(G) □ K4` for 4-regular `G`, and an exact
//! harness checking, on concrete inputs, that `G` is 4-edge-colorable iff
//! `α(G') = m` iff `G'` is simply balanceable.

use crate::balance::{Status, Verdict};
use crate::characterize::regular_simply_balanceable;
use crate::error::{Error, Result};
use crate::generate::complete;
use crate::graph::Graph;
use crate::search::{
    is_k_colorable, is_k_edge_colorable, max_independent_set, max_independent_set_in_clique_partition, EdgeColoring,
    SearchBudget,
};
use crate::set::VertexSet;

const COPIES: usize = 4;

/// `L(G) □ K4`, with vertex `(e, c)` at index `4e + c`.
#[derive(Debug, Clone)]
pub struct HardnessInstance {
    pub graph: Graph,
    /// Source edges in lexicographic order; edge `e` owns vertices `4e..4e + 4`.
    pub edges: Vec<(usize, usize)>,
}

impl HardnessInstance {
    pub fn vertex(&self, edge: usize, copy: usize) -> usize {
        edge * COPIES + copy
    }

    /// The `K4` copies (one per source edge) partitioning the vertices.
    pub fn fibers(&self) -> Vec<VertexSet> {
        let n = self.graph.n();
        (0..self.edges.len()).map(|e| VertexSet::from_vertices(n, (0..COPIES).map(|c| self.vertex(e, c)))).collect()
    }

    /// The independent set `{(e, color(e))}` induced by a 4-edge-coloring of the source graph.
    pub fn independent_set_from_coloring(&self, coloring: &EdgeColoring) -> Result<VertexSet> {
        if coloring.edges != self.edges || coloring.colors.iter().any(|&c| c >= COPIES) {
            return Err(Error::Precondition("edge coloring does not match the instance".into()));
        }
        Ok(VertexSet::from_vertices(
            self.graph.n(),
            coloring.colors.iter().enumerate().map(|(e, &c)| self.vertex(e, c)),
        ))
    }
}

pub fn hardness_instance(g: &Graph) -> Result<HardnessInstance> {
    if g.regular_degree() != Some(4) {
        return Err(Error::Inapplicable("hardness instances are built from 4-regular graphs".into()));
    }
    let line = g.line_graph();
    let graph = line.graph.cartesian_product(&complete(COPIES)?);
    if graph.n() != COPIES * g.m() || graph.regular_degree() != Some(9) {
        return Err(Error::ConstructionFailed("L(G) □ K4 is not 9-regular on 4m vertices".into()));
    }
    Ok(HardnessInstance { graph, edges: line.edges })
}

/// Both sides of "`h` is `p`-colorable iff `α(h □ K_p) = |V(h)|`", computed independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PColorabilityCheck {
    pub colorable: bool,
    pub alpha_product: usize,
    pub agrees: bool,
}

pub fn p_colorable_iff_alpha(h: &Graph, p: usize) -> Result<PColorabilityCheck> {
    let colorable = is_k_colorable(h, p)?.is_some();
    let product = h.cartesian_product(&complete(p)?);
    let alpha_product = max_independent_set(&product)?.len();
    Ok(PColorabilityCheck { colorable, alpha_product, agrees: colorable == (alpha_product == h.n()) })
}

#[derive(Debug, Clone)]
pub struct ReductionReport {
    /// Edge count of the source graph.
    pub m: usize,
    pub n_prime: usize,
    pub edge_colorable_4: bool,
    pub alpha_prime: usize,
    pub simply_balanceable_prime: Verdict,
    pub equivalence_ok: bool,
}

/// Runs the three legs exactly: 4-edge-colorability of `g`, `α(G')` by branching
/// on the `K4` fibers, and simple balanceability of `G'` through the regular
/// characterization. An exhausted budget in any leg is an error, not a report.
pub fn reduction_equivalence_check(g: &Graph) -> Result<ReductionReport> {
    let instance = hardness_instance(g)?;
    let m = g.m();
    let coloring = is_k_edge_colorable(g, COPIES)?;
    let alpha =
        max_independent_set_in_clique_partition(&instance.graph, &instance.fibers(), &mut SearchBudget::default())?;
    let sb = regular_simply_balanceable(&instance.graph)?;
    if sb.status == Status::Undecided {
        return Err(Error::BudgetExhausted(crate::search::DEFAULT_NODE_LIMIT));
    }

    if let Some(c) = &coloring {
        let witness = instance.independent_set_from_coloring(c)?;
        if !instance.graph.is_independent(&witness) || witness.len() != m {
            return Err(Error::ConstructionFailed("edge coloring did not map to an independent set".into()));
        }
    }

    let edge_colorable_4 = coloring.is_some();
    let alpha_full = alpha.len() == m;
    let sb_holds = sb.status == Status::Holds;
    Ok(ReductionReport {
        m,
        n_prime: instance.graph.n(),
        edge_colorable_4,
        alpha_prime: alpha.len(),
        simply_balanceable_prime: sb,
        equivalence_ok: edge_colorable_4 == alpha_full && alpha_full == sb_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{circulant, cycle, petersen};

    #[test]
    fn instance_shapes() {
        let k5 = complete(5).unwrap();
        let inst = hardness_instance(&k5).unwrap();
        assert_eq!((inst.graph.n(), inst.graph.regular_degree()), (40, Some(9)));
        let oct = circulant(6, &[1, 2]).unwrap();
        assert_eq!(hardness_instance(&oct).unwrap().graph.n(), 48);
        assert!(matches!(hardness_instance(&petersen()), Err(Error::Inapplicable(_))));
        for f in inst.fibers() {
            assert!(inst.graph.is_clique(&f));
        }
    }

    #[test]
    fn p_colorability_examples() {
        let r = p_colorable_iff_alpha(&cycle(5).unwrap(), 2).unwrap();
        assert_eq!(r, PColorabilityCheck { colorable: false, alpha_product: 4, agrees: true });
        let r = p_colorable_iff_alpha(&cycle(4).unwrap(), 2).unwrap();
        assert_eq!(r, PColorabilityCheck { colorable: true, alpha_product: 4, agrees: true });
        let r = p_colorable_iff_alpha(&complete(3).unwrap(), 3).unwrap();
        assert_eq!(r, PColorabilityCheck { colorable: true, alpha_product: 3, agrees: true });
    }

    #[test]
    fn k5_and_octahedron_chains() {
        let r = reduction_equivalence_check(&complete(5).unwrap()).unwrap();
        assert!(!r.edge_colorable_4 && r.alpha_prime < 10);
        assert_eq!(r.simply_balanceable_prime.status, Status::Fails);
        assert!(r.equivalence_ok);

        let r = reduction_equivalence_check(&circulant(6, &[1, 2]).unwrap()).unwrap();
        assert!(r.edge_colorable_4);
        assert_eq!(r.alpha_prime, 12);
        assert_eq!(r.simply_balanceable_prime.status, Status::Holds);
        assert!(r.equivalence_ok);
    }
}
