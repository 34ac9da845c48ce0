//! Structure of singular graphs read off the 0-core distance partition of
//! the adjacency matrix: slim graphs, minimal configurations and
//! coalescence of slim graphs.

use serde::Serialize;

use crate::cdp::{compute_cdp, CoreDistancePartition};
use crate::entropy::{entropy_bounds, EntropyReport, LogBase};
use crate::error::{CoalesceFailure, Error, Result};
use crate::graph::{coalesce, Graph, VertexSet};
use crate::spectral::{nullity, Spectrum, Tolerances, UniversalParams};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingularReport {
    /// Nullity of the adjacency matrix.
    pub eta: usize,
    pub is_singular: bool,
    /// `|CV_0|`.
    pub core_graph_order: usize,
    /// Nullity of the subgraph induced on `CV_0`.
    pub eta_core_graph: usize,
    /// `CFV_0`.
    pub periphery: VertexSet,
    /// 0-CDP has at most two blocks.
    pub slim: bool,
    /// Every vertex is 0-core, so the 0-CDP has a single block. Such graphs
    /// are counted as slim.
    pub all_core: bool,
    pub minimal_configuration: bool,
    pub bipartite_mc: bool,
    /// Entropy of the 0-CDP; absent for non-singular graphs.
    pub i0: Option<EntropyReport>,
    #[serde(skip)]
    pub cdp: Option<CoreDistancePartition>,
}

/// Full singular-structure analysis of a connected graph.
pub fn singular_report(g: &Graph, base: LogBase, tol: &Tolerances) -> Result<SingularReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let spectrum = Spectrum::new(g, &UniversalParams::ADJACENCY, tol)?;
    let Some(zero) = spectrum.cluster_at(0.0) else {
        return Ok(SingularReport {
            eta: 0,
            is_singular: false,
            core_graph_order: 0,
            eta_core_graph: 0,
            periphery: VertexSet::empty(),
            slim: false,
            all_core: false,
            minimal_configuration: false,
            bipartite_mc: false,
            i0: None,
            cdp: None,
        });
    };
    let eta = zero.multiplicity;
    let cs = spectrum.core_set(zero)?;
    let cdp = compute_cdp(g, &cs)?;
    let core_graph = g.induced_subgraph(&cs.core).expect("core is non-empty");
    let eta_core_graph = nullity(&core_graph, tol)?;
    let periphery = cs.core_forbidden.clone();
    let n = g.order();
    let minimal_configuration = n == 1
        || (n >= 3
            && eta == 1
            && g.is_independent(&periphery)
            && periphery.len() + 1 == eta_core_graph);
    Ok(SingularReport {
        eta,
        is_singular: true,
        core_graph_order: cs.core.len(),
        eta_core_graph,
        periphery,
        slim: cdp.blocks.len() <= 2,
        all_core: cdp.blocks.len() == 1,
        minimal_configuration,
        bipartite_mc: minimal_configuration && g.is_bipartite(),
        i0: Some(EntropyReport::for_cdp(&cdp, base)?),
        cdp: Some(cdp),
    })
}

fn singular_only(g: &Graph, tol: &Tolerances) -> Result<SingularReport> {
    let report = singular_report(g, LogBase::E, tol)?;
    if !report.is_singular {
        return Err(Error::NotSingular);
    }
    Ok(report)
}

/// A connected singular graph is slim when its 0-core-forbidden vertices are
/// exactly the neighbours of the 0-core, i.e. the 0-CDP has at most two
/// blocks.
pub fn is_slim(g: &Graph, tol: &Tolerances) -> Result<bool> {
    Ok(singular_only(g, tol)?.slim)
}

/// `K1`, or `n ≥ 3` with nullity 1, an edgeless periphery and
/// `|periphery| + 1 = η(F)` for the core graph `F`.
pub fn is_minimal_configuration(g: &Graph, tol: &Tolerances) -> Result<(bool, SingularReport)> {
    let report = singular_report(g, LogBase::E, tol)?;
    Ok((report.minimal_configuration, report))
}

/// Bipartite minimal configuration. When true, also confirms that the core
/// is independent, the graph is slim and `|CV_0| = |CFV_0| + 1`.
pub fn is_bipartite_mc(g: &Graph, tol: &Tolerances) -> Result<bool> {
    let report = singular_report(g, LogBase::E, tol)?;
    if !report.bipartite_mc {
        return Ok(false);
    }
    let core = report.periphery.complement(g.order());
    if !g.is_independent(&core) || !report.slim || core.len() != report.periphery.len() + 1 {
        return Err(Error::Invariant(format!(
            "bipartite minimal configuration with core {core} and periphery {} breaks the partite structure",
            report.periphery
        )));
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlimEntropyCheck {
    pub slim: bool,
    pub i0: f64,
    pub lower_bound: f64,
    pub at_minimum: bool,
    /// `slim ⇔ at_minimum`.
    pub consistent: bool,
}

/// Compares slimness with `I_0` sitting at its lower bound.
pub fn slim_entropy_check(g: &Graph, base: LogBase, tol: &Tolerances) -> Result<SlimEntropyCheck> {
    let report = singular_report(g, base, tol)?;
    let Some(i0) = report.i0 else {
        return Err(Error::NotSingular);
    };
    let lower_bound = entropy_bounds(g.order(), report.core_graph_order, base)?.lower;
    let at_minimum = (i0.value - lower_bound).abs() <= 1e-9;
    Ok(SlimEntropyCheck {
        slim: report.slim,
        i0: i0.value,
        lower_bound,
        at_minimum,
        consistent: report.slim == at_minimum,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoalescenceSide {
    pub n: usize,
    pub eta: usize,
    pub core_size: usize,
    pub i0: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoalescenceReport {
    #[serde(serialize_with = "serialize_graph")]
    pub graph: Graph,
    pub h1: CoalescenceSide,
    pub h2: CoalescenceSide,
    pub result: CoalescenceSide,
    /// `η(H1∘H2) = η(H1) + η(H2) - 1`.
    pub eta_formula_holds: bool,
    /// `|CV_0(H1∘H2)| = k1 + k2 - 1`.
    pub core_formula_holds: bool,
    pub result_slim: bool,
    /// `min(I_0(H1), I_0(H2)) ≤ I_0(H1∘H2)`.
    pub min_bound_holds: bool,
    /// `I_0(H1∘H2)` lies between `I_0(H1)` and `I_0(H2)`. Reported for
    /// inspection; not implied by the preconditions.
    pub between: bool,
}

fn serialize_graph<S: serde::Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Graph", 2)?;
    st.serialize_field("n", &g.order())?;
    st.serialize_field("edges", &g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())?;
    st.end()
}

fn check_side(which: u8, h: &Graph, v: usize, base: LogBase, tol: &Tolerances) -> Result<(SingularReport, CoalescenceSide)> {
    let fail = |failure| Error::Coalescence { graph: which, failure };
    if v == 0 || v > h.order() {
        return Err(fail(CoalesceFailure::VertexOutOfRange(v)));
    }
    if !h.is_connected() {
        return Err(fail(CoalesceFailure::Disconnected));
    }
    let report = singular_report(h, base, tol)?;
    if !report.is_singular {
        return Err(fail(CoalesceFailure::NotSingular));
    }
    if !report.slim {
        return Err(fail(CoalesceFailure::NotSlim));
    }
    if report.periphery.contains(v) {
        return Err(fail(CoalesceFailure::NotCoreVertex(v)));
    }
    if h.is_cut_vertex(v) {
        return Err(fail(CoalesceFailure::CutVertex(v)));
    }
    let side = side_of(h, &report);
    Ok((report, side))
}

fn side_of(g: &Graph, report: &SingularReport) -> CoalescenceSide {
    CoalescenceSide {
        n: g.order(),
        eta: report.eta,
        core_size: if report.is_singular { report.core_graph_order } else { 0 },
        i0: report.i0.as_ref().map_or(0.0, |r| r.value),
    }
}

/// Coalesces two slim singular graphs at 0-core, non-cut vertices and checks
/// the nullity, core-size, slimness and entropy relations of the result.
pub fn coalescence_report(
    h1: &Graph,
    v1: usize,
    h2: &Graph,
    v2: usize,
    base: LogBase,
    tol: &Tolerances,
) -> Result<CoalescenceReport> {
    let (_, s1) = check_side(1, h1, v1, base, tol)?;
    let (_, s2) = check_side(2, h2, v2, base, tol)?;
    let graph = coalesce(h1, v1, h2, v2)?;
    let report = singular_report(&graph, base, tol)?;
    let result = side_of(&graph, &report);
    let lo = s1.i0.min(s2.i0);
    let hi = s1.i0.max(s2.i0);
    let slack = 1e-12;
    Ok(CoalescenceReport {
        eta_formula_holds: s1.eta + s2.eta >= 1 && result.eta == s1.eta + s2.eta - 1,
        core_formula_holds: result.core_size == s1.core_size + s2.core_size - 1,
        result_slim: report.is_singular && report.slim,
        min_bound_holds: lo <= result.i0 + slack,
        between: lo <= result.i0 + slack && result.i0 <= hi + slack,
        graph,
        h1: s1,
        h2: s2,
        result,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_path};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn slim_examples() {
        assert!(is_slim(&make_path(3).unwrap(), &tol()).unwrap());
        assert!(is_slim(&make_path(5).unwrap(), &tol()).unwrap());
        let c4 = singular_report(&make_cycle(4).unwrap(), LogBase::E, &tol()).unwrap();
        assert!(c4.slim && c4.all_core);
        assert_eq!(c4.eta, 2);
        assert!(matches!(is_slim(&make_complete(3).unwrap(), &tol()), Err(Error::NotSingular)));
        let split = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert!(matches!(is_slim(&split, &tol()), Err(Error::Disconnected)));
    }

    #[test]
    fn p3_report() {
        let r = singular_report(&make_path(3).unwrap(), LogBase::E, &tol()).unwrap();
        assert_eq!(r.eta, 1);
        assert_eq!(r.periphery, VertexSet::new(vec![2]));
        assert_eq!(r.core_graph_order, 2);
        assert_eq!(r.eta_core_graph, 2);
        assert!(r.minimal_configuration && r.bipartite_mc && r.slim);
    }

    #[test]
    fn minimal_configurations() {
        assert!(is_minimal_configuration(&make_path(1).unwrap(), &tol()).unwrap().0);
        assert!(is_minimal_configuration(&make_path(3).unwrap(), &tol()).unwrap().0);
        // P5: η = 1, P = {2, 4} edgeless, F = three isolated vertices, η(F) = 3
        let (mc, r) = is_minimal_configuration(&make_path(5).unwrap(), &tol()).unwrap();
        assert_eq!(r.periphery, VertexSet::new(vec![2, 4]));
        assert_eq!(r.eta_core_graph, 3);
        assert!(mc);
        // C4 has nullity 2
        assert!(!is_minimal_configuration(&make_cycle(4).unwrap(), &tol()).unwrap().0);
        assert!(!is_minimal_configuration(&make_path(2).unwrap(), &tol()).unwrap().0);
    }

    #[test]
    fn bipartite_mcs() {
        assert!(is_bipartite_mc(&make_path(3).unwrap(), &tol()).unwrap());
        assert!(is_bipartite_mc(&make_path(1).unwrap(), &tol()).unwrap());
        assert!(!is_bipartite_mc(&make_cycle(3).unwrap(), &tol()).unwrap());
    }

    #[test]
    fn p3_entropy_at_minimum() {
        let c = slim_entropy_check(&make_path(3).unwrap(), LogBase::E, &tol()).unwrap();
        let expected = -(2.0f64 / 3.0) * (2.0f64 / 3.0).ln() - (1.0f64 / 3.0) * (1.0f64 / 3.0).ln();
        assert!((c.i0 - expected).abs() < 1e-12);
        assert!((c.i0 - 0.6365).abs() < 5e-5);
        assert!(c.slim && c.at_minimum && c.consistent);
    }

    #[test]
    fn p7_is_consistent() {
        let c = slim_entropy_check(&make_path(7).unwrap(), LogBase::E, &tol()).unwrap();
        assert!(c.consistent);
        assert!(c.slim);
    }

    #[test]
    fn three_block_zero_cdp_is_not_slim() {
        // pendant path 3-4-5 hanging off a P3 core: 0-CDP has three blocks
        let g = Graph::new(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        let r = singular_report(&g, LogBase::E, &tol()).unwrap();
        assert_eq!(r.eta, 0);
        let broom = Graph::new(5, [(1, 2), (1, 3), (1, 4), (4, 5)]).unwrap();
        let r = singular_report(&broom, LogBase::E, &tol()).unwrap();
        assert!(r.is_singular);
        assert_eq!(r.cdp.unwrap().blocks.len(), 4);
        let c = slim_entropy_check(&broom, LogBase::E, &tol()).unwrap();
        assert!(!c.slim && !c.at_minimum && c.consistent);
    }

    #[test]
    fn p3_coalescence() {
        let p3 = make_path(3).unwrap();
        let r = coalescence_report(&p3, 1, &p3, 1, LogBase::E, &tol()).unwrap();
        assert_eq!(r.result.n, 5);
        assert_eq!(r.result.eta, 1);
        assert_eq!(r.result.core_size, 3);
        assert!(r.eta_formula_holds && r.core_formula_holds && r.result_slim && r.min_bound_holds);
    }

    #[test]
    fn c4_coalescence() {
        let c4 = make_cycle(4).unwrap();
        let r = coalescence_report(&c4, 1, &c4, 1, LogBase::E, &tol()).unwrap();
        assert_eq!(r.result.n, 7);
        assert_eq!(r.result.eta, 3);
        assert_eq!(r.result.core_size, 7);
        assert!(r.result_slim);
        assert!(r.eta_formula_holds && r.core_formula_holds);
        assert_eq!(r.result.i0, 0.0);
    }

    #[test]
    fn coalescence_preconditions() {
        let p3 = make_path(3).unwrap();
        let p5 = make_path(5).unwrap();
        let err = coalescence_report(&p5, 3, &p3, 1, LogBase::E, &tol()).unwrap_err();
        assert!(matches!(err, Error::Coalescence { graph: 1, failure: CoalesceFailure::CutVertex(3) }));
        let err = coalescence_report(&p3, 1, &p3, 2, LogBase::E, &tol()).unwrap_err();
        assert!(matches!(err, Error::Coalescence { graph: 2, failure: CoalesceFailure::NotCoreVertex(2) }));
        let k3 = make_complete(3).unwrap();
        let err = coalescence_report(&k3, 1, &p3, 1, LogBase::E, &tol()).unwrap_err();
        assert!(matches!(err, Error::Coalescence { graph: 1, failure: CoalesceFailure::NotSingular }));
        let err = coalescence_report(&p3, 9, &p3, 1, LogBase::E, &tol()).unwrap_err();
        assert!(matches!(err, Error::Coalescence { graph: 1, failure: CoalesceFailure::VertexOutOfRange(9) }));
    }
}
