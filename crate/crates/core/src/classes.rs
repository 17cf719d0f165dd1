//! Detectors for the graph classes the regularity bounds quantify over.
//! Every failed check carries a witness: the vertex set of the forbidden
//! induced configuration, found in lexicographic scan order.

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GraphClass {
    GapFree,
    NClawFree(u32),
    CricketFree,
    ComplementChordal,
}

/// Outcome of a class check. `holds == false` implies `witness` names the
/// forbidden induced subgraph that was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub class: GraphClass,
    pub holds: bool,
    pub witness: Option<Vec<String>>,
}

impl ClassReport {
    fn pass(class: GraphClass) -> Self {
        ClassReport {
            class,
            holds: true,
            witness: None,
        }
    }

    fn fail(class: GraphClass, g: &Graph, verts: &[usize]) -> Self {
        ClassReport {
            class,
            holds: false,
            witness: Some(verts.iter().map(|&v| g.label(v).to_string()).collect()),
        }
    }

    pub fn witness_indices(&self, g: &Graph) -> Option<Vec<usize>> {
        self.witness
            .as_ref()
            .map(|w| w.iter().map(|l| g.index_of(l).unwrap()).collect())
    }
}

/// A gap is two vertex-disjoint edges with no edge between their endpoint
/// sets; equivalently an induced 2K2.
pub fn is_gap_free(g: &Graph) -> ClassReport {
    let edges = g.edges();
    for (a, &(u, v)) in edges.iter().enumerate() {
        for &(x, y) in &edges[a + 1..] {
            if u == x || u == y || v == x || v == y {
                continue;
            }
            let joined = g.has_edge(u, x)
                || g.has_edge(u, y)
                || g.has_edge(v, x)
                || g.has_edge(v, y);
            if !joined {
                return ClassReport::fail(GraphClass::GapFree, g, &[u, v, x, y]);
            }
        }
    }
    ClassReport::pass(GraphClass::GapFree)
}

/// Equivalent formulation used as a cross-check: gap-free iff the complement
/// has no induced four-cycle. Deliberately a separate code path from
/// [`is_gap_free`].
pub fn is_gap_free_via_complement(g: &Graph) -> bool {
    !has_induced_c4(&g.complement())
}

fn has_induced_c4(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in a + 1..n {
                if c == b || !g.has_edge(b, c) || g.has_edge(a, c) {
                    continue;
                }
                for d in a + 1..n {
                    if d == b || d == c {
                        continue;
                    }
                    if g.has_edge(c, d) && g.has_edge(d, a) && !g.has_edge(b, d) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// No induced K_{1,n}; the witness lists the root first, then the leaves.
pub fn is_n_claw_free(g: &Graph, n: u32) -> Result<ClassReport> {
    if n < 2 {
        return Err(Error::BadClawParameter(n));
    }
    let k = n as usize;
    for root in 0..g.n() {
        let nbrs: Vec<usize> = g.neighbors(root).collect();
        if nbrs.len() < k {
            continue;
        }
        let mut leaves = Vec::with_capacity(k);
        if pick_independent_leaves(g, &nbrs, 0, k, &mut leaves) {
            let mut verts = vec![root];
            verts.extend_from_slice(&leaves);
            return Ok(ClassReport::fail(GraphClass::NClawFree(n), g, &verts));
        }
    }
    Ok(ClassReport::pass(GraphClass::NClawFree(n)))
}

fn pick_independent_leaves(
    g: &Graph,
    nbrs: &[usize],
    start: usize,
    need: usize,
    acc: &mut Vec<usize>,
) -> bool {
    if need == 0 {
        return true;
    }
    for i in start..nbrs.len() {
        let v = nbrs[i];
        if acc.iter().any(|&u| g.has_edge(u, v)) {
            continue;
        }
        acc.push(v);
        if pick_independent_leaves(g, nbrs, i + 1, need - 1, acc) {
            return true;
        }
        acc.pop();
    }
    false
}

pub fn is_claw_free(g: &Graph) -> ClassReport {
    is_n_claw_free(g, 3).expect("3 >= 2")
}

/// The cricket is the 5-vertex graph with edges w1w3, w2w3, w3w4, w3w5,
/// w4w5. The witness is listed in that pattern order.
pub fn is_cricket_free(g: &Graph) -> ClassReport {
    const PATTERN: [(usize, usize); 5] = [(0, 2), (1, 2), (2, 3), (2, 4), (3, 4)];
    let n = g.n();
    let mut subset = Vec::with_capacity(5);
    fn subsets(
        n: usize,
        start: usize,
        subset: &mut Vec<usize>,
        g: &Graph,
    ) -> Option<Vec<usize>> {
        if subset.len() == 5 {
            return match_cricket(g, subset);
        }
        for v in start..n {
            subset.push(v);
            if let Some(w) = subsets(n, v + 1, subset, g) {
                return Some(w);
            }
            subset.pop();
        }
        None
    }
    fn match_cricket(g: &Graph, verts: &[usize]) -> Option<Vec<usize>> {
        // Degree multiset inside the subset must be 4,2,2,1,1 with 5 edges.
        let mut perm = [0usize; 5];
        let mut used = [false; 5];
        fn try_assign(
            g: &Graph,
            verts: &[usize],
            perm: &mut [usize; 5],
            used: &mut [bool; 5],
            pos: usize,
        ) -> bool {
            if pos == 5 {
                return PATTERN.iter().all(|&(i, j)| g.has_edge(perm[i], perm[j]))
                    && count_edges(g, verts) == 5;
            }
            for i in 0..5 {
                if !used[i] {
                    used[i] = true;
                    perm[pos] = verts[i];
                    if try_assign(g, verts, perm, used, pos + 1) {
                        return true;
                    }
                    used[i] = false;
                }
            }
            false
        }
        fn count_edges(g: &Graph, verts: &[usize]) -> usize {
            let mut c = 0;
            for (i, &u) in verts.iter().enumerate() {
                for &v in &verts[i + 1..] {
                    if g.has_edge(u, v) {
                        c += 1;
                    }
                }
            }
            c
        }
        if count_edges(g, verts) != 5 {
            return None;
        }
        if try_assign(g, verts, &mut perm, &mut used, 0) {
            Some(perm.to_vec())
        } else {
            None
        }
    }
    if n >= 5 {
        if let Some(w) = subsets(n, 0, &mut subset, g) {
            return ClassReport::fail(GraphClass::CricketFree, g, &w);
        }
    }
    ClassReport::pass(GraphClass::CricketFree)
}

/// Holds iff the complement has no induced cycle of length >= 4; this is the
/// combinatorial predicate for the edge ideal having a linear resolution.
pub fn complement_chordal(g: &Graph) -> ClassReport {
    match g.complement().find_induced_cycle_at_least(4) {
        None => ClassReport::pass(GraphClass::ComplementChordal),
        Some(w) => ClassReport::fail(GraphClass::ComplementChordal, g, &w.vertices),
    }
}

/// Result of the max-degree distance check on gap-free graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DistanceCheck {
    Holds,
    /// The caller's gap-free precondition failed; this is not a
    /// counterexample to the distance bound.
    PreconditionViolated(ClassReport),
    Violated {
        center: String,
        far: String,
        distance: Option<usize>,
    },
}

/// On a gap-free graph, every vertex is within distance 2 of each
/// maximum-degree vertex. Ties are all checked, which is the stronger claim.
/// Isolated vertices are outside the bound: a gap-free graph has exactly one
/// edge-bearing component plus isolated vertices, and only the former carries
/// the edge ideal.
pub fn check_max_degree_distance(g: &Graph) -> DistanceCheck {
    let gap = is_gap_free(g);
    if !gap.holds {
        return DistanceCheck::PreconditionViolated(gap);
    }
    let max_deg = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
    if max_deg == 0 {
        return DistanceCheck::Holds;
    }
    for x in 0..g.n() {
        if g.degree(x) != max_deg {
            continue;
        }
        for y in 0..g.n() {
            if g.degree(y) == 0 {
                continue;
            }
            let d = g.distance(x, y);
            if d.is_none() || d.unwrap() > 2 {
                return DistanceCheck::Violated {
                    center: g.label(x).to_string(),
                    far: g.label(y).to_string(),
                    distance: d,
                };
            }
        }
    }
    DistanceCheck::Holds
}

/// All four standard reports at once, for the CLI.
pub fn classify(g: &Graph, claw_n: u32) -> Result<Vec<ClassReport>> {
    Ok(vec![
        is_gap_free(g),
        is_n_claw_free(g, claw_n)?,
        is_cricket_free(g),
        complement_chordal(g),
    ])
}

pub(crate) fn mask_of(verts: &[usize]) -> u64 {
    verts.iter().fold(0u64, |m, &v| m | (1 << v))
}

/// Checks that a witness really induces the claimed configuration.
pub fn witness_is_valid(g: &Graph, report: &ClassReport) -> bool {
    if report.holds {
        return report.witness.is_none();
    }
    let verts = match report.witness_indices(g) {
        Some(v) => v,
        None => return false,
    };
    if BitIter(mask_of(&verts)).count() != verts.len() {
        return false;
    }
    match report.class {
        GraphClass::GapFree => {
            verts.len() == 4
                && g.has_edge(verts[0], verts[1])
                && g.has_edge(verts[2], verts[3])
                && !g.has_edge(verts[0], verts[2])
                && !g.has_edge(verts[0], verts[3])
                && !g.has_edge(verts[1], verts[2])
                && !g.has_edge(verts[1], verts[3])
        }
        GraphClass::NClawFree(n) => {
            let k = n as usize;
            verts.len() == k + 1
                && verts[1..].iter().all(|&l| g.has_edge(verts[0], l))
                && verts[1..]
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| verts[1 + i + 1..].iter().all(|&v| !g.has_edge(u, v)))
        }
        GraphClass::CricketFree => {
            const PATTERN: [(usize, usize); 5] = [(0, 2), (1, 2), (2, 3), (2, 4), (3, 4)];
            if verts.len() != 5 {
                return false;
            }
            let mut edges = 0;
            for i in 0..5 {
                for j in i + 1..5 {
                    if g.has_edge(verts[i], verts[j]) {
                        edges += 1;
                    }
                }
            }
            edges == 5 && PATTERN.iter().all(|&(i, j)| g.has_edge(verts[i], verts[j]))
        }
        GraphClass::ComplementChordal => {
            let c = g.complement();
            crate::graph::CycleWitness {
                vertices: verts.clone(),
            }
            .validate(&c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn two_disjoint_edges_are_the_minimal_gap() {
        let g = fixtures::two_k2();
        let r = is_gap_free(&g);
        assert!(!r.holds);
        assert!(witness_is_valid(&g, &r));
        assert_eq!(r.witness.as_ref().unwrap().len(), 4);
    }

    #[test]
    fn complete_graphs_are_gap_free() {
        for n in 2..=6 {
            assert!(is_gap_free(&fixtures::complete(n)).holds);
        }
    }

    #[test]
    fn hub_fixture_verdict_from_exhaustive_pair_scan() {
        // Every pair of disjoint edges in the hub fixture is joined through
        // the hub, so the scan finds no gap.
        let g = fixtures::hub_with_pendants();
        let r = is_gap_free(&g);
        assert!(r.holds);
        assert_eq!(r.holds, is_gap_free_via_complement(&g));
    }

    #[test]
    fn gap_free_agrees_with_complement_c4_scan_on_catalog() {
        for g in crate::catalog::catalog_up_to(6) {
            assert_eq!(
                is_gap_free(&g).holds,
                is_gap_free_via_complement(&g),
                "two routes disagree on {g:?}"
            );
        }
    }

    #[test]
    fn claw_detection() {
        let g = fixtures::star(3);
        let r = is_n_claw_free(&g, 3).unwrap();
        assert!(!r.holds);
        assert!(witness_is_valid(&g, &r));
        assert!(is_n_claw_free(&fixtures::triangle(), 3).unwrap().holds);
    }

    #[test]
    fn triangle_pendants_fixture_has_a_claw() {
        let g = fixtures::triangle_with_pendants();
        let r = is_n_claw_free(&g, 3).unwrap();
        assert!(!r.holds, "x with three pairwise non-adjacent pendants");
        assert!(witness_is_valid(&g, &r));
    }

    #[test]
    fn claw_parameter_below_two_is_rejected() {
        assert!(is_n_claw_free(&fixtures::triangle(), 1).is_err());
    }

    #[test]
    fn cricket_detection() {
        let g = fixtures::cricket();
        let r = is_cricket_free(&g);
        assert!(!r.holds);
        assert!(witness_is_valid(&g, &r));
        assert!(is_cricket_free(&fixtures::cycle(5)).holds);
    }

    #[test]
    fn claw_free_implies_cricket_free_on_catalog() {
        for g in crate::catalog::catalog_up_to(5) {
            if is_claw_free(&g).holds {
                assert!(is_cricket_free(&g).holds, "implication fails on {g:?}");
            }
        }
    }

    #[test]
    fn complement_chordal_checks() {
        assert!(complement_chordal(&fixtures::complete(4)).holds);
        let r = complement_chordal(&fixtures::two_k2());
        assert!(!r.holds);
        assert!(witness_is_valid(&fixtures::two_k2(), &r));
        let c5 = complement_chordal(&fixtures::cycle(5));
        assert!(!c5.holds);
    }

    #[test]
    fn max_degree_distance_on_star() {
        assert_eq!(
            check_max_degree_distance(&fixtures::star(4)),
            DistanceCheck::Holds
        );
    }

    #[test]
    fn max_degree_distance_reports_precondition_on_p5() {
        let g = fixtures::path(5);
        match check_max_degree_distance(&g) {
            DistanceCheck::PreconditionViolated(r) => assert!(!r.holds),
            other => panic!("expected precondition report, got {other:?}"),
        }
    }

    #[test]
    fn max_degree_distance_holds_on_catalog_gap_free() {
        for g in crate::catalog::catalog_up_to(6) {
            if g.edge_count() == 0 {
                continue;
            }
            if is_gap_free(&g).holds {
                assert_eq!(
                    check_max_degree_distance(&g),
                    DistanceCheck::Holds,
                    "distance bound failed on {g:?}"
                );
            }
        }
    }

    #[test]
    fn witnesses_reinduce_to_the_claimed_configuration_on_catalog() {
        for g in crate::catalog::catalog_up_to(5) {
            for r in [
                is_gap_free(&g),
                is_claw_free(&g),
                is_cricket_free(&g),
                complement_chordal(&g),
            ] {
                assert!(witness_is_valid(&g, &r), "bad witness for {g:?}: {r:?}");
            }
        }
    }
}
