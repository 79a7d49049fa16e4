//! Candidate cycle list over the intersection graph. The list is polynomial
//! in size and always contains an optimal common basis-extendable set, so
//! every solver restricts its search to it.

use crate::cycle::{elementary_bits, Cycle};
use crate::graph::{intersection_graph, EdgeId, Instance, VertexId};
use crate::horton::ShortestPathIndex;

/// Which pairing of shortest paths produced an even-rule candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pairing {
    /// Paths first-to-first and second-to-second endpoint.
    Parallel,
    /// Paths first-to-second and second-to-first endpoint.
    Crossed,
}

/// How a candidate cycle was formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateOrigin {
    /// Edge `(v, w)` closed through shortest paths from apex `u`.
    Odd { apex: VertexId, edge: EdgeId },
    /// Two edges joined by shortest paths between their endpoints.
    Even {
        first: EdgeId,
        second: EdgeId,
        pairing: Pairing,
    },
}

/// Deduplicated elementary cycles of the intersection graph in canonical
/// order, with per-cycle provenance and the pre-deduplication count.
#[derive(Debug, Clone)]
pub struct CandidateList {
    pub cycles: Vec<Cycle>,
    pub origins: Vec<CandidateOrigin>,
    pub raw_count: usize,
}

impl CandidateList {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Builds the candidate list of the instance's intersection graph.
///
/// Odd rule: for every vertex `u` and edge `(v, w)`, the edge plus the
/// shortest paths from `u` to both endpoints. Even rule: for every unordered
/// pair of distinct edges, both edges plus shortest paths joining their
/// endpoints, in both pairings. A formed edge set is kept only when it is a
/// single elementary cycle; degenerate combinations fall out there.
pub fn candidates_list(instance: &Instance) -> CandidateList {
    let graph = intersection_graph(instance);
    let universe = graph.universe();
    let width = universe.edge_count();
    let index = ShortestPathIndex::new(&graph);
    let edges: Vec<EdgeId> = graph.edge_set().ones().collect();

    let mut raw: Vec<(Cycle, CandidateOrigin)> = Vec::new();
    let mut push = |bits: crate::bits::BitVec, origin: CandidateOrigin| {
        if !bits.is_zero() && elementary_bits(universe, &bits) {
            let cycle = Cycle::try_new(universe, bits).expect("elementary implies cycle");
            raw.push((cycle, origin));
        }
    };

    // odd rule
    for apex in 0..graph.vertex_count() {
        for &e in &edges {
            let (v, w) = universe.endpoints(e);
            let (Some(pv), Some(pw)) = (
                index.path_edges(width, apex, v),
                index.path_edges(width, apex, w),
            ) else {
                continue;
            };
            let mut bits = pv.or(&pw);
            bits.set(e, true);
            push(bits, CandidateOrigin::Odd { apex, edge: e });
        }
    }

    // even rule
    for (i, &e1) in edges.iter().enumerate() {
        let (u, v) = universe.endpoints(e1);
        for &e2 in &edges[i + 1..] {
            let (w, x) = universe.endpoints(e2);
            for (pairing, a_target, b_target) in [
                (Pairing::Parallel, w, x),
                (Pairing::Crossed, x, w),
            ] {
                let (Some(pa), Some(pb)) = (
                    index.path_edges(width, u, a_target),
                    index.path_edges(width, v, b_target),
                ) else {
                    continue;
                };
                let mut bits = pa.or(&pb);
                bits.set(e1, true);
                bits.set(e2, true);
                push(
                    bits,
                    CandidateOrigin::Even {
                        first: e1,
                        second: e2,
                        pairing,
                    },
                );
            }
        }
    }

    let raw_count = raw.len();
    // dedupe by cycle keeping the first origin in generation order
    let mut seen = std::collections::HashSet::new();
    let mut unique: Vec<(Cycle, CandidateOrigin)> = Vec::new();
    for (cycle, origin) in raw {
        if seen.insert(cycle.bits().clone()) {
            unique.push((cycle, origin));
        }
    }
    unique.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let (cycles, origins) = unique.into_iter().unzip();
    CandidateList {
        cycles,
        origins,
        raw_count,
    }
}

/// The sublist of cycles with weight exactly `weight`, order preserved.
pub fn filter_by_weight(list: &CandidateList, weight: usize) -> CandidateList {
    let mut cycles = Vec::new();
    let mut origins = Vec::new();
    for (c, &o) in list.cycles.iter().zip(&list.origins) {
        if c.weight() == weight {
            cycles.push(c.clone());
            origins.push(o);
        }
    }
    CandidateList {
        cycles,
        origins,
        raw_count: list.raw_count,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{stable_set_instance, Grouping, HostGraph, ReductionSpec};
    use crate::graph::test_graphs::{k4, single, triangle};
    use crate::graph::Instance;

    #[test]
    fn single_triangle_intersection() {
        let inst = triangle();
        let list = candidates_list(&inst);
        assert_eq!(list.len(), 1);
        assert_eq!(list.cycles[0].weight(), 3);
    }

    #[test]
    fn tree_intersection_is_empty() {
        let inst = single(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(candidates_list(&inst).is_empty());
    }

    #[test]
    fn disjoint_squares_candidates() {
        let spec = ReductionSpec {
            host: HostGraph::path(3),
            cycle_length: 4,
            grouping: Grouping::PerEdge,
        };
        let inst = stable_set_instance(&spec).unwrap();
        let list = candidates_list(&inst);
        assert_eq!(list.len(), 3);
        assert!(list.cycles.iter().all(|c| c.weight() == 4));
        // one candidate per node ring, pairwise disjoint
        for (i, a) in list.cycles.iter().enumerate() {
            for b in &list.cycles[i + 1..] {
                assert!(!a.bits().intersects(b.bits()));
            }
        }
    }

    #[test]
    fn k4_weight_filter() {
        let inst = k4();
        let list = candidates_list(&inst);
        let triangles = filter_by_weight(&list, 3);
        assert_eq!(triangles.len(), 4);
        let heptagons = filter_by_weight(&list, 7);
        assert!(heptagons.is_empty());
    }

    #[test]
    fn raw_count_within_bound() {
        let inst = k4();
        let list = candidates_list(&inst);
        let g = crate::graph::intersection_graph(&inst);
        let (n, m) = (g.vertex_count(), g.edge_count());
        assert!(list.raw_count <= n * m + m * (m - 1));
    }

    #[test]
    fn candidates_are_common_elementary_cycles() {
        let inst = Instance::from_edge_lists(
            4,
            vec![
                (
                    "k4".into(),
                    vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
                ),
                ("c4".into(), vec![(0, 1), (1, 2), (2, 3), (0, 3)]),
            ],
        )
        .unwrap();
        let list = candidates_list(&inst);
        // the intersection is the 4-cycle; its only elementary cycle is itself
        assert_eq!(list.len(), 1);
        assert_eq!(list.cycles[0].weight(), 4);
        for c in &list.cycles {
            for g in inst.graphs() {
                assert!(c.bits().is_subset_of(g.edge_set()));
            }
        }
    }
}
