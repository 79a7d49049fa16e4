//! Exact polynomial solvers for the small-cycle regimes: triangles only, and
//! triangles plus squares on subcubic graphs. Both replace the matroid
//! oracle with linear algebra: a triangle set extends to minimum cycle bases
//! exactly when it is linearly independent, and a square is addable exactly
//! when it stays outside the span of the chosen squares and all triangles of
//! each graph.

use std::time::Instant;

use crate::candidates::{candidates_list, filter_by_weight, CandidateList};
use crate::cycle::{Cycle, Gf2Basis};
use crate::graph::{instance_stats, Graph, Instance};
use crate::solver::{Method, SolveError, SolveReport};

/// All triangles of a graph, canonical order.
pub fn triangles_of(graph: &Graph) -> Vec<Cycle> {
    let universe = graph.universe();
    let mut out = Vec::new();
    for u in 0..graph.vertex_count() {
        for &(v, _) in graph.neighbors(u) {
            if v <= u {
                continue;
            }
            for &(w, _) in graph.neighbors(v) {
                if w <= v {
                    continue;
                }
                if let Some(e) = universe.edge_id(u, w) {
                    if graph.contains_edge(e) {
                        out.push(Cycle::from_vertex_ring(universe, &[u, v, w]));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// The linear span of a graph's triangles, for membership queries.
#[derive(Debug, Clone)]
pub struct TriangleSpan {
    triangles: Vec<Cycle>,
    basis: Gf2Basis,
}

impl TriangleSpan {
    pub fn new(graph: &Graph) -> Self {
        let triangles = triangles_of(graph);
        let mut basis = Gf2Basis::new(graph.universe().edge_count());
        for t in &triangles {
            basis.try_insert(t);
        }
        Self { triangles, basis }
    }

    pub fn triangles(&self) -> &[Cycle] {
        &self.triangles
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn spans(&self, c: &Cycle) -> bool {
        self.basis.spans(c)
    }
}

/// Drops every weight-4 cycle that lies in the span of some graph's
/// triangles; such a square can never join a basis-extendable set. Other
/// weights pass through unchanged.
pub fn remove_triangle_spanned_squares(
    list: &CandidateList,
    instance: &Instance,
) -> CandidateList {
    let spans: Vec<TriangleSpan> = instance.graphs().iter().map(TriangleSpan::new).collect();
    let mut cycles = Vec::new();
    let mut origins = Vec::new();
    for (c, &o) in list.cycles.iter().zip(&list.origins) {
        if c.weight() == 4 && spans.iter().any(|s| s.spans(c)) {
            continue;
        }
        cycles.push(c.clone());
        origins.push(o);
    }
    CandidateList {
        cycles,
        origins,
        raw_count: list.raw_count,
    }
}

fn check_max_basis_cycle(instance: &Instance, limit: usize) -> Result<(), SolveError> {
    let stats = instance_stats(instance);
    for s in &stats.per_graph {
        if s.max_basis_cycle > limit {
            return Err(SolveError::BasisCycleTooLarge {
                name: s.name.clone(),
                value: s.max_basis_cycle,
                limit,
            });
        }
    }
    Ok(())
}

fn check_max_degree(instance: &Instance, limit: usize) -> Result<(), SolveError> {
    let stats = instance_stats(instance);
    for s in &stats.per_graph {
        if s.max_degree > limit {
            return Err(SolveError::DegreeTooLarge {
                name: s.name.clone(),
                value: s.max_degree,
                limit,
            });
        }
    }
    Ok(())
}

/// Greedy over the weight-3 candidates by linear independence.
fn max_triangle_set(list: &CandidateList, width: usize) -> Vec<Cycle> {
    let triangles = filter_by_weight(list, 3);
    let mut basis = Gf2Basis::new(width);
    for t in &triangles.cycles {
        basis.try_insert(t);
    }
    basis.members().to_vec()
}

/// Exact solver when every basis cycle of every graph is a triangle: a
/// maximum linearly independent set of the common triangles.
pub fn solve_gamma3(instance: &Instance) -> Result<SolveReport, SolveError> {
    check_max_basis_cycle(instance, 3)?;
    let started = Instant::now();
    let list = candidates_list(instance);
    let width = instance.universe().edge_count();
    let solution = max_triangle_set(&list, width);
    Ok(finish(instance, Method::Gamma3, solution, started))
}

/// Exact solver for subcubic graphs whose basis cycles are triangles and
/// squares: maximum triangles by linear independence, then squares kept
/// outside the span of the accepted squares and each graph's triangles; the
/// two parts are jointly feasible.
pub fn solve_gamma4_delta3(instance: &Instance) -> Result<SolveReport, SolveError> {
    check_max_degree(instance, 3)?;
    check_max_basis_cycle(instance, 4)?;
    let started = Instant::now();
    let list = candidates_list(instance);
    let width = instance.universe().edge_count();

    let triangle_part = max_triangle_set(&list, width);

    let squares = remove_triangle_spanned_squares(&filter_by_weight(&list, 4), instance);
    let mut quotient_bases: Vec<Gf2Basis> = instance
        .graphs()
        .iter()
        .map(|g| {
            let mut basis = Gf2Basis::new(width);
            for t in triangles_of(g) {
                basis.try_insert(&t);
            }
            basis
        })
        .collect();
    let mut square_part = Vec::new();
    for s in &squares.cycles {
        if quotient_bases.iter().all(|b| !b.spans(s)) {
            for b in &mut quotient_bases {
                assert!(b.try_insert(s));
            }
            square_part.push(s.clone());
        }
    }

    let mut solution = triangle_part;
    solution.extend(square_part);
    Ok(finish(instance, Method::Gamma4Delta3, solution, started))
}

fn finish(
    instance: &Instance,
    method: Method,
    mut solution: Vec<Cycle>,
    started: Instant,
) -> SolveReport {
    solution.sort_unstable();
    let witnesses = instance
        .graphs()
        .iter()
        .map(|g| {
            crate::horton::witness_basis(g, &solution).expect("solution extends in every graph")
        })
        .collect();
    SolveReport {
        solution,
        method,
        approximate: false,
        requested_size: None,
        witnesses,
        stats: instance_stats(instance),
        oracle_runs: 0,
        runtime: started.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::conn_gadget;
    use crate::graph::test_graphs::{c4, k4, k4_and_c4, single};
    use crate::graph::Instance;

    fn identical_pair(n: usize, edges: &[(usize, usize)]) -> Instance {
        Instance::from_edge_lists(
            n,
            vec![("a".into(), edges.to_vec()), ("b".into(), edges.to_vec())],
        )
        .unwrap()
    }

    #[test]
    fn triangles_of_examples() {
        assert_eq!(triangles_of(k4().graph(0)).len(), 4);
        assert!(triangles_of(c4().graph(0)).is_empty());
        let gadget = conn_gadget(4).unwrap();
        assert_eq!(triangles_of(gadget.graph(0)).len(), 8);
    }

    #[test]
    fn gamma3_on_identical_k4() {
        let inst = identical_pair(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let report = solve_gamma3(&inst).unwrap();
        assert_eq!(report.size(), 3);
        assert!(crate::solver::verify(&inst, &report.solution)
            .unwrap()
            .feasible);
    }

    #[test]
    fn gamma3_on_identical_triangles() {
        let inst = identical_pair(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(solve_gamma3(&inst).unwrap().size(), 1);
    }

    #[test]
    fn gamma3_k4_with_missing_edge() {
        let inst = Instance::from_edge_lists(
            4,
            vec![
                (
                    "full".into(),
                    vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
                ),
                (
                    "minus".into(),
                    vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
                ),
            ],
        )
        .unwrap();
        let report = solve_gamma3(&inst).unwrap();
        assert_eq!(report.size(), 2);
    }

    #[test]
    fn gamma3_rejects_large_basis_cycles() {
        let inst = identical_pair(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        match solve_gamma3(&inst).unwrap_err() {
            SolveError::BasisCycleTooLarge { name, value, limit } => {
                assert_eq!(name, "a");
                assert_eq!((value, limit), (4, 3));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn spanned_square_removal() {
        // K4 and C4: the common square is two K4 triangles summed, so removed
        let inst = k4_and_c4();
        let list = candidates_list(&inst);
        assert_eq!(list.len(), 1);
        let filtered = remove_triangle_spanned_squares(&list, &inst);
        assert!(filtered.is_empty());

        // cube graph: no triangles, nothing removed
        let cube = crate::graph::test_graphs::cube_pair();
        let list = candidates_list(&cube);
        let filtered = remove_triangle_spanned_squares(&list, &cube);
        assert_eq!(filtered.len(), list.len());
    }

    #[test]
    fn gadget_squares_survive_removal() {
        // the two rings of the connector gadget are independent of its
        // triangle span, which only contains their sum
        let gadget = conn_gadget(4).unwrap();
        let span = TriangleSpan::new(gadget.graph(0));
        assert_eq!(span.rank(), 8);
        let u = gadget.universe();
        let inner = Cycle::from_vertex_ring(u, &[0, 1, 2, 3]);
        let outer = Cycle::from_vertex_ring(u, &[4, 5, 6, 7]);
        assert!(!span.spans(&inner));
        assert!(!span.spans(&outer));
        assert!(span.spans(&crate::cycle::cycle_sum(&inner, &outer)));
    }

    #[test]
    fn gamma4_delta3_on_cube_pair() {
        let inst = crate::graph::test_graphs::cube_pair();
        let report = solve_gamma4_delta3(&inst).unwrap();
        assert_eq!(report.size(), 5);
        assert!(crate::solver::verify(&inst, &report.solution)
            .unwrap()
            .feasible);
    }

    #[test]
    fn gamma4_delta3_k4_versus_c4() {
        let report = solve_gamma4_delta3(&k4_and_c4()).unwrap();
        assert_eq!(report.size(), 0);
    }

    #[test]
    fn gamma4_delta3_triangle_and_square() {
        let edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)];
        let inst = identical_pair(7, &edges);
        let report = solve_gamma4_delta3(&inst).unwrap();
        assert_eq!(report.size(), 2);
    }

    #[test]
    fn gamma4_delta3_rejects_high_degree() {
        let inst = identical_pair(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]);
        assert!(matches!(
            solve_gamma4_delta3(&inst).unwrap_err(),
            SolveError::DegreeTooLarge { .. }
        ));
    }

    #[test]
    fn delta2_square_instance_solved_by_gamma4() {
        // degree-2 instance is fine for the subcubic solver too
        let inst = single(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let report = solve_gamma4_delta3(&inst).unwrap();
        assert_eq!(report.size(), 1);
    }
}
