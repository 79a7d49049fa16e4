//! Solvers for the maximum common basis-extendable cycle set over the
//! candidate list: exact two-graph matroid intersection, the 1/k greedy,
//! fixed-size subset search, a brute-force reference, and an auto dispatcher
//! over the tractable parameter regimes.

use std::cell::RefCell;
use std::collections::{HashMap, VecDeque};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::candidates::candidates_list;
use crate::cycle::{component_cycles, Cycle};
use crate::graph::{instance_stats, Graph, Instance, InstanceStats};
use crate::horton::{witness_basis, McbError, McbOracle, McbResult};
use crate::oracle::{BudgetError, EnumerationBudget};

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("method requires exactly 2 graphs, instance has {0}")]
    RequiresTwoGraphs(usize),
    #[error("graph {name}: largest basis cycle {value} exceeds {limit}")]
    BasisCycleTooLarge {
        name: String,
        value: usize,
        limit: usize,
    },
    #[error("graph {name}: max degree {value} exceeds {limit}")]
    DegreeTooLarge {
        name: String,
        value: usize,
        limit: usize,
    },
    #[error(transparent)]
    Budget(#[from] BudgetError),
}

/// Which algorithm produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// All degrees at most 2: intersect the per-graph component cycles.
    DeltaTwo,
    /// Triangles only, by linear independence.
    Gamma3,
    /// Triangles and squares on subcubic graphs, by quotient independence.
    Gamma4Delta3,
    /// Exact two-matroid intersection by augmenting paths.
    K2,
    /// Canonical-order greedy, a 1/k approximation.
    Greedy,
    /// Fixed-size subset search.
    Xp,
    /// Exhaustive subset search.
    Brute,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::DeltaTwo => "delta2",
            Method::Gamma3 => "gamma3",
            Method::Gamma4Delta3 => "gamma4delta3",
            Method::K2 => "k2",
            Method::Greedy => "greedy",
            Method::Xp => "xp",
            Method::Brute => "brute",
        }
    }
}

/// A solution with its per-graph witness bases and bookkeeping.
#[derive(Debug, Clone)]
pub struct SolveReport {
    /// The common cycles, canonical order.
    pub solution: Vec<Cycle>,
    pub method: Method,
    pub approximate: bool,
    /// The requested size for fixed-size search.
    pub requested_size: Option<usize>,
    /// Per graph, a minimum cycle basis containing the solution.
    pub witnesses: Vec<McbResult>,
    pub stats: InstanceStats,
    /// Modified-greedy executions across all matroid queries.
    pub oracle_runs: u64,
    pub runtime: Duration,
}

impl SolveReport {
    pub fn size(&self) -> usize {
        self.solution.len()
    }
}

/// One graph's matroid restricted to the candidate list, with memoized
/// independence queries keyed by sorted candidate indices.
pub struct RestrictedMatroid<'a> {
    oracle: McbOracle<'a>,
    ground: &'a [Cycle],
    memo: RefCell<HashMap<Vec<u32>, bool>>,
}

impl<'a> RestrictedMatroid<'a> {
    pub fn new(graph: &'a Graph, ground: &'a [Cycle]) -> Self {
        Self {
            oracle: McbOracle::new(graph),
            ground,
            memo: RefCell::new(HashMap::new()),
        }
    }

    /// Independence of the subset given by sorted, duplicate-free indices.
    pub fn is_independent(&self, ids: &[u32]) -> bool {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        if let Some(&cached) = self.memo.borrow().get(ids) {
            return cached;
        }
        let subset: Vec<Cycle> = ids.iter().map(|&i| self.ground[i as usize].clone()).collect();
        let result = self
            .oracle
            .is_independent(&subset)
            .expect("ground cycles lie in the graph");
        self.memo.borrow_mut().insert(ids.to_vec(), result);
        result
    }

    pub fn runs(&self) -> u64 {
        self.oracle.runs()
    }
}

fn common_independent(matroids: &[RestrictedMatroid<'_>], ids: &[u32]) -> bool {
    matroids.iter().all(|m| m.is_independent(ids))
}

fn with_inserted(sorted: &[u32], value: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(sorted.len() + 1);
    let split = sorted.partition_point(|&x| x < value);
    out.extend_from_slice(&sorted[..split]);
    out.push(value);
    out.extend_from_slice(&sorted[split..]);
    out
}

fn finish_report(
    instance: &Instance,
    method: Method,
    approximate: bool,
    requested_size: Option<usize>,
    mut solution: Vec<Cycle>,
    oracle_runs: u64,
    started: Instant,
) -> SolveReport {
    solution.sort_unstable();
    let witnesses = instance
        .graphs()
        .iter()
        .map(|g| witness_basis(g, &solution).expect("solution extends in every graph"))
        .collect();
    SolveReport {
        solution,
        method,
        approximate,
        requested_size,
        witnesses,
        stats: instance_stats(instance),
        oracle_runs,
        runtime: started.elapsed(),
    }
}

fn total_runs(matroids: &[RestrictedMatroid<'_>]) -> u64 {
    matroids.iter().map(RestrictedMatroid::runs).sum()
}

/// Exact maximum for two graphs by matroid intersection: repeatedly augment
/// along a shortest source-to-sink path of the exchange graph until none
/// exists.
pub fn solve_k2(instance: &Instance) -> Result<SolveReport, SolveError> {
    if instance.graph_count() != 2 {
        return Err(SolveError::RequiresTwoGraphs(instance.graph_count()));
    }
    let started = Instant::now();
    let list = candidates_list(instance);
    let matroids: Vec<RestrictedMatroid<'_>> = instance
        .graphs()
        .iter()
        .map(|g| RestrictedMatroid::new(g, &list.cycles))
        .collect();
    let n = list.len() as u32;
    let mut current: Vec<u32> = Vec::new();
    while let Some(path) = augmenting_path(&matroids, &current, n) {
        for node in path {
            match current.binary_search(&node) {
                Ok(pos) => {
                    current.remove(pos);
                }
                Err(pos) => current.insert(pos, node),
            }
        }
        debug_assert!(common_independent(&matroids, &current));
    }
    let solution = current
        .iter()
        .map(|&i| list.cycles[i as usize].clone())
        .collect();
    let runs = total_runs(&matroids);
    Ok(finish_report(
        instance,
        Method::K2,
        false,
        None,
        solution,
        runs,
        started,
    ))
}

/// Shortest augmenting path in the exchange graph of the current common
/// independent set, as the list of its nodes; `None` when the set is maximum.
///
/// Sources are elements addable in the first matroid, sinks those addable in
/// the second; arcs swap one element in, one out, keeping the respective
/// matroid independent. BFS explores elements in ascending order, so the
/// returned path is the canonical shortest one.
fn augmenting_path(
    matroids: &[RestrictedMatroid<'_>],
    current: &[u32],
    n: u32,
) -> Option<Vec<u32>> {
    let in_current = |y: u32| current.binary_search(&y).is_ok();
    let outside: Vec<u32> = (0..n).filter(|&y| !in_current(y)).collect();

    let mut sources = Vec::new();
    for &y in &outside {
        if matroids[0].is_independent(&with_inserted(current, y)) {
            sources.push(y);
        }
    }
    let is_sink = |y: u32| matroids[1].is_independent(&with_inserted(current, y));

    // single-node path: addable in both matroids
    for &y in &sources {
        if is_sink(y) {
            return Some(vec![y]);
        }
    }

    let mut parent: HashMap<u32, u32> = HashMap::new();
    let mut queue: VecDeque<u32> = VecDeque::new();
    for &y in &sources {
        parent.insert(y, u32::MAX);
        queue.push_back(y);
    }
    while let Some(node) = queue.pop_front() {
        if in_current(node) {
            // node = x in the set; arcs x -> y when swapping keeps matroid 1
            let without: Vec<u32> = current.iter().copied().filter(|&z| z != node).collect();
            for &y in &outside {
                if parent.contains_key(&y) {
                    continue;
                }
                if matroids[0].is_independent(&with_inserted(&without, y)) {
                    parent.insert(y, node);
                    if is_sink(y) {
                        let mut path = vec![y];
                        let mut at = y;
                        while let Some(&p) = parent.get(&at) {
                            if p == u32::MAX {
                                break;
                            }
                            path.push(p);
                            at = p;
                        }
                        path.reverse();
                        return Some(path);
                    }
                    queue.push_back(y);
                }
            }
        } else {
            // node = y outside; arcs y -> x when swapping keeps matroid 2
            for &x in current {
                if parent.contains_key(&x) {
                    continue;
                }
                let swapped: Vec<u32> = current
                    .iter()
                    .copied()
                    .filter(|&z| z != x)
                    .chain(std::iter::once(node))
                    .collect();
                let mut swapped = swapped;
                swapped.sort_unstable();
                if matroids[1].is_independent(&swapped) {
                    parent.insert(x, node);
                    queue.push_back(x);
                }
            }
        }
    }
    None
}

/// Canonical-order greedy: keep each candidate that stays independent in
/// every graph. Maximal, and at least a 1/k fraction of the optimum.
pub fn solve_greedy(instance: &Instance) -> Result<SolveReport, SolveError> {
    let started = Instant::now();
    let list = candidates_list(instance);
    let matroids: Vec<RestrictedMatroid<'_>> = instance
        .graphs()
        .iter()
        .map(|g| RestrictedMatroid::new(g, &list.cycles))
        .collect();
    let mut kept: Vec<u32> = Vec::new();
    for id in 0..list.len() as u32 {
        let trial = with_inserted(&kept, id);
        if common_independent(&matroids, &trial) {
            kept = trial;
        }
    }
    let solution = kept
        .iter()
        .map(|&i| list.cycles[i as usize].clone())
        .collect();
    let runs = total_runs(&matroids);
    let approximate = instance.graph_count() > 1;
    Ok(finish_report(
        instance,
        Method::Greedy,
        approximate,
        None,
        solution,
        runs,
        started,
    ))
}

/// First common independent subset of exactly `size` candidates in
/// lexicographic index order, by prefix search (prefixes that are dependent
/// cannot extend to an independent set).
fn first_common_subset(
    matroids: &[RestrictedMatroid<'_>],
    n: u32,
    size: usize,
) -> Option<Vec<u32>> {
    fn dfs(
        matroids: &[RestrictedMatroid<'_>],
        n: u32,
        size: usize,
        start: u32,
        chosen: &mut Vec<u32>,
    ) -> bool {
        if chosen.len() == size {
            return true;
        }
        let needed = size - chosen.len();
        let mut i = start;
        while i < n {
            if (n - i) < needed as u32 {
                return false;
            }
            chosen.push(i);
            if common_independent(matroids, chosen) && dfs(matroids, n, size, i + 1, chosen) {
                return true;
            }
            chosen.pop();
            i += 1;
        }
        false
    }
    let mut chosen = Vec::with_capacity(size);
    dfs(matroids, n, size, 0, &mut chosen).then_some(chosen)
}

/// Searches for a common independent set of exactly `requested` candidates.
/// Returns `None` when no such set exists (a definitive answer).
pub fn solve_xp(instance: &Instance, requested: usize) -> Result<Option<SolveReport>, SolveError> {
    let started = Instant::now();
    let list = candidates_list(instance);
    if requested > list.len() {
        return Ok(None);
    }
    let matroids: Vec<RestrictedMatroid<'_>> = instance
        .graphs()
        .iter()
        .map(|g| RestrictedMatroid::new(g, &list.cycles))
        .collect();
    let found = first_common_subset(&matroids, list.len() as u32, requested);
    let runs = total_runs(&matroids);
    Ok(found.map(|ids| {
        let solution = ids
            .iter()
            .map(|&i| list.cycles[i as usize].clone())
            .collect();
        finish_report(
            instance,
            Method::Xp,
            false,
            Some(requested),
            solution,
            runs,
            started,
        )
    }))
}

/// Exhaustive maximum over subsets of the candidate list, sizes descending,
/// ties broken by the first subset in lexicographic order. Refuses lists
/// larger than the budget.
pub fn solve_bruteforce(instance: &Instance) -> Result<SolveReport, SolveError> {
    solve_bruteforce_with(instance, &EnumerationBudget::default())
}

pub fn solve_bruteforce_with(
    instance: &Instance,
    budget: &EnumerationBudget,
) -> Result<SolveReport, SolveError> {
    let started = Instant::now();
    let list = candidates_list(instance);
    if list.len() > budget.max_candidates {
        return Err(BudgetError {
            quantity: "candidate list size",
            actual: list.len(),
            limit: budget.max_candidates,
        }
        .into());
    }
    let matroids: Vec<RestrictedMatroid<'_>> = instance
        .graphs()
        .iter()
        .map(|g| RestrictedMatroid::new(g, &list.cycles))
        .collect();
    let n = list.len() as u32;
    // per-matroid rank of the whole list bounds the answer
    let upper = matroids
        .iter()
        .map(|m| {
            let mut kept: Vec<u32> = Vec::new();
            for id in 0..n {
                let trial = with_inserted(&kept, id);
                if m.is_independent(&trial) {
                    kept = trial;
                }
            }
            kept.len()
        })
        .min()
        .unwrap_or(0);
    let mut solution = Vec::new();
    for size in (1..=upper).rev() {
        if let Some(ids) = first_common_subset(&matroids, n, size) {
            solution = ids
                .iter()
                .map(|&i| list.cycles[i as usize].clone())
                .collect();
            break;
        }
    }
    let runs = total_runs(&matroids);
    Ok(finish_report(
        instance,
        Method::Brute,
        false,
        None,
        solution,
        runs,
        started,
    ))
}

/// Dispatches on the instance parameters: degree at most 2, then basis
/// cycles of size at most 3, then subcubic with basis cycles at most 4, then
/// two graphs, then fixed-size search when a size is requested, otherwise
/// the greedy approximation.
pub fn solve_auto(
    instance: &Instance,
    requested: Option<usize>,
) -> Result<Option<SolveReport>, SolveError> {
    let stats = instance_stats(instance);
    if stats.max_degree <= 2 {
        return Ok(Some(solve_delta2(instance)));
    }
    if stats.max_basis_cycle <= 3 {
        return crate::special::solve_gamma3(instance).map(Some);
    }
    if stats.max_basis_cycle <= 4 && stats.max_degree <= 3 {
        return crate::special::solve_gamma4_delta3(instance).map(Some);
    }
    if instance.graph_count() == 2 {
        return solve_k2(instance).map(Some);
    }
    if let Some(size) = requested {
        return solve_xp(instance, size);
    }
    solve_greedy(instance).map(Some)
}

/// Max degree at most 2: every graph is a disjoint union of paths and
/// cycles, its unique minimum cycle basis is its set of component cycles,
/// and the optimum is the set of cycles common to all graphs.
fn solve_delta2(instance: &Instance) -> SolveReport {
    let started = Instant::now();
    let mut common = component_cycles(instance.graph(0));
    for g in &instance.graphs()[1..] {
        let mine = component_cycles(g);
        common.retain(|c| mine.contains(c));
    }
    finish_report(
        instance,
        Method::DeltaTwo,
        false,
        None,
        common,
        0,
        started,
    )
}

/// Outcome of checking a proposed solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub feasible: bool,
    pub failure: Option<VerifyFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyFailure {
    DuplicateCycle { first: usize, second: usize },
    /// Cycle `cycle` uses an edge absent from graph `graph`.
    MissingEdge { graph: usize, cycle: usize },
    /// The set does not extend to a minimum cycle basis of graph `graph`.
    NotExtendable { graph: usize },
}

/// Checks that every cycle lies in every graph and that the set extends to a
/// minimum cycle basis of each; the diagnosis names the first failure.
pub fn verify(instance: &Instance, cycles: &[Cycle]) -> Result<Verification, McbError> {
    for (second, c) in cycles.iter().enumerate() {
        if c.is_zero() {
            return Err(McbError::ZeroCycle { index: second });
        }
        for (first, earlier) in cycles[..second].iter().enumerate() {
            if earlier == c {
                return Ok(Verification {
                    feasible: false,
                    failure: Some(VerifyFailure::DuplicateCycle { first, second }),
                });
            }
        }
    }
    for (graph_index, g) in instance.graphs().iter().enumerate() {
        for (cycle_index, c) in cycles.iter().enumerate() {
            if !c.bits().is_subset_of(g.edge_set()) {
                return Ok(Verification {
                    feasible: false,
                    failure: Some(VerifyFailure::MissingEdge {
                        graph: graph_index,
                        cycle: cycle_index,
                    }),
                });
            }
        }
        if !crate::horton::is_independent_in_mcb(g, cycles)? {
            return Ok(Verification {
                feasible: false,
                failure: Some(VerifyFailure::NotExtendable { graph: graph_index }),
            });
        }
    }
    Ok(Verification {
        feasible: true,
        failure: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{stable_set_instance, Grouping, HostGraph, ReductionSpec};
    use crate::graph::test_graphs::{k4_and_c4, single};
    use crate::graph::Instance;

    fn identical_pair(n: usize, edges: &[(usize, usize)]) -> Instance {
        Instance::from_edge_lists(
            n,
            vec![("a".into(), edges.to_vec()), ("b".into(), edges.to_vec())],
        )
        .unwrap()
    }

    fn p3_instance() -> Instance {
        stable_set_instance(&ReductionSpec {
            host: HostGraph::path(3),
            cycle_length: 4,
            grouping: Grouping::PerEdge,
        })
        .unwrap()
    }

    #[test]
    fn k2_identical_triangles() {
        let inst = identical_pair(3, &[(0, 1), (1, 2), (0, 2)]);
        let report = solve_k2(&inst).unwrap();
        assert_eq!(report.size(), 1);
        assert_eq!(report.method, Method::K2);
        assert!(!report.approximate);
    }

    #[test]
    fn k2_on_reduction_instance() {
        let report = solve_k2(&p3_instance()).unwrap();
        assert_eq!(report.size(), 2);
        assert!(verify(&p3_instance(), &report.solution).unwrap().feasible);
    }

    #[test]
    fn k2_k4_versus_c4() {
        let report = solve_k2(&k4_and_c4()).unwrap();
        assert_eq!(report.size(), 0);
    }

    #[test]
    fn k2_rejects_other_counts() {
        let inst = single(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(
            solve_k2(&inst).unwrap_err(),
            SolveError::RequiresTwoGraphs(1)
        ));
    }

    #[test]
    fn greedy_single_graph_is_full_dimension() {
        let inst = single(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let report = solve_greedy(&inst).unwrap();
        assert_eq!(report.size(), 3);
        assert!(!report.approximate);
    }

    #[test]
    fn greedy_on_reduction_instance() {
        let report = solve_greedy(&p3_instance()).unwrap();
        assert_eq!(report.size(), 2);
        assert!(report.approximate);
    }

    #[test]
    fn xp_examples() {
        let inst = p3_instance();
        let empty = solve_xp(&inst, 0).unwrap().unwrap();
        assert_eq!(empty.size(), 0);
        assert!(solve_xp(&inst, 2).unwrap().is_some());
        assert!(solve_xp(&inst, 3).unwrap().is_none());
        // far beyond the list size
        assert!(solve_xp(&inst, 99).unwrap().is_none());

        let k4s = identical_pair(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let report = solve_xp(&k4s, 3).unwrap().unwrap();
        assert_eq!(report.size(), 3);
        assert_eq!(report.requested_size, Some(3));
    }

    #[test]
    fn brute_examples() {
        let acyclic = identical_pair(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(solve_bruteforce(&acyclic).unwrap().size(), 0);
        assert_eq!(solve_bruteforce(&p3_instance()).unwrap().size(), 2);
        // single-graph gadget: every elementary cycle is a candidate, so the
        // list outgrows the default budget
        let gadget = crate::generate::conn_gadget(4).unwrap();
        let budget = EnumerationBudget {
            max_candidates: 64,
            ..Default::default()
        };
        let report = solve_bruteforce_with(&gadget, &budget).unwrap();
        assert_eq!(report.size(), 9);
        assert_eq!(report.size(), gadget.graph(0).cycle_space_dimension());
    }

    #[test]
    fn brute_budget_refusal() {
        let inst = p3_instance();
        let tiny = EnumerationBudget {
            max_candidates: 2,
            ..Default::default()
        };
        assert!(matches!(
            solve_bruteforce_with(&inst, &tiny).unwrap_err(),
            SolveError::Budget(_)
        ));
    }

    #[test]
    fn auto_dispatch_delta2() {
        // two disjoint-square graphs sharing one square
        let inst = Instance::from_edge_lists(
            8,
            vec![
                (
                    "a".into(),
                    vec![(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)],
                ),
                ("b".into(), vec![(0, 1), (1, 2), (2, 3), (0, 3)]),
            ],
        )
        .unwrap();
        let report = solve_auto(&inst, None).unwrap().unwrap();
        assert_eq!(report.method, Method::DeltaTwo);
        assert_eq!(report.size(), 1);
        assert_eq!(report.solution[0].weight(), 4);
    }

    #[test]
    fn auto_dispatch_gamma3() {
        let k4s = identical_pair(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let report = solve_auto(&k4s, None).unwrap().unwrap();
        assert_eq!(report.method, Method::Gamma3);
        assert_eq!(report.size(), 3);
    }

    #[test]
    fn auto_dispatch_greedy_flags_approximate() {
        // three-graph pentagon-gadget instance: degree 3, basis cycles up to 5
        let spec = ReductionSpec {
            host: HostGraph::path(4),
            cycle_length: 5,
            grouping: Grouping::PerEdge,
        };
        let inst = stable_set_instance(&spec).unwrap();
        assert_eq!(inst.graph_count(), 3);
        let report = solve_auto(&inst, None).unwrap().unwrap();
        assert_eq!(report.method, Method::Greedy);
        assert!(report.approximate);
    }

    #[test]
    fn auto_with_requested_size_uses_xp() {
        let spec = ReductionSpec {
            host: HostGraph::path(4),
            cycle_length: 5,
            grouping: Grouping::PerEdge,
        };
        let inst = stable_set_instance(&spec).unwrap();
        let report = solve_auto(&inst, Some(2)).unwrap().unwrap();
        assert_eq!(report.method, Method::Xp);
        assert_eq!(report.size(), 2);
        assert!(solve_auto(&inst, Some(5)).unwrap().is_none());
    }

    #[test]
    fn verify_examples() {
        let inst = p3_instance();
        assert!(verify(&inst, &[]).unwrap().feasible);

        let list = candidates_list(&inst);
        let squares = &list.cycles;
        assert_eq!(squares.len(), 3);
        // square rings are laid out per host vertex: 0 -> u, 1 -> v, 2 -> w
        let (cu, cv, cw) = (&squares[0], &squares[1], &squares[2]);
        let good = verify(&inst, &[cu.clone(), cw.clone()]).unwrap();
        assert!(good.feasible);
        let bad = verify(&inst, &[cu.clone(), cv.clone()]).unwrap();
        assert!(!bad.feasible);
        assert_eq!(
            bad.failure,
            Some(VerifyFailure::NotExtendable { graph: 0 })
        );
    }

    #[test]
    fn verify_missing_edge() {
        let inst = k4_and_c4();
        let triangle = Cycle::from_vertex_ring(inst.universe(), &[0, 1, 2]);
        let v = verify(&inst, &[triangle]).unwrap();
        assert!(!v.feasible);
        assert_eq!(
            v.failure,
            Some(VerifyFailure::MissingEdge { graph: 1, cycle: 0 })
        );
    }

    #[test]
    fn verify_duplicates() {
        let inst = p3_instance();
        let list = candidates_list(&inst);
        let c = list.cycles[0].clone();
        let v = verify(&inst, &[c.clone(), c]).unwrap();
        assert!(!v.feasible);
        assert_eq!(
            v.failure,
            Some(VerifyFailure::DuplicateCycle { first: 0, second: 1 })
        );
    }

    #[test]
    fn reports_pass_verification() {
        for report in [
            solve_k2(&p3_instance()).unwrap(),
            solve_greedy(&p3_instance()).unwrap(),
            solve_bruteforce(&p3_instance()).unwrap(),
        ] {
            let v = verify(&p3_instance(), &report.solution).unwrap();
            assert!(v.feasible);
            for (w, g) in report.witnesses.iter().zip(p3_instance().graphs()) {
                assert_eq!(w.basis.len(), g.cycle_space_dimension());
                for c in &report.solution {
                    assert!(w.basis.contains(c));
                }
            }
        }
    }
}
