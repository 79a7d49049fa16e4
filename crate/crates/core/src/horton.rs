//! Minimum cycle basis computation and the extendability oracle.
//!
//! Both are built on one greedy: sort a spanning set of candidate cycles by
//! weight and keep every cycle that is linearly independent of those kept so
//! far. Run on the candidate cycles alone it produces a minimum cycle basis;
//! run with query cycles injected ahead of equal-weight candidates it decides
//! whether the query set extends to some minimum cycle basis, and exhibits
//! one when it does.

use std::cell::Cell;
use std::cmp::Ordering;

use thiserror::Error;

use crate::bits::BitVec;
use crate::cycle::{is_cycle, Cycle, Gf2Basis};
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum McbError {
    #[error("query cycle {index} is the zero vector")]
    ZeroCycle { index: usize },
    #[error("query cycle {index} is not a cycle")]
    NotACycle { index: usize },
    #[error("query cycle {index} uses an edge outside the graph")]
    EdgeOutsideGraph { index: usize },
    #[error("query cycles {first} and {second} are equal")]
    DuplicateCycle { first: usize, second: usize },
    #[error("query set does not extend to a minimum cycle basis")]
    DependentSet,
}

/// Per-root BFS trees with deterministic parents: the parent of `v` is the
/// smallest-id neighbor of `v` on the previous BFS level. Paths read off one
/// tree are shortest and unique, and subpaths of tree paths are tree paths.
#[derive(Debug, Clone)]
pub struct ShortestPathIndex {
    distances: Vec<Vec<u32>>,
    parents: Vec<Vec<(VertexId, EdgeId)>>,
}

const UNREACHABLE: u32 = u32::MAX;

impl ShortestPathIndex {
    pub fn new(graph: &Graph) -> Self {
        let n = graph.vertex_count();
        let mut distances = Vec::with_capacity(n);
        let mut parents = Vec::with_capacity(n);
        for root in 0..n {
            let mut dist = vec![UNREACHABLE; n];
            dist[root] = 0;
            let mut frontier = vec![root];
            let mut level = 0;
            while !frontier.is_empty() {
                level += 1;
                let mut next = Vec::new();
                for &v in &frontier {
                    for &(w, _) in graph.neighbors(v) {
                        if dist[w] == UNREACHABLE {
                            dist[w] = level;
                            next.push(w);
                        }
                    }
                }
                frontier = next;
            }
            // parent = smallest-id neighbor on the previous level
            let mut parent = vec![(usize::MAX, usize::MAX); n];
            for v in 0..n {
                if dist[v] == UNREACHABLE || dist[v] == 0 {
                    continue;
                }
                for &(w, e) in graph.neighbors(v) {
                    if dist[w] + 1 == dist[v] {
                        parent[v] = (w, e);
                        break; // neighbors sorted by id
                    }
                }
            }
            distances.push(dist);
            parents.push(parent);
        }
        Self {
            distances,
            parents,
        }
    }

    pub fn distance(&self, root: VertexId, v: VertexId) -> Option<usize> {
        let d = self.distances[root][v];
        (d != UNREACHABLE).then_some(d as usize)
    }

    /// Edge set of the unique tree path from `root` to `v`.
    pub fn path_edges(&self, edge_universe_len: usize, root: VertexId, v: VertexId) -> Option<BitVec> {
        self.distance(root, v)?;
        let mut bits = BitVec::zeros(edge_universe_len);
        let mut at = v;
        while at != root {
            let (p, e) = self.parents[root][at];
            bits.set(e, true);
            at = p;
        }
        Some(bits)
    }
}

/// A candidate cycle: tree paths from `root` to both endpoints of
/// `base_edge`, plus the edge itself.
#[derive(Debug, Clone)]
pub struct HortonCandidate {
    pub cycle: Cycle,
    pub root: VertexId,
    pub base_edge: EdgeId,
}

/// Where a basis cycle came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleOrigin {
    /// Enumerated candidate with its root vertex and base edge.
    Candidate { root: VertexId, base_edge: EdgeId },
    /// Query cycle injected into the greedy.
    Injected,
}

/// An ordered minimum cycle basis with provenance.
#[derive(Debug, Clone)]
pub struct McbResult {
    pub basis: Vec<Cycle>,
    pub total_weight: usize,
    pub origins: Vec<CycleOrigin>,
}

/// Enumerates the candidate cycles of `graph`: for every vertex `v` and edge
/// `(x, y)` reachable from it, the two tree paths plus the edge, kept when
/// the parts are edge-disjoint and the union has even degrees everywhere.
/// Deduplicated, sorted by weight then canonical order.
pub fn horton_candidates(graph: &Graph) -> Vec<HortonCandidate> {
    let index = ShortestPathIndex::new(graph);
    horton_candidates_with(graph, &index)
}

pub fn horton_candidates_with(graph: &Graph, index: &ShortestPathIndex) -> Vec<HortonCandidate> {
    let universe = graph.universe();
    let width = universe.edge_count();
    let mut out: Vec<HortonCandidate> = Vec::new();
    for root in 0..graph.vertex_count() {
        for e in graph.edge_set().ones() {
            let (x, y) = universe.endpoints(e);
            let (Some(dx), Some(dy)) = (index.distance(root, x), index.distance(root, y)) else {
                continue;
            };
            let px = index.path_edges(width, root, x).expect("reachable");
            let py = index.path_edges(width, root, y).expect("reachable");
            if px.intersects(&py) || px.get(e) || py.get(e) {
                continue;
            }
            let mut bits = px;
            bits.or_assign(&py);
            bits.set(e, true);
            if !is_cycle(universe, &bits) {
                continue;
            }
            let cycle = Cycle::try_new(universe, bits).expect("checked");
            debug_assert_eq!(cycle.weight(), dx + dy + 1);
            out.push(HortonCandidate {
                cycle,
                root,
                base_edge: e,
            });
        }
    }
    // dedupe by cycle, keeping the smallest (root, base_edge) provenance
    out.sort_unstable_by(|a, b| {
        a.cycle
            .cmp(&b.cycle)
            .then(a.root.cmp(&b.root))
            .then(a.base_edge.cmp(&b.base_edge))
    });
    out.dedup_by(|a, b| a.cycle == b.cycle);
    out
}

/// Reusable per-graph machinery: candidate list, cycle space dimension and
/// an invocation counter for the greedy.
pub struct McbOracle<'g> {
    graph: &'g Graph,
    candidates: Vec<HortonCandidate>,
    dimension: usize,
    runs: Cell<u64>,
}

impl<'g> McbOracle<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self {
            graph,
            candidates: horton_candidates(graph),
            dimension: graph.cycle_space_dimension(),
            runs: Cell::new(0),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn candidates(&self) -> &[HortonCandidate] {
        &self.candidates
    }

    /// Number of greedy executions so far.
    pub fn runs(&self) -> u64 {
        self.runs.get()
    }

    fn validate(&self, queries: &[Cycle]) -> Result<(), McbError> {
        let universe = self.graph.universe();
        for (index, c) in queries.iter().enumerate() {
            if c.is_zero() {
                return Err(McbError::ZeroCycle { index });
            }
            if !is_cycle(universe, c.bits()) {
                return Err(McbError::NotACycle { index });
            }
            if !c.bits().is_subset_of(self.graph.edge_set()) {
                return Err(McbError::EdgeOutsideGraph { index });
            }
            for (first, earlier) in queries[..index].iter().enumerate() {
                if earlier == c {
                    return Err(McbError::DuplicateCycle {
                        first,
                        second: index,
                    });
                }
            }
        }
        Ok(())
    }

    /// Runs the greedy over the query cycles and the candidates merged in
    /// weight order, query cycles ahead of equal-weight candidates. Returns
    /// the finished basis and whether every query cycle was kept.
    fn run_greedy(&self, queries: &[Cycle]) -> (McbResult, bool) {
        self.runs.set(self.runs.get() + 1);
        let width = self.graph.universe().edge_count();
        let mut sorted_queries: Vec<&Cycle> = queries.iter().collect();
        sorted_queries.sort_unstable();

        let mut basis = Gf2Basis::new(width);
        let mut origins = Vec::new();
        let mut kept_queries = 0;

        let mut qi = 0;
        let mut ci = 0;
        while basis.rank() < self.dimension
            && (qi < sorted_queries.len() || ci < self.candidates.len())
        {
            let take_query = match (sorted_queries.get(qi), self.candidates.get(ci)) {
                (Some(q), Some(c)) => match q.weight().cmp(&c.cycle.weight()) {
                    Ordering::Less | Ordering::Equal => true,
                    Ordering::Greater => false,
                },
                (Some(_), None) => true,
                (None, _) => false,
            };
            if take_query {
                if basis.try_insert(sorted_queries[qi]) {
                    origins.push(CycleOrigin::Injected);
                    kept_queries += 1;
                }
                qi += 1;
            } else {
                let candidate = &self.candidates[ci];
                if basis.try_insert(&candidate.cycle) {
                    origins.push(CycleOrigin::Candidate {
                        root: candidate.root,
                        base_edge: candidate.base_edge,
                    });
                }
                ci += 1;
            }
        }
        debug_assert_eq!(basis.rank(), self.dimension, "candidates span the cycle space");
        let members = basis.members().to_vec();
        let total_weight = members.iter().map(Cycle::weight).sum();
        (
            McbResult {
                basis: members,
                total_weight,
                origins,
            },
            kept_queries == queries.len(),
        )
    }

    /// True iff some minimum cycle basis of the graph contains every query
    /// cycle.
    pub fn is_independent(&self, queries: &[Cycle]) -> Result<bool, McbError> {
        self.validate(queries)?;
        Ok(self.run_greedy(queries).1)
    }

    /// A minimum cycle basis containing the query cycles.
    pub fn witness_basis(&self, queries: &[Cycle]) -> Result<McbResult, McbError> {
        self.validate(queries)?;
        let (result, all_kept) = self.run_greedy(queries);
        if all_kept {
            Ok(result)
        } else {
            Err(McbError::DependentSet)
        }
    }
}

/// A minimum cycle basis of the graph; empty for acyclic graphs.
pub fn minimum_cycle_basis(graph: &Graph) -> McbResult {
    McbOracle::new(graph)
        .witness_basis(&[])
        .expect("empty query always extends")
}

/// True iff there is a minimum cycle basis of `graph` containing all of `d`.
pub fn is_independent_in_mcb(graph: &Graph, d: &[Cycle]) -> Result<bool, McbError> {
    McbOracle::new(graph).is_independent(d)
}

/// A minimum cycle basis of `graph` containing all of `d`.
pub fn witness_basis(graph: &Graph, d: &[Cycle]) -> Result<McbResult, McbError> {
    McbOracle::new(graph).witness_basis(d)
}
