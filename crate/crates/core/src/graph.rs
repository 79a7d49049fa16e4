//! Shared-vertex-set graphs, instance container and intersection graph.
//!
//! All graphs of an instance live over one [`EdgeUniverse`]: the union of
//! their edge sets with a canonical edge numbering. Cycles are bit vectors
//! indexed by that numbering, so cycles from different graphs compare with
//! plain bit equality.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::bits::BitVec;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("instance needs at least one graph")]
    NoGraphs,
}

/// Canonical edge numbering shared by all graphs of an instance.
///
/// Edges are unordered pairs `(u, v)` with `u < v`, sorted lexicographically;
/// an edge's id is its position in that list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeUniverse {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    index: HashMap<(VertexId, VertexId), EdgeId>,
}

impl EdgeUniverse {
    pub fn new<I>(vertex_count: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            let (u, v) = normalize(a, b)?;
            if v >= vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: vertex_count,
                });
            }
            edges.push((u, v));
        }
        edges.sort_unstable();
        edges.dedup();
        let index = edges
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect::<HashMap<_, _>>();
        Ok(Self {
            vertex_count,
            edges,
            index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edge_id(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.index.get(&(u, v)).copied()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }
}

fn normalize(a: VertexId, b: VertexId) -> Result<(VertexId, VertexId), GraphError> {
    if a == b {
        return Err(GraphError::SelfLoop(a));
    }
    Ok(if a < b { (a, b) } else { (b, a) })
}

/// One simple graph over a shared universe: an edge membership bit vector
/// plus adjacency lists derived from it.
#[derive(Debug, Clone)]
pub struct Graph {
    universe: Arc<EdgeUniverse>,
    edges: BitVec,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Graph {
    pub fn new(universe: Arc<EdgeUniverse>, edges: BitVec) -> Self {
        assert_eq!(edges.len(), universe.edge_count());
        let mut adjacency = vec![Vec::new(); universe.vertex_count()];
        for e in edges.ones() {
            let (u, v) = universe.endpoints(e);
            adjacency[u].push((v, e));
            adjacency[v].push((u, e));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self {
            universe,
            edges,
            adjacency,
        }
    }

    pub fn universe(&self) -> &Arc<EdgeUniverse> {
        &self.universe
    }

    pub fn edge_set(&self) -> &BitVec {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.count_ones()
    }

    pub fn vertex_count(&self) -> usize {
        self.universe.vertex_count()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.get(e)
    }

    /// Neighbors of `v` with the connecting edge id, sorted by neighbor id.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected component label per vertex, labels numbered by smallest
    /// contained vertex id.
    pub fn component_labels(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &(w, _) in self.neighbors(v) {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.component_labels()
            .iter()
            .max()
            .map(|m| m + 1)
            .unwrap_or(0)
    }

    /// Cycle space dimension: |E| - |V| + #components.
    pub fn cycle_space_dimension(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }
}

/// `k >= 1` graphs over one universe.
#[derive(Debug, Clone)]
pub struct Instance {
    universe: Arc<EdgeUniverse>,
    graphs: Vec<Graph>,
    names: Vec<String>,
}

impl Instance {
    /// Builds an instance from per-graph edge lists. The universe is the
    /// union of all edges; duplicate edges within one list are rejected.
    pub fn from_edge_lists(
        vertex_count: usize,
        graphs: Vec<(String, Vec<(VertexId, VertexId)>)>,
    ) -> Result<Self, GraphError> {
        if graphs.is_empty() {
            return Err(GraphError::NoGraphs);
        }
        let all = graphs
            .iter()
            .flat_map(|(_, edges)| edges.iter().copied())
            .collect::<Vec<_>>();
        let universe = Arc::new(EdgeUniverse::new(vertex_count, all)?);
        let mut built = Vec::with_capacity(graphs.len());
        let mut names = Vec::with_capacity(graphs.len());
        for (name, edges) in graphs {
            let mut bits = BitVec::zeros(universe.edge_count());
            for (a, b) in edges {
                let (u, v) = normalize(a, b)?;
                let id = universe.edge_id(u, v).expect("edge in universe");
                if bits.get(id) {
                    return Err(GraphError::DuplicateEdge(u, v));
                }
                bits.set(id, true);
            }
            built.push(Graph::new(Arc::clone(&universe), bits));
            names.push(name);
        }
        Ok(Self {
            universe,
            graphs: built,
            names,
        })
    }

    pub fn universe(&self) -> &Arc<EdgeUniverse> {
        &self.universe
    }

    pub fn graph_count(&self) -> usize {
        self.graphs.len()
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn graph(&self, i: usize) -> &Graph {
        &self.graphs[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }
}

/// Graph whose edge set is the intersection of all graphs of the instance.
pub fn intersection_graph(instance: &Instance) -> Graph {
    let mut bits = instance.graphs[0].edge_set().clone();
    for g in &instance.graphs[1..] {
        bits = bits.and(g.edge_set());
    }
    Graph::new(Arc::clone(&instance.universe), bits)
}

/// Degree, basis-cycle-size and dimension statistics of an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceStats {
    pub graph_count: usize,
    /// Max degree over all graphs.
    pub max_degree: usize,
    /// Largest cycle weight in a minimum cycle basis of any graph
    /// (0 for acyclic graphs).
    pub max_basis_cycle: usize,
    pub per_graph: Vec<GraphStats>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub name: String,
    pub max_degree: usize,
    /// Largest cycle weight in a minimum cycle basis (0 if acyclic).
    pub max_basis_cycle: usize,
    pub cycle_space_dimension: usize,
}

/// Computes k, per-graph and overall max degree, the largest basis cycle
/// weight (from one minimum cycle basis per graph; invariant under
/// tie-breaking) and cycle space dimensions.
pub fn instance_stats(instance: &Instance) -> InstanceStats {
    let per_graph = instance
        .graphs()
        .iter()
        .zip(instance.names())
        .map(|(g, name)| {
            let mcb = crate::horton::minimum_cycle_basis(g);
            GraphStats {
                name: name.clone(),
                max_degree: g.max_degree(),
                max_basis_cycle: mcb.basis.iter().map(|c| c.weight()).max().unwrap_or(0),
                cycle_space_dimension: g.cycle_space_dimension(),
            }
        })
        .collect::<Vec<_>>();
    InstanceStats {
        graph_count: instance.graph_count(),
        max_degree: per_graph.iter().map(|s| s.max_degree).max().unwrap_or(0),
        max_basis_cycle: per_graph
            .iter()
            .map(|s| s.max_basis_cycle)
            .max()
            .unwrap_or(0),
        per_graph,
    }
}

#[cfg(test)]
pub(crate) mod test_graphs {
    use super::*;

    /// Single graph instance from an edge list.
    pub fn single(n: usize, edges: &[(usize, usize)]) -> Instance {
        Instance::from_edge_lists(n, vec![("g1".into(), edges.to_vec())]).unwrap()
    }

    pub fn k4() -> Instance {
        single(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    pub fn c4() -> Instance {
        single(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])
    }

    pub fn triangle() -> Instance {
        single(3, &[(0, 1), (1, 2), (0, 2)])
    }

    /// K4 and the 4-cycle 0-1-2-3 over the same vertices.
    pub fn k4_and_c4() -> Instance {
        Instance::from_edge_lists(
            4,
            vec![
                (
                    "k4".into(),
                    vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
                ),
                ("c4".into(), vec![(0, 1), (1, 2), (2, 3), (0, 3)]),
            ],
        )
        .unwrap()
    }

    /// Cube graph Q3, identical in both graphs.
    pub fn cube_pair() -> Instance {
        let edges = vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (4, 5),
            (5, 6),
            (6, 7),
            (4, 7),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ];
        Instance::from_edge_lists(
            8,
            vec![("a".into(), edges.clone()), ("b".into(), edges)],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_graphs::*;
    use super::*;

    #[test]
    fn universe_sorted_and_indexed() {
        let u = EdgeUniverse::new(4, vec![(2, 3), (1, 0), (0, 2)]).unwrap();
        assert_eq!(u.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(u.edge_id(3, 2), Some(2));
        assert_eq!(u.edge_id(1, 2), None);
    }

    #[test]
    fn universe_rejects_self_loop() {
        assert_eq!(
            EdgeUniverse::new(3, vec![(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
    }

    #[test]
    fn intersection_identity_for_single_graph() {
        let inst = k4();
        let g = intersection_graph(&inst);
        assert_eq!(g.edge_set(), inst.graph(0).edge_set());
    }

    #[test]
    fn intersection_of_k4_and_c4_is_c4() {
        let inst = k4_and_c4();
        let g = intersection_graph(&inst);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.edge_set(), inst.graph(1).edge_set());
    }

    #[test]
    fn k4_stats() {
        let stats = instance_stats(&k4());
        assert_eq!(stats.max_degree, 3);
        assert_eq!(stats.max_basis_cycle, 3);
        assert_eq!(stats.per_graph[0].cycle_space_dimension, 3);
    }

    #[test]
    fn tree_stats() {
        let inst = single(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]);
        let stats = instance_stats(&inst);
        assert_eq!(stats.max_basis_cycle, 0);
        assert_eq!(stats.per_graph[0].cycle_space_dimension, 0);
    }

    #[test]
    fn components_and_dimension() {
        let inst = single(6, &[(0, 1), (1, 2), (0, 2), (3, 4)]);
        let g = inst.graph(0);
        assert_eq!(g.component_count(), 3); // triangle, edge, isolated 5
        assert_eq!(g.cycle_space_dimension(), 1);
    }

    #[test]
    fn duplicate_edge_rejected() {
        let err = Instance::from_edge_lists(3, vec![("g".into(), vec![(0, 1), (1, 0)])])
            .unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge(0, 1));
    }
}
