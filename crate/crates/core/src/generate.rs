//! Instance generators: the two-cycle connector gadget, stable-set reduction
//! instances with known optima, and seeded random trajectories.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{GraphError, Instance, VertexId};

#[derive(Debug, Error, PartialEq)]
pub enum GenError {
    #[error("cycle length must be 4 or 5, got {0}")]
    BadCycleLength(usize),
    #[error("connector cycles must be disjoint with {expected} nodes each")]
    BadConnectorCycles { expected: usize },
    #[error("probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("need at least one graph, got k = {0}")]
    BadGraphCount(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A simple loop-free graph used as the host of the stable-set reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HostGraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl HostGraph {
    pub fn new(
        vertex_count: usize,
        edges: Vec<(VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let max = u.max(v);
            if max >= vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    vertex: max,
                    n: vertex_count,
                });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Self {
            vertex_count,
            edges,
        })
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v)).collect()).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Self::new(n, edges).unwrap()
    }

    /// Star with vertex 0 in the center.
    pub fn star(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (0, v)).collect()).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn max_degree(&self) -> usize {
        let mut degree = vec![0usize; self.vertex_count];
        for &(u, v) in &self.edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        degree.into_iter().max().unwrap_or(0)
    }
}

/// How host edges are distributed over the generated graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grouping {
    /// One graph per host edge.
    PerEdge,
    /// One graph per matching of a greedy edge-coloring cover.
    PerMatching,
}

#[derive(Debug, Clone)]
pub struct ReductionSpec {
    pub host: HostGraph,
    /// Node-cycle length, 4 or 5.
    pub cycle_length: usize,
    pub grouping: Grouping,
}

/// Connector edge set between two disjoint length-`l` cycles given as node
/// rings: the rungs `(u_i, v_i)` for all `i`, plus for `l = 4` the shifted
/// rungs `(u_i, v_{i+1})`. After connecting, no minimum cycle basis contains
/// both rings at once.
pub fn conn(
    c1: &[VertexId],
    c2: &[VertexId],
    l: usize,
) -> Result<Vec<(VertexId, VertexId)>, GenError> {
    if l != 4 && l != 5 {
        return Err(GenError::BadCycleLength(l));
    }
    let distinct: std::collections::HashSet<_> = c1.iter().chain(c2).collect();
    if c1.len() != l || c2.len() != l || distinct.len() != 2 * l {
        return Err(GenError::BadConnectorCycles { expected: l });
    }
    let mut edges = Vec::with_capacity(if l == 4 { 2 * l } else { l });
    for i in 0..l {
        edges.push((c1[i], c2[i]));
    }
    if l == 4 {
        for i in 0..l {
            edges.push((c1[i], c2[(i + 1) % l]));
        }
    }
    Ok(edges)
}

/// Greedy edge coloring: each edge takes the smallest color unused at both
/// endpoints. Returns the color classes (pairwise disjoint matchings).
pub fn greedy_matching_cover(host: &HostGraph) -> Vec<Vec<(VertexId, VertexId)>> {
    let mut used: Vec<Vec<usize>> = vec![Vec::new(); host.vertex_count()];
    let mut classes: Vec<Vec<(VertexId, VertexId)>> = Vec::new();
    for &(u, v) in host.edges() {
        let mut color = 0;
        while used[u].contains(&color) || used[v].contains(&color) {
            color += 1;
        }
        if color == classes.len() {
            classes.push(Vec::new());
        }
        classes[color].push((u, v));
        used[u].push(color);
        used[v].push(color);
    }
    classes
}

/// The node ring of host vertex `v`: vertices `v*l .. v*l + l - 1`.
pub fn node_ring(v: VertexId, l: usize) -> Vec<VertexId> {
    (v * l..(v + 1) * l).collect()
}

fn ring_edges(ring: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    (0..ring.len())
        .map(|i| (ring[i], ring[(i + 1) % ring.len()]))
        .collect()
}

/// Builds the reduction instance: a length-`l` node cycle per host vertex in
/// every graph, and the connector applied to the endpoints' cycles of each
/// host edge, grouped per edge or per matching. A maximum common
/// basis-extendable cycle set has exactly the size of a maximum stable set of
/// the host (for hosts yielding at least two graphs).
pub fn stable_set_instance(spec: &ReductionSpec) -> Result<Instance, GenError> {
    let l = spec.cycle_length;
    if l != 4 && l != 5 {
        return Err(GenError::BadCycleLength(l));
    }
    let host = &spec.host;
    let vertex_count = host.vertex_count() * l;
    let node_cycles: Vec<Vec<(VertexId, VertexId)>> = (0..host.vertex_count())
        .map(|v| ring_edges(&node_ring(v, l)))
        .collect();

    let groups: Vec<(String, Vec<(VertexId, VertexId)>)> = match spec.grouping {
        Grouping::PerEdge => host
            .edges()
            .iter()
            .map(|&(u, v)| (format!("e{}-{}", u + 1, v + 1), vec![(u, v)]))
            .collect(),
        Grouping::PerMatching => greedy_matching_cover(host)
            .into_iter()
            .enumerate()
            .map(|(i, m)| (format!("m{}", i + 1), m))
            .collect(),
    };
    if groups.is_empty() {
        return Err(GenError::BadGraphCount(0));
    }

    let mut graphs = Vec::with_capacity(groups.len());
    for (name, host_edges) in groups {
        let mut edges: Vec<(VertexId, VertexId)> =
            node_cycles.iter().flatten().copied().collect();
        for (u, v) in host_edges {
            edges.extend(conn(&node_ring(u, l), &node_ring(v, l), l)?);
        }
        graphs.push((name, edges));
    }
    Ok(Instance::from_edge_lists(vertex_count, graphs)?)
}

/// The single connector gadget: two length-`l` cycles joined by `conn`, as a
/// one-graph instance.
pub fn conn_gadget(l: usize) -> Result<Instance, GenError> {
    let host = HostGraph::new(2, vec![(0, 1)]).expect("single edge");
    stable_set_instance(&ReductionSpec {
        host,
        cycle_length: l,
        grouping: Grouping::PerEdge,
    })
}

/// Seeded random trajectory: an Erdos-Renyi base graph on `n` vertices and
/// `k` frames, each frame resampling every vertex pair independently with
/// probability `perturbation`.
pub fn random_instance(
    n: usize,
    edge_probability: f64,
    k: usize,
    perturbation: f64,
    seed: u64,
) -> Result<Instance, GenError> {
    for &p in &[edge_probability, perturbation] {
        if !(0.0..=1.0).contains(&p) || p.is_nan() {
            return Err(GenError::BadProbability(p));
        }
    }
    if k == 0 {
        return Err(GenError::BadGraphCount(0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let base: Vec<bool> = pairs
        .iter()
        .map(|_| rng.random_bool(edge_probability))
        .collect();
    let mut graphs = Vec::with_capacity(k);
    for frame in 0..k {
        let mut edges = Vec::new();
        for (i, &(u, v)) in pairs.iter().enumerate() {
            let present = if perturbation > 0.0 && rng.random_bool(perturbation) {
                rng.random_bool(edge_probability)
            } else {
                base[i]
            };
            if present {
                edges.push((u, v));
            }
        }
        graphs.push((format!("f{}", frame + 1), edges));
    }
    Ok(Instance::from_edge_lists(n, graphs)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{instance_stats, intersection_graph};
    use crate::special::triangles_of;

    #[test]
    fn conn_edge_counts() {
        let c1: Vec<usize> = (0..4).collect();
        let c2: Vec<usize> = (4..8).collect();
        assert_eq!(conn(&c1, &c2, 4).unwrap().len(), 8);
        let c1: Vec<usize> = (0..5).collect();
        let c2: Vec<usize> = (5..10).collect();
        assert_eq!(conn(&c1, &c2, 5).unwrap().len(), 5);
    }

    #[test]
    fn conn_rejects_bad_input() {
        let c1: Vec<usize> = (0..4).collect();
        assert_eq!(
            conn(&c1, &c1, 4).unwrap_err(),
            GenError::BadConnectorCycles { expected: 4 }
        );
        let c2: Vec<usize> = (4..8).collect();
        assert_eq!(conn(&c1, &c2, 3).unwrap_err(), GenError::BadCycleLength(3));
    }

    #[test]
    fn square_gadget_shape() {
        let inst = conn_gadget(4).unwrap();
        assert_eq!(inst.graph_count(), 1);
        let g = inst.graph(0);
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 16);
        assert_eq!(g.max_degree(), 4);
        assert_eq!(g.cycle_space_dimension(), 9);
        assert_eq!(triangles_of(g).len(), 8);
        let stats = instance_stats(&inst);
        assert_eq!(stats.max_degree, 4);
        assert_eq!(stats.max_basis_cycle, 4);
    }

    #[test]
    fn pentagon_gadget_shape() {
        let inst = conn_gadget(5).unwrap();
        let g = inst.graph(0);
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.max_degree(), 3);
        assert_eq!(g.cycle_space_dimension(), 6);
        assert!(triangles_of(g).is_empty());
        let stats = instance_stats(&inst);
        assert_eq!(stats.max_basis_cycle, 5);
    }

    #[test]
    fn p3_per_edge_instance() {
        let spec = ReductionSpec {
            host: HostGraph::path(3),
            cycle_length: 4,
            grouping: Grouping::PerEdge,
        };
        let inst = stable_set_instance(&spec).unwrap();
        assert_eq!(inst.graph_count(), 2);
        assert_eq!(inst.universe().vertex_count(), 12);
        // the intersection is the three disjoint node squares
        let inter = intersection_graph(&inst);
        assert_eq!(inter.edge_count(), 12);
        assert_eq!(inter.max_degree(), 2);
        assert_eq!(inter.component_count(), 3);
    }

    #[test]
    fn matching_cover_is_disjoint_and_covers() {
        let host = HostGraph::cycle(5);
        let cover = greedy_matching_cover(&host);
        let total: usize = cover.iter().map(Vec::len).sum();
        assert_eq!(total, host.edges().len());
        for class in &cover {
            let mut seen = std::collections::HashSet::new();
            for &(u, v) in class {
                assert!(seen.insert(u));
                assert!(seen.insert(v));
            }
        }
        // C5 needs 3 colors
        assert_eq!(cover.len(), 3);
    }

    #[test]
    fn per_matching_reduces_graph_count() {
        let spec = ReductionSpec {
            host: HostGraph::cycle(5),
            cycle_length: 5,
            grouping: Grouping::PerMatching,
        };
        let inst = stable_set_instance(&spec).unwrap();
        assert!(inst.graph_count() <= 5);
        assert_eq!(inst.graph_count(), 3);
        let stats = instance_stats(&inst);
        assert_eq!(stats.max_degree, 3);
        assert_eq!(stats.max_basis_cycle, 5);
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_instance(8, 0.4, 3, 0.2, 17).unwrap();
        let b = random_instance(8, 0.4, 3, 0.2, 17).unwrap();
        for (ga, gb) in a.graphs().iter().zip(b.graphs()) {
            assert_eq!(ga.edge_set(), gb.edge_set());
        }
    }

    #[test]
    fn zero_perturbation_gives_identical_frames() {
        let inst = random_instance(10, 0.3, 4, 0.0, 5).unwrap();
        let first = inst.graph(0).edge_set();
        assert!(inst.graphs().iter().all(|g| g.edge_set() == first));
    }

    #[test]
    fn empty_vertex_set() {
        let inst = random_instance(0, 0.5, 2, 0.5, 1).unwrap();
        assert_eq!(inst.universe().edge_count(), 0);
        assert_eq!(inst.graph_count(), 2);
    }

    #[test]
    fn bad_probability_rejected() {
        assert_eq!(
            random_instance(5, 1.5, 1, 0.0, 0).unwrap_err(),
            GenError::BadProbability(1.5)
        );
    }
}
