//! GF(2) cycle-space arithmetic: cycle values, sums, independence, span
//! membership and representation coefficients.

use std::cmp::Ordering;

use thiserror::Error;

use crate::bits::BitVec;
use crate::graph::{EdgeUniverse, Graph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("edge vector is not a cycle: vertex {0} has odd degree")]
    OddDegree(VertexId),
    #[error("zero vector where a nonzero cycle is required")]
    ZeroVector,
    #[error("cycle is not spanned by the basis")]
    NotSpanned,
    #[error("cycle is not a member of the basis")]
    NotAMember,
}

/// An edge set over the universe in which every vertex has even degree,
/// with its weight (edge count) cached. The zero vector is a valid value
/// but is rejected as a basis member everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    bits: BitVec,
    weight: usize,
}

impl Cycle {
    /// Wraps an edge vector, checking the even-degree invariant.
    pub fn try_new(universe: &EdgeUniverse, bits: BitVec) -> Result<Self, CycleError> {
        assert_eq!(bits.len(), universe.edge_count());
        if let Some(v) = odd_degree_vertex(universe, &bits) {
            return Err(CycleError::OddDegree(v));
        }
        let weight = bits.count_ones();
        Ok(Self { bits, weight })
    }

    pub fn zero(universe: &EdgeUniverse) -> Self {
        Self {
            bits: BitVec::zeros(universe.edge_count()),
            weight: 0,
        }
    }

    pub fn from_vertex_ring(universe: &EdgeUniverse, ring: &[VertexId]) -> Self {
        let mut bits = BitVec::zeros(universe.edge_count());
        for i in 0..ring.len() {
            let u = ring[i];
            let v = ring[(i + 1) % ring.len()];
            let e = universe
                .edge_id(u, v)
                .unwrap_or_else(|| panic!("edge ({u}, {v}) not in universe"));
            bits.set(e, true);
        }
        let weight = bits.count_ones();
        Self { bits, weight }
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn is_zero(&self) -> bool {
        self.weight == 0
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    fn from_bits_unchecked(bits: BitVec) -> Self {
        let weight = bits.count_ones();
        Self { bits, weight }
    }
}

/// Canonical cycle order: weight, then the vector containing the smallest
/// differing edge first. Every greedy in the crate breaks ties with it.
impl Ord for Cycle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| self.bits.cmp_lowest_first(&other.bits))
    }
}

impl PartialOrd for Cycle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn odd_degree_vertex(universe: &EdgeUniverse, bits: &BitVec) -> Option<VertexId> {
    let mut parity = vec![false; universe.vertex_count()];
    for e in bits.ones() {
        let (u, v) = universe.endpoints(e);
        parity[u] = !parity[u];
        parity[v] = !parity[v];
    }
    parity.iter().position(|&p| p)
}

/// True iff every vertex of the induced subgraph has even degree.
pub fn is_cycle(universe: &EdgeUniverse, bits: &BitVec) -> bool {
    odd_degree_vertex(universe, bits).is_none()
}

/// Symmetric difference of two cycles over the same universe.
pub fn cycle_sum(a: &Cycle, b: &Cycle) -> Cycle {
    Cycle::from_bits_unchecked(a.bits.xor(&b.bits))
}

/// GF(2) sum of a collection of cycles; the empty collection sums to zero.
pub fn sum_of<'a, I>(universe: &EdgeUniverse, cycles: I) -> Cycle
where
    I: IntoIterator<Item = &'a Cycle>,
{
    let mut bits = BitVec::zeros(universe.edge_count());
    for c in cycles {
        bits.xor_assign(&c.bits);
    }
    Cycle::from_bits_unchecked(bits)
}

/// True iff the nonzero cycle is a single elementary cycle: connected and
/// every vertex on it has degree exactly two.
pub fn is_elementary(universe: &EdgeUniverse, c: &Cycle) -> Result<bool, CycleError> {
    if c.is_zero() {
        return Err(CycleError::ZeroVector);
    }
    Ok(elementary_bits(universe, &c.bits))
}

/// Elementary test on a raw nonzero edge vector (even degrees included).
pub(crate) fn elementary_bits(universe: &EdgeUniverse, bits: &BitVec) -> bool {
    let mut degree = vec![0usize; universe.vertex_count()];
    for e in bits.ones() {
        let (u, v) = universe.endpoints(e);
        degree[u] += 1;
        degree[v] += 1;
        if degree[u] > 2 || degree[v] > 2 {
            return false;
        }
    }
    if degree.iter().any(|&d| d == 1) {
        return false;
    }
    // all degrees are 0 or 2; connected iff a walk from any covered vertex
    // visits every edge
    let edge_count = bits.count_ones();
    let start = match bits.ones().next() {
        Some(e) => universe.endpoints(e).0,
        None => return false,
    };
    let mut adjacency: Vec<Vec<(VertexId, usize)>> = vec![Vec::new(); universe.vertex_count()];
    for e in bits.ones() {
        let (u, v) = universe.endpoints(e);
        adjacency[u].push((v, e));
        adjacency[v].push((u, e));
    }
    let mut seen_edges = 0;
    let mut visited = vec![false; universe.vertex_count()];
    let mut stack = vec![start];
    visited[start] = true;
    while let Some(v) = stack.pop() {
        for &(w, _) in &adjacency[v] {
            seen_edges += 1;
            if !visited[w] {
                visited[w] = true;
                stack.push(w);
            }
        }
    }
    seen_edges / 2 == edge_count
}

/// Incrementally maintained reduced row-echelon basis over GF(2), with
/// bookkeeping that maps every spanned vector back to the subset of
/// inserted cycles that sums to it.
#[derive(Debug, Clone)]
pub struct Gf2Basis {
    width: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
    /// combinations[r] = sorted member indices whose sum equals rows[r]
    combinations: Vec<Vec<usize>>,
    members: Vec<Cycle>,
}

impl Gf2Basis {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
            combinations: Vec::new(),
            members: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Cycles accepted as basis members, in insertion order.
    pub fn members(&self) -> &[Cycle] {
        &self.members
    }

    /// Inserts a cycle if it is independent of the current members.
    /// Returns false (and keeps the basis unchanged) for the zero vector or
    /// any cycle already in the span.
    pub fn try_insert(&mut self, c: &Cycle) -> bool {
        assert_eq!(c.bits().len(), self.width);
        let (residual, mut combination) = self.reduce(c.bits());
        if residual.is_zero() {
            return false;
        }
        let pivot = residual.first_one().expect("nonzero residual");
        combination.push(self.members.len());
        // keep rows fully reduced: clear the new pivot from existing rows
        for r in 0..self.rows.len() {
            if self.rows[r].get(pivot) {
                self.rows[r].xor_assign(&residual);
                self.combinations[r] = sym_diff(&self.combinations[r], &combination);
            }
        }
        self.rows.push(residual);
        self.pivots.push(pivot);
        self.combinations.push(combination);
        self.members.push(c.clone());
        true
    }

    /// True iff `c` lies in the span of the members (the zero vector always
    /// does).
    pub fn spans(&self, c: &Cycle) -> bool {
        self.reduce(c.bits()).0.is_zero()
    }

    /// Member indices of the unique combination summing to `c`, if spanned.
    pub fn represent(&self, c: &Cycle) -> Option<Vec<usize>> {
        let (residual, combination) = self.reduce(c.bits());
        if residual.is_zero() {
            Some(combination)
        } else {
            None
        }
    }

    fn reduce(&self, bits: &BitVec) -> (BitVec, Vec<usize>) {
        let mut residual = bits.clone();
        let mut combination = Vec::new();
        for (r, &pivot) in self.pivots.iter().enumerate() {
            if residual.get(pivot) {
                residual.xor_assign(&self.rows[r]);
                combination = sym_diff(&combination, &self.combinations[r]);
            }
        }
        (residual, combination)
    }
}

/// Symmetric difference of two sorted index lists.
fn sym_diff(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// True iff no nonempty subset of the collection sums to zero.
pub fn independent(cycles: &[Cycle]) -> bool {
    if cycles.is_empty() {
        return true;
    }
    let mut basis = Gf2Basis::new(cycles[0].bits().len());
    cycles.iter().all(|c| basis.try_insert(c))
}

/// Span membership with the witnessing subset of basis members.
pub fn span_contains<'b>(basis: &'b Gf2Basis, c: &Cycle) -> (bool, Option<Vec<&'b Cycle>>) {
    match basis.represent(c) {
        Some(indices) => {
            let witness = indices.iter().map(|&i| &basis.members()[i]).collect();
            (true, Some(witness))
        }
        None => (false, None),
    }
}

/// Coefficient of basis cycle `c` in the unique representation of `d` over
/// the ordered basis `basis`.
pub fn lambda(basis: &[Cycle], c: &Cycle, d: &Cycle) -> Result<bool, CycleError> {
    let position = basis
        .iter()
        .position(|b| b == c)
        .ok_or(CycleError::NotAMember)?;
    let width = c.bits().len();
    let mut echelon = Gf2Basis::new(width);
    for b in basis {
        assert!(echelon.try_insert(b), "basis cycles must be independent");
    }
    let combination = echelon.represent(d).ok_or(CycleError::NotSpanned)?;
    Ok(combination.contains(&position))
}

/// Cycles of a graph whose induced subgraph is a whole connected component
/// (every component vertex has degree 2). For graphs with max degree 2 these
/// are exactly the members of the unique minimum cycle basis.
pub fn component_cycles(graph: &Graph) -> Vec<Cycle> {
    let labels = graph.component_labels();
    let component_count = graph.component_count();
    let mut degree_ok = vec![true; component_count];
    let mut touched = vec![false; component_count];
    for v in 0..graph.vertex_count() {
        let c = labels[v];
        match graph.degree(v) {
            0 => {}
            2 => touched[c] = true,
            _ => {
                degree_ok[c] = false;
                touched[c] = true;
            }
        }
    }
    let universe = graph.universe();
    let mut bits = vec![BitVec::zeros(universe.edge_count()); component_count];
    for e in graph.edge_set().ones() {
        let (u, _) = universe.endpoints(e);
        bits[labels[u]].set(e, true);
    }
    let mut cycles = (0..component_count)
        .filter(|&c| touched[c] && degree_ok[c])
        .map(|c| Cycle::from_bits_unchecked(bits[c].clone()))
        .collect::<Vec<_>>();
    cycles.sort_unstable();
    cycles
}
