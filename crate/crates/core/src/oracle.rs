//! Exhaustive reference computations for tiny inputs: every cycle of a
//! graph, every minimum cycle basis, the optimum over the full cycle space
//! of an intersection, and maximum stable sets of host graphs. These are the
//! ground truth the fast paths are validated against.

use thiserror::Error;

use crate::bits::BitVec;
use crate::cycle::{Cycle, Gf2Basis};
use crate::generate::HostGraph;
use crate::graph::{intersection_graph, Graph, Instance};
use crate::horton::McbOracle;

/// Enumeration limits. Exceeding one is a refusal, never silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Max cycle space dimension for full-space enumerations.
    pub max_cycle_space_dim: usize,
    /// Max candidate list size for subset search.
    pub max_candidates: usize,
    /// Max host graph vertices for stable set enumeration.
    pub max_host_vertices: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self {
            max_cycle_space_dim: 5,
            max_candidates: 20,
            max_host_vertices: 7,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("enumeration budget exceeded: {quantity} = {actual} > {limit}")]
pub struct BudgetError {
    pub quantity: &'static str,
    pub actual: usize,
    pub limit: usize,
}

fn check(quantity: &'static str, actual: usize, limit: usize) -> Result<(), BudgetError> {
    if actual > limit {
        Err(BudgetError {
            quantity,
            actual,
            limit,
        })
    } else {
        Ok(())
    }
}

/// A fundamental cycle basis from BFS spanning forests (deterministic root
/// and neighbor order).
fn fundamental_basis(graph: &Graph) -> Vec<Cycle> {
    let universe = graph.universe();
    let width = universe.edge_count();
    let n = graph.vertex_count();
    let mut visited = vec![false; n];
    // path_to_root[v] = edge set of the tree path from v to its BFS root
    let mut path_to_root: Vec<BitVec> = vec![BitVec::zeros(width); n];
    let mut tree_edges = BitVec::zeros(width);
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in graph.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    tree_edges.set(e, true);
                    let mut path = path_to_root[v].clone();
                    path.set(e, true);
                    path_to_root[w] = path;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut basis = Vec::new();
    for e in graph.edge_set().ones() {
        if tree_edges.get(e) {
            continue;
        }
        let (u, v) = universe.endpoints(e);
        let mut bits = path_to_root[u].xor(&path_to_root[v]);
        bits.set(e, true);
        basis.push(Cycle::try_new(universe, bits).expect("fundamental cycle"));
    }
    basis
}

/// All `2^nu - 1` nonzero vectors of the cycle space, canonical order.
pub fn all_cycles(graph: &Graph, budget: &EnumerationBudget) -> Result<Vec<Cycle>, BudgetError> {
    let dim = graph.cycle_space_dimension();
    check("cycle space dimension", dim, budget.max_cycle_space_dim)?;
    let basis = fundamental_basis(graph);
    debug_assert_eq!(basis.len(), dim);
    let universe = graph.universe();
    let mut cycles = Vec::with_capacity((1usize << dim) - 1);
    for mask in 1u64..(1 << dim) {
        let members = basis
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, c)| c);
        cycles.push(crate::cycle::sum_of(universe, members));
    }
    cycles.sort_unstable();
    Ok(cycles)
}

/// Every minimum cycle basis, as sorted cycle lists in canonical list order.
///
/// Branch and bound over the cycles sorted by weight: a partial independent
/// set is cut when its weight plus the cheapest possible completion already
/// exceeds the best known total. A first pass finds the minimum total, a
/// second collects every basis attaining it.
pub fn all_mcbs(graph: &Graph, budget: &EnumerationBudget) -> Result<Vec<Vec<Cycle>>, BudgetError> {
    let dim = graph.cycle_space_dimension();
    let cycles = all_cycles(graph, budget)?;
    if dim == 0 {
        return Ok(vec![Vec::new()]);
    }
    let weights: Vec<usize> = cycles.iter().map(Cycle::weight).collect();
    // suffix_min_sum[i][need]: cheapest way to pick `need` cycles from i..
    // = sum of the first `need` weights from position i (weights ascending)
    let cheapest = |from: usize, need: usize| -> Option<usize> {
        (from + need <= weights.len()).then(|| weights[from..from + need].iter().sum())
    };

    let width = graph.universe().edge_count();
    let best;
    // pass 1: minimum total weight
    {
        struct State<'a> {
            cycles: &'a [Cycle],
            best: usize,
        }
        fn dfs(
            s: &mut State<'_>,
            from: usize,
            chosen: usize,
            weight: usize,
            basis: &Gf2Basis,
            dim: usize,
            cheapest: &dyn Fn(usize, usize) -> Option<usize>,
        ) {
            if chosen == dim {
                s.best = s.best.min(weight);
                return;
            }
            for i in from..s.cycles.len() {
                let Some(extra) = cheapest(i, dim - chosen) else {
                    break;
                };
                if weight + extra >= s.best {
                    break; // weights ascending: no later start can beat it
                }
                let mut next = basis.clone();
                if next.try_insert(&s.cycles[i]) {
                    dfs(
                        s,
                        i + 1,
                        chosen + 1,
                        weight + s.cycles[i].weight(),
                        &next,
                        dim,
                        cheapest,
                    );
                }
            }
        }
        let mut state = State {
            cycles: &cycles,
            best: usize::MAX,
        };
        dfs(
            &mut state,
            0,
            0,
            0,
            &Gf2Basis::new(width),
            dim,
            &cheapest,
        );
        best = state.best;
    }
    debug_assert_ne!(best, usize::MAX, "cycle space has a basis");

    // pass 2: collect all bases of weight `best`
    let mut found: Vec<Vec<Cycle>> = Vec::new();
    {
        fn dfs(
            cycles: &[Cycle],
            found: &mut Vec<Vec<Cycle>>,
            stack: &mut Vec<usize>,
            from: usize,
            weight: usize,
            basis: &Gf2Basis,
            dim: usize,
            target: usize,
            cheapest: &dyn Fn(usize, usize) -> Option<usize>,
        ) {
            if stack.len() == dim {
                if weight == target {
                    found.push(stack.iter().map(|&i| cycles[i].clone()).collect());
                }
                return;
            }
            for i in from..cycles.len() {
                let Some(extra) = cheapest(i, dim - stack.len()) else {
                    break;
                };
                if weight + extra > target {
                    break;
                }
                let mut next = basis.clone();
                if next.try_insert(&cycles[i]) {
                    stack.push(i);
                    dfs(
                        cycles,
                        found,
                        stack,
                        i + 1,
                        weight + cycles[i].weight(),
                        &next,
                        dim,
                        target,
                        cheapest,
                    );
                    stack.pop();
                }
            }
        }
        dfs(
            &cycles,
            &mut found,
            &mut Vec::new(),
            0,
            0,
            &Gf2Basis::new(width),
            dim,
            best,
            &cheapest,
        );
    }
    Ok(found)
}

/// Maximum size of a cycle set drawn from the whole cycle space of the
/// intersection graph that extends to a minimum cycle basis in every graph,
/// with the lexicographically first witness.
pub fn opt_over_full_space(
    instance: &Instance,
    budget: &EnumerationBudget,
) -> Result<(usize, Vec<Cycle>), BudgetError> {
    let inter = intersection_graph(instance);
    let cycles = all_cycles(&inter, budget)?;
    let oracles: Vec<McbOracle<'_>> = instance.graphs().iter().map(McbOracle::new).collect();

    // upper bound: the rank of the cycle list in each graph's matroid
    let upper = oracles
        .iter()
        .map(|oracle| matroid_rank(oracle, &cycles))
        .min()
        .unwrap_or(0)
        .min(inter.cycle_space_dimension());

    struct Search<'a> {
        cycles: &'a [Cycle],
        oracles: &'a [McbOracle<'a>],
        width: usize,
        best: usize,
        witness: Vec<usize>,
        upper: usize,
    }
    fn dfs(s: &mut Search<'_>, from: usize, chosen: &mut Vec<usize>, basis: &Gf2Basis) {
        if chosen.len() > s.best {
            s.best = chosen.len();
            s.witness = chosen.clone();
        }
        if s.best == s.upper {
            return;
        }
        for i in from..s.cycles.len() {
            if chosen.len() + (s.cycles.len() - i) <= s.best {
                break;
            }
            // linear independence is necessary in every matroid; test it first
            let mut next = basis.clone();
            if !next.try_insert(&s.cycles[i]) {
                continue;
            }
            chosen.push(i);
            let subset: Vec<Cycle> = chosen.iter().map(|&j| s.cycles[j].clone()).collect();
            let feasible = s
                .oracles
                .iter()
                .all(|oracle| oracle.is_independent(&subset).expect("cycles lie in graphs"));
            if feasible {
                dfs(s, i + 1, chosen, &next);
            }
            chosen.pop();
            if s.best == s.upper {
                return;
            }
        }
    }
    let mut search = Search {
        cycles: &cycles,
        oracles: &oracles,
        width: inter.universe().edge_count(),
        best: 0,
        witness: Vec::new(),
        upper,
    };
    let width = search.width;
    dfs(&mut search, 0, &mut Vec::new(), &Gf2Basis::new(width));
    let witness = search
        .witness
        .iter()
        .map(|&i| cycles[i].clone())
        .collect();
    Ok((search.best, witness))
}

/// Size of a maximum independent subset of `cycles` in one graph's matroid,
/// by the single-matroid greedy.
fn matroid_rank(oracle: &McbOracle<'_>, cycles: &[Cycle]) -> usize {
    let mut kept: Vec<Cycle> = Vec::new();
    for c in cycles {
        kept.push(c.clone());
        if !oracle.is_independent(&kept).expect("cycles lie in graph") {
            kept.pop();
        }
    }
    kept.len()
}

/// Exact maximum stable set size by subset enumeration.
pub fn max_stable_set(host: &HostGraph, budget: &EnumerationBudget) -> Result<usize, BudgetError> {
    let n = host.vertex_count();
    check("host vertices", n, budget.max_host_vertices)?;
    let mut adjacency = vec![0u64; n];
    for &(u, v) in host.edges() {
        adjacency[u] |= 1 << v;
        adjacency[v] |= 1 << u;
    }
    let mut best = 0;
    for mask in 0u64..(1 << n) {
        if (0..n).all(|v| mask >> v & 1 == 0 || mask & adjacency[v] == 0) {
            best = best.max(mask.count_ones() as usize);
        }
    }
    Ok(best)
}
