//! Computing maximum common subsets of minimum cycle bases across graphs
//! that share a vertex set.
//!
//! Given k graphs over one vertex set, the goal is a largest cycle set `B`
//! such that every graph has a minimum cycle basis containing `B`. The crate
//! provides the GF(2) cycle-space algebra, minimum cycle bases with an
//! extendability oracle, the polynomial candidate list, exact and
//! approximate solvers, generators for instances with known optima, and
//! brute-force reference oracles for validation.

pub mod bits;
pub mod candidates;
pub mod cycle;
pub mod generate;
pub mod graph;
pub mod horton;
pub mod io;
pub mod oracle;
pub mod solver;
pub mod special;

pub use bits::BitVec;
pub use candidates::{candidates_list, filter_by_weight, CandidateList};
pub use cycle::{cycle_sum, independent, is_cycle, is_elementary, sum_of, Cycle, Gf2Basis};
pub use graph::{
    instance_stats, intersection_graph, EdgeId, EdgeUniverse, Graph, Instance, InstanceStats,
    VertexId,
};
pub use horton::{
    horton_candidates, is_independent_in_mcb, minimum_cycle_basis, witness_basis, McbOracle,
    McbResult,
};
pub use oracle::{all_cycles, all_mcbs, max_stable_set, opt_over_full_space, EnumerationBudget};
pub use solver::{
    solve_auto, solve_bruteforce, solve_greedy, solve_k2, solve_xp, verify, Method, SolveReport,
};
pub use special::{solve_gamma3, solve_gamma4_delta3, triangles_of};
