//! Network generators: the shrinking war-pact model and three classic
//! baselines (Erdős–Rényi, Barabási–Albert, Watts–Strogatz).
//!
//! All generators are deterministic functions of their parameters and an
//! explicit 64-bit RNG seed.

use core::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::Multigraph;

mod classic;
mod warpact;

pub use classic::{barabasi_albert, erdos_renyi, watts_strogatz};
pub use warpact::{generate_war_pact, StepOutcome, WarPactModel};

/// How the two merge candidates are drawn each step.
///
/// The first letter names the rule for the first node, the second letter the
/// rule for the second: `R` uniform at random, `K` proportional to degree,
/// `I` proportional to inverse degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SelectionRule {
    /// Both nodes uniform.
    RR,
    /// Both nodes degree-proportional.
    KK,
    /// First node degree-proportional, second uniform.
    KR,
    /// First node degree-proportional, second inverse-degree-proportional.
    KI,
}

impl SelectionRule {
    pub const ALL: [SelectionRule; 4] = [
        SelectionRule::RR,
        SelectionRule::KK,
        SelectionRule::KR,
        SelectionRule::KI,
    ];

    /// Lower-case two-letter code, as accepted on the command line.
    pub fn code(self) -> &'static str {
        match self {
            SelectionRule::RR => "rr",
            SelectionRule::KK => "kk",
            SelectionRule::KR => "kr",
            SelectionRule::KI => "ki",
        }
    }
}

impl fmt::Display for SelectionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Initial graph handed to the shrinking process.
///
/// Every seeding has exactly `m` edges; the node count is `2m` except for
/// the random tree, which spreads its `m` edges over `m + 1` connected nodes
/// and leaves the remaining `m - 1` nodes isolated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SeedKind {
    /// Perfect matching: `m` disjoint edges on `2m` nodes.
    #[default]
    PerfectMatching,
    /// Uniform simple graph with exactly `m` edges on `2m` nodes.
    ErdosRenyi,
    /// Random recursive tree on `m + 1` of the `2m` nodes.
    RandomTree,
}

impl SeedKind {
    pub const ALL: [SeedKind; 3] = [
        SeedKind::PerfectMatching,
        SeedKind::ErdosRenyi,
        SeedKind::RandomTree,
    ];

    /// Name accepted on the command line.
    pub fn code(self) -> &'static str {
        match self {
            SeedKind::PerfectMatching => "matching",
            SeedKind::ErdosRenyi => "er",
            SeedKind::RandomTree => "tree",
        }
    }
}

impl fmt::Display for SeedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Invalid parameters or a failed run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenerateError {
    /// The node count must be positive.
    NoNodes,
    /// The shrinking model needs `2m >= n` to reach `n` nodes by merging.
    TooFewEdges { nodes: u64, edges: u64 },
    /// The drawn seed graph has fewer member nodes than the target size.
    SeedTooSmall { members: u64, target: u64 },
    /// The implied edge probability `<k>/(n-1)` is outside `[0, 1]`.
    MeanDegreeOutOfRange { mean_degree: f64, nodes: u64 },
    /// Preferential attachment needs at least one edge per added node.
    NoAttachmentEdges,
    /// Preferential attachment needs more nodes than the initial clique.
    TooFewNodesForClique { nodes: u64, clique: u64 },
    /// The ring lattice needs an even coordination number in `[2, n)`.
    LatticeDegreeInvalid { nodes: u64, lattice_degree: u64 },
    /// A probability parameter is outside `[0, 1]`.
    ProbabilityOutOfRange(f64),
    /// The merge process hit its retry budget: every draw kept returning
    /// identical or adjacent pairs, e.g. because the remaining nodes form a
    /// clique.
    RetryBudgetExhausted { live_nodes: u64, budget: u64 },
}

impl fmt::Display for GenerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GenerateError::NoNodes => write!(f, "node count must be positive"),
            GenerateError::TooFewEdges { nodes, edges } => write!(
                f,
                "cannot shrink to {nodes} nodes with {edges} edges; need 2m >= n"
            ),
            GenerateError::SeedTooSmall { members, target } => write!(
                f,
                "seed graph has {members} member nodes, fewer than the {target} requested"
            ),
            GenerateError::MeanDegreeOutOfRange { mean_degree, nodes } => write!(
                f,
                "mean degree {mean_degree} is infeasible for {nodes} nodes"
            ),
            GenerateError::NoAttachmentEdges => {
                write!(f, "preferential attachment needs at least one edge per node")
            }
            GenerateError::TooFewNodesForClique { nodes, clique } => write!(
                f,
                "preferential attachment on {nodes} nodes cannot start from a {clique}-clique"
            ),
            GenerateError::LatticeDegreeInvalid {
                nodes,
                lattice_degree,
            } => write!(
                f,
                "ring lattice on {nodes} nodes needs an even coordination number in [2, n); got {lattice_degree}"
            ),
            GenerateError::ProbabilityOutOfRange(p) => {
                write!(f, "probability {p} is outside [0, 1]")
            }
            GenerateError::RetryBudgetExhausted { live_nodes, budget } => write!(
                f,
                "no mergeable pair found in {budget} draws at {live_nodes} live nodes; \
                 the remaining nodes may form a clique"
            ),
        }
    }
}

impl core::error::Error for GenerateError {}

/// Full description of one graph to generate.
///
/// `generate` dispatches on the variant; equal specs always produce
/// byte-identical graphs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelSpec {
    /// Shrinking war-pact model: start from a seed graph with `edges` edges,
    /// merge non-adjacent pairs until `nodes` nodes remain.
    WarPact {
        nodes: u64,
        edges: u64,
        rule: SelectionRule,
        seed: SeedKind,
        rng_seed: u64,
    },
    /// Erdős–Rényi `G(n, p)` with `p = mean_degree / (n - 1)`.
    ErdosRenyi {
        nodes: u64,
        mean_degree: f64,
        rng_seed: u64,
    },
    /// Barabási–Albert preferential attachment adding `attach_edges` edges
    /// per new node, grown from a clique on `attach_edges + 1` nodes.
    BarabasiAlbert {
        nodes: u64,
        attach_edges: u64,
        rng_seed: u64,
    },
    /// Watts–Strogatz small world: ring lattice with `lattice_degree`
    /// neighbors per node, each edge rewired with probability `rewire_prob`.
    WattsStrogatz {
        nodes: u64,
        lattice_degree: u64,
        rewire_prob: f64,
        rng_seed: u64,
    },
}

impl ModelSpec {
    /// Builds the described graph, with nodes labeled `0..n`.
    pub fn generate(&self) -> Result<Multigraph, GenerateError> {
        match *self {
            ModelSpec::WarPact {
                nodes,
                edges,
                rule,
                seed,
                rng_seed,
            } => generate_war_pact(nodes, edges, rule, seed, rng_seed),
            ModelSpec::ErdosRenyi {
                nodes,
                mean_degree,
                rng_seed,
            } => erdos_renyi(nodes, mean_degree, rng_seed),
            ModelSpec::BarabasiAlbert {
                nodes,
                attach_edges,
                rng_seed,
            } => barabasi_albert(nodes, attach_edges, rng_seed),
            ModelSpec::WattsStrogatz {
                nodes,
                lattice_degree,
                rewire_prob,
                rng_seed,
            } => watts_strogatz(nodes, lattice_degree, rewire_prob, rng_seed),
        }
    }

    pub fn rng_seed(&self) -> u64 {
        match *self {
            ModelSpec::WarPact { rng_seed, .. }
            | ModelSpec::ErdosRenyi { rng_seed, .. }
            | ModelSpec::BarabasiAlbert { rng_seed, .. }
            | ModelSpec::WattsStrogatz { rng_seed, .. } => rng_seed,
        }
    }

    /// Same spec with a different RNG seed; used to spread realizations.
    pub fn with_rng_seed(mut self, new_seed: u64) -> Self {
        match &mut self {
            ModelSpec::WarPact { rng_seed, .. }
            | ModelSpec::ErdosRenyi { rng_seed, .. }
            | ModelSpec::BarabasiAlbert { rng_seed, .. }
            | ModelSpec::WattsStrogatz { rng_seed, .. } => *rng_seed = new_seed,
        }
        self
    }
}

pub(crate) fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw from `0..bound` as a `u32` handle index.
pub(crate) fn draw_index<R: Rng + ?Sized>(rng: &mut R, bound: usize) -> u32 {
    debug_assert!(bound > 0 && bound <= u32::MAX as usize);
    rng.random_range(0..bound as u32)
}
