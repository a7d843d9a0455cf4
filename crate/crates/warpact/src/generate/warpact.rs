//! The shrinking war-pact model.
//!
//! A seed multigraph with `m` edges is shrunk one node per step: two distinct
//! non-adjacent nodes are drawn under the configured selection rule and
//! merged, keeping all edges. Identical or adjacent draws are rejected and
//! both nodes are redrawn; a step never consumes a rejected pair. Once the
//! graph has exactly `n` nodes it still has all `m` edges.
//!
//! Seed graphs contain only pact members. A perfect matching touches all
//! `2m` of its nodes; the Erdős–Rényi and random-tree seeds are drawn over
//! `2m` labels and then restricted to the nodes carrying at least one edge,
//! so every node has degree ≥ 1 from the start and merging keeps it that
//! way. The restriction also means those seeds start below `2m` nodes, and
//! a target above the member count is rejected.

use alloc::vec::Vec;
use rand_chacha::ChaCha8Rng;

use super::{draw_index, rng_from_seed, GenerateError, SeedKind, SelectionRule};
use crate::graph::NodeId;
use crate::{MergeMap, Multigraph};

/// Default rejected draws allowed per step, times the live node count.
const RETRY_FACTOR: u64 = 1000;

/// One completed merge step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepOutcome {
    /// Surviving node handle.
    pub kept: NodeId,
    /// Handle retired by the merge.
    pub absorbed: NodeId,
    /// Pairs rejected (identical or adjacent) before this merge succeeded.
    pub rejected_draws: u64,
}

/// Shrinking process with explicit steps.
///
/// [`generate_war_pact`] runs the whole process; driving [`WarPactModel::step`]
/// by hand exposes the intermediate graphs and the merge ledger.
#[derive(Debug, Clone)]
pub struct WarPactModel {
    graph: Multigraph,
    map: MergeMap,
    rule: SelectionRule,
    target: usize,
    /// Live node handles in swap-remove order.
    live: Vec<NodeId>,
    /// Index of each live handle in `live`.
    pos: Vec<u32>,
    retry_factor: u64,
    rng: ChaCha8Rng,
}

impl WarPactModel {
    /// Builds the seed graph and the merge ledger.
    ///
    /// `nodes` is the target size and must satisfy `2 * edges >= nodes >= 1`.
    pub fn new(
        nodes: u64,
        edges: u64,
        rule: SelectionRule,
        seed: SeedKind,
        rng_seed: u64,
    ) -> Result<Self, GenerateError> {
        if nodes == 0 {
            return Err(GenerateError::NoNodes);
        }
        if 2 * edges < nodes {
            return Err(GenerateError::TooFewEdges { nodes, edges });
        }
        assert!(edges <= u32::MAX as u64 / 2, "edge count out of range");
        let mut rng = rng_from_seed(rng_seed);
        let graph = build_seed(edges as usize, seed, &mut rng);
        if (graph.node_count() as u64) < nodes {
            return Err(GenerateError::SeedTooSmall {
                members: graph.node_count() as u64,
                target: nodes,
            });
        }
        let map = MergeMap::for_seed(&graph);
        let live: Vec<NodeId> = graph.nodes().collect();
        let mut pos = alloc::vec![0u32; graph.handle_capacity()];
        for (i, &v) in live.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        Ok(WarPactModel {
            graph,
            map,
            rule,
            target: nodes as usize,
            live,
            pos,
            retry_factor: RETRY_FACTOR,
            rng,
        })
    }

    /// Overrides the per-step retry budget factor.
    ///
    /// A step aborts with [`GenerateError::RetryBudgetExhausted`] after
    /// `factor * live_nodes` consecutive rejected pairs.
    pub fn with_retry_factor(mut self, factor: u64) -> Self {
        assert!(factor > 0, "retry factor must be positive");
        self.retry_factor = factor;
        self
    }

    /// Current (possibly mid-shrink) graph.
    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    /// Merge ledger; slot counts track live degrees.
    pub fn merge_map(&self) -> &MergeMap {
        &self.map
    }

    /// Live node handles, in internal order.
    pub fn live_nodes(&self) -> &[NodeId] {
        &self.live
    }

    pub fn target_nodes(&self) -> usize {
        self.target
    }

    pub fn is_done(&self) -> bool {
        self.live.len() <= self.target
    }

    /// Performs one merge. Panics when the target size is already reached.
    pub fn step(&mut self) -> Result<StepOutcome, GenerateError> {
        assert!(!self.is_done(), "target size already reached");
        let budget = self.retry_factor * self.live.len() as u64;
        let mut rejected = 0u64;
        loop {
            let a = self.draw_first();
            let b = self.draw_second();
            if a == b || self.graph.has_edge(a, b) {
                rejected += 1;
                if rejected >= budget {
                    return Err(GenerateError::RetryBudgetExhausted {
                        live_nodes: self.live.len() as u64,
                        budget,
                    });
                }
                continue;
            }
            let kept = self
                .graph
                .merge_nodes(a, b)
                .expect("validated pair is mergeable");
            let absorbed = if kept == a { b } else { a };
            self.map.record_merge(kept, absorbed);
            self.remove_live(absorbed);
            return Ok(StepOutcome {
                kept,
                absorbed,
                rejected_draws: rejected,
            });
        }
    }

    /// Runs the remaining steps and returns the compacted result.
    pub fn finish(mut self) -> Result<Multigraph, GenerateError> {
        while !self.is_done() {
            self.step()?;
        }
        Ok(self.graph.compact())
    }

    fn remove_live(&mut self, v: NodeId) {
        let idx = self.pos[v as usize] as usize;
        self.live.swap_remove(idx);
        if let Some(&moved) = self.live.get(idx) {
            self.pos[moved as usize] = idx as u32;
        }
    }

    fn draw_uniform(&mut self) -> NodeId {
        self.live[draw_index(&mut self.rng, self.live.len()) as usize]
    }

    fn draw_first(&mut self) -> NodeId {
        match self.rule {
            SelectionRule::RR => self.draw_uniform(),
            SelectionRule::KK | SelectionRule::KR | SelectionRule::KI => {
                self.map.sample_degree_proportional(&mut self.rng)
            }
        }
    }

    fn draw_second(&mut self) -> NodeId {
        match self.rule {
            SelectionRule::RR | SelectionRule::KR => self.draw_uniform(),
            SelectionRule::KK => self.map.sample_degree_proportional(&mut self.rng),
            SelectionRule::KI => self.draw_inverse_degree(),
        }
    }

    /// Weighted draw with weight `1/degree`, rebuilt by linear scan.
    ///
    /// Every live node has degree ≥ 1: seeds hold only pact members and a
    /// merge sums two positive degrees, so the weights are always finite.
    fn draw_inverse_degree(&mut self) -> NodeId {
        let total: f64 = self
            .live
            .iter()
            .map(|&v| {
                debug_assert!(self.graph.degree(v) > 0, "isolated node in live set");
                1.0 / self.graph.degree(v) as f64
            })
            .sum();
        let mut remaining = rand::Rng::random::<f64>(&mut self.rng) * total;
        for &v in &self.live {
            remaining -= 1.0 / self.graph.degree(v) as f64;
            if remaining <= 0.0 {
                return v;
            }
        }
        // floating-point slack: fall back to the last live node
        *self.live.last().expect("live set is never empty")
    }
}

/// Runs the full process: seed, `2m - n` merges, compacted result.
pub fn generate_war_pact(
    nodes: u64,
    edges: u64,
    rule: SelectionRule,
    seed: SeedKind,
    rng_seed: u64,
) -> Result<Multigraph, GenerateError> {
    WarPactModel::new(nodes, edges, rule, seed, rng_seed)?.finish()
}

fn build_seed(m: usize, kind: SeedKind, rng: &mut ChaCha8Rng) -> Multigraph {
    match kind {
        SeedKind::PerfectMatching => {
            let mut g = Multigraph::with_nodes(2 * m);
            for i in 0..m as NodeId {
                g.add_edge(i, m as NodeId + i);
            }
            g
        }
        SeedKind::ErdosRenyi => {
            // uniform simple graph with exactly m edges on 2m labels,
            // restricted to the labels that carry an edge
            let n = 2 * m;
            let mut chosen = alloc::collections::BTreeSet::new();
            while chosen.len() < m {
                let u = draw_index(rng, n);
                let v = draw_index(rng, n);
                if u != v {
                    chosen.insert((u.min(v), u.max(v)));
                }
            }
            let mut handle = alloc::vec![NodeId::MAX; n];
            let mut members = 0u32;
            for &(u, v) in &chosen {
                for w in [u, v] {
                    if handle[w as usize] == NodeId::MAX {
                        handle[w as usize] = members;
                        members += 1;
                    }
                }
            }
            let mut g = Multigraph::with_nodes(members as usize);
            for (u, v) in chosen {
                g.add_edge(handle[u as usize], handle[v as usize]);
            }
            g
        }
        SeedKind::RandomTree => {
            // random recursive tree: m edges touch exactly m + 1 nodes
            let mut g = Multigraph::with_nodes(m + 1);
            for t in 1..=m as NodeId {
                let parent = draw_index(rng, t as usize);
                g.add_edge(parent, t);
            }
            g
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shrinks_to_target_and_keeps_edges() {
        for rule in SelectionRule::ALL {
            let g = generate_war_pact(20, 60, rule, SeedKind::PerfectMatching, 42).unwrap();
            assert_eq!(g.node_count(), 20, "{rule}");
            assert_eq!(g.edge_count(), 60, "{rule}");
            assert_eq!(g.degree_sum(), 120, "{rule}");
        }
    }

    #[test]
    fn same_seed_reproduces_same_graph() {
        for seed in SeedKind::ALL {
            let a = generate_war_pact(30, 80, SelectionRule::KR, seed, 7).unwrap();
            let b = generate_war_pact(30, 80, SelectionRule::KR, seed, 7).unwrap();
            assert_eq!(a, b, "{seed}");
            let c = generate_war_pact(30, 80, SelectionRule::KR, seed, 8).unwrap();
            assert_ne!(a, c, "{seed}");
        }
    }

    #[test]
    fn seed_graphs_have_expected_shape() {
        let mut rng = rng_from_seed(1);
        let matching = build_seed(5, SeedKind::PerfectMatching, &mut rng);
        assert_eq!(matching.node_count(), 10);
        assert_eq!(matching.edge_count(), 5);
        assert!(matching.nodes().all(|v| matching.degree(v) == 1));

        // members only: every node carries at least one of the 5 edges
        let er = build_seed(5, SeedKind::ErdosRenyi, &mut rng);
        assert!(er.node_count() <= 10);
        assert_eq!(er.edge_count(), 5);
        assert!(er.edges().all(|(_, _, mult)| mult == 1));
        assert!(er.nodes().all(|v| er.degree(v) >= 1));

        let tree = build_seed(5, SeedKind::RandomTree, &mut rng);
        assert_eq!(tree.node_count(), 6);
        assert_eq!(tree.edge_count(), 5);
        assert_eq!(tree.connected_components().len(), 1);
        assert!(tree.nodes().all(|v| tree.degree(v) >= 1));
    }

    #[test]
    fn target_above_seed_member_count_is_rejected() {
        // a tree seed with m edges has exactly m + 1 member nodes
        assert_eq!(
            WarPactModel::new(8, 5, SelectionRule::RR, SeedKind::RandomTree, 0).err(),
            Some(GenerateError::SeedTooSmall {
                members: 6,
                target: 8
            })
        );
        assert!(generate_war_pact(6, 5, SelectionRule::RR, SeedKind::RandomTree, 0).is_ok());
    }

    #[test]
    fn rejects_infeasible_targets() {
        assert_eq!(
            WarPactModel::new(0, 5, SelectionRule::RR, SeedKind::PerfectMatching, 0).err(),
            Some(GenerateError::NoNodes)
        );
        assert_eq!(
            WarPactModel::new(11, 5, SelectionRule::RR, SeedKind::PerfectMatching, 0).err(),
            Some(GenerateError::TooFewEdges {
                nodes: 11,
                edges: 5
            })
        );
    }

    #[test]
    fn target_equal_to_seed_size_means_no_steps() {
        let g = generate_war_pact(10, 5, SelectionRule::KK, SeedKind::PerfectMatching, 3).unwrap();
        assert_eq!(g.node_count(), 10);
        assert_eq!(g.edge_count(), 5);
        assert!(g.nodes().all(|v| g.degree(v) == 1));
    }

    #[test]
    fn stuck_clique_exhausts_retry_budget() {
        // m = 3 can form a triangle at 3 nodes; asking for 2 must fail
        let result = generate_war_pact(2, 3, SelectionRule::RR, SeedKind::PerfectMatching, 11);
        assert!(matches!(
            result,
            Err(GenerateError::RetryBudgetExhausted { .. })
        ));
    }

    #[test]
    fn retry_factor_is_configurable() {
        let model = WarPactModel::new(2, 3, SelectionRule::RR, SeedKind::PerfectMatching, 11)
            .unwrap()
            .with_retry_factor(7);
        match model.finish() {
            Err(GenerateError::RetryBudgetExhausted { live_nodes, budget }) => {
                assert_eq!(budget, 7 * live_nodes);
            }
            other => panic!("expected exhausted budget, got {other:?}"),
        }
    }

    #[test]
    fn stepping_tracks_slot_counts_and_live_set() {
        let mut model =
            WarPactModel::new(8, 30, SelectionRule::KI, SeedKind::ErdosRenyi, 5).unwrap();
        while !model.is_done() {
            let before = model.live_nodes().len();
            let out = model.step().unwrap();
            assert_eq!(model.live_nodes().len(), before - 1);
            assert!(!model.graph().is_alive(out.absorbed));
            for &v in model.live_nodes() {
                assert_eq!(model.merge_map().slot_count(v), model.graph().degree(v));
            }
        }
        let g = model.finish().unwrap();
        assert_eq!(g.node_count(), 8);
        assert_eq!(g.edge_count(), 30);
    }
}
