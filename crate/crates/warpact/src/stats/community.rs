//! Community structure: the modularity score and a Leiden-style randomized
//! optimizer (local moving, refinement, aggregation).
//!
//! Both work on the simple projection, matching the usual definition of
//! `Q = (1/2m) Σ_ij (A_ij − k_i k_j / 2m) δ(c_i, c_j)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

use crate::graph::Csr;
use crate::{derive_seed, Multigraph};

/// Node-to-community assignment.
///
/// `labels[i]` is the community of the i-th live node in ascending handle
/// order; labels are dense in `0..community_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommunityPartition {
    pub labels: Vec<u32>,
    pub community_count: u32,
}

impl CommunityPartition {
    /// Puts every node into one community.
    pub fn single(n: usize) -> Self {
        CommunityPartition {
            labels: vec![0; n],
            community_count: if n == 0 { 0 } else { 1 },
        }
    }

    /// Puts every node into its own community.
    pub fn singletons(n: usize) -> Self {
        CommunityPartition {
            labels: (0..n as u32).collect(),
            community_count: n as u32,
        }
    }
}

/// Result of repeated randomized community detection.
#[derive(Debug, Clone, PartialEq)]
pub struct CommunityDetection {
    /// Partition of the best run (highest modularity).
    pub partition: CommunityPartition,
    /// Modularity of the best run.
    pub best_modularity: f64,
    /// Mean modularity across runs.
    pub mean_modularity: f64,
    pub runs: u32,
}

/// Modularity of a partition, on the simple projection.
///
/// Exact integer accumulation of internal edges and community degrees;
/// `labels` follows the [`CommunityPartition`] indexing. Returns 0 for
/// edgeless graphs, where the score is vacuous.
pub fn modularity(g: &Multigraph, partition: &CommunityPartition) -> f64 {
    let csr = Csr::from_simple(g);
    assert_eq!(partition.labels.len(), csr.len(), "label per live node");
    let m2: u64 = csr.targets.len() as u64; // 2m of the simple projection
    if m2 == 0 {
        return 0.0;
    }
    let communities = partition.labels.iter().max().map_or(0, |&c| c + 1);
    let mut internal = vec![0u64; communities as usize]; // 2·e_c
    let mut degree = vec![0u64; communities as usize]; // d_c
    for v in 0..csr.len() as u32 {
        let c = partition.labels[v as usize];
        degree[c as usize] += csr.degree(v) as u64;
        for &w in csr.neighbors(v) {
            if partition.labels[w as usize] == c {
                internal[c as usize] += 1;
            }
        }
    }
    let mut q = 0.0;
    for c in 0..communities as usize {
        let e = internal[c] as f64 / m2 as f64;
        let d = degree[c] as f64 / m2 as f64;
        q += e - d * d;
    }
    q
}

/// Undirected weighted graph for the optimizer's aggregation levels.
#[derive(Debug, Clone)]
struct WGraph {
    starts: Vec<u32>,
    targets: Vec<u32>,
    weights: Vec<f64>,
    /// Internal weight folded into a node by aggregation (self-loop).
    self_weight: Vec<f64>,
    /// `2·self_weight + Σ adjacent weights` per node.
    strength: Vec<f64>,
    /// Total edge weight `W`; strengths sum to `2W`.
    total: f64,
}

impl WGraph {
    fn from_csr(csr: &Csr) -> WGraph {
        let n = csr.len();
        let strength: Vec<f64> = (0..n as u32).map(|v| csr.degree(v) as f64).collect();
        WGraph {
            starts: csr.starts.clone(),
            targets: csr.targets.clone(),
            weights: vec![1.0; csr.targets.len()],
            self_weight: vec![0.0; n],
            strength,
            total: csr.targets.len() as f64 / 2.0,
        }
    }

    fn len(&self) -> usize {
        self.self_weight.len()
    }

    fn neighbors(&self, v: u32) -> impl Iterator<Item = (u32, f64)> + '_ {
        let lo = self.starts[v as usize] as usize;
        let hi = self.starts[v as usize + 1] as usize;
        self.targets[lo..hi]
            .iter()
            .zip(&self.weights[lo..hi])
            .map(|(&t, &w)| (t, w))
    }
}

/// Scratch accumulator for per-community edge weights around one node.
struct NeighborWeights {
    weight: Vec<f64>,
    touched: Vec<u32>,
}

impl NeighborWeights {
    fn new(capacity: usize) -> Self {
        NeighborWeights {
            weight: vec![0.0; capacity],
            touched: Vec::new(),
        }
    }

    fn add(&mut self, community: u32, w: f64) {
        if self.weight[community as usize] == 0.0 {
            self.touched.push(community);
        }
        self.weight[community as usize] += w;
    }

    fn clear(&mut self) {
        for &c in &self.touched {
            self.weight[c as usize] = 0.0;
        }
        self.touched.clear();
    }
}

/// Relabels `part` to dense labels `0..count`, returning the count.
fn relabel_dense(part: &mut [u32]) -> u32 {
    let mut remap: BTreeMap<u32, u32> = BTreeMap::new();
    for label in part.iter_mut() {
        let next = remap.len() as u32;
        *label = *remap.entry(*label).or_insert(next);
    }
    remap.len() as u32
}

/// Louvain-style local moving; `part` labels must be dense on entry and
/// stay dense-ish (they are relabeled by the caller). Returns whether any
/// node moved.
fn local_move(g: &WGraph, part: &mut [u32], rng: &mut ChaCha8Rng) -> bool {
    let n = g.len();
    let two_w = 2.0 * g.total;
    let communities = part.iter().max().map_or(0, |&c| c + 1) as usize;
    let mut comm_strength = vec![0.0f64; communities.max(n)];
    for v in 0..n {
        comm_strength[part[v] as usize] += g.strength[v];
    }
    let mut order: Vec<u32> = (0..n as u32).collect();
    let mut scratch = NeighborWeights::new(comm_strength.len());
    let mut moved_any = false;
    for _pass in 0..64 {
        order.shuffle(rng);
        let mut moved_this_pass = false;
        for &v in &order {
            let old = part[v as usize];
            let sv = g.strength[v as usize];
            comm_strength[old as usize] -= sv;
            scratch.clear();
            for (t, w) in g.neighbors(v) {
                if t != v {
                    scratch.add(part[t as usize], w);
                }
            }
            // gain of joining c, up to shared constants:
            // w(v→c) − s_v·Σ_c strengths / 2W
            let mut best = old;
            let mut best_score =
                scratch.weight[old as usize] - sv * comm_strength[old as usize] / two_w;
            for &c in &scratch.touched {
                let score = scratch.weight[c as usize] - sv * comm_strength[c as usize] / two_w;
                if score > best_score + 1e-12 {
                    best = c;
                    best_score = score;
                }
            }
            comm_strength[best as usize] += sv;
            if best != old {
                part[v as usize] = best;
                moved_this_pass = true;
                moved_any = true;
            }
        }
        if !moved_this_pass {
            break;
        }
    }
    moved_any
}

/// Splits each community into well-separated sub-communities: every node
/// starts alone and may merge once into a neighboring sub-community of its
/// own community when that strictly increases modularity.
fn refine(g: &WGraph, part: &[u32], rng: &mut ChaCha8Rng) -> Vec<u32> {
    let n = g.len();
    let two_w = 2.0 * g.total;
    let mut refined: Vec<u32> = (0..n as u32).collect();
    let mut strength: Vec<f64> = g.strength.clone();
    let mut size = vec![1u32; n];
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.shuffle(rng);
    let mut scratch = NeighborWeights::new(n);
    for &v in &order {
        if size[refined[v as usize] as usize] > 1 {
            continue; // only still-single nodes may merge
        }
        let sv = g.strength[v as usize];
        scratch.clear();
        for (t, w) in g.neighbors(v) {
            if t != v && part[t as usize] == part[v as usize] {
                scratch.add(refined[t as usize], w);
            }
        }
        let mut best = refined[v as usize];
        let mut best_score = 0.0;
        for &c in &scratch.touched {
            let score = scratch.weight[c as usize] - sv * strength[c as usize] / two_w;
            if score > best_score + 1e-12 {
                best = c;
                best_score = score;
            }
        }
        if best != refined[v as usize] {
            let old = refined[v as usize];
            strength[old as usize] -= sv;
            strength[best as usize] += sv;
            size[old as usize] -= 1;
            size[best as usize] += 1;
            refined[v as usize] = best;
        }
    }
    let mut dense = refined;
    relabel_dense(&mut dense);
    dense
}

/// Contracts each refined community to one node, keeping summed edge
/// weights and folding internal weight into self-loops. Returns the
/// aggregated graph and the carried-over partition labels for its nodes.
fn aggregate(g: &WGraph, refined: &[u32], part: &[u32]) -> (WGraph, Vec<u32>) {
    let nc = refined.iter().max().map_or(0, |&c| c + 1) as usize;
    let mut self_weight = vec![0.0f64; nc];
    let mut carried = vec![0u32; nc];
    for v in 0..g.len() {
        let c = refined[v] as usize;
        self_weight[c] += g.self_weight[v];
        carried[c] = part[v];
    }
    let mut cross: BTreeMap<(u32, u32), f64> = BTreeMap::new();
    for v in 0..g.len() as u32 {
        let cv = refined[v as usize];
        for (t, w) in g.neighbors(v) {
            if t <= v {
                continue; // each undirected edge once
            }
            let ct = refined[t as usize];
            if cv == ct {
                self_weight[cv as usize] += w;
            } else {
                *cross.entry((cv.min(ct), cv.max(ct))).or_insert(0.0) += w;
            }
        }
    }
    let mut adj: Vec<Vec<(u32, f64)>> = vec![Vec::new(); nc];
    for (&(a, b), &w) in &cross {
        adj[a as usize].push((b, w));
        adj[b as usize].push((a, w));
    }
    let mut starts = Vec::with_capacity(nc + 1);
    let mut targets = Vec::new();
    let mut weights = Vec::new();
    starts.push(0u32);
    for row in &adj {
        for &(t, w) in row {
            targets.push(t);
            weights.push(w);
        }
        starts.push(targets.len() as u32);
    }
    let strength: Vec<f64> = (0..nc)
        .map(|v| {
            let lo = starts[v] as usize;
            let hi = starts[v + 1] as usize;
            2.0 * self_weight[v] + weights[lo..hi].iter().sum::<f64>()
        })
        .collect();
    let total = self_weight.iter().sum::<f64>() + cross.values().sum::<f64>();
    (
        WGraph {
            starts,
            targets,
            weights,
            self_weight,
            strength,
            total,
        },
        carried,
    )
}

fn weighted_modularity(g: &WGraph, labels: &[u32]) -> f64 {
    if g.total == 0.0 {
        return 0.0;
    }
    let communities = labels.iter().max().map_or(0, |&c| c + 1) as usize;
    let mut internal = vec![0.0f64; communities];
    let mut strength = vec![0.0f64; communities];
    for v in 0..g.len() {
        let c = labels[v] as usize;
        strength[c] += g.strength[v];
        internal[c] += g.self_weight[v];
        for (t, w) in g.neighbors(v as u32) {
            if t > v as u32 && labels[t as usize] == c as u32 {
                internal[c] += w;
            }
        }
    }
    let two_w = 2.0 * g.total;
    internal
        .iter()
        .zip(&strength)
        .map(|(&e, &d)| e / g.total - (d / two_w) * (d / two_w))
        .sum()
}

/// One randomized optimization; returns dense labels and their modularity.
fn leiden_once(base: &WGraph, rng: &mut ChaCha8Rng) -> (Vec<u32>, f64) {
    let n0 = base.len();
    // map from original node to current-level node
    let mut level_of: Vec<u32> = (0..n0 as u32).collect();
    let mut graph = base.clone();
    let mut part: Vec<u32> = (0..graph.len() as u32).collect();
    loop {
        local_move(&graph, &mut part, rng);
        let communities = relabel_dense(&mut part);
        if communities as usize == graph.len() {
            break; // every community is one node; nothing to contract
        }
        let refined = refine(&graph, &part, rng);
        let (aggregated, carried) = aggregate(&graph, &refined, &part);
        if aggregated.len() == graph.len() {
            break; // refinement kept everything apart; no progress possible
        }
        for l in level_of.iter_mut() {
            *l = refined[*l as usize];
        }
        graph = aggregated;
        part = carried;
    }
    let mut labels: Vec<u32> = level_of.iter().map(|&l| part[l as usize]).collect();
    relabel_dense(&mut labels);
    // evaluate on the base graph; labels index original nodes
    let q = weighted_modularity(base, &labels);
    (labels, q)
}

/// Runs `runs` randomized Leiden-style optimizations on the simple
/// projection and reports the best partition plus the mean modularity.
///
/// Deterministic for a given `rng_seed`: run `i` uses the derived seed
/// `derive_seed(rng_seed, i)`. Should no run find a positive-modularity
/// split, the one-community partition (Q = 0) is returned instead.
pub fn detect_communities(g: &Multigraph, runs: u32, rng_seed: u64) -> CommunityDetection {
    assert!(runs >= 1, "at least one detection run");
    let csr = Csr::from_simple(g);
    let n = csr.len();
    if csr.targets.is_empty() {
        // no edges: the score is vacuous and every split is equivalent
        return CommunityDetection {
            partition: CommunityPartition::singletons(n),
            best_modularity: 0.0,
            mean_modularity: 0.0,
            runs,
        };
    }
    let base = WGraph::from_csr(&csr);
    let mut best_labels: Option<Vec<u32>> = None;
    let mut best_q = f64::NEG_INFINITY;
    let mut sum_q = 0.0;
    for run in 0..runs {
        let mut rng = crate::generate::rng_from_seed(derive_seed(rng_seed, run as u64));
        let (labels, q) = leiden_once(&base, &mut rng);
        sum_q += q;
        if q > best_q {
            best_q = q;
            best_labels = Some(labels);
        }
    }
    if best_q < 0.0 {
        // grouping everything is never worse than a negative split
        return CommunityDetection {
            partition: CommunityPartition::single(n),
            best_modularity: 0.0,
            mean_modularity: sum_q / runs as f64,
            runs,
        };
    }
    let labels = best_labels.expect("at least one run");
    let community_count = labels.iter().max().map_or(0, |&c| c + 1);
    CommunityDetection {
        partition: CommunityPartition {
            labels,
            community_count,
        },
        best_modularity: best_q,
        mean_modularity: sum_q / runs as f64,
        runs,
    }
}
