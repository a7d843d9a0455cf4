//! Graph dissimilarity via distance distributions: the simplified
//! D-measure and the portrait divergence.
//!
//! Both measures start from the same ingredient: for every node, the
//! distribution of hop distances to all nodes (distance 0, the node itself,
//! included). [`DistanceProfile`] computes that once per graph; the two
//! scores are then cheap, so comparing one target against many candidates
//! should reuse the target's profile.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Csr;
use crate::math;
use crate::Multigraph;

/// Comparison inputs the measures are undefined for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompareError {
    /// Node dispersion needs a nonzero distance support (`d_max ≥ 1`);
    /// single nodes and edgeless graphs have none.
    DegenerateGraph,
    /// Jensen–Shannon divergence of an empty collection.
    EmptyInput,
}

impl fmt::Display for CompareError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompareError::DegenerateGraph => {
                write!(f, "graph has no distance support (every node is isolated)")
            }
            CompareError::EmptyInput => write!(f, "no distributions given"),
        }
    }
}

impl core::error::Error for CompareError {}

/// Shannon entropy in natural log, skipping zero entries.
fn entropy(p: &[f64]) -> f64 {
    -p.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| x * math::ln(x))
        .sum::<f64>()
}

/// Generalized Jensen–Shannon divergence with explicit mixture weights,
/// in natural log: `H(Σ w_i P_i) − Σ w_i H(P_i)`.
///
/// Vectors of different lengths are zero-padded to the longest.
pub fn jensen_shannon_weighted(
    distributions: &[&[f64]],
    weights: &[f64],
) -> Result<f64, CompareError> {
    if distributions.is_empty() {
        return Err(CompareError::EmptyInput);
    }
    assert_eq!(distributions.len(), weights.len(), "one weight per vector");
    let len = distributions.iter().map(|p| p.len()).max().unwrap_or(0);
    let mut mixture = vec![0.0f64; len];
    let mut mean_entropy = 0.0;
    for (&p, &w) in distributions.iter().zip(weights) {
        for (m, &x) in mixture.iter_mut().zip(p) {
            *m += w * x;
        }
        mean_entropy += w * entropy(p);
    }
    Ok((entropy(&mixture) - mean_entropy).max(0.0))
}

/// Jensen–Shannon divergence with uniform weights.
pub fn jensen_shannon(distributions: &[&[f64]]) -> Result<f64, CompareError> {
    let w = vec![1.0 / distributions.len().max(1) as f64; distributions.len()];
    jensen_shannon_weighted(distributions, &w)
}

/// Per-node distance census of one graph: everything the D-measure and the
/// portrait divergence need, from one all-pairs BFS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    /// `rows[i][d]` = number of nodes at distance exactly `d` from node `i`
    /// (so `rows[i][0] == 1`); rows are trimmed at the node's eccentricity.
    rows: Vec<Vec<u32>>,
    /// Largest finite distance in the graph.
    diameter: u32,
    /// `Σ_c n_c²` over connected components — ordered same-component pairs,
    /// self-pairs included.
    same_component_pairs: u64,
}

impl DistanceProfile {
    pub fn compute(g: &Multigraph) -> DistanceProfile {
        let csr = Csr::from_simple(g);
        let n = csr.len();
        let mut dist = vec![u32::MAX; n];
        let mut queue: Vec<u32> = Vec::with_capacity(n);
        let mut rows = Vec::with_capacity(n);
        let mut diameter = 0;
        let mut same_component_pairs = 0u64;
        for s in 0..n as u32 {
            let (reached, ecc) = csr.bfs_into(s, &mut dist, &mut queue);
            let mut row = vec![0u32; ecc as usize + 1];
            for &u in queue.iter() {
                row[dist[u as usize] as usize] += 1;
            }
            diameter = diameter.max(ecc);
            same_component_pairs += reached;
            rows.push(row);
        }
        DistanceProfile {
            rows,
            diameter,
            same_component_pairs,
        }
    }

    pub fn node_count(&self) -> usize {
        self.rows.len()
    }

    /// Largest finite distance (0 for single nodes and edgeless graphs).
    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// Per-node distance distributions `D_i`: `D_i[d]` is the fraction of
    /// all `n` nodes at distance `d` from node `i` (`D_i[0] = 1/n`). Rows
    /// sum to (reachable from `i`)/n, which is 1 on connected graphs.
    pub fn node_distributions(&self) -> Vec<Vec<f64>> {
        let n = self.rows.len() as f64;
        self.rows
            .iter()
            .map(|row| row.iter().map(|&c| c as f64 / n).collect())
            .collect()
    }

    /// Mean distance distribution `𝒟`, renormalized over reachable mass so
    /// it sums to 1 (on connected graphs this is exactly the mean of `D_i`).
    pub fn mean_distribution(&self) -> Vec<f64> {
        let mut mean = vec![0.0f64; self.diameter as usize + 1];
        for row in &self.rows {
            for (m, &c) in mean.iter_mut().zip(row) {
                *m += c as f64;
            }
        }
        let total: f64 = mean.iter().sum();
        for m in mean.iter_mut() {
            *m /= total; // total ≥ n ≥ 1: every node reaches itself
        }
        mean
    }

    /// Node dispersion `𝒩 = 𝒥(D_1, …, D_n) / ln(d_max + 1)`, with each
    /// `D_i` renormalized over its reachable mass.
    ///
    /// Errors on graphs whose distance support is `{0}` (`d_max = 0`),
    /// where the normalization is undefined.
    pub fn node_dispersion(&self) -> Result<f64, CompareError> {
        if self.diameter == 0 {
            return Err(CompareError::DegenerateGraph);
        }
        let n = self.rows.len() as f64;
        let len = self.diameter as usize + 1;
        let mut mixture = vec![0.0f64; len];
        let mut mean_entropy = 0.0;
        for row in &self.rows {
            let reach: u32 = row.iter().sum();
            let reach = f64::from(reach);
            let mut h = 0.0;
            for (d, &c) in row.iter().enumerate() {
                if c > 0 {
                    let p = f64::from(c) / reach;
                    mixture[d] += p / n;
                    h -= p * math::ln(p);
                }
            }
            mean_entropy += h / n;
        }
        let jsd = (entropy(&mixture) - mean_entropy).max(0.0);
        Ok(jsd / math::ln(self.diameter as f64 + 1.0))
    }

    /// The graph's portrait.
    pub fn portrait(&self) -> Portrait {
        let n = self.rows.len();
        let mut counts = vec![vec![0u64; n + 1]; self.diameter as usize + 1];
        for row in &self.rows {
            for (d, dist_counts) in counts.iter_mut().enumerate() {
                let k = row.get(d).copied().unwrap_or(0);
                dist_counts[k as usize] += 1;
            }
        }
        Portrait {
            counts,
            nodes: n as u64,
            same_component_pairs: self.same_component_pairs,
        }
    }
}

/// Graph portrait: `P[d][k]` counts the nodes that have exactly `k` nodes
/// at distance `d`, for `d = 0..=d_max` and `k = 0..=n`. Invariant under
/// graph isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Portrait {
    counts: Vec<Vec<u64>>,
    nodes: u64,
    same_component_pairs: u64,
}

impl Portrait {
    /// Rows indexed by distance; each row has `n + 1` entries indexed by `k`.
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.counts
    }

    pub fn node_count(&self) -> u64 {
        self.nodes
    }

    /// Joint distribution over `(k, d)`: the probability that a random node
    /// has `k` nodes at distance `d`, jointly with the probability that two
    /// nodes drawn from the same component sit at distance `d`. Flattened
    /// row-major over `(d, k)`; sums to 1.
    fn joint(&self, dist_support: usize, k_support: usize) -> Vec<f64> {
        let mut joint = vec![0.0f64; dist_support * k_support];
        for (d, row) in self.counts.iter().enumerate() {
            let pair_mass: u64 = row
                .iter()
                .enumerate()
                .map(|(k, &c)| k as u64 * c)
                .sum();
            let weight = pair_mass as f64 / self.same_component_pairs as f64;
            for (k, &c) in row.iter().enumerate() {
                joint[d * k_support + k] = (c as f64 / self.nodes as f64) * weight;
            }
        }
        joint
    }
}

/// Portrait divergence: base-2 Jensen–Shannon divergence between the joint
/// `(k, d)` distributions of the two portraits. Always in `[0, 1]`.
pub fn portrait_divergence_between(a: &Portrait, b: &Portrait) -> f64 {
    let dist_support = a.counts.len().max(b.counts.len());
    let k_support = (a.nodes.max(b.nodes) + 1) as usize;
    let pa = a.joint(dist_support, k_support);
    let pb = b.joint(dist_support, k_support);
    let mut jsd = 0.0;
    for (&x, &y) in pa.iter().zip(&pb) {
        let m = (x + y) / 2.0;
        if x > 0.0 {
            jsd += 0.5 * x * math::log2(x / m);
        }
        if y > 0.0 {
            jsd += 0.5 * y * math::log2(y / m);
        }
    }
    jsd.clamp(0.0, 1.0)
}

/// Portrait divergence from precomputed profiles.
pub fn portrait_divergence_profiles(a: &DistanceProfile, b: &DistanceProfile) -> f64 {
    portrait_divergence_between(&a.portrait(), &b.portrait())
}

/// Portrait divergence between two graphs.
pub fn portrait_divergence(a: &Multigraph, b: &Multigraph) -> f64 {
    portrait_divergence_profiles(&DistanceProfile::compute(a), &DistanceProfile::compute(b))
}

/// Simplified D-measure from precomputed profiles:
/// `½ √(𝒥(𝒟,𝒟′)/ln 2) + ½ |√𝒩 − √𝒩′|`.
pub fn d_measure_profiles(
    a: &DistanceProfile,
    b: &DistanceProfile,
) -> Result<f64, CompareError> {
    let da = a.mean_distribution();
    let db = b.mean_distribution();
    let jsd = jensen_shannon(&[&da, &db])?;
    let first = 0.5 * math::sqrt(jsd / core::f64::consts::LN_2);
    let second = 0.5 * math::abs(math::sqrt(a.node_dispersion()?) - math::sqrt(b.node_dispersion()?));
    Ok(first + second)
}

/// Simplified D-measure between two graphs; `0` for isomorphic inputs,
/// symmetric, bounded by 1. Errors when either graph has no distance
/// support (`d_max = 0`).
pub fn d_measure(a: &Multigraph, b: &Multigraph) -> Result<f64, CompareError> {
    d_measure_profiles(&DistanceProfile::compute(a), &DistanceProfile::compute(b))
}

/// Node dispersion of a graph; see [`DistanceProfile::node_dispersion`].
pub fn node_dispersion(g: &Multigraph) -> Result<f64, CompareError> {
    DistanceProfile::compute(g).node_dispersion()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: u32) -> Multigraph {
        Multigraph::from_edges(n as usize, (0..n - 1).map(|i| (i, i + 1)))
    }

    fn star4() -> Multigraph {
        Multigraph::from_edges(4, [(0, 1), (0, 2), (0, 3)])
    }

    fn complete(n: u32) -> Multigraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Multigraph::from_edges(n as usize, edges)
    }

    #[test]
    fn jsd_basics() {
        let p = [0.25, 0.5, 0.25];
        assert_eq!(jensen_shannon(&[&p, &p]).unwrap(), 0.0);
        let disjoint = jensen_shannon(&[&[1.0, 0.0], &[0.0, 1.0]]).unwrap();
        assert!((disjoint - core::f64::consts::LN_2).abs() < 1e-15);
        let copies: Vec<&[f64]> = (0..5).map(|_| &p[..]).collect();
        assert!(jensen_shannon(&copies).unwrap().abs() < 1e-15);
        assert_eq!(jensen_shannon(&[]), Err(CompareError::EmptyInput));
        // padding: a shorter vector counts as zero-extended
        let j = jensen_shannon(&[&[1.0][..], &[0.0, 1.0][..]]).unwrap();
        assert!((j - core::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn mean_distribution_matches_hand_values() {
        // K3: [1/3, 2/3]; P3: [1/3, 4/9, 2/9]
        let k3 = DistanceProfile::compute(&complete(3)).mean_distribution();
        assert!((k3[0] - 1.0 / 3.0).abs() < 1e-15);
        assert!((k3[1] - 2.0 / 3.0).abs() < 1e-15);
        let p3 = DistanceProfile::compute(&path(3)).mean_distribution();
        assert!((p3[0] - 1.0 / 3.0).abs() < 1e-15);
        assert!((p3[1] - 4.0 / 9.0).abs() < 1e-15);
        assert!((p3[2] - 2.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn node_dispersion_golden_values() {
        // frozen from an independent brute-force oracle
        assert!((node_dispersion(&path(3)).unwrap() - 0.105_840_219_047_593).abs() < 1e-12);
        assert!((node_dispersion(&star4()).unwrap() - 0.147_295_972_767_889).abs() < 1e-12);
        assert!((node_dispersion(&path(4)).unwrap() - 0.077_819_531_114_783).abs() < 1e-12);
    }

    #[test]
    fn node_dispersion_vanishes_on_transitive_graphs() {
        assert_eq!(node_dispersion(&complete(5)).unwrap(), 0.0);
        let cycle = Multigraph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert!(node_dispersion(&cycle).unwrap().abs() < 1e-15);
    }

    #[test]
    fn node_dispersion_errors_without_distance_support() {
        assert_eq!(
            node_dispersion(&Multigraph::with_nodes(1)),
            Err(CompareError::DegenerateGraph)
        );
        assert_eq!(
            node_dispersion(&Multigraph::with_nodes(5)),
            Err(CompareError::DegenerateGraph)
        );
    }

    #[test]
    fn d_measure_golden_values() {
        // frozen from an independent brute-force oracle
        let d = d_measure(&complete(3), &path(3)).unwrap();
        assert!((d - 0.341_025_827_234_677).abs() < 1e-12, "got {d}");
        let d = d_measure(&star4(), &path(4)).unwrap();
        assert!((d - 0.186_185_294_776_422).abs() < 1e-12, "got {d}");
    }

    #[test]
    fn d_measure_axioms_on_small_graphs() {
        let g = path(5);
        assert_eq!(d_measure(&g, &g).unwrap(), 0.0);
        let h = star4();
        let ab = d_measure(&g, &h).unwrap();
        let ba = d_measure(&h, &g).unwrap();
        assert_eq!(ab, ba);
        assert!((0.0..=1.0).contains(&ab));
        // isomorphic relabeling scores zero
        let relabeled = Multigraph::from_edges(4, [(3, 2), (3, 1), (3, 0)]);
        assert_eq!(d_measure(&star4(), &relabeled).unwrap(), 0.0);
    }

    #[test]
    fn portrait_matches_hand_census() {
        let p = DistanceProfile::compute(&path(3)).portrait();
        assert_eq!(p.rows(), &[vec![0, 3, 0, 0], vec![0, 2, 1, 0], vec![1, 2, 0, 0]]);

        let k4 = DistanceProfile::compute(&complete(4)).portrait();
        assert_eq!(k4.rows()[0][1], 4);
        assert_eq!(k4.rows()[1][3], 4);
    }

    #[test]
    fn portrait_columns_sum_to_node_count() {
        let g = crate::generate_war_pact(
            40,
            90,
            crate::SelectionRule::KK,
            crate::SeedKind::PerfectMatching,
            17,
        )
        .unwrap();
        let p = DistanceProfile::compute(&g).portrait();
        for row in p.rows() {
            assert_eq!(row.iter().sum::<u64>(), 40);
        }
    }

    #[test]
    fn portrait_divergence_golden_value() {
        // frozen from an independent oracle evaluating the joint formula
        let pd = portrait_divergence(&star4(), &path(4));
        assert!((pd - 0.522_433_454_424_687).abs() < 1e-12, "got {pd}");
    }

    #[test]
    fn portrait_divergence_axioms() {
        let g = path(6);
        assert_eq!(portrait_divergence(&g, &g), 0.0);
        let h = star4();
        let ab = portrait_divergence(&g, &h);
        assert_eq!(ab, portrait_divergence(&h, &g));
        assert!((0.0..=1.0).contains(&ab));
        let relabeled = Multigraph::from_edges(4, [(3, 2), (3, 1), (3, 0)]);
        assert_eq!(portrait_divergence(&h, &relabeled), 0.0);
    }

    #[test]
    fn disconnected_graphs_are_handled() {
        // two disjoint edges: every row is [1, 1]; dispersion is zero after
        // renormalization and the pair weighting covers components
        let pairs = Multigraph::from_edges(4, [(0, 1), (2, 3)]);
        let profile = DistanceProfile::compute(&pairs);
        assert_eq!(profile.diameter(), 1);
        assert_eq!(profile.node_dispersion().unwrap(), 0.0);
        let mean = profile.mean_distribution();
        assert!((mean[0] - 0.5).abs() < 1e-15);
        assert!((mean[1] - 0.5).abs() < 1e-15);
        // joint portrait distribution sums to 1 even when disconnected
        let p = profile.portrait();
        let joint = p.joint(p.counts.len(), p.nodes as usize + 1);
        let total: f64 = joint.iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
        // comparing against a connected graph works
        let pd = portrait_divergence(&pairs, &path(4));
        assert!(pd > 0.0);
    }

    #[test]
    fn same_component_pair_count_is_component_squares() {
        let pairs = Multigraph::from_edges(5, [(0, 1), (2, 3), (3, 4)]);
        let profile = DistanceProfile::compute(&pairs);
        // components of size 2 and 3: 4 + 9
        assert_eq!(profile.same_component_pairs, 13);
    }
}
