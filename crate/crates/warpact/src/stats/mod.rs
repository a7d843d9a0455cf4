//! Structural network statistics: degree distributions, clustering,
//! distances, assortativity, components, community structure, power-law
//! fitting and a two-sample Kolmogorov–Smirnov test.
//!
//! Clustering and modularity are defined on simple graphs, so they always
//! work on the simple projection; everything degree-based can count edge
//! multiplicities (the default, keeping `Σk = 2m`) or distinct neighbors.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Csr;
use crate::math;
use crate::Multigraph;

mod community;
mod powerlaw;

pub use community::{detect_communities, modularity, CommunityDetection, CommunityPartition};
pub use powerlaw::{fit_power_law, hurwitz_zeta, PowerLawError, PowerLawFit, MIN_TAIL_SAMPLES};

/// Whether degrees count edge multiplicity or only distinct neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DegreeMode {
    /// Every parallel edge counts; keeps `Σk = 2m` on multigraphs.
    #[default]
    Multiplicity,
    /// Count distinct neighbors only.
    Simple,
}

/// Statistic that is undefined for the given graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatsError {
    /// Degree correlation is undefined when all edge endpoints have the
    /// same degree (zero variance), e.g. on regular graphs.
    UndefinedCorrelation,
}

impl fmt::Display for StatsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatsError::UndefinedCorrelation => {
                write!(f, "degree correlation is undefined: endpoint degrees have zero variance")
            }
        }
    }
}

impl core::error::Error for StatsError {}

/// Empirical degree distribution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeDistribution {
    counts: BTreeMap<u64, u64>,
    total: u64,
    mode: DegreeMode,
}

impl DegreeDistribution {
    pub fn from_graph(g: &Multigraph, mode: DegreeMode) -> Self {
        let mut counts = BTreeMap::new();
        for v in g.nodes() {
            let k = match mode {
                DegreeMode::Multiplicity => g.degree(v),
                DegreeMode::Simple => g.simple_degree(v) as u64,
            };
            *counts.entry(k).or_insert(0) += 1;
        }
        DegreeDistribution {
            counts,
            total: g.node_count() as u64,
            mode,
        }
    }

    /// Builds a distribution from raw `degree -> count` data, e.g. samples
    /// from a known law.
    pub fn from_counts(counts: BTreeMap<u64, u64>, mode: DegreeMode) -> Self {
        let total = counts.values().sum();
        DegreeDistribution { counts, total, mode }
    }

    pub fn mode(&self) -> DegreeMode {
        self.mode
    }

    /// Number of observations (nodes).
    pub fn sample_count(&self) -> u64 {
        self.total
    }

    pub fn count(&self, degree: u64) -> u64 {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    pub fn probability(&self, degree: u64) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.count(degree) as f64 / self.total as f64
        }
    }

    /// `degree -> count` pairs, ascending.
    pub fn counts(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    /// `(degree, probability)` pairs, ascending.
    pub fn probabilities(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.counts().map(|(k, c)| (k, c as f64 / self.total as f64))
    }

    pub fn mean(&self) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        let sum: u64 = self.counts().map(|(k, c)| k * c).sum();
        sum as f64 / self.total as f64
    }

    /// Degrees expanded to one `f64` entry per node, ascending.
    pub fn samples(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.total as usize);
        for (k, c) in self.counts() {
            for _ in 0..c {
                out.push(k as f64);
            }
        }
        out
    }
}

/// Triangle count per dense node id; each triangle increments all three
/// of its corners exactly once.
pub(crate) fn triangle_counts(csr: &Csr) -> Vec<u64> {
    let mut t = vec![0u64; csr.len()];
    for u in 0..csr.len() as u32 {
        for &v in csr.neighbors(u) {
            if v <= u {
                continue;
            }
            // sorted-list intersection; common neighbors close the triangle
            let (mut i, iend) = (csr.starts[u as usize], csr.starts[u as usize + 1]);
            let (mut j, jend) = (csr.starts[v as usize], csr.starts[v as usize + 1]);
            while i < iend && j < jend {
                let (a, b) = (csr.targets[i as usize], csr.targets[j as usize]);
                match a.cmp(&b) {
                    core::cmp::Ordering::Less => i += 1,
                    core::cmp::Ordering::Greater => j += 1,
                    core::cmp::Ordering::Equal => {
                        t[a as usize] += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
    t
}

fn clustering_values(csr: &Csr) -> Vec<f64> {
    triangle_counts(csr)
        .iter()
        .enumerate()
        .map(|(v, &t)| {
            let k = csr.degree(v as u32) as u64;
            if k < 2 {
                0.0 // too few neighbors to close a triangle
            } else {
                2.0 * t as f64 / (k * (k - 1)) as f64
            }
        })
        .collect()
}

/// Clustering coefficient `C_i = 2 t_i / (k_i (k_i - 1))` of one node,
/// computed on the simple projection; zero for degrees below two.
pub fn clustering_coefficient(g: &Multigraph, node: crate::NodeId) -> f64 {
    let csr = Csr::from_simple(g);
    let dense = csr
        .handles
        .iter()
        .position(|&h| h == node)
        .expect("node is live");
    clustering_values(&csr)[dense]
}

/// Mean clustering over all nodes, on the simple projection.
pub fn mean_clustering(g: &Multigraph) -> f64 {
    mean_clustering_csr(&Csr::from_simple(g))
}

pub(crate) fn mean_clustering_csr(csr: &Csr) -> f64 {
    if csr.len() == 0 {
        return 0.0;
    }
    clustering_values(csr).iter().sum::<f64>() / csr.len() as f64
}

/// Mean clustering per simple-projection degree; every occupied degree,
/// including 0 and 1, gets an entry.
pub fn clustering_by_degree(g: &Multigraph) -> BTreeMap<u64, f64> {
    let csr = Csr::from_simple(g);
    let values = clustering_values(&csr);
    let mut sums: BTreeMap<u64, (f64, u64)> = BTreeMap::new();
    for (v, &c) in values.iter().enumerate() {
        let entry = sums.entry(csr.degree(v as u32) as u64).or_insert((0.0, 0));
        entry.0 += c;
        entry.1 += 1;
    }
    sums.into_iter()
        .map(|(k, (sum, cnt))| (k, sum / cnt as f64))
        .collect()
}

/// Hop-distance summary over reachable node pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceStats {
    /// Mean distance over reachable pairs (0 when no pair is reachable).
    pub mean: f64,
    /// Largest finite distance.
    pub diameter: u32,
    /// `distribution[d]` = fraction of reachable pairs at distance `d`;
    /// index 0 is always 0 and the length is `diameter + 1`.
    pub distribution: Vec<f64>,
    /// Fraction of (ordered) node pairs with no connecting path.
    pub unreachable_fraction: f64,
}

/// Breadth-first all-pairs distance statistics.
pub fn distance_statistics(g: &Multigraph) -> DistanceStats {
    distance_statistics_csr(&Csr::from_simple(g))
}

pub(crate) fn distance_statistics_csr(csr: &Csr) -> DistanceStats {
    let n = csr.len();
    let mut dist = vec![u32::MAX; n];
    let mut queue: Vec<u32> = Vec::with_capacity(n);
    let mut counts: Vec<u64> = Vec::new();
    for s in 0..n as u32 {
        let (_, ecc) = csr.bfs_into(s, &mut dist, &mut queue);
        if counts.len() <= ecc as usize {
            counts.resize(ecc as usize + 1, 0);
        }
        for &u in &queue[1..] {
            counts[dist[u as usize] as usize] += 1;
        }
    }
    let reachable: u64 = counts.iter().sum();
    let diameter = (counts.len() as u32).saturating_sub(1);
    let mean = if reachable == 0 {
        0.0
    } else {
        let sum: u64 = counts.iter().enumerate().map(|(d, &c)| d as u64 * c).sum();
        sum as f64 / reachable as f64
    };
    let distribution = if reachable == 0 {
        vec![0.0]
    } else {
        counts.iter().map(|&c| c as f64 / reachable as f64).collect()
    };
    let ordered_pairs = n as u64 * (n as u64 - 1);
    let unreachable_fraction = if ordered_pairs == 0 {
        0.0
    } else {
        1.0 - reachable as f64 / ordered_pairs as f64
    };
    DistanceStats {
        mean,
        diameter,
        distribution,
        unreachable_fraction,
    }
}

/// Pearson correlation of the degrees at edge endpoints.
///
/// Each edge contributes both orientations, weighted by multiplicity, with
/// degrees counting multiplicity. Accumulation is in exact integer
/// arithmetic, so the zero-variance test is exact.
pub fn assortativity(g: &Multigraph) -> Result<f64, StatsError> {
    let mut s1: u128 = 0; // total orientation weight
    let mut sx: u128 = 0; // Σ w·k
    let mut sxx: u128 = 0; // Σ w·k²
    let mut sxy: u128 = 0; // Σ w·k_u·k_v over orientations
    for (u, v, mult) in g.edges() {
        let (ku, kv) = (g.degree(u) as u128, g.degree(v) as u128);
        let w = mult as u128;
        s1 += 2 * w;
        sx += w * (ku + kv);
        sxx += w * (ku * ku + kv * kv);
        sxy += 2 * w * ku * kv;
    }
    if s1 == 0 {
        return Err(StatsError::UndefinedCorrelation);
    }
    // r = (s1·sxy − sx²) / (s1·sxx − sx²), both exact in i128
    let var = (s1 * sxx) as i128 - (sx * sx) as i128;
    if var == 0 {
        return Err(StatsError::UndefinedCorrelation);
    }
    let cov = (s1 * sxy) as i128 - (sx * sx) as i128;
    Ok(cov as f64 / var as f64)
}

/// Fraction of nodes in the largest connected component.
pub fn lcc_fraction(g: &Multigraph) -> f64 {
    let n = g.node_count();
    if n == 0 {
        return 0.0;
    }
    let largest = g
        .connected_components()
        .iter()
        .map(|c| c.len())
        .max()
        .unwrap_or(0);
    largest as f64 / n as f64
}

/// Two-sample Kolmogorov–Smirnov test result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsTest {
    /// Supremum distance between the empirical CDFs.
    pub statistic: f64,
    /// Asymptotic two-sided p-value.
    pub p_value: f64,
}

/// Two-sample Kolmogorov–Smirnov test with the asymptotic p-value.
///
/// Panics if either sample is empty.
pub fn ks_two_sample(xs: &[f64], ys: &[f64]) -> KsTest {
    assert!(!xs.is_empty() && !ys.is_empty(), "empty KS sample");
    let mut a = xs.to_vec();
    let mut b = ys.to_vec();
    a.sort_unstable_by(f64::total_cmp);
    b.sort_unstable_by(f64::total_cmp);
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < a.len() && j < b.len() {
        let t = a[i].min(b[j]);
        while i < a.len() && a[i] <= t {
            i += 1;
        }
        while j < b.len() && b[j] <= t {
            j += 1;
        }
        d = d.max(math::abs(i as f64 / na - j as f64 / nb));
    }
    let ne = na * nb / (na + nb);
    let sqrt_ne = math::sqrt(ne);
    let lambda = (sqrt_ne + 0.12 + 0.11 / sqrt_ne) * d;
    KsTest {
        statistic: d,
        p_value: kolmogorov_q(lambda),
    }
}

/// Survival function of the Kolmogorov distribution,
/// `Q(λ) = 2 Σ_{j≥1} (−1)^{j−1} exp(−2 j² λ²)`.
fn kolmogorov_q(lambda: f64) -> f64 {
    if lambda <= 0.0 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut sign = 1.0;
    let a = -2.0 * lambda * lambda;
    for j in 1..=100 {
        let term = sign * math::exp(a * (j * j) as f64);
        sum += term;
        if math::abs(term) < 1e-10 * math::abs(sum).max(1e-300) {
            return (2.0 * sum).clamp(0.0, 1.0);
        }
        sign = -sign;
    }
    1.0 // series failed to converge; λ is tiny and the test cannot reject
}

/// Options for [`StatsReport::compute`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatsOptions {
    /// Degree convention for the exported degree distribution.
    pub degree_mode: DegreeMode,
    /// Community detection repetitions averaged into the modularity figure.
    pub modularity_runs: u32,
    /// Base RNG seed for the randomized community detection runs.
    pub rng_seed: u64,
}

impl Default for StatsOptions {
    fn default() -> Self {
        StatsOptions {
            degree_mode: DegreeMode::Multiplicity,
            modularity_runs: 100,
            rng_seed: 0,
        }
    }
}

/// The standard summary table for one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct StatsReport {
    pub nodes: u64,
    /// Edges counting multiplicity.
    pub edges: u64,
    /// Fraction of nodes in the largest connected component.
    pub lcc: f64,
    /// `2m / n`, counting multiplicity.
    pub mean_degree: f64,
    /// Mean clustering coefficient on the simple projection.
    pub mean_clustering: f64,
    /// Mean hop distance over reachable pairs.
    pub mean_distance: f64,
    /// Largest finite hop distance.
    pub diameter: u32,
    /// Fraction of ordered node pairs with no connecting path.
    pub unreachable_pair_fraction: f64,
    /// Degree assortativity; `None` when undefined (zero degree variance).
    pub assortativity: Option<f64>,
    /// Mean modularity over the community detection runs.
    pub modularity: f64,
    pub modularity_runs: u32,
}

impl StatsReport {
    pub fn compute(g: &Multigraph, opts: &StatsOptions) -> StatsReport {
        let csr = Csr::from_simple(g);
        let distances = distance_statistics_csr(&csr);
        let detection = detect_communities(g, opts.modularity_runs, opts.rng_seed);
        let n = g.node_count() as u64;
        StatsReport {
            nodes: n,
            edges: g.edge_count(),
            lcc: lcc_fraction(g),
            mean_degree: if n == 0 { 0.0 } else { 2.0 * g.edge_count() as f64 / n as f64 },
            mean_clustering: mean_clustering_csr(&csr),
            mean_distance: distances.mean,
            diameter: distances.diameter,
            unreachable_pair_fraction: distances.unreachable_fraction,
            assortativity: assortativity(g).ok(),
            modularity: detection.mean_modularity,
            modularity_runs: detection.runs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Multigraph;

    fn triangle() -> Multigraph {
        Multigraph::from_edges(3, [(0, 1), (1, 2), (0, 2)])
    }

    fn path3() -> Multigraph {
        Multigraph::from_edges(3, [(0, 1), (1, 2)])
    }

    #[test]
    fn degree_distribution_modes_differ_on_multigraphs() {
        let g = Multigraph::from_edges(3, [(0, 1), (0, 1), (1, 2)]);
        let multi = DegreeDistribution::from_graph(&g, DegreeMode::Multiplicity);
        assert_eq!(multi.count(2), 1); // node 0
        assert_eq!(multi.count(3), 1); // node 1
        assert_eq!(multi.count(1), 1); // node 2
        assert_eq!(multi.mean(), 2.0);
        let simple = DegreeDistribution::from_graph(&g, DegreeMode::Simple);
        assert_eq!(simple.count(1), 2);
        assert_eq!(simple.count(2), 1);
        let total: f64 = multi.probabilities().map(|(_, p)| p).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn clustering_matches_hand_counts() {
        assert_eq!(clustering_coefficient(&triangle(), 0), 1.0);
        assert_eq!(mean_clustering(&triangle()), 1.0);

        let star = Multigraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        assert_eq!(mean_clustering(&star), 0.0);

        let clique4 = Multigraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(clustering_coefficient(&clique4, 2), 1.0);
        assert_eq!(mean_clustering(&clique4), 1.0);

        let cycle4 = Multigraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(mean_clustering(&cycle4), 0.0);
    }

    #[test]
    fn clustering_ignores_multiplicities() {
        // doubled triangle edge must not change C
        let g = Multigraph::from_edges(3, [(0, 1), (0, 1), (1, 2), (0, 2)]);
        assert_eq!(mean_clustering(&g), 1.0);
    }

    #[test]
    fn clustering_by_degree_groups_means() {
        // two triangles sharing node 0
        let g = Multigraph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]);
        let by_k = clustering_by_degree(&g);
        assert_eq!(by_k.len(), 2);
        assert_eq!(by_k[&2], 1.0);
        // shared vertex: 2 triangles out of C(4,2) = 6 pairs -> 2*2/(4*3) = 1/3
        assert!((by_k[&4] - 1.0 / 3.0).abs() < 1e-15);

        let star = Multigraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        let by_k = clustering_by_degree(&star);
        assert_eq!(by_k[&1], 0.0);
        assert_eq!(by_k[&3], 0.0);
    }

    #[test]
    fn ring_lattice_clustering_is_analytic() {
        // k = 4 ring lattice: C = 3(k-2) / (4(k-2) + 4) = 0.5
        let g = crate::watts_strogatz(10, 4, 0.0, 0).unwrap();
        assert!((mean_clustering(&g) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn distances_match_hand_counts() {
        let d = distance_statistics(&path3());
        assert!((d.mean - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(d.diameter, 2);
        assert_eq!(d.distribution.len(), 3);
        assert!((d.distribution[1] - 2.0 / 3.0).abs() < 1e-15);
        assert!((d.distribution[2] - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(d.unreachable_fraction, 0.0);

        let k4 = Multigraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let d = distance_statistics(&k4);
        assert_eq!(d.mean, 1.0);
        assert_eq!(d.diameter, 1);
    }

    #[test]
    fn distances_report_unreachable_fraction() {
        let pairs = Multigraph::from_edges(4, [(0, 1), (2, 3)]);
        let d = distance_statistics(&pairs);
        assert_eq!(d.mean, 1.0);
        assert_eq!(d.diameter, 1);
        // 4 of 12 ordered pairs are within a component
        assert!((d.unreachable_fraction - 2.0 / 3.0).abs() < 1e-15);

        let single = Multigraph::with_nodes(1);
        let d = distance_statistics(&single);
        assert_eq!(d.mean, 0.0);
        assert_eq!(d.diameter, 0);
        assert_eq!(d.unreachable_fraction, 0.0);
    }

    #[test]
    fn assortativity_matches_hand_pearson() {
        // path of 3: both edges join degree 1 to degree 2
        assert!((assortativity(&path3()).unwrap() + 1.0).abs() < 1e-15);
        // star: every edge joins the hub to a leaf, also perfectly negative
        let star = Multigraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        assert!((assortativity(&star).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn assortativity_is_undefined_for_regular_graphs() {
        let cycle = Multigraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(
            assortativity(&cycle),
            Err(StatsError::UndefinedCorrelation)
        );
        let edgeless = Multigraph::with_nodes(3);
        assert!(assortativity(&edgeless).is_err());
    }

    #[test]
    fn assortativity_weights_parallel_edges() {
        // doubling an edge changes degrees and weights; compare to direct Pearson
        let g = Multigraph::from_edges(3, [(0, 1), (0, 1), (1, 2)]);
        // edge units: (0,1)×2 with degrees (2,3), (1,2)×1 with degrees (3,1)
        let xs = [2.0, 2.0, 3.0, 3.0, 3.0, 1.0];
        let ys = [3.0, 3.0, 2.0, 2.0, 1.0, 3.0];
        let n = xs.len() as f64;
        let mx = xs.iter().sum::<f64>() / n;
        let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - mx)).sum();
        let var: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
        assert!((assortativity(&g).unwrap() - cov / var).abs() < 1e-12);
    }

    #[test]
    fn lcc_fraction_examples() {
        assert_eq!(lcc_fraction(&triangle()), 1.0);
        let matching = Multigraph::from_edges(8, [(0, 4), (1, 5), (2, 6), (3, 7)]);
        assert_eq!(lcc_fraction(&matching), 0.25);
    }

    #[test]
    fn ks_test_behaves_at_the_extremes() {
        let a: Vec<f64> = (0..200).map(|i| (i % 10) as f64).collect();
        let same = ks_two_sample(&a, &a);
        assert_eq!(same.statistic, 0.0);
        assert!(same.p_value > 0.99);

        let b: Vec<f64> = (0..200).map(|i| 100.0 + (i % 10) as f64).collect();
        let apart = ks_two_sample(&a, &b);
        assert_eq!(apart.statistic, 1.0);
        assert!(apart.p_value < 1e-6);
    }

    #[test]
    fn ks_test_accepts_same_distribution_samples() {
        use rand::Rng;
        let mut rng = crate::generate::rng_from_seed(99);
        let a: Vec<f64> = (0..500).map(|_| rng.random::<f64>()).collect();
        let b: Vec<f64> = (0..800).map(|_| rng.random::<f64>()).collect();
        let t = ks_two_sample(&a, &b);
        assert!(t.p_value > 0.01, "p = {}", t.p_value);
    }

    #[test]
    fn report_keeps_mean_degree_exact() {
        let g = crate::generate_war_pact(
            50,
            200,
            crate::SelectionRule::KR,
            crate::SeedKind::PerfectMatching,
            3,
        )
        .unwrap();
        let r = StatsReport::compute(&g, &StatsOptions {
            modularity_runs: 5,
            ..StatsOptions::default()
        });
        assert_eq!(r.nodes, 50);
        assert_eq!(r.edges, 200);
        assert_eq!(r.mean_degree, 2.0 * 200.0 / 50.0);
        assert!(r.mean_distance <= r.diameter as f64);
        assert!((0.0..=1.0).contains(&r.lcc));
        assert!((0.0..=1.0).contains(&r.mean_clustering));
        assert!(r.modularity <= 1.0);
        assert_eq!(r.modularity_runs, 5);
    }

    #[test]
    fn distance_statistics_match_floyd_warshall_oracle() {
        use rand::Rng;
        let mut rng = crate::generate::rng_from_seed(1234);
        for _ in 0..300 {
            let n = rng.random_range(1..=8usize);
            let mut g = Multigraph::with_nodes(n);
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if rng.random::<f64>() < 0.4 {
                        g.add_edge(u, v);
                    }
                }
            }
            // dense oracle
            const INF: u32 = u32::MAX / 4;
            let mut d = vec![vec![INF; n]; n];
            for i in 0..n {
                d[i][i] = 0;
            }
            for (u, v, _) in g.edges() {
                d[u as usize][v as usize] = 1;
                d[v as usize][u as usize] = 1;
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                    }
                }
            }
            let mut sum = 0u64;
            let mut count = 0u64;
            let mut dmax = 0u32;
            for i in 0..n {
                for j in 0..n {
                    if i != j && d[i][j] < INF {
                        sum += d[i][j] as u64;
                        count += 1;
                        dmax = dmax.max(d[i][j]);
                    }
                }
            }
            let got = distance_statistics(&g);
            assert_eq!(got.diameter, dmax);
            let want_mean = if count == 0 { 0.0 } else { sum as f64 / count as f64 };
            assert!((got.mean - want_mean).abs() < 1e-12);
            let total = (n * (n - 1)) as f64;
            let want_unreachable = if n == 1 { 0.0 } else { 1.0 - count as f64 / total };
            assert!((got.unreachable_fraction - want_unreachable).abs() < 1e-12);
        }
    }
}
