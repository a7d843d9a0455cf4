//! Classic baseline generators: Erdős–Rényi, Barabási–Albert and
//! Watts–Strogatz, parameterized to match a target size and mean degree.

use alloc::vec::Vec;
use rand::Rng;

use super::{draw_index, rng_from_seed, GenerateError};
use crate::graph::NodeId;
use crate::math;
use crate::Multigraph;

fn checked_node_count(nodes: u64) -> Result<usize, GenerateError> {
    if nodes == 0 {
        return Err(GenerateError::NoNodes);
    }
    assert!(nodes <= u32::MAX as u64, "node count out of range");
    Ok(nodes as usize)
}

/// Erdős–Rényi `G(n, p)` with `p = mean_degree / (n - 1)`.
///
/// Every unordered pair carries an edge independently with probability `p`;
/// pairs are enumerated with geometric skips, so the cost is proportional to
/// the number of edges rather than the number of pairs.
pub fn erdos_renyi(nodes: u64, mean_degree: f64, rng_seed: u64) -> Result<Multigraph, GenerateError> {
    let n = checked_node_count(nodes)?;
    let infeasible = Err(GenerateError::MeanDegreeOutOfRange { mean_degree, nodes });
    if !mean_degree.is_finite() || mean_degree < 0.0 {
        return infeasible;
    }
    if n == 1 {
        return if mean_degree == 0.0 {
            Ok(Multigraph::with_nodes(1))
        } else {
            infeasible
        };
    }
    let p = mean_degree / (n - 1) as f64;
    if p > 1.0 {
        return infeasible;
    }
    let mut g = Multigraph::with_nodes(n);
    if p == 0.0 {
        return Ok(g);
    }
    let mut rng = rng_from_seed(rng_seed);
    // geometric skip over the pairs (v, w) with w < v, in row order
    let lp = math::ln(1.0 - p); // -inf when p == 1, making every skip zero
    let mut v: u64 = 1;
    let mut w: i64 = -1;
    let n = n as u64;
    while v < n {
        let lr = math::ln(1.0 - rng.random::<f64>());
        let skip = math::floor(lr / lp);
        if !(skip < (n * n) as f64) {
            break; // skip jumps past every remaining pair
        }
        w += 1 + skip as i64;
        while w >= v as i64 && v < n {
            w -= v as i64;
            v += 1;
        }
        if v < n {
            g.add_edge(v as NodeId, w as NodeId);
        }
    }
    Ok(g)
}

/// Barabási–Albert preferential attachment.
///
/// Starts from a clique on `attach_edges + 1` nodes; every further node
/// attaches to `attach_edges` distinct existing nodes drawn proportionally
/// to degree (uniformly from the list of all edge endpoints, redrawing
/// duplicates).
pub fn barabasi_albert(
    nodes: u64,
    attach_edges: u64,
    rng_seed: u64,
) -> Result<Multigraph, GenerateError> {
    let n = checked_node_count(nodes)?;
    if attach_edges == 0 {
        return Err(GenerateError::NoAttachmentEdges);
    }
    let a = attach_edges as usize;
    if n <= a {
        return Err(GenerateError::TooFewNodesForClique {
            nodes,
            clique: attach_edges + 1,
        });
    }
    let mut g = Multigraph::with_nodes(n);
    // one entry per edge endpoint; uniform draws from it are degree-proportional
    let mut endpoints: Vec<NodeId> = Vec::with_capacity(2 * a * n);
    for u in 0..=a as NodeId {
        for v in 0..u {
            g.add_edge(u, v);
            endpoints.push(u);
            endpoints.push(v);
        }
    }
    let mut rng = rng_from_seed(rng_seed);
    let mut picked: Vec<NodeId> = Vec::with_capacity(a);
    for new in (a + 1) as NodeId..n as NodeId {
        picked.clear();
        while picked.len() < a {
            let t = endpoints[draw_index(&mut rng, endpoints.len()) as usize];
            if !picked.contains(&t) {
                picked.push(t);
            }
        }
        for &t in &picked {
            g.add_edge(new, t);
            endpoints.push(new);
            endpoints.push(t);
        }
    }
    Ok(g)
}

/// Watts–Strogatz small world.
///
/// Builds the ring lattice where every node connects to its `lattice_degree`
/// nearest neighbors, then visits each lattice edge once and, with
/// probability `rewire_prob`, moves its far endpoint to a uniformly random
/// node, redrawing targets that would create a self-edge or duplicate edge.
/// An edge whose near endpoint is already connected to every other node is
/// left in place.
pub fn watts_strogatz(
    nodes: u64,
    lattice_degree: u64,
    rewire_prob: f64,
    rng_seed: u64,
) -> Result<Multigraph, GenerateError> {
    let n = checked_node_count(nodes)?;
    let k = lattice_degree as usize;
    if k < 2 || k % 2 != 0 || k >= n {
        return Err(GenerateError::LatticeDegreeInvalid {
            nodes,
            lattice_degree,
        });
    }
    if !(0.0..=1.0).contains(&rewire_prob) {
        return Err(GenerateError::ProbabilityOutOfRange(rewire_prob));
    }
    let mut g = Multigraph::with_nodes(n);
    for u in 0..n {
        for j in 1..=k / 2 {
            g.add_edge(u as NodeId, ((u + j) % n) as NodeId);
        }
    }
    let mut rng = rng_from_seed(rng_seed);
    for j in 1..=k / 2 {
        for u in 0..n {
            if rng.random::<f64>() >= rewire_prob {
                continue;
            }
            if g.simple_degree(u as NodeId) >= n - 1 {
                continue; // connected to everyone; nowhere to rewire
            }
            let far = ((u + j) % n) as NodeId;
            let u = u as NodeId;
            let w = loop {
                let w = draw_index(&mut rng, n);
                if w != u && !g.has_edge(u, w) {
                    break w;
                }
            };
            g.remove_edge(u, far);
            g.add_edge(u, w);
        }
    }
    Ok(g)
}
