//! Undirected multigraph with node merging and breadth-first distances.
//!
//! The graph keeps per-neighbor edge multiplicities and never contains
//! self-edges. Node handles are stable: merging two nodes keeps one of the
//! two handles alive and retires the other, so a graph that has seen merges
//! may have holes in its handle space. [`Multigraph::compact`] relabels the
//! live nodes back to `0..n`.

use alloc::collections::BTreeMap;
use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Node handle. Dense for freshly built graphs, possibly sparse after merges.
pub type NodeId = u32;

/// Rejected merge; the caller is expected to pick another pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MergeError {
    /// Both handles refer to the same node.
    SameNode(NodeId),
    /// The nodes are connected, so merging them would create a self-edge.
    Adjacent(NodeId, NodeId),
}

impl fmt::Display for MergeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MergeError::SameNode(v) => write!(f, "cannot merge node {v} with itself"),
            MergeError::Adjacent(a, b) => {
                write!(f, "cannot merge adjacent nodes {a} and {b}")
            }
        }
    }
}

impl core::error::Error for MergeError {}

/// Undirected multigraph without self-edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multigraph {
    adj: Vec<BTreeMap<NodeId, u32>>,
    alive: Vec<bool>,
    degree: Vec<u64>,
    live: usize,
    edges: u64,
}

impl Multigraph {
    /// Graph with `n` isolated nodes `0..n`.
    pub fn with_nodes(n: usize) -> Self {
        Multigraph {
            adj: vec![BTreeMap::new(); n],
            alive: vec![true; n],
            degree: vec![0; n],
            live: n,
            edges: 0,
        }
    }

    /// Builds a graph from an edge list; repeated pairs accumulate multiplicity.
    ///
    /// Panics on self-edges or out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut g = Multigraph::with_nodes(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Number of live nodes.
    pub fn node_count(&self) -> usize {
        self.live
    }

    /// Number of edges counting multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.edges
    }

    /// Size of the handle space (live and retired handles together).
    pub fn handle_capacity(&self) -> usize {
        self.adj.len()
    }

    pub fn is_alive(&self, v: NodeId) -> bool {
        self.alive.get(v as usize).copied().unwrap_or(false)
    }

    /// Live node handles in ascending order.
    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter(|(_, alive)| **alive)
            .map(|(v, _)| v as NodeId)
    }

    /// Distinct neighbors of `v` with multiplicities, ascending by handle.
    pub fn neighbors(&self, v: NodeId) -> impl Iterator<Item = (NodeId, u32)> + '_ {
        self.adj[v as usize].iter().map(|(&w, &m)| (w, m))
    }

    /// Edges as `(u, v, multiplicity)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId, u32)> + '_ {
        self.nodes().flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&(v, _)| v > u)
                .map(move |(v, m)| (u, v, m))
        })
    }

    /// Degree counting edge multiplicity.
    pub fn degree(&self, v: NodeId) -> u64 {
        self.degree[v as usize]
    }

    /// Number of distinct neighbors.
    pub fn simple_degree(&self, v: NodeId) -> usize {
        self.adj[v as usize].len()
    }

    pub fn multiplicity(&self, u: NodeId, v: NodeId) -> u32 {
        self.adj[u as usize].get(&v).copied().unwrap_or(0)
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// Adds one unit of multiplicity between two distinct live nodes.
    pub fn add_edge(&mut self, u: NodeId, v: NodeId) {
        assert_ne!(u, v, "self-edges are not allowed");
        assert!(self.is_alive(u) && self.is_alive(v), "dead endpoint");
        *self.adj[u as usize].entry(v).or_insert(0) += 1;
        *self.adj[v as usize].entry(u).or_insert(0) += 1;
        self.degree[u as usize] += 1;
        self.degree[v as usize] += 1;
        self.edges += 1;
    }

    /// Removes one unit of multiplicity between `u` and `v`.
    ///
    /// Panics if no such edge exists.
    pub fn remove_edge(&mut self, u: NodeId, v: NodeId) {
        let mult = self.adj[u as usize]
            .get_mut(&v)
            .expect("edge to remove exists");
        if *mult == 1 {
            self.adj[u as usize].remove(&v);
            self.adj[v as usize].remove(&u);
        } else {
            *mult -= 1;
            *self.adj[v as usize].get_mut(&u).expect("mirror entry") -= 1;
        }
        self.degree[u as usize] -= 1;
        self.degree[v as usize] -= 1;
        self.edges -= 1;
    }

    /// Merges two non-adjacent nodes into one.
    ///
    /// The surviving node keeps one of the two input handles (the one with
    /// the larger neighbor set, so edge moves touch the smaller side) and
    /// inherits the union of both incident edge multisets. The node count
    /// drops by one and the edge count is unchanged.
    pub fn merge_nodes(&mut self, a: NodeId, b: NodeId) -> Result<NodeId, MergeError> {
        if a == b {
            return Err(MergeError::SameNode(a));
        }
        assert!(self.is_alive(a) && self.is_alive(b), "dead merge endpoint");
        if self.has_edge(a, b) {
            return Err(MergeError::Adjacent(a, b));
        }
        let (kept, absorbed) = if self.adj[a as usize].len() >= self.adj[b as usize].len() {
            (a, b)
        } else {
            (b, a)
        };
        let moved = core::mem::take(&mut self.adj[absorbed as usize]);
        for (&w, &mult) in &moved {
            let wadj = &mut self.adj[w as usize];
            wadj.remove(&absorbed);
            *wadj.entry(kept).or_insert(0) += mult;
            *self.adj[kept as usize].entry(w).or_insert(0) += mult;
        }
        self.degree[kept as usize] += self.degree[absorbed as usize];
        self.degree[absorbed as usize] = 0;
        self.alive[absorbed as usize] = false;
        self.live -= 1;
        Ok(kept)
    }

    /// Hop distances from `source`, one entry per handle; `None` marks
    /// unreachable or retired handles. Multiplicities do not affect distances.
    pub fn bfs_distances(&self, source: NodeId) -> Vec<Option<u32>> {
        assert!(self.is_alive(source), "BFS source must be live");
        let mut dist = vec![None; self.adj.len()];
        dist[source as usize] = Some(0);
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize].expect("queued node has a distance");
            for (&w, _) in &self.adj[u as usize] {
                if dist[w as usize].is_none() {
                    dist[w as usize] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components as sorted node lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<NodeId>> {
        let mut seen = vec![false; self.adj.len()];
        let mut components = Vec::new();
        for s in self.nodes() {
            if seen[s as usize] {
                continue;
            }
            let mut comp = vec![s];
            seen[s as usize] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for (&w, _) in &self.adj[u as usize] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// Copy with every multiplicity clamped to one; node set unchanged.
    pub fn simple_projection(&self) -> Multigraph {
        let mut adj = Vec::with_capacity(self.adj.len());
        let mut degree = vec![0u64; self.adj.len()];
        let mut edges = 0u64;
        for (v, map) in self.adj.iter().enumerate() {
            let simple: BTreeMap<NodeId, u32> = map.keys().map(|&w| (w, 1)).collect();
            degree[v] = simple.len() as u64;
            edges += simple.len() as u64;
            adj.push(simple);
        }
        Multigraph {
            adj,
            alive: self.alive.clone(),
            degree,
            live: self.live,
            edges: edges / 2,
        }
    }

    /// Copy with live nodes relabeled to `0..n` in ascending handle order.
    pub fn compact(&self) -> Multigraph {
        let mut relabel = vec![NodeId::MAX; self.adj.len()];
        let mut next = 0;
        for v in self.nodes() {
            relabel[v as usize] = next;
            next += 1;
        }
        let mut out = Multigraph::with_nodes(self.live);
        for (v, map) in self.adj.iter().enumerate() {
            if !self.alive[v] {
                continue;
            }
            let nv = relabel[v];
            for (&w, &mult) in map {
                let nw = relabel[w as usize];
                if nv < nw {
                    out.adj[nv as usize].insert(nw, mult);
                    out.adj[nw as usize].insert(nv, mult);
                    out.edges += u64::from(mult);
                }
            }
            out.degree[nv as usize] = self.degree[v];
        }
        out
    }

    /// Sum of degrees; equals `2m` whenever the graph is consistent.
    pub fn degree_sum(&self) -> u64 {
        self.nodes().map(|v| self.degree(v)).sum()
    }
}

/// Compressed adjacency over the distinct-neighbor structure, with live
/// nodes relabeled to dense ids in ascending handle order. Multiplicities
/// are dropped, which is what the distance and clustering passes want.
#[derive(Debug, Clone)]
pub(crate) struct Csr {
    pub starts: Vec<u32>,
    pub targets: Vec<u32>,
    /// Original handle of each dense id.
    pub handles: Vec<NodeId>,
}

impl Csr {
    pub fn from_simple(g: &Multigraph) -> Csr {
        let handles: Vec<NodeId> = g.nodes().collect();
        let mut dense = vec![u32::MAX; g.handle_capacity()];
        for (i, &v) in handles.iter().enumerate() {
            dense[v as usize] = i as u32;
        }
        let mut starts = Vec::with_capacity(handles.len() + 1);
        let total: usize = handles.iter().map(|&v| g.simple_degree(v)).sum();
        let mut targets = Vec::with_capacity(total);
        starts.push(0);
        for &v in &handles {
            for (w, _) in g.neighbors(v) {
                targets.push(dense[w as usize]);
            }
            starts.push(targets.len() as u32);
        }
        Csr { starts, targets, handles }
    }

    pub fn len(&self) -> usize {
        self.handles.len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.targets[self.starts[v as usize] as usize..self.starts[v as usize + 1] as usize]
    }

    pub fn degree(&self, v: u32) -> u32 {
        self.starts[v as usize + 1] - self.starts[v as usize]
    }

    /// Breadth-first distances from `source` into `dist`, using `u32::MAX`
    /// as the unreached sentinel; `queue` is scratch space. Returns the
    /// number of reached nodes (including the source) and the eccentricity.
    pub fn bfs_into(&self, source: u32, dist: &mut [u32], queue: &mut Vec<u32>) -> (u64, u32) {
        dist.fill(u32::MAX);
        queue.clear();
        dist[source as usize] = 0;
        queue.push(source);
        let mut head = 0;
        let mut far = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = dist[u as usize];
            far = du;
            for &w in self.neighbors(u) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = du + 1;
                    queue.push(w);
                }
            }
        }
        (queue.len() as u64, far)
    }
}
