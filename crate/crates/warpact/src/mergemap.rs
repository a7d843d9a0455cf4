//! Union-find ledger of node merges that doubles as a degree-proportional
//! sampler.
//!
//! Every edge endpoint of the seed graph is one *slot*, so a seed with `m`
//! edges has `2m` slots and each node starts with one slot per unit of
//! degree. Merging two non-adjacent nodes unions their slot classes. Since a
//! merge of non-adjacent nodes also adds their multigraph degrees, the slot
//! count of a live node always equals its current degree — drawing a uniform
//! slot and resolving its owner is therefore a degree-proportional node draw
//! in constant time, with no per-step weight rebuilding.

use alloc::vec;
use alloc::vec::Vec;
use rand::Rng;

use crate::graph::NodeId;
use crate::Multigraph;

const NO_CLASS: u32 = u32::MAX;

/// Merge ledger over the `2m` edge-endpoint slots of a seed graph.
#[derive(Debug, Clone)]
pub struct MergeMap {
    /// Union-find parent per slot.
    parent: Vec<u32>,
    /// Class size, valid at roots.
    size: Vec<u32>,
    /// Owning live node, valid at roots.
    owner: Vec<NodeId>,
    /// Root slot of each node's class, `NO_CLASS` while the node has no slots.
    class_of: Vec<u32>,
}

impl MergeMap {
    /// Builds the ledger for a seed graph, handing each node one slot per
    /// unit of degree. Isolated seed nodes own no slots.
    pub fn for_seed(seed: &Multigraph) -> Self {
        let slots = seed.degree_sum() as usize;
        let mut map = MergeMap {
            parent: (0..slots as u32).collect(),
            size: vec![1; slots],
            owner: vec![0; slots],
            class_of: vec![NO_CLASS; seed.handle_capacity()],
        };
        let mut next = 0u32;
        for v in seed.nodes() {
            let deg = seed.degree(v) as u32;
            if deg == 0 {
                continue;
            }
            let root = next;
            for s in next..next + deg {
                map.parent[s as usize] = root;
            }
            map.size[root as usize] = deg;
            map.owner[root as usize] = v;
            map.class_of[v as usize] = root;
            next += deg;
        }
        debug_assert_eq!(next as usize, slots);
        map
    }

    /// Total number of slots (`2m`).
    pub fn slot_len(&self) -> usize {
        self.parent.len()
    }

    fn find(&mut self, mut s: u32) -> u32 {
        while self.parent[s as usize] != s {
            let grand = self.parent[self.parent[s as usize] as usize];
            self.parent[s as usize] = grand;
            s = grand;
        }
        s
    }

    fn find_readonly(&self, mut s: u32) -> u32 {
        while self.parent[s as usize] != s {
            s = self.parent[s as usize];
        }
        s
    }

    /// Live node owning slot `s`.
    pub fn owner_of_slot(&mut self, s: u32) -> NodeId {
        let root = self.find(s);
        self.owner[root as usize]
    }

    /// Number of slots held by `v`; equals its multigraph degree.
    pub fn slot_count(&self, v: NodeId) -> u64 {
        match self.class_of[v as usize] {
            NO_CLASS => 0,
            class => u64::from(self.size[self.find_readonly(class) as usize]),
        }
    }

    /// Draws a node with probability proportional to its degree by sampling
    /// a uniform slot and resolving its owner.
    ///
    /// Panics if the map has no slots (an edgeless seed).
    pub fn sample_degree_proportional<R: Rng + ?Sized>(&mut self, rng: &mut R) -> NodeId {
        assert!(!self.parent.is_empty(), "no slots to sample");
        let s = rng.random_range(0..self.parent.len() as u32);
        self.owner_of_slot(s)
    }

    /// Records that `absorbed` was merged into `kept`, pooling their slots.
    ///
    /// Either node may own no slots yet; afterwards `kept` owns the union and
    /// `absorbed` owns nothing.
    pub fn record_merge(&mut self, kept: NodeId, absorbed: NodeId) {
        debug_assert_ne!(kept, absorbed);
        let a = self.class_of[kept as usize];
        let b = self.class_of[absorbed as usize];
        self.class_of[absorbed as usize] = NO_CLASS;
        let (a, b) = match (a, b) {
            (_, NO_CLASS) => return,
            (NO_CLASS, b) => {
                let root = self.find(b);
                self.owner[root as usize] = kept;
                self.class_of[kept as usize] = root;
                return;
            }
            (a, b) => (self.find(a), self.find(b)),
        };
        debug_assert_ne!(a, b, "distinct nodes share a slot class");
        // union by size
        let (big, small) = if self.size[a as usize] >= self.size[b as usize] {
            (a, b)
        } else {
            (b, a)
        };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        self.owner[big as usize] = kept;
        self.class_of[kept as usize] = big;
    }
}
