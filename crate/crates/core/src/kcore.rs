//! Ground-truth coreness on a static window view via bucket-queue peeling.

use crate::temporal_graph::WindowView;
use crate::NodeId;

/// Coreness per node of the dense universe; nodes absent from the view have
/// coreness 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorenessMap {
    values: Vec<u32>,
}

impl CorenessMap {
    pub fn from_values(values: Vec<u32>) -> Self {
        CorenessMap { values }
    }

    pub fn zeros(node_count: usize) -> Self {
        CorenessMap {
            values: vec![0; node_count],
        }
    }

    pub fn get(&self, u: NodeId) -> u32 {
        self.values.get(u as usize).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }
}

/// Computes the coreness of every node by iteratively peeling minimum-degree
/// nodes (Batagelj–Zaversnik bucket ordering, O(V + E)).
pub fn peel(view: &WindowView) -> CorenessMap {
    let n = view.node_count();
    if n == 0 {
        return CorenessMap::zeros(0);
    }
    let mut core: Vec<usize> = (0..n).map(|u| view.degree(u as NodeId)).collect();
    let max_deg = core.iter().copied().max().unwrap_or(0);

    // counting sort of nodes by degree
    let mut bin = vec![0usize; max_deg + 1];
    for &d in &core {
        bin[d] += 1;
    }
    let mut start = 0;
    for b in bin.iter_mut() {
        let width = *b;
        *b = start;
        start += width;
    }
    let mut pos = vec![0usize; n];
    let mut vert = vec![0usize; n];
    for u in 0..n {
        pos[u] = bin[core[u]];
        vert[pos[u]] = u;
        bin[core[u]] += 1;
    }
    for d in (1..=max_deg).rev() {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    // peel in nondecreasing residual-degree order; core[u] freezes at the
    // moment u is processed
    for i in 0..n {
        let v = vert[i];
        for &u in view.neighbors(v as NodeId) {
            let u = u as usize;
            if core[u] > core[v] {
                let du = core[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = vert[pw];
                if u != w {
                    pos[u] = pw;
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                }
                bin[du] += 1;
                core[u] -= 1;
            }
        }
    }

    CorenessMap::from_values(core.into_iter().map(|c| c as u32).collect())
}
