//! Temporal graphs: timestamped edge lists bucketed into epochs, plus the
//! sliding-window aggregated view a node population sees at each epoch.

use std::collections::HashMap;
use std::io::BufRead;

use crate::{Epoch, NodeId};

/// Node universe plus timestamped undirected edges; the immutable input.
///
/// Edges are stored per epoch in canonical form (`u < v`), sorted and
/// deduplicated. Node ids are dense (`0..node_count`); the original labels
/// from the input file are kept in a side table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalGraph {
    original_ids: Vec<i64>,
    buckets: Vec<Vec<(NodeId, NodeId)>>,
}

impl TemporalGraph {
    /// Builds a graph from `(u, v, epoch)` triples with arbitrary integer
    /// node labels. Self-loops are dropped, reversed duplicates and repeated
    /// triples collapse to one occurrence, labels are remapped to a dense
    /// range in ascending label order.
    pub fn from_edges(
        edges: impl IntoIterator<Item = (i64, i64, Epoch)>,
    ) -> Result<Self, ParseError> {
        let mut kept: Vec<(i64, i64, Epoch)> = edges
            .into_iter()
            .filter(|&(u, v, _)| u != v)
            .map(|(u, v, t)| if u < v { (u, v, t) } else { (v, u, t) })
            .collect();
        if kept.is_empty() {
            return Err(ParseError::Empty);
        }

        let mut labels: Vec<i64> = kept.iter().flat_map(|&(u, v, _)| [u, v]).collect();
        labels.sort_unstable();
        labels.dedup();
        let index: HashMap<i64, NodeId> = labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i as NodeId))
            .collect();

        let lifespan = kept.iter().map(|&(_, _, t)| t).max().unwrap();
        assert!(
            kept.iter().all(|&(_, _, t)| t >= 1),
            "epoch indices are 1-based"
        );
        let mut buckets: Vec<Vec<(NodeId, NodeId)>> = vec![Vec::new(); lifespan as usize];
        kept.sort_unstable();
        kept.dedup();
        for (u, v, t) in kept {
            buckets[t as usize - 1].push((index[&u], index[&v]));
        }
        for bucket in &mut buckets {
            bucket.sort_unstable();
        }

        Ok(TemporalGraph {
            original_ids: labels,
            buckets,
        })
    }

    /// Number of nodes in the universe (all nodes incident to some edge at
    /// some epoch).
    pub fn node_count(&self) -> usize {
        self.original_ids.len()
    }

    /// Largest epoch index τ.
    pub fn lifespan(&self) -> Epoch {
        self.buckets.len() as Epoch
    }

    /// Original input label of a dense node id.
    pub fn original_id(&self, u: NodeId) -> i64 {
        self.original_ids[u as usize]
    }

    /// Canonical sorted edge set of a single epoch snapshot.
    pub fn snapshot_edges(&self, t: Epoch) -> Result<&[(NodeId, NodeId)], EpochOutOfRange> {
        self.check_epoch(t)?;
        Ok(&self.buckets[t as usize - 1])
    }

    /// Total number of distinct `(u, v, t)` occurrences.
    pub fn edge_count(&self) -> usize {
        self.buckets.iter().map(Vec::len).sum()
    }

    fn check_epoch(&self, t: Epoch) -> Result<(), EpochOutOfRange> {
        if t < 1 || t > self.lifespan() {
            return Err(EpochOutOfRange {
                epoch: t,
                lifespan: self.lifespan(),
            });
        }
        Ok(())
    }
}

/// How the third column of an edge list is turned into an epoch index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpochingRule {
    /// Unix-second timestamps, bucketed as
    /// `epoch = 1 + (ts - min_ts) / seconds`, anchored at the dataset's
    /// minimum timestamp.
    FixedDuration(u64),
    /// The third column already is an epoch index. Indices are shifted so
    /// the smallest one becomes 1 when the input is 0-based or negative.
    ExplicitEpochs,
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("no edges left after filtering")]
    Empty,
}

/// Out-of-range epoch request against a graph of the given lifespan.
#[derive(Debug, Clone, Copy, thiserror::Error, PartialEq, Eq)]
#[error("epoch {epoch} out of range 1..={lifespan}")]
pub struct EpochOutOfRange {
    pub epoch: Epoch,
    pub lifespan: Epoch,
}

/// Parses a whitespace-delimited `u v timestamp` edge list. Lines starting
/// with `#` and blank lines are skipped.
pub fn parse_edge_list(
    reader: impl BufRead,
    epoching: EpochingRule,
) -> Result<TemporalGraph, ParseError> {
    let mut raw: Vec<(i64, i64, i64)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| ParseError::Malformed {
            line: line_no,
            reason: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let mut next_int = |name: &str| -> Result<i64, ParseError> {
            let tok = fields.next().ok_or_else(|| ParseError::Malformed {
                line: line_no,
                reason: format!("missing {name} field"),
            })?;
            tok.parse().map_err(|_| ParseError::Malformed {
                line: line_no,
                reason: format!("{name} field {tok:?} is not an integer"),
            })
        };
        let u = next_int("source")?;
        let v = next_int("target")?;
        let ts = next_int("timestamp")?;
        if u != v {
            raw.push((u, v, ts));
        }
    }
    if raw.is_empty() {
        return Err(ParseError::Empty);
    }

    let min_ts = raw.iter().map(|&(_, _, ts)| ts).min().unwrap();
    let to_epoch = |ts: i64| -> Epoch {
        match epoching {
            FixedDuration(seconds) => (1 + (ts - min_ts) / seconds as i64) as Epoch,
            ExplicitEpochs => {
                if min_ts < 1 {
                    (ts - min_ts + 1) as Epoch
                } else {
                    ts as Epoch
                }
            }
        }
    };
    TemporalGraph::from_edges(raw.into_iter().map(|(u, v, ts)| (u, v, to_epoch(ts))))
}

/// Rule deciding which edges exist over a window of epochs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AggregationFunction {
    /// An edge exists iff it occurs in every epoch of the window.
    Intersection,
    /// An edge exists iff it occurs in any epoch of the window.
    Union,
    /// An edge exists iff it occurs in at least `h` distinct epochs of the
    /// window (`h` is clamped to the window length, so short windows at the
    /// start of the lifespan stay well-defined).
    UnionH(u32),
}

impl AggregationFunction {
    /// Minimum number of distinct occurrence epochs required within a window
    /// of the given length.
    pub fn required_count(&self, window_len: u32) -> u32 {
        match *self {
            AggregationFunction::Intersection => window_len,
            AggregationFunction::Union => 1,
            AggregationFunction::UnionH(h) => h.min(window_len),
        }
    }
}

impl std::fmt::Display for AggregationFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AggregationFunction::Intersection => write!(f, "intersection"),
            AggregationFunction::Union => write!(f, "union"),
            AggregationFunction::UnionH(h) => write!(f, "union-{h}"),
        }
    }
}

/// Sliding-window length plus aggregation rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowConfig {
    /// Number of epochs a node "recalls", w ≥ 1.
    pub memory_size: u32,
    pub aggregation: AggregationFunction,
}

impl WindowConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.memory_size < 1 {
            return Err(ConfigError("memory size must be at least 1".into()));
        }
        if let AggregationFunction::UnionH(h) = self.aggregation {
            if h < 1 || h > self.memory_size {
                return Err(ConfigError(format!(
                    "union-h threshold {h} must be in 1..={}",
                    self.memory_size
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct ConfigError(pub String);

/// The static graph the node population sees at one epoch: per-node sorted
/// neighbor lists over the dense node universe. Nodes with degree 0 are not
/// part of the graph for that epoch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowView {
    epoch: Epoch,
    adj: Vec<Vec<NodeId>>,
    active_nodes: usize,
    edge_count: usize,
}

impl WindowView {
    /// The empty view over a node universe; stands in for "the epoch before
    /// the first one" when diffing.
    pub fn empty(node_count: usize) -> Self {
        WindowView {
            epoch: 0,
            adj: vec![Vec::new(); node_count],
            active_nodes: 0,
            edge_count: 0,
        }
    }

    fn from_edges(epoch: Epoch, node_count: usize, edges: &[(NodeId, NodeId)]) -> Self {
        let mut adj: Vec<Vec<NodeId>> = vec![Vec::new(); node_count];
        for &(u, v) in edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let active_nodes = adj.iter().filter(|l| !l.is_empty()).count();
        WindowView {
            epoch,
            adj,
            active_nodes,
            edge_count: edges.len(),
        }
    }

    pub fn epoch(&self) -> Epoch {
        self.epoch
    }

    /// Size of the node universe (including inactive nodes).
    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Number of nodes with degree ≥ 1.
    pub fn active_node_count(&self) -> usize {
        self.active_nodes
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, u: NodeId) -> &[NodeId] {
        &self.adj[u as usize]
    }

    pub fn degree(&self, u: NodeId) -> usize {
        self.adj[u as usize].len()
    }

    pub fn contains(&self, u: NodeId) -> bool {
        !self.adj[u as usize].is_empty()
    }

    /// Nodes with degree ≥ 1, ascending.
    pub fn active_nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, l)| !l.is_empty())
            .map(|(u, _)| u as NodeId)
    }

    /// Canonical sorted edge list (`u < v`).
    pub fn edges(&self) -> Vec<(NodeId, NodeId)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adj.iter().enumerate() {
            let u = u as NodeId;
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Materializes the aggregated static graph at epoch `t` over the window
/// `[max(1, t − w + 1), t]`.
pub fn window_view(
    g: &TemporalGraph,
    t: Epoch,
    cfg: &WindowConfig,
) -> Result<WindowView, EpochOutOfRange> {
    g.check_epoch(t)?;
    let a = t.saturating_sub(cfg.memory_size - 1).max(1);
    let window_len = t - a + 1;
    let required = cfg.aggregation.required_count(window_len);

    let mut counts: HashMap<(NodeId, NodeId), u32> = HashMap::new();
    for epoch in a..=t {
        for &pair in g.snapshot_edges(epoch).unwrap() {
            *counts.entry(pair).or_insert(0) += 1;
        }
    }
    let mut edges: Vec<(NodeId, NodeId)> = counts
        .into_iter()
        .filter(|&(_, c)| c >= required)
        .map(|(pair, _)| pair)
        .collect();
    edges.sort_unstable();
    Ok(WindowView::from_edges(t, g.node_count(), &edges))
}

/// Neighborhood change of one node between consecutive epochs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NodeDelta {
    pub new_neighbors: Vec<NodeId>,
    pub lost_neighbors: Vec<NodeId>,
}

/// Per-node neighborhood deltas between two views; nodes whose neighborhood
/// did not change carry no entry.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ViewDelta {
    changes: HashMap<NodeId, NodeDelta>,
}

impl ViewDelta {
    pub fn get(&self, u: NodeId) -> Option<&NodeDelta> {
        self.changes.get(&u)
    }

    pub fn is_empty(&self) -> bool {
        self.changes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.changes.len()
    }
}

/// Exact per-node set differences of neighborhoods between the view at the
/// previous epoch and the current one.
pub fn diff_views(prev: &WindowView, cur: &WindowView) -> ViewDelta {
    debug_assert_eq!(prev.node_count(), cur.node_count());
    let mut changes = HashMap::new();
    for u in 0..cur.node_count() as NodeId {
        let before = prev.neighbors(u);
        let after = cur.neighbors(u);
        if before.is_empty() && after.is_empty() {
            continue;
        }
        let new_neighbors = sorted_difference(after, before);
        let lost_neighbors = sorted_difference(before, after);
        if !new_neighbors.is_empty() || !lost_neighbors.is_empty() {
            changes.insert(
                u,
                NodeDelta {
                    new_neighbors,
                    lost_neighbors,
                },
            );
        }
    }
    ViewDelta { changes }
}

/// Elements of sorted slice `a` not present in sorted slice `b`.
fn sorted_difference(a: &[NodeId], b: &[NodeId]) -> Vec<NodeId> {
    let mut out = Vec::new();
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j >= b.len() || b[j] != x {
            out.push(x);
        }
    }
    out
}

use AggregationFunction::{Intersection, Union, UnionH};
use EpochingRule::{ExplicitEpochs, FixedDuration};
