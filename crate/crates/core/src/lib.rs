//! Decentralized k-core maintenance on temporal graphs.
//!
//! A temporal graph is a set of nodes plus timestamped undirected edges,
//! bucketed into epochs. At every epoch each node sees the static graph
//! aggregated over a sliding window of recent epochs and runs a round-based
//! message-passing protocol to maintain an estimate of its coreness. Two
//! protocol variants are provided: an incremental one that reuses estimates
//! across epochs, and a full-reset baseline that recomputes from scratch each
//! epoch and serves as ground truth. A peeling oracle, a synchronous round
//! simulator and a metrics pipeline (activated nodes, messages, iterations,
//! errors, edge dissimilarity, coreness churn) complete the toolkit.

pub mod experiment;
pub mod kcore;
pub mod metrics;
pub mod protocol;
pub mod simulator;
pub mod synthetic;
pub mod temporal_graph;

pub use experiment::{ExperimentError, ExperimentReport, GraphSource, RunConfig, VariantSelection};
pub use kcore::{peel, CorenessMap};
pub use metrics::{EpochMetrics, JaccardSource, Summary};
pub use protocol::{Message, NodeState, ProtocolVariant};
pub use simulator::{run_epoch, run_simulation, EpochRun, SimOptions};
pub use synthetic::SyntheticConfig;
pub use temporal_graph::{
    diff_views, parse_edge_list, window_view, AggregationFunction, EpochingRule, TemporalGraph,
    WindowConfig, WindowView,
};

/// Dense node identifier, assigned at parse time.
pub type NodeId = u32;
/// 1-based epoch index.
pub type Epoch = u32;
