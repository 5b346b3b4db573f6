//! Exact deciders for fractional [a,b]-deleted graphs, together with the
//! spectral quantities and thresholds of the size, spectral-radius and
//! signless Laplacian sufficient conditions.
//!
//! * [`graph`]: labeled simple graphs and the join/union/extremal constructions.
//! * [`graph6`], [`edge_list`]: ingestion and serialization.
//! * [`spectral`]: ρ(G), q(G) and their closed-form upper bounds.
//! * [`oracle`]: deficiency-criterion, definitional and flow-based deciders.
//! * [`verifier`]: hypothesis evaluation, sharpness replays and corpus scans.

pub mod edge_list;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod spectral;
pub mod verifier;

pub use edge_list::{parse_edge_list, EdgeListError};
pub use graph::{Graph, GraphError, InducedSubgraph, VertexSet};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
