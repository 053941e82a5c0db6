//! Graph model and amplitude pipeline for the topological vertex.

pub mod amplitude;
pub mod graph;

pub use amplitude::{
    connected_f, enumerate_classes, exp_table, log_table, open_gw_from_table,
    three_point_w_direct, z_amplitude, z_table, ClassSeries, VertexError, WCache,
};
pub use graph::{
    fiber_enumerate, project_class, Brane, Edge, EdgeEnd, EdgeId, EffClass, FiberError,
    FtcyGraph, GraphError, VertexId,
};
