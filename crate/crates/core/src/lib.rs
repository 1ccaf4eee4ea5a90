//! Prime graphs of finite groups.

pub mod census;
pub mod corpus;
pub mod data;
pub mod elemgraph;
pub mod graph;
pub mod group;
pub mod numtheory;
pub mod perm;
pub mod recognize;
pub mod tables;
