//! Solubilizers, solubility graphs and closed-form verification for small
//! simple matrix groups.

pub mod field;
pub mod group;
pub mod subgroup;
pub mod solubilizer;
pub mod catalogue;
pub mod oracle;
pub mod graph;
pub mod scan;
pub mod report;
pub mod pipeline;
