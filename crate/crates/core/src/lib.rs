pub mod bbclique;
pub mod cli;
pub mod cliques;
pub mod dense;
pub mod eigen;
pub mod error;
pub mod generate;
pub mod graph;
pub mod inequalities;
pub mod majorization;
pub mod motzkin;
pub mod named;
pub mod report;
pub mod scan;
pub mod spectra;
pub mod weights;

pub use error::{Error, Result};
pub use graph::Graph;
