//! Nonnegative edge weights and the `u,v,w` CSV format.

use std::io::Read;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One weight per edge, aligned with [`Graph::edges`].
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeWeights {
    values: Vec<f64>,
}

impl EdgeWeights {
    pub fn uniform(g: &Graph, w: f64) -> Result<Self> {
        Self::new(g, vec![w; g.size()])
    }

    pub fn new(g: &Graph, values: Vec<f64>) -> Result<Self> {
        if values.len() != g.size() {
            return Err(Error::Weights(format!(
                "expected {} weights, got {}",
                g.size(),
                values.len()
            )));
        }
        if let Some((i, w)) = values
            .iter()
            .enumerate()
            .find(|(_, w)| !(w.is_finite() && **w >= 0.0))
        {
            let (u, v) = g.edges()[i];
            return Err(Error::Weights(format!("edge ({u}, {v}) has weight {w}; weights must be finite and nonnegative")));
        }
        Ok(EdgeWeights { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn scaled(&self, s: f64) -> EdgeWeights {
        EdgeWeights {
            values: self.values.iter().map(|w| w * s).collect(),
        }
    }

    /// Reads `u,v,w` rows (header required). Every edge of `g` must appear
    /// exactly once, in either orientation.
    pub fn from_csv<R: Read>(g: &Graph, reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let headers = rdr.headers()?.clone();
        if headers.iter().collect::<Vec<_>>() != ["u", "v", "w"] {
            return Err(Error::Weights(format!(
                "expected header `u,v,w`, found `{}`",
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let mut values = vec![f64::NAN; g.size()];
        for (line, row) in rdr.deserialize::<(usize, usize, f64)>().enumerate() {
            let (u, v, w) = row?;
            let idx = g.edge_index(u, v).ok_or_else(|| {
                Error::Weights(format!("row {}: ({u}, {v}) is not an edge", line + 2))
            })?;
            if !values[idx].is_nan() {
                return Err(Error::Weights(format!("row {}: duplicate edge ({u}, {v})", line + 2)));
            }
            values[idx] = w;
        }
        if let Some(i) = values.iter().position(|w| w.is_nan()) {
            let (u, v) = g.edges()[i];
            return Err(Error::Weights(format!("missing weight for edge ({u}, {v})")));
        }
        Self::new(g, values)
    }

    pub fn to_csv(&self, g: &Graph) -> String {
        let mut out = String::from("u,v,w\n");
        for (&(u, v), w) in g.edges().iter().zip(&self.values) {
            out.push_str(&format!("{u},{v},{w}\n"));
        }
        out
    }
}
