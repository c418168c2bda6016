//! Reference triangles shipped with the crate, keyed by OEIS id.
//!
//! The rows were produced by this crate's own enumeration and compared
//! against the OEIS entries by hand; tests regenerate and compare them.

use std::collections::BTreeMap;

use permcross_core::{DistributionSource, PatternSet, Result, RowSelector, Statistic, Triangle};
use serde::Deserialize;

const OEIS_JSON: &str = include_str!("../fixtures/oeis.json");

#[derive(Debug, Clone, Deserialize)]
pub struct Fixture {
    pub description: String,
    pub patterns: String,
    pub selector: String,
    pub stat: String,
    pub n_min: usize,
    pub rows: Vec<Vec<i64>>,
}

impl Fixture {
    pub fn triangle(&self) -> Triangle {
        Triangle { n_min: self.n_min, rows: self.rows.clone() }
    }

    /// Recomputes the rows with `source`.
    pub fn regenerate(&self, source: &dyn DistributionSource) -> Result<Triangle> {
        let set: PatternSet = self.patterns.parse()?;
        let sel: RowSelector = self.selector.parse()?;
        let stat: Statistic = self.stat.parse()?;
        let n_max = self.n_min + self.rows.len() - 1;
        permcross_core::distribution::triangle(source, &set, sel, stat, self.n_min, n_max)
    }
}

pub fn all() -> BTreeMap<String, Fixture> {
    serde_json::from_str(OEIS_JSON).expect("embedded fixture file is valid")
}

pub fn get(id: &str) -> Option<Fixture> {
    all().remove(id)
}
