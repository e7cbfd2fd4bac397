use serde::Serialize;
use serde_json::{json, Map, Value};

use super::complex::{build_complex, cohomology_table, restricted_h2, DegreeRow};
use crate::actions::Representation;
use crate::algebra::VarietyTag;
use crate::exactlin::Field;
use crate::Result;

/// Dimension table for one variety, plus restricted `ℍ²` for the NP varieties.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub variety: VarietyTag,
    pub field: String,
    pub max_degree: usize,
    pub rows: Vec<DegreeRow>,
    pub restricted_h2: Option<usize>,
}

pub fn cohomology_report<F: Field>(v: VarietyTag, r: &Representation<F>, max_degree: usize) -> Result<CohomologyReport> {
    let c = build_complex(v, r, max_degree + 1)?;
    let rows = cohomology_table(&c, max_degree)?;
    let rh2 = match v {
        VarietyTag::NPl | VarietyTag::NPr | VarietyTag::NPlr => Some(restricted_h2(v, r)?),
        _ => None,
    };
    Ok(CohomologyReport { variety: v, field: r.field().spec().to_string(), max_degree, rows, restricted_h2: rh2 })
}

impl CohomologyReport {
    /// Header line followed by one line per degree. `extra` is merged into the header.
    pub fn json_lines(&self, extra: Map<String, Value>) -> String {
        let mut head = Map::new();
        head.insert("variety".into(), json!(self.variety.name()));
        head.insert("field".into(), json!(self.field));
        head.insert("max_degree".into(), json!(self.max_degree));
        if let Some(h) = self.restricted_h2 {
            head.insert("restricted_h2".into(), json!(h));
        }
        head.extend(extra);
        let mut out = Value::Object(head).to_string();
        out.push('\n');
        for r in &self.rows {
            out.push_str(&serde_json::to_string(r).expect("plain struct"));
            out.push('\n');
        }
        out
    }

    pub fn text(&self) -> String {
        let mut s = format!("{} cohomology over {}\n", self.variety, self.field);
        s.push_str(&format!("{:>3} {:>10} {:>8} {:>6}\n", "n", "cochains", "rank d", "dim H"));
        for r in &self.rows {
            s.push_str(&format!("{:>3} {:>10} {:>8} {:>6}\n", r.n, r.cochain_dim, r.rank, r.h_dim));
        }
        if let Some(h) = self.restricted_h2 {
            s.push_str(&format!("restricted H^2: {h}\n"));
        }
        s
    }
}
