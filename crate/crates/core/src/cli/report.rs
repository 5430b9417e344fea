//! Command reports: a JSON object with sorted keys plus a text rendering.

use serde_json::{json, Map, Value};

use crate::algebra::{Bidegree, BlockOrder, Field, Monomial};
use crate::regularity::Certificate;
use crate::staircase::{Ambient, Region};

use super::plot::Plot;

/// Output of one command.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub seed: u64,
    pub order: BlockOrder,
    pub field: Field,
    pub fields: Map<String, Value>,
    pub text: String,
    pub plot: Option<Plot>,
}

impl Report {
    pub fn new(command: &str, input: &str, seed: u64, order: BlockOrder, field: Field) -> Report {
        Report {
            command: command.to_string(),
            input: input.to_string(),
            seed,
            order,
            field,
            fields: Map::new(),
            text: String::new(),
            plot: None,
        }
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.fields.insert(key.to_string(), value);
    }

    /// The JSON report. Keys are sorted (serde_json's default map), and every
    /// list of bidegrees is sorted before it gets here.
    pub fn to_json(&self) -> Value {
        let mut obj = self.fields.clone();
        obj.insert("command".into(), json!(self.command));
        obj.insert("input".into(), json!(self.input));
        obj.insert("seed".into(), json!(self.seed));
        obj.insert("order".into(), json!(self.order.to_string()));
        obj.insert("field".into(), json!(self.field.to_string()));
        obj.insert("heuristic".into(), json!(self.field.is_heuristic()));
        Value::Object(obj)
    }

    pub fn json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn bidegree(d: Bidegree) -> Value {
    json!([d.a, d.b])
}

/// Sorted, deduplicated list of bidegrees.
pub fn bidegrees<I: IntoIterator<Item = Bidegree>>(ds: I) -> Value {
    let mut v: Vec<Bidegree> = ds.into_iter().collect();
    v.sort();
    v.dedup();
    Value::Array(v.into_iter().map(bidegree).collect())
}

/// `[[a, b, count], ...]`, sorted by bidegree.
pub fn bidegree_counts<I: IntoIterator<Item = Bidegree>>(ds: I) -> Value {
    let mut counts = std::collections::BTreeMap::new();
    for d in ds {
        *counts.entry(d).or_insert(0u64) += 1;
    }
    Value::Array(counts.into_iter().map(|(d, c)| json!([d.a, d.b, c])).collect())
}

pub fn ambient(a: Ambient) -> &'static str {
    match a {
        Ambient::Nonneg => "a>=0,b>=0",
        Ambient::PositiveX => "a>=1,b>=0",
    }
}

pub fn region(r: &Region) -> Value {
    json!({
        "ambient": ambient(r.ambient()),
        "minimal": bidegrees(r.minimal_elements().iter().copied()),
    })
}

pub fn monomials(ms: &[Monomial]) -> Value {
    Value::Array(ms.iter().map(|m| json!(m.to_string())).collect())
}

pub fn certificate(c: &Certificate) -> Value {
    json!({
        "kind": c.kind.to_string(),
        "bidegree": c.bidegree.map(bidegree),
        "region": region(&c.region),
        "verdict": c.verdict,
        "witness": c.witness.as_ref().map(|w| w.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted_and_lists_deduplicated() {
        let mut r = Report::new("xreg", "m.ideal", 7, BlockOrder::XLow, Field::Rational);
        r.set("zeta", json!(1));
        r.set("alpha", bidegrees([Bidegree::new(2, 0), Bidegree::new(1, 3), Bidegree::new(2, 0)]));
        let s = r.json_string();
        let keys: Vec<usize> = ["alpha", "command", "field", "heuristic", "input", "order", "seed", "zeta"]
            .iter()
            .map(|k| s.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(r.to_json()["alpha"], json!([[1, 3], [2, 0]]));
    }
}
