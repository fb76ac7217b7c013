//! The JSON graph file read by `rspin strata`.

use serde::{Deserialize, Serialize};

use rspin_core::moduli::{DualGraph, Vertex};
use rspin_core::FieldConfig;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    pub id: String,
    pub genus: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LegDoc {
    pub vertex: String,
    pub marking: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub r: u32,
    pub m: Vec<i64>,
    pub vertices: Vec<VertexDoc>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
    #[serde(default)]
    pub legs: Vec<LegDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field_prime: Option<u64>,
}

impl GraphDocument {
    pub fn from_json(text: &str) -> Result<Self, String> {
        let doc: GraphDocument =
            serde_json::from_str(text).map_err(|e| format!("graph file: {e}"))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Schema checks that do not need the graph to be built.
    pub fn validate(&self) -> Result<(), String> {
        if self.r == 0 {
            return Err("graph file: r must be positive".into());
        }
        if self.m.len() != self.legs.len() {
            return Err(format!(
                "graph file: {} type entries for {} legs",
                self.m.len(),
                self.legs.len()
            ));
        }
        if let Some(p) = self.field_prime {
            FieldConfig::new(p, self.r).map_err(|e| format!("graph file: {e}"))?;
        }
        Ok(())
    }

    pub fn graph(&self) -> Result<DualGraph, String> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex {
                id: v.id.clone(),
                genus: v.genus,
            })
            .collect();
        let edges: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|[a, b]| (a.as_str(), b.as_str()))
            .collect();
        let legs: Vec<(&str, u32)> = self
            .legs
            .iter()
            .map(|l| (l.vertex.as_str(), l.marking))
            .collect();
        DualGraph::new(vertices, &edges, &legs).map_err(|e| e.to_string())
    }

    /// Type entries reordered by marking, as the enumerator expects.
    pub fn types_by_marking(&self) -> Vec<i64> {
        let mut pairs: Vec<(u32, i64)> = self
            .legs
            .iter()
            .map(|l| l.marking)
            .zip(self.m.iter().copied())
            .collect();
        pairs.sort_by_key(|p| p.0);
        pairs.into_iter().map(|p| p.1).collect()
    }
}
