//! JSON serialization for graphs and labelings, plus DOT export.
//!
//! Parsing only checks format and ranges. Whether a labeling is a valid
//! Perrin labeling is left to [`crate::labeling::is_valid`], so callers can
//! tell format errors from semantic ones.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Family, FamilySpec, Graph, Role};
use crate::labeling::{induced_edge_label, to_parity, validate_for, PerrinLabeling};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyJson {
    name: String,
    params: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    vertex_count: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    roles: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<FamilyJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryJson {
    vertex: usize,
    index: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LabelingJson {
    domain_max: usize,
    assignment: Vec<EntryJson>,
}

fn schema(field: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Schema {
        field: field.into(),
        reason: reason.into(),
    }
}

pub fn write_graph(g: &Graph) -> String {
    let doc = GraphJson {
        vertex_count: g.vertex_count(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        roles: g
            .roles()
            .iter()
            .enumerate()
            .filter(|(_, r)| **r != Role::Generic)
            .map(|(v, r)| (v.to_string(), r.as_str().to_string()))
            .collect(),
        family: g.family().map(|spec| FamilyJson {
            name: spec.family().name().to_string(),
            params: spec.params(),
        }),
    };
    serde_json::to_string_pretty(&doc).expect("graph serializes")
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(text)?;
    let n = doc.vertex_count;
    let mut roles = vec![Role::Generic; n];
    for (key, value) in &doc.roles {
        let field = format!("roles.{key}");
        let v: usize = key
            .parse()
            .map_err(|_| schema(&field, "key is not a vertex id"))?;
        if v >= n {
            return Err(schema(field, format!("vertex {v} out of range 0..{n}")));
        }
        roles[v] =
            Role::parse(value).ok_or_else(|| schema(&field, format!("unknown role {value:?}")))?;
    }
    for (i, &[u, v]) in doc.edges.iter().enumerate() {
        if u >= n || v >= n {
            return Err(schema(
                format!("edges[{i}]"),
                format!("endpoint of [{u},{v}] out of range 0..{n}"),
            ));
        }
    }
    let edges = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
    let g = Graph::new(n, edges, roles).map_err(|e| schema("edges", e.to_string()))?;
    let family = match doc.family {
        None => None,
        Some(f) => {
            let fam = Family::parse(&f.name)
                .ok_or_else(|| schema("family.name", format!("unknown family {:?}", f.name)))?;
            let spec = fam
                .spec(&f.params)
                .map_err(|e| schema("family.params", e.to_string()))?;
            check_family(&g, spec)?;
            Some(spec)
        }
    };
    Ok(g.with_family(family))
}

/// A declared family must describe exactly this graph.
fn check_family(g: &Graph, spec: FamilySpec) -> Result<()> {
    let expect = spec.generate()?;
    if expect.vertex_count() != g.vertex_count() || expect.edges() != g.edges() {
        return Err(schema(
            "family",
            format!("graph does not match the canonical {spec}"),
        ));
    }
    Ok(())
}

pub fn write_labeling(f: &PerrinLabeling) -> String {
    let doc = LabelingJson {
        domain_max: f.domain_max,
        assignment: f
            .assignment
            .iter()
            .map(|(&vertex, &index)| EntryJson { vertex, index })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("labeling serializes")
}

/// Duplicate vertices are a format error; duplicate or out-of-range indices
/// are not, they surface at validation time.
pub fn read_labeling(text: &str) -> Result<PerrinLabeling> {
    let doc: LabelingJson = serde_json::from_str(text)?;
    let mut assignment = BTreeMap::new();
    for (i, e) in doc.assignment.iter().enumerate() {
        if assignment.insert(e.vertex, e.index).is_some() {
            return Err(schema(
                format!("assignment[{i}].vertex"),
                format!("vertex {} assigned twice", e.vertex),
            ));
        }
    }
    Ok(PerrinLabeling {
        domain_max: doc.domain_max,
        assignment,
    })
}

/// DOT with colors by parity: even-labeled vertices and 0-labeled edges red, the rest
/// black. Output depends only on the inputs.
pub fn export_dot(g: &Graph, f: &PerrinLabeling) -> Result<String> {
    validate_for(g, f)?;
    let parity = to_parity(f)?;
    let color = |even: bool| if even { "red" } else { "black" };
    let name = g
        .family()
        .map_or_else(|| "G".to_string(), |s| s.to_string());
    let mut out = String::new();
    writeln!(out, "graph \"{name}\" {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 0..g.vertex_count() {
        let i = f.assignment[&v];
        writeln!(
            out,
            "  {v} [label=\"P_{i}\", color={c}, fontcolor={c}];",
            c = color(parity.0[v].is_even())
        )
        .unwrap();
    }
    for &(u, v) in g.edges() {
        let label = induced_edge_label(parity.0[u], parity.0[v]);
        writeln!(
            out,
            "  {u} -- {v} [label=\"{label}\", color={}];",
            color(label == 0)
        )
        .unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
