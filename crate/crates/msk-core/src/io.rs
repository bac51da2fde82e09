//! JSON file formats: graphs, barcodes, histories, moves.
//!
//! Graph file:
//! ```json
//! { "vertices": [{"id": "a", "index": 2, "value": 8.0}],
//!   "rotations": {"a": ["d1", "d2"]},
//!   "darts": {"d1": {"edge": "e1"}},
//!   "edges": {"e1": {"ends": ["d1", "d7"]}} }
//! ```
//! `value` is optional; when every vertex carries one the graph is decorated.
//! Barcode and history formats are documented on their parse functions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

use crate::barcode::{Bar, Barcode, BarcodeFlavor, Death, Endpoint, EndpointType};
use crate::complex::{GraphSpec, MorseIndex, MsGraph};
use crate::error::{Error, Result};
use crate::persistence::DecoratedMsGraph;
use crate::slices::{CircleId, EmbeddingHistory, Event, Region};

#[derive(Debug, Serialize, Deserialize)]
struct GraphFile {
    vertices: Vec<GraphFileVertex>,
    rotations: BTreeMap<String, Vec<String>>,
    darts: BTreeMap<String, GraphFileDart>,
    edges: BTreeMap<String, GraphFileEdge>,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphFileVertex {
    id: String,
    index: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphFileDart {
    edge: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphFileEdge {
    ends: [String; 2],
}

/// Parses the graph file format. Returns the graph plus the per-vertex
/// values (aligned with vertex ids) when present on every vertex.
pub fn parse_graph(text: &str) -> Result<(MsGraph, Option<Vec<f64>>)> {
    let file: GraphFile =
        serde_json::from_str(text).map_err(|e| Error::malformed(format!("graph file: {e}")))?;
    let mut spec = GraphSpec::default();
    let mut values = Vec::new();
    let mut n_values = 0;
    for v in &file.vertices {
        let index = u8::try_from(v.index)
            .ok()
            .and_then(MorseIndex::from_u8)
            .ok_or_else(|| Error::malformed(format!("vertex {:?} index {} not in {{0,1,2}}", v.id, v.index)))?;
        spec.vertices.push((v.id.clone(), index));
        if let Some(x) = v.value {
            n_values += 1;
            values.push(x);
        } else {
            values.push(f64::NAN);
        }
    }
    for (id, _) in &spec.vertices {
        let rot = file
            .rotations
            .get(id)
            .ok_or_else(|| Error::malformed(format!("vertex {id:?} has no rotation entry")))?;
        spec.rotations.push(rot.clone());
    }
    for key in file.rotations.keys() {
        if !spec.vertices.iter().any(|(id, _)| id == key) {
            return Err(Error::malformed(format!("rotation entry for unknown vertex {key:?}")));
        }
    }
    // Darts must be consistent with the edge table.
    for (dart, d) in &file.darts {
        let edge = file
            .edges
            .get(&d.edge)
            .ok_or_else(|| Error::malformed(format!("dart {dart:?} references unknown edge {:?}", d.edge)))?;
        if !edge.ends.contains(dart) {
            return Err(Error::malformed(format!(
                "dart {dart:?} claims edge {:?} but is not one of its ends",
                d.edge
            )));
        }
    }
    for (id, e) in &file.edges {
        for d in &e.ends {
            let back = file
                .darts
                .get(d)
                .ok_or_else(|| Error::malformed(format!("edge {id:?} references unknown dart {d:?}")))?;
            if &back.edge != id {
                return Err(Error::malformed(format!("dart {d:?} does not point back to edge {id:?}")));
            }
        }
        spec.edges.push((id.clone(), e.ends.clone(), None));
    }
    let graph = MsGraph::build(spec)?;
    let values = if n_values == graph.vertex_count() { Some(values) } else { None };
    Ok((graph, values))
}

/// Parses a graph file and requires a full decoration.
pub fn parse_decorated_graph(text: &str) -> Result<DecoratedMsGraph<f64>> {
    let (graph, values) = parse_graph(text)?;
    let values =
        values.ok_or_else(|| Error::rejected("graph file carries no complete vertex decoration"))?;
    DecoratedMsGraph::new(graph, values)
}

pub fn graph_to_json(g: &MsGraph, values: Option<&[f64]>) -> Json {
    let spec = g.to_spec();
    let file = GraphFile {
        vertices: spec
            .vertices
            .iter()
            .enumerate()
            .map(|(i, (id, index))| GraphFileVertex {
                id: id.clone(),
                index: index.as_u8() as i64,
                value: values.map(|vs| vs[i]),
            })
            .collect(),
        rotations: spec
            .vertices
            .iter()
            .zip(&spec.rotations)
            .map(|((id, _), rot)| (id.clone(), rot.clone()))
            .collect(),
        darts: spec
            .edges
            .iter()
            .flat_map(|(el, ends, _)| {
                ends.iter().map(move |d| (d.clone(), GraphFileDart { edge: el.clone() }))
            })
            .collect(),
        edges: spec
            .edges
            .iter()
            .map(|(el, ends, _)| (el.clone(), GraphFileEdge { ends: ends.clone() }))
            .collect(),
    };
    serde_json::to_value(file).expect("graph serialization cannot fail")
}

#[derive(Debug, Serialize, Deserialize)]
struct BarcodeFile {
    flavor: String,
    bars: Vec<BarFile>,
}

#[derive(Debug, Serialize, Deserialize)]
struct BarFile {
    dim: u8,
    birth: EndpointFile,
    death: DeathFile,
}

#[derive(Debug, Serialize, Deserialize)]
struct EndpointFile {
    v: f64,
    t: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum DeathFile {
    Infinite(String),
    Finite(EndpointFile),
}

fn endpoint_type(s: &str) -> Result<EndpointType> {
    match s {
        "closed" => Ok(EndpointType::Closed),
        "open" => Ok(EndpointType::Open),
        other => Err(Error::malformed(format!("endpoint type {other:?} (want closed|open)"))),
    }
}

/// Barcode file:
/// `{"flavor": "sublevel"|"levelset", "bars": [{"dim": 0, "birth": {"v": 1.0,
/// "t": "closed"}, "death": {"v": 3.0, "t": "open"}}]}` with `"death": "inf"`
/// for essential bars.
pub fn parse_barcode(text: &str) -> Result<Barcode<f64>> {
    let file: BarcodeFile =
        serde_json::from_str(text).map_err(|e| Error::malformed(format!("barcode file: {e}")))?;
    let flavor = match file.flavor.as_str() {
        "sublevel" => BarcodeFlavor::Sublevel,
        "levelset" => BarcodeFlavor::Levelset,
        other => return Err(Error::malformed(format!("flavor {other:?} (want sublevel|levelset)"))),
    };
    let mut bars = Vec::new();
    for b in &file.bars {
        let birth = Endpoint { value: b.birth.v, ty: endpoint_type(&b.birth.t)? };
        let death = match &b.death {
            DeathFile::Infinite(s) if s == "inf" => Death::Infinite,
            DeathFile::Infinite(s) => {
                return Err(Error::malformed(format!("death {s:?} (want \"inf\" or an endpoint)")))
            }
            DeathFile::Finite(e) => Death::Finite(Endpoint { value: e.v, ty: endpoint_type(&e.t)? }),
        };
        bars.push(Bar { dim: b.dim, birth, death });
    }
    Ok(Barcode::new(flavor, bars))
}

pub fn barcode_to_json(b: &Barcode<f64>) -> Json {
    let file = BarcodeFile {
        flavor: b.flavor.as_str().to_string(),
        bars: b
            .bars
            .iter()
            .map(|bar| BarFile {
                dim: bar.dim,
                birth: EndpointFile { v: bar.birth.value, t: bar.birth.ty.as_str().to_string() },
                death: match bar.death {
                    Death::Infinite => DeathFile::Infinite("inf".to_string()),
                    Death::Finite(e) => {
                        DeathFile::Finite(EndpointFile { v: e.value, t: e.ty.as_str().to_string() })
                    }
                },
            })
            .collect(),
    };
    serde_json::to_value(file).expect("barcode serialization cannot fail")
}

#[derive(Debug, Serialize, Deserialize)]
struct HistoryFile {
    events: Vec<HistoryEventFile>,
}

#[derive(Debug, Serialize, Deserialize)]
struct HistoryEventFile {
    t: f64,
    kind: String,
    args: Json,
}

/// History file: `{"events": [{"t": 0.0, "kind": "min", "args": {...}}]}`.
///
/// Event args by kind (circles are referenced by string ids; new circles are
/// named explicitly):
/// - `min`: `{"circle": id, "region": id | "outer"}`
/// - `max`: `{"circle": id}`
/// - `merge_nn`: `{"a": id, "b": id, "merged": id}`
/// - `merge_n`: `{"outer": id, "inner": id, "merged": id}`
/// - `split_nn`: `{"circle": id, "halves": [{"id": id, "children": [id...]},
///   {"id": id, "children": [id...]}]}` — the children lists partition the
///   split circle's children; the first half continues the family on ties.
/// - `split_n`: `{"circle": id, "outer": id, "inner": id, "captured":
///   [id...]}` — captured siblings become the inner circle's children.
pub fn parse_history(text: &str) -> Result<EmbeddingHistory<f64>> {
    let file: HistoryFile =
        serde_json::from_str(text).map_err(|e| Error::malformed(format!("history file: {e}")))?;
    let mut events = Vec::new();
    for ev in &file.events {
        events.push(parse_event(ev)?);
    }
    EmbeddingHistory::new(events)
}

fn get_str(args: &Json, key: &str) -> Result<String> {
    args.get(key)
        .and_then(Json::as_str)
        .map(str::to_string)
        .ok_or_else(|| Error::malformed(format!("event args missing string field {key:?}")))
}

fn get_ids(args: &Json, key: &str) -> Result<Vec<CircleId>> {
    let arr = args
        .get(key)
        .and_then(Json::as_array)
        .ok_or_else(|| Error::malformed(format!("event args missing list field {key:?}")))?;
    arr.iter()
        .map(|x| {
            x.as_str()
                .map(|s| CircleId::from(s.to_string()))
                .ok_or_else(|| Error::malformed(format!("{key:?} entries must be strings")))
        })
        .collect()
}

fn parse_event(ev: &HistoryEventFile) -> Result<Event<f64>> {
    let t = ev.t;
    let a = &ev.args;
    Ok(match ev.kind.as_str() {
        "min" => {
            let region = match get_str(a, "region")?.as_str() {
                "outer" => Region::Outer,
                other => Region::Circle(CircleId::from(other.to_string())),
            };
            Event::Min { t, circle: CircleId::from(get_str(a, "circle")?), region }
        }
        "max" => Event::Max { t, circle: CircleId::from(get_str(a, "circle")?) },
        "merge_nn" => Event::MergeNonNesting {
            t,
            a: CircleId::from(get_str(a, "a")?),
            b: CircleId::from(get_str(a, "b")?),
            merged: CircleId::from(get_str(a, "merged")?),
        },
        "merge_n" => Event::MergeNesting {
            t,
            outer: CircleId::from(get_str(a, "outer")?),
            inner: CircleId::from(get_str(a, "inner")?),
            merged: CircleId::from(get_str(a, "merged")?),
        },
        "split_nn" => {
            let halves = a
                .get("halves")
                .and_then(Json::as_array)
                .filter(|h| h.len() == 2)
                .ok_or_else(|| Error::malformed("split_nn needs exactly two halves".to_string()))?;
            let mut parsed = Vec::new();
            for h in halves {
                parsed.push((CircleId::from(get_str(h, "id")?), get_ids(h, "children")?));
            }
            let second = parsed.pop().unwrap();
            let first = parsed.pop().unwrap();
            Event::SplitNonNesting { t, circle: CircleId::from(get_str(a, "circle")?), halves: [first, second] }
        }
        "split_n" => Event::SplitNesting {
            t,
            circle: CircleId::from(get_str(a, "circle")?),
            outer: CircleId::from(get_str(a, "outer")?),
            inner: CircleId::from(get_str(a, "inner")?),
            captured: get_ids(a, "captured")?,
        },
        other => return Err(Error::malformed(format!("unknown event kind {other:?}"))),
    })
}

pub fn history_to_json(h: &EmbeddingHistory<f64>) -> Json {
    let events: Vec<HistoryEventFile> = h
        .events()
        .iter()
        .map(|ev| {
            let (kind, args) = match ev {
                Event::Min { circle, region, .. } => (
                    "min",
                    serde_json::json!({
                        "circle": circle.as_str(),
                        "region": match region {
                            Region::Outer => "outer".to_string(),
                            Region::Circle(c) => c.as_str().to_string(),
                        },
                    }),
                ),
                Event::Max { circle, .. } => ("max", serde_json::json!({"circle": circle.as_str()})),
                Event::MergeNonNesting { a, b, merged, .. } => (
                    "merge_nn",
                    serde_json::json!({"a": a.as_str(), "b": b.as_str(), "merged": merged.as_str()}),
                ),
                Event::MergeNesting { outer, inner, merged, .. } => (
                    "merge_n",
                    serde_json::json!({
                        "outer": outer.as_str(), "inner": inner.as_str(), "merged": merged.as_str()
                    }),
                ),
                Event::SplitNonNesting { circle, halves, .. } => (
                    "split_nn",
                    serde_json::json!({
                        "circle": circle.as_str(),
                        "halves": halves
                            .iter()
                            .map(|(id, kids)| {
                                serde_json::json!({
                                    "id": id.as_str(),
                                    "children": kids.iter().map(|k| k.as_str()).collect::<Vec<_>>(),
                                })
                            })
                            .collect::<Vec<_>>(),
                    }),
                ),
                Event::SplitNesting { circle, outer, inner, captured, .. } => (
                    "split_n",
                    serde_json::json!({
                        "circle": circle.as_str(),
                        "outer": outer.as_str(),
                        "inner": inner.as_str(),
                        "captured": captured.iter().map(|k| k.as_str()).collect::<Vec<_>>(),
                    }),
                ),
            };
            HistoryEventFile { t: ev.time(), kind: kind.to_string(), args }
        })
        .collect();
    serde_json::to_value(HistoryFile { events }).expect("history serialization cannot fail")
}

/// Move file: `{"kind": "face_max", "site": {"face": 0}}`.
pub fn parse_move(text: &str) -> Result<crate::moves::MoveInstance> {
    serde_json::from_str(text).map_err(|e| Error::malformed(format!("move file: {e}")))
}
