//! The six fundamental moves, their cancellations, and search over the
//! move graph.
//!
//! Additions insert a saddle-extremum pair inside a face, on a separatrix,
//! or at an existing extremum; cancellations are exact pattern matches of
//! the corresponding right-hand sides. Moves are structural only: no
//! critical values are involved.

mod apply;
mod search;

pub use search::{connect, explore_graphs, reachable_codes, ConnectOptions};

use serde::{Deserialize, Serialize};

use crate::complex::{MorseIndex, MsGraph};
use crate::error::{Error, Result};

use apply::Polarity;

/// One concrete move on one concrete graph. Face sites are indices into
/// [`MsGraph::faces`]; edge and vertex sites use the external labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "site", rename_all = "snake_case")]
pub enum MoveInstance {
    FaceMax { face: usize },
    FaceMin { face: usize },
    EdgeMax { edge: String },
    EdgeMin { edge: String },
    VertexMax { vertex: String, gaps: (usize, usize) },
    VertexMin { vertex: String, gaps: (usize, usize) },
    CancelFaceMax { saddle: String, extremum: String },
    CancelFaceMin { saddle: String, extremum: String },
    CancelEdgeMax { saddle: String, extremum: String },
    CancelEdgeMin { saddle: String, extremum: String },
    CancelVertexMax { saddle: String, extremum: String },
    CancelVertexMin { saddle: String, extremum: String },
}

impl MoveInstance {
    /// Additions add a pair of critical points; cancellations remove one.
    pub fn is_addition(&self) -> bool {
        matches!(
            self,
            MoveInstance::FaceMax { .. }
                | MoveInstance::FaceMin { .. }
                | MoveInstance::EdgeMax { .. }
                | MoveInstance::EdgeMin { .. }
                | MoveInstance::VertexMax { .. }
                | MoveInstance::VertexMin { .. }
        )
    }
}

fn require_valid(g: &MsGraph) -> Result<()> {
    let report = g.validate();
    if !report.is_valid() {
        return Err(Error::rejected(format!("moves require a valid graph: {report}")));
    }
    Ok(())
}

fn vertex_of(g: &MsGraph, label: &str) -> Result<usize> {
    g.vertex_by_label(label)
        .ok_or_else(|| Error::rejected(format!("unknown vertex id {label:?}")))
}

/// Applies one move, producing a new graph. The input graph is unchanged;
/// inapplicable sites are rejected with the failed pattern named.
pub fn apply_move(g: &MsGraph, m: &MoveInstance) -> Result<MsGraph> {
    require_valid(g)?;
    let out = match m {
        MoveInstance::FaceMax { face } => apply::face_move(g, *face, Polarity::Max)?,
        MoveInstance::FaceMin { face } => apply::face_move(g, *face, Polarity::Min)?,
        MoveInstance::EdgeMax { edge } | MoveInstance::EdgeMin { edge } => {
            let e = g
                .edge_by_label(edge)
                .ok_or_else(|| Error::rejected(format!("unknown edge id {edge:?}")))?;
            let pol = if matches!(m, MoveInstance::EdgeMax { .. }) {
                Polarity::Max
            } else {
                Polarity::Min
            };
            apply::edge_move(g, e, pol)?
        }
        MoveInstance::VertexMax { vertex, gaps } => {
            apply::vertex_move(g, vertex_of(g, vertex)?, *gaps, Polarity::Max)?
        }
        MoveInstance::VertexMin { vertex, gaps } => {
            apply::vertex_move(g, vertex_of(g, vertex)?, *gaps, Polarity::Min)?
        }
        MoveInstance::CancelFaceMax { saddle, extremum } => {
            apply::cancel_face(g, vertex_of(g, saddle)?, vertex_of(g, extremum)?, Polarity::Max)?
        }
        MoveInstance::CancelFaceMin { saddle, extremum } => {
            apply::cancel_face(g, vertex_of(g, saddle)?, vertex_of(g, extremum)?, Polarity::Min)?
        }
        MoveInstance::CancelEdgeMax { saddle, extremum } => {
            apply::cancel_edge(g, vertex_of(g, saddle)?, vertex_of(g, extremum)?, Polarity::Max)?
        }
        MoveInstance::CancelEdgeMin { saddle, extremum } => {
            apply::cancel_edge(g, vertex_of(g, saddle)?, vertex_of(g, extremum)?, Polarity::Min)?
        }
        MoveInstance::CancelVertexMax { saddle, extremum } => {
            let s = vertex_of(g, saddle)?;
            check_vertex_cancel_site(g, s, extremum, Polarity::Max)?;
            apply::cancel_vertex(g, s, Polarity::Max)?
        }
        MoveInstance::CancelVertexMin { saddle, extremum } => {
            let s = vertex_of(g, saddle)?;
            check_vertex_cancel_site(g, s, extremum, Polarity::Min)?;
            apply::cancel_vertex(g, s, Polarity::Min)?
        }
    };
    debug_assert!(out.is_valid(), "move output failed validation");
    Ok(out)
}

fn check_vertex_cancel_site(g: &MsGraph, s: usize, extremum: &str, pol: Polarity) -> Result<()> {
    let x = vertex_of(g, extremum)?;
    let is_neighbor = g
        .rotation(s)
        .iter()
        .any(|&d| g.dart_target(d) == x && g.vertex_index(x) == pol.extremum());
    if is_neighbor {
        Ok(())
    } else {
        Err(Error::rejected(
            "inapplicable move: named extremum is not a matching neighbor of the saddle",
        ))
    }
}

/// Every move instance applicable to `g`: one face-max and one face-min per
/// face, one edge move per separatrix, one vertex move per extremum and
/// unordered pair of distinct rotation gaps, and all cancellations whose
/// right-hand-side pattern matches.
pub fn enumerate_moves(g: &MsGraph) -> Result<Vec<MoveInstance>> {
    require_valid(g)?;
    let mut out = Vec::new();

    for face in 0..g.faces().len() {
        out.push(MoveInstance::FaceMax { face });
        out.push(MoveInstance::FaceMin { face });
    }

    for e in 0..g.edge_count() {
        let edge = g.edge_label(e).to_string();
        match g.edge_kind(e) {
            Some(crate::complex::EdgeKind::SaddleMax) => out.push(MoveInstance::EdgeMax { edge }),
            Some(crate::complex::EdgeKind::SaddleMin) => out.push(MoveInstance::EdgeMin { edge }),
            None => {}
        }
    }

    for v in g.vertices() {
        let deg = g.degree(v);
        if deg < 2 || g.vertex_index(v) == MorseIndex::Saddle {
            continue;
        }
        let vertex = g.vertex_label(v).to_string();
        for i in 0..deg {
            for j in i + 1..deg {
                let gaps = (i, j);
                if g.vertex_index(v) == MorseIndex::Maximum {
                    out.push(MoveInstance::VertexMax { vertex: vertex.clone(), gaps });
                } else {
                    out.push(MoveInstance::VertexMin { vertex: vertex.clone(), gaps });
                }
            }
        }
    }

    // Cancellations, by pattern. Face: a degree-1 extremum. Edge: a degree-2
    // extremum between two distinct saddles (both orientations). Vertex: a
    // saddle whose two same-polarity neighbors are distinct mergeable extrema.
    for x in g.vertices() {
        let idx = g.vertex_index(x);
        if idx == MorseIndex::Saddle {
            continue;
        }
        let pol = if idx == MorseIndex::Maximum { Polarity::Max } else { Polarity::Min };
        if g.degree(x) == 1 {
            let s = g.dart_target(g.rotation(x)[0]);
            if apply::cancel_face(g, s, x, pol).is_ok() {
                let saddle = g.vertex_label(s).to_string();
                let extremum = g.vertex_label(x).to_string();
                out.push(match pol {
                    Polarity::Max => MoveInstance::CancelFaceMax { saddle, extremum },
                    Polarity::Min => MoveInstance::CancelFaceMin { saddle, extremum },
                });
            }
        } else if g.degree(x) == 2 {
            for &d in g.rotation(x) {
                let t = g.dart_target(d);
                if apply::cancel_edge(g, t, x, pol).is_ok() {
                    let saddle = g.vertex_label(t).to_string();
                    let extremum = g.vertex_label(x).to_string();
                    out.push(match pol {
                        Polarity::Max => MoveInstance::CancelEdgeMax { saddle, extremum },
                        Polarity::Min => MoveInstance::CancelEdgeMin { saddle, extremum },
                    });
                }
            }
        }
    }
    for s in g.vertices() {
        if g.vertex_index(s) != MorseIndex::Saddle {
            continue;
        }
        for pol in [Polarity::Max, Polarity::Min] {
            if apply::cancel_vertex(g, s, pol).is_ok() {
                let mut nbrs: Vec<String> = g
                    .rotation(s)
                    .iter()
                    .filter(|&&d| g.vertex_index(g.dart_target(d)) == pol.extremum())
                    .map(|&d| g.vertex_label(g.dart_target(d)).to_string())
                    .collect();
                nbrs.sort();
                let saddle = g.vertex_label(s).to_string();
                out.push(match pol {
                    Polarity::Max => {
                        MoveInstance::CancelVertexMax { saddle, extremum: nbrs[0].clone() }
                    }
                    Polarity::Min => {
                        MoveInstance::CancelVertexMin { saddle, extremum: nbrs[0].clone() }
                    }
                });
            }
        }
    }
    Ok(out)
}
