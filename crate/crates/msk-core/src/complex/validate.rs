//! Invariant checking for Morse-Smale graphs.

use std::fmt;

use super::{MorseIndex, MsGraph};

/// One violated invariant, with enough context to locate it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EdgeNotSaddleExtremum { edge: String },
    MinMaxEdge { edge: String },
    EdgeKindMismatch { edge: String },
    SaddleDegree { vertex: String, degree: usize },
    SaddleNotAlternating { vertex: String },
    EulerCharacteristic { value: i64 },
    NotConnected,
    BaseSphereShape { detail: String },
    FaceNotQuadrangle { face: usize, corners: Vec<String> },
    FaceEulerCount { vertices: usize, edges: usize, faces: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeNotSaddleExtremum { edge } => {
                write!(f, "edge {edge} does not join a saddle to an extremum")
            }
            Violation::MinMaxEdge { edge } => write!(f, "forbidden min-max edge {edge}"),
            Violation::EdgeKindMismatch { edge } => {
                write!(f, "edge {edge} kind does not match its extremum end")
            }
            Violation::SaddleDegree { vertex, degree } => {
                write!(f, "saddle degree != 4: {vertex} has degree {degree}")
            }
            Violation::SaddleNotAlternating { vertex } => {
                write!(f, "saddle {vertex} rotation does not alternate max/min")
            }
            Violation::EulerCharacteristic { value } => {
                write!(f, "#min - #saddle + #max = {value}, expected 2")
            }
            Violation::NotConnected => write!(f, "graph is not connected"),
            Violation::BaseSphereShape { detail } => {
                write!(f, "edgeless graph is not the base sphere: {detail}")
            }
            Violation::FaceNotQuadrangle { face, corners } => {
                write!(f, "face {face} is not a (0,1,2,1) quadrangle: {}", corners.join(","))
            }
            Violation::FaceEulerCount { vertices, edges, faces } => {
                write!(f, "V - E + F = {} - {} + {} != 2", vertices, edges, faces)
            }
        }
    }
}

/// Outcome of validation. `structural` is filled by the parsing layer for
/// malformed encodings; graphs built in memory are structurally sound and
/// only report invariant violations.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub structural: Vec<String>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn from_structural(errors: Vec<String>) -> ValidationReport {
        ValidationReport { structural: errors, violations: Vec::new() }
    }

    pub fn is_valid(&self) -> bool {
        self.structural.is_empty() && self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        let mut lines = Vec::new();
        for s in &self.structural {
            lines.push(format!("structural: {s}"));
        }
        for v in &self.violations {
            lines.push(format!("invariant: {v}"));
        }
        write!(f, "{}", lines.join("; "))
    }
}

impl MsGraph {
    /// Checks every Morse-Smale invariant and reports all violations.
    /// An empty report means the graph is valid.
    pub fn validate(&self) -> ValidationReport {
        let mut out = ValidationReport::default();

        if self.edge_count() == 0 {
            if !self.is_base_sphere() {
                out.violations.push(Violation::BaseSphereShape {
                    detail: format!(
                        "{} minima, {} saddles, {} maxima, 0 edges",
                        self.count_index(MorseIndex::Minimum),
                        self.count_index(MorseIndex::Saddle),
                        self.count_index(MorseIndex::Maximum)
                    ),
                });
            }
            return out;
        }

        for e in 0..self.edge_count() {
            let [u, w] = self.edge_ends(e);
            let (iu, iw) = (self.vertex_index(u), self.vertex_index(w));
            match (iu, iw) {
                (MorseIndex::Saddle, x) | (x, MorseIndex::Saddle) if x != MorseIndex::Saddle => {
                    let expect = if x == MorseIndex::Minimum {
                        super::EdgeKind::SaddleMin
                    } else {
                        super::EdgeKind::SaddleMax
                    };
                    if self.edge_kind(e) != Some(expect) {
                        out.violations.push(Violation::EdgeKindMismatch {
                            edge: self.edge_label(e).to_string(),
                        });
                    }
                }
                (MorseIndex::Minimum, MorseIndex::Maximum) | (MorseIndex::Maximum, MorseIndex::Minimum) => {
                    out.violations.push(Violation::MinMaxEdge { edge: self.edge_label(e).to_string() })
                }
                _ => out.violations.push(Violation::EdgeNotSaddleExtremum {
                    edge: self.edge_label(e).to_string(),
                }),
            }
        }

        for v in self.vertices() {
            if self.vertex_index(v) != MorseIndex::Saddle {
                continue;
            }
            let deg = self.degree(v);
            if deg != 4 {
                out.violations.push(Violation::SaddleDegree {
                    vertex: self.vertex_label(v).to_string(),
                    degree: deg,
                });
                continue;
            }
            let idx: Vec<MorseIndex> =
                self.rotation(v).iter().map(|&d| self.vertex_index(self.dart_target(d))).collect();
            let alternates = (idx[0] == MorseIndex::Maximum
                && idx[2] == MorseIndex::Maximum
                && idx[1] == MorseIndex::Minimum
                && idx[3] == MorseIndex::Minimum)
                || (idx[0] == MorseIndex::Minimum
                    && idx[2] == MorseIndex::Minimum
                    && idx[1] == MorseIndex::Maximum
                    && idx[3] == MorseIndex::Maximum);
            if !alternates {
                out.violations.push(Violation::SaddleNotAlternating {
                    vertex: self.vertex_label(v).to_string(),
                });
            }
        }

        let chi = self.euler_characteristic();
        if chi != 2 {
            out.violations.push(Violation::EulerCharacteristic { value: chi });
        }

        if !self.is_connected() {
            out.violations.push(Violation::NotConnected);
        }

        // Face checks only make sense once the local structure is sane;
        // otherwise the walk itself is meaningless.
        if out.violations.is_empty() {
            let faces = self.faces();
            for (k, face) in faces.iter().enumerate() {
                if !face.is_quadrangle(self) {
                    out.violations.push(Violation::FaceNotQuadrangle {
                        face: k,
                        corners: face.corners.iter().map(|&v| self.vertex_label(v).to_string()).collect(),
                    });
                }
            }
            let (v, e, f) = (self.vertex_count(), self.edge_count(), faces.len());
            if v as i64 - e as i64 + f as i64 != 2 {
                out.violations.push(Violation::FaceEulerCount { vertices: v, edges: e, faces: f });
            }
        }

        out
    }
}
