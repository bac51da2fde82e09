//! Morse-Smale graphs on the sphere as combinatorial maps.
//!
//! A graph is stored as a rotation system: darts (edge ends) with a cyclic
//! order around every vertex and a pairing of opposite darts into edges.
//! Faces are the orbits of `next-at-vertex ∘ opposite`, so the spherical
//! embedding is part of the data. Parallel edges are first-class: several
//! moves produce doubled saddle-extremum arcs, and edges are identified by
//! their darts, never by endpoint pairs.

mod canonical;
mod validate;

pub use canonical::CanonicalCode;
pub use validate::{ValidationReport, Violation};

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Morse index of a critical point on a surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MorseIndex {
    Minimum = 0,
    Saddle = 1,
    Maximum = 2,
}

impl MorseIndex {
    pub fn from_u8(v: u8) -> Option<MorseIndex> {
        match v {
            0 => Some(MorseIndex::Minimum),
            1 => Some(MorseIndex::Saddle),
            2 => Some(MorseIndex::Maximum),
            _ => None,
        }
    }

    pub fn as_u8(self) -> u8 {
        self as u8
    }

    pub fn is_extremum(self) -> bool {
        self != MorseIndex::Saddle
    }

    /// The extremum of the opposite polarity (saddles map to themselves).
    pub fn dual(self) -> MorseIndex {
        match self {
            MorseIndex::Minimum => MorseIndex::Maximum,
            MorseIndex::Saddle => MorseIndex::Saddle,
            MorseIndex::Maximum => MorseIndex::Minimum,
        }
    }
}

/// Kind of a separatrix edge. Stored explicitly: the paper's figure legend
/// and prose disagree on the solid/dashed drawing convention, so nothing is
/// inferred from rendering. For valid graphs the kind always matches the
/// extremum end's index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    SaddleMin,
    SaddleMax,
}

pub type VertexId = usize;
pub type DartId = usize;
pub type EdgeId = usize;

/// A face of the map: the dart orbit of the standard next-dart rule,
/// together with the corner vertices it visits.
#[derive(Debug, Clone)]
pub struct Face {
    /// Darts in walk order; dart `k` is owned by corner `k`.
    pub darts: Vec<DartId>,
    /// Corner vertices in walk order.
    pub corners: Vec<VertexId>,
}

impl Face {
    /// Corner Morse indices in walk order.
    pub fn corner_indices(&self, g: &MsGraph) -> Vec<MorseIndex> {
        self.corners.iter().map(|&v| g.vertex_index(v)).collect()
    }

    /// True when the walk has length 4 and reads (0,1,2,1) up to rotation.
    pub fn is_quadrangle(&self, g: &MsGraph) -> bool {
        if self.corners.len() != 4 {
            return false;
        }
        let idx: Vec<u8> = self.corners.iter().map(|&v| g.vertex_index(v).as_u8()).collect();
        (0..4).any(|r| (0..4).all(|k| idx[(r + k) % 4] == [0u8, 1, 2, 1][k]))
    }

    /// The unique corner of the requested extremal index, if the face is a
    /// quadrangle.
    pub fn corner_of_index(&self, g: &MsGraph, want: MorseIndex) -> Option<usize> {
        let mut found = None;
        for (k, &v) in self.corners.iter().enumerate() {
            if g.vertex_index(v) == want {
                if found.is_some() {
                    return None;
                }
                found = Some(k);
            }
        }
        found
    }
}

/// A Morse-Smale graph on the sphere, encoded as a combinatorial map.
///
/// Structurally well-formed by construction ([`MsGraph::build`] rejects
/// malformed encodings); semantic invariants are checked by
/// [`MsGraph::validate`]. The saddle-free base sphere (one minimum, one
/// maximum, no edges) is the one permitted edgeless graph.
#[derive(Debug, Clone)]
pub struct MsGraph {
    vertex_labels: Vec<String>,
    vertex_index: Vec<MorseIndex>,
    rotations: Vec<Vec<DartId>>,
    dart_owner: Vec<VertexId>,
    dart_edge: Vec<EdgeId>,
    dart_pos: Vec<usize>,
    dart_labels: Vec<String>,
    edge_darts: Vec<[DartId; 2]>,
    edge_kind: Vec<Option<EdgeKind>>,
    edge_labels: Vec<String>,
    label_to_vertex: HashMap<String, VertexId>,
}

/// Plain description of a graph, as read from a file or written by hand.
#[derive(Debug, Clone, Default)]
pub struct GraphSpec {
    /// (label, index) pairs.
    pub vertices: Vec<(String, MorseIndex)>,
    /// Per vertex, the cyclic rotation as a list of dart labels.
    pub rotations: Vec<Vec<String>>,
    /// (edge label, [dart label, dart label], optional explicit kind).
    pub edges: Vec<(String, [String; 2], Option<EdgeKind>)>,
}

impl MsGraph {
    /// Builds a graph from a plain description, checking only structural
    /// soundness: every dart sits in exactly one rotation and one edge, all
    /// references resolve, labels are unique. Violations of the Morse-Smale
    /// invariants are left for [`validate`](Self::validate).
    pub fn build(spec: GraphSpec) -> Result<MsGraph> {
        let nv = spec.vertices.len();
        if spec.rotations.len() != nv {
            return Err(Error::malformed(format!(
                "{} vertices but {} rotation lists",
                nv,
                spec.rotations.len()
            )));
        }
        let mut label_to_vertex = HashMap::new();
        for (i, (label, _)) in spec.vertices.iter().enumerate() {
            if label_to_vertex.insert(label.clone(), i).is_some() {
                return Err(Error::malformed(format!("duplicate vertex id {label:?}")));
            }
        }

        // Collect darts in rotation order; each dart label must be unique.
        let mut dart_ids: HashMap<String, DartId> = HashMap::new();
        let mut dart_owner = Vec::new();
        let mut dart_pos = Vec::new();
        let mut dart_labels = Vec::new();
        let mut rotations: Vec<Vec<DartId>> = vec![Vec::new(); nv];
        for (v, rot) in spec.rotations.iter().enumerate() {
            for (pos, dl) in rot.iter().enumerate() {
                if dart_ids.contains_key(dl) {
                    return Err(Error::malformed(format!(
                        "dart {dl:?} appears in more than one rotation slot"
                    )));
                }
                let d = dart_labels.len();
                dart_ids.insert(dl.clone(), d);
                dart_labels.push(dl.clone());
                dart_owner.push(v);
                dart_pos.push(pos);
                rotations[v].push(d);
            }
        }

        let mut dart_edge = vec![usize::MAX; dart_labels.len()];
        let mut edge_darts = Vec::new();
        let mut edge_kind = Vec::new();
        let mut edge_labels = Vec::new();
        let mut seen_edge = HashMap::new();
        for (el, ends, kind) in &spec.edges {
            if seen_edge.insert(el.clone(), ()).is_some() {
                return Err(Error::malformed(format!("duplicate edge id {el:?}")));
            }
            let d0 = *dart_ids
                .get(&ends[0])
                .ok_or_else(|| Error::malformed(format!("edge {el:?} references unknown dart {:?}", ends[0])))?;
            let d1 = *dart_ids
                .get(&ends[1])
                .ok_or_else(|| Error::malformed(format!("edge {el:?} references unknown dart {:?}", ends[1])))?;
            if d0 == d1 {
                return Err(Error::malformed(format!("edge {el:?} uses the same dart twice")));
            }
            for d in [d0, d1] {
                if dart_edge[d] != usize::MAX {
                    return Err(Error::malformed(format!(
                        "dart {:?} belongs to more than one edge",
                        dart_labels[d]
                    )));
                }
                dart_edge[d] = edge_darts.len();
            }
            edge_darts.push([d0, d1]);
            edge_labels.push(el.clone());
            // Kind: explicit wins; otherwise derived from the endpoints when
            // exactly one end is a saddle.
            let derived = {
                let iu = spec.vertices[dart_owner[d0]].1;
                let iw = spec.vertices[dart_owner[d1]].1;
                match (iu, iw) {
                    (MorseIndex::Saddle, MorseIndex::Minimum) | (MorseIndex::Minimum, MorseIndex::Saddle) => {
                        Some(EdgeKind::SaddleMin)
                    }
                    (MorseIndex::Saddle, MorseIndex::Maximum) | (MorseIndex::Maximum, MorseIndex::Saddle) => {
                        Some(EdgeKind::SaddleMax)
                    }
                    _ => None,
                }
            };
            edge_kind.push(kind.or(derived));
        }
        if let Some(d) = dart_edge.iter().position(|&e| e == usize::MAX) {
            return Err(Error::malformed(format!(
                "dart {:?} is not part of any edge",
                dart_labels[d]
            )));
        }

        let (vertex_labels, vertex_index) = spec.vertices.into_iter().unzip();
        Ok(MsGraph {
            vertex_labels,
            vertex_index,
            rotations,
            dart_owner,
            dart_edge,
            dart_pos,
            dart_labels,
            edge_darts,
            edge_kind,
            edge_labels,
            label_to_vertex,
        })
    }

    /// The base sphere: one minimum, one maximum, no edges.
    pub fn base_sphere() -> MsGraph {
        MsGraph::build(GraphSpec {
            vertices: vec![
                ("min0".into(), MorseIndex::Minimum),
                ("max0".into(), MorseIndex::Maximum),
            ],
            rotations: vec![vec![], vec![]],
            edges: vec![],
        })
        .expect("base sphere is structurally sound")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_darts.len()
    }

    pub fn dart_count(&self) -> usize {
        self.dart_owner.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.vertex_count()
    }

    pub fn vertex_index(&self, v: VertexId) -> MorseIndex {
        self.vertex_index[v]
    }

    pub fn vertex_label(&self, v: VertexId) -> &str {
        &self.vertex_labels[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.label_to_vertex.get(label).copied()
    }

    pub fn edge_by_label(&self, label: &str) -> Option<EdgeId> {
        self.edge_labels.iter().position(|l| l == label)
    }

    pub fn edge_label(&self, e: EdgeId) -> &str {
        &self.edge_labels[e]
    }

    pub fn dart_label(&self, d: DartId) -> &str {
        &self.dart_labels[d]
    }

    pub fn rotation(&self, v: VertexId) -> &[DartId] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v].len()
    }

    pub fn dart_owner(&self, d: DartId) -> VertexId {
        self.dart_owner[d]
    }

    pub fn dart_edge(&self, d: DartId) -> EdgeId {
        self.dart_edge[d]
    }

    pub fn edge_kind(&self, e: EdgeId) -> Option<EdgeKind> {
        self.edge_kind[e]
    }

    pub fn edge_darts(&self, e: EdgeId) -> [DartId; 2] {
        self.edge_darts[e]
    }

    /// Endpoints of an edge (owner vertices of its two darts).
    pub fn edge_ends(&self, e: EdgeId) -> [VertexId; 2] {
        let [a, b] = self.edge_darts[e];
        [self.dart_owner[a], self.dart_owner[b]]
    }

    /// The other dart of `d`'s edge.
    pub fn opposite(&self, d: DartId) -> DartId {
        let [a, b] = self.edge_darts[self.dart_edge[d]];
        if a == d {
            b
        } else {
            a
        }
    }

    /// Target vertex of a dart (owner of its opposite).
    pub fn dart_target(&self, d: DartId) -> VertexId {
        self.dart_owner[self.opposite(d)]
    }

    /// Next dart counterclockwise around the owner vertex.
    pub fn rot_next(&self, d: DartId) -> DartId {
        let rot = &self.rotations[self.dart_owner[d]];
        rot[(self.dart_pos[d] + 1) % rot.len()]
    }

    /// Previous dart in the rotation.
    pub fn rot_prev(&self, d: DartId) -> DartId {
        let rot = &self.rotations[self.dart_owner[d]];
        rot[(self.dart_pos[d] + rot.len() - 1) % rot.len()]
    }

    /// Next dart along the face walk: rotation successor of the opposite.
    pub fn face_next(&self, d: DartId) -> DartId {
        self.rot_next(self.opposite(d))
    }

    pub fn is_base_sphere(&self) -> bool {
        self.edge_darts.is_empty()
            && self.vertex_count() == 2
            && self.count_index(MorseIndex::Minimum) == 1
            && self.count_index(MorseIndex::Maximum) == 1
    }

    pub fn count_index(&self, idx: MorseIndex) -> usize {
        self.vertex_index.iter().filter(|&&i| i == idx).count()
    }

    /// `#minima - #saddles + #maxima`.
    pub fn euler_characteristic(&self) -> i64 {
        self.count_index(MorseIndex::Minimum) as i64 - self.count_index(MorseIndex::Saddle) as i64
            + self.count_index(MorseIndex::Maximum) as i64
    }

    /// Faces of the map: orbits of the next-dart rule, in first-dart order.
    /// The base sphere yields its single degenerate face.
    pub fn faces(&self) -> Vec<Face> {
        if self.dart_count() == 0 {
            return vec![Face { darts: vec![], corners: vec![] }];
        }
        let mut seen = vec![false; self.dart_count()];
        let mut faces = Vec::new();
        for d0 in 0..self.dart_count() {
            if seen[d0] {
                continue;
            }
            let mut darts = Vec::new();
            let mut corners = Vec::new();
            let mut d = d0;
            loop {
                seen[d] = true;
                darts.push(d);
                corners.push(self.dart_owner[d]);
                d = self.face_next(d);
                if d == d0 {
                    break;
                }
            }
            faces.push(Face { darts, corners });
        }
        faces
    }

    /// True when the map is connected as required: all vertices mutually
    /// reachable through edges. The base sphere passes by convention.
    pub fn is_connected(&self) -> bool {
        if self.is_base_sphere() {
            return true;
        }
        if self.vertex_count() == 0 {
            return false;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &d in &self.rotations[v] {
                let w = self.dart_target(d);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Relabel vertices/darts/edges; structure is untouched. Labels absent
    /// from the maps keep their old names.
    pub fn relabeled(
        &self,
        vmap: &HashMap<String, String>,
        dmap: &HashMap<String, String>,
        emap: &HashMap<String, String>,
    ) -> MsGraph {
        let mut g = self.clone();
        let ren = |s: &mut String, m: &HashMap<String, String>| {
            if let Some(n) = m.get(s) {
                *s = n.clone();
            }
        };
        for l in &mut g.vertex_labels {
            ren(l, vmap);
        }
        for l in &mut g.dart_labels {
            ren(l, dmap);
        }
        for l in &mut g.edge_labels {
            ren(l, emap);
        }
        g.label_to_vertex = g
            .vertex_labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        g
    }

    /// Plain description of this graph (inverse of [`MsGraph::build`]).
    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec {
            vertices: self
                .vertex_labels
                .iter()
                .cloned()
                .zip(self.vertex_index.iter().copied())
                .collect(),
            rotations: self
                .rotations
                .iter()
                .map(|rot| rot.iter().map(|&d| self.dart_labels[d].clone()).collect())
                .collect(),
            edges: self
                .edge_darts
                .iter()
                .enumerate()
                .map(|(e, &[a, b])| {
                    (
                        self.edge_labels[e].clone(),
                        [self.dart_labels[a].clone(), self.dart_labels[b].clone()],
                        self.edge_kind[e],
                    )
                })
                .collect(),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// Canonical code under orientation-preserving map isomorphism.
    /// Rejects invalid graphs.
    pub fn canonical_code(&self) -> Result<CanonicalCode> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(Error::rejected(format!(
                "canonical code requires a valid graph: {report}"
            )));
        }
        Ok(canonical::code(self, false))
    }

    /// Canonical code of the mirrored map (reversed rotations).
    pub fn canonical_code_mirrored(&self) -> Result<CanonicalCode> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(Error::rejected(format!(
                "canonical code requires a valid graph: {report}"
            )));
        }
        Ok(canonical::code(self, true))
    }
}

/// Orientation handling for map isomorphism tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Orientation-preserving isomorphism only (default).
    Preserving,
    /// Also accept a match against the mirrored rotation system.
    AllowMirror,
}

/// Map isomorphism via canonical code equality.
pub fn is_isomorphic(g: &MsGraph, h: &MsGraph, orientation: Orientation) -> Result<bool> {
    let cg = g.canonical_code()?;
    let ch = h.canonical_code()?;
    if cg == ch {
        return Ok(true);
    }
    match orientation {
        Orientation::Preserving => Ok(false),
        Orientation::AllowMirror => Ok(h.canonical_code_mirrored()? == cg),
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use super::*;
    use crate::io;

    pub(crate) fn fig2() -> MsGraph {
        let text = include_str!("../../../../fixtures/fig2.graph.json");
        io::parse_graph(text).expect("fixture parses").0
    }

    pub(crate) fn fig3_left() -> MsGraph {
        let text = include_str!("../../../../fixtures/fig3_left.graph.json");
        io::parse_graph(text).expect("fixture parses").0
    }

    #[test]
    fn fig2_is_valid_with_six_quadrangles() {
        let g = fig2();
        let report = g.validate();
        assert!(report.is_valid(), "{report}");
        assert_eq!(g.euler_characteristic(), 2);
        let faces = g.faces();
        assert_eq!(faces.len(), 6);
        assert!(faces.iter().all(|f| f.is_quadrangle(&g)));
        // Independent count: F = E - V + 2 on the sphere.
        assert_eq!(faces.len(), g.edge_count() - g.vertex_count() + 2);
    }

    #[test]
    fn base_sphere_is_the_valid_edgeless_graph() {
        let g = MsGraph::base_sphere();
        assert!(g.validate().is_valid());
        assert!(g.is_base_sphere());
        assert_eq!(g.euler_characteristic(), 2);
        assert_eq!(g.faces().len(), 1);
        assert!(g.faces()[0].darts.is_empty());
    }

    #[test]
    fn two_max_counts_give_euler_two() {
        // Two maxima, one saddle, one minimum.
        let g = crate::moves::apply_move(
            &MsGraph::base_sphere(),
            &crate::moves::MoveInstance::FaceMax { face: 0 },
        )
        .unwrap();
        assert_eq!(g.euler_characteristic(), 2);
        assert_eq!(g.count_index(MorseIndex::Maximum), 2);
        assert_eq!(g.count_index(MorseIndex::Saddle), 1);
        assert_eq!(g.count_index(MorseIndex::Minimum), 1);
    }

    #[test]
    fn degree_three_saddle_is_reported() {
        let spec = GraphSpec {
            vertices: vec![
                ("m".into(), MorseIndex::Minimum),
                ("s".into(), MorseIndex::Saddle),
                ("x".into(), MorseIndex::Maximum),
            ],
            rotations: vec![
                vec!["m1".into()],
                vec!["s1".into(), "s2".into(), "s3".into()],
                vec!["x1".into(), "x2".into()],
            ],
            edges: vec![
                ("e1".into(), ["m1".into(), "s1".into()], None),
                ("e2".into(), ["s2".into(), "x1".into()], None),
                ("e3".into(), ["s3".into(), "x2".into()], None),
            ],
        };
        let g = MsGraph::build(spec).unwrap();
        let report = g.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::SaddleDegree { degree: 3, .. })));
    }

    #[test]
    fn malformed_encodings_are_structural_errors() {
        // Dangling dart: rotation references a dart that no edge covers.
        let spec = GraphSpec {
            vertices: vec![("m".into(), MorseIndex::Minimum)],
            rotations: vec![vec!["d".into()]],
            edges: vec![],
        };
        assert!(matches!(MsGraph::build(spec), Err(crate::error::Error::Malformed(_))));
    }

    #[test]
    fn canonical_code_is_relabeling_invariant() {
        let g = fig2();
        let vmap: HashMap<String, String> =
            g.vertices().map(|v| (g.vertex_label(v).to_string(), format!("w{v}"))).collect();
        let h = g.relabeled(&vmap, &HashMap::new(), &HashMap::new());
        assert_eq!(g.canonical_code().unwrap(), h.canonical_code().unwrap());
        assert!(is_isomorphic(&g, &h, Orientation::Preserving).unwrap());
    }

    #[test]
    fn fig3_pair_is_not_map_isomorphic() {
        let left = fig3_left();
        let right = fig2();
        assert!(left.validate().is_valid());
        assert_ne!(left.canonical_code().unwrap(), right.canonical_code().unwrap());
        assert!(!is_isomorphic(&left, &right, Orientation::Preserving).unwrap());
        // Exhaustive dart-rooted oracle: no root pairing matches.
        assert!(!brute_force_isomorphic(&left, &right));
        assert!(brute_force_isomorphic(&left, &left));
    }

    #[test]
    fn base_spheres_are_isomorphic_and_unlike_fig2() {
        let b1 = MsGraph::base_sphere();
        let b2 = MsGraph::base_sphere();
        assert!(is_isomorphic(&b1, &b2, Orientation::Preserving).unwrap());
        assert!(!is_isomorphic(&b1, &fig2(), Orientation::Preserving).unwrap());
    }

    #[test]
    fn faces_do_not_depend_on_dart_enumeration_order() {
        let g = fig2();
        let mut spec = g.to_spec();
        // Rotate every rotation list: same cyclic orders, new enumeration.
        for rot in spec.rotations.iter_mut() {
            if rot.len() > 1 {
                rot.rotate_left(1);
            }
        }
        let h = MsGraph::build(spec).unwrap();
        assert_eq!(g.faces().len(), h.faces().len());
        assert_eq!(g.canonical_code().unwrap(), h.canonical_code().unwrap());
    }

    /// Exhaustive dart-rooted traversal oracle for map isomorphism,
    /// independent of the canonical-code path.
    pub(crate) fn brute_force_isomorphic(g: &MsGraph, h: &MsGraph) -> bool {
        if g.dart_count() != h.dart_count() {
            return false;
        }
        if g.dart_count() == 0 {
            return g.vertex_count() == h.vertex_count();
        }
        'roots: for root in 0..h.dart_count() {
            let mut map: HashMap<usize, usize> = HashMap::new();
            let mut stack = vec![(0usize, root)];
            while let Some((dg, dh)) = stack.pop() {
                if let Some(&prev) = map.get(&dg) {
                    if prev != dh {
                        continue 'roots;
                    }
                    continue;
                }
                if g.vertex_index(g.dart_owner(dg)) != h.vertex_index(h.dart_owner(dh)) {
                    continue 'roots;
                }
                map.insert(dg, dh);
                stack.push((g.rot_next(dg), h.rot_next(dh)));
                stack.push((g.opposite(dg), h.opposite(dh)));
            }
            if map.len() == g.dart_count() {
                let mut images: Vec<usize> = map.values().copied().collect();
                images.sort_unstable();
                images.dedup();
                if images.len() == g.dart_count() {
                    return true;
                }
            }
        }
        false
    }
}
