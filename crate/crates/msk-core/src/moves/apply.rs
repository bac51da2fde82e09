//! Rotation-system surgery for the fundamental moves.
//!
//! Each move is a local rewrite of the map. The editor keeps tombstoned
//! vertex/dart/edge tables so surgery can reference stale ids mid-rewrite,
//! then compacts into a fresh `MsGraph`.


use crate::complex::{GraphSpec, MorseIndex, MsGraph};
use crate::error::{Error, Result};

pub(crate) struct Editor {
    vlabel: Vec<String>,
    vindex: Vec<MorseIndex>,
    valive: Vec<bool>,
    rot: Vec<Vec<usize>>,
    downer: Vec<usize>,
    dedge: Vec<usize>,
    dlabel: Vec<String>,
    dalive: Vec<bool>,
    eends: Vec<[usize; 2]>,
    elabel: Vec<String>,
    ealive: Vec<bool>,
}

impl Editor {
    pub fn from_graph(g: &MsGraph) -> Editor {
        Editor {
            vlabel: (0..g.vertex_count()).map(|v| g.vertex_label(v).to_string()).collect(),
            vindex: (0..g.vertex_count()).map(|v| g.vertex_index(v)).collect(),
            valive: vec![true; g.vertex_count()],
            rot: (0..g.vertex_count()).map(|v| g.rotation(v).to_vec()).collect(),
            downer: (0..g.dart_count()).map(|d| g.dart_owner(d)).collect(),
            dedge: (0..g.dart_count()).map(|d| g.dart_edge(d)).collect(),
            dlabel: (0..g.dart_count()).map(|d| g.dart_label(d).to_string()).collect(),
            dalive: vec![true; g.dart_count()],
            eends: (0..g.edge_count()).map(|e| g.edge_darts(e)).collect(),
            elabel: (0..g.edge_count()).map(|e| g.edge_label(e).to_string()).collect(),
            ealive: vec![true; g.edge_count()],
        }
    }

    fn fresh(&self, prefix: &str, taken: &[String]) -> String {
        let mut n = 0;
        loop {
            let cand = format!("{prefix}{n}");
            if !taken.contains(&cand) {
                return cand;
            }
            n += 1;
        }
    }

    pub fn new_vertex(&mut self, index: MorseIndex, prefix: &str) -> usize {
        let label = self.fresh(prefix, &self.vlabel);
        self.vlabel.push(label);
        self.vindex.push(index);
        self.valive.push(true);
        self.rot.push(Vec::new());
        self.vlabel.len() - 1
    }

    /// New edge between `u` and `w`; its darts are created but not yet
    /// placed into any rotation.
    pub fn new_edge(&mut self, u: usize, w: usize) -> (usize, usize) {
        let e = self.eends.len();
        let elabel = self.fresh("e", &self.elabel);
        let du = self.dlabel.len();
        let dw = du + 1;
        for owner in [u, w] {
            let label = self.fresh("d", &self.dlabel);
            self.dlabel.push(label);
            self.downer.push(owner);
            self.dedge.push(e);
            self.dalive.push(true);
        }
        self.eends.push([du, dw]);
        self.elabel.push(elabel);
        self.ealive.push(true);
        (du, dw)
    }

    fn pos_in_rotation(&self, d: usize) -> (usize, usize) {
        let v = self.downer[d];
        let pos = self.rot[v].iter().position(|&x| x == d).expect("dart placed in rotation");
        (v, pos)
    }

    /// Insert `new` immediately after `anchor` in the anchor owner's rotation.
    pub fn place_after(&mut self, anchor: usize, new: usize) {
        let (v, pos) = self.pos_in_rotation(anchor);
        debug_assert_eq!(self.downer[new], v);
        self.rot[v].insert(pos + 1, new);
    }

    /// Insert `new` immediately before `anchor` in the anchor owner's rotation.
    pub fn place_before(&mut self, anchor: usize, new: usize) {
        let (v, pos) = self.pos_in_rotation(anchor);
        debug_assert_eq!(self.downer[new], v);
        self.rot[v].insert(pos, new);
    }

    /// Replace `old` by `new` at the same rotation slot and retire `old`.
    pub fn swap_in_rotation(&mut self, old: usize, new: usize) {
        let (v, pos) = self.pos_in_rotation(old);
        debug_assert_eq!(self.downer[new], v);
        self.rot[v][pos] = new;
        self.dalive[old] = false;
    }

    /// Mark an edge dead after its darts were already swapped out of their
    /// rotations.
    pub fn retire_edge(&mut self, e: usize) {
        for d in self.eends[e] {
            self.dalive[d] = false;
        }
        self.ealive[e] = false;
    }

    pub fn set_rotation(&mut self, v: usize, darts: Vec<usize>) {
        self.rot[v] = darts;
    }

    pub fn remove_edge(&mut self, e: usize) {
        for d in self.eends[e] {
            if self.dalive[d] {
                let (v, pos) = self.pos_in_rotation(d);
                self.rot[v].remove(pos);
                self.dalive[d] = false;
            }
        }
        self.ealive[e] = false;
    }

    pub fn remove_vertex(&mut self, v: usize) {
        debug_assert!(self.rot[v].is_empty(), "vertex must be isolated before removal");
        self.valive[v] = false;
    }

    pub fn freeze(self) -> MsGraph {
        let mut spec = GraphSpec::default();
        let mut vkeep = Vec::new();
        for v in 0..self.vlabel.len() {
            if self.valive[v] {
                vkeep.push(v);
                spec.vertices.push((self.vlabel[v].clone(), self.vindex[v]));
                spec.rotations
                    .push(self.rot[v].iter().map(|&d| self.dlabel[d].clone()).collect());
            }
        }
        for e in 0..self.eends.len() {
            if self.ealive[e] {
                let [a, b] = self.eends[e];
                spec.edges.push((
                    self.elabel[e].clone(),
                    [self.dlabel[a].clone(), self.dlabel[b].clone()],
                    None,
                ));
            }
        }
        MsGraph::build(spec).expect("surgery preserves structural soundness")
    }
}

/// Polarity of a move: which extremum type is added or removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Polarity {
    Max,
    Min,
}

impl Polarity {
    pub fn extremum(self) -> MorseIndex {
        match self {
            Polarity::Max => MorseIndex::Maximum,
            Polarity::Min => MorseIndex::Minimum,
        }
    }

    pub fn vertex_prefix(self) -> &'static str {
        match self {
            Polarity::Max => "M",
            Polarity::Min => "m",
        }
    }
}

fn reject(pattern: &str) -> Error {
    Error::rejected(format!("inapplicable move: {pattern}"))
}

/// Face move: add a saddle and an extremum of the given polarity inside a
/// quadrangle. The new saddle gets two parallel arcs to the opposite-polarity
/// corner, one arc to the same-polarity corner, and one arc to the new
/// extremum.
pub(crate) fn face_move(g: &MsGraph, face_idx: usize, pol: Polarity) -> Result<MsGraph> {
    let faces = g.faces();
    let face = faces.get(face_idx).ok_or_else(|| reject("face index out of range"))?;

    if g.is_base_sphere() {
        return Ok(face_move_on_base(g, pol));
    }
    if !face.is_quadrangle(g) {
        return Err(reject("face is not a quadrangle"));
    }
    let anchor_pos = face
        .corner_of_index(g, pol.extremum())
        .ok_or_else(|| reject("face has no unique corner of the move's polarity"))?;
    // Orbit rotated so position 0 is the same-polarity anchor corner and
    // position 2 the opposite extremum that receives the doubled arcs.
    let d = |k: usize| face.darts[(anchor_pos + k) % 4];
    let anchor = g.dart_owner(d(0));
    let dbl = g.dart_owner(d(2));

    let mut ed = Editor::from_graph(g);
    let saddle = ed.new_vertex(MorseIndex::Saddle, "s");
    let x = ed.new_vertex(pol.extremum(), pol.vertex_prefix());

    let (e_dbl1, dbl1) = ed.new_edge(saddle, dbl);
    let (e_anchor, anchor_d) = ed.new_edge(saddle, anchor);
    let (e_dbl2, dbl2) = ed.new_edge(saddle, dbl);
    let (e_x, x_d) = ed.new_edge(saddle, x);

    // Anchor corner: insert after the dart opposite the incoming walk dart.
    ed.place_after(g.opposite(d(3)), anchor_d);
    // Doubled corner: both arcs, in order, after the opposite of d(1).
    ed.place_after(g.opposite(d(1)), dbl1);
    ed.place_after(dbl1, dbl2);
    ed.set_rotation(saddle, vec![e_dbl1, e_anchor, e_dbl2, e_x]);
    ed.set_rotation(x, vec![x_d]);
    Ok(ed.freeze())
}

fn face_move_on_base(g: &MsGraph, pol: Polarity) -> MsGraph {
    let anchor = g
        .vertices()
        .find(|&v| g.vertex_index(v) == pol.extremum())
        .expect("base sphere has both extrema");
    let dbl = g
        .vertices()
        .find(|&v| g.vertex_index(v) == pol.extremum().dual())
        .expect("base sphere has both extrema");
    let mut ed = Editor::from_graph(g);
    let saddle = ed.new_vertex(MorseIndex::Saddle, "s");
    let x = ed.new_vertex(pol.extremum(), pol.vertex_prefix());
    let (e_dbl1, dbl1) = ed.new_edge(saddle, dbl);
    let (e_anchor, anchor_d) = ed.new_edge(saddle, anchor);
    let (e_dbl2, dbl2) = ed.new_edge(saddle, dbl);
    let (e_x, x_d) = ed.new_edge(saddle, x);
    ed.set_rotation(dbl, vec![dbl1, dbl2]);
    ed.set_rotation(anchor, vec![anchor_d]);
    ed.set_rotation(saddle, vec![e_dbl1, e_anchor, e_dbl2, e_x]);
    ed.set_rotation(x, vec![x_d]);
    ed.freeze()
}

/// Edge move: subdivide a saddle-extremum separatrix by a new saddle-extremum
/// pair. On edge (s, E): delete it, add saddle t and extremum x with edges
/// s-x, t-x, t-E, and t to the two flanking opposite-polarity corners.
pub(crate) fn edge_move(g: &MsGraph, edge: usize, pol: Polarity) -> Result<MsGraph> {
    if edge >= g.edge_count() {
        return Err(reject("edge id out of range"));
    }
    let [da, db] = g.edge_darts(edge);
    let (ds_old, de_old) = if g.vertex_index(g.dart_owner(da)) == MorseIndex::Saddle {
        (da, db)
    } else {
        (db, da)
    };
    let s = g.dart_owner(ds_old);
    let ext = g.dart_owner(de_old);
    if g.vertex_index(s) != MorseIndex::Saddle || g.vertex_index(ext) != pol.extremum() {
        return Err(reject(match pol {
            Polarity::Max => "edge-max requires a saddle-max edge",
            Polarity::Min => "edge-min requires a saddle-min edge",
        }));
    }

    // Flanking data read off the rotations before surgery.
    let m1_dart = g.rot_prev(ds_old); // s -> m1
    let m2_dart = g.rot_next(ds_old); // s -> m2
    let m1 = g.dart_target(m1_dart);
    let m2 = g.dart_target(m2_dart);
    let m1_in = g.opposite(m1_dart); // m1 -> s
    let m2_in = g.opposite(m2_dart); // m2 -> s

    let mut ed = Editor::from_graph(g);
    let t = ed.new_vertex(MorseIndex::Saddle, "s");
    let x = ed.new_vertex(pol.extremum(), pol.vertex_prefix());

    let (s_x, x_s) = ed.new_edge(s, x);
    let (t_m1, m1_t) = ed.new_edge(t, m1);
    let (t_e, e_t) = ed.new_edge(t, ext);
    let (t_m2, m2_t) = ed.new_edge(t, m2);
    let (t_x, x_t) = ed.new_edge(t, x);

    // s keeps its slot: the old dart to `ext` becomes the dart to x.
    ed.swap_in_rotation(ds_old, s_x);
    // `ext` keeps its slot: old dart to s becomes the dart to t.
    ed.swap_in_rotation(de_old, e_t);
    ed.retire_edge(edge);

    // Flanking corners: t-dart just before m1 -> s, just after m2 -> s.
    ed.place_before(m1_in, m1_t);
    ed.place_after(m2_in, m2_t);

    ed.set_rotation(t, vec![t_m1, t_e, t_m2, t_x]);
    ed.set_rotation(x, vec![x_s, x_t]);
    Ok(ed.freeze())
}

/// The minimum corner of the quadrangle at gap `i` of vertex `v` (the corner
/// between rotation positions i and i+1), returned as the dart from that
/// extremum into the face.
fn gap_face_extremum_dart(g: &MsGraph, v: usize, i: usize) -> usize {
    // The gap face contains the walk ... -> (s_i -> v) -> (v -> s_{i+1}) ->
    // (s_{i+1} -> m) -> (m -> s_i) -> ...; two face-steps from the gap's
    // second dart reach the dart owned by the opposite extremum.
    let rot = g.rotation(v);
    let d_next = rot[(i + 1) % rot.len()];
    let into_corner = g.face_next(d_next); // s_{i+1} -> m
    g.face_next(into_corner) // m -> s_i
}

/// Vertex move: split an extremum at two distinct rotation gaps, adding one
/// saddle. The saddle connects the two halves and the extrema of the two gap
/// quadrangles.
pub(crate) fn vertex_move(g: &MsGraph, v: usize, gaps: (usize, usize), pol: Polarity) -> Result<MsGraph> {
    if g.vertex_index(v) != pol.extremum() {
        return Err(reject("vertex move polarity does not match the vertex index"));
    }
    let k = g.degree(v);
    if k < 2 {
        return Err(reject("vertex move needs degree >= 2"));
    }
    let (g1, g2) = gaps;
    if g1 == g2 || g1 >= k || g2 >= k {
        return Err(reject("vertex move gaps must be two distinct rotation gaps"));
    }
    let (g1, g2) = (g1.min(g2), g1.max(g2));

    let rot: Vec<usize> = g.rotation(v).to_vec();
    let m1_dart_in = gap_face_extremum_dart(g, v, g1); // m(g1) -> s_{g1}
    let m2_dart_in = gap_face_extremum_dart(g, v, g2);
    let m1 = g.dart_owner(m1_dart_in);
    let m2 = g.dart_owner(m2_dart_in);

    let mut ed = Editor::from_graph(g);
    let saddle = ed.new_vertex(MorseIndex::Saddle, "s");
    let v1 = ed.new_vertex(pol.extremum(), pol.vertex_prefix());
    let v2 = ed.new_vertex(pol.extremum(), pol.vertex_prefix());

    let (s_v1, v1_s) = ed.new_edge(saddle, v1);
    let (s_v2, v2_s) = ed.new_edge(saddle, v2);
    let (s_m1, m1_s) = ed.new_edge(saddle, m1);
    let (s_m2, m2_s) = ed.new_edge(saddle, m2);

    // Arc g1 -> g2 (positions g1+1 ..= g2) goes to v1, the rest to v2.
    let mut rot1 = vec![v1_s];
    for &d in &rot[g1 + 1..=g2] {
        ed.downer[d] = v1;
        rot1.push(d);
    }
    let mut rot2 = vec![v2_s];
    for &d in rot[g2 + 1..].iter().chain(rot[..=g1].iter()) {
        ed.downer[d] = v2;
        rot2.push(d);
    }
    ed.set_rotation(v1, rot1);
    ed.set_rotation(v2, rot2);
    ed.set_rotation(v, Vec::new());
    ed.remove_vertex(v);

    // Derived orientation: (v1, m(g2), v2, m(g1)) as the saddle's cycle.
    ed.set_rotation(saddle, vec![s_v1, s_m2, s_v2, s_m1]);
    // Gap-face extrema: the new dart goes right after m -> s_{gap+1}, which
    // is the rotation successor slot before m -> s_gap.
    ed.place_before(m1_dart_in, m1_s);
    ed.place_before(m2_dart_in, m2_s);
    Ok(ed.freeze())
}

/// Exact inverse of a face move: remove a degree-1 extremum `x` and its
/// saddle `e`, which must carry doubled arcs to a single opposite extremum
/// bounding the bigon face around `x`.
pub(crate) fn cancel_face(g: &MsGraph, saddle: usize, x: usize, pol: Polarity) -> Result<MsGraph> {
    if g.vertex_index(x) != pol.extremum() || g.vertex_index(saddle) != MorseIndex::Saddle {
        return Err(reject("cancel-face vertices have the wrong indices"));
    }
    if g.degree(x) != 1 {
        return Err(reject("cancel-face extremum must have degree 1"));
    }
    let x_dart = g.rotation(x)[0];
    if g.dart_target(x_dart) != saddle {
        return Err(reject("extremum is not attached to the named saddle"));
    }
    let e_x = g.opposite(x_dart);
    let rot = g.rotation(saddle);
    if rot.len() != 4 {
        return Err(reject("saddle degree != 4"));
    }
    let p = rot.iter().position(|&d| d == e_x).expect("dart in rotation");
    let anchor_dart = rot[(p + 2) % 4];
    let dbl_a = rot[(p + 1) % 4];
    let dbl_b = rot[(p + 3) % 4];
    if g.dart_target(anchor_dart) == x || g.vertex_index(g.dart_target(anchor_dart)) != pol.extremum() {
        return Err(reject("saddle has no opposite anchor of matching polarity"));
    }
    let d_vertex = g.dart_target(dbl_a);
    if g.dart_target(dbl_b) != d_vertex || g.vertex_index(d_vertex) != pol.extremum().dual() {
        return Err(reject("saddle arcs are not doubled to one opposite extremum"));
    }
    // Bigon check: the face around x must be exactly (x, e, d, e).
    let mut orbit = vec![x_dart];
    let mut d = g.face_next(x_dart);
    while d != x_dart && orbit.len() <= 4 {
        orbit.push(d);
        d = g.face_next(d);
    }
    let owners: Vec<usize> = orbit.iter().map(|&d| g.dart_owner(d)).collect();
    if owners != vec![x, saddle, d_vertex, saddle] {
        return Err(reject("no bigon face between the doubled arcs"));
    }

    let mut ed = Editor::from_graph(g);
    for &d in rot {
        ed.remove_edge(g.dart_edge(d));
    }
    ed.set_rotation(saddle, Vec::new());
    ed.set_rotation(x, Vec::new());
    ed.remove_vertex(saddle);
    ed.remove_vertex(x);
    Ok(ed.freeze())
}

/// Exact inverse of an edge move: remove saddle `t` and the degree-2
/// extremum `x`, restoring the separatrix between `x`'s other saddle and
/// `t`'s extremum neighbor.
pub(crate) fn cancel_edge(g: &MsGraph, t: usize, x: usize, pol: Polarity) -> Result<MsGraph> {
    if g.vertex_index(x) != pol.extremum() || g.vertex_index(t) != MorseIndex::Saddle {
        return Err(reject("cancel-edge vertices have the wrong indices"));
    }
    if g.degree(x) != 2 {
        return Err(reject("cancel-edge extremum must have degree 2"));
    }
    let (x_to_t, x_to_s) = {
        let r = g.rotation(x);
        if g.dart_target(r[0]) == t {
            (r[0], r[1])
        } else {
            (r[1], r[0])
        }
    };
    if g.dart_target(x_to_t) != t {
        return Err(reject("extremum is not attached to the named saddle"));
    }
    let s = g.dart_target(x_to_s);
    if s == t || g.vertex_index(s) != MorseIndex::Saddle {
        return Err(reject("extremum's second neighbor is not a distinct saddle"));
    }
    if g.degree(t) != 4 || g.degree(s) != 4 {
        return Err(reject("saddle degree != 4"));
    }

    // t's rotation reads (x, m1, E, m2) going forward from its x-dart.
    let t_x = g.opposite(x_to_t);
    let t_m1 = g.rot_next(t_x);
    let t_e = g.rot_next(t_m1);
    let t_m2 = g.rot_next(t_e);
    let m1 = g.dart_target(t_m1);
    let m2 = g.dart_target(t_m2);
    let ext = g.dart_target(t_e);
    if g.vertex_index(ext) != pol.extremum() {
        return Err(reject("saddle's opposite neighbor has the wrong polarity"));
    }
    // s must see m1 just before and m2 just after its x-dart.
    let s_x = g.opposite(x_to_s);
    if g.dart_target(g.rot_prev(s_x)) != m1 || g.dart_target(g.rot_next(s_x)) != m2 {
        return Err(reject("flanking extrema do not match around the kept saddle"));
    }
    // Quadrangle faces (x, t, m_i, s): equivalent to the rotation slots of
    // the m_i darts being adjacent between t and s.
    let m1_t = g.opposite(t_m1);
    let m2_t = g.opposite(t_m2);
    let m1_s = g.opposite(g.rot_prev(s_x));
    let m2_s = g.opposite(g.rot_next(s_x));
    if g.rot_next(m1_t) != m1_s || g.rot_next(m2_s) != m2_t {
        return Err(reject("gap faces around the pair are not the edge-move image"));
    }

    let mut ed = Editor::from_graph(g);
    let (new_s, new_e) = ed.new_edge(s, ext);
    ed.swap_in_rotation(s_x, new_s);
    ed.swap_in_rotation(g.opposite(t_e), new_e);
    ed.retire_edge(g.dart_edge(x_to_s));
    ed.retire_edge(g.dart_edge(t_e));
    ed.remove_edge(g.dart_edge(x_to_t));
    ed.remove_edge(g.dart_edge(t_m1));
    ed.remove_edge(g.dart_edge(t_m2));
    ed.set_rotation(t, Vec::new());
    ed.set_rotation(x, Vec::new());
    ed.remove_vertex(t);
    ed.remove_vertex(x);
    Ok(ed.freeze())
}

/// Exact inverse of a vertex move: remove saddle `s` and merge its two
/// same-polarity neighbors back into one extremum. Exactness is enforced by
/// re-splitting the merged vertex and comparing canonical codes.
pub(crate) fn cancel_vertex(g: &MsGraph, s: usize, pol: Polarity) -> Result<MsGraph> {
    if g.vertex_index(s) != MorseIndex::Saddle || g.degree(s) != 4 {
        return Err(reject("cancel-vertex site is not a degree-4 saddle"));
    }
    let rot = g.rotation(s);
    let same_pol: Vec<usize> = rot
        .iter()
        .copied()
        .filter(|&d| g.vertex_index(g.dart_target(d)) == pol.extremum())
        .collect();
    if same_pol.len() != 2 {
        return Err(reject("saddle does not have two neighbors of the move polarity"));
    }
    let (v1, v2) = (g.dart_target(same_pol[0]), g.dart_target(same_pol[1]));
    if v1 == v2 {
        return Err(reject("vertex cancel needs two distinct extrema"));
    }
    if g.degree(v1) < 2 || g.degree(v2) < 2 {
        return Err(reject("vertex cancel extrema must keep nonempty arcs"));
    }

    let arc_after = |vd: usize| -> Vec<usize> {
        // Rotation of the extremum starting just after its dart to s.
        let v = g.dart_target(vd);
        let d_in = g.opposite(vd);
        let rot = g.rotation(v);
        let p = rot.iter().position(|&d| d == d_in).unwrap();
        (1..rot.len()).map(|k| rot[(p + k) % rot.len()]).collect()
    };
    let arc1 = arc_after(same_pol[0]);
    let arc2 = arc_after(same_pol[1]);

    let mut ed = Editor::from_graph(g);
    let merged = ed.new_vertex(pol.extremum(), pol.vertex_prefix());
    let mut merged_rot = Vec::new();
    for &d in arc1.iter().chain(arc2.iter()) {
        ed.downer[d] = merged;
        merged_rot.push(d);
    }
    ed.set_rotation(merged, merged_rot);
    ed.set_rotation(v1, Vec::new());
    ed.set_rotation(v2, Vec::new());
    // Remove the saddle's four edges. The same-polarity edges' outer darts
    // sit in the cleared v1/v2 rotations, so those edges are only retired;
    // the opposite-polarity edges still have placed darts to unhook.
    for &d in rot {
        let e = g.dart_edge(d);
        if same_pol.contains(&d) {
            ed.retire_edge(e);
        } else {
            ed.remove_edge(e);
        }
    }
    ed.set_rotation(s, Vec::new());
    ed.remove_vertex(s);
    ed.remove_vertex(v1);
    ed.remove_vertex(v2);
    let out = ed.freeze();

    if !out.is_valid() {
        return Err(reject("vertex cancel does not restore a valid graph"));
    }
    // Exactness: re-splitting at the splice gaps must give back `g`.
    let p = arc1.len();
    let q = arc2.len();
    let merged_out = out.vertex_count() - 1;
    let resplit = vertex_move(&out, merged_out, (p - 1, p + q - 1), pol)
        .map_err(|_| reject("vertex cancel is not the image of a vertex move"))?;
    match (resplit.canonical_code(), g.canonical_code()) {
        (Ok(a), Ok(b)) if a == b => Ok(out),
        _ => Err(reject("vertex cancel is not the image of a vertex move")),
    }
}
