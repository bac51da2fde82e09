//! Decorated graphs and their persistence invariants.

mod contour;
mod reduction;

pub use contour::{merge_tree, reeb_graph, MergeTree, MergeTreeNode, ReebGraph, ReebNode};
pub use reduction::sublevel_barcode;

use std::collections::BTreeMap;

use crate::complex::MsGraph;
use crate::error::{Error, Result};
use crate::scalar::{all_distinct, cmp_scalar, Scalar};

/// A Morse-Smale graph with distinct critical values on its vertices.
#[derive(Debug, Clone)]
pub struct DecoratedMsGraph<V> {
    graph: MsGraph,
    values: Vec<V>,
}

impl<V: Scalar> DecoratedMsGraph<V> {
    /// Requires one value per vertex, pairwise distinct and comparable.
    pub fn new(graph: MsGraph, values: Vec<V>) -> Result<DecoratedMsGraph<V>> {
        if values.len() != graph.vertex_count() {
            return Err(Error::rejected(format!(
                "{} values for {} vertices",
                values.len(),
                graph.vertex_count()
            )));
        }
        if !all_distinct(&values) {
            return Err(Error::rejected(
                "critical values must be pairwise distinct and comparable",
            ));
        }
        Ok(DecoratedMsGraph { graph, values })
    }

    pub fn graph(&self) -> &MsGraph {
        &self.graph
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub fn value(&self, v: usize) -> V {
        self.values[v]
    }

    pub fn is_valid(&self) -> bool {
        self.graph.is_valid()
    }

    /// Critical values in ascending order.
    pub fn sorted_values(&self) -> Vec<V> {
        let mut vals = self.values.clone();
        vals.sort_by(cmp_scalar);
        vals
    }

    /// A slicing with one regular value per gap between critical values.
    pub fn canonical_slicing(&self) -> Vec<V> {
        let vals = self.sorted_values();
        let mut out = vec![V::below(vals[0])];
        for w in vals.windows(2) {
            out.push(V::midpoint(w[0], w[1]));
        }
        out.push(V::above(vals[vals.len() - 1]));
        out
    }
}

/// Value comparison used by graph equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueMatch {
    /// `f = g on vertices` exactly.
    Exact,
    /// Only the rank order of values must agree.
    Rank,
}

/// Graph equivalence: the value-matching vertex bijection (forced by
/// distinctness) is an abstract multigraph isomorphism respecting the Morse
/// indices. With [`ValueMatch::Rank`] the bijection matches value ranks
/// instead of values.
pub fn graph_equivalent<V: Scalar>(
    a: &DecoratedMsGraph<V>,
    b: &DecoratedMsGraph<V>,
    mode: ValueMatch,
) -> bool {
    let ga = a.graph();
    let gb = b.graph();
    if ga.vertex_count() != gb.vertex_count() {
        return false;
    }
    let rank = |dg: &DecoratedMsGraph<V>| -> Vec<usize> {
        let sorted = dg.sorted_values();
        (0..dg.graph().vertex_count())
            .map(|v| sorted.iter().position(|x| *x == dg.value(v)).unwrap())
            .collect()
    };
    let (ra, rb) = (rank(a), rank(b));
    if mode == ValueMatch::Exact {
        let mut va = a.values.clone();
        let mut vb = b.values.clone();
        va.sort_by(cmp_scalar);
        vb.sort_by(cmp_scalar);
        if va != vb {
            return false;
        }
    }
    // Bijection: vertex of a with rank r -> vertex of b with rank r.
    let mut to_b = vec![usize::MAX; ga.vertex_count()];
    let mut by_rank_b = vec![usize::MAX; gb.vertex_count()];
    for v in gb.vertices() {
        by_rank_b[rb[v]] = v;
    }
    for v in ga.vertices() {
        to_b[v] = by_rank_b[ra[v]];
    }
    for v in ga.vertices() {
        if ga.vertex_index(v) != gb.vertex_index(to_b[v]) {
            return false;
        }
    }
    // Edge multisets with multiplicity, as unordered endpoint pairs.
    let edge_multiset = |g: &MsGraph, map: Option<&[usize]>| -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for e in 0..g.edge_count() {
            let [mut u, mut w] = g.edge_ends(e);
            if let Some(m) = map {
                u = m[u];
                w = m[w];
            }
            let key = (u.min(w), u.max(w));
            *out.entry(key).or_insert(0) += 1;
        }
        out
    };
    edge_multiset(ga, Some(&to_b)) == edge_multiset(gb, None)
}

/// Betti numbers `(b0, b1, b2)` of the sublevel complex at each slicing
/// value. The slicing must interleave the critical values: strictly
/// increasing, one critical value per gap, ends outside the critical range.
pub fn betti_profile<V: Scalar>(
    dg: &DecoratedMsGraph<V>,
    slicing: &[V],
) -> Result<Vec<(usize, usize, usize)>> {
    let vals = dg.sorted_values();
    if slicing.len() != vals.len() + 1 {
        return Err(Error::rejected(format!(
            "slicing needs {} values for {} critical values",
            vals.len() + 1,
            vals.len()
        )));
    }
    for w in slicing.windows(2) {
        if !(w[0] < w[1]) {
            return Err(Error::rejected("slicing values must be strictly increasing"));
        }
    }
    for (i, &c) in vals.iter().enumerate() {
        if !(slicing[i] < c && c < slicing[i + 1]) {
            return Err(Error::rejected(format!(
                "slicing interval ({}, {}) must contain exactly the critical value {c}",
                slicing[i],
                slicing[i + 1]
            )));
        }
    }
    let barcode = sublevel_barcode(dg);
    let alive = |t: V, dim: u8| -> usize {
        barcode
            .bars_of_dim(dim)
            .filter(|bar| bar.birth.value <= t && bar.death_value().map_or(true, |d| t < d))
            .count()
    };
    Ok(slicing.iter().map(|&t| (alive(t, 0), alive(t, 1), alive(t, 2))).collect())
}

/// Homological equivalence: same number of critical points and equal Betti
/// profiles along canonical slicings (profiles are forced by critical order,
/// so existence of matching slicings is equality by index).
pub fn homologically_equivalent<V: Scalar>(a: &DecoratedMsGraph<V>, b: &DecoratedMsGraph<V>) -> bool {
    if a.graph().vertex_count() != b.graph().vertex_count() {
        return false;
    }
    let pa = betti_profile(a, &a.canonical_slicing()).expect("canonical slicing is valid");
    let pb = betti_profile(b, &b.canonical_slicing()).expect("canonical slicing is valid");
    pa == pb
}
