//! Merge trees and Reeb graphs (contour trees) of decorated graphs.
//!
//! Both come from ascending/descending sweeps with union-find over the
//! 1-skeleton of the quadrangle complex. The Reeb graph is assembled from
//! the join and split trees by the usual leaf-pruning combination; on the
//! sphere it is a tree with degree 1 at extrema and 3 at saddles.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{cmp_scalar, Scalar};

use super::DecoratedMsGraph;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            self.parent[r] = self.parent[self.parent[r]];
            r = self.parent[r];
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[derive(Debug, Clone)]
pub struct MergeTreeNode<V> {
    pub label: String,
    pub height: V,
    pub parent: Option<usize>,
}

/// Join tree of sublevel connectivity: leaves at local minima, internal
/// nodes where components merge, a stem up to the global maximum.
#[derive(Debug, Clone)]
pub struct MergeTree<V> {
    pub nodes: Vec<MergeTreeNode<V>>,
    pub root: usize,
}

impl<V: Scalar> MergeTree<V> {
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| self.nodes.iter().all(|n| n.parent != Some(i)))
            .collect()
    }

    fn children(&self, i: usize) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&k| self.nodes[k].parent == Some(i)).collect()
    }

    /// Canonical code with heights; equal codes = height-labeled isomorphism.
    pub fn canonical_code(&self) -> String {
        fn go<V: Scalar>(t: &MergeTree<V>, i: usize) -> String {
            let mut kids: Vec<String> = t.children(i).into_iter().map(|k| go(t, k)).collect();
            kids.sort();
            format!("({}{})", t.nodes[i].height, kids.join(""))
        }
        go(self, self.root)
    }

    pub fn is_isomorphic(&self, other: &MergeTree<V>) -> bool {
        self.canonical_code() == other.canonical_code()
    }
}

/// Ascending sweep with union-find over the 1-skeleton.
pub fn merge_tree<V: Scalar>(dg: &DecoratedMsGraph<V>) -> MergeTree<V> {
    let g = dg.graph();
    let mut verts: Vec<usize> = g.vertices().collect();
    verts.sort_by(|&a, &b| cmp_scalar(&dg.value(a), &dg.value(b)));
    if g.is_base_sphere() {
        let (lo, hi) = (verts[0], verts[1]);
        return MergeTree {
            nodes: vec![
                MergeTreeNode { label: g.vertex_label(lo).to_string(), height: dg.value(lo), parent: Some(1) },
                MergeTreeNode { label: g.vertex_label(hi).to_string(), height: dg.value(hi), parent: None },
            ],
            root: 1,
        };
    }

    let mut uf = UnionFind::new(g.vertex_count());
    // Current tree node representing each component, keyed by UF root.
    let mut top: BTreeMap<usize, usize> = BTreeMap::new();
    let mut nodes: Vec<MergeTreeNode<V>> = Vec::new();

    for &v in &verts {
        let lower: Vec<usize> = g
            .rotation(v)
            .iter()
            .map(|&d| g.dart_target(d))
            .filter(|&u| dg.value(u) < dg.value(v))
            .collect();
        if lower.is_empty() {
            // Local minimum: a new leaf and a new component.
            let node = nodes.len();
            nodes.push(MergeTreeNode { label: g.vertex_label(v).to_string(), height: dg.value(v), parent: None });
            top.insert(uf.find(v), node);
            continue;
        }
        let mut comp_tops: Vec<usize> = Vec::new();
        for &u in &lower {
            let r = uf.find(u);
            let t = top[&r];
            if !comp_tops.contains(&t) {
                comp_tops.push(t);
            }
        }
        for &u in &lower {
            uf.union(u, v);
        }
        let r = uf.find(v);
        if comp_tops.len() >= 2 {
            // Merging saddle: join node adopting every incoming component.
            let node = nodes.len();
            nodes.push(MergeTreeNode { label: g.vertex_label(v).to_string(), height: dg.value(v), parent: None });
            for t in comp_tops {
                nodes[t].parent = Some(node);
            }
            top.insert(r, node);
        } else {
            top.insert(r, comp_tops[0]);
        }
    }

    // Stem to the global maximum.
    let top_vertex = *verts.last().expect("nonempty graph");
    let final_top = top[&uf.find(top_vertex)];
    let root = nodes.len();
    nodes.push(MergeTreeNode {
        label: g.vertex_label(top_vertex).to_string(),
        height: dg.value(top_vertex),
        parent: None,
    });
    nodes[final_top].parent = Some(root);
    MergeTree { nodes, root }
}

#[derive(Debug, Clone)]
pub struct ReebNode<V> {
    pub label: String,
    pub height: V,
}

/// The contour tree: node heights are critical values; on the sphere it is
/// a tree with degree 1 at extrema and 3 at saddles.
#[derive(Debug, Clone)]
pub struct ReebGraph<V> {
    pub nodes: Vec<ReebNode<V>>,
    pub edges: Vec<(usize, usize)>,
}

impl<V: Scalar> ReebGraph<V> {
    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == i || b == i).count()
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn is_tree(&self) -> bool {
        if self.nodes.is_empty() {
            return false;
        }
        if self.edges.len() + 1 != self.nodes.len() {
            return false;
        }
        let mut uf = UnionFind::new(self.nodes.len());
        self.edges.iter().all(|&(a, b)| uf.union(a, b))
    }

    /// Canonical code rooted at the unique highest node.
    pub fn canonical_code(&self) -> Result<String> {
        if !self.is_tree() {
            return Err(Error::rejected("Reeb graph is not a tree"));
        }
        let root = (0..self.nodes.len())
            .max_by(|&a, &b| cmp_scalar(&self.nodes[a].height, &self.nodes[b].height))
            .expect("nonempty");
        fn go<V: Scalar>(r: &ReebGraph<V>, i: usize, from: Option<usize>) -> String {
            let mut kids: Vec<String> = r
                .neighbors(i)
                .into_iter()
                .filter(|&k| Some(k) != from)
                .map(|k| go(r, k, Some(i)))
                .collect();
            kids.sort();
            format!("({}{})", r.nodes[i].height, kids.join(""))
        }
        Ok(go(self, root, None))
    }

    /// Height-labeled isomorphism of contour trees.
    pub fn is_isomorphic(&self, other: &ReebGraph<V>) -> Result<bool> {
        Ok(self.canonical_code()? == other.canonical_code()?)
    }
}

/// Augmented join or split tree: per vertex, its children (component tops it
/// absorbed) and parent.
struct SweepTree {
    children: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
}

fn sweep_tree<V: Scalar>(dg: &DecoratedMsGraph<V>, ascending: bool) -> SweepTree {
    let g = dg.graph();
    let mut verts: Vec<usize> = g.vertices().collect();
    verts.sort_by(|&a, &b| cmp_scalar(&dg.value(a), &dg.value(b)));
    if !ascending {
        verts.reverse();
    }
    let before = |u: usize, v: usize| {
        if ascending {
            dg.value(u) < dg.value(v)
        } else {
            dg.value(u) > dg.value(v)
        }
    };

    let mut uf = UnionFind::new(g.vertex_count());
    let mut top: BTreeMap<usize, usize> = BTreeMap::new();
    let mut children = vec![Vec::new(); g.vertex_count()];
    let mut parent = vec![None; g.vertex_count()];
    for &v in &verts {
        let mut tops: Vec<usize> = Vec::new();
        for &d in g.rotation(v) {
            let u = g.dart_target(d);
            if before(u, v) {
                let t = top[&uf.find(u)];
                if !tops.contains(&t) {
                    tops.push(t);
                }
            }
        }
        for t in tops {
            parent[t] = Some(v);
            children[v].push(t);
            uf.union(t, v);
        }
        top.insert(uf.find(v), v);
    }
    SweepTree { children, parent }
}

/// Contour tree by the join/split-tree combination.
pub fn reeb_graph<V: Scalar>(dg: &DecoratedMsGraph<V>) -> ReebGraph<V> {
    let g = dg.graph();
    let nodes: Vec<ReebNode<V>> = g
        .vertices()
        .map(|v| ReebNode { label: g.vertex_label(v).to_string(), height: dg.value(v) })
        .collect();
    if g.is_base_sphere() {
        return ReebGraph { nodes, edges: vec![(0, 1)] };
    }

    let mut jt = sweep_tree(dg, true);
    let mut st = sweep_tree(dg, false);
    let n = g.vertex_count();
    let mut alive: Vec<bool> = vec![true; n];
    let mut edges = Vec::new();

    let remove_leaf = |t: &mut SweepTree, v: usize| {
        if let Some(p) = t.parent[v] {
            t.children[p].retain(|&c| c != v);
        }
        t.parent[v] = None;
    };
    let contract = |t: &mut SweepTree, v: usize| {
        let p = t.parent[v];
        let kids = std::mem::take(&mut t.children[v]);
        if let Some(p) = p {
            t.children[p].retain(|&c| c != v);
            for &c in &kids {
                t.parent[c] = Some(p);
                t.children[p].push(c);
            }
        } else {
            for &c in &kids {
                t.parent[c] = None;
            }
        }
        t.parent[v] = None;
    };

    let mut remaining = n;
    while remaining > 1 {
        let mut progressed = false;
        for v in 0..n {
            if remaining <= 1 {
                break;
            }
            if !alive[v] {
                continue;
            }
            let lower_leaf = jt.children[v].is_empty() && st.children[v].len() <= 1;
            let upper_leaf = st.children[v].is_empty() && jt.children[v].len() <= 1;
            if lower_leaf && jt.parent[v].is_some() {
                edges.push((v, jt.parent[v].unwrap()));
                remove_leaf(&mut jt, v);
                contract(&mut st, v);
                alive[v] = false;
                remaining -= 1;
                progressed = true;
            } else if upper_leaf && st.parent[v].is_some() {
                edges.push((v, st.parent[v].unwrap()));
                remove_leaf(&mut st, v);
                contract(&mut jt, v);
                alive[v] = false;
                remaining -= 1;
                progressed = true;
            }
        }
        assert!(progressed, "contour tree combination stalled");
    }

    let mut reeb = ReebGraph { nodes, edges };
    prune_regular(&mut reeb);
    reeb
}

/// Contract degree-2 nodes (regular under the decoration). Valid Morse
/// decorations have none; arbitrary distinct values may create them.
fn prune_regular<V: Scalar>(reeb: &mut ReebGraph<V>) {
    loop {
        let Some(v) = (0..reeb.nodes.len()).find(|&v| reeb.degree(v) == 2) else { break };
        let nb = reeb.neighbors(v);
        reeb.edges.retain(|&(a, b)| a != v && b != v);
        reeb.edges.push((nb[0], nb[1]));
        // Drop the node, remapping indices.
        reeb.nodes.remove(v);
        for e in reeb.edges.iter_mut() {
            if e.0 > v {
                e.0 -= 1;
            }
            if e.1 > v {
                e.1 -= 1;
            }
        }
    }
}
