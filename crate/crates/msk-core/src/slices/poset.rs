//! Nesting posets and their isomorphism.
//!
//! The poset of a forest has one element per circle (the region directly
//! inside it) plus the unbounded region on top; the order is containment.
//! It is a rooted tree order, so isomorphism is decided by AHU-style
//! canonical codes on unordered rooted trees.

use std::collections::BTreeMap;

use super::{CircleId, NestingForest, Region};

/// The nesting poset of one slice: a tree order rooted at the unbounded
/// region.
#[derive(Debug, Clone)]
pub struct NestingPoset {
    /// Element 0 is the unbounded region.
    pub elements: Vec<Region>,
    /// Cover relation: index of the parent region (None for the top).
    pub parent: Vec<Option<usize>>,
}

impl NestingPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // there is always the unbounded region
    }

    pub fn index_of(&self, r: &Region) -> Option<usize> {
        self.elements.iter().position(|e| e == r)
    }

    /// Partial order: `a <= b` iff `b` lies on `a`'s parent chain.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        let mut cur = Some(a);
        while let Some(i) = cur {
            if i == b {
                return true;
            }
            cur = self.parent[i];
        }
        false
    }

    pub fn children(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.parent[k] == Some(i)).collect()
    }

    /// AHU canonical code of the tree order.
    pub fn ahu_code(&self) -> String {
        fn code(p: &NestingPoset, i: usize) -> String {
            let mut kids: Vec<String> = p.children(i).into_iter().map(|k| code(p, k)).collect();
            kids.sort();
            format!("({})", kids.join(""))
        }
        code(self, 0)
    }

    /// The unique maximal element (the unbounded region's index).
    pub fn top(&self) -> usize {
        0
    }
}

/// The nesting poset of a forest: child-region <= parent-region, everything
/// below the unbounded region.
pub fn nesting_poset(forest: &NestingForest) -> NestingPoset {
    let mut elements = vec![Region::Outer];
    let mut index: BTreeMap<CircleId, usize> = BTreeMap::new();
    for c in forest.circles() {
        index.insert(c.clone(), elements.len());
        elements.push(Region::Circle(c.clone()));
    }
    let mut parent = vec![None];
    for c in forest.circles() {
        let p = match forest.parent(c).expect("circle in forest") {
            None => 0,
            Some(q) => index[q],
        };
        parent.push(Some(p));
    }
    NestingPoset { elements, parent }
}

/// Rooted-unordered-tree isomorphism of posets via canonical codes.
pub fn poset_isomorphic(p: &NestingPoset, q: &NestingPoset) -> bool {
    p.ahu_code() == q.ahu_code()
}
