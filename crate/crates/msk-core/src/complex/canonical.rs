//! Canonical forms for combinatorial maps.
//!
//! A rooted connected map has a unique breadth-first dart numbering, so the
//! minimum over all roots of the numbered transition table is a canonical
//! form: two valid graphs get equal codes exactly when they are isomorphic
//! as maps up to orientation-preserving relabeling.

use std::fmt;

use super::MsGraph;

/// Canonical form of a map. Ordered, hashable, printable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u32>);

impl CanonicalCode {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", words.join("."))
    }
}

/// Code for one choice of root dart: breadth-first numbering over the
/// `rotation-next` and `opposite` transitions, emitting per visited dart its
/// owner index and the numbers of its two successors.
fn rooted_code(g: &MsGraph, root: usize, mirror: bool) -> Vec<u32> {
    let n = g.dart_count();
    let mut num = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    let assign = |d: usize, num: &mut Vec<u32>, order: &mut Vec<usize>| {
        if num[d] == u32::MAX {
            num[d] = order.len() as u32;
            order.push(d);
        }
    };
    assign(root, &mut num, &mut order);
    let mut i = 0;
    while i < order.len() {
        let d = order[i];
        let s = if mirror { g.rot_prev(d) } else { g.rot_next(d) };
        assign(s, &mut num, &mut order);
        assign(g.opposite(d), &mut num, &mut order);
        i += 1;
    }
    let mut code = Vec::with_capacity(3 * n + 1);
    code.push(n as u32);
    for &d in &order {
        let s = if mirror { g.rot_prev(d) } else { g.rot_next(d) };
        code.push(g.vertex_index(g.dart_owner(d)).as_u8() as u32);
        code.push(num[s]);
        code.push(num[g.opposite(d)]);
    }
    code
}

pub(super) fn code(g: &MsGraph, mirror: bool) -> CanonicalCode {
    if g.dart_count() == 0 {
        // Base sphere: a fixed sentinel distinct from every dart-built code.
        return CanonicalCode(vec![0]);
    }
    let best = (0..g.dart_count())
        .map(|root| rooted_code(g, root, mirror))
        .min()
        .expect("at least one dart");
    CanonicalCode(best)
}
