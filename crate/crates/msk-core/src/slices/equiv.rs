//! Poset equivalence of histories via incremental canonical labeling.
//!
//! Two histories are poset equivalent when a single renaming of circle ids
//! maps one event script onto the other: that is exactly the existence of a
//! family of forest isomorphisms, one per slice, commuting with every event.
//! Circles are canonically numbered in creation order; the only symmetric
//! creation (a childless non-nesting split) is resolved by branching over
//! both half orders and keeping the lexicographically smallest code. Each
//! step also folds in the AHU label of the forest it produces.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

use super::poset::nesting_poset;
use super::{CircleId, EmbeddingHistory, Event, NestingForest, Region};

#[derive(Clone)]
struct Labeling {
    number: BTreeMap<CircleId, usize>,
    next: usize,
    code: String,
}

impl Labeling {
    fn assign(&mut self, c: &CircleId) {
        self.number.insert(c.clone(), self.next);
        self.next += 1;
    }

    fn num(&self, c: &CircleId) -> usize {
        self.number[c]
    }

    fn sorted(&self, cs: &[CircleId]) -> Vec<usize> {
        let mut v: Vec<usize> = cs.iter().map(|c| self.num(c)).collect();
        v.sort_unstable();
        v
    }
}

/// Canonical code of a history. Equal codes = poset equivalent.
pub fn history_code<V: Scalar>(h: &EmbeddingHistory<V>) -> String {
    let mut branches = vec![(Labeling { number: BTreeMap::new(), next: 0, code: String::new() }, NestingForest::empty())];
    for ev in h.events() {
        let mut next_branches = Vec::new();
        for (lab, forest) in branches {
            for mut lab in label_event(&lab, ev) {
                let next_forest = forest.apply(ev).expect("validated history");
                lab.code.push_str(&format!("|{}", nesting_poset(&next_forest).ahu_code()));
                next_branches.push((lab, next_forest));
            }
        }
        branches = next_branches;
    }
    branches.into_iter().map(|(lab, _)| lab.code).min().expect("at least one branch")
}

fn label_event<V: Scalar>(lab: &Labeling, ev: &Event<V>) -> Vec<Labeling> {
    let mut out = lab.clone();
    let t = ev.time();
    match ev {
        Event::Min { circle, region, .. } => {
            let r = match region {
                Region::Outer => "o".to_string(),
                Region::Circle(c) => out.num(c).to_string(),
            };
            out.code.push_str(&format!(";{t}:min@{r}"));
            out.assign(circle);
            vec![out]
        }
        Event::Max { circle, .. } => {
            out.code.push_str(&format!(";{t}:max@{}", out.num(circle)));
            vec![out]
        }
        Event::MergeNonNesting { a, b, merged, .. } => {
            let mut pair = [out.num(a), out.num(b)];
            pair.sort_unstable();
            out.code.push_str(&format!(";{t}:mnn@{},{}", pair[0], pair[1]));
            out.assign(merged);
            vec![out]
        }
        Event::MergeNesting { outer, inner, merged, .. } => {
            out.code.push_str(&format!(";{t}:mn@{},{}", out.num(outer), out.num(inner)));
            out.assign(merged);
            vec![out]
        }
        Event::SplitNesting { circle, outer, inner, captured, .. } => {
            let cap: Vec<String> = out.sorted(captured).iter().map(usize::to_string).collect();
            out.code.push_str(&format!(";{t}:sn@{}[{}]", out.num(circle), cap.join(",")));
            out.assign(outer);
            out.assign(inner);
            vec![out]
        }
        Event::SplitNonNesting { circle, halves, .. } => {
            let k0 = out.sorted(&halves[0].1);
            let k1 = out.sorted(&halves[1].1);
            let fmt = |lab: &mut Labeling, first: usize| {
                let (ka, kb) = if first == 0 { (&k0, &k1) } else { (&k1, &k0) };
                let s = |v: &Vec<usize>| {
                    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
                };
                lab.code
                    .push_str(&format!(";{t}:snn@{}[{}][{}]", lab.num(circle), s(ka), s(kb)));
                lab.assign(&halves[first].0);
                lab.assign(&halves[1 - first].0);
            };
            if k0 == k1 {
                // Symmetric halves: both orders are canonical candidates.
                let mut alt = out.clone();
                fmt(&mut out, 0);
                fmt(&mut alt, 1);
                vec![out, alt]
            } else if k0 < k1 {
                fmt(&mut out, 0);
                vec![out]
            } else {
                fmt(&mut out, 1);
                vec![out]
            }
        }
    }
}

/// Poset equivalence of two histories: equal event times and equal canonical
/// history codes, i.e. a family of per-slice forest isomorphisms commuting
/// with every event.
pub fn poset_equivalent<V: Scalar>(h1: &EmbeddingHistory<V>, h2: &EmbeddingHistory<V>) -> bool {
    history_code(h1) == history_code(h2)
}

/// Canonical code of a partial event script plus an auxiliary circle -> bar
/// assignment, for memoizing enumeration states.
pub(crate) fn partial_script_code<V: Scalar>(
    events: &[Event<V>],
    carrier: &BTreeMap<CircleId, usize>,
) -> String {
    let mut branches = vec![Labeling { number: BTreeMap::new(), next: 0, code: String::new() }];
    for ev in events {
        let mut next = Vec::new();
        for lab in branches {
            next.extend(label_event(&lab, ev));
        }
        branches = next;
    }
    branches
        .into_iter()
        .map(|lab| {
            let mut carriers: Vec<(usize, usize)> =
                carrier.iter().map(|(c, &bar)| (lab.num(c), bar)).collect();
            carriers.sort_unstable();
            let suffix: Vec<String> =
                carriers.iter().map(|(n, bar)| format!("{n}>{bar}")).collect();
            format!("{}||{}", lab.code, suffix.join(","))
        })
        .min()
        .expect("at least one branch")
}
