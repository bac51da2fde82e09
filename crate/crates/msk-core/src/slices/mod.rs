//! Height-embedded spheres as event histories on nesting forests.
//!
//! A slice of an embedded sphere is a family of disjoint Jordan curves in a
//! plane; the forest records which circle sits directly inside which. Six
//! event kinds move between slices: minima and maxima create and destroy
//! circles, merging and splitting saddles come in nesting and non-nesting
//! variants. A history is the time-ordered event sequence, the combinatorial
//! stand-in for an embedding of the sphere with a height projection.

mod barcode;
mod equiv;
mod poset;
mod zigzag;

pub use barcode::levelset_barcode;
pub(crate) use equiv::partial_script_code;
pub use equiv::{history_code, poset_equivalent};
pub use poset::{nesting_poset, poset_isomorphic, NestingPoset};
pub use zigzag::{
    canonical_slicing, combinatorial_barcode, zigzag, ArrowShape, CombinatorialBarcode,
    ForwardMap, GaloisView, NodePosition, PosetArrow, RegionInterval, ZigzagDiagram,
    ZigzagNode, GALOIS_CAVEAT,
};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{all_distinct, cmp_scalar, Scalar};

/// Identifier of one level-set circle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CircleId(String);

impl CircleId {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<String> for CircleId {
    fn from(s: String) -> Self {
        CircleId(s)
    }
}

impl From<&str> for CircleId {
    fn from(s: &str) -> Self {
        CircleId(s.to_string())
    }
}

impl fmt::Display for CircleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A region of the slicing plane: the unbounded region or the region
/// directly inside a circle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Region {
    Outer,
    Circle(CircleId),
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Outer => write!(f, "outer"),
            Region::Circle(c) => write!(f, "{c}"),
        }
    }
}

/// Circles with their direct enclosing circle; `None` parent = sits in the
/// unbounded region. Sibling order is meaningless (plane homeomorphisms
/// permute siblings).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NestingForest {
    parent: BTreeMap<CircleId, Option<CircleId>>,
}

impl NestingForest {
    pub fn empty() -> NestingForest {
        NestingForest::default()
    }

    pub fn circles(&self) -> impl Iterator<Item = &CircleId> {
        self.parent.keys()
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn contains(&self, c: &CircleId) -> bool {
        self.parent.contains_key(c)
    }

    pub fn parent(&self, c: &CircleId) -> Option<&Option<CircleId>> {
        self.parent.get(c)
    }

    pub fn parent_region(&self, c: &CircleId) -> Option<Region> {
        self.parent.get(c).map(|p| match p {
            None => Region::Outer,
            Some(q) => Region::Circle(q.clone()),
        })
    }

    pub fn children(&self, region: &Region) -> Vec<CircleId> {
        self.parent
            .iter()
            .filter(|(_, p)| match (region, p) {
                (Region::Outer, None) => true,
                (Region::Circle(c), Some(q)) => c == q,
                _ => false,
            })
            .map(|(c, _)| c.clone())
            .collect()
    }

    pub fn regions(&self) -> Vec<Region> {
        let mut out = vec![Region::Outer];
        out.extend(self.circles().cloned().map(Region::Circle));
        out
    }

    fn insert_new(&mut self, c: &CircleId, parent: Option<CircleId>) -> Result<()> {
        if self.parent.contains_key(c) {
            return Err(Error::rejected(format!("circle id {c} already in use")));
        }
        self.parent.insert(c.clone(), parent);
        Ok(())
    }

    fn region_as_parent(&self, r: &Region) -> Result<Option<CircleId>> {
        match r {
            Region::Outer => Ok(None),
            Region::Circle(c) => {
                if !self.contains(c) {
                    return Err(Error::rejected(format!("region circle {c} does not exist")));
                }
                Ok(Some(c.clone()))
            }
        }
    }

    /// Applies one event. Merges and splits follow the level-set geometry:
    /// a nesting merge seals the inner disk, expelling the inner circle's
    /// children into the outer circle's parent region; a nesting split
    /// captures a subset of siblings into the newborn inner disk.
    pub fn apply<V: Scalar>(&self, event: &Event<V>) -> Result<NestingForest> {
        let mut next = self.clone();
        match event {
            Event::Min { circle, region, .. } => {
                let parent = next.region_as_parent(region)?;
                next.insert_new(circle, parent)?;
            }
            Event::Max { circle, .. } => {
                if !next.contains(circle) {
                    return Err(Error::rejected(format!("max on unknown circle {circle}")));
                }
                if !next.children(&Region::Circle(circle.clone())).is_empty() {
                    return Err(Error::rejected(format!("max on circle {circle} with children")));
                }
                next.parent.remove(circle);
            }
            Event::MergeNonNesting { a, b, merged, .. } => {
                let pa = next
                    .parent(a)
                    .cloned()
                    .ok_or_else(|| Error::rejected(format!("merge of unknown circle {a}")))?;
                let pb = next
                    .parent(b)
                    .cloned()
                    .ok_or_else(|| Error::rejected(format!("merge of unknown circle {b}")))?;
                if a == b || pa != pb {
                    return Err(Error::rejected(format!("{a} and {b} are not distinct siblings")));
                }
                for (_, p) in next.parent.iter_mut() {
                    if p.as_ref() == Some(a) || p.as_ref() == Some(b) {
                        *p = Some(merged.clone());
                    }
                }
                next.parent.remove(a);
                next.parent.remove(b);
                next.insert_new(merged, pa)?;
            }
            Event::MergeNesting { outer, inner, merged, .. } => {
                if !next.contains(outer) {
                    return Err(Error::rejected(format!("merge of unknown circle {outer}")));
                }
                if next.parent(inner).cloned().flatten().as_ref() != Some(outer) {
                    return Err(Error::rejected(format!("{inner} is not directly inside {outer}")));
                }
                let grand = next.parent(outer).cloned().unwrap();
                for (_, p) in next.parent.iter_mut() {
                    if p.as_ref() == Some(inner) {
                        // Inner disk is sealed; its contents join the outer
                        // circle's ambient region.
                        *p = grand.clone();
                    } else if p.as_ref() == Some(outer) {
                        *p = Some(merged.clone());
                    }
                }
                next.parent.remove(outer);
                next.parent.remove(inner);
                next.insert_new(merged, grand)?;
            }
            Event::SplitNonNesting { circle, halves, .. } => {
                if !next.contains(circle) {
                    return Err(Error::rejected(format!("split of unknown circle {circle}")));
                }
                let kids: BTreeSet<CircleId> =
                    next.children(&Region::Circle(circle.clone())).into_iter().collect();
                let claimed: Vec<&CircleId> =
                    halves.iter().flat_map(|(_, ks)| ks.iter()).collect();
                let claimed_set: BTreeSet<CircleId> = claimed.iter().map(|&c| c.clone()).collect();
                if claimed.len() != claimed_set.len() || claimed_set != kids {
                    return Err(Error::rejected(format!(
                        "split halves must partition the children of {circle}"
                    )));
                }
                let parent = next.parent(circle).cloned().unwrap();
                next.parent.remove(circle);
                for (half, kids) in halves {
                    next.insert_new(half, parent.clone())?;
                    for k in kids {
                        next.parent.insert(k.clone(), Some(half.clone()));
                    }
                }
            }
            Event::SplitNesting { circle, outer, inner, captured, .. } => {
                if !next.contains(circle) {
                    return Err(Error::rejected(format!("split of unknown circle {circle}")));
                }
                let parent = next.parent(circle).cloned().unwrap();
                let siblings: BTreeSet<CircleId> = next
                    .parent
                    .iter()
                    .filter(|(c, p)| **p == parent && *c != circle)
                    .map(|(c, _)| c.clone())
                    .collect();
                for c in captured {
                    if !siblings.contains(c) {
                        return Err(Error::rejected(format!(
                            "captured circle {c} is not a sibling of {circle}"
                        )));
                    }
                }
                // The outer circle inherits the old interior plus the new
                // inner circle; captured siblings move inside the inner disk.
                for (_, p) in next.parent.iter_mut() {
                    if p.as_ref() == Some(circle) {
                        *p = Some(outer.clone());
                    }
                }
                next.parent.remove(circle);
                next.insert_new(outer, parent)?;
                next.insert_new(inner, Some(outer.clone()))?;
                for c in captured {
                    next.parent.insert(c.clone(), Some(inner.clone()));
                }
            }
        }
        Ok(next)
    }
}

/// One event of a height-embedded sphere. Times are the critical values of
/// the height function; all times in a history are distinct.
#[derive(Debug, Clone, PartialEq)]
pub enum Event<V> {
    Min { t: V, circle: CircleId, region: Region },
    Max { t: V, circle: CircleId },
    MergeNonNesting { t: V, a: CircleId, b: CircleId, merged: CircleId },
    MergeNesting { t: V, outer: CircleId, inner: CircleId, merged: CircleId },
    SplitNonNesting { t: V, circle: CircleId, halves: [(CircleId, Vec<CircleId>); 2] },
    SplitNesting { t: V, circle: CircleId, outer: CircleId, inner: CircleId, captured: Vec<CircleId> },
}

impl<V: Scalar> Event<V> {
    pub fn time(&self) -> V {
        match self {
            Event::Min { t, .. }
            | Event::Max { t, .. }
            | Event::MergeNonNesting { t, .. }
            | Event::MergeNesting { t, .. }
            | Event::SplitNonNesting { t, .. }
            | Event::SplitNesting { t, .. } => *t,
        }
    }

    pub fn kind_str(&self) -> &'static str {
        match self {
            Event::Min { .. } => "min",
            Event::Max { .. } => "max",
            Event::MergeNonNesting { .. } => "merge_nn",
            Event::MergeNesting { .. } => "merge_n",
            Event::SplitNonNesting { .. } => "split_nn",
            Event::SplitNesting { .. } => "split_n",
        }
    }

    /// Circles created by this event, in canonical creation order.
    pub fn created(&self) -> Vec<&CircleId> {
        match self {
            Event::Min { circle, .. } => vec![circle],
            Event::Max { .. } => vec![],
            Event::MergeNonNesting { merged, .. } | Event::MergeNesting { merged, .. } => vec![merged],
            Event::SplitNonNesting { halves, .. } => vec![&halves[0].0, &halves[1].0],
            Event::SplitNesting { outer, inner, .. } => vec![outer, inner],
        }
    }
}

/// Time-ordered event sequence, empty forest before and after, first event a
/// minimum in the unbounded region. Circle ids are never reused.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingHistory<V> {
    events: Vec<Event<V>>,
}

impl<V: Scalar> EmbeddingHistory<V> {
    pub fn new(mut events: Vec<Event<V>>) -> Result<EmbeddingHistory<V>> {
        events.sort_by(|a, b| cmp_scalar(&a.time(), &b.time()));
        let times: Vec<V> = events.iter().map(Event::time).collect();
        if events.is_empty() {
            return Err(Error::rejected("a history needs at least one event"));
        }
        if !all_distinct(&times) {
            return Err(Error::rejected("event times must be pairwise distinct"));
        }
        match &events[0] {
            Event::Min { region: Region::Outer, .. } => {}
            _ => {
                return Err(Error::rejected(
                    "the first event must be a minimum in the unbounded region",
                ))
            }
        }
        let mut forest = NestingForest::empty();
        let mut used: BTreeSet<CircleId> = BTreeSet::new();
        for ev in &events {
            for c in ev.created() {
                if !used.insert(c.clone()) {
                    return Err(Error::rejected(format!("circle id {c} is reused")));
                }
            }
            forest = forest.apply(ev)?;
        }
        if !forest.is_empty() {
            return Err(Error::rejected(format!(
                "forest is not empty after the last event ({} circles remain)",
                forest.len()
            )));
        }
        Ok(EmbeddingHistory { events })
    }

    pub fn events(&self) -> &[Event<V>] {
        &self.events
    }

    pub fn times(&self) -> Vec<V> {
        self.events.iter().map(Event::time).collect()
    }

    /// Forest after the first `k` events.
    pub fn forest_after(&self, k: usize) -> NestingForest {
        let mut forest = NestingForest::empty();
        for ev in &self.events[..k] {
            forest = forest.apply(ev).expect("validated on construction");
        }
        forest
    }

    /// Forest at a regular value: all events strictly before `t` applied.
    /// Rejected at event times, where the forest is ambiguous.
    pub fn forest_at(&self, t: V) -> Result<NestingForest> {
        if self.events.iter().any(|ev| ev.time() == t) {
            return Err(Error::rejected(format!("{t} is a critical value of the history")));
        }
        let k = self.events.iter().take_while(|ev| ev.time() < t).count();
        Ok(self.forest_after(k))
    }

    /// Nesting poset at a regular value.
    pub fn poset_at(&self, t: V) -> Result<NestingPoset> {
        Ok(nesting_poset(&self.forest_at(t)?))
    }
}
