//! The zigzag of nesting posets across a slicing.
//!
//! Every event contributes two arrows connecting the posets just below, at,
//! and just above its critical value. Extrema and non-nesting saddles give
//! arrows pointing outward from the critical poset; nesting saddles point
//! one arrow inward, so the diagram is a genuine zigzag and is stored that
//! way. A Galois-connection straightening is available as a derived view,
//! with the caveat that it does not capture splitting saddles.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::poset::{nesting_poset, NestingPoset};
use super::{EmbeddingHistory, Event, NestingForest, Region};

/// Where a zigzag node sits.
#[derive(Debug, Clone, PartialEq)]
pub enum NodePosition<V> {
    /// A regular slicing value.
    Slice(V),
    /// The critical value of the event with this index.
    Critical(V, usize),
}

#[derive(Debug, Clone)]
pub struct ZigzagNode<V> {
    pub position: NodePosition<V>,
    pub forest: NestingForest,
    pub poset: NestingPoset,
}

/// Shape classification of one arrow, as in the six-case table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArrowShape {
    /// Arrow points toward the larger node index.
    pub rightward: bool,
    pub injective: bool,
    pub surjective: bool,
    pub iso: bool,
}

/// An order-preserving map between two adjacent nodes of the zigzag.
#[derive(Debug, Clone)]
pub struct PosetArrow {
    pub from: usize,
    pub to: usize,
    /// Element correspondence: (element of `from`'s poset, its image).
    pub map: Vec<(Region, Region)>,
    pub shape: ArrowShape,
}

#[derive(Debug, Clone)]
pub struct ZigzagDiagram<V> {
    pub nodes: Vec<ZigzagNode<V>>,
    pub arrows: Vec<PosetArrow>,
}

fn arrow(nodes: &[ZigzagNode<impl Scalar>], from: usize, to: usize, map: Vec<(Region, Region)>) -> PosetArrow {
    let source = &nodes[from].poset;
    let target = &nodes[to].poset;
    debug_assert_eq!(map.len(), source.len(), "arrow map must be total on its source");
    let mut hit = vec![false; target.len()];
    let mut injective = true;
    for (_, y) in &map {
        let yi = target.index_of(y).expect("image element exists");
        if hit[yi] {
            injective = false;
        }
        hit[yi] = true;
    }
    let surjective = hit.iter().all(|&h| h);
    // Order preservation is structural for these maps; keep the check as a
    // debug invariant.
    debug_assert!({
        let idx = |p: &NestingPoset, r: &Region| p.index_of(r).unwrap();
        map.iter().all(|(x1, y1)| {
            map.iter().all(|(x2, y2)| {
                !source.leq(idx(source, x1), idx(source, x2))
                    || target.leq(idx(target, y1), idx(target, y2))
            })
        })
    });
    let iso = injective && surjective;
    PosetArrow { from, to, map, shape: ArrowShape { rightward: to > from, injective, surjective, iso } }
}

fn identity_map(forest: &NestingForest) -> Vec<(Region, Region)> {
    forest.regions().into_iter().map(|r| (r.clone(), r)).collect()
}

/// Identity on shared regions with finitely many exceptional images.
fn map_with(forest: &NestingForest, renames: &[(Region, Region)]) -> Vec<(Region, Region)> {
    forest
        .regions()
        .into_iter()
        .map(|r| {
            for (from, to) in renames {
                if &r == from {
                    return (r.clone(), to.clone());
                }
            }
            (r.clone(), r)
        })
        .collect()
}

/// Checks that `slicing` interleaves the history's event times: one critical
/// value per gap, ends strictly outside.
fn check_slicing<V: Scalar>(times: &[V], slicing: &[V]) -> Result<()> {
    if slicing.len() != times.len() + 1 {
        return Err(Error::rejected(format!(
            "slicing needs {} values for {} critical values",
            times.len() + 1,
            times.len()
        )));
    }
    for w in slicing.windows(2) {
        if !(w[0] < w[1]) {
            return Err(Error::rejected("slicing values must be strictly increasing"));
        }
    }
    for (i, &t) in times.iter().enumerate() {
        if !(slicing[i] < t && t < slicing[i + 1]) {
            return Err(Error::rejected(format!(
                "slicing interval ({}, {}) must contain exactly the critical value {t}",
                slicing[i],
                slicing[i + 1]
            )));
        }
    }
    Ok(())
}

/// A slicing with one regular value in every gap of the history.
pub fn canonical_slicing<V: Scalar>(h: &EmbeddingHistory<V>) -> Vec<V> {
    let times = h.times();
    let mut out = vec![V::below(times[0])];
    for w in times.windows(2) {
        out.push(V::midpoint(w[0], w[1]));
    }
    out.push(V::above(times[times.len() - 1]));
    out
}

/// Builds the zigzag of nesting posets for a slicing of the history.
pub fn zigzag<V: Scalar>(h: &EmbeddingHistory<V>, slicing: &[V]) -> Result<ZigzagDiagram<V>> {
    let times = h.times();
    check_slicing(&times, slicing)?;

    let mut nodes: Vec<ZigzagNode<V>> = Vec::new();
    let push = |nodes: &mut Vec<ZigzagNode<V>>, position, forest: NestingForest| {
        let poset = nesting_poset(&forest);
        nodes.push(ZigzagNode { position, forest, poset });
    };
    push(&mut nodes, NodePosition::Slice(slicing[0]), h.forest_after(0));
    for (i, ev) in h.events().iter().enumerate() {
        // The critical poset equals the side the event has not yet changed:
        // pre-event for minima and merges, post-event for maxima and splits.
        let critical_forest = match ev {
            Event::Min { .. } | Event::MergeNonNesting { .. } | Event::MergeNesting { .. } => {
                h.forest_after(i)
            }
            Event::Max { .. } | Event::SplitNonNesting { .. } | Event::SplitNesting { .. } => {
                h.forest_after(i + 1)
            }
        };
        push(&mut nodes, NodePosition::Critical(ev.time(), i), critical_forest);
        push(&mut nodes, NodePosition::Slice(slicing[i + 1]), h.forest_after(i + 1));
    }

    let mut arrows = Vec::new();
    for (i, ev) in h.events().iter().enumerate() {
        let left = 2 * i;
        let crit = 2 * i + 1;
        let right = 2 * i + 2;
        let cf = nodes[crit].forest.clone();
        match ev {
            Event::Min { .. } => {
                arrows.push(arrow(&nodes, crit, left, identity_map(&cf)));
                arrows.push(arrow(&nodes, crit, right, identity_map(&cf)));
            }
            Event::Max { .. } => {
                arrows.push(arrow(&nodes, crit, left, identity_map(&cf)));
                arrows.push(arrow(&nodes, crit, right, identity_map(&cf)));
            }
            Event::MergeNonNesting { a, b, merged, .. } => {
                arrows.push(arrow(&nodes, crit, left, identity_map(&cf)));
                let renames = [
                    (Region::Circle(a.clone()), Region::Circle(merged.clone())),
                    (Region::Circle(b.clone()), Region::Circle(merged.clone())),
                ];
                arrows.push(arrow(&nodes, crit, right, map_with(&cf, &renames)));
            }
            Event::SplitNonNesting { circle, halves, .. } => {
                let renames = [
                    (Region::Circle(halves[0].0.clone()), Region::Circle(circle.clone())),
                    (Region::Circle(halves[1].0.clone()), Region::Circle(circle.clone())),
                ];
                arrows.push(arrow(&nodes, crit, left, map_with(&cf, &renames)));
                arrows.push(arrow(&nodes, crit, right, identity_map(&cf)));
            }
            Event::MergeNesting { outer, merged, .. } => {
                arrows.push(arrow(&nodes, crit, left, identity_map(&cf)));
                // The post-critical poset embeds backward into the critical
                // one: the merged disk continues the annulus region.
                let rf = nodes[right].forest.clone();
                let renames = [(Region::Circle(merged.clone()), Region::Circle(outer.clone()))];
                arrows.push(arrow(&nodes, right, crit, map_with(&rf, &renames)));
            }
            Event::SplitNesting { circle, outer, .. } => {
                let lf = nodes[left].forest.clone();
                let renames = [(Region::Circle(circle.clone()), Region::Circle(outer.clone()))];
                arrows.push(arrow(&nodes, left, crit, map_with(&lf, &renames)));
                arrows.push(arrow(&nodes, crit, right, identity_map(&cf)));
            }
        }
    }
    Ok(ZigzagDiagram { nodes, arrows })
}

pub const GALOIS_CAVEAT: &str =
    "Galois-straightened view: reversed arrows use max{x : phi(x) <= y}; it does not capture splitting saddles";

/// One left-to-right map of the straightened diagram; entries are `None`
/// where the Galois adjoint is undefined (empty or maxless preimage set).
#[derive(Debug, Clone)]
pub struct ForwardMap {
    pub from: usize,
    pub to: usize,
    pub map: Vec<(Region, Option<Region>)>,
    /// True when this arrow was already forward and needed no reversal.
    pub exact: bool,
}

#[derive(Debug, Clone)]
pub struct GaloisView {
    pub maps: Vec<ForwardMap>,
    pub caveat: &'static str,
}

impl<V: Scalar> ZigzagDiagram<V> {
    /// Straightens the zigzag into a left-to-right diagram, reversing
    /// backward arrows by the Galois construction.
    pub fn straightened(&self) -> GaloisView {
        let mut maps = Vec::new();
        for (k, a) in self.arrows.iter().enumerate() {
            let j = k; // arrow k connects nodes k and k+1
            if a.from == j {
                maps.push(ForwardMap {
                    from: j,
                    to: j + 1,
                    map: a.map.iter().map(|(x, y)| (x.clone(), Some(y.clone()))).collect(),
                    exact: true,
                });
                continue;
            }
            // a: N_{j+1} -> N_j; adjoint per element of N_j.
            let source = &self.nodes[j].poset;
            let target = &self.nodes[j + 1].poset;
            let mut out = Vec::new();
            for y in &source.elements {
                let yi = source.index_of(y).unwrap();
                let candidates: Vec<usize> = a
                    .map
                    .iter()
                    .filter(|(_, img)| source.leq(source.index_of(img).unwrap(), yi))
                    .map(|(x, _)| target.index_of(x).unwrap())
                    .collect();
                let max = candidates
                    .iter()
                    .copied()
                    .find(|&m| candidates.iter().all(|&c| target.leq(c, m)));
                out.push((y.clone(), max.map(|m| target.elements[m].clone())));
            }
            maps.push(ForwardMap { from: j, to: j + 1, map: out, exact: false });
        }
        GaloisView { maps, caveat: GALOIS_CAVEAT }
    }
}

/// Lifetime of one tracked region through the zigzag.
#[derive(Debug, Clone)]
pub struct RegionInterval {
    /// The region's identity at birth.
    pub label: Region,
    /// First and last node index at which the family is present.
    pub start: usize,
    pub end: usize,
}

/// Experimental interval decomposition of the zigzag by region tracking.
#[derive(Debug, Clone)]
pub struct CombinatorialBarcode {
    pub intervals: Vec<RegionInterval>,
    /// True when the tracked intervals explain every poset element at every
    /// node exactly once: the instance-level evidence that the diagram
    /// decomposes into interval summands.
    pub decomposable: bool,
}

/// Tracks each region through the arrow correspondences and reports the
/// node interval over which it persists as an identifiable summand.
pub fn combinatorial_barcode<V: Scalar>(h: &EmbeddingHistory<V>) -> CombinatorialBarcode {
    let slicing = canonical_slicing(h);
    let zz = zigzag(h, &slicing).expect("canonical slicing is valid");

    let mut intervals: Vec<RegionInterval> = Vec::new();
    let mut active: BTreeMap<Region, usize> = BTreeMap::new();
    let mut consistent = true;
    for r in zz.nodes[0].forest.regions() {
        active.insert(r.clone(), intervals.len());
        intervals.push(RegionInterval { label: r, start: 0, end: 0 });
    }
    for (k, a) in zz.arrows.iter().enumerate() {
        // Correspondence pairs oriented left-to-right across nodes (k, k+1).
        let pairs: Vec<(Region, Region)> = if a.from == k {
            a.map.clone()
        } else {
            a.map.iter().map(|(x, y)| (y.clone(), x.clone())).collect()
        };
        let mut next_active: BTreeMap<Region, usize> = BTreeMap::new();
        let mut continued: Vec<usize> = Vec::new();
        for (x, y) in &pairs {
            let Some(&fam) = active.get(x) else {
                consistent = false;
                continue;
            };
            match next_active.get(y) {
                None => {
                    // A family continues at most once; a split read backward
                    // carries only its first image, the rest start fresh.
                    if !continued.contains(&fam) {
                        continued.push(fam);
                        next_active.insert(y.clone(), fam);
                    }
                }
                Some(&other) => {
                    // Two regions land on one: the earlier-started family
                    // continues, the younger interval ends at node k.
                    let (elder, younger) = if intervals[other].start <= intervals[fam].start {
                        (other, fam)
                    } else {
                        (fam, other)
                    };
                    intervals[younger].end = k;
                    continued.push(fam);
                    next_active.insert(y.clone(), elder);
                }
            }
        }
        // Regions with no inherited family are newborn at node k+1.
        for r in zz.nodes[k + 1].forest.regions() {
            if !next_active.contains_key(&r) {
                next_active.insert(r.clone(), intervals.len());
                intervals.push(RegionInterval { label: r, start: k + 1, end: k + 1 });
            }
        }
        // Families that did not continue end at node k.
        let still: Vec<usize> = next_active.values().copied().collect();
        for &fam in active.values() {
            if !still.contains(&fam) {
                intervals[fam].end = k;
            }
        }
        for &fam in &still {
            intervals[fam].end = k + 1;
        }
        if next_active.len() != zz.nodes[k + 1].poset.len() {
            consistent = false;
        }
        active = next_active;
    }
    CombinatorialBarcode { intervals, decomposable: consistent }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{shotglass, worm};
    use super::super::{poset_isomorphic, EmbeddingHistory, Event, Region};
    use super::*;

    /// Expected (left, right) arrow shapes per event kind, as
    /// (points-right, injective, surjective).
    fn expected_shapes(kind: &str) -> ((bool, bool, bool), (bool, bool, bool)) {
        match kind {
            "min" => ((false, true, true), (true, true, false)),
            "max" => ((false, true, false), (true, true, true)),
            "merge_nn" => ((false, true, true), (true, false, true)),
            "split_nn" => ((false, false, true), (true, true, true)),
            "merge_n" => ((false, true, true), (false, true, false)),
            "split_n" => ((true, true, false), (true, true, true)),
            _ => unreachable!(),
        }
    }

    pub(crate) fn check_arrow_table(h: &EmbeddingHistory<f64>) {
        let zz = zigzag(h, &canonical_slicing(h)).unwrap();
        assert_eq!(zz.arrows.len(), 2 * h.events().len());
        for (i, ev) in h.events().iter().enumerate() {
            let left = &zz.arrows[2 * i];
            let right = &zz.arrows[2 * i + 1];
            let (el, er) = expected_shapes(ev.kind_str());
            for (arrow, exp, side) in [(left, el, "left"), (right, er, "right")] {
                assert_eq!(
                    (arrow.shape.rightward, arrow.shape.injective, arrow.shape.surjective),
                    exp,
                    "{} arrow of event {i} ({})",
                    side,
                    ev.kind_str()
                );
                assert_eq!(arrow.shape.iso, arrow.shape.injective && arrow.shape.surjective);
            }
        }
    }

    #[test]
    fn worm_and_shotglass_match_the_arrow_table() {
        check_arrow_table(&worm());
        check_arrow_table(&shotglass());
    }

    #[test]
    fn split_nn_history_matches_the_arrow_table() {
        let h = EmbeddingHistory::new(vec![
            Event::Min { t: 0.0, circle: "A".into(), region: Region::Outer },
            Event::SplitNonNesting {
                t: 1.0,
                circle: "A".into(),
                halves: [("X".into(), vec![]), ("Y".into(), vec![])],
            },
            Event::Max { t: 2.0, circle: "X".into() },
            Event::Max { t: 3.0, circle: "Y".into() },
        ])
        .unwrap();
        check_arrow_table(&h);
    }

    #[test]
    fn critical_posets_sit_on_the_iso_side() {
        // The worm's merge: N_c isomorphic to the slice below, surjecting
        // onto the one above; the shotglass's nesting merge points its
        // second arrow backward.
        let w = worm();
        let zz = zigzag(&w, &canonical_slicing(&w)).unwrap();
        let merge_left = &zz.arrows[2 * 2];
        assert!(merge_left.shape.iso);
        let merge_right = &zz.arrows[2 * 2 + 1];
        assert!(merge_right.shape.surjective && !merge_right.shape.injective);
        // Element correspondence per the figure: both circles map onto the
        // merged one.
        let merged: Vec<&(Region, Region)> = merge_right
            .map
            .iter()
            .filter(|(_, y)| *y == Region::Circle("M".into()))
            .collect();
        assert_eq!(merged.len(), 2);
    }

    #[test]
    fn bad_slicings_are_rejected() {
        let w = worm();
        assert!(zigzag(&w, &[0.5, 1.5]).is_err());
        assert!(zigzag(&w, &[-0.5, 0.5, 1.5, 2.5, 2.7]).is_err());
        assert!(zigzag(&w, &[-0.5, 0.5, 1.5, 2.5, 3.5]).is_ok());
    }

    #[test]
    fn same_gap_posets_are_isomorphic() {
        let h = shotglass();
        for (a, b) in [(0.2, 0.8), (1.1, 1.9), (2.3, 2.6), (3.5, 9.0)] {
            let pa = h.poset_at(a).unwrap();
            let pb = h.poset_at(b).unwrap();
            assert!(poset_isomorphic(&pa, &pb));
        }
    }

    #[test]
    fn galois_view_straightens_forward() {
        let s = shotglass();
        let zz = zigzag(&s, &canonical_slicing(&s)).unwrap();
        let view = zz.straightened();
        assert_eq!(view.caveat, GALOIS_CAVEAT);
        assert_eq!(view.maps.len(), zz.arrows.len());
        for (k, m) in view.maps.iter().enumerate() {
            assert_eq!((m.from, m.to), (k, k + 1));
        }
        // The nesting merge's reversed arrow: the adjoint sends the annulus
        // onto the merged disk and the sealed inner disk has a defined max
        // only when something maps below it.
        let merge_right = &view.maps[5];
        assert!(!merge_right.exact);
    }

    #[test]
    fn combinatorial_barcode_examples() {
        // Single min/max: the everlasting outer region plus one disk.
        let h = EmbeddingHistory::new(vec![
            Event::Min { t: 0.0, circle: "A".into(), region: Region::Outer },
            Event::Max { t: 1.0, circle: "A".into() },
        ])
        .unwrap();
        let cb = combinatorial_barcode(&h);
        assert!(cb.decomposable);
        assert_eq!(cb.intervals.len(), 2);
        let outer = cb.intervals.iter().find(|i| i.label == Region::Outer).unwrap();
        assert_eq!((outer.start, outer.end), (0, 4));
        let disk = cb.intervals.iter().find(|i| i.label != Region::Outer).unwrap();
        assert_eq!((disk.start, disk.end), (2, 2));

        // Worm: outer everlasting, two disks, the merged region continuing
        // the elder family.
        let cb = combinatorial_barcode(&worm());
        assert!(cb.decomposable);
        assert_eq!(cb.intervals.len(), 3);
        let spans: Vec<(usize, usize)> =
            cb.intervals.iter().map(|i| (i.start, i.end)).collect();
        assert!(spans.contains(&(0, 8)));
        assert!(spans.contains(&(2, 6)));
        assert!(spans.contains(&(4, 5)));

        // Shotglass: the region born at the nesting split lives between the
        // split and the merge.
        let cb = combinatorial_barcode(&shotglass());
        assert!(cb.decomposable);
        assert_eq!(cb.intervals.len(), 3);
        let spans: Vec<(usize, usize)> =
            cb.intervals.iter().map(|i| (i.start, i.end)).collect();
        assert!(spans.contains(&(0, 8)));
        assert!(spans.contains(&(2, 6)));
        assert!(spans.contains(&(3, 5)));
    }
}
