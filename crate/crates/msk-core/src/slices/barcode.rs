//! Zero-dimensional level-set barcodes of embedding histories.
//!
//! One bar per tracked circle family. Elder rule at merges: the family born
//! earlier survives. At splits the family continues along the branch whose
//! descendants live longest (ties go to the structurally first branch: the
//! first half of a non-nesting split, the outer circle of a nesting one);
//! the other branch starts a new family with an open birth. Minima and
//! maxima contribute closed endpoints, merges and splits open ones.

use std::collections::BTreeMap;

use crate::barcode::{Bar, Barcode, BarcodeFlavor, Endpoint};
use crate::scalar::{cmp_scalar, Scalar};

use super::{CircleId, EmbeddingHistory, Event};

/// Latest terminal event time reachable from each circle.
fn reach_times<V: Scalar>(h: &EmbeddingHistory<V>) -> BTreeMap<CircleId, V> {
    let mut reach: BTreeMap<CircleId, V> = BTreeMap::new();
    for ev in h.events().iter().rev() {
        match ev {
            Event::Min { .. } => {}
            Event::Max { t, circle } => {
                reach.insert(circle.clone(), *t);
            }
            Event::MergeNonNesting { a, b, merged, .. } => {
                let r = reach[merged];
                reach.insert(a.clone(), r);
                reach.insert(b.clone(), r);
            }
            Event::MergeNesting { outer, inner, merged, .. } => {
                let r = reach[merged];
                reach.insert(outer.clone(), r);
                reach.insert(inner.clone(), r);
            }
            Event::SplitNonNesting { circle, halves, .. } => {
                let r0 = reach[&halves[0].0];
                let r1 = reach[&halves[1].0];
                reach.insert(circle.clone(), if r0 > r1 { r0 } else { r1 });
            }
            Event::SplitNesting { circle, outer, inner, .. } => {
                let (ro, ri) = (reach[outer], reach[inner]);
                reach.insert(circle.clone(), if ro > ri { ro } else { ri });
            }
        }
    }
    reach
}

struct Family<V> {
    birth: Endpoint<V>,
}

/// The level-set barcode of a history: dimension 0, level-set flavor.
pub fn levelset_barcode<V: Scalar>(h: &EmbeddingHistory<V>) -> Barcode<V> {
    let reach = reach_times(h);
    let mut families: Vec<Family<V>> = Vec::new();
    let mut carrier: BTreeMap<CircleId, usize> = BTreeMap::new();
    let mut bars: Vec<Bar<V>> = Vec::new();

    let merge = |t: V,
                     x: &CircleId,
                     y: &CircleId,
                     merged: &CircleId,
                     carrier: &mut BTreeMap<CircleId, usize>,
                     families: &mut Vec<Family<V>>,
                     bars: &mut Vec<Bar<V>>| {
        let fx = carrier[x];
        let fy = carrier[y];
        let (elder, younger) = match cmp_scalar(&families[fx].birth.value, &families[fy].birth.value)
        {
            std::cmp::Ordering::Less => (fx, fy),
            _ => (fy, fx),
        };
        bars.push(Bar::finite(0, families[younger].birth, Endpoint::open(t)));
        carrier.insert(merged.clone(), elder);
    };

    for ev in h.events() {
        match ev {
            Event::Min { t, circle, .. } => {
                carrier.insert(circle.clone(), families.len());
                families.push(Family { birth: Endpoint::closed(*t) });
            }
            Event::Max { t, circle } => {
                let f = carrier[circle];
                bars.push(Bar::finite(0, families[f].birth, Endpoint::closed(*t)));
            }
            Event::MergeNonNesting { t, a, b, merged } => {
                merge(*t, a, b, merged, &mut carrier, &mut families, &mut bars);
            }
            Event::MergeNesting { t, outer, inner, merged } => {
                merge(*t, outer, inner, merged, &mut carrier, &mut families, &mut bars);
            }
            Event::SplitNonNesting { t, circle, halves } => {
                let f = carrier[circle];
                let keep_first = reach[&halves[0].0] >= reach[&halves[1].0];
                let (keep, fresh) =
                    if keep_first { (&halves[0].0, &halves[1].0) } else { (&halves[1].0, &halves[0].0) };
                carrier.insert(keep.clone(), f);
                carrier.insert(fresh.clone(), families.len());
                families.push(Family { birth: Endpoint::open(*t) });
            }
            Event::SplitNesting { t, circle, outer, inner, .. } => {
                let f = carrier[circle];
                let keep_outer = reach[outer] >= reach[inner];
                let (keep, fresh) = if keep_outer { (outer, inner) } else { (inner, outer) };
                carrier.insert(keep.clone(), f);
                carrier.insert(fresh.clone(), families.len());
                families.push(Family { birth: Endpoint::open(*t) });
            }
        }
    }
    Barcode::new(BarcodeFlavor::Levelset, bars)
}
