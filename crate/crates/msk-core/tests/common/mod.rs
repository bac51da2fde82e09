//! Shared fixtures, seeded generators, and independent oracles for the
//! integration suites.

#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use msk_core::{Bar, Barcode, BarcodeFlavor, Endpoint, EndpointType};
use msk_core::persistence::DecoratedMsGraph;
use msk_core::slices::{
    canonical_slicing, zigzag, CircleId, EmbeddingHistory, Event, NestingForest, Region,
};
use msk_core::MsGraph;

pub fn fixture(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("fixture {path}: {e}"))
}

pub fn fig2() -> MsGraph {
    msk_core::io::parse_graph(&fixture("fig2.graph.json")).unwrap().0
}

pub fn fig3_left() -> DecoratedMsGraph<f64> {
    msk_core::io::parse_decorated_graph(&fixture("fig3_left.graph.json")).unwrap()
}

pub fn fig3_right() -> DecoratedMsGraph<f64> {
    msk_core::io::parse_decorated_graph(&fixture("fig3_right.graph.json")).unwrap()
}

pub fn worm() -> EmbeddingHistory<f64> {
    msk_core::io::parse_history(&fixture("worm.history.json")).unwrap()
}

pub fn shotglass() -> EmbeddingHistory<f64> {
    msk_core::io::parse_history(&fixture("shotglass.history.json")).unwrap()
}

pub fn nested_barcode(n: usize) -> Barcode<f64> {
    msk_core::io::parse_barcode(&fixture(&format!("nested{n}.barcode.json"))).unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random valid embedding history with at most `max_events` events.
pub fn random_history(rng: &mut ChaCha8Rng, max_events: usize) -> EmbeddingHistory<f64> {
    assert!(max_events >= 2);
    let mut forest = NestingForest::empty();
    let mut events: Vec<Event<f64>> = Vec::new();
    let mut next_id = 0usize;
    let fresh = |next_id: &mut usize| {
        let c = CircleId::from(format!("r{next_id}"));
        *next_id += 1;
        c
    };
    let mut t = 0.0f64;
    loop {
        t += 1.0;
        let alive = forest.len();
        let remaining = max_events - events.len();
        if alive == 0 && !events.is_empty() {
            break;
        }
        let must_close = alive >= remaining;
        let circles: Vec<CircleId> = forest.circles().cloned().collect();
        let childless: Vec<CircleId> = circles
            .iter()
            .filter(|c| forest.children(&Region::Circle((*c).clone())).is_empty())
            .cloned()
            .collect();
        let ev = if events.is_empty() {
            Event::Min { t, circle: fresh(&mut next_id), region: Region::Outer }
        } else if must_close {
            let c = childless.choose(rng).expect("a leaf circle always exists").clone();
            Event::Max { t, circle: c }
        } else {
            // Kinds weighted toward additions early, removals late.
            let mut options: Vec<u8> = vec![0];
            if !childless.is_empty() {
                options.push(1);
            }
            let siblings: Vec<(CircleId, CircleId)> = sibling_pairs(&forest);
            if !siblings.is_empty() {
                options.push(2);
            }
            let nested: Vec<(CircleId, CircleId)> = parent_child_pairs(&forest);
            if !nested.is_empty() {
                options.push(3);
            }
            if !circles.is_empty() && remaining > alive + 1 {
                options.push(4);
                options.push(5);
            }
            match *options.choose(rng).unwrap() {
                0 => {
                    if remaining > alive + 1 {
                        let regions = forest.regions();
                        let region = regions.choose(rng).unwrap().clone();
                        Event::Min { t, circle: fresh(&mut next_id), region }
                    } else {
                        let c = childless.choose(rng).unwrap().clone();
                        Event::Max { t, circle: c }
                    }
                }
                1 => {
                    let c = childless.choose(rng).unwrap().clone();
                    Event::Max { t, circle: c }
                }
                2 => {
                    let (a, b) = sibling_pairs(&forest).choose(rng).unwrap().clone();
                    Event::MergeNonNesting { t, a, b, merged: fresh(&mut next_id) }
                }
                3 => {
                    let (outer, inner) = parent_child_pairs(&forest).choose(rng).unwrap().clone();
                    Event::MergeNesting { t, outer, inner, merged: fresh(&mut next_id) }
                }
                4 => {
                    let c = circles.choose(rng).unwrap().clone();
                    let kids = forest.children(&Region::Circle(c.clone()));
                    let moved: Vec<CircleId> =
                        kids.into_iter().filter(|_| rng.gen_bool(0.5)).collect();
                    let h0 = fresh(&mut next_id);
                    let h1 = fresh(&mut next_id);
                    let kept = forest
                        .children(&Region::Circle(c.clone()))
                        .into_iter()
                        .filter(|k| !moved.contains(k))
                        .collect();
                    Event::SplitNonNesting { t, circle: c, halves: [(h0, kept), (h1, moved)] }
                }
                _ => {
                    let c = circles.choose(rng).unwrap().clone();
                    let parent = forest.parent_region(&c).unwrap();
                    let captured: Vec<CircleId> = forest
                        .children(&parent)
                        .into_iter()
                        .filter(|x| *x != c && rng.gen_bool(0.5))
                        .collect();
                    let outer = fresh(&mut next_id);
                    let inner = fresh(&mut next_id);
                    Event::SplitNesting { t, circle: c, outer, inner, captured }
                }
            }
        };
        forest = forest.apply(&ev).expect("generated event applies");
        events.push(ev);
        if forest.is_empty() {
            break;
        }
    }
    EmbeddingHistory::new(events).expect("generated history is valid")
}

fn sibling_pairs(forest: &NestingForest) -> Vec<(CircleId, CircleId)> {
    let mut out = Vec::new();
    for region in forest.regions() {
        let kids = forest.children(&region);
        for i in 0..kids.len() {
            for j in i + 1..kids.len() {
                out.push((kids[i].clone(), kids[j].clone()));
            }
        }
    }
    out
}

fn parent_child_pairs(forest: &NestingForest) -> Vec<(CircleId, CircleId)> {
    let mut out = Vec::new();
    for c in forest.circles() {
        if let Some(Some(p)) = forest.parent(c) {
            out.push((p.clone(), c.clone()));
        }
    }
    out
}

/// A random realizable level-set barcode with `n` bars: a closed master
/// containing `n - 1` bars with random endpoint types.
pub fn random_realizable_barcode(rng: &mut ChaCha8Rng, n: usize) -> Barcode<f64> {
    assert!(n >= 1);
    let mut cuts: Vec<f64> = Vec::new();
    while cuts.len() < 2 * n - 2 {
        let x = (rng.gen_range(1..1000) as f64) / 10.0;
        if !cuts.contains(&x) {
            cuts.push(x);
        }
    }
    cuts.sort_by(f64::total_cmp);
    let mut bars = vec![Bar::finite(0, Endpoint::closed(0.0), Endpoint::closed(100.0))];
    // Nest by pairing a random open cut with a later close, stack-free:
    // simply pair consecutive values after a shuffle of pair assignments.
    let mut order: Vec<usize> = (0..n - 1).collect();
    order.shuffle(rng);
    for k in order {
        let (lo, hi) = (cuts[2 * k], cuts[2 * k + 1]);
        let bty = if rng.gen_bool(0.5) { EndpointType::Closed } else { EndpointType::Open };
        let dty = if rng.gen_bool(0.5) { EndpointType::Closed } else { EndpointType::Open };
        bars.push(Bar::finite(0, Endpoint { value: lo, ty: bty }, Endpoint { value: hi, ty: dty }));
    }
    Barcode::new(BarcodeFlavor::Levelset, bars)
}

/// Expected zigzag arrow shapes per event kind:
/// ((left rightward, inj, surj), (right rightward, inj, surj)).
pub fn expected_arrow_shapes(kind: &str) -> ((bool, bool, bool), (bool, bool, bool)) {
    match kind {
        "min" => ((false, true, true), (true, true, false)),
        "max" => ((false, true, false), (true, true, true)),
        "merge_nn" => ((false, true, true), (true, false, true)),
        "split_nn" => ((false, false, true), (true, true, true)),
        "merge_n" => ((false, true, true), (false, true, false)),
        "split_n" => ((true, true, false), (true, true, true)),
        other => panic!("unknown event kind {other}"),
    }
}

/// Asserts the full six-case arrow table on one history.
pub fn assert_arrow_table(h: &EmbeddingHistory<f64>) {
    let zz = zigzag(h, &canonical_slicing(h)).expect("canonical slicing");
    assert_eq!(zz.arrows.len(), 2 * h.events().len());
    for (i, ev) in h.events().iter().enumerate() {
        let (el, er) = expected_arrow_shapes(ev.kind_str());
        for (arrow, exp, side) in
            [(&zz.arrows[2 * i], el, "left"), (&zz.arrows[2 * i + 1], er, "right")]
        {
            assert_eq!(
                (arrow.shape.rightward, arrow.shape.injective, arrow.shape.surjective),
                exp,
                "{side} arrow of event {i} ({})",
                ev.kind_str()
            );
        }
    }
}

/// Renames every circle id in a history (for equivalence-implication tests).
pub fn renamed_history(h: &EmbeddingHistory<f64>, suffix: &str) -> EmbeddingHistory<f64> {
    let ren = |c: &CircleId| CircleId::from(format!("{c}{suffix}"));
    let events = h
        .events()
        .iter()
        .map(|ev| match ev {
            Event::Min { t, circle, region } => Event::Min {
                t: *t,
                circle: ren(circle),
                region: match region {
                    Region::Outer => Region::Outer,
                    Region::Circle(c) => Region::Circle(ren(c)),
                },
            },
            Event::Max { t, circle } => Event::Max { t: *t, circle: ren(circle) },
            Event::MergeNonNesting { t, a, b, merged } => Event::MergeNonNesting {
                t: *t,
                a: ren(a),
                b: ren(b),
                merged: ren(merged),
            },
            Event::MergeNesting { t, outer, inner, merged } => Event::MergeNesting {
                t: *t,
                outer: ren(outer),
                inner: ren(inner),
                merged: ren(merged),
            },
            Event::SplitNonNesting { t, circle, halves } => Event::SplitNonNesting {
                t: *t,
                circle: ren(circle),
                halves: [
                    (ren(&halves[0].0), halves[0].1.iter().map(|c| ren(c)).collect()),
                    (ren(&halves[1].0), halves[1].1.iter().map(|c| ren(c)).collect()),
                ],
            },
            Event::SplitNesting { t, circle, outer, inner, captured } => Event::SplitNesting {
                t: *t,
                circle: ren(circle),
                outer: ren(outer),
                inner: ren(inner),
                captured: captured.iter().map(|c| ren(c)).collect(),
            },
        })
        .collect();
    EmbeddingHistory::new(events).expect("renaming preserves validity")
}

/// Random distinct Morse-consistent decoration: minima below saddles below
/// maxima, random within each band.
pub fn random_decoration(rng: &mut ChaCha8Rng, g: &MsGraph) -> DecoratedMsGraph<f64> {
    let mut values: Vec<f64> = Vec::new();
    for v in g.vertices() {
        let base = match g.vertex_index(v) {
            msk_core::MorseIndex::Minimum => 0.0,
            msk_core::MorseIndex::Saddle => 100.0,
            msk_core::MorseIndex::Maximum => 200.0,
        };
        loop {
            let x = base + (rng.gen_range(0..9000) as f64) / 100.0;
            if !values.contains(&x) {
                values.push(x);
                break;
            }
        }
    }
    DecoratedMsGraph::new(g.clone(), values).expect("distinct values")
}
