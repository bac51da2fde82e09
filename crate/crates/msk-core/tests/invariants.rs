//! Property suites for the spec-level invariants that are not tied to a
//! single worked example.

mod common;

use std::collections::HashMap;

use proptest::prelude::*;
use rand::prelude::*;

use msk_core::{BarMatch, Death, EndpointType};
use msk_core::moves::{self, ConnectOptions};
use msk_core::persistence::{merge_tree, sublevel_barcode};
use msk_core::slices::{self, nesting_poset, poset_isomorphic, Region};
use msk_core::{MorseIndex, MsGraph};

use common::*;

#[test]
fn census_graphs_have_four_edges_per_saddle() {
    let census = moves::explore_graphs(&MsGraph::base_sphere(), 10).unwrap();
    for g in census.values() {
        assert_eq!(g.edge_count(), 4 * g.count_index(MorseIndex::Saddle));
        let faces = g.faces();
        if !g.is_base_sphere() {
            assert_eq!(
                g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64,
                2
            );
        }
        // Every saddle's rotation alternates max/min.
        for v in g.vertices() {
            if g.vertex_index(v) == MorseIndex::Saddle {
                let idx: Vec<MorseIndex> =
                    g.rotation(v).iter().map(|&d| g.vertex_index(g.dart_target(d))).collect();
                assert_eq!(idx[0], idx[2]);
                assert_eq!(idx[1], idx[3]);
                assert_ne!(idx[0], idx[1]);
            }
        }
    }
}

#[test]
fn additions_add_one_saddle_and_one_extremum() {
    let census = moves::explore_graphs(&MsGraph::base_sphere(), 8).unwrap();
    for g in census.values() {
        for m in moves::enumerate_moves(g).unwrap() {
            if !m.is_addition() {
                continue;
            }
            let h = moves::apply_move(g, &m).unwrap();
            assert_eq!(
                h.count_index(MorseIndex::Saddle),
                g.count_index(MorseIndex::Saddle) + 1
            );
            let extrema = |k: &MsGraph| {
                k.count_index(MorseIndex::Minimum) + k.count_index(MorseIndex::Maximum)
            };
            assert_eq!(extrema(&h), extrema(g) + 1);
        }
    }
}

#[test]
fn connect_is_symmetric_on_census_pairs() {
    let census: Vec<MsGraph> =
        moves::explore_graphs(&MsGraph::base_sphere(), 8).unwrap().into_values().collect();
    let mut rng = seeded(42);
    for _ in 0..12 {
        let g = census.choose(&mut rng).unwrap();
        let h = census.choose(&mut rng).unwrap();
        for depth in [2, 4] {
            let opts = ConnectOptions { max_vertices: Some(8) };
            let fwd = moves::connect(g, h, depth, opts).unwrap().is_some();
            let bwd = moves::connect(h, g, depth, opts).unwrap().is_some();
            assert_eq!(fwd, bwd, "connect symmetry at depth {depth}");
        }
    }
}

proptest! {
    #[test]
    fn canonical_code_is_a_congruence(perm_seed in 0u64..1000) {
        let g = fig2();
        let mut rng = seeded(perm_seed);
        let mut names: Vec<String> = g.vertices().map(|v| format!("p{v}")).collect();
        names.shuffle(&mut rng);
        let vmap: HashMap<String, String> = g
            .vertices()
            .map(|v| (g.vertex_label(v).to_string(), names[v].clone()))
            .collect();
        let h = g.relabeled(&vmap, &HashMap::new(), &HashMap::new());
        prop_assert_eq!(g.canonical_code().unwrap(), h.canonical_code().unwrap());
    }

    #[test]
    fn lower_bound_is_rescaling_invariant(scale in 0.001f64..1000.0, shift in -100.0f64..100.0) {
        for n in 1..=3usize {
            let b = nested_barcode(n);
            let rescaled = msk_core::Barcode::new(
                b.flavor,
                b.bars
                    .iter()
                    .map(|bar| msk_core::Bar {
                        dim: bar.dim,
                        birth: msk_core::Endpoint {
                            value: bar.birth.value * scale + shift,
                            ty: bar.birth.ty,
                        },
                        death: match bar.death {
                            Death::Infinite => Death::Infinite,
                            Death::Finite(e) => Death::Finite(msk_core::Endpoint {
                                value: e.value * scale + shift,
                                ty: e.ty,
                            }),
                        },
                    })
                    .collect(),
            );
            prop_assert_eq!(
                msk_core::realize::lower_bound(&b).unwrap(),
                msk_core::realize::lower_bound(&rescaled).unwrap()
            );
        }
    }
}

#[test]
fn barcode_bookkeeping_over_decorated_census() {
    let census = moves::explore_graphs(&MsGraph::base_sphere(), 10).unwrap();
    let mut rng = seeded(11);
    for g in census.values() {
        let dg = random_decoration(&mut rng, g);
        let barcode = sublevel_barcode(&dg);
        let minima = g.count_index(MorseIndex::Minimum);
        let saddles = g.count_index(MorseIndex::Saddle);
        let maxima = g.count_index(MorseIndex::Maximum);

        assert_eq!(barcode.bars_of_dim(0).count(), minima, "one dim-0 bar per minimum");
        let essential = |dim: u8| {
            barcode
                .bars_of_dim(dim)
                .filter(|b| matches!(b.death, Death::Infinite))
                .count()
        };
        assert_eq!(essential(0), 1);
        assert_eq!(essential(1), 0);
        assert_eq!(essential(2), 1);

        // Every saddle is paired exactly once: as a dim-0 death or a dim-1
        // birth. Every maximum: a dim-1 death or the dim-2 essential birth.
        let saddle_uses = barcode.bars_of_dim(0).filter(|b| b.death_value().is_some()).count()
            + barcode.bars_of_dim(1).count();
        assert_eq!(saddle_uses, saddles);
        let max_uses = barcode.bars_of_dim(1).filter(|b| b.death_value().is_some()).count()
            + essential(2);
        assert_eq!(max_uses, maxima);

        // Merge-tree leaves match dim-0 births; finite dim-0 deaths are the
        // join heights (elder rule).
        let tree = merge_tree(&dg);
        let mut leaf_heights: Vec<f64> =
            tree.leaves().iter().map(|&i| tree.nodes[i].height).collect();
        leaf_heights.sort_by(f64::total_cmp);
        let mut births: Vec<f64> = barcode.bars_of_dim(0).map(|b| b.birth.value).collect();
        births.sort_by(f64::total_cmp);
        assert_eq!(leaf_heights, births);
        let mut join_heights: Vec<f64> = (0..tree.nodes.len())
            .filter(|&i| {
                tree.nodes.iter().filter(|n| n.parent == Some(i)).count() >= 2
            })
            .map(|i| tree.nodes[i].height)
            .collect();
        join_heights.sort_by(f64::total_cmp);
        let mut deaths: Vec<f64> =
            barcode.bars_of_dim(0).filter_map(|b| b.death_value()).collect();
        deaths.sort_by(f64::total_cmp);
        assert_eq!(join_heights, deaths);
    }
}

#[test]
fn reeb_degrees_on_decorated_census() {
    let census = moves::explore_graphs(&MsGraph::base_sphere(), 10).unwrap();
    let mut rng = seeded(12);
    for g in census.values() {
        let dg = random_decoration(&mut rng, g);
        let reeb = msk_core::persistence::reeb_graph(&dg);
        assert!(reeb.is_tree());
        for (i, n) in reeb.nodes.iter().enumerate() {
            let v = g.vertex_by_label(&n.label).unwrap();
            let expect = if g.vertex_index(v) == MorseIndex::Saddle { 3 } else { 1 };
            assert_eq!(reeb.degree(i), expect, "degree at {}", n.label);
        }
    }
}

#[test]
fn event_inverse_round_trips_on_random_forests() {
    let mut rng = seeded(13);
    for _ in 0..200 {
        let h = random_history(&mut rng, 10);
        // Every prefix forest changes by exactly one circle per event, and
        // the poset size tracks the circle count.
        let mut prev = h.forest_after(0);
        for (k, _) in h.events().iter().enumerate() {
            let next = h.forest_after(k + 1);
            let delta = next.len() as i64 - prev.len() as i64;
            assert_eq!(delta.abs(), 1, "event {k} changed circle count by {delta}");
            assert_eq!(nesting_poset(&next).len(), next.len() + 1);
            prev = next;
        }
    }
}

#[test]
fn poset_equivalence_gives_slicewise_isomorphic_posets() {
    let mut rng = seeded(14);
    for _ in 0..50 {
        let h = random_history(&mut rng, 10);
        let r = renamed_history(&h, "_x");
        assert!(slices::poset_equivalent(&h, &r));
        let times = h.times();
        let mut probes = vec![times[0] - 0.5];
        probes.extend(times.windows(2).map(|w| (w[0] + w[1]) / 2.0));
        probes.push(times[times.len() - 1] + 0.5);
        for t in probes {
            assert!(poset_isomorphic(
                &h.poset_at(t).unwrap(),
                &r.poset_at(t).unwrap()
            ));
        }
        // Strict barcode equality, endpoint types included.
        assert!(slices::levelset_barcode(&h)
            .matches(&slices::levelset_barcode(&r), BarMatch::Strict));
    }
}

#[test]
fn levelset_endpoint_types_follow_event_kinds() {
    let mut rng = seeded(15);
    for _ in 0..100 {
        let h = random_history(&mut rng, 10);
        let barcode = slices::levelset_barcode(&h);
        let kind_at = |t: f64| {
            h.events().iter().find(|e| e.time() == t).map(|e| e.kind_str()).unwrap()
        };
        for bar in &barcode.bars {
            match bar.birth.ty {
                EndpointType::Closed => assert_eq!(kind_at(bar.birth.value), "min"),
                EndpointType::Open => {
                    assert!(kind_at(bar.birth.value).starts_with("split"))
                }
            }
            if let Death::Finite(d) = bar.death {
                match d.ty {
                    EndpointType::Closed => assert_eq!(kind_at(d.value), "max"),
                    EndpointType::Open => assert!(kind_at(d.value).starts_with("merge")),
                }
            }
        }
        // One bar per min/split, one death per max/merge.
        let births = h
            .events()
            .iter()
            .filter(|e| matches!(e.kind_str(), "min" | "split_nn" | "split_n"))
            .count();
        assert_eq!(barcode.bars.len(), births);
    }
}

#[test]
fn combinatorial_barcode_is_decomposable_on_random_histories() {
    let mut rng = seeded(16);
    for _ in 0..100 {
        let h = random_history(&mut rng, 10);
        let cb = slices::combinatorial_barcode(&h);
        assert!(cb.decomposable);
        // Region intervals cover every node's poset exactly once: the
        // element counts add up.
        let zz = slices::zigzag(&h, &slices::canonical_slicing(&h)).unwrap();
        for (k, node) in zz.nodes.iter().enumerate() {
            let covering =
                cb.intervals.iter().filter(|i| i.start <= k && k <= i.end).count();
            assert_eq!(covering, node.poset.len(), "node {k}");
        }
    }
}

#[test]
fn scalar_generic_instantiates_at_f32() {
    // The slices pipeline is generic over the scalar; run it at f32.
    let events: Vec<slices::Event<f32>> = vec![
        slices::Event::Min { t: 0.0, circle: "A".into(), region: Region::Outer },
        slices::Event::Min { t: 1.0, circle: "B".into(), region: Region::Outer },
        slices::Event::MergeNonNesting { t: 2.0, a: "A".into(), b: "B".into(), merged: "M".into() },
        slices::Event::Max { t: 3.0, circle: "M".into() },
    ];
    let h = slices::EmbeddingHistory::new(events).unwrap();
    let b = slices::levelset_barcode(&h);
    assert_eq!(b.bars.len(), 2);
    assert_arrow_table_f32(&h);
}

fn assert_arrow_table_f32(h: &slices::EmbeddingHistory<f32>) {
    let zz = slices::zigzag(h, &slices::canonical_slicing(h)).unwrap();
    assert_eq!(zz.arrows.len(), 2 * h.events().len());
}
