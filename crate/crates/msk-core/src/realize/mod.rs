//! Counting and enumerating embedding histories that realize a barcode.
//!
//! The enumeration walks bar endpoints in time order. Endpoint types fix the
//! event kinds (closed: minimum or maximum; open: splitting or merging
//! saddle); the free choices are where a minimum lands, which circle splits
//! and what it captures, and which older circle absorbs a dying one. Every
//! candidate is verified by round-tripping through the level-set barcode and
//! classes are deduplicated by canonical history code.

use std::collections::{BTreeMap, BTreeSet};

use crate::barcode::{Bar, BarMatch, Barcode, BarcodeFlavor, Death, EndpointType};
use crate::error::{Error, Result};
use crate::persistence::{ReebGraph, ReebNode};
use crate::scalar::{cmp_scalar, Scalar};
use crate::slices::{
    history_code, levelset_barcode, CircleId, EmbeddingHistory, Event, NestingForest, Region,
};

/// Number of bars strictly containing bar `j` (0-based index into the
/// nesting order largest-to-smallest). Containment compares values only.
pub fn mu<V: Scalar>(b: &Barcode<V>, j: usize) -> Result<usize> {
    let bars = b.bars_by_decreasing_length();
    let bar = bars
        .get(j)
        .ok_or_else(|| Error::rejected(format!("bar index {j} out of range (N = {})", bars.len())))?;
    Ok(bars.iter().filter(|other| other.strictly_contains(bar)).count())
}

/// The counting bound `2^(N-1) * prod_{j=2..N} mu(I_j)` with bars indexed in
/// nesting order largest-to-smallest.
pub fn lower_bound<V: Scalar>(b: &Barcode<V>) -> Result<u128> {
    let n = b.len();
    if n == 0 {
        return Err(Error::rejected("the counting bound needs at least one bar"));
    }
    let mut out: u128 = 1 << (n - 1);
    for j in 1..n {
        out = out.saturating_mul(mu(b, j)? as u128);
    }
    Ok(out)
}

/// Realizability check; `Err` carries the reason.
pub fn check_realizable<V: Scalar>(b: &Barcode<V>) -> Result<()> {
    if b.is_empty() {
        return Err(Error::rejected("a realizable barcode needs at least one bar"));
    }
    if b.bars.iter().any(|bar| bar.dim != 0) {
        return Err(Error::rejected("realizability covers dimension-0 intervals only"));
    }
    b.check_excellent()?;
    let maximal: Vec<&Bar<V>> = b
        .bars
        .iter()
        .filter(|bar| !b.bars.iter().any(|o| o.strictly_contains(bar)))
        .collect();
    match b.flavor {
        BarcodeFlavor::Sublevel => {
            if maximal.len() != 1 {
                return Err(Error::rejected("no single containing bar"));
            }
            let master = maximal[0];
            if master.birth.ty != EndpointType::Closed {
                return Err(Error::rejected("the outermost bar must have a closed birth"));
            }
            if let Death::Finite(d) = master.death {
                if d.ty != EndpointType::Closed {
                    return Err(Error::rejected(
                        "the outermost sublevel bar must be essential or closed",
                    ));
                }
            }
            for bar in &b.bars {
                if std::ptr::eq(*maximal.first().unwrap(), bar) {
                    continue;
                }
                match bar.death {
                    Death::Infinite => {
                        return Err(Error::rejected("only the outermost bar may be essential"))
                    }
                    Death::Finite(d) => {
                        if bar.birth.ty == EndpointType::Open {
                            return Err(Error::rejected("open bar forbidden in sublevel flavor"));
                        }
                        if d.ty == EndpointType::Closed {
                            return Err(Error::rejected(
                                "closed interval nested in another closed interval is forbidden",
                            ));
                        }
                    }
                }
            }
            Ok(())
        }
        BarcodeFlavor::Levelset => {
            if b.bars.iter().any(|bar| matches!(bar.death, Death::Infinite)) {
                return Err(Error::rejected("level-set bars must be finite"));
            }
            if maximal.len() != 1 {
                return Err(Error::rejected("no single containing closed bar"));
            }
            let master = maximal[0];
            let closed = master.birth.ty == EndpointType::Closed
                && matches!(master.death, Death::Finite(d) if d.ty == EndpointType::Closed);
            if !closed {
                return Err(Error::rejected(
                    "the containing bar must be closed at both ends",
                ));
            }
            // Open endpoints of inner bars always find an attachment inside
            // the master, so containment under one closed bar suffices.
            Ok(())
        }
    }
}

pub fn is_realizable<V: Scalar>(b: &Barcode<V>) -> bool {
    check_realizable(b).is_ok()
}

#[derive(Debug, Clone, Copy)]
struct BarPlan<V> {
    birth: V,
    birth_open: bool,
    death: V,
    death_open: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EndpointKind {
    Birth(usize),
    Death(usize),
}

/// All embedding histories whose level-set barcode matches `b` under the
/// given comparison mode, up to poset equivalence, with each class verified
/// by round-tripping through [`levelset_barcode`].
pub fn enumerate_embeddings<V: Scalar>(
    b: &Barcode<V>,
    mode: BarMatch,
    max_bars: usize,
) -> Result<Vec<EmbeddingHistory<V>>> {
    check_realizable(b)?;
    if b.flavor != BarcodeFlavor::Levelset {
        return Err(Error::rejected("embedding enumeration expects the level-set flavor"));
    }
    if b.len() > max_bars {
        return Err(Error::rejected(format!(
            "barcode has {} bars, above the cap of {max_bars} (raise the cap to override)",
            b.len()
        )));
    }

    let bars: Vec<BarPlan<V>> = b
        .bars_by_decreasing_length()
        .iter()
        .map(|bar| {
            let d = match bar.death {
                Death::Finite(d) => d,
                Death::Infinite => unreachable!("checked finite"),
            };
            BarPlan {
                birth: bar.birth.value,
                birth_open: bar.birth.ty == EndpointType::Open,
                death: d.value,
                death_open: d.ty == EndpointType::Open,
            }
        })
        .collect();
    let mut endpoints: Vec<(V, EndpointKind)> = Vec::new();
    for (j, bar) in bars.iter().enumerate() {
        endpoints.push((bar.birth, EndpointKind::Birth(j)));
        endpoints.push((bar.death, EndpointKind::Death(j)));
    }
    endpoints.sort_by(|a, b| cmp_scalar(&a.0, &b.0));

    let mut dfs = Dfs {
        bars: &bars,
        endpoints: &endpoints,
        results: BTreeMap::new(),
        memo: BTreeSet::new(),
        next_id: 0,
        target: b,
        mode,
    };
    dfs.run(0, Vec::new(), NestingForest::empty(), BTreeMap::new());
    Ok(dfs.results.into_values().collect())
}

struct Dfs<'a, V: Scalar> {
    bars: &'a [BarPlan<V>],
    endpoints: &'a [(V, EndpointKind)],
    results: BTreeMap<String, EmbeddingHistory<V>>,
    memo: BTreeSet<(usize, String)>,
    next_id: usize,
    target: &'a Barcode<V>,
    mode: BarMatch,
}

impl<'a, V: Scalar> Dfs<'a, V> {
    fn fresh(&mut self) -> CircleId {
        let id = CircleId::from(format!("c{}", self.next_id));
        self.next_id += 1;
        id
    }

    fn run(
        &mut self,
        step: usize,
        events: Vec<Event<V>>,
        forest: NestingForest,
        carrier: BTreeMap<CircleId, usize>,
    ) {
        if step == self.endpoints.len() {
            let Ok(history) = EmbeddingHistory::new(events) else { return };
            if levelset_barcode(&history).matches(self.target, self.mode) {
                let code = history_code(&history);
                self.results.entry(code).or_insert(history);
            }
            return;
        }
        let key = (step, partial_key(&events, &carrier));
        if !self.memo.insert(key) {
            return;
        }

        let (t, kind) = self.endpoints[step];
        match kind {
            EndpointKind::Birth(j) if !self.bars[j].birth_open => {
                // Closed birth: a minimum in any region.
                for region in forest.regions() {
                    let c = self.fresh();
                    let ev = Event::Min { t, circle: c.clone(), region };
                    let next = forest.apply(&ev).expect("region exists");
                    let mut ev2 = events.clone();
                    ev2.push(ev);
                    let mut car2 = carrier.clone();
                    car2.insert(c, j);
                    self.run(step + 1, ev2, next, car2);
                    self.next_id -= 1;
                }
            }
            EndpointKind::Birth(j) => {
                // Open birth: split some circle whose bar dies later.
                let candidates: Vec<CircleId> = forest
                    .circles()
                    .filter(|c| self.bars[carrier[*c]].death > self.bars[j].death)
                    .cloned()
                    .collect();
                for c in candidates {
                    let k = carrier[&c];
                    // Non-nesting split: the moved children go to the branch
                    // that carries the newborn bar.
                    let kids = forest.children(&Region::Circle(c.clone()));
                    for moved in subsets(&kids) {
                        let kept: Vec<CircleId> =
                            kids.iter().filter(|x| !moved.contains(x)).cloned().collect();
                        let h0 = self.fresh();
                        let h1 = self.fresh();
                        let ev = Event::SplitNonNesting {
                            t,
                            circle: c.clone(),
                            halves: [(h0.clone(), kept), (h1.clone(), moved)],
                        };
                        let next = forest.apply(&ev).expect("valid split");
                        let mut ev2 = events.clone();
                        ev2.push(ev);
                        let mut car2 = carrier.clone();
                        car2.remove(&c);
                        car2.insert(h0, k);
                        car2.insert(h1, j);
                        self.run(step + 1, ev2, next, car2);
                        self.next_id -= 2;
                    }
                    // Nesting split: capture any sibling subset; both carrier
                    // assignments are structurally distinct.
                    let siblings: Vec<CircleId> = forest
                        .children(&forest.parent_region(&c).expect("circle in forest"))
                        .into_iter()
                        .filter(|x| x != &c)
                        .collect();
                    for captured in subsets(&siblings) {
                        for newborn_inner in [true, false] {
                            let outer = self.fresh();
                            let inner = self.fresh();
                            let ev = Event::SplitNesting {
                                t,
                                circle: c.clone(),
                                outer: outer.clone(),
                                inner: inner.clone(),
                                captured: captured.clone(),
                            };
                            let next = forest.apply(&ev).expect("valid split");
                            let mut ev2 = events.clone();
                            ev2.push(ev);
                            let mut car2 = carrier.clone();
                            car2.remove(&c);
                            if newborn_inner {
                                car2.insert(outer, k);
                                car2.insert(inner, j);
                            } else {
                                car2.insert(outer, j);
                                car2.insert(inner, k);
                            }
                            self.run(step + 1, ev2, next, car2);
                            self.next_id -= 2;
                        }
                    }
                }
            }
            EndpointKind::Death(j) if !self.bars[j].death_open => {
                // Closed death: the carrier must be a childless circle.
                let Some(c) = carrier.iter().find(|(_, &k)| k == j).map(|(c, _)| c.clone()) else {
                    return;
                };
                if !forest.children(&Region::Circle(c.clone())).is_empty() {
                    return;
                }
                let ev = Event::Max { t, circle: c.clone() };
                let next = forest.apply(&ev).expect("childless circle");
                let mut ev2 = events.clone();
                ev2.push(ev);
                let mut car2 = carrier.clone();
                car2.remove(&c);
                self.run(step + 1, ev2, next, car2);
            }
            EndpointKind::Death(j) => {
                // Open death: merge into an adjacent circle carrying an
                // older bar (so the elder rule kills exactly bar j).
                let Some(c) = carrier.iter().find(|(_, &k)| k == j).map(|(c, _)| c.clone()) else {
                    return;
                };
                let born_before = |p: &CircleId| self.bars[carrier[p]].birth < self.bars[j].birth;
                let parent = forest.parent_region(&c).expect("circle in forest");
                let mut options: Vec<Event<V>> = Vec::new();
                let merged = self.fresh();
                if let Region::Circle(p) = &parent {
                    if born_before(p) {
                        options.push(Event::MergeNesting {
                            t,
                            outer: p.clone(),
                            inner: c.clone(),
                            merged: merged.clone(),
                        });
                    }
                }
                for p in forest.children(&parent) {
                    if p != c && born_before(&p) {
                        options.push(Event::MergeNonNesting {
                            t,
                            a: c.clone(),
                            b: p.clone(),
                            merged: merged.clone(),
                        });
                    }
                }
                for p in forest.children(&Region::Circle(c.clone())) {
                    if born_before(&p) {
                        options.push(Event::MergeNesting {
                            t,
                            outer: c.clone(),
                            inner: p.clone(),
                            merged: merged.clone(),
                        });
                    }
                }
                for ev in options {
                    let partner_bar = match &ev {
                        Event::MergeNesting { outer, inner, .. } => {
                            let p = if *outer == c { inner } else { outer };
                            carrier[p]
                        }
                        Event::MergeNonNesting { b, .. } => carrier[b],
                        _ => unreachable!(),
                    };
                    let next = forest.apply(&ev).expect("valid merge");
                    let mut ev2 = events.clone();
                    ev2.push(ev);
                    let mut car2 = carrier.clone();
                    car2.retain(|_, &mut k| k != j && k != partner_bar);
                    car2.insert(merged.clone(), partner_bar);
                    self.run(step + 1, ev2, next, car2);
                }
                self.next_id -= 1;
            }
        }
    }
}

fn subsets(items: &[CircleId]) -> Vec<Vec<CircleId>> {
    let mut out = vec![Vec::new()];
    for item in items {
        let mut more = Vec::new();
        for s in &out {
            let mut s2 = s.clone();
            s2.push(item.clone());
            more.push(s2);
        }
        out.extend(more);
    }
    out
}

/// Canonical key of a partial search state: the event prefix code plus the
/// carrier assignment in that code's circle numbering.
fn partial_key<V: Scalar>(events: &[Event<V>], carrier: &BTreeMap<CircleId, usize>) -> String {
    crate::slices::partial_script_code(events, carrier)
}

/// Classes, bound, and whether the bound is respected.
pub fn count_classes<V: Scalar>(
    b: &Barcode<V>,
    mode: BarMatch,
    max_bars: usize,
) -> Result<(usize, u128, bool)> {
    let count = enumerate_embeddings(b, mode, max_bars)?.len();
    let bound = lower_bound(b)?;
    Ok((count, bound, count as u128 >= bound))
}

/// The Reeb graph realizing a barcode: one branch per bar, each branch
/// merging into the innermost bar that strictly contains it. Leaves sit at
/// birth values (and the master's death); forks at inner bars' deaths.
pub fn reeb_from_barcode<V: Scalar>(b: &Barcode<V>) -> Result<ReebGraph<V>> {
    check_realizable(b)?;
    if b.flavor != BarcodeFlavor::Levelset {
        return Err(Error::rejected("Reeb realization expects the level-set flavor"));
    }
    let bars: Vec<BarPlan<V>> = b
        .bars_by_decreasing_length()
        .iter()
        .map(|bar| BarPlan {
            birth: bar.birth.value,
            birth_open: bar.birth.ty == EndpointType::Open,
            death: match bar.death {
                Death::Finite(d) => d.value,
                Death::Infinite => unreachable!("checked finite"),
            },
            death_open: false,
        })
        .collect();
    let n = bars.len();
    // Parent: the latest-born bar strictly containing this one.
    let mut parent: Vec<Option<usize>> = vec![None; n];
    for j in 1..n {
        let mut best: Option<usize> = None;
        for k in 0..n {
            if k != j && bars[k].birth < bars[j].birth && bars[j].death < bars[k].death {
                best = match best {
                    None => Some(k),
                    Some(cur) if bars[k].birth > bars[cur].birth => Some(k),
                    other => other,
                };
            }
        }
        parent[j] = best;
        if best.is_none() {
            return Err(Error::rejected(format!(
                "bar {j} has no strictly containing bar to attach to"
            )));
        }
    }

    let mut nodes: Vec<ReebNode<V>> = Vec::new();
    let mut bottom = vec![0usize; n];
    let mut death_node = vec![0usize; n];
    for j in 0..n {
        bottom[j] = nodes.len();
        nodes.push(ReebNode { label: format!("b{j}"), height: bars[j].birth });
    }
    for j in 0..n {
        death_node[j] = nodes.len();
        let label = if j == 0 { "top".to_string() } else { format!("f{j}") };
        nodes.push(ReebNode { label, height: bars[j].death });
    }
    // Each bar's spine: bottom, then attached forks by height, then death.
    let mut edges = Vec::new();
    for k in 0..n {
        let mut stations: Vec<usize> = vec![bottom[k]];
        let mut forks: Vec<usize> = (1..n).filter(|&j| parent[j] == Some(k)).map(|j| death_node[j]).collect();
        forks.sort_by(|&a, &b| cmp_scalar(&nodes[a].height, &nodes[b].height));
        stations.extend(forks);
        stations.push(death_node[k]);
        for w in stations.windows(2) {
            edges.push((w[0], w[1]));
        }
    }
    Ok(ReebGraph { nodes, edges })
}

/// The default all-non-nesting embedding history sweeping a contour tree:
/// minima open circles beside everything else, saddles merge or split
/// sibling circles, maxima close them.
pub fn history_from_reeb<V: Scalar>(reeb: &ReebGraph<V>) -> Result<EmbeddingHistory<V>> {
    if !reeb.is_tree() {
        return Err(Error::rejected("history realization needs a contour tree"));
    }
    let n = reeb.nodes.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| cmp_scalar(&reeb.nodes[a].height, &reeb.nodes[b].height));

    // One circle id per Reeb edge.
    let mut thread: BTreeMap<(usize, usize), CircleId> = BTreeMap::new();
    let mut next_id = 0usize;
    let mut fresh = || {
        let id = CircleId::from(format!("c{next_id}"));
        next_id += 1;
        id
    };
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut events = Vec::new();
    for &v in &order {
        let t = reeb.nodes[v].height;
        let (mut down, mut up): (Vec<usize>, Vec<usize>) = (Vec::new(), Vec::new());
        for u in reeb.neighbors(v) {
            if reeb.nodes[u].height < t {
                down.push(u);
            } else {
                up.push(u);
            }
        }
        match (down.len(), up.len()) {
            (0, 1) => {
                let c = fresh();
                thread.insert(key(v, up[0]), c.clone());
                events.push(Event::Min { t, circle: c, region: Region::Outer });
            }
            (1, 0) => {
                let c = thread[&key(v, down[0])].clone();
                events.push(Event::Max { t, circle: c });
            }
            (2, 1) => {
                let a = thread[&key(v, down[0])].clone();
                let b = thread[&key(v, down[1])].clone();
                let merged = fresh();
                thread.insert(key(v, up[0]), merged.clone());
                events.push(Event::MergeNonNesting { t, a, b, merged });
            }
            (1, 2) => {
                let c = thread[&key(v, down[0])].clone();
                let h0 = fresh();
                let h1 = fresh();
                thread.insert(key(v, up[0]), h0.clone());
                thread.insert(key(v, up[1]), h1.clone());
                events.push(Event::SplitNonNesting {
                    t,
                    circle: c,
                    halves: [(h0, Vec::new()), (h1, Vec::new())],
                });
            }
            (d, u) => {
                return Err(Error::rejected(format!(
                    "node {} has down/up degrees ({d},{u}); not a sweepable contour tree",
                    reeb.nodes[v].label
                )))
            }
        }
    }
    EmbeddingHistory::new(events)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn barcode(path_text: &str) -> Barcode<f64> {
        crate::io::parse_barcode(path_text).unwrap()
    }

    fn nested(n: usize) -> Barcode<f64> {
        match n {
            1 => barcode(include_str!("../../../../fixtures/nested1.barcode.json")),
            2 => barcode(include_str!("../../../../fixtures/nested2.barcode.json")),
            3 => barcode(include_str!("../../../../fixtures/nested3.barcode.json")),
            _ => unreachable!(),
        }
    }

    #[test]
    fn mu_counts_strict_containment() {
        let b = nested(3);
        assert_eq!(mu(&b, 0).unwrap(), 0); // outermost
        assert_eq!(mu(&b, 1).unwrap(), 1);
        assert_eq!(mu(&b, 2).unwrap(), 2); // innermost
        assert!(mu(&b, 3).is_err());
        // Two disjoint bars: either has containment count 0.
        let two = Barcode::new(
            BarcodeFlavor::Levelset,
            vec![
                Bar::finite(0, crate::barcode::Endpoint::closed(0.0), crate::barcode::Endpoint::closed(1.0)),
                Bar::finite(0, crate::barcode::Endpoint::closed(2.0), crate::barcode::Endpoint::closed(3.0)),
            ],
        );
        assert_eq!(mu(&two, 0).unwrap(), 0);
        assert_eq!(mu(&two, 1).unwrap(), 0);
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(lower_bound(&nested(3)).unwrap(), 8); // 2^2 * 1 * 2
        assert_eq!(lower_bound(&nested(1)).unwrap(), 1);
        assert_eq!(lower_bound(&nested(2)).unwrap(), 2);
        // Two disjoint bars inside a third: 2^2 * 1 * 1 = 4.
        let b = Barcode::new(
            BarcodeFlavor::Levelset,
            vec![
                Bar::finite(0, crate::barcode::Endpoint::closed(0.0), crate::barcode::Endpoint::closed(10.0)),
                Bar::finite(0, crate::barcode::Endpoint::closed(1.0), crate::barcode::Endpoint::open(4.0)),
                Bar::finite(0, crate::barcode::Endpoint::closed(5.0), crate::barcode::Endpoint::open(8.0)),
            ],
        );
        assert_eq!(lower_bound(&b).unwrap(), 4);
        let (count, bound, respected) = count_classes(&b, BarMatch::TypeInsensitive, 8).unwrap();
        assert_eq!(bound, 4);
        assert!(respected, "count {count} under bound {bound}");
    }

    #[test]
    fn sublevel_rejections() {
        let bad = barcode(include_str!("../../../../fixtures/sublevel_bad.barcode.json"));
        let err = check_realizable(&bad).unwrap_err();
        assert!(err.to_string().contains("open bar forbidden in sublevel flavor"), "{err}");
        // A sublevel barcode with closed-open inner bars passes.
        let ok = Barcode::new(
            BarcodeFlavor::Sublevel,
            vec![
                Bar::essential(0, 0.0),
                Bar::finite(0, crate::barcode::Endpoint::closed(1.0), crate::barcode::Endpoint::open(2.0)),
            ],
        );
        assert!(is_realizable(&ok));
        // Closed-closed nested in closed is the other forbidden pattern.
        let nested_closed = Barcode::new(
            BarcodeFlavor::Sublevel,
            vec![
                Bar::finite(0, crate::barcode::Endpoint::closed(0.0), crate::barcode::Endpoint::closed(3.0)),
                Bar::finite(0, crate::barcode::Endpoint::closed(1.0), crate::barcode::Endpoint::closed(2.0)),
            ],
        );
        assert!(!is_realizable(&nested_closed));
    }

    #[test]
    fn levelset_realizability() {
        assert!(is_realizable(&nested(3)));
        // The shotglass barcode is realizable.
        let sg = Barcode::new(
            BarcodeFlavor::Levelset,
            vec![
                Bar::finite(0, crate::barcode::Endpoint::closed(0.0), crate::barcode::Endpoint::closed(3.0)),
                Bar::finite(0, crate::barcode::Endpoint::open(1.0), crate::barcode::Endpoint::open(2.0)),
            ],
        );
        assert!(is_realizable(&sg));
        // Two maximal closed bars: rejected.
        let two_max = Barcode::new(
            BarcodeFlavor::Levelset,
            vec![
                Bar::finite(0, crate::barcode::Endpoint::closed(0.0), crate::barcode::Endpoint::closed(3.0)),
                Bar::finite(0, crate::barcode::Endpoint::closed(1.0), crate::barcode::Endpoint::closed(5.0)),
            ],
        );
        let err = check_realizable(&two_max).unwrap_err();
        assert!(err.to_string().contains("no single containing closed bar"), "{err}");
    }

    #[test]
    fn enumeration_counts_one_two_eight() {
        assert_eq!(enumerate_embeddings(&nested(1), BarMatch::TypeInsensitive, 8).unwrap().len(), 1);
        assert_eq!(enumerate_embeddings(&nested(2), BarMatch::TypeInsensitive, 8).unwrap().len(), 2);
        let classes = enumerate_embeddings(&nested(3), BarMatch::TypeInsensitive, 8).unwrap();
        assert_eq!(classes.len(), 8);
        // Every class round-trips and classes are pairwise inequivalent.
        for h in &classes {
            assert!(levelset_barcode(h).matches(&nested(3), BarMatch::TypeInsensitive));
        }
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                assert!(!crate::slices::poset_equivalent(&classes[i], &classes[j]));
            }
        }
        let (count, bound, respected) = count_classes(&nested(3), BarMatch::TypeInsensitive, 8).unwrap();
        assert_eq!((count, bound, respected), (8, 8, true));
    }

    #[test]
    fn open_open_two_bars_enumerate_two_classes() {
        // The split-born variants: the doubled-back worm and the shotglass.
        let sg = Barcode::new(
            BarcodeFlavor::Levelset,
            vec![
                Bar::finite(0, crate::barcode::Endpoint::closed(0.0), crate::barcode::Endpoint::closed(3.0)),
                Bar::finite(0, crate::barcode::Endpoint::open(1.0), crate::barcode::Endpoint::open(2.0)),
            ],
        );
        let classes = enumerate_embeddings(&sg, BarMatch::Strict, 8).unwrap();
        assert_eq!(classes.len(), 2);
        // One of them is the shotglass fixture's class.
        let shotglass = crate::io::parse_history(include_str!(
            "../../../../fixtures/shotglass.history.json"
        ))
        .unwrap();
        assert!(classes.iter().any(|h| crate::slices::poset_equivalent(h, &shotglass)));
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let err = enumerate_embeddings(&nested(3), BarMatch::TypeInsensitive, 2).unwrap_err();
        assert!(err.to_string().contains("above the cap"));
    }

    #[test]
    fn fig17_reeb_realization() {
        let b = barcode(include_str!("../../../../fixtures/fig17.barcode.json"));
        let reeb = reeb_from_barcode(&b).unwrap();
        assert!(reeb.is_tree());
        // Leaves at closed endpoints (0, 1, 2 and the master top 5), forks
        // at the open endpoints 3 and 4.
        let mut leaves: Vec<f64> = (0..reeb.nodes.len())
            .filter(|&i| reeb.degree(i) == 1)
            .map(|i| reeb.nodes[i].height)
            .collect();
        leaves.sort_by(f64::total_cmp);
        assert_eq!(leaves, vec![0.0, 1.0, 2.0, 5.0]);
        let mut forks: Vec<f64> = (0..reeb.nodes.len())
            .filter(|&i| reeb.degree(i) == 3)
            .map(|i| reeb.nodes[i].height)
            .collect();
        forks.sort_by(f64::total_cmp);
        assert_eq!(forks, vec![3.0, 4.0]);
        // The inner bar attaches to the middle bar, not the master.
        let fork3 = (0..reeb.nodes.len()).find(|&i| reeb.nodes[i].height == 3.0).unwrap();
        let mut nb: Vec<f64> = reeb.neighbors(fork3).iter().map(|&k| reeb.nodes[k].height).collect();
        nb.sort_by(f64::total_cmp);
        assert_eq!(nb, vec![1.0, 2.0, 4.0]);

        let h = history_from_reeb(&reeb).unwrap();
        assert!(levelset_barcode(&h).matches(&b, BarMatch::TypeInsensitive));
    }

    #[test]
    fn single_bar_realization_is_min_max() {
        let b = nested(1);
        let reeb = reeb_from_barcode(&b).unwrap();
        assert_eq!(reeb.nodes.len(), 2);
        assert_eq!(reeb.edges.len(), 1);
        let h = history_from_reeb(&reeb).unwrap();
        assert_eq!(h.events().len(), 2);
        assert!(levelset_barcode(&h).matches(&b, BarMatch::Strict));
    }

    #[test]
    fn two_nested_bars_realize_the_worm() {
        let b = nested(2);
        let h = history_from_reeb(&reeb_from_barcode(&b).unwrap()).unwrap();
        let worm = crate::io::parse_history(include_str!("../../../../fixtures/worm.history.json"))
            .unwrap();
        // Same shape up to times: both are min, min, non-nesting merge, max.
        let kinds: Vec<&str> = h.events().iter().map(|e| e.kind_str()).collect();
        assert_eq!(kinds, vec!["min", "min", "merge_nn", "max"]);
        let _ = worm;
        assert!(levelset_barcode(&h).matches(&b, BarMatch::TypeInsensitive));
    }

    #[test]
    fn monotonicity_of_counting() {
        // Adding a bar never decreases the class count.
        let (c2, _, _) = count_classes(&nested(2), BarMatch::TypeInsensitive, 8).unwrap();
        let (c3, _, _) = count_classes(&nested(3), BarMatch::TypeInsensitive, 8).unwrap();
        assert!(c3 >= c2);
    }
}
