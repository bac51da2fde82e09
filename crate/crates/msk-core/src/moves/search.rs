//! Search over the move graph, keyed by canonical codes.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{CanonicalCode, MsGraph};
use crate::error::{Error, Result};

use super::{apply_move, enumerate_moves, MoveInstance};

/// All canonical codes reachable from `g` by addition moves alone without
/// exceeding `n_max` critical points.
pub fn reachable_codes(g: &MsGraph, n_max: usize) -> Result<BTreeSet<CanonicalCode>> {
    Ok(explore_graphs(g, n_max)?.into_keys().collect())
}

/// Like [`reachable_codes`], but keeps one concrete representative per code.
pub fn explore_graphs(g: &MsGraph, n_max: usize) -> Result<BTreeMap<CanonicalCode, MsGraph>> {
    if g.vertex_count() > n_max {
        return Err(Error::rejected(format!(
            "n_max = {n_max} is below the start graph's {} critical points",
            g.vertex_count()
        )));
    }
    let mut seen = BTreeMap::new();
    let mut frontier = vec![g.clone()];
    seen.insert(g.canonical_code()?, g.clone());
    while let Some(cur) = frontier.pop() {
        if cur.vertex_count() + 2 > n_max {
            continue;
        }
        for m in enumerate_moves(&cur)? {
            if !m.is_addition() {
                continue;
            }
            let next = apply_move(&cur, &m)?;
            let code = next.canonical_code()?;
            if !seen.contains_key(&code) {
                seen.insert(code, next.clone());
                frontier.push(next);
            }
        }
    }
    Ok(seen)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ConnectOptions {
    /// Cap on intermediate graph size. Defaults to
    /// `max(|g|, |h|) + 2` critical points: cancellation-first paths between
    /// valid graphs stay within the larger input, and the slack admits one
    /// extra transient pair.
    pub max_vertices: Option<usize>,
}

/// Finds a move sequence of length <= `max_depth` transforming `g` into a
/// map isomorphic to `h`, by bidirectional breadth-first search over
/// canonical codes. Returns the replayable sequence (sites refer to the
/// concrete graphs along the way, starting at `g`).
pub fn connect(
    g: &MsGraph,
    h: &MsGraph,
    max_depth: usize,
    options: ConnectOptions,
) -> Result<Option<Vec<MoveInstance>>> {
    let cg = g.canonical_code()?;
    let ch = h.canonical_code()?;
    if cg == ch {
        return Ok(Some(Vec::new()));
    }
    if max_depth == 0 {
        return Ok(None);
    }
    let cap = options
        .max_vertices
        .unwrap_or_else(|| g.vertex_count().max(h.vertex_count()) + 2);

    // Each side: code -> (representative graph, parent code). Frontiers are
    // BTreeMaps so expansion order is fixed by lexicographic code order.
    type Side = BTreeMap<CanonicalCode, (MsGraph, Option<CanonicalCode>)>;
    let mut fwd: Side = BTreeMap::new();
    let mut bwd: Side = BTreeMap::new();
    fwd.insert(cg.clone(), (g.clone(), None));
    bwd.insert(ch.clone(), (h.clone(), None));
    let mut fwd_frontier: Vec<CanonicalCode> = vec![cg];
    let mut bwd_frontier: Vec<CanonicalCode> = vec![ch];
    let mut fwd_depth = 0usize;
    let mut bwd_depth = 0usize;

    let mut meet: Option<CanonicalCode> = None;
    'search: while fwd_depth + bwd_depth < max_depth {
        let expand_forward = fwd_frontier.len() <= bwd_frontier.len();
        let (side, other, frontier) = if expand_forward {
            fwd_depth += 1;
            (&mut fwd, &bwd, &mut fwd_frontier)
        } else {
            bwd_depth += 1;
            (&mut bwd, &fwd, &mut bwd_frontier)
        };
        if frontier.is_empty() {
            break;
        }
        let mut next_frontier = Vec::new();
        let expand: Vec<CanonicalCode> = std::mem::take(frontier);
        for code in expand {
            let cur = side[&code].0.clone();
            for m in enumerate_moves(&cur)? {
                let nxt = apply_move(&cur, &m)?;
                if nxt.vertex_count() > cap {
                    continue;
                }
                let ncode = nxt.canonical_code()?;
                if side.contains_key(&ncode) {
                    continue;
                }
                side.insert(ncode.clone(), (nxt, Some(code.clone())));
                if other.contains_key(&ncode) {
                    meet = Some(ncode);
                    break 'search;
                }
                next_frontier.push(ncode);
            }
        }
        next_frontier.sort();
        *frontier = next_frontier;
    }

    let Some(meet) = meet else { return Ok(None) };

    // Forward half: replay parent chain from g to the meet.
    let chain_to = |side: &Side, end: &CanonicalCode| -> Vec<CanonicalCode> {
        let mut chain = vec![end.clone()];
        let mut cur = end.clone();
        while let Some(parent) = side[&cur].1.clone() {
            chain.push(parent.clone());
            cur = parent;
        }
        chain.reverse();
        chain
    };
    let fwd_chain = chain_to(&fwd, &meet);
    let bwd_chain = {
        let mut c = chain_to(&bwd, &meet);
        c.reverse(); // meet first, h last
        c
    };

    // Walk the code chains on concrete graphs, rediscovering at each step
    // the first enumerated move that lands on the next code. Adjacency in
    // the move graph is isomorphism-invariant, so a match always exists.
    let mut seq = Vec::new();
    let mut cur = g.clone();
    let step_to = |cur: &mut MsGraph, target: &CanonicalCode, seq: &mut Vec<MoveInstance>| -> Result<()> {
        for m in enumerate_moves(cur)? {
            let nxt = apply_move(cur, &m)?;
            if nxt.vertex_count() <= cap && &nxt.canonical_code()? == target {
                seq.push(m);
                *cur = nxt;
                return Ok(());
            }
        }
        Err(Error::rejected("internal: lost the path between adjacent codes"))
    };
    for target in fwd_chain.iter().skip(1) {
        step_to(&mut cur, target, &mut seq)?;
    }
    for target in bwd_chain.iter().skip(1) {
        step_to(&mut cur, target, &mut seq)?;
    }
    Ok(Some(seq))
}
