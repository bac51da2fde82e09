//! Sublevel persistence by boundary-matrix reduction over GF(2).
//!
//! The filtered complex is the quadrangle cell complex of the graph with
//! every cell valued at the maximum of its vertex values (lower-star
//! filtration). Columns are ordered by (value, dimension); ties between a
//! vertex and its cofaces are broken by dimension, lower first. Zero-length
//! pairs are dropped; unpaired cells become essential bars.

use std::collections::HashMap;

use crate::barcode::{Bar, Barcode, BarcodeFlavor, Endpoint};
use crate::scalar::{cmp_scalar, Scalar};

use super::DecoratedMsGraph;

struct Cell<V> {
    dim: u8,
    value: V,
    /// Boundary as indices into the final sorted cell order (filled late).
    boundary: Vec<usize>,
}

pub(super) fn sublevel_bars<V: Scalar>(dg: &DecoratedMsGraph<V>) -> Vec<Bar<V>> {
    let g = dg.graph();
    if g.is_base_sphere() {
        let min = dg.value(g.vertices().find(|&v| g.vertex_index(v) == crate::complex::MorseIndex::Minimum).unwrap());
        let max = dg.value(g.vertices().find(|&v| g.vertex_index(v) == crate::complex::MorseIndex::Maximum).unwrap());
        return vec![Bar::essential(0, min), Bar::essential(2, max)];
    }

    // Assemble cells: vertices, edges, faces; boundaries in raw ids first.
    let nv = g.vertex_count();
    let ne = g.edge_count();
    let faces = g.faces();
    let raw_value = |cell: usize| -> V {
        if cell < nv {
            dg.value(cell)
        } else if cell < nv + ne {
            let [a, b] = g.edge_ends(cell - nv);
            let (x, y) = (dg.value(a), dg.value(b));
            if x > y {
                x
            } else {
                y
            }
        } else {
            let f = &faces[cell - nv - ne];
            f.corners
                .iter()
                .map(|&v| dg.value(v))
                .max_by(cmp_scalar)
                .expect("faces have corners")
        }
    };
    let n_cells = nv + ne + faces.len();
    let mut order: Vec<usize> = (0..n_cells).collect();
    let dim_of = |cell: usize| -> u8 {
        if cell < nv {
            0
        } else if cell < nv + ne {
            1
        } else {
            2
        }
    };
    order.sort_by(|&a, &b| cmp_scalar(&raw_value(a), &raw_value(b)).then(dim_of(a).cmp(&dim_of(b))).then(a.cmp(&b)));
    let pos_of: HashMap<usize, usize> = order.iter().enumerate().map(|(p, &c)| (c, p)).collect();

    let mut cells: Vec<Cell<V>> = Vec::with_capacity(n_cells);
    for &raw in &order {
        let dim = dim_of(raw);
        let boundary = match dim {
            0 => Vec::new(),
            1 => {
                let [a, b] = g.edge_ends(raw - nv);
                let mut ends = vec![pos_of[&a], pos_of[&b]];
                ends.sort_unstable();
                ends
            }
            _ => {
                // Mod-2 boundary: edges appearing twice in the walk cancel.
                let f = &faces[raw - nv - ne];
                let mut counts: HashMap<usize, usize> = HashMap::new();
                for &d in &f.darts {
                    *counts.entry(g.dart_edge(d)).or_insert(0) += 1;
                }
                let mut b: Vec<usize> = counts
                    .into_iter()
                    .filter(|(_, c)| c % 2 == 1)
                    .map(|(e, _)| pos_of[&(nv + e)])
                    .collect();
                b.sort_unstable();
                b
            }
        };
        cells.push(Cell { dim, value: raw_value(raw), boundary });
    }

    // Standard reduction. `low_owner[low] = column that holds this pivot`.
    let mut low_owner: Vec<Option<usize>> = vec![None; n_cells];
    let mut columns: Vec<Vec<usize>> = cells.iter().map(|c| c.boundary.clone()).collect();
    let mut paired_birth: Vec<Option<usize>> = vec![None; n_cells];
    for j in 0..n_cells {
        loop {
            let Some(&low) = columns[j].last() else { break };
            match low_owner[low] {
                None => {
                    low_owner[low] = Some(j);
                    paired_birth[j] = Some(low);
                    break;
                }
                Some(k) => {
                    columns[j] = symmetric_difference(&columns[j], &columns[k]);
                }
            }
        }
    }

    let mut killed = vec![false; n_cells];
    let mut bars = Vec::new();
    for j in 0..n_cells {
        if let Some(birth) = paired_birth[j] {
            killed[birth] = true;
            killed[j] = true;
            if cells[birth].value < cells[j].value {
                bars.push(Bar::finite(
                    cells[birth].dim,
                    Endpoint::closed(cells[birth].value),
                    Endpoint::open(cells[j].value),
                ));
            }
        }
    }
    for (j, cell) in cells.iter().enumerate() {
        if !killed[j] {
            bars.push(Bar::essential(cell.dim, cell.value));
        }
    }
    bars
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Sublevel barcode of a decorated graph, dims 0..2, closed-open finite bars
/// and essential classes with infinite death.
pub fn sublevel_barcode<V: Scalar>(dg: &DecoratedMsGraph<V>) -> Barcode<V> {
    Barcode::new(BarcodeFlavor::Sublevel, sublevel_bars(dg))
}
