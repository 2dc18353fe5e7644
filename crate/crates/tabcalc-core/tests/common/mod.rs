//! Shared fixtures for the integration tests: the published 5×5
//! commutation grid and randomized-domain strategies.
//!
//! Each test target compiles this module independently and uses a
//! different subset of it.
#![allow(dead_code)]

use proptest::prelude::*;
use tabcalc_core::shapes::{Partition, SkewShape};
use tabcalc_core::tableaux::{enumerate_tableaux, SkewTableau};

/// The 5×5 grid of tableaux demonstrating that jeu de taquin slides
/// (right to left, always into the most-northeast inner corner) commute
/// with raising operations (upwards, in the four groups returned by
/// [`grid_groups`]). The bottom-right entry is the running example
/// tableau; the top-left is the canonical tableau of its rectified
/// normal-form shape.
pub fn figure_grid() -> [[&'static str; 5]; 5] {
    [
        [
            "0:0,0,0,0,0|0:1,1,1,1,1|0:2,2,2,2|0:3|0:4",
            "1:0,0,0,0|0:0,1,1,1,1|0:1,2,2,2|0:2,3|0:4",
            "1:0,0,0,0|1:1,1,1,1|0:0,2,2,2|0:1,3|0:2,4",
            "2:0,0,0|1:0,1,1,1|0:0,1,2,2|0:1,2,3|0:2,4",
            "3:0,0|1:0,0,1,1|0:0,1,1,2|0:1,2,2,3|0:2,4",
        ],
        [
            "0:0,0,0,0,0|0:1,1,1,1,1|0:2,2,2,5|0:3|0:5",
            "1:0,0,0,0|0:0,1,1,1,1|0:1,2,2,5|0:2,3|0:5",
            "1:0,0,0,0|1:1,1,1,1|0:0,2,2,5|0:1,3|0:2,5",
            "2:0,0,0|1:0,1,1,1|0:0,1,2,5|0:1,2,3|0:2,5",
            "3:0,0|1:0,0,1,1|0:0,1,1,2|0:1,2,3,5|0:2,5",
        ],
        [
            "0:0,0,0,0,0|0:1,1,1,1,1|0:2,4,4,5|0:3|0:5",
            "1:0,0,0,0|0:0,1,1,1,1|0:1,2,4,5|0:3,4|0:5",
            "1:0,0,0,0|1:1,1,1,1|0:0,2,4,5|0:1,4|0:3,5",
            "2:0,0,0|1:0,1,1,1|0:0,1,2,5|0:1,4,4|0:3,5",
            "3:0,0|1:0,0,1,1|0:0,1,1,2|0:1,4,4,5|0:3,5",
        ],
        [
            "0:0,0,0,0,0|0:1,1,1,3,3|0:2,4,4,5|0:3|0:5",
            "1:0,0,0,0|0:0,1,1,3,3|0:1,2,4,5|0:3,4|0:5",
            "1:0,0,0,0|1:1,1,3,3|0:0,2,4,5|0:1,4|0:3,5",
            "2:0,0,0|1:0,1,3,3|0:0,1,2,5|0:1,4,4|0:3,5",
            "3:0,0|1:0,0,1,3|0:0,1,2,3|0:1,4,4,5|0:3,5",
        ],
        [
            "0:0,0,0,1,1|0:1,1,2,3,3|0:2,4,4,5|0:3|0:5",
            "1:0,0,1,1|0:0,1,2,3,3|0:1,2,4,5|0:3,4|0:5",
            "1:0,0,1,1|1:1,2,3,3|0:0,2,4,5|0:1,4|0:3,5",
            "2:0,1,1|1:0,1,3,3|0:0,2,2,5|0:1,4,4|0:3,5",
            "3:0,1|1:0,1,1,3|0:0,2,2,3|0:1,4,4,5|0:3,5",
        ],
    ]
}

/// Raising groups carrying each grid row to the row above, listed from
/// the bottom transition upwards.
pub fn grid_groups() -> [&'static [usize]; 4] {
    [&[0, 0, 1], &[2, 1, 2, 1], &[3, 2, 3, 2], &[4, 4, 3, 2]]
}

/// The inner-corner sequence of the slides in each grid row, from the
/// rightmost transition leftwards, as (row, col) pairs.
pub fn grid_corners() -> [(usize, usize); 4] {
    [(0, 2), (0, 1), (1, 0), (0, 0)]
}

pub fn parse_tab(s: &str) -> SkewTableau {
    s.parse().expect("fixture tableau parses")
}

/// A random partition with at most `rows` parts, each at most `width`.
pub fn partition_strategy(rows: usize, width: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..=width, 0..=rows).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    })
}

/// A random skew shape with at most `max_cells` cells: the inner shape is
/// the row-wise minimum of the outer shape and a second partition.
pub fn shape_strategy(max_cells: usize) -> impl Strategy<Value = SkewShape> {
    (partition_strategy(4, 4), partition_strategy(4, 4))
        .prop_map(|(outer, clip)| {
            let inner: Vec<usize> = (0..outer.len())
                .map(|i| outer.part(i).min(clip.part(i)))
                .collect();
            SkewShape::new(outer, Partition::new(inner)).expect("row-wise minimum nests")
        })
        .prop_filter("bounded cell count", move |s| {
            s.size() >= 1 && s.size() <= max_cells
        })
}

/// A random filling of a random shape (at most `max_cells` cells, letters
/// below `n`), drawn uniformly from the full enumeration.
pub fn tableau_strategy(max_cells: usize, n: usize) -> impl Strategy<Value = SkewTableau> {
    shape_strategy(max_cells)
        .prop_map(move |shape| enumerate_tableaux(&shape, n).collect::<Vec<_>>())
        .prop_filter("shape admits a filling", |all| !all.is_empty())
        .prop_flat_map(|all| {
            let len = all.len();
            (Just(all), 0..len).prop_map(|(all, k)| all[k].clone())
        })
}

/// A random word over the letters below `n`.
pub fn word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..n, 0..=max_len)
}

/// A pair ready for switching: a straight filling of a shape's inner
/// partition and a filling of the skew shape outside it.
pub fn switch_pair_strategy() -> impl Strategy<Value = (SkewTableau, SkewTableau)> {
    shape_strategy(8)
        .prop_map(|shape| {
            let inner: Vec<SkewTableau> =
                enumerate_tableaux(&SkewShape::from(shape.inner().clone()), 3).collect();
            let outer: Vec<SkewTableau> = enumerate_tableaux(&shape, 3).collect();
            (inner, outer)
        })
        .prop_filter("both shapes admit fillings", |(inner, outer)| {
            !inner.is_empty() && !outer.is_empty()
        })
        .prop_flat_map(|(inner, outer)| {
            let (ni, no) = (inner.len(), outer.len());
            (Just(inner), Just(outer), 0..ni, 0..no)
                .prop_map(|(inner, outer, i, j)| (inner[i].clone(), outer[j].clone()))
        })
}

/// Three stacked layers for glued switching: a straight filling of the
/// innermost partition and fillings of the two skew layers above it.
pub fn triple_layer_strategy() -> impl Strategy<Value = (SkewTableau, SkewTableau, SkewTableau)> {
    (
        partition_strategy(3, 3),
        partition_strategy(4, 4),
        partition_strategy(4, 4),
    )
        .prop_map(|(p1, p2, p3)| {
            let meet = |a: &Partition, b: &Partition| -> Partition {
                let rows = a.len().max(b.len());
                Partition::new((0..rows).map(|i| a.part(i).min(b.part(i))).collect::<Vec<_>>())
            };
            let gamma = p3.clone();
            let beta = meet(&p2, &p3);
            let alpha = meet(&p1, &beta);
            let bottom: Vec<SkewTableau> =
                enumerate_tableaux(&SkewShape::from(alpha.clone()), 3).collect();
            let middle: Vec<SkewTableau> = enumerate_tableaux(
                &SkewShape::new(beta.clone(), alpha).expect("meets nest"),
                3,
            )
            .collect();
            let top: Vec<SkewTableau> =
                enumerate_tableaux(&SkewShape::new(gamma, beta).expect("meets nest"), 3).collect();
            (bottom, middle, top)
        })
        .prop_filter("all three layers admit fillings", |(b, m, t)| {
            !b.is_empty() && !m.is_empty() && !t.is_empty()
        })
        .prop_flat_map(|(bottom, middle, top)| {
            let (nb, nm, nt) = (bottom.len(), middle.len(), top.len());
            (Just(bottom), Just(middle), Just(top), 0..nb, 0..nm, 0..nt).prop_map(
                |(bottom, middle, top, i, j, k)| {
                    (bottom[i].clone(), middle[j].clone(), top[k].clone())
                },
            )
        })
}
