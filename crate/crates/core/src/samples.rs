//! Small named tableaux and webs used by tests, the harness and the CLI.

use std::collections::HashMap;

use crate::plabic::{Color, PlabicGraph};
use crate::tableaux::{IncreasingTableau, StandardTableau};

fn syt(rows: &[&[u32]]) -> StandardTableau {
    StandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn inc(rows: &[&[u32]], q: u32) -> IncreasingTableau {
    IncreasingTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect(), q).unwrap()
}

/// Standard tableau of shape (4,3,2).
pub fn standard_432() -> StandardTableau {
    syt(&[&[1, 3, 4, 6], &[2, 5, 9], &[7, 8]])
}

/// Standard tableau of shape (3,3,3).
pub fn standard_333() -> StandardTableau {
    syt(&[&[1, 2, 6], &[3, 5, 8], &[4, 7, 9]])
}

/// Increasing tableau of shape (5,4,3) over [1,9].
pub fn increasing_543() -> IncreasingTableau {
    inc(&[&[1, 2, 3, 5, 7], &[2, 3, 6, 9], &[4, 6, 8]], 9)
}

/// Increasing 4×4 tableau over [1,11].
pub fn increasing_4x4() -> IncreasingTableau {
    inc(
        &[&[1, 2, 3, 5], &[2, 4, 5, 8], &[4, 6, 7, 9], &[6, 8, 10, 11]],
        11,
    )
}

/// Increasing 3×4 tableau over [1,10]; its digraphs are the trip digraphs
/// of [`flamingo_web_ten`].
pub fn increasing_3x4() -> IncreasingTableau {
    inc(&[&[1, 2, 3, 6], &[4, 5, 6, 9], &[7, 8, 9, 10]], 10)
}

/// Increasing 3×3 tableau over [1,7].
pub fn increasing_3x3() -> IncreasingTableau {
    inc(&[&[1, 2, 5], &[3, 4, 6], &[4, 5, 7]], 7)
}

/// Increasing 2×8 tableau over [1,13].
pub fn increasing_2x8() -> IncreasingTableau {
    inc(
        &[&[1, 2, 3, 5, 6, 8, 9, 12], &[3, 4, 5, 7, 8, 10, 11, 13]],
        13,
    )
}

/// Packed 4×10 tableau over [1,27] with promotion order 675.
pub fn increasing_4x10() -> IncreasingTableau {
    inc(
        &[
            &[1, 3, 5, 7, 8, 9, 10, 13, 15, 18],
            &[2, 4, 7, 8, 11, 14, 15, 17, 21, 22],
            &[6, 8, 11, 16, 17, 20, 21, 22, 25, 26],
            &[8, 10, 12, 17, 19, 22, 23, 24, 26, 27],
        ],
        27,
    )
}

fn on_circle(deg: f64, radius: f64) -> (f64, f64) {
    let t = deg.to_radians();
    (radius * t.cos(), radius * t.sin())
}

/// Flamingo web with 10 boundary vertices and `k = 3`: a hexagon of
/// alternating colors with white spokes at three corners.
pub fn flamingo_web_ten() -> PlabicGraph {
    let mut pos = HashMap::new();
    for x in 1..=10u32 {
        pos.insert(x, on_circle(90.0 - 36.0 * x as f64, 1.2));
    }
    // Hexagon corners 11..=16 at 90, 150, …; odd corners black.
    let mut interior = Vec::new();
    for j in 0..6u32 {
        pos.insert(11 + j, on_circle(90.0 + 60.0 * j as f64, 0.45));
        let color = if j % 2 == 0 { Color::Black } else { Color::White };
        interior.push((11 + j, color));
    }
    // Spokes 17, 18, 19 outside corners 11, 13, 15.
    for (k, deg) in [(17, 90.0), (18, 210.0), (19, 330.0)] {
        pos.insert(k, on_circle(deg, 0.7));
        interior.push((k, Color::White));
    }
    let edges = vec![
        (10, 17), (1, 17), (9, 17), (11, 17),
        (11, 12), (12, 13), (13, 14), (14, 15), (15, 16), (16, 11),
        (8, 12),
        (7, 18), (6, 18), (13, 18),
        (5, 14),
        (4, 19), (3, 19), (15, 19),
        (2, 16),
    ];
    PlabicGraph::from_embedding(10, interior, edges, &pos).expect("valid embedding")
}

/// Non-normal plabic graph with 5 boundary vertices whose trips revisit
/// cycles; used to check that trip computation terminates.
pub fn looping_web_five() -> PlabicGraph {
    let mut pos = HashMap::new();
    for x in 1..=5u32 {
        pos.insert(x, on_circle(108.0 - 72.0 * x as f64, 1.2));
    }
    let whites = [(11, (0.7, 0.0)), (12, (-0.7, 0.0)), (13, (-0.3, -0.7)), (14, (-0.3, 0.0)), (15, (-0.2, 0.7))];
    let blacks = [(21, (0.5, 0.0)), (22, (-0.5, 0.0)), (23, (0.0, 0.0))];
    let mut interior = Vec::new();
    for (id, p) in whites {
        pos.insert(id, p);
        interior.push((id, Color::White));
    }
    for (id, p) in blacks {
        pos.insert(id, p);
        interior.push((id, Color::Black));
    }
    let edges = vec![
        (11, 1), (11, 2), (12, 4), (12, 5), (13, 3),
        (11, 21), (12, 22), (13, 23), (14, 23),
        (15, 21), (15, 22), (15, 23),
        (13, 21), (13, 22),
        (13, 14), (14, 15),
    ];
    PlabicGraph::from_embedding(5, interior, edges, &pos).expect("valid embedding")
}
