//! Alexander polynomial of a plat knot through its bridge presentation.
//!
//! The m top caps give the generators. Moving down the braid, each position
//! carries the Fox derivative vector of the arc it is on; at a crossing the
//! under strand's vector changes by the abelianized conjugation
//! x_out = t x_in + (1 - t) x_over (or with t^-1, by sign and direction),
//! while the over strand keeps its vector. Each bottom cap equates the
//! vectors at its two ends; dropping one of these m relations and one
//! generator leaves a square matrix whose determinant is the polynomial up
//! to a unit ±t^k.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::det::{bareiss, ExactRing};
use super::diagram::KnotDiagram;
use super::laurent::Laurent;
use super::KnotCodeError;
use crate::plat::PlatGrid;

/// Points at which the polynomial is evaluated for fingerprints.
pub const SAMPLE_POINTS: [i64; 3] = [-1, 2, 3];

/// The m x m relation matrix: row r is the bottom cap r, column j the top cap j.
pub fn bridge_matrix(d: &KnotDiagram) -> Vec<Vec<Laurent>> {
    let m = d.m;
    let strands = 2 * m;
    let mut vals: Vec<Vec<Laurent>> = vec![vec![Laurent::zero(); m]; strands + 1];
    for (j, &(p, q)) in d.top_caps.iter().enumerate() {
        vals[p][j] = Laurent::one();
        vals[q][j] = Laurent::one();
    }
    let t = Laurent::t();
    let t_inv = Laurent::t_inv();
    for x in &d.crossings {
        let k = x.left;
        let a = if (x.sign > 0) == x.under_down { &t } else { &t_inv };
        let b = Laurent::one().minus(a);
        let (over_pos, under_pos) = if x.slash_over { (k + 1, k) } else { (k, k + 1) };
        let over = vals[over_pos].clone();
        let moved: Vec<Laurent> = vals[under_pos].iter().zip(&over).map(|(u, o)| a.times(u).plus(&b.times(o))).collect();
        // the strands swap positions through the crossing
        vals[under_pos] = over;
        vals[over_pos] = moved;
    }
    d.bottom_caps.iter().map(|&(p, q)| (0..m).map(|j| vals[p][j].minus(&vals[q][j])).collect()).collect()
}

/// Normalized Alexander polynomial: lowest power t^0 and Δ(1) = 1.
pub fn alexander_polynomial(grid: &PlatGrid) -> Result<Laurent, KnotCodeError> {
    let d = KnotDiagram::from_grid(grid);
    alexander_of(&d)
}

pub(crate) fn alexander_of(d: &KnotDiagram) -> Result<Laurent, KnotCodeError> {
    if d.component_count() != 1 {
        return Err(KnotCodeError::NotAKnot { components: d.component_count() });
    }
    let mut a = bridge_matrix(d);
    a.pop();
    for row in &mut a {
        row.pop();
    }
    Ok(bareiss(a).normalized())
}

pub fn alexander_evals(poly: &Laurent) -> BTreeMap<i64, BigInt> {
    SAMPLE_POINTS.iter().map(|&t| (t, poly.eval(t))).collect()
}
