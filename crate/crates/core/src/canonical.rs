//! The Klein four-group of axis rotations acting on standard plats, the
//! canonical representative of an orbit, and the equivalence decision for
//! plats satisfying the uniqueness hypotheses.
//!
//! A half-turn about an axis in the projection plane mirrors the picture
//! and swaps front and back. Each of the two flips reverses every crossing,
//! so the coefficients keep their signs and only their positions move:
//!
//! * vertical axis:   a_{i,j} -> a_{i, w_i + 1 - j}
//! * horizontal axis: a_{i,j} -> a_{n - i, j}   (row parity is kept since n is even)

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::hypothesis::{hypothesis_report, HypothesisReport};
use crate::plat::{Closure, PlatGrid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryElement {
    Identity,
    VerticalAxis,
    HorizontalAxis,
    Both,
}

impl SymmetryElement {
    pub const ALL: [SymmetryElement; 4] = [
        SymmetryElement::Identity,
        SymmetryElement::VerticalAxis,
        SymmetryElement::HorizontalAxis,
        SymmetryElement::Both,
    ];

    fn bits(self) -> u8 {
        match self {
            SymmetryElement::Identity => 0,
            SymmetryElement::VerticalAxis => 1,
            SymmetryElement::HorizontalAxis => 2,
            SymmetryElement::Both => 3,
        }
    }

    fn from_bits(b: u8) -> Self {
        match b & 3 {
            0 => SymmetryElement::Identity,
            1 => SymmetryElement::VerticalAxis,
            2 => SymmetryElement::HorizontalAxis,
            _ => SymmetryElement::Both,
        }
    }

    pub fn compose(self, other: SymmetryElement) -> SymmetryElement {
        Self::from_bits(self.bits() ^ other.bits())
    }

    pub fn flips_columns(self) -> bool {
        self.bits() & 1 != 0
    }

    pub fn flips_rows(self) -> bool {
        self.bits() & 2 != 0
    }

    pub fn name(self) -> &'static str {
        match self {
            SymmetryElement::Identity => "identity",
            SymmetryElement::VerticalAxis => "vertical",
            SymmetryElement::HorizontalAxis => "horizontal",
            SymmetryElement::Both => "both",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.name() == s)
    }
}

impl fmt::Display for SymmetryElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonicalError {
    #[error("EvenPlatUnsupported: the rotation group acts on standard plats only")]
    EvenPlatUnsupported,
}

fn require_standard(grid: &PlatGrid) -> Result<(), CanonicalError> {
    match grid.closure() {
        Closure::StandardPlat => Ok(()),
        Closure::EvenPlat => Err(CanonicalError::EvenPlatUnsupported),
    }
}

/// Position of entry (i,j) after applying `g`.
pub fn map_index(grid: &PlatGrid, g: SymmetryElement, i: usize, j: usize) -> (usize, usize) {
    let i2 = if g.flips_rows() { grid.n() - i } else { i };
    let j2 = if g.flips_columns() { grid.width_of_row(i) + 1 - j } else { j };
    (i2, j2)
}

pub fn apply_symmetry(grid: &PlatGrid, g: SymmetryElement) -> Result<PlatGrid, CanonicalError> {
    require_standard(grid)?;
    Ok(apply_unchecked(grid, g))
}

fn apply_unchecked(grid: &PlatGrid, g: SymmetryElement) -> PlatGrid {
    let mut rows: Vec<Vec<i64>> = grid.rows().to_vec();
    if g.flips_rows() {
        rows.reverse();
    }
    if g.flips_columns() {
        for row in &mut rows {
            row.reverse();
        }
    }
    PlatGrid::new(grid.m(), grid.n(), grid.closure(), rows).expect("rotations preserve the grid shape")
}

/// Flattened integer-lexicographic order on grids of one shape.
pub fn grid_order(a: &PlatGrid, b: &PlatGrid) -> Ordering {
    a.rows().iter().flatten().cmp(b.rows().iter().flatten())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub grid: PlatGrid,
    pub realized_by: SymmetryElement,
    pub orbit_size: usize,
}

pub fn canonicalize(grid: &PlatGrid) -> Result<CanonicalForm, CanonicalError> {
    require_standard(grid)?;
    let images: Vec<PlatGrid> = SymmetryElement::ALL.iter().map(|&g| apply_unchecked(grid, g)).collect();
    let mut best = 0;
    for k in 1..4 {
        if grid_order(&images[k], &images[best]) == Ordering::Less {
            best = k;
        }
    }
    let mut distinct: Vec<&PlatGrid> = Vec::with_capacity(4);
    for img in &images {
        if !distinct.contains(&img) {
            distinct.push(img);
        }
    }
    Ok(CanonicalForm {
        orbit_size: distinct.len(),
        realized_by: SymmetryElement::ALL[best],
        grid: images[best].clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivalenceVerdict {
    Equal,
    Distinct,
    HypothesesNotMet(Box<HypothesisReport>, Box<HypothesisReport>),
}

impl EquivalenceVerdict {
    pub fn token(&self) -> &'static str {
        match self {
            EquivalenceVerdict::Equal => "EQUAL",
            EquivalenceVerdict::Distinct => "DISTINCT",
            EquivalenceVerdict::HypothesesNotMet(..) => "HYPOTHESES_NOT_MET",
        }
    }
}

/// Decides whether two plats present the same knot or link, for plats that
/// both have width at least 3, at least 3 crossings in every twist region
/// and length n > 4m(m-2). Outside that regime the answer is
/// `HypothesesNotMet`. Even plats are never decided.
pub fn decide_equivalence(g1: &PlatGrid, g2: &PlatGrid) -> EquivalenceVerdict {
    let r1 = hypothesis_report(g1);
    let r2 = hypothesis_report(g2);
    let standard = g1.closure() == Closure::StandardPlat && g2.closure() == Closure::StandardPlat;
    if !standard || !r1.qualifies() || !r2.qualifies() {
        return EquivalenceVerdict::HypothesesNotMet(Box::new(r1), Box::new(r2));
    }
    // both bridge spheres are unique, so the widths are the bridge numbers
    if g1.m() != g2.m() {
        return EquivalenceVerdict::Distinct;
    }
    if g1.n() != g2.n() {
        return EquivalenceVerdict::Distinct;
    }
    let c1 = canonicalize(g1).expect("standard");
    let c2 = canonicalize(g2).expect("standard");
    if c1.grid == c2.grid {
        EquivalenceVerdict::Equal
    } else {
        EquivalenceVerdict::Distinct
    }
}
