//! Vertical and almost vertical 2-spheres, isolating spheres, and the
//! classification of twist regions.
//!
//! A sphere S(c_1, ..., c_{n-1}) is described by how many twist boxes lie
//! to the left of its arc in each row. Write p_i for the gap the arc passes
//! through in row i (gap g lies between strands g and g+1; gap 0 is left of
//! everything): p_i = 2c_i + 1 on odd rows and p_i = 2c_i on even rows.
//! Between consecutive rows the arc crosses |p_i - p_{i+1}| strands, and
//! it crosses one bridge at each end, so meeting the link in exactly n
//! points forces |p_i - p_{i+1}| = 1 everywhere.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::plat::{PlatGrid, TwistRegionId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SphereKind {
    Vertical,
    AlmostVertical,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VerticalSphereSpec {
    pub c: Vec<usize>,
    pub kind: SphereKind,
}

impl fmt::Display for VerticalSphereSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.c.iter().map(|c| c.to_string()).collect();
        write!(f, "S({})", parts.join(","))
    }
}

impl VerticalSphereSpec {
    /// Arc gap positions p_i.
    pub fn gaps(&self) -> Vec<usize> {
        gap_sequence(&self.c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingSphere {
    pub s1: VerticalSphereSpec,
    pub s2: VerticalSphereSpec,
    pub region: TwistRegionId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionClass {
    Allowable,
    AlmostAllowable,
    Extreme,
}

impl RegionClass {
    pub fn name(self) -> &'static str {
        match self {
            RegionClass::Allowable => "allowable",
            RegionClass::AlmostAllowable => "almost-allowable",
            RegionClass::Extreme => "extreme",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Corner {
    TopLeft,
    TopRight,
    BottomLeft,
    BottomRight,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::TopLeft, Corner::TopRight, Corner::BottomLeft, Corner::BottomRight];

    pub fn from_name(s: &str) -> Option<Corner> {
        match s.to_ascii_uppercase().as_str() {
            "TL" => Some(Corner::TopLeft),
            "TR" => Some(Corner::TopRight),
            "BL" => Some(Corner::BottomLeft),
            "BR" => Some(Corner::BottomRight),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SphereError {
    #[error("NotASphere: expected {expected} entries, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("NotASphere: c_{row}={value} exceeds the row width {width}")]
    OutOfRange { row: usize, value: usize, width: usize },
    #[error("NotASphere: arc jumps from gap {from} in row {row} to gap {to} in row {next}", next = row + 1)]
    Adjacency { row: usize, from: usize, to: usize },
    #[error("NotAlmostVertical: rows {rows:?} lack a twist region on the {side} side")]
    NotAlmostVertical { side: &'static str, rows: Vec<usize> },
    #[error("IndexOutOfRange: region {region} is not in the grid")]
    IndexOutOfRange { region: TwistRegionId },
    #[error("ExtremeRegion: region {region} is a corner region; use the corner continued fraction")]
    ExtremeRegion { region: TwistRegionId },
    #[error("NoIsolatingSphere: no pair of almost vertical spheres isolates region {region}")]
    NoIsolatingSphere { region: TwistRegionId },
    #[error("DegenerateFraction: corner pair ({a}, {b}) has no continued fraction 1/(a + 1/b)")]
    DegenerateFraction { a: i64, b: i64 },
}

fn row_width(m: usize, i: usize) -> usize {
    crate::plat::row_width(m, i)
}

fn gap_of(i: usize, c: usize) -> usize {
    if i % 2 == 1 {
        2 * c + 1
    } else {
        2 * c
    }
}

fn c_of_gap(i: usize, p: usize) -> Option<usize> {
    if i % 2 == 1 {
        (p % 2 == 1).then(|| (p - 1) / 2)
    } else {
        p.is_multiple_of(2).then_some(p / 2)
    }
}

pub fn gap_sequence(c: &[usize]) -> Vec<usize> {
    c.iter().enumerate().map(|(idx, &ci)| gap_of(idx + 1, ci)).collect()
}

/// True if `set` is contained in one of the exceptional level patterns:
/// {i} with i odd, {i, i+2} with i odd, or {i-1, i, i+1} with i even.
fn fits_exception_pattern(set: &BTreeSet<usize>, rows: usize) -> bool {
    if set.is_empty() {
        return true;
    }
    let lo = *set.first().unwrap();
    let hi = *set.last().unwrap();
    let contained = |pattern: &[usize]| pattern.iter().all(|&r| r >= 1 && r <= rows) && set.iter().all(|r| pattern.contains(r));
    for i in lo.saturating_sub(2).max(1)..=hi {
        if i % 2 == 1 {
            if contained(&[i]) || contained(&[i, i + 2]) {
                return true;
            }
        } else if i >= 2 && contained(&[i - 1, i, i + 1]) {
            return true;
        }
    }
    false
}

/// Classifies a c-vector as a vertical or almost vertical sphere of `grid`.
pub fn check_sphere(grid: &PlatGrid, c: &[usize]) -> Result<VerticalSphereSpec, SphereError> {
    let rows = grid.row_count();
    if c.len() != rows {
        return Err(SphereError::WrongLength { expected: rows, found: c.len() });
    }
    for (idx, &ci) in c.iter().enumerate() {
        let w = grid.width_of_row(idx + 1);
        if ci > w {
            return Err(SphereError::OutOfRange { row: idx + 1, value: ci, width: w });
        }
    }
    let p = gap_sequence(c);
    for i in 1..rows {
        if p[i - 1].abs_diff(p[i]) != 1 {
            return Err(SphereError::Adjacency { row: i, from: p[i - 1], to: p[i] });
        }
    }
    let left: BTreeSet<usize> = (1..=rows).filter(|&i| c[i - 1] == 0).collect();
    let right: BTreeSet<usize> = (1..=rows).filter(|&i| c[i - 1] == grid.width_of_row(i)).collect();
    if left.is_empty() && right.is_empty() {
        return Ok(VerticalSphereSpec { c: c.to_vec(), kind: SphereKind::Vertical });
    }
    if !fits_exception_pattern(&left, rows) {
        return Err(SphereError::NotAlmostVertical { side: "left", rows: left.into_iter().collect() });
    }
    if !fits_exception_pattern(&right, rows) {
        return Err(SphereError::NotAlmostVertical { side: "right", rows: right.into_iter().collect() });
    }
    Ok(VerticalSphereSpec { c: c.to_vec(), kind: SphereKind::AlmostVertical })
}

/// All vertical spheres, in lexicographic order of their c-vectors.
pub fn enumerate_vertical_spheres(grid: &PlatGrid) -> Vec<VerticalSphereSpec> {
    let rows = grid.row_count();
    let m = grid.m();
    let mut out = Vec::new();
    let mut c = Vec::with_capacity(rows);
    fn extend(m: usize, rows: usize, c: &mut Vec<usize>, out: &mut Vec<VerticalSphereSpec>) {
        let i = c.len() + 1;
        if i > rows {
            out.push(VerticalSphereSpec { c: c.clone(), kind: SphereKind::Vertical });
            return;
        }
        let w = row_width(m, i);
        for ci in 1..w {
            if let Some(&prev) = c.last() {
                if gap_of(i - 1, prev).abs_diff(gap_of(i, ci)) != 1 {
                    continue;
                }
            }
            c.push(ci);
            extend(m, rows, c, out);
            c.pop();
        }
    }
    extend(m, rows, &mut c, &mut out);
    out
}

/// Extreme iff leftmost or rightmost in rows 1, 2, n-2 or n-1; almost
/// allowable iff on the far left or right of an odd row 3..=n-3 or an even
/// row 4..=n-4; allowable otherwise.
pub fn classify_region(grid: &PlatGrid, region: TwistRegionId) -> Result<RegionClass, SphereError> {
    if !grid.contains(region) {
        return Err(SphereError::IndexOutOfRange { region });
    }
    let n = grid.n();
    let TwistRegionId { i, j } = region;
    let w = grid.width_of_row(i);
    let edge = j == 1 || j == w;
    if !edge {
        return Ok(RegionClass::Allowable);
    }
    let corner_rows = [1, 2, n.saturating_sub(2), n.saturating_sub(1)];
    if corner_rows.contains(&i) {
        return Ok(RegionClass::Extreme);
    }
    let almost = if i % 2 == 1 { 3 <= i && i + 3 <= n } else { 4 <= i && i + 4 <= n };
    if almost {
        Ok(RegionClass::AlmostAllowable)
    } else {
        // edge regions that fall between the listed ranges (only when n is odd)
        Ok(RegionClass::Extreme)
    }
}

/// Two spheres differing by one in row `region.i` that together cut out the
/// single twist region `region`.
///
/// Rows i-1, i and i+1 are forced by the region; every other row is routed
/// through the interior when possible, oscillating next to the fixed rows.
pub fn isolating_sphere_for(grid: &PlatGrid, region: TwistRegionId) -> Result<IsolatingSphere, SphereError> {
    let class = classify_region(grid, region)?;
    if class == RegionClass::Extreme {
        return Err(SphereError::ExtremeRegion { region });
    }
    let rows = grid.row_count();
    let TwistRegionId { i, j } = region;
    let lower = gap_of(i, j - 1);
    let beside = lower + 1;

    // allowed gaps per row; rows other than i-1, i, i+1 prefer interior values
    let fixed = |r: usize| -> Option<usize> {
        if r + 1 == i || r == i + 1 {
            Some(beside)
        } else {
            None
        }
    };
    let candidates = |r: usize, interior_only: bool| -> Vec<usize> {
        if r == i {
            return vec![lower];
        }
        if let Some(p) = fixed(r) {
            return vec![p];
        }
        let w = row_width(grid.m(), r);
        let range = if interior_only { 1..w } else { 0..w + 1 };
        range.map(|c| gap_of(r, c)).collect()
    };

    for interior_only in [true, false] {
        let Some(gaps) = route(rows, i, &|r| candidates(r, interior_only)) else {
            continue;
        };
        let c1: Vec<usize> = gaps.iter().enumerate().map(|(idx, &p)| c_of_gap(idx + 1, p).unwrap()).collect();
        let mut c2 = c1.clone();
        c2[i - 1] += 1;
        let (Ok(s1), Ok(s2)) = (check_sphere(grid, &c1), check_sphere(grid, &c2)) else {
            continue;
        };
        if class == RegionClass::Allowable && (s1.kind != SphereKind::Vertical || s2.kind != SphereKind::Vertical) {
            continue;
        }
        return Ok(IsolatingSphere { s1, s2, region });
    }
    Err(SphereError::NoIsolatingSphere { region })
}

/// Builds a gap sequence outward from row `anchor`, each step moving by one
/// gap, picking from `allowed(r)`. Prefers returning to the gap two rows
/// back, which keeps the arc hugging the fixed rows.
fn route(rows: usize, anchor: usize, allowed: &dyn Fn(usize) -> Vec<usize>) -> Option<Vec<usize>> {
    let sets: Vec<Vec<usize>> = (1..=rows).map(allowed).collect();
    if sets.iter().any(|s| s.is_empty()) {
        return None;
    }
    // feasibility tables so the greedy walk never dead-ends
    let step_ok = |a: usize, b: usize| a.abs_diff(b) == 1;
    let mut down_ok: Vec<Vec<bool>> = vec![Vec::new(); rows];
    down_ok[rows - 1] = vec![true; sets[rows - 1].len()];
    for r in (0..rows - 1).rev() {
        down_ok[r] = sets[r]
            .iter()
            .map(|&p| sets[r + 1].iter().zip(&down_ok[r + 1]).any(|(&q, &ok)| ok && step_ok(p, q)))
            .collect();
    }
    let mut up_ok: Vec<Vec<bool>> = vec![Vec::new(); rows];
    up_ok[0] = vec![true; sets[0].len()];
    for r in 1..rows {
        up_ok[r] = sets[r]
            .iter()
            .map(|&p| sets[r - 1].iter().zip(&up_ok[r - 1]).any(|(&q, &ok)| ok && step_ok(p, q)))
            .collect();
    }
    let a = anchor - 1;
    let start = sets[a].iter().zip(down_ok[a].iter().zip(&up_ok[a])).find(|(_, (d, u))| **d && **u)?.0;
    let mut gaps = vec![0usize; rows];
    gaps[a] = *start;
    let pick = |set: &[usize], ok: &[bool], prev: usize, prev2: Option<usize>| -> Option<usize> {
        let options: Vec<usize> = set.iter().zip(ok).filter(|(q, k)| **k && step_ok(prev, **q)).map(|(q, _)| *q).collect();
        prev2.filter(|p| options.contains(p)).or_else(|| options.first().copied())
    };
    for r in a + 1..rows {
        let prev2 = (r >= a + 2).then(|| gaps[r - 2]);
        gaps[r] = pick(&sets[r], &down_ok[r], gaps[r - 1], prev2)?;
    }
    for r in (0..a).rev() {
        let prev2 = (r + 2 <= a).then(|| gaps[r + 2]);
        gaps[r] = pick(&sets[r], &up_ok[r], gaps[r + 1], prev2)?;
    }
    Some(gaps)
}

/// The pair of coefficients (a, b) whose tangle 1/(a + 1/b) sits in `corner`.
pub fn corner_pair(grid: &PlatGrid, corner: Corner) -> (i64, i64) {
    let n = grid.n();
    let m = grid.m();
    let last = grid.row_count();
    match corner {
        Corner::TopLeft => (grid.get(1, 1), grid.get(2.min(last), 1)),
        Corner::TopRight => (grid.get(1, m - 1), grid.get(2.min(last), grid.width_of_row(2.min(last)))),
        Corner::BottomLeft => (grid.get(n - 1, 1), grid.get((n - 2).max(1), 1)),
        Corner::BottomRight => {
            let r = (n - 2).max(1);
            (grid.get(n - 1, grid.width_of_row(n - 1)), grid.get(r, grid.width_of_row(r)))
        }
    }
}

/// 1/(a + 1/b) = b/(ab + 1) for the corner pair.
pub fn corner_fraction(grid: &PlatGrid, corner: Corner) -> Result<Ratio<i64>, SphereError> {
    let (a, b) = corner_pair(grid, corner);
    continued_fraction(a, b)
}

pub fn continued_fraction(a: i64, b: i64) -> Result<Ratio<i64>, SphereError> {
    let denom = a * b + 1;
    if b == 0 || denom == 0 {
        return Err(SphereError::DegenerateFraction { a, b });
    }
    Ok(Ratio::new(b, denom))
}
