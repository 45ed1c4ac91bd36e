//! Plat diagrams as staggered grids of twist coefficients.
//!
//! A 2m-plat of length n has n-1 rows of twist boxes. Rows are numbered
//! 1..n-1 from the top. Odd rows hold m-1 boxes on the strand pairs
//! (2,3), (4,5), ..., (2m-2,2m-1); even rows hold m boxes on the pairs
//! (1,2), (3,4), ..., (2m-1,2m). Box (i,j) carries the signed crossing
//! count a_{i,j}; a positive count means the strand entering a crossing
//! from the lower left passes over.

use std::fmt;

use thiserror::Error;

/// How the bottom of the braid is capped off.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Closure {
    /// Bridges (1,2), (3,4), ... at both top and bottom.
    StandardPlat,
    /// Bridges (1,2), (3,4), ... at the top; (2,3), (4,5), ..., (2m,1) at the bottom.
    /// The braid has an even number of rows, so the length n is odd.
    EvenPlat,
}

impl Closure {
    pub fn keyword(self) -> &'static str {
        match self {
            Closure::StandardPlat => "standard",
            Closure::EvenPlat => "even",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Closure> {
        match s {
            "standard" => Some(Closure::StandardPlat),
            "even" => Some(Closure::EvenPlat),
            _ => None,
        }
    }
}

/// One shape or parity problem found while validating a candidate grid.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("ShapeError: width m={m} is below the minimum of 2")]
    WidthTooSmall { m: usize },
    #[error("ShapeError: length n={n} is below the minimum of 2")]
    LengthTooSmall { n: usize },
    #[error("ParityError: length n={n} must be {expected} for a {closure} plat")]
    Parity { n: usize, expected: &'static str, closure: &'static str },
    #[error("ShapeError: expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("ShapeError: row {row} must have {expected} entries, found {found}")]
    RowWidth { row: usize, expected: usize, found: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    Shape,
    Parity,
}

impl Violation {
    pub fn kind(&self) -> ViolationKind {
        match self {
            Violation::Parity { .. } => ViolationKind::Parity,
            _ => ViolationKind::Shape,
        }
    }
}

/// The full list of violations of a rejected candidate grid.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ValidationError {
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl ValidationError {
    pub fn has_kind(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind() == kind)
    }
}

/// Number of boxes in row `i` (1-based) of a width-m grid.
pub fn row_width(m: usize, i: usize) -> usize {
    if i % 2 == 1 {
        m - 1
    } else {
        m
    }
}

/// Checks the shape of a candidate grid without constructing it.
pub fn validate(m: usize, n: usize, closure: Closure, rows: &[Vec<i64>]) -> Result<(), ValidationError> {
    let mut violations = Vec::new();
    if m < 2 {
        violations.push(Violation::WidthTooSmall { m });
    }
    if n < 2 {
        violations.push(Violation::LengthTooSmall { n });
    }
    match closure {
        Closure::StandardPlat if !n.is_multiple_of(2) => violations.push(Violation::Parity {
            n,
            expected: "even",
            closure: closure.keyword(),
        }),
        Closure::EvenPlat if n.is_multiple_of(2) => violations.push(Violation::Parity {
            n,
            expected: "odd",
            closure: closure.keyword(),
        }),
        _ => {}
    }
    let expected_rows = n.saturating_sub(1);
    if rows.len() != expected_rows {
        violations.push(Violation::RowCount { expected: expected_rows, found: rows.len() });
    }
    if m >= 2 {
        for (idx, row) in rows.iter().enumerate() {
            let i = idx + 1;
            let w = row_width(m, i);
            if row.len() != w {
                violations.push(Violation::RowWidth { row: i, expected: w, found: row.len() });
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(ValidationError { violations })
    }
}

/// Address of a twist box, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistRegionId {
    pub i: usize,
    pub j: usize,
}

impl TwistRegionId {
    pub fn new(i: usize, j: usize) -> Self {
        TwistRegionId { i, j }
    }
}

impl fmt::Display for TwistRegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A validated plat diagram. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlatGrid {
    m: usize,
    n: usize,
    closure: Closure,
    rows: Vec<Vec<i64>>,
}

impl PlatGrid {
    pub fn new(m: usize, n: usize, closure: Closure, rows: Vec<Vec<i64>>) -> Result<Self, ValidationError> {
        validate(m, n, closure, &rows)?;
        Ok(PlatGrid { m, n, closure, rows })
    }

    /// A standard plat.
    pub fn standard(m: usize, n: usize, rows: Vec<Vec<i64>>) -> Result<Self, ValidationError> {
        Self::new(m, n, Closure::StandardPlat, rows)
    }

    /// Every coefficient set to `value`.
    pub fn constant(m: usize, n: usize, closure: Closure, value: i64) -> Result<Self, ValidationError> {
        let rows = (1..n.max(1)).map(|i| vec![value; row_width(m.max(2), i)]).collect();
        Self::new(m, n, closure, rows)
    }

    /// Builds a grid whose entries are produced by `f(i, j)` (1-based).
    pub fn from_fn(
        m: usize,
        n: usize,
        closure: Closure,
        mut f: impl FnMut(usize, usize) -> i64,
    ) -> Result<Self, ValidationError> {
        let rows = (1..n.max(1))
            .map(|i| (1..=row_width(m.max(2), i)).map(|j| f(i, j)).collect())
            .collect();
        Self::new(m, n, closure, rows)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn closure(&self) -> Closure {
        self.closure
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn strands(&self) -> usize {
        2 * self.m
    }

    pub fn width_of_row(&self, i: usize) -> usize {
        row_width(self.m, i)
    }

    /// Coefficient a_{i,j}; panics if out of range.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - 1]
    }

    pub fn try_get(&self, region: TwistRegionId) -> Option<i64> {
        self.rows.get(region.i.wrapping_sub(1))?.get(region.j.wrapping_sub(1)).copied()
    }

    pub fn contains(&self, region: TwistRegionId) -> bool {
        self.try_get(region).is_some()
    }

    /// Copy with a_{i,j} replaced.
    pub fn with_entry(&self, i: usize, j: usize, value: i64) -> PlatGrid {
        let mut out = self.clone();
        out.rows[i - 1][j - 1] = value;
        out
    }

    /// All entries, rows top to bottom, left to right.
    pub fn flatten(&self) -> Vec<i64> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn regions(&self) -> impl Iterator<Item = TwistRegionId> + '_ {
        (1..=self.row_count()).flat_map(move |i| (1..=self.width_of_row(i)).map(move |j| TwistRegionId::new(i, j)))
    }

    /// Braid generator carried by box (i,j): sigma_{2j} on odd rows, sigma_{2j-1} on even rows.
    pub fn generator(i: usize, j: usize) -> usize {
        if i % 2 == 1 {
            2 * j
        } else {
            2 * j - 1
        }
    }

    /// Number of twist boxes, sum of the row widths.
    pub fn twist_region_count(&self) -> usize {
        twist_region_count_for(self.m, self.n)
    }

    /// Sum of |a_{i,j}|: the crossing count of the diagram.
    pub fn crossing_count(&self) -> u64 {
        self.rows.iter().flatten().map(|a| a.unsigned_abs()).sum()
    }

    /// True iff every |a_{i,j}| >= c.
    pub fn is_c_highly_twisted(&self, c: u64) -> bool {
        self.rows.iter().flatten().all(|a| a.unsigned_abs() >= c)
    }

    /// Top bridges (1,2), (3,4), ... as 1-based position pairs.
    pub fn top_caps(&self) -> Vec<(usize, usize)> {
        (1..=self.m).map(|j| (2 * j - 1, 2 * j)).collect()
    }

    /// Bottom bridges as 1-based position pairs.
    pub fn bottom_caps(&self) -> Vec<(usize, usize)> {
        match self.closure {
            Closure::StandardPlat => self.top_caps(),
            Closure::EvenPlat => {
                let mut caps: Vec<_> = (1..self.m).map(|j| (2 * j, 2 * j + 1)).collect();
                caps.push((2 * self.m, 1));
                caps
            }
        }
    }

    /// Number of link components of the closure, traced through the strand
    /// permutation of the braid and the top and bottom bridges.
    pub fn component_count(&self) -> usize {
        let s = self.strands();
        // perm[p] = bottom position reached by the strand starting at top position p
        let mut perm: Vec<usize> = (0..s).collect();
        let mut at: Vec<usize> = (0..s).collect(); // at[pos] = starting strand now at pos
        for (idx, row) in self.rows.iter().enumerate() {
            let i = idx + 1;
            for (jdx, &a) in row.iter().enumerate() {
                if a % 2 != 0 {
                    let k = Self::generator(i, jdx + 1) - 1;
                    at.swap(k, k + 1);
                }
            }
        }
        for (pos, &start) in at.iter().enumerate() {
            perm[start] = pos;
        }
        // nodes 0..s are top endpoints, s..2s bottom endpoints
        let mut uf = UnionFind::new(2 * s);
        for (a, b) in self.top_caps() {
            uf.union(a - 1, b - 1);
        }
        for (a, b) in self.bottom_caps() {
            uf.union(s + a - 1, s + b - 1);
        }
        for (p, &q) in perm.iter().enumerate() {
            uf.union(p, s + q);
        }
        uf.count()
    }
}

/// Sum of row widths for a width-m, length-n grid: n*m - n/2 - m for even n.
pub fn twist_region_count_for(m: usize, n: usize) -> usize {
    (1..n).map(|i| row_width(m, i)).sum()
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub(crate) fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}
