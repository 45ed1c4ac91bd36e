//! Planar diagram and Gauss codes.

use std::fmt;

use super::diagram::KnotDiagram;
use super::KnotCodeError;
use crate::plat::PlatGrid;

/// X(a, b, c, d): edge labels counter-clockwise from the incoming under edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdCode {
    pub crossings: Vec<[usize; 4]>,
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.crossings.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "X({},{},{},{})", x[0], x[1], x[2], x[3])?;
        }
        Ok(())
    }
}

/// Emission order: rows top to bottom, boxes left to right, crossings in a
/// box bottom to top.
pub(crate) fn emission_order(d: &KnotDiagram) -> Vec<usize> {
    let mut order: Vec<usize> = (0..d.crossings.len()).collect();
    order.sort_by_key(|&c| {
        let x = &d.crossings[c];
        (x.row, x.column, std::cmp::Reverse(x.level))
    });
    order
}

pub fn to_pd_code(grid: &PlatGrid) -> Result<PdCode, KnotCodeError> {
    let d = KnotDiagram::from_grid(grid);
    pd_from_diagram(&d)
}

pub fn pd_from_diagram(d: &KnotDiagram) -> Result<PdCode, KnotCodeError> {
    if d.crossings.is_empty() {
        return Err(KnotCodeError::EmptyDiagram);
    }
    let crossings = emission_order(d)
        .into_iter()
        .map(|c| {
            let x = &d.crossings[c];
            let mut corner = x.under_in;
            let mut tuple = [0; 4];
            for slot in &mut tuple {
                *slot = x.label(corner);
                corner = corner.ccw();
            }
            tuple
        })
        .collect();
    Ok(PdCode { crossings })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaussToken {
    pub over: bool,
    /// Crossings are numbered by first appearance along the traversal.
    pub crossing: usize,
    pub sign: i8,
}

impl fmt::Display for GaussToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.over { 'O' } else { 'U' };
        let sign = if self.sign > 0 { '+' } else { '-' };
        write!(f, "{kind}{}{sign}", self.crossing)
    }
}

pub fn gauss_code(grid: &PlatGrid) -> Result<Vec<GaussToken>, KnotCodeError> {
    let d = KnotDiagram::from_grid(grid);
    if d.component_count() != 1 {
        return Err(KnotCodeError::NotAKnot { components: d.component_count() });
    }
    let mut number = vec![0usize; d.crossings.len()];
    let mut next = 1;
    let mut out = Vec::new();
    for p in &d.components[0] {
        if number[p.crossing] == 0 {
            number[p.crossing] = next;
            next += 1;
        }
        out.push(GaussToken { over: p.over, crossing: number[p.crossing], sign: d.crossings[p.crossing].sign });
    }
    Ok(out)
}

pub fn format_gauss(code: &[GaussToken]) -> String {
    code.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
}
