//! Width, twist and length predicates, and the bridge distance of the
//! horizontal bridge sphere.

use thiserror::Error;

use crate::plat::{Closure, PlatGrid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistanceError {
    #[error("HypothesesNotMet: the distance formula needs m >= 3 and a 3-highly twisted grid (m={m}, 3-highly twisted: {twisted})")]
    HypothesesNotMet { m: usize, twisted: bool },
}

/// d = ceil(n / (2(m-2))) for a 3-highly twisted grid of width m >= 3.
pub fn bridge_distance(grid: &PlatGrid) -> Result<u64, DistanceError> {
    let twisted = grid.is_c_highly_twisted(3);
    if grid.m() < 3 || !twisted {
        return Err(DistanceError::HypothesesNotMet { m: grid.m(), twisted });
    }
    Ok(distance_formula(grid.m(), grid.n()))
}

/// The closed form itself, for m >= 3.
pub fn distance_formula(m: usize, n: usize) -> u64 {
    assert!(m >= 3);
    (n as u64).div_ceil(2 * (m as u64 - 2))
}

/// Length threshold 4m(m-2); unique bridge spheres need n strictly above it.
pub fn length_threshold(m: usize) -> u64 {
    let m = m as u64;
    4 * m * m.saturating_sub(2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub m: usize,
    pub n: usize,
    pub closure: Closure,
    /// m >= 3
    pub width_ok: bool,
    /// every |a_{i,j}| >= 3
    pub twist_ok: bool,
    /// n > 4m(m-2)
    pub length_ok: bool,
    /// Bridge distance when the formula applies.
    pub distance: Option<u64>,
    pub unique_bridge_sphere: bool,
}

impl HypothesisReport {
    pub fn qualifies(&self) -> bool {
        self.unique_bridge_sphere
    }
}

pub fn hypothesis_report(grid: &PlatGrid) -> HypothesisReport {
    let width_ok = grid.m() >= 3;
    let twist_ok = grid.is_c_highly_twisted(3);
    let length_ok = grid.n() as u64 > length_threshold(grid.m());
    HypothesisReport {
        m: grid.m(),
        n: grid.n(),
        closure: grid.closure(),
        width_ok,
        twist_ok,
        length_ok,
        distance: bridge_distance(grid).ok(),
        unique_bridge_sphere: width_ok && twist_ok && length_ok,
    }
}
