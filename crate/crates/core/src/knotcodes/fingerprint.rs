//! Knot invariants bundled for cross-checking symmetry and equivalence.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};

use super::alexander::{alexander_evals, alexander_of};
use super::diagram::KnotDiagram;
use super::goeritz::determinant_of;
use crate::plat::PlatGrid;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantFingerprint {
    pub components: usize,
    pub determinant: BigUint,
    /// Normalized Alexander polynomial at t = -1, 2, 3; knots only.
    pub alexander_evals: Option<BTreeMap<i64, BigInt>>,
}

impl fmt::Display for InvariantFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "components={} determinant={}", self.components, self.determinant)?;
        if let Some(evals) = &self.alexander_evals {
            for (t, v) in evals {
                write!(f, " alexander({t})={v}")?;
            }
        }
        Ok(())
    }
}

pub fn fingerprint(grid: &PlatGrid) -> InvariantFingerprint {
    let d = KnotDiagram::from_grid(grid);
    let alexander_evals = alexander_of(&d).ok().map(|p| alexander_evals(&p));
    InvariantFingerprint { components: d.component_count(), determinant: determinant_of(&d, grid.closure()), alexander_evals }
}
