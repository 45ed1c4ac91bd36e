//! Exact counting, seeded sampling and deduplication over families of plats
//! whose coefficients come from a fixed finite set.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::canonical::{canonicalize, CanonicalForm, SymmetryElement};
use crate::plat::{row_width, twist_region_count_for, Closure, PlatGrid, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("InvalidCensus: the coefficient set is empty")]
    EmptyCoefficientSet,
    #[error("InvalidCensus: coefficient {value} is below the twist bound {c_min}")]
    BelowTwistBound { value: i64, c_min: u64 },
    #[error("InvalidCensus: {0}")]
    Shape(Violation),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusSpec {
    pub m: usize,
    pub n: usize,
    pub coefficients: BTreeSet<i64>,
    pub c_min: u64,
    pub seed: u64,
}

impl CensusSpec {
    pub fn new(m: usize, n: usize, coefficients: impl IntoIterator<Item = i64>, c_min: u64, seed: u64) -> Result<Self, CensusError> {
        let spec = CensusSpec { m, n, coefficients: coefficients.into_iter().collect(), c_min, seed };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), CensusError> {
        if self.m < 2 {
            return Err(CensusError::Shape(Violation::WidthTooSmall { m: self.m }));
        }
        if self.n < 2 {
            return Err(CensusError::Shape(Violation::LengthTooSmall { n: self.n }));
        }
        if !self.n.is_multiple_of(2) {
            return Err(CensusError::Shape(Violation::Parity { n: self.n, expected: "even", closure: "standard" }));
        }
        if self.coefficients.is_empty() {
            return Err(CensusError::EmptyCoefficientSet);
        }
        if let Some(&value) = self.coefficients.iter().find(|a| a.unsigned_abs() < self.c_min) {
            return Err(CensusError::BelowTwistBound { value, c_min: self.c_min });
        }
        Ok(())
    }

    pub fn region_count(&self) -> usize {
        twist_region_count_for(self.m, self.n)
    }

    fn row_widths(&self) -> Vec<usize> {
        (1..self.n).map(|i| row_width(self.m, i)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub total_grids: BigUint,
    pub orbit_count: BigUint,
    pub fixed_counts: BTreeMap<SymmetryElement, BigUint>,
}

/// Number of free coefficients left once a grid must be fixed by `g`.
pub fn fixed_exponent(m: usize, n: usize, g: SymmetryElement) -> usize {
    let widths: Vec<usize> = (1..n).map(|i| row_width(m, i)).collect();
    let half = n / 2;
    match g {
        SymmetryElement::Identity => widths.iter().sum(),
        SymmetryElement::VerticalAxis => widths.iter().map(|w| w.div_ceil(2)).sum(),
        // rows pair up as i <-> n-i, the middle row n/2 is its own partner
        SymmetryElement::HorizontalAxis => widths[..half - 1].iter().sum::<usize>() + widths[half - 1],
        // (i,j) <-> (n-i, w+1-j): paired rows contribute one row, the middle row is mirrored
        SymmetryElement::Both => widths[..half - 1].iter().sum::<usize>() + widths[half - 1].div_ceil(2),
    }
}

/// Burnside count over the four-element symmetry group.
pub fn count_orbits(spec: &CensusSpec) -> Result<OrbitReport, CensusError> {
    spec.validate()?;
    let s = BigUint::from(spec.coefficients.len());
    let mut fixed_counts = BTreeMap::new();
    let mut sum = BigUint::zero();
    for g in SymmetryElement::ALL {
        let count = Pow::pow(&s, fixed_exponent(spec.m, spec.n, g));
        sum += &count;
        fixed_counts.insert(g, count);
    }
    let total_grids = fixed_counts[&SymmetryElement::Identity].clone();
    Ok(OrbitReport { total_grids, orbit_count: sum / 4u32, fixed_counts })
}

/// Uniform index in 0..bound by rejection on 64-bit draws.
fn uniform_index(rng: &mut ChaCha8Rng, bound: usize) -> usize {
    let bound = bound as u64;
    let zone = u64::MAX - (u64::MAX % bound);
    loop {
        let x = rng.next_u64();
        if x < zone {
            return (x % bound) as usize;
        }
    }
}

/// `k` grids with independent uniform entries, reproducible from `spec.seed`
/// (ChaCha8 seeded through `seed_from_u64`, entries row-major).
pub fn sample(spec: &CensusSpec, k: usize) -> Result<Vec<PlatGrid>, CensusError> {
    spec.validate()?;
    let coeffs: Vec<i64> = spec.coefficients.iter().copied().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let grids = (0..k)
        .map(|_| {
            PlatGrid::from_fn(spec.m, spec.n, Closure::StandardPlat, |_, _| coeffs[uniform_index(&mut rng, coeffs.len())])
                .expect("shape was validated")
        })
        .collect();
    Ok(grids)
}

/// Every grid of the family, in lexicographic order of the flattened
/// coefficients. Meant for small families only.
pub fn enumerate_all(spec: &CensusSpec) -> Result<Vec<PlatGrid>, CensusError> {
    spec.validate()?;
    let coeffs: Vec<i64> = spec.coefficients.iter().copied().collect();
    let t = spec.region_count();
    let widths = spec.row_widths();
    let mut out = Vec::new();
    let mut digits = vec![0usize; t];
    loop {
        let mut flat = digits.iter().map(|&d| coeffs[d]);
        let rows: Vec<Vec<i64>> = widths.iter().map(|&w| flat.by_ref().take(w).collect()).collect();
        out.push(PlatGrid::new(spec.m, spec.n, Closure::StandardPlat, rows).expect("shape was validated"));
        let mut pos = t;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < coeffs.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Probability that `t` independent uniform draws from [-M, M] all avoid
/// {-2, ..., 2}.
pub fn genericity_ratio(big_m: u64, t: u32) -> BigRational {
    let total = 2 * big_m + 1;
    let good = total - total.min(5);
    let base = BigRational::new(good.into(), total.into());
    if t == 0 {
        return BigRational::one();
    }
    Pow::pow(&base, t)
}

/// Distinct canonical forms, in order of first appearance.
pub fn dedupe(grids: &[PlatGrid]) -> Vec<CanonicalForm> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in grids {
        let Ok(form) = canonicalize(g) else { continue };
        if seen.insert(form.grid.clone()) {
            out.push(form);
        }
    }
    out
}
