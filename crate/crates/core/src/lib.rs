//! Highly twisted plat diagrams: grids of twist coefficients, their braid
//! words, symmetry classes, vertical spheres, censuses and exported knot
//! codes.

pub mod braid;
pub mod canonical;
pub mod census;
pub mod format;
pub mod hypothesis;
pub mod knotcodes;
pub mod plat;
pub mod spheres;

pub use braid::{from_braid_word, parse_braid, serialize_braid, to_braid_word, BraidError, BraidLetter, BraidWord};
pub use canonical::{
    apply_symmetry, canonicalize, decide_equivalence, CanonicalError, CanonicalForm, EquivalenceVerdict, SymmetryElement,
};
pub use census::{count_orbits, dedupe, genericity_ratio, sample, CensusError, CensusSpec, OrbitReport};
pub use format::{parse_plat, serialize_plat, FormatError};
pub use knotcodes::{fingerprint, gauss_code, render_svg, to_pd_code, InvariantFingerprint, KnotCodeError, PdCode};
pub use hypothesis::{bridge_distance, hypothesis_report, DistanceError, HypothesisReport};
pub use plat::{Closure, PlatGrid, TwistRegionId, ValidationError, Violation};
pub use spheres::{
    check_sphere, classify_region, corner_fraction, enumerate_vertical_spheres, isolating_sphere_for, Corner,
    IsolatingSphere, RegionClass, SphereError, SphereKind, VerticalSphereSpec,
};
