//! Knot diagram codes, invariants and drawings of plats.

pub mod alexander;
pub mod det;
pub mod diagram;
pub mod fingerprint;
pub mod goeritz;
pub mod laurent;
pub mod pd;
pub mod svg;

use thiserror::Error;

pub use alexander::alexander_polynomial;
pub use diagram::KnotDiagram;
pub use fingerprint::{fingerprint, InvariantFingerprint};
pub use goeritz::determinant;
pub use laurent::Laurent;
pub use pd::{format_gauss, gauss_code, to_pd_code, GaussToken, PdCode};
pub use svg::render_svg;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotCodeError {
    #[error("EmptyDiagram: the diagram has no crossings")]
    EmptyDiagram,
    #[error("NotAKnot: the closure has {components} components")]
    NotAKnot { components: usize },
}
