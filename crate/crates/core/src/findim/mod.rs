//! Exact homological algebra over finite-dimensional bound quiver algebras:
//! projective resolutions, Ext groups, tensor products with the Künneth
//! identity, and the extension of cocycles to tensor resolutions.

use thiserror::Error;

pub mod embed;
pub mod ext;
pub mod fixtures;
pub mod module;
pub mod quiver;
pub mod resolution;
pub mod tensor;

pub use embed::{embed_class, EmbeddedClass, TensorResolution};
pub use ext::{ext_basis, ext_dim, ext_dim_with, ExtClass, ProjComplex};
pub use module::{FDModule, ProjSum};
pub use quiver::{Arrow, Path, QuiverAlgebra, Relation};
pub use resolution::{projective_resolution, resolve, CoverKind, Resolution};
pub use tensor::{kunneth_check, kunneth_report, kunneth_reports, tensor_algebra, tensor_module, KunnethInput, KunnethReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FindimError {
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("complex is not exact: {0}")]
    NotExact(String),
    #[error("the input is not a cocycle")]
    NotACocycle,
}
