//! Symbolic machinery for Ext branching between Arthur-type representations
//! of `GL_n` over a p-adic field:
//!
//! * [`segments`]: cuspidal lines, segments, multisegments, `C_ω` membership;
//! * [`arthur`]: Speh representations, Arthur parameters, duality and derivatives;
//! * [`relevance`]: strong Ext relevance with checkable certificates;
//! * [`reduction`]: proof traces for Ext non-vanishing and their validator;
//! * [`findim`]: exact Ext groups over finite-dimensional quiver algebras;
//! * [`hecke`]: the affine Hecke algebra of type A in the Bernstein basis;
//! * [`wire`]: the versioned JSON formats shared with the command line tool.

pub mod arthur;
pub mod findim;
pub mod hecke;
pub mod linalg;
pub mod par;
pub mod reduction;
pub mod relevance;
pub mod segments;
pub mod sweep;
pub mod wire;
