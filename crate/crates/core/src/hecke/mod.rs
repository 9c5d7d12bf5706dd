//! The affine Hecke algebra `ℋ(n, q)` of `GL_n` in the Bernstein basis
//! `{y^λ T_w}`, its centre, and finite-dimensional modules.

use thiserror::Error;

pub mod center;
pub mod completion;
pub mod element;
pub mod induce;
pub mod module;
pub mod perm;
pub mod ratfunc;

pub use center::{center_element, is_central, orbit_labels, CenterElement};
pub use completion::{
    central_character_ideal, completion_commutes_check, completion_commutes_report, find_isomorphism, truncate, CentralIdealData,
    CompletionReport,
};
pub use element::HElement;
pub use induce::{binomial, induce_module};
pub use module::{FDHModule, FactorizedModule};
pub use perm::Perm;
pub use ratfunc::{Poly, RatFunc};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("defining relation fails: {0}")]
    RelationFails(String),
    #[error("no generalised central character: {0}")]
    NoCentralCharacter(String),
}

/// `T_u · y^λ` for random keys; drives the relation fuzzing.
pub fn normal_form_multiply(a: &HElement, b: &HElement) -> HElement {
    a.mul(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_frac};

    fn q() -> crate::linalg::Rat {
        rat(2)
    }

    #[test]
    fn induce_two_characters() {
        let a = FDHModule::character(q(), rat(3)).unwrap();
        let b = FDHModule::character(q(), rat(5)).unwrap();
        let m = induce_module(&a, &b).unwrap();
        assert_eq!(m.dim, 2);
        m.check_relations().unwrap();
    }

    #[test]
    fn induce_with_unit_is_identity() {
        let a = FDHModule::one_dimensional(2, q(), rat(3), true).unwrap();
        let m = induce_module(&a, &FDHModule::unit(q())).unwrap();
        assert_eq!(m, a);
    }

    #[test]
    fn induce_dimensions() {
        let a = FDHModule::one_dimensional(2, q(), rat(3), false).unwrap();
        let b = FDHModule::jordan_block(q(), rat(7)).unwrap();
        let m = induce_module(&a, &b).unwrap();
        assert_eq!(m.dim, binomial(3, 2) * 2);
    }

    #[test]
    fn q_mismatch() {
        let a = FDHModule::character(q(), rat(3)).unwrap();
        let b = FDHModule::character(rat(3), rat(3)).unwrap();
        assert!(matches!(induce_module(&a, &b), Err(HeckeError::ParameterMismatch(_))));
        assert!(matches!(completion_commutes_check(&a, &b, 1), Err(HeckeError::ParameterMismatch(_))));
    }

    #[test]
    fn central_characters() {
        let a = FDHModule::character(q(), rat(3)).unwrap();
        let ideal = central_character_ideal(&a).unwrap();
        assert_eq!(ideal.nilpotency, 1);
        let j = FDHModule::jordan_block(q(), rat(3)).unwrap();
        let ideal = central_character_ideal(&j).unwrap();
        assert_eq!(ideal.nilpotency, 2);
        assert!(!ideal.annihilates(&j).unwrap());
        let generic = induce_module(&a, &FDHModule::character(q(), rat_frac(1, 5)).unwrap()).unwrap();
        assert!(central_character_ideal(&generic).unwrap().annihilates(&generic).unwrap());
    }

    #[test]
    fn completion_small_cases() {
        let a = FDHModule::character(q(), rat(3)).unwrap();
        let b = FDHModule::character(q(), rat(5)).unwrap();
        assert!(completion_commutes_check(&a, &b, 1).unwrap());
        let ja = FDHModule::jordan_block(q(), rat(3)).unwrap();
        let jb = FDHModule::jordan_block(q(), rat(5)).unwrap();
        let r = completion_commutes_report(&ja, &FDHModule::character(q(), rat(6)).unwrap(), 4, 0).unwrap();
        assert!(r.holds() && r.limits_agree);
        // two non-semisimple factors: 𝒥² meets N₁⊗N₂, the factorwise truncation does not
        let r = completion_commutes_report(&ja, &jb, 3, 0).unwrap();
        let iso: Vec<bool> = r.levels.iter().map(|l| l.isomorphic).collect();
        assert_eq!(iso, vec![true, false, true]);
        assert_eq!((r.levels[1].induced_of_truncations, r.levels[1].truncation_of_induced), (8, 6));
        assert!(r.limits_agree);
        // equal characters: already different at level one
        let r = completion_commutes_report(&ja, &ja, 3, 0).unwrap();
        assert!(!r.levels[0].isomorphic && r.limits_agree);
    }

    #[test]
    fn mixed_character_sum_has_no_central_character() {
        let mut y = crate::linalg::Matrix::scalar(2, &rat(3));
        y[(1, 1)] = rat(4);
        let m = FDHModule::new(q(), vec![], vec![y]).unwrap();
        assert!(matches!(central_character_ideal(&m), Err(HeckeError::NoCentralCharacter(_))));
    }
}
