//! Central characters, powers of the maximal central ideal, and the
//! finite-level comparison of truncation with induction.

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::center::{center_element, orbit_labels};
use super::induce::induce_module;
use super::module::FDHModule;
use super::HeckeError;
use crate::linalg::{rat, span_basis, Matrix, Rat};

/// Generators `z_M - c_M` of the maximal ideal `𝒥 ⊂ 𝒵` at a module's central character.
///
/// Labels run over `{-1, 0, 1}^n` up to permutation. Those with entries in `{0, 1}`
/// give the elementary symmetric polynomials (up to a factor) and `(-1, …, -1)` gives
/// `e_n^{-1}`, so the generators span the maximal ideal of `𝒵`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralIdealData {
    pub n: usize,
    pub labels: Vec<Vec<i64>>,
    pub scalars: Vec<Rat>,
    /// Smallest `k` with `𝒥^k M = 0` on the module the data was computed from.
    pub nilpotency: usize,
}

impl CentralIdealData {
    /// Matrices of `z_M - c_M` on a module.
    pub fn action(&self, m: &FDHModule) -> Result<Vec<Matrix>, HeckeError> {
        self.labels
            .iter()
            .zip(&self.scalars)
            .map(|(l, c)| Ok(&m.act(&center_element(l).expansion)? - &Matrix::scalar(m.dim, c)))
            .collect()
    }

    /// Whether every generator acts as zero.
    pub fn annihilates(&self, m: &FDHModule) -> Result<bool, HeckeError> {
        Ok(self.action(m)?.iter().all(Matrix::is_zero))
    }
}

pub fn central_character_ideal(m: &FDHModule) -> Result<CentralIdealData, HeckeError> {
    let labels: Vec<Vec<i64>> = orbit_labels(m.n, -1, 1).into_iter().filter(|l| l.iter().any(|&x| x != 0)).collect();
    let mut scalars = Vec::new();
    for l in &labels {
        let z = m.act(&center_element(l).expansion)?;
        let c = z.trace() / rat(m.dim as i64);
        if !z.is_scalar_plus_nilpotent(&c) {
            return Err(HeckeError::NoCentralCharacter(format!("z_{l:?} has several eigenvalues")));
        }
        scalars.push(c);
    }
    let mut data = CentralIdealData { n: m.n, labels, scalars, nilpotency: 0 };
    let gens = data.action(m)?;
    let mut k = 0;
    while !ideal_power(&gens, m.dim, k).is_empty() {
        k += 1;
    }
    data.nilpotency = k;
    Ok(data)
}

/// A basis of `𝒥^j M` given the generator matrices.
fn ideal_power(gens: &[Matrix], dim: usize, j: usize) -> Vec<Vec<Rat>> {
    let mut span: Vec<Vec<Rat>> = Matrix::identity(dim).to_rows();
    for _ in 0..j {
        let images: Vec<Vec<Rat>> = gens.iter().flat_map(|g| span.iter().map(move |v| g.apply(v))).collect();
        span = span_basis(&images, dim);
        if span.is_empty() {
            break;
        }
    }
    span
}

/// `M / 𝒥^j M` for the ideal at `M`'s own central character.
pub fn truncate(m: &FDHModule, ideal: &CentralIdealData, j: usize) -> Result<FDHModule, HeckeError> {
    let gens = ideal.action(m)?;
    Ok(m.quotient(&ideal_power(&gens, m.dim, j)).0)
}

/// An invertible intertwiner `X` with `X A_g = B_g X` for every generator, if one exists.
pub fn find_isomorphism(a: &FDHModule, b: &FDHModule, seed: u64) -> Option<Matrix> {
    if a.dim != b.dim || a.n != b.n || a.q != b.q {
        return None;
    }
    let d = a.dim;
    if d == 0 {
        return Some(Matrix::zeros(0, 0));
    }
    // unknown X[r][c] sits at index r·d + c
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (ga, gb) in a.generators().into_iter().zip(b.generators()) {
        for r in 0..d {
            for c in 0..d {
                let mut eq = vec![Rat::zero(); d * d];
                for k in 0..d {
                    eq[r * d + k] += &ga[(k, c)];
                    eq[k * d + c] -= &gb[(r, k)];
                }
                rows.push(eq);
            }
        }
    }
    let solutions = if rows.is_empty() { Matrix::identity(d * d).to_rows() } else { Matrix::from_rows(rows).kernel() };
    let as_matrix = |v: &[Rat]| Matrix::from_rows(v.chunks(d).map(<[Rat]>::to_vec).collect());
    for s in &solutions {
        let x = as_matrix(s);
        if !x.determinant().is_zero() {
            return Some(x);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..32 {
        let mut v = vec![Rat::zero(); d * d];
        for s in &solutions {
            let c = rat(rng.gen_range(-1000..=1000));
            for (vi, si) in v.iter_mut().zip(s) {
                *vi += &c * si;
            }
        }
        let x = as_matrix(&v);
        if !x.determinant().is_zero() {
            return Some(x);
        }
    }
    None
}

/// One truncation level of the comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelReport {
    pub level: usize,
    /// `dim Ind(M₁/𝒥₁ʲM₁ ⊗ M₂/𝒥₂ʲM₂)`.
    pub induced_of_truncations: usize,
    /// `dim Ind(M₁ ⊗ M₂) / 𝒥ʲ`.
    pub truncation_of_induced: usize,
    pub isomorphic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionReport {
    pub levels: Vec<LevelReport>,
    /// A level from which both towers are constant.
    pub stable_level: usize,
    /// Both towers have isomorphic limits (compared at `stable_level`).
    pub limits_agree: bool,
}

impl CompletionReport {
    /// Isomorphic at every requested level.
    pub fn holds(&self) -> bool {
        self.levels.iter().all(|l| l.isomorphic)
    }
}

/// Compares `Ind(M₁/𝒥₁ʲ, M₂/𝒥₂ʲ)` with `Ind(M₁, M₂)/𝒥ʲ` for `j = 1..=k`.
pub fn completion_commutes_report(m1: &FDHModule, m2: &FDHModule, k: usize, seed: u64) -> Result<CompletionReport, HeckeError> {
    if m1.q != m2.q {
        return Err(HeckeError::ParameterMismatch(format!("q = {} and q = {}", m1.q, m2.q)));
    }
    let (j1, j2) = (central_character_ideal(m1)?, central_character_ideal(m2)?);
    let full = induce_module(m1, m2)?;
    let j = central_character_ideal(&full)?;
    let compare = |level: usize| -> Result<LevelReport, HeckeError> {
        let lhs = induce_module(&truncate(m1, &j1, level)?, &truncate(m2, &j2, level)?)?;
        let rhs = truncate(&full, &j, level)?;
        let isomorphic = find_isomorphism(&lhs, &rhs, seed).is_some();
        Ok(LevelReport { level, induced_of_truncations: lhs.dim, truncation_of_induced: rhs.dim, isomorphic })
    };
    let levels = (1..=k).map(compare).collect::<Result<Vec<_>, _>>()?;
    let stable_level = j1.nilpotency.max(j2.nilpotency).max(j.nilpotency).max(1);
    let limits_agree = compare(stable_level)?.isomorphic;
    Ok(CompletionReport { levels, stable_level, limits_agree })
}

pub fn completion_commutes_check(m1: &FDHModule, m2: &FDHModule, k: usize) -> Result<bool, HeckeError> {
    Ok(completion_commutes_report(m1, m2, k, 0)?.holds())
}
