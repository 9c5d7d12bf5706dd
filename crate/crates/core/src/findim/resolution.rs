//! Projective resolutions by successive covers and syzygies.

use num::Zero;

use super::module::{kernel_submodule, map_from_generators, FDModule, ProjSum};
use super::quiver::QuiverAlgebra;
use super::FindimError;
use crate::linalg::{complement_basis, Matrix, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverKind {
    /// Projective cover: generators lift a basis of `M / rad M`.
    Minimal,
    /// One generator per basis vector of `M`.
    Full,
}

/// `⋯ → P_1 → P_0 → M → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub module: FDModule,
    pub terms: Vec<ProjSum>,
    /// Images in `M` of the generators of `P_0`.
    pub augmentation: Vec<Vec<Rat>>,
    /// Per-vertex matrices of `P_0 → M`.
    pub augmentation_maps: Vec<Matrix>,
    /// `differentials[k]` holds the per-vertex matrices of `d_{k+1}: P_{k+1} → P_k`.
    pub differentials: Vec<Vec<Matrix>>,
    /// True when the last syzygy vanished, so the resolution is finite and complete.
    pub complete: bool,
}

fn cover(alg: &QuiverAlgebra, m: &FDModule, kind: CoverKind) -> (Vec<usize>, Vec<Vec<Rat>>) {
    let mut gens = Vec::new();
    let mut images = Vec::new();
    for v in 0..alg.vertices.len() {
        let picks: Vec<usize> = match kind {
            CoverKind::Minimal => complement_basis(&m.radical_basis(alg, v), m.dims[v]),
            CoverKind::Full => (0..m.dims[v]).collect(),
        };
        for i in picks {
            let mut e = vec![Rat::zero(); m.dims[v]];
            e[i] = num::One::one();
            gens.push(v);
            images.push(e);
        }
    }
    (gens, images)
}

/// Resolution with terms `P_0 … P_length` (fewer when it terminates).
pub fn projective_resolution(alg: &QuiverAlgebra, m: &FDModule, length: usize) -> Result<Resolution, FindimError> {
    resolve(alg, m, length, CoverKind::Minimal)
}

pub fn resolve(alg: &QuiverAlgebra, m: &FDModule, length: usize, kind: CoverKind) -> Result<Resolution, FindimError> {
    m.check(alg)?;
    let mut terms: Vec<ProjSum> = Vec::new();
    let mut differentials = Vec::new();
    let (gens, augmentation) = cover(alg, m, kind);
    let p0 = ProjSum::new(alg, gens);
    let augmentation_maps = map_from_generators(alg, &p0, m, &augmentation);
    let (mut syzygy, mut inclusion) = kernel_submodule(alg, &p0.module, &augmentation_maps);
    terms.push(p0);
    let mut complete = syzygy.is_zero();
    while !complete && terms.len() <= length {
        let (gens, images) = cover(alg, &syzygy, kind);
        let p = ProjSum::new(alg, gens);
        let onto = map_from_generators(alg, &p, &syzygy, &images);
        let d: Vec<Matrix> = inclusion.iter().zip(&onto).map(|(i, e)| i * e).collect();
        let (next, next_inclusion) = kernel_submodule(alg, &p.module, &onto);
        terms.push(p);
        differentials.push(d);
        syzygy = next;
        inclusion = next_inclusion;
        complete = syzygy.is_zero();
    }
    let res = Resolution { module: m.clone(), terms, augmentation, augmentation_maps, differentials, complete };
    res.verify()?;
    Ok(res)
}

impl Resolution {
    pub fn len(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `d² = 0` and exactness at every computed term, by rank.
    pub fn verify(&self) -> Result<(), FindimError> {
        let nv = self.module.dims.len();
        for x in 0..nv {
            let aug = &self.augmentation_maps[x];
            if aug.rank() != self.module.dims[x] {
                return Err(FindimError::NotExact(format!("augmentation not onto at vertex {x}")));
            }
            for k in 0..self.terms.len() {
                let incoming = self.differentials.get(k).map(|d| &d[x]);
                let outgoing = if k == 0 { aug } else { &self.differentials[k - 1][x] };
                let in_rank = incoming.map_or(0, Matrix::rank);
                if let Some(d) = incoming {
                    if !(outgoing * d).is_zero() {
                        return Err(FindimError::NotExact(format!("d² ≠ 0 at degree {k}, vertex {x}")));
                    }
                }
                let last = k + 1 == self.terms.len();
                if (!last || self.complete) && in_rank + outgoing.rank() != self.terms[k].module.dims[x] {
                    return Err(FindimError::NotExact(format!("homology at degree {k}, vertex {x}")));
                }
            }
        }
        Ok(())
    }

    /// Display form such as `0 → Z → Q → P → X → 0`, naming `P_v` by `names[v]`.
    pub fn shape(&self, projective_names: &[String], module_name: &str) -> String {
        let mut parts = Vec::new();
        if self.complete {
            parts.push("0".to_string());
        }
        for t in self.terms.iter().rev() {
            let name = if t.is_zero() { "0".to_string() } else { t.gens.iter().map(|&v| projective_names[v].clone()).collect::<Vec<_>>().join(" ⊕ ") };
            parts.push(name);
        }
        parts.push(module_name.to_string());
        parts.push("0".to_string());
        parts.join(" → ")
    }
}
