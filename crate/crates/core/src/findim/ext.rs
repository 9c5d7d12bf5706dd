//! Hom complexes of projective complexes and their cohomology.

use num::Zero;

use super::module::{FDModule, ProjSum};
use super::quiver::QuiverAlgebra;
use super::resolution::{projective_resolution, Resolution};
use super::FindimError;
use crate::linalg::{span_rank, Matrix, Rat};

/// Sparse image of a generator: `(summand, basis index in that projective, coefficient)`.
pub type ProjElement = Vec<(usize, usize, Rat)>;

/// A complex of projectives `C_k = ⊕_s P_{gens[k][s]}`; `diffs[k][t]` is the image in
/// `C_k` of generator `t` of `C_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjComplex {
    pub gens: Vec<Vec<usize>>,
    pub diffs: Vec<Vec<ProjElement>>,
}

impl ProjComplex {
    pub fn from_resolution(res: &Resolution) -> Self {
        let gens = res.terms.iter().map(|t| t.gens.clone()).collect();
        let diffs = res
            .differentials
            .iter()
            .enumerate()
            .map(|(k, d)| {
                let (src, dst) = (&res.terms[k + 1], &res.terms[k]);
                (0..src.gens.len())
                    .map(|t| {
                        let (v, pos) = src.generator(t);
                        dst.decompose(v, &d[v].col(pos))
                    })
                    .collect()
            })
            .collect();
        ProjComplex { gens, diffs }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    fn term(&self, k: usize) -> &[usize] {
        self.gens.get(k).map_or(&[], Vec::as_slice)
    }

    /// Per-vertex matrices of `d_{k+1}: C_{k+1} → C_k`.
    pub fn vertex_matrices(&self, alg: &QuiverAlgebra, k: usize) -> Vec<Matrix> {
        let src = ProjSum::new(alg, self.term(k + 1).to_vec());
        let dst = ProjSum::new(alg, self.term(k).to_vec());
        (0..alg.vertices.len())
            .map(|x| {
                let cols: Vec<Vec<Rat>> = src.layout[x]
                    .iter()
                    .map(|&(t, b)| {
                        let v = src.gens[t];
                        let image = dst.assemble(v, &self.diffs[k][t]);
                        let path = &alg.projective(v).basis[b];
                        dst.module.path_matrix(alg, path).apply(&image)
                    })
                    .collect();
                Matrix::from_cols(dst.module.dims[x], &cols)
            })
            .collect()
    }

    /// Checks `d_k ∘ d_{k+1} = 0` at every vertex and degree.
    pub fn is_complex(&self, alg: &QuiverAlgebra) -> bool {
        (1..self.diffs.len()).all(|k| {
            let lower = self.vertex_matrices(alg, k - 1);
            let upper = self.vertex_matrices(alg, k);
            lower.iter().zip(&upper).all(|(a, b)| (a * b).is_zero())
        })
    }

    /// Homology dimension at degree `k` (positive degrees), by rank.
    pub fn homology_dim(&self, alg: &QuiverAlgebra, k: usize) -> usize {
        let dims = ProjSum::new(alg, self.term(k).to_vec()).module.dims;
        let out: usize = if k == 0 { 0 } else { self.vertex_matrices(alg, k - 1).iter().map(Matrix::rank).sum() };
        let inc: usize = if k < self.diffs.len() { self.vertex_matrices(alg, k).iter().map(Matrix::rank).sum() } else { 0 };
        dims.iter().sum::<usize>() - out - inc
    }

    /// Coordinates of `Hom(C_k, N) = ⊕_s N_{gens[k][s]}`.
    pub fn hom_dim(&self, n: &FDModule, k: usize) -> usize {
        self.term(k).iter().map(|&v| n.dims[v]).sum()
    }

    /// The coboundary `δ_k: Hom(C_k, N) → Hom(C_{k+1}, N)`, `f ↦ f ∘ d_{k+1}`.
    pub fn cochain_map(&self, alg: &QuiverAlgebra, n: &FDModule, k: usize) -> Matrix {
        let src = self.term(k);
        let offsets: Vec<usize> = src.iter().scan(0, |acc, &v| {
            let o = *acc;
            *acc += n.dims[v];
            Some(o)
        }).collect();
        let mut m = Matrix::zeros(self.hom_dim(n, k + 1), self.hom_dim(n, k));
        let Some(images) = self.diffs.get(k) else { return m };
        let mut row = 0;
        for (t, image) in images.iter().enumerate() {
            let vt = self.gens[k + 1][t];
            for (s, b, c) in image {
                let path = &alg.projective(src[*s]).basis[*b];
                let block = n.path_matrix(alg, path).scale(c);
                for i in 0..block.rows() {
                    for j in 0..block.cols() {
                        if !block[(i, j)].is_zero() {
                            let v = &m[(row + i, offsets[*s] + j)] + &block[(i, j)];
                            m[(row + i, offsets[*s] + j)] = v;
                        }
                    }
                }
            }
            row += n.dims[vt];
        }
        m
    }

    /// `dim H^k Hom(C_•, N)`.
    pub fn cohomology_dim(&self, alg: &QuiverAlgebra, n: &FDModule, k: usize) -> usize {
        let out = self.cochain_map(alg, n, k).rank();
        let inc = if k == 0 { 0 } else { self.cochain_map(alg, n, k - 1).rank() };
        self.hom_dim(n, k) - out - inc
    }

    pub fn is_cocycle(&self, alg: &QuiverAlgebra, n: &FDModule, class: &ExtClass) -> bool {
        self.cochain_map(alg, n, class.degree).apply(&class.cocycle).iter().all(Zero::is_zero)
    }

    pub fn is_coboundary(&self, alg: &QuiverAlgebra, n: &FDModule, class: &ExtClass) -> bool {
        if class.degree == 0 {
            return class.cocycle.iter().all(Zero::is_zero);
        }
        let image = self.cochain_map(alg, n, class.degree - 1);
        let mut cols: Vec<Vec<Rat>> = (0..image.cols()).map(|c| image.col(c)).collect();
        let len = class.cocycle.len();
        let before = span_rank(&cols, len);
        cols.push(class.cocycle.clone());
        span_rank(&cols, len) == before
    }

    /// Cocycles representing a basis of `H^k Hom(C_•, N)`.
    pub fn cohomology_basis(&self, alg: &QuiverAlgebra, n: &FDModule, k: usize) -> Vec<ExtClass> {
        let len = self.hom_dim(n, k);
        let mut span: Vec<Vec<Rat>> = if k == 0 {
            Vec::new()
        } else {
            let image = self.cochain_map(alg, n, k - 1);
            (0..image.cols()).map(|c| image.col(c)).collect()
        };
        let mut rank = span_rank(&span, len);
        let mut out = Vec::new();
        for z in self.cochain_map(alg, n, k).kernel() {
            span.push(z.clone());
            let r = span_rank(&span, len);
            if r > rank {
                rank = r;
                out.push(ExtClass { degree: k, cocycle: z });
            } else {
                span.pop();
            }
        }
        out
    }
}

/// A degree-`n` cocycle `f ∈ Hom(P_n, N) = ⊕_s N_{v_s}`, relative to a fixed resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtClass {
    pub degree: usize,
    pub cocycle: Vec<Rat>,
}

/// `dim Ext^i_A(M, N)` through a minimal projective resolution of `M`.
pub fn ext_dim(alg: &QuiverAlgebra, m: &FDModule, n: &FDModule, i: usize) -> Result<usize, FindimError> {
    n.check(alg)?;
    let res = projective_resolution(alg, m, i + 1)?;
    Ok(ProjComplex::from_resolution(&res).cohomology_dim(alg, n, i))
}

/// `dim Ext^i` through an arbitrary resolution.
pub fn ext_dim_with(alg: &QuiverAlgebra, res: &Resolution, n: &FDModule, i: usize) -> usize {
    ProjComplex::from_resolution(res).cohomology_dim(alg, n, i)
}

/// Representing cocycles of a basis of `Ext^i_A(M, N)`.
pub fn ext_basis(alg: &QuiverAlgebra, res: &Resolution, n: &FDModule, i: usize) -> Vec<ExtClass> {
    ProjComplex::from_resolution(res).cohomology_basis(alg, n, i)
}
