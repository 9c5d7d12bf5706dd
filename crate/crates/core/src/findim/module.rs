//! Finite-dimensional representations of bound quivers.

use num::Zero;

use super::quiver::{Path, QuiverAlgebra};
use super::FindimError;
use crate::linalg::{Matrix, Rat};

/// A representation: a space `ℚ^{dims[v]}` per vertex and a matrix per arrow
/// (`maps[a]` is `dims[target] × dims[source]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDModule {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
}

impl FDModule {
    pub fn new(alg: &QuiverAlgebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self, FindimError> {
        let m = FDModule { dims, maps };
        m.check(alg)?;
        Ok(m)
    }

    pub fn zero(alg: &QuiverAlgebra) -> Self {
        let dims = vec![0; alg.vertices.len()];
        FDModule::with_zero_maps(alg, dims)
    }

    fn with_zero_maps(alg: &QuiverAlgebra, dims: Vec<usize>) -> Self {
        let maps = alg.arrows.iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
        FDModule { dims, maps }
    }

    pub fn simple(alg: &QuiverAlgebra, v: usize) -> Self {
        let mut dims = vec![0; alg.vertices.len()];
        dims[v] = 1;
        FDModule::with_zero_maps(alg, dims)
    }

    /// `P_v` as a representation; the basis at `x` is the basis paths of `P_v` ending at `x`.
    pub fn projective(alg: &QuiverAlgebra, v: usize) -> Self {
        let p = alg.projective(v);
        let ends: Vec<usize> = p.basis.iter().map(|b| b.end(&alg.arrows)).collect();
        let mut pos = vec![0; p.dim()];
        let mut dims = vec![0; alg.vertices.len()];
        for (k, &e) in ends.iter().enumerate() {
            pos[k] = dims[e];
            dims[e] += 1;
        }
        let mut m = FDModule::with_zero_maps(alg, dims);
        for (ai, a) in alg.arrows.iter().enumerate() {
            for (k, b) in p.basis.iter().enumerate().filter(|(k, _)| ends[*k] == a.source) {
                let image = p.normal_form(&b.then(&Path { start: a.source, arrows: vec![ai] }));
                for (j, c) in image.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    m.maps[ai][(pos[j], pos[k])] = c.clone();
                }
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn check(&self, alg: &QuiverAlgebra) -> Result<(), FindimError> {
        if self.dims.len() != alg.vertices.len() || self.maps.len() != alg.arrows.len() {
            return Err(FindimError::InvalidModule("vertex or arrow count does not match the algebra".into()));
        }
        for (m, a) in self.maps.iter().zip(&alg.arrows) {
            if m.rows() != self.dims[a.target] || m.cols() != self.dims[a.source] {
                return Err(FindimError::InvalidModule(format!("matrix for {} has the wrong shape", a.name)));
            }
        }
        for (k, r) in alg.relations.iter().enumerate() {
            let (s, t) = (r.terms[0].1.start, r.terms[0].1.end(&alg.arrows));
            let mut sum = Matrix::zeros(self.dims[t], self.dims[s]);
            for (c, p) in &r.terms {
                sum = &sum + &self.path_matrix(alg, p).scale(c);
            }
            if !sum.is_zero() {
                return Err(FindimError::InvalidModule(format!("relation {k} does not vanish")));
            }
        }
        Ok(())
    }

    /// The linear map `M_{start(p)} → M_{end(p)}` of a path.
    pub fn path_matrix(&self, alg: &QuiverAlgebra, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.dims[p.start]);
        for &a in &p.arrows {
            m = &self.maps[a] * &m;
        }
        debug_assert_eq!(m.rows(), self.dims[p.end(&alg.arrows)]);
        m
    }

    /// A basis of `(rad M)_v`, the sum of images of arrows into `v`.
    pub fn radical_basis(&self, alg: &QuiverAlgebra, v: usize) -> Vec<Vec<Rat>> {
        let cols: Vec<Vec<Rat>> = alg
            .arrows
            .iter()
            .enumerate()
            .filter(|(_, a)| a.target == v)
            .flat_map(|(i, _)| (0..self.maps[i].cols()).map(move |c| (i, c)))
            .map(|(i, c)| self.maps[i].col(c))
            .collect();
        crate::linalg::span_basis(&cols, self.dims[v])
    }

    pub fn direct_sum(&self, other: &FDModule) -> FDModule {
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| block_diag(a, b)).collect();
        FDModule { dims, maps }
    }
}

fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            m[(i, j)] = a[(i, j)].clone();
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            m[(a.rows() + i, a.cols() + j)] = b[(i, j)].clone();
        }
    }
    m
}

/// `⊕_s P_{gens[s]}` with a fixed layout of basis vectors at every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjSum {
    pub gens: Vec<usize>,
    pub module: FDModule,
    /// `layout[x]` lists `(summand, basis index in P_{gens[summand]})` in coordinate order at `x`.
    pub layout: Vec<Vec<(usize, usize)>>,
}

impl ProjSum {
    pub fn new(alg: &QuiverAlgebra, gens: Vec<usize>) -> Self {
        let mut module = FDModule::zero(alg);
        let mut layout = vec![Vec::new(); alg.vertices.len()];
        for (s, &v) in gens.iter().enumerate() {
            module = module.direct_sum(&FDModule::projective(alg, v));
            for (k, b) in alg.projective(v).basis.iter().enumerate() {
                layout[b.end(&alg.arrows)].push((s, k));
            }
        }
        ProjSum { gens, module, layout }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Coordinate at vertex `x` of basis element `k` of summand `s`.
    pub fn position(&self, x: usize, s: usize, k: usize) -> usize {
        self.layout[x].iter().position(|&e| e == (s, k)).expect("basis element ends at x")
    }

    /// Coordinate of the generator `e_{gens[s]}` of summand `s`.
    pub fn generator(&self, s: usize) -> (usize, usize) {
        let v = self.gens[s];
        (v, self.position(v, s, 0))
    }

    /// Splits a vector at vertex `x` into `(summand, basis index, coefficient)` entries.
    pub fn decompose(&self, x: usize, v: &[Rat]) -> Vec<(usize, usize, Rat)> {
        self.layout[x]
            .iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&(s, k), c)| (s, k, c.clone()))
            .collect()
    }

    /// Vector at vertex `x` from sparse entries.
    pub fn assemble(&self, x: usize, entries: &[(usize, usize, Rat)]) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.module.dims[x]];
        for (s, k, c) in entries {
            v[self.position(x, *s, *k)] += c;
        }
        v
    }
}

/// Per-vertex matrices of the map `⊕ P_{gens[s]} → M` sending `e_{gens[s]}` to `images[s]`.
pub fn map_from_generators(alg: &QuiverAlgebra, p: &ProjSum, target: &FDModule, images: &[Vec<Rat>]) -> Vec<Matrix> {
    (0..alg.vertices.len())
        .map(|x| {
            let cols: Vec<Vec<Rat>> = p.layout[x]
                .iter()
                .map(|&(s, k)| {
                    let path = &alg.projective(p.gens[s]).basis[k];
                    target.path_matrix(alg, path).apply(&images[s])
                })
                .collect();
            Matrix::from_cols(target.dims[x], &cols)
        })
        .collect()
}

/// Kernel of a module map given per vertex, with its inclusion matrices.
pub fn kernel_submodule(alg: &QuiverAlgebra, source: &FDModule, map: &[Matrix]) -> (FDModule, Vec<Matrix>) {
    let bases: Vec<Matrix> = (0..alg.vertices.len())
        .map(|x| {
            Matrix::from_cols(source.dims[x], &map[x].kernel())
        })
        .collect();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let maps = alg
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let image = &source.maps[ai] * &bases[a.source];
            let cols: Vec<Vec<Rat>> = (0..image.cols())
                .map(|c| bases[a.target].solve(&image.col(c)).expect("kernel is a submodule"))
                .collect();
            Matrix::from_cols(dims[a.target], &cols)
        })
        .collect();
    (FDModule { dims, maps }, bases)
}
