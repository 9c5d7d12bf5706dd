//! Extending a cocycle `f: P_n → τ₂` to `f̃ = (e ⊗ f)` on the tensor resolution
//! `Q_• ⊗ P_•` of `ω ⊠ τ₁`, zero on every summand `Q_i ⊗ P_{n-i}` with `i > 0`.

use std::collections::HashMap;

use num::Zero;

use super::ext::{ExtClass, ProjComplex, ProjElement};
use super::module::FDModule;
use super::quiver::{Path, QuiverAlgebra};
use super::resolution::Resolution;
use super::tensor::{lift_pair, tensor_algebra, tensor_module};
use super::FindimError;
use crate::linalg::{Matrix, Rat};

/// A generator `(i, s, j, t)` of `Q_i ⊗ P_j`: summand `s` of `Q_i` times summand `t` of `P_j`.
type Gen = (usize, usize, usize, usize);

/// The total complex of `Q_• ⊗ P_•` with `h = d_Q ⊗ 1 + (-1)^i 1 ⊗ d_P`.
pub struct TensorResolution {
    pub algebra: QuiverAlgebra,
    pub complex: ProjComplex,
    /// `labels[k][g]` names generator `g` of degree `k`.
    labels: Vec<Vec<Gen>>,
}

impl TensorResolution {
    pub fn new(b: &QuiverAlgebra, q: &Resolution, a: &QuiverAlgebra, p: &Resolution) -> Self {
        let algebra = tensor_algebra(b, a);
        let top = q.len() + p.len();
        let mut labels: Vec<Vec<Gen>> = Vec::new();
        let mut gens: Vec<Vec<usize>> = Vec::new();
        for k in 0..=top {
            let mut lk = Vec::new();
            let mut gk = Vec::new();
            for i in 0..=k.min(q.len()) {
                let j = k - i;
                if j > p.len() {
                    continue;
                }
                for (s, &u) in q.terms[i].gens.iter().enumerate() {
                    for (t, &v) in p.terms[j].gens.iter().enumerate() {
                        lk.push((i, s, j, t));
                        gk.push(u * a.vertices.len() + v);
                    }
                }
            }
            labels.push(lk);
            gens.push(gk);
        }
        let qc = ProjComplex::from_resolution(q);
        let pc = ProjComplex::from_resolution(p);
        let index: Vec<HashMap<Gen, usize>> =
            labels.iter().map(|l| l.iter().enumerate().map(|(g, &x)| (x, g)).collect()).collect();
        let mut diffs = Vec::new();
        for k in 1..=top {
            let images: Vec<ProjElement> = labels[k]
                .iter()
                .map(|&(i, s, j, t)| {
                    let mut out: ProjElement = Vec::new();
                    let (u, v) = (q.terms[i].gens[s], p.terms[j].gens[t]);
                    if i > 0 {
                        for (s2, bidx, c) in &qc.diffs[i - 1][s] {
                            let target = index[k - 1][&(i - 1, *s2, j, t)];
                            let path = lift_pair(b, a, &b.projective(q.terms[i - 1].gens[*s2]).basis[*bidx], &Path::trivial(v));
                            push_path(&algebra, &mut out, target, gens[k - 1][target], &path, c);
                        }
                    }
                    if j > 0 {
                        let sign: Rat = if i % 2 == 0 { num::One::one() } else { -<Rat as num::One>::one() };
                        for (t2, bidx, c) in &pc.diffs[j - 1][t] {
                            let target = index[k - 1][&(i, s, j - 1, *t2)];
                            let path = lift_pair(b, a, &Path::trivial(u), &a.projective(p.terms[j - 1].gens[*t2]).basis[*bidx]);
                            push_path(&algebra, &mut out, target, gens[k - 1][target], &path, &(&sign * c));
                        }
                    }
                    out
                })
                .collect();
            diffs.push(images);
        }
        TensorResolution { algebra, complex: ProjComplex { gens, diffs }, labels }
    }
}

fn push_path(alg: &QuiverAlgebra, out: &mut ProjElement, summand: usize, vertex: usize, path: &Path, c: &Rat) {
    let coords = alg.projective(vertex).normal_form(path);
    for (k, x) in coords.into_iter().enumerate() {
        if !x.is_zero() {
            let v = c * &x;
            match out.iter_mut().find(|(s, b, _)| *s == summand && *b == k) {
                Some(e) => e.2 += v,
                None => out.push((summand, k, v)),
            }
        }
    }
    out.retain(|e| !e.2.is_zero());
}

/// Result of [`embed_class`].
pub struct EmbeddedClass {
    pub tensor: TensorResolution,
    /// `ω ⊠ τ₂`.
    pub target: FDModule,
    pub class: ExtClass,
    /// `h` squares to zero and the total complex resolves `ω ⊠ τ₁`.
    pub resolution_ok: bool,
    /// `f̃ ∘ h_{n+1} = 0`.
    pub cocycle_ok: bool,
    pub is_coboundary: bool,
}

/// Extends `f ∈ Ext^n_A(τ₁, τ₂)` (on the resolution `p` of `τ₁`) along the
/// augmentation of `q` (a resolution of `ω` over `B`) to a class over `B ⊗ A`.
pub fn embed_class(
    b: &QuiverAlgebra,
    q: &Resolution,
    a: &QuiverAlgebra,
    p: &Resolution,
    tau2: &FDModule,
    f: &ExtClass,
) -> Result<EmbeddedClass, FindimError> {
    let pc = ProjComplex::from_resolution(p);
    if f.degree > p.len() || f.cocycle.len() != pc.hom_dim(tau2, f.degree) {
        return Err(FindimError::InvalidModule("cocycle does not live on the given resolution".into()));
    }
    if !pc.is_cocycle(a, tau2, f) {
        return Err(FindimError::NotACocycle);
    }
    let tensor = TensorResolution::new(b, q, a, p);
    let target = tensor_module(b, a, &q.module, tau2);
    let n = f.degree;
    let alg = &tensor.algebra;

    let offsets: Vec<usize> = p.terms[n].gens.iter().scan(0, |acc, &v| {
        let o = *acc;
        *acc += tau2.dims[v];
        Some(o)
    }).collect();
    let mut cocycle = Vec::with_capacity(tensor.complex.hom_dim(&target, n));
    for &(i, s, j, t) in &tensor.labels[n] {
        let (u, v) = (q.terms[i].gens[s], p.terms[j].gens[t]);
        if i == 0 {
            let ft = &f.cocycle[offsets[t]..offsets[t] + tau2.dims[v]];
            let e = Matrix::from_cols(q.module.dims[u], &[q.augmentation[s].clone()]);
            let fv = Matrix::from_cols(tau2.dims[v], &[ft.to_vec()]);
            cocycle.extend(e.kron(&fv).col(0));
        } else {
            cocycle.extend(std::iter::repeat_n(Rat::zero(), q.module.dims[u] * tau2.dims[v]));
        }
    }
    let class = ExtClass { degree: n, cocycle };

    let source = tensor_module(b, a, &q.module, &p.module);
    let resolution_ok = tensor.complex.is_complex(alg) && resolves(&tensor, &source, q, p);
    let cocycle_ok = tensor.complex.is_cocycle(alg, &target, &class);
    let is_coboundary = tensor.complex.is_coboundary(alg, &target, &class);
    Ok(EmbeddedClass { tensor, target, class, resolution_ok, cocycle_ok, is_coboundary })
}

/// Positive-degree homology vanishes and `H_0` has the dimension of `ω ⊠ τ₁`.
fn resolves(t: &TensorResolution, source: &FDModule, q: &Resolution, p: &Resolution) -> bool {
    let alg = &t.algebra;
    // a truncated factor of length L contributes homology from degree L on
    let bound = [q, p].iter().filter(|r| !r.complete).map(|r| r.len()).min().unwrap_or(t.complex.len());
    bound >= 1 && (1..bound).all(|k| t.complex.homology_dim(alg, k) == 0) && t.complex.homology_dim(alg, 0) == source.dim()
}
