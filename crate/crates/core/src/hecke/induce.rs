//! Parabolic induction `ℋ_n ⊗_{ℋ_{n₁} ⊗ ℋ_{n₂}} (M₁ ⊗ M₂)`.

use num::Zero;

use super::element::HElement;
use super::module::FDHModule;
use super::perm::Perm;
use super::HeckeError;
use crate::linalg::Matrix;

/// The induced module on the basis `T_x ⊗ v`, `x` running over minimal coset
/// representatives (block-major, in the order of [`Perm::min_coset_reps`]).
pub fn induce_module(m1: &FDHModule, m2: &FDHModule) -> Result<FDHModule, HeckeError> {
    if m1.q != m2.q {
        return Err(HeckeError::ParameterMismatch(format!("q = {} and q = {}", m1.q, m2.q)));
    }
    let (n1, n2) = (m1.n, m2.n);
    let n = n1 + n2;
    let reps = Perm::min_coset_reps(n, n1);
    let d = m1.dim * m2.dim;
    let dim = reps.len() * d;
    let gens: Vec<HElement> = (0..n.saturating_sub(1)).map(|i| HElement::t(n, i)).chain((0..n).map(|j| HElement::y(n, j, 1))).collect();
    let mut mats = Vec::with_capacity(gens.len());
    for g in &gens {
        let mut m = Matrix::zeros(dim, dim);
        for (xi, x) in reps.iter().enumerate() {
            // g·T_x = ι(T_{x⁻¹}·g), rewritten as Σ c T_{w⁻¹} y^μ
            let left = HElement::t_w(x.inverse()).mul(g);
            for ((mu, w), c) in left.terms() {
                let c = c.eval(&m1.q).ok_or_else(|| HeckeError::ParameterMismatch(format!("pole of {c} at q")))?;
                let (x2, u) = w.inverse().coset_split(n1);
                let (u1, u2) = u.split_blocks(n1);
                let block = &m1.t_perm(&u1).kron(&m2.t_perm(&u2)) * &m1.y_power(&mu[..n1]).kron(&m2.y_power(&mu[n1..]));
                let row0 = reps.iter().position(|r| *r == x2).expect("coset representative") * d;
                for r in 0..d {
                    for k in 0..d {
                        let v = &block[(r, k)];
                        if !v.is_zero() {
                            let cur = &m[(row0 + r, xi * d + k)] + &(&c * v);
                            m[(row0 + r, xi * d + k)] = cur;
                        }
                    }
                }
            }
        }
        mats.push(m);
    }
    let y = mats.split_off(n.saturating_sub(1));
    if n == 0 {
        return Ok(FDHModule::unit(m1.q.clone()));
    }
    FDHModule::new(m1.q.clone(), mats, y)
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
