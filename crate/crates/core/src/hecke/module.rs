//! Finite-dimensional modules over `ℋ(n, q)` with `q` specialised to a rational.

use num::{One, Zero};

use super::element::HElement;
use super::perm::Perm;
use super::HeckeError;
use crate::linalg::{Matrix, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDHModule {
    pub n: usize,
    pub q: Rat,
    pub dim: usize,
    /// `t[i]` acts as `T_{i+1}`.
    pub t: Vec<Matrix>,
    pub y: Vec<Matrix>,
    pub y_inv: Vec<Matrix>,
}

impl FDHModule {
    pub fn new(q: Rat, t: Vec<Matrix>, y: Vec<Matrix>) -> Result<Self, HeckeError> {
        let n = y.len();
        if t.len() + 1 != n.max(1) {
            return Err(HeckeError::InvalidModule(format!("{} T-matrices for n = {n}", t.len())));
        }
        let dim = y.first().map_or(1, Matrix::rows);
        if t.iter().chain(&y).any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(HeckeError::InvalidModule("matrices of inconsistent size".into()));
        }
        let y_inv = y
            .iter()
            .map(|m| m.inverse().ok_or_else(|| HeckeError::InvalidModule("some y_j is not invertible".into())))
            .collect::<Result<Vec<_>, _>>()?;
        let m = FDHModule { n, q, dim, t, y, y_inv };
        m.check_relations()?;
        Ok(m)
    }

    /// The one-dimensional module of `ℋ(0, q) = ℚ`.
    pub fn unit(q: Rat) -> Self {
        FDHModule { n: 0, q, dim: 1, t: Vec::new(), y: Vec::new(), y_inv: Vec::new() }
    }

    /// `ℋ(1, q) = ℚ[y^{±1}]` acting by `y ↦ α`.
    pub fn character(q: Rat, alpha: Rat) -> Result<Self, HeckeError> {
        FDHModule::new(q, Vec::new(), vec![Matrix::scalar(1, &alpha)])
    }

    /// `y ↦ [[α, 1], [0, α]]`: a length-two module with a single central character.
    pub fn jordan_block(q: Rat, alpha: Rat) -> Result<Self, HeckeError> {
        let mut m = Matrix::scalar(2, &alpha);
        m[(0, 1)] = Rat::one();
        FDHModule::new(q, Vec::new(), vec![m])
    }

    /// One-dimensional module with `T_i ↦ q` (`trivial = true`) or `-1`, and `y_1 ↦ α`.
    pub fn one_dimensional(n: usize, q: Rat, alpha: Rat, trivial: bool) -> Result<Self, HeckeError> {
        let tv = if trivial { q.clone() } else { -Rat::one() };
        // T_i y_i T_i = q y_{i+1} forces y_{i+1} = (tv² / q) y_i
        let step = &tv * &tv / &q;
        let mut ys = Vec::new();
        let mut cur = alpha;
        for _ in 0..n {
            ys.push(Matrix::scalar(1, &cur));
            cur = &cur * &step;
        }
        FDHModule::new(q, vec![Matrix::scalar(1, &tv); n.saturating_sub(1)], ys)
    }

    fn identity(&self) -> Matrix {
        Matrix::identity(self.dim)
    }

    pub fn check_relations(&self) -> Result<(), HeckeError> {
        let fail = |what: String| Err(HeckeError::RelationFails(what));
        let q = &self.q;
        for i in 0..self.t.len() {
            let t = &self.t[i];
            let quad = &(t - &Matrix::scalar(self.dim, q)) * &(t + &self.identity());
            if !quad.is_zero() {
                return fail(format!("quadratic relation for T_{}", i + 1));
            }
            if i + 1 < self.t.len() {
                let u = &self.t[i + 1];
                if (&(t * u) * t) != (&(u * t) * u) {
                    return fail(format!("braid relation for T_{}, T_{}", i + 1, i + 2));
                }
            }
            for j in i + 2..self.t.len() {
                if (t * &self.t[j]) != (&self.t[j] * t) {
                    return fail(format!("T_{} and T_{} do not commute", i + 1, j + 1));
                }
            }
            if (&(t * &self.y[i]) * t) != self.y[i + 1].scale(q) {
                return fail(format!("T_{0} y_{0} T_{0} = q y_{1}", i + 1, i + 2));
            }
            for j in (0..self.n).filter(|&j| j != i && j != i + 1) {
                if (t * &self.y[j]) != (&self.y[j] * t) {
                    return fail(format!("T_{} and y_{} do not commute", i + 1, j + 1));
                }
            }
        }
        for a in 0..self.n {
            for b in a + 1..self.n {
                if (&self.y[a] * &self.y[b]) != (&self.y[b] * &self.y[a]) {
                    return fail(format!("y_{} and y_{} do not commute", a + 1, b + 1));
                }
            }
        }
        Ok(())
    }

    /// `y^λ` as a matrix.
    pub fn y_power(&self, lambda: &[i64]) -> Matrix {
        let mut m = self.identity();
        for (j, &e) in lambda.iter().enumerate() {
            let base = if e < 0 { &self.y_inv[j] } else { &self.y[j] };
            m = &m * &base.pow(e.unsigned_abs() as usize);
        }
        m
    }

    /// `T_w` as a matrix.
    pub fn t_perm(&self, w: &Perm) -> Matrix {
        w.reduced_word().iter().fold(self.identity(), |m, &i| &m * &self.t[i])
    }

    /// Action of an algebra element, with `q` specialised.
    pub fn act(&self, h: &HElement) -> Result<Matrix, HeckeError> {
        if h.n() != self.n {
            return Err(HeckeError::ParameterMismatch(format!("element of rank {} on a module of rank {}", h.n(), self.n)));
        }
        let mut out = Matrix::zeros(self.dim, self.dim);
        for ((l, w), c) in h.terms() {
            let c = c.eval(&self.q).ok_or_else(|| HeckeError::ParameterMismatch(format!("coefficient {c} has a pole at q")))?;
            out = &out + &(&self.y_power(l) * &self.t_perm(w)).scale(&c);
        }
        Ok(out)
    }

    /// Quotient by an invariant subspace spanned by `basis` (columns), with projection.
    pub fn quotient(&self, basis: &[Vec<Rat>]) -> (FDHModule, Matrix) {
        let keep = crate::linalg::complement_basis(basis, self.dim);
        let mut cols = basis.to_vec();
        for &k in &keep {
            let mut e = vec![Rat::zero(); self.dim];
            e[k] = Rat::one();
            cols.push(e);
        }
        let change = Matrix::from_cols(self.dim, &cols).inverse().expect("basis plus complement is a basis");
        let skip = basis.len();
        let proj_rows: Vec<Vec<Rat>> = (skip..self.dim).map(|r| change.row(r).to_vec()).collect();
        let proj = if proj_rows.is_empty() { Matrix::zeros(0, self.dim) } else { Matrix::from_rows(proj_rows) };
        let lift = Matrix::from_cols(self.dim, &cols[skip..]);
        let induced = |m: &Matrix| &(&proj * m) * &lift;
        let t = self.t.iter().map(induced).collect();
        let y: Vec<Matrix> = self.y.iter().map(induced).collect();
        let y_inv = self.y_inv.iter().map(induced).collect();
        (FDHModule { n: self.n, q: self.q.clone(), dim: self.dim - skip, t, y, y_inv }, proj)
    }

    /// Matrices of all generators, in a fixed order.
    pub fn generators(&self) -> Vec<&Matrix> {
        self.t.iter().chain(&self.y).collect()
    }
}

/// Modules over `ℋ(n₁, q₁) ⊗ ⋯ ⊗ ℋ(n_r, q_r)`, as outer tensor products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizedModule {
    pub factors: Vec<FDHModule>,
}

impl FactorizedModule {
    pub fn new(factors: Vec<FDHModule>) -> Self {
        FactorizedModule { factors }
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim).product()
    }

    /// Generator matrices of factor `k` on the whole space.
    pub fn embedded(&self, k: usize) -> Vec<Matrix> {
        let left: usize = self.factors[..k].iter().map(|f| f.dim).product();
        let right: usize = self.factors[k + 1..].iter().map(|f| f.dim).product();
        self.factors[k]
            .generators()
            .into_iter()
            .map(|g| Matrix::identity(left).kron(g).kron(&Matrix::identity(right)))
            .collect()
    }

    /// Each factor's relations with its own `q`, and commutation across factors.
    pub fn check_relations(&self) -> Result<(), HeckeError> {
        for f in &self.factors {
            f.check_relations()?;
        }
        let all: Vec<Vec<Matrix>> = (0..self.factors.len()).map(|k| self.embedded(k)).collect();
        for a in 0..all.len() {
            for b in a + 1..all.len() {
                for x in &all[a] {
                    for y in &all[b] {
                        if (x * y) != (y * x) {
                            return Err(HeckeError::RelationFails(format!("factors {a} and {b} do not commute")));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
