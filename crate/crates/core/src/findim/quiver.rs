//! Bound quiver algebras `kQ/I` over ℚ and their indecomposable projectives.

use std::collections::HashMap;

use num::{One, Zero};

use super::FindimError;
use crate::linalg::{Matrix, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A path, listed in travel order: `arrows[0]` leaves `start` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { start: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, quiver: &[Arrow]) -> usize {
        self.arrows.last().map_or(self.start, |&a| quiver[a].target)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Path) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Path { start: self.start, arrows }
    }
}

/// A linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Rat, Path)>,
}

/// Quotient of the path algebra of an acyclic quiver by an ideal generated in
/// path length ≥ 2 (hence admissible).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverAlgebra {
    pub name: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    /// Set when the algebra was built as `A ⊗ B`; vertex `(i, j)` has index `i·|V_B| + j`.
    pub tensor: Option<Box<(QuiverAlgebra, QuiverAlgebra)>>,
    projectives: Vec<Projective>,
}

/// The projective `P_v = e_v·kQ/I`, i.e. paths leaving `v` modulo `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projective {
    pub vertex: usize,
    /// Every path leaving the vertex; index = column in `reduction`.
    paths: Vec<Path>,
    path_index: HashMap<Path, usize>,
    /// Basis paths (a subset of `paths`), shortest first.
    pub basis: Vec<Path>,
    /// `normal[k]` = coordinates of `paths[k]` in `basis`.
    normal: Vec<Vec<Rat>>,
}

impl Projective {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a path leaving this vertex in the basis.
    pub fn normal_form(&self, p: &Path) -> Vec<Rat> {
        self.normal[self.path_index[p]].clone()
    }
}

impl QuiverAlgebra {
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<String>,
        arrows: Vec<Arrow>,
        relations: Vec<Relation>,
    ) -> Result<Self, FindimError> {
        let mut alg = QuiverAlgebra { name: name.into(), vertices, arrows, relations, tensor: None, projectives: Vec::new() };
        alg.check()?;
        alg.projectives = (0..alg.vertices.len()).map(|v| alg.build_projective(v)).collect();
        Ok(alg)
    }

    /// The one-vertex algebra `ℚ`.
    pub fn unit() -> Self {
        QuiverAlgebra::new("unit", vec!["pt".into()], Vec::new(), Vec::new()).expect("trivially valid")
    }

    fn check(&self) -> Result<(), FindimError> {
        let n = self.vertices.len();
        if n == 0 {
            return Err(FindimError::InvalidAlgebra("no vertices".into()));
        }
        for a in &self.arrows {
            if a.source >= n || a.target >= n {
                return Err(FindimError::InvalidAlgebra(format!("arrow {} has an unknown endpoint", a.name)));
            }
        }
        // Kahn's algorithm: only acyclic quivers are supported
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    queue.push(a.target);
                }
            }
        }
        if seen != n {
            return Err(FindimError::InvalidAlgebra("quiver has an oriented cycle".into()));
        }
        for (k, r) in self.relations.iter().enumerate() {
            let Some((_, first)) = r.terms.first() else {
                return Err(FindimError::InvalidAlgebra(format!("relation {k} is empty")));
            };
            let (s, t) = (first.start, first.end(&self.arrows));
            for (_, p) in &r.terms {
                if p.start >= n || !self.is_path(p) {
                    return Err(FindimError::InvalidAlgebra(format!("relation {k} contains a non-path")));
                }
                if p.start != s || p.end(&self.arrows) != t {
                    return Err(FindimError::InvalidAlgebra(format!("relation {k} mixes non-parallel paths")));
                }
                if p.len() < 2 {
                    return Err(FindimError::InvalidAlgebra(format!("relation {k} has a term of length < 2")));
                }
            }
        }
        Ok(())
    }

    pub fn is_path(&self, p: &Path) -> bool {
        let mut at = p.start;
        for &a in &p.arrows {
            match self.arrows.get(a) {
                Some(arr) if arr.source == at => at = arr.target,
                _ => return false,
            }
        }
        true
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn projective(&self, v: usize) -> &Projective {
        &self.projectives[v]
    }

    pub fn dim(&self) -> usize {
        self.projectives.iter().map(Projective::dim).sum()
    }

    fn paths_from(&self, v: usize) -> Vec<Path> {
        let mut out = vec![Path::trivial(v)];
        let mut k = 0;
        while k < out.len() {
            let p = out[k].clone();
            let end = p.end(&self.arrows);
            for (i, a) in self.arrows.iter().enumerate() {
                if a.source == end {
                    let mut q = p.clone();
                    q.arrows.push(i);
                    out.push(q);
                }
            }
            k += 1;
        }
        out
    }

    fn build_projective(&self, v: usize) -> Projective {
        let mut paths = self.paths_from(v);
        // longest first, so that pivots (eliminated paths) are long ones
        paths.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let path_index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        // spanning set of e_v I: prefix · relation · suffix
        let mut gens: Vec<Vec<Rat>> = Vec::new();
        for prefix in &paths {
            let at = prefix.end(&self.arrows);
            for r in self.relations.iter().filter(|r| r.terms[0].1.start == at) {
                let t = r.terms[0].1.end(&self.arrows);
                for suffix in self.paths_from(t) {
                    let mut row = vec![Rat::zero(); paths.len()];
                    for (c, p) in &r.terms {
                        let full = prefix.then(&Path { start: at, arrows: p.arrows.clone() }).then(&suffix);
                        row[path_index[&full]] += c;
                    }
                    gens.push(row);
                }
            }
        }
        let (rref, pivots) = if gens.is_empty() { (Matrix::zeros(0, paths.len()), Vec::new()) } else { Matrix::from_rows(gens).rref() };
        let free: Vec<usize> = (0..paths.len()).filter(|c| !pivots.contains(c)).collect();
        let mut basis_pos = vec![usize::MAX; paths.len()];
        for (k, &c) in free.iter().enumerate() {
            basis_pos[c] = k;
        }
        let normal = (0..paths.len())
            .map(|c| {
                let mut v = vec![Rat::zero(); free.len()];
                if let Some(r) = pivots.iter().position(|&p| p == c) {
                    // e_c ≡ e_c - row_r, supported on free columns
                    for (k, &f) in free.iter().enumerate() {
                        v[k] = -rref[(r, f)].clone();
                    }
                } else {
                    v[basis_pos[c]] = Rat::one();
                }
                v
            })
            .collect();
        let mut basis: Vec<Path> = free.iter().map(|&c| paths[c].clone()).collect();
        basis.reverse();
        let mut normal: Vec<Vec<Rat>> = normal;
        for v in &mut normal {
            v.reverse();
        }
        Projective { vertex: v, paths, path_index, basis, normal }
    }
}
