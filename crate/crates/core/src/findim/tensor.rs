//! Tensor products of bound quiver algebras and of their modules.


use super::ext::ProjComplex;
use super::resolution::projective_resolution;
use super::module::FDModule;
use super::quiver::{Arrow, Path, QuiverAlgebra, Relation};
use super::FindimError;
use crate::linalg::{rat, Matrix};

fn pair_index(b: &QuiverAlgebra, i: usize, j: usize) -> usize {
    i * b.vertices.len() + j
}

/// Arrow `(a, j)` moving the first coordinate along `a` at second vertex `j`.
fn first_arrow(b: &QuiverAlgebra, a: usize, j: usize) -> usize {
    a * b.vertices.len() + j
}

/// Arrow `(i, b)` moving the second coordinate along `b` at first vertex `i`.
fn second_arrow(a: &QuiverAlgebra, b: &QuiverAlgebra, i: usize, arrow: usize) -> usize {
    a.arrows.len() * b.vertices.len() + i * b.arrows.len() + arrow
}

/// `A ⊗ B` as the quiver `Q_A × Q_B` with both factors' relations and commuting squares.
pub fn tensor_algebra(a: &QuiverAlgebra, b: &QuiverAlgebra) -> QuiverAlgebra {
    let vertices = a.vertices.iter().flat_map(|x| b.vertices.iter().map(move |y| format!("{x}⊗{y}"))).collect();
    let mut arrows = Vec::new();
    for x in &a.arrows {
        for (j, y) in b.vertices.iter().enumerate() {
            arrows.push(Arrow {
                name: format!("{}⊗{y}", x.name),
                source: pair_index(b, x.source, j),
                target: pair_index(b, x.target, j),
            });
        }
    }
    for (i, x) in a.vertices.iter().enumerate() {
        for y in &b.arrows {
            arrows.push(Arrow {
                name: format!("{x}⊗{}", y.name),
                source: pair_index(b, i, y.source),
                target: pair_index(b, i, y.target),
            });
        }
    }
    let mut relations = Vec::new();
    for r in &a.relations {
        for j in 0..b.vertices.len() {
            relations.push(Relation {
                terms: r.terms.iter().map(|(c, p)| (c.clone(), lift_pair(a, b, p, &Path::trivial(j)))).collect(),
            });
        }
    }
    for r in &b.relations {
        for i in 0..a.vertices.len() {
            relations.push(Relation {
                terms: r.terms.iter().map(|(c, p)| (c.clone(), lift_pair(a, b, &Path::trivial(i), p))).collect(),
            });
        }
    }
    for (ai, x) in a.arrows.iter().enumerate() {
        for (bi, y) in b.arrows.iter().enumerate() {
            let one = Path { start: x.source, arrows: vec![ai] };
            let other = Path { start: y.source, arrows: vec![bi] };
            let start = pair_index(b, x.source, y.source);
            let first_then_second = Path {
                start,
                arrows: vec![first_arrow(b, ai, y.source), second_arrow(a, b, x.target, bi)],
            };
            let second_then_first = Path {
                start,
                arrows: vec![second_arrow(a, b, x.source, bi), first_arrow(b, ai, y.target)],
            };
            debug_assert_eq!(first_then_second, lift_pair(a, b, &one, &other));
            relations.push(Relation { terms: vec![(rat(1), first_then_second), (rat(-1), second_then_first)] });
        }
    }
    let mut t = QuiverAlgebra::new(format!("{}⊗{}", a.name, b.name), vertices, arrows, relations)
        .expect("tensor of valid algebras is valid");
    t.tensor = Some(Box::new((a.clone(), b.clone())));
    t
}

/// The path `p ⊗ q`: first `p` at the start of `q`, then `q` at the end of `p`.
pub fn lift_pair(a: &QuiverAlgebra, b: &QuiverAlgebra, p: &Path, q: &Path) -> Path {
    let mut arrows: Vec<usize> = p.arrows.iter().map(|&x| first_arrow(b, x, q.start)).collect();
    let end = p.end(&a.arrows);
    arrows.extend(q.arrows.iter().map(|&y| second_arrow(a, b, end, y)));
    Path { start: pair_index(b, p.start, q.start), arrows }
}

/// The outer tensor product `M ⊠ N`; coordinates at `(i, j)` are `m·dim N_j + n`.
pub fn tensor_module(a: &QuiverAlgebra, b: &QuiverAlgebra, m: &FDModule, n: &FDModule) -> FDModule {
    let mut dims = Vec::new();
    for i in 0..a.vertices.len() {
        for j in 0..b.vertices.len() {
            dims.push(m.dims[i] * n.dims[j]);
        }
    }
    let mut maps = Vec::new();
    for (ai, _) in a.arrows.iter().enumerate() {
        for j in 0..b.vertices.len() {
            maps.push(m.maps[ai].kron(&Matrix::identity(n.dims[j])));
        }
    }
    for i in 0..a.vertices.len() {
        for bi in 0..b.arrows.len() {
            maps.push(Matrix::identity(m.dims[i]).kron(&n.maps[bi]));
        }
    }
    FDModule { dims, maps }
}

/// Both sides of the Künneth identity in degree `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KunnethReport {
    pub degree: usize,
    pub tensor_side: usize,
    /// `dim Ext^k_A(E₁,F₁) · dim Ext^{i-k}_B(E₂,F₂)` for `k = 0..=i`.
    pub products: Vec<usize>,
}

impl KunnethReport {
    pub fn sum(&self) -> usize {
        self.products.iter().sum()
    }

    pub fn holds(&self) -> bool {
        self.tensor_side == self.sum()
    }
}

pub struct KunnethInput<'a> {
    pub a: &'a QuiverAlgebra,
    pub e1: &'a FDModule,
    pub f1: &'a FDModule,
    pub b: &'a QuiverAlgebra,
    pub e2: &'a FDModule,
    pub f2: &'a FDModule,
}

pub fn kunneth_report(input: &KunnethInput, tensor: &QuiverAlgebra, i: usize) -> Result<KunnethReport, FindimError> {
    Ok(kunneth_reports(input, tensor, i)?.pop().expect("at least degree 0"))
}

/// Reports for every degree `0..=max_degree`, resolving each module once.
pub fn kunneth_reports(input: &KunnethInput, tensor: &QuiverAlgebra, max_degree: usize) -> Result<Vec<KunnethReport>, FindimError> {
    let KunnethInput { a, e1, f1, b, e2, f2 } = *input;
    let cohomology = |alg: &QuiverAlgebra, m: &FDModule, n: &FDModule| -> Result<Vec<usize>, FindimError> {
        n.check(alg)?;
        let c = ProjComplex::from_resolution(&projective_resolution(alg, m, max_degree + 1)?);
        Ok((0..=max_degree).map(|k| c.cohomology_dim(alg, n, k)).collect())
    };
    let left = cohomology(a, e1, f1)?;
    let right = cohomology(b, e2, f2)?;
    let total = cohomology(tensor, &tensor_module(a, b, e1, e2), &tensor_module(a, b, f1, f2))?;
    Ok((0..=max_degree)
        .map(|i| KunnethReport {
            degree: i,
            tensor_side: total[i],
            products: (0..=i).map(|k| left[k] * right[i - k]).collect(),
        })
        .collect())
}

pub fn kunneth_check(input: &KunnethInput, i: usize) -> Result<bool, FindimError> {
    let t = tensor_algebra(input.a, input.b);
    Ok(kunneth_report(input, &t, i)?.holds())
}

