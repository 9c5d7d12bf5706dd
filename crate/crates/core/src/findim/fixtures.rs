//! `𝒜 = k(X→Y→Z)/(b·a)` and `ℬ = k(X→Y→Z)` with their indecomposable modules,
//! named by support: simples `X`, `Y`, `Z` and intervals `P`, `Q` (and `R` over `ℬ`).

use super::module::FDModule;
use super::quiver::{Arrow, Path, QuiverAlgebra, Relation};
use crate::linalg::{rat, Matrix};

pub struct Fixture {
    pub id: &'static str,
    pub algebra: QuiverAlgebra,
    pub modules: Vec<(String, FDModule)>,
    /// Display name of `P_v` for each vertex.
    pub projective_names: Vec<String>,
}

impl Fixture {
    pub fn module(&self, name: &str) -> Option<&FDModule> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }
}

pub const FIXTURE_IDS: [&str; 2] = ["remark14-A", "remark14-B"];

pub fn by_id(id: &str) -> Option<Fixture> {
    match id {
        "remark14-A" => Some(remark14_a()),
        "remark14-B" => Some(remark14_b()),
        _ => None,
    }
}

fn a3(name: &str, with_relation: bool) -> QuiverAlgebra {
    let arrows = vec![
        Arrow { name: "a".into(), source: 0, target: 1 },
        Arrow { name: "b".into(), source: 1, target: 2 },
    ];
    let relations = if with_relation {
        vec![Relation { terms: vec![(rat(1), Path { start: 0, arrows: vec![0, 1] })] }]
    } else {
        Vec::new()
    };
    QuiverAlgebra::new(name, vec!["X".into(), "Y".into(), "Z".into()], arrows, relations).expect("valid fixture")
}

/// Interval module supported on vertices `from..=to`, identity maps inside.
fn interval(alg: &QuiverAlgebra, from: usize, to: usize) -> FDModule {
    let dims: Vec<usize> = (0..3).map(|v| usize::from(from <= v && v <= to)).collect();
    let maps = alg
        .arrows
        .iter()
        .map(|a| {
            let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
            if dims[a.source] == 1 && dims[a.target] == 1 {
                m[(0, 0)] = rat(1);
            }
            m
        })
        .collect();
    FDModule::new(alg, dims, maps).expect("valid interval module")
}

pub fn remark14_a() -> Fixture {
    let algebra = a3("remark14-A", true);
    let modules = [("X", 0, 0), ("Y", 1, 1), ("Z", 2, 2), ("P", 0, 1), ("Q", 1, 2)]
        .iter()
        .map(|&(n, f, t)| (n.to_string(), interval(&algebra, f, t)))
        .collect();
    Fixture { id: "remark14-A", algebra, modules, projective_names: vec!["P".into(), "Q".into(), "Z".into()] }
}

pub fn remark14_b() -> Fixture {
    let algebra = a3("remark14-B", false);
    let modules = [("X", 0, 0), ("Y", 1, 1), ("Z", 2, 2), ("P", 0, 1), ("Q", 1, 2), ("R", 0, 2)]
        .iter()
        .map(|&(n, f, t)| (n.to_string(), interval(&algebra, f, t)))
        .collect();
    Fixture { id: "remark14-B", algebra, modules, projective_names: vec!["R".into(), "Q".into(), "Z".into()] }
}
