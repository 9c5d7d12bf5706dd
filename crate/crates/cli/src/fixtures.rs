//! Named inputs so the worked examples run without hand-written JSON.

use std::collections::BTreeMap;

use extbranch::findim::{fixtures, FDModule, QuiverAlgebra};

/// `(name, pi1, pi2, description)` for `relevant` and `trace`.
pub const PAIRS: [(&str, &str, &str, &str); 3] = [
    (
        "relevance-example",
        r#"[{"line":"r","deg":1,"a":1,"b":2}]"#,
        r#"[{"line":"r","deg":1,"a":1,"b":1}]"#,
        "u_r(1,2) against the cuspidal u_r(1,1)",
    ),
    (
        "one3-st2",
        r#"[{"line":"r","deg":1,"a":1,"b":3}]"#,
        r#"[{"line":"r","deg":1,"a":2,"b":1}]"#,
        "the trivial representation of GL_3 against the Steinberg of GL_2; its trace goes through duality",
    ),
    (
        "not-relevant",
        r#"[{"line":"r","deg":1,"a":1,"b":2},{"line":"r","deg":1,"a":1,"b":1}]"#,
        r#"[{"line":"r","deg":1,"a":2,"b":1}]"#,
        "u_r(1,2) × u_r(1,1) against the Steinberg of GL_2",
    ),
];

/// `(name, sigma, omega, description)` for `c-omega`.
pub const C_OMEGA: [(&str, &str, &str, &str); 2] = [
    (
        "gl2-trivial",
        r#"[{"line":"r","a":"-1/2","b":"1/2"}]"#,
        r#"[{"line":"r","a":"-1/2","b":"-1/2"}]"#,
        "support of the trivial representation of GL_2 against ω = ν^(-1/2): ν^(1/2) obstructs",
    ),
    (
        "gl2-trivial-far",
        r#"[{"line":"r","a":"-1/2","b":"1/2"}]"#,
        r#"[{"line":"s","a":"0","b":"0"}]"#,
        "the same support against a cuspidal on an unrelated line",
    ),
];

pub fn pair(name: &str) -> Option<(&'static str, &'static str)> {
    PAIRS.iter().find(|p| p.0 == name).map(|p| (p.1, p.2))
}

pub fn c_omega(name: &str) -> Option<(&'static str, &'static str)> {
    C_OMEGA.iter().find(|p| p.0 == name).map(|p| (p.1, p.2))
}

pub fn names<const N: usize, T>(table: &[(&'static str, T, T, &'static str); N]) -> String {
    table.iter().map(|p| p.0).collect::<Vec<_>>().join(", ")
}

/// A quiver algebra with its named modules and the display names of its projectives.
pub struct LoadedAlgebra {
    pub name: String,
    pub algebra: QuiverAlgebra,
    pub modules: BTreeMap<String, FDModule>,
    pub projective_names: Vec<String>,
    /// Module names in a stable display order.
    pub order: Vec<String>,
}

impl LoadedAlgebra {
    pub fn from_fixture(id: &str) -> Option<Self> {
        let fx = fixtures::by_id(id)?;
        Some(LoadedAlgebra {
            name: fx.id.to_string(),
            order: fx.modules.iter().map(|(n, _)| n.clone()).collect(),
            modules: fx.modules.into_iter().collect(),
            projective_names: fx.projective_names,
            algebra: fx.algebra,
        })
    }

    pub fn from_parts(name: String, algebra: QuiverAlgebra, modules: BTreeMap<String, FDModule>) -> Self {
        let projective_names = algebra.vertices.iter().map(|v| format!("P({v})")).collect();
        LoadedAlgebra { name, order: modules.keys().cloned().collect(), algebra, modules, projective_names }
    }

    pub fn module(&self, name: &str) -> Option<&FDModule> {
        self.modules.get(name)
    }
}
