//! Speh representations `u_ρ(a,b)`, Arthur-type products and Arthur parameters.

use std::fmt;

use crate::segments::{exp, half, CuspidalLine, CuspidalPoint, Exponent, Multisegment, Segment};

/// `u_ρ(a,b)` for a unitary cuspidal `ρ` (exponent 0 on `line`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Speh {
    pub line: CuspidalLine,
    /// Deligne size.
    pub a: u32,
    /// Arthur size.
    pub b: u32,
}

impl Speh {
    pub fn new(line: CuspidalLine, a: u32, b: u32) -> Self {
        assert!(a >= 1 && b >= 1, "Speh sizes must be positive, got ({a},{b})");
        Speh { line, a, b }
    }

    pub fn rho(&self) -> CuspidalPoint {
        self.line.at(exp(0))
    }

    pub fn is_cuspidal(&self) -> bool {
        self.a == 1 && self.b == 1
    }

    /// `a + b`, the quantity maximised when peeling factors.
    pub fn weight(&self) -> u32 {
        self.a + self.b
    }

    pub fn gl_size(&self) -> u64 {
        self.a as u64 * self.b as u64 * self.line.base_degree as u64
    }

    /// `u_ρ(b,a)`.
    pub fn dual(&self) -> Speh {
        Speh { line: self.line.clone(), a: self.b, b: self.a }
    }

    /// `u_ρ(a,b-1)`, or `None` when the factor disappears (`b = 1`).
    pub fn derivative(&self) -> Option<Speh> {
        (self.b >= 2).then(|| Speh { line: self.line.clone(), a: self.a, b: self.b - 1 })
    }

    /// Contragredient: same sizes on the dual line.
    pub fn contragredient(&self) -> Speh {
        Speh { line: self.line.dual(), a: self.a, b: self.b }
    }
}

impl fmt::Display for Speh {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u_{}({},{})", self.line.id, self.a, self.b)
    }
}

/// A product of Speh representations, kept as a sorted multiset.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArthurRep {
    factors: Vec<Speh>,
}

impl ArthurRep {
    pub fn new(mut factors: Vec<Speh>) -> Self {
        factors.sort();
        ArthurRep { factors }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn factors(&self) -> &[Speh] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn with(&self, extra: Speh) -> ArthurRep {
        let mut f = self.factors.clone();
        f.push(extra);
        ArthurRep::new(f)
    }

    /// Removes one copy of `factor`; `None` if absent.
    pub fn without(&self, factor: &Speh) -> Option<ArthurRep> {
        let i = self.factors.iter().position(|f| f == factor)?;
        let mut f = self.factors.clone();
        f.remove(i);
        Some(ArthurRep { factors: f })
    }

    pub fn contains(&self, factor: &Speh) -> bool {
        self.factors.contains(factor)
    }

    pub fn contragredient(&self) -> ArthurRep {
        ArthurRep::new(self.factors.iter().map(Speh::contragredient).collect())
    }

    pub fn lines(&self) -> impl Iterator<Item = &CuspidalLine> {
        self.factors.iter().map(|f| &f.line)
    }
}

impl FromIterator<Speh> for ArthurRep {
    fn from_iter<I: IntoIterator<Item = Speh>>(iter: I) -> Self {
        ArthurRep::new(iter.into_iter().collect())
    }
}

impl fmt::Display for ArthurRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" × "))
    }
}

/// One summand `φ ⊗ V_deligne ⊗ V_arthur` of an Arthur parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamSummand {
    pub phi: CuspidalLine,
    pub deligne: u32,
    pub arthur: u32,
}

impl ParamSummand {
    pub fn new(phi: CuspidalLine, deligne: u32, arthur: u32) -> Self {
        assert!(deligne >= 1 && arthur >= 1, "zero-dimensional V factors are never stored");
        ParamSummand { phi, deligne, arthur }
    }

    /// `φ ⊗ V_d ⊗ V_a` with `V_0` summands collapsing to `None`.
    pub fn try_new(phi: &CuspidalLine, deligne: u32, arthur: u32) -> Option<Self> {
        (deligne >= 1 && arthur >= 1).then(|| ParamSummand { phi: phi.clone(), deligne, arthur })
    }

    pub fn swap(&self) -> ParamSummand {
        ParamSummand { phi: self.phi.clone(), deligne: self.arthur, arthur: self.deligne }
    }
}

impl fmt::Display for ParamSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗V{}⊗V{}", self.phi.id, self.deligne, self.arthur)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ArthurParam {
    summands: Vec<ParamSummand>,
}

impl ArthurParam {
    pub fn new(mut summands: Vec<ParamSummand>) -> Self {
        summands.sort();
        ArthurParam { summands }
    }

    pub fn summands(&self) -> &[ParamSummand] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Exchanges the Deligne and Arthur factors of every summand.
    pub fn swap_factors(&self) -> ArthurParam {
        ArthurParam::new(self.summands.iter().map(ParamSummand::swap).collect())
    }
}

impl FromIterator<ParamSummand> for ArthurParam {
    fn from_iter<I: IntoIterator<Item = ParamSummand>>(iter: I) -> Self {
        ArthurParam::new(iter.into_iter().collect())
    }
}

impl fmt::Display for ArthurParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.summands.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// `Δ(ρ, len) = [-(len-1)/2, (len-1)/2]_ρ`.
fn centered_segment(line: &CuspidalLine, len: u32) -> Segment {
    let r = half(len as i64 - 1);
    Segment::new(line.clone(), -r, r).expect("centered segments have integral length")
}

/// `count` parallel copies of the centered segment of length `len`, twisted by
/// `(count-1)/2 - j` for `j = 0..count`.
fn ladder(line: &CuspidalLine, len: u32, count: u32) -> Vec<Segment> {
    let base = centered_segment(line, len);
    (0..count)
        .map(|j| {
            let t: Exponent = half(count as i64 - 1) - exp(j as i64);
            base.twist(t)
        })
        .collect()
}

/// Langlands data of `u_ρ(a,b)`: `b` segments of length `a`.
pub fn langlands_msegs(u: &Speh) -> Multisegment {
    Multisegment::new(ladder(&u.line, u.a, u.b))
}

/// Zelevinsky data of `u_ρ(a,b)`: `a` segments of length `b`.
pub fn zelevinsky_msegs(u: &Speh) -> Multisegment {
    Multisegment::new(ladder(&u.line, u.b, u.a))
}

/// Multisegment of the L-parameter `ψ ∘ α`: the Arthur `SL_2` is turned into the
/// `|w|^{±1/2}`-twists of the Deligne segment.
pub fn l_param_msegs(psi: &ArthurParam) -> Multisegment {
    Multisegment::new(psi.summands.iter().flat_map(|s| ladder(&s.phi, s.deligne, s.arthur)).collect())
}

pub fn az_dual(pi: &ArthurRep) -> ArthurRep {
    pi.factors.iter().map(Speh::dual).collect()
}

pub fn highest_derivative(pi: &ArthurRep) -> ArthurRep {
    pi.factors.iter().filter_map(Speh::derivative).collect()
}

pub fn gl_size(pi: &ArthurRep) -> u64 {
    pi.factors.iter().map(Speh::gl_size).sum()
}

pub fn param_of(pi: &ArthurRep) -> ArthurParam {
    pi.factors.iter().map(|u| ParamSummand::new(u.line.clone(), u.a, u.b)).collect()
}

pub fn rep_of(psi: &ArthurParam) -> ArthurRep {
    psi.summands.iter().map(|s| Speh::new(s.phi.clone(), s.deligne, s.arthur)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::segments::cuspidal_support;

    fn r() -> CuspidalLine {
        CuspidalLine::new("r", 1)
    }

    fn u(a: u32, b: u32) -> Speh {
        Speh::new(r(), a, b)
    }

    fn seg(a: Exponent, b: Exponent) -> Segment {
        Segment::new(r(), a, b).unwrap()
    }

    #[test]
    fn langlands_examples() {
        assert_eq!(langlands_msegs(&u(2, 1)), Multisegment::new(vec![seg(half(-1), half(1))]));
        assert_eq!(
            langlands_msegs(&u(1, 2)),
            Multisegment::new(vec![seg(half(1), half(1)), seg(half(-1), half(-1))])
        );
        assert_eq!(langlands_msegs(&u(2, 2)), Multisegment::new(vec![seg(exp(0), exp(1)), seg(exp(-1), exp(0))]));
    }

    #[test]
    fn zelevinsky_examples() {
        assert_eq!(zelevinsky_msegs(&u(1, 2)), Multisegment::new(vec![seg(half(-1), half(1))]));
        assert_eq!(zelevinsky_msegs(&u(2, 2)), Multisegment::new(vec![seg(exp(0), exp(1)), seg(exp(-1), exp(0))]));
        assert_eq!(zelevinsky_msegs(&u(3, 2)), langlands_msegs(&u(2, 3)));
    }

    #[test]
    fn l_param_examples() {
        let phi = r();
        let p = ArthurParam::new(vec![ParamSummand::new(phi.clone(), 2, 1)]);
        assert_eq!(l_param_msegs(&p), Multisegment::new(vec![seg(half(-1), half(1))]));
        let p = ArthurParam::new(vec![ParamSummand::new(phi, 1, 2)]);
        assert_eq!(l_param_msegs(&p), Multisegment::new(vec![seg(half(1), half(1)), seg(half(-1), half(-1))]));
    }

    #[test]
    fn dual_and_derivative_examples() {
        assert_eq!(az_dual(&ArthurRep::new(vec![u(2, 3)])), ArthurRep::new(vec![u(3, 2)]));
        assert_eq!(az_dual(&ArthurRep::new(vec![u(1, 1)])), ArthurRep::new(vec![u(1, 1)]));
        assert_eq!(highest_derivative(&ArthurRep::new(vec![u(2, 3)])), ArthurRep::new(vec![u(2, 2)]));
        assert_eq!(highest_derivative(&ArthurRep::new(vec![u(3, 1)])), ArthurRep::empty());
        let s = Speh::new(CuspidalLine::new("s", 1), 1, 1);
        assert_eq!(highest_derivative(&ArthurRep::new(vec![u(2, 2), s])), ArthurRep::new(vec![u(2, 1)]));
    }

    #[test]
    fn gl_size_examples() {
        assert_eq!(gl_size(&ArthurRep::new(vec![u(2, 3)])), 6);
        assert_eq!(gl_size(&ArthurRep::empty()), 0);
        let s = Speh::new(CuspidalLine::new("s", 2), 2, 1);
        assert_eq!(gl_size(&ArthurRep::new(vec![u(1, 2), s])), 6);
    }

    #[test]
    fn param_round_trip_and_dual_swap() {
        let pi = ArthurRep::new(vec![u(2, 3), u(1, 1), Speh::new(CuspidalLine::new("s", 3), 4, 2)]);
        assert_eq!(rep_of(&param_of(&pi)), pi);
        assert_eq!(param_of(&u(2, 3).into_rep()).summands()[0], ParamSummand::new(r(), 2, 3));
        assert_eq!(param_of(&az_dual(&pi)), param_of(&pi).swap_factors());
    }

    #[test]
    fn supports_agree_between_classifications() {
        for a in 1..=4 {
            for b in 1..=4 {
                let l = cuspidal_support(&langlands_msegs(&u(a, b)));
                let z = cuspidal_support(&zelevinsky_msegs(&u(a, b)));
                assert_eq!(l, z);
                assert_eq!(l.len() as u32, a * b);
            }
        }
    }

    impl Speh {
        fn into_rep(self) -> ArthurRep {
            ArthurRep::new(vec![self])
        }
    }
}
