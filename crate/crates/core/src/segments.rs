//! Cuspidal lines, segments and multisegments.
//!
//! A cuspidal representation is modelled as a point `ν^x ρ` on the line of a
//! unitary base point `ρ`; only the line identity and the exponent matter.
//! Distinct line ids never coincide after twisting.

use std::cmp::Ordering;
use std::fmt;

use num::rational::Rational64;
use num::{One, Zero};

/// Exact exponent of a twist `ν^x`.
pub type Exponent = Rational64;

pub fn exp(n: i64) -> Exponent {
    Exponent::from_integer(n)
}

pub fn half(n: i64) -> Exponent {
    Exponent::new(n, 2)
}

pub fn parse_exponent(s: &str) -> Option<Exponent> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<i64>().ok()?, d.trim().parse::<i64>().ok()?),
        None => (s.parse::<i64>().ok()?, 1),
    };
    (d != 0).then(|| Exponent::new(n, d))
}

pub fn fmt_exponent(x: &Exponent) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn is_integer(x: Exponent) -> bool {
    x.is_integer()
}

/// The line `{ν^k ρ : k ∈ ℤ}` through a unitary cuspidal `ρ` of `GL_{base_degree}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CuspidalLine {
    pub id: String,
    pub base_degree: u32,
    pub dual_id: String,
}

impl CuspidalLine {
    /// A line whose contragredient lives on the line `id*` (and vice versa).
    pub fn new(id: impl Into<String>, base_degree: u32) -> Self {
        let id = id.into();
        let dual_id = default_dual_id(&id);
        assert!(base_degree >= 1, "cuspidal lines have positive degree");
        CuspidalLine { id, base_degree, dual_id }
    }

    pub fn self_dual(id: impl Into<String>, base_degree: u32) -> Self {
        let id = id.into();
        assert!(base_degree >= 1, "cuspidal lines have positive degree");
        CuspidalLine { dual_id: id.clone(), id, base_degree }
    }

    pub fn with_dual(id: impl Into<String>, base_degree: u32, dual_id: impl Into<String>) -> Self {
        assert!(base_degree >= 1, "cuspidal lines have positive degree");
        CuspidalLine { id: id.into(), base_degree, dual_id: dual_id.into() }
    }

    /// Line of the contragredient base point.
    pub fn dual(&self) -> CuspidalLine {
        CuspidalLine { id: self.dual_id.clone(), base_degree: self.base_degree, dual_id: self.id.clone() }
    }

    pub fn at(&self, x: Exponent) -> CuspidalPoint {
        CuspidalPoint { line: self.clone(), x }
    }
}

/// `r` ↔ `r*`.
pub fn default_dual_id(id: &str) -> String {
    match id.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{id}*"),
    }
}

impl fmt::Display for CuspidalLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id)
    }
}

/// `ν^x ρ` for the base point `ρ` of `line`.
#[derive(Clone, Debug)]
pub struct CuspidalPoint {
    pub line: CuspidalLine,
    pub x: Exponent,
}

impl PartialEq for CuspidalPoint {
    fn eq(&self, other: &Self) -> bool {
        self.line.id == other.line.id && self.x == other.x
    }
}

impl Eq for CuspidalPoint {}

impl PartialOrd for CuspidalPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CuspidalPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.line.id, self.x).cmp(&(&other.line.id, other.x))
    }
}

impl std::hash::Hash for CuspidalPoint {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.line.id.hash(state);
        self.x.hash(state);
    }
}

impl CuspidalPoint {
    pub fn twist(&self, by: Exponent) -> CuspidalPoint {
        CuspidalPoint { line: self.line.clone(), x: self.x + by }
    }
}

impl fmt::Display for CuspidalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.line.id, fmt_exponent(&self.x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub line: CuspidalLine,
    pub a: Exponent,
    pub b: Exponent,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SegmentError {
    NotIntegralLength { a: Exponent, b: Exponent },
}

impl fmt::Display for SegmentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SegmentError::NotIntegralLength { a, b } => {
                write!(f, "segment [{}, {}]: b - a must be a non-negative integer", fmt_exponent(a), fmt_exponent(b))
            }
        }
    }
}

impl std::error::Error for SegmentError {}

impl Segment {
    pub fn new(line: CuspidalLine, a: Exponent, b: Exponent) -> Result<Self, SegmentError> {
        let d = b - a;
        if !is_integer(d) || d < Exponent::zero() {
            return Err(SegmentError::NotIntegralLength { a, b });
        }
        Ok(Segment { line, a, b })
    }

    /// Number of cuspidal points, `b - a + 1`.
    pub fn len(&self) -> usize {
        (self.b - self.a).to_integer() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `ν^t Δ`.
    pub fn twist(&self, t: Exponent) -> Segment {
        Segment { line: self.line.clone(), a: self.a + t, b: self.b + t }
    }

    pub fn points(&self) -> impl Iterator<Item = CuspidalPoint> + '_ {
        (0..self.len()).map(move |k| self.line.at(self.a + exp(k as i64)))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]_{}", fmt_exponent(&self.a), fmt_exponent(&self.b), self.line.id)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Linkage {
    NotLinked,
    FirstPrecedes,
    SecondPrecedes,
}

fn precedes(d1: &Segment, d2: &Segment) -> bool {
    let one = Exponent::one();
    d1.line.id == d2.line.id && is_integer(d2.a - d1.a) && d1.a < d2.a && d2.a - one <= d1.b && d1.b < d2.b
}

pub fn linked(d1: &Segment, d2: &Segment) -> Linkage {
    if precedes(d1, d2) {
        Linkage::FirstPrecedes
    } else if precedes(d2, d1) {
        Linkage::SecondPrecedes
    } else {
        Linkage::NotLinked
    }
}

/// The canonical total order: `b` descending, then `a` descending, then line id.
fn canonical_cmp(x: &Segment, y: &Segment) -> Ordering {
    y.b.cmp(&x.b).then(y.a.cmp(&x.a)).then(x.line.id.cmp(&y.line.id)).then(x.line.cmp(&y.line))
}

/// A finite multiset of segments, kept in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Multisegment {
    segments: Vec<Segment>,
}

impl Multisegment {
    pub fn new(mut segments: Vec<Segment>) -> Self {
        segments.sort_by(canonical_cmp);
        Multisegment { segments }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Multiset union.
    pub fn union(&self, other: &Multisegment) -> Multisegment {
        let mut all = self.segments.clone();
        all.extend(other.segments.iter().cloned());
        Multisegment::new(all)
    }

    /// Degree `Σ (b - a + 1)·deg ρ` of the represented irreducible.
    pub fn degree(&self) -> u64 {
        self.segments.iter().map(|s| s.len() as u64 * s.line.base_degree as u64).sum()
    }
}

impl FromIterator<Segment> for Multisegment {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        Multisegment::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.segments.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// An ordering of `m` in which no segment precedes a later one.
pub fn standard_order(m: &Multisegment) -> Vec<Segment> {
    let mut out = m.segments.clone();
    out.sort_by(canonical_cmp);
    out
}

/// Which classification a multisegment label refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LabelStyle {
    /// `Q(𝔪)`, the Langlands quotient.
    Langlands,
    /// `Z(𝔪)`, the Zelevinsky submodule.
    Zelevinsky,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IrrLabel {
    pub mseg: Multisegment,
    pub style: LabelStyle,
}

/// A multiset of cuspidal points kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CuspidalSupport {
    points: Vec<CuspidalPoint>,
}

impl CuspidalSupport {
    pub fn new(mut points: Vec<CuspidalPoint>) -> Self {
        points.sort();
        CuspidalSupport { points }
    }

    pub fn points(&self) -> &[CuspidalPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &CuspidalPoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn union(&self, other: &CuspidalSupport) -> CuspidalSupport {
        let mut all = self.points.clone();
        all.extend(other.points.iter().cloned());
        CuspidalSupport::new(all)
    }

    pub fn lines(&self) -> impl Iterator<Item = &CuspidalLine> {
        self.points.iter().map(|p| &p.line)
    }
}

impl FromIterator<CuspidalPoint> for CuspidalSupport {
    fn from_iter<I: IntoIterator<Item = CuspidalPoint>>(iter: I) -> Self {
        CuspidalSupport::new(iter.into_iter().collect())
    }
}

pub fn cuspidal_support(m: &Multisegment) -> CuspidalSupport {
    m.segments.iter().flat_map(Segment::points).collect()
}

/// Whether `p` lies in `csupp_ℤ` of the given support.
pub fn in_integral_line(p: &CuspidalPoint, support: &CuspidalSupport) -> bool {
    support.points.iter().any(|q| q.line.id == p.line.id && is_integer(p.x - q.x))
}

/// Membership of a support in the category attached to a Speh representation `ω`:
/// each point lies in `csupp(ω)` or outside `csupp_ℤ(ω)` altogether.
pub fn c_omega_member(support: &CuspidalSupport, omega_support: &CuspidalSupport) -> bool {
    support.points.iter().all(|p| omega_support.contains(p) || !in_integral_line(p, omega_support))
}
