//! Strong Ext relevance of a pair of Arthur-type representations, decided
//! with certificates in two independent ways: on Arthur parameters and on
//! Speh factors via highest derivatives and Aubert–Zelevinsky duals.
//!
//! The four families of the decomposition, with `π₁`-side and `π₂`-side
//! summands:
//!
//! | family | `π₁` side            | `π₂` side            |
//! |--------|----------------------|----------------------|
//! | 1      | `φ⊗V_c⊗V_a`          | `φ⊗V_c⊗V_{a-1}`      |
//! | 2      | `φ⊗V_c⊗V_{b-1}`      | `φ⊗V_c⊗V_b`          |
//! | 3      | `ψ⊗V_f⊗V_d`          | `ψ⊗V_{d-1}⊗V_f`      |
//! | 4      | `ψ⊗V_{e-1}⊗V_f`      | `ψ⊗V_f⊗V_e`          |
//!
//! A side whose size drops to zero is absent.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::arthur::{param_of, ArthurParam, ArthurRep, ParamSummand, Speh};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    One,
    Two,
    Three,
    Four,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::One, Family::Two, Family::Three, Family::Four];

    /// Family obtained when the roles of `π₁` and `π₂` are exchanged.
    pub fn swapped(self) -> Family {
        match self {
            Family::One => Family::Two,
            Family::Two => Family::One,
            Family::Three => Family::Four,
            Family::Four => Family::Three,
        }
    }

    pub fn index(self) -> usize {
        self as usize + 1
    }
}

/// One term of a family: the `π₁`-side and `π₂`-side summands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CertPair {
    pub left: Option<ParamSummand>,
    pub right: Option<ParamSummand>,
}

impl CertPair {
    pub fn new(left: Option<ParamSummand>, right: Option<ParamSummand>) -> Self {
        CertPair { left, right }
    }

    pub fn swapped(&self) -> CertPair {
        CertPair { left: self.right.clone(), right: self.left.clone() }
    }
}

impl fmt::Display for CertPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: &Option<ParamSummand>| s.as_ref().map_or_else(|| "0".to_string(), ToString::to_string);
        write!(f, "{} ↦ {}", show(&self.left), show(&self.right))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RelevanceCertificate {
    pub family1: Vec<CertPair>,
    pub family2: Vec<CertPair>,
    pub family3: Vec<CertPair>,
    pub family4: Vec<CertPair>,
}

impl RelevanceCertificate {
    pub fn family(&self, f: Family) -> &[CertPair] {
        match f {
            Family::One => &self.family1,
            Family::Two => &self.family2,
            Family::Three => &self.family3,
            Family::Four => &self.family4,
        }
    }

    pub fn family_mut(&mut self, f: Family) -> &mut Vec<CertPair> {
        match f {
            Family::One => &mut self.family1,
            Family::Two => &mut self.family2,
            Family::Three => &mut self.family3,
            Family::Four => &mut self.family4,
        }
    }

    pub fn push(&mut self, f: Family, pair: CertPair) {
        self.family_mut(f).push(pair);
    }

    /// `(r, s, t, u)`: the number of terms in each family.
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        (self.family1.len(), self.family2.len(), self.family3.len(), self.family4.len())
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Family, &CertPair)> {
        Family::ALL.into_iter().flat_map(move |f| self.family(f).iter().map(move |p| (f, p)))
    }

    /// Sorts every family so that equal decompositions compare equal.
    pub fn canonicalize(&mut self) {
        for f in Family::ALL {
            self.family_mut(f).sort();
        }
    }

    /// Certificate for the exchanged pair `(π₂, π₁)`.
    pub fn swapped(&self) -> RelevanceCertificate {
        let mut out = RelevanceCertificate::default();
        for (f, p) in self.pairs() {
            out.push(f.swapped(), p.swapped());
        }
        out.canonicalize();
        out
    }

    fn side(&self, left: bool) -> ArthurParam {
        self.pairs()
            .filter_map(|(_, p)| if left { p.left.clone() } else { p.right.clone() })
            .collect()
    }

    pub fn left_param(&self) -> ArthurParam {
        self.side(true)
    }

    pub fn right_param(&self) -> ArthurParam {
        self.side(false)
    }
}

/// The `π₂`-side summand forced by a `π₁`-side summand, or vice versa, in a family.
fn family_partner_of_left(f: Family, left: &ParamSummand) -> Option<ParamSummand> {
    let phi = &left.phi;
    let (x, y) = (left.deligne, left.arthur);
    match f {
        Family::One => ParamSummand::try_new(phi, x, y - 1),
        Family::Two => ParamSummand::try_new(phi, x, y + 1),
        Family::Three => ParamSummand::try_new(phi, y - 1, x),
        Family::Four => ParamSummand::try_new(phi, y, x + 1),
    }
}

/// Whether a single term satisfies the size relations of its family.
pub fn pair_is_valid(f: Family, pair: &CertPair) -> bool {
    match (f, &pair.left, &pair.right) {
        (_, None, None) => false,
        // families 1 and 3 always have a π₁ side
        (Family::One | Family::Three, None, Some(_)) => false,
        (Family::One | Family::Three, Some(l), r) => family_partner_of_left(f, l).as_ref() == r.as_ref(),
        // families 2 and 4 always have a π₂ side
        (Family::Two | Family::Four, _, None) => false,
        (Family::Two, l, Some(r)) => ParamSummand::try_new(&r.phi, r.deligne, r.arthur - 1) == *l,
        (Family::Four, l, Some(r)) => ParamSummand::try_new(&r.phi, r.arthur - 1, r.deligne) == *l,
    }
}

/// Re-checks a certificate against the two parameters.
pub fn certificate_validate(cert: &RelevanceCertificate, p1: &ArthurParam, p2: &ArthurParam) -> bool {
    cert.pairs().all(|(f, p)| pair_is_valid(f, p)) && cert.left_param() == *p1 && cert.right_param() == *p2
}

/// Parameter-side decision: a backtracking search for the decomposition.
pub fn strong_ext_relevant_param(p1: &ArthurParam, p2: &ArthurParam) -> Option<RelevanceCertificate> {
    let left: Vec<ParamSummand> = p1.summands().to_vec();
    // distinct right summands with multiplicities
    let mut counts: BTreeMap<ParamSummand, u32> = BTreeMap::new();
    for s in p2.summands() {
        *counts.entry(s.clone()).or_default() += 1;
    }
    let distinct: Vec<ParamSummand> = counts.keys().cloned().collect();
    let remaining: Vec<u32> = counts.values().copied().collect();
    let search = ParamSearch { left: &left, distinct: &distinct };

    let mut cert = if left.is_empty() {
        let mut memo = HashSet::new();
        search.run(0, remaining, &mut memo)?
    } else {
        // the first assignment is explored in parallel, the rest sequentially
        let first = search.options(0, &remaining);
        par::find_first(first, |(family, partner, rem)| {
            let mut memo = HashSet::new();
            let mut c = search.run(1, rem, &mut memo)?;
            c.push(family, CertPair::new(Some(left[0].clone()), partner.map(|i| distinct[i].clone())));
            Some(c)
        })?
    };
    cert.canonicalize();
    debug_assert!(certificate_validate(&cert, p1, p2));
    Some(cert)
}

struct ParamSearch<'a> {
    left: &'a [ParamSummand],
    distinct: &'a [ParamSummand],
}

type ParamOption = (Family, Option<usize>, Vec<u32>);

impl ParamSearch<'_> {
    fn position(&self, s: &ParamSummand) -> Option<usize> {
        self.distinct.binary_search(s).ok()
    }

    /// Every way of placing `left[i]`, with the updated right-side multiplicities.
    fn options(&self, i: usize, remaining: &[u32]) -> Vec<ParamOption> {
        let s = &self.left[i];
        let mut out = Vec::new();
        let mut seen: HashSet<Option<usize>> = HashSet::new();
        for f in Family::ALL {
            let partner = family_partner_of_left(f, s);
            let slot = match &partner {
                None => {
                    // absent partners only occur in families 1 and 3 (a = 1, d = 1)
                    if !matches!(f, Family::One | Family::Three) {
                        continue;
                    }
                    None
                }
                Some(p) => match self.position(p) {
                    Some(k) if remaining[k] > 0 => Some(k),
                    _ => continue,
                },
            };
            if !seen.insert(slot) {
                continue;
            }
            let mut rem = remaining.to_vec();
            if let Some(k) = slot {
                rem[k] -= 1;
            }
            out.push((f, slot, rem));
        }
        out
    }

    fn run(
        &self,
        i: usize,
        remaining: Vec<u32>,
        failed: &mut HashSet<(usize, Vec<u32>)>,
    ) -> Option<RelevanceCertificate> {
        if i == self.left.len() {
            // leftover π₂ summands must be family-2 terms with b = 1
            if self.distinct.iter().zip(&remaining).any(|(s, &c)| c > 0 && s.arthur != 1) {
                return None;
            }
            let mut cert = RelevanceCertificate::default();
            for (s, &c) in self.distinct.iter().zip(&remaining) {
                for _ in 0..c {
                    cert.push(Family::Two, CertPair::new(None, Some(s.clone())));
                }
            }
            return Some(cert);
        }
        if failed.contains(&(i, remaining.clone())) {
            return None;
        }
        for (family, slot, rem) in self.options(i, &remaining) {
            if let Some(mut c) = self.run(i + 1, rem, failed) {
                c.push(family, CertPair::new(Some(self.left[i].clone()), slot.map(|k| self.distinct[k].clone())));
                return Some(c);
            }
        }
        failed.insert((i, remaining));
        None
    }
}

/// Representation-side decision: writes `π₁` as a product of `π_m`, `π_p⁻`,
/// `π_n`, `D(π_q⁻)` and `π₂` as the matching product of `π_m⁻`, `π_p`,
/// `D(π_n⁻)`, `π_q`.
pub fn strong_ext_relevant_rep(pi1: &ArthurRep, pi2: &ArthurRep) -> Option<RelevanceCertificate> {
    let left = pi1.factors();
    let right = pi2.factors();
    let mut used = vec![false; right.len()];
    let mut roles: Vec<(Family, Option<usize>)> = Vec::with_capacity(left.len());
    if !assign_rep(left, right, 0, &mut used, &mut roles) {
        return None;
    }
    let mut cert = RelevanceCertificate::default();
    for (u, (f, j)) in left.iter().zip(&roles) {
        let l = Some(summand_of(u));
        let r = j.map(|j| summand_of(&right[j]));
        cert.push(*f, CertPair::new(l, r));
    }
    for (v, _) in right.iter().zip(&used).filter(|(_, &u)| !u) {
        cert.push(Family::Two, CertPair::new(None, Some(summand_of(v))));
    }
    cert.canonicalize();
    Some(cert)
}

fn summand_of(u: &Speh) -> ParamSummand {
    ParamSummand::new(u.line.clone(), u.a, u.b)
}

fn assign_rep(
    left: &[Speh],
    right: &[Speh],
    i: usize,
    used: &mut Vec<bool>,
    roles: &mut Vec<(Family, Option<usize>)>,
) -> bool {
    if i == left.len() {
        // every unused π₂ factor must be some π_p whose derivative vanished
        return right.iter().zip(used.iter()).all(|(v, &u)| u || v.derivative().is_none());
    }
    let u = &left[i];
    // π_m: partner π_m⁻ ; π_n: partner D(π_n⁻)
    let own_targets = [(Family::One, u.derivative()), (Family::Three, u.derivative().map(|d| d.dual()))];
    for (family, target) in own_targets {
        match target {
            None => {
                roles.push((family, None));
                if assign_rep(left, right, i + 1, used, roles) {
                    return true;
                }
                roles.pop();
            }
            Some(t) => {
                if try_partners(left, right, i, used, roles, family, |v| *v == t) {
                    return true;
                }
            }
        }
    }
    // π_p⁻ = u for a π₂ factor π_p ; D(π_q⁻) = u for a π₂ factor π_q
    if try_partners(left, right, i, used, roles, Family::Two, |v| v.derivative().as_ref() == Some(u)) {
        return true;
    }
    try_partners(left, right, i, used, roles, Family::Four, |v| v.derivative().map(|d| d.dual()).as_ref() == Some(u))
}

fn try_partners(
    left: &[Speh],
    right: &[Speh],
    i: usize,
    used: &mut Vec<bool>,
    roles: &mut Vec<(Family, Option<usize>)>,
    family: Family,
    accept: impl Fn(&Speh) -> bool,
) -> bool {
    let mut tried: Vec<&Speh> = Vec::new();
    for j in 0..right.len() {
        if used[j] || !accept(&right[j]) || tried.contains(&&right[j]) {
            continue;
        }
        tried.push(&right[j]);
        used[j] = true;
        roles.push((family, Some(j)));
        if assign_rep(left, right, i + 1, used, roles) {
            return true;
        }
        roles.pop();
        used[j] = false;
    }
    false
}

/// Validates a certificate against two representations.
pub fn certificate_validate_rep(cert: &RelevanceCertificate, pi1: &ArthurRep, pi2: &ArthurRep) -> bool {
    certificate_validate(cert, &param_of(pi1), &param_of(pi2))
}
