//! Proof traces for Ext non-vanishing between strong Ext relevant pairs.
//!
//! A trace is a chain of nodes, one per induction step on the number of
//! non-cuspidal factors. Each inner node records an optional transfer swap,
//! the main reduction peeling a maximal Speh factor against a fresh
//! cuspidal `σ`, the Bernstein block selection, and case A or case B
//! (the latter through Nori–Prasad duality). Leaves are generic pairs.
//!
//! [`validate_trace`] re-derives every side condition from scratch and does
//! not share code paths with [`build_trace`] beyond the basic operations on
//! Speh factors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::arthur::{az_dual, gl_size, langlands_msegs, param_of, ArthurRep, ParamSummand, Speh};
use crate::relevance::{certificate_validate, strong_ext_relevant_rep, CertPair, Family, RelevanceCertificate};
use crate::segments::{cuspidal_support, half, in_integral_line, CuspidalLine, CuspidalPoint, CuspidalSupport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("the pair is not strong Ext relevant")]
    NotRelevant,
    #[error("sizes {left} and {right} do not form a (GL_n, GL_(n-1)) pair")]
    SizeMismatch { left: u64, right: u64 },
    #[error("both representations are empty")]
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A branching problem `Ext_{G_{n-1}}(π₁, π₂)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtProblem {
    pub left: ArthurRep,
    pub right: ArthurRep,
}

impl ExtProblem {
    pub fn new(left: ArthurRep, right: ArthurRep) -> Self {
        ExtProblem { left, right }
    }

    pub fn m(&self) -> usize {
        m_metric(&self.left, &self.right)
    }

    pub fn is_ggp(&self) -> bool {
        gl_size(&self.left) == gl_size(&self.right) + 1
    }

    /// Line ids occurring in the problem, together with their duals.
    pub fn line_ids(&self) -> BTreeSet<String> {
        self.left
            .lines()
            .chain(self.right.lines())
            .flat_map(|l| [l.id.clone(), l.dual_id.clone()])
            .collect()
    }

    /// `(π₂^∨ × σ, π₁^∨)`.
    pub fn transferred(&self, sigma: &CuspidalPoint) -> ExtProblem {
        ExtProblem {
            left: self.right.contragredient().with(cuspidal_factor(sigma)),
            right: self.left.contragredient(),
        }
    }
}

impl fmt::Display for ExtProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ext({}, {})", self.left, self.right)
    }
}

/// The left side after the main reduction: `u_{ρ₁}(a₁,b₁-1) × (σ × π₁')|_{G_a}`,
/// kept symbolic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedLeft {
    /// `u_{ρ₁}(a₁,b₁-1)`; `None` when `b₁ = 1`.
    pub speh_head: Option<Speh>,
    pub fresh_sigma: CuspidalPoint,
    pub tail: ArthurRep,
    /// The rank `a` of the group the restriction lands in.
    pub target: u64,
}

impl fmt::Display for ReducedLeft {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = self.speh_head.as_ref().map_or_else(|| "1".to_string(), ToString::to_string);
        write!(f, "{head} × ({} × {})|GL_{}", self.fresh_sigma, self.tail, self.target)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepKind {
    TransferSwap,
    MainReduction,
    BlockSelect,
    CaseA,
    CaseBDuality,
    GenericBase,
}

impl StepKind {
    pub fn name(self) -> &'static str {
        match self {
            StepKind::TransferSwap => "TransferSwap",
            StepKind::MainReduction => "MainReduction",
            StepKind::BlockSelect => "BlockSelect",
            StepKind::CaseA => "CaseA",
            StepKind::CaseBDuality => "CaseB_Duality",
            StepKind::GenericBase => "GenericBase",
        }
    }

    pub fn from_name(s: &str) -> Option<StepKind> {
        [
            StepKind::TransferSwap,
            StepKind::MainReduction,
            StepKind::BlockSelect,
            StepKind::CaseA,
            StepKind::CaseBDuality,
            StepKind::GenericBase,
        ]
        .into_iter()
        .find(|k| k.name() == s)
    }

    pub fn citation(self) -> &'static str {
        match self {
            StepKind::TransferSwap => "Transfer Lemma",
            StepKind::MainReduction => "Main Reduction Lemma",
            StepKind::BlockSelect => "Kunneth formula; completion commutes with induction",
            StepKind::CaseA => "Case A: induction hypothesis and Ext embedding under induction",
            StepKind::CaseBDuality => "Case B: Nori-Prasad duality and Ext embedding under induction",
            StepKind::GenericBase => "Generic case: Hom branching for generic representations",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StepData {
    TransferSwap { sigma: CuspidalPoint, swapped: ExtProblem },
    MainReduction { peeled: Speh, reduced: ReducedLeft },
    /// Cuspidal lines (with multiplicity) carrying the inertial class of the residual `π₂'`.
    BlockSelect { block: Vec<(String, usize)> },
    CaseA { matched: Option<Speh> },
    /// `dual_left = π_{1,1}⁻ × D(π₂'')`, the left side after applying duality.
    CaseB { matched: Speh, dual_left: ArthurRep },
    GenericBase,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReductionStep {
    pub kind: StepKind,
    pub cite: String,
    pub data: StepData,
}

impl ReductionStep {
    fn new(kind: StepKind, data: StepData) -> Self {
        ReductionStep { kind, cite: kind.citation().to_string(), data }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TraceNode {
    pub problem: ExtProblem,
    pub steps: Vec<ReductionStep>,
    pub child: Option<Box<TraceNode>>,
}

impl TraceNode {
    pub fn depth(&self) -> usize {
        1 + self.child.as_ref().map_or(0, |c| c.depth())
    }

    pub fn iter(&self) -> impl Iterator<Item = &TraceNode> {
        std::iter::successors(Some(self), |n| n.child.as_deref())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReductionTrace {
    pub root: ExtProblem,
    pub node: TraceNode,
}

impl ReductionTrace {
    pub fn depth(&self) -> usize {
        self.node.depth()
    }

    pub fn steps(&self) -> impl Iterator<Item = &ReductionStep> {
        self.node.iter().flat_map(|n| n.steps.iter())
    }

    pub fn has_step(&self, kind: StepKind) -> bool {
        self.steps().any(|s| s.kind == kind)
    }
}

/// Number of non-cuspidal factors on both sides.
pub fn m_metric(pi1: &ArthurRep, pi2: &ArthurRep) -> usize {
    pi1.factors().iter().chain(pi2.factors()).filter(|u| !u.is_cuspidal()).count()
}

fn cuspidal_factor(sigma: &CuspidalPoint) -> Speh {
    Speh::new(sigma.line.clone(), 1, 1)
}

fn rep_support(pi: &ArthurRep) -> CuspidalSupport {
    pi.factors().iter().map(|u| cuspidal_support(&langlands_msegs(u))).fold(CuspidalSupport::default(), |a, b| a.union(&b))
}

/// A unitary cuspidal of the requested degree on a line that does not occur in the problem.
pub fn fresh_sigma(problem: &ExtProblem, degree: u32) -> CuspidalPoint {
    let taken = problem.line_ids();
    let id = (1..)
        .map(|k| format!("σ{k}"))
        .find(|id| !taken.contains(id) && !taken.contains(&crate::segments::default_dual_id(id)))
        .expect("infinitely many candidate ids");
    CuspidalLine::new(id, degree).at(num::Zero::zero())
}

/// `σ ∉ csupp_ℤ(π₁)` and `ν^{1/2}σ ∉ csupp_ℤ(π₂)`.
fn reduction_sigma_is_fresh(sigma: &CuspidalPoint, pi1: &ArthurRep, pi2: &ArthurRep) -> bool {
    !in_integral_line(sigma, &rep_support(pi1)) && !in_integral_line(&sigma.twist(half(1)), &rep_support(pi2))
}

/// `σ ∉ csupp_ℤ(ν^{-1/2}π₁^∨) ∪ csupp_ℤ(π₂)`.
fn transfer_sigma_is_fresh(sigma: &CuspidalPoint, pi1: &ArthurRep, pi2: &ArthurRep) -> bool {
    let twisted: CuspidalSupport = rep_support(&pi1.contragredient()).points().iter().map(|p| p.twist(half(-1))).collect();
    !in_integral_line(sigma, &twisted) && !in_integral_line(sigma, &rep_support(pi2))
}

/// A factor maximising `a + b` over both sides; ties go to `π₁`, then canonical order.
pub fn select_top_factor(pi1: &ArthurRep, pi2: &ArthurRep) -> Result<(Side, Speh), ReductionError> {
    let best = |pi: &ArthurRep| -> Option<Speh> {
        let w = pi.factors().iter().map(Speh::weight).max()?;
        pi.factors().iter().find(|u| u.weight() == w).cloned()
    };
    match (best(pi1), best(pi2)) {
        (None, None) => Err(ReductionError::Empty),
        (Some(l), None) => Ok((Side::Left, l)),
        (None, Some(r)) => Ok((Side::Right, r)),
        (Some(l), Some(r)) => Ok(if r.weight() > l.weight() { (Side::Right, r) } else { (Side::Left, l) }),
    }
}

fn summand(u: &Speh) -> ParamSummand {
    ParamSummand::new(u.line.clone(), u.a, u.b)
}

fn speh_of(s: &ParamSummand) -> Speh {
    Speh::new(s.phi.clone(), s.deligne, s.arthur)
}

fn dualize_pair(p: &CertPair) -> CertPair {
    let d = |s: &Option<ParamSummand>| s.as_ref().map(|s| ParamSummand { phi: s.phi.dual(), ..s.clone() });
    CertPair::new(d(&p.left), d(&p.right))
}

/// Certificate for `(π₂^∨ × σ, π₁^∨)` from one for `(π₁, π₂)`.
fn transfer_certificate(cert: &RelevanceCertificate, sigma: &CuspidalPoint) -> RelevanceCertificate {
    let mut out = RelevanceCertificate::default();
    for (f, p) in cert.pairs() {
        out.push(f.swapped(), dualize_pair(&p.swapped()));
    }
    out.push(Family::One, CertPair::new(Some(summand(&cuspidal_factor(sigma))), None));
    out.canonicalize();
    out
}

/// Builds the proof trace for a strong Ext relevant `(GL_n, GL_{n-1})` pair.
pub fn build_trace(pi1: &ArthurRep, pi2: &ArthurRep) -> Result<ReductionTrace, ReductionError> {
    let (l, r) = (gl_size(pi1), gl_size(pi2));
    if l != r + 1 {
        return Err(ReductionError::SizeMismatch { left: l, right: r });
    }
    let cert = strong_ext_relevant_rep(pi1, pi2).ok_or(ReductionError::NotRelevant)?;
    let root = ExtProblem::new(pi1.clone(), pi2.clone());
    let node = build_node(root.clone(), cert)?;
    Ok(ReductionTrace { root, node })
}

fn build_node(problem: ExtProblem, cert: RelevanceCertificate) -> Result<TraceNode, ReductionError> {
    if problem.m() == 0 {
        return Ok(TraceNode {
            problem,
            steps: vec![ReductionStep::new(StepKind::GenericBase, StepData::GenericBase)],
            child: None,
        });
    }
    let mut steps = Vec::new();
    let mut current = problem.clone();
    let mut cert = cert;

    let (side, _) = select_top_factor(&current.left, &current.right)?;
    if side == Side::Right {
        let sigma = fresh_sigma(&current, 2);
        let swapped = current.transferred(&sigma);
        cert = transfer_certificate(&cert, &sigma);
        steps.push(ReductionStep::new(StepKind::TransferSwap, StepData::TransferSwap { sigma, swapped: swapped.clone() }));
        current = swapped;
    }
    let (side, top) = select_top_factor(&current.left, &current.right)?;
    debug_assert_eq!(side, Side::Left);

    // the certificate term consuming the peeled factor decides the case
    let top_summand = summand(&top);
    let (family, pair) = cert
        .pairs()
        .find(|(f, p)| matches!(f, Family::One | Family::Three) && p.left.as_ref() == Some(&top_summand))
        .map(|(f, p)| (f, p.clone()))
        .ok_or(ReductionError::NotRelevant)?;

    let n = gl_size(&current.left);
    let deg = top.line.base_degree as u64;
    let sigma = fresh_sigma(&current, top.line.base_degree * top.a);
    let tail = current.left.without(&top).expect("peeled factor is present");
    let reduced = ReducedLeft {
        speh_head: top.derivative(),
        fresh_sigma: sigma.clone(),
        tail: tail.clone(),
        target: n - deg * top.a as u64 * (top.b as u64 - 1) - 1,
    };
    steps.push(ReductionStep::new(StepKind::MainReduction, StepData::MainReduction { peeled: top.clone(), reduced }));

    let matched = pair.right.as_ref().map(speh_of);
    let child_right = match &matched {
        Some(m) => current.right.without(m).ok_or(ReductionError::NotRelevant)?,
        None => current.right.clone(),
    };
    steps.push(ReductionStep::new(StepKind::BlockSelect, StepData::BlockSelect { block: line_block(&child_right) }));
    match family {
        Family::One => steps.push(ReductionStep::new(StepKind::CaseA, StepData::CaseA { matched: matched.clone() })),
        _ => {
            let matched = matched.clone().ok_or(ReductionError::NotRelevant)?;
            let mut dual_left = az_dual(&child_right);
            if let Some(h) = top.derivative() {
                dual_left = dual_left.with(h);
            }
            steps.push(ReductionStep::new(StepKind::CaseBDuality, StepData::CaseB { matched, dual_left }));
        }
    }

    let mut child_cert = RelevanceCertificate::default();
    let mut removed = false;
    for (f, p) in cert.pairs() {
        if !removed && f == family && *p == pair {
            removed = true;
            continue;
        }
        child_cert.push(f, p.clone());
    }
    child_cert.push(Family::One, CertPair::new(Some(summand(&cuspidal_factor(&sigma))), None));
    child_cert.canonicalize();

    let child_problem = ExtProblem::new(tail.with(cuspidal_factor(&sigma)), child_right);
    let child = build_node(child_problem, child_cert)?;
    Ok(TraceNode { problem, steps, child: Some(Box::new(child)) })
}

fn line_block(pi: &ArthurRep) -> Vec<(String, usize)> {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for u in pi.factors() {
        *counts.entry(u.line.id.clone()).or_default() += (u.a * u.b) as usize;
    }
    counts.into_iter().collect()
}

/// A side condition that failed during validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Depth of the node (0 = root).
    pub node: usize,
    pub condition: &'static str,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "node {}: {} ({})", self.node, self.condition, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TraceVerdict {
    pub violations: Vec<Violation>,
}

impl TraceVerdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_trace(trace: &ReductionTrace) -> bool {
    check_trace(trace).is_valid()
}

/// Independent re-verification of every side condition, listing all violations.
pub fn check_trace(trace: &ReductionTrace) -> TraceVerdict {
    let mut v = Checker::default();
    if trace.root != trace.node.problem {
        v.fail(0, "root", "root problem differs from the first node".into());
    }
    if !trace.root.is_ggp() {
        v.fail(0, "ggp-sizes", format!("{} vs {}", gl_size(&trace.root.left), gl_size(&trace.root.right)));
    }
    // pairs consumed along the way, expressed in the root frame
    let mut collected = RelevanceCertificate::default();
    let mut sigma_lines: BTreeSet<String> = BTreeSet::new();
    let mut flipped = false;
    for (depth, node) in trace.node.iter().enumerate() {
        v.node(depth, node, &mut collected, &mut sigma_lines, &mut flipped);
    }
    collected.canonicalize();
    if !certificate_validate(&collected, &param_of(&trace.root.left), &param_of(&trace.root.right)) {
        v.fail(0, "certificate", "peeled pairs do not reassemble a certificate for the root".into());
    }
    TraceVerdict { violations: v.violations }
}

#[derive(Default)]
struct Checker {
    violations: Vec<Violation>,
}

impl Checker {
    fn fail(&mut self, node: usize, condition: &'static str, detail: String) {
        self.violations.push(Violation { node, condition, detail });
    }

    fn record(collected: &mut RelevanceCertificate, flipped: bool, family: Family, pair: CertPair) {
        if flipped {
            collected.push(family.swapped(), dualize_pair(&pair.swapped()));
        } else {
            collected.push(family, pair);
        }
    }

    fn node(
        &mut self,
        depth: usize,
        node: &TraceNode,
        collected: &mut RelevanceCertificate,
        sigma_lines: &mut BTreeSet<String>,
        flipped: &mut bool,
    ) {
        let problem = &node.problem;
        if !problem.is_ggp() {
            self.fail(depth, "ggp-sizes", problem.to_string());
        }
        let kinds: Vec<StepKind> = node.steps.iter().map(|s| s.kind).collect();
        for s in &node.steps {
            if s.cite != s.kind.citation() {
                self.fail(depth, "citation", format!("{} cites {:?}", s.kind.name(), s.cite));
            }
        }

        if kinds == [StepKind::GenericBase] {
            if problem.m() != 0 {
                self.fail(depth, "leaf-m", format!("generic leaf with m = {}", problem.m()));
            }
            if node.child.is_some() {
                self.fail(depth, "leaf-child", "generic leaf has a child".into());
            }
            // the remaining cuspidal factors are degenerate terms
            let is_sigma = |u: &Speh| sigma_lines.contains(&u.line.id) || sigma_lines.contains(&u.line.dual_id);
            for u in problem.left.factors().iter().filter(|u| !is_sigma(u)) {
                Self::record(collected, *flipped, Family::One, CertPair::new(Some(summand(u)), None));
            }
            for u in problem.right.factors().iter().filter(|u| !is_sigma(u)) {
                Self::record(collected, *flipped, Family::Two, CertPair::new(None, Some(summand(u))));
            }
            return;
        }

        let mut idx = 0;
        let mut current = problem.clone();
        if kinds.first() == Some(&StepKind::TransferSwap) {
            if let StepData::TransferSwap { sigma, swapped } = &node.steps[0].data {
                if sigma.line.base_degree != 2 {
                    self.fail(depth, "transfer-degree", format!("σ has degree {}", sigma.line.base_degree));
                }
                if problem.line_ids().contains(&sigma.line.id) || !transfer_sigma_is_fresh(sigma, &current.left, &current.right) {
                    self.fail(depth, "transfer-freshness", sigma.to_string());
                }
                if *swapped != current.transferred(sigma) {
                    self.fail(depth, "transfer-problem", swapped.to_string());
                }
                sigma_lines.insert(sigma.line.id.clone());
                *flipped = !*flipped;
                current = swapped.clone();
            } else {
                self.fail(depth, "step-data", "TransferSwap without its payload".into());
            }
            idx = 1;
        }
        let expected = [StepKind::MainReduction, StepKind::BlockSelect];
        if kinds.len() != idx + 3
            || kinds[idx..idx + 2] != expected
            || !matches!(kinds[idx + 2], StepKind::CaseA | StepKind::CaseBDuality)
        {
            self.fail(depth, "step-shape", format!("{kinds:?}"));
            return;
        }

        let StepData::MainReduction { peeled, reduced } = &node.steps[idx].data else {
            self.fail(depth, "step-data", "MainReduction without its payload".into());
            return;
        };
        if !current.left.contains(peeled) {
            self.fail(depth, "peeled-present", peeled.to_string());
        }
        let max_weight = current.left.factors().iter().chain(current.right.factors()).map(Speh::weight).max().unwrap_or(0);
        if peeled.weight() != max_weight {
            self.fail(depth, "peeled-maximal", format!("{} has a+b = {} < {}", peeled, peeled.weight(), max_weight));
        }
        let sigma = &reduced.fresh_sigma;
        if sigma.line.base_degree != peeled.line.base_degree * peeled.a {
            self.fail(depth, "reduction-degree", format!("σ has degree {}", sigma.line.base_degree));
        }
        if current.line_ids().contains(&sigma.line.id) || !reduction_sigma_is_fresh(sigma, &current.left, &current.right) {
            self.fail(depth, "reduction-freshness", sigma.to_string());
        }
        sigma_lines.insert(sigma.line.id.clone());
        let n = gl_size(&current.left);
        let expected_target = (n + 1).checked_sub(1 + peeled.line.base_degree as u64 * peeled.a as u64 * (peeled.b as u64 - 1) + 1);
        if reduced.speh_head != peeled.derivative()
            || Some(&reduced.tail) != current.left.without(peeled).as_ref()
            || Some(reduced.target) != expected_target
        {
            self.fail(depth, "reduced-left", reduced.to_string());
        }

        let (family, matched) = match &node.steps[idx + 2].data {
            StepData::CaseA { matched } => {
                if *matched != peeled.derivative() {
                    let shown = matched.as_ref().map_or_else(|| "nothing".to_string(), ToString::to_string);
                    self.fail(depth, "case-a", format!("matched {shown} is not the derivative of {peeled}"));
                }
                (Family::One, matched.clone())
            }
            StepData::CaseB { matched, dual_left } => {
                if Some(matched) != peeled.derivative().map(|d| d.dual()).as_ref() {
                    self.fail(depth, "case-b", format!("matched {matched} is not D of the derivative of {peeled}"));
                }
                if let Some(rest) = current.right.without(matched) {
                    let mut expected = az_dual(&rest);
                    if let Some(h) = peeled.derivative() {
                        expected = expected.with(h);
                    }
                    if *dual_left != expected {
                        self.fail(depth, "case-b-dual", dual_left.to_string());
                    }
                }
                (Family::Three, Some(matched.clone()))
            }
            _ => {
                self.fail(depth, "step-data", "case step without its payload".into());
                return;
            }
        };
        let rest_right = match &matched {
            Some(m) => match current.right.without(m) {
                Some(r) => r,
                None => {
                    self.fail(depth, "matched-present", m.to_string());
                    return;
                }
            },
            None => current.right.clone(),
        };
        if let StepData::BlockSelect { block } = &node.steps[idx + 1].data {
            if *block != line_block(&rest_right) {
                self.fail(depth, "block", format!("{block:?}"));
            }
        }
        Self::record(collected, *flipped, family, CertPair::new(Some(summand(peeled)), matched.as_ref().map(summand)));

        match &node.child {
            None => self.fail(depth, "child", "inner node without a child".into()),
            Some(child) => {
                let expected_child = ExtProblem::new(reduced.tail.with(cuspidal_factor(sigma)), rest_right);
                if child.problem != expected_child {
                    self.fail(depth, "child-problem", format!("{} != {}", child.problem, expected_child));
                }
                if child.problem.m() >= problem.m() {
                    self.fail(depth, "m-decrease", format!("{} -> {}", problem.m(), child.problem.m()));
                }
            }
        }
    }
}

/// Human-readable proof transcript.
pub fn transcript(trace: &ReductionTrace) -> String {
    let mut out = String::new();
    for (depth, node) in trace.node.iter().enumerate() {
        let indent = "  ".repeat(depth);
        out.push_str(&format!("{indent}{} [m = {}]\n", node.problem, node.problem.m()));
        for s in &node.steps {
            let detail = match &s.data {
                StepData::TransferSwap { sigma, swapped } => format!("σ = {sigma} (GL_2); pass to {swapped}"),
                StepData::MainReduction { peeled, reduced } => format!(
                    "peel {peeled} against σ = {} (GL_{}); restriction to GL_{}",
                    reduced.fresh_sigma, reduced.fresh_sigma.line.base_degree, reduced.target
                ),
                StepData::BlockSelect { block } => {
                    let b: Vec<String> = block.iter().map(|(l, k)| format!("{l}^{k}")).collect();
                    format!("only the block of [{}] contributes", b.join(", "))
                }
                StepData::CaseA { matched } => match matched {
                    Some(m) => format!("π₂ contains the derivative {m}"),
                    None => "the derivative is trivial".to_string(),
                },
                StepData::CaseB { matched, dual_left } => format!("π₂ contains D of the derivative, {matched}; dual side {dual_left}"),
                StepData::GenericBase => "both sides generic".to_string(),
            };
            out.push_str(&format!("{indent}  {} ({}): {}\n", s.kind.name(), s.cite, detail));
        }
    }
    out
}
