//! Exhaustive enumeration of single-line Arthur type pairs.

use crate::arthur::{param_of, ArthurRep, Speh};
use crate::par;
use crate::reduction::{build_trace, check_trace, ReductionError, StepKind};
use crate::relevance::{certificate_validate, strong_ext_relevant_param, strong_ext_relevant_rep};
use crate::segments::CuspidalLine;

/// `(a, b)` of a Speh factor.
type Shape = (u32, u32);

/// All Arthur type representations of `GL_n` whose factors lie on `line`.
pub fn reps_of_size(line: &CuspidalLine, n: u64) -> Vec<ArthurRep> {
    let deg = line.base_degree as u64;
    let mut shapes: Vec<Shape> = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if a * b * deg <= n {
                shapes.push((a as u32, b as u32));
            }
        }
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(&shapes, 0, n, deg, &mut stack, &mut |fs| {
        out.push(fs.iter().map(|&(a, b)| Speh::new(line.clone(), a, b)).collect())
    });
    out
}

fn fill(shapes: &[Shape], from: usize, left: u64, deg: u64, stack: &mut Vec<Shape>, emit: &mut dyn FnMut(&[Shape])) {
    if left == 0 {
        emit(stack);
        return;
    }
    for (i, &(a, b)) in shapes.iter().enumerate().skip(from) {
        let size = a as u64 * b as u64 * deg;
        if size <= left {
            stack.push((a, b));
            fill(shapes, i, left - size, deg, stack, emit);
            stack.pop();
        }
    }
}

/// Pairs `(π₁, π₂)` on one line with `gl_size(π₁) = n ≤ max_n` and `gl_size(π₂) = n - 1`.
pub fn ggp_pairs(line: &CuspidalLine, max_n: u64) -> Vec<(ArthurRep, ArthurRep)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let lefts = reps_of_size(line, n);
        let rights = reps_of_size(line, n - 1);
        for l in &lefts {
            for r in &rights {
                out.push((l.clone(), r.clone()));
            }
        }
    }
    out
}

/// Per-pair outcome of the decider and trace checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub pi1: ArthurRep,
    pub pi2: ArthurRep,
    pub relevant: bool,
    pub deciders_agree: bool,
    pub certificates_valid: bool,
    /// Relevant: trace built and validated. Not relevant: `NotRelevant` returned.
    pub trace_ok: bool,
    pub used_duality: bool,
    pub detail: String,
}

pub fn check_pair(pi1: &ArthurRep, pi2: &ArthurRep) -> PairReport {
    let (p1, p2) = (param_of(pi1), param_of(pi2));
    let by_param = strong_ext_relevant_param(&p1, &p2);
    let by_rep = strong_ext_relevant_rep(pi1, pi2);
    let relevant = by_param.is_some();
    let deciders_agree = by_param.is_some() == by_rep.is_some();
    let certificates_valid = [by_param, by_rep].iter().flatten().all(|c| certificate_validate(c, &p1, &p2));
    let mut detail = String::new();
    let (trace_ok, used_duality) = match build_trace(pi1, pi2) {
        Ok(t) => {
            let verdict = check_trace(&t);
            if !verdict.is_valid() {
                detail = verdict.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ");
            }
            (relevant && verdict.is_valid(), t.has_step(StepKind::CaseBDuality))
        }
        Err(ReductionError::NotRelevant) => (!relevant, false),
        Err(e) => {
            detail = e.to_string();
            (false, false)
        }
    };
    PairReport { pi1: pi1.clone(), pi2: pi2.clone(), relevant, deciders_agree, certificates_valid, trace_ok, used_duality, detail }
}

/// Runs [`check_pair`] over every pair, in parallel when the feature is enabled.
pub fn run(pairs: Vec<(ArthurRep, ArthurRep)>) -> Vec<PairReport> {
    par::map(pairs, |(a, b)| check_pair(&a, &b))
}

pub fn run_sequential(pairs: Vec<(ArthurRep, ArthurRep)>) -> Vec<PairReport> {
    par::map_sequential(pairs, |(a, b)| check_pair(&a, &b))
}
