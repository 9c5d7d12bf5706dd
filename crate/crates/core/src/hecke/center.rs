//! The centre: symmetric Laurent polynomials, spanned by orbit sums `z_M`.

use super::element::HElement;
use super::perm::Perm;
use super::ratfunc::RatFunc;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CenterElement {
    /// Orbit label, sorted in decreasing order.
    pub label: Vec<i64>,
    pub expansion: HElement,
}

/// `z_M = Σ_{w ∈ S_n} y_1^{M_{w(1)}} ⋯ y_n^{M_{w(n)}}` (so a label with a stabiliser
/// contributes each monomial with multiplicity).
pub fn center_element(label: &[i64]) -> CenterElement {
    let n = label.len();
    let mut expansion = HElement::zero(n);
    for w in Perm::all(n) {
        let lambda: Vec<i64> = (0..n).map(|i| label[w.0[i]]).collect();
        expansion.add_term(lambda, Perm::identity(n), RatFunc::one());
    }
    let mut sorted = label.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    CenterElement { label: sorted, expansion }
}

/// Commutes with every `T_i` and every `y_j`.
pub fn is_central(h: &HElement) -> bool {
    let n = h.n();
    (0..n.saturating_sub(1)).all(|i| h.commutes_with(&HElement::t(n, i))) && (0..n).all(|j| h.commutes_with(&HElement::y(n, j, 1)))
}

/// All orbit labels (decreasing) of length `n` with entries in `lo..=hi`.
pub fn orbit_labels(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn go(n: usize, max: i64, lo: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in (lo..=max).rev() {
            cur.push(v);
            go(n, v, lo, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, hi, lo, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orbit_sums() {
        let z = center_element(&[1, 0]);
        assert_eq!(z.expansion, HElement::y(2, 0, 1).add(&HElement::y(2, 1, 1)));
        let z = center_element(&[1, 1]);
        assert_eq!(z.expansion, HElement::y_pow(vec![1, 1]).scale(&RatFunc::int(2)));
        assert_eq!(center_element(&[-3]).expansion, HElement::y(1, 0, -3));
    }

    #[test]
    fn centrality() {
        assert!(is_central(&center_element(&[1, 0]).expansion));
        assert!(!is_central(&HElement::y(2, 0, 1)));
        assert!(is_central(&HElement::one(2)));
        let a = center_element(&[2, -1, 0]).expansion;
        let b = center_element(&[1, 1, 0]).expansion;
        assert!(is_central(&a) && is_central(&a.mul(&b)));
    }

    #[test]
    fn label_enumeration() {
        assert_eq!(orbit_labels(2, -1, 1).len(), 6);
        assert_eq!(orbit_labels(3, -2, 2).len(), 35);
    }
}
