//! Elements `Σ c · y^λ T_w` of the affine Hecke algebra of `GL_n` in the Bernstein basis.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use super::perm::Perm;
use super::ratfunc::RatFunc;

/// Basis key `(λ, w)` for `y^λ T_w`.
pub type Key = (Vec<i64>, Perm);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HElement {
    n: usize,
    terms: BTreeMap<Key, RatFunc>,
}

impl HElement {
    pub fn zero(n: usize) -> Self {
        HElement { n, terms: BTreeMap::new() }
    }

    pub fn scalar(n: usize, c: RatFunc) -> Self {
        HElement::monomial(n, vec![0; n], Perm::identity(n), c)
    }

    pub fn one(n: usize) -> Self {
        HElement::scalar(n, RatFunc::one())
    }

    pub fn monomial(n: usize, lambda: Vec<i64>, w: Perm, c: RatFunc) -> Self {
        assert_eq!(lambda.len(), n);
        assert_eq!(w.n(), n);
        let mut h = HElement::zero(n);
        h.add_term(lambda, w, c);
        h
    }

    /// `T_i` (0-based: swaps `i` and `i+1`).
    pub fn t(n: usize, i: usize) -> Self {
        assert!(i + 1 < n);
        HElement::monomial(n, vec![0; n], Perm::identity(n).left_mul_s(i), RatFunc::one())
    }

    pub fn t_w(w: Perm) -> Self {
        HElement::monomial(w.n(), vec![0; w.n()], w, RatFunc::one())
    }

    /// `y_j^e` (0-based).
    pub fn y(n: usize, j: usize, e: i64) -> Self {
        let mut l = vec![0; n];
        l[j] = e;
        HElement::monomial(n, l, Perm::identity(n), RatFunc::one())
    }

    pub fn y_pow(lambda: Vec<i64>) -> Self {
        let n = lambda.len();
        HElement::monomial(n, lambda, Perm::identity(n), RatFunc::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &[i64], w: &Perm) -> RatFunc {
        self.terms.get(&(lambda.to_vec(), w.clone())).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Vec<i64>, w: Perm, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let key = (lambda, w);
        let sum = match self.terms.get(&key) {
            Some(old) => old + &c,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn add(&self, other: &HElement) -> HElement {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut out = self.clone();
        for ((l, w), c) in &other.terms {
            out.add_term(l.clone(), w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &RatFunc) -> HElement {
        let mut out = HElement::zero(self.n);
        for ((l, w), c) in &self.terms {
            out.add_term(l.clone(), w.clone(), c * k);
        }
        out
    }

    pub fn sub(&self, other: &HElement) -> HElement {
        self.add(&other.scale(&RatFunc::int(-1)))
    }

    /// Whether every term has trivial finite part.
    pub fn is_laurent(&self) -> bool {
        self.terms.keys().all(|(_, w)| w.is_identity())
    }

    /// The anti-involution fixing every `T_i` and `y_j`: `y^λ T_w ↦ T_{w⁻¹} y^λ`, rewritten.
    pub fn anti_involution(&self) -> HElement {
        let mut out = HElement::zero(self.n);
        for ((l, w), c) in &self.terms {
            let term = HElement::t_w(w.inverse()).mul(&HElement::y_pow(l.clone()));
            out = out.add(&term.scale(c));
        }
        out
    }

    /// Product in the Bernstein basis.
    pub fn mul(&self, other: &HElement) -> HElement {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut out = HElement::zero(self.n);
        for ((l1, w1), c1) in &self.terms {
            for ((l2, w2), c2) in &other.terms {
                // y^{l1} (T_{w1} y^{l2}) T_{w2}
                let mid = t_w_times_y(w1, l2);
                for ((l, u), c) in &mid.terms {
                    let lam: Vec<i64> = l1.iter().zip(l).map(|(a, b)| a + b).collect();
                    let coeff = &(c1 * c2) * c;
                    for (v, d) in finite_mul(u, w2) {
                        out.add_term(lam.clone(), v, &coeff * &d);
                    }
                }
            }
        }
        out
    }

    pub fn commutes_with(&self, other: &HElement) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// A random element with up to `terms` terms, exponents in `-2..=2` and
    /// coefficients `a + b·q` with small integers.
    pub fn random<R: Rng>(n: usize, terms: usize, rng: &mut R) -> HElement {
        let perms = Perm::all(n);
        let mut h = HElement::zero(n);
        for _ in 0..terms {
            let lambda = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            let w = perms[rng.gen_range(0..perms.len())].clone();
            let c = &RatFunc::int(rng.gen_range(-3..=3)) + &(&RatFunc::q() * &RatFunc::int(rng.gen_range(-2..=2)));
            h.add_term(lambda, w, c);
        }
        h
    }
}

/// `T_i · T_u` in the finite Hecke algebra.
pub fn t_i_times(i: usize, u: &Perm) -> Vec<(Perm, RatFunc)> {
    let su = u.left_mul_s(i);
    if u.left_ascent(i) {
        vec![(su, RatFunc::one())]
    } else {
        vec![(u.clone(), RatFunc::q_minus_one()), (su, RatFunc::q())]
    }
}

/// `T_u · T_v` in the finite Hecke algebra.
pub fn finite_mul(u: &Perm, v: &Perm) -> Vec<(Perm, RatFunc)> {
    let mut acc: BTreeMap<Perm, RatFunc> = BTreeMap::from([(v.clone(), RatFunc::one())]);
    for &i in u.reduced_word().iter().rev() {
        let mut next: BTreeMap<Perm, RatFunc> = BTreeMap::new();
        for (w, c) in &acc {
            for (x, d) in t_i_times(i, w) {
                let e = next.entry(x).or_default();
                *e = &*e + &(c * &d);
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    acc.into_iter().collect()
}

/// `T_i · y^λ = y^{s_i λ} T_i + (q-1) · y^λ' · C` where `λ'` zeroes positions `i, i+1`.
fn t_i_times_y(n: usize, i: usize, lambda: &[i64]) -> HElement {
    let mut swapped = lambda.to_vec();
    swapped.swap(i, i + 1);
    let mut out = HElement::monomial(n, swapped, Perm::identity(n).left_mul_s(i), RatFunc::one());
    let (a, b) = (lambda[i], lambda[i + 1]);
    let (range, sign) = if a > b { (b..a, -1) } else { (a..b, 1) };
    let coeff = &RatFunc::q_minus_one() * &RatFunc::int(sign);
    for k in range {
        let mut mu = lambda.to_vec();
        mu[i] = k;
        mu[i + 1] = a + b - k;
        out.add_term(mu, Perm::identity(n), coeff.clone());
    }
    out
}

/// `T_w · y^λ` rewritten as `Σ c y^μ T_u`.
fn t_w_times_y(w: &Perm, lambda: &[i64]) -> HElement {
    let n = w.n();
    let mut acc = HElement::y_pow(lambda.to_vec());
    for &i in w.reduced_word().iter().rev() {
        let mut next = HElement::zero(n);
        for ((mu, u), c) in &acc.terms {
            let moved = t_i_times_y(n, i, mu);
            for ((nu, x), d) in &moved.terms {
                let cd = c * d;
                for (v, e) in finite_mul(x, u) {
                    next.add_term(nu.clone(), v, &cd * &e);
                }
            }
        }
        acc = next;
    }
    acc
}

impl fmt::Display for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((l, w), c)| {
                let mut s = format!("({c})");
                for (j, &e) in l.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => s.push_str(&format!("·y{}", j + 1)),
                        _ => s.push_str(&format!("·y{}^{e}", j + 1)),
                    }
                }
                if !w.is_identity() {
                    s.push_str(&format!("·T{w}"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic() {
        let t = HElement::t(2, 0);
        let expected = t.scale(&RatFunc::q_minus_one()).add(&HElement::scalar(2, RatFunc::q()));
        assert_eq!(t.mul(&t), expected);
    }

    #[test]
    fn t1_y1() {
        let got = HElement::t(2, 0).mul(&HElement::y(2, 0, 1));
        let y2 = HElement::y(2, 1, 1);
        let expected = y2.mul(&HElement::t(2, 0)).sub(&y2.scale(&RatFunc::q_minus_one()));
        assert_eq!(got, expected);
        // oracle: right-multiplying by T_1 gives q·y_2
        assert_eq!(got.mul(&HElement::t(2, 0)), y2.scale(&RatFunc::q()));
    }

    #[test]
    fn laurent_part_commutes() {
        let a = HElement::y(2, 0, 1);
        let b = HElement::y(2, 1, 1);
        assert_eq!(a.mul(&b), HElement::y_pow(vec![1, 1]));
        assert_eq!(HElement::y(2, 0, 1).mul(&HElement::y(2, 0, -1)), HElement::one(2));
    }

    #[test]
    fn anti_involution_is_an_involution() {
        let h = HElement::t(3, 0).mul(&HElement::y_pow(vec![2, -1, 0])).mul(&HElement::t(3, 1));
        assert_eq!(h.anti_involution().anti_involution(), h);
        assert_eq!(HElement::t(3, 1).anti_involution(), HElement::t(3, 1));
    }
}
