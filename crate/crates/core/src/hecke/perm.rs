//! Permutations of `{0, …, n-1}` in one-line notation.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_one_line(v: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; v.len()];
        for &x in &v {
            if x >= v.len() || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Perm(v))
    }

    /// Parses 1-based one-line notation such as `[2,1,3]` or `213`.
    pub fn parse_one_based(v: &[usize]) -> Option<Self> {
        if v.contains(&0) {
            return None;
        }
        Perm::from_one_line(v.iter().map(|x| x - 1).collect())
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    /// `s_i · self`: swaps the values `i` and `i+1`.
    pub fn left_mul_s(&self, i: usize) -> Perm {
        Perm(self.0.iter().map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x }).collect())
    }

    /// `self · s_i`: swaps positions `i` and `i+1`.
    pub fn right_mul_s(&self, i: usize) -> Perm {
        let mut v = self.0.clone();
        v.swap(i, i + 1);
        Perm(v)
    }

    /// Whether `ℓ(s_i · self) > ℓ(self)`.
    pub fn left_ascent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i] < inv.0[i + 1]
    }

    /// A reduced word `[i₁, …, i_k]` with `self = s_{i₁} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        // peel right descents: w = w' s_i with ℓ(w') < ℓ(w)
        while let Some(i) = (0..w.n().saturating_sub(1)).find(|&i| w.0[i] > w.0[i + 1]) {
            word.push(i);
            w = w.right_mul_s(i);
        }
        word.reverse();
        word
    }

    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut v: Vec<usize> = (0..n).collect();
        permute(&mut v, 0, &mut out);
        out.sort();
        out
    }

    /// Minimal-length representatives of `S_n / (S_{n₁} × S_{n-n₁})`: increasing on both blocks.
    pub fn min_coset_reps(n: usize, n1: usize) -> Vec<Perm> {
        Perm::all(n)
            .into_iter()
            .filter(|p| p.0[..n1].windows(2).all(|w| w[0] < w[1]) && p.0[n1..].windows(2).all(|w| w[0] < w[1]))
            .collect()
    }

    /// `self = x · u` with `x` a minimal coset representative and `u ∈ S_{n₁} × S_{n-n₁}`.
    pub fn coset_split(&self, n1: usize) -> (Perm, Perm) {
        let mut first: Vec<usize> = self.0[..n1].to_vec();
        let mut second: Vec<usize> = self.0[n1..].to_vec();
        first.sort();
        second.sort();
        let x = Perm(first.into_iter().chain(second).collect());
        let u = x.inverse().compose(self);
        (x, u)
    }

    /// Restriction of `u ∈ S_{n₁} × S_{n₂}` to its two blocks.
    pub fn split_blocks(&self, n1: usize) -> (Perm, Perm) {
        let a = Perm(self.0[..n1].to_vec());
        let b = Perm(self.0[n1..].iter().map(|x| x - n1).collect());
        (a, b)
    }
}

fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<Perm>) {
    if k == v.len() {
        out.push(Perm(v.clone()));
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.one_based().iter().map(usize::to_string).collect();
        write!(f, "[{}]", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_multiply_back() {
        for p in Perm::all(4) {
            let word = p.reduced_word();
            assert_eq!(word.len(), p.length());
            let mut w = Perm::identity(4);
            for &i in word.iter().rev() {
                w = w.left_mul_s(i);
            }
            assert_eq!(w, p);
        }
    }

    #[test]
    fn coset_representatives() {
        assert_eq!(Perm::min_coset_reps(4, 2).len(), 6);
        assert_eq!(Perm::min_coset_reps(3, 0).len(), 1);
        for p in Perm::all(4) {
            let (x, u) = p.coset_split(2);
            assert_eq!(x.compose(&u), p);
            assert_eq!(x.length() + u.length(), p.length());
            assert!(u.0[..2].iter().all(|&v| v < 2));
        }
    }

    #[test]
    fn ascents() {
        let s1 = Perm::identity(3).left_mul_s(0);
        assert!(!s1.left_ascent(0));
        assert!(s1.left_ascent(1));
    }
}
