//! Univariate rational functions in `q` over ℚ.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::linalg::{fmt_rat, parse_rat, rat, Rat};

/// Polynomial in `q`, coefficients from degree 0 upward, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<Rat>);

impl Poly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    pub fn q() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn leading(&self) -> Rat {
        self.0.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, q: &Rat) -> Rat {
        self.0.iter().rev().fold(Rat::zero(), |acc, c| acc * q + c)
    }

    fn scale(&self, k: &Rat) -> Poly {
        Poly::new(self.0.iter().map(|c| c * k).collect())
    }

    /// Euclidean division.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.0.len() - 1;
        let lead = d.leading();
        let mut r = self.0.clone();
        let mut quot = vec![Rat::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &lead;
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            quot[k] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (Poly::new(quot), Poly::new(r))
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|i| self.0.get(i).cloned().unwrap_or_default() + o.0.get(i).cloned().unwrap_or_default()).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::default();
        }
        let mut c = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            if mono.is_empty() {
                write!(f, "{}", fmt_rat(&a))?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_rat(&a))?;
            }
        }
        Ok(())
    }
}

/// `num / den` in lowest terms with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den.degree() == Some(0) {
            let l = den.leading().recip();
            return RatFunc { num: num.scale(&l), den: Poly::constant(Rat::one()) };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = (num.div_rem(&g).0, den.div_rem(&g).0);
        let l = den.leading().recip();
        RatFunc { num: num.scale(&l), den: den.scale(&l) }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::constant(Rat::one()) }
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn int(c: i64) -> Self {
        RatFunc::constant(rat(c))
    }

    pub fn q() -> Self {
        RatFunc::from_poly(Poly::q())
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        RatFunc::from_poly(Poly::new(vec![rat(-1), rat(1)]))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::default())
    }

    pub fn one() -> Self {
        RatFunc::int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// Value at a rational `q`; `None` at a pole.
    pub fn eval(&self, q: &Rat) -> Option<Rat> {
        let d = self.den.eval(q);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(q) / d)
        }
    }

    pub fn recip(&self) -> Option<RatFunc> {
        if self.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn pow(&self, e: i64) -> Option<RatFunc> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        Some((0..e.unsigned_abs()).fold(RatFunc::one(), |acc, _| &acc * &base))
    }

    pub fn parse(s: &str) -> Result<RatFunc, String> {
        let mut p = Parser { chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
        let v = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(format!("unexpected '{}' at offset {}", p.chars[p.pos], p.pos));
        }
        Ok(v)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &-o
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(&self.num * &o.num, &self.den * &o.den)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.recip().expect("division by zero")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Poly| {
            let s = p.to_string();
            if p.0.iter().filter(|c| !c.is_zero()).count() > 1 { format!("({s})") } else { s }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc, String> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc, String> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    if d.is_zero() {
                        return Err("division by zero".into());
                    }
                    acc = &acc / &d;
                }
                Some(c) if c == 'q' || c == '(' || c.is_ascii_digit() => acc = &acc * &self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc, String> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        let base = self.base()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let neg = self.peek() == Some('-');
            if neg {
                self.pos += 1;
            }
            let digits = self.digits();
            let e: i64 = digits.parse().map_err(|_| format!("bad exponent at offset {}", self.pos))?;
            return base.pow(if neg { -e } else { e }).ok_or_else(|| "zero to a negative power".to_string());
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn base(&mut self) -> Result<RatFunc, String> {
        match self.peek() {
            Some('q') => {
                self.pos += 1;
                Ok(RatFunc::q())
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(format!("expected ')' at offset {}", self.pos));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                Ok(RatFunc::constant(parse_rat(&d).ok_or("bad number")?))
            }
            Some(c) => Err(format!("unexpected '{c}' at offset {}", self.pos)),
            None => Err("unexpected end of input".into()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalises() {
        let f = RatFunc::parse("(q^2 - 1)/(q + 1)").unwrap();
        assert_eq!(f, RatFunc::q_minus_one());
        assert_eq!(f.to_string(), "q - 1");
        let g = RatFunc::parse("1/(2q - 2)").unwrap();
        assert_eq!(g.to_string(), "1/2/(q - 1)");
        assert_eq!(RatFunc::parse(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn arithmetic() {
        let q = RatFunc::q();
        let a = &(&q * &q) - &RatFunc::one();
        let b = &a / &RatFunc::q_minus_one();
        assert_eq!(b, &q + &RatFunc::one());
        assert_eq!(b.eval(&rat(2)), Some(rat(3)));
        assert_eq!(RatFunc::parse("1/(q-2)").unwrap().eval(&rat(2)), None);
        assert_eq!(RatFunc::parse("q^-2").unwrap(), RatFunc::parse("1/q^2").unwrap());
        assert!(RatFunc::parse("q +").is_err());
        assert!(RatFunc::parse("1/0").is_err());
        assert!(RatFunc::parse("x").is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "1", "-q", "q^3 - 2*q + 1/3", "(q + 1)/(q^2 + 1)", "-3/q"] {
            let f = RatFunc::parse(s).unwrap();
            assert_eq!(RatFunc::parse(&f.to_string()).unwrap(), f, "{s} -> {f}");
        }
    }
}
