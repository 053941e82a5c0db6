//! Sparse Laurent polynomials in one variable over an exact scalar field.
//!
//! The variable is `x = q^{1/2}` throughout the crate: integer exponents of
//! `x` encode half-integer powers of `q` without fractional bookkeeping.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::coeff::Scalar;

/// A finitely supported map `exponent → coefficient` with no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Laurent<C: Scalar> {
    terms: BTreeMap<i64, C>,
}

impl<C: Scalar> Laurent<C> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Laurent::monomial(0, C::one())
    }

    pub fn constant(c: C) -> Self {
        Laurent::monomial(0, c)
    }

    pub fn monomial(exp: i64, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    /// `x^exp`.
    pub fn x_pow(exp: i64) -> Self {
        Laurent::monomial(exp, C::one())
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Laurent::zero();
        for (e, c) in pairs {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&0)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest-exponent term; zero for the zero element.
    pub fn leading_coeff(&self) -> C {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            None => {
                self.terms.insert(exp, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(exp, sum);
                }
            }
        }
    }

    /// Multiply by `x^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    /// Multiply every exponent by `k ≠ 0`. With `k = -1` this is the
    /// substitution `x → x^{-1}`; with `k ≥ 2` it evaluates at `x^k`.
    pub fn stretched(&self, k: i64) -> Self {
        assert!(k != 0, "exponent stretch factor must be nonzero");
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e * k, c.clone()))
                .collect(),
        }
    }

    pub fn scaled(&self, c: &C) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn scaled_div(&self, c: &C) -> Self {
        assert!(!c.is_zero(), "division of a polynomial by zero");
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v.clone() / c.clone()))
                .collect(),
        }
    }

    /// Drop every term with exponent outside `[lo, hi]`.
    pub fn truncated(&self, lo: i64, hi: i64) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| **e >= lo && **e <= hi)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Substitute `x → c`. `None` when `c = 0` and negative exponents occur.
    pub fn eval(&self, c: &C) -> Option<C> {
        let mut acc = C::zero();
        for (e, v) in &self.terms {
            if *e < 0 && c.is_zero() {
                return None;
            }
            let p = if *e >= 0 {
                pow_scalar(c, *e as u64)
            } else {
                C::one() / pow_scalar(c, (-*e) as u64)
            };
            acc = acc + v.clone() * p;
        }
        Some(acc)
    }

    /// Polynomial division with remainder. Both operands must have
    /// non-negative exponents and the divisor must be nonzero.
    pub fn divmod(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "polynomial division by zero");
        assert!(self.min_exp().unwrap_or(0) >= 0 && div.min_exp().unwrap_or(0) >= 0);
        let dlead = div.max_exp().unwrap();
        let dc = div.leading_coeff();
        let mut rem = self.clone();
        let mut quot = Laurent::zero();
        while !rem.is_zero() && rem.max_exp().unwrap() >= dlead {
            let e = rem.max_exp().unwrap() - dlead;
            let c = rem.leading_coeff() / dc.clone();
            let t = Laurent::monomial(e, c);
            rem = &rem - &(&t * div);
            quot = &quot + &t;
        }
        (quot, rem)
    }

    /// Monic gcd of two polynomials (non-negative exponents) by the
    /// Euclidean algorithm, with every remainder normalized monic to keep
    /// coefficient growth in check.
    pub fn gcd_monic(a: &Self, b: &Self) -> Self {
        let monic = |p: &Self| {
            if p.is_zero() {
                p.clone()
            } else {
                p.scaled_div(&p.leading_coeff())
            }
        };
        let mut a = monic(a);
        let mut b = monic(b);
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = monic(&r);
        }
        if a.is_zero() {
            Laurent::one()
        } else {
            a
        }
    }
}

fn pow_scalar<C: Scalar>(c: &C, mut n: u64) -> C {
    let mut base = c.clone();
    let mut acc = C::one();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base.clone();
        }
        n >>= 1;
        if n > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

impl<C: Scalar> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<C: Scalar> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<C: Scalar> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, -c.clone()))
                .collect(),
        }
    }
}

impl<C: Scalar> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest exponent first.
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let rendered = c.to_string();
            let (sign, mag) = match rendered.strip_prefix('-') {
                // A leading '-' on a plain scalar hops out to the join.
                Some(rest) if !rest.contains(['+', '-']) => ("-", rest.to_string()),
                _ => ("+", rendered),
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let needs_parens = mag.contains(['+', '-', '/']) || mag.contains('i');
            match (*e, mag.as_str()) {
                (0, _) => {
                    if needs_parens && mag.contains(['+', '-']) {
                        write!(f, "({mag})")?;
                    } else {
                        write!(f, "{mag}")?;
                    }
                }
                (_, "1") => write_x(f, *e)?,
                _ => {
                    if needs_parens {
                        write!(f, "({mag})")?;
                    } else {
                        write!(f, "{mag}")?;
                    }
                    write_x(f, *e)?;
                }
            }
        }
        Ok(())
    }
}

fn write_x(f: &mut fmt::Formatter<'_>, e: i64) -> fmt::Result {
    if e == 1 {
        write!(f, "x")
    } else {
        write!(f, "x^{e}")
    }
}
