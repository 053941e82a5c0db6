//! Rational functions in `x = q^{1/2}` in a canonical reduced form.
//!
//! Canonical form: numerator and denominator share no polynomial factor,
//! the denominator is a true polynomial with nonzero constant term and
//! leading coefficient 1, and any leftover power of `x` sits on the
//! numerator. Equality and hashing are therefore structural.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};


use super::coeff::Scalar;
use super::laurent::Laurent;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<C: Scalar> {
    num: Laurent<C>,
    den: Laurent<C>,
}

impl<C: Scalar> RatFunc<C> {
    /// Builds `num/den` and reduces to canonical form. Panics when `den = 0`;
    /// callers never divide by a symbolically vanishing function.
    pub fn new(num: Laurent<C>, den: Laurent<C>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: Laurent::zero(),
                den: Laurent::one(),
            };
        }
        let a = num.min_exp().unwrap();
        let b = den.min_exp().unwrap();
        let n_poly = num.shifted(-a);
        let d_poly = den.shifted(-b);
        let g = Laurent::gcd_monic(&n_poly, &d_poly);
        let (mut n_red, r1) = n_poly.divmod(&g);
        debug_assert!(r1.is_zero());
        let (mut d_red, r2) = d_poly.divmod(&g);
        debug_assert!(r2.is_zero());
        let lc = d_red.leading_coeff();
        if !lc.is_one() {
            n_red = n_red.scaled_div(&lc);
            d_red = d_red.scaled_div(&lc);
        }
        RatFunc {
            num: n_red.shifted(a - b),
            den: d_red,
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Laurent::zero(),
            den: Laurent::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: Laurent::one(),
            den: Laurent::one(),
        }
    }

    pub fn constant(c: C) -> Self {
        RatFunc {
            num: Laurent::constant(c),
            den: Laurent::one(),
        }
    }

    /// `x^e` as a rational function.
    pub fn x_pow(e: i64) -> Self {
        RatFunc {
            num: Laurent::x_pow(e),
            den: Laurent::one(),
        }
    }

    pub fn num(&self) -> &Laurent<C> {
        &self.num
    }

    pub fn den(&self) -> &Laurent<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of the zero function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, n: i32) -> Self {
        if n == 0 {
            return RatFunc::one();
        }
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Substitute `q → q^k` for `k ≥ 1`: every exponent of `x` is scaled by
    /// `k`. The canonical form is preserved term by term.
    pub fn substitute_power(&self, k: u32) -> Self {
        assert!(k >= 1, "power substitution requires k ≥ 1");
        RatFunc {
            num: self.num.stretched(k as i64),
            den: self.den.stretched(k as i64),
        }
    }

    /// Substitute `q → q^{-1}` (all exponents negated) and renormalize.
    pub fn invert_q(&self) -> Self {
        if self.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(self.num.stretched(-1), self.den.stretched(-1))
    }

    /// Substitute `x → -x`; detects parity of the underlying function.
    pub fn negate_x(&self) -> Self {
        let flip = |l: &Laurent<C>| {
            Laurent::from_terms(l.terms().map(|(e, c)| {
                (*e, if e.rem_euclid(2) == 1 { -c.clone() } else { c.clone() })
            }))
        };
        RatFunc::new(flip(&self.num), flip(&self.den))
    }

    /// Evaluate at `x = c`. `None` when the denominator vanishes there or a
    /// negative exponent meets `c = 0`.
    pub fn eval_x(&self, c: &C) -> Option<C> {
        let d = self.den.eval(c)?;
        if d.is_zero() {
            return None;
        }
        let n = self.num.eval(c)?;
        Some(n / d)
    }

    /// The Laurent expansion of this function as `x → ∞` (a series in
    /// descending powers of `x`), keeping all terms with exponent
    /// `≥ lowest_exp`.
    pub fn series_descending(&self, lowest_exp: i64) -> Laurent<C> {
        if self.is_zero() {
            return Laurent::zero();
        }
        // Work in v = 1/x so the expansion is v-adic.
        let num_v = self.num.stretched(-1);
        let den_v = self.den.stretched(-1);
        let a = num_v.min_exp().unwrap();
        let b = den_v.min_exp().unwrap();
        let n_poly = num_v.shifted(-a);
        let d_poly = den_v.shifted(-b);
        // Highest x-exponent produced is -(a - b); order counts from there.
        let order = -lowest_exp - (a - b);
        if order < 0 {
            return Laurent::zero();
        }
        let order = order as usize;
        let d0 = d_poly.coeff(0);
        debug_assert!(!d0.is_zero());
        let mut inv = vec![C::zero(); order + 1];
        inv[0] = C::one() / d0.clone();
        for n in 1..=order {
            let mut acc = C::zero();
            for j in 1..=n.min(d_poly.max_exp().unwrap_or(0) as usize) {
                let dj = d_poly.coeff(j as i64);
                if !dj.is_zero() {
                    acc = acc + dj * inv[n - j].clone();
                }
            }
            inv[n] = -(acc / d0.clone());
        }
        let mut out = Laurent::zero();
        for (en, cn) in n_poly.terms() {
            for (j, invj) in inv.iter().enumerate() {
                let vexp = en + j as i64;
                if vexp > order as i64 {
                    break;
                }
                if !invj.is_zero() {
                    out.add_term(-(a - b + vexp), cn.clone() * invj.clone());
                }
            }
        }
        out.truncated(lowest_exp, i64::MAX)
    }
}

impl<C: Scalar> From<Laurent<C>> for RatFunc<C> {
    fn from(l: Laurent<C>) -> Self {
        RatFunc {
            num: l,
            den: Laurent::one(),
        }
    }
}

impl<C: Scalar> Add for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn add(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFunc::new(num, den)
    }
}

impl<C: Scalar> Sub for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn sub(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        self + &(-rhs)
    }
}

impl<C: Scalar> Mul for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn mul(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<C: Scalar> Div for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn div(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        self * &rhs.inv()
    }
}

impl<C: Scalar> Neg for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn neg(self) -> RatFunc<C> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<C: Scalar> fmt::Display for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // Move the monomial factor of the numerator onto the denominator so
        // that e.g. x/(x^2 - 1) prints as 1/(x - x^-1).
        let s = self.num.min_exp().unwrap_or(0);
        let num = self.num.shifted(-s);
        let den = self.den.shifted(-s);
        if num.num_terms() > 1 {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        write!(f, "/({den})")
    }
}
