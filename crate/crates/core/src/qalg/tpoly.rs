//! Polynomials and rational functions in `t = q + q^{-1} - 2`, plus the
//! conversion from symmetric rational functions of `q` and the
//! integrality-class test on the result.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::coeff::Scalar;
use super::laurent::Laurent;
use super::ratfunc::RatFunc;
use crate::{GaussRat, Rat};

/// A dense polynomial over an exact scalar field; no trailing zeros stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly<C: Scalar> {
    coeffs: Vec<C>,
}

impl<C: Scalar> Poly<C> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Poly::from_coeffs(vec![C::zero(), C::one()])
    }

    /// Coefficients in ascending degree.
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    pub fn scaled_div(&self, c: &C) -> Self {
        assert!(!c.is_zero());
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .map(|v| v.clone() / c.clone())
                .collect(),
        }
    }

    pub fn eval(&self, at: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + c.clone();
        }
        acc
    }

    pub fn divmod(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dd = div.degree().unwrap();
        let dc = div.leading_coeff();
        let mut rem = self.clone();
        let mut quot = vec![C::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff() / dc.clone();
            let shift = rd - dd;
            quot[shift] = c.clone();
            let mut coeffs = rem.coeffs;
            for (i, dv) in div.coeffs.iter().enumerate() {
                let sub = c.clone() * dv.clone();
                coeffs[i + shift] = coeffs[i + shift].clone() - sub;
            }
            rem = Poly::from_coeffs(coeffs);
        }
        (Poly::from_coeffs(quot), rem)
    }

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
            Poly::one()
        } else {
            a
        }
    }
}

impl<C: Scalar> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }
}

impl<C: Scalar> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        self + &(-rhs)
    }
}

impl<C: Scalar> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Scalar> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<C: Scalar> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let rendered = c.to_string();
            let (sign, mag) = match rendered.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => ("-", rest.to_string()),
                _ => ("+", rendered),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let wrap = mag.contains('/');
            match (i, mag.as_str()) {
                (0, _) => write!(f, "{mag}")?,
                (_, "1") => {}
                _ => {
                    if wrap {
                        write!(f, "({mag})")?;
                    } else {
                        write!(f, "{mag}")?;
                    }
                }
            }
            if i == 1 {
                write!(f, "t")?;
            } else if i > 1 {
                write!(f, "t^{i}")?;
            }
        }
        Ok(())
    }
}

/// A rational function of `t` over ℚ in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TRat {
    num: Poly<Rat>,
    den: Poly<Rat>,
}

impl TRat {
    pub fn new(num: Poly<Rat>, den: Poly<Rat>) -> Self {
        assert!(!den.is_zero(), "t-rational with zero denominator");
        if num.is_zero() {
            return TRat {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = Poly::gcd_monic(&num, &den);
        let (mut num, r1) = num.divmod(&g);
        debug_assert!(r1.is_zero());
        let (mut den, r2) = den.divmod(&g);
        debug_assert!(r2.is_zero());
        let lc = den.leading_coeff();
        if !lc.is_one() {
            num = num.scaled_div(&lc);
            den = den.scaled_div(&lc);
        }
        TRat { num, den }
    }

    pub fn from_poly(p: Poly<Rat>) -> Self {
        TRat {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly<Rat> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Rat> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Evaluate at a rational point where the denominator does not vanish.
    pub fn eval(&self, at: &Rat) -> Option<Rat> {
        let d = self.den.eval(at);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(at) / d)
        }
    }

    pub fn mul(&self, rhs: &TRat) -> TRat {
        TRat::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for TRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// Why a rational function of `q` failed to convert to the `t` variable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToTError {
    #[error("function is not symmetric under q ↔ q^-1")]
    AsymmetricInput,
    #[error("function has a nonzero imaginary part: {0}")]
    NonRealCoefficients(String),
    #[error("function involves genuinely half-integer powers of q")]
    HalfIntegerPowers,
}

/// The constant `t = q + q^{-1} - 2` as a rational function of `x = q^{1/2}`.
pub fn t_in_q() -> RatFunc<GaussRat> {
    let l = Laurent::from_terms([
        (2i64, GaussRat::one()),
        (-2, GaussRat::one()),
        (0, GaussRat::from_int(-2)),
    ]);
    RatFunc::from(l)
}

/// `q^m + q^{-m}` written in `t` via `p_0 = 2`, `p_1 = t + 2`,
/// `p_m = (t+2) p_{m-1} - p_{m-2}`.
fn power_sum_in_t(m: usize) -> Poly<Rat> {
    let two = Poly::constant(Rat::from_integer(BigInt::from(2)));
    if m == 0 {
        return two;
    }
    let tp2 = &Poly::x() + &two;
    let mut prev = two;
    let mut cur = tp2.clone();
    for _ in 1..m {
        let next = &(&tp2 * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Express a symmetric, real rational function of `q` as a rational function
/// of `t = q + q^{-1} - 2`. Symmetry, realness, and integrality of the
/// `q`-powers are checked, in that order.
pub fn to_t(r: &RatFunc<GaussRat>) -> Result<TRat, ToTError> {
    if r.is_zero() {
        return Ok(TRat::from_poly(Poly::zero()));
    }
    if r.invert_q() != *r {
        return Err(ToTError::AsymmetricInput);
    }
    if !crate::qalg::is_real(r) {
        let witness = r
            .num()
            .terms()
            .chain(r.den().terms())
            .find(|(_, c)| !c.is_real())
            .map(|(e, c)| format!("coefficient {c} at x^{e}"))
            .unwrap_or_default();
        return Err(ToTError::NonRealCoefficients(witness));
    }

    // Both num and den of the canonical form have a single exponent parity;
    // an even function either has both even, or both odd (then one extra
    // power of x on each side evens them out).
    let parity = |l: &Laurent<GaussRat>| -> Option<i64> {
        let mut par = None;
        for (e, _) in l.terms() {
            let p = e.rem_euclid(2);
            match par {
                None => par = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        par
    };
    let pn = parity(r.num()).ok_or(ToTError::HalfIntegerPowers)?;
    let pd = parity(r.den()).ok_or(ToTError::HalfIntegerPowers)?;
    if pn != pd {
        return Err(ToTError::HalfIntegerPowers);
    }
    let shift = pn; // multiply num and den by x when both are odd
    let num_q = r.num().shifted(shift).half_exponents();
    let den_q = r.den().shifted(shift).half_exponents();

    // Symmetrize the denominator: multiply both sides by den(1/q).
    let den_flip = den_q.stretched(-1);
    let sym_num = &num_q * &den_flip;
    let sym_den = &den_q * &den_flip;
    debug_assert_eq!(sym_den.stretched(-1), sym_den);
    if sym_num.stretched(-1) != sym_num {
        return Err(ToTError::AsymmetricInput);
    }

    let collapse = |l: &Laurent<GaussRat>| -> Poly<Rat> {
        let mut acc = Poly::zero();
        for (e, c) in l.terms() {
            if *e < 0 {
                continue; // mirrored by the positive-exponent term
            }
            let re = Poly::constant(c.re().clone());
            let contrib = &re * &power_sum_in_t(*e as usize);
            let contrib = if *e == 0 {
                // p_0 counts the constant twice.
                contrib.scaled_div(&Rat::from_integer(BigInt::from(2)))
            } else {
                contrib
            };
            acc = &acc + &contrib;
        }
        acc
    };
    Ok(TRat::new(collapse(&sym_num), collapse(&sym_den)))
}

impl<C: Scalar> Laurent<C> {
    /// Halve every exponent; they must all be even.
    fn half_exponents(&self) -> Laurent<C> {
        Laurent::from_terms(self.terms().map(|(e, c)| {
            debug_assert!(e % 2 == 0);
            (e / 2, c.clone())
        }))
    }
}

/// Verdict of the monic-integer-denominator membership test: `in_class`
/// holds when the function is `a(t)/b(t)` with `a ∈ ℤ[t]` and `b` monic in
/// `ℤ[t]`; otherwise `witness` names the offending coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LtVerdict {
    pub in_class: bool,
    pub witness: Option<String>,
}

/// Test membership in the class of integer polynomials over monic integer
/// denominators. The canonical monic-denominator form is the unique
/// candidate representation, so the test reduces to coefficient integrality
/// on both sides.
pub fn lt_class_test(r: &TRat) -> LtVerdict {
    let offending = |p: &Poly<Rat>, side: &str| -> Option<String> {
        p.coeffs().iter().enumerate().find_map(|(i, c)| {
            if c.is_integer() {
                None
            } else {
                Some(format!("{side} coefficient of t^{i} is {c}"))
            }
        })
    };
    if let Some(w) = offending(r.den(), "denominator") {
        return LtVerdict {
            in_class: false,
            witness: Some(w),
        };
    }
    if let Some(w) = offending(r.num(), "numerator") {
        return LtVerdict {
            in_class: false,
            witness: Some(w),
        };
    }
    LtVerdict {
        in_class: true,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::bracket;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    fn tpoly(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    #[test]
    fn to_t_basic_examples() {
        // q + q^-1 - 2 → t
        assert_eq!(to_t(&t_in_q()).unwrap(), TRat::from_poly(tpoly(&[0, 1])));
        // constants pass through
        let five = RatFunc::constant(GaussRat::from_int(5));
        assert_eq!(to_t(&five).unwrap(), TRat::from_poly(tpoly(&[5])));
        // q^2 + q^-2 → t^2 + 4t + 2
        let q2 = &RatFunc::x_pow(4) + &RatFunc::x_pow(-4);
        assert_eq!(to_t(&q2).unwrap(), TRat::from_poly(tpoly(&[2, 4, 1])));
        // [1]^2 = t again, through the bracket
        let b2 = bracket(1).pow(2);
        assert_eq!(to_t(&b2).unwrap(), TRat::from_poly(tpoly(&[0, 1])));
    }

    #[test]
    fn to_t_detects_bad_inputs() {
        assert_eq!(to_t(&bracket(1)), Err(ToTError::AsymmetricInput));
        let complex = RatFunc::constant(GaussRat::i());
        assert!(matches!(
            to_t(&complex),
            Err(ToTError::NonRealCoefficients(_))
        ));
        // x + x^-1 is symmetric and real but has no t-form.
        let odd = &RatFunc::x_pow(1) + &RatFunc::x_pow(-1);
        assert_eq!(to_t(&odd), Err(ToTError::HalfIntegerPowers));
    }

    #[test]
    fn to_t_inverts_the_lift_up_to_degree_10() {
        // Lift t^k to (q + q^-1 - 2)^k, convert back.
        let t = t_in_q();
        for deg in 0..=10usize {
            let mut coeffs = vec![Rat::zero(); deg + 1];
            coeffs[deg] = rat(3, 7);
            let p = Poly::from_coeffs(coeffs);
            let mut lifted = RatFunc::zero();
            for (i, c) in p.coeffs().iter().enumerate() {
                let term = &RatFunc::constant(GaussRat::from_rat(c.clone())) * &t.pow(i as i32);
                lifted = &lifted + &term;
            }
            assert_eq!(to_t(&lifted).unwrap(), TRat::from_poly(p));
        }
    }

    #[test]
    fn to_t_handles_rational_functions() {
        // 1/t as a function of q.
        let r = t_in_q().inv();
        let tr = to_t(&r).unwrap();
        assert_eq!(tr, TRat::new(tpoly(&[1]), tpoly(&[0, 1])));
        assert!(!tr.is_polynomial());
    }

    #[test]
    fn point_evaluation_agrees_between_q_and_t_forms() {
        // R(q) = (q^2 + q^-2 + 3)/(q + q^-1) at q = 3 versus its t-form at
        // t = 3 + 1/3 - 2 = 4/3.
        let num = &(&RatFunc::x_pow(4) + &RatFunc::x_pow(-4))
            + &RatFunc::constant(GaussRat::from_int(3));
        let den = &RatFunc::x_pow(2) + &RatFunc::x_pow(-2);
        let r = &num / &den;
        let tr = to_t(&r).unwrap();
        let q0 = rat(3, 1);
        let t0 = &q0 + &(Rat::one() / &q0) - rat(2, 1);
        // Evaluate the q-form at q = 3 by halving even exponents.
        let eval_q = |f: &RatFunc<GaussRat>| -> Rat {
            let ev = |l: &Laurent<GaussRat>| -> Rat {
                let mut acc = Rat::zero();
                for (e, c) in l.terms() {
                    assert!(e % 2 == 0);
                    let m = e / 2;
                    let p = if m >= 0 {
                        num_traits::pow::pow(q0.clone(), m as usize)
                    } else {
                        Rat::one() / num_traits::pow::pow(q0.clone(), (-m) as usize)
                    };
                    acc += c.re() * p;
                }
                acc
            };
            ev(f.num()) / ev(f.den())
        };
        assert_eq!(eval_q(&r), tr.eval(&t0).unwrap());
    }

    #[test]
    fn lt_class_examples() {
        // t/(t+1) is in the class.
        let a = TRat::new(tpoly(&[0, 1]), tpoly(&[1, 1]));
        assert!(lt_class_test(&a).in_class);
        // (t+1)/(2t+1): monic normalization forces halves.
        let b = TRat::new(tpoly(&[1, 1]), tpoly(&[1, 2]));
        let v = lt_class_test(&b);
        assert!(!v.in_class);
        assert!(v.witness.is_some());
        // 3/(t^2+t) is in the class.
        let c = TRat::new(tpoly(&[3]), tpoly(&[0, 1, 1]));
        assert!(lt_class_test(&c).in_class);
    }
}
