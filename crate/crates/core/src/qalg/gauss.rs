//! Gaussian rationals: exact arithmetic in ℚ(i).
//!
//! Brane contributions inject powers of √−1 that only cancel at the very
//! end of the pipeline, so the whole coefficient field carries an exact
//! imaginary part and realness is asserted where the theory demands it.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Inv, One, Signed, Zero};

use crate::Rat;

/// An element `re + im·√−1` of ℚ(i), with arbitrary-precision parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussRat {
    re: Rat,
    im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat {
            re: Rat::from_integer(BigInt::from(n)),
            im: Rat::zero(),
        }
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRat {
            re,
            im: Rat::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat {
            re: Rat::zero(),
            im: Rat::one(),
        }
    }

    /// `(√−1)^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussRat::one(),
            1 => GaussRat::i(),
            2 => -GaussRat::one(),
            _ => -GaussRat::i(),
        }
    }

    pub fn re(&self) -> &Rat {
        &self.re
    }

    pub fn im(&self) -> &Rat {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    fn norm_sq(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: GaussRat) -> GaussRat {
        GaussRat {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: GaussRat) -> GaussRat {
        GaussRat {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: GaussRat) -> GaussRat {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        GaussRat { re, im }
    }
}

impl Div for GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: GaussRat) -> GaussRat {
        let n = rhs.norm_sq();
        assert!(!n.is_zero(), "division by zero in ℚ(i)");
        let conj = rhs.conj();
        let prod = self * conj;
        GaussRat {
            re: prod.re / &n,
            im: prod.im / n,
        }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat {
            re: Rat::zero(),
            im: Rat::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat {
            re: Rat::one(),
            im: Rat::zero(),
        }
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl Inv for GaussRat {
    type Output = GaussRat;
    fn inv(self) -> GaussRat {
        GaussRat::one() / self
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_part = |f: &mut fmt::Formatter<'_>, im: &Rat, leading: bool| -> fmt::Result {
            let mag = im.abs();
            let sign = if im.is_negative() {
                "-"
            } else if leading {
                ""
            } else {
                "+"
            };
            if mag.is_one() {
                write!(f, "{sign}i")
            } else {
                write!(f, "{sign}{mag}i")
            }
        };
        if self.re.is_zero() {
            im_part(f, &self.im, true)
        } else {
            write!(f, "{}", self.re)?;
            im_part(f, &self.im, false)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squares_to_minus_one() {
        assert_eq!(GaussRat::i() * GaussRat::i(), -GaussRat::one());
        assert_eq!(GaussRat::i_pow(2), -GaussRat::one());
        assert_eq!(GaussRat::i_pow(-1), -GaussRat::i());
        assert_eq!(GaussRat::i_pow(7), -GaussRat::i());
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = GaussRat::new(Rat::new(BigInt::from(3), BigInt::from(2)), Rat::one());
        let b = GaussRat::new(Rat::new(BigInt::from(-1), BigInt::from(5)), Rat::one());
        let q = a.clone() * b.clone() / b;
        assert_eq!(q, a);
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussRat::zero().to_string(), "0");
        assert_eq!(GaussRat::from_int(-3).to_string(), "-3");
        assert_eq!(GaussRat::i().to_string(), "i");
        assert_eq!((-GaussRat::i()).to_string(), "-i");
        assert_eq!(
            (GaussRat::from_int(1) + GaussRat::i()).to_string(),
            "1+i"
        );
        assert_eq!(
            (GaussRat::from_int(2) - GaussRat::i() - GaussRat::i()).to_string(),
            "2-2i"
        );
    }
}
