//! Exact coefficient arithmetic: Gaussian rationals, Laurent polynomials and
//! rational functions in `x = q^{1/2}`, the bracket `[a] = q^{a/2} - q^{-a/2}`,
//! and conversion to the variable `t = q + q^{-1} - 2`.

pub mod coeff;
pub mod gauss;
pub mod laurent;
pub mod ratfunc;
pub mod tpoly;

use crate::partition::Partition;
use crate::{GaussRat, HalfLaurent, RatFuncQ};

/// `[a] = q^{a/2} - q^{-a/2}` for `a ≥ 1`. The bracket of 0 vanishes
/// identically, so it is rejected here rather than silently returned and
/// later divided by.
pub fn bracket_laurent(a: u32) -> HalfLaurent {
    assert!(a >= 1, "bracket of 0 vanishes; callers must not form it");
    &HalfLaurent::x_pow(a as i64) - &HalfLaurent::x_pow(-(a as i64))
}

/// `[a]` as a rational function.
pub fn bracket(a: u32) -> RatFuncQ {
    RatFuncQ::from(bracket_laurent(a))
}

/// `[λ] = Π_j [λ_j]`.
pub fn bracket_partition(lambda: &Partition) -> RatFuncQ {
    let mut acc = HalfLaurent::one();
    for &p in lambda.parts() {
        acc = &acc * &bracket_laurent(p);
    }
    RatFuncQ::from(acc)
}

/// Whether every coefficient of the canonical form is real. The canonical
/// form is preserved by complex conjugation, so this is equivalent to the
/// function being real-valued.
pub fn is_real(r: &RatFuncQ) -> bool {
    r.num().terms().all(|(_, c)| c.is_real()) && r.den().terms().all(|(_, c)| c.is_real())
}

/// Scalar multiplication by an element of ℚ(i).
pub fn scale(r: &RatFuncQ, c: &GaussRat) -> RatFuncQ {
    r * &RatFuncQ::constant(c.clone())
}
