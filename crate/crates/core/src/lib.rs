//! Exact-arithmetic engine for open Gromov-Witten invariants of toric
//! Calabi-Yau 3-folds with Aganagic-Vafa branes, computed by the topological
//! vertex; open BPS invariants extracted by the
//! Labastida-Mariño-Ooguri-Vafa resummation with machine-checked
//! integrality and finiteness; and the open/closed correspondence realized
//! on toric fans with BPS tables transferred to the Calabi-Yau 4-fold side.
//!
//! Everything is computed over exact fields — ℚ(i) for amplitudes in
//! `x = q^{1/2}`, ℚ for polynomials in `t = q + q^{-1} - 2` — so results are
//! reproducible bit for bit. There is no floating point anywhere.

pub mod bps;
pub mod geometry;
pub mod openclosed;
pub mod partition;
pub mod qalg;
pub mod ratmat;
pub mod report;
pub mod symfunc;
pub mod verify;
pub mod vertex;

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational.
pub type Rat = num_rational::BigRational;
/// Element of ℚ(i); the coefficient field for all `q`-amplitudes.
pub type GaussRat = qalg::gauss::GaussRat;
/// Laurent polynomial in `x = q^{1/2}` over ℚ(i).
pub type HalfLaurent = qalg::laurent::Laurent<GaussRat>;
/// Rational function in `x = q^{1/2}` over ℚ(i), canonical reduced form.
pub type RatFuncQ = qalg::ratfunc::RatFunc<GaussRat>;
/// Polynomial in `t` over ℚ.
pub type TPoly = qalg::tpoly::Poly<Rat>;
/// Rational function in `t` over ℚ, lowest terms, monic denominator.
pub type TRat = qalg::tpoly::TRat;
