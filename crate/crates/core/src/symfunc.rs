//! Principal specializations of (skew) Schur functions at `q^{λ+ρ}` and
//! irreducible characters of symmetric groups.
//!
//! With `ρ = (-1/2, -3/2, …)`, the alphabet `q^{λ+ρ}` is
//! `(q^{λ_1 - 1/2}, q^{λ_2 - 3/2}, …)`. Skew Schur values are computed by
//! the dual Jacobi-Trudi determinant
//! `s_{μ/η} = det(e_{μ^t_i - η^t_j - i + j})`, whose entries reduce to a
//! finite rational correction times the closed form
//! `e_k(q^ρ) = q^{-k²/2} / Π_{j=1}^{k} (1 - q^{-j})`.
//!
//! Characters follow the Murnaghan-Nakayama rule, run on first-column hook
//! length (beta) sets: removing a border strip of size `r` replaces a beta
//! number `b` by `b - r`, with sign `(-1)^{#(beta numbers strictly between)}`.
//! Strips are removed for the largest part of the class first.

use std::collections::HashMap;
use std::sync::RwLock;

use thiserror::Error;

use crate::partition::{partitions_of, Partition};
use crate::{GaussRat, HalfLaurent, RatFuncQ};

/// Key for a skew Schur specialization `s_{shape/inner}(q^{shift+ρ})`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpecKey {
    pub shape: Partition,
    pub inner: Partition,
    pub shift: Partition,
}

impl SpecKey {
    pub fn straight(shape: Partition, shift: Partition) -> Self {
        SpecKey {
            shape,
            inner: Partition::empty(),
            shift,
        }
    }
}

/// Key for a symmetric-group character value `χ_irrep(class)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CharKey {
    pub irrep: Partition,
    pub class: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("character degree mismatch: |{irrep}| = {} but |{class}| = {}", irrep.size(), class.size())]
    SizeMismatch { irrep: Partition, class: Partition },
}

/// Memo tables for specializations and characters. Concurrent reads,
/// exclusive insertion; values are identical regardless of interleaving.
#[derive(Default)]
pub struct SymCache {
    elem: RwLock<HashMap<(u32, Partition), RatFuncQ>>,
    skew: RwLock<HashMap<SpecKey, RatFuncQ>>,
    chars: RwLock<HashMap<CharKey, i64>>,
    disabled: bool,
}

impl SymCache {
    pub fn new() -> Self {
        SymCache::default()
    }

    /// A cache that memoizes nothing; every call recomputes.
    pub fn uncached() -> Self {
        SymCache {
            disabled: true,
            ..SymCache::default()
        }
    }

    /// `e_k(q^{shift+ρ})`, exact.
    pub fn elementary(&self, k: u32, shift: &Partition) -> RatFuncQ {
        if k == 0 {
            return RatFuncQ::one();
        }
        let key = (k, shift.clone());
        if !self.disabled {
            if let Some(v) = self.elem.read().unwrap().get(&key) {
                return v.clone();
            }
        }
        let v = elementary_uncached(k, shift);
        if !self.disabled {
            self.elem.write().unwrap().insert(key, v.clone());
        }
        v
    }

    /// `s_{shape/inner}(q^{shift+ρ})`; zero when `inner ⊄ shape`.
    pub fn skew_schur(&self, key: &SpecKey) -> RatFuncQ {
        if !key.shape.contains_shape(&key.inner) {
            return RatFuncQ::zero();
        }
        if key.shape == key.inner {
            return RatFuncQ::one();
        }
        if !self.disabled {
            if let Some(v) = self.skew.read().unwrap().get(key) {
                return v.clone();
            }
        }
        let v = self.skew_schur_uncached(key);
        if !self.disabled {
            self.skew.write().unwrap().insert(key.clone(), v.clone());
        }
        v
    }

    fn skew_schur_uncached(&self, key: &SpecKey) -> RatFuncQ {
        let n = key.shape.parts().first().copied().unwrap_or(0) as usize;
        let shape_t = key.shape.conjugate();
        let inner_t = key.inner.conjugate();
        let entry = |i: usize, j: usize| -> RatFuncQ {
            let mt = shape_t.parts().get(i).copied().unwrap_or(0) as i64;
            let et = inner_t.parts().get(j).copied().unwrap_or(0) as i64;
            let idx = mt - et - i as i64 + j as i64;
            if idx < 0 {
                RatFuncQ::zero()
            } else {
                self.elementary(idx as u32, &key.shift)
            }
        };
        let mat: Vec<Vec<RatFuncQ>> = (0..n)
            .map(|i| (0..n).map(|j| entry(i, j)).collect())
            .collect();
        determinant(&mat)
    }

    /// `χ_irrep(class)` by the Murnaghan-Nakayama rule.
    pub fn character(&self, key: &CharKey) -> Result<i64, CharError> {
        if key.irrep.size() != key.class.size() {
            return Err(CharError::SizeMismatch {
                irrep: key.irrep.clone(),
                class: key.class.clone(),
            });
        }
        Ok(self.mn_recurse(key))
    }

    fn mn_recurse(&self, key: &CharKey) -> i64 {
        if key.irrep.is_empty() {
            return 1;
        }
        if !self.disabled {
            if let Some(v) = self.chars.read().unwrap().get(key) {
                return *v;
            }
        }
        let r = key.class.parts()[0] as i64;
        let rest = Partition::new(key.class.parts()[1..].to_vec());
        let n = key.irrep.len();
        let beta: Vec<i64> = key
            .irrep
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 + (n - 1 - i) as i64)
            .collect();
        let mut total = 0i64;
        for (idx, &b) in beta.iter().enumerate() {
            let target = b - r;
            if target < 0 || beta.contains(&target) {
                continue;
            }
            let height = beta.iter().filter(|&&e| e > target && e < b).count();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            let mut nb = beta.clone();
            nb[idx] = target;
            nb.sort_unstable_by(|a, b| b.cmp(a));
            let parts: Vec<u32> = nb
                .iter()
                .enumerate()
                .map(|(i, &e)| (e - (n - 1 - i) as i64) as u32)
                .collect();
            let sub = CharKey {
                irrep: Partition::new(parts),
                class: rest.clone(),
            };
            total += sign * self.mn_recurse(&sub);
        }
        if !self.disabled {
            self.chars.write().unwrap().insert(key.clone(), total);
        }
        total
    }
}

/// `e_k(q^ρ) = q^{-k²/2} / Π_{j=1}^{k} (1 - q^{-j})` as a function of
/// `x = q^{1/2}`.
fn elementary_rho(k: u32) -> RatFuncQ {
    let ksq = (k as i64) * (k as i64);
    let num = HalfLaurent::x_pow(-ksq);
    let mut den = HalfLaurent::one();
    for j in 1..=k as i64 {
        den = &den * &(&HalfLaurent::one() - &HalfLaurent::x_pow(-2 * j));
    }
    RatFuncQ::new(num, den)
}

fn elementary_uncached(k: u32, shift: &Partition) -> RatFuncQ {
    if shift.is_empty() {
        return elementary_rho(k);
    }
    // Generating function: Π_{i≥1} (1 + z q^{shift_i - i + 1/2}) splits as a
    // finite correction over the first ℓ(shift) letters times the ρ-alphabet
    // series. Extract the z^k coefficient by convolution.
    let l = shift.len();
    let mut num_z: Vec<HalfLaurent> = vec![HalfLaurent::one()];
    let mut den_z: Vec<HalfLaurent> = vec![HalfLaurent::one()];
    for i in 1..=l {
        let a = HalfLaurent::x_pow(2 * shift.parts()[i - 1] as i64 - 2 * i as i64 + 1);
        let b = HalfLaurent::x_pow(-2 * i as i64 + 1);
        num_z = mul_z_poly(&num_z, &a);
        den_z = mul_z_poly(&den_z, &b);
    }
    // Invert den_z as a power series in z up to order k.
    let cap = k as usize;
    let mut inv: Vec<HalfLaurent> = Vec::with_capacity(cap + 1);
    inv.push(HalfLaurent::one());
    for m in 1..=cap {
        let mut acc = HalfLaurent::zero();
        for j in 1..=m.min(den_z.len() - 1) {
            acc = &acc + &(&den_z[j] * &inv[m - j]);
        }
        inv.push(-&acc);
    }
    let mut corr: Vec<HalfLaurent> = vec![HalfLaurent::zero(); cap + 1];
    for (a, na) in num_z.iter().enumerate() {
        for (b, ib) in inv.iter().enumerate() {
            if a + b > cap {
                break;
            }
            corr[a + b] = &corr[a + b] + &(na * ib);
        }
    }
    let mut out = RatFuncQ::zero();
    for (a, c) in corr.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out = &out + &(&RatFuncQ::from(c) * &elementary_rho(k - a as u32));
    }
    out
}

fn mul_z_poly(p: &[HalfLaurent], root: &HalfLaurent) -> Vec<HalfLaurent> {
    // Multiply a z-polynomial by (1 + root·z).
    let mut out = vec![HalfLaurent::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i] = &out[i] + c;
        out[i + 1] = &out[i + 1] + &(c * root);
    }
    out
}

/// Determinant by Laplace expansion with minors memoized on column subsets.
fn determinant(mat: &[Vec<RatFuncQ>]) -> RatFuncQ {
    let n = mat.len();
    if n == 0 {
        return RatFuncQ::one();
    }
    let mut memo: HashMap<u32, RatFuncQ> = HashMap::new();
    fn minor(
        mat: &[Vec<RatFuncQ>],
        row: usize,
        mask: u32,
        memo: &mut HashMap<u32, RatFuncQ>,
    ) -> RatFuncQ {
        if mask == 0 {
            return RatFuncQ::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let mut acc = RatFuncQ::zero();
        let mut sign = true;
        let mut bits = mask;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let c = &mat[row][j];
            if !c.is_zero() {
                let sub = minor(mat, row + 1, mask & !(1 << j), memo);
                let term = c * &sub;
                acc = if sign { &acc + &term } else { &acc - &term };
            }
            sign = !sign;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    minor(mat, 0, (1u32 << n) - 1, &mut memo)
}

/// `s_λ(q^ρ)` written through characters:
/// `Σ_{μ ⊢ |λ|} χ_λ(μ) / (z_μ [μ])`. Used as a cross-check against the
/// determinant route, never as the production path.
pub fn schur_rho_frobenius(cache: &SymCache, lambda: &Partition) -> RatFuncQ {
    let d = lambda.size();
    let mut acc = RatFuncQ::zero();
    for mu in partitions_of(d) {
        let chi = cache
            .character(&CharKey {
                irrep: lambda.clone(),
                class: mu.clone(),
            })
            .expect("sizes match by construction");
        if chi == 0 {
            continue;
        }
        let z = crate::Rat::from_integer(crate::Int::from(mu.z_factor() as i64));
        let denom = crate::qalg::bracket_partition(&mu);
        let coeff = RatFuncQ::constant(GaussRat::from_rat(
            crate::Rat::from_integer(crate::Int::from(chi)) / z,
        ));
        acc = &acc + &(&coeff / &denom);
    }
    acc
}
