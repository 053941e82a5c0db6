//! Integer partitions, partition tuples, and their scalar statistics.
//!
//! Partitions index everything downstream: edge labels in vertex sums,
//! winding profiles at branes, irreducible characters. All statistics are
//! defined on the empty partition (`ℓ = 0`, `|λ| = 0`, `z = 1`, `κ = 0`).

use std::fmt;
use std::str::FromStr;

/// A partition: a finite weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from arbitrary parts: zeros are dropped and the
    /// rest is sorted into weakly decreasing order.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Length `ℓ(λ)`: the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Degree `|λ|`: the sum of all parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Multiplicity `m_a(λ)`: how many parts equal `a`.
    pub fn multiplicity(&self, a: u32) -> usize {
        self.parts.iter().filter(|&&p| p == a).count()
    }

    /// `|Aut(λ)| = Π_a m_a(λ)!`.
    pub fn aut_order(&self) -> u128 {
        let mut ord: u128 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let mut run = 1u128;
            let mut m = 1u128;
            while i + 1 < self.parts.len() && self.parts[i + 1] == self.parts[i] {
                i += 1;
                run += 1;
                m *= run;
            }
            ord *= m;
            i += 1;
        }
        ord
    }

    /// `z_λ = |Aut(λ)| · Π_j λ_j`.
    pub fn z_factor(&self) -> u128 {
        self.parts
            .iter()
            .fold(self.aut_order(), |acc, &p| acc * p as u128)
    }

    /// The conjugate partition `λ^t`, with `λ^t_i = Σ_{a ≥ i} m_a(λ)`.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut conj = vec![0u32; cols];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: conj }
    }

    /// `κ_λ = Σ_j λ_j (λ_j − 2j + 1)`; always even, and `κ_{λ^t} = −κ_λ`.
    pub fn kappa(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let j = (i + 1) as i64;
                let p = p as i64;
                p * (p - 2 * j + 1)
            })
            .sum()
    }

    /// `kλ`: every part multiplied by `k ≥ 1`.
    pub fn scale(&self, k: u32) -> Partition {
        assert!(k >= 1, "scale factor must be positive");
        Partition {
            parts: self.parts.iter().map(|&p| p * k).collect(),
        }
    }

    /// `λ/k` if `k` divides every part, otherwise `None`.
    pub fn divide(&self, k: u32) -> Option<Partition> {
        assert!(k >= 1, "divisor must be positive");
        if self.parts.iter().all(|&p| p % k == 0) {
            Some(Partition {
                parts: self.parts.iter().map(|&p| p / k).collect(),
            })
        } else {
            None
        }
    }

    /// `λ^{(k)}`: every multiplicity multiplied by `k ≥ 1`.
    pub fn repeat(&self, k: u32) -> Partition {
        assert!(k >= 1, "repeat factor must be positive");
        let mut parts = Vec::with_capacity(self.parts.len() * k as usize);
        for &p in &self.parts {
            for _ in 0..k {
                parts.push(p);
            }
        }
        Partition { parts }
    }

    /// `λ^{(1/k)}` if `k` divides every multiplicity, otherwise `None`.
    pub fn unrepeat(&self, k: u32) -> Option<Partition> {
        assert!(k >= 1, "repeat divisor must be positive");
        let k = k as usize;
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut m = 0;
            while i < self.parts.len() && self.parts[i] == p {
                m += 1;
                i += 1;
            }
            if m % k != 0 {
                return None;
            }
            for _ in 0..m / k {
                parts.push(p);
            }
        }
        Some(Partition { parts })
    }

    /// Multiset union `λ ⊔ ν`: parts merged and re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Multiset containment: `m_a(other) ≤ m_a(self)` for all `a`.
    pub fn contains_parts(&self, other: &Partition) -> bool {
        if other.parts.is_empty() {
            return true;
        }
        let max = other.parts[0];
        (1..=max).all(|a| other.multiplicity(a) <= self.multiplicity(a))
    }

    /// Young-diagram containment: `other_i ≤ self_i` row by row.
    pub fn contains_shape(&self, other: &Partition) -> bool {
        other.parts.len() <= self.parts.len()
            && other
                .parts
                .iter()
                .zip(self.parts.iter())
                .all(|(&o, &s)| o <= s)
    }

    /// Greatest common divisor of all parts; 0 for the empty partition.
    pub fn parts_gcd(&self) -> u32 {
        self.parts.iter().fold(0, |g, &p| gcd_u32(g, p))
    }
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Error when parsing a partition from its `[3,1]` text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePartitionError(pub String);

impl fmt::Display for ParsePartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid partition literal: {}", self.0)
    }
}

impl std::error::Error for ParsePartitionError {}

impl FromStr for Partition {
    type Err = ParsePartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| ParsePartitionError(s.to_string()))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in inner.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| ParsePartitionError(s.to_string()))?;
            if p == 0 {
                return Err(ParsePartitionError(s.to_string()));
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}

/// All partitions of `d`, exactly once, in reverse-lexicographic order:
/// `(d)` first, `(1,…,1)` last. Deterministic, so graded sums over these
/// lists reproduce bit-for-bit.
pub fn partitions_of(d: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_partitions(d, d, &mut stack, &mut out);
    out
}

fn gen_partitions(rem: u32, max: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    let top = rem.min(max);
    for first in (1..=top).rev() {
        stack.push(first);
        gen_partitions(rem - first, first, stack, out);
        stack.pop();
    }
}

/// A fixed-length sequence of partitions, one per brane.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PartitionTuple {
    entries: Vec<Partition>,
}

impl PartitionTuple {
    pub fn new(entries: Vec<Partition>) -> Self {
        PartitionTuple { entries }
    }

    /// The tuple `(∅, …, ∅)` of the given width.
    pub fn trivial(width: usize) -> Self {
        PartitionTuple {
            entries: vec![Partition::empty(); width],
        }
    }

    pub fn entries(&self) -> &[Partition] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &Partition {
        &self.entries[i]
    }

    /// Number of component partitions (the brane count `s`).
    pub fn width(&self) -> usize {
        self.entries.len()
    }

    /// `ℓ(μ⃗) = Σ ℓ(μ^i)`.
    pub fn length(&self) -> usize {
        self.entries.iter().map(|p| p.len()).sum()
    }

    /// `|μ⃗| = Σ |μ^i|`.
    pub fn size(&self) -> u32 {
        self.entries.iter().map(|p| p.size()).sum()
    }

    /// `z_{μ⃗} = Π z_{μ^i}`.
    pub fn z_factor(&self) -> u128 {
        self.entries.iter().map(|p| p.z_factor()).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.entries.iter().all(|p| p.is_empty())
    }

    pub fn scale(&self, k: u32) -> PartitionTuple {
        PartitionTuple {
            entries: self.entries.iter().map(|p| p.scale(k)).collect(),
        }
    }

    pub fn divide(&self, k: u32) -> Option<PartitionTuple> {
        self.entries
            .iter()
            .map(|p| p.divide(k))
            .collect::<Option<Vec<_>>>()
            .map(PartitionTuple::new)
    }

    pub fn repeat(&self, k: u32) -> PartitionTuple {
        PartitionTuple {
            entries: self.entries.iter().map(|p| p.repeat(k)).collect(),
        }
    }

    pub fn unrepeat(&self, k: u32) -> Option<PartitionTuple> {
        self.entries
            .iter()
            .map(|p| p.unrepeat(k))
            .collect::<Option<Vec<_>>>()
            .map(PartitionTuple::new)
    }

    /// Componentwise multiset union `μ⃗ ⊔ ν⃗`. Widths must agree.
    pub fn union(&self, other: &PartitionTuple) -> PartitionTuple {
        assert_eq!(
            self.width(),
            other.width(),
            "partition tuple widths differ"
        );
        PartitionTuple {
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(a, b)| a.union(b))
                .collect(),
        }
    }

    /// Componentwise multiset containment `other ⊆ self`. Widths must agree.
    pub fn contains_parts(&self, other: &PartitionTuple) -> bool {
        assert_eq!(
            self.width(),
            other.width(),
            "partition tuple widths differ"
        );
        self.entries
            .iter()
            .zip(other.entries.iter())
            .all(|(a, b)| a.contains_parts(b))
    }

    /// Gcd of all parts across all entries; 0 when every entry is empty.
    pub fn parts_gcd(&self) -> u32 {
        self.entries
            .iter()
            .fold(0, |g, p| gcd_u32(g, p.parts_gcd()))
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2]).conjugate(), p(&[1, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(Partition::empty().kappa(), 0);
        assert_eq!(p(&[2]).kappa(), 2);
        assert_eq!(p(&[3, 1]).kappa(), 4);
    }

    #[test]
    fn z_factor_examples() {
        assert_eq!(p(&[1]).z_factor(), 1);
        assert_eq!(p(&[2, 2]).z_factor(), 8);
        assert_eq!(p(&[3, 1]).z_factor(), 3);
    }

    #[test]
    fn scale_divide_repeat_examples() {
        assert_eq!(p(&[2, 1]).scale(3), p(&[6, 3]));
        assert_eq!(p(&[6, 3]).divide(3), Some(p(&[2, 1])));
        assert_eq!(p(&[6, 3]).divide(2), None);
        assert_eq!(p(&[2]).repeat(2), p(&[2, 2]));
        assert_eq!(p(&[2, 2, 1, 1]).unrepeat(2), Some(p(&[2, 1])));
        assert_eq!(p(&[2, 2, 1]).unrepeat(2), None);
    }

    #[test]
    fn tuple_ops_examples() {
        let a = PartitionTuple::new(vec![p(&[2]), p(&[1])]);
        let b = PartitionTuple::new(vec![p(&[1]), Partition::empty()]);
        assert_eq!(
            a.union(&b),
            PartitionTuple::new(vec![p(&[2, 1]), p(&[1])])
        );
        let big = PartitionTuple::new(vec![p(&[2, 1]), p(&[1])]);
        let small = PartitionTuple::new(vec![p(&[1]), p(&[1])]);
        assert!(big.contains_parts(&small));
        let c = PartitionTuple::new(vec![p(&[2, 2])]);
        let d = PartitionTuple::new(vec![p(&[2, 1])]);
        assert!(!d.contains_parts(&c));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(3),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        assert_eq!(partitions_of(5).len(), 7);
    }

    // Classical recurrence p(n) = Σ_k p(n − k·(parts ≥ ...)) via the
    // intermediate count-by-max-part table; independent of the generator.
    fn partition_count(n: usize) -> u64 {
        let mut table = vec![vec![0u64; n + 1]; n + 1];
        for row in table.iter_mut() {
            row[0] = 1;
        }
        for maxp in 1..=n {
            for d in 1..=n {
                table[maxp][d] =
                    table[maxp - 1][d] + if d >= maxp { table[maxp][d - maxp] } else { 0 };
            }
        }
        table[n][n]
    }

    #[test]
    fn enumeration_matches_counting_recurrence() {
        for d in 0..=20u32 {
            assert_eq!(
                partitions_of(d).len() as u64,
                partition_count(d as usize),
                "p({d})"
            );
        }
    }

    #[test]
    fn conjugation_involution_and_kappa() {
        for d in 0..=12u32 {
            for lam in partitions_of(d) {
                let conj = lam.conjugate();
                assert_eq!(conj.conjugate(), lam);
                assert_eq!(conj.kappa(), -lam.kappa());
                assert_eq!(lam.kappa().rem_euclid(2), 0);
                assert_eq!(conj.size(), lam.size());
            }
        }
    }

    #[test]
    fn scale_and_repeat_round_trips() {
        for d in 0..=8u32 {
            for lam in partitions_of(d) {
                for k in 1..=4u32 {
                    assert_eq!(lam.scale(k).divide(k), Some(lam.clone()));
                    assert_eq!(lam.repeat(k).unrepeat(k), Some(lam.clone()));
                    let zk = lam.scale(k).z_factor();
                    assert_eq!(zk, (k as u128).pow(lam.len() as u32) * lam.z_factor());
                }
            }
        }
    }

    #[test]
    fn display_round_trip() {
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[0]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
    }
}
