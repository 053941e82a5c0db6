//! Toric-fan constructions for the open/closed correspondence: from a
//! Calabi-Yau 3-fold fan with a framed outer brane, build the log pair
//! `(Y, D)` by adding one divisor ray, then the Calabi-Yau 4-fold as the
//! total space of `O_Y(-D)`, validating smoothness and the Calabi-Yau
//! condition throughout; finally transfer disk BPS tables with a sign flip
//! and re-sum them in Klemm-Pandharipande form.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::{Int, Rat};

/// A simplicial toric fan given by primitive rays and maximal cones, with
/// the covector certifying the Calabi-Yau condition `⟨u3, ray⟩ = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricFan {
    pub rank: usize,
    pub u3: Vec<i64>,
    pub rays: Vec<Vec<i64>>,
    #[serde(rename = "cones")]
    pub top_cones: Vec<Vec<usize>>,
}

/// A framed outer brane given by ray indices: the brane 2-cone is spanned
/// by `b2, b3`, its unique ambient 3-cone by `b1, b2, b3`, and the basis
/// `(b1, b2, b3)` must be positively oriented.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraneSpec {
    pub b1: usize,
    pub b2: usize,
    pub b3: usize,
    pub framing: i64,
    /// The global outer condition in a semi-projective compactification is
    /// not decidable from the fan alone; the caller asserts it and reports
    /// carry the assertion.
    pub outer_assumption_asserted: bool,
}

/// How a fan fails validation; empty lists mean a pass.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanVerdict {
    pub non_primitive_rays: Vec<usize>,
    pub non_calabi_yau_rays: Vec<usize>,
    pub non_unimodular_cones: Vec<usize>,
    pub malformed_cones: Vec<usize>,
}

impl FanVerdict {
    pub fn pass(&self) -> bool {
        self.non_primitive_rays.is_empty()
            && self.non_calabi_yau_rays.is_empty()
            && self.non_unimodular_cones.is_empty()
            && self.malformed_cones.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("fan validation failed: {0:?}")]
    ValidationFailure(FanVerdict),
    #[error("brane cone is invalid: {0}")]
    BadBrane(String),
    #[error("the added cone overlaps an existing cone (cone {0}); the brane is not outer in the compactified sense")]
    ConeOverlap(usize),
    #[error("relative pair input was not produced by the divisor construction: {0}")]
    NotARelativePair(String),
    #[error("semi-projective compactifications with equivariant insertions are out of scope; use the plain 4-fold construction")]
    SemiProjectiveRejected,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn vec_gcd(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Integer determinant by fraction-free elimination over ℚ.
fn det_int(rows: &[Vec<i64>]) -> Int {
    let n = rows.len();
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| Rat::from_integer(v.into())).collect())
        .collect();
    let mut det = Rat::from_integer(1.into());
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Int::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c].clone();
        let pivot = m[c][c].clone();
        for i in (c + 1)..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            for j in c..n {
                let sub = &f * &m[c][j];
                m[i][j] -= sub;
            }
        }
    }
    debug_assert!(det.is_integer());
    det.to_integer()
}

/// Check primitivity of every ray, the pairing `⟨u3, ray⟩ = 1`, and
/// unimodularity (smoothness) of every top cone.
pub fn validate_cy_fan(fan: &ToricFan) -> FanVerdict {
    let mut v = FanVerdict::default();
    for (i, r) in fan.rays.iter().enumerate() {
        if r.len() != fan.rank || vec_gcd(r).abs() != 1 {
            v.non_primitive_rays.push(i);
        }
        if r.len() == fan.u3.len() && dot(&fan.u3, r) != 1 {
            v.non_calabi_yau_rays.push(i);
        }
    }
    for (ci, cone) in fan.top_cones.iter().enumerate() {
        if cone.len() != fan.rank || cone.iter().any(|&r| r >= fan.rays.len()) {
            v.malformed_cones.push(ci);
            continue;
        }
        let rows: Vec<Vec<i64>> = cone.iter().map(|&r| fan.rays[r].clone()).collect();
        let d = det_int(&rows);
        if d.abs() != Int::from(1) {
            v.non_unimodular_cones.push(ci);
        }
    }
    v
}

/// The result of adding the brane divisor: the fan of `Y`, which cone and
/// ray were added, and the brane data used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativePair {
    pub fan: ToricFan,
    /// Index of the divisor ray `b_{R+1}`.
    pub divisor_ray: usize,
    /// Index of the added top cone `span{b2, b3, b_{R+1}}`.
    pub added_cone: usize,
    pub brane: BraneSpec,
    /// Number of top cones of the original 3-fold fan.
    pub original_cones: usize,
}

/// Build the log pair fan: append the ray
/// `b_{R+1} = -b1 - f·b2 + (f+1)·b3` and the top cone `{b2, b3, b_{R+1}}`.
pub fn build_relative_y(fan3: &ToricFan, brane: &BraneSpec) -> Result<RelativePair, FanError> {
    let verdict = validate_cy_fan(fan3);
    if !verdict.pass() {
        return Err(FanError::ValidationFailure(verdict));
    }
    if fan3.rank != 3 {
        return Err(FanError::BadBrane(format!(
            "expected a rank-3 fan, found rank {}",
            fan3.rank
        )));
    }
    let (i1, i2, i3) = (brane.b1, brane.b2, brane.b3);
    for i in [i1, i2, i3] {
        if i >= fan3.rays.len() {
            return Err(FanError::BadBrane(format!("ray index {i} out of range")));
        }
    }
    let mut ambient = None;
    for (ci, cone) in fan3.top_cones.iter().enumerate() {
        let mut c = cone.clone();
        c.sort_unstable();
        let mut want = vec![i1, i2, i3];
        want.sort_unstable();
        if c == want {
            ambient = Some(ci);
        }
    }
    if ambient.is_none() {
        return Err(FanError::BadBrane(format!(
            "{{b1,b2,b3}} = {{{i1},{i2},{i3}}} is not a listed 3-cone"
        )));
    }
    // Outer condition: the 2-cone {b2, b3} is a facet of exactly one 3-cone.
    let facet_count = fan3
        .top_cones
        .iter()
        .filter(|c| c.contains(&i2) && c.contains(&i3))
        .count();
    if facet_count != 1 {
        return Err(FanError::BadBrane(format!(
            "brane 2-cone {{{i2},{i3}}} lies on {facet_count} top cones; an outer brane needs exactly 1"
        )));
    }
    let rows = vec![
        fan3.rays[i1].clone(),
        fan3.rays[i2].clone(),
        fan3.rays[i3].clone(),
    ];
    if det_int(&rows) != Int::from(1) {
        return Err(FanError::BadBrane(
            "(b1, b2, b3) must be positively oriented".into(),
        ));
    }
    let f = brane.framing;
    let new_ray: Vec<i64> = (0..3)
        .map(|k| -fan3.rays[i1][k] - f * fan3.rays[i2][k] + (f + 1) * fan3.rays[i3][k])
        .collect();
    // The divisor ray lies in ker(u3): the pair is log Calabi-Yau, so the
    // fan of Y is deliberately not a CY fan. Check primitivity and the
    // unimodularity of the added cone instead of the full CY verdict.
    debug_assert_eq!(dot(&fan3.u3, &new_ray), 0);
    let mut fan = fan3.clone();
    let divisor_ray = fan.rays.len();
    fan.rays.push(new_ray);
    let added_cone = fan.top_cones.len();
    fan.top_cones.push(vec![i2, i3, divisor_ray]);
    let mut verdict = FanVerdict::default();
    if vec_gcd(&fan.rays[divisor_ray]).abs() != 1 {
        verdict.non_primitive_rays.push(divisor_ray);
    }
    let rows = vec![
        fan.rays[i2].clone(),
        fan.rays[i3].clone(),
        fan.rays[divisor_ray].clone(),
    ];
    if det_int(&rows).abs() != Int::from(1) {
        verdict.non_unimodular_cones.push(added_cone);
    }
    if !verdict.pass() {
        return Err(FanError::ValidationFailure(verdict));
    }

    if let Some(ci) = new_cone_overlap(&fan, added_cone) {
        return Err(FanError::ConeOverlap(ci));
    }
    Ok(RelativePair {
        fan,
        divisor_ray,
        added_cone,
        brane: brane.clone(),
        original_cones: fan3.top_cones.len(),
    })
}

/// Overlap test in the `⟨u3,·⟩ = 1` cross section. Height-1 rays cut the
/// plane in points; the divisor ray sits at height 0 and contributes a
/// recession direction, so the added cone's section is an unbounded strip.
/// Two convex sections properly overlap iff no edge normal separates them.
fn new_cone_overlap(fan: &ToricFan, target: usize) -> Option<usize> {
    let plane = PlaneCoords::new(&fan.u3, &fan.rays)?;
    let region_t = plane.cone_section(fan, target);
    for ci in 0..fan.top_cones.len() {
        if ci == target {
            continue;
        }
        if regions_overlap(&region_t, &plane.cone_section(fan, ci)) {
            return Some(ci);
        }
    }
    None
}

/// Rational coordinates on the affine plane `⟨u3, x⟩ = 1`: a base point `p0`
/// with pairing 1 and two independent kernel directions.
struct PlaneCoords {
    p0: Vec<Rat>,
    w: [Vec<Rat>; 2],
}

/// A convex region: convex hull of `points` plus the cone over `dirs`.
struct Section {
    points: Vec<[Rat; 2]>,
    dirs: Vec<[Rat; 2]>,
}

impl PlaneCoords {
    fn new(u3: &[i64], rays: &[Vec<i64>]) -> Option<PlaneCoords> {
        let dot_i = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
        let p0: Vec<Rat> = rays
            .iter()
            .find(|r| dot_i(u3, r) == 1)?
            .iter()
            .map(|&v| Rat::from_integer(v.into()))
            .collect();
        // Any ℚ-basis of ker(u3) works for separation tests.
        let candidates = [
            vec![u3[1], -u3[0], 0],
            vec![u3[2], 0, -u3[0]],
            vec![0, u3[2], -u3[1]],
        ];
        let mut basis: Vec<Vec<Rat>> = Vec::new();
        for c in candidates {
            if c.iter().all(|&v| v == 0) {
                continue;
            }
            let cr: Vec<Rat> = c.iter().map(|&v| Rat::from_integer(v.into())).collect();
            let mut trial: crate::ratmat::Mat = basis.clone();
            trial.push(cr.clone());
            if crate::ratmat::rank(&trial) == trial.len() {
                basis.push(cr);
            }
            if basis.len() == 2 {
                break;
            }
        }
        if basis.len() != 2 {
            return None;
        }
        let w1 = basis.pop().unwrap();
        let w0 = basis.pop().unwrap();
        Some(PlaneCoords { p0, w: [w0, w1] })
    }

    /// Coordinates `(α, β)` with `target = base + α w0 + β w1`.
    fn solve(&self, target: &[Rat], with_base: bool) -> [Rat; 2] {
        let dim = target.len();
        let m: crate::ratmat::Mat = (0..dim)
            .map(|k| vec![self.w[0][k].clone(), self.w[1][k].clone()])
            .collect();
        let rhs: Vec<Rat> = (0..dim)
            .map(|k| {
                if with_base {
                    &target[k] - &self.p0[k]
                } else {
                    target[k].clone()
                }
            })
            .collect();
        let sol = crate::ratmat::solve_unique(&m, &rhs).expect("plane coordinates exist");
        [sol[0].clone(), sol[1].clone()]
    }

    fn cone_section(&self, fan: &ToricFan, cone: usize) -> Section {
        let mut points = Vec::new();
        let mut dirs = Vec::new();
        for &r in &fan.top_cones[cone] {
            let ray = &fan.rays[r];
            let h = dot(&fan.u3, ray);
            let rq: Vec<Rat> = ray.iter().map(|&v| Rat::from_integer(v.into())).collect();
            if h == 0 {
                dirs.push(self.solve(&rq, false));
            } else {
                let scaled: Vec<Rat> = rq
                    .iter()
                    .map(|v| v / Rat::from_integer(h.into()))
                    .collect();
                points.push(self.solve(&scaled, true));
            }
        }
        Section { points, dirs }
    }
}

/// Separating-axis test for two convex sections; the axes are the edge
/// normals of both (segment edges and recession directions). Touching along
/// a shared face does not count as overlap.
fn regions_overlap(a: &Section, b: &Section) -> bool {
    let mut axes: Vec<[Rat; 2]> = Vec::new();
    let mut push_normal = |d: [Rat; 2]| {
        let n = [-d[1].clone(), d[0].clone()];
        if !(n[0].is_zero() && n[1].is_zero()) {
            axes.push(n);
        }
    };
    for s in [a, b] {
        let m = s.points.len();
        for i in 0..m {
            for j in (i + 1)..m {
                push_normal([
                    &s.points[j][0] - &s.points[i][0],
                    &s.points[j][1] - &s.points[i][1],
                ]);
            }
        }
        for d in &s.dirs {
            push_normal(d.clone());
        }
    }
    for axis in &axes {
        let (alo, ahi) = project(a, axis);
        let (blo, bhi) = project(b, axis);
        let left_of = |hi: &Option<Rat>, lo: &Option<Rat>| match (hi, lo) {
            (Some(h), Some(l)) => h <= l,
            _ => false, // an unbounded side cannot separate
        };
        if left_of(&ahi, &blo) || left_of(&bhi, &alo) {
            return false;
        }
    }
    true
}

/// Projection interval of a section onto an axis; `None` on a side means
/// unbounded there (a recession direction points that way).
fn project(s: &Section, axis: &[Rat; 2]) -> (Option<Rat>, Option<Rat>) {
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for p in &s.points {
        let v = &p[0] * &axis[0] + &p[1] * &axis[1];
        lo = Some(match lo {
            None => v.clone(),
            Some(l) => l.min(v.clone()),
        });
        hi = Some(match hi {
            None => v,
            Some(h) => h.max(v),
        });
    }
    let mut lo_unbounded = false;
    let mut hi_unbounded = false;
    for d in &s.dirs {
        let v = &d[0] * &axis[0] + &d[1] * &axis[1];
        if v.is_positive() {
            hi_unbounded = true;
        } else if v.is_negative() {
            lo_unbounded = true;
        }
    }
    (
        if lo_unbounded { None } else { lo },
        if hi_unbounded { None } else { hi },
    )
}

/// Build the Calabi-Yau 4-fold fan from the log pair: rays `(b_i, 0)`,
/// `(b_{R+1} + b3, 1)`, `(b3, 1)`; one 4-cone per original 3-cone plus the
/// cone over `{b2, b3}` and both new rays; `u3` extended by 0.
pub fn build_fourfold(pair: &RelativePair) -> Result<ToricFan, FanError> {
    let fan_y = &pair.fan;
    if fan_y.rank != 3 || pair.divisor_ray != fan_y.rays.len() - 1 {
        return Err(FanError::NotARelativePair(
            "divisor ray must be the last ray of a rank-3 fan".into(),
        ));
    }
    let (i2, i3) = (pair.brane.b2, pair.brane.b3);
    let lift0 = |v: &[i64]| -> Vec<i64> {
        let mut w = v.to_vec();
        w.push(0);
        w
    };
    let r = fan_y.rays.len() - 1; // number of original 3-fold rays
    let mut rays: Vec<Vec<i64>> = fan_y.rays[..r].iter().map(|v| lift0(v)).collect();
    // b̃_{R+1} = b_{R+1} + b3 + ṽ and b̃_{R+2} = b3 + ṽ.
    let mut tilde1: Vec<i64> = fan_y.rays[pair.divisor_ray]
        .iter()
        .zip(&fan_y.rays[i3])
        .map(|(a, b)| a + b)
        .collect();
    tilde1.push(1);
    let mut tilde2: Vec<i64> = fan_y.rays[i3].clone();
    tilde2.push(1);
    let idx_t1 = rays.len();
    rays.push(tilde1);
    let idx_t2 = rays.len();
    rays.push(tilde2);

    let mut top_cones: Vec<Vec<usize>> = fan_y.top_cones[..pair.original_cones]
        .iter()
        .map(|c| {
            let mut c4 = c.clone();
            c4.push(idx_t2);
            c4
        })
        .collect();
    top_cones.push(vec![i2, i3, idx_t1, idx_t2]);

    let mut u3 = fan_y.u3.clone();
    u3.push(0);
    let fan = ToricFan {
        rank: 4,
        u3,
        rays,
        top_cones,
    };
    let verdict = validate_cy_fan(&fan);
    if !verdict.pass() {
        return Err(FanError::ValidationFailure(verdict));
    }
    Ok(fan)
}

/// Curve-class bookkeeping of the correspondence: the identification is the
/// identity matrix in the basis (interior edge classes in id order, then
/// the disk class), and the insertion class is the product of the divisors
/// of `b̃_{R+1}` and `b2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Correspondence {
    pub source: String,
    pub iota: Vec<Vec<i64>>,
    /// Ray indices in the 4-fold fan whose divisors cut the insertion class.
    pub gamma_tilde: (usize, usize),
}

impl Correspondence {
    pub fn identity(source: &str, rank: usize, gamma_tilde: (usize, usize)) -> Self {
        let iota = (0..rank)
            .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
            .collect();
        Correspondence {
            source: source.to_string(),
            iota,
            gamma_tilde,
        }
    }
}

/// A closed-side BPS row produced by transfer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedBpsRow {
    pub class: Vec<i64>,
    pub value: String,
    pub integral: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransferError {
    #[error("open table row {0:?} is not a disk row (single brane, one-part winding)")]
    NonDiskTable(String),
    #[error("missing divisor class {0:?} in the transferred table")]
    MissingDivisorClass(Vec<i64>),
}

/// Flip signs of a disk BPS table: `ñ_{0,ι(β)} = -n_{0,β,(d)}`, classes
/// relabeled through the identity form of `ι`.
pub fn transfer_bps(
    open_rows: &BTreeMap<Vec<i64>, Int>,
    windings: &BTreeMap<Vec<i64>, crate::partition::PartitionTuple>,
) -> Result<BTreeMap<Vec<i64>, Int>, TransferError> {
    let mut out = BTreeMap::new();
    for (beta, n) in open_rows {
        if let Some(w) = windings.get(beta) {
            let disk = w.width() == 1 && w.entry(0).len() <= 1;
            if !disk {
                return Err(TransferError::NonDiskTable(format!("{w}")));
            }
        }
        out.insert(beta.clone(), -n.clone());
    }
    Ok(out)
}

/// Klemm-Pandharipande resummation of a transferred table:
/// `Ñ_{0,β̃} = Σ_{k|β̃} ñ_{0,β̃/k} / k²`, with an integrality flag per row.
pub fn kp_rows(
    closed: &BTreeMap<Vec<i64>, Int>,
) -> Result<Vec<(Vec<i64>, Int, Rat)>, TransferError> {
    let mut out = Vec::new();
    for (beta, n) in closed {
        let g = beta.iter().fold(0i64, |g, &v| g.gcd(&v));
        let mut total = Rat::zero();
        for k in 1..=g.max(1) {
            if g % k != 0 {
                continue;
            }
            let sub: Vec<i64> = beta.iter().map(|v| v / k).collect();
            let nk = closed
                .get(&sub)
                .ok_or(TransferError::MissingDivisorClass(sub))?;
            total += Rat::new(nk.clone(), BigInt::from(k * k));
        }
        out.push((beta.clone(), n.clone(), total));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3_fan() -> ToricFan {
        ToricFan {
            rank: 3,
            u3: vec![0, 0, 1],
            rays: vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1]],
            top_cones: vec![vec![0, 1, 2]],
        }
    }

    fn c3_brane(f: i64) -> BraneSpec {
        BraneSpec {
            b1: 0,
            b2: 1,
            b3: 2,
            framing: f,
            outer_assumption_asserted: true,
        }
    }

    #[test]
    fn validate_cy_fan_examples() {
        assert!(validate_cy_fan(&c3_fan()).pass());
        let mut bad = c3_fan();
        bad.rays.push(vec![1, 1, 2]);
        let v = validate_cy_fan(&bad);
        assert_eq!(v.non_calabi_yau_rays, vec![3]);
        let mut coarse = c3_fan();
        coarse.rays[1] = vec![2, 1, 1];
        let v = validate_cy_fan(&coarse);
        assert!(!v.pass());
        assert_eq!(v.non_unimodular_cones, vec![0]);
    }

    #[test]
    fn relative_y_structure() {
        for f in -3..=3i64 {
            let pair = build_relative_y(&c3_fan(), &c3_brane(f)).unwrap();
            assert_eq!(pair.fan.rays.len(), 4);
            assert_eq!(pair.fan.top_cones.len(), 2);
            // The two 3-cones share the facet {b2, b3}.
            let shared: Vec<usize> = pair.fan.top_cones[0]
                .iter()
                .filter(|r| pair.fan.top_cones[1].contains(r))
                .copied()
                .collect();
            let mut shared = shared;
            shared.sort_unstable();
            assert_eq!(shared, vec![1, 2]);
            // b4 = -b1 - f b2 + (f+1) b3.
            let expect: Vec<i64> = (0..3)
                .map(|k| {
                    -c3_fan().rays[0][k] - f * c3_fan().rays[1][k]
                        + (f + 1) * c3_fan().rays[2][k]
                })
                .collect();
            assert_eq!(pair.fan.rays[3], expect);
        }
        // f = -2 reproduces b4 = -b1 + 2 b2 - b3.
        let pair = build_relative_y(&c3_fan(), &c3_brane(-2)).unwrap();
        let by_relation: Vec<i64> = (0..3)
            .map(|k| -c3_fan().rays[0][k] + 2 * c3_fan().rays[1][k] - c3_fan().rays[2][k])
            .collect();
        assert_eq!(pair.fan.rays[3], by_relation);
        assert_eq!(pair.fan.rays[3], vec![2, -1, 0]);
    }

    #[test]
    fn interior_brane_cone_is_rejected() {
        // Conifold fan; the 2-cone {b2, b3} borders both 3-cones.
        let fan = ToricFan {
            rank: 3,
            u3: vec![0, 0, 1],
            rays: vec![
                vec![0, 0, 1],
                vec![1, 0, 1],
                vec![0, 1, 1],
                vec![1, 1, 1],
            ],
            top_cones: vec![vec![0, 1, 2], vec![1, 2, 3]],
        };
        let brane = BraneSpec {
            b1: 0,
            b2: 1,
            b3: 2,
            framing: 0,
            outer_assumption_asserted: true,
        };
        let err = build_relative_y(&fan, &brane).unwrap_err();
        assert!(matches!(err, FanError::BadBrane(_)), "{err}");
    }

    #[test]
    fn sweeping_divisor_cone_reports_overlap() {
        // Two smooth cones meeting only at the ray (1,0,1); the brane sits
        // on the 2-cone {b2, b3} of the first. With framing -2 the divisor
        // strip sweeps into the second cone; with framing 0 it points away.
        let fan = ToricFan {
            rank: 3,
            u3: vec![0, 0, 1],
            rays: vec![
                vec![0, 0, 1],
                vec![1, 0, 1],
                vec![0, 1, 1],
                vec![1, -1, 1],
                vec![2, 0, 1],
            ],
            top_cones: vec![vec![0, 1, 2], vec![1, 3, 4]],
        };
        assert!(validate_cy_fan(&fan).pass());
        let brane = |f: i64| BraneSpec {
            b1: 0,
            b2: 1,
            b3: 2,
            framing: f,
            outer_assumption_asserted: false,
        };
        assert!(matches!(
            build_relative_y(&fan, &brane(-2)),
            Err(FanError::ConeOverlap(1))
        ));
        assert!(build_relative_y(&fan, &brane(0)).is_ok());
    }

    #[test]
    fn fourfold_counts_and_validation() {
        for f in -3..=3i64 {
            let pair = build_relative_y(&c3_fan(), &c3_brane(f)).unwrap();
            let x4 = build_fourfold(&pair).unwrap();
            assert_eq!(x4.rank, 4);
            assert_eq!(x4.rays.len(), 3 + 2, "R+2 rays");
            assert_eq!(x4.top_cones.len(), 1 + 1, "|Σ(3)|+1 top cones");
            assert!(validate_cy_fan(&x4).pass(), "framing {f}");
            // ⟨u3, b̃_{R+2}⟩ = 1 is forced.
            let t2 = &x4.rays[4];
            assert_eq!(dot(&x4.u3, t2), 1);
        }
    }

    #[test]
    fn transfer_flips_signs() {
        let mut open = BTreeMap::new();
        open.insert(vec![1], Int::from(1));
        open.insert(vec![2], Int::from(-3));
        let closed = transfer_bps(&open, &BTreeMap::new()).unwrap();
        assert_eq!(closed[&vec![1]], Int::from(-1));
        assert_eq!(closed[&vec![2]], Int::from(3));
        let empty = transfer_bps(&BTreeMap::new(), &BTreeMap::new()).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn kp_rows_resummation() {
        let mut closed = BTreeMap::new();
        closed.insert(vec![1], Int::from(5));
        closed.insert(vec![2], Int::from(-7));
        let rows = kp_rows(&closed).unwrap();
        let row1 = rows.iter().find(|r| r.0 == vec![1]).unwrap();
        assert_eq!(row1.2, Rat::from_integer(5.into()));
        let row2 = rows.iter().find(|r| r.0 == vec![2]).unwrap();
        // Ñ = ñ_{2β} + ñ_β/4.
        assert_eq!(row2.2, Rat::new((-23).into(), 4.into()));
        closed.remove(&vec![1]);
        assert!(matches!(
            kp_rows(&closed),
            Err(TransferError::MissingDivisorClass(_))
        ));
    }
}
