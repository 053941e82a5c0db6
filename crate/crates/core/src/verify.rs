//! The acceptance battery: every release-gating property, runnable both as
//! the `verify` subcommand and as the integration test suite.
//!
//! The oracles here are deliberately independent of the production paths
//! they check: characters come from permutation characters orthogonalized
//! over conjugacy classes (no border strips), Schur specializations from
//! truncated-alphabet expansions built by the branching rule (no
//! determinants), and disk invariants from a limit extraction rather than
//! the multiple-cover sum.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::bps::{
    closed_bps_table, disk_n_from_series, disk_specialize, extract_bps, lmov_roundtrip,
    open_bps_table, open_f_table, BpsRecord, BpsTable, OpenClass,
};
use crate::geometry::{builtin_graph, builtin_open_geometry};
use crate::openclosed::{build_fourfold, build_relative_y, kp_rows, transfer_bps, validate_cy_fan};
use crate::partition::{partitions_of, Partition, PartitionTuple};
use crate::symfunc::{CharKey, SpecKey, SymCache};
use crate::vertex::{connected_f, three_point_w_direct, WCache};
use crate::{HalfLaurent, Int, Rat, RatFuncQ};

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub index: usize,
    pub name: String,
    pub pass: bool,
    pub details: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} criterion {:>2}: {} — {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.index,
            self.name,
            self.details
        )
    }
}

// ---------------------------------------------------------------------------
// Character oracle: permutation characters + orthogonalization.

fn permutation_character(lam: &Partition, mu: &Partition) -> i64 {
    // Count functions from the parts of μ (as positions) to the rows of λ
    // filling each row exactly.
    fn rec(parts: &[u32], caps: &mut Vec<u32>) -> i64 {
        let Some((&first, rest)) = parts.split_first() else {
            return i64::from(caps.iter().all(|&c| c == 0));
        };
        let mut total = 0;
        for i in 0..caps.len() {
            if caps[i] >= first {
                caps[i] -= first;
                total += rec(rest, caps);
                caps[i] += first;
            }
        }
        total
    }
    let mut caps: Vec<u32> = lam.parts().to_vec();
    rec(mu.parts(), &mut caps)
}

/// The full character table of the symmetric group on `d` letters, built
/// without the border-strip rule: start from the permutation characters
/// `ψ^λ` and subtract the higher pieces in (dominance-refining) list order.
pub fn brute_character_table(d: u32) -> BTreeMap<(Partition, Partition), i64> {
    let classes = partitions_of(d);
    let z: BTreeMap<Partition, i64> = classes
        .iter()
        .map(|mu| (mu.clone(), mu.z_factor() as i64))
        .collect();
    let inner = |a: &BTreeMap<Partition, i64>, b: &BTreeMap<Partition, i64>| -> Rat {
        classes.iter().fold(Rat::zero(), |acc, mu| {
            acc + Rat::new(Int::from(a[mu] * b[mu]), Int::from(z[mu]))
        })
    };
    let mut chars: Vec<(Partition, BTreeMap<Partition, i64>)> = Vec::new();
    for lam in &classes {
        let mut psi: BTreeMap<Partition, Rat> = classes
            .iter()
            .map(|mu| {
                (
                    mu.clone(),
                    Rat::from_integer(Int::from(permutation_character(lam, mu))),
                )
            })
            .collect();
        for (_, chi) in &chars {
            let psi_int: BTreeMap<Partition, i64> = psi
                .iter()
                .map(|(k, v)| {
                    assert!(v.is_integer());
                    (k.clone(), int_to_i64(&v.to_integer()))
                })
                .collect();
            let coeff = inner(&psi_int, chi);
            assert!(coeff.is_integer(), "multiplicities are integers");
            for mu in &classes {
                let sub = &coeff * Rat::from_integer(Int::from(chi[mu]));
                let entry = psi.get_mut(mu).unwrap();
                *entry -= sub;
            }
        }
        let row: BTreeMap<Partition, i64> = psi
            .iter()
            .map(|(k, v)| {
                assert!(v.is_integer(), "character values are integers");
                (k.clone(), int_to_i64(&v.to_integer()))
            })
            .collect();
        chars.push((lam.clone(), row));
    }
    let mut table = BTreeMap::new();
    for (lam, row) in chars {
        for (mu, v) in row {
            table.insert((lam.clone(), mu), v);
        }
    }
    table
}

fn int_to_i64(v: &Int) -> i64 {
    use num_traits::ToPrimitive;
    v.to_i64().expect("character value fits in 64 bits")
}

// ---------------------------------------------------------------------------
// Truncated-alphabet oracle for the specializations.

/// Exponent of the `i`-th alphabet letter of `q^{shift+ρ}` (1-based) in
/// `x = q^{1/2}`.
fn letter_exp(shift: &Partition, i: usize) -> i64 {
    let s = shift.parts().get(i - 1).copied().unwrap_or(0) as i64;
    2 * s - 2 * i as i64 + 1
}

/// How far a low-order term can climb back up when more letters multiply
/// in: at most `cells` factors, each bounded by the largest letter
/// exponent. Tableau entries may repeat a letter, so the bound is per cell,
/// not per distinct letter.
fn climb_margin(shift: &Partition, cells: u32) -> i64 {
    cells as i64 * letter_exp(shift, 1).max(0)
}

/// `e_k` of the first `letters` alphabet letters, by direct expansion of
/// `Π (1 + z x_i)`, truncated below `cutoff_low`.
pub fn elementary_truncated(
    k: u32,
    shift: &Partition,
    letters: usize,
    cutoff_low: i64,
) -> HalfLaurent {
    let mut coeffs: Vec<HalfLaurent> = vec![HalfLaurent::zero(); k as usize + 1];
    coeffs[0] = HalfLaurent::one();
    for i in 1..=letters {
        let x = HalfLaurent::x_pow(letter_exp(shift, i));
        for j in (1..=k as usize).rev() {
            let add = (&coeffs[j - 1] * &x).truncated(cutoff_low, i64::MAX);
            coeffs[j] = &coeffs[j] + &add;
        }
    }
    coeffs[k as usize].clone()
}

/// Skew Schur polynomial of the first `letters` alphabet letters by the
/// branching rule: peel one letter at a time over horizontal strips. No
/// determinant is involved.
pub fn skew_schur_truncated(
    shape: &Partition,
    inner: &Partition,
    shift: &Partition,
    letters: usize,
    cutoff_low: i64,
) -> HalfLaurent {
    if !shape.contains_shape(inner) {
        return HalfLaurent::zero();
    }
    let states = partitions_between(inner, shape);
    let mut values: BTreeMap<Partition, HalfLaurent> = BTreeMap::new();
    values.insert(inner.clone(), HalfLaurent::one());
    for m in 1..=letters {
        let x_exp = letter_exp(shift, m);
        let mut next: BTreeMap<Partition, HalfLaurent> = BTreeMap::new();
        for target in &states {
            let mut acc = HalfLaurent::zero();
            for (nu, val) in &values {
                if !horizontal_strip(nu, target) {
                    continue;
                }
                let grow = (target.size() - nu.size()) as i64;
                let add = val
                    .shifted(grow * x_exp)
                    .truncated(cutoff_low, i64::MAX);
                acc = &acc + &add;
            }
            if !acc.is_zero() {
                next.insert(target.clone(), acc);
            }
        }
        values = next;
    }
    values.remove(shape).unwrap_or_else(HalfLaurent::zero)
}

fn partitions_between(inner: &Partition, outer: &Partition) -> Vec<Partition> {
    let rows = outer.len();
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(
        row: usize,
        rows: usize,
        inner: &Partition,
        outer: &Partition,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            out.push(Partition::new(cur.clone()));
            return;
        }
        let lo = inner.parts().get(row).copied().unwrap_or(0);
        let hi = outer.parts()[row].min(if row == 0 { u32::MAX } else { cur[row - 1] });
        for v in lo..=hi {
            cur.push(v);
            rec(row + 1, rows, inner, outer, cur, out);
            cur.pop();
        }
    }
    rec(0, rows, inner, outer, &mut cur, &mut out);
    out
}

/// `outer/inner` is a horizontal strip: containment with interlacing
/// `outer_{i+1} ≤ inner_i`.
fn horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    if !outer.contains_shape(inner) {
        return false;
    }
    for i in 1..outer.len() {
        let above = inner.parts().get(i - 1).copied().unwrap_or(0);
        if outer.parts()[i] > above {
            return false;
        }
    }
    true
}

/// Compare a closed-form rational function against a truncated-alphabet
/// Laurent on the window where `letters` letters are provably exact.
fn matches_truncation(
    closed: &RatFuncQ,
    truncated: &HalfLaurent,
    shift: &Partition,
    cells: u32,
    letters: usize,
) -> bool {
    let margin = climb_margin(shift, cells);
    // The first missing letter has exponent 2·0 - 2(letters+1) + 1.
    let first_missing = -(2 * (letters as i64 + 1)) + 1;
    let window_low = first_missing + margin + 1;
    let closed_series = closed.series_descending(window_low);
    let truncated_window = truncated.truncated(window_low, i64::MAX);
    closed_series == truncated_window
}

// ---------------------------------------------------------------------------
// The acceptance criteria.

const SWEEP_DEGREE: u32 = 4;

fn sweep_geometries() -> Vec<String> {
    let mut names = Vec::new();
    for f in -2..=2 {
        names.push(format!("c3-brane({f})"));
    }
    for f in -1..=1 {
        names.push(format!("conifold-brane({f})"));
    }
    names.push("strip-2(0)".to_string());
    names
}

struct SweepRow {
    table: BpsTable,
    fmap: BTreeMap<OpenClass, RatFuncQ>,
}

fn run_sweep(workers: usize) -> Result<BTreeMap<String, SweepRow>, String> {
    let mut out = BTreeMap::new();
    for name in sweep_geometries() {
        let g = builtin_graph(&name).map_err(|e| e.to_string())?;
        let cache = WCache::new();
        let table =
            open_bps_table(&g, SWEEP_DEGREE, &cache, workers).map_err(|e| e.to_string())?;
        let ftable =
            connected_f(&g, SWEEP_DEGREE, &cache, workers).map_err(|e| e.to_string())?;
        let fmap = open_f_table(&g, &ftable).map_err(|e| e.to_string())?;
        out.insert(name, SweepRow { table, fmap });
    }
    Ok(out)
}

fn criterion_1_2_3(workers: usize) -> Vec<CriterionResult> {
    let sweep = match run_sweep(workers) {
        Ok(s) => s,
        Err(e) => {
            return (1..=3)
                .map(|i| CriterionResult {
                    index: i,
                    name: "battery sweep".into(),
                    pass: false,
                    details: e.clone(),
                })
                .collect()
        }
    };
    let mut classes = 0usize;
    let mut integral_finite_fail = Vec::new();
    let mut lt_fail = Vec::new();
    let mut roundtrip_fail = Vec::new();
    for (name, row) in &sweep {
        let records: BTreeMap<OpenClass, Vec<BpsRecord>> = row
            .table
            .rows
            .iter()
            .map(|(c, r)| (c.clone(), r.records.clone()))
            .collect();
        for (class, r) in &row.table.rows {
            classes += 1;
            let v = &r.verdict;
            if !(v.symmetric && v.real && v.finiteness && v.integrality) {
                integral_finite_fail.push(format!("{name} {class}"));
            }
            if !v.lt_membership {
                lt_fail.push(format!("{name} {class}"));
            }
            match lmov_roundtrip(&records, class) {
                Ok(rebuilt) if rebuilt == row.fmap[class] => {}
                _ => roundtrip_fail.push(format!("{name} {class}")),
            }
        }
    }
    let detail = |fails: &[String]| {
        if fails.is_empty() {
            format!(
                "{} classes over {} geometries, total degree ≤ {}",
                classes,
                sweep.len(),
                SWEEP_DEGREE
            )
        } else {
            format!("failed on {}", fails.join(", "))
        }
    };
    vec![
        CriterionResult {
            index: 1,
            name: "integrality and finiteness of tG across the brane battery".into(),
            pass: integral_finite_fail.is_empty(),
            details: detail(&integral_finite_fail),
        },
        CriterionResult {
            index: 2,
            name: "monic-integer-denominator class membership of every G".into(),
            pass: lt_fail.is_empty(),
            details: detail(&lt_fail),
        },
        CriterionResult {
            index: 3,
            name: "multiple-cover round-trip rebuilds every F exactly".into(),
            pass: roundtrip_fail.is_empty(),
            details: detail(&roundtrip_fail),
        },
    ]
}

fn criterion_4(workers: usize) -> CriterionResult {
    let run = || -> Result<String, String> {
        let g = builtin_graph("conifold").map_err(|e| e.to_string())?;
        let cache = WCache::new();
        let table = closed_bps_table(&g, 4, &cache, workers).map_err(|e| e.to_string())?;
        for d in 1..=4i64 {
            let row = &table.rows[&OpenClass::closed(vec![d])];
            if !row.verdict.all_pass() {
                return Err(format!("degree {d}: verdict {:?}", row.verdict));
            }
            let expect = if d == 1 {
                vec![BpsRecord {
                    genus: 0,
                    value: Int::one(),
                }]
            } else {
                vec![]
            };
            if row.records != expect {
                return Err(format!("degree {d}: records {:?}", row.records));
            }
            if row.records.iter().any(|r| r.genus > 6) {
                return Err(format!("degree {d}: unexpected high genus"));
            }
        }
        Ok("n_{0,1} = 1 and every other (g ≤ 6, d ≤ 4) vanishes".into())
    };
    match run() {
        Ok(d) => CriterionResult {
            index: 4,
            name: "resolved conifold closed invariants".into(),
            pass: true,
            details: d,
        },
        Err(e) => CriterionResult {
            index: 4,
            name: "resolved conifold closed invariants".into(),
            pass: false,
            details: e,
        },
    }
}

fn criterion_5(workers: usize) -> CriterionResult {
    let run = || -> Result<String, String> {
        for f in -3..=3i64 {
            let g = builtin_graph(&format!("c3-brane({f})")).map_err(|e| e.to_string())?;
            let cache = WCache::new();
            let table = open_bps_table(&g, 1, &cache, workers).map_err(|e| e.to_string())?;
            let class = OpenClass {
                beta: vec![1],
                windings: PartitionTuple::new(vec![Partition::new(vec![1])]),
            };
            let row = &table.rows[&class];
            let want = Int::from(if f.rem_euclid(2) == 0 { -1 } else { 1 });
            let got = row
                .records
                .iter()
                .find(|r| r.genus == 0)
                .map(|r| r.value.clone())
                .unwrap_or_else(Int::zero);
            if got != want || row.records.len() != 1 {
                return Err(format!("framing {f}: n₀ = {got}, expected {want}"));
            }
        }
        Ok("n₀ = (-1)^{f+1} with |n₀| = 1 for f in -3..=3".into())
    };
    let (pass, details) = match run() {
        Ok(d) => (true, d),
        Err(e) => (false, e),
    };
    CriterionResult {
        index: 5,
        name: "primitive disk invariant of the one-vertex geometry".into(),
        pass,
        details,
    }
}

fn criterion_6() -> CriterionResult {
    let sym = SymCache::new();
    let mut checked = 0usize;
    for d in 1..=6u32 {
        let brute = brute_character_table(d);
        for lam in partitions_of(d) {
            for mu in partitions_of(d) {
                let got = sym
                    .character(&CharKey {
                        irrep: lam.clone(),
                        class: mu.clone(),
                    })
                    .unwrap();
                let want = brute[&(lam.clone(), mu.clone())];
                if got != want {
                    return CriterionResult {
                        index: 6,
                        name: "border-strip characters vs brute-force table".into(),
                        pass: false,
                        details: format!("χ_{lam}({mu}) = {got}, oracle {want}"),
                    };
                }
                checked += 1;
            }
        }
    }
    CriterionResult {
        index: 6,
        name: "border-strip characters vs brute-force table".into(),
        pass: true,
        details: format!("{checked} values for d ≤ 6"),
    }
}

fn criterion_7() -> CriterionResult {
    let sym = SymCache::new();
    let letters = 40usize;
    let mut shifts = Vec::new();
    for s in 0..=4u32 {
        shifts.extend(partitions_of(s));
    }
    let cutoff_low = -250;
    let mut checked = 0usize;
    for shift in &shifts {
        for k in 0..=5u32 {
            let closed = sym.elementary(k, shift);
            let trunc = elementary_truncated(k, shift, letters, cutoff_low);
            if !matches_truncation(&closed, &trunc, shift, k, letters) {
                return CriterionResult {
                    index: 7,
                    name: "specializations vs truncated alphabet".into(),
                    pass: false,
                    details: format!("e_{k} at shift {shift}"),
                };
            }
            checked += 1;
        }
        for msize in 0..=4u32 {
            for mu in partitions_of(msize) {
                for esize in 0..=msize {
                    for eta in partitions_of(esize) {
                        if !mu.contains_shape(&eta) {
                            continue;
                        }
                        let closed = sym.skew_schur(&SpecKey {
                            shape: mu.clone(),
                            inner: eta.clone(),
                            shift: shift.clone(),
                        });
                        let trunc =
                            skew_schur_truncated(&mu, &eta, shift, letters, cutoff_low);
                        let cells = mu.size() - eta.size();
                        if !matches_truncation(&closed, &trunc, shift, cells, letters) {
                            return CriterionResult {
                                index: 7,
                                name: "specializations vs truncated alphabet".into(),
                                pass: false,
                                details: format!("s_{{{mu}/{eta}}} at shift {shift}"),
                            };
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    CriterionResult {
        index: 7,
        name: "specializations vs truncated alphabet".into(),
        pass: true,
        details: format!("{checked} comparisons, 40 letters, |shape|,|shift| ≤ 4"),
    }
}

fn criterion_8() -> CriterionResult {
    let sym = SymCache::new();
    let mut shapes = Vec::new();
    for d in 0..=4u32 {
        shapes.extend(partitions_of(d));
    }
    let mut values: BTreeMap<[Partition; 3], RatFuncQ> = BTreeMap::new();
    for a in &shapes {
        for b in &shapes {
            for c in &shapes {
                values.insert(
                    [a.clone(), b.clone(), c.clone()],
                    three_point_w_direct(&sym, a, b, c),
                );
            }
        }
    }
    let mut checked = 0usize;
    for a in &shapes {
        for b in &shapes {
            for c in &shapes {
                let w = &values[&[a.clone(), b.clone(), c.clone()]];
                let rot = &values[&[b.clone(), c.clone(), a.clone()]];
                if w != rot {
                    return CriterionResult {
                        index: 8,
                        name: "vertex weight symmetry suite".into(),
                        pass: false,
                        details: format!("cyclic failure at ({a},{b},{c})"),
                    };
                }
                let transposed = &values[&[a.conjugate(), b.conjugate(), c.conjugate()]];
                let mut inverted = w.invert_q();
                if (a.size() + b.size() + c.size()) % 2 == 1 {
                    inverted = -&inverted;
                }
                if *transposed != inverted {
                    return CriterionResult {
                        index: 8,
                        name: "vertex weight symmetry suite".into(),
                        pass: false,
                        details: format!("transpose failure at ({a},{b},{c})"),
                    };
                }
                checked += 1;
            }
        }
    }
    CriterionResult {
        index: 8,
        name: "vertex weight symmetry suite".into(),
        pass: true,
        details: format!("{checked} triples with |λ| ≤ 4"),
    }
}

fn criterion_9() -> CriterionResult {
    let run = || -> Result<String, String> {
        for f in -3..=3i64 {
            let (_, fan, brane) = builtin_open_geometry(&format!("c3-brane({f})"))
                .ok_or("missing builtin fan data")?;
            let pair = build_relative_y(&fan, &brane).map_err(|e| e.to_string())?;
            let x4 = build_fourfold(&pair).map_err(|e| e.to_string())?;
            let r = fan.rays.len();
            if x4.rays.len() != r + 2 {
                return Err(format!("framing {f}: ray count {}", x4.rays.len()));
            }
            if x4.top_cones.len() != fan.top_cones.len() + 1 {
                return Err(format!("framing {f}: cone count {}", x4.top_cones.len()));
            }
            let verdict = validate_cy_fan(&x4);
            if !verdict.pass() {
                return Err(format!("framing {f}: {verdict:?}"));
            }
            if f == -2 {
                let b4: Vec<i64> = (0..3)
                    .map(|k| -fan.rays[0][k] + 2 * fan.rays[1][k] - fan.rays[2][k])
                    .collect();
                if pair.fan.rays[3] != b4 {
                    return Err(format!("framing -2: divisor ray {:?}", pair.fan.rays[3]));
                }
            }
        }
        Ok("R+2 rays, |Σ(3)|+1 cones, smooth Calabi-Yau for f in -3..=3".into())
    };
    let (pass, details) = match run() {
        Ok(d) => (true, d),
        Err(e) => (false, e),
    };
    CriterionResult {
        index: 9,
        name: "divisor and fourfold fan construction".into(),
        pass,
        details,
    }
}

fn criterion_10(workers: usize) -> CriterionResult {
    let run = || -> Result<String, String> {
        let mut names = Vec::new();
        for f in -2..=2 {
            names.push(format!("c3-brane({f})"));
        }
        for f in -1..=1 {
            names.push(format!("conifold-brane({f})"));
        }
        let mut checked = 0usize;
        for name in names {
            let g = builtin_graph(&name).map_err(|e| e.to_string())?;
            let cache = WCache::new();
            let table = open_bps_table(&g, 3, &cache, workers).map_err(|e| e.to_string())?;
            // Disk rows: single brane, one-part windings.
            let mut open_rows: BTreeMap<Vec<i64>, Int> = BTreeMap::new();
            let mut windings: BTreeMap<Vec<i64>, PartitionTuple> = BTreeMap::new();
            for (class, row) in &table.rows {
                if class.windings.entry(0).len() != 1 {
                    continue;
                }
                let n0 = row
                    .records
                    .iter()
                    .find(|r| r.genus == 0)
                    .map(|r| r.value.clone())
                    .unwrap_or_else(Int::zero);
                open_rows.insert(class.beta.clone(), n0);
                windings.insert(class.beta.clone(), class.windings.clone());
            }
            let closed = transfer_bps(&open_rows, &windings).map_err(|e| e.to_string())?;
            let resummed = kp_rows(&closed).map_err(|e| e.to_string())?;
            for (beta, _, kp_value) in &resummed {
                let class = OpenClass {
                    beta: beta.clone(),
                    windings: windings[beta].clone(),
                };
                let (n_open, _) =
                    disk_specialize(&table, &class).map_err(|e| e.to_string())?;
                if n_open != *kp_value {
                    return Err(format!(
                        "{name} {class}: open N = {n_open}, resummed transfer = {kp_value}"
                    ));
                }
                checked += 1;
            }
        }
        Ok(format!("{checked} disk classes matched exactly"))
    };
    let (pass, details) = match run() {
        Ok(d) => (true, d),
        Err(e) => (false, e),
    };
    CriterionResult {
        index: 10,
        name: "open/closed correspondence of disk invariants".into(),
        pass,
        details,
    }
}

/// The full acceptance battery, one result per criterion.
pub fn acceptance_battery(workers: usize) -> Vec<CriterionResult> {
    let mut results = criterion_1_2_3(workers);
    results.push(criterion_4(workers));
    results.push(criterion_5(workers));
    results.push(criterion_6());
    results.push(criterion_7());
    results.push(criterion_8());
    results.push(criterion_9());
    results.push(criterion_10(workers));
    results
}

/// Geometry-scoped battery for the `verify` subcommand: verdicts, the
/// multiple-cover round-trip, disk consistency where applicable, and a
/// determinism probe across worker counts.
pub fn verify_geometry(
    name: &str,
    max_degree: u32,
    workers: usize,
) -> Result<Vec<CriterionResult>, String> {
    let g = builtin_graph(name).map_err(|e| e.to_string())?;
    verify_graph(&g, max_degree, workers)
}

pub fn verify_graph(
    g: &crate::vertex::FtcyGraph,
    max_degree: u32,
    workers: usize,
) -> Result<Vec<CriterionResult>, String> {
    let mut results = Vec::new();
    let cache = WCache::new();
    if g.brane_count() == 0 {
        let table = closed_bps_table(g, max_degree, &cache, workers).map_err(|e| e.to_string())?;
        let pass = table.all_pass();
        results.push(CriterionResult {
            index: 1,
            name: "closed invariants integral, finite, in the monic class".into(),
            pass,
            details: format!("{} classes", table.rows.len()),
        });
        // Determinism across worker counts.
        let again = closed_bps_table(g, max_degree, &WCache::new(), workers.max(2) + 1)
            .map_err(|e| e.to_string())?;
        results.push(CriterionResult {
            index: 2,
            name: "worker-count independence".into(),
            pass: again == table,
            details: "byte-identical tables".into(),
        });
        return Ok(results);
    }
    let table = open_bps_table(g, max_degree, &cache, workers).map_err(|e| e.to_string())?;
    let ftable = connected_f(g, max_degree, &cache, workers).map_err(|e| e.to_string())?;
    let fmap = open_f_table(g, &ftable).map_err(|e| e.to_string())?;
    results.push(CriterionResult {
        index: 1,
        name: "open invariants integral, finite, in the monic class".into(),
        pass: table.all_pass(),
        details: format!("{} classes", table.rows.len()),
    });
    let records: BTreeMap<OpenClass, Vec<BpsRecord>> = table
        .rows
        .iter()
        .map(|(c, r)| (c.clone(), r.records.clone()))
        .collect();
    let mut rt = true;
    for (class, f) in &fmap {
        match lmov_roundtrip(&records, class) {
            Ok(rebuilt) if rebuilt == *f => {}
            _ => {
                rt = false;
                break;
            }
        }
    }
    results.push(CriterionResult {
        index: 2,
        name: "multiple-cover round-trip".into(),
        pass: rt,
        details: format!("{} classes", fmap.len()),
    });
    if g.brane_count() == 1 {
        let mut pass = true;
        let mut n_checked = 0usize;
        for (class, row) in &table.rows {
            if class.windings.entry(0).len() != 1 {
                continue;
            }
            let d = class.windings.entry(0).size();
            let lhs = disk_specialize(&table, class).map(|p| p.0);
            let rhs = disk_n_from_series(&row.f, d);
            match (lhs, rhs) {
                (Ok(a), Some(b)) if a == b => n_checked += 1,
                _ => {
                    pass = false;
                    break;
                }
            }
        }
        results.push(CriterionResult {
            index: 3,
            name: "disk multiple-cover sum vs limit extraction".into(),
            pass,
            details: format!("{n_checked} disk classes"),
        });
    }
    let again = open_bps_table(g, max_degree, &WCache::new(), workers.max(2) + 1)
        .map_err(|e| e.to_string())?;
    results.push(CriterionResult {
        index: results.len() + 1,
        name: "worker-count independence".into(),
        pass: again == table,
        details: "byte-identical tables".into(),
    });
    // The zero function extracts an empty record set with all flags true.
    let (zrecs, zv) = extract_bps(&RatFuncQ::zero());
    results.push(CriterionResult {
        index: results.len() + 1,
        name: "zero-function extraction".into(),
        pass: zrecs.is_empty() && zv.all_pass(),
        details: "empty records, all flags true".into(),
    });
    Ok(results)
}
