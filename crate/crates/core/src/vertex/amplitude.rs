//! The vertex gluing pipeline: three-partition vertex weights, disconnected
//! amplitudes over edge-partition assignments, the graded logarithm down to
//! connected generating functions, and open Gromov-Witten series per
//! relative class.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use super::graph::{fiber_enumerate, EdgeEnd, EffClass, FiberError, FtcyGraph};
use crate::partition::{partitions_of, Partition, PartitionTuple};
use crate::symfunc::{CharKey, SpecKey, SymCache};
use crate::{GaussRat, HalfLaurent, Rat, RatFuncQ};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VertexError {
    #[error("invalid class: {0}")]
    InvalidClass(String),
    #[error(transparent)]
    Fiber(#[from] FiberError),
    #[error("cutoff too small: class {0} outside the computed table")]
    CutoffTooSmall(String),
}

/// Cache of vertex weights, keyed by the lexicographically least cyclic
/// rotation of the partition triple; rotations of a triple share one entry.
#[derive(Default)]
pub struct WCache {
    map: RwLock<HashMap<[Partition; 3], RatFuncQ>>,
    pub sym: SymCache,
    disabled: bool,
}

impl WCache {
    pub fn new() -> Self {
        WCache::default()
    }

    pub fn uncached() -> Self {
        WCache {
            map: RwLock::new(HashMap::new()),
            sym: SymCache::uncached(),
            disabled: true,
        }
    }

    /// The vertex weight of a partition triple.
    pub fn w(&self, l1: &Partition, l2: &Partition, l3: &Partition) -> RatFuncQ {
        let key = cyclic_least([l1.clone(), l2.clone(), l3.clone()]);
        if !self.disabled {
            if let Some(v) = self.map.read().unwrap().get(&key) {
                return v.clone();
            }
        }
        let v = three_point_w_direct(&self.sym, &key[0], &key[1], &key[2]);
        if !self.disabled {
            self.map.write().unwrap().insert(key, v.clone());
        }
        v
    }
}

fn cyclic_least(t: [Partition; 3]) -> [Partition; 3] {
    let r1 = [t[1].clone(), t[2].clone(), t[0].clone()];
    let r2 = [t[2].clone(), t[0].clone(), t[1].clone()];
    let mut best = t;
    for cand in [r1, r2] {
        if cand < best {
            best = cand;
        }
    }
    best
}

/// Direct evaluation of the vertex weight
/// `q^{κ(λ³)/2} s_{λ²}(q^ρ) Σ_η s_{λ¹/η}(q^{(λ²)^t+ρ}) s_{(λ³)^t/η}(q^{λ²+ρ})`,
/// at the argument order given (no cyclic canonicalization), so symmetry
/// checks exercise the formula honestly.
pub fn three_point_w_direct(
    sym: &SymCache,
    l1: &Partition,
    l2: &Partition,
    l3: &Partition,
) -> RatFuncQ {
    let l2t = l2.conjugate();
    let l3t = l3.conjugate();
    let prefactor = RatFuncQ::x_pow(l3.kappa());
    let s2 = sym.skew_schur(&SpecKey::straight(l2.clone(), Partition::empty()));
    // Only η inside both λ¹ and (λ³)^t contribute.
    let mmax = l1.size().min(l3t.size());
    let mut acc = RatFuncQ::zero();
    for m in 0..=mmax {
        for eta in partitions_of(m) {
            if !l1.contains_shape(&eta) || !l3t.contains_shape(&eta) {
                continue;
            }
            let a = sym.skew_schur(&SpecKey {
                shape: l1.clone(),
                inner: eta.clone(),
                shift: l2t.clone(),
            });
            if a.is_zero() {
                continue;
            }
            let b = sym.skew_schur(&SpecKey {
                shape: l3t.clone(),
                inner: eta,
                shift: l2.clone(),
            });
            if b.is_zero() {
                continue;
            }
            acc = &acc + &(&a * &b);
        }
    }
    &(&prefactor * &s2) * &acc
}

/// The disconnected amplitude of an effective class: a sum over all
/// assignments of one partition per compact edge (`|λ(e)| = d(ē)`, with the
/// reverse orientation reading the conjugate) of edge sign and framing
/// factors, vertex weights in slot order, and winding characters at branes.
pub fn z_amplitude(
    g: &FtcyGraph,
    class: &EffClass,
    cache: &WCache,
) -> Result<RatFuncQ, VertexError> {
    if !class.valid_for(g) {
        return Err(VertexError::InvalidClass(format!(
            "windings {} do not match degrees of {}",
            class.windings,
            render_degrees(&class.degrees)
        )));
    }
    if class.is_zero() {
        return Err(VertexError::InvalidClass(
            "the zero class is not effective".into(),
        ));
    }
    let compact = g.compact_edges();
    let choices: Vec<Vec<Partition>> = compact
        .iter()
        .map(|&e| partitions_of(class.degree(e)))
        .collect();

    let mut acc = RatFuncQ::zero();
    let mut idx = vec![0usize; compact.len()];
    'outer: loop {
        let assign: BTreeMap<usize, &Partition> = compact
            .iter()
            .enumerate()
            .map(|(k, &e)| (e, &choices[k][idx[k]]))
            .collect();
        if let Some(term) = assignment_term(g, class, &assign, cache) {
            acc = &acc + &term;
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                break 'outer;
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if idx.is_empty() {
            break;
        }
    }
    Ok(acc)
}

fn render_degrees(d: &BTreeMap<usize, u32>) -> String {
    let parts: Vec<String> = d.iter().map(|(e, v)| format!("e{e}:{v}")).collect();
    format!("({})", parts.join(","))
}

fn assignment_term(
    g: &FtcyGraph,
    class: &EffClass,
    assign: &BTreeMap<usize, &Partition>,
    cache: &WCache,
) -> Option<RatFuncQ> {
    let mut coeff = GaussRat::one();
    let mut exponent = 0i64;

    // Edge factors (-1)^{(n+1)d} q^{κ(λ(e)) n / 2} in the stored orientation.
    for (&e, lam) in assign {
        let d = class.degree(e) as i64;
        let n = g.edges[e].n;
        if ((n + 1) * d).rem_euclid(2) == 1 {
            coeff = -coeff;
        }
        exponent += lam.kappa() * n;
    }

    // Brane factors χ_{λ(-e_i)}(μ^i)/z_{μ^i} · (√-1)^{ℓ(μ^i)} (-1)^{|μ^i|}.
    for (i, b) in g.branes.iter().enumerate() {
        let mu = class.windings.entry(i);
        let lam_in = assign[&b.edge].conjugate();
        let chi = cache
            .sym
            .character(&CharKey {
                irrep: lam_in,
                class: mu.clone(),
            })
            .expect("sizes agree for valid classes");
        if chi == 0 {
            return None;
        }
        let z = Rat::from_integer(BigInt::from(mu.z_factor()));
        coeff = coeff
            * GaussRat::i_pow(mu.len() as i64)
            * GaussRat::from_rat(Rat::from_integer(BigInt::from(chi)) / z);
        if mu.size() % 2 == 1 {
            coeff = -coeff;
        }
    }

    // Vertex weights in counterclockwise slot order, edges oriented outward.
    let mut term = RatFuncQ::from(HalfLaurent::monomial(exponent, coeff));
    for (v, slots) in g.vertex_slots.iter().enumerate() {
        let triple: Vec<Partition> = slots
            .iter()
            .map(|&e| {
                let ed = &g.edges[e];
                if !ed.compact {
                    return Partition::empty();
                }
                let outgoing = ed.from == EdgeEnd::Vertex(v);
                if outgoing {
                    (*assign[&e]).clone()
                } else {
                    assign[&e].conjugate()
                }
            })
            .collect();
        let w = cache.w(&triple[0], &triple[1], &triple[2]);
        if w.is_zero() {
            return None;
        }
        term = &term * &w;
    }
    Some(term)
}

/// All nonzero effective classes with total edge degree ≤ `max_total`:
/// every compatible winding tuple is listed for every degree vector.
pub fn enumerate_classes(g: &FtcyGraph, max_total: u32) -> Vec<EffClass> {
    let compact = g.compact_edges();
    let brane_edges = g.brane_edges();
    let mut out = Vec::new();
    let mut degrees: Vec<u32> = vec![0; compact.len()];
    enumerate_degrees(&compact, 0, max_total, &mut degrees, &mut |dmap| {
        let winding_choices: Vec<Vec<Partition>> = brane_edges
            .iter()
            .map(|e| partitions_of(dmap.get(e).copied().unwrap_or(0)))
            .collect();
        let mut pick = vec![0usize; winding_choices.len()];
        loop {
            let tuple = PartitionTuple::new(
                pick.iter()
                    .zip(winding_choices.iter())
                    .map(|(&i, c)| c[i].clone())
                    .collect(),
            );
            out.push(EffClass {
                degrees: dmap.clone(),
                windings: tuple,
            });
            let mut k = 0;
            loop {
                if k == pick.len() {
                    return;
                }
                pick[k] += 1;
                if pick[k] < winding_choices[k].len() {
                    break;
                }
                pick[k] = 0;
                k += 1;
            }
            if pick.is_empty() {
                return;
            }
        }
    });
    out.retain(|c| !c.is_zero());
    out.sort();
    out
}

fn enumerate_degrees(
    edges: &[usize],
    pos: usize,
    budget: u32,
    cur: &mut Vec<u32>,
    f: &mut impl FnMut(&BTreeMap<usize, u32>),
) {
    if pos == edges.len() {
        let dmap: BTreeMap<usize, u32> =
            edges.iter().copied().zip(cur.iter().copied()).collect();
        f(&dmap);
        return;
    }
    for d in 0..=budget {
        cur[pos] = d;
        enumerate_degrees(edges, pos + 1, budget - d, cur, f);
    }
    cur[pos] = 0;
}

pub type ClassSeries = BTreeMap<EffClass, RatFuncQ>;

/// Disconnected amplitudes for every class up to the total-degree cutoff,
/// optionally computed on several worker threads. Exact addition makes the
/// result independent of the chunking.
pub fn z_table(
    g: &FtcyGraph,
    max_total: u32,
    cache: &WCache,
    workers: usize,
) -> Result<ClassSeries, VertexError> {
    let classes = enumerate_classes(g, max_total);
    let workers = workers.max(1).min(classes.len().max(1));
    if workers <= 1 {
        let mut out = BTreeMap::new();
        for c in classes {
            let v = z_amplitude(g, &c, cache)?;
            out.insert(c, v);
        }
        return Ok(out);
    }
    let chunk = classes.len().div_ceil(workers);
    let results: Vec<Result<Vec<(EffClass, RatFuncQ)>, VertexError>> =
        std::thread::scope(|scope| {
            let handles: Vec<_> = classes
                .chunks(chunk)
                .map(|cs| {
                    scope.spawn(move || {
                        cs.iter()
                            .map(|c| z_amplitude(g, c, cache).map(|v| (c.clone(), v)))
                            .collect()
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
    let mut out = BTreeMap::new();
    for r in results {
        for (c, v) in r? {
            out.insert(c, v);
        }
    }
    Ok(out)
}

fn convolve(a: &ClassSeries, b: &ClassSeries, max_total: u32) -> ClassSeries {
    let mut out: ClassSeries = BTreeMap::new();
    for (ca, va) in a {
        if va.is_zero() {
            continue;
        }
        for (cb, vb) in b {
            if vb.is_zero() {
                continue;
            }
            if ca.total_degree() + cb.total_degree() > max_total {
                continue;
            }
            let key = ca.plus(cb);
            let prod = va * vb;
            out.entry(key)
                .and_modify(|acc| *acc = &*acc + &prod)
                .or_insert(prod);
        }
    }
    out
}

fn scaled_series(a: &ClassSeries, c: &Rat) -> ClassSeries {
    a.iter()
        .map(|(k, v)| {
            (
                k.clone(),
                v * &RatFuncQ::constant(GaussRat::from_rat(c.clone())),
            )
        })
        .collect()
}

fn add_into(acc: &mut ClassSeries, other: &ClassSeries) {
    for (k, v) in other {
        acc.entry(k.clone())
            .and_modify(|a| *a = &*a + v)
            .or_insert_with(|| v.clone());
    }
}

/// Graded logarithm `F = log(1 + A) = Σ_{k≥1} (-1)^{k+1} A^k / k` in the
/// class monoid algebra; `A` is supported on nonzero classes, so the series
/// terminates at the cutoff.
pub fn log_table(z: &ClassSeries, max_total: u32) -> ClassSeries {
    let mut f: ClassSeries = BTreeMap::new();
    let mut power = z.clone();
    let mut k = 1u32;
    loop {
        let coeff = Rat::new(
            BigInt::from(if k % 2 == 1 { 1 } else { -1 }),
            BigInt::from(k),
        );
        add_into(&mut f, &scaled_series(&power, &coeff));
        k += 1;
        if k > max_total {
            break;
        }
        power = convolve(&power, z, max_total);
        if power.is_empty() {
            break;
        }
    }
    f.retain(|_, v| !v.is_zero());
    f
}

/// Graded exponential minus one: `exp(F) - 1 = Σ_{k≥1} F^k / k!`. Test
/// oracle inverting [`log_table`].
pub fn exp_table(f: &ClassSeries, max_total: u32) -> ClassSeries {
    let mut z: ClassSeries = BTreeMap::new();
    let mut power = f.clone();
    let mut fact = BigInt::from(1);
    let mut k = 1u32;
    loop {
        let coeff = Rat::new(BigInt::from(1), fact.clone());
        add_into(&mut z, &scaled_series(&power, &coeff));
        k += 1;
        if k > max_total {
            break;
        }
        fact *= BigInt::from(k);
        power = convolve(&power, f, max_total);
        if power.is_empty() {
            break;
        }
    }
    z.retain(|_, v| !v.is_zero());
    z
}

/// Connected generating functions for every class up to the cutoff.
pub fn connected_f(
    g: &FtcyGraph,
    max_total: u32,
    cache: &WCache,
    workers: usize,
) -> Result<ClassSeries, VertexError> {
    let z = z_table(g, max_total, cache, workers)?;
    Ok(log_table(&z, max_total))
}

/// The open Gromov-Witten generating function of a relative class:
/// `(-1)^{|μ⃗|-ℓ(μ⃗)} Σ_{d⃗: π(d⃗)=β} F_{d⃗,μ⃗}`. The table must cover the whole
/// fiber; a class outside it is a cutoff error, not a zero.
pub fn open_gw_from_table(
    g: &FtcyGraph,
    beta: &[i64],
    windings: &PartitionTuple,
    ftable: &ClassSeries,
) -> Result<RatFuncQ, VertexError> {
    if windings.width() != g.brane_count() {
        return Err(VertexError::InvalidClass(format!(
            "winding tuple has width {}, expected {}",
            windings.width(),
            g.brane_count()
        )));
    }
    for (i, mu) in windings.entries().iter().enumerate() {
        let want = beta[g.homology_rank + i];
        if mu.size() as i64 != want {
            return Err(VertexError::InvalidClass(format!(
                "|μ^{}| = {} but the class has disk degree {}",
                i + 1,
                mu.size(),
                want
            )));
        }
    }
    let fibers = fiber_enumerate(g, beta)?;
    let mut acc = RatFuncQ::zero();
    for degrees in fibers {
        let class = EffClass {
            degrees,
            windings: windings.clone(),
        };
        match ftable.get(&class) {
            Some(v) => acc = &acc + v,
            None => {
                return Err(VertexError::CutoffTooSmall(format!(
                    "{} {}",
                    render_degrees(&class.degrees),
                    class.windings
                )))
            }
        }
    }
    let sign_exp = windings.size() as i64 - windings.length() as i64;
    if sign_exp.rem_euclid(2) == 1 {
        acc = -&acc;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::builtin_graph;
    use crate::qalg::bracket;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn w_trivial_examples() {
        let cache = WCache::new();
        let e = Partition::empty();
        assert!(cache.w(&e, &e, &e).is_one());
        assert_eq!(cache.w(&p(&[1]), &e, &e), bracket(1).inv());
    }

    #[test]
    fn w_cyclic_symmetry_small() {
        let sym = SymCache::new();
        for d1 in 0..=2u32 {
            for d2 in 0..=2u32 {
                for d3 in 0..=2u32 {
                    for a in partitions_of(d1) {
                        for b in partitions_of(d2) {
                            for c in partitions_of(d3) {
                                let w1 = three_point_w_direct(&sym, &a, &b, &c);
                                let w2 = three_point_w_direct(&sym, &b, &c, &a);
                                assert_eq!(w1, w2, "cyclic failure at ({a},{b},{c})");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn w_transpose_inversion_small() {
        let sym = SymCache::new();
        for d1 in 0..=2u32 {
            for d3 in 0..=2u32 {
                for a in partitions_of(d1) {
                    for c in partitions_of(d3) {
                        for b in partitions_of(1) {
                            let lhs = three_point_w_direct(
                                &sym,
                                &a.conjugate(),
                                &b.conjugate(),
                                &c.conjugate(),
                            );
                            let rhs = three_point_w_direct(&sym, &a, &b, &c).invert_q();
                            let total = a.size() + b.size() + c.size();
                            let rhs = if total % 2 == 1 { -&rhs } else { rhs };
                            assert_eq!(lhs, rhs, "transpose failure at ({a},{b},{c})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cache_and_direct_agree_on_rotations() {
        let cache = WCache::new();
        let tri = [p(&[2]), p(&[1, 1]), p(&[1])];
        for r in 0..3usize {
            let (a, b, c) = (&tri[r % 3], &tri[(r + 1) % 3], &tri[(r + 2) % 3]);
            assert_eq!(cache.w(a, b, c), three_point_w_direct(&cache.sym, a, b, c));
        }
    }

    fn single_class(g: &FtcyGraph, degrees: &[(usize, u32)], windings: PartitionTuple) -> EffClass {
        let mut map: BTreeMap<usize, u32> =
            g.compact_edges().into_iter().map(|e| (e, 0)).collect();
        for &(e, d) in degrees {
            map.insert(e, d);
        }
        EffClass {
            degrees: map,
            windings,
        }
    }

    #[test]
    fn c3_one_brane_disk_amplitude() {
        // Single vertex, one brane with framing f: the degree-1 amplitude is
        // (-1)^f √-1 / [1].
        for f in -3..=3i64 {
            let g = builtin_graph(&format!("c3-brane({f})")).unwrap();
            let brane_edge = g.branes[0].edge;
            let class = single_class(
                &g,
                &[(brane_edge, 1)],
                PartitionTuple::new(vec![p(&[1])]),
            );
            let cache = WCache::new();
            let z = z_amplitude(&g, &class, &cache).unwrap();
            let expect = crate::qalg::scale(
                &bracket(1).inv(),
                &if f.rem_euclid(2) == 0 {
                    GaussRat::i()
                } else {
                    -GaussRat::i()
                },
            );
            assert_eq!(z, expect, "framing {f}");
        }
    }

    #[test]
    fn conifold_degree_one_amplitude() {
        let g = builtin_graph("conifold").unwrap();
        let interior = g.interior_edges()[0];
        let class = single_class(&g, &[(interior, 1)], PartitionTuple::new(vec![]));
        let cache = WCache::new();
        let z = z_amplitude(&g, &class, &cache).unwrap();
        assert_eq!(z, -&bracket(1).inv().pow(2));
    }

    #[test]
    fn conifold_amplitudes_follow_the_two_vertex_product() {
        // Closed two-vertex chain with n = 0: the degree-d amplitude is
        // (-1)^d Σ_{λ⊢d} W(λ,∅,∅) W(λ^t,∅,∅).
        let g = builtin_graph("conifold").unwrap();
        let interior = g.interior_edges()[0];
        let cache = WCache::new();
        let e = Partition::empty();
        for d in 1..=4u32 {
            let class = single_class(&g, &[(interior, d)], PartitionTuple::new(vec![]));
            let z = z_amplitude(&g, &class, &cache).unwrap();
            let mut expect = RatFuncQ::zero();
            for lam in partitions_of(d) {
                expect = &expect + &(&cache.w(&lam, &e, &e) * &cache.w(&lam.conjugate(), &e, &e));
            }
            if d % 2 == 1 {
                expect = -&expect;
            }
            assert_eq!(z, expect, "degree {d}");
        }
    }

    #[test]
    fn vertex_weight_matches_truncated_series_oracle() {
        // W((1),(1),∅) = s_{(1)}(q^ρ) · s_{(1)}(q^{(1)+ρ}): rebuild both
        // specializations from 40 truncated alphabet letters and compare on
        // the window where the truncation is exact.
        let sym = SymCache::new();
        let one = p(&[1]);
        let w = three_point_w_direct(&sym, &one, &one, &Partition::empty());
        let letters = 40;
        let cutoff = -250;
        let empty = Partition::empty();
        let t1 = crate::verify::skew_schur_truncated(&one, &empty, &empty, letters, cutoff);
        let t2 = crate::verify::skew_schur_truncated(&one, &empty, &one, letters, cutoff);
        let product = (&t1 * &t2).truncated(-78, i64::MAX);
        assert_eq!(w.series_descending(-78), product);
    }

    #[test]
    fn zero_degree_nonzero_winding_is_invalid() {
        let g = builtin_graph("c3-brane(0)").unwrap();
        let class = single_class(&g, &[], PartitionTuple::new(vec![p(&[1])]));
        let cache = WCache::new();
        assert!(matches!(
            z_amplitude(&g, &class, &cache),
            Err(VertexError::InvalidClass(_))
        ));
    }

    #[test]
    fn orientation_flip_leaves_amplitude_unchanged() {
        let g = builtin_graph("strip-2(1)").unwrap();
        let mut flipped = g.clone();
        let e = flipped.interior_edges()[0];
        let (from, to) = (flipped.edges[e].from, flipped.edges[e].to);
        flipped.edges[e].from = to;
        flipped.edges[e].to = from;
        flipped.edges[e].n = -flipped.edges[e].n;
        flipped.validate().unwrap();
        let cache = WCache::new();
        let cache2 = WCache::new();
        for total in 1..=3u32 {
            let za = z_table(&g, total, &cache, 1).unwrap();
            let zb = z_table(&flipped, total, &cache2, 1).unwrap();
            assert_eq!(za, zb, "total degree {total}");
        }
    }

    #[test]
    fn log_table_matches_hand_expansion_and_exp_inverts() {
        let g = builtin_graph("conifold").unwrap();
        let cache = WCache::new();
        let z = z_table(&g, 4, &cache, 1).unwrap();
        let f = log_table(&z, 4);
        let interior = g.interior_edges()[0];
        let c1 = single_class(&g, &[(interior, 1)], PartitionTuple::new(vec![]));
        let c2 = single_class(&g, &[(interior, 2)], PartitionTuple::new(vec![]));
        // Minimal class: F = Z. Doubled class: F = Z₂ - Z₁²/2.
        assert_eq!(f[&c1], z[&c1]);
        let half = RatFuncQ::constant(GaussRat::from_rat(Rat::new(1.into(), 2.into())));
        let expect2 = &z[&c2] - &(&half * &z[&c1].pow(2));
        assert_eq!(f[&c2], expect2);
        // exp(F) reproduces Z exactly.
        let back = exp_table(&f, 4);
        assert_eq!(back, z);
    }

    #[test]
    fn open_gw_c3_disk() {
        for f in -2..=2i64 {
            let g = builtin_graph(&format!("c3-brane({f})")).unwrap();
            let cache = WCache::new();
            let ftab = connected_f(&g, 2, &cache, 1).unwrap();
            let windings = PartitionTuple::new(vec![p(&[1])]);
            let got = open_gw_from_table(&g, &[1], &windings, &ftab).unwrap();
            let expect = crate::qalg::scale(
                &bracket(1).inv(),
                &if f.rem_euclid(2) == 0 {
                    GaussRat::i()
                } else {
                    -GaussRat::i()
                },
            );
            assert_eq!(got, expect, "framing {f}");
        }
    }

    #[test]
    fn parallel_z_table_is_deterministic() {
        let g = builtin_graph("conifold-brane(1)").unwrap();
        let cache = WCache::new();
        let a = z_table(&g, 3, &cache, 1).unwrap();
        let b = z_table(&g, 3, &WCache::new(), 4).unwrap();
        assert_eq!(a, b);
    }
}
