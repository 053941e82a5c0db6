//! The trivalent graph encoding a toric Calabi-Yau 3-fold with framed outer
//! branes: edges carry normal-bundle degrees, brane edges carry framings,
//! and a linear projection sends edge degrees to curve classes.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::partition::PartitionTuple;
use crate::ratmat;
use crate::Rat;

pub type VertexId = usize;
pub type EdgeId = usize;

/// One endpoint of an edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeEnd {
    Vertex(VertexId),
    /// Non-compact direction (an outer leg of the toric skeleton).
    Open,
    /// The univalent end of a brane edge.
    Brane,
}

/// An edge with a designated orientation `from → to`. The degree assignment
/// `n` is stored for that orientation; the reverse carries `-n`. Brane edges
/// are oriented toward their brane end, so `n` equals the framing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: EdgeEnd,
    pub to: EdgeEnd,
    pub compact: bool,
    pub n: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Brane {
    pub edge: EdgeId,
    pub framing: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FtcyGraph {
    pub name: String,
    /// Incident edge ids per trivalent vertex, in counterclockwise order.
    /// This cyclic order is input data: it fixes the vertex weights and a
    /// wrong order changes amplitudes.
    pub vertex_slots: Vec<[EdgeId; 3]>,
    pub edges: Vec<Edge>,
    pub branes: Vec<Brane>,
    /// Rank of the curve-class lattice of the closed part.
    pub homology_rank: usize,
    /// Projection vectors for interior compact edges (length = rank each).
    pub projections: BTreeMap<EdgeId, Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} slot references unknown edge {edge}")]
    UnknownEdge { vertex: VertexId, edge: EdgeId },
    #[error("vertex {vertex} slot edge {edge} is not incident to it")]
    NotIncident { vertex: VertexId, edge: EdgeId },
    #[error("edge {edge} is a loop; loop edges are not supported")]
    LoopEdge { edge: EdgeId },
    #[error("edge {edge} repeated in the slots of vertex {vertex}")]
    RepeatedSlot { vertex: VertexId, edge: EdgeId },
    #[error("edge {edge} has invalid endpoint/compactness combination")]
    BadEndpoints { edge: EdgeId },
    #[error("edge {edge} endpoint vertex {vertex} does not list it in a slot")]
    MissingSlot { edge: EdgeId, vertex: VertexId },
    #[error("edge {edge} references vertex {vertex} which does not exist")]
    UnknownVertex { edge: EdgeId, vertex: VertexId },
    #[error("brane edges must be pairwise distinct: edge {edge} repeats")]
    DuplicateBraneEdge { edge: EdgeId },
    #[error("edge {edge} ends on a brane but is not listed under branes")]
    UnlistedBraneEdge { edge: EdgeId },
    #[error("brane on edge {edge}: stored n = {n} must equal framing {framing}")]
    FramingMismatch { edge: EdgeId, n: i64, framing: i64 },
    #[error("brane entry references edge {edge} which is not a brane edge")]
    NotABraneEdge { edge: EdgeId },
    #[error("projection missing for interior edge {edge}")]
    MissingProjection { edge: EdgeId },
    #[error("projection for edge {edge} has length {got}, expected rank {rank}")]
    ProjectionLength { edge: EdgeId, got: usize, rank: usize },
    #[error("projection listed for edge {edge} which is not interior")]
    SpuriousProjection { edge: EdgeId },
}

impl FtcyGraph {
    /// Number of branes `s`.
    pub fn brane_count(&self) -> usize {
        self.branes.len()
    }

    /// Rank of `H₂(X, L)`: interior rank plus one disk class per brane.
    pub fn class_rank(&self) -> usize {
        self.homology_rank + self.branes.len()
    }

    pub fn compact_edges(&self) -> Vec<EdgeId> {
        (0..self.edges.len())
            .filter(|&e| self.edges[e].compact)
            .collect()
    }

    /// Compact edges between two trivalent vertices, ascending id.
    pub fn interior_edges(&self) -> Vec<EdgeId> {
        (0..self.edges.len())
            .filter(|&e| {
                let ed = &self.edges[e];
                ed.compact
                    && matches!(ed.from, EdgeEnd::Vertex(_))
                    && matches!(ed.to, EdgeEnd::Vertex(_))
            })
            .collect()
    }

    /// Brane edge ids in brane order.
    pub fn brane_edges(&self) -> Vec<EdgeId> {
        self.branes.iter().map(|b| b.edge).collect()
    }

    /// Checks every structural invariant; parse-time entry point.
    pub fn validate(&self) -> Result<(), GraphError> {
        let ne = self.edges.len();
        for (v, slots) in self.vertex_slots.iter().enumerate() {
            for &e in slots {
                if e >= ne {
                    return Err(GraphError::UnknownEdge { vertex: v, edge: e });
                }
                let ed = &self.edges[e];
                let from_here = ed.from == EdgeEnd::Vertex(v);
                let to_here = ed.to == EdgeEnd::Vertex(v);
                if from_here && to_here {
                    return Err(GraphError::LoopEdge { edge: e });
                }
                if !from_here && !to_here {
                    return Err(GraphError::NotIncident { vertex: v, edge: e });
                }
            }
            for i in 0..3 {
                for j in (i + 1)..3 {
                    if slots[i] == slots[j] {
                        return Err(GraphError::RepeatedSlot {
                            vertex: v,
                            edge: slots[i],
                        });
                    }
                }
            }
        }
        for (e, ed) in self.edges.iter().enumerate() {
            match (&ed.from, &ed.to, ed.compact) {
                (EdgeEnd::Vertex(_), EdgeEnd::Vertex(_), true) => {}
                (EdgeEnd::Vertex(_), EdgeEnd::Open, false) => {}
                (EdgeEnd::Vertex(_), EdgeEnd::Brane, true) => {
                    if !self.branes.iter().any(|b| b.edge == e) {
                        return Err(GraphError::UnlistedBraneEdge { edge: e });
                    }
                }
                _ => return Err(GraphError::BadEndpoints { edge: e }),
            }
            for end in [&ed.from, &ed.to] {
                if let EdgeEnd::Vertex(v) = end {
                    if *v >= self.vertex_slots.len() {
                        return Err(GraphError::UnknownVertex { edge: e, vertex: *v });
                    }
                    if !self.vertex_slots[*v].contains(&e) {
                        return Err(GraphError::MissingSlot { edge: e, vertex: *v });
                    }
                }
            }
        }
        let mut seen = Vec::new();
        for b in &self.branes {
            if seen.contains(&b.edge) {
                return Err(GraphError::DuplicateBraneEdge { edge: b.edge });
            }
            seen.push(b.edge);
            let ed = self
                .edges
                .get(b.edge)
                .ok_or(GraphError::NotABraneEdge { edge: b.edge })?;
            if !(ed.compact && ed.to == EdgeEnd::Brane) {
                return Err(GraphError::NotABraneEdge { edge: b.edge });
            }
            if ed.n != b.framing {
                return Err(GraphError::FramingMismatch {
                    edge: b.edge,
                    n: ed.n,
                    framing: b.framing,
                });
            }
        }
        let interior = self.interior_edges();
        for &e in &interior {
            match self.projections.get(&e) {
                None => return Err(GraphError::MissingProjection { edge: e }),
                Some(v) if v.len() != self.homology_rank => {
                    return Err(GraphError::ProjectionLength {
                        edge: e,
                        got: v.len(),
                        rank: self.homology_rank,
                    })
                }
                _ => {}
            }
        }
        for &e in self.projections.keys() {
            if !interior.contains(&e) {
                return Err(GraphError::SpuriousProjection { edge: e });
            }
        }
        Ok(())
    }
}

/// An effective class of the graph: one non-negative degree per compact
/// edge, plus a winding partition per brane with `μ^i ⊢ d(brane edge i)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EffClass {
    pub degrees: BTreeMap<EdgeId, u32>,
    pub windings: PartitionTuple,
}

impl EffClass {
    pub fn total_degree(&self) -> u32 {
        self.degrees.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.values().all(|&d| d == 0)
    }

    pub fn degree(&self, e: EdgeId) -> u32 {
        self.degrees.get(&e).copied().unwrap_or(0)
    }

    /// Monoid sum: degrees add, windings take the multiset union.
    pub fn plus(&self, other: &EffClass) -> EffClass {
        let mut degrees = self.degrees.clone();
        for (e, d) in &other.degrees {
            *degrees.entry(*e).or_insert(0) += d;
        }
        EffClass {
            degrees,
            windings: self.windings.union(&other.windings),
        }
    }

    /// Consistency with a graph: matching widths and `μ^i ⊢ d(ē_i)`.
    pub fn valid_for(&self, g: &FtcyGraph) -> bool {
        if self.windings.width() != g.brane_count() {
            return false;
        }
        g.branes
            .iter()
            .enumerate()
            .all(|(i, b)| self.windings.entry(i).size() == self.degree(b.edge))
    }
}

/// `π`: project an edge-degree assignment to the class vector in
/// ℤ^rank ⊕ ℤ^s (interior curve classes, then one disk degree per brane).
pub fn project_class(g: &FtcyGraph, degrees: &BTreeMap<EdgeId, u32>) -> Vec<i64> {
    let mut beta = vec![0i64; g.class_rank()];
    for (&e, &d) in degrees {
        if d == 0 {
            continue;
        }
        if let Some(p) = g.projections.get(&e) {
            for (k, c) in p.iter().enumerate() {
                beta[k] += c * d as i64;
            }
        }
    }
    for (i, b) in g.branes.iter().enumerate() {
        beta[g.homology_rank + i] = degrees.get(&b.edge).copied().unwrap_or(0) as i64;
    }
    beta
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiberError {
    #[error("effective cone is not pointed: the degree fiber would be infinite")]
    NonPointedEffectiveCone,
    #[error("class vector has length {got}, expected {expected}")]
    ClassLength { got: usize, expected: usize },
    #[error("disk components of the class must be non-negative")]
    NegativeDiskDegree,
}

/// Every non-negative degree assignment with `π(d⃗) = β`. Brane edges are
/// pinned to the disk components of `β`; interior degrees are enumerated as
/// the lattice points of a polytope whose boundedness is certified first.
pub fn fiber_enumerate(
    g: &FtcyGraph,
    beta: &[i64],
) -> Result<Vec<BTreeMap<EdgeId, u32>>, FiberError> {
    if beta.len() != g.class_rank() {
        return Err(FiberError::ClassLength {
            got: beta.len(),
            expected: g.class_rank(),
        });
    }
    let disk = &beta[g.homology_rank..];
    if disk.iter().any(|&d| d < 0) {
        return Err(FiberError::NegativeDiskDegree);
    }
    let interior = g.interior_edges();
    let m: ratmat::Mat = (0..g.homology_rank)
        .map(|row| {
            interior
                .iter()
                .map(|e| Rat::from_integer(g.projections[e][row].into()))
                .collect()
        })
        .collect();
    if !interior.is_empty() && ratmat::kernel_cone_has_nonzero(&m) {
        return Err(FiberError::NonPointedEffectiveCone);
    }
    let target: Vec<Rat> = beta[..g.homology_rank]
        .iter()
        .map(|&v| Rat::from_integer(v.into()))
        .collect();

    let mut base = BTreeMap::new();
    for (i, b) in g.branes.iter().enumerate() {
        base.insert(b.edge, disk[i] as u32);
    }

    if interior.is_empty() {
        if beta[..g.homology_rank].iter().all(|&v| v == 0) {
            return Ok(vec![base]);
        }
        return Ok(Vec::new());
    }

    // Per-coordinate bounds from the vertices of the (bounded) fiber polytope.
    let points = ratmat::basic_feasible_points(&m, &target);
    if points.is_empty() {
        return Ok(Vec::new());
    }
    let bounds: Vec<u32> = (0..interior.len())
        .map(|j| {
            points
                .iter()
                .map(|p| p[j].floor().to_integer().to_u32().unwrap_or(0))
                .max()
                .unwrap_or(0)
        })
        .collect();

    let mut out = Vec::new();
    let mut d = vec![0u32; interior.len()];
    loop {
        let hits = (0..g.homology_rank).all(|row| {
            let sum: i64 = interior
                .iter()
                .zip(d.iter())
                .map(|(e, &de)| g.projections[e][row] * de as i64)
                .sum();
            sum == beta[row]
        });
        if hits {
            let mut full = base.clone();
            for (j, &e) in interior.iter().enumerate() {
                full.insert(e, d[j]);
            }
            out.push(full);
        }
        // odometer
        let mut k = 0;
        loop {
            if k == d.len() {
                return Ok(out);
            }
            if d[k] < bounds[k] {
                d[k] += 1;
                break;
            }
            d[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::builtin_graph;

    #[test]
    fn builtin_graphs_validate() {
        for name in ["c3-brane(0)", "conifold", "conifold-brane(1)", "strip-2(0)", "local-p2"] {
            let g = builtin_graph(name).unwrap();
            g.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn c3_fiber_is_a_single_point() {
        let g = builtin_graph("c3-brane(0)").unwrap();
        for d in 1..=4i64 {
            let fibers = fiber_enumerate(&g, &[d]).unwrap();
            assert_eq!(fibers.len(), 1);
            assert_eq!(fibers[0][&g.branes[0].edge], d as u32);
        }
    }

    #[test]
    fn conifold_brane_fiber_is_identity() {
        let g = builtin_graph("conifold-brane(0)").unwrap();
        let fibers = fiber_enumerate(&g, &[2, 3]).unwrap();
        assert_eq!(fibers.len(), 1);
        let interior = g.interior_edges()[0];
        let brane = g.branes[0].edge;
        assert_eq!(fibers[0][&interior], 2);
        assert_eq!(fibers[0][&brane], 3);
    }

    #[test]
    fn parallel_edges_enumerate_all_splittings() {
        // Two interior edges mapping onto the same curve class.
        let g = two_edge_relation_graph();
        g.validate().unwrap();
        for a in 0..=4i64 {
            let fibers = fiber_enumerate(&g, &[a]).unwrap();
            assert_eq!(fibers.len(), a as usize + 1, "degree {a}");
        }
    }

    #[test]
    fn unprojectable_class_gives_empty_fiber() {
        let g = builtin_graph("conifold").unwrap();
        assert!(fiber_enumerate(&g, &[-1]).unwrap().is_empty());
    }

    #[test]
    fn non_pointed_cone_is_detected() {
        let mut g = two_edge_relation_graph();
        // Flip one projection so the kernel contains (1,1) ≥ 0.
        g.projections.insert(1, vec![-1]);
        assert_eq!(
            fiber_enumerate(&g, &[0]),
            Err(FiberError::NonPointedEffectiveCone)
        );
    }

    /// Two trivalent vertices joined by two parallel compact edges (a local
    /// surface shape), both projecting to the same class generator.
    fn two_edge_relation_graph() -> FtcyGraph {
        FtcyGraph {
            name: "two-edge-relation".into(),
            vertex_slots: vec![[0, 1, 2], [0, 1, 3]],
            edges: vec![
                Edge {
                    from: EdgeEnd::Vertex(0),
                    to: EdgeEnd::Vertex(1),
                    compact: true,
                    n: 1,
                },
                Edge {
                    from: EdgeEnd::Vertex(1),
                    to: EdgeEnd::Vertex(0),
                    compact: true,
                    n: 1,
                },
                Edge {
                    from: EdgeEnd::Vertex(0),
                    to: EdgeEnd::Open,
                    compact: false,
                    n: 0,
                },
                Edge {
                    from: EdgeEnd::Vertex(1),
                    to: EdgeEnd::Open,
                    compact: false,
                    n: 0,
                },
            ],
            branes: vec![],
            homology_rank: 1,
            projections: BTreeMap::from([(0, vec![1]), (1, vec![1])]),
        }
    }
}
