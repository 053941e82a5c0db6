//! End-to-end regressions against independently known invariant tables.

use std::collections::BTreeMap;

use openbps_core::bps::{closed_bps_table, open_bps_table, OpenClass};
use openbps_core::geometry::builtin_graph;
use openbps_core::partition::{Partition, PartitionTuple};
use openbps_core::vertex::WCache;
use openbps_core::Int;

/// The degree ≤ 4 closed BPS table of the local plane: the classical values
/// n₀ = 3, -6, 27, -192; n₁ = 0, 0, -10, 231; n₂ = 0, 0, 0, -102;
/// n₃ = 0, 0, 0, 15.
#[test]
fn local_p2_classical_bps_values() {
    let g = builtin_graph("local-p2").unwrap();
    let cache = WCache::new();
    let table = closed_bps_table(&g, 4, &cache, 2).unwrap();
    assert!(table.all_pass());
    let expected: BTreeMap<(i64, u32), i64> = BTreeMap::from([
        ((1, 0), 3),
        ((2, 0), -6),
        ((3, 0), 27),
        ((3, 1), -10),
        ((4, 0), -192),
        ((4, 1), 231),
        ((4, 2), -102),
        ((4, 3), 15),
    ]);
    for d in 1..=4i64 {
        let class = OpenClass::closed(vec![d]);
        let row = &table.rows[&class];
        for rec in &row.records {
            let want = expected
                .get(&(d, rec.genus))
                .copied()
                .unwrap_or_else(|| panic!("unexpected nonzero n_{{{}, {d}}}", rec.genus));
            assert_eq!(rec.value, Int::from(want), "n_{{{}, {d}}}", rec.genus);
        }
        let nonzero = expected.keys().filter(|(dd, _)| *dd == d).count();
        assert_eq!(row.records.len(), nonzero, "degree {d} record count");
    }
}

/// Degree-(0, d) classes of the conifold with a brane are pure disk
/// classes: the interior curve does not contribute, so the table restricted
/// to beta' = 0 agrees with the one-vertex geometry at the same framing.
#[test]
fn conifold_brane_restricts_to_the_vertex_disk() {
    let f = 1i64;
    let conifold = builtin_graph(&format!("conifold-brane({f})")).unwrap();
    let c3 = builtin_graph(&format!("c3-brane({f})")).unwrap();
    let table_a = open_bps_table(&conifold, 3, &WCache::new(), 1).unwrap();
    let table_b = open_bps_table(&c3, 3, &WCache::new(), 1).unwrap();
    for d in 1..=3u32 {
        for mu in openbps_core::partition::partitions_of(d) {
            let class_a = OpenClass {
                beta: vec![0, d as i64],
                windings: PartitionTuple::new(vec![mu.clone()]),
            };
            let class_b = OpenClass {
                beta: vec![d as i64],
                windings: PartitionTuple::new(vec![mu.clone()]),
            };
            let ra = &table_a.rows[&class_a];
            let rb = &table_b.rows[&class_b];
            assert_eq!(ra.g, rb.g, "windings {mu}");
            assert_eq!(ra.records, rb.records, "windings {mu}");
        }
    }
}

/// A fully wound disk with trivial interior on the strip geometry matches
/// the one-vertex answer as well: the n = ±1 interior edge only enters
/// through classes with positive interior degree.
#[test]
fn strip_zero_interior_matches_vertex() {
    let f = -1i64;
    let strip = builtin_graph(&format!("strip-2({f})")).unwrap();
    let c3 = builtin_graph(&format!("c3-brane({f})")).unwrap();
    let ta = open_bps_table(&strip, 2, &WCache::new(), 1).unwrap();
    let tb = open_bps_table(&c3, 2, &WCache::new(), 1).unwrap();
    let mu = PartitionTuple::new(vec![Partition::new(vec![2])]);
    let a = &ta.rows[&OpenClass { beta: vec![0, 2], windings: mu.clone() }];
    let b = &tb.rows[&OpenClass { beta: vec![2], windings: mu }];
    assert_eq!(a.records, b.records);
    assert!(ta.all_pass() && tb.all_pass());
}
