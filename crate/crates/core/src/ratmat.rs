//! Small exact linear algebra over ℚ: rank, square solves, and enumeration
//! of basic feasible points of `{x ≥ 0 : M x = c}`. Sized for the handful of
//! edge variables a toric graph carries, not for general LP work.

use num_traits::{One, Signed, Zero};

use crate::Rat;

pub type Mat = Vec<Vec<Rat>>;

fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn from_int_rows(rows: &[Vec<i64>]) -> Mat {
    rows.iter()
        .map(|r| r.iter().map(|&v| rat(v)).collect())
        .collect()
}

/// Rank by Gaussian elimination.
pub fn rank(m: &Mat) -> usize {
    let mut m = m.to_vec();
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let p = m[r][c].clone();
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &p;
                for j in c..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Solve `A x = b` for the unique solution, if it exists. `None` when the
/// system is inconsistent or underdetermined.
pub fn solve_unique(a: &Mat, b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut aug: Mat = a
        .iter()
        .zip(b.iter())
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let pv = aug[r][c].clone();
        for j in c..=cols {
            aug[r][j] = &aug[r][j] / &pv;
        }
        for i in 0..rows {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in c..=cols {
                    let sub = &f * &aug[r][j];
                    aug[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    // Inconsistent row?
    for row in aug.iter().skip(r) {
        if !row[cols].is_zero() {
            return None;
        }
    }
    if pivots.len() < cols {
        return None; // underdetermined
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}

/// All basic feasible points of `{x ≥ 0 : M x = c}`: for every column
/// subset of size up to `rank(M)` whose columns are independent, solve on
/// that support and keep non-negative solutions. For a bounded feasible
/// region these are exactly the polytope's vertices.
pub fn basic_feasible_points(m: &Mat, c: &[Rat]) -> Vec<Vec<Rat>> {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let rk = rank(m);
    let mut out = Vec::new();
    if c.iter().all(|v| v.is_zero()) {
        out.push(vec![Rat::zero(); cols]);
    }
    let mut supports: Vec<Vec<usize>> = Vec::new();
    collect_subsets(cols, rk, &mut Vec::new(), &mut supports);
    for sup in supports {
        if sup.is_empty() {
            continue;
        }
        let sub: Mat = (0..rows)
            .map(|i| sup.iter().map(|&j| m[i][j].clone()).collect())
            .collect();
        let Some(xs) = solve_unique(&sub, c) else {
            continue;
        };
        if xs.iter().any(|v| v.is_negative()) {
            continue;
        }
        let mut x = vec![Rat::zero(); cols];
        for (k, &j) in sup.iter().enumerate() {
            x[j] = xs[k].clone();
        }
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

fn collect_subsets(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if !cur.is_empty() {
        out.push(cur.clone());
    }
    if cur.len() == max {
        return;
    }
    let start = cur.last().map(|&l| l + 1).unwrap_or(0);
    for j in start..n {
        cur.push(j);
        collect_subsets(n, max, cur, out);
        cur.pop();
    }
}

/// Whether `{x ≥ 0 : M x = 0}` contains a nonzero vector, i.e. the
/// non-negative kernel cone is not pointed. Tested by intersecting with the
/// standard simplex `Σ x_i = 1` and checking for a basic feasible point.
pub fn kernel_cone_has_nonzero(m: &Mat) -> bool {
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    if cols == 0 {
        return false;
    }
    let mut ext = m.to_vec();
    ext.push(vec![Rat::one(); cols]);
    let mut target = vec![Rat::zero(); m.len()];
    target.push(Rat::one());
    basic_feasible_points(&ext, &target)
        .iter()
        .any(|x| x.iter().any(|v| !v.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_solve() {
        let m = from_int_rows(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(rank(&m), 2);
        let x = solve_unique(&m, &[rat(3), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);
        let singular = from_int_rows(&[vec![1, 1], vec![2, 2]]);
        assert_eq!(rank(&singular), 1);
        assert!(solve_unique(&singular, &[rat(1), rat(2)]).is_none());
        assert!(solve_unique(&singular, &[rat(1), rat(3)]).is_none());
    }

    #[test]
    fn pointedness_detection() {
        // x1 + x2 = 0 with x ≥ 0 forces 0: pointed.
        let pointed = from_int_rows(&[vec![1, 1]]);
        assert!(!kernel_cone_has_nonzero(&pointed));
        // x1 - x2 = 0 admits (1,1): not pointed.
        let line = from_int_rows(&[vec![1, -1]]);
        assert!(kernel_cone_has_nonzero(&line));
        // Zero map on one variable: e1 is in the kernel.
        let zero = from_int_rows(&[vec![0]]);
        assert!(kernel_cone_has_nonzero(&zero));
    }

    #[test]
    fn feasible_vertices_of_a_segment() {
        // x1 + x2 = 2, x ≥ 0: vertices (2,0) and (0,2).
        let m = from_int_rows(&[vec![1, 1]]);
        let pts = basic_feasible_points(&m, &[rat(2)]);
        assert!(pts.contains(&vec![rat(2), rat(0)]));
        assert!(pts.contains(&vec![rat(0), rat(2)]));
    }
}
