//! Bisection width: exact enumeration at desk scale plus a deterministic
//! local-search heuristic, and the crossing-number inequality check.

use serde::Serialize;

use super::Drawing;
use crate::{Error, Result};

/// Default vertex-count ceiling for exact bisection enumeration.
pub const DEFAULT_EXACT_BISECTION_LIMIT: usize = 20;

/// An abstract (undirected, simple) graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Self {
        SimpleGraph { n, edges }
    }

    fn cut_size(&self, side1: u64) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| (side1 >> a) & 1 != (side1 >> b) & 1)
            .count()
    }
}

/// A balanced partition with its cut size. Both sides have between
/// `ceil(n/3)` and `floor(2n/3)` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BisectionCertificate {
    pub side1: Vec<usize>,
    pub side2: Vec<usize>,
    pub cut: usize,
    /// True when produced by exhaustive enumeration (exact minimum).
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BisectionMode {
    /// Enumerate all balanced partitions; minimum cut, deterministic
    /// lexicographic tie-break. Limited to small vertex counts.
    Exact { limit: usize },
    /// Deterministic local-search upper bound.
    Heuristic,
}

fn balance_bounds(n: usize) -> (usize, usize) {
    (n.div_ceil(3), 2 * n / 3)
}

/// Computes a bisection certificate for the graph.
pub fn bisection_width(g: &SimpleGraph, mode: BisectionMode) -> Result<BisectionCertificate> {
    let n = g.n;
    if n == 0 {
        return Ok(BisectionCertificate {
            side1: vec![],
            side2: vec![],
            cut: 0,
            exact: true,
        });
    }
    match mode {
        BisectionMode::Exact { limit } => {
            if n > limit {
                return Err(Error::SizeLimit(format!(
                    "exact bisection limited to {limit} vertices, got {n}"
                )));
            }
            Ok(exact_bisection(g))
        }
        BisectionMode::Heuristic => Ok(heuristic_bisection(g)),
    }
}

fn certificate(g: &SimpleGraph, side1: u64, exact: bool) -> BisectionCertificate {
    let s1: Vec<usize> = (0..g.n).filter(|&i| side1 >> i & 1 == 1).collect();
    let s2: Vec<usize> = (0..g.n).filter(|&i| side1 >> i & 1 == 0).collect();
    BisectionCertificate {
        cut: g.cut_size(side1),
        side1: s1,
        side2: s2,
        exact,
    }
}

fn exact_bisection(g: &SimpleGraph) -> BisectionCertificate {
    let n = g.n;
    let (lo, hi) = balance_bounds(n);
    let mut best: Option<(usize, u64)> = None;
    // Vertex 0 is fixed on side 1 so each unordered partition appears once;
    // masks are scanned in increasing order for a deterministic tie-break.
    for mask in 0u64..(1u64 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size < lo || size > hi || n - size < lo || n - size > hi {
            continue;
        }
        let cut = g.cut_size(mask);
        if best.map_or(true, |(c, _)| cut < c) {
            best = Some((cut, mask));
        }
    }
    let (_, mask) = best.expect("balanced partition always exists for n >= 1");
    certificate(g, mask, true)
}

fn heuristic_bisection(g: &SimpleGraph) -> BisectionCertificate {
    let n = g.n;
    let (lo, hi) = balance_bounds(n);
    let mut side1: u64 = (1u64 << n.div_ceil(2)) - 1;
    let mut cut = g.cut_size(side1);
    loop {
        let mut improved = false;
        // Single moves, then pairwise swaps, in index order.
        'outer: for v in 0..n {
            let moved = side1 ^ (1 << v);
            let size = moved.count_ones() as usize;
            if size >= lo && size <= hi && n - size >= lo && n - size <= hi {
                let c = g.cut_size(moved);
                if c < cut {
                    side1 = moved;
                    cut = c;
                    improved = true;
                    break 'outer;
                }
            }
        }
        if !improved {
            'swaps: for a in 0..n {
                for b in 0..n {
                    if (side1 >> a) & 1 == 1 && (side1 >> b) & 1 == 0 {
                        let swapped = side1 ^ (1 << a) ^ (1 << b);
                        let c = g.cut_size(swapped);
                        if c < cut {
                            side1 = swapped;
                            cut = c;
                            improved = true;
                            break 'swaps;
                        }
                    }
                }
            }
        }
        if !improved {
            break;
        }
    }
    certificate(g, side1, false)
}

/// Report for the crossing-number bisection inequality
/// `b(G) <= 7 * sqrt(cr) + 3 * sqrt(|E| * n)`, evaluated with the
/// drawing's crossing count as the upper bound for `cr(G)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BisectionInequalityReport {
    pub bisection_width: usize,
    /// Crossing count of the drawing (an upper bound on `cr(G)`).
    pub crossing_upper: usize,
    pub edges: usize,
    pub vertices: usize,
    pub rhs: f64,
    pub holds: bool,
}

/// Checks the bisection inequality on a drawing, with exact `b(G)`.
pub fn check_bisection_inequality(
    d: &Drawing,
    limit: usize,
) -> Result<BisectionInequalityReport> {
    let g = d.abstract_graph();
    let cert = bisection_width(&g, BisectionMode::Exact { limit })?;
    let cr = d.crossing_count()?;
    let m = d.num_edges();
    let n = d.num_vertices();
    let rhs = 7.0 * (cr as f64).sqrt() + 3.0 * ((m * n) as f64).sqrt();
    Ok(BisectionInequalityReport {
        bisection_width: cert.cut,
        crossing_upper: cr,
        edges: m,
        vertices: n,
        rhs,
        holds: (cert.cut as f64) <= rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> SimpleGraph {
        SimpleGraph::new(n, (0..n - 1).map(|i| (i, i + 1)).collect())
    }

    fn complete(n: usize) -> SimpleGraph {
        let mut e = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                e.push((a, b));
            }
        }
        SimpleGraph::new(n, e)
    }

    #[test]
    fn path_six_cuts_one() {
        let c = bisection_width(&path(6), BisectionMode::Exact { limit: 20 }).unwrap();
        assert_eq!(c.cut, 1);
        assert_eq!(c.side1.len() + c.side2.len(), 6);
    }

    #[test]
    fn k4_cuts_four() {
        // ceil(4/3) = 2, so both sides must have exactly two vertices.
        let c = bisection_width(&complete(4), BisectionMode::Exact { limit: 20 }).unwrap();
        assert_eq!(c.cut, 4);
        assert_eq!(c.side1.len(), 2);
    }

    #[test]
    fn edgeless_cuts_zero() {
        let g = SimpleGraph::new(5, vec![]);
        let c = bisection_width(&g, BisectionMode::Exact { limit: 20 }).unwrap();
        assert_eq!(c.cut, 0);
    }

    #[test]
    fn heuristic_is_valid_upper_bound() {
        for g in [path(9), complete(6), SimpleGraph::new(7, vec![(0, 6), (2, 4)])] {
            let exact = bisection_width(&g, BisectionMode::Exact { limit: 20 }).unwrap();
            let heur = bisection_width(&g, BisectionMode::Heuristic).unwrap();
            assert!(heur.cut >= exact.cut);
            let (lo, hi) = balance_bounds(g.n);
            assert!(heur.side1.len() >= lo && heur.side1.len() <= hi);
        }
    }

    #[test]
    fn size_limit_enforced() {
        let g = SimpleGraph::new(25, vec![]);
        assert!(matches!(
            bisection_width(&g, BisectionMode::Exact { limit: 20 }),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn inequality_on_path_and_k4() {
        use crate::lab::convex_complete;
        let d4 = convex_complete(4);
        let r = check_bisection_inequality(&d4, 20).unwrap();
        assert_eq!(r.bisection_width, 4);
        assert_eq!(r.crossing_upper, 1);
        assert!((r.rhs - (7.0 + 3.0 * (24.0f64).sqrt())).abs() < 1e-12);
        assert!(r.holds);
    }
}
