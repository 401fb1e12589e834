//! Fixture generators and exact extremal search at desk scale.

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::drawing::{has_clique_of_size_in, max_clique, Drawing, Edge, Vertex};
use crate::geometry::{orient, segment_meet, Point, PolylineCurve, SegMeet};
use crate::{Error, Result};

/// What to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    /// Random integer points in general position, random straight edges.
    RandomGeometric,
    /// Random vertices with distinct x, edges drawn as 2-4 segment
    /// x-monotone polylines.
    RandomXMonotone,
    /// Complete graph on points in convex position, straight edges.
    ConvexComplete,
    /// Hand-built fixtures; `n = 1` selects the crossing-sequence figure,
    /// `n = 2` the two-arc-region figure.
    FigureFixture,
}

/// Deterministic generator specification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: u32,
    pub seed: u64,
    /// Coordinates are drawn from `0..=coordinate_range`.
    pub coordinate_range: i64,
    /// Probability that a vertex pair gets an edge (random kinds).
    pub edge_probability: f64,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, n: u32, seed: u64) -> Self {
        GeneratorSpec {
            kind,
            n,
            seed,
            coordinate_range: 60,
            edge_probability: 0.35,
        }
    }
}

const RETRY_BUDGET: usize = 200;

/// Generates a drawing that passes validation; deterministic per seed.
pub fn generate(spec: &GeneratorSpec) -> Result<Drawing> {
    match spec.kind {
        GeneratorKind::ConvexComplete => {
            let d = convex_complete(spec.n as usize);
            debug_assert!(d.validate().is_valid());
            Ok(d)
        }
        GeneratorKind::FigureFixture => match spec.n {
            1 => Ok(figure_crossing_sequences()),
            2 => Ok(figure_two_arc_region()),
            other => Err(Error::Parse(format!(
                "figure-fixture n must be 1 or 2, got {other}"
            ))),
        },
        GeneratorKind::RandomGeometric => retry(spec, random_geometric_once),
        GeneratorKind::RandomXMonotone => retry(spec, random_x_monotone_once),
    }
}

fn retry(
    spec: &GeneratorSpec,
    attempt: fn(&GeneratorSpec, &mut ChaCha8Rng) -> Option<Drawing>,
) -> Result<Drawing> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..RETRY_BUDGET {
        if let Some(d) = attempt(spec, &mut rng) {
            if d.validate().is_valid() {
                return Ok(d);
            }
        }
    }
    Err(Error::RetryBudget(format!(
        "no valid drawing after {RETRY_BUDGET} attempts for seed {}",
        spec.seed
    )))
}

fn straight_edge(u: &Vertex, v: &Vertex) -> Edge {
    Edge {
        endpoints: (u.id, v.id),
        curve: PolylineCurve::segment(u.location.clone(), v.location.clone())
            .expect("endpoints are distinct"),
    }
}

/// K_n drawn with straight edges on convex-position points (a parabola).
pub fn convex_complete(n: usize) -> Drawing {
    let vertices: Vec<Vertex> = (0..n)
        .map(|i| Vertex {
            id: (i + 1) as u32,
            location: Point::from_ints(i as i64, (i as i64) * (i as i64)),
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push(straight_edge(&vertices[i], &vertices[j]));
        }
    }
    Drawing::new(vertices, edges)
}

/// Two edges crossing twice: the smallest non-simple drawing.
pub fn two_crossing_pair() -> Drawing {
    let vertices = vec![
        Vertex { id: 1, location: Point::from_ints(0, 0) },
        Vertex { id: 2, location: Point::from_ints(4, 0) },
        Vertex { id: 3, location: Point::from_ints(1, -2) },
        Vertex { id: 4, location: Point::from_ints(3, -2) },
    ];
    let edges = vec![
        straight_edge(&vertices[0], &vertices[1]),
        Edge {
            endpoints: (3, 4),
            curve: PolylineCurve::new(vec![
                Point::from_ints(1, -2),
                Point::from_ints(1, 1),
                Point::from_ints(3, -2),
            ])
            .unwrap(),
        },
    ];
    Drawing::new(vertices, edges)
}

fn pt(x: &str, y: &str) -> Point {
    Point::parse(x, y).unwrap()
}

/// Fixture realizing the worked crossing-sequence example: edge {6,7} is
/// crossed by five edges whose left-endpoint sequence is 1,3,4,3,2 and
/// right-endpoint sequence is 2,2,1,5,5.
pub fn figure_crossing_sequences() -> Drawing {
    let vertices = vec![
        Vertex { id: 1, location: pt("1", "3") },
        Vertex { id: 2, location: pt("2", "-3") },
        Vertex { id: 3, location: pt("3", "3") },
        Vertex { id: 4, location: pt("3.5", "5") },
        Vertex { id: 5, location: pt("4.5", "-3") },
        Vertex { id: 6, location: pt("0", "0") },
        Vertex { id: 7, location: pt("10", "0") },
    ];
    let poly = |coords: &[(&str, &str)]| {
        PolylineCurve::new(coords.iter().map(|(x, y)| pt(x, y)).collect()).unwrap()
    };
    let edges = vec![
        // The base edge.
        Edge { endpoints: (6, 7), curve: poly(&[("0", "0"), ("10", "0")]) },
        // Crossing at x=1: up to 1, down to 2.
        Edge { endpoints: (1, 2), curve: poly(&[("1", "3"), ("1", "-1"), ("2", "-3")]) },
        // Crossing at x=2: up to 3, down to 2.
        Edge { endpoints: (3, 2), curve: poly(&[("3", "3"), ("2", "1"), ("2", "-3")]) },
        // Crossing at x=3: up to 4, down loops around the left end to 1.
        Edge {
            endpoints: (4, 1),
            curve: poly(&[
                ("3.5", "5"),
                ("3", "1"),
                ("3", "-4"),
                ("-1", "-4"),
                ("-1", "4"),
                ("1", "3"),
            ]),
        },
        // Crossing at x=4: up to 3, down to 5.
        Edge {
            endpoints: (3, 5),
            curve: poly(&[("3", "3"), ("4", "1"), ("4", "-1"), ("4.5", "-3")]),
        },
        // Crossing at x=5: up branch loops around the right end to 2, down to 5.
        Edge {
            endpoints: (2, 5),
            curve: poly(&[
                ("2", "-3"),
                ("2.2", "-5"),
                ("11", "-5"),
                ("11", "2"),
                ("5", "1"),
                ("5", "-1"),
                ("4.5", "-3"),
            ]),
        },
    ];
    Drawing::new(vertices, edges)
}

/// Fixture with two arcs from vertex 1 to the far side of the base edge,
/// and two further vertices inside the region they bound, each with its
/// own crossing arc.
pub fn figure_two_arc_region() -> Drawing {
    let vertices = vec![
        Vertex { id: 1, location: pt("5", "4") },
        Vertex { id: 2, location: pt("2", "-2") },
        Vertex { id: 3, location: pt("8", "-2") },
        Vertex { id: 4, location: pt("4.5", "1.5") },
        Vertex { id: 5, location: pt("5.5", "1.5") },
        Vertex { id: 6, location: pt("4.2", "-2") },
        Vertex { id: 7, location: pt("5.8", "-2") },
        Vertex { id: 8, location: pt("0", "0") },
        Vertex { id: 9, location: pt("10", "0") },
    ];
    let seg = |a: usize, b: usize| straight_edge(&vertices[a - 1], &vertices[b - 1]);
    let edges = vec![seg(8, 9), seg(1, 2), seg(1, 3), seg(4, 6), seg(5, 7)];
    Drawing::new(vertices, edges)
}

fn random_geometric_once(spec: &GeneratorSpec, rng: &mut ChaCha8Rng) -> Option<Drawing> {
    let n = spec.n as usize;
    let range = spec.coordinate_range;
    let mut points: Vec<Point> = Vec::new();
    let mut guard = 0;
    while points.len() < n {
        guard += 1;
        if guard > 50 * n + 100 {
            return None;
        }
        let p = Point::from_ints(rng.gen_range(0..=range), rng.gen_range(0..=range));
        if points.contains(&p) {
            continue;
        }
        // Keep points in general position: no three collinear.
        if points
            .iter()
            .enumerate()
            .any(|(i, a)| points[i + 1..].iter().any(|b| orient(a, b, &p) == 0))
        {
            continue;
        }
        points.push(p);
    }
    let vertices: Vec<Vertex> = points
        .into_iter()
        .enumerate()
        .map(|(i, location)| Vertex { id: (i + 1) as u32, location })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(spec.edge_probability) {
                edges.push(straight_edge(&vertices[i], &vertices[j]));
            }
        }
    }
    Some(Drawing::new(vertices, edges))
}

fn random_x_monotone_once(spec: &GeneratorSpec, rng: &mut ChaCha8Rng) -> Option<Drawing> {
    let n = spec.n as usize;
    let range = spec.coordinate_range;
    // Distinct x-coordinates, spread out so interior waypoints fit.
    let mut xs: Vec<i64> = (0..n as i64).map(|i| i * 8).collect();
    xs.shuffle(rng);
    let mut vertices: Vec<Vertex> = (0..n)
        .map(|i| Vertex {
            id: (i + 1) as u32,
            location: Point::from_ints(xs[i], rng.gen_range(0..=range)),
        })
        .collect();
    vertices.sort_by_key(|v| v.id);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !rng.gen_bool(spec.edge_probability) {
                continue;
            }
            let (a, b) = if vertices[i].location.x < vertices[j].location.x {
                (&vertices[i], &vertices[j])
            } else {
                (&vertices[j], &vertices[i])
            };
            let ax = num_to_i64(&a.location.x);
            let bx = num_to_i64(&b.location.x);
            let bends = rng.gen_range(0..=2usize).min((bx - ax - 1).max(0) as usize);
            let mut waypoints = vec![a.location.clone()];
            if bends > 0 {
                let mut mid_xs: Vec<i64> = (ax + 1..bx).collect();
                mid_xs.shuffle(rng);
                let mut chosen: Vec<i64> = mid_xs.into_iter().take(bends).collect();
                chosen.sort_unstable();
                for x in chosen {
                    waypoints.push(Point::from_ints(x, rng.gen_range(0..=range)));
                }
            }
            waypoints.push(b.location.clone());
            let curve = PolylineCurve::new(waypoints).ok()?;
            edges.push(Edge { endpoints: (a.id, b.id), curve });
        }
    }
    Some(Drawing::new(vertices, edges))
}

fn num_to_i64(r: &BigRational) -> i64 {
    use num_traits::ToPrimitive;
    r.to_integer().to_string().parse::<i64>().unwrap_or_else(|_| {
        r.to_f64().map(|f| f as i64).unwrap_or(0)
    })
}

/// A stored extremal search result.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExtremalRecord {
    pub name: String,
    /// Point coordinates as canonical strings.
    pub points: Vec<(String, String)>,
    pub k: u32,
    pub max_edges: usize,
    /// Witness edges as 0-based point-index pairs.
    pub witness: Vec<(usize, usize)>,
}

/// Default point-count ceiling for extremal search.
pub const DEFAULT_EXTREMAL_LIMIT: usize = 9;

/// Exact maximum number of straight-line edges on the given points with no
/// `k` pairwise crossing edges, plus the lexicographically smallest witness
/// edge set.
pub fn extremal_max_edges(
    points: &[Point],
    k: u32,
    limit: usize,
) -> Result<(usize, Vec<(usize, usize)>)> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let n = points.len();
    if n > limit {
        return Err(Error::SizeLimit(format!(
            "extremal search limited to {limit} points, got {n}"
        )));
    }
    check_general_position(points)?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let neighbors = geometric_crossing_masks(points, &pairs);
    let kept = max_edge_subset(&neighbors, k as usize);
    Ok((kept.len(), kept.iter().map(|&i| pairs[i]).collect()))
}

fn check_general_position(points: &[Point]) -> Result<()> {
    let n = points.len();
    for a in 0..n {
        for b in a + 1..n {
            if points[a] == points[b] {
                return Err(Error::InvalidDrawing(format!("duplicate points {a} and {b}")));
            }
            for c in b + 1..n {
                if orient(&points[a], &points[b], &points[c]) == 0 {
                    return Err(Error::InvalidDrawing(format!(
                        "points {a}, {b}, {c} are collinear"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Crossing adjacency (as bitsets) of the complete geometric graph on the
/// given points, edges listed in `pairs` order.
pub fn geometric_crossing_masks(points: &[Point], pairs: &[(usize, usize)]) -> Vec<u128> {
    let m = pairs.len();
    assert!(m <= 128);
    let mut masks = vec![0u128; m];
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a == c || a == d || b == c || b == d {
                continue; // shared endpoint, never a crossing for segments
            }
            if segments_cross(&points[a], &points[b], &points[c], &points[d]) {
                masks[i] |= 1 << j;
                masks[j] |= 1 << i;
            }
        }
    }
    masks
}

fn segments_cross(p1: &Point, p2: &Point, p3: &Point, p4: &Point) -> bool {
    matches!(segment_meet(p1, p2, p3, p4), SegMeet::Point { at, .. }
        if at != *p1 && at != *p2 && at != *p3 && at != *p4)
}

/// Maximum subset of edges whose induced crossing graph has no k-clique;
/// returns the lexicographically smallest optimal subset (sorted indices).
fn max_edge_subset(neighbors: &[u128], k: usize) -> Vec<usize> {
    let m = neighbors.len();
    let all: u128 = if m == 0 {
        0
    } else if m == 128 {
        !0
    } else {
        (1u128 << m) - 1
    };
    if k == 2 {
        // No crossing pair allowed: maximum independent set in the
        // crossing graph = maximum clique in its complement.
        let complement: Vec<u128> = (0..m)
            .map(|i| all & !neighbors[i] & !(1u128 << i))
            .collect();
        let (_, witness) = max_clique(&complement);
        return witness;
    }
    // Remove edges until no k pairwise-crossing set remains, branching on
    // the members of a violating clique.
    let mut best: Option<Vec<usize>> = None;
    let mut seen = std::collections::HashSet::new();
    fn rec(
        neighbors: &[u128],
        k: usize,
        kept: u128,
        best: &mut Option<Vec<usize>>,
        seen: &mut std::collections::HashSet<u128>,
    ) {
        let count = kept.count_ones() as usize;
        if let Some(b) = best {
            if count < b.len() {
                return;
            }
        }
        if !seen.insert(kept) {
            return;
        }
        let mut clique = Vec::new();
        if !has_clique_of_size_in(neighbors, kept, k, &mut clique) {
            let members: Vec<usize> = (0..neighbors.len()).filter(|&i| kept >> i & 1 == 1).collect();
            let better = match best {
                None => true,
                Some(b) => count > b.len() || (count == b.len() && members < *b),
            };
            if better {
                *best = Some(members);
            }
            return;
        }
        for &v in &clique {
            rec(neighbors, k, kept & !(1u128 << v), best, seen);
        }
    }
    rec(neighbors, k, all, &mut best, &mut seen);
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convex_fixtures_are_valid() {
        for n in 3..=7 {
            let d = convex_complete(n);
            let r = d.validate();
            assert!(r.is_valid(), "K{n} violations: {:?}", r.violations);
            assert!(r.simple);
        }
    }

    #[test]
    fn convex_crossing_counts() {
        // In convex position, every 4 vertices contribute exactly one crossing.
        assert_eq!(convex_complete(4).crossing_count().unwrap(), 1);
        assert_eq!(convex_complete(5).crossing_count().unwrap(), 5);
        assert_eq!(convex_complete(6).crossing_count().unwrap(), 15);
    }

    #[test]
    fn figure_fixtures_are_valid_and_simple() {
        for d in [figure_crossing_sequences(), figure_two_arc_region()] {
            let r = d.validate();
            assert!(r.is_valid(), "violations: {:?}", r.violations);
            assert!(r.simple);
        }
    }

    #[test]
    fn generators_are_deterministic_and_valid() {
        for kind in [GeneratorKind::RandomGeometric, GeneratorKind::RandomXMonotone] {
            let spec = GeneratorSpec::new(kind, 7, 11);
            let a = generate(&spec).unwrap();
            let b = generate(&spec).unwrap();
            assert_eq!(a, b);
            assert!(a.validate().is_valid());
            if kind == GeneratorKind::RandomXMonotone {
                assert!(a.is_x_monotone_drawing());
            }
        }
    }

    /// Oracle: plain exhaustive search over edge subsets.
    fn brute_extremal(points: &[Point], k: usize) -> usize {
        let n = points.len();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        let neighbors = geometric_crossing_masks(points, &pairs);
        let m = pairs.len();
        let mut best = 0;
        for mask in 0u64..(1 << m) {
            let kept = mask as u128;
            let mut witness = Vec::new();
            if !has_clique_of_size_in(&neighbors, kept, k, &mut witness) {
                best = best.max(kept.count_ones() as usize);
            }
        }
        best
    }

    fn convex_points(n: usize) -> Vec<Point> {
        (0..n)
            .map(|i| Point::from_ints(i as i64, (i as i64) * (i as i64)))
            .collect()
    }

    #[test]
    fn extremal_small_convex_cases() {
        // k=2 on convex position: a triangulation, 2n-3 edges.
        for n in 4..=6 {
            let (max, witness) = extremal_max_edges(&convex_points(n), 2, 9).unwrap();
            assert_eq!(max, 2 * n - 3);
            assert_eq!(witness.len(), max);
        }
        // Convex 5-gon, k=3: the diagonal crossing graph is a 5-cycle,
        // triangle-free, so all 10 edges survive.
        let (max, _) = extremal_max_edges(&convex_points(5), 3, 9).unwrap();
        assert_eq!(max, 10);
        // Convex 6-gon, k=3: the three main diagonals pairwise cross.
        let (max, _) = extremal_max_edges(&convex_points(6), 3, 9).unwrap();
        assert!(max < 15);
        assert_eq!(max, brute_extremal(&convex_points(6), 3));
    }

    #[test]
    fn extremal_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 4..=6 {
            for k in 2..=4u32 {
                // Random general-position point sets.
                for _ in 0..3 {
                    let points = loop {
                        let pts: Vec<Point> = (0..n)
                            .map(|_| {
                                Point::from_ints(rng.gen_range(0..40), rng.gen_range(0..40))
                            })
                            .collect();
                        if check_general_position(&pts).is_ok() {
                            break pts;
                        }
                    };
                    let (max, witness) = extremal_max_edges(&points, k, 9).unwrap();
                    assert_eq!(max, brute_extremal(&points, k as usize), "n={n} k={k}");
                    assert_eq!(witness.len(), max);
                }
            }
        }
    }

    #[test]
    fn extremal_monotone_in_k() {
        let pts = convex_points(6);
        let mut prev = 0;
        for k in 2..=5u32 {
            let (max, _) = extremal_max_edges(&pts, k, 9).unwrap();
            assert!(max >= prev);
            prev = max;
        }
        assert!(prev <= 15);
    }

    #[test]
    fn extremal_size_limit() {
        let pts = convex_points(10);
        assert!(matches!(
            extremal_max_edges(&pts, 3, 9),
            Err(Error::SizeLimit(_))
        ));
    }
}
