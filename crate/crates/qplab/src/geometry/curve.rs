//! Polyline curves and exact pairwise crossing detection.

use num_rational::BigRational;
use num_traits::Zero;

use super::point::Point;
use super::predicates::{cross_sign, segment_meet, strictly_between_ccw, Dir, SegMeet};
use super::GeometryError;

/// A non-self-intersecting piecewise-linear curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolylineCurve {
    waypoints: Vec<Point>,
}

impl PolylineCurve {
    /// Builds a curve, checking that it has at least two pairwise-distinct
    /// consecutive waypoints and does not intersect itself.
    pub fn new(waypoints: Vec<Point>) -> Result<Self, GeometryError> {
        if waypoints.len() < 2 {
            return Err(GeometryError::InvalidCurve(
                "a curve needs at least two waypoints".into(),
            ));
        }
        for w in waypoints.windows(2) {
            if w[0] == w[1] {
                return Err(GeometryError::InvalidCurve(format!(
                    "repeated consecutive waypoint {}",
                    w[0]
                )));
            }
        }
        let curve = PolylineCurve { waypoints };
        curve.check_self_intersection()?;
        Ok(curve)
    }

    pub fn segment(a: Point, b: Point) -> Result<Self, GeometryError> {
        Self::new(vec![a, b])
    }

    pub fn waypoints(&self) -> &[Point] {
        &self.waypoints
    }

    pub fn num_segments(&self) -> usize {
        self.waypoints.len() - 1
    }

    pub fn start(&self) -> &Point {
        &self.waypoints[0]
    }

    pub fn end(&self) -> &Point {
        self.waypoints.last().unwrap()
    }

    pub fn reversed(&self) -> Self {
        let mut w = self.waypoints.clone();
        w.reverse();
        PolylineCurve { waypoints: w }
    }

    fn seg(&self, i: usize) -> (&Point, &Point) {
        (&self.waypoints[i], &self.waypoints[i + 1])
    }

    fn check_self_intersection(&self) -> Result<(), GeometryError> {
        let n = self.num_segments();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = self.seg(i);
                let (c, d) = self.seg(j);
                match segment_meet(a, b, c, d) {
                    SegMeet::None => {}
                    SegMeet::Overlap => {
                        return Err(GeometryError::InvalidCurve(
                            "curve overlaps itself".into(),
                        ))
                    }
                    SegMeet::Point { at, .. } => {
                        // Adjacent segments may share exactly the common waypoint.
                        if j == i + 1 && at == self.waypoints[j] {
                            continue;
                        }
                        return Err(GeometryError::InvalidCurve(format!(
                            "curve intersects itself at {at}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// True iff `p` lies on the curve (including endpoints).
    pub fn contains_point(&self, p: &Point) -> bool {
        (0..self.num_segments()).any(|i| {
            let (a, b) = self.seg(i);
            super::predicates::on_segment(a, b, p)
        })
    }

    /// True iff `p` lies on the curve strictly between its endpoints.
    pub fn interior_contains(&self, p: &Point) -> bool {
        self.contains_point(p) && p != self.start() && p != self.end()
    }

    /// Local tangent rays at a point strictly interior to the curve:
    /// the first points backward (toward the start), the second forward
    /// (toward the end).
    fn interior_rays(&self, param: &BigRational) -> (Dir, Dir) {
        let seg_count = BigRational::from_integer((self.num_segments() as i64).into());
        debug_assert!(param > &BigRational::zero() && param < &seg_count);
        let floor = param.floor().to_integer();
        let idx: usize = usize::try_from(&floor).unwrap();
        if &BigRational::from_integer(floor) == param {
            // Exactly at waypoint `idx` (an interior bend).
            let p = &self.waypoints[idx];
            (
                Dir::between(p, &self.waypoints[idx - 1]),
                Dir::between(p, &self.waypoints[idx + 1]),
            )
        } else {
            let (a, b) = self.seg(idx);
            (Dir::between(b, a), Dir::between(a, b))
        }
    }
}

/// A polyline whose waypoint x-coordinates are strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XMonotoneCurve {
    underlying: PolylineCurve,
}

impl XMonotoneCurve {
    pub fn new(curve: PolylineCurve) -> Result<Self, GeometryError> {
        let w = curve.waypoints();
        if w.windows(2).all(|s| s[0].x < s[1].x) {
            Ok(XMonotoneCurve { underlying: curve })
        } else if w.windows(2).all(|s| s[0].x > s[1].x) {
            // Store with increasing x so y_at can scan left to right.
            Ok(XMonotoneCurve {
                underlying: curve.reversed(),
            })
        } else {
            Err(GeometryError::InvalidCurve(
                "waypoint x-coordinates are not strictly monotone".into(),
            ))
        }
    }

    pub fn curve(&self) -> &PolylineCurve {
        &self.underlying
    }

    /// The unique y-coordinate where the curve meets the vertical line `x = at`.
    pub fn y_at(&self, at: &BigRational) -> Option<BigRational> {
        let w = self.underlying.waypoints();
        if at < &w[0].x || at > &w.last().unwrap().x {
            return None;
        }
        for s in w.windows(2) {
            if at >= &s[0].x && at <= &s[1].x {
                let t = (at - &s[0].x) / (&s[1].x - &s[0].x);
                return Some(&s[0].y + t * (&s[1].y - &s[0].y));
            }
        }
        None
    }
}

/// True iff the waypoints of `curve` have strictly increasing x, possibly
/// after reversal.
pub fn is_x_monotone(curve: &PolylineCurve) -> bool {
    let w = curve.waypoints();
    w.windows(2).all(|s| s[0].x < s[1].x) || w.windows(2).all(|s| s[0].x > s[1].x)
}

/// A proper crossing between two curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingPoint {
    pub location: Point,
    /// Segment index into the first curve.
    pub seg_a: usize,
    /// Segment index into the second curve.
    pub seg_b: usize,
    /// Global parameter along the first curve: segment index plus local t.
    pub param_a: BigRational,
    /// Global parameter along the second curve.
    pub param_b: BigRational,
}

/// All proper interior crossings of `a` and `b`, ordered by parameter
/// along `a`.
///
/// Touching without crossing is a `Tangency` error and a shared
/// one-dimensional piece is an `Overlap` error; meeting only at shared
/// endpoints yields an empty list.
pub fn curve_crossings(
    a: &PolylineCurve,
    b: &PolylineCurve,
) -> Result<Vec<CrossingPoint>, GeometryError> {
    let meets = collect_meets(a, b)?;
    let mut crossings = Vec::new();
    for m in meets {
        let a_end = m.at == *a.start() || m.at == *a.end();
        let b_end = m.at == *b.start() || m.at == *b.end();
        if a_end && b_end {
            continue; // shared endpoint
        }
        if a_end || b_end {
            return Err(GeometryError::Tangency {
                at: format!("{}", m.at),
            });
        }
        // Interior of both curves: decide proper crossing by checking that
        // b's two local rays leave on opposite sides of a.
        let (a_back, a_fwd) = a.interior_rays(&m.param_a);
        let (b_back, b_fwd) = b.interior_rays(&m.param_b);
        for br in [&b_back, &b_fwd] {
            for ar in [&a_back, &a_fwd] {
                if cross_sign(ar, br) == 0 {
                    // A ray of b collinear with a ray of a at a meeting
                    // point: the curves run together locally.
                    return Err(GeometryError::Overlap {
                        at: format!("{}", m.at),
                    });
                }
            }
        }
        let fwd_left = strictly_between_ccw(&a_fwd, &b_fwd, &a_back);
        let back_left = strictly_between_ccw(&a_fwd, &b_back, &a_back);
        if fwd_left == back_left {
            return Err(GeometryError::Tangency {
                at: format!("{}", m.at),
            });
        }
        crossings.push(CrossingPoint {
            location: m.at,
            seg_a: m.seg_a,
            seg_b: m.seg_b,
            param_a: m.param_a,
            param_b: m.param_b,
        });
    }
    crossings.sort_by(|u, v| u.param_a.cmp(&v.param_a));
    Ok(crossings)
}

struct Meet {
    at: Point,
    seg_a: usize,
    seg_b: usize,
    param_a: BigRational,
    param_b: BigRational,
}

fn collect_meets(a: &PolylineCurve, b: &PolylineCurve) -> Result<Vec<Meet>, GeometryError> {
    let mut meets: Vec<Meet> = Vec::new();
    for i in 0..a.num_segments() {
        for j in 0..b.num_segments() {
            let (p1, p2) = a.seg(i);
            let (p3, p4) = b.seg(j);
            match segment_meet(p1, p2, p3, p4) {
                SegMeet::None => {}
                SegMeet::Overlap => {
                    return Err(GeometryError::Overlap {
                        at: format!("segments {i} of a and {j} of b"),
                    })
                }
                SegMeet::Point { at, t, s } => {
                    if meets.iter().any(|m| m.at == at) {
                        continue; // same point seen via an adjacent segment
                    }
                    let param_a = BigRational::from_integer((i as i64).into()) + t;
                    let param_b = BigRational::from_integer((j as i64).into()) + s;
                    meets.push(Meet {
                        at,
                        seg_a: i,
                        seg_b: j,
                        param_a,
                        param_b,
                    });
                }
            }
        }
    }
    Ok(meets)
}

/// Total number of distinct intersection points of two curves, counting a
/// shared endpoint as one.
pub fn intersection_count(a: &PolylineCurve, b: &PolylineCurve) -> Result<usize, GeometryError> {
    let crossings = curve_crossings(a, b)?;
    let mut shared = 0;
    for ea in [a.start(), a.end()] {
        for eb in [b.start(), b.end()] {
            if ea == eb {
                shared += 1;
            }
        }
    }
    Ok(crossings.len() + shared)
}

/// True iff the two curves intersect at most once in total.
pub fn is_simple_pair(a: &PolylineCurve, b: &PolylineCurve) -> Result<bool, GeometryError> {
    Ok(intersection_count(a, b)? <= 1)
}

/// Which endpoint of the crossed curve a traverser reaches after turning
/// off at a crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideAssignment {
    /// Endpoint of `b` reached by turning left off `a`.
    pub left: Point,
    /// Endpoint of `b` reached by turning right off `a`.
    pub right: Point,
}

/// Traversal direction along a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Traversal {
    /// From the curve's first waypoint toward its last.
    Forward,
    /// From the curve's last waypoint toward its first.
    Backward,
}

/// Classifies which endpoint of `b` lies on the left (resp. right) branch
/// at a proper crossing of `a` and `b`, traversing `a` in `direction`.
///
/// The classification is purely local: it is decided by the exact
/// orientation of `b`'s tangent rays against `a`'s tangent rays at the
/// crossing.
pub fn crossing_side(
    a: &PolylineCurve,
    direction: Traversal,
    b: &PolylineCurve,
    crossing: &CrossingPoint,
) -> Result<SideAssignment, GeometryError> {
    let (a_back, a_fwd) = a.interior_rays(&crossing.param_a);
    let (a_back, a_fwd) = match direction {
        Traversal::Forward => (a_back, a_fwd),
        Traversal::Backward => (a_fwd, a_back),
    };
    let (b_back, b_fwd) = b.interior_rays(&crossing.param_b);
    for br in [&b_back, &b_fwd] {
        for ar in [&a_back, &a_fwd] {
            if cross_sign(ar, br) == 0 {
                return Err(GeometryError::Degenerate {
                    at: format!("{}", crossing.location),
                });
            }
        }
    }
    let fwd_left = strictly_between_ccw(&a_fwd, &b_fwd, &a_back);
    let back_left = strictly_between_ccw(&a_fwd, &b_back, &a_back);
    if fwd_left == back_left {
        return Err(GeometryError::Degenerate {
            at: format!("{}", crossing.location),
        });
    }
    let (left, right) = if fwd_left {
        (b.end().clone(), b.start().clone())
    } else {
        (b.start().clone(), b.end().clone())
    };
    Ok(SideAssignment { left, right })
}
