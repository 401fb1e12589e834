//! Exact orientation and segment-intersection primitives.
//!
//! Every predicate here is computed with arbitrary-precision rational
//! arithmetic, so the sign results are exact for any rational input.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::point::Point;

/// A direction vector with exact rational components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dir {
    pub dx: BigRational,
    pub dy: BigRational,
}

impl Dir {
    pub fn between(from: &Point, to: &Point) -> Self {
        Dir {
            dx: &to.x - &from.x,
            dy: &to.y - &from.y,
        }
    }

    pub fn reversed(&self) -> Self {
        Dir {
            dx: -self.dx.clone(),
            dy: -self.dy.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero()
    }
}

fn sign(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Cross product of two direction vectors.
pub fn cross(a: &Dir, b: &Dir) -> BigRational {
    &a.dx * &b.dy - &a.dy * &b.dx
}

/// Sign of the cross product of two directions.
pub fn cross_sign(a: &Dir, b: &Dir) -> i8 {
    sign(&cross(a, b))
}

/// Dot product of two direction vectors.
pub fn dot(a: &Dir, b: &Dir) -> BigRational {
    &a.dx * &b.dx + &a.dy * &b.dy
}

/// Orientation of `r` relative to the directed line `p -> q`:
/// `+1` strictly left, `-1` strictly right, `0` collinear.
pub fn orient(p: &Point, q: &Point, r: &Point) -> i8 {
    cross_sign(&Dir::between(p, q), &Dir::between(p, r))
}

/// True iff `p` lies on the closed segment `a`-`b`.
pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    if orient(a, b, p) != 0 {
        return false;
    }
    in_range(&a.x, &b.x, &p.x) && in_range(&a.y, &b.y, &p.y)
}

fn in_range(a: &BigRational, b: &BigRational, v: &BigRational) -> bool {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    lo <= v && v <= hi
}

/// How two closed segments meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegMeet {
    /// Disjoint.
    None,
    /// A single meeting point, with parameters `t` along the first segment
    /// and `s` along the second, both in `[0, 1]`.
    Point {
        at: Point,
        t: BigRational,
        s: BigRational,
    },
    /// The segments are collinear and share a one-dimensional piece.
    Overlap,
}

/// Computes the exact intersection of two closed segments.
pub fn segment_meet(p1: &Point, p2: &Point, p3: &Point, p4: &Point) -> SegMeet {
    let d1 = Dir::between(p1, p2);
    let d2 = Dir::between(p3, p4);
    let denom = cross(&d1, &d2);
    if denom.is_zero() {
        // Parallel. Only interesting when collinear.
        if orient(p1, p2, p3) != 0 {
            return SegMeet::None;
        }
        return collinear_meet(p1, p2, p3, p4, &d1);
    }
    let qp = Dir::between(p1, p3);
    let t = cross(&qp, &d2) / denom.clone();
    let s = cross(&qp, &d1) / denom;
    let zero = BigRational::zero();
    let one = BigRational::from_integer(1.into());
    if t < zero || t > one || s < zero || s > one {
        return SegMeet::None;
    }
    let at = Point::new(&p1.x + &t * &d1.dx, &p1.y + &t * &d1.dy);
    SegMeet::Point { at, t, s }
}

fn collinear_meet(p1: &Point, p2: &Point, p3: &Point, p4: &Point, axis: &Dir) -> SegMeet {
    // Project onto the segment direction; the projection is strictly
    // monotone along the common line.
    let proj = |p: &Point| -> BigRational { dot(axis, &Dir::between(p1, p)) };
    let a0 = proj(p1);
    let a1 = proj(p2);
    let (alo, ahi) = if a0 <= a1 { (a0, a1) } else { (a1, a0) };
    let b0 = proj(p3);
    let b1 = proj(p4);
    let (blo, bhi) = if b0 <= b1 { (b0.clone(), b1.clone()) } else { (b1.clone(), b0.clone()) };
    let lo = alo.max(blo);
    let hi = ahi.min(bhi);
    if lo > hi {
        SegMeet::None
    } else if lo == hi {
        // Single shared point; recover it and its parameters.
        let at = if lo == proj(p1) {
            p1.clone()
        } else if lo == proj(p2) {
            p2.clone()
        } else if lo == proj(p3) {
            p3.clone()
        } else {
            p4.clone()
        };
        let len1 = dot(axis, axis);
        let t = (proj(&at)) / len1;
        let d2 = Dir::between(p3, p4);
        let len2 = dot(&d2, &d2);
        let s = dot(&d2, &Dir::between(p3, &at)) / len2;
        SegMeet::Point { at, t, s }
    } else {
        SegMeet::Overlap
    }
}

/// True iff direction `r` lies strictly inside the region swept
/// counterclockwise from `d1` to `d2`.
///
/// When `d1` and `d2` are exactly opposite (a straight-through point), the
/// region is the open half-plane to the left of `d1`.
pub fn strictly_between_ccw(d1: &Dir, r: &Dir, d2: &Dir) -> bool {
    let c12 = cross_sign(d1, d2);
    let c1r = cross_sign(d1, r);
    let cr2 = cross_sign(r, d2);
    match c12 {
        1 => c1r > 0 && cr2 > 0,
        -1 => c1r > 0 || cr2 > 0,
        _ => {
            // d1 and d2 are parallel; for a valid curve they point in
            // opposite directions, so "between" is the left half-plane.
            c1r > 0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn orient_basic() {
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(0, 1)), 1);
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(2, 0)), 0);
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(1, -1)), -1);
    }

    #[test]
    fn segment_meet_proper() {
        match segment_meet(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)) {
            SegMeet::Point { at, .. } => assert_eq!(at, p(1, 1)),
            other => panic!("expected point, got {other:?}"),
        }
    }

    #[test]
    fn segment_meet_disjoint_parallel() {
        assert_eq!(
            segment_meet(&p(0, 0), &p(1, 0), &p(0, 1), &p(1, 1)),
            SegMeet::None
        );
    }

    #[test]
    fn segment_meet_collinear_overlap_and_touch() {
        assert_eq!(
            segment_meet(&p(0, 0), &p(2, 0), &p(1, 0), &p(3, 0)),
            SegMeet::Overlap
        );
        match segment_meet(&p(0, 0), &p(1, 0), &p(1, 0), &p(3, 0)) {
            SegMeet::Point { at, .. } => assert_eq!(at, p(1, 0)),
            other => panic!("expected touch point, got {other:?}"),
        }
        assert_eq!(
            segment_meet(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)),
            SegMeet::None
        );
    }

    #[test]
    fn between_ccw_quadrants() {
        let east = Dir::between(&p(0, 0), &p(1, 0));
        let west = east.reversed();
        let north = Dir::between(&p(0, 0), &p(0, 1));
        let south = north.reversed();
        // Straight-through east/west: left half-plane is "up".
        assert!(strictly_between_ccw(&east, &north, &west));
        assert!(!strictly_between_ccw(&east, &south, &west));
        // A bent wedge spanning more than a half turn.
        let ne = Dir::between(&p(0, 0), &p(1, 1));
        assert!(strictly_between_ccw(&east, &north, &ne) == false);
        assert!(strictly_between_ccw(&ne, &north, &east) == false);
        assert!(strictly_between_ccw(&ne, &west, &east));
    }
}
