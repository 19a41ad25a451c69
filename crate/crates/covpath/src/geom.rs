//! Exact rational scalars, points and the predicates everything else is built on.
//!
//! All arithmetic is over arbitrary-precision rationals; there is no epsilon
//! anywhere in this module. Predicates return exact signs.

use std::collections::HashMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar. `BigRational` keeps the canonical reduced form with
/// a positive denominator, which is exactly the invariant we need.
pub type Scalar = BigRational;

/// Shorthand for an integer-valued scalar.
pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Point::new(scalar(x), scalar(y))
    }

    /// Squared Euclidean distance, exact.
    pub fn dist2(&self, other: &Point) -> Scalar {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }
}

/// A closed segment with distinct endpoints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        assert!(a != b, "degenerate segment");
        Segment { a, b }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    Left,
    Right,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Left => Orientation::Right,
            Orientation::Right => Orientation::Left,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Sign of the cross product `(q - p) x (r - p)`.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    let cross = cross2(p, q, r);
    if cross.is_zero() {
        Orientation::Collinear
    } else if cross.is_positive() {
        Orientation::Left
    } else {
        Orientation::Right
    }
}

/// The exact cross product `(q - p) x (r - p)`.
pub fn cross2(p: &Point, q: &Point, r: &Point) -> Scalar {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

/// True iff `p` lies on the closed segment `s`.
pub fn on_segment(p: &Point, s: &Segment) -> bool {
    // Cheap interval rejection first; the coordinates are already ordered.
    let (xlo, xhi) = minmax(&s.a.x, &s.b.x);
    if p.x < *xlo || p.x > *xhi {
        return false;
    }
    let (ylo, yhi) = minmax(&s.a.y, &s.b.y);
    if p.y < *ylo || p.y > *yhi {
        return false;
    }
    orientation(&s.a, &s.b, p) == Orientation::Collinear
}

fn minmax<'a>(a: &'a Scalar, b: &'a Scalar) -> (&'a Scalar, &'a Scalar) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Intersection policy for [`segments_cross`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CrossPolicy {
    /// Relative interiors intersect, or an endpoint lies in the other
    /// segment's relative interior. Shared endpoints do not count.
    ProperOnly,
    /// Any common point counts, including shared endpoints.
    AnySharedPoint,
}

/// Exact segment intersection test under the given policy.
pub fn segments_cross(s: &Segment, t: &Segment, policy: CrossPolicy) -> bool {
    let d1 = orientation(&t.a, &t.b, &s.a);
    let d2 = orientation(&t.a, &t.b, &s.b);
    let d3 = orientation(&s.a, &s.b, &t.a);
    let d4 = orientation(&s.a, &s.b, &t.b);

    use Orientation::Collinear;
    if d1 != Collinear && d2 != Collinear && d3 != Collinear && d4 != Collinear {
        // General position: they intersect iff they straddle each other,
        // and any such intersection is a proper crossing.
        return d1 != d2 && d3 != d4;
    }

    // Some collinearity is involved; count endpoint/overlap contacts.
    let shares_endpoint = s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b;
    let touch = (d1 == Collinear && on_segment(&s.a, t))
        || (d2 == Collinear && on_segment(&s.b, t))
        || (d3 == Collinear && on_segment(&t.a, s))
        || (d4 == Collinear && on_segment(&t.b, s));

    match policy {
        CrossPolicy::AnySharedPoint => touch || (d1 != d2 && d3 != d4),
        CrossPolicy::ProperOnly => {
            if !touch {
                return d1 != d2 && d3 != d4;
            }
            // A contact exists. It is proper unless every contact point is a
            // shared endpoint of both segments.
            if !shares_endpoint {
                return true;
            }
            // Shared endpoint: still proper if the segments overlap in more
            // than that point or some other endpoint is interior.
            interior_contact(s, t) || interior_contact(t, s)
        }
    }
}

/// True if an endpoint of `s` lies on `t` without being an endpoint of `t`,
/// i.e. in the relative interior of `t`.
fn interior_contact(s: &Segment, t: &Segment) -> bool {
    for p in [&s.a, &s.b] {
        if *p != t.a && *p != t.b && on_segment(p, t) {
            return true;
        }
    }
    false
}

/// Affine shear `(x, y) -> (x + lambda * y, y)`.
///
/// Determinant one, rational, and it preserves collinearity, convexity and
/// the noncrossing property, which is why constructions run in sheared space
/// instead of a rotated one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShearTransform {
    pub lambda: Scalar,
}

impl ShearTransform {
    pub fn identity() -> Self {
        ShearTransform {
            lambda: Scalar::zero(),
        }
    }

    pub fn new(lambda: Scalar) -> Self {
        ShearTransform { lambda }
    }

    pub fn is_identity(&self) -> bool {
        self.lambda.is_zero()
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(&p.x + &self.lambda * &p.y, p.y.clone())
    }

    pub fn apply_all(&self, pts: &[Point]) -> Vec<Point> {
        pts.iter().map(|p| self.apply(p)).collect()
    }

    pub fn invert(&self, p: &Point) -> Point {
        Point::new(&p.x - &self.lambda * &p.y, p.y.clone())
    }

    pub fn invert_all(&self, pts: &[Point]) -> Vec<Point> {
        pts.iter().map(|p| self.invert(p)).collect()
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("duplicate point {0:?}")]
    DuplicatePoint(Point),
}

/// Finds a shear making all x-coordinates pairwise distinct.
///
/// Returns the identity when the input already has distinct x. Otherwise
/// lambda is a positive rational below half the smallest nonzero |dx/dy|
/// over all point pairs, which avoids every coincidence at once.
pub fn shear_to_distinct_x(points: &[Point]) -> Result<(ShearTransform, Vec<Point>), GeomError> {
    for (i, p) in points.iter().enumerate() {
        for q in &points[..i] {
            if p == q {
                return Err(GeomError::DuplicatePoint(p.clone()));
            }
        }
    }

    let mut distinct = true;
    'outer: for (i, p) in points.iter().enumerate() {
        for q in &points[..i] {
            if p.x == q.x {
                distinct = false;
                break 'outer;
            }
        }
    }
    if distinct {
        let t = ShearTransform::identity();
        return Ok((t, points.to_vec()));
    }

    // Bad lambdas are exactly -dx/dy over pairs with dy != 0. All of them
    // with dx == 0 equal zero, so any positive lambda below the smallest
    // nonzero magnitude is safe.
    let mut min_mag: Option<Scalar> = None;
    for (i, p) in points.iter().enumerate() {
        for q in &points[..i] {
            let dy = &p.y - &q.y;
            if dy.is_zero() {
                continue;
            }
            let dx = &p.x - &q.x;
            if dx.is_zero() {
                continue;
            }
            let mag = (dx / dy).abs();
            if min_mag.as_ref().map_or(true, |m| mag < *m) {
                min_mag = Some(mag);
            }
        }
    }
    let lambda = match min_mag {
        Some(m) => m / scalar(2),
        None => Scalar::one(),
    };
    let t = ShearTransform::new(lambda);
    let image = t.apply_all(points);
    debug_assert!({
        let mut xs: Vec<_> = image.iter().map(|p| p.x.clone()).collect();
        xs.sort();
        xs.windows(2).all(|w| w[0] != w[1])
    });
    Ok((t, image))
}

/// Outcome of [`general_position_report`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PositionReport {
    Ok,
    CollinearTriple(Point, Point, Point),
    /// Two parallel lines, each given by the point pair determining it.
    ParallelLines((Point, Point), (Point, Point)),
    /// Three concurrent lines through pairwise disjoint point pairs.
    ConcurrentLines((Point, Point), (Point, Point), (Point, Point)),
}

impl PositionReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, PositionReport::Ok)
    }
}

/// Which general-position conditions to check. Condition 1 (no collinear
/// triple) is always checked; 2 and 3 are opt-in because of their cost.
#[derive(Clone, Copy, Debug)]
pub struct PositionChecks {
    pub parallel_lines: bool,
    pub concurrent_lines: bool,
}

impl PositionChecks {
    pub fn collinear_only() -> Self {
        PositionChecks {
            parallel_lines: false,
            concurrent_lines: false,
        }
    }

    pub fn all() -> Self {
        PositionChecks {
            parallel_lines: true,
            concurrent_lines: true,
        }
    }
}

/// Canonical direction of the line through two distinct points, normalized so
/// that equal directions hash equally.
fn canonical_dir(p: &Point, q: &Point) -> (BigInt, BigInt) {
    let dx = &q.x - &p.x;
    let dy = &q.y - &p.y;
    // Clear denominators, then reduce.
    let nx = dx.numer() * dy.denom();
    let ny = dy.numer() * dx.denom();
    let g = num::integer::gcd(nx.clone(), ny.clone());
    let (mut nx, mut ny) = if g.is_zero() { (nx, ny) } else { (nx / &g, ny / &g) };
    if ny.is_negative() || (ny.is_zero() && nx.is_negative()) {
        nx = -nx;
        ny = -ny;
    }
    (nx, ny)
}

/// Checks the strengthened general-position conditions and reports the first
/// violation with a witness.
pub fn general_position_report(points: &[Point], checks: PositionChecks) -> PositionReport {
    // Condition 1 via direction hashing: a repeated direction out of a common
    // apex is exactly a collinear triple. O(n^2) instead of O(n^3).
    for (i, p) in points.iter().enumerate() {
        let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
        for (j, q) in points.iter().enumerate().skip(i + 1) {
            if p == q {
                continue;
            }
            let d = canonical_dir(p, q);
            if let Some(&k) = seen.get(&d) {
                return PositionReport::CollinearTriple(
                    p.clone(),
                    points[k].clone(),
                    q.clone(),
                );
            }
            seen.insert(d, j);
        }
    }

    let n = points.len();
    if checks.parallel_lines {
        let mut slopes: HashMap<(BigInt, BigInt), (usize, usize)> = HashMap::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let d = canonical_dir(&points[i], &points[j]);
                if let Some(&(a, b)) = slopes.get(&d) {
                    return PositionReport::ParallelLines(
                        (points[a].clone(), points[b].clone()),
                        (points[i].clone(), points[j].clone()),
                    );
                }
                slopes.insert(d, (i, j));
            }
        }
    }

    if checks.concurrent_lines {
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                pairs.push((i, j));
            }
        }
        let lines: Vec<Line> = pairs
            .iter()
            .map(|&(i, j)| Line::through(&points[i], &points[j]))
            .collect();
        for a in 0..pairs.len() {
            for b in (a + 1)..pairs.len() {
                if !disjoint(pairs[a], pairs[b]) {
                    continue;
                }
                let meet = match lines[a].intersect(&lines[b]) {
                    Some(m) => m,
                    None => continue,
                };
                for c in (b + 1)..pairs.len() {
                    if !disjoint(pairs[a], pairs[c]) || !disjoint(pairs[b], pairs[c]) {
                        continue;
                    }
                    if lines[c].contains(&meet) {
                        let w = |(i, j): (usize, usize)| (points[i].clone(), points[j].clone());
                        return PositionReport::ConcurrentLines(w(pairs[a]), w(pairs[b]), w(pairs[c]));
                    }
                }
            }
        }
    }

    PositionReport::Ok
}

fn disjoint(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
}

/// An (infinite) line through two distinct points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Line {
    pub p: Point,
    pub q: Point,
}

impl Line {
    pub fn through(p: &Point, q: &Point) -> Self {
        assert!(p != q, "degenerate line");
        Line {
            p: p.clone(),
            q: q.clone(),
        }
    }

    pub fn contains(&self, r: &Point) -> bool {
        orientation(&self.p, &self.q, r) == Orientation::Collinear
    }

    pub fn is_vertical(&self) -> bool {
        self.p.x == self.q.x
    }

    /// Slope of a non-vertical line.
    pub fn slope(&self) -> Scalar {
        assert!(!self.is_vertical());
        (&self.q.y - &self.p.y) / (&self.q.x - &self.p.x)
    }

    /// Height of a non-vertical line at abscissa `x`.
    pub fn y_at(&self, x: &Scalar) -> Scalar {
        assert!(!self.is_vertical());
        &self.p.y + self.slope() * (x - &self.p.x)
    }

    /// Intersection point of two lines, or `None` when parallel.
    pub fn intersect(&self, other: &Line) -> Option<Point> {
        let d1 = (&self.q.x - &self.p.x, &self.q.y - &self.p.y);
        let d2 = (&other.q.x - &other.p.x, &other.q.y - &other.p.y);
        let denom = &d1.0 * &d2.1 - &d1.1 * &d2.0;
        if denom.is_zero() {
            return None;
        }
        let w = (&other.p.x - &self.p.x, &other.p.y - &self.p.y);
        let t = (&w.0 * &d2.1 - &w.1 * &d2.0) / denom;
        Some(Point::new(&self.p.x + &t * &d1.0, &self.p.y + &t * &d1.1))
    }
}

/// Exact squared distance from a point to a line.
pub fn dist2_point_line(p: &Point, line: &Line) -> Scalar {
    let c = cross2(&line.p, &line.q, p);
    let len2 = line.p.dist2(&line.q);
    &c * &c / len2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::ints(x, y)
    }

    #[test]
    fn orientation_basics() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(1, 1)), Orientation::Left);
        assert_eq!(
            orientation(&p(0, 0), &p(1, 1), &p(2, 2)),
            Orientation::Collinear
        );
        // On the parabola y = x^2 the cross product is (2)(9) - (4)(3) = 6 > 0.
        assert_eq!(orientation(&p(0, 0), &p(2, 4), &p(3, 9)), Orientation::Left);
    }

    #[test]
    fn orientation_antisymmetric() {
        let (a, b, c) = (p(1, 5), p(-3, 2), p(10, -4));
        assert_eq!(orientation(&a, &b, &c), orientation(&a, &c, &b).reversed());
    }

    #[test]
    fn on_segment_cases() {
        let s = Segment::new(p(0, 0), p(2, 2));
        assert!(on_segment(&p(1, 1), &s));
        assert!(!on_segment(&p(3, 3), &s));
        let t = Segment::new(p(0, 0), p(1, 1));
        assert!(on_segment(
            &Point::new(ratio(1, 3), ratio(1, 3)),
            &t
        ));
    }

    #[test]
    fn segments_cross_cases() {
        let x1 = Segment::new(p(0, 0), p(2, 2));
        let x2 = Segment::new(p(0, 2), p(2, 0));
        assert!(segments_cross(&x1, &x2, CrossPolicy::ProperOnly));
        assert!(segments_cross(&x1, &x2, CrossPolicy::AnySharedPoint));

        let e1 = Segment::new(p(0, 0), p(1, 0));
        let e2 = Segment::new(p(1, 0), p(2, 1));
        assert!(!segments_cross(&e1, &e2, CrossPolicy::ProperOnly));
        assert!(segments_cross(&e1, &e2, CrossPolicy::AnySharedPoint));

        let o1 = Segment::new(p(0, 0), p(4, 0));
        let o2 = Segment::new(p(1, 0), p(2, 0));
        assert!(segments_cross(&o1, &o2, CrossPolicy::ProperOnly));
        assert!(segments_cross(&o1, &o2, CrossPolicy::AnySharedPoint));
    }

    #[test]
    fn segments_cross_symmetry() {
        let cases = [
            (Segment::new(p(0, 0), p(2, 2)), Segment::new(p(0, 2), p(2, 0))),
            (Segment::new(p(0, 0), p(1, 0)), Segment::new(p(1, 0), p(2, 1))),
            (Segment::new(p(0, 0), p(4, 0)), Segment::new(p(1, 0), p(2, 0))),
            (Segment::new(p(0, 0), p(1, 1)), Segment::new(p(5, 5), p(6, 7))),
        ];
        for (s, t) in &cases {
            for policy in [CrossPolicy::ProperOnly, CrossPolicy::AnySharedPoint] {
                assert_eq!(
                    segments_cross(s, t, policy),
                    segments_cross(t, s, policy)
                );
            }
        }
    }

    #[test]
    fn shear_forced_by_vertical_pair() {
        let pts = vec![p(0, 0), p(0, 1)];
        let (t, image) = shear_to_distinct_x(&pts).unwrap();
        assert!(!t.is_identity());
        assert_ne!(image[0].x, image[1].x);
    }

    #[test]
    fn shear_identity_when_distinct() {
        let pts = vec![p(0, 0), p(1, 0), p(2, 5)];
        let (t, image) = shear_to_distinct_x(&pts).unwrap();
        assert!(t.is_identity());
        assert_eq!(image, pts);
    }

    #[test]
    fn shear_roundtrip_exact() {
        let pts = vec![p(0, 0), p(0, 7), p(3, 7), p(3, -2), p(-5, -2)];
        let (t, image) = shear_to_distinct_x(&pts).unwrap();
        assert_eq!(t.invert_all(&image), pts);
    }

    #[test]
    fn shear_preserves_orientation() {
        let t = ShearTransform::new(ratio(3, 7));
        let (a, b, c) = (p(1, 2), p(4, -1), p(-2, 5));
        assert_eq!(
            orientation(&a, &b, &c),
            orientation(&t.apply(&a), &t.apply(&b), &t.apply(&c))
        );
    }

    #[test]
    fn duplicate_point_rejected() {
        let pts = vec![p(1, 1), p(1, 1)];
        assert_eq!(
            shear_to_distinct_x(&pts),
            Err(GeomError::DuplicatePoint(p(1, 1)))
        );
    }

    #[test]
    fn position_report_collinear() {
        let pts = vec![p(0, 0), p(1, 1), p(2, 2), p(5, 0)];
        match general_position_report(&pts, PositionChecks::collinear_only()) {
            PositionReport::CollinearTriple(a, b, c) => {
                for q in [&a, &b, &c] {
                    assert!(orientation(&p(0, 0), &p(1, 1), q) == Orientation::Collinear);
                }
            }
            other => panic!("expected collinear triple, got {other:?}"),
        }
    }

    #[test]
    fn position_report_parallel() {
        let pts = vec![p(0, 0), p(1, 0), p(0, 1), p(1, 1)];
        let report = general_position_report(
            &pts,
            PositionChecks {
                parallel_lines: true,
                concurrent_lines: false,
            },
        );
        assert!(matches!(report, PositionReport::ParallelLines(_, _)));
    }

    #[test]
    fn position_report_sidon_parabola() {
        // Lifting a Sidon set to the parabola: slopes are pairwise sums,
        // all distinct, so conditions (1) and (2) hold.
        let pts: Vec<Point> = [1i64, 2, 5, 11]
            .iter()
            .map(|&v| p(v, v * v))
            .collect();
        let report = general_position_report(
            &pts,
            PositionChecks {
                parallel_lines: true,
                concurrent_lines: false,
            },
        );
        assert!(report.is_ok());
    }

    #[test]
    fn line_intersection() {
        let l1 = Line::through(&p(0, 0), &p(2, 2));
        let l2 = Line::through(&p(0, 2), &p(2, 0));
        assert_eq!(l1.intersect(&l2), Some(p(1, 1)));
        let l3 = Line::through(&p(0, 1), &p(2, 3));
        assert_eq!(l1.intersect(&l3), None);
    }
}
