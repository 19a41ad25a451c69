//! Convex regions represented as intersections of closed half-planes.
//!
//! The regions appearing in the strip construction are unbounded (slabs,
//! wedges, cells under rays), so a vertex list cannot represent them all. An
//! intersection of half-planes can, and it also makes the boundary queries we
//! need trivial: a point is on the boundary iff it lies on one of the
//! defining lines, and that line is then a supporting line at the point.

use crate::geom::{orientation, Line, Orientation, Point, Scalar};

/// Closed half-plane: everything on or to the left of the directed line
/// `a -> b`.
#[derive(Clone, Debug)]
pub struct HalfPlane {
    pub a: Point,
    pub b: Point,
}

impl HalfPlane {
    pub fn new(a: Point, b: Point) -> Self {
        assert!(a != b, "degenerate half-plane");
        HalfPlane { a, b }
    }

    pub fn side(&self, p: &Point) -> Orientation {
        orientation(&self.a, &self.b, p)
    }

    pub fn line(&self) -> Line {
        Line::through(&self.a, &self.b)
    }
}

/// A convex region given as the intersection of closed half-planes.
#[derive(Clone, Debug)]
pub struct ConvexRegion {
    halfplanes: Vec<HalfPlane>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RegionSide {
    Inside,
    Boundary,
    Outside,
}

impl ConvexRegion {
    pub fn new(halfplanes: Vec<HalfPlane>) -> Self {
        assert!(!halfplanes.is_empty());
        ConvexRegion { halfplanes }
    }

    /// Vertical strip `left < x < right`.
    pub fn strip(left: &Scalar, right: &Scalar) -> Self {
        assert!(left < right);
        let low = Point::new(left.clone(), crate::geom::scalar(0));
        let high = Point::new(left.clone(), crate::geom::scalar(-1));
        let rlow = Point::new(right.clone(), crate::geom::scalar(0));
        let rhigh = Point::new(right.clone(), crate::geom::scalar(1));
        // x > left: left of the downward line; x < right: left of the upward line.
        ConvexRegion::new(vec![HalfPlane::new(low, high), HalfPlane::new(rlow, rhigh)])
    }

    /// A bounded convex polygon with vertices in counterclockwise order.
    pub fn polygon(ccw: &[Point]) -> Self {
        assert!(ccw.len() >= 3);
        let mut hps = Vec::with_capacity(ccw.len());
        for i in 0..ccw.len() {
            let a = ccw[i].clone();
            let b = ccw[(i + 1) % ccw.len()].clone();
            hps.push(HalfPlane::new(a, b));
        }
        ConvexRegion::new(hps)
    }

    pub fn classify(&self, p: &Point) -> RegionSide {
        let mut on_boundary = false;
        for hp in &self.halfplanes {
            match hp.side(p) {
                Orientation::Right => return RegionSide::Outside,
                Orientation::Collinear => on_boundary = true,
                Orientation::Left => {}
            }
        }
        if on_boundary {
            RegionSide::Boundary
        } else {
            RegionSide::Inside
        }
    }

    pub fn contains_strictly(&self, p: &Point) -> bool {
        self.classify(p) == RegionSide::Inside
    }

    pub fn on_boundary(&self, p: &Point) -> bool {
        self.classify(p) == RegionSide::Boundary
    }

    /// A supporting line at a boundary point: any defining line through it.
    pub fn tangent_at(&self, p: &Point) -> Option<Line> {
        if self.classify(p) != RegionSide::Boundary {
            return None;
        }
        self.halfplanes
            .iter()
            .find(|hp| hp.side(p) == Orientation::Collinear)
            .map(|hp| hp.line())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::scalar;

    fn p(x: i64, y: i64) -> Point {
        Point::ints(x, y)
    }

    #[test]
    fn strip_membership() {
        let strip = ConvexRegion::strip(&scalar(0), &scalar(10));
        assert_eq!(strip.classify(&p(5, 100)), RegionSide::Inside);
        assert_eq!(strip.classify(&p(0, -3)), RegionSide::Boundary);
        assert_eq!(strip.classify(&p(11, 0)), RegionSide::Outside);
        let t = strip.tangent_at(&p(0, -3)).unwrap();
        assert!(t.is_vertical());
    }

    #[test]
    fn polygon_membership() {
        let tri = ConvexRegion::polygon(&[p(0, 0), p(4, 0), p(0, 4)]);
        assert_eq!(tri.classify(&p(1, 1)), RegionSide::Inside);
        assert_eq!(tri.classify(&p(2, 0)), RegionSide::Boundary);
        assert_eq!(tri.classify(&p(3, 3)), RegionSide::Outside);
        let t = tri.tangent_at(&p(2, 0)).unwrap();
        assert!(t.contains(&p(0, 0)) && t.contains(&p(4, 0)));
    }
}
