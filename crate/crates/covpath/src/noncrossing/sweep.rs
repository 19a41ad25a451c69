//! Noncrossing covering path through the interior of a convex region, with
//! prescribed endpoints on the boundary.
//!
//! The points are visited in the order a sweep line rotating about the
//! intersection of the two boundary tangents encounters them; the edges then
//! live in interior-disjoint wedges and cannot cross. Parallel tangents turn
//! the rotation into a translation.

use thiserror::Error;

use crate::covering_path::{PolyPath, VertexTag};
use crate::geom::{cross2, orientation, Orientation, Point, Scalar};
use crate::region::ConvexRegion;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SweepError {
    #[error("interior point {0:?} lies on the region boundary")]
    PointOnBoundary(Point),
    #[error("point {0:?} lies outside the region")]
    PointOutsideRegion(Point),
    #[error("endpoint {0:?} lies strictly inside the region")]
    EndpointInsideRegion(Point),
    #[error("endpoint {0:?} is not on the region boundary")]
    EndpointOffBoundary(Point),
    #[error("endpoints coincide or sit at the tangent intersection")]
    DegenerateEndpoints,
}

/// Covers `points` (strictly inside `region`) by a noncrossing path from `a`
/// to `b` (both on the boundary) with exactly `points.len() + 1` edges.
pub fn sweep_cover(
    points: &[Point],
    region: &ConvexRegion,
    a: (&Point, VertexTag),
    b: (&Point, VertexTag),
) -> Result<PolyPath, SweepError> {
    let order = visit_order(points, region, a.0, b.0)?;
    let mut vs: Vec<(Point, VertexTag)> = Vec::with_capacity(points.len() + 2);
    vs.push((a.0.clone(), a.1));
    for i in order {
        vs.push((points[i].clone(), VertexTag::Input));
    }
    vs.push((b.0.clone(), b.1));
    Ok(PolyPath::new(vs))
}

/// The order in which the rotating sweep visits the points, after checking
/// all the preconditions. The order depends only on the tangent lines, not
/// on where exactly the endpoints sit on them.
pub(crate) fn visit_order(
    points: &[Point],
    region: &ConvexRegion,
    pa: &Point,
    pb: &Point,
) -> Result<Vec<usize>, SweepError> {
    if pa == pb {
        return Err(SweepError::DegenerateEndpoints);
    }
    for (p, which) in [(pa, true), (pb, true)] {
        let _ = which;
        match region.classify(p) {
            crate::region::RegionSide::Boundary => {}
            crate::region::RegionSide::Inside => {
                return Err(SweepError::EndpointInsideRegion(p.clone()))
            }
            crate::region::RegionSide::Outside => {
                return Err(SweepError::EndpointOffBoundary(p.clone()))
            }
        }
    }
    for p in points {
        match region.classify(p) {
            crate::region::RegionSide::Inside => {}
            crate::region::RegionSide::Boundary => {
                return Err(SweepError::PointOnBoundary(p.clone()))
            }
            crate::region::RegionSide::Outside => {
                return Err(SweepError::PointOutsideRegion(p.clone()))
            }
        }
    }

    let tangent_a = region.tangent_at(pa).expect("a is on the boundary");
    let tangent_b = region.tangent_at(pb).expect("b is on the boundary");

    let mut order: Vec<usize> = (0..points.len()).collect();
    match tangent_a.intersect(&tangent_b) {
        None => {
            // Parallel tangents: the sweep line translates from l_a to l_b.
            // Sort by the linear functional vanishing on l_a, oriented so b
            // comes last.
            let d = (
                &tangent_a.q.x - &tangent_a.p.x,
                &tangent_a.q.y - &tangent_a.p.y,
            );
            let f = |p: &Point| -> Scalar {
                &d.0 * (&p.y - &pa.y) - &d.1 * (&p.x - &pa.x)
            };
            let fb = f(pb);
            if fb.is_zero() {
                // Both endpoints on one line: fall back to ordering along it.
                let g = |p: &Point| -> Scalar {
                    (&p.x - &pa.x) * (&pb.x - &pa.x) + (&p.y - &pa.y) * (&pb.y - &pa.y)
                };
                order.sort_by(|&u, &v| g(&points[u]).cmp(&g(&points[v])));
            } else {
                let sign = if fb > Scalar::zero() { 1 } else { -1 };
                let key = |p: &Point| -> (Scalar, Scalar) {
                    let primary = f(p) * crate::geom::scalar(sign);
                    let along = &d.0 * (&p.x - &pa.x) + &d.1 * (&p.y - &pa.y);
                    (primary, along)
                };
                order.sort_by(|&u, &v| key(&points[u]).cmp(&key(&points[v])));
            }
        }
        Some(origin) => {
            if origin == *pa || origin == *pb {
                return Err(SweepError::DegenerateEndpoints);
            }
            if !order.is_empty() {
                // All interior points lie strictly inside the wedge between
                // rays origin->a and origin->b, so the rotation direction is
                // the orientation of any of them relative to origin->a.
                let sweep = orientation(&origin, pa, &points[order[0]]);
                debug_assert!(sweep != Orientation::Collinear);
                debug_assert!(points
                    .iter()
                    .all(|p| orientation(&origin, pa, p) == sweep));
                debug_assert!(points
                    .iter()
                    .all(|p| orientation(&origin, p, pb) == sweep));
                order.sort_by(|&u, &v| {
                    let c = cross2(&origin, &points[u], &points[v]);
                    let ord = c.cmp(&Scalar::zero());
                    let ord = if sweep == Orientation::Left {
                        ord.reverse()
                    } else {
                        ord
                    };
                    // Collinear with the origin: nearer point first.
                    ord.then_with(|| {
                        origin.dist2(&points[u]).cmp(&origin.dist2(&points[v]))
                    })
                });
            }
        }
    }
    Ok(order)
}

use num::Zero;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::scalar;
    use crate::verify::{check_coverage, check_noncrossing_path};

    fn p(x: i64, y: i64) -> Point {
        Point::ints(x, y)
    }

    #[test]
    fn empty_interior_single_segment() {
        let strip = ConvexRegion::strip(&scalar(0), &scalar(10));
        let path = sweep_cover(
            &[],
            &strip,
            (&p(0, 0), VertexTag::Steiner),
            (&p(10, 3), VertexTag::Steiner),
        )
        .unwrap();
        assert_eq!(path.edge_count(), 1);
    }

    #[test]
    fn strip_sweep_is_x_sorted() {
        let strip = ConvexRegion::strip(&scalar(0), &scalar(10));
        let pts = vec![p(5, 7), p(2, -3), p(8, 1), p(3, 12), p(6, -9)];
        let path = sweep_cover(
            &[pts[0].clone(), pts[1].clone(), pts[2].clone(), pts[3].clone(), pts[4].clone()],
            &strip,
            (&p(0, 0), VertexTag::Steiner),
            (&p(10, 0), VertexTag::Steiner),
        )
        .unwrap();
        assert_eq!(path.edge_count(), 6);
        let xs: Vec<_> = path.points().map(|q| q.x.clone()).collect();
        let mut sorted = xs.clone();
        sorted.sort();
        assert_eq!(xs, sorted);
        assert!(check_coverage(&path.edges(), &pts).covers_all());
        assert!(check_noncrossing_path(&path).is_ok());
    }

    #[test]
    fn triangle_with_finite_origin() {
        let tri = ConvexRegion::polygon(&[p(0, 0), p(12, 0), p(12, 12)]);
        let pts = vec![p(8, 2), p(10, 5), p(9, 7)];
        let path = sweep_cover(
            &pts,
            &tri,
            (&p(6, 0), VertexTag::Steiner),
            (&p(12, 9), VertexTag::Steiner),
        )
        .unwrap();
        assert_eq!(path.edge_count(), 4);
        assert!(check_coverage(&path.edges(), &pts).covers_all());
        assert!(check_noncrossing_path(&path).is_ok());
    }

    #[test]
    fn randomized_noncrossing_in_triangle() {
        use crate::instances::random_general_position;
        // Scale random points into the triangle interior x in (1,99),
        // 0 < y < x/2, by construction below the hypotenuse.
        for seed in 0..20 {
            let raw = random_general_position(12, seed, 5000).unwrap();
            // x in [50, 134), y in (0, 12.5]: strictly below the hypotenuse.
            let pts: Vec<Point> = raw
                .iter()
                .map(|q| {
                    Point::new(
                        scalar(50) + &q.x / scalar(60),
                        scalar(1) / scalar(300) + &q.y / scalar(400),
                    )
                })
                .collect();
            let tri = ConvexRegion::polygon(&[p(0, 0), p(200, 0), p(200, 200)]);
            let path = sweep_cover(
                &pts,
                &tri,
                (&p(1, 0), VertexTag::Steiner),
                (&p(200, 100), VertexTag::Steiner),
            );
            let path = match path {
                Ok(p) => p,
                Err(e) => panic!("seed {seed}: {e}"),
            };
            assert!(check_coverage(&path.edges(), &pts).covers_all(), "seed {seed}");
            assert!(check_noncrossing_path(&path).is_ok(), "seed {seed}");
        }
    }

    #[test]
    fn boundary_point_rejected() {
        let strip = ConvexRegion::strip(&scalar(0), &scalar(10));
        let err = sweep_cover(
            &[p(0, 5)],
            &strip,
            (&p(0, 0), VertexTag::Steiner),
            (&p(10, 0), VertexTag::Steiner),
        )
        .unwrap_err();
        assert_eq!(err, SweepError::PointOnBoundary(p(0, 5)));
    }

    #[test]
    fn interior_endpoint_rejected() {
        let strip = ConvexRegion::strip(&scalar(0), &scalar(10));
        let err = sweep_cover(
            &[],
            &strip,
            (&p(5, 0), VertexTag::Steiner),
            (&p(10, 0), VertexTag::Steiner),
        )
        .unwrap_err();
        assert_eq!(err, SweepError::EndpointInsideRegion(p(5, 0)));
    }
}
