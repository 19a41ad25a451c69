//! Noncrossing covering paths: the rotating sweep, the strip construction,
//! the raster-of-strips builder, and the cycle closure.

pub mod strip;
pub mod sweep;

pub use strip::{
    strip_cover, strip_cover_preliminary, CaseLabel, StripConstruction, StripError, VerticalStrip,
};
pub use sweep::{sweep_cover, SweepError};

use num::Zero;
use thiserror::Error;

use crate::covering_path::{PolyPath, VertexTag};
use crate::geom::{scalar, shear_to_distinct_x, Point, Scalar};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("empty input")]
    EmptyInput,
    #[error("path endpoints cannot be made x-extreme by any shear")]
    EndpointsNotExtreme,
}

/// Per-strip accounting from the raster builder.
#[derive(Clone, Debug)]
pub struct StripStats {
    pub points: usize,
    pub edges: usize,
    pub savings: usize,
    /// True when the strip construction failed (tiny caps or degeneracy) and
    /// the plain wall-to-wall sweep covered the strip instead.
    pub fallback: bool,
    pub labels: Vec<(usize, CaseLabel)>,
}

#[derive(Clone, Debug, Default)]
pub struct NoncrossingStats {
    pub strips: Vec<StripStats>,
    /// One vertical segment per raster line shared by two strips.
    pub join_edges: usize,
    pub trailing_points: usize,
    /// The strip assembly lost to the plain x-monotone spanning path and was
    /// replaced by it.
    pub used_global_fallback: bool,
}

/// Noncrossing covering path with at most n - 1 edges, fewer when the strips
/// contain large caps or cups.
pub fn build_noncrossing_path(
    points: &[Point],
    group_size: usize,
) -> Result<PolyPath, PathError> {
    build_noncrossing_path_with_stats(points, group_size).map(|(p, _)| p)
}

pub fn build_noncrossing_path_with_stats(
    points: &[Point],
    group_size: usize,
) -> Result<(PolyPath, NoncrossingStats), PathError> {
    assert!(group_size >= 1);
    if points.is_empty() {
        return Err(PathError::EmptyInput);
    }
    if points.len() == 1 {
        let p = points[0].clone();
        let q = Point::new(&p.x + scalar(1), p.y.clone());
        let path = PolyPath::new(vec![(p, VertexTag::Input), (q, VertexTag::Steiner)]);
        return Ok((path, NoncrossingStats::default()));
    }

    let (shear, sheared) = shear_to_distinct_x(points).expect("distinct points");
    let mut sorted = sheared.clone();
    sorted.sort_by(|a, b| a.x.cmp(&b.x));
    let n = sorted.len();

    let mut stats = NoncrossingStats::default();
    let candidate = if n <= group_size {
        let strip_bounds = VerticalStrip::around(&sorted);
        let (path, st) = cover_one_strip(&sorted, &strip_bounds);
        stats.strips.push(st);
        path
    } else {
        let full_strips = n / group_size;
        let trailing = n % group_size;
        stats.trailing_points = trailing;

        // Raster lines: r[0] left of everything, r[j] strictly between the
        // groups, r[g] right of the last group (or between it and the
        // trailing block).
        let mut lines: Vec<Scalar> = Vec::with_capacity(full_strips + 1);
        lines.push(&sorted[0].x - scalar(1));
        for j in 1..full_strips {
            let a = &sorted[j * group_size - 1].x;
            let b = &sorted[j * group_size].x;
            lines.push((a + b) / scalar(2));
        }
        if trailing > 0 {
            let a = &sorted[full_strips * group_size - 1].x;
            let b = &sorted[full_strips * group_size].x;
            lines.push((a + b) / scalar(2));
        } else {
            lines.push(&sorted[n - 1].x + scalar(1));
        }

        let mut vertices: Vec<(Point, VertexTag)> = Vec::new();
        for j in 0..full_strips {
            let slice = &sorted[j * group_size..(j + 1) * group_size];
            let bounds = VerticalStrip::new(lines[j].clone(), lines[j + 1].clone());
            let (path, st) = cover_one_strip(slice, &bounds);
            stats.strips.push(st);
            if j > 0 {
                stats.join_edges += 1;
            }
            vertices.extend(path.vertices().iter().cloned());
        }
        if trailing > 0 {
            // X-monotone tail from the last exit point.
            for p in &sorted[full_strips * group_size..] {
                vertices.push((p.clone(), VertexTag::Input));
            }
        }
        PolyPath::new(vertices)
    };

    let final_path = if n >= 2 && candidate.edge_count() > n - 1 {
        stats.used_global_fallback = true;
        x_monotone_path(&sorted)
    } else {
        candidate
    };
    Ok((final_path.map_points(|p| shear.invert(p)), stats))
}

/// Strip construction with the plain sweep as fallback.
fn cover_one_strip(points: &[Point], bounds: &VerticalStrip) -> (PolyPath, StripStats) {
    match strip_cover(points, bounds) {
        Ok((path, cons)) => {
            let st = StripStats {
                points: points.len(),
                edges: path.edge_count(),
                savings: cons.savings,
                fallback: false,
                labels: cons.case_labels.clone(),
            };
            (path, st)
        }
        Err(_) => {
            let path = whole_strip_sweep(points, bounds);
            let st = StripStats {
                points: points.len(),
                edges: path.edge_count(),
                savings: 0,
                fallback: true,
                labels: Vec::new(),
            };
            (path, st)
        }
    }
}

/// Wall-to-wall sweep of a whole strip: n + 1 edges, endpoints on the walls.
fn whole_strip_sweep(points: &[Point], bounds: &VerticalStrip) -> PolyPath {
    let ylo = points
        .iter()
        .map(|p| p.y.clone())
        .min()
        .unwrap_or_else(Scalar::zero);
    let yhi = points
        .iter()
        .map(|p| p.y.clone())
        .max()
        .unwrap_or_else(Scalar::zero);
    let a = Point::new(bounds.left_x.clone(), ylo - scalar(1));
    let b = Point::new(bounds.right_x.clone(), yhi + scalar(1));
    sweep_cover(
        points,
        &bounds.region(),
        (&a, VertexTag::Steiner),
        (&b, VertexTag::Steiner),
    )
    .expect("strip sweep preconditions hold")
}

/// Spanning path in x order; n - 1 edges, no Steiner points.
pub fn x_monotone_path(sorted: &[Point]) -> PolyPath {
    debug_assert!(sorted.windows(2).all(|w| w[0].x < w[1].x));
    PolyPath::new(
        sorted
            .iter()
            .map(|p| (p.clone(), VertexTag::Input))
            .collect(),
    )
}

/// Closes a noncrossing path whose endpoints are x-extreme among its
/// vertices into a simple cycle by one Steiner apex, adding exactly two
/// edges.
pub fn to_cycle(path: &PolyPath) -> Result<PolyPath, PathError> {
    assert!(!path.is_closed());
    let vs = path.vertices();
    let first = path.first().clone();
    let last = path.last().clone();

    // Find a shear making both endpoints strictly x-extreme: every other
    // vertex v must satisfy first < v < last in sheared x. Each vertex gives
    // open half-line constraints on lambda.
    let mut lo: Option<Scalar> = None;
    let mut hi: Option<Scalar> = None;
    let mut update = |c: Scalar, d: Scalar| -> bool {
        // Constraint c + lambda * d > 0.
        if d.is_zero() {
            return c > Scalar::zero();
        }
        let bound = -&c / &d;
        if d > Scalar::zero() {
            if lo.as_ref().map_or(true, |cur| bound > *cur) {
                lo = Some(bound);
            }
        } else if hi.as_ref().map_or(true, |cur| bound < *cur) {
            hi = Some(bound);
        }
        true
    };
    for (i, (v, _)) in vs.iter().enumerate() {
        if i != 0 {
            let ok = update(&v.x - &first.x, &v.y - &first.y);
            if !ok {
                return Err(PathError::EndpointsNotExtreme);
            }
        }
        if i != vs.len() - 1 {
            let ok = update(&last.x - &v.x, &last.y - &v.y);
            if !ok {
                return Err(PathError::EndpointsNotExtreme);
            }
        }
    }
    let lambda = match (&lo, &hi) {
        (Some(a), Some(b)) if a >= b => return Err(PathError::EndpointsNotExtreme),
        (Some(a), Some(b)) => {
            if *a < Scalar::zero() && *b > Scalar::zero() {
                Scalar::zero()
            } else {
                (a + b) / scalar(2)
            }
        }
        (Some(a), None) => {
            if *a < Scalar::zero() {
                Scalar::zero()
            } else {
                a + scalar(1)
            }
        }
        (None, Some(b)) => {
            if *b > Scalar::zero() {
                Scalar::zero()
            } else {
                b - scalar(1)
            }
        }
        (None, None) => Scalar::zero(),
    };

    let shear = crate::geom::ShearTransform::new(lambda);
    let sheared: Vec<Point> = vs.iter().map(|(v, _)| shear.apply(v)).collect();
    let sl = &sheared[0];
    let sr = &sheared[sheared.len() - 1];

    let mut y_max = sl.y.clone();
    let mut y_min = sl.y.clone();
    let mut x2: Option<Scalar> = None; // smallest interior x
    let mut x3: Option<Scalar> = None; // largest interior x
    for (i, v) in sheared.iter().enumerate() {
        if v.y > y_max {
            y_max = v.y.clone();
        }
        if v.y < y_min {
            y_min = v.y.clone();
        }
        if i != 0 && i != sheared.len() - 1 {
            if x2.as_ref().map_or(true, |c| v.x < *c) {
                x2 = Some(v.x.clone());
            }
            if x3.as_ref().map_or(true, |c| v.x > *c) {
                x3 = Some(v.x.clone());
            }
        }
    }
    let span = &sr.x - &sl.x;
    debug_assert!(span > Scalar::zero());
    let d_left = x2.map(|x| x - &sl.x).unwrap_or_else(|| span.clone());
    let d_right = x3.map(|x| &sr.x - x).unwrap_or_else(|| span.clone());
    let d = if d_left < d_right { d_left } else { d_right };
    debug_assert!(d > Scalar::zero());

    // Steep enough that both closing edges clear y_max before any other
    // vertex's abscissa, and rise monotonically after that.
    let reach = &y_max + scalar(1) - &y_min;
    let slope = reach / d + scalar(1);
    let apex_x = (&sl.x + &sr.x) / scalar(2);
    let apex_y = &y_max + scalar(1) + slope * (&span / scalar(2));
    let apex = shear.invert(&Point::new(apex_x, apex_y));

    let mut cycle_vs = vs.to_vec();
    cycle_vs.push((apex, VertexTag::Steiner));
    Ok(PolyPath::new_closed(cycle_vs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{planted_cap_strip, random_general_position};
    use crate::verify::{check_coverage, check_noncrossing_path};

    fn assert_good(path: &PolyPath, pts: &[Point]) {
        assert!(check_coverage(&path.edges(), pts).covers_all(), "coverage");
        assert!(
            check_noncrossing_path(path).is_ok(),
            "crossing: {:?}",
            check_noncrossing_path(path).err()
        );
    }

    #[test]
    fn small_inputs() {
        let pts = vec![Point::ints(3, 5)];
        let path = build_noncrossing_path(&pts, 36).unwrap();
        assert_eq!(path.edge_count(), 1);

        let pts = vec![Point::ints(0, 0), Point::ints(4, 2)];
        let path = build_noncrossing_path(&pts, 36).unwrap();
        assert_eq!(path.edge_count(), 1);
        assert_good(&path, &pts);
    }

    #[test]
    fn bound_never_exceeds_n_minus_one() {
        for seed in 0..15 {
            let n = 5 + (seed as usize % 40);
            let pts = random_general_position(n, 900 + seed, 1 << 16).unwrap();
            let (path, _) = build_noncrossing_path_with_stats(&pts, 12).unwrap();
            assert!(
                path.edge_count() <= n - 1,
                "seed {seed}: {} > {}",
                path.edge_count(),
                n - 1
            );
            assert_good(&path, &pts);
        }
    }

    #[test]
    fn planted_three_strips() {
        // Three blocks of 36 points, each with a planted 18-cap, shifted so
        // the blocks are x-disjoint.
        let block = planted_cap_strip(36, 18);
        let mut pts = Vec::new();
        for b in 0..3 {
            let dx = scalar(1000 * b);
            pts.extend(
                block
                    .iter()
                    .map(|p| Point::new(&p.x + &dx, p.y.clone())),
            );
        }
        let (path, stats) = build_noncrossing_path_with_stats(&pts, 36).unwrap();
        assert_eq!(stats.strips.len(), 3);
        for st in &stats.strips {
            assert!(!st.fallback);
            assert_eq!(st.savings, 3);
            assert_eq!(st.edges, 34);
        }
        assert_eq!(stats.join_edges, 2);
        assert_eq!(path.edge_count(), 3 * 34 + 2);
        assert!(path.edge_count() <= pts.len() - 1);
        assert_good(&path, &pts);
    }

    #[test]
    fn trailing_points_use_monotone_tail() {
        let block = planted_cap_strip(36, 18);
        let mut pts = block.clone();
        for (i, extra) in random_general_position(7, 77, 1000)
            .unwrap()
            .into_iter()
            .enumerate()
        {
            pts.push(Point::new(extra.x + scalar(5000 + 10 * i as i64), extra.y));
        }
        let (path, stats) = build_noncrossing_path_with_stats(&pts, 36).unwrap();
        assert_eq!(stats.trailing_points, 7);
        assert_good(&path, &pts);
        assert!(path.edge_count() <= pts.len() - 1);
    }

    #[test]
    fn cycle_from_two_points() {
        let pts = vec![Point::ints(0, 0), Point::ints(5, 1)];
        let path = build_noncrossing_path(&pts, 36).unwrap();
        let cycle = to_cycle(&path).unwrap();
        assert!(cycle.is_closed());
        assert_eq!(cycle.edge_count(), 3);
        assert!(check_noncrossing_path(&cycle).is_ok());
        assert!(check_coverage(&cycle.edges(), &pts).covers_all());
    }

    #[test]
    fn cycle_on_figure_instance() {
        let pts = planted_cap_strip(36, 18);
        let (path, _) = build_noncrossing_path_with_stats(&pts, 36).unwrap();
        let cycle = to_cycle(&path).unwrap();
        assert_eq!(cycle.edge_count(), path.edge_count() + 2);
        assert!(check_noncrossing_path(&cycle).is_ok());
        assert!(check_coverage(&cycle.edges(), &pts).covers_all());
    }

    #[test]
    fn cycle_after_shearing() {
        // Vertical pair forces a nonzero shear in the builder; the cycle
        // feasibility search must cope with the unsheared coordinates.
        let pts = vec![
            Point::ints(0, 0),
            Point::ints(0, 7),
            Point::ints(3, 2),
            Point::ints(5, 9),
            Point::ints(8, 4),
        ];
        let path = build_noncrossing_path(&pts, 36).unwrap();
        let cycle = to_cycle(&path).unwrap();
        assert_eq!(cycle.edge_count(), path.edge_count() + 2);
        assert!(check_noncrossing_path(&cycle).is_ok());
    }

    #[test]
    fn random_cycles_stay_simple() {
        for seed in 0..10 {
            let pts = random_general_position(30, 40 + seed, 1 << 14).unwrap();
            let path = build_noncrossing_path(&pts, 12).unwrap();
            let cycle = to_cycle(&path).unwrap();
            assert_eq!(cycle.edge_count(), path.edge_count() + 2);
            assert!(check_noncrossing_path(&cycle).is_ok(), "seed {seed}");
            assert!(check_coverage(&cycle.edges(), &pts).covers_all(), "seed {seed}");
        }
    }
}
