//! Possibly self-crossing covering paths: per-chain subpaths with half the
//! edges, linked together, plus a spanning tail for the leftover points.

use thiserror::Error;

use crate::caps_cups::{self, Chain, Convexity};
use crate::geom::{
    orientation, scalar, shear_to_distinct_x, Line, Orientation, Point, Scalar, Segment,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VertexTag {
    Input,
    Steiner,
}

/// A polygonal path (or cycle) with tagged vertices.
///
/// Construction normalizes the vertex list: consecutive duplicates collapse
/// and a vertex strictly inside the segment of its straight-through
/// neighbors is dropped, so no two consecutive edges are collinear
/// continuations. Dropped input vertices remain covered by the merged edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyPath {
    vertices: Vec<(Point, VertexTag)>,
    closed: bool,
}

impl PolyPath {
    pub fn new(vertices: Vec<(Point, VertexTag)>) -> Self {
        Self::build(vertices, false)
    }

    pub fn new_closed(vertices: Vec<(Point, VertexTag)>) -> Self {
        Self::build(vertices, true)
    }

    fn build(raw: Vec<(Point, VertexTag)>, closed: bool) -> Self {
        let mut vs: Vec<(Point, VertexTag)> = Vec::with_capacity(raw.len());
        for (p, tag) in raw {
            match vs.last_mut() {
                Some((last, last_tag)) if *last == p => {
                    if tag == VertexTag::Input {
                        *last_tag = VertexTag::Input;
                    }
                }
                _ => vs.push((p, tag)),
            }
        }
        if closed && vs.len() > 1 && vs.first().map(|v| &v.0) == vs.last().map(|v| &v.0) {
            vs.pop();
        }
        // Merge straight-through turns.
        loop {
            let n = vs.len();
            if n < 3 {
                break;
            }
            let limit = if closed { n } else { n - 2 };
            let mut removed = false;
            let mut i = 0;
            while i < limit && vs.len() >= 3 {
                let n = vs.len();
                let a = i % n;
                let b = (i + 1) % n;
                let c = (i + 2) % n;
                if !closed && (b == 0 || c == 0) {
                    break;
                }
                if straight_through(&vs[a].0, &vs[b].0, &vs[c].0) {
                    vs.remove(b);
                    removed = true;
                } else {
                    i += 1;
                }
            }
            if !removed {
                break;
            }
        }
        assert!(
            vs.len() >= 2,
            "a path needs at least two distinct vertices"
        );
        PolyPath {
            vertices: vs,
            closed,
        }
    }

    pub fn vertices(&self) -> &[(Point, VertexTag)] {
        &self.vertices
    }

    pub fn points(&self) -> impl Iterator<Item = &Point> {
        self.vertices.iter().map(|(p, _)| p)
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn first(&self) -> &Point {
        &self.vertices[0].0
    }

    pub fn last(&self) -> &Point {
        &self.vertices[self.vertices.len() - 1].0
    }

    pub fn edge_count(&self) -> usize {
        if self.closed {
            self.vertices.len()
        } else {
            self.vertices.len() - 1
        }
    }

    pub fn edges(&self) -> Vec<Segment> {
        let mut out = Vec::with_capacity(self.edge_count());
        for w in self.vertices.windows(2) {
            out.push(Segment::new(w[0].0.clone(), w[1].0.clone()));
        }
        if self.closed {
            out.push(Segment::new(
                self.vertices[self.vertices.len() - 1].0.clone(),
                self.vertices[0].0.clone(),
            ));
        }
        out
    }

    /// Transforms every vertex, preserving tags and orientation.
    pub fn map_points(&self, f: impl Fn(&Point) -> Point) -> PolyPath {
        let vs = self
            .vertices
            .iter()
            .map(|(p, t)| (f(p), *t))
            .collect::<Vec<_>>();
        Self::build(vs, self.closed)
    }

    /// Concatenates paths that share endpoints; consecutive paths must agree
    /// on the junction vertex.
    pub fn concat(parts: &[PolyPath]) -> PolyPath {
        assert!(!parts.is_empty());
        let mut vs: Vec<(Point, VertexTag)> = Vec::new();
        for part in parts {
            assert!(!part.closed);
            if let Some((last, _)) = vs.last() {
                assert_eq!(last, part.first(), "paths do not share a junction");
            }
            for (i, v) in part.vertices.iter().enumerate() {
                if i == 0 && !vs.is_empty() {
                    // Junction vertex already present; input tag wins.
                    if v.1 == VertexTag::Input {
                        vs.last_mut().unwrap().1 = VertexTag::Input;
                    }
                    continue;
                }
                vs.push(v.clone());
            }
        }
        PolyPath::new(vs)
    }

    pub fn reversed(&self) -> PolyPath {
        let mut vs = self.vertices.clone();
        vs.reverse();
        PolyPath {
            vertices: vs,
            closed: self.closed,
        }
    }
}

fn straight_through(a: &Point, b: &Point, c: &Point) -> bool {
    if orientation(a, b, c) != Orientation::Collinear {
        return false;
    }
    // b strictly between a and c along the shared line.
    let dot = (&c.x - &a.x) * (&b.x - &a.x) + (&c.y - &a.y) * (&b.y - &a.y);
    let len2 = a.dist2(c);
    dot > Scalar::zero() && dot < len2
}

use num::Zero;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("chain must have at least 2 points, got {0}")]
    DegenerateChain(usize),
    #[error("empty input")]
    EmptyInput,
}

/// Covering subpath for a cap or cup: the odd chords extended until
/// consecutive ones meet, ceil(k/2) edges in total.
pub fn cover_chain(points: &[Point], chain: &Chain) -> Result<PolyPath, CoverError> {
    let pts = chain.points(points);
    if pts.len() < 2 {
        return Err(CoverError::DegenerateChain(pts.len()));
    }
    let lines = chord_lines(&pts);
    let k = pts.len();
    let mut vs: Vec<(Point, VertexTag)> = Vec::new();
    vs.push((pts[0].clone(), VertexTag::Input));
    for w in lines.windows(2) {
        let q = w[0]
            .intersect(&w[1])
            .expect("consecutive chord slopes differ on a strict chain");
        vs.push((q, VertexTag::Steiner));
    }
    vs.push((pts[k - 1].clone(), VertexTag::Input));
    Ok(PolyPath::new(vs))
}

/// Supporting lines of the path edges: the odd chords, plus the direction of
/// the final chain edge when k is odd. Consecutive lines intersect strictly
/// between the chords they extend.
pub(crate) fn chord_lines(pts: &[Point]) -> Vec<Line> {
    let k = pts.len();
    let mut lines = Vec::new();
    let mut i = 0;
    while i + 1 < k {
        lines.push(Line::through(&pts[i], &pts[i + 1]));
        i += 2;
    }
    if k % 2 == 1 && k >= 3 {
        // Final edge through the last point only, along the last chain edge.
        lines.push(Line::through(&pts[k - 2], &pts[k - 1]));
    }
    lines
}

/// Statistics from a covering-path build, for bound accounting in tests.
#[derive(Clone, Debug, Default)]
pub struct CoverStats {
    pub chain_sizes: Vec<usize>,
    pub leftover_count: usize,
    pub connector_count: usize,
    pub batch_count: usize,
}

impl CoverStats {
    /// The edge budget the construction promises never to exceed.
    pub fn edge_budget(&self) -> usize {
        let chains: usize = self.chain_sizes.iter().map(|k| k.div_ceil(2)).sum();
        chains
            + self.chain_sizes.len()
            + self.leftover_count.saturating_sub(1)
            + 1
    }
}

/// Covering path with n/2 + O(n / log n) segments; possibly self-crossing.
///
/// `batch_exponent`, when set to some eps, slices the x-sorted input into
/// batches of roughly n^(eps/3) points, runs the partition per batch, and
/// carries leftovers forward, trading edge count for much less DP work.
pub fn build_covering_path(
    points: &[Point],
    batch_exponent: Option<Scalar>,
) -> Result<PolyPath, CoverError> {
    build_covering_path_with_stats(points, batch_exponent).map(|(p, _)| p)
}

pub fn build_covering_path_with_stats(
    points: &[Point],
    batch_exponent: Option<Scalar>,
) -> Result<(PolyPath, CoverStats), CoverError> {
    if points.is_empty() {
        return Err(CoverError::EmptyInput);
    }
    if points.len() == 1 {
        let p = points[0].clone();
        let q = Point::new(&p.x + scalar(1), p.y.clone());
        let path = PolyPath::new(vec![(p, VertexTag::Input), (q, VertexTag::Steiner)]);
        return Ok((path, CoverStats::default()));
    }

    let (shear, sheared) = shear_to_distinct_x(points).expect("distinct points");
    let mut order: Vec<usize> = (0..sheared.len()).collect();
    order.sort_by(|&a, &b| sheared[a].x.cmp(&sheared[b].x));

    let n = sheared.len();
    let batch_size = match &batch_exponent {
        None => n,
        Some(eps) => {
            let e = rational_to_f64(eps);
            ((n as f64).powf(e / 3.0).round() as usize).clamp(2, n)
        }
    };

    let mut stats = CoverStats::default();
    let mut subpaths: Vec<PolyPath> = Vec::new();
    let mut carried: Vec<usize> = Vec::new();
    let mut cursor = 0;
    while cursor < n {
        let hi = (cursor + batch_size).min(n);
        let mut batch: Vec<usize> = carried.clone();
        batch.extend_from_slice(&order[cursor..hi]);
        cursor = hi;
        stats.batch_count += 1;

        let batch_pts: Vec<Point> = batch.iter().map(|&i| sheared[i].clone()).collect();
        let threshold = caps_cups::default_threshold(batch_pts.len());
        let part = caps_cups::greedy_partition(&batch_pts, threshold, Convexity::Strict);
        let mut batch_paths = Vec::new();
        for chain in &part.chains {
            stats.chain_sizes.push(chain.len());
            batch_paths.push(cover_chain(&batch_pts, chain)?);
        }
        carried = part.leftovers.iter().map(|&i| batch[i]).collect();
        if !batch_paths.is_empty() {
            subpaths.push(link_paths(&batch_paths, &mut stats));
        }
    }

    // Spanning tail for whatever is left, one point per turn, x-monotone.
    stats.leftover_count = carried.len();
    if !carried.is_empty() {
        carried.sort_by(|&a, &b| sheared[a].x.cmp(&sheared[b].x));
        let tail: Vec<(Point, VertexTag)> = carried
            .iter()
            .map(|&i| (sheared[i].clone(), VertexTag::Input))
            .collect();
        if tail.len() == 1 {
            // A single leftover point gets picked up by a connector.
            if let Some(prev) = subpaths.last_mut() {
                let mut vs = prev.vertices().to_vec();
                vs.push(tail[0].clone());
                *prev = PolyPath::new(vs);
                stats.connector_count += 1;
            } else {
                let p = tail[0].0.clone();
                let q = Point::new(&p.x + scalar(1), p.y.clone());
                subpaths.push(PolyPath::new(vec![
                    (p, VertexTag::Input),
                    (q, VertexTag::Steiner),
                ]));
            }
        } else {
            subpaths.push(PolyPath::new(tail));
            if subpaths.len() > 1 {
                stats.connector_count += 1;
            }
        }
    }

    let linked = link_with_connectors(&subpaths, &mut stats);
    Ok((linked.map_points(|p| shear.invert(p)), stats))
}

fn link_paths(paths: &[PolyPath], stats: &mut CoverStats) -> PolyPath {
    link_with_connectors(paths, stats)
}

/// Joins subpaths end-to-start with one connector segment each.
fn link_with_connectors(paths: &[PolyPath], stats: &mut CoverStats) -> PolyPath {
    assert!(!paths.is_empty());
    let mut vs: Vec<(Point, VertexTag)> = Vec::new();
    for path in paths {
        if !vs.is_empty() {
            stats.connector_count += 1;
        }
        vs.extend(path.vertices().iter().cloned());
    }
    PolyPath::new(vs)
}

fn rational_to_f64(s: &Scalar) -> f64 {
    use num::ToPrimitive;
    s.to_f64().unwrap_or(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps_cups::{longest_cap_cup, Convexity};
    use crate::instances::random_general_position;
    use crate::verify::check_coverage;

    fn parabola(n: i64) -> Vec<Point> {
        (1..=n).map(|i| Point::ints(i, i * i)).collect()
    }

    #[test]
    fn polypath_merges_collinear_runs() {
        let path = PolyPath::new(vec![
            (Point::ints(0, 0), VertexTag::Input),
            (Point::ints(1, 0), VertexTag::Input),
            (Point::ints(2, 0), VertexTag::Input),
            (Point::ints(2, 1), VertexTag::Input),
        ]);
        assert_eq!(path.edge_count(), 2);
    }

    #[test]
    fn cover_chain_four_cup_two_segments() {
        let pts = parabola(4);
        let chain = longest_cap_cup(&pts, Convexity::Strict).unwrap();
        let path = cover_chain(&pts, &chain).unwrap();
        assert_eq!(path.edge_count(), 2);
        assert!(check_coverage(&path.edges(), &pts).covers_all());
    }

    #[test]
    fn cover_chain_18_cap_nine_segments() {
        let pts: Vec<Point> = (1..=18).map(|i| Point::ints(i, -(i * i))).collect();
        let chain = longest_cap_cup(&pts, Convexity::Strict).unwrap();
        assert_eq!(chain.len(), 18);
        let path = cover_chain(&pts, &chain).unwrap();
        assert_eq!(path.edge_count(), 9);
        assert!(check_coverage(&path.edges(), &pts).covers_all());
    }

    #[test]
    fn cover_chain_odd_chain() {
        let pts = parabola(5);
        let chain = longest_cap_cup(&pts, Convexity::Strict).unwrap();
        let path = cover_chain(&pts, &chain).unwrap();
        assert_eq!(path.edge_count(), 3);
        assert!(check_coverage(&path.edges(), &pts).covers_all());
        // The final segment covers only the last point.
        let edges = path.edges();
        let last = &edges[edges.len() - 1];
        let covered: Vec<_> = pts
            .iter()
            .filter(|p| crate::geom::on_segment(p, last))
            .collect();
        assert!(covered.contains(&&pts[4]));
    }

    #[test]
    fn single_point_path() {
        let pts = vec![Point::ints(3, 4)];
        let path = build_covering_path(&pts, None).unwrap();
        assert_eq!(path.edge_count(), 1);
        assert!(check_coverage(&path.edges(), &pts).covers_all());
    }

    #[test]
    fn parabola_single_chain_no_connectors() {
        let pts = parabola(8);
        let (path, stats) = build_covering_path_with_stats(&pts, None).unwrap();
        assert_eq!(path.edge_count(), 4);
        assert_eq!(stats.connector_count, 0);
        assert_eq!(stats.leftover_count, 0);
        assert!(check_coverage(&path.edges(), &pts).covers_all());
    }

    #[test]
    fn random_instances_cover_and_respect_budget() {
        for seed in 0..10 {
            let pts = random_general_position(60, seed, 100_000).unwrap();
            let (path, stats) = build_covering_path_with_stats(&pts, None).unwrap();
            assert!(check_coverage(&path.edges(), &pts).covers_all(), "seed {seed}");
            assert!(
                path.edge_count() <= stats.edge_budget(),
                "seed {seed}: {} > {}",
                path.edge_count(),
                stats.edge_budget()
            );
        }
    }

    #[test]
    fn batch_mode_covers() {
        let pts = random_general_position(150, 9, 1 << 20).unwrap();
        let (path, stats) =
            build_covering_path_with_stats(&pts, Some(crate::geom::ratio(6, 5))).unwrap();
        assert!(stats.batch_count > 1);
        assert!(check_coverage(&path.edges(), &pts).covers_all());
        assert!(path.edge_count() <= stats.edge_budget());
    }
}
