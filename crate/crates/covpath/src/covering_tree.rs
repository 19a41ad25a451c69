//! Noncrossing covering trees: the 7-point-group star tree, the
//! minimum-segment tree built from hull-edge extensions, and the trivial
//! star.

use std::collections::HashMap;

use thiserror::Error;

use crate::caps_cups::{longest_cap_cup, Convexity};
use crate::covering_path::VertexTag;
use crate::geom::{
    on_segment, orientation, scalar, shear_to_distinct_x, Line, Orientation, Point, Scalar,
    Segment,
};

/// A tree drawn with straight-line edges; input points may sit at vertices or
/// anywhere on an edge.
#[derive(Clone, Debug)]
pub struct PlaneTree {
    pub vertices: Vec<(Point, VertexTag)>,
    pub edges: Vec<(usize, usize)>,
}

impl PlaneTree {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn segments(&self) -> Vec<Segment> {
        self.edges
            .iter()
            .map(|&(a, b)| Segment::new(self.vertices[a].0.clone(), self.vertices[b].0.clone()))
            .collect()
    }

    pub fn is_connected_acyclic(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        if self.edges.len() + 1 != n {
            return false;
        }
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(dsu: &mut Vec<usize>, mut x: usize) -> usize {
            while dsu[x] != x {
                dsu[x] = dsu[dsu[x]];
                x = dsu[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
            if ra == rb {
                return false;
            }
            dsu[ra] = rb;
        }
        true
    }

    fn push_vertex(&mut self, p: Point, tag: VertexTag) -> usize {
        for (i, (q, t)) in self.vertices.iter_mut().enumerate() {
            if *q == p {
                if tag == VertexTag::Input {
                    *t = VertexTag::Input;
                }
                return i;
            }
        }
        self.vertices.push((p, tag));
        self.vertices.len() - 1
    }

    fn push_edge(&mut self, a: usize, b: usize) {
        assert_ne!(a, b);
        self.edges.push((a, b));
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("no hull edge extension can reach the existing tree")]
    NoTreeHit,
}

/// Covering tree with at most floor(5n/6) edges: groups of seven consecutive
/// points (sharing boundary points) each covered by a five-edge star.
pub fn seven_group_tree(points: &[Point]) -> PlaneTree {
    assert!(!points.is_empty());
    let (shear, sheared) = shear_to_distinct_x(points).expect("distinct points");
    let mut order: Vec<usize> = (0..sheared.len()).collect();
    order.sort_by(|&a, &b| sheared[a].x.cmp(&sheared[b].x));
    let sorted: Vec<Point> = order.iter().map(|&i| sheared[i].clone()).collect();

    let mut tree = PlaneTree {
        vertices: Vec::new(),
        edges: Vec::new(),
    };
    let n = sorted.len();
    if n == 1 {
        tree.push_vertex(sorted[0].clone(), VertexTag::Input);
        return unshear_tree(tree, &shear);
    }

    let mut start = 0;
    while start + 6 < n {
        let group = &sorted[start..start + 7];
        add_group_star(&mut tree, group);
        start += 6;
    }
    if start < n - 1 {
        // Trailing group of fewer than 7 points: a star rooted at the shared
        // boundary point.
        let root = tree.push_vertex(sorted[start].clone(), VertexTag::Input);
        add_star_edges(&mut tree, root, &sorted[start + 1..]);
    } else if tree.vertices.is_empty() {
        tree.push_vertex(sorted[0].clone(), VertexTag::Input);
    }
    unshear_tree(tree, &shear)
}

fn unshear_tree(tree: PlaneTree, shear: &crate::geom::ShearTransform) -> PlaneTree {
    PlaneTree {
        vertices: tree
            .vertices
            .into_iter()
            .map(|(p, t)| (shear.invert(&p), t))
            .collect(),
        edges: tree.edges,
    }
}

/// Five-edge star covering seven points: a 4-cap or 4-cup a,b,c,d gives two
/// 2-point edges through the center v = line(ab) ^ line(cd), and the other
/// three points hang off v directly.
fn add_group_star(tree: &mut PlaneTree, group: &[Point]) {
    debug_assert_eq!(group.len(), 7);
    let chain = longest_cap_cup(group, Convexity::Strict).expect("seven points");
    let center = if chain.len() >= 4 {
        let a = &group[chain.indices[0]];
        let b = &group[chain.indices[1]];
        let c = &group[chain.indices[2]];
        let d = &group[chain.indices[3]];
        Line::through(a, b).intersect(&Line::through(c, d))
    } else {
        None
    };
    match center {
        Some(v) => {
            debug_assert!(
                group[chain.indices[1]].x < v.x && v.x < group[chain.indices[2]].x,
                "star center must fall between the chain's middle points"
            );
            let vid = tree.push_vertex(v.clone(), VertexTag::Steiner);
            let covered: [usize; 4] = [
                chain.indices[0],
                chain.indices[1],
                chain.indices[2],
                chain.indices[3],
            ];
            // Edge through {a, b}: from v out to a, passing through b.
            let aid = tree.push_vertex(group[covered[0]].clone(), VertexTag::Input);
            tree.push_edge(vid, aid);
            let did = tree.push_vertex(group[covered[3]].clone(), VertexTag::Input);
            tree.push_edge(vid, did);
            let rest: Vec<Point> = (0..7)
                .filter(|i| !covered.contains(i))
                .map(|i| group[i].clone())
                .collect();
            add_star_edges(tree, vid, &rest);
        }
        None => {
            // Degenerate group (weak position): plain star from the first
            // point, six edges. Only reachable on non-general inputs.
            let root = tree.push_vertex(group[0].clone(), VertexTag::Input);
            add_star_edges(tree, root, &group[1..]);
        }
    }
}

/// Adds edges from `root` to each point, merging collinear same-side edges
/// into the single farthest one.
fn add_star_edges(tree: &mut PlaneTree, root: usize, points: &[Point]) {
    let rp = tree.vertices[root].0.clone();
    let mut by_dir: HashMap<(num::BigInt, num::BigInt), Vec<Point>> = HashMap::new();
    let mut dirs_in_order = Vec::new();
    for p in points {
        if *p == rp {
            continue;
        }
        let d = same_side_dir(&rp, p);
        let bucket = by_dir.entry(d.clone()).or_default();
        if bucket.is_empty() {
            dirs_in_order.push(d);
        }
        bucket.push(p.clone());
    }
    for d in dirs_in_order {
        let bucket = &by_dir[&d];
        let far = bucket
            .iter()
            .max_by(|a, b| rp.dist2(a).cmp(&rp.dist2(b)))
            .unwrap();
        let fid = tree.push_vertex(far.clone(), VertexTag::Input);
        tree.push_edge(root, fid);
    }
}

/// Direction from `from` to `to`, reduced, keeping the side (no sign
/// normalization across opposite rays).
fn same_side_dir(from: &Point, to: &Point) -> (num::BigInt, num::BigInt) {
    let dx = &to.x - &from.x;
    let dy = &to.y - &from.y;
    let nx = dx.numer() * dy.denom();
    let ny = dy.numer() * dx.denom();
    let g = num::integer::gcd(nx.clone(), ny.clone());
    if num::Zero::is_zero(&g) {
        (nx, ny)
    } else {
        (nx / &g, ny / &g)
    }
}

/// Trivial star rooted at the first point; n-1 edges unless collinear merges
/// apply.
pub fn star_tree(points: &[Point]) -> PlaneTree {
    assert!(!points.is_empty());
    let mut tree = PlaneTree {
        vertices: Vec::new(),
        edges: Vec::new(),
    };
    let root = tree.push_vertex(points[0].clone(), VertexTag::Input);
    add_star_edges(&mut tree, root, &points[1..]);
    tree
}

/// Covering tree minimizing merged segments: repeatedly extend a hull edge of
/// the residual set; the first segment is stretched over every pair-line
/// crossing so later extensions always reach the tree.
pub fn min_segment_tree(points: &[Point]) -> Result<PlaneTree, TreeError> {
    let n = points.len();
    if n < 2 {
        return Err(TreeError::TooFewPoints { needed: 2, got: n });
    }
    let mut tree = PlaneTree {
        vertices: Vec::new(),
        edges: Vec::new(),
    };
    if n <= 4 {
        // A spanning x-monotone path: n-1 segments, noncrossing.
        let (_shear, sheared) = shear_to_distinct_x(points).expect("distinct points");
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sheared[a].x.cmp(&sheared[b].x));
        let mut prev: Option<usize> = None;
        for &i in &order {
            let vid = tree.push_vertex(points[i].clone(), VertexTag::Input);
            if let Some(p) = prev {
                tree.push_edge(p, vid);
            }
            prev = Some(vid);
        }
        return Ok(tree);
    }

    let hull = convex_hull(points);
    let (h0, h1) = first_hull_edge(&hull);
    let trunk_line = Line::through(&h0, &h1);
    let mut residual: Vec<Point> = points
        .iter()
        .filter(|p| !trunk_line.contains(p))
        .cloned()
        .collect();

    // Stretch the trunk over every crossing with a residual pair-line, so
    // every later hull-edge extension meets it.
    let mut params: Vec<Scalar> = Vec::new();
    let dir = (&h1.x - &h0.x, &h1.y - &h0.y);
    let len2 = h0.dist2(&h1);
    let push_param = |p: &Point, params: &mut Vec<Scalar>| {
        let t = ((&p.x - &h0.x) * &dir.0 + (&p.y - &h0.y) * &dir.1) / &len2;
        params.push(t);
    };
    for p in points.iter().filter(|p| trunk_line.contains(p)) {
        push_param(p, &mut params);
    }
    for i in 0..residual.len() {
        for j in (i + 1)..residual.len() {
            let l = Line::through(&residual[i], &residual[j]);
            if let Some(z) = trunk_line.intersect(&l) {
                push_param(&z, &mut params);
            }
        }
    }
    let tmin = params.iter().min().unwrap().clone();
    let tmax = params.iter().max().unwrap().clone();
    let ends = [
        point_along(&h0, &dir, &(tmin - scalar(1))),
        point_along(&h0, &dir, &(tmax + scalar(1))),
    ];
    let e0 = tree.push_vertex(ends[0].clone(), VertexTag::Steiner);
    let e1 = tree.push_vertex(ends[1].clone(), VertexTag::Steiner);
    tree.push_edge(e0, e1);

    while residual.len() >= 2 {
        if all_collinear(&residual) {
            // One segment through all of them, plus a connector when their
            // line is parallel to the trunk.
            finish_collinear_residual(&mut tree, &residual, &trunk_line)?;
            residual.clear();
            break;
        }
        let hull_r = convex_hull(&residual);
        let (a, b) = pick_extension_edge(&hull_r, &trunk_line);
        let seg_line = Line::through(&a, &b);
        let on_line: Vec<Point> = residual.iter().filter(|p| seg_line.contains(p)).cloned().collect();
        residual.retain(|p| !seg_line.contains(p));
        attach_extension(&mut tree, &a, &b, &on_line)?;
    }
    if residual.len() == 1 {
        let w = residual.pop().unwrap();
        attach_lone_point(&mut tree, &w)?;
    }
    Ok(tree)
}

fn point_along(origin: &Point, dir: &(Scalar, Scalar), t: &Scalar) -> Point {
    Point::new(&origin.x + t * &dir.0, &origin.y + t * &dir.1)
}

fn all_collinear(pts: &[Point]) -> bool {
    if pts.len() < 3 {
        return true;
    }
    let line = Line::through(&pts[0], &pts[1]);
    pts.iter().all(|p| line.contains(p))
}

/// Residual entirely on one line: one segment through it, plus (when that
/// line is parallel to every tree segment it could reach) a short connector.
fn finish_collinear_residual(
    tree: &mut PlaneTree,
    residual: &[Point],
    trunk_line: &Line,
) -> Result<(), TreeError> {
    let mut pts = residual.to_vec();
    pts.sort();
    let far_a = pts.first().unwrap().clone();
    let far_b = pts.last().unwrap().clone();
    if pts.len() == 1 {
        return attach_lone_point(tree, &far_a);
    }
    let res_line = Line::through(&far_a, &far_b);
    match res_line.intersect(trunk_line) {
        Some(_) => {
            // Extend toward the trunk until the first hit.
            attach_extension(tree, &far_a, &far_b, &pts)
        }
        None => {
            let snapshot = tree.edges.clone();
            let aid = tree.push_vertex(far_a.clone(), VertexTag::Input);
            let bid = tree.push_vertex(far_b.clone(), VertexTag::Input);
            tree.push_edge(aid, bid);
            let aim = interior_vertex_point(tree, 0);
            let hit =
                first_tree_hit_from(tree, &far_a, &aim, &snapshot).ok_or(TreeError::NoTreeHit)?;
            let hid = split_at(tree, hit);
            tree.push_edge(aid, hid);
            Ok(())
        }
    }
}

fn interior_vertex_point(tree: &PlaneTree, edge_idx: usize) -> Point {
    let (a, b) = tree.edges[edge_idx];
    let pa = &tree.vertices[a].0;
    let pb = &tree.vertices[b].0;
    Point::new(
        (&pa.x + &pb.x) / scalar(2),
        (&pa.y + &pb.y) / scalar(2),
    )
}

/// Lexicographically smallest pair spanning a residual hull edge not parallel
/// to the trunk.
fn pick_extension_edge(hull: &[Point], trunk_line: &Line) -> (Point, Point) {
    let m = hull.len();
    if m == 1 {
        unreachable!("caller handles single points");
    }
    let mut candidates = Vec::new();
    for i in 0..m {
        let a = hull[i].clone();
        let b = hull[(i + 1) % m].clone();
        if a == b {
            continue;
        }
        if Line::through(&a, &b).intersect(trunk_line).is_some() {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            candidates.push((lo, hi));
        }
        if m == 2 {
            break;
        }
    }
    candidates.sort();
    candidates
        .into_iter()
        .next()
        .expect("non-collinear residual has a non-parallel hull edge")
}

/// Places the segment through `a`, `b` (covering `on_line`), extended toward
/// the trunk until the first contact with the existing tree.
fn attach_extension(
    tree: &mut PlaneTree,
    a: &Point,
    b: &Point,
    on_line: &[Point],
) -> Result<(), TreeError> {
    let edges_snapshot: Vec<(usize, usize)> = tree.edges.clone();
    // Try extending beyond b first, then beyond a; one of them must reach the
    // tree because the trunk spans every pair-line crossing.
    for (from, to) in [(a, b), (b, a)] {
        if let Some(hit) = first_tree_hit(tree, from, to, &edges_snapshot) {
            let hid = split_at(tree, hit);
            let far = farthest_on_line(from, to, on_line, &tree.vertices[hid].0);
            let fid = tree.push_vertex(far, VertexTag::Input);
            if fid != hid {
                tree.push_edge(fid, hid);
            }
            return Ok(());
        }
    }
    Err(TreeError::NoTreeHit)
}

/// The covered point farthest from the hit, so the single edge covers all of
/// `on_line`.
fn farthest_on_line(a: &Point, b: &Point, on_line: &[Point], hit: &Point) -> Point {
    on_line
        .iter()
        .chain([a, b])
        .max_by(|p, q| hit.dist2(p).cmp(&hit.dist2(q)))
        .unwrap()
        .clone()
}

/// First intersection of the ray `from -> beyond to` with the tree, scanning
/// past `to`. Returns the hit location.
fn first_tree_hit(
    tree: &PlaneTree,
    from: &Point,
    to: &Point,
    edges: &[(usize, usize)],
) -> Option<TreeHit> {
    let dir = (&to.x - &from.x, &to.y - &from.y);
    let ray_line = Line::through(from, to);
    let base = ((&to.x - &from.x) * &dir.0 + (&to.y - &from.y) * &dir.1).clone();
    let mut best: Option<(Scalar, TreeHit)> = None;
    for (idx, &(u, v)) in edges.iter().enumerate() {
        let pu = &tree.vertices[u].0;
        let pv = &tree.vertices[v].0;
        let seg_line = Line::through(pu, pv);
        let z = match ray_line.intersect(&seg_line) {
            Some(z) => z,
            None => continue,
        };
        if !on_segment(&z, &Segment::new(pu.clone(), pv.clone())) {
            continue;
        }
        let t = (&z.x - &from.x) * &dir.0 + (&z.y - &from.y) * &dir.1;
        if t <= base {
            continue; // Behind or inside the covered stretch.
        }
        if best.as_ref().map_or(true, |(bt, _)| t < *bt) {
            let hit = TreeHit {
                edge: idx,
                at: z.clone(),
            };
            best = Some((t, hit));
        }
    }
    best.map(|(_, h)| h)
}

struct TreeHit {
    edge: usize,
    at: Point,
}

/// Splits the hit edge at the contact point if needed and returns the vertex
/// id of the contact.
fn split_at(tree: &mut PlaneTree, hit: TreeHit) -> usize {
    let (u, v) = tree.edges[hit.edge];
    if tree.vertices[u].0 == hit.at {
        return u;
    }
    if tree.vertices[v].0 == hit.at {
        return v;
    }
    let mid = tree.push_vertex(hit.at, VertexTag::Steiner);
    tree.edges[hit.edge] = (u, mid);
    tree.push_edge(mid, v);
    mid
}

fn attach_lone_point(tree: &mut PlaneTree, w: &Point) -> Result<(), TreeError> {
    // Aim at an interior point of the trunk; the first hit along the way
    // keeps the tree noncrossing.
    let snapshot = tree.edges.clone();
    for edge_idx in 0..snapshot.len() {
        let aim = interior_vertex_point(tree, edge_idx);
        if aim == *w {
            continue;
        }
        if let Some(hit) = first_tree_hit_from(tree, w, &aim, &snapshot) {
            let hid = split_at(tree, hit);
            let wid = tree.push_vertex(w.clone(), VertexTag::Input);
            if wid != hid {
                tree.push_edge(wid, hid);
            }
            return Ok(());
        }
    }
    Err(TreeError::NoTreeHit)
}

/// First tree intersection strictly after `from` in the direction of `aim`.
fn first_tree_hit_from(
    tree: &PlaneTree,
    from: &Point,
    aim: &Point,
    edges: &[(usize, usize)],
) -> Option<TreeHit> {
    let dir = (&aim.x - &from.x, &aim.y - &from.y);
    let ray_line = Line::through(from, aim);
    let mut best: Option<(Scalar, TreeHit)> = None;
    for (idx, &(u, v)) in edges.iter().enumerate() {
        let pu = &tree.vertices[u].0;
        let pv = &tree.vertices[v].0;
        let seg_line = Line::through(pu, pv);
        let z = match ray_line.intersect(&seg_line) {
            Some(z) => z,
            None => continue,
        };
        if !on_segment(&z, &Segment::new(pu.clone(), pv.clone())) {
            continue;
        }
        let t = (&z.x - &from.x) * &dir.0 + (&z.y - &from.y) * &dir.1;
        if t <= Scalar::zero() {
            continue;
        }
        if best.as_ref().map_or(true, |(bt, _)| t < *bt) {
            best = Some((t, TreeHit { edge: idx, at: z }));
        }
    }
    best.map(|(_, h)| h)
}

use num::Zero;

/// Convex hull, counterclockwise, collinear points dropped. Returns the two
/// endpoints when all points are collinear.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && orientation(&lower[lower.len() - 2], &lower[lower.len() - 1], p)
                != Orientation::Left
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orientation(&upper[upper.len() - 2], &upper[upper.len() - 1], p)
                != Orientation::Left
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Lexicographically smallest hull edge.
fn first_hull_edge(hull: &[Point]) -> (Point, Point) {
    let m = hull.len();
    assert!(m >= 2);
    let mut best: Option<(Point, Point)> = None;
    for i in 0..m {
        let a = hull[i].clone();
        let b = hull[(i + 1) % m].clone();
        if a == b {
            continue;
        }
        let cand = if a <= b { (a, b) } else { (b, a) };
        if best.as_ref().map_or(true, |cur| cand < *cur) {
            best = Some(cand);
        }
        if m == 2 {
            break;
        }
    }
    best.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::random_general_position;
    use crate::verify::{check_coverage, check_noncrossing_tree, count_tree_segments};

    fn verify_tree(tree: &PlaneTree, pts: &[Point]) {
        assert!(tree.is_connected_acyclic(), "tree not connected/acyclic");
        assert!(
            check_coverage(&tree.segments(), pts).covers_all(),
            "tree coverage failed"
        );
        assert!(
            check_noncrossing_tree(tree).is_ok(),
            "tree crossing: {:?}",
            check_noncrossing_tree(tree)
        );
    }

    #[test]
    fn seven_points_five_edges() {
        let pts = random_general_position(7, 3, 500).unwrap();
        let tree = seven_group_tree(&pts);
        assert_eq!(tree.edge_count(), 5);
        verify_tree(&tree, &pts);
    }

    #[test]
    fn thirteen_points_two_stars() {
        let pts = random_general_position(13, 11, 2000).unwrap();
        let tree = seven_group_tree(&pts);
        assert!(tree.edge_count() <= 10, "got {}", tree.edge_count());
        verify_tree(&tree, &pts);
    }

    #[test]
    fn seven_group_tree_bound_various_sizes() {
        for (n, seed) in [(1usize, 0u64), (2, 1), (5, 2), (6, 3), (20, 4), (50, 5)] {
            let pts = random_general_position(n, seed, 100_000).unwrap();
            let tree = seven_group_tree(&pts);
            assert!(
                tree.edge_count() <= 5 * n / 6 || n < 2,
                "n={n}: {} > {}",
                tree.edge_count(),
                5 * n / 6
            );
            if n >= 2 {
                verify_tree(&tree, &pts);
            }
        }
    }

    #[test]
    fn star_tree_basics() {
        let pts = vec![Point::ints(0, 0), Point::ints(2, 3)];
        assert_eq!(star_tree(&pts).edge_count(), 1);

        let pts = random_general_position(5, 8, 100).unwrap();
        let tree = star_tree(&pts);
        assert_eq!(tree.edge_count(), 4);
        verify_tree(&tree, &pts);
    }

    #[test]
    fn star_tree_merges_collinear_spokes() {
        // Root plus two points collinear beyond it: one merged edge.
        let pts = vec![Point::ints(0, 0), Point::ints(1, 1), Point::ints(2, 2)];
        let tree = star_tree(&pts);
        assert_eq!(tree.edge_count(), 1);
        assert!(check_coverage(&tree.segments(), &pts).covers_all());
    }

    #[test]
    fn min_segment_tree_small() {
        for n in [2usize, 3, 4] {
            let pts = random_general_position(n, n as u64, 100).unwrap();
            let tree = min_segment_tree(&pts).unwrap();
            let (_, merged) = count_tree_segments(&tree);
            assert_eq!(merged, n - 1, "n={n}");
            verify_tree(&tree, &pts);
        }
    }

    #[test]
    fn min_segment_tree_five_points() {
        for seed in 0..20 {
            let pts = random_general_position(5, seed, 1000).unwrap();
            let tree = min_segment_tree(&pts).unwrap();
            let (_, merged) = count_tree_segments(&tree);
            assert!(merged <= 3, "seed {seed}: merged {merged}");
            verify_tree(&tree, &pts);
        }
    }

    #[test]
    fn min_segment_tree_random() {
        for seed in 0..15 {
            let n = 6 + (seed as usize % 25);
            let pts = random_general_position(n, 1000 + seed, 100_000).unwrap();
            let tree = min_segment_tree(&pts).unwrap();
            let (_, merged) = count_tree_segments(&tree);
            assert!(
                merged <= n.div_ceil(2),
                "seed {seed} n={n}: merged {merged}"
            );
            verify_tree(&tree, &pts);
        }
    }

    #[test]
    fn min_segment_tree_collinear_residual() {
        // Hull edge on the left; remaining points on one vertical line.
        let pts = vec![
            Point::ints(0, 0),
            Point::ints(0, 10),
            Point::ints(5, 2),
            Point::ints(5, 5),
            Point::ints(5, 8),
        ];
        let tree = min_segment_tree(&pts).unwrap();
        let (_, merged) = count_tree_segments(&tree);
        assert!(merged <= 3, "merged {merged}");
        assert!(check_coverage(&tree.segments(), &pts).covers_all());
        assert!(check_noncrossing_tree(&tree).is_ok());
    }

    #[test]
    fn hull_of_square_with_interior() {
        let pts = vec![
            Point::ints(0, 0),
            Point::ints(4, 0),
            Point::ints(4, 4),
            Point::ints(0, 4),
            Point::ints(2, 2),
        ];
        let hull = convex_hull(&pts);
        assert_eq!(hull.len(), 4);
    }
}
