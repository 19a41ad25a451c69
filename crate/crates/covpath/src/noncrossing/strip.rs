//! The strip construction: a noncrossing covering path through a vertical
//! strip whose endpoints sit on the two bounding lines, saving one segment
//! per local modification site along a planted cap or cup.
//!
//! The path is assembled from three parts. A convex arc extends the cap's odd
//! chords to the strip walls; everything strictly below it is covered by one
//! rotating sweep, the arc itself is walked right to left, and the region
//! above is cut into convex cells by upward rays whose junction points chain
//! the per-cell sweeps together. At every third interior turn the arc either
//! recruits an input point as a junction (replacing a Steiner point) or
//! shortcuts across a hull edge of the points trapped under the neighboring
//! chord lines; both variants drop exactly one segment.

use thiserror::Error;

use crate::caps_cups::{longest_cap_cup, Chain, ChainError, ChainKind, Convexity};
use crate::covering_path::{PolyPath, VertexTag};
use crate::covering_tree::convex_hull;
use crate::geom::{scalar, Line, Point, Scalar};
use crate::region::{ConvexRegion, HalfPlane};

use super::sweep::{visit_order, SweepError};

/// Open vertical strip `left_x < x < right_x`.
#[derive(Clone, Debug)]
pub struct VerticalStrip {
    pub left_x: Scalar,
    pub right_x: Scalar,
}

impl VerticalStrip {
    pub fn new(left_x: Scalar, right_x: Scalar) -> Self {
        assert!(left_x < right_x);
        VerticalStrip { left_x, right_x }
    }

    pub fn around(points: &[Point]) -> Self {
        let mut xs: Vec<&Scalar> = points.iter().map(|p| &p.x).collect();
        xs.sort();
        VerticalStrip::new(
            xs.first().map(|x| *x - scalar(1)).unwrap_or_else(|| scalar(0)),
            xs.last().map(|x| *x + scalar(1)).unwrap_or_else(|| scalar(1)),
        )
    }

    pub fn contains_strictly(&self, p: &Point) -> bool {
        self.left_x < p.x && p.x < self.right_x
    }

    pub fn region(&self) -> ConvexRegion {
        ConvexRegion::strip(&self.left_x, &self.right_x)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CaseLabel {
    Case1,
    Case2,
    Unmodified,
}

/// Everything the construction decided, for accounting and rendering.
#[derive(Clone, Debug)]
pub struct StripConstruction {
    /// Cup input handled by reflecting y and running the cap construction.
    pub reflected: bool,
    /// Even chain size actually used.
    pub chain_len: usize,
    /// Final convex arc, left wall to right wall.
    pub gamma: Vec<Point>,
    /// Divider rays as (base, second point on the ray).
    pub rays: Vec<(Point, Point)>,
    /// Junction points between consecutive cells above the arc.
    pub junctions: Vec<Point>,
    /// Per modification site (arc turn index, multiples of 3): what happened.
    pub case_labels: Vec<(usize, CaseLabel)>,
    pub savings: usize,
    pub entry: Point,
    pub exit: Point,
    pub edge_count: usize,
    pub point_count: usize,
}

impl StripConstruction {
    /// The segment count the construction is designed to hit exactly.
    pub fn expected_edge_count(&self) -> usize {
        self.point_count + 1 - self.savings
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum StripError {
    #[error("largest cap/cup has size {found}, need at least 2")]
    CapTooSmall { found: usize },
    #[error("degenerate alignment at {0:?} prevents the strict construction")]
    CollinearInput(Point),
    #[error("point {0:?} is not strictly inside the strip")]
    PointOutsideStrip(Point),
    #[error("internal invariant failed: {0}")]
    Degenerate(String),
}

/// Full construction with the per-site modifications.
pub fn strip_cover(
    points: &[Point],
    strip: &VerticalStrip,
) -> Result<(PolyPath, StripConstruction), StripError> {
    strip_cover_impl(points, strip, true)
}

/// The preliminary construction: same skeleton, no modification sites, always
/// n + 1 segments.
pub fn strip_cover_preliminary(
    points: &[Point],
    strip: &VerticalStrip,
) -> Result<(PolyPath, StripConstruction), StripError> {
    strip_cover_impl(points, strip, false)
}

fn strip_cover_impl(
    points: &[Point],
    strip: &VerticalStrip,
    enable_mods: bool,
) -> Result<(PolyPath, StripConstruction), StripError> {
    for p in points {
        if !strip.contains_strictly(p) {
            return Err(StripError::PointOutsideStrip(p.clone()));
        }
    }
    if points.len() < 2 {
        return Err(StripError::CapTooSmall {
            found: points.len(),
        });
    }
    let chain = match longest_cap_cup(points, Convexity::Strict) {
        Ok(c) => c,
        Err(ChainError::TooFewPoints(n)) => return Err(StripError::CapTooSmall { found: n }),
        Err(e) => return Err(StripError::Degenerate(e.to_string())),
    };
    let even_len = chain.len() & !1;
    if even_len < 2 {
        return Err(StripError::CapTooSmall { found: chain.len() });
    }
    let indices = chain.indices[..even_len].to_vec();

    if chain.kind == ChainKind::Cap {
        let cap = Chain {
            indices,
            kind: ChainKind::Cap,
        };
        cap_strip_cover(points, &cap, strip, enable_mods, false)
    } else {
        // Cups reflect to caps; the strip and the x-order are unchanged.
        let reflected: Vec<Point> = points.iter().map(reflect_y).collect();
        let cap = Chain {
            indices,
            kind: ChainKind::Cap,
        };
        let (path, cons) = cap_strip_cover(&reflected, &cap, strip, enable_mods, true)?;
        Ok((path.map_points(|p| reflect_y(p)), reflect_construction(cons)))
    }
}

fn reflect_y(p: &Point) -> Point {
    Point::new(p.x.clone(), -&p.y)
}

fn reflect_construction(c: StripConstruction) -> StripConstruction {
    StripConstruction {
        reflected: true,
        gamma: c.gamma.iter().map(reflect_y).collect(),
        rays: c
            .rays
            .iter()
            .map(|(a, b)| (reflect_y(a), reflect_y(b)))
            .collect(),
        junctions: c.junctions.iter().map(reflect_y).collect(),
        entry: reflect_y(&c.entry),
        exit: reflect_y(&c.exit),
        ..c
    }
}

#[derive(Clone, Debug)]
enum SiteMod {
    Case1 {
        chosen: Point,
    },
    Case2 {
        apex: Point,
        q_left: Point,
        q_right: Point,
    },
}

/// Where a point sits relative to an x-monotone arc.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum ArcSide {
    Below,
    On,
    Above,
}

fn arc_side(arc: &[Point], lines_of: &dyn Fn(usize) -> Line, p: &Point) -> ArcSide {
    // Arc vertex abscissas strictly increase and span the whole strip.
    let mut lo = 0usize;
    let mut hi = arc.len() - 1;
    debug_assert!(arc[lo].x <= p.x && p.x <= arc[hi].x);
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if arc[mid].x <= p.x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let h = lines_of(lo).y_at(&p.x);
    if p.y < h {
        ArcSide::Below
    } else if p.y == h {
        ArcSide::On
    } else {
        ArcSide::Above
    }
}

/// The construction proper, for a cap. `reflected` is only recorded.
fn cap_strip_cover(
    points: &[Point],
    cap_chain: &Chain,
    strip: &VerticalStrip,
    enable_mods: bool,
    reflected: bool,
) -> Result<(PolyPath, StripConstruction), StripError> {
    let n = points.len();
    let l = &strip.left_x;
    let r = &strip.right_x;
    let wall_l = Line::through(&Point::new(l.clone(), scalar(0)), &Point::new(l.clone(), scalar(1)));
    let wall_r = Line::through(&Point::new(r.clone(), scalar(0)), &Point::new(r.clone(), scalar(1)));

    let cap = cap_chain.points(points);
    let k = cap.len();
    let half = k / 2;
    debug_assert!(k >= 2 && k % 2 == 0);

    // Odd chords: chord[j] carries cap[2j], cap[2j+1].
    let chords: Vec<Line> = (0..half)
        .map(|j| Line::through(&cap[2 * j], &cap[2 * j + 1]))
        .collect();

    // The initial arc: chord extensions meeting at turn vertices, ends on
    // the walls. Turn vertex t (1-based along the arc) is arc0[t].
    let mut arc0: Vec<Point> = Vec::with_capacity(half + 1);
    arc0.push(
        chords[0]
            .intersect(&wall_l)
            .ok_or_else(|| StripError::Degenerate("chord parallel to wall".into()))?,
    );
    for j in 1..half {
        let q = chords[j - 1]
            .intersect(&chords[j])
            .ok_or_else(|| StripError::Degenerate("equal chord slopes on a strict cap".into()))?;
        arc0.push(q);
    }
    arc0.push(
        chords[half - 1]
            .intersect(&wall_r)
            .ok_or_else(|| StripError::Degenerate("chord parallel to wall".into()))?,
    );
    for w in arc0.windows(2) {
        if w[0].x >= w[1].x {
            return Err(StripError::Degenerate("arc not x-monotone".into()));
        }
    }

    // First classification: everything on the initial arc must be a cap point.
    let in_cap = |p: &Point| cap.iter().any(|c| c == p);
    let arc0_lines = |e: usize| chords[e].clone();
    for p in points {
        if arc_side(&arc0, &arc0_lines, p) == ArcSide::On && !in_cap(p) {
            return Err(StripError::CollinearInput(p.clone()));
        }
    }

    // Modification sites at every third interior turn.
    let mut sites: Vec<(usize, SiteMod)> = Vec::new();
    let mut case_labels: Vec<(usize, CaseLabel)> = Vec::new();
    if enable_mods && half >= 3 {
        let mut i = 3;
        while i <= half {
            let site = decide_site(points, &cap, &chords, &arc0, i, half, &wall_r)?;
            case_labels.push((
                i,
                match site {
                    SiteMod::Case1 { .. } => CaseLabel::Case1,
                    SiteMod::Case2 { .. } => CaseLabel::Case2,
                },
            ));
            sites.push((i, site));
            i += 3;
        }
    } else if half >= 3 {
        let mut i = 3;
        while i <= half {
            case_labels.push((i, CaseLabel::Unmodified));
            i += 3;
        }
    }

    // Final arc: apply the Case 2 replacements right to left. Site i replaces
    // arc0 indices i-2, i-1, i (turns i-1, i, i+1) by the two cut points.
    let mut gamma: Vec<Point> = arc0.clone();
    for (i, site) in sites.iter().rev() {
        if let SiteMod::Case2 {
            q_left, q_right, ..
        } = site
        {
            gamma.splice((i - 2)..=(*i).min(gamma.len() - 1), [q_left.clone(), q_right.clone()]);
        }
    }
    for w in gamma.windows(2) {
        if w[0].x >= w[1].x {
            return Err(StripError::Degenerate("modified arc not x-monotone".into()));
        }
    }

    // Supporting line of each final arc edge.
    let gamma_lines: Vec<Line> = gamma
        .windows(2)
        .map(|w| Line::through(&w[0], &w[1]))
        .collect();
    let gl = gamma.clone();
    let gli = gamma_lines.clone();
    let gamma_side = move |p: &Point| -> ArcSide {
        let lines_of = |e: usize| gli[e].clone();
        arc_side(&gl, &lines_of, p)
    };

    // Expected on-arc set: cap points minus the four dropped per Case 2 site,
    // plus the chosen hull edge's endpoints.
    let mut expected_on: Vec<Point> = cap.clone();
    for (i, site) in &sites {
        if let SiteMod::Case2 { .. } = site {
            let drop = [
                &cap[2 * i - 4],
                &cap[2 * i - 3],
                &cap[2 * i - 2],
                &cap[2 * i - 1],
            ];
            expected_on.retain(|p| !drop.contains(&p));
        }
    }

    let mut below: Vec<Point> = Vec::new();
    let mut above: Vec<Point> = Vec::new();
    let mut on_arc: Vec<Point> = Vec::new();
    for p in points {
        match gamma_side(p) {
            ArcSide::Below => below.push(p.clone()),
            ArcSide::Above => above.push(p.clone()),
            ArcSide::On => on_arc.push(p.clone()),
        }
    }
    for p in &on_arc {
        let expected = expected_on.contains(p)
            || sites.iter().any(|(_, s)| match s {
                SiteMod::Case2 { q_left, q_right, .. } => {
                    let seg = crate::geom::Segment::new(q_left.clone(), q_right.clone());
                    crate::geom::on_segment(p, &seg)
                }
                _ => false,
            });
        if !expected {
            return Err(StripError::CollinearInput(p.clone()));
        }
    }

    // Dividers and cell floors, left to right. Each Steiner junction sits
    // one unit above its ray base: the bases are strict convex turns, so no
    // three consecutive junctions can be collinear and no segment merges
    // away.
    // (line, ray base, provisional junction, height cap, tag)
    let mut dividers: Vec<(Line, Point, Point, Option<Scalar>, VertexTag)> = Vec::new();
    let mut floors: Vec<Line> = vec![chords[0].clone()];

    let site_with_center = |v: usize| -> Option<&(usize, SiteMod)> {
        sites.iter().find(|(i, _)| *i == v)
    };
    let site_consuming = |v: usize| -> Option<&(usize, SiteMod)> {
        sites.iter().find(|(i, s)| {
            matches!(s, SiteMod::Case2 { .. }) && (v == *i || v + 1 == *i || v == *i + 1)
        })
    };

    let mut v = 2;
    while v <= half {
        let q_v = &arc0[v - 1];
        if let Some((i, SiteMod::Case2 { apex, .. })) = site_consuming(v) {
            if v == *i && *i != half {
                let junction = Point::new(apex.x.clone(), &apex.y + scalar(1));
                dividers.push((
                    vertical_line(&apex.x),
                    apex.clone(),
                    junction,
                    None,
                    VertexTag::Steiner,
                ));
                floors.push(chords[*i].clone());
            }
            v += 1;
            continue;
        }
        if let Some((i, SiteMod::Case1 { chosen })) = site_with_center(v) {
            let slant = Line::through(&arc0[i - 1], chosen);
            dividers.push((
                slant,
                arc0[i - 1].clone(),
                chosen.clone(),
                None,
                VertexTag::Input,
            ));
            floors.push(chords[i - 1].clone());
            v += 1;
            continue;
        }
        // Plain vertical divider; its Steiner point stays below any crossing
        // with an adjacent slanted ray.
        let mut cap: Option<Scalar> = None;
        for (i, site) in &sites {
            if let SiteMod::Case1 { chosen } = site {
                if v + 1 == *i || v == *i + 1 {
                    let slant = Line::through(&arc0[i - 1], chosen);
                    match crossing_above(q_v, &slant) {
                        Err(()) => return Err(StripError::CollinearInput(chosen.clone())),
                        Ok(Some(yc)) => {
                            cap = match cap {
                                Some(c) if c <= yc => Some(c),
                                _ => Some(yc),
                            }
                        }
                        Ok(None) => {}
                    }
                }
            }
        }
        let jy = initial_height(&q_v.y, &cap);
        let junction = Point::new(q_v.x.clone(), jy);
        dividers.push((vertical_line(&q_v.x), q_v.clone(), junction, cap, VertexTag::Steiner));
        floors.push(chords[v - 1].clone());
        v += 1;
    }

    // Exit on the right wall: above the arc's right end, or above the wall
    // apex when the last site cut the corner; capped below a slanted ray if
    // the last site recruited an input point there.
    let exit_base = match site_with_center(half) {
        Some((_, SiteMod::Case2 { apex, .. })) => apex.y.clone(),
        _ => arc0[half].y.clone(),
    };
    let mut exit_cap: Option<Scalar> = None;
    if let Some((i, SiteMod::Case1 { chosen })) = site_with_center(half) {
        let slant = Line::through(&arc0[i - 1], chosen);
        match crossing_above(&arc0[half], &slant) {
            Err(()) => return Err(StripError::CollinearInput(chosen.clone())),
            Ok(c) => exit_cap = c,
        }
    }
    let exit = Point::new(r.clone(), initial_height(&exit_base, &exit_cap));

    // Entry/exit chain for the cells above the arc.
    let p_start = leftmost_on_arc(&on_arc).ok_or_else(|| {
        StripError::Degenerate("no input point on the arc".into())
    })?;
    let r_end = rightmost_on_arc(&on_arc).unwrap();

    // Input points sitting exactly on a divider line would be boundary points
    // of two cells at once.
    for p in &above {
        for (line, _, junction, _, tag) in &dividers {
            if *tag == VertexTag::Input && p == junction {
                continue;
            }
            if line.contains(p) {
                return Err(StripError::CollinearInput(p.clone()));
            }
        }
    }

    // Cells: floor + the two neighboring divider lines (walls at the ends).
    let cell_count = dividers.len() + 1;
    debug_assert_eq!(floors.len(), cell_count);
    let mut cells: Vec<ConvexRegion> = Vec::with_capacity(cell_count);
    for (c, floor) in floors.iter().enumerate() {
        let mut hps: Vec<HalfPlane> = Vec::new();
        hps.push(above_halfplane(floor));
        let left_line = if c == 0 { &wall_l } else { &dividers[c - 1].0 };
        let right_line = if c + 1 == cell_count {
            &wall_r
        } else {
            &dividers[c].0
        };
        hps.push(right_of_halfplane(left_line));
        hps.push(left_of_halfplane(right_line));
        cells.push(ConvexRegion::new(hps));
    }

    // Assign the strictly-above points to cells, skipping Case 1 junctions.
    let mut cell_points: Vec<Vec<Point>> = vec![Vec::new(); cell_count];
    'assign: for p in &above {
        if dividers
            .iter()
            .any(|(_, _, j, _, tag)| *tag == VertexTag::Input && j == p)
        {
            continue;
        }
        for (c, cell) in cells.iter().enumerate() {
            match cell.classify(p) {
                crate::region::RegionSide::Inside => {
                    cell_points[c].push(p.clone());
                    continue 'assign;
                }
                crate::region::RegionSide::Boundary => {
                    return Err(StripError::CollinearInput(p.clone()));
                }
                crate::region::RegionSide::Outside => {}
            }
        }
        return Err(StripError::Degenerate(format!(
            "point {p:?} above the arc fell in no cell"
        )));
    }

    // Part one: everything strictly below the arc, entered at the left wall
    // below everything and exited at the rightmost input point on the arc.
    let mut below_hps: Vec<HalfPlane> = vec![right_of_halfplane(&wall_l), left_of_halfplane(&wall_r)];
    for line in &gamma_lines {
        below_hps.push(below_halfplane(line));
    }
    let below_region = ConvexRegion::new(below_hps);
    let mut y_floor = points.iter().map(|p| p.y.clone()).fold(None, min_opt);
    for q in &gamma {
        y_floor = min_opt(y_floor, q.y.clone());
    }
    let entry_base = Point::new(l.clone(), y_floor.expect("nonempty") - scalar(1));
    let below_order = visit_order(&below, &below_region, &entry_base, &r_end)
        .map_err(lift_sweep_error)?;

    // Per-cell visit orders; these depend only on the boundary lines, not on
    // the junction heights, so the heights stay free for the repair pass.
    let mut cell_orders: Vec<Vec<usize>> = Vec::with_capacity(cell_count);
    for c in 0..cell_count {
        let from = if c == 0 { &p_start } else { &dividers[c - 1].2 };
        let to = if c + 1 == cell_count {
            &exit
        } else {
            &dividers[c].2
        };
        let ord = visit_order(&cell_points[c], &cells[c], from, to).map_err(|e| {
            if std::env::var("COVPATH_DEBUG").is_ok() {
                eprintln!("cell {c}/{cell_count}: from={from:?} to={to:?} err={e}");
                eprintln!("  cell region: {:?}", cells[c]);
            }
            lift_sweep_error(e)
        })?;
        cell_orders.push(ord);
    }

    // Assemble the full vertex sequence: the sweep below, the arc walked
    // right to left, then the cells chained through the junctions. Junction
    // heights (and the entry) are free; FreeVertical slots get their final
    // height in a second pass that steps around any collinear triple.
    let mut slots: Vec<Slot> = Vec::new();
    slots.push(Slot::FreeVertical {
        x: entry_base.x.clone(),
        base_y: entry_base.y.clone(),
        start_y: entry_base.y.clone(),
        downward: true,
        cap: None,
        tag: VertexTag::Steiner,
    });
    for &i in &below_order {
        slots.push(Slot::Fixed(below[i].clone(), VertexTag::Input));
    }
    slots.push(Slot::Fixed(r_end.clone(), VertexTag::Input));
    for q in gamma.iter().rev() {
        if q.x < r_end.x && q.x > p_start.x {
            slots.push(Slot::Fixed(q.clone(), VertexTag::Steiner));
        }
    }
    slots.push(Slot::Fixed(p_start.clone(), VertexTag::Input));
    let mut junction_slots: Vec<usize> = Vec::with_capacity(dividers.len());
    for c in 0..cell_count {
        for &i in &cell_orders[c] {
            slots.push(Slot::Fixed(cell_points[c][i].clone(), VertexTag::Input));
        }
        if c + 1 < cell_count {
            junction_slots.push(slots.len());
        }
        if c + 1 == cell_count {
            slots.push(Slot::FreeVertical {
                x: exit.x.clone(),
                base_y: exit_base.clone(),
                start_y: exit.y.clone(),
                downward: false,
                cap: exit_cap.clone(),
                tag: VertexTag::Steiner,
            });
        } else {
            let (_, base, junction, cap, tag) = &dividers[c];
            if *tag == VertexTag::Input {
                slots.push(Slot::Fixed(junction.clone(), *tag));
            } else {
                slots.push(Slot::FreeVertical {
                    x: junction.x.clone(),
                    base_y: base.y.clone(),
                    start_y: junction.y.clone(),
                    downward: false,
                    cap: cap.clone(),
                    tag: *tag,
                });
            }
        }
    }

    let vertices = resolve_slots(&slots).ok_or_else(|| {
        StripError::Degenerate("unable to break a collinear junction triple".into())
    })?;
    // Junction/entry heights may have moved during resolution; report the
    // final positions (slots map one-to-one onto vertices).
    let resolved_entry = vertices[0].0.clone();
    let resolved_exit = vertices[vertices.len() - 1].0.clone();
    let mut junctions: Vec<Point> = Vec::new();
    let mut rays: Vec<(Point, Point)> = Vec::new();
    for (d, (line, base, _, _, _)) in dividers.iter().enumerate() {
        let j = vertices[junction_slots[d]].0.clone();
        debug_assert!(line.contains(&j), "junction left its ray");
        junctions.push(j.clone());
        rays.push((base.clone(), j));
    }
    let path = PolyPath::new(vertices);
    let savings = sites.len();
    let construction = StripConstruction {
        reflected,
        chain_len: k,
        gamma,
        rays,
        junctions,
        case_labels,
        savings,
        entry: resolved_entry,
        exit: resolved_exit,
        edge_count: path.edge_count(),
        point_count: n,
    };
    Ok((path, construction))
}

/// Decides Case 1 vs Case 2 at the site centered on arc turn `i`.
fn decide_site(
    points: &[Point],
    cap: &[Point],
    chords: &[Line],
    arc0: &[Point],
    i: usize,
    half: usize,
    wall_r: &Line,
) -> Result<SiteMod, StripError> {
    let left_x = &arc0[i - 2].x;
    let right_x = &arc0[i].x;
    let line_in = &chords[i - 2]; // edge arriving at the turn
    let line_out = &chords[i - 1]; // edge leaving the turn

    // The wedge above both edge lines, between the neighboring rays.
    let mut in_wedge: Vec<&Point> = Vec::new();
    for p in points {
        if p.x <= *left_x || p.x >= *right_x {
            continue;
        }
        let above_in = p.y > line_in.y_at(&p.x);
        let above_out = p.y > line_out.y_at(&p.x);
        if above_in && above_out {
            in_wedge.push(p);
        } else if (p.y == line_in.y_at(&p.x) || p.y == line_out.y_at(&p.x)) && !cap.contains(p) {
            return Err(StripError::CollinearInput(p.clone()));
        }
    }
    if let Some(chosen) = in_wedge.iter().min_by(|a, b| a.cmp(b)) {
        return Ok(SiteMod::Case1 {
            chosen: (*chosen).clone(),
        });
    }

    // Case 2: shortcut across a hull edge of the points under the turn.
    let line_far_left = &chords[i - 3];
    let far_right_line: Line = if i == half {
        wall_r.clone()
    } else {
        chords[i].clone()
    };
    let apex = line_far_left
        .intersect(&far_right_line)
        .ok_or_else(|| StripError::Degenerate("triangle apex undefined".into()))?;
    let corner_l = &arc0[i - 2];
    let corner_r = &arc0[i];

    // Points strictly inside the triangle (corner_l, apex, corner_r).
    use crate::geom::{orientation, Orientation};
    let strictly_inside = |p: &Point| -> bool {
        orientation(corner_l, corner_r, p) == Orientation::Left
            && orientation(corner_r, &apex, p) == Orientation::Left
            && orientation(&apex, corner_l, p) == Orientation::Left
    };
    let mut xset: Vec<Point> = points.iter().filter(|p| strictly_inside(p)).cloned().collect();
    xset.push(corner_l.clone());
    xset.push(corner_r.clone());
    let hull = convex_hull(&xset);
    if hull.len() < 4 {
        return Err(StripError::Degenerate(format!(
            "hull at site {i} has {} vertices, expected at least 4",
            hull.len()
        )));
    }
    let pos_l = hull.iter().position(|p| p == corner_l).ok_or_else(|| {
        StripError::Degenerate("left corner missing from hull".into())
    })?;
    let pos_r = hull.iter().position(|p| p == corner_r).ok_or_else(|| {
        StripError::Degenerate("right corner missing from hull".into())
    })?;

    // Upper chain, counterclockwise from the right corner back to the left.
    let m = hull.len();
    let mut chain: Vec<Point> = Vec::new();
    let mut idx = pos_r;
    loop {
        chain.push(hull[idx].clone());
        if idx == pos_l {
            break;
        }
        idx = (idx + 1) % m;
    }
    if chain.len() < 4 {
        return Err(StripError::Degenerate(
            "upper chain too short for a middle edge".into(),
        ));
    }
    // Middle edges, lexicographically smallest first.
    let mut candidates: Vec<(Point, Point)> = Vec::new();
    for w in chain[1..chain.len() - 1].windows(2) {
        let (a, b) = (w[0].clone(), w[1].clone());
        candidates.push(if a <= b { (a, b) } else { (b, a) });
    }
    candidates.sort();

    for (a, b) in candidates {
        let cut = Line::through(&a, &b);
        let ql = match cut.intersect(line_far_left) {
            Some(q) => q,
            None => continue,
        };
        let qr = match cut.intersect(&far_right_line) {
            Some(q) => q,
            None => continue,
        };
        if !(strictly_between(corner_l, &apex, &ql) && strictly_between(corner_r, &apex, &qr)) {
            continue;
        }
        // The triangle cut off above the new edge must contain no input
        // point strictly inside (hull property) and no input point on its
        // two upper sides.
        for p in points {
            if orientation(&ql, &qr, p) == Orientation::Left
                && orientation(&qr, &apex, p) == Orientation::Left
                && orientation(&apex, &ql, p) == Orientation::Left
            {
                return Err(StripError::Degenerate(
                    "input point above the chosen hull edge".into(),
                ));
            }
        }
        return Ok(SiteMod::Case2 {
            apex,
            q_left: ql,
            q_right: qr,
        });
    }
    Err(StripError::CollinearInput(corner_l.clone()))
}

fn strictly_between(a: &Point, b: &Point, p: &Point) -> bool {
    if p == a || p == b {
        return false;
    }
    crate::geom::on_segment(p, &crate::geom::Segment::new(a.clone(), b.clone()))
}

fn vertical_line(x: &Scalar) -> Line {
    Line::through(
        &Point::new(x.clone(), scalar(0)),
        &Point::new(x.clone(), scalar(1)),
    )
}

/// Height at which a slanted ray crosses the vertical ray at `base`, when it
/// does so strictly above the base. `Err` flags the degenerate slant passing
/// through the base itself.
fn crossing_above(base: &Point, slant: &Line) -> Result<Option<Scalar>, ()> {
    if slant.is_vertical() {
        return Ok(None);
    }
    let yc = slant.y_at(&base.x);
    if yc == base.y {
        return Err(());
    }
    Ok(if yc > base.y { Some(yc) } else { None })
}

/// First junction height to try: one unit up, or halfway to the cap when the
/// cap is closer.
fn initial_height(base_y: &Scalar, cap: &Option<Scalar>) -> Scalar {
    let plain = base_y + scalar(1);
    match cap {
        Some(c) if *c <= plain => (base_y + c) / scalar(2),
        _ => plain,
    }
}

/// A path vertex that is either pinned or free to slide along a vertical ray.
enum Slot {
    Fixed(Point, VertexTag),
    FreeVertical {
        x: Scalar,
        /// Exclusive bound the height must stay strictly beyond.
        base_y: Scalar,
        start_y: Scalar,
        /// Entry slot: candidates move downward without a cap.
        downward: bool,
        cap: Option<Scalar>,
        tag: VertexTag,
    },
}

/// Chooses heights for the free vertices so that no three consecutive path
/// vertices are collinear, then double-checks the whole sequence. Each free
/// vertex faces finitely many bad heights, so a few steps always escape them
/// unless pinned vertices are already degenerate.
fn resolve_slots(slots: &[Slot]) -> Option<Vec<(Point, VertexTag)>> {
    use crate::geom::{orientation, Orientation};
    let next_fixed = |idx: usize, skip: usize| -> Option<&Point> {
        match slots.get(idx + skip) {
            Some(Slot::Fixed(p, _)) => Some(p),
            _ => None,
        }
    };
    let mut out: Vec<(Point, VertexTag)> = Vec::with_capacity(slots.len());
    for (idx, slot) in slots.iter().enumerate() {
        match slot {
            Slot::Fixed(p, tag) => out.push((p.clone(), *tag)),
            Slot::FreeVertical {
                x,
                base_y,
                start_y,
                downward,
                cap,
                tag,
            } => {
                let mut y = start_y.clone();
                let mut placed = false;
                for _ in 0..16 {
                    let cand = Point::new(x.clone(), y.clone());
                    let mut ok = true;
                    if out.len() >= 2 {
                        let a = &out[out.len() - 2].0;
                        let b = &out[out.len() - 1].0;
                        ok &= orientation(a, b, &cand) != Orientation::Collinear;
                    }
                    if ok {
                        if let (Some(last), Some(w)) = (out.last(), next_fixed(idx, 1)) {
                            ok &= orientation(&last.0, &cand, w) != Orientation::Collinear;
                        }
                    }
                    if ok {
                        if let (Some(w), Some(w2)) = (next_fixed(idx, 1), next_fixed(idx, 2)) {
                            ok &= orientation(&cand, w, w2) != Orientation::Collinear;
                        }
                    }
                    if ok {
                        out.push((cand, *tag));
                        placed = true;
                        break;
                    }
                    y = if *downward {
                        &y - scalar(1)
                    } else {
                        (&y + base_y) / scalar(2)
                    };
                    if !*downward {
                        debug_assert!(y > *base_y);
                        if let Some(c) = cap {
                            debug_assert!(y < *c);
                        }
                    }
                }
                if !placed {
                    return None;
                }
            }
        }
    }
    for w in out.windows(3) {
        if orientation(&w[0].0, &w[1].0, &w[2].0) == Orientation::Collinear {
            return None;
        }
    }
    Some(out)
}

fn leftmost_on_arc(on_arc: &[Point]) -> Option<Point> {
    on_arc.iter().min_by(|a, b| a.x.cmp(&b.x)).cloned()
}

fn rightmost_on_arc(on_arc: &[Point]) -> Option<Point> {
    on_arc.iter().max_by(|a, b| a.x.cmp(&b.x)).cloned()
}

fn min_opt(acc: Option<Scalar>, v: Scalar) -> Option<Scalar> {
    match acc {
        None => Some(v),
        Some(a) => Some(if v < a { v } else { a }),
    }
}

/// Region above the line: direct it with increasing x.
fn above_halfplane(line: &Line) -> HalfPlane {
    let (a, b) = oriented_lr(line);
    HalfPlane::new(a, b)
}

/// Region below the line: direct it with decreasing x.
fn below_halfplane(line: &Line) -> HalfPlane {
    let (a, b) = oriented_lr(line);
    HalfPlane::new(b, a)
}

fn oriented_lr(line: &Line) -> (Point, Point) {
    if line.p.x < line.q.x {
        (line.p.clone(), line.q.clone())
    } else {
        (line.q.clone(), line.p.clone())
    }
}

/// Region to the right of an upward-ish line: direct it downward.
fn right_of_halfplane(line: &Line) -> HalfPlane {
    let (a, b) = oriented_up(line);
    HalfPlane::new(b, a)
}

/// Region to the left of an upward-ish line: direct it upward.
fn left_of_halfplane(line: &Line) -> HalfPlane {
    let (a, b) = oriented_up(line);
    HalfPlane::new(a, b)
}

fn oriented_up(line: &Line) -> (Point, Point) {
    if line.p.y == line.q.y {
        // Horizontal boundary lines never occur as dividers or walls.
        panic!("divider line cannot be horizontal");
    }
    if line.p.y < line.q.y {
        (line.p.clone(), line.q.clone())
    } else {
        (line.q.clone(), line.p.clone())
    }
}

fn lift_sweep_error(e: SweepError) -> StripError {
    match e {
        SweepError::PointOnBoundary(p) => StripError::CollinearInput(p),
        other => StripError::Degenerate(other.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::planted_cap_strip;
    use crate::verify::{check_coverage, check_noncrossing_path};

    fn run_full(points: &[Point]) -> (PolyPath, StripConstruction) {
        let strip = VerticalStrip::around(points);
        strip_cover(points, &strip).unwrap()
    }

    fn assert_valid(path: &PolyPath, cons: &StripConstruction, points: &[Point], strip: &VerticalStrip) {
        assert!(
            check_coverage(&path.edges(), points).covers_all(),
            "coverage failed"
        );
        assert!(
            check_noncrossing_path(path).is_ok(),
            "crossing: {:?}",
            check_noncrossing_path(path).err()
        );
        assert_eq!(path.first().x, strip.left_x, "entry not on the left wall");
        assert_eq!(path.last().x, strip.right_x, "exit not on the right wall");
        for q in path.points().skip(1).take(path.vertices().len() - 2) {
            assert!(
                strip.left_x < q.x && q.x < strip.right_x,
                "interior vertex {q:?} escapes the strip"
            );
        }
        assert_eq!(path.edge_count(), cons.expected_edge_count());
    }

    #[test]
    fn figure_instance_preliminary_count() {
        let pts = planted_cap_strip(36, 18);
        let strip = VerticalStrip::around(&pts);
        let (path, cons) = strip_cover_preliminary(&pts, &strip).unwrap();
        assert_eq!(cons.savings, 0);
        assert_eq!(path.edge_count(), 37);
        assert_valid(&path, &cons, &pts, &strip);
    }

    #[test]
    fn figure_instance_full_count() {
        let pts = planted_cap_strip(36, 18);
        let strip = VerticalStrip::around(&pts);
        let (path, cons) = strip_cover(&pts, &strip).unwrap();
        assert_eq!(cons.savings, 3);
        assert_eq!(path.edge_count(), 34);
        assert_valid(&path, &cons, &pts, &strip);
        // The planted wedge point forces Case 1 at the last site; the two
        // earlier sites have empty wedges and fall to Case 2.
        let labels: Vec<_> = cons.case_labels.iter().map(|(_, l)| *l).collect();
        assert_eq!(labels, vec![CaseLabel::Case2, CaseLabel::Case2, CaseLabel::Case1]);
    }

    #[test]
    fn pure_cap_six_points() {
        // Exactly a 6-cap and nothing else: 6 + 1 - 1 = 6 edges.
        let pts: Vec<Point> = (1..=6).map(|i| Point::ints(10 * i, -(2 * i - 7).pow(2))).collect();
        let strip = VerticalStrip::around(&pts);
        let (path, cons) = strip_cover(&pts, &strip).unwrap();
        assert_eq!(cons.savings, 1);
        assert_eq!(path.edge_count(), 6);
        assert_valid(&path, &cons, &pts, &strip);
    }

    #[test]
    fn cup_input_reflects() {
        let pts: Vec<Point> = (1..=8).map(|i| Point::ints(10 * i, (2 * i - 9).pow(2))).collect();
        let (path, cons) = run_full(&pts);
        assert!(cons.reflected);
        assert_eq!(path.edge_count(), cons.expected_edge_count());
        assert!(check_coverage(&path.edges(), &pts).covers_all());
        assert!(check_noncrossing_path(&path).is_ok());
    }

    #[test]
    fn twelve_six_saves_exactly_one() {
        let pts = planted_cap_strip(12, 6);
        let strip = VerticalStrip::around(&pts);
        let (path, cons) = strip_cover(&pts, &strip).unwrap();
        assert_eq!(cons.savings, 1);
        assert_eq!(path.edge_count(), 12);
        assert_valid(&path, &cons, &pts, &strip);
    }

    #[test]
    fn random_instances_hit_expected_counts() {
        use crate::instances::random_general_position;
        for seed in 0..25 {
            let n = 8 + (seed as usize % 30);
            let pts = random_general_position(n, 5000 + seed, 1 << 16).unwrap();
            let strip = VerticalStrip::around(&pts);
            match strip_cover(&pts, &strip) {
                Ok((path, cons)) => {
                    assert_valid(&path, &cons, &pts, &strip);
                }
                Err(StripError::CapTooSmall { .. }) => {}
                Err(e) => panic!("seed {seed}: {e}"),
            }
        }
    }

    #[test]
    fn two_point_minimum() {
        let pts = vec![Point::ints(0, 0), Point::ints(10, 3)];
        let (path, cons) = run_full(&pts);
        assert_eq!(path.edge_count(), 3);
        assert_eq!(cons.savings, 0);
    }
}
