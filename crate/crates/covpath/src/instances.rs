//! Deterministic instance generators: random general-position sets, planted
//! caps inside a strip, the twin construction near the parabola, and the
//! parabola lift for the sorting reduction.

use std::collections::HashSet;

use num::bigint::BigInt;
use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geom::{dist2_point_line, ratio, scalar, Line, Point, Scalar};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("span {span} too small for {n} points; need span^2 >= 4 n^3")]
    SpanTooSmall { n: usize, span: u64 },
    #[error("duplicate number {0}")]
    DuplicateNumber(String),
    #[error("parameter search exhausted: {0}")]
    ParameterSearchExhausted(String),
}

/// `n` integer points in `[0, span]^2`, pairwise distinct x, no three
/// collinear. Deterministic per seed; rejection sampling with per-point
/// direction sets keeps it at O(n^2) work.
pub fn random_general_position(
    n: usize,
    seed: u64,
    span: u64,
) -> Result<Vec<Point>, InstanceError> {
    assert!(n >= 1);
    let span_sq = (span as u128) * (span as u128);
    let need = 4u128.saturating_mul(n as u128).saturating_mul(n as u128).saturating_mul(n as u128);
    if span_sq < need {
        return Err(InstanceError::SpanTooSmall { n, span });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<(i64, i64)> = Vec::with_capacity(n);
    let mut xs: HashSet<i64> = HashSet::new();
    // dirs[i] holds the reduced direction from point i to every later point.
    let mut dirs: Vec<HashSet<(i64, i64)>> = Vec::with_capacity(n);

    'outer: while pts.len() < n {
        let cx = rng.random_range(0..=span) as i64;
        let cy = rng.random_range(0..=span) as i64;
        if xs.contains(&cx) {
            continue;
        }
        for (i, &(px, py)) in pts.iter().enumerate() {
            let d = reduced_dir(cx - px, cy - py);
            if dirs[i].contains(&d) {
                continue 'outer;
            }
        }
        for (i, &(px, py)) in pts.iter().enumerate() {
            dirs[i].insert(reduced_dir(cx - px, cy - py));
        }
        dirs.push(HashSet::new());
        xs.insert(cx);
        pts.push((cx, cy));
    }
    Ok(pts.into_iter().map(|(x, y)| Point::ints(x, y)).collect())
}

fn reduced_dir(dx: i64, dy: i64) -> (i64, i64) {
    let g = gcd64(dx.unsigned_abs(), dy.unsigned_abs()) as i64;
    let (mut a, mut b) = (dx / g, dy / g);
    if b < 0 || (b == 0 && a < 0) {
        a = -a;
        b = -b;
    }
    (a, b)
}

fn gcd64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

/// A strip instance with a planted cap of even size `k` plus fillers placed
/// so the planted cap stays the unique longest cap/cup: a deep cup wedged
/// between the two middle cap points, high filler points far to the left,
/// and (for k >= 6) one filler just above the cap cover's last turn vertex.
pub fn planted_cap_strip(n: usize, k: usize) -> Vec<Point> {
    assert!(k >= 2 && k % 2 == 0 && k <= n);
    let ki = k as i64;
    let cap: Vec<Point> = (1..=ki)
        .map(|i| Point::ints(10 * i, -(2 * i - ki - 1).pow(2)))
        .collect();

    let special = usize::from(k >= 6);
    let rest = n - k - special.min(n - k);
    let above_left = rest / 2;
    let below = rest - above_left;
    let mut pts = cap.clone();

    if below > 0 {
        // Deep cup in the gap between the two middle cap points.
        let m = ki / 2;
        let b = below as i64;
        for j in 0..b {
            let x = scalar(10 * m) + ratio(10 * (j + 1), b + 1);
            let y = scalar(-100_000 + (2 * j - b + 1).pow(2));
            pts.push(Point::new(x, y));
        }
    }

    if above_left > 0 {
        // High cup far left of the cap, above the first chord's line.
        let first_chord = Line::through(&cap[0], &cap[1]);
        let a = above_left as i64;
        let mut base: Option<Scalar> = None;
        let xs: Vec<Scalar> = (0..a).map(|i| scalar(-10 * (a - i))).collect();
        for x in &xs {
            let h = first_chord.y_at(x);
            if base.as_ref().map_or(true, |b| h > *b) {
                base = Some(h);
            }
        }
        let base = base.unwrap() + scalar(500);
        for (i, x) in xs.iter().enumerate() {
            let i = i as i64;
            let y = &base + scalar((2 * i - a + 1).pow(2)) + ratio(i + 1, 3);
            pts.push(Point::new(x.clone(), y));
        }
    }

    if special > 0 && n > k {
        // One point inside the upward wedge at the last interior turn of the
        // cap cover: above both of the last two odd chord lines.
        let la = Line::through(&cap[k - 4], &cap[k - 3]);
        let lb = Line::through(&cap[k - 2], &cap[k - 1]);
        let q = la.intersect(&lb).expect("chord slopes differ");
        let x = &q.x + ratio(1, 7);
        let ya = la.y_at(&x);
        let yb = lb.y_at(&x);
        let y = if ya > yb { ya } else { yb } + Scalar::one();
        pts.push(Point::new(x, y));
    }

    assert_eq!(pts.len(), n);
    pts
}

/// Exact lift `x -> (x, x^2)`.
pub fn parabola_lift(numbers: &[Scalar]) -> Result<Vec<Point>, InstanceError> {
    let mut seen: HashSet<Scalar> = HashSet::new();
    for v in numbers {
        if !seen.insert(v.clone()) {
            return Err(InstanceError::DuplicateNumber(v.to_string()));
        }
    }
    Ok(numbers
        .iter()
        .map(|v| Point::new(v.clone(), v * v))
        .collect())
}

/// Greedy Sidon (Mian–Chowla) prefix: pairwise sums all distinct.
pub fn mian_chowla(k: usize) -> Vec<i64> {
    let mut xs: Vec<i64> = Vec::with_capacity(k);
    let mut sums: HashSet<i64> = HashSet::new();
    let mut cand = 1i64;
    while xs.len() < k {
        let ok = xs.iter().all(|&x| !sums.contains(&(x + cand))) && !sums.contains(&(2 * cand));
        if ok {
            for &x in &xs {
                sums.insert(x + cand);
            }
            sums.insert(2 * cand);
            xs.push(cand);
        }
        cand += 1;
    }
    xs
}

/// Rational `r` with `r^2 <= x`, close to `sqrt(x)`.
pub fn sqrt_under(x: &Scalar) -> Scalar {
    assert!(!x.is_negative());
    if x.is_zero() {
        return Scalar::zero();
    }
    // sqrt(p/q) = sqrt(p q) / q, floored via integer sqrt.
    let p = x.numer().to_biguint().expect("non-negative");
    let q = x.denom().to_biguint().expect("positive");
    let scaled = &p * &q;
    let root = scaled.sqrt();
    Scalar::new(BigInt::from(root), BigInt::from(q))
}

/// Parameters of the twin construction, kept for reproducibility and
/// re-verification.
#[derive(Clone, Debug)]
pub struct TwinParams {
    pub k: usize,
    pub sidon_xs: Vec<i64>,
    /// Rational under-approximation of tan of half the minimum angle between
    /// lines spanned by the parabola points.
    pub phi_bound: Scalar,
    pub eps: Scalar,
    pub delta: Scalar,
    pub line_slopes: Vec<Scalar>,
}

/// The lower-bound twin construction: k points on the parabola over a Sidon
/// set, each paired with a nearby twin chosen in reverse order.
///
/// Returns points ordered `a_1..a_k, b_1..b_k`.
pub fn twin_lower_bound_set(k: usize) -> Result<(Vec<Point>, TwinParams), InstanceError> {
    assert!(k >= 2);
    let sidon = mian_chowla(k);
    let a_pts: Vec<Point> = sidon.iter().map(|&x| Point::ints(x, x * x)).collect();

    // eps: below half the smallest point-to-line distance over triples, so no
    // line can pass within eps of three of the a_i at once.
    let mut min_d2: Option<Scalar> = None;
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            for l in (j + 1)..k {
                if l == i {
                    continue;
                }
                let line = Line::through(&a_pts[j], &a_pts[l]);
                let d2 = dist2_point_line(&a_pts[i], &line);
                if min_d2.as_ref().map_or(true, |m| d2 < *m) {
                    min_d2 = Some(d2);
                }
            }
        }
    }
    let eps = match min_d2 {
        Some(d2) => {
            let e = sqrt_under(&d2) / scalar(2);
            if e.is_zero() {
                ratio(1, 2)
            } else {
                e
            }
        }
        // k = 2: no triple of centers, any eps works.
        None => ratio(1, 2),
    };

    // tan of the minimum angle between lines determined by the a_i; slopes on
    // the parabola are pairwise coordinate sums, all positive and distinct.
    let mut slopes: Vec<Scalar> = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            slopes.push(scalar(sidon[i] + sidon[j]));
        }
    }
    let mut tan_2phi: Option<Scalar> = None;
    for i in 0..slopes.len() {
        for j in (i + 1)..slopes.len() {
            let t = ((&slopes[i] - &slopes[j]) / (Scalar::one() + &slopes[i] * &slopes[j])).abs();
            if tan_2phi.as_ref().map_or(true, |m| t < *m) {
                tan_2phi = Some(t);
            }
        }
    }
    let tan_2phi = tan_2phi.unwrap_or_else(|| Scalar::one());
    // tan(theta/2) >= tan(theta)/(2 + tan(theta)); sin >= tan/(1 + tan).
    let tan_phi = &tan_2phi / (scalar(2) + &tan_2phi);
    let tan_half_phi = &tan_phi / (scalar(2) + &tan_phi);
    let sin_half_phi_under = &tan_half_phi / (Scalar::one() + &tan_half_phi);

    // delta_0 from the near-parallel lemma, then the chord-sag minima.
    let delta0 = &eps * &sin_half_phi_under / scalar(2);
    let mut delta = delta0.clone();
    for i in 0..(k - 1) {
        let dx = scalar(sidon[i + 1] - sidon[i]);
        let m = scalar(sidon[i] + sidon[i + 1]); // chord slope
        // Max vertical sag (dx^2)/4 shrunk by a rational lower bound on the
        // cosine of the chord angle: 1/(1+m) <= 1/sqrt(1+m^2).
        let sag = &dx * &dx / scalar(4) / (Scalar::one() + m);
        if sag < delta {
            delta = sag;
        }
    }

    let mut twins = construct_twins(&a_pts, &sidon, &eps, &delta, 0)?;
    // Condition (3) can in principle fail for a batch of twin choices; retry
    // with globally smaller steps if it does.
    let mut extra = 0;
    while !concurrency_ok(&a_pts, &twins) {
        extra += 1;
        if extra > 8 {
            return Err(InstanceError::ParameterSearchExhausted(
                "three lines through disjoint pairs stay concurrent".into(),
            ));
        }
        twins = construct_twins(&a_pts, &sidon, &eps, &delta, extra)?;
    }

    let mut pts = a_pts;
    let line_slopes: Vec<Scalar> = twins.iter().map(|(_, s)| s.clone()).collect();
    pts.extend(twins.into_iter().map(|(b, _)| b));

    let params = TwinParams {
        k,
        sidon_xs: sidon,
        phi_bound: tan_half_phi,
        eps,
        delta,
        line_slopes,
    };
    Ok((pts, params))
}

/// Chooses b_k..b_1 in reverse order on lines of strictly decreasing slope,
/// halving each step toward a_i until all exact conditions hold.
fn construct_twins(
    a_pts: &[Point],
    sidon: &[i64],
    eps: &Scalar,
    delta: &Scalar,
    extra_halvings: u32,
) -> Result<Vec<(Point, Scalar)>, InstanceError> {
    let k = a_pts.len();
    let eps2 = eps * eps;
    let mut chosen: Vec<(Point, Scalar)> = vec![(Point::ints(0, 0), Scalar::zero()); k];
    let mut have: Vec<Point> = a_pts.to_vec();

    let mut slope_next: Option<Scalar> = None;
    for i in (0..k).rev() {
        let ai = &a_pts[i];
        let tangent = scalar(2 * sidon[i]);
        let slope = match &slope_next {
            None => &tangent + Scalar::one(),
            Some(s) => {
                let min_needed = if tangent > *s { tangent.clone() } else { s.clone() };
                min_needed + Scalar::one()
            }
        };

        // Start inside D_i(delta) and above the parabola, then halve until
        // the pairwise meet conditions and general position hold.
        let mut t = {
            let cap_parabola = &slope - scalar(2 * sidon[i]);
            let cap_disk = delta / (Scalar::one() + &slope);
            let base = if cap_parabola < cap_disk { cap_parabola } else { cap_disk };
            base / scalar(2)
        };
        for _ in 0..extra_halvings {
            t = t / scalar(2);
        }

        let mut depth = 0;
        let b = loop {
            depth += 1;
            if depth > 200 {
                return Err(InstanceError::ParameterSearchExhausted(format!(
                    "twin {i}: halving depth exceeded"
                )));
            }
            let cand = Point::new(&ai.x + &t, &ai.y + &t * &slope);
            if twin_constraints_hold(ai, &cand, i, a_pts, &chosen[(i + 1)..], &have, &eps2) {
                break cand;
            }
            t = &t / scalar(2);
        };
        have.push(b.clone());
        chosen[i] = (b, slope.clone());
        slope_next = Some(slope);
    }
    Ok(chosen)
}

fn twin_constraints_hold(
    ai: &Point,
    cand: &Point,
    i: usize,
    a_pts: &[Point],
    later: &[(Point, Scalar)],
    have: &[Point],
    eps2: &Scalar,
) -> bool {
    // Above the parabola.
    if cand.y <= &cand.x * &cand.x {
        return false;
    }
    // Meet condition against every later twin: lines a_i a_j and b_i b_j
    // intersect inside D_i(eps).
    for (jo, (bj, _)) in later.iter().enumerate() {
        let j = i + 1 + jo;
        let aj = &a_pts[j];
        let la = Line::through(ai, aj);
        if cand == bj {
            return false;
        }
        let lb = Line::through(cand, bj);
        match la.intersect(&lb) {
            None => return false,
            Some(z) => {
                if ai.dist2(&z) >= *eps2 {
                    return false;
                }
            }
        }
    }
    // Incremental general position: no collinear triple, no parallel pair of
    // lines through the candidate.
    let mut dir_seen: HashSet<(BigInt, BigInt)> = HashSet::new();
    for p in have {
        if p == cand {
            return false;
        }
        let d = canonical_dir_big(cand, p);
        if !dir_seen.insert(d) {
            return false;
        }
    }
    // New slopes must not duplicate any existing line's slope.
    let mut existing: HashSet<(BigInt, BigInt)> = HashSet::new();
    for (x, p) in have.iter().enumerate() {
        for q in have.iter().skip(x + 1) {
            existing.insert(canonical_dir_big(p, q));
        }
    }
    for p in have {
        if existing.contains(&canonical_dir_big(cand, p)) {
            return false;
        }
    }
    true
}

fn canonical_dir_big(p: &Point, q: &Point) -> (BigInt, BigInt) {
    let dx = &q.x - &p.x;
    let dy = &q.y - &p.y;
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

/// Condition (3): no three lines through pairwise disjoint point pairs meet
/// in one point.
fn concurrency_ok(a_pts: &[Point], twins: &[(Point, Scalar)]) -> bool {
    let mut pts: Vec<Point> = a_pts.to_vec();
    pts.extend(twins.iter().map(|(b, _)| b.clone()));
    crate::geom::general_position_report(
        &pts,
        crate::geom::PositionChecks {
            parallel_lines: false,
            concurrent_lines: true,
        },
    )
    .is_ok()
}

/// Independent re-check of every exact constraint the twin construction
/// promises. Recomputes everything from the returned data.
pub fn verify_twin_construction(points: &[Point], params: &TwinParams) -> Result<(), String> {
    let k = params.k;
    if points.len() != 2 * k {
        return Err(format!("expected {} points, got {}", 2 * k, points.len()));
    }
    let (a_pts, b_pts) = points.split_at(k);

    // Sidon x-set: pairwise sums distinct, hence no two lines over A parallel.
    let mut sums = HashSet::new();
    for i in 0..k {
        for j in i..k {
            if !sums.insert(params.sidon_xs[i] + params.sidon_xs[j]) {
                return Err("sidon sums collide".into());
            }
        }
    }
    for (i, a) in a_pts.iter().enumerate() {
        let x = scalar(params.sidon_xs[i]);
        if a.x != x || a.y != &x * &x {
            return Err(format!("a_{i} is not on the parabola over its Sidon x"));
        }
    }

    let eps2 = &params.eps * &params.eps;
    let delta2 = &params.delta * &params.delta;
    if params.delta >= params.eps {
        return Err("delta must stay below eps".into());
    }

    for i in 0..k {
        let (a, b) = (&a_pts[i], &b_pts[i]);
        if b.y <= &b.x * &b.x {
            return Err(format!("b_{i} not strictly above the parabola"));
        }
        if a.dist2(b) >= delta2 {
            return Err(format!("b_{i} escapes D_i(delta)"));
        }
        let slope = (&b.y - &a.y) / (&b.x - &a.x);
        if slope != params.line_slopes[i] {
            return Err(format!("recorded slope of line {i} is wrong"));
        }
        if slope <= scalar(2 * params.sidon_xs[i]) {
            return Err(format!("line {i} not steeper than the tangent"));
        }
        if i + 1 < k && params.line_slopes[i] <= params.line_slopes[i + 1] {
            return Err(format!("line slopes must strictly decrease at {i}"));
        }
        for j in (i + 1)..k {
            let la = Line::through(a, &a_pts[j]);
            let lb = Line::through(b, &b_pts[j]);
            let z = la
                .intersect(&lb)
                .ok_or_else(|| format!("lines for twins {i},{j} are parallel"))?;
            if a.dist2(&z) >= eps2 {
                return Err(format!("twins {i},{j}: supporting lines miss D_i(eps)"));
            }
        }
    }

    // eps soundness: no line passes within eps of three of the a_i.
    for i in 0..k {
        for j in 0..k {
            if j == i {
                continue;
            }
            for l in (j + 1)..k {
                if l == i {
                    continue;
                }
                let line = Line::through(&a_pts[j], &a_pts[l]);
                if dist2_point_line(&a_pts[i], &line) <= scalar(4) * &eps2 {
                    return Err(format!("eps too large for triple ({i},{j},{l})"));
                }
            }
        }
    }

    let checks = if k <= 10 {
        crate::geom::PositionChecks::all()
    } else {
        crate::geom::PositionChecks {
            parallel_lines: true,
            concurrent_lines: false,
        }
    };
    match crate::geom::general_position_report(points, checks) {
        crate::geom::PositionReport::Ok => Ok(()),
        bad => Err(format!("general position violated: {bad:?}")),
    }
}

/// Exact ceil(n / log2(n)) wrapper re-exported for CLI use.
pub fn partition_threshold(n: usize) -> usize {
    crate::caps_cups::default_threshold(n)
}
