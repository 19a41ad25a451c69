//! Longest caps and cups, the Erdős–Szekeres threshold, and the greedy
//! cap/cup partition.
//!
//! A cap is an x-increasing sequence of points whose consecutive chord slopes
//! strictly decrease; a cup has strictly increasing slopes. The dynamic
//! program over point pairs finds a maximum-size cap or cup in O(n^3), and a
//! subset-enumeration oracle backs it up in tests.

use num::bigint::BigUint;
use num::{One, Zero};
use thiserror::Error;

use crate::geom::{orientation, Orientation, Point};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChainKind {
    Cap,
    Cup,
}

/// Convexity mode: strict chains reject collinear triples, weak chains allow
/// them (equal slopes).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Convexity {
    Strict,
    Weak,
}

/// An x-monotone convex chain, as indices into a point set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chain {
    pub indices: Vec<usize>,
    pub kind: ChainKind,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn points(&self, points: &[Point]) -> Vec<Point> {
        self.indices.iter().map(|&i| points[i].clone()).collect()
    }

    /// Rechecks the slope-monotonicity invariant with exact predicates.
    pub fn is_valid(&self, points: &[Point], mode: Convexity) -> bool {
        if self.indices.len() < 2 {
            return false;
        }
        for w in self.indices.windows(2) {
            if points[w[0]].x >= points[w[1]].x {
                return false;
            }
        }
        for w in self.indices.windows(3) {
            let o = orientation(&points[w[0]], &points[w[1]], &points[w[2]]);
            let ok = match (self.kind, mode) {
                (ChainKind::Cup, Convexity::Strict) => o == Orientation::Left,
                (ChainKind::Cap, Convexity::Strict) => o == Orientation::Right,
                (ChainKind::Cup, Convexity::Weak) => o != Orientation::Right,
                (ChainKind::Cap, Convexity::Weak) => o != Orientation::Left,
            };
            if !ok {
                return false;
            }
        }
        true
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("need at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("brute force limited to 20 points, got {0}")]
    InstanceTooLarge(usize),
}

/// Smallest set size forcing a k-cup or an l-cap: C(k+l-4, k-2) + 1.
pub fn es_bound(k: u32, l: u32) -> BigUint {
    assert!(k >= 2 && l >= 2);
    binomial(k + l - 4, k - 2) + BigUint::one()
}

fn binomial(n: u32, mut k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    if k > n - k {
        k = n - k;
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Precomputed orientation signs over x-sorted positions: +1 left turn,
/// -1 right turn, 0 collinear.
struct TurnTable {
    n: usize,
    signs: Vec<i8>,
}

impl TurnTable {
    fn build(points: &[Point]) -> Self {
        let n = points.len();
        let mut signs = vec![0i8; n * n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let s = match orientation(&points[i], &points[j], &points[k]) {
                        Orientation::Left => 1,
                        Orientation::Right => -1,
                        Orientation::Collinear => 0,
                    };
                    signs[(i * n + j) * n + k] = s;
                }
            }
        }
        TurnTable { n, signs }
    }

    fn sign(&self, i: usize, j: usize, k: usize) -> i8 {
        self.signs[(i * self.n + j) * self.n + k]
    }

    fn extends(&self, kind: ChainKind, mode: Convexity, i: usize, j: usize, k: usize) -> bool {
        let s = self.sign(i, j, k);
        match (kind, mode) {
            (ChainKind::Cup, Convexity::Strict) => s > 0,
            (ChainKind::Cap, Convexity::Strict) => s < 0,
            (ChainKind::Cup, Convexity::Weak) => s >= 0,
            (ChainKind::Cap, Convexity::Weak) => s <= 0,
        }
    }
}

fn sorted_positions(points: &[Point]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].x.cmp(&points[b].x));
    for w in order.windows(2) {
        assert!(
            points[w[0]].x != points[w[1]].x,
            "points must have pairwise distinct x (shear first)"
        );
    }
    order
}

/// Maximum-size cap or cup via the pairwise dynamic program.
///
/// Ties are broken toward cups, then toward the lexicographically smallest
/// sequence of x-sorted positions.
pub fn longest_cap_cup(points: &[Point], mode: Convexity) -> Result<Chain, ChainError> {
    if points.len() < 2 {
        return Err(ChainError::TooFewPoints(points.len()));
    }
    let order = sorted_positions(points);
    let sorted: Vec<Point> = order.iter().map(|&i| points[i].clone()).collect();
    let table = TurnTable::build(&sorted);

    let cup = dp_best(&sorted, &table, ChainKind::Cup, mode);
    let cap = dp_best(&sorted, &table, ChainKind::Cap, mode);
    let best = if cup.len() >= cap.len() { cup } else { cap };
    Ok(Chain {
        indices: best.indices.iter().map(|&i| order[i]).collect(),
        kind: best.kind,
    })
}

/// Longest chain of the given kind, starting from each edge; `suffix[i][j]` is
/// the number of vertices on the longest chain starting with edge (i, j).
fn dp_best(sorted: &[Point], table: &TurnTable, kind: ChainKind, mode: Convexity) -> Chain {
    let n = sorted.len();
    let mut suffix = vec![vec![2u32; n]; n];
    for i in (0..n).rev() {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if table.extends(kind, mode, i, j, k) {
                    let cand = suffix[j][k] + 1;
                    if cand > suffix[i][j] {
                        suffix[i][j] = cand;
                    }
                }
            }
        }
    }

    let mut best = 2;
    for i in 0..n {
        for j in (i + 1)..n {
            if suffix[i][j] > best {
                best = suffix[i][j];
            }
        }
    }

    // Greedy lexicographic reconstruction over x-sorted positions.
    let (mut ci, mut cj) = 'scan: {
        for i in 0..n {
            for j in (i + 1)..n {
                if suffix[i][j] == best {
                    break 'scan (i, j);
                }
            }
        }
        unreachable!("some pair attains the maximum");
    };
    let mut indices = vec![ci, cj];
    let mut remaining = best - 2;
    while remaining > 0 {
        let next = ((cj + 1)..n)
            .find(|&k| table.extends(kind, mode, ci, cj, k) && suffix[cj][k] == remaining + 1)
            .expect("dp table admits a continuation");
        indices.push(next);
        ci = cj;
        cj = next;
        remaining -= 1;
    }
    Chain { indices, kind }
}

/// Exhaustive maximum cap/cup over all subsets; the independent test oracle
/// for the dynamic program. Same tie-breaking rules.
pub fn longest_cap_cup_bruteforce(points: &[Point], mode: Convexity) -> Result<Chain, ChainError> {
    if points.len() < 2 {
        return Err(ChainError::TooFewPoints(points.len()));
    }
    if points.len() > 20 {
        return Err(ChainError::InstanceTooLarge(points.len()));
    }
    let order = sorted_positions(points);
    let sorted: Vec<Point> = order.iter().map(|&i| points[i].clone()).collect();
    let table = TurnTable::build(&sorted);
    let n = sorted.len();

    let mut best: Option<Chain> = None;
    let mut subset = Vec::new();
    for mask in 1u32..(1 << n) {
        if (mask.count_ones() as usize) < 2 {
            continue;
        }
        subset.clear();
        for i in 0..n {
            if mask & (1 << i) != 0 {
                subset.push(i);
            }
        }
        'kinds: for kind in [ChainKind::Cup, ChainKind::Cap] {
            for w in subset.windows(3) {
                if !table.extends(kind, mode, w[0], w[1], w[2]) {
                    continue 'kinds;
                }
            }
            let cand = Chain {
                indices: subset.clone(),
                kind,
            };
            best = Some(match best.take() {
                None => cand,
                Some(cur) => pick_better(cur, cand),
            });
        }
    }
    let found = best.expect("any two points form a chain");
    Ok(Chain {
        indices: found.indices.iter().map(|&i| order[i]).collect(),
        kind: found.kind,
    })
}

fn pick_better(a: Chain, b: Chain) -> Chain {
    if a.len() != b.len() {
        return if a.len() > b.len() { a } else { b };
    }
    // Cup beats cap, then lexicographically smaller position sequence.
    match (a.kind, b.kind) {
        (ChainKind::Cap, ChainKind::Cup) => b,
        (ChainKind::Cup, ChainKind::Cap) => a,
        _ => {
            if b.indices < a.indices {
                b
            } else {
                a
            }
        }
    }
}

/// Result of the greedy partition: extracted chains (in extraction order) and
/// the leftover indices.
#[derive(Clone, Debug)]
pub struct PartitionResult {
    pub chains: Vec<Chain>,
    pub leftovers: Vec<usize>,
}

impl PartitionResult {
    /// Every index appears exactly once across chains and leftovers.
    pub fn is_partition(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        let mut count = 0;
        for idx in self
            .chains
            .iter()
            .flat_map(|c| c.indices.iter())
            .chain(self.leftovers.iter())
        {
            if *idx >= n || seen[*idx] {
                return false;
            }
            seen[*idx] = true;
            count += 1;
        }
        count == n
    }
}

/// Repeatedly extracts a maximum cap/cup until fewer than `threshold` points
/// remain.
pub fn greedy_partition(points: &[Point], threshold: usize, mode: Convexity) -> PartitionResult {
    assert!(threshold >= 1);
    let mut live: Vec<usize> = (0..points.len()).collect();
    let mut chains = Vec::new();
    while live.len() >= threshold.max(2) {
        let sub: Vec<Point> = live.iter().map(|&i| points[i].clone()).collect();
        let chain = longest_cap_cup(&sub, mode).expect("at least 2 points");
        let picked: Vec<usize> = chain.indices.iter().map(|&i| live[i]).collect();
        let mut drop = vec![false; live.len()];
        for &i in &chain.indices {
            drop[i] = true;
        }
        live = live
            .iter()
            .enumerate()
            .filter(|&(pos, _)| !drop[pos])
            .map(|(_, &idx)| idx)
            .collect();
        chains.push(Chain {
            indices: picked,
            kind: chain.kind,
        });
    }
    PartitionResult {
        chains,
        leftovers: live,
    }
}

/// Exact `ceil(n / log2(n))`, the default partition threshold.
///
/// `t >= n / log2(n)` is equivalent to `n^t >= 2^n`, which big integers can
/// decide without any rounding.
pub fn default_threshold(n: usize) -> usize {
    if n <= 2 {
        return n.max(1);
    }
    let target = BigUint::one() << n;
    let big_n = BigUint::from(n);
    let satisfies = |t: usize| big_n.pow(t as u32) >= target;
    // Start at the float estimate and fix up in either direction.
    let mut t = ((n as f64) / (n as f64).log2()).ceil() as usize;
    t = t.max(1);
    while !satisfies(t) {
        t += 1;
    }
    while t > 1 && satisfies(t - 1) {
        t -= 1;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::scalar;
    use crate::instances::random_general_position;

    fn parabola(n: i64, flip: bool) -> Vec<Point> {
        (1..=n)
            .map(|i| {
                let y = if flip { -i * i } else { i * i };
                Point::ints(i, y)
            })
            .collect()
    }

    #[test]
    fn es_bound_values() {
        assert_eq!(es_bound(4, 4), BigUint::from(7u32));
        assert_eq!(es_bound(18, 18), BigUint::from(601_080_391u64));
        assert_eq!(es_bound(2, 2), BigUint::from(2u32));
    }

    #[test]
    fn parabola_is_one_cup() {
        let chain = longest_cap_cup(&parabola(8, false), Convexity::Strict).unwrap();
        assert_eq!(chain.len(), 8);
        assert_eq!(chain.kind, ChainKind::Cup);
        assert!(chain.is_valid(&parabola(8, false), Convexity::Strict));
    }

    #[test]
    fn reflected_parabola_is_one_cap() {
        let pts = parabola(8, true);
        let chain = longest_cap_cup(&pts, Convexity::Strict).unwrap();
        assert_eq!(chain.len(), 8);
        assert_eq!(chain.kind, ChainKind::Cap);
        assert!(chain.is_valid(&pts, Convexity::Strict));
    }

    #[test]
    fn collinear_points_weak_vs_strict() {
        let pts = vec![Point::ints(0, 0), Point::ints(1, 1), Point::ints(2, 2)];
        let weak = longest_cap_cup_bruteforce(&pts, Convexity::Weak).unwrap();
        assert_eq!(weak.len(), 3);
        let strict = longest_cap_cup_bruteforce(&pts, Convexity::Strict).unwrap();
        assert_eq!(strict.len(), 2);
    }

    #[test]
    fn dp_matches_bruteforce_randomized() {
        for seed in 0..60 {
            let n = 4 + (seed as usize % 9);
            let pts = random_general_position(n, seed, 1000).unwrap();
            let dp = longest_cap_cup(&pts, Convexity::Strict).unwrap();
            let bf = longest_cap_cup_bruteforce(&pts, Convexity::Strict).unwrap();
            assert_eq!(dp.len(), bf.len(), "seed {seed}");
            assert_eq!(dp.kind, bf.kind, "seed {seed}");
            assert_eq!(dp.indices, bf.indices, "seed {seed}");
            assert!(dp.is_valid(&pts, Convexity::Strict));
        }
    }

    #[test]
    fn seven_points_contain_four_chain() {
        for seed in 100..160 {
            let pts = random_general_position(7, seed, 500).unwrap();
            let best = longest_cap_cup(&pts, Convexity::Strict).unwrap();
            assert!(best.len() >= 4, "seed {seed}: got {}", best.len());
        }
    }

    #[test]
    fn greedy_partition_parabola() {
        let pts = parabola(8, false);
        let part = greedy_partition(&pts, 1, Convexity::Strict);
        assert_eq!(part.chains.len(), 1);
        assert_eq!(part.chains[0].len(), 8);
        assert!(part.leftovers.is_empty());
        assert!(part.is_partition(8));
    }

    #[test]
    fn greedy_partition_never_runs() {
        let pts = parabola(6, false);
        let part = greedy_partition(&pts, 7, Convexity::Strict);
        assert!(part.chains.is_empty());
        assert_eq!(part.leftovers.len(), 6);
    }

    #[test]
    fn greedy_partition_postconditions() {
        let n = 200;
        let pts = random_general_position(n, 42, 1 << 20).unwrap();
        let threshold = default_threshold(n);
        let part = greedy_partition(&pts, threshold, Convexity::Strict);
        assert!(part.is_partition(n));
        assert!(part.leftovers.len() < threshold);
        for chain in &part.chains {
            assert!(chain.len() >= 2);
            assert!(chain.is_valid(&pts, Convexity::Strict));
        }
    }

    #[test]
    fn extracted_chains_were_maximum_for_their_residual() {
        let n = 40;
        let pts = random_general_position(n, 7, 4000).unwrap();
        let threshold = default_threshold(n);
        let part = greedy_partition(&pts, threshold, Convexity::Strict);
        // Replay the extraction, checking maximality against a fresh DP run
        // on a snapshot of each residual set.
        let mut live: Vec<usize> = (0..n).collect();
        for chain in &part.chains {
            let sub: Vec<Point> = live.iter().map(|&i| pts[i].clone()).collect();
            let fresh = longest_cap_cup(&sub, Convexity::Strict).unwrap();
            assert_eq!(fresh.len(), chain.len());
            let taken: std::collections::HashSet<usize> = chain.indices.iter().copied().collect();
            live.retain(|i| !taken.contains(i));
        }
    }

    #[test]
    fn default_threshold_exact() {
        // ceil(n / log2 n) spot checks: log2(8) = 3 exactly.
        assert_eq!(default_threshold(8), 3);
        assert_eq!(default_threshold(2), 2);
        // 100 / log2(100) = 15.05..., so 16.
        assert_eq!(default_threshold(100), 16);
        // 1024 / 10 = 102.4, so 103.
        assert_eq!(default_threshold(1024), 103);
    }

    #[test]
    fn scalar_coordinates_supported() {
        let pts = vec![
            Point::new(scalar(0), scalar(0)),
            Point::new(crate::geom::ratio(1, 2), scalar(3)),
            Point::new(scalar(2), scalar(1)),
        ];
        let chain = longest_cap_cup(&pts, Convexity::Strict).unwrap();
        assert_eq!(chain.len(), 3);
    }
}
