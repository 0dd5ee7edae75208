//! Closed-form feasibility tests and the r-equitable chromatic number and
//! threshold of `K_{n_1,...,n_t}`.
//!
//! A coloring with no empty class must cut every part `n_i` into `k_i`
//! classes whose sizes all lie in one window `[m, m + r]`. Part `n_i` admits
//! `k_i` such classes iff `⌈n_i/(m+r)⌉ <= k_i <= ⌊n_i/m⌋`, so feasibility
//! comes down to finding a level `m` whose per-part windows are nonempty and
//! whose summed window contains `k`. Colorings with an empty class force the
//! window `[0, r]`, which needs `k > Σ⌈n_i/r⌉`.
//!
//! Every level search is capped at `m <= n_1`: above it the smallest part has
//! `⌊n_1/m⌋ = 0` classes available.

use alloc::vec::Vec;

use crate::arith::{ceil_div, floor_div};
use crate::{EquityQuery, Error, PartiteSizes, MAX_QUANTITY};

/// Evidence that an r-equitable k-coloring exists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FeasibilityWitness {
    /// No color is missing. Part `i` gets `counts[i]` colors and every class
    /// size lies in `[level, level + r]`.
    Full { level: u64, counts: Vec<u64> },
    /// `unused >= 1` colors stay empty. Part `i` gets `counts[i]` colors and
    /// every class size lies in `[0, r]`.
    Missing { counts: Vec<u64>, unused: u64 },
}

impl FeasibilityWitness {
    /// Colors handed to each part.
    pub fn counts(&self) -> &[u64] {
        match self {
            FeasibilityWitness::Full { counts, .. }
            | FeasibilityWitness::Missing { counts, .. } => counts,
        }
    }

    /// Number of empty color classes.
    pub fn unused(&self) -> u64 {
        match self {
            FeasibilityWitness::Full { .. } => 0,
            FeasibilityWitness::Missing { unused, .. } => *unused,
        }
    }

    pub fn is_full(&self) -> bool {
        matches!(self, FeasibilityWitness::Full { .. })
    }

    /// Checks the witness invariants against an instance.
    pub fn validate(&self, sizes: &PartiteSizes, q: EquityQuery) -> Result<(), Error> {
        let counts = self.counts();
        if counts.len() != sizes.parts() {
            return Err(Error::InvalidWitness(
                "one color count per part is required",
            ));
        }
        let mut total: u64 = 0;
        for &c in counts {
            total = total
                .checked_add(c)
                .ok_or(Error::InvalidWitness("color counts overflow"))?;
        }
        let r = q.r();
        match self {
            FeasibilityWitness::Full { level, .. } => {
                let m = *level;
                if m == 0 {
                    return Err(Error::InvalidWitness("level m must be positive"));
                }
                if m > sizes.smallest() {
                    return Err(Error::InvalidWitness("level m exceeds the smallest part"));
                }
                if total != q.k() {
                    return Err(Error::InvalidWitness("color counts do not sum to k"));
                }
                for (n, &c) in sizes.iter().zip(counts) {
                    if c > floor_div(n, m) || c < ceil_div(n, m + r) {
                        return Err(Error::InvalidWitness(
                            "a color count lies outside its level window",
                        ));
                    }
                }
            }
            FeasibilityWitness::Missing { unused, .. } => {
                if r == 0 {
                    return Err(Error::InvalidWitness("empty colors need r >= 1"));
                }
                if *unused == 0 {
                    return Err(Error::InvalidWitness(
                        "a missing-color witness needs unused >= 1",
                    ));
                }
                if total.checked_add(*unused) != Some(q.k()) {
                    return Err(Error::InvalidWitness(
                        "color counts plus unused do not sum to k",
                    ));
                }
                for (n, &c) in sizes.iter().zip(counts) {
                    if c < ceil_div(n, r) {
                        return Err(Error::InvalidWitness(
                            "a part has too few colors for classes of size <= r",
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Can `n` isolated vertices be r-equitably k-colored?
///
/// True iff some integer `m >= 0` has `mk <= n <= (m + r)k`. The largest
/// candidate `m = ⌊n/k⌋` is the only one worth testing.
pub fn iso_feasible(n: u64, k: u64, r: u64) -> Result<bool, Error> {
    if n == 0 {
        return Err(Error::ZeroCount("number of vertices n"));
    }
    if n > MAX_QUANTITY {
        return Err(Error::Overflow("number of vertices n"));
    }
    let q = EquityQuery::new(r, k)?;
    let m = floor_div(n, q.k());
    Ok(ceil_div(n, q.k()) <= m + q.r())
}

/// Is there an r-equitable k-coloring with at least one empty class?
pub fn feasible_missing(sizes: &PartiteSizes, q: EquityQuery) -> bool {
    if q.r() == 0 {
        return false;
    }
    missing_floor(sizes, q.r()) < q.k()
}

/// `Σ⌈n_i/r⌉`: fewest nonempty classes of size at most `r`. Needs `r >= 1`.
fn missing_floor(sizes: &PartiteSizes, r: u64) -> u64 {
    sizes.iter().map(|n| ceil_div(n, r)).sum()
}

/// Every part can be cut into classes with sizes in `[m, m + r]`.
fn level_admissible(sizes: &PartiteSizes, m: u64, r: u64) -> bool {
    sizes.iter().all(|n| floor_div(n, m) >= ceil_div(n, m + r))
}

/// `(Σ⌈n_i/(m+r)⌉, Σ⌊n_i/m⌋)`: the range of k reachable at level `m`.
fn level_range(sizes: &PartiteSizes, m: u64, r: u64) -> (u64, u64) {
    sizes.iter().fold((0, 0), |(lo, hi), n| {
        (lo + ceil_div(n, m + r), hi + floor_div(n, m))
    })
}

/// Is there an r-equitable k-coloring with no empty class?
///
/// Scans levels from `n_1` down and returns the first (largest) level that
/// works. Colors are allocated at each part's lower bound and the surplus is
/// spread in part order up to each part's cap.
pub fn feasible_full(sizes: &PartiteSizes, q: EquityQuery) -> Option<FeasibilityWitness> {
    let (r, k) = (q.r(), q.k());
    let level = (1..=sizes.smallest()).rev().find(|&m| {
        if !level_admissible(sizes, m, r) {
            return false;
        }
        let (lo, hi) = level_range(sizes, m, r);
        lo <= k && k <= hi
    })?;

    let mut counts: Vec<u64> = sizes.iter().map(|n| ceil_div(n, level + r)).collect();
    let mut surplus = k - counts.iter().sum::<u64>();
    for (c, n) in counts.iter_mut().zip(sizes.iter()) {
        if surplus == 0 {
            break;
        }
        let room = floor_div(n, level) - *c;
        let add = room.min(surplus);
        *c += add;
        surplus -= add;
    }
    debug_assert_eq!(surplus, 0);
    Some(FeasibilityWitness::Full { level, counts })
}

/// Is there any r-equitable k-coloring? Prefers a full witness.
pub fn feasible(sizes: &PartiteSizes, q: EquityQuery) -> Option<FeasibilityWitness> {
    if let Some(w) = feasible_full(sizes, q) {
        return Some(w);
    }
    if !feasible_missing(sizes, q) {
        return None;
    }
    let counts: Vec<u64> = sizes.iter().map(|n| ceil_div(n, q.r())).collect();
    let unused = q.k() - counts.iter().sum::<u64>();
    Some(FeasibilityWitness::Missing { counts, unused })
}

/// A chromatic value together with the level `θ` it was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelValue {
    pub value: u64,
    pub theta: u64,
}

/// Admissible levels `m` in ascending order: every part splits into classes
/// with sizes in `[m, m + r]`. Always starts with 1.
pub fn admissible_levels(sizes: &PartiteSizes, r: u64) -> Vec<u64> {
    (1..=sizes.smallest())
        .filter(|&m| level_admissible(sizes, m, r))
        .collect()
}

/// r-equitable chromatic number with its level: `θ` is the largest admissible
/// level and the value is `Σ⌈n_i/(θ+r)⌉`.
pub fn chromatic_number_detail(sizes: &PartiteSizes, r: u64) -> LevelValue {
    let theta = (1..=sizes.smallest())
        .rev()
        .find(|&m| level_admissible(sizes, m, r))
        .expect("level 1 is always admissible");
    let value = sizes.iter().map(|n| ceil_div(n, theta + r)).sum();
    LevelValue { value, theta }
}

/// Least k admitting an r-equitable k-coloring.
pub fn chromatic_number(sizes: &PartiteSizes, r: u64) -> u64 {
    chromatic_number_detail(sizes, r).value
}

/// r-equitable chromatic threshold with its level.
///
/// Walks the admissible levels `m_1 < ... < m_x` and stops at the first `m_j`
/// whose lower reach `Σ⌈n_i/(m_j+r)⌉` leaves a gap of two or more above the
/// upper reach `Σ⌊n_i/m_{j+1}⌋` of the next level, or at `m_x`.
pub fn chromatic_threshold_detail(sizes: &PartiteSizes, r: u64) -> Result<LevelValue, Error> {
    if r == 0 {
        return Err(Error::ThresholdUndefined);
    }
    let levels = admissible_levels(sizes, r);
    let lower = |m: u64| -> u64 { sizes.iter().map(|n| ceil_div(n, m + r)).sum() };
    let upper = |m: u64| -> u64 { sizes.iter().map(|n| floor_div(n, m)).sum() };
    let theta = levels
        .windows(2)
        .find(|pair| lower(pair[0]) > upper(pair[1]) + 1)
        .map(|pair| pair[0])
        .unwrap_or(levels[levels.len() - 1]);
    Ok(LevelValue {
        value: lower(theta),
        theta,
    })
}

/// Least n such that an r-equitable k-coloring exists for every `k >= n`.
/// Undefined, and rejected, for `r = 0`.
pub fn chromatic_threshold(sizes: &PartiteSizes, r: u64) -> Result<u64, Error> {
    chromatic_threshold_detail(sizes, r).map(|v| v.value)
}
