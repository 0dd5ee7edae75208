//! Older closed forms, transcribed as cross-checks.
//!
//! The `wu_*` and `lam_chi` formulas describe classical equitable coloring,
//! which coincides with 1-equitable coloring. The `balanced_*` formulas cover
//! `K_{t(n)}` for any `r`. None of these share code with
//! [`crate::feasibility`].

use crate::arith::{ceil_div, floor_div};
use crate::{EquityQuery, Error, PartiteSizes};

/// `K_{t(n)}`: `t >= 2` parts, all of size `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BalancedInstance {
    t: u64,
    n: u64,
}

impl BalancedInstance {
    pub fn new(t: u64, n: u64) -> Result<Self, Error> {
        if t < 2 {
            return Err(Error::TooFewParts { count: t as usize });
        }
        if n == 0 {
            return Err(Error::EmptyPart { index: 0 });
        }
        if t.checked_mul(n).is_none_or(|p| p > crate::MAX_QUANTITY) {
            return Err(Error::Overflow("total number of vertices"));
        }
        Ok(BalancedInstance { t, n })
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn to_sizes(&self) -> PartiteSizes {
        PartiteSizes::balanced(self.t as usize, self.n).expect("validated on construction")
    }

    /// The balanced instance with these sizes, if all parts are equal.
    pub fn from_sizes(sizes: &PartiteSizes) -> Option<Self> {
        (sizes.smallest() == sizes.largest()).then(|| BalancedInstance {
            t: sizes.parts() as u64,
            n: sizes.smallest(),
        })
    }
}

/// Equitable k-colorability of `K_{n_1,...,n_t}` (Wu).
pub fn wu_equitable_feasible(sizes: &PartiteSizes, k: u64) -> bool {
    let p = sizes.order();
    if k > p {
        return true;
    }
    let (lo, hi) = (floor_div(p, k), ceil_div(p, k));
    let splittable = sizes.iter().all(|n| n >= ceil_div(n, hi) * lo);
    let most: u64 = sizes.iter().map(|n| floor_div(n, lo)).sum();
    let fewest: u64 = sizes.iter().map(|n| ceil_div(n, hi)).sum();
    splittable && most >= k && k >= fewest
}

/// Equitable chromatic number (Wu): `Σ⌈n_i/h⌉` with
/// `h = max{m : n_i >= ⌈n_i/m⌉(m-1) for all i}`.
pub fn wu_chi(sizes: &PartiteSizes) -> u64 {
    let holds = |m: u64| sizes.iter().all(|n| n >= ceil_div(n, m) * (m - 1));
    let cap = sizes.largest() + 1;
    let h = (1..=cap)
        .rev()
        .find(|&m| holds(m))
        .expect("m = 1 always holds");
    debug_assert!(!holds(cap + 1));
    sizes.iter().map(|n| ceil_div(n, h)).sum()
}

/// Which clause fixed `h` in [`wu_chi_star_detail`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdClause {
    /// Some `n_i < ⌈n_i/(h+1)⌉·h`.
    ShortPart,
    /// Two distinct parts have sizes not divisible by `h`.
    TwoNonDivisible,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WuThreshold {
    pub value: u64,
    pub h: u64,
    pub clause: ThresholdClause,
}

/// Equitable chromatic threshold (Wu), with the `h` used and the clause that
/// fired there.
pub fn wu_chi_star_detail(sizes: &PartiteSizes) -> WuThreshold {
    let cap = sizes.largest() + 1;
    let (h, clause) = (1..=cap)
        .find_map(|m| {
            let short = sizes.iter().any(|n| n < ceil_div(n, m + 1) * m);
            let two = sizes.iter().filter(|n| n % m != 0).nth(1).is_some();
            match (short, two) {
                (true, true) => Some((m, ThresholdClause::Both)),
                (true, false) => Some((m, ThresholdClause::ShortPart)),
                (false, true) => Some((m, ThresholdClause::TwoNonDivisible)),
                (false, false) => None,
            }
        })
        .expect("no part size is divisible by max + 1");
    WuThreshold {
        value: sizes.iter().map(|n| ceil_div(n, h)).sum(),
        h,
        clause,
    }
}

pub fn wu_chi_star(sizes: &PartiteSizes) -> u64 {
    wu_chi_star_detail(sizes).value
}

/// Equitable chromatic number (Lam et al.): `Σ⌈n_i/(h+1)⌉` with
/// `h = max{m : n_i mod m < ⌈n_i/m⌉ for all i}`.
pub fn lam_chi(sizes: &PartiteSizes) -> u64 {
    let holds = |m: u64| sizes.iter().all(|n| n % m < ceil_div(n, m));
    let cap = sizes.largest() + 1;
    let h = (1..=cap)
        .rev()
        .find(|&m| holds(m))
        .expect("m = 1 always holds");
    debug_assert!(!holds(cap + 1));
    sizes.iter().map(|n| ceil_div(n, h + 1)).sum()
}

/// r-equitable k-colorability of `K_{t(n)}`:
/// `⌈n/⌊k/t⌋⌉ - ⌊n/⌈k/t⌉⌋ <= r`. False when `k < t`.
pub fn balanced_feasible(b: BalancedInstance, q: EquityQuery) -> bool {
    let (t, n, k) = (b.t, b.n, q.k());
    if k < t {
        return false;
    }
    let gap = ceil_div(n, floor_div(k, t)) - floor_div(n, ceil_div(k, t));
    gap <= q.r()
}

/// Equitable k-colorability of `K_{t(n)}` (Lin and Chang), for `k >= t`.
pub fn lin_chang_equitable_feasible(b: BalancedInstance, k: u64) -> bool {
    let (t, n) = (b.t, b.n);
    k >= t && ceil_div(n, floor_div(k, t)) - floor_div(n, ceil_div(k, t)) <= 1
}

/// r-equitable chromatic number of `K_{t(n)}`: always `t`.
pub fn balanced_chi(b: BalancedInstance, _r: u64) -> u64 {
    b.t
}

/// r-equitable chromatic threshold of `K_{t(n)}`: `t⌈n/(θ+r)⌉` where `θ` is
/// the least positive integer with `⌊n/(θ+1)⌋ < ⌈n/(θ+r)⌉`.
pub fn balanced_chi_star(b: BalancedInstance, r: u64) -> Result<u64, Error> {
    if r == 0 {
        return Err(Error::ThresholdUndefined);
    }
    let n = b.n;
    let theta = (1..=n)
        .find(|&th| floor_div(n, th + 1) < ceil_div(n, th + r))
        .expect("θ = n always qualifies");
    Ok(b.t * ceil_div(n, theta + r))
}

/// Equitable chromatic threshold of `K_{t(n)}` (Lin and Chang): `t⌈n/h⌉` with
/// `h` the least positive integer not dividing `n`.
pub fn lin_chang_chi_star(b: BalancedInstance) -> u64 {
    let h = (1..)
        .find(|&h| !b.n.is_multiple_of(h))
        .expect("n + 1 never divides n");
    b.t * ceil_div(b.n, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sizes(v: &[u64]) -> PartiteSizes {
        PartiteSizes::new(v.to_vec()).unwrap()
    }

    fn bal(t: u64, n: u64) -> BalancedInstance {
        BalancedInstance::new(t, n).unwrap()
    }

    fn q(r: u64, k: u64) -> EquityQuery {
        EquityQuery::new(r, k).unwrap()
    }

    #[test]
    fn wu_feasible_examples() {
        let s = sizes(&[3, 3]);
        assert!(wu_equitable_feasible(&s, 2));
        assert!(!wu_equitable_feasible(&s, 3));
        assert!(wu_equitable_feasible(&s, 7));
    }

    #[test]
    fn chi_examples() {
        assert_eq!(wu_chi(&sizes(&[3, 3])), 2);
        assert_eq!(wu_chi(&sizes(&[1, 1])), 2);
        // five classes would all have size 3, which the part of size 5 cannot take
        assert_eq!(wu_chi(&sizes(&[3, 5, 7])), 6);
        assert_eq!(lam_chi(&sizes(&[3, 3])), 2);
        assert_eq!(lam_chi(&sizes(&[1, 1])), 2);
        assert_eq!(lam_chi(&sizes(&[3, 5, 7])), 6);
    }

    #[test]
    fn chi_star_examples() {
        assert_eq!(
            wu_chi_star_detail(&sizes(&[3, 3])),
            WuThreshold {
                value: 4,
                h: 2,
                clause: ThresholdClause::TwoNonDivisible
            }
        );
        assert_eq!(wu_chi_star(&sizes(&[1, 1])), 2);
        assert_eq!(wu_chi_star(&sizes(&[4, 4, 4])), 6);
        assert_eq!(lin_chang_chi_star(bal(3, 4)), 6);
    }

    #[test]
    fn balanced_examples() {
        assert!(!balanced_feasible(bal(2, 3), q(1, 3)));
        assert!(balanced_feasible(bal(2, 3), q(2, 3)));
        assert!(balanced_feasible(bal(3, 4), q(1, 6)));
        assert!(!balanced_feasible(bal(3, 4), q(5, 2)));
        assert_eq!(balanced_chi(bal(3, 4), 0), 3);
        assert_eq!(balanced_chi(bal(2, 1), 5), 2);
        assert_eq!(balanced_chi(bal(5, 7), 2), 5);
        assert_eq!(balanced_chi_star(bal(3, 4), 1), Ok(6));
        assert_eq!(balanced_chi_star(bal(2, 1), 1), Ok(2));
        assert_eq!(balanced_chi_star(bal(2, 3), 1), Ok(4));
        assert_eq!(
            balanced_chi_star(bal(2, 3), 0),
            Err(Error::ThresholdUndefined)
        );
    }

    #[test]
    fn balanced_instance_validation() {
        assert!(BalancedInstance::new(1, 3).is_err());
        assert!(BalancedInstance::new(2, 0).is_err());
        assert_eq!(
            BalancedInstance::from_sizes(&sizes(&[4, 4, 4])),
            Some(bal(3, 4))
        );
        assert_eq!(BalancedInstance::from_sizes(&sizes(&[3, 4])), None);
        assert_eq!(bal(3, 4).to_sizes().as_slice(), &vec![4, 4, 4][..]);
    }
}
