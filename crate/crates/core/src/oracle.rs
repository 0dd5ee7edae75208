//! Exhaustive ground truth for small instances.
//!
//! The search works straight from the definition. Every color class of
//! `K_{n_1,...,n_t}` sits inside a single part, so a k-coloring is a choice of
//! integer partition for each part plus some empty colors. For each window
//! `[lo, lo + r]` the oracle enumerates, per part, every partition of `n_i`
//! into sizes inside the window, then every combination of those partitions
//! whose class counts fit `k`. Empty colors are only allowed when `lo = 0`.
//!
//! Nothing here uses the closed-form results of [`crate::feasibility`] or
//! [`crate::classic`]. The one exception is the scan cap of
//! [`oracle_chromatic_threshold`], flagged in [`ThresholdScan`].

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::{
    chromatic_number, chromatic_threshold, feasible, ColoringPlan, EquityQuery, Error, PartiteSizes,
};

/// Largest total order the oracle accepts.
pub const MAX_ORDER: u64 = 24;
/// Largest caller-supplied `k`.
pub const MAX_COLORS: u64 = 16;
/// Largest `r`.
pub const MAX_SPREAD: u64 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub verdict: bool,
    /// Class sizes of a coloring found by the search, present iff `verdict`.
    pub certificate: Option<ColoringPlan>,
    /// Number of per-part allocations examined.
    pub search_space: u64,
}

fn check_instance(sizes: &PartiteSizes, r: u64) -> Result<(), Error> {
    if sizes.order() > MAX_ORDER {
        return Err(Error::InstanceTooLarge {
            what: "total order",
            value: sizes.order(),
            limit: MAX_ORDER,
        });
    }
    if r > MAX_SPREAD {
        return Err(Error::InstanceTooLarge {
            what: "r",
            value: r,
            limit: MAX_SPREAD,
        });
    }
    Ok(())
}

/// Decides r-equitable k-colorability by enumeration.
pub fn oracle_feasible(sizes: &PartiteSizes, q: EquityQuery) -> Result<OracleReport, Error> {
    check_instance(sizes, q.r())?;
    if q.k() > MAX_COLORS {
        return Err(Error::InstanceTooLarge {
            what: "k",
            value: q.k(),
            limit: MAX_COLORS,
        });
    }
    Ok(search(sizes, q.r(), q.k()))
}

/// All partitions of `n` into nonincreasing parts within `[lo, hi]`, `lo >= 1`.
fn window_partitions(n: u64, lo: u64, hi: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, lo: u64, cap: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut size = cap.min(rest);
        while size >= lo {
            prefix.push(size);
            go(rest - size, lo, size, prefix, out);
            prefix.pop();
            size -= 1;
        }
    }
    let mut out = Vec::new();
    go(n, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Search without the caller-facing `k` bound; `k` stays below `MAX_ORDER + 2`
/// in every internal scan.
fn search(sizes: &PartiteSizes, r: u64, k: u64) -> OracleReport {
    let mut examined = 0u64;
    for lo in 0..=sizes.largest() {
        let hi = lo + r;
        let smallest_class = lo.max(1);
        if smallest_class > hi {
            continue;
        }
        // one representative partition per class count; colors are interchangeable
        let options: Vec<Vec<(u64, Vec<u64>)>> = sizes
            .iter()
            .map(|n| {
                let mut by_count: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
                for p in window_partitions(n, smallest_class, hi) {
                    by_count.entry(p.len() as u64).or_insert(p);
                }
                by_count.into_iter().collect()
            })
            .collect();
        if options.iter().any(Vec::is_empty) {
            continue;
        }
        let mut choice = vec![0usize; options.len()];
        if let Some(plan) = combine(&options, 0, 0, k, lo == 0, r, &mut choice, &mut examined) {
            return OracleReport {
                verdict: true,
                certificate: Some(plan),
                search_space: examined,
            };
        }
    }
    OracleReport {
        verdict: false,
        certificate: None,
        search_space: examined,
    }
}

#[allow(clippy::too_many_arguments)]
fn combine(
    options: &[Vec<(u64, Vec<u64>)>],
    part: usize,
    used: u64,
    k: u64,
    empties_allowed: bool,
    r: u64,
    choice: &mut Vec<usize>,
    examined: &mut u64,
) -> Option<ColoringPlan> {
    if part == options.len() {
        *examined += 1;
        if used == k || (empties_allowed && used < k) {
            let part_classes = options
                .iter()
                .zip(choice.iter())
                .map(|(o, &i)| o[i].1.clone())
                .collect();
            return Some(ColoringPlan {
                part_classes,
                unused: k - used,
                r,
                k,
                level: None,
            });
        }
        return None;
    }
    for (i, (count, _)) in options[part].iter().enumerate() {
        if used + count > k {
            // counts ascend, later options only get bigger
            *examined += 1;
            break;
        }
        choice[part] = i;
        if let Some(plan) = combine(
            options,
            part + 1,
            used + count,
            k,
            empties_allowed,
            r,
            choice,
            examined,
        ) {
            return Some(plan);
        }
    }
    None
}

/// Least k with an r-equitable k-coloring, by scanning k upward. One vertex per
/// class (k = total order) always works, so the scan ends there at the latest.
pub fn oracle_chromatic_number(sizes: &PartiteSizes, r: u64) -> Result<u64, Error> {
    check_instance(sizes, r)?;
    Ok((1..=sizes.order())
        .find(|&k| search(sizes, r, k).verdict)
        .expect("singleton classes color any instance"))
}

/// Result of the threshold scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThresholdScan {
    pub threshold: u64,
    /// Largest k that was searched: `Σ⌈n_i/r⌉ + 1`.
    pub scan_cap: u64,
    /// Always true: every k above `scan_cap` is taken as feasible on the
    /// strength of the missing-color bound (empty classes plus classes of size
    /// at most r), not searched.
    pub relies_on_missing_color_bound: bool,
}

/// Least n such that every k in `[n, Σ⌈n_i/r⌉ + 1]` is feasible by search.
pub fn oracle_chromatic_threshold_scan(
    sizes: &PartiteSizes,
    r: u64,
) -> Result<ThresholdScan, Error> {
    if r == 0 {
        return Err(Error::ThresholdUndefined);
    }
    check_instance(sizes, r)?;
    let scan_cap = sizes.iter().map(|n| n.div_ceil(r)).sum::<u64>() + 1;
    let mut threshold = scan_cap;
    while threshold > 1 && search(sizes, r, threshold - 1).verdict {
        threshold -= 1;
    }
    Ok(ThresholdScan {
        threshold,
        scan_cap,
        relies_on_missing_color_bound: true,
    })
}

pub fn oracle_chromatic_threshold(sizes: &PartiteSizes, r: u64) -> Result<u64, Error> {
    oracle_chromatic_threshold_scan(sizes, r).map(|s| s.threshold)
}

/// Every nondecreasing tuple of `t` sizes in `1..=max`.
pub fn nondecreasing_tuples(t: usize, max: u64) -> Vec<Vec<u64>> {
    fn go(t: usize, from: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == t {
            out.push(prefix.clone());
            return;
        }
        for n in from..=max {
            prefix.push(n);
            go(t, n, max, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(t, 1, max, &mut Vec::new(), &mut out);
    out
}

/// Grid for [`agreement_sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepGrid {
    pub min_parts: usize,
    pub max_parts: usize,
    pub max_part: u64,
    pub max_r: u64,
    pub max_k: u64,
}

impl Default for SweepGrid {
    fn default() -> Self {
        SweepGrid {
            min_parts: 2,
            max_parts: 3,
            max_part: 6,
            max_r: 3,
            max_k: 14,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Feasible { k: u64 },
    ChromaticNumber,
    ChromaticThreshold,
}

/// One disagreement between a closed form and the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub sizes: Vec<u64>,
    pub r: u64,
    pub check: CheckKind,
    /// Formula result; booleans are encoded as 0/1.
    pub formula: u64,
    pub oracle: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub instances: u64,
    pub checks: u64,
    pub mismatches: Vec<Mismatch>,
}

impl SweepReport {
    pub fn all_pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares feasibility, chromatic number and threshold against the oracle on
/// every instance of the grid.
pub fn agreement_sweep(grid: SweepGrid) -> Result<SweepReport, Error> {
    if grid.min_parts < 2 || grid.max_parts < grid.min_parts {
        return Err(Error::TooFewParts {
            count: grid.min_parts,
        });
    }
    if grid.max_part == 0 {
        return Err(Error::ZeroCount("max part size"));
    }
    let largest_order = grid.max_parts as u64 * grid.max_part;
    if largest_order > MAX_ORDER {
        return Err(Error::InstanceTooLarge {
            what: "total order",
            value: largest_order,
            limit: MAX_ORDER,
        });
    }
    if grid.max_r > MAX_SPREAD {
        return Err(Error::InstanceTooLarge {
            what: "r",
            value: grid.max_r,
            limit: MAX_SPREAD,
        });
    }
    if grid.max_k > MAX_ORDER + 1 {
        return Err(Error::InstanceTooLarge {
            what: "k",
            value: grid.max_k,
            limit: MAX_ORDER + 1,
        });
    }

    let mut report = SweepReport::default();
    for t in grid.min_parts..=grid.max_parts {
        for tuple in nondecreasing_tuples(t, grid.max_part) {
            let sizes = PartiteSizes::new(tuple.clone())?;
            report.instances += 1;
            for r in 0..=grid.max_r {
                let mut record = |check, formula: u64, oracle: u64| {
                    report.checks += 1;
                    if formula != oracle {
                        report.mismatches.push(Mismatch {
                            sizes: tuple.clone(),
                            r,
                            check,
                            formula,
                            oracle,
                        });
                    }
                };
                for k in 1..=grid.max_k {
                    let q = EquityQuery::new(r, k)?;
                    let by_formula = feasible(&sizes, q).is_some();
                    let by_search = search(&sizes, r, k).verdict;
                    record(
                        CheckKind::Feasible { k },
                        by_formula as u64,
                        by_search as u64,
                    );
                }
                record(
                    CheckKind::ChromaticNumber,
                    chromatic_number(&sizes, r),
                    oracle_chromatic_number(&sizes, r)?,
                );
                if r >= 1 {
                    record(
                        CheckKind::ChromaticThreshold,
                        chromatic_threshold(&sizes, r)?,
                        oracle_chromatic_threshold(&sizes, r)?,
                    );
                }
            }
        }
    }
    Ok(report)
}
