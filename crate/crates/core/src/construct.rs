//! Explicit colorings: building them from witnesses and checking them against
//! the definition.
//!
//! Vertices are `(part, offset)` pairs with `offset < n_part`. Colors are
//! `1..=k`, handed to parts in ascending order; empty colors come last.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arith::ceil_div;
use crate::{EquityQuery, Error, FeasibilityWitness, PartiteSizes};

/// Splits `n` vertices into `c` classes of sizes `⌈n/c⌉, ⌈(n-1)/c⌉, ...,
/// ⌈(n-c+1)/c⌉`.
///
/// The sizes are nonincreasing, sum to `n`, and differ by at most one. When
/// `c > n` the tail is zeros.
pub fn split_part(n: u64, c: u64) -> Result<Vec<u64>, Error> {
    if n == 0 {
        return Err(Error::ZeroCount("part size n"));
    }
    if c == 0 {
        return Err(Error::ZeroCount("class count c"));
    }
    if n > crate::MAX_QUANTITY || c > crate::MAX_QUANTITY {
        return Err(Error::Overflow("split_part argument"));
    }
    Ok((0..c)
        .map(|j| if j >= n { 0 } else { ceil_div(n - j, c) })
        .collect())
}

/// Class sizes per part, plus the empty colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoringPlan {
    /// `part_classes[i]` lists the sizes of the classes inside part `i`.
    pub part_classes: Vec<Vec<u64>>,
    /// Number of empty color classes.
    pub unused: u64,
    /// Claimed spread bound.
    pub r: u64,
    /// Total colors, `Σ k_i + unused`.
    pub k: u64,
    /// Level `m` for plans built from a full witness.
    pub level: Option<u64>,
}

impl ColoringPlan {
    /// Every class size in color order, empty classes last.
    pub fn class_sizes(&self) -> impl Iterator<Item = u64> + '_ {
        self.part_classes
            .iter()
            .flatten()
            .copied()
            .chain(core::iter::repeat_n(0, self.unused as usize))
    }

    /// `max - min` over all `k` classes, empty ones included.
    pub fn spread(&self) -> u64 {
        let mut sizes = self.part_classes.iter().flatten().copied();
        let Some(first) = sizes.next() else { return 0 };
        let (mut lo, hi) = sizes.fold((first, first), |(lo, hi), s| (lo.min(s), hi.max(s)));
        if self.unused > 0 {
            lo = 0;
        }
        hi - lo
    }

    /// Assigns colors to vertices: part `i` takes the next `k_i` colors and
    /// each class takes consecutive offsets.
    pub fn to_coloring(&self) -> VertexColoring {
        let mut parts = Vec::with_capacity(self.part_classes.len());
        let mut color = 1u64;
        for classes in &self.part_classes {
            let mut assignment = Vec::with_capacity(classes.iter().sum::<u64>() as usize);
            for &size in classes {
                assignment.extend(core::iter::repeat_n(color, size as usize));
                color += 1;
            }
            parts.push(assignment);
        }
        VertexColoring { k: self.k, parts }
    }
}

/// Turns a validated witness into class sizes, without materializing vertices.
pub fn plan_coloring(
    sizes: &PartiteSizes,
    q: EquityQuery,
    w: &FeasibilityWitness,
) -> Result<ColoringPlan, Error> {
    w.validate(sizes, q)?;
    let part_classes = sizes
        .iter()
        .zip(w.counts())
        .map(|(n, &c)| split_part(n, c))
        .collect::<Result<Vec<_>, _>>()?;
    let level = match w {
        FeasibilityWitness::Full { level, .. } => Some(*level),
        FeasibilityWitness::Missing { .. } => None,
    };
    Ok(ColoringPlan {
        part_classes,
        unused: w.unused(),
        r: q.r(),
        k: q.k(),
        level,
    })
}

/// Builds the vertex coloring described by a witness.
pub fn build_coloring(
    sizes: &PartiteSizes,
    q: EquityQuery,
    w: &FeasibilityWitness,
) -> Result<VertexColoring, Error> {
    plan_coloring(sizes, q, w).map(|plan| plan.to_coloring())
}

/// A color in `1..=k` for every vertex `(part, offset)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexColoring {
    k: u64,
    parts: Vec<Vec<u64>>,
}

impl VertexColoring {
    /// `parts[i][j]` is the color of vertex `j` of part `i`. Nothing is
    /// checked here; see [`verify_coloring`].
    pub fn new(k: u64, parts: Vec<Vec<u64>>) -> Self {
        VertexColoring { k, parts }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn parts(&self) -> &[Vec<u64>] {
        &self.parts
    }

    pub fn color_of(&self, part: usize, offset: usize) -> Option<u64> {
        self.parts.get(part)?.get(offset).copied()
    }
}

/// Outcome of [`verify_coloring`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    Rejected(Violation),
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted)
    }
}

/// Which clause of the definition a coloring breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `color` appears in two parts, so two adjacent vertices share it.
    Improper { color: u64, parts: (usize, usize) },
    /// The largest and smallest classes differ by more than `r`. A smallest
    /// class of size 0 is an unused color.
    Spread {
        largest: (u64, u64),
        smallest: (u64, u64),
        spread: u64,
    },
}

/// Checks properness and r-equity of `col` for `K_{sizes}` with `q.k()` colors.
pub fn verify_coloring(
    sizes: &PartiteSizes,
    q: EquityQuery,
    col: &VertexColoring,
) -> Result<Verdict, Error> {
    if col.parts.len() != sizes.parts() {
        return Err(Error::MalformedColoring {
            part: col.parts.len().min(sizes.parts()),
            detail: "number of parts does not match the instance",
        });
    }
    if col.k != q.k() {
        return Err(Error::MalformedColoring {
            part: 0,
            detail: "coloring was built for a different k",
        });
    }
    // color -> (owning part, class size)
    let mut classes: BTreeMap<u64, (usize, u64)> = BTreeMap::new();
    for (part, (n, colors)) in sizes.iter().zip(&col.parts).enumerate() {
        if (colors.len() as u64) < n {
            return Err(Error::MalformedColoring {
                part,
                detail: "a vertex is unassigned",
            });
        }
        if (colors.len() as u64) > n {
            return Err(Error::MalformedColoring {
                part,
                detail: "more colors than vertices",
            });
        }
        for &color in colors {
            if color == 0 || color > q.k() {
                return Err(Error::MalformedColoring {
                    part,
                    detail: "color outside 1..=k",
                });
            }
            let entry = classes.entry(color).or_insert((part, 0));
            if entry.0 != part {
                return Ok(Verdict::Rejected(Violation::Improper {
                    color,
                    parts: (entry.0, part),
                }));
            }
            entry.1 += 1;
        }
    }

    let mut largest = (0, 0);
    let mut smallest = (0, u64::MAX);
    for (&color, &(_, size)) in &classes {
        if size > largest.1 {
            largest = (color, size);
        }
        if size < smallest.1 {
            smallest = (color, size);
        }
    }
    if (classes.len() as u64) < q.k() {
        let empty = (1..=q.k()).find(|c| !classes.contains_key(c)).unwrap_or(0);
        smallest = (empty, 0);
    }
    let spread = largest.1 - smallest.1;
    if spread > q.r() {
        return Ok(Verdict::Rejected(Violation::Spread {
            largest,
            smallest,
            spread,
        }));
    }
    Ok(Verdict::Accepted)
}
