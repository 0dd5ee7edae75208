use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// Upper bound on the total order, on `r` and on `k`.
///
/// With every quantity at most 2^62, all sums and ceiling divisions used by the
/// formulas stay inside `u64`.
pub const MAX_QUANTITY: u64 = 1 << 62;

/// Part sizes `n_1 <= n_2 <= ... <= n_t` of a complete multipartite graph,
/// with `t >= 2` and every `n_i >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartiteSizes {
    sizes: Vec<u64>,
    order: u64,
}

impl PartiteSizes {
    /// Validates already sorted sizes.
    pub fn new(sizes: Vec<u64>) -> Result<Self, Error> {
        if sizes.len() < 2 {
            return Err(Error::TooFewParts { count: sizes.len() });
        }
        let mut order: u64 = 0;
        for (index, &n) in sizes.iter().enumerate() {
            if n == 0 {
                return Err(Error::EmptyPart { index });
            }
            if index > 0 && sizes[index - 1] > n {
                return Err(Error::UnsortedSizes { index });
            }
            order = order
                .checked_add(n)
                .filter(|&p| p <= MAX_QUANTITY)
                .ok_or(Error::Overflow("total number of vertices"))?;
        }
        Ok(PartiteSizes { sizes, order })
    }

    /// Sorts the sizes first. The flag is true when the input was out of order.
    pub fn from_unsorted(mut sizes: Vec<u64>) -> Result<(Self, bool), Error> {
        let reordered = sizes.windows(2).any(|w| w[0] > w[1]);
        sizes.sort_unstable();
        Ok((Self::new(sizes)?, reordered))
    }

    /// `K_{t(n)}`: `t` parts of size `n`.
    pub fn balanced(t: usize, n: u64) -> Result<Self, Error> {
        Self::new(alloc::vec![n; t])
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.sizes
    }

    /// Number of parts `t`.
    pub fn parts(&self) -> usize {
        self.sizes.len()
    }

    /// Total number of vertices `p = n_1 + ... + n_t`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Smallest part size `n_1`.
    pub fn smallest(&self) -> u64 {
        self.sizes[0]
    }

    /// Largest part size `n_t`.
    pub fn largest(&self) -> u64 {
        self.sizes[self.sizes.len() - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.sizes.iter().copied()
    }
}

impl fmt::Display for PartiteSizes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("K_{")?;
        for (i, n) in self.sizes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str("}")
    }
}

/// One feasibility question: `k` colors with class sizes spread at most `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EquityQuery {
    r: u64,
    k: u64,
}

impl EquityQuery {
    pub fn new(r: u64, k: u64) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::ZeroCount("number of colors k"));
        }
        if k > MAX_QUANTITY {
            return Err(Error::Overflow("number of colors k"));
        }
        if r > MAX_QUANTITY {
            return Err(Error::Overflow("spread r"));
        }
        Ok(EquityQuery { r, k })
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn k(&self) -> u64 {
        self.k
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rejects_bad_sizes() {
        assert_eq!(
            PartiteSizes::new(vec![3]),
            Err(Error::TooFewParts { count: 1 })
        );
        assert_eq!(
            PartiteSizes::new(vec![0, 3]),
            Err(Error::EmptyPart { index: 0 })
        );
        assert_eq!(
            PartiteSizes::new(vec![5, 3]),
            Err(Error::UnsortedSizes { index: 1 })
        );
        assert_eq!(
            PartiteSizes::new(vec![MAX_QUANTITY, 1]).unwrap_err(),
            Error::UnsortedSizes { index: 1 }
        );
        assert_eq!(
            PartiteSizes::new(vec![1, MAX_QUANTITY]),
            Err(Error::Overflow("total number of vertices"))
        );
        assert_eq!(
            PartiteSizes::new(vec![u64::MAX, u64::MAX]),
            Err(Error::Overflow("total number of vertices"))
        );
    }

    #[test]
    fn sorts_and_reports_reordering() {
        let (s, moved) = PartiteSizes::from_unsorted(vec![7, 3, 5]).unwrap();
        assert!(moved);
        assert_eq!(s.as_slice(), &[3, 5, 7]);
        assert_eq!(s.order(), 15);
        assert_eq!((s.smallest(), s.largest(), s.parts()), (3, 7, 3));
        let (_, moved) = PartiteSizes::from_unsorted(vec![3, 3, 5]).unwrap();
        assert!(!moved);
        assert_eq!(alloc::format!("{s}"), "K_{3,5,7}");
    }

    #[test]
    fn query_bounds() {
        assert!(EquityQuery::new(0, 1).is_ok());
        assert_eq!(
            EquityQuery::new(1, 0),
            Err(Error::ZeroCount("number of colors k"))
        );
        assert!(EquityQuery::new(MAX_QUANTITY + 1, 3).is_err());
        assert!(EquityQuery::new(1, MAX_QUANTITY + 1).is_err());
    }
}
