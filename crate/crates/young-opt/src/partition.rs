//! Partitions of a positive integer and their Young diagrams.
//!
//! A partition of `n` is a non-increasing sequence of positive parts summing
//! to `n`; its Young diagram is the left-justified cell array whose row `i`
//! has `parts[i]` cells. The conjugate partition reads the same diagram by
//! columns.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of a positive integer, stored fully expanded (one entry per
/// part) with the sum cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

impl Partition {
    /// Validates and builds a partition. Parts must be positive,
    /// non-increasing, and non-empty; the empty partition (n = 0) is
    /// rejected.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts; n must be >= 1".into()));
        }
        let mut sum: u64 = 0;
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::InvalidPartition(format!("part {} is zero", i + 1)));
            }
            if i > 0 && parts[i - 1] < p {
                return Err(Error::InvalidPartition(format!(
                    "parts must be non-increasing, but part {} = {} < part {} = {}",
                    i, parts[i - 1], i + 1, p
                )));
            }
            sum += u64::from(p);
        }
        let n = u32::try_from(sum)
            .map_err(|_| Error::InvalidPartition("parts sum exceeds u32 range".into()))?;
        Ok(Partition { parts, n })
    }

    /// Builds from parts already known to be valid (positive, non-increasing,
    /// summing to a u32).
    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.is_empty());
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let n = parts.iter().map(|&p| u64::from(p)).sum::<u64>();
        Partition {
            parts,
            n: n as u32,
        }
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The partitioned integer (sum of parts, number of diagram cells).
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of parts (rows of the diagram).
    pub fn num_parts(&self) -> u32 {
        self.parts.len() as u32
    }

    /// The conjugate partition: part `j` counts the parts of `self` that are
    /// `>= j`, i.e. the height of column `j` of the diagram.
    pub fn conjugate(&self) -> Partition {
        let widest = self.parts[0] as usize;
        // bucket part values, then suffix-sum to get "count of parts >= j"
        let mut count = vec![0u32; widest + 1];
        for &p in &self.parts {
            count[p as usize] += 1;
        }
        let mut conj = vec![0u32; widest];
        let mut at_least = 0u32;
        for j in (1..=widest).rev() {
            at_least += count[j];
            conj[j - 1] = at_least;
        }
        Partition::from_parts_unchecked(conj)
    }

    /// The type: number of distinct part values, which equals the number of
    /// southeast corners of the diagram.
    pub fn type_of(&self) -> u32 {
        1 + self.parts.windows(2).filter(|w| w[0] != w[1]).count() as u32
    }

    /// ASCII rendering of the Young diagram, one row of `#` cells per part.
    pub fn render(&self) -> String {
        let rows: Vec<String> = self
            .parts
            .iter()
            .map(|&p| "#".repeat(p as usize))
            .collect();
        rows.join("\n")
    }
}

/// Largest possible type of any partition of `n`: the greatest `k` with
/// `k(k+1)/2 <= n`. Always strictly below `sqrt(2n)`.
pub fn max_type(n: u32) -> u32 {
    assert!(n >= 1, "max_type requires n >= 1");
    let n = u64::from(n);
    let mut k = (2.0 * n as f64).sqrt() as u64;
    while k * (k + 1) / 2 > n {
        k -= 1;
    }
    while (k + 1) * (k + 2) / 2 <= n {
        k += 1;
    }
    k as u32
}

impl fmt::Display for Partition {
    /// Comma-separated parts, e.g. `3,2,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let p: u32 = token.parse().map_err(|_| {
                Error::InvalidPartition(format!("part {:?} is not a positive integer", token))
            })?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_known_pairs() {
        assert_eq!(p(&[4, 2]).conjugate(), p(&[2, 2, 1, 1]));
        assert_eq!(p(&[3, 2, 1]).conjugate(), p(&[3, 2, 1]));
        assert_eq!(p(&[1, 1, 1, 1, 1, 1]).conjugate(), p(&[6]));
        assert_eq!(p(&[6]).conjugate(), p(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn conjugate_of_single_row_is_all_ones() {
        // (n) -> (1^n) falls out of the column-count formula, no special case
        let q = p(&[5]).conjugate();
        assert_eq!(q.parts(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn type_counts_distinct_values() {
        assert_eq!(p(&[3, 2, 1]).type_of(), 3);
        assert_eq!(p(&[2, 2, 2]).type_of(), 1);
        assert_eq!(p(&[5, 1]).type_of(), 2);
        assert_eq!(p(&[4, 2, 2, 1]).type_of(), 3);
    }

    #[test]
    fn max_type_values() {
        assert_eq!(max_type(200), 19);
        assert_eq!(max_type(1), 1);
        assert_eq!(max_type(6), 3);
        assert_eq!(max_type(2), 1);
        assert_eq!(max_type(3), 2);
    }

    #[test]
    fn max_type_below_sqrt_2n() {
        for n in 1..=500u32 {
            let k = u64::from(max_type(n));
            // k < sqrt(2n) as integers: k^2 < 2n
            assert!(k * k < 2 * u64::from(n), "n = {}", n);
            // and k+1 is not attainable
            assert!((k + 1) * (k + 2) / 2 > u64::from(n));
        }
    }

    #[test]
    fn render_rows() {
        assert_eq!(p(&[3, 1]).render(), "###\n#");
        assert_eq!(p(&[1]).render(), "#");
        assert_eq!(p(&[2, 2]).render(), "##\n##");
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![3, 2, 3]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let q: Partition = "3,2,1".parse().unwrap();
        assert_eq!(q, p(&[3, 2, 1]));
        assert_eq!(q.to_string(), "3,2,1");
        assert!(" 4 , 2 ".parse::<Partition>().is_ok());
        assert!("3,,1".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("2,3".parse::<Partition>().is_err());
        assert!("-1".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugate_is_involution_small() {
        for parts in [
            vec![1],
            vec![7],
            vec![4, 4, 2, 1, 1],
            vec![10, 3, 3, 2, 2, 2, 1],
        ] {
            let q = Partition::new(parts).unwrap();
            assert_eq!(q.conjugate().conjugate(), q);
            assert_eq!(q.conjugate().n(), q.n());
            assert_eq!(q.conjugate().type_of(), q.type_of());
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        pub(crate) fn arb_partition() -> impl Strategy<Value = Partition> {
            proptest::collection::vec(1u32..=20, 1..=15).prop_map(|mut parts| {
                parts.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(parts).unwrap()
            })
        }

        proptest! {
            #[test]
            fn conjugate_is_involution(p in arb_partition()) {
                prop_assert_eq!(p.conjugate().conjugate(), p);
            }

            #[test]
            fn conjugate_preserves_size(p in arb_partition()) {
                prop_assert_eq!(p.conjugate().n(), p.n());
            }

            #[test]
            fn conjugate_preserves_type(p in arb_partition()) {
                prop_assert_eq!(p.conjugate().type_of(), p.type_of());
            }
        }
    }
}
