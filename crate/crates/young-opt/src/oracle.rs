//! Exhaustive ground truth: enumerate every partition of `n` and minimize
//! the objective by brute force.
//!
//! The enumerator yields partitions in decreasing lexicographic order, from
//! `(n)` down to `(1^n)`. Brute force applies the same tie rule as the
//! solver — smallest value, then smallest type, then lexicographically
//! smallest partition — so witnesses (not just values) can be compared.

use crate::error::{Error, Result};
use crate::functable::{objective, FuncTable};
use crate::partition::Partition;
use crate::solver::{compare_candidates, SolveResult};
use std::cmp::Ordering;

/// Default cap on `n` for exhaustive enumeration. Partition counts grow
/// sub-exponentially but fast; 45 (89,134 partitions) keeps a full
/// objective sweep in the milliseconds.
pub const DEFAULT_ORACLE_LIMIT: u32 = 45;

/// Iterator over all partitions of `n` in decreasing lexicographic order.
#[derive(Debug, Clone)]
pub struct PartitionIter {
    parts: Option<Vec<u32>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.parts.take()?;
        let out = Partition::from_parts_unchecked(parts.clone());
        self.parts = successor(parts);
        Some(out)
    }
}

/// The decreasing-lexicographic successor: shrink the rightmost part that
/// exceeds 1 and repack everything after it greedily with the new value.
fn successor(mut parts: Vec<u32>) -> Option<Vec<u32>> {
    let i = parts.iter().rposition(|&p| p > 1)?;
    let ones = (parts.len() - 1 - i) as u32;
    let v = parts[i] - 1;
    let spread = parts[i] + ones;
    parts.truncate(i);
    for _ in 0..spread / v {
        parts.push(v);
    }
    if !spread.is_multiple_of(v) {
        parts.push(spread % v);
    }
    Some(parts)
}

/// Enumerates all partitions of `n` under the default limit.
pub fn enumerate_partitions(n: u32) -> Result<PartitionIter> {
    enumerate_partitions_with_limit(n, DEFAULT_ORACLE_LIMIT)
}

/// Enumerates all partitions of `n`, refusing `n > limit`.
pub fn enumerate_partitions_with_limit(n: u32, limit: u32) -> Result<PartitionIter> {
    if n < 1 {
        return Err(Error::BadArgument("n must be at least 1".into()));
    }
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    Ok(PartitionIter {
        parts: Some(vec![n]),
    })
}

/// Minimizes the objective over every partition of `n` (restricted to
/// `type_filter` distinct parts when given) by exhaustive evaluation.
/// Returns `None` exactly when the type filter matches no partition.
pub fn brute_force_solve(
    n: u32,
    f: &FuncTable,
    fstar: &FuncTable,
    type_filter: Option<u32>,
) -> Result<Option<SolveResult>> {
    brute_force_solve_with_limit(n, f, fstar, type_filter, DEFAULT_ORACLE_LIMIT)
}

/// [`brute_force_solve`] with an explicit enumeration limit.
pub fn brute_force_solve_with_limit(
    n: u32,
    f: &FuncTable,
    fstar: &FuncTable,
    type_filter: Option<u32>,
    limit: u32,
) -> Result<Option<SolveResult>> {
    if type_filter == Some(0) {
        return Err(Error::BadArgument("type must be at least 1".into()));
    }
    for t in [f, fstar] {
        if t.n() != n {
            return Err(Error::LengthMismatch { len: t.n(), n });
        }
    }
    let mut best: Option<SolveResult> = None;
    for p in enumerate_partitions_with_limit(n, limit)? {
        if let Some(t) = type_filter {
            if p.type_of() != t {
                continue;
            }
        }
        let value = objective(&p, f, fstar)?;
        let improves = match &best {
            None => true,
            Some(b) => {
                compare_candidates(value, &p, b.value, &b.partition) == Ordering::Less
            }
        };
        if improves {
            best = Some(SolveResult {
                conjugate: p.conjugate(),
                k: p.type_of(),
                value,
                partition: p,
            });
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn squares(n: u32) -> FuncTable {
        FuncTable::new((1..=i64::from(n)).map(|k| k * k).collect()).unwrap()
    }

    fn all_of(n: u32) -> Vec<Partition> {
        enumerate_partitions(n).unwrap().collect()
    }

    /// Classical partition-count recurrence over generalized pentagonal
    /// numbers — independent of the enumerator.
    fn partition_count(n: usize) -> u64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut total = 0i64;
            let mut j = 1i64;
            loop {
                let g1 = (j * (3 * j - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if j % 2 == 0 { -1 } else { 1 };
                total += sign * p[m - g1];
                let g2 = (j * (3 * j + 1) / 2) as usize;
                if g2 <= m {
                    total += sign * p[m - g2];
                }
                j += 1;
            }
            p[m] = total;
        }
        p[n] as u64
    }

    #[test]
    fn six_in_decreasing_lex_order() {
        let want: Vec<Vec<u32>> = vec![
            vec![6],
            vec![5, 1],
            vec![4, 2],
            vec![4, 1, 1],
            vec![3, 3],
            vec![3, 2, 1],
            vec![3, 1, 1, 1],
            vec![2, 2, 2],
            vec![2, 2, 1, 1],
            vec![2, 1, 1, 1, 1],
            vec![1, 1, 1, 1, 1, 1],
        ];
        let got: Vec<Vec<u32>> = all_of(6).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn one_partition_of_one() {
        let got = all_of(1);
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].parts(), &[1]);
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        assert_eq!(all_of(10).len(), 42);
        for n in 1..=20u32 {
            assert_eq!(
                all_of(n).len() as u64,
                partition_count(n as usize),
                "count mismatch at n = {}",
                n
            );
        }
    }

    #[test]
    fn no_duplicates_and_all_valid() {
        for n in [7u32, 12, 16] {
            let got = all_of(n);
            let mut seen = HashSet::new();
            for p in &got {
                assert_eq!(p.n(), n);
                // re-validate through the checked constructor
                assert_eq!(&Partition::new(p.parts().to_vec()).unwrap(), p);
                assert!(seen.insert(p.parts().to_vec()), "duplicate {:?}", p.parts());
            }
            assert_eq!(seen.len() as u64, partition_count(n as usize));
        }
    }

    #[test]
    fn conjugation_permutes_the_partitions() {
        for n in [6u32, 9, 13] {
            let all: HashSet<Vec<u32>> =
                all_of(n).iter().map(|p| p.parts().to_vec()).collect();
            let conjugated: HashSet<Vec<u32>> = all_of(n)
                .iter()
                .map(|p| p.conjugate().parts().to_vec())
                .collect();
            assert_eq!(all, conjugated);
        }
    }

    #[test]
    fn refuses_out_of_range_n() {
        assert!(matches!(
            enumerate_partitions(0),
            Err(Error::BadArgument(_))
        ));
        assert!(matches!(
            enumerate_partitions(46),
            Err(Error::OracleLimit { n: 46, limit: 45 })
        ));
        assert!(enumerate_partitions_with_limit(46, 46).is_ok());
    }

    #[test]
    fn brute_force_squares() {
        let f = squares(6);
        let best = brute_force_solve(6, &f, &f, None).unwrap().unwrap();
        assert_eq!(best.partition.parts(), &[3, 2, 1]);
        assert_eq!(best.conjugate.parts(), &[3, 2, 1]);
        assert_eq!(best.k, 3);
        assert_eq!(best.value, 28);
    }

    #[test]
    fn brute_force_with_type_filter() {
        let f = squares(6);
        // type-1 candidates are (6), (3,3), (2,2,2), (1^6); the values are
        // 42, 30, 30, 42, and the lexicographic rule picks (2,2,2)
        let best = brute_force_solve(6, &f, &f, Some(1)).unwrap().unwrap();
        assert_eq!(best.partition.parts(), &[2, 2, 2]);
        assert_eq!(best.value, 30);
        assert_eq!(best.k, 1);

        let f3 = squares(3);
        assert!(brute_force_solve(3, &f3, &f3, Some(3)).unwrap().is_none());
        assert!(matches!(
            brute_force_solve(3, &f3, &f3, Some(0)),
            Err(Error::BadArgument(_))
        ));
    }

    #[test]
    fn brute_force_checks_table_lengths() {
        let f = squares(5);
        assert!(matches!(
            brute_force_solve(6, &f, &f, None),
            Err(Error::LengthMismatch { len: 5, n: 6 })
        ));
    }
}
