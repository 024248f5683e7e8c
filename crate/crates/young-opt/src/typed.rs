//! Ragged-staircase form of a partition: run-length encoding by distinct
//! part values.
//!
//! A partition of type `k` is determined by its distinct part values
//! `r_1 > ... > r_k` and the column indices `c_1 < ... < c_k` at which the
//! runs end: rows `c_{i-1}+1 ..= c_i` all have `r_i` cells (with `c_0 = 0`).
//! The conjugate falls out of the same data read backwards: its distinct
//! values are `c_k > ... > c_1` and value `c_i` occupies `r_i - r_{i+1}`
//! rows (with `r_{k+1} = 0`).

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A partition in ragged-staircase form: distinct row values `r` (strictly
/// decreasing) and run-end indices `c` (strictly increasing), both of length
/// equal to the type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedDiagram {
    r: Vec<u32>,
    c: Vec<u32>,
}

impl TypedDiagram {
    /// Validates and builds. Requires equal nonzero lengths, `r` strictly
    /// decreasing and positive, `c` strictly increasing and positive, and a
    /// total cell count within u32 range.
    pub fn new(r: Vec<u32>, c: Vec<u32>) -> Result<Self> {
        if r.is_empty() || r.len() != c.len() {
            return Err(Error::InvalidPartition(format!(
                "run values and run ends must have equal nonzero length, got {} and {}",
                r.len(),
                c.len()
            )));
        }
        if r.contains(&0) || c.contains(&0) {
            return Err(Error::InvalidPartition(
                "run values and run ends must be positive".into(),
            ));
        }
        if r.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition(
                "run values must be strictly decreasing".into(),
            ));
        }
        if c.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(
                "run ends must be strictly increasing".into(),
            ));
        }
        let mut cells: u64 = 0;
        let mut c_prev = 0u64;
        for (&ri, &ci) in r.iter().zip(&c) {
            cells += (u64::from(ci) - c_prev) * u64::from(ri);
            c_prev = u64::from(ci);
        }
        if u32::try_from(cells).is_err() {
            return Err(Error::InvalidPartition(
                "cell count exceeds u32 range".into(),
            ));
        }
        Ok(TypedDiagram { r, c })
    }

    /// The distinct part values, largest first.
    pub fn r(&self) -> &[u32] {
        &self.r
    }

    /// The cumulative run ends: `c[i]` rows carry a value `>= r[i]`.
    pub fn c(&self) -> &[u32] {
        &self.c
    }

    /// The type (number of runs).
    pub fn k(&self) -> u32 {
        self.r.len() as u32
    }

    /// Total number of cells.
    pub fn cell_count(&self) -> u32 {
        let mut cells = 0u32;
        let mut c_prev = 0u32;
        for (&ri, &ci) in self.r.iter().zip(&self.c) {
            cells += (ci - c_prev) * ri;
            c_prev = ci;
        }
        cells
    }

    /// Expands back to the partition and its conjugate in one pass. The
    /// conjugate needs no extra work: value `c[i]` repeats `r[i] - r[i+1]`
    /// times, read from the last run backwards.
    pub fn expand(&self) -> (Partition, Partition) {
        let k = self.r.len();
        let mut parts = Vec::with_capacity(self.c[k - 1] as usize);
        let mut c_prev = 0u32;
        for (&ri, &ci) in self.r.iter().zip(&self.c) {
            for _ in c_prev..ci {
                parts.push(ri);
            }
            c_prev = ci;
        }
        let mut conj = Vec::with_capacity(self.r[0] as usize);
        let mut r_next = 0u32;
        for i in (0..k).rev() {
            for _ in r_next..self.r[i] {
                conj.push(self.c[i]);
            }
            r_next = self.r[i];
        }
        (
            Partition::from_parts_unchecked(parts),
            Partition::from_parts_unchecked(conj),
        )
    }
}

impl Partition {
    /// Run-length encodes into ragged-staircase form.
    pub fn to_typed(&self) -> TypedDiagram {
        let mut r = Vec::new();
        let mut c = Vec::new();
        for (i, &p) in self.parts().iter().enumerate() {
            if r.last() == Some(&p) {
                *c.last_mut().unwrap() = (i + 1) as u32;
            } else {
                r.push(p);
                c.push((i + 1) as u32);
            }
        }
        TypedDiagram { r, c }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn encodes_runs() {
        let t = p(&[4, 2, 2, 1]).to_typed();
        assert_eq!(t.r(), &[4, 2, 1]);
        assert_eq!(t.c(), &[1, 3, 4]);
        assert_eq!(t.k(), 3);
        assert_eq!(t.cell_count(), 9);

        let t = p(&[3, 3]).to_typed();
        assert_eq!(t.r(), &[3]);
        assert_eq!(t.c(), &[2]);

        let t = p(&[5, 3, 1]).to_typed();
        assert_eq!(t.r(), &[5, 3, 1]);
        assert_eq!(t.c(), &[1, 2, 3]);
    }

    #[test]
    fn expands_with_conjugate() {
        let t = TypedDiagram::new(vec![2], vec![1]).unwrap();
        let (q, qc) = t.expand();
        assert_eq!(q, p(&[2]));
        assert_eq!(qc, p(&[1, 1]));

        let t = TypedDiagram::new(vec![4, 2], vec![1, 2]).unwrap();
        let (q, qc) = t.expand();
        assert_eq!(q, p(&[4, 2]));
        assert_eq!(qc, p(&[2, 2, 1, 1]));

        let t = TypedDiagram::new(vec![3, 2, 1], vec![1, 2, 3]).unwrap();
        let (q, qc) = t.expand();
        assert_eq!(q, p(&[3, 2, 1]));
        assert_eq!(qc, q);
    }

    #[test]
    fn validation_rejects_bad_runs() {
        assert!(TypedDiagram::new(vec![], vec![]).is_err());
        assert!(TypedDiagram::new(vec![3, 1], vec![2]).is_err());
        assert!(TypedDiagram::new(vec![2, 2], vec![1, 3]).is_err());
        assert!(TypedDiagram::new(vec![1, 2], vec![1, 3]).is_err());
        assert!(TypedDiagram::new(vec![3, 1], vec![2, 2]).is_err());
        assert!(TypedDiagram::new(vec![3, 1], vec![4, 2]).is_err());
        assert!(TypedDiagram::new(vec![0], vec![1]).is_err());
        assert!(TypedDiagram::new(vec![1], vec![0]).is_err());
    }

    #[test]
    fn round_trips() {
        for parts in [
            vec![1],
            vec![6],
            vec![3, 3, 3],
            vec![4, 2, 2, 1],
            vec![10, 7, 7, 7, 2, 1, 1],
        ] {
            let q = Partition::new(parts).unwrap();
            let t = q.to_typed();
            let (back, conj) = t.expand();
            assert_eq!(back, q);
            assert_eq!(conj, q.conjugate());
            assert_eq!(t.cell_count(), q.n());
            assert_eq!(t.k(), q.type_of());
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_partition() -> impl Strategy<Value = Partition> {
            proptest::collection::vec(1u32..=20, 1..=15).prop_map(|mut parts| {
                parts.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(parts).unwrap()
            })
        }

        proptest! {
            #[test]
            fn typed_form_round_trips(p in arb_partition()) {
                let (back, _) = p.to_typed().expand();
                prop_assert_eq!(back, p);
            }

            #[test]
            fn typed_form_yields_the_conjugate(p in arb_partition()) {
                let (_, conj) = p.to_typed().expand();
                prop_assert_eq!(conj, p.conjugate());
            }

            // both readings of the staircase cover the same cells:
            // sum of (c_i - c_{i-1}) r_i = sum of (r_i - r_{i+1}) c_i = n
            #[test]
            fn cell_count_identity(p in arb_partition()) {
                let t = p.to_typed();
                let (k, r, c) = (t.k() as usize, t.r(), t.c());
                let mut by_rows = 0u64;
                let mut by_cols = 0u64;
                for i in 0..k {
                    let c_prev = if i == 0 { 0 } else { c[i - 1] };
                    let r_next = if i + 1 == k { 0 } else { r[i + 1] };
                    by_rows += u64::from(c[i] - c_prev) * u64::from(r[i]);
                    by_cols += u64::from(r[i] - r_next) * u64::from(c[i]);
                }
                prop_assert_eq!(by_rows, u64::from(p.n()));
                prop_assert_eq!(by_cols, u64::from(p.n()));
            }
        }
    }
}
