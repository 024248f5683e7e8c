//! Exact minimization of `f(λ) + f*(λ*)` in polynomial time.
//!
//! For each feasible type `k` the minimum is a shortest path in a layered
//! DAG: layer `i` fixes the first `i` blocks of the ragged staircase (rows
//! `1..=c_i`, distinct values `r_1 > … > r_i`) together with the value
//! `r_{i+1}` promised for the next block. The path length telescopes to the
//! objective because block `i` contributes `c_i − c_{i−1}` rows of value
//! `r_i` to `λ` and `r_i − r_{i+1}` columns of height `c_i` to `λ*`. The
//! graph is never materialized; a forward sweep relaxes each layer from the
//! previous one. The outer loop takes the best answer over
//! `k = 1..=max_type(n)`.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hasher};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::functable::{objective, FuncTable};
use crate::partition::{max_type, Partition};
use crate::typed::TypedDiagram;

/// Largest `n` accepted by [`solve`] and [`solve_for_type`]; the `_bounded`
/// variants take an explicit cap instead. Together with the `2^31` table
/// value bound this keeps every path cost below `2^43`, far from i64
/// overflow.
pub const DEFAULT_MAX_N: u32 = 2000;

/// One vertex of the layered shortest-path sweep: the first `layer` blocks
/// are fixed, occupying rows `1..=c` and `used` cells, and the next block
/// has been promised the value `r_next` (`r_next = 0` only on the final
/// layer, `c = used = 0` only on layer 0). `cost` is the accumulated length
/// of the best path here and `pred` its predecessor, absent at layer 0.
#[derive(Debug, Clone)]
pub struct DpState {
    pub layer: u32,
    pub c: u32,
    pub r_next: u32,
    pub used: u32,
    pub cost: i64,
    pub pred: Option<Rc<DpState>>,
}

/// An optimal diagram for one solve call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub partition: Partition,
    pub conjugate: Partition,
    /// Type of `partition` (number of distinct parts).
    pub k: u32,
    /// The minimal objective `f(partition) + fstar(conjugate)`.
    pub value: i64,
}

/// Length of the edge that appends one block: `c_i − c_prev` rows of value
/// `r_i`, closing `r_i − r_next` columns at height `c_i`.
///
/// Requires `c_i > c_prev`, `r_i > r_next`, and both `c_i` and `r_i` within
/// the tables' domain. The result cannot overflow under the table magnitude
/// bound; arithmetic is checked anyway.
pub fn transition_cost(
    c_prev: u32,
    c_i: u32,
    r_i: u32,
    r_next: u32,
    f: &FuncTable,
    fstar: &FuncTable,
) -> i64 {
    assert!(c_i > c_prev, "rows must advance: c_i = {}, c_prev = {}", c_i, c_prev);
    assert!(r_i > r_next, "values must drop: r_i = {}, r_next = {}", r_i, r_next);
    let rows = i64::from(c_i - c_prev).checked_mul(f.get(r_i));
    let cols = i64::from(r_i - r_next).checked_mul(fstar.get(c_i));
    rows.zip(cols)
        .and_then(|(a, b)| a.checked_add(b))
        .expect("transition cost within i64 under the table magnitude bound")
}

/// Recovers the staircase encoded by a final state's predecessor chain.
///
/// `final_state` must be a reached last-layer state (`r_next = 0`).
pub fn reconstruct(final_state: &DpState) -> TypedDiagram {
    assert_eq!(
        final_state.r_next, 0,
        "reconstruct requires a final-layer state"
    );
    assert!(final_state.layer >= 1, "layer 0 encodes no blocks");
    let blocks = chain_blocks(final_state);
    let mut r = Vec::with_capacity(blocks.len());
    let mut c = Vec::with_capacity(blocks.len());
    let mut rows = 0;
    for (value, mult) in blocks {
        rows += mult;
        r.push(value);
        c.push(rows);
    }
    TypedDiagram::new(r, c).expect("predecessor chain encodes a valid staircase")
}

/// Total order used to pick one optimum: value, then type, then
/// lexicographically smallest part sequence.
pub(crate) fn compare_candidates(
    a_value: i64,
    a: &Partition,
    b_value: i64,
    b: &Partition,
) -> Ordering {
    a_value
        .cmp(&b_value)
        .then_with(|| a.type_of().cmp(&b.type_of()))
        .then_with(|| a.parts().cmp(b.parts()))
}

/// Minimizes over all partitions of `n`, with `n` capped at
/// [`DEFAULT_MAX_N`].
pub fn solve(n: u32, f: &FuncTable, fstar: &FuncTable) -> Result<SolveResult> {
    solve_bounded(n, f, fstar, DEFAULT_MAX_N)
}

/// [`solve`] with an explicit cap on `n`.
pub fn solve_bounded(n: u32, f: &FuncTable, fstar: &FuncTable, max_n: u32) -> Result<SolveResult> {
    validate_instance(n, f, fstar, max_n)?;
    let mut best: Option<SolveResult> = None;
    for k in 1..=max_type(n) {
        let cand = solve_type_feasible(n, k, f, fstar)?;
        let improves = match &best {
            None => true,
            Some(b) => {
                compare_candidates(cand.value, &cand.partition, b.value, &b.partition)
                    == Ordering::Less
            }
        };
        if improves {
            best = Some(cand);
        }
    }
    best.ok_or_else(|| Error::Internal(format!("no diagram found for n = {}", n)))
}

/// Minimizes over partitions of `n` with exactly `k` distinct parts.
/// Returns `None` when no such partition exists, i.e. `k(k+1)/2 > n`.
pub fn solve_for_type(n: u32, k: u32, f: &FuncTable, fstar: &FuncTable) -> Result<Option<SolveResult>> {
    solve_for_type_bounded(n, k, f, fstar, DEFAULT_MAX_N)
}

/// [`solve_for_type`] with an explicit cap on `n`.
pub fn solve_for_type_bounded(
    n: u32,
    k: u32,
    f: &FuncTable,
    fstar: &FuncTable,
    max_n: u32,
) -> Result<Option<SolveResult>> {
    validate_instance(n, f, fstar, max_n)?;
    if k < 1 {
        return Err(Error::BadArgument("type must be at least 1".into()));
    }
    if u64::from(k) * u64::from(k + 1) / 2 > u64::from(n) {
        return Ok(None);
    }
    solve_type_feasible(n, k, f, fstar).map(Some)
}

fn validate_instance(n: u32, f: &FuncTable, fstar: &FuncTable, max_n: u32) -> Result<()> {
    if n < 1 {
        return Err(Error::BadArgument("n must be at least 1".into()));
    }
    if n > max_n {
        return Err(Error::BadArgument(format!(
            "n = {} exceeds the configured maximum {}",
            n, max_n
        )));
    }
    for t in [f, fstar] {
        if t.n() != n {
            return Err(Error::LengthMismatch { len: t.n(), n });
        }
    }
    Ok(())
}

/// `n`, `k`, and the tables are already validated and `k` is feasible.
fn solve_type_feasible(n: u32, k: u32, f: &FuncTable, fstar: &FuncTable) -> Result<SolveResult> {
    let finals = run_dp(n, k, f, fstar);
    let Some(state) = pick_best(&finals) else {
        return Err(Error::Internal(format!(
            "no final state for feasible n = {}, k = {}",
            n, k
        )));
    };
    let typed = reconstruct(state);
    let (partition, conjugate) = typed.expand();
    debug_assert_eq!(partition.type_of(), k);
    debug_assert_eq!(partition.n(), n);
    debug_assert_eq!(objective(&partition, f, fstar)?, state.cost);
    Ok(SolveResult {
        partition,
        conjugate,
        k,
        value: state.cost,
    })
}

/// The blocks fixed by a state's predecessor chain, first block first, as
/// `(value, rows)` pairs.
fn chain_blocks(state: &DpState) -> Vec<(u32, u32)> {
    let mut blocks = Vec::with_capacity(state.layer as usize);
    let mut cur = state;
    while let Some(prev) = cur.pred.as_deref() {
        blocks.push((prev.r_next, cur.c - prev.c));
        cur = prev;
    }
    blocks.reverse();
    blocks
}

/// Lexicographic comparison of the partitions two block lists expand to,
/// without expanding them.
fn cmp_blocks(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    let (mut done_a, mut done_b) = (0u32, 0u32);
    loop {
        match (i < a.len(), j < b.len()) {
            (false, false) => return Ordering::Equal,
            (false, true) => return Ordering::Less,
            (true, false) => return Ordering::Greater,
            (true, true) => {}
        }
        let (va, ma) = a[i];
        let (vb, mb) = b[j];
        if va != vb {
            return va.cmp(&vb);
        }
        let step = (ma - done_a).min(mb - done_b);
        done_a += step;
        done_b += step;
        if done_a == ma {
            i += 1;
            done_a = 0;
        }
        if done_b == mb {
            j += 1;
            done_b = 0;
        }
    }
}

/// A block just placed but with its follow-up value not yet chosen: rows
/// `1..=c` are fixed, the current block carries value `r_cur`, and `pred`
/// is the state that opened it.
struct Mid {
    c: u32,
    r_cur: u32,
    used: u32,
    cost: i64,
    pred: Rc<DpState>,
}

fn mid_blocks(mid: &Mid) -> Vec<(u32, u32)> {
    let mut blocks = chain_blocks(&mid.pred);
    blocks.push((mid.r_cur, mid.c - mid.pred.c));
    blocks
}

/// Multiply-mix hasher for the packed `(c, value, used)` keys; the default
/// hasher dominates the sweep's profile on keys this cheap.
#[derive(Default)]
struct PackedHasher(u64);

impl Hasher for PackedHasher {
    fn write(&mut self, _bytes: &[u8]) {
        unreachable!("only u64 keys are hashed");
    }

    fn write_u64(&mut self, key: u64) {
        let mut h = key.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        h ^= h >> 29;
        self.0 = h.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    }

    fn finish(&self) -> u64 {
        self.0
    }
}

type PackedMap<V> = HashMap<u64, V, BuildHasherDefault<PackedHasher>>;

fn pack(c: u32, value: u32, used: u32) -> u64 {
    debug_assert!(c < (1 << 21) && value < (1 << 21) && used < (1 << 21));
    (u64::from(c) << 42) | (u64::from(value) << 21) | u64::from(used)
}

fn checked_acc(cost: i64, add: i64) -> i64 {
    cost.checked_add(add)
        .expect("path cost within i64 under the table magnitude bound")
}

/// Runs the layered sweep for one type and returns every reached final
/// state (`used = n`, `r_next = 0`), each holding the cheapest — and on
/// cost ties, lexicographically smallest — chain that reaches it.
fn run_dp(n: u32, k: u32, f: &FuncTable, fstar: &FuncTable) -> Vec<Rc<DpState>> {
    // layer 0: promise r_1; the remaining k-1 blocks need a strictly
    // smaller staircase, so r_1 ranges over k ..= n - k(k-1)/2
    let r1_max = n - k * (k - 1) / 2;
    let mut layer: Vec<Rc<DpState>> = (k..=r1_max)
        .map(|r1| {
            Rc::new(DpState {
                layer: 0,
                c: 0,
                r_next: r1,
                used: 0,
                cost: 0,
                pred: None,
            })
        })
        .collect();

    for i in 1..=k {
        let tail = k - i; // blocks still owed after this one
        let tail_min_cells = tail * (tail + 1) / 2;

        // place the block: choose its row count
        let mut mids: PackedMap<Mid> = PackedMap::default();
        for s in &layer {
            let r_cur = s.r_next;
            let fr = f.get(r_cur);
            let (m_lo, m_hi) = if i < k {
                // leave room for the cheapest possible completion: `tail`
                // more rows and a strict staircase of cells below r_cur
                let Some(cell_budget) = (n - s.used).checked_sub(tail_min_cells) else {
                    continue;
                };
                let Some(row_budget) = (n - s.c).checked_sub(tail) else {
                    continue;
                };
                (1, (cell_budget / r_cur).min(row_budget))
            } else {
                // last block must land exactly on n cells
                let rest = n - s.used;
                if rest == 0 || !rest.is_multiple_of(r_cur) {
                    continue;
                }
                let m = rest / r_cur;
                (m, m)
            };
            let mut used = s.used + m_lo * r_cur;
            let mut cost = checked_acc(s.cost, i64::from(m_lo).checked_mul(fr).expect("block cost within i64"));
            for m in m_lo..=m_hi {
                let c = s.c + m;
                match mids.entry(pack(c, r_cur, used)) {
                    Entry::Vacant(e) => {
                        e.insert(Mid {
                            c,
                            r_cur,
                            used,
                            cost,
                            pred: Rc::clone(s),
                        });
                    }
                    Entry::Occupied(mut e) => {
                        let inc = e.get();
                        let wins = cost < inc.cost
                            || (cost == inc.cost && {
                                let mut challenger = chain_blocks(s);
                                challenger.push((r_cur, m));
                                cmp_blocks(&challenger, &mid_blocks(inc)) == Ordering::Less
                            });
                        if wins {
                            e.insert(Mid {
                                c,
                                r_cur,
                                used,
                                cost,
                                pred: Rc::clone(s),
                            });
                        }
                    }
                }
                used += r_cur;
                cost = checked_acc(cost, fr);
            }
        }

        // close the block: choose the next value (0 on the last layer)
        let mut next: PackedMap<Rc<DpState>> = PackedMap::default();
        for mid in mids.values() {
            let fs = fstar.get(mid.c);
            let (lo, hi) = if i < k {
                // the leftover cells must fit under the next value
                // ((n - c) rows at most) yet still leave a completable
                // staircase strictly below r_cur
                let need = n - mid.used;
                let lo = (tail).max(need.div_ceil(n - mid.c));
                let Some(slack) = need.checked_sub(tail * (tail - 1) / 2) else {
                    continue;
                };
                (lo, (mid.r_cur - 1).min(slack))
            } else {
                (0, 0)
            };
            if lo > hi {
                continue;
            }
            for r_next in lo..=hi {
                let cost = checked_acc(
                    mid.cost,
                    i64::from(mid.r_cur - r_next)
                        .checked_mul(fs)
                        .expect("column cost within i64"),
                );
                match next.entry(pack(mid.c, r_next, mid.used)) {
                    Entry::Vacant(e) => {
                        e.insert(Rc::new(DpState {
                            layer: i,
                            c: mid.c,
                            r_next,
                            used: mid.used,
                            cost,
                            pred: Some(Rc::clone(&mid.pred)),
                        }));
                    }
                    Entry::Occupied(mut e) => {
                        let inc = e.get();
                        let wins = cost < inc.cost
                            || (cost == inc.cost
                                && cmp_blocks(&mid_blocks(mid), &chain_blocks(inc))
                                    == Ordering::Less);
                        if wins {
                            e.insert(Rc::new(DpState {
                                layer: i,
                                c: mid.c,
                                r_next,
                                used: mid.used,
                                cost,
                                pred: Some(Rc::clone(&mid.pred)),
                            }));
                        }
                    }
                }
            }
        }
        layer = next.into_values().collect();
    }
    layer
}

fn pick_best(finals: &[Rc<DpState>]) -> Option<&Rc<DpState>> {
    let mut best: Option<&Rc<DpState>> = None;
    for state in finals {
        let wins = match best {
            None => true,
            Some(b) => {
                state.cost < b.cost
                    || (state.cost == b.cost
                        && cmp_blocks(&chain_blocks(state), &chain_blocks(b)) == Ordering::Less)
            }
        };
        if wins {
            best = Some(state);
        }
    }
    best
}
