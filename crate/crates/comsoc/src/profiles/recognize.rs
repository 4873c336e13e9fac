//! Axis recognition.
//!
//! Linear single-peakedness is decided by two-ended placement: the worst
//! remaining alternative of every voter must sit at one of the two free
//! outermost positions, which caps the branching at two candidates times two
//! sides. Approval single-peakedness and both approval/linear
//! single-crossingness reduce to consecutive-ones orderings, found by a
//! depth-first search that returns the lexicographically smallest valid
//! order. Every produced axis is re-checked definitionally before being
//! returned.

use super::{
    is_single_crossing_along, is_single_peaked_along, Axis, AxisTarget, PreferenceProfile,
    ProfileKind,
};
use crate::error::Result;
use std::collections::BTreeSet;

/// Finds an alternative axis along which the profile is single-peaked.
pub fn recognize_sp(profile: &PreferenceProfile) -> Result<Option<Axis>> {
    let order = match profile.kind() {
        ProfileKind::Linear => linear_sp_axis(profile),
        ProfileKind::Approval => {
            let rows: Vec<BTreeSet<usize>> = (0..profile.num_voters())
                .map(|v| profile.approval_set(v).map(|s| s.clone()))
                .collect::<Result<_>>()?;
            c1p_order(profile.num_alternatives(), &rows)
        }
    };
    if let Some(order) = &order {
        debug_assert!(is_single_peaked_along(profile, order)?);
    }
    Ok(order.map(|order| Axis { target: AxisTarget::Alternatives, order }))
}

/// Finds a voter axis along which the profile is single-crossing.
pub fn recognize_sc(profile: &PreferenceProfile) -> Result<Option<Axis>> {
    let order = match profile.kind() {
        ProfileKind::Linear => linear_sc_order(profile)?,
        ProfileKind::Approval => {
            let rows: Vec<BTreeSet<usize>> = (0..profile.num_alternatives())
                .map(|a| profile.supporters(a).map(|s| s.into_iter().collect()))
                .collect::<Result<_>>()?;
            c1p_order(profile.num_voters(), &rows)
        }
    };
    if let Some(order) = &order {
        debug_assert!(is_single_crossing_along(profile, order)?);
    }
    Ok(order.map(|order| Axis { target: AxisTarget::Voters, order }))
}

/// Lexicographically smaller of an order and its reversal; both orientations
/// of an axis are always equally valid.
fn reversal_canonical(mut order: Vec<usize>) -> Vec<usize> {
    let reversed: Vec<usize> = order.iter().rev().copied().collect();
    if reversed < order {
        order = reversed;
    }
    order
}

// ---------------------------------------------------------------------------
// Linear single-peaked recognition: two-ended placement.

struct SpSearch<'a> {
    profile: &'a PreferenceProfile,
    n: usize,
}

#[derive(Clone)]
struct SpState {
    remaining: Vec<bool>,
    left: Vec<usize>,
    /// Right block stored outermost-first.
    right: Vec<usize>,
    /// Per voter: has desirability already started falling on this side?
    desc_left: Vec<bool>,
    desc_right: Vec<bool>,
}

impl<'a> SpSearch<'a> {
    fn run(profile: &'a PreferenceProfile) -> Option<Vec<usize>> {
        let m = profile.num_alternatives();
        let search = SpSearch { profile, n: profile.num_voters() };
        let state = SpState {
            remaining: vec![true; m],
            left: Vec::new(),
            right: Vec::new(),
            desc_left: vec![false; search.n],
            desc_right: vec![false; search.n],
        };
        search.place(state, m)
    }

    /// Worst remaining alternative of each voter; at most two distinct ones
    /// can be placed, each only at an outermost free position.
    fn forced_candidates(&self, remaining: &[bool]) -> Option<Vec<usize>> {
        let mut cands = BTreeSet::new();
        for v in 0..self.n {
            let worst = (0..remaining.len())
                .filter(|&a| remaining[a])
                .max_by_key(|&a| self.profile.linear_rank(v, a))
                .expect("nonempty window");
            cands.insert(worst);
            if cands.len() > 2 {
                return None;
            }
        }
        Some(cands.into_iter().collect())
    }

    fn place(&self, state: SpState, left_to_place: usize) -> Option<Vec<usize>> {
        if left_to_place == 0 {
            let mut axis = state.left.clone();
            axis.extend(state.right.iter().rev());
            // Local checks cannot see the junction between the two blocks, so
            // the assembled axis is verified definitionally.
            if is_single_peaked_along(self.profile, &axis).unwrap_or(false) {
                return Some(axis);
            }
            return None;
        }
        let cands = self.forced_candidates(&state.remaining)?;
        for &c in &cands {
            // Right side first: a lone voter then builds their own ranking.
            for side_right in [true, false] {
                // The very first placement is symmetric under reversal.
                if !side_right && state.left.is_empty() && state.right.is_empty() {
                    continue;
                }
                if let Some(next) = self.try_place(&state, c, side_right) {
                    if let Some(axis) = self.place(next, left_to_place - 1) {
                        return Some(axis);
                    }
                }
            }
        }
        None
    }

    fn try_place(&self, state: &SpState, c: usize, side_right: bool) -> Option<SpState> {
        let block = if side_right { &state.right } else { &state.left };
        let mut next = state.clone();
        if let Some(&last) = block.last() {
            for v in 0..self.n {
                let rank_c = self.profile.linear_rank(v, c);
                let rank_last = self.profile.linear_rank(v, last);
                let descended =
                    if side_right { &mut next.desc_right[v] } else { &mut next.desc_left[v] };
                if rank_c < rank_last {
                    // Still climbing toward the peak; illegal after a fall.
                    if *descended {
                        return None;
                    }
                } else {
                    *descended = true;
                    // Past the peak everything still unplaced must be worse.
                    for a in 0..state.remaining.len() {
                        if a != c && state.remaining[a] && self.profile.linear_rank(v, a) < rank_c
                        {
                            return None;
                        }
                    }
                }
            }
        }
        next.remaining[c] = false;
        if side_right {
            next.right.push(c);
        } else {
            next.left.push(c);
        }
        Some(next)
    }
}

fn linear_sp_axis(profile: &PreferenceProfile) -> Option<Vec<usize>> {
    SpSearch::run(profile).map(reversal_canonical)
}

// ---------------------------------------------------------------------------
// Linear single-crossing recognition.

/// Pairs on which two voters disagree, counted.
fn disagreements(profile: &PreferenceProfile, v: usize, w: usize) -> usize {
    let m = profile.num_alternatives();
    let mut count = 0;
    for a in 0..m {
        for b in (a + 1)..m {
            let va = profile.linear_rank(v, a) < profile.linear_rank(v, b);
            let wa = profile.linear_rank(w, a) < profile.linear_rank(w, b);
            if va != wa {
                count += 1;
            }
        }
    }
    count
}

/// Tries every voter as the left end of the order; along a single-crossing
/// order the disagreement sets with the left end are nested, so sorting by
/// disagreement count (ties by index) reconstructs a valid order whenever the
/// reference is an endpoint of one.
fn linear_sc_order(profile: &PreferenceProfile) -> Result<Option<Vec<usize>>> {
    let n = profile.num_voters();
    for reference in 0..n {
        let d: Vec<usize> = (0..n).map(|v| disagreements(profile, v, reference)).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (d[v], v));
        if is_single_crossing_along(profile, &order)? {
            return Ok(Some(reversal_canonical(order)));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Consecutive-ones ordering.

/// Lexicographically smallest ordering of `0..len` making every row
/// contiguous, if one exists.
///
/// Depth-first search over prefixes. The invariant is that every "open" row
/// (some but not all members placed) occupies a suffix of the prefix; the
/// next column must therefore belong to all open rows. Prefixes of any valid
/// order always satisfy the invariant, so the first completed order is the
/// lexicographically smallest valid one.
pub(crate) fn c1p_order(len: usize, rows: &[BTreeSet<usize>]) -> Option<Vec<usize>> {
    fn dfs(
        len: usize,
        rows: &[BTreeSet<usize>],
        placed_in_row: &mut [usize],
        placed: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        if placed.len() == len {
            return true;
        }
        let open: Vec<usize> = (0..rows.len())
            .filter(|&r| placed_in_row[r] > 0 && placed_in_row[r] < rows[r].len())
            .collect();
        for c in 0..len {
            if used[c] || !open.iter().all(|&r| rows[r].contains(&c)) {
                continue;
            }
            used[c] = true;
            placed.push(c);
            for (r, row) in rows.iter().enumerate() {
                if row.contains(&c) {
                    placed_in_row[r] += 1;
                }
            }
            if dfs(len, rows, placed_in_row, placed, used) {
                return true;
            }
            for (r, row) in rows.iter().enumerate() {
                if row.contains(&c) {
                    placed_in_row[r] -= 1;
                }
            }
            placed.pop();
            used[c] = false;
        }
        false
    }

    let mut placed_in_row = vec![0usize; rows.len()];
    let mut placed = Vec::with_capacity(len);
    let mut used = vec![false; len];
    if dfs(len, rows, &mut placed_in_row, &mut placed, &mut used) {
        Some(placed)
    } else {
        None
    }
}
