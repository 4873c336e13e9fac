//! Structural parameter measurement for hedonic games.

use super::{HedonicInstance, HedonicModel, Partition};
use crate::error::Result;
use std::collections::BTreeSet;

/// Which kind of feedback set the report's `feedback_set` holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeedbackKind {
    /// Arcs of the directed preference or friendship graph.
    ArcSet,
    /// Edges of the undirected graph of mutual friendships.
    EdgeSet,
}

impl std::fmt::Display for FeedbackKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FeedbackKind::ArcSet => "arc set",
            FeedbackKind::EdgeSet => "edge set",
        })
    }
}

/// The structural parameters of an instance, optionally refined by a
/// partition.
///
/// `max_degree` is the largest union of out- and in-neighborhoods in the
/// model's graph: arcs carrying nonzero utility for additive games, declared
/// friendships otherwise. `distinct_utility_count` counts the values the
/// utility function takes over ordered agent pairs. `feedback_number` is the
/// size of `feedback_set`, whose removal provably leaves the graph acyclic;
/// `feedback_certified` marks it as minimum rather than merely feasible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterReport {
    pub max_degree: usize,
    pub distinct_utility_count: usize,
    pub feedback_number: usize,
    pub feedback_kind: FeedbackKind,
    pub feedback_set: Vec<(usize, usize)>,
    pub feedback_certified: bool,
    pub kappa: Option<usize>,
    pub coalition_count: Option<usize>,
}

/// Largest vertex count the exact feedback-arc-set search will attempt; the
/// subset dynamic program beyond it would not fit in memory.
const EXACT_FAS_LIMIT: usize = 20;

/// Measure the parameters of `instance`, taking the largest coalition size
/// and the coalition count from `partition` when one is supplied.
///
/// Feedback sets are exact for the enemy-aversion model (edge deletions in
/// the mutual-friendship graph reduce to spanning forests) and for directed
/// graphs on at most 20 vertices; larger digraphs get a greedy upper bound
/// with `feedback_certified` false.
pub fn measure_parameters(
    instance: &HedonicInstance,
    partition: Option<&Partition>,
) -> Result<ParameterReport> {
    let n = instance.agent_count();
    let arcs: Vec<(usize, usize)> = match instance.model() {
        HedonicModel::Additive => instance.utility_arcs().map(|(u, w, _)| (u, w)).collect(),
        _ => instance.friendship_arcs().collect(),
    };

    let mut degrees = vec![BTreeSet::new(); n];
    for &(u, w) in &arcs {
        degrees[u].insert(w);
        degrees[w].insert(u);
    }
    let max_degree = degrees.iter().map(BTreeSet::len).max().unwrap_or(0);

    let mut values = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                values.insert(instance.utility(i, j));
            }
        }
    }

    let (feedback_kind, feedback_set, feedback_certified) = match instance.model() {
        HedonicModel::EnemyAversion => {
            let edges: Vec<(usize, usize)> = arcs
                .iter()
                .filter(|&&(u, w)| u < w && instance.is_friend(w, u))
                .copied()
                .collect();
            let feedback = feedback_edges(n, &edges);
            debug_assert!(is_forest(n, &edges, &feedback));
            (FeedbackKind::EdgeSet, feedback, true)
        }
        _ => {
            let (feedback, certified) = if n <= EXACT_FAS_LIMIT {
                (exact_fas(n, &arcs), true)
            } else {
                (greedy_fas(n, &arcs), false)
            };
            debug_assert!(is_dag(n, &arcs, &feedback));
            (FeedbackKind::ArcSet, feedback, certified)
        }
    };

    Ok(ParameterReport {
        max_degree,
        distinct_utility_count: values.len(),
        feedback_number: feedback_set.len(),
        feedback_kind,
        feedback_set,
        feedback_certified,
        kappa: partition.map(Partition::kappa),
        coalition_count: partition.map(Partition::coalition_count),
    })
}

/// Edges outside a spanning forest; removing exactly these is the unique
/// minimum way to make an undirected graph acyclic.
fn feedback_edges(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut Vec<usize>, v: usize) -> usize {
        if root[v] != v {
            root[v] = find(root, root[v]);
        }
        root[v]
    }
    let mut feedback = Vec::new();
    for &(u, w) in edges {
        let (ru, rw) = (find(&mut root, u), find(&mut root, w));
        if ru == rw {
            feedback.push((u, w));
        } else {
            root[ru] = rw;
        }
    }
    feedback
}

/// Back arcs of an optimal vertex ordering, found by dynamic programming
/// over vertex subsets: placing `v` last among `mask` costs the arcs from
/// `v` into the rest.
fn exact_fas(n: usize, arcs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out_mask = vec![0u32; n];
    for &(u, w) in arcs {
        out_mask[u] |= 1 << w;
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut dp = vec![u32::MAX; (full as usize) + 1];
    dp[0] = 0;
    for mask in 1..=full {
        let mut best = u32::MAX;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = mask & !(1 << v);
            let cost = dp[prev as usize] + (out_mask[v] & prev).count_ones();
            best = best.min(cost);
        }
        dp[mask as usize] = best;
    }

    let mut suffix = Vec::with_capacity(n);
    let mut mask = full;
    while mask != 0 {
        for v in 0..n {
            if mask & (1 << v) == 0 {
                continue;
            }
            let prev = mask & !(1 << v);
            if dp[prev as usize] + (out_mask[v] & prev).count_ones() == dp[mask as usize] {
                suffix.push(v);
                mask = prev;
                break;
            }
        }
    }
    suffix.reverse();
    back_arcs(n, arcs, &suffix)
}

/// Back arcs of a greedy ordering that repeatedly peels sinks to the back,
/// sources to the front, and otherwise the vertex with the best out-minus-in
/// balance; a feasible feedback arc set, not necessarily minimum.
fn greedy_fas(n: usize, arcs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut outs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut ins: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, w) in arcs {
        outs[u].insert(w);
        ins[w].insert(u);
    }
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut front = Vec::new();
    let mut back = Vec::new();
    fn remove(
        v: usize,
        alive: &mut BTreeSet<usize>,
        outs: &mut [BTreeSet<usize>],
        ins: &mut [BTreeSet<usize>],
    ) {
        alive.remove(&v);
        let targets: Vec<usize> = outs[v].iter().copied().collect();
        for w in targets {
            ins[w].remove(&v);
        }
        let sources: Vec<usize> = ins[v].iter().copied().collect();
        for u in sources {
            outs[u].remove(&v);
        }
    }
    while !alive.is_empty() {
        if let Some(&sink) = alive.iter().find(|&&v| outs[v].is_empty()) {
            remove(sink, &mut alive, &mut outs, &mut ins);
            back.push(sink);
            continue;
        }
        if let Some(&source) = alive.iter().find(|&&v| ins[v].is_empty()) {
            remove(source, &mut alive, &mut outs, &mut ins);
            front.push(source);
            continue;
        }
        let &pick = alive
            .iter()
            .max_by_key(|&&v| outs[v].len() as i64 - ins[v].len() as i64)
            .expect("nonempty");
        remove(pick, &mut alive, &mut outs, &mut ins);
        front.push(pick);
    }
    back.reverse();
    front.extend(back);
    back_arcs(n, arcs, &front)
}

fn back_arcs(n: usize, arcs: &[(usize, usize)], order: &[usize]) -> Vec<(usize, usize)> {
    let mut pos = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    arcs.iter().filter(|&&(u, w)| pos[u] > pos[w]).copied().collect()
}

fn is_dag(n: usize, arcs: &[(usize, usize)], removed: &[(usize, usize)]) -> bool {
    let gone: BTreeSet<(usize, usize)> = removed.iter().copied().collect();
    let kept: Vec<(usize, usize)> =
        arcs.iter().filter(|a| !gone.contains(a)).copied().collect();
    let mut alive = vec![true; n];
    loop {
        let mut changed = false;
        for v in 0..n {
            if alive[v] && !kept.iter().any(|&(u, w)| u == v && alive[w]) {
                alive[v] = false;
                changed = true;
            }
        }
        if !changed {
            return alive.iter().all(|&a| !a);
        }
    }
}

fn is_forest(n: usize, edges: &[(usize, usize)], removed: &[(usize, usize)]) -> bool {
    let gone: BTreeSet<(usize, usize)> = removed.iter().copied().collect();
    let kept: Vec<(usize, usize)> =
        edges.iter().filter(|e| !gone.contains(e)).copied().collect();
    feedback_edges(n, &kept).is_empty()
}
