//! Optimal voter-to-member assignments for a fixed committee.
//!
//! Chamberlin-Courant assigns every voter independently to their best
//! committee member. Monroe must balance loads inside the window
//! [floor(n/k), ceil(n/k)], which is a minimum-cost transportation problem;
//! it is solved exactly by successive shortest augmenting paths, and the
//! returned assignment is made canonical (lexicographically smallest among
//! the optimal ones) by fixing voters one at a time.

use crate::error::{Error, Result};
use crate::profiles::{PreferenceProfile, ProfileKind};
use super::Rule;

/// Computes a misrepresentation-minimizing assignment of voters to members
/// of `committee`. Deterministic: among optimal assignments, the
/// lexicographically smallest (voter by voter, by member index) is returned.
pub fn optimal_assignment(
    profile: &PreferenceProfile,
    rule: Rule,
    committee: &[usize],
) -> Result<Vec<usize>> {
    if !rule.uses_assignment() {
        return Err(Error::contract("optimal_assignment applies to assignment-based rules"));
    }
    super::check_committee(profile, committee)?;
    match rule {
        Rule::ChamberlinCourant => cc_assignment(profile, committee),
        Rule::Monroe => monroe_assignment(profile, committee),
        _ => unreachable!(),
    }
}

fn cc_assignment(profile: &PreferenceProfile, committee: &[usize]) -> Result<Vec<usize>> {
    let n = profile.num_voters();
    let mut assignment = Vec::with_capacity(n);
    for v in 0..n {
        let mut best = committee[0];
        match profile.kind() {
            ProfileKind::Linear => {
                for &w in &committee[1..] {
                    if profile.rank(v, w)? < profile.rank(v, best)? {
                        best = w;
                    }
                }
            }
            ProfileKind::Approval => {
                let ballot = profile.approval_set(v)?;
                if let Some(&w) = committee.iter().find(|w| ballot.contains(w)) {
                    best = w;
                }
            }
        }
        assignment.push(best);
    }
    Ok(assignment)
}

fn monroe_assignment(profile: &PreferenceProfile, committee: &[usize]) -> Result<Vec<usize>> {
    let n = profile.num_voters();
    let k = committee.len();
    if n < k {
        return Err(Error::domain(format!(
            "proportional assignment needs at least as many voters as members ({n} < {k})"
        )));
    }
    let costs = voter_costs(profile, committee)?;
    let mut low = vec![n / k; k];
    let mut high = vec![n.div_ceil(k); k];
    let (opt, _) = transport(&costs, &low, &high)
        .ok_or_else(|| Error::domain("capacity window admits no assignment"))?;

    // Fix voters in order to the smallest member that keeps the remaining
    // transportation problem at the optimal cost.
    let mut assignment = Vec::with_capacity(n);
    let mut remaining = opt;
    for v in 0..n {
        let mut chosen = None;
        for slot in 0..k {
            if high[slot] == 0 {
                continue;
            }
            let mut nl = low.clone();
            let mut nh = high.clone();
            nl[slot] = nl[slot].saturating_sub(1);
            nh[slot] -= 1;
            if let Some((rest, _)) = transport(&costs[v + 1..], &nl, &nh) {
                if costs[v][slot] + rest == remaining {
                    remaining -= costs[v][slot];
                    low = nl;
                    high = nh;
                    chosen = Some(slot);
                    break;
                }
            }
        }
        let slot = chosen.expect("an optimal assignment extends any optimal prefix");
        assignment.push(committee[slot]);
    }
    Ok(assignment)
}

fn voter_costs(profile: &PreferenceProfile, committee: &[usize]) -> Result<Vec<Vec<u64>>> {
    let mut costs = Vec::with_capacity(profile.num_voters());
    for v in 0..profile.num_voters() {
        let mut row = Vec::with_capacity(committee.len());
        for &w in committee {
            let c = match profile.kind() {
                ProfileKind::Linear => profile.rank(v, w)? as u64,
                ProfileKind::Approval => u64::from(!profile.approval_set(v)?.contains(&w)),
            };
            row.push(c);
        }
        costs.push(row);
    }
    Ok(costs)
}

/// Minimum-cost transportation: each source ships one unit; target `j` must
/// receive between `low[j]` and `high[j]` units. Returns the optimal cost
/// and a per-source target choice, or `None` if infeasible.
///
/// Lower bounds are enforced by splitting each target's edge to the sink
/// into a mandatory part of capacity `low[j]` and an elective part routed
/// through a shared node whose capacity is the total slack; a saturating
/// maximum flow then meets every lower bound exactly.
fn transport(costs: &[Vec<u64>], low: &[usize], high: &[usize]) -> Option<(u64, Vec<usize>)> {
    let n = costs.len();
    let t = low.len();
    let total_low: usize = low.iter().sum();
    let total_high: usize = high.iter().sum();
    if total_low > n || n > total_high {
        return None;
    }
    if n == 0 {
        return Some((0, Vec::new()));
    }

    // Nodes: 0 source, 1..=n sources, n+1..=n+t targets, n+t+1 slack, n+t+2 sink.
    let slack = n + t + 1;
    let sink = n + t + 2;
    let mut g = Flow::new(sink + 1);
    for v in 0..n {
        g.add(0, 1 + v, 1, 0);
    }
    let mut unit_arcs = vec![vec![usize::MAX; t]; n];
    for v in 0..n {
        for j in 0..t {
            unit_arcs[v][j] = g.add(1 + v, n + 1 + j, 1, costs[v][j] as i64);
        }
    }
    for j in 0..t {
        g.add(n + 1 + j, sink, low[j] as i64, 0);
        g.add(n + 1 + j, slack, (high[j] - low[j]) as i64, 0);
    }
    g.add(slack, sink, (n - total_low) as i64, 0);

    let (flow, cost) = g.min_cost_max_flow(0, sink);
    if flow != n as i64 {
        return None;
    }
    let mut pick = vec![0usize; n];
    for v in 0..n {
        for j in 0..t {
            if g.flow_on(unit_arcs[v][j]) == 1 {
                pick[v] = j;
            }
        }
    }
    Some((cost as u64, pick))
}

struct Flow {
    head: Vec<usize>,
    cap: Vec<i64>,
    cost: Vec<i64>,
    adj: Vec<Vec<usize>>,
    initial: Vec<i64>,
}

impl Flow {
    fn new(nodes: usize) -> Self {
        Flow {
            head: Vec::new(),
            cap: Vec::new(),
            cost: Vec::new(),
            adj: vec![Vec::new(); nodes],
            initial: Vec::new(),
        }
    }

    fn add(&mut self, u: usize, v: usize, cap: i64, cost: i64) -> usize {
        let id = self.head.len();
        self.head.push(v);
        self.cap.push(cap);
        self.cost.push(cost);
        self.initial.push(cap);
        self.adj[u].push(id);
        self.head.push(u);
        self.cap.push(0);
        self.cost.push(-cost);
        self.initial.push(0);
        self.adj[v].push(id + 1);
        id
    }

    fn flow_on(&self, arc: usize) -> i64 {
        self.initial[arc] - self.cap[arc]
    }

    fn min_cost_max_flow(&mut self, s: usize, t: usize) -> (i64, i64) {
        let nodes = self.adj.len();
        let (mut flow, mut cost) = (0i64, 0i64);
        loop {
            // Shortest augmenting path by cost (Bellman-Ford over the
            // residual graph, which contains negative reverse arcs).
            let mut dist = vec![i64::MAX; nodes];
            let mut pre = vec![usize::MAX; nodes];
            let mut inq = vec![false; nodes];
            let mut queue = std::collections::VecDeque::new();
            dist[s] = 0;
            queue.push_back(s);
            inq[s] = true;
            while let Some(u) = queue.pop_front() {
                inq[u] = false;
                for &e in &self.adj[u] {
                    if self.cap[e] > 0 && dist[u] != i64::MAX {
                        let v = self.head[e];
                        let nd = dist[u] + self.cost[e];
                        if nd < dist[v] {
                            dist[v] = nd;
                            pre[v] = e;
                            if !inq[v] {
                                inq[v] = true;
                                queue.push_back(v);
                            }
                        }
                    }
                }
            }
            if dist[t] == i64::MAX {
                return (flow, cost);
            }
            let mut push = i64::MAX;
            let mut v = t;
            while v != s {
                let e = pre[v];
                push = push.min(self.cap[e]);
                v = self.head[e ^ 1];
            }
            let mut v = t;
            while v != s {
                let e = pre[v];
                self.cap[e] -= push;
                self.cap[e ^ 1] += push;
                v = self.head[e ^ 1];
            }
            flow += push;
            cost += push * dist[t];
        }
    }
}
