//! Clique-to-committee reduction and exhaustive clique oracles.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::multiwinner::{Bound, MultiWinnerInstance};
use crate::profiles::PreferenceProfile;

use super::combinations;

/// A simple undirected graph together with a target clique size h,
/// 2 <= h <= vertex count.
#[derive(Debug, Clone)]
pub struct CliqueInput {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    h: usize,
}

impl CliqueInput {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>, h: usize) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::domain("graph needs at least one vertex"));
        }
        if h < 2 || h > vertices {
            return Err(Error::domain(format!(
                "clique size must satisfy 2 <= h <= {vertices}, got {h}"
            )));
        }
        let mut seen = HashSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= vertices || v >= vertices {
                return Err(Error::domain(format!("edge ({u}, {v}) leaves the vertex range")));
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::domain(format!("duplicate edge ({}, {})", key.0, key.1)));
            }
            normalized.push(key);
        }
        normalized.sort_unstable();
        Ok(CliqueInput { vertices, edges: normalized, h })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn h(&self) -> usize {
        self.h
    }
}

/// Emits the linear Chamberlin-Courant instance whose misrepresentation
/// decision answers the clique question. Per vertex i there are alternatives
/// a_i, b_i and a blocker block B_i of dummies; voter v_i ranks b_i, a_i,
/// B_i, then everything else ascending. Per edge j = {u, s} there is an
/// alternative c_j, a blocker block C_j of dummies, and 2h voters: h ranking
/// c_j, a_u, C_j, tail and h ranking c_j, a_s, C_j, tail. The committee size
/// is m̂ − C(h,2) + n̂ and the budget R = h + 2h·C(h,2).
///
/// Blocker blocks hold max(n̂, R+1) and max(m̂, R+1) dummies for vertices and
/// edges. The lower bounds n̂ and m̂ match the published construction; the
/// R+1 floor is what its correctness argument actually needs, since every
/// alternative past a voter's blocker must cost more than the whole budget.
/// On small dense graphs n̂ dummies are too few: a committee can then serve
/// one vertex voter through the tail at rank n̂+2 and pay for it by leaving
/// fewer than C(h,2) edges uncovered, reaching the bound without a clique.
///
/// When the committee size formula is nonpositive the graph has fewer than
/// C(h,2) edges, so no h-clique exists; a canonical two-alternative instance
/// whose best misrepresentation is R+1 stands in for the same no-answer.
pub fn clique_to_cc_instance(input: &CliqueInput) -> Result<MultiWinnerInstance> {
    let nv = input.vertices;
    let ne = input.edges.len();
    let h = input.h;
    let pairs = h * (h - 1) / 2;
    let budget = (h + 2 * h * pairs) as u64;

    let k = (nv + ne) as i64 - pairs as i64;
    if k < 1 {
        let half = budget as usize + 1;
        let mut rankings = vec![vec![0, 1]; half];
        rankings.extend(vec![vec![1, 0]; half]);
        let profile = PreferenceProfile::linear(2, rankings)?;
        return MultiWinnerInstance::new(profile, 1, Some(Bound::Misrep(budget)));
    }

    let bb = nv.max(budget as usize + 1);
    let cb = ne.max(budget as usize + 1);
    let a = |i: usize| i;
    let b = |i: usize| nv + i;
    let c = |j: usize| 2 * nv + j;
    let b_block = |i: usize| 2 * nv + ne + i * bb;
    let c_block = |j: usize| 2 * nv + ne + nv * bb + j * cb;
    let m = 2 * nv + ne + nv * bb + ne * cb;

    let with_tail = |head: Vec<usize>| -> Vec<usize> {
        let mentioned: HashSet<usize> = head.iter().copied().collect();
        let mut order = head;
        order.extend((0..m).filter(|x| !mentioned.contains(x)));
        order
    };

    let mut rankings = Vec::with_capacity(nv + 2 * h * ne);
    for i in 0..nv {
        let mut head = vec![b(i), a(i)];
        head.extend((0..bb).map(|t| b_block(i) + t));
        rankings.push(with_tail(head));
    }
    for (j, &(u, s)) in input.edges.iter().enumerate() {
        for endpoint in [u, s] {
            let mut head = vec![c(j), a(endpoint)];
            head.extend((0..cb).map(|t| c_block(j) + t));
            let ranking = with_tail(head);
            for _ in 0..h {
                rankings.push(ranking.clone());
            }
        }
    }

    let profile = PreferenceProfile::linear(m, rankings)?;
    MultiWinnerInstance::new(profile, k as usize, Some(Bound::Misrep(budget)))
}

/// Largest clique size, by scanning vertex subsets from large to small.
/// Intended as an oracle for small graphs.
pub fn max_clique_size(vertices: usize, edges: &[(usize, usize)]) -> usize {
    let adj = adjacency(vertices, edges);
    for size in (1..=vertices).rev() {
        for subset in combinations(vertices, size) {
            let is_clique = subset
                .iter()
                .enumerate()
                .all(|(p, &u)| subset[p + 1..].iter().all(|&v| adj[u][v]));
            if is_clique {
                return size;
            }
        }
    }
    0
}

/// Branch-and-bound clique decision: does the graph contain an h-clique?
/// Extends a partial clique through common neighbourhoods and prunes when
/// the candidate pool cannot complete it.
pub fn clique_decision_bb(vertices: usize, edges: &[(usize, usize)], h: usize) -> bool {
    if h == 0 {
        return true;
    }
    if h > vertices {
        return false;
    }
    let adj = adjacency(vertices, edges);
    let cands: Vec<usize> = (0..vertices).collect();
    extend(&adj, 0, &cands, h)
}

fn adjacency(vertices: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; vertices]; vertices];
    for &(u, v) in edges {
        if u < vertices && v < vertices && u != v {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    adj
}

fn extend(adj: &[Vec<bool>], depth: usize, cands: &[usize], h: usize) -> bool {
    if depth == h {
        return true;
    }
    if depth + cands.len() < h {
        return false;
    }
    for (p, &u) in cands.iter().enumerate() {
        let narrowed: Vec<usize> = cands[p + 1..].iter().copied().filter(|&v| adj[u][v]).collect();
        if extend(adj, depth + 1, &narrowed, h) {
            return true;
        }
    }
    false
}
