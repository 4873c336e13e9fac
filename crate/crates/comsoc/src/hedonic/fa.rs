//! Verification algorithms for the friend-appreciation model.
//!
//! The entry points climb in sophistication: [`fa_unbounded_blocking`] settles
//! all deviations larger than the largest current coalition by a peeling
//! argument, [`fa_core_verify_bounded`] finishes the job by enumerating the
//! small ones, and [`fa_core_verify_colorcoded`] replaces the enumeration with
//! a randomized color-coding search whose cost is governed by the largest
//! coalition size and the feedback arc number rather than the agent count.
//! [`fa_scc_partition`] builds the always-existing strictly core stable
//! partition from the strongly connected components of the friendship graph.

use super::verify::blocks;
use super::{Coalition, HedonicInstance, HedonicModel, Partition, Witness, WitnessKind};
use crate::error::{Error, Result};
use crate::limits::SearchLimits;
use crate::oracles::combinations;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Whether a deviation must improve every member (`Strict`, the core) or
/// merely not hurt anyone while improving someone (`Weak`, the strict core).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockingMode {
    Strict,
    Weak,
}

fn require_fa(instance: &HedonicInstance) -> Result<()> {
    if instance.model() != HedonicModel::FriendAppreciation {
        return Err(Error::unsupported(format!(
            "friend-appreciation algorithm invoked on a {} game",
            instance.model()
        )));
    }
    Ok(())
}

fn require_pair(instance: &HedonicInstance, partition: &Partition) -> Result<()> {
    if instance.agent_count() != partition.agent_count() {
        return Err(Error::domain(format!(
            "partition covers {} agents but the game has {}",
            partition.agent_count(),
            instance.agent_count()
        )));
    }
    Ok(())
}

fn home_friend_counts(instance: &HedonicInstance, partition: &Partition) -> Vec<usize> {
    (0..instance.agent_count())
        .map(|i| instance.friend_split(i, partition.coalition_of(i)).0)
        .collect()
}

/// Decide whether some coalition larger than the partition's largest one
/// blocks it, in polynomial time.
///
/// Every member of such a coalition must gain friends outright, so peeling
/// away agents whose surviving friends do not outnumber their current ones
/// leaves a superset of every candidate. A fixpoint bigger than the size cap
/// is itself blocking and is returned as the witness, labeled per `mode`;
/// anything smaller proves no oversized deviation exists.
pub fn fa_unbounded_blocking(
    instance: &HedonicInstance,
    partition: &Partition,
    mode: BlockingMode,
) -> Result<Option<Witness>> {
    require_fa(instance)?;
    require_pair(instance, partition)?;
    let n = instance.agent_count();
    let home = home_friend_counts(instance, partition);
    let mut alive = vec![true; n];
    loop {
        let mut changed = false;
        for i in 0..n {
            if !alive[i] {
                continue;
            }
            let surviving = instance.friends_of(i).filter(|&j| alive[j]).count();
            if surviving <= home[i] {
                alive[i] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let fixpoint: Coalition = (0..n).filter(|&i| alive[i]).collect();
    if fixpoint.len() <= partition.kappa() {
        return Ok(None);
    }
    let witness = Witness {
        kind: match mode {
            BlockingMode::Strict => WitnessKind::BlockingCoalition,
            BlockingMode::Weak => WitnessKind::WeaklyBlockingCoalition,
        },
        agents: fixpoint,
        target: None,
    };
    debug_assert!(witness.reverify(instance, partition).unwrap_or(false));
    Ok(Some(witness))
}

/// Exact core (`Strict`) or strict-core (`Weak`) verification.
///
/// Oversized deviations go through [`fa_unbounded_blocking`]; the remainder
/// are enumerated outright, up to the largest coalition size for the core and
/// one more for the strict core. Each examined subset costs one node from
/// `limits`.
pub fn fa_core_verify_bounded(
    instance: &HedonicInstance,
    partition: &Partition,
    mode: BlockingMode,
    limits: &SearchLimits,
) -> Result<Option<Witness>> {
    require_fa(instance)?;
    require_pair(instance, partition)?;
    if let Some(witness) = fa_unbounded_blocking(instance, partition, mode)? {
        return Ok(Some(witness));
    }
    let n = instance.agent_count();
    let weak = mode == BlockingMode::Weak;
    let cap = (partition.kappa() + usize::from(weak)).min(n);
    // An agent whose friends cannot all be gathered without loss has nothing
    // to gain from any deviation, so the enumeration skips him entirely.
    let home = home_friend_counts(instance, partition);
    let pool: Vec<usize> = (0..n)
        .filter(|&i| {
            let all = instance.friends_of(i).count();
            let (_, home_enemies) = instance.friend_split(i, partition.coalition_of(i));
            all > home[i] || (all == home[i] && (weak || home_enemies > 0))
        })
        .collect();
    for size in 1..=cap.min(pool.len()) {
        for picks in combinations(pool.len(), size) {
            limits.tick()?;
            let candidate: Coalition = picks.iter().map(|&p| pool[p]).collect();
            if blocks(instance, partition, &candidate, weak)? {
                return Ok(Some(Witness {
                    kind: if weak {
                        WitnessKind::WeaklyBlockingCoalition
                    } else {
                        WitnessKind::BlockingCoalition
                    },
                    agents: candidate,
                    target: None,
                }));
            }
        }
    }
    Ok(None)
}

/// Strongly connected components of the subgraph induced on `nodes`, emitted
/// sinks first (Tarjan's pop order reverses the condensation's topology).
fn induced_sccs(instance: &HedonicInstance, nodes: &[usize]) -> Vec<Vec<usize>> {
    struct State<'a> {
        instance: &'a HedonicInstance,
        nodes: &'a [usize],
        index: BTreeMap<usize, usize>,
        order: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        out: Vec<Vec<usize>>,
    }

    fn visit(s: &mut State, v: usize) {
        s.order[v] = Some(s.next);
        s.low[v] = s.next;
        s.next += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        let neighbors: Vec<usize> = s
            .instance
            .friends_of(s.nodes[v])
            .filter_map(|j| s.index.get(&j).copied())
            .collect();
        for w in neighbors {
            match s.order[w] {
                None => {
                    visit(s, w);
                    s.low[v] = s.low[v].min(s.low[w]);
                }
                Some(ord) if s.on_stack[w] => s.low[v] = s.low[v].min(ord),
                _ => {}
            }
        }
        if s.low[v] == s.order[v].expect("visited") {
            let mut component = Vec::new();
            while let Some(w) = s.stack.pop() {
                s.on_stack[w] = false;
                component.push(s.nodes[w]);
                if w == v {
                    break;
                }
            }
            component.sort_unstable();
            s.out.push(component);
        }
    }

    let mut state = State {
        instance,
        nodes,
        index: nodes.iter().enumerate().map(|(pos, &id)| (id, pos)).collect(),
        order: vec![None; nodes.len()],
        low: vec![0; nodes.len()],
        on_stack: vec![false; nodes.len()],
        stack: Vec::new(),
        next: 0,
        out: Vec::new(),
    };
    for v in 0..nodes.len() {
        if state.order[v].is_none() {
            visit(&mut state, v);
        }
    }
    state.out
}

/// The partition into strongly connected components of the friendship graph,
/// which is always strictly core stable under friend appreciation.
pub fn fa_scc_partition(instance: &HedonicInstance) -> Result<Partition> {
    require_fa(instance)?;
    let nodes: Vec<usize> = (0..instance.agent_count()).collect();
    let blocks = induced_sccs(instance, &nodes);
    Partition::new(instance.agent_count(), &blocks)
}

/// A cycle within the subgraph induced on `nodes`, if one exists.
fn induced_cycle(instance: &HedonicInstance, nodes: &[usize]) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        White,
        Gray,
        Black,
    }

    fn dfs(
        instance: &HedonicInstance,
        index: &BTreeMap<usize, usize>,
        nodes: &[usize],
        marks: &mut [Mark],
        path: &mut Vec<usize>,
        v: usize,
    ) -> Option<Vec<usize>> {
        marks[v] = Mark::Gray;
        path.push(v);
        for w in instance.friends_of(nodes[v]).filter_map(|j| index.get(&j).copied()) {
            match marks[w] {
                Mark::White => {
                    if let Some(cycle) = dfs(instance, index, nodes, marks, path, w) {
                        return Some(cycle);
                    }
                }
                Mark::Gray => {
                    let start = path.iter().position(|&x| x == w).expect("gray is on path");
                    return Some(path[start..].iter().map(|&x| nodes[x]).collect());
                }
                Mark::Black => {}
            }
        }
        path.pop();
        marks[v] = Mark::Black;
        None
    }

    let index: BTreeMap<usize, usize> =
        nodes.iter().enumerate().map(|(pos, &id)| (id, pos)).collect();
    let mut marks = vec![Mark::White; nodes.len()];
    let mut path = Vec::new();
    for v in 0..nodes.len() {
        if marks[v] == Mark::White {
            if let Some(cycle) = dfs(instance, &index, nodes, &mut marks, &mut path, v) {
                return Some(cycle);
            }
            path.clear();
        }
    }
    None
}

fn trial_count(q: usize, delta: f64) -> usize {
    if q <= 1 {
        return 1;
    }
    // One trial succeeds when the q witness agents draw distinct colors,
    // which happens with probability q!/q^q.
    let mut success: f64 = 1.0;
    for i in 1..=q {
        success *= i as f64 / q as f64;
    }
    let trials = (delta.ln() / (1.0 - success).ln()).ceil();
    trials.max(1.0) as usize
}

/// Core verification by the two-phase color-coding algorithm.
///
/// Phase one dispatches the easy certificates: a coalition of the partition
/// that is not strongly connected (its sink component deviates), a cycle
/// among agents currently alone, and every oversized deviation through
/// [`fa_unbounded_blocking`]. Phase two hunts the survivors: for each set of
/// non-singleton participants and each target size it computes how many
/// singleton friends each participant still needs, then searches the acyclic
/// singleton graph for the missing agents by randomized color-coding. Enough
/// colorings are drawn that an existing witness is found with probability at
/// least `1 - delta`; a `None` answer is therefore one-sided. The color draw
/// is a pure function of `seed`, so repeated calls with the same seed agree.
/// Searches needing more than 16 simultaneous colors are refused.
pub fn fa_core_verify_colorcoded(
    instance: &HedonicInstance,
    partition: &Partition,
    delta: f64,
    seed: u64,
) -> Result<Option<Witness>> {
    require_fa(instance)?;
    require_pair(instance, partition)?;
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::domain(format!(
            "failure probability must lie strictly between 0 and 1, got {delta}"
        )));
    }

    // (P1) A coalition that is not strongly connected is deserted by its
    // sink component: those agents keep every friend and shed an enemy.
    for coalition in partition.coalitions() {
        if coalition.len() < 2 {
            continue;
        }
        let members: Vec<usize> = coalition.iter().copied().collect();
        let comps = induced_sccs(instance, &members);
        if comps.len() > 1 {
            let witness = Witness {
                kind: WitnessKind::BlockingCoalition,
                agents: comps[0].iter().copied().collect(),
                target: None,
            };
            debug_assert!(witness.reverify(instance, partition).unwrap_or(false));
            return Ok(Some(witness));
        }
    }

    // (P2) A cycle among agents currently alone blocks: everyone gains a
    // friend. This also guarantees the singleton graph used below is acyclic.
    let singles: Vec<usize> = (0..instance.agent_count())
        .filter(|&i| partition.coalition_of(i).len() == 1)
        .collect();
    if let Some(cycle) = induced_cycle(instance, &singles) {
        let witness = Witness {
            kind: WitnessKind::BlockingCoalition,
            agents: cycle.into_iter().collect(),
            target: None,
        };
        debug_assert!(witness.reverify(instance, partition).unwrap_or(false));
        return Ok(Some(witness));
    }

    // (P3) Oversized deviations.
    if let Some(witness) = fa_unbounded_blocking(instance, partition, BlockingMode::Strict)? {
        return Ok(Some(witness));
    }

    let kappa = partition.kappa();
    let non_singles: Vec<usize> = (0..instance.agent_count())
        .filter(|&i| partition.coalition_of(i).len() > 1)
        .collect();
    let home = home_friend_counts(instance, partition);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for take in 1..=kappa.min(non_singles.len()) {
        for picks in combinations(non_singles.len(), take) {
            let bns: Vec<usize> = picks.iter().map(|&p| non_singles[p]).collect();
            let bns_set: Coalition = bns.iter().copied().collect();
            let inside: Vec<usize> = bns
                .iter()
                .map(|&a| instance.friends_of(a).filter(|j| bns_set.contains(j)).count())
                .collect();
            for b in take..=kappa {
                if b == take {
                    if blocks(instance, partition, &bns_set, false)? {
                        return Ok(Some(Witness {
                            kind: WitnessKind::BlockingCoalition,
                            agents: bns_set,
                            target: None,
                        }));
                    }
                    continue;
                }
                let q = b - take;
                // Minimum singleton friends each participant needs: match his
                // current friend count, or beat it when the new coalition
                // would be at least as large as his current one.
                let needs: Vec<usize> = bns
                    .iter()
                    .zip(&inside)
                    .map(|(&a, &p)| {
                        let slack = usize::from(b >= partition.coalition_of(a).len());
                        (home[a] + slack).saturating_sub(p)
                    })
                    .collect();
                if needs.iter().any(|&r| r > q) {
                    continue;
                }
                if let Some(extension) = colorful_extension(
                    instance, &singles, &bns, &needs, q, delta, &mut rng,
                )? {
                    let mut agents = bns_set.clone();
                    agents.extend(extension);
                    let witness = Witness {
                        kind: WitnessKind::BlockingCoalition,
                        agents,
                        target: None,
                    };
                    debug_assert!(witness.reverify(instance, partition).unwrap_or(false));
                    return Ok(Some(witness));
                }
            }
        }
    }
    Ok(None)
}

type DpState = (u16, u16);

enum DpStep {
    Leaf,
    Attach { prev: DpState, child: usize, child_state: DpState },
}

enum RootStep {
    Start,
    Attach { prev: DpState, root: usize, root_state: DpState },
}

/// Search for `q` singleton agents that extend `bns` to a blocking coalition,
/// giving participant `bns[i]` at least `needs[i]` singleton friends and every
/// chosen singleton a friend inside the coalition.
///
/// A valid extension corresponds to an in-forest over the acyclic singleton
/// graph whose roots befriend a participant, which the dynamic program below
/// assembles bottom-up over random color classes so that distinct colors
/// certify distinct agents.
fn colorful_extension(
    instance: &HedonicInstance,
    singles: &[usize],
    bns: &[usize],
    needs: &[usize],
    q: usize,
    delta: f64,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Vec<usize>>> {
    if q > 16 {
        return Err(Error::resource(format!(
            "color-coded search supports at most 16 missing agents, needed {q}"
        )));
    }
    // Only singletons that can chain through friends to a participant are
    // eligible; anyone else could never justify his own membership.
    let rooted: Vec<bool> = singles
        .iter()
        .map(|&s| instance.friends_of(s).any(|j| bns.contains(&j)))
        .collect();
    let mut eligible: Vec<bool> = rooted.clone();
    loop {
        let mut changed = false;
        for (pos, &s) in singles.iter().enumerate() {
            if eligible[pos] {
                continue;
            }
            let reaches = instance.friends_of(s).any(|j| {
                singles.binary_search(&j).map(|w| eligible[w]).unwrap_or(false)
            });
            if reaches {
                eligible[pos] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let pool: Vec<usize> = singles
        .iter()
        .enumerate()
        .filter(|&(pos, _)| eligible[pos])
        .map(|(_, &s)| s)
        .collect();
    if pool.len() < q {
        return Ok(None);
    }
    for (i, &a) in bns.iter().enumerate() {
        let reachable = instance.friends_of(a).filter(|j| pool.binary_search(j).is_ok()).count();
        if reachable < needs[i] {
            return Ok(None);
        }
    }

    // Mixed-radix encoding of the per-participant friend counts, clamped at
    // the requirement so the state space stays parameter-sized.
    let mut stride = vec![1usize; bns.len()];
    for i in 1..bns.len() {
        stride[i] = stride[i - 1] * (needs[i - 1] + 1);
    }
    let full_rho: usize = bns
        .iter()
        .enumerate()
        .map(|(i, _)| needs[i] * stride[i])
        .sum();
    let clamped_add = |code: usize, i: usize| -> usize {
        let digit = code / stride[i] % (needs[i] + 1);
        if digit < needs[i] {
            code + stride[i]
        } else {
            code
        }
    };
    let merge_rho = |a: usize, b: usize| -> usize {
        let mut out = 0;
        for i in 0..bns.len() {
            let da = a / stride[i] % (needs[i] + 1);
            let db = b / stride[i] % (needs[i] + 1);
            out += da.saturating_add(db).min(needs[i]) * stride[i];
        }
        out
    };
    let contribution = |s: usize| -> usize {
        let mut code = 0;
        for (i, &a) in bns.iter().enumerate() {
            if instance.is_friend(a, s) {
                code = clamped_add(code, i);
            }
        }
        code
    };

    // In-neighbors within the pool: the agents who would pick this one as
    // their tree parent. The pool inherits acyclicity from the singletons.
    let children: Vec<Vec<usize>> = pool
        .iter()
        .map(|&v| {
            pool.iter()
                .enumerate()
                .filter(|&(_, &u)| u != v && instance.is_friend(u, v))
                .map(|(pos, _)| pos)
                .collect()
        })
        .collect();
    let topo = topological_order(&children);
    let full_mask: u16 = if q == 16 { u16::MAX } else { (1u16 << q) - 1 };

    let trials = trial_count(q, delta);
    for _ in 0..trials {
        let colors: Vec<u16> = pool.iter().map(|_| rng.gen_range(0..q as u16)).collect();
        let mut dp: Vec<BTreeMap<DpState, DpStep>> =
            (0..pool.len()).map(|_| BTreeMap::new()).collect();
        for &v in &topo {
            let leaf = (1u16 << colors[v], contribution(pool[v]) as u16);
            dp[v].insert(leaf, DpStep::Leaf);
            for &u in &children[v] {
                let child_states: Vec<DpState> = dp[u].keys().copied().collect();
                let own_states: Vec<DpState> = dp[v].keys().copied().collect();
                for &(qv, rv) in &own_states {
                    for &(qu, ru) in &child_states {
                        if qv & qu != 0 {
                            continue;
                        }
                        let key = (qv | qu, merge_rho(rv as usize, ru as usize) as u16);
                        dp[v].entry(key).or_insert(DpStep::Attach {
                            prev: (qv, rv),
                            child: u,
                            child_state: (qu, ru),
                        });
                    }
                }
            }
        }

        let mut forest: BTreeMap<DpState, RootStep> = BTreeMap::new();
        forest.insert((0, 0), RootStep::Start);
        for &v in &topo {
            if !rooted_in(instance, pool[v], bns) {
                continue;
            }
            let own: Vec<DpState> = forest.keys().copied().collect();
            for &(qf, rf) in &own {
                for (&(qv, rv), _) in dp[v].iter() {
                    if qf & qv != 0 {
                        continue;
                    }
                    let key = (qf | qv, merge_rho(rf as usize, rv as usize) as u16);
                    forest.entry(key).or_insert(RootStep::Attach {
                        prev: (qf, rf),
                        root: v,
                        root_state: (qv, rv),
                    });
                }
            }
        }

        let target = (full_mask, full_rho as u16);
        if forest.contains_key(&target) {
            let mut chosen = Vec::new();
            let mut cursor = target;
            loop {
                match forest.get(&cursor).expect("reachable state") {
                    RootStep::Start => break,
                    RootStep::Attach { prev, root, root_state } => {
                        collect_subtree(&dp, *root, *root_state, &mut chosen);
                        cursor = *prev;
                    }
                }
            }
            let agents: Vec<usize> = chosen.into_iter().map(|v| pool[v]).collect();
            debug_assert_eq!(agents.len(), q);
            return Ok(Some(agents));
        }
    }
    Ok(None)
}

fn rooted_in(instance: &HedonicInstance, agent: usize, bns: &[usize]) -> bool {
    instance.friends_of(agent).any(|j| bns.contains(&j))
}

fn collect_subtree(
    dp: &[BTreeMap<DpState, DpStep>],
    vertex: usize,
    state: DpState,
    out: &mut Vec<usize>,
) {
    let mut cursor = state;
    loop {
        match dp[vertex].get(&cursor).expect("recorded state") {
            DpStep::Leaf => {
                out.push(vertex);
                return;
            }
            DpStep::Attach { prev, child, child_state } => {
                collect_subtree(dp, *child, *child_state, out);
                cursor = *prev;
            }
        }
    }
}

/// Order the pool so every arc `u -> v` (child before parent) puts `u` first.
fn topological_order(children: &[Vec<usize>]) -> Vec<usize> {
    let n = children.len();
    // children[v] lists in-neighbors of v, so v waits on all of them.
    let mut remaining: Vec<usize> = children.iter().map(Vec::len).collect();
    let mut dependents = vec![Vec::new(); n];
    for (v, kids) in children.iter().enumerate() {
        for &u in kids {
            dependents[u].push(v);
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut ready: Vec<usize> = (0..n).filter(|&v| remaining[v] == 0).collect();
    ready.sort_unstable_by(|a, b| b.cmp(a));
    while let Some(v) = ready.pop() {
        order.push(v);
        for &w in &dependents[v] {
            remaining[w] -= 1;
            if remaining[w] == 0 {
                ready.push(w);
                ready.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
    }
    debug_assert_eq!(order.len(), n, "singleton graph must be acyclic here");
    order
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{ea_example, fa_example};
    use super::super::{verify, StabilityConcept};
    use super::*;

    fn set(agents: &[usize]) -> Coalition {
        agents.iter().copied().collect()
    }

    fn free() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn peeling_finds_the_oversized_deviation_from_singletons() {
        let game = fa_example();
        let singles = Partition::singletons(4);
        for mode in [BlockingMode::Strict, BlockingMode::Weak] {
            let witness = fa_unbounded_blocking(&game, &singles, mode)
                .unwrap()
                .expect("everyone gains friends together");
            assert_eq!(witness.agents, set(&[0, 1, 2, 3]));
            assert!(witness.reverify(&game, &singles).unwrap());
        }
    }

    #[test]
    fn peeling_is_silent_on_the_grand_coalition() {
        let game = fa_example();
        let grand = Partition::grand(4);
        assert!(fa_unbounded_blocking(&game, &grand, BlockingMode::Strict).unwrap().is_none());
    }

    #[test]
    fn peeling_is_silent_without_friends() {
        let game = HedonicInstance::friend_appreciation(5, []).unwrap();
        let singles = Partition::singletons(5);
        assert!(fa_unbounded_blocking(&game, &singles, BlockingMode::Strict).unwrap().is_none());
    }

    #[test]
    fn peeling_ignores_undersized_fixpoints() {
        // The mutual pair 1-2 blocks, but never with more than two agents, so
        // the peeling stage must defer to the enumeration stage.
        let game = HedonicInstance::friend_appreciation(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
            .unwrap();
        let partition = Partition::new(4, &[vec![0], vec![1], vec![2, 3]]).unwrap();
        assert!(fa_unbounded_blocking(&game, &partition, BlockingMode::Strict)
            .unwrap()
            .is_none());
        let witness = fa_core_verify_bounded(&game, &partition, BlockingMode::Strict, &free())
            .unwrap()
            .expect("the pair deviates");
        assert_eq!(witness.agents, set(&[0, 1]));
    }

    #[test]
    fn fa_algorithms_reject_other_models() {
        let game = ea_example();
        let singles = Partition::singletons(4);
        assert!(fa_unbounded_blocking(&game, &singles, BlockingMode::Strict).is_err());
        assert!(fa_core_verify_bounded(&game, &singles, BlockingMode::Strict, &free()).is_err());
        assert!(fa_core_verify_colorcoded(&game, &singles, 0.01, 0x636f_6c6f).is_err());
        assert!(fa_scc_partition(&game).is_err());
    }

    #[test]
    fn bounded_verification_matches_the_worked_example() {
        let game = fa_example();
        let split = Partition::new(4, &[vec![0, 1, 2], vec![3]]).unwrap();
        assert!(fa_core_verify_bounded(&game, &split, BlockingMode::Strict, &free())
            .unwrap()
            .is_none());
        assert!(fa_core_verify_bounded(&game, &split, BlockingMode::Weak, &free())
            .unwrap()
            .is_none());
    }

    #[test]
    fn bounded_verification_agrees_with_the_exhaustive_search() {
        let game = fa_example();
        for blocks in [
            vec![vec![0, 1, 2, 3]],
            vec![vec![0, 1], vec![2, 3]],
            vec![vec![0, 3], vec![1, 2]],
            vec![vec![0], vec![1], vec![2], vec![3]],
            vec![vec![0, 1, 2], vec![3]],
        ] {
            let partition = Partition::new(4, &blocks).unwrap();
            let fast = fa_core_verify_bounded(&game, &partition, BlockingMode::Strict, &free())
                .unwrap();
            let slow = verify(&game, &partition, StabilityConcept::Core, &free()).unwrap();
            assert_eq!(fast.is_some(), slow.is_some(), "partition {partition}");
            let fast = fa_core_verify_bounded(&game, &partition, BlockingMode::Weak, &free())
                .unwrap();
            let slow = verify(&game, &partition, StabilityConcept::StrictCore, &free()).unwrap();
            assert_eq!(fast.is_some(), slow.is_some(), "partition {partition}");
        }
    }

    #[test]
    fn single_agent_games_are_stable() {
        let game = HedonicInstance::friend_appreciation(1, []).unwrap();
        let partition = Partition::singletons(1);
        assert!(fa_core_verify_bounded(&game, &partition, BlockingMode::Strict, &free())
            .unwrap()
            .is_none());
    }

    #[test]
    fn scc_partition_of_the_example_is_the_grand_coalition() {
        let game = fa_example();
        let partition = fa_scc_partition(&game).unwrap();
        assert_eq!(partition.coalition_count(), 1);
        assert!(verify(&game, &partition, StabilityConcept::StrictCore, &free())
            .unwrap()
            .is_none());
    }

    #[test]
    fn scc_partition_splits_disconnected_friendships() {
        let game = HedonicInstance::friend_appreciation(4, [(0, 1), (1, 0), (2, 3)]).unwrap();
        let partition = fa_scc_partition(&game).unwrap();
        assert_eq!(partition.coalitions()[0], set(&[0, 1]));
        assert_eq!(partition.coalitions()[1], set(&[2]));
        assert_eq!(partition.coalitions()[2], set(&[3]));
        assert!(verify(&game, &partition, StabilityConcept::StrictCore, &free())
            .unwrap()
            .is_none());
    }

    #[test]
    fn scc_partition_without_arcs_is_all_singletons() {
        let game = HedonicInstance::friend_appreciation(3, []).unwrap();
        assert_eq!(fa_scc_partition(&game).unwrap(), Partition::singletons(3));
    }

    #[test]
    fn colorcoded_p1_reports_the_sink_component() {
        let game = HedonicInstance::friend_appreciation(2, [(0, 1)]).unwrap();
        let grand = Partition::grand(2);
        let witness = fa_core_verify_colorcoded(&game, &grand, 0.001, 0x636f_6c6f)
            .unwrap()
            .expect("the unloved agent walks out");
        assert_eq!(witness.agents, set(&[1]));
        assert!(witness.reverify(&game, &grand).unwrap());
    }

    #[test]
    fn colorcoded_p2_reports_a_singleton_cycle() {
        let game =
            HedonicInstance::friend_appreciation(4, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let singles = Partition::singletons(4);
        let witness = fa_core_verify_colorcoded(&game, &singles, 0.001, 0x636f_6c6f)
            .unwrap()
            .expect("the cycle regroups");
        assert_eq!(witness.agents, set(&[0, 1, 2]));
        assert!(witness.reverify(&game, &singles).unwrap());
    }

    #[test]
    fn colorcoded_phase_two_assembles_a_mixed_coalition() {
        // Home triangle 1-2-3 rotates one-way friendships; agent 1 and the
        // lone agent 4 point at each other. The only deviation is {1, 4},
        // which needs the tree search: the peeling fixpoint is empty and both
        // preprocessing certificates are absent.
        let game = HedonicInstance::friend_appreciation(
            4,
            [(0, 1), (1, 2), (2, 0), (0, 3), (3, 0)],
        )
        .unwrap();
        let partition = Partition::new(4, &[vec![0, 1, 2], vec![3]]).unwrap();
        assert!(fa_unbounded_blocking(&game, &partition, BlockingMode::Strict)
            .unwrap()
            .is_none());
        let witness = fa_core_verify_colorcoded(&game, &partition, 0.001, 0x636f_6c6f)
            .unwrap()
            .expect("agent 1 defects with agent 4");
        assert_eq!(witness.agents, set(&[0, 3]));
        assert!(witness.reverify(&game, &partition).unwrap());
    }

    #[test]
    fn colorcoded_extends_with_singleton_chains() {
        // Agent 1 must beat his one friend at home, so he needs two singleton
        // friends; agent 4 only works through agent 3, whose own friend is a
        // participant. The coalition {1, 3, 4} exercises depth-two trees, and
        // the decoy triangle {5, 6, 7} raises the size cap to three without
        // offering any deviation of its own.
        let game = HedonicInstance::friend_appreciation(
            7,
            [(0, 1), (1, 0), (0, 2), (0, 3), (2, 0), (3, 2), (4, 5), (5, 6), (6, 4)],
        )
        .unwrap();
        let partition =
            Partition::new(7, &[vec![0, 1], vec![2], vec![3], vec![4, 5, 6]]).unwrap();
        assert!(fa_unbounded_blocking(&game, &partition, BlockingMode::Strict)
            .unwrap()
            .is_none());
        let witness = fa_core_verify_colorcoded(&game, &partition, 0.001, 0x636f_6c6f)
            .unwrap()
            .expect("a three-agent deviation exists");
        assert_eq!(witness.agents, set(&[0, 2, 3]));
        assert!(witness.reverify(&game, &partition).unwrap());
        let bounded = fa_core_verify_bounded(&game, &partition, BlockingMode::Strict, &free())
            .unwrap()
            .expect("enumeration agrees");
        assert_eq!(bounded.agents, set(&[0, 2, 3]));
    }

    #[test]
    fn colorcoded_accepts_stable_partitions() {
        let game = fa_example();
        let grand = Partition::grand(4);
        assert!(fa_core_verify_colorcoded(&game, &grand, 0.001, 0x636f_6c6f).unwrap().is_none());
        let split = Partition::new(4, &[vec![0, 1, 2], vec![3]]).unwrap();
        assert!(fa_core_verify_colorcoded(&game, &split, 0.001, 0x636f_6c6f).unwrap().is_none());
    }

    #[test]
    fn colorcoded_agrees_with_bounded_on_the_example() {
        let game = fa_example();
        for blocks in [
            vec![vec![0, 1], vec![2, 3]],
            vec![vec![0, 2], vec![1, 3]],
            vec![vec![0], vec![1], vec![2], vec![3]],
            vec![vec![0, 1, 2, 3]],
        ] {
            let partition = Partition::new(4, &blocks).unwrap();
            let fast = fa_core_verify_colorcoded(&game, &partition, 0.001, 0x636f_6c6f).unwrap();
            let slow = fa_core_verify_bounded(&game, &partition, BlockingMode::Strict, &free())
                .unwrap();
            assert_eq!(fast.is_some(), slow.is_some(), "partition {partition}");
        }
    }

    #[test]
    fn colorcoded_validates_delta() {
        let game = fa_example();
        let singles = Partition::singletons(4);
        assert!(fa_core_verify_colorcoded(&game, &singles, 0.0, 0x636f_6c6f).is_err());
        assert!(fa_core_verify_colorcoded(&game, &singles, 1.0, 0x636f_6c6f).is_err());
    }

    #[test]
    fn trial_counts_scale_with_the_failure_budget() {
        assert_eq!(trial_count(0, 0.001), 1);
        assert_eq!(trial_count(1, 0.001), 1);
        assert!(trial_count(2, 0.001) >= 10);
        assert!(trial_count(3, 0.01) < trial_count(3, 0.001));
    }
}
