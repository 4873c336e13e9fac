//! Batch command-line front end.
//!
//! [`run`] takes an argument vector and returns a [`CommandResult`]; the
//! binary prints the result and exits with its code. One invocation runs one
//! command:
//!
//! ```text
//! mw solve     --rule {monroe,cc,mav,pav} --k K --profile F
//!              [--bound R | --score S]
//!              [--algo {auto,enum,partition,xp-misrep,greedy,kernel}]
//! mw recognize --structure {sp,sc} --profile F
//!              [--delete {voters,alternatives} --budget B]
//! hg verify    --concept {nash,is,core,strict-core} --instance F --partition P
//!              [--algo {exact,bounded,colorcode}] [--delta D] [--seed N]
//! hg solve     --concept {score-fa,nash-sym,nash-ea} --instance F
//! hg params    --instance F [--partition P]
//! gen clique-cc --graph F --h H
//! gen random   --shape {linear,approval,additive,fe} --seed N
//!              [--m M] [--n N] [--b B] [--umax U] [--density D]
//!              [--symmetric] [--model {fa,ea}]
//! ```
//!
//! Global flags on every command: `--output {text,record}` (default text;
//! record mode prints one JSON object), `--time-limit` seconds (default from
//! the `COMSOC_TIME_LIMIT` environment variable), `--node-budget` nodes.
//! Exit codes: 0 ok, 1 no solution, 2 error. Diagnostics, including elapsed
//! time, go to standard error; record output is byte-identical across runs
//! with the same arguments and seed.
//!
//! Every ok payload is re-verified before emission: committee objectives are
//! recomputed from the ballots, witnesses replay their blocking predicate,
//! axes are re-validated against the profile, solved partitions pass the
//! exhaustive stability checker (skipped with a diagnostic above 10 agents),
//! and generated instances must round-trip through their parsers.

mod parse;

pub use parse::{
    parse_graph, parse_hedonic, parse_instance, parse_partition, parse_profile, render_hedonic,
    render_partition, render_profile, LoadedInstance};

use crate::error::{Error, Result};
use crate::hedonic::{
    ea_nash_exist_fas, fa_core_verify_bounded, fa_core_verify_colorcoded, fa_scc_partition,
    measure_parameters, nash_search_symmetric, verify, BlockingMode, HedonicInstance,
    HedonicModel, Partition, StabilityConcept, Witness, WitnessKind,
};
use crate::limits::SearchLimits;
use crate::multiwinner::{
    pav_greedy_small_score, pav_kernelize, pav_score, solve_by_committee_enumeration,
    solve_cc_by_voter_partition, solve_cc_xp_misrep, solve_pav_score_xp, Bound,
    CommitteeSolution, KernelOutcome, MultiWinnerInstance, Objective, Rule,
};
use crate::oracles::{clique_to_cc_instance, generate, CliqueInput, Generated, GeneratorShape,
    GeneratorSpec, GENERATOR_VERSION};
use crate::profiles::{
    deletion_distance, is_single_crossing_along, is_single_peaked_along, recognize_sc,
    recognize_sp, Axis, AxisTarget, DeletionTarget, PreferenceProfile, Structure,
};
use num_rational::BigRational;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

/// Environment variable holding the default `--time-limit` in seconds.
pub const TIME_LIMIT_ENV: &str = "COMSOC_TIME_LIMIT";

/// Overall command outcome, mapped onto the process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    NoSolution,
    Error,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::NoSolution => 1,
            Status::Error => 2,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::NoSolution => "no_solution",
            Status::Error => "error",
        }
    }
}

/// Where the payload goes on standard output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputMode {
    #[default]
    Text,
    Record,
}

/// The result of one command invocation.
#[derive(Debug)]
pub struct CommandResult {
    pub command: Vec<String>,
    pub status: Status,
    pub payload: Value,
    pub seed: Option<u64>,
    pub elapsed: Duration,
    pub output: OutputMode,
    pub diagnostics: Vec<String>,
    text: String,
}

impl CommandResult {
    pub fn exit_code(&self) -> u8 {
        self.status.exit_code()
    }

    /// The machine-readable record. Elapsed time is deliberately left out so
    /// identical invocations stay byte-identical; it is on standard error.
    pub fn record(&self) -> Value {
        json!({
            "command": self.command,
            "status": self.status.label(),
            "seed": self.seed,
            "payload": self.payload,
        })
    }

    /// What the binary prints on standard output.
    pub fn stdout(&self) -> String {
        match self.output {
            OutputMode::Text => self.text.clone(),
            OutputMode::Record => {
                serde_json::to_string(&self.record()).expect("records are plain JSON trees")
            }
        }
    }
}

struct Outcome {
    status: Status,
    payload: Value,
    text: String,
    seed: Option<u64>,
    notes: Vec<String>,
}

impl Outcome {
    fn ok(payload: Value, text: impl Into<String>) -> Self {
        Outcome { status: Status::Ok, payload, text: text.into(), seed: None, notes: Vec::new() }
    }

    fn no_solution(payload: Value, text: impl Into<String>) -> Self {
        Outcome {
            status: Status::NoSolution,
            payload,
            text: text.into(),
            seed: None,
            notes: Vec::new(),
        }
    }
}

/// Runs one command. Never panics on bad input: every failure becomes a
/// result with status `error` and exit code 2.
pub fn run<S: AsRef<str>>(argv: &[S]) -> CommandResult {
    let command: Vec<String> = argv.iter().map(|s| s.as_ref().to_string()).collect();
    let started = Instant::now();
    let output = peek_output_mode(&command);
    let mut result = match execute(&command) {
        Ok(outcome) => CommandResult {
            command,
            status: outcome.status,
            payload: outcome.payload,
            seed: outcome.seed,
            elapsed: started.elapsed(),
            output: output.unwrap_or_default(),
            diagnostics: outcome.notes,
            text: outcome.text,
        },
        Err(err) => CommandResult {
            command,
            status: Status::Error,
            payload: json!({ "error": err.to_string() }),
            seed: None,
            elapsed: started.elapsed(),
            output: output.unwrap_or_default(),
            diagnostics: Vec::new(),
            text: format!("error: {err}"),
        },
    };
    result.diagnostics.push(format!("elapsed: {:?}", result.elapsed));
    result
}

/// Reads `--output` ahead of full parsing so even usage errors honor it.
fn peek_output_mode(argv: &[String]) -> Option<OutputMode> {
    let pos = argv.iter().position(|a| a == "--output")?;
    match argv.get(pos + 1).map(String::as_str) {
        Some("record") => Some(OutputMode::Record),
        Some("text") => Some(OutputMode::Text),
        _ => None,
    }
}

const GLOBAL_FLAGS: [&str; 3] = ["--output", "--time-limit", "--node-budget"];

struct Args {
    flags: BTreeMap<String, String>,
    switches: BTreeSet<String>,
}

impl Args {
    fn opt(&self, name: &str) -> Option<&str> {
        self.flags.get(name).map(String::as_str)
    }

    fn req(&self, name: &str) -> Result<&str> {
        self.opt(name).ok_or_else(|| Error::contract(format!("missing required flag {name}")))
    }

    fn num<T: std::str::FromStr>(&self, name: &str) -> Result<T> {
        let raw = self.req(name)?;
        raw.parse::<T>()
            .map_err(|_| Error::contract(format!("flag {name} has an invalid value {raw:?}")))
    }

    fn opt_num<T: std::str::FromStr>(&self, name: &str) -> Result<Option<T>> {
        match self.opt(name) {
            None => Ok(None),
            Some(raw) => raw
                .parse::<T>()
                .map(Some)
                .map_err(|_| Error::contract(format!("flag {name} has an invalid value {raw:?}"))),
        }
    }

    fn limits(&self) -> Result<SearchLimits> {
        let nodes: Option<u64> = self.opt_num("--node-budget")?;
        let seconds: Option<f64> = match self.opt("--time-limit") {
            Some(raw) => Some(raw.parse::<f64>().map_err(|_| {
                Error::contract(format!("flag --time-limit has an invalid value {raw:?}"))
            })?),
            None => match std::env::var(TIME_LIMIT_ENV) {
                Ok(raw) => Some(raw.parse::<f64>().map_err(|_| {
                    Error::contract(format!("{TIME_LIMIT_ENV} has an invalid value {raw:?}"))
                })?),
                Err(_) => None,
            },
        };
        if let Some(s) = seconds {
            if !(s > 0.0 && s.is_finite()) {
                return Err(Error::contract(format!("time limit must be positive, got {s}")));
            }
        }
        let deadline = seconds.map(|s| Instant::now() + Duration::from_secs_f64(s));
        Ok(SearchLimits::new(nodes, deadline))
    }
}

/// Splits flags from the argument tail, rejecting anything not in `allowed`.
fn split_args(rest: &[String], allowed: &[&str], switch_names: &[&str]) -> Result<Args> {
    let mut flags = BTreeMap::new();
    let mut switches = BTreeSet::new();
    let mut it = rest.iter();
    while let Some(tok) = it.next() {
        if !tok.starts_with("--") {
            return Err(Error::contract(format!("unexpected argument {tok:?}")));
        }
        if !allowed.contains(&tok.as_str()) && !GLOBAL_FLAGS.contains(&tok.as_str()) {
            return Err(Error::contract(format!(
                "unknown flag {tok}; allowed here: {}",
                allowed.join(", ")
            )));
        }
        if switch_names.contains(&tok.as_str()) {
            switches.insert(tok.clone());
            continue;
        }
        let value = it
            .next()
            .ok_or_else(|| Error::contract(format!("flag {tok} needs a value")))?;
        if flags.insert(tok.clone(), value.clone()).is_some() {
            return Err(Error::contract(format!("flag {tok} given twice")));
        }
    }
    Ok(Args { flags, switches })
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::contract(format!("cannot read {path}: {e}")))
}

fn execute(argv: &[String]) -> Result<Outcome> {
    let (head, rest) = match argv {
        [a, b, rest @ ..] => ((a.as_str(), b.as_str()), rest),
        _ => {
            return Err(Error::contract(
                "usage: {mw solve|mw recognize|hg verify|hg solve|hg params|gen clique-cc|gen random} --flags...",
            ))
        }
    };
    match head {
        ("mw", "solve") => mw_solve(rest),
        ("mw", "recognize") => mw_recognize(rest),
        ("hg", "verify") => hg_verify(rest),
        ("hg", "solve") => hg_solve(rest),
        ("hg", "params") => hg_params(rest),
        ("gen", "clique-cc") => gen_clique(rest),
        ("gen", "random") => gen_random(rest),
        (a, b) => Err(Error::contract(format!("unknown command {a} {b}"))),
    }
}

fn one_based(agents: impl IntoIterator<Item = usize>) -> Vec<u64> {
    agents.into_iter().map(|a| a as u64 + 1).collect()
}

// ---------------------------------------------------------------------------
// mw solve

fn mw_solve(rest: &[String]) -> Result<Outcome> {
    let args = split_args(
        rest,
        &["--rule", "--k", "--profile", "--bound", "--score", "--algo"],
        &[],
    )?;
    let limits = args.limits()?;
    let rule = match args.req("--rule")? {
        "monroe" => Rule::Monroe,
        "cc" => Rule::ChamberlinCourant,
        "mav" => Rule::Mav,
        "pav" => Rule::Pav,
        other => return Err(Error::contract(format!("unknown rule {other:?}"))),
    };
    let k: usize = args.num("--k")?;
    let profile = parse_profile(&read_file(args.req("--profile")?)?)?;

    let bound = match (args.opt("--bound"), args.opt("--score")) {
        (Some(_), Some(_)) => {
            return Err(Error::contract("give at most one of --bound and --score"))
        }
        (Some(raw), None) => {
            if rule == Rule::Pav {
                return Err(Error::contract("pav is score-based; use --score"));
            }
            let r: u64 = raw
                .parse()
                .map_err(|_| Error::contract(format!("--bound has an invalid value {raw:?}")))?;
            Some(Bound::Misrep(r))
        }
        (None, Some(raw)) => {
            if rule != Rule::Pav {
                return Err(Error::contract(format!(
                    "{} is bound-based; use --bound",
                    rule.name()
                )));
            }
            let s: BigRational = raw
                .parse()
                .map_err(|_| Error::contract(format!("--score has an invalid value {raw:?}")))?;
            Some(Bound::Score(s))
        }
        (None, None) => None,
    };

    let instance = MultiWinnerInstance::new(profile, k, bound)?;
    let requested = args.opt("--algo").unwrap_or("auto");
    let algo = resolve_algo(rule, &instance, requested)?;

    let solution: Option<CommitteeSolution> = match algo {
        "enum" => Some(solve_by_committee_enumeration(&instance, rule, &limits)?),
        "partition" => {
            if rule != Rule::ChamberlinCourant {
                return Err(Error::contract("the voter-partition engine is specific to cc"));
            }
            Some(solve_cc_by_voter_partition(&instance, &limits)?)
        }
        "xp-misrep" => {
            if rule != Rule::ChamberlinCourant {
                return Err(Error::contract("the rank-bounded engine is specific to cc"));
            }
            solve_cc_xp_misrep(&instance, &limits)?
        }
        "greedy" => {
            if rule != Rule::Pav {
                return Err(Error::contract("the greedy engine is specific to pav"));
            }
            Some(pav_greedy_small_score(&instance)?)
        }
        "kernel" => {
            if rule != Rule::Pav {
                return Err(Error::contract("kernelization is specific to pav"));
            }
            solve_pav_by_kernel(&instance, &limits)?
        }
        other => return Err(Error::contract(format!("unknown algorithm {other:?}"))),
    };

    let Some(solution) = solution else {
        return Ok(Outcome::no_solution(
            json!({ "rule": rule.name(), "k": k, "decision": "no", "algo": algo }),
            format!("no committee of size {k} meets the bound"),
        ));
    };

    solution.verify(&instance.profile, k)?;
    let satisfied = match (&instance.bound, &solution.objective) {
        (None, _) => true,
        (Some(Bound::Misrep(r)), Objective::Misrep(x)) => x <= r,
        (Some(Bound::Score(s)), Objective::Score(x)) => x >= s,
        _ => return Err(Error::contract("objective and bound shapes disagree")),
    };

    let committee = one_based(solution.committee.iter().copied());
    let mut payload = json!({
        "rule": rule.name(),
        "k": k,
        "committee": committee,
        "objective": objective_value(&solution.objective),
        "algo": algo,
    });
    if let Some(assignment) = &solution.assignment {
        payload["assignment"] = json!(one_based(assignment.iter().copied()));
    }

    let committee_text = join(&solution.committee);
    let mut text = format!(
        "rule: {}\nk: {k}\ncommittee: {committee_text}\nobjective: {}\nalgo: {algo}",
        rule.name(),
        solution.objective
    );
    if let Some(assignment) = &solution.assignment {
        text.push_str(&format!("\nassignment: {}", join(assignment)));
    }

    if satisfied {
        Ok(Outcome::ok(payload, text))
    } else {
        payload["decision"] = json!("no");
        text.push_str("\nthe optimum misses the bound");
        Ok(Outcome::no_solution(payload, text))
    }
}

fn join(indices: &[usize]) -> String {
    indices.iter().map(|&x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn objective_value(objective: &Objective) -> Value {
    match objective {
        Objective::Misrep(x) => json!(x),
        Objective::Score(s) => json!(s.to_string()),
    }
}

/// Decides a pav score instance through the kernel, mapping any witness back
/// to original alternative indices.
fn solve_pav_by_kernel(
    instance: &MultiWinnerInstance,
    limits: &SearchLimits,
) -> Result<Option<CommitteeSolution>> {
    match pav_kernelize(instance)? {
        KernelOutcome::Yes { witness, score } => Ok(Some(CommitteeSolution {
            rule: Rule::Pav,
            committee: witness,
            assignment: None,
            objective: Objective::Score(score),
        })),
        KernelOutcome::Reduced { instance: reduced, alt_map } => {
            let Some(inner) = solve_pav_score_xp(&reduced, limits)? else {
                return Ok(None);
            };
            let mut committee: Vec<usize> =
                inner.committee.iter().map(|&a| alt_map[a]).collect();
            committee.sort_unstable();
            let score = pav_score(&instance.profile, &committee)?;
            Ok(Some(CommitteeSolution {
                rule: Rule::Pav,
                committee,
                assignment: None,
                objective: Objective::Score(score),
            }))
        }
    }
}

fn binomial(m: usize, k: usize) -> u128 {
    if k > m {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(m - k) {
        acc = acc.saturating_mul((m - i) as u128) / (i as u128 + 1);
        if acc > 1 << 40 {
            return acc;
        }
    }
    acc
}

/// Maps `--algo auto` to a concrete engine from the instance's measured
/// parameters: pav decisions kernelize, cc decisions with a misrepresentation
/// bound on linear ballots use the rank-bounded search, cc with few voters
/// but a committee space beyond 50000 uses the voter-partition engine, and
/// everything else enumerates committees.
fn resolve_algo<'a>(
    rule: Rule,
    instance: &MultiWinnerInstance,
    requested: &'a str,
) -> Result<&'a str> {
    if requested != "auto" {
        return Ok(requested);
    }
    let m = instance.profile.num_alternatives();
    let n = instance.profile.num_voters();
    Ok(match rule {
        Rule::Pav if instance.score_bound().is_some() => "kernel",
        Rule::ChamberlinCourant if instance.misrep_bound().is_some() => "xp-misrep",
        Rule::ChamberlinCourant
            if n <= 9 && binomial(m, instance.k) > 50_000 =>
        {
            "partition"
        }
        _ => "enum",
    })
}

// ---------------------------------------------------------------------------
// mw recognize

fn mw_recognize(rest: &[String]) -> Result<Outcome> {
    let args =
        split_args(rest, &["--structure", "--profile", "--delete", "--budget"], &[])?;
    let structure = match args.req("--structure")? {
        "sp" => Structure::SinglePeaked,
        "sc" => Structure::SingleCrossing,
        other => return Err(Error::contract(format!("unknown structure {other:?}"))),
    };
    let profile = parse_profile(&read_file(args.req("--profile")?)?)?;
    let tag = match structure {
        Structure::SinglePeaked => "sp",
        Structure::SingleCrossing => "sc",
    };

    match (args.opt("--delete"), args.opt_num::<usize>("--budget")?) {
        (None, None) => {
            let axis = match structure {
                Structure::SinglePeaked => recognize_sp(&profile)?,
                Structure::SingleCrossing => recognize_sc(&profile)?,
            };
            match axis {
                Some(axis) => {
                    check_axis(&profile, structure, &axis)?;
                    Ok(Outcome::ok(
                        json!({ "structure": tag, "axis": axis_value(&axis) }),
                        format!("axis {axis}"),
                    ))
                }
                None => Ok(Outcome::no_solution(
                    json!({ "structure": tag, "decision": "no" }),
                    format!("the profile is not {}", structure_name(structure)),
                )),
            }
        }
        (Some(target), Some(budget)) => {
            let target = match target {
                "voters" => DeletionTarget::Voters,
                "alternatives" => DeletionTarget::Alternatives,
                other => return Err(Error::contract(format!("unknown deletion target {other:?}"))),
            };
            match deletion_distance(&profile, structure, target, budget)? {
                Some(cert) => {
                    check_deletion(&profile, structure, target, &cert.removed, &cert.axis)?;
                    Ok(Outcome::ok(
                        json!({
                            "structure": tag,
                            "removed": one_based(cert.removed.iter().copied()),
                            "axis": axis_value(&cert.axis),
                        }),
                        format!("remove {}\naxis {}", join(&cert.removed), cert.axis),
                    ))
                }
                None => Ok(Outcome::no_solution(
                    json!({ "structure": tag, "decision": "no", "budget": budget }),
                    format!(
                        "no deletion set of size at most {budget} yields {}",
                        structure_name(structure)
                    ),
                )),
            }
        }
        _ => Err(Error::contract("--delete and --budget go together")),
    }
}

fn structure_name(structure: Structure) -> &'static str {
    match structure {
        Structure::SinglePeaked => "single-peaked",
        Structure::SingleCrossing => "single-crossing",
    }
}

fn axis_value(axis: &Axis) -> Value {
    let target = match axis.target {
        AxisTarget::Alternatives => "alternatives",
        AxisTarget::Voters => "voters",
    };
    json!({ "target": target, "order": one_based(axis.order.iter().copied()) })
}

fn check_axis(profile: &PreferenceProfile, structure: Structure, axis: &Axis) -> Result<()> {
    let holds = match structure {
        Structure::SinglePeaked => is_single_peaked_along(profile, &axis.order)?,
        Structure::SingleCrossing => is_single_crossing_along(profile, &axis.order)?,
    };
    if holds {
        Ok(())
    } else {
        Err(Error::contract("recognized axis failed re-validation"))
    }
}

/// Re-validates a deletion certificate by rebuilding the residual profile
/// and checking the axis, with original indices mapped into residual ones.
fn check_deletion(
    profile: &PreferenceProfile,
    structure: Structure,
    target: DeletionTarget,
    removed: &[usize],
    axis: &Axis,
) -> Result<()> {
    let gone: BTreeSet<usize> = removed.iter().copied().collect();
    let universe = match target {
        DeletionTarget::Voters => profile.num_voters(),
        DeletionTarget::Alternatives => profile.num_alternatives(),
    };
    let kept: Vec<usize> = (0..universe).filter(|x| !gone.contains(x)).collect();
    let residual = match target {
        DeletionTarget::Voters => profile.restrict_voters(&kept)?,
        DeletionTarget::Alternatives => profile.restrict_alternatives(&kept)?,
    };
    let axis_is_remapped = matches!(
        (target, axis.target),
        (DeletionTarget::Voters, AxisTarget::Voters)
            | (DeletionTarget::Alternatives, AxisTarget::Alternatives)
    );
    let order: Vec<usize> = if axis_is_remapped {
        axis.order
            .iter()
            .map(|&x| {
                kept.binary_search(&x)
                    .map_err(|_| Error::contract("certificate axis mentions a removed index"))
            })
            .collect::<Result<_>>()?
    } else {
        axis.order.clone()
    };
    let holds = match structure {
        Structure::SinglePeaked => is_single_peaked_along(&residual, &order)?,
        Structure::SingleCrossing => is_single_crossing_along(&residual, &order)?,
    };
    if holds {
        Ok(())
    } else {
        Err(Error::contract("deletion certificate failed re-validation"))
    }
}

// ---------------------------------------------------------------------------
// hg verify

fn hg_verify(rest: &[String]) -> Result<Outcome> {
    let args = split_args(
        rest,
        &["--concept", "--instance", "--partition", "--algo", "--delta", "--seed"],
        &[],
    )?;
    let limits = args.limits()?;
    let concept = match args.req("--concept")? {
        "nash" => StabilityConcept::Nash,
        "is" => StabilityConcept::IndividuallyStable,
        "core" => StabilityConcept::Core,
        // `score` names the strict core here: the score-based search is the
        // strict-core algorithm family.
        "strict-core" | "strict_core" | "score" => StabilityConcept::StrictCore,
        other => return Err(Error::contract(format!("unknown concept {other:?}"))),
    };
    let game = parse_hedonic(&read_file(args.req("--instance")?)?)?;
    let partition = parse_partition(&read_file(args.req("--partition")?)?, game.agent_count())?;

    let algo = args.opt("--algo").unwrap_or("exact");
    let mut seed_used = None;
    let witness = match algo {
        "exact" => verify(&game, &partition, concept, &limits)?,
        "bounded" => {
            let mode = match concept {
                StabilityConcept::Core => BlockingMode::Strict,
                StabilityConcept::StrictCore => BlockingMode::Weak,
                _ => {
                    return Err(Error::contract(
                        "the bounded engine verifies core and strict-core only",
                    ))
                }
            };
            fa_core_verify_bounded(&game, &partition, mode, &limits)?
        }
        "colorcode" => {
            if concept != StabilityConcept::Core {
                return Err(Error::contract("the color-coding engine verifies core only"));
            }
            let delta: f64 = args.opt_num("--delta")?.unwrap_or(0.001);
            let seed: u64 = args.opt_num("--seed")?.unwrap_or(0);
            seed_used = Some(seed);
            fa_core_verify_colorcoded(&game, &partition, delta, seed)?
        }
        other => return Err(Error::contract(format!("unknown algorithm {other:?}"))),
    };

    let mut payload = json!({
        "concept": concept.to_string(),
        "algo": algo,
        "stable": witness.is_none(),
    });
    let text = match &witness {
        None => format!("stable under {concept}"),
        Some(w) => {
            if !w.reverify(&game, &partition)? {
                return Err(Error::contract("emitted witness failed re-verification"));
            }
            payload["witness"] = witness_value(w);
            format!("unstable under {concept}\nwitness {w}")
        }
    };
    let mut outcome = Outcome::ok(payload, text);
    outcome.seed = seed_used;
    Ok(outcome)
}

fn witness_value(witness: &Witness) -> Value {
    let kind = match witness.kind {
        WitnessKind::BlockingCoalition => "blocking_coalition",
        WitnessKind::WeaklyBlockingCoalition => "weakly_blocking_coalition",
        WitnessKind::BlockingTuple => "blocking_tuple",
        WitnessKind::Envy => "envy",
    };
    let mut value = json!({
        "kind": kind,
        "agents": one_based(witness.agents.iter().copied()),
    });
    if let Some(target) = &witness.target {
        value["target"] = json!(one_based(target.iter().copied()));
    }
    value
}

fn partition_value(partition: &Partition) -> Value {
    let coalitions: Vec<Vec<u64>> = partition
        .coalitions()
        .iter()
        .map(|c| one_based(c.iter().copied()))
        .collect();
    json!(coalitions)
}

// ---------------------------------------------------------------------------
// hg solve

fn hg_solve(rest: &[String]) -> Result<Outcome> {
    let args = split_args(rest, &["--concept", "--instance"], &[])?;
    let limits = args.limits()?;
    let concept = args.req("--concept")?;
    let game = parse_hedonic(&read_file(args.req("--instance")?)?)?;

    match concept {
        "score-fa" => {
            let partition = fa_scc_partition(&game)?;
            let mut outcome = Outcome::ok(
                json!({ "concept": "score-fa", "partition": partition_value(&partition) }),
                format!("partition {partition}"),
            );
            confirm_stability(&game, &partition, StabilityConcept::StrictCore, &mut outcome.notes)?;
            Ok(outcome)
        }
        "nash-sym" => {
            let search = nash_search_symmetric(&game, &limits)?;
            if verify(&game, &search.partition, StabilityConcept::Nash, &limits)?.is_some() {
                return Err(Error::contract("search result failed re-verification"));
            }
            let welfare = search.welfare.last().copied().unwrap_or(0);
            let moves = search.welfare.len() - 1;
            Ok(Outcome::ok(
                json!({
                    "concept": "nash-sym",
                    "partition": partition_value(&search.partition),
                    "welfare": welfare,
                    "moves": moves,
                    "welfare_trace": search.welfare,
                }),
                format!(
                    "partition {}\nwelfare {welfare} after {moves} improving moves",
                    search.partition
                ),
            ))
        }
        "nash-ea" => match ea_nash_exist_fas(&game)? {
            Some(partition) => {
                if verify(&game, &partition, StabilityConcept::Nash, &limits)?.is_some() {
                    return Err(Error::contract("search result failed re-verification"));
                }
                Ok(Outcome::ok(
                    json!({ "concept": "nash-ea", "partition": partition_value(&partition) }),
                    format!("partition {partition}"),
                ))
            }
            None => Ok(Outcome::no_solution(
                json!({ "concept": "nash-ea", "decision": "no" }),
                "no nash stable partition exists".to_string(),
            )),
        },
        other => return Err(Error::contract(format!("unknown concept {other:?}"))),
    }
}

/// Exhaustively re-checks a solved partition when the agent count allows it;
/// beyond the guard the skip is reported as a diagnostic instead.
fn confirm_stability(
    game: &HedonicInstance,
    partition: &Partition,
    concept: StabilityConcept,
    notes: &mut Vec<String>,
) -> Result<()> {
    if game.agent_count() > 10 {
        notes.push(format!(
            "re-verification of {concept} skipped: {} agents exceed the exhaustive guard",
            game.agent_count()
        ));
        return Ok(());
    }
    if verify(game, partition, concept, &SearchLimits::default())?.is_some() {
        return Err(Error::contract("solved partition failed re-verification"));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// hg params

fn hg_params(rest: &[String]) -> Result<Outcome> {
    let args = split_args(rest, &["--instance", "--partition"], &[])?;
    let game = parse_hedonic(&read_file(args.req("--instance")?)?)?;
    let partition = match args.opt("--partition") {
        Some(path) => Some(parse_partition(&read_file(path)?, game.agent_count())?),
        None => None,
    };
    let report = measure_parameters(&game, partition.as_ref())?;

    let feedback_set: Vec<Vec<u64>> = report
        .feedback_set
        .iter()
        .map(|&(u, w)| vec![u as u64 + 1, w as u64 + 1])
        .collect();
    let mut payload = json!({
        "model": game.model().to_string(),
        "max_degree": report.max_degree,
        "distinct_utilities": report.distinct_utility_count,
        "feedback_number": report.feedback_number,
        "feedback_kind": report.feedback_kind.to_string(),
        "feedback_set": feedback_set,
        "feedback_certified": report.feedback_certified,
    });
    let mut text = format!(
        "model: {}\nmax degree: {}\ndistinct utilities: {}\nfeedback number: {} ({}{})",
        game.model(),
        report.max_degree,
        report.distinct_utility_count,
        report.feedback_number,
        report.feedback_kind,
        if report.feedback_certified { "" } else { ", upper bound" },
    );
    if let Some(kappa) = report.kappa {
        payload["kappa"] = json!(kappa);
        payload["coalition_count"] = json!(report.coalition_count);
        text.push_str(&format!(
            "\nkappa: {kappa}\ncoalitions: {}",
            report.coalition_count.unwrap_or(0)
        ));
    }
    Ok(Outcome::ok(payload, text))
}

// ---------------------------------------------------------------------------
// gen

fn gen_clique(rest: &[String]) -> Result<Outcome> {
    let args = split_args(rest, &["--graph", "--h"], &[])?;
    let (vertices, edges) = parse_graph(&read_file(args.req("--graph")?)?)?;
    let h: usize = args.num("--h")?;
    let input = CliqueInput::new(vertices, edges.clone(), h)?;
    let instance = clique_to_cc_instance(&input)?;

    let body = render_profile(&instance.profile);
    reparse_check(&body)?;
    let bound = instance
        .misrep_bound()
        .ok_or_else(|| Error::contract("reduction must carry a misrepresentation bound"))?;
    let text = format!(
        "# {GENERATOR_VERSION} clique-cc vertices={vertices} edges={} h={h}\n# rule=cc k={} bound={bound}\n{body}",
        edges.len(),
        instance.k,
    );
    Ok(Outcome::ok(
        json!({
            "rule": "cc",
            "k": instance.k,
            "bound": bound,
            "alternatives": instance.profile.num_alternatives(),
            "voters": instance.profile.num_voters(),
            "instance": text,
        }),
        text.trim_end().to_string(),
    ))
}

fn gen_random(rest: &[String]) -> Result<Outcome> {
    let args = split_args(
        rest,
        &["--shape", "--seed", "--m", "--n", "--b", "--umax", "--density", "--model"],
        &["--symmetric"],
    )?;
    let seed: u64 = args.num("--seed")?;
    let (shape, describe) = match args.req("--shape")? {
        "linear" => {
            let m: usize = args.num("--m")?;
            let n: usize = args.num("--n")?;
            (GeneratorShape::RandomLinear { alternatives: m, voters: n }, format!("linear m={m} n={n}"))
        }
        "approval" => {
            let m: usize = args.num("--m")?;
            let n: usize = args.num("--n")?;
            let b: usize = args.num("--b")?;
            (
                GeneratorShape::RandomApproval { alternatives: m, voters: n, max_ballot: b },
                format!("approval m={m} n={n} b={b}"),
            )
        }
        "additive" => {
            let n: usize = args.num("--n")?;
            let umax: i64 = args.num("--umax")?;
            let density: f64 = args.num("--density")?;
            let symmetric = args.switches.contains("--symmetric");
            (
                GeneratorShape::RandomAdditive { agents: n, max_utility: umax, density, symmetric },
                format!("additive n={n} umax={umax} density={density} symmetric={symmetric}"),
            )
        }
        "fe" => {
            let n: usize = args.num("--n")?;
            let density: f64 = args.num("--density")?;
            let model = match args.req("--model")? {
                "fa" => HedonicModel::FriendAppreciation,
                "ea" => HedonicModel::EnemyAversion,
                other => return Err(Error::contract(format!("unknown model {other:?}"))),
            };
            (
                GeneratorShape::RandomFe { agents: n, density, model },
                format!("fe n={n} density={density} model={model}"),
            )
        }
        other => return Err(Error::contract(format!("unknown shape {other:?}"))),
    };

    let spec = GeneratorSpec { seed, shape };
    let body = match generate(&spec)? {
        Generated::Profile(profile) => render_profile(&profile),
        Generated::Game(game) => render_hedonic(&game),
    };
    reparse_check(&body)?;
    let again = match generate(&spec)? {
        Generated::Profile(profile) => render_profile(&profile),
        Generated::Game(game) => render_hedonic(&game),
    };
    if body != again {
        return Err(Error::contract("generator failed its determinism re-check"));
    }

    let text = format!("# {GENERATOR_VERSION} seed={seed} shape={describe}\n{body}");
    let mut outcome = Outcome::ok(
        json!({ "seed": seed, "shape": describe, "instance": text }),
        text.trim_end().to_string(),
    );
    outcome.seed = Some(seed);
    Ok(outcome)
}

/// Generated text must parse back under the instance readers.
fn reparse_check(body: &str) -> Result<()> {
    parse_instance(body).map(|_| ()).map_err(|e| {
        Error::contract(format!("generated instance failed its own parser: {e}"))
    })
}
