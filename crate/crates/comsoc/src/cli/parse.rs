//! Text formats for instances, partitions, and graphs.
//!
//! All formats are line-oriented UTF-8. Lines starting with `#` and blank
//! lines are ignored everywhere. Agents, voters, alternatives, and vertices
//! are 1-based in files and 0-based in memory; parsers shift on the way in,
//! writers shift on the way out. Parse errors carry the physical line number
//! of the offending line.

use crate::error::{Error, Result};
use crate::hedonic::{HedonicInstance, HedonicModel, Partition};
use crate::profiles::{PreferenceProfile, ProfileKind};

/// A parsed instance file of either family.
#[derive(Debug, Clone)]
pub enum LoadedInstance {
    Profile(PreferenceProfile),
    Game(HedonicInstance),
}

/// Comment-free lines: (1-based physical line number, trimmed text). Blank
/// lines are kept because an empty approval ballot is written as one.
fn logical_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.trim()))
        .filter(|(_, line)| !line.starts_with('#'))
}

/// Lines that carry data: comment-free and nonblank.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    logical_lines(text).filter(|(_, line)| !line.is_empty())
}

fn parse_count(token: &str, what: &str, line: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(line, format!("{what} must be a nonnegative integer, got {token:?}")))
}

/// Parses a 1-based index token and shifts it to 0-based, checking range.
fn parse_index(token: &str, bound: usize, what: &str, line: usize) -> Result<usize> {
    let value = token
        .parse::<usize>()
        .map_err(|_| Error::parse(line, format!("{what} must be a positive integer, got {token:?}")))?;
    if value == 0 || value > bound {
        return Err(Error::parse(
            line,
            format!("{what} {value} is out of range 1..={bound}"),
        ));
    }
    Ok(value - 1)
}

/// Reads a profile file (`linear m n` or `approval m n` header).
pub fn parse_profile(text: &str) -> Result<PreferenceProfile> {
    match parse_instance(text)? {
        LoadedInstance::Profile(profile) => Ok(profile),
        LoadedInstance::Game(_) => {
            Err(Error::contract("expected an election profile, found a hedonic game"))
        }
    }
}

/// Reads a hedonic game file (`hedonic ...` header).
pub fn parse_hedonic(text: &str) -> Result<HedonicInstance> {
    match parse_instance(text)? {
        LoadedInstance::Game(game) => Ok(game),
        LoadedInstance::Profile(_) => {
            Err(Error::contract("expected a hedonic game, found an election profile"))
        }
    }
}

/// Reads any instance file, dispatching on the header keyword.
pub fn parse_instance(text: &str) -> Result<LoadedInstance> {
    let mut lines = logical_lines(text);
    let (header_no, header) = lines
        .by_ref()
        .find(|(_, line)| !line.is_empty())
        .ok_or_else(|| Error::parse(1, "file has no header line"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    match fields[0] {
        "linear" | "approval" => {
            let [_, m, n] = fields[..] else {
                return Err(Error::parse(header_no, "profile header needs exactly `kind m n`"));
            };
            let m = parse_count(m, "alternative count", header_no)?;
            let n = parse_count(n, "voter count", header_no)?;
            let profile = parse_profile_body(fields[0], m, n, &mut lines, header_no)?;
            Ok(LoadedInstance::Profile(profile))
        }
        "hedonic" => {
            let game =
                parse_hedonic_body(&fields, &mut lines.filter(|(_, l)| !l.is_empty()), header_no)?;
            Ok(LoadedInstance::Game(game))
        }
        other => Err(Error::parse(
            header_no,
            format!("unknown header keyword {other:?}; expected linear, approval, or hedonic"),
        )),
    }
}

fn parse_profile_body<'a>(
    kind: &str,
    m: usize,
    n: usize,
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    header_no: usize,
) -> Result<PreferenceProfile> {
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut last_no = header_no;
    for _ in 0..n {
        // A blank line is a legal empty approval ballot, so the body takes
        // the next n lines blank or not.
        let (no, line) = lines.next().ok_or_else(|| {
            Error::parse(last_no, format!("expected {n} ballot lines, found {}", rows.len()))
        })?;
        last_no = no;
        let row = line
            .split_whitespace()
            .map(|tok| parse_index(tok, m, "alternative", no))
            .collect::<Result<Vec<usize>>>()?;
        if kind == "linear" && row.len() != m {
            return Err(Error::parse(
                no,
                format!("ranking must list all {m} alternatives, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    if let Some((no, _)) = lines.find(|(_, line)| !line.is_empty()) {
        return Err(Error::parse(no, format!("trailing data after {n} ballot lines")));
    }
    let built = match kind {
        "linear" => PreferenceProfile::linear(m, rows),
        _ => PreferenceProfile::approval(m, rows),
    };
    built.map_err(|e| Error::parse(header_no, format!("invalid profile body: {e}")))
}

fn parse_hedonic_body<'a>(
    fields: &[&str],
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    header_no: usize,
) -> Result<HedonicInstance> {
    let (model, n) = match fields {
        ["hedonic", "additive", n] => (HedonicModel::Additive, n),
        ["hedonic", "fe", "fa", n] => (HedonicModel::FriendAppreciation, n),
        ["hedonic", "fe", "ea", n] => (HedonicModel::EnemyAversion, n),
        _ => {
            return Err(Error::parse(
                header_no,
                "hedonic header must be `hedonic additive n` or `hedonic fe {fa|ea} n`",
            ))
        }
    };
    let n = parse_count(n, "agent count", header_no)?;
    let mut triples: Vec<(usize, usize, i64)> = Vec::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for (no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match model {
            HedonicModel::Additive => {
                let [i, j, u] = toks[..] else {
                    return Err(Error::parse(no, "additive lines need exactly `i j u`"));
                };
                let i = parse_index(i, n, "agent", no)?;
                let j = parse_index(j, n, "agent", no)?;
                let u = u.parse::<i64>().map_err(|_| {
                    Error::parse(no, format!("utility must be an integer, got {u:?}"))
                })?;
                triples.push((i, j, u));
            }
            _ => {
                let [i, j] = toks[..] else {
                    return Err(Error::parse(no, "arc lines need exactly `i j`"));
                };
                arcs.push((parse_index(i, n, "agent", no)?, parse_index(j, n, "agent", no)?));
            }
        }
    }
    let built = match model {
        HedonicModel::Additive => HedonicInstance::additive(n, triples),
        HedonicModel::FriendAppreciation => HedonicInstance::friend_appreciation(n, arcs),
        HedonicModel::EnemyAversion => HedonicInstance::enemy_aversion(n, arcs),
    };
    built.map_err(|e| Error::parse(header_no, format!("invalid hedonic body: {e}")))
}

/// Reads a partition file: one coalition per line, space-separated 1-based
/// agents; every agent of the `n`-agent instance must appear exactly once.
pub fn parse_partition(text: &str, n: usize) -> Result<Partition> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; n];
    for (no, line) in data_lines(text) {
        let mut block = Vec::new();
        for tok in line.split_whitespace() {
            let agent = parse_index(tok, n, "agent", no)?;
            if seen[agent] {
                return Err(Error::parse(no, format!("agent {} appears twice", agent + 1)));
            }
            seen[agent] = true;
            block.push(agent);
        }
        if block.is_empty() {
            return Err(Error::parse(no, "coalitions must be nonempty"));
        }
        blocks.push(block);
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(Error::contract(format!(
            "agent {} is missing from the partition",
            missing + 1
        )));
    }
    Partition::new(n, &blocks)
}

/// Reads a graph file: header `graph n m` then `m` edge lines `i j`.
pub fn parse_graph(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = data_lines(text);
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "file has no header line"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let ["graph", n, m] = fields[..] else {
        return Err(Error::parse(header_no, "graph header must be `graph n m`"));
    };
    let n = parse_count(n, "vertex count", header_no)?;
    let m = parse_count(m, "edge count", header_no)?;
    let mut edges = Vec::with_capacity(m);
    for (no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [i, j] = toks[..] else {
            return Err(Error::parse(no, "edge lines need exactly `i j`"));
        };
        edges.push((parse_index(i, n, "vertex", no)?, parse_index(j, n, "vertex", no)?));
    }
    if edges.len() != m {
        return Err(Error::contract(format!(
            "header announces {m} edges but the file holds {}",
            edges.len()
        )));
    }
    Ok((n, edges))
}

/// Writes a profile in the format [`parse_profile`] reads.
pub fn render_profile(profile: &PreferenceProfile) -> String {
    let m = profile.num_alternatives();
    let n = profile.num_voters();
    let mut out = String::new();
    match profile.kind() {
        ProfileKind::Linear => {
            out.push_str(&format!("linear {m} {n}\n"));
            for voter in 0..n {
                let row: Vec<String> = profile
                    .ranking(voter)
                    .expect("voter index is in range")
                    .iter()
                    .map(|&a| (a + 1).to_string())
                    .collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        ProfileKind::Approval => {
            out.push_str(&format!("approval {m} {n}\n"));
            for voter in 0..n {
                let set = profile.approval_set(voter).expect("voter index is in range");
                let row: Vec<String> = set.iter().map(|&a| (a + 1).to_string()).collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
    }
    out
}

/// Writes a hedonic game in the format [`parse_hedonic`] reads.
pub fn render_hedonic(game: &HedonicInstance) -> String {
    let n = game.agent_count();
    let mut out = String::new();
    match game.model() {
        HedonicModel::Additive => {
            out.push_str(&format!("hedonic additive {n}\n"));
            for (i, j, u) in game.utility_arcs() {
                out.push_str(&format!("{} {} {u}\n", i + 1, j + 1));
            }
        }
        model => {
            let tag = if model == HedonicModel::FriendAppreciation { "fa" } else { "ea" };
            out.push_str(&format!("hedonic fe {tag} {n}\n"));
            for (i, j) in game.friendship_arcs() {
                out.push_str(&format!("{} {}\n", i + 1, j + 1));
            }
        }
    }
    out
}

/// Writes a partition in the format [`parse_partition`] reads.
pub fn render_partition(partition: &Partition) -> String {
    let mut out = String::new();
    for coalition in partition.coalitions() {
        let row: Vec<String> = coalition.iter().map(|&a| (a + 1).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_profiles_round_trip() {
        let text = "# fixture\nlinear 4 3\n1 2 3 4\n4 3 2 1\n2 1 4 3\n";
        let profile = parse_profile(text).unwrap();
        assert_eq!(profile.num_alternatives(), 4);
        assert_eq!(profile.ranking(1).unwrap(), &[3, 2, 1, 0]);
        assert_eq!(parse_profile(&render_profile(&profile)).unwrap().ranking(2).unwrap(), &[1, 0, 3, 2]);
    }

    #[test]
    fn approval_profiles_allow_empty_ballots() {
        let text = "approval 3 3\n1 3\n\n2\n";
        let profile = parse_profile(text).unwrap();
        assert!(profile.approval_set(1).unwrap().is_empty());
        assert_eq!(profile.approval_set(2).unwrap().len(), 1);
        let rendered = render_profile(&profile);
        let again = parse_profile(&rendered).unwrap();
        assert!(again.approval_set(1).unwrap().is_empty());
        assert_eq!(again.approval_set(0).unwrap().len(), 2);
    }

    #[test]
    fn hedonic_files_cover_both_families() {
        let additive = parse_hedonic("hedonic additive 3\n1 2 4\n2 1 -1\n").unwrap();
        assert_eq!(additive.utility(0, 1), 4);
        assert_eq!(additive.utility(1, 0), -1);
        let fe = parse_hedonic("hedonic fe ea 3\n1 2\n2 1\n3 1\n").unwrap();
        assert_eq!(fe.model(), HedonicModel::EnemyAversion);
        assert!(fe.is_friend(2, 0));
        let back = parse_hedonic(&render_hedonic(&fe)).unwrap();
        assert!(back.is_friend(2, 0) && !back.is_friend(0, 2));
    }

    #[test]
    fn partitions_must_cover_every_agent_once() {
        let partition = parse_partition("1 2\n3\n", 3).unwrap();
        assert_eq!(partition.coalition_count(), 2);
        assert!(matches!(
            parse_partition("1 2\n2 3\n", 3),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_partition("1 2\n", 3).is_err());
        let rendered = render_partition(&partition);
        assert_eq!(rendered, "1 2\n3\n");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "linear 3 2\n1 2 3\n1 2 5\n";
        match parse_profile(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!(matches!(parse_instance("ballots 3 2\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn graph_files_check_their_edge_count() {
        let (n, edges) = parse_graph("graph 3 3\n1 2\n2 3\n1 3\n").unwrap();
        assert_eq!((n, edges.len()), (3, 3));
        assert!(parse_graph("graph 3 2\n1 2\n").is_err());
    }
}
