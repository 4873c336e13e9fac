//! Minimum deletion distance to a structured class.
//!
//! Subsets of voters or alternatives are enumerated in increasing size and
//! lexicographic order within each size, so the returned certificate is a
//! minimum-cardinality deletion set and deterministic.

use super::{recognize_sc, recognize_sp, Axis, AxisTarget, PreferenceProfile};
use crate::error::{Error, Result};

/// What gets deleted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeletionTarget {
    Voters,
    Alternatives,
}

/// Which structure the residual profile must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Structure {
    SinglePeaked,
    SingleCrossing,
}

/// A deletion set together with an axis valid for the residual profile.
///
/// `axis.order` is expressed in the original profile's indices (for
/// alternative deletions it omits the removed alternatives).
#[derive(Debug, Clone)]
pub struct DeletionCertificate {
    pub removed: Vec<usize>,
    pub axis: Axis,
}

pub use Structure::{SingleCrossing, SinglePeaked};

/// Smallest set of at most `budget` voters/alternatives whose removal makes
/// the profile single-peaked/single-crossing, or `None` if no such set
/// exists within the budget.
///
/// A one-element residual profile is always structured, so deletion sets
/// never need to remove everything; sizes are capped accordingly.
pub fn deletion_distance(
    profile: &PreferenceProfile,
    structure: Structure,
    mode: DeletionTarget,
    budget: usize,
) -> Result<Option<DeletionCertificate>> {
    let universe = match mode {
        DeletionTarget::Voters => profile.num_voters(),
        DeletionTarget::Alternatives => profile.num_alternatives(),
    };
    if budget > universe {
        return Err(Error::contract(format!(
            "deletion budget {budget} exceeds the candidate pool (size {universe})"
        )));
    }
    for size in 0..=budget.min(universe.saturating_sub(1)) {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            if let Some(cert) = try_deletion(profile, mode, structure, &subset)? {
                return Ok(Some(cert));
            }
            if !next_combination(&mut subset, universe) {
                break;
            }
        }
    }
    Ok(None)
}

fn try_deletion(
    profile: &PreferenceProfile,
    target: DeletionTarget,
    structure: Structure,
    removed: &[usize],
) -> Result<Option<DeletionCertificate>> {
    let keep: Vec<usize> = match target {
        DeletionTarget::Voters => {
            (0..profile.num_voters()).filter(|v| !removed.contains(v)).collect()
        }
        DeletionTarget::Alternatives => {
            (0..profile.num_alternatives()).filter(|a| !removed.contains(a)).collect()
        }
    };
    let residual = match target {
        DeletionTarget::Voters => profile.restrict_voters(&keep)?,
        DeletionTarget::Alternatives => profile.restrict_alternatives(&keep)?,
    };
    let axis = match structure {
        SinglePeaked => recognize_sp(&residual)?,
        SingleCrossing => recognize_sc(&residual)?,
    };
    Ok(axis.map(|axis| {
        // Map residual indices back into the original profile's numbering.
        let order = match (target, axis.target) {
            (DeletionTarget::Alternatives, AxisTarget::Alternatives) => {
                axis.order.iter().map(|&i| keep[i]).collect()
            }
            (DeletionTarget::Voters, AxisTarget::Voters) => {
                axis.order.iter().map(|&i| keep[i]).collect()
            }
            _ => axis.order,
        };
        DeletionCertificate {
            removed: removed.to_vec(),
            axis: Axis { target: axis.target, order },
        }
    }))
}

/// Advances `subset` to the next combination of its size drawn from
/// `0..universe`, in lexicographic order. Returns false when exhausted.
fn next_combination(subset: &mut [usize], universe: usize) -> bool {
    let k = subset.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < universe - (k - i) {
            subset[i] += 1;
            for j in (i + 1)..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::is_single_peaked_along;

    fn tangle_approval() -> PreferenceProfile {
        PreferenceProfile::approval(
            4,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 2], vec![0, 3]],
        )
        .unwrap()
    }

    #[test]
    fn zero_budget_degenerates_to_recognition() {
        let p = tangle_approval();
        assert!(deletion_distance(&p, SinglePeaked, DeletionTarget::Voters, 0)
            .unwrap()
            .is_none());
        let sp = PreferenceProfile::approval(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let cert = deletion_distance(&sp, SinglePeaked, DeletionTarget::Voters, 0)
            .unwrap()
            .unwrap();
        assert!(cert.removed.is_empty());
    }

    #[test]
    fn two_voters_suffice_on_the_tangle() {
        let p = tangle_approval();
        let cert = deletion_distance(&p, SinglePeaked, DeletionTarget::Voters, 2)
            .unwrap()
            .unwrap();
        assert_eq!(cert.removed.len(), 2);
        // No single deletion works.
        assert!(deletion_distance(&p, SinglePeaked, DeletionTarget::Voters, 1)
            .unwrap()
            .is_none());
        // Dropping the last two voters also works, matching the axis 1<2<3<4.
        let keep = p.restrict_voters(&[0, 1, 2]).unwrap();
        assert!(is_single_peaked_along(&keep, &[0, 1, 2, 3]).unwrap());
        assert!(crate::profiles::is_single_crossing_along(&keep, &[0, 1, 2]).unwrap());
    }

    #[test]
    fn one_alternative_suffices_on_the_tangle() {
        let p = tangle_approval();
        let cert = deletion_distance(&p, SinglePeaked, DeletionTarget::Alternatives, 3)
            .unwrap()
            .unwrap();
        assert_eq!(cert.removed, vec![0]);
        // The certificate axis is stated in original indices.
        assert!(cert.axis.order.iter().all(|&a| a != 0 && a < 4));
        let sc = deletion_distance(&p, SingleCrossing, DeletionTarget::Alternatives, 3)
            .unwrap()
            .unwrap();
        assert_eq!(sc.removed, vec![0]);
    }

    #[test]
    fn budget_capped_by_pool() {
        let p = tangle_approval();
        // Budget may equal the pool size; sizes are capped internally.
        assert!(deletion_distance(&p, SinglePeaked, DeletionTarget::Voters, 5).is_ok());
        assert!(deletion_distance(&p, SinglePeaked, DeletionTarget::Voters, 6).is_err());
    }

    #[test]
    fn combinations_enumerate_in_lex_order() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(
            all,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }
}
