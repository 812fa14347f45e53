use std::collections::BTreeSet;

use serde::Serialize;

use super::presentation::{meet, s_variety, VarietyPresentation};
use crate::error::{Error, Result};
use crate::partitions::{lambda_up_to, minimal_elements, Partition};
use crate::rewrite::{Congruence, IdentitySystem};

/// Whether `p` identifies at least two words of `W_λ`.
pub fn reduces(p: &VarietyPresentation, lambda: &Partition) -> Result<bool> {
    p.congruence().reduces(lambda)
}

/// Whether `p` identifies all words of `W_λ`.
pub fn collapses(p: &VarietyPresentation, lambda: &Partition) -> Result<bool> {
    p.congruence().collapses(lambda)
}

fn check_bound(bound: u32) -> Result<()> {
    if bound < 2 {
        return Err(Error::BoundTooSmall(bound));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransversalVerdict {
    pub partition: Partition,
    pub reduces: bool,
    pub collapses: bool,
}

/// Reduce/collapse verdicts for every transversal up to a length bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyReport {
    pub bound: u32,
    pub verdicts: Vec<TransversalVerdict>,
    pub greedy_up_to_bound: bool,
}

impl GreedyReport {
    /// Transversals that are reduced but not collapsed.
    pub fn witnesses(&self) -> impl Iterator<Item = &Partition> {
        self.verdicts.iter().filter(|v| v.reduces && !v.collapses).map(|v| &v.partition)
    }
}

/// Checks greediness on every `W_λ` with `n(λ) <= bound`. The verdict says
/// nothing about longer transversals.
pub fn greedy_report(p: &VarietyPresentation, bound: u32) -> Result<GreedyReport> {
    check_bound(bound)?;
    let mut congruence = p.congruence();
    let mut verdicts = Vec::new();
    for partition in lambda_up_to(bound) {
        let count = congruence.class_count(&partition)?;
        let reduces = congruence.reduces(&partition)?;
        verdicts.push(TransversalVerdict { partition, reduces, collapses: count == 1 });
    }
    let greedy_up_to_bound = verdicts.iter().all(|v| !v.reduces || v.collapses);
    Ok(GreedyReport { bound, verdicts, greedy_up_to_bound })
}

/// Partitions `λ` with `V ⊆ S_λ` as far as a length bound can tell.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GammaSet {
    /// `W_{λ^i}` collapses for every `i <= s(λ)`, all within the bound.
    pub certified: BTreeSet<Partition>,
    /// Every in-bound `W_{λ^i}` collapses, but `n(λ) + s(λ)` exceeds the bound.
    pub indeterminate: BTreeSet<Partition>,
}

fn gamma_with(congruence: &mut Congruence, bound: u32) -> Result<GammaSet> {
    let mut gamma = GammaSet::default();
    for lambda in lambda_up_to(bound) {
        let (total, s) = (lambda.total(), lambda.s()?);
        let reachable = s.min(bound - total);
        let mut holds = true;
        for i in 0..=reachable {
            if !congruence.collapses(&lambda.extend(i))? {
                holds = false;
                break;
            }
        }
        if holds {
            if total + s <= bound {
                gamma.certified.insert(lambda);
            } else {
                gamma.indeterminate.insert(lambda);
            }
        }
    }
    Ok(gamma)
}

pub fn gamma_set(p: &VarietyPresentation, bound: u32) -> Result<GammaSet> {
    check_bound(bound)?;
    gamma_with(&mut p.congruence(), bound)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionResult {
    pub bound: u32,
    pub gamma: BTreeSet<Partition>,
    /// Minimal elements of `gamma` under `⪯`.
    pub gamma_prime: BTreeSet<Partition>,
    pub indeterminate: BTreeSet<Partition>,
    /// The meet of `S_λ` over `gamma_prime` has the same classes as the input
    /// on every transversal whose certification fits in the bound.
    pub reconstruction_ok: bool,
}

impl DecompositionResult {
    /// The meet of `S_λ` over `gamma_prime`; the empty presentation when `gamma_prime` is empty.
    pub fn reconstruction(&self) -> Result<VarietyPresentation> {
        if self.gamma_prime.is_empty() {
            return Ok(VarietyPresentation::all_semigroups());
        }
        let parts = self.gamma_prime.iter().map(s_variety).collect::<Result<Vec<_>>>()?;
        meet(&parts)
    }
}

/// Writes `p` as a meet of varieties `S_λ` over the minimal certified `λ`,
/// then checks the result against `p` within the bound.
pub fn decompose(p: &VarietyPresentation, bound: u32) -> Result<DecompositionResult> {
    check_bound(bound)?;
    let mut original = p.congruence();
    let gamma = gamma_with(&mut original, bound)?;
    let gamma_prime = minimal_elements(&gamma.certified)?;
    let mut result = DecompositionResult {
        bound,
        gamma: gamma.certified,
        gamma_prime,
        indeterminate: gamma.indeterminate,
        reconstruction_ok: false,
    };
    let mut rebuilt = result.reconstruction()?.congruence();
    let mut same = true;
    for lambda in lambda_up_to(bound) {
        if lambda.total() + lambda.s()? > bound {
            continue;
        }
        if original.classes(&lambda)? != rebuilt.classes(&lambda)? {
            same = false;
            break;
        }
    }
    result.reconstruction_ok = same;
    Ok(result)
}

/// `p ⊆ q`: every defining identity of `q` follows from `p`.
pub fn subset_up_to(p: &VarietyPresentation, q: &VarietyPresentation, bound: u32) -> Result<bool> {
    check_bound(bound)?;
    contains_identities(p, q.system(), bound)
}

fn contains_identities(p: &VarietyPresentation, system: &IdentitySystem, bound: u32) -> Result<bool> {
    if let Some(long) = system.iter().find(|i| i.len() > bound as usize) {
        return Err(Error::BoundExceeded { identity: long.to_string(), length: long.len(), bound });
    }
    let mut congruence = p.congruence();
    for identity in system {
        if !congruence.equivalent(identity.lhs(), identity.rhs())? {
            return Ok(false);
        }
    }
    Ok(true)
}
