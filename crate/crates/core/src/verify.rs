//! Instance checks of the structural facts about `⪯`, `W_λ` and `S_λ`.
//!
//! Each suite enumerates every case that fits under a length bound and
//! reports one outcome per case. Nothing here is assumed by the library;
//! the suites recompute everything from the primitive operations.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{lambda_up_to, Partition};
use crate::rewrite::{collapse_system, derivable};
use crate::varieties::{collapses, meet, s_variety, s_variety_truncated, subset_up_to, w_variety};
use crate::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// `⪯` is a partial order and `⊴` implies `⪯`.
    OrderAxioms,
    /// Letter-to-letter substitutions move a word's partition up in `⪯`.
    PoorXi,
    /// `s(λ) = 0` makes `W_λ` collapse every `W_{λ^k}`.
    SZeroLemma,
    /// `S_λ^k` with `k < s(λ)` leaves `W_{λ^i}` uncollapsed for `k < i <= s(λ)`.
    PropOptimum,
    /// `S_λ ⊆ W_{λ^k}` for every `k`.
    CorSInW,
    /// `S_λ ⊆ S_μ` exactly when `λ ⪯ μ`.
    CorSInS,
    /// None of the `W_{λ^i}` can be dropped from `S_λ`.
    CorRepresentation,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::OrderAxioms,
        Suite::PoorXi,
        Suite::SZeroLemma,
        Suite::PropOptimum,
        Suite::CorSInW,
        Suite::CorSInS,
        Suite::CorRepresentation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OrderAxioms => "order-axioms",
            Suite::PoorXi => "poor-xi",
            Suite::SZeroLemma => "s-zero-lemma",
            Suite::PropOptimum => "prop-optimum",
            Suite::CorSInW => "cor-s-in-w",
            Suite::CorSInS => "cor-s-in-s",
            Suite::CorRepresentation => "cor-representation",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|s| s.name() == text)
            .ok_or_else(|| Error::parse(text, "unknown suite"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseOutcome {
    pub case: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub bound: u32,
    pub cases: Vec<CaseOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }
}

struct Cases(Vec<CaseOutcome>);

impl Cases {
    fn check(&mut self, case: impl Into<String>, passed: bool) {
        self.0.push(CaseOutcome { case: case.into(), passed });
    }
}

pub fn run_suite(suite: Suite, bound: u32) -> Result<SuiteReport> {
    if bound < 2 {
        return Err(Error::BoundTooSmall(bound));
    }
    let mut cases = Cases(Vec::new());
    match suite {
        Suite::OrderAxioms => order_axioms(bound, &mut cases)?,
        Suite::PoorXi => poor_xi(bound, 1000, 0x5eed, &mut cases)?,
        Suite::SZeroLemma => s_zero(bound, &mut cases)?,
        Suite::PropOptimum => optimum(bound, &mut cases)?,
        Suite::CorSInW => s_in_w(bound, &mut cases)?,
        Suite::CorSInS => s_in_s(bound, &mut cases)?,
        Suite::CorRepresentation => representation(bound, &mut cases)?,
    }
    Ok(SuiteReport { suite: suite.name(), bound, cases: cases.0 })
}

/// Partitions whose whole `S_λ` presentation fits in the bound.
fn fully_bounded(bound: u32) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for lambda in lambda_up_to(bound) {
        if lambda.total() + lambda.s()? <= bound {
            out.push(lambda);
        }
    }
    Ok(out)
}

fn order_axioms(bound: u32, cases: &mut Cases) -> Result<()> {
    let all = lambda_up_to(bound);
    let n = all.len();
    let mut le = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            le[i][j] = all[i].preceq(&all[j])?;
        }
    }
    cases.check(format!("reflexive on {n} partitions"), (0..n).all(|i| le[i][i]));
    let antisymmetric = (0..n).all(|i| (0..n).all(|j| i == j || !(le[i][j] && le[j][i])));
    cases.check(format!("antisymmetric on {n} partitions"), antisymmetric);
    let transitive = (0..n).all(|i| (0..n).all(|j| !le[i][j] || (0..n).all(|k| !le[j][k] || le[i][k])));
    cases.check(format!("transitive on {n} partitions"), transitive);
    let mut implied = true;
    for i in 0..n {
        for j in 0..n {
            if all[i].unlhd(&all[j])? && !le[i][j] {
                implied = false;
            }
        }
    }
    cases.check(format!("unlhd implies preceq on {n} partitions"), implied);
    Ok(())
}

/// Random words of length at most `bound` under random letter-to-letter maps.
fn poor_xi(bound: u32, samples: usize, seed: u64, cases: &mut Cases) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut failures = Vec::new();
    for _ in 0..samples {
        let len = rng.gen_range(1..=bound as usize);
        let alphabet = rng.gen_range(1..=len as u32);
        let letters: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=alphabet)).collect();
        let image: Vec<u32> = (0..alphabet).map(|_| rng.gen_range(1..=alphabet)).collect();
        let word = Word::new(letters)?;
        let mapped = word.map_letters(|l| image[l as usize - 1])?;
        let (before, after) = (word.partition(), mapped.partition());
        if before.is_lambda() && after.is_lambda() {
            checked += 1;
            if !before.preceq(&after)? {
                failures.push(format!("{word} -> {mapped}"));
            }
        }
    }
    cases.check(
        format!("{samples} samples, {checked} with both partitions in Λ, failures: {failures:?}"),
        failures.is_empty(),
    );
    Ok(())
}

fn s_zero(bound: u32, cases: &mut Cases) -> Result<()> {
    for lambda in lambda_up_to(bound - 1) {
        if lambda.s()? != 0 {
            continue;
        }
        let w = w_variety(&lambda)?;
        let mut congruence = w.congruence();
        for k in 1..=bound - lambda.total() {
            let target = lambda.extend(k);
            cases.check(format!("W{lambda} collapses W{target}"), congruence.collapses(&target)?);
        }
    }
    Ok(())
}

fn optimum(bound: u32, cases: &mut Cases) -> Result<()> {
    if bound >= 4 {
        let u = Word::parse("x1 x1 x2 x3")?;
        let v = Word::parse("x1 x1 x3 x2")?;
        let system = collapse_system(&Partition::new(vec![2, 1])?)?;
        cases.check("W(2,1) does not give x1x1x2x3 = x1x1x3x2", derivable(&u, &v, &system)?.is_none());
    }
    for lambda in fully_bounded(bound)? {
        let s = lambda.s()?;
        for k in 0..s {
            let mut congruence = s_variety_truncated(&lambda, k)?.congruence();
            for i in k + 1..=s {
                let target = lambda.extend(i);
                cases.check(
                    format!("S{lambda}^{k} does not collapse W{target}"),
                    !congruence.collapses(&target)?,
                );
            }
        }
    }
    Ok(())
}

fn s_in_w(bound: u32, cases: &mut Cases) -> Result<()> {
    for lambda in fully_bounded(bound)? {
        let s = s_variety(&lambda)?;
        for k in 0..=bound - lambda.total() {
            let target = lambda.extend(k);
            cases.check(format!("S{lambda} ⊆ W{target}"), subset_up_to(&s, &w_variety(&target)?, bound)?);
        }
    }
    Ok(())
}

fn s_in_s(bound: u32, cases: &mut Cases) -> Result<()> {
    let all = fully_bounded(bound)?;
    let varieties = all.iter().map(s_variety).collect::<Result<Vec<_>>>()?;
    let mut agree = 0;
    let mut disagreements = Vec::new();
    for (lambda, s_lambda) in all.iter().zip(&varieties) {
        for (mu, s_mu) in all.iter().zip(&varieties) {
            let contained = subset_up_to(s_lambda, s_mu, bound)?;
            if contained == lambda.preceq(mu)? {
                agree += 1;
            } else {
                disagreements.push(format!("{lambda} vs {mu}"));
            }
        }
    }
    cases.check(
        format!("containment matches ⪯ on {agree} pairs, disagreements: {disagreements:?}"),
        disagreements.is_empty(),
    );
    Ok(())
}

fn representation(bound: u32, cases: &mut Cases) -> Result<()> {
    for lambda in fully_bounded(bound)? {
        let s = lambda.s()?;
        if s == 0 {
            continue;
        }
        for dropped in 0..=s {
            let kept = (0..=s)
                .filter(|&i| i != dropped)
                .map(|i| w_variety(&lambda.extend(i)))
                .collect::<Result<Vec<_>>>()?;
            let target = lambda.extend(dropped);
            cases.check(
                format!("S{lambda} without W{target} does not collapse it"),
                !collapses(&meet(&kept)?, &target)?,
            );
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("no-such-suite".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            let report = run_suite(suite, 5).unwrap();
            assert!(report.passed(), "{suite}: {:?}", report.cases);
            assert!(!report.cases.is_empty(), "{suite} checked nothing");
        }
    }
}
