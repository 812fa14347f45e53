use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_lambda, lambda_up_to, Partition};
use crate::rewrite::{collapse_system, Congruence, IdentitySystem};

/// A finite balanced identity system standing for the variety it defines.
///
/// `declared_collapses` records which transversals the construction is
/// meant to collapse. [`VarietyPresentation::new`] checks them; the
/// builders in this module produce them by construction, and
/// [`VarietyPresentation::validate`] re-checks on demand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VarietyPresentation {
    #[serde(skip)]
    system: IdentitySystem,
    label: String,
    declared_collapses: BTreeSet<Partition>,
}

impl VarietyPresentation {
    pub fn new(system: IdentitySystem, label: impl Into<String>, declared_collapses: BTreeSet<Partition>) -> Result<Self> {
        let p = VarietyPresentation::unchecked(system, label, declared_collapses);
        p.validate()?;
        Ok(p)
    }

    pub(crate) fn unchecked(system: IdentitySystem, label: impl Into<String>, declared_collapses: BTreeSet<Partition>) -> Self {
        VarietyPresentation { system, label: label.into(), declared_collapses }
    }

    /// The empty presentation, i.e. the variety of all semigroups.
    pub fn all_semigroups() -> Self {
        VarietyPresentation::unchecked(IdentitySystem::new(), "SEM", BTreeSet::new())
    }

    pub fn system(&self) -> &IdentitySystem {
        &self.system
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn declared_collapses(&self) -> &BTreeSet<Partition> {
        &self.declared_collapses
    }

    pub fn congruence(&self) -> Congruence {
        Congruence::new(&self.system)
    }

    /// Checks every declared collapse against the identities.
    pub fn validate(&self) -> Result<()> {
        let mut congruence = self.congruence();
        for lambda in &self.declared_collapses {
            if !congruence.collapses(lambda)? {
                return Err(Error::CollapseNotHeld(lambda.clone()));
            }
        }
        Ok(())
    }

    /// Identity-system text preceded by a `#!` header line with the longest
    /// identity length, the declared collapses and the label.
    pub fn to_text(&self) -> String {
        let collapses = if self.declared_collapses.is_empty() {
            "-".to_string()
        } else {
            self.declared_collapses.iter().map(Partition::to_list).collect::<Vec<_>>().join(";")
        };
        format!(
            "#! bound={} collapses={} label={}\n{}",
            self.system.max_length(),
            collapses,
            self.label,
            self.system.to_text()
        )
    }

    /// Reads [`VarietyPresentation::to_text`] output; a file without the
    /// header is read as a bare identity system with an empty label. The
    /// declared collapses are validated.
    pub fn parse(text: &str) -> Result<Self> {
        let system = IdentitySystem::parse(text)?;
        let Some(header) = text.lines().next().and_then(|l| l.strip_prefix("#!")) else {
            return VarietyPresentation::new(system, "", BTreeSet::new());
        };
        let header = header.trim();
        let bad = |reason: &str| Error::parse(header, reason);
        let rest = header.strip_prefix("bound=").ok_or_else(|| bad("expected bound="))?;
        let (bound, rest) = rest.split_once(' ').ok_or_else(|| bad("expected collapses="))?;
        let bound: usize = bound.parse().map_err(|_| bad("bound is not a number"))?;
        let rest = rest.strip_prefix("collapses=").ok_or_else(|| bad("expected collapses="))?;
        let (collapses, rest) = rest.split_once(' ').unwrap_or((rest, ""));
        let label = rest.strip_prefix("label=").unwrap_or("").to_string();
        let declared = if collapses == "-" {
            BTreeSet::new()
        } else {
            collapses.split(';').map(Partition::from_str).collect::<Result<BTreeSet<_>>>()?
        };
        if let Some(long) = system.iter().find(|i| i.len() > bound) {
            return Err(Error::BoundExceeded { identity: long.to_string(), length: long.len(), bound: bound as u32 });
        }
        VarietyPresentation::new(system, label, declared)
    }
}

impl fmt::Display for VarietyPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} identities)", self.label, self.system.len())
    }
}

fn collapsing(label: String, targets: impl IntoIterator<Item = Partition>) -> Result<VarietyPresentation> {
    let mut system = IdentitySystem::new();
    let mut declared = BTreeSet::new();
    for lambda in targets {
        system.extend_from(&collapse_system(&lambda)?);
        declared.insert(lambda);
    }
    Ok(VarietyPresentation::unchecked(system, label, declared))
}

/// `W_λ`: all identities between words of the transversal `W_λ`.
pub fn w_variety(lambda: &Partition) -> Result<VarietyPresentation> {
    collapsing(format!("W{lambda}"), [lambda.clone()])
}

/// `S_λ`, the meet of `W_{λ^i}` for `i = 0..=s(λ)`.
pub fn s_variety(lambda: &Partition) -> Result<VarietyPresentation> {
    let s = lambda.s()?;
    collapsing(format!("S{lambda}"), (0..=s).map(|i| lambda.extend(i)))
}

/// `S_λ^k`, the meet of `W_{λ^i}` for `i = 0..=k`, with `k <= s(λ)`.
pub fn s_variety_truncated(lambda: &Partition, k: u32) -> Result<VarietyPresentation> {
    let s = lambda.s()?;
    if k > s {
        return Err(Error::TruncationOutOfRange { partition: lambda.clone(), k, s });
    }
    collapsing(format!("S{lambda}^{k}"), (0..=k).map(|i| lambda.extend(i)))
}

/// The families `X_n`, `X_{n,m}` and `X_{n,m,λ}`, cut off at a length bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LegacyFamily {
    /// Every balanced identity of length at least `n`.
    Xn { n: u32 },
    /// `X_{n+1}` together with the length-`n` identities in at most `m` letters.
    Xnm { n: u32, m: u32 },
    /// `X_{n,m-1}` together with `W_λ`, where `λ ∈ Λ_{n,m}`.
    Xnml { lambda: Partition },
}

impl fmt::Display for LegacyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LegacyFamily::Xn { n } => write!(f, "Xn:{n}"),
            LegacyFamily::Xnm { n, m } => write!(f, "Xnm:{n}:{m}"),
            LegacyFamily::Xnml { lambda } => write!(f, "Xnml:{}", lambda.to_list()),
        }
    }
}

impl FromStr for LegacyFamily {
    type Err = Error;

    /// `Xn:3`, `Xnm:3:2` or `Xnml:3,1`.
    fn from_str(text: &str) -> Result<Self> {
        let number = |s: &str| s.trim().parse::<u32>().map_err(|_| Error::parse(text, "expected a number"));
        let mut fields = text.split(':');
        match (fields.next(), fields.next(), fields.next(), fields.next()) {
            (Some("Xn"), Some(n), None, None) => Ok(LegacyFamily::Xn { n: number(n)? }),
            (Some("Xnm"), Some(n), Some(m), None) => Ok(LegacyFamily::Xnm { n: number(n)?, m: number(m)? }),
            (Some("Xnml"), Some(lambda), None, None) => Ok(LegacyFamily::Xnml { lambda: lambda.parse()? }),
            _ => Err(Error::parse(text, "expected Xn:N, Xnm:N:M or Xnml:PARTITION")),
        }
    }
}

/// Collapses of `X_n` with lengths up to `bound`.
fn xn_targets(n: u32, bound: u32) -> Vec<Partition> {
    lambda_up_to(bound).into_iter().filter(|l| l.total() >= n).collect()
}

fn xnm_targets(n: u32, m: u32, bound: u32) -> Vec<Partition> {
    let mut targets = xn_targets(n + 1, bound);
    for r in 2..=m.min(n) {
        targets.extend(enumerate_lambda(n, r).expect("2 <= r <= n"));
    }
    targets
}

/// Bounded presentation of a legacy family: identities longer than `bound`
/// are left out, and the label records the bound.
pub fn legacy_variety(family: &LegacyFamily, bound: u32) -> Result<VarietyPresentation> {
    let bad = |reason: String| Err(Error::LegacyParameters(reason));
    let label = format!("{family} (up to length {bound})");
    match family {
        &LegacyFamily::Xn { n } => {
            if n < 2 || n > bound {
                return bad(format!("need 2 <= n <= bound, got n = {n}, bound = {bound}"));
            }
            collapsing(label, xn_targets(n, bound))
        }
        &LegacyFamily::Xnm { n, m } => {
            if n < 2 || n > bound || m < 1 {
                return bad(format!("need 2 <= n <= bound and m >= 1, got n = {n}, m = {m}, bound = {bound}"));
            }
            collapsing(label, xnm_targets(n, m, bound))
        }
        LegacyFamily::Xnml { lambda } => {
            lambda.ensure_lambda()?;
            let (n, m) = (lambda.total(), lambda.parts());
            if n > bound {
                return bad(format!("need n <= bound, got n = {n}, bound = {bound}"));
            }
            let mut targets = xnm_targets(n, m - 1, bound);
            targets.push(lambda.clone());
            collapsing(label, targets)
        }
    }
}

/// Meet of varieties: the union of their presentations.
pub fn meet(presentations: &[VarietyPresentation]) -> Result<VarietyPresentation> {
    let (first, rest) = presentations.split_first().ok_or(Error::EmptyMeet)?;
    let mut merged = first.clone();
    for p in rest {
        merged.system.extend_from(&p.system);
        merged.declared_collapses.extend(p.declared_collapses.iter().cloned());
        merged.label = format!("{} ∧ {}", merged.label, p.label);
    }
    Ok(merged)
}
