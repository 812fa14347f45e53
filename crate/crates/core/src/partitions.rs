//! Integer partitions, the statistics `q`, `r`, `δ`, `s`, and the two orders on Λ.
//!
//! Λ is the set of partitions with at least two components. A [`Partition`]
//! with a single component is still representable (it is the partition of a
//! word like `x1 x1 x1`), but every operation that is only defined on Λ
//! rejects it with [`Error::NotInLambda`].
//!
//! The refinement-extension order `λ ⪯ μ` holds when `μ` is obtained from
//! `λ` by appending `k` unit components and then uniting components.
//! [`Partition::preceq`] decides it by packing the components of `λ^k` into
//! bins whose capacities are the components of `μ`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A non-increasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    components: Vec<u32>,
}

/// The numbers `q`, `r`, `δ` and `s` attached to a partition in Λ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartitionStats {
    /// Number of components equal to 1.
    pub q: u32,
    /// Sum of the components greater than 1.
    pub r: u32,
    /// 0 for `(2,1)`, 1 otherwise.
    pub delta: u32,
    /// `max(r - q - δ, 0)`.
    pub s: u32,
}

impl Partition {
    /// Builds a partition from any sequence of positive integers, sorting it
    /// into non-increasing order.
    pub fn new(components: impl Into<Vec<u32>>) -> Result<Self> {
        let mut components = components.into();
        if components.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if components.contains(&0) {
            return Err(Error::ZeroComponent);
        }
        components.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { components })
    }

    /// Caller guarantees a non-empty, positive, non-increasing sequence.
    pub(crate) fn from_sorted(components: Vec<u32>) -> Self {
        debug_assert!(!components.is_empty());
        debug_assert!(components.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(components.iter().all(|&c| c > 0));
        Partition { components }
    }

    pub fn components(&self) -> &[u32] {
        &self.components
    }

    /// `n(λ)`, the number being partitioned.
    pub fn total(&self) -> u32 {
        self.components.iter().sum()
    }

    /// `m(λ)`, the number of components.
    pub fn parts(&self) -> u32 {
        self.components.len() as u32
    }

    pub fn is_lambda(&self) -> bool {
        self.components.len() >= 2
    }

    pub fn ensure_lambda(&self) -> Result<()> {
        if self.is_lambda() {
            Ok(())
        } else {
            Err(Error::NotInLambda(self.clone()))
        }
    }

    pub fn stats(&self) -> Result<PartitionStats> {
        self.ensure_lambda()?;
        let q = self.components.iter().filter(|&&c| c == 1).count() as u32;
        let r = self.components.iter().filter(|&&c| c > 1).sum::<u32>();
        let delta = if self.components == [2, 1] { 0 } else { 1 };
        let s = r.saturating_sub(q + delta);
        Ok(PartitionStats { q, r, delta, s })
    }

    /// Shorthand for `stats()?.s`.
    pub fn s(&self) -> Result<u32> {
        Ok(self.stats()?.s)
    }

    /// `U_{i,j}(λ)`: unites the components at 1-based positions `i < j`.
    pub fn union_components(&self, i: usize, j: usize) -> Result<Partition> {
        let m = self.components.len();
        if m < 3 || i == 0 || i >= j || j > m {
            return Err(Error::InvalidUnion { partition: self.clone(), i, j });
        }
        let mut merged: Vec<u32> = self
            .components
            .iter()
            .enumerate()
            .filter(|&(idx, _)| idx != i - 1 && idx != j - 1)
            .map(|(_, &c)| c)
            .collect();
        merged.push(self.components[i - 1] + self.components[j - 1]);
        merged.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { components: merged })
    }

    /// `λ^k`: appends `k` components equal to 1.
    pub fn extend(&self, k: u32) -> Partition {
        let mut components = self.components.clone();
        components.extend(std::iter::repeat(1).take(k as usize));
        Partition { components }
    }

    /// Decides `self ⪯ other`.
    pub fn preceq(&self, other: &Partition) -> Result<bool> {
        self.ensure_lambda()?;
        other.ensure_lambda()?;
        let (lo, hi) = (self.total(), other.total());
        if hi < lo {
            return Ok(false);
        }
        let items = self.extend(hi - lo).components;
        if items.len() < other.components.len() {
            return Ok(false);
        }
        let mut bins = other.components.clone();
        Ok(pack(&items, &mut bins))
    }

    /// Decides `self ⊴ other`: no more components, and componentwise no larger.
    pub fn unlhd(&self, other: &Partition) -> Result<bool> {
        self.ensure_lambda()?;
        other.ensure_lambda()?;
        Ok(self.components.len() <= other.components.len()
            && self.components.iter().zip(&other.components).all(|(a, b)| a <= b))
    }

    /// Comma-separated form accepted by [`Partition::from_str`], e.g. `2,1,1`.
    pub fn to_list(&self) -> String {
        let parts: Vec<String> = self.components.iter().map(u32::to_string).collect();
        parts.join(",")
    }
}

/// Places every item (sorted non-increasing) into a bin with enough room,
/// succeeding when all bins end exactly full.
fn pack(items: &[u32], bins: &mut [u32]) -> bool {
    let Some((&item, rest)) = items.split_first() else {
        return bins.iter().all(|&b| b == 0);
    };
    let mut tried: Vec<u32> = Vec::with_capacity(bins.len());
    for b in 0..bins.len() {
        let room = bins[b];
        // bins with equal remaining room are interchangeable
        if room < item || tried.contains(&room) {
            continue;
        }
        tried.push(room);
        bins[b] -= item;
        let ok = pack(rest, bins);
        bins[b] += item;
        if ok {
            return true;
        }
    }
    false
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_list())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `2,1,1`; whitespace and one pair of surrounding parentheses are tolerated.
    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        if inner.trim().is_empty() {
            return Err(Error::parse(text, "no components"));
        }
        let mut components = Vec::new();
        for piece in inner.split(',') {
            let value: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::parse(text, format!("{:?} is not a positive integer", piece.trim())))?;
            if value == 0 {
                return Err(Error::parse(text, "components must be positive"));
            }
            components.push(value);
        }
        Partition::new(components)
    }
}

/// `Λ_{n,m}` in lexicographically decreasing order.
pub fn enumerate_lambda(n: u32, m: u32) -> Result<Vec<Partition>> {
    if m < 2 || m > n {
        return Err(Error::InvalidShape { n, m });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(m as usize);
    fill(n, m, n, &mut prefix, &mut out);
    Ok(out)
}

fn fill(remaining: u32, slots: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if slots == 0 {
        if remaining == 0 {
            out.push(Partition::from_sorted(prefix.clone()));
        }
        return;
    }
    // each later slot needs at least 1, and all later slots are at most `first`
    let hi = cap.min(remaining - (slots - 1));
    let lo = remaining.div_ceil(slots);
    for first in (lo..=hi).rev() {
        prefix.push(first);
        fill(remaining - first, slots - 1, first, prefix, out);
        prefix.pop();
    }
}

/// Every partition in Λ with total at most `bound`, ordered by total, then
/// number of parts, then lexicographically decreasing.
pub fn lambda_up_to(bound: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 2..=bound {
        for m in 2..=n {
            out.extend(enumerate_lambda(n, m).expect("2 <= m <= n"));
        }
    }
    out
}

/// `{μ ∈ Λ : μ ⪯ λ}`.
pub fn down_set(lambda: &Partition) -> Result<BTreeSet<Partition>> {
    lambda.ensure_lambda()?;
    let mut out = BTreeSet::new();
    for candidate in lambda_up_to(lambda.total()) {
        if candidate.preceq(lambda)? {
            out.insert(candidate);
        }
    }
    Ok(out)
}

/// The members of `set` with no strictly `⪯`-smaller member in `set`.
pub fn minimal_elements<'a, I>(set: I) -> Result<BTreeSet<Partition>>
where
    I: IntoIterator<Item = &'a Partition>,
{
    let members: BTreeSet<&Partition> = set.into_iter().collect();
    for p in &members {
        p.ensure_lambda()?;
    }
    let mut out = BTreeSet::new();
    'outer: for &candidate in &members {
        for &other in &members {
            if other != candidate && other.preceq(candidate)? {
                continue 'outer;
            }
        }
        out.insert(candidate.clone());
    }
    Ok(out)
}
