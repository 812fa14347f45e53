//! Slow, obviously-correct reference implementations used to cross-check
//! the library. None of them shares code with the library beyond the value
//! types themselves.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use ocvar::{Identity, IdentitySystem, Partition, Word};

pub fn p(components: &[u32]) -> Partition {
    Partition::new(components.to_vec()).unwrap()
}

pub fn w(text: &str) -> Word {
    Word::parse(text).unwrap()
}

pub fn system(lines: &[&str]) -> IdentitySystem {
    lines.iter().map(|l| l.parse::<Identity>().unwrap()).collect()
}

/// Every partition of `n` (including one-part ones), as non-increasing vectors.
pub fn integer_partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Members of `Λ` (at least two parts) with total in `2..=bound`.
pub fn lambda_partitions(bound: u32) -> Vec<Partition> {
    (2..=bound)
        .flat_map(integer_partitions)
        .filter(|c| c.len() >= 2)
        .map(|c| Partition::new(c).unwrap())
        .collect()
}

/// All `U_S(c)` for finite sets `S` of unions, kept at two parts or more.
fn all_unions(components: Vec<u32>) -> BTreeSet<Vec<u32>> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![components];
    while let Some(mut c) = stack.pop() {
        c.sort_unstable_by(|a, b| b.cmp(a));
        if !seen.insert(c.clone()) || c.len() < 3 {
            continue;
        }
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                let mut next: Vec<u32> = c.iter().enumerate().filter(|&(t, _)| t != i && t != j).map(|(_, &x)| x).collect();
                next.push(c[i] + c[j]);
                stack.push(next);
            }
        }
    }
    seen
}

/// `λ ⪯ μ` straight from the definition: `μ = U_S(λ^k)` for some `S`, `k`.
pub fn preceq(lambda: &Partition, mu: &Partition) -> bool {
    if mu.total() < lambda.total() {
        return false;
    }
    let mut start = lambda.components().to_vec();
    start.extend(std::iter::repeat(1).take((mu.total() - lambda.total()) as usize));
    all_unions(start).contains(mu.components())
}

pub fn down_set(lambda: &Partition) -> BTreeSet<Partition> {
    lambda_partitions(lambda.total()).into_iter().filter(|mu| preceq(mu, lambda)).collect()
}

/// `λ ⊴ ν`: `ν` has at least as many components, each at least as large.
pub fn unlhd(lambda: &Partition, nu: &Partition) -> bool {
    let (a, b) = (lambda.components(), nu.components());
    a.len() <= b.len() && (0..a.len()).all(|i| a[i] <= b[i])
}

/// All substitutions (as letter → image maps) with `ζ(pattern) = text`:
/// try every length for the next block, keep the cut if it agrees with
/// what earlier blocks bound.
pub fn match_full(pattern: &[u32], text: &[u32]) -> Vec<BTreeMap<u32, Vec<u32>>> {
    fn go(pattern: &[u32], text: &[u32], map: &mut BTreeMap<u32, Vec<u32>>, out: &mut Vec<BTreeMap<u32, Vec<u32>>>) {
        let Some((&letter, rest)) = pattern.split_first() else {
            if text.is_empty() {
                out.push(map.clone());
            }
            return;
        };
        for len in 1..=text.len().saturating_sub(rest.len()) {
            let block = &text[..len];
            match map.get(&letter) {
                Some(bound) if bound != block => continue,
                Some(_) => go(rest, &text[len..], map, out),
                None => {
                    map.insert(letter, block.to_vec());
                    go(rest, &text[len..], map, out);
                    map.remove(&letter);
                }
            }
        }
    }
    let mut out = Vec::new();
    go(pattern, text, &mut BTreeMap::new(), &mut out);
    out
}

fn apply(map: &BTreeMap<u32, Vec<u32>>, word: &[u32]) -> Vec<u32> {
    word.iter().flat_map(|l| map.get(l).cloned().unwrap_or_else(|| vec![*l])).collect()
}

/// Distinct targets of one rewriting step, excluding the word itself.
pub fn one_step(word: &[u32], sys: &IdentitySystem) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for start in 0..word.len() {
        for end in start + 1..=word.len() {
            let factor = &word[start..end];
            for identity in sys.iter() {
                for (s, t) in [(identity.lhs(), identity.rhs()), (identity.rhs(), identity.lhs())] {
                    for map in match_full(s.letters(), factor) {
                        let mut target = word[..start].to_vec();
                        target.extend(apply(&map, t.letters()));
                        target.extend_from_slice(&word[end..]);
                        if target != word {
                            out.insert(target);
                        }
                    }
                }
            }
        }
    }
    out
}

/// All distinct arrangements of a multiset: each distinct letter in turn, then
/// every arrangement of what is left.
pub fn arrangements(letters: &[u32]) -> BTreeSet<Vec<u32>> {
    if letters.is_empty() {
        return BTreeSet::from([vec![]]);
    }
    let mut out = BTreeSet::new();
    let firsts: BTreeSet<u32> = letters.iter().copied().collect();
    for first in firsts {
        let mut rest = letters.to_vec();
        rest.remove(rest.iter().position(|&l| l == first).unwrap());
        for mut tail in arrangements(&rest) {
            tail.insert(0, first);
            out.insert(tail);
        }
    }
    out
}

pub fn canonical(lambda: &Partition) -> Vec<u32> {
    lambda
        .components()
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat(i as u32 + 1).take(c as usize))
        .collect()
}

/// Classes of `W_λ` under the system, by breadth-first search over the
/// naive one-step relation. Each class sorted, classes sorted.
pub fn classes(lambda: &Partition, sys: &IdentitySystem) -> Vec<Vec<Vec<u32>>> {
    let mut unseen = arrangements(&canonical(lambda));
    let mut out = Vec::new();
    while let Some(first) = unseen.pop_first() {
        let mut class = BTreeSet::from([first.clone()]);
        let mut queue = VecDeque::from([first]);
        while let Some(word) = queue.pop_front() {
            for next in one_step(&word, sys) {
                if unseen.remove(&next) {
                    class.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        out.push(class.into_iter().collect());
    }
    out.sort();
    out
}

/// Length of a shortest deduction of `u = v`, by exhaustive search.
pub fn distance(u: &[u32], v: &[u32], sys: &IdentitySystem) -> Option<usize> {
    let mut seen = HashSet::from([u.to_vec()]);
    let mut queue = VecDeque::from([(u.to_vec(), 0)]);
    while let Some((word, d)) = queue.pop_front() {
        if word == v {
            return Some(d);
        }
        for next in one_step(&word, sys) {
            if seen.insert(next.clone()) {
                queue.push_back((next, d + 1));
            }
        }
    }
    None
}

/// The library's classes in the same normal form as [`classes`].
pub fn normalize(classes: Vec<Vec<Word>>) -> Vec<Vec<Vec<u32>>> {
    let mut out: Vec<Vec<Vec<u32>>> = classes
        .into_iter()
        .map(|c| {
            let mut v: Vec<Vec<u32>> = c.into_iter().map(Word::into_letters).collect();
            v.sort();
            v
        })
        .collect();
    out.sort();
    out
}

/// Length-1 identity systems are useless; these are the small systems the
/// cross-checks draw from.
pub const SYSTEMS: &[&[&str]] = &[
    &["ab = ba"],
    &["aab = aba"],
    &["aab = aba", "aba = baa"],
    &["abc = acb"],
    &["aab = baa"],
    &["abab = baba"],
    &["aabb = abab"],
    &["ab = ba", "aab = aba"],
    &["abc = bca"],
    &["aabc = abac", "aabc = aacb"],
];
