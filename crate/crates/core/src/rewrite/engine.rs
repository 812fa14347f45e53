use std::collections::{HashMap, HashSet};

use super::matching::{expand, match_spans, Pattern};
use super::system::{Direction, Identity, IdentitySystem};
use super::trace::{DeductionTrace, RewriteStep};
use crate::error::Result;
use crate::partitions::Partition;
use crate::union_find::UnionFind;
use crate::words::{arrangements, canonical_letters, Word};

struct Rule {
    identity: usize,
    direction: Direction,
    pattern: Pattern,
    replacement: Vec<u16>,
}

/// Forward rules sharing one renamed pattern, so each match is computed once.
struct Group {
    dense: Vec<u16>,
    vars: usize,
    weights: Vec<usize>,
    replacements: Vec<Vec<u16>>,
}

/// Both orientations of every non-trivial identity, compiled for matching.
///
/// `rules` drive single-word rewriting. `groups` only hold the forward
/// orientation: they are used to build classes over a whole arrangement set,
/// where every edge `a·ζ(s)·b — a·ζ(t)·b` is already found from its `s` end.
pub(crate) struct RuleIndex {
    rules: Vec<Rule>,
    groups: Vec<Group>,
}

/// `weights[t-1]` is the number of positions holding a letter that occurs at least `t` times.
fn threshold_weights(counts: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let counts: Vec<usize> = counts.into_iter().collect();
    let max = counts.iter().copied().max().unwrap_or(0);
    (1..=max).map(|t| counts.iter().filter(|&&c| c >= t).sum()).collect()
}

/// A pattern variable occurring `c` times puts the first letter of its image at
/// `c` distinct positions, and that letter then occurs at least `c` times. So
/// a pattern can only match inside a word whose weights dominate its own.
fn can_occur(pattern: &[usize], word: &[usize]) -> bool {
    pattern.iter().enumerate().all(|(t, &need)| word.get(t).copied().unwrap_or(0) >= need)
}

impl RuleIndex {
    pub fn new(system: &IdentitySystem) -> Self {
        let mut rules = Vec::new();
        let mut groups: Vec<Group> = Vec::new();
        let mut group_of: HashMap<Vec<u16>, usize> = HashMap::new();
        let mut grouped: HashSet<(usize, Vec<u16>)> = HashSet::new();
        for (index, identity) in system.iter().enumerate() {
            if identity.is_trivial() {
                continue;
            }
            for direction in [Direction::Forward, Direction::Backward] {
                let pattern = Pattern::compile(identity.source_side(direction));
                let replacement = pattern.rename(identity.target_side(direction));
                if direction == Direction::Forward {
                    let g = *group_of.entry(pattern.dense.clone()).or_insert_with(|| {
                        groups.push(Group {
                            dense: pattern.dense.clone(),
                            vars: pattern.vars(),
                            weights: threshold_weights(pattern.counts()),
                            replacements: Vec::new(),
                        });
                        groups.len() - 1
                    });
                    if grouped.insert((g, replacement.clone())) {
                        groups[g].replacements.push(replacement.clone());
                    }
                }
                rules.push(Rule { identity: index, direction, pattern, replacement });
            }
        }
        RuleIndex { rules, groups }
    }

    /// One-step rewrites in scan order (identity, direction, factor start,
    /// factor end, match), keeping the first step for each distinct target.
    pub fn rewrites(&self, word: &Word) -> Vec<(Word, RewriteStep)> {
        let text = word.letters();
        let n = text.len();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(n);
        for rule in &self.rules {
            let plen = rule.pattern.dense.len();
            if plen > n {
                continue;
            }
            for start in 0..=n - plen {
                for end in start + plen..=n {
                    match_spans(&rule.pattern.dense, rule.pattern.vars(), text, start, end, true, &mut |_, bindings| {
                        buf.clear();
                        buf.extend_from_slice(&text[..start]);
                        expand(&rule.replacement, text, bindings, &mut buf);
                        buf.extend_from_slice(&text[end..]);
                        if buf != text && seen.insert(buf.clone()) {
                            let step = RewriteStep {
                                identity: rule.identity,
                                direction: rule.direction,
                                prefix: text[..start].to_vec(),
                                suffix: text[end..].to_vec(),
                                substitution: rule.pattern.substitution(text, bindings),
                            };
                            out.push((Word::from_vec(buf.clone()), step));
                        }
                    });
                }
            }
        }
        out
    }

    /// Calls `visit` with every one-step rewrite of `text` (possibly repeated),
    /// using only the groups listed in `active`.
    fn for_each_neighbor(&self, text: &[u32], active: &[usize], buf: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
        let n = text.len();
        for start in 0..n {
            for &g in active {
                let group = &self.groups[g];
                if start + group.dense.len() > n {
                    continue;
                }
                match_spans(&group.dense, group.vars, text, start, n, false, &mut |end, bindings| {
                    for replacement in &group.replacements {
                        buf.clear();
                        buf.extend_from_slice(&text[..start]);
                        expand(replacement, text, bindings, buf);
                        buf.extend_from_slice(&text[end..]);
                        if buf.as_slice() != text {
                            visit(buf);
                        }
                    }
                });
            }
        }
    }
}

/// Connected components of the rewrite graph on all arrangements of one letter multiset.
struct ArrangementClasses {
    words: Vec<Vec<u32>>,
    position: HashMap<Vec<u32>, usize>,
    labels: Vec<usize>,
    count: usize,
}

impl ArrangementClasses {
    fn compute(index: &RuleIndex, multiset: &[u32]) -> Self {
        let words = arrangements(multiset.to_vec());
        let position: HashMap<Vec<u32>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();

        let mut letter_counts: HashMap<u32, usize> = HashMap::new();
        for &l in multiset {
            *letter_counts.entry(l).or_insert(0) += 1;
        }
        let weights = threshold_weights(letter_counts.into_values());
        let active: Vec<usize> = (0..index.groups.len())
            .filter(|&g| can_occur(&index.groups[g].weights, &weights))
            .collect();

        let mut uf = UnionFind::new(words.len());
        let mut remaining = words.len();
        let mut buf = Vec::with_capacity(multiset.len());
        for (i, word) in words.iter().enumerate() {
            if remaining == 1 {
                break;
            }
            index.for_each_neighbor(word, &active, &mut buf, &mut |target| {
                // balanced rewriting preserves every letter count, so targets stay in this class
                let j = *position
                    .get(target)
                    .unwrap_or_else(|| panic!("rewrite of {word:?} left its arrangement class: {target:?}"));
                if uf.union(i, j) {
                    remaining -= 1;
                }
            });
        }
        let (labels, count) = uf.labels();
        ArrangementClasses { words, position, labels, count }
    }

    fn grouped(&self) -> Vec<Vec<Word>> {
        let mut classes = vec![Vec::new(); self.count];
        for (word, &label) in self.words.iter().zip(&self.labels) {
            classes[label].push(Word::from_vec(word.clone()));
        }
        classes
    }
}

/// Equational consequence of a fixed identity system, restricted to one
/// letter multiset at a time.
///
/// Two words are equivalent exactly when one is derivable from the other.
/// Results are cached per multiset, so repeated queries on the same
/// transversal cost one traversal.
pub struct Congruence {
    index: RuleIndex,
    cache: HashMap<Vec<u32>, ArrangementClasses>,
}

impl Congruence {
    pub fn new(system: &IdentitySystem) -> Self {
        Congruence { index: RuleIndex::new(system), cache: HashMap::new() }
    }

    fn classes_for(&mut self, mut multiset: Vec<u32>) -> &ArrangementClasses {
        multiset.sort_unstable();
        let index = &self.index;
        self.cache
            .entry(multiset)
            .or_insert_with_key(|key| ArrangementClasses::compute(index, key))
    }

    /// Classes of `W_λ`, each sorted, ordered by least member.
    pub fn classes(&mut self, lambda: &Partition) -> Result<Vec<Vec<Word>>> {
        lambda.ensure_lambda()?;
        Ok(self.classes_for(canonical_letters(lambda)).grouped())
    }

    pub fn class_count(&mut self, lambda: &Partition) -> Result<usize> {
        lambda.ensure_lambda()?;
        Ok(self.classes_for(canonical_letters(lambda)).count)
    }

    /// Some class of `W_λ` has at least two words.
    pub fn reduces(&mut self, lambda: &Partition) -> Result<bool> {
        lambda.ensure_lambda()?;
        let classes = self.classes_for(canonical_letters(lambda));
        Ok(classes.count < classes.words.len())
    }

    /// `W_λ` is a single class.
    pub fn collapses(&mut self, lambda: &Partition) -> Result<bool> {
        Ok(self.class_count(lambda)? == 1)
    }

    /// Whether `u ≈ v` follows from the system. Unbalanced pairs are an error.
    pub fn equivalent(&mut self, u: &Word, v: &Word) -> Result<bool> {
        Identity::new(u.clone(), v.clone())?;
        if u == v {
            return Ok(true);
        }
        let classes = self.classes_for(u.letters().to_vec());
        let label = |w: &Word| classes.labels[classes.position[w.letters()]];
        Ok(label(u) == label(v))
    }
}

/// All `(target, step)` pairs reachable from `word` by one application of `system`.
pub fn one_step_rewrites(word: &Word, system: &IdentitySystem) -> Vec<(Word, RewriteStep)> {
    RuleIndex::new(system).rewrites(word)
}

/// A shortest deduction of `u ≈ v` from `system`, or `None` when there is none.
///
/// Breadth-first over the arrangements of `u`'s letters; every layer is
/// expanded in lexicographic order, so the returned trace is reproducible.
pub fn derivable(u: &Word, v: &Word, system: &IdentitySystem) -> Result<Option<DeductionTrace>> {
    Identity::new(u.clone(), v.clone())?;
    if u == v {
        return Ok(Some(DeductionTrace::new(vec![u.clone()], Vec::new())?));
    }
    let index = RuleIndex::new(system);
    let counts = u.count_vector();
    let mut parent: HashMap<Word, (Word, RewriteStep)> = HashMap::new();
    let mut frontier = vec![u.clone()];
    while !frontier.is_empty() {
        frontier.sort();
        let mut next = Vec::new();
        for word in &frontier {
            for (target, step) in index.rewrites(word) {
                assert_eq!(target.count_vector(), counts, "rewrite {word} -> {target} changed letter counts");
                if target == *u || parent.contains_key(&target) {
                    continue;
                }
                parent.insert(target.clone(), (word.clone(), step));
                if target == *v {
                    return Ok(Some(unwind(u, v, &mut parent)?));
                }
                next.push(target);
            }
        }
        frontier = next;
    }
    Ok(None)
}

fn unwind(u: &Word, v: &Word, parent: &mut HashMap<Word, (Word, RewriteStep)>) -> Result<DeductionTrace> {
    let mut words = vec![v.clone()];
    let mut steps = Vec::new();
    let mut current = v.clone();
    while current != *u {
        let (previous, step) = parent.remove(&current).expect("every reached word has a parent");
        steps.push(step);
        words.push(previous.clone());
        current = previous;
    }
    words.reverse();
    steps.reverse();
    DeductionTrace::new(words, steps)
}

/// Partition of `W_λ` into classes of mutually derivable words.
pub fn component_classes(lambda: &Partition, system: &IdentitySystem) -> Result<Vec<Vec<Word>>> {
    Congruence::new(system).classes(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::collapse_system;

    fn w(text: &str) -> Word {
        Word::parse(text).unwrap()
    }

    fn p(c: &[u32]) -> Partition {
        Partition::new(c.to_vec()).unwrap()
    }

    fn sys(lines: &[&str]) -> IdentitySystem {
        lines.iter().map(|l| l.parse().unwrap()).collect()
    }

    #[test]
    fn weights_filter() {
        assert_eq!(threshold_weights([2, 1, 1]), vec![4, 2]);
        // x1 x1 x2 x2 cannot occur inside a word with a single repeated letter pair
        assert!(!can_occur(&threshold_weights([2, 2]), &threshold_weights([2, 1, 1, 1])));
        assert!(can_occur(&threshold_weights([2, 1]), &threshold_weights([4])));
    }

    #[test]
    fn one_step_examples() {
        let s = sys(&["aab = aba"]);
        let targets: Vec<Word> = one_step_rewrites(&w("aab"), &s).into_iter().map(|(t, _)| t).collect();
        assert_eq!(targets, vec![w("aba")]);
        assert!(one_step_rewrites(&w("ab"), &s).is_empty());

        let targets: Vec<Word> = one_step_rewrites(&w("aabc"), &s).into_iter().map(|(t, _)| t).collect();
        assert_eq!(targets, vec![w("abac"), w("abca")]);
    }

    #[test]
    fn steps_reassemble() {
        let s = collapse_system(&p(&[2, 1])).unwrap();
        for (target, step) in one_step_rewrites(&w("aabca"), &s) {
            assert_eq!(step.source(&s).unwrap(), w("aabca"));
            assert_eq!(step.target(&s).unwrap(), target);
        }
    }

    #[test]
    fn derivation_examples() {
        let s = sys(&["aab = aba", "aba = baa"]);
        let trace = derivable(&w("aab"), &w("baa"), &s).unwrap().unwrap();
        assert_eq!(trace.words(), &[w("aab"), w("aba"), w("baa")]);
        trace.replay(&s).unwrap();

        assert!(derivable(&w("aab"), &w("aab"), &s).unwrap().unwrap().is_empty());
        assert!(derivable(&w("aabc"), &w("aacb"), &s).unwrap().is_none());
        assert!(derivable(&w("ab"), &w("aab"), &s).is_err());
    }

    #[test]
    fn classes_examples() {
        let s = sys(&["aab = aba", "aba = baa"]);
        assert_eq!(component_classes(&p(&[2, 1]), &s).unwrap(), vec![vec![w("aab"), w("aba"), w("baa")]]);
        assert_eq!(component_classes(&p(&[2, 1]), &IdentitySystem::new()).unwrap().len(), 3);
        let classes = component_classes(&p(&[2, 1, 1]), &s).unwrap();
        let class_of = |x: &Word| classes.iter().position(|c| c.contains(x)).unwrap();
        assert_ne!(class_of(&w("aabc")), class_of(&w("aacb")));
        assert!(component_classes(&p(&[3]), &s).is_err());
    }

    #[test]
    fn congruence_on_arbitrary_letters() {
        let mut c = Congruence::new(&sys(&["ab = ba"]));
        assert!(c.equivalent(&w("x5 x9 x5"), &w("x5 x5 x9")).unwrap());
        assert!(c.equivalent(&w("ab"), &w("aab")).is_err());
        assert!(c.collapses(&p(&[2, 2, 1])).unwrap());
    }
}
