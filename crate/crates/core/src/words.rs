//! Words over the alphabet `x1, x2, …` and the transversals `W_λ`.
//!
//! Letters are positive indices. Two text forms are supported: explicit
//! tokens (`x1 x1 x2`) and, for indices up to 26, compact letters (`aab`,
//! where `a` is `x1`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A non-empty sequence of letter indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: impl Into<Vec<u32>>) -> Result<Self> {
        let letters = letters.into();
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word { letters })
    }

    pub(crate) fn from_vec(letters: Vec<u32>) -> Self {
        debug_assert!(!letters.is_empty() && !letters.contains(&0));
        Word { letters }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.letters
    }

    /// `ℓ(u)`
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Always false; present for symmetry with [`Word::len`].
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `ℓ_i(u)`
    pub fn count(&self, letter: u32) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// `c(u)`
    pub fn content(&self) -> BTreeSet<u32> {
        self.letters.iter().copied().collect()
    }

    /// Occurrence count of every letter of the word.
    pub fn count_vector(&self) -> BTreeMap<u32, usize> {
        let mut counts = BTreeMap::new();
        for &l in &self.letters {
            *counts.entry(l).or_insert(0) += 1;
        }
        counts
    }

    /// The partition of `ℓ(u)` into `n(u)` parts formed by the letter counts.
    pub fn partition(&self) -> Partition {
        let counts: Vec<u32> = self.count_vector().values().map(|&c| c as u32).collect();
        Partition::new(counts).expect("non-empty word has positive counts")
    }

    /// Applies a letter-to-letter mapping.
    pub fn map_letters(&self, mut f: impl FnMut(u32) -> u32) -> Result<Word> {
        Word::new(self.letters.iter().map(|&l| f(l)).collect::<Vec<_>>())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// `x1 x1 x2`
    pub fn to_tokens(&self) -> String {
        let tokens: Vec<String> = self.letters.iter().map(|l| format!("x{l}")).collect();
        tokens.join(" ")
    }

    /// `aab`, or `None` when some index exceeds 26.
    pub fn to_compact(&self) -> Option<String> {
        self.letters
            .iter()
            .map(|&l| (l <= 26).then(|| char::from(b'a' + (l - 1) as u8)))
            .collect()
    }

    /// Compact form when available, token form otherwise.
    pub fn to_text(&self) -> String {
        self.to_compact().unwrap_or_else(|| self.to_tokens())
    }

    /// Accepts either `x1 x1 x2` (tokens, whitespace optional between them)
    /// or `aab`. Text containing a digit is read as tokens.
    pub fn parse(text: &str) -> Result<Word> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::parse(text, "empty word"));
        }
        let letters = if trimmed.chars().any(|c| c.is_ascii_digit()) {
            parse_tokens(text, trimmed)?
        } else {
            parse_compact(text, trimmed)?
        };
        Word::new(letters).map_err(|e| Error::parse(text, e.to_string()))
    }
}

fn parse_tokens(original: &str, text: &str) -> Result<Vec<u32>> {
    let mut letters = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c.is_whitespace() {
            continue;
        }
        if c != 'x' {
            return Err(Error::parse(original, format!("expected 'x', found {c:?}")));
        }
        let mut digits = String::new();
        while let Some(&d) = chars.peek() {
            if !d.is_ascii_digit() {
                break;
            }
            digits.push(d);
            chars.next();
        }
        let index: u32 = digits
            .parse()
            .map_err(|_| Error::parse(original, "letter index missing after 'x'"))?;
        if index == 0 {
            return Err(Error::parse(original, "letter indices start at 1"));
        }
        letters.push(index);
    }
    Ok(letters)
}

fn parse_compact(original: &str, text: &str) -> Result<Vec<u32>> {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'a'..='z' => Ok(c as u32 - 'a' as u32 + 1),
            _ => Err(Error::parse(original, format!("unexpected character {c:?}"))),
        })
        .collect()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tokens())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.to_tokens())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        Word::parse(text)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_tokens())
    }
}

/// `x1^ℓ1 x2^ℓ2 ⋯ xm^ℓm`, the least word of `W_λ`.
pub fn canonical_word(lambda: &Partition) -> Result<Word> {
    lambda.ensure_lambda()?;
    Ok(Word::from_vec(canonical_letters(lambda)))
}

pub(crate) fn canonical_letters(lambda: &Partition) -> Vec<u32> {
    lambda
        .components()
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat(i as u32 + 1).take(c as usize))
        .collect()
}

/// All words of `W_λ` in lexicographic order.
pub fn enumerate_transversal(lambda: &Partition) -> Result<Vec<Word>> {
    lambda.ensure_lambda()?;
    Ok(arrangements(canonical_letters(lambda)).into_iter().map(Word::from_vec).collect())
}

/// `|W_λ|`, the multinomial coefficient `n! / (ℓ1! ⋯ ℓm!)`, or `None` when it
/// does not fit in a `u64`.
pub fn transversal_size(lambda: &Partition) -> Option<u64> {
    let mut size: u64 = 1;
    let mut placed: u64 = 0;
    for &c in lambda.components() {
        for k in 1..=c as u64 {
            placed += 1;
            // size · C(placed-1, k-1) · placed / k stays an integer at every step
            size = u64::try_from(u128::from(size) * u128::from(placed) / u128::from(k)).ok()?;
        }
    }
    Some(size)
}

/// True when `u ∈ W_λ`.
pub fn in_transversal(u: &Word, lambda: &Partition) -> bool {
    let counts = u.count_vector();
    counts.len() == lambda.components().len()
        && counts
            .iter()
            .enumerate()
            .all(|(i, (&letter, &count))| letter == i as u32 + 1 && count == lambda.components()[i] as usize)
}

/// Distinct permutations of a multiset, lexicographically, starting from any order of `letters`.
pub(crate) fn arrangements(mut letters: Vec<u32>) -> Vec<Vec<u32>> {
    letters.sort_unstable();
    let mut out = vec![letters.clone()];
    while next_permutation(&mut letters) {
        out.push(letters.clone());
    }
    out
}

fn next_permutation(seq: &mut [u32]) -> bool {
    let Some(pivot) = seq.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let successor = seq.iter().rposition(|&x| x > seq[pivot]).expect("pivot has a larger element after it");
    seq.swap(pivot, successor);
    seq[pivot + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        Word::parse(text).unwrap()
    }

    fn p(c: &[u32]) -> Partition {
        Partition::new(c.to_vec()).unwrap()
    }

    #[test]
    fn partition_of_words() {
        assert_eq!(w("x1 x1 x2").partition(), p(&[2, 1]));
        assert_eq!(w("x3 x1 x3 x2").partition(), p(&[2, 1, 1]));
        assert_eq!(w("x1 x1").partition(), p(&[2]));
        assert!(!w("x1 x1").partition().is_lambda());
    }

    #[test]
    fn canonical_words() {
        assert_eq!(canonical_word(&p(&[2, 1, 1])).unwrap(), w("x1 x1 x2 x3"));
        assert_eq!(canonical_word(&p(&[2, 1])).unwrap(), w("aab"));
        assert_eq!(canonical_word(&p(&[3, 2])).unwrap(), w("aaabb"));
        assert!(canonical_word(&p(&[3])).is_err());
    }

    #[test]
    fn transversal_enumeration() {
        assert_eq!(enumerate_transversal(&p(&[2, 1])).unwrap(), vec![w("aab"), w("aba"), w("baa")]);
        assert_eq!(enumerate_transversal(&p(&[1, 1])).unwrap(), vec![w("ab"), w("ba")]);
        assert_eq!(enumerate_transversal(&p(&[2, 1, 1])).unwrap().len(), 12);
        assert!(enumerate_transversal(&p(&[2])).is_err());
        assert_eq!(transversal_size(&p(&[2, 2, 1, 1, 1])), Some(1260));
        assert_eq!(transversal_size(&Partition::new(vec![1; 30]).unwrap()), None);
    }

    #[test]
    fn transversal_membership() {
        assert!(in_transversal(&w("aba"), &p(&[2, 1])));
        assert!(!in_transversal(&w("bba"), &p(&[2, 1])));
        assert!(!in_transversal(&w("aac"), &p(&[2, 1])));
        assert!(!in_transversal(&w("aabc"), &p(&[2, 1])));
    }

    #[test]
    fn text_forms() {
        assert_eq!(w("x1 x1 x2"), w("aab"));
        assert_eq!(w("x1x1x2"), w("aab"));
        assert_eq!(w("x12 x3").letters(), &[12, 3]);
        assert_eq!(w("x30").to_compact(), None);
        assert_eq!(w("x30 x1").to_text(), "x30 x1");
        assert_eq!(w("aab").to_tokens(), "x1 x1 x2");
        assert!(Word::parse("").is_err());
        assert!(Word::parse("x0").is_err());
        assert!(Word::parse("aB").is_err());
        assert!(Word::parse("x1 y2").is_err());
        assert!(Word::new(vec![]).is_err());
    }
}
