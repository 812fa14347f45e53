//! Matching a pattern word against text under a substitution of non-empty words.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::Word;

/// Images of letters under an endomorphism of the free semigroup.
/// Letters without an entry are fixed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Substitution {
    images: BTreeMap<u32, Word>,
}

impl Substitution {
    pub fn new() -> Self {
        Substitution::default()
    }

    pub fn insert(&mut self, letter: u32, image: Word) -> Option<Word> {
        self.images.insert(letter, image)
    }

    pub fn get(&self, letter: u32) -> Option<&Word> {
        self.images.get(&letter)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Word)> {
        self.images.iter().map(|(&l, w)| (l, w))
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, word: &Word) -> Word {
        let mut out = Vec::with_capacity(word.len());
        for &l in word.letters() {
            match self.images.get(&l) {
                Some(image) => out.extend_from_slice(image.letters()),
                None => out.push(l),
            }
        }
        Word::from_vec(out)
    }

    /// `x1->x1 x2,x2->x3`; `-` when empty.
    pub fn to_record(&self) -> String {
        if self.images.is_empty() {
            return "-".to_string();
        }
        let parts: Vec<String> = self.images.iter().map(|(l, w)| format!("x{l}->{}", w.to_tokens())).collect();
        parts.join(",")
    }

    pub fn parse_record(text: &str) -> Result<Self> {
        let mut subst = Substitution::new();
        if text == "-" {
            return Ok(subst);
        }
        for entry in text.split(',') {
            let (letter, image) = entry
                .split_once("->")
                .ok_or_else(|| Error::parse(text, "expected x<i>->word"))?;
            let letter = Word::parse(letter)?;
            let [l] = letter.letters() else {
                return Err(Error::parse(text, "substitution key must be a single letter"));
            };
            if subst.insert(*l, Word::parse(image)?).is_some() {
                return Err(Error::parse(text, "letter mapped twice"));
            }
        }
        Ok(subst)
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_record())
    }
}

/// A word with letters renamed to `0..vars` in order of first occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Pattern {
    pub dense: Vec<u16>,
    /// Original letter for each dense variable.
    pub letters: Vec<u32>,
}

impl Pattern {
    pub fn compile(word: &Word) -> Pattern {
        let mut letters: Vec<u32> = Vec::new();
        let dense = word
            .letters()
            .iter()
            .map(|&l| match letters.iter().position(|&x| x == l) {
                Some(i) => i as u16,
                None => {
                    letters.push(l);
                    (letters.len() - 1) as u16
                }
            })
            .collect();
        Pattern { dense, letters }
    }

    /// Renames `word` with this pattern's variables; every letter of `word` must occur in the pattern.
    pub fn rename(&self, word: &Word) -> Vec<u16> {
        word.letters()
            .iter()
            .map(|l| self.letters.iter().position(|x| x == l).expect("balanced sides share content") as u16)
            .collect()
    }

    pub fn vars(&self) -> usize {
        self.letters.len()
    }

    /// Occurrence count of each variable.
    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.letters.len()];
        for &v in &self.dense {
            counts[v as usize] += 1;
        }
        counts
    }

    pub fn substitution(&self, text: &[u32], bindings: &[(usize, usize)]) -> Substitution {
        let mut subst = Substitution::new();
        for (var, &(start, len)) in bindings.iter().enumerate() {
            subst.insert(self.letters[var], Word::from_vec(text[start..start + len].to_vec()));
        }
        subst
    }
}

/// Writes the image of `dense` under `bindings` (spans of `text`) onto `out`.
pub(crate) fn expand(dense: &[u16], text: &[u32], bindings: &[(usize, usize)], out: &mut Vec<u32>) {
    for &v in dense {
        let (start, len) = bindings[v as usize];
        out.extend_from_slice(&text[start..start + len]);
    }
}

/// Enumerates the ways `dense` matches `text[start..end]`.
///
/// With `exact` the match must end at `limit`; otherwise every end up to
/// `limit` is reported. `visit` receives the end position and one
/// `(start, len)` span per variable. Shorter images of earlier variables are
/// tried first, which fixes the enumeration order.
pub(crate) fn match_spans<F>(dense: &[u16], vars: usize, text: &[u32], start: usize, limit: usize, exact: bool, visit: &mut F)
where
    F: FnMut(usize, &[(usize, usize)]),
{
    if dense.is_empty() || start + dense.len() > limit {
        return;
    }
    let mut search = Search { dense, text, limit, exact, bindings: vec![(0, 0); vars] };
    search.step(0, start, visit);
}

struct Search<'a> {
    dense: &'a [u16],
    text: &'a [u32],
    limit: usize,
    exact: bool,
    bindings: Vec<(usize, usize)>,
}

impl Search<'_> {
    fn step<F>(&mut self, pos: usize, at: usize, visit: &mut F)
    where
        F: FnMut(usize, &[(usize, usize)]),
    {
        if pos == self.dense.len() {
            if !self.exact || at == self.limit {
                visit(at, &self.bindings);
            }
            return;
        }
        let rest = self.dense.len() - pos - 1;
        let var = self.dense[pos] as usize;
        let (bound_at, bound_len) = self.bindings[var];
        if bound_len > 0 {
            if at + bound_len + rest <= self.limit
                && self.text[at..at + bound_len] == self.text[bound_at..bound_at + bound_len]
            {
                self.step(pos + 1, at + bound_len, visit);
            }
            return;
        }
        if at + 1 + rest > self.limit {
            return;
        }
        let longest = self.limit - at - rest;
        for len in 1..=longest {
            self.bindings[var] = (at, len);
            self.step(pos + 1, at + len, visit);
        }
        self.bindings[var] = (0, 0);
    }
}

/// Every substitution `ζ` with non-empty images such that `ζ(pattern)` equals `target`.
pub fn match_full(pattern: &Word, target: &Word) -> Vec<Substitution> {
    let compiled = Pattern::compile(pattern);
    let text = target.letters();
    let mut out = Vec::new();
    match_spans(&compiled.dense, compiled.vars(), text, 0, text.len(), true, &mut |_, bindings| {
        out.push(compiled.substitution(text, bindings));
    });
    out
}
