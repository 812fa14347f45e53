use serde::Serialize;

use super::matching::Substitution;
use super::system::{Direction, IdentitySystem};
use crate::error::{Error, Result};
use crate::words::Word;

/// One application `a·ζ(s)·b → a·ζ(t)·b` of an identity `s ≈ t` (in the given direction).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewriteStep {
    /// Position of the identity in its system.
    pub identity: usize,
    pub direction: Direction,
    /// Left context `a`, possibly empty.
    pub prefix: Vec<u32>,
    /// Right context `b`, possibly empty.
    pub suffix: Vec<u32>,
    pub substitution: Substitution,
}

impl RewriteStep {
    fn assemble(&self, side: &Word) -> Word {
        let image = self.substitution.apply(side);
        let mut letters = self.prefix.clone();
        letters.extend_from_slice(image.letters());
        letters.extend_from_slice(&self.suffix);
        Word::from_vec(letters)
    }

    /// Rebuilds `a·ζ(s)·b`.
    pub fn source(&self, system: &IdentitySystem) -> Result<Word> {
        let identity = lookup(system, self.identity)?;
        Ok(self.assemble(identity.source_side(self.direction)))
    }

    /// Rebuilds `a·ζ(t)·b`.
    pub fn target(&self, system: &IdentitySystem) -> Result<Word> {
        let identity = lookup(system, self.identity)?;
        Ok(self.assemble(identity.target_side(self.direction)))
    }
}

fn lookup(system: &IdentitySystem, index: usize) -> Result<&super::Identity> {
    system
        .get(index)
        .ok_or_else(|| Error::InvalidTrace(format!("identity {index} is not in the system")))
}

/// A deduction `w0 → w1 → … → wℓ` together with the step producing each arrow.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeductionTrace {
    words: Vec<Word>,
    steps: Vec<RewriteStep>,
}

impl DeductionTrace {
    pub fn new(words: Vec<Word>, steps: Vec<RewriteStep>) -> Result<Self> {
        if words.len() != steps.len() + 1 {
            return Err(Error::InvalidTrace(format!("{} words for {} steps", words.len(), steps.len())));
        }
        Ok(DeductionTrace { words, steps })
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn steps(&self) -> &[RewriteStep] {
        &self.steps
    }

    /// `ℓ`, the number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn start(&self) -> &Word {
        &self.words[0]
    }

    pub fn end(&self) -> &Word {
        self.words.last().expect("a trace has at least one word")
    }

    /// Checks that every step reassembles its source and target words.
    pub fn replay(&self, system: &IdentitySystem) -> Result<()> {
        for (k, step) in self.steps.iter().enumerate() {
            let (source, target) = (step.source(system)?, step.target(system)?);
            if source != self.words[k] {
                return Err(Error::InvalidTrace(format!("step {}: source {source} differs from {}", k + 1, self.words[k])));
            }
            if target != self.words[k + 1] {
                return Err(Error::InvalidTrace(format!(
                    "step {}: target {target} differs from {}",
                    k + 1,
                    self.words[k + 1]
                )));
            }
        }
        Ok(())
    }

    /// Tab-separated records: a `deduction` header, then one `step` line per arrow.
    ///
    /// ```text
    /// deduction	x1 x1 x2	x2 x1 x1	2
    /// step	1	x1 x1 x2	x1 x2 x1	0	forward	-	-	x1->x1,x2->x2
    /// ```
    pub fn to_records(&self) -> String {
        let mut out = format!("deduction\t{}\t{}\t{}\n", self.start(), self.end(), self.len());
        for (k, step) in self.steps.iter().enumerate() {
            out.push_str(&format!(
                "step\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                k + 1,
                self.words[k],
                self.words[k + 1],
                step.identity,
                step.direction.as_str(),
                context(&step.prefix),
                context(&step.suffix),
                step.substitution.to_record()
            ));
        }
        out
    }

    /// Inverse of [`DeductionTrace::to_records`]. Does not consult a system; use
    /// [`DeductionTrace::replay`] to check the steps.
    pub fn parse_records(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidTrace(msg);
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next().ok_or_else(|| bad("empty input".into()))?.split('\t').collect();
        let ["deduction", from, to, length] = header[..] else {
            return Err(bad("malformed header".into()));
        };
        let length: usize = length.parse().map_err(|_| bad(format!("bad length {length:?}")))?;
        let mut words = vec![Word::parse(from)?];
        let mut steps = Vec::with_capacity(length);
        for (k, line) in lines.enumerate() {
            let fields: Vec<&str> = line.split('\t').collect();
            let ["step", index, source, target, identity, direction, prefix, suffix, subst] = fields[..] else {
                return Err(bad(format!("malformed step line {line:?}")));
            };
            if index != (k + 1).to_string() {
                return Err(bad(format!("step {index} out of order")));
            }
            if Word::parse(source)? != *words.last().expect("non-empty") {
                return Err(bad(format!("step {index} does not continue the chain")));
            }
            words.push(Word::parse(target)?);
            steps.push(RewriteStep {
                identity: identity.parse().map_err(|_| bad(format!("bad identity index {identity:?}")))?,
                direction: direction.parse()?,
                prefix: parse_context(prefix)?,
                suffix: parse_context(suffix)?,
                substitution: Substitution::parse_record(subst)?,
            });
        }
        if steps.len() != length || Word::parse(to)? != *words.last().expect("non-empty") {
            return Err(bad("header does not agree with the steps".into()));
        }
        DeductionTrace::new(words, steps)
    }
}

fn context(letters: &[u32]) -> String {
    if letters.is_empty() {
        "-".to_string()
    } else {
        Word::from_vec(letters.to_vec()).to_tokens()
    }
}

fn parse_context(text: &str) -> Result<Vec<u32>> {
    if text == "-" {
        Ok(Vec::new())
    } else {
        Ok(Word::parse(text)?.into_letters())
    }
}
