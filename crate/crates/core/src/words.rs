//! The word algebra over `{x, y}`: shuffle product, the composition/word
//! dictionary, the antiautomorphism `τ`, and the `h_i`-action appearing in
//! Ohno's relations.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_traits::One;

use crate::composition::Composition;
use crate::error::{invalid, Error, Result};
use crate::lincomb::{LinComb, Rational};
use crate::qsym::quasi_shuffle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

/// A word over `{x, y}`; the empty word is the unit. Ordered by length, then
/// lexicographically with `x < y`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Empty, or starts with `x` and ends with `y`.
    pub fn is_admissible(&self) -> bool {
        self.0.is_empty() || (self.0[0] == Letter::X && self.0[self.0.len() - 1] == Letter::Y)
    }

    pub fn count_y(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::Y).count()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", if *l == Letter::X { 'x' } else { 'y' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W({})", self)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                other => Err(Error::Parse { pos: i, msg: format!("expected 'x' or 'y', found {:?}", other) }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// A word of `H⁰ = Q1 + x Q⟨x,y⟩ y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AdmissibleWord(Word);

impl AdmissibleWord {
    pub fn new(w: Word) -> Result<Self> {
        if !w.is_admissible() {
            return invalid(format!("word {} is not in H0 (must start with x and end with y)", w));
        }
        Ok(Self(w))
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    /// Exponents `a_j` of `x^{a1} y x^{a2} y ⋯ x^{ak} y`.
    pub fn x_runs(&self) -> Vec<u32> {
        let mut runs = Vec::new();
        let mut run = 0;
        for l in self.0.letters() {
            match l {
                Letter::X => run += 1,
                Letter::Y => {
                    runs.push(run);
                    run = 0;
                }
            }
        }
        runs
    }

    fn from_x_runs(runs: &[u32]) -> Self {
        let mut letters = Vec::new();
        for &a in runs {
            letters.extend(std::iter::repeat_n(Letter::X, a as usize));
            letters.push(Letter::Y);
        }
        Self(Word(letters))
    }
}

impl Deref for AdmissibleWord {
    type Target = Word;
    fn deref(&self) -> &Word {
        &self.0
    }
}

impl fmt::Display for AdmissibleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for AdmissibleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl FromStr for AdmissibleWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AdmissibleWord::new(s.parse()?)
    }
}

/// `M_(p1,…,pk) ↦ x^{pk-1} y ⋯ x^{p1-1} y`; note the reversal of parts.
pub fn comp_to_word(c: &Composition) -> Result<AdmissibleWord> {
    if !c.is_admissible() {
        return invalid(format!("composition {} is not admissible (last part must exceed 1)", c));
    }
    let runs: Vec<u32> = c.parts().iter().rev().map(|p| p - 1).collect();
    Ok(AdmissibleWord::from_x_runs(&runs))
}

pub fn word_to_comp(w: &AdmissibleWord) -> Composition {
    Composition::from_parts_unchecked(w.x_runs().iter().rev().map(|a| a + 1).collect())
}

/// Sum of all interleavings of `u` and `v`, with multiplicity.
pub fn shuffle(u: &Word, v: &Word) -> LinComb<Word> {
    let (a, b) = (u.letters(), v.letters());
    // table[i][j] = shuffle of the suffixes a[i..], b[j..]
    let mut table: Vec<Vec<LinComb<Vec<Letter>>>> = vec![vec![LinComb::zero(); b.len() + 1]; a.len() + 1];
    for i in (0..=a.len()).rev() {
        for j in (0..=b.len()).rev() {
            table[i][j] = if i == a.len() {
                LinComb::basis(b[j..].to_vec())
            } else if j == b.len() {
                LinComb::basis(a[i..].to_vec())
            } else {
                let prefix = |l: Letter, lc: &LinComb<Vec<Letter>>| -> LinComb<Vec<Letter>> {
                    lc.map_linear(|w| {
                        let mut v = Vec::with_capacity(w.len() + 1);
                        v.push(l);
                        v.extend_from_slice(w);
                        LinComb::basis(v)
                    })
                };
                &prefix(a[i], &table[i + 1][j]) + &prefix(b[j], &table[i][j + 1])
            };
        }
    }
    table[0][0].map_linear(|w| LinComb::basis(Word(w.clone())))
}

/// Reverse the word and exchange `x ↔ y`.
pub fn tau(w: &Word) -> Word {
    Word(w.letters().iter().rev().map(|l| l.swap()).collect())
}

pub fn tau_admissible(w: &AdmissibleWord) -> AdmissibleWord {
    AdmissibleWord(tau(w))
}

/// `h_i · x^{a1}y⋯x^{ak}y = Σ_{e1+⋯+ek=i} x^{a1+e1}y⋯x^{ak+ek}y`.
pub fn ohno_action(i: i64, w: &AdmissibleWord) -> Result<LinComb<AdmissibleWord>> {
    if i < 0 {
        return invalid(format!("ohno_action needs i >= 0, got {}", i));
    }
    if w.is_empty() {
        return invalid("ohno_action needs a nonempty admissible word");
    }
    let runs = w.x_runs();
    let mut out = LinComb::zero();
    let mut current = runs.clone();
    distribute(i as u32, 0, &runs, &mut current, &mut |r| {
        out.add_term(AdmissibleWord::from_x_runs(r), Rational::one());
    });
    Ok(out)
}

fn distribute<F: FnMut(&[u32])>(left: u32, slot: usize, base: &[u32], cur: &mut Vec<u32>, f: &mut F) {
    if slot + 1 == base.len() {
        cur[slot] = base[slot] + left;
        f(cur);
        return;
    }
    for e in 0..=left {
        cur[slot] = base[slot] + e;
        distribute(left - e, slot + 1, base, cur, f);
    }
}

/// Shuffle minus the image of the quasi-shuffle of the corresponding
/// compositions; its zeta value vanishes.
pub fn double_shuffle_delta(u: &AdmissibleWord, v: &AdmissibleWord) -> Result<LinComb<AdmissibleWord>> {
    if u.is_empty() || v.is_empty() {
        return invalid("double_shuffle_delta needs nonempty admissible words");
    }
    let sh: LinComb<AdmissibleWord> =
        shuffle(u, v).try_map_linear(|w| AdmissibleWord::new(w.clone()).map(LinComb::basis))?;
    let st = quasi_shuffle(word_to_comp(u).parts(), word_to_comp(v).parts())
        .try_map_linear(|c| comp_to_word(c).map(LinComb::basis))?;
    Ok(&sh - &st)
}

/// All admissible words of weight (length) exactly `n`.
pub fn admissible_words_of_weight(n: usize) -> Vec<AdmissibleWord> {
    if n == 0 {
        return vec![AdmissibleWord::default()];
    }
    if n == 1 {
        return Vec::new();
    }
    (0u64..(1 << (n - 2)))
        .map(|mask| {
            let mut letters = vec![Letter::X];
            letters.extend((0..n - 2).map(|b| if mask >> (n - 3 - b) & 1 == 1 { Letter::Y } else { Letter::X }));
            letters.push(Letter::Y);
            AdmissibleWord(Word(letters))
        })
        .collect()
}
