//! Words over the two-letter alphabet `{a, b}` and the elementary transforms
//! on them.
//!
//! A word doubles as a lattice path: `a` is a rise step `(1, 1)` and `b` a
//! fall step `(1, -1)`. The running height after `k` letters is the balance
//! `δ` of the length-`k` prefix.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// Rise step, written `a`.
    A,
    /// Fall step, written `b`.
    B,
}

impl Letter {
    pub fn flip(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    /// Height change of the step: `+1` for `a`, `-1` for `b`.
    pub fn step(self) -> i64 {
        match self {
            Letter::A => 1,
            Letter::B => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

/// Membership of a word in `A_n` / `D_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Membership {
    NotInA,
    InAOnly,
    InD,
}

/// An immutable word over `{a, b}`. Ordering is lexicographic with `a < b`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// `letter^count`.
    pub fn power(letter: Letter, count: usize) -> Word {
        Word(vec![letter; count])
    }

    /// The pyramid `a^k b^k`.
    pub fn pyramid(k: usize) -> Word {
        let mut letters = vec![Letter::A; k];
        letters.resize(2 * k, Letter::B);
        Word(letters)
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

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// `|w|_a - |w|_b`.
    pub fn delta(&self) -> i64 {
        self.0.iter().map(|l| l.step()).sum()
    }

    pub fn mirror(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Word {
        Word(self.0.iter().map(|l| l.flip()).collect())
    }

    /// Complement of the mirror: the central symmetry of the path.
    pub fn sym(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.flip()).collect())
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.0.len();
        (0..n / 2).all(|i| self.0[i] == self.0[n - 1 - i])
    }

    /// `sym(w) == w`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.0.len();
        (0..n.div_ceil(2)).all(|i| self.0[i] == self.0[n - 1 - i].flip())
    }

    pub fn is_dyck(&self) -> bool {
        let mut height = 0i64;
        for l in &self.0 {
            height += l.step();
            if height < 0 {
                return false;
            }
        }
        height == 0
    }

    pub fn is_pyramid(&self) -> bool {
        let k = self.0.len() / 2;
        self.0.len() % 2 == 0
            && self.0[..k].iter().all(|&l| l == Letter::A)
            && self.0[k..].iter().all(|&l| l == Letter::B)
    }

    pub fn classify(&self) -> Membership {
        let len = self.0.len();
        if len % 2 == 0 || self.delta() != -1 {
            return Membership::NotInA;
        }
        if self.0[len - 1] == Letter::B && Word::is_dyck_slice(&self.0[..len - 1]) {
            Membership::InD
        } else {
            Membership::InAOnly
        }
    }

    pub fn in_dn(&self) -> bool {
        self.classify() == Membership::InD
    }

    fn is_dyck_slice(letters: &[Letter]) -> bool {
        let mut height = 0i64;
        for l in letters {
            height += l.step();
            if height < 0 {
                return false;
            }
        }
        height == 0
    }

    pub fn profile(&self) -> PrefixProfile {
        PrefixProfile::of(self)
    }

    /// Running heights including the origin: `heights()[k]` is δ of the
    /// first `k` letters, so the result has `len + 1` entries.
    pub fn heights(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        let mut h = 0;
        out.push(h);
        for l in &self.0 {
            h += l.step();
            out.push(h);
        }
        out
    }

    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k].to_vec())
    }

    pub fn suffix(&self, k: usize) -> Word {
        Word(self.0[self.0.len() - k..].to_vec())
    }

    /// The factor covering letter positions `start..end` (0-based, half-open).
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.0.starts_with(&other.0)
    }

    pub fn ends_with(&self, other: &Word) -> bool {
        self.0.ends_with(&other.0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn push(mut self, letter: Letter) -> Word {
        self.0.push(letter);
        self
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    /// Drops the last letter. Returns `None` on the empty word.
    pub fn without_last(&self) -> Option<Word> {
        let (_, init) = self.0.split_last()?;
        Some(Word(init.to_vec()))
    }

    /// `v·u` where `w = u·v` and `|u| = k`.
    pub fn rotate(&self, k: usize) -> Result<Word> {
        if k > self.0.len() {
            return Err(Error::RotationOutOfRange {
                k,
                len: self.0.len(),
            });
        }
        let mut letters = Vec::with_capacity(self.0.len());
        letters.extend_from_slice(&self.0[k..]);
        letters.extend_from_slice(&self.0[..k]);
        Ok(Word(letters))
    }

    /// The unique conjugate of an `A_n` word that lies in `D_n`, with the
    /// split point `k` (`0 <= k < |w|`) that produces it.
    ///
    /// The split is taken right after the first point where the running
    /// height reaches its minimum.
    pub fn cycle_lemma_rotation(&self) -> Result<(usize, Word)> {
        if self.classify() == Membership::NotInA {
            return Err(Error::NotInA(self.clone()));
        }
        let profile = self.profile();
        let k = profile.argmin_first % self.0.len();
        Ok((k, self.rotate(k)?))
    }

    /// Packs the word two bits per letter (`a = 01`, `b = 10`), first letter in
    /// the lowest bits. Distinct words up to 32 letters get distinct keys.
    pub fn packed(&self) -> Result<u64> {
        if self.0.len() > 32 {
            return Err(Error::TooLongToPack(self.0.len()));
        }
        Ok(self.0.iter().enumerate().fold(0u64, |acc, (i, l)| {
            let code = match l {
                Letter::A => 0b01u64,
                Letter::B => 0b10u64,
            };
            acc | (code << (2 * i))
        }))
    }

    pub fn from_packed(key: u64) -> Word {
        let mut letters = Vec::new();
        let mut rest = key;
        while rest != 0 {
            letters.push(if rest & 0b11 == 0b01 {
                Letter::A
            } else {
                Letter::B
            });
            rest >>= 2;
        }
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.chars()
            .enumerate()
            .map(|(pos, ch)| match ch {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                _ => Err(Error::InvalidLetter { ch, pos }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Running-height statistics of a word.
///
/// Positions are letter counts: the point after `k` letters is position `k`,
/// the origin is position 0. `deltas[k - 1]` is the height at position `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixProfile {
    pub deltas: Vec<i64>,
    pub total: i64,
    pub argmax_first: usize,
    pub argmax_last: usize,
    pub argmin_first: usize,
    pub argmin_last: usize,
}

impl PrefixProfile {
    /// Extremes are taken over positions `1..=|w|`; for the empty word all
    /// four are 0.
    pub fn of(w: &Word) -> PrefixProfile {
        let mut deltas = Vec::with_capacity(w.len());
        let mut h = 0i64;
        let (mut max, mut min) = (i64::MIN, i64::MAX);
        let (mut argmax_first, mut argmax_last, mut argmin_first, mut argmin_last) = (0, 0, 0, 0);
        for (i, l) in w.letters().iter().enumerate() {
            h += l.step();
            deltas.push(h);
            let pos = i + 1;
            if h > max {
                max = h;
                argmax_first = pos;
            }
            if h == max {
                argmax_last = pos;
            }
            if h < min {
                min = h;
                argmin_first = pos;
            }
            if h == min {
                argmin_last = pos;
            }
        }
        PrefixProfile {
            deltas,
            total: h,
            argmax_first,
            argmax_last,
            argmin_first,
            argmin_last,
        }
    }

    pub fn max(&self) -> Option<i64> {
        self.deltas.iter().copied().max()
    }

    pub fn min(&self) -> Option<i64> {
        self.deltas.iter().copied().min()
    }
}

/// Whether `f`, once sorted, is a weakly increasing `g` with `g_i < i`
/// (1-based).
pub fn is_parking_configuration(f: &[i64]) -> bool {
    let mut g = f.to_vec();
    g.sort_unstable();
    g.iter().enumerate().all(|(i, &gi)| gi < (i as i64) + 1)
}
