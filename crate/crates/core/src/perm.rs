//! The involutions `α`, `β` and their composition `γ = α∘β` on `D_n`,
//! together with fixed-point predicates and orbit extraction.

use serde::Serialize;

use crate::census::catalan;
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

fn require_dn(w: &Word) -> Result<()> {
    if w.in_dn() {
        Ok(())
    } else {
        Err(Error::NotInD(w.clone()))
    }
}

/// Length of the shortest prefix whose balance is maximal among all
/// non-empty prefixes.
pub fn principal_prefix(w: &Word) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(w.profile().argmax_first)
}

/// Length of the shortest suffix whose balance is minimal among all suffixes:
/// the suffix that starts right after the last highest point of the path.
pub fn principal_suffix(w: &Word) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(w.len() - w.profile().argmax_last)
}

/// The unique conjugate of `mirror(w)` lying in `D_n`.
pub fn alpha(w: &Word) -> Result<Word> {
    require_dn(w)?;
    let (_, rotated) = w.mirror().cycle_lemma_rotation()?;
    Ok(rotated)
}

/// `Sym` of the Dyck part, followed by the trailing `b`.
pub fn beta(w: &Word) -> Result<Word> {
    require_dn(w)?;
    let body = w.without_last().expect("D_n words are non-empty");
    Ok(body.sym().push(Letter::B))
}

pub fn gamma(w: &Word) -> Result<Word> {
    alpha(&beta(w)?)
}

/// γ through the closed form `complement(v)·b·complement(u)` where `w = u·v·b`
/// and `u` is the principal prefix.
pub fn gamma_direct(w: &Word) -> Result<Word> {
    require_dn(w)?;
    if w.len() == 1 {
        return Ok(w.clone());
    }
    let k = principal_prefix(w)?;
    let u = w.prefix(k);
    let v = w.factor(k, w.len() - 1);
    Ok(v.complement().push(Letter::B).concat(&u.complement()))
}

pub fn is_alpha_fixed(w: &Word) -> Result<bool> {
    Ok(alpha(w)? == *w)
}

pub fn is_beta_fixed(w: &Word) -> Result<bool> {
    require_dn(w)?;
    Ok(w.prefix(w.len() - 1).is_symmetric())
}

pub fn is_gamma_fixed(w: &Word) -> Result<bool> {
    Ok(gamma(w)? == *w)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PalindromeSplit {
    pub split_index: usize,
    pub left: Word,
    pub right: Word,
}

/// Every split `w = left·right` into two non-empty palindromes, by
/// increasing split index.
pub fn two_palindrome_splits(w: &Word) -> Vec<PalindromeSplit> {
    (1..w.len())
        .filter_map(|k| {
            let left = w.prefix(k);
            let right = w.suffix(w.len() - k);
            (left.is_palindrome() && right.is_palindrome()).then_some(PalindromeSplit {
                split_index: k,
                left,
                right,
            })
        })
        .collect()
}

/// A γ-cycle in iteration order, starting from the queried word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub elements: Vec<Word>,
    pub cardinality: usize,
}

pub fn gamma_orbit(w: &Word) -> Result<OrbitReport> {
    require_dn(w)?;
    let n = (w.len() - 1) / 2;
    let cap = catalan(n as u64).unwrap_or(u64::MAX);
    let mut elements = vec![w.clone()];
    let mut current = gamma(w)?;
    while current != *w {
        if elements.len() as u64 >= cap {
            return Err(Error::OrbitOverflow {
                word: w.clone(),
                cap,
            });
        }
        let next = gamma(&current)?;
        elements.push(current);
        current = next;
    }
    let cardinality = elements.len();
    Ok(OrbitReport {
        elements,
        cardinality,
    })
}
