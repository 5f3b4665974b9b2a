//! Exhaustive enumeration: Dyck words, γ-orbit censuses, seed sweeps and the
//! brute-force cross-check of the generator.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::gamma;
use crate::structure::{decompile, gen_gamma_path, predicted_length, SeedArray};
use crate::word::{Letter, Word};

/// Largest semilength whose `D_n` words fit the packed 64-bit key.
pub const MAX_PACKED_SEMILENGTH: usize = 15;

/// `C_n`, or `None` on `u64` overflow.
pub fn catalan(n: u64) -> Option<u64> {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
        if c > u64::MAX as u128 {
            return None;
        }
    }
    Some(c as u64)
}

/// All Dyck words of semilength `n` in lexicographic order (`a < b`).
///
/// Each step rewrites the rightmost `a` that can become `b` and refills the
/// tail with the remaining `a`s first.
#[derive(Debug, Clone)]
pub struct DyckWords {
    n: usize,
    current: Option<Vec<Letter>>,
}

impl DyckWords {
    pub fn new(n: usize) -> DyckWords {
        DyckWords {
            n,
            current: Some(Word::pyramid(n).letters().to_vec()),
        }
    }

    fn advance(&mut self) {
        let Some(letters) = self.current.as_mut() else {
            return;
        };
        // heights[i] is the height before letter i
        let mut heights = Vec::with_capacity(letters.len());
        let mut h = 0i64;
        for l in letters.iter() {
            heights.push(h);
            h += l.step();
        }
        let pivot = (0..letters.len())
            .rev()
            .find(|&i| letters[i] == Letter::A && heights[i] >= 1);
        match pivot {
            None => self.current = None,
            Some(i) => {
                letters[i] = Letter::B;
                let used_a = letters[..i].iter().filter(|&&l| l == Letter::A).count();
                let remaining_a = self.n - used_a;
                for (j, slot) in letters.iter_mut().enumerate().skip(i + 1) {
                    *slot = if j - i <= remaining_a {
                        Letter::A
                    } else {
                        Letter::B
                    };
                }
            }
        }
    }
}

impl Iterator for DyckWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let out = Word::from_letters(self.current.as_ref()?.clone());
        self.advance();
        Some(out)
    }
}

/// Per-semilength statistics of `γ` on `D_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub dyck_count: u64,
    pub fixed_count: u64,
    /// cycle length -> number of cycles of that length
    pub cycles: BTreeMap<usize, u64>,
    /// `D_n` words fixed by `γ`, in lexicographic order.
    pub fixed_words: Vec<Word>,
    pub seeds: BTreeMap<Word, SeedArray>,
}

impl CensusRow {
    pub const CSV_HEADER: &'static str = "n,dyck_count,fixed_count,cycles";

    /// `len:count;len:count`, lengths ascending.
    pub fn cycles_field(&self) -> String {
        self.cycles
            .iter()
            .map(|(len, count)| format!("{len}:{count}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{}",
            self.n,
            self.dyck_count,
            self.fixed_count,
            self.cycles_field()
        )
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("census rows always serialize")
    }
}

fn check_semilength(n: usize) -> Result<()> {
    if (1..=MAX_PACKED_SEMILENGTH).contains(&n) {
        Ok(())
    } else {
        Err(Error::Semilength {
            n,
            min: 1,
            max: MAX_PACKED_SEMILENGTH,
        })
    }
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(f)
}

/// Partitions `D_n` into `γ`-orbits and decompiles every fixed point.
///
/// `γ` images are computed on `jobs` workers; the orbit walk itself is
/// sequential, so the row does not depend on `jobs`.
pub fn census(n: usize, jobs: usize) -> Result<CensusRow> {
    check_semilength(n)?;
    let words: Vec<u64> = DyckWords::new(n)
        .map(|d| d.push(Letter::B).packed())
        .collect::<Result<_>>()?;

    let images: Vec<u64> = with_pool(jobs, || {
        words
            .par_iter()
            .map(|&key| gamma(&Word::from_packed(key)).and_then(|g| g.packed()))
            .collect::<Result<_>>()
    })?;

    let index: HashMap<u64, usize> = words.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let mut visited = vec![false; words.len()];
    let mut cycles = BTreeMap::new();
    for start in 0..words.len() {
        if visited[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !visited[i] {
            visited[i] = true;
            len += 1;
            i = index[&images[i]];
        }
        if i != start {
            return Err(Error::Structure {
                word: Word::from_packed(words[start]),
                detail: "gamma is not a permutation of D_n".into(),
            });
        }
        *cycles.entry(len).or_insert(0) += 1;
    }

    let fixed_words: Vec<Word> = words
        .iter()
        .zip(&images)
        .filter(|(w, g)| w == g)
        .map(|(&w, _)| Word::from_packed(w))
        .collect();
    let seeds = fixed_words
        .iter()
        .map(|w| Ok((w.clone(), decompile(w)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;

    Ok(CensusRow {
        n,
        dyck_count: words.len() as u64,
        fixed_count: fixed_words.len() as u64,
        cycles,
        fixed_words,
        seeds,
    })
}

/// Every seed whose generated word has length at most `max_length`, with that
/// word, in depth-first order (by `t_0`, then by extension).
///
/// Appending an entry never shortens the output, and the output grows with the
/// appended value, so each branch stops at the first entry that overshoots.
pub fn seed_sweep(max_length: u64) -> Vec<(SeedArray, Word)> {
    let mut out = Vec::new();
    let mut stack: Vec<SeedArray> = (1..=(max_length / 2) as usize)
        .rev()
        .map(|t0| SeedArray::new(vec![t0]).expect("t0 >= 1"))
        .collect();
    while let Some(seed) = stack.pop() {
        let mut children = Vec::new();
        for entry in 0.. {
            let child = seed.extended(entry);
            if predicted_length(&child) > max_length {
                break;
            }
            children.push(child);
        }
        let word = gen_gamma_path(&seed).output;
        out.push((seed, word));
        stack.extend(children.into_iter().rev());
    }
    out
}

/// Result of comparing brute-force fixed points with the generator's image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub n: usize,
    /// `γ`-fixed words of `D_n`, found by scanning every Dyck word.
    pub brute_force: BTreeSet<Word>,
    /// `output·b` for every swept seed with output length `2n`.
    pub generated: BTreeSet<Word>,
    pub missing_from_generator: Vec<Word>,
    pub not_fixed: Vec<Word>,
}

impl CrossCheckReport {
    pub fn is_equal(&self) -> bool {
        self.missing_from_generator.is_empty() && self.not_fixed.is_empty()
    }
}

pub fn cross_check(n: usize, jobs: usize) -> Result<CrossCheckReport> {
    check_semilength(n)?;
    let candidates: Vec<Word> = DyckWords::new(n).map(|d| d.push(Letter::B)).collect();
    let flags: Vec<bool> = with_pool(jobs, || {
        candidates
            .par_iter()
            .map(|w| gamma(w).map(|g| g == *w))
            .collect::<Result<_>>()
    })?;
    let brute_force: BTreeSet<Word> = candidates
        .into_iter()
        .zip(flags)
        .filter_map(|(w, fixed)| fixed.then_some(w))
        .collect();
    let generated: BTreeSet<Word> = seed_sweep(2 * n as u64)
        .into_iter()
        .filter(|(_, w)| w.len() == 2 * n)
        .map(|(_, w)| w.push(Letter::B))
        .collect();
    let missing_from_generator = brute_force.difference(&generated).cloned().collect();
    let not_fixed = generated.difference(&brute_force).cloned().collect();
    Ok(CrossCheckReport {
        n,
        brute_force,
        generated,
        missing_from_generator,
        not_fixed,
    })
}
