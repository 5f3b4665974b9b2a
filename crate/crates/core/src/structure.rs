//! Anatomy and generation of the fixed points of `γ`.
//!
//! A fixed point is handled in two views: the symmetric Dyck word `w` (even
//! length) produced by the generator, and its `D_n` extension `w·b` on which
//! `γ` acts. Every entry point accepts either view and normalizes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{gamma, principal_prefix};
use crate::word::{Letter, Word};

/// The seed `t = (t_0, …, t_n)`: `t_0 >= 1`, every other entry `>= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct SeedArray(Vec<usize>);

impl SeedArray {
    pub fn new(entries: Vec<usize>) -> Result<SeedArray> {
        match entries.first() {
            None => Err(Error::InvalidSeed("seed array is empty".into())),
            Some(0) => Err(Error::InvalidSeed("t_0 must be at least 1".into())),
            Some(_) => Ok(SeedArray(entries)),
        }
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Index of the last entry.
    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    /// The seed restricted to `t_0 ..= t_i`.
    pub fn truncated(&self, i: usize) -> SeedArray {
        SeedArray(self.0[..=i].to_vec())
    }

    pub fn extended(&self, entry: usize) -> SeedArray {
        let mut entries = self.0.clone();
        entries.push(entry);
        SeedArray(entries)
    }
}

impl TryFrom<Vec<usize>> for SeedArray {
    type Error = Error;
    fn try_from(entries: Vec<usize>) -> Result<SeedArray> {
        SeedArray::new(entries)
    }
}

impl From<SeedArray> for Vec<usize> {
    fn from(seed: SeedArray) -> Vec<usize> {
        seed.0
    }
}

impl fmt::Display for SeedArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses the text form `1,1,1`.
impl FromStr for SeedArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<SeedArray> {
        let entries = s
            .split(',')
            .map(|part| {
                if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::InvalidSeed(format!("malformed entry {part:?}")));
                }
                part.parse::<usize>()
                    .map_err(|e| Error::InvalidSeed(format!("entry {part:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SeedArray::new(entries)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Part {
    /// Even degree: starts from the pyramid `a^t0 b^t0`.
    A,
    /// Odd degree: starts from the valley `b^t0 a^t0`.
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceLevel {
    pub i: usize,
    pub u: Word,
    pub w: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenerationTrace {
    pub part: Part,
    pub levels: Vec<TraceLevel>,
    pub output: Word,
}

impl GenerationTrace {
    /// The `D_n` fixed point `output·b`.
    pub fn dn_word(&self) -> Word {
        self.output.clone().push(Letter::B)
    }
}

/// Builds the symmetric Dyck word of the given seed, keeping every
/// intermediate `(u_i, w_i)`.
pub fn gen_gamma_path(seed: &SeedArray) -> GenerationTrace {
    let t = seed.entries();
    let degree = seed.degree();
    let part = if degree % 2 == 0 { Part::A } else { Part::B };
    let base = match part {
        Part::A => Letter::A,
        Part::B => Letter::B,
    };

    let mut u = Word::power(base, t[0] - 1);
    let mut w = Word::power(base, t[0]).concat(&Word::power(base.flip(), t[0]));
    let mut levels = vec![TraceLevel {
        i: 0,
        u: u.clone(),
        w: w.clone(),
    }];

    for (i, &reps) in t.iter().enumerate().skip(1) {
        // part A wraps with `a` on even levels, part B on odd levels
        let wrap = if (i % 2 == 0) == (part == Part::A) {
            Letter::A
        } else {
            Letter::B
        };
        let unit = Word::power(wrap, 1).concat(&w);
        u = u.sym().concat(&unit.repeat(reps));
        w = u
            .clone()
            .push(wrap)
            .concat(&w)
            .push(wrap.flip())
            .concat(&u.sym());
        levels.push(TraceLevel {
            i,
            u: u.clone(),
            w: w.clone(),
        });
    }

    GenerationTrace {
        part,
        levels,
        output: w,
    }
}

/// Length of the generator output, from the recurrence
/// `p(0) = 2 t_0`, `p(k+1) = p(0) + p(k) + 2 Σ_{i=0..k} t_{i+1} (p(i) + 1)`.
///
/// Saturates at `u64::MAX`.
pub fn predicted_length(seed: &SeedArray) -> u64 {
    let t = seed.entries();
    let mut p: Vec<u64> = Vec::with_capacity(t.len());
    p.push((t[0] as u64).saturating_mul(2));
    // running Σ t_{i+1} (p(i) + 1)
    let mut acc: u64 = 0;
    for k in 0..t.len() - 1 {
        acc = acc.saturating_add((t[k + 1] as u64).saturating_mul(p[k].saturating_add(1)));
        let next = p[0].saturating_add(p[k]).saturating_add(acc.saturating_mul(2));
        p.push(next);
    }
    *p.last().unwrap()
}

/// The Dyck body of either view of a fixed point candidate.
pub fn dyck_body(w: &Word) -> Result<Word> {
    if w.is_dyck() {
        Ok(w.clone())
    } else if w.in_dn() {
        Ok(w.without_last().expect("non-empty"))
    } else {
        Err(Error::NotDyckOrDn(w.clone()))
    }
}

/// The `D_n` view of either view of a fixed point candidate.
pub fn dn_form(w: &Word) -> Result<Word> {
    Ok(dyck_body(w)?.push(Letter::B))
}

fn require_fixed(dn: &Word) -> Result<()> {
    let image = gamma(dn)?;
    if image == *dn {
        Ok(())
    } else {
        Err(Error::NotFixed {
            word: dn.clone(),
            image,
        })
    }
}

/// The split `v = v1·a·v2` of a non-empty core.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreSplit {
    pub v1: Word,
    pub v2: Word,
    /// `u = v2·(a·v)^reps`.
    pub reps: usize,
    /// Height of the last point of `v1`.
    pub m1: i64,
    /// Height of the first point of `v2`, right after the rise joining it to `v1`.
    pub m2: i64,
}

/// `w = u·a·v·b·Sym(u)·b` for a fixed point `w`, with `u·a` its principal
/// prefix and `b·Sym(u)·b` its principal suffix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaDecomposition {
    pub source: Word,
    pub u: Word,
    pub v: Word,
    pub max_level: i64,
    /// `None` exactly when `v` is empty (the pyramid case).
    pub core: Option<CoreSplit>,
}

impl GammaDecomposition {
    pub fn reconstruct(&self) -> Word {
        self.u
            .clone()
            .push(Letter::A)
            .concat(&self.v)
            .push(Letter::B)
            .concat(&self.u.sym())
            .push(Letter::B)
    }
}

pub fn analyze(w: &Word) -> Result<GammaDecomposition> {
    let source = dn_form(w)?;
    require_fixed(&source)?;
    let structural = |detail: &str| Error::Structure {
        word: source.clone(),
        detail: detail.to_string(),
    };

    let k = principal_prefix(&source)?;
    if source.letters()[k - 1] != Letter::A || 2 * k + 1 > source.len() {
        return Err(structural("principal prefix does not end with a rise"));
    }
    let u = source.prefix(k - 1);
    let v = source.factor(k, source.len() - k - 1);
    let heights = source.heights();
    let max_level = heights[k];

    let mut decomposition = GammaDecomposition {
        source: source.clone(),
        u,
        v,
        max_level,
        core: None,
    };
    if decomposition.reconstruct() != source {
        return Err(structural("tail is not b·Sym(u)·b"));
    }
    if decomposition.v.is_empty() {
        return Ok(decomposition);
    }

    let v = &decomposition.v;
    let unit = Word::power(Letter::A, 1).concat(v);
    let mut rest = decomposition.u.clone();
    let mut reps = 0;
    while rest.ends_with(&unit) {
        rest = rest.prefix(rest.len() - unit.len());
        reps += 1;
    }
    let v2 = rest;
    if v2.len() >= v.len() || !v.ends_with(&Word::power(Letter::A, 1).concat(&v2)) {
        return Err(structural("u is not of the form v2·(a·v)^t with v = v1·a·v2"));
    }
    let v1 = v.prefix(v.len() - v2.len() - 1);
    let m1 = heights[k + v1.len()];
    let m2 = heights[k + v1.len() + 1];
    decomposition.core = Some(CoreSplit {
        v1,
        v2,
        reps,
        m1,
        m2,
    });
    Ok(decomposition)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BarSide {
    /// `u2·complement(u1)` is a palindrome.
    LeftBar,
    /// `complement(u2)·u1` is a palindrome.
    RightBar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollarySplit {
    pub u1: Word,
    pub u2: Word,
    pub variant: BarSide,
}

/// First factorization `u·a = u1·u2` (by increasing `|u1|`) for which
/// `u2·ū1` or `ū2·u1` is a palindrome.
pub fn corollary_split(w: &Word) -> Result<CorollarySplit> {
    let dn = dn_form(w)?;
    require_fixed(&dn)?;
    let k = principal_prefix(&dn)?;
    let ua = dn.prefix(k);
    for i in 0..=k {
        let u1 = ua.prefix(i);
        let u2 = ua.suffix(k - i);
        if u2.concat(&u1.complement()).is_palindrome() {
            return Ok(CorollarySplit {
                u1,
                u2,
                variant: BarSide::LeftBar,
            });
        }
        if u2.complement().concat(&u1).is_palindrome() {
            return Ok(CorollarySplit {
                u1,
                u2,
                variant: BarSide::RightBar,
            });
        }
    }
    Err(Error::Structure {
        word: dn,
        detail: "no split of the principal prefix has a palindromic barred rearrangement".into(),
    })
}

/// `w = x·z·Sym(x)` cut at the leftmost and rightmost highest points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeelResult {
    pub x: Word,
    pub z: Word,
    pub child: Word,
}

pub fn peel(w: &Word) -> Result<PeelResult> {
    let body = dyck_body(w)?;
    require_fixed(&body.clone().push(Letter::B))?;
    peel_fixed(&body)
}

fn peel_fixed(body: &Word) -> Result<PeelResult> {
    if body.is_pyramid() {
        return Err(Error::Pyramid(body.clone()));
    }
    let profile = body.profile();
    let (first, last) = (profile.argmax_first, profile.argmax_last);
    let x = body.prefix(first);
    let z = body.factor(first, last);
    if body.suffix(body.len() - last) != x.sym() {
        return Err(Error::Structure {
            word: body.clone(),
            detail: "the part after the last maximum is not Sym(x)".into(),
        });
    }
    let child = z.complement();
    Ok(PeelResult { x, z, child })
}

/// Recovers the seed that generates a fixed point by peeling down to the
/// pyramid and reading each `t_i` off the length of `x`.
pub fn decompile(w: &Word) -> Result<SeedArray> {
    let body = dyck_body(w)?;
    if body.is_empty() {
        return Err(Error::EmptyWord);
    }
    require_fixed(&body.clone().push(Letter::B))?;

    // (|x|, |child|) per peel, outermost first
    let mut peels = Vec::new();
    let mut current = body;
    while !current.is_pyramid() {
        let p = peel_fixed(&current)?;
        peels.push((p.x.len(), p.child.len()));
        current = p.child;
    }

    let t0 = current.len() / 2;
    let mut entries = vec![t0];
    let mut prev_u_len = t0 as i64 - 1;
    for (level, &(x_len, child_len)) in peels.iter().rev().enumerate() {
        let numerator = x_len as i64 - 1 - prev_u_len;
        let denominator = child_len as i64 + 1;
        if numerator < 0 || numerator % denominator != 0 {
            return Err(Error::NonIntegralSeed {
                level: level + 1,
                numerator,
                denominator,
            });
        }
        entries.push((numerator / denominator) as usize);
        prev_u_len = x_len as i64 - 1;
    }
    SeedArray::new(entries)
}

pub fn degree(w: &Word) -> Result<usize> {
    Ok(decompile(w)?.degree())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn seed(s: &str) -> SeedArray {
        s.parse().unwrap()
    }

    const EXAMPLE_W2: &str = "abaababbabaabaababbabaababbabbabaababbab";

    #[test]
    fn seed_parsing() {
        assert_eq!(seed("1,1,1").entries(), &[1, 1, 1]);
        assert_eq!(seed("1,1,1").to_string(), "1,1,1");
        assert!(matches!("0,1".parse::<SeedArray>(), Err(Error::InvalidSeed(_))));
        for bad in ["", "1,", ",1", "1, 2", "-1", "1;2", "x"] {
            assert!(bad.parse::<SeedArray>().is_err(), "{bad:?}");
        }
        assert!(SeedArray::new(vec![]).is_err());
    }

    #[test]
    fn worked_generation() {
        let trace = gen_gamma_path(&seed("1,1,1"));
        assert_eq!(trace.part, Part::A);
        let l = &trace.levels;
        assert_eq!((l[0].u.clone(), l[0].w.clone()), (Word::empty(), w("ab")));
        assert_eq!((l[1].u.clone(), l[1].w.clone()), (w("bab"), w("babbabaaba")));
        assert_eq!(l[2].u, w("abaababbabaaba"));
        assert_eq!(l[2].w, w(EXAMPLE_W2));
        assert_eq!(trace.output, w(EXAMPLE_W2));
        assert_eq!(
            trace.dn_word(),
            w("abaababbabaabaababbabaababbabbabaababbabb")
        );
    }

    #[test]
    fn small_generations() {
        for k in 1..6 {
            assert_eq!(gen_gamma_path(&SeedArray::new(vec![k]).unwrap()).output, Word::pyramid(k));
        }
        let trace = gen_gamma_path(&seed("1,1"));
        assert_eq!(trace.part, Part::B);
        assert_eq!(trace.levels[0].w, w("ba"));
        assert_eq!(trace.levels[1].u, w("aba"));
        assert_eq!(trace.output, w("abaababbab"));
        assert_eq!(gen_gamma_path(&seed("2,0")).output, w("aabbaabb"));
        assert_eq!(gen_gamma_path(&seed("1,0")).output, w("abab"));
        assert_eq!(gen_gamma_path(&seed("1,0,0,0")).output, w("abababab"));
    }

    #[test]
    fn predicted_length_examples() {
        assert_eq!(predicted_length(&seed("1,1,1")), 40);
        assert_eq!(predicted_length(&seed("1,1")), 10);
        assert_eq!(predicted_length(&seed("1")), 2);
        assert_eq!(predicted_length(&seed("4")), 8);
        assert_eq!(predicted_length(&seed("2,0")), 8);
        assert_eq!(predicted_length(&seed("1000000000000,1000000000000,1000000000000,1000000000000")), u64::MAX);
    }

    #[test]
    fn analyze_examples() {
        let d = analyze(&w("aaabbbb")).unwrap();
        assert_eq!((d.u.clone(), d.v.clone(), d.max_level), (w("aa"), Word::empty(), 3));
        assert!(d.core.is_none());

        let d = analyze(&w("abababb")).unwrap();
        assert_eq!((d.u.clone(), d.v.clone(), d.max_level), (Word::empty(), w("baba"), 1));
        let core = d.core.unwrap();
        assert_eq!((core.v1, core.v2, core.reps), (w("bab"), Word::empty(), 0));
        assert_eq!((core.m1, core.m2), (0, 1));

        let d = analyze(&w(EXAMPLE_W2)).unwrap();
        assert_eq!(d.u, w("abaababbabaaba"));
        assert_eq!(d.v, w("babbabaaba"));
        assert_eq!(d.v.delta(), 0);
        assert_eq!(d.max_level, 3);
        let core = d.core.unwrap();
        assert_eq!((core.v1, core.v2, core.reps), (w("babbab"), w("aba"), 1));
        assert_eq!((core.m1, core.m2), (1, 2));
    }

    #[test]
    fn analyze_rejects_moving_words() {
        assert_eq!(
            analyze(&w("aababbb")),
            Err(Error::NotFixed {
                word: w("aababbb"),
                image: w("abaabbb")
            })
        );
        assert!(matches!(analyze(&w("abba")), Err(Error::NotDyckOrDn(_))));
    }

    #[test]
    fn corollary_examples() {
        // the fixed point with u = v2 and reps = 0 whose principal prefix is ababaababaa
        let fig = gen_gamma_path(&seed("1,0,2,0")).output;
        assert!(fig.starts_with(&w("ababaababaa")));
        let split = corollary_split(&fig).unwrap();
        assert_eq!(split.u2, w("abaababaa"));
        assert_eq!(split.u1.mirror(), w("ba"));
        assert_eq!(split.variant, BarSide::LeftBar);

        let split = corollary_split(&w("abb")).unwrap();
        assert_eq!((split.u1, split.u2, split.variant), (Word::empty(), w("a"), BarSide::LeftBar));

        let split = corollary_split(&w("aabbaabbb")).unwrap();
        assert_eq!(split.u1.concat(&split.u2), w("aa"));

        assert!(matches!(corollary_split(&w("aababbb")), Err(Error::NotFixed { .. })));
    }

    #[test]
    fn peel_examples() {
        let p = peel(&w("abab")).unwrap();
        assert_eq!((p.x, p.z, p.child), (w("a"), w("ba"), w("ab")));
        let p = peel(&w("aabbaabb")).unwrap();
        assert_eq!((p.x, p.z, p.child), (w("aa"), w("bbaa"), w("aabb")));
        let p = peel(&w(EXAMPLE_W2)).unwrap();
        assert_eq!(p.x, w("abaababbabaabaa"));
        assert_eq!(p.z, w("babbabaaba"));
        assert_eq!(p.child, w("abaababbab"));
        assert_eq!(p.child, gen_gamma_path(&seed("1,1")).output);

        assert_eq!(peel(&w("aaabbb")), Err(Error::Pyramid(w("aaabbb"))));
        assert!(matches!(peel(&w("aababb")), Err(Error::NotFixed { .. })));
    }

    #[test]
    fn decompile_examples() {
        assert_eq!(decompile(&w(EXAMPLE_W2)), Ok(seed("1,1,1")));
        assert_eq!(decompile(&Word::pyramid(5)), Ok(seed("5")));
        assert_eq!(decompile(&w("abababab")), Ok(seed("1,0,0,0")));
        // the D_n view is accepted too
        assert_eq!(decompile(&w("ababb")), Ok(seed("1,0")));
        assert!(matches!(decompile(&w("aababb")), Err(Error::NotFixed { .. })));
        assert_eq!(decompile(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree(&w("aabb")), Ok(0));
        assert_eq!(degree(&w(EXAMPLE_W2)), Ok(2));
        assert_eq!(degree(&w("abaababbab")), Ok(1));
        assert_eq!(degree(&w("ababab")), Ok(2));
    }

    #[test]
    fn trace_serializes_to_the_documented_shape() {
        let trace = gen_gamma_path(&seed("1,1"));
        let json = serde_json::to_value(&trace).unwrap();
        assert_eq!(json["part"], "B");
        assert_eq!(json["levels"][1]["i"], 1);
        assert_eq!(json["levels"][1]["u"], "aba");
        assert_eq!(json["output"], "abaababbab");
    }

    #[test]
    fn seed_serde_enforces_invariants() {
        assert_eq!(serde_json::to_string(&seed("1,0,2")).unwrap(), "[1,0,2]");
        assert!(serde_json::from_str::<SeedArray>("[0,1]").is_err());
        assert_eq!(serde_json::from_str::<SeedArray>("[3]").unwrap(), seed("3"));
    }
}
