//! Permutations `α`, `β`, `γ` on Dyck words, the structure of the fixed
//! points of `γ`, their generator from seed arrays and its inverse, and
//! exhaustive enumeration tools to check all of it against brute force.
//!
//! ```
//! use gammapath::{gamma, gen_gamma_path, decompile, SeedArray, Word};
//!
//! let seed: SeedArray = "1,1,1".parse().unwrap();
//! let fixed = gen_gamma_path(&seed).dn_word();
//! assert_eq!(gamma(&fixed).unwrap(), fixed);
//! assert_eq!(decompile(&fixed).unwrap(), seed);
//! # let _: Word = fixed;
//! ```

pub mod census;
pub mod error;
pub mod perm;
pub mod render;
pub mod structure;
pub mod word;

pub use census::{catalan, census, cross_check, seed_sweep, CensusRow, CrossCheckReport, DyckWords};
pub use error::{Error, Result};
pub use perm::{
    alpha, beta, gamma, gamma_direct, gamma_orbit, is_alpha_fixed, is_beta_fixed, is_gamma_fixed,
    principal_prefix, principal_suffix, two_palindrome_splits, OrbitReport, PalindromeSplit,
};
pub use render::render;
pub use structure::{
    analyze, corollary_split, decompile, degree, dn_form, dyck_body, gen_gamma_path, peel,
    predicted_length, BarSide, CoreSplit, CorollarySplit, GammaDecomposition, GenerationTrace,
    Part, PeelResult, SeedArray, TraceLevel,
};
pub use word::{is_parking_configuration, Letter, Membership, PrefixProfile, Word};
