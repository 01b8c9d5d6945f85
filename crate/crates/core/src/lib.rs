//! Minimal braid lengths of knots, per strand count.
//!
//! For a knot K, b_n(K) is the least length of an n-strand braid word whose
//! closure is K, and b_n'(K) = b_n(K) − n. This crate computes these values
//! with certificates:
//!
//! * [`braid`]: words, Markov moves, occurrence strings, canonical forms;
//! * [`invariants`]: Alexander (Burau) and Jones (Temperley–Lieb) polynomials;
//! * [`table`]: a validated knot table and fingerprint identification;
//! * [`search`]: exhaustive canonicalized enumeration, witnesses and
//!   exclusion certificates;
//! * [`deduce`]: inference rules and the [`deduce::solve`] driver;
//! * [`cli`]: the `braidrank` command line.
//!
//! ```
//! use braidrank::{fingerprint, BraidWord, KnotTable};
//!
//! let w: BraidWord = "B3:1,-2,1,-2".parse().unwrap();
//! let id = KnotTable::bundled().identify(&fingerprint(&w).unwrap());
//! assert!(id.contains("4_1"));
//! ```

pub mod braid;
pub mod cli;
pub mod deduce;
pub mod error;
pub mod invariants;
pub mod poly;
pub mod search;
pub mod table;

pub use braid::{parse_word, BraidWord, OccurrenceString, Permutation, WordClass};
pub use deduce::{solve, BPrimeProfile, Certificate, SolveOptions};
pub use error::{Error, Result};
pub use invariants::{fingerprint, KnotFingerprint, SurfaceData};
pub use poly::LaurentPoly;
pub use search::{Budget, ExclusionCertificate, SearchConstraints, Witness};
pub use table::{Identification, KnotRecord, KnotTable};
