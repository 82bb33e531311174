//! Decides whether an irreducible rational quintic is solvable by radicals
//! and classifies its Galois group as `C5`/`D5`, `F5`, `A5` or `S5`.
//!
//! The exact pipeline normalizes the quintic, computes the invariants
//! `J4, J8, J12` of the associated binary form, builds the resolvent sextic
//! from them and looks for a rational root. The discriminant square test
//! distinguishes the even groups. A floating-point [`oracle`] recomputes the
//! resolvent from numerically located roots.
//!
//! ```
//! use quintic::{classify, GroupLabel, UniPoly};
//!
//! let p = UniPoly::from_ints(&[-2, 0, 0, 0, 0, 1]); // x^5 - 2
//! let verdict = classify(&p).unwrap();
//! assert_eq!(verdict.group, GroupLabel::F5);
//! assert!(verdict.solvable);
//! ```

pub mod cli;
pub mod error;
pub mod galois;
pub mod invariants;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod selftest;

pub use error::{Error, Result};
pub use galois::{classify, is_solvable, solvability_certificate, GaloisVerdict, GroupLabel};
pub use invariants::{resolvent_sextic, JInvariants, MonicQuintic, ResolventSextic};
pub use poly::{discriminant, resultant, UniPoly};
pub use rational::Rational;
