//! Exact Hopf algebras of quasi-symmetric functions, noncommutative symmetric
//! functions and rooted trees, with a truncation-based multiple zeta value
//! engine for numerically certifying identities.

pub mod cli;
pub mod composition;
pub mod error;
pub mod expr;
pub mod hopf;
pub mod hopf_trees;
pub mod linalg;
pub mod lincomb;
pub mod mzv;
pub mod qsym;
pub mod series;
pub mod sym;
pub mod trees;
pub mod verify;
pub mod words;

pub use composition::{lyndon_words, Composition, Partition};
pub use error::{Error, Result};
pub use hopf::{Elem, GradedHopf};
pub use lincomb::{LinComb, Rational};
pub use qsym::{NSym, NSymElement, QSym, QSymElement};
pub use series::{expand_truncated, TruncatedPoly};
pub use sym::{abelianize, SymBasis, SymElement};
pub use hopf_trees::{HFElement, HKElement, TElement, GL, HF, HK};
pub use mzv::{verify_relation, zeta_of_lincomb, zeta_truncated, RelationReport, ZetaValue};
pub use trees::{Forest, PlanarForest, PlanarTree, RootedTree};
pub use words::{AdmissibleWord, Letter, Word};
