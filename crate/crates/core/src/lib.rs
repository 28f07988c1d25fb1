//! Exact Stanley depth and fdepth of quotients `I/J` of monomial ideals.
//!
//! The module `I/J` is encoded by its characteristic poset: the exponents
//! `c ≤ g` with `x^c ∈ I \ J`. Interval partitions of that poset correspond
//! to Stanley decompositions, and ordered partitions to prime filtrations,
//! so both invariants reduce to searches over interval partitions.
//!
//! ```
//! use stanley_core::{families::FamilySpec, families::instantiate, search};
//!
//! let m3 = instantiate(&FamilySpec::maximal(3)).unwrap();
//! let budget = search::SearchBudget::default();
//! assert_eq!(search::sdepth_exact(&m3, None, &budget).unwrap().value, 2);
//! assert_eq!(search::fdepth_exact(&m3, None, &budget).unwrap().value, 1);
//! ```

pub mod bitset;
pub mod decomp;
pub mod error;
pub mod families;
pub mod format;
pub mod ideal;
pub mod par;
pub mod poset;
pub mod search;

pub use decomp::{mci_partition, Partition, StanleyDecomposition, StanleySpace, Verdict};
pub use error::{Error, Result};
pub use ideal::{ExponentVector, MonomialIdeal, QuotientPair};
pub use poset::{CharacteristicPoset, Interval};
pub use search::{DepthResult, DepthStatus, SearchBudget};
