//! Schubert structure constants `c_{x,y}^w` for products whose Richardson
//! variety is stable under the Levi subgroup `GL(p) × GL(q)` of `GL(p+q)`.
//!
//! Such a variety `X_u^v` is an orbit closure indexed by a `(p,q)`-clan.
//! The product `S_{w_0 u} · S_v` is then multiplicity-free: `c^w = 1`
//! exactly when `w` carries the clan to the clan of the dense orbit under
//! the weak-order monoid action, and 0 otherwise.
//!
//! * [`permutation`]: one-line permutations, Bruhat order, codes, reduced words.
//! * [`clan`]: `(p,q)`-clans, their counting functions and orbit dimensions.
//! * [`weak_action`]: the monoid action on clans and the weak-order graph.
//! * [`richardson`]: the pair ↔ clan dictionary and the product rule.
//! * [`oracle`]: an independent polynomial computation of the same products.
//! * [`table1`]: the `S_31425 · S_14253` worked example and its golden table.

pub mod clan;
pub mod error;
pub mod expansion;
pub mod guards;
pub mod oracle;
pub mod permutation;
pub mod richardson;
pub mod table1;
pub mod weak_action;

pub use clan::{dense_clan, enumerate_clans, Clan, Symbol};
pub use error::{Error, Result};
pub use expansion::{ExpansionRecord, SchubertExpansion, Term};
pub use guards::Guards;
pub use permutation::Permutation;
pub use richardson::RichardsonPair;
