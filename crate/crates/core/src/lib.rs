//! Finite domain theory through rough-set approximation spaces.
//!
//! A generalized approximation space `(U, R)` with a family `𝓕` of finite
//! subsets is a CF-approximation space when every finite piece of an upper
//! approximation `R̄(F)` can be re-covered inside it. Its CF-closed sets,
//! ordered by inclusion, form a domain; on finite data that domain is any
//! finite poset, and every finite poset arises this way.
//!
//! The crate implements the objects and constructions at desk scale:
//!
//! - [`order`]: finite posets, way-below, monotone maps, approximate identities.
//! - [`ga_space`]: the upper and lower approximation operators.
//! - [`cf_space`]: the CF condition and the closed-set domain.
//! - [`approx_rel`]: approximable relations and their maps between domains.
//! - [`fs_space`]: FS and TB witnesses.
//! - [`represent`]: posets to spaces and back.
//! - [`category`]: the two functors, with law and equivalence checks.
//!
//! Every finite poset is an algebraic FS-domain. The FS/BF predicates here
//! therefore always hold for *some* witness, and the library is a witness
//! builder and checker rather than a classifier.
//!
//! ```
//! use std::sync::Arc;
//! use roughdomain::order::FinitePoset;
//! use roughdomain::represent::closed_sets_iso;
//!
//! let v = Arc::new(FinitePoset::from_labeled_covers(&["⊥", "a", "b"], &[("⊥", "a"), ("⊥", "b")]).unwrap());
//! let iso = closed_sets_iso(&v).unwrap();
//! assert_eq!(iso.closed.len(), 3);
//! ```

pub mod approx_rel;
pub mod category;
pub mod cf_space;
pub mod cli;
pub mod config;
pub mod corpus;
pub mod dot;
pub mod error;
pub mod fs_space;
pub mod ga_space;
pub mod io;
pub mod order;
pub mod represent;
pub mod subset;

pub use error::{Error, Result};
