//! Construction and exact verification of almost resolvable cycle systems,
//! Cayley graph cycle factorizations and Hamilton-Waterloo 2-factorizations.
//!
//! Every builder returns a [`model::Certificate`] that has already passed
//! [`verify::check_certificate`].

pub mod error;
pub mod format;
pub mod model;
pub mod verify;
pub mod arcs;
pub mod search;
pub mod cayley;
pub mod compose;

pub use error::{Error, Result};
