//! Combinatorics of highest weight modules for `sl(n)`: Robinson-Schensted
//! style insertion of weights, Gelfand-Kirillov dimension, Kazhdan-Lusztig
//! polynomials and cells for finite Coxeter groups, and labels for the
//! associated varieties of simple highest weight modules.
//!
//! The crate is organised bottom-up:
//!
//! - [`coxcore`]: permutations, the dihedral model, Bruhat order and the
//!   group-model contract consumed by the KL engine.
//! - [`tableaux`]: insertion tableaux of sequences, permutations and weights.
//! - [`klengine`]: KL polynomials, `mu` coefficients and cell partitions.
//! - [`modinv`]: GK dimension and the characterizations of minimality.
//! - [`varieties`]: Steinberg orbits, orbital-variety labels, Richardson data.
//! - [`verify`]: exhaustive and sampled cross-checks used by the CLI.

pub mod coxcore;
pub mod error;
pub mod klengine;
pub mod modinv;
pub mod tableaux;
pub mod varieties;
pub mod verify;
pub mod weight;

pub use error::{Error, Result};

pub(crate) fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(
    value: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(value)
}
