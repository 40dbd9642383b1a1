//! Exact Clifford theory for finite groups over finite fields, with a
//! bookkeeping layer that reproduces component-group computations arising
//! from Springer-type correspondences for disconnected groups.
//!
//! The crate is organized bottom-up:
//!
//! * [`ffield`] — arithmetic in GF(p^k), exact linear algebra, polynomial
//!   factorization;
//! * [`grp`] — explicit finite groups, subgroups, cosets and quotients;
//! * [`modrep`] — modules over group algebras and structure-constant
//!   algebras: hom spaces, the meataxe, composition factors, simple modules;
//! * [`clifford`] — induction, restriction, twisting, stabilizers, graded
//!   endomorphism algebras of induced modules and cocycle detection;
//! * [`springer`] — geometric datum files, induction-series sizes, relative
//!   Weyl groups and partition checks;
//! * [`cli`] — the command-line front end.

pub mod error;
pub mod ffield;
pub mod grp;

pub use error::{Error, Result};
