//! Sutured Floer homology and the contact class of a partial open book.
//!
//! This crate computes the sutured Floer homology `SFH(-M,-Γ)` of a balanced
//! sutured 3-manifold presented by a *partial open book decomposition*
//! `(S, R₊(Γ), h)`, together with the contact class `EH(M,Γ,ξ)`, entirely
//! combinatorially and over the two-element field.
//!
//! The pipeline is:
//!
//! 1. [`surface`] — oriented surfaces built from convex polygons with side
//!    identifications; arcs and closed curves as chord chains; exact
//!    arrangements (crossings, segments, regions with Euler data).
//! 2. [`openbook`] — the partial open book model: page labels, basis arcs,
//!    pushoffs, Dehn twists, stabilization, arc slides, bypass attachments,
//!    and the doubled sutured Heegaard diagram `(Σ, β, α)`.
//! 3. [`floer`] — generators, integer domains, periodic domains and weak
//!    admissibility, the Lipshitz index, the combinatorial differential for
//!    nice diagrams with a brute-force oracle, homology and the relative
//!    Spin^c splitting.
//! 4. [`contact`] — the distinguished cycle, its class, right-veering
//!    diagnostics and the gluing inclusion of a sub-diagram.
//! 5. [`input`] / [`report`] — the text input format and deterministic
//!    reports used by the `sfh` command-line tool.
//!
//! See the `book/` directory for a guided tour; every code block there is
//! also compiled and run as a doc-test of this crate.

pub mod contact;
pub mod error;
pub mod floer;
pub mod input;
pub mod openbook;
pub mod rat;
pub mod report;
pub mod surface;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book_tests;
