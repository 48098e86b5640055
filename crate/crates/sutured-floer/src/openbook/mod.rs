//! Partial open books: page labels, bases, pushoffs, monodromy and the
//! sutured Heegaard diagram, plus the moves (slides, stabilizations,
//! bypasses) and a seeded random generator.

pub mod basis;
pub mod fixtures;
pub mod heegaard;
pub mod parallel;
pub mod pob;
pub mod pushoff;
pub mod twist;

pub use basis::{arc_slide, validate_basis, BasisReport};
pub use heegaard::{build_heegaard, SuturedHeegaardDiagram};
pub use pob::{validate_pob, Basis, Label, Monodromy, PartialOpenBook, PobReport, TwistLetter};
pub use twist::{dehn_twist, paths_isotopic, reduce};
