//! Combinatorial surfaces, embedded curve systems and their arrangements.

pub mod arrangement;
pub mod complex;
pub mod path;

pub use arrangement::{arrange_all_marked, Arrangement, Crossing, Frontier, Region};
pub use complex::{ComponentInfo, PolygonComplex, PolygonId, SideId};
pub use path::{chords_cross, mirror_path, validate_simple, ArcPath, Chord, PathPoint};
