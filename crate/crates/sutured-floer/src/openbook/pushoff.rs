//! Pushoffs of basis arcs.
//!
//! The pushoff `b_i` of a basis arc `a_i` moves both endpoints along `∂S`
//! in the boundary orientation and crosses `a_i` exactly once, inside the
//! first polygon after `a_i`'s initial endpoint. In side coordinates this
//! is: every point of `a_i` acquires a parallel point at the next free
//! position above it, which forces a single positive crossing in the first
//! polygon and disjointness everywhere else.

use crate::error::{Error, Result};
use crate::surface::path::{build_arc, validate_simple, ArcPath};

use super::parallel::{parallel_points, Occupancy};
use super::pob::{Basis, PartialOpenBook};

/// Build all pushoffs in basis order. `occ` must already contain the basis
/// arcs and any named curves; the pushoffs' positions are allocated into
/// it.
pub fn pushoffs(pob: &PartialOpenBook, basis: &Basis, occ: &mut Occupancy) -> Result<Vec<ArcPath>> {
    let mut out: Vec<ArcPath> = Vec::new();
    for (i, arc) in basis.arcs.iter().enumerate() {
        let (start, exits, end) = parallel_points(&pob.page, occ, arc, true, true);
        let b = build_arc(&pob.page, start, &exits, end)?;
        // one crossing with a_i, none with other basis arcs or pushoffs
        let mut others: Vec<&ArcPath> = Vec::new();
        others.push(arc);
        for (j, aj) in basis.arcs.iter().enumerate() {
            if j != i {
                others.push(aj);
            }
        }
        for prev in &out {
            others.push(prev);
        }
        let rep = validate_simple(&pob.page, &b, &others)?;
        if !rep.is_simple() {
            return Err(Error::internal(format!(
                "pushoff of {} is not simple",
                basis.names[i]
            )));
        }
        if rep.crossings_with[0].0 != 1 {
            return Err(Error::internal(format!(
                "pushoff of {} crosses it {} times (want 1)",
                basis.names[i], rep.crossings_with[0].0
            )));
        }
        for (k, (count, _)) in rep.crossings_with.iter().enumerate().skip(1) {
            if *count != 0 {
                return Err(Error::internal(format!(
                    "pushoff of {} is not disjoint from companion {k}",
                    basis.names[i]
                )));
            }
        }
        out.push(b);
    }
    Ok(out)
}
