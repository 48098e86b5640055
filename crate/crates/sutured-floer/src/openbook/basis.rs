//! Basis validation (the cut criterion) and arc slides.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::rat::{one, zero, Rat};
use crate::surface::arrangement::{Arrangement, Frontier};
use crate::surface::complex::{PolygonComplex, SideId};
use crate::surface::path::{build_arc, validate_simple, ArcPath, Chord, PathPoint};

use super::parallel::{fan_exits, parallel_points, Occupancy};
use super::pob::{Basis, Label, PartialOpenBook};

#[derive(Clone, Debug)]
pub struct BasisReport {
    pub r: usize,
    pub cut_components: usize,
}

/// Validate a basis: arcs are simple, pairwise disjoint, contained in the
/// handle region with endpoints on `A`, and cutting `P` along them leaves
/// disks whose frontier meets `Γ` in exactly one arc.
pub fn validate_basis(pob: &PartialOpenBook, basis: &Basis) -> Result<BasisReport> {
    if basis.names.len() != basis.arcs.len() {
        return Err(Error::invalid("basis names and arcs differ in length"));
    }
    let a_sides = pob.a_sides();
    for (i, arc) in basis.arcs.iter().enumerate() {
        if arc.closed {
            return Err(Error::invalid(format!(
                "basis entry {} is a closed curve",
                basis.names[i]
            )));
        }
        let others: Vec<&ArcPath> = basis.arcs[i + 1..].iter().collect();
        let report = validate_simple(&pob.page, arc, &others)?;
        if !report.is_simple() {
            return Err(Error::invalid(format!(
                "basis arc {} is not simple",
                basis.names[i]
            )));
        }
        if report.crossings_with.iter().any(|(count, _)| *count > 0) {
            return Err(Error::invalid(format!(
                "basis arc {} crosses another basis arc",
                basis.names[i]
            )));
        }
        for ch in &arc.chords {
            if pob.label(ch.polygon) != Label::Handle {
                return Err(Error::invalid(format!(
                    "basis arc {} leaves the handle region",
                    basis.names[i]
                )));
            }
        }
        for pt in [arc.start(), arc.end()] {
            if !a_sides.contains(&pt.side) {
                return Err(Error::invalid(format!(
                    "basis arc {} has an endpoint off A (side {})",
                    basis.names[i],
                    pob.page.side_name(pt.side)
                )));
            }
        }
    }

    // cut criterion on the handle subcomplex
    let (sub, side_map) = pob.handle_subcomplex();
    let interface: BTreeSet<SideId> = pob
        .interface_sides()
        .iter()
        .filter_map(|s| side_map.get(s).copied())
        .collect();
    let transfer = |arc: &ArcPath| -> ArcPath {
        ArcPath {
            chords: arc
                .chords
                .iter()
                .map(|c| Chord {
                    polygon: sub.side(side_map[&c.from.side]).polygon,
                    from: PathPoint::new(side_map[&c.from.side], c.from.pos.clone()),
                    to: PathPoint::new(side_map[&c.to.side], c.to.pos.clone()),
                })
                .collect(),
            closed: arc.closed,
        }
    };
    let arcs_sub: Vec<ArcPath> = basis.arcs.iter().map(transfer).collect();
    let arr = Arrangement::build(&sub, &arcs_sub, &interface)?;
    for (rid, region) in arr.regions.iter().enumerate() {
        if region.chi != 1 {
            return Err(Error::invalid(format!(
                "cut component {rid} is not a disk (chi = {})",
                region.chi
            )));
        }
        let runs = gamma_runs(region.frontier.as_slice(), &interface);
        if runs != 1 {
            return Err(Error::invalid(format!(
                "cut component {rid} meets Γ in {runs} arcs (want exactly 1)"
            )));
        }
    }
    Ok(BasisReport {
        r: basis.len(),
        cut_components: arr.regions.len(),
    })
}

/// Count maximal cyclic runs of marked side pieces over all frontier
/// cycles.
pub fn gamma_runs(frontier: &[Vec<Frontier>], marked: &BTreeSet<SideId>) -> usize {
    let mut runs = 0;
    for cycle in frontier {
        let is_marked =
            |f: &Frontier| matches!(f, Frontier::Side { side } if marked.contains(side));
        let n = cycle.len();
        if n == 0 {
            continue;
        }
        if cycle.iter().all(is_marked) {
            runs += 1;
            continue;
        }
        for i in 0..n {
            if is_marked(&cycle[i]) && !is_marked(&cycle[(i + n - 1) % n]) {
                runs += 1;
            }
        }
    }
    runs
}

/// The boundary walk from a point: sides traversed and the first basis
/// endpoint hit.
struct WalkHit {
    hit: PathPoint,
    /// Boundary sides traversed, starting with the side of the start point
    /// and ending with the side of the hit.
    sides: Vec<SideId>,
}

fn walk_to_first_endpoint(
    complex: &PolygonComplex,
    endpoints: &[PathPoint],
    start: &PathPoint,
    up: bool,
) -> Option<WalkHit> {
    let mut side = start.side;
    let mut from_pos = start.pos.clone();
    let mut sides = vec![side];
    for _ in 0..complex.side_count() + 2 {
        let mut cands: Vec<&PathPoint> = endpoints
            .iter()
            .filter(|p| p.side == side)
            .filter(|p| if up { p.pos > from_pos } else { p.pos < from_pos })
            .collect();
        cands.sort_by(|x, y| {
            if up {
                x.pos.cmp(&y.pos)
            } else {
                y.pos.cmp(&x.pos)
            }
        });
        if let Some(hit) = cands.first() {
            return Some(WalkHit {
                hit: (*hit).clone(),
                sides,
            });
        }
        side = if up {
            complex.next_boundary_side(side)
        } else {
            prev_boundary_side(complex, side)
        };
        sides.push(side);
        from_pos = if up { zero() } else { one() };
        if side == start.side && from_pos == zero() && up {
            // full loop; the remaining stretch of the start side is covered
            // by one more iteration, after which we must stop
        }
        if sides.len() > complex.side_count() + 1 {
            break;
        }
    }
    None
}

pub(crate) fn prev_boundary_side(complex: &PolygonComplex, s: SideId) -> SideId {
    for k in 0..complex.side_count() {
        let cand = SideId(k);
        if complex.is_boundary(cand) && complex.next_boundary_side(cand) == s {
            return cand;
        }
    }
    unreachable!("boundary walk is a permutation");
}

/// Replace `a_i` by `a_i + a_j`: the band sum along a boundary arc
/// `τ ⊂ A` from an endpoint of `a_i` to an endpoint of `a_j` that meets no
/// other basis endpoint.
pub fn arc_slide(pob: &PartialOpenBook, basis: &Basis, i: usize, j: usize) -> Result<Basis> {
    if i == j || i >= basis.len() || j >= basis.len() {
        return Err(Error::invalid("arc_slide needs two distinct basis indices"));
    }
    let ai = &basis.arcs[i];
    let aj = &basis.arcs[j];
    let all_endpoints: Vec<PathPoint> = basis
        .arcs
        .iter()
        .flat_map(|a| [a.start().clone(), a.end().clone()])
        .collect();
    let is_aj_endpoint = |p: &PathPoint| p == aj.start() || p == aj.end();

    let mut found: Option<(bool, bool, WalkHit)> = None;
    'outer: for ai_at_start in [true, false] {
        let pt_i = if ai_at_start { ai.start() } else { ai.end() };
        for up in [true, false] {
            if let Some(w) = walk_to_first_endpoint(&pob.page, &all_endpoints, pt_i, up) {
                if is_aj_endpoint(&w.hit) {
                    found = Some((ai_at_start, up, w));
                    break 'outer;
                }
            }
        }
    }
    let Some((ai_at_start, up, walk)) = found else {
        return Err(Error::invalid(format!(
            "basis arcs {} and {} are not adjacent along A",
            basis.names[i], basis.names[j]
        )));
    };

    let ai_or = if ai_at_start { ai.reversed() } else { ai.clone() };
    let aj_or = if walk.hit == *aj.start() {
        aj.clone()
    } else {
        aj.reversed()
    };

    let mut occ = Occupancy::new();
    for arc in &basis.arcs {
        occ.add_path(&pob.page, arc);
    }

    // hug exits along τ: cross the fan after every traversed side but the
    // last
    let mut points: Vec<PathPoint> = ai_or.chords[..ai_or.chords.len() - 1]
        .iter()
        .map(|c| c.to.clone())
        .collect();
    for &side in &walk.sides[..walk.sides.len() - 1] {
        points.extend(fan_exits(&pob.page, &mut occ, side, up));
    }
    // parallel copy of a_j entering on the τ side of its hit endpoint
    let (_unused_start, copy_exits, copy_end) =
        parallel_points(&pob.page, &mut occ, &aj_or, !up, false);
    points.extend(copy_exits);

    let arc = build_arc(&pob.page, ai_or.start().clone(), &points, copy_end)?;
    let mut out = basis.clone();
    out.arcs[i] = arc;
    out.names[i] = format!("{}+{}", basis.names[i], basis.names[j]);
    Ok(out)
}
