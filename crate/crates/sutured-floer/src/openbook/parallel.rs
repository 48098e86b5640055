//! Parallel transport of arcs: pushoffs, boundary-hugging paths and
//! boundary-parallel curves, with fresh slot positions allocated against an
//! occupancy map so nearby strands nest without collisions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rat::{one, zero, Rat};
use crate::surface::arrangement::adjacent_position;
use crate::surface::complex::{PolygonComplex, SideId};
use crate::surface::path::{build_curve, ArcPath, PathPoint};

/// Which side positions are already used, per side. Positions on glued
/// sides are tracked on both members of the pair.
#[derive(Clone, Debug, Default)]
pub struct Occupancy {
    map: BTreeMap<SideId, Vec<Rat>>,
}

impl Occupancy {
    pub fn new() -> Self {
        Occupancy::default()
    }

    pub fn add_path(&mut self, complex: &PolygonComplex, path: &ArcPath) {
        for ch in &path.chords {
            for pt in [&ch.from, &ch.to] {
                self.insert(complex, pt);
            }
        }
    }

    pub fn insert(&mut self, complex: &PolygonComplex, pt: &PathPoint) {
        self.map.entry(pt.side).or_default().push(pt.pos.clone());
        if let Some(im) = pt.across(complex) {
            self.map.entry(im.side).or_default().push(im.pos);
        }
    }

    pub fn remove_path(&mut self, complex: &PolygonComplex, path: &ArcPath) {
        for ch in &path.chords {
            for pt in [&ch.from, &ch.to] {
                self.remove(complex, pt);
            }
        }
    }

    fn remove(&mut self, complex: &PolygonComplex, pt: &PathPoint) {
        if let Some(v) = self.map.get_mut(&pt.side) {
            if let Some(i) = v.iter().position(|p| p == &pt.pos) {
                v.swap_remove(i);
            }
        }
        if let Some(im) = pt.across(complex) {
            if let Some(v) = self.map.get_mut(&im.side) {
                if let Some(i) = v.iter().position(|p| p == &im.pos) {
                    v.swap_remove(i);
                }
            }
        }
    }

    /// Allocate a fresh position on `side` adjacent to `anchor` in
    /// direction `up`, register it (and its partner image) and return it.
    pub fn alloc(
        &mut self,
        complex: &PolygonComplex,
        side: SideId,
        anchor: &Rat,
        up: bool,
    ) -> PathPoint {
        let occ = self.map.entry(side).or_default();
        let pos = adjacent_position(occ, anchor, up);
        let pt = PathPoint::new(side, pos);
        self.insert(complex, &pt);
        pt
    }

    /// Current positions per side (copy).
    pub fn snapshot(&self) -> BTreeMap<SideId, Vec<Rat>> {
        self.map.clone()
    }

    /// Fresh position near the low (`pos → 0`) or high end of a side.
    pub fn alloc_near_end(
        &mut self,
        complex: &PolygonComplex,
        side: SideId,
        low_end: bool,
    ) -> PathPoint {
        let anchor = if low_end { zero() } else { one() };
        self.alloc(complex, side, &anchor, low_end)
    }
}

/// A parallel copy of `arc`, entering beside `arc`'s start point offset in
/// direction `first_entry_up`. With `cross_first = true` the copy crosses
/// `arc` once, inside the first polygon (this is the pushoff rule);
/// otherwise it stays disjoint from `arc`.
///
/// Returns (start point, interior exit points, end point); the exit points
/// are written as exit instances suitable for [`build_arc`].
pub fn parallel_points(
    complex: &PolygonComplex,
    occ: &mut Occupancy,
    arc: &ArcPath,
    first_entry_up: bool,
    cross_first: bool,
) -> (PathPoint, Vec<PathPoint>, PathPoint) {
    debug_assert!(!arc.closed);
    let start = occ.alloc(complex, arc.start().side, &arc.start().pos, first_entry_up);
    let exit_up = if cross_first {
        first_entry_up
    } else {
        !first_entry_up
    };
    let mut exits = Vec::new();
    let n = arc.chords.len();
    for (k, ch) in arc.chords.iter().enumerate() {
        let p = occ.alloc(complex, ch.to.side, &ch.to.pos, exit_up);
        if k + 1 < n {
            exits.push(p);
        } else {
            return (start, exits, p);
        }
    }
    unreachable!("arc has at least one chord")
}

/// Crossing points through the corner fan at the head (`up = true`) or
/// tail of boundary side `side`: one fresh point near the corner end of
/// every glued side in the fan, in traversal order. The walk ends at the
/// next boundary side.
pub fn fan_exits(
    complex: &PolygonComplex,
    occ: &mut Occupancy,
    side: SideId,
    up: bool,
) -> Vec<PathPoint> {
    let mut exits = Vec::new();
    let mut t = if up {
        complex.next_side(side)
    } else {
        prev_side(complex, side)
    };
    while let Some(u) = complex.partner(t) {
        exits.push(occ.alloc_near_end(complex, t, up));
        t = if up {
            complex.next_side(u)
        } else {
            prev_side(complex, u)
        };
    }
    exits
}

/// Exit points of a boundary-hugging walk: starting on boundary side
/// `from_side` and walking in the boundary direction (`up = true`) or
/// against it, record a fresh crossing point on every glued side of each
/// corner fan passed, stopping when `stop` says so (given the next
/// boundary side about to be traversed). Returns the fan exit points.
pub fn hug_exits(
    complex: &PolygonComplex,
    occ: &mut Occupancy,
    from_side: SideId,
    up: bool,
    mut stop: impl FnMut(SideId) -> bool,
) -> Result<Vec<PathPoint>> {
    let mut exits = Vec::new();
    let mut side = from_side;
    for _ in 0..complex.side_count() * 2 + 4 {
        exits.extend(fan_exits(complex, occ, side, up));
        side = next_boundary(complex, side, up);
        if stop(side) {
            return Ok(exits);
        }
    }
    Err(Error::invalid(
        "boundary walk did not reach its target (different boundary components?)",
    ))
}

fn next_boundary(complex: &PolygonComplex, side: SideId, up: bool) -> SideId {
    if up {
        complex.next_boundary_side(side)
    } else {
        crate::openbook::basis::prev_boundary_side(complex, side)
    }
}

fn prev_side(complex: &PolygonComplex, s: SideId) -> SideId {
    let sd = complex.side(s);
    let poly = complex.polygon(sd.polygon);
    let n = poly.sides.len();
    poly.sides[(sd.index + n - 1) % n]
}

/// A closed curve parallel to the boundary component containing
/// `boundary_side`, pushed into the surface.
///
/// The curve crosses exactly the glued sides of the corner fans along the
/// component. Errors if the component has no corner fan with glued sides
/// (then the pushoff is contained in single polygons and has no chord
/// presentation).
pub fn boundary_parallel_curve(
    complex: &PolygonComplex,
    occ: &mut Occupancy,
    boundary_side: SideId,
) -> Result<ArcPath> {
    if !complex.is_boundary(boundary_side) {
        return Err(Error::invalid(format!(
            "side {} is not a boundary side",
            complex.side_name(boundary_side)
        )));
    }
    let mut exits = Vec::new();
    let mut side = boundary_side;
    loop {
        let mut t = complex.next_side(side);
        while let Some(u) = complex.partner(t) {
            exits.push(occ.alloc_near_end(complex, t, true));
            t = complex.next_side(u);
        }
        side = t;
        if side == boundary_side {
            break;
        }
    }
    if exits.is_empty() {
        return Err(Error::invalid(
            "boundary component meets no glued side; its parallel curve is not representable",
        ));
    }
    build_curve(complex, &exits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::surface::arrangement::arrange_all_marked;
    use crate::surface::path::{build_arc, validate_simple, Chord};

    /// Annulus + band page used in several tests: a once-punctured torus.
    fn annulus_band() -> (PolygonComplex, Vec<SideId>, Vec<SideId>) {
        let mut c = PolygonComplex::new();
        let a = c.add_polygon("a", 6).unwrap();
        let b = c.add_polygon("b", 4).unwrap();
        let asides = c.polygon(a).sides.clone();
        let bsides = c.polygon(b).sides.clone();
        c.glue(asides[1], asides[4]).unwrap();
        c.glue(asides[2], bsides[0]).unwrap();
        c.glue(asides[5], bsides[2]).unwrap();
        (c, asides, bsides)
    }

    #[test]
    fn pushoff_crosses_once() {
        let (c, _a, bs) = annulus_band();
        // cocore of the band
        let arc = build_arc(
            &c,
            PathPoint::new(bs[1], rat(1, 2)),
            &[],
            PathPoint::new(bs[3], rat(1, 2)),
        )
        .unwrap();
        let mut occ = Occupancy::new();
        occ.add_path(&c, &arc);
        let (s, exits, e) = parallel_points(&c, &mut occ, &arc, true, true);
        let b = build_arc(&c, s, &exits, e).unwrap();
        let rep = validate_simple(&c, &b, &[&arc]).unwrap();
        assert!(rep.is_simple());
        assert_eq!(rep.crossings_with[0].0, 1);
    }

    #[test]
    fn parallel_copy_is_disjoint() {
        let (c, asides, bs) = annulus_band();
        let arc = build_arc(
            &c,
            PathPoint::new(bs[1], rat(1, 2)),
            &[PathPoint::new(bs[0], rat(1, 2))],
            PathPoint::new(asides[0], rat(1, 2)),
        );
        // bs[0] is glued to asides[2]; endpoint on asides[0] (boundary)
        let arc = arc.unwrap();
        let mut occ = Occupancy::new();
        occ.add_path(&c, &arc);
        let (s, exits, e) = parallel_points(&c, &mut occ, &arc, false, false);
        let copy = build_arc(&c, s, &exits, e).unwrap();
        let rep = validate_simple(&c, &copy, &[&arc]).unwrap();
        assert!(rep.is_simple());
        assert_eq!(rep.crossings_with[0].0, 0);
    }

    #[test]
    fn boundary_parallel_curve_is_simple_closed() {
        let (c, _a, _b) = annulus_band();
        let mut occ = Occupancy::new();
        // the page has one boundary component; find a boundary side
        let bside = (0..c.side_count())
            .map(SideId)
            .find(|&s| c.is_boundary(s))
            .unwrap();
        let gamma = boundary_parallel_curve(&c, &mut occ, bside).unwrap();
        assert!(gamma.closed);
        let rep = validate_simple(&c, &gamma, &[]).unwrap();
        assert!(rep.is_simple());
        // complement of a boundary-parallel curve: two pieces, one a collar
        let arr = arrange_all_marked(&c, &[gamma]).unwrap();
        assert_eq!(arr.regions.len(), 2);
        let chis: Vec<i64> = arr.regions.iter().map(|r| r.chi).collect();
        assert!(chis.contains(&0), "collar piece is an annulus: {chis:?}");
    }

    #[test]
    fn hug_walk_collects_fan() {
        let (c, asides, bs) = annulus_band();
        let mut occ = Occupancy::new();
        // walk upward from bs[1] until reaching asides[3]
        let exits = hug_exits(&c, &mut occ, bs[1], true, |s| s == asides[3]).unwrap();
        assert!(!exits.is_empty());
        let _ = (asides, bs);
    }

    #[test]
    fn chord_build_roundtrip() {
        let (c, _a, bs) = annulus_band();
        let arc = build_arc(
            &c,
            PathPoint::new(bs[1], rat(1, 3)),
            &[],
            PathPoint::new(bs[3], rat(2, 3)),
        )
        .unwrap();
        assert_eq!(arc.chords.len(), 1);
        let ch: &Chord = &arc.chords[0];
        assert_eq!(ch.from.pos, rat(1, 3));
    }
}
