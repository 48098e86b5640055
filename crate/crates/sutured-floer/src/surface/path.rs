//! Arcs and closed curves as chains of chords through polygons.
//!
//! A path is a sequence of chords, each inside one polygon, with endpoints
//! on sides at rational positions. Consecutive chords pass through a glued
//! side: the exit point of one chord is the same surface point as the entry
//! point of the next (partner side, position `1 - p`). Whether two chords
//! inside one convex polygon cross is decided purely combinatorially: they
//! cross iff their endpoint positions interleave in the cyclic boundary
//! order.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::{one, Rat};
use crate::surface::complex::{PolygonComplex, PolygonId, SideId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathPoint {
    pub side: SideId,
    pub pos: Rat,
}

impl PathPoint {
    pub fn new(side: SideId, pos: Rat) -> Self {
        PathPoint { side, pos }
    }

    /// The same surface point seen from the partner side.
    pub fn across(&self, complex: &PolygonComplex) -> Option<PathPoint> {
        complex.partner(self.side).map(|t| PathPoint {
            side: t,
            pos: one() - &self.pos,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chord {
    pub polygon: PolygonId,
    pub from: PathPoint,
    pub to: PathPoint,
}

/// A properly embedded arc (`closed = false`, endpoints on boundary sides)
/// or a simple closed curve (`closed = true`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcPath {
    pub chords: Vec<Chord>,
    pub closed: bool,
}

impl ArcPath {
    pub fn arc(chords: Vec<Chord>) -> Self {
        ArcPath {
            chords,
            closed: false,
        }
    }

    pub fn curve(chords: Vec<Chord>) -> Self {
        ArcPath {
            chords,
            closed: true,
        }
    }

    pub fn start(&self) -> &PathPoint {
        &self.chords.first().expect("nonempty path").from
    }

    pub fn end(&self) -> &PathPoint {
        &self.chords.last().expect("nonempty path").to
    }

    /// Path traversed backwards.
    pub fn reversed(&self) -> ArcPath {
        ArcPath {
            chords: self
                .chords
                .iter()
                .rev()
                .map(|c| Chord {
                    polygon: c.polygon,
                    from: c.to.clone(),
                    to: c.from.clone(),
                })
                .collect(),
            closed: self.closed,
        }
    }

    /// Structural validation against a complex: chords sit in their
    /// polygons, consecutive chords match across gluings, endpoints of an
    /// open path are on boundary sides, and positions are in (0,1).
    pub fn validate(&self, complex: &PolygonComplex) -> Result<()> {
        if self.chords.is_empty() {
            return Err(Error::invalid("empty path"));
        }
        for (k, ch) in self.chords.iter().enumerate() {
            for pt in [&ch.from, &ch.to] {
                let side = complex.side(pt.side);
                if side.polygon != ch.polygon {
                    return Err(Error::invalid(format!(
                        "chord {k}: point on side {} is not in polygon {}",
                        complex.side_name(pt.side),
                        complex.polygon(ch.polygon).name
                    )));
                }
                if pt.pos <= Rat::zero() || pt.pos >= one() {
                    return Err(Error::invalid(format!(
                        "chord {k}: position {} on side {} out of range (0,1)",
                        pt.pos,
                        complex.side_name(pt.side)
                    )));
                }
            }
            if ch.from == ch.to {
                return Err(Error::invalid(format!("chord {k} is degenerate")));
            }
        }
        let n = self.chords.len();
        let links = if self.closed { n } else { n - 1 };
        for k in 0..links {
            let here = &self.chords[k].to;
            let next = &self.chords[(k + 1) % n].from;
            match here.across(complex) {
                Some(image) if &image == next => {}
                Some(image) => {
                    return Err(Error::invalid(format!(
                        "discontinuous path: chord {k} exits at {}@{} but chord {} enters at {}@{} (expected {}@{})",
                        complex.side_name(here.side),
                        here.pos,
                        (k + 1) % n,
                        complex.side_name(next.side),
                        next.pos,
                        complex.side_name(image.side),
                        image.pos,
                    )));
                }
                None => {
                    return Err(Error::invalid(format!(
                        "discontinuous path: chord {k} exits through boundary side {}",
                        complex.side_name(here.side)
                    )));
                }
            }
        }
        if !self.closed {
            for pt in [self.start(), self.end()] {
                if !complex.is_boundary(pt.side) {
                    return Err(Error::invalid(format!(
                        "arc endpoint on glued side {}",
                        complex.side_name(pt.side)
                    )));
                }
            }
        }
        Ok(())
    }

    /// All boundary-side points used by the path, including arc endpoints.
    pub fn points(&self) -> impl Iterator<Item = &PathPoint> {
        self.chords
            .iter()
            .flat_map(|c| [&c.from, &c.to].into_iter())
    }
}

/// Build an open path from a start point, a list of interior crossing
/// points and an end point. Every interior crossing is written as the exit
/// instance: its side belongs to the polygon the chord lies in; the next
/// chord starts at the partner point.
pub fn build_arc(
    complex: &PolygonComplex,
    start: PathPoint,
    crossings: &[PathPoint],
    end: PathPoint,
) -> Result<ArcPath> {
    let mut chords = Vec::new();
    let mut from = start;
    for c in crossings {
        let polygon = complex.side(c.side).polygon;
        chords.push(Chord {
            polygon,
            from,
            to: c.clone(),
        });
        from = c.across(complex).ok_or_else(|| {
            Error::invalid(format!(
                "interior path point on boundary side {}",
                complex.side_name(c.side)
            ))
        })?;
    }
    chords.push(Chord {
        polygon: complex.side(end.side).polygon,
        from,
        to: end,
    });
    let arc = ArcPath::arc(chords);
    arc.validate(complex)?;
    Ok(arc)
}

/// Build a closed curve from its cyclic list of crossing points, each
/// written as the exit instance of the chord before it.
pub fn build_curve(complex: &PolygonComplex, crossings: &[PathPoint]) -> Result<ArcPath> {
    if crossings.is_empty() {
        return Err(Error::invalid("closed curve needs at least one crossing"));
    }
    let mut chords = Vec::new();
    for (k, c) in crossings.iter().enumerate() {
        let prev = &crossings[(k + crossings.len() - 1) % crossings.len()];
        let from = prev.across(complex).ok_or_else(|| {
            Error::invalid(format!(
                "closed curve crosses boundary side {}",
                complex.side_name(prev.side)
            ))
        })?;
        let polygon = complex.side(c.side).polygon;
        chords.push(Chord {
            polygon,
            from,
            to: c.clone(),
        });
    }
    let curve = ArcPath::curve(chords);
    curve.validate(complex)?;
    Ok(curve)
}

/// Cyclic boundary key of a point inside a given polygon: (side index, pos).
fn boundary_key(complex: &PolygonComplex, p: &PathPoint) -> (usize, Rat) {
    (complex.side(p.side).index, p.pos.clone())
}

/// Is `x` strictly inside the positive cyclic interval `(a, b)`?
fn in_cyclic_interval(a: &(usize, Rat), b: &(usize, Rat), x: &(usize, Rat)) -> bool {
    if a < b {
        x > a && x < b
    } else {
        x > a || x < b
    }
}

/// Do two chords of one polygon cross (endpoints interleave)?
pub fn chords_cross(complex: &PolygonComplex, a: &Chord, b: &Chord) -> bool {
    debug_assert_eq!(a.polygon, b.polygon);
    let a0 = boundary_key(complex, &a.from);
    let a1 = boundary_key(complex, &a.to);
    let b0 = boundary_key(complex, &b.from);
    let b1 = boundary_key(complex, &b.to);
    in_cyclic_interval(&a0, &a1, &b0) != in_cyclic_interval(&a0, &a1, &b1)
}

/// Report from [`validate_simple`]: self-crossings and pairwise crossing
/// counts between a path and a list of others.
#[derive(Clone, Debug)]
pub struct SimplicityReport {
    pub self_crossings: usize,
    /// For each other path, the number of crossings with it, and the list of
    /// (polygon, own chord index, other chord index).
    pub crossings_with: Vec<(usize, Vec<(PolygonId, usize, usize)>)>,
}

impl SimplicityReport {
    pub fn is_simple(&self) -> bool {
        self.self_crossings == 0
    }
}

/// Count self-crossings of `path` and its crossings with each of `others`.
/// Shared points (equal (side, pos)) are reported as errors.
pub fn validate_simple(
    complex: &PolygonComplex,
    path: &ArcPath,
    others: &[&ArcPath],
) -> Result<SimplicityReport> {
    path.validate(complex)?;
    let mut self_crossings = 0;
    for i in 0..path.chords.len() {
        for j in (i + 1)..path.chords.len() {
            let (a, b) = (&path.chords[i], &path.chords[j]);
            if a.polygon == b.polygon && chords_cross(complex, a, b) {
                self_crossings += 1;
            }
        }
    }
    // distinct point check within the path
    let mut pts: Vec<(usize, Rat)> = path
        .points()
        .map(|p| (p.side.0, p.pos.clone()))
        .collect();
    pts.sort();
    for w in pts.windows(2) {
        if w[0] == w[1] {
            return Err(Error::invalid(format!(
                "path passes twice through position {} on side {}",
                w[0].1,
                complex.side_name(SideId(w[0].0))
            )));
        }
    }

    let mut crossings_with = Vec::new();
    for other in others {
        other.validate(complex)?;
        let mut hits = Vec::new();
        for (i, a) in path.chords.iter().enumerate() {
            for (j, b) in other.chords.iter().enumerate() {
                if a.polygon == b.polygon && chords_cross(complex, a, b) {
                    hits.push((a.polygon, i, j));
                }
            }
        }
        crossings_with.push((hits.len(), hits));
    }
    Ok(SimplicityReport {
        self_crossings,
        crossings_with,
    })
}

/// Transfer a path to the mirrored complex produced by
/// [`PolygonComplex::mirrored`]: same chords, sides mapped, positions
/// flipped.
pub fn mirror_path(
    complex: &PolygonComplex,
    mirrored: &PolygonComplex,
    path: &ArcPath,
) -> ArcPath {
    let map_pt = |p: &PathPoint| {
        let side = complex.mirror_side_map(p.side, mirrored);
        PathPoint::new(side, one() - &p.pos)
    };
    ArcPath {
        chords: path
            .chords
            .iter()
            .map(|c| Chord {
                polygon: mirrored.side(complex.mirror_side_map(c.from.side, mirrored)).polygon,
                from: map_pt(&c.from),
                to: map_pt(&c.to),
            })
            .collect(),
        closed: path.closed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn disk() -> (PolygonComplex, Vec<SideId>) {
        let mut c = PolygonComplex::new();
        let p = c.add_polygon("d", 4).unwrap();
        let sides = c.polygon(p).sides.clone();
        (c, sides)
    }

    fn chord(c: &PolygonComplex, s: SideId, p: Rat, t: SideId, q: Rat) -> Chord {
        Chord {
            polygon: c.side(s).polygon,
            from: PathPoint::new(s, p),
            to: PathPoint::new(t, q),
        }
    }

    #[test]
    fn crossing_chords_interleave() {
        let (c, s) = disk();
        let a = chord(&c, s[0], rat(1, 2), s[2], rat(1, 2));
        let b = chord(&c, s[1], rat(1, 2), s[3], rat(1, 2));
        assert!(chords_cross(&c, &a, &b));
        let b2 = chord(&c, s[1], rat(1, 4), s[1], rat(3, 4));
        assert!(!chords_cross(&c, &a, &b2));
    }

    #[test]
    fn nested_same_side_chords_do_not_cross() {
        let (c, s) = disk();
        let a = chord(&c, s[0], rat(1, 4), s[0], rat(3, 4));
        let b = chord(&c, s[0], rat(1, 3), s[0], rat(2, 3));
        assert!(!chords_cross(&c, &a, &b));
        // interleaved same-side chords do cross
        let d = chord(&c, s[0], rat(1, 2), s[0], rat(4, 5));
        assert!(chords_cross(&c, &b, &d));
    }

    #[test]
    fn continuity_enforced() {
        let mut c = PolygonComplex::new();
        let p1 = c.add_polygon("p", 4).unwrap();
        let p2 = c.add_polygon("q", 4).unwrap();
        let s1 = c.polygon(p1).sides.clone();
        let s2 = c.polygon(p2).sides.clone();
        c.glue(s1[2], s2[0]).unwrap();
        let good = ArcPath::arc(vec![
            chord(&c, s1[0], rat(1, 2), s1[2], rat(1, 3)),
            chord(&c, s2[0], rat(2, 3), s2[2], rat(1, 2)),
        ]);
        assert!(good.validate(&c).is_ok());
        let bad = ArcPath::arc(vec![
            chord(&c, s1[0], rat(1, 2), s1[2], rat(1, 3)),
            chord(&c, s2[0], rat(1, 3), s2[2], rat(1, 2)),
        ]);
        assert!(bad.validate(&c).is_err());
    }
}
