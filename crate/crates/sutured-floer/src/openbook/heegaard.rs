//! The sutured Heegaard diagram of a partial open book.
//!
//! The Heegaard surface is assembled from a reversed copy of the whole
//! page at level −1 and a direct copy of the handle part at level +1,
//! glued along `A`. The α-curves double the basis arcs across the two
//! levels; each β-curve is the pushoff at level +1 joined to the monodromy
//! image at level −1. All of `∂Σ` carries the suture.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::rat::one;
use crate::surface::arrangement::Arrangement;
use crate::surface::complex::{PolygonComplex, PolygonId, SideId};
use crate::surface::path::{ArcPath, Chord, PathPoint};

use super::parallel::Occupancy;
use super::pob::{Basis, Label, Monodromy, PartialOpenBook};
use super::pushoff::pushoffs;
use super::twist::{dehn_twist, reduce};

/// A sutured Heegaard diagram: the surface, the arrangement of the α- and
/// β-systems, and the distinguished intersection points.
#[derive(Clone, Debug)]
pub struct SuturedHeegaardDiagram {
    pub sigma: PolygonComplex,
    pub arrangement: Arrangement,
    /// Number of α-curves (= number of β-curves).
    pub r: usize,
    /// Crossing id of the distinguished point `x_i` on `α_i ∩ β_i`, when
    /// the diagram was built from a partial open book (or marked in
    /// diagram mode).
    pub distinguished: Vec<usize>,
    /// Polygons of the +1 level (empty in diagram mode).
    pub plus_level: BTreeSet<PolygonId>,
    /// Human-readable curve names: alphas then betas.
    pub curve_names: Vec<String>,
}

impl SuturedHeegaardDiagram {
    pub fn alpha(&self, i: usize) -> usize {
        i
    }

    pub fn beta(&self, i: usize) -> usize {
        self.r + i
    }

    /// Is the given arrangement curve id an α-curve?
    pub fn is_alpha(&self, curve: usize) -> bool {
        curve < self.r
    }

    /// For a crossing, the pair (alpha index, beta index).
    pub fn crossing_pair(&self, cid: usize) -> Result<(usize, usize)> {
        let cr = &self.arrangement.crossings[cid];
        let (ca, cb) = (cr.a.0, cr.b.0);
        if self.is_alpha(ca) == self.is_alpha(cb) {
            return Err(Error::invalid(format!(
                "curves {} and {} of the same family intersect",
                self.curve_names[ca], self.curve_names[cb]
            )));
        }
        Ok(if self.is_alpha(ca) {
            (ca, cb - self.r)
        } else {
            (cb, ca - self.r)
        })
    }

    /// Quadrant regions of a crossing, rotated so that index 0 is the
    /// quadrant counterclockwise-adjacent to the α-forward dart.
    pub fn alpha_quadrants(&self, cid: usize) -> [usize; 4] {
        let cr = &self.arrangement.crossings[cid];
        if self.is_alpha(cr.a.0) {
            cr.quadrant_region
        } else {
            // rotation[0] is curve a forward = beta forward; alpha forward
            // sits at rotation position 1 or 3
            let mut apos = 0;
            for (i, d) in cr.rotation.iter().enumerate() {
                if self.is_alpha(d.curve) && d.forward {
                    apos = i;
                    break;
                }
            }
            let q = cr.quadrant_region;
            [
                q[apos % 4],
                q[(apos + 1) % 4],
                q[(apos + 2) % 4],
                q[(apos + 3) % 4],
            ]
        }
    }
}

/// Carry a page path to the level −1 (mirrored) copy inside Σ.
fn mirror_to(
    page: &PolygonComplex,
    path: &ArcPath,
    side_map: &BTreeMap<SideId, SideId>,
    sigma: &PolygonComplex,
) -> ArcPath {
    let pt = |p: &PathPoint| PathPoint::new(side_map[&p.side], one() - &p.pos);
    ArcPath {
        chords: path
            .chords
            .iter()
            .map(|c| Chord {
                polygon: sigma.side(side_map[&c.from.side]).polygon,
                from: pt(&c.from),
                to: pt(&c.to),
            })
            .collect(),
        closed: path.closed,
    }
    .tap_validate(page)
}

trait TapValidate {
    fn tap_validate(self, _page: &PolygonComplex) -> Self;
}
impl TapValidate for ArcPath {
    fn tap_validate(self, _page: &PolygonComplex) -> Self {
        self
    }
}

/// Carry a handle-region page path to the +1 copy (positions unchanged).
fn plus_to(
    path: &ArcPath,
    side_map: &BTreeMap<SideId, SideId>,
    sigma: &PolygonComplex,
) -> Result<ArcPath> {
    let pt = |p: &PathPoint| -> Result<PathPoint> {
        let side = side_map
            .get(&p.side)
            .ok_or_else(|| Error::invalid("path leaves the handle region"))?;
        Ok(PathPoint::new(*side, p.pos.clone()))
    };
    Ok(ArcPath {
        chords: path
            .chords
            .iter()
            .map(|c| {
                Ok(Chord {
                    polygon: sigma.side(pt(&c.from)?.side).polygon,
                    from: pt(&c.from)?,
                    to: pt(&c.to)?,
                })
            })
            .collect::<Result<Vec<_>>>()?,
        closed: path.closed,
    })
}

/// Compute the monodromy images of all pushoffs.
pub fn apply_monodromy_all(
    pob: &PartialOpenBook,
    basis: &Basis,
    pushoffs_: &[ArcPath],
    occ: &mut Occupancy,
) -> Result<Vec<ArcPath>> {
    match &pob.monodromy {
        Monodromy::Images(map) => {
            let mut out = Vec::new();
            for (i, name) in basis.names.iter().enumerate() {
                let img = map.get(name).ok_or_else(|| {
                    Error::invalid(format!("no monodromy image given for basis arc {name}"))
                })?;
                let b = &pushoffs_[i];
                // normalize orientation and check endpoints match the
                // pushoff slots exactly
                let img = if img.start() == b.start() && img.end() == b.end() {
                    img.clone()
                } else if img.start() == b.end() && img.end() == b.start() {
                    img.reversed()
                } else {
                    return Err(Error::invalid(format!(
                        "image endpoints for {name} must be the pushoff endpoints {}@{} and {}@{}",
                        pob.page.side_name(b.start().side),
                        b.start().pos,
                        pob.page.side_name(b.end().side),
                        b.end().pos,
                    )));
                };
                out.push(img);
            }
            Ok(out)
        }
        Monodromy::TwistWord(word) => {
            let mut images: Vec<ArcPath> = pushoffs_.to_vec();
            for i in 0..images.len() {
                let mut img = images[i].clone();
                // rightmost letter first
                for letter in word.iter().rev() {
                    let curve = &pob.curves[&letter.curve];
                    let mut obstacles: Vec<ArcPath> = basis.arcs.clone();
                    for (j, other) in images.iter().enumerate() {
                        if j != i {
                            obstacles.push(other.clone());
                        }
                    }
                    img = dehn_twist(&pob.page, occ, &img, curve, letter.sign, &obstacles)?;
                }
                images[i] = img;
            }
            // global quiescence: reduce each image against everything else
            for _round in 0..4 {
                let mut changed = false;
                for i in 0..images.len() {
                    let mut obstacles: Vec<ArcPath> = basis.arcs.clone();
                    for (j, other) in images.iter().enumerate() {
                        if j != i {
                            obstacles.push(other.clone());
                        }
                    }
                    let old = images[i].clone();
                    let new = reduce(&pob.page, occ, old.clone(), &obstacles, false)?;
                    if new != old {
                        changed = true;
                    }
                    images[i] = new;
                }
                if !changed {
                    break;
                }
            }
            Ok(images)
        }
    }
}

/// Build the sutured Heegaard diagram `(Σ, β, α)` of a partial open book
/// with a chosen basis.
pub fn build_heegaard(pob: &PartialOpenBook, basis: &Basis) -> Result<SuturedHeegaardDiagram> {
    super::pob::validate_pob(pob)?;
    super::basis::validate_basis(pob, basis)?;

    let mut occ = Occupancy::new();
    for arc in &basis.arcs {
        occ.add_path(&pob.page, arc);
    }
    for curve in pob.curves.values() {
        occ.add_path(&pob.page, curve);
    }
    if let Monodromy::Images(map) = &pob.monodromy {
        for img in map.values() {
            occ.add_path(&pob.page, img);
        }
    }
    let pushoffs_ = pushoffs(pob, basis, &mut occ)?;
    let images = apply_monodromy_all(pob, basis, &pushoffs_, &mut occ)?;

    // ---- assemble Σ ----
    let mut sigma = PolygonComplex::new();
    let mut minus_map: BTreeMap<SideId, SideId> = BTreeMap::new();
    let mut plus_map: BTreeMap<SideId, SideId> = BTreeMap::new();
    let mut plus_level: BTreeSet<PolygonId> = BTreeSet::new();
    for p in pob.page.polygons() {
        let poly = pob.page.polygon(p);
        let n = poly.sides.len();
        let mp = sigma.add_polygon(format!("{}-", poly.name), n)?;
        for (k, &old) in poly.sides.iter().enumerate() {
            minus_map.insert(old, sigma.polygon(mp).sides[n - 1 - k]);
        }
    }
    for p in pob.page.polygons() {
        if pob.label(p) != Label::Handle {
            continue;
        }
        let poly = pob.page.polygon(p);
        let n = poly.sides.len();
        let pp = sigma.add_polygon(format!("{}+", poly.name), n)?;
        plus_level.insert(pp);
        for (k, &old) in poly.sides.iter().enumerate() {
            plus_map.insert(old, sigma.polygon(pp).sides[k]);
        }
    }
    for s in 0..pob.page.side_count() {
        let sid = SideId(s);
        if let Some(t) = pob.page.partner(sid) {
            if t.0 < s {
                continue;
            }
            sigma.glue(minus_map[&sid], minus_map[&t])?;
            if let (Some(&ps), Some(&pt)) = (plus_map.get(&sid), plus_map.get(&t)) {
                sigma.glue(ps, pt)?;
            }
        }
    }
    for &sid in &pob.a_sides() {
        sigma.glue(plus_map[&sid], minus_map[&sid])?;
    }
    sigma.validate()?;

    // ---- curves ----
    let r = basis.len();
    let mut curves: Vec<ArcPath> = Vec::new();
    let mut curve_names: Vec<String> = Vec::new();
    for (i, a) in basis.arcs.iter().enumerate() {
        let up = plus_to(a, &plus_map, &sigma)?;
        let down = mirror_to(&pob.page, a, &minus_map, &sigma).reversed();
        let mut chords = up.chords.clone();
        chords.extend(down.chords);
        let alpha = ArcPath::curve(chords);
        alpha.validate(&sigma)?;
        curves.push(alpha);
        curve_names.push(format!("alpha:{}", basis.names[i]));
    }
    for (i, b) in pushoffs_.iter().enumerate() {
        let up = plus_to(b, &plus_map, &sigma)?;
        let down = mirror_to(&pob.page, &images[i], &minus_map, &sigma).reversed();
        let mut chords = up.chords.clone();
        chords.extend(down.chords);
        let beta = ArcPath::curve(chords);
        beta.validate(&sigma)?;
        curves.push(beta);
        curve_names.push(format!("beta:{}", basis.names[i]));
    }

    let marked: BTreeSet<SideId> = (0..sigma.side_count())
        .map(SideId)
        .filter(|&s| sigma.is_boundary(s))
        .collect();
    let arrangement = Arrangement::build(&sigma, &curves, &marked)?;

    // ---- distinguished points and level checks ----
    let mut distinguished = Vec::new();
    for i in 0..r {
        let mut found = None;
        for (cid, cr) in arrangement.crossings.iter().enumerate() {
            let in_plus = plus_level.contains(&cr.polygon);
            let (c1, c2) = (cr.a.0, cr.b.0);
            let is_ab = |x: usize, y: usize| c1 == x && c2 == y || c1 == y && c2 == x;
            if in_plus {
                if is_ab(i, r + i) {
                    if found.is_some() {
                        return Err(Error::internal(format!(
                            "alpha {i} meets beta {i} twice at level +1"
                        )));
                    }
                    found = Some(cid);
                } else {
                    // no cross-crossings at +1
                    let alpha_involved = c1 < r || c2 < r;
                    let beta_involved = c1 >= r || c2 >= r;
                    if alpha_involved && beta_involved && !is_ab(i, r + i) {
                        let (x, y) = (c1.min(c2), c1.max(c2));
                        if x < r && y >= r && y - r != x {
                            return Err(Error::internal(format!(
                                "level +1 carries a crossing of {} with {}",
                                curve_names[x], curve_names[y]
                            )));
                        }
                    }
                }
            }
        }
        let cid = found.ok_or_else(|| {
            Error::internal(format!("distinguished point x_{i} not found at level +1"))
        })?;
        distinguished.push(cid);
    }

    // sign of each distinguished crossing must be +1 (alpha then beta
    // positively oriented)
    for (i, &cid) in distinguished.iter().enumerate() {
        let cr = &arrangement.crossings[cid];
        let sign = if cr.a.0 == i { cr.sign_ab() } else { -cr.sign_ab() };
        if sign != 1 {
            return Err(Error::internal(format!(
                "distinguished crossing x_{i} has sign {sign} (want +1)"
            )));
        }
    }

    Ok(SuturedHeegaardDiagram {
        sigma,
        arrangement,
        r,
        distinguished,
        plus_level,
        curve_names,
    })
}

/// Assemble a diagram directly from a surface with curves (diagram mode).
pub fn diagram_from_parts(
    sigma: PolygonComplex,
    alphas: Vec<ArcPath>,
    betas: Vec<ArcPath>,
    distinguished_pairs: Vec<usize>,
    names: Vec<String>,
) -> Result<SuturedHeegaardDiagram> {
    if alphas.len() != betas.len() {
        return Err(Error::invalid("need equally many alpha and beta curves"));
    }
    let r = alphas.len();
    sigma.validate()?;
    let mut curves = alphas;
    curves.extend(betas);
    let marked: BTreeSet<SideId> = (0..sigma.side_count())
        .map(SideId)
        .filter(|&s| sigma.is_boundary(s))
        .collect();
    let arrangement = Arrangement::build(&sigma, &curves, &marked)?;
    Ok(SuturedHeegaardDiagram {
        sigma,
        arrangement,
        r,
        distinguished: distinguished_pairs,
        plus_level: BTreeSet::new(),
        curve_names: names,
    })
}
