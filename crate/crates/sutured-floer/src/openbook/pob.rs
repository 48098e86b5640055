//! The partial open book model `(S, R₊(Γ), h)`.
//!
//! The page `S` is a polygon complex whose polygons are labeled `Plus`
//! (their union is the closure of `R₊(Γ)`) or `Handle` (their union is the
//! closure of `P = S − R₊(Γ)`). The suture `Γ` consists of the interface
//! sides between differently-labeled polygons together with the boundary
//! sides of `Plus` polygons; `A = ∂P − Γ` consists of the boundary sides of
//! `Handle` polygons. The monodromy `h : P → S` is given either as a word
//! of Dehn twists in named simple closed curves, or as explicit image arcs
//! for the basis pushoffs.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::surface::complex::{PolygonComplex, PolygonId, SideId};
use crate::surface::path::{validate_simple, ArcPath};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    Plus,
    Handle,
}

/// One Dehn twist letter: named curve and sign (+1 = positive twist).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistLetter {
    pub curve: String,
    pub sign: i32,
}

#[derive(Clone, Debug)]
pub enum Monodromy {
    /// Twist word; the leftmost letter is applied last (`R_γ ∘ h` prepends
    /// a letter on the left).
    TwistWord(Vec<TwistLetter>),
    /// Explicit images of the basis pushoffs, keyed by basis arc name:
    /// `images[a]` is `h(b_a)` drawn on the page.
    Images(BTreeMap<String, ArcPath>),
}

#[derive(Clone, Debug)]
pub struct PartialOpenBook {
    pub page: PolygonComplex,
    /// Label per polygon, indexed by `PolygonId`.
    pub labels: Vec<Label>,
    /// Named simple closed curves available to the twist word.
    pub curves: BTreeMap<String, ArcPath>,
    pub monodromy: Monodromy,
}

/// Named, ordered basis arcs `a_1, …, a_r`.
#[derive(Clone, Debug)]
pub struct Basis {
    pub names: Vec<String>,
    pub arcs: Vec<ArcPath>,
}

impl Basis {
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

impl PartialOpenBook {
    pub fn label(&self, p: PolygonId) -> Label {
        self.labels[p.0]
    }

    /// Interface sides: glued sides whose two polygons carry different
    /// labels. Both members of each pair are included.
    pub fn interface_sides(&self) -> BTreeSet<SideId> {
        let mut out = BTreeSet::new();
        for s in 0..self.page.side_count() {
            let sid = SideId(s);
            if let Some(t) = self.page.partner(sid) {
                let ls = self.label(self.page.side(sid).polygon);
                let lt = self.label(self.page.side(t).polygon);
                if ls != lt {
                    out.insert(sid);
                }
            }
        }
        out
    }

    /// Γ edges: interface sides plus boundary sides of Plus polygons.
    pub fn gamma_sides(&self) -> BTreeSet<SideId> {
        let mut out = self.interface_sides();
        for s in 0..self.page.side_count() {
            let sid = SideId(s);
            if self.page.is_boundary(sid) && self.label(self.page.side(sid).polygon) == Label::Plus
            {
                out.insert(sid);
            }
        }
        out
    }

    /// A edges: boundary sides of Handle polygons.
    pub fn a_sides(&self) -> BTreeSet<SideId> {
        (0..self.page.side_count())
            .map(SideId)
            .filter(|&s| {
                self.page.is_boundary(s) && self.label(self.page.side(s).polygon) == Label::Handle
            })
            .collect()
    }

    pub fn handle_polygons(&self) -> BTreeSet<PolygonId> {
        self.page
            .polygons()
            .filter(|&p| self.label(p) == Label::Handle)
            .collect()
    }

    /// The closure of `P` as its own complex, with the side map from page
    /// sides to subcomplex sides.
    pub fn handle_subcomplex(&self) -> (PolygonComplex, BTreeMap<SideId, SideId>) {
        self.page.restricted(&self.handle_polygons())
    }
}

/// Validation report for a partial open book.
#[derive(Clone, Debug)]
pub struct PobReport {
    pub plus_polygons: usize,
    pub handle_polygons: usize,
    pub gamma_sides: usize,
    pub a_sides: usize,
    pub handle_components: usize,
}

/// Check the structure of a partial open book; see the module docs for the
/// meaning of the parts.
pub fn validate_pob(pob: &PartialOpenBook) -> Result<PobReport> {
    pob.page.validate()?;
    if pob.labels.len() != pob.page.polygon_count() {
        return Err(Error::invalid("every polygon needs exactly one label"));
    }

    // every Handle component must meet A (have a boundary side)
    let handle_polys = pob.handle_polygons();
    let mut handle_components = 0usize;
    if !handle_polys.is_empty() {
        let (sub, _map) = pob.handle_subcomplex();
        let infos = sub.classify();
        handle_components = infos.len();
        // boundary sides of the page that are in the subcomplex
        let a_sides = pob.a_sides();
        for info in &infos {
            let mut has_a = false;
            'outer: for &p in &info.polygons {
                // p indexes the subcomplex; map back via name
                let name = sub.polygon(p).name.clone();
                let orig = pob
                    .page
                    .polygon_by_name(&name)
                    .ok_or_else(|| Error::internal("subcomplex polygon name mismatch"))?;
                for &sid in &pob.page.polygon(orig).sides {
                    if a_sides.contains(&sid) {
                        has_a = true;
                        break 'outer;
                    }
                }
            }
            if !has_a {
                return Err(Error::invalid(
                    "a component of P has no boundary side on ∂S (A is empty there)",
                ));
            }
        }
    }

    match &pob.monodromy {
        Monodromy::TwistWord(word) => {
            for letter in word {
                if letter.sign != 1 && letter.sign != -1 {
                    return Err(Error::invalid(format!(
                        "twist sign must be +1 or -1, got {}",
                        letter.sign
                    )));
                }
                let curve = pob.curves.get(&letter.curve).ok_or_else(|| {
                    Error::invalid(format!("twist word references unknown curve {}", letter.curve))
                })?;
                if !curve.closed {
                    return Err(Error::invalid(format!(
                        "twist curve {} is not closed",
                        letter.curve
                    )));
                }
                let report = validate_simple(&pob.page, curve, &[])?;
                if !report.is_simple() {
                    return Err(Error::invalid(format!(
                        "twist curve {} is not simple",
                        letter.curve
                    )));
                }
            }
        }
        Monodromy::Images(images) => {
            for (name, img) in images {
                let report = validate_simple(&pob.page, img, &[])?;
                if !report.is_simple() {
                    return Err(Error::invalid(format!(
                        "monodromy image for {name} is not simple"
                    )));
                }
                if img.closed {
                    return Err(Error::invalid(format!(
                        "monodromy image for {name} must be an arc"
                    )));
                }
            }
        }
    }

    Ok(PobReport {
        plus_polygons: pob.labels.iter().filter(|&&l| l == Label::Plus).count(),
        handle_polygons: handle_polys.len(),
        gamma_sides: pob.gamma_sides().len(),
        a_sides: pob.a_sides().len(),
        handle_components,
    })
}
