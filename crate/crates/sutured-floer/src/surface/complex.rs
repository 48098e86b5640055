//! Oriented surfaces built from convex polygons with side identifications.
//!
//! A [`PolygonComplex`] is a disjoint union of convex polygons, each with a
//! cyclic, counterclockwise list of sides, together with an involutive
//! pairing of some sides. Every identification is orientation-reversing
//! (the glued side is traversed oppositely in the two polygons), so the
//! resulting surface is always oriented. Unpaired sides form the boundary.
//!
//! Points on a side are addressed by a rational position strictly between
//! 0 and 1, measured along the side in the orientation induced by its
//! polygon. A point at position `p` on a glued side coincides with the
//! point at position `1 - p` on the partner side.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolygonId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SideId(pub usize);

#[derive(Clone, Debug)]
pub struct Polygon {
    pub name: String,
    /// Sides in counterclockwise cyclic order.
    pub sides: Vec<SideId>,
}

#[derive(Clone, Debug)]
pub struct Side {
    pub polygon: PolygonId,
    /// Position of this side in the polygon's cyclic list.
    pub index: usize,
    pub partner: Option<SideId>,
}

#[derive(Clone, Debug, Default)]
pub struct PolygonComplex {
    polygons: Vec<Polygon>,
    sides: Vec<Side>,
}

/// Census of one connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInfo {
    pub polygons: Vec<PolygonId>,
    pub chi: i64,
    pub genus: i64,
    pub boundary_components: usize,
}

impl PolygonComplex {
    pub fn new() -> Self {
        PolygonComplex::default()
    }

    pub fn add_polygon(&mut self, name: impl Into<String>, n_sides: usize) -> Result<PolygonId> {
        let name = name.into();
        if n_sides < 2 {
            return Err(Error::invalid(format!(
                "polygon {name} must have at least 2 sides"
            )));
        }
        if self.polygons.iter().any(|p| p.name == name) {
            return Err(Error::invalid(format!("duplicate polygon name {name}")));
        }
        let pid = PolygonId(self.polygons.len());
        let mut sides = Vec::with_capacity(n_sides);
        for index in 0..n_sides {
            let sid = SideId(self.sides.len());
            self.sides.push(Side {
                polygon: pid,
                index,
                partner: None,
            });
            sides.push(sid);
        }
        self.polygons.push(Polygon { name, sides });
        Ok(pid)
    }

    pub fn glue(&mut self, a: SideId, b: SideId) -> Result<()> {
        if a == b {
            return Err(Error::invalid(format!(
                "side {} cannot be glued to itself",
                self.side_name(a)
            )));
        }
        for s in [a, b] {
            if self.sides[s.0].partner.is_some() {
                return Err(Error::invalid(format!(
                    "side {} is already glued",
                    self.side_name(s)
                )));
            }
        }
        self.sides[a.0].partner = Some(b);
        self.sides[b.0].partner = Some(a);
        Ok(())
    }

    pub fn polygons(&self) -> impl Iterator<Item = PolygonId> {
        (0..self.polygons.len()).map(PolygonId)
    }

    pub fn polygon(&self, p: PolygonId) -> &Polygon {
        &self.polygons[p.0]
    }

    pub fn polygon_count(&self) -> usize {
        self.polygons.len()
    }

    pub fn side(&self, s: SideId) -> &Side {
        &self.sides[s.0]
    }

    pub fn side_count(&self) -> usize {
        self.sides.len()
    }

    pub fn partner(&self, s: SideId) -> Option<SideId> {
        self.sides[s.0].partner
    }

    pub fn is_boundary(&self, s: SideId) -> bool {
        self.sides[s.0].partner.is_none()
    }

    pub fn side_name(&self, s: SideId) -> String {
        let sd = &self.sides[s.0];
        format!("{}.{}", self.polygons[sd.polygon.0].name, sd.index)
    }

    pub fn polygon_by_name(&self, name: &str) -> Option<PolygonId> {
        self.polygons
            .iter()
            .position(|p| p.name == name)
            .map(PolygonId)
    }

    pub fn side_by_name(&self, name: &str) -> Option<SideId> {
        let (pname, idx) = name.rsplit_once('.')?;
        let p = self.polygon_by_name(pname)?;
        let idx: usize = idx.parse().ok()?;
        self.polygons[p.0].sides.get(idx).copied()
    }

    /// The side after `s` in its polygon's cyclic order.
    pub fn next_side(&self, s: SideId) -> SideId {
        let sd = &self.sides[s.0];
        let poly = &self.polygons[sd.polygon.0];
        poly.sides[(sd.index + 1) % poly.sides.len()]
    }

    /// Corner identifier at the tail of side `s` (a local corner; global
    /// vertices are orbits of these under the gluing).
    fn corner_at_tail(&self, s: SideId) -> usize {
        s.0
    }

    fn corner_at_head(&self, s: SideId) -> usize {
        self.next_side(s).0
    }

    /// Union-find vertex classes of polygon corners.
    pub fn corner_classes(&self) -> Vec<usize> {
        let mut uf: Vec<usize> = (0..self.sides.len()).collect();
        fn find(uf: &mut Vec<usize>, mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        for s in 0..self.sides.len() {
            if let Some(t) = self.sides[s].partner {
                // orientation-reversing: tail(s) = head(t), head(s) = tail(t)
                let pairs = [
                    (self.corner_at_tail(SideId(s)), self.corner_at_head(t)),
                    (self.corner_at_head(SideId(s)), self.corner_at_tail(t)),
                ];
                for (a, b) in pairs {
                    let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
                    uf[ra] = rb;
                }
            }
        }
        let mut out = vec![0; self.sides.len()];
        for i in 0..self.sides.len() {
            out[i] = find(&mut uf, i);
        }
        out
    }

    /// Euler characteristic of the whole complex.
    pub fn chi(&self) -> i64 {
        let classes = self.corner_classes();
        let mut reps: Vec<usize> = classes.clone();
        reps.sort_unstable();
        reps.dedup();
        let v = reps.len() as i64;
        let glued_pairs = self
            .sides
            .iter()
            .enumerate()
            .filter(|(i, s)| s.partner.map(|p| p.0 > *i).unwrap_or(false))
            .count() as i64;
        let boundary = self.sides.iter().filter(|s| s.partner.is_none()).count() as i64;
        let e = glued_pairs + boundary;
        let f = self.polygons.len() as i64;
        v - e + f
    }

    /// Walk the boundary: the boundary side following `s`.
    pub fn next_boundary_side(&self, s: SideId) -> SideId {
        debug_assert!(self.is_boundary(s));
        let mut t = self.next_side(s);
        while let Some(u) = self.sides[t.0].partner {
            t = self.next_side(u);
        }
        t
    }

    /// Boundary components as cyclic lists of boundary sides, in the
    /// boundary orientation induced by the surface orientation.
    pub fn boundary_cycles(&self) -> Vec<Vec<SideId>> {
        let mut seen = vec![false; self.sides.len()];
        let mut cycles = Vec::new();
        for s in 0..self.sides.len() {
            if self.sides[s].partner.is_some() || seen[s] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = SideId(s);
            loop {
                seen[cur.0] = true;
                cycle.push(cur);
                cur = self.next_boundary_side(cur);
                if cur.0 == s {
                    break;
                }
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Connected components with genus and boundary census.
    pub fn classify(&self) -> Vec<ComponentInfo> {
        // union-find on polygons
        let mut uf: Vec<usize> = (0..self.polygons.len()).collect();
        fn find(uf: &mut Vec<usize>, mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        for s in &self.sides {
            if let Some(t) = s.partner {
                let a = find(&mut uf, s.polygon.0);
                let b = find(&mut uf, self.sides[t.0].polygon.0);
                uf[a] = b;
            }
        }
        let mut comp_of_poly = vec![0usize; self.polygons.len()];
        let mut reps: BTreeMap<usize, usize> = BTreeMap::new();
        for p in 0..self.polygons.len() {
            let r = find(&mut uf, p);
            let next_id = reps.len();
            let id = *reps.entry(r).or_insert(next_id);
            comp_of_poly[p] = id;
        }
        let n_comp = reps.len();

        // per-component cell counts
        let classes = self.corner_classes();
        let mut v = vec![0i64; n_comp];
        let mut seen_class: BTreeMap<usize, ()> = BTreeMap::new();
        for s in 0..self.sides.len() {
            let c = classes[s];
            if seen_class.insert(c, ()).is_none() {
                v[comp_of_poly[self.sides[s].polygon.0]] += 1;
            }
        }
        let mut e = vec![0i64; n_comp];
        for (i, s) in self.sides.iter().enumerate() {
            match s.partner {
                Some(p) if p.0 < i => {}
                _ => e[comp_of_poly[s.polygon.0]] += 1,
            }
        }
        let f = {
            let mut f = vec![0i64; n_comp];
            for p in 0..self.polygons.len() {
                f[comp_of_poly[p]] += 1;
            }
            f
        };
        let mut boundary = vec![0usize; n_comp];
        for cycle in self.boundary_cycles() {
            boundary[comp_of_poly[self.sides[cycle[0].0].polygon.0]] += 1;
        }

        (0..n_comp)
            .map(|c| {
                let chi = v[c] - e[c] + f[c];
                let b = boundary[c] as i64;
                let genus = (2 - chi - b) / 2;
                ComponentInfo {
                    polygons: (0..self.polygons.len())
                        .filter(|&p| comp_of_poly[p] == c)
                        .map(PolygonId)
                        .collect(),
                    chi,
                    genus,
                    boundary_components: boundary[c],
                }
            })
            .collect()
    }

    /// Validate structural invariants; returns a descriptive error on the
    /// first violation.
    pub fn validate(&self) -> Result<()> {
        for (i, s) in self.sides.iter().enumerate() {
            if let Some(t) = s.partner {
                if t.0 == i {
                    return Err(Error::invalid(format!(
                        "side {} glued to itself",
                        self.side_name(SideId(i))
                    )));
                }
                if self.sides[t.0].partner != Some(SideId(i)) {
                    return Err(Error::internal("side pairing is not an involution"));
                }
            }
        }
        for info in self.classify() {
            let b = info.boundary_components as i64;
            if (2 - info.chi - b) % 2 != 0 || info.genus < 0 {
                return Err(Error::internal(format!(
                    "component census inconsistent: chi={} b={}",
                    info.chi, b
                )));
            }
        }
        Ok(())
    }

    /// The mirrored complex: same polygons and gluings with all orientations
    /// reversed. Side identities are preserved; a point at position `p` on a
    /// side corresponds to position `1 - p` on the mirrored side.
    pub fn mirrored(&self, suffix: &str) -> PolygonComplex {
        let mut out = PolygonComplex::new();
        for p in &self.polygons {
            let n = p.sides.len();
            let pid = out
                .add_polygon(format!("{}{}", p.name, suffix), n)
                .expect("mirror polygon");
            // new side j corresponds to old side n-1-j
            let _ = pid;
        }
        // gluings: old side (poly i, index k) -> new side (poly i, index n-1-k)
        for (i, s) in self.sides.iter().enumerate() {
            if let Some(t) = s.partner {
                if t.0 < i {
                    continue;
                }
                let a = self.mirror_side_map(SideId(i), &out);
                let b = self.mirror_side_map(t, &out);
                out.glue(a, b).expect("mirror glue");
            }
        }
        out
    }

    /// Map a side of `self` to the corresponding side of the mirrored
    /// complex produced by [`PolygonComplex::mirrored`].
    pub fn mirror_side_map(&self, s: SideId, mirrored: &PolygonComplex) -> SideId {
        let sd = &self.sides[s.0];
        let n = self.polygons[sd.polygon.0].sides.len();
        mirrored.polygons[sd.polygon.0].sides[n - 1 - sd.index]
    }

    /// The subcomplex spanned by `keep`: gluings between kept polygons
    /// survive, gluings to dropped polygons become boundary. Returns the
    /// new complex and the side map (old side -> new side).
    pub fn restricted(
        &self,
        keep: &std::collections::BTreeSet<PolygonId>,
    ) -> (PolygonComplex, BTreeMap<SideId, SideId>) {
        let mut out = PolygonComplex::new();
        let mut side_map = BTreeMap::new();
        for (pi, p) in self.polygons.iter().enumerate() {
            if !keep.contains(&PolygonId(pi)) {
                continue;
            }
            let np = out
                .add_polygon(p.name.clone(), p.sides.len())
                .expect("restricted polygon");
            for (k, &old) in p.sides.iter().enumerate() {
                side_map.insert(old, out.polygons[np.0].sides[k]);
            }
        }
        for (i, s) in self.sides.iter().enumerate() {
            if let Some(t) = s.partner {
                if t.0 < i {
                    continue;
                }
                if let (Some(&a), Some(&b)) = (side_map.get(&SideId(i)), side_map.get(&t)) {
                    out.glue(a, b).expect("restricted glue");
                }
            }
        }
        (out, side_map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> (PolygonComplex, PolygonId) {
        let mut c = PolygonComplex::new();
        let p = c.add_polygon("sq", 4).unwrap();
        (c, p)
    }

    #[test]
    fn disk_census() {
        let (c, _) = square();
        assert_eq!(c.chi(), 1);
        let info = c.classify();
        assert_eq!(info.len(), 1);
        assert_eq!(info[0].genus, 0);
        assert_eq!(info[0].boundary_components, 1);
    }

    #[test]
    fn annulus_census() {
        let (mut c, p) = square();
        let sides = c.polygon(p).sides.clone();
        c.glue(sides[1], sides[3]).unwrap();
        assert_eq!(c.chi(), 0);
        let info = c.classify();
        assert_eq!(info[0].genus, 0);
        assert_eq!(info[0].boundary_components, 2);
    }

    #[test]
    fn torus_census() {
        let (mut c, p) = square();
        let sides = c.polygon(p).sides.clone();
        c.glue(sides[0], sides[2]).unwrap();
        c.glue(sides[1], sides[3]).unwrap();
        assert_eq!(c.chi(), 0);
        let info = c.classify();
        assert_eq!(info[0].genus, 1);
        assert_eq!(info[0].boundary_components, 0);
    }

    #[test]
    fn punctured_torus_from_annulus_and_band() {
        // annulus (square with sides 1,3 glued) plus a band joining its two
        // boundary circles gives a once-punctured torus
        let mut c = PolygonComplex::new();
        let a = c.add_polygon("a", 6).unwrap();
        let b = c.add_polygon("b", 4).unwrap();
        let asides = c.polygon(a).sides.clone();
        let bsides = c.polygon(b).sides.clone();
        // a: 0 bdry, 1 glueL, 2 bdry(foot), 3 bdry, 4 glueR(partner of 1), 5 bdry(foot)
        c.glue(asides[1], asides[4]).unwrap();
        c.glue(asides[2], bsides[0]).unwrap();
        c.glue(asides[5], bsides[2]).unwrap();
        assert_eq!(c.chi(), -1);
        let info = c.classify();
        assert_eq!(info[0].boundary_components, 1);
        assert_eq!(info[0].genus, 1);
    }

    #[test]
    fn mirror_preserves_census() {
        let mut c = PolygonComplex::new();
        let a = c.add_polygon("a", 5).unwrap();
        let sides = c.polygon(a).sides.clone();
        c.glue(sides[1], sides[3]).unwrap();
        let m = c.mirrored("-");
        assert_eq!(m.chi(), c.chi());
        assert_eq!(
            m.classify()[0].boundary_components,
            c.classify()[0].boundary_components
        );
    }

    #[test]
    fn self_glue_rejected() {
        let (mut c, p) = square();
        let s = c.polygon(p).sides[0];
        assert!(c.glue(s, s).is_err());
    }
}
