//! Exact rational arithmetic used for boundary positions and geometry.
//!
//! All positions of points on polygon sides are rationals strictly between
//! 0 and 1, and all planar computations in an arrangement (chord crossing
//! points, angular sorting) are done with exact big rationals. There is no
//! floating point anywhere in the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_i(num: i64) -> Rat {
    BigRational::from(BigInt::from(num))
}

pub fn zero() -> Rat {
    BigRational::zero()
}

pub fn one() -> Rat {
    BigRational::one()
}

/// Midpoint of two rationals.
pub fn mid(a: &Rat, b: &Rat) -> Rat {
    (a + b) / rat_i(2)
}

/// A point in the affine plane with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pt {
    pub x: Rat,
    pub y: Rat,
}

impl Pt {
    pub fn new(x: Rat, y: Rat) -> Self {
        Pt { x, y }
    }

    pub fn sub(&self, o: &Pt) -> Pt {
        Pt::new(&self.x - &o.x, &self.y - &o.y)
    }
}

/// Cross product of vectors `a` and `b` (z-component).
pub fn cross(a: &Pt, b: &Pt) -> Rat {
    &a.x * &b.y - &a.y * &b.x
}

/// Orientation of the triangle `(a, b, c)`: positive when counterclockwise.
pub fn orient(a: &Pt, b: &Pt, c: &Pt) -> Rat {
    cross(&b.sub(a), &c.sub(a))
}

/// Rational point on the unit circle for the stereographic parameter `s`:
/// `((1-s²)/(1+s²), 2s/(1+s²))`. Strictly monotone in `s` along the circle
/// (counterclockwise, starting near (-1, 0⁻) for s → -∞).
pub fn circle_point(s: &Rat) -> Pt {
    let s2 = s * s;
    let den = &s2 + one();
    Pt::new((one() - &s2) / den.clone(), (rat_i(2) * s) / den)
}

/// Monotone rational bijection (0,1) → ℝ used to spread cyclic boundary
/// coordinates over the stereographic parameter line.
pub fn unit_to_line(u: &Rat) -> Rat {
    // (2u - 1) / (u(1-u)), strictly increasing on (0,1).
    (rat_i(2) * u - one()) / (u * &(one() - u))
}

/// Intersection point of segments `a0a1` and `b0b1`, assuming they properly
/// cross (endpoints in general position). Returns the parameter `t` along
/// `a0a1` and the point.
pub fn segment_intersection(a0: &Pt, a1: &Pt, b0: &Pt, b1: &Pt) -> (Rat, Pt) {
    let d1 = a1.sub(a0);
    let d2 = b1.sub(b0);
    let denom = cross(&d1, &d2);
    debug_assert!(!denom.is_zero(), "segments must properly cross");
    let t = cross(&b0.sub(a0), &d2) / denom;
    let p = Pt::new(&a0.x + &d1.x * &t, &a0.y + &d1.y * &t);
    (t, p)
}

/// Comparator for directions (vectors from a common point) in
/// counterclockwise angular order starting just above the positive x-axis.
pub fn angle_cmp(a: &Pt, b: &Pt) -> std::cmp::Ordering {
    let ha = half_plane(a);
    let hb = half_plane(b);
    if ha != hb {
        return ha.cmp(&hb);
    }
    let c = cross(a, b);
    if c.is_zero() {
        std::cmp::Ordering::Equal
    } else if c > zero() {
        std::cmp::Ordering::Less
    } else {
        std::cmp::Ordering::Greater
    }
}

fn half_plane(v: &Pt) -> u8 {
    // 0: positive x-axis; 1: upper half; 2: negative x-axis; 3: lower half.
    if v.y.is_zero() {
        if v.x > zero() {
            0
        } else {
            2
        }
    } else if v.y > zero() {
        1
    } else {
        3
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_points_are_on_circle_and_ordered() {
        let params = [rat(-5, 1), rat(-1, 2), rat(0, 1), rat(1, 3), rat(7, 2)];
        for s in &params {
            let p = circle_point(s);
            assert_eq!(&p.x * &p.x + &p.y * &p.y, one());
        }
        // unit_to_line is strictly increasing
        let us = [rat(1, 10), rat(1, 4), rat(1, 2), rat(2, 3), rat(9, 10)];
        for w in us.windows(2) {
            assert!(unit_to_line(&w[0]) < unit_to_line(&w[1]));
        }
    }

    #[test]
    fn segment_crossing() {
        let (t, p) = segment_intersection(
            &Pt::new(rat_i(0), rat_i(0)),
            &Pt::new(rat_i(2), rat_i(2)),
            &Pt::new(rat_i(0), rat_i(2)),
            &Pt::new(rat_i(2), rat_i(0)),
        );
        assert_eq!(t, rat(1, 2));
        assert_eq!(p, Pt::new(rat_i(1), rat_i(1)));
    }

    #[test]
    fn angular_order() {
        let e = Pt::new(rat_i(1), rat_i(0));
        let n = Pt::new(rat_i(0), rat_i(1));
        let w = Pt::new(rat_i(-1), rat_i(0));
        let s = Pt::new(rat_i(0), rat_i(-1));
        let mut v = vec![w.clone(), s.clone(), e.clone(), n.clone()];
        v.sort_by(angle_cmp);
        assert_eq!(v, vec![e, n, w, s]);
    }
}
