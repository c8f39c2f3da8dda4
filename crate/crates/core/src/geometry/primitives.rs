use std::fmt;

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// A point in 3-space with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RationalPoint3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl RationalPoint3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        RationalPoint3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        RationalPoint3::new(x.into(), y.into(), z.into())
    }

    pub fn coords(&self) -> [&Rational; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub(crate) fn sub(&self, other: &RationalPoint3) -> Vec3 {
        Vec3([&self.x - &other.x, &self.y - &other.y, &self.z - &other.z])
    }

    pub(crate) fn offset(&self, v: &Vec3, t: &Rational) -> RationalPoint3 {
        RationalPoint3::new(
            &self.x + &(&v.0[0] * t),
            &self.y + &(&v.0[1] * t),
            &self.z + &(&v.0[2] * t),
        )
    }

    /// Returns the integer coordinates if every component is integral.
    pub fn as_integer_triple(&self) -> Option<[i64; 3]> {
        use num_traits::ToPrimitive;
        let mut out = [0i64; 3];
        for (slot, c) in out.iter_mut().zip(self.coords()) {
            if !c.is_integer() {
                return None;
            }
            *slot = c.numer().to_i64()?;
        }
        Some(out)
    }

    pub fn midpoint(&self, other: &RationalPoint3) -> RationalPoint3 {
        let half = Rational::new(1, 2).expect("nonzero");
        RationalPoint3::new(
            (&self.x + &other.x) * &half,
            (&self.y + &other.y) * &half,
            (&self.z + &other.z) * &half,
        )
    }
}

impl fmt::Display for RationalPoint3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {} {})", self.x, self.y, self.z)
    }
}

impl fmt::Debug for RationalPoint3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Displacement vector used internally by the intersection kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Vec3(pub [Rational; 3]);

impl Vec3 {
    pub fn dot(&self, o: &Vec3) -> Rational {
        &(&self.0[0] * &o.0[0]) + &(&(&self.0[1] * &o.0[1]) + &(&self.0[2] * &o.0[2]))
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        let [a0, a1, a2] = &self.0;
        let [b0, b1, b2] = &o.0;
        Vec3([
            &(a1 * b2) - &(a2 * b1),
            &(a2 * b0) - &(a0 * b2),
            &(a0 * b1) - &(a1 * b0),
        ])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }
}

/// Closed straight segment between two distinct points.
///
/// Endpoints are stored in lexicographic order, so `Segment::new(a, b)` and
/// `Segment::new(b, a)` compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Segment {
    a: RationalPoint3,
    b: RationalPoint3,
}

impl Segment {
    pub fn new(a: RationalPoint3, b: RationalPoint3) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateSegment(a.to_string()));
        }
        Ok(if a < b {
            Segment { a, b }
        } else {
            Segment { a: b, b: a }
        })
    }

    pub fn a(&self) -> &RationalPoint3 {
        &self.a
    }

    pub fn b(&self) -> &RationalPoint3 {
        &self.b
    }

    pub(crate) fn direction(&self) -> Vec3 {
        self.b.sub(&self.a)
    }

    /// Point at parameter `t`, where `t = 0` is `a` and `t = 1` is `b`.
    pub fn at(&self, t: &Rational) -> RationalPoint3 {
        self.a.offset(&self.direction(), t)
    }

    pub fn midpoint(&self) -> RationalPoint3 {
        self.a.midpoint(&self.b)
    }

    pub fn has_endpoint(&self, p: &RationalPoint3) -> bool {
        &self.a == p || &self.b == p
    }

    /// Parameter of `p` along the segment's line, or `None` if `p` is off the line.
    pub fn parameter_of(&self, p: &RationalPoint3) -> Option<Rational> {
        let d = self.direction();
        let w = p.sub(&self.a);
        if !d.cross(&w).is_zero() {
            return None;
        }
        Some(w.dot(&d) / d.dot(&d))
    }

    pub fn contains(&self, p: &RationalPoint3) -> bool {
        match self.parameter_of(p) {
            Some(t) => !t.is_negative() && t <= Rational::one(),
            None => false,
        }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Closed axis-aligned box with integer corners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Box3 {
    min: [i64; 3],
    max: [i64; 3],
}

impl Box3 {
    pub fn new(min: [i64; 3], max: [i64; 3]) -> Result<Self> {
        if (0..3).any(|i| min[i] >= max[i]) {
            return Err(Error::Precondition(format!(
                "box min {min:?} must be below max {max:?} on every axis"
            )));
        }
        Ok(Box3 { min, max })
    }

    pub fn unit(min: [i64; 3]) -> Self {
        Box3 {
            min,
            max: [min[0] + 1, min[1] + 1, min[2] + 1],
        }
    }

    pub fn min(&self) -> [i64; 3] {
        self.min
    }

    pub fn max(&self) -> [i64; 3] {
        self.max
    }

    pub fn contains(&self, p: &RationalPoint3) -> bool {
        p.coords()
            .iter()
            .enumerate()
            .all(|(i, c)| **c >= Rational::from(self.min[i]) && **c <= Rational::from(self.max[i]))
    }

    pub fn contains_int(&self, p: [i64; 3]) -> bool {
        (0..3).all(|i| self.min[i] <= p[i] && p[i] <= self.max[i])
    }
}

/// Whether `p` lies in the closed union of `boxes`. Boundaries count as inside.
pub fn point_in_box_union(p: &RationalPoint3, boxes: &[Box3]) -> Result<bool> {
    if boxes.is_empty() {
        return Err(Error::EmptyBoxList);
    }
    Ok(boxes.iter().any(|b| b.contains(p)))
}

/// Whether `p` lies on `s` strictly between its endpoints.
pub fn point_interior_to_segment(p: &RationalPoint3, s: &Segment) -> bool {
    !s.has_endpoint(p) && s.contains(p)
}
