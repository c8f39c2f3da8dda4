//! Exact rational geometry: points, segments, boxes and segment intersection.
//!
//! Nothing in this module touches floating point.

mod intersect;
mod primitives;
mod rational;

pub use intersect::{intersect_segments, IntersectionResult};
pub use primitives::{
    point_in_box_union, point_interior_to_segment, Box3, RationalPoint3, Segment,
};
pub use rational::Rational;
