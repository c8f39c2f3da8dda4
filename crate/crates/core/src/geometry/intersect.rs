use serde::{Deserialize, Serialize};

use super::{Rational, RationalPoint3, Segment};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IntersectionResult {
    Empty,
    Point(RationalPoint3),
    /// Positive-length common sub-segment of two collinear segments.
    Overlap(Segment),
}

/// Exact intersection of two closed segments in 3-space.
///
/// Collinear segments that touch in a single point yield `Point`, not
/// `Overlap`.
pub fn intersect_segments(s1: &Segment, s2: &Segment) -> IntersectionResult {
    let p = s1.a();
    let d1 = s1.direction();
    let d2 = s2.direction();
    let w = s2.a().sub(p);
    let n = d1.cross(&d2);

    if n.is_zero() {
        // Parallel: only collinear segments can meet.
        if !w.cross(&d1).is_zero() {
            return IntersectionResult::Empty;
        }
        let dd = d1.dot(&d1);
        let t0 = w.dot(&d1) / dd.clone();
        let t1 = &t0 + &(d2.dot(&d1) / dd);
        let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        let lo = lo.max(Rational::zero());
        let hi = hi.min(Rational::one());
        return match lo.cmp(&hi) {
            std::cmp::Ordering::Greater => IntersectionResult::Empty,
            std::cmp::Ordering::Equal => IntersectionResult::Point(s1.at(&lo)),
            std::cmp::Ordering::Less => IntersectionResult::Overlap(
                Segment::new(s1.at(&lo), s1.at(&hi)).expect("lo < hi gives distinct points"),
            ),
        };
    }

    // Skew lines never meet.
    if !w.dot(&n).is_zero() {
        return IntersectionResult::Empty;
    }

    let nn = n.dot(&n);
    let t = w.cross(&d2).dot(&n) / nn.clone();
    let u = w.cross(&d1).dot(&n) / nn;
    let unit = 0.into()..=Rational::one();
    if unit.contains(&t) && unit.contains(&u) {
        IntersectionResult::Point(s1.at(&t))
    } else {
        IntersectionResult::Empty
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(x: i64, y: i64, z: i64) -> RationalPoint3 {
        RationalPoint3::from_ints(x, y, z)
    }

    fn seg(a: [i64; 3], b: [i64; 3]) -> Segment {
        Segment::new(pt(a[0], a[1], a[2]), pt(b[0], b[1], b[2])).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn square_diagonals_cross_at_centre() {
        let res = intersect_segments(&seg([0, 0, 0], [1, 1, 0]), &seg([1, 0, 0], [0, 1, 0]));
        assert_eq!(
            res,
            IntersectionResult::Point(RationalPoint3::new(r(1, 2), r(1, 2), 0.into()))
        );
    }

    #[test]
    fn collinear_overlap() {
        let res = intersect_segments(&seg([0, 0, 0], [2, 0, 0]), &seg([1, 0, 0], [3, 0, 0]));
        assert_eq!(res, IntersectionResult::Overlap(seg([1, 0, 0], [2, 0, 0])));
    }

    #[test]
    fn space_diagonals_cross_at_body_centre() {
        // Parametric solve: t(1,1,1) = (1,0,0) + u(-1,1,1) gives t = u = 1/2.
        let res = intersect_segments(&seg([0, 0, 0], [1, 1, 1]), &seg([1, 0, 0], [0, 1, 1]));
        assert_eq!(
            res,
            IntersectionResult::Point(RationalPoint3::new(r(1, 2), r(1, 2), r(1, 2)))
        );
    }

    #[test]
    fn parallel_disjoint_is_empty() {
        let res = intersect_segments(&seg([0, 0, 0], [1, 0, 0]), &seg([0, 1, 1], [1, 1, 1]));
        assert_eq!(res, IntersectionResult::Empty);
    }

    #[test]
    fn collinear_single_touch_is_point() {
        let res = intersect_segments(&seg([0, 0, 0], [1, 0, 0]), &seg([1, 0, 0], [2, 0, 0]));
        assert_eq!(res, IntersectionResult::Point(pt(1, 0, 0)));
        let gap = intersect_segments(&seg([0, 0, 0], [1, 0, 0]), &seg([2, 0, 0], [3, 0, 0]));
        assert_eq!(gap, IntersectionResult::Empty);
    }

    #[test]
    fn skew_and_coplanar_miss() {
        // skew
        assert_eq!(
            intersect_segments(&seg([0, 0, 0], [1, 0, 0]), &seg([0, 1, 1], [0, 2, 1])),
            IntersectionResult::Empty
        );
        // coplanar, lines cross outside both segments
        assert_eq!(
            intersect_segments(&seg([0, 0, 0], [1, 0, 0]), &seg([2, 1, 0], [2, 2, 0])),
            IntersectionResult::Empty
        );
    }

    #[test]
    fn containment_overlap() {
        let res = intersect_segments(&seg([0, 0, 0], [0, 0, 2]), &seg([0, 0, 1], [0, 0, 0]));
        assert_eq!(res, IntersectionResult::Overlap(seg([0, 0, 0], [0, 0, 1])));
    }

    /// Sampling oracle: walks both segments at parameter steps k/1000 and
    /// reports the exact lattice-scaled sample pairs that coincide. Only used
    /// to flag suspects; it cannot see crossings off the sample grid.
    fn sampled_hits(s1: &Segment, s2: &Segment) -> usize {
        let steps = 1000i64;
        let sample = |s: &Segment| -> Vec<[i64; 3]> {
            let a = s.a().as_integer_triple().unwrap();
            let b = s.b().as_integer_triple().unwrap();
            (0..=steps)
                .map(|k| {
                    [
                        a[0] * steps + (b[0] - a[0]) * k,
                        a[1] * steps + (b[1] - a[1]) * k,
                        a[2] * steps + (b[2] - a[2]) * k,
                    ]
                })
                .collect()
        };
        let pts1: std::collections::HashSet<[i64; 3]> = sample(s1).into_iter().collect();
        sample(s2).into_iter().filter(|p| pts1.contains(p)).count()
    }

    fn small_point() -> impl Strategy<Value = [i64; 3]> {
        [0i64..=2, 0i64..=2, 0i64..=2]
    }

    fn small_segment() -> impl Strategy<Value = Segment> {
        (small_point(), small_point())
            .prop_filter("distinct", |(a, b)| a != b)
            .prop_map(|(a, b)| seg(a, b))
    }

    fn on_segment(p: &RationalPoint3, s: &Segment) -> bool {
        s.contains(p)
    }

    proptest! {
        #[test]
        fn symmetric(s1 in small_segment(), s2 in small_segment()) {
            prop_assert_eq!(intersect_segments(&s1, &s2), intersect_segments(&s2, &s1));
        }

        #[test]
        fn sound(s1 in small_segment(), s2 in small_segment()) {
            match intersect_segments(&s1, &s2) {
                IntersectionResult::Empty => {}
                IntersectionResult::Point(p) => {
                    prop_assert!(on_segment(&p, &s1));
                    prop_assert!(on_segment(&p, &s2));
                }
                IntersectionResult::Overlap(o) => {
                    for q in [o.a(), o.b()] {
                        prop_assert!(on_segment(q, &s1));
                        prop_assert!(on_segment(q, &s2));
                    }
                }
            }
        }

        #[test]
        fn agrees_with_sampling_oracle(s1 in small_segment(), s2 in small_segment()) {
            let hits = sampled_hits(&s1, &s2);
            match intersect_segments(&s1, &s2) {
                // Many shared samples only happen along a common sub-segment.
                IntersectionResult::Overlap(_) => prop_assert!(hits > 1),
                IntersectionResult::Point(_) => prop_assert!(hits <= 1),
                IntersectionResult::Empty => prop_assert_eq!(hits, 0),
            }
        }
    }

    fn on_sample_grid(t: &Rational) -> bool {
        use num_traits::ToPrimitive;
        t.denom().to_i64().is_some_and(|d| 1000 % d == 0)
    }

    #[test]
    fn small_grid_against_oracle() {
        // Segment pairs with endpoints in {0,1,2}^3. A point crossing is
        // visible to the sampler only when both parameters land on k/1000.
        let pts: Vec<[i64; 3]> = (0..27).map(|i| [i / 9, (i / 3) % 3, i % 3]).collect();
        let mut segs = Vec::new();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                segs.push(seg(pts[i], pts[j]));
            }
        }
        // Strided subset keeps debug runs short.
        for (k, s1) in segs.iter().enumerate().step_by(7) {
            for s2 in segs.iter().skip(k % 5).step_by(11) {
                let hits = sampled_hits(s1, s2);
                match intersect_segments(s1, s2) {
                    IntersectionResult::Overlap(_) => assert!(hits > 1, "{s1} {s2}"),
                    IntersectionResult::Point(p) => {
                        let t = s1.parameter_of(&p).unwrap();
                        let u = s2.parameter_of(&p).unwrap();
                        if on_sample_grid(&t) && on_sample_grid(&u) {
                            assert_eq!(hits, 1, "{s1} {s2} at {p}");
                        } else {
                            assert_eq!(hits, 0, "{s1} {s2} at {p}");
                        }
                    }
                    IntersectionResult::Empty => assert_eq!(hits, 0, "{s1} {s2}"),
                }
            }
        }
    }
}
