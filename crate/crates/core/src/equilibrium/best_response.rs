use serde::{Deserialize, Serialize};

use super::{Allocation, PlayerProblem};
use crate::geometry::Rational;

/// Multipliers witnessing optimality: `mu` for the unit-mass constraint and
/// the three sign-constraint multipliers, which are zero at the optimum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KtCertificate {
    pub mu: Rational,
    pub lambda: [Rational; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestResponse {
    /// Node indices of the destinations with the largest net benefit.
    pub argmax_set: Vec<usize>,
    pub value: Rational,
    /// Mass spread evenly over `argmax_set`, nothing stored.
    pub representative: Allocation,
    pub certificate: KtCertificate,
}

/// Positions (into the destination list) attaining the largest net benefit,
/// and that benefit.
pub(crate) fn argmax_positions(p: &PlayerProblem) -> (Vec<usize>, Rational) {
    let nets = p.net_benefits();
    let best = nets.iter().max().expect("problem has destinations").clone();
    let positions = nets
        .iter()
        .enumerate()
        .filter(|(_, n)| **n == best)
        .map(|(k, _)| k)
        .collect();
    (positions, best)
}

pub fn best_response(p: &PlayerProblem) -> BestResponse {
    let (positions, value) = argmax_positions(p);
    let share = Rational::new(1, positions.len() as i64).expect("nonempty argmax");
    let mut x = vec![Rational::zero(); p.destinations().len()];
    for &k in &positions {
        x[k] = share.clone();
    }
    BestResponse {
        argmax_set: positions.iter().map(|&k| p.destinations()[k]).collect(),
        representative: Allocation {
            x_self: Rational::zero(),
            x,
        },
        certificate: KtCertificate {
            mu: value.clone(),
            lambda: [Rational::zero(), Rational::zero(), Rational::zero()],
        },
        value,
    }
}
