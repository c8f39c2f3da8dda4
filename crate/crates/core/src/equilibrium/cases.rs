use serde::{Deserialize, Serialize};

use super::{kt_verify, payoff, Allocation, PathVector, PlayerProblem};
use crate::error::{Error, Result};
use crate::geometry::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    /// No allocation with this path vector meets the unit-mass constraint.
    Infeasible,
    /// The best payoff under this path vector is reached.
    Attained,
    /// Payoff approaches its supremum only by leaving the case.
    Dominated,
}

/// One row of the four path-vector cases of a two-node player.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VCase {
    pub v: PathVector,
    pub status: CaseStatus,
    /// Best attained payoff under `v`, with the allocation reaching it.
    pub payoff: Option<Rational>,
    pub allocation: Option<Allocation>,
    /// Least upper bound of the payoff under `v` when it is not attained.
    pub supremum: Option<Rational>,
    /// Whether the case's stationarity equations admit a common `mu`.
    pub stationarity_consistent: bool,
    /// Kuhn-Tucker verdict of the case's attained allocation.
    pub kt_satisfied: bool,
}

impl VCase {
    /// Closed-form payoff of an allocation with this case's support.
    pub fn closed_form(&self, p: &PlayerProblem, x_self: &Rational, x_j: &Rational) -> Rational {
        let net = &p.benefits()[0] - &p.costs()[0];
        let mut total = Rational::zero();
        if self.v.v[0] {
            total = total + &net * x_j;
        }
        if self.v.v_self {
            total = total - p.storage_cost() * x_self;
        }
        total
    }
}

/// The four path vectors `(v_self, v_j)` of a single-destination player.
pub fn enumerate_v_cases(p: &PlayerProblem) -> Result<[VCase; 4]> {
    if p.destinations().len() != 1 {
        return Err(Error::validation(
            "destinations",
            format!(
                "the four-case table needs exactly one destination, got {}",
                p.destinations().len()
            ),
        ));
    }
    let net = &p.benefits()[0] - &p.costs()[0];
    let pv = |s: bool, j: bool| PathVector {
        v_self: s,
        v: vec![j],
    };
    let attained = |v: PathVector, x_self: i64, x_j: i64| -> VCase {
        let x = Allocation::new(x_self.into(), vec![x_j.into()]).expect("vertex of the simplex");
        VCase {
            v,
            status: CaseStatus::Attained,
            payoff: Some(payoff(p, &x).expect("feasible")),
            stationarity_consistent: true,
            kt_satisfied: kt_verify(p, &x).is_satisfied(),
            allocation: Some(x),
            supremum: None,
        }
    };
    Ok([
        VCase {
            v: pv(false, false),
            status: CaseStatus::Infeasible,
            payoff: None,
            allocation: None,
            supremum: None,
            stationarity_consistent: false,
            kt_satisfied: false,
        },
        // x_self = 1 is forced once nothing is shipped.
        attained(pv(true, false), 1, 0),
        attained(pv(false, true), 0, 1),
        VCase {
            v: pv(true, true),
            status: CaseStatus::Dominated,
            payoff: None,
            allocation: None,
            // Payoff (b-c) x_j - c_self x_self rises as x_self -> 0.
            supremum: Some(net.clone()),
            // -mu = 0 and b - c - mu = 0 cannot both hold when b > c.
            stationarity_consistent: net.is_zero(),
            kt_satisfied: false,
        },
    ])
}
