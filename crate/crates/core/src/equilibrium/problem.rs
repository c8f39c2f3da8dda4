use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Rational;

/// One player's payoff maximization: ship a unit mass of goods to other
/// nodes (benefit `b_j`, cost `c_j`) or keep it at home (cost `c_self`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawProblem", into = "RawProblem")]
pub struct PlayerProblem {
    player: usize,
    destinations: Vec<usize>,
    benefits: Vec<Rational>,
    costs: Vec<Rational>,
    storage_cost: Rational,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RawProblem {
    player: usize,
    destinations: Vec<usize>,
    benefits: Vec<Rational>,
    costs: Vec<Rational>,
    storage_cost: Rational,
}

impl TryFrom<RawProblem> for PlayerProblem {
    type Error = Error;
    fn try_from(r: RawProblem) -> Result<Self> {
        PlayerProblem::new(
            r.player,
            r.destinations,
            r.benefits,
            r.costs,
            r.storage_cost,
        )
    }
}

impl From<PlayerProblem> for RawProblem {
    fn from(p: PlayerProblem) -> Self {
        RawProblem {
            player: p.player,
            destinations: p.destinations,
            benefits: p.benefits,
            costs: p.costs,
            storage_cost: p.storage_cost,
        }
    }
}

impl PlayerProblem {
    pub fn new(
        player: usize,
        destinations: Vec<usize>,
        benefits: Vec<Rational>,
        costs: Vec<Rational>,
        storage_cost: Rational,
    ) -> Result<Self> {
        if destinations.is_empty() {
            return Err(Error::validation(
                "destinations",
                "at least one destination",
            ));
        }
        if benefits.len() != destinations.len() || costs.len() != destinations.len() {
            return Err(Error::validation(
                "benefits/costs",
                format!(
                    "{} destinations but {} benefits and {} costs",
                    destinations.len(),
                    benefits.len(),
                    costs.len()
                ),
            ));
        }
        let mut seen = destinations.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != destinations.len() || seen.contains(&player) {
            return Err(Error::validation(
                "destinations",
                "destinations must be distinct and exclude the player",
            ));
        }
        if !storage_cost.is_positive() {
            return Err(Error::validation(
                "c_{ii} > 0",
                format!("c_self = {storage_cost}"),
            ));
        }
        for (j, (b, c)) in destinations.iter().zip(benefits.iter().zip(&costs)) {
            if !(c.is_positive() && b > c) {
                return Err(Error::validation(
                    "b_{ij} > c_{ij} > 0",
                    format!("destination {j}: b = {b}, c = {c}"),
                ));
            }
        }
        Ok(PlayerProblem {
            player,
            destinations,
            benefits,
            costs,
            storage_cost,
        })
    }

    /// Same net benefit `b - c` and storage cost for every destination.
    pub fn uniform(
        player: usize,
        destinations: Vec<usize>,
        benefit: Rational,
        cost: Rational,
        storage_cost: Rational,
    ) -> Result<Self> {
        let k = destinations.len();
        PlayerProblem::new(
            player,
            destinations,
            vec![benefit; k],
            vec![cost; k],
            storage_cost,
        )
    }

    pub fn player(&self) -> usize {
        self.player
    }

    pub fn destinations(&self) -> &[usize] {
        &self.destinations
    }

    pub fn benefits(&self) -> &[Rational] {
        &self.benefits
    }

    pub fn costs(&self) -> &[Rational] {
        &self.costs
    }

    pub fn storage_cost(&self) -> &Rational {
        &self.storage_cost
    }

    pub fn net_benefits(&self) -> Vec<Rational> {
        self.benefits
            .iter()
            .zip(&self.costs)
            .map(|(b, c)| b - c)
            .collect()
    }
}

/// Shares of the unit mass: kept at home, and sent to each destination in
/// the problem's destination order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Allocation {
    pub x_self: Rational,
    pub x: Vec<Rational>,
}

impl Allocation {
    /// Checked constructor: every share in `[0, 1]`, total exactly 1.
    pub fn new(x_self: Rational, x: Vec<Rational>) -> Result<Self> {
        let a = Allocation { x_self, x };
        a.check_simplex()?;
        Ok(a)
    }

    pub fn shares(&self) -> impl Iterator<Item = &Rational> {
        std::iter::once(&self.x_self).chain(&self.x)
    }

    pub fn total(&self) -> Rational {
        self.shares().sum()
    }

    pub fn check_simplex(&self) -> Result<()> {
        if let Some(s) = self
            .shares()
            .find(|s| s.is_negative() || **s > Rational::one())
        {
            return Err(Error::validation(
                "allocation",
                format!("share {s} outside [0, 1]"),
            ));
        }
        let total = self.total();
        if total != Rational::one() {
            return Err(Error::validation(
                "allocation",
                format!("shares sum to {total}, not 1"),
            ));
        }
        Ok(())
    }
}

/// Which of storage and each delivery path carry positive mass.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathVector {
    pub v_self: bool,
    pub v: Vec<bool>,
}

pub fn path_vector_of(x: &Allocation) -> PathVector {
    PathVector {
        v_self: x.x_self.is_positive(),
        v: x.x.iter().map(Rational::is_positive).collect(),
    }
}

fn check_arity(p: &PlayerProblem, x: &Allocation) -> Result<()> {
    if x.x.len() != p.destinations.len() {
        return Err(Error::validation(
            "allocation",
            format!(
                "{} delivery shares for {} destinations",
                x.x.len(),
                p.destinations.len()
            ),
        ));
    }
    Ok(())
}

/// Payoff `sum_j v_j (b_j - c_j) x_j - v_self c_self x_self`.
pub fn payoff(p: &PlayerProblem, x: &Allocation) -> Result<Rational> {
    check_arity(p, x)?;
    x.check_simplex()?;
    let v = path_vector_of(x);
    let mut total = Rational::zero();
    for (((b, c), share), used) in p.benefits.iter().zip(&p.costs).zip(&x.x).zip(&v.v) {
        if *used {
            total = total + &(b - c) * share;
        }
    }
    if v.v_self {
        total = total - &p.storage_cost * &x.x_self;
    }
    Ok(total)
}

pub(crate) fn arity(p: &PlayerProblem, x: &Allocation) -> Result<()> {
    check_arity(p, x)
}
