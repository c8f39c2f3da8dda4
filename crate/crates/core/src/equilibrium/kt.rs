use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use super::problem::arity;
use super::{Allocation, KtCertificate, PlayerProblem};
use crate::geometry::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KtRow {
    /// `x_self` or `x_j` with the destination node index.
    pub variable: String,
    pub share: Rational,
    pub on_support: bool,
    /// Marginal payoff of the variable: `b_j - c_j` for a delivery,
    /// `-c_self` for storage in use, `0` for unused storage.
    pub reduced_benefit: Rational,
    /// `reduced_benefit - mu`, when `mu` is defined.
    pub residual: Option<Rational>,
    /// Stationarity on support (`residual == 0`) or sign condition off
    /// support (`residual <= 0`).
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Feasibility {
    pub arity_matches: bool,
    pub shares_in_unit_interval: bool,
    pub sums_to_one: bool,
}

impl Feasibility {
    pub fn ok(&self) -> bool {
        self.arity_matches && self.shares_in_unit_interval && self.sums_to_one
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Satisfied,
    Violated { first_violation: String },
}

/// Kuhn-Tucker check of one allocation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KtReport {
    pub mu: Option<Rational>,
    pub rows: Vec<KtRow>,
    pub feasibility: Feasibility,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// Present when the verdict is satisfied.
    pub certificate: Option<KtCertificate>,
}

impl KtReport {
    pub fn is_satisfied(&self) -> bool {
        self.verdict == Verdict::Satisfied
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let mu = self.mu.as_ref().map_or("-".to_string(), |m| m.to_string());
        let _ = writeln!(out, "mu = {mu}");
        let _ = writeln!(
            out,
            "{:<10} {:>10} {:>8} {:>12} {:>12} {:>6}",
            "variable", "share", "support", "reduced", "residual", "ok"
        );
        for r in &self.rows {
            let residual = r
                .residual
                .as_ref()
                .map_or("-".to_string(), |x| x.to_string());
            let _ = writeln!(
                out,
                "{:<10} {:>10} {:>8} {:>12} {:>12} {:>6}",
                r.variable,
                r.share.to_string(),
                if r.on_support { "yes" } else { "no" },
                r.reduced_benefit.to_string(),
                residual,
                if r.holds { "yes" } else { "NO" }
            );
        }
        let f = &self.feasibility;
        let _ = writeln!(
            out,
            "feasible: arity={} unit_interval={} sum_one={}",
            f.arity_matches, f.shares_in_unit_interval, f.sums_to_one
        );
        let _ = match &self.verdict {
            Verdict::Satisfied => writeln!(out, "verdict: satisfied"),
            Verdict::Violated { first_violation } => {
                writeln!(out, "verdict: violated ({first_violation})")
            }
        };
        out
    }
}

impl fmt::Display for KtReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_table())
    }
}

fn violated(first: String) -> Verdict {
    Verdict::Violated {
        first_violation: first,
    }
}

/// Checks the Kuhn-Tucker conditions of `x` for `p`. Never fails; problems
/// with `x` are reported in the verdict.
pub fn kt_verify(p: &PlayerProblem, x: &Allocation) -> KtReport {
    let feasibility = Feasibility {
        arity_matches: arity(p, x).is_ok(),
        shares_in_unit_interval: x
            .shares()
            .all(|s| !s.is_negative() && *s <= Rational::one()),
        sums_to_one: x.total() == Rational::one(),
    };

    let mut vars: Vec<(String, Rational, Rational)> = Vec::new();
    let storage_reduced = if x.x_self.is_positive() {
        -p.storage_cost()
    } else {
        Rational::zero()
    };
    vars.push(("x_self".into(), x.x_self.clone(), storage_reduced));
    for ((j, net), share) in p.destinations().iter().zip(p.net_benefits()).zip(&x.x) {
        vars.push((format!("x_{j}"), share.clone(), net));
    }

    // mu is the common reduced benefit on the support.
    let mut verdict = None;
    let mut mu: Option<(String, Rational)> = None;
    for (name, share, reduced) in &vars {
        if !share.is_positive() {
            continue;
        }
        match &mu {
            None => mu = Some((name.clone(), reduced.clone())),
            Some((first, m)) if m != reduced && verdict.is_none() => {
                verdict = Some(violated(format!(
                    "inconsistent support: {first} has reduced benefit {m} but {name} has {reduced}"
                )));
            }
            _ => {}
        }
    }
    let mu = mu.map(|(_, m)| m);

    let rows: Vec<KtRow> = vars
        .into_iter()
        .map(|(variable, share, reduced_benefit)| {
            let on_support = share.is_positive();
            let residual = mu.as_ref().map(|m| &reduced_benefit - m);
            let holds = match &residual {
                Some(r) if on_support => r.is_zero(),
                Some(r) => !r.is_positive(),
                None => false,
            };
            KtRow {
                variable,
                share,
                on_support,
                reduced_benefit,
                residual,
                holds,
            }
        })
        .collect();

    let verdict = if !feasibility.ok() {
        let what = if !feasibility.arity_matches {
            "share count does not match destinations".to_string()
        } else if !feasibility.shares_in_unit_interval {
            "share outside [0, 1]".to_string()
        } else {
            format!("shares sum to {}, not 1", x.total())
        };
        violated(format!("infeasible: {what}"))
    } else if let Some(v) = verdict {
        v
    } else if let Some(bad) = rows.iter().find(|r| !r.holds) {
        let r = bad
            .residual
            .as_ref()
            .expect("mu defined for feasible allocation");
        if bad.on_support {
            violated(format!("{}: stationarity residual {r} != 0", bad.variable))
        } else {
            violated(format!(
                "{}: off-support residual {r} > 0 (reduced benefit {} exceeds mu)",
                bad.variable, bad.reduced_benefit
            ))
        }
    } else {
        Verdict::Satisfied
    };

    let certificate = (verdict == Verdict::Satisfied).then(|| KtCertificate {
        mu: mu.clone().expect("satisfied implies mu"),
        lambda: [Rational::zero(), Rational::zero(), Rational::zero()],
    });

    KtReport {
        mu,
        rows,
        feasibility,
        verdict,
        certificate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_node() -> PlayerProblem {
        PlayerProblem::new(0, vec![1], vec![3.into()], vec![1.into()], 2.into()).unwrap()
    }

    fn alloc(s: i64, x: &[i64]) -> Allocation {
        Allocation {
            x_self: s.into(),
            x: x.iter().map(|&v| v.into()).collect(),
        }
    }

    #[test]
    fn delivering_everything_is_optimal() {
        let rep = kt_verify(&two_node(), &alloc(0, &[1]));
        assert!(rep.is_satisfied(), "{rep}");
        assert_eq!(rep.mu, Some(2.into()));
        assert_eq!(rep.certificate.unwrap().mu, 2.into());
    }

    #[test]
    fn storing_everything_is_not() {
        let rep = kt_verify(&two_node(), &alloc(1, &[0]));
        assert_eq!(rep.mu, Some((-2).into()));
        match &rep.verdict {
            Verdict::Violated { first_violation } => {
                assert!(first_violation.starts_with("x_1"), "{first_violation}")
            }
            v => panic!("{v:?}"),
        }
        // 2 - (-2) = 4 > 0 off support
        assert_eq!(rep.rows[1].residual, Some(4.into()));
        assert!(rep.feasibility.ok());
    }

    #[test]
    fn off_support_better_destination() {
        let p = PlayerProblem::new(
            0,
            vec![1, 2, 3],
            vec![3.into(), 6.into(), 6.into()],
            vec![1.into(); 3],
            1.into(),
        )
        .unwrap();
        let rep = kt_verify(&p, &alloc(0, &[1, 0, 0]));
        assert_eq!(rep.mu, Some(2.into()));
        match &rep.verdict {
            Verdict::Violated { first_violation } => {
                assert!(first_violation.starts_with("x_2"), "{first_violation}")
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn mixed_support_is_inconsistent() {
        let half = Rational::new(1, 2).unwrap();
        let x = Allocation {
            x_self: half.clone(),
            x: vec![half],
        };
        let rep = kt_verify(&two_node(), &x);
        match &rep.verdict {
            Verdict::Violated { first_violation } => {
                assert!(first_violation.contains("inconsistent support"))
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn infeasible_reported() {
        let rep = kt_verify(&two_node(), &alloc(0, &[0]));
        assert!(!rep.feasibility.sums_to_one);
        assert!(rep.mu.is_none());
        assert!(!rep.is_satisfied());
        let rep = kt_verify(&two_node(), &alloc(0, &[1, 0]));
        assert!(!rep.feasibility.arity_matches);
    }

    #[test]
    fn json_and_table() {
        let rep = kt_verify(&two_node(), &alloc(0, &[1]));
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["verdict"], "satisfied");
        assert_eq!(json["mu"], "2/1");
        let table = rep.render_table();
        assert!(table.contains("verdict: satisfied"));
        assert!(table.contains("x_self"));
    }
}
