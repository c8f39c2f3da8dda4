use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::SCHEMA_VERSION;
use crate::equilibrium::{
    best_response, enumerate_v_cases, is_randomly_complete, kt_verify, payoff,
    sample_best_response, Allocation, BestResponse, KtReport, PlayerProblem, VCase,
    SAMPLER_ALGORITHM,
};
use crate::error::{Error, Result};
use crate::geometry::Rational;
use crate::network::Network;

pub const PROBLEM_SCHEMA_VERSION: u32 = 1;

/// Input file of the equilibrium command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemSet {
    pub schema_version: u32,
    /// Network selector whose nodes the players live on, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub network: Option<String>,
    pub problems: Vec<PlayerProblem>,
}

impl ProblemSet {
    pub fn from_json(s: &str) -> Result<Self> {
        let set: ProblemSet = serde_json::from_str(s)?;
        if set.schema_version != PROBLEM_SCHEMA_VERSION {
            return Err(Error::Document(format!(
                "unsupported problem schema_version {}",
                set.schema_version
            )));
        }
        if set.problems.is_empty() {
            return Err(Error::validation("problems", "at least one problem"));
        }
        Ok(set)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub seed: u64,
    pub allocation: Allocation,
    pub payoff: Rational,
    pub kt_satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlayerReport {
    pub player: usize,
    pub best_response: BestResponse,
    pub payoff: Rational,
    pub kt: KtReport,
    pub sample: SampleReport,
    /// The four storage/delivery cases, for single-destination players.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v_cases: Option<[VCase; 4]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquilibriumDoc {
    pub schema_version: u32,
    pub sampler: &'static str,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub network: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub randomly_complete: Option<bool>,
    pub players: Vec<PlayerReport>,
}

/// Best response, its KT report and one sampled best response per problem.
/// Problem `k` samples with seed `seed + k` (wrapping).
pub fn equilibrium_doc(
    set: &ProblemSet,
    net: Option<&Network>,
    seed: u64,
) -> Result<EquilibriumDoc> {
    let randomly_complete = net
        .map(|n| is_randomly_complete(n, &set.problems))
        .transpose()?;
    let players = set
        .problems
        .iter()
        .enumerate()
        .map(|(k, p)| player_report(p, seed.wrapping_add(k as u64)))
        .collect::<Result<_>>()?;
    Ok(EquilibriumDoc {
        schema_version: SCHEMA_VERSION,
        sampler: SAMPLER_ALGORITHM,
        seed,
        network: net.map(|n| n.label().to_string()),
        randomly_complete,
        players,
    })
}

fn player_report(p: &PlayerProblem, seed: u64) -> Result<PlayerReport> {
    let br = best_response(p);
    let value = payoff(p, &br.representative)?;
    let kt = kt_verify(p, &br.representative);
    let sampled = sample_best_response(p, seed);
    let sample = SampleReport {
        seed,
        payoff: payoff(p, &sampled)?,
        kt_satisfied: kt_verify(p, &sampled).is_satisfied(),
        allocation: sampled,
    };
    let v_cases = if p.destinations().len() == 1 {
        Some(enumerate_v_cases(p)?)
    } else {
        None
    };
    Ok(PlayerReport {
        player: p.player(),
        best_response: br,
        payoff: value,
        kt,
        sample,
        v_cases,
    })
}

#[derive(Serialize)]
struct AllocationRow<'a> {
    player: usize,
    allocation: &'a str,
    variable: String,
    share: &'a Rational,
}

pub(crate) fn allocations_csv(doc: &EquilibriumDoc) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &doc.players {
        for (name, x) in [
            ("best_response", &r.best_response.representative),
            ("sample", &r.sample.allocation),
        ] {
            w.serialize(AllocationRow {
                player: r.player,
                allocation: name,
                variable: "x_self".into(),
                share: &x.x_self,
            })?;
            for (dest, share) in r.kt.rows.iter().skip(1).zip(&x.x) {
                w.serialize(AllocationRow {
                    player: r.player,
                    allocation: name,
                    variable: dest.variable.clone(),
                    share,
                })?;
            }
        }
    }
    let bytes = w
        .into_inner()
        .map_err(|e| std::io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub(crate) fn kt_text(doc: &EquilibriumDoc) -> String {
    let mut s = String::new();
    for r in &doc.players {
        let _ = writeln!(s, "player {}", r.player);
        s.push_str(&r.kt.render_table());
        s.push('\n');
    }
    s
}

pub(crate) fn summary_text(doc: &EquilibriumDoc) -> String {
    let mut lines: Vec<String> = doc
        .players
        .iter()
        .map(|r| {
            let x = &r.best_response.representative;
            let shares: Vec<String> = x.shares().map(Rational::to_string).collect();
            format!(
                "player {}: best response ({}), payoff {}, KT {}",
                r.player,
                shares.join(", "),
                r.payoff,
                if r.kt.is_satisfied() {
                    "satisfied"
                } else {
                    "violated"
                }
            )
        })
        .collect();
    if let Some(rc) = doc.randomly_complete {
        lines.push(format!("randomly complete: {rc}"));
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilibrium::symmetric_problems;
    use crate::network::build_cube;

    const TWO_NODE: &str = r#"{"schema_version":1,"problems":[
        {"player":0,"destinations":[1],"benefits":["3"],"costs":["1"],"storage_cost":"2"}]}"#;

    #[test]
    fn two_node_report() {
        let set = ProblemSet::from_json(TWO_NODE).unwrap();
        let doc = equilibrium_doc(&set, None, 0).unwrap();
        let r = &doc.players[0];
        assert_eq!(r.best_response.representative.x, vec![Rational::one()]);
        assert_eq!(r.payoff, 2.into());
        assert!(r.kt.is_satisfied());
        assert!(r.v_cases.is_some());
        assert_eq!(doc.randomly_complete, None);
        assert!(summary_text(&doc).contains("best response (0/1, 1/1), payoff 2/1"));
    }

    #[test]
    fn cube_is_randomly_complete() {
        let net = build_cube();
        let set = ProblemSet {
            schema_version: 1,
            network: Some("cube".into()),
            problems: symmetric_problems(&net, 3.into(), 1.into(), 1.into()).unwrap(),
        };
        let doc = equilibrium_doc(&set, Some(&net), 5).unwrap();
        assert_eq!(doc.randomly_complete, Some(true));
        assert_eq!(doc.players[3].sample.seed, 8);
        assert!(doc.players.iter().all(|p| p.sample.kt_satisfied));
    }

    #[test]
    fn equal_benefit_and_cost_is_rejected() {
        let bad = TWO_NODE.replace(r#"["3"]"#, r#"["1"]"#);
        let err = ProblemSet::from_json(&bad).unwrap_err().to_string();
        assert!(err.contains("b_{ij} > c_{ij} > 0"), "{err}");
    }

    #[test]
    fn csv_rows() {
        let set = ProblemSet::from_json(TWO_NODE).unwrap();
        let doc = equilibrium_doc(&set, None, 0).unwrap();
        let csv = allocations_csv(&doc).unwrap();
        assert_eq!(
            csv,
            "player,allocation,variable,share\n0,best_response,x_self,0/1\n\
             0,best_response,x_1,1/1\n0,sample,x_self,0/1\n0,sample,x_1,1/1\n"
        );
    }
}
