use super::PlayerProblem;
use crate::error::{Error, Result};
use crate::geometry::Rational;
use crate::network::Network;

/// One uniform problem per node of `net`: every player may ship to every
/// other node with the same benefit and cost.
pub fn symmetric_problems(
    net: &Network,
    benefit: Rational,
    cost: Rational,
    storage_cost: Rational,
) -> Result<Vec<PlayerProblem>> {
    let n = net.nodes().len();
    (0..n)
        .map(|i| {
            PlayerProblem::uniform(
                i,
                (0..n).filter(|&j| j != i).collect(),
                benefit.clone(),
                cost.clone(),
                storage_cost.clone(),
            )
        })
        .collect()
}

/// True iff every player of `net` faces the same positive net benefit on
/// every link and the same storage cost, so that every best response may
/// use every link.
pub fn is_randomly_complete(net: &Network, problems: &[PlayerProblem]) -> Result<bool> {
    let n = net.nodes().len();
    if problems.len() != n {
        return Err(Error::validation(
            "problems",
            format!("{} problems for {n} nodes", problems.len()),
        ));
    }
    let mut seen = vec![false; n];
    for p in problems {
        let i = p.player();
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(Error::validation(
                "player",
                format!("player {i} is out of range or repeated"),
            ));
        }
        let mut dest = p.destinations().to_vec();
        dest.sort_unstable();
        let expected: Vec<usize> = (0..n).filter(|&j| j != i).collect();
        if dest != expected {
            return Err(Error::validation(
                "destinations",
                format!("player {i} must list every other node as a destination"),
            ));
        }
    }

    let reference_net = &problems[0].net_benefits()[0];
    let reference_storage = problems[0].storage_cost();
    Ok(reference_net.is_positive()
        && problems.iter().all(|p| {
            p.storage_cost() == reference_storage
                && p.net_benefits().iter().all(|nb| nb == reference_net)
        }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{build_cube, build_plane};

    #[test]
    fn plane_symmetric_is_complete() {
        let net = build_plane();
        let probs = symmetric_problems(&net, 3.into(), 1.into(), 1.into()).unwrap();
        assert!(is_randomly_complete(&net, &probs).unwrap());
    }

    #[test]
    fn plane_with_one_deviant_player() {
        let net = build_plane();
        let mut probs = symmetric_problems(&net, 3.into(), 1.into(), 1.into()).unwrap();
        probs[0] = PlayerProblem::new(
            0,
            vec![1, 2, 3],
            vec![3.into(), 3.into(), 4.into()],
            vec![1.into(); 3],
            1.into(),
        )
        .unwrap();
        assert!(!is_randomly_complete(&net, &probs).unwrap());
    }

    #[test]
    fn cube_symmetric_is_complete() {
        let net = build_cube();
        let probs = symmetric_problems(&net, 5.into(), 2.into(), 1.into()).unwrap();
        assert!(is_randomly_complete(&net, &probs).unwrap());
    }

    #[test]
    fn storage_cost_must_agree() {
        let net = build_plane();
        let mut probs = symmetric_problems(&net, 3.into(), 1.into(), 1.into()).unwrap();
        probs[2] = PlayerProblem::uniform(2, vec![0, 1, 3], 3.into(), 1.into(), 5.into()).unwrap();
        assert!(!is_randomly_complete(&net, &probs).unwrap());
    }

    #[test]
    fn arity_mismatch() {
        let net = build_plane();
        let probs = symmetric_problems(&net, 3.into(), 1.into(), 1.into()).unwrap();
        assert!(is_randomly_complete(&net, &probs[..3]).is_err());
        let mut bad = probs.clone();
        bad[1] = PlayerProblem::uniform(1, vec![0, 2], 3.into(), 1.into(), 1.into()).unwrap();
        assert!(is_randomly_complete(&net, &bad).is_err());
    }
}
