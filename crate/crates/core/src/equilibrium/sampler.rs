use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};

use super::best_response::argmax_positions;
use super::{Allocation, PlayerProblem};
use crate::geometry::Rational;

/// Identifies the sampling stream: ChaCha8 seeded with `seed_from_u64`,
/// one `Exp1` draw per argmax destination in destination order, each
/// quantized to `floor(e * 2^32)`, normalized by the integer total.
pub const SAMPLER_ALGORITHM: &str = "chacha8-exp1-q32/v1";

const SCALE: f64 = 4294967296.0;

/// Uniform draw from the unit simplex over the argmax destinations.
/// Storage share is always zero and the shares sum to exactly one.
pub fn sample_best_response(p: &PlayerProblem, seed: u64) -> Allocation {
    let (positions, _) = argmax_positions(p);
    let mut x = vec![Rational::zero(); p.destinations().len()];
    if let [only] = positions[..] {
        x[only] = Rational::one();
        return Allocation {
            x_self: Rational::zero(),
            x,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut weights: Vec<u64> = positions
        .iter()
        .map(|_| {
            let e: f64 = Exp1.sample(&mut rng);
            (e * SCALE).floor().min(u64::MAX as f64) as u64
        })
        .collect();
    if weights.iter().all(|&w| w == 0) {
        weights.iter_mut().for_each(|w| *w = 1);
    }
    let total: u128 = weights.iter().map(|&w| w as u128).sum();
    for (&k, &w) in positions.iter().zip(&weights) {
        x[k] = Rational::new(w, total).expect("positive total");
    }
    Allocation {
        x_self: Rational::zero(),
        x,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symmetric() -> PlayerProblem {
        PlayerProblem::uniform(0, vec![1, 2, 3], 3.into(), 1.into(), 1.into()).unwrap()
    }

    #[test]
    fn singleton_argmax_gets_everything() {
        let p = PlayerProblem::new(
            0,
            vec![1, 2],
            vec![5.into(), 3.into()],
            vec![1.into(), 1.into()],
            1.into(),
        )
        .unwrap();
        for seed in [0, 1, 99] {
            let x = sample_best_response(&p, seed);
            assert_eq!(x.x, vec![Rational::one(), Rational::zero()]);
        }
    }

    #[test]
    fn deterministic_and_feasible() {
        let p = symmetric();
        let a = sample_best_response(&p, 7);
        let b = sample_best_response(&p, 7);
        assert_eq!(a, b);
        assert_ne!(a, sample_best_response(&p, 8));
        a.check_simplex().unwrap();
        assert!(a.x_self.is_zero());
    }

    #[test]
    fn support_within_argmax() {
        let p = PlayerProblem::new(
            0,
            vec![1, 2, 3],
            vec![3.into(), 6.into(), 6.into()],
            vec![1.into(); 3],
            1.into(),
        )
        .unwrap();
        for seed in 0..50 {
            let x = sample_best_response(&p, seed);
            assert!(x.x[0].is_zero());
            assert_eq!(x.total(), Rational::one());
        }
    }
}
