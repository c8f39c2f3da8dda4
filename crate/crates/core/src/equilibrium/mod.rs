//! Delivery players' payoff maximization.
//!
//! Each player splits a unit mass of goods between keeping it (cost
//! `c_self` per unit) and shipping it along links (net benefit `b_j - c_j`
//! per unit). The objective is linear over a simplex, so every best response
//! puts all mass on the destinations with the largest net benefit. All
//! arithmetic is exact.

mod best_response;
mod cases;
mod complete;
mod kt;
mod problem;
mod sampler;

pub use best_response::{best_response, BestResponse, KtCertificate};
pub use cases::{enumerate_v_cases, CaseStatus, VCase};
pub use complete::{is_randomly_complete, symmetric_problems};
pub use kt::{kt_verify, Feasibility, KtReport, KtRow, Verdict};
pub use problem::{path_vector_of, payoff, Allocation, PathVector, PlayerProblem};
pub use sampler::{sample_best_response, SAMPLER_ALGORITHM};
