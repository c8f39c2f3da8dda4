//! Complete cubic delivery networks on integer lattices, exact congestion
//! classification between delivery links, and best-response analysis for
//! the delivery players.

pub mod congestion;
pub mod equilibrium;
pub mod error;
pub mod geometry;
pub mod network;
pub mod report;

pub use error::{Error, Result};
