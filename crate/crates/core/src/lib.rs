//! Bounded representations of interval and proper interval graphs.

pub mod model;
pub mod chordal;
pub mod cliqueorder;
pub mod interval;
pub mod proper;
pub mod outcome;
pub mod oracle;
pub mod gen;
pub mod cli;

pub use outcome::{solve, Outcome, Unsat, UnsatReason};
