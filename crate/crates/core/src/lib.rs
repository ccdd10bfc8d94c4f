//! Exact solution counting and bound calculus for homogeneous diagonal
//! Diophantine equations `c1*x1^k + ... + cs*xs^k = 0` over the box
//! `{1..N}^s`.
//!
//! The crate has four parts:
//!
//! - [`equation`]: the equation/box data model, text parsing and canonical
//!   normalization;
//! - [`engine`]: exact counters (full enumeration and a meet-in-the-middle
//!   histogram join), seed-solution search, representation counts and
//!   sweeps — the ground truth everything else is checked against;
//! - [`lower`]: certified lower bounds built from symmetric pairings,
//!   two-variable rays, seeded rays and products over variable-disjoint
//!   pieces, composed by a grouping heuristic;
//! - [`upper`]: upper-bound exponents (`count << N^(e + ε)`) in exact
//!   rational arithmetic.

pub mod equation;
pub mod lower;
pub mod upper;

mod arith;
pub mod engine;

pub use equation::{parse_equation, Cube, DiagonalEquation, EquationError, ParseError, Signature};

pub use engine::{
    count, count_brute, count_mitm, count_representations, count_sweep, find_seed, CountResult,
    EngineConfig, EngineError, Method, MethodChoice, RepCount, SeedSolution, SweepPoint,
};

pub use lower::{
    best_lower_bound, grouping_heuristic, linear_three_count, pair_product_bound,
    pythagorean_count, pythagorean_upper_estimate, ray_bound, sector_count, split_bound,
    symmetric_form, symmetric_pair_count, two_term_count, GroupingOutcome, LowerBound,
    MatchedPair, PairingPlan, Rule, RuleError, SectorCount, TraceStep, TwoTermCount,
};

pub use upper::{
    alternating_moment_order, best_upper_exponent, binary_decomposition, cm_solvability,
    cm_upper_exponent, cs_exponent, hua_exponent, waring_exponent, BinaryDecomposition,
    BoundForm, ExponentBound, Solvability, UpperError, UpperRule,
};
