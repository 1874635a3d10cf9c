//! Chamberlin-Courant and Monroe multiwinner rules.
//!
//! - [`model`]: candidates, ranking and approval profiles, committees.
//! - [`misrep`]: dissatisfaction functions and Chamberlin-Courant scores.
//! - [`monroe`]: balanced voter assignment via min-cost flow.
//! - [`solve`]: exact branch-and-bound winner determination and greedy.
//! - [`decision`]: Winner Verification, Candidate Winner, target-score queries.
//! - [`single_peaked`]: recognition, polynomial CC, dummy-voter Candidate Winner.
//! - [`reductions`]: hardness gadget generators and brute-force validators.
//! - [`io`]: election file format, result documents and the command line.

pub mod decision;
pub mod error;
mod flow;
pub mod io;
pub mod misrep;
pub mod model;
pub mod monroe;
pub mod reductions;
pub mod single_peaked;
pub mod solve;

pub use decision::{candidate_winner, target_score_query, winner_verification, CandidateWinnerOutcome, VerificationOutcome};
pub use error::{Error, Result};
pub use misrep::{approval_cc_score, cc_best_assignment, cc_score, committee_score, Aggregation, Assignment, Dissatisfaction, Objective, Rule};
pub use model::{ApprovalBallot, BallotKind, CandidateId, Committee, Election, Profile, Ranking};
pub use monroe::{approval_monroe_score, monroe_optimal_assignment, monroe_score};
pub use solve::{solve_exact, solve_exact_forced, solve_greedy_cc, SolveOptions, SolveResult};
