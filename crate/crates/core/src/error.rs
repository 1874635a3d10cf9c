use std::fmt;

use crate::model::CandidateId;

/// A single structural problem found while validating an election.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoCandidates,
    EmptyProfile,
    ZeroWeight { voter: usize },
    DuplicateCandidate { voter: usize, candidate: CandidateId },
    IdOutOfRange { voter: usize, candidate: CandidateId },
    MissingCandidate { voter: usize, candidate: CandidateId },
    LabelCount { expected: usize, found: usize },
    DuplicateLabel { label: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoCandidates => write!(f, "election has no candidates"),
            Violation::EmptyProfile => write!(f, "empty profile"),
            Violation::ZeroWeight { voter } => write!(f, "voter {voter}: zero weight"),
            Violation::DuplicateCandidate { voter, candidate } => {
                write!(f, "voter {voter}: duplicate candidate {candidate}")
            }
            Violation::IdOutOfRange { voter, candidate } => {
                write!(f, "voter {voter}: candidate id out of range ({candidate})")
            }
            Violation::MissingCandidate { voter, candidate } => {
                write!(f, "voter {voter}: ranking does not place candidate {candidate}")
            }
            Violation::LabelCount { expected, found } => {
                write!(f, "expected {expected} labels, found {found}")
            }
            Violation::DuplicateLabel { label } => write!(f, "duplicate label {label:?}"),
        }
    }
}

/// A parse diagnostic pinned to a 1-based line of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid candidate id {0}")]
    InvalidCandidate(CandidateId),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid election: {}", join(.0))]
    InvalidElection(Vec<Violation>),
    #[error("operation requires {expected} ballots")]
    WrongBallotType { expected: &'static str },
    #[error("infeasible Monroe quota: committee size {k} exceeds {n} voters")]
    InfeasibleQuota { n: u64, k: usize },
    #[error("search budget exhausted after {explored} nodes")]
    BudgetExhausted { explored: u64 },
    #[error("axis does not certify the profile: {0}")]
    InvalidAxis(String),
    #[error("invalid source instance: {0}")]
    InvalidInstance(String),
    #[error("parse error: {}", join(.0))]
    Parse(Vec<Diagnostic>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
