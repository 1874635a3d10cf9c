//! Dissatisfaction functions and Chamberlin-Courant scores.
//!
//! Scores are exact integers: penalties are stored as `u64` and aggregated
//! either by weighted sum (`L1`) or by maximum (`LInf`).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{BallotKind, CandidateId, Committee, Election, Profile};

/// Penalty per rank: `alpha()[i]` is the cost of being represented by one's
/// rank-`i + 1` candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dissatisfaction {
    alpha: Vec<u64>,
}

impl Dissatisfaction {
    pub fn new(alpha: Vec<u64>) -> Result<Self> {
        if alpha.is_empty() {
            return Err(Error::InvalidArgument("dissatisfaction vector is empty".into()));
        }
        if alpha.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidArgument("dissatisfaction vector must be non-decreasing".into()));
        }
        Ok(Dissatisfaction { alpha })
    }

    /// Borda dissatisfaction: rank `i` costs `i - 1`.
    pub fn borda(m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidArgument("Borda needs at least one candidate".into()));
        }
        Ok(Dissatisfaction { alpha: (0..m as u64).collect() })
    }

    pub fn alpha(&self) -> &[u64] {
        &self.alpha
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    /// Penalty for a 1-based rank.
    pub fn penalty(&self, rank: usize) -> u64 {
        self.alpha[rank - 1]
    }

    pub fn max_penalty(&self) -> u64 {
        *self.alpha.last().expect("non-empty")
    }

    pub fn is_borda(&self) -> bool {
        self.alpha.iter().enumerate().all(|(i, &a)| a == i as u64)
    }

    fn check_len(&self, m: usize) -> Result<()> {
        if self.alpha.len() == m {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "dissatisfaction vector has length {}, election has {} candidates",
                self.alpha.len(),
                m
            )))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Aggregation {
    L1,
    LInf,
}

impl Aggregation {
    pub fn name(self) -> &'static str {
        match self {
            Aggregation::L1 => "l1",
            Aggregation::LInf => "linf",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    ChamberlinCourant,
    Monroe,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::ChamberlinCourant => "cc",
            Rule::Monroe => "monroe",
        }
    }
}

/// Which score a committee is judged by. `alpha: None` means Borda over the
/// election's candidates. Approval elections ignore `alpha` and `mode`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Objective {
    pub rule: Rule,
    pub mode: Aggregation,
    pub alpha: Option<Dissatisfaction>,
}

impl Objective {
    pub fn cc(mode: Aggregation) -> Self {
        Objective { rule: Rule::ChamberlinCourant, mode, alpha: None }
    }

    pub fn monroe(mode: Aggregation) -> Self {
        Objective { rule: Rule::Monroe, mode, alpha: None }
    }

    pub fn with_alpha(mut self, alpha: Dissatisfaction) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub(crate) fn alpha_for(&self, e: &Election) -> Result<Dissatisfaction> {
        match &self.alpha {
            Some(a) => {
                a.check_len(e.num_candidates())?;
                Ok(a.clone())
            }
            None => Dissatisfaction::borda(e.num_candidates()),
        }
    }

    /// Aggregation actually applied to `e` (approval scores are counts).
    pub fn effective_mode(&self, e: &Election) -> Aggregation {
        match e.kind() {
            BallotKind::Rankings => self.mode,
            BallotKind::Approval => Aggregation::L1,
        }
    }
}

/// Per-ballot penalty rows over a chosen set of candidate columns.
#[derive(Debug, Clone)]
pub(crate) struct CostTable {
    pub weights: Vec<u64>,
    pub rows: Vec<Vec<u64>>,
    pub mode: Aggregation,
}

impl CostTable {
    /// Builds rows whose column `j` is the penalty of `cols[j]`.
    pub fn build(e: &Election, obj: &Objective, cols: &[CandidateId]) -> Result<Self> {
        let weights = e.profile().weights();
        let rows = match e.profile() {
            Profile::Rankings(rs) => {
                let alpha = obj.alpha_for(e)?;
                rs.iter()
                    .map(|r| {
                        let pos = r.positions();
                        cols.iter().map(|&c| alpha.alpha()[pos[c]]).collect()
                    })
                    .collect()
            }
            Profile::Approval(bs) => bs
                .iter()
                .map(|b| cols.iter().map(|&c| u64::from(!b.approves(c))).collect())
                .collect(),
        };
        Ok(CostTable { weights, rows, mode: obj.effective_mode(e) })
    }

    pub fn full(e: &Election, obj: &Objective) -> Result<Self> {
        let cols: Vec<CandidateId> = (0..e.num_candidates()).collect();
        Self::build(e, obj, &cols)
    }

    pub fn aggregate(&self, per_voter: impl Iterator<Item = (usize, u64)>) -> u64 {
        match self.mode {
            Aggregation::L1 => per_voter.map(|(v, c)| self.weights[v].saturating_mul(c)).fold(0, u64::saturating_add),
            Aggregation::LInf => per_voter.map(|(_, c)| c).max().unwrap_or(0),
        }
    }

    /// CC score of the columns in `cols` (column indices).
    pub fn cc_score(&self, cols: &[usize]) -> u64 {
        self.aggregate(
            self.rows
                .iter()
                .enumerate()
                .map(|(v, row)| (v, cols.iter().map(|&j| row[j]).min().unwrap_or(u64::MAX))),
        )
    }
}

/// Voter-to-representative map. Voters are indexed after expanding weights,
/// in ballot order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub rep: Vec<CandidateId>,
    pub load: BTreeMap<CandidateId, u64>,
}

impl Assignment {
    pub(crate) fn from_groups(weights: &[u64], groups: &[Vec<(CandidateId, u64)>], members: &[CandidateId]) -> Self {
        let mut rep = Vec::with_capacity(weights.iter().sum::<u64>() as usize);
        let mut load: BTreeMap<CandidateId, u64> = members.iter().map(|&c| (c, 0)).collect();
        for (g, parts) in groups.iter().enumerate() {
            debug_assert_eq!(parts.iter().map(|p| p.1).sum::<u64>(), weights[g]);
            for &(c, cnt) in parts {
                rep.extend(std::iter::repeat_n(c, cnt as usize));
                *load.entry(c).or_default() += cnt;
            }
        }
        Assignment { rep, load }
    }
}

/// Each voter goes to the committee member it ranks highest (ties: smallest
/// id). Optimal for both `L1` and `LInf`.
pub fn cc_best_assignment(e: &Election, w: &Committee, alpha: &Dissatisfaction) -> Result<Assignment> {
    e.rankings()?;
    w.check_for(e)?;
    let obj = Objective::cc(Aggregation::L1).with_alpha(alpha.clone());
    let table = CostTable::build(e, &obj, w.members())?;
    let groups: Vec<Vec<(CandidateId, u64)>> = table
        .rows
        .iter()
        .zip(&table.weights)
        .map(|(row, &wt)| {
            let best = (0..row.len()).min_by_key(|&j| (row[j], w.members()[j])).expect("non-empty committee");
            vec![(w.members()[best], wt)]
        })
        .collect();
    Ok(Assignment::from_groups(&table.weights, &groups, w.members()))
}

pub fn cc_score(e: &Election, w: &Committee, alpha: &Dissatisfaction, mode: Aggregation) -> Result<u64> {
    e.rankings()?;
    w.check_for(e)?;
    let obj = Objective::cc(mode).with_alpha(alpha.clone());
    let table = CostTable::build(e, &obj, w.members())?;
    let cols: Vec<usize> = (0..w.size()).collect();
    Ok(table.cc_score(&cols))
}

/// Weighted number of voters with no approved candidate in `w`.
pub fn approval_cc_score(e: &Election, w: &Committee) -> Result<u64> {
    let ballots = e.approvals()?;
    w.check_for(e)?;
    Ok(ballots
        .iter()
        .filter(|b| !w.members().iter().any(|&c| b.approves(c)))
        .map(|b| b.weight())
        .sum())
}

/// Score of `w` under `obj`, dispatching on rule and ballot kind.
pub fn committee_score(e: &Election, w: &Committee, obj: &Objective) -> Result<u64> {
    match (obj.rule, e.kind()) {
        (Rule::ChamberlinCourant, BallotKind::Rankings) => cc_score(e, w, &obj.alpha_for(e)?, obj.mode),
        (Rule::ChamberlinCourant, BallotKind::Approval) => approval_cc_score(e, w),
        (Rule::Monroe, BallotKind::Rankings) => crate::monroe::monroe_score(e, w, &obj.alpha_for(e)?, obj.mode),
        (Rule::Monroe, BallotKind::Approval) => crate::monroe::approval_monroe_score(e, w),
    }
}
