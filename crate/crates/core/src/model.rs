//! Candidates, ballots, profiles and committees.
//!
//! Candidates are dense integer ids `0..m`. Labels are carried for I/O only.
//! Every ballot carries a positive integer weight which downstream scoring
//! treats exactly as that many identical voters.

use std::collections::BTreeSet;

use crate::error::{Error, Result, Violation};

pub type CandidateId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub id: CandidateId,
    pub label: Option<String>,
}

/// A complete strict order over the candidates, index 0 being the top choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranking {
    order: Vec<CandidateId>,
    weight: u64,
}

impl Ranking {
    pub fn new(order: Vec<CandidateId>, weight: u64) -> Self {
        Ranking { order, weight }
    }

    pub fn single(order: Vec<CandidateId>) -> Self {
        Ranking::new(order, 1)
    }

    pub fn order(&self) -> &[CandidateId] {
        &self.order
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn top(&self) -> CandidateId {
        self.order[0]
    }

    /// 1-based rank of `c`: one plus the number of candidates ranked above it.
    pub fn position(&self, c: CandidateId) -> Result<usize> {
        self.order
            .iter()
            .position(|&x| x == c)
            .map(|i| i + 1)
            .ok_or(Error::InvalidCandidate(c))
    }

    /// Inverse permutation: `positions()[c]` is the 0-based rank of `c`.
    /// Assumes the ranking is a valid permutation of `0..len`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.order.len()];
        for (i, &c) in self.order.iter().enumerate() {
            pos[c] = i;
        }
        pos
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApprovalBallot {
    approved: BTreeSet<CandidateId>,
    weight: u64,
}

impl ApprovalBallot {
    pub fn new(approved: impl IntoIterator<Item = CandidateId>, weight: u64) -> Self {
        ApprovalBallot { approved: approved.into_iter().collect(), weight }
    }

    pub fn single(approved: impl IntoIterator<Item = CandidateId>) -> Self {
        ApprovalBallot::new(approved, 1)
    }

    pub fn approved(&self) -> &BTreeSet<CandidateId> {
        &self.approved
    }

    pub fn approves(&self, c: CandidateId) -> bool {
        self.approved.contains(&c)
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallotKind {
    Rankings,
    Approval,
}

impl BallotKind {
    pub fn name(self) -> &'static str {
        match self {
            BallotKind::Rankings => "rankings",
            BallotKind::Approval => "approval",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Profile {
    Rankings(Vec<Ranking>),
    Approval(Vec<ApprovalBallot>),
}

impl Profile {
    pub fn kind(&self) -> BallotKind {
        match self {
            Profile::Rankings(_) => BallotKind::Rankings,
            Profile::Approval(_) => BallotKind::Approval,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Profile::Rankings(r) => r.len(),
            Profile::Approval(a) => a.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn weights(&self) -> Vec<u64> {
        match self {
            Profile::Rankings(r) => r.iter().map(Ranking::weight).collect(),
            Profile::Approval(a) => a.iter().map(ApprovalBallot::weight).collect(),
        }
    }
}

/// Collects every invariant violation of a candidate count, label table and
/// profile rather than stopping at the first.
pub fn check_parts(m: usize, labels: Option<&[String]>, profile: &Profile) -> Vec<Violation> {
    let mut out = Vec::new();
    if m == 0 {
        out.push(Violation::NoCandidates);
    }
    if profile.is_empty() {
        out.push(Violation::EmptyProfile);
    }
    if let Some(labels) = labels {
        if labels.len() != m {
            out.push(Violation::LabelCount { expected: m, found: labels.len() });
        }
        let mut seen = BTreeSet::new();
        for l in labels {
            if !seen.insert(l.as_str()) {
                out.push(Violation::DuplicateLabel { label: l.clone() });
            }
        }
    }
    match profile {
        Profile::Rankings(rankings) => {
            for (voter, r) in rankings.iter().enumerate() {
                if r.weight == 0 {
                    out.push(Violation::ZeroWeight { voter });
                }
                let mut seen = vec![false; m];
                for &c in &r.order {
                    if c >= m {
                        out.push(Violation::IdOutOfRange { voter, candidate: c });
                    } else if seen[c] {
                        out.push(Violation::DuplicateCandidate { voter, candidate: c });
                    } else {
                        seen[c] = true;
                    }
                }
                for (c, present) in seen.iter().enumerate() {
                    if !present {
                        out.push(Violation::MissingCandidate { voter, candidate: c });
                    }
                }
            }
        }
        Profile::Approval(ballots) => {
            for (voter, b) in ballots.iter().enumerate() {
                if b.weight == 0 {
                    out.push(Violation::ZeroWeight { voter });
                }
                for &c in &b.approved {
                    if c >= m {
                        out.push(Violation::IdOutOfRange { voter, candidate: c });
                    }
                }
            }
        }
    }
    out
}

/// An election: `m` candidates and a weighted profile over them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Election {
    num_candidates: usize,
    labels: Option<Vec<String>>,
    profile: Profile,
}

impl Election {
    pub fn new(num_candidates: usize, profile: Profile) -> Result<Self> {
        Self::build(num_candidates, None, profile)
    }

    pub fn with_labels(labels: Vec<String>, profile: Profile) -> Result<Self> {
        Self::build(labels.len(), Some(labels), profile)
    }

    pub fn from_rankings(num_candidates: usize, rankings: Vec<Ranking>) -> Result<Self> {
        Self::new(num_candidates, Profile::Rankings(rankings))
    }

    pub fn from_approvals(num_candidates: usize, ballots: Vec<ApprovalBallot>) -> Result<Self> {
        Self::new(num_candidates, Profile::Approval(ballots))
    }

    fn build(num_candidates: usize, labels: Option<Vec<String>>, profile: Profile) -> Result<Self> {
        let violations = check_parts(num_candidates, labels.as_deref(), &profile);
        if !violations.is_empty() {
            return Err(Error::InvalidElection(violations));
        }
        Ok(Election { num_candidates, labels, profile })
    }

    pub fn num_candidates(&self) -> usize {
        self.num_candidates
    }

    /// Total number of voters, i.e. the sum of ballot weights.
    pub fn num_voters(&self) -> u64 {
        self.profile.weights().iter().sum()
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn kind(&self) -> BallotKind {
        self.profile.kind()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, c: CandidateId) -> String {
        match &self.labels {
            Some(l) => l[c].clone(),
            None => c.to_string(),
        }
    }

    pub fn candidate_by_label(&self, label: &str) -> Option<CandidateId> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == label),
            None => label.parse().ok().filter(|&c: &usize| c < self.num_candidates),
        }
    }

    pub fn candidates(&self) -> Vec<Candidate> {
        (0..self.num_candidates)
            .map(|id| Candidate { id, label: self.labels.as_ref().map(|l| l[id].clone()) })
            .collect()
    }

    pub fn rankings(&self) -> Result<&[Ranking]> {
        match &self.profile {
            Profile::Rankings(r) => Ok(r),
            Profile::Approval(_) => Err(Error::WrongBallotType { expected: "ranking" }),
        }
    }

    pub fn approvals(&self) -> Result<&[ApprovalBallot]> {
        match &self.profile {
            Profile::Approval(a) => Ok(a),
            Profile::Rankings(_) => Err(Error::WrongBallotType { expected: "approval" }),
        }
    }

    pub fn check_candidate(&self, c: CandidateId) -> Result<()> {
        if c < self.num_candidates {
            Ok(())
        } else {
            Err(Error::InvalidCandidate(c))
        }
    }

    /// Restricts the election to the candidates in `keep`, re-densifying ids in
    /// ascending order of the original ids.
    pub fn project(&self, keep: &[CandidateId]) -> Result<Election> {
        let keep: BTreeSet<CandidateId> = keep.iter().copied().collect();
        if keep.is_empty() {
            return Err(Error::InvalidArgument("projection onto an empty candidate set".into()));
        }
        for &c in &keep {
            self.check_candidate(c)?;
        }
        let mut remap = vec![usize::MAX; self.num_candidates];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let profile = match &self.profile {
            Profile::Rankings(rs) => Profile::Rankings(
                rs.iter()
                    .map(|r| {
                        let order = r
                            .order
                            .iter()
                            .filter(|&&c| keep.contains(&c))
                            .map(|&c| remap[c])
                            .collect();
                        Ranking::new(order, r.weight)
                    })
                    .collect(),
            ),
            Profile::Approval(bs) => Profile::Approval(
                bs.iter()
                    .map(|b| {
                        ApprovalBallot::new(
                            b.approved.iter().filter(|c| keep.contains(c)).map(|&c| remap[c]),
                            b.weight,
                        )
                    })
                    .collect(),
            ),
        };
        let labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|&c| l[c].clone()).collect());
        Election::build(keep.len(), labels, profile)
    }

    /// The same election with every weighted ballot repeated `weight` times.
    pub fn expanded(&self) -> Election {
        let profile = match &self.profile {
            Profile::Rankings(rs) => Profile::Rankings(
                rs.iter()
                    .flat_map(|r| (0..r.weight).map(move |_| Ranking::single(r.order.clone())))
                    .collect(),
            ),
            Profile::Approval(bs) => Profile::Approval(
                bs.iter()
                    .flat_map(|b| {
                        (0..b.weight).map(move |_| ApprovalBallot::single(b.approved.iter().copied()))
                    })
                    .collect(),
            ),
        };
        Election { num_candidates: self.num_candidates, labels: self.labels.clone(), profile }
    }

    /// A copy of this election with extra ranking ballots appended.
    pub fn with_extra_rankings(&self, extra: impl IntoIterator<Item = Ranking>) -> Result<Election> {
        let mut rs = self.rankings()?.to_vec();
        rs.extend(extra);
        Election::build(self.num_candidates, self.labels.clone(), Profile::Rankings(rs))
    }
}

/// Re-checks every invariant of an election, reporting all violations.
pub fn validate(e: &Election) -> Result<(), Vec<Violation>> {
    let v = check_parts(e.num_candidates, e.labels.as_deref(), &e.profile);
    if v.is_empty() {
        Ok(())
    } else {
        Err(v)
    }
}

/// A set of candidates, stored sorted; orders lexicographically by member ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Committee {
    members: Vec<CandidateId>,
}

impl Committee {
    pub fn new(members: impl IntoIterator<Item = CandidateId>) -> Self {
        let set: BTreeSet<CandidateId> = members.into_iter().collect();
        Committee { members: set.into_iter().collect() }
    }

    pub fn members(&self) -> &[CandidateId] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, c: CandidateId) -> bool {
        self.members.binary_search(&c).is_ok()
    }

    /// Checks `1 <= k <= m` and that every member is a candidate of `e`.
    pub fn check_for(&self, e: &Election) -> Result<()> {
        if self.members.is_empty() {
            return Err(Error::InvalidArgument("committee is empty".into()));
        }
        for &c in &self.members {
            e.check_candidate(c)?;
        }
        Ok(())
    }
}

impl FromIterator<CandidateId> for Committee {
    fn from_iter<I: IntoIterator<Item = CandidateId>>(iter: I) -> Self {
        Committee::new(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc(orders: &[[usize; 3]]) -> Election {
        Election::from_rankings(3, orders.iter().map(|o| Ranking::single(o.to_vec())).collect()).unwrap()
    }

    #[test]
    fn position_counts_candidates_above() {
        let r = Ranking::single(vec![0, 1, 2]);
        assert_eq!(r.position(0).unwrap(), 1);
        assert_eq!(r.position(2).unwrap(), 3);
        let r = Ranking::single(vec![1, 0, 2]);
        assert_eq!(r.position(0).unwrap(), 2);
        assert!(matches!(r.position(7), Err(Error::InvalidCandidate(7))));
    }

    #[test]
    fn projection_preserves_relative_order() {
        let e = abc(&[[0, 1, 2], [2, 1, 0]]);
        let p = e.project(&[0, 2]).unwrap();
        let orders: Vec<_> = p.rankings().unwrap().iter().map(|r| r.order().to_vec()).collect();
        assert_eq!(orders, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(e.project(&[0, 1, 2]).unwrap(), e);
        assert!(matches!(e.project(&[]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn projection_intersects_approvals() {
        let e = Election::from_approvals(
            3,
            vec![ApprovalBallot::single([0, 1]), ApprovalBallot::single([2])],
        )
        .unwrap();
        let p = e.project(&[1, 2]).unwrap();
        let sets: Vec<Vec<usize>> =
            p.approvals().unwrap().iter().map(|b| b.approved().iter().copied().collect()).collect();
        assert_eq!(sets, vec![vec![0], vec![1]]);
    }

    #[test]
    fn validation_reports_every_violation() {
        let profile = Profile::Rankings(vec![
            Ranking::single(vec![0, 0, 1]),
            Ranking::new(vec![0, 1, 2], 0),
        ]);
        let v = check_parts(3, None, &profile);
        assert!(v.contains(&Violation::DuplicateCandidate { voter: 0, candidate: 0 }));
        assert!(v.contains(&Violation::MissingCandidate { voter: 0, candidate: 2 }));
        assert!(v.contains(&Violation::ZeroWeight { voter: 1 }));
        assert!(v.iter().any(|x| x.to_string().contains("duplicate candidate")));

        let profile = Profile::Approval(vec![ApprovalBallot::single([5])]);
        let v = check_parts(3, None, &profile);
        assert_eq!(v, vec![Violation::IdOutOfRange { voter: 0, candidate: 5 }]);
        assert!(v[0].to_string().contains("id out of range"));

        assert_eq!(check_parts(3, None, &Profile::Rankings(vec![])), vec![Violation::EmptyProfile]);
        assert!(validate(&abc(&[[0, 1, 2], [2, 1, 0]])).is_ok());
    }

    #[test]
    fn empty_approval_ballots_are_allowed() {
        let e = Election::from_approvals(2, vec![ApprovalBallot::single([])]).unwrap();
        assert_eq!(e.num_voters(), 1);
    }

    #[test]
    fn committees_sort_lexicographically() {
        let a = Committee::new([5, 0]);
        let b = Committee::new([1, 2]);
        assert!(a < b);
        assert_eq!(a.members(), &[0, 5]);
    }
}
