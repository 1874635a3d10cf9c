//! Hardness gadgets: election instances built from 3-Hitting-Set and
//! Vertex Cover Member instances, the brute-force source oracles, and a
//! validator that checks the generated structure and the equivalence of
//! answers at desk scale.
//!
//! Every unspecified tail of a generated vote ("the rest") lists the
//! remaining candidates in ascending id order.

mod brute;
mod cccw;
mod ccwv;
mod mcw;
mod validate;

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::misrep::Objective;
use crate::model::{CandidateId, Committee, Election, Ranking};

pub use brute::{brute_hitting_set, brute_vcm, HittingSetAnswer, VcmAnswer};
pub use cccw::gen_cccw_from_vcm;
pub use ccwv::{gen_ccwv_from_hitting_set, gen_ccwv_linf_from_hitting_set};
pub use mcw::{gen_mcw_from_vcm, lemma_committee, MonroeScale};
pub use validate::{answer_gadget, padded_hitting_committee, validate_reduction, Check, Equivalence, Source, ValidationReport};

/// Universe `0..universe_size`, a family of 3-element sets, and a budget `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HittingSetInstance {
    pub universe_size: usize,
    pub sets: Vec<[usize; 3]>,
    pub k: usize,
}

impl HittingSetInstance {
    pub fn validate(&self) -> Result<()> {
        for (i, s) in self.sets.iter().enumerate() {
            if s.iter().any(|&x| x >= self.universe_size) {
                return Err(Error::InvalidInstance(format!("set {i} has an element outside the universe")));
            }
            if s[0] == s[1] || s[0] == s[2] || s[1] == s[2] {
                return Err(Error::InvalidInstance(format!("set {i} does not have three distinct elements")));
            }
        }
        Ok(())
    }
}

/// Simple undirected graph on `0..vertices` with a distinguished vertex `w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCoverMemberInstance {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    pub w: usize,
}

impl VertexCoverMemberInstance {
    pub fn validate(&self) -> Result<()> {
        if self.w >= self.vertices {
            return Err(Error::InvalidInstance("distinguished vertex out of range".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for &[u, v] in &self.edges {
            if u >= self.vertices || v >= self.vertices {
                return Err(Error::InvalidInstance(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidInstance(format!("self-loop at {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidInstance(format!("repeated edge ({u},{v})")));
            }
        }
        Ok(())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Element,
    Dummy,
    Filler,
    Vertex,
    TypeI,
    TypeII,
    Special,
    Staircase,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::Element => "element",
            Role::Dummy => "dummy",
            Role::Filler => "filler",
            Role::Vertex => "vertex",
            Role::TypeI => "type-I",
            Role::TypeII => "type-II",
            Role::Special => "special",
            Role::Staircase => "staircase",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    /// Chamberlin-Courant Winner Verification, `L1` Borda.
    CcwvL1,
    /// Chamberlin-Courant Winner Verification, `LInf` Borda.
    CcwvLInf,
    /// Monroe Candidate Winner, `L1` Borda.
    McwL1,
    /// Chamberlin-Courant Candidate Winner, `LInf` Borda.
    CccwLInf,
}

impl GadgetKind {
    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::CcwvL1 => "ccwv-l1",
            GadgetKind::CcwvLInf => "ccwv-linf",
            GadgetKind::McwL1 => "mcw-l1",
            GadgetKind::CccwLInf => "cccw-linf",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [GadgetKind::CcwvL1, GadgetKind::CcwvLInf, GadgetKind::McwL1, GadgetKind::CccwLInf]
            .into_iter()
            .find(|k| k.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Question {
    /// Is this committee optimal among committees of its size?
    VerifyCommittee { committee: Committee, objective: Objective },
    /// Is `candidate` in some optimal committee of size `k`?
    CandidateWinner { candidate: CandidateId, k: usize, objective: Objective },
}

/// A set of dummies placed explicitly, as one contiguous run, in some vote.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DummyBlock {
    pub role: Role,
    pub members: Vec<CandidateId>,
}

/// A named group of generated votes (indices into the ranking list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoteBlock {
    pub name: String,
    pub rankings: Range<usize>,
    pub explicit: Vec<DummyBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetElection {
    pub kind: GadgetKind,
    pub election: Election,
    pub question: Question,
    /// `roles[c]` tags candidate `c`.
    pub roles: Vec<Role>,
    pub blocks: Vec<VoteBlock>,
}

impl GadgetElection {
    pub fn block(&self, name: &str) -> Option<&VoteBlock> {
        self.blocks.iter().find(|b| b.name == name)
    }

    pub fn block_rankings(&self, name: &str) -> &[Ranking] {
        let b = self.block(name).expect("known block");
        &self.election.rankings().expect("gadgets use rankings")[b.rankings.clone()]
    }

    pub fn block_voters(&self, name: &str) -> u64 {
        self.block_rankings(name).iter().map(Ranking::weight).sum()
    }

    pub fn with_role(&self, role: Role) -> Vec<CandidateId> {
        (0..self.roles.len()).filter(|&c| self.roles[c] == role).collect()
    }
}

/// Allocates labelled candidates, then assembles votes from explicit
/// prefixes followed by every unused candidate in ascending id order.
pub(crate) struct GadgetBuilder {
    labels: Vec<String>,
    roles: Vec<Role>,
    rankings: Vec<Ranking>,
    blocks: Vec<VoteBlock>,
}

impl GadgetBuilder {
    pub fn new() -> Self {
        GadgetBuilder { labels: Vec::new(), roles: Vec::new(), rankings: Vec::new(), blocks: Vec::new() }
    }

    pub fn add(&mut self, role: Role, label: String) -> CandidateId {
        self.labels.push(label);
        self.roles.push(role);
        self.labels.len() - 1
    }

    pub fn fresh(&mut self, role: Role, prefix: &str, count: usize, counter: &mut usize) -> Vec<CandidateId> {
        (0..count)
            .map(|_| {
                *counter += 1;
                self.add(role, format!("{prefix}{}", *counter - 1))
            })
            .collect()
    }

    pub fn start_block(&mut self, name: &str) {
        let at = self.rankings.len();
        self.blocks.push(VoteBlock { name: name.into(), rankings: at..at, explicit: Vec::new() });
    }

    pub fn note_explicit(&mut self, role: Role, members: &[CandidateId]) {
        self.blocks.last_mut().expect("open block").explicit.push(DummyBlock { role, members: members.to_vec() });
    }

    /// Adds the vote `parts[0] ≻ parts[1] ≻ … ≻ rest`.
    pub fn vote(&mut self, parts: &[&[CandidateId]], weight: u64) {
        let m = self.labels.len();
        let mut used = vec![false; m];
        let mut order = Vec::with_capacity(m);
        for part in parts {
            for &c in *part {
                if !std::mem::replace(&mut used[c], true) {
                    order.push(c);
                }
            }
        }
        order.extend((0..m).filter(|&c| !used[c]));
        self.rankings.push(Ranking::new(order, weight));
        self.blocks.last_mut().expect("open block").rankings.end = self.rankings.len();
    }

    pub fn finish(self, kind: GadgetKind, question: Question) -> Result<GadgetElection> {
        let election = Election::with_labels(self.labels, crate::model::Profile::Rankings(self.rankings))?;
        Ok(GadgetElection { kind, election, question, roles: self.roles, blocks: self.blocks })
    }
}
