//! Winner Verification gadgets from 3-Hitting-Set.
//!
//! Candidates: one per element (`c*`), `k` dummies (`d*`) and, for `L1`,
//! `3(|F|k)^2` fillers (`z*`). The dummy committee is optimal iff the source
//! has no hitting set of size at most `k`.

use super::{GadgetBuilder, GadgetElection, GadgetKind, HittingSetInstance, Question, Role};
use crate::error::{Error, Result};
use crate::misrep::{Aggregation, Objective};
use crate::model::{CandidateId, Committee};

fn check(h: &HittingSetInstance) -> Result<()> {
    h.validate()?;
    if h.k == 0 || h.sets.is_empty() {
        return Err(Error::InvalidInstance("need k >= 1 and at least one set".into()));
    }
    Ok(())
}

fn base(b: &mut GadgetBuilder, h: &HittingSetInstance) -> (Vec<CandidateId>, Vec<CandidateId>) {
    let elems = (0..h.universe_size).map(|u| b.add(Role::Element, format!("c{u}"))).collect();
    let dummies = (0..h.k).map(|i| b.add(Role::Dummy, format!("d{i}"))).collect();
    (elems, dummies)
}

fn split(set: &[usize; 3], elems: &[CandidateId]) -> (Vec<CandidateId>, Vec<CandidateId>) {
    let mut inside: Vec<_> = set.iter().map(|&u| elems[u]).collect();
    inside.sort_unstable();
    let outside = elems.iter().copied().filter(|c| !inside.contains(c)).collect();
    (inside, outside)
}

/// Vote `(i, X)`: `X ≻ d_i ≻ window ≻ U∖X ≻ rest`, where each vote owns a
/// private window of `3|F|k` fillers.
pub fn gen_ccwv_from_hitting_set(h: &HittingSetInstance) -> Result<GadgetElection> {
    check(h)?;
    let mut b = GadgetBuilder::new();
    let (elems, dummies) = base(&mut b, h);
    let votes = h.sets.len() * h.k;
    let window = 3 * votes;
    let mut counter = 0;
    let fillers = b.fresh(Role::Filler, "z", window * votes, &mut counter);
    for (i, &d) in dummies.iter().enumerate() {
        b.start_block(&format!("d{i}"));
        for (x, set) in h.sets.iter().enumerate() {
            let j = i * h.sets.len() + x;
            let win = &fillers[j * window..(j + 1) * window];
            let (inside, outside) = split(set, &elems);
            b.note_explicit(Role::Filler, win);
            b.vote(&[&inside, &[d], win, &outside], 1);
        }
    }
    let question = Question::VerifyCommittee { committee: Committee::new(dummies), objective: Objective::cc(Aggregation::L1) };
    b.finish(GadgetKind::CcwvL1, question)
}

/// Vote `(i, X)`: `X ≻ d_i ≻ U∖X ≻ other dummies`. No fillers.
pub fn gen_ccwv_linf_from_hitting_set(h: &HittingSetInstance) -> Result<GadgetElection> {
    check(h)?;
    let mut b = GadgetBuilder::new();
    let (elems, dummies) = base(&mut b, h);
    for (i, &d) in dummies.iter().enumerate() {
        b.start_block(&format!("d{i}"));
        for set in &h.sets {
            let (inside, outside) = split(set, &elems);
            b.vote(&[&inside, &[d], &outside], 1);
        }
    }
    let question = Question::VerifyCommittee { committee: Committee::new(dummies), objective: Objective::cc(Aggregation::LInf) };
    b.finish(GadgetKind::CcwvLInf, question)
}
