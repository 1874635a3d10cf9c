//! Structural checks on generated gadgets and a comparison of the gadget's
//! answer (by exact search) with the source answer (by brute force).

use std::collections::BTreeSet;

use super::{
    brute_hitting_set, brute_vcm, lemma_committee, GadgetElection, GadgetKind, HittingSetInstance, MonroeScale, Question,
    Role, VertexCoverMemberInstance,
};
use crate::decision::{candidate_winner, winner_verification};
use crate::error::{Error, Result};
use crate::misrep::{committee_score, Aggregation, Objective};
use crate::model::{CandidateId, Committee, Ranking};
use crate::monroe::quota;
use crate::solve::SolveOptions;

#[derive(Debug, Clone, Copy)]
pub enum Source<'a> {
    HittingSet(&'a HittingSetInstance),
    VertexCover(&'a VertexCoverMemberInstance),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// `gadget` answers the gadget's own question; `expected` is the answer the
/// source instance implies for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Agrees { gadget: bool, expected: bool },
    Disagrees { gadget: bool, expected: bool },
    /// Desk-scale Monroe gadgets: the answer is reported, not compared.
    NotClaimed { gadget: bool, expected: bool },
    BudgetExhausted { explored: u64, expected: bool },
    Skipped { reason: String, expected: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub kind: GadgetKind,
    pub checks: Vec<Check>,
    pub equivalence: Equivalence,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn structural_ok(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// `Some` only when the answers were actually compared.
    pub fn agrees(&self) -> Option<bool> {
        match self.equivalence {
            Equivalence::Agrees { .. } => Some(true),
            Equivalence::Disagrees { .. } => Some(false),
            _ => None,
        }
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.0.push(Check { name, passed, detail: detail.into() });
    }
}

/// Answers the gadget's question by exact search.
pub fn answer_gadget(ge: &GadgetElection, opts: &SolveOptions) -> Result<bool> {
    match &ge.question {
        Question::VerifyCommittee { committee, objective } => {
            Ok(winner_verification(&ge.election, committee, objective, opts)?.is_optimal)
        }
        Question::CandidateWinner { candidate, k, objective } => {
            Ok(candidate_winner(&ge.election, *candidate, *k, objective, opts)?.member_of_some_optimum)
        }
    }
}

/// The hitting set `hs` padded to the dummy committee's size, preferring
/// fillers, then unused elements, then dummies.
pub fn padded_hitting_committee(ge: &GadgetElection, hs: &[usize]) -> Result<Committee> {
    let Question::VerifyCommittee { committee, .. } = &ge.question else {
        return Err(Error::InvalidArgument("not a winner verification gadget".into()));
    };
    let elements = ge.with_role(Role::Element);
    if hs.len() > committee.size() || hs.iter().any(|&u| u >= elements.len()) {
        return Err(Error::InvalidArgument("hitting set does not fit the committee".into()));
    }
    let mut chosen: BTreeSet<CandidateId> = hs.iter().map(|&u| elements[u]).collect();
    let mut pool: Vec<CandidateId> = (0..ge.roles.len()).filter(|c| !chosen.contains(c)).collect();
    pool.sort_by_key(|&c| (ge.roles[c] != Role::Filler, ge.roles[c] != Role::Element, c));
    chosen.extend(pool.into_iter().take(committee.size() - hs.len()));
    Ok(Committee::new(chosen))
}

fn explicit_disjoint(ge: &GadgetElection, checks: &mut Checks) {
    let mut seen = BTreeSet::new();
    let mut total = 0usize;
    for block in ge.blocks.iter().flat_map(|b| &b.explicit) {
        total += block.members.len();
        seen.extend(block.members.iter().copied());
    }
    checks.push("explicit dummy blocks disjoint", seen.len() == total, format!("{total} placements, {} distinct", seen.len()));
}

fn block_sizes(ge: &GadgetElection, role: Role) -> BTreeSet<usize> {
    ge.blocks.iter().flat_map(|b| &b.explicit).filter(|d| d.role == role).map(|d| d.members.len()).collect()
}

fn ccwv_checks(ge: &GadgetElection, h: &HittingSetInstance, checks: &mut Checks, notes: &mut Vec<String>) -> Result<()> {
    let (u, f, k) = (h.universe_size, h.sets.len(), h.k);
    let mk = f * k;
    let l1 = ge.kind == GadgetKind::CcwvL1;
    let window = if l1 { 3 * mk } else { 0 };
    let rankings = ge.election.rankings()?;
    checks.push("vote count", rankings.len() == mk, format!("{} votes, expected |F|k = {mk}", rankings.len()));
    let m_expected = u + k + if l1 { 3 * mk * mk } else { 0 };
    let m = ge.election.num_candidates();
    checks.push("candidate count", m == m_expected, format!("{m} candidates, expected {m_expected}"));

    let elements = ge.with_role(Role::Element);
    let dummies = ge.with_role(Role::Dummy);
    let mut layout_ok = rankings.len() == mk && elements.len() == u && dummies.len() == k;
    if layout_ok {
        for (j, r) in rankings.iter().enumerate() {
            let (i, x) = (j / f, j % f);
            let o = r.order();
            let top: BTreeSet<_> = o[..3].iter().copied().collect();
            let set: BTreeSet<_> = h.sets[x].iter().map(|&e| elements[e]).collect();
            let win_ok = o[4..4 + window].iter().all(|&c| ge.roles[c] == Role::Filler);
            let rest: Vec<_> = elements.iter().copied().filter(|c| !set.contains(c)).collect();
            let after = &o[4 + window..4 + window + rest.len()];
            if top != set || o[3] != dummies[i] || !win_ok || after != rest.as_slice() {
                layout_ok = false;
                break;
            }
        }
    }
    checks.push("vote layout", layout_ok, "X, own dummy, filler window, remaining elements");
    if l1 {
        explicit_disjoint(ge, checks);
        let sizes = block_sizes(ge, Role::Filler);
        checks.push("filler window size", sizes.len() == 1 && sizes.contains(&window), format!("sizes {sizes:?}, expected {window}"));
    }

    let Question::VerifyCommittee { committee, objective } = &ge.question else {
        unreachable!("winner verification gadget")
    };
    let (dummy_target, hs_bound) = if l1 { (3 * mk as u64, 2 * mk as u64) } else { (3, 2) };
    let ds = committee_score(&ge.election, committee, objective)?;
    checks.push("dummy committee score", ds == dummy_target, format!("score {ds}, expected {dummy_target}"));
    let answer = brute_hitting_set(h);
    if answer.exists_leq_k {
        let c = padded_hitting_committee(ge, &answer.witness)?;
        let s = committee_score(&ge.election, &c, objective)?;
        checks.push("hitting committee bound", s <= hs_bound, format!("score {s}, bound {hs_bound}"));
    } else {
        notes.push(format!("minimum hitting set has size {} > k; bound check not applicable", answer.min_size));
    }
    Ok(())
}

fn cccw_checks(ge: &GadgetElection, g: &VertexCoverMemberInstance, checks: &mut Checks) -> Result<()> {
    let (n, m) = (g.vertices, g.edges.len());
    let t1 = m + n + 1;
    let expected = n + (m + n + 1) * t1 + 2 * n + n * (n + 1) / 2 + 1;
    let got = ge.election.num_candidates();
    checks.push("candidate count", got == expected, format!("{got} candidates, expected {expected}"));
    let s1 = block_sizes(ge, Role::TypeI);
    checks.push("type-I block size", s1.iter().all(|&s| s == t1), format!("sizes {s1:?}, expected {t1}"));
    let s2 = block_sizes(ge, Role::TypeII);
    checks.push("type-II block size", s2.iter().all(|&s| s == 2), format!("sizes {s2:?}, expected 2"));

    let b1 = ge.block_rankings("block1");
    let ok1 = b1.len() == m
        && b1.iter().zip(&g.edges).all(|(r, e)| r.weight() == n as u64 + 2 && r.order()[..2] == [e[0], e[1]]);
    checks.push("block 1", ok1, format!("{} edge votes with weight n+2 = {}", b1.len(), n + 2));

    let special = ge.with_role(Role::Special);
    let b2 = ge.block_rankings("block2");
    let ok2 = special.len() == 1
        && b2.len() == n
        && b2.iter().enumerate().all(|(i, r)| {
            let o = r.order();
            let i = i + 1;
            r.weight() == 1
                && o[..2].iter().all(|&c| ge.roles[c] == Role::TypeII)
                && o[2..2 + i].iter().all(|&c| ge.roles[c] == Role::Staircase)
                && o[2 + i] == special[0]
        });
    checks.push("block 2", ok2, "v_i has i staircase dummies before the special");
    let b3 = ge.block_rankings("block3");
    let ok3 = b3.len() == 1 && b3[0].weight() == n as u64 + 2 && Some(&b3[0].top()) == special.first();
    checks.push("block 3", ok3, "n+2 copies topped by the special");
    explicit_disjoint(ge, checks);
    let q_ok = matches!(ge.question, Question::CandidateWinner { candidate, k, .. } if candidate == g.w && k == n + 1);
    checks.push("question", q_ok, format!("candidate v{}, k = n+1 = {}", g.w, n + 1));
    Ok(())
}

fn mcw_scale(ge: &GadgetElection, g: &VertexCoverMemberInstance) -> (bool, usize, usize) {
    let t1 = block_sizes(ge, Role::TypeI).into_iter().next().unwrap_or(0);
    let t2 = block_sizes(ge, Role::TypeII).into_iter().next().unwrap_or(0);
    let original = MonroeScale::Original.sizes(g.vertices, g.edges.len()) == (t1, t2);
    (original, t1, t2)
}

fn mcw_checks(ge: &GadgetElection, g: &VertexCoverMemberInstance, checks: &mut Checks, notes: &mut Vec<String>) -> Result<()> {
    let (n, m) = (g.vertices, g.edges.len());
    let big_n = 2 * (m + n + 1) as u64;
    let (original, t1, t2) = mcw_scale(ge, g);
    let (want1, want2) = if original { MonroeScale::Original.sizes(n, m) } else { (t1, t2) };
    notes.push(format!("scale: {}", if original { "original" } else { "test" }));
    let s1 = block_sizes(ge, Role::TypeI);
    checks.push("type-I block size", s1.len() == 1 && s1.contains(&want1), format!("sizes {s1:?}, n⁴m = {}", n.pow(4) * m));
    let s2 = block_sizes(ge, Role::TypeII);
    checks.push("type-II block size", s2.len() == 1 && s2.contains(&want2), format!("sizes {s2:?}, 2n⁴m = {}", 2 * n.pow(4) * m));

    let w = g.w;
    let b1 = ge.block_rankings("block1");
    let ok1 = b1.len() == m && b1.iter().zip(&g.edges).all(|(r, e)| r.weight() == 1 && r.order()[..2] == [e[0], e[1]]);
    checks.push("block 1", ok1, format!("{} edge votes", b1.len()));
    let b2 = ge.block_rankings("block2");
    let ok2 = ge.block_voters("block2") == m as u64 + 1 && b2.iter().all(|r| r.top() == w);
    checks.push("block 2", ok2, format!("{} votes, expected m+1 = {}", ge.block_voters("block2"), m + 1));
    let b3 = ge.block_rankings("block3");
    let ok3 = b3.len() == n
        && b3.iter().all(|r| {
            let o = r.order();
            r.weight() == 1 && o[..want1].iter().all(|&c| ge.roles[c] == Role::TypeI) && o[want1] == w
        });
    checks.push("block 3", ok3, format!("{} votes, expected n = {n}", b3.len()));

    let specials = ge.with_role(Role::Special);
    let alpha: BTreeSet<_> = b3.iter().map(Ranking::top).collect();
    let b4 = ge.block_rankings("block4");
    let tops4: Vec<_> = b4.iter().map(Ranking::top).collect();
    let ok4 = specials.len() == n + 1 && tops4 == specials && b4.iter().all(|r| r.weight() == 1);
    checks.push("block 4", ok4, format!("{} votes topped by S", b4.len()));
    let b5 = ge.block_rankings("block5");
    let seeds: BTreeSet<_> = (0..n).chain(alpha.iter().copied()).collect();
    let tops5: BTreeSet<_> = b5.iter().map(Ranking::top).collect();
    let ok5 = b5.len() == 2 * n && tops5 == seeds && b5.iter().all(|r| r.weight() == big_n);
    checks.push("block 5", ok5, format!("{} seeds with N = 2(m+n+1) = {big_n} copies each", b5.len()));
    explicit_disjoint(ge, checks);
    let q_ok = matches!(ge.question, Question::CandidateWinner { candidate, k, .. } if candidate == w && k == 2 * n + 1);
    checks.push("question", q_ok, format!("candidate v{w}, k = 2n+1 = {}", 2 * n + 1));
    let (lo, hi) = quota(ge.election.num_voters(), 2 * n + 1)?;
    checks.push("quota", lo == big_n && hi == big_n, format!("loads {lo}..={hi}, N = {big_n}"));

    if original {
        let vc = brute_vcm(g);
        let cover = vc.cover_with_w.unwrap_or(vc.min_cover);
        let c = lemma_committee(ge, &cover)?;
        let s = committee_score(&ge.election, &c, &Objective::monroe(Aggregation::L1))?;
        let bound = (n.pow(4) * m + 3 * m * n * n + 3 * n.pow(3)) as u64;
        notes.push(format!(
            "lemma committee (cover size {}) Monroe score {s} against n⁴m + 3mn² + 3n³ = {bound}",
            cover.len()
        ));
    }
    Ok(())
}

pub fn validate_reduction(ge: &GadgetElection, source: Source<'_>, opts: &SolveOptions) -> Result<ValidationReport> {
    let mut checks = Checks(Vec::new());
    let mut notes = Vec::new();
    let expected = match (ge.kind, source) {
        (GadgetKind::CcwvL1 | GadgetKind::CcwvLInf, Source::HittingSet(h)) => {
            h.validate()?;
            ccwv_checks(ge, h, &mut checks, &mut notes)?;
            !brute_hitting_set(h).exists_leq_k
        }
        (GadgetKind::CccwLInf, Source::VertexCover(g)) => {
            g.validate()?;
            cccw_checks(ge, g, &mut checks)?;
            brute_vcm(g).w_in_some_min_vc
        }
        (GadgetKind::McwL1, Source::VertexCover(g)) => {
            g.validate()?;
            mcw_checks(ge, g, &mut checks, &mut notes)?;
            brute_vcm(g).w_in_some_min_vc
        }
        (kind, _) => return Err(Error::InvalidArgument(format!("{} gadgets need a different source instance", kind.name()))),
    };
    let claimed = match (ge.kind, source) {
        (GadgetKind::McwL1, Source::VertexCover(g)) => mcw_scale(ge, g).0,
        _ => true,
    };
    let equivalence = if claimed && ge.kind == GadgetKind::McwL1 && opts.budget.is_none() {
        Equivalence::Skipped { reason: "original-scale Monroe search needs a budget".into(), expected }
    } else {
        match answer_gadget(ge, opts) {
            Ok(gadget) if !claimed => Equivalence::NotClaimed { gadget, expected },
            Ok(gadget) if gadget == expected => Equivalence::Agrees { gadget, expected },
            Ok(gadget) => Equivalence::Disagrees { gadget, expected },
            Err(Error::BudgetExhausted { explored }) => Equivalence::BudgetExhausted { explored, expected },
            Err(e) => return Err(e),
        }
    };
    Ok(ValidationReport { kind: ge.kind, checks: checks.0, equivalence, notes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::{gen_cccw_from_vcm, gen_ccwv_from_hitting_set, gen_ccwv_linf_from_hitting_set, gen_mcw_from_vcm};

    #[test]
    fn ccwv_both_answers() {
        let yes = HittingSetInstance { universe_size: 5, sets: vec![[0, 1, 2], [2, 3, 4]], k: 1 };
        let no = HittingSetInstance { universe_size: 6, sets: vec![[0, 1, 2], [3, 4, 5]], k: 1 };
        for h in [&yes, &no] {
            for ge in [gen_ccwv_from_hitting_set(h).unwrap(), gen_ccwv_linf_from_hitting_set(h).unwrap()] {
                let r = validate_reduction(&ge, Source::HittingSet(h), &SolveOptions::default()).unwrap();
                assert!(r.structural_ok(), "{:?}", r.checks);
                assert_eq!(r.agrees(), Some(true), "{:?}", r.equivalence);
            }
        }
    }

    #[test]
    fn cccw_path() {
        let g = VertexCoverMemberInstance { vertices: 3, edges: vec![[0, 1], [1, 2]], w: 1 };
        let ge = gen_cccw_from_vcm(&g).unwrap();
        let r = validate_reduction(&ge, Source::VertexCover(&g), &SolveOptions::default()).unwrap();
        assert!(r.structural_ok(), "{:?}", r.checks);
        assert_eq!(r.equivalence, Equivalence::Agrees { gadget: true, expected: true });
    }

    #[test]
    fn mcw_original_structure_without_budget() {
        let g = VertexCoverMemberInstance { vertices: 3, edges: vec![[0, 1], [1, 2]], w: 0 };
        let ge = gen_mcw_from_vcm(&g, MonroeScale::Original).unwrap();
        let r = validate_reduction(&ge, Source::VertexCover(&g), &SolveOptions::default()).unwrap();
        assert!(r.structural_ok(), "{:?}", r.checks);
        assert!(matches!(r.equivalence, Equivalence::Skipped { expected: false, .. }));
        assert!(r.notes.iter().any(|n| n.starts_with("lemma committee")));
    }

    #[test]
    fn mismatched_source_is_rejected() {
        let h = HittingSetInstance { universe_size: 3, sets: vec![[0, 1, 2]], k: 1 };
        let g = VertexCoverMemberInstance { vertices: 2, edges: vec![[0, 1]], w: 0 };
        let ge = gen_ccwv_from_hitting_set(&h).unwrap();
        assert!(validate_reduction(&ge, Source::VertexCover(&g), &SolveOptions::default()).is_err());
    }
}
