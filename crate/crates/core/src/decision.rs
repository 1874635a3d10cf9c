//! Winner Verification, Candidate Winner and the target-score query.
//!
//! These are exponential in the worst case; they delegate to the exact
//! search in [`crate::solve`].

use crate::error::{Error, Result};
use crate::misrep::{committee_score, Objective};
use crate::model::{CandidateId, Committee, Election};
use crate::solve::{self, SolveOptions};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationOutcome {
    pub is_optimal: bool,
    pub committee_score: u64,
    /// Lexicographically least strictly better committee, when one exists.
    pub witness: Option<Committee>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CandidateWinnerOutcome {
    pub member_of_some_optimum: bool,
    pub opt: u64,
    pub opt_c: u64,
}

/// Is `w` an optimal committee of its size?
pub fn winner_verification(
    e: &Election,
    w: &Committee,
    obj: &Objective,
    opts: &SolveOptions,
) -> Result<VerificationOutcome> {
    w.check_for(e)?;
    if w.size() > e.num_candidates() {
        return Err(Error::InvalidArgument("committee larger than candidate set".into()));
    }
    let score = committee_score(e, w, obj)?;
    let witness = match score.checked_sub(1) {
        None => None,
        Some(strictly_better) => {
            solve::lex_least_at_most(e, w.size(), obj, None, strictly_better, opts.budget)?
        }
    };
    Ok(VerificationOutcome { is_optimal: witness.is_none(), committee_score: score, witness })
}

/// Does `c` belong to some optimal size-`k` committee? Compares the
/// unconstrained optimum with the optimum forced to contain `c`.
pub fn candidate_winner(
    e: &Election,
    c: CandidateId,
    k: usize,
    obj: &Objective,
    opts: &SolveOptions,
) -> Result<CandidateWinnerOutcome> {
    e.check_candidate(c)?;
    let (opt, used) = solve::optimum(e, k, obj, None, opts.budget)?;
    let rest = opts.budget.map(|b| b.saturating_sub(used));
    let (opt_c, _) = solve::optimum(e, k, obj, Some(c), rest)?;
    Ok(CandidateWinnerOutcome { member_of_some_optimum: opt_c == opt, opt, opt_c })
}

/// Is there a size-`k` committee (containing `forced`, if given) whose score
/// is at most `r`?
pub fn target_score_query(
    e: &Election,
    k: usize,
    r: u64,
    obj: &Objective,
    forced: Option<CandidateId>,
    opts: &SolveOptions,
) -> Result<bool> {
    Ok(solve::first_at_most(e, k, obj, forced, r, opts.budget)?.is_some())
}

/// Recovers the optimum by bisection over [`target_score_query`], starting
/// from the worst possible score `hi`.
pub fn optimum_by_bisection(
    e: &Election,
    k: usize,
    obj: &Objective,
    forced: Option<CandidateId>,
    hi: u64,
    opts: &SolveOptions,
) -> Result<u64> {
    let (mut lo, mut hi) = (0u64, hi);
    if !target_score_query(e, k, hi, obj, forced, opts)? {
        return Err(Error::InvalidArgument(format!("no committee scores at most {hi}")));
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if target_score_query(e, k, mid, obj, forced, opts)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::misrep::Aggregation;
    use crate::model::Ranking;

    fn copies(m: usize, order: &[usize], n: usize) -> Election {
        Election::from_rankings(m, (0..n).map(|_| Ranking::single(order.to_vec())).collect()).unwrap()
    }

    #[test]
    fn verification_examples() {
        let e = copies(2, &[0, 1], 3);
        let obj = Objective::cc(Aggregation::L1);
        let ok = winner_verification(&e, &Committee::new([0]), &obj, &SolveOptions::default()).unwrap();
        assert!(ok.is_optimal);
        assert_eq!(ok.witness, None);
        let bad = winner_verification(&e, &Committee::new([1]), &obj, &SolveOptions::default()).unwrap();
        assert!(!bad.is_optimal);
        assert_eq!(bad.witness, Some(Committee::new([0])));
        assert_eq!(bad.committee_score, 3);
    }

    #[test]
    fn candidate_winner_examples() {
        let obj = Objective::cc(Aggregation::L1);
        let e = copies(3, &[0, 1, 2], 3);
        let out = candidate_winner(&e, 2, 1, &obj, &SolveOptions::default()).unwrap();
        assert_eq!(out, CandidateWinnerOutcome { member_of_some_optimum: false, opt: 0, opt_c: 6 });
        assert!(candidate_winner(&e, 0, 1, &obj, &SolveOptions::default()).unwrap().member_of_some_optimum);
        // 0 and 1 are clones: each voter ranks them adjacent, split evenly
        let clones = Election::from_rankings(
            3,
            vec![Ranking::single(vec![0, 1, 2]), Ranking::single(vec![1, 0, 2])],
        )
        .unwrap();
        assert!(candidate_winner(&clones, 1, 1, &obj, &SolveOptions::default()).unwrap().member_of_some_optimum);
        assert!(candidate_winner(&clones, 0, 1, &obj, &SolveOptions::default()).unwrap().member_of_some_optimum);
    }

    #[test]
    fn target_query_examples() {
        let obj = Objective::cc(Aggregation::L1);
        let e = Election::from_rankings(
            3,
            vec![Ranking::single(vec![0, 1, 2]), Ranking::single(vec![2, 1, 0]), Ranking::single(vec![1, 2, 0])],
        )
        .unwrap();
        let worst = e.num_voters() * 2;
        assert!(target_score_query(&e, 1, worst, &obj, None, &SolveOptions::default()).unwrap());
        let opt = solve::solve_exact(&e, 1, &obj, &SolveOptions::default()).unwrap().opt_score;
        assert!(!target_score_query(&e, 1, opt - 1, &obj, None, &SolveOptions::default()).unwrap());
        assert_eq!(optimum_by_bisection(&e, 1, &obj, None, worst, &SolveOptions::default()).unwrap(), opt);
    }
}
