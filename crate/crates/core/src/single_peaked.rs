//! Single-peaked profiles: recognition, polynomial Chamberlin-Courant, and
//! Candidate Winner via dummy voters.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::misrep::Dissatisfaction;
use crate::model::{CandidateId, Committee, Election, Ranking};
use crate::solve::SolveResult;

/// A left-to-right ordering of all candidates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axis {
    order: Vec<CandidateId>,
}

impl Axis {
    pub fn new(order: Vec<CandidateId>) -> Result<Self> {
        let mut seen = vec![false; order.len()];
        for &c in &order {
            if c >= order.len() || std::mem::replace(&mut seen[c], true) {
                return Err(Error::InvalidAxis(format!("{order:?} is not a permutation")));
            }
        }
        Ok(Axis { order })
    }

    pub fn order(&self) -> &[CandidateId] {
        &self.order
    }

    pub fn reversed(&self) -> Axis {
        Axis { order: self.order.iter().rev().copied().collect() }
    }

    fn positions(&self) -> Vec<usize> {
        let mut p = vec![0; self.order.len()];
        for (i, &c) in self.order.iter().enumerate() {
            p[c] = i;
        }
        p
    }
}

/// Why a profile cannot be single-peaked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refutation {
    /// Restricted to `subset`, three voters rank three different candidates
    /// last. A single-peaked profile has at most two distinct bottoms on any
    /// subset, since its worst candidates sit at the two ends of the axis.
    ThreeBottoms { subset: Vec<CandidateId>, witnesses: [(usize, CandidateId); 3] },
    /// Every placement of the forced end candidates was tried and failed.
    NoConsistentAxis,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    SinglePeaked(Axis),
    NotSinglePeaked(Refutation),
}

/// Preference strictly decreases moving away from the peak in both directions.
pub fn is_single_peaked_on(r: &Ranking, axis: &Axis) -> bool {
    if r.order().len() != axis.order.len() {
        return false;
    }
    let rank = r.positions();
    let peak = axis.positions()[r.top()];
    let a = &axis.order;
    (peak..a.len().saturating_sub(1)).all(|i| rank[a[i]] < rank[a[i + 1]])
        && (1..=peak).all(|i| rank[a[i]] < rank[a[i - 1]])
}

pub fn certifies(e: &Election, axis: &Axis) -> Result<bool> {
    Ok(e.rankings()?.iter().all(|r| is_single_peaked_on(r, axis)))
}

struct Recognizer {
    ranks: Vec<Vec<usize>>,
    m: usize,
    failed: HashSet<(Vec<bool>, Vec<bool>)>,
}

enum Step {
    Found(Vec<CandidateId>),
    DeadEnd,
    Refuted(Refutation),
}

impl Recognizer {
    /// Placing `x` just inside the candidates already on `side`: any voter
    /// preferring one of them to `x` must prefer `x` to every candidate that
    /// will end up on the other side of `x`.
    fn can_place(&self, x: CandidateId, side: &[bool]) -> bool {
        self.ranks.iter().all(|rank| {
            let best_outside = (0..self.m).filter(|&c| side[c]).map(|c| rank[c]).min();
            match best_outside {
                Some(b) if b < rank[x] => (0..self.m).filter(|&c| !side[c] && c != x).all(|c| rank[x] < rank[c]),
                _ => true,
            }
        })
    }

    fn search(&mut self, left: &mut Vec<CandidateId>, right: &mut Vec<CandidateId>, remaining: &mut Vec<bool>) -> Step {
        let rest: Vec<CandidateId> = (0..self.m).filter(|&c| remaining[c]).collect();
        if rest.is_empty() {
            let mut axis = left.clone();
            axis.extend(right.iter().rev());
            return Step::Found(axis);
        }
        let mut bottoms: Vec<(usize, CandidateId)> = Vec::new();
        for (v, rank) in self.ranks.iter().enumerate() {
            let worst = *rest.iter().max_by_key(|&&c| rank[c]).expect("non-empty");
            if !bottoms.iter().any(|&(_, c)| c == worst) {
                bottoms.push((v, worst));
            }
        }
        if bottoms.len() > 2 {
            return Step::Refuted(Refutation::ThreeBottoms {
                subset: rest,
                witnesses: [bottoms[0], bottoms[1], bottoms[2]],
            });
        }
        let key = {
            let mut l = vec![false; self.m];
            let mut r = vec![false; self.m];
            left.iter().for_each(|&c| l[c] = true);
            right.iter().for_each(|&c| r[c] = true);
            (l, r)
        };
        if self.failed.contains(&key) {
            return Step::DeadEnd;
        }
        let fresh = left.is_empty() && right.is_empty();
        let plans: Vec<Vec<(CandidateId, bool)>> = match bottoms.as_slice() {
            [(_, x)] if fresh || rest.len() == 1 => vec![vec![(*x, true)]],
            [(_, x)] => vec![vec![(*x, true)], vec![(*x, false)]],
            [(_, x), (_, y)] if fresh => vec![vec![(*x, true), (*y, false)]],
            [(_, x), (_, y)] => vec![vec![(*x, true), (*y, false)], vec![(*y, true), (*x, false)]],
            _ => unreachable!(),
        };
        for plan in plans {
            let mut placed = Vec::new();
            let mut ok = true;
            for &(x, to_left) in &plan {
                let side = {
                    let mut s = vec![false; self.m];
                    for &c in if to_left { &*left } else { &*right } {
                        s[c] = true;
                    }
                    s
                };
                if !self.can_place(x, &side) {
                    ok = false;
                    break;
                }
                remaining[x] = false;
                if to_left { left.push(x) } else { right.push(x) }
                placed.push((x, to_left));
            }
            if ok {
                match self.search(left, right, remaining) {
                    Step::DeadEnd => {}
                    other => return other,
                }
            }
            for &(x, to_left) in placed.iter().rev() {
                remaining[x] = true;
                if to_left { left.pop() } else { right.pop() };
            }
        }
        self.failed.insert(key);
        Step::DeadEnd
    }
}

/// Finds an axis on which every ranking is single-peaked, building it from
/// the outside in: at each step only candidates ranked last by some voter
/// among those still unplaced may take the outermost free slots.
pub fn recognize_single_peaked(e: &Election) -> Result<Recognition> {
    let rankings = e.rankings()?;
    let mut rec = Recognizer {
        ranks: rankings.iter().map(Ranking::positions).collect(),
        m: e.num_candidates(),
        failed: HashSet::new(),
    };
    let mut remaining = vec![true; rec.m];
    match rec.search(&mut Vec::new(), &mut Vec::new(), &mut remaining) {
        Step::Found(order) => Ok(Recognition::SinglePeaked(Axis { order })),
        Step::Refuted(r) => Ok(Recognition::NotSinglePeaked(r)),
        Step::DeadEnd => Ok(Recognition::NotSinglePeaked(Refutation::NoConsistentAxis)),
    }
}

/// Optimal `L1` Chamberlin-Courant committee on a profile single-peaked
/// along `axis`.
///
/// Each voter's best member is the nearest member on one side of its peak,
/// so the voters a member serves form a contiguous run of peaks. The table
/// `dp[j][i]` holds the least cost of voters peaking at or before axis slot
/// `i` when `j` members are chosen and the rightmost sits at `i`.
pub fn solve_cc_single_peaked(e: &Election, axis: &Axis, k: usize, alpha: &Dissatisfaction) -> Result<SolveResult> {
    let rankings = e.rankings()?;
    let m = e.num_candidates();
    if !certifies(e, axis)? {
        return Err(Error::InvalidAxis("some ranking is not single-peaked on the axis".into()));
    }
    if k < 1 || k > m {
        return Err(Error::InvalidArgument(format!("committee size {k} outside 1..={m}")));
    }
    if alpha.len() != m {
        return Err(Error::InvalidArgument("dissatisfaction length does not match candidates".into()));
    }
    let axis_pos = axis.positions();
    // cost[v][i]: penalty of voter group v for the candidate at axis slot i
    let cost: Vec<Vec<u64>> = rankings
        .iter()
        .map(|r| {
            let rank = r.positions();
            axis.order.iter().map(|&c| alpha.alpha()[rank[c]]).collect()
        })
        .collect();
    let peak: Vec<usize> = rankings.iter().map(|r| axis_pos[r.top()]).collect();
    let weight: Vec<u64> = rankings.iter().map(Ranking::weight).collect();
    let voters = rankings.len();

    let mut explored = 0u64;
    let served = |pred: &dyn Fn(usize) -> bool, f: &dyn Fn(usize) -> u64| -> u64 {
        (0..voters).filter(|&v| pred(peak[v])).map(|v| weight[v] * f(v)).sum()
    };
    let seg = |lo: usize, hi: usize| -> u64 { served(&|p| lo < p && p <= hi, &|v| cost[v][lo].min(cost[v][hi])) };

    const INF: u64 = u64::MAX;
    let mut dp = vec![vec![INF; m]; k + 1];
    let mut parent = vec![vec![usize::MAX; m]; k + 1];
    for i in 0..m {
        dp[1][i] = served(&|p| p <= i, &|v| cost[v][i]);
    }
    for j in 2..=k {
        for i in 0..m {
            for prev in 0..i {
                explored += 1;
                if dp[j - 1][prev] == INF {
                    continue;
                }
                let cand = dp[j - 1][prev] + seg(prev, i);
                if cand < dp[j][i] {
                    dp[j][i] = cand;
                    parent[j][i] = prev;
                }
            }
        }
    }
    let mut best: Option<(u64, usize)> = None;
    for i in 0..m {
        if dp[k][i] == INF {
            continue;
        }
        let total = dp[k][i] + served(&|p| p > i, &|v| cost[v][i]);
        if best.is_none_or(|(b, _)| total < b) {
            best = Some((total, i));
        }
    }
    let (opt, mut last) = best.expect("k <= m leaves a feasible table cell");
    let mut members = Vec::with_capacity(k);
    for j in (1..=k).rev() {
        members.push(axis.order[last]);
        last = parent[j][last];
    }
    Ok(SolveResult { opt_score: opt, optimal_committees: vec![Committee::new(members)], explored })
}

/// Ranking peaked at `c` that orders candidates by axis distance from `c`,
/// breaking equal distances toward the start of the axis.
pub fn dummy_ranking(axis: &Axis, c: CandidateId) -> Ranking {
    let at = axis.positions()[c];
    let (mut lo, mut hi) = (at as isize - 1, at + 1);
    let mut order = vec![c];
    while lo >= 0 || hi < axis.order.len() {
        let dl = if lo >= 0 { at - lo as usize } else { usize::MAX };
        let dr = if hi < axis.order.len() { hi - at } else { usize::MAX };
        if dl <= dr {
            order.push(axis.order[lo as usize]);
            lo -= 1;
        } else {
            order.push(axis.order[hi]);
            hi += 1;
        }
    }
    Ranking::single(order)
}

/// `e` plus `n(m-1) + 1` voters who all cast [`dummy_ranking`] for `c`.
pub fn with_dummy_voters(e: &Election, axis: &Axis, c: CandidateId) -> Result<Election> {
    e.check_candidate(c)?;
    let m = e.num_candidates() as u64;
    let dummies = e.num_voters() * (m - 1) + 1;
    let r = dummy_ranking(axis, c);
    e.with_extra_rankings([Ranking::new(r.order().to_vec(), dummies)])
}

/// Borda `L1` Candidate Winner on a single-peaked profile: `c` is in some
/// optimal committee iff the dummy voters leave the optimum unchanged.
pub fn candidate_winner_single_peaked(e: &Election, axis: &Axis, c: CandidateId, k: usize) -> Result<bool> {
    let alpha = Dissatisfaction::borda(e.num_candidates())?;
    let base = solve_cc_single_peaked(e, axis, k, &alpha)?.opt_score;
    let extended = with_dummy_voters(e, axis, c)?;
    let with_dummies = solve_cc_single_peaked(&extended, axis, k, &alpha)?.opt_score;
    Ok(base == with_dummies)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn election(m: usize, orders: &[&[usize]]) -> Election {
        Election::from_rankings(m, orders.iter().map(|o| Ranking::single(o.to_vec())).collect()).unwrap()
    }

    fn axis_of(e: &Election) -> Axis {
        match recognize_single_peaked(e).unwrap() {
            Recognition::SinglePeaked(a) => a,
            other => panic!("expected single-peaked, got {other:?}"),
        }
    }

    #[test]
    fn recognizes_opposed_pair() {
        let e = election(3, &[&[0, 1, 2], &[2, 1, 0]]);
        let a = axis_of(&e);
        assert!(a.order() == [0, 1, 2] || a.order() == [2, 1, 0]);
    }

    #[test]
    fn single_voter_is_single_peaked() {
        let e = election(4, &[&[2, 0, 3, 1]]);
        let a = axis_of(&e);
        assert!(certifies(&e, &a).unwrap());
    }

    #[test]
    fn condorcet_cycle_is_refuted() {
        let e = election(3, &[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]);
        assert!(matches!(
            recognize_single_peaked(&e).unwrap(),
            Recognition::NotSinglePeaked(Refutation::ThreeBottoms { .. })
        ));
    }

    #[test]
    fn three_axes_profile_is_single_peaked_on_b_a_c() {
        // a>b>c, b>a>c, c>a>b is single-peaked along b-a-c
        let e = election(3, &[&[0, 1, 2], &[1, 0, 2], &[2, 0, 1]]);
        let a = axis_of(&e);
        assert_eq!(a.order()[1], 0);
    }

    #[test]
    fn single_peaked_dp_examples() {
        let e = election(3, &[&[0, 1, 2], &[2, 1, 0]]);
        let axis = Axis::new(vec![0, 1, 2]).unwrap();
        let b = Dissatisfaction::borda(3).unwrap();
        assert_eq!(solve_cc_single_peaked(&e, &axis, 1, &b).unwrap().opt_score, 2);
        assert_eq!(solve_cc_single_peaked(&e, &axis, 3, &b).unwrap().opt_score, 0);
        let bad = Axis::new(vec![1, 0, 2]).unwrap();
        assert!(matches!(solve_cc_single_peaked(&e, &bad, 1, &b), Err(Error::InvalidAxis(_))));
    }

    #[test]
    fn dummy_ranking_is_single_peaked() {
        let axis = Axis::new(vec![3, 1, 0, 2, 4]).unwrap();
        let r = dummy_ranking(&axis, 0);
        assert_eq!(r.order(), &[0, 1, 2, 3, 4]);
        assert!(is_single_peaked_on(&r, &axis));
        for c in 0..5 {
            assert!(is_single_peaked_on(&dummy_ranking(&axis, c), &axis));
        }
    }

    #[test]
    fn candidate_winner_sole_optimum() {
        let e = election(3, &[&[1, 0, 2], &[1, 2, 0], &[0, 1, 2]]);
        let axis = Axis::new(vec![0, 1, 2]).unwrap();
        assert!(candidate_winner_single_peaked(&e, &axis, 1, 1).unwrap());
        assert!(!candidate_winner_single_peaked(&e, &axis, 2, 1).unwrap());
    }
}
