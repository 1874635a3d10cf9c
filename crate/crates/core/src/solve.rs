//! Exact committee search by branch and bound, plus a greedy baseline.
//!
//! Nodes partition the committee space by fixing candidates in or out. The
//! admissible bound of a node is the Chamberlin-Courant score of every
//! candidate that is chosen or still undecided; for Monroe it is the same
//! relaxation, since dropping the quota can only lower a score.
//!
//! Branching picks the voter whose current representation could improve the
//! most and splits on which of its better candidates joins first. Once no
//! voter can improve, every Chamberlin-Courant completion has the same score;
//! Monroe nodes then fall back to include/exclude on the most useful
//! undecided candidate.

use crate::error::{Error, Result};
use crate::misrep::{Aggregation, CostTable, Dissatisfaction, Objective, Rule};
use crate::model::{CandidateId, Committee, Election};
use crate::monroe;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// List every optimal committee instead of only the lexicographically least.
    pub enumerate_all: bool,
    /// Abort with [`Error::BudgetExhausted`] after this many search nodes.
    pub budget: Option<u64>,
}

impl SolveOptions {
    pub fn all() -> Self {
        SolveOptions { enumerate_all: true, budget: None }
    }

    pub fn with_budget(budget: u64) -> Self {
        SolveOptions { enumerate_all: false, budget: Some(budget) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub opt_score: u64,
    /// Sorted lexicographically by member ids.
    pub optimal_committees: Vec<Committee>,
    pub explored: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Open,
    In,
    Out,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Goal {
    /// Keep lowering `bound`, accepting only strict improvements.
    Minimize,
    /// Record every committee scoring at most `bound`.
    Collect,
    /// Stop at the first committee scoring at most `bound`.
    FirstHit,
}

struct NodeView {
    cur: Vec<u64>,
    best: Vec<u64>,
    lower_bound: u64,
    current_score: u64,
}

pub(crate) struct Search<'a> {
    table: &'a CostTable,
    rule: Rule,
    k: usize,
    status: Vec<Status>,
    chosen: Vec<CandidateId>,
    usefulness: Vec<CandidateId>,
    explored: u64,
    budget: Option<u64>,
    goal: Goal,
    bound: u64,
    found: Vec<Committee>,
    stop: bool,
}

impl<'a> Search<'a> {
    pub(crate) fn new(table: &'a CostTable, rule: Rule, k: usize, forced: Option<CandidateId>, budget: Option<u64>) -> Self {
        let m = table.rows.first().map_or(0, Vec::len);
        let mut status = vec![Status::Open; m];
        let mut chosen = Vec::new();
        if let Some(c) = forced {
            status[c] = Status::In;
            chosen.push(c);
        }
        let mut usefulness: Vec<CandidateId> = (0..m).collect();
        let total = |c: usize| -> u64 {
            table.rows.iter().zip(&table.weights).map(|(r, &w)| w.saturating_mul(r[c])).fold(0, u64::saturating_add)
        };
        let totals: Vec<u64> = (0..m).map(total).collect();
        usefulness.sort_by_key(|&c| (totals[c], c));
        Search {
            table,
            rule,
            k,
            status,
            chosen,
            usefulness,
            explored: 0,
            budget,
            goal: Goal::Minimize,
            bound: u64::MAX,
            found: Vec::new(),
            stop: false,
        }
    }

    fn m(&self) -> usize {
        self.status.len()
    }

    fn accepts(&self, score: u64) -> bool {
        match self.goal {
            Goal::Minimize => score < self.bound,
            Goal::Collect | Goal::FirstHit => score <= self.bound,
        }
    }

    fn contribution(&self, voter: usize, cost: u64) -> u64 {
        match self.table.mode {
            Aggregation::L1 => self.table.weights[voter].saturating_mul(cost),
            Aggregation::LInf => cost,
        }
    }

    fn open_count(&self) -> usize {
        self.status.iter().filter(|&&s| s == Status::Open).count()
    }

    fn tick(&mut self) -> Result<()> {
        self.explored += 1;
        match self.budget {
            Some(b) if self.explored > b => Err(Error::BudgetExhausted { explored: self.explored }),
            _ => Ok(()),
        }
    }

    fn view(&self) -> NodeView {
        let full = self.chosen.len() >= self.k;
        let mut cur = Vec::with_capacity(self.table.rows.len());
        let mut best = Vec::with_capacity(self.table.rows.len());
        for row in &self.table.rows {
            let mut c = u64::MAX;
            let mut b = u64::MAX;
            for (j, &p) in row.iter().enumerate() {
                match self.status[j] {
                    Status::In => {
                        c = c.min(p);
                        b = b.min(p);
                    }
                    Status::Open if !full => b = b.min(p),
                    _ => {}
                }
            }
            cur.push(c);
            best.push(b);
        }
        let lower_bound = self.table.aggregate(best.iter().copied().enumerate());
        let current_score = self.table.aggregate(cur.iter().copied().enumerate());
        NodeView { cur, best, lower_bound, current_score }
    }

    fn exact_score(&self, view: &NodeView) -> Result<u64> {
        match self.rule {
            Rule::ChamberlinCourant => Ok(view.current_score),
            Rule::Monroe => {
                let sub = CostTable {
                    weights: self.table.weights.clone(),
                    rows: self.table.rows.iter().map(|r| self.chosen.iter().map(|&c| r[c]).collect()).collect(),
                    mode: self.table.mode,
                };
                monroe::table_score(&sub)
            }
        }
    }

    fn record(&mut self, members: Vec<CandidateId>, score: u64) {
        let committee = Committee::new(members);
        match self.goal {
            Goal::Minimize => {
                self.bound = score;
                self.found = vec![committee];
            }
            Goal::Collect => self.found.push(committee),
            Goal::FirstHit => {
                self.found = vec![committee];
                self.stop = true;
            }
        }
    }

    fn include(&mut self, c: CandidateId) {
        self.status[c] = Status::In;
        self.chosen.push(c);
    }

    fn uninclude(&mut self, c: CandidateId) {
        self.status[c] = Status::Open;
        let popped = self.chosen.pop();
        debug_assert_eq!(popped, Some(c));
    }

    fn set_open(&mut self, cs: &[CandidateId], s: Status) {
        for &c in cs {
            self.status[c] = s;
        }
    }

    /// Records all (or, outside `Collect`, the smallest-id) completions of
    /// the current partial committee from the open candidates.
    fn record_completions(&mut self, score: u64) {
        let need = self.k - self.chosen.len();
        let open: Vec<CandidateId> = (0..self.m()).filter(|&c| self.status[c] == Status::Open).collect();
        if self.goal != Goal::Collect {
            let mut members = self.chosen.clone();
            members.extend(&open[..need]);
            self.record(members, score);
            return;
        }
        let mut idx: Vec<usize> = (0..need).collect();
        loop {
            let mut members = self.chosen.clone();
            members.extend(idx.iter().map(|&i| open[i]));
            self.record(members, score);
            if !next_combination(&mut idx, open.len()) {
                return;
            }
        }
    }

    fn explore(&mut self) -> Result<()> {
        if self.stop {
            return Ok(());
        }
        self.tick()?;
        let open = self.open_count();
        if self.chosen.len() + open < self.k {
            return Ok(());
        }
        let view = self.view();
        if !self.accepts(view.lower_bound) {
            return Ok(());
        }
        if self.chosen.len() == self.k {
            let score = self.exact_score(&view)?;
            if self.accepts(score) {
                self.record(self.chosen.clone(), score);
            }
            return Ok(());
        }
        if self.chosen.len() + open == self.k {
            let rest: Vec<CandidateId> = (0..self.m()).filter(|&c| self.status[c] == Status::Open).collect();
            for &c in &rest {
                self.include(c);
            }
            let view = self.view();
            let score = self.exact_score(&view)?;
            if self.accepts(score) {
                self.record(self.chosen.clone(), score);
            }
            for &c in rest.iter().rev() {
                self.uninclude(c);
            }
            return Ok(());
        }

        match self.branch_voter(&view) {
            Some(v) => self.split_on_voter(v, view.cur[v]),
            None => match self.rule {
                Rule::ChamberlinCourant => {
                    if self.accepts(view.current_score) {
                        self.record_completions(view.current_score);
                    }
                    Ok(())
                }
                Rule::Monroe => self.split_on_candidate(),
            },
        }
    }

    fn branch_voter(&self, view: &NodeView) -> Option<usize> {
        let gaps = (0..view.cur.len()).filter(|&v| view.best[v] < view.cur[v]);
        match self.table.mode {
            Aggregation::L1 => gaps.max_by_key(|&v| {
                (self.table.weights[v].saturating_mul(view.cur[v] - view.best[v]), std::cmp::Reverse(v))
            }),
            Aggregation::LInf => gaps.max_by_key(|&v| (view.cur[v], std::cmp::Reverse(v))),
        }
    }

    /// Branch `j` puts the voter's `j`-th better candidate in and the
    /// earlier ones out; the last branch puts all of them out.
    fn split_on_voter(&mut self, v: usize, cur: u64) -> Result<()> {
        let row = &self.table.rows[v];
        let mut better: Vec<CandidateId> =
            (0..self.m()).filter(|&c| self.status[c] == Status::Open && row[c] < cur).collect();
        let pos_in_usefulness = {
            let mut p = vec![0; self.m()];
            for (i, &c) in self.usefulness.iter().enumerate() {
                p[c] = i;
            }
            p
        };
        better.sort_by_key(|&c| (row[c], pos_in_usefulness[c]));
        let costs: Vec<u64> = better.iter().map(|&c| row[c]).collect();

        for j in 0..better.len() {
            if self.stop {
                break;
            }
            if !self.accepts(self.contribution(v, costs[j])) {
                break;
            }
            let c = better[j];
            self.set_open(&better[..j], Status::Out);
            self.include(c);
            let r = self.explore();
            self.uninclude(c);
            self.set_open(&better[..j], Status::Open);
            r?;
        }
        if !self.stop && cur != u64::MAX && self.accepts(self.contribution(v, cur)) {
            self.set_open(&better, Status::Out);
            let r = self.explore();
            self.set_open(&better, Status::Open);
            r?;
        }
        Ok(())
    }

    fn split_on_candidate(&mut self) -> Result<()> {
        let c = *self.usefulness.iter().find(|&&c| self.status[c] == Status::Open).expect("open candidate exists");
        self.include(c);
        let r = self.explore();
        self.uninclude(c);
        r?;
        if self.stop {
            return Ok(());
        }
        self.status[c] = Status::Out;
        let r = self.explore();
        self.status[c] = Status::Open;
        r
    }

    /// Lexicographically least committee scoring at most `threshold`:
    /// include-first depth-first search over ascending ids.
    fn lex_first(&mut self, threshold: u64, next: CandidateId) -> Result<Option<Committee>> {
        self.tick()?;
        let open_from: Vec<CandidateId> = (next..self.m()).filter(|&c| self.status[c] == Status::Open).collect();
        if self.chosen.len() + open_from.len() < self.k {
            return Ok(None);
        }
        // candidates below `next` that are still open are treated as excluded
        let skipped: Vec<CandidateId> = (0..next).filter(|&c| self.status[c] == Status::Open).collect();
        self.set_open(&skipped, Status::Out);
        let outcome = self.lex_node(threshold, &open_from);
        self.set_open(&skipped, Status::Open);
        outcome
    }

    fn lex_node(&mut self, threshold: u64, open_from: &[CandidateId]) -> Result<Option<Committee>> {
        let view = self.view();
        if view.lower_bound > threshold {
            return Ok(None);
        }
        if self.chosen.len() == self.k {
            let score = self.exact_score(&view)?;
            return Ok((score <= threshold).then(|| Committee::new(self.chosen.clone())));
        }
        if self.rule == Rule::ChamberlinCourant
            && view.best == view.cur
            && view.current_score <= threshold
        {
            let need = self.k - self.chosen.len();
            let mut members = self.chosen.clone();
            members.extend(&open_from[..need]);
            return Ok(Some(Committee::new(members)));
        }
        let c = open_from[0];
        self.include(c);
        let found = self.lex_first(threshold, c + 1);
        self.uninclude(c);
        if let Some(w) = found? {
            return Ok(Some(w));
        }
        self.status[c] = Status::Out;
        let found = self.lex_first(threshold, c + 1);
        self.status[c] = Status::Open;
        found
    }

    fn run(&mut self, goal: Goal, bound: u64) -> Result<()> {
        self.goal = goal;
        self.bound = bound;
        self.found.clear();
        self.stop = false;
        self.explore()
    }
}

/// Advances `idx` to the next ascending `idx.len()`-subset of `0..n`.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Greedy Chamberlin-Courant over table columns, starting from `start`.
pub(crate) fn greedy_columns(table: &CostTable, k: usize, start: Option<CandidateId>) -> Vec<CandidateId> {
    let m = table.rows.first().map_or(0, Vec::len);
    let mut chosen: Vec<CandidateId> = start.into_iter().collect();
    let mut cur: Vec<u64> = table
        .rows
        .iter()
        .map(|r| chosen.iter().map(|&c| r[c]).min().unwrap_or(u64::MAX))
        .collect();
    while chosen.len() < k {
        let mut best: Option<(u64, CandidateId)> = None;
        for c in 0..m {
            if chosen.contains(&c) {
                continue;
            }
            let score = table.aggregate(table.rows.iter().enumerate().map(|(v, r)| (v, cur[v].min(r[c]))));
            if best.is_none_or(|(s, _)| score < s) {
                best = Some((score, c));
            }
        }
        let (_, c) = best.expect("k <= m");
        chosen.push(c);
        for (v, r) in table.rows.iter().enumerate() {
            cur[v] = cur[v].min(r[c]);
        }
    }
    chosen
}

fn check_k(e: &Election, k: usize) -> Result<()> {
    if k < 1 || k > e.num_candidates() {
        return Err(Error::InvalidArgument(format!(
            "committee size {k} outside 1..={}",
            e.num_candidates()
        )));
    }
    Ok(())
}

struct Prepared {
    table: CostTable,
}

fn prepare(e: &Election, k: usize, obj: &Objective, forced: Option<CandidateId>) -> Result<Prepared> {
    check_k(e, k)?;
    if let Some(c) = forced {
        e.check_candidate(c)?;
    }
    if obj.rule == Rule::Monroe {
        monroe::quota(e.num_voters(), k)?;
    }
    Ok(Prepared { table: CostTable::full(e, obj)? })
}

fn incumbent(search: &Search<'_>, table: &CostTable, k: usize, forced: Option<CandidateId>) -> Result<(Vec<CandidateId>, u64)> {
    let cols = greedy_columns(table, k, forced);
    let score = match search.rule {
        Rule::ChamberlinCourant => table.cc_score(&cols),
        Rule::Monroe => monroe::table_score(&CostTable {
            weights: table.weights.clone(),
            rows: table.rows.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect(),
            mode: table.mode,
        })?,
    };
    Ok((cols, score))
}

/// Optimal score (optionally restricted to committees containing `forced`)
/// without listing committees. Returns `(score, explored)`.
pub(crate) fn optimum(
    e: &Election,
    k: usize,
    obj: &Objective,
    forced: Option<CandidateId>,
    budget: Option<u64>,
) -> Result<(u64, u64)> {
    let p = prepare(e, k, obj, forced)?;
    let mut s = Search::new(&p.table, obj.rule, k, forced, budget);
    let (_, seed) = incumbent(&s, &p.table, k, forced)?;
    s.run(Goal::Minimize, seed)?;
    Ok((s.bound, s.explored))
}

/// Whether some size-`k` committee (containing `forced`, if given) scores at
/// most `r`. Returns the first witness found.
pub(crate) fn first_at_most(
    e: &Election,
    k: usize,
    obj: &Objective,
    forced: Option<CandidateId>,
    r: u64,
    budget: Option<u64>,
) -> Result<Option<Committee>> {
    let p = prepare(e, k, obj, forced)?;
    let mut s = Search::new(&p.table, obj.rule, k, forced, budget);
    s.run(Goal::FirstHit, r)?;
    Ok(s.found.pop())
}

/// Lexicographically least size-`k` committee scoring at most `threshold`.
pub(crate) fn lex_least_at_most(
    e: &Election,
    k: usize,
    obj: &Objective,
    forced: Option<CandidateId>,
    threshold: u64,
    budget: Option<u64>,
) -> Result<Option<Committee>> {
    let p = prepare(e, k, obj, forced)?;
    let mut s = Search::new(&p.table, obj.rule, k, forced, budget);
    s.lex_first(threshold, 0)
}

fn solve_inner(e: &Election, k: usize, obj: &Objective, forced: Option<CandidateId>, opts: &SolveOptions) -> Result<SolveResult> {
    let p = prepare(e, k, obj, forced)?;
    let mut s = Search::new(&p.table, obj.rule, k, forced, opts.budget);
    let (_, seed) = incumbent(&s, &p.table, k, forced)?;
    // seed + 1 lets the search rediscover the greedy committee itself
    s.run(Goal::Minimize, seed.saturating_add(1))?;
    let opt = s.bound;
    let committees = if opts.enumerate_all {
        s.run(Goal::Collect, opt)?;
        let mut all = std::mem::take(&mut s.found);
        all.sort();
        all
    } else {
        let w = s.lex_first(opt, 0)?.expect("an optimal committee exists");
        vec![w]
    };
    Ok(SolveResult { opt_score: opt, optimal_committees: committees, explored: s.explored })
}

/// Minimum score over all size-`k` committees. Approval elections ignore
/// `alpha` and `mode`.
pub fn solve_exact(e: &Election, k: usize, obj: &Objective, opts: &SolveOptions) -> Result<SolveResult> {
    solve_inner(e, k, obj, None, opts)
}

/// As [`solve_exact`], restricted to committees containing `c`.
pub fn solve_exact_forced(e: &Election, k: usize, obj: &Objective, c: CandidateId, opts: &SolveOptions) -> Result<SolveResult> {
    solve_inner(e, k, obj, Some(c), opts)
}

/// Greedy Chamberlin-Courant: repeatedly add the candidate that lowers the
/// score most (ties: smallest id).
pub fn solve_greedy_cc(e: &Election, k: usize, alpha: &Dissatisfaction, mode: Aggregation) -> Result<(Committee, u64)> {
    e.rankings()?;
    greedy(e, k, &Objective::cc(mode).with_alpha(alpha.clone()))
}

pub fn solve_greedy_approval_cc(e: &Election, k: usize) -> Result<(Committee, u64)> {
    e.approvals()?;
    greedy(e, k, &Objective::cc(Aggregation::L1))
}

fn greedy(e: &Election, k: usize, obj: &Objective) -> Result<(Committee, u64)> {
    check_k(e, k)?;
    let table = CostTable::full(e, obj)?;
    let cols = greedy_columns(&table, k, None);
    let score = table.cc_score(&cols);
    Ok((Committee::new(cols), score))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ApprovalBallot, Ranking};

    fn rankings(m: usize, orders: &[&[usize]]) -> Election {
        Election::from_rankings(m, orders.iter().map(|o| Ranking::single(o.to_vec())).collect()).unwrap()
    }

    #[test]
    fn unanimous_top_wins() {
        let e = rankings(3, &[&[0, 1, 2], &[0, 1, 2]]);
        let r = solve_exact(&e, 1, &Objective::cc(Aggregation::L1), &SolveOptions::all()).unwrap();
        assert_eq!(r.opt_score, 0);
        assert_eq!(r.optimal_committees, vec![Committee::new([0])]);
    }

    #[test]
    fn approval_ties_are_all_listed() {
        let e = Election::from_approvals(
            3,
            vec![ApprovalBallot::single([0]), ApprovalBallot::single([1]), ApprovalBallot::single([2])],
        )
        .unwrap();
        let r = solve_exact(&e, 2, &Objective::cc(Aggregation::L1), &SolveOptions::all()).unwrap();
        assert_eq!(r.opt_score, 1);
        assert_eq!(
            r.optimal_committees,
            vec![Committee::new([0, 1]), Committee::new([0, 2]), Committee::new([1, 2])]
        );
        let one = solve_exact(&e, 2, &Objective::cc(Aggregation::L1), &SolveOptions::default()).unwrap();
        assert_eq!(one.optimal_committees, vec![Committee::new([0, 1])]);
    }

    #[test]
    fn full_committee_scores_zero() {
        let e = rankings(3, &[&[0, 1, 2], &[2, 0, 1], &[1, 2, 0]]);
        for mode in [Aggregation::L1, Aggregation::LInf] {
            let r = solve_exact(&e, 3, &Objective::cc(mode), &SolveOptions::default()).unwrap();
            assert_eq!(r.opt_score, 0);
            assert_eq!(r.optimal_committees, vec![Committee::new([0, 1, 2])]);
        }
    }

    #[test]
    fn forced_solves() {
        let e = rankings(3, &[&[0, 1, 2], &[0, 1, 2]]);
        let r = solve_exact_forced(&e, 1, &Objective::cc(Aggregation::L1), 1, &SolveOptions::default()).unwrap();
        assert_eq!(r.opt_score, 2);
        assert_eq!(r.optimal_committees, vec![Committee::new([1])]);
        let a = Election::from_approvals(2, vec![ApprovalBallot::single([0]), ApprovalBallot::single([0])]).unwrap();
        let r = solve_exact_forced(&a, 1, &Objective::cc(Aggregation::L1), 1, &SolveOptions::default()).unwrap();
        assert_eq!(r.opt_score, 2);
    }

    #[test]
    fn rejects_bad_k() {
        let e = rankings(2, &[&[0, 1]]);
        assert!(matches!(
            solve_exact(&e, 0, &Objective::cc(Aggregation::L1), &SolveOptions::default()),
            Err(Error::InvalidArgument(_))
        ));
        assert!(solve_exact(&e, 3, &Objective::cc(Aggregation::L1), &SolveOptions::default()).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let e = rankings(6, &[&[0, 1, 2, 3, 4, 5], &[5, 4, 3, 2, 1, 0], &[2, 3, 1, 4, 0, 5]]);
        let r = solve_exact(&e, 2, &Objective::cc(Aggregation::L1), &SolveOptions::with_budget(1));
        assert!(matches!(r, Err(Error::BudgetExhausted { .. })));
    }

    #[test]
    fn greedy_examples() {
        let e = rankings(3, &[&[0, 1, 2], &[2, 1, 0], &[1, 0, 2]]);
        let alpha = Dissatisfaction::borda(3).unwrap();
        let (w, s) = solve_greedy_cc(&e, 1, &alpha, Aggregation::L1).unwrap();
        let exact = solve_exact(&e, 1, &Objective::cc(Aggregation::L1), &SolveOptions::default()).unwrap();
        assert_eq!(s, exact.opt_score);
        assert_eq!(w, exact.optimal_committees[0]);
        let u = rankings(3, &[&[2, 0, 1], &[2, 1, 0]]);
        assert_eq!(solve_greedy_cc(&u, 2, &alpha, Aggregation::L1).unwrap().1, 0);
    }

    #[test]
    fn monroe_exact_small() {
        let e = rankings(2, &[&[0, 1], &[0, 1]]);
        let r = solve_exact(&e, 2, &Objective::monroe(Aggregation::L1), &SolveOptions::all()).unwrap();
        assert_eq!(r.opt_score, 1);
        assert_eq!(r.optimal_committees, vec![Committee::new([0, 1])]);
        let r = solve_exact(&e, 1, &Objective::monroe(Aggregation::L1), &SolveOptions::all()).unwrap();
        assert_eq!(r.opt_score, 0);
    }
}
