//! Balanced (Monroe) assignment of voters to a fixed committee.
//!
//! With `n` voters and `k` members every member represents `⌊n/k⌋` or
//! `⌈n/k⌉` voters, and exactly `n mod k` members carry the larger load. The
//! `L1` optimum is a transportation problem solved by min-cost flow; the
//! `LInf` optimum is the smallest penalty threshold whose restricted
//! bipartite graph still admits a quota-respecting assignment.

use crate::error::{Error, Result};
use crate::flow::MinCostFlow;
use crate::misrep::{Aggregation, Assignment, CostTable, Dissatisfaction, Objective};
use crate::model::{CandidateId, Committee, Election};

/// `(⌊n/k⌋, ⌈n/k⌉)`; rejects `k > n` and `k = 0`.
pub fn quota(n: u64, k: usize) -> Result<(u64, u64)> {
    if k == 0 {
        return Err(Error::InvalidArgument("committee size must be positive".into()));
    }
    if k as u64 > n {
        return Err(Error::InfeasibleQuota { n, k });
    }
    let k = k as u64;
    Ok((n / k, n.div_ceil(k)))
}

/// Per ballot group, how its weight is split across member columns.
pub(crate) type GroupSplit = Vec<Vec<(usize, u64)>>;

/// Min-cost quota-respecting assignment using only `(voter, member)` pairs
/// whose penalty is at most `threshold`. `None` when no such assignment exists.
fn balanced_flow(table: &CostTable, threshold: Option<u64>) -> Result<Option<(GroupSplit, u64)>> {
    let groups = table.rows.len();
    let k = table.rows.first().map_or(0, Vec::len);
    let n: u64 = table.weights.iter().sum();
    let (floor, ceil) = quota(n, k)?;
    let extra_slots = n - floor * k as u64;

    let source = 0;
    let member = |j: usize| 1 + groups + j;
    let extra = 1 + groups + k;
    let sink = extra + 1;
    let mut g = MinCostFlow::new(sink + 1);
    let mut handles = vec![Vec::new(); groups];
    for (v, row) in table.rows.iter().enumerate() {
        let w = table.weights[v];
        g.add_arc(source, 1 + v, w, 0);
        for (j, &c) in row.iter().enumerate() {
            if threshold.is_none_or(|t| c <= t) {
                handles[v].push((j, g.add_arc(1 + v, member(j), w, c)));
            }
        }
    }
    for j in 0..k {
        g.add_arc(member(j), sink, floor, 0);
        if ceil > floor {
            g.add_arc(member(j), extra, 1, 0);
        }
    }
    g.add_arc(extra, sink, extra_slots, 0);

    let (flow, cost) = g.run(source, sink);
    if flow < n {
        return Ok(None);
    }
    let split = handles
        .iter()
        .map(|hs| {
            hs.iter()
                .filter_map(|&(j, h)| {
                    let f = g.flow_on(h);
                    (f > 0).then_some((j, f))
                })
                .collect()
        })
        .collect();
    Ok(Some((split, cost)))
}

/// Optimal Monroe assignment over the table's columns.
pub(crate) fn optimal_split(table: &CostTable) -> Result<(GroupSplit, u64)> {
    match table.mode {
        Aggregation::L1 => {
            let (split, cost) = balanced_flow(table, None)?.expect("unrestricted quota assignment exists when k <= n");
            Ok((split, cost))
        }
        Aggregation::LInf => {
            let mut values: Vec<u64> = table.rows.iter().flatten().copied().collect();
            values.sort_unstable();
            values.dedup();
            // feasibility is monotone in the threshold; the largest value always works
            let (mut lo, mut hi) = (0usize, values.len() - 1);
            while lo < hi {
                let mid = (lo + hi) / 2;
                if balanced_flow(table, Some(values[mid]))?.is_some() {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            let (split, _) = balanced_flow(table, Some(values[lo]))?.expect("threshold verified feasible");
            Ok((split, values[lo]))
        }
    }
}

pub(crate) fn table_score(table: &CostTable) -> Result<u64> {
    optimal_split(table).map(|(_, s)| s)
}

fn solve(e: &Election, w: &Committee, obj: &Objective) -> Result<(Assignment, u64)> {
    w.check_for(e)?;
    quota(e.num_voters(), w.size())?;
    let table = CostTable::build(e, obj, w.members())?;
    let (split, score) = optimal_split(&table)?;
    let groups: Vec<Vec<(CandidateId, u64)>> = split
        .into_iter()
        .map(|parts| parts.into_iter().map(|(j, f)| (w.members()[j], f)).collect())
        .collect();
    Ok((Assignment::from_groups(&table.weights, &groups, w.members()), score))
}

pub fn monroe_optimal_assignment(
    e: &Election,
    w: &Committee,
    alpha: &Dissatisfaction,
    mode: Aggregation,
) -> Result<(Assignment, u64)> {
    e.rankings()?;
    solve(e, w, &Objective::monroe(mode).with_alpha(alpha.clone()))
}

pub fn monroe_score(e: &Election, w: &Committee, alpha: &Dissatisfaction, mode: Aggregation) -> Result<u64> {
    monroe_optimal_assignment(e, w, alpha, mode).map(|(_, s)| s)
}

/// Balanced assignment minimising the number of voters placed with a
/// representative they do not approve.
pub fn approval_monroe_assignment(e: &Election, w: &Committee) -> Result<(Assignment, u64)> {
    e.approvals()?;
    solve(e, w, &Objective::monroe(Aggregation::L1))
}

pub fn approval_monroe_score(e: &Election, w: &Committee) -> Result<u64> {
    approval_monroe_assignment(e, w).map(|(_, s)| s)
}
