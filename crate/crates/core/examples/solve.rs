//! Exact winner determination, with the greedy baseline for comparison.

use multiwinner::{solve_exact, solve_greedy_cc, Aggregation, Dissatisfaction, Election, Objective, Ranking, SolveOptions};

fn main() -> multiwinner::Result<()> {
    // five candidates, seven voters, rotated preferences
    let rankings = (0..7).map(|i| Ranking::single((0..5).map(|c| (c * 2 + i) % 5).collect())).collect();
    let e = Election::from_rankings(5, rankings)?;

    for obj in [Objective::cc(Aggregation::L1), Objective::monroe(Aggregation::L1), Objective::cc(Aggregation::LInf)] {
        let r = solve_exact(&e, 2, &obj, &SolveOptions::all())?;
        let all: Vec<_> = r.optimal_committees.iter().map(|c| format!("{:?}", c.members())).collect();
        println!("{} {}: opt {} via {} ({} nodes)", obj.rule.name(), obj.mode.name(), r.opt_score, all.join(" "), r.explored);
    }

    let (w, s) = solve_greedy_cc(&e, 2, &Dissatisfaction::borda(5)?, Aggregation::L1)?;
    println!("greedy cc l1: {:?} scores {s}", w.members());

    // a tiny budget aborts the search instead of running unbounded
    match solve_exact(&e, 2, &Objective::cc(Aggregation::L1), &SolveOptions::with_budget(1)) {
        Err(multiwinner::Error::BudgetExhausted { explored }) => println!("budget 1: stopped after {explored} nodes"),
        other => println!("budget 1: {other:?}"),
    }
    Ok(())
}
