//! Single-peaked profiles: recognise an axis, solve Chamberlin-Courant by
//! dynamic programming, and decide Candidate Winner with dummy voters.

use multiwinner::single_peaked::{
    candidate_winner_single_peaked, recognize_single_peaked, solve_cc_single_peaked, Recognition,
};
use multiwinner::{solve_exact, Aggregation, Dissatisfaction, Election, Objective, Ranking, SolveOptions};

fn main() -> multiwinner::Result<()> {
    // peaks along the axis 0-1-2-3-4
    let e = Election::from_rankings(
        5,
        vec![
            Ranking::new(vec![0, 1, 2, 3, 4], 2),
            Ranking::new(vec![2, 3, 1, 4, 0], 1),
            Ranking::new(vec![4, 3, 2, 1, 0], 2),
            Ranking::new(vec![1, 2, 0, 3, 4], 1),
        ],
    )?;
    let Recognition::SinglePeaked(axis) = recognize_single_peaked(&e)? else { unreachable!("profile is single-peaked") };
    println!("axis {:?}", axis.order());

    let alpha = Dissatisfaction::borda(5)?;
    for k in 1..=3 {
        let dp = solve_cc_single_peaked(&e, &axis, k, &alpha)?;
        let exact = solve_exact(&e, k, &Objective::cc(Aggregation::L1), &SolveOptions::default())?;
        println!("k={k}: dp {} {:?}, search {}", dp.opt_score, dp.optimal_committees[0].members(), exact.opt_score);
    }
    let winners: Vec<_> = (0..5).filter(|&c| candidate_winner_single_peaked(&e, &axis, c, 2).unwrap()).collect();
    println!("in some optimal pair: {winners:?}");

    let cycle = Election::from_rankings(3, vec![Ranking::single(vec![0, 1, 2]), Ranking::single(vec![1, 2, 0]), Ranking::single(vec![2, 0, 1])])?;
    if let Recognition::NotSinglePeaked(why) = recognize_single_peaked(&cycle)? {
        println!("cyclic profile refuted: {why:?}");
    }
    Ok(())
}
