//! Candidate Winner and the target-score query, including recovering the
//! optimum by bisection over the query.

use multiwinner::decision::optimum_by_bisection;
use multiwinner::{candidate_winner, target_score_query, Aggregation, Election, Objective, Ranking, SolveOptions};

fn main() -> multiwinner::Result<()> {
    let e = Election::from_rankings(
        5,
        vec![
            Ranking::new(vec![0, 1, 2, 3, 4], 3),
            Ranking::new(vec![4, 3, 2, 1, 0], 3),
            Ranking::new(vec![2, 1, 3, 0, 4], 1),
        ],
    )?;
    let obj = Objective::monroe(Aggregation::L1);
    let opts = SolveOptions::default();
    for c in 0..5 {
        let out = candidate_winner(&e, c, 2, &obj, &opts)?;
        println!("candidate {c}: opt {} / forced {} -> {}", out.opt, out.opt_c, out.member_of_some_optimum);
    }
    for r in [0, 3, 6] {
        println!("some committee scores <= {r}: {}", target_score_query(&e, 2, r, &obj, None, &opts)?);
    }
    let worst = e.num_voters() * (e.num_candidates() as u64 - 1);
    println!("optimum by bisection: {}", optimum_by_bisection(&e, 2, &obj, None, worst, &opts)?);
    Ok(())
}
