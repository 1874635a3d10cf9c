//! Winner Verification: is a committee optimal, and if not, what beats it?

use multiwinner::{winner_verification, Aggregation, Committee, Election, Objective, Ranking, SolveOptions};

fn main() -> multiwinner::Result<()> {
    let e = Election::from_rankings(
        4,
        vec![Ranking::new(vec![0, 1, 2, 3], 2), Ranking::new(vec![3, 2, 1, 0], 2), Ranking::new(vec![1, 0, 3, 2], 1)],
    )?;
    let obj = Objective::cc(Aggregation::L1);
    for members in [[0, 3], [1, 2]] {
        let out = winner_verification(&e, &Committee::new(members), &obj, &SolveOptions::default())?;
        match out.witness {
            None => println!("{members:?} scores {} and is optimal", out.committee_score),
            Some(better) => println!("{members:?} scores {}; {:?} does better", out.committee_score, better.members()),
        }
    }
    Ok(())
}
