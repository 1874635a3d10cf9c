//! Balanced Monroe assignment: who represents whom, and the member loads.

use multiwinner::{monroe_optimal_assignment, Aggregation, Committee, Dissatisfaction, Election, Ranking};

fn main() -> multiwinner::Result<()> {
    // seven voters and three members: loads are 2, 2 and 3
    let e = Election::from_rankings(
        4,
        vec![
            Ranking::new(vec![0, 1, 2, 3], 4),
            Ranking::new(vec![1, 0, 2, 3], 1),
            Ranking::new(vec![2, 3, 1, 0], 2),
        ],
    )?;
    let w = Committee::new([0, 1, 2]);
    let alpha = Dissatisfaction::borda(4)?;
    for mode in [Aggregation::L1, Aggregation::LInf] {
        let (a, s) = monroe_optimal_assignment(&e, &w, &alpha, mode)?;
        println!("{}: score {s}, representatives {:?}, loads {:?}", mode.name(), a.rep, a.load);
    }

    // a non-Borda penalty vector: only a first choice is free
    let steep = Dissatisfaction::new(vec![0, 5, 6, 7])?;
    let (a, s) = monroe_optimal_assignment(&e, &w, &steep, Aggregation::L1)?;
    println!("steep l1: score {s}, representatives {:?}", a.rep);
    Ok(())
}
