//! Scores one committee under every rule and aggregation.

use multiwinner::{committee_score, Aggregation, Committee, Election, Objective, Ranking};

fn main() -> multiwinner::Result<()> {
    let labels = ["ann", "bob", "cat", "dan"].map(String::from).to_vec();
    let rankings = vec![
        Ranking::new(vec![0, 1, 2, 3], 3),
        Ranking::new(vec![3, 2, 1, 0], 2),
        Ranking::new(vec![1, 3, 0, 2], 1),
    ];
    let e = Election::with_labels(labels, multiwinner::Profile::Rankings(rankings))?;
    let w = Committee::new([0, 3]);

    for mode in [Aggregation::L1, Aggregation::LInf] {
        for obj in [Objective::cc(mode), Objective::monroe(mode)] {
            let s = committee_score(&e, &w, &obj)?;
            println!("{:>6} {:>4}  {{ann, dan}} -> {s}", obj.rule.name(), mode.name());
        }
    }
    Ok(())
}
