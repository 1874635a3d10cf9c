//! The election file format and the JSON result document.

use multiwinner::io::{committees_value, parse_election, serialize_election, ResultDocument};
use multiwinner::{solve_exact, Aggregation, Objective, SolveOptions};

const TEXT: &str = "\
# approval ballots over four candidates
ballots: approval
m: 4
labels: red,green,blue,gold
3, {red,blue}
2, {green}
1, {}
";

fn main() -> multiwinner::Result<()> {
    let e = parse_election(TEXT)?;
    print!("{}", serialize_election(&e)?);

    let obj = Objective::cc(Aggregation::L1);
    let r = solve_exact(&e, 2, &obj, &SolveOptions::default())?;
    let doc = ResultDocument::new("solve")
        .objective(&e, &obj)
        .input("k", 2)
        .output("opt_score", r.opt_score)
        .output("committees", committees_value(&e, &r.optimal_committees));
    println!("{}", doc.to_json());

    match parse_election("ballots: approval\nm: 2\nlabels: a,b\n1, {a,c}\n") {
        Err(err) => println!("rejected: {err}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
