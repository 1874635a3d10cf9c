//! Hardness gadgets: build each one from a small source instance and check
//! it against a brute-force answer on the source.

use multiwinner::reductions::{
    brute_hitting_set, brute_vcm, gen_cccw_from_vcm, gen_ccwv_from_hitting_set, gen_ccwv_linf_from_hitting_set,
    gen_mcw_from_vcm, validate_reduction, HittingSetInstance, MonroeScale, Source, VertexCoverMemberInstance,
};
use multiwinner::SolveOptions;

fn main() -> multiwinner::Result<()> {
    let h = HittingSetInstance { universe_size: 5, sets: vec![[0, 1, 2], [2, 3, 4], [0, 3, 4]], k: 2 };
    println!("hitting set: {:?}", brute_hitting_set(&h));
    let g = VertexCoverMemberInstance { vertices: 4, edges: vec![[0, 1], [1, 2], [2, 3]], w: 0 };
    println!("vertex cover: {:?}", brute_vcm(&g));

    let opts = SolveOptions::default();
    let gadgets = [
        (gen_ccwv_from_hitting_set(&h)?, Source::HittingSet(&h)),
        (gen_ccwv_linf_from_hitting_set(&h)?, Source::HittingSet(&h)),
        (gen_cccw_from_vcm(&g)?, Source::VertexCover(&g)),
        (gen_mcw_from_vcm(&g, MonroeScale::Test { type1: 2, type2: 4 })?, Source::VertexCover(&g)),
    ];
    for (ge, src) in gadgets {
        let report = validate_reduction(&ge, src, &opts)?;
        println!(
            "{}: {} candidates, {} voters, structure ok {}, {:?}",
            ge.kind.name(),
            ge.election.num_candidates(),
            ge.election.num_voters(),
            report.structural_ok(),
            report.equivalence
        );
        for c in report.checks.iter().filter(|c| !c.passed) {
            println!("  failed {}: {}", c.name, c.detail);
        }
    }
    Ok(())
}
