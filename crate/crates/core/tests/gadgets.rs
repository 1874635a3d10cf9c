mod common;

use common::*;
use multiwinner::io::{parse_election, serialize_election};
use multiwinner::reductions::{
    answer_gadget, brute_hitting_set, brute_vcm, gen_cccw_from_vcm, gen_ccwv_from_hitting_set, gen_ccwv_linf_from_hitting_set,
    gen_mcw_from_vcm, lemma_committee, GadgetElection, MonroeScale, Role, VertexCoverMemberInstance,
};
use multiwinner::{committee_score, Aggregation, Objective, SolveOptions};

fn corpus() -> Vec<GadgetElection> {
    let mut rng = rng(9);
    let mut out = Vec::new();
    for _ in 0..6 {
        let h = random_hitting_set(6, 3, 2, &mut rng);
        out.push(gen_ccwv_from_hitting_set(&h).unwrap());
        out.push(gen_ccwv_linf_from_hitting_set(&h).unwrap());
    }
    for (n, edges, w) in [(2, vec![[0, 1]], 0), (3, vec![[0, 1], [1, 2]], 1), (4, vec![[0, 1], [1, 2], [2, 3], [3, 0]], 2)] {
        let g = VertexCoverMemberInstance { vertices: n, edges, w };
        out.push(gen_cccw_from_vcm(&g).unwrap());
        out.push(gen_mcw_from_vcm(&g, MonroeScale::Test { type1: 2, type2: 3 }).unwrap());
        out.push(gen_mcw_from_vcm(&g, MonroeScale::Original).unwrap());
    }
    out
}

#[test]
fn gadget_elections_round_trip() {
    for ge in corpus() {
        let text = serialize_election(&ge.election).unwrap();
        assert_eq!(parse_election(&text).unwrap(), ge.election, "{}", ge.kind.name());
    }
}

#[test]
fn labels_carry_role_prefixes() {
    for ge in corpus() {
        for (c, role) in ge.roles.iter().enumerate() {
            let label = ge.election.label(c);
            let prefix = match role {
                Role::Element => "c",
                Role::Dummy | Role::TypeI => "d",
                Role::Filler => "z",
                Role::Vertex => "v",
                Role::TypeII => "e",
                Role::Special => if label == "f" { "f" } else { "s" },
                Role::Staircase => "x",
            };
            assert!(label.starts_with(prefix), "{} {label} {role}", ge.kind.name());
        }
    }
}

#[test]
fn source_oracles_agree_with_bitmask_search() {
    let mut rng = rng(10);
    for _ in 0..200 {
        let h = random_hitting_set(7, 5, 3, &mut rng);
        assert_eq!(brute_hitting_set(&h).exists_leq_k, naive_has_hitting_set(&h));
    }
    for n in 1..=4 {
        for edges in all_graphs(n) {
            for w in 0..n {
                let g = VertexCoverMemberInstance { vertices: n, edges: edges.clone(), w };
                assert_eq!(brute_vcm(&g).w_in_some_min_vc, naive_vcm(&g));
            }
        }
    }
}

#[test]
fn test_scale_monroe_gadget_is_solvable() {
    // the answer is reported only; small pools break the equivalence
    let g = VertexCoverMemberInstance { vertices: 2, edges: vec![[0, 1]], w: 0 };
    let ge = gen_mcw_from_vcm(&g, MonroeScale::Test { type1: 2, type2: 2 }).unwrap();
    assert!(answer_gadget(&ge, &SolveOptions::default()).is_ok());
    assert_eq!(ge.election.num_voters(), 5 * 8);
}

#[test]
fn lemma_committee_beats_committees_with_type_two_dummies() {
    let g = VertexCoverMemberInstance { vertices: 3, edges: vec![[0, 1], [1, 2]], w: 1 };
    let ge = gen_mcw_from_vcm(&g, MonroeScale::Original).unwrap();
    let obj = Objective::monroe(Aggregation::L1);
    let good = lemma_committee(&ge, &[1]).unwrap();
    let s = committee_score(&ge.election, &good, &obj).unwrap();
    let e0 = ge.with_role(Role::TypeII)[0];
    let mut members: Vec<_> = good.members().to_vec();
    members.pop();
    members.push(e0);
    let bad = committee_score(&ge.election, &multiwinner::Committee::new(members), &obj).unwrap();
    assert!(s < bad, "{s} vs {bad}");
}
