mod common;

use common::*;
use multiwinner::io::{parse_election, serialize_election};
use multiwinner::{
    committee_score, solve_exact, Aggregation, ApprovalBallot, Committee, Election, Objective, Ranking, Rule, SolveOptions,
};
use proptest::prelude::*;

fn ranking_election() -> impl Strategy<Value = Election> {
    (2usize..=6).prop_flat_map(|m| {
        prop::collection::vec((Just((0..m).collect::<Vec<_>>()).prop_shuffle(), 1u64..=3), 1..=5)
            .prop_map(move |rs| Election::from_rankings(m, rs.into_iter().map(|(o, w)| Ranking::new(o, w)).collect()).unwrap())
    })
}

fn approval_election() -> impl Strategy<Value = Election> {
    (2usize..=6).prop_flat_map(|m| {
        prop::collection::vec((prop::collection::btree_set(0..m, 0..=m), 1u64..=3), 1..=5).prop_map(move |bs| {
            Election::from_approvals(m, bs.into_iter().map(|(a, w)| ApprovalBallot::new(a, w)).collect()).unwrap()
        })
    })
}

fn any_election() -> impl Strategy<Value = Election> {
    prop_oneof![ranking_election(), approval_election()]
}

fn objectives() -> Vec<Objective> {
    [Aggregation::L1, Aggregation::LInf].into_iter().flat_map(|m| [Objective::cc(m), Objective::monroe(m)]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn scores_match_the_oracle(e in any_election(), k in 1usize..=3) {
        let rows = unit_costs(&e);
        let k = k.min(e.num_candidates());
        for obj in objectives() {
            let mode = obj.effective_mode(&e);
            for w in subsets(e.num_candidates(), k) {
                let got = committee_score(&e, &Committee::new(w.clone()), &obj).ok();
                prop_assert_eq!(got, naive_score(&rows, &w, obj.rule, mode));
            }
        }
    }

    #[test]
    fn weights_equal_expanded_copies(e in any_election(), k in 1usize..=3) {
        let k = k.min(e.num_candidates());
        let x = e.expanded();
        prop_assert_eq!(x.num_voters(), e.num_voters());
        for obj in objectives() {
            let a = solve_exact(&e, k, &obj, &SolveOptions::all());
            let b = solve_exact(&x, k, &obj, &SolveOptions::all());
            match (a, b) {
                (Ok(a), Ok(b)) => {
                    prop_assert_eq!(a.opt_score, b.opt_score);
                    prop_assert_eq!(a.optimal_committees, b.optimal_committees);
                }
                (Err(_), Err(_)) => {}
                _ => prop_assert!(false, "weighted and expanded disagree on feasibility"),
            }
        }
    }

    #[test]
    fn projection_is_idempotent(e in any_election(), mask in 1u32..64) {
        let keep: Vec<usize> = (0..e.num_candidates()).filter(|c| mask >> c & 1 == 1).collect();
        prop_assume!(!keep.is_empty());
        let p = e.project(&keep).unwrap();
        prop_assert_eq!(p.num_candidates(), keep.len());
        let all: Vec<usize> = (0..p.num_candidates()).collect();
        prop_assert_eq!(p.project(&all).unwrap(), p.clone());
        if let Ok(rs) = p.rankings() {
            // relative order of kept candidates is preserved
            for (r, orig) in rs.iter().zip(e.rankings().unwrap()) {
                let kept: Vec<usize> = orig.order().iter().filter_map(|c| keep.iter().position(|k| k == c)).collect();
                prop_assert_eq!(r.order(), kept.as_slice());
            }
        }
    }

    #[test]
    fn cc_improves_with_supersets(e in any_election(), mask in 1u32..64, extra in 0usize..6) {
        let m = e.num_candidates();
        let w: Vec<usize> = (0..m).filter(|c| mask >> c & 1 == 1).collect();
        prop_assume!(!w.is_empty());
        let extra = extra % m;
        let mut bigger = w.clone();
        bigger.push(extra);
        for mode in [Aggregation::L1, Aggregation::LInf] {
            let obj = Objective::cc(mode);
            let a = committee_score(&e, &Committee::new(w.clone()), &obj).unwrap();
            let b = committee_score(&e, &Committee::new(bigger.clone()), &obj).unwrap();
            prop_assert!(b <= a);
        }
    }

    #[test]
    fn monroe_never_beats_cc(e in any_election(), mask in 1u32..64) {
        let w: Vec<usize> = (0..e.num_candidates()).filter(|c| mask >> c & 1 == 1).collect();
        prop_assume!(!w.is_empty() && w.len() as u64 <= e.num_voters());
        let w = Committee::new(w);
        for mode in [Aggregation::L1, Aggregation::LInf] {
            let cc = committee_score(&e, &w, &Objective::cc(mode)).unwrap();
            let mo = committee_score(&e, &w, &Objective::monroe(mode)).unwrap();
            prop_assert!(mo >= cc);
        }
    }

    #[test]
    fn election_files_round_trip(e in any_election(), labelled in any::<bool>()) {
        let e = if labelled {
            let labels = (0..e.num_candidates()).map(|c| format!("c{c}")).collect();
            Election::with_labels(labels, e.profile().clone()).unwrap()
        } else {
            e
        };
        let text = serialize_election(&e).unwrap();
        let back = parse_election(&text).unwrap();
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(serialize_election(&back).unwrap(), text);
    }

    #[test]
    fn optimum_matches_enumeration(e in any_election(), k in 1usize..=3) {
        let k = k.min(e.num_candidates());
        for obj in objectives() {
            let mode = obj.effective_mode(&e);
            let naive = naive_optima(&e, k, obj.rule, mode);
            match solve_exact(&e, k, &obj, &SolveOptions::all()) {
                Ok(r) => {
                    let (opt, optima) = naive.expect("solver succeeded");
                    prop_assert_eq!(r.opt_score, opt);
                    prop_assert_eq!(r.optimal_committees, optima);
                }
                Err(_) => prop_assert!(obj.rule == Rule::Monroe && naive.is_none()),
            }
        }
    }
}

#[test]
fn single_voter_monroe_with_k_one() {
    let e = Election::from_rankings(3, vec![Ranking::single(vec![2, 0, 1])]).unwrap();
    let r = solve_exact(&e, 1, &Objective::monroe(Aggregation::L1), &SolveOptions::default()).unwrap();
    assert_eq!((r.opt_score, r.optimal_committees), (0, vec![Committee::new([2])]));
}
