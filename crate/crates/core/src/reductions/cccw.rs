//! Candidate Winner gadget for `LInf` Chamberlin-Courant from Vertex Cover
//! Member. With `n` vertices and `m` edges the question is whether `v_w`
//! belongs to some optimal committee of size `n + 1`.
//!
//! Labels: `v*` vertices, `d*` type-I blocks of size `m + n + 1`, `e*`
//! type-II pairs, `x{i}_{j}` staircase dummies, `f` the shared special.

use super::{GadgetBuilder, GadgetElection, GadgetKind, Question, Role, VertexCoverMemberInstance};
use crate::error::Result;
use crate::misrep::{Aggregation, Objective};

pub fn gen_cccw_from_vcm(g: &VertexCoverMemberInstance) -> Result<GadgetElection> {
    g.validate()?;
    let (n, m) = (g.vertices, g.edges.len());
    let type1 = m + n + 1;
    let mut b = GadgetBuilder::new();
    let vertices: Vec<_> = (0..n).map(|u| b.add(Role::Vertex, format!("v{u}"))).collect();
    let (mut d_count, mut e_count) = (0, 0);

    let edge_blocks: Vec<_> = (0..m).map(|_| b.fresh(Role::TypeI, "d", type1, &mut d_count)).collect();
    let special = b.add(Role::Special, "f".into());
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let pair = b.fresh(Role::TypeII, "e", 2, &mut e_count);
        let stairs: Vec<_> = (1..=i).map(|j| b.add(Role::Staircase, format!("x{i}_{j}"))).collect();
        let tail = b.fresh(Role::TypeI, "d", type1, &mut d_count);
        rows.push((pair, stairs, tail));
    }
    let last = b.fresh(Role::TypeI, "d", type1, &mut d_count);

    b.start_block("block1");
    for (&[u, v], delta) in g.edges.iter().zip(&edge_blocks) {
        let others: Vec<_> = vertices.iter().copied().filter(|&c| c != u && c != v).collect();
        b.note_explicit(Role::TypeI, delta);
        b.vote(&[&[vertices[u], vertices[v]], delta, &others], n as u64 + 2);
    }
    b.start_block("block2");
    for (pair, stairs, tail) in &rows {
        b.note_explicit(Role::TypeII, pair);
        b.note_explicit(Role::TypeI, tail);
        b.vote(&[pair, stairs, &[special], tail, &vertices], 1);
    }
    b.start_block("block3");
    b.note_explicit(Role::TypeI, &last);
    b.vote(&[&[special], &last], n as u64 + 2);

    let question = Question::CandidateWinner { candidate: vertices[g.w], k: n + 1, objective: Objective::cc(Aggregation::LInf) };
    b.finish(GadgetKind::CccwLInf, question)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_layout() {
        let g = VertexCoverMemberInstance { vertices: 2, edges: vec![[0, 1]], w: 0 };
        let ge = gen_cccw_from_vcm(&g).unwrap();
        // 2 vertices, 4 type-I blocks of 4, f, 2 pairs, 1 + 2 staircase
        assert_eq!(ge.election.num_candidates(), 2 + 16 + 1 + 4 + 3);
        assert_eq!(ge.block_voters("block1"), 4);
        assert_eq!(ge.block_voters("block2"), 2);
        assert_eq!(ge.block_voters("block3"), 4);
        let second = &ge.block_rankings("block2")[1];
        let labels: Vec<_> = second.order()[..5].iter().map(|&c| ge.election.label(c)).collect();
        assert_eq!(labels, ["e2", "e3", "x2_1", "x2_2", "f"]);
    }
}
