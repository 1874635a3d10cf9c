//! Candidate Winner gadget for `L1` Monroe from Vertex Cover Member. With
//! `n` vertices and `m` edges the question is whether `v_w` belongs to some
//! optimal committee of size `2n + 1`.
//!
//! Labels: `v*` vertices, `s*` the `n + 1` specials, `d*` type-I, `e*`
//! type-II. `D_s` is `S` and the block 5 seeds are `C_v ∪ D_α`, where `D_α`
//! are the tops of block 3. This makes the electorate exactly `(2n+1)N`
//! voters. The `N` copies of a block 5 vote are one weighted ranking, so
//! they share their explicit type-II block.

use super::{GadgetBuilder, GadgetElection, GadgetKind, Question, Role, VertexCoverMemberInstance};
use crate::error::{Error, Result};
use crate::misrep::{Aggregation, Objective};
use crate::model::Committee;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonroeScale {
    /// `|Δ| = n⁴m`, `|Δ′| = 2n⁴m`.
    Original,
    /// Caller-chosen block sizes for desk-scale experiments.
    Test { type1: usize, type2: usize },
}

impl MonroeScale {
    pub fn sizes(self, n: usize, m: usize) -> (usize, usize) {
        match self {
            MonroeScale::Original => (n.pow(4) * m, 2 * n.pow(4) * m),
            MonroeScale::Test { type1, type2 } => (type1, type2),
        }
    }
}

pub fn gen_mcw_from_vcm(g: &VertexCoverMemberInstance, scale: MonroeScale) -> Result<GadgetElection> {
    g.validate()?;
    let (n, m) = (g.vertices, g.edges.len());
    let Some(&[a, b_end]) = g.edges.iter().find(|e| e.contains(&g.w)) else {
        return Err(Error::InvalidInstance("the distinguished vertex has no incident edge".into()));
    };
    let x = if a == g.w { b_end } else { a };
    let (type1, type2) = scale.sizes(n, m);
    if type1 == 0 {
        return Err(Error::InvalidInstance("type-I blocks must be non-empty".into()));
    }
    let big_n = 2 * (m + n + 1) as u64;

    let mut b = GadgetBuilder::new();
    let vertices: Vec<_> = (0..n).map(|u| b.add(Role::Vertex, format!("v{u}"))).collect();
    let specials: Vec<_> = (0..=n).map(|j| b.add(Role::Special, format!("s{j}"))).collect();
    let (mut d_count, mut e_count) = (0, 0);
    let block1: Vec<_> = (0..m).map(|_| b.fresh(Role::TypeII, "e", type2, &mut e_count)).collect();
    let block2 = b.fresh(Role::TypeII, "e", type2, &mut e_count);
    let block3: Vec<_> = (0..n).map(|_| b.fresh(Role::TypeI, "d", type1, &mut d_count)).collect();
    let alpha: Vec<_> = block3.iter().map(|delta| delta[0]).collect();
    let block4: Vec<_> = specials.iter().map(|_| b.fresh(Role::TypeII, "e", type2, &mut e_count)).collect();
    let seeds: Vec<_> = vertices.iter().chain(&alpha).copied().collect();
    let block5: Vec<_> = seeds.iter().map(|_| b.fresh(Role::TypeII, "e", type2, &mut e_count)).collect();

    let others = |skip: &[usize]| -> Vec<usize> { vertices.iter().copied().filter(|c| !skip.contains(c)).collect() };
    b.start_block("block1");
    for (&[u, v], delta) in g.edges.iter().zip(&block1) {
        b.note_explicit(Role::TypeII, delta);
        b.vote(&[&[vertices[u], vertices[v]], delta, &others(&[u, v])], 1);
    }
    b.start_block("block2");
    b.note_explicit(Role::TypeII, &block2);
    b.vote(&[&[vertices[g.w], vertices[x]], &block2, &others(&[g.w, x])], m as u64 + 1);
    b.start_block("block3");
    for delta in &block3 {
        b.note_explicit(Role::TypeI, delta);
        b.vote(&[delta, &[vertices[g.w]], &others(&[g.w])], 1);
    }
    b.start_block("block4");
    for (&d, delta) in specials.iter().zip(&block4) {
        b.note_explicit(Role::TypeII, delta);
        b.vote(&[&[d], delta], 1);
    }
    b.start_block("block5");
    for (&v, delta) in seeds.iter().zip(&block5) {
        b.note_explicit(Role::TypeII, delta);
        b.vote(&[&[v], &specials, delta], big_n);
    }

    let question = Question::CandidateWinner { candidate: vertices[g.w], k: 2 * n + 1, objective: Objective::monroe(Aggregation::L1) };
    b.finish(GadgetKind::McwL1, question)
}

/// `S`, the vertices of `cover`, and the tops of the first `n - |cover|`
/// block 3 votes.
pub fn lemma_committee(ge: &GadgetElection, cover: &[usize]) -> Result<Committee> {
    if ge.kind != GadgetKind::McwL1 {
        return Err(Error::InvalidArgument("lemma committee is defined for the Monroe gadget".into()));
    }
    let vertices = ge.with_role(super::Role::Vertex);
    if cover.iter().any(|&v| v >= vertices.len()) || cover.len() > vertices.len() {
        return Err(Error::InvalidArgument("cover is not a vertex subset".into()));
    }
    let fill = vertices.len() - cover.len();
    let tops = ge.block_rankings("block3").iter().map(|r| r.top()).take(fill);
    Ok(ge.with_role(Role::Special).into_iter().chain(cover.iter().map(|&v| vertices[v])).chain(tops).collect())
}
