//! Exhaustive solvers for the source problems. Exponential; desk scale only.

use super::{HittingSetInstance, VertexCoverMemberInstance};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSetAnswer {
    pub min_size: usize,
    pub exists_leq_k: bool,
    /// Lexicographically least minimum hitting set.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcmAnswer {
    pub min_vc: usize,
    pub w_in_some_min_vc: bool,
    /// Lexicographically least minimum cover.
    pub min_cover: Vec<usize>,
    /// Lexicographically least minimum cover containing `w`, if any.
    pub cover_with_w: Option<Vec<usize>>,
}

/// Calls `f` on every `size`-subset of `0..n` in lexicographic order until
/// it returns `true`.
fn any_subset(n: usize, size: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if size > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if f(&idx) {
            return true;
        }
        let Some(i) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn brute_hitting_set(h: &HittingSetInstance) -> HittingSetAnswer {
    let hits = |s: &[usize]| h.sets.iter().all(|set| set.iter().any(|x| s.contains(x)));
    for size in 0..=h.universe_size {
        let mut witness = None;
        any_subset(h.universe_size, size, |s| {
            let ok = hits(s);
            if ok {
                witness = Some(s.to_vec());
            }
            ok
        });
        if let Some(witness) = witness {
            return HittingSetAnswer { min_size: size, exists_leq_k: size <= h.k, witness };
        }
    }
    unreachable!("the whole universe hits every valid set")
}

pub fn brute_vcm(g: &VertexCoverMemberInstance) -> VcmAnswer {
    let covers = |s: &[usize]| g.edges.iter().all(|e| s.contains(&e[0]) || s.contains(&e[1]));
    for size in 0..=g.vertices {
        let mut first = None;
        let mut with_w = None;
        any_subset(g.vertices, size, |s| {
            if covers(s) {
                first.get_or_insert_with(|| s.to_vec());
                if s.contains(&g.w) {
                    with_w = Some(s.to_vec());
                    return true;
                }
            }
            false
        });
        if let Some(min_cover) = first {
            return VcmAnswer { min_vc: size, w_in_some_min_vc: with_w.is_some(), min_cover, cover_with_w: with_w };
        }
    }
    unreachable!("all vertices form a cover")
}
