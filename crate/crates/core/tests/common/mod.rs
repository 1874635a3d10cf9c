//! Brute-force oracles and random instance generators shared by the
//! integration tests. Nothing here calls the library's scoring code.

#![allow(dead_code)]

use multiwinner::reductions::{HittingSetInstance, VertexCoverMemberInstance};
use multiwinner::{Aggregation, ApprovalBallot, Committee, Election, Profile, Ranking, Rule};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Every `k`-subset of `0..m` in lexicographic order.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..m {
            if m - c < k - cur.len() {
                break;
            }
            cur.push(c);
            rec(c + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Per-unit-voter cost of each candidate: Borda rank, or 0/1 non-approval.
pub fn unit_costs(e: &Election) -> Vec<Vec<u64>> {
    let m = e.num_candidates();
    let mut rows = Vec::new();
    match e.profile() {
        Profile::Rankings(rs) => {
            for r in rs {
                let mut row = vec![0; m];
                for (i, &c) in r.order().iter().enumerate() {
                    row[c] = i as u64;
                }
                for _ in 0..r.weight() {
                    rows.push(row.clone());
                }
            }
        }
        Profile::Approval(bs) => {
            for b in bs {
                let row: Vec<u64> = (0..m).map(|c| u64::from(!b.approves(c))).collect();
                for _ in 0..b.weight() {
                    rows.push(row.clone());
                }
            }
        }
    }
    rows
}

fn combine(mode: Aggregation, acc: u64, x: u64) -> u64 {
    match mode {
        Aggregation::L1 => acc + x,
        Aggregation::LInf => acc.max(x),
    }
}

pub fn naive_cc(rows: &[Vec<u64>], w: &[usize], mode: Aggregation) -> u64 {
    rows.iter().fold(0, |acc, row| combine(mode, acc, w.iter().map(|&c| row[c]).min().unwrap()))
}

/// Exhaustive search over all assignments whose loads are `⌊n/k⌋` or
/// `⌈n/k⌉` with exactly `n mod k` members at the ceiling.
pub fn naive_monroe(rows: &[Vec<u64>], w: &[usize], mode: Aggregation) -> Option<u64> {
    let (n, k) = (rows.len(), w.len());
    if k > n {
        return None;
    }
    let (lo, extra) = (n / k, n % k);
    #[allow(clippy::too_many_arguments)]
    fn rec(
        v: usize,
        rows: &[Vec<u64>],
        w: &[usize],
        load: &mut Vec<usize>,
        lo: usize,
        extra: usize,
        acc: u64,
        mode: Aggregation,
        best: &mut Option<u64>,
    ) {
        if v == rows.len() {
            let at_ceil = load.iter().filter(|&&l| l == lo + 1).count();
            if at_ceil == extra && load.iter().all(|&l| l == lo || l == lo + 1) {
                *best = Some(best.map_or(acc, |b| b.min(acc)));
            }
            return;
        }
        for j in 0..w.len() {
            let cap = if extra > 0 { lo + 1 } else { lo };
            if load[j] == cap {
                continue;
            }
            load[j] += 1;
            rec(v + 1, rows, w, load, lo, extra, combine(mode, acc, rows[v][w[j]]), mode, best);
            load[j] -= 1;
        }
    }
    let mut best = None;
    rec(0, rows, w, &mut vec![0; k], lo, extra, 0, mode, &mut best);
    best
}

pub fn naive_score(rows: &[Vec<u64>], w: &[usize], rule: Rule, mode: Aggregation) -> Option<u64> {
    match rule {
        Rule::ChamberlinCourant => Some(naive_cc(rows, w, mode)),
        Rule::Monroe => naive_monroe(rows, w, mode),
    }
}

/// Optimal score and every optimal committee by enumeration.
pub fn naive_optima(e: &Election, k: usize, rule: Rule, mode: Aggregation) -> Option<(u64, Vec<Committee>)> {
    let rows = unit_costs(e);
    let mut best: Option<(u64, Vec<Committee>)> = None;
    for w in subsets(e.num_candidates(), k) {
        let Some(s) = naive_score(&rows, &w, rule, mode) else { continue };
        match &mut best {
            Some((b, list)) if s == *b => list.push(Committee::new(w)),
            Some((b, _)) if s > *b => {}
            _ => best = Some((s, vec![Committee::new(w)])),
        }
    }
    best
}

pub fn random_ranking(m: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(rng);
    order
}

/// Weighted rankings whose weights sum to exactly `n`.
pub fn random_rankings(m: usize, n: usize, rng: &mut ChaCha8Rng) -> Election {
    let mut left = n;
    let mut rs = Vec::new();
    while left > 0 {
        let w = rng.gen_range(1..=left.min(3));
        rs.push(Ranking::new(random_ranking(m, rng), w as u64));
        left -= w;
    }
    Election::from_rankings(m, rs).unwrap()
}

pub fn random_approvals(m: usize, n: usize, rng: &mut ChaCha8Rng) -> Election {
    let mut left = n;
    let mut bs = Vec::new();
    while left > 0 {
        let w = rng.gen_range(1..=left.min(2));
        let size = rng.gen_range(0..=m.min(3));
        let approved = random_ranking(m, rng).into_iter().take(size);
        bs.push(ApprovalBallot::new(approved, w as u64));
        left -= w;
    }
    Election::from_approvals(m, bs).unwrap()
}

/// A ranking single-peaked on `axis`: start at a random peak and repeatedly
/// extend left or right.
pub fn random_sp_ranking(axis: &[usize], rng: &mut ChaCha8Rng) -> Vec<usize> {
    let m = axis.len();
    let p = rng.gen_range(0..m);
    let (mut l, mut r) = (p, p);
    let mut order = vec![axis[p]];
    while order.len() < m {
        let go_left = if l == 0 {
            false
        } else if r == m - 1 {
            true
        } else {
            rng.gen_bool(0.5)
        };
        if go_left {
            l -= 1;
            order.push(axis[l]);
        } else {
            r += 1;
            order.push(axis[r]);
        }
    }
    order
}

/// Does the ranking decrease away from its peak along `axis`?
pub fn naive_sp(order: &[usize], axis: &[usize]) -> bool {
    let mut pos = vec![0; axis.len()];
    for (i, &c) in axis.iter().enumerate() {
        pos[c] = i;
    }
    let (mut l, mut r) = (pos[order[0]], pos[order[0]]);
    for &c in &order[1..] {
        let p = pos[c];
        if l > 0 && p == l - 1 {
            l -= 1;
        } else if p == r + 1 {
            r += 1;
        } else {
            return false;
        }
    }
    true
}

pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for c in 0..used.len() {
            if !used[c] {
                used[c] = true;
                cur.push(c);
                rec(cur, used, out);
                cur.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

/// Bitmask enumeration: does some set of at most `k` elements hit every set?
pub fn naive_has_hitting_set(h: &HittingSetInstance) -> bool {
    (0u32..1 << h.universe_size).any(|mask| {
        mask.count_ones() as usize <= h.k && h.sets.iter().all(|s| s.iter().any(|&x| mask >> x & 1 == 1))
    })
}

/// Is `w` in some minimum vertex cover?
pub fn naive_vcm(g: &VertexCoverMemberInstance) -> bool {
    let covers = |mask: u32| g.edges.iter().all(|e| mask >> e[0] & 1 == 1 || mask >> e[1] & 1 == 1);
    let all: Vec<u32> = (0u32..1 << g.vertices).filter(|&m| covers(m)).collect();
    let min = all.iter().map(|m| m.count_ones()).min().unwrap();
    all.iter().any(|&m| m.count_ones() == min && m >> g.w & 1 == 1)
}

pub fn random_hitting_set(max_u: usize, max_f: usize, max_k: usize, rng: &mut ChaCha8Rng) -> HittingSetInstance {
    let universe_size = rng.gen_range(3..=max_u);
    let f = rng.gen_range(1..=max_f);
    let sets = (0..f)
        .map(|_| {
            let mut s = random_ranking(universe_size, rng);
            s.truncate(3);
            [s[0], s[1], s[2]]
        })
        .collect();
    HittingSetInstance { universe_size, sets, k: rng.gen_range(1..=max_k) }
}

/// Every labelled simple graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Vec<[usize; 2]>> {
    let pairs: Vec<[usize; 2]> = (0..n).flat_map(|a| (a + 1..n).map(move |b| [a, b])).collect();
    (0u32..1 << pairs.len())
        .map(|mask| pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect())
        .collect()
}
