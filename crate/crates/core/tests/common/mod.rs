//! Shared helpers: a brute-force genus oracle and random pattern generation.
#![allow(dead_code)]

use artin_monodromy::curves::{surface_of, CurvePattern, RibbonStructure};
use rand::seq::SliceRandom;
use rand::Rng;

/// All cyclic orders of `items`, each listed once (first element fixed).
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 2 {
        return vec![items.to_vec()];
    }
    let (first, rest) = items.split_first().unwrap();
    let mut out = Vec::new();
    permute(&mut rest.to_vec(), 0, &mut |p| {
        let mut o = vec![*first];
        o.extend_from_slice(p);
        out.push(o);
    });
    out
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Minimum traced genus over every ribbon structure, by full enumeration.
pub fn naive_min_genus(p: &CurvePattern) -> usize {
    let orders: Vec<Vec<Vec<usize>>> = (0..p.len())
        .map(|x| cyclic_orders(&p.partners(x)))
        .collect();
    let nc = p.crossing_count();
    let mut best = usize::MAX;
    let mut choice = vec![0usize; p.len()];
    loop {
        let visit_order: Vec<Vec<usize>> = choice
            .iter()
            .enumerate()
            .map(|(x, &c)| orders[x][c].clone())
            .collect();
        for mask in 0u32..(1 << nc) {
            let crossing_bits = (0..nc).map(|c| (mask >> c & 1) as u8).collect();
            let s = RibbonStructure {
                visit_order: visit_order.clone(),
                crossing_bits,
            };
            best = best.min(surface_of(p, &s).unwrap().genus());
        }
        // odometer over the per-curve order choices
        let mut i = 0;
        loop {
            if i == p.len() {
                return best;
            }
            choice[i] += 1;
            if choice[i] < orders[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Random pattern without isolated curves, with at most `max_crossings` crossings.
pub fn random_pattern<R: Rng>(
    rng: &mut R,
    max_curves: usize,
    max_crossings: usize,
) -> CurvePattern {
    loop {
        let n = rng.gen_range(2..=max_curves);
        let mut pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        pairs.shuffle(rng);
        let m = rng.gen_range(1..=max_crossings.min(pairs.len()));
        let mut inter = vec![vec![0u8; n]; n];
        for &(i, j) in &pairs[..m] {
            inter[i][j] = 1;
            inter[j][i] = 1;
        }
        let labels = (0..n).map(|i| format!("c{i}")).collect();
        if let Ok(p) = CurvePattern::new(labels, inter) {
            return p;
        }
    }
}

/// Rank over F2 of a 0/1 matrix, by plain Gaussian elimination on rows.
pub fn f2_rank(rows: &[Vec<u8>]) -> usize {
    let mut m: Vec<Vec<u8>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x % 2).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] == 1) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][c] == 1 {
                let pivot = m[rank].clone();
                for (a, b) in m[i].iter_mut().zip(pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Independent F2 genus bound: half the rank of the intersection matrix mod 2.
pub fn independent_f2_bound(p: &CurvePattern) -> usize {
    let rows: Vec<Vec<u8>> = (0..p.len())
        .map(|i| (0..p.len()).map(|j| p.intersection(i, j)).collect())
        .collect();
    f2_rank(&rows).div_ceil(2)
}
