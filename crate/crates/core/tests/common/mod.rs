#![allow(dead_code)]

use lapspec::rational::to_f64;
use lapspec::{DenseGraph, GraphExpr, Spectrum};
use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random expression of exactly `order` vertices, nested at most `depth` deep.
pub fn random_expr_of_order<R: Rng>(rng: &mut R, order: u64, depth: usize) -> GraphExpr {
    if depth == 0 {
        return GraphExpr::complete(order);
    }
    let divisors: Vec<u64> = (2..=order).filter(|d| order.is_multiple_of(*d)).collect();
    loop {
        match rng.gen_range(0..5) {
            0 => return GraphExpr::complete(order),
            1 if order >= 2 => {
                let k = rng.gen_range(1..order);
                return GraphExpr::union(
                    random_expr_of_order(rng, k, depth - 1),
                    random_expr_of_order(rng, order - k, depth - 1),
                );
            }
            2 if order >= 2 => {
                let k = rng.gen_range(1..order);
                return GraphExpr::join(
                    random_expr_of_order(rng, k, depth - 1),
                    random_expr_of_order(rng, order - k, depth - 1),
                );
            }
            3 if !divisors.is_empty() => {
                let m = divisors[rng.gen_range(0..divisors.len())];
                return GraphExpr::repeat(m, random_expr_of_order(rng, order / m, depth - 1));
            }
            4 => return GraphExpr::complement(random_expr_of_order(rng, order, depth - 1)),
            _ => {}
        }
    }
}

pub fn random_expr<R: Rng>(rng: &mut R, max_order: u64, max_depth: usize) -> GraphExpr {
    let order = rng.gen_range(1..=max_order);
    let depth = rng.gen_range(0..=max_depth);
    random_expr_of_order(rng, order, depth)
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> DenseGraph {
    let mut g = DenseGraph::empty(n);
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn relabel(g: &DenseGraph, perm: &[usize]) -> DenseGraph {
    let mut h = DenseGraph::empty(g.order());
    for (u, v) in g.edges() {
        h.add_edge(perm[u], perm[v]);
    }
    h
}

/// Eigenvalues with multiplicity, ascending.
pub fn expand(s: &Spectrum) -> Vec<f64> {
    let mut out = Vec::new();
    for (mu, k) in s.entries() {
        for _ in 0..*k {
            out.push(to_f64(mu));
        }
    }
    out
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn nalgebra_laplacian_eigenvalues(g: &DenseGraph) -> Vec<f64> {
    let n = g.order();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for u in 0..n {
        m[(u, u)] = g.degree(u) as f64;
    }
    for (u, v) in g.edges() {
        m[(u, v)] = -1.0;
        m[(v, u)] = -1.0;
    }
    let mut eig: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    eig.sort_by(f64::total_cmp);
    eig
}

/// Straight bit-string graph6 encoder used to cross-check the codec.
pub fn reference_graph6(g: &DenseGraph) -> String {
    let n = g.order();
    assert!((1..=62).contains(&n));
    let mut bits = String::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push('0');
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.as_bytes().chunks(6) {
        let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        out.push((v + 63) as char);
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn edge_mask(g: &DenseGraph) -> u64 {
    let mut mask = 0u64;
    let mut bit = 0;
    for j in 1..g.order() {
        for i in 0..j {
            if g.has_edge(i, j) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

/// One representative per isomorphism class on `n` vertices, by brute force
/// over every labelled graph and every relabelling.
pub fn isomorphism_classes(n: usize) -> Vec<DenseGraph> {
    assert!(n <= 5);
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut seen = std::collections::BTreeSet::new();
    let mut reps = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        let g = DenseGraph::from_edges(n, &edges);
        let canon = perms.iter().map(|p| edge_mask(&relabel(&g, p))).min().unwrap();
        if seen.insert(canon) {
            reps.push(g);
        }
    }
    reps
}
