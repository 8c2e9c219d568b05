//! Independent oracles for the integration tests. Nothing here calls the
//! counting, canonical-form, or Fibonacci code under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;

use hosoya_core::Graph;

/// Matchings counted by size, by direct enumeration of edge subsets.
pub fn matching_counts(g: &Graph) -> Vec<u64> {
    let edges = g.edges();
    assert!(edges.len() <= 20, "oracle limited to 20 edges");
    let mut counts = vec![0u64; g.vertex_count() / 2 + 1];
    for mask in 0u32..(1 << edges.len()) {
        let mut covered = 0u64;
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let bits = (1u64 << u) | (1u64 << v);
                if covered & bits != 0 {
                    ok = false;
                    break;
                }
                covered |= bits;
            }
        }
        if ok {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts
}

pub fn matchings(g: &Graph) -> BigUint {
    BigUint::from(matching_counts(g).iter().sum::<u64>())
}

/// `F_n` by plain iteration.
pub fn fib_iter(n: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::from(0u32), BigUint::from(1u32));
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// A graph on `n` vertices with `m` distinct random edges, randomly labeled.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::from_edge_list(n, pairs).unwrap()
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn image(g: &Graph, perm: &[usize]) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    e.sort_unstable();
    e
}

/// Lexicographically least relabeled edge list: a complete isomorphism
/// invariant, by brute force over `perms`.
pub fn brute_canon(g: &Graph, perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms.iter().map(|p| image(g, p)).min().unwrap()
}

pub fn automorphisms(g: &Graph, perms: &[Vec<usize>]) -> usize {
    let own = image(g, &(0..g.vertex_count()).collect::<Vec<_>>());
    perms.iter().filter(|p| image(g, p) == own).count()
}

/// Connected graphs on `0..n` with exactly `n` edges, i.e. labeled
/// unicyclic graphs.
pub fn labeled_unicyclic_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut count = 0;
    let mut chosen = Vec::with_capacity(n);
    fn go(pairs: &[(usize, usize)], start: usize, n: usize, chosen: &mut Vec<(usize, usize)>, count: &mut usize) {
        if chosen.len() == n {
            if connected(n, chosen) {
                *count += 1;
            }
            return;
        }
        for i in start..pairs.len() {
            if pairs.len() - i < n - chosen.len() {
                break;
            }
            chosen.push(pairs[i]);
            go(pairs, i + 1, n, chosen, count);
            chosen.pop();
        }
    }
    go(&pairs, 0, n, &mut chosen, &mut count);
    count
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut parts = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            parts -= 1;
        }
    }
    parts == 1
}

/// Distinct brute-force canonical forms among `graphs`.
pub fn distinct_forms(graphs: &[&Graph], perms: &[Vec<usize>]) -> usize {
    graphs
        .iter()
        .map(|g| brute_canon(g, perms))
        .collect::<BTreeSet<_>>()
        .len()
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
