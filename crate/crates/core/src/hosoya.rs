//! Exact Hosoya index and matching polynomial.
//!
//! Three routes are kept deliberately separate so each can serve as an
//! oracle for the others:
//!
//! * [`hosoya_bruteforce`] enumerates edge subsets directly;
//! * [`hosoya_recursive`] applies the edge-deletion recurrence
//!   `Z(G) = Z(G - e) + Z(G - u - v)` all the way down, with memoization;
//! * [`hosoya_forest`] / [`hosoya_unicyclic`] run a rooted-tree DP, and for a
//!   unicyclic graph delete one cycle edge first so both residuals are forests.
//!
//! [`hosoya`] combines them: components are multiplied, forests and
//! unicyclic components take the linear route, and anything with two or more
//! independent cycles recurses on an edge of a shortest cycle.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::canon::{self, CanonicalCode};
use crate::fib::BigNat;
use crate::graph::{Graph, GraphError, VertexId};

/// Brute force refuses graphs with more edges than this.
pub const MAX_BRUTE_EDGES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("brute force limited to {MAX_BRUTE_EDGES} edges, graph has {0}")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Coefficients `m(G, k)`, the number of `k`-matchings, for
/// `k = 0..=floor(n/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingPolynomial {
    coeffs: Vec<BigNat>,
}

impl MatchingPolynomial {
    fn normalized(mut coeffs: Vec<BigNat>, n: usize) -> Self {
        let len = n / 2 + 1;
        debug_assert!(coeffs[len.min(coeffs.len())..].iter().all(Zero::is_zero));
        coeffs.resize(len, BigUint::ZERO);
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigNat] {
        &self.coeffs
    }

    /// Sum of the coefficients, i.e. the Hosoya index.
    pub fn total(&self) -> BigNat {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for MatchingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Values the matching recurrences can be run over: plain counts, or
/// polynomials in the matching size.
trait Weight: Clone {
    fn none() -> Self;
    fn unit() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Accounts for one more matched edge.
    fn matched(self) -> Self;
}

impl Weight for BigUint {
    fn none() -> Self {
        BigUint::ZERO
    }
    fn unit() -> Self {
        BigUint::from(1u8)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn matched(self) -> Self {
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly(Vec<BigUint>);

impl Weight for Poly {
    fn none() -> Self {
        Poly(vec![BigUint::ZERO])
    }
    fn unit() -> Self {
        Poly(vec![BigUint::from(1u8)])
    }
    fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut out = long.clone();
        for (o, s) in out.iter_mut().zip(short) {
            *o += s;
        }
        Poly(out)
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = vec![BigUint::ZERO; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }
    fn matched(mut self) -> Self {
        self.0.insert(0, BigUint::ZERO);
        self
    }
}

// ---------------------------------------------------------------------------
// brute force

/// Endpoint bitmasks of the edges, with isolated vertices dropped so at most
/// `2 * MAX_BRUTE_EDGES` bits are needed.
fn edge_masks(g: &Graph) -> Result<Vec<u64>, CountError> {
    let m = g.edge_count();
    if m > MAX_BRUTE_EDGES {
        return Err(CountError::TooLarge(m));
    }
    let mut bit = vec![usize::MAX; g.vertex_count()];
    let mut next = 0;
    let mut masks = Vec::with_capacity(m);
    for &(u, v) in g.edges() {
        for w in [u, v] {
            if bit[w] == usize::MAX {
                bit[w] = next;
                next += 1;
            }
        }
        masks.push((1u64 << bit[u]) | (1u64 << bit[v]));
    }
    Ok(masks)
}

/// Tallies every pairwise-disjoint edge subset by its size.
fn brute_counts(g: &Graph) -> Result<Vec<u64>, CountError> {
    let masks = edge_masks(g)?;
    let m = masks.len();
    let mut counts = vec![0u64; m + 1];
    'subset: for subset in 0u32..(1u32 << m) {
        let mut covered = 0u64;
        let mut bits = subset;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if covered & masks[i] != 0 {
                continue 'subset;
            }
            covered |= masks[i];
        }
        counts[subset.count_ones() as usize] += 1;
    }
    Ok(counts)
}

/// Counts matchings by checking all `2^|E|` edge subsets.
pub fn hosoya_bruteforce(g: &Graph) -> Result<BigNat, CountError> {
    Ok(brute_counts(g)?.into_iter().map(BigUint::from).sum())
}

pub fn matching_polynomial_bruteforce(g: &Graph) -> Result<MatchingPolynomial, CountError> {
    let coeffs = brute_counts(g)?.into_iter().map(BigUint::from).collect();
    Ok(MatchingPolynomial::normalized(coeffs, g.vertex_count()))
}

// ---------------------------------------------------------------------------
// forest DP and unicyclic fast path

fn forest_weight<W: Weight>(g: &Graph) -> Result<W, CountError> {
    if !g.is_acyclic() {
        return Err(GraphError::NotAForest.into());
    }
    let n = g.vertex_count();
    let mut visited = vec![false; n];
    let mut parent = vec![usize::MAX; n];
    // per vertex: (matchings of its subtree leaving it exposed, covering it)
    let mut state: Vec<Option<(W, W)>> = vec![None; n];
    let mut total = W::unit();
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if visited[root] {
            continue;
        }
        order.clear();
        visited[root] = true;
        order.push(root);
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            for &w in g.neighbors(u) {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = u;
                    order.push(w);
                }
            }
            i += 1;
        }
        for &u in order.iter().rev() {
            let mut exposed = W::unit();
            let mut covered = W::none();
            for &c in g.neighbors(u) {
                if parent[c] != u {
                    continue;
                }
                let (ca, cb) = state[c].take().expect("children finish before parents");
                let whole = ca.add(&cb);
                covered = covered.mul(&whole).add(&exposed.mul(&ca).matched());
                exposed = exposed.mul(&whole);
            }
            state[u] = Some((exposed, covered));
        }
        let (a, b) = state[root].take().expect("root finished");
        total = total.mul(&a.add(&b));
    }
    Ok(total)
}

/// Some edge on the cycle of a graph whose 2-core is a single cycle.
fn core_edge(g: &Graph) -> Option<(VertexId, VertexId)> {
    let core = g.two_core();
    let u = (0..g.vertex_count()).find(|&v| core[v])?;
    let v = g.neighbors(u).iter().copied().find(|&w| core[w])?;
    Some((u, v))
}

fn unicyclic_weight<W: Weight>(g: &Graph) -> Result<W, CountError> {
    if !g.is_unicyclic() {
        return Err(GraphError::NotUnicyclic.into());
    }
    let (u, v) = core_edge(g).ok_or(GraphError::NotUnicyclic)?;
    let without_edge = g.delete_edge(u, v)?;
    let without_ends = g.delete_vertices(&[u, v])?;
    Ok(forest_weight::<W>(&without_edge)?.add(&forest_weight::<W>(&without_ends)?.matched()))
}

/// Hosoya index of a forest by rooted-tree DP, linear in the graph size.
pub fn hosoya_forest(g: &Graph) -> Result<BigNat, CountError> {
    forest_weight(g)
}

/// Hosoya index of a connected unicyclic graph: one deletion step on a cycle
/// edge, then the forest DP on both residuals.
pub fn hosoya_unicyclic(g: &Graph) -> Result<BigNat, CountError> {
    unicyclic_weight(g)
}

/// Linear-time route for graphs whose every component is a tree or
/// unicyclic.
pub fn hosoya_fast(g: &Graph) -> Result<BigNat, CountError> {
    let mut total = BigUint::from(1u8);
    for comp in g.connected_components() {
        let z = if comp.is_acyclic() {
            forest_weight::<BigUint>(&comp)?
        } else {
            unicyclic_weight::<BigUint>(&comp)?
        };
        total *= z;
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// deletion recursion

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum MemoKey {
    Canonical(CanonicalCode),
    Labeled(Vec<u32>),
}

/// Exact key for a connected graph: a canonical code where one exists,
/// otherwise the edge list after relabeling vertices by (degree, index).
/// The relabeled graph is isomorphic to the input, so equal keys always
/// mean equal counts.
fn memo_key(g: &Graph) -> MemoKey {
    if g.is_tree() {
        return MemoKey::Canonical(canon::free_tree_code(g).expect("checked tree"));
    }
    if g.is_unicyclic() {
        return MemoKey::Canonical(canon::canonical_code(g).expect("checked unicyclic"));
    }
    let n = g.vertex_count();
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let h = g.relabel(&perm);
    let mut key = Vec::with_capacity(2 * h.edge_count() + 1);
    key.push(n as u32);
    for &(u, v) in h.edges() {
        key.push(u as u32);
        key.push(v as u32);
    }
    MemoKey::Labeled(key)
}

/// Which edge each recursion step deletes.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Pure deletion recursion all the way to edgeless graphs.
    Recursive,
    /// Forest / unicyclic components short-circuit to the linear route.
    Auto,
}

struct Recursion<W> {
    mode: Mode,
    memo: HashMap<MemoKey, W>,
}

impl<W: Weight> Recursion<W> {
    fn new(mode: Mode) -> Self {
        Self {
            mode,
            memo: HashMap::new(),
        }
    }

    fn graph(&mut self, g: &Graph) -> W {
        let mut total = W::unit();
        for comp in g.connected_components() {
            let z = self.component(&comp);
            total = total.mul(&z);
        }
        total
    }

    fn component(&mut self, g: &Graph) -> W {
        if g.edge_count() == 0 {
            return W::unit();
        }
        if self.mode == Mode::Auto {
            if g.is_acyclic() {
                return forest_weight(g).expect("acyclic");
            }
            if g.is_unicyclic() {
                return unicyclic_weight(g).expect("unicyclic");
            }
        }
        let key = memo_key(g);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let (u, v) = match g.shortest_cycle_edge() {
            Some((_, e)) => e,
            // A tree: deleting a pendant edge keeps both residuals small.
            None => {
                let leaf = (0..g.vertex_count())
                    .find(|&w| g.degree(w) == 1)
                    .expect("a tree with an edge has a leaf");
                (leaf, g.neighbors(leaf)[0])
            }
        };
        let without_edge = g.delete_edge(u, v).expect("edge exists");
        let without_ends = g.delete_vertices(&[u, v]).expect("vertices exist");
        let z = self.graph(&without_edge).add(&self.graph(&without_ends).matched());
        self.memo.insert(key, z.clone());
        z
    }
}

/// Pure edge-deletion recursion, memoized per call.
pub fn hosoya_recursive(g: &Graph) -> BigNat {
    Recursion::<BigUint>::new(Mode::Recursive).graph(g)
}

/// Exact Hosoya index of any graph. Each call owns its memo table, so the
/// function is pure and safe to call from many threads.
pub fn hosoya(g: &Graph) -> BigNat {
    Recursion::<BigUint>::new(Mode::Auto).graph(g)
}

pub fn matching_polynomial(g: &Graph) -> MatchingPolynomial {
    let Poly(coeffs) = Recursion::<Poly>::new(Mode::Auto).graph(g);
    MatchingPolynomial::normalized(coeffs, g.vertex_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fib::fib_nat;
    use crate::graph::named::*;

    fn z(x: u64) -> BigNat {
        BigUint::from(x)
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(hosoya_bruteforce(&cycle(3)).unwrap(), z(4));
        assert_eq!(hosoya_bruteforce(&Graph::empty(1)).unwrap(), z(1));
        assert_eq!(hosoya_bruteforce(&Graph::empty(0)).unwrap(), z(1));
        assert_eq!(hosoya_bruteforce(&cycle(5)).unwrap(), z(11));
        assert_eq!(hosoya_bruteforce(&cycle(25)), Err(CountError::TooLarge(25)));
    }

    #[test]
    fn polynomial_examples() {
        let c4 = matching_polynomial(&cycle(4));
        assert_eq!(c4.coeffs(), &[z(1), z(4), z(2)]);
        assert_eq!(c4.to_string(), "1,4,2");
        assert_eq!(matching_polynomial(&path(3)).coeffs(), &[z(1), z(2)]);
        let s5 = matching_polynomial(&star(5));
        assert_eq!(s5.coeffs(), &[z(1), z(4), z(0)]);
        assert_eq!(s5.total(), z(5));
        assert_eq!(matching_polynomial(&Graph::empty(0)).coeffs(), &[z(1)]);
        for g in [cycle(6), complete(5), path(7), star(4)] {
            assert_eq!(matching_polynomial(&g), matching_polynomial_bruteforce(&g).unwrap());
        }
    }

    #[test]
    fn hosoya_examples() {
        assert_eq!(hosoya(&path(5)), z(8));
        assert_eq!(hosoya(&cycle(6)), z(18));
        assert_eq!(hosoya(&cycle(3).disjoint_union(&path(2))), z(8));
        assert_eq!(hosoya(&Graph::empty(0)), z(1));
        assert_eq!(hosoya(&Graph::empty(4)), z(1));
        // K4 has 1 + 6 + 3 matchings
        assert_eq!(hosoya(&complete(4)), z(10));
        assert_eq!(hosoya_recursive(&complete(6)), z(76));
        assert_eq!(hosoya(&complete(6)), z(76));
    }

    #[test]
    fn forest_examples() {
        assert_eq!(hosoya_forest(&path(7)).unwrap(), z(21));
        assert_eq!(hosoya_forest(&star(6)).unwrap(), z(6));
        // broom: S4 centre 0 with leaves 1..3, path 4-5-6 hanging off 0
        let broom = Graph::from_edge_list(7, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
        assert_eq!(hosoya_forest(&broom).unwrap(), hosoya_bruteforce(&broom).unwrap());
        assert_eq!(hosoya_forest(&cycle(4)), Err(CountError::Graph(GraphError::NotAForest)));
    }

    #[test]
    fn unicyclic_examples() {
        assert_eq!(hosoya_unicyclic(&cycle(9)).unwrap(), z(76));
        let l74 = cycle(4).extended(3, [(0, 4), (4, 5), (5, 6)]).unwrap();
        assert_eq!(hosoya_unicyclic(&l74).unwrap(), z(27));
        let l12_5 = cycle(5)
            .extended(7, [(0, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 11)])
            .unwrap();
        assert_eq!(hosoya_unicyclic(&l12_5).unwrap(), z(296));
        assert_eq!(hosoya_bruteforce(&l12_5).unwrap(), z(296));
        assert_eq!(
            hosoya_unicyclic(&path(4)),
            Err(CountError::Graph(GraphError::NotUnicyclic))
        );
        assert!(hosoya_fast(&complete(4)).is_err());
    }

    #[test]
    fn closed_forms_for_paths_cycles_stars() {
        for n in 1..=200usize {
            assert_eq!(hosoya(&path(n)), fib_nat(n + 1), "P_{n}");
            assert_eq!(hosoya(&star(n)), z(n as u64), "S_{n}");
            if n >= 3 {
                assert_eq!(hosoya(&cycle(n)), fib_nat(n - 1) + fib_nat(n + 1), "C_{n}");
            }
        }
        for n in 1..=40usize {
            assert_eq!(hosoya_recursive(&path(n)), fib_nat(n + 1));
        }
    }
}
