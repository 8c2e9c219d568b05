//! Local transformations: moving the attachment point along a pendant path,
//! and sliding two pendant paths onto one end of a degree-2 chain.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{CheckResult, Verdict, VerifyError, Witness};
use crate::families::{attach_path, FamilySpec};
use crate::fib::BigNat;
use crate::graph::{named, Graph, VertexId};
use crate::hosoya::hosoya;

/// Attachment positions `k` listed in strictly increasing order of
/// `Z(P(n, k, G, v))`: with `n = 4m + i` and `l = floor(i / 2)`, the even
/// positions `2, 4, ..., 2m`, then the odd positions `2m - 1 + 2l, ..., 3, 1`.
/// For odd `n` the middle position is not listed; it is covered by the
/// symmetry `k <-> n - k + 1`.
pub fn path_position_order(n: usize) -> Vec<usize> {
    let m = n / 4;
    let l = (n % 4) / 2;
    let mut out: Vec<usize> = (1..=m).map(|t| 2 * t).collect();
    if let Some(top) = (2 * m + 2 * l).checked_sub(1) {
        out.extend((1..=top).rev().step_by(2));
    }
    out
}

/// Checks the attachment-position chain for one `(G, v, n)`: the values
/// strictly increase along [`path_position_order`], and
/// `Z(P(n,k)) = Z(P(n,n-k+1))` for every `k`.
pub fn verify_path_position_chain(g: &Graph, v: VertexId, n: usize) -> Result<CheckResult, VerifyError> {
    if !g.is_connected() || g.vertex_count() == 0 {
        return Err(VerifyError::Precondition(
            "chain: base graph must be connected and nonempty".into(),
        ));
    }
    if v >= g.vertex_count() {
        return Err(VerifyError::Precondition(format!(
            "chain: vertex {v} not in base graph"
        )));
    }
    if n < 2 {
        return Err(VerifyError::Precondition(format!("chain: need n >= 2, got {n}")));
    }
    let order = path_position_order(n);
    let mut result = CheckResult::new(
        "chain",
        format!(
            "Z(P(n,k,G,v)) strictly increasing along k = {:?}, symmetric under k <-> n-k+1",
            order
        ),
    )
    .param("n", n)
    .param("v", v)
    .param("order", g.vertex_count());
    if g.vertex_count() == 1 {
        result.skip("single-vertex base: every attachment is the path P_n");
        return Ok(result);
    }
    let built: Vec<Graph> = (1..=n)
        .map(|k| attach_path(g, v, n, k).expect("parameters checked"))
        .collect();
    let z: Vec<BigNat> = built.iter().map(hosoya).collect();
    let at = |k: usize| &z[k - 1];
    for w in order.windows(2) {
        let (a, b) = (w[0], w[1]);
        if at(a) >= at(b) {
            result.fail(
                Witness::new(format!("Z(P({n},{a})) < Z(P({n},{b})) fails"))
                    .with_graph(&built[b - 1])
                    .with_value(format!("Z(P({n},{a}))"), at(a))
                    .with_value(format!("Z(P({n},{b}))"), at(b)),
            );
        }
    }
    for k in 1..=n {
        let mirror = n - k + 1;
        if at(k) != at(mirror) {
            result.fail(
                Witness::new(format!("Z(P({n},{k})) = Z(P({n},{mirror})) fails"))
                    .with_graph(&built[k - 1])
                    .with_value(format!("Z(P({n},{k}))"), at(k))
                    .with_value(format!("Z(P({n},{mirror}))"), at(mirror)),
            );
        }
    }
    let listed: Vec<String> = order.iter().map(|&k| at(k).to_string()).collect();
    result.value("values along order", listed.join(" < "));
    Ok(result)
}

/// Random connected graph on `n` vertices: a random recursive tree plus
/// each remaining pair with probability `p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edge_list(n, edges)
        .expect("simple by construction")
        .relabel(&perm)
}

/// `count` seeded instances with a base of 2 to 8 vertices and `n <= 7`.
pub(crate) fn verify_chain_sweep(count: usize, seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instances: Vec<(Graph, VertexId, usize)> = (0..count)
        .map(|_| {
            let order = rng.gen_range(2..=8);
            let g = random_connected_graph(&mut rng, order, 0.3);
            let v = rng.gen_range(0..order);
            let n = rng.gen_range(2..=7);
            (g, v, n)
        })
        .collect();
    let outcomes: Vec<CheckResult> = instances
        .par_iter()
        .map(|(g, v, n)| verify_path_position_chain(g, *v, *n).expect("valid instance"))
        .collect();
    let mut result = CheckResult::new(
        "chain",
        "attachment-position chain and symmetry on every seeded instance",
    )
    .param("instances", count)
    .param("seed", seed);
    result.value("instances", count);
    let skipped = outcomes.iter().filter(|r| r.verdict == Verdict::Skipped).count();
    result.value("skipped", skipped);
    if let Some(bad) = outcomes.iter().find(|r| !r.passed()) {
        let mut w = bad.witness.clone().expect("failures carry witnesses");
        w.message = format!(
            "{} (params {})",
            w.message,
            serde_json::Value::Object(bad.params.clone())
        );
        result.fail(w);
    }
    result
}

/// One application of the slide transformation. `interior` lists the
/// degree-2 vertices strictly between `u` and `v`, in order; it may be empty
/// when `uv` is an edge. The pendant path `v1..vk` ends at `u = vk` and
/// `v = v(k+1)` starts the path `v(k+1)..vn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlideInstance {
    pub base: Graph,
    pub u: VertexId,
    pub v: VertexId,
    pub interior: Vec<VertexId>,
    pub n: usize,
    pub k: usize,
}

impl SlideInstance {
    fn validate(&self) -> Result<(), VerifyError> {
        let bad = |msg: String| Err(VerifyError::MalformedTriple(msg));
        let g = &self.base;
        let order = g.vertex_count();
        let chain: Vec<VertexId> = std::iter::once(self.u)
            .chain(self.interior.iter().copied())
            .chain(std::iter::once(self.v))
            .collect();
        if let Some(&x) = chain.iter().find(|&&x| x >= order) {
            return bad(format!("vertex {x} not in base graph"));
        }
        let mut sorted = chain.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != chain.len() {
            return bad("path u..v repeats a vertex".into());
        }
        for w in chain.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return bad(format!("{} and {} are not adjacent", w[0], w[1]));
            }
        }
        if let Some(&x) = self.interior.iter().find(|&&x| g.degree(x) != 2) {
            return bad(format!("interior vertex {x} has degree {}", g.degree(x)));
        }
        if g.edge_count() <= self.interior.len() + 1 {
            return bad("base graph is the path itself".into());
        }
        if !(1 < self.k && self.k + 1 < self.n) {
            return bad(format!("need 1 < k < n-1, got n={}, k={}", self.n, self.k));
        }
        Ok(())
    }

    /// `(G1, G2, G3)`: `G2` drops `v(k-1)vk`, `G3` drops `v(k+1)v(k+2)`, and
    /// both add `v1vn`.
    pub fn triple(&self) -> Result<(Graph, Graph, Graph), VerifyError> {
        self.validate()?;
        let (n, k) = (self.n, self.k);
        let base = self.base.vertex_count();
        let left = attach_path(&self.base, self.u, k, k)?;
        let g1 = attach_path(&left, self.v, n - k, 1)?;
        let label = |i: usize| -> VertexId {
            match i {
                i if i < k => base + i - 1,
                i if i == k => self.u,
                i if i == k + 1 => self.v,
                i => base + i - 3,
            }
        };
        let swap = |a: usize, b: usize| -> Graph {
            g1.delete_edge(label(a), label(b))
                .and_then(|g| g.extended(0, [(label(1), label(n))]))
                .expect("edge swap on a valid instance")
        };
        let g2 = swap(k - 1, k);
        let g3 = swap(k + 1, k + 2);
        Ok((g1, g2, g3))
    }
}

/// Checks `Z(G1) < Z(G2)` or `Z(G1) < Z(G3)`.
pub fn verify_path_slide(inst: &SlideInstance) -> Result<CheckResult, VerifyError> {
    let (g1, g2, g3) = inst.triple()?;
    let mut result = CheckResult::new("slide", "Z(G1) < Z(G2) or Z(G1) < Z(G3)")
        .param("n", inst.n)
        .param("k", inst.k)
        .param("t", inst.interior.len())
        .param("order", inst.base.vertex_count());
    let (z1, z2, z3) = (hosoya(&g1), hosoya(&g2), hosoya(&g3));
    result.value("Z(G1)", &z1);
    result.value("Z(G2)", &z2);
    result.value("Z(G3)", &z3);
    if !(z1 < z2 || z1 < z3) {
        result.fail(
            Witness::new("neither slide increases Z")
                .with_graph(&g1)
                .with_value("Z(G1)", z1)
                .with_value("Z(G2)", z2)
                .with_value("Z(G3)", z3),
        );
    }
    Ok(result)
}

/// Every `(u, interior, v)` in `g` where the interior vertices have degree
/// 2, including `t = 0` (an edge).
fn degree_two_chains(g: &Graph) -> Vec<(VertexId, Vec<VertexId>, VertexId)> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        for &first in g.neighbors(u) {
            let (mut prev, mut cur) = (u, first);
            let mut interior = Vec::new();
            loop {
                if cur == u || interior.contains(&cur) {
                    break;
                }
                out.push((u, interior.clone(), cur));
                if g.degree(cur) != 2 {
                    break;
                }
                let next = *g.neighbors(cur).iter().find(|&&w| w != prev).expect("degree 2");
                interior.push(cur);
                prev = cur;
                cur = next;
            }
        }
    }
    out
}

/// Largest `G1` in the generated corpus.
const CORPUS_MAX_ORDER: usize = 11;

/// Valid instances over cycles `C3..C6`, a few lollipops, and seeded random
/// connected graphs; every degree-2 chain, every `n` keeping `G1` within
/// [`CORPUS_MAX_ORDER`] vertices, every admissible split `k`.
pub fn slide_corpus() -> Vec<SlideInstance> {
    let mut bases: Vec<Graph> = (3..=6).map(named::cycle).collect();
    for (n, k) in [(5, 3), (6, 4), (6, 3), (7, 5)] {
        bases.push(FamilySpec::Lollipop { n, k }.build().expect("valid lollipop"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x511D);
    for order in [4, 5, 5, 6, 6, 7] {
        bases.push(random_connected_graph(&mut rng, order, 0.35));
    }
    let mut out = Vec::new();
    for g in bases {
        for (u, interior, v) in degree_two_chains(&g) {
            if g.edge_count() <= interior.len() + 1 {
                continue;
            }
            for n in 4..=CORPUS_MAX_ORDER + 2 - g.vertex_count() {
                for k in 2..=n - 2 {
                    out.push(SlideInstance {
                        base: g.clone(),
                        u,
                        v,
                        interior: interior.clone(),
                        n,
                        k,
                    });
                }
            }
        }
    }
    out
}

pub(crate) fn verify_slide_corpus() -> CheckResult {
    let corpus = slide_corpus();
    let outcomes: Vec<CheckResult> = corpus
        .par_iter()
        .map(|inst| verify_path_slide(inst).expect("corpus instances are valid"))
        .collect();
    let mut result = CheckResult::new("slide", "Z(G1) < Z(G2) or Z(G1) < Z(G3) on every corpus instance")
        .param("corpus", "generated");
    result.value("instances", corpus.len());
    result.value(
        "t = 0 instances",
        corpus.iter().filter(|i| i.interior.is_empty()).count(),
    );
    if let Some(bad) = outcomes.into_iter().find(|r| !r.passed()) {
        result.fail(bad.witness.expect("failures carry witnesses"));
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hosoya::hosoya_bruteforce;

    #[test]
    fn position_order_examples() {
        assert_eq!(path_position_order(2), vec![1]);
        assert_eq!(path_position_order(4), vec![2, 1]);
        assert_eq!(path_position_order(6), vec![2, 3, 1]);
        assert_eq!(path_position_order(9), vec![2, 4, 3, 1]);
    }

    #[test]
    fn chain_on_triangle() {
        for v in 0..3 {
            let r = verify_path_position_chain(&named::cycle(3), v, 6).unwrap();
            assert_eq!(r.verdict, super::super::Verdict::Pass, "{}", r.render_text());
        }
        let k1 = verify_path_position_chain(&Graph::empty(1), 0, 5).unwrap();
        assert_eq!(k1.verdict, super::super::Verdict::Skipped);
        assert!(verify_path_position_chain(&Graph::empty(2), 0, 5).is_err());
    }

    #[test]
    fn slide_triple_shape() {
        let inst = SlideInstance {
            base: named::cycle(4),
            u: 0,
            v: 1,
            interior: vec![],
            n: 6,
            k: 3,
        };
        let (g1, g2, g3) = inst.triple().unwrap();
        for g in [&g1, &g2, &g3] {
            assert_eq!(g.vertex_count(), 8);
            assert_eq!(g.edge_count(), 8);
            assert_eq!(hosoya(g), hosoya_bruteforce(g).unwrap());
        }
        assert!(g1.degree(0) == 3 && g1.degree(1) == 3);
        assert!(verify_path_slide(&inst).unwrap().passed());
    }

    #[test]
    fn malformed_instances_rejected() {
        let star_ish = FamilySpec::Lollipop { n: 5, k: 3 }.build().unwrap();
        // vertex 0 carries the pendant path, so it has degree 3
        let inst = SlideInstance {
            base: star_ish,
            u: 1,
            v: 3,
            interior: vec![0],
            n: 6,
            k: 3,
        };
        assert!(matches!(verify_path_slide(&inst), Err(VerifyError::MalformedTriple(_))));
        let path = SlideInstance {
            base: named::path(3),
            u: 0,
            v: 2,
            interior: vec![1],
            n: 6,
            k: 3,
        };
        assert!(matches!(verify_path_slide(&path), Err(VerifyError::MalformedTriple(_))));
        let split = SlideInstance {
            base: named::cycle(4),
            u: 0,
            v: 1,
            interior: vec![],
            n: 6,
            k: 1,
        };
        assert!(matches!(
            verify_path_slide(&split),
            Err(VerifyError::MalformedTriple(_))
        ));
    }

    #[test]
    fn corpus_includes_edges_and_long_chains() {
        let corpus = slide_corpus();
        assert!(corpus.iter().any(|i| i.interior.is_empty()));
        assert!(corpus.iter().any(|i| i.interior.len() >= 3));
        assert!(corpus.iter().all(|i| i.triple().is_ok()));
    }
}
