//! Isomorphism-free generation of unicyclic graphs and trees.
//!
//! A unicyclic graph of order `n` and girth `k` is a cycle `C_k` whose
//! vertices each root a tree, the tree sizes summing to `n`. Rooted trees of
//! each size are built by adding a leaf to every vertex of every smaller tree
//! and keeping one tree per AHU code. Every cyclic sequence of rooted trees
//! is then assembled, and sequences are deduplicated by canonical code.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{self, CanonicalCode};
use crate::graph::Graph;

/// Largest order the unicyclic enumerator accepts.
pub const MAX_ORDER: usize = 14;

/// Largest order [`enumerate_trees`] accepts.
pub const MAX_TREE_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {n} outside supported range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },
    #[error("girth {girth} impossible for order {n}")]
    GirthOutOfRange { n: usize, girth: usize },
}

/// A rooted tree with vertex 0 as root and `parent[v] < v` for `v > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<usize>,
    code: String,
}

impl RootedTree {
    fn leaf() -> Self {
        Self {
            parent: vec![0],
            code: "()".to_owned(),
        }
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    /// AHU code with respect to the root.
    pub fn code(&self) -> &str {
        &self.code
    }

    fn with_leaf_at(&self, v: usize) -> RootedTree {
        let mut parent = self.parent.clone();
        parent.push(v);
        let code = ahu_of_parents(&parent);
        RootedTree { parent, code }
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edge_list(self.size(), (1..self.size()).map(|v| (self.parent[v], v)))
            .expect("parent array describes a tree")
    }
}

fn ahu_of_parents(parent: &[usize]) -> String {
    let n = parent.len();
    let mut kids: Vec<Vec<String>> = vec![Vec::new(); n];
    for v in (0..n).rev() {
        let mut mine = std::mem::take(&mut kids[v]);
        mine.sort_unstable();
        let code = format!("({})", mine.concat());
        if v == 0 {
            return code;
        }
        kids[parent[v]].push(code);
    }
    unreachable!("vertex 0 returns")
}

/// All rooted trees with `1..=max_size` vertices, one per isomorphism class;
/// `result[s - 1]` holds size `s`, sorted by AHU code.
pub fn rooted_trees(max_size: usize) -> Vec<Vec<RootedTree>> {
    let mut out: Vec<Vec<RootedTree>> = Vec::with_capacity(max_size);
    if max_size == 0 {
        return out;
    }
    out.push(vec![RootedTree::leaf()]);
    for _ in 2..=max_size {
        let prev = out.last().expect("nonempty");
        let grown: BTreeMap<String, RootedTree> = prev
            .par_iter()
            .flat_map_iter(|t| (0..t.size()).map(move |v| t.with_leaf_at(v)))
            .map(|t| (t.code.clone(), t))
            .collect();
        out.push(grown.into_values().collect());
    }
    out
}

/// One enumerated graph with its canonical code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unicyclic {
    pub code: CanonicalCode,
    pub girth: usize,
    pub graph: Graph,
}

fn check_order(n: usize) -> Result<(), EnumError> {
    if !(3..=MAX_ORDER).contains(&n) {
        return Err(EnumError::OutOfRange {
            n,
            min: 3,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

/// Glues `trees[i]` onto cycle vertex `i` of `C_k`. Cycle vertices are
/// `0..k`; tree vertices follow in order.
fn assemble(trees: &[&RootedTree]) -> Graph {
    let k = trees.len();
    let n: usize = trees.iter().map(|t| t.size()).sum();
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut next = k;
    for (i, t) in trees.iter().enumerate() {
        let mut label = vec![i; t.size()];
        for v in 1..t.size() {
            label[v] = next;
            next += 1;
            edges.push((label[t.parent[v]], label[v]));
        }
    }
    Graph::from_edge_list(n, edges).expect("assembly yields a simple graph")
}

/// Canonical codes of every cyclic arrangement of rooted trees on `C_k`
/// with total order `n`, mapped to one representative arrangement.
fn arrangements(n: usize, k: usize, catalog: &[Vec<RootedTree>]) -> BTreeMap<CanonicalCode, Vec<(usize, usize)>> {
    fn walk(
        remaining: usize,
        slots: usize,
        catalog: &[Vec<RootedTree>],
        current: &mut Vec<(usize, usize)>,
        out: &mut BTreeMap<CanonicalCode, Vec<(usize, usize)>>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                let codes: Vec<&str> = current.iter().map(|&(s, i)| catalog[s - 1][i].code()).collect();
                out.entry(canon::unicyclic_code_from_trees(&codes))
                    .or_insert_with(|| current.clone());
            }
            return;
        }
        // leave at least one vertex for every later slot
        for size in 1..=remaining + 1 - slots {
            for idx in 0..catalog[size - 1].len() {
                current.push((size, idx));
                walk(remaining - size, slots - 1, catalog, current, out);
                current.pop();
            }
        }
    }
    let mut out = BTreeMap::new();
    walk(n, k, catalog, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Every connected unicyclic graph of order `n` (optionally of a fixed
/// girth) up to isomorphism, in ascending canonical-code order.
pub fn enumerate_unicyclic(n: usize, girth: Option<usize>) -> Result<Vec<Unicyclic>, EnumError> {
    check_order(n)?;
    if let Some(k) = girth {
        if !(3..=n).contains(&k) {
            return Err(EnumError::GirthOutOfRange { n, girth: k });
        }
    }
    let catalog = rooted_trees(n - 2);
    let girths: Vec<usize> = match girth {
        Some(k) => vec![k],
        None => (3..=n).collect(),
    };
    let per_girth: Vec<BTreeMap<CanonicalCode, Vec<(usize, usize)>>> =
        girths.par_iter().map(|&k| arrangements(n, k, &catalog)).collect();
    let mut merged = BTreeMap::new();
    for (k, map) in girths.iter().zip(per_girth) {
        for (code, arrangement) in map {
            merged.insert(code, (*k, arrangement));
        }
    }
    Ok(merged
        .into_par_iter()
        .map(|(code, (k, arrangement))| {
            let trees: Vec<&RootedTree> = arrangement.iter().map(|&(s, i)| &catalog[s - 1][i]).collect();
            Unicyclic {
                code,
                girth: k,
                graph: assemble(&trees),
            }
        })
        .collect())
}

/// Number of unicyclic graphs of order `n` up to isomorphism.
pub fn count_unicyclic(n: usize) -> Result<usize, EnumError> {
    enumerate_unicyclic(n, None).map(|v| v.len())
}

/// Every tree of order `n` up to isomorphism, ordered by free-tree code.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, EnumError> {
    if !(1..=MAX_TREE_ORDER).contains(&n) {
        return Err(EnumError::OutOfRange {
            n,
            min: 1,
            max: MAX_TREE_ORDER,
        });
    }
    let rooted = rooted_trees(n).pop().expect("size n present");
    let free: BTreeMap<CanonicalCode, Graph> = rooted
        .par_iter()
        .map(|t| {
            let g = t.to_graph();
            (canon::free_tree_code(&g).expect("tree"), g)
        })
        .collect();
    Ok(free.into_values().collect())
}
