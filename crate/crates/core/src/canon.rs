//! Canonical codes for rooted trees, free trees, and unicyclic graphs.
//!
//! Rooted trees use the AHU parenthesization: a leaf is `()`, an internal
//! vertex is `(` followed by its children's codes in sorted order and `)`.
//! A unicyclic graph is its cycle length plus the cyclic word of AHU codes of
//! the trees hanging from the cycle, taken at its lexicographically least
//! rotation or reflection.

use std::fmt;

use crate::graph::{Graph, GraphError, VertexId};

/// Label-invariant identifier: equal codes iff isomorphic inputs (within
/// the same kind: rooted tree, free tree, or unicyclic graph).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Raw AHU string of `tree` rooted at `root`.
fn ahu_strings(tree: &Graph, root: VertexId) -> Result<String, GraphError> {
    if root >= tree.vertex_count() {
        return Err(GraphError::VertexOutOfRange {
            vertex: root,
            n: tree.vertex_count(),
        });
    }
    if !tree.is_tree() {
        return Err(GraphError::NotATree);
    }
    let n = tree.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in tree.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut child_codes: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut root_code = String::new();
    for &u in order.iter().rev() {
        let mut kids = std::mem::take(&mut child_codes[u]);
        kids.sort_unstable();
        let mut code = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        code.push('(');
        for k in &kids {
            code.push_str(k);
        }
        code.push(')');
        if u == root {
            root_code = code;
        } else {
            child_codes[parent[u]].push(code);
        }
    }
    Ok(root_code)
}

/// AHU code of `tree` rooted at `root`.
pub fn ahu_encode(tree: &Graph, root: VertexId) -> Result<CanonicalCode, GraphError> {
    ahu_strings(tree, root).map(CanonicalCode)
}

/// Centre vertices (one or two) of a tree, by repeated leaf stripping.
pub fn tree_centers(tree: &Graph) -> Result<Vec<VertexId>, GraphError> {
    if !tree.is_tree() {
        return Err(GraphError::NotATree);
    }
    let n = tree.vertex_count();
    if n <= 2 {
        return Ok((0..n).collect());
    }
    let mut deg: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<VertexId> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            deg[leaf] = 0;
            for &w in tree.neighbors(leaf) {
                if deg[w] > 0 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    Ok(layer)
}

/// Code of an unrooted tree: the least AHU code over its centres.
pub fn free_tree_code(tree: &Graph) -> Result<CanonicalCode, GraphError> {
    let best = tree_centers(tree)?
        .into_iter()
        .map(|c| ahu_strings(tree, c))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .min()
        .expect("a tree has a centre");
    Ok(CanonicalCode(format!("T:{best}")))
}

/// Least concatenation over all rotations and reflections of a cyclic word.
pub(crate) fn dihedral_min<S: AsRef<str>>(words: &[S]) -> String {
    let k = words.len();
    let total: usize = words.iter().map(|w| w.as_ref().len()).sum();
    let mut best: Option<String> = None;
    let mut buf = String::with_capacity(total);
    for start in 0..k {
        for forward in [true, false] {
            buf.clear();
            for step in 0..k {
                let idx = if forward {
                    (start + step) % k
                } else {
                    (start + k - step) % k
                };
                buf.push_str(words[idx].as_ref());
            }
            if best.as_ref().is_none_or(|b| buf < *b) {
                best = Some(buf.clone());
            }
        }
    }
    best.unwrap_or_default()
}

/// Assembles the unicyclic code from the hanging-tree codes in cycle order.
pub(crate) fn unicyclic_code_from_trees<S: AsRef<str>>(tree_codes: &[S]) -> CanonicalCode {
    CanonicalCode(format!("{:03}:{}", tree_codes.len(), dihedral_min(tree_codes)))
}

/// Canonical code of a connected unicyclic graph.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode, GraphError> {
    let decomposition = g.cycle_decomposition()?;
    let codes = decomposition
        .trees
        .iter()
        .map(|t| ahu_strings(&t.tree, 0))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(unicyclic_code_from_trees(&codes))
}
