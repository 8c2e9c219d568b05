//! Immutable simple undirected graphs on a contiguous vertex range `0..n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Index of a vertex inside its owning graph.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(VertexId),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge {{{0}, {1}}} is not present")]
    EdgeNotPresent(VertexId, VertexId),
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not a forest")]
    NotAForest,
}

/// Length of the shortest cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(k) => write!(f, "{k}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// A simple undirected graph. Edges are stored normalized (`u < v`) and
/// sorted, so two graphs compare equal iff they have the same labeled
/// structure.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<VertexId>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list, normalizing each pair to `u < v`.
    pub fn from_edge_list(n: usize, pairs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_sorted_unchecked(n, seen.into_iter().collect()))
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unchecked(n, Vec::new())
    }

    // Callers guarantee normalized, sorted, deduplicated, in-range edges.
    fn from_sorted_unchecked(n: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self { n, edges, adjacency }
    }

    fn from_unsorted_unchecked(n: usize, mut edges: Vec<(VertexId, VertexId)>) -> Self {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        debug_assert!(edges.windows(2).all(|w| w[0] != w[1]));
        Self::from_sorted_unchecked(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn delete_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeNotPresent(u, v));
        }
        let key = (u.min(v), u.max(v));
        let edges = self.edges.iter().copied().filter(|&e| e != key).collect();
        Ok(Self::from_sorted_unchecked(self.n, edges))
    }

    /// Removes every vertex in `removed` with its incident edges. Surviving
    /// vertices are renumbered `0..n-|removed|` keeping their relative order.
    pub fn delete_vertices(&self, removed: &[VertexId]) -> Result<Graph, GraphError> {
        let mut gone = vec![false; self.n];
        for &v in removed {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            gone[v] = true;
        }
        let mut relabel = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !gone[v] {
                relabel[v] = next;
                next += 1;
            }
        }
        // Relabeling is monotone, so sorted order survives.
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| !gone[u] && !gone[v])
            .map(|&(u, v)| (relabel[u], relabel[v]))
            .collect();
        Ok(Self::from_sorted_unchecked(next, edges))
    }

    /// Subgraph induced by `keep`, relabeled in the order given.
    pub fn induced(&self, keep: &[VertexId]) -> Graph {
        let mut relabel = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            relabel[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| relabel[u] != usize::MAX && relabel[v] != usize::MAX)
            .map(|&(u, v)| (relabel[u], relabel[v]))
            .collect();
        Self::from_unsorted_unchecked(keep.len(), edges)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Self::from_unsorted_unchecked(self.n, edges)
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_sorted_unchecked(self.n + other.n, edges)
    }

    /// Returns a new graph with `extra` vertices appended and `new_edges` added.
    pub fn extended(
        &self,
        extra: usize,
        new_edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Graph, GraphError> {
        Graph::from_edge_list(self.n + extra, self.edges.iter().copied().chain(new_edges))
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn component_vertex_sets(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<Graph> {
        self.component_vertex_sets().iter().map(|c| self.induced(c)).collect()
    }

    pub fn component_count(&self) -> usize {
        self.component_vertex_sets().len()
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_acyclic(&self) -> bool {
        self.edges.len() + self.component_count() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edges.len() + 1 == self.n
    }

    pub fn is_unicyclic(&self) -> bool {
        self.n >= 3 && self.edges.len() == self.n && self.is_connected()
    }

    pub fn girth(&self) -> Girth {
        match self.shortest_cycle_edge() {
            Some((len, _)) => Girth::Finite(len),
            None => Girth::Infinite,
        }
    }

    /// Length of a shortest cycle together with one edge lying on such a
    /// cycle. BFS from every vertex; a non-tree edge `(x, y)` seen from root
    /// `r` closes a walk of length `d(x) + d(y) + 1`, and the minimum over
    /// all roots is the girth, attained on a genuine cycle.
    pub fn shortest_cycle_edge(&self) -> Option<(usize, (VertexId, VertexId))> {
        let mut best: Option<(usize, (VertexId, VertexId))> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                if let Some((b, _)) = best {
                    if 2 * dist[x] + 1 >= b {
                        break;
                    }
                }
                for &y in &self.adjacency[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        if best.is_none_or(|(b, _)| len < b) {
                            best = Some((len, (x.min(y), x.max(y))));
                        }
                    }
                }
            }
        }
        best
    }

    /// Membership mask of the 2-core: what remains after repeatedly
    /// deleting vertices of degree at most one.
    pub fn two_core(&self) -> Vec<bool> {
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut alive = vec![true; self.n];
        let mut stack: Vec<VertexId> = (0..self.n).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &w in &self.adjacency[v] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        alive
    }

    /// Splits a unicyclic graph into its cycle and the rooted trees hanging
    /// from each cycle vertex.
    pub fn cycle_decomposition(&self) -> Result<CycleDecomposition, GraphError> {
        if !self.is_unicyclic() {
            return Err(GraphError::NotUnicyclic);
        }
        let on_cycle = self.two_core();

        let start = (0..self.n).find(|&v| on_cycle[v]).ok_or(GraphError::NotUnicyclic)?;
        let mut cycle = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self.adjacency[cur]
                .iter()
                .copied()
                .find(|&w| on_cycle[w] && w != prev)
                .ok_or(GraphError::NotUnicyclic)?;
            if next == start {
                break;
            }
            cycle.push(next);
            prev = cur;
            cur = next;
        }

        let trees = cycle
            .iter()
            .map(|&root| {
                let mut original = vec![root];
                let mut parent = vec![None];
                let mut index = std::collections::HashMap::from([(root, 0usize)]);
                let mut i = 0;
                while i < original.len() {
                    let u = original[i];
                    for &w in &self.adjacency[u] {
                        if !on_cycle[w] && !index.contains_key(&w) {
                            index.insert(w, original.len());
                            original.push(w);
                            parent.push(Some(i));
                        }
                    }
                    i += 1;
                }
                let edges = parent
                    .iter()
                    .enumerate()
                    .filter_map(|(c, p)| p.map(|p| (p, c)))
                    .collect();
                HangingTree {
                    tree: Graph::from_unsorted_unchecked(original.len(), edges),
                    original,
                }
            })
            .collect();

        Ok(CycleDecomposition { cycle, trees })
    }
}

/// The unique cycle of a unicyclic graph and the tree rooted at each cycle
/// vertex. `trees[i]` hangs from `cycle[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycle: Vec<VertexId>,
    pub trees: Vec<HangingTree>,
}

/// A tree relabeled with its root at vertex 0; `original[i]` is the vertex
/// of the parent graph that tree vertex `i` came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HangingTree {
    pub tree: Graph,
    pub original: Vec<VertexId>,
}

impl CycleDecomposition {
    /// Rebuilds the parent graph's edge set from the cycle and the trees.
    pub fn reassembled_edges(&self) -> Vec<(VertexId, VertexId)> {
        let k = self.cycle.len();
        let mut edges: Vec<_> = (0..k)
            .map(|i| {
                let (a, b) = (self.cycle[i], self.cycle[(i + 1) % k]);
                (a.min(b), a.max(b))
            })
            .collect();
        for t in &self.trees {
            for &(u, v) in t.tree.edges() {
                let (a, b) = (t.original[u], t.original[v]);
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort_unstable();
        edges
    }
}

/// Standard small graphs used throughout tests and constructions.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_sorted_unchecked(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_unsorted_unchecked(n, (0..n).map(|v| (v, (v + 1) % n)).collect())
    }

    pub fn star(n: usize) -> Graph {
        Graph::from_sorted_unchecked(n, (1..n).map(|v| (0, v)).collect())
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_sorted_unchecked(n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn from_edge_list_normalizes_and_rejects() {
        let g = Graph::from_edge_list(3, [(1, 0), (2, 1), (0, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g, cycle(3));
        assert_eq!(Graph::from_edge_list(1, []).unwrap().vertex_count(), 1);
        assert_eq!(Graph::from_edge_list(3, [(0, 0)]), Err(GraphError::LoopEdge(0)));
        assert_eq!(
            Graph::from_edge_list(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edge_list(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn delete_edge_cases() {
        let p = cycle(3).delete_edge(0, 1).unwrap();
        assert_eq!(p.vertex_count(), 3);
        assert_eq!(p.edges(), &[(0, 2), (1, 2)]);
        assert!(p.is_tree());
        let two = path(2).delete_edge(1, 0).unwrap();
        assert_eq!(two, Graph::empty(2));
        assert_eq!(path(3).delete_edge(0, 2), Err(GraphError::EdgeNotPresent(0, 2)));
    }

    #[test]
    fn delete_vertices_cases() {
        assert_eq!(cycle(4).delete_vertices(&[0]).unwrap(), path(3));
        assert_eq!(path(5).delete_vertices(&[0, 4]).unwrap(), path(3));
        assert_eq!(star(5).delete_vertices(&[0]).unwrap(), Graph::empty(4));
        assert!(matches!(
            path(2).delete_vertices(&[5]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn components() {
        assert_eq!(path(4).connected_components(), vec![path(4)]);
        let two = cycle(3).disjoint_union(&cycle(3));
        assert_eq!(two.connected_components(), vec![cycle(3), cycle(3)]);
        assert_eq!(Graph::empty(3).connected_components(), vec![Graph::empty(1); 3]);
        // interleaved labels: components ordered by smallest vertex
        let g = Graph::from_edge_list(5, [(0, 3), (1, 4), (4, 2)]).unwrap();
        let comps = g.component_vertex_sets();
        assert_eq!(comps, vec![vec![0, 3], vec![1, 2, 4]]);
    }

    #[test]
    fn girth_and_unicyclic() {
        assert_eq!(cycle(7).girth(), Girth::Finite(7));
        assert_eq!(path(6).girth(), Girth::Infinite);
        assert_eq!(star(6).girth(), Girth::Infinite);
        assert_eq!(complete(5).girth(), Girth::Finite(3));
        assert!(cycle(5).is_unicyclic());
        assert!(!path(5).is_unicyclic());
        // lollipop L_{8,5}: C5 with a pendant path of three vertices
        let lolli = cycle(5).extended(3, [(0, 5), (5, 6), (6, 7)]).unwrap();
        assert_eq!(lolli.girth(), Girth::Finite(5));
        assert!(lolli.is_unicyclic());
    }

    #[test]
    fn cycle_decomposition_of_lollipop() {
        let g = cycle(4).extended(5, [(2, 4), (4, 5), (5, 6), (6, 7), (7, 8)]).unwrap();
        let d = g.cycle_decomposition().unwrap();
        assert_eq!(d.cycle.len(), 4);
        let sizes: Vec<usize> = d.trees.iter().map(|t| t.tree.vertex_count()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 9);
        assert_eq!(sizes.iter().filter(|&&s| s == 6).count(), 1);
        assert_eq!(d.reassembled_edges(), g.edges());
        let c6 = cycle(6).cycle_decomposition().unwrap();
        assert!(c6.trees.iter().all(|t| t.tree.vertex_count() == 1));
        assert_eq!(path(4).cycle_decomposition(), Err(GraphError::NotUnicyclic));
    }
}
