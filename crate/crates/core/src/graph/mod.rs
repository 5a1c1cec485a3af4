//! Simple undirected graphs over dense vertex indices `0..n`.

mod generate;
mod io;
mod label;
mod vertex_set;

pub use generate::{
    all_graphs, build_standard, connected_graphs, enumerate_trees, prufer_decode, random_graph,
    random_graph_with, random_tree, LabeledTrees, StandardFamily, MAX_TREE_ORDER,
};
pub use io::{parse_graph, write_graph, Format};
pub use label::{Tag, VertexLabel};
pub use vertex_set::VertexSet;

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// An immutable simple graph. Adjacency lists are kept sorted.
///
/// Labels are metadata only: two graphs with the same adjacency and
/// different labels compare unequal, use [`Graph::same_adjacency`] to ignore
/// them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<VertexLabel>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
            labels: None,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = BTreeSet::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex {
                        vertex: x,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidParameter(format!("duplicate edge {u} {v}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            edge_count: seen.len(),
            labels: None,
        })
    }

    /// Attaches labels. They must be one per vertex with pairwise distinct
    /// rendered text.
    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::InvalidLabels(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.order()
            )));
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.to_string()) {
                return Err(Error::InvalidLabels(format!("duplicate label {l}")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Shorthand for plain string labels.
    pub fn with_names<S: Into<String>>(self, names: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels = names
            .into_iter()
            .map(|s| VertexLabel::Plain(s.into()))
            .collect();
        self.with_labels(labels)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&VertexLabel> {
        self.labels.as_ref().map(|l| &l[v])
    }

    /// The label text of `v`, or its index when the graph is unlabeled.
    pub fn name(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].to_string(),
            None => v.to_string(),
        }
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn same_adjacency(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub(crate) fn check_host(&self, set: &VertexSet) -> Result<()> {
        if set.host_size() == self.order() {
            Ok(())
        } else {
            Err(Error::HostMismatch {
                set: set.host_size(),
                graph: self.order(),
            })
        }
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        VertexSet::from_vertices(self.order(), self.adj[v].iter().copied())
    }

    /// `N[v]`, the neighbors of `v` together with `v`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        let mut set = self.open_neighborhood(v)?;
        set.insert(v);
        Ok(set)
    }

    /// `N[X]`, the union of closed neighborhoods of members of `set`.
    pub fn closed_neighborhood_of_set(&self, set: &VertexSet) -> Result<VertexSet> {
        self.check_host(set)?;
        let mut out = set.clone();
        for v in set.iter() {
            for &u in &self.adj[v] {
                out.insert(u);
            }
        }
        Ok(out)
    }

    /// The `X`-private neighborhood of `x`: vertices whose closed
    /// neighborhood meets `X` exactly in `x`.
    pub fn private_neighborhood(&self, x: usize, set: &VertexSet) -> Result<VertexSet> {
        self.check_host(set)?;
        self.check_vertex(x)?;
        if !set.contains(x) {
            return Err(Error::NotMember(x));
        }
        let mut out = VertexSet::new(self.order());
        for u in std::iter::once(x).chain(self.adj[x].iter().copied()) {
            let other_hit = (u != x && set.contains(u))
                || self.adj[u].iter().any(|&w| w != x && set.contains(w));
            if !other_hit {
                out.insert(u);
            }
        }
        Ok(out)
    }

    /// Leaves (degree one) and support vertices (adjacent to a leaf).
    pub fn leaf_and_support_sets(&self) -> (VertexSet, VertexSet) {
        let mut leaves = VertexSet::new(self.order());
        let mut supports = VertexSet::new(self.order());
        for v in 0..self.order() {
            if self.degree(v) == 1 {
                leaves.insert(v);
                supports.insert(self.adj[v][0]);
            }
        }
        (leaves, supports)
    }

    /// `G - S`. Survivors keep their relative order and labels; the returned
    /// vector maps each new index to its index in `self`.
    pub fn delete_vertices(&self, removed: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_host(removed)?;
        let keep: Vec<usize> = (0..self.order())
            .filter(|&v| !removed.contains(v))
            .collect();
        Ok((self.induced_subgraph(&keep), keep))
    }

    /// The subgraph induced by `keep`, with vertex `i` of the result being
    /// `keep[i]`. `keep` must hold distinct valid vertices.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut edge_count = 0;
        let adj: Vec<Vec<usize>> = keep
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&u| (index[u] != usize::MAX).then_some(index[u]))
                    .collect();
                list.sort_unstable();
                edge_count += list.len();
                list
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|&v| l[v].clone()).collect());
        Graph {
            adj,
            edge_count: edge_count / 2,
            labels,
        }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// κ(G); zero for the graph with no vertices.
    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }

    pub fn is_cycle(&self) -> bool {
        self.order() >= 3 && (0..self.order()).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        let n = self.order();
        VertexSet::from_vertices(n, (0..n).filter(|&v| self.degree(v) + 1 == n))
            .expect("indices in range")
    }
}
