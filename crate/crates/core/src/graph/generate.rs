use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardFamily {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
}

/// Largest order accepted by [`enumerate_trees`].
pub const MAX_TREE_ORDER: usize = 16;

/// Paths and cycles are numbered consecutively; the parts of `K_{m,n}` are
/// `0..m` and `m..m+n`.
pub fn build_standard(family: StandardFamily, params: &[usize]) -> Result<Graph> {
    let bad = |msg: &str| Error::InvalidParameter(format!("{family:?}: {msg}"));
    match (family, params) {
        (StandardFamily::Path, &[n]) if n >= 1 => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
        (StandardFamily::Cycle, &[n]) if n >= 3 => {
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        (StandardFamily::Complete, &[n]) if n >= 1 => {
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        (StandardFamily::CompleteBipartite, &[m, n]) if m >= 1 && n >= 1 => {
            Graph::from_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
        }
        (StandardFamily::CompleteBipartite, p) if p.len() == 2 => {
            Err(bad("both part sizes must be at least 1"))
        }
        (StandardFamily::CompleteBipartite, _) => Err(bad("expected two parameters")),
        (_, p) if p.len() == 1 => Err(bad("order out of range")),
        _ => Err(bad("expected one parameter")),
    }
}

/// Decodes a Prüfer sequence over `0..seq.len()+2` into a tree.
pub fn prufer_decode(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::InvalidVertex {
            vertex: bad,
            order: n,
        });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).expect("some leaf");
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, edges)
}

/// Every labeled tree on `n` vertices, each exactly once.
///
/// For `n >= 3` the trees come from Prüfer sequences in lexicographic order,
/// so there are `n^(n-2)` of them.
pub fn enumerate_trees(n: usize) -> Result<LabeledTrees> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(Error::InvalidParameter(format!(
            "tree order must be in 1..={MAX_TREE_ORDER}, got {n}"
        )));
    }
    Ok(LabeledTrees {
        n,
        seq: vec![0; n.saturating_sub(2)],
        done: false,
    })
}

pub struct LabeledTrees {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let tree = match self.n {
            1 => Graph::empty(1),
            2 => Graph::from_edges(2, [(0, 1)]).expect("K2"),
            _ => prufer_decode(&self.seq).expect("valid sequence"),
        };
        // advance the base-n counter, least significant digit last
        self.done = true;
        for digit in self.seq.iter_mut().rev() {
            *digit += 1;
            if *digit < self.n {
                self.done = false;
                break;
            }
            *digit = 0;
        }
        Some(tree)
    }
}

/// A uniformly random labeled tree.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    match n {
        0 => Err(Error::InvalidParameter(
            "tree order must be at least 1".into(),
        )),
        1 => Ok(Graph::empty(1)),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(&seq)
        }
    }
}

pub fn random_graph_with<R: Rng>(n: usize, edge_prob: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {edge_prob} outside [0, 1]"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// `G(n, p)` with every unordered pair decided independently, in pair order
/// `(0,1), (0,2), ..`, from a ChaCha8 stream seeded with `seed`.
pub fn random_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    random_graph_with(n, edge_prob, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Every labeled graph on `n` vertices, one per subset of the vertex pairs.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > 8 {
        return Err(Error::InvalidParameter(format!(
            "exhaustive graph enumeration is limited to n <= 8, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("distinct pairs")
    }))
}

/// Every connected labeled graph on `n` vertices.
pub fn connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(all_graphs(n)?.filter(Graph::is_connected))
}
