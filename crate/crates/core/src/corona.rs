//! Corona-type constructions with pair-labeled vertices.
//!
//! Vertex numbering of every construction is fixed:
//!
//! * `corona_k1`: `(v,0)` is vertex `v`, its pendant `(v,1)` is `n + v`.
//! * `f_corona`: `(v,0)` is vertex `v`; then the vertices of `F_0`, `F_1`,
//!   ... follow in order, each copy contiguous.
//! * `p_corona`: `(v,1)` is vertex `v`; then the block vertices `(v,A)`
//!   for `v = 0, 1, ..` in normalized block order.
//! * `s2_subdivision`: the base vertices keep their indices; edge number
//!   `e` of the base (edges sorted, `u < v`) contributes `(u,uv)` at
//!   `n + 2e` and `(v,uv)` at `n + 2e + 1`.
//!
//! Base vertices are named by their label text (or index). Vertices of an
//! unlabeled `F_v` are named `x0, x1, ..` so they cannot collide with the
//! `0` tag of `(v,0)`.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::{parse_graph, Format, Graph, Tag, VertexLabel};

/// A nonempty graph `F_v` for every vertex `v` of the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFamily {
    base: Graph,
    members: Vec<Graph>,
}

impl GraphFamily {
    pub fn new(base: Graph, members: Vec<Graph>) -> Result<Self> {
        if members.len() != base.order() {
            return Err(Error::InvalidFamily(format!(
                "{} member graphs for {} base vertices",
                members.len(),
                base.order()
            )));
        }
        if let Some(v) = members.iter().position(|f| f.order() == 0) {
            return Err(Error::InvalidFamily(format!(
                "member graph of vertex {v} is empty"
            )));
        }
        Ok(GraphFamily { base, members })
    }

    /// The family with every member equal to `member`.
    pub fn uniform(base: Graph, member: &Graph) -> Result<Self> {
        let members = vec![member.clone(); base.order()];
        GraphFamily::new(base, members)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn member(&self, v: usize) -> &Graph {
        &self.members[v]
    }
}

/// A partition of `N(v)` for every base vertex `v`.
///
/// Blocks are stored sorted, and the blocks of each vertex are ordered by
/// their smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodPartition {
    base: Graph,
    blocks: Vec<Vec<Vec<usize>>>,
}

impl NeighborhoodPartition {
    pub fn new(base: Graph, blocks: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if blocks.len() != base.order() {
            return Err(Error::InvalidPartition(format!(
                "{} partitions for {} base vertices",
                blocks.len(),
                base.order()
            )));
        }
        let mut normalized = Vec::with_capacity(blocks.len());
        for (v, mut parts) in blocks.into_iter().enumerate() {
            let mut covered = Vec::new();
            for block in &mut parts {
                if block.is_empty() {
                    return Err(Error::InvalidPartition(format!(
                        "empty block at vertex {v}"
                    )));
                }
                block.sort_unstable();
                covered.extend_from_slice(block);
            }
            covered.sort_unstable();
            if covered.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidPartition(format!(
                    "blocks of vertex {v} overlap"
                )));
            }
            if covered != base.neighbors(v) {
                return Err(Error::InvalidPartition(format!(
                    "blocks of vertex {v} cover {covered:?}, neighborhood is {:?}",
                    base.neighbors(v)
                )));
            }
            parts.sort_by_key(|b| b[0]);
            normalized.push(parts);
        }
        Ok(NeighborhoodPartition {
            base,
            blocks: normalized,
        })
    }

    /// `P(v) = {N(v)}` for every non-isolated `v`.
    pub fn whole(base: Graph) -> Self {
        let blocks = (0..base.order())
            .map(|v| {
                let nb = base.neighbors(v).to_vec();
                if nb.is_empty() {
                    Vec::new()
                } else {
                    vec![nb]
                }
            })
            .collect();
        NeighborhoodPartition { base, blocks }
    }

    /// `P(v) = {{u} : u ∈ N(v)}` for every `v`.
    pub fn singletons(base: Graph) -> Self {
        let blocks = (0..base.order())
            .map(|v| base.neighbors(v).iter().map(|&u| vec![u]).collect())
            .collect();
        NeighborhoodPartition { base, blocks }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn blocks(&self, v: usize) -> &[Vec<usize>] {
        &self.blocks[v]
    }

    pub fn block_count(&self, v: usize) -> usize {
        self.blocks[v].len()
    }

    pub fn total_blocks(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Index of `(v, A_j)` in [`p_corona`].
    pub fn block_vertex(&self, v: usize, j: usize) -> usize {
        self.base.order() + self.blocks[..v].iter().map(Vec::len).sum::<usize>() + j
    }

    /// The block of `P(v)` containing `u`, as a position into `blocks(v)`.
    pub fn block_of(&self, v: usize, u: usize) -> Option<usize> {
        self.blocks[v].iter().position(|b| b.contains(&u))
    }
}

fn pair(g: &Graph, v: usize, tag: Tag) -> VertexLabel {
    VertexLabel::Pair(g.name(v), tag)
}

/// `G∘K1`: one pendant vertex per vertex.
pub fn corona_k1(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let edges = g.edges().chain((0..n).map(|v| (v, n + v)));
    let labels = (0..n)
        .map(|v| pair(g, v, Tag::Zero))
        .chain((0..n).map(|v| pair(g, v, Tag::One)))
        .collect();
    Graph::from_edges(2 * n, edges)?.with_labels(labels)
}

/// `G∘F`: each `(v,0)` is joined to every vertex of its own copy of `F_v`.
pub fn f_corona(fam: &GraphFamily) -> Result<Graph> {
    let g = fam.base();
    let n = g.order();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut labels: Vec<VertexLabel> = (0..n).map(|v| pair(g, v, Tag::Zero)).collect();
    let mut offset = n;
    for (v, f) in fam.members().iter().enumerate() {
        for x in 0..f.order() {
            edges.push((v, offset + x));
            let name = match f.label(x) {
                Some(l) => l.to_string(),
                None => format!("x{x}"),
            };
            labels.push(pair(g, v, Tag::Member(name)));
        }
        edges.extend(f.edges().map(|(a, b)| (offset + a, offset + b)));
        offset += f.order();
    }
    Graph::from_edges(offset, edges)?.with_labels(labels)
}

/// `G∘P`: centers `(v,1)`, one vertex `(v,A)` per block, and `(v,A)(u,B)`
/// adjacent exactly when `uv` is an edge with `u ∈ A` and `v ∈ B`.
pub fn p_corona(part: &NeighborhoodPartition) -> Result<Graph> {
    let g = part.base();
    let n = g.order();
    let total = n + part.total_blocks();
    let mut edges = Vec::new();
    let mut labels: Vec<VertexLabel> = (0..n).map(|v| pair(g, v, Tag::One)).collect();
    for v in 0..n {
        for (j, block) in part.blocks(v).iter().enumerate() {
            edges.push((v, part.block_vertex(v, j)));
            let names = block.iter().map(|&u| g.name(u)).collect();
            labels.push(pair(g, v, Tag::Block(names)));
        }
    }
    for (u, v) in g.edges() {
        let a = part.block_of(u, v).expect("partition covers N(u)");
        let b = part.block_of(v, u).expect("partition covers N(v)");
        edges.push((part.block_vertex(u, a), part.block_vertex(v, b)));
    }
    Graph::from_edges(total, edges)?.with_labels(labels)
}

/// `S2(G)`: every edge replaced by a path through two new vertices.
pub fn s2_subdivision(g: &Graph) -> Result<Graph> {
    let n = g.order();
    let mut edges = Vec::with_capacity(3 * g.size());
    let mut labels: Vec<VertexLabel> = (0..n).map(|v| VertexLabel::Plain(g.name(v))).collect();
    for (e, (u, v)) in g.edges().enumerate() {
        let (a, b) = (n + 2 * e, n + 2 * e + 1);
        edges.extend([(u, a), (a, b), (b, v)]);
        labels.push(pair(g, u, Tag::Edge(g.name(u), g.name(v))));
        labels.push(pair(g, v, Tag::Edge(g.name(v), g.name(u))));
    }
    Graph::from_edges(n + 2 * g.size(), edges)?.with_labels(labels)
}

/// Index of `(v,vu)` in [`s2_subdivision`] for the base edge `vu`.
pub fn s2_edge_vertex(g: &Graph, v: usize, u: usize) -> Option<usize> {
    let (lo, hi) = (v.min(u), v.max(u));
    let e = g.edges().position(|edge| edge == (lo, hi))?;
    Some(g.order() + 2 * e + usize::from(v != lo))
}

/// Whether `mapping` (vertex `i` of `a` to `mapping[i]` of `b`) is an
/// isomorphism.
pub fn natural_iso_check(a: &Graph, b: &Graph, mapping: &[usize]) -> Result<bool> {
    if mapping.len() != a.order() || a.order() != b.order() {
        return Err(Error::NotBijection(format!(
            "mapping of length {} between graphs of order {} and {}",
            mapping.len(),
            a.order(),
            b.order()
        )));
    }
    let mut hit = vec![false; b.order()];
    for &img in mapping {
        if img >= b.order() || std::mem::replace(&mut hit[img], true) {
            return Err(Error::NotBijection(format!(
                "image {img} repeated or out of range"
            )));
        }
    }
    Ok(a.size() == b.size() && a.edges().all(|(u, v)| b.has_edge(mapping[u], mapping[v])))
}

/// Canonical map from `G∘P` with `P(v) = {N(v)}` onto `G∘K1`. The center
/// `(v,1)` has degree one there, so it goes to the pendant `(v,1)`, and
/// `(v,N(v))` goes to `(v,0)`. Needs every vertex to have exactly one
/// block, so no isolated vertices.
pub fn whole_partition_to_corona_map(part: &NeighborhoodPartition) -> Result<Vec<usize>> {
    let n = part.base().order();
    let mut map: Vec<usize> = (n..2 * n).collect();
    map.resize(n + part.total_blocks(), 0);
    for v in 0..n {
        if part.block_count(v) != 1 {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} has {} blocks, expected one",
                part.block_count(v)
            )));
        }
        map[part.block_vertex(v, 0)] = v;
    }
    Ok(map)
}

/// Canonical map from `G∘P` with singleton blocks onto `S2(G)`:
/// `(v,1) ↦ v`, `(v,{u}) ↦ (v,vu)`.
pub fn singleton_partition_to_s2_map(part: &NeighborhoodPartition) -> Result<Vec<usize>> {
    let g = part.base();
    let n = g.order();
    let mut map: Vec<usize> = (0..n).collect();
    map.resize(n + part.total_blocks(), 0);
    for v in 0..n {
        for (j, block) in part.blocks(v).iter().enumerate() {
            let &[u] = block.as_slice() else {
                return Err(Error::InvalidPartition(format!(
                    "block {block:?} of vertex {v} is not a singleton"
                )));
            };
            map[part.block_vertex(v, j)] = s2_edge_vertex(g, v, u).expect("u adjacent to v");
        }
    }
    Ok(map)
}

/// A vertex named in a construction spec, by index or by label text.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum VertexRef {
    Index(usize),
    Name(String),
}

/// JSON construction document:
///
/// ```json
/// {
///   "base": "4 4\n0 1\n0 2\n1 2\n2 3",
///   "labels": ["v", "u", "w", "z"],
///   "family": {"v": "1 0", "u": "3 1\n0 1", "w": "1 0", "z": "2 1\n0 1"},
///   "partition": {"v": [["u", "w"]], "u": [["v"], ["w"]]}
/// }
/// ```
///
/// `base` and the family members are edge lists. `labels` is optional.
/// Keys and block members refer to base vertices by index or label.
/// Isolated vertices may be left out of `partition`.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ConstructionSpec {
    pub base: String,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub family: BTreeMap<String, String>,
    #[serde(default)]
    pub partition: BTreeMap<String, Vec<Vec<VertexRef>>>,
}

impl ConstructionSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn base_graph(&self) -> Result<Graph> {
        let g = parse_graph(&self.base, Format::EdgeList)?;
        match &self.labels {
            Some(names) => g.with_names(names.iter().cloned()),
            None => Ok(g),
        }
    }

    fn resolve(&self, g: &Graph, key: &VertexRef) -> Result<usize> {
        match key {
            VertexRef::Index(i) if *i < g.order() => Ok(*i),
            VertexRef::Index(i) => Err(Error::InvalidSpec(format!("vertex {i} out of range"))),
            VertexRef::Name(s) => (0..g.order())
                .find(|&v| g.name(v) == *s)
                .or_else(|| s.parse().ok().filter(|&i: &usize| i < g.order()))
                .ok_or_else(|| Error::InvalidSpec(format!("unknown vertex `{s}`"))),
        }
    }

    pub fn family(&self) -> Result<GraphFamily> {
        let g = self.base_graph()?;
        let mut members: Vec<Option<Graph>> = vec![None; g.order()];
        for (key, text) in &self.family {
            let v = self.resolve(&g, &VertexRef::Name(key.clone()))?;
            if members[v].is_some() {
                return Err(Error::InvalidSpec(format!("vertex `{key}` listed twice")));
            }
            members[v] = Some(parse_graph(text, Format::EdgeList)?);
        }
        let members = members
            .into_iter()
            .enumerate()
            .map(|(v, m)| {
                m.ok_or_else(|| {
                    Error::InvalidFamily(format!("no member graph for vertex {}", g.name(v)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        GraphFamily::new(g, members)
    }

    pub fn partition(&self) -> Result<NeighborhoodPartition> {
        let g = self.base_graph()?;
        let mut blocks: Vec<Option<Vec<Vec<usize>>>> = vec![None; g.order()];
        for (key, parts) in &self.partition {
            let v = self.resolve(&g, &VertexRef::Name(key.clone()))?;
            if blocks[v].is_some() {
                return Err(Error::InvalidSpec(format!("vertex `{key}` listed twice")));
            }
            let resolved = parts
                .iter()
                .map(|b| {
                    b.iter()
                        .map(|r| self.resolve(&g, r))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            blocks[v] = Some(resolved);
        }
        let blocks = blocks
            .into_iter()
            .enumerate()
            .map(|(v, b)| match b {
                Some(b) => Ok(b),
                None if g.degree(v) == 0 => Ok(Vec::new()),
                None => Err(Error::InvalidPartition(format!(
                    "no partition given for vertex {}",
                    g.name(v)
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        NeighborhoodPartition::new(g, blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_standard, StandardFamily};

    fn cycle(n: usize) -> Graph {
        build_standard(StandardFamily::Cycle, &[n]).unwrap()
    }

    fn four_vertex_base() -> Graph {
        // v=0, u=1, w=2, z=3; edges vu, vw, uw, wz
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
            .unwrap()
            .with_names(["v", "u", "w", "z"])
            .unwrap()
    }

    #[test]
    fn corona_k1_examples() {
        let k2 = corona_k1(&Graph::empty(1)).unwrap();
        assert!(k2.same_adjacency(&build_standard(StandardFamily::Path, &[2]).unwrap()));
        let c = corona_k1(&cycle(3)).unwrap();
        assert_eq!((c.order(), c.size()), (6, 6));
        let f = corona_k1(&four_vertex_base()).unwrap();
        assert_eq!((f.order(), f.size()), (8, 8));
        assert_eq!(f.name(0), "(v,0)");
        assert_eq!(f.name(5), "(u,1)");
        assert_eq!(corona_k1(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn f_corona_four_vertex() {
        let k1 = Graph::empty(1);
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let k2_k1 = Graph::from_edges(3, [(0, 1)]).unwrap();
        let fam = GraphFamily::new(four_vertex_base(), vec![k1.clone(), k2_k1, k1, k2]).unwrap();
        let g = f_corona(&fam).unwrap();
        assert_eq!((g.order(), g.size()), (11, 13));
        assert_eq!(g.name(5), "(u,x0)");
    }

    #[test]
    fn f_corona_k1_join_k2_is_triangle() {
        let fam = GraphFamily::uniform(Graph::empty(1), &Graph::from_edges(2, [(0, 1)]).unwrap())
            .unwrap();
        let g = f_corona(&fam).unwrap();
        assert!(g.same_adjacency(&cycle(3)));
    }

    #[test]
    fn f_corona_all_k1_matches_corona_k1() {
        let base = cycle(5);
        let fam = GraphFamily::uniform(base.clone(), &Graph::empty(1)).unwrap();
        let a = f_corona(&fam).unwrap();
        let b = corona_k1(&base).unwrap();
        let identity: Vec<usize> = (0..10).collect();
        assert!(natural_iso_check(&a, &b, &identity).unwrap());
    }

    #[test]
    fn family_validation() {
        assert!(GraphFamily::new(cycle(3), vec![Graph::empty(1); 2]).is_err());
        assert!(GraphFamily::new(Graph::empty(1), vec![Graph::empty(0)]).is_err());
    }

    #[test]
    fn partition_validation() {
        let p3 = build_standard(StandardFamily::Path, &[3]).unwrap();
        let ok = vec![vec![vec![1]], vec![vec![2], vec![0]], vec![vec![1]]];
        let part = NeighborhoodPartition::new(p3.clone(), ok).unwrap();
        assert_eq!(part.blocks(1), &[vec![0], vec![2]]);

        let missing = vec![vec![vec![1]], vec![vec![0]], vec![vec![1]]];
        assert!(NeighborhoodPartition::new(p3.clone(), missing).is_err());
        let overlap = vec![vec![vec![1]], vec![vec![0, 2], vec![2]], vec![vec![1]]];
        assert!(NeighborhoodPartition::new(p3.clone(), overlap).is_err());
        let empty_block = vec![vec![vec![1]], vec![vec![0, 2], vec![]], vec![vec![1]]];
        assert!(NeighborhoodPartition::new(p3.clone(), empty_block).is_err());
        let foreign = vec![vec![vec![1, 2]], vec![vec![0, 2]], vec![vec![1]]];
        assert!(NeighborhoodPartition::new(p3, foreign).is_err());

        let iso = NeighborhoodPartition::new(Graph::empty(2), vec![vec![], vec![]]).unwrap();
        assert_eq!(iso.total_blocks(), 0);
    }

    #[test]
    fn p_corona_four_vertex_counts() {
        let part = NeighborhoodPartition::new(
            four_vertex_base(),
            vec![
                vec![vec![1, 2]],
                vec![vec![0], vec![2]],
                vec![vec![1, 0], vec![3]],
                vec![vec![2]],
            ],
        )
        .unwrap();
        let g = p_corona(&part).unwrap();
        assert_eq!((g.order(), g.size()), (10, 10));
    }

    #[test]
    fn p_corona_degrees() {
        let base = crate::graph::random_graph(7, 0.5, 9).unwrap();
        let part = NeighborhoodPartition::singletons(base.clone());
        let g = p_corona(&part).unwrap();
        for v in 0..base.order() {
            assert_eq!(g.degree(v), part.block_count(v));
            for (j, block) in part.blocks(v).iter().enumerate() {
                assert_eq!(g.degree(part.block_vertex(v, j)), 1 + block.len());
            }
        }
    }

    #[test]
    fn s2_examples() {
        let p4 = build_standard(StandardFamily::Path, &[4]).unwrap();
        let k2 = build_standard(StandardFamily::Path, &[2]).unwrap();
        let s = s2_subdivision(&k2).unwrap();
        // 0 - (0,01) - (1,10) - 1 is a path; relabel onto P4 explicitly
        assert!(natural_iso_check(&s, &p4, &[0, 3, 1, 2]).unwrap());
        assert_eq!(s.name(2), "(0,01)");
        assert_eq!(s.name(3), "(1,10)");

        let s = s2_subdivision(&cycle(4)).unwrap();
        assert_eq!((s.order(), s.size()), (12, 12));
        assert!(s.is_cycle());

        let s = s2_subdivision(&Graph::empty(1)).unwrap();
        assert_eq!((s.order(), s.size()), (1, 0));
    }

    #[test]
    fn canonical_maps() {
        let base = four_vertex_base();
        let whole = NeighborhoodPartition::whole(base.clone());
        let map = whole_partition_to_corona_map(&whole).unwrap();
        assert!(
            natural_iso_check(&p_corona(&whole).unwrap(), &corona_k1(&base).unwrap(), &map)
                .unwrap()
        );

        let single = NeighborhoodPartition::singletons(base.clone());
        let map = singleton_partition_to_s2_map(&single).unwrap();
        assert!(natural_iso_check(
            &p_corona(&single).unwrap(),
            &s2_subdivision(&base).unwrap(),
            &map
        )
        .unwrap());

        assert!(whole_partition_to_corona_map(&single).is_err());
    }

    #[test]
    fn iso_check_rejects() {
        let c4 = cycle(4);
        let p4 = build_standard(StandardFamily::Path, &[4]).unwrap();
        assert!(!natural_iso_check(&c4, &p4, &[0, 1, 2, 3]).unwrap());
        assert!(natural_iso_check(&c4, &p4, &[0, 0, 2, 3]).is_err());
        assert!(natural_iso_check(&c4, &p4, &[0, 1, 2]).is_err());
        assert!(natural_iso_check(&c4, &p4, &[0, 1, 2, 4]).is_err());
    }

    #[test]
    fn spec_parsing() {
        let json = r#"{
            "base": "4 4\n0 1\n0 2\n1 2\n2 3",
            "labels": ["v", "u", "w", "z"],
            "family": {"v": "1 0", "u": "3 1\n0 1", "w": "1 0", "z": "2 1\n0 1"},
            "partition": {"v": [["u","w"]], "u": [["v"],["w"]], "w": [["u","v"],["z"]], "z": [[2]]}
        }"#;
        let spec = ConstructionSpec::from_json(json).unwrap();
        let fam = spec.family().unwrap();
        assert_eq!(fam.member(1).order(), 3);
        let part = spec.partition().unwrap();
        assert_eq!(part.blocks(2), &[vec![0, 1], vec![3]]);

        let bad =
            ConstructionSpec::from_json(r#"{"base": "2 1\n0 1", "family": {"0": "1 0"}}"#).unwrap();
        assert!(matches!(bad.family(), Err(Error::InvalidFamily(_))));
        let bad = ConstructionSpec::from_json(r#"{"base": "2 1\n0 1", "partition": {"7": [[1]]}}"#)
            .unwrap();
        assert!(matches!(bad.partition(), Err(Error::InvalidSpec(_))));
        assert!(ConstructionSpec::from_json(r#"{"base": "1 0", "extra": 1}"#).is_err());
    }

    #[test]
    fn spec_isolated_vertices_may_be_omitted() {
        let spec = ConstructionSpec::from_json(
            r#"{"base": "3 1\n0 1", "partition": {"0": [[1]], "1": [[0]]}}"#,
        )
        .unwrap();
        let part = spec.partition().unwrap();
        assert!(part.blocks(2).is_empty());
        assert_eq!(p_corona(&part).unwrap().order(), 5);
    }
}
