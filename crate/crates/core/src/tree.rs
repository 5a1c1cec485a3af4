//! Corona recognition and the characterization of trees whose accurate
//! domination number equals their domination number.
//!
//! For a tree `T` of order at least two the following coincide: `T` is not
//! a corona graph; some minimum dominating set `D` leaves more than `|D|`
//! components when deleted; γₐ(T) = γ(T); some minimum dominating set meets
//! every other one. This module decides the first condition directly and
//! produces the `D` of the second, either by scanning all minimum
//! dominating sets or by the inductive splitting construction.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{write_graph, Format, Graph, VertexSet};
use crate::solver::{gamma, is_dominating, min_dominating_sets};

fn check_connected(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        Err(Error::EmptyGraph)
    } else if !g.is_connected() {
        Err(Error::Disconnected)
    } else {
        Ok(())
    }
}

fn check_tree(t: &Graph, min_order: usize) -> Result<()> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.order() < min_order {
        return Err(Error::InvalidParameter(format!(
            "tree must have at least {min_order} vertices, got {}",
            t.order()
        )));
    }
    Ok(())
}

/// Whether the connected graph `g` is `F∘K1` for some connected `F`.
///
/// `K2` is the only such graph on two vertices. Otherwise the order must be
/// even and every non-leaf vertex must carry exactly one leaf, with half
/// the vertices being leaves. Deleting leaves cannot disconnect a graph, so
/// the remaining `F` is connected automatically.
pub fn is_corona_graph(g: &Graph) -> Result<bool> {
    check_connected(g)?;
    let n = g.order();
    if n == 1 || n % 2 == 1 {
        return Ok(false);
    }
    if n == 2 {
        return Ok(true);
    }
    let (leaves, _) = g.leaf_and_support_sets();
    if leaves.len() != n / 2 {
        return Ok(false);
    }
    Ok((0..n).filter(|&v| !leaves.contains(v)).all(|v| {
        g.neighbors(v)
            .iter()
            .filter(|&&u| leaves.contains(u))
            .count()
            == 1
    }))
}

/// γₐ(T) = γ(T) for a tree of order at least two, decided without search.
pub fn tree_gamma_a_equals_gamma(t: &Graph) -> Result<bool> {
    check_tree(t, 2)?;
    Ok(!is_corona_graph(t)?)
}

/// A minimum dominating set containing every support vertex, in which
/// every non-support member with a neighbor in the set has at least two
/// private neighbors.
///
/// Starts from a minimum dominating set and repeats two swaps until neither
/// applies: a leaf in the set is traded for its support vertex, and a
/// non-support member with a neighbor in the set and a single private
/// neighbor `u` is traded for `u`. The first swap raises the number of
/// supports in the set and the second raises the number of components of
/// the induced subgraph, so the loop ends.
pub fn support_respecting_gamma_set(t: &Graph) -> Result<VertexSet> {
    check_tree(t, 3)?;
    let mut d = gamma(t)?.witness;
    let (leaves, supports) = t.leaf_and_support_sets();
    loop {
        let leaf = d.iter().find(|&v| leaves.contains(v));
        if let Some(leaf) = leaf {
            d.remove(leaf);
            d.insert(t.neighbors(leaf)[0]);
            continue;
        }
        let mut swap = None;
        for v in d.iter() {
            if supports.contains(v) || !t.neighbors(v).iter().any(|&u| d.contains(u)) {
                continue;
            }
            let pn = t.private_neighborhood(v, &d)?;
            if pn.len() == 1 {
                swap = Some((v, pn.iter().next().expect("one member")));
                break;
            }
        }
        match swap {
            Some((v, u)) => {
                d.remove(v);
                d.insert(u);
            }
            None => return Ok(d),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessMode {
    BruteForce,
    Constructive,
}

impl fmt::Display for WitnessMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessMode::BruteForce => "brute_force",
            WitnessMode::Constructive => "constructive",
        })
    }
}

/// A minimum dominating set whose deletion leaves more components than it
/// has vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeWitness {
    pub dominating_set: VertexSet,
    pub components_after_removal: usize,
    pub mode: WitnessMode,
}

/// JSON form: `{tree, D, kappa, mode}` with the tree as an edge list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub tree: String,
    #[serde(rename = "D")]
    pub d: Vec<usize>,
    pub kappa: usize,
    pub mode: WitnessMode,
}

impl TreeWitness {
    pub fn record(&self, tree: &Graph) -> WitnessRecord {
        WitnessRecord {
            tree: write_graph(tree, Format::EdgeList).expect("edge lists always render"),
            d: self.dominating_set.to_vec(),
            kappa: self.components_after_removal,
            mode: self.mode,
        }
    }
}

fn kappa_after(t: &Graph, d: &VertexSet) -> usize {
    t.delete_vertices(d).expect("same host").0.component_count()
}

/// Finds `D` with κ(T − D) > |D| among the minimum dominating sets of a
/// tree, or `None` when the tree is a corona graph and no such set exists.
///
/// Brute force returns the first qualifying set in bitmask order. The
/// constructive mode splits the tree at a support vertex as in the
/// inductive argument and reassembles the pieces.
pub fn find_witness_partition(t: &Graph, mode: WitnessMode) -> Result<Option<TreeWitness>> {
    check_tree(t, 2)?;
    let d = match mode {
        WitnessMode::BruteForce => min_dominating_sets(t)?
            .into_iter()
            .find(|d| kappa_after(t, d) > d.len()),
        WitnessMode::Constructive => {
            if is_corona_graph(t)? {
                None
            } else {
                let d = VertexSet::from_vertices(t.order(), constructive(t)?)?;
                verify_witness(t, &d)?;
                Some(d)
            }
        }
    };
    Ok(d.map(|d| TreeWitness {
        components_after_removal: kappa_after(t, &d),
        dominating_set: d,
        mode,
    }))
}

fn verify_witness(t: &Graph, d: &VertexSet) -> Result<()> {
    if !is_dominating(t, d)? {
        return Err(Error::Construction(format!("{d} does not dominate")));
    }
    let g = gamma(t)?.value;
    if d.len() != g {
        return Err(Error::Construction(format!(
            "{d} has {} vertices, domination number is {g}",
            d.len()
        )));
    }
    let kappa = kappa_after(t, d);
    if kappa <= d.len() {
        return Err(Error::Construction(format!(
            "deleting {d} leaves only {kappa} components"
        )));
    }
    Ok(())
}

/// Vertices reachable from `start` without entering `blocked`.
fn component_avoiding(t: &Graph, start: usize, blocked: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; t.order()];
    for &b in blocked {
        seen[b] = true;
    }
    seen[start] = true;
    let mut comp = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &y in t.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                comp.push(y);
                queue.push_back(y);
            }
        }
    }
    comp.sort_unstable();
    comp
}

/// Splits `t` at the edge `v v'` into the subtree spanned by `side ∪ {v, v'}`
/// and the subtree on everything outside `side`. Returns each piece with
/// its vertex map back into `t`.
fn split(t: &Graph, side: &[usize], v: usize, v_leaf: usize) -> [(Graph, Vec<usize>); 2] {
    let mut first: Vec<usize> = side.iter().copied().chain([v, v_leaf]).collect();
    first.sort_unstable();
    let second: Vec<usize> = (0..t.order())
        .filter(|x| side.binary_search(x).is_err())
        .collect();
    [
        (t.induced_subgraph(&first), first),
        (t.induced_subgraph(&second), second),
    ]
}

/// Witness for a non-corona tree; the returned set contains every support
/// vertex and no leaf.
fn constructive(t: &Graph) -> Result<Vec<usize>> {
    let n = t.order();
    let (leaves, supports) = t.leaf_and_support_sets();

    // P3 and the star K_{1,3} are the only non-corona trees of order at
    // most four; the center alone works for both.
    if n <= 4 {
        if supports.len() != 1 {
            return Err(Error::Construction(format!(
                "unexpected small tree with supports {supports}"
            )));
        }
        return Ok(supports.to_vec());
    }

    if let Some(v) = supports.iter().find(|&s| t.degree(s) >= 3) {
        let v_leaf = *t
            .neighbors(v)
            .iter()
            .find(|&&u| leaves.contains(u))
            .expect("support has a leaf");
        let start = *t
            .neighbors(v)
            .iter()
            .find(|&&u| u != v_leaf)
            .expect("degree at least three");
        let side = component_avoiding(t, start, &[v, v_leaf]);
        let pieces = split(t, &side, v, v_leaf);

        let corona = [
            is_corona_graph(&pieces[0].0)?,
            is_corona_graph(&pieces[1].0)?,
        ];
        if corona[0] && corona[1] {
            return Err(Error::Construction(
                "both halves of a support split are corona graphs".into(),
            ));
        }
        let mut d = Vec::new();
        for ((piece, map), is_corona) in pieces.iter().zip(corona) {
            if piece.order() >= n {
                return Err(Error::Construction("split did not shrink the tree".into()));
            }
            let local = if is_corona {
                piece.leaf_and_support_sets().1.to_vec()
            } else {
                constructive(piece)?
            };
            d.extend(local.into_iter().map(|x| map[x]));
        }
        d.sort_unstable();
        d.dedup();
        return Ok(d);
    }

    let base = support_respecting_gamma_set(t)?;
    let Some(v) = base.iter().find(|&x| !supports.contains(x)) else {
        // every member is a support: the leaves become singletons and the
        // rest of the tree adds at least one more component
        return Ok(base.to_vec());
    };

    // Attach a new leaf v' to v and split the enlarged tree at v v'.
    let v1 = *t
        .neighbors(v)
        .iter()
        .find(|&&u| !base.contains(u))
        .expect("v has two neighbors outside the set");
    let v_leaf = n;
    let enlarged = Graph::from_edges(n + 1, t.edges().chain([(v, v_leaf)]))?;
    let side = component_avoiding(&enlarged, v1, &[v, v_leaf]);
    let pieces = split(&enlarged, &side, v, v_leaf);
    let mut d = Vec::new();
    for (piece, map) in &pieces {
        if piece.order() >= n {
            return Err(Error::Construction("split did not shrink the tree".into()));
        }
        if is_corona_graph(piece)? {
            return Err(Error::Construction(
                "half of an extended split is a corona graph".into(),
            ));
        }
        d.extend(constructive(piece)?.into_iter().map(|x| map[x]));
    }
    d.retain(|&x| x != v_leaf);
    d.sort_unstable();
    d.dedup();
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::corona_k1;
    use crate::graph::{build_standard, StandardFamily};

    fn path(n: usize) -> Graph {
        build_standard(StandardFamily::Path, &[n]).unwrap()
    }

    #[test]
    fn corona_recognition_examples() {
        assert!(is_corona_graph(&path(4)).unwrap());
        assert!(!is_corona_graph(&path(6)).unwrap());
        let c3 = build_standard(StandardFamily::Cycle, &[3]).unwrap();
        assert!(is_corona_graph(&corona_k1(&c3).unwrap()).unwrap());
        assert!(is_corona_graph(&path(2)).unwrap());
        assert!(!is_corona_graph(&path(1)).unwrap());
        assert!(!is_corona_graph(&path(3)).unwrap());
    }

    #[test]
    fn corona_recognition_errors() {
        assert_eq!(is_corona_graph(&Graph::empty(0)), Err(Error::EmptyGraph));
        assert_eq!(is_corona_graph(&Graph::empty(2)), Err(Error::Disconnected));
    }

    #[test]
    fn tree_equality_examples() {
        assert!(tree_gamma_a_equals_gamma(&path(7)).unwrap());
        assert!(!tree_gamma_a_equals_gamma(&path(4)).unwrap());
        assert!(!tree_gamma_a_equals_gamma(&path(2)).unwrap());
        assert!(tree_gamma_a_equals_gamma(&path(1)).is_err());
        let c4 = build_standard(StandardFamily::Cycle, &[4]).unwrap();
        assert_eq!(tree_gamma_a_equals_gamma(&c4), Err(Error::NotATree));
    }

    #[test]
    fn support_respecting_examples() {
        let star = build_standard(StandardFamily::CompleteBipartite, &[1, 4]).unwrap();
        assert_eq!(
            support_respecting_gamma_set(&star).unwrap().to_vec(),
            vec![0]
        );
        assert_eq!(
            support_respecting_gamma_set(&path(6)).unwrap().to_vec(),
            vec![1, 4]
        );
        let d = support_respecting_gamma_set(&path(7)).unwrap();
        assert_eq!(d.len(), 3);
        assert!(d.contains(1) && d.contains(5));
        assert!(support_respecting_gamma_set(&path(2)).is_err());
    }

    #[test]
    fn witness_examples() {
        for mode in [WitnessMode::BruteForce, WitnessMode::Constructive] {
            let w = find_witness_partition(&path(3), mode).unwrap().unwrap();
            assert_eq!(w.dominating_set.to_vec(), vec![1]);
            assert_eq!(w.components_after_removal, 2);

            let w = find_witness_partition(&path(7), mode).unwrap().unwrap();
            assert_eq!(w.dominating_set.to_vec(), vec![1, 3, 5], "{mode}");
            assert_eq!(w.components_after_removal, 4);

            assert_eq!(find_witness_partition(&path(4), mode).unwrap(), None);
        }
    }

    #[test]
    fn witness_json() {
        let t = path(3);
        let w = find_witness_partition(&t, WitnessMode::Constructive)
            .unwrap()
            .unwrap();
        assert_eq!(
            serde_json::to_string(&w.record(&t)).unwrap(),
            r#"{"tree":"3 2\n0 1\n1 2","D":[1],"kappa":2,"mode":"constructive"}"#
        );
    }
}
