//! Closed-form values and bounds for standard families and corona-type
//! constructions.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::corona::{GraphFamily, NeighborhoodPartition};
use crate::error::{Error, Result};
use crate::graph::{Graph, StandardFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PredictionKind {
    Exact,
    Bounds,
}

/// A predicted value: exact, or an inclusive interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub kind: PredictionKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    pub source: String,
}

impl Prediction {
    pub fn exact(value: usize, source: &str) -> Self {
        Prediction {
            kind: PredictionKind::Exact,
            value: Some(value),
            lower: value,
            upper: value,
            source: source.into(),
        }
    }

    pub fn bounds(lower: usize, upper: usize, source: &str) -> Self {
        debug_assert!(lower <= upper);
        Prediction {
            kind: PredictionKind::Bounds,
            value: None,
            lower,
            upper,
            source: source.into(),
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        (self.lower..=self.upper).contains(&x)
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "[{}, {}]", self.lower, self.upper),
        }
    }
}

/// Predictions for both parameters of one construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictionPair {
    pub gamma: Prediction,
    pub gamma_a: Prediction,
}

fn out_of_range(what: &str) -> Error {
    Error::InvalidParameter(what.into())
}

/// γ of a path, cycle, complete or complete bipartite graph.
pub fn gamma_closed(family: StandardFamily, params: &[usize]) -> Result<usize> {
    match (family, params) {
        (StandardFamily::Path, &[n]) if n >= 1 => Ok(n.div_ceil(3)),
        (StandardFamily::Cycle, &[n]) if n >= 3 => Ok(n.div_ceil(3)),
        (StandardFamily::Complete, &[n]) if n >= 1 => Ok(1),
        (StandardFamily::CompleteBipartite, &[m, n]) if m >= 1 && n >= 1 => {
            Ok(if m.min(n) == 1 { 1 } else { 2 })
        }
        _ => Err(out_of_range(&format!(
            "{family:?} with parameters {params:?}"
        ))),
    }
}

/// Families with a known accurate domination number. `K_{n,n}` and
/// `K_{m,n}` with `n > m` follow different formulas and are kept apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFamily {
    Path,
    Cycle,
    Complete,
    CompleteBipartiteEqual,
    CompleteBipartiteUnequal,
}

impl FromStr for ClosedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(ClosedFamily::Path),
            "cycle" => Ok(ClosedFamily::Cycle),
            "complete" => Ok(ClosedFamily::Complete),
            "complete-bipartite-equal" | "complete_bipartite_equal" => {
                Ok(ClosedFamily::CompleteBipartiteEqual)
            }
            "complete-bipartite-unequal" | "complete_bipartite_unequal" => {
                Ok(ClosedFamily::CompleteBipartiteUnequal)
            }
            other => Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
        }
    }
}

/// γₐ of the family member with the given parameters: `[n]`, `[n]` for
/// `K_{n,n}`, or `[m, n]` with `n > m` for `K_{m,n}`.
pub fn gamma_a_closed(family: ClosedFamily, params: &[usize]) -> Result<usize> {
    match (family, params) {
        (ClosedFamily::Complete, &[n]) if n >= 1 => Ok(n / 2 + 1),
        (ClosedFamily::CompleteBipartiteEqual, &[n]) if n >= 1 => Ok(n + 1),
        (ClosedFamily::CompleteBipartiteUnequal, &[m, n]) if n > m && m >= 1 => Ok(m),
        // the 3/n term is 1 only at n = 3
        (ClosedFamily::Cycle, &[n]) if n >= 3 => Ok(n / 3 - 3 / n + 2),
        (ClosedFamily::Path, &[n]) if n >= 1 => Ok(n.div_ceil(3) + usize::from(n == 2 || n == 4)),
        (ClosedFamily::CompleteBipartiteUnequal, &[m, n]) if m >= n => Err(out_of_range(&format!(
            "K_{{m,n}} needs n > m, got m = {m}, n = {n}; use the equal form for m = n"
        ))),
        _ => Err(out_of_range(&format!(
            "{family:?} with parameters {params:?}"
        ))),
    }
}

/// Predictions for `G∘F` given γ of every member.
///
/// γ is always `n(G)`. γₐ is also `n(G)` exactly when some member has
/// γ > 1; otherwise it lies strictly above `n(G)` and at most
/// `n(G) + min n(F_v)`, with no exact formula known in general.
pub fn f_corona_predict(fam: &GraphFamily, gamma_of_members: &[usize]) -> Result<PredictionPair> {
    let n = fam.base().order();
    if gamma_of_members.len() != n {
        return Err(Error::InvalidFamily(format!(
            "{} member values for {n} base vertices",
            gamma_of_members.len()
        )));
    }
    for (v, (f, &g)) in fam.members().iter().zip(gamma_of_members).enumerate() {
        let has_universal = !f.universal_vertices().is_empty();
        if g == 0 || g > f.order() || (g == 1) != has_universal {
            return Err(Error::InvalidFamily(format!(
                "γ = {g} is impossible for the member at vertex {v}"
            )));
        }
    }
    let gamma = Prediction::exact(n, "f-corona");
    let gamma_a = if gamma_of_members.iter().any(|&g| g > 1) {
        Prediction::exact(n, "f-corona")
    } else {
        let smallest = fam.members().iter().map(Graph::order).min().unwrap_or(0);
        if smallest == 1 && fam.members().iter().all(|f| f.order() == 1) {
            Prediction::exact(n + 1, "corona-k1")
        } else {
            Prediction::bounds(n + 1, n + smallest, "f-corona-bounds")
        }
    };
    Ok(PredictionPair { gamma, gamma_a })
}

/// [`f_corona_predict`] with member values taken from the exact solver.
pub fn f_corona_predict_solved(fam: &GraphFamily) -> Result<PredictionPair> {
    let gammas = fam
        .members()
        .iter()
        .map(|f| crate::solver::gamma(f).map(|r| r.value))
        .collect::<Result<Vec<_>>>()?;
    f_corona_predict(fam, &gammas)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseKind {
    General,
    Tree,
    Cycle,
}

impl FromStr for BaseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(BaseKind::General),
            "tree" => Ok(BaseKind::Tree),
            "cycle" => Ok(BaseKind::Cycle),
            other => Err(Error::InvalidParameter(format!(
                "unknown base kind `{other}`"
            ))),
        }
    }
}

/// Predictions for `G∘P`.
///
/// γ is always `n(G)`. In general γₐ is at least `n(G)` and at most
/// `n(G)` plus the smaller of the fewest blocks at a vertex and one more
/// than the smallest block. Trees and cycles are settled exactly.
pub fn p_corona_predict(part: &NeighborhoodPartition, kind: BaseKind) -> Result<PredictionPair> {
    let g = part.base();
    let n = g.order();
    let counts: Vec<usize> = (0..n).map(|v| part.block_count(v)).collect();
    let gamma = Prediction::exact(n, "p-corona");
    let gamma_a = match kind {
        BaseKind::General => {
            let fewest = counts.iter().copied().min().unwrap_or(0);
            let smallest = (0..n)
                .flat_map(|v| part.blocks(v).iter().map(Vec::len))
                .min();
            match smallest {
                Some(a) if fewest > 0 => {
                    Prediction::bounds(n, n + fewest.min(1 + a), "p-corona-bounds")
                }
                // an isolated base vertex has no blocks; only the trivial
                // upper bound survives
                _ => Prediction::bounds(n, n + part.total_blocks(), "p-corona-trivial-bounds"),
            }
        }
        BaseKind::Tree => {
            if !g.is_tree() || n < 2 {
                return Err(Error::InvalidParameter(
                    "base of kind tree must be a tree with at least 2 vertices".into(),
                ));
            }
            if counts.iter().all(|&c| c == 1) {
                Prediction::exact(n + 1, "p-corona-tree")
            } else {
                Prediction::exact(n, "p-corona-tree")
            }
        }
        BaseKind::Cycle => {
            if !g.is_cycle() {
                return Err(Error::InvalidParameter(
                    "base of kind cycle must be a cycle".into(),
                ));
            }
            if counts.iter().all(|&c| c == 1) {
                Prediction::exact(n + 1, "p-corona-cycle")
            } else if counts.iter().all(|&c| c == 2) {
                Prediction::exact(n + 2, "p-corona-cycle")
            } else {
                Prediction::exact(n, "p-corona-cycle")
            }
        }
    };
    Ok(PredictionPair { gamma, gamma_a })
}

/// `(γ, γₐ)` of the subdivision `S2(G)` for connected `G`.
pub fn s2_predict(g: &Graph) -> Result<(usize, usize)> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let gamma_a = if g.is_cycle() {
        n + 2
    } else if n == 2 {
        n + 1
    } else {
        n
    };
    Ok((n, gamma_a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_standard;

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_closed(StandardFamily::Path, &[7]).unwrap(), 3);
        assert_eq!(gamma_closed(StandardFamily::Cycle, &[6]).unwrap(), 2);
        assert_eq!(gamma_closed(StandardFamily::Complete, &[9]).unwrap(), 1);
        assert_eq!(
            gamma_closed(StandardFamily::CompleteBipartite, &[1, 5]).unwrap(),
            1
        );
        assert_eq!(
            gamma_closed(StandardFamily::CompleteBipartite, &[3, 5]).unwrap(),
            2
        );
        assert!(gamma_closed(StandardFamily::Cycle, &[2]).is_err());
    }

    #[test]
    fn gamma_a_examples() {
        assert_eq!(gamma_a_closed(ClosedFamily::Complete, &[6]).unwrap(), 4);
        assert_eq!(gamma_a_closed(ClosedFamily::Cycle, &[4]).unwrap(), 3);
        assert_eq!(gamma_a_closed(ClosedFamily::Cycle, &[3]).unwrap(), 2);
        assert_eq!(gamma_a_closed(ClosedFamily::Path, &[4]).unwrap(), 3);
        assert_eq!(gamma_a_closed(ClosedFamily::Path, &[2]).unwrap(), 2);
        assert_eq!(gamma_a_closed(ClosedFamily::Path, &[7]).unwrap(), 3);
        assert_eq!(
            gamma_a_closed(ClosedFamily::CompleteBipartiteEqual, &[3]).unwrap(),
            4
        );
        assert_eq!(
            gamma_a_closed(ClosedFamily::CompleteBipartiteUnequal, &[2, 5]).unwrap(),
            2
        );
        assert!(gamma_a_closed(ClosedFamily::CompleteBipartiteUnequal, &[3, 3]).is_err());
        assert!(gamma_a_closed(ClosedFamily::Path, &[0]).is_err());
    }

    #[test]
    fn f_corona_cases() {
        let k1 = Graph::empty(1);
        let k2 = build_standard(StandardFamily::Complete, &[2]).unwrap();
        let p3 = build_standard(StandardFamily::Path, &[3]).unwrap();

        let all_k1 = GraphFamily::uniform(p3.clone(), &k1).unwrap();
        let p = f_corona_predict(&all_k1, &[1, 1, 1]).unwrap();
        assert_eq!(p.gamma, Prediction::exact(3, "f-corona"));
        assert_eq!((p.gamma_a.lower, p.gamma_a.upper), (4, 4));

        let single = GraphFamily::uniform(k1.clone(), &k2).unwrap();
        let p = f_corona_predict(&single, &[1]).unwrap();
        assert_eq!(p.gamma_a, Prediction::bounds(2, 3, "f-corona-bounds"));

        let empty2 = Graph::empty(2);
        let mixed = GraphFamily::new(k2.clone(), vec![empty2, k1]).unwrap();
        let p = f_corona_predict(&mixed, &[2, 1]).unwrap();
        assert_eq!(p.gamma_a.value, Some(2));

        assert!(f_corona_predict(&mixed, &[1, 1]).is_err());
        assert!(f_corona_predict(&mixed, &[2]).is_err());
    }

    #[test]
    fn p_corona_cases() {
        let p3 = build_standard(StandardFamily::Path, &[3]).unwrap();
        let p = p_corona_predict(
            &NeighborhoodPartition::singletons(p3.clone()),
            BaseKind::Tree,
        )
        .unwrap();
        assert_eq!(p.gamma_a.value, Some(3));
        let p =
            p_corona_predict(&NeighborhoodPartition::whole(p3.clone()), BaseKind::Tree).unwrap();
        assert_eq!(p.gamma_a.value, Some(4));

        let c4 = build_standard(StandardFamily::Cycle, &[4]).unwrap();
        let whole = NeighborhoodPartition::whole(c4.clone());
        assert_eq!(
            p_corona_predict(&whole, BaseKind::Cycle)
                .unwrap()
                .gamma_a
                .value,
            Some(5)
        );
        let single = NeighborhoodPartition::singletons(c4.clone());
        assert_eq!(
            p_corona_predict(&single, BaseKind::Cycle)
                .unwrap()
                .gamma_a
                .value,
            Some(6)
        );

        let general = p_corona_predict(&single, BaseKind::General).unwrap();
        assert_eq!((general.gamma_a.lower, general.gamma_a.upper), (4, 6));

        assert!(p_corona_predict(&whole, BaseKind::Tree).is_err());
        assert!(p_corona_predict(&NeighborhoodPartition::whole(p3), BaseKind::Cycle).is_err());
    }

    #[test]
    fn s2_cases() {
        let c4 = build_standard(StandardFamily::Cycle, &[4]).unwrap();
        assert_eq!(s2_predict(&c4).unwrap(), (4, 6));
        let k2 = build_standard(StandardFamily::Path, &[2]).unwrap();
        assert_eq!(s2_predict(&k2).unwrap(), (2, 3));
        let p5 = build_standard(StandardFamily::Path, &[5]).unwrap();
        assert_eq!(s2_predict(&p5).unwrap(), (5, 5));
        assert_eq!(s2_predict(&Graph::empty(2)), Err(Error::Disconnected));
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&Prediction::bounds(4, 6, "x")).unwrap();
        assert_eq!(
            json,
            r#"{"kind":"bounds","lower":4,"upper":6,"source":"x"}"#
        );
        let json = serde_json::to_string(&Prediction::exact(5, "y")).unwrap();
        assert_eq!(
            json,
            r#"{"kind":"exact","value":5,"lower":5,"upper":5,"source":"y"}"#
        );
    }
}
