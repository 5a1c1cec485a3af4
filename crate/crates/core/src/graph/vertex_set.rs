use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A subset of the vertices `0..host_size` of some graph.
///
/// Ordering compares sets as the unsigned integers whose bit `v` is set for
/// each member `v`, so sorting a list of sets gives ascending bitmask order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    host: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(host: usize) -> Self {
        VertexSet {
            host,
            words: vec![0; host.div_ceil(64)],
        }
    }

    pub fn full(host: usize) -> Self {
        let mut set = VertexSet::new(host);
        for (i, w) in set.words.iter_mut().enumerate() {
            let remaining = host - i * 64;
            *w = if remaining >= 64 {
                u64::MAX
            } else {
                (1u64 << remaining) - 1
            };
        }
        set
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(host: usize, vertices: I) -> Result<Self> {
        let mut set = VertexSet::new(host);
        for v in vertices {
            if v >= host {
                return Err(Error::InvalidVertex {
                    vertex: v,
                    order: host,
                });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Builds a set from a bitmask; bits at or above `host` are rejected.
    pub fn from_mask(host: usize, mask: u64) -> Result<Self> {
        if host < 64 && mask >> host != 0 {
            return Err(Error::InvalidVertex {
                vertex: 63 - mask.leading_zeros() as usize,
                order: host,
            });
        }
        let mut set = VertexSet::new(host);
        if host > 0 {
            set.words[0] = mask;
        } else if mask != 0 {
            return Err(Error::InvalidVertex {
                vertex: mask.trailing_zeros() as usize,
                order: 0,
            });
        }
        Ok(set)
    }

    /// The membership bitmask, available when the host has at most 64 vertices.
    pub fn mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn host_size(&self) -> usize {
        self.host
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.host && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Panics if `v` is outside the host.
    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.host,
            "vertex {v} outside host of size {}",
            self.host
        );
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.host {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_host(&self, other: &VertexSet) {
        assert_eq!(self.host, other.host, "vertex sets over different hosts");
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check_host(other);
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check_host(other);
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.check_host(other);
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::full(self.host).difference(self)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_host(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_host(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        VertexSet {
            host: self.host,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.host.cmp(&other.host).then_with(|| {
            for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
