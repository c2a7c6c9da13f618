//! Labelings by Perrin indices, induced edge labels, tallies and the
//! cordiality test.
//!
//! A labeling of a graph on `n` vertices assigns distinct indices from
//! `{0..=n}`, so exactly one index is left unused. Injectivity is on indices,
//! not values: `P_0 = P_2 = 0` may appear together.
//!
//! Only label parities reach the edge labels, so most of the work happens on a
//! [`ParityPattern`]. With `S` the even-labeled vertex set,
//! `e0 - e1 = |E| - 2 * cut(S)`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perrin::{even_count, even_indices, odd_count, odd_indices, perrin_parity, Parity};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerrinLabeling {
    pub domain_max: usize,
    /// vertex -> Perrin index
    pub assignment: BTreeMap<usize, usize>,
}

impl PerrinLabeling {
    /// Vertex `v` gets `indices[v]`.
    pub fn from_indices(domain_max: usize, indices: &[usize]) -> Self {
        Self {
            domain_max,
            assignment: indices.iter().copied().enumerate().collect(),
        }
    }

    pub fn index_of(&self, v: usize) -> Option<usize> {
        self.assignment.get(&v).copied()
    }

    /// Indices in vertex order, if every vertex `0..len` is labeled.
    pub fn indices(&self) -> Option<Vec<usize>> {
        self.assignment
            .iter()
            .enumerate()
            .all(|(k, (&v, _))| k == v)
            .then(|| self.assignment.values().copied().collect())
    }

    /// The one index of `{0..=domain_max}` left unused, for a valid labeling.
    pub fn skipped_index(&self) -> Option<usize> {
        let used: BTreeSet<usize> = self.assignment.values().copied().collect();
        (0..=self.domain_max).find(|i| !used.contains(i))
    }

    /// Structural checks that do not need the graph: labeled vertices are
    /// exactly `0..domain_max`, indices lie in `0..=domain_max` and are
    /// pairwise distinct.
    pub fn validate(&self) -> Result<()> {
        if self.assignment.len() != self.domain_max {
            return Err(Error::InvalidLabeling(format!(
                "{} vertices labeled, domain_max is {}",
                self.assignment.len(),
                self.domain_max
            )));
        }
        if let Some((&v, _)) = self.assignment.iter().find(|(&v, _)| v >= self.domain_max) {
            return Err(Error::InvalidLabeling(format!(
                "vertex {v} outside 0..{}",
                self.domain_max
            )));
        }
        let mut seen = vec![false; self.domain_max + 1];
        for (&v, &i) in &self.assignment {
            if i > self.domain_max {
                return Err(Error::InvalidLabeling(format!(
                    "vertex {v} has index {i} > domain_max {}",
                    self.domain_max
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidLabeling(format!("index {i} used twice")));
            }
        }
        Ok(())
    }
}

/// Per-vertex parities of a labeling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParityPattern(pub Vec<Parity>);

impl ParityPattern {
    pub fn new(parities: Vec<Parity>) -> Self {
        Self(parities)
    }

    /// Vertices in `evens` are even, everything else odd.
    pub fn from_even_set(len: usize, evens: impl IntoIterator<Item = usize>) -> Self {
        let mut p = vec![Parity::Odd; len];
        for v in evens {
            p[v] = Parity::Even;
        }
        Self(p)
    }

    /// Bit `v` of `mask` set means vertex `v` is even.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        Self(
            (0..len)
                .map(|v| {
                    if mask >> v & 1 == 1 {
                        Parity::Even
                    } else {
                        Parity::Odd
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parities(&self) -> &[Parity] {
        &self.0
    }

    pub fn even_vertex_count(&self) -> usize {
        self.0.iter().filter(|p| p.is_even()).count()
    }

    pub fn complement(&self) -> Self {
        Self(self.0.iter().map(|p| p.flip()).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeTally {
    pub e0: usize,
    pub e1: usize,
}

impl EdgeTally {
    pub fn epsilon(&self) -> i64 {
        self.e0 as i64 - self.e1 as i64
    }
}

/// `0` when both endpoints share a parity, `1` otherwise.
pub fn induced_edge_label(pu: Parity, pv: Parity) -> u8 {
    u8::from(pu != pv)
}

pub fn tally(g: &Graph, pattern: &ParityPattern) -> Result<EdgeTally> {
    if pattern.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            got: pattern.len(),
        });
    }
    let p = pattern.parities();
    let e1 = g
        .edges()
        .iter()
        .filter(|&&(u, v)| induced_edge_label(p[u], p[v]) == 1)
        .count();
    Ok(EdgeTally {
        e0: g.edge_count() - e1,
        e1,
    })
}

pub fn is_cordial(t: &EdgeTally) -> bool {
    t.epsilon().abs() <= 1
}

/// Injective, indices within `{0..=|V|}`, every vertex labeled.
pub fn is_valid(g: &Graph, f: &PerrinLabeling) -> bool {
    validate_for(g, f).is_ok()
}

/// [`is_valid`] with the reason for rejection.
pub fn validate_for(g: &Graph, f: &PerrinLabeling) -> Result<()> {
    if f.domain_max != g.vertex_count() {
        return Err(Error::InvalidLabeling(format!(
            "domain_max {} does not match {} vertices",
            f.domain_max,
            g.vertex_count()
        )));
    }
    f.validate()
}

pub fn to_parity(f: &PerrinLabeling) -> Result<ParityPattern> {
    f.validate()?;
    Ok(ParityPattern(
        f.assignment.values().map(|&i| perrin_parity(i)).collect(),
    ))
}

/// Tally of a labeling on a graph, after checking validity.
pub fn tally_labeling(g: &Graph, f: &PerrinLabeling) -> Result<EdgeTally> {
    validate_for(g, f)?;
    tally(g, &to_parity(f)?)
}

/// Whether a pattern on `n` vertices can be realized with indices `{0..=n}`.
pub fn realizable(n: usize, even_vertices: usize) -> bool {
    even_vertices <= even_count(n) && n - even_vertices <= odd_count(n)
}

/// Canonical labeling with the given parities: even vertices in vertex order
/// take the even indices in ascending order, odd vertices likewise.
pub fn realize(g: &Graph, pattern: &ParityPattern) -> Result<PerrinLabeling> {
    let n = g.vertex_count();
    if pattern.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: pattern.len(),
        });
    }
    let evens_needed = pattern.even_vertex_count();
    let odds_needed = n - evens_needed;
    let evens = even_indices(n);
    let odds = odd_indices(n);
    if evens_needed > evens.len() {
        return Err(Error::InsufficientEvenLabels {
            required: evens_needed,
            available: evens.len(),
        });
    }
    if odds_needed > odds.len() {
        return Err(Error::InsufficientOddLabels {
            required: odds_needed,
            available: odds.len(),
        });
    }
    let (mut ev, mut od) = (evens.into_iter(), odds.into_iter());
    let assignment = pattern
        .parities()
        .iter()
        .enumerate()
        .map(|(v, p)| {
            let i = match p {
                Parity::Even => ev.next(),
                Parity::Odd => od.next(),
            };
            (v, i.expect("availability checked above"))
        })
        .collect();
    Ok(PerrinLabeling {
        domain_max: n,
        assignment,
    })
}

/// Every cut of a graph with all degrees even has even size, so such a graph
/// with `|E| = 2 (mod 4)` can never reach `e1 = |E| / 2`. Returns the reason
/// when this obstruction applies.
pub fn parity_obstruction(g: &Graph) -> Option<String> {
    let m = g.edge_count();
    if m % 4 == 2 && g.degrees().iter().all(|d| d % 2 == 0) {
        Some(format!(
            "all degrees even so every cut is even, but |E| = {m} needs an odd cut of {}",
            m / 2
        ))
    } else {
        None
    }
}
