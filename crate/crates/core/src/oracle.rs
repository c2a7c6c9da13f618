//! Feasibility deciders.
//!
//! [`decide_exhaustive`] works on any small graph. Only the set `S` of
//! even-labeled vertices matters, `e0 - e1 = |E| - 2 cut(S)`, and with indices
//! `{0..=n}` the size of `S` must be `E - 1` or `E` where `E = even_count(n)`.
//! So the search runs over at most `C(n, E - 1) + C(n, E)` vertex subsets
//! instead of labelings.
//!
//! Enumeration order: sizes ascending (`E - 1` before `E`), and within one
//! size the subsets as bitmasks (bit `v` = vertex `v`) in increasing numeric
//! order. The witness is always the first feasible subset in that order,
//! whether or not the search runs in parallel.
//!
//! The remaining deciders handle families whose tally depends only on a few
//! counts, and run in time linear in the parameters.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{FamilySpec, Graph};
use crate::labeling::{realizable, realize, ParityPattern, PerrinLabeling};
use crate::perrin::even_count;

pub const DEFAULT_MAX_VERTICES: usize = 24;
/// Bitmask width.
pub const HARD_MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_vertices: usize,
    pub parallel: bool,
    pub want_witness: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_MAX_VERTICES,
            parallel: false,
            want_witness: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Feasible {
        witness: Option<PerrinLabeling>,
        searched: u64,
    },
    Infeasible {
        reason: String,
        searched: u64,
    },
}

impl Verdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Verdict::Feasible { .. })
    }

    pub fn searched(&self) -> u64 {
        match self {
            Verdict::Feasible { searched, .. } | Verdict::Infeasible { searched, .. } => *searched,
        }
    }

    pub fn witness(&self) -> Option<&PerrinLabeling> {
        match self {
            Verdict::Feasible { witness, .. } => witness.as_ref(),
            Verdict::Infeasible { .. } => None,
        }
    }
}

/// Even-set sizes allowed on `n` vertices, ascending.
pub fn even_set_sizes(n: usize) -> Vec<usize> {
    let e = even_count(n);
    [e.checked_sub(1), Some(e)]
        .into_iter()
        .flatten()
        .filter(|&s| realizable(n, s))
        .collect()
}

/// Next bitmask with the same popcount (Gosper's hack). `None` on overflow.
fn next_same_popcount(x: u64) -> Option<u64> {
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    Some((((r ^ x) >> 2) / c) | r)
}

/// Iterates `k`-subsets of `{0..n}` as bitmasks in increasing numeric order.
#[derive(Clone, Debug)]
pub struct FixedPopcount {
    next: Option<u64>,
    limit: u64,
}

impl FixedPopcount {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= 63, "bitmask enumeration limited to 63 bits");
        let limit = 1u64 << n;
        let first = if k > n { None } else { Some((1u64 << k) - 1) };
        Self { next: first, limit }
    }
}

impl Iterator for FixedPopcount {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        if cur >= self.limit {
            self.next = None;
            return None;
        }
        self.next = if cur == 0 {
            None
        } else {
            next_same_popcount(cur)
        };
        Some(cur)
    }
}

fn cut(adj: &[u64], set: u64) -> u32 {
    let mut rest = set;
    let mut total = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        total += (adj[v] & !set).count_ones();
    }
    total
}

struct Space<'a> {
    adj: &'a [u64],
    edges: i64,
}

impl Space<'_> {
    fn feasible(&self, set: u64) -> bool {
        (self.edges - 2 * i64::from(cut(self.adj, set))).abs() <= 1
    }

    /// Scans one size sequentially; returns (first hit, subsets examined).
    fn scan(&self, n: usize, k: usize) -> (Option<u64>, u64) {
        let mut searched = 0;
        for set in FixedPopcount::new(n, k) {
            searched += 1;
            if self.feasible(set) {
                return (Some(set), searched);
            }
        }
        (None, searched)
    }

    /// Same result as [`Self::scan`]. Work is split by the highest member
    /// `h`, whose blocks are contiguous in numeric order, so the first block
    /// with a hit holds the sequential answer and the examined count is the
    /// sum over blocks up to it.
    fn scan_parallel(&self, n: usize, k: usize) -> (Option<u64>, u64) {
        if k == 0 {
            return self.scan(n, k);
        }
        let best = AtomicUsize::new(usize::MAX);
        let blocks: Vec<(usize, Option<u64>, u64)> = (k - 1..n)
            .into_par_iter()
            .map(|h| {
                let top = 1u64 << h;
                let mut searched = 0;
                for low in FixedPopcount::new(h, k - 1) {
                    if best.load(Ordering::Relaxed) < h {
                        // an earlier block already has a hit; this count is discarded
                        return (h, None, searched);
                    }
                    searched += 1;
                    let set = top | low;
                    if self.feasible(set) {
                        best.fetch_min(h, Ordering::Relaxed);
                        return (h, Some(set), searched);
                    }
                }
                (h, None, searched)
            })
            .collect();
        let mut searched = 0;
        for (_, hit, count) in blocks {
            searched += count;
            if hit.is_some() {
                return (hit, searched);
            }
        }
        (None, searched)
    }
}

/// Exhaustive decision for an arbitrary graph with at most
/// `cfg.max_vertices` vertices.
pub fn decide_exhaustive(g: &Graph, cfg: &SearchConfig) -> Result<Verdict> {
    let n = g.vertex_count();
    let cap = cfg.max_vertices.min(HARD_MAX_VERTICES - 1);
    if n > cap {
        return Err(Error::GraphTooLarge { vertices: n, cap });
    }
    let adj = g
        .adjacency_masks()
        .expect("vertex count checked against cap");
    let space = Space {
        adj: &adj,
        edges: g.edge_count() as i64,
    };
    let sizes = even_set_sizes(n);
    let mut searched = 0;
    for &k in &sizes {
        let (hit, count) = if cfg.parallel {
            space.scan_parallel(n, k)
        } else {
            space.scan(n, k)
        };
        searched += count;
        if let Some(set) = hit {
            let witness = if cfg.want_witness {
                Some(realize(g, &ParityPattern::from_mask(n, set))?)
            } else {
                None
            };
            return Ok(Verdict::Feasible { witness, searched });
        }
    }
    Ok(Verdict::Infeasible {
        reason: format!(
            "no even set of size {sizes:?} gives |e0 - e1| <= 1 ({searched} sets examined)"
        ),
        searched,
    })
}

fn count_level(
    spec: FamilySpec,
    hit: Option<ParityPattern>,
    searched: u64,
    what: &str,
) -> Result<Verdict> {
    match hit {
        Some(pattern) => {
            let g = spec.generate()?;
            Ok(Verdict::Feasible {
                witness: Some(realize(&g, &pattern)?),
                searched,
            })
        }
        None => Ok(Verdict::Infeasible {
            reason: format!("{what}: no admissible count vector ({searched} examined)"),
            searched,
        }),
    }
}

/// `K_{m,n}`: feasible iff some `p1 <= m`, `p2 <= n` with `p1 + p2` an
/// allowed even count has `|(m - 2 p1)(n - 2 p2)| <= 1`.
pub fn decide_bipartite(m: usize, n: usize) -> Result<Verdict> {
    let spec = FamilySpec::CompleteBipartite(m, n);
    spec.validate()?;
    let mut searched = 0;
    let mut hit = None;
    'outer: for s in even_set_sizes(m + n) {
        for p1 in 0..=m.min(s) {
            let p2 = s - p1;
            if p2 > n {
                continue;
            }
            searched += 1;
            let eps = (m as i64 - 2 * p1 as i64) * (n as i64 - 2 * p2 as i64);
            if eps.abs() <= 1 {
                hit = Some(ParityPattern::from_even_set(
                    m + n,
                    (0..p1).chain(m..m + p2),
                ));
                break 'outer;
            }
        }
    }
    count_level(spec, hit, searched, "complete bipartite")
}

/// `B_{m,n}` over all four apex parities. With apex parities fixed, the
/// tally depends only on how many pendants of each apex are even.
pub fn decide_bistar_full(m: usize, n: usize) -> Result<Verdict> {
    let spec = FamilySpec::Bistar(m, n);
    spec.validate()?;
    let edges = (m + n + 1) as i64;
    let mut searched = 0;
    let mut hit = None;
    'outer: for s in even_set_sizes(m + n + 2) {
        for (u_even, v_even) in [(false, false), (false, true), (true, false), (true, true)] {
            let apex_evens = usize::from(u_even) + usize::from(v_even);
            let Some(pendant_evens) = s.checked_sub(apex_evens) else {
                continue;
            };
            for p1 in 0..=m.min(pendant_evens) {
                let p2 = pendant_evens - p1;
                if p2 > n {
                    continue;
                }
                searched += 1;
                let e1 = usize::from(u_even != v_even)
                    + if u_even { m - p1 } else { p1 }
                    + if v_even { n - p2 } else { p2 };
                if (edges - 2 * e1 as i64).abs() <= 1 {
                    let mut evens: Vec<usize> = Vec::new();
                    if u_even {
                        evens.push(0);
                    }
                    if v_even {
                        evens.push(1);
                    }
                    evens.extend(2..2 + p1);
                    evens.extend(m + 2..m + 2 + p2);
                    hit = Some(ParityPattern::from_even_set(m + n + 2, evens));
                    break 'outer;
                }
            }
        }
    }
    count_level(spec, hit, searched, "bistar")
}

/// `J_{m1,m2}` over all sixteen internal parity patterns and all even-pendant
/// counts.
pub fn decide_jellyfish(m1: usize, m2: usize) -> Result<Verdict> {
    let spec = FamilySpec::Jellyfish(m1, m2);
    const INTERNAL: [(usize, usize); 5] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];
    let edges = (m1 + m2 + 5) as i64;
    let mut searched = 0;
    let mut hit = None;
    'outer: for s in even_set_sizes(m1 + m2 + 4) {
        for mask in 0u8..16 {
            let even = |i: usize| mask >> i & 1 == 1;
            let internal_evens = mask.count_ones() as usize;
            let Some(pendant_evens) = s.checked_sub(internal_evens) else {
                continue;
            };
            let internal_cut = INTERNAL
                .iter()
                .filter(|&&(a, b)| even(a) != even(b))
                .count();
            for k1 in 0..=m1.min(pendant_evens) {
                let k2 = pendant_evens - k1;
                if k2 > m2 {
                    continue;
                }
                searched += 1;
                let e1 = internal_cut
                    + if even(2) { m1 - k1 } else { k1 }
                    + if even(3) { m2 - k2 } else { k2 };
                if (edges - 2 * e1 as i64).abs() <= 1 {
                    let evens = (0..4)
                        .filter(|&i| even(i))
                        .chain(4..4 + k1)
                        .chain(4 + m1..4 + m1 + k2);
                    hit = Some(ParityPattern::from_even_set(m1 + m2 + 4, evens));
                    break 'outer;
                }
            }
        }
    }
    count_level(spec, hit, searched, "jellyfish")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{is_cordial, is_valid, tally_labeling, to_parity};
    use crate::perrin::Parity::{Even as E, Odd as O};

    fn binom(n: usize, k: usize) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
    }

    fn check_witness(g: &Graph, v: &Verdict) {
        if let Some(w) = v.witness() {
            assert!(is_valid(g, w));
            assert!(is_cordial(&tally_labeling(g, w).unwrap()));
        }
    }

    #[test]
    fn popcount_iterator_is_ordered_and_complete() {
        for n in 0..=10 {
            for k in 0..=n {
                let got: Vec<u64> = FixedPopcount::new(n, k).collect();
                let want: Vec<u64> = (0..1u64 << n)
                    .filter(|x| x.count_ones() as usize == k)
                    .collect();
                assert_eq!(got, want, "n={n} k={k}");
            }
        }
        assert_eq!(FixedPopcount::new(3, 4).count(), 0);
    }

    #[test]
    fn cycle_six_is_infeasible() {
        let g = FamilySpec::Cycle(6).generate().unwrap();
        assert!(!decide_exhaustive(&g, &SearchConfig::default())
            .unwrap()
            .is_feasible());
    }

    #[test]
    fn triangle_is_feasible() {
        let g = FamilySpec::Cycle(3).generate().unwrap();
        let v = decide_exhaustive(&g, &SearchConfig::default()).unwrap();
        check_witness(&g, &v);
        let w = v.witness().unwrap();
        let p = to_parity(w).unwrap();
        assert_eq!(p.even_vertex_count(), 2);
        // least 2-subset in numeric order is {0, 1}
        assert_eq!(p.0, vec![E, E, O]);
        // the example labeling {0,1,2} -> (E,O,E) is feasible too
        let ex = PerrinLabeling::from_indices(3, &[0, 1, 2]);
        assert_eq!(tally_labeling(&g, &ex).unwrap().epsilon(), -1);
    }

    #[test]
    fn k5_is_infeasible() {
        let g = FamilySpec::Complete(5).generate().unwrap();
        assert!(!decide_exhaustive(&g, &SearchConfig::default())
            .unwrap()
            .is_feasible());
    }

    #[test]
    fn cap_is_enforced() {
        let g = FamilySpec::Path(30).generate().unwrap();
        let err = decide_exhaustive(&g, &SearchConfig::default()).unwrap_err();
        assert!(matches!(
            err,
            Error::GraphTooLarge {
                vertices: 30,
                cap: 24
            }
        ));
        let cfg = SearchConfig {
            max_vertices: 30,
            ..Default::default()
        };
        assert!(decide_exhaustive(&g, &cfg).unwrap().is_feasible());
    }

    #[test]
    fn searched_is_bounded_by_the_binomials() {
        for spec in [
            FamilySpec::Cycle(10),
            FamilySpec::Cycle(14),
            FamilySpec::Complete(7),
            FamilySpec::Friendship(6),
            FamilySpec::Wheel(12),
        ] {
            let g = spec.generate().unwrap();
            let n = g.vertex_count();
            let e = even_count(n);
            let bound = binom(n, e) + binom(n, e - 1);
            let v = decide_exhaustive(&g, &SearchConfig::default()).unwrap();
            assert!(v.searched() <= bound, "{spec}");
            if !v.is_feasible() {
                let sizes = even_set_sizes(n);
                let all: u64 = sizes.iter().map(|&k| binom(n, k)).sum();
                assert_eq!(v.searched(), all, "{spec}");
            }
        }
    }

    #[test]
    fn parallel_matches_sequential_exactly() {
        let par = SearchConfig {
            parallel: true,
            ..Default::default()
        };
        for spec in [
            FamilySpec::Cycle(9),
            FamilySpec::Cycle(10),
            FamilySpec::Wheel(11),
            FamilySpec::Complete(6),
            FamilySpec::Complete(7),
            FamilySpec::Jellyfish(3, 5),
            FamilySpec::TriangularSnake(5),
            FamilySpec::Bistar(4, 7),
        ] {
            let g = spec.generate().unwrap();
            let a = decide_exhaustive(&g, &SearchConfig::default()).unwrap();
            let b = decide_exhaustive(&g, &par).unwrap();
            assert_eq!(a, b, "{spec}");
        }
    }

    #[test]
    fn no_witness_mode_keeps_the_verdict() {
        let cfg = SearchConfig {
            want_witness: false,
            ..Default::default()
        };
        let g = FamilySpec::Path(9).generate().unwrap();
        let v = decide_exhaustive(&g, &cfg).unwrap();
        assert!(v.is_feasible());
        assert!(v.witness().is_none());
    }

    #[test]
    fn bipartite_examples() {
        let v = decide_bipartite(1, 1).unwrap();
        assert!(v.is_feasible());
        let v = decide_bipartite(4, 3).unwrap();
        let g = FamilySpec::CompleteBipartite(4, 3).generate().unwrap();
        check_witness(&g, &v);
        let p = to_parity(v.witness().unwrap()).unwrap();
        assert_eq!(p.0[..4].iter().filter(|x| x.is_even()).count(), 2);
        assert!(!decide_bipartite(28, 1).unwrap().is_feasible());
        // S_25 as K_{1,25}: 12 even leaves and an odd apex
        let v = decide_bipartite(1, 25).unwrap();
        assert!(v.is_feasible());
    }

    #[test]
    fn bistar_examples() {
        assert!(decide_bistar_full(6, 6).unwrap().is_feasible());
        let v = decide_bistar_full(2, 1).unwrap();
        let g = FamilySpec::Bistar(2, 1).generate().unwrap();
        check_witness(&g, &v);
        assert!(v.is_feasible());
        // mixed apex parities reach m + n = 40
        let v = decide_bistar_full(20, 20).unwrap();
        let g = FamilySpec::Bistar(20, 20).generate().unwrap();
        check_witness(&g, &v);
        assert!(v.is_feasible());
    }

    #[test]
    fn jellyfish_counts_match_exhaustive() {
        for m1 in 0..=8 {
            for m2 in 0..=8 {
                let g = FamilySpec::Jellyfish(m1, m2).generate().unwrap();
                let a = decide_exhaustive(&g, &SearchConfig::default()).unwrap();
                let b = decide_jellyfish(m1, m2).unwrap();
                check_witness(&g, &b);
                assert_eq!(a.is_feasible(), b.is_feasible(), "J({m1},{m2})");
            }
        }
    }

    #[test]
    fn jellyfish_with_an_empty_group_can_fail() {
        assert!(!decide_jellyfish(0, 39).unwrap().is_feasible());
        assert!(!decide_jellyfish(39, 0).unwrap().is_feasible());
        assert!(decide_jellyfish(0, 50).unwrap().is_feasible());
        assert!(decide_jellyfish(1, 39).unwrap().is_feasible());
    }
}
