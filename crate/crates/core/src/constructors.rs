//! Constructive labelings for the ten families.
//!
//! Each constructor builds parity patterns from a family-specific block
//! scheme. The first candidates come from the closed-form block sizes known
//! for the family; if none of them is cordial, the scheme's parameters are
//! scanned in a fixed order. A candidate is accepted only after it has been
//! realized with concrete indices and re-checked with [`is_valid`] and
//! [`is_cordial`], so the closed forms act purely as search hints.
//!
//! With `n = |V|` and `E = even_count(n)`, a pattern with `s` even vertices is
//! realizable exactly when `s` is `E - 1` (an even index is skipped) or `E`
//! (an odd index is skipped). Every scan tries `s = E - 1` first.

use crate::error::Result;
use crate::graph::{FamilySpec, Graph};
use crate::labeling::{
    is_cordial, is_valid, parity_obstruction, realizable, realize, tally, tally_labeling,
    EdgeTally, ParityPattern, PerrinLabeling,
};
use crate::perrin::{even_count, Parity};

/// Jellyfish internal parities. `A`: `v1` and `v3` even. `B`: only `v3`
/// even. `Mask(bits)`: bit `i` set means `v_{i+1}` even. Every other family
/// uses `A`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Variant {
    #[default]
    A,
    B,
    Mask(u8),
}

impl Variant {
    pub fn internal_mask(self) -> u8 {
        match self {
            Variant::A => 0b0101,
            Variant::B => 0b0100,
            Variant::Mask(m) => m & 0b1111,
        }
    }

    /// `A`, `B`, then the other fourteen internal patterns by mask value.
    fn scan_order() -> impl Iterator<Item = Variant> {
        let named = [Variant::A.internal_mask(), Variant::B.internal_mask()];
        [Variant::A, Variant::B].into_iter().chain(
            (0u8..16)
                .filter(move |m| !named.contains(m))
                .map(Variant::Mask),
        )
    }
}

/// Block sizes of a scheme instance. Which fields are meaningful depends on
/// the family; unused ones stay zero. `p` and `q` are `|V| div 7` and
/// `|V| mod 7`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SchemeParams {
    pub p: usize,
    pub q: usize,
    pub p1: usize,
    pub p2: usize,
    pub q1: usize,
    pub q2: usize,
    pub k1: usize,
    pub k2: usize,
    /// Parity of the unused index.
    pub skip: Option<Parity>,
    pub variant: Variant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constructed {
    pub graph: Graph,
    pub labeling: PerrinLabeling,
    pub scheme: SchemeParams,
    pub tally: EdgeTally,
    /// Candidates examined, including the accepted one.
    pub tried: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Infeasible {
    pub reason: String,
    pub tried: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Constructed(Constructed),
    Infeasible(Infeasible),
}

impl Outcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Outcome::Constructed(_))
    }

    pub fn constructed(&self) -> Option<&Constructed> {
        match self {
            Outcome::Constructed(c) => Some(c),
            Outcome::Infeasible(_) => None,
        }
    }
}

struct Search {
    graph: Graph,
    evens: usize,
    tried: usize,
}

impl Search {
    fn new(graph: Graph) -> Self {
        let evens = even_count(graph.vertex_count());
        Self {
            graph,
            evens,
            tried: 0,
        }
    }

    fn base(&self) -> SchemeParams {
        let n = self.graph.vertex_count();
        SchemeParams {
            p: n / 7,
            q: n % 7,
            ..Default::default()
        }
    }

    /// Even-vertex counts a pattern may use, in scan order.
    fn even_budgets(&self) -> impl Iterator<Item = usize> {
        let n = self.graph.vertex_count();
        let e = self.evens;
        [e.checked_sub(1), Some(e)]
            .into_iter()
            .flatten()
            .filter(move |&s| realizable(n, s))
    }

    fn attempt(&mut self, mut scheme: SchemeParams, pattern: ParityPattern) -> Option<Outcome> {
        self.tried += 1;
        let n = self.graph.vertex_count();
        let s = pattern.even_vertex_count();
        if !realizable(n, s) {
            return None;
        }
        let t = tally(&self.graph, &pattern).ok()?;
        if !is_cordial(&t) {
            return None;
        }
        let labeling = realize(&self.graph, &pattern).ok()?;
        // verifier gate: recompute from the concrete indices
        let checked = tally_labeling(&self.graph, &labeling).ok()?;
        if !is_valid(&self.graph, &labeling) || checked != t || !is_cordial(&checked) {
            return None;
        }
        scheme.skip = Some(if s == self.evens {
            Parity::Odd
        } else {
            Parity::Even
        });
        Some(Outcome::Constructed(Constructed {
            graph: self.graph.clone(),
            labeling,
            scheme,
            tally: t,
            tried: self.tried,
        }))
    }

    /// Graphs with at most one edge are cordial under any labeling.
    fn degenerate(&mut self) -> Option<Outcome> {
        if self.graph.edge_count() > 1 {
            return None;
        }
        let n = self.graph.vertex_count();
        let s = self.evens.min(n);
        let scheme = SchemeParams {
            p1: s,
            ..self.base()
        };
        self.attempt(scheme, ParityPattern::from_even_set(n, 0..s))
    }

    fn obstruction(&self) -> Option<Outcome> {
        parity_obstruction(&self.graph).map(|reason| {
            Outcome::Infeasible(Infeasible {
                reason,
                tried: self.tried,
            })
        })
    }

    fn exhausted(&self, what: &str) -> Outcome {
        Outcome::Infeasible(Infeasible {
            reason: format!("no cordial pattern in the {what} scheme family"),
            tried: self.tried,
        })
    }

    /// Runs `candidates` in order and returns the first accepted one.
    fn run<I>(
        &mut self,
        candidates: I,
        pattern: impl Fn(&SchemeParams) -> ParityPattern,
    ) -> Option<Outcome>
    where
        I: IntoIterator<Item = SchemeParams>,
    {
        for scheme in candidates {
            let pat = pattern(&scheme);
            if let Some(out) = self.attempt(scheme, pat) {
                return Some(out);
            }
        }
        None
    }
}

/// Blocks `[q1 odd][p1 even][2*p2 alternating, odd first][q2 odd]`.
fn path_pattern(n: usize, s: &SchemeParams) -> ParityPattern {
    let mut evens: Vec<usize> = (s.q1..s.q1 + s.p1).collect();
    let alt = s.q1 + s.p1;
    evens.extend((0..s.p2).map(|j| alt + 2 * j + 1));
    ParityPattern::from_even_set(n, evens)
}

pub fn construct_path(n: usize) -> Result<Outcome> {
    let mut search = Search::new(FamilySpec::Path(n).generate()?);
    if let Some(out) = search.degenerate() {
        return Ok(out);
    }
    let base = search.base();
    let mut candidates = Vec::new();
    if n.is_multiple_of(7) {
        // n = 7p with one even index skipped: p1 + p2 = 3p.
        let p = n / 7;
        let q1 = if p % 4 == 1 { 0 } else { 1 };
        let offset: i64 = if q1 == 0 { 3 } else { 5 };
        for p2 in 0..=3 * p {
            if (7 * p as i64 - 4 * p2 as i64 - offset).abs() <= 1 {
                let p1 = 3 * p - p2;
                if q1 + p1 + 2 * p2 <= n {
                    candidates.push(SchemeParams {
                        q1,
                        p1,
                        p2,
                        q2: n - q1 - p1 - 2 * p2,
                        ..base
                    });
                }
            }
        }
    }
    for s in search.even_budgets() {
        for q1 in 0..=n {
            for p2 in 0..=s {
                let p1 = s - p2;
                if q1 + p1 + 2 * p2 <= n {
                    candidates.push(SchemeParams {
                        q1,
                        p1,
                        p2,
                        q2: n - q1 - p1 - 2 * p2,
                        ..base
                    });
                }
            }
        }
    }
    let out = search.run(candidates, |s| path_pattern(n, s));
    Ok(out.unwrap_or_else(|| search.exhausted("path")))
}

/// Evens at `v_1..v_{p1}` and every second vertex `v_{p1+2}, .., v_{p1+2p2}`.
fn cycle_pattern(n: usize, s: &SchemeParams) -> ParityPattern {
    let evens = (0..s.p1).chain((0..s.p2).map(|j| s.p1 + 1 + 2 * j));
    ParityPattern::from_even_set(n, evens)
}

pub fn construct_cycle(n: usize) -> Result<Outcome> {
    let mut search = Search::new(FamilySpec::Cycle(n).generate()?);
    if let Some(out) = search.obstruction() {
        return Ok(out);
    }
    let base = search.base();
    let budgets: Vec<usize> = search.even_budgets().collect();
    let mut candidates = Vec::new();
    for k in [3, 4, 5] {
        if n >= k && (n - k).is_multiple_of(4) {
            let p2 = (n - k) / 4;
            for &s in &budgets {
                if s >= p2 && s + p2 <= n {
                    candidates.push(SchemeParams {
                        p1: s - p2,
                        p2,
                        ..base
                    });
                }
            }
        }
    }
    for &s in &budgets {
        for p2 in 0..=s {
            if s + p2 <= n {
                candidates.push(SchemeParams {
                    p1: s - p2,
                    p2,
                    ..base
                });
            }
        }
    }
    let out = search.run(candidates, |s| cycle_pattern(n, s));
    Ok(out.unwrap_or_else(|| search.exhausted("cycle")))
}

/// `C(a,2) + C(b,2) - a*b` for `a` even and `b` odd vertices of `K_{a+b}`.
pub fn complete_epsilon(a: usize, b: usize) -> i64 {
    let pairs = |x: usize| (x * x.saturating_sub(1) / 2) as i64;
    pairs(a) + pairs(b) - (a * b) as i64
}

/// Even/odd split `(a, b)` making `K_n` cordial, if one exists. Only the
/// counts matter, so this needs no search.
pub fn complete_split(n: usize) -> Option<(usize, usize)> {
    let e = even_count(n);
    [e.checked_sub(1), Some(e)]
        .into_iter()
        .flatten()
        .filter(|&a| realizable(n, a))
        .map(|a| (a, n - a))
        .find(|&(a, b)| complete_epsilon(a, b).abs() <= 1)
}

pub fn construct_complete(n: usize) -> Result<Outcome> {
    let mut search = Search::new(FamilySpec::Complete(n).generate()?);
    if let Some(out) = search.degenerate() {
        return Ok(out);
    }
    let base = search.base();
    let candidates: Vec<SchemeParams> = search
        .even_budgets()
        .map(|a| SchemeParams {
            p1: a,
            p2: n - a,
            ..base
        })
        .collect();
    let out = search.run(candidates, |s| ParityPattern::from_even_set(n, 0..s.p1));
    Ok(out.unwrap_or_else(|| {
        let e = even_count(n);
        Outcome::Infeasible(Infeasible {
            reason: format!(
                "even/odd splits ({}, {}) and ({}, {}) give epsilon {} and {}",
                e - 1,
                n + 1 - e,
                e,
                n - e,
                complete_epsilon(e - 1, n + 1 - e),
                if e <= n {
                    complete_epsilon(e, n - e)
                } else {
                    i64::MAX
                },
            ),
            tried: search.tried,
        })
    }))
}

fn bipartite_candidates(search: &Search, m: usize, n: usize) -> Vec<SchemeParams> {
    let base = search.base();
    let mut out = Vec::new();
    for s in search.even_budgets() {
        for p1 in s.saturating_sub(n)..=m.min(s) {
            out.push(SchemeParams {
                p1,
                p2: s - p1,
                ..base
            });
        }
    }
    out
}

/// Evens: the first `p1` vertices of side one and first `p2` of side two.
fn bipartite_pattern(m: usize, n: usize, s: &SchemeParams) -> ParityPattern {
    ParityPattern::from_even_set(m + n, (0..s.p1).chain(m..m + s.p2))
}

pub fn construct_complete_bipartite(m: usize, n: usize) -> Result<Outcome> {
    bipartite_on(FamilySpec::CompleteBipartite(m, n).generate()?, m, n)
}

/// Star `S_n` as `K_{1,n}`.
pub fn construct_star(n: usize) -> Result<Outcome> {
    bipartite_on(FamilySpec::Star(n).generate()?, 1, n)
}

fn bipartite_on(graph: Graph, m: usize, n: usize) -> Result<Outcome> {
    let mut search = Search::new(graph);
    // (m - 2 p1)(n - 2 p2) is the exact imbalance, so filter before tallying.
    let candidates: Vec<SchemeParams> = bipartite_candidates(&search, m, n)
        .into_iter()
        .filter(|s| bipartite_epsilon(m, n, s.p1, s.p2).abs() <= 1)
        .collect();
    let out = search.run(candidates, |s| bipartite_pattern(m, n, s));
    Ok(out.unwrap_or_else(|| search.exhausted("complete bipartite")))
}

/// `(m - 2 p1)(n - 2 p2)`.
pub fn bipartite_epsilon(m: usize, n: usize, p1: usize, p2: usize) -> i64 {
    (m as i64 - 2 * p1 as i64) * (n as i64 - 2 * p2 as i64)
}

/// Rim `[p1 even][2*p2 alternating, odd first][rest odd]`, hub odd.
fn wheel_pattern(n: usize, s: &SchemeParams) -> ParityPattern {
    let evens = (0..s.p1).chain((0..s.p2).map(|j| s.p1 + 2 * j + 1));
    ParityPattern::from_even_set(n + 1, evens)
}

/// Block sizes for `W_n` from `n + 1 = 7p + k`.
pub fn wheel_table(n: usize) -> Option<(usize, usize)> {
    let (p, k) = ((n + 1) / 7, (n + 1) % 7);
    let p1 = if k == 0 || k == 6 { p + 3 } else { p + k };
    let p2 = match k {
        0 => (2 * p).checked_sub(2)?,
        6 => 2 * p,
        _ => (2 * p).checked_sub(1)?,
    };
    Some((p1, p2))
}

pub fn construct_wheel(n: usize) -> Result<Outcome> {
    let mut search = Search::new(FamilySpec::Wheel(n).generate()?);
    let base = search.base();
    let mut candidates = Vec::new();
    if let Some((p1, p2)) = wheel_table(n) {
        if p1 + 2 * p2 <= n {
            candidates.push(SchemeParams { p1, p2, ..base });
        }
    }
    for s in search.even_budgets() {
        for p2 in 0..=s {
            if s + p2 <= n {
                candidates.push(SchemeParams {
                    p1: s - p2,
                    p2,
                    ..base
                });
            }
        }
    }
    let out = search.run(candidates, |s| wheel_pattern(n, s));
    Ok(out.unwrap_or_else(|| search.exhausted("wheel")))
}

/// Evens on tips `u_1..u_{p1}` and `u_{n+1-p2}..u_n`, and spine
/// `v_{n+1-p2}..v_{n+1}`.
fn snake_pattern(n: usize, s: &SchemeParams) -> ParityPattern {
    let tip = |i: usize| n + i; // u_i, 1-based
    let evens = (1..=s.p1)
        .map(tip)
        .chain((n + 1 - s.p2..=n).map(tip))
        .chain(n - s.p2..=n);
    ParityPattern::from_even_set(2 * n + 1, evens)
}

pub fn construct_triangular_snake(n: usize) -> Result<Outcome> {
    let mut search = Search::new(FamilySpec::TriangularSnake(n).generate()?);
    if let Some(out) = search.obstruction() {
        return Ok(out);
    }
    let base = search.base();
    let e = search.evens;
    let mut candidates = Vec::new();
    if n.is_multiple_of(7) {
        // skip odd: eps = 8 p2 - 3p - 4; skip even: eps = 8 p2 - 3p
        let p = (n / 7) as i64;
        for (s, offset) in [(e, 4), (e - 1, 0)] {
            for p2 in 0..=n {
                let eps = 8 * p2 as i64 - 3 * p - offset;
                if eps.abs() <= 1 && s > 2 * p2 {
                    let p1 = s - 2 * p2 - 1;
                    if p1 + p2 <= n {
                        candidates.push(SchemeParams { p1, p2, ..base });
                    }
                }
            }
        }
    }
    for s in search.even_budgets() {
        for p2 in 0..=n {
            if s > 2 * p2 && s - 2 * p2 - 1 + p2 <= n {
                candidates.push(SchemeParams {
                    p1: s - 2 * p2 - 1,
                    p2,
                    ..base
                });
            }
        }
    }
    let out = search.run(candidates, |s| snake_pattern(n, s));
    Ok(out.unwrap_or_else(|| search.exhausted("triangular snake")))
}

/// Evens on `v_1..v_{2p1}` and `v_{2p1+1}, v_{2p1+3}, .., v_{2p1+2p2-1}`;
/// apex odd.
fn friendship_pattern(n: usize, s: &SchemeParams) -> ParityPattern {
    let evens = (1..=2 * s.p1).chain((0..s.p2).map(|j| 2 * s.p1 + 1 + 2 * j));
    ParityPattern::from_even_set(2 * n + 1, evens)
}

pub fn construct_friendship(n: usize) -> Result<Outcome> {
    let mut search = Search::new(FamilySpec::Friendship(n).generate()?);
    if let Some(out) = search.obstruction() {
        return Ok(out);
    }
    let base = search.base();
    let e = search.evens;
    let mut candidates = Vec::new();
    if n.is_multiple_of(7) {
        // skip odd: 2 p1 + p2 = E, eps = 4 p1 - 3p - 4
        let p = (n / 7) as i64;
        for p1 in 0..=n {
            if (4 * p1 as i64 - 3 * p - 4).abs() <= 1 && e >= 2 * p1 {
                let p2 = e - 2 * p1;
                if p1 + p2 <= n {
                    candidates.push(SchemeParams { p1, p2, ..base });
                }
            }
        }
    }
    for s in search.even_budgets() {
        for p1 in 0..=n {
            if s >= 2 * p1 && p1 + (s - 2 * p1) <= n {
                candidates.push(SchemeParams {
                    p1,
                    p2: s - 2 * p1,
                    ..base
                });
            }
        }
    }
    let out = search.run(candidates, |s| friendship_pattern(n, s));
    Ok(out.unwrap_or_else(|| search.exhausted("friendship")))
}

/// Both apexes odd; evens on the first `p1` pendants of apex `u` and the first
/// `p2` pendants of apex `v`.
fn bistar_pattern(m: usize, n: usize, s: &SchemeParams) -> ParityPattern {
    let evens = (2..2 + s.p1).chain(m + 2..m + 2 + s.p2);
    ParityPattern::from_even_set(m + n + 2, evens)
}

/// Restricted to the both-apexes-odd scheme; see
/// [`crate::oracle::decide_bistar_full`] for all apex parities.
pub fn construct_bistar(m: usize, n: usize) -> Result<Outcome> {
    let mut search = Search::new(FamilySpec::Bistar(m, n).generate()?);
    let base = search.base();
    let mut candidates = Vec::new();
    for s in search.even_budgets() {
        for p1 in s.saturating_sub(n)..=m.min(s) {
            candidates.push(SchemeParams {
                p1,
                p2: s - p1,
                ..base
            });
        }
    }
    let out = search.run(candidates, |s| bistar_pattern(m, n, s));
    Ok(out.unwrap_or_else(|| search.exhausted("both-apexes-odd bistar")))
}

/// Internal parities per the variant; evens on the first `k1` pendants of
/// `v3` and the first `k2` pendants of `v4`.
fn jellyfish_pattern(m1: usize, m2: usize, s: &SchemeParams) -> ParityPattern {
    let mask = s.variant.internal_mask();
    let evens = (0..4)
        .filter(|i| mask >> i & 1 == 1)
        .chain(4..4 + s.k1)
        .chain(4 + m1..4 + m1 + s.k2);
    ParityPattern::from_even_set(m1 + m2 + 4, evens)
}

fn internal_evens(v: Variant) -> usize {
    v.internal_mask().count_ones() as usize
}

pub fn construct_jellyfish(m1: usize, m2: usize) -> Result<Outcome> {
    let mut search = Search::new(FamilySpec::Jellyfish(m1, m2).generate()?);
    let e = search.evens;
    let base = search.base();
    let mut candidates = Vec::new();
    if m1.is_multiple_of(7) && m2.is_multiple_of(7) {
        // one even index skipped; A: eps = 13 p2 - p1 - 4 k2 - 1, B: +3
        let (j1, j2) = ((m1 / 7) as i64, (m2 / 7) as i64);
        let (variant, offset) = if (j2 - j1).rem_euclid(4) == 3 {
            (Variant::B, 3)
        } else {
            (Variant::A, -1)
        };
        let s = e - 1;
        for k2 in 0..=m2 {
            let eps = 13 * j2 - j1 - 4 * k2 as i64 + offset;
            let fixed = internal_evens(variant) + k2;
            if eps.abs() <= 1 && s >= fixed && s - fixed <= m1 {
                candidates.push(SchemeParams {
                    p1: m1 / 7,
                    p2: m2 / 7,
                    k1: s - fixed,
                    k2,
                    variant,
                    ..base
                });
            }
        }
    }
    // The tally depends only on the internal parities and on k1, k2, so this
    // scan is exhaustive for the family.
    let budgets: Vec<usize> = search.even_budgets().collect();
    for variant in Variant::scan_order() {
        for &s in &budgets {
            for k2 in 0..=m2 {
                let fixed = internal_evens(variant) + k2;
                if s >= fixed && s - fixed <= m1 {
                    candidates.push(SchemeParams {
                        p1: m1 / 7,
                        p2: m2 / 7,
                        k1: s - fixed,
                        k2,
                        variant,
                        ..base
                    });
                }
            }
        }
    }
    let out = search.run(candidates, |s| jellyfish_pattern(m1, m2, s));
    Ok(out.unwrap_or_else(|| search.exhausted("jellyfish")))
}

/// Dispatches on the family.
pub fn construct(spec: FamilySpec) -> Result<Outcome> {
    match spec {
        FamilySpec::Path(n) => construct_path(n),
        FamilySpec::Cycle(n) => construct_cycle(n),
        FamilySpec::Complete(n) => construct_complete(n),
        FamilySpec::CompleteBipartite(m, n) => construct_complete_bipartite(m, n),
        FamilySpec::Star(n) => construct_star(n),
        FamilySpec::Wheel(n) => construct_wheel(n),
        FamilySpec::Bistar(m, n) => construct_bistar(m, n),
        FamilySpec::TriangularSnake(n) => construct_triangular_snake(n),
        FamilySpec::Friendship(n) => construct_friendship(n),
        FamilySpec::Jellyfish(m1, m2) => construct_jellyfish(m1, m2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::to_parity;
    use Parity::{Even as E, Odd as O};

    fn built(out: Outcome) -> Constructed {
        match out {
            Outcome::Constructed(c) => c,
            Outcome::Infeasible(i) => panic!("unexpectedly infeasible: {}", i.reason),
        }
    }

    fn gate(c: &Constructed) {
        assert!(is_valid(&c.graph, &c.labeling));
        let t = tally_labeling(&c.graph, &c.labeling).unwrap();
        assert_eq!(t, c.tally);
        assert!(is_cordial(&t));
    }

    #[test]
    fn path_seven_uses_the_q1_zero_block() {
        let c = built(construct_path(7).unwrap());
        gate(&c);
        assert_eq!((c.scheme.q1, c.scheme.p1, c.scheme.p2), (0, 2, 1));
        assert_eq!(to_parity(&c.labeling).unwrap().0, vec![E, E, O, E, O, O, O]);
        assert_eq!(c.tally.epsilon(), 0);
    }

    #[test]
    fn path_two_and_fourteen() {
        let c = built(construct_path(2).unwrap());
        gate(&c);
        assert_eq!(c.tally.epsilon().abs(), 1);
        let c = built(construct_path(14).unwrap());
        gate(&c);
        assert_eq!(c.scheme.p2, 2);
        assert_eq!(c.tally.epsilon(), 1);
    }

    #[test]
    fn path_blocks_cover_all_vertices() {
        for n in 1..=60 {
            let c = built(construct_path(n).unwrap());
            let s = c.scheme;
            if n >= 3 {
                assert_eq!(s.q1 + s.p1 + 2 * s.p2 + s.q2, n, "n = {n}");
            }
            let used = s.p1 + s.p2;
            let e = even_count(n);
            assert!(used == e || used + 1 == e, "n = {n}");
        }
    }

    #[test]
    fn cycle_examples() {
        assert!(!construct_cycle(6).unwrap().is_feasible());
        let c = built(construct_cycle(16).unwrap());
        gate(&c);
        assert_eq!(c.scheme.p2, 3);
        assert_eq!(c.tally.epsilon(), 0);
        let c = built(construct_cycle(5).unwrap());
        gate(&c);
        assert_eq!((c.scheme.p1, c.scheme.p2), (3, 0));
        assert_eq!(to_parity(&c.labeling).unwrap().0, vec![E, E, E, O, O]);
        assert_eq!(c.tally.epsilon(), 1);
    }

    #[test]
    fn complete_examples() {
        let c = built(construct_complete(49).unwrap());
        gate(&c);
        assert_eq!((c.scheme.p1, c.scheme.p2), (21, 28));
        assert_eq!((c.tally.e0, c.tally.e1), (588, 588));
        assert!(construct_complete(1).unwrap().is_feasible());
        assert!(!construct_complete(5).unwrap().is_feasible());
        assert_eq!(complete_epsilon(3, 2), -2);
        assert_eq!(complete_epsilon(4, 1), 2);
    }

    // Independent oracle: every realizable even count, tallied on the graph.
    #[test]
    fn complete_split_matches_graph_tally() {
        for n in 1..=40 {
            let g = FamilySpec::Complete(n).generate().unwrap();
            let brute = (0..=n).filter(|&a| realizable(n, a)).any(|a| {
                let t = tally(&g, &ParityPattern::from_even_set(n, 0..a)).unwrap();
                is_cordial(&t)
            });
            assert_eq!(brute, complete_split(n).is_some(), "K_{n}");
        }
    }

    #[test]
    fn bipartite_examples() {
        let c = built(construct_complete_bipartite(4, 3).unwrap());
        gate(&c);
        assert_eq!((c.scheme.p1, c.scheme.p2), (2, 1));
        assert_eq!(c.tally.epsilon(), 0);
        assert!(!construct_complete_bipartite(28, 1).unwrap().is_feasible());
        let c = built(construct_complete_bipartite(2, 2).unwrap());
        assert_eq!((c.scheme.p1, c.scheme.p2), (1, 1));
        assert_eq!(c.tally.epsilon(), 0);
    }

    #[test]
    fn bipartite_tally_is_the_product_formula() {
        for m in 1..=15 {
            for n in 1..=15 {
                if let Outcome::Constructed(c) = construct_complete_bipartite(m, n).unwrap() {
                    assert_eq!(
                        c.tally.epsilon(),
                        bipartite_epsilon(m, n, c.scheme.p1, c.scheme.p2)
                    );
                }
            }
        }
    }

    #[test]
    fn wheel_examples() {
        let c = built(construct_wheel(13).unwrap());
        gate(&c);
        assert_eq!((c.scheme.p1, c.scheme.p2), (5, 2));
        let c = built(construct_wheel(6).unwrap());
        gate(&c);
        assert_eq!((c.scheme.p1, c.scheme.p2), (4, 0));
        assert_eq!(c.tally.epsilon(), 0);
    }

    #[test]
    fn snake_examples() {
        match construct_triangular_snake(2).unwrap() {
            Outcome::Infeasible(i) => assert!(i.reason.contains("cut")),
            Outcome::Constructed(_) => panic!("TS_2 must be infeasible"),
        }
        gate(&built(construct_triangular_snake(4).unwrap()));
        let c = built(construct_triangular_snake(7).unwrap());
        gate(&c);
        assert_eq!(c.scheme.p2, 1);
        assert_eq!(c.scheme.skip, Some(Parity::Odd));
        assert_eq!(c.tally.epsilon(), 1);
    }

    #[test]
    fn friendship_examples() {
        gate(&built(construct_friendship(4).unwrap()));
        assert!(!construct_friendship(6).unwrap().is_feasible());
        let c = built(construct_friendship(7).unwrap());
        gate(&c);
        assert_eq!(c.scheme.p1, 2);
        assert_eq!(c.tally.epsilon(), 1);
    }

    #[test]
    fn bistar_examples() {
        let c = built(construct_bistar(6, 6).unwrap());
        assert_eq!(c.scheme.p1 + c.scheme.p2, 6);
        assert_eq!(c.tally.epsilon(), 1);
        assert_eq!(c.scheme.skip, Some(Parity::Even));
        let c = built(construct_bistar(1, 1).unwrap());
        assert_eq!(c.scheme.p1 + c.scheme.p2, 2);
        assert_eq!(c.tally.epsilon(), -1);
        let c = built(construct_bistar(13, 12).unwrap());
        assert_eq!(c.scheme.p1 + c.scheme.p2, 13);
        assert_eq!(c.scheme.skip, Some(Parity::Odd));
        assert_eq!(c.tally.epsilon(), 0);
    }

    #[test]
    fn jellyfish_examples() {
        let c = built(construct_jellyfish(7, 7).unwrap());
        gate(&c);
        assert_eq!(c.scheme.variant, Variant::A);
        assert_eq!(c.scheme.k2, 3);
        assert_eq!(c.tally.epsilon(), -1);
        let c = built(construct_jellyfish(0, 0).unwrap());
        gate(&c);
        assert_eq!(to_parity(&c.labeling).unwrap().0, vec![E, O, E, O]);
        assert_eq!(c.tally.epsilon(), -1);
    }

    #[test]
    fn parameter_errors_propagate() {
        assert!(construct_cycle(2).is_err());
        assert!(construct_wheel(1).is_err());
        assert!(construct_path(0).is_err());
    }
}
