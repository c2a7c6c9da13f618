//! Published feasibility characterizations as data, and sweeps that compare
//! them with the deciders.
//!
//! A claim's predicate may answer "unknown" when the statement is only a
//! sufficient condition. Sweeps never fail on disagreement; they record it.

use std::fmt;

use rayon::prelude::*;

use crate::constructors::{construct, construct_complete};
use crate::error::Result;
use crate::graph::{Family, FamilySpec};
use crate::labeling::{is_cordial, parity_obstruction, tally_labeling, PerrinLabeling};
use crate::oracle::{
    decide_bipartite, decide_bistar_full, decide_exhaustive, decide_jellyfish, SearchConfig,
    Verdict,
};

/// `K_n` orders claimed feasible.
pub const COMPLETE_CLAIMED: [usize; 13] = [1, 2, 3, 4, 6, 36, 49, 62, 64, 66, 79, 81, 83];
/// Bistar sums above 26 claimed feasible.
pub const BISTAR_EXTRA_SUMS: [usize; 5] = [28, 29, 30, 32, 36];
/// Sufficient bound on `m + n` for `K_{m,n}` with both sides odd, by `(m + n) mod 7`.
pub const BOTH_ODD_BOUND: [usize; 7] = [28, 22, 30, 38, 32, 40, 34];

#[derive(Clone, Copy)]
pub struct Claim {
    pub family: Family,
    /// Plain-language statement of the claimed condition.
    pub source: &'static str,
    predicate: fn(&[usize]) -> Option<bool>,
}

impl Claim {
    /// Claimed feasibility at `params`; `None` where the claim is silent.
    pub fn paper_verdict(&self, params: &[usize]) -> Option<bool> {
        (self.predicate)(params)
    }
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim")
            .field("family", &self.family)
            .field("source", &self.source)
            .finish()
    }
}

fn bipartite_claim(p: &[usize]) -> Option<bool> {
    let (big, small) = (p[0].max(p[1]), p[0].min(p[1]));
    if small % 2 == 0 {
        return Some(true);
    }
    if big % 2 == 0 {
        return Some(big <= 6 * small + 26 && big != 6 * small + 22);
    }
    let sum = big + small;
    (sum <= BOTH_ODD_BOUND[sum % 7]).then_some(true)
}

/// Ten claims, one per family.
pub fn builtin_claims() -> Vec<Claim> {
    vec![
        Claim {
            family: Family::Path,
            source: "every path is feasible",
            predicate: |_| Some(true),
        },
        Claim {
            family: Family::Cycle,
            source: "C_n is feasible iff n mod 4 != 2",
            predicate: |p| Some(p[0] % 4 != 2),
        },
        Claim {
            family: Family::Complete,
            source: "K_n is feasible iff n in {1,2,3,4,6,36,49,62,64,66,79,81,83}",
            predicate: |p| Some(COMPLETE_CLAIMED.contains(&p[0])),
        },
        Claim {
            family: Family::CompleteBipartite,
            source: "K_{m,n}, n <= m: feasible if n even; for n odd and m even iff m <= 6n+26 \
                     and m != 6n+22; for both odd sufficient if m+n is at most a bound set by \
                     (m+n) mod 7 (28,22,30,38,32,40,34)",
            predicate: bipartite_claim,
        },
        Claim {
            family: Family::Star,
            source: "S_n is feasible iff n in {1..32} minus {25}",
            predicate: |p| Some(p[0] <= 32 && p[0] != 25),
        },
        Claim {
            family: Family::Wheel,
            source: "every wheel is feasible",
            predicate: |_| Some(true),
        },
        Claim {
            family: Family::Bistar,
            source: "B_{m,n} is feasible iff 1 < m+n <= 26 or m+n in {28,29,30,32,36}",
            predicate: |p| {
                let s = p[0] + p[1];
                Some((2..=26).contains(&s) || BISTAR_EXTRA_SUMS.contains(&s))
            },
        },
        Claim {
            family: Family::TriangularSnake,
            source: "TS_n is feasible iff n mod 4 != 2",
            predicate: |p| Some(p[0] % 4 != 2),
        },
        Claim {
            family: Family::Friendship,
            source: "F_n is feasible iff n mod 4 != 2",
            predicate: |p| Some(p[0] % 4 != 2),
        },
        Claim {
            family: Family::Jellyfish,
            source: "every jellyfish is feasible",
            predicate: |_| Some(true),
        },
    ]
}

pub fn claim_for(family: Family) -> Claim {
    builtin_claims()
        .into_iter()
        .find(|c| c.family == family)
        .expect("one claim per family")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decider {
    Exhaustive,
    Analytic,
    /// Constructor success only; proves feasibility, never infeasibility.
    Constructor,
    None,
}

impl Decider {
    pub fn as_str(self) -> &'static str {
        match self {
            Decider::Exhaustive => "exhaustive",
            Decider::Analytic => "analytic",
            Decider::Constructor => "constructor",
            Decider::None => "none",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToolVerdict {
    Feasible,
    Infeasible,
    Undecided,
}

impl ToolVerdict {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            ToolVerdict::Feasible => Some(true),
            ToolVerdict::Infeasible => Some(false),
            ToolVerdict::Undecided => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ToolVerdict::Feasible => "feasible",
            ToolVerdict::Infeasible => "infeasible",
            ToolVerdict::Undecided => "undecided",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimCheckRow {
    pub spec: FamilySpec,
    pub paper_verdict: Option<bool>,
    pub tool_verdict: ToolVerdict,
    pub decider: Decider,
    /// `None` when either side is unknown.
    pub agree: Option<bool>,
    pub witness: Option<PerrinLabeling>,
}

impl ClaimCheckRow {
    pub fn params(&self) -> Vec<usize> {
        self.spec.params()
    }

    /// Stable file name for this row's witness.
    pub fn witness_file(&self) -> Option<String> {
        self.witness.as_ref().map(|_| {
            let params: Vec<String> = self.params().iter().map(ToString::to_string).collect();
            format!("{}_{}.json", self.spec.family().name(), params.join("_"))
        })
    }

    /// Re-checks the attached witness against a freshly generated graph.
    pub fn witness_verifies(&self) -> bool {
        let Some(w) = &self.witness else {
            return true;
        };
        let Ok(g) = self.spec.generate() else {
            return false;
        };
        tally_labeling(&g, w)
            .map(|t| is_cordial(&t))
            .unwrap_or(false)
    }
}

fn from_verdict(v: Verdict, decider: Decider) -> (ToolVerdict, Decider, Option<PerrinLabeling>) {
    match v {
        Verdict::Feasible { witness, .. } => (ToolVerdict::Feasible, decider, witness),
        Verdict::Infeasible { .. } => (ToolVerdict::Infeasible, decider, None),
    }
}

/// Strongest decider for one family member: a count-level analytic decider
/// where the family has one, else exhaustive search within the vertex cap,
/// else the parity obstruction or a constructor witness.
pub fn decide_spec(
    spec: FamilySpec,
    cfg: &SearchConfig,
) -> Result<(ToolVerdict, Decider, Option<PerrinLabeling>)> {
    let analytic = match spec {
        FamilySpec::Complete(n) => {
            let out = construct_complete(n)?;
            let witness = out.constructed().map(|c| c.labeling.clone());
            let verdict = if witness.is_some() {
                ToolVerdict::Feasible
            } else {
                ToolVerdict::Infeasible
            };
            return Ok((verdict, Decider::Analytic, witness));
        }
        FamilySpec::CompleteBipartite(m, n) => Some(decide_bipartite(m, n)?),
        FamilySpec::Star(n) => Some(star_via_bipartite(n)?),
        FamilySpec::Bistar(m, n) => Some(decide_bistar_full(m, n)?),
        FamilySpec::Jellyfish(m1, m2) => Some(decide_jellyfish(m1, m2)?),
        _ => None,
    };
    if let Some(v) = analytic {
        return Ok(from_verdict(v, Decider::Analytic));
    }
    let g = spec.generate()?;
    if g.vertex_count() <= cfg.max_vertices {
        return Ok(from_verdict(
            decide_exhaustive(&g, cfg)?,
            Decider::Exhaustive,
        ));
    }
    if parity_obstruction(&g).is_some() {
        return Ok((ToolVerdict::Infeasible, Decider::Analytic, None));
    }
    Ok(match construct(spec)? {
        crate::constructors::Outcome::Constructed(c) => (
            ToolVerdict::Feasible,
            Decider::Constructor,
            Some(c.labeling),
        ),
        crate::constructors::Outcome::Infeasible(_) => {
            (ToolVerdict::Undecided, Decider::None, None)
        }
    })
}

/// `S_n` is `K_{1,n}` with the apex first, so the witness carries over.
fn star_via_bipartite(n: usize) -> Result<Verdict> {
    FamilySpec::Star(n).validate()?;
    decide_bipartite(1, n)
}

pub fn check_point(claim: &Claim, spec: FamilySpec, cfg: &SearchConfig) -> Result<ClaimCheckRow> {
    let paper_verdict = claim.paper_verdict(&spec.params());
    let (tool_verdict, decider, witness) = decide_spec(spec, cfg)?;
    let agree = match (paper_verdict, tool_verdict.as_bool()) {
        (Some(p), Some(t)) => Some(p == t),
        _ => None,
    };
    Ok(ClaimCheckRow {
        spec,
        paper_verdict,
        tool_verdict,
        decider,
        agree,
        witness,
    })
}

/// One row per grid point, sorted by parameters. Points outside the family's
/// domain are skipped.
pub fn sweep(claim: &Claim, grid: &[Vec<usize>], cfg: &SearchConfig) -> Result<Vec<ClaimCheckRow>> {
    let specs: Vec<FamilySpec> = grid
        .iter()
        .filter_map(|p| claim.family.spec(p).ok())
        .collect();
    let mut rows = specs
        .par_iter()
        .map(|&spec| check_point(claim, spec, cfg))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| r.params());
    Ok(rows)
}

fn range(lo: usize, hi: usize) -> Vec<Vec<usize>> {
    (lo..=hi).map(|n| vec![n]).collect()
}

fn square(lo: usize, hi: usize) -> Vec<Vec<usize>> {
    (lo..=hi)
        .flat_map(|a| (lo..=hi).map(move |b| vec![a, b]))
        .collect()
}

/// Desk-scale grid per family.
pub fn default_grid(family: Family) -> Vec<Vec<usize>> {
    match family {
        Family::Path => range(1, 24),
        Family::Cycle => range(3, 24),
        Family::Complete => range(1, 100),
        Family::CompleteBipartite => square(1, 40),
        Family::Star => range(1, 40),
        Family::Wheel => range(3, 23),
        Family::TriangularSnake | Family::Friendship => range(1, 20),
        Family::Bistar => (1..40)
            .flat_map(|m| (1..=40 - m).map(move |n| vec![m, n]))
            .collect(),
        Family::Jellyfish => square(0, 50),
    }
}

/// Parses `a..b`, `a..=b`, `a` or a comma list into a one-parameter grid, and
/// `X x Y` (each part in that syntax) into a two-parameter grid.
pub fn parse_grid(text: &str, arity: usize) -> std::result::Result<Vec<Vec<usize>>, String> {
    fn axis(t: &str) -> std::result::Result<Vec<usize>, String> {
        let t = t.trim();
        let num = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad number {s:?}"))
        };
        if let Some((a, b)) = t.split_once("..=") {
            Ok((num(a)?..=num(b)?).collect())
        } else if let Some((a, b)) = t.split_once("..") {
            Ok((num(a)?..num(b)?).collect())
        } else {
            t.split(',').map(num).collect()
        }
    }
    let parts: Vec<&str> = text.split('x').collect();
    match (arity, parts.as_slice()) {
        (1, [a]) => Ok(axis(a)?.into_iter().map(|n| vec![n]).collect()),
        (2, [a]) => {
            let xs = axis(a)?;
            Ok(xs
                .iter()
                .flat_map(|&m| xs.iter().map(move |&n| vec![m, n]))
                .collect())
        }
        (2, [a, b]) => {
            let (xs, ys) = (axis(a)?, axis(b)?);
            Ok(xs
                .iter()
                .flat_map(|&m| ys.iter().map(move |&n| vec![m, n]))
                .collect())
        }
        _ => Err(format!("range {text:?} does not fit {arity} parameter(s)")),
    }
}

fn opt_bool(b: Option<bool>, none: &'static str) -> &'static str {
    match b {
        Some(true) => "true",
        Some(false) => "false",
        None => none,
    }
}

fn params_text(params: &[usize]) -> String {
    params
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

pub const CSV_HEADER: [&str; 7] = [
    "family",
    "params",
    "paper_verdict",
    "tool_verdict",
    "decider",
    "agree",
    "witness_file",
];

/// CSV report. `with_witness_files` fills the witness column with
/// [`ClaimCheckRow::witness_file`] names.
pub fn to_csv(rows: &[ClaimCheckRow], with_witness_files: bool) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in rows {
        let file = if with_witness_files {
            r.witness_file().unwrap_or_default()
        } else {
            String::new()
        };
        w.write_record([
            r.spec.family().name(),
            &params_text(&r.params()),
            opt_bool(r.paper_verdict, "unknown"),
            r.tool_verdict.as_str(),
            r.decider.as_str(),
            opt_bool(r.agree, "n/a"),
            &file,
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AgreeCounts {
    pub agree: usize,
    pub disagree: usize,
    pub unknown: usize,
}

pub fn agree_counts(rows: &[ClaimCheckRow]) -> AgreeCounts {
    let mut c = AgreeCounts::default();
    for r in rows {
        match r.agree {
            Some(true) => c.agree += 1,
            Some(false) => c.disagree += 1,
            None => c.unknown += 1,
        }
    }
    c
}

/// Markdown report: summary counts, then a table of the rows.
pub fn to_markdown(claim: &Claim, rows: &[ClaimCheckRow]) -> String {
    let c = agree_counts(rows);
    let mut out = format!(
        "## {}\n\nClaim: {}\n\nRows: {}, agree: {}, disagree: {}, not comparable: {}\n\n",
        claim.family,
        claim.source,
        rows.len(),
        c.agree,
        c.disagree,
        c.unknown
    );
    out.push_str("| params | claimed | tool | decider | agree |\n|---|---|---|---|---|\n");
    for r in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            params_text(&r.params()),
            opt_bool(r.paper_verdict, "unknown"),
            r.tool_verdict.as_str(),
            r.decider.as_str(),
            opt_bool(r.agree, "n/a"),
        ));
    }
    out
}

/// Bistar rows grouped by `m + n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BistarSum {
    pub sum: usize,
    pub claimed: bool,
    /// Every split `(m, n)` with this sum is feasible.
    pub all_splits: bool,
    /// Some split is feasible.
    pub any_split: bool,
}

pub fn bistar_by_sum(rows: &[ClaimCheckRow]) -> Vec<BistarSum> {
    let mut sums: std::collections::BTreeMap<usize, BistarSum> = Default::default();
    let claim = claim_for(Family::Bistar);
    for r in rows {
        let FamilySpec::Bistar(m, n) = r.spec else {
            continue;
        };
        let feasible = r.tool_verdict == ToolVerdict::Feasible;
        let e = sums.entry(m + n).or_insert(BistarSum {
            sum: m + n,
            claimed: claim.paper_verdict(&[m, n]) == Some(true),
            all_splits: true,
            any_split: false,
        });
        e.all_splits &= feasible;
        e.any_split |= feasible;
    }
    sums.into_values().collect()
}

pub fn bistar_sums_markdown(sums: &[BistarSum]) -> String {
    let mut out = String::from("| m+n | claimed | all splits | some split |\n|---|---|---|---|\n");
    for s in sums {
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            s.sum, s.claimed, s.all_splits, s.any_split
        ));
    }
    out
}
