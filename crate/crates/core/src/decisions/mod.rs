//! Verdicts about the closed source manifold `M` of a pseudo normal
//! spherical fold map onto a given simple polyhedron `W_p`.
//!
//! Only `W_p` is in hand, so every hypothesis about `M` is checked through
//! `W_p`: simple connectivity via π₁(W_p), homology via H_*(W_p).

use std::fmt;
use std::ops::RangeInclusive;

use crate::complexes::{
    collapse_search, homology, pi1_presentation_with_budget, triangulate, CollapseBudget, CollapseOutcome,
    CollapseTarget, HomologyGroup, HomologyResult, Pi1Status, Presentation, SimplicialComplex2, DEFAULT_MOVES,
};
use crate::model::SimplePolyhedron;
use crate::monodromy::check_compatibility;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    Affirmed,
    NotApplicable,
    Unknown,
}

impl Conclusion {
    pub fn as_str(self) -> &'static str {
        match self {
            Conclusion::Affirmed => "affirmed",
            Conclusion::NotApplicable => "not-applicable",
            Conclusion::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: String,
    pub verdict: Verdict,
}

impl Hypothesis {
    pub fn new(name: impl Into<String>, verdict: Verdict) -> Self {
        Hypothesis { name: name.into(), verdict }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub statement: String,
    /// The numbered statement the claim rests on, e.g. `Thm 2`.
    pub citation: String,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: Conclusion,
    pub caveats: Vec<String>,
    /// Independent evidence reported alongside, never used as a hypothesis.
    pub corroboration: Option<String>,
}

impl Claim {
    /// Conclusion is a pure conjunction: any unknown gives unknown, otherwise
    /// any failure gives not-applicable.
    pub fn new(statement: impl Into<String>, citation: impl Into<String>, hypotheses: Vec<Hypothesis>) -> Self {
        let conclusion = if hypotheses.iter().any(|h| h.verdict == Verdict::Unknown) {
            Conclusion::Unknown
        } else if hypotheses.iter().any(|h| h.verdict == Verdict::Fails) {
            Conclusion::NotApplicable
        } else {
            Conclusion::Affirmed
        };
        Claim {
            statement: statement.into(),
            citation: citation.into(),
            hypotheses,
            conclusion,
            caveats: Vec::new(),
            corroboration: None,
        }
    }

    fn caveat(mut self, text: impl Into<String>) -> Self {
        self.caveats.push(text.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionReport {
    pub polyhedron: String,
    pub dimension: u32,
    pub claims: Vec<Claim>,
}

impl DecisionReport {
    pub fn affirmed(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.conclusion == Conclusion::Affirmed)
    }

    pub fn is_affirmed(&self, statement: &str) -> bool {
        self.affirmed().any(|c| c.statement == statement)
    }
}

impl fmt::Display for DecisionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.claims {
            writeln!(f, "[{}] {}: {}", c.conclusion.as_str(), c.citation, c.statement)?;
            for h in &c.hypotheses {
                writeln!(f, "    {:<8} {}", h.verdict.as_str(), h.name)?;
            }
            for cv in &c.caveats {
                writeln!(f, "    caveat: {cv}")?;
            }
            if let Some(x) = &c.corroboration {
                writeln!(f, "    corroboration: {x}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceManifoldReport {
    pub dimension: u32,
    /// H₁(M), equal to H₁(W_p).
    pub h1: HomologyGroup,
    /// Status of π₁(M), equal to that of π₁(W_p).
    pub pi1: Pi1Status,
    pub h2_polyhedron: HomologyGroup,
    /// For m = 4 only: whether H₂(W_p) is free.
    pub h2_free: Option<bool>,
    /// For m = 4 only: rank H₂(M) = 2 rank H₂(W_p).
    pub rank_h2: Option<usize>,
    /// Degrees k in which H_k(M) and π_k(M) are read off W_p.
    pub transported: RangeInclusive<u32>,
}

impl fmt::Display for SourceManifoldReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "m = {}", self.dimension)?;
        writeln!(f, "H1(M) = {}", self.h1)?;
        writeln!(f, "pi1(M) {}", self.pi1.as_str())?;
        if let Some(r) = self.rank_h2 {
            writeln!(f, "rank H2(M) = {r}")?;
        }
        writeln!(f, "transported degrees {}..{}", self.transported.start(), self.transported.end())
    }
}

const SECTION5: &str = "We cannot extend Theorem 1, Corollary 1 and Theorem 3 generally";
const SEVEN_DIM: &str = "there are at least 14 oriented diffeomorphism types of 7-dimensional homotopy spheres \
that do not admit special generic maps into R^3";
const THREE_DIM: &str = "for a 3-dimensional source the manifold may not be a homotopy sphere";

/// Search budgets used while gathering evidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecisionOptions {
    /// Presentation simplification moves.
    pub moves: usize,
    /// Corroborating collapse search.
    pub collapse: CollapseBudget,
}

impl Default for DecisionOptions {
    fn default() -> Self {
        DecisionOptions { moves: DEFAULT_MOVES, collapse: CollapseBudget::default() }
    }
}

struct Evidence {
    complex: SimplicialComplex2,
    homology: HomologyResult,
    pi1: Presentation,
    /// `None` when some chart has no monodromy table.
    compatible: Option<bool>,
    double_points: usize,
}

impl Evidence {
    fn compatible(&self) -> Verdict {
        self.compatible.map(Verdict::from_bool).unwrap_or(Verdict::Unknown)
    }
}

fn gather(p: &SimplePolyhedron, opts: &DecisionOptions) -> Result<Evidence, Error> {
    p.require_valid()?;
    let complex = triangulate(p)?;
    let homology = homology(&complex.chain_complex())?;
    let pi1 = pi1_presentation_with_budget(&complex, opts.moves)?;
    let compatible = match check_compatibility(p) {
        Ok(r) => Some(r.compatible),
        Err(Error::ChartUnsupported(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(Evidence { complex, homology, pi1, compatible, double_points: p.vertices.len() })
}

fn check_dim(m: u32) -> Result<(), Error> {
    if m < 3 {
        return Err(Error::InvalidInput(format!("source dimension {m} < 3")));
    }
    Ok(())
}

fn pi1_verdict(s: Pi1Status) -> Verdict {
    match s {
        Pi1Status::Trivial => Verdict::Holds,
        Pi1Status::Nontrivial => Verdict::Fails,
        Pi1Status::Unknown => Verdict::Unknown,
    }
}

pub fn source_invariants(p: &SimplePolyhedron, m: u32) -> Result<SourceManifoldReport, Error> {
    check_dim(m)?;
    p.require_valid()?;
    let complex = triangulate(p)?;
    let h = homology(&complex.chain_complex())?;
    let pi1 = pi1_presentation_with_budget(&complex, DEFAULT_MOVES)?.status;
    transport(&h, pi1, m)
}

fn transport(h: &HomologyResult, pi1: Pi1Status, m: u32) -> Result<SourceManifoldReport, Error> {
    let h2 = h.degree(2);
    let (h2_free, rank_h2) = if m == 4 {
        if !h2.torsion.is_empty() {
            return Err(Error::TorsionAnomaly(h2.torsion.clone()));
        }
        (Some(true), Some(2 * h2.rank))
    } else {
        (None, None)
    };
    Ok(SourceManifoldReport {
        dimension: m,
        h1: h.degree(1),
        pi1,
        h2_polyhedron: h2,
        h2_free,
        rank_h2,
        transported: 0..=m - 3,
    })
}

pub fn special_generic_decision(p: &SimplePolyhedron, m: u32) -> Result<DecisionReport, Error> {
    check_dim(m)?;
    let ev = gather(p, &DecisionOptions::default())?;
    Ok(special_generic_claims(p, m, &ev))
}

fn special_generic_claims(p: &SimplePolyhedron, m: u32, ev: &Evidence) -> DecisionReport {
    let base = vec![
        Hypothesis::new("valid pseudo quotient encoding", Verdict::Holds),
        Hypothesis::new("compatible with the natural orientation (Def 6)", ev.compatible()),
    ];
    let special = "M admits a special generic map into R^3";
    let addendum = "composing with a projection gives a normal spherical fold map into the plane \
whose Reeb space is compatible with the natural orientation";
    let claims = match m {
        4 => vec![
            Claim::new(
                "there is a compact connected orientable 3-manifold W_P with nonempty boundary, \
a pseudo special generic map f_P of M onto W_P and a map g with f_p = g o f_P",
                "Thm 1",
                base.clone(),
            ),
            Claim::new(special, "Cor 1", base.clone()),
            Claim::new(addendum, "Cor 1", base),
        ],
        5 => vec![Claim::new(special, "Thm 3", base.clone()), Claim::new(addendum, "Thm 3", base)],
        _ => {
            let mut h = base;
            h.push(Hypothesis::new("source dimension is 4 or 5", Verdict::Fails));
            vec![Claim::new(special, "Section 5", h).caveat(SECTION5).caveat(SEVEN_DIM)]
        }
    };
    DecisionReport { polyhedron: p.name.clone(), dimension: m, claims }
}

pub fn sphere_recognition(p: &SimplePolyhedron, m: u32) -> Result<DecisionReport, Error> {
    sphere_recognition_with(p, m, &DecisionOptions::default())
}

pub fn sphere_recognition_with(p: &SimplePolyhedron, m: u32, opts: &DecisionOptions) -> Result<DecisionReport, Error> {
    check_dim(m)?;
    let ev = gather(p, opts)?;
    Ok(sphere_claims(p, m, &ev, opts))
}

fn sphere_claims(p: &SimplePolyhedron, m: u32, ev: &Evidence, opts: &DecisionOptions) -> DecisionReport {
    let simply = pi1_verdict(ev.pi1.status);
    let h2_zero = Verdict::from_bool(ev.homology.degree(2).is_zero());
    let mut claims = Vec::new();

    let thm2 = vec![
        Hypothesis::new("pi1(W_p) trivial", simply),
        Hypothesis::new("H2(W_p) = 0", h2_zero),
        Hypothesis::new("m > 3", Verdict::from_bool(m > 3)),
    ];
    let mut homotopy = Claim::new("M is a homotopy sphere", "Thm 2", thm2.clone());
    if m == 3 {
        homotopy = homotopy.caveat(THREE_DIM);
    }
    claims.push(homotopy);
    match m {
        4 => {
            let mut h = thm2;
            h.push(Hypothesis::new("compatible with the natural orientation (Def 6)", ev.compatible()));
            claims.push(Claim::new("M is a standard sphere or S^4", "Thm 2", h));
        }
        5 | 6 => claims.push(Claim::new("M is diffeomorphic to a standard sphere", "Thm 2", thm2)),
        _ => {}
    }

    let no_double = Verdict::from_bool(ev.double_points == 0);
    let fact3 = vec![
        Hypothesis::new("singular set has no double points", no_double),
        Hypothesis::new(if m == 3 { "pi1(W_p) trivial" } else { "M simply connected (via pi1(W_p))" }, simply),
        Hypothesis::new("H2(W_p) = 0", h2_zero),
    ];
    let corroboration = (no_double == Verdict::Holds).then(|| {
        let r = collapse_search(&ev.complex, CollapseTarget::Disc, opts.collapse);
        match r.outcome {
            CollapseOutcome::Collapsed => format!("collapse search reached a disc in {} steps", r.sequence.len()),
            o => format!("collapse search to a disc: {} ({})", o.as_str(), r.note),
        }
    });
    let mut fact = vec![Claim::new("W_p is contractible and collapses to the 2-dimensional closed disc", "Fact 3", fact3.clone())];
    fact.push(Claim::new(
        match m {
            3 => "M is diffeomorphic to S^3",
            4..=6 => "M is the standard sphere",
            _ => "M is a homotopy sphere",
        },
        "Fact 3",
        fact3,
    ));
    for mut c in fact {
        c.corroboration = corroboration.clone();
        claims.push(c);
    }
    DecisionReport { polyhedron: p.name.clone(), dimension: m, claims }
}

/// Everything `analyze` reports about one polyhedron and source dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisBundle {
    pub polyhedron: String,
    pub dimension: u32,
    pub euler: i64,
    pub homology: HomologyResult,
    pub pi1: Presentation,
    /// `None` when compatibility is not decidable for the charts used.
    pub compatible: Option<bool>,
    pub double_points: usize,
    pub source: SourceManifoldReport,
    /// Claims of the special generic decision followed by sphere recognition.
    pub decisions: Vec<Claim>,
}

pub fn analyze(p: &SimplePolyhedron, m: u32, opts: &DecisionOptions) -> Result<AnalysisBundle, Error> {
    check_dim(m)?;
    let ev = gather(p, opts)?;
    let source = transport(&ev.homology, ev.pi1.status, m)?;
    let mut decisions = special_generic_claims(p, m, &ev).claims;
    decisions.extend(sphere_claims(p, m, &ev, opts).claims);
    Ok(AnalysisBundle {
        polyhedron: p.name.clone(),
        dimension: m,
        euler: ev.homology.euler(),
        homology: ev.homology.clone(),
        pi1: ev.pi1.clone(),
        compatible: ev.compatible,
        double_points: ev.double_points,
        source,
        decisions,
    })
}
