use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::chart::{self, transition};
use super::{Boundary, Direction, EdgeKind, SimplePolyhedron, WordItem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IssueCode {
    DuplicateId,
    DanglingReference,
    BadPort,
    BadSlot,
    BadPairs,
    PortDoublyClaimed,
    PortUnclaimed,
    SlotDoublyClaimed,
    SlotUnclaimed,
    EmptyWord,
    WordDiscontinuous,
    ChartUnknown,
    ChartMismatch,
    TransitionMismatch,
    LabelInconsistent,
    Disconnected,
    Empty,
    // warnings
    ClosedRegion,
    NoSingularSet,
}

impl IssueCode {
    pub fn as_str(self) -> &'static str {
        match self {
            IssueCode::DuplicateId => "DUPLICATE_ID",
            IssueCode::DanglingReference => "DANGLING_REFERENCE",
            IssueCode::BadPort => "BAD_PORT",
            IssueCode::BadSlot => "BAD_SLOT",
            IssueCode::BadPairs => "BAD_PAIRS",
            IssueCode::PortDoublyClaimed => "PORT_DOUBLY_CLAIMED",
            IssueCode::PortUnclaimed => "PORT_UNCLAIMED",
            IssueCode::SlotDoublyClaimed => "SLOT_DOUBLY_CLAIMED",
            IssueCode::SlotUnclaimed => "SLOT_UNCLAIMED",
            IssueCode::EmptyWord => "EMPTY_WORD",
            IssueCode::WordDiscontinuous => "WORD_DISCONTINUOUS",
            IssueCode::ChartUnknown => "CHART_UNKNOWN",
            IssueCode::ChartMismatch => "CHART_MISMATCH",
            IssueCode::TransitionMismatch => "TRANSITION_MISMATCH",
            IssueCode::LabelInconsistent => "LABEL_INCONSISTENT",
            IssueCode::Disconnected => "DISCONNECTED",
            IssueCode::Empty => "EMPTY",
            IssueCode::ClosedRegion => "CLOSED_REGION",
            IssueCode::NoSingularSet => "NO_SINGULAR_SET",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Issue {
    pub code: IssueCode,
    pub location: String,
    pub message: String,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.code.as_str(), self.location, self.message)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SingularSummary {
    pub double_points: usize,
    pub triple_intervals: usize,
    pub triple_circles: usize,
    pub free_circles: usize,
    pub regions: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub errors: Vec<Issue>,
    pub warnings: Vec<Issue>,
    pub summary: SingularSummary,
}

impl ValidationReport {
    pub fn has(&self, code: IssueCode) -> bool {
        self.errors.iter().chain(&self.warnings).any(|i| i.code == code)
    }

    pub fn first_error(&self) -> String {
        self.errors.first().map(|e| e.to_string()).unwrap_or_default()
    }
}

struct Collector {
    errors: Vec<Issue>,
    warnings: Vec<Issue>,
}

impl Collector {
    fn err(&mut self, code: IssueCode, location: impl Into<String>, message: impl Into<String>) {
        self.errors.push(Issue { code, location: location.into(), message: message.into() });
    }
    fn warn(&mut self, code: IssueCode, location: impl Into<String>, message: impl Into<String>) {
        self.warnings.push(Issue { code, location: location.into(), message: message.into() });
    }
}

/// Checks every structural invariant of the encoding. Never fails; all
/// problems are listed in the report.
pub fn validate(p: &SimplePolyhedron) -> ValidationReport {
    let mut c = Collector { errors: Vec::new(), warnings: Vec::new() };

    check_ids(p, &mut c);
    let ports_ok = check_vertices_and_edges(p, &mut c);
    let words_ok = check_words(p, &mut c);
    if ports_ok && words_ok {
        check_charts(p, &mut c);
    }
    for r in &p.regions {
        if !r.orientable && r.genus == 0 {
            c.err(IssueCode::LabelInconsistent, format!("region {}", r.id), "non-orientable region needs genus >= 1");
        }
        if r.boundary.is_empty() {
            c.warn(IssueCode::ClosedRegion, format!("region {}", r.id), "closed surface region");
        }
    }
    if p.regions.is_empty() {
        c.err(IssueCode::Empty, "polyhedron", "no regions");
    } else if c.errors.is_empty() {
        check_connected(p, &mut c);
    }
    if p.edges.is_empty() {
        c.warn(IssueCode::NoSingularSet, "polyhedron", "empty singular set");
    }

    let summary = SingularSummary {
        double_points: p.vertices.len(),
        triple_intervals: p.edges.iter().filter(|e| !e.is_circle()).count(),
        triple_circles: p.edges.iter().filter(|e| e.is_circle()).count(),
        free_circles: p.free_circles.len(),
        regions: p.regions.len(),
    };
    ValidationReport { ok: c.errors.is_empty(), errors: c.errors, warnings: c.warnings, summary }
}

fn check_ids(p: &SimplePolyhedron, c: &mut Collector) {
    let mut seen = BTreeSet::new();
    for v in &p.vertices {
        if !seen.insert(("vertex", v.id.as_str())) {
            c.err(IssueCode::DuplicateId, format!("vertex {}", v.id), "duplicate vertex id");
        }
    }
    for e in &p.edges {
        if !seen.insert(("edge", e.id.as_str())) {
            c.err(IssueCode::DuplicateId, format!("edge {}", e.id), "duplicate edge id");
        }
    }
    for r in &p.regions {
        if !seen.insert(("region", r.id.as_str())) {
            c.err(IssueCode::DuplicateId, format!("region {}", r.id), "duplicate region id");
        }
    }
}

fn check_vertices_and_edges(p: &SimplePolyhedron, c: &mut Collector) -> bool {
    let before = c.errors.len();
    for v in &p.vertices {
        let loc = format!("vertex {}", v.id);
        if chart::chart(&v.chart).is_none() {
            c.err(IssueCode::ChartUnknown, &loc, format!("unknown chart '{}'", v.chart));
        }
        let mut ports: Vec<u8> = v.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        ports.sort();
        if ports != [0, 1, 2, 3] {
            c.err(IssueCode::BadPairs, &loc, "through-pairs must partition ports 0..3");
        }
    }
    let mut claims: BTreeMap<(String, u8), Vec<String>> = BTreeMap::new();
    for e in &p.edges {
        if let EdgeKind::Interval { start, end } = &e.kind {
            for end_ref in [start, end] {
                let loc = format!("edge {}", e.id);
                if p.vertex(&end_ref.vertex).is_none() {
                    c.err(IssueCode::DanglingReference, &loc, format!("undeclared vertex '{}'", end_ref.vertex));
                } else if end_ref.port > 3 {
                    c.err(IssueCode::BadPort, &loc, format!("port {} out of range", end_ref.port));
                } else {
                    claims.entry((end_ref.vertex.clone(), end_ref.port)).or_default().push(e.id.clone());
                }
            }
        }
    }
    for v in &p.vertices {
        for port in 0..4u8 {
            match claims.get(&(v.id.clone(), port)).map(|x| x.len()).unwrap_or(0) {
                1 => {}
                0 => c.err(IssueCode::PortUnclaimed, format!("vertex {}.{}", v.id, port), "no edge ends here"),
                _ => c.err(IssueCode::PortDoublyClaimed, format!("vertex {}.{}", v.id, port), "several edge ends share this port"),
            }
        }
    }
    c.errors.len() == before
}

/// Where a germ traversal arrives: `Some((vertex, port))` for intervals.
fn arrival(p: &SimplePolyhedron, edge: &str, dir: Direction) -> Option<(String, u8)> {
    match &p.edge(edge)?.kind {
        EdgeKind::Interval { start, end } => {
            let r = if dir == Direction::Forward { end } else { start };
            Some((r.vertex.clone(), r.port))
        }
        EdgeKind::Circle { .. } => None,
    }
}

fn check_words(p: &SimplePolyhedron, c: &mut Collector) -> bool {
    let before = c.errors.len();
    let mut slot_claims: BTreeMap<(String, u8), usize> = BTreeMap::new();
    let mut free_claims: BTreeMap<String, usize> = BTreeMap::new();

    for r in &p.regions {
        for (bi, b) in r.boundary.iter().enumerate() {
            let loc = format!("region {} boundary {}", r.id, bi);
            match b {
                Boundary::Free(id) => *free_claims.entry(id.clone()).or_default() += 1,
                Boundary::Attached(word) => {
                    if word.is_empty() {
                        c.err(IssueCode::EmptyWord, &loc, "attached boundary has no germs");
                        continue;
                    }
                    let mut refs_ok = true;
                    for item in word {
                        match item {
                            WordItem::Germ { edge, slot, .. } => {
                                if p.edge(edge).is_none() {
                                    c.err(IssueCode::DanglingReference, &loc, format!("undeclared edge '{edge}'"));
                                    refs_ok = false;
                                } else if *slot > 2 {
                                    c.err(IssueCode::BadSlot, &loc, format!("slot {slot} out of range"));
                                    refs_ok = false;
                                } else {
                                    *slot_claims.entry((edge.clone(), *slot)).or_default() += 1;
                                }
                            }
                            WordItem::Passage { vertex, from, to } => {
                                if p.vertex(vertex).is_none() {
                                    c.err(IssueCode::DanglingReference, &loc, format!("undeclared vertex '{vertex}'"));
                                    refs_ok = false;
                                } else if *from > 3 || *to > 3 || from == to {
                                    c.err(IssueCode::BadPort, &loc, format!("bad passage {from}>{to}"));
                                    refs_ok = false;
                                }
                            }
                        }
                    }
                    if refs_ok {
                        check_continuity(p, word, &loc, c);
                    }
                }
            }
        }
    }
    for e in &p.edges {
        for slot in 0..3u8 {
            match slot_claims.get(&(e.id.clone(), slot)).copied().unwrap_or(0) {
                1 => {}
                0 => c.err(IssueCode::SlotUnclaimed, format!("edge {} slot {}", e.id, slot), "no region attaches here"),
                n => c.err(IssueCode::SlotDoublyClaimed, format!("edge {} slot {}", e.id, slot), format!("claimed {n} times")),
            }
        }
    }
    for (id, n) in &free_claims {
        if *n > 1 {
            c.err(IssueCode::SlotDoublyClaimed, format!("free circle {id}"), format!("claimed by {n} boundaries"));
        }
    }
    c.errors.len() == before
}

fn check_continuity(p: &SimplePolyhedron, word: &[WordItem], loc: &str, c: &mut Collector) {
    let n = word.len();
    for i in 0..n {
        let cur = &word[i];
        let next = &word[(i + 1) % n];
        let problem = match cur {
            WordItem::Germ { edge, slot, dir } => {
                let e = p.edge(edge).expect("checked");
                match &e.kind {
                    EdgeKind::Circle { ident } => match next {
                        WordItem::Germ { edge: e2, slot: s2, dir: d2 } => {
                            let expected = if *dir == Direction::Forward {
                                ident.apply(*slot)
                            } else {
                                ident.inverse().apply(*slot)
                            };
                            if e2 != edge || d2 != dir || *s2 != expected {
                                Some(format!("after ({edge} {slot} {}) expected ({edge} {expected} {})", dir.symbol(), dir.symbol()))
                            } else {
                                None
                            }
                        }
                        WordItem::Passage { .. } => Some("a circle germ cannot be followed by a vertex passage".into()),
                    },
                    EdgeKind::Interval { .. } => {
                        let (v, port) = arrival(p, edge, *dir).expect("interval");
                        match next {
                            WordItem::Passage { vertex, from, .. } if *vertex == v && *from == port => None,
                            _ => Some(format!("after ({edge} {slot} {}) expected a passage ({v} {port}>_)", dir.symbol())),
                        }
                    }
                }
            }
            WordItem::Passage { vertex, to, .. } => match next {
                WordItem::Germ { edge, dir, .. } => {
                    let e = p.edge(edge).expect("checked");
                    match &e.kind {
                        EdgeKind::Interval { start, end } => {
                            let leave = if *dir == Direction::Forward { start } else { end };
                            if leave.vertex == *vertex && leave.port == *to {
                                None
                            } else {
                                Some(format!("edge {edge} does not leave {vertex}.{to} in that direction"))
                            }
                        }
                        EdgeKind::Circle { .. } => Some(format!("circle {edge} cannot meet vertex {vertex}")),
                    }
                }
                WordItem::Passage { .. } => Some("two consecutive vertex passages".into()),
            },
        };
        if let Some(msg) = problem {
            c.err(IssueCode::WordDiscontinuous, format!("{loc} item {i}"), msg);
        }
    }
}

fn check_charts(p: &SimplePolyhedron, c: &mut Collector) {
    for v in &p.vertices {
        let Some(ch) = chart::chart(&v.chart) else { continue };
        let loc = format!("vertex {}", v.id);
        let nbr = p.corner_incidence(&v.id);
        if let Err(msg) = ch.matches(&nbr) {
            c.err(IssueCode::ChartMismatch, &loc, msg);
            continue;
        }
        for (k, &(a, b)) in v.pairs.iter().enumerate() {
            let derived = transition(&nbr, a, b).expect("chart matched");
            if derived != v.trans[k] {
                c.err(
                    IssueCode::TransitionMismatch,
                    &loc,
                    format!("through-arc {a}-{b} declares {} but corners give {derived}", v.trans[k]),
                );
            }
        }
    }
}

fn check_connected(p: &SimplePolyhedron, c: &mut Collector) {
    // nodes: regions, then edges, then vertices, then free circles
    let nr = p.regions.len();
    let ne = p.edges.len();
    let nv = p.vertices.len();
    let mut uf = crate::util::UnionFind::new(nr + ne + nv + p.free_circles.len());
    for (ri, r) in p.regions.iter().enumerate() {
        for b in &r.boundary {
            match b {
                Boundary::Free(id) => {
                    let k = p.free_circles.iter().position(|f| f == id).expect("collected");
                    uf.union(ri, nr + ne + nv + k);
                }
                Boundary::Attached(word) => {
                    for item in word {
                        if let WordItem::Germ { edge, .. } = item {
                            uf.union(ri, nr + p.edge_index(edge).expect("checked"));
                        }
                    }
                }
            }
        }
    }
    for (ei, e) in p.edges.iter().enumerate() {
        if let EdgeKind::Interval { start, end } = &e.kind {
            for r in [start, end] {
                uf.union(nr + ei, nr + ne + p.vertex_index(&r.vertex).expect("checked"));
            }
        }
    }
    let root = uf.find(0);
    if (0..uf.len()).any(|i| uf.find(i) != root) {
        c.err(IssueCode::Disconnected, "polyhedron", "underlying space is not connected");
    }
}
