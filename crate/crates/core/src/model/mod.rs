//! Combinatorial encoding of simple polyhedra.
//!
//! A polyhedron is made of surface regions glued along triple edges (each
//! carrying three prong slots) that may cross at double points. Regions may
//! also have free boundary circles.

mod catalog;
pub mod chart;
mod validate;

pub use catalog::{catalog, catalog_names, CATALOG_NAMES};
pub use validate::{validate, Issue, IssueCode, SingularSummary, ValidationReport};

use crate::perm::Perm3;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PortRef {
    pub vertex: String,
    pub port: u8,
}

impl PortRef {
    pub fn new(vertex: impl Into<String>, port: u8) -> Self {
        PortRef { vertex: vertex.into(), port }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Interval { start: PortRef, end: PortRef },
    /// A vertex-free triple circle. `ident` maps the slot labels at the end of
    /// one forward traversal back onto the labels at its start.
    Circle { ident: Perm3 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleEdge {
    pub id: String,
    pub kind: EdgeKind,
}

impl TripleEdge {
    pub fn is_circle(&self) -> bool {
        matches!(self.kind, EdgeKind::Circle { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublePoint {
    pub id: String,
    pub chart: String,
    /// The two through-arcs, as pairs of ports.
    pub pairs: [(u8, u8); 2],
    /// Per through-arc, slot images from the first port to the second.
    pub trans: [Perm3; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Direction::Forward => '+',
            Direction::Backward => '-',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordItem {
    Germ { edge: String, slot: u8, dir: Direction },
    Passage { vertex: String, from: u8, to: u8 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Boundary {
    Free(String),
    Attached(Vec<WordItem>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub id: String,
    pub genus: u32,
    pub orientable: bool,
    pub boundary: Vec<Boundary>,
}

impl Region {
    /// Euler characteristic of the region as an abstract surface.
    pub fn surface_euler(&self) -> i64 {
        let handles = if self.orientable { 2 * self.genus as i64 } else { self.genus as i64 };
        2 - handles - self.boundary.len() as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplePolyhedron {
    pub name: String,
    pub vertices: Vec<DoublePoint>,
    pub edges: Vec<TripleEdge>,
    pub regions: Vec<Region>,
    pub free_circles: Vec<String>,
}

impl SimplePolyhedron {
    /// Builds a polyhedron in canonical order: vertices, edges and regions
    /// sorted by id, free circles collected from region boundaries.
    pub fn new(
        name: impl Into<String>,
        mut vertices: Vec<DoublePoint>,
        mut edges: Vec<TripleEdge>,
        mut regions: Vec<Region>,
    ) -> Self {
        vertices.sort_by(|a, b| a.id.cmp(&b.id));
        edges.sort_by(|a, b| a.id.cmp(&b.id));
        regions.sort_by(|a, b| a.id.cmp(&b.id));
        let mut free_circles: Vec<String> = regions
            .iter()
            .flat_map(|r| r.boundary.iter())
            .filter_map(|b| match b {
                Boundary::Free(c) => Some(c.clone()),
                Boundary::Attached(_) => None,
            })
            .collect();
        free_circles.sort();
        free_circles.dedup();
        SimplePolyhedron { name: name.into(), vertices, edges, regions, free_circles }
    }

    pub fn vertex(&self, id: &str) -> Option<&DoublePoint> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn edge(&self, id: &str) -> Option<&TripleEdge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    /// Returns `Err(InvalidInput)` unless the encoding validates.
    pub fn require_valid(&self) -> Result<ValidationReport, Error> {
        let report = validate(self);
        if report.ok {
            Ok(report)
        } else {
            Err(Error::InvalidInput(report.first_error()))
        }
    }

    /// Edge that occupies `port` of `vertex`, and whether the port is its start.
    pub fn edge_at_port(&self, vertex: &str, port: u8) -> Option<(usize, bool)> {
        self.edges.iter().enumerate().find_map(|(i, e)| match &e.kind {
            EdgeKind::Interval { start, end } => {
                if start.vertex == vertex && start.port == port {
                    Some((i, true))
                } else if end.vertex == vertex && end.port == port {
                    Some((i, false))
                } else {
                    None
                }
            }
            EdgeKind::Circle { .. } => None,
        })
    }

    /// Corner incidence at one double point: `nbr[port][slot]` is the port on
    /// the other side of the region corner leaving `(port, slot)`.
    pub fn corner_incidence(&self, vertex: &str) -> [[Option<u8>; 3]; 4] {
        let mut nbr = [[None; 3]; 4];
        for region in &self.regions {
            for b in &region.boundary {
                let Boundary::Attached(word) = b else { continue };
                let n = word.len();
                for (i, item) in word.iter().enumerate() {
                    let WordItem::Passage { vertex: v, from, to } = item else { continue };
                    if v != vertex || *from > 3 || *to > 3 || n < 2 {
                        continue;
                    }
                    let prev = &word[(i + n - 1) % n];
                    let next = &word[(i + 1) % n];
                    if let (WordItem::Germ { slot: s_in, .. }, WordItem::Germ { slot: s_out, .. }) =
                        (prev, next)
                    {
                        if *s_in < 3 && *s_out < 3 {
                            nbr[*from as usize][*s_in as usize] = Some(*to);
                            nbr[*to as usize][*s_out as usize] = Some(*from);
                        }
                    }
                }
            }
        }
        nbr
    }

    /// Euler characteristic of the canonical cellulation: one 0-cell per
    /// double point, circle marker, free-circle marker and region basepoint;
    /// one 1-cell per triple edge, free circle and region-internal arc; one
    /// 2-cell per region.
    pub fn cell_counts(&self) -> (i64, i64, i64) {
        let circles = self.edges.iter().filter(|e| e.is_circle()).count() as i64;
        let mut v = self.vertices.len() as i64 + circles + self.free_circles.len() as i64;
        let mut e = self.edges.len() as i64 + self.free_circles.len() as i64;
        let f = self.regions.len() as i64;
        for r in &self.regions {
            let (letters, extra_vertices) = region_internal_cells(r);
            v += extra_vertices;
            e += letters;
        }
        (v, e, f)
    }
}

/// Internal 1-cells and 0-cells a region contributes to the cellulation.
pub(crate) fn region_internal_cells(r: &Region) -> (i64, i64) {
    let handles = if r.orientable { 2 * r.genus as i64 } else { r.genus as i64 };
    let b = r.boundary.len() as i64;
    if handles == 0 && b == 0 {
        // sphere: polygon a a^-1 with two distinct endpoints
        (1, 2)
    } else {
        (handles + b, 1)
    }
}

/// Euler characteristic of the polyhedron.
pub fn euler_characteristic(p: &SimplePolyhedron) -> Result<i64, Error> {
    p.require_valid()?;
    let (v, e, f) = p.cell_counts();
    Ok(v - e + f)
}

/// A cell of the canonical cellulation, used as provenance tag.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Vertex(String),
    Edge(String),
    FreeCircle(String),
    Region(String),
}

impl Cell {
    pub fn tag(&self) -> String {
        match self {
            Cell::Vertex(id) => format!("v:{id}"),
            Cell::Edge(id) => format!("e:{id}"),
            Cell::FreeCircle(id) => format!("f:{id}"),
            Cell::Region(id) => format!("r:{id}"),
        }
    }

    pub fn parse_tag(s: &str) -> Option<Cell> {
        let (kind, id) = s.split_once(':')?;
        if id.is_empty() {
            return None;
        }
        let id = id.to_string();
        Some(match kind {
            "v" => Cell::Vertex(id),
            "e" => Cell::Edge(id),
            "f" => Cell::FreeCircle(id),
            "r" => Cell::Region(id),
            _ => return None,
        })
    }

    /// Dimension of the cell in the cellulation.
    pub fn dim(&self) -> u8 {
        match self {
            Cell::Vertex(_) => 0,
            Cell::Edge(_) | Cell::FreeCircle(_) => 1,
            Cell::Region(_) => 2,
        }
    }
}

impl SimplePolyhedron {
    /// Whether `a` lies in the closure of `b` (or equals it).
    pub fn cell_incident(&self, a: &Cell, b: &Cell) -> bool {
        if a == b {
            return true;
        }
        match (a, b) {
            (Cell::Vertex(v), Cell::Edge(e)) => match self.edge(e).map(|e| &e.kind) {
                Some(EdgeKind::Interval { start, end }) => &start.vertex == v || &end.vertex == v,
                _ => false,
            },
            (Cell::Vertex(_) | Cell::Edge(_) | Cell::FreeCircle(_), Cell::Region(r)) => {
                let Some(r) = self.regions.iter().find(|x| &x.id == r) else { return false };
                r.boundary.iter().any(|b| match (b, a) {
                    (Boundary::Free(c), Cell::FreeCircle(x)) => c == x,
                    (Boundary::Attached(w), Cell::Edge(x)) => {
                        w.iter().any(|it| matches!(it, WordItem::Germ { edge, .. } if edge == x))
                    }
                    (Boundary::Attached(w), Cell::Vertex(x)) => {
                        w.iter().any(|it| matches!(it, WordItem::Passage { vertex, .. } if vertex == x))
                    }
                    _ => false,
                })
            }
            _ => false,
        }
    }

    /// All cells of the cellulation that carry an id.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> = self.vertices.iter().map(|v| Cell::Vertex(v.id.clone())).collect();
        out.extend(self.edges.iter().map(|e| Cell::Edge(e.id.clone())));
        out.extend(self.free_circles.iter().map(|c| Cell::FreeCircle(c.clone())));
        out.extend(self.regions.iter().map(|r| Cell::Region(r.id.clone())));
        out
    }
}
