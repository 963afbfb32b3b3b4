//! Canonical triangulation of a simple polyhedron.
//!
//! Every 1-cell (triple edge, free circle, region-internal arc) is cut into
//! three segments. Each region becomes its fundamental polygon, with word
//! `[a1,b1]...[ag,bg]` (orientable) or `a1 a1 ... ag ag` (non-orientable),
//! followed by `c_j B_j c_j^-1` for each boundary component `B_j`. The polygon
//! is filled by an inner ring of fresh vertices coned to a centre.

use std::collections::BTreeMap;

use super::simplicial::{Sheet, SimplicialComplex2};
use crate::model::{Boundary, Cell, Direction, EdgeKind, SimplePolyhedron, WordItem};
use crate::Error;

struct Builder {
    vertex_cells: Vec<Cell>,
    triangles: Vec<([usize; 3], Cell, Option<Sheet>)>,
    edge_cells: BTreeMap<[usize; 2], Cell>,
}

impl Builder {
    fn vertex(&mut self, cell: Cell) -> usize {
        self.vertex_cells.push(cell);
        self.vertex_cells.len() - 1
    }

    /// A trisected path from `a` to `b` (possibly a loop).
    fn path(&mut self, a: usize, b: usize, cell: &Cell) -> Vec<usize> {
        let m1 = self.vertex(cell.clone());
        let m2 = self.vertex(cell.clone());
        let p = vec![a, m1, m2, b];
        for w in p.windows(2) {
            let key = if w[0] < w[1] { [w[0], w[1]] } else { [w[1], w[0]] };
            self.edge_cells.insert(key, cell.clone());
        }
        p
    }
}

/// Polygon side: start vertex and the prong it rests on, if any.
type Side = (usize, Option<Sheet>);

fn push_path(poly: &mut Vec<Side>, path: &[usize], sheet: Option<Sheet>, reverse: bool) {
    let n = path.len();
    for i in 0..n - 1 {
        let v = if reverse { path[n - 1 - i] } else { path[i] };
        poly.push((v, sheet));
    }
}

pub fn triangulate(p: &SimplePolyhedron) -> Result<SimplicialComplex2, Error> {
    p.require_valid()?;
    let mut b = Builder { vertex_cells: Vec::new(), triangles: Vec::new(), edge_cells: BTreeMap::new() };

    let dp: BTreeMap<&str, usize> =
        p.vertices.iter().map(|v| (v.id.as_str(), b.vertex(Cell::Vertex(v.id.clone())))).collect();

    let mut edge_paths = Vec::with_capacity(p.edges.len());
    for e in &p.edges {
        let cell = Cell::Edge(e.id.clone());
        let path = match &e.kind {
            EdgeKind::Interval { start, end } => b.path(dp[start.vertex.as_str()], dp[end.vertex.as_str()], &cell),
            EdgeKind::Circle { .. } => {
                let marker = b.vertex(cell.clone());
                b.path(marker, marker, &cell)
            }
        };
        edge_paths.push(path);
    }
    let mut free_paths = BTreeMap::new();
    for c in &p.free_circles {
        let cell = Cell::FreeCircle(c.clone());
        let marker = b.vertex(cell.clone());
        free_paths.insert(c.as_str(), b.path(marker, marker, &cell));
    }

    for r in &p.regions {
        let cell = Cell::Region(r.id.clone());
        let mut poly: Vec<Side> = Vec::new();
        let x = b.vertex(cell.clone());
        let handles = if r.orientable { 2 * r.genus } else { r.genus };
        if handles == 0 && r.boundary.is_empty() {
            let y = b.vertex(cell.clone());
            let a = b.path(x, y, &cell);
            push_path(&mut poly, &a, None, false);
            push_path(&mut poly, &a, None, true);
        } else if r.orientable {
            for _ in 0..r.genus {
                let a = b.path(x, x, &cell);
                let bb = b.path(x, x, &cell);
                push_path(&mut poly, &a, None, false);
                push_path(&mut poly, &bb, None, false);
                push_path(&mut poly, &a, None, true);
                push_path(&mut poly, &bb, None, true);
            }
        } else {
            for _ in 0..r.genus {
                let a = b.path(x, x, &cell);
                push_path(&mut poly, &a, None, false);
                push_path(&mut poly, &a, None, false);
            }
        }
        for comp in &r.boundary {
            let mut cycle: Vec<Side> = Vec::new();
            match comp {
                Boundary::Free(c) => push_path(&mut cycle, &free_paths[c.as_str()], None, false),
                Boundary::Attached(word) => {
                    for item in word {
                        if let WordItem::Germ { edge, slot, dir } = item {
                            let ei = p.edge_index(edge).ok_or_else(|| Error::InvalidInput(edge.clone()))?;
                            let sheet = Some(Sheet { edge: ei, slot: *slot });
                            push_path(&mut cycle, &edge_paths[ei], sheet, *dir == Direction::Backward);
                        }
                    }
                }
            }
            let start = cycle[0].0;
            let c = b.path(x, start, &cell);
            push_path(&mut poly, &c, None, false);
            poly.extend(cycle);
            push_path(&mut poly, &c, None, true);
        }

        let n = poly.len();
        let ring: Vec<usize> = (0..n).map(|_| b.vertex(cell.clone())).collect();
        let centre = b.vertex(cell.clone());
        for k in 0..n {
            let (pk, sheet) = poly[k];
            let pk1 = poly[(k + 1) % n].0;
            let (rk, rk1) = (ring[k], ring[(k + 1) % n]);
            b.triangles.push(([pk, pk1, rk], cell.clone(), sheet));
            b.triangles.push(([pk1, rk, rk1], cell.clone(), None));
            b.triangles.push(([centre, rk, rk1], cell.clone(), None));
        }
    }
    let mut k = SimplicialComplex2::build(b.vertex_cells, b.triangles, &b.edge_cells)?;
    k.edge_paths = edge_paths;
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::catalog;

    #[test]
    fn disc_has_one_boundary_circle() {
        let k = triangulate(&catalog("disc").unwrap()).unwrap();
        k.check().unwrap();
        assert_eq!(k.euler(), 1);
        let bd = k.boundary_edges();
        assert_eq!(bd.len(), 3);
        assert_eq!(k.edge_components(&bd), 1);
        assert!(bd.iter().all(|&e| matches!(k.edge_cells[e], Cell::FreeCircle(_))));
    }

    #[test]
    fn triple_segments_carry_three_sheets() {
        let p = catalog("bing_house").unwrap();
        let k = triangulate(&p).unwrap();
        for (e, ts) in k.edge_triangles().iter().enumerate() {
            let expected = if matches!(k.edge_cells[e], Cell::Edge(_)) { 3 } else { 2 };
            assert_eq!(ts.len(), expected, "edge {:?}", k.edges[e]);
        }
    }
}
