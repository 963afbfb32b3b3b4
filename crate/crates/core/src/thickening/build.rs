//! Block-by-block thickening of a compatible simple polyhedron.
//!
//! Over the canonical triangulation K, each vertex x of K has "chambers": the
//! local complementary regions of K near x (two beside a region point, three
//! around a triple-edge point, four at a double point, one on a free
//! circle). The 3-manifold has one vertex per (x, chamber) and is assembled
//! from a prism triangle x interval over each triangle, a prism
//! segment x triangle over each triple segment and a tetrahedron at each
//! double point. Prisms are cut into tetrahedra along quad diagonals through
//! the smallest vertex label, so neighbouring blocks agree.

use std::collections::BTreeMap;

use super::tri::Triangulation3;
use super::verify::classes;
use crate::complexes::{triangulate, SimplicialComplex2};
use crate::model::{chart, Cell, EdgeKind, SimplePolyhedron};
use crate::monodromy::check_compatibility;
use crate::util::{ParityUnionFind, UnionFind};
use crate::Error;

/// Output of the construction with the data it was built from.
#[derive(Clone, Debug)]
pub struct Thickening {
    pub triangulation: Triangulation3,
    pub complex: SimplicialComplex2,
    /// Per triple edge: false when slots 0,1,2 turn positively about the
    /// forward direction.
    pub rotation: Vec<bool>,
    /// Per double point: whether the mirror image of the standard local
    /// model is used.
    pub mirrored: Vec<bool>,
    /// For every 3-manifold vertex: (vertex of K, chamber index at it).
    pub vertex_origin: Vec<(usize, usize)>,
}

fn sign3(p: [usize; 3]) -> bool {
    let inv = (p[0] > p[1]) as u8 + (p[0] > p[2]) as u8 + (p[1] > p[2]) as u8;
    inv.is_multiple_of(2)
}

/// Rotation of the local model about port `a`: the other ports in positive
/// cyclic order.
fn port_rotation(a: u8) -> [u8; 3] {
    let o: Vec<u8> = (0..4).filter(|&x| x != a).collect();
    let odd = |q: [u8; 4]| {
        let mut inv = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                inv += (q[i] > q[j]) as u8;
            }
        }
        inv % 2 == 1
    };
    if odd([a, o[0], o[1], o[2]]) {
        [o[0], o[1], o[2]]
    } else {
        [o[0], o[2], o[1]]
    }
}

/// Whether the slots around port `a` appear in the reverse of 0,1,2 order
/// under the standard model.
fn port_bit(nbr: &[[Option<u8>; 3]; 4], a: u8) -> Result<bool, Error> {
    let rot = port_rotation(a);
    let mut slots = [0usize; 3];
    for (k, &x) in rot.iter().enumerate() {
        slots[k] = nbr[a as usize]
            .iter()
            .position(|o| *o == Some(x))
            .ok_or_else(|| Error::Internal(format!("port {a} has no corner towards {x}")))?;
    }
    Ok(!sign3(slots))
}

fn solve_rotations(p: &SimplePolyhedron) -> Result<(Vec<bool>, Vec<bool>), Error> {
    let ne = p.edges.len();
    let mut uf = ParityUnionFind::new(ne + p.vertices.len());
    let nbrs: Vec<_> = p.vertices.iter().map(|v| p.corner_incidence(&v.id)).collect();
    for (i, e) in p.edges.iter().enumerate() {
        if let EdgeKind::Interval { start, end } = &e.kind {
            let vs = p.vertex_index(&start.vertex).expect("validated");
            let ve = p.vertex_index(&end.vertex).expect("validated");
            uf.union(i, ne + vs, port_bit(&nbrs[vs], start.port)?);
            uf.union(i, ne + ve, !port_bit(&nbrs[ve], end.port)?);
        }
    }
    if uf.any_conflict() {
        return Err(Error::Internal("no consistent rotation system for a compatible polyhedron".into()));
    }
    let rotation = (0..ne).map(|i| uf.find(i).1).collect();
    let mirrored = (0..p.vertices.len()).map(|v| uf.find(ne + v).1).collect();
    Ok((rotation, mirrored))
}

/// Side of triangle `t` (sorted) facing the normal of the ordered triple `o`:
/// 0 for the orientation of the sorted order, 1 otherwise.
fn side(t: &[usize; 3], o: [usize; 3]) -> usize {
    let pos = o.map(|x| t.iter().position(|&y| y == x).expect("vertex of triangle"));
    if sign3(pos) {
        0
    } else {
        1
    }
}

fn third(t: &[usize; 3], x: usize, y: usize) -> usize {
    *t.iter().find(|&&z| z != x && z != y).expect("triangle")
}

/// Cuts the prism with bottom `u`, top `w` and vertical edges `u[i]w[i]`
/// (possibly collapsed) into tetrahedra, using on each quad the diagonal
/// through its smallest label.
fn split_prism(u: [usize; 3], w: [usize; 3]) -> Result<Vec<[usize; 4]>, Error> {
    // towards[p][q]: the quad p,q uses the diagonal u_p - w_q
    let towards = |p: usize, q: usize| -> Option<bool> {
        if u[p] == w[p] || u[q] == w[q] {
            return None;
        }
        let m = u[p].min(u[q]).min(w[p]).min(w[q]);
        Some(m == u[p] || m == w[q])
    };
    for order in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        let [i, j, k] = order;
        let fits = [(i, j), (i, k), (j, k)].iter().all(|&(p, q)| towards(p, q) != Some(false));
        if !fits {
            continue;
        }
        let tets = [[u[i], u[j], u[k], w[k]], [u[i], u[j], w[j], w[k]], [u[i], w[i], w[j], w[k]]];
        return Ok(tets
            .into_iter()
            .filter_map(|mut t| {
                t.sort_unstable();
                t.windows(2).all(|x| x[0] != x[1]).then_some(t)
            })
            .collect());
    }
    Err(Error::Internal(format!("prism {u:?}/{w:?} has cyclic diagonals")))
}

pub fn thicken(p: &SimplePolyhedron) -> Result<Triangulation3, Error> {
    Ok(thicken_detailed(p)?.triangulation)
}

pub fn thicken_detailed(p: &SimplePolyhedron) -> Result<Thickening, Error> {
    for v in &p.vertices {
        if chart::chart(&v.chart).is_none_or(|c| c.chambers.is_empty()) {
            return Err(Error::ChartUnsupported(v.chart.clone()));
        }
    }
    let report = check_compatibility(p)?;
    if let Some(w) = &report.witness {
        return Err(Error::Incompatible { witness: w.describe(&report.graph) });
    }
    let k = triangulate(p)?;
    let (rotation, mirrored) = solve_rotations(p)?;
    let tris = &k.triangles;
    let elem = |t: usize, z: usize, s: usize| -> usize {
        let pos = tris[t].iter().position(|&x| x == z).expect("vertex of triangle");
        (3 * t + pos) * 2 + s
    };
    let mut uf = UnionFind::new(6 * tris.len());
    let edge_tris = k.edge_triangles();

    // the three triangles of each triple segment in positive cyclic order
    // about its forward direction
    let mut segments: Vec<(usize, usize, [usize; 3], String)> = Vec::new();
    for (e, ts) in edge_tris.iter().enumerate() {
        let [x, y] = k.edges[e];
        match ts.len() {
            1 => {
                let t = ts[0];
                for z in [x, y] {
                    uf.union(elem(t, z, 0), elem(t, z, 1));
                }
            }
            2 => {
                let (t, t2) = (ts[0], ts[1]);
                let s = side(&tris[t], [x, y, third(&tris[t], x, y)]);
                let s2 = side(&tris[t2], [y, x, third(&tris[t2], x, y)]);
                for z in [x, y] {
                    uf.union(elem(t, z, s), elem(t2, z, s2));
                    uf.union(elem(t, z, 1 - s), elem(t2, z, 1 - s2));
                }
            }
            3 => {
                let sheets: Vec<_> = ts.iter().map(|&t| k.triangle_sheets[t]).collect();
                let Some(first) = sheets[0] else {
                    return Err(Error::Internal(format!("segment {x}-{y} has an unlabelled sheet")));
                };
                let ei = first.edge;
                let path = &k.edge_paths[ei];
                let j = path
                    .windows(2)
                    .position(|w| (w[0] == x && w[1] == y) || (w[0] == y && w[1] == x))
                    .ok_or_else(|| Error::Internal(format!("segment {x}-{y} not on its edge path")))?;
                let (a, b) = (path[j], path[j + 1]);
                let slot_order: [u8; 3] = if rotation[ei] { [0, 2, 1] } else { [0, 1, 2] };
                let mut ordered = [0usize; 3];
                for (i, slot) in slot_order.iter().enumerate() {
                    let pos = sheets
                        .iter()
                        .position(|s| matches!(s, Some(sh) if sh.edge == ei && sh.slot == *slot))
                        .ok_or_else(|| Error::Internal(format!("segment {x}-{y} lacks slot {slot}")))?;
                    ordered[i] = ts[pos];
                }
                for i in 0..3 {
                    let (t, t2) = (ordered[i], ordered[(i + 1) % 3]);
                    let s = side(&tris[t], [a, b, third(&tris[t], a, b)]);
                    let s2 = side(&tris[t2], [b, a, third(&tris[t2], a, b)]);
                    for z in [a, b] {
                        uf.union(elem(t, z, s), elem(t2, z, s2));
                    }
                }
                segments.push((a, b, ordered, p.edges[ei].id.clone()));
            }
            n => return Err(Error::Internal(format!("edge {x}-{y} lies in {n} triangles"))),
        }
    }

    // 3-manifold vertices: one per (vertex of K, chamber)
    let mut vertex_tris = vec![Vec::new(); k.num_vertices()];
    for (t, tri) in tris.iter().enumerate() {
        for &z in tri {
            vertex_tris[z].push(t);
        }
    }
    let mut label: BTreeMap<usize, usize> = BTreeMap::new();
    let mut vertex_origin = Vec::new();
    for (z, ts) in vertex_tris.iter().enumerate() {
        let mut local = 0;
        for &t in ts {
            for s in 0..2 {
                let r = uf.find(elem(t, z, s));
                if let std::collections::btree_map::Entry::Vacant(e) = label.entry(r) {
                    e.insert(vertex_origin.len());
                    vertex_origin.push((z, local));
                    local += 1;
                }
            }
        }
        let expected = match &k.vertex_cells[z] {
            Cell::Vertex(_) => 4,
            Cell::Edge(_) => 3,
            Cell::FreeCircle(_) => 1,
            Cell::Region(_) => 2,
        };
        if local != expected {
            return Err(Error::Internal(format!(
                "vertex {z} ({}) has {local} chambers, expected {expected}",
                k.vertex_cells[z].tag()
            )));
        }
    }
    let mut nv = |t: usize, z: usize, s: usize| -> usize { label[&uf.find(elem(t, z, s))] };

    let mut tets: Vec<([usize; 4], String)> = Vec::new();
    for (t, tri) in tris.iter().enumerate() {
        let u = tri.map(|z| nv(t, z, 1));
        let w = tri.map(|z| nv(t, z, 0));
        let free = [[tri[0], tri[1]], [tri[0], tri[2]], [tri[1], tri[2]]].iter().find_map(|&[a, b]| {
            match &k.edge_cells[k.edge_id(a, b).expect("face")] {
                c @ Cell::FreeCircle(_) => Some(c.tag()),
                _ => None,
            }
        });
        let tag = free.unwrap_or_else(|| k.triangle_cells[t].tag());
        for tet in split_prism(u, w)? {
            tets.push((tet, tag.clone()));
        }
    }
    for (a, b, ordered, id) in &segments {
        let mut u = [0; 3];
        let mut w = [0; 3];
        for i in 0..3 {
            let t = ordered[i];
            let s = side(&tris[t], [*a, *b, third(&tris[t], *a, *b)]);
            u[i] = nv(t, *a, s);
            w[i] = nv(t, *b, s);
        }
        for tet in split_prism(u, w)? {
            tets.push((tet, Cell::Edge(id.clone()).tag()));
        }
    }
    for (z, cell) in k.vertex_cells.iter().enumerate() {
        if let Cell::Vertex(id) = cell {
            let mut ch: Vec<usize> = Vec::new();
            for &t in &vertex_tris[z] {
                for s in 0..2 {
                    ch.push(nv(t, z, s));
                }
            }
            ch.sort_unstable();
            ch.dedup();
            let tet: [usize; 4] = ch.try_into().map_err(|_| Error::Internal(format!("double point {id}: bad chamber count")))?;
            tets.push((tet, cell.tag()));
        }
    }
    tets.sort();
    let triangulation = Triangulation3::from_labelled(&tets).map_err(|e| Error::Internal(e.to_string()))?;
    let used: std::collections::BTreeSet<usize> = tets.iter().flat_map(|(t, _)| *t).collect();
    if classes(&triangulation).n_vertices != used.len() {
        return Err(Error::Internal("vertex links are pinched".into()));
    }
    Ok(Thickening { triangulation, complex: k, rotation, mirrored, vertex_origin })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_diagonal_split_covers_prism() {
        let tets = split_prism([0, 1, 2], [3, 4, 5]).unwrap();
        assert_eq!(tets.len(), 3);
        let collapsed = split_prism([0, 1, 2], [0, 4, 5]).unwrap();
        assert_eq!(collapsed.len(), 2);
    }

    #[test]
    fn rotations_are_cyclic_orders_of_the_other_ports() {
        for a in 0..4 {
            let r = port_rotation(a);
            assert!(!r.contains(&a));
        }
    }
}
