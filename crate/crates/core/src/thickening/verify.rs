//! Post-hoc checks of a glued triangulation: links, orientability,
//! boundary surfaces and cellular homology.

use std::collections::{BTreeMap, BTreeSet};

use super::tri::{face_vertices, perm_sign3, perm_sign4, vertex_map, Triangulation3};
use crate::complexes::{homology, ChainComplex, HomologyResult, SparseMatrix};
use crate::util::{ParityUnionFind, UnionFind};

const EDGES: [[u8; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

fn edge_index(a: u8, b: u8) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    EDGES.iter().position(|e| e == &[a, b]).expect("distinct local vertices")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryComponent {
    pub euler: i64,
    pub orientable: bool,
    pub triangles: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldReport {
    pub is_manifold: bool,
    pub orientable: bool,
    /// Per-tetrahedron orientation (+1/-1) making every gluing
    /// orientation-reversing, when orientable.
    pub orientation: Option<Vec<i8>>,
    pub connected: bool,
    pub boundary: Vec<BoundaryComponent>,
    /// Counts of vertex, edge, triangle and tetrahedron classes.
    pub cells: [usize; 4],
    pub euler: i64,
    pub issues: Vec<String>,
}

impl ManifoldReport {
    pub fn boundary_euler(&self) -> i64 {
        self.boundary.iter().map(|b| b.euler).sum()
    }
}

/// Vertex, edge and face classes of a structurally sound triangulation.
pub(crate) struct Classes {
    pub vertex: Vec<usize>, // (t*4+v) -> class
    pub n_vertices: usize,
    pub edge: Vec<(usize, bool)>, // (t*6+e) -> (class, reversed relative to class rep)
    pub n_edges: usize,
    pub edge_reversal: bool,
    /// (t*4+f) -> (class, orientation sign relative to the class rep)
    pub face: Vec<(usize, i8)>,
    pub n_faces: usize,
}

pub(crate) fn classes(t: &Triangulation3) -> Classes {
    let n = t.len();
    let mut vuf = UnionFind::new(4 * n);
    let mut euf = ParityUnionFind::new(6 * n);
    for (i, tet) in t.tets.iter().enumerate() {
        for f in 0..4u8 {
            let Some(g) = tet.gluings[f as usize] else { continue };
            let m = vertex_map(f, &g);
            for v in face_vertices(f) {
                vuf.union(4 * i + v as usize, 4 * g.tet + m[v as usize] as usize);
            }
            let fv = face_vertices(f);
            for (x, y) in [(fv[0], fv[1]), (fv[0], fv[2]), (fv[1], fv[2])] {
                let (mx, my) = (m[x as usize], m[y as usize]);
                euf.union(6 * i + edge_index(x, y), 6 * g.tet + edge_index(mx, my), mx > my);
            }
        }
    }
    let (vl, nv) = vuf.labels();
    let mut edge_roots = BTreeMap::new();
    let mut edge = Vec::with_capacity(6 * n);
    for k in 0..6 * n {
        let (r, par) = euf.find(k);
        let next = edge_roots.len();
        let c = *edge_roots.entry(r).or_insert(next);
        edge.push((c, par));
    }
    let mut face = vec![(usize::MAX, 1i8); 4 * n];
    let mut nf = 0;
    for (i, tet) in t.tets.iter().enumerate() {
        for f in 0..4u8 {
            if face[4 * i + f as usize].0 != usize::MAX {
                continue;
            }
            face[4 * i + f as usize] = (nf, 1);
            if let Some(g) = tet.gluings[f as usize] {
                face[4 * g.tet + g.face as usize] = (nf, perm_sign3(&g.perm));
            }
            nf += 1;
        }
    }
    Classes {
        vertex: vl,
        n_vertices: nv,
        n_edges: edge_roots.len(),
        edge,
        edge_reversal: euf.any_conflict(),
        face,
        n_faces: nf,
    }
}

pub fn verify_manifold(t: &Triangulation3) -> ManifoldReport {
    let mut issues = t.structural_issues();
    let n = t.len();
    if !issues.is_empty() || n == 0 {
        if n == 0 {
            issues.push("empty triangulation".into());
        }
        return ManifoldReport {
            is_manifold: false,
            orientable: false,
            orientation: None,
            connected: false,
            boundary: Vec::new(),
            cells: [0, 0, 0, n],
            euler: 0,
            issues,
        };
    }
    let cl = classes(t);
    if cl.edge_reversal {
        issues.push("an edge is identified with itself reversed".into());
    }

    // edge links: every local copy of an edge has two faces around it
    let mut edge_boundary_sides = vec![0usize; cl.n_edges];
    for (i, tet) in t.tets.iter().enumerate() {
        for (e, &[a, b]) in EDGES.iter().enumerate() {
            for f in 0..4u8 {
                if f != a && f != b && tet.gluings[f as usize].is_none() {
                    edge_boundary_sides[cl.edge[6 * i + e].0] += 1;
                }
            }
        }
    }
    for (c, &b) in edge_boundary_sides.iter().enumerate() {
        if b != 0 && b != 2 {
            issues.push(format!("edge class {c}: link is neither a circle nor an arc"));
        }
    }

    // vertex links: triangles (t,v), edges (t,v,f), vertices (t,v,w)
    let mut luf = UnionFind::new(16 * n);
    for (i, tet) in t.tets.iter().enumerate() {
        for f in 0..4u8 {
            let Some(g) = tet.gluings[f as usize] else { continue };
            let m = vertex_map(f, &g);
            for v in face_vertices(f) {
                for w in face_vertices(f) {
                    if v != w {
                        luf.union(16 * i + 4 * v as usize + w as usize, 16 * g.tet + 4 * m[v as usize] as usize + m[w as usize] as usize);
                    }
                }
            }
        }
    }
    let mut link_f = vec![0i64; cl.n_vertices];
    let mut link_b = vec![0i64; cl.n_vertices];
    let mut link_v: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); cl.n_vertices];
    for (i, tet) in t.tets.iter().enumerate() {
        for v in 0..4u8 {
            let c = cl.vertex[4 * i + v as usize];
            link_f[c] += 1;
            for f in 0..4u8 {
                if f != v && tet.gluings[f as usize].is_none() {
                    link_b[c] += 1;
                }
                if f != v {
                    link_v[c].insert(luf.find(16 * i + 4 * v as usize + f as usize));
                }
            }
        }
    }
    for c in 0..cl.n_vertices {
        let (f, b) = (link_f[c], link_b[c]);
        let e = (3 * f + b) / 2;
        let chi = link_v[c].len() as i64 - e + f;
        let ok = if b == 0 { chi == 2 } else { chi == 1 };
        if !ok {
            issues.push(format!("vertex class {c}: link has chi {chi} with {b} boundary edges"));
        }
    }

    // orientability and connectivity
    let mut ouf = ParityUnionFind::new(n);
    let mut cuf = UnionFind::new(n);
    for (i, tet) in t.tets.iter().enumerate() {
        for f in 0..4u8 {
            let Some(g) = tet.gluings[f as usize] else { continue };
            // o_i * o_j * sign = -1, so the orientations differ iff sign = +1
            ouf.union(i, g.tet, perm_sign4(&vertex_map(f, &g)) > 0);
            cuf.union(i, g.tet);
        }
    }
    let orientable = !ouf.any_conflict();
    let orientation = orientable.then(|| (0..n).map(|i| if ouf.find(i).1 { -1 } else { 1 }).collect());
    let connected = cuf.labels().1 == 1;

    let boundary = boundary_components(t, &cl, &mut issues);
    let euler = cl.n_vertices as i64 - cl.n_edges as i64 + cl.n_faces as i64 - n as i64;
    ManifoldReport {
        is_manifold: issues.is_empty(),
        orientable,
        orientation,
        connected,
        boundary,
        cells: [cl.n_vertices, cl.n_edges, cl.n_faces, n],
        euler,
        issues,
    }
}

fn boundary_components(t: &Triangulation3, cl: &Classes, issues: &mut Vec<String>) -> Vec<BoundaryComponent> {
    let faces = t.boundary_faces();
    let index: BTreeMap<(usize, u8), usize> = faces.iter().enumerate().map(|(k, &x)| (x, k)).collect();
    let mut puf = ParityUnionFind::new(faces.len());
    let mut cuf = UnionFind::new(faces.len());
    let dir = |f: u8, a: u8, b: u8| -> bool {
        let fv = face_vertices(f);
        let i = fv.iter().position(|&x| x == a).expect("on face");
        let j = fv.iter().position(|&x| x == b).expect("on face");
        j == (i + 1) % 3
    };
    for (k, &(t0, f0)) in faces.iter().enumerate() {
        let fv = face_vertices(f0);
        for (a0, b0, c0) in [(fv[0], fv[1], fv[2]), (fv[0], fv[2], fv[1]), (fv[1], fv[2], fv[0])] {
            // walk around edge a0b0 through the interior until the next
            // boundary face
            let (mut cur, mut a, mut b, mut cross) = (t0, a0, b0, c0);
            let mut guard = 0;
            let found = loop {
                guard += 1;
                if guard > 4 * t.len() + 4 {
                    break None;
                }
                match t.tets[cur].gluings[cross as usize] {
                    None => break Some((cur, cross, a, b)),
                    Some(g) => {
                        let m = vertex_map(cross, &g);
                        let entered = g.face;
                        cur = g.tet;
                        a = m[a as usize];
                        b = m[b as usize];
                        cross = (0..4u8).find(|&x| x != a && x != b && x != entered).expect("fourth vertex");
                    }
                }
            };
            let Some((t1, f1, a1, b1)) = found else {
                issues.push(format!("boundary walk around an edge of tet {t0} does not terminate"));
                continue;
            };
            let k1 = index[&(t1, f1)];
            cuf.union(k, k1);
            puf.union(k, k1, dir(f0, a0, b0) == dir(f1, a1, b1));
        }
    }
    let (labels, count) = cuf.labels();
    let mut out = Vec::new();
    for c in 0..count {
        let members: Vec<usize> = (0..faces.len()).filter(|&k| labels[k] == c).collect();
        let verts: BTreeSet<usize> = members
            .iter()
            .flat_map(|&k| {
                let (ti, f) = faces[k];
                face_vertices(f).map(|v| cl.vertex[4 * ti + v as usize])
            })
            .collect();
        let nf = members.len() as i64;
        let orientable = !members.iter().any(|&k| puf.is_conflicted(k));
        out.push(BoundaryComponent { euler: verts.len() as i64 - 3 * nf / 2 + nf, orientable, triangles: members.len() });
    }
    out
}

/// Cellular homology of the glued complex in degrees 0..=3.
pub fn homology3(t: &Triangulation3) -> HomologyResult {
    let cl = classes(t);
    let n = t.len();
    let mut d1 = SparseMatrix::zeros(cl.n_vertices, cl.n_edges);
    let mut d2 = SparseMatrix::zeros(cl.n_edges, cl.n_faces);
    let mut d3 = SparseMatrix::zeros(cl.n_faces, n);
    let mut edge_done = vec![false; cl.n_edges];
    let mut face_done = vec![false; cl.n_faces];
    for i in 0..n {
        for (e, &[a, b]) in EDGES.iter().enumerate() {
            let (c, rev) = cl.edge[6 * i + e];
            if !edge_done[c] {
                edge_done[c] = true;
                let (lo, hi) = if rev { (b, a) } else { (a, b) };
                d1.add(cl.vertex[4 * i + lo as usize], c, -1);
                d1.add(cl.vertex[4 * i + hi as usize], c, 1);
            }
        }
        for f in 0..4u8 {
            let (c, s) = cl.face[4 * i + f as usize];
            d3.add(c, i, if f % 2 == 0 { s as i64 } else { -(s as i64) });
            if !face_done[c] && s == 1 {
                face_done[c] = true;
                let [v0, v1, v2] = face_vertices(f);
                for (x, y, sign) in [(v1, v2, 1i64), (v0, v2, -1), (v0, v1, 1)] {
                    let (ec, rev) = cl.edge[6 * i + edge_index(x, y)];
                    d2.add(ec, c, if rev { -sign } else { sign });
                }
            }
        }
    }
    let cc = ChainComplex::new(vec![cl.n_vertices, cl.n_edges, cl.n_faces, n], vec![d1, d2, d3]);
    homology(&cc).expect("cellular boundary maps of a glued complex compose to zero")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_tets_make_a_ball() {
        let t = Triangulation3::from_labelled(&[([0, 1, 2, 3], "a".into()), ([1, 2, 3, 4], "b".into())]).unwrap();
        let r = verify_manifold(&t);
        assert!(r.is_manifold, "{:?}", r.issues);
        assert!(r.orientable && r.connected);
        assert_eq!(r.boundary, vec![BoundaryComponent { euler: 2, orientable: true, triangles: 6 }]);
        assert_eq!(homology3(&t).betti(), vec![1, 0, 0, 0]);
    }
}
