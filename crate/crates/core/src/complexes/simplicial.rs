//! Two-dimensional simplicial complexes with cell provenance.

use std::collections::{BTreeMap, BTreeSet};

use super::chain::ChainComplex;
use super::snf::SparseMatrix;
use crate::model::Cell;
use crate::util::UnionFind;
use crate::Error;

/// The prong of a triple edge a triangle rests on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sheet {
    /// Index into the polyhedron's edge list.
    pub edge: usize,
    pub slot: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex2 {
    pub vertex_cells: Vec<Cell>,
    /// Sorted vertex pairs, in lexicographic order.
    pub edges: Vec<[usize; 2]>,
    pub edge_cells: Vec<Cell>,
    /// Sorted vertex triples, in lexicographic order.
    pub triangles: Vec<[usize; 3]>,
    pub triangle_cells: Vec<Cell>,
    pub triangle_sheets: Vec<Option<Sheet>>,
    /// Vertex path subdividing each triple edge of the source polyhedron
    /// (empty for complexes not built by `triangulate`).
    pub edge_paths: Vec<Vec<usize>>,
    edge_index: BTreeMap<[usize; 2], usize>,
}

fn sort2(a: usize, b: usize) -> [usize; 2] {
    if a < b {
        [a, b]
    } else {
        [b, a]
    }
}

fn sort3(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

impl SimplicialComplex2 {
    /// Assembles a complex from triangles. Edges not listed in `edge_cells`
    /// inherit the cell of the first triangle containing them.
    pub fn build(
        vertex_cells: Vec<Cell>,
        triangles: Vec<([usize; 3], Cell, Option<Sheet>)>,
        edge_cells: &BTreeMap<[usize; 2], Cell>,
    ) -> Result<Self, Error> {
        let n = vertex_cells.len();
        let mut tris: BTreeMap<[usize; 3], (Cell, Option<Sheet>)> = BTreeMap::new();
        for (t, cell, sheet) in triangles {
            let s = sort3(t);
            if s[0] == s[1] || s[1] == s[2] || s[2] >= n {
                return Err(Error::InvalidInput(format!("degenerate triangle {t:?}")));
            }
            if tris.insert(s, (cell, sheet)).is_some() {
                return Err(Error::InvalidInput(format!("duplicate triangle {s:?}")));
            }
        }
        let mut edges: BTreeMap<[usize; 2], Cell> = BTreeMap::new();
        for (t, (cell, _)) in &tris {
            for e in [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]] {
                edges.entry(e).or_insert_with(|| edge_cells.get(&e).cloned().unwrap_or_else(|| cell.clone()));
            }
        }
        let edge_list: Vec<[usize; 2]> = edges.keys().copied().collect();
        let edge_index = edge_list.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Ok(SimplicialComplex2 {
            vertex_cells,
            edge_cells: edges.into_values().collect(),
            edges: edge_list,
            triangle_cells: tris.values().map(|x| x.0.clone()).collect(),
            triangle_sheets: tris.values().map(|x| x.1).collect(),
            triangles: tris.into_keys().collect(),
            edge_paths: Vec::new(),
            edge_index,
        })
    }

    /// A complex from bare triangles; every simplex gets the provenance
    /// `r:<label>`.
    pub fn from_triangles(label: &str, triangles: &[[usize; 3]]) -> Result<Self, Error> {
        let n = triangles.iter().flatten().max().map_or(0, |&m| m + 1);
        let cell = Cell::Region(label.to_string());
        let used: BTreeSet<usize> = triangles.iter().flatten().copied().collect();
        if used.len() != n {
            return Err(Error::InvalidInput("vertex ids must be 0..n without gaps".into()));
        }
        Self::build(
            vec![cell.clone(); n],
            triangles.iter().map(|&t| (t, cell.clone(), None)).collect(),
            &BTreeMap::new(),
        )
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_cells.len()
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&sort2(a, b)).copied()
    }

    pub fn euler(&self) -> i64 {
        self.num_vertices() as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    /// Triangles containing each edge.
    pub fn edge_triangles(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.edges.len()];
        for (ti, t) in self.triangles.iter().enumerate() {
            for e in [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]] {
                out[self.edge_index[&e]].push(ti);
            }
        }
        out
    }

    /// Edges lying in exactly one triangle.
    pub fn boundary_edges(&self) -> Vec<usize> {
        self.edge_triangles().iter().enumerate().filter(|(_, ts)| ts.len() == 1).map(|(i, _)| i).collect()
    }

    /// Number of components of the subcomplex formed by the given edges.
    pub fn edge_components(&self, edges: &[usize]) -> usize {
        let mut uf = UnionFind::new(self.num_vertices());
        let mut touched = BTreeSet::new();
        for &e in edges {
            let [a, b] = self.edges[e];
            uf.union(a, b);
            touched.insert(a);
        }
        touched.iter().map(|&v| uf.find(v)).collect::<BTreeSet<_>>().len()
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.num_vertices());
        for &[a, b] in &self.edges {
            uf.union(a, b);
        }
        uf.labels().1 <= 1
    }

    /// Structural invariants: sorted tuples, faces present, provenance total.
    pub fn check(&self) -> Result<(), String> {
        let n = self.num_vertices();
        if self.edge_cells.len() != self.edges.len()
            || self.triangle_cells.len() != self.triangles.len()
            || self.triangle_sheets.len() != self.triangles.len()
        {
            return Err("provenance is not total".into());
        }
        if self.edges.windows(2).any(|w| w[0] >= w[1]) || self.triangles.windows(2).any(|w| w[0] >= w[1]) {
            return Err("simplices not sorted or duplicated".into());
        }
        if self.edges.iter().any(|e| e[0] >= e[1] || e[1] >= n) {
            return Err("bad edge".into());
        }
        for t in &self.triangles {
            if t[0] >= t[1] || t[1] >= t[2] {
                return Err(format!("unsorted triangle {t:?}"));
            }
            for e in [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]] {
                if !self.edge_index.contains_key(&e) {
                    return Err(format!("missing face {e:?} of {t:?}"));
                }
            }
        }
        Ok(())
    }

    /// Simplicial chain complex with the ordered bases vertices, edges,
    /// triangles.
    pub fn chain_complex(&self) -> ChainComplex {
        let (nv, ne, nt) = (self.num_vertices(), self.edges.len(), self.triangles.len());
        let mut d1 = SparseMatrix::zeros(nv, ne);
        for (j, &[a, b]) in self.edges.iter().enumerate() {
            d1.add(a, j, -1);
            d1.add(b, j, 1);
        }
        let mut d2 = SparseMatrix::zeros(ne, nt);
        for (j, &[a, b, c]) in self.triangles.iter().enumerate() {
            d2.add(self.edge_index[&[b, c]], j, 1);
            d2.add(self.edge_index[&[a, c]], j, -1);
            d2.add(self.edge_index[&[a, b]], j, 1);
        }
        ChainComplex::new(vec![nv, ne, nt], vec![d1, d2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::homology;

    #[test]
    fn boundary_of_tetrahedron_is_a_sphere() {
        let k = SimplicialComplex2::from_triangles("s", &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        k.check().unwrap();
        assert_eq!(k.euler(), 2);
        assert!(k.boundary_edges().is_empty());
        let h = homology(&k.chain_complex()).unwrap();
        assert_eq!(h.betti(), vec![1, 0, 1]);
    }

    #[test]
    fn rejects_duplicates() {
        assert!(SimplicialComplex2::from_triangles("s", &[[0, 1, 2], [2, 1, 0]]).is_err());
    }
}
