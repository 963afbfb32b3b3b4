//! Tetrahedra glued along faces.

use std::collections::BTreeMap;

use crate::Error;

/// Local vertices of face `f` (the face opposite vertex `f`), ascending.
pub fn face_vertices(f: u8) -> [u8; 3] {
    let mut out = [0u8; 3];
    let mut k = 0;
    for v in 0..4u8 {
        if v != f {
            out[k] = v;
            k += 1;
        }
    }
    out
}

/// Face `face` of some tetrahedron glued to face `face` of `tet`.
/// `perm[k]` is the position, in the target's ascending face-vertex list,
/// of the image of the source's `k`-th face vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gluing {
    pub tet: usize,
    pub face: u8,
    pub perm: [u8; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tet {
    /// Provenance tag of the cell this tetrahedron thickens.
    pub cell: String,
    pub gluings: [Option<Gluing>; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Triangulation3 {
    pub tets: Vec<Tet>,
}

/// Full vertex map of a gluing from face `f`: local vertex of the source to
/// local vertex of the target, with `f` sent to the target face.
pub fn vertex_map(f: u8, g: &Gluing) -> [u8; 4] {
    let src = face_vertices(f);
    let dst = face_vertices(g.face);
    let mut m = [0u8; 4];
    m[f as usize] = g.face;
    for k in 0..3 {
        m[src[k] as usize] = dst[g.perm[k] as usize];
    }
    m
}

pub fn perm_sign4(m: &[u8; 4]) -> i8 {
    let mut inv = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if m[i] > m[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn perm_sign3(p: &[u8; 3]) -> i8 {
    let inv = (p[0] > p[1]) as u8 + (p[0] > p[2]) as u8 + (p[1] > p[2]) as u8;
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn inverse_perm3(p: &[u8; 3]) -> [u8; 3] {
    let mut inv = [0u8; 3];
    for (k, &v) in p.iter().enumerate() {
        inv[v as usize] = k as u8;
    }
    inv
}

impl Triangulation3 {
    /// Glues tetrahedra given by global vertex labels along every shared
    /// triangle. Each triangle may lie in at most two tetrahedra.
    pub fn from_labelled(tets: &[([usize; 4], String)]) -> Result<Self, Error> {
        let mut faces: BTreeMap<[usize; 3], Vec<(usize, u8)>> = BTreeMap::new();
        for (i, (vs, _)) in tets.iter().enumerate() {
            let mut s = *vs;
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) || s != *vs {
                return Err(Error::InvalidInput(format!("tetrahedron {i} must have 4 distinct ascending labels")));
            }
            for f in 0..4u8 {
                let fv = face_vertices(f).map(|k| vs[k as usize]);
                faces.entry(fv).or_default().push((i, f));
            }
        }
        let mut out: Vec<Tet> = tets.iter().map(|(_, c)| Tet { cell: c.clone(), gluings: [None; 4] }).collect();
        for (key, users) in &faces {
            match users.as_slice() {
                [_] => {}
                [(i, f), (j, g)] => {
                    // both face lists are the same ascending labels
                    out[*i].gluings[*f as usize] = Some(Gluing { tet: *j, face: *g, perm: [0, 1, 2] });
                    out[*j].gluings[*g as usize] = Some(Gluing { tet: *i, face: *f, perm: [0, 1, 2] });
                }
                _ => {
                    return Err(Error::InvalidInput(format!("triangle {key:?} lies in {} tetrahedra", users.len())));
                }
            }
        }
        Ok(Triangulation3 { tets: out })
    }

    pub fn len(&self) -> usize {
        self.tets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tets.is_empty()
    }

    /// Structural problems: out-of-range targets, bad permutations, faces
    /// glued to themselves, non-involutive pairs, missing provenance.
    pub fn structural_issues(&self) -> Vec<String> {
        let mut issues = Vec::new();
        for (i, t) in self.tets.iter().enumerate() {
            if t.cell.is_empty() || t.cell.chars().any(char::is_whitespace) {
                issues.push(format!("tet {i}: missing or malformed provenance"));
            }
            for f in 0..4u8 {
                let Some(g) = t.gluings[f as usize] else { continue };
                let mut seen = [false; 3];
                if g.tet >= self.tets.len() || g.face > 3 || g.perm.iter().any(|&k| k > 2 || std::mem::replace(&mut seen[k as usize], true)) {
                    issues.push(format!("tet {i} face {f}: malformed gluing"));
                    continue;
                }
                if g.tet == i && g.face == f {
                    issues.push(format!("tet {i} face {f}: glued to itself"));
                    continue;
                }
                let back = self.tets[g.tet].gluings[g.face as usize];
                if back != Some(Gluing { tet: i, face: f, perm: inverse_perm3(&g.perm) }) {
                    issues.push(format!("tet {i} face {f}: gluing to {}.{} is not involutive", g.tet, g.face));
                }
            }
        }
        issues
    }

    /// Unglued faces as (tet, face).
    pub fn boundary_faces(&self) -> Vec<(usize, u8)> {
        let mut out = Vec::new();
        for (i, t) in self.tets.iter().enumerate() {
            for f in 0..4u8 {
                if t.gluings[f as usize].is_none() {
                    out.push((i, f));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelled_gluing_is_involutive() {
        let t = Triangulation3::from_labelled(&[([0, 1, 2, 3], "a".into()), ([1, 2, 3, 4], "b".into())]).unwrap();
        assert!(t.structural_issues().is_empty());
        assert_eq!(t.boundary_faces().len(), 6);
        let g = t.tets[0].gluings[0].unwrap();
        assert_eq!((g.tet, g.face), (1, 3));
        assert_eq!(vertex_map(0, &g), [3, 0, 1, 2]);
    }

    #[test]
    fn self_gluing_is_reported() {
        let mut t = Triangulation3::from_labelled(&[([0, 1, 2, 3], "a".into())]).unwrap();
        t.tets[0].gluings[0] = Some(Gluing { tet: 0, face: 0, perm: [0, 1, 2] });
        assert!(t.structural_issues().iter().any(|s| s.contains("itself")));
    }
}
