//! Finite group presentations: extraction from a 2-complex, Tietze-style
//! simplification and certificates of (non)triviality.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use super::simplicial::SimplicialComplex2;
use super::snf::smith_normal_form;
use crate::Error;

/// A letter is `g + 1` for generator `g`, `-(g + 1)` for its inverse.
pub type Word = Vec<i32>;

pub const DEFAULT_MOVES: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pi1Status {
    Trivial,
    Nontrivial,
    Unknown,
}

impl Pi1Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Pi1Status::Trivial => "trivial",
            Pi1Status::Nontrivial => "nontrivial",
            Pi1Status::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The presentation was reduced to no generators.
    Empty,
    /// Abelianization `Z^rank + torsion`, nonzero.
    Abelianization { rank: usize, torsion: Vec<i64> },
    /// A homomorphism with nontrivial image in `Sym(degree)`; `images[g]`
    /// lists the images of `0..degree` under generator `g`.
    FiniteImage { degree: usize, images: Vec<Vec<u8>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    pub status: Pi1Status,
    pub certificate: Option<Certificate>,
    /// Moves spent by the last simplification.
    pub moves: usize,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        Presentation { generators, relators, status: Pi1Status::Unknown, certificate: None, moves: 0 }
    }

    /// Builds a presentation from single-letter generators; an upper-case
    /// letter denotes the inverse.
    pub fn from_letters(generators: &str, relators: &[&str]) -> Result<Self, Error> {
        let gens: Vec<char> = generators.chars().collect();
        if gens.iter().any(|c| !c.is_ascii_lowercase()) {
            return Err(Error::InvalidInput("generators must be lower-case letters".into()));
        }
        let rels = relators
            .iter()
            .map(|r| {
                r.chars()
                    .map(|c| {
                        let lower = c.to_ascii_lowercase();
                        let g = gens
                            .iter()
                            .position(|&x| x == lower)
                            .ok_or_else(|| Error::InvalidInput(format!("unknown generator '{c}'")))?;
                        Ok(if c.is_ascii_uppercase() { -(g as i32 + 1) } else { g as i32 + 1 })
                    })
                    .collect::<Result<Word, Error>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(gens.iter().map(|c| c.to_string()).collect(), rels))
    }

    fn letter(&self, x: i32) -> String {
        let name = &self.generators[(x.unsigned_abs() - 1) as usize];
        if x > 0 {
            name.clone()
        } else {
            format!("{name}^-1")
        }
    }

    pub fn word_string(&self, w: &[i32]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&x| self.letter(x)).collect::<Vec<_>>().join(" ")
    }

    /// Abelianization as (free rank, torsion factors).
    pub fn abelianization(&self) -> Result<(usize, Vec<i64>), Error> {
        let n = self.generators.len();
        let m: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; n];
                for &x in r {
                    row[(x.unsigned_abs() - 1) as usize] += x.signum() as i64;
                }
                row
            })
            .collect();
        let snf = smith_normal_form(&m)?;
        Ok((n - snf.rank, snf.torsion()))
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.word_string(r)).collect();
        let pad = |s: String| if s.is_empty() { " ".to_string() } else { format!(" {s} ") };
        write!(f, "<{}|{}>", pad(self.generators.join(", ")), pad(rels.join(", ")))
    }
}

fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|&x| -x).collect()
}

fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn cyclic_reduce(w: &[i32]) -> Word {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.pop();
        w.remove(0);
    }
    w
}

fn rotate(w: &[i32], k: usize) -> Word {
    let mut out = w[k..].to_vec();
    out.extend_from_slice(&w[..k]);
    out
}

/// Canonical representative of a cyclic word up to rotation and inversion.
fn cyclic_key(w: &[i32]) -> Word {
    let inv = inverse(w);
    (0..w.len()).flat_map(|k| [rotate(w, k), rotate(&inv, k)]).min().unwrap_or_default()
}

/// Replaces every occurrence of generator `g` (1-based letter) by `sub`.
fn substitute(w: &[i32], g: i32, sub: &[i32]) -> Word {
    let inv = inverse(sub);
    let mut out = Vec::new();
    for &x in w {
        if x == g {
            out.extend_from_slice(sub);
        } else if x == -g {
            out.extend_from_slice(&inv);
        } else {
            out.push(x);
        }
    }
    out
}

struct Simplifier {
    rels: Vec<Word>,
    alive_gens: BTreeSet<i32>,
}

impl Simplifier {
    fn tidy(&mut self) {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for r in self.rels.drain(..) {
            let r = cyclic_reduce(&r);
            if !r.is_empty() && seen.insert(cyclic_key(&r)) {
                out.push(r);
            }
        }
        out.sort_by_key(|r| r.len());
        self.rels = out;
    }

    /// Removes a generator occurring exactly once in some relator.
    fn eliminate(&mut self) -> bool {
        let mut best: Option<(usize, usize, usize)> = None; // (cost, relator, position)
        for (ri, r) in self.rels.iter().enumerate() {
            for (pos, &x) in r.iter().enumerate() {
                if r.iter().filter(|&&y| y.abs() == x.abs()).count() == 1 {
                    let occurrences: usize =
                        self.rels.iter().map(|s| s.iter().filter(|&&y| y.abs() == x.abs()).count()).sum();
                    let cost = (r.len() - 1) * (occurrences - 1);
                    if best.is_none_or(|b| cost < b.0) {
                        best = Some((cost, ri, pos));
                    }
                }
            }
            if best.is_some_and(|b| b.0 == 0) {
                break;
            }
        }
        let Some((_, ri, pos)) = best else { return false };
        let r = self.rels.remove(ri);
        let rot = rotate(&r, pos);
        let (x, rest) = (rot[0], &rot[1..]);
        let g = x.abs();
        // x rest = 1, so x = rest^-1
        let sub = if x > 0 { inverse(rest) } else { rest.to_vec() };
        for s in self.rels.iter_mut() {
            *s = substitute(s, g, &sub);
        }
        self.alive_gens.remove(&g);
        true
    }

    /// Replaces a piece of some relator that is more than half of another
    /// relator (up to rotation and inversion) by the shorter complement.
    fn replace_piece(&mut self) -> bool {
        for j in 0..self.rels.len() {
            let rj = self.rels[j].clone();
            let len_j = rj.len();
            let inv = inverse(&rj);
            let conjugates: Vec<Word> = (0..len_j).flat_map(|k| [rotate(&rj, k), rotate(&inv, k)]).collect();
            for i in 0..self.rels.len() {
                if i == j || self.rels[i].len() < len_j / 2 + 1 {
                    continue;
                }
                let ri = &self.rels[i];
                let m = ri.len();
                for w in &conjugates {
                    for p in 0..m {
                        let mut l = 0;
                        while l < len_j && l < m && ri[(p + l) % m] == w[l] {
                            l += 1;
                        }
                        if 2 * l > len_j {
                            let mut new = inverse(&w[l..]);
                            new.extend((0..m - l).map(|k| ri[(p + l + k) % m]));
                            self.rels[i] = new;
                            return true;
                        }
                    }
                }
            }
        }
        false
    }
}

/// Simplifies with at most `budget` moves and assigns a status.
pub fn simplify_presentation(pres: &Presentation, budget: usize) -> Presentation {
    let n = pres.generators.len() as i32;
    let mut s = Simplifier { rels: pres.relators.clone(), alive_gens: (1..=n).collect() };
    let mut moves = 0;
    s.tidy();
    while moves < budget {
        let changed = s.eliminate() || s.replace_piece();
        if !changed {
            break;
        }
        moves += 1;
        s.tidy();
    }
    let keep: Vec<i32> = s.alive_gens.iter().copied().collect();
    let relabel = |x: i32| -> i32 {
        let k = keep.iter().position(|&g| g == x.abs()).expect("live generator") as i32 + 1;
        k * x.signum()
    };
    let relators = s.rels.iter().map(|r| r.iter().map(|&x| relabel(x)).collect()).collect();
    let generators = keep.iter().map(|&g| pres.generators[(g - 1) as usize].clone()).collect();
    let mut out = Presentation::new(generators, relators);
    out.moves = moves;
    certify(&mut out);
    out
}

/// Assigns the status from certificates only.
fn certify(p: &mut Presentation) {
    if p.generators.is_empty() {
        p.status = Pi1Status::Trivial;
        p.certificate = Some(Certificate::Empty);
        return;
    }
    if let Ok((rank, torsion)) = p.abelianization() {
        if rank > 0 || !torsion.is_empty() {
            p.status = Pi1Status::Nontrivial;
            p.certificate = Some(Certificate::Abelianization { rank, torsion });
            return;
        }
    }
    if let Some((degree, images)) = finite_image(p) {
        p.status = Pi1Status::Nontrivial;
        p.certificate = Some(Certificate::FiniteImage { degree, images });
        return;
    }
    p.status = Pi1Status::Unknown;
    p.certificate = None;
}

const FINITE_SEARCH_LIMIT: usize = 200_000;

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    fn rec(k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out.sort();
    out
}

/// Evaluates a word under generator images (acting on the right).
pub fn evaluate(word: &[i32], images: &[Vec<u8>], degree: usize) -> Vec<u8> {
    let mut acc: Vec<u8> = (0..degree as u8).collect();
    for &x in word {
        let img = &images[(x.unsigned_abs() - 1) as usize];
        if x > 0 {
            for a in acc.iter_mut() {
                *a = img[*a as usize];
            }
        } else {
            let mut inv = vec![0u8; degree];
            for (i, &v) in img.iter().enumerate() {
                inv[v as usize] = i as u8;
            }
            for a in acc.iter_mut() {
                *a = inv[*a as usize];
            }
        }
    }
    acc
}

/// Searches for a homomorphism into Sym(n), n <= 5, with nontrivial image.
fn finite_image(p: &Presentation) -> Option<(usize, Vec<Vec<u8>>)> {
    let g = p.generators.len();
    for degree in 2..=5usize {
        let perms = permutations(degree);
        if perms.len().checked_pow(g as u32).is_none_or(|c| c > FINITE_SEARCH_LIMIT) {
            break;
        }
        let identity: Vec<u8> = (0..degree as u8).collect();
        let mut idx = vec![0usize; g];
        loop {
            let images: Vec<Vec<u8>> = idx.iter().map(|&i| perms[i].clone()).collect();
            if images.iter().any(|im| im != &identity)
                && p.relators.iter().all(|r| evaluate(r, &images, degree) == identity)
            {
                return Some((degree, images));
            }
            let mut k = 0;
            loop {
                if k == g {
                    break;
                }
                idx[k] += 1;
                if idx[k] < perms.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == g {
                break;
            }
        }
    }
    None
}

/// Presentation of the fundamental group of a connected 2-complex:
/// generators are the edges off a BFS spanning tree, relators the triangle
/// boundaries; then simplified with the default budget.
pub fn pi1_presentation(k: &SimplicialComplex2) -> Result<Presentation, Error> {
    pi1_presentation_with_budget(k, DEFAULT_MOVES)
}

pub fn pi1_presentation_with_budget(k: &SimplicialComplex2, budget: usize) -> Result<Presentation, Error> {
    Ok(simplify_presentation(&raw_presentation(k)?, budget))
}

/// The unsimplified edge-path presentation.
pub fn raw_presentation(k: &SimplicialComplex2) -> Result<Presentation, Error> {
    let n = k.num_vertices();
    if n == 0 || !k.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut adj = vec![Vec::new(); n];
    for (i, &[a, b]) in k.edges.iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    let mut in_tree = vec![false; k.edges.len()];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &(w, e) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                in_tree[e] = true;
                queue.push_back(w);
            }
        }
    }
    let mut gen_of = vec![0i32; k.edges.len()];
    let mut generators = Vec::new();
    for (i, &t) in in_tree.iter().enumerate() {
        if !t {
            generators.push(format!("x{i}"));
            gen_of[i] = generators.len() as i32;
        }
    }
    let relators = k
        .triangles
        .iter()
        .map(|&[a, b, c]| {
            let mut w = Vec::new();
            for (u, v, sign) in [(a, b, 1), (b, c, 1), (a, c, -1)] {
                let e = k.edge_id(u, v).expect("face present");
                if gen_of[e] != 0 {
                    w.push(sign * gen_of[e]);
                }
            }
            w
        })
        .collect();
    Ok(Presentation::new(generators, relators))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_relator_kills_its_generator() {
        let p = simplify_presentation(&Presentation::from_letters("a", &["a"]).unwrap(), 10);
        assert_eq!(p.status, Pi1Status::Trivial);
        assert!(p.generators.is_empty() && p.relators.is_empty());
    }

    #[test]
    fn commutator_is_nontrivial() {
        let p = simplify_presentation(&Presentation::from_letters("ab", &["abAB"]).unwrap(), 100);
        assert_eq!(p.status, Pi1Status::Nontrivial);
        assert_eq!(p.certificate, Some(Certificate::Abelianization { rank: 2, torsion: vec![] }));
    }

    #[test]
    fn finite_image_certificate() {
        // A5 is perfect, so only a permutation image certifies it
        let a5 = Presentation::from_letters("ab", &["aa", "bbb", "ababababab"]).unwrap();
        let p = simplify_presentation(&a5, 100);
        assert_eq!(p.status, Pi1Status::Nontrivial);
        let Some(Certificate::FiniteImage { degree, images }) = &p.certificate else { panic!("{p:?}") };
        assert_eq!(*degree, 5);
        for r in &p.relators {
            assert_eq!(evaluate(r, images, 5), vec![0, 1, 2, 3, 4]);
        }
    }

    #[test]
    fn reductions() {
        assert_eq!(cyclic_reduce(&[1, 2, -2, 3, -1]), vec![3]);
        assert_eq!(cyclic_key(&[2, 1]), cyclic_key(&[-1, -2]));
    }
}
