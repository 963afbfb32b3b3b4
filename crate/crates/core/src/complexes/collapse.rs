//! Elementary-collapse search on 2-complexes.

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::simplicial::SimplicialComplex2;
use crate::util::{ParityUnionFind, UnionFind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CollapseTarget {
    Point,
    Disc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CollapseOutcome {
    Collapsed,
    ProvenImpossible,
    ExhaustedBudget,
}

impl CollapseOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            CollapseOutcome::Collapsed => "collapsed",
            CollapseOutcome::ProvenImpossible => "proven-impossible",
            CollapseOutcome::ExhaustedBudget => "exhausted-budget",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CollapseBudget {
    pub steps: usize,
    pub restarts: usize,
    pub exhaustive_max: usize,
    pub seed: u64,
}

impl Default for CollapseBudget {
    fn default() -> Self {
        CollapseBudget { steps: 10_000, restarts: 50, exhaustive_max: 60, seed: 0 }
    }
}

/// Removal of `face` together with its unique coface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseStep {
    pub face: Vec<usize>,
    pub coface: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseResult {
    pub outcome: CollapseOutcome,
    /// The collapse sequence when collapsed, otherwise the longest one tried.
    pub sequence: Vec<CollapseStep>,
    /// Surviving simplices after the sequence, as sorted vertex tuples.
    pub residual: Vec<Vec<usize>>,
    pub note: String,
}

impl CollapseResult {
    /// Residual counts (vertices, edges, triangles).
    pub fn residual_counts(&self) -> [usize; 3] {
        let mut c = [0; 3];
        for s in &self.residual {
            c[s.len() - 1] += 1;
        }
        c
    }
}

/// Simplex-level incidence of a 2-complex.
struct Incidence {
    simplices: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    cofaces: Vec<Vec<usize>>,
}

impl Incidence {
    fn new(k: &SimplicialComplex2) -> Self {
        let nv = k.num_vertices();
        let ne = k.edges.len();
        let mut simplices: Vec<Vec<usize>> = (0..nv).map(|v| vec![v]).collect();
        simplices.extend(k.edges.iter().map(|e| e.to_vec()));
        simplices.extend(k.triangles.iter().map(|t| t.to_vec()));
        let mut faces = vec![Vec::new(); simplices.len()];
        let mut cofaces = vec![Vec::new(); simplices.len()];
        for (i, &[a, b]) in k.edges.iter().enumerate() {
            faces[nv + i] = vec![a, b];
        }
        for (i, &[a, b, c]) in k.triangles.iter().enumerate() {
            let id = nv + ne + i;
            faces[id] = [[a, b], [a, c], [b, c]].iter().map(|&[x, y]| nv + k.edge_id(x, y).expect("face")).collect();
        }
        for (s, fs) in faces.iter().enumerate() {
            for &f in fs {
                cofaces[f].push(s);
            }
        }
        Incidence { simplices, faces, cofaces }
    }

    fn len(&self) -> usize {
        self.simplices.len()
    }

    fn dim(&self, s: usize) -> usize {
        self.simplices[s].len() - 1
    }
}

#[derive(Clone)]
struct State {
    alive: Vec<bool>,
    live_cofaces: Vec<usize>,
    count: usize,
    /// edges with no triangle, isolated vertices, edges with 3+ triangles
    dangling: usize,
    overfull: usize,
}

impl State {
    fn new(inc: &Incidence) -> Self {
        let n = inc.len();
        let live_cofaces: Vec<usize> = inc.cofaces.iter().map(Vec::len).collect();
        let mut s = State { alive: vec![true; n], live_cofaces, count: n, dangling: 0, overfull: 0 };
        for i in 0..n {
            s.account(inc, i, 1);
        }
        s
    }

    fn account(&mut self, inc: &Incidence, s: usize, sign: isize) {
        let d = inc.dim(s);
        let c = self.live_cofaces[s];
        let dangling = d < 2 && c == 0;
        let overfull = d == 1 && c >= 3;
        self.dangling = (self.dangling as isize + sign * dangling as isize) as usize;
        self.overfull = (self.overfull as isize + sign * overfull as isize) as usize;
    }

    fn is_free(&self, s: usize) -> bool {
        self.alive[s] && self.live_cofaces[s] == 1
    }

    fn coface(&self, inc: &Incidence, s: usize) -> usize {
        *inc.cofaces[s].iter().find(|&&t| self.alive[t]).expect("free face has a live coface")
    }

    fn remove(&mut self, inc: &Incidence, s: usize, touched: &mut Vec<usize>) {
        self.account(inc, s, -1);
        self.alive[s] = false;
        self.count -= 1;
        for &f in &inc.faces[s] {
            if self.alive[f] {
                self.account(inc, f, -1);
                self.live_cofaces[f] -= 1;
                self.account(inc, f, 1);
                touched.push(f);
            }
        }
    }

    fn collapse(&mut self, inc: &Incidence, face: usize, touched: &mut Vec<usize>) -> CollapseStep {
        let co = self.coface(inc, face);
        self.remove(inc, co, touched);
        self.remove(inc, face, touched);
        CollapseStep { face: inc.simplices[face].clone(), coface: inc.simplices[co].clone() }
    }

    fn residual(&self, inc: &Incidence) -> Vec<Vec<usize>> {
        (0..inc.len()).filter(|&s| self.alive[s]).map(|s| inc.simplices[s].clone()).collect()
    }

    fn key(&self) -> Vec<u64> {
        let mut k = vec![0u64; self.alive.len().div_ceil(64)];
        for (i, &a) in self.alive.iter().enumerate() {
            if a {
                k[i / 64] |= 1 << (i % 64);
            }
        }
        k
    }

    fn reached(&self, inc: &Incidence, target: CollapseTarget) -> bool {
        match target {
            CollapseTarget::Point => self.count == 1,
            CollapseTarget::Disc => self.dangling == 0 && self.overfull == 0 && self.count > 0 && is_disc(inc, self),
        }
    }
}

/// Whether the live simplices form an orientable surface with one boundary
/// circle and Euler characteristic 1.
fn is_disc(inc: &Incidence, st: &State) -> bool {
    let live: Vec<usize> = (0..inc.len()).filter(|&s| st.alive[s]).collect();
    let mut counts = [0i64; 3];
    for &s in &live {
        counts[inc.dim(s)] += 1;
    }
    if counts[0] - counts[1] + counts[2] != 1 || counts[2] == 0 {
        return false;
    }
    // vertex links must be single paths or cycles
    let mut link_edges: Vec<Vec<[usize; 2]>> = vec![Vec::new(); inc.len()];
    for &t in live.iter().filter(|&&s| inc.dim(s) == 2) {
        let vs = &inc.simplices[t];
        for i in 0..3 {
            link_edges[vs[i]].push([vs[(i + 1) % 3], vs[(i + 2) % 3]]);
        }
    }
    let mut boundary = Vec::new();
    for &s in &live {
        match inc.dim(s) {
            0 => {
                let es = &link_edges[inc.simplices[s][0]];
                let mut deg: std::collections::BTreeMap<usize, usize> = Default::default();
                let mut ids: Vec<usize> = Vec::new();
                for e in es {
                    for &x in e {
                        *deg.entry(x).or_default() += 1;
                        ids.push(x);
                    }
                }
                ids.sort_unstable();
                ids.dedup();
                let mut uf = UnionFind::new(ids.len());
                for e in es {
                    let a = ids.binary_search(&e[0]).expect("id");
                    let b = ids.binary_search(&e[1]).expect("id");
                    uf.union(a, b);
                }
                if uf.labels().1 != 1 || deg.values().any(|&d| d > 2) {
                    return false;
                }
            }
            1
                if st.live_cofaces[s] == 1 => {
                    boundary.push(s);
                }
            _ => {}
        }
    }
    if boundary.is_empty() {
        return false;
    }
    // one boundary circle
    let mut uf = UnionFind::new(inc.len());
    for &e in &boundary {
        let f = &inc.faces[e];
        uf.union(f[0], f[1]);
    }
    let roots: BTreeSet<usize> = boundary.iter().map(|&e| uf.find(inc.faces[e][0])).collect();
    if roots.len() != 1 {
        return false;
    }
    // orientability: adjacent triangles induce opposite orientations on a
    // shared edge
    let tris: Vec<usize> = live.iter().copied().filter(|&s| inc.dim(s) == 2).collect();
    let pos: std::collections::HashMap<usize, usize> = tris.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut puf = ParityUnionFind::new(tris.len());
    for &e in live.iter().filter(|&&s| inc.dim(s) == 1) {
        let ts: Vec<usize> = inc.cofaces[e].iter().copied().filter(|&t| st.alive[t]).collect();
        if ts.len() == 2 {
            let (a, b) = (&inc.simplices[e][0], &inc.simplices[e][1]);
            let sign = |t: usize| {
                let v = &inc.simplices[t];
                let i = v.iter().position(|x| x == a).expect("vertex");
                let j = v.iter().position(|x| x == b).expect("vertex");
                (j + 3 - i) % 3 == 1
            };
            // same induced direction means the orientations must differ
            puf.union(pos[&ts[0]], pos[&ts[1]], sign(ts[0]) == sign(ts[1]));
        }
    }
    let mut all = UnionFind::new(tris.len());
    for &e in live.iter().filter(|&&s| inc.dim(s) == 1) {
        let ts: Vec<usize> = inc.cofaces[e].iter().copied().filter(|&t| st.alive[t]).collect();
        if ts.len() == 2 {
            all.union(pos[&ts[0]], pos[&ts[1]]);
        }
    }
    !puf.any_conflict() && all.labels().1 == 1
}

fn greedy(inc: &Incidence, target: CollapseTarget, steps: usize, seed: u64) -> (bool, Vec<CollapseStep>, State) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut st = State::new(inc);
    let mut seq = Vec::new();
    let mut pool: Vec<usize> = (0..inc.len()).filter(|&s| st.is_free(s)).collect();
    for _ in 0..steps {
        if st.reached(inc, target) {
            return (true, seq, st);
        }
        let face = loop {
            if pool.is_empty() {
                break None;
            }
            let i = rng.gen_range(0..pool.len());
            let s = pool.swap_remove(i);
            if st.is_free(s) {
                break Some(s);
            }
        };
        let Some(face) = face else { break };
        let mut touched = Vec::new();
        seq.push(st.collapse(inc, face, &mut touched));
        touched.sort_unstable();
        touched.dedup();
        pool.extend(touched.into_iter().filter(|&s| st.is_free(s)));
    }
    let ok = st.reached(inc, target);
    (ok, seq, st)
}

fn exhaustive(
    inc: &Incidence,
    target: CollapseTarget,
    st: &State,
    seq: &mut Vec<CollapseStep>,
    dead: &mut HashSet<Vec<u64>>,
) -> Option<State> {
    if st.reached(inc, target) {
        return Some(st.clone());
    }
    let key = st.key();
    if dead.contains(&key) {
        return None;
    }
    for s in 0..inc.len() {
        if st.is_free(s) {
            let mut next = st.clone();
            let mut touched = Vec::new();
            seq.push(next.collapse(inc, s, &mut touched));
            if let Some(fin) = exhaustive(inc, target, &next, seq, dead) {
                return Some(fin);
            }
            seq.pop();
        }
    }
    dead.insert(key);
    None
}

/// Searches for a sequence of elementary collapses from `k` to a point or a
/// disc.
pub fn collapse_search(k: &SimplicialComplex2, target: CollapseTarget, budget: CollapseBudget) -> CollapseResult {
    let inc = Incidence::new(k);
    let start = State::new(&inc);
    if k.euler() != 1 {
        return CollapseResult {
            outcome: CollapseOutcome::ProvenImpossible,
            sequence: Vec::new(),
            residual: start.residual(&inc),
            note: format!("euler characteristic obstruction: chi = {} is preserved by collapses, target has chi = 1", k.euler()),
        };
    }
    let mut best: Option<(Vec<CollapseStep>, State)> = None;
    for r in 0..budget.restarts.max(1) {
        let (ok, seq, st) = greedy(&inc, target, budget.steps, budget.seed.wrapping_add(r as u64));
        if ok {
            return CollapseResult {
                outcome: CollapseOutcome::Collapsed,
                sequence: seq,
                residual: st.residual(&inc),
                note: format!("greedy restart {r}"),
            };
        }
        if best.as_ref().is_none_or(|(_, b)| st.count < b.count) {
            best = Some((seq, st));
        }
    }
    if inc.len() <= budget.exhaustive_max {
        let mut seq = Vec::new();
        let mut dead = HashSet::new();
        return match exhaustive(&inc, target, &start, &mut seq, &mut dead) {
            Some(fin) => CollapseResult {
                outcome: CollapseOutcome::Collapsed,
                sequence: seq,
                residual: fin.residual(&inc),
                note: "exhaustive search".into(),
            },
            None => CollapseResult {
                outcome: CollapseOutcome::ProvenImpossible,
                sequence: Vec::new(),
                residual: start.residual(&inc),
                note: format!("exhaustive search over {} states found no collapse", dead.len()),
            },
        };
    }
    let (seq, st) = best.expect("at least one restart");
    let free_at_start = (0..inc.len()).filter(|&s| start.is_free(s)).count();
    CollapseResult {
        outcome: CollapseOutcome::ExhaustedBudget,
        sequence: seq,
        residual: st.residual(&inc),
        note: format!(
            "{} restarts x {} steps; {} free faces initially; {} simplices exceed exhaustive limit {}",
            budget.restarts.max(1),
            budget.steps,
            free_at_start,
            inc.len(),
            budget.exhaustive_max
        ),
    }
}

/// Replays a collapse sequence, checking every step is elementary. Returns
/// the surviving simplices.
pub fn replay(k: &SimplicialComplex2, sequence: &[CollapseStep]) -> Result<Vec<Vec<usize>>, String> {
    let inc = Incidence::new(k);
    let index: std::collections::HashMap<&[usize], usize> =
        inc.simplices.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut st = State::new(&inc);
    for (n, step) in sequence.iter().enumerate() {
        let f = *index.get(step.face.as_slice()).ok_or(format!("step {n}: unknown face"))?;
        if !st.is_free(f) {
            return Err(format!("step {n}: {:?} is not free", step.face));
        }
        if inc.simplices[st.coface(&inc, f)] != step.coface {
            return Err(format!("step {n}: coface mismatch"));
        }
        st.collapse(&inc, f, &mut Vec::new());
    }
    Ok(st.residual(&inc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn annulus() -> SimplicialComplex2 {
        // outer 0,1,2 inner 3,4,5
        SimplicialComplex2::from_triangles(
            "annulus",
            &[[0, 1, 3], [1, 3, 4], [1, 2, 4], [2, 4, 5], [0, 2, 5], [0, 3, 5]],
        )
        .unwrap()
    }

    #[test]
    fn annulus_is_obstructed() {
        let r = collapse_search(&annulus(), CollapseTarget::Point, CollapseBudget::default());
        assert_eq!(r.outcome, CollapseOutcome::ProvenImpossible);
        assert!(r.note.contains("euler"));
    }

    #[test]
    fn triangle_collapses_and_replays() {
        let k = SimplicialComplex2::from_triangles("t", &[[0, 1, 2], [0, 2, 3]]).unwrap();
        let r = collapse_search(&k, CollapseTarget::Point, CollapseBudget::default());
        assert_eq!(r.outcome, CollapseOutcome::Collapsed);
        assert_eq!(replay(&k, &r.sequence).unwrap(), r.residual);
        assert_eq!(r.residual_counts(), [1, 0, 0]);
        let d = collapse_search(&k, CollapseTarget::Disc, CollapseBudget::default());
        assert_eq!(d.outcome, CollapseOutcome::Collapsed);
        assert!(d.sequence.is_empty());
    }

    #[test]
    fn closed_sphere_is_obstructed() {
        let k = SimplicialComplex2::from_triangles("s", &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        let r = collapse_search(&k, CollapseTarget::Point, CollapseBudget::default());
        assert_eq!(r.outcome, CollapseOutcome::ProvenImpossible);
    }
}
