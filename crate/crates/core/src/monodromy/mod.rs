//! Y-bundle monodromy over the singular graph and the compatibility test.
//!
//! A closed walk along triple edges carries the three prongs around; its
//! monodromy is a permutation of the slots. The polyhedron is compatible when
//! no loop induces a transposition. Since only the parity matters and the
//! sign is multiplicative, it is enough to test the fundamental cycles of a
//! spanning forest together with every vertex-free circle.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::model::{chart, EdgeKind, SimplePolyhedron};
use crate::perm::Perm3;
use crate::util::UnionFind;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    DoublePoint(String),
    /// Marker on a vertex-free triple circle.
    CircleMarker(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub edge: String,
    pub tail: usize,
    pub head: usize,
    pub tail_port: Option<u8>,
    pub head_port: Option<u8>,
    /// Slot map of one forward traversal (identity on intervals).
    pub ident: Perm3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularGraph {
    pub nodes: Vec<NodeKind>,
    /// One arc per triple edge, in the polyhedron's edge order.
    pub arcs: Vec<Arc>,
    /// Per node: slot bijection for each ordered pair of distinct ports.
    pub transitions: Vec<BTreeMap<(u8, u8), Perm3>>,
}

/// One traversal of an arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub arc: usize,
    pub forward: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Walk {
    pub steps: Vec<Step>,
}

impl Walk {
    pub fn reversed(&self) -> Walk {
        Walk { steps: self.steps.iter().rev().map(|s| Step { arc: s.arc, forward: !s.forward }).collect() }
    }

    pub fn concat(&self, other: &Walk) -> Walk {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Walk { steps }
    }

    pub fn describe(&self, g: &SingularGraph) -> String {
        self.steps
            .iter()
            .map(|s| format!("{}{}", g.arcs[s.arc].edge, if s.forward { '+' } else { '-' }))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl SingularGraph {
    fn departs(&self, s: Step) -> (usize, Option<u8>) {
        let a = &self.arcs[s.arc];
        if s.forward {
            (a.tail, a.tail_port)
        } else {
            (a.head, a.head_port)
        }
    }

    fn arrives(&self, s: Step) -> (usize, Option<u8>) {
        let a = &self.arcs[s.arc];
        if s.forward {
            (a.head, a.head_port)
        } else {
            (a.tail, a.tail_port)
        }
    }

    /// Number of connected components (nodes joined by arcs).
    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.nodes.len());
        for a in &self.arcs {
            uf.union(a.tail, a.head);
        }
        uf.labels().1
    }

    /// Arcs at each node as (arc, leaves-forward).
    fn incidences(&self) -> Vec<Vec<Step>> {
        let mut out = vec![Vec::new(); self.nodes.len()];
        for (i, a) in self.arcs.iter().enumerate() {
            out[a.tail].push(Step { arc: i, forward: true });
            out[a.head].push(Step { arc: i, forward: false });
        }
        out
    }

    /// Walks leaving each node, used for random walk generation.
    pub fn steps_from(&self, node: usize) -> Vec<Step> {
        self.incidences()[node].clone()
    }

    pub fn step_target(&self, s: Step) -> usize {
        self.arrives(s).0
    }
}

pub fn singular_graph(p: &SimplePolyhedron) -> Result<SingularGraph, Error> {
    p.require_valid()?;
    let mut nodes: Vec<NodeKind> = p.vertices.iter().map(|v| NodeKind::DoublePoint(v.id.clone())).collect();
    let mut transitions: Vec<BTreeMap<(u8, u8), Perm3>> = Vec::new();
    for v in &p.vertices {
        let nbr = p.corner_incidence(&v.id);
        let mut t = BTreeMap::new();
        for a in 0..4u8 {
            for b in 0..4u8 {
                if a != b {
                    let perm = chart::transition(&nbr, a, b)
                        .ok_or_else(|| Error::InvalidInput(format!("vertex {}: corner transition {a}>{b} undetermined", v.id)))?;
                    t.insert((a, b), perm);
                }
            }
        }
        transitions.push(t);
    }
    let mut arcs = Vec::new();
    for e in &p.edges {
        match &e.kind {
            EdgeKind::Interval { start, end } => arcs.push(Arc {
                edge: e.id.clone(),
                tail: p.vertex_index(&start.vertex).expect("validated"),
                head: p.vertex_index(&end.vertex).expect("validated"),
                tail_port: Some(start.port),
                head_port: Some(end.port),
                ident: Perm3::IDENTITY,
            }),
            EdgeKind::Circle { ident } => {
                nodes.push(NodeKind::CircleMarker(e.id.clone()));
                transitions.push(BTreeMap::new());
                let m = nodes.len() - 1;
                arcs.push(Arc { edge: e.id.clone(), tail: m, head: m, tail_port: None, head_port: None, ident: *ident });
            }
        }
    }
    Ok(SingularGraph { nodes, arcs, transitions })
}

fn passage(g: &SingularGraph, node: usize, from: Option<u8>, to: Option<u8>) -> Result<Perm3, Error> {
    match (from, to) {
        (None, None) => Ok(Perm3::IDENTITY),
        (Some(a), Some(b)) if a == b => Ok(Perm3::IDENTITY),
        (Some(a), Some(b)) => g.transitions[node]
            .get(&(a, b))
            .copied()
            .ok_or_else(|| Error::NotALoop(format!("no passage {a}>{b} at node {node}"))),
        _ => Err(Error::NotALoop(format!("mixed passage at node {node}"))),
    }
}

/// Monodromy of a closed walk: the composite slot map, in traversal order,
/// from the frame of the first arc back to itself. Walks that retrace an
/// arc (a U-turn at a port) are rejected. Reversing the walk gives the
/// inverse up to conjugation by the closing passage at the base node.
pub fn loop_monodromy(g: &SingularGraph, walk: &Walk) -> Result<Perm3, Error> {
    let n = walk.steps.len();
    if n == 0 {
        return Err(Error::NotALoop("empty walk".into()));
    }
    if let Some(s) = walk.steps.iter().find(|s| s.arc >= g.arcs.len()) {
        return Err(Error::NotALoop(format!("unknown arc {}", s.arc)));
    }
    let mut acc = Perm3::IDENTITY;
    for i in 0..n {
        let s = walk.steps[i];
        let a = &g.arcs[s.arc];
        acc = acc.then(&if s.forward { a.ident } else { a.ident.inverse() });
        let next = walk.steps[(i + 1) % n];
        if n > 1 && next.arc == s.arc && next.forward != s.forward {
            return Err(Error::NotALoop(format!("step {} retraces arc {}", (i + 1) % n, a.edge)));
        }
        let (node, port_in) = g.arrives(s);
        let (node2, port_out) = g.departs(next);
        if node != node2 {
            return Err(Error::NotALoop(format!("step {i} ends away from where step {} starts", (i + 1) % n)));
        }
        acc = acc.then(&passage(g, node, port_in, port_out)?);
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisCycle {
    pub walk: Walk,
    pub perm: Perm3,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyReport {
    pub graph: SingularGraph,
    pub cycles: Vec<BasisCycle>,
    pub compatible: bool,
    pub witness: Option<Walk>,
    pub justification: &'static str,
}

pub const JUSTIFICATION: &str = "on walks that never retrace an arc the sign of the monodromy is a product of \
per-arc signs and a factor -1 per double-point passage, so it is multiplicative and factors through the mod-2 \
cycle space, which simple cycles generate; identity and 3-cycles are exactly the even \
permutations, so every simple loop avoids transpositions iff every basis cycle has sign +1";

impl fmt::Display for MonodromyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "compatible: {}", self.compatible)?;
        for c in &self.cycles {
            writeln!(f, "  cycle [{}]: {} (sign {:+})", c.walk.describe(&self.graph), c.perm.class().as_str(), c.sign)?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "  witness: {}", w.describe(&self.graph))?;
        }
        Ok(())
    }
}

/// Fundamental cycles of the spanning forest grown over `order`.
fn fundamental_cycles(g: &SingularGraph, order: &[usize]) -> Vec<Walk> {
    let mut uf = UnionFind::new(g.nodes.len());
    let mut tree = vec![false; g.arcs.len()];
    for &i in order {
        let a = &g.arcs[i];
        if uf.find(a.tail) != uf.find(a.head) {
            uf.union(a.tail, a.head);
            tree[i] = true;
        }
    }
    // tree adjacency
    let mut adj: Vec<Vec<Step>> = vec![Vec::new(); g.nodes.len()];
    for (i, a) in g.arcs.iter().enumerate() {
        if tree[i] {
            adj[a.tail].push(Step { arc: i, forward: true });
            adj[a.head].push(Step { arc: i, forward: false });
        }
    }
    let path = |from: usize, to: usize| -> Vec<Step> {
        let mut prev: Vec<Option<Step>> = vec![None; g.nodes.len()];
        let mut seen = vec![false; g.nodes.len()];
        let mut q = VecDeque::from([from]);
        seen[from] = true;
        while let Some(v) = q.pop_front() {
            for &s in &adj[v] {
                let w = g.arrives(s).0;
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some(s);
                    q.push_back(w);
                }
            }
        }
        let mut steps = Vec::new();
        let mut cur = to;
        while cur != from {
            let s = prev[cur].expect("same tree component");
            steps.push(s);
            cur = g.departs(s).0;
        }
        steps.reverse();
        steps
    };
    let mut out = Vec::new();
    for &i in order {
        if !tree[i] {
            let a = &g.arcs[i];
            let mut steps = vec![Step { arc: i, forward: true }];
            steps.extend(path(a.head, a.tail));
            out.push(Walk { steps });
        }
    }
    out
}

fn report_for_order(g: SingularGraph, order: &[usize]) -> Result<MonodromyReport, Error> {
    let mut cycles = Vec::new();
    for walk in fundamental_cycles(&g, order) {
        let perm = loop_monodromy(&g, &walk)?;
        cycles.push(BasisCycle { sign: perm.sign(), perm, walk });
    }
    let witness = cycles.iter().find(|c| c.sign < 0).map(|c| c.walk.clone());
    Ok(MonodromyReport { compatible: witness.is_none(), witness, cycles, graph: g, justification: JUSTIFICATION })
}

pub fn check_compatibility(p: &SimplePolyhedron) -> Result<MonodromyReport, Error> {
    let g = singular_graph(p)?;
    let order: Vec<usize> = (0..g.arcs.len()).collect();
    report_for_order(g, &order)
}

/// Same test over a spanning forest grown in a seeded random arc order.
pub fn check_compatibility_seeded(p: &SimplePolyhedron, seed: u64) -> Result<MonodromyReport, Error> {
    let g = singular_graph(p)?;
    let mut order: Vec<usize> = (0..g.arcs.len()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    report_for_order(g, &order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::catalog;

    #[test]
    fn disc_graph_is_empty() {
        let g = singular_graph(&catalog("disc").unwrap()).unwrap();
        assert!(g.nodes.is_empty() && g.arcs.is_empty());
        assert!(check_compatibility(&catalog("disc").unwrap()).unwrap().compatible);
    }

    #[test]
    fn circle_monodromy_is_its_identification() {
        let p = catalog("incompatible_circle").unwrap();
        let g = singular_graph(&p).unwrap();
        let w = Walk { steps: vec![Step { arc: 0, forward: true }] };
        assert_eq!(loop_monodromy(&g, &w).unwrap(), Perm3::parse("102").unwrap());
        let r = check_compatibility(&p).unwrap();
        assert!(!r.compatible);
        assert_eq!(r.witness, Some(w));
    }

    #[test]
    fn broken_walk_is_rejected() {
        let g = singular_graph(&catalog("two_crossings").unwrap()).unwrap();
        let w = Walk { steps: vec![Step { arc: 0, forward: true }, Step { arc: 0, forward: true }] };
        assert!(matches!(loop_monodromy(&g, &w), Err(Error::NotALoop(_))));
    }
}
