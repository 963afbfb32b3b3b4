//! Compatibility against brute force. The oracle rebuilds the corner
//! incidence from the region words, transports slots along every simple
//! closed walk of bounded length, and declares a polyhedron incompatible iff
//! some such walk has odd monodromy.

use std::collections::BTreeMap;

use proptest::prelude::*;
use spoly::codec::{emit_spoly, parse_spoly};
use spoly::model::{catalog, validate, Boundary, EdgeKind, SimplePolyhedron, WordItem, CATALOG_NAMES};
use spoly::monodromy::{check_compatibility, check_compatibility_seeded, loop_monodromy, singular_graph, Step, Walk};
use spoly::Perm3;

/// nbr[vertex][port][slot] = the port sharing the corner of that sheet.
fn corners(p: &SimplePolyhedron) -> BTreeMap<String, [[Option<u8>; 3]; 4]> {
    let mut out: BTreeMap<String, [[Option<u8>; 3]; 4]> =
        p.vertices.iter().map(|v| (v.id.clone(), [[None; 3]; 4])).collect();
    for r in &p.regions {
        for b in &r.boundary {
            let Boundary::Attached(word) = b else { continue };
            let n = word.len();
            for k in 0..n {
                let WordItem::Passage { vertex, from, to } = &word[k] else { continue };
                let (WordItem::Germ { slot: s_in, .. }, WordItem::Germ { slot: s_out, .. }) =
                    (&word[(k + n - 1) % n], &word[(k + 1) % n])
                else {
                    continue;
                };
                let t = out.get_mut(vertex).unwrap();
                t[*from as usize][*s_in as usize] = Some(*to);
                t[*to as usize][*s_out as usize] = Some(*from);
            }
        }
    }
    out
}

/// Common-neighbour rule, written out independently.
fn through(nbr: &[[Option<u8>; 3]; 4], a: u8, b: u8, s: u8) -> u8 {
    if a == b {
        return s;
    }
    let x = nbr[a as usize][s as usize].unwrap();
    let want = if x == b { a } else { x };
    (0..3).find(|&t| nbr[b as usize][t as usize] == Some(want)).unwrap()
}

struct Oracle {
    arcs: Vec<(usize, usize, Option<u8>, Option<u8>, Perm3, Option<String>)>,
    nbr: Vec<Option<[[Option<u8>; 3]; 4]>>,
    nodes: usize,
}

impl Oracle {
    fn new(p: &SimplePolyhedron) -> Oracle {
        let c = corners(p);
        let mut nbr: Vec<Option<[[Option<u8>; 3]; 4]>> = p.vertices.iter().map(|v| Some(c[&v.id])).collect();
        let mut arcs = Vec::new();
        for e in &p.edges {
            match &e.kind {
                EdgeKind::Interval { start, end } => {
                    let t = p.vertex_index(&start.vertex).unwrap();
                    let h = p.vertex_index(&end.vertex).unwrap();
                    arcs.push((t, h, Some(start.port), Some(end.port), Perm3::IDENTITY, Some(start.vertex.clone())));
                }
                EdgeKind::Circle { ident } => {
                    nbr.push(None);
                    let m = nbr.len() - 1;
                    arcs.push((m, m, None, None, *ident, None));
                }
            }
        }
        Oracle { arcs, nodes: nbr.len(), nbr }
    }

    fn leaving(&self, node: usize) -> Vec<Step> {
        let mut out = Vec::new();
        for (i, a) in self.arcs.iter().enumerate() {
            if a.0 == node {
                out.push(Step { arc: i, forward: true });
            }
            if a.1 == node {
                out.push(Step { arc: i, forward: false });
            }
        }
        out
    }

    fn ends(&self, s: Step) -> ((usize, Option<u8>), (usize, Option<u8>)) {
        let a = &self.arcs[s.arc];
        if s.forward {
            ((a.0, a.2), (a.1, a.3))
        } else {
            ((a.1, a.3), (a.0, a.2))
        }
    }

    /// Slot map of a closed walk, based just after the first departure.
    fn monodromy(&self, w: &[Step]) -> Perm3 {
        let mut images = [0u8; 3];
        for s0 in 0..3u8 {
            let mut s = s0;
            for (k, st) in w.iter().enumerate() {
                let ident = self.arcs[st.arc].4;
                s = if st.forward { ident.apply(s) } else { ident.inverse().apply(s) };
                let (_, (node, port_in)) = self.ends(*st);
                let next = w[(k + 1) % w.len()];
                let ((_, port_out), _) = self.ends(next);
                if let (Some(nbr), Some(a), Some(b)) = (&self.nbr[node], port_in, port_out) {
                    s = through(nbr, a, b, s);
                }
            }
            images[s0 as usize] = s;
        }
        Perm3::new(images).unwrap()
    }

    fn closed_walks(&self, max_len: usize) -> Vec<Vec<Step>> {
        let mut out = Vec::new();
        for start in 0..self.nodes {
            let mut stack = vec![(start, Vec::new())];
            while let Some((at, walk)) = stack.pop() {
                if !walk.is_empty() && at == start {
                    out.push(walk.clone());
                }
                if walk.len() == max_len {
                    continue;
                }
                for s in self.leaving(at) {
                    // Simple cycles only: no repeated arc, no node revisited before closing.
                    let to = self.ends(s).1 .0;
                    if walk.iter().any(|t: &Step| t.arc == s.arc) {
                        continue;
                    }
                    if to != start && walk.iter().any(|t: &Step| self.ends(*t).1 .0 == to) {
                        continue;
                    }
                    let mut w = walk.clone();
                    w.push(s);
                    stack.push((self.ends(s).1 .0, w));
                }
            }
        }
        out
    }
}

/// Cycles of a slot permutation, each listed from its smallest slot.
fn cycles(q: Perm3) -> Vec<Vec<u8>> {
    let mut seen = [false; 3];
    let mut out = Vec::new();
    for s in 0..3u8 {
        if seen[s as usize] {
            continue;
        }
        let mut c = Vec::new();
        let mut t = s;
        while !seen[t as usize] {
            seen[t as usize] = true;
            c.push(t);
            t = q.apply(t);
        }
        out.push(c);
    }
    out
}

/// Hangs triple circles with the given idents off region `host`: the first
/// cycle of each circle bounds `host`, every other cycle bounds a new disc.
fn with_circles(src: &str, host: &str, idents: &[Perm3]) -> String {
    let mut edges = String::new();
    let mut host_lines = String::new();
    let mut discs = String::new();
    for (i, q) in idents.iter().enumerate() {
        let t = format!("x{i}");
        edges.push_str(&format!("edge {t} circle ident {q}\n"));
        for (k, c) in cycles(*q).into_iter().enumerate() {
            let word: Vec<String> = c.iter().map(|s| format!("({t} {s} +)")).collect();
            let line = format!("  boundary attached {}\n", word.join(" "));
            if k == 0 {
                host_lines.push_str(&line);
            } else {
                discs.push_str(&format!("region {t}d{k} genus 0 orientable yes\n{line}"));
            }
        }
    }
    let mut out = String::new();
    let mut placed = false;
    for line in src.lines() {
        if !placed && line.starts_with("region ") {
            out.push_str(&edges);
            placed = true;
        }
        out.push_str(line);
        out.push('\n');
        if line.starts_with(&format!("region {host} ")) {
            out.push_str(&host_lines);
        }
    }
    out.push_str(&discs);
    out
}

fn inputs() -> Vec<SimplePolyhedron> {
    let mut out = Vec::new();
    let perms = Perm3::all();
    for name in CATALOG_NAMES {
        let p = catalog(name).unwrap();
        let src = emit_spoly(&p).unwrap();
        let host = p.regions[0].id.clone();
        for q in &perms {
            out.push((format!("{name}+{q}"), with_circles(&src, &host, &[*q])));
        }
        for (i, q) in perms.iter().enumerate() {
            let r = perms[(i * 5 + 2) % perms.len()];
            out.push((format!("{name}+{q}+{r}"), with_circles(&src, &host, &[*q, r])));
        }
        out.push((name.to_string(), src));
    }
    out.into_iter()
        .map(|(name, text)| {
            let mut p = parse_spoly(&text).unwrap_or_else(|e| panic!("{name}: {e:?}\n{text}"));
            let r = validate(&p);
            assert!(r.ok, "{name}: {:?}\n{text}", r.errors);
            p.name = name;
            p
        })
        .collect()
}

#[test]
fn compatibility_agrees_with_walk_enumeration() {
    let all = inputs();
    let mut incompatible = 0;
    for p in &all {
        let report = check_compatibility(p).unwrap();
        let o = Oracle::new(p);
        let g = singular_graph(p).unwrap();
        let mut odd = false;
        for w in o.closed_walks(5) {
            let expected = o.monodromy(&w);
            let got = loop_monodromy(&g, &Walk { steps: w.clone() }).unwrap();
            assert_eq!(got.class(), expected.class(), "{}: walk {:?}", p.name, w);
            odd |= expected.sign() < 0;
        }
        assert_eq!(report.compatible, !odd, "{}", p.name);
        incompatible += usize::from(odd);
        if let Some(w) = &report.witness {
            assert_eq!(o.monodromy(&w.steps).sign(), -1, "{}: witness", p.name);
        }
    }
    // The mutants must include both answers for the comparison to mean anything.
    assert!(all.len() > 80, "{} inputs", all.len());
    assert!(incompatible > 0 && incompatible < all.len());
}

#[test]
fn independent_of_spanning_forest() {
    for p in inputs() {
        let base = check_compatibility(&p).unwrap().compatible;
        for seed in 0..100 {
            let r = check_compatibility_seeded(&p, seed).unwrap();
            assert_eq!(r.compatible, base, "{} seed {seed}", p.name);
            if let Some(w) = &r.witness {
                let g = &r.graph;
                assert_eq!(loop_monodromy(g, w).unwrap().sign(), -1);
            }
        }
    }
}

/// Random closed walks on a graph, as step choices from a base node.
fn walk_from(g: &spoly::monodromy::SingularGraph, base: usize, choices: &[usize]) -> Walk {
    let mut at = base;
    let mut steps = Vec::new();
    for &c in choices {
        let opts = g.steps_from(at);
        let s = opts[c % opts.len()];
        steps.push(s);
        at = g.step_target(s);
    }
    Walk { steps }
}

fn closed(g: &spoly::monodromy::SingularGraph, base: usize, w: &Walk) -> bool {
    w.steps.last().is_some_and(|&s| g.step_target(s) == base)
}

/// No step immediately undoes the previous one, cyclically.
fn reduced(w: &Walk) -> bool {
    let n = w.steps.len();
    n == 1 || (0..n).all(|i| {
        let (s, t) = (w.steps[i], w.steps[(i + 1) % n]);
        !(s.arc == t.arc && s.forward != t.forward)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn concatenation_and_reversal(
        which in 0usize..3,
        a in proptest::collection::vec(0usize..8, 1..8),
        b in proptest::collection::vec(0usize..8, 1..8),
    ) {
        let name = ["bing_house", "two_crossings", "incompatible_circle"][which];
        let p = catalog(name).unwrap();
        let g = singular_graph(&p).unwrap();
        let base = 0;
        let wa = walk_from(&g, base, &a);
        let wb = walk_from(&g, base, &b);
        prop_assume!(closed(&g, base, &wa) && closed(&g, base, &wb));
        let wab = wa.concat(&wb);
        if !reduced(&wa) {
            prop_assert!(loop_monodromy(&g, &wa).is_err());
            return Ok(());
        }
        prop_assume!(reduced(&wb) && reduced(&wab));
        let ma = loop_monodromy(&g, &wa).unwrap();
        let mb = loop_monodromy(&g, &wb).unwrap();
        let mab = loop_monodromy(&g, &wab).unwrap();
        prop_assert_eq!(mab.sign(), ma.sign() * mb.sign());
        // The base point sits at a node, so reversal gives the inverse up to
        // conjugation by the closing passage.
        let rev = loop_monodromy(&g, &wa.reversed()).unwrap();
        prop_assert_eq!(rev.class(), ma.inverse().class());
        prop_assert_eq!(rev.sign(), ma.sign());
    }
}
