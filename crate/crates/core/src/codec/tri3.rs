//! The `.tri3` text format for gluing-table triangulations.
//!
//! ```text
//! tri3 <tet count>
//! tet <index> cell <provenance tag>
//! glue <tet>.<face> <tet>.<face> <perm>
//! ```
//!
//! Every glued face has its own `glue` line, so each pair appears twice and
//! the two lines must be mutually inverse. Lines starting with `#` are
//! comments.

use std::collections::BTreeMap;

use super::spoly::{ParseError, ParseErrorCode};
use crate::thickening::{inverse_perm3, Gluing, Tet, Triangulation3};
use crate::Error;

pub fn emit_tri3(t: &Triangulation3) -> Result<String, Error> {
    let issues = t.structural_issues();
    if let Some(first) = issues.first() {
        return Err(Error::InvalidInput(first.clone()));
    }
    let mut out = format!("tri3 {}\n", t.tets.len());
    for (i, tet) in t.tets.iter().enumerate() {
        out.push_str(&format!("tet {i} cell {}\n", tet.cell));
    }
    for (i, tet) in t.tets.iter().enumerate() {
        for f in 0..4u8 {
            if let Some(g) = tet.gluings[f as usize] {
                let p = g.perm;
                out.push_str(&format!("glue {i}.{f} {}.{} {}{}{}\n", g.tet, g.face, p[0], p[1], p[2]));
            }
        }
    }
    Ok(out)
}

fn err(line: usize, column: usize, code: ParseErrorCode, message: impl Into<String>, token: &str) -> ParseError {
    ParseError { line, column, code, message: message.into(), token: token.to_string() }
}

fn perm3(s: &str) -> Option<[u8; 3]> {
    crate::Perm3::parse(s).map(|p| p.images())
}

pub fn parse_tri3(text: &str) -> Result<Triangulation3, Vec<ParseError>> {
    let mut errors = Vec::new();
    let mut count: Option<usize> = None;
    let mut cells: Vec<Option<String>> = Vec::new();
    // (tet, face) -> (line, tet, face, perm)
    let mut glues: BTreeMap<(usize, u8), (usize, usize, u8, [u8; 3])> = BTreeMap::new();

    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let col = raw.find(toks[0]).unwrap_or(0) + 1;
        match (toks[0], count) {
            ("tri3", None) => {
                if toks.len() != 2 {
                    errors.push(err(ln, col, ParseErrorCode::Syntax, "expected 'tri3 <count>'", line));
                    return Err(errors);
                }
                match toks[1].parse::<usize>() {
                    Ok(n) if n <= 1_000_000 => {
                        count = Some(n);
                        cells = vec![None; n];
                    }
                    _ => {
                        errors.push(err(ln, col, ParseErrorCode::BadNumber, "bad tetrahedron count", toks[1]));
                        return Err(errors);
                    }
                }
            }
            (_, None) => {
                errors.push(err(ln, col, ParseErrorCode::MissingName, "file must start with 'tri3 <count>'", toks[0]));
                return Err(errors);
            }
            ("tri3", Some(_)) => errors.push(err(ln, col, ParseErrorCode::Syntax, "repeated header", toks[0])),
            ("tet", Some(n)) => {
                if toks.len() != 4 || toks[2] != "cell" {
                    errors.push(err(ln, col, ParseErrorCode::Syntax, "expected 'tet <index> cell <tag>'", line));
                    continue;
                }
                match toks[1].parse::<usize>() {
                    Ok(i) if i < n => {
                        if cells[i].is_some() {
                            errors.push(err(ln, col, ParseErrorCode::DuplicateId, format!("tet {i} declared twice"), toks[1]));
                        } else {
                            cells[i] = Some(toks[3].to_string());
                        }
                    }
                    _ => errors.push(err(ln, col, ParseErrorCode::BadNumber, "tet index out of range", toks[1])),
                }
            }
            ("glue", Some(n)) => {
                if toks.len() != 4 {
                    errors.push(err(ln, col, ParseErrorCode::Syntax, "expected 'glue <tet>.<face> <tet>.<face> <perm>'", line));
                    continue;
                }
                let face = |s: &str| {
                    let (t, f) = s.split_once('.')?;
                    let t = t.parse::<usize>().ok().filter(|&x| x < n)?;
                    let f = f.parse::<u8>().ok().filter(|&x| x < 4)?;
                    Some((t, f))
                };
                let (Some((a, f)), Some((b, g))) = (face(toks[1]), face(toks[2])) else {
                    errors.push(err(ln, col, ParseErrorCode::BadNumber, "tet or face index out of range", line));
                    continue;
                };
                let Some(p) = perm3(toks[3]) else {
                    errors.push(err(ln, col, ParseErrorCode::BadPerm, "bad face permutation", toks[3]));
                    continue;
                };
                if (a, f) == (b, g) {
                    errors.push(err(ln, col, ParseErrorCode::Invalid, format!("face {a}.{f} glued to itself"), toks[1]));
                    continue;
                }
                if glues.insert((a, f), (ln, b, g, p)).is_some() {
                    errors.push(err(ln, col, ParseErrorCode::Invalid, format!("face {a}.{f} glued twice"), toks[1]));
                }
            }
            (other, Some(_)) => {
                errors.push(err(ln, col, ParseErrorCode::UnknownDeclaration, "unknown declaration", other))
            }
        }
    }

    let Some(n) = count else {
        errors.push(err(1, 1, ParseErrorCode::MissingName, "missing 'tri3 <count>' header", ""));
        return Err(errors);
    };
    for (i, c) in cells.iter().enumerate() {
        if c.is_none() {
            errors.push(err(0, 0, ParseErrorCode::DanglingReference, format!("tet {i} never declared"), ""));
        }
    }
    let mut tets: Vec<Tet> = cells
        .into_iter()
        .map(|c| Tet { cell: c.unwrap_or_default(), gluings: [None; 4] })
        .collect();
    for (&(a, f), &(ln, b, g, p)) in &glues {
        match glues.get(&(b, g)) {
            Some(&(_, a2, f2, q)) if (a2, f2) == (a, f) && q == inverse_perm3(&p) => {
                tets[a].gluings[f as usize] = Some(Gluing { tet: b, face: g, perm: p });
            }
            _ => errors.push(err(
                ln,
                1,
                ParseErrorCode::Invalid,
                format!("gluing {a}.{f} -> {b}.{g} has no inverse line"),
                "",
            )),
        }
    }
    debug_assert_eq!(tets.len(), n);
    if errors.is_empty() {
        Ok(Triangulation3 { tets })
    } else {
        Err(errors)
    }
}
