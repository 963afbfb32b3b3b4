//! The line-oriented `.spoly` polyhedron format.
//!
//! ```text
//! spoly 1
//! polyhedron round_bundle
//! edge t circle ident 012
//! region a genus 0 orientable yes
//!   boundary free c0
//!   boundary attached (t 0 +)
//! ```
//!
//! See `docs/spoly.ebnf` for the full grammar.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::model::{
    validate, Boundary, Direction, DoublePoint, EdgeKind, PortRef, Region, SimplePolyhedron, TripleEdge, WordItem,
};
use crate::perm::Perm3;
use crate::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParseErrorCode {
    Syntax,
    UnknownDeclaration,
    BadNumber,
    BadPerm,
    BadIdentifier,
    MissingName,
    UnsupportedVersion,
    OrphanBoundary,
    DuplicateId,
    DanglingReference,
    Invalid,
}

impl ParseErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseErrorCode::Syntax => "SYNTAX",
            ParseErrorCode::UnknownDeclaration => "UNKNOWN_DECLARATION",
            ParseErrorCode::BadNumber => "BAD_NUMBER",
            ParseErrorCode::BadPerm => "BAD_PERM",
            ParseErrorCode::BadIdentifier => "BAD_IDENTIFIER",
            ParseErrorCode::MissingName => "MISSING_NAME",
            ParseErrorCode::UnsupportedVersion => "UNSUPPORTED_VERSION",
            ParseErrorCode::OrphanBoundary => "ORPHAN_BOUNDARY",
            ParseErrorCode::DuplicateId => "DUPLICATE_ID",
            ParseErrorCode::DanglingReference => "DANGLING_REFERENCE",
            ParseErrorCode::Invalid => "INVALID",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub code: ParseErrorCode,
    pub message: String,
    pub token: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}: {}", self.line, self.column, self.code.as_str(), self.message)?;
        if !self.token.is_empty() {
            write!(f, " (at '{}')", self.token)?;
        }
        Ok(())
    }
}

/// A parsed document: the polyhedron plus the comments it carried.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpolyDocument {
    pub version: u32,
    pub polyhedron: SimplePolyhedron,
    /// Comment lines keyed by the declaration they precede (`"vertex v"`,
    /// `"region r"`, ...); `""` for trailing comments.
    pub comments: Vec<(String, String)>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EmitOptions {
    pub keep_comments: bool,
}

#[derive(Clone, Debug)]
struct Token {
    text: String,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start = 0;
    for (i, ch) in line.char_indices() {
        let col = line[..i].chars().count() + 1;
        if ch.is_whitespace() || ch == '(' || ch == ')' {
            if !cur.is_empty() {
                out.push(Token { text: std::mem::take(&mut cur), column: start });
            }
            if ch == '(' || ch == ')' {
                out.push(Token { text: ch.to_string(), column: col });
            }
        } else {
            if cur.is_empty() {
                start = col;
            }
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push(Token { text: cur, column: start });
    }
    out
}

fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

struct LineParser<'a> {
    line: usize,
    tokens: &'a [Token],
    pos: usize,
}

type Res<T> = Result<T, ParseError>;

impl<'a> LineParser<'a> {
    fn err(&self, code: ParseErrorCode, msg: impl Into<String>) -> ParseError {
        let (column, token) = match self.tokens.get(self.pos) {
            Some(t) => (t.column, t.text.clone()),
            None => (self.tokens.last().map(|t| t.column + t.text.chars().count()).unwrap_or(1), String::new()),
        };
        ParseError { line: self.line, column, code, message: msg.into(), token }
    }

    fn next(&mut self, what: &str) -> Res<&'a str> {
        match self.tokens.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.text.as_str())
            }
            None => Err(self.err(ParseErrorCode::Syntax, format!("expected {what}, found end of line"))),
        }
    }

    fn keyword(&mut self, kw: &str) -> Res<()> {
        let save = self.pos;
        let t = self.next(kw)?;
        if t == kw {
            Ok(())
        } else {
            self.pos = save;
            Err(self.err(ParseErrorCode::Syntax, format!("expected '{kw}'")))
        }
    }

    fn ident(&mut self, what: &str) -> Res<String> {
        let save = self.pos;
        let t = self.next(what)?;
        if is_identifier(t) {
            Ok(t.to_string())
        } else {
            self.pos = save;
            Err(self.err(ParseErrorCode::BadIdentifier, format!("expected {what}")))
        }
    }

    fn number<T: std::str::FromStr>(&mut self, what: &str) -> Res<T> {
        let save = self.pos;
        let t = self.next(what)?;
        if !t.chars().all(|c| c.is_ascii_digit()) {
            self.pos = save;
            return Err(self.err(ParseErrorCode::BadNumber, format!("expected {what}")));
        }
        t.parse().map_err(|_| {
            self.pos = save;
            self.err(ParseErrorCode::BadNumber, format!("{what} out of range"))
        })
    }

    fn perm(&mut self) -> Res<Perm3> {
        let save = self.pos;
        let t = self.next("3-digit permutation")?;
        Perm3::parse(t).ok_or_else(|| {
            self.pos = save;
            self.err(ParseErrorCode::BadPerm, "expected a 3-digit permutation of 012")
        })
    }

    fn port_ref(&mut self) -> Res<PortRef> {
        let save = self.pos;
        let t = self.next("<vertex>.<port>")?;
        let parsed = t.split_once('.').and_then(|(v, p)| {
            if is_identifier(v) && !p.is_empty() && p.chars().all(|c| c.is_ascii_digit()) {
                p.parse::<u8>().ok().map(|p| PortRef::new(v, p))
            } else {
                None
            }
        });
        parsed.ok_or_else(|| {
            self.pos = save;
            self.err(ParseErrorCode::Syntax, "expected <vertex>.<port>")
        })
    }

    fn end(&self) -> Res<()> {
        if self.pos < self.tokens.len() {
            Err(self.err(ParseErrorCode::Syntax, "unexpected trailing token"))
        } else {
            Ok(())
        }
    }
}

/// Location (line, column) of a declaration or reference, for diagnostics.
type Where = (usize, usize, String);

#[derive(Default)]
struct Draft {
    version: Option<u32>,
    name: Option<String>,
    vertices: Vec<(DoublePoint, Where)>,
    edges: Vec<(TripleEdge, Where)>,
    regions: Vec<(Region, Where)>,
    /// references to check: (kind, id, where)
    refs: Vec<(&'static str, String, Where)>,
    comments: Vec<(String, String)>,
    pending_comments: Vec<String>,
}

fn parse_line(d: &mut Draft, lp: &mut LineParser) -> Res<()> {
    let head_col = lp.tokens[0].column;
    let head = lp.next("declaration")?;
    let here = |lp: &LineParser, tok: &str| -> Where { (lp.line, head_col, tok.to_string()) };
    match head {
        "spoly" => {
            let v: u32 = lp.number("format version")?;
            if v != FORMAT_VERSION {
                lp.pos -= 1;
                return Err(lp.err(ParseErrorCode::UnsupportedVersion, format!("unsupported format version {v}")));
            }
            lp.end()?;
            d.version = Some(v);
        }
        "polyhedron" => {
            let name = lp.ident("polyhedron name")?;
            lp.end()?;
            d.name = Some(name);
        }
        "vertex" => {
            let id = lp.ident("vertex id")?;
            lp.keyword("chart")?;
            let chart = lp.ident("chart id")?;
            lp.keyword("pairs")?;
            let mut pairs = [(0u8, 0u8); 2];
            for pair in pairs.iter_mut() {
                lp.keyword("(")?;
                let a = lp.number("port")?;
                let b = lp.number("port")?;
                lp.keyword(")")?;
                *pair = (a, b);
            }
            lp.keyword("trans")?;
            let t0 = lp.perm()?;
            let t1 = lp.perm()?;
            lp.end()?;
            let w = here(lp, &id);
            attach_comments(d, format!("vertex {id}"));
            d.vertices.push((DoublePoint { id, chart, pairs, trans: [t0, t1] }, w));
        }
        "edge" => {
            let id = lp.ident("edge id")?;
            let kind_col = lp.tokens.get(lp.pos).map(|t| t.column).unwrap_or(head_col);
            let kind = lp.next("'circle' or 'interval'")?;
            let kind = match kind {
                "circle" => {
                    lp.keyword("ident")?;
                    EdgeKind::Circle { ident: lp.perm()? }
                }
                "interval" => {
                    let start = lp.port_ref()?;
                    let end = lp.port_ref()?;
                    for r in [&start, &end] {
                        d.refs.push(("vertex", r.vertex.clone(), (lp.line, kind_col, format!("{}.{}", r.vertex, r.port))));
                    }
                    EdgeKind::Interval { start, end }
                }
                _ => {
                    lp.pos -= 1;
                    return Err(lp.err(ParseErrorCode::Syntax, "expected 'circle' or 'interval'"));
                }
            };
            lp.end()?;
            let w = here(lp, &id);
            attach_comments(d, format!("edge {id}"));
            d.edges.push((TripleEdge { id, kind }, w));
        }
        "region" => {
            let id = lp.ident("region id")?;
            lp.keyword("genus")?;
            let genus: u32 = lp.number("genus")?;
            lp.keyword("orientable")?;
            let orientable = match lp.next("yes|no")? {
                "yes" => true,
                "no" => false,
                _ => {
                    lp.pos -= 1;
                    return Err(lp.err(ParseErrorCode::Syntax, "expected 'yes' or 'no'"));
                }
            };
            lp.end()?;
            let w = here(lp, &id);
            attach_comments(d, format!("region {id}"));
            d.regions.push((Region { id, genus, orientable, boundary: Vec::new() }, w));
        }
        "boundary" => {
            if d.regions.is_empty() {
                lp.pos -= 1;
                return Err(lp.err(ParseErrorCode::OrphanBoundary, "boundary line before any region"));
            }
            let b = match lp.next("'free' or 'attached'")? {
                "free" => Boundary::Free(lp.ident("free circle id")?),
                "attached" => {
                    let mut word = Vec::new();
                    while lp.pos < lp.tokens.len() {
                        lp.keyword("(")?;
                        let col = lp.tokens[lp.pos - 1].column;
                        let id = lp.ident("edge or vertex id")?;
                        let t = lp.next("slot or passage")?;
                        if let Some((a, b)) = t.split_once('>') {
                            let (Ok(from), Ok(to)) = (a.parse::<u8>(), b.parse::<u8>()) else {
                                lp.pos -= 1;
                                return Err(lp.err(ParseErrorCode::BadNumber, "expected <port>><port>"));
                            };
                            lp.keyword(")")?;
                            d.refs.push(("vertex", id.clone(), (lp.line, col, id.clone())));
                            word.push(WordItem::Passage { vertex: id, from, to });
                        } else {
                            lp.pos -= 1;
                            let slot: u8 = lp.number("slot")?;
                            let dir = match lp.next("direction")? {
                                "+" => Direction::Forward,
                                "-" => Direction::Backward,
                                _ => {
                                    lp.pos -= 1;
                                    return Err(lp.err(ParseErrorCode::Syntax, "expected '+' or '-'"));
                                }
                            };
                            lp.keyword(")")?;
                            d.refs.push(("edge", id.clone(), (lp.line, col, id.clone())));
                            word.push(WordItem::Germ { edge: id, slot, dir });
                        }
                    }
                    Boundary::Attached(word)
                }
                _ => {
                    lp.pos -= 1;
                    return Err(lp.err(ParseErrorCode::Syntax, "expected 'free' or 'attached'"));
                }
            };
            lp.end()?;
            d.regions.last_mut().expect("checked").0.boundary.push(b);
        }
        _ => {
            lp.pos -= 1;
            return Err(lp.err(ParseErrorCode::UnknownDeclaration, format!("unknown declaration '{head}'")));
        }
    }
    Ok(())
}

fn attach_comments(d: &mut Draft, key: String) {
    for c in d.pending_comments.drain(..) {
        d.comments.push((key.clone(), c));
    }
}

/// Parses a document, keeping its comments.
pub fn parse_document(text: &str) -> Result<SpolyDocument, Vec<ParseError>> {
    let mut d = Draft::default();
    let mut errors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let (content, comment) = match raw.find('#') {
            Some(k) => (&raw[..k], Some(raw[k + 1..].trim().to_string())),
            None => (raw, None),
        };
        if let Some(c) = comment {
            d.pending_comments.push(c);
        }
        let tokens = tokenize(content);
        if tokens.is_empty() {
            continue;
        }
        let mut lp = LineParser { line: line_no, tokens: &tokens, pos: 0 };
        if let Err(e) = parse_line(&mut d, &mut lp) {
            errors.push(e);
        }
    }
    let trailing: Vec<String> = d.pending_comments.drain(..).collect();
    for c in trailing {
        d.comments.push((String::new(), c));
    }

    let Some(name) = d.name.clone() else {
        errors.push(ParseError {
            line: 1,
            column: 1,
            code: ParseErrorCode::MissingName,
            message: "missing 'polyhedron <name>' declaration".into(),
            token: String::new(),
        });
        return Err(errors);
    };

    // duplicate ids and dangling references, with their source positions
    let mut decl_lines: BTreeMap<String, usize> = BTreeMap::new();
    let mut seen: BTreeSet<(&str, String)> = BTreeSet::new();
    let decls = d
        .vertices
        .iter()
        .map(|(v, w)| ("vertex", v.id.clone(), w))
        .chain(d.edges.iter().map(|(e, w)| ("edge", e.id.clone(), w)))
        .chain(d.regions.iter().map(|(r, w)| ("region", r.id.clone(), w)));
    for (kind, id, w) in decls {
        if !seen.insert((kind, id.clone())) {
            errors.push(ParseError {
                line: w.0,
                column: w.1,
                code: ParseErrorCode::DuplicateId,
                message: format!("duplicate {kind} id '{id}'"),
                token: id.clone(),
            });
        }
        decl_lines.entry(format!("{kind} {id}")).or_insert(w.0);
    }
    for (kind, id, w) in &d.refs {
        if !seen.contains(&(*kind, id.clone())) {
            errors.push(ParseError {
                line: w.0,
                column: w.1,
                code: ParseErrorCode::DanglingReference,
                message: format!("reference to undeclared {kind} '{id}'"),
                token: w.2.clone(),
            });
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }

    let p = SimplePolyhedron::new(
        name,
        d.vertices.into_iter().map(|x| x.0).collect(),
        d.edges.into_iter().map(|x| x.0).collect(),
        d.regions.into_iter().map(|x| x.0).collect(),
    );
    let report = validate(&p);
    if !report.ok {
        let errs = report
            .errors
            .iter()
            .map(|issue| {
                // "vertex v", "edge e", "region r boundary 0 item 3", ...
                let key: String = issue.location.split_whitespace().take(2).collect::<Vec<_>>().join(" ");
                let key = key.split('.').next().unwrap_or("").to_string();
                ParseError {
                    line: decl_lines.get(&key).copied().unwrap_or(0),
                    column: 1,
                    code: ParseErrorCode::Invalid,
                    message: issue.to_string(),
                    token: String::new(),
                }
            })
            .collect();
        return Err(errs);
    }
    Ok(SpolyDocument { version: d.version.unwrap_or(FORMAT_VERSION), polyhedron: p, comments: d.comments })
}

/// Parses `.spoly` text into a validated polyhedron.
pub fn parse_spoly(text: &str) -> Result<SimplePolyhedron, Vec<ParseError>> {
    parse_document(text).map(|d| d.polyhedron)
}

fn write_word(out: &mut String, word: &[WordItem]) {
    for item in word {
        match item {
            WordItem::Germ { edge, slot, dir } => out.push_str(&format!(" ({edge} {slot} {})", dir.symbol())),
            WordItem::Passage { vertex, from, to } => out.push_str(&format!(" ({vertex} {from}>{to})")),
        }
    }
}

fn emit_inner(p: &SimplePolyhedron, comments: &[(String, String)], opts: EmitOptions) -> String {
    let mut vertices: Vec<_> = p.vertices.iter().collect();
    vertices.sort_by(|a, b| a.id.cmp(&b.id));
    let mut edges: Vec<_> = p.edges.iter().collect();
    edges.sort_by(|a, b| a.id.cmp(&b.id));
    let mut regions: Vec<_> = p.regions.iter().collect();
    regions.sort_by(|a, b| a.id.cmp(&b.id));

    let mut out = String::new();
    let put_comments = |out: &mut String, key: &str| {
        if opts.keep_comments {
            for (k, c) in comments {
                if k == key {
                    out.push_str(&format!("# {c}\n"));
                }
            }
        }
    };
    out.push_str(&format!("spoly {FORMAT_VERSION}\npolyhedron {}\n", p.name));
    for v in vertices {
        put_comments(&mut out, &format!("vertex {}", v.id));
        out.push_str(&format!(
            "vertex {} chart {} pairs ({} {}) ({} {}) trans {} {}\n",
            v.id, v.chart, v.pairs[0].0, v.pairs[0].1, v.pairs[1].0, v.pairs[1].1, v.trans[0], v.trans[1]
        ));
    }
    for e in edges {
        put_comments(&mut out, &format!("edge {}", e.id));
        match &e.kind {
            EdgeKind::Circle { ident } => out.push_str(&format!("edge {} circle ident {ident}\n", e.id)),
            EdgeKind::Interval { start, end } => out.push_str(&format!(
                "edge {} interval {}.{} {}.{}\n",
                e.id, start.vertex, start.port, end.vertex, end.port
            )),
        }
    }
    for r in regions {
        put_comments(&mut out, &format!("region {}", r.id));
        out.push_str(&format!(
            "region {} genus {} orientable {}\n",
            r.id,
            r.genus,
            if r.orientable { "yes" } else { "no" }
        ));
        for b in &r.boundary {
            match b {
                Boundary::Free(c) => out.push_str(&format!("  boundary free {c}\n")),
                Boundary::Attached(word) => {
                    out.push_str("  boundary attached");
                    write_word(&mut out, word);
                    out.push('\n');
                }
            }
        }
    }
    put_comments(&mut out, "");
    out
}

/// Canonical text of a valid polyhedron: declarations sorted by id.
pub fn emit_spoly(p: &SimplePolyhedron) -> Result<String, Error> {
    p.require_valid()?;
    Ok(emit_inner(p, &[], EmitOptions::default()))
}

pub fn emit_document(doc: &SpolyDocument, opts: EmitOptions) -> Result<String, Error> {
    doc.polyhedron.require_valid()?;
    Ok(emit_inner(&doc.polyhedron, &doc.comments, opts))
}

#[cfg(test)]
mod tests {
    use super::*;

    const DISC: &str = "polyhedron d\nregion r genus 0 orientable yes\n  boundary free c\n";

    #[test]
    fn parses_minimal_disc() {
        let p = parse_spoly(DISC).unwrap();
        assert_eq!(p.regions.len(), 1);
        assert_eq!(p.free_circles, vec!["c".to_string()]);
    }

    #[test]
    fn dangling_vertex_reported_at_its_line() {
        let text = "polyhedron d\nedge e interval v.0 v.1\nregion r genus 0 orientable yes\n  boundary free c\n";
        let errs = parse_spoly(text).unwrap_err();
        assert!(errs.iter().any(|e| e.code == ParseErrorCode::DanglingReference && e.line == 2), "{errs:?}");
    }

    #[test]
    fn collects_several_errors() {
        let text = "polyhedron d\nfrobnicate\nregion r genus x orientable yes\nvertex\n";
        let errs = parse_spoly(text).unwrap_err();
        assert_eq!(errs.len(), 3, "{errs:?}");
        assert_eq!(errs[0].line, 2);
        assert_eq!(errs[1].code, ParseErrorCode::BadNumber);
        assert_eq!(errs[1].column, 16);
    }

    #[test]
    fn comments_survive_when_asked() {
        let text = "# a disc\npolyhedron d\n# the only region\nregion r genus 0 orientable yes\n  boundary free c\n";
        let doc = parse_document(text).unwrap();
        let kept = emit_document(&doc, EmitOptions { keep_comments: true }).unwrap();
        assert!(kept.contains("# the only region\nregion r"));
        let dropped = emit_document(&doc, EmitOptions::default()).unwrap();
        assert!(!dropped.contains('#'));
    }

    #[test]
    fn duplicate_ids_are_parse_errors() {
        let text = "polyhedron d\nregion r genus 0 orientable yes\n boundary free c\nregion r genus 0 orientable yes\n boundary free e\n";
        let errs = parse_spoly(text).unwrap_err();
        assert!(errs.iter().any(|e| e.code == ParseErrorCode::DuplicateId && e.line == 4));
    }
}
