//! The line-oriented input format.
//!
//! ```text
//! field Q
//! vertices 1 2
//! arrows a: 1->2, b: 2->2
//! relations b*b
//! truncate 3
//! ```
//!
//! or, by structure constants,
//!
//! ```text
//! field F5
//! algebra dim 2
//! labels 1 x
//! mult 2 2 = 0
//! unit = 1
//! ```
//!
//! `;` separates statements like a newline and `#` starts a comment. Products that are
//! not listed are zero; `mult i j` is 1-based.

use repcoalg_core::fdalg::FdAlgebra;
use repcoalg_core::quivalg::{build_algebra, Path, Quiver, QuiverPresentation, Relation};
use repcoalg_core::{Error, FieldSpec, Scalar};
use thiserror::Error as ThisError;

#[derive(Clone, Debug, PartialEq, Eq, ThisError)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, ThisError)]
pub enum InputError {
    #[error("{0}")]
    Syntax(ParseError),
    #[error("line {line}: {error}")]
    Algebra { line: usize, error: Error },
}

#[derive(Clone, Debug)]
pub enum Input {
    Presentation {
        presentation: QuiverPresentation,
        algebra: FdAlgebra,
    },
    Algebra(FdAlgebra),
}

impl Input {
    pub fn algebra(&self) -> &FdAlgebra {
        match self {
            Input::Presentation { algebra, .. } => algebra,
            Input::Algebra(a) => a,
        }
    }

    pub fn presentation(&self) -> Option<&QuiverPresentation> {
        match self {
            Input::Presentation { presentation, .. } => Some(presentation),
            Input::Algebra(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(char),
}

#[derive(Clone, Copy, Debug)]
struct Span {
    line: usize,
    column: usize,
}

#[derive(Clone, Debug)]
struct Stmt {
    keyword: String,
    rest: String,
    at: Span,
    rest_at: Span,
}

fn err<T>(at: Span, message: impl Into<String>) -> Result<T, InputError> {
    Err(InputError::Syntax(ParseError {
        line: at.line,
        column: at.column,
        message: message.into(),
    }))
}

fn shift(at: Span, by: usize) -> Span {
    Span {
        line: at.line,
        column: at.column + by,
    }
}

fn statements(text: &str) -> Vec<Stmt> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let mut col = 0;
        for piece in line.split(';') {
            let lead = piece.len() - piece.trim_start().len();
            let body = piece.trim();
            if !body.is_empty() {
                let kw_len = body.find(char::is_whitespace).unwrap_or(body.len());
                let rest = &body[kw_len..];
                let rest_lead = rest.len() - rest.trim_start().len();
                let start = col + lead + 1;
                out.push(Stmt {
                    keyword: body[..kw_len].to_string(),
                    rest: rest.trim().to_string(),
                    at: Span { line: ln + 1, column: start },
                    rest_at: Span {
                        line: ln + 1,
                        column: start + kw_len + rest_lead,
                    },
                });
            }
            col += piece.chars().count() + 1;
        }
    }
    out
}

fn tokenize(s: &str, at: Span) -> Result<Vec<(Tok, Span)>, InputError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let here = shift(at, i);
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            match text.parse() {
                Ok(n) => out.push((Tok::Num(n), here)),
                Err(_) => return err(here, format!("number {text} is out of range")),
            }
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), here));
        } else if "*+-/,=:>".contains(c) {
            out.push((Tok::Sym(c), here));
            i += 1;
        } else {
            return err(here, format!("unexpected character '{c}'"));
        }
    }
    Ok(out)
}

fn coefficient(field: FieldSpec, num: i64, den: i64, at: Span) -> Result<Scalar, InputError> {
    let d = field.from_i64(den);
    if den == 0 || d.is_zero() {
        return err(at, format!("denominator {den} vanishes in {}", field.name()));
    }
    Ok(field.from_i64(num).div(&d))
}

/// `Σ c · word`, where a word is `*`-separated identifiers. Returns the terms in order.
fn lin_combo(
    field: FieldSpec,
    toks: &[(Tok, Span)],
    end: Span,
) -> Result<Vec<(Scalar, Vec<(String, Span)>, Span)>, InputError> {
    let mut out = Vec::new();
    let mut i = 0;
    let peek = |i: usize| toks.get(i).map(|t| &t.0);
    let span = |i: usize| toks.get(i).map(|t| t.1).unwrap_or(end);
    if toks.is_empty() {
        return err(end, "expected a linear combination");
    }
    while i < toks.len() {
        let start = span(i);
        let mut sign = 1;
        if !out.is_empty() || matches!(peek(i), Some(Tok::Sym('+' | '-'))) {
            match peek(i) {
                Some(Tok::Sym('+')) => i += 1,
                Some(Tok::Sym('-')) => {
                    sign = -1;
                    i += 1;
                }
                _ => return err(span(i), "expected '+' or '-'"),
            }
        }
        let mut c = field.from_i64(sign);
        let mut has_coef = false;
        if let Some(Tok::Num(n)) = peek(i) {
            let n = *n;
            i += 1;
            let mut den = 1;
            if let Some(Tok::Sym('/')) = peek(i) {
                i += 1;
                match peek(i) {
                    Some(Tok::Num(d)) => {
                        den = *d;
                        i += 1;
                    }
                    _ => return err(span(i), "expected a denominator"),
                }
            }
            c = c.mul(&coefficient(field, n, den, start)?);
            has_coef = true;
            if let Some(Tok::Sym('*')) = peek(i) {
                i += 1;
                if !matches!(peek(i), Some(Tok::Ident(_))) {
                    return err(span(i), "expected a word after '*'");
                }
            }
        }
        let mut word = Vec::new();
        while let Some(Tok::Ident(name)) = peek(i) {
            word.push((name.clone(), span(i)));
            i += 1;
            if let Some(Tok::Sym('*')) = peek(i) {
                i += 1;
                if !matches!(peek(i), Some(Tok::Ident(_))) {
                    return err(span(i), "expected an identifier after '*'");
                }
            } else {
                break;
            }
        }
        if word.is_empty() && !has_coef {
            return err(span(i), "expected a term");
        }
        out.push((c, word, start));
    }
    Ok(out)
}

fn parse_field(s: &Stmt) -> Result<FieldSpec, InputError> {
    let f = s.rest.as_str();
    if f == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(p) = f.strip_prefix('F').and_then(|p| p.parse::<u64>().ok()) {
        return FieldSpec::prime(p).map_or_else(|| err(s.rest_at, format!("{p} is not a supported prime")), Ok);
    }
    err(s.rest_at, format!("unknown field '{f}', expected Q or F<p>"))
}

fn parse_usize(s: &str, at: Span, what: &str) -> Result<usize, InputError> {
    s.trim().parse().map_or_else(|_| err(at, format!("expected {what}, found '{}'", s.trim())), Ok)
}

/// Parse a presentation or structure-constant algebra; `field` overrides the `field` line.
pub fn parse_input(text: &str, field: Option<FieldSpec>) -> Result<Input, InputError> {
    let stmts = statements(text);
    let mut declared = None;
    for s in &stmts {
        if s.keyword == "field" {
            declared = Some(parse_field(s)?);
        }
    }
    let field = field.or(declared).unwrap_or(FieldSpec::Rationals);
    if stmts.iter().any(|s| s.keyword == "algebra") {
        parse_structure_constants(&stmts, field)
    } else {
        parse_presentation(&stmts, field, text)
    }
}

fn parse_presentation(stmts: &[Stmt], field: FieldSpec, text: &str) -> Result<Input, InputError> {
    let mut quiver: Option<Quiver> = None;
    let mut relations: Vec<(Relation, usize)> = Vec::new();
    let mut truncation = None;
    let eof = Span {
        line: text.lines().count().max(1),
        column: 1,
    };
    for s in stmts {
        match s.keyword.as_str() {
            "field" => {}
            "vertices" => {
                let labels: Vec<String> = s.rest.split_whitespace().map(String::from).collect();
                if labels.is_empty() {
                    return err(s.rest_at, "expected vertex labels");
                }
                quiver = Some(Quiver::new(labels).map_err(|e| InputError::Algebra { line: s.at.line, error: e })?);
            }
            "arrows" => {
                let Some(q) = quiver.as_mut() else {
                    return err(s.at, "arrows must follow vertices");
                };
                let mut offset = 0;
                for piece in s.rest.split(',') {
                    let at = shift(s.rest_at, offset + piece.len() - piece.trim_start().len());
                    offset += piece.chars().count() + 1;
                    let piece = piece.trim();
                    let Some((label, ends)) = piece.split_once(':') else {
                        return err(at, format!("expected '<label>: <src>-><dst>', found '{piece}'"));
                    };
                    let ends_at = shift(at, label.len() + 1);
                    let Some((src, dst)) = ends.split_once("->") else {
                        return err(ends_at, "expected '->'");
                    };
                    let (src, dst) = (src.trim(), dst.trim());
                    let dst_at = shift(at, piece.len());
                    if src.is_empty() {
                        return err(ends_at, "missing source vertex");
                    }
                    if dst.is_empty() {
                        return err(dst_at, "missing target vertex");
                    }
                    let vs = q.vertex_index(src).ok_or(()).or_else(|_| err(ends_at, format!("unknown vertex '{src}'")))?;
                    let vt = q.vertex_index(dst).ok_or(()).or_else(|_| err(ends_at, format!("unknown vertex '{dst}'")))?;
                    q.add_arrow(label.trim(), vs, vt)
                        .map_err(|e| InputError::Algebra { line: s.at.line, error: e })?;
                }
            }
            "relations" => {
                let Some(q) = quiver.as_ref() else {
                    return err(s.at, "relations must follow the quiver");
                };
                let toks = tokenize(&s.rest, s.rest_at)?;
                for chunk in toks.split(|t| t.0 == Tok::Sym(',')) {
                    let terms = lin_combo(field, chunk, shift(s.rest_at, s.rest.chars().count()))?;
                    let mut rel = Vec::new();
                    for (c, word, at) in terms {
                        if word.is_empty() {
                            return err(at, "a relation cannot contain a constant term");
                        }
                        let mut arrows = Vec::new();
                        for (name, at) in &word {
                            match q.arrow_index(name) {
                                Some(a) => arrows.push(a),
                                None => return err(*at, format!("unknown arrow '{name}'")),
                            }
                        }
                        let path = Path::new(q, arrows).map_err(|e| InputError::Algebra { line: s.at.line, error: e })?;
                        rel.push((c, path));
                    }
                    relations.push((rel, s.at.line));
                }
            }
            "truncate" => truncation = Some(parse_usize(&s.rest, s.rest_at, "a truncation degree")?),
            other => return err(s.at, format!("unknown statement '{other}'")),
        }
    }
    let Some(quiver) = quiver else {
        return err(eof, "missing 'vertices'");
    };
    let Some(truncation) = truncation else {
        return err(eof, "missing 'truncate'");
    };
    for (rel, line) in &relations {
        let single = QuiverPresentation {
            quiver: quiver.clone(),
            relations: vec![rel.clone()],
            truncation,
            field,
        };
        single.validate().map_err(|e| InputError::Algebra { line: *line, error: e })?;
    }
    let last_line = relations.last().map(|r| r.1).unwrap_or(eof.line);
    let presentation = QuiverPresentation {
        quiver,
        relations: relations.into_iter().map(|r| r.0).collect(),
        truncation,
        field,
    };
    let algebra = build_algebra(&presentation).map_err(|e| InputError::Algebra { line: last_line, error: e })?;
    Ok(Input::Presentation { presentation, algebra })
}

fn parse_structure_constants(stmts: &[Stmt], field: FieldSpec) -> Result<Input, InputError> {
    let mut n = None;
    let mut labels: Option<Vec<String>> = None;
    let mut products: Vec<Vec<Vec<Scalar>>> = Vec::new();
    let mut unit = None;
    let mut last_line = 1;
    for s in stmts {
        last_line = s.at.line;
        match s.keyword.as_str() {
            "field" => {}
            "algebra" => {
                let Some(d) = s.rest.strip_prefix("dim") else {
                    return err(s.rest_at, "expected 'algebra dim <n>'");
                };
                let d = parse_usize(d, shift(s.rest_at, 3), "a dimension")?;
                if d == 0 {
                    return err(s.rest_at, "dimension must be positive");
                }
                n = Some(d);
                products = vec![vec![vec![field.zero(); d]; d]; d];
            }
            "labels" => {
                let Some(d) = n else { return err(s.at, "labels must follow 'algebra dim'") };
                let ls: Vec<String> = s.rest.split_whitespace().map(String::from).collect();
                if ls.len() != d {
                    return err(s.rest_at, format!("expected {d} labels, found {}", ls.len()));
                }
                labels = Some(ls);
            }
            "mult" | "unit" => {
                let Some(d) = n else { return err(s.at, "products must follow 'algebra dim'") };
                let names = labels.clone().unwrap_or_else(|| default_labels(d));
                let Some((lhs, rhs)) = s.rest.split_once('=') else {
                    return err(s.rest_at, "expected '='");
                };
                let rhs_at = shift(s.rest_at, lhs.chars().count() + 1);
                let toks = tokenize(rhs, rhs_at)?;
                let end = shift(rhs_at, rhs.chars().count());
                let mut v = vec![field.zero(); d];
                let terms = lin_combo(field, &toks, end)?;
                for (c, word, at) in terms {
                    match word.as_slice() {
                        [] if c.is_zero() => {}
                        [(name, at)] => match names.iter().position(|l| l == name) {
                            Some(k) => v[k] = v[k].add(&c),
                            None => return err(*at, format!("unknown basis element '{name}'")),
                        },
                        [] => match names.iter().position(|l| l == "1") {
                            Some(k) => v[k] = v[k].add(&c),
                            None => return err(at, "constant term needs a basis element named 1"),
                        },
                        _ => return err(at, "expected a single basis element per term"),
                    }
                }
                if s.keyword == "unit" {
                    if !lhs.trim().is_empty() {
                        return err(s.rest_at, "expected 'unit = <combination>'");
                    }
                    unit = Some(v);
                } else {
                    let idx: Vec<&str> = lhs.split_whitespace().collect();
                    let [i, j] = idx.as_slice() else {
                        return err(s.rest_at, "expected 'mult <i> <j> = <combination>'");
                    };
                    let i = parse_usize(i, s.rest_at, "a basis index")?;
                    let j = parse_usize(j, s.rest_at, "a basis index")?;
                    if i == 0 || j == 0 || i > d || j > d {
                        return err(s.rest_at, format!("basis indices run from 1 to {d}"));
                    }
                    products[i - 1][j - 1] = v;
                }
            }
            other => return err(s.at, format!("unknown statement '{other}'")),
        }
    }
    let Some(d) = n else { unreachable!("caller checked for 'algebra'") };
    let labels = labels.unwrap_or_else(|| default_labels(d));
    let Some(unit) = unit else {
        return err(Span { line: last_line, column: 1 }, "missing 'unit = ...'");
    };
    let a = FdAlgebra::from_table(field, labels, &products, unit).map_err(|e| InputError::Algebra { line: last_line, error: e })?;
    Ok(Input::Algebra(a))
}

fn default_labels(d: usize) -> Vec<String> {
    (1..=d).map(|k| format!("b{k}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_numbers_one_line() {
        let inp = parse_input("field Q; vertices v; arrows a: v->v; relations a*a; truncate 3", None).unwrap();
        let p = inp.presentation().unwrap();
        assert_eq!(p.relations.len(), 1);
        assert_eq!(inp.algebra().dim(), 2);
    }

    #[test]
    fn a2_over_f2() {
        let inp = parse_input("field F2; vertices 1 2; arrows a: 1->2; truncate 4", None).unwrap();
        assert_eq!(inp.algebra().field(), FieldSpec::Prime(2));
        assert_eq!(inp.algebra().dim(), 3);
    }

    #[test]
    fn malformed_arrow_reports_position() {
        let e = parse_input("vertices 1 2\narrows a: 1->\ntruncate 2", None).unwrap_err();
        match e {
            InputError::Syntax(p) => {
                assert_eq!(p.line, 2);
                assert_eq!(p.column, 14);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn coefficients_and_several_relations() {
        let inp = parse_input(
            "vertices 1\narrows x: 1->1, y: 1->1\nrelations x*y - 2 y*x, x*x\nrelations 1/2*y*y\ntruncate 4",
            None,
        )
        .unwrap();
        let p = inp.presentation().unwrap();
        assert_eq!(p.relations.len(), 3);
        assert_eq!(p.relations[0][1].0, FieldSpec::Rationals.from_i64(-2));
        assert_eq!(inp.algebra().dim(), 4);
    }

    #[test]
    fn inadmissible_relation_carries_line() {
        let e = parse_input("vertices 1\narrows x: 1->1\n\nrelations x\ntruncate 3", None).unwrap_err();
        assert!(matches!(e, InputError::Algebra { line: 4, error: Error::NotAdmissible(_) }), "{e:?}");
    }

    #[test]
    fn structure_constants() {
        let inp = parse_input("field F5\nalgebra dim 2\nlabels 1 x\nmult 1 1 = 1; mult 1 2 = x; mult 2 1 = x\nunit = 1", None)
            .unwrap();
        assert_eq!(inp.algebra().dim(), 2);
        assert!(inp.presentation().is_none());
        let bad = parse_input("algebra dim 2\nmult 1 1 = b1\nmult 2 2 = b2\nunit = b1", None).unwrap_err();
        assert!(matches!(bad, InputError::Algebra { .. }));
    }

    #[test]
    fn field_override_wins() {
        let inp = parse_input("field Q; vertices v; arrows a: v->v; truncate 2", Some(FieldSpec::Prime(3))).unwrap();
        assert_eq!(inp.algebra().field(), FieldSpec::Prime(3));
    }

    #[test]
    fn unknown_arrow_and_bad_denominator() {
        let e = parse_input("vertices v\narrows a: v->v\nrelations a*b\ntruncate 3", None).unwrap_err();
        assert!(matches!(e, InputError::Syntax(ParseError { line: 3, column: 13, .. })), "{e:?}");
        let e = parse_input("field F3; vertices v; arrows a: v->v; relations 1/3 a*a; truncate 3", None).unwrap_err();
        assert!(matches!(e, InputError::Syntax(_)));
    }
}
