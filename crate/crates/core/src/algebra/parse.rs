//! Text format for bound quiver presentations.
//!
//! ```text
//! # comment
//! field p=2
//! vertices 1 2 3
//! arrow a: 1 -> 2
//! arrow b: 2 -> 3
//! relation a*b
//! relation x*y - 2*z*w
//! ```

use super::quiver::{Arrow, QuiverPresentation, Relation};
use crate::error::{Error, Result};
use crate::linalg::FieldPrime;

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

fn is_ident(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'' || c == '.')
}

/// Column (1-based) of the first occurrence of `needle` at or after byte `from`.
fn col_of(line: &str, from: usize, needle: &str) -> usize {
    line[from..].find(needle).map(|i| from + i + 1).unwrap_or(from + 1)
}

pub fn parse_presentation(text: &str) -> Result<QuiverPresentation> {
    let mut field: Option<FieldPrime> = None;
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut raw_relations: Vec<(usize, usize, String)> = Vec::new();

    for (ln, full) in text.lines().enumerate() {
        let line_no = ln + 1;
        let content = full.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let offset = content.len() - trimmed.len();
        let keyword = trimmed.split_whitespace().next().unwrap();
        let rest_start = offset + keyword.len();
        let rest = &content[rest_start..];
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(err(line_no, offset + 1, "duplicate field section"));
                }
                let r = rest.trim();
                let value = r
                    .strip_prefix("p")
                    .map(|s| s.trim_start())
                    .and_then(|s| s.strip_prefix('='))
                    .map(|s| s.trim())
                    .ok_or_else(|| err(line_no, col_of(content, rest_start, r), "expected `p=<prime>`"))?;
                let p: u32 = value
                    .parse()
                    .map_err(|_| err(line_no, col_of(content, rest_start, value), format!("invalid prime `{value}`")))?;
                field = Some(FieldPrime::new(p).map_err(|_| {
                    err(line_no, col_of(content, rest_start, value), format!("{p} is not a supported prime"))
                })?);
            }
            "vertices" => {
                if vertices.is_some() {
                    return Err(err(line_no, offset + 1, "duplicate vertices section"));
                }
                let mut vs: Vec<String> = Vec::new();
                let mut from = rest_start;
                for v in rest.split_whitespace() {
                    let col = col_of(content, from, v);
                    from = col - 1 + v.len();
                    if !is_ident(v) {
                        return Err(err(line_no, col, format!("invalid vertex name `{v}`")));
                    }
                    if vs.iter().any(|w| w == v) {
                        return Err(err(line_no, col, format!("duplicate vertex `{v}`")));
                    }
                    vs.push(v.to_string());
                }
                if vs.is_empty() {
                    return Err(err(line_no, offset + 1, "no vertices given"));
                }
                vertices = Some(vs);
            }
            "arrow" => {
                let vs = vertices
                    .as_ref()
                    .ok_or_else(|| err(line_no, offset + 1, "arrow declared before vertices"))?;
                let (name, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| err(line_no, rest_start + 1, "expected `<name>: <src> -> <tgt>`"))?;
                let name = name.trim();
                if !is_ident(name) || name.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                    return Err(err(line_no, col_of(content, rest_start, name), format!("invalid arrow name `{name}`")));
                }
                if arrows.iter().any(|a| a.name == name) {
                    return Err(err(line_no, col_of(content, rest_start, name), format!("duplicate arrow `{name}`")));
                }
                let (src, tgt) = ends
                    .split_once("->")
                    .ok_or_else(|| err(line_no, col_of(content, rest_start, ":") + 1, "expected `->`"))?;
                let (src, tgt) = (src.trim(), tgt.trim());
                let lookup = |v: &str| -> Result<usize> {
                    vs.iter()
                        .position(|w| w == v)
                        .ok_or_else(|| err(line_no, col_of(content, rest_start, v), format!("unknown vertex `{v}`")))
                };
                let source = lookup(src)?;
                let target = lookup(tgt)?;
                arrows.push(Arrow { name: name.to_string(), source, target });
            }
            "relation" => raw_relations.push((line_no, rest_start, content.to_string())),
            other => return Err(err(line_no, offset + 1, format!("unknown section `{other}`"))),
        }
    }

    let field = field.unwrap_or(FieldPrime::TWO);
    let vertices = vertices.ok_or_else(|| err(1, 1, "missing vertices section"))?;
    let mut pres = QuiverPresentation { field, vertices, arrows, relations: Vec::new() };
    for (line_no, start, content) in raw_relations {
        pres.relations.push(parse_relation(&pres, line_no, start, &content)?);
    }
    pres.validate().map_err(|e| match e {
        Error::Input(msg) => err(0, 0, msg),
        other => other,
    })?;
    Ok(pres)
}

fn parse_relation(pres: &QuiverPresentation, line_no: usize, start: usize, content: &str) -> Result<Relation> {
    let p = pres.field;
    let bytes = content.as_bytes();
    let mut i = start;
    let mut terms: Vec<(u32, Vec<usize>)> = Vec::new();
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && (bytes[*i] as char).is_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_ws(&mut i);
        if i >= bytes.len() {
            break;
        }
        let mut sign: i64 = 1;
        if !terms.is_empty() || bytes[i] == b'+' || bytes[i] == b'-' {
            match bytes[i] {
                b'+' => i += 1,
                b'-' => {
                    sign = -1;
                    i += 1
                }
                _ => return Err(err(line_no, i + 1, "expected `+` or `-` between terms")),
            }
            skip_ws(&mut i);
        }
        let term_start = i;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let term = content[term_start..i].trim();
        if term.is_empty() {
            return Err(err(line_no, term_start + 1, "empty relation term"));
        }
        let mut coef: i64 = sign;
        let mut factors: Vec<&str> = term.split('*').map(str::trim).collect();
        if let Ok(c) = factors[0].parse::<i64>() {
            coef *= c;
            factors.remove(0);
        } else if let Some((c, path)) = factors[0].split_once(char::is_whitespace) {
            if let Ok(c) = c.parse::<i64>() {
                coef *= c;
                factors[0] = path.trim();
            }
        }
        if factors.is_empty() {
            return Err(err(line_no, term_start + 1, "relation term has no path"));
        }
        let mut path = Vec::new();
        for f in factors {
            let a = pres
                .arrows
                .iter()
                .position(|a| a.name == f)
                .ok_or_else(|| err(line_no, col_of(content, term_start, f), format!("unknown arrow `{f}`")))?;
            path.push(a);
        }
        if path.len() < 2 {
            return Err(err(line_no, term_start + 1, "relation paths must have length at least 2"));
        }
        for w in path.windows(2) {
            if pres.arrows[w[0]].target != pres.arrows[w[1]].source {
                return Err(err(line_no, term_start + 1, format!("path `{term}` is not composable")));
            }
        }
        terms.push((p.reduce(coef), path));
    }
    if terms.is_empty() {
        return Err(err(line_no, start + 1, "empty relation"));
    }
    let ends: Vec<(usize, usize)> = terms
        .iter()
        .map(|(_, q)| (pres.arrows[q[0]].source, pres.arrows[*q.last().unwrap()].target))
        .collect();
    if ends.iter().any(|e| *e != ends[0]) {
        return Err(err(line_no, start + 1, "relation terms have different endpoints"));
    }
    Ok(Relation { terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;

    #[test]
    fn parses_a3r2() {
        let text = "# A3 with radical square zero\nfield p=2\nvertices 1 2 3\narrow a: 1 -> 2\narrow b : 2->3\nrelation a*b\n";
        let pres = parse_presentation(text).unwrap();
        assert_eq!(pres.arrows.len(), 2);
        assert_eq!(build_algebra(&pres).unwrap().dim(), 5);
    }

    #[test]
    fn parses_coefficients_and_signs() {
        let text = "field p=3\nvertices 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 4\narrow c: 1 -> 3\narrow d: 3 -> 4\nrelation a*b - 2*c*d\n";
        let pres = parse_presentation(text).unwrap();
        assert_eq!(pres.relations[0].terms, vec![(1, vec![0, 1]), (1, vec![2, 3])]);
    }

    #[test]
    fn reports_unknown_section_with_location() {
        let e = parse_presentation("vertices 1\n  bogus x\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 2, col: 3, msg: "unknown section `bogus`".into() });
    }

    #[test]
    fn reports_unknown_arrow_in_relation() {
        let e = parse_presentation("vertices 1 2\narrow a: 1 -> 2\nrelation a*z\n").unwrap_err();
        match e {
            Error::Parse { line, col, .. } => assert_eq!((line, col), (3, 12)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_short_relations() {
        assert!(parse_presentation("vertices 1 2\narrow a: 1 -> 2\nrelation a\n").is_err());
    }
}
