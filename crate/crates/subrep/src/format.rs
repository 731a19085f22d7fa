//! Text formats: poset files, ordinals, cardinals and pinboard column lists.
//!
//! A poset file is UTF-8 text. `#` starts a comment; `elem a b c` declares
//! elements; `a < b` declares a cover (chains such as `a < b < c` are
//! accepted too). The order is the transitive closure of the covers.
//!
//! Ordinals are sums of terms `w2`, `w0*3`, `30` joined by `+`. Cardinals are
//! `aleph3` or a natural number. A column list is a sequence of
//! `(height,frequency)` pairs, optionally prefixed by `pin`.

use std::fmt::Write as _;

use subrep_core::pinboard::Column;
use subrep_core::{Cardinal, OrdinalExpr, Poset, PosetError, Term};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown element `{name}`")]
    UnknownElement { line: usize, name: String },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_poset(text: &str) -> Result<Poset, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut covers: Vec<(usize, String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("elem") {
            if !rest.is_empty() && !rest.starts_with(char::is_whitespace) {
                return Err(syntax(line, format!("unrecognized directive `{content}`")));
            }
            names.extend(rest.split_whitespace().map(str::to_string));
            continue;
        }
        let parts: Vec<&str> = content.split('<').map(str::trim).collect();
        if parts.len() < 2 {
            return Err(syntax(
                line,
                format!("expected `elem ...` or `a < b`, found `{content}`"),
            ));
        }
        for part in &parts {
            if part.is_empty() || part.contains(char::is_whitespace) {
                return Err(syntax(line, format!("bad element name in `{content}`")));
            }
        }
        for pair in parts.windows(2) {
            covers.push((line, pair[0].to_string(), pair[1].to_string()));
        }
    }
    for (line, a, b) in &covers {
        for name in [a, b] {
            if !names.contains(name) {
                return Err(ParseError::UnknownElement {
                    line: *line,
                    name: name.clone(),
                });
            }
        }
    }
    let pairs: Vec<(&str, &str)> = covers
        .iter()
        .map(|(_, a, b)| (a.as_str(), b.as_str()))
        .collect();
    Ok(Poset::from_covers(
        names.iter().map(String::as_str),
        &pairs,
    )?)
}

/// The file form of a poset: declarations, then its cover relation.
pub fn write_poset(p: &Poset) -> String {
    let mut out = String::from("elem");
    for name in p.names() {
        write!(out, " {name}").unwrap();
    }
    out.push('\n');
    for (a, b) in p.covers() {
        writeln!(out, "{} < {}", p.name(a), p.name(b)).unwrap();
    }
    out
}

fn parse_number(s: &str, what: &str) -> Result<u64, ParseError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(1, format!("expected {what}, found `{s}`")));
    }
    s.parse()
        .map_err(|_| syntax(1, format!("{what} `{s}` is too large")))
}

pub fn parse_ordinal(s: &str) -> Result<OrdinalExpr, ParseError> {
    let mut terms = Vec::new();
    for part in s.split('+').map(str::trim) {
        let omega = part.strip_prefix('w').or_else(|| part.strip_prefix('ω'));
        let term = match omega {
            Some(rest) => {
                let (index, mult) = match rest.split_once('*') {
                    Some((k, m)) => (k.trim(), parse_number(m.trim(), "a multiplier")?),
                    None => (rest, 1),
                };
                if mult == 0 {
                    return Err(syntax(1, format!("zero multiplier in `{part}`")));
                }
                let index = parse_number(index, "an omega index")?;
                let index = u32::try_from(index).map_err(|_| syntax(1, "omega index too large"))?;
                Term::Omega { index, mult }
            }
            None => Term::Fin(parse_number(part, "an ordinal term")?),
        };
        terms.push(term);
    }
    Ok(OrdinalExpr::from_terms(terms))
}

pub fn parse_cardinal(s: &str) -> Result<Cardinal, ParseError> {
    let s = s.trim();
    match s.strip_prefix("aleph").or_else(|| s.strip_prefix('ℵ')) {
        Some(k) => {
            let k = parse_number(k, "an aleph index")?;
            let k = u32::try_from(k).map_err(|_| syntax(1, "aleph index too large"))?;
            Ok(Cardinal::Aleph(k))
        }
        None => Ok(Cardinal::Fin(parse_number(s, "a cardinal")?)),
    }
}

/// `pin (w2,5) (6,aleph0)` or just `(w2,5) (6,aleph0)`.
pub fn parse_columns(s: &str) -> Result<Vec<Column>, ParseError> {
    let mut rest = s.trim();
    rest = rest.strip_prefix("pin").unwrap_or(rest).trim_start();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(syntax(
                1,
                format!("expected `(height,frequency)`, found `{rest}`"),
            ));
        };
        let Some((pair, tail)) = body.split_once(')') else {
            return Err(syntax(1, "unclosed `(`"));
        };
        let Some((h, f)) = pair.split_once(',') else {
            return Err(syntax(
                1,
                format!("expected `height,frequency` in `({pair})`"),
            ));
        };
        out.push((parse_ordinal(h.trim())?, parse_cardinal(f)?));
        rest = tail.trim_start();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fig1() {
        let p =
            parse_poset("# figure 1\nelem 1 2 3 4\n1 < 2\n2 < 3  # left petal\n2 < 4\n").unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.lt(0, 3));
        assert_eq!(parse_poset(&write_poset(&p)).unwrap(), p);
    }

    #[test]
    fn chains_and_multiple_elem_lines() {
        let p = parse_poset("elem a b\nelem c\na < b < c\n").unwrap();
        assert!(p.is_chain(p.all().bits()));
    }

    #[test]
    fn poset_errors() {
        assert_eq!(
            parse_poset("elem a\na < b\n"),
            Err(ParseError::UnknownElement {
                line: 2,
                name: "b".into()
            })
        );
        assert!(matches!(
            parse_poset("elem a b\na b\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_poset("elem a b\na < b\nb < a\n"),
            Err(ParseError::Poset(PosetError::CycleDetected(_)))
        ));
        assert!(matches!(
            parse_poset("elements a"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_poset("elem a a"),
            Err(ParseError::Poset(PosetError::DuplicateElement(_)))
        ));
    }

    #[test]
    fn ordinals() {
        assert_eq!(parse_ordinal("w1+10").unwrap().to_string(), "w1+10");
        assert_eq!(parse_ordinal("30").unwrap(), OrdinalExpr::finite(30));
        assert_eq!(
            parse_ordinal("w0*2").unwrap(),
            OrdinalExpr::omega_times(0, 2)
        );
        assert_eq!(parse_ordinal("5+w0").unwrap(), OrdinalExpr::omega(0));
        assert_eq!(parse_ordinal("ω2").unwrap(), OrdinalExpr::omega(2));
        assert!(parse_ordinal("w").is_err());
        assert!(parse_ordinal("w1*0").is_err());
        assert!(parse_ordinal("x").is_err());
    }

    #[test]
    fn cardinals_and_columns() {
        assert_eq!(parse_cardinal("aleph3").unwrap(), Cardinal::Aleph(3));
        assert_eq!(parse_cardinal("12").unwrap(), Cardinal::Fin(12));
        let cols = parse_columns("pin (w2,5) (w1, 2) (6,aleph0) (3,1)").unwrap();
        assert_eq!(cols.len(), 4);
        assert_eq!(cols[2], (OrdinalExpr::finite(6), Cardinal::Aleph(0)));
        assert!(parse_columns("(w2,5").is_err());
        assert!(parse_columns("(w2;5)").is_err());
        assert_eq!(parse_columns("").unwrap(), vec![]);
    }
}
