//! MMP hypergraph notation and the `<symbol>={…}` coordinatization notation.
//!
//! An MMPH is written as hyperedges of single-character vertex symbols,
//! separated by `,` and terminated by `.`; whitespace is ignored:
//!
//! ```text
//! 123,145,267,389.
//! ```
//!
//! A coordinatization lists one vector per vertex, `1={0,0,1}`, using the
//! scalar grammar of [`crate::ring`]. Because `,` `.` `=` `{` `}` are not
//! vertex symbols, both notations can share one file.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::coords::Coordinatization;
use crate::error::{Error, Result};
use crate::hypergraph::{alphabet_len, Mmph, Symbol};
use crate::ring::{normalize_ray, parse_vector};

/// Parses exactly one `.`-terminated hypergraph.
pub fn parse_mmph(text: &str) -> Result<Mmph> {
    let mut all = parse_mmph_batch(text)?;
    match all.len() {
        0 => Err(Error::MissingTerminator),
        1 => Ok(all.pop().unwrap()),
        _ => Err(Error::Syntax {
            line: 1,
            message: format!("expected one hypergraph, found {}", all.len()),
        }),
    }
}

/// Parses every `.`-terminated hypergraph in `text`.
pub fn parse_mmph_batch(text: &str) -> Result<Vec<Mmph>> {
    let mut out = Vec::new();
    let mut edges: Vec<Vec<Symbol>> = vec![Vec::new()];
    let mut pending = false;
    for c in text.chars().filter(|c| !c.is_whitespace()) {
        match c {
            ',' => edges.push(Vec::new()),
            '.' => {
                out.push(Mmph::from_symbol_edges(&edges)?);
                edges = vec![Vec::new()];
                pending = false;
                continue;
            }
            _ => {
                let s = Symbol::from_char(c).ok_or_else(|| Error::UnknownSymbol(c.to_string()))?;
                edges.last_mut().unwrap().push(s);
            }
        }
        pending = true;
    }
    if pending {
        return Err(Error::MissingTerminator);
    }
    Ok(out)
}

/// Writes hyperedges in stored order using each vertex's own symbol.
pub fn serialize_mmph(h: &Mmph) -> Result<String> {
    let mut out = String::with_capacity(h.l() * (h.n() + 1));
    for (i, edge) in h.edges().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        for &v in edge {
            let c = h.symbol(v).to_char().ok_or(Error::AlphabetExceeded {
                k: h.k(),
                alphabet: alphabet_len(),
            })?;
            out.push(c);
        }
    }
    out.push('.');
    Ok(out)
}

/// Relabels vertices `1, 2, 3, …` by first appearance, then serializes.
pub fn serialize_mmph_contiguous(h: &Mmph) -> Result<String> {
    if h.k() > alphabet_len() {
        return Err(Error::AlphabetExceeded { k: h.k(), alphabet: alphabet_len() });
    }
    serialize_mmph(&h.relabel_contiguous().0)
}

/// `(line, symbol, vector text)` of one coordinatization entry.
type Entry = (usize, char, String);

/// Coordinatization entries found in `text`, plus the text outside them.
fn scan_entries(text: &str) -> Result<(String, Vec<Entry>)> {
    let chars: Vec<char> = text.chars().collect();
    let mut rest = String::new();
    let mut entries = Vec::new();
    let mut line = 1;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if i + 1 < chars.len() && chars[i + 1] == '=' {
            let open = chars[i + 2..].iter().position(|&x| !x.is_whitespace()).map(|p| i + 2 + p);
            let Some(open) = open.filter(|&o| chars[o] == '{') else {
                return Err(Error::Syntax { line, message: format!("expected `{{` after `{c}=`") });
            };
            let close = chars[open..].iter().position(|&x| x == '}').map(|p| open + p).ok_or(
                Error::Syntax { line, message: format!("unterminated vector for `{c}`") },
            )?;
            let body: String = chars[open + 1..close].iter().filter(|c| !c.is_whitespace()).collect();
            entries.push((line, c, body));
            line += chars[i..close].iter().filter(|&&x| x == '\n').count();
            i = close + 1;
            continue;
        }
        if c == '\n' {
            line += 1;
        }
        rest.push(c);
        i += 1;
    }
    Ok((rest, entries))
}

/// Parses `<symbol>={s1,…,sn}` entries for the vertices of `h`.
///
/// Vectors are normalized to rays on ingestion. The component count must
/// be at least `h.n()` and uniform across entries. Returns the
/// coordinatization and the vertices of `h` that have no entry.
pub fn parse_coordinatization(text: &str, h: &Mmph) -> Result<(Coordinatization, Vec<Symbol>)> {
    let (rest, entries) = scan_entries(text)?;
    if let Some(stray) = rest.chars().find(|c| !c.is_whitespace() && *c != ',') {
        return Err(Error::Syntax { line: 1, message: format!("unexpected `{stray}` in coordinatization") });
    }
    let coords = coordinatization_from_entries(&entries, h)?;
    let missing = coords.missing(h);
    Ok((coords, missing))
}

fn coordinatization_from_entries(entries: &[(usize, char, String)], h: &Mmph) -> Result<Coordinatization> {
    let mut dim = None;
    let mut rays = Vec::with_capacity(entries.len());
    for (line, c, body) in entries {
        let s = Symbol::from_char(*c).ok_or_else(|| Error::UnknownSymbol(c.to_string()))?;
        if h.vertex_of(s).is_none() {
            return Err(Error::UnknownSymbol(c.to_string()));
        }
        let vector = parse_vector(body).map_err(|e| match e {
            Error::ZeroVector | Error::MixedRings(..) => e,
            other => Error::Syntax { line: *line, message: other.to_string() },
        })?;
        let expected = *dim.get_or_insert(vector.dim().max(h.n()));
        if vector.dim() != expected {
            return Err(Error::ComponentCount { symbol: c.to_string(), expected, found: vector.dim() });
        }
        rays.push((s, normalize_ray(&vector)));
    }
    Coordinatization::new(dim.unwrap_or(h.n()), rays)
}

/// A file holding one hypergraph and, optionally, its coordinatization.
pub fn parse_document(text: &str) -> Result<(Mmph, Option<Coordinatization>)> {
    let (rest, entries) = scan_entries(text)?;
    let h = parse_mmph(&rest)?;
    let coords = if entries.is_empty() {
        None
    } else {
        Some(coordinatization_from_entries(&entries, &h)?)
    };
    Ok((h, coords))
}

/// One `<symbol>={…}` line per coordinatized vertex, in alphabet order,
/// with denominators cleared.
pub fn serialize_coordinatization(c: &Coordinatization) -> Result<String> {
    let mut out = String::new();
    for (s, ray) in c.iter() {
        let ch = s.to_char().ok_or(Error::AlphabetExceeded { k: c.len(), alphabet: alphabet_len() })?;
        writeln!(out, "{ch}={ray}").unwrap();
    }
    Ok(out)
}

/// JSON form: statistics plus `edges` as arrays of symbols. Vertices past
/// the alphabet are written as `<n>`.
pub fn mmph_to_json(h: &Mmph) -> Value {
    let stats = h.stats();
    let edges: Vec<Vec<String>> = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| h.symbol(v).to_string()).collect())
        .collect();
    json!({
        "k": stats.k,
        "l": stats.l,
        "n": stats.n,
        "kappa_histogram": stats.kappa_histogram,
        "multiplicity_histogram": stats.multiplicity_histogram,
        "complete_bases": stats.complete_bases,
        "edges": edges,
    })
}

/// Reads the `edges` field written by [`mmph_to_json`].
pub fn parse_mmph_json(text: &str) -> Result<Mmph> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::Syntax { line: e.line(), message: e.to_string() })?;
    let edges = value
        .get("edges")
        .and_then(Value::as_array)
        .ok_or(Error::Syntax { line: 1, message: "missing `edges` array".into() })?;
    let edges = edges
        .iter()
        .map(|e| {
            e.as_array()
                .ok_or(Error::Syntax { line: 1, message: "edge is not an array".into() })?
                .iter()
                .map(|s| parse_json_symbol(s.as_str().unwrap_or("")))
                .collect::<Result<Vec<Symbol>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Mmph::from_symbol_edges(&edges)
}

fn parse_json_symbol(text: &str) -> Result<Symbol> {
    let mut chars = text.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Symbol::from_char(c).ok_or_else(|| Error::UnknownSymbol(text.into())),
        _ => text
            .strip_prefix('<')
            .and_then(|t| t.strip_suffix('>'))
            .and_then(|t| t.parse::<u32>().ok())
            .filter(|&n| n >= 1)
            .map(|n| Symbol(n - 1))
            .ok_or_else(|| Error::UnknownSymbol(text.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn parse_counts() {
        let h = parse_mmph("123,145.").unwrap();
        assert_eq!((h.k(), h.l(), h.n()), (5, 2, 3));
        let h = parse_mmph("12 3,\n14 5.\n").unwrap();
        assert_eq!((h.k(), h.l()), (5, 2));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_mmph("12,12,13."), Err(Error::DuplicateEdge { edge: 1, first: 0 })));
        assert!(matches!(parse_mmph("12,21."), Err(Error::DuplicateEdge { .. })));
        assert!(matches!(parse_mmph("112,13."), Err(Error::RepeatedVertex { .. })));
        assert!(matches!(parse_mmph("1,123."), Err(Error::EdgeTooSmall { edge: 0, size: 1 })));
        assert!(matches!(parse_mmph("12,,13."), Err(Error::EdgeTooSmall { edge: 1, size: 0 })));
        assert_eq!(parse_mmph("123,145"), Err(Error::MissingTerminator));
        assert_eq!(parse_mmph("103."), Err(Error::UnknownSymbol("0".into())));
        assert!(parse_mmph("12.13.").is_err());
    }

    #[test]
    fn batch_files() {
        let all = parse_mmph_batch("123,145.\n\n12,23,31.\n").unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[1].l(), 3);
    }

    #[test]
    fn serialize_round_trip() {
        let h = parse_mmph("123,145.").unwrap();
        assert_eq!(serialize_mmph(&h).unwrap(), "123,145.");
        let h = parse_mmph("9YA,5ZA.").unwrap();
        assert_eq!(serialize_mmph(&h).unwrap(), "9YA,5ZA.");
        assert_eq!(serialize_mmph_contiguous(&h).unwrap(), "123,453.");
    }

    #[test]
    fn seventieth_vertex_is_close_paren() {
        // a chain of 69 dyads on 70 vertices
        let edges: Vec<Vec<Symbol>> = (0..69).map(|i| vec![Symbol(i), Symbol(i + 1)]).collect();
        let h = Mmph::from_symbol_edges(&edges).unwrap();
        let text = serialize_mmph_contiguous(&h).unwrap();
        assert!(text.ends_with("()."), "{text}");
    }

    #[test]
    fn alphabet_overflow() {
        let edges: Vec<Vec<Symbol>> = (0..alphabet_len() as u32).map(|i| vec![Symbol(i), Symbol(i + 1)]).collect();
        let h = Mmph::from_symbol_edges(&edges).unwrap();
        assert!(matches!(serialize_mmph_contiguous(&h), Err(Error::AlphabetExceeded { .. })));
        assert!(matches!(serialize_mmph(&h), Err(Error::AlphabetExceeded { .. })));
    }

    #[test]
    fn coordinatization_entries() {
        let h = parse_mmph("123,1YZ.").unwrap();
        let (c, missing) = parse_coordinatization("1={0,0,1}\nY={2w,1,1}\n", &h).unwrap();
        assert_eq!(c.ring(), Ring::Eisenstein);
        assert_eq!(c.get(Symbol::from_char('1').unwrap()).unwrap().to_string(), "{0,0,1}");
        let y = c.get(Symbol::from_char('Y').unwrap()).unwrap();
        assert!(y.components()[0].is_one());
        assert_eq!(missing.len(), 3);
        assert!(matches!(
            parse_coordinatization("1={0,1}", &h),
            Err(Error::ComponentCount { expected: 3, found: 2, .. })
        ));
        assert!(matches!(parse_coordinatization("1={0,0,1} 1={0,1,0}", &h), Err(Error::DuplicateSymbol(_))));
        assert!(matches!(parse_coordinatization("1={0,x,1}", &h), Err(Error::Syntax { .. })));
        assert!(matches!(parse_coordinatization("1={0,w,1} 2={0,r2,1}", &h), Err(Error::MixedRings(..))));
        assert!(matches!(parse_coordinatization("9={0,0,1}", &h), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn combined_document() {
        let (h, c) = parse_document("12,23.\n1={1,0}\n2={0,1}\n3={1,0}\n").unwrap();
        assert_eq!(h.l(), 2);
        let c = c.unwrap();
        assert_eq!(c.len(), 3);
        let text = serialize_coordinatization(&c).unwrap();
        assert_eq!(text, "1={1,0}\n2={0,1}\n3={1,0}\n");
    }

    #[test]
    fn json_round_trip() {
        let h = parse_mmph("9YA,5ZA,12.").unwrap();
        let text = mmph_to_json(&h).to_string();
        assert_eq!(parse_mmph_json(&text).unwrap(), h);
    }
}
