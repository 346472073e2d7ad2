//! Plain-text complex format.
//!
//! One simplex per line:
//!
//! ```text
//! # comment
//! skeleton 5      full 1-skeleton on {1..5}
//! v 9             vertex
//! e 3 7           edge
//! f 1 2 3         face
//! ```
//!
//! Closure is recomputed on load, so only maximal simplexes need to be listed.
//! The writer emits faces, then edges not covered by a face, then vertices not
//! covered by an edge, each in sorted order.

use std::collections::BTreeSet;
use std::io::{self, BufRead, Write};

use crate::complex::{Complex2, Edge, Face, VertexId};
use crate::error::{Error, Result};

fn parse_label(tok: Option<&str>, line: usize) -> Result<VertexId> {
    let tok = tok.ok_or_else(|| Error::Parse {
        line,
        msg: "missing vertex label".into(),
    })?;
    let label: u32 = tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("invalid vertex label {tok:?}"),
    })?;
    VertexId::new(label).map_err(|e| Error::Parse {
        line,
        msg: e.to_string(),
    })
}

/// Parses the text format. Errors carry the 1-based line number.
pub fn parse_complex(text: &str) -> Result<Complex2> {
    let mut faces = BTreeSet::new();
    let mut edges = Vec::new();
    let mut vertices = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let kind = toks.next().unwrap();
        let at = |e: Error| Error::Parse {
            line,
            msg: e.to_string(),
        };
        match kind {
            "f" => {
                let a = parse_label(toks.next(), line)?;
                let b = parse_label(toks.next(), line)?;
                let c = parse_label(toks.next(), line)?;
                let f = Face::new(a, b, c).map_err(at)?;
                if !faces.insert(f) {
                    let [a, b, c] = f.corners();
                    return Err(at(Error::DuplicateFace(a.0, b.0, c.0)));
                }
            }
            "e" => {
                let a = parse_label(toks.next(), line)?;
                let b = parse_label(toks.next(), line)?;
                edges.push(Edge::new(a, b).map_err(at)?);
            }
            "v" => vertices.push(parse_label(toks.next(), line)?),
            "skeleton" => {
                let n = toks
                    .next()
                    .and_then(|t| t.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse {
                        line,
                        msg: "skeleton expects a vertex count".into(),
                    })?;
                let sk = Complex2::with_skeleton(n, []);
                vertices.extend(sk.vertices().iter().copied());
                edges.extend(sk.edges().iter().copied());
            }
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown record type {other:?}"),
                })
            }
        }
        if toks.next().is_some() {
            return Err(Error::Parse {
                line,
                msg: "trailing tokens".into(),
            });
        }
    }
    Ok(Complex2::closure(faces, edges, vertices))
}

pub fn read_complex<R: BufRead>(mut reader: R) -> Result<Complex2, ReadError> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    Ok(parse_complex(&text)?)
}

#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Format(#[from] Error),
}

/// Writes the minimal description of `s`.
pub fn write_complex<W: Write>(w: &mut W, s: &Complex2) -> io::Result<()> {
    write_body(w, s, &BTreeSet::new(), &BTreeSet::new())
}

/// Writes `s` with a `skeleton n` header, listing only what the header and
/// the faces do not already imply.
pub fn write_with_skeleton<W: Write>(w: &mut W, s: &Complex2, n: u32) -> io::Result<()> {
    writeln!(w, "skeleton {n}")?;
    let sk = Complex2::with_skeleton(n, []);
    write_body(w, s, sk.edges(), sk.vertices())
}

fn write_body<W: Write>(
    w: &mut W,
    s: &Complex2,
    implied_edges: &BTreeSet<Edge>,
    implied_vertices: &BTreeSet<VertexId>,
) -> io::Result<()> {
    for f in s.faces() {
        let [a, b, c] = f.corners();
        writeln!(w, "f {a} {b} {c}")?;
    }
    let mut covered_e: BTreeSet<Edge> = s.faces().iter().flat_map(|f| f.edges()).collect();
    covered_e.extend(implied_edges.iter().copied());
    for e in s.edges().difference(&covered_e) {
        let [a, b] = e.endpoints();
        writeln!(w, "e {a} {b}")?;
    }
    let mut covered_v: BTreeSet<VertexId> = s.edges().iter().flat_map(|e| e.endpoints()).collect();
    covered_v.extend(implied_vertices.iter().copied());
    for v in s.vertices().difference(&covered_v) {
        writeln!(w, "v {v}")?;
    }
    Ok(())
}

pub fn to_string(s: &Complex2) -> String {
    let mut buf = Vec::new();
    write_complex(&mut buf, s).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).unwrap()
}
