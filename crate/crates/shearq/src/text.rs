//! Canonical text form and parsers.
//!
//! A QLaurent renders as terms `[c] q^{a/4} w^{b} exp((n1*G1 + n2*G2)/2)`
//! joined by ` + `, terms sorted canonically. Printing then re-parsing is the
//! identity; the round trip is part of the test suite.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};

use num_traits::One;

use crate::basis::{GeneratorBasis, GeneratorKind, OmegaKind, OmegaSymbol, Orientation};
use crate::holonomy::{LoopDirection, PathToken, PathWord};
use crate::qtorus::{Coefficient, ExponentVector, OmegaMono, QLaurent, Scalar};
use crate::surface::{Edge, EdgeKind, EndPoint, FatGraph, SurfaceCounts, Vertex, VertexKind};

pub fn render(value: &QLaurent) -> String {
    if value.is_zero() {
        return "[0]".to_string();
    }
    let basis = value.basis();
    let mut parts: Vec<String> = Vec::new();
    for (exp, coeff) in value.terms() {
        for (qpow, omega, scalar) in coeff.iter() {
            let mut s = String::new();
            if scalar.denom().is_one() {
                s.push_str(&format!("[{}]", scalar.numer()));
            } else {
                s.push_str(&format!("[{}/{}]", scalar.numer(), scalar.denom()));
            }
            if qpow != 0 {
                s.push_str(&format!(" q^{{{qpow}/4}}"));
            }
            for (w, e) in omega.iter() {
                let name = &basis.omega(w).name;
                if e == 1 {
                    s.push_str(&format!(" {name}"));
                } else {
                    s.push_str(&format!(" {name}^{{{e}}}"));
                }
            }
            if !exp.is_zero() {
                let inner: Vec<String> = exp
                    .iter()
                    .map(|(g, n)| format!("{}*{}", n, basis.name(g)))
                    .collect();
                s.push_str(&format!(" exp(({})/2)", inner.join(" + ")));
            }
            parts.push(s);
        }
    }
    parts.join(" + ")
}

/// One rendered term per line (the machine readable `--format=lines` output).
pub fn render_lines(value: &QLaurent) -> String {
    if value.is_zero() {
        return "[0]".to_string();
    }
    render(value).replace(" + [", "\n[")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub offset: usize,
}

impl core::fmt::Display for ParseError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

fn err<T>(message: &str, offset: usize) -> Result<T, ParseError> {
    Err(ParseError {
        message: message.to_string(),
        offset,
    })
}

/// Parse the canonical text form back into a QLaurent over `basis`.
pub fn parse_qlaurent(input: &str, basis: &Arc<GeneratorBasis>) -> Result<QLaurent, ParseError> {
    let mut out = QLaurent::zero(basis.clone());
    // terms start with their [coefficient] bracket; " + " inside exp(...) is
    // never followed by '[', so term boundaries are exactly " + ["
    let pieces: Vec<String> = input
        .split(" + [")
        .enumerate()
        .map(|(i, p)| {
            if i == 0 {
                p.to_string()
            } else {
                format!("[{p}")
            }
        })
        .collect();
    for raw_term in pieces {
        let term = raw_term.trim();
        if term.is_empty() {
            continue;
        }
        let mut exp = ExponentVector::zero();
        let mut qpow = 0i32;
        let mut omega = OmegaMono::one();
        let Some(rest) = term.strip_prefix('[') else {
            return err("term must start with [coefficient]", 0);
        };
        let Some(close) = rest.find(']') else {
            return err("unterminated coefficient bracket", 0);
        };
        let coeff_str = &rest[..close];
        let scalar = parse_scalar(coeff_str)?;
        let mut tail = rest[close + 1..].trim();
        while !tail.is_empty() {
            if let Some(qrest) = tail.strip_prefix("q^{") {
                let Some(end) = qrest.find('}') else {
                    return err("unterminated q power", 0);
                };
                let body = &qrest[..end];
                let Some(num) = body.strip_suffix("/4") else {
                    return err("q power must be quarter units", 0);
                };
                qpow = num
                    .parse::<i32>()
                    .map_err(|_| ParseError {
                        message: format!("bad q power {num}"),
                        offset: 0,
                    })?;
                tail = qrest[end + 1..].trim();
            } else if let Some(erest) = tail.strip_prefix("exp((") {
                let Some(end) = erest.find(")/2)") else {
                    return err("unterminated exp part", 0);
                };
                for piece in erest[..end].split(" + ") {
                    let piece = piece.trim();
                    let Some((n, g)) = piece.split_once('*') else {
                        return err("exp entry must be n*Gen", 0);
                    };
                    let n: i32 = n.parse().map_err(|_| ParseError {
                        message: format!("bad exponent {n}"),
                        offset: 0,
                    })?;
                    let Some(id) = basis.lookup(g) else {
                        return err(&format!("unknown generator {g}"), 0);
                    };
                    exp.set(id, exp.get(id) + n);
                }
                tail = erest[end + 4..].trim();
            } else {
                // omega symbol, optionally with ^{e}
                let word_end = tail.find(' ').unwrap_or(tail.len());
                let word = &tail[..word_end];
                let (name, e) = match word.split_once("^{") {
                    Some((n, rest)) => {
                        let Some(num) = rest.strip_suffix('}') else {
                            return err("unterminated omega power", 0);
                        };
                        (
                            n,
                            num.parse::<u32>().map_err(|_| ParseError {
                                message: format!("bad omega power {num}"),
                                offset: 0,
                            })?,
                        )
                    }
                    None => (word, 1),
                };
                let Some(w) = basis.lookup_omega(name) else {
                    return err(&format!("unknown omega symbol {name}"), 0);
                };
                omega = omega.mul(&OmegaMono::single(w, e));
                tail = tail[word_end..].trim();
            }
        }
        let add = QLaurent::monomial(basis.clone(), exp, Coefficient::term(qpow, omega, scalar));
        out = out.add(&add).expect("same basis");
    }
    Ok(out)
}

fn parse_scalar(s: &str) -> Result<Scalar, ParseError> {
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| ParseError {
            message: format!("bad numerator {n}"),
            offset: 0,
        })?;
        let d: i64 = d.trim().parse().map_err(|_| ParseError {
            message: format!("bad denominator {d}"),
            offset: 0,
        })?;
        Ok(Scalar::new(n, d))
    } else {
        let n: i64 = s.trim().parse().map_err(|_| ParseError {
            message: format!("bad coefficient {s}"),
            offset: 0,
        })?;
        Ok(Scalar::from_integer(n))
    }
}

/// Parse a path word: whitespace separated `X(name)`, `L`, `R`, `F(name,k)`,
/// `Finv(name,k)`, `K`. Tokens are matrix factors leftmost-first.
pub fn parse_word(input: &str, basis: &Arc<GeneratorBasis>) -> Result<PathWord, ParseError> {
    let mut tokens = Vec::new();
    for tok in input.split_whitespace() {
        if tok == "L" {
            tokens.push(PathToken::TurnL);
        } else if tok == "R" {
            tokens.push(PathToken::TurnR);
        } else if tok == "K" {
            tokens.push(PathToken::CuspK);
        } else if let Some(rest) = tok.strip_prefix("X(") {
            let Some(name) = rest.strip_suffix(')') else {
                return err("unterminated X(...)", 0);
            };
            let Some(g) = basis.lookup(name) else {
                return err(&format!("unknown generator {name}"), 0);
            };
            tokens.push(PathToken::Edge(g));
        } else if let Some(rest) = tok.strip_prefix("Finv(").or_else(|| tok.strip_prefix("F(")) {
            let ccw = tok.starts_with("Finv(");
            let Some(body) = rest.strip_suffix(')') else {
                return err("unterminated loop token", 0);
            };
            let Some((name, k)) = body.split_once(',') else {
                return err("loop token needs (name,k)", 0);
            };
            let Some(w) = basis.lookup_omega(name.trim()) else {
                return err(&format!("unknown omega symbol {name}"), 0);
            };
            let k: i32 = k.trim().parse().map_err(|_| ParseError {
                message: format!("bad loop power {k}"),
                offset: 0,
            })?;
            tokens.push(PathToken::Loop {
                omega: w,
                power: k,
                direction: if ccw {
                    LoopDirection::CounterClockwise
                } else {
                    LoopDirection::Clockwise
                },
            });
        } else {
            return err(&format!("unknown token {tok}"), 0);
        }
    }
    Ok(PathWord::new(tokens))
}

pub fn render_word(word: &PathWord, basis: &Arc<GeneratorBasis>) -> String {
    let mut parts = Vec::new();
    for t in word.tokens() {
        parts.push(match t {
            PathToken::Edge(g) => format!("X({})", basis.name(*g)),
            PathToken::TurnL => "L".to_string(),
            PathToken::TurnR => "R".to_string(),
            PathToken::CuspK => "K".to_string(),
            PathToken::Loop {
                omega,
                power,
                direction,
            } => {
                let name = &basis.omega(*omega).name;
                match direction {
                    LoopDirection::Clockwise => format!("F({name},{power})"),
                    LoopDirection::CounterClockwise => format!("Finv({name},{power})"),
                }
            }
        });
    }
    parts.join(" ")
}

/// Parse a surface description file.
///
/// ```text
/// surface g=1 s_h=1 s_o=0 n=1
/// orientation mirrored          # optional, default standard
/// vertex v1 trivalent
/// vertex c1 cusp
/// edge Z1 inner  v1.0 v2.1      # vertex.slot, slots 0..2 clockwise
/// edge P1 open   v3.2 c1
/// edge W1 loop   v2 omega=hole  # or omega=orbifold p=3
/// ```
///
/// Loop edges take the two free slots of their vertex in ascending order.
pub fn parse_surface(input: &str) -> Result<FatGraph, ParseError> {
    let mut counts: Option<SurfaceCounts> = None;
    let mut orientation = Orientation::Standard;
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut pending_edges: Vec<(String, EdgeKind, Vec<String>, Option<(OmegaKind, String)>)> =
        Vec::new();
    let mut name = "surface".to_string();

    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        match words.next().unwrap() {
            "surface" => {
                let mut g = None;
                let mut s_h = None;
                let mut s_o = None;
                let mut n = None;
                for kv in words {
                    let Some((k, v)) = kv.split_once('=') else {
                        return err(&format!("line {}: bad key=value {kv}", lineno + 1), 0);
                    };
                    let v: u32 = v.parse().map_err(|_| ParseError {
                        message: format!("line {}: bad number {v}", lineno + 1),
                        offset: 0,
                    })?;
                    match k {
                        "g" => g = Some(v),
                        "s_h" => s_h = Some(v),
                        "s_o" => s_o = Some(v),
                        "n" => n = Some(v),
                        _ => return err(&format!("line {}: unknown key {k}", lineno + 1), 0),
                    }
                }
                counts = Some(SurfaceCounts {
                    genus: g.unwrap_or(0),
                    holes: s_h.unwrap_or(0),
                    orbifold_points: s_o.unwrap_or(0),
                    cusps: n.unwrap_or(0),
                });
            }
            "name" => {
                if let Some(w) = words.next() {
                    name = w.to_string();
                }
            }
            "orientation" => {
                orientation = match words.next() {
                    Some("standard") => Orientation::Standard,
                    Some("mirrored") => Orientation::Mirrored,
                    other => {
                        return err(
                            &format!("line {}: bad orientation {:?}", lineno + 1, other),
                            0,
                        )
                    }
                };
            }
            "vertex" => {
                let Some(vname) = words.next() else {
                    return err(&format!("line {}: vertex needs a name", lineno + 1), 0);
                };
                let kind = match words.next() {
                    Some("trivalent") => VertexKind::Trivalent,
                    Some("cusp") => VertexKind::Cusp,
                    other => {
                        return err(
                            &format!("line {}: bad vertex kind {:?}", lineno + 1, other),
                            0,
                        )
                    }
                };
                vertices.push(Vertex {
                    name: vname.to_string(),
                    kind,
                    slots: Vec::new(),
                });
            }
            "edge" => {
                let Some(ename) = words.next() else {
                    return err(&format!("line {}: edge needs a name", lineno + 1), 0);
                };
                let kind = match words.next() {
                    Some("inner") => EdgeKind::Inner,
                    Some("open") => EdgeKind::Open,
                    Some("loop") => EdgeKind::Loop,
                    other => {
                        return err(
                            &format!("line {}: bad edge kind {:?}", lineno + 1, other),
                            0,
                        )
                    }
                };
                let rest: Vec<String> = words.map(|w| w.to_string()).collect();
                let mut ends = Vec::new();
                let mut omega = None;
                let mut it = rest.into_iter();
                match kind {
                    EdgeKind::Loop => {
                        let Some(v) = it.next() else {
                            return err(&format!("line {}: loop needs a vertex", lineno + 1), 0);
                        };
                        ends.push(v);
                        let mut kind_str = None;
                        let mut p = None;
                        for kv in it {
                            if let Some(v) = kv.strip_prefix("omega=") {
                                kind_str = Some(v.to_string());
                            } else if let Some(v) = kv.strip_prefix("p=") {
                                p = Some(v.parse::<u32>().map_err(|_| ParseError {
                                    message: format!("line {}: bad order {v}", lineno + 1),
                                    offset: 0,
                                })?);
                            }
                        }
                        let wkind = match kind_str.as_deref() {
                            Some("hole") => OmegaKind::HolePerimeter,
                            Some("orbifold") => {
                                let Some(p) = p else {
                                    return err(
                                        &format!("line {}: orbifold loop needs p=", lineno + 1),
                                        0,
                                    );
                                };
                                if p < 2 {
                                    return err(
                                        &format!("line {}: orbifold order must be >= 2", lineno + 1),
                                        0,
                                    );
                                }
                                OmegaKind::Orbifold { order: p }
                            }
                            _ => {
                                return err(
                                    &format!("line {}: loop needs omega=hole|orbifold", lineno + 1),
                                    0,
                                )
                            }
                        };
                        omega = Some((wkind, ename.to_string()));
                    }
                    _ => {
                        for v in it {
                            ends.push(v);
                        }
                    }
                }
                pending_edges.push((ename.to_string(), kind, ends, omega));
            }
            other => return err(&format!("line {}: unknown directive {other}", lineno + 1), 0),
        }
    }

    let Some(counts) = counts else {
        return err("missing surface header line", 0);
    };

    // allocate slot arrays
    for v in vertices.iter_mut() {
        let n = if v.kind == VertexKind::Trivalent { 3 } else { 1 };
        v.slots = vec![(usize::MAX, usize::MAX); n];
    }
    let vidx = |vs: &Vec<Vertex>, name: &str| -> Option<usize> {
        vs.iter().position(|v| v.name == name)
    };
    let mut edges: Vec<Edge> = Vec::new();
    let mut omegas: Vec<OmegaSymbol> = Vec::new();
    for (ename, kind, ends, omega) in pending_edges {
        let eidx = edges.len();
        let mut endpoints: Vec<EndPoint> = Vec::new();
        match kind {
            EdgeKind::Loop => {
                let Some(vi) = vidx(&vertices, &ends[0]) else {
                    return err(&format!("loop {ename}: unknown vertex {}", ends[0]), 0);
                };
                // take the two free slots in ascending order
                let free: Vec<usize> = (0..vertices[vi].slots.len())
                    .filter(|&s| vertices[vi].slots[s].0 == usize::MAX)
                    .collect();
                if free.len() < 2 {
                    return err(&format!("loop {ename}: vertex {} lacks two free slots", ends[0]), 0);
                }
                endpoints.push(EndPoint {
                    vertex: vi,
                    slot: free[0],
                });
                endpoints.push(EndPoint {
                    vertex: vi,
                    slot: free[1],
                });
                vertices[vi].slots[free[0]] = (eidx, 0);
                vertices[vi].slots[free[1]] = (eidx, 1);
                let (wkind, wname) = omega.unwrap();
                omegas.push(OmegaSymbol {
                    name: wname,
                    kind: wkind,
                });
            }
            _ => {
                if ends.len() != 2 {
                    return err(&format!("edge {ename}: needs two endpoints"), 0);
                }
                for (which, spec) in ends.iter().enumerate() {
                    if let Some((vn, slot)) = spec.split_once('.') {
                        let Some(vi) = vidx(&vertices, vn) else {
                            return err(&format!("edge {ename}: unknown vertex {vn}"), 0);
                        };
                        let slot: usize = slot.parse().map_err(|_| ParseError {
                            message: format!("edge {ename}: bad slot {slot}"),
                            offset: 0,
                        })?;
                        if slot >= vertices[vi].slots.len() {
                            return err(&format!("edge {ename}: slot {slot} out of range"), 0);
                        }
                        if vertices[vi].slots[slot].0 != usize::MAX {
                            return err(&format!("edge {ename}: slot {vn}.{slot} already used"), 0);
                        }
                        vertices[vi].slots[slot] = (eidx, which);
                        endpoints.push(EndPoint { vertex: vi, slot });
                    } else {
                        // bare cusp vertex: single slot 0
                        let Some(vi) = vidx(&vertices, spec) else {
                            return err(&format!("edge {ename}: unknown vertex {spec}"), 0);
                        };
                        if vertices[vi].kind != VertexKind::Cusp {
                            return err(
                                &format!("edge {ename}: {spec} needs an explicit slot"),
                                0,
                            );
                        }
                        if vertices[vi].slots[0].0 != usize::MAX {
                            return err(&format!("edge {ename}: cusp {spec} already used"), 0);
                        }
                        vertices[vi].slots[0] = (eidx, which);
                        endpoints.push(EndPoint {
                            vertex: vi,
                            slot: 0,
                        });
                    }
                }
            }
        }
        let omega_id = if kind == EdgeKind::Loop {
            Some(crate::basis::OmegaId((omegas.len() - 1) as u32))
        } else {
            None
        };
        edges.push(Edge {
            name: ename,
            kind,
            ends: [endpoints[0], endpoints[1]],
            omega: omega_id,
        });
    }
    for v in &vertices {
        for (si, &(e, _)) in v.slots.iter().enumerate() {
            if e == usize::MAX {
                return err(&format!("vertex {}: slot {si} left dangling", v.name), 0);
            }
        }
    }
    Ok(FatGraph {
        name,
        counts,
        orientation,
        vertices,
        edges,
        omegas,
    })
}

/// Render a graph back into the file format.
pub fn render_surface(graph: &FatGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "surface g={} s_h={} s_o={} n={}\n",
        graph.counts.genus, graph.counts.holes, graph.counts.orbifold_points, graph.counts.cusps
    ));
    out.push_str(&format!("name {}\n", graph.name));
    if graph.orientation == Orientation::Mirrored {
        out.push_str("orientation mirrored\n");
    }
    for v in &graph.vertices {
        let kind = match v.kind {
            VertexKind::Trivalent => "trivalent",
            VertexKind::Cusp => "cusp",
        };
        out.push_str(&format!("vertex {} {}\n", v.name, kind));
    }
    for e in &graph.edges {
        match e.kind {
            EdgeKind::Loop => {
                let w = &graph.omegas[e.omega.unwrap().0 as usize];
                let spec = match w.kind {
                    OmegaKind::HolePerimeter => "omega=hole".to_string(),
                    OmegaKind::Orbifold { order } => format!("omega=orbifold p={order}"),
                };
                out.push_str(&format!(
                    "edge {} loop {} {}\n",
                    e.name, graph.vertices[e.ends[0].vertex].name, spec
                ));
            }
            _ => {
                let kind = if e.kind == EdgeKind::Inner { "inner" } else { "open" };
                let end_str = |ep: &EndPoint| {
                    let v = &graph.vertices[ep.vertex];
                    if v.kind == VertexKind::Cusp {
                        v.name.clone()
                    } else {
                        format!("{}.{}", v.name, ep.slot)
                    }
                };
                out.push_str(&format!(
                    "edge {} {} {} {}\n",
                    e.name,
                    kind,
                    end_str(&e.ends[0]),
                    end_str(&e.ends[1])
                ));
            }
        }
    }
    out
}

/// Resolve the GeneratorKind of a name for error messages.
pub fn kind_name(k: GeneratorKind) -> &'static str {
    match k {
        GeneratorKind::InnerShear => "inner",
        GeneratorKind::CuspShear => "cusp",
        GeneratorKind::ArcLength => "arc",
    }
}
