//! Line-oriented certificate text format.
//!
//! ```text
//! hwdesign-certificate 1
//! host cayley
//! moduli 3 5
//! connection (1,0) (2,0)
//! class C3
//! cycle (0,0) (1,0) (2,0)
//! profile C3=5
//! provenance rows(m=3)
//! note free text
//! end
//! ```
//!
//! Hosts: `complete` + `vertices ...`, `complete_minus_1f` + `vertices ...`
//! + `removed u v` lines, `multipartite` + one `part ...` line per part,
//! `lex_cycle m n`, `cayley` + `moduli ...` + `connection ...`.
//! Classes: `C<k>`, `mixed`, `AP<k> missing <v>`, `half<k>`, `1F` (with
//! `pair u v` lines), `holey<k> hole <i>`. Vertices are `(x,y,..)`, `inf`
//! or `"name"`. Negative coordinates are reduced when the host has moduli.
//! `#` starts a comment. The `end` line is mandatory.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{
    edge, Certificate, ClassKind, Coords, CycleSeq, FactorClass, HostGraph, Profile, ProfileKey,
    Provenance, Vertex,
};

pub const VERSION: u32 = 1;
const MAGIC: &str = "hwdesign-certificate";

pub fn serialize(cert: &Certificate) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{MAGIC} {VERSION}");
    let list = |vs: &[Vertex]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    match &cert.host {
        HostGraph::Complete { vertices } => {
            let _ = writeln!(s, "host complete\nvertices {}", list(vertices));
        }
        HostGraph::CompleteMinusOneFactor { vertices, removed } => {
            let _ = writeln!(s, "host complete_minus_1f\nvertices {}", list(vertices));
            for (a, b) in removed {
                let _ = writeln!(s, "removed {a} {b}");
            }
        }
        HostGraph::Multipartite { parts } => {
            let _ = writeln!(s, "host multipartite");
            for p in parts {
                let _ = writeln!(s, "part {}", list(p));
            }
        }
        HostGraph::LexCycle { m, n } => {
            let _ = writeln!(s, "host lex_cycle {m} {n}");
        }
        HostGraph::Cayley { moduli, connection } => {
            let ms: Vec<String> = moduli.iter().map(|m| m.to_string()).collect();
            let cs: Vec<String> = connection.iter().map(|c| format!("{c:?}")).collect();
            let _ = writeln!(s, "host cayley\nmoduli {}\nconnection {}", ms.join(" "), cs.join(" "));
        }
    }
    for c in &cert.classes {
        let head = match &c.kind {
            ClassKind::Uniform(k) => format!("C{k}"),
            ClassKind::Mixed => "mixed".into(),
            ClassKind::AlmostParallel { k, missing } => format!("AP{k} missing {missing}"),
            ClassKind::HalfParallel(k) => format!("half{k}"),
            ClassKind::OneFactor => "1F".into(),
            ClassKind::Holey { k, hole } => format!("holey{k} hole {hole}"),
        };
        let _ = writeln!(s, "class {head}");
        for cy in &c.cycles {
            let _ = writeln!(s, "cycle {}", list(cy.vertices()));
        }
        for (a, b) in &c.pairs {
            let _ = writeln!(s, "pair {a} {b}");
        }
    }
    let ps: Vec<String> = cert.profile.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let _ = writeln!(s, "profile {}", ps.join(" "));
    let _ = writeln!(s, "provenance {}", cert.provenance.render());
    for n in &cert.notes {
        let _ = writeln!(s, "note {}", n.replace('\n', " "));
    }
    s.push_str("end\n");
    s
}

struct Tok<'a> {
    text: &'a str,
    col: usize,
}

fn tokenize(line: &str, lno: usize) -> Result<Vec<Tok<'_>>> {
    let mut out = Vec::new();
    let bytes = line.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c == b'#' {
            break;
        }
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        if c == b'"' {
            i += 1;
            while i < bytes.len() && bytes[i] != b'"' {
                i += 1;
            }
            if i == bytes.len() {
                return Err(perr(lno, start + 1, "unterminated label"));
            }
            i += 1;
        } else if c == b'(' {
            while i < bytes.len() && bytes[i] != b')' {
                i += 1;
            }
            if i == bytes.len() {
                return Err(perr(lno, start + 1, "unterminated coordinate tuple"));
            }
            i += 1;
        } else {
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() && bytes[i] != b'#' {
                i += 1;
            }
        }
        out.push(Tok {
            text: &line[start..i],
            col: start + 1,
        });
    }
    Ok(out)
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

struct Ctx {
    moduli: Option<Vec<u32>>,
}

impl Ctx {
    fn vertex(&self, t: &Tok, lno: usize) -> Result<Vertex> {
        let s = t.text;
        if s == "inf" {
            return Ok(Vertex::Infinity);
        }
        if let Some(inner) = s.strip_prefix('"').and_then(|r| r.strip_suffix('"')) {
            return Ok(Vertex::label(inner));
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| perr(lno, t.col, format!("bad vertex {s:?}")))?;
        let vals: Vec<i64> = inner
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| perr(lno, t.col, format!("bad coordinates {s:?}")))?;
        if vals.is_empty() || vals.len() > 3 {
            return Err(perr(lno, t.col, format!("1 to 3 coordinates expected in {s:?}")));
        }
        match &self.moduli {
            Some(m) => {
                if m.len() != vals.len() {
                    return Err(perr(lno, t.col, format!("{s} does not live in Z{m:?}")));
                }
                Ok(Vertex::Residue(Coords::reduced(&vals, m)))
            }
            None => {
                if vals.iter().any(|&v| v < 0 || v > u32::MAX as i64) {
                    return Err(perr(
                        lno,
                        t.col,
                        "negative coordinates need a host with moduli",
                    ));
                }
                let u: Vec<u32> = vals.iter().map(|&v| v as u32).collect();
                Ok(Vertex::res(&u))
            }
        }
    }

    fn coords(&self, t: &Tok, lno: usize) -> Result<Coords> {
        match self.vertex(t, lno)? {
            Vertex::Residue(c) => Ok(c),
            _ => Err(perr(lno, t.col, "group element expected")),
        }
    }
}

fn number<T: std::str::FromStr>(t: &Tok, lno: usize) -> Result<T> {
    t.text
        .parse()
        .map_err(|_| perr(lno, t.col, format!("number expected, found {:?}", t.text)))
}

fn suffix_num(s: &str, prefix: &str) -> Option<usize> {
    s.strip_prefix(prefix)?.parse().ok()
}

pub fn parse(text: &str) -> Result<Certificate> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });
    let (lno, first) = lines.next().ok_or_else(|| perr(1, 1, "empty certificate"))?;
    let toks = tokenize(first, lno)?;
    if toks.len() != 2 || toks[0].text != MAGIC {
        return Err(perr(lno, 1, format!("expected `{MAGIC} {VERSION}`")));
    }
    let v: u32 = number(&toks[1], lno)?;
    if v != VERSION {
        return Err(perr(lno, toks[1].col, format!("unsupported version {v}")));
    }

    let mut ctx = Ctx { moduli: None };
    let mut host_kind: Option<String> = None;
    let mut vertices: Option<Vec<Vertex>> = None;
    let mut removed = Vec::new();
    let mut parts = Vec::new();
    let mut lex: Option<(u32, u32)> = None;
    let mut connection: Option<Vec<Coords>> = None;
    let mut host: Option<HostGraph> = None;
    let mut classes: Vec<FactorClass> = Vec::new();
    let mut profile: Option<Profile> = None;
    let mut provenance: Option<Provenance> = None;
    let mut notes = Vec::new();
    let mut ended = false;

    for (lno, line) in lines {
        if ended {
            return Err(perr(lno, 1, "content after `end`"));
        }
        let toks = tokenize(line, lno)?;
        if toks.is_empty() {
            continue;
        }
        let key = toks[0].text;
        let rest = &toks[1..];
        let in_host = host_kind.is_some() && host.is_none();
        match key {
            "host" => {
                if host_kind.is_some() {
                    return Err(perr(lno, 1, "second host line"));
                }
                let kind = rest.first().ok_or_else(|| perr(lno, 6, "host kind expected"))?;
                match kind.text {
                    "complete" | "complete_minus_1f" | "multipartite" | "cayley" => {
                        if rest.len() != 1 {
                            return Err(perr(lno, rest[1].col, "unexpected token"));
                        }
                    }
                    "lex_cycle" => {
                        if rest.len() != 3 {
                            return Err(perr(lno, kind.col, "lex_cycle needs m and n"));
                        }
                        let m: u32 = number(&rest[1], lno)?;
                        let n: u32 = number(&rest[2], lno)?;
                        lex = Some((m, n));
                        ctx.moduli = Some(vec![m, n]);
                    }
                    other => return Err(perr(lno, kind.col, format!("unknown host kind {other:?}"))),
                }
                host_kind = Some(kind.text.to_string());
                if kind.text == "lex_cycle" {
                    let (m, n) = lex.unwrap();
                    host = Some(HostGraph::LexCycle { m, n });
                }
            }
            "vertices" if in_host && matches!(host_kind.as_deref(), Some("complete" | "complete_minus_1f")) => {
                if vertices.is_some() {
                    return Err(perr(lno, 1, "second vertices line"));
                }
                vertices = Some(rest.iter().map(|t| ctx.vertex(t, lno)).collect::<Result<_>>()?);
            }
            "removed" if in_host && host_kind.as_deref() == Some("complete_minus_1f") => {
                if rest.len() != 2 {
                    return Err(perr(lno, 1, "removed takes two vertices"));
                }
                removed.push(edge(&ctx.vertex(&rest[0], lno)?, &ctx.vertex(&rest[1], lno)?));
            }
            "part" if in_host && host_kind.as_deref() == Some("multipartite") => {
                parts.push(rest.iter().map(|t| ctx.vertex(t, lno)).collect::<Result<Vec<_>>>()?);
            }
            "moduli" if in_host && host_kind.as_deref() == Some("cayley") => {
                if ctx.moduli.is_some() {
                    return Err(perr(lno, 1, "second moduli line"));
                }
                let m: Vec<u32> = rest.iter().map(|t| number(t, lno)).collect::<Result<_>>()?;
                if m.is_empty() || m.len() > 3 || m.contains(&0) {
                    return Err(perr(lno, 1, "1 to 3 positive moduli expected"));
                }
                ctx.moduli = Some(m);
            }
            "connection" if in_host && host_kind.as_deref() == Some("cayley") => {
                if ctx.moduli.is_none() {
                    return Err(perr(lno, 1, "connection before moduli"));
                }
                connection = Some(rest.iter().map(|t| ctx.coords(t, lno)).collect::<Result<_>>()?);
            }
            "class" => {
                if host.is_none() {
                    host = Some(close_host(
                        lno,
                        host_kind.as_deref(),
                        &mut vertices,
                        &mut removed,
                        &mut parts,
                        &ctx,
                        &mut connection,
                    )?);
                }
                if profile.is_some() {
                    return Err(perr(lno, 1, "class after profile"));
                }
                let kt = rest.first().ok_or_else(|| perr(lno, 7, "class kind expected"))?;
                let t = kt.text;
                let kind = if t == "mixed" && rest.len() == 1 {
                    ClassKind::Mixed
                } else if t == "1F" && rest.len() == 1 {
                    ClassKind::OneFactor
                } else if let (Some(k), 1) = (suffix_num(t, "half"), rest.len()) {
                    ClassKind::HalfParallel(k)
                } else if let Some(k) = suffix_num(t, "AP") {
                    if rest.len() != 3 || rest[1].text != "missing" {
                        return Err(perr(lno, kt.col, "expected `AP<k> missing <vertex>`"));
                    }
                    ClassKind::AlmostParallel {
                        k,
                        missing: ctx.vertex(&rest[2], lno)?,
                    }
                } else if let Some(k) = suffix_num(t, "holey") {
                    if rest.len() != 3 || rest[1].text != "hole" {
                        return Err(perr(lno, kt.col, "expected `holey<k> hole <index>`"));
                    }
                    ClassKind::Holey {
                        k,
                        hole: number(&rest[2], lno)?,
                    }
                } else if let (Some(k), 1) = (suffix_num(t, "C"), rest.len()) {
                    ClassKind::Uniform(k)
                } else {
                    return Err(perr(lno, kt.col, format!("unknown class kind {t:?}")));
                };
                classes.push(FactorClass::new(kind, Vec::new()));
            }
            "cycle" => {
                let c = classes
                    .last_mut()
                    .filter(|_| profile.is_none())
                    .ok_or_else(|| perr(lno, 1, "cycle outside a class"))?;
                let vs = rest.iter().map(|t| ctx.vertex(t, lno)).collect::<Result<Vec<_>>>()?;
                let cy = CycleSeq::new(vs).map_err(|e| perr(lno, 7, e.to_string()))?;
                c.cycles.push(cy);
            }
            "pair" => {
                let c = classes
                    .last_mut()
                    .filter(|c| c.kind == ClassKind::OneFactor && profile.is_none())
                    .ok_or_else(|| perr(lno, 1, "pair outside a 1F class"))?;
                if rest.len() != 2 {
                    return Err(perr(lno, 1, "pair takes two vertices"));
                }
                c.pairs.push(edge(&ctx.vertex(&rest[0], lno)?, &ctx.vertex(&rest[1], lno)?));
            }
            "profile" => {
                if host.is_none() {
                    host = Some(close_host(
                        lno,
                        host_kind.as_deref(),
                        &mut vertices,
                        &mut removed,
                        &mut parts,
                        &ctx,
                        &mut connection,
                    )?);
                }
                if profile.is_some() {
                    return Err(perr(lno, 1, "second profile line"));
                }
                let mut map = BTreeMap::new();
                for t in rest {
                    let (k, v) = t
                        .text
                        .split_once('=')
                        .ok_or_else(|| perr(lno, t.col, "expected key=count"))?;
                    let key: ProfileKey = k.parse().map_err(|_| perr(lno, t.col, format!("bad profile key {k:?}")))?;
                    let n: usize = v.parse().map_err(|_| perr(lno, t.col, "bad count"))?;
                    if map.insert(key, n).is_some() {
                        return Err(perr(lno, t.col, "repeated profile key"));
                    }
                }
                profile = Some(Profile(map));
            }
            "provenance" => {
                if profile.is_none() || provenance.is_some() {
                    return Err(perr(lno, 1, "provenance must follow the profile, once"));
                }
                let raw = line.trim_start()["provenance".len()..].trim();
                provenance = Some(parse_provenance(raw).map_err(|m| perr(lno, 12, m))?);
            }
            "note" => {
                if provenance.is_none() {
                    return Err(perr(lno, 1, "note before provenance"));
                }
                notes.push(line.trim_start()["note".len()..].trim().to_string());
            }
            "end" => {
                if !rest.is_empty() {
                    return Err(perr(lno, rest[0].col, "unexpected token"));
                }
                ended = true;
            }
            other => return Err(perr(lno, toks[0].col, format!("unknown field {other:?}"))),
        }
    }
    let last = text.lines().count().max(1);
    if !ended {
        return Err(perr(last, 1, "missing `end` line (truncated file?)"));
    }
    let host = host.ok_or_else(|| perr(last, 1, "no classes"))?;
    let profile = profile.ok_or_else(|| perr(last, 1, "missing profile"))?;
    let provenance = provenance.ok_or_else(|| perr(last, 1, "missing provenance"))?;
    Ok(Certificate {
        host,
        classes,
        profile,
        provenance,
        notes,
    })
}

#[allow(clippy::too_many_arguments)]
fn close_host(
    lno: usize,
    kind: Option<&str>,
    vertices: &mut Option<Vec<Vertex>>,
    removed: &mut Vec<(Vertex, Vertex)>,
    parts: &mut Vec<Vec<Vertex>>,
    ctx: &Ctx,
    connection: &mut Option<Vec<Coords>>,
) -> Result<HostGraph> {
    let missing = |what: &str| perr(lno, 1, format!("host is missing its {what}"));
    Ok(match kind {
        None => return Err(perr(lno, 1, "no host line")),
        Some("complete") => HostGraph::Complete {
            vertices: vertices.take().ok_or_else(|| missing("vertices"))?,
        },
        Some("complete_minus_1f") => HostGraph::CompleteMinusOneFactor {
            vertices: vertices.take().ok_or_else(|| missing("vertices"))?,
            removed: std::mem::take(removed),
        },
        Some("multipartite") => {
            if parts.is_empty() {
                return Err(missing("parts"));
            }
            HostGraph::Multipartite {
                parts: std::mem::take(parts),
            }
        }
        Some("cayley") => HostGraph::Cayley {
            moduli: ctx.moduli.clone().ok_or_else(|| missing("moduli"))?,
            connection: connection.take().ok_or_else(|| missing("connection"))?,
        },
        Some(other) => return Err(perr(lno, 1, format!("host {other} takes no body"))),
    })
}

/// Parses the `name(k=v,...)[child;child]` rendering.
pub fn parse_provenance(s: &str) -> std::result::Result<Provenance, String> {
    let (p, rest) = prov(s)?;
    if !rest.trim().is_empty() {
        return Err(format!("trailing provenance text {rest:?}"));
    }
    Ok(p)
}

fn prov(s: &str) -> std::result::Result<(Provenance, &str), String> {
    let end = s.find(['(', '[', ';', ']']).unwrap_or(s.len());
    let name = s[..end].trim();
    if name.is_empty() {
        return Err("empty construction name".into());
    }
    let mut p = Provenance::new(name);
    let mut rest = &s[end..];
    if let Some(r) = rest.strip_prefix('(') {
        let close = r.find(')').ok_or("unterminated parameter list")?;
        for kv in r[..close].split(',').filter(|x| !x.is_empty()) {
            let (k, v) = kv.split_once('=').ok_or_else(|| format!("bad parameter {kv:?}"))?;
            p = p.param(k, v);
        }
        rest = &r[close + 1..];
    }
    if let Some(mut r) = rest.strip_prefix('[') {
        loop {
            let (child, after) = prov(r)?;
            p = p.ingredient(child);
            if let Some(a) = after.strip_prefix(';') {
                r = a;
            } else if let Some(a) = after.strip_prefix(']') {
                rest = a;
                break;
            } else {
                return Err("unterminated ingredient list".into());
            }
        }
    }
    Ok((p, rest))
}

pub fn read_file(path: &std::path::Path) -> Result<Certificate> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn write_file(path: &std::path::Path, cert: &Certificate) -> Result<()> {
    std::fs::write(path, serialize(cert))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::check_certificate;

    fn triangle() -> Certificate {
        let v: Vec<Vertex> = (0..3).map(|i| Vertex::res(&[i])).collect();
        Certificate::new(
            HostGraph::complete(v.clone()),
            vec![FactorClass::new(ClassKind::Uniform(3), vec![CycleSeq::new(v).unwrap()])],
            Provenance::new("by_hand").param("v", 3).ingredient(Provenance::new("none")),
        )
        .note("a note")
    }

    #[test]
    fn round_trip() {
        let c = triangle();
        let text = serialize(&c);
        let back = parse(&text).unwrap();
        assert_eq!(back, c);
        assert!(check_certificate(&back).is_valid());
    }

    #[test]
    fn negative_coordinates_reduce() {
        let text = "hwdesign-certificate 1\nhost cayley\nmoduli 5\nconnection (1) (-1)\n\
                    class C5\ncycle (0) (1) (2) (3) (-1)\nprofile C5=1\nprovenance x\nend\n";
        let c = parse(text).unwrap();
        assert_eq!(c.classes[0].cycles[0].vertices()[4], Vertex::res(&[4]));
        assert!(check_certificate(&c).is_valid());
    }

    #[test]
    fn rejects() {
        let good = serialize(&triangle());
        let truncated = &good[..good.len() - 4];
        assert!(matches!(parse(truncated), Err(Error::Parse { .. })));
        let unknown = good.replace("profile", "colour red\nprofile");
        match parse(&unknown) {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (6, 1)),
            other => panic!("{other:?}"),
        }
        assert!(parse(&good.replace("certificate 1", "certificate 2")).is_err());
        assert!(parse(&good.replacen("hwdesign-certificate 1\n", "", 1)).is_err());
    }
}
