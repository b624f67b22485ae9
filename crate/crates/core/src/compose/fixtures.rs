//! Explicit small designs, stored as the base cycles they are developed
//! from, written in `x_i` notation (`a`, `b`, `c` are fixed points).

use crate::arcs::release;
use crate::cayley::{construction_2l, difference_factorization, DiffRequest};
use crate::error::{Error, Result};
use crate::model::{
    develop, develop_cycles, ClassKind, CycleSeq, DevelopmentRule, FactorClass, HostGraph,
    Provenance, Vertex,
};

pub const NAMES: [&str; 7] = ["L4.1", "L4.2", "L4.3", "L4.5", "L4.6", "L4.7", "L3.11"];

pub const C33_P: [&str; 11] = [
    "(a, 0_0, 4_4)",
    "(b, 2_3, 1_0)",
    "(c, 2_4, 3_1)",
    "(1_1, 3_3, 5_0)",
    "(2_2, 4_0, 0_2)",
    "(0_1, 5_2, 1_4)",
    "(1_2, 2_1, 3_2)",
    "(3_4, 2_0, 4_2)",
    "(5_1, 0_3, 4_3)",
    "(1_3, 0_4, 5_4)",
    "(3_0, 4_1, 5_3)",
];
pub const C33_Q: [&str; 3] = [
    "(a, 1_1, 5_1, 3_0, 1_4, 0_4, 4_1, 2_2, 3_2, 1_3, 3_1)",
    "(b, 5_0, 0_1, 1_2, 2_3, 4_3, 0_2, 2_4, 0_3, 2_1, 4_2)",
    "(c, 0_0, 5_2, 1_0, 2_0, 3_3, 4_0, 5_4, 4_4, 3_4, 5_3)",
];
pub const C33_LAST: [&str; 2] = ["(0_0, 1_2, 2_4)", "(3_3, 4_2, 5_3)"];

pub const C39_F: &str = "(0_0, 4_1, 7_2)";
pub const C39_Q: [&str; 5] = [
    "(0_0, 5_2, 10_1, 2_2, 7_1, 12_0, 4_1, 9_0, 1_1, 6_0, 11_2, 3_0, 8_2)",
    "(0_0, 7_1, 1_2, 4_1, 11_2, 3_1, 6_0, 10_2, 2_1, 8_0, 12_2, 9_0, 5_1)",
    "(0_0, 10_1, 3_0, 7_2, 12_0, 2_2, 9_0, 1_2, 6_0, 11_1, 5_2, 8_1, 4_2)",
    "(0_0, 9_1, 3_2, 8_0, 11_2, 1_1, 10_2, 4_0, 7_2, 2_1, 5_0, 12_1, 6_2)",
    "(0_0, 3_2, 12_0, 4_2, 9_0, 6_1, 2_2, 11_0, 7_1, 10_0, 5_2, 1_0, 8_1)",
];

pub const C45_P: [&str; 8] = [
    "(0, 1, 2)",
    "(0, 4, 8)",
    "(0, 5, 7)",
    "(0, 10, 17)",
    "(0, 11, 16)",
    "(0, 13, 23)",
    "(0, 14, 22)",
    "(0, 19, 32)",
];
pub const C45_Q: [&str; 7] = [
    "(0, 34, 6, 41, 3, 43, 9, 44, 10, 27, 2, 16, 5, 22, 38)",
    "(0, 20, 1, 3, 2, 19, 21, 14, 43, 26, 40, 9, 38, 42, 37)",
    "(0, 28, 2, 12, 1, 18, 7, 21, 5, 9, 8, 19, 44, 25, 41)",
    "(0, 29, 1, 17, 28, 3, 23, 4, 20, 39, 22, 42, 26, 6, 40)",
    "(0, 31, 6, 32, 3, 29, 9, 34, 11, 37, 23, 42, 40, 20, 43)",
    "(0, 25, 2, 9, 1, 6, 5, 19, 33, 23, 43, 12, 11, 22, 44)",
    "(0, 26, 1, 23, 40, 3, 44, 13, 21, 17, 37, 39, 34, 42, 35)",
];

pub const K33_P: [&str; 11] = [
    "(a, 1_1, 4_1)",
    "(b, 2_2, 5_2)",
    "(c, 0_0, 3_0)",
    "(3_3, 5_0, 1_4)",
    "(4_4, 0_3, 2_0)",
    "(0_1, 2_4, 3_2)",
    "(1_2, 2_3, 2_1)",
    "(3_4, 4_0, 4_3)",
    "(5_1, 4_2, 5_3)",
    "(0_2, 3_1, 5_4)",
    "(1_3, 0_4, 1_0)",
];
pub const K33_Q: [&str; 3] = [
    "(a, 2_3, 1_3, 0_3, 5_1, 4_3, 3_1, 2_0, 3_4, 3_0, 3_2)",
    "(b, 0_2, 2_1, 5_4, 0_4, 4_1, 4_2, 1_0, 5_2, 5_3, 1_4)",
    "(c, 1_1, 4_0, 0_0, 3_3, 1_2, 5_0, 2_4, 4_4, 0_1, 2_2)",
];
pub const K33_LAST: [&str; 2] = ["(0_0, 1_3, 2_0)", "(3_0, 4_3, 5_0)"];

pub const K35_EXTRA: [&str; 2] = ["(0_0, 4_2, 2_2, 1_4, 3_4)", "(0_0, 1_4, 3_3, 2_3, 4_1)"];
pub const K35_P: [&str; 7] = [
    "(0_0, 1_1, 2_2, 3_3, 4_4)",
    "(0_5, 2_0, 4_2, 1_6, 3_1)",
    "(0_3, 1_2, 2_5, 0_1, 2_1)",
    "(1_4, 2_3, 3_6, 4_5, 0_6)",
    "(4_0, 3_4, 0_4, 3_5, 2_6)",
    "(1_0, 4_1, 2_4, 3_2, 4_6)",
    "(4_3, 1_5, 0_2, 3_0, 1_3)",
];
pub const K35_Q: [&str; 5] = [
    "(0_0, 0_3, 2_2, 2_5, 1_1, 1_4, 3_2)",
    "(3_3, 3_6, 1_5, 0_5, 2_1, 4_4, 1_0)",
    "(1_6, 2_6, 2_0, 0_6, 4_6, 4_5, 4_1)",
    "(3_1, 4_3, 2_4, 1_2, 1_3, 0_1, 0_2)",
    "(4_2, 3_4, 3_5, 2_3, 3_0, 4_0, 0_4)",
];

pub const K39_Q: [&str; 11] = [
    "(0_0, 4_2, 2_2, 6_1, 1_1, 3_1, 11_0, 7_1, 5_1, 8_0, 12_2, 9_0, 10_0)",
    "(0_0, 5_0, 3_0, 7_2, 2_2, 10_2, 4_0, 1_1, 6_2, 11_0, 12_0, 9_0, 8_0)",
    "(0_0, 9_1, 2_1, 5_0, 4_0, 8_0, 6_0, 10_0, 1_2, 11_2, 7_2, 12_2, 3_2)",
    "(0_0, 3_0, 6_0, 1_1, 4_1, 9_2, 5_2, 10_2, 12_2, 7_1, 8_1, 2_2, 11_0)",
    "(0_0, 5_2, 10_1, 1_1, 9_1, 3_1, 6_0, 11_2, 8_0, 2_0, 7_1, 12_0, 4_0)",
    "(0_0, 7_1, 10_1, 8_1, 11_1, 3_0, 4_0, 9_0, 1_1, 2_1, 5_1, 12_1, 6_2)",
    "(0_0, 10_1, 2_0, 3_0, 11_0, 5_1, 8_1, 4_2, 12_1, 6_1, 9_1, 1_0, 7_0)",
    "(0_0, 12_0, 2_0, 9_1, 4_2, 11_0, 10_0, 6_1, 7_1, 3_1, 8_2, 1_1, 5_1)",
    "(0_0, 2_0, 6_0, 5_0, 10_1, 7_2, 4_0, 12_1, 8_1, 3_2, 9_1, 11_1, 1_0)",
    "(0_0, 8_2, 1_2, 12_2, 3_1, 10_1, 2_2, 7_1, 4_1, 6_1, 11_1, 5_1, 9_0)",
    "(0_0, 6_0, 9_2, 7_2, 1_0, 5_2, 12_0, 2_2, 11_2, 4_2, 10_2, 3_1, 8_1)",
];

/// Parses `(a, 0_0, 4_4)`: letters are fixed points, `x_i` is `(x, i)` and a
/// bare number is a one-coordinate residue.
pub fn parse_cycle(text: &str) -> Result<CycleSeq> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Reject(format!("not a parenthesised cycle: {text}")))?;
    let mut vs = Vec::new();
    for tok in inner.split(',').map(str::trim) {
        let num = |s: &str| {
            s.parse::<u32>()
                .map_err(|_| Error::Reject(format!("bad coordinate {s:?} in {text}")))
        };
        let v = if tok.chars().all(|c| c.is_ascii_alphabetic()) && !tok.is_empty() {
            Vertex::label(tok)
        } else if let Some((x, i)) = tok.split_once('_') {
            Vertex::res(&[num(x)?, num(i)?])
        } else {
            Vertex::res(&[num(tok)?])
        };
        vs.push(v);
    }
    CycleSeq::new(vs)
}

/// Inverse of [`parse_cycle`].
pub fn render_cycle(c: &CycleSeq) -> String {
    let toks: Vec<String> = c
        .vertices()
        .iter()
        .map(|v| match v {
            Vertex::Label(s) => s.to_string(),
            Vertex::Residue(x) if x.len() == 2 => format!("{}_{}", x.as_slice()[0], x.as_slice()[1]),
            Vertex::Residue(x) => format!("{}", x.as_slice()[0]),
            Vertex::Infinity => "inf".to_string(),
        })
        .collect();
    format!("({})", toks.join(", "))
}

fn cycles(rows: &[&str]) -> Result<Vec<CycleSeq>> {
    rows.iter().map(|r| parse_cycle(r)).collect()
}

fn grid(xs: u32, ys: u32) -> Vec<Vertex> {
    let mut v = Vec::new();
    for x in 0..xs {
        for y in 0..ys {
            v.push(Vertex::res(&[x, y]));
        }
    }
    v
}

fn abc() -> [Vertex; 3] {
    [Vertex::label("a"), Vertex::label("b"), Vertex::label("c")]
}

fn abc_cycle() -> CycleSeq {
    CycleSeq::new_unchecked(abc().to_vec())
}

/// Builds the named fixture and checks it before returning.
pub fn fixture(name: &str) -> Result<Certificate> {
    let prov = Provenance::new("fixture").param("name", name);
    let cert = match name {
        "L4.1" => {
            let [a, b, c] = abc();
            let part = |fixed: Vertex, xs: [u32; 2]| {
                let mut p = vec![fixed];
                for x in xs {
                    p.extend((0..5).map(|i| Vertex::res(&[x, i])));
                }
                p
            };
            let host = HostGraph::Multipartite {
                parts: vec![part(a, [2, 5]), part(b, [0, 3]), part(c, [1, 4])],
            };
            Certificate::new(host, z6z5_classes(&C33_P, &C33_LAST, &C33_Q, 1)?, prov)
        }
        "L4.5" => {
            let mut vs = abc().to_vec();
            vs.extend(grid(6, 5));
            Certificate::new(
                HostGraph::complete(vs),
                z6z5_classes(&K33_P, &K33_LAST, &K33_Q, 3)?,
                prov,
            )
        }
        "L4.2" | "L4.7" => {
            let host = if name == "L4.2" {
                HostGraph::Multipartite {
                    parts: (0..3)
                        .map(|i| (0..13).map(|x| Vertex::res(&[x, i])).collect())
                        .collect(),
                }
            } else {
                HostGraph::complete(grid(13, 3))
            };
            let q: &[&str] = if name == "L4.2" { &C39_Q } else { &K39_Q };
            Certificate::new(host, z13z3_classes(q)?, prov)
        }
        "L4.3" => {
            let host = HostGraph::Multipartite {
                parts: (0..3)
                    .map(|j| (0..15).map(|i| Vertex::res(&[3 * i + j])).collect())
                    .collect(),
            };
            let by3 = DevelopmentRule::new(&[45], &[Some(3)], 15)?;
            let by15 = DevelopmentRule::new(&[45], &[Some(15)], 3)?;
            let mut classes = Vec::new();
            for c in cycles(&C45_P)? {
                classes.push(develop_cycles(ClassKind::Uniform(3), &[c], &by3));
            }
            for c in cycles(&C45_Q)? {
                classes.push(develop_cycles(ClassKind::Uniform(15), &[c], &by15));
            }
            Certificate::new(host, classes, prov)
        }
        "L4.6" => {
            let rule = DevelopmentRule::new(&[5, 7], &[None, Some(1)], 7)?;
            let mut classes = develop(
                &FactorClass::new(ClassKind::Uniform(5), cycles(&K35_P)?),
                &rule,
            )?;
            for c in cycles(&K35_EXTRA)? {
                classes.push(develop_cycles(ClassKind::Uniform(5), &[c], &rule));
            }
            classes.extend(develop(
                &FactorClass::new(ClassKind::Uniform(7), cycles(&K35_Q)?),
                &rule,
            )?);
            // Cay(Z_5 x Z_7, {0} x {+-2})
            let last = (0..5)
                .map(|x| {
                    CycleSeq::new_unchecked(
                        (0..7).map(|j| Vertex::res(&[x, (2 * j) % 7])).collect(),
                    )
                })
                .collect();
            classes.push(FactorClass::new(ClassKind::Uniform(7), last));
            Certificate::new(HostGraph::complete(grid(5, 7)), classes, prov)
        }
        "L3.11" => {
            let mut c = construction_2l(17, 1, 14)?;
            c.provenance = prov.ingredient(c.provenance);
            c
        }
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    release(cert)
}

use crate::model::Certificate;

/// Classes on `(Z_6 x Z_5) + {a,b,c}`: `P` and `Q` developed by
/// `(-, +1 mod 5)` (or `(+3 mod 6, +1 mod 5)` for `Q` when `q_x = 3`), and
/// the extra triangle factor.
fn z6z5_classes(p: &[&str], last: &[&str], q: &[&str], q_x: u32) -> Result<Vec<FactorClass>> {
    let rule = DevelopmentRule::new(&[6, 5], &[None, Some(1)], 5)?;
    let mut classes = develop(&FactorClass::new(ClassKind::Uniform(3), cycles(p)?), &rule)?;
    let mut extra = develop_cycles(ClassKind::Uniform(3), &cycles(last)?, &rule);
    extra.cycles.insert(0, abc_cycle());
    classes.push(extra);
    let q_rule = if q_x == 1 {
        rule
    } else {
        DevelopmentRule::cyclic(&[6, 5], &[Some(q_x), Some(1)])?
    };
    classes.extend(develop(
        &FactorClass::new(ClassKind::Uniform(11), cycles(q)?),
        &q_rule,
    )?);
    Ok(classes)
}

/// Classes on `Z_13 x Z_3`: five searched triangle factors of
/// `Cay(+-{0,1,2} x {+-1})`, the factor `F` from `(0_0, 4_1, 7_2)` and its
/// two shifts, and one `C_13`-factor per row of `q`.
fn z13z3_classes(q: &[&str]) -> Result<Vec<FactorClass>> {
    // the five-factor block lives on Z_3 x Z_13; swap coordinates back
    let swap = |v: &Vertex| match v.coords() {
        Some(c) => Vertex::res(&[c.as_slice()[1], c.as_slice()[0]]),
        None => v.clone(),
    };
    let mut classes: Vec<FactorClass> =
        difference_factorization(3, 13, DiffRequest::FiveCm { i: 1, a: 1 })?
            .iter()
            .map(|f| f.map_vertices(&swap))
            .collect();
    let along = DevelopmentRule::new(&[13, 3], &[Some(1), None], 13)?;
    let f = develop_cycles(ClassKind::Uniform(3), &[parse_cycle(C39_F)?], &along);
    classes.extend(develop(&f, &DevelopmentRule::new(&[13, 3], &[None, Some(1)], 3)?)?);
    let across = DevelopmentRule::new(&[13, 3], &[None, Some(1)], 3)?;
    for c in cycles(q)? {
        classes.push(develop_cycles(ClassKind::Uniform(13), &[c], &across));
    }
    Ok(classes)
}
