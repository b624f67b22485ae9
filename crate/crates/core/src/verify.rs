//! Exact certification of decompositions.
//!
//! Every check here is exhaustive: class invariants are tested over the full
//! host vertex set and the union of class edges is compared against the
//! host's materialized edge multiset.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::model::{
    gcd, materialize_edges, Certificate, ClassKind, Edge, FactorClass, Profile, Vertex,
};

/// Number of violations kept in a report.
pub const MAX_WITNESSES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Valid => write!(f, "VALID"),
            Verdict::Invalid => write!(f, "INVALID"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Witness {
    Edge(Vertex, Vertex),
    Vertex(Vertex),
    /// A class, or one cycle inside it.
    Cycle(usize),
    Difference(u32),
    Count { expected: usize, found: usize },
    Note(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Edge(a, b) => write!(f, "edge {a} {b}"),
            Witness::Vertex(v) => write!(f, "vertex {v}"),
            Witness::Cycle(i) => write!(f, "cycle {i}"),
            Witness::Difference(d) => write!(f, "difference {d}"),
            Witness::Count { expected, found } => write!(f, "expected {expected}, found {found}"),
            Witness::Note(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    /// Offending class; `None` for whole-design problems.
    pub class: Option<usize>,
    pub witness: Witness,
    pub code: &'static str,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.class {
            Some(c) => write!(f, "{} class {}: {}", self.code, c, self.witness),
            None => write!(f, "{}: {}", self.code, self.witness),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
    /// Violations found before truncation to [`MAX_WITNESSES`].
    pub total_violations: usize,
    pub profile: Profile,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::Valid
    }

    fn from_violations(mut violations: Vec<Violation>, profile: Profile) -> Self {
        // class-scoped violations first, ordered by class index
        violations.sort_by(|a, b| {
            let ka = (a.class.is_none(), a.class, &a.witness, a.code);
            let kb = (b.class.is_none(), b.class, &b.witness, b.code);
            ka.cmp(&kb)
        });
        violations.dedup();
        let total = violations.len();
        violations.truncate(MAX_WITNESSES);
        VerifyReport {
            verdict: if total == 0 {
                Verdict::Valid
            } else {
                Verdict::Invalid
            },
            violations,
            total_violations: total,
            profile,
        }
    }

    pub fn has_code(&self, code: &str) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.verdict)?;
        writeln!(f, "profile {}", self.profile)?;
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        if self.total_violations > self.violations.len() {
            writeln!(
                f,
                "... {} more",
                self.total_violations - self.violations.len()
            )?;
        }
        Ok(())
    }
}

struct Collector {
    out: Vec<Violation>,
}

impl Collector {
    fn push(&mut self, code: &'static str, class: Option<usize>, witness: Witness) {
        self.out.push(Violation {
            class,
            witness,
            code,
        });
    }
}

/// Checks a certificate against its host: class invariants, exact edge
/// partition, claimed profile and, when almost parallel or half classes are
/// present, the ARCS shape.
pub fn check_certificate(cert: &Certificate) -> VerifyReport {
    let profile = cert.measured_profile();
    let mut col = Collector { out: Vec::new() };

    let host_edges = match materialize_edges(&cert.host) {
        Ok(e) => e,
        Err(e) => {
            col.push("REJECT_HOST", None, Witness::Note(e.to_string()));
            return VerifyReport::from_violations(col.out, profile);
        }
    };
    let vertices = cert.host.vertices();
    let vset: BTreeSet<&Vertex> = vertices.iter().collect();
    let nv = vertices.len();

    for (i, class) in cert.classes.iter().enumerate() {
        check_class(i, class, cert, &vset, nv, &mut col);
    }

    check_edge_partition(&host_edges, &cert.classes, &mut col);

    if cert.profile != profile {
        col.push(
            "PROFILE_MISMATCH",
            None,
            Witness::Note(format!("claimed {} measured {}", cert.profile, profile)),
        );
    }

    let ap = cert
        .classes
        .iter()
        .filter(|c| matches!(c.kind, ClassKind::AlmostParallel { .. }))
        .count();
    let half = cert
        .classes
        .iter()
        .filter(|c| matches!(c.kind, ClassKind::HalfParallel(_)))
        .count();
    if ap + half > 0 {
        if nv % 2 == 0 {
            col.push("ARCS_SHAPE", None, Witness::Note("even order".into()));
        } else {
            if ap != (nv - 1) / 2 {
                col.push(
                    "ARCS_SHAPE",
                    None,
                    Witness::Count {
                        expected: (nv - 1) / 2,
                        found: ap,
                    },
                );
            }
            if half != 1 {
                col.push(
                    "ARCS_SHAPE",
                    None,
                    Witness::Count {
                        expected: 1,
                        found: half,
                    },
                );
            }
        }
    }

    if cert
        .classes
        .iter()
        .any(|c| matches!(c.kind, ClassKind::Holey { .. }))
    {
        check_frame_counts(cert, &mut col);
    }

    VerifyReport::from_violations(col.out, profile)
}

fn check_class(
    i: usize,
    class: &FactorClass,
    cert: &Certificate,
    vset: &BTreeSet<&Vertex>,
    nv: usize,
    col: &mut Collector,
) {
    let ci = Some(i);
    let mut covered: BTreeMap<&Vertex, usize> = BTreeMap::new();

    if class.kind == ClassKind::OneFactor {
        if !class.cycles.is_empty() {
            col.push("MALFORMED_CLASS", ci, Witness::Note("1-factor with cycles".into()));
        }
        for (a, b) in &class.pairs {
            if a == b {
                col.push("LOOP", ci, Witness::Vertex(a.clone()));
            }
            *covered.entry(a).or_default() += 1;
            *covered.entry(b).or_default() += 1;
        }
    } else {
        if !class.pairs.is_empty() {
            col.push("MALFORMED_CLASS", ci, Witness::Note("cycle class with pairs".into()));
        }
        for (j, c) in class.cycles.iter().enumerate() {
            if c.len() < 3 {
                col.push("SHORT_CYCLE", ci, Witness::Cycle(j));
            }
            let distinct: BTreeSet<&Vertex> = c.vertices().iter().collect();
            if distinct.len() != c.len() {
                col.push("REPEATED_VERTEX_IN_CYCLE", ci, Witness::Cycle(j));
            }
            for v in c.vertices() {
                *covered.entry(v).or_default() += 1;
            }
        }
    }

    for (v, n) in &covered {
        if !vset.contains(v) {
            col.push("VERTEX_NOT_IN_HOST", ci, Witness::Vertex((*v).clone()));
        } else if *n > 1 {
            col.push("VERTEX_REPEATED", ci, Witness::Vertex((*v).clone()));
        }
    }

    let lengths_ok = |k: usize, col: &mut Collector| {
        for (j, c) in class.cycles.iter().enumerate() {
            if c.len() != k {
                col.push("WRONG_CYCLE_LENGTH", ci, Witness::Cycle(j));
            }
        }
    };
    let must_cover = |skip: &dyn Fn(&Vertex) -> bool, col: &mut Collector| {
        for v in vset {
            if !skip(v) && !covered.contains_key(*v) {
                col.push("VERTEX_UNCOVERED", ci, Witness::Vertex((*v).clone()));
            }
        }
    };

    match &class.kind {
        ClassKind::Uniform(k) => {
            lengths_ok(*k, col);
            must_cover(&|_| false, col);
        }
        ClassKind::Mixed | ClassKind::OneFactor => must_cover(&|_| false, col),
        ClassKind::AlmostParallel { k, missing } => {
            lengths_ok(*k, col);
            if !vset.contains(missing) {
                col.push("VERTEX_NOT_IN_HOST", ci, Witness::Vertex(missing.clone()));
            }
            if covered.contains_key(missing) {
                col.push("MISSING_VERTEX_COVERED", ci, Witness::Vertex(missing.clone()));
            }
            must_cover(&|v| v == missing, col);
            if *k == 0 || (nv - 1) % k != 0 || class.cycles.len() != (nv - 1) / k {
                col.push(
                    "WRONG_CYCLE_COUNT",
                    ci,
                    Witness::Count {
                        expected: if *k == 0 { 0 } else { (nv - 1) / k },
                        found: class.cycles.len(),
                    },
                );
            }
        }
        ClassKind::HalfParallel(k) => {
            lengths_ok(*k, col);
            if *k == 0 || nv == 0 || (nv - 1) % (2 * k) != 0 || class.cycles.len() != (nv - 1) / (2 * k)
            {
                col.push(
                    "WRONG_CYCLE_COUNT",
                    ci,
                    Witness::Count {
                        expected: if *k == 0 || nv == 0 { 0 } else { (nv - 1) / (2 * k) },
                        found: class.cycles.len(),
                    },
                );
            }
        }
        ClassKind::Holey { k, hole } => {
            lengths_ok(*k, col);
            match cert.host.parts() {
                Some(parts) if *hole < parts.len() => {
                    let hole_set: BTreeSet<&Vertex> = parts[*hole].iter().collect();
                    for v in &hole_set {
                        if covered.contains_key(*v) {
                            col.push("HOLE_TOUCHED", ci, Witness::Vertex((*v).clone()));
                        }
                    }
                    must_cover(&|v| hole_set.contains(v), col);
                }
                _ => col.push(
                    "BAD_HOLE",
                    ci,
                    Witness::Note(format!("part {hole} does not exist")),
                ),
            }
        }
    }
}

/// Dense vertex indexing for fast edge counting.
fn index_edges<'a>(
    edges: impl Iterator<Item = &'a Edge>,
    index: &mut HashMap<Vertex, u32>,
) -> Vec<(u32, u32)> {
    edges
        .map(|(a, b)| {
            let n = index.len() as u32;
            let ia = *index.entry(a.clone()).or_insert(n);
            let n = index.len() as u32;
            let ib = *index.entry(b.clone()).or_insert(n);
            (ia.min(ib), ia.max(ib))
        })
        .collect()
}

fn check_edge_partition(host_edges: &[Edge], classes: &[FactorClass], col: &mut Collector) {
    let mut index: HashMap<Vertex, u32> = HashMap::new();
    let mut remaining: HashMap<(u32, u32), i64> = HashMap::new();
    for e in index_edges(host_edges.iter(), &mut index) {
        *remaining.entry(e).or_default() += 1;
    }
    for (i, class) in classes.iter().enumerate() {
        let edges = class.edges();
        for (raw, e) in edges.iter().zip(index_edges(edges.iter(), &mut index)) {
            let slot = remaining.entry(e).or_insert(0);
            *slot -= 1;
            if *slot < 0 {
                let in_host = host_edges.binary_search(raw).is_ok();
                let code = if in_host {
                    "DOUBLE_COVERED_EDGE"
                } else {
                    "EDGE_NOT_IN_HOST"
                };
                col.push(code, Some(i), Witness::Edge(raw.0.clone(), raw.1.clone()));
            }
        }
    }
    let mut uncovered: Vec<&Edge> = Vec::new();
    let mut seen = BTreeSet::new();
    for e in host_edges {
        if !seen.insert(e) {
            continue;
        }
        let key = {
            let ia = index[&e.0];
            let ib = index[&e.1];
            (ia.min(ib), ia.max(ib))
        };
        if remaining.get(&key).copied().unwrap_or(0) > 0 {
            uncovered.push(e);
        }
    }
    for e in uncovered.into_iter().take(MAX_WITNESSES) {
        col.push("UNCOVERED_EDGE", None, Witness::Edge(e.0.clone(), e.1.clone()));
    }
}

fn check_frame_counts(cert: &Certificate, col: &mut Collector) {
    let Some(parts) = cert.host.parts() else {
        col.push(
            "BAD_HOLE",
            None,
            Witness::Note("holey classes need a multipartite host".into()),
        );
        return;
    };
    let mut per_hole = vec![0usize; parts.len()];
    for c in &cert.classes {
        match c.kind {
            ClassKind::Holey { hole, .. } if hole < parts.len() => per_hole[hole] += 1,
            ClassKind::Holey { .. } => {}
            _ => col.push(
                "MIXED_FRAME",
                None,
                Witness::Note("frame contains a non-holey class".into()),
            ),
        }
    }
    for (i, p) in parts.iter().enumerate() {
        if p.len() % 2 != 0 || per_hole[i] != p.len() / 2 {
            col.push(
                "FRAME_COUNTS",
                None,
                Witness::Note(format!(
                    "part {i}: expected {} holey factors, found {}",
                    p.len() / 2,
                    per_hole[i]
                )),
            );
        }
    }
}

/// Frame check: every class is a holey `C_k`-factor of the multipartite host
/// over `parts`, each part is missed by exactly half its size many classes,
/// and the classes partition the host's edges.
pub fn check_frame(cert: &Certificate, parts: &[Vec<Vertex>], k: usize) -> Result<VerifyReport> {
    let sizes: BTreeSet<usize> = parts.iter().map(|p| p.len()).collect();
    if sizes.len() != 1 {
        return Err(Error::RejectParts(format!(
            "part sizes differ: {sizes:?}"
        )));
    }
    let mut report = check_certificate(cert);
    let mut extra = Vec::new();
    let same_parts = match cert.host.parts() {
        Some(hp) => {
            let a: BTreeSet<BTreeSet<&Vertex>> =
                hp.iter().map(|p| p.iter().collect()).collect();
            let b: BTreeSet<BTreeSet<&Vertex>> =
                parts.iter().map(|p| p.iter().collect()).collect();
            a == b
        }
        None => false,
    };
    if !same_parts {
        extra.push(Violation {
            class: None,
            witness: Witness::Note("host is not multipartite over the given parts".into()),
            code: "REJECT_PARTS",
        });
    }
    for (i, c) in cert.classes.iter().enumerate() {
        match c.kind {
            ClassKind::Holey { k: kk, .. } if kk == k => {}
            _ => extra.push(Violation {
                class: Some(i),
                witness: Witness::Note(format!("not a holey C_{k}-factor")),
                code: "WRONG_KIND",
            }),
        }
    }
    if !extra.is_empty() {
        let mut all = report.violations.clone();
        all.extend(extra);
        report = VerifyReport::from_violations(all, report.profile);
    }
    Ok(report)
}

/// Multiset of first-coordinate differences between two levels of
/// `Z_u x Z_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceList {
    pub pair: (u32, u32),
    pub modulus: u32,
    /// Sorted differences with multiplicity.
    pub diffs: Vec<u32>,
}

impl DifferenceList {
    pub fn counts(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &d in &self.diffs {
            *m.entry(d).or_default() += 1;
        }
        m
    }
}

/// `x - y mod u` over ordered adjacent pairs `((x,j),(y,j'))` of `f`.
/// Edges touching infinity or labels are skipped.
pub fn difference_list(f: &FactorClass, pair: (u32, u32), u: u32) -> DifferenceList {
    let mut diffs = Vec::new();
    for (a, b) in f.edges() {
        let (Some(ca), Some(cb)) = (a.coords(), b.coords()) else {
            continue;
        };
        let (ca, cb) = (ca.as_slice(), cb.as_slice());
        if ca.len() != 2 || cb.len() != 2 {
            continue;
        }
        for (p, q) in [(ca, cb), (cb, ca)] {
            if (p[1], q[1]) == pair {
                diffs.push(((p[0] % u + u - q[0] % u) % u) as u32);
            }
        }
    }
    diffs.sort_unstable();
    DifferenceList {
        pair,
        modulus: u,
        diffs,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaVariant {
    /// Two `k`-cycles over `Z_k x Z_2` plus infinity.
    A,
    /// Six `k`-cycles over `Z_{3k} x Z_2` plus infinity, `d = 3`.
    B,
}

/// Checks the base-factor conditions that make the development of `f`
/// under `(+1, -)` a `k`-ARCS together with the half class generated by `d`.
///
/// Difference containments are checked as exact multiset equalities; edge
/// counting shows they are tight.
pub fn check_lemma_conditions(
    f: &FactorClass,
    variant: LemmaVariant,
    k: usize,
    d: u32,
) -> Result<VerifyReport> {
    let (cycles, u) = match variant {
        LemmaVariant::A => (2, k as u32),
        LemmaVariant::B => (6, 3 * k as u32),
    };
    if f.cycles.len() != cycles || f.cycles.iter().any(|c| c.len() != k) {
        return Err(Error::RejectShape(format!(
            "expected {cycles} cycles of length {k}, got lengths {:?}",
            f.cycles.iter().map(|c| c.len()).collect::<Vec<_>>()
        )));
    }
    if variant == LemmaVariant::B && d != 3 {
        return Err(Error::RejectParams(format!("second variant fixes d = 3, got {d}")));
    }
    let mut col = Collector { out: Vec::new() };

    // (i) vertex set is everything but one group vertex
    let mut seen: BTreeMap<Vertex, usize> = BTreeMap::new();
    for v in f.vertices() {
        *seen.entry(v).or_default() += 1;
    }
    for (v, n) in &seen {
        let ok = match v {
            Vertex::Infinity => true,
            Vertex::Residue(c) => {
                let s = c.as_slice();
                s.len() == 2 && s[0] < u && s[1] < 2
            }
            Vertex::Label(_) => false,
        };
        if !ok {
            col.push("VERTEX_SET", None, Witness::Vertex(v.clone()));
        } else if *n > 1 {
            col.push("VERTEX_REPEATED", None, Witness::Vertex(v.clone()));
        }
    }
    if !seen.contains_key(&Vertex::Infinity) {
        col.push("VERTEX_SET", None, Witness::Vertex(Vertex::Infinity));
    }
    let absent: Vec<Vertex> = (0..u)
        .flat_map(|x| [0, 1].map(|j| Vertex::res(&[x, j])))
        .filter(|v| !seen.contains_key(v))
        .collect();
    if absent.len() != 1 {
        col.push(
            "VERTEX_SET",
            None,
            Witness::Count {
                expected: 1,
                found: absent.len(),
            },
        );
    }

    // (ii) infinity joins both levels
    let mut levels = Vec::new();
    for (a, b) in f.edges() {
        let other = if a == Vertex::Infinity {
            b
        } else if b == Vertex::Infinity {
            a
        } else {
            continue;
        };
        if let Some(c) = other.coords() {
            levels.push(c.as_slice().get(1).copied().unwrap_or(u32::MAX));
        }
    }
    levels.sort_unstable();
    if levels != [0, 1] {
        col.push(
            "INFINITY_LEVELS",
            None,
            Witness::Note(format!("neighbour levels {levels:?}")),
        );
    }

    // (iii) difference lists
    let d = d % u;
    if variant == LemmaVariant::A && gcd(d, u) != 1 {
        col.push("GCD", None, Witness::Difference(d));
    }
    let expect = |pair: (u32, u32)| -> Vec<u32> {
        (0..u)
            .filter(|&x| match pair {
                (0, 0) => x != 0,
                (1, 1) => x != 0 && x != d && x != (u - d) % u,
                _ => true,
            })
            .collect()
    };
    for pair in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let got = difference_list(f, pair, u).counts();
        let want = expect(pair);
        let code = match pair {
            (0, 0) => "DIFFERENCES_00",
            (0, 1) => "DIFFERENCES_01",
            (1, 0) => "DIFFERENCES_10",
            _ => "DIFFERENCES_11",
        };
        for &x in &want {
            if got.get(&x).copied().unwrap_or(0) != 1 {
                col.push(code, None, Witness::Difference(x));
            }
        }
        for &x in got.keys() {
            if !want.contains(&x) {
                col.push(code, None, Witness::Difference(x));
            }
        }
    }

    Ok(VerifyReport::from_violations(col.out, Profile::of(std::slice::from_ref(f))))
}

/// True when the missed vertices of the almost parallel classes are pairwise
/// distinct and together form exactly the vertex set of the half class.
pub fn check_alignment(cert: &Certificate) -> bool {
    let mut missed = BTreeSet::new();
    let mut half = BTreeSet::new();
    let mut halves = 0;
    for c in &cert.classes {
        match &c.kind {
            ClassKind::AlmostParallel { missing, .. } => {
                if !missed.insert(missing.clone()) {
                    return false;
                }
            }
            ClassKind::HalfParallel(_) => {
                halves += 1;
                half.extend(c.vertices());
            }
            _ => {}
        }
    }
    halves == 1 && !missed.is_empty() && missed == half
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{CycleSeq, HostGraph, Provenance};

    fn r(x: u32, y: u32) -> Vertex {
        Vertex::res(&[x, y])
    }

    fn cyc(vs: &[Vertex]) -> CycleSeq {
        CycleSeq::new(vs.to_vec()).unwrap()
    }

    #[test]
    fn triangle_is_one_factor() {
        let host = HostGraph::complete_cyclic(3);
        let vs = host.vertices();
        let cert = Certificate::new(
            host,
            vec![FactorClass::new(ClassKind::Uniform(3), vec![cyc(&vs)])],
            Provenance::new("test"),
        );
        let rep = check_certificate(&cert);
        assert!(rep.is_valid(), "{rep}");
        assert_eq!(rep.profile.hw(3, 5), (1, 0));
    }

    #[test]
    fn profile_must_match_claim() {
        let host = HostGraph::complete_cyclic(3);
        let vs = host.vertices();
        let mut cert = Certificate::new(
            host,
            vec![FactorClass::new(ClassKind::Uniform(3), vec![cyc(&vs)])],
            Provenance::new("test"),
        );
        cert.profile.0.clear();
        assert!(check_certificate(&cert).has_code("PROFILE_MISMATCH"));
    }

    #[test]
    fn double_cover_is_witnessed() {
        let host = HostGraph::complete_cyclic(5);
        let v = |x| Vertex::res(&[x]);
        let a = FactorClass::new(ClassKind::Uniform(5), vec![cyc(&[v(0), v(1), v(2), v(3), v(4)])]);
        let cert = Certificate::new(host, vec![a.clone(), a], Provenance::new("test"));
        let rep = check_certificate(&cert);
        assert!(!rep.is_valid());
        assert!(rep.has_code("DOUBLE_COVERED_EDGE"));
        assert!(rep.has_code("UNCOVERED_EDGE"));
        assert!(rep.violations.len() <= MAX_WITNESSES);
    }

    #[test]
    fn single_edge_differences() {
        let f = FactorClass::new(ClassKind::Mixed, vec![]);
        let mut f = f;
        f.kind = ClassKind::OneFactor;
        f.pairs = vec![(r(0, 0), r(3, 0))];
        assert_eq!(difference_list(&f, (0, 0), 9).diffs, vec![3, 6]);
    }

    #[test]
    fn half_cycle_differences() {
        let (k, d) = (9u32, 4u32);
        let c = cyc(&(0..k).map(|i| r(i * d % k, 1)).collect::<Vec<_>>());
        let f = FactorClass::new(ClassKind::HalfParallel(9), vec![c]);
        let dl = difference_list(&f, (1, 1), k);
        let counts = dl.counts();
        assert_eq!(counts.len(), 2);
        assert_eq!(counts[&d], 9);
        assert_eq!(counts[&(k - d)], 9);
    }

    #[test]
    fn infinity_levels_detected() {
        // two 3-cycles; shape passes only the counting part, levels fail
        let f = FactorClass::new(
            ClassKind::Mixed,
            vec![
                cyc(&[Vertex::Infinity, r(0, 0), r(1, 0)]),
                cyc(&[r(2, 0), r(1, 1), r(2, 1)]),
            ],
        );
        let rep = check_lemma_conditions(&f, LemmaVariant::A, 3, 1).unwrap();
        assert!(rep.has_code("INFINITY_LEVELS"));
    }

    #[test]
    fn wrong_shape_is_an_error() {
        let f = FactorClass::new(ClassKind::Mixed, vec![cyc(&[r(0, 0), r(1, 0), r(2, 0)])]);
        assert!(matches!(
            check_lemma_conditions(&f, LemmaVariant::A, 3, 1),
            Err(Error::RejectShape(_))
        ));
    }

    #[test]
    fn frame_parts_must_be_equal() {
        let parts = vec![vec![r(0, 0)], vec![r(1, 0), r(1, 1)]];
        let cert = Certificate::new(
            HostGraph::Multipartite {
                parts: parts.clone(),
            },
            vec![],
            Provenance::new("test"),
        );
        assert!(matches!(check_frame(&cert, &parts, 3), Err(Error::RejectParts(_))));
    }
}
