//! Group-labelled vertices, cycles, factor classes, host graphs and
//! certificates, plus the translation algebra shared by every construction.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Maximum number of coordinates a residue vertex may carry.
pub const MAX_COORDS: usize = 3;

/// Coordinates of a point of a product of cyclic groups.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Coords {
    len: u8,
    c: [u32; MAX_COORDS],
}

impl Coords {
    pub fn new(values: &[u32]) -> Self {
        assert!(
            !values.is_empty() && values.len() <= MAX_COORDS,
            "residue vertices carry 1..={MAX_COORDS} coordinates"
        );
        let mut c = [0; MAX_COORDS];
        c[..values.len()].copy_from_slice(values);
        Coords {
            len: values.len() as u8,
            c,
        }
    }

    /// Reduces signed values into `0..modulus` per coordinate.
    pub fn reduced(values: &[i64], moduli: &[u32]) -> Self {
        assert_eq!(values.len(), moduli.len());
        let v: Vec<u32> = values
            .iter()
            .zip(moduli)
            .map(|(&x, &m)| x.rem_euclid(m as i64) as u32)
            .collect();
        Coords::new(&v)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.c[..self.len as usize]
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn add(&self, other: &Coords, moduli: &[u32]) -> Coords {
        let mut out = *self;
        for i in 0..self.len() {
            out.c[i] = ((self.c[i] as u64 + other.c[i] as u64) % moduli[i] as u64) as u32;
        }
        out
    }

    pub fn neg(&self, moduli: &[u32]) -> Coords {
        let mut out = *self;
        for i in 0..self.len() {
            out.c[i] = (moduli[i] - self.c[i] % moduli[i]) % moduli[i];
        }
        out
    }

    pub fn sub(&self, other: &Coords, moduli: &[u32]) -> Coords {
        self.add(&other.neg(moduli), moduli)
    }

    pub fn is_zero(&self) -> bool {
        self.as_slice().iter().all(|&x| x == 0)
    }

    pub fn fits(&self, moduli: &[u32]) -> bool {
        self.len() == moduli.len() && self.as_slice().iter().zip(moduli).all(|(&x, &m)| x < m)
    }
}

impl Ord for Coords {
    fn cmp(&self, other: &Self) -> Ordering {
        self.as_slice().cmp(other.as_slice())
    }
}

impl PartialOrd for Coords {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Coords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.as_slice().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A design point.
///
/// The derived order puts `Infinity` first, then labels (lexicographic), then
/// residues (lexicographic on coordinates).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Infinity,
    Label(Arc<str>),
    Residue(Coords),
}

impl Vertex {
    pub fn res(values: &[u32]) -> Vertex {
        Vertex::Residue(Coords::new(values))
    }

    /// Residue vertex from signed coordinates, reduced modulo `moduli`.
    pub fn res_mod(values: &[i64], moduli: &[u32]) -> Vertex {
        Vertex::Residue(Coords::reduced(values, moduli))
    }

    pub fn label(name: &str) -> Vertex {
        Vertex::Label(Arc::from(name))
    }

    pub fn coords(&self) -> Option<&Coords> {
        match self {
            Vertex::Residue(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_fixed_point(&self) -> bool {
        !matches!(self, Vertex::Residue(_))
    }

    /// Translates residue vertices; infinity and labels stay put.
    pub fn translate(&self, step: &Coords, moduli: &[u32]) -> Vertex {
        match self {
            Vertex::Residue(c) => Vertex::Residue(c.add(step, moduli)),
            other => other.clone(),
        }
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Infinity => write!(f, "inf"),
            Vertex::Label(s) => write!(f, "\"{s}\""),
            Vertex::Residue(c) => write!(f, "{c:?}"),
        }
    }
}

/// Unordered vertex pair, stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

pub fn edge(a: &Vertex, b: &Vertex) -> Edge {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

/// A cycle given by its vertex sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleSeq(Vec<Vertex>);

impl CycleSeq {
    /// Builds a cycle; needs at least three pairwise distinct vertices.
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCycle(format!(
                "a cycle needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let distinct: BTreeSet<&Vertex> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::InvalidCycle(format!(
                "repeated vertex in cycle {:?}",
                vertices
            )));
        }
        Ok(CycleSeq(vertices))
    }

    /// Builds a cycle without checking distinctness. The verifier reports
    /// malformed cycles built this way.
    pub fn new_unchecked(vertices: Vec<Vertex>) -> Self {
        CycleSeq(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| edge(&self.0[i], &self.0[(i + 1) % n]))
    }

    /// Rotates the minimum vertex to the front and orients the cycle so the
    /// second vertex is smaller than the last.
    pub fn canonical(&self) -> CycleSeq {
        let n = self.0.len();
        if n == 0 {
            return self.clone();
        }
        let start = (0..n).min_by(|&i, &j| self.0[i].cmp(&self.0[j])).unwrap();
        let fwd: Vec<Vertex> = (0..n).map(|i| self.0[(start + i) % n].clone()).collect();
        if n > 2 && fwd[1] > fwd[n - 1] {
            let mut rev = Vec::with_capacity(n);
            rev.push(fwd[0].clone());
            rev.extend(fwd[1..].iter().rev().cloned());
            CycleSeq(rev)
        } else {
            CycleSeq(fwd)
        }
    }

    pub fn translate(&self, step: &Coords, moduli: &[u32]) -> CycleSeq {
        CycleSeq(self.0.iter().map(|v| v.translate(step, moduli)).collect())
    }

    pub fn map(&self, f: impl Fn(&Vertex) -> Vertex) -> CycleSeq {
        CycleSeq(self.0.iter().map(f).collect())
    }
}

impl fmt::Debug for CycleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// What a class claims to be.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKind {
    /// Spanning 2-factor with all cycles of length `k`.
    Uniform(usize),
    /// Spanning 2-factor with cycles of any lengths.
    Mixed,
    /// `(|V|-1)/k` disjoint `k`-cycles missing exactly `missing`.
    AlmostParallel { k: usize, missing: Vertex },
    /// `(|V|-1)/(2k)` disjoint `k`-cycles.
    HalfParallel(usize),
    /// Perfect matching of the host vertex set.
    OneFactor,
    /// `k`-cycles covering every vertex of a multipartite host except the
    /// part with index `hole`.
    Holey { k: usize, hole: usize },
}

impl ClassKind {
    pub fn profile_key(&self) -> ProfileKey {
        match self {
            ClassKind::Uniform(k) => ProfileKey::Factor(*k),
            ClassKind::Mixed => ProfileKey::Mixed,
            ClassKind::AlmostParallel { k, .. } => ProfileKey::AlmostParallel(*k),
            ClassKind::HalfParallel(k) => ProfileKey::Half(*k),
            ClassKind::OneFactor => ProfileKey::OneFactor,
            ClassKind::Holey { k, .. } => ProfileKey::Holey(*k),
        }
    }
}

/// A typed class of a decomposition: cycles, or matching pairs for 1-factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorClass {
    pub kind: ClassKind,
    pub cycles: Vec<CycleSeq>,
    pub pairs: Vec<Edge>,
}

impl FactorClass {
    pub fn new(kind: ClassKind, cycles: Vec<CycleSeq>) -> Self {
        FactorClass {
            kind,
            cycles,
            pairs: Vec::new(),
        }
    }

    pub fn one_factor(pairs: Vec<Edge>) -> Self {
        FactorClass {
            kind: ClassKind::OneFactor,
            cycles: Vec::new(),
            pairs: pairs.into_iter().map(|(a, b)| edge(&a, &b)).collect(),
        }
    }

    /// All edges of the class, with multiplicity.
    pub fn edges(&self) -> Vec<Edge> {
        if self.kind == ClassKind::OneFactor {
            return self.pairs.clone();
        }
        self.cycles.iter().flat_map(|c| c.edges()).collect()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        if self.kind == ClassKind::OneFactor {
            return self
                .pairs
                .iter()
                .flat_map(|(a, b)| [a.clone(), b.clone()])
                .collect();
        }
        self.cycles
            .iter()
            .flat_map(|c| c.vertices().iter().cloned())
            .collect()
    }

    pub fn map_vertices(&self, f: &impl Fn(&Vertex) -> Vertex) -> FactorClass {
        let kind = match &self.kind {
            ClassKind::AlmostParallel { k, missing } => ClassKind::AlmostParallel {
                k: *k,
                missing: f(missing),
            },
            other => other.clone(),
        };
        FactorClass {
            kind,
            cycles: self.cycles.iter().map(|c| c.map(f)).collect(),
            pairs: self.pairs.iter().map(|(a, b)| edge(&f(a), &f(b))).collect(),
        }
    }

    pub fn translate(&self, step: &Coords, moduli: &[u32]) -> FactorClass {
        self.map_vertices(&|v| v.translate(step, moduli))
    }

    /// Same class with every cycle in canonical form, cycles sorted.
    pub fn canonical(&self) -> FactorClass {
        let mut cycles: Vec<CycleSeq> = self.cycles.iter().map(|c| c.canonical()).collect();
        cycles.sort();
        let mut pairs = self.pairs.clone();
        pairs.sort();
        FactorClass {
            kind: self.kind.clone(),
            cycles,
            pairs,
        }
    }
}

/// Symbolic host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HostGraph {
    /// Complete graph on the listed vertices.
    Complete { vertices: Vec<Vertex> },
    /// Complete graph minus the listed perfect matching.
    CompleteMinusOneFactor {
        vertices: Vec<Vertex>,
        removed: Vec<Edge>,
    },
    /// Complete multipartite graph with the listed parts.
    Multipartite { parts: Vec<Vec<Vertex>> },
    /// `C_m[n]` on `Z_m x Z_n`: `(x,i) ~ (x+-1,j)` for all `i, j`.
    LexCycle { m: u32, n: u32 },
    /// Cayley graph on a product of cyclic groups.
    Cayley {
        moduli: Vec<u32>,
        connection: Vec<Coords>,
    },
}

impl HostGraph {
    pub fn complete(vertices: Vec<Vertex>) -> Self {
        HostGraph::Complete { vertices }
    }

    /// Complete graph on `{0..v-1}` as one-coordinate residues mod `v`.
    pub fn complete_cyclic(v: u32) -> Self {
        HostGraph::Complete {
            vertices: (0..v).map(|x| Vertex::res(&[x])).collect(),
        }
    }

    pub fn cayley(moduli: &[u32], connection: Vec<Coords>) -> Self {
        HostGraph::Cayley {
            moduli: moduli.to_vec(),
            connection,
        }
    }

    /// All group elements of `Z_{m1} x ... x Z_{mr}` in lexicographic order.
    pub fn group_elements(moduli: &[u32]) -> Vec<Coords> {
        let mut out = vec![Vec::new()];
        for &m in moduli {
            let mut next = Vec::with_capacity(out.len() * m as usize);
            for prefix in &out {
                for x in 0..m {
                    let mut p = prefix.clone();
                    p.push(x);
                    next.push(p);
                }
            }
            out = next;
        }
        out.iter().map(|p| Coords::new(p)).collect()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs = match self {
            HostGraph::Complete { vertices } => vertices.clone(),
            HostGraph::CompleteMinusOneFactor { vertices, .. } => vertices.clone(),
            HostGraph::Multipartite { parts } => parts.iter().flatten().cloned().collect(),
            HostGraph::LexCycle { m, n } => Self::group_elements(&[*m, *n])
                .into_iter()
                .map(Vertex::Residue)
                .collect(),
            HostGraph::Cayley { moduli, .. } => Self::group_elements(moduli)
                .into_iter()
                .map(Vertex::Residue)
                .collect(),
        };
        vs.sort();
        vs
    }

    pub fn order(&self) -> usize {
        match self {
            HostGraph::Complete { vertices } => vertices.len(),
            HostGraph::CompleteMinusOneFactor { vertices, .. } => vertices.len(),
            HostGraph::Multipartite { parts } => parts.iter().map(|p| p.len()).sum(),
            HostGraph::LexCycle { m, n } => (*m * *n) as usize,
            HostGraph::Cayley { moduli, .. } => moduli.iter().map(|&m| m as usize).product(),
        }
    }

    pub fn parts(&self) -> Option<&[Vec<Vertex>]> {
        match self {
            HostGraph::Multipartite { parts } => Some(parts),
            _ => None,
        }
    }

    /// Moduli of the residue vertices, when the host is group-labelled.
    pub fn moduli(&self) -> Option<Vec<u32>> {
        match self {
            HostGraph::LexCycle { m, n } => Some(vec![*m, *n]),
            HostGraph::Cayley { moduli, .. } => Some(moduli.clone()),
            _ => None,
        }
    }

    /// Structural checks that do not need the edge set.
    pub fn validate(&self) -> Result<()> {
        match self {
            HostGraph::Complete { vertices } => distinct(vertices, "complete"),
            HostGraph::CompleteMinusOneFactor { vertices, removed } => {
                distinct(vertices, "complete-minus-1-factor")?;
                let vset: BTreeSet<&Vertex> = vertices.iter().collect();
                let mut seen = BTreeSet::new();
                for (a, b) in removed {
                    if a == b || !vset.contains(a) || !vset.contains(b) {
                        return Err(Error::RejectHost(format!("bad removed pair {a} {b}")));
                    }
                    if !seen.insert(a) || !seen.insert(b) {
                        return Err(Error::RejectHost(
                            "removed pairs are not a matching".into(),
                        ));
                    }
                }
                if seen.len() != vertices.len() {
                    return Err(Error::RejectHost(
                        "removed pairs do not cover every vertex".into(),
                    ));
                }
                Ok(())
            }
            HostGraph::Multipartite { parts } => {
                let all: Vec<Vertex> = parts.iter().flatten().cloned().collect();
                distinct(&all, "multipartite")
            }
            HostGraph::LexCycle { m, n } => {
                if *m < 3 || *n < 1 {
                    return Err(Error::RejectHost(format!("C_{m}[{n}] is not defined")));
                }
                Ok(())
            }
            HostGraph::Cayley { moduli, connection } => {
                if moduli.is_empty() || moduli.len() > MAX_COORDS || moduli.contains(&0) {
                    return Err(Error::RejectHost(format!("bad moduli {moduli:?}")));
                }
                let mut counts: BTreeMap<Coords, usize> = BTreeMap::new();
                for s in connection {
                    if !s.fits(moduli) {
                        return Err(Error::RejectHost(format!(
                            "connection element {s:?} outside the group"
                        )));
                    }
                    if s.is_zero() {
                        return Err(Error::RejectHost(
                            "connection set contains the identity".into(),
                        ));
                    }
                    *counts.entry(*s).or_default() += 1;
                }
                for (s, c) in &counts {
                    let neg = s.neg(moduli);
                    if counts.get(&neg).copied().unwrap_or(0) != *c {
                        return Err(Error::RejectHost(format!(
                            "connection set not closed under negation at {s:?}"
                        )));
                    }
                }
                Ok(())
            }
        }
    }
}

fn distinct(vertices: &[Vertex], what: &str) -> Result<()> {
    let set: BTreeSet<&Vertex> = vertices.iter().collect();
    if set.len() != vertices.len() {
        return Err(Error::RejectHost(format!("{what} host repeats a vertex")));
    }
    Ok(())
}

/// Exact edge multiset of a host, as a sorted pair list with multiplicity.
pub fn materialize_edges(host: &HostGraph) -> Result<Vec<Edge>> {
    host.validate()?;
    let mut edges = Vec::new();
    match host {
        HostGraph::Complete { vertices } => {
            for (i, a) in vertices.iter().enumerate() {
                for b in &vertices[i + 1..] {
                    edges.push(edge(a, b));
                }
            }
        }
        HostGraph::CompleteMinusOneFactor { vertices, removed } => {
            let removed: BTreeSet<Edge> = removed.iter().map(|(a, b)| edge(a, b)).collect();
            for (i, a) in vertices.iter().enumerate() {
                for b in &vertices[i + 1..] {
                    let e = edge(a, b);
                    if !removed.contains(&e) {
                        edges.push(e);
                    }
                }
            }
        }
        HostGraph::Multipartite { parts } => {
            for (i, p) in parts.iter().enumerate() {
                for q in &parts[i + 1..] {
                    for a in p {
                        for b in q {
                            edges.push(edge(a, b));
                        }
                    }
                }
            }
        }
        HostGraph::LexCycle { m, n } => {
            for x in 0..*m {
                for i in 0..*n {
                    for j in 0..*n {
                        edges.push(edge(
                            &Vertex::res(&[x, i]),
                            &Vertex::res(&[(x + 1) % m, j]),
                        ));
                    }
                }
            }
        }
        HostGraph::Cayley { moduli, connection } => {
            let mut counts: BTreeMap<Edge, usize> = BTreeMap::new();
            for g in HostGraph::group_elements(moduli) {
                for s in connection {
                    let e = edge(&Vertex::Residue(g), &Vertex::Residue(g.add(s, moduli)));
                    *counts.entry(e).or_default() += 1;
                }
            }
            for (e, c) in counts {
                for _ in 0..c / 2 {
                    edges.push(e.clone());
                }
            }
        }
    }
    edges.sort();
    Ok(edges)
}

/// Per-coordinate behaviour of a development rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    Translate,
    Fix,
}

/// Translation by multiples of `step`; infinity and labels are fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DevelopmentRule {
    pub moduli: Vec<u32>,
    pub step: Coords,
    pub orbit_length: usize,
    pub actions: Vec<Action>,
}

impl DevelopmentRule {
    /// `step` per coordinate; `None` marks a fixed coordinate (written `-`).
    pub fn new(moduli: &[u32], step: &[Option<u32>], orbit_length: usize) -> Result<Self> {
        if step.len() != moduli.len() || orbit_length == 0 {
            return Err(Error::Reject(format!(
                "development rule shape mismatch: step {step:?}, moduli {moduli:?}"
            )));
        }
        let actions: Vec<Action> = step
            .iter()
            .map(|s| if s.is_some() { Action::Translate } else { Action::Fix })
            .collect();
        let raw: Vec<u32> = step
            .iter()
            .zip(moduli)
            .map(|(s, &m)| s.unwrap_or(0) % m)
            .collect();
        let step = Coords::new(&raw);
        for (i, &m) in moduli.iter().enumerate() {
            if (orbit_length as u64 * raw[i] as u64) % m as u64 != 0 {
                return Err(Error::Reject(format!(
                    "orbit length {orbit_length} does not return coordinate {i} to the identity"
                )));
            }
        }
        Ok(DevelopmentRule {
            moduli: moduli.to_vec(),
            step,
            orbit_length,
            actions,
        })
    }

    /// Rule translating by `step` with orbit length equal to its order.
    pub fn cyclic(moduli: &[u32], step: &[Option<u32>]) -> Result<Self> {
        let order = step
            .iter()
            .zip(moduli)
            .map(|(s, &m)| match s {
                Some(x) if x % m != 0 => (m / gcd(m, x % m)) as usize,
                _ => 1,
            })
            .fold(1usize, lcm);
        Self::new(moduli, step, order)
    }

    pub fn identity(moduli: &[u32]) -> Self {
        DevelopmentRule {
            moduli: moduli.to_vec(),
            step: Coords::new(&vec![0; moduli.len()]),
            orbit_length: 1,
            actions: vec![Action::Fix; moduli.len()],
        }
    }

    /// `i * step`.
    pub fn multiple(&self, i: usize) -> Coords {
        let v: Vec<u32> = self
            .step
            .as_slice()
            .iter()
            .zip(&self.moduli)
            .map(|(&s, &m)| ((s as u64 * i as u64) % m as u64) as u32)
            .collect();
        Coords::new(&v)
    }
}

pub fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a as u32, b as u32) as usize * b
}

/// Translates `base` by `0, step, 2*step, ...`, `orbit_length` times.
pub fn develop(base: &FactorClass, rule: &DevelopmentRule) -> Result<Vec<FactorClass>> {
    for v in base.vertices() {
        if let Vertex::Residue(c) = &v {
            if !c.fits(&rule.moduli) {
                return Err(Error::Reject(format!(
                    "vertex {v} does not live in Z{:?}",
                    rule.moduli
                )));
            }
        }
    }
    Ok((0..rule.orbit_length)
        .map(|i| base.translate(&rule.multiple(i), &rule.moduli))
        .collect())
}

/// Develops a set of base cycles into a single class: the union of all
/// translates of every base cycle.
pub fn develop_cycles(
    kind: ClassKind,
    base: &[CycleSeq],
    rule: &DevelopmentRule,
) -> FactorClass {
    let mut cycles = Vec::with_capacity(base.len() * rule.orbit_length);
    for c in base {
        for i in 0..rule.orbit_length {
            cycles.push(c.translate(&rule.multiple(i), &rule.moduli));
        }
    }
    FactorClass::new(kind, cycles)
}

/// Counts of classes by kind and cycle length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProfileKey {
    Factor(usize),
    Mixed,
    AlmostParallel(usize),
    Half(usize),
    OneFactor,
    Holey(usize),
}

impl fmt::Display for ProfileKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileKey::Factor(k) => write!(f, "C{k}"),
            ProfileKey::Mixed => write!(f, "mixed"),
            ProfileKey::AlmostParallel(k) => write!(f, "AP{k}"),
            ProfileKey::Half(k) => write!(f, "half{k}"),
            ProfileKey::OneFactor => write!(f, "1F"),
            ProfileKey::Holey(k) => write!(f, "holey{k}"),
        }
    }
}

impl std::str::FromStr for ProfileKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |rest: &str| {
            rest.parse::<usize>()
                .map_err(|_| Error::parse(format!("bad profile key {s:?}")))
        };
        if s == "mixed" {
            Ok(ProfileKey::Mixed)
        } else if s == "1F" {
            Ok(ProfileKey::OneFactor)
        } else if let Some(r) = s.strip_prefix("AP") {
            Ok(ProfileKey::AlmostParallel(num(r)?))
        } else if let Some(r) = s.strip_prefix("half") {
            Ok(ProfileKey::Half(num(r)?))
        } else if let Some(r) = s.strip_prefix("holey") {
            Ok(ProfileKey::Holey(num(r)?))
        } else if let Some(r) = s.strip_prefix('C') {
            Ok(ProfileKey::Factor(num(r)?))
        } else {
            Err(Error::parse(format!("bad profile key {s:?}")))
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Profile(pub BTreeMap<ProfileKey, usize>);

impl Profile {
    pub fn of(classes: &[FactorClass]) -> Profile {
        let mut p = Profile::default();
        for c in classes {
            *p.0.entry(c.kind.profile_key()).or_default() += 1;
        }
        p
    }

    pub fn count(&self, key: ProfileKey) -> usize {
        self.0.get(&key).copied().unwrap_or(0)
    }

    /// `(alpha, beta)`: numbers of `C_m`- and `C_n`-factors.
    pub fn hw(&self, m: usize, n: usize) -> (usize, usize) {
        (
            self.count(ProfileKey::Factor(m)),
            self.count(ProfileKey::Factor(n)),
        )
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{k}:{c}")?;
        }
        Ok(())
    }
}

/// Which construction produced a certificate, with parameters and the
/// ingredients it consumed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Provenance {
    pub construction: String,
    pub params: Vec<(String, String)>,
    pub ingredients: Vec<Provenance>,
}

/// Characters the one-line rendering uses as delimiters are replaced so
/// that every provenance parses back.
fn provenance_text(s: &str) -> String {
    s.chars()
        .map(|c| if "()[];,\n\r".contains(c) { '_' } else { c })
        .collect()
}

impl Provenance {
    pub fn new(construction: &str) -> Self {
        Provenance {
            construction: provenance_text(construction),
            ..Default::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params
            .push((provenance_text(key).replace('=', "_"), provenance_text(&value.to_string())));
        self
    }

    pub fn ingredient(mut self, p: Provenance) -> Self {
        self.ingredients.push(p);
        self
    }

    /// One-line rendering: `name(k=v,...)[child;child]`.
    pub fn render(&self) -> String {
        let mut s = self.construction.clone();
        if !self.params.is_empty() {
            s.push('(');
            let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            s.push_str(&ps.join(","));
            s.push(')');
        }
        if !self.ingredients.is_empty() {
            s.push('[');
            let cs: Vec<String> = self.ingredients.iter().map(|p| p.render()).collect();
            s.push_str(&cs.join(";"));
            s.push(']');
        }
        s
    }
}

/// The unit of verification and file exchange.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub host: HostGraph,
    pub classes: Vec<FactorClass>,
    pub profile: Profile,
    pub provenance: Provenance,
    /// Free-form remarks carried through the file format, e.g. the original
    /// signed form of reduced coordinates.
    pub notes: Vec<String>,
}

impl Certificate {
    /// Builds a certificate whose claimed profile is read off the classes.
    pub fn new(host: HostGraph, classes: Vec<FactorClass>, provenance: Provenance) -> Self {
        let profile = Profile::of(&classes);
        Certificate {
            host,
            classes,
            profile,
            provenance,
            notes: Vec::new(),
        }
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }

    /// Canonical cycles, classes left in order.
    pub fn canonical(&self) -> Certificate {
        Certificate {
            host: self.host.clone(),
            classes: self.classes.iter().map(|c| c.canonical()).collect(),
            profile: self.profile.clone(),
            provenance: self.provenance.clone(),
            notes: self.notes.clone(),
        }
    }

    pub fn measured_profile(&self) -> Profile {
        Profile::of(&self.classes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: u32, y: u32) -> Vertex {
        Vertex::res(&[x, y])
    }

    #[test]
    fn vertex_order() {
        assert!(Vertex::Infinity < Vertex::label("a"));
        assert!(Vertex::label("a") < Vertex::label("b"));
        assert!(Vertex::label("z") < r(0, 0));
        assert!(r(0, 5) < r(1, 0));
    }

    #[test]
    fn negative_residues_reduce() {
        assert_eq!(Vertex::res_mod(&[-15, 1], &[35, 2]), r(20, 1));
        assert_eq!(Vertex::res_mod(&[-1, 0], &[9, 2]), r(8, 0));
    }

    #[test]
    fn canonical_cycle() {
        let c = CycleSeq::new(vec![r(2, 0), r(0, 0), r(1, 0), r(3, 0)]).unwrap();
        let k = c.canonical();
        assert_eq!(k.vertices(), &[r(0, 0), r(1, 0), r(3, 0), r(2, 0)]);
        let rev = CycleSeq::new(c.vertices().iter().rev().cloned().collect()).unwrap();
        assert_eq!(rev.canonical(), k);
    }

    #[test]
    fn short_or_repeating_cycles_rejected() {
        assert!(CycleSeq::new(vec![r(0, 0), r(1, 0)]).is_err());
        assert!(CycleSeq::new(vec![r(0, 0), r(1, 0), r(0, 0)]).is_err());
    }

    #[test]
    fn edge_counts() {
        assert_eq!(materialize_edges(&HostGraph::complete_cyclic(5)).unwrap().len(), 10);
        assert_eq!(
            materialize_edges(&HostGraph::LexCycle { m: 3, n: 11 })
                .unwrap()
                .len(),
            363
        );
        let mut s = Vec::new();
        for y in 1..19 {
            s.push(Coords::new(&[0, y]));
        }
        s.push(Coords::new(&[1, 0]));
        s.push(Coords::new(&[8, 0]));
        let host = HostGraph::cayley(&[9, 19], s);
        assert_eq!(materialize_edges(&host).unwrap().len(), 1710);
    }

    #[test]
    fn lex_cycle_matches_brute_force_adjacency() {
        // (x,i) ~ (y,j) iff x,y adjacent on the 3-cycle
        let host = HostGraph::LexCycle { m: 3, n: 11 };
        let vs = host.vertices();
        let mut count = 0;
        for (i, a) in vs.iter().enumerate() {
            for b in &vs[i + 1..] {
                let (x, y) = (a.coords().unwrap().as_slice()[0], b.coords().unwrap().as_slice()[0]);
                if (x + 1) % 3 == y || (y + 1) % 3 == x {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 363);
    }

    #[test]
    fn asymmetric_connection_rejected() {
        let host = HostGraph::cayley(&[7], vec![Coords::new(&[1])]);
        assert!(matches!(materialize_edges(&host), Err(Error::RejectHost(_))));
        let host = HostGraph::cayley(&[7], vec![Coords::new(&[0])]);
        assert!(materialize_edges(&host).is_err());
    }

    #[test]
    fn involution_connection_element() {
        // Z_8 with S = {4}: 4 edges
        let host = HostGraph::cayley(&[8], vec![Coords::new(&[4])]);
        assert_eq!(materialize_edges(&host).unwrap().len(), 4);
    }

    #[test]
    fn develop_identity_and_orbit() {
        let c = CycleSeq::new(vec![r(0, 0), r(1, 0), r(2, 1)]).unwrap();
        let f = FactorClass::new(ClassKind::Mixed, vec![c]);
        let id = DevelopmentRule::new(&[5, 2], &[Some(0), None], 1).unwrap();
        assert_eq!(develop(&f, &id).unwrap(), vec![f.clone()]);
        let rule = DevelopmentRule::new(&[5, 2], &[Some(1), None], 5).unwrap();
        let orbit = develop(&f, &rule).unwrap();
        assert_eq!(orbit.len(), 5);
        assert_eq!(orbit[2].cycles[0].vertices()[0], r(2, 0));
        assert!(DevelopmentRule::new(&[5, 2], &[Some(1), None], 3).is_err());
    }

    #[test]
    fn develop_moves_missing_vertex() {
        let f = FactorClass::new(
            ClassKind::AlmostParallel {
                k: 3,
                missing: r(0, 1),
            },
            vec![CycleSeq::new(vec![Vertex::Infinity, r(0, 0), r(1, 1)]).unwrap()],
        );
        let rule = DevelopmentRule::cyclic(&[3, 2], &[Some(1), None]).unwrap();
        assert_eq!(rule.orbit_length, 3);
        let dev = develop(&f, &rule).unwrap();
        assert_eq!(
            dev[1].kind,
            ClassKind::AlmostParallel {
                k: 3,
                missing: r(1, 1)
            }
        );
        assert_eq!(dev[1].cycles[0].vertices()[0], Vertex::Infinity);
    }

    #[test]
    fn develop_rejects_foreign_vertices() {
        let f = FactorClass::new(
            ClassKind::Mixed,
            vec![CycleSeq::new(vec![r(0, 0), r(7, 0), r(1, 1)]).unwrap()],
        );
        let rule = DevelopmentRule::cyclic(&[5, 2], &[Some(1), None]).unwrap();
        assert!(develop(&f, &rule).is_err());
    }
}
