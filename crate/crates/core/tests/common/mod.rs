//! Test-side helpers: a brute-force cover-count checker that shares no code
//! with the library verifier, seeded mutations, and a small corpus.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use hwdesign::model::{Certificate, ClassKind, CycleSeq, HostGraph, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;

fn coords(v: &Vertex) -> Option<Vec<u32>> {
    v.coords().map(|c| c.as_slice().to_vec())
}

fn product(moduli: &[u32]) -> Vec<Vertex> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for &m in moduli {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..m).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.iter().map(|c| Vertex::res(c)).collect()
}

/// Vertex list and adjacency of a host, computed from its description.
pub struct Host {
    pub vertices: Vec<Vertex>,
    index: BTreeMap<Vertex, usize>,
    adj: Vec<Vec<bool>>,
    pub parts: Option<Vec<Vec<Vertex>>>,
}

impl Host {
    pub fn of(h: &HostGraph) -> Host {
        let (vertices, parts): (Vec<Vertex>, Option<Vec<Vec<Vertex>>>) = match h {
            HostGraph::Complete { vertices } => (vertices.clone(), None),
            HostGraph::CompleteMinusOneFactor { vertices, .. } => (vertices.clone(), None),
            HostGraph::Multipartite { parts } => (parts.concat(), Some(parts.clone())),
            HostGraph::LexCycle { m, n } => (product(&[*m, *n]), None),
            HostGraph::Cayley { moduli, .. } => (product(moduli), None),
        };
        let index: BTreeMap<Vertex, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let n = vertices.len();
        let mut adj = vec![vec![false; n]; n];
        let part_of: BTreeMap<&Vertex, usize> = parts
            .iter()
            .flatten()
            .enumerate()
            .flat_map(|(i, p)| p.iter().map(move |v| (v, i)))
            .collect();
        let removed: BTreeSet<(Vertex, Vertex)> = match h {
            HostGraph::CompleteMinusOneFactor { removed, .. } => removed
                .iter()
                .flat_map(|(a, b)| [(a.clone(), b.clone()), (b.clone(), a.clone())])
                .collect(),
            _ => BTreeSet::new(),
        };
        let conn: BTreeSet<Vec<u32>> = match h {
            HostGraph::Cayley { connection, .. } => {
                connection.iter().map(|c| c.as_slice().to_vec()).collect()
            }
            _ => BTreeSet::new(),
        };
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b) = (&vertices[i], &vertices[j]);
                adj[i][j] = match h {
                    HostGraph::Complete { .. } => true,
                    HostGraph::CompleteMinusOneFactor { .. } => {
                        !removed.contains(&(a.clone(), b.clone()))
                    }
                    HostGraph::Multipartite { .. } => part_of[a] != part_of[b],
                    HostGraph::LexCycle { m, .. } => {
                        let (x, y) = (coords(a).unwrap()[0], coords(b).unwrap()[0]);
                        let d = (y + m - x) % m;
                        d == 1 || d == m - 1
                    }
                    HostGraph::Cayley { moduli, .. } => {
                        let (x, y) = (coords(a).unwrap(), coords(b).unwrap());
                        let diff = |p: &[u32], q: &[u32]| -> Vec<u32> {
                            (0..moduli.len())
                                .map(|t| (q[t] + moduli[t] - p[t]) % moduli[t])
                                .collect()
                        };
                        conn.contains(&diff(&x, &y)) || conn.contains(&diff(&y, &x))
                    }
                };
            }
        }
        Host { vertices, index, adj, parts }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.iter().filter(|&&b| b).count()).sum::<usize>() / 2
    }
}

fn kind_key(k: &ClassKind) -> String {
    match k {
        ClassKind::Uniform(l) => format!("C{l}"),
        ClassKind::Mixed => "mixed".into(),
        ClassKind::AlmostParallel { k, .. } => format!("AP{k}"),
        ClassKind::HalfParallel(k) => format!("half{k}"),
        ClassKind::OneFactor => "1F".into(),
        ClassKind::Holey { k, .. } => format!("holey{k}"),
    }
}

/// Verdict of the brute-force checker; `Err` carries the first problem.
pub fn brute_force(cert: &Certificate) -> Result<(), String> {
    let host = Host::of(&cert.host);
    let n = host.vertices.len();
    let mut count = vec![vec![0usize; n]; n];
    let idx = |v: &Vertex| host.index.get(v).copied();

    for (ci, class) in cert.classes.iter().enumerate() {
        let mut seen = vec![0usize; n];
        let mut edges: Vec<(&Vertex, &Vertex)> = Vec::new();
        if class.kind == ClassKind::OneFactor {
            if !class.cycles.is_empty() {
                return Err(format!("class {ci}: 1-factor with cycles"));
            }
            for (a, b) in &class.pairs {
                edges.push((a, b));
            }
        } else {
            if !class.pairs.is_empty() {
                return Err(format!("class {ci}: pairs in a cycle class"));
            }
            for c in &class.cycles {
                let vs = c.vertices();
                if vs.len() < 3 {
                    return Err(format!("class {ci}: short cycle"));
                }
                for i in 0..vs.len() {
                    edges.push((&vs[i], &vs[(i + 1) % vs.len()]));
                }
            }
        }
        for (a, b) in &edges {
            let (Some(i), Some(j)) = (idx(a), idx(b)) else {
                return Err(format!("class {ci}: vertex outside host"));
            };
            if i == j {
                return Err(format!("class {ci}: loop"));
            }
            count[i][j] += 1;
            count[j][i] += 1;
        }
        // every vertex of a cycle or pair is met by exactly two edge ends
        // of the class when it is visited once
        let mut ends = vec![0usize; n];
        for (a, b) in &edges {
            ends[idx(a).unwrap()] += 1;
            ends[idx(b).unwrap()] += 1;
        }
        let per_visit = if class.kind == ClassKind::OneFactor { 1 } else { 2 };
        for v in 0..n {
            if ends[v] % per_visit != 0 || ends[v] > per_visit {
                return Err(format!("class {ci}: vertex {} visited twice", host.vertices[v]));
            }
            seen[v] = ends[v] / per_visit;
        }
        let lengths = |k: usize| class.cycles.iter().all(|c| c.len() == k);
        let covered = |skip: &dyn Fn(usize) -> bool| (0..n).all(|v| skip(v) || seen[v] == 1);
        let ok = match &class.kind {
            ClassKind::Uniform(k) => lengths(*k) && covered(&|_| false),
            ClassKind::Mixed | ClassKind::OneFactor => covered(&|_| false),
            ClassKind::AlmostParallel { k, missing } => match idx(missing) {
                Some(m) => {
                    lengths(*k)
                        && seen[m] == 0
                        && covered(&|v| v == m)
                        && *k > 0
                        && class.cycles.len() * k == n - 1
                }
                None => false,
            },
            ClassKind::HalfParallel(k) => {
                lengths(*k) && *k > 0 && n > 0 && class.cycles.len() * 2 * k == n - 1
            }
            ClassKind::Holey { k, hole } => match host.parts.as_ref().and_then(|p| p.get(*hole)) {
                Some(part) => {
                    let in_hole: BTreeSet<usize> = part.iter().filter_map(idx).collect();
                    lengths(*k)
                        && in_hole.iter().all(|&v| seen[v] == 0)
                        && covered(&|v| in_hole.contains(&v))
                }
                None => false,
            },
        };
        if !ok {
            return Err(format!("class {ci}: shape of {:?} not met", class.kind));
        }
    }

    for i in 0..n {
        for j in i + 1..n {
            let want = usize::from(host.adj[i][j]);
            if count[i][j] != want {
                return Err(format!(
                    "edge {} {} covered {} times, host multiplicity {want}",
                    host.vertices[i], host.vertices[j], count[i][j]
                ));
            }
        }
    }

    let mut measured: BTreeMap<String, usize> = BTreeMap::new();
    for c in &cert.classes {
        *measured.entry(kind_key(&c.kind)).or_default() += 1;
    }
    let claimed: BTreeMap<String, usize> =
        cert.profile.0.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    if claimed != measured {
        return Err(format!("claimed profile {claimed:?}, measured {measured:?}"));
    }

    let ap = measured.iter().filter(|(k, _)| k.starts_with("AP")).map(|(_, v)| v).sum::<usize>();
    let half = measured.iter().filter(|(k, _)| k.starts_with("half")).map(|(_, v)| v).sum::<usize>();
    if ap + half > 0 && (n % 2 == 0 || ap != (n - 1) / 2 || half != 1) {
        return Err(format!("ARCS shape: {ap} almost parallel, {half} half classes"));
    }

    let holey = measured.iter().filter(|(k, _)| k.starts_with("holey")).map(|(_, v)| v).sum::<usize>();
    if holey > 0 {
        let Some(parts) = &host.parts else {
            return Err("holey classes without parts".into());
        };
        if holey != cert.classes.len() {
            return Err("frame mixes holey and other classes".into());
        }
        for (i, p) in parts.iter().enumerate() {
            let misses = cert
                .classes
                .iter()
                .filter(|c| matches!(c.kind, ClassKind::Holey { hole, .. } if hole == i))
                .count();
            if p.len() % 2 != 0 || misses != p.len() / 2 {
                return Err(format!("part {i} missed by {misses} classes"));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    VertexSwap,
    CycleDeletion,
    ClassDuplication,
}

/// Applies one random edit of the given type. `None` when the certificate
/// offers nothing to edit that way.
pub fn mutate(cert: &Certificate, what: Mutation, rng: &mut impl Rng) -> Option<Certificate> {
    let mut c = cert.clone();
    match what {
        Mutation::ClassDuplication => {
            let i = rng.gen_range(0..c.classes.len());
            let dup = c.classes[i].clone();
            c.classes.push(dup);
        }
        Mutation::CycleDeletion => {
            let i = rng.gen_range(0..c.classes.len());
            let class = &mut c.classes[i];
            if class.cycles.is_empty() {
                if class.pairs.is_empty() {
                    return None;
                }
                let j = rng.gen_range(0..class.pairs.len());
                class.pairs.remove(j);
            } else {
                let j = rng.gen_range(0..class.cycles.len());
                class.cycles.remove(j);
            }
        }
        Mutation::VertexSwap => {
            // exchange one vertex of a cycle in class i with a different
            // vertex of a cycle in another class j
            let with_cycles: Vec<usize> =
                (0..c.classes.len()).filter(|&i| !c.classes[i].cycles.is_empty()).collect();
            if with_cycles.len() < 2 {
                return None;
            }
            let pick: Vec<usize> = with_cycles.choose_multiple(rng, 2).copied().collect();
            let (i, j) = (pick[0], pick[1]);
            let ci = rng.gen_range(0..c.classes[i].cycles.len());
            let cj = rng.gen_range(0..c.classes[j].cycles.len());
            let mut a: Vec<Vertex> = c.classes[i].cycles[ci].vertices().to_vec();
            let mut b: Vec<Vertex> = c.classes[j].cycles[cj].vertices().to_vec();
            let pa = rng.gen_range(0..a.len());
            let candidates: Vec<usize> = (0..b.len()).filter(|&q| b[q] != a[pa]).collect();
            let pb = *candidates.choose(rng)?;
            std::mem::swap(&mut a[pa], &mut b[pb]);
            c.classes[i].cycles[ci] = CycleSeq::new_unchecked(a);
            c.classes[j].cycles[cj] = CycleSeq::new_unchecked(b);
        }
    }
    Some(c)
}
