//! Bounded search for small ingredients the constructions consume but do
//! not build: base factors, cycle frames and resolvable factorizations.
//!
//! Every search develops a base object under a translation subgroup first
//! and only then falls back to wider searches. Results leave this module
//! only after the verifier accepts the developed design.

pub mod cache;
pub mod engine;
pub mod frame;
pub mod rows;

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::model::{Coords, CycleSeq, FactorClass, ClassKind, HostGraph, Vertex};

pub use engine::{Budget, CoverProblem, Outcome};

/// Group elements, their index, and the simple edge list of a Cayley graph.
pub(crate) struct IndexedCayley {
    pub moduli: Vec<u32>,
    pub elements: Vec<Coords>,
    pub index: HashMap<Coords, u32>,
    pub edges: Vec<(u32, u32)>,
}

impl IndexedCayley {
    pub fn new(moduli: &[u32], connection: &[Coords]) -> Self {
        let elements = HostGraph::group_elements(moduli);
        let index: HashMap<Coords, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, c)| (*c, i as u32))
            .collect();
        let mut edges = Vec::new();
        for (i, g) in elements.iter().enumerate() {
            for s in connection {
                let j = index[&g.add(s, moduli)];
                if (i as u32) < j {
                    edges.push((i as u32, j));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        IndexedCayley {
            moduli: moduli.to_vec(),
            elements,
            index,
            edges,
        }
    }

    /// Orbit id of each edge under translation by `generator`.
    pub fn orbits(&self, generator: &Coords) -> (Vec<u32>, usize) {
        let eidx: HashMap<(u32, u32), usize> =
            self.edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut orbit = vec![u32::MAX; self.edges.len()];
        let mut count = 0u32;
        for i in 0..self.edges.len() {
            if orbit[i] != u32::MAX {
                continue;
            }
            let (mut a, mut b) = self.edges[i];
            loop {
                let key = (a.min(b), a.max(b));
                let j = eidx[&key];
                if orbit[j] != u32::MAX {
                    break;
                }
                orbit[j] = count;
                a = self.shift(a, generator);
                b = self.shift(b, generator);
            }
            count += 1;
        }
        (orbit, count as usize)
    }

    pub fn shift(&self, v: u32, by: &Coords) -> u32 {
        self.index[&self.elements[v as usize].add(by, &self.moduli)]
    }

    pub fn vertex(&self, v: u32) -> Vertex {
        Vertex::Residue(self.elements[v as usize])
    }
}

/// Splits a set of edges forming vertex-disjoint cycles into cycle
/// sequences, each starting at its smallest vertex index.
pub(crate) fn edges_to_cycles(edges: &[(u32, u32)]) -> Vec<Vec<u32>> {
    let mut adj: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for &start in adj.keys() {
        if seen.contains(&start) {
            continue;
        }
        let mut cyc = vec![start];
        seen.insert(start);
        let mut prev = start;
        let mut cur = adj[&start][0];
        while cur != start {
            cyc.push(cur);
            seen.insert(cur);
            let nb = &adj[&cur];
            let next = if nb[0] != prev { nb[0] } else { nb[1] };
            prev = cur;
            cur = next;
        }
        out.push(cyc);
    }
    out
}

/// Searches for a `C_len`-factor `F` of `Cay(moduli, connection)` such that
/// `F, F+g, ..., F+(r-1)g` partition the edges, where `r` is the order of
/// `g`. Returns the `r` factors.
pub fn factor_orbit(
    moduli: &[u32],
    connection: &[Coords],
    cycle_len: usize,
    generator: &Coords,
    seed: u64,
    budget: Budget,
) -> Result<Vec<FactorClass>> {
    let g = IndexedCayley::new(moduli, connection);
    let (orbit, norbits) = g.orbits(generator);
    let n = g.elements.len();
    if n % cycle_len != 0 {
        return Err(Error::NecessaryFail(format!(
            "{cycle_len} does not divide the order {n}"
        )));
    }
    let order = {
        let mut c = *generator;
        let mut r = 1;
        while !c.is_zero() {
            c = c.add(generator, moduli);
            r += 1;
        }
        r
    };
    if norbits != n {
        return Err(Error::NotFound(format!(
            "{norbits} edge orbits under translation, a factor needs {n}"
        )));
    }
    let problem = CoverProblem::factor(n, g.edges.clone(), orbit, cycle_len);
    let chosen = match engine::solve_with_restarts(&problem, seed, budget) {
        Outcome::Found(c) => c,
        Outcome::Exhausted => {
            return Err(Error::NotFound(format!(
                "no translation-developed C_{cycle_len}-factor of Cay(Z{moduli:?}) exists"
            )))
        }
        Outcome::OutOfBudget => {
            return Err(Error::NotFound(format!(
                "search budget exhausted for C_{cycle_len}-factors of Cay(Z{moduli:?})"
            )))
        }
    };
    let base: Vec<(u32, u32)> = chosen.iter().map(|&i| g.edges[i]).collect();
    let cycles = edges_to_cycles(&base);
    let base_class = FactorClass::new(
        ClassKind::Uniform(cycle_len),
        cycles
            .iter()
            .map(|c| CycleSeq::new(c.iter().map(|&v| g.vertex(v)).collect()))
            .collect::<Result<Vec<_>>>()?,
    );
    let mut out = Vec::with_capacity(order);
    let mut shift = Coords::new(&vec![0; moduli.len()]);
    for _ in 0..order {
        out.push(base_class.translate(&shift, moduli));
        shift = shift.add(generator, moduli);
    }
    Ok(out)
}

/// Searches base cycles for a `k`-ARCS(2kt+1) on `Z_{kt} x Z_2` plus
/// infinity developed by `(+1, -)`, with the half class generated by `t`
/// on level 1 (so `t in {1, 3}` matches the two template shapes).
pub fn search_arcs_template(k: usize, t: usize, seed: u64, budget: Budget) -> Result<crate::arcs::ArcsTemplate> {
    use crate::arcs::{arcs_vertices, ArcsTemplate, LemmaVariant};
    let variant = match t {
        1 => LemmaVariant::A,
        3 => LemmaVariant::B,
        _ => {
            return Err(Error::Unsupported(format!(
                "base-cycle search covers t = 1 and t = 3, got {t}"
            )))
        }
    };
    if k < 3 || k % 2 == 0 {
        return Err(Error::Unsupported(format!("odd k >= 3 expected, got {k}")));
    }
    let u = (k * t) as u32;
    let d = t as u32;
    let vs = arcs_vertices(u);
    let index: HashMap<Vertex, u32> = vs.iter().cloned().enumerate().map(|(i, v)| (v, i as u32)).collect();
    let half_diff = |a: &Vertex, b: &Vertex| match (a, b) {
        (Vertex::Residue(p), Vertex::Residue(q)) => {
            let (p, q) = (p.as_slice(), q.as_slice());
            p[1] == 1 && q[1] == 1 && {
                let diff = (p[0] + u - q[0]) % u;
                diff == d || diff == u - d
            }
        }
        _ => false,
    };
    let orbit_key = |a: &Vertex, b: &Vertex| -> (u32, u32, u32) {
        match (a, b) {
            (Vertex::Infinity, Vertex::Residue(q)) | (Vertex::Residue(q), Vertex::Infinity) => (2, q.as_slice()[1], 0),
            (Vertex::Residue(p), Vertex::Residue(q)) => {
                let (p, q) = (p.as_slice(), q.as_slice());
                let (p, q) = if (p[1], p[0]) <= (q[1], q[0]) { (p, q) } else { (q, p) };
                let diff = (q[0] + u - p[0]) % u;
                let diff = if p[1] == q[1] { diff.min(u - diff) } else { diff };
                (p[1], q[1], diff)
            }
            _ => unreachable!(),
        }
    };
    let mut edges = Vec::new();
    let mut keys = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if half_diff(&vs[i], &vs[j]) {
                continue;
            }
            edges.push((i as u32, j as u32));
            keys.push(orbit_key(&vs[i], &vs[j]));
        }
    }
    let mut uniq = keys.clone();
    uniq.sort_unstable();
    uniq.dedup();
    let orbit: Vec<u32> = keys.iter().map(|k| uniq.binary_search(k).unwrap() as u32).collect();
    let skip = index[&Vertex::res(&[0, 1])];
    let slot: Vec<Option<u32>> = (0..vs.len() as u32)
        .map(|i| match i.cmp(&skip) {
            std::cmp::Ordering::Less => Some(i),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(i - 1),
        })
        .collect();
    let problem = CoverProblem {
        vertices: vs.len(),
        orbit_quota: vec![1; uniq.len()],
        orbit,
        edges: edges.clone(),
        slot_quota: vec![1; vs.len() - 1],
        slot,
        cycle_len: k,
    };
    let chosen = match engine::solve_with_restarts(&problem, seed, budget) {
        Outcome::Found(c) => c,
        Outcome::Exhausted => {
            return Err(Error::NotFound(format!(
                "no developed base cycles for a {k}-ARCS({})",
                2 * u + 1
            )))
        }
        Outcome::OutOfBudget => {
            return Err(Error::NotFound(format!(
                "search budget exhausted for a {k}-ARCS({})",
                2 * u + 1
            )))
        }
    };
    let base: Vec<(u32, u32)> = chosen.iter().map(|&i| edges[i]).collect();
    let cycles = edges_to_cycles(&base)
        .iter()
        .map(|c| CycleSeq::new(c.iter().map(|&i| vs[i as usize].clone()).collect()))
        .collect::<Result<Vec<_>>>()?;
    Ok(ArcsTemplate {
        k,
        d,
        variant,
        cycles,
        subcase: format!("searched-seed{seed}"),
    })
}
