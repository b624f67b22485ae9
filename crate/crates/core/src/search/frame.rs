//! Cycle frames `(k,1)-CF(g^u)` and small resolvable factorizations.
//!
//! Frames live on `Z_N`, `N = gu`, with part `i` the residues `i mod u`.
//! A base set `H` of `k`-cycles hits one vertex of every pair
//! `{v, v + N/2}` with `v` outside part 0 and uses every cross-part
//! difference `+-d`, `1 <= d < N/2`, once. Then `H + (H + N/2)` is a holey
//! factor missing part 0 and its `N/2` translates form the frame.

use crate::error::{Error, Result};
use crate::model::{Certificate, ClassKind, Coords, CycleSeq, FactorClass, HostGraph, Provenance, Vertex};
use crate::verify::{check_certificate, check_frame};

use super::engine::{self, CoverProblem, Outcome};
use super::{edges_to_cycles, Budget};

/// Necessary conditions for a `(k,1)-CF(g^u)`.
pub fn frame_conditions(k: u32, g: u32, u: u32) -> Result<()> {
    let fail = |why: String| Err(Error::NecessaryFail(why));
    if k < 3 {
        return fail(format!("cycle length {k} below 3"));
    }
    if g % 2 != 0 {
        return fail(format!("part size {g} is odd"));
    }
    if (g as u64 * (u as u64).saturating_sub(1)) % k as u64 != 0 {
        return fail(format!("{k} does not divide g(u-1) = {}", g * u.saturating_sub(1)));
    }
    if k % 2 == 0 && u < 3 {
        return fail(format!("even k needs at least 3 parts, got {u}"));
    }
    if k % 2 == 1 && u < 4 {
        return fail(format!("odd k needs at least 4 parts, got {u}"));
    }
    if (k, g, u) == (6, 6, 3) {
        return fail("no (6,1)-CF(6^3) exists".into());
    }
    Ok(())
}

pub fn frame_parts(g: u32, u: u32) -> Vec<Vec<Vertex>> {
    (0..u)
        .map(|i| (0..g).map(|j| Vertex::res(&[i + j * u])).collect())
        .collect()
}

/// Searches for a `(k,1)-CF(g^u)`: the paired shape first, then one base
/// holey factor per part developed under a translation of order `g/2`.
pub fn search_frame(k: u32, g: u32, u: u32, seed: u64, budget: Budget) -> Result<Certificate> {
    frame_conditions(k, g, u)?;
    let start = std::time::Instant::now();
    let first = Budget {
        nodes: budget.nodes / 2,
        wall: budget.wall / 2,
    };
    let classes = match frame_paired(k, g, u, seed, first) {
        Ok(c) => c,
        Err(Error::NotFound(_)) if inflatable(k, g, u).is_some() => {
            let w = inflatable(k, g, u).unwrap();
            let small = search_frame(k, g / w, u, seed, budget)?;
            inflate_frame(&small, k, u, w, seed)?
        }
        Err(Error::NotFound(_)) => {
            let rest = Budget {
                nodes: budget.nodes - first.nodes,
                wall: budget.wall.saturating_sub(start.elapsed()),
            };
            frame_layered(k, g, u, seed, rest)?
        }
        Err(e) => return Err(e),
    };
    let parts = frame_parts(g, u);
    let cert = Certificate::new(
        HostGraph::Multipartite {
            parts: parts.clone(),
        },
        classes,
        Provenance::new("frame_search")
            .param("k", k)
            .param("g", g)
            .param("u", u)
            .param("seed", seed),
    );
    let report = check_frame(&cert, &parts, k as usize)?;
    if !report.is_valid() {
        return Err(Error::Unverified(format!("searched frame: {report}")));
    }
    Ok(cert)
}

/// Smallest odd `w > 1` with `w | g` such that a frame of type `(g/w)^u`
/// still meets the necessary conditions.
fn inflatable(k: u32, g: u32, u: u32) -> Option<u32> {
    (3..=g / 2)
        .step_by(2)
        .find(|&w| g % w == 0 && frame_conditions(k, g / w, u).is_ok())
}

/// Blows every vertex of a frame of type `g^u` up into `w` copies; each
/// holey factor becomes `w` holey factors through a row table for `C_k[w]`.
fn inflate_frame(small: &Certificate, k: u32, u: u32, w: u32, seed: u64) -> Result<Vec<FactorClass>> {
    let all: Vec<u32> = (0..w).collect();
    let table = super::rows::search_base_rows(k, w, 1, &all, w as usize, seed, Budget::default())?;
    let blow = |v: &Vertex, s: u32| -> Vertex {
        let x = v.coords().unwrap().as_slice()[0];
        let (i, xi) = (x % u, x / u);
        Vertex::res(&[i + u * (xi * w + s)])
    };
    let mut out = Vec::new();
    for class in &small.classes {
        for row in &table.rows {
            let mut cycles = Vec::new();
            for c in &class.cycles {
                for s in 0..w {
                    let mut y = s;
                    let mut vs = Vec::with_capacity(k as usize);
                    for (t, v) in c.vertices().iter().enumerate() {
                        vs.push(blow(v, y));
                        y = (y + row[t]) % w;
                    }
                    cycles.push(CycleSeq::new(vs)?);
                }
            }
            out.push(FactorClass::new(class.kind.clone(), cycles));
        }
    }
    Ok(out)
}

fn compact(ids: &[u32]) -> (Vec<u32>, usize) {
    let mut u: Vec<u32> = ids.to_vec();
    u.sort_unstable();
    u.dedup();
    (ids.iter().map(|o| u.binary_search(o).unwrap() as u32).collect(), u.len())
}

fn run(problem: &CoverProblem, seed: u64, budget: Budget, what: &str) -> Result<Vec<usize>> {
    match engine::solve_with_restarts(problem, seed, budget) {
        Outcome::Found(c) => Ok(c),
        Outcome::Exhausted => Err(Error::NotFound(format!("no {what} of the searched shape"))),
        Outcome::OutOfBudget => Err(Error::NotFound(format!("search budget exhausted for {what}"))),
    }
}

fn cycles_of(edges: &[(u32, u32)], chosen: &[usize]) -> Result<Vec<CycleSeq>> {
    let base: Vec<(u32, u32)> = chosen.iter().map(|&i| edges[i]).collect();
    edges_to_cycles(&base)
        .iter()
        .map(|c| CycleSeq::new(c.iter().map(|&v| Vertex::res(&[v])).collect()))
        .collect()
}

fn frame_paired(k: u32, g: u32, u: u32, seed: u64, budget: Budget) -> Result<Vec<FactorClass>> {
    let n = g * u;
    let half = n / 2;
    let mut edges = Vec::new();
    let mut orbit = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let d = b - a;
            let dd = d.min(n - d);
            if d % u == 0 || dd == half {
                continue;
            }
            edges.push((a, b));
            orbit.push(dd);
        }
    }
    let (orbit, norbits) = compact(&orbit);
    let raw: Vec<u32> = (0..n).filter(|v| v % u != 0).map(|v| v % half).collect();
    let (sid, nslots) = compact(&raw);
    let mut it = sid.into_iter();
    let slot = (0..n).map(|v| (v % u != 0).then(|| it.next().unwrap())).collect();
    let problem = CoverProblem {
        vertices: n as usize,
        orbit_quota: vec![1; norbits],
        orbit,
        edges: edges.clone(),
        slot_quota: vec![1; nslots],
        slot,
        cycle_len: k as usize,
    };
    let chosen = run(&problem, seed, budget, &format!("(k,g,u)=({k},{g},{u}) frame"))?;
    let h = cycles_of(&edges, &chosen)?;
    let moduli = [n];
    let mut f0 = h.clone();
    f0.extend(h.iter().map(|c| c.translate(&Coords::new(&[half]), &moduli)));
    Ok((0..half)
        .map(|j| {
            FactorClass::new(
                ClassKind::Holey {
                    k: k as usize,
                    hole: (j % u) as usize,
                },
                f0.iter().map(|c| c.translate(&Coords::new(&[j]), &moduli)).collect(),
            )
        })
        .collect())
}

/// Vertex `(i, x)` of `Z_u x Z_g` is `i + u x`; part `i` is `{i + u x}`.
/// One base holey factor per part (searched jointly, one vertex copy per
/// part), each developed under `x -> x + 2`.
fn frame_layered(k: u32, g: u32, u: u32, seed: u64, budget: Budget) -> Result<Vec<FactorClass>> {
    let n = g * u;
    let shift = |v: u32, dx: u32| (v % u) + u * ((v / u + dx) % g);
    let mut base_edges = Vec::new();
    let mut key = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if a % u == b % u {
                continue;
            }
            let rep = (0..g)
                .step_by(2)
                .map(|dx| {
                    let (p, q) = (shift(a, dx), shift(b, dx));
                    (p.min(q), p.max(q))
                })
                .min()
                .unwrap();
            base_edges.push((a, b));
            key.push(rep.0 * n + rep.1);
        }
    }
    let (key, norbits) = compact(&key);
    let mut edges = Vec::new();
    let mut orbit = Vec::new();
    for hole in 0..u {
        for (i, &(a, b)) in base_edges.iter().enumerate() {
            if a % u != hole && b % u != hole {
                edges.push((hole * n + a, hole * n + b));
                orbit.push(key[i]);
            }
        }
    }
    let total = (u * n) as usize;
    let slot: Vec<Option<u32>> = (0..total as u32)
        .map(|w| ((w % n) % u != w / n).then_some(w))
        .collect();
    let (sid, nslots) = compact(&slot.iter().flatten().copied().collect::<Vec<_>>());
    let mut it = sid.into_iter();
    let slot = slot.iter().map(|s| s.map(|_| it.next().unwrap())).collect();
    let problem = CoverProblem {
        vertices: total,
        orbit_quota: vec![1; norbits],
        orbit,
        edges: edges.clone(),
        slot_quota: vec![1; nslots],
        slot,
        cycle_len: k as usize,
    };
    let chosen = run(&problem, seed, budget, &format!("(k,g,u)=({k},{g},{u}) frame"))?;
    let mut per: Vec<Vec<(u32, u32)>> = vec![Vec::new(); u as usize];
    for &i in &chosen {
        let (a, b) = edges[i];
        per[(a / n) as usize].push((a % n, b % n));
    }
    let mut out = Vec::new();
    for (hole, es) in per.iter().enumerate() {
        let idx: Vec<usize> = (0..es.len()).collect();
        let f0 = cycles_of(es, &idx)?;
        for dx in (0..g).step_by(2) {
            out.push(FactorClass::new(
                ClassKind::Holey { k: k as usize, hole },
                f0.iter()
                    .map(|c| {
                        c.map(|v| match v {
                            Vertex::Residue(cv) => Vertex::res(&[shift(cv.as_slice()[0], dx)]),
                            other => other.clone(),
                        })
                    })
                    .collect(),
            ));
        }
    }
    Ok(out)
}

/// Hamilton decomposition of `K_{2r+1}` on `Z_{2r} + {inf}`: the zigzag
/// `inf, 0, 1, -1, 2, -2, ...` rotated by `0..r`.
pub fn hamilton_decomposition(v: u32) -> Result<Certificate> {
    if v < 3 || v % 2 == 0 {
        return Err(Error::NecessaryFail(format!(
            "K_{v} has no Hamilton decomposition (needs odd order at least 3)"
        )));
    }
    let r = (v - 1) / 2;
    let m = 2 * r;
    let classes = (0..r)
        .map(|s| {
            let mut vs = vec![Vertex::Infinity];
            for i in 0..m as i64 {
                // 0, 1, -1, 2, -2, ... , r
                let x = if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) };
                vs.push(Vertex::res(&[(x + s as i64).rem_euclid(m as i64) as u32]));
            }
            Ok(FactorClass::new(ClassKind::Uniform(v as usize), vec![CycleSeq::new(vs)?]))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut vertices: Vec<Vertex> = (0..m).map(|x| Vertex::res(&[x])).collect();
    vertices.push(Vertex::Infinity);
    let cert = Certificate::new(
        HostGraph::complete(vertices),
        classes,
        Provenance::new("hamilton_zigzag").param("v", v),
    );
    crate::arcs::release(cert)
}

/// Necessary and sufficient conditions for a `C_k`-factorization of
/// `K_u[g]`, including the four exceptions.
pub fn resolvable_conditions(k: u32, u: u32, g: u32) -> Result<()> {
    let fail = |why: String| Err(Error::NecessaryFail(why));
    if k < 3 || u < 2 || g == 0 {
        return fail(format!("degenerate request (k,u,g)=({k},{u},{g})"));
    }
    if (g as u64 * (u as u64 - 1)) % 2 != 0 {
        return fail("g(u-1) is odd".into());
    }
    if (g * u) % k != 0 {
        return fail(format!("{k} does not divide gu = {}", g * u));
    }
    if u == 2 && k % 2 == 1 {
        return fail("odd cycles in a bipartite host".into());
    }
    if [(3, 3, 2), (3, 6, 2), (3, 3, 6), (6, 2, 6)].contains(&(k, u, g)) {
        return fail(format!("(k,u,g)=({k},{u},{g}) is a listed exception"));
    }
    Ok(())
}

/// `C_k`-factorization of `K_u[g]` (complete graph when `g = 1`).
///
/// Hamilton decompositions use the zigzag; everything else searches all
/// factors at once over one copy of the vertex set per factor.
pub fn search_resolvable(k: u32, u: u32, g: u32, seed: u64, budget: Budget) -> Result<Certificate> {
    resolvable_conditions(k, u, g)?;
    let v = u * g;
    if g == 1 && k == v {
        return hamilton_decomposition(v);
    }
    if g == 1 {
        let half = Budget { nodes: budget.nodes / 2, wall: budget.wall / 2 };
        if let Some(cert) = bicyclic(k, v, seed, half)? {
            return Ok(cert);
        }
        if let Some(cert) = one_rotational(k, v, seed, half)? {
            return Ok(cert);
        }
    }
    let part_of = |x: u32| x / g;
    let base: Vec<(u32, u32)> = (0..v)
        .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
        .filter(|&(a, b)| part_of(a) != part_of(b))
        .collect();
    let count = g * (u - 1) / 2;
    let per = search_layers(
        v,
        &base,
        count,
        k,
        seed,
        budget,
        &format!("C_{k}-factorization of K_{u}[{g}]"),
    )?;
    let factors = per
        .iter()
        .map(|cs| FactorClass::new(ClassKind::Uniform(k as usize), cs.clone()))
        .collect();
    let host = if g == 1 {
        HostGraph::complete((0..v).map(|x| Vertex::res(&[x])).collect())
    } else {
        HostGraph::Multipartite {
            parts: (0..u)
                .map(|i| (0..g).map(|j| Vertex::res(&[i * g + j])).collect())
                .collect(),
        }
    };
    let cert = Certificate::new(
        host,
        factors,
        Provenance::new("resolvable_search")
            .param("k", k)
            .param("u", u)
            .param("g", g),
    );
    let report = check_certificate(&cert);
    if !report.is_valid() {
        return Err(Error::Unverified(format!("resolvable search: {report}")));
    }
    Ok(cert)
}

/// Depth-first state for [`one_rotational`]. Points are `0..n` with
/// `n = 2r`; the base class is fixed by `x -> x + r`.
struct Rotational {
    n: u32,
    r: u32,
    k: u32,
    used: Vec<bool>,
    diff: Vec<bool>,
    order: Vec<u32>,
    nodes: u64,
    cap: u64,
}

impl Rotational {
    fn class(&self, a: u32, b: u32) -> u32 {
        let d = (b + self.n - a) % self.n;
        d.min(self.n - d)
    }

    fn take(&mut self, x: u32, on: bool) {
        self.used[x as usize] = on;
        self.used[((x + self.r) % self.n) as usize] = on;
    }

    /// Extends the path through infinity, then the paired cycles. `None`
    /// when the node cap is hit.
    fn path(&mut self, path: &mut Vec<u32>, cycles: &mut Vec<Vec<u32>>) -> Option<bool> {
        if path.len() as u32 == (self.k - 1) / 2 {
            return self.cycles(cycles);
        }
        let last = *path.last().unwrap();
        for i in 0..self.order.len() {
            let b = self.order[i];
            let d = self.class(last, b);
            if self.used[b as usize] || d == self.r || self.diff[d as usize] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.cap {
                return None;
            }
            self.take(b, true);
            self.diff[d as usize] = true;
            path.push(b);
            let r = self.path(path, cycles);
            if r == Some(true) {
                return r;
            }
            path.pop();
            self.diff[d as usize] = false;
            self.take(b, false);
            r?;
        }
        Some(false)
    }

    fn cycles(&mut self, cycles: &mut Vec<Vec<u32>>) -> Option<bool> {
        let Some(a) = (0..self.n).find(|&x| !self.used[x as usize]) else {
            return Some(true);
        };
        self.take(a, true);
        let mut cur = vec![a];
        let r = self.grow(&mut cur, cycles);
        if r == Some(true) {
            return r;
        }
        self.take(a, false);
        r
    }

    fn grow(&mut self, cur: &mut Vec<u32>, cycles: &mut Vec<Vec<u32>>) -> Option<bool> {
        let last = *cur.last().unwrap();
        if cur.len() as u32 == self.k {
            let d = self.class(last, cur[0]);
            if d == self.r || self.diff[d as usize] {
                return Some(false);
            }
            self.diff[d as usize] = true;
            cycles.push(cur.clone());
            let r = self.cycles(cycles);
            if r == Some(true) {
                return r;
            }
            cycles.pop();
            self.diff[d as usize] = false;
            return r;
        }
        for i in 0..self.order.len() {
            let b = self.order[i];
            let d = self.class(last, b);
            if self.used[b as usize] || d == self.r || self.diff[d as usize] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.cap {
                return None;
            }
            self.take(b, true);
            self.diff[d as usize] = true;
            cur.push(b);
            let r = self.grow(cur, cycles);
            if r == Some(true) {
                return r;
            }
            cur.pop();
            self.diff[d as usize] = false;
            self.take(b, false);
            r?;
        }
        Some(false)
    }
}

/// C_k-factorization of K_v, v odd, with an automorphism fixing one point
/// and cycling the other `v - 1`. One base class on `Z_{v-1}` plus
/// infinity, fixed by adding `(v-1)/2`, is developed over `Z_{(v-1)/2}`.
/// Restarts with fresh orderings until the budget runs out; `Ok(None)`
/// when nothing was found.
pub fn one_rotational(k: u32, v: u32, seed: u64, budget: Budget) -> Result<Option<Certificate>> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    if v % 2 == 0 || k % 2 == 0 || v % k != 0 || k < 3 || v <= k {
        return Ok(None);
    }
    let r = (v - 1) / 2;
    let n = 2 * r;
    let start = std::time::Instant::now();
    let mut spent = 0u64;
    let mut cap = 20_000u64;
    let mut round = 0u64;
    loop {
        if spent >= budget.nodes || start.elapsed() >= budget.wall {
            return Ok(None);
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed.wrapping_add(round));
        round += 1;
        let mut order: Vec<u32> = (1..n).collect();
        order.shuffle(&mut rng);
        let mut st = Rotational {
            n,
            r,
            k,
            used: vec![false; n as usize],
            diff: vec![false; r as usize + 1],
            order,
            nodes: 0,
            cap: cap.min(budget.nodes - spent),
        };
        st.take(0, true);
        let mut path = vec![0];
        let mut cycles = Vec::new();
        let found = st.path(&mut path, &mut cycles);
        spent += st.nodes;
        match found {
            Some(true) => return finish_rotational(k, v, &path, &cycles).map(Some),
            // without a cap hit the whole space was seen
            Some(false) => return Ok(None),
            None => cap = cap.saturating_mul(2).min(100_000),
        }
    }
}

/// Depth-first state for [`bicyclic`]. Point `p < 2r` is `(p mod r, p / r)`
/// in `Z_r x Z_2`; point `2r` is infinity. Every edge orbit under `Z_r` has
/// length `r` (r odd), so a base class meeting each orbit once develops
/// into `r` classes.
struct Bicyclic {
    r: u32,
    k: u32,
    used: Vec<bool>,
    orbit: Vec<bool>,
    order: Vec<u32>,
    nodes: u64,
    cap: u64,
}

impl Bicyclic {
    fn orbit_of(&self, a: u32, b: u32) -> usize {
        let r = self.r;
        let inf = 2 * r;
        if a == inf || b == inf {
            let p = if a == inf { b } else { a };
            return (2 * r - 1 + p / r) as usize;
        }
        let (sa, sb) = (a / r, b / r);
        let (xa, xb) = (a % r, b % r);
        if sa == sb {
            let d = (xb + r - xa) % r;
            (sa * (r - 1) / 2 + d.min(r - d) - 1) as usize
        } else {
            let d = if sa == 0 { (xb + r - xa) % r } else { (xa + r - xb) % r };
            (r - 1 + d) as usize
        }
    }

    fn next_cycle(&mut self, cycles: &mut Vec<Vec<u32>>) -> Option<bool> {
        let Some(a) = self.order.iter().copied().find(|&x| !self.used[x as usize]) else {
            return Some(true);
        };
        self.used[a as usize] = true;
        let mut cur = vec![a];
        let r = self.grow(&mut cur, cycles);
        if r != Some(true) {
            self.used[a as usize] = false;
        }
        r
    }

    fn grow(&mut self, cur: &mut Vec<u32>, cycles: &mut Vec<Vec<u32>>) -> Option<bool> {
        let last = *cur.last().unwrap();
        if cur.len() as u32 == self.k {
            let o = self.orbit_of(last, cur[0]);
            if self.orbit[o] {
                return Some(false);
            }
            self.orbit[o] = true;
            cycles.push(cur.clone());
            let r = self.next_cycle(cycles);
            if r == Some(true) {
                return r;
            }
            cycles.pop();
            self.orbit[o] = false;
            return r;
        }
        for i in 0..self.order.len() {
            let b = self.order[i];
            if self.used[b as usize] {
                continue;
            }
            let o = self.orbit_of(last, b);
            if self.orbit[o] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.cap {
                return None;
            }
            self.used[b as usize] = true;
            self.orbit[o] = true;
            cur.push(b);
            let r = self.grow(cur, cycles);
            if r == Some(true) {
                return r;
            }
            cur.pop();
            self.orbit[o] = false;
            self.used[b as usize] = false;
            r?;
        }
        Some(false)
    }
}

/// C_k-factorization of K_v on `Z_r x Z_2` plus infinity, `r = (v-1)/2`
/// odd: one base class developed over `Z_r`. Same budget and restart rules
/// as [`one_rotational`].
pub fn bicyclic(k: u32, v: u32, seed: u64, budget: Budget) -> Result<Option<Certificate>> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    if v % 2 == 0 || k < 3 || v % k != 0 || v <= k || ((v - 1) / 2) % 2 == 0 {
        return Ok(None);
    }
    let r = (v - 1) / 2;
    let inf = 2 * r;
    let start = std::time::Instant::now();
    let mut spent = 0u64;
    let mut cap = 20_000u64;
    let mut round = 0u64;
    loop {
        if spent >= budget.nodes || start.elapsed() >= budget.wall {
            return Ok(None);
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed.wrapping_add(round));
        round += 1;
        // infinity first so the first cycle goes through it
        let mut order: Vec<u32> = (0..inf).collect();
        order.shuffle(&mut rng);
        order.insert(0, inf);
        let mut st = Bicyclic {
            r,
            k,
            used: vec![false; v as usize],
            orbit: vec![false; v as usize],
            order,
            nodes: 0,
            cap: cap.min(budget.nodes - spent),
        };
        let mut cycles = Vec::new();
        let found = st.next_cycle(&mut cycles);
        spent += st.nodes;
        match found {
            Some(true) => break finish_bicyclic(k, v, &cycles).map(Some),
            Some(false) => break Ok(None),
            None => cap = cap.saturating_mul(2).min(100_000),
        }
    }
}

fn finish_bicyclic(k: u32, v: u32, base: &[Vec<u32>]) -> Result<Certificate> {
    let r = (v - 1) / 2;
    let inf = 2 * r;
    let point = |p: u32, s: u32| {
        if p == inf {
            Vertex::Infinity
        } else {
            Vertex::res(&[(p % r + s) % r + r * (p / r)])
        }
    };
    let classes = (0..r)
        .map(|s| {
            let cs = base
                .iter()
                .map(|c| CycleSeq::new(c.iter().map(|&p| point(p, s)).collect()))
                .collect::<Result<Vec<_>>>()?;
            Ok(FactorClass::new(ClassKind::Uniform(k as usize), cs))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut vertices = vec![Vertex::Infinity];
    vertices.extend((0..inf).map(|x| Vertex::res(&[x])));
    let cert = Certificate::new(
        HostGraph::complete(vertices),
        classes,
        Provenance::new("bicyclic").param("k", k).param("v", v),
    );
    let report = check_certificate(&cert);
    if !report.is_valid() {
        return Err(Error::Unverified(format!("bicyclic search: {report}")));
    }
    Ok(cert)
}

/// Develops the base class found by [`one_rotational`].
fn finish_rotational(k: u32, v: u32, path: &[u32], cycles: &[Vec<u32>]) -> Result<Certificate> {
    let r = (v - 1) / 2;
    let n = 2 * r;
    let at = |x: u32, s: u32| Vertex::res(&[(x + s) % n]);
    let classes = (0..r)
        .map(|s| {
            let mut inf = vec![Vertex::Infinity];
            inf.extend(path.iter().map(|&x| at(x, s)));
            inf.extend(path.iter().rev().map(|&x| at(x, s + r)));
            let mut cs = vec![CycleSeq::new(inf)?];
            for c in cycles {
                for shift in [s, s + r] {
                    cs.push(CycleSeq::new(c.iter().map(|&x| at(x, shift)).collect())?);
                }
            }
            Ok(FactorClass::new(ClassKind::Uniform(k as usize), cs))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut vertices = vec![Vertex::Infinity];
    vertices.extend((0..n).map(|x| Vertex::res(&[x])));
    let cert = Certificate::new(
        HostGraph::complete(vertices),
        classes,
        Provenance::new("one_rotational").param("k", k).param("v", v),
    );
    let report = check_certificate(&cert);
    if !report.is_valid() {
        return Err(Error::Unverified(format!("1-rotational search: {report}")));
    }
    Ok(cert)
}

/// Splits the simple graph `base` on `0..v` into `count` factors of
/// `cycle_len`-cycles, searching all factors at once over one copy of the
/// vertex set per factor. Returns the cycles of each factor, vertices as
/// one-coordinate residues.
pub fn search_layers(
    v: u32,
    base: &[(u32, u32)],
    count: u32,
    cycle_len: u32,
    seed: u64,
    budget: Budget,
    what: &str,
) -> Result<Vec<Vec<CycleSeq>>> {
    if base.len() as u64 != count as u64 * v as u64 {
        return Err(Error::RejectCounts(format!(
            "{} edges cannot form {count} 2-factors on {v} vertices",
            base.len()
        )));
    }
    let mut edges = Vec::new();
    let mut orbit = Vec::new();
    for f in 0..count {
        for (i, &(a, b)) in base.iter().enumerate() {
            edges.push((f * v + a, f * v + b));
            orbit.push(i as u32);
        }
    }
    let total = (count * v) as usize;
    let problem = CoverProblem {
        vertices: total,
        orbit_quota: vec![1; base.len()],
        orbit,
        edges: edges.clone(),
        slot: (0..total as u32).map(Some).collect(),
        slot_quota: vec![1; total],
        cycle_len: cycle_len as usize,
    };
    let chosen = run(&problem, seed, budget, what)?;
    let mut per: Vec<Vec<(u32, u32)>> = vec![Vec::new(); count as usize];
    for &i in &chosen {
        let (a, b) = edges[i];
        per[(a / v) as usize].push((a % v, b % v));
    }
    per.iter()
        .map(|es| {
            let idx: Vec<usize> = (0..es.len()).collect();
            cycles_of(es, &idx)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn bicyclic_kirkman_and_pentagons() {
        for (k, v) in [(3, 15), (3, 39), (5, 15), (3, 27)] {
            let c = super::bicyclic(k, v, 1, super::Budget::default())
                .unwrap()
                .unwrap_or_else(|| panic!("no bicyclic C_{k}-factorization of K_{v}"));
            assert_eq!(c.classes.len() as u32, (v - 1) / 2);
        }
    }

    #[test]
    fn one_rotational_small_and_large() {
        for (k, v) in [(3, 9), (5, 15), (5, 45), (7, 21)] {
            let c = super::one_rotational(k, v, 1, super::Budget::default())
                .unwrap()
                .unwrap_or_else(|| panic!("no 1-rotational C_{k}-factorization of K_{v}"));
            assert_eq!(c.classes.len() as u32, (v - 1) / 2);
        }
    }

    use super::*;

    #[test]
    fn small_frames() {
        let c = search_frame(3, 2, 4, 0, Budget::default()).unwrap();
        assert_eq!(c.classes.len(), 4);
        let c = search_frame(3, 6, 4, 0, Budget::default()).unwrap();
        assert_eq!(c.classes.len(), 12);
        assert!(matches!(search_frame(6, 6, 3, 0, Budget::default()), Err(Error::NecessaryFail(_))));
        assert!(matches!(search_frame(3, 3, 4, 0, Budget::default()), Err(Error::NecessaryFail(_))));
    }

    #[test]
    fn zigzag() {
        for v in [3, 5, 9, 11] {
            assert_eq!(hamilton_decomposition(v).unwrap().classes.len() as u32, (v - 1) / 2);
        }
    }

    #[test]
    fn resolvable_small() {
        assert_eq!(search_resolvable(5, 5, 1, 0, Budget::default()).unwrap().classes.len(), 2);
        assert_eq!(search_resolvable(9, 9, 1, 0, Budget::default()).unwrap().classes.len(), 4);
        assert_eq!(search_resolvable(3, 9, 1, 0, Budget::default()).unwrap().classes.len(), 4);
        assert!(matches!(
            search_resolvable(3, 3, 2, 0, Budget::default()),
            Err(Error::NecessaryFail(_))
        ));
    }
}
