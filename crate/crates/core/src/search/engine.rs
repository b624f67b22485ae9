//! Depth-first search for a set of vertex-disjoint `L`-cycles subject to
//! edge-orbit and vertex-slot quotas.
//!
//! Edges are grouped into orbits, each of which must be used exactly its
//! quota of times. Vertices are grouped into slots; each slot must have
//! exactly its quota of covered vertices, and covered vertices get degree 2.
//! Vertices without a slot stay uncovered. Branching always takes the most
//! constrained open item: a path end, an orbit or a slot.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct CoverProblem {
    pub vertices: usize,
    pub edges: Vec<(u32, u32)>,
    pub orbit: Vec<u32>,
    pub orbit_quota: Vec<u32>,
    pub slot: Vec<Option<u32>>,
    pub slot_quota: Vec<u32>,
    pub cycle_len: usize,
}

impl CoverProblem {
    /// Every vertex covered, every edge its own orbit with quota 0 or 1 as
    /// given by `allowed`.
    pub fn factor(vertices: usize, edges: Vec<(u32, u32)>, orbit: Vec<u32>, cycle_len: usize) -> Self {
        let norbits = orbit.iter().map(|&o| o as usize + 1).max().unwrap_or(0);
        CoverProblem {
            vertices,
            orbit_quota: vec![1; norbits],
            orbit,
            edges,
            slot: (0..vertices as u32).map(Some).collect(),
            slot_quota: vec![1; vertices],
            cycle_len,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub nodes: u64,
    pub wall: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            nodes: 10_000_000,
            wall: Duration::from_secs(60),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Chosen edge indices, sorted.
    Found(Vec<usize>),
    /// Search space exhausted without a solution.
    Exhausted,
    /// Node or time budget ran out.
    OutOfBudget,
}

struct State<'a> {
    p: &'a CoverProblem,
    inc: Vec<Vec<u32>>,
    orbit_edges: Vec<Vec<u32>>,
    slot_vertices: Vec<Vec<u32>>,
    deg: Vec<u8>,
    end: Vec<u32>,
    len: Vec<u32>,
    orbit_used: Vec<u32>,
    slot_used: Vec<u32>,
    chosen: Vec<u32>,
    nodes: u64,
    budget: Budget,
    start: Instant,
    rng: ChaCha8Rng,
    open_orbits: usize,
}

enum Step {
    Done,
    Fail,
    Branch(Vec<u32>),
}

impl<'a> State<'a> {
    fn ok(&self, e: u32) -> bool {
        let (a, b) = self.p.edges[e as usize];
        let o = self.p.orbit[e as usize] as usize;
        if self.orbit_used[o] >= self.p.orbit_quota[o] {
            return false;
        }
        let (ai, bi) = (a as usize, b as usize);
        if self.deg[ai] >= 2 || self.deg[bi] >= 2 {
            return false;
        }
        let fresh = |v: usize| -> Option<u32> {
            if self.deg[v] == 0 {
                self.p.slot[v]
            } else {
                None
            }
        };
        if self.deg[ai] == 0 && self.p.slot[ai].is_none() {
            return false;
        }
        if self.deg[bi] == 0 && self.p.slot[bi].is_none() {
            return false;
        }
        match (fresh(ai), fresh(bi)) {
            (Some(sa), Some(sb)) if sa == sb => {
                if self.slot_used[sa as usize] + 2 > self.p.slot_quota[sa as usize] {
                    return false;
                }
            }
            (sa, sb) => {
                for s in [sa, sb].into_iter().flatten() {
                    if self.slot_used[s as usize] >= self.p.slot_quota[s as usize] {
                        return false;
                    }
                }
            }
        }
        let l = self.p.cycle_len as u32;
        if self.end[ai] == b {
            self.len[ai] == l
        } else {
            self.len[ai] + self.len[bi] <= l
        }
    }

    fn options(&self, list: &[u32]) -> Vec<u32> {
        list.iter().copied().filter(|&e| self.ok(e)).collect()
    }

    /// Picks the most constrained open item.
    fn select(&self) -> Step {
        let mut best: Option<Vec<u32>> = None;
        let consider = |opts: Vec<u32>, need: usize, best: &mut Option<Vec<u32>>| -> bool {
            if opts.len() < need {
                return false;
            }
            let slack = opts.len() - need;
            if best.as_ref().map_or(true, |b| slack < b.len()) {
                *best = Some(opts);
            }
            true
        };
        // path ends must be extended
        for v in 0..self.p.vertices {
            if self.deg[v] == 1 {
                let o = self.options(&self.inc[v]);
                if !consider(o, 1, &mut best) {
                    return Step::Fail;
                }
                if best.as_ref().map_or(false, |b| b.len() <= 1) {
                    return Step::Branch(best.unwrap());
                }
            }
        }
        let mut open = false;
        for (o, es) in self.orbit_edges.iter().enumerate() {
            if self.orbit_used[o] < self.p.orbit_quota[o] {
                open = true;
                let opts = self.options(es);
                let need = (self.p.orbit_quota[o] - self.orbit_used[o]) as usize;
                if !consider(opts, need, &mut best) {
                    return Step::Fail;
                }
            }
        }
        for (s, vs) in self.slot_vertices.iter().enumerate() {
            if self.slot_used[s] < self.p.slot_quota[s] {
                open = true;
                let mut opts = Vec::new();
                for &v in vs {
                    if self.deg[v as usize] == 0 {
                        opts.extend(self.options(&self.inc[v as usize]));
                    }
                }
                opts.sort_unstable();
                opts.dedup();
                if !consider(opts, 1, &mut best) {
                    return Step::Fail;
                }
            }
        }
        match best {
            None if !open => Step::Done,
            None => Step::Fail,
            Some(b) => Step::Branch(b),
        }
    }

    fn apply(&mut self, e: u32) -> (u32, u32, u32, u32, u32, u32) {
        let (a, b) = self.p.edges[e as usize];
        let (ai, bi) = (a as usize, b as usize);
        for v in [ai, bi] {
            if self.deg[v] == 0 {
                if let Some(s) = self.p.slot[v] {
                    self.slot_used[s as usize] += 1;
                }
            }
        }
        self.deg[ai] += 1;
        self.deg[bi] += 1;
        let o = self.p.orbit[e as usize] as usize;
        self.orbit_used[o] += 1;
        if self.orbit_used[o] == self.p.orbit_quota[o] {
            self.open_orbits -= 1;
        }
        self.chosen.push(e);
        let ea = self.end[ai];
        let eb = self.end[bi];
        let saved = (ea, eb, self.end[ea as usize], self.end[eb as usize], self.len[ea as usize], self.len[eb as usize]);
        if ea != b {
            let l = self.len[ai] + self.len[bi];
            self.end[ea as usize] = eb;
            self.end[eb as usize] = ea;
            self.len[ea as usize] = l;
            self.len[eb as usize] = l;
        }
        saved
    }

    fn undo(&mut self, e: u32, saved: (u32, u32, u32, u32, u32, u32)) {
        let (a, b) = self.p.edges[e as usize];
        let (ea, eb, end_ea, end_eb, len_ea, len_eb) = saved;
        self.end[ea as usize] = end_ea;
        self.end[eb as usize] = end_eb;
        self.len[ea as usize] = len_ea;
        self.len[eb as usize] = len_eb;
        self.chosen.pop();
        let o = self.p.orbit[e as usize] as usize;
        if self.orbit_used[o] == self.p.orbit_quota[o] {
            self.open_orbits += 1;
        }
        self.orbit_used[o] -= 1;
        let (ai, bi) = (a as usize, b as usize);
        self.deg[ai] -= 1;
        self.deg[bi] -= 1;
        for v in [ai, bi] {
            if self.deg[v] == 0 {
                if let Some(s) = self.p.slot[v] {
                    self.slot_used[s as usize] -= 1;
                }
            }
        }
    }

    /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
    fn dfs(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget.nodes
            || (self.nodes % 4096 == 0 && self.start.elapsed() > self.budget.wall)
        {
            return None;
        }
        let mut opts = match self.select() {
            Step::Done => return Some(true),
            Step::Fail => return Some(false),
            Step::Branch(o) => o,
        };
        opts.shuffle(&mut self.rng);
        for e in opts {
            let saved = self.apply(e);
            match self.dfs() {
                Some(true) => return Some(true),
                None => {
                    self.undo(e, saved);
                    return None;
                }
                Some(false) => self.undo(e, saved),
            }
        }
        Some(false)
    }
}

/// Runs one deterministic search attempt.
pub fn solve(p: &CoverProblem, seed: u64, budget: Budget) -> Outcome {
    let mut inc = vec![Vec::new(); p.vertices];
    for (i, &(a, b)) in p.edges.iter().enumerate() {
        inc[a as usize].push(i as u32);
        inc[b as usize].push(i as u32);
    }
    let mut orbit_edges = vec![Vec::new(); p.orbit_quota.len()];
    for (i, &o) in p.orbit.iter().enumerate() {
        orbit_edges[o as usize].push(i as u32);
    }
    let mut slot_vertices = vec![Vec::new(); p.slot_quota.len()];
    for (v, s) in p.slot.iter().enumerate() {
        if let Some(s) = s {
            slot_vertices[*s as usize].push(v as u32);
        }
    }
    let mut st = State {
        p,
        inc,
        orbit_edges,
        slot_vertices,
        deg: vec![0; p.vertices],
        end: (0..p.vertices as u32).collect(),
        len: vec![1; p.vertices],
        orbit_used: vec![0; p.orbit_quota.len()],
        slot_used: vec![0; p.slot_quota.len()],
        chosen: Vec::new(),
        nodes: 0,
        budget,
        start: Instant::now(),
        rng: ChaCha8Rng::seed_from_u64(seed),
        open_orbits: p.orbit_quota.iter().filter(|&&q| q > 0).count(),
    };
    match st.dfs() {
        Some(true) => {
            let mut c: Vec<usize> = st.chosen.iter().map(|&e| e as usize).collect();
            c.sort_unstable();
            Outcome::Found(c)
        }
        Some(false) => Outcome::Exhausted,
        None => Outcome::OutOfBudget,
    }
}

/// Restarts with seeds `seed, seed+1, ...` and geometrically growing node
/// limits until a solution appears, the space is exhausted, or the overall
/// budget is spent.
pub fn solve_with_restarts(p: &CoverProblem, seed: u64, budget: Budget) -> Outcome {
    let start = Instant::now();
    let mut spent = 0u64;
    let mut limit = 20_000u64;
    let mut s = seed;
    loop {
        let left = budget.nodes.saturating_sub(spent);
        let elapsed = start.elapsed();
        if left == 0 || elapsed >= budget.wall {
            return Outcome::OutOfBudget;
        }
        let attempt = Budget {
            nodes: limit.min(left),
            wall: budget.wall - elapsed,
        };
        match solve(p, s, attempt) {
            Outcome::Found(c) => return Outcome::Found(c),
            Outcome::Exhausted => return Outcome::Exhausted,
            Outcome::OutOfBudget => {}
        }
        spent += attempt.nodes;
        s += 1;
        limit = limit.saturating_mul(3) / 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_factor_of_k6_minus_nothing() {
        // two disjoint triangles in K_6 using each of 6 chosen edges once
        let edges = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3)];
        let orbit: Vec<u32> = (0..edges.len() as u32).collect();
        let mut p = CoverProblem::factor(6, edges, orbit, 3);
        p.orbit_quota[6] = 0;
        match solve(&p, 0, Budget::default()) {
            Outcome::Found(c) => assert_eq!(c, vec![0, 1, 2, 3, 4, 5]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn impossible_is_exhausted() {
        // a 4-cycle cannot be split into triangles
        let edges = vec![(0, 1), (1, 2), (2, 3), (0, 3)];
        let p = CoverProblem::factor(4, edges, vec![0, 1, 2, 3], 3);
        assert_eq!(solve(&p, 0, Budget::default()), Outcome::Exhausted);
    }

    #[test]
    fn same_seed_same_answer() {
        let mut edges = Vec::new();
        for a in 0..9u32 {
            for b in a + 1..9 {
                edges.push((a, b));
            }
        }
        let n = edges.len() as u32;
        let mut p = CoverProblem::factor(9, edges, (0..n).collect(), 3);
        p.orbit_quota = vec![1; n as usize];
        // only 9 edges are used; orbits with quota 1 would force all 36, so
        // give each edge its own optional orbit via a shared pool instead
        p.orbit = vec![0; n as usize];
        p.orbit_quota = vec![9];
        let a = solve(&p, 7, Budget::default());
        let b = solve(&p, 7, Budget::default());
        assert!(matches!(a, Outcome::Found(_)));
        assert_eq!(a, b);
    }
}
