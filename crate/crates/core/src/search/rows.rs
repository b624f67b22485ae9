//! Base-row tables and lifted Hamilton cycles for factorizations of
//! `Cay(Z_m x Z_n, {(i,a), (-i,-a) : a in D})`.
//!
//! A forward increment `a` stands for the edges `(x,y) ~ (x+i, y+a)`.
//!
//! * Row tables give `C_m`-factors: row `j` is the cycle
//!   `((0,0), (i,b_1), ..., ((m-1)i, b_{m-1}))` developed by `(-, +1 mod n)`,
//!   where `b` are prefix sums of the increments.
//! * Lifts give `C_n`-factors: a Hamilton cycle of the increment multigraph
//!   on `Z_n`, labelled with x-steps `+-i`, developed by `(+i mod m, -)`.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{gcd, ClassKind, Coords, CycleSeq, DevelopmentRule, FactorClass, Vertex};

use super::Budget;

/// Increments of base rows: `rows[j][t]` is the step from column `t` to
/// column `t+1` (indices mod `m`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseRowTable {
    pub m: u32,
    pub n: u32,
    /// x-step between consecutive cycle vertices.
    pub x_step: u32,
    pub rows: Vec<Vec<u32>>,
}

impl BaseRowTable {
    /// Table from the `b_{j,1..m-1}` partial sums (the closing step is
    /// implied).
    pub fn from_partial_sums(m: u32, n: u32, b: &[Vec<i64>]) -> Result<Self> {
        let rows = b
            .iter()
            .map(|row| {
                if row.len() != m as usize - 1 {
                    return Err(Error::RejectRow(format!(
                        "row has {} entries, need {}",
                        row.len(),
                        m - 1
                    )));
                }
                let mut prev = 0i64;
                let mut inc = Vec::with_capacity(m as usize);
                for &x in row.iter().chain(std::iter::once(&0)) {
                    inc.push((x - prev).rem_euclid(n as i64) as u32);
                    prev = x;
                }
                Ok(inc)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BaseRowTable {
            m,
            n,
            x_step: 1,
            rows,
        })
    }

    /// Multiset of increments in column `t`, sorted.
    pub fn column(&self, t: usize) -> Vec<u32> {
        let mut c: Vec<u32> = self.rows.iter().map(|r| r[t]).collect();
        c.sort_unstable();
        c
    }

    /// The consumed increment multiset if every column agrees, else `None`.
    pub fn consumed(&self) -> Option<Vec<u32>> {
        let first = self.column(0);
        (1..self.m as usize)
            .all(|t| self.column(t) == first)
            .then_some(first)
    }

    pub fn base_cycle(&self, j: usize) -> CycleSeq {
        let mut y = 0u32;
        let mut vs = Vec::with_capacity(self.m as usize);
        for t in 0..self.m {
            vs.push(Vertex::res(&[(t * self.x_step) % self.m, y]));
            y = (y + self.rows[j][t as usize]) % self.n;
        }
        CycleSeq::new_unchecked(vs)
    }
}

/// One `C_m`-factor per row, developed by `(-, +1 mod n)`.
pub fn develop_rows(table: &BaseRowTable) -> Result<Vec<FactorClass>> {
    let (m, n) = (table.m, table.n);
    if m < 3 || gcd(table.x_step % m, m) != 1 {
        return Err(Error::RejectRow(format!(
            "x-step {} does not generate Z_{m}",
            table.x_step
        )));
    }
    if table.consumed().is_none() {
        return Err(Error::RejectRow(
            "columns consume different increment multisets".into(),
        ));
    }
    let rule = DevelopmentRule::new(&[m, n], &[None, Some(1)], n as usize)?;
    let mut out = Vec::with_capacity(table.rows.len());
    for (j, row) in table.rows.iter().enumerate() {
        if row.len() != m as usize {
            return Err(Error::RejectRow(format!("row {j} has {} increments", row.len())));
        }
        let s: u64 = row.iter().map(|&x| x as u64).sum();
        if s % n as u64 != 0 {
            return Err(Error::RejectRow(format!("row {j} does not close")));
        }
        let base = CycleSeq::new(table.base_cycle(j).vertices().to_vec())
            .map_err(|e| Error::RejectRow(e.to_string()))?;
        out.push(crate::model::develop_cycles(ClassKind::Uniform(m as usize), &[base], &rule));
    }
    Ok(out)
}

/// Forward increments of the symmetric y-class set `s`: every element of
/// `s` once (a pair `+-a` contributes `a` and `-a`, zero contributes once).
pub fn forward_increments(n: u32, s: &[i64]) -> Vec<u32> {
    let mut d: Vec<u32> = s.iter().map(|&a| a.rem_euclid(n as i64) as u32).collect();
    d.sort_unstable();
    d.dedup();
    d
}

/// Finds a row table with `rows` rows consuming exactly the increment
/// multiset `d`. Columns `0..m-2` are fixed permutations chosen by the
/// seed; the last two columns are searched.
pub fn search_base_rows(
    m: u32,
    n: u32,
    x_step: u32,
    d: &[u32],
    rows: usize,
    seed: u64,
    budget: Budget,
) -> Result<BaseRowTable> {
    let r = d.len();
    if r == 0 || m < 3 {
        return Err(Error::RejectParams("empty row request".into()));
    }
    if rows != r {
        return Err(Error::NotFound(format!(
            "{r} increments need {r} rows, {rows} requested"
        )));
    }
    // can any m increments from d sum to 0 mod n?
    let mut reach = vec![false; n as usize];
    reach[0] = true;
    for _ in 0..m {
        let mut next = vec![false; n as usize];
        for (y, _) in reach.iter().enumerate().filter(|(_, &b)| b) {
            for &a in d {
                next[(y + a as usize) % n as usize] = true;
            }
        }
        reach = next;
    }
    if !reach[0] {
        return Err(Error::NotFound(format!(
            "no closed row of {m} increments from {d:?} mod {n}"
        )));
    }
    let total: u64 = d.iter().map(|&x| x as u64).sum::<u64>() * m as u64;
    if total % n as u64 != 0 {
        return Err(Error::NotFound(format!(
            "rows cannot close: {m} times the increment sum is not 0 mod {n}"
        )));
    }
    let start = Instant::now();
    let mut nodes = 0u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempt = 0u64;
    while nodes < budget.nodes && start.elapsed() < budget.wall {
        let mut rows = vec![Vec::with_capacity(m as usize); r];
        for t in 0..m as usize - 2 {
            let mut col: Vec<u32> = d.to_vec();
            if t > 0 || attempt > 0 {
                col.shuffle(&mut rng);
            }
            for (row, &a) in rows.iter_mut().zip(&col) {
                row.push(a);
            }
        }
        attempt += 1;
        let need: Vec<u32> = rows
            .iter()
            .map(|row| {
                let s: u64 = row.iter().map(|&x| x as u64).sum();
                ((n as u64 - s % n as u64) % n as u64) as u32
            })
            .collect();
        let mut pool: Vec<u32> = d.to_vec();
        pool.sort_unstable();
        let mut a = vec![0u32; r];
        let mut b = vec![0u32; r];
        let mut used_a = vec![false; r];
        let mut used_b = vec![false; r];
        if last_two(&need, &pool, 0, &mut a, &mut b, &mut used_a, &mut used_b, n, &mut nodes, budget.nodes / 8 + 1) {
            for j in 0..r {
                rows[j].push(a[j]);
                rows[j].push(b[j]);
            }
            return Ok(BaseRowTable {
                m,
                n,
                x_step,
                rows,
            });
        }
    }
    Err(Error::NotFound(format!(
        "no base rows for increments {d:?} mod {n} within budget"
    )))
}

#[allow(clippy::too_many_arguments)]
fn last_two(
    need: &[u32],
    pool: &[u32],
    j: usize,
    a: &mut [u32],
    b: &mut [u32],
    used_a: &mut [bool],
    used_b: &mut [bool],
    n: u32,
    nodes: &mut u64,
    limit: u64,
) -> bool {
    *nodes += 1;
    if *nodes % limit == 0 {
        return false;
    }
    if j == need.len() {
        return true;
    }
    for p in 0..pool.len() {
        if used_a[p] || (p > 0 && pool[p] == pool[p - 1] && !used_a[p - 1]) {
            continue;
        }
        let want = (need[j] + n - pool[p]) % n;
        let Some(q) = (0..pool.len()).find(|&q| !used_b[q] && pool[q] == want) else {
            continue;
        };
        used_a[p] = true;
        used_b[q] = true;
        a[j] = pool[p];
        b[j] = want;
        if last_two(need, pool, j + 1, a, b, used_a, used_b, n, nodes, limit) {
            return true;
        }
        used_a[p] = false;
        used_b[q] = false;
    }
    false
}

/// Hamilton cycle of the increment multigraph on `Z_n` with x-steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    /// `(y, a, e)`: the step leaves level `y`, uses the increment-`a` edge
    /// between levels `y` and `y+a` (for `e = +1`) or `y-a` and `y` (for
    /// `e = -1`).
    pub steps: Vec<(u32, u32, i8)>,
}

/// Decomposes the increments `d` (forward, non-zero, a multiset) into
/// `|d|` lifted Hamilton cycles whose x-steps sum to `0 mod m`, and returns
/// the developed `C_n`-factors of `Cay(Z_m x Z_n, ...)` with x-step `x_step`.
pub fn lift_factorization(
    m: u32,
    n: u32,
    x_step: u32,
    d: &[u32],
    seed: u64,
    budget: Budget,
) -> Result<Vec<FactorClass>> {
    if d.iter().any(|&a| a % n == 0) {
        return Err(Error::RejectParams(
            "lifted Hamilton cycles cannot use increment 0".into(),
        ));
    }
    if gcd(x_step % m, m) != 1 {
        return Err(Error::RejectParams(format!("x-step {x_step} does not generate Z_{m}")));
    }
    let lifts = search_lifts(m, n, d, seed, budget)?;
    let rule = DevelopmentRule::new(&[m, n], &[Some(x_step % m), None], m as usize)?;
    lifts
        .iter()
        .map(|l| {
            let mut x = 0i64;
            let mut vs = Vec::with_capacity(n as usize);
            for &(y, _, e) in &l.steps {
                vs.push(Vertex::res(&[x.rem_euclid(m as i64) as u32, y]));
                x += e as i64 * x_step as i64;
            }
            let c = CycleSeq::new(vs)?;
            Ok(crate::model::develop_cycles(ClassKind::Uniform(n as usize), &[c], &rule))
        })
        .collect()
}

struct LiftSearch<'a> {
    m: i64,
    n: u32,
    /// Edge list: `(lo, hi, a)` meaning levels `lo` and `lo+a`.
    edges: &'a [(u32, u32, u32)],
    inc: Vec<Vec<usize>>,
    used: Vec<bool>,
    visited: Vec<bool>,
    nodes: u64,
    limit: u64,
    start: Instant,
    wall: std::time::Duration,
    rng: ChaCha8Rng,
}

impl LiftSearch<'_> {
    /// Extends the current cycle; `path` holds steps so far.
    fn extend(&mut self, y: u32, path: &mut Vec<(u32, u32, i8)>, esum: i64, out: &mut Vec<Lift>, total: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.limit || (self.nodes % 4096 == 0 && self.start.elapsed() > self.wall) {
            return None;
        }
        let n = self.n as usize;
        let left = n - path.len();
        // x-sum must still be reachable: each remaining step moves it by 1
        let reach = (0..=left as i64).any(|k| (esum + left as i64 - 2 * k).rem_euclid(self.m) == 0);
        if !reach {
            return Some(false);
        }
        let mut opts: Vec<(usize, u32, i8)> = Vec::new();
        for &ei in &self.inc[y as usize] {
            if self.used[ei] {
                continue;
            }
            let (lo, hi, _) = self.edges[ei];
            let (to, e) = if lo == y { (hi, 1i8) } else { (lo, -1i8) };
            let closing = left == 1;
            if closing {
                if to == 0 && (esum + e as i64).rem_euclid(self.m) == 0 {
                    opts.push((ei, to, e));
                }
            } else if !self.visited[to as usize] {
                opts.push((ei, to, e));
            }
        }
        opts.shuffle(&mut self.rng);
        for (ei, to, e) in opts {
            self.used[ei] = true;
            path.push((y, self.edges[ei].2, e));
            if left == 1 {
                out.push(Lift { steps: path.clone() });
                let r = self.next_cycle(out, total);
                if r != Some(false) {
                    path.pop();
                    if r.is_none() {
                        self.used[ei] = false;
                        return None;
                    }
                    return Some(true);
                }
                out.pop();
            } else {
                self.visited[to as usize] = true;
                let r = self.extend(to, path, esum + e as i64, out, total);
                self.visited[to as usize] = false;
                if r != Some(false) {
                    path.pop();
                    if r.is_none() {
                        self.used[ei] = false;
                    }
                    return r;
                }
            }
            path.pop();
            self.used[ei] = false;
        }
        Some(false)
    }

    fn next_cycle(&mut self, out: &mut Vec<Lift>, total: usize) -> Option<bool> {
        if out.len() == total {
            return Some(true);
        }
        self.visited.iter_mut().for_each(|v| *v = false);
        self.visited[0] = true;
        let mut path = Vec::with_capacity(self.n as usize);
        let r = self.extend(0, &mut path, 0, out, total);
        if r == Some(false) {
            // restore visited marks of the finished cycle for the caller
            self.visited.iter_mut().for_each(|v| *v = true);
        }
        r
    }
}

fn search_lifts(m: u32, n: u32, d: &[u32], seed: u64, budget: Budget) -> Result<Vec<Lift>> {
    let mut edges = Vec::new();
    for &a in d {
        for y in 0..n {
            edges.push((y, (y + a) % n, a % n));
        }
    }
    let mut inc = vec![Vec::new(); n as usize];
    for (i, &(lo, hi, _)) in edges.iter().enumerate() {
        inc[lo as usize].push(i);
        inc[hi as usize].push(i);
    }
    let start = Instant::now();
    let mut limit = 50_000u64;
    let mut spent = 0u64;
    let mut s = seed;
    while spent < budget.nodes && start.elapsed() < budget.wall {
        let mut st = LiftSearch {
            m: m as i64,
            n,
            edges: &edges,
            inc: inc.clone(),
            used: vec![false; edges.len()],
            visited: vec![false; n as usize],
            nodes: 0,
            limit: limit.min(budget.nodes - spent),
            start,
            wall: budget.wall,
            rng: ChaCha8Rng::seed_from_u64(s),
        };
        let mut out = Vec::new();
        match st.next_cycle(&mut out, d.len()) {
            Some(true) => return Ok(out),
            Some(false) => {
                return Err(Error::NotFound(format!(
                    "no lifted Hamilton decomposition for increments {d:?} mod {n}"
                )))
            }
            None => {}
        }
        spent += st.nodes;
        s += 1;
        limit = limit * 3 / 2;
    }
    Err(Error::NotFound(format!(
        "search budget exhausted lifting increments {d:?} mod {n}"
    )))
}

/// Closed-form pair of `C_n`-factors on the increments `{d, -d}` with
/// `gcd(d, n) = 1` and odd `n >= m`: the cycle climbs `y = 0, d, 2d, ...`
/// with `(n+m)/2` forward and `(n-m)/2` backward x-steps; the second
/// factor negates the x-steps.
pub fn two_cn(m: u32, n: u32, d: u32) -> Result<Vec<FactorClass>> {
    if gcd(d % n, n) != 1 || n < m || n % 2 == 0 || m % 2 == 0 {
        return Err(Error::RejectParams(format!(
            "two C_n-factors need odd n >= m and gcd(d,n)=1: m={m} n={n} d={d}"
        )));
    }
    let back = ((n - m) / 2) as usize;
    let rule = DevelopmentRule::new(&[m, n], &[Some(1), None], m as usize)?;
    let mut out = Vec::new();
    for sign in [1i64, -1] {
        let mut x = 0i64;
        let mut vs = Vec::with_capacity(n as usize);
        for i in 0..n as usize {
            vs.push(Vertex::res(&[
                x.rem_euclid(m as i64) as u32,
                ((i as u64 * d as u64) % n as u64) as u32,
            ]));
            let e = if i < back { -1 } else { 1 };
            x += sign * e;
        }
        let c = CycleSeq::new(vs)?;
        out.push(crate::model::develop_cycles(ClassKind::Uniform(n as usize), &[c], &rule));
    }
    Ok(out)
}

/// Translates a class by `shift`.
pub fn shifted(c: &FactorClass, shift: &[u32], moduli: &[u32]) -> FactorClass {
    c.translate(&Coords::new(shift), moduli)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Certificate, HostGraph, Provenance};
    use crate::verify::check_certificate;

    fn conn(m: u32, n: u32, incs: &[u32]) -> Vec<Coords> {
        let mut c = Vec::new();
        for &a in incs {
            c.push(Coords::new(&[1, a % n]));
            c.push(Coords::new(&[m - 1, (n - a % n) % n]));
        }
        c
    }

    fn check(m: u32, n: u32, incs: &[u32], classes: Vec<FactorClass>) {
        let cert = Certificate::new(
            HostGraph::cayley(&[m, n], conn(m, n, incs)),
            classes,
            Provenance::new("test"),
        );
        let rep = check_certificate(&cert);
        assert!(rep.is_valid(), "{rep}");
    }

    #[test]
    fn partial_sum_rows_at_three() {
        // rows with b = (d, 2d, d, 2d) for m = 5, n = 9, d = 3 and the negation
        let t = BaseRowTable::from_partial_sums(5, 9, &[vec![3, 6, 3, 6], vec![-3, -6, -3, -6]]).unwrap();
        assert_eq!(t.consumed(), Some(vec![3, 6]));
        check(5, 9, &[3, 6], develop_rows(&t).unwrap());
    }

    #[test]
    fn searched_rows_tiny() {
        let t = search_base_rows(3, 7, 1, &[1, 2, 4], 3, 0, Budget::default()).unwrap();
        check(3, 7, &[1, 2, 4], develop_rows(&t).unwrap());
        let d = forward_increments(3, &[1, -1]);
        let t = search_base_rows(5, 3, 1, &d, 2, 0, Budget::default()).unwrap();
        check(5, 3, &d, develop_rows(&t).unwrap());
        // triangles of Cay(Z_3 x Z_5, {+-1} x {+-1}) would need three +-1 summing to 0 mod 5
        let d = forward_increments(5, &[1, -1]);
        assert!(matches!(
            search_base_rows(3, 5, 1, &d, 2, 0, Budget::default()),
            Err(Error::NotFound(_))
        ));
    }

    #[test]
    fn rows_match_class_count() {
        let d = forward_increments(9, &[3, -3, 4, -4]);
        assert!(matches!(
            search_base_rows(5, 9, 1, &d, 1, 0, Budget::default()),
            Err(Error::NotFound(_))
        ));
        let t = search_base_rows(5, 9, 1, &d, 4, 0, Budget::default()).unwrap();
        check(5, 9, &d, develop_rows(&t).unwrap());
    }

    #[test]
    fn rows_cannot_exceed_counting() {
        // one row for four increments is malformed input for develop_rows
        let t = BaseRowTable {
            m: 5,
            n: 9,
            x_step: 1,
            rows: vec![vec![3, 3, 3, 3, 6]],
        };
        assert!(develop_rows(&t).is_err());
    }

    #[test]
    fn closed_form_pair() {
        check(5, 9, &[2, 7], two_cn(5, 9, 2).unwrap());
        assert!(two_cn(5, 9, 3).is_err());
    }

    #[test]
    fn lifted_pair_with_common_factor() {
        let f = lift_factorization(3, 15, 1, &[3, 12, 4, 11], 0, Budget::default()).unwrap();
        assert_eq!(f.len(), 4);
        check(3, 15, &[3, 12, 4, 11], f);
    }
}
