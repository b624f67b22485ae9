//! Factorizations of Cayley graphs on `Z_m x Z_n`: base-row tables, the
//! difference-class blocks they are assembled from, and the three
//! constructions that lift ARCS designs and frames into Cayley graphs.

use std::collections::BTreeMap;

use crate::arcs::release;
use crate::error::{Error, Result};
use crate::model::{
    gcd, Certificate, ClassKind, Coords, CycleSeq, FactorClass, HostGraph, Provenance, Vertex,
};
use crate::search::rows::{lift_factorization, search_base_rows, two_cn};
use crate::search::{factor_orbit, Budget};
use crate::verify::check_alignment;

pub use crate::search::rows::{develop_rows, BaseRowTable};

/// Connection set `{(x, a), (-x, -a)}` for every forward increment `a`.
pub fn step_connection(m: u32, n: u32, x: u32, increments: &[u32]) -> Vec<Coords> {
    let mut c: Vec<Coords> = increments
        .iter()
        .flat_map(|&a| {
            [
                Coords::new(&[x % m, a % n]),
                Coords::new(&[(m - x % m) % m, (n - a % n) % n]),
            ]
        })
        .collect();
    c.sort();
    c.dedup();
    c
}

/// Forward increments of `+-{...}`, as a sorted set in `Z_n`.
pub fn pm(n: u32, ys: &[u32]) -> Vec<u32> {
    let mut d: Vec<u32> = ys.iter().flat_map(|&y| [y % n, (n - y % n) % n]).collect();
    d.sort_unstable();
    d.dedup();
    d
}

/// Remaining forward increments of `{+-1} x Z_n` while a factorization is
/// assembled, with a log of which block took what.
#[derive(Clone, Debug)]
pub struct DifferenceBudget {
    pub m: u32,
    pub n: u32,
    remaining: BTreeMap<u32, usize>,
    pub log: Vec<(String, Vec<u32>)>,
}

impl DifferenceBudget {
    /// Every increment of `Z_n` once (the graph `C_m[n]`).
    pub fn full(m: u32, n: u32) -> Self {
        DifferenceBudget {
            m,
            n,
            remaining: (0..n).map(|a| (a, 1)).collect(),
            log: Vec::new(),
        }
    }

    /// Every non-zero increment once.
    pub fn nonzero(m: u32, n: u32) -> Self {
        let mut b = Self::full(m, n);
        b.remaining.remove(&0);
        b
    }

    pub fn consume(&mut self, label: &str, increments: &[u32]) -> Result<()> {
        let mut next = self.remaining.clone();
        for &a in increments {
            match next.get_mut(&(a % self.n)) {
                Some(c) if *c > 0 => *c -= 1,
                _ => {
                    return Err(Error::RejectCounts(format!(
                        "{label}: increment {a} mod {} is not available",
                        self.n
                    )))
                }
            }
        }
        next.retain(|_, c| *c > 0);
        self.remaining = next;
        self.log.push((label.to_string(), increments.to_vec()));
        Ok(())
    }

    pub fn remaining(&self) -> Vec<u32> {
        self.remaining
            .iter()
            .flat_map(|(&a, &c)| std::iter::repeat_n(a, c))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.remaining.is_empty()
    }
}

/// Rows with `b_{j,1} = +-d`, `b_{j,2} = +-2d`, repeating with period 2
/// (two `C_m`-factors on `{+-1} x {+-d}`, `n = 3d`).
pub fn third_rows(m: u32, n: u32) -> Result<BaseRowTable> {
    if n % 3 != 0 || m < 3 || m % 2 == 0 {
        return Err(Error::RejectParams(format!("need odd m >= 3 and 3 | n, got m={m}, n={n}")));
    }
    let d = (n / 3) as i64;
    let row: Vec<i64> = (1..m).map(|t| if t % 2 == 1 { d } else { 2 * d }).collect();
    let neg: Vec<i64> = row.iter().map(|x| -x).collect();
    BaseRowTable::from_partial_sums(m, n, &[row, neg])
}

/// The four rows on `{+-1} x (+-{3,4})` in `Z_9`, `b_{jt} = b_{j,t-2}`
/// for `t >= 5`.
pub fn nine_rows(m: u32) -> Result<BaseRowTable> {
    if m < 5 || m % 2 == 0 {
        return Err(Error::RejectParams(format!("need odd m >= 5, got {m}")));
    }
    let head: [[i64; 4]; 2] = [[3, 7, 3, 6], [5, 2, 8, 4]];
    let mut rows = Vec::new();
    for h in head {
        let mut b: Vec<i64> = h.to_vec();
        while b.len() < m as usize - 1 {
            b.push(b[b.len() - 2]);
        }
        rows.push(b.clone());
        rows.push(b.iter().map(|x| -x).collect());
    }
    // order rows as 1, 2 (negated 1), 3, 4 (negated 3)
    BaseRowTable::from_partial_sums(m, 9, &rows)
}

/// The 28 x 17 increment array giving 28 `C_17`-factors of
/// `Cay(Z_17 x Z_35, {+-1} x (Z_35 minus +-{0,4,8,13}))`.
pub fn table_17_35() -> BaseRowTable {
    const HEAD: [[i64; 3]; 14] = [
        [3, -15, 12],
        [6, 12, -18],
        [-12, 6, 6],
        [15, -18, 3],
        [-18, 3, 15],
        [2, 7, -9],
        [7, -9, 2],
        [-9, 2, 7],
        [1, 10, -11],
        [10, -11, 1],
        [-11, 1, 10],
        [5, 14, 16],
        [14, 16, 5],
        [16, 5, 14],
    ];
    let mut rows = Vec::with_capacity(28);
    for sign in [1i64, -1] {
        for h in HEAD {
            let mut a: Vec<i64> = h.iter().map(|x| sign * x).collect();
            a.push(a[0]);
            a.push(-a[0]);
            while a.len() < 17 {
                a.push(a[a.len() - 2]);
            }
            rows.push(a.iter().map(|x| x.rem_euclid(35) as u32).collect());
        }
    }
    BaseRowTable {
        m: 17,
        n: 35,
        x_step: 1,
        rows,
    }
}

/// Blocks of factors on a few difference classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiffRequest {
    /// Two `C_n`-factors on `{+-1} x {+-d}`.
    TwoCn { d: u32 },
    /// Four `C_n`-factors on `{+-1} x (+-{d1, d2})`.
    FourCn { d1: u32, d2: u32 },
    /// Five `C_m`-factors on `{+-i} x (+-{0, a, 2a})`.
    FiveCm { i: u32, a: u32 },
}

/// Realizes a difference-class block: closed forms where the difference is
/// coprime to `n`, otherwise searched lifts or rows; the caller verifies.
pub fn difference_factorization(m: u32, n: u32, req: DiffRequest) -> Result<Vec<FactorClass>> {
    let budget = Budget::default();
    match req {
        DiffRequest::TwoCn { d } => {
            check_odd(m, n)?;
            if d % n == 0 || 2 * (d % n) == n {
                return Err(Error::RejectParams(format!("difference {d} is not a pair mod {n}")));
            }
            if gcd(d % n, n) == 1 {
                two_cn(m, n, d % n)
            } else {
                lift_factorization(m, n, 1, &pm(n, &[d]), 0, budget)
            }
        }
        DiffRequest::FourCn { d1, d2 } => {
            check_odd(m, n)?;
            let set = pm(n, &[d1, d2]);
            if set.len() != 4 || set.contains(&0) {
                return Err(Error::RejectParams(format!(
                    "+-{{{d1},{d2}}} is not four distinct non-zero classes mod {n}"
                )));
            }
            if gcd(d1 % n, n) == 1 && gcd(d2 % n, n) == 1 {
                let mut out = two_cn(m, n, d1 % n)?;
                out.extend(two_cn(m, n, d2 % n)?);
                Ok(out)
            } else {
                lift_factorization(m, n, 1, &set, 0, budget)
            }
        }
        DiffRequest::FiveCm { i, a } => {
            if gcd(i % m, m) != 1 {
                return Err(Error::RejectParams(format!("gcd({i},{m}) != 1")));
            }
            let ord = n / gcd(a % n, n);
            if ord <= 3 {
                return Err(Error::RejectParams(format!("{a} has order {ord} <= 3 in Z_{n}")));
            }
            let d = pm(n, &[0, a, 2 * a]);
            let t = search_base_rows(m, n, i, &d, 5, 0, budget)?;
            develop_rows(&t)
        }
    }
}

fn check_odd(m: u32, n: u32) -> Result<()> {
    if m < 3 || m % 2 == 0 || n % 2 == 0 || n < m {
        return Err(Error::RejectParams(format!(
            "need odd n >= m >= 3, got m={m}, n={n}"
        )));
    }
    Ok(())
}

/// Five `C_n`-factors of `Cay(Z_m x Z_n, {+-1} x (+-{0,1,2}))`.
///
/// Tries, in order: the orbit of one factor under `(1,0)` when `m = 5`;
/// the pair on `+-2` plus an orbit of three factors on `{0,+-1}` under
/// `(0, n/3)`; an orbit of five under `(0, n/5)`.
pub fn five_block(m: u32, n: u32) -> Result<Vec<FactorClass>> {
    let budget = Budget {
        nodes: 4_000_000,
        ..Budget::default()
    };
    let moduli = [m, n];
    let all = step_connection(m, n, 1, &pm(n, &[0, 1, 2]));
    let mut tried = Vec::new();
    if m == 5 {
        match factor_orbit(&moduli, &all, n as usize, &Coords::new(&[1, 0]), 0, budget) {
            Ok(f) => return Ok(f),
            Err(e) => tried.push(e.to_string()),
        }
    }
    if n % 3 == 0 {
        let inner = step_connection(m, n, 1, &pm(n, &[0, 1]));
        match factor_orbit(&moduli, &inner, n as usize, &Coords::new(&[0, n / 3]), 0, budget) {
            Ok(mut f) => {
                f.extend(difference_factorization(m, n, DiffRequest::TwoCn { d: 2 })?);
                return Ok(f);
            }
            Err(e) => tried.push(e.to_string()),
        }
    }
    if n % 5 == 0 {
        match factor_orbit(&moduli, &all, n as usize, &Coords::new(&[0, n / 5]), 0, budget) {
            Ok(f) => return Ok(f),
            Err(e) => tried.push(e.to_string()),
        }
    }
    Err(Error::NotFound(format!(
        "no C_{n}-factorization of Cay(Z_{m} x Z_{n}, {{+-1}} x (+-{{0,1,2}})) found{}",
        if tried.is_empty() {
            String::new()
        } else {
            format!(": {}", tried.join("; "))
        }
    )))
}

fn lex_cert(m: u32, n: u32, classes: Vec<FactorClass>, prov: Provenance) -> Result<Certificate> {
    release(Certificate::new(HostGraph::LexCycle { m, n }, classes, prov))
}

/// `(2, n-2)` on `C_m[n]` for odd `n >= m >= 3`, `n = 3 mod 6`, `n >= 9`.
pub fn lemma_cmn_two(m: u32, n: u32) -> Result<Certificate> {
    if m < 3 || m % 2 == 0 || n % 2 == 0 || n < m || n % 6 != 3 || n < 9 {
        return Err(Error::RejectParams(format!(
            "need odd n >= m >= 3 with n = 3 mod 6 and n >= 9, got m={m}, n={n}"
        )));
    }
    let d = n / 3;
    let mut budget = DifferenceBudget::full(m, n);
    let mut classes = Vec::new();

    budget.consume("rows +-d", &pm(n, &[d]))?;
    classes.extend(develop_rows(&third_rows(m, n)?)?);

    budget.consume("five-block +-{0,1,2}", &pm(n, &[0, 1, 2]))?;
    classes.extend(five_block(m, n)?);

    let mut pairs: Vec<(u32, u32)> = (2..=(d - 1) / 2).map(|j| (2 * j - 1, 2 * j)).collect();
    let upper = if n % 12 == 3 { (d - 1) / 4 } else { (d - 3) / 4 };
    pairs.extend((1..=upper).map(|j| (d + 2 * j - 1, d + 2 * j)));
    for (d1, d2) in pairs {
        budget.consume(&format!("four-block +-{{{d1},{d2}}}"), &pm(n, &[d1, d2]))?;
        classes.extend(difference_factorization(m, n, DiffRequest::FourCn { d1, d2 })?);
    }
    // for n = 3 mod 12 the last four-block already holds +-(n-1)/2
    if n % 12 == 9 {
        let h = (n - 1) / 2;
        budget.consume(&format!("pair +-{h}"), &pm(n, &[h]))?;
        classes.extend(difference_factorization(m, n, DiffRequest::TwoCn { d: h })?);
    }
    if !budget.is_empty() {
        return Err(Error::RejectCounts(format!(
            "increments left over: {:?}",
            budget.remaining()
        )));
    }
    lex_cert(
        m,
        n,
        classes,
        Provenance::new("lemma_cmn_two").param("m", m).param("n", n),
    )
}

/// `(4, 5)` on `C_m[9]` for odd `m >= 5`.
///
/// For `m = 5` the four `C_m`-factors come from the fixed rows on `+-{3,4}`
/// and the five `C_9`-factors from the `(1,0)` orbit in [`five_block`].
/// Other `m` have no quick five-block, so the increments are split as
/// `{0,1,3,5}` (rows, found by search) and `{2,4,6,7,8}` (lifted Hamilton
/// cycles).
pub fn lemma_cm9(m: u32) -> Result<Certificate> {
    if m < 5 || m % 2 == 0 {
        return Err(Error::RejectParams(format!("need odd m >= 5, got {m}")));
    }
    let n = 9;
    let prov = Provenance::new("lemma_cm9").param("m", m);
    if m == 5 {
        let mut classes = develop_rows(&nine_rows(m)?)?;
        classes.extend(five_block(m, n)?);
        return lex_cert(m, n, classes, prov.param("split", "34|012"));
    }
    let rows = search_base_rows(m, n, 1, &[0, 1, 3, 5], 4, 0, Budget::default())?;
    let mut classes = develop_rows(&rows)?;
    classes.extend(lift_factorization(m, n, 1, &[2, 4, 6, 7, 8], 0, Budget::default())?);
    lex_cert(m, n, classes, prov.param("split", "0135|24678"))
}

/// `kt + 1` `C_k`-factors of `Cay(Z_k x Z_{2kt+1}, {0} x (Z minus 0) +
/// {+-1} x {0})` from an aligned `k`-ARCS(2kt+1).
///
/// Copy `i` of the design sits on `{i} x Z_v` through an explicit
/// relabelling that sends the vertex missed by the `j`-th almost parallel
/// class to `j`.
pub fn construction_00(arcs: &Certificate) -> Result<Certificate> {
    if !check_alignment(arcs) {
        return Err(Error::RejectAlignment(
            "missed vertices do not match the half class".into(),
        ));
    }
    let report = crate::verify::check_certificate(arcs);
    if !report.is_valid() {
        return Err(Error::Reject(format!("input design does not verify: {report}")));
    }
    let mut aps = Vec::new();
    let mut half = None;
    for c in &arcs.classes {
        match &c.kind {
            ClassKind::AlmostParallel { missing, .. } => aps.push((missing.clone(), c)),
            ClassKind::HalfParallel(_) => half = Some(c),
            _ => return Err(Error::Reject("unexpected class kind in an ARCS".into())),
        }
    }
    let half = half.ok_or_else(|| Error::Reject("no half class".into()))?;
    let k = match half.kind {
        ClassKind::HalfParallel(k) => k as u32,
        _ => unreachable!(),
    };
    let verts = arcs.host.vertices();
    let v = verts.len() as u32;
    let kt = (v - 1) / 2;
    aps.sort_by(|a, b| a.0.cmp(&b.0));
    let mut map: BTreeMap<Vertex, u32> = BTreeMap::new();
    for (j, (miss, _)) in aps.iter().enumerate() {
        map.insert(miss.clone(), j as u32);
    }
    let mut next = kt;
    for x in &verts {
        if !map.contains_key(x) {
            map.insert(x.clone(), next);
            next += 1;
        }
    }
    let place = |c: &FactorClass, i: u32| -> Vec<CycleSeq> {
        c.cycles
            .iter()
            .map(|cy| cy.map(|x| Vertex::res(&[i, map[x]])))
            .collect()
    };
    let column = |j: u32| CycleSeq::new_unchecked((0..k).map(|i| Vertex::res(&[i, j])).collect());
    let mut classes = Vec::new();
    for (j, (_, p)) in aps.iter().enumerate() {
        let mut cycles: Vec<CycleSeq> = (0..k).flat_map(|i| place(p, i)).collect();
        cycles.push(column(j as u32));
        classes.push(FactorClass::new(ClassKind::Uniform(k as usize), cycles));
    }
    let mut t: Vec<CycleSeq> = (0..k).flat_map(|i| place(half, i)).collect();
    t.extend((kt..v).map(column));
    classes.push(FactorClass::new(ClassKind::Uniform(k as usize), t));
    let mut conn: Vec<Coords> = (1..v).map(|y| Coords::new(&[0, y])).collect();
    conn.extend(step_connection(k, v, 1, &[0]));
    release(Certificate::new(
        HostGraph::cayley(&[k, v], conn),
        classes,
        Provenance::new("construction_00")
            .param("k", k)
            .param("v", v)
            .ingredient(arcs.provenance.clone()),
    ))
}

/// `u` `C_k`-factors and a 1-factor of `Cay(Z_k x Z_{2u}, {0} x (Z minus
/// 0) + {+-1} x {0})` from a `(k,1)-CF(2^u)`.
pub fn construction_2ku(frame: &Certificate) -> Result<Certificate> {
    let parts = frame
        .host
        .parts()
        .ok_or_else(|| Error::RejectParams("frame host is not multipartite".into()))?
        .to_vec();
    let u = parts.len() as u32;
    if parts.iter().any(|p| p.len() != 2) {
        return Err(Error::RejectParams("frame parts must have size 2".into()));
    }
    let k = match frame.classes.first().map(|c| &c.kind) {
        Some(ClassKind::Holey { k, .. }) => *k as u32,
        _ => return Err(Error::RejectParams("frame has no holey classes".into())),
    };
    if (2 * (u - 1)) % k != 0 {
        return Err(Error::RejectParams(format!(
            "2(u-1) = {} is not divisible by k = {k}",
            2 * (u - 1)
        )));
    }
    let report = crate::verify::check_frame(frame, &parts, k as usize)?;
    if !report.is_valid() {
        return Err(Error::Reject(format!("frame does not verify: {report}")));
    }
    let mut map: BTreeMap<Vertex, u32> = BTreeMap::new();
    for (j, p) in parts.iter().enumerate() {
        let mut p = p.clone();
        p.sort();
        map.insert(p[0].clone(), 2 * j as u32);
        map.insert(p[1].clone(), 2 * j as u32 + 1);
    }
    let n = 2 * u;
    let column = |y: u32| CycleSeq::new_unchecked((0..k).map(|i| Vertex::res(&[i, y])).collect());
    let mut classes = Vec::new();
    for j in 0..u as usize {
        let holey = frame
            .classes
            .iter()
            .find(|c| matches!(c.kind, ClassKind::Holey { hole, .. } if hole == j))
            .ok_or_else(|| Error::RejectCounts(format!("no holey factor misses part {j}")))?;
        let mut cycles: Vec<CycleSeq> = (0..k)
            .flat_map(|i| {
                holey
                    .cycles
                    .iter()
                    .map(|cy| cy.map(|x| Vertex::res(&[i, map[x]])))
                    .collect::<Vec<_>>()
            })
            .collect();
        cycles.push(column(2 * j as u32));
        cycles.push(column(2 * j as u32 + 1));
        classes.push(FactorClass::new(ClassKind::Uniform(k as usize), cycles));
    }
    let pairs = (0..k)
        .flat_map(|i| {
            (0..u).map(move |j| (Vertex::res(&[i, 2 * j]), Vertex::res(&[i, 2 * j + 1])))
        })
        .collect();
    classes.push(FactorClass::one_factor(pairs));
    let mut conn: Vec<Coords> = (1..n).map(|y| Coords::new(&[0, y])).collect();
    conn.extend(step_connection(k, n, 1, &[0]));
    release(Certificate::new(
        HostGraph::cayley(&[k, n], conn),
        classes,
        Provenance::new("construction_2ku")
            .param("k", k)
            .param("u", u)
            .ingredient(frame.provenance.clone()),
    ))
}

/// `2l` `C_k`-factors and `2kt - 2l` `C_{2kt+1}`-factors of
/// `Cay(Z_k x Z_{2kt+1}, {+-1} x (Z minus 0))`.
///
/// `(17, 1, 14)` uses the stored table. Otherwise the `C_k` rows take `l`
/// difference pairs (non-coprime ones first) and are searched; coprime
/// leftover pairs get the closed-form pair of `C_n`-factors and the rest
/// are lifted by search.
pub fn construction_2l(k: u32, t: u32, l: u32) -> Result<Certificate> {
    if k < 3 || k % 2 == 0 || t == 0 {
        return Err(Error::RejectParams(format!("need odd k >= 3 and t >= 1, got k={k}, t={t}")));
    }
    let kt = k * t;
    if l > kt || [1, 2, kt - 1, kt].contains(&l) {
        return Err(Error::RejectParams(format!(
            "l = {l} is excluded (l must avoid 1, 2, kt-1, kt and not exceed kt = {kt})"
        )));
    }
    let n = 2 * kt + 1;
    let mut budget = DifferenceBudget::nonzero(k, n);
    let mut classes = Vec::new();
    let prov = Provenance::new("construction_2l").param("k", k).param("t", t).param("l", l);
    if (k, t, l) == (17, 1, 14) {
        let table = table_17_35();
        let used = table.consumed().ok_or_else(|| Error::RejectRow("stored table columns differ".into()))?;
        budget.consume("stored rows", &used)?;
        classes.extend(develop_rows(&table)?);
        budget.consume("four-block +-{4,8}", &pm(n, &[4, 8]))?;
        classes.extend(difference_factorization(k, n, DiffRequest::FourCn { d1: 4, d2: 8 })?);
        budget.consume("pair +-13", &pm(n, &[13]))?;
        classes.extend(difference_factorization(k, n, DiffRequest::TwoCn { d: 13 })?);
    } else {
        let mut reps: Vec<u32> = (1..=kt).collect();
        // pairs that cannot use the closed form go to the rows first
        reps.sort_by_key(|&a| (gcd(a, n) == 1, a));
        let (row_reps, rest) = reps.split_at(l as usize);
        if l > 0 {
            let d = pm(n, row_reps);
            budget.consume("rows", &d)?;
            let table = search_base_rows(k, n, 1, &d, d.len(), 0, Budget::default())?;
            classes.extend(develop_rows(&table)?);
        }
        let mut lifted = Vec::new();
        for &a in rest {
            budget.consume(&format!("pair +-{a}"), &pm(n, &[a]))?;
            if gcd(a, n) == 1 {
                classes.extend(two_cn(k, n, a)?);
            } else {
                lifted.extend(pm(n, &[a]));
            }
        }
        if !lifted.is_empty() {
            classes.extend(lift_factorization(k, n, 1, &lifted, 0, Budget::default())?);
        }
    }
    if !budget.is_empty() {
        return Err(Error::RejectCounts(format!(
            "increments left over: {:?}",
            budget.remaining()
        )));
    }
    let conn = step_connection(k, n, 1, &(1..n).collect::<Vec<_>>());
    release(Certificate::new(HostGraph::cayley(&[k, n], conn), classes, prov))
}
