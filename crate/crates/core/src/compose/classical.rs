//! Small classical ingredients, realized by closed forms or bounded search.

use crate::arcs::release;
use crate::cayley::{lemma_cm9, lemma_cmn_two};
use crate::error::{Error, Result};
use crate::model::{Certificate, ClassKind, CycleSeq, FactorClass, HostGraph, Provenance, Vertex};
use crate::search::frame::{hamilton_decomposition, search_layers, search_resolvable};
use crate::search::rows::{develop_rows, lift_factorization, search_base_rows};
use crate::search::Budget;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalRequest {
    /// Hamilton decomposition of `K_v`, `v` odd.
    Hamilton { v: u32 },
    /// `C_k`-factorization of `K_u[g]` (`K_u` when `g = 1`).
    Resolvable { k: u32, u: u32, g: u32 },
    /// `C_m`-factorization of `C_m[n]`.
    LexShort { m: u32, n: u32 },
    /// `C_{mn}`-factorization of `C_m[n]`.
    LexLong { m: u32, n: u32 },
    /// `alpha` `C_m`-factors and `n - alpha` `C_n`-factors of `C_m[n]`.
    LexMixed { m: u32, n: u32, alpha: u32 },
}

impl std::fmt::Display for ClassicalRequest {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            ClassicalRequest::Hamilton { v } => write!(f, "Hamilton decomposition of K_{v}"),
            ClassicalRequest::Resolvable { k, u, g } => {
                write!(f, "C_{k}-factorization of K_{u}[{g}]")
            }
            ClassicalRequest::LexShort { m, n } => write!(f, "C_{m}-factorization of C_{m}[{n}]"),
            ClassicalRequest::LexLong { m, n } => {
                write!(f, "C_{}-factorization of C_{m}[{n}]", m * n)
            }
            ClassicalRequest::LexMixed { m, n, alpha } => {
                write!(f, "HW(C_{m}[{n}];{m},{n};{alpha},{})", n.saturating_sub(alpha))
            }
        }
    }
}

pub fn classical(req: ClassicalRequest) -> Result<Certificate> {
    let budget = Budget::default();
    match req {
        ClassicalRequest::Hamilton { v } => hamilton_decomposition(v),
        ClassicalRequest::Resolvable { k, u, g } => search_resolvable(k, u, g, 0, budget),
        ClassicalRequest::LexShort { m, n } => lex_short(m, n, budget),
        ClassicalRequest::LexLong { m, n } => lex_long(m, n, budget),
        ClassicalRequest::LexMixed { m, n, alpha } => lex_mixed(m, n, alpha, budget),
    }
}

fn check_lex(m: u32, n: u32) -> Result<()> {
    if m < 3 || n == 0 {
        return Err(Error::RejectParams(format!("C_{m}[{n}] needs m >= 3, n >= 1")));
    }
    Ok(())
}

fn lex_cert(m: u32, n: u32, classes: Vec<FactorClass>, prov: Provenance) -> Result<Certificate> {
    release(Certificate::new(HostGraph::LexCycle { m, n }, classes, prov))
}

fn lex_short(m: u32, n: u32, budget: Budget) -> Result<Certificate> {
    check_lex(m, n)?;
    if (m, n) == (3, 6) || (n == 2 && m % 2 == 1) {
        return Err(Error::NecessaryFail(format!(
            "C_{m}[{n}] has no C_{m}-factorization"
        )));
    }
    let all: Vec<u32> = (0..n).collect();
    let rows = search_base_rows(m, n, 1, &all, n as usize, 0, budget)?;
    lex_cert(
        m,
        n,
        develop_rows(&rows)?,
        Provenance::new("lex_rows").param("m", m).param("n", n),
    )
}

/// Per-level increments `c[x][j]` for factor `j`: every level is a
/// permutation of `Z_n` and the round sum `sum_x c[x][j]` is a unit mod `n`,
/// so walking `x -> x+1` with these increments is a Hamilton cycle.
fn long_walk_table(m: u32, n: u32) -> Option<Vec<Vec<u32>>> {
    let id: Vec<u32> = (0..n).collect();
    let neg: Vec<u32> = (0..n).map(|j| (n - j) % n).collect();
    let mut levels: Vec<Vec<u32>> = Vec::new();
    let (first, last): (Vec<Vec<u32>>, Vec<u32>) = if m % 2 == 0 {
        // +j, -j, ..., +j then 1 - j
        (vec![id.clone()], (0..n).map(|j| (1 + n - j) % n).collect())
    } else if n % 2 == 1 {
        // +j, +j, then pairs cancelling, then 1 - 2j
        (
            vec![id.clone(), id.clone()],
            (0..n).map(|j| ((1 + 2 * n - 2 * j) % n) % n).collect(),
        )
    } else {
        let (s, r) = unit_triples(n)?;
        (vec![id.clone(), s], r)
    };
    let head = first.len();
    levels.extend(first);
    while levels.len() < m as usize - 1 {
        let minus = (levels.len() - head) % 2 == 0;
        levels.push(if minus { neg.clone() } else { id.clone() });
    }
    levels.push(last);
    Some(levels)
}

/// Permutations `s, r` of `Z_n` with `j + s(j) + r(j)` a unit for every `j`.
fn unit_triples(n: u32) -> Option<(Vec<u32>, Vec<u32>)> {
    fn go(j: u32, n: u32, s: &mut Vec<u32>, r: &mut Vec<u32>, us: &mut [bool], ur: &mut [bool]) -> bool {
        if j == n {
            return true;
        }
        for a in 0..n {
            if us[a as usize] {
                continue;
            }
            for b in 0..n {
                if ur[b as usize] || crate::model::gcd((j + a + b) % n, n) != 1 {
                    continue;
                }
                us[a as usize] = true;
                ur[b as usize] = true;
                s.push(a);
                r.push(b);
                if go(j + 1, n, s, r, us, ur) {
                    return true;
                }
                s.pop();
                r.pop();
                us[a as usize] = false;
                ur[b as usize] = false;
            }
        }
        false
    }
    let (mut s, mut r) = (Vec::new(), Vec::new());
    let (mut us, mut ur) = (vec![false; n as usize], vec![false; n as usize]);
    go(0, n, &mut s, &mut r, &mut us, &mut ur).then_some((s, r))
}

fn lex_long(m: u32, n: u32, budget: Budget) -> Result<Certificate> {
    check_lex(m, n)?;
    if n == 1 {
        let c = CycleSeq::new((0..m).map(|x| Vertex::res(&[x, 0])).collect())?;
        return lex_cert(m, n, vec![FactorClass::new(ClassKind::Uniform(m as usize), vec![c])], Provenance::new("lex_walk").param("m", m).param("n", n));
    }
    let Some(table) = long_walk_table(m, n) else {
        return lex_long_search(m, n, budget);
    };
    let classes = (0..n as usize)
        .map(|j| {
            let mut vs = Vec::with_capacity((m * n) as usize);
            let (mut x, mut y) = (0u32, 0u32);
            for _ in 0..m * n {
                vs.push(Vertex::res(&[x, y]));
                y = (y + table[x as usize][j]) % n;
                x = (x + 1) % m;
            }
            Ok(FactorClass::new(
                ClassKind::Uniform((m * n) as usize),
                vec![CycleSeq::new(vs)?],
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    lex_cert(
        m,
        n,
        classes,
        Provenance::new("lex_walk").param("m", m).param("n", n),
    )
}

/// Direct search for the `n` Hamilton factors of `C_m[n]`.
fn lex_long_search(m: u32, n: u32, budget: Budget) -> Result<Certificate> {
    let id = |x: u32, y: u32| x * n + y;
    let mut base = Vec::new();
    for x in 0..m {
        for y in 0..n {
            for y2 in 0..n {
                if m > 2 || x == 0 {
                    base.push((id(x, y), id((x + 1) % m, y2)));
                }
            }
        }
    }
    let per = search_layers(m * n, &base, n, m * n, 0, budget, &format!("C_{}-factorization of C_{m}[{n}]", m * n))?;
    let back = |v: &Vertex| {
        let i = v.coords().expect("residue").as_slice()[0];
        Vertex::res(&[i / n, i % n])
    };
    let classes = per
        .into_iter()
        .map(|cs| FactorClass::new(ClassKind::Uniform((m * n) as usize), cs.iter().map(|c| c.map(back)).collect()))
        .collect();
    lex_cert(m, n, classes, Provenance::new("lex_long_search").param("m", m).param("n", n))
}

/// Candidate row sets of size `alpha`: each contains 0 (a `C_n`-factor
/// cannot use the zero increment) and sums to 0 mod `n`.
fn row_sets(n: u32, alpha: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let neg = |a: u32| (n - a % n) % n;
    if alpha % 2 == 1 {
        for start in 1..n / 2 {
            let mut d = vec![0];
            let mut a = start;
            while d.len() < alpha as usize && a <= n / 2 {
                d.extend([a, neg(a)]);
                a += 1;
            }
            if d.len() == alpha as usize {
                out.push(d);
            }
        }
    } else if alpha >= 4 {
        // {0, a, b, -(a+b)} plus pairs avoiding them
        for a in 1..n {
            for b in a + 1..n {
                let c = neg(a + b);
                if c == 0 || c == a || c == b || c == neg(a) || c == neg(b) || b == neg(a) {
                    continue;
                }
                let mut d = vec![0, a, b, c];
                for x in 1..=n / 2 {
                    if d.len() >= alpha as usize {
                        break;
                    }
                    if !d.contains(&x) && !d.contains(&neg(x)) {
                        d.extend([x, neg(x)]);
                    }
                }
                if d.len() == alpha as usize {
                    out.push(d);
                }
                if out.len() >= 12 {
                    return out;
                }
            }
        }
    }
    out
}

fn lex_mixed(m: u32, n: u32, alpha: u32, budget: Budget) -> Result<Certificate> {
    check_lex(m, n)?;
    if alpha > n {
        return Err(Error::RejectParams(format!("alpha = {alpha} exceeds n = {n}")));
    }
    if alpha == n {
        return lex_short(m, n, budget);
    }
    if alpha == 0 {
        let mut c = lex_orbit_n(m, n, budget)?;
        c.provenance = Provenance::new("lex_mixed").param("m", m).param("n", n).param("alpha", 0).ingredient(c.provenance);
        return Ok(c);
    }
    if alpha == 2 && n % 6 == 3 && n >= 9 && n >= m && m % 2 == 1 {
        return lemma_cmn_two(m, n);
    }
    if alpha == 4 && n == 9 && m % 2 == 1 && m >= 5 {
        return lemma_cm9(m);
    }
    let mut last = Error::NotFound(format!(
        "no row set found for HW(C_{m}[{n}];{m},{n};{alpha},{})",
        n - alpha
    ));
    for d in row_sets(n, alpha) {
        let rest: Vec<u32> = (1..n).filter(|a| !d.contains(a)).collect();
        let rows = match search_base_rows(m, n, 1, &d, d.len(), 0, budget) {
            Ok(r) => r,
            Err(e) => {
                last = e;
                continue;
            }
        };
        let lifts = match lift_factorization(m, n, 1, &rest, 0, budget) {
            Ok(l) => l,
            Err(e) => {
                last = e;
                continue;
            }
        };
        let mut classes = develop_rows(&rows)?;
        classes.extend(lifts);
        let rendered: Vec<String> = d.iter().map(|x| x.to_string()).collect();
        return lex_cert(
            m,
            n,
            classes,
            Provenance::new("lex_mixed")
                .param("m", m)
                .param("n", n)
                .param("alpha", alpha)
                .param("rows", rendered.join("/")),
        );
    }
    Err(last)
}

/// `C_n`-factorization of `C_m[n]`: lifted Hamilton cycles on the
/// increments outside `{0, +-1}`, and a direct search for the three factors
/// on `{+-1} x {0, +-1}`.
fn lex_orbit_n(m: u32, n: u32, budget: Budget) -> Result<Certificate> {
    if m % 2 == 0 || n % 2 == 0 || n < m {
        return Err(Error::RejectParams(format!(
            "needs odd n >= m, got m={m}, n={n}"
        )));
    }
    let rest: Vec<u32> = (2..n - 1).collect();
    let mut classes = if rest.is_empty() {
        Vec::new()
    } else {
        lift_factorization(m, n, 1, &rest, 0, budget)?
    };
    let id = |x: u32, y: u32| x * n + y;
    let mut base = Vec::new();
    for x in 0..m {
        for y in 0..n {
            for b in [0, 1, n - 1] {
                base.push((id(x, y), id((x + 1) % m, (y + b) % n)));
            }
        }
    }
    let per = search_layers(m * n, &base, 3, n, 0, budget, &format!("C_{n}-factors of C_{m}[{n}] on {{0,+-1}}"))?;
    let back = |v: &Vertex| {
        let i = v.coords().expect("residue").as_slice()[0];
        Vertex::res(&[i / n, i % n])
    };
    for cs in per {
        classes.push(FactorClass::new(ClassKind::Uniform(n as usize), cs.iter().map(|c| c.map(back)).collect()));
    }
    lex_cert(
        m,
        n,
        classes,
        Provenance::new("lex_long_cycles").param("m", m).param("n", n),
    )
}
