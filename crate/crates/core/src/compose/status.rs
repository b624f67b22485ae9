//! Existence status of `HW(v; m, n; alpha, beta)` from the known results.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HwpStatus {
    Solvable(String),
    NecessaryFail(String),
    Nonexistent(String),
    Open(String),
}

impl fmt::Display for HwpStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HwpStatus::Solvable(r) => write!(f, "SOLVABLE({r})"),
            HwpStatus::NecessaryFail(r) => write!(f, "NECESSARY_FAIL({r})"),
            HwpStatus::Nonexistent(r) => write!(f, "NONEXISTENT({r})"),
            HwpStatus::Open(t) => write!(f, "OPEN({t})"),
        }
    }
}

impl HwpStatus {
    pub fn is_solvable(&self) -> bool {
        matches!(self, HwpStatus::Solvable(_))
    }
}

/// Divisibility and count conditions every `HW(v; m, n; alpha, beta)` must
/// satisfy.
pub fn necessary(v: u64, m: u64, n: u64, alpha: u64, beta: u64) -> Result<(), String> {
    if m < 3 || n < 3 {
        return Err(format!("cycle lengths must be at least 3, got {m} and {n}"));
    }
    if v < 3 {
        return Err(format!("order {v} is too small"));
    }
    if alpha + beta != (v - 1) / 2 {
        return Err(format!(
            "alpha + beta = {} but floor((v-1)/2) = {}",
            alpha + beta,
            (v - 1) / 2
        ));
    }
    if alpha > 0 && v % m != 0 {
        return Err(format!("{m} does not divide {v}"));
    }
    if beta > 0 && v % n != 0 {
        return Err(format!("{n} does not divide {v}"));
    }
    Ok(())
}

const FIXTURES: [(u64, u64, u64, u64, u64, &str); 3] = [
    (33, 3, 11, 6, 10, "L4.5"),
    (35, 5, 7, 9, 8, "L4.6"),
    (39, 3, 13, 8, 11, "L4.7"),
];

/// Exceptions of the odd-cycle result for `v = mnt`, `n >= m >= 3` odd.
pub fn odd_exception(m: u64, n: u64, t: u64, alpha: u64, beta: u64) -> bool {
    if t > 1 {
        return beta == 1 || beta == 3;
    }
    (1..=(n - 3) / 2).contains(&beta)
        || beta == (n + 1) / 2
        || beta == (n + 5) / 2
        || (m == 3 && (alpha == 2 || alpha == 4))
}

/// Whether the ARCS-based result covers `beta` for `m = k`,
/// `n = 2kt + 1`.
pub fn theorem_14_covers(k: u32, t: u32, beta: u32) -> bool {
    if k < 3 || k % 2 == 0 || t == 0 {
        return false;
    }
    let top = k * (k - 1) * t + (k - 3) / 2;
    let in_j = beta == 4 || beta == 6 || (8..=top).contains(&beta);
    match k {
        3 => t > 2 && beta % 2 == 0 && ((4..=6 * t - 6).contains(&beta) || beta == 6 * t),
        5 => in_j && beta != 20 * t - 3 && beta != 20 * t - 1,
        7 | 9 => in_j,
        _ => t != 2 && in_j,
    }
}

/// Bucket of the open problem listing `beta` for `m = k`, `n = 2kt + 1`.
pub fn open_problem_bucket(k: u32, t: u32, beta: u32) -> Option<&'static str> {
    let small = |extra: &[u32]| [1, 2, 3].contains(&beta) || extra.contains(&beta);
    let hit = match t {
        0 => false,
        1 => match k {
            3 => false,
            5 => small(&[]),
            7 => small(&[5]),
            _ => small(&[5, 7]),
        },
        2 => match k {
            5 | 7 | 9 => small(&[5, 7]),
            _ => (1..2 * k).contains(&beta) || beta == 2 * k + 1 || beta == 2 * k + 3,
        },
        _ => {
            if k == 3 {
                let top = if t % 2 == 1 { 3 * t - 2 } else { 3 * t + 3 };
                (beta % 2 == 1 && beta <= top) || [2, 9 * t - 3, 9 * t - 1].contains(&beta)
            } else {
                small(&[5, 7])
            }
        }
    };
    if !hit {
        return None;
    }
    Some(match t {
        1 => "Problem5.1(i)",
        2 => "Problem5.1(ii)",
        _ => "Problem5.1(iii)",
    })
}

/// Classifies `(v, m, n, alpha, beta)` as solvable (with the recipe that
/// covers it), failing a necessary condition, or open.
pub fn hwp_status(v: u64, m: u64, n: u64, alpha: u64, beta: u64) -> HwpStatus {
    if let Err(why) = necessary(v, m, n, alpha, beta) {
        return HwpStatus::NecessaryFail(why);
    }
    let (m, n, alpha, beta) = if m <= n { (m, n, alpha, beta) } else { (n, m, beta, alpha) };
    for (fv, fm, fn_, fa, fb, name) in FIXTURES {
        if (v, m, n, alpha, beta) == (fv, fm, fn_, fa, fb) {
            return HwpStatus::Solvable(format!("fixture {name}"));
        }
    }
    if alpha == 0 || beta == 0 || m == n {
        let k = if beta == 0 { m } else { n };
        // K_v minus a 1-factor is K_{v/2}[2]
        let (u, g) = if v % 2 == 0 { (v / 2, 2) } else { (v, 1) };
        return match factorization_status(k, u, g) {
            HwpStatus::Solvable(_) => HwpStatus::Solvable("uniform".into()),
            other => other,
        };
    }
    if m % 4 == 0 && n % m == 0 && n / m >= 2 && v % n == 0 {
        return HwpStatus::Solvable("Theorem1.5".into());
    }
    if m % 2 == 1 && n % 2 == 1 && v % (m * n) == 0 {
        let t = v / (m * n);
        let arcs_t = ((n - 1) % (2 * m) == 0 && t == 1).then(|| ((n - 1) / (2 * m)) as u32);
        let bucket = arcs_t.and_then(|tt| open_problem_bucket(m as u32, tt, beta as u32));
        let exc = odd_exception(m, n, t, alpha, beta);
        if !exc && bucket.is_none() {
            return HwpStatus::Solvable("Theorem1.3".into());
        }
        if exc && bucket.is_none() {
            if let Some(tt) = arcs_t {
                if theorem_14_covers(m as u32, tt, beta as u32) {
                    return HwpStatus::Solvable("Theorem1.4".into());
                }
            }
        }
        let tag = match (exc, bucket) {
            (true, Some(b)) => format!("Theorem1.3+{b}"),
            (false, Some(b)) => b.to_string(),
            _ => "Theorem1.3".to_string(),
        };
        return HwpStatus::Open(tag);
    }
    HwpStatus::Open("outside implemented tables".into())
}

/// Existence of a `k`-ARCS(2kt+1) from the known results.
pub fn arcs_status(k: u64, t: u64) -> HwpStatus {
    if k < 3 || t == 0 {
        return HwpStatus::NecessaryFail(format!("need k >= 3 and t >= 1, got k={k}, t={t}"));
    }
    let n = 2 * k * t + 1;
    if [(3, 7), (3, 13), (4, 9)].contains(&(k, n)) {
        return HwpStatus::Nonexistent(format!("Theorem1.2 exception ({k},{n})"));
    }
    if [(8, 33), (14, 57)].contains(&(k, n)) {
        return HwpStatus::Open(format!("Theorem1.2 possible exception ({k},{n})"));
    }
    if (3..=10).contains(&k) || k == 14 {
        return HwpStatus::Solvable("Theorem1.2".into());
    }
    if k % 2 == 1 {
        if t == 2 {
            return HwpStatus::Open(format!("{k}-ARCS({n}) with t = 2"));
        }
        return HwpStatus::Solvable("Theorem2.9".into());
    }
    HwpStatus::Open(format!("even k = {k} outside the known range"))
}

/// Existence of a `C_k`-factorization of `K_u[g]` (`K_u` when `g = 1`).
pub fn factorization_status(k: u64, u: u64, g: u64) -> HwpStatus {
    let fits = |x: u64| u32::try_from(x).ok();
    let (Some(k32), Some(u32_), Some(g32)) = (fits(k), fits(u), fits(g)) else {
        return HwpStatus::Open("parameters too large".into());
    };
    match crate::search::frame::resolvable_conditions(k32, u32_, g32) {
        Ok(()) => HwpStatus::Solvable("Theorem1.1".into()),
        Err(crate::Error::NecessaryFail(why)) => HwpStatus::NecessaryFail(why),
        Err(e) => HwpStatus::NecessaryFail(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_examples() {
        assert_eq!(hwp_status(35, 5, 7, 9, 8).to_string(), "SOLVABLE(fixture L4.6)");
        assert_eq!(hwp_status(33, 3, 11, 7, 9).to_string(), "SOLVABLE(Theorem1.3)");
        assert!(matches!(hwp_status(45, 5, 9, 21, 1), HwpStatus::Open(_)));
        assert!(matches!(hwp_status(20, 3, 5, 3, 6), HwpStatus::NecessaryFail(_)));
        assert_eq!(hwp_status(39, 3, 13, 8, 11).to_string(), "SOLVABLE(fixture L4.7)");
        assert!(matches!(hwp_status(21, 3, 7, 9, 1), HwpStatus::Open(_)));
    }

    #[test]
    fn arcs_and_factorization_tables() {
        assert!(matches!(arcs_status(3, 1), HwpStatus::Nonexistent(_)));
        assert!(matches!(arcs_status(3, 2), HwpStatus::Nonexistent(_)));
        assert!(matches!(arcs_status(4, 1), HwpStatus::Nonexistent(_)));
        assert!(matches!(arcs_status(8, 2), HwpStatus::Open(_)));
        assert!(matches!(arcs_status(11, 2), HwpStatus::Open(_)));
        assert!(arcs_status(5, 4).is_solvable());
        assert!(arcs_status(13, 3).is_solvable());
        assert!(matches!(factorization_status(3, 6, 2), HwpStatus::NecessaryFail(_)));
        assert!(factorization_status(3, 3, 3).is_solvable());
        assert!(matches!(hwp_status(12, 3, 5, 5, 0), HwpStatus::NecessaryFail(_)));
        assert!(matches!(hwp_status(6, 3, 5, 2, 0), HwpStatus::NecessaryFail(_)));
        assert!(hwp_status(18, 3, 5, 8, 0).is_solvable());
    }
}
