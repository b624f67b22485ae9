//! Multi-stage builds: each request names the chain of compositions it
//! follows, and every stage is verified before the next one runs.

use crate::arcs::{build_arcs, release};
use crate::cayley::{construction_00, construction_2l};
use crate::error::{Error, Result};
use crate::model::{Certificate, HostGraph, Provenance, Vertex};
use crate::verify::check_certificate;

use super::classical::{classical, ClassicalRequest};
use super::fixtures::fixture;
use super::{c_rgdd, l351};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PipelineRequest {
    /// `HW(9u; u, 9; (9u-1)/2 - beta, beta)`, `u in {5,7}`, `beta in {9,11}`.
    Lemma48 { u: u32, beta: u32 },
    /// `HW(39t; 3, 13; (39t-11)/2, 5)`, odd `t > 1`.
    Lemma49 { t: u32 },
    /// `HW(9tu; u, 9; (9tu-1)/2 - beta, beta)`, odd `t > 1`, `u, beta in {5,7}`.
    Lemma410 { t: u32, u: u32, beta: u32 },
    /// `HW(k(2kt+1); k, 2kt+1; alpha, beta)` through an aligned ARCS.
    Theorem14 { k: u32, t: u32, beta: u32 },
    /// `HW(4ktu; 4k, 4kt; alpha, 2ktu-1-alpha)`; needs an external base
    /// design on `4kt` points.
    Theorem15 { k: u32, t: u32, u: u32, alpha: u32 },
}

impl PipelineRequest {
    pub fn name(&self) -> &'static str {
        match self {
            PipelineRequest::Lemma48 { .. } => "Lemma4.8",
            PipelineRequest::Lemma49 { .. } => "Lemma4.9",
            PipelineRequest::Lemma410 { .. } => "Lemma4.10",
            PipelineRequest::Theorem14 { .. } => "Theorem1.4",
            PipelineRequest::Theorem15 { .. } => "Theorem1.5",
        }
    }
}

/// Verified designs supplied from outside, matched by order and profile.
#[derive(Clone, Debug, Default)]
pub struct Externals {
    pub certs: Vec<Certificate>,
}

impl Externals {
    pub fn load(paths: &[std::path::PathBuf]) -> Result<Self> {
        let certs = paths
            .iter()
            .map(|p| crate::format::read_file(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Externals { certs })
    }

    /// A VALID design on a complete host of order `v` with `alpha`
    /// `C_m`-factors and `beta` `C_n`-factors.
    pub fn find(&self, v: usize, m: usize, n: usize, alpha: usize, beta: usize) -> Option<&Certificate> {
        self.certs.iter().find(|c| {
            matches!(c.host, HostGraph::Complete { .. })
                && c.host.order() == v
                && c.measured_profile().hw(m, n) == (alpha, beta)
                && check_certificate(c).is_valid()
        })
    }
}

fn hw_name(v: u32, m: u32, n: u32, a: u32, b: u32) -> String {
    format!("HW({v};{m},{n};{a},{b})")
}

pub fn pipeline(req: PipelineRequest, ext: &Externals) -> Result<Certificate> {
    let out = match req {
        PipelineRequest::Lemma48 { u, beta } => lemma_48(u, beta)?,
        PipelineRequest::Lemma49 { t } => lemma_49(t)?,
        PipelineRequest::Lemma410 { t, u, beta } => lemma_410(t, u, beta)?,
        PipelineRequest::Theorem14 { k, t, beta } => theorem_14(k, t, beta)?,
        PipelineRequest::Theorem15 { k, t, u, alpha } => theorem_15(k, t, u, alpha, ext)?,
    };
    let mut out = out;
    out.provenance = Provenance::new("pipeline")
        .param("name", req.name())
        .ingredient(out.provenance);
    release(out)
}

/// `HW(C_m[s])` fillings for `count` factors: all `C_m`-factorizations
/// except the last, which is `last`.
fn fills(m: u32, s: u32, count: usize, last: Certificate) -> Result<Vec<Certificate>> {
    let full = classical(ClassicalRequest::LexShort { m, n: s })?;
    let mut out = vec![full; count.saturating_sub(1)];
    out.push(last);
    Ok(out)
}

fn lemma_48(u: u32, beta: u32) -> Result<Certificate> {
    if ![5, 7].contains(&u) || ![9, 11].contains(&beta) {
        return Err(Error::RejectParams(format!(
            "needs u in {{5,7}} and beta in {{9,11}}, got u={u}, beta={beta}"
        )));
    }
    let a_small = 13 - beta;
    let ham = classical(ClassicalRequest::Hamilton { v: u })?;
    let last = classical(ClassicalRequest::LexMixed { m: u, n: 9, alpha: a_small })?;
    let outer = l351(&ham, &fills(u, 9, ham.classes.len(), last)?)?;
    let k9 = classical(ClassicalRequest::Hamilton { v: 9 })?;
    c_rgdd(&outer, &vec![k9; u as usize])
}

/// The stored design on `C_3[13]` moved onto `Z_3 x Z_13`.
fn c39_on_lex() -> Result<Certificate> {
    let f = fixture("L4.2")?;
    let swap = |v: &Vertex| {
        let c = v.coords().expect("residue").as_slice();
        Vertex::res(&[c[1], c[0]])
    };
    let classes = f.classes.iter().map(|c| c.map_vertices(&swap)).collect();
    release(Certificate::new(
        HostGraph::LexCycle { m: 3, n: 13 },
        classes,
        f.provenance,
    ))
}

fn lemma_49(t: u32) -> Result<Certificate> {
    if t < 3 || t % 2 == 0 {
        return Err(Error::RejectParams(format!("needs odd t > 1, got {t}")));
    }
    let outer0 = classical(ClassicalRequest::Resolvable { k: 3, u: t, g: 3 })?;
    let outer = l351(&outer0, &fills(3, 13, outer0.classes.len(), c39_on_lex()?)?)?;
    let kts = classical(ClassicalRequest::Resolvable { k: 3, u: 39, g: 1 })?;
    c_rgdd(&outer, &vec![kts; t as usize])
}

fn lemma_410(t: u32, u: u32, beta: u32) -> Result<Certificate> {
    if t < 3 || t % 2 == 0 || ![5, 7].contains(&u) || ![5, 7].contains(&beta) {
        return Err(Error::RejectParams(format!(
            "needs odd t > 1, u and beta in {{5,7}}, got t={t}, u={u}, beta={beta}"
        )));
    }
    let a_small = 9 - beta;
    let outer0 = classical(ClassicalRequest::Resolvable { k: u, u: t, g: u })?;
    let last = classical(ClassicalRequest::LexMixed { m: u, n: 9, alpha: a_small })?;
    let outer = l351(&outer0, &fills(u, 9, outer0.classes.len(), last)?)?;
    let base = classical(ClassicalRequest::Resolvable { k: u, u: 9 * u, g: 1 })?;
    c_rgdd(&outer, &vec![base; t as usize])
}

/// Values of `l` allowed in the difference construction.
fn allowed_l(kt: u32) -> impl Iterator<Item = u32> {
    (0..=kt.saturating_sub(2)).filter(|l| ![1, 2].contains(l))
}

/// Splits `rest` over `slots` fillings of `C_k[n]`, each taking a number of
/// `C_n`-factors outside `{1, 3, n-4, n-2}`.
fn split_fills(rest: u32, slots: u32, n: u32) -> Option<Vec<u32>> {
    let ok = |b: u32| b <= n && ![1, 3, n - 4, n - 2].contains(&b);
    if slots == 0 {
        return (rest == 0).then(Vec::new);
    }
    if rest == 0 {
        return Some(vec![0; slots as usize]);
    }
    if rest > slots * n {
        return None;
    }
    // a filling with no C_k-factors is the hardest to realize: try it last
    let mut cands: Vec<u32> = (2..n.min(rest + 1)).rev().collect();
    if rest >= n {
        cands.push(n);
    }
    for b in cands.into_iter().filter(|&b| ok(b)) {
        if let Some(mut tail) = split_fills(rest - b, slots - 1, n) {
            tail.insert(0, b);
            return Some(tail);
        }
    }
    None
}

fn theorem_14(k: u32, t: u32, beta: u32) -> Result<Certificate> {
    let n = 2 * k * t + 1;
    let v = k * n;
    if k < 3 || k % 2 == 0 || t == 0 {
        return Err(Error::RejectParams(format!("needs odd k >= 3 and t >= 1, got k={k}, t={t}")));
    }
    if !super::status::theorem_14_covers(k, t, beta) {
        return Err(Error::RejectParams(format!(
            "beta = {beta} is outside the range for k={k}, t={t}"
        )));
    }
    let kt = k * t;
    let r = (k - 1) / 2;
    let plan = allowed_l(kt)
        .filter_map(|l| {
            let c = 2 * kt - 2 * l;
            let rest = beta.checked_sub(c)?;
            split_fills(rest, r - 1, n).map(|b| (l, b))
        })
        .min_by_key(|(l, b)| {
            let cost: u32 = b.iter().map(|&x| if x == 0 { 0 } else if x == n { 2 } else { 1 }).sum();
            (cost, u32::MAX - l)
        })
        .ok_or_else(|| Error::NotFound(format!("no split of beta = {beta} for k={k}, t={t}")))?;
    let (l, betas) = plan;

    let ham = classical(ClassicalRequest::Hamilton { v: k })?;
    let last = &ham.classes[ham.classes.len() - 1].cycles[0];
    let pos: std::collections::BTreeMap<Vertex, u32> = last
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, x)| (x.clone(), i as u32))
        .collect();

    let arcs = build_arcs(k as usize, t as usize)?;
    let c00 = construction_00(&arcs)?;
    let c2l = construction_2l(k, t, l)?;
    let mut classes = c00.classes.clone();
    classes.extend(c2l.classes.iter().cloned());
    let mut prov = Provenance::new("theorem_14")
        .param("k", k)
        .param("t", t)
        .param("l", l)
        .ingredient(c00.provenance.clone())
        .ingredient(c2l.provenance.clone());
    for (i, &b) in betas.iter().enumerate() {
        let cyc: Vec<u32> = ham.classes[i].cycles[0]
            .vertices()
            .iter()
            .map(|x| pos[x])
            .collect();
        let fill = classical(ClassicalRequest::LexMixed { m: k, n, alpha: n - b })?;
        let place = |x: &Vertex| {
            let c = x.coords().expect("residue").as_slice();
            Vertex::res(&[cyc[c[0] as usize], c[1]])
        };
        classes.extend(fill.classes.iter().map(|f| f.map_vertices(&place)));
        prov = prov.ingredient(fill.provenance.clone());
    }
    let vertices = HostGraph::group_elements(&[k, n])
        .into_iter()
        .map(Vertex::Residue)
        .collect();
    let cert = Certificate::new(HostGraph::complete(vertices), classes, prov);
    let (a, b) = cert.measured_profile().hw(k as usize, n as usize);
    if b as u32 != beta || (a + b) as u32 != (v - 1) / 2 {
        return Err(Error::RejectProfile(format!("assembled ({a},{b}), wanted beta = {beta}")));
    }
    Ok(cert)
}

fn theorem_15(k: u32, t: u32, u: u32, alpha: u32, ext: &Externals) -> Result<Certificate> {
    if k == 0 || t < 2 || u == 0 || alpha > 2 * k * t * u - 1 {
        return Err(Error::RejectParams(format!(
            "needs k >= 1, t >= 2, u >= 1, alpha <= 2ktu-1, got k={k}, t={t}, u={u}, alpha={alpha}"
        )));
    }
    let (m, n) = (4 * k, 4 * k * t);
    let slots = 2 * k * (u - 1);
    let c = slots.min(alpha / t);
    let a_base = alpha - c * t;
    let b_base = 2 * k * t - 1 - a_base;
    let want = hw_name(n, m, n, a_base, b_base);
    let base = ext
        .find(n as usize, m as usize, n as usize, a_base as usize, b_base as usize)
        .cloned()
        .ok_or_else(|| Error::MissingIngredient(vec![want]))?;
    if u == 1 {
        return Ok(base);
    }
    let outer0 = classical(ClassicalRequest::Resolvable { k: m, u, g: m })?;
    let short = classical(ClassicalRequest::LexShort { m, n: t })?;
    let long = classical(ClassicalRequest::LexLong { m, n: t })?;
    let fills: Vec<Certificate> = (0..slots)
        .map(|i| if i < c { short.clone() } else { long.clone() })
        .collect();
    let outer = l351(&outer0, &fills)?;
    c_rgdd(&outer, &vec![base; u as usize])
}

/// Picks the builder for `HW(v; m, n; alpha, beta)`: a stored fixture, a
/// uniform factorization, or the first pipeline whose shape fits.
///
/// Tuples the status tables reject come back as the matching
/// classification error; solvable tuples with no implemented route give
/// `NotFound`.
pub fn build_hw(v: u32, m: u32, n: u32, alpha: u32, beta: u32, ext: &Externals) -> Result<Certificate> {
    use super::status::{hwp_status, HwpStatus};
    let status = hwp_status(v as u64, m as u64, n as u64, alpha as u64, beta as u64);
    let recipe = match &status {
        HwpStatus::Solvable(r) => r.clone(),
        HwpStatus::NecessaryFail(r) => return Err(Error::NecessaryFail(r.clone())),
        HwpStatus::Nonexistent(r) => return Err(Error::Nonexistent(r.clone())),
        HwpStatus::Open(r) => {
            if let Some(c) = ext.find(v as usize, m as usize, n as usize, alpha as usize, beta as usize) {
                return release(c.clone());
            }
            return Err(Error::Open(r.clone()));
        }
    };
    let (m, n, alpha, beta) = if m <= n { (m, n, alpha, beta) } else { (n, m, beta, alpha) };
    if let Some(name) = recipe.strip_prefix("fixture ") {
        return fixture(name);
    }
    if let Some(c) = ext.find(v as usize, m as usize, n as usize, alpha as usize, beta as usize) {
        return release(c.clone());
    }
    if alpha == 0 || beta == 0 || m == n {
        let k = if beta == 0 { m } else { n };
        if v % 2 == 0 {
            return Err(Error::NotFound(format!(
                "uniform C_{k}-factorization of K_{v} minus a 1-factor is not implemented"
            )));
        }
        return classical(ClassicalRequest::Resolvable { k, u: v, g: 1 });
    }
    let mut tries = Vec::new();
    if n == 9 && [5, 7].contains(&m) && v % (9 * m) == 0 {
        let t = v / (9 * m);
        if t == 1 && [9, 11].contains(&beta) {
            tries.push(PipelineRequest::Lemma48 { u: m, beta });
        }
        if t >= 3 && t % 2 == 1 && [5, 7].contains(&beta) {
            tries.push(PipelineRequest::Lemma410 { t, u: m, beta });
        }
    }
    if (m, n, beta) == (3, 13, 5) && v % 39 == 0 && (v / 39) % 2 == 1 && v / 39 >= 3 {
        tries.push(PipelineRequest::Lemma49 { t: v / 39 });
    }
    if m % 2 == 1 && (n - 1) % (2 * m) == 0 && v == m * n {
        tries.push(PipelineRequest::Theorem14 { k: m, t: (n - 1) / (2 * m), beta });
    }
    if m % 4 == 0 && n % m == 0 && n / m >= 2 && v % n == 0 {
        tries.push(PipelineRequest::Theorem15 { k: m / 4, t: n / m, u: v / n, alpha });
    }
    let mut last = None;
    for req in tries {
        match pipeline(req, ext) {
            Ok(c) => return Ok(c),
            Err(e @ Error::MissingIngredient(_)) => return Err(e),
            Err(e) => last = Some(format!("{}: {e}", req.name())),
        }
    }
    Err(Error::NotFound(match last {
        Some(why) => format!("{status}; {why}"),
        None => format!("{status}, but no builder for this tuple is implemented"),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_avoid_exceptions() {
        assert_eq!(split_fills(5, 1, 11), Some(vec![5]));
        assert_eq!(split_fills(0, 2, 11), Some(vec![0, 0]));
        assert_eq!(split_fills(3, 1, 11), None);
        let s = split_fills(14, 2, 11).unwrap();
        assert_eq!(s.iter().sum::<u32>(), 14);
        assert!(s.iter().all(|b| ![1, 3, 7, 9].contains(b)));
    }

    #[test]
    fn missing_base_reported() {
        let r = pipeline(
            PipelineRequest::Theorem15 { k: 1, t: 2, u: 2, alpha: 0 },
            &Externals::default(),
        );
        match r {
            Err(Error::MissingIngredient(v)) => assert_eq!(v, vec!["HW(8;4,8;0,3)".to_string()]),
            other => panic!("{other:?}"),
        }
    }
}
