//! Almost resolvable `k`-cycle systems: base-cycle templates, their
//! development into full designs, frame filling and the `(k, t)` dispatcher.

mod templates;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::{
    develop, Certificate, ClassKind, Coords, CycleSeq, DevelopmentRule, FactorClass, HostGraph,
    Provenance, Vertex,
};
use crate::search::{cache, search_arcs_template, Budget};
use crate::verify::{check_alignment, check_certificate, check_frame, check_lemma_conditions};
pub use crate::verify::LemmaVariant;

use templates::Pt;

/// Base cycles for one development, with the half-class generator `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcsTemplate {
    pub k: usize,
    pub d: u32,
    pub variant: LemmaVariant,
    pub cycles: Vec<CycleSeq>,
    pub subcase: String,
}

impl ArcsTemplate {
    /// Order of the first coordinate group: `k` or `3k`.
    pub fn modulus(&self) -> u32 {
        match self.variant {
            LemmaVariant::A => self.k as u32,
            LemmaVariant::B => 3 * self.k as u32,
        }
    }

    /// The base almost parallel class (missing `(0,1)`).
    pub fn base_class(&self) -> FactorClass {
        FactorClass::new(
            ClassKind::AlmostParallel {
                k: self.k,
                missing: Vertex::res(&[0, 1]),
            },
            self.cycles.clone(),
        )
    }
}

fn materialize(points: &[Pt], u: u32) -> Result<CycleSeq> {
    let moduli = [u, 2];
    CycleSeq::new(
        points
            .iter()
            .map(|p| match p {
                None => Vertex::Infinity,
                Some((x, j)) => Vertex::res_mod(&[*x, *j as i64], &moduli),
            })
            .collect(),
    )
}

/// Two base `k`-cycles on `Z_k x Z_2` plus infinity (odd `k >= 9`).
pub fn base_cycles_2k1(k: usize) -> Result<ArcsTemplate> {
    if k % 2 == 0 || k < 9 {
        return Err(Error::Unsupported(format!(
            "two-cycle templates need odd k >= 9, got {k}"
        )));
    }
    let (d, tag, raw) = templates::two_k_plus_one(k as i64);
    let cycles = raw
        .iter()
        .map(|c| materialize(c, k as u32))
        .collect::<Result<Vec<_>>>()?;
    Ok(ArcsTemplate {
        k,
        d: d as u32,
        variant: LemmaVariant::A,
        cycles,
        subcase: tag.to_string(),
    })
}

/// Six base `k`-cycles on `Z_{3k} x Z_2` plus infinity (odd `k >= 9`).
pub fn base_cycles_6k1(k: usize) -> Result<ArcsTemplate> {
    if k % 2 == 0 || k < 9 {
        return Err(Error::Unsupported(format!(
            "six-cycle templates need odd k >= 9, got {k}"
        )));
    }
    let (tag, raw) = templates::six_k_plus_one(k as i64);
    let cycles = raw
        .iter()
        .map(|c| materialize(c, 3 * k as u32))
        .collect::<Result<Vec<_>>>()?;
    Ok(ArcsTemplate {
        k,
        d: 3,
        variant: LemmaVariant::B,
        cycles,
        subcase: tag,
    })
}

/// Vertex set `Z_u x Z_2` plus infinity, in vertex order.
pub fn arcs_vertices(u: u32) -> Vec<Vertex> {
    let mut vs = vec![Vertex::Infinity];
    for x in 0..u {
        for j in 0..2 {
            vs.push(Vertex::res(&[x, j]));
        }
    }
    vs
}

/// Develops a template into a full ARCS: the base class under `(+1, -)`
/// followed by the half class generated by `d`.
pub fn expand_arcs(template: &ArcsTemplate) -> Result<Certificate> {
    let base = template.base_class();
    let report = check_lemma_conditions(&base, template.variant, template.k, template.d)?;
    if !report.is_valid() {
        return Err(Error::Reject(format!(
            "base cycles fail the development conditions: {}",
            report
                .violations
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        )));
    }
    let u = template.modulus();
    let k = template.k;
    let rule = DevelopmentRule::new(&[u, 2], &[Some(1), None], u as usize)?;
    let mut classes = develop(&base, &rule)?;

    let c0: Vec<Vertex> = (0..k as u64)
        .map(|i| Vertex::res(&[((i * template.d as u64) % u as u64) as u32, 1]))
        .collect();
    let c0 = CycleSeq::new(c0)?;
    let shifts: u32 = match template.variant {
        LemmaVariant::A => 1,
        LemmaVariant::B => 3,
    };
    let half: Vec<CycleSeq> = (0..shifts)
        .map(|s| c0.translate(&Coords::new(&[s, 0]), &[u, 2]))
        .collect();
    classes.push(FactorClass::new(ClassKind::HalfParallel(k), half));

    let v = 2 * u as usize + 1;
    let cert = Certificate::new(
        HostGraph::complete(arcs_vertices(u)),
        classes,
        Provenance::new("arcs_development")
            .param("k", k)
            .param("v", v)
            .param("d", template.d)
            .param("subcase", template.subcase.replace(' ', "_")),
    );
    release(cert)
}

/// Gate every builder output through the verifier.
pub(crate) fn release(cert: Certificate) -> Result<Certificate> {
    let report = check_certificate(&cert);
    if !report.is_valid() {
        return Err(Error::Unverified(format!(
            "{} produced an invalid design: {}",
            cert.provenance.construction,
            report
                .violations
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        )));
    }
    Ok(cert)
}

/// Fills a `(k,1)`-CF((2k)^t) with `t` copies of a `k`-ARCS(2k+1).
///
/// Base `i` is placed on part `i` plus infinity (its finite vertices mapped
/// onto the part in vertex order); the `j`-th holey factor missing part `i`
/// absorbs almost parallel class `j` of base `i`; the base half classes
/// unite into the new half class.
pub fn fill_frame(frame: &Certificate, bases: &[Certificate]) -> Result<Certificate> {
    let parts = frame
        .host
        .parts()
        .ok_or_else(|| Error::RejectCounts("frame host is not multipartite".into()))?
        .to_vec();
    let t = parts.len();
    if t < 4 {
        return Err(Error::RejectCounts(format!("frame has {t} parts, need at least 4")));
    }
    if bases.len() != t {
        return Err(Error::RejectCounts(format!(
            "{} base designs for {t} parts",
            bases.len()
        )));
    }
    let g = parts[0].len();
    if g % 2 != 0 {
        return Err(Error::RejectCounts(format!("odd part size {g}")));
    }
    let k = g / 2;
    let frame_report = check_frame(frame, &parts, k).map_err(|e| Error::RejectCounts(e.to_string()))?;
    if !frame_report.is_valid() {
        return Err(Error::RejectCounts(format!(
            "frame does not verify: {}",
            frame_report.violations.first().map(|v| v.to_string()).unwrap_or_default()
        )));
    }
    if parts.iter().flatten().any(|v| *v == Vertex::Infinity) {
        return Err(Error::RejectCounts("frame already uses infinity".into()));
    }

    let mut holey: Vec<Vec<&FactorClass>> = vec![Vec::new(); t];
    for c in &frame.classes {
        if let ClassKind::Holey { hole, .. } = c.kind {
            holey[hole].push(c);
        }
    }

    let mut ap_classes = Vec::new();
    let mut half_cycles = Vec::new();
    for (i, base) in bases.iter().enumerate() {
        if !check_certificate(base).is_valid() || !check_alignment(base) {
            return Err(Error::RejectCounts(format!(
                "base {i} is not an aligned k-ARCS(2k+1)"
            )));
        }
        let finite: Vec<Vertex> = base
            .host
            .vertices()
            .into_iter()
            .filter(|v| *v != Vertex::Infinity)
            .collect();
        if finite.len() != g {
            return Err(Error::RejectCounts(format!(
                "base {i} has {} finite vertices, part has {g}",
                finite.len()
            )));
        }
        let map: BTreeMap<Vertex, Vertex> = finite
            .iter()
            .cloned()
            .zip(parts[i].iter().cloned())
            .collect();
        let relabel = |v: &Vertex| map.get(v).cloned().unwrap_or_else(|| v.clone());

        let aps: Vec<&FactorClass> = base
            .classes
            .iter()
            .filter(|c| matches!(c.kind, ClassKind::AlmostParallel { .. }))
            .collect();
        if aps.len() != k || holey[i].len() != k {
            return Err(Error::RejectCounts(format!(
                "part {i}: {} holey factors and {} almost parallel classes, need {k} of each",
                holey[i].len(),
                aps.len()
            )));
        }
        for (h, ap) in holey[i].iter().zip(&aps) {
            let ap = ap.map_vertices(&relabel);
            let mut cycles = h.cycles.clone();
            cycles.extend(ap.cycles.iter().cloned());
            ap_classes.push(FactorClass::new(ap.kind.clone(), cycles));
        }
        for c in &base.classes {
            if let ClassKind::HalfParallel(_) = c.kind {
                if c.vertices().contains(&Vertex::Infinity) {
                    return Err(Error::RejectCounts(format!(
                        "half class of base {i} uses infinity"
                    )));
                }
                half_cycles.extend(c.map_vertices(&relabel).cycles);
            }
        }
    }
    ap_classes.push(FactorClass::new(ClassKind::HalfParallel(k), half_cycles));

    let mut vertices: Vec<Vertex> = parts.iter().flatten().cloned().collect();
    vertices.push(Vertex::Infinity);
    vertices.sort();
    let v = vertices.len();
    let mut prov = Provenance::new("frame_filling")
        .param("k", k)
        .param("t", t)
        .param("v", v)
        .ingredient(frame.provenance.clone());
    if let Some(b) = bases.first() {
        prov = prov.ingredient(b.provenance.clone());
    }
    let cert = Certificate::new(HostGraph::complete(vertices), ap_classes, prov);
    let cert = release(cert)?;
    if !check_alignment(&cert) {
        return Err(Error::RejectAlignment("filled design is not aligned".into()));
    }
    Ok(cert)
}

/// Builds a `k`-ARCS(2kt+1).
///
/// Odd `k >= 9` uses the stored templates for `t = 1, 3`; smaller odd `k`
/// searches base cycles of the same shape. `t >= 4` fills a cycle frame of
/// type `(2k)^t` (cached search) with copies of the `t = 1` design.
pub fn build_arcs(k: usize, t: usize) -> Result<Certificate> {
    build_arcs_with(k, t, Budget::default())
}

pub fn build_arcs_with(k: usize, t: usize, budget: Budget) -> Result<Certificate> {
    if k < 3 || t == 0 {
        return Err(Error::RejectParams(format!("need k >= 3 and t >= 1, got k={k}, t={t}")));
    }
    let v = 2 * k * t + 1;
    if (k == 3 && (v == 7 || v == 13)) || (k == 4 && v == 9) {
        return Err(Error::Nonexistent(format!(
            "no {k}-ARCS({v}) exists (known exception)"
        )));
    }
    if k % 2 == 0 {
        return Err(Error::Unsupported(format!(
            "even cycle length {k}: only odd k is constructed"
        )));
    }
    match t {
        1 if k >= 9 => expand_arcs(&base_cycles_2k1(k)?),
        3 if k >= 9 => expand_arcs(&base_cycles_6k1(k)?),
        1 | 3 => {
            let key = format!("arcs-k{k}-t{t}");
            cache::cached(
                &key,
                |c| check_certificate(c).is_valid() && check_alignment(c),
                || expand_arcs(&search_arcs_template(k, t, 0, budget)?),
            )
        }
        2 if k >= 11 => Err(Error::Open(format!(
            "{k}-ARCS({v}): t = 2 is not settled for k >= 11"
        ))),
        2 => Err(Error::NotFound(format!(
            "{k}-ARCS({v}) exists but no construction for t = 2 is implemented"
        ))),
        _ => {
            let base = build_arcs_with(k, 1, budget).map_err(|e| match e {
                Error::Nonexistent(m) => Error::NotFound(format!(
                    "frame filling needs a {k}-ARCS({}): {m}",
                    2 * k + 1
                )),
                other => other,
            })?;
            let frame = frame_for(k as u32, 2 * k as u32, t as u32, budget)?;
            let bases = vec![base; t];
            fill_frame(&frame, &bases)
        }
    }
}

/// `(k,1)-CF(g^u)` from the cache, else by search (and cached).
pub fn frame_for(k: u32, g: u32, u: u32, budget: Budget) -> Result<Certificate> {
    let key = format!("frame-k{k}-g{g}-u{u}");
    let parts = crate::search::frame::frame_parts(g, u);
    cache::cached(
        &key,
        |c| {
            check_frame(c, &parts, k as usize)
                .map(|r| r.is_valid())
                .unwrap_or(false)
        },
        || crate::search::frame::search_frame(k, g, u, 0, budget),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::difference_list;

    #[test]
    fn first_segment_at_nine() {
        let t = base_cycles_2k1(9).unwrap();
        assert_eq!(t.d, 4);
        let first: Vec<Vertex> = t.cycles[0].vertices()[..4].to_vec();
        assert_eq!(
            first,
            vec![
                Vertex::res(&[2, 0]),
                Vertex::res(&[7, 1]),
                Vertex::res(&[1, 0]),
                Vertex::res(&[8, 1])
            ]
        );
    }

    #[test]
    fn eleven_ends_with_fixed_tail() {
        let t = base_cycles_2k1(11).unwrap();
        assert_eq!(t.d, 2);
        let c = t.cycles[0].vertices();
        assert_eq!(
            &c[c.len() - 3..],
            &[Vertex::res(&[10, 0]), Vertex::res(&[1, 1]), Vertex::res(&[0, 0])]
        );
    }

    #[test]
    fn nine_passes_conditions() {
        let t = base_cycles_2k1(9).unwrap();
        let rep = check_lemma_conditions(&t.base_class(), LemmaVariant::A, 9, 4).unwrap();
        assert!(rep.is_valid(), "{rep}");
        let d11 = difference_list(&t.base_class(), (1, 1), 9);
        for x in [1, 2, 3, 6, 7, 8] {
            assert!(d11.diffs.contains(&x));
        }
    }

    #[test]
    fn small_k_unsupported() {
        assert!(matches!(base_cycles_2k1(7), Err(Error::Unsupported(_))));
        assert!(matches!(base_cycles_2k1(10), Err(Error::Unsupported(_))));
        assert!(matches!(base_cycles_6k1(5), Err(Error::Unsupported(_))));
    }

    #[test]
    fn literal_rows_at_nine_and_eleven() {
        let m = |x: i64, j: i64, u: u32| Vertex::res_mod(&[x, j], &[u, 2]);
        let t9 = base_cycles_6k1(9).unwrap();
        let c5: Vec<Vertex> = [(2, 1), (1, 1), (-1, 1), (1, 0), (-13, 1), (0, 0), (-1, 0), (2, 0)]
            .iter()
            .map(|&(x, j)| m(x, j, 27))
            .collect();
        assert_eq!(t9.cycles[4].vertices()[0], Vertex::Infinity);
        assert_eq!(&t9.cycles[4].vertices()[1..], &c5[..]);
        let t11 = base_cycles_6k1(11).unwrap();
        let c6: Vec<Vertex> = [
            (16, 0), (-16, 0), (15, 1), (-15, 0), (14, 1), (15, 0), (-15, 1), (14, 0), (16, 1),
            (0, 0), (-16, 1),
        ]
        .iter()
        .map(|&(x, j)| m(x, j, 33))
        .collect();
        assert_eq!(t11.cycles[5].vertices(), &c6[..]);
    }

    #[test]
    fn half_class_at_nine() {
        let cert = expand_arcs(&base_cycles_2k1(9).unwrap()).unwrap();
        let half = cert.classes.last().unwrap();
        let want: Vec<Vertex> = [0, 4, 8, 3, 7, 2, 6, 1, 5]
            .iter()
            .map(|&x| Vertex::res(&[x, 1]))
            .collect();
        assert_eq!(half.cycles[0].vertices(), &want[..]);
        assert_eq!(cert.classes.len(), 10);
        let edges: usize = cert.classes.iter().map(|c| c.edges().len()).sum();
        assert_eq!(edges, 171);
        assert!(check_alignment(&cert));
    }
}
