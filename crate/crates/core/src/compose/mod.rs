//! Recursive compositions of Hamilton-Waterloo designs, the stored small
//! designs, classical ingredients, the multi-stage pipelines and the
//! existence status oracle.

pub mod classical;
pub mod fixtures;
pub mod pipeline;
pub mod status;

use std::collections::{BTreeMap, BTreeSet};

use crate::arcs::release;
use crate::error::{Error, Result};
use crate::model::{
    Certificate, ClassKind, FactorClass, HostGraph, ProfileKey, Provenance, Vertex,
};
use crate::verify::check_certificate;

pub use classical::{classical, ClassicalRequest};
pub use fixtures::fixture;
pub use pipeline::{build_hw, pipeline, Externals, PipelineRequest};
pub use status::{arcs_status, factorization_status, hwp_status, HwpStatus};

fn require_valid(c: &Certificate, what: &str) -> Result<()> {
    let r = check_certificate(c);
    if r.is_valid() {
        Ok(())
    } else {
        Err(Error::Reject(format!("{what} does not verify: {r}")))
    }
}

/// Parts of a host read as `K_u[g]`: a complete graph counts as `K_u[1]`.
pub fn host_parts(host: &HostGraph) -> Result<Vec<Vec<Vertex>>> {
    match host {
        HostGraph::Multipartite { parts } => Ok(parts.clone()),
        HostGraph::Complete { vertices } => Ok(vertices.iter().map(|v| vec![v.clone()]).collect()),
        _ => Err(Error::RejectHost(
            "expected a complete or complete multipartite host".into(),
        )),
    }
}

fn cycle_lengths(certs: &[&Certificate]) -> BTreeSet<usize> {
    certs
        .iter()
        .flat_map(|c| c.measured_profile().0.into_keys())
        .filter_map(|k| match k {
            ProfileKey::Factor(l) => Some(l),
            _ => None,
        })
        .collect()
}

/// Orders classes so that equal profiles line up: by kind, stable.
fn sorted_classes(c: &Certificate) -> Vec<&FactorClass> {
    let mut v: Vec<&FactorClass> = c.classes.iter().collect();
    v.sort_by_key(|f| f.kind.profile_key());
    v
}

/// Fills the parts of an HW design on `K_u[g]` with `u` copies of an HW
/// design on `K_g`; the `i`-th factors of the copies are united.
///
/// Copy `i` is placed on part `i` by matching the part's listed order with
/// the copy's sorted vertex order.
pub fn c_rgdd(outer: &Certificate, inner: &[Certificate]) -> Result<Certificate> {
    require_valid(outer, "outer design")?;
    let parts = host_parts(&outer.host)?;
    let u = parts.len();
    if inner.len() != u {
        return Err(Error::RejectProfile(format!(
            "{u} parts but {} inner designs",
            inner.len()
        )));
    }
    let g = parts[0].len();
    if parts.iter().any(|p| p.len() != g) {
        return Err(Error::RejectParts("parts differ in size".into()));
    }
    for (i, d) in inner.iter().enumerate() {
        require_valid(d, &format!("inner design {i}"))?;
        if !matches!(d.host, HostGraph::Complete { .. }) || d.host.order() != g {
            return Err(Error::RejectHost(format!(
                "inner design {i} is not on a complete graph of order {g}"
            )));
        }
        if d.measured_profile() != inner[0].measured_profile() {
            return Err(Error::RejectProfile(format!(
                "inner design {i} has profile {}, expected {}",
                d.measured_profile(),
                inner[0].measured_profile()
            )));
        }
    }
    let mut all: Vec<&Certificate> = inner.iter().collect();
    all.push(outer);
    let lens = cycle_lengths(&all);
    if lens.len() > 2 {
        return Err(Error::RejectProfile(format!(
            "outer and inner designs use cycle lengths {lens:?}"
        )));
    }
    let outer_1f = outer.measured_profile().count(ProfileKey::OneFactor);
    let inner_1f = inner[0].measured_profile().count(ProfileKey::OneFactor);
    if outer_1f > 0 && inner_1f > 0 {
        return Err(Error::RejectProfile(
            "both outer and inner designs carry a 1-factor".into(),
        ));
    }
    let expected_1f = usize::from((g * u) % 2 == 0);
    if outer_1f + inner_1f != expected_1f {
        return Err(Error::RejectProfile(format!(
            "order {} needs {expected_1f} 1-factor(s), found {}",
            g * u,
            outer_1f + inner_1f
        )));
    }

    let mut classes: Vec<FactorClass> = outer.classes.clone();
    let maps: Vec<BTreeMap<Vertex, Vertex>> = inner
        .iter()
        .zip(&parts)
        .map(|(d, p)| d.host.vertices().into_iter().zip(p.iter().cloned()).collect())
        .collect();
    let sorted: Vec<Vec<&FactorClass>> = inner.iter().map(sorted_classes).collect();
    for j in 0..sorted[0].len() {
        let kind = sorted[0][j].kind.clone();
        let mut cycles = Vec::new();
        let mut pairs = Vec::new();
        for (i, s) in sorted.iter().enumerate() {
            let f = s[j].map_vertices(&|v: &Vertex| maps[i][v].clone());
            cycles.extend(f.cycles);
            pairs.extend(f.pairs);
        }
        classes.push(if kind == ClassKind::OneFactor {
            FactorClass::one_factor(pairs)
        } else {
            FactorClass::new(kind, cycles)
        });
    }
    let mut prov = Provenance::new("c_rgdd")
        .param("u", u)
        .param("g", g)
        .ingredient(outer.provenance.clone());
    for d in inner {
        prov = prov.ingredient(d.provenance.clone());
    }
    release(Certificate::new(
        HostGraph::complete(parts.into_iter().flatten().collect()),
        classes,
        prov,
    ))
}

/// Blows every vertex of an HW design on `K_u[g]` up into `s` copies and
/// replaces the `i`-th factor (a union of `l`-cycles) by the factors of
/// `fills[i]`, a design on `C_l[s]`.
///
/// New vertices are `(p, z)` with `p` the index of the old vertex in sorted
/// order and `z` in `Z_s`.
pub fn l351(outer: &Certificate, fills: &[Certificate]) -> Result<Certificate> {
    require_valid(outer, "outer design")?;
    let parts = host_parts(&outer.host)?;
    if fills.len() != outer.classes.len() {
        return Err(Error::RejectProfile(format!(
            "{} factors but {} fillings",
            outer.classes.len(),
            fills.len()
        )));
    }
    let index: BTreeMap<Vertex, u32> = outer
        .host
        .vertices()
        .into_iter()
        .enumerate()
        .map(|(i, v)| (v, i as u32))
        .collect();
    let mut s = None;
    let mut classes = Vec::new();
    for (i, (f, fill)) in outer.classes.iter().zip(fills).enumerate() {
        let len = match f.kind {
            ClassKind::Uniform(l) => l as u32,
            ClassKind::Mixed => f.cycles.first().map_or(0, |c| c.len() as u32),
            _ => {
                return Err(Error::RejectProfile(format!(
                    "outer class {i} is not a cycle factor"
                )))
            }
        };
        let HostGraph::LexCycle { m, n } = fill.host else {
            return Err(Error::RejectHost(format!("filling {i} is not on C_m[s]")));
        };
        if f.cycles.iter().any(|c| c.len() as u32 != m) || m != len {
            return Err(Error::RejectProfile(format!(
                "filling {i} is on C_{m}[{n}] but the factor has {len}-cycles"
            )));
        }
        if *s.get_or_insert(n) != n {
            return Err(Error::RejectProfile(format!("filling {i} uses s = {n}")));
        }
        require_valid(fill, &format!("filling {i}"))?;
        for fc in &fill.classes {
            let mut cycles = Vec::new();
            for c in &f.cycles {
                let place = |v: &Vertex| {
                    let xz = v.coords().expect("lex vertices are residues").as_slice();
                    Vertex::res(&[index[&c.vertices()[xz[0] as usize]], xz[1]])
                };
                cycles.extend(fc.cycles.iter().map(|q| q.map(place)));
            }
            classes.push(FactorClass::new(fc.kind.clone(), cycles));
        }
    }
    let s = s.ok_or_else(|| Error::RejectProfile("no factors to fill".into()))?;
    let new_parts: Vec<Vec<Vertex>> = parts
        .iter()
        .map(|p| {
            p.iter()
                .flat_map(|v| (0..s).map(move |z| (v, z)))
                .map(|(v, z)| Vertex::res(&[index[v], z]))
                .collect()
        })
        .collect();
    let mut prov = Provenance::new("l351")
        .param("s", s)
        .ingredient(outer.provenance.clone());
    for f in fills {
        prov = prov.ingredient(f.provenance.clone());
    }
    release(Certificate::new(
        HostGraph::Multipartite { parts: new_parts },
        classes,
        prov,
    ))
}
