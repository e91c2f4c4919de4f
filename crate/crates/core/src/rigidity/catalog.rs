//! Frozen classification data and the resolution of named entries to
//! Schubert varieties.
//!
//! Named smooth non-linear entries are not subdiagram submanifolds, so
//! they are located in `W^P` by the properties that pin them down: the
//! ambient subdiagram containing them, the Levi factor stabilizing them
//! and their dimension. Each search must return exactly one element.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::diagram::MarkedDiagram;
use crate::error::{Error, Result};
use crate::root_system::Family;
use crate::schubert::{subdiagram_to_weyl, SchubertVariety, SubdiagramDescriptor};
use crate::weyl::NodeSet;

use super::Status;

pub const CATALOG_VERSION: u32 = 1;

/// Tag -> statement for every provenance label a verdict may carry.
pub const PROVENANCE: &[(&str, &str)] = &[
    ("thm:nonlinear-smooth-schur-rigid", "a non-linear smooth Schubert variety is Schur rigid"),
    ("prop:smooth-schubert-classification", "a non-linear smooth Schubert variety is a subdiagram submanifold or a listed exception"),
    ("prop:smooth-schubert-classification(1)", "(C_n, a_{i+1}, a_i) in (C_m, a_k), m - k = n - i"),
    ("prop:smooth-schubert-classification(2)", "(C_2, a_2, a_1) in (F4, a3)"),
    ("prop:smooth-schubert-classification(3)", "(B_3, a_2, a_3) in (F4, a3)"),
    ("prop:codim2-intersection", "every adjacent node meets at least two tangent roots"),
    ("obs:nonmaximal-linear", "a linear space inside a larger linear Schubert variety is not Schur rigid"),
    ("def:linear-degree-one", "linear means degree one in the minimal embedding"),
    ("prop:maximal-linear", "a maximal linear space is Schur rigid outside items (1)-(7)"),
    ("prop:maximal-linear(1)", "(B_n, a_k), P^{n-k}, k <= n-2"),
    ("prop:maximal-linear(2)", "(C_n, a_n), P^1"),
    ("prop:maximal-linear(3)", "(F4, a1), P^2"),
    ("prop:maximal-linear(4)", "(G2, a2), P^1"),
    ("prop:maximal-linear(5)", "(F4, a3), P^3_B2"),
    ("prop:maximal-linear(6)", "(F4, a3), P^3_A3"),
    ("prop:maximal-linear(7)", "(F4, a4), P^4_A4"),
    ("thm:schubert-rigidity(1)", "(B_n, a_k), P^{n-k}, k <= n-2 is not Schubert rigid"),
    ("thm:schubert-rigidity(2)", "(C_n, a_n), P^1 is not Schubert rigid"),
    ("thm:schubert-rigidity(3)", "(F4, a1), P^2 is not Schubert rigid"),
    ("thm:schubert-rigidity(4)", "(G2, a2), P^1: Schubert rigidity open"),
    ("prop:f4-not-homologically-rigid", "P^3_B2, P^3_A3 in (F4, a3) and P^4_A4 in (F4, a4) are not homologically rigid"),
    ("conv:full-automorphism-group", "(B_l, a_l), (C_l, a_1), (G2, a1) are re-presented for their full automorphism group"),
    ("scope:smooth-input-only", "classification applies to smooth S_0 only; smoothness not certified"),
];

pub fn is_known_source(tag: &str) -> bool {
    PROVENANCE.iter().any(|(t, _)| *t == tag)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CatalogKind {
    SmoothNonlinearExceptional,
    MaximalLinearException,
    NotSchubertRigid,
    SchubertRigidityOpen,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    pub ambient: String,
    pub s0: String,
    /// Adjacent nodes `Λ` when the entry is a subdiagram submanifold.
    pub lambda: Option<String>,
    pub kind: CatalogKind,
    pub source: String,
    pub schur: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub version: u32,
    pub entries: Vec<CatalogEntry>,
}

fn entry(
    id: &str,
    ambient: &str,
    s0: &str,
    lambda: Option<&str>,
    kind: CatalogKind,
    source: &str,
    schur: Status,
) -> CatalogEntry {
    CatalogEntry {
        id: id.into(),
        ambient: ambient.into(),
        s0: s0.into(),
        lambda: lambda.map(String::from),
        kind,
        source: source.into(),
        schur,
    }
}

/// Named non-linear smooth Schubert varieties that are not subdiagram
/// submanifolds.
pub fn smooth_nonlinear_entries() -> Vec<CatalogEntry> {
    use CatalogKind::SmoothNonlinearExceptional as K;
    vec![
        entry(
            "C{n}-a{i+1}-a{i}",
            "(C_m, a_k), 2 <= n < m, 1 <= i <= n-1, m-k = n-i",
            "(C_n, a_{i+1}, a_i)",
            None,
            K,
            "prop:smooth-schubert-classification(1)",
            Status::SchurRigid,
        ),
        entry("C2-a2-a1", "(F4, a3)", "(C_2, a_2, a_1)", None, K, "prop:smooth-schubert-classification(2)", Status::SchurRigid),
        entry("B3-a2-a3", "(F4, a3)", "(B_3, a_2, a_3)", None, K, "prop:smooth-schubert-classification(3)", Status::SchurRigid),
    ]
}

/// The maximal-linear exceptions (1)-(7) followed by the Schubert-rigidity
/// list, whose last item is open.
pub fn catalog_linear_exceptions() -> Vec<CatalogEntry> {
    use CatalogKind::*;
    let ns = Status::NotSchurRigid;
    vec![
        entry(
            "ML1",
            "(B_n, a_k), k <= n-2",
            "P^{n-k}",
            Some("{a_n} for k = 1; {a_{k-1}, a_n} for 2 <= k <= n-2"),
            MaximalLinearException,
            "prop:maximal-linear(1)",
            ns,
        ),
        entry("ML2", "(C_n, a_n)", "P^1", Some("{a_{n-1}}"), MaximalLinearException, "prop:maximal-linear(2)", ns),
        entry("ML3", "(F4, a1)", "P^2", Some("{a3}"), MaximalLinearException, "prop:maximal-linear(3)", ns),
        entry("ML4", "(G2, a2)", "P^1", Some("{a1}"), MaximalLinearException, "prop:maximal-linear(4)", ns),
        entry("ML5", "(F4, a3)", "P^3_B2", None, MaximalLinearException, "prop:maximal-linear(5)", ns),
        entry("ML6", "(F4, a3)", "P^3_A3", None, MaximalLinearException, "prop:maximal-linear(6)", ns),
        entry("ML7", "(F4, a4)", "P^4_A4", None, MaximalLinearException, "prop:maximal-linear(7)", ns),
        entry("SR1", "(B_n, a_k), k <= n-2", "P^{n-k}", None, NotSchubertRigid, "thm:schubert-rigidity(1)", ns),
        entry("SR2", "(C_n, a_n)", "P^1", None, NotSchubertRigid, "thm:schubert-rigidity(2)", ns),
        entry("SR3", "(F4, a1)", "P^2", None, NotSchubertRigid, "thm:schubert-rigidity(3)", ns),
        entry("SR4", "(G2, a2)", "P^1", None, SchubertRigidityOpen, "thm:schubert-rigidity(4)", ns),
    ]
}

pub fn full_catalog() -> Catalog {
    let mut entries = smooth_nonlinear_entries();
    entries.extend(catalog_linear_exceptions());
    Catalog { version: CATALOG_VERSION, entries }
}

/// A named entry resolved inside a specific diagram.
#[derive(Debug, Clone)]
pub struct NamedEntry {
    pub tag: String,
    pub source: &'static str,
    pub sv: SchubertVariety,
}

fn nodes(d: &MarkedDiagram, one_based: impl IntoIterator<Item = usize>) -> NodeSet {
    NodeSet::from_indices(d.rank(), one_based.into_iter().map(|i| i - 1)).expect("node in range")
}

fn unique<F>(d: &Arc<MarkedDiagram>, what: &str, pred: F) -> Result<SchubertVariety>
where
    F: Fn(&SchubertVariety) -> bool,
{
    let hits: Vec<SchubertVariety> = SchubertVariety::all(d).into_iter().filter(|s| pred(s)).collect();
    match hits.len() {
        1 => Ok(hits.into_iter().next().unwrap()),
        n => Err(Error::Internal(format!("{what} in {d}: expected one Schubert variety, found {n}"))),
    }
}

fn sub_rep(d: &Arc<MarkedDiagram>, one_based: &[usize]) -> Result<SchubertVariety> {
    subdiagram_to_weyl(d, &SubdiagramDescriptor::nodes(nodes(d, one_based.iter().copied())))
}

/// Below the subdiagram submanifold `container`, stabilized by `levi`,
/// of dimension `dim`.
fn by_constraints(
    d: &Arc<MarkedDiagram>,
    what: &str,
    container: &[usize],
    levi: NodeSet,
    dim: usize,
) -> Result<SchubertVariety> {
    let top = sub_rep(d, container)?;
    let sv = unique(d, what, |s| {
        s.dimension() == dim && top.contains(s) && levi.is_subset(s.stabilizer_levi_set())
    })?;
    if sv.is_linear() || !sv.rationally_smooth() {
        return Err(Error::Internal(format!("{what} in {d} resolved to an unexpected variety")));
    }
    Ok(sv)
}

/// Parse `C{n}-a{j}-a{i}` into `(n, i)` when `j = i + 1`.
fn parse_c_tag(tag: &str) -> Option<(usize, usize)> {
    let rest = tag.strip_prefix('C')?;
    let mut parts = rest.split('-');
    let n: usize = parts.next()?.parse().ok()?;
    let j: usize = parts.next()?.strip_prefix('a')?.parse().ok()?;
    let i: usize = parts.next()?.strip_prefix('a')?.parse().ok()?;
    (parts.next().is_none() && j == i + 1).then_some((n, i))
}

/// Resolve an exceptional tag to its Schubert variety in `d`.
///
/// Smooth non-linear entries: `C{n}-a{i+1}-a{i}` in `(C_m, a_k)`,
/// `C2-a2-a1` and `B3-a2-a3` in `(F4, a3)`. The short-root maximal linear
/// spaces are also addressable: `P3-B2`, `P3-A3` in `(F4, a3)` and
/// `P4-A4` in `(F4, a4)`.
pub fn resolve_tag(d: &Arc<MarkedDiagram>, tag: &str) -> Result<NamedEntry> {
    let ty = d.simple_type();
    let k = d.marked() + 1;
    let unknown = || Error::UnknownTag { tag: tag.to_string(), diagram: d.to_string() };
    let named = |source: &'static str, sv: SchubertVariety| NamedEntry { tag: tag.to_string(), source, sv };
    match (ty.family, ty.rank, k, tag) {
        (Family::F, 4, 3, "C2-a2-a1") => {
            let sv = by_constraints(d, tag, &[2, 3, 4], nodes(d, [2, 3]), 5)?;
            Ok(named("prop:smooth-schubert-classification(2)", sv))
        }
        (Family::F, 4, 3, "B3-a2-a3") => {
            let sv = by_constraints(d, tag, &[1, 2, 3, 4], nodes(d, [1, 2, 3]), 9)?;
            Ok(named("prop:smooth-schubert-classification(3)", sv))
        }
        (Family::F, 4, 3, "P3-B2") => Ok(named("prop:maximal-linear(5)", sub_rep(d, &[2, 3])?)),
        (Family::F, 4, 3, "P3-A3") => Ok(named("prop:maximal-linear(6)", p3_a3(d)?)),
        (Family::F, 4, 4, "P4-A4") => Ok(named("prop:maximal-linear(7)", p4_a4(d)?)),
        (Family::C, m, k, _) => {
            let (n, i) = parse_c_tag(tag).ok_or_else(unknown)?;
            // the entry sits in the (C_{n+1}, a_{i+1}) subdiagram on nodes m-n..m
            if !(2 <= n && n < m && 1 <= i && i < n && m - k == n - i) {
                return Err(unknown());
            }
            let container: Vec<usize> = (m - n..=m).collect();
            let levi = nodes(d, m - n + 1..=m);
            let dim = (i + 1) * (2 * n - i) - i * (i + 1) / 2;
            let sv = by_constraints(d, tag, &container, levi, dim)?;
            Ok(named("prop:smooth-schubert-classification(1)", sv))
        }
        _ => Err(unknown()),
    }
}

/// Tags of the smooth non-linear named entries living in `d`.
pub fn smooth_tags(d: &MarkedDiagram) -> Vec<String> {
    let ty = d.simple_type();
    let k = d.marked() + 1;
    match (ty.family, ty.rank, k) {
        (Family::F, 4, 3) => vec!["C2-a2-a1".into(), "B3-a2-a3".into()],
        (Family::C, m, k) if k < m => {
            let lo = 2.max(m - k + 1);
            (lo..m).map(|n| {
                let i = k + n - m;
                format!("C{n}-a{}-a{i}", i + 1)
            })
            .collect()
        }
        _ => Vec::new(),
    }
}

/// The maximal linear `P^3` in `(F4, a3)` inside the `(B3, a3)` subdiagram
/// submanifold that is not itself a subdiagram submanifold.
pub fn p3_a3(d: &Arc<MarkedDiagram>) -> Result<SchubertVariety> {
    let spinor = sub_rep(d, &[1, 2, 3])?;
    let b2 = sub_rep(d, &[2, 3])?;
    unique(d, "P3-A3", |s| {
        s.dimension() == 3 && s.is_maximal_linear() && spinor.contains(s) && *s != b2
    })
}

/// The maximal linear `P^4` in `(F4, a4)`.
pub fn p4_a4(d: &Arc<MarkedDiagram>) -> Result<SchubertVariety> {
    unique(d, "P4-A4", |s| s.dimension() == 4 && s.is_maximal_linear())
}

/// Item number (1-7) of the maximal-linear exception list matched by
/// `sv`, evaluated in a diagram already re-presented for its full
/// automorphism group.
pub fn maximal_linear_exception(sv: &SchubertVariety) -> Result<Option<usize>> {
    let d = sv.diagram();
    let ty = d.simple_type();
    let n = ty.rank;
    let k = d.marked() + 1;
    let is_sub = |one_based: &[usize]| -> Result<bool> { Ok(sub_rep(d, one_based)? == *sv) };
    Ok(match (ty.family, k) {
        (Family::B, k) if k + 2 <= n => is_sub(&(k..n).collect::<Vec<_>>())?.then_some(1),
        (Family::C, k) if k == n => is_sub(&[n])?.then_some(2),
        (Family::F, 1) => is_sub(&[1, 2])?.then_some(3),
        (Family::G, 2) => is_sub(&[2])?.then_some(4),
        (Family::F, 3) => {
            if is_sub(&[2, 3])? {
                Some(5)
            } else if p3_a3(d)? == *sv {
                Some(6)
            } else {
                None
            }
        }
        (Family::F, 4) => (p4_a4(d)? == *sv).then_some(7),
        _ => None,
    })
}
