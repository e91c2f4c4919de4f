//! Schur-rigidity classification of pairs `(S, S_0)`.
//!
//! The decision procedure consumes smoothness from two sources only:
//! subdiagram submanifolds and the named catalog entries (plus linear
//! spaces, which are smooth). Anything else is reported as out of scope.

pub mod catalog;
pub mod normalize;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::diagram::MarkedDiagram;
use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::root_system::{RootId, RootSystem};
use crate::schubert::{
    all_subdiagrams, lambda_of, subdiagram_to_weyl, tangent_roots_subdiagram, SchubertVariety,
    SubdiagramDescriptor,
};
use crate::weyl::NodeSet;

pub use catalog::{catalog_linear_exceptions, full_catalog, Catalog, CatalogEntry, CatalogKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    SchurRigid,
    NotSchurRigid,
    OutOfScope,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::SchurRigid => "SchurRigid",
            Status::NotSchurRigid => "NotSchurRigid",
            Status::OutOfScope => "OutOfScope",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reason {
    pub criterion: String,
    pub result: String,
    pub source: String,
}

fn reason(criterion: &str, result: impl Into<String>, source: &str) -> Reason {
    debug_assert!(catalog::is_known_source(source), "{source}");
    Reason { criterion: criterion.into(), result: result.into(), source: source.into() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    /// `None` when smoothness could not be certified.
    pub smooth: Option<bool>,
    pub linear: bool,
    pub maximal_linear: bool,
    /// `None` when no subdiagram tangent description applies.
    pub codim2_pass: Option<bool>,
    pub catalog_exception: Option<String>,
    pub rationally_smooth: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub pair: String,
    pub status: Status,
    pub reasons: Vec<Reason>,
    pub flags: Flags,
}

/// How `S_0` is given.
#[derive(Debug, Clone)]
pub enum S0 {
    Subdiagram(SubdiagramDescriptor),
    Schubert(SchubertVariety),
}

#[derive(Debug, Clone)]
pub struct PairDescriptor {
    pub diagram: Arc<MarkedDiagram>,
    pub s0: S0,
}

impl PairDescriptor {
    pub fn subdiagram(diagram: Arc<MarkedDiagram>, nodes: NodeSet) -> Self {
        PairDescriptor { diagram, s0: S0::Subdiagram(SubdiagramDescriptor::nodes(nodes)) }
    }

    pub fn exceptional(diagram: Arc<MarkedDiagram>, tag: &str) -> Self {
        PairDescriptor { diagram, s0: S0::Subdiagram(SubdiagramDescriptor::exceptional(tag)) }
    }

    pub fn schubert(sv: SchubertVariety) -> Self {
        PairDescriptor { diagram: sv.diagram().clone(), s0: S0::Schubert(sv) }
    }

    /// `F4:3 / sub=2,3`, `F4:3 / exc=C2-a2-a1` or `F4:3 / w=3 2 3`.
    pub fn label(&self) -> String {
        match &self.s0 {
            S0::Subdiagram(sd) => match &sd.exceptional_tag {
                Some(t) => format!("{} / exc={t}", self.diagram),
                None => format!("{} / sub={}", self.diagram, sd.nodes.to_label()),
            },
            S0::Schubert(sv) => format!("{} / w={}", self.diagram, word_label(sv)),
        }
    }

    /// The Schubert variety `S_0` stands for.
    pub fn resolve(&self) -> Result<SchubertVariety> {
        match &self.s0 {
            S0::Schubert(sv) => {
                if !Arc::ptr_eq(sv.diagram(), &self.diagram)
                    && sv.diagram().to_string() != self.diagram.to_string()
                {
                    return Err(Error::Precondition("S_0 lives in a different diagram".into()));
                }
                Ok(sv.clone())
            }
            S0::Subdiagram(sd) => match &sd.exceptional_tag {
                Some(t) => Ok(catalog::resolve_tag(&self.diagram, t)?.sv),
                None => subdiagram_to_weyl(&self.diagram, sd),
            },
        }
    }
}

pub fn word_label(sv: &SchubertVariety) -> String {
    sv.word_1based().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

/// Per-`γ` counts of the tangent-root criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Codim2Report {
    /// `(γ, count)` with `γ` 1-based, in increasing order.
    pub counts: Vec<(usize, usize)>,
    pub pass: bool,
}

/// For each `γ in Λ`, the number of tangent roots `α` with
/// `<α, γ^vee> != 0`; passes when every count is at least two.
pub fn codim2_criterion(rs: &RootSystem, tangent: &[RootId], lambda: NodeSet) -> Codim2Report {
    let counts: Vec<(usize, usize)> = lambda
        .iter()
        .map(|g| {
            let gamma = rs.simple(g);
            (g + 1, tangent.iter().filter(|&&a| rs.pair(a, gamma) != 0).count())
        })
        .collect();
    let pass = counts.iter().all(|&(_, c)| c >= 2);
    Codim2Report { counts, pass }
}

/// Every tangent root moved by `s_γ` leaves the tangent set.
pub fn reflection_escape_check(rs: &RootSystem, tangent: &[RootId], gamma: usize) -> bool {
    let g = rs.simple(gamma);
    tangent
        .iter()
        .filter(|&&a| rs.pair(a, g) != 0)
        .all(|&a| !tangent.contains(&rs.reflect(a, g)))
}

/// The subdiagram, if any, whose submanifold is `sv`.
pub fn subdiagram_of(sv: &SchubertVariety) -> Result<Option<NodeSet>> {
    let d = sv.diagram();
    for nodes in all_subdiagrams(d) {
        if subdiagram_to_weyl(d, &SubdiagramDescriptor::nodes(nodes))? == *sv {
            return Ok(Some(nodes));
        }
    }
    Ok(None)
}

fn codim2_for(d: &MarkedDiagram, nodes: NodeSet) -> Result<Codim2Report> {
    let tangent = tangent_roots_subdiagram(d, &SubdiagramDescriptor::nodes(nodes))?;
    Ok(codim2_criterion(d.root_system(), &tangent, lambda_of(d, nodes)))
}

fn codim2_text(r: &Codim2Report) -> String {
    let counts: Vec<String> = r.counts.iter().map(|(g, c)| format!("a{g}:{c}")).collect();
    format!("{} [{}]", if r.pass { "pass" } else { "fail" }, counts.join(", "))
}

/// Classify `(S, S_0)`.
pub fn classify(pair: &PairDescriptor) -> Result<Verdict> {
    let sv = pair.resolve()?;
    let mut reasons = Vec::new();

    let norm = normalize::normalize(&sv)?;
    let rewritten = !Arc::ptr_eq(norm.diagram(), sv.diagram());
    if rewritten {
        reasons.push(reason(
            "normalization",
            format!("{} -> {} / w={}", sv.diagram(), norm.diagram(), word_label(&norm)),
            "conv:full-automorphism-group",
        ));
    }

    // Where the subdiagram tangent description applies, and in which presentation.
    let sub_here = subdiagram_of(&sv)?;
    let sub_norm = if rewritten { subdiagram_of(&norm)? } else { sub_here };
    let codim2 = match (sub_here, sub_norm) {
        (Some(n), _) => Some(codim2_for(sv.diagram(), n)?),
        (None, Some(n)) => Some(codim2_for(norm.diagram(), n)?),
        _ => None,
    };

    let named = match &pair.s0 {
        S0::Subdiagram(SubdiagramDescriptor { exceptional_tag: Some(t), .. }) => {
            Some(catalog::resolve_tag(&pair.diagram, t)?)
        }
        _ => catalog::smooth_tags(sv.diagram())
            .iter()
            .map(|t| catalog::resolve_tag(sv.diagram(), t))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .find(|e| e.sv == sv),
    };
    let smooth_named = named.as_ref().filter(|e| !e.sv.is_linear());

    let linear = norm.is_linear();
    let maximal = norm.is_maximal_linear();
    reasons.push(reason(
        "linear",
        format!("degree {}", norm.degree()),
        "def:linear-degree-one",
    ));

    let smooth = if sub_here.is_some() || sub_norm.is_some() {
        let n = sub_here.or(sub_norm).unwrap();
        reasons.push(reason(
            "smooth",
            format!("subdiagram submanifold {{{}}}", n.to_label()),
            "prop:smooth-schubert-classification",
        ));
        Some(true)
    } else if let Some(e) = smooth_named {
        reasons.push(reason("smooth", format!("catalog entry {}", e.tag), e.source));
        Some(true)
    } else if linear {
        reasons.push(reason("smooth", "linear space", "def:linear-degree-one"));
        Some(true)
    } else {
        None
    };

    let mut flags = Flags {
        smooth,
        linear,
        maximal_linear: maximal,
        codim2_pass: codim2.as_ref().map(|r| r.pass),
        catalog_exception: None,
        rationally_smooth: sv.rationally_smooth(),
    };

    let status = if smooth.is_none() {
        reasons.push(reason(
            "smooth",
            format!(
                "not certified (rationally smooth: {})",
                if flags.rationally_smooth { "yes" } else { "no" }
            ),
            "scope:smooth-input-only",
        ));
        Status::OutOfScope
    } else if !linear {
        if let Some(r) = &codim2 {
            reasons.push(reason("codim2", codim2_text(r), "prop:codim2-intersection"));
        }
        reasons.push(reason("non-linear smooth", "Schur rigid", "thm:nonlinear-smooth-schur-rigid"));
        if let Some(e) = smooth_named {
            flags.catalog_exception = Some(e.tag.clone());
        }
        Status::SchurRigid
    } else if !maximal {
        let above = norm
            .linear_covers()
            .into_iter()
            .next()
            .map(|c| format!("contained in linear w={}", word_label(&c)))
            .unwrap_or_default();
        reasons.push(reason("maximal linear", format!("no; {above}"), "obs:nonmaximal-linear"));
        Status::NotSchurRigid
    } else {
        reasons.push(reason("maximal linear", "yes", "prop:maximal-linear"));
        if let Some(r) = &codim2 {
            reasons.push(reason("codim2", codim2_text(r), "prop:codim2-intersection"));
        }
        match catalog::maximal_linear_exception(&norm)? {
            Some(item) => {
                let src = format!("prop:maximal-linear({item})");
                reasons.push(reason("exception list", format!("item ({item})"), &src));
                if item <= 4 {
                    let src = format!("thm:schubert-rigidity({item})");
                    let res = if item == 4 { "Schubert rigidity open" } else { "not Schubert rigid" };
                    reasons.push(reason("schubert rigidity", res, &src));
                } else {
                    reasons.push(reason(
                        "homological rigidity",
                        "not homologically rigid",
                        "prop:f4-not-homologically-rigid",
                    ));
                }
                flags.catalog_exception = Some(format!("ML{item}"));
                Status::NotSchurRigid
            }
            None => {
                reasons.push(reason("exception list", "no match", "prop:maximal-linear"));
                Status::SchurRigid
            }
        }
    };

    Ok(Verdict { pair: pair.label(), status, reasons, flags })
}

/// Classify a batch, keeping input order.
pub fn classify_batch(exec: Exec, pairs: &[PairDescriptor]) -> Vec<Result<Verdict>> {
    par::map(exec, pairs, classify)
}

/// Non-linear subdiagram submanifolds and the named smooth entries of `d`.
pub fn catalog_smooth_nonlinear(d: &Arc<MarkedDiagram>) -> Result<Vec<PairDescriptor>> {
    let mut out = Vec::new();
    for nodes in all_subdiagrams(d) {
        let sv = subdiagram_to_weyl(d, &SubdiagramDescriptor::nodes(nodes))?;
        if !sv.is_linear() {
            out.push(PairDescriptor::subdiagram(d.clone(), nodes));
        }
    }
    for tag in catalog::smooth_tags(d) {
        out.push(PairDescriptor::exceptional(d.clone(), &tag));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowKind {
    NonLinear,
    MaximalLinear,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub pair: String,
    pub kind: RowKind,
    pub counts: Vec<(usize, usize)>,
    pub codim2_pass: bool,
    pub escape_pass: bool,
    /// Listed as a long-root maximal-linear exception (items 1-4).
    pub listed: bool,
    pub status: Status,
    pub source: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub diagram: String,
    pub rows: Vec<VerifyRow>,
    pub failures: usize,
}

/// Cross-check the codimension criterion against the catalog over every
/// subdiagram of `d`. Non-linear subdiagrams must pass; maximal linear
/// ones must fail exactly when listed in items (1)-(4).
pub fn verify_catalog(d: &Arc<MarkedDiagram>) -> Result<VerifyReport> {
    let mut rows = Vec::new();
    let rs = d.root_system();
    for nodes in all_subdiagrams(d) {
        let sd = SubdiagramDescriptor::nodes(nodes);
        let sv = subdiagram_to_weyl(d, &sd)?;
        let kind = if !sv.is_linear() {
            RowKind::NonLinear
        } else if normalize::normalize(&sv)?.is_maximal_linear() {
            RowKind::MaximalLinear
        } else {
            continue;
        };
        let tangent = tangent_roots_subdiagram(d, &sd)?;
        let lambda = lambda_of(d, nodes);
        let report = codim2_criterion(rs, &tangent, lambda);
        let escape = lambda.iter().all(|g| reflection_escape_check(rs, &tangent, g));
        let verdict = classify(&PairDescriptor::subdiagram(d.clone(), nodes))?;
        let listed = matches!(
            verdict.flags.catalog_exception.as_deref(),
            Some("ML1" | "ML2" | "ML3" | "ML4")
        );
        let ok = match kind {
            RowKind::NonLinear => report.pass && escape && verdict.status == Status::SchurRigid,
            RowKind::MaximalLinear => report.pass != listed && escape,
        };
        let source = verdict.reasons.last().map(|r| r.source.clone()).unwrap_or_default();
        rows.push(VerifyRow {
            pair: verdict.pair,
            kind,
            counts: report.counts,
            codim2_pass: report.pass,
            escape_pass: escape,
            listed,
            status: verdict.status,
            source,
            ok,
        });
    }
    let failures = rows.iter().filter(|r| !r.ok).count();
    Ok(VerifyReport { diagram: d.to_string(), rows, failures })
}

impl VerifyReport {
    /// Fixed-width table, one row per pair.
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:<24} {:<15} {:<16} {:<7} {:<7} {:<14} {:<32} {}\n",
            "pair", "kind", "counts", "codim2", "escape", "verdict", "source", "ok"
        );
        for r in &self.rows {
            let counts: Vec<String> = r.counts.iter().map(|(g, c)| format!("a{g}:{c}")).collect();
            let kind = match r.kind {
                RowKind::NonLinear => "non-linear",
                RowKind::MaximalLinear => "maximal-linear",
            };
            out.push_str(&format!(
                "{:<24} {:<15} {:<16} {:<7} {:<7} {:<14} {:<32} {}\n",
                r.pair,
                kind,
                if counts.is_empty() { "-".to_string() } else { counts.join(",") },
                if r.codim2_pass { "pass" } else { "fail" },
                if r.escape_pass { "pass" } else { "fail" },
                r.status.to_string(),
                r.source,
                if r.ok { "ok" } else { "MISMATCH" }
            ));
        }
        out.push_str(&format!("{}: {} rows, {} mismatches\n", self.diagram, self.rows.len(), self.failures));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(s: &str, k: usize) -> Arc<MarkedDiagram> {
        MarkedDiagram::shared(s.parse().unwrap(), k - 1).unwrap()
    }

    fn set(d: &MarkedDiagram, one_based: &[usize]) -> NodeSet {
        NodeSet::from_indices(d.rank(), one_based.iter().map(|i| i - 1)).unwrap()
    }

    #[test]
    fn codim2_examples() {
        let g2 = diag("G2", 2);
        let rs = g2.root_system();
        let r = codim2_criterion(rs, &[rs.negate(rs.simple(1))], NodeSet(1));
        assert_eq!(r.counts, vec![(1, 1)]);
        assert!(!r.pass);
        assert!(codim2_criterion(rs, &[], NodeSet::empty()).pass);
        assert!(reflection_escape_check(rs, &[rs.negate(rs.simple(1))], 0));
        assert!(reflection_escape_check(rs, &[], 0));

        let a4 = diag("A4", 2);
        let nodes = set(&a4, &[1, 2, 3]);
        let t = tangent_roots_subdiagram(&a4, &SubdiagramDescriptor::nodes(nodes)).unwrap();
        let r = codim2_criterion(a4.root_system(), &t, lambda_of(&a4, nodes));
        assert_eq!(r.counts, vec![(4, 2)]);
        assert!(reflection_escape_check(a4.root_system(), &t, 3));
    }

    #[test]
    fn verdict_examples() {
        let f4 = diag("F4", 3);
        let v = classify(&PairDescriptor::exceptional(f4.clone(), "B3-a2-a3")).unwrap();
        assert_eq!(v.status, Status::SchurRigid);
        assert_eq!(v.flags.catalog_exception.as_deref(), Some("B3-a2-a3"));

        let g2 = diag("G2", 2);
        let v = classify(&PairDescriptor::subdiagram(g2.clone(), NodeSet(0b10))).unwrap();
        assert_eq!(v.status, Status::NotSchurRigid);
        assert_eq!(v.flags.catalog_exception.as_deref(), Some("ML4"));

        let a3 = diag("A3", 1);
        let pt = SchubertVariety::from_index(a3, 0).unwrap();
        let v = classify(&PairDescriptor::schubert(pt)).unwrap();
        assert_eq!(v.status, Status::NotSchurRigid);
        assert!(v.reasons.iter().any(|r| r.source == "obs:nonmaximal-linear"));

        for r in &v.reasons {
            assert!(catalog::is_known_source(&r.source));
        }
    }

    #[test]
    fn singular_input_is_out_of_scope() {
        // the first non-linear, non-subdiagram, uncatalogued Schubert variety of Gr(2,4)
        let d = diag("A3", 2);
        let mut found = false;
        for sv in SchubertVariety::all(&d) {
            if sv.is_linear() || subdiagram_of(&sv).unwrap().is_some() {
                continue;
            }
            let v = classify(&PairDescriptor::schubert(sv)).unwrap();
            assert_eq!(v.status, Status::OutOfScope);
            found = true;
        }
        assert!(found);
    }

    #[test]
    fn classify_is_deterministic() {
        let d = diag("F4", 3);
        let p = PairDescriptor::subdiagram(d.clone(), set(&d, &[2, 3, 4]));
        assert_eq!(classify(&p).unwrap(), classify(&p).unwrap());
    }
}
