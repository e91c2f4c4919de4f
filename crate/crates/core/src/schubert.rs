//! Schubert varieties `S(w)`, `w in W^P`, and the homogeneous submanifolds
//! attached to subdiagrams of a marked diagram.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::diagram::MarkedDiagram;
use crate::error::{Error, Result};
use crate::root_system::RootId;
use crate::weyl::{NodeSet, WeylElement};

/// `S(w)` for `w` a minimal coset representative of a marked diagram.
#[derive(Clone)]
pub struct SchubertVariety {
    diagram: Arc<MarkedDiagram>,
    idx: usize,
}

impl fmt::Debug for SchubertVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({} / w={:?})", self.diagram, self.word_1based())
    }
}

impl PartialEq for SchubertVariety {
    fn eq(&self, other: &Self) -> bool {
        self.idx == other.idx
            && self.diagram.simple_type() == other.diagram.simple_type()
            && self.diagram.marked() == other.diagram.marked()
    }
}

impl Eq for SchubertVariety {}

impl SchubertVariety {
    pub fn new(diagram: Arc<MarkedDiagram>, w: &WeylElement) -> Result<Self> {
        let idx = diagram.index_of(w).ok_or(Error::NotMinimalRepresentative)?;
        Ok(SchubertVariety { diagram, idx })
    }

    pub fn from_index(diagram: Arc<MarkedDiagram>, idx: usize) -> Result<Self> {
        if idx >= diagram.len() {
            return Err(Error::Precondition(format!("W^P index {idx} out of range")));
        }
        Ok(SchubertVariety { diagram, idx })
    }

    /// From a reduced word of 0-based simple indices. The word must be
    /// reduced and its product must lie in `W^P`.
    pub fn from_word(diagram: Arc<MarkedDiagram>, word: &[usize]) -> Result<Self> {
        let w = WeylElement::from_word(diagram.root_system(), word)?;
        if w.length(diagram.root_system()) != word.len() {
            let shown: Vec<String> = word.iter().map(|i| (i + 1).to_string()).collect();
            return Err(Error::MalformedWord(format!("{} (not reduced)", shown.join(" "))));
        }
        Self::new(diagram, &w)
    }

    /// All Schubert varieties of the diagram, in `W^P` order.
    pub fn all(diagram: &Arc<MarkedDiagram>) -> Vec<SchubertVariety> {
        (0..diagram.len())
            .map(|idx| SchubertVariety { diagram: diagram.clone(), idx })
            .collect()
    }

    pub fn diagram(&self) -> &Arc<MarkedDiagram> {
        &self.diagram
    }

    pub fn index(&self) -> usize {
        self.idx
    }

    pub fn w(&self) -> &WeylElement {
        self.diagram.element(self.idx)
    }

    pub fn dimension(&self) -> usize {
        self.diagram.length(self.idx)
    }

    pub fn word_1based(&self) -> Vec<usize> {
        self.w()
            .reduced_word(self.diagram.root_system())
            .into_iter()
            .map(|i| i + 1)
            .collect()
    }

    /// Root directions of the cell `B.x_w` at `x_w`: `Delta(w^{-1})`, the
    /// positive roots inside `w(Delta(U_P^-))`.
    pub fn tangent_roots(&self) -> Vec<RootId> {
        self.w().inverse().inversion_set(self.diagram.root_system())
    }

    /// The same directions moved back to the base point by `w^{-1}`:
    /// `-Delta(w)`, a subset of `-Delta(U_P)`.
    pub fn tangent_roots_at_base(&self) -> Vec<RootId> {
        let rs = self.diagram.root_system();
        let mut out: Vec<RootId> = self
            .w()
            .inversion_set(rs)
            .into_iter()
            .map(|b| rs.negate(b))
            .collect();
        out.sort();
        out
    }

    /// `I = { alpha_j : w^{-1}(alpha_j) in Delta(P^-) }`, where
    /// `Delta(P^-) = -Delta^+ ∪ Delta(L_P)`. `S(w)` is stabilized by `P_I`.
    pub fn stabilizer_levi_set(&self) -> NodeSet {
        let rs = self.diagram.root_system();
        let k = self.diagram.marked();
        let inv = self.w().inverse();
        let mut set = NodeSet::empty();
        for j in 0..rs.rank() {
            let r = inv.apply(rs.simple(j));
            if !rs.is_positive(r) || rs.coeff(r, k) == 0 {
                set = set.with(j);
            }
        }
        set
    }

    /// Coefficients `c_d = #{ v in W^P : v <= w, l(v) = d }`.
    pub fn poincare_polynomial(&self) -> Vec<u64> {
        let mut c = vec![0u64; self.dimension() + 1];
        for v in self.diagram.lower_set(self.idx).iter_ones() {
            c[self.diagram.length(v)] += 1;
        }
        c
    }

    /// Palindromic Poincaré polynomial. This detects rational smoothness,
    /// which is weaker than smoothness outside the simply-laced types.
    pub fn rationally_smooth(&self) -> bool {
        let p = self.poincare_polynomial();
        p.iter().eq(p.iter().rev())
    }

    pub fn degree(&self) -> &BigUint {
        self.diagram.degree(self.idx)
    }

    pub fn is_linear(&self) -> bool {
        self.degree().is_one()
    }

    /// Linear, and no `S(w')` with `w < w'` a cover is linear. Covers
    /// suffice: a linear Schubert variety is a projective space with one
    /// Schubert cell per dimension, so every linear `S(w')` above `S(w)`
    /// passes through a linear cover of `w`. False for non-linear input.
    pub fn is_maximal_linear(&self) -> bool {
        self.is_linear()
            && self
                .diagram
                .up_covers(self.idx)
                .iter()
                .all(|c| !self.diagram.degree(c.target).is_one())
    }

    pub fn opposite(&self) -> OppositeDescriptor {
        OppositeDescriptor {
            diagram: self.diagram.to_string(),
            word: self.word_1based(),
            dimension: self.diagram.dim() - self.dimension(),
            stabilizer: self.stabilizer_levi_set(),
        }
    }

    /// Upward covers that are again linear.
    pub fn linear_covers(&self) -> Vec<SchubertVariety> {
        self.diagram
            .up_covers(self.idx)
            .iter()
            .filter(|c| self.diagram.degree(c.target).is_one())
            .map(|c| SchubertVariety { diagram: self.diagram.clone(), idx: c.target })
            .collect()
    }

    pub fn contains(&self, other: &SchubertVariety) -> bool {
        self.diagram.bruhat_leq(other.idx, self.idx)
    }
}

/// The opposite Schubert variety `T(w)`: the closure of `B^-.x_w`, with
/// stabilizer `P_I^-` for the same `I` as `S(w)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OppositeDescriptor {
    pub diagram: String,
    pub word: Vec<usize>,
    pub dimension: usize,
    pub stabilizer: NodeSet,
}

/// A connected node set containing the marked node, or a named
/// exceptional smooth Schubert variety (with `nodes` empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubdiagramDescriptor {
    pub nodes: NodeSet,
    pub exceptional_tag: Option<String>,
}

impl SubdiagramDescriptor {
    pub fn nodes(nodes: NodeSet) -> Self {
        SubdiagramDescriptor { nodes, exceptional_tag: None }
    }

    pub fn exceptional(tag: impl Into<String>) -> Self {
        SubdiagramDescriptor { nodes: NodeSet::empty(), exceptional_tag: Some(tag.into()) }
    }

    /// Check connectivity and that the marked node is present.
    pub fn validate(&self, d: &MarkedDiagram) -> Result<()> {
        if self.exceptional_tag.is_some() {
            return if self.nodes.is_empty() {
                Ok(())
            } else {
                Err(Error::InvalidSubdiagram("exceptional entries carry no nodes".into()))
            };
        }
        let rank = d.rank();
        if !self.nodes.is_subset(NodeSet::full(rank)) {
            return Err(Error::InvalidSubdiagram(format!("nodes outside rank {rank}")));
        }
        if !self.nodes.contains(d.marked()) {
            return Err(Error::InvalidSubdiagram(format!(
                "nodes {{{}}} do not contain the marked node {}",
                self.nodes.to_label(),
                d.marked() + 1
            )));
        }
        if !is_connected(d, self.nodes) {
            return Err(Error::InvalidSubdiagram(format!(
                "nodes {{{}}} are not connected",
                self.nodes.to_label()
            )));
        }
        Ok(())
    }
}

pub fn is_connected(d: &MarkedDiagram, nodes: NodeSet) -> bool {
    let rs = d.root_system();
    let Some(start) = nodes.iter().next() else {
        return false;
    };
    let mut seen = NodeSet::empty().with(start);
    let mut stack = vec![start];
    while let Some(i) = stack.pop() {
        for j in nodes.iter() {
            if !seen.contains(j) && rs.adjacent(i, j) {
                seen = seen.with(j);
                stack.push(j);
            }
        }
    }
    seen == nodes
}

/// Every connected node set containing the marked node, ordered by size
/// and then by bitmask.
pub fn all_subdiagrams(d: &MarkedDiagram) -> Vec<NodeSet> {
    let rank = d.rank();
    let mut out: Vec<NodeSet> = (1u32..1 << rank)
        .map(NodeSet)
        .filter(|&s| s.contains(d.marked()) && is_connected(d, s))
        .collect();
    out.sort_by_key(|s| (s.len(), s.0));
    out
}

fn genuine_nodes(d: &MarkedDiagram, sd: &SubdiagramDescriptor) -> Result<NodeSet> {
    if sd.exceptional_tag.is_some() {
        return Err(Error::Precondition(
            "exceptional entries have no subdiagram tangent description".into(),
        ));
    }
    sd.validate(d)?;
    Ok(sd.nodes)
}

/// `{ -alpha : alpha in Delta(U_P), supp(alpha) ⊆ nodes }`, sorted.
pub fn tangent_roots_subdiagram(d: &MarkedDiagram, sd: &SubdiagramDescriptor) -> Result<Vec<RootId>> {
    let nodes = genuine_nodes(d, sd)?;
    let rs = d.root_system();
    let mut out: Vec<RootId> = d
        .unipotent_roots()
        .iter()
        .filter(|&&a| rs.support(a).iter().all(|&i| nodes.contains(i)))
        .map(|&a| rs.negate(a))
        .collect();
    out.sort();
    Ok(out)
}

/// Simple indices outside `nodes` adjacent to some node: the set `Λ`.
pub fn lambda_adjacent(d: &MarkedDiagram, sd: &SubdiagramDescriptor) -> Result<NodeSet> {
    let nodes = genuine_nodes(d, sd)?;
    Ok(lambda_of(d, nodes))
}

pub(crate) fn lambda_of(d: &MarkedDiagram, nodes: NodeSet) -> NodeSet {
    let rs = d.root_system();
    let mut out = NodeSet::empty();
    for j in nodes.complement(d.rank()).iter() {
        if nodes.iter().any(|i| rs.adjacent(i, j)) {
            out = out.with(j);
        }
    }
    out
}

/// Longest element of the parabolic subgroup `W_J`, grown by right ascents.
pub fn longest_in(d: &MarkedDiagram, nodes: NodeSet) -> WeylElement {
    let rs = d.root_system();
    let mut w = WeylElement::identity(rs);
    while let Some(j) = nodes.iter().find(|&j| !w.has_right_descent(rs, j)) {
        w = w.mul_simple_right(rs, j);
    }
    w
}

/// The Schubert variety realising the homogeneous submanifold of a
/// subdiagram: `w = w_0(nodes) w_0(nodes \ {k})`, checked against the
/// tangent-root description.
pub fn subdiagram_to_weyl(d: &Arc<MarkedDiagram>, sd: &SubdiagramDescriptor) -> Result<SchubertVariety> {
    let nodes = genuine_nodes(d, sd)?;
    let w = longest_in(d, nodes).compose(&longest_in(d, nodes.without(d.marked())));
    let sv = SchubertVariety::new(d.clone(), &w)
        .map_err(|_| Error::Internal(format!("subdiagram {{{}}} representative is not in W^P", nodes.to_label())))?;
    if sv.tangent_roots_at_base() != tangent_roots_subdiagram(d, sd)? {
        return Err(Error::Internal(format!(
            "no Schubert cell matches subdiagram {{{}}}",
            nodes.to_label()
        )));
    }
    Ok(sv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(s: &str, k: usize) -> Arc<MarkedDiagram> {
        MarkedDiagram::new(s.parse().unwrap(), k).unwrap()
    }

    fn sub(d: &MarkedDiagram, nodes: &[usize]) -> SubdiagramDescriptor {
        SubdiagramDescriptor::nodes(NodeSet::from_indices(d.rank(), nodes.iter().map(|i| i - 1)).unwrap())
    }

    #[test]
    fn identity_facts() {
        let d = diag("A3", 1);
        let pt = SchubertVariety::from_index(d.clone(), 0).unwrap();
        assert_eq!(pt.dimension(), 0);
        assert!(pt.tangent_roots().is_empty());
        assert_eq!(pt.stabilizer_levi_set(), d.levi_nodes());
        assert_eq!(pt.poincare_polynomial(), vec![1]);
        assert!(pt.is_linear());
        assert!(!pt.is_maximal_linear());
    }

    #[test]
    fn a2_line_and_plane() {
        let d = diag("A2", 0);
        let s1 = SchubertVariety::from_word(d.clone(), &[0]).unwrap();
        assert_eq!(s1.tangent_roots().len(), 1);
        assert!(s1.stabilizer_levi_set().contains(0));
        let plane = SchubertVariety::from_word(d.clone(), &[1, 0]).unwrap();
        assert_eq!(plane.poincare_polynomial(), vec![1, 1, 1]);
        assert!(plane.is_linear());
        assert!(plane.is_maximal_linear());
        assert!(matches!(
            SchubertVariety::from_word(d.clone(), &[1]),
            Err(Error::NotMinimalRepresentative)
        ));
        assert!(matches!(
            SchubertVariety::from_word(d, &[0, 0]),
            Err(Error::MalformedWord(_))
        ));
    }

    #[test]
    fn grassmannian_subdiagram() {
        let d = diag("A4", 1);
        let sd = sub(&d, &[1, 2, 3]);
        let roots = tangent_roots_subdiagram(&d, &sd).unwrap();
        let rs = d.root_system();
        let mut expect: Vec<RootId> = [[0, 1, 0, 0], [1, 1, 0, 0], [0, 1, 1, 0], [1, 1, 1, 0]]
            .iter()
            .map(|c| rs.negate(rs.root_id(c).unwrap()))
            .collect();
        expect.sort();
        assert_eq!(roots, expect);
        assert_eq!(lambda_adjacent(&d, &sd).unwrap(), NodeSet(1 << 3));
        let sv = subdiagram_to_weyl(&d, &sd).unwrap();
        assert_eq!(sv.dimension(), 4);
        assert!(!sv.is_linear());
    }

    #[test]
    fn g2_line() {
        let d = diag("G2", 1);
        let sd = sub(&d, &[2]);
        let rs = d.root_system();
        assert_eq!(tangent_roots_subdiagram(&d, &sd).unwrap(), vec![rs.negate(rs.simple(1))]);
        assert_eq!(lambda_adjacent(&d, &sd).unwrap(), NodeSet(1));
    }

    #[test]
    fn whole_diagram_is_the_space() {
        let d = diag("F4", 2);
        let sd = SubdiagramDescriptor::nodes(NodeSet::full(4));
        assert_eq!(tangent_roots_subdiagram(&d, &sd).unwrap().len(), d.dim());
        assert!(lambda_adjacent(&d, &sd).unwrap().is_empty());
        assert_eq!(subdiagram_to_weyl(&d, &sd).unwrap().index(), d.top());
    }

    #[test]
    fn invalid_subdiagrams() {
        let d = diag("A4", 1);
        assert!(sub(&d, &[1, 3]).validate(&d).is_err());
        assert!(sub(&d, &[3, 4]).validate(&d).is_err());
        assert!(tangent_roots_subdiagram(&d, &SubdiagramDescriptor::exceptional("x")).is_err());
    }

    #[test]
    fn opposite_dimension() {
        let d = diag("B3", 2);
        let sv = SchubertVariety::from_word(d.clone(), &[1, 2]).unwrap();
        let t = sv.opposite();
        assert_eq!(t.dimension, d.dim() - 2);
        assert_eq!(t.stabilizer, sv.stabilizer_levi_set());
    }
}
