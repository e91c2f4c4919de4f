//! Re-presentation of `G/P` for its full automorphism group.
//!
//! Three marked diagrams are homogeneous under a larger group:
//! `(B_l, a_l) = (D_{l+1}, a_{l+1})`, `(C_l, a_1) = (A_{2l-1}, a_1)` and
//! `(G2, a1) = (B3, a1)`. Weyl elements are carried across by the folding
//! substitution on simple reflections and then reduced to the minimal
//! coset representative of the target.
//!
//! `B2` and `C2` are one type with the nodes swapped; `(B2, a1)` is sent to
//! `(C2, a2)` so both presentations of the quadric `Q^3` classify alike.

use std::sync::Arc;

use crate::diagram::MarkedDiagram;
use crate::error::{Error, Result};
use crate::root_system::{Family, SimpleType};
use crate::schubert::SchubertVariety;
use crate::weyl::WeylElement;

/// Target diagram and the 0-based letter substitution.
pub struct Rewrite {
    pub target: SimpleType,
    pub marked: usize,
    pub letters: Vec<Vec<usize>>,
}

/// The rewrite for `(ty, k)` (0-based `k`), if any.
pub fn rewrite_for(ty: SimpleType, k: usize) -> Option<Rewrite> {
    let l = ty.rank;
    match (ty.family, k) {
        (Family::B, k) if k + 1 == l => Some(Rewrite {
            target: SimpleType::new(Family::D, l + 1).ok()?,
            marked: l,
            letters: (0..l).map(|i| if i + 1 < l { vec![i] } else { vec![l - 1, l] }).collect(),
        }),
        (Family::B, 0) if l == 2 => Some(Rewrite {
            target: SimpleType::new(Family::C, 2).ok()?,
            marked: 1,
            letters: vec![vec![1], vec![0]],
        }),
        (Family::C, 0) => Some(Rewrite {
            target: SimpleType::new(Family::A, 2 * l - 1).ok()?,
            marked: 0,
            letters: (0..l)
                .map(|i| if i + 1 < l { vec![i, 2 * l - 2 - i] } else { vec![l - 1] })
                .collect(),
        }),
        (Family::G, 0) => Some(Rewrite {
            target: SimpleType::new(Family::B, 3).ok()?,
            marked: 0,
            letters: vec![vec![0, 2], vec![1]],
        }),
        _ => None,
    }
}

/// `sv` unchanged when no rewrite applies, otherwise its image.
pub fn normalize(sv: &SchubertVariety) -> Result<SchubertVariety> {
    let d = sv.diagram();
    match rewrite_for(d.simple_type(), d.marked()) {
        None => Ok(sv.clone()),
        Some(rw) => {
            let target = MarkedDiagram::shared(rw.target, rw.marked)?;
            map_across(sv, &rw, &target)
        }
    }
}

pub fn map_across(sv: &SchubertVariety, rw: &Rewrite, target: &Arc<MarkedDiagram>) -> Result<SchubertVariety> {
    let rs = target.root_system();
    let word: Vec<usize> = sv
        .w()
        .reduced_word(sv.diagram().root_system())
        .into_iter()
        .flat_map(|i| rw.letters[i].iter().copied())
        .collect();
    let w = WeylElement::from_word(rs, &word)?.coset_min_rep(rs, target.levi_nodes());
    let image = SchubertVariety::new(target.clone(), &w)?;
    if image.dimension() != sv.dimension() {
        return Err(Error::Internal(format!(
            "rewrite of {:?} changed the dimension from {} to {}",
            sv,
            sv.dimension(),
            image.dimension()
        )));
    }
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn check_bijection(src: &str, k: usize) {
        let d = MarkedDiagram::new(src.parse().unwrap(), k).unwrap();
        let rw = rewrite_for(d.simple_type(), k).unwrap();
        let t = MarkedDiagram::new(rw.target, rw.marked).unwrap();
        assert_eq!(d.len(), t.len(), "{src}");
        assert_eq!(d.dim(), t.dim());
        let mut seen = HashSet::new();
        for sv in SchubertVariety::all(&d) {
            let im = normalize(&sv).unwrap();
            assert_eq!(im.dimension(), sv.dimension());
            assert_eq!(im.degree(), sv.degree(), "{sv:?}");
            seen.insert(im.index());
        }
        assert_eq!(seen.len(), t.len());
    }

    #[test]
    fn rewrites_are_bijective_and_preserve_degree() {
        check_bijection("B2", 0);
        check_bijection("B2", 1);
        check_bijection("B3", 2);
        check_bijection("B5", 4);
        check_bijection("C2", 0);
        check_bijection("C4", 0);
        check_bijection("G2", 0);
    }

    #[test]
    fn untouched_diagrams() {
        assert!(rewrite_for("B3".parse().unwrap(), 0).is_none());
        assert!(rewrite_for("C3".parse().unwrap(), 2).is_none());
        assert!(rewrite_for("G2".parse().unwrap(), 1).is_none());
    }
}
