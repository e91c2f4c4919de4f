//! Weyl group elements as permutations of the root set.
//!
//! An element `w` is stored as the table `root id -> root id` describing
//! `beta -> w(beta)`. Equality, hashing and composition all go through
//! that table, so words are only an input format.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::root_system::{RootId, RootSystem};

/// Largest group `enumerate_group` will materialise.
pub const ENUMERATION_LIMIT: u128 = 1_000_000;

/// A set of simple indices (0-based), used both for the parabolic subsets
/// `I` and for subdiagram node sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NodeSet(pub u32);

pub type ParabolicSubset = NodeSet;

impl NodeSet {
    pub fn empty() -> Self {
        NodeSet(0)
    }

    pub fn full(rank: usize) -> Self {
        NodeSet((1u32 << rank) - 1)
    }

    pub fn from_indices(rank: usize, idx: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut m = 0u32;
        for i in idx {
            if i >= rank {
                return Err(Error::IndexOutOfRange { index: i + 1, rank });
            }
            m |= 1 << i;
        }
        Ok(NodeSet(m))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        NodeSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        NodeSet(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, rank: usize) -> Self {
        NodeSet(!self.0 & NodeSet::full(rank).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// 1-based, comma separated (`"1,2,4"`).
    pub fn to_label(self) -> String {
        self.iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Serialize for NodeSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|i| i + 1))
    }
}

impl<'de> Deserialize<'de> for NodeSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let idx = Vec::<usize>::deserialize(d)?;
        let mut m = 0u32;
        for i in idx {
            if !(1..=32).contains(&i) {
                return Err(serde::de::Error::custom(format!("node {i} out of range")));
            }
            m |= 1 << (i - 1);
        }
        Ok(NodeSet(m))
    }
}

/// An element of the Weyl group, acting on root ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Box<[u16]>,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement{:?}", self.perm)
    }
}

/// Serialized as the one-line form `w(0) .. w(N-1)` over positive root ids.
impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(&self.perm[..self.perm.len() / 2])
    }
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            perm: (0..rs.num_roots() as u16).collect(),
        }
    }

    pub fn reflection(rs: &RootSystem, alpha: RootId) -> Self {
        WeylElement {
            perm: rs.reflection_perm(alpha).into(),
        }
    }

    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Self {
        Self::reflection(rs, rs.simple(i))
    }

    /// Product `s_{w[0]} s_{w[1]} ...` of simple reflections (0-based indices).
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(rs);
        for &i in word {
            if i >= rs.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i + 1,
                    rank: rs.rank(),
                });
            }
            w = w.mul_simple_right(rs, i);
        }
        Ok(w)
    }

    /// Build from a full permutation table, checking it is a signed
    /// permutation commuting with negation and fixing the pairing.
    pub fn from_perm(rs: &RootSystem, perm: Vec<u16>) -> Result<Self> {
        if perm.len() != rs.num_roots() {
            return Err(Error::Precondition("permutation has the wrong length".into()));
        }
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            let p = p as usize;
            if p >= perm.len() || seen[p] {
                return Err(Error::Precondition("not a permutation of the roots".into()));
            }
            seen[p] = true;
        }
        for x in rs.roots() {
            let nx = rs.negate(x);
            if perm[nx.index()] != rs.negate(RootId(perm[x.index()])).0 {
                return Err(Error::Precondition("permutation does not commute with negation".into()));
            }
            for y in rs.positive_roots() {
                if rs.pair(x, y) != rs.pair(RootId(perm[x.index()]), RootId(perm[y.index()])) {
                    return Err(Error::Precondition("permutation does not preserve pairings".into()));
                }
            }
        }
        Ok(WeylElement { perm: perm.into() })
    }

    #[inline]
    pub fn apply(&self, r: RootId) -> RootId {
        RootId(self.perm[r.index()])
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    /// Images of the positive roots, `w(0) w(1) ... w(N-1)`.
    pub fn one_line(&self, rs: &RootSystem) -> Vec<u16> {
        self.perm[..rs.num_positive()].to_vec()
    }

    /// `self * other`, acting as `x -> self(other(x))`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            perm: other.perm.iter().map(|&x| self.perm[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = vec![0u16; self.perm.len()];
        for (x, &y) in self.perm.iter().enumerate() {
            inv[y as usize] = x as u16;
        }
        WeylElement { perm: inv.into() }
    }

    /// `s_i * self`.
    pub fn mul_simple_left(&self, rs: &RootSystem, i: usize) -> WeylElement {
        let s = rs.reflection_perm(rs.simple(i));
        WeylElement {
            perm: self.perm.iter().map(|&x| s[x as usize]).collect(),
        }
    }

    /// `self * s_i`.
    pub fn mul_simple_right(&self, rs: &RootSystem, i: usize) -> WeylElement {
        self.mul_reflection_right(rs, rs.simple(i))
    }

    /// `self * s_alpha`.
    pub fn mul_reflection_right(&self, rs: &RootSystem, alpha: RootId) -> WeylElement {
        let s = rs.reflection_perm(alpha);
        WeylElement {
            perm: s.iter().map(|&x| self.perm[x as usize]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `l(w) = |Delta(w)|`.
    pub fn length(&self, rs: &RootSystem) -> usize {
        self.perm[..rs.num_positive()]
            .iter()
            .filter(|&&x| !rs.is_positive(RootId(x)))
            .count()
    }

    /// `Delta(w) = { beta > 0 : w(beta) < 0 }`, in root id order.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<RootId> {
        rs.positive_roots()
            .filter(|&b| !rs.is_positive(self.apply(b)))
            .collect()
    }

    /// `w^{-1}(alpha_i) < 0`.
    pub fn has_left_descent(&self, rs: &RootSystem, i: usize) -> bool {
        // w^{-1}(a) < 0 iff a = w(b) for some b < 0
        let a = rs.simple(i);
        let pre = self.perm.iter().position(|&x| x == a.0).expect("permutation");
        !rs.is_positive(RootId(pre as u16))
    }

    /// `w(alpha_i) < 0`.
    pub fn has_right_descent(&self, rs: &RootSystem, i: usize) -> bool {
        !rs.is_positive(self.apply(rs.simple(i)))
    }

    /// A reduced word (0-based), lexicographically smallest by right descents.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        'outer: while !w.is_identity() {
            for i in 0..rs.rank() {
                if w.has_right_descent(rs, i) {
                    w = w.mul_simple_right(rs, i);
                    rev.push(i);
                    continue 'outer;
                }
            }
            unreachable!("non-identity element without a descent");
        }
        rev.reverse();
        rev
    }

    /// Minimal-coset test for `W^P`, `P` the maximal parabolic omitting `k`:
    /// `w(alpha_j) > 0` for every `j != k`. Equivalent to `Delta(w) ⊂ Delta(U_P)`.
    pub fn is_minimal_rep(&self, rs: &RootSystem, k: usize) -> bool {
        (0..rs.rank()).all(|j| j == k || !self.has_right_descent(rs, j))
    }

    /// Minimal-length representative of `w W_J` where `J` is `levi`.
    pub fn coset_min_rep(&self, rs: &RootSystem, levi: NodeSet) -> WeylElement {
        let mut w = self.clone();
        loop {
            match levi.iter().find(|&j| w.has_right_descent(rs, j)) {
                Some(j) => w = w.mul_simple_right(rs, j),
                None => return w,
            }
        }
    }
}

/// All elements of `W`, breadth first from the identity.
pub fn enumerate_group(rs: &RootSystem) -> Result<Vec<WeylElement>> {
    let order = rs.simple_type().weyl_group_order();
    if order > ENUMERATION_LIMIT {
        return Err(Error::GroupTooLarge {
            order,
            limit: ENUMERATION_LIMIT,
        });
    }
    let id = WeylElement::identity(rs);
    let mut seen: HashSet<WeylElement> = HashSet::with_capacity(order as usize);
    let mut out = Vec::with_capacity(order as usize);
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        for i in 0..rs.rank() {
            let v = w.mul_simple_left(rs, i);
            if !seen.contains(&v) {
                seen.insert(v.clone());
                queue.push_back(v);
            }
        }
        out.push(w);
    }
    Ok(out)
}

/// `W^P` for the marked node `k`, sorted by length then permutation.
///
/// Generated upward in the left weak order: every `w != id` in `W^P` has a
/// left descent `s_i` with `s_i w` again in `W^P`.
pub fn minimal_reps(rs: &RootSystem, k: usize) -> Result<Vec<WeylElement>> {
    if k >= rs.rank() {
        return Err(Error::IndexOutOfRange {
            index: k + 1,
            rank: rs.rank(),
        });
    }
    let id = WeylElement::identity(rs);
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let mut layer = vec![id.clone()];
    seen.insert(id);
    let mut out = Vec::new();
    while !layer.is_empty() {
        layer.sort();
        let mut next = Vec::new();
        for w in &layer {
            for i in 0..rs.rank() {
                if w.has_left_descent(rs, i) {
                    continue;
                }
                let v = w.mul_simple_left(rs, i);
                if v.is_minimal_rep(rs, k) && seen.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        out.append(&mut layer);
        layer = next;
    }
    Ok(out)
}

/// Bruhat order on `W`, via the lifting property: for a left descent `s` of
/// `w`, `v <= w` iff `min(v, s v) <= s w`.
pub fn bruhat_leq(rs: &RootSystem, v: &WeylElement, w: &WeylElement) -> bool {
    let mut v = v.clone();
    let mut w = w.clone();
    loop {
        let lv = v.length(rs);
        let lw = w.length(rs);
        if lv > lw {
            return false;
        }
        if lw == 0 {
            return v.is_identity();
        }
        if lv == lw {
            return v == w;
        }
        let s = (0..rs.rank())
            .find(|&i| w.has_left_descent(rs, i))
            .expect("non-identity element has a left descent");
        if v.has_left_descent(rs, s) {
            v = v.mul_simple_left(rs, s);
        }
        w = w.mul_simple_left(rs, s);
    }
}

/// One left `W_I`-orbit inside `W^P`.
#[derive(Debug, Clone)]
pub struct DoubleCoset {
    /// Minimal-length member.
    pub rep: WeylElement,
    /// Every `W^P` element of the orbit, sorted.
    pub members: Vec<WeylElement>,
}

/// Partition `wp` (which must be `W^P` for `k`) into `W_I \ W^P` classes.
///
/// Within `W^P`, `s_i w` either stays in `W^P` or lies in `w W_P`, so the
/// classes are the connected components under left multiplication by
/// `s_i`, `i in I`.
pub fn double_coset_partition(
    rs: &RootSystem,
    wp: &[WeylElement],
    k: usize,
    levi: NodeSet,
) -> Vec<DoubleCoset> {
    let index: std::collections::HashMap<&WeylElement, usize> =
        wp.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut class = vec![usize::MAX; wp.len()];
    let mut out = Vec::new();
    for start in 0..wp.len() {
        if class[start] != usize::MAX {
            continue;
        }
        let cid = out.len();
        class[start] = cid;
        let mut members = vec![start];
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for i in levi.iter() {
                let v = wp[x].mul_simple_left(rs, i);
                if !v.is_minimal_rep(rs, k) {
                    continue;
                }
                let y = index[&v];
                if class[y] == usize::MAX {
                    class[y] = cid;
                    members.push(y);
                    stack.push(y);
                }
            }
        }
        let mut members: Vec<WeylElement> = members.into_iter().map(|i| wp[i].clone()).collect();
        members.sort_by(|a, b| a.length(rs).cmp(&b.length(rs)).then_with(|| a.cmp(b)));
        out.push(DoubleCoset {
            rep: members[0].clone(),
            members,
        });
    }
    out
}

/// Minimal representatives of `W_I \ W^P`.
pub fn double_coset_min_reps(rs: &RootSystem, levi: NodeSet, k: usize) -> Result<Vec<WeylElement>> {
    let wp = minimal_reps(rs, k)?;
    Ok(double_coset_partition(rs, &wp, k, levi)
        .into_iter()
        .map(|c| c.rep)
        .collect())
}
