//! Marked Dynkin diagrams `(G, alpha_k)` and the memoized Bruhat data of
//! `W^P` for the maximal parabolic `P` omitting `alpha_k`.
//!
//! Elements of `W^P` are addressed by their position in a canonical list
//! sorted by length and then by permutation. Cover tables are built once
//! per diagram; lower intervals and degrees are filled lazily behind
//! `OnceLock`, so concurrent readers always see a complete table.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use bitvec::prelude::*;
use num_bigint::BigUint;
use num_traits::One;

use crate::cache;
use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::root_system::{RootId, RootSystem, SimpleType};
use crate::weyl::{minimal_reps, NodeSet, WeylElement};

/// A cover `v < v s_beta` with `l(v s_beta) = l(v) + 1`, both in `W^P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cover {
    /// Index of the other end of the cover.
    pub target: usize,
    pub root: RootId,
    /// Chevalley coefficient `<omega_k, beta^vee>`.
    pub weight: u32,
}

pub struct MarkedDiagram {
    rs: RootSystem,
    k: usize,
    wp: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
    lengths: Vec<u32>,
    up: Vec<Vec<Cover>>,
    down: Vec<Vec<Cover>>,
    unipotent: Vec<RootId>,
    lower: OnceLock<Vec<BitVec>>,
    degrees: OnceLock<Vec<BigUint>>,
}

impl fmt::Debug for MarkedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MarkedDiagram({self})")
    }
}

impl fmt::Display for MarkedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.rs.simple_type(), self.k + 1)
    }
}

impl MarkedDiagram {
    /// `k` is 0-based.
    pub fn new(ty: SimpleType, k: usize) -> Result<Arc<Self>> {
        Self::with_exec(ty, k, Exec::default())
    }

    /// Process-wide shared instance, built on first use.
    pub fn shared(ty: SimpleType, k: usize) -> Result<Arc<Self>> {
        type Registry = Mutex<HashMap<(SimpleType, usize), Arc<MarkedDiagram>>>;
        static REGISTRY: OnceLock<Registry> = OnceLock::new();
        let reg = REGISTRY.get_or_init(Default::default);
        if let Some(d) = reg.lock().expect("registry lock").get(&(ty, k)) {
            return Ok(d.clone());
        }
        let d = Self::new(ty, k)?;
        Ok(reg
            .lock()
            .expect("registry lock")
            .entry((ty, k))
            .or_insert(d)
            .clone())
    }

    pub fn with_exec(ty: SimpleType, k: usize, exec: Exec) -> Result<Arc<Self>> {
        let rs = RootSystem::build(ty)?;
        Self::from_root_system(rs, k, exec)
    }

    pub fn from_root_system(rs: RootSystem, k: usize, exec: Exec) -> Result<Arc<Self>> {
        let wp = minimal_reps(&rs, k)?;
        let index: HashMap<WeylElement, usize> =
            wp.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let lengths: Vec<u32> = wp.iter().map(|w| w.length(&rs) as u32).collect();
        let ty = rs.simple_type().to_string();
        let dir = cache::cache_dir();
        let table = dir
            .as_deref()
            .and_then(|d| cache::load(d, &ty, k, wp.len()))
            .unwrap_or_else(|| {
                let t = compute_covers(&rs, &wp, &index, &lengths, exec);
                if let Some(d) = dir.as_deref() {
                    cache::store(d, &ty, k, &t);
                }
                t
            });
        let mut up = vec![Vec::new(); wp.len()];
        let mut down = vec![Vec::new(); wp.len()];
        for (v, row) in table.iter().enumerate() {
            for &(t, r) in row {
                let root = RootId(r);
                let t = t as usize;
                if t >= wp.len() || lengths[t] != lengths[v] + 1 || r as usize >= rs.num_positive() {
                    return Err(Error::Internal("corrupt cover table".into()));
                }
                let weight = rs.coroot_coeff(root, k);
                if weight <= 0 {
                    return Err(Error::Internal(format!(
                        "cover through {} has Chevalley weight {weight}",
                        rs.format_root(root)
                    )));
                }
                up[v].push(Cover { target: t, root, weight: weight as u32 });
                down[t].push(Cover { target: v, root, weight: weight as u32 });
            }
        }
        for row in &mut down {
            row.sort_by_key(|c| (c.target, c.root));
        }
        let unipotent = rs.positive_roots().filter(|&b| rs.coeff(b, k) > 0).collect();
        Ok(Arc::new(MarkedDiagram {
            rs,
            k,
            wp,
            index,
            lengths,
            up,
            down,
            unipotent,
            lower: OnceLock::new(),
            degrees: OnceLock::new(),
        }))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn simple_type(&self) -> SimpleType {
        self.rs.simple_type()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Marked node, 0-based.
    pub fn marked(&self) -> usize {
        self.k
    }

    /// `Phi \ {alpha_k}`, the simple roots of the Levi factor of `P`.
    pub fn levi_nodes(&self) -> NodeSet {
        NodeSet::full(self.rank()).without(self.k)
    }

    /// True when the marked simple root is long.
    pub fn is_long_root(&self) -> bool {
        self.rs.is_long_simple(self.k)
    }

    /// `Delta(U_P)`: positive roots with positive `alpha_k` coefficient.
    pub fn unipotent_roots(&self) -> &[RootId] {
        &self.unipotent
    }

    /// `dim G/P`.
    pub fn dim(&self) -> usize {
        self.unipotent.len()
    }

    /// Number of elements of `W^P`.
    pub fn len(&self) -> usize {
        self.wp.len()
    }

    pub fn is_empty(&self) -> bool {
        self.wp.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.wp
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.wp[i]
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i] as usize
    }

    /// Index of the longest element of `W^P` (the whole space `S`).
    pub fn top(&self) -> usize {
        self.wp.len() - 1
    }

    pub fn up_covers(&self, i: usize) -> &[Cover] {
        &self.up[i]
    }

    pub fn down_covers(&self, i: usize) -> &[Cover] {
        &self.down[i]
    }

    fn lower_table(&self) -> &[BitVec] {
        self.lower.get_or_init(|| {
            let n = self.wp.len();
            let mut table: Vec<BitVec> = Vec::with_capacity(n);
            for i in 0..n {
                let mut b = bitvec![0; n];
                b.set(i, true);
                for c in &self.down[i] {
                    b |= &table[c.target];
                }
                table.push(b);
            }
            table
        })
    }

    /// `{ v in W^P : v <= w_i }` as a bitset over indices.
    pub fn lower_set(&self, i: usize) -> &BitSlice {
        &self.lower_table()[i]
    }

    /// Bruhat order on `W^P`.
    pub fn bruhat_leq(&self, i: usize, j: usize) -> bool {
        self.lengths[i] <= self.lengths[j] && self.lower_table()[j][i]
    }

    fn degree_table(&self) -> &[BigUint] {
        self.degrees.get_or_init(|| {
            let mut deg: Vec<BigUint> = Vec::with_capacity(self.wp.len());
            for i in 0..self.wp.len() {
                if i == 0 {
                    deg.push(BigUint::one());
                    continue;
                }
                let d = self.down[i]
                    .iter()
                    .map(|c| &deg[c.target] * c.weight)
                    .sum();
                deg.push(d);
            }
            deg
        })
    }

    /// Degree of `S(w_i)` in the minimal equivariant embedding: the
    /// weighted count of saturated chains from the identity, each cover
    /// weighted by its Chevalley coefficient.
    pub fn degree(&self, i: usize) -> &BigUint {
        &self.degree_table()[i]
    }
}

fn compute_covers(
    rs: &RootSystem,
    wp: &[WeylElement],
    index: &HashMap<WeylElement, usize>,
    lengths: &[u32],
    exec: Exec,
) -> cache::CoverTable {
    par::map_range(exec, wp.len(), |v| {
        let w = &wp[v];
        let mut row = Vec::new();
        for beta in rs.positive_roots() {
            if !rs.is_positive(w.apply(beta)) {
                continue;
            }
            let u = w.mul_reflection_right(rs, beta);
            if let Some(&t) = index.get(&u) {
                if lengths[t] == lengths[v] + 1 {
                    row.push((t as u32, beta.0));
                }
            }
        }
        row
    })
}
