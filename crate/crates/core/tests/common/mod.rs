#![allow(dead_code)]

//! Independent oracles. Cartan matrices are written out here by hand and
//! never read from the library, so agreement is a genuine cross-check.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use schubert::diagram::MarkedDiagram;
use schubert::root_system::{RootId, RootSystem, SimpleType};
use schubert::weyl::WeylElement;

/// Cartan matrix `c[i][j] = <alpha_j, alpha_i^vee>` up to transposition;
/// counts and orders are invariant under transposition.
pub fn oracle_cartan(name: &str) -> Vec<Vec<i64>> {
    let family = &name[..1];
    let n: usize = name[1..].parse().unwrap();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, a: i64, b: i64| {
        c[i][j] = a;
        c[j][i] = b;
    };
    match family {
        "A" => (1..n).for_each(|i| link(i - 1, i, -1, -1)),
        "B" | "C" => {
            (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
            link(n - 2, n - 1, -1, -2);
        }
        "D" => {
            (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        "F" => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
        }
        "G" => link(0, 1, -3, -1),
        _ => panic!("oracle has no {name}"),
    }
    c
}

/// Positive roots by closure of the simple roots under simple reflections.
pub fn oracle_positive_roots(name: &str) -> HashSet<Vec<i64>> {
    closure(&oracle_cartan(name))
}

/// Positive roots of the dual system (transposed Cartan matrix).
pub fn oracle_positive_roots_dual(name: &str) -> HashSet<Vec<i64>> {
    let c = oracle_cartan(name);
    let t: Vec<Vec<i64>> = (0..c.len()).map(|i| (0..c.len()).map(|j| c[j][i]).collect()).collect();
    closure(&t)
}

fn closure(c: &[Vec<i64>]) -> HashSet<Vec<i64>> {
    let n = c.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            let p: i64 = (0..n).map(|j| b[j] * c[i][j]).sum();
            let mut r = b.clone();
            r[i] -= p;
            if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    seen
}

/// `|W|` as the size of the orbit of the regular weight `rho`.
pub fn oracle_weyl_order(name: &str) -> usize {
    let c = oracle_cartan(name);
    let n = c.len();
    let rho = vec![1i64; n];
    let mut seen = HashSet::from([rho.clone()]);
    let mut queue = VecDeque::from([rho]);
    while let Some(l) = queue.pop_front() {
        for i in 0..n {
            // s_i(lambda) = lambda - lambda_i alpha_i in fundamental-weight coordinates
            let mut r = l.clone();
            for (j, rj) in r.iter_mut().enumerate() {
                *rj -= l[i] * c[i][j];
            }
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    seen.len()
}

/// Types used by the foundation checks.
pub fn foundation_types() -> Vec<&'static str> {
    vec![
        "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2",
    ]
}

/// Every marked diagram of the given types, `k` 0-based.
pub fn diagrams_of(types: &[&str]) -> Vec<Arc<MarkedDiagram>> {
    let mut out = Vec::new();
    for t in types {
        let ty: SimpleType = t.parse().unwrap();
        for k in 0..ty.rank {
            out.push(MarkedDiagram::shared(ty, k).unwrap());
        }
    }
    out
}

pub fn exhaustive_types() -> Vec<String> {
    let mut v: Vec<String> = (1..=6).map(|n| format!("A{n}")).collect();
    v.extend((2..=6).map(|n| format!("B{n}")));
    v.extend((2..=6).map(|n| format!("C{n}")));
    v.extend((4..=6).map(|n| format!("D{n}")));
    v.push("F4".into());
    v.push("G2".into());
    v
}

pub fn diag(s: &str, k1: usize) -> Arc<MarkedDiagram> {
    MarkedDiagram::shared(s.parse().unwrap(), k1 - 1).unwrap()
}

/// `<omega_k, beta^vee>` from the long/short ratio, without the library pairing.
fn chevalley_weight(rs: &RootSystem, beta: RootId, k: usize) -> (u64, u64) {
    let ratio = if rs.simple_type().to_string() == "G2" { 3 } else { 2 };
    let c = rs.coeff(beta, k) as u64;
    match (rs.is_long(rs.simple(k)), rs.is_long(beta)) {
        (true, false) => (c * ratio, 1),
        (false, true) => (c, ratio),
        _ => (c, 1),
    }
}

/// Degree of `S(w)` in `G/P_k` by iterating the Chevalley formula in the
/// full flag variety `G/B`: the weighted count of maximal chains below `w`
/// in the Bruhat order of `W`.
pub struct FullFlagDegree<'a> {
    rs: &'a RootSystem,
    k: usize,
    memo: HashMap<WeylElement, BigUint>,
}

impl<'a> FullFlagDegree<'a> {
    pub fn new(rs: &'a RootSystem, k: usize) -> Self {
        FullFlagDegree { rs, k, memo: HashMap::new() }
    }

    pub fn degree(&mut self, w: &WeylElement) -> BigUint {
        if let Some(d) = self.memo.get(w) {
            return d.clone();
        }
        let rs = self.rs;
        let l = w.length(rs);
        let d = if l == 0 {
            BigUint::one()
        } else {
            let mut total = BigUint::zero();
            for beta in rs.positive_roots() {
                let u = w.mul_reflection_right(rs, beta);
                if u.length(rs) + 1 != l {
                    continue;
                }
                let (num, den) = chevalley_weight(rs, beta, self.k);
                if num == 0 {
                    continue;
                }
                assert_eq!(num % den, 0, "non-integral Chevalley weight");
                total += self.degree(&u) * (num / den);
            }
            total
        };
        self.memo.insert(w.clone(), d.clone());
        d
    }
}
