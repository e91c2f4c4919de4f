//! Finite root systems of the simple types, in the simple-root basis.
//!
//! Roots are integer coefficient vectors over the simple roots
//! (Bourbaki numbering). Every pairing is derived from the Cartan matrix
//! `cartan[i][j] = <alpha_i, alpha_j^vee>`; root lengths come from the
//! integer symmetrizer of that matrix.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple Lie type such as `A3`, `F4` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidType(
                format!("{}{}", family.letter(), rank),
                "rank not allowed for this family".into(),
            ))
        }
    }

    /// Number of positive roots, from the closed form for the type.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Order of the Weyl group, from the closed form for the type.
    pub fn weyl_group_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |m: u128| (1..=m).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidType(s.to_string(), why.to_string());
        let mut chars = s.trim().chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad("expected a family letter A-G")),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected a decimal rank after the family letter"));
        }
        let rank: usize = digits.parse().map_err(|_| bad("rank does not fit"))?;
        SimpleType::new(family, rank).map_err(|_| bad("rank not allowed for this family"))
    }
}

/// Index of a root inside a [`RootSystem`].
///
/// Positive roots occupy `0..N` in canonical order; the negative of
/// positive root `i` has id `N + i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootId(pub u16);

impl RootId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for RootId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Cartan matrix of the type, `m[i][j] = <alpha_i, alpha_j^vee>`, Bourbaki labels.
pub fn cartan_matrix(ty: SimpleType) -> Vec<Vec<i32>> {
    let n = ty.rank;
    let mut m = vec![vec![0i32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match ty.family {
        Family::A | Family::B | Family::C | Family::F => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            // 1-3-4-5-...-n with 2 attached to 4
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        Family::G => link(0, 1),
    }
    match ty.family {
        // alpha_n short
        Family::B => m[n - 2][n - 1] = -2,
        // alpha_n long
        Family::C => m[n - 1][n - 2] = -2,
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        Family::F => m[1][2] = -2,
        // alpha_1 short, alpha_2 long
        Family::G => m[1][0] = -3,
        _ => {}
    }
    m
}

/// Integer half squared lengths `d_i = (alpha_i, alpha_i) / 2`, normalised so
/// the shortest simple root has `d_i = 1`. Satisfies `m[i][j] d_j = m[j][i] d_i`.
fn symmetrizer(cartan: &[Vec<i32>]) -> Vec<i64> {
    let n = cartan.len();
    // rational d_j = num/den, propagated along the (tree) Dynkin graph
    let mut num = vec![0i64; n];
    let mut den = vec![1i64; n];
    num[0] = 1;
    let mut stack = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && !seen[j] {
                // d_j = m[j][i] d_i / m[i][j]
                num[j] = num[i] * cartan[j][i] as i64;
                den[j] = den[i] * cartan[i][j] as i64;
                let g = num_integer::gcd(num[j], den[j]);
                num[j] /= g;
                den[j] /= g;
                if den[j] < 0 {
                    num[j] = -num[j];
                    den[j] = -den[j];
                }
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    let l = den.iter().fold(1i64, |acc, &d| num_integer::lcm(acc, d));
    let mut d: Vec<i64> = num.iter().zip(&den).map(|(&a, &b)| a * (l / b)).collect();
    let g = d.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
    for x in &mut d {
        *x /= g;
    }
    d
}

/// A finite reduced root system with a canonical numbering of its roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: SimpleType,
    cartan: Vec<Vec<i32>>,
    half_norm_simple: Vec<i64>,
    n_pos: usize,
    /// `2N x rank` coefficient table, row per root id
    coeffs: Vec<i32>,
    index: HashMap<Vec<i32>, RootId>,
    /// `(beta, beta) / 2` per positive root, same units as the symmetrizer
    half_norm: Vec<i64>,
    /// `<root x, root p^vee>` for every root x and positive root p
    pairing: Vec<i8>,
    /// `s_p` as a permutation of root ids, for every positive root p
    reflections: Vec<Vec<u16>>,
}

impl RootSystem {
    pub fn build(ty: SimpleType) -> Result<Self> {
        let ty = SimpleType::new(ty.family, ty.rank)?;
        let n = ty.rank;
        let cartan = cartan_matrix(ty);
        let half_norm_simple = symmetrizer(&cartan);

        // closure of the simple roots under simple reflections, kept positive
        let mut positives: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut seen: std::collections::HashSet<Vec<i32>> = positives.iter().cloned().collect();
        let mut frontier = positives.clone();
        while let Some(beta) = frontier.pop() {
            for i in 0..n {
                let p: i32 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if p == 0 {
                    continue;
                }
                let mut img = beta.clone();
                img[i] -= p;
                if img.iter().all(|&c| c >= 0) && seen.insert(img.clone()) {
                    positives.push(img.clone());
                    frontier.push(img);
                }
            }
        }
        positives.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = positives.len();
        if n_pos != ty.positive_root_count() {
            return Err(Error::Internal(format!(
                "{ty}: generated {n_pos} positive roots, expected {}",
                ty.positive_root_count()
            )));
        }
        if n_pos * 2 > u16::MAX as usize {
            return Err(Error::Internal("root system too large".into()));
        }

        let mut coeffs = Vec::with_capacity(2 * n_pos * n);
        for r in &positives {
            coeffs.extend_from_slice(r);
        }
        for r in &positives {
            coeffs.extend(r.iter().map(|c| -c));
        }
        let mut index = HashMap::with_capacity(2 * n_pos);
        for id in 0..2 * n_pos {
            index.insert(coeffs[id * n..(id + 1) * n].to_vec(), RootId(id as u16));
        }

        // (alpha_i, alpha_j) = m[i][j] d_j
        let form = |x: &[i32], y: &[i32]| -> i64 {
            let mut s = 0i64;
            for i in 0..n {
                if x[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    s += x[i] as i64 * y[j] as i64 * cartan[i][j] as i64 * half_norm_simple[j];
                }
            }
            s
        };
        let half_norm: Vec<i64> = positives.iter().map(|b| form(b, b) / 2).collect();
        let mut pairing = vec![0i8; 2 * n_pos * n_pos];
        for x in 0..2 * n_pos {
            let xv = &coeffs[x * n..(x + 1) * n];
            for (p, beta) in positives.iter().enumerate() {
                let num = form(xv, beta);
                let den = half_norm[p];
                if num % den != 0 {
                    return Err(Error::Internal("non-integral Cartan pairing".into()));
                }
                pairing[x * n_pos + p] = (num / den) as i8;
            }
        }

        let mut rs = RootSystem {
            ty,
            cartan,
            half_norm_simple,
            n_pos,
            coeffs,
            index,
            half_norm,
            pairing,
            reflections: Vec::new(),
        };
        rs.reflections = rs
            .positive_roots()
            .map(|p| rs.roots().map(|x| rs.reflect(x, p).0).collect())
            .collect();
        Ok(rs)
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Number of positive roots `N`.
    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    /// Total number of roots `2N`.
    pub fn num_roots(&self) -> usize {
        2 * self.n_pos
    }

    pub fn roots(&self) -> impl Iterator<Item = RootId> {
        (0..2 * self.n_pos).map(|i| RootId(i as u16))
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = RootId> {
        (0..self.n_pos).map(|i| RootId(i as u16))
    }

    /// Id of the simple root `alpha_{i+1}` (0-based `i`).
    pub fn simple(&self, i: usize) -> RootId {
        debug_assert!(i < self.rank());
        RootId(i as u16)
    }

    pub fn coeffs(&self, r: RootId) -> &[i32] {
        let n = self.rank();
        &self.coeffs[r.index() * n..(r.index() + 1) * n]
    }

    pub fn coeff(&self, r: RootId, i: usize) -> i32 {
        self.coeffs[r.index() * self.rank() + i]
    }

    pub fn height(&self, r: RootId) -> i32 {
        self.coeffs(r).iter().sum()
    }

    #[inline]
    pub fn is_positive(&self, r: RootId) -> bool {
        r.index() < self.n_pos
    }

    #[inline]
    pub fn negate(&self, r: RootId) -> RootId {
        let i = r.index();
        RootId(if i < self.n_pos { i + self.n_pos } else { i - self.n_pos } as u16)
    }

    /// The positive root among `r`, `-r`.
    #[inline]
    pub fn abs(&self, r: RootId) -> RootId {
        RootId((r.index() % self.n_pos) as u16)
    }

    /// Looks up a coefficient vector.
    pub fn root_id(&self, coeffs: &[i32]) -> Result<RootId> {
        self.index
            .get(coeffs)
            .copied()
            .ok_or_else(|| Error::NotARoot(coeffs.to_vec()))
    }

    pub fn check_id(&self, r: usize) -> Result<RootId> {
        if r < self.num_roots() {
            Ok(RootId(r as u16))
        } else {
            Err(Error::BadRootId(r))
        }
    }

    /// `<beta, alpha^vee>`.
    #[inline]
    pub fn pair(&self, beta: RootId, alpha: RootId) -> i32 {
        let a = alpha.index();
        if a < self.n_pos {
            self.pairing[beta.index() * self.n_pos + a] as i32
        } else {
            -(self.pairing[beta.index() * self.n_pos + a - self.n_pos] as i32)
        }
    }

    /// `s_alpha(beta) = beta - <beta, alpha^vee> alpha`.
    pub fn reflect(&self, beta: RootId, alpha: RootId) -> RootId {
        let p = self.pair(beta, alpha);
        if p == 0 {
            return beta;
        }
        let v: Vec<i32> = self
            .coeffs(beta)
            .iter()
            .zip(self.coeffs(alpha))
            .map(|(b, a)| b - p * a)
            .collect();
        self.index[&v]
    }

    /// The reflection `s_alpha` as a permutation of root ids.
    pub fn reflection_perm(&self, alpha: RootId) -> &[u16] {
        &self.reflections[self.abs(alpha).index()]
    }

    /// `(alpha, alpha) / (alpha_i, alpha_i)` as the rational `(num, den)`.
    fn length_ratio(&self, alpha: RootId, i: usize) -> (i64, i64) {
        (self.half_norm[self.abs(alpha).index()], self.half_norm_simple[i])
    }

    /// Coefficient of `alpha_i^vee` in `beta^vee`, i.e. `<omega_i, beta^vee>`.
    pub fn coroot_coeff(&self, beta: RootId, i: usize) -> i64 {
        let (nb, ni) = self.length_ratio(beta, i);
        let c = self.coeff(beta, i) as i64 * ni;
        debug_assert_eq!(c % nb, 0);
        c / nb
    }

    /// True when `alpha` is a long root (all roots count as long in simply-laced types).
    pub fn is_long(&self, alpha: RootId) -> bool {
        let max = *self.half_norm.iter().max().unwrap_or(&1);
        self.half_norm[self.abs(alpha).index()] == max
    }

    /// Simple indices `i` with `alpha_i` long.
    pub fn is_long_simple(&self, i: usize) -> bool {
        self.is_long(self.simple(i))
    }

    /// Dynkin adjacency between simple indices.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    /// Simple indices in the support of `r`.
    pub fn support(&self, r: RootId) -> Vec<usize> {
        self.coeffs(r)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Human-readable form like `a1+2a2` (or `-(a1+a2)`).
    pub fn format_root(&self, r: RootId) -> String {
        let abs = self.abs(r);
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs(abs).iter().enumerate() {
            match c {
                0 => {}
                1 => terms.push(format!("a{}", i + 1)),
                _ => terms.push(format!("{c}a{}", i + 1)),
            }
        }
        let body = terms.join("+");
        if self.is_positive(r) {
            body
        } else if terms.len() == 1 {
            format!("-{body}")
        } else {
            format!("-({body})")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn parses_type_literals() {
        assert_eq!("F4".parse::<SimpleType>().unwrap().to_string(), "F4");
        assert!("F5".parse::<SimpleType>().is_err());
        assert!("B1".parse::<SimpleType>().is_err());
        assert!("D2".parse::<SimpleType>().is_err());
        assert!("E9".parse::<SimpleType>().is_err());
        assert!("X3".parse::<SimpleType>().is_err());
        assert!("A".parse::<SimpleType>().is_err());
        assert!("A-1".parse::<SimpleType>().is_err());
    }

    #[test]
    fn a2_positive_roots() {
        let a2 = rs("A2");
        let roots: Vec<_> = a2.positive_roots().map(|r| a2.coeffs(r).to_vec()).collect();
        assert_eq!(roots, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn cartan_is_generalized() {
        for t in ["A4", "B3", "C3", "D5", "E6", "F4", "G2"] {
            let r = rs(t);
            for i in 0..r.rank() {
                assert_eq!(r.cartan()[i][i], 2);
                for j in 0..r.rank() {
                    if i != j {
                        assert!(r.cartan()[i][j] <= 0);
                        assert_eq!(r.cartan()[i][j] == 0, r.cartan()[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.pair(a2.simple(0), a2.simple(0)), 2);
        let a12 = a2.root_id(&[1, 1]).unwrap();
        assert_eq!(a2.pair(a12, a2.simple(0)), 1);

        let g2 = rs("G2");
        // entry c_21 of the Cartan matrix
        assert_eq!(g2.pair(g2.simple(1), g2.simple(0)), g2.cartan()[1][0]);
        assert_eq!(g2.pair(g2.simple(1), g2.simple(0)), -3);
        assert_eq!(g2.pair(g2.simple(0), g2.simple(1)), -1);
        let img = g2.reflect(g2.simple(1), g2.simple(0));
        assert_eq!(g2.coeffs(img), &[3, 1]);
    }

    #[test]
    fn reflection_examples() {
        let a2 = rs("A2");
        let a1 = a2.simple(0);
        assert_eq!(a2.reflect(a1, a1), a2.negate(a1));
        assert_eq!(a2.coeffs(a2.reflect(a2.simple(1), a1)), &[1, 1]);
    }

    #[test]
    fn short_and_long_simple_roots_follow_bourbaki() {
        let b3 = rs("B3");
        assert!(b3.is_long_simple(0) && b3.is_long_simple(1) && !b3.is_long_simple(2));
        let c3 = rs("C3");
        assert!(!c3.is_long_simple(0) && c3.is_long_simple(2));
        let f4 = rs("F4");
        let long: Vec<bool> = (0..4).map(|i| f4.is_long_simple(i)).collect();
        assert_eq!(long, vec![true, true, false, false]);
        let g2 = rs("G2");
        assert!(!g2.is_long_simple(0) && g2.is_long_simple(1));
    }

    #[test]
    fn coroot_coefficients() {
        // in B2 the short root a1+a2 has coroot 2 a1^vee + a2^vee
        let b2 = rs("B2");
        let r = b2.root_id(&[1, 1]).unwrap();
        assert_eq!(b2.coroot_coeff(r, 0), 2);
        assert_eq!(b2.coroot_coeff(r, 1), 1);
        // highest root of G2 is 3a1+2a2 (long): coroot a1^vee + 2 a2^vee
        let g2 = rs("G2");
        let h = g2.root_id(&[3, 2]).unwrap();
        assert_eq!(g2.coroot_coeff(h, 0), 1);
        assert_eq!(g2.coroot_coeff(h, 1), 2);
    }

    #[test]
    fn non_roots_are_rejected() {
        let a2 = rs("A2");
        assert!(matches!(a2.root_id(&[2, 1]), Err(Error::NotARoot(_))));
        assert!(a2.check_id(6).is_err());
    }
}
