//! Cocharacters of the maximal torus, the Bialynicki-Birula cells of
//! `P_I^±`, and the exact-rational degeneration model on a big cell chart.
//!
//! A chart at `x_w` has one coordinate `z_alpha` per root of
//! `A = w(Delta(U_P^-))`; the cocharacter acts diagonally by
//! `t.z_alpha = t^{n_alpha} z_alpha`, so coordinates are kept in an
//! unordered map keyed by root id.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::diagram::MarkedDiagram;
use crate::error::{Error, Result};
use crate::root_system::{RootId, RootSystem};
use crate::weyl::{double_coset_partition, NodeSet, WeylElement};

/// `lambda = sum_j coeffs[j] omega_j^vee`; `<alpha_j, lambda> = coeffs[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cocharacter {
    pub coeffs: Vec<i64>,
}

impl Cocharacter {
    /// `sum_{j not in I} omega_j^vee`, whose parabolic `P(lambda)` is `P_I`.
    pub fn canonical(rs: &RootSystem, levi: NodeSet) -> Result<Self> {
        let rank = rs.rank();
        if !levi.is_subset(NodeSet::full(rank)) {
            return Err(Error::Precondition(format!("levi set exceeds rank {rank}")));
        }
        if levi == NodeSet::full(rank) {
            return Err(Error::NotProperSubset);
        }
        Ok(Cocharacter {
            coeffs: (0..rank).map(|j| i64::from(!levi.contains(j))).collect(),
        })
    }

    /// An explicit dominant cocharacter; must be nonzero with non-negative entries.
    pub fn from_coeffs(rs: &RootSystem, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != rs.rank() {
            return Err(Error::Precondition(format!(
                "cocharacter needs {} coefficients, got {}",
                rs.rank(),
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|&c| c < 0) || coeffs.iter().all(|&c| c == 0) {
            return Err(Error::Precondition("cocharacter coefficients must be non-negative and not all zero".into()));
        }
        Ok(Cocharacter { coeffs })
    }

    /// `I` with `P(lambda) = P_I`: the simple roots of weight zero.
    pub fn levi(&self) -> NodeSet {
        NodeSet(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c == 0)
                .fold(0, |m, (j, _)| m | 1 << j),
        )
    }

    /// `<alpha, lambda>`, linear in the coefficients of `alpha`.
    pub fn weight(&self, rs: &RootSystem, alpha: RootId) -> i64 {
        rs.coeffs(alpha)
            .iter()
            .zip(&self.coeffs)
            .map(|(&a, &c)| a as i64 * c)
            .sum()
    }
}

/// Orbit on which a `+`/`-` Bialynicki-Birula cell is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// One class `[sigma] in W_I \ W^P` with the root counts of the chart at
/// `x_sigma`, split by the sign of the `lambda`-weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BBCell {
    /// Minimal-length member of the class.
    pub rep: WeylElement,
    /// Number of `W^P` elements in the class.
    pub size: usize,
    pub plus_dim: usize,
    pub fixed_dim: usize,
    pub minus_dim: usize,
}

impl BBCell {
    /// `dim P_I.x_sigma` (plus) or `dim P_I^-.x_sigma` (minus).
    pub fn orbit_dim(&self, sign: Sign) -> usize {
        match sign {
            Sign::Plus => self.plus_dim + self.fixed_dim,
            Sign::Minus => self.minus_dim + self.fixed_dim,
        }
    }

    /// `P_I^-.x_sigma` is closed: its dimension equals that of `L_I.x_sigma`.
    pub fn minus_orbit_closed(&self) -> bool {
        self.orbit_dim(Sign::Minus) == self.fixed_dim
    }
}

fn sign_counts(rs: &RootSystem, d: &MarkedDiagram, w: &WeylElement, lambda: &Cocharacter) -> [usize; 3] {
    let mut c = [0usize; 3];
    for &a in d.unipotent_roots() {
        let n = lambda.weight(rs, w.apply(rs.negate(a)));
        c[match n.signum() {
            1 => 0,
            0 => 1,
            _ => 2,
        }] += 1;
    }
    c
}

/// The `(±)`-decomposition of `S` for the canonical cocharacter of `I`.
pub fn bb_cells(d: &MarkedDiagram, levi: NodeSet) -> Result<Vec<BBCell>> {
    let rs = d.root_system();
    let lambda = Cocharacter::canonical(rs, levi)?;
    let classes = double_coset_partition(rs, d.elements(), d.marked(), levi);
    let mut cells: Vec<BBCell> = classes
        .into_iter()
        .map(|c| {
            let [plus, fixed, minus] = sign_counts(rs, d, &c.rep, &lambda);
            BBCell {
                rep: c.rep,
                size: c.members.len(),
                plus_dim: plus,
                fixed_dim: fixed,
                minus_dim: minus,
            }
        })
        .collect();
    cells.sort_by(|a, b| (a.rep.length(rs), &a.rep).cmp(&(b.rep.length(rs), &b.rep)));
    Ok(cells)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeightSign {
    Positive,
    Zero,
    Negative,
}

/// The chart `w(U_P^-).x_w` with its `lambda`-weight partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigCellChart {
    pub base: WeylElement,
    /// `A = w(Delta(U_P^-))`, in the order of `Delta(U_P)`.
    pub roots: Vec<RootId>,
    pub weights: Vec<i64>,
    pub tags: Vec<WeightSign>,
    index: BTreeMap<RootId, usize>,
}

impl BigCellChart {
    pub fn new(d: &MarkedDiagram, w: &WeylElement, lambda: &Cocharacter) -> Result<Self> {
        let rs = d.root_system();
        if d.index_of(w).is_none() {
            return Err(Error::NotMinimalRepresentative);
        }
        if lambda.coeffs.len() != rs.rank() {
            return Err(Error::Precondition("cocharacter rank mismatch".into()));
        }
        let roots: Vec<RootId> = d.unipotent_roots().iter().map(|&a| w.apply(rs.negate(a))).collect();
        let weights: Vec<i64> = roots.iter().map(|&r| lambda.weight(rs, r)).collect();
        if weights.iter().all(|&n| n == 0) {
            return Err(Error::DegenerateChart);
        }
        let tags = weights
            .iter()
            .map(|&n| match n.signum() {
                1 => WeightSign::Positive,
                0 => WeightSign::Zero,
                _ => WeightSign::Negative,
            })
            .collect();
        let index = roots.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        Ok(BigCellChart { base: w.clone(), roots, weights, tags, index })
    }

    pub fn weight_of(&self, r: RootId) -> Result<i64> {
        self.index
            .get(&r)
            .map(|&i| self.weights[i])
            .ok_or(Error::NotInChart(r.index()))
    }

    pub fn sign_of(&self, r: RootId) -> Result<WeightSign> {
        self.index
            .get(&r)
            .map(|&i| self.tags[i])
            .ok_or(Error::NotInChart(r.index()))
    }

    pub fn roots_with(&self, sign: WeightSign) -> Vec<RootId> {
        let mut v: Vec<RootId> = self
            .roots
            .iter()
            .zip(&self.tags)
            .filter(|(_, &t)| t == sign)
            .map(|(&r, _)| r)
            .collect();
        v.sort();
        v
    }

    fn check(&self, p: &RationalPoint) -> Result<()> {
        for r in p.coords.keys() {
            if !self.index.contains_key(r) {
                return Err(Error::NotInChart(r.index()));
            }
        }
        Ok(())
    }

    /// `t.p`, scaling `z_alpha` by `t^{n_alpha}`.
    pub fn act(&self, t: &BigRational, p: &RationalPoint) -> Result<RationalPoint> {
        if t.is_zero() {
            return Err(Error::ZeroParameter);
        }
        self.check(p)?;
        let mut out = BTreeMap::new();
        for (&r, z) in &p.coords {
            let n = self.weight_of(r)?;
            let n = i32::try_from(n).map_err(|_| Error::Internal("weight overflow".into()))?;
            out.insert(r, z * t.pow(n));
        }
        Ok(RationalPoint::from_map(out))
    }

    /// `lim_{t -> infinity} t.p` for `p` with no `A^+` coordinates: the
    /// `A^-` coordinates vanish and the `A^0` coordinates are kept.
    pub fn limit_at_infinity(&self, p: &RationalPoint) -> Result<RationalPoint> {
        self.check(p)?;
        let mut out = BTreeMap::new();
        for (&r, z) in &p.coords {
            match self.sign_of(r)? {
                WeightSign::Positive => return Err(Error::LeavesChart(r.index())),
                WeightSign::Zero => {
                    out.insert(r, z.clone());
                }
                WeightSign::Negative => {}
            }
        }
        Ok(RationalPoint::from_map(out))
    }

    /// Points pairwise distinct and their limits pairwise distinct.
    pub fn is_transverse_wrt_lambda(&self, points: &[RationalPoint]) -> Result<bool> {
        let limits = points
            .iter()
            .map(|p| self.limit_at_infinity(p))
            .collect::<Result<Vec<_>>>()?;
        let distinct = |v: &[RationalPoint]| {
            let mut s: Vec<&RationalPoint> = v.iter().collect();
            s.sort();
            s.windows(2).all(|w| w[0] != w[1])
        };
        Ok(distinct(points) && distinct(&limits))
    }

    /// The special fiber as a multiset of limit points, in order of first
    /// appearance. Each limit stands for one translate of `S(w)`.
    pub fn degenerate(&self, points: &[RationalPoint]) -> Result<Vec<(RationalPoint, usize)>> {
        let mut out: Vec<(RationalPoint, usize)> = Vec::new();
        let mut pos: BTreeMap<RationalPoint, usize> = BTreeMap::new();
        for p in points {
            let l = self.limit_at_infinity(p)?;
            match pos.get(&l) {
                Some(&i) => out[i].1 += 1,
                None => {
                    pos.insert(l.clone(), out.len());
                    out.push((l, 1));
                }
            }
        }
        Ok(out)
    }
}

/// A point of a chart with exact rational coordinates. Zero coordinates
/// are never stored, so equality is equality of points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RationalPoint {
    pub coords: BTreeMap<RootId, BigRational>,
}

impl RationalPoint {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_map(mut coords: BTreeMap<RootId, BigRational>) -> Self {
        coords.retain(|_, z| !z.is_zero());
        RationalPoint { coords }
    }

    pub fn get(&self, r: RootId) -> BigRational {
        self.coords.get(&r).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn to_json(&self) -> Value {
        let m: serde_json::Map<String, Value> = self
            .coords
            .iter()
            .map(|(r, z)| (r.0.to_string(), Value::String(format_rational(z))))
            .collect();
        serde_json::json!({ "coords": m })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let coords = v
            .get("coords")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::MalformedPoints("each point needs a \"coords\" object".into()))?;
        let mut out = BTreeMap::new();
        for (k, z) in coords {
            let id: u16 = k
                .parse()
                .map_err(|_| Error::MalformedPoints(format!("root id `{k}`")))?;
            let z = z
                .as_str()
                .ok_or_else(|| Error::MalformedPoints(format!("coordinate {k} must be a \"p/q\" string")))?;
            out.insert(RootId(id), parse_rational(z)?);
        }
        Ok(Self::from_map(out))
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|(r, z)| format!("{}:{}", r.0, format_rational(z)))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Always `p/q` with `q > 0` in lowest terms (`0/1`, `3/1`, `-7/5`).
pub fn format_rational(z: &BigRational) -> String {
    format!("{}/{}", z.numer(), z.denom())
}

/// Accepts `p` or `p/q` with `q != 0`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::MalformedRational(s.to_string());
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| bad())?;
    let q = BigInt::from_str(q).map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

/// Parse a points file: a JSON array of `{"coords": {...}}` objects.
pub fn parse_points(text: &str) -> Result<Vec<RationalPoint>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let v: Value = serde_json::from_str(text).map_err(|e| Error::MalformedPoints(e.to_string()))?;
    let arr = v
        .as_array()
        .ok_or_else(|| Error::MalformedPoints("top level must be an array".into()))?;
    arr.iter().map(RationalPoint::from_json).collect()
}

pub fn points_to_json(points: &[RationalPoint]) -> Value {
    Value::Array(points.iter().map(RationalPoint::to_json).collect())
}

/// `t = 1` as a rational, for callers building parameters.
pub fn one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn diag(s: &str, k: usize) -> Arc<MarkedDiagram> {
        MarkedDiagram::new(s.parse().unwrap(), k).unwrap()
    }

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn canonical_weights() {
        let g2 = RootSystem::build("G2".parse().unwrap()).unwrap();
        assert!(matches!(Cocharacter::canonical(&g2, NodeSet::full(2)), Err(Error::NotProperSubset)));
        let l = Cocharacter::canonical(&g2, NodeSet::empty()).unwrap();
        assert_eq!(l.coeffs, vec![1, 1]);
        let l = Cocharacter::canonical(&g2, NodeSet(1)).unwrap();
        assert_eq!(l.weight(&g2, g2.simple(1)), 1);
        assert_eq!(l.weight(&g2, g2.simple(0)), 0);
        assert_eq!(l.weight(&g2, g2.root_id(&[3, 2]).unwrap()), 2);
        assert_eq!(l.levi(), NodeSet(1));
    }

    #[test]
    fn p2_cells() {
        let d = diag("A2", 0);
        let cells = bb_cells(&d, NodeSet(0b10)).unwrap();
        assert_eq!(cells.len(), 2);
        assert_eq!(cells.iter().map(|c| c.size).sum::<usize>(), 3);
        for c in &cells {
            assert_eq!(c.plus_dim + c.fixed_dim + c.minus_dim, 2);
        }
        assert_eq!(cells.iter().filter(|c| c.minus_orbit_closed()).count(), 1);
    }

    #[test]
    fn identity_chart_has_no_positive_part() {
        let d = diag("B3", 1);
        let lambda = Cocharacter::canonical(d.root_system(), d.levi_nodes()).unwrap();
        let ch = BigCellChart::new(&d, d.element(0), &lambda).unwrap();
        assert_eq!(ch.roots.len(), d.dim());
        assert!(ch.roots_with(WeightSign::Positive).is_empty());
    }

    #[test]
    fn scaling_and_limits() {
        let d = diag("A3", 0);
        let lambda = Cocharacter::canonical(d.root_system(), NodeSet(0b010)).unwrap();
        let w = d.element(1);
        let ch = BigCellChart::new(&d, w, &lambda).unwrap();
        let zero = ch.roots_with(WeightSign::Zero);
        let neg = ch.roots_with(WeightSign::Negative);
        assert!(!zero.is_empty() && !neg.is_empty());
        let p = RationalPoint::from_map([(zero[0], q("1/3")), (neg[0], q("7/5"))].into());
        let lim = ch.limit_at_infinity(&p).unwrap();
        assert_eq!(lim, RationalPoint::from_map([(zero[0], q("1/3"))].into()));
        assert_eq!(ch.limit_at_infinity(&lim).unwrap(), lim);
        assert_eq!(ch.act(&one(), &p).unwrap(), p);
        assert!(matches!(ch.act(&q("0"), &p), Err(Error::ZeroParameter)));
        let pos = ch.roots_with(WeightSign::Positive);
        let bad = RationalPoint::from_map([(pos[0], q("1"))].into());
        assert!(matches!(ch.limit_at_infinity(&bad), Err(Error::LeavesChart(_))));
    }

    #[test]
    fn weight_minus_two_coordinate() {
        // c.(3/2) at weight -2 with t = 2 gives 3/8
        let d = diag("G2", 1);
        let lambda = Cocharacter::canonical(d.root_system(), NodeSet(1)).unwrap();
        let ch = BigCellChart::new(&d, d.element(0), &lambda).unwrap();
        let r = *ch.roots.iter().find(|&&r| ch.weight_of(r).unwrap() == -2).unwrap();
        let p = RationalPoint::from_map([(r, q("3/2"))].into());
        assert_eq!(ch.act(&q("2"), &p).unwrap().get(r), q("3/8"));
    }

    #[test]
    fn degenerate_multiplicities() {
        let d = diag("A3", 0);
        let lambda = Cocharacter::canonical(d.root_system(), NodeSet(0b010)).unwrap();
        let ch = BigCellChart::new(&d, d.element(1), &lambda).unwrap();
        let z = ch.roots_with(WeightSign::Zero)[0];
        let m = ch.roots_with(WeightSign::Negative)[0];
        let a = RationalPoint::from_map([(z, q("1")), (m, q("2"))].into());
        let b = RationalPoint::from_map([(z, q("1")), (m, q("5"))].into());
        let c = RationalPoint::from_map([(z, q("2"))].into());
        assert!(ch.degenerate(&[]).unwrap().is_empty());
        assert!(ch.is_transverse_wrt_lambda(std::slice::from_ref(&a)).unwrap());
        assert!(!ch.is_transverse_wrt_lambda(&[a.clone(), b.clone()]).unwrap());
        assert!(ch.is_transverse_wrt_lambda(&[a.clone(), c.clone()]).unwrap());
        let out = ch.degenerate(&[a, b, c]).unwrap();
        assert_eq!(out.iter().map(|x| x.1).collect::<Vec<_>>(), vec![2, 1]);
    }

    #[test]
    fn rational_text() {
        assert_eq!(format_rational(&q("6/-4")), "-3/2");
        assert_eq!(format_rational(&q("5")), "5/1");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        let pts = parse_points(r#"[{"coords": {"3": "1/2", "5": "0"}}]"#).unwrap();
        assert_eq!(pts[0].coords.len(), 1);
        assert_eq!(parse_points(&points_to_json(&pts).to_string()).unwrap(), pts);
        assert!(parse_points("{}").is_err());
        assert!(parse_points("").unwrap().is_empty());
    }
}
