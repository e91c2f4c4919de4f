//! Text addresses for diagrams, words, node lists and pairs.
//!
//! Grammar: `<FAMILY><rank>:<marked>` for a marked diagram (`F4:3`),
//! optionally followed by ` / w=<word>`, ` / sub=<nodes>` or
//! ` / exc=<tag>`. Words are space-separated 1-based simple indices and
//! node lists are comma separated.

use std::sync::Arc;

use crate::diagram::MarkedDiagram;
use crate::error::{Error, Result};
use crate::rigidity::{PairDescriptor, S0};
use crate::root_system::SimpleType;
use crate::schubert::{SchubertVariety, SubdiagramDescriptor};
use crate::weyl::NodeSet;

/// How `S_0` is written after the slash.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum S0Address {
    Word(Vec<usize>),
    Sub(NodeSet),
    Exc(String),
}

/// `F4` or `F4:3`; the marked node is returned 0-based.
pub fn parse_type_or_diagram(s: &str) -> Result<(SimpleType, Option<usize>)> {
    let s = s.trim();
    match s.split_once(':') {
        None => Ok((s.parse()?, None)),
        Some((t, k)) => {
            let ty: SimpleType = t.trim().parse()?;
            let k: usize = k
                .trim()
                .parse()
                .map_err(|_| Error::MalformedAddress(k.trim().to_string()))?;
            if k == 0 || k > ty.rank {
                return Err(Error::IndexOutOfRange { index: k, rank: ty.rank });
            }
            Ok((ty, Some(k - 1)))
        }
    }
}

/// `F4:3`, 0-based marked node.
pub fn parse_diagram(s: &str) -> Result<(SimpleType, usize)> {
    match parse_type_or_diagram(s)? {
        (ty, Some(k)) => Ok((ty, k)),
        (_, None) => Err(Error::MalformedAddress(s.trim().to_string())),
    }
}

/// `"3 2 3 4"` into 0-based indices; empty text is the identity.
pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|tok| {
            let i: usize = tok.parse().map_err(|_| Error::MalformedWord(tok.to_string()))?;
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            Ok(i - 1)
        })
        .collect()
}

/// `"1,2,3"`; empty text is the empty set.
pub fn parse_nodes(s: &str, rank: usize) -> Result<NodeSet> {
    let mut set = NodeSet::empty();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i: usize = tok.parse().map_err(|_| Error::MalformedAddress(tok.to_string()))?;
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange { index: i, rank });
        }
        set = set.with(i - 1);
    }
    Ok(set)
}

/// A full pair address such as `F4:3 / sub=1,2,3`.
pub fn parse_pair(s: &str) -> Result<(SimpleType, usize, Option<S0Address>)> {
    let (diag, rest) = match s.split_once('/') {
        Some((d, r)) => (d, Some(r.trim())),
        None => (s, None),
    };
    let (ty, k) = parse_diagram(diag)?;
    let s0 = match rest {
        None => None,
        Some(r) => {
            let (key, val) = r
                .split_once('=')
                .ok_or_else(|| Error::MalformedAddress(r.to_string()))?;
            Some(match key.trim() {
                "w" => S0Address::Word(parse_word(val, ty.rank)?),
                "sub" => S0Address::Sub(parse_nodes(val, ty.rank)?),
                "exc" => S0Address::Exc(val.trim().to_string()),
                other => return Err(Error::MalformedAddress(other.to_string())),
            })
        }
    };
    Ok((ty, k, s0))
}

pub fn pair_descriptor(d: &Arc<MarkedDiagram>, s0: &S0Address) -> Result<PairDescriptor> {
    Ok(match s0 {
        S0Address::Word(w) => PairDescriptor::schubert(SchubertVariety::from_word(d.clone(), w)?),
        S0Address::Sub(n) => {
            let sd = SubdiagramDescriptor::nodes(*n);
            sd.validate(d)?;
            PairDescriptor { diagram: d.clone(), s0: S0::Subdiagram(sd) }
        }
        S0Address::Exc(t) => PairDescriptor::exceptional(d.clone(), t),
    })
}
