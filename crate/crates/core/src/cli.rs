//! Command-line front end.
//!
//! Every verb builds a report record, printed either as text or as JSON.
//! JSON reports deserialize back into the same records, and the output of
//! a given argv is byte-identical across runs.

use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::address::{self, S0Address};
use crate::diagram::MarkedDiagram;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::rigidity::{self, Catalog, VerifyReport, Verdict};
use crate::root_system::{RootId, RootSystem, SimpleType};
use crate::schubert::{OppositeDescriptor, SchubertVariety};
use crate::torus::{self, BigCellChart, Cocharacter, WeightSign};
use crate::weyl::{NodeSet, WeylElement};

#[derive(Debug, Parser)]
#[command(name = "schubert", version, about = "Exact Schubert-variety combinatorics and Schur-rigidity classification")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Evaluate sweeps sequentially.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct S0Args {
    /// Reduced word of 1-based simple indices, e.g. "3 2 3 4".
    #[arg(long)]
    pub w: Option<String>,
    /// Subdiagram nodes, e.g. 1,2,3.
    #[arg(long)]
    pub sub: Option<String>,
    /// Named exceptional entry, e.g. C2-a2-a1.
    #[arg(long)]
    pub exc: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the positive roots of a type.
    Roots { ty: String },
    /// Group order, W^P for a marked diagram, or one element given by --w.
    Weyl {
        target: String,
        #[arg(long)]
        w: Option<String>,
    },
    /// Invariants of one Schubert variety.
    Schubert {
        address: String,
        #[command(flatten)]
        s0: S0Args,
    },
    /// Bialynicki-Birula cells for the canonical cocharacter of I.
    BbCells {
        diagram: String,
        #[arg(long = "I")]
        levi: String,
    },
    /// Limits of chart points under the cocharacter of I.
    Degenerate {
        diagram: String,
        #[arg(long)]
        w: String,
        #[arg(long = "I")]
        levi: String,
        #[arg(long)]
        points: std::path::PathBuf,
    },
    /// Schur-rigidity verdict for a pair (S, S_0).
    Classify {
        address: String,
        #[command(flatten)]
        s0: S0Args,
    },
    /// The frozen catalog, or the smooth non-linear pairs of one diagram.
    Catalog { diagram: Option<String> },
    /// Cross-check the tangent-root criterion against the catalog.
    Verify { diagrams: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRow {
    pub id: u16,
    pub root: String,
    pub coeffs: Vec<i32>,
    pub height: i32,
    pub long: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    #[serde(rename = "type")]
    pub ty: String,
    pub count: usize,
    pub positive: Vec<RootRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRow {
    pub word: Vec<usize>,
    pub length: usize,
    pub one_line: Vec<u16>,
    pub inversion_set: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylReport {
    #[serde(rename = "type")]
    pub ty: String,
    pub order: u64,
    pub diagram: Option<String>,
    pub minimal_reps: Option<Vec<ElementRow>>,
    pub element: Option<ElementRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertReport {
    pub pair: String,
    pub word: Vec<usize>,
    pub dimension: usize,
    pub one_line: Vec<u16>,
    pub tangent_roots: Vec<String>,
    pub stabilizer: NodeSet,
    pub poincare: Vec<u64>,
    pub degree: String,
    pub linear: bool,
    pub maximal_linear: bool,
    pub rationally_smooth: bool,
    pub opposite: OppositeDescriptor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRow {
    pub rep: Vec<usize>,
    pub size: usize,
    pub plus_dim: usize,
    pub fixed_dim: usize,
    pub minus_dim: usize,
    pub minus_orbit_closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BbReport {
    pub diagram: String,
    #[serde(rename = "I")]
    pub levi: NodeSet,
    pub cocharacter: Vec<i64>,
    pub cells: Vec<CellRow>,
    pub closed_orbits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartRow {
    pub id: u16,
    pub root: String,
    pub weight: i64,
    pub sign: WeightSign,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitRow {
    pub coords: std::collections::BTreeMap<String, String>,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerateReport {
    pub diagram: String,
    pub word: Vec<usize>,
    #[serde(rename = "I")]
    pub levi: NodeSet,
    pub chart: Vec<ChartRow>,
    pub limits: Vec<LimitRow>,
    pub transverse: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairList {
    pub diagram: String,
    pub pairs: Vec<Verdict>,
}

/// Run with process-style arguments; returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_input_error() {
                2
            } else {
                1
            }
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn one_of(s0: &S0Args) -> Result<Option<(&'static str, &str)>> {
    let given: Vec<(&'static str, &str)> = [("w", &s0.w), ("sub", &s0.sub), ("exc", &s0.exc)]
        .into_iter()
        .filter_map(|(k, v)| v.as_deref().map(|v| (k, v)))
        .collect();
    match given.len() {
        0 => Ok(None),
        1 => Ok(Some(given[0])),
        _ => Err(Error::MalformedAddress("give only one of --w, --sub, --exc".into())),
    }
}

/// Resolve `ADDRESS [--w|--sub|--exc]` to a diagram and S_0 address.
fn resolve_address(address: &str, s0: &S0Args) -> Result<(Arc<MarkedDiagram>, S0Address)> {
    let (ty, k, inline) = address::parse_pair(address)?;
    let rank = ty.rank;
    let flag = match one_of(s0)? {
        None => None,
        Some(("w", v)) => Some(S0Address::Word(address::parse_word(v, rank)?)),
        Some(("sub", v)) => Some(S0Address::Sub(address::parse_nodes(v, rank)?)),
        Some((_, v)) => Some(S0Address::Exc(v.trim().to_string())),
    };
    let s0_addr = match (inline, flag) {
        (Some(_), Some(_)) => {
            return Err(Error::MalformedAddress("S_0 given both inline and by flag".into()))
        }
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => return Err(Error::MalformedAddress(format!("{address}: missing S_0"))),
    };
    Ok((MarkedDiagram::shared(ty, k)?, s0_addr))
}

fn element_row(rs: &RootSystem, w: &WeylElement) -> ElementRow {
    ElementRow {
        word: w.reduced_word(rs).into_iter().map(|i| i + 1).collect(),
        length: w.length(rs),
        one_line: w.one_line(rs),
        inversion_set: w.inversion_set(rs).into_iter().map(|b| rs.format_root(b)).collect(),
    }
}

fn root_label(rs: &RootSystem, r: RootId) -> String {
    rs.format_root(r)
}

pub fn execute(cli: &Cli) -> Result<String> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    match &cli.command {
        Command::Roots { ty } => {
            let (ty, _) = address::parse_type_or_diagram(ty)?;
            let rs = RootSystem::build(ty)?;
            let rep = RootsReport {
                ty: ty.to_string(),
                count: rs.num_positive(),
                positive: rs
                    .positive_roots()
                    .map(|r| RootRow {
                        id: r.0,
                        root: root_label(&rs, r),
                        coeffs: rs.coeffs(r).to_vec(),
                        height: rs.height(r),
                        long: rs.is_long(r),
                    })
                    .collect(),
            };
            Ok(if cli.json {
                to_json(&rep)
            } else {
                let mut s = format!("{}: {} positive roots\n", rep.ty, rep.count);
                for r in &rep.positive {
                    s.push_str(&format!(
                        "{:>4}  {:<24} height {:<3} {}\n",
                        r.id,
                        r.root,
                        r.height,
                        if r.long { "long" } else { "short" }
                    ));
                }
                s
            })
        }
        Command::Weyl { target, w } => {
            let (ty, k) = address::parse_type_or_diagram(target)?;
            let rs = RootSystem::build(ty)?;
            let element = match w {
                Some(w) => Some(element_row(&rs, &WeylElement::from_word(&rs, &address::parse_word(w, ty.rank)?)?)),
                None => None,
            };
            let (diagram, reps) = match k {
                Some(k) => {
                    let d = MarkedDiagram::shared(ty, k)?;
                    let reps = d.elements().iter().map(|e| element_row(&rs, e)).collect();
                    (Some(d.to_string()), Some(reps))
                }
                None => (None, None),
            };
            let rep = WeylReport {
                ty: ty.to_string(),
                order: ty.weyl_group_order() as u64,
                diagram,
                minimal_reps: reps,
                element,
            };
            Ok(if cli.json { to_json(&rep) } else { weyl_text(&rep) })
        }
        Command::Schubert { address, s0 } => {
            let (d, s0_addr) = resolve_address(address, s0)?;
            let pair = address::pair_descriptor(&d, &s0_addr)?;
            let sv = pair.resolve()?;
            let rs = d.root_system();
            let rep = SchubertReport {
                pair: pair.label(),
                word: sv.word_1based(),
                dimension: sv.dimension(),
                one_line: sv.w().one_line(rs),
                tangent_roots: sv.tangent_roots().into_iter().map(|r| root_label(rs, r)).collect(),
                stabilizer: sv.stabilizer_levi_set(),
                poincare: sv.poincare_polynomial(),
                degree: sv.degree().to_string(),
                linear: sv.is_linear(),
                maximal_linear: sv.is_maximal_linear(),
                rationally_smooth: sv.rationally_smooth(),
                opposite: sv.opposite(),
            };
            Ok(if cli.json { to_json(&rep) } else { schubert_text(&rep) })
        }
        Command::BbCells { diagram, levi } => {
            let (ty, k) = address::parse_diagram(diagram)?;
            let d = MarkedDiagram::shared(ty, k)?;
            let levi = address::parse_nodes(levi, ty.rank)?;
            let rs = d.root_system();
            let lambda = Cocharacter::canonical(rs, levi)?;
            let cells = torus::bb_cells(&d, levi)?;
            let rep = BbReport {
                diagram: d.to_string(),
                levi,
                cocharacter: lambda.coeffs,
                closed_orbits: cells.iter().filter(|c| c.minus_orbit_closed()).count(),
                cells: cells
                    .iter()
                    .map(|c| CellRow {
                        rep: c.rep.reduced_word(rs).into_iter().map(|i| i + 1).collect(),
                        size: c.size,
                        plus_dim: c.plus_dim,
                        fixed_dim: c.fixed_dim,
                        minus_dim: c.minus_dim,
                        minus_orbit_closed: c.minus_orbit_closed(),
                    })
                    .collect(),
            };
            Ok(if cli.json { to_json(&rep) } else { bb_text(&rep) })
        }
        Command::Degenerate { diagram, w, levi, points } => {
            let (ty, k) = address::parse_diagram(diagram)?;
            let d = MarkedDiagram::shared(ty, k)?;
            let rs = d.root_system();
            let sv = SchubertVariety::from_word(d.clone(), &address::parse_word(w, ty.rank)?)?;
            let levi = address::parse_nodes(levi, ty.rank)?;
            let lambda = Cocharacter::canonical(rs, levi)?;
            let chart = BigCellChart::new(&d, sv.w(), &lambda)?;
            let text = std::fs::read_to_string(points)
                .map_err(|e| Error::MalformedPoints(format!("{}: {e}", points.display())))?;
            let pts = torus::parse_points(&text)?;
            let limits = chart.degenerate(&pts)?;
            let rep = DegenerateReport {
                diagram: d.to_string(),
                word: sv.word_1based(),
                levi,
                chart: chart
                    .roots
                    .iter()
                    .zip(&chart.weights)
                    .zip(&chart.tags)
                    .map(|((&r, &n), &t)| ChartRow { id: r.0, root: root_label(rs, r), weight: n, sign: t })
                    .collect(),
                transverse: chart.is_transverse_wrt_lambda(&pts)?,
                limits: limits
                    .into_iter()
                    .map(|(p, m)| LimitRow {
                        coords: p
                            .coords
                            .iter()
                            .map(|(r, z)| (r.0.to_string(), torus::format_rational(z)))
                            .collect(),
                        multiplicity: m,
                    })
                    .collect(),
            };
            Ok(if cli.json { to_json(&rep) } else { degenerate_text(&rep) })
        }
        Command::Classify { address, s0 } => {
            let (d, s0_addr) = resolve_address(address, s0)?;
            let v = rigidity::classify(&address::pair_descriptor(&d, &s0_addr)?)?;
            Ok(if cli.json { to_json(&v) } else { verdict_text(&v) })
        }
        Command::Catalog { diagram } => match diagram {
            None => {
                let c = rigidity::full_catalog();
                Ok(if cli.json { to_json(&c) } else { catalog_text(&c) })
            }
            Some(s) => {
                let (ty, k) = address::parse_diagram(s)?;
                let d = MarkedDiagram::shared(ty, k)?;
                let pairs = rigidity::catalog_smooth_nonlinear(&d)?;
                let verdicts = rigidity::classify_batch(exec, &pairs)
                    .into_iter()
                    .collect::<Result<Vec<_>>>()?;
                let rep = PairList { diagram: d.to_string(), pairs: verdicts };
                Ok(if cli.json {
                    to_json(&rep)
                } else {
                    let mut s = format!("{}: {} smooth non-linear pairs\n", rep.diagram, rep.pairs.len());
                    for v in &rep.pairs {
                        s.push_str(&format!("{:<28} {}\n", v.pair, v.status));
                    }
                    s
                })
            }
        },
        Command::Verify { diagrams } => {
            let list: Vec<(SimpleType, usize)> = if diagrams.is_empty() {
                default_verify_range()
            } else {
                diagrams.iter().map(|s| address::parse_diagram(s)).collect::<Result<_>>()?
            };
            let reports = crate::par::map(exec, &list, |&(ty, k)| {
                MarkedDiagram::shared(ty, k).and_then(|d| rigidity::verify_catalog(&d))
            })
            .into_iter()
            .collect::<Result<Vec<VerifyReport>>>()?;
            let failures: usize = reports.iter().map(|r| r.failures).sum();
            let text = if cli.json {
                to_json(&reports)
            } else {
                let mut s = String::new();
                for r in &reports {
                    s.push_str(&r.to_table());
                    s.push('\n');
                }
                s.push_str(&format!("total mismatches: {failures}\n"));
                s
            };
            if failures > 0 {
                return Err(Error::Internal(format!("{failures} catalog mismatches\n{text}")));
            }
            Ok(text)
        }
    }
}

/// Every marked diagram of A1-A6, B2-B6, C2-C6, D4-D6, F4 and G2.
pub fn default_verify_range() -> Vec<(SimpleType, usize)> {
    let mut out = Vec::new();
    let mut push = |s: String| {
        let ty: SimpleType = s.parse().expect("valid type");
        for k in 0..ty.rank {
            out.push((ty, k));
        }
    };
    for n in 1..=6 {
        push(format!("A{n}"));
    }
    for n in 2..=6 {
        push(format!("B{n}"));
        push(format!("C{n}"));
    }
    for n in 4..=6 {
        push(format!("D{n}"));
    }
    push("F4".into());
    push("G2".into());
    out
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn weyl_text(r: &WeylReport) -> String {
    let mut s = format!("W({}) has order {}\n", r.ty, r.order);
    if let Some(e) = &r.element {
        s.push_str(&format!(
            "element: reduced word [{}], length {}, inversions {{{}}}\n",
            join(&e.word, " "),
            e.length,
            e.inversion_set.join(", ")
        ));
    }
    if let (Some(d), Some(reps)) = (&r.diagram, &r.minimal_reps) {
        s.push_str(&format!("W^P for {d}: {} elements\n", reps.len()));
        for e in reps {
            s.push_str(&format!("  l={:<3} [{}]\n", e.length, join(&e.word, " ")));
        }
    }
    s
}

fn schubert_text(r: &SchubertReport) -> String {
    format!(
        "{}\n  word            [{}]\n  dimension       {}\n  tangent roots   {{{}}}\n  stabilizer I    {{{}}}\n  poincare        [{}]\n  degree          {}\n  linear          {}\n  maximal linear  {}\n  rationally smooth {}\n  opposite dim    {}\n",
        r.pair,
        join(&r.word, " "),
        r.dimension,
        r.tangent_roots.join(", "),
        r.stabilizer.to_label(),
        join(&r.poincare, ", "),
        r.degree,
        r.linear,
        r.maximal_linear,
        r.rationally_smooth,
        r.opposite.dimension
    )
}

fn bb_text(r: &BbReport) -> String {
    let mut s = format!(
        "{} with I = {{{}}}, lambda = [{}]: {} cells, {} closed P_I^- orbit(s)\n",
        r.diagram,
        r.levi.to_label(),
        join(&r.cocharacter, " "),
        r.cells.len(),
        r.closed_orbits
    );
    for c in &r.cells {
        s.push_str(&format!(
            "  [{}] size {} plus {} fixed {} minus {}{}\n",
            join(&c.rep, " "),
            c.size,
            c.plus_dim,
            c.fixed_dim,
            c.minus_dim,
            if c.minus_orbit_closed { "  closed" } else { "" }
        ));
    }
    s
}

fn degenerate_text(r: &DegenerateReport) -> String {
    let mut s = format!(
        "{} / w={} with I = {{{}}}: {} limit(s), transverse {}\n",
        r.diagram,
        join(&r.word, " "),
        r.levi.to_label(),
        r.limits.len(),
        r.transverse
    );
    for l in &r.limits {
        let coords: Vec<String> = l.coords.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        s.push_str(&format!("  {{{}}} x{}\n", coords.join(", "), l.multiplicity));
    }
    s
}

fn verdict_text(v: &Verdict) -> String {
    let mut s = format!("{}: {}\n", v.pair, v.status);
    for r in &v.reasons {
        s.push_str(&format!("  {:<20} {:<48} [{}]\n", r.criterion, r.result, r.source));
    }
    s
}

fn catalog_text(c: &Catalog) -> String {
    let mut s = format!("catalog version {}\n", c.version);
    for e in &c.entries {
        s.push_str(&format!(
            "  {:<18} {:<48} {:<20} {:<30} {}\n",
            e.id,
            e.ambient,
            e.s0,
            e.source,
            e.schur
        ));
    }
    s
}
