//! Plain-text channel and factor files.
//!
//! Channel file:
//!
//! ```text
//! dmc 2 2 2 2          # |X| |X1| |Y1| |Y2|
//! 0 0 0 0 0.81         # x x1 y1 y2 p
//! ...
//! ```
//!
//! Two-sided channels use `dmc2 |X| |X1| |X2| |Y1| |Y2|` and lines
//! `x x1 x2 y1 y2 p`. Factor files hold one or more blocks
//! `factor <name> <d1>x<d2>x...` followed by `i1 i2 ... p` lines. Cells not
//! listed are zero; `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::channel::DmcSpec;
use super::factors::{JamRelayFactors, RelayFactors, Table, TwoSidedFactors};
use super::{DmcError, DEFAULT_CELL_CAP};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Content(String),
    #[error(transparent)]
    Invalid(#[from] DmcError),
}

fn at(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Line {
        line,
        message: message.into(),
    }
}

/// Known factor names with their rank and number of conditioning axes.
const FACTOR_KINDS: &[(&str, usize, usize)] = &[
    ("pv1v2", 2, 0),
    ("px_given_v", 3, 2),
    ("px1", 1, 0),
    ("pyhat", 4, 3),
    ("pu", 1, 0),
    ("px1_given_u", 2, 1),
    ("pu1x1", 2, 0),
    ("pyhat1", 3, 2),
    ("pu2x2", 2, 0),
    ("pyhat2", 3, 2),
    ("paux", 5, 0),
    ("pxx1", 2, 0),
];

fn factor_kind(name: &str) -> Option<(usize, usize)> {
    FACTOR_KINDS
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|&(_, rank, cond)| (rank, cond))
}

/// Content lines with 1-based numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_size(line: usize, tok: &str) -> Result<usize, FormatError> {
    match tok.parse::<usize>() {
        Ok(0) => Err(at(line, "alphabet sizes must be at least 1")),
        Ok(n) => Ok(n),
        Err(_) => Err(at(line, format!("expected a size, found `{tok}`"))),
    }
}

fn parse_prob(line: usize, tok: &str) -> Result<f64, FormatError> {
    let p: f64 = tok
        .parse()
        .map_err(|_| at(line, format!("expected a probability, found `{tok}`")))?;
    if !p.is_finite() || p < 0.0 {
        return Err(at(
            line,
            format!("probability {tok} is negative or not finite"),
        ));
    }
    Ok(p)
}

fn volume(line: usize, dims: &[usize]) -> Result<usize, FormatError> {
    dims.iter()
        .try_fold(1usize, |acc, &d| {
            acc.checked_mul(d).filter(|&c| c <= DEFAULT_CELL_CAP)
        })
        .ok_or_else(|| at(line, format!("more than {DEFAULT_CELL_CAP} cells")))
}

/// Reads `indices... p` into a dense row-major buffer.
fn fill_cell(
    line: usize,
    tokens: &[&str],
    dims: &[usize],
    data: &mut [f64],
    seen: &mut [bool],
) -> Result<(), FormatError> {
    if tokens.len() != dims.len() + 1 {
        return Err(at(
            line,
            format!("expected {} indices and a probability", dims.len()),
        ));
    }
    let mut off = 0usize;
    for (axis, (&tok, &d)) in tokens.iter().zip(dims).enumerate() {
        let i: usize = tok
            .parse()
            .map_err(|_| at(line, format!("expected an index, found `{tok}`")))?;
        if i >= d {
            return Err(at(
                line,
                format!("index {i} out of range on axis {axis} (size {d})"),
            ));
        }
        off = off * d + i;
    }
    if seen[off] {
        return Err(at(line, "cell listed twice"));
    }
    seen[off] = true;
    data[off] = parse_prob(line, tokens[dims.len()])?;
    Ok(())
}

pub fn parse_channel(text: &str) -> Result<DmcSpec, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| FormatError::Content("empty channel file".into()))?;
    let two_sided = match header[0] {
        "dmc" => false,
        "dmc2" => true,
        other => {
            return Err(at(
                hline,
                format!("expected `dmc` or `dmc2`, found `{other}`"),
            ))
        }
    };
    let want = if two_sided { 5 } else { 4 };
    if header.len() != want + 1 {
        return Err(at(
            hline,
            format!("`{}` takes {want} alphabet sizes", header[0]),
        ));
    }
    let sizes = header[1..]
        .iter()
        .map(|t| parse_size(hline, t))
        .collect::<Result<Vec<_>, _>>()?;
    let cells = volume(hline, &sizes)?;
    let mut data = vec![0.0; cells];
    let mut seen = vec![false; cells];
    for (line, tokens) in lines {
        fill_cell(line, &tokens, &sizes, &mut data, &mut seen)?;
    }
    let spec = if two_sided {
        DmcSpec::two_sided(sizes[0], sizes[1], sizes[2], sizes[3], sizes[4], data)?
    } else {
        DmcSpec::one_sided(sizes[0], sizes[1], sizes[2], sizes[3], data)?
    };
    Ok(spec)
}

pub fn write_channel(dmc: &DmcSpec) -> String {
    let mut out = String::new();
    if dmc.is_two_sided() {
        let _ = writeln!(
            out,
            "dmc2 {} {} {} {} {}",
            dmc.nx(),
            dmc.nx1(),
            dmc.nx2(),
            dmc.ny1(),
            dmc.ny2()
        );
    } else {
        let _ = writeln!(
            out,
            "dmc {} {} {} {}",
            dmc.nx(),
            dmc.nx1(),
            dmc.ny1(),
            dmc.ny2()
        );
    }
    for x in 0..dmc.nx() {
        for x1 in 0..dmc.nx1() {
            for x2 in 0..dmc.nx2() {
                for y1 in 0..dmc.ny1() {
                    for y2 in 0..dmc.ny2() {
                        let p = dmc.p(x, x1, x2, y1, y2);
                        if p == 0.0 {
                            continue;
                        }
                        if dmc.is_two_sided() {
                            let _ = writeln!(out, "{x} {x1} {x2} {y1} {y2} {p}");
                        } else {
                            let _ = writeln!(out, "{x} {x1} {y1} {y2} {p}");
                        }
                    }
                }
            }
        }
    }
    out
}

/// Named probability tables read from a factor file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FactorFile {
    factors: BTreeMap<String, Table>,
}

impl FactorFile {
    pub fn get(&self, name: &str) -> Option<&Table> {
        self.factors.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.factors.keys().map(String::as_str)
    }

    /// Adds a table under a known factor name.
    pub fn insert(&mut self, name: &str, table: Table) -> Result<(), FormatError> {
        let (rank, _) = factor_kind(name)
            .ok_or_else(|| FormatError::Content(format!("unknown factor `{name}`")))?;
        if table.shape().len() != rank {
            return Err(FormatError::Content(format!(
                "factor `{name}` needs {rank} axes"
            )));
        }
        self.factors.insert(name.to_string(), table);
        Ok(())
    }

    fn take(&self, wanted: &[&str], scheme: &str) -> Result<Vec<Table>, FormatError> {
        if let Some(extra) = self.names().find(|n| !wanted.contains(n)) {
            return Err(FormatError::Content(format!(
                "factor `{extra}` is not used by the {scheme} input"
            )));
        }
        wanted
            .iter()
            .map(|&n| {
                self.factors.get(n).cloned().ok_or_else(|| {
                    FormatError::Content(format!("the {scheme} input needs factor `{n}`"))
                })
            })
            .collect()
    }

    pub fn relay_factors(&self) -> Result<RelayFactors, FormatError> {
        let mut t = self
            .take(&["pv1v2", "px_given_v", "px1", "pyhat"], "relay")?
            .into_iter();
        let mut next = || t.next().expect("length checked");
        Ok(RelayFactors {
            pv1v2: next(),
            px_given_v: next(),
            px1: next(),
            pyhat: next(),
        })
    }

    pub fn jam_relay_factors(&self) -> Result<JamRelayFactors, FormatError> {
        let mut t = self
            .take(
                &["pv1v2", "px_given_v", "pu", "px1_given_u", "pyhat"],
                "jam-relay",
            )?
            .into_iter();
        let mut next = || t.next().expect("length checked");
        Ok(JamRelayFactors {
            pv1v2: next(),
            px_given_v: next(),
            pu: next(),
            px1_given_u: next(),
            pyhat: next(),
        })
    }

    pub fn two_sided_factors(&self) -> Result<TwoSidedFactors, FormatError> {
        let mut t = self
            .take(
                &["pv1v2", "px_given_v", "pu1x1", "pyhat1", "pu2x2", "pyhat2"],
                "two-sided",
            )?
            .into_iter();
        let mut next = || t.next().expect("length checked");
        Ok(TwoSidedFactors {
            pv1v2: next(),
            px_given_v: next(),
            pu1x1: next(),
            pyhat1: next(),
            pu2x2: next(),
            pyhat2: next(),
        })
    }

    /// Auxiliary joint `p(u, v1, v2, x, x1)`.
    pub fn aux_joint(&self) -> Result<Table, FormatError> {
        Ok(self.take(&["paux"], "auxiliary outer-bound")?.remove(0))
    }

    /// Channel input `p(x, x1)`.
    pub fn input(&self) -> Result<Table, FormatError> {
        Ok(self.take(&["pxx1"], "channel-input")?.remove(0))
    }
}

fn named(pairs: Vec<(&str, &Table)>) -> FactorFile {
    FactorFile {
        factors: pairs
            .into_iter()
            .map(|(n, t)| (n.to_string(), t.clone()))
            .collect(),
    }
}

impl From<&RelayFactors> for FactorFile {
    fn from(f: &RelayFactors) -> Self {
        named(vec![
            ("pv1v2", &f.pv1v2),
            ("px_given_v", &f.px_given_v),
            ("px1", &f.px1),
            ("pyhat", &f.pyhat),
        ])
    }
}

impl From<&JamRelayFactors> for FactorFile {
    fn from(f: &JamRelayFactors) -> Self {
        named(vec![
            ("pv1v2", &f.pv1v2),
            ("px_given_v", &f.px_given_v),
            ("pu", &f.pu),
            ("px1_given_u", &f.px1_given_u),
            ("pyhat", &f.pyhat),
        ])
    }
}

impl From<&TwoSidedFactors> for FactorFile {
    fn from(f: &TwoSidedFactors) -> Self {
        named(vec![
            ("pv1v2", &f.pv1v2),
            ("px_given_v", &f.px_given_v),
            ("pu1x1", &f.pu1x1),
            ("pyhat1", &f.pyhat1),
            ("pu2x2", &f.pu2x2),
            ("pyhat2", &f.pyhat2),
        ])
    }
}

struct Block {
    name: String,
    header_line: usize,
    shape: Vec<usize>,
    data: Vec<f64>,
    seen: Vec<bool>,
}

pub fn parse_factors(text: &str) -> Result<FactorFile, FormatError> {
    let mut blocks: Vec<Block> = Vec::new();
    for (line, tokens) in content_lines(text) {
        if tokens[0] == "factor" {
            if tokens.len() != 3 {
                return Err(at(line, "expected `factor <name> <shape>`"));
            }
            let name = tokens[1];
            let (rank, _) =
                factor_kind(name).ok_or_else(|| at(line, format!("unknown factor `{name}`")))?;
            if blocks.iter().any(|b| b.name == name) {
                return Err(at(line, format!("factor `{name}` defined twice")));
            }
            let shape = tokens[2]
                .split('x')
                .map(|t| parse_size(line, t))
                .collect::<Result<Vec<_>, _>>()?;
            if shape.len() != rank {
                return Err(at(line, format!("factor `{name}` needs {rank} axes")));
            }
            let cells = volume(line, &shape)?;
            blocks.push(Block {
                name: name.to_string(),
                header_line: line,
                shape,
                data: vec![0.0; cells],
                seen: vec![false; cells],
            });
        } else {
            let b = blocks
                .last_mut()
                .ok_or_else(|| at(line, "values before the first `factor` header"))?;
            fill_cell(line, &tokens, &b.shape, &mut b.data, &mut b.seen)?;
        }
    }
    if blocks.is_empty() {
        return Err(FormatError::Content("no factors defined".into()));
    }
    let mut file = FactorFile::default();
    for b in blocks {
        let (_, n_cond) = factor_kind(&b.name).expect("checked at header");
        let table = Table::new(b.shape, b.data)?;
        table
            .check_conditional(&b.name, n_cond)
            .map_err(|e| at(b.header_line, e.to_string()))?;
        file.factors.insert(b.name, table);
    }
    Ok(file)
}

pub fn write_factors(file: &FactorFile) -> String {
    let mut out = String::new();
    for (name, t) in &file.factors {
        let shape: Vec<String> = t.shape().iter().map(usize::to_string).collect();
        let _ = writeln!(out, "factor {name} {}", shape.join("x"));
        let mut idx = vec![0usize; t.shape().len()];
        for &p in t.data() {
            if p != 0.0 {
                let cols: Vec<String> = idx.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "{} {p}", cols.join(" "));
            }
            for k in (0..idx.len()).rev() {
                idx[k] += 1;
                if idx[k] < t.shape()[k] {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
    out
}
