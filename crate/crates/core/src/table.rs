//! Full character tables of `S_n` and `W_n`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use rayon::prelude::*;

use crate::combinatorics::{bipartitions, partition_to_beta, BiSymbol, Partition, SignedCycleType, SnClass};
use crate::error::{Error, Result};
use crate::format::{
    beta_label, bisymbol_label, parse_beta_label, parse_bisymbol_label, parse_sn_class_label,
    sn_class_label,
};
use crate::sn::SnEvaluator;
use crate::wn::WnEvaluator;

pub const SN_TABLE_MAX: u32 = 8;
pub const WN_TABLE_MAX: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupLabel {
    Symmetric(u32),
    Hyperoctahedral(u32),
}

impl GroupLabel {
    fn tag(&self) -> String {
        match self {
            GroupLabel::Symmetric(n) => format!("S{n}"),
            GroupLabel::Hyperoctahedral(n) => format!("W{n}"),
        }
    }

    fn parse(tag: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown group tag {tag:?}"));
        let (kind, n) = tag.split_at_checked(1).ok_or_else(bad)?;
        let n: u32 = n.parse().map_err(|_| bad())?;
        match kind {
            "S" => Ok(GroupLabel::Symmetric(n)),
            "W" => Ok(GroupLabel::Hyperoctahedral(n)),
            _ => Err(bad()),
        }
    }
}

/// Rows are canonical symbols, columns classes; `centralizers[j]` is the
/// centralizer order of class `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub group: GroupLabel,
    pub rows: Vec<String>,
    pub classes: Vec<String>,
    pub values: Vec<Vec<i64>>,
    pub centralizers: Vec<u64>,
}

fn check_bound(what: &'static str, n: u32, max: u32) -> Result<()> {
    if n > max {
        return Err(Error::BoundExceeded {
            what,
            n: n as u64,
            max: max as u64,
        });
    }
    Ok(())
}

pub fn character_table_sn(n: u32) -> Result<CharacterTable> {
    check_bound("S_n character table", n, SN_TABLE_MAX)?;
    let symbols: Vec<_> = Partition::all(n)
        .iter()
        .map(|p| partition_to_beta(p, p.len()).expect("exact length"))
        .collect();
    let classes = SnClass::all(n);
    let values = symbols
        .par_iter()
        .map_init(SnEvaluator::new, |ev, beta| {
            classes
                .iter()
                .map(|c| ev.trace(beta, c))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable {
        group: GroupLabel::Symmetric(n),
        rows: symbols.iter().map(beta_label).collect(),
        classes: classes.iter().map(sn_class_label).collect(),
        values,
        centralizers: classes.iter().map(SnClass::centralizer_order).collect(),
    })
}

pub fn character_table_wn(n: u32) -> Result<CharacterTable> {
    check_bound("W_n character table", n, WN_TABLE_MAX)?;
    let symbols: Vec<_> = bipartitions(n)
        .iter()
        .map(|(a, b)| BiSymbol::from_bipartition(a, b))
        .collect();
    let classes = SignedCycleType::all(n);
    let values = symbols
        .par_iter()
        .map_init(WnEvaluator::new, |ev, sym| {
            classes
                .iter()
                .map(|c| ev.trace(sym, c))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable {
        group: GroupLabel::Hyperoctahedral(n),
        rows: symbols.iter().map(bisymbol_label).collect(),
        classes: classes.iter().map(|c| c.to_string()).collect(),
        values,
        centralizers: classes.iter().map(SignedCycleType::centralizer_order).collect(),
    })
}

impl CharacterTable {
    /// `<chi_i, chi_j> = sum_c chi_i(c) chi_j(c) / z_c` for all row pairs.
    #[allow(clippy::needless_range_loop)]
    pub fn inner_products(&self) -> Vec<Vec<BigRational>> {
        let k = self.rows.len();
        let zero = BigRational::from_integer(0.into());
        let mut out = vec![vec![zero.clone(); k]; k];
        for i in 0..k {
            for j in i..k {
                let s = self
                    .centralizers
                    .iter()
                    .enumerate()
                    .map(|(c, &z)| {
                        let num = BigInt::from(self.values[i][c]) * BigInt::from(self.values[j][c]);
                        Ratio::new(num, BigInt::from(z))
                    })
                    .fold(zero.clone(), |acc, x| acc + x);
                out[i][j] = s.clone();
                out[j][i] = s;
            }
        }
        out
    }

    pub fn is_orthonormal(&self) -> bool {
        self.inner_products().iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| *v == BigRational::from_integer(BigInt::from(i64::from(i == j))))
        })
    }

    /// CSV with a header of class labels, one row per symbol, a final
    /// `centralizer` record and a `#` comment recording orthogonality.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        let header = std::iter::once(self.group.tag()).chain(self.classes.iter().cloned());
        w.write_record(header).expect("in-memory write");
        for (label, row) in self.rows.iter().zip(&self.values) {
            let rec = std::iter::once(label.clone()).chain(row.iter().map(|v| v.to_string()));
            w.write_record(rec).expect("in-memory write");
        }
        let rec = std::iter::once("centralizer".to_string())
            .chain(self.centralizers.iter().map(|z| z.to_string()));
        w.write_record(rec).expect("in-memory write");
        let mut out = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8");
        let verdict = if self.is_orthonormal() { "pass" } else { "FAIL" };
        let _ = writeln!(out, "# row orthogonality (centralizer-weighted): {verdict}");
        out
    }

    pub fn from_csv(text: &str) -> Result<CharacterTable> {
        let mut r = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let mut records = Vec::new();
        for rec in r.records() {
            records.push(rec.map_err(|e| Error::Parse(e.to_string()))?);
        }
        let (header, rest) = records
            .split_first()
            .ok_or_else(|| Error::Parse("empty table".into()))?;
        let (footer, body) = rest
            .split_last()
            .ok_or_else(|| Error::Parse("missing centralizer record".into()))?;
        let group = GroupLabel::parse(header.get(0).unwrap_or(""))?;
        let classes: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
        for c in &classes {
            match group {
                GroupLabel::Symmetric(_) => {
                    parse_sn_class_label(c)?;
                }
                GroupLabel::Hyperoctahedral(_) => {
                    c.parse::<SignedCycleType>()?;
                }
            }
        }
        if footer.get(0) != Some("centralizer") {
            return Err(Error::Parse("last record must be the centralizer row".into()));
        }
        let parse_cells = |rec: &csv::StringRecord| -> Result<Vec<String>> {
            if rec.len() != classes.len() + 1 {
                return Err(Error::Parse(format!(
                    "record has {} fields, expected {}",
                    rec.len(),
                    classes.len() + 1
                )));
            }
            Ok(rec.iter().skip(1).map(str::to_string).collect())
        };
        let centralizers = parse_cells(footer)?
            .iter()
            .map(|v| v.parse::<u64>().ok().filter(|&z| z > 0))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Parse("bad centralizer order".into()))?;
        let mut rows = Vec::new();
        let mut values = Vec::new();
        for rec in body {
            let label = rec.get(0).unwrap_or("").to_string();
            match group {
                GroupLabel::Symmetric(_) => {
                    parse_beta_label(&label)?;
                }
                GroupLabel::Hyperoctahedral(_) => {
                    parse_bisymbol_label(&label)?;
                }
            }
            let row = parse_cells(rec)?
                .iter()
                .map(|v| v.parse::<i64>().map_err(|_| Error::Parse(format!("bad entry {v:?}"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(label);
            values.push(row);
        }
        Ok(CharacterTable {
            group,
            rows,
            classes,
            values,
            centralizers,
        })
    }

    /// Aligned plain-text rendering.
    pub fn to_text(&self) -> String {
        let label_w = self
            .rows
            .iter()
            .map(String::len)
            .chain(std::iter::once(self.group.tag().len()))
            .max()
            .unwrap_or(0);
        let col_w: Vec<usize> = self
            .classes
            .iter()
            .enumerate()
            .map(|(j, c)| {
                self.values
                    .iter()
                    .map(|r| r[j].to_string().len())
                    .chain([c.len(), self.centralizers[j].to_string().len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let mut out = String::new();
        let _ = write!(out, "{:<label_w$}", self.group.tag());
        for (c, w) in self.classes.iter().zip(&col_w) {
            let _ = write!(out, "  {c:>w$}");
        }
        out.push('\n');
        for (label, row) in self.rows.iter().zip(&self.values) {
            let _ = write!(out, "{label:<label_w$}");
            for (v, w) in row.iter().zip(&col_w) {
                let _ = write!(out, "  {v:>w$}");
            }
            out.push('\n');
        }
        let _ = write!(out, "{:<label_w$}", "|C(g)|");
        for (z, w) in self.centralizers.iter().zip(&col_w) {
            let _ = write!(out, "  {z:>w$}");
        }
        out.push('\n');
        out
    }
}
