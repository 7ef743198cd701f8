//! Textual group descriptions:
//!
//! ```text
//! spec    := "zn:" N | "klein" | "dihedral:" K | "sym:" K
//!          | "product:" operand ("+" operand)+ | "table:" PATH
//! operand := any spec except "product:..."
//! ```
//!
//! Products of more than two factors fold left. A table file is CSV with
//! `n` rows of `n` integers; row `i`, column `j` holds `i * j`.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{
    make_cyclic, make_dihedral, make_direct_product, make_from_table, make_klein, make_symmetric,
    FiniteGroup,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Klein,
    Dihedral(usize),
    Symmetric(usize),
    Product(Vec<GroupSpec>),
    Table(PathBuf),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        parse_at(text, 0, true)
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic(n) => make_cyclic(*n),
            GroupSpec::Klein => Ok(make_klein()),
            GroupSpec::Dihedral(k) => make_dihedral(*k),
            GroupSpec::Symmetric(k) => make_symmetric(*k),
            GroupSpec::Product(parts) => {
                let mut iter = parts.iter();
                let first = iter.next().expect("product has operands").build()?;
                iter.try_fold(first, |acc, p| make_direct_product(&acc, &p.build()?))
            }
            GroupSpec::Table(path) => load_table(path),
        }
    }

    /// Group order without building the group, when it is known from the
    /// text alone.
    pub fn order_hint(&self) -> Option<usize> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::Klein => Some(4),
            GroupSpec::Dihedral(k) => k.checked_mul(2),
            GroupSpec::Symmetric(k) => (1..=*k).try_fold(1usize, |acc, i| acc.checked_mul(i)),
            GroupSpec::Product(parts) => parts
                .iter()
                .try_fold(1usize, |acc, p| acc.checked_mul(p.order_hint()?)),
            GroupSpec::Table(_) => None,
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "zn:{n}"),
            GroupSpec::Klein => f.write_str("klein"),
            GroupSpec::Dihedral(k) => write!(f, "dihedral:{k}"),
            GroupSpec::Symmetric(k) => write!(f, "sym:{k}"),
            GroupSpec::Product(parts) => {
                f.write_str("product:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            GroupSpec::Table(path) => write!(f, "table:{}", path.display()),
        }
    }
}

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn parse_at(text: &str, offset: usize, allow_product: bool) -> Result<GroupSpec> {
    if text == "klein" {
        return Ok(GroupSpec::Klein);
    }
    let Some((head, rest)) = text.split_once(':') else {
        return Err(parse_error(
            offset,
            format!(
                "expected one of zn:, klein, dihedral:, sym:, product:, table:, found {text:?}"
            ),
        ));
    };
    let body = offset + head.len() + 1;
    match head {
        "zn" => Ok(GroupSpec::Cyclic(parse_number(rest, body)?)),
        "dihedral" => Ok(GroupSpec::Dihedral(parse_number(rest, body)?)),
        "sym" => Ok(GroupSpec::Symmetric(parse_number(rest, body)?)),
        "table" => {
            if rest.is_empty() {
                return Err(parse_error(body, "empty table path"));
            }
            Ok(GroupSpec::Table(PathBuf::from(rest)))
        }
        "product" if !allow_product => Err(parse_error(offset, "nested product is not allowed")),
        "product" => {
            let mut parts = Vec::new();
            let mut start = body;
            for piece in rest.split('+') {
                parts.push(parse_at(piece, start, false)?);
                start += piece.len() + 1;
            }
            if parts.len() < 2 {
                return Err(parse_error(
                    start - 1,
                    "product needs at least two operands",
                ));
            }
            Ok(GroupSpec::Product(parts))
        }
        _ => Err(parse_error(offset, format!("unknown group kind {head:?}"))),
    }
}

fn parse_number(text: &str, position: usize) -> Result<usize> {
    if text.is_empty() {
        return Err(parse_error(position, "expected a number"));
    }
    if let Some(bad) = text.find(|c: char| !c.is_ascii_digit()) {
        return Err(parse_error(
            position + bad,
            format!("unexpected character in {text:?}"),
        ));
    }
    text.parse()
        .map_err(|_| parse_error(position, format!("number {text:?} is too large")))
}

/// Reads a Cayley table from CSV and validates it.
pub fn load_table(path: &Path) -> Result<FiniteGroup> {
    let context = format!("reading table {}", path.display());
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_path(path)
        .map_err(|e| Error::io(&context, e))?;
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::io(&context, e))?;
        let row = record
            .iter()
            .enumerate()
            .map(|(j, field)| {
                field.parse::<usize>().map_err(|_| Error::Io {
                    context: context.clone(),
                    message: format!(
                        "row {i}, column {j}: {field:?} is not a non-negative integer"
                    ),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    make_from_table(&rows)
}
