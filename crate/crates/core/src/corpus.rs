//! A fixed list of small groups used by the verification sweeps.

use crate::error::Result;
use crate::group::FiniteGroup;
use crate::groupspec::GroupSpec;

/// Noncyclic groups of order at most 24.
const NONCYCLIC: &[&str] = &[
    "klein",
    "sym:3",
    "product:zn:2+zn:4",
    "product:zn:2+zn:2+zn:2",
    "dihedral:4",
    "product:zn:3+zn:3",
    "dihedral:5",
    "dihedral:6",
    "product:zn:2+zn:6",
    "product:klein+zn:3",
    "product:sym:3+zn:2",
    "dihedral:7",
    "dihedral:8",
    "product:zn:2+zn:8",
    "product:zn:4+zn:4",
    "product:zn:2+zn:2+zn:4",
    "product:zn:2+zn:2+zn:2+zn:2",
    "product:dihedral:4+zn:2",
    "dihedral:9",
    "product:zn:3+zn:6",
    "product:sym:3+zn:3",
    "dihedral:10",
    "product:zn:2+zn:10",
    "dihedral:11",
    "dihedral:12",
    "sym:4",
    "product:zn:2+zn:12",
    "product:zn:2+zn:2+zn:6",
];

/// Cyclic groups presented by tables rather than modular arithmetic.
const CYCLIC_TABLES: &[&str] = &[
    "product:zn:2+zn:3",
    "product:zn:2+zn:5",
    "product:zn:3+zn:4",
    "product:zn:4+zn:5",
    "product:zn:3+zn:8",
];

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub spec: GroupSpec,
    pub group: FiniteGroup,
}

fn build(list: &[&str], orders: impl Fn(usize) -> bool) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for text in list {
        let spec = GroupSpec::parse(text)?;
        if spec.order_hint().is_some_and(|n| !orders(n)) {
            continue;
        }
        let group = spec.build()?;
        out.push(CorpusEntry { spec, group });
    }
    out.sort_by_key(|e| e.group.order());
    Ok(out)
}

pub fn noncyclic_corpus(orders: impl Fn(usize) -> bool) -> Result<Vec<CorpusEntry>> {
    build(NONCYCLIC, orders)
}

/// Every corpus group whose order passes `orders`: the noncyclic list, the
/// table-backed cyclic groups, and `zn:n` for each admitted `n` up to 24.
pub fn corpus(orders: impl Fn(usize) -> bool + Copy) -> Result<Vec<CorpusEntry>> {
    let mut out = build(NONCYCLIC, orders)?;
    out.extend(build(CYCLIC_TABLES, orders)?);
    let plain: Vec<String> = (1..=24).map(|n| format!("zn:{n}")).collect();
    let plain: Vec<&str> = plain.iter().map(String::as_str).collect();
    out.extend(build(&plain, orders)?);
    out.sort_by_key(|e| e.group.order());
    Ok(out)
}
