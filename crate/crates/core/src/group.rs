//! Finite groups on the index set `[0, n)`.
//!
//! Cyclic groups are represented implicitly by modular addition so that they
//! can be arbitrarily large; every other group carries an explicit Cayley
//! table of at most [`MAX_TABLE_ORDER`] rows.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest order for which an explicit table is built.
pub const MAX_TABLE_ORDER: usize = 4096;

/// Up to this order associativity is checked on every triple.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 64;

const ASSOCIATIVITY_SEED: u64 = 0x5eed_9a11_0c1a_7e00;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic,
    Table,
}

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    Cyclic,
    Table {
        /// Row-major `n * n` table; entry `i * n + j` is `i * j`.
        table: Vec<u32>,
        identity: usize,
        inverse: Vec<u32>,
    },
}

/// An immutable finite group of order `n` whose elements are `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    repr: Repr,
}

/// Knobs for validating user-supplied Cayley tables.
#[derive(Debug, Clone, Copy, Default)]
pub struct TableValidation {
    /// Check associativity on all `n^3` triples even above
    /// [`EXHAUSTIVE_ASSOCIATIVITY_LIMIT`].
    pub force_exhaustive: bool,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.n)
            .field("kind", &self.kind())
            .field("identity", &self.identity())
            .finish()
    }
}

/// The additive group of residues modulo `n`.
pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    Ok(FiniteGroup {
        n,
        repr: Repr::Cyclic,
    })
}

/// Validates `rows` as a Cayley table and builds the group it describes.
pub fn make_from_table(rows: &[Vec<usize>]) -> Result<FiniteGroup> {
    make_from_table_with(rows, TableValidation::default())
}

pub fn make_from_table_with(rows: &[Vec<usize>], opts: TableValidation) -> Result<FiniteGroup> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if n > MAX_TABLE_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: MAX_TABLE_ORDER,
        });
    }
    let mut table = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare {
                row: i,
                len: row.len(),
                expected: n,
            });
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::EntryOutOfRange {
                    row: i,
                    col: j,
                    value: v,
                    order: n,
                });
            }
            table.push(v as u32);
        }
    }
    check_latin(&table, n)?;

    let at = |i: usize, j: usize| table[i * n + j] as usize;
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
        .ok_or(Error::NoIdentity)?;

    let mut inverse = vec![0u32; n];
    #[allow(clippy::needless_range_loop)]
    for x in 0..n {
        // Latin rows guarantee exactly one right inverse.
        let y = (0..n).find(|&y| at(x, y) == identity).unwrap();
        if at(y, x) != identity {
            return Err(Error::MissingInverse(x));
        }
        inverse[x] = y as u32;
    }

    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT || opts.force_exhaustive {
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NonAssociative { a, b, c });
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(ASSOCIATIVITY_SEED);
        for _ in 0..10 * n * n {
            let (a, b, c) = (
                rng.random_range(0..n),
                rng.random_range(0..n),
                rng.random_range(0..n),
            );
            if at(at(a, b), c) != at(a, at(b, c)) {
                return Err(Error::NonAssociative { a, b, c });
            }
        }
    }

    Ok(FiniteGroup {
        n,
        repr: Repr::Table {
            table,
            identity,
            inverse,
        },
    })
}

fn check_latin(table: &[u32], n: usize) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for i in 0..n {
        for j in 0..n {
            let v = table[i * n + j] as usize;
            if seen[v] == i {
                return Err(Error::NotLatinSquare {
                    line: "row",
                    index: i,
                    value: v,
                });
            }
            seen[v] = i;
        }
    }
    seen.fill(usize::MAX);
    for j in 0..n {
        for i in 0..n {
            let v = table[i * n + j] as usize;
            if seen[v] == j {
                return Err(Error::NotLatinSquare {
                    line: "column",
                    index: j,
                    value: v,
                });
            }
            seen[v] = j;
        }
    }
    Ok(())
}

/// Builds a group from a trusted operation; used by the internal constructors.
fn from_operation(n: usize, identity: usize, op: impl Fn(usize, usize) -> usize) -> FiniteGroup {
    let mut table = Vec::with_capacity(n * n);
    let mut inverse = vec![0u32; n];
    for (a, inv) in inverse.iter_mut().enumerate() {
        for b in 0..n {
            let c = op(a, b);
            if c == identity {
                *inv = b as u32;
            }
            table.push(c as u32);
        }
    }
    FiniteGroup {
        n,
        repr: Repr::Table {
            table,
            identity,
            inverse,
        },
    }
}

/// Klein four-group: bitwise xor on `{0, 1, 2, 3}`.
pub fn make_klein() -> FiniteGroup {
    from_operation(4, 0, |a, b| a ^ b)
}

/// Dihedral group of order `2k`. Element `i + k*j` stands for `r^i s^j`.
pub fn make_dihedral(k: usize) -> Result<FiniteGroup> {
    if k == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if 2 * k > MAX_TABLE_ORDER {
        return Err(Error::OrderTooLarge {
            order: 2 * k,
            limit: MAX_TABLE_ORDER,
        });
    }
    Ok(from_operation(2 * k, 0, |x, y| {
        let (i, a) = (x % k, x / k);
        let (j, b) = (y % k, y / k);
        // s r^j = r^{-j} s
        let rot = if a == 0 { (i + j) % k } else { (i + k - j) % k };
        rot + k * ((a + b) % 2)
    }))
}

pub const MAX_SYMMETRIC_DEGREE: usize = 5;

/// Symmetric group on `k` points; permutations are indexed in lexicographic
/// order so the identity is element 0. Composition is `(p*q)(x) = p(q(x))`.
pub fn make_symmetric(k: usize) -> Result<FiniteGroup> {
    if k == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if k > MAX_SYMMETRIC_DEGREE {
        return Err(Error::OrderTooLarge {
            order: (1..=k).product(),
            limit: 120,
        });
    }
    let perms = lexicographic_permutations(k);
    let index: HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let n = perms.len();
    Ok(from_operation(n, 0, |a, b| {
        let composed: Vec<usize> = (0..k).map(|x| perms[a][perms[b][x]]).collect();
        index[composed.as_slice()]
    }))
}

fn lexicographic_permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

/// Direct product `a x b`; the pair `(x, y)` is element `x * |b| + y`.
pub fn make_direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let n = a.order() * b.order();
    if n > MAX_TABLE_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: MAX_TABLE_ORDER,
        });
    }
    let nb = b.order();
    let identity = a.identity() * nb + b.identity();
    Ok(from_operation(n, identity, |x, y| {
        a.op(x / nb, y / nb) * nb + b.op(x % nb, y % nb)
    }))
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GroupKind {
        match self.repr {
            Repr::Cyclic => GroupKind::Cyclic,
            Repr::Table { .. } => GroupKind::Table,
        }
    }

    pub fn identity(&self) -> usize {
        match &self.repr {
            Repr::Cyclic => 0,
            Repr::Table { identity, .. } => *identity,
        }
    }

    fn check(&self, x: usize) {
        assert!(
            x < self.n,
            "element index {x} out of range for group of order {}",
            self.n
        );
    }

    /// The group operation `a * b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.check(a);
        self.check(b);
        match &self.repr {
            Repr::Cyclic => {
                let s = a + b;
                if s >= self.n {
                    s - self.n
                } else {
                    s
                }
            }
            Repr::Table { table, .. } => table[a * self.n + b] as usize,
        }
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.check(x);
        match &self.repr {
            Repr::Cyclic => (self.n - x) % self.n,
            Repr::Table { inverse, .. } => inverse[x] as usize,
        }
    }

    /// `x^m` for `m >= 0`.
    pub fn pow(&self, x: usize, m: usize) -> usize {
        self.check(x);
        match &self.repr {
            Repr::Cyclic => ((x as u128 * m as u128) % self.n as u128) as usize,
            Repr::Table { .. } => {
                let mut acc = self.identity();
                let mut base = x;
                let mut e = m;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = self.op(acc, base);
                    }
                    base = self.op(base, base);
                    e >>= 1;
                }
                acc
            }
        }
    }

    /// Least `m >= 1` with `x^m = e`.
    pub fn element_order(&self, x: usize) -> usize {
        self.check(x);
        match &self.repr {
            Repr::Cyclic => self.n / x.gcd(&self.n),
            Repr::Table { .. } => {
                let e = self.identity();
                let mut y = x;
                let mut m = 1;
                while y != e {
                    y = self.op(y, x);
                    m += 1;
                }
                m
            }
        }
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.n).map(|x| self.element_order(x)).collect()
    }

    pub fn is_cyclic(&self) -> bool {
        match self.repr {
            Repr::Cyclic => true,
            Repr::Table { .. } => (0..self.n).any(|x| self.element_order(x) == self.n),
        }
    }

    /// Elements of order `n`, ascending. Empty for noncyclic groups.
    pub fn generators(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| self.element_order(x) == self.n)
            .collect()
    }

    /// Rows of the Cayley table (materialized for cyclic groups too).
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.op(a, b)).collect())
            .collect()
    }
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi is defined for n >= 1");
    let mut rest = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && euler_phi(n) == n - 1
}
