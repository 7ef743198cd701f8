//! Exact permanents: Ryser's inclusion-exclusion (ground truth), a plain
//! minor expansion (second oracle), and closed-form sums for
//! clique-plus-vertex graphs, strong power graphs of cyclic groups and
//! complete graphs.
//!
//! The closed forms are evaluated term by term as written. Where one
//! disagrees with Ryser the verify harness reports it; nothing here is
//! adjusted to make them match.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::combinatorics::{alternating, binomial, Factorials, Powers};
use crate::error::{Error, Result};
use crate::group::euler_phi;
use crate::linalg::IntMatrix;

/// Alias for the arbitrary-precision counts returned throughout the crate.
pub type BigCount = BigInt;

pub const RYSER_LIMIT: usize = 24;
pub const EXPANSION_LIMIT: usize = 10;

/// Ryser's formula with Gray-code column updates:
/// `per(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij`.
pub fn permanent_ryser(m: &IntMatrix) -> Result<BigCount> {
    let n = m.order();
    if n > RYSER_LIMIT {
        return Err(Error::TooLarge {
            operation: "permanent_ryser",
            size: n,
            limit: RYSER_LIMIT,
        });
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    match m.to_i64_rows() {
        Some(rows)
            if rows
                .iter()
                .flatten()
                .all(|v| v.unsigned_abs() < (1u64 << 40)) =>
        {
            Ok(ryser_small(&rows))
        }
        _ => Ok(ryser_big(m)),
    }
}

/// Row sums stay in `i64`; each product is formed in `i128` and promoted to
/// `BigInt` only on overflow.
fn ryser_small(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut sums = vec![0i64; n];
    let mut acc: i128 = 0;
    let mut spill = BigInt::zero();
    for k in 1u64..(1u64 << n) {
        let col = k.trailing_zeros() as usize;
        let gray = k ^ (k >> 1);
        let added = (gray >> col) & 1 == 1;
        for (s, row) in sums.iter_mut().zip(rows) {
            if added {
                *s += row[col];
            } else {
                *s -= row[col];
            }
        }
        let negative = gray.count_ones() % 2 == 1;
        let mut prod: Option<i128> = Some(1);
        for &s in &sums {
            prod = prod.and_then(|p| p.checked_mul(s as i128));
            if prod == Some(0) {
                break;
            }
        }
        match prod {
            Some(0) => {}
            Some(p) => {
                let term = if negative { -p } else { p };
                match acc.checked_add(term) {
                    Some(v) => acc = v,
                    None => {
                        spill += acc;
                        acc = term;
                    }
                }
            }
            None => {
                let p: BigInt = sums.iter().map(|&s| BigInt::from(s)).product();
                if negative {
                    spill -= p;
                } else {
                    spill += p;
                }
            }
        }
    }
    let total = spill + acc;
    if n % 2 == 1 {
        -total
    } else {
        total
    }
}

fn ryser_big(m: &IntMatrix) -> BigInt {
    let n = m.order();
    let mut sums = vec![BigInt::zero(); n];
    let mut total = BigInt::zero();
    for k in 1u64..(1u64 << n) {
        let col = k.trailing_zeros() as usize;
        let gray = k ^ (k >> 1);
        let added = (gray >> col) & 1 == 1;
        for (i, s) in sums.iter_mut().enumerate() {
            if added {
                *s += m.get(i, col);
            } else {
                *s -= m.get(i, col);
            }
        }
        let p: BigInt = sums.iter().product();
        if gray.count_ones() % 2 == 1 {
            total -= p;
        } else {
            total += p;
        }
    }
    if n % 2 == 1 {
        -total
    } else {
        total
    }
}

/// Expansion along the first row with no sign alternation.
pub fn permanent_expansion(m: &IntMatrix) -> Result<BigCount> {
    let n = m.order();
    if n > EXPANSION_LIMIT {
        return Err(Error::TooLarge {
            operation: "permanent_expansion",
            size: n,
            limit: EXPANSION_LIMIT,
        });
    }
    fn rec(m: &IntMatrix, row: usize, free_cols: u32) -> BigInt {
        if row == m.order() {
            return BigInt::from(1);
        }
        let mut acc = BigInt::zero();
        let mut cols = free_cols;
        while cols != 0 {
            let c = cols.trailing_zeros() as usize;
            cols &= cols - 1;
            let a = m.get(row, c);
            if !a.is_zero() {
                acc += a * rec(m, row + 1, free_cols & !(1 << c));
            }
        }
        acc
    }
    Ok(rec(m, 0, ((1u64 << n) - 1) as u32))
}

/// Shape of a clique-plus-vertex graph: `m + n` clique vertices, of which
/// the last `n` are also joined to one extra vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueParams {
    /// Clique vertices not adjacent to the extra vertex.
    pub m: usize,
    /// Clique vertices adjacent to the extra vertex.
    pub n: usize,
}

impl CliqueParams {
    pub fn new(m: usize, n: usize) -> Self {
        CliqueParams { m, n }
    }

    /// Parameters of the strong power graph of the cyclic group of order
    /// `order`: generators miss the identity, non-generators hit it.
    pub fn for_cyclic(order: usize) -> Self {
        assert!(order >= 1);
        let phi = euler_phi(order as u64) as usize;
        CliqueParams {
            m: phi,
            n: order - phi - 1,
        }
    }

    /// `d = m + n - 1`: the clique degree of a vertex missing the extra one.
    pub fn d(&self) -> i64 {
        self.m as i64 + self.n as i64 - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.m + self.n + 1
    }
}

/// Adjacency permanent of a clique-plus-vertex graph:
/// `n * sum_{r=1}^{m+n} (-1)^(r-1) (m+n-r)! [C(m+n-1, r-1) + (n-1) C(m+n-2, r-1)]`.
pub fn clique_plus_vertex_adjacency_permanent(p: CliqueParams) -> BigCount {
    let (m, n) = (p.m as i64, p.n as i64);
    let k = m + n;
    let mut fact = Factorials::new();
    let mut sum = BigInt::zero();
    for r in 1..=k {
        let inner = binomial(k - 1, r - 1) + BigInt::from(n - 1) * binomial(k - 2, r - 1);
        sum += alternating(r - 1) * fact.get((k - r) as usize) * inner;
    }
    BigInt::from(n) * sum
}

/// Adjacency permanent of the strong power graph of the cyclic group of
/// order `order`, written directly in `N` and `phi(N)`:
/// `(N-phi-1) sum_{r=1}^{N-1} (-1)^(r-1) (N-1-r)! [C(N-2, r-1) + (N-2-phi) C(N-3, r-1)]`.
pub fn adjacency_permanent_formula(order: usize) -> BigCount {
    let big_n = order as i64;
    let phi = euler_phi(order as u64) as i64;
    let mut fact = Factorials::new();
    let mut sum = BigInt::zero();
    for r in 1..=(big_n - 1) {
        let inner =
            binomial(big_n - 2, r - 1) + BigInt::from(big_n - 2 - phi) * binomial(big_n - 3, r - 1);
        sum += alternating(r - 1) * fact.get((big_n - 1 - r) as usize) * inner;
    }
    BigInt::from(big_n - phi - 1) * sum
}

/// `sum_{i+j=r-1} C(m,i) (d+2)^j (d+1)^i * weight(j)`.
fn weighted_inner_sum(
    p: CliqueParams,
    r: i64,
    hi: &mut Powers,
    lo: &mut Powers,
    mut weight: impl FnMut(i64) -> BigInt,
) -> BigInt {
    let m = p.m as i64;
    let mut acc = BigInt::zero();
    for i in 0..r {
        let j = r - 1 - i;
        let c = binomial(m, i);
        if c.is_zero() {
            continue;
        }
        let w = weight(j);
        if w.is_zero() {
            continue;
        }
        acc += c * hi.get(j as usize) * lo.get(i as usize) * w;
    }
    acc
}

/// `(d-m+1) sum_{i+j=m+n} C(m,i) C(n,j) (d+2)^j (d+1)^i`.
fn trailing_term(p: CliqueParams, hi: &mut Powers, lo: &mut Powers) -> BigInt {
    let (m, n) = (p.m as i64, p.n as i64);
    let d = p.d();
    let mut acc = BigInt::zero();
    for i in 0..=(m + n) {
        let j = m + n - i;
        let c = binomial(m, i) * binomial(n, j);
        if !c.is_zero() {
            acc += c * hi.get(j as usize) * lo.get(i as usize);
        }
    }
    BigInt::from(d - m + 1) * acc
}

/// Laplacian permanent of a clique-plus-vertex graph, full form:
///
/// `sum_{r=1}^{m+n} (-1)^(m+n-r) (m+n-r)! F_r + (d-m+1) sum_{i+j=m+n} C(m,i) C(n,j) (d+2)^j (d+1)^i`
///
/// with `F_r = sum_{i+j=r-1} C(m,i) (d+2)^j (d+1)^i [n C(n-1,j) + n(n-1) C(n-2,j) - (d-m+1)(m+n-r+1) C(n,j)]`.
pub fn clique_plus_vertex_laplacian_permanent(p: CliqueParams) -> BigCount {
    let (m, n) = (p.m as i64, p.n as i64);
    let d = p.d();
    let k = m + n;
    let mut hi = Powers::new(d + 2);
    let mut lo = Powers::new(d + 1);
    let mut fact = Factorials::new();
    let mut sum = BigInt::zero();
    for r in 1..=k {
        let f_r = weighted_inner_sum(p, r, &mut hi, &mut lo, |j| {
            BigInt::from(n) * binomial(n - 1, j) + BigInt::from(n * (n - 1)) * binomial(n - 2, j)
                - BigInt::from((d - m + 1) * (k - r + 1)) * binomial(n, j)
        });
        sum += alternating(k - r) * fact.get((k - r) as usize) * f_r;
    }
    sum + trailing_term(p, &mut hi, &mut lo)
}

/// Compact form of the same sum, `sum_{r=1}^{m+n} (m+n-r)! F_r` with
/// `F_r = sum_{i+j=r-1} C(m,i) (d+2)^j (d+1)^i [n C(n-1,j) + n(n-1) C(n-2,j) +
/// (-1)^(m+n-r+1) (d-m+1)(m+n-r+1) C(n,j)]`. This does not equal the
/// permanent in general (it gives -2 for `m = 2, n = 1`, where the
/// permanent is 22); it is kept so the verify harness can report it.
pub fn clique_plus_vertex_laplacian_permanent_stated(p: CliqueParams) -> BigCount {
    let (m, n) = (p.m as i64, p.n as i64);
    let d = p.d();
    let k = m + n;
    let mut hi = Powers::new(d + 2);
    let mut lo = Powers::new(d + 1);
    let mut fact = Factorials::new();
    let mut sum = BigInt::zero();
    for r in 1..=k {
        let f_r = weighted_inner_sum(p, r, &mut hi, &mut lo, |j| {
            BigInt::from(n) * binomial(n - 1, j)
                + BigInt::from(n * (n - 1)) * binomial(n - 2, j)
                + BigInt::from(alternating(k - r + 1) * (d - m + 1) * (k - r + 1)) * binomial(n, j)
        });
        sum += fact.get((k - r) as usize) * f_r;
    }
    sum
}

/// Laplacian permanent of the strong power graph of the cyclic group of
/// order `N`, written directly in `N` and `phi = phi(N)` with `k = N-phi-1`:
///
/// `sum_{r=1}^{N-1} (-1)^(N-r-1) (N-r-1)! F_r + k sum_{i+j=N-1} C(phi,i) C(k,j) N^j (N-1)^i`
///
/// with `F_r = sum_{i+j=r-1} C(phi,i) N^j (N-1)^i [k C(k-1,j) + k(k-1) C(k-2,j) - k(N-r) C(k,j)]`.
pub fn laplacian_permanent_formula(order: usize) -> BigCount {
    let big_n = order as i64;
    let phi = euler_phi(order as u64) as i64;
    let k = big_n - phi - 1;
    let mut pow_n = Powers::new(big_n);
    let mut pow_n1 = Powers::new(big_n - 1);
    let mut fact = Factorials::new();
    let mut sum = BigInt::zero();
    for r in 1..=(big_n - 1) {
        let mut f_r = BigInt::zero();
        for i in 0..r {
            let j = r - 1 - i;
            let c = binomial(phi, i);
            if c.is_zero() {
                continue;
            }
            let bracket = BigInt::from(k) * binomial(k - 1, j)
                + BigInt::from(k * (k - 1)) * binomial(k - 2, j)
                - BigInt::from(k * (big_n - r)) * binomial(k, j);
            f_r += c * pow_n.get(j as usize) * pow_n1.get(i as usize) * bracket;
        }
        sum += alternating(big_n - r - 1) * fact.get((big_n - r - 1) as usize) * f_r;
    }
    let mut tail = BigInt::zero();
    for i in 0..=(big_n - 1) {
        let j = big_n - 1 - i;
        let c = binomial(phi, i) * binomial(k, j);
        if !c.is_zero() {
            tail += c * pow_n.get(j as usize) * pow_n1.get(i as usize);
        }
    }
    sum + BigInt::from(k) * tail
}

/// `(-1)^n n! (1 - n/1! + n^2/2! - ... + (-1)^n n^n/n!)`, evaluated over the
/// common denominator `n!` so every term is an integer.
pub fn complete_graph_laplacian_permanent(n: usize) -> BigCount {
    let mut fact = Factorials::new();
    let n_fact = fact.get(n).clone();
    let mut pow = Powers::new(n);
    let mut sum = BigInt::zero();
    for k in 0..=n {
        let term = pow.get(k) * (&n_fact / fact.get(k));
        sum += alternating(k as i64) * term;
    }
    alternating(n as i64) * sum
}

/// Convenience for callers holding small permanents.
pub fn to_i128(v: &BigCount) -> Option<i128> {
    v.to_i128()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{clique_plus_vertex, complete_graph, strong_power_graph};
    use crate::group::make_cyclic;
    use crate::spectral::{adjacency, laplacian};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn ryser_basics() {
        assert_eq!(permanent_ryser(&IntMatrix::identity(3)).unwrap(), big(1));
        let ones = IntMatrix::from_fn(4, |_, _| big(1));
        assert_eq!(permanent_ryser(&ones).unwrap(), big(24));
        let z4 = strong_power_graph(&make_cyclic(4).unwrap());
        assert_eq!(permanent_ryser(&adjacency(&z4)).unwrap(), big(1));
        assert_eq!(permanent_ryser(&laplacian(&z4)).unwrap(), big(22));
        assert_eq!(permanent_ryser(&IntMatrix::zeros(0)).unwrap(), big(1));
    }

    #[test]
    fn ryser_big_path_matches_small_path() {
        let m = IntMatrix::from_rows(&[vec![3, -1, 2], vec![0, 5, -4], vec![7, 1, 1]]).unwrap();
        let rows = m.to_i64_rows().unwrap();
        assert_eq!(ryser_small(&rows), ryser_big(&m));
        assert_eq!(ryser_big(&m), permanent_expansion(&m).unwrap());
        // Entries beyond the small-path bound.
        let huge = IntMatrix::from_fn(3, |i, j| big(1 << 50) + big((i * 3 + j) as i64));
        assert_eq!(
            permanent_ryser(&huge).unwrap(),
            permanent_expansion(&huge).unwrap()
        );
    }

    #[test]
    fn expansion_examples() {
        let z4 = strong_power_graph(&make_cyclic(4).unwrap());
        assert_eq!(permanent_expansion(&laplacian(&z4)).unwrap(), big(22));
        assert_eq!(
            permanent_expansion(&laplacian(&complete_graph(2))).unwrap(),
            big(2)
        );
        assert_eq!(permanent_expansion(&IntMatrix::zeros(2)).unwrap(), big(0));
        assert!(permanent_expansion(&IntMatrix::zeros(11)).is_err());
        assert!(permanent_ryser(&IntMatrix::zeros(25)).is_err());
    }

    #[test]
    fn adjacency_closed_forms() {
        assert_eq!(
            clique_plus_vertex_adjacency_permanent(CliqueParams::new(2, 1)),
            big(1)
        );
        assert_eq!(
            clique_plus_vertex_adjacency_permanent(CliqueParams::new(4, 0)),
            big(0)
        );
        assert_eq!(
            clique_plus_vertex_adjacency_permanent(CliqueParams::new(0, 2)),
            big(2)
        );
        assert_eq!(adjacency_permanent_formula(4), big(1));
        assert_eq!(adjacency_permanent_formula(7), big(0));
        let z6 = strong_power_graph(&make_cyclic(6).unwrap());
        assert_eq!(
            adjacency_permanent_formula(6),
            permanent_ryser(&adjacency(&z6)).unwrap()
        );
    }

    #[test]
    fn cyclic_formula_specializes_full_form() {
        for order in 2..40 {
            assert_eq!(
                adjacency_permanent_formula(order),
                clique_plus_vertex_adjacency_permanent(CliqueParams::for_cyclic(order)),
                "order {order}"
            );
        }
    }

    #[test]
    fn laplacian_closed_form_edge_cases() {
        assert_eq!(laplacian_permanent_formula(2), big(0));
        assert_eq!(
            clique_plus_vertex_laplacian_permanent(CliqueParams::new(1, 0)),
            big(0)
        );
        assert_eq!(
            clique_plus_vertex_laplacian_permanent(CliqueParams::new(0, 0)),
            big(0)
        );
        assert_eq!(
            permanent_ryser(&laplacian(&clique_plus_vertex(1, 0))).unwrap(),
            big(0)
        );
    }

    #[test]
    fn complete_graph_closed_form() {
        assert_eq!(complete_graph_laplacian_permanent(1), big(0));
        assert_eq!(complete_graph_laplacian_permanent(2), big(2));
        assert_eq!(complete_graph_laplacian_permanent(4), big(120));
        for n in 1..=9 {
            assert_eq!(
                complete_graph_laplacian_permanent(n),
                permanent_ryser(&laplacian(&complete_graph(n))).unwrap(),
                "K_{n}"
            );
        }
    }

    #[test]
    fn clique_params() {
        let p = CliqueParams::for_cyclic(12);
        assert_eq!((p.m, p.n, p.d()), (4, 7, 10));
        assert_eq!(p.vertex_count(), 12);
    }
}
