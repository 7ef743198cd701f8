//! Laplacian spectra of strong power graphs.
//!
//! Two routes are kept apart on purpose: closed forms in `n` and `phi(n)`,
//! and quantities measured on the constructed matrix (exact characteristic
//! polynomial, Kirchhoff minors, a floating-point eigensolver). Derived
//! invariants are computed from an [`ExactSpectrum`]; the closed-form
//! versions live in their own functions so the two can be compared.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::euler_phi;
use crate::linalg::{char_poly_exact, determinant, CharPoly, IntMatrix, CHAR_POLY_LIMIT};

pub const KIRCHHOFF_LIMIT: usize = 64;

/// Default relative tolerance for [`eigenvalues_numeric`].
pub const DEFAULT_EIGEN_TOL: f64 = 1e-9;

pub fn laplacian(g: &Graph) -> IntMatrix {
    IntMatrix::from_fn(g.n(), |i, j| {
        if i == j {
            BigInt::from(g.degree(i))
        } else if g.has_edge(i, j) {
            -BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

pub fn adjacency(g: &Graph) -> IntMatrix {
    IntMatrix::from_fn(g.n(), |i, j| {
        if g.has_edge(i, j) {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// Multiset of integer eigenvalues, stored as `(eigenvalue, multiplicity)`
/// with eigenvalues strictly decreasing and no zero multiplicities.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ExactSpectrum {
    pairs: Vec<(i64, usize)>,
}

impl ExactSpectrum {
    /// Normalizes: drops empty entries, merges repeated eigenvalues and
    /// sorts descending.
    pub fn new(pairs: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let mut v: Vec<(i64, usize)> = pairs.into_iter().filter(|&(_, m)| m > 0).collect();
        v.sort_by_key(|&(lambda, _)| std::cmp::Reverse(lambda));
        let mut merged: Vec<(i64, usize)> = Vec::with_capacity(v.len());
        for (lambda, m) in v {
            match merged.last_mut() {
                Some(last) if last.0 == lambda => last.1 += m,
                _ => merged.push((lambda, m)),
            }
        }
        ExactSpectrum { pairs: merged }
    }

    pub fn from_eigenvalues(values: impl IntoIterator<Item = i64>) -> Self {
        Self::new(values.into_iter().map(|v| (v, 1)))
    }

    pub fn pairs(&self) -> &[(i64, usize)] {
        &self.pairs
    }

    /// Total multiplicity.
    pub fn order(&self) -> usize {
        self.pairs.iter().map(|p| p.1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Every eigenvalue repeated by multiplicity, ascending.
    pub fn ascending(&self) -> Vec<i64> {
        self.pairs
            .iter()
            .rev()
            .flat_map(|&(l, m)| std::iter::repeat_n(l, m))
            .collect()
    }

    pub fn multiplicity(&self, lambda: i64) -> usize {
        self.pairs.iter().find(|p| p.0 == lambda).map_or(0, |p| p.1)
    }

    pub fn trace(&self) -> BigInt {
        self.pairs.iter().map(|&(l, m)| BigInt::from(l) * m).sum()
    }

    pub fn char_poly(&self) -> CharPoly {
        let roots: Vec<(BigInt, usize)> = self
            .pairs
            .iter()
            .map(|&(l, m)| (BigInt::from(l), m))
            .collect();
        CharPoly::from_roots(roots.iter().map(|(r, m)| (r, *m)))
    }

    /// `[[eigenvalue, multiplicity], ...]`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.pairs).expect("spectrum serialization cannot fail")
    }
}

impl fmt::Display for ExactSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(l, m)| format!("{l}^{m}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for ExactSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactSpectrum({self})")
    }
}

fn phi(n: usize) -> i64 {
    euler_phi(n as u64) as i64
}

/// Laplacian spectrum of the strong power graph of a group of order `n`.
///
/// Cyclic: `0^1, n^(n-phi-1), (n-phi-1)^1, (n-1)^(phi-1)`.
/// Noncyclic: `0^1, n^(n-1)`.
pub fn closed_form_spectrum(n: usize, cyclic: bool) -> ExactSpectrum {
    if n <= 1 {
        return ExactSpectrum::new([(0, 1)]);
    }
    let ni = n as i64;
    if cyclic {
        let p = phi(n);
        let k = ni - p - 1;
        ExactSpectrum::new([(0, 1), (ni, k as usize), (k, 1), (ni - 1, (p - 1) as usize)])
    } else {
        ExactSpectrum::new([(0, 1), (ni, n - 1)])
    }
}

/// `x (x-n)^(n-phi-1) (x-n+phi+1) (x-n+1)^(phi-1)` expanded, for the
/// cyclic group of order `n`.
pub fn closed_form_char_poly(n: usize) -> CharPoly {
    if n <= 1 {
        return CharPoly::from_roots([(&BigInt::zero(), 1)]);
    }
    let ni = n as i64;
    let p = phi(n);
    let factors = [
        (BigInt::zero(), 1usize),
        (BigInt::from(ni), (ni - p - 1) as usize),
        (BigInt::from(ni - p - 1), 1),
        (BigInt::from(ni - 1), (p - 1) as usize),
    ];
    CharPoly::from_roots(factors.iter().map(|(r, m)| (r, *m)))
}

/// `x (x-n)^(n-1)`: the complete-graph case.
pub fn noncyclic_char_poly(n: usize) -> CharPoly {
    let factors = [
        (BigInt::zero(), 1usize),
        (BigInt::from(n), n.saturating_sub(1)),
    ];
    CharPoly::from_roots(factors.iter().map(|(r, m)| (r, *m)))
}

/// All eigenvalues of a symmetric integer matrix, ascending.
pub fn eigenvalues_numeric(m: &IntMatrix, tol: f64) -> Result<Vec<f64>> {
    m.check_symmetric()?;
    if m.order() == 0 {
        return Ok(Vec::new());
    }
    let eig = nalgebra::SymmetricEigen::try_new(m.to_f64(), tol, 0).ok_or(Error::NoConvergence)?;
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Exact spectrum of a symmetric integer matrix whose eigenvalues are all
/// integers: numeric eigenvalues are rounded and the result is accepted only
/// if its polynomial equals the exact characteristic polynomial. `None`
/// when some eigenvalue is not an integer.
pub fn integer_spectrum(m: &IntMatrix) -> Result<Option<ExactSpectrum>> {
    if m.order() > CHAR_POLY_LIMIT {
        return Err(Error::TooLarge {
            operation: "integer_spectrum",
            size: m.order(),
            limit: CHAR_POLY_LIMIT,
        });
    }
    let values = eigenvalues_numeric(m, DEFAULT_EIGEN_TOL)?;
    let candidate = ExactSpectrum::from_eigenvalues(values.iter().map(|v| v.round() as i64));
    let exact = char_poly_exact(m)?;
    Ok((candidate.char_poly() == exact).then_some(candidate))
}

/// Second-smallest eigenvalue counting multiplicity (0 for a single vertex).
pub fn algebraic_connectivity(s: &ExactSpectrum) -> Result<i64> {
    let asc = s.ascending();
    match asc.len() {
        0 => Err(Error::EmptySpectrum),
        1 => Ok(0),
        _ => Ok(asc[1]),
    }
}

/// Closed-form spanning-tree count of the strong power graph.
///
/// Cyclic: `n^(n-phi-2) (n-phi-1) (n-1)^(phi-1)`; noncyclic: `n^(n-2)`.
pub fn spanning_tree_count_formula(n: usize, cyclic: bool) -> BigInt {
    if n <= 1 {
        return BigInt::one();
    }
    let nb = BigInt::from(n);
    if cyclic {
        let p = phi(n) as usize;
        let k = n - p - 1;
        if k == 0 {
            // The n^(n-phi-2) exponent is negative exactly when this factor vanishes.
            return BigInt::zero();
        }
        num_traits::pow(nb.clone(), k - 1)
            * BigInt::from(k)
            * num_traits::pow(BigInt::from(n - 1), p - 1)
    } else {
        num_traits::pow(nb, n - 2)
    }
}

/// Matrix-tree theorem: determinant of the Laplacian with row and column 0
/// removed.
pub fn spanning_tree_count_kirchhoff(g: &Graph) -> Result<BigInt> {
    let n = g.n();
    if n > KIRCHHOFF_LIMIT {
        return Err(Error::TooLarge {
            operation: "spanning_tree_count_kirchhoff",
            size: n,
            limit: KIRCHHOFF_LIMIT,
        });
    }
    if n == 0 {
        return Ok(BigInt::zero());
    }
    Ok(determinant(&laplacian(g).minor(0, 0)))
}

/// Product of the `n - 1` largest eigenvalues divided by `n`.
pub fn spanning_tree_count_from_spectrum(s: &ExactSpectrum) -> Result<BigInt> {
    let asc = s.ascending();
    if asc.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let product: BigInt = asc[1..].iter().map(|&l| BigInt::from(l)).product();
    Ok(product / asc.len())
}

/// `sum |lambda_i - 2m/n|` in exact rational arithmetic.
pub fn laplacian_energy_from_spectrum(
    s: &ExactSpectrum,
    edge_count: usize,
    n: usize,
) -> Result<BigRational> {
    if s.order() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: s.order(),
        });
    }
    if n == 0 {
        return Err(Error::EmptySpectrum);
    }
    let mean = BigRational::new(BigInt::from(2 * edge_count), BigInt::from(n));
    Ok(s.pairs()
        .iter()
        .map(|&(l, m)| (BigRational::from_integer(BigInt::from(l)) - &mean).abs() * BigInt::from(m))
        .fold(BigRational::zero(), |a, b| a + b))
}

/// Same definition over floating-point eigenvalues.
pub fn laplacian_energy_numeric(eigenvalues: &[f64], edge_count: usize) -> f64 {
    let mean = 2.0 * edge_count as f64 / eigenvalues.len() as f64;
    eigenvalues.iter().map(|l| (l - mean).abs()).sum()
}

/// The closed-form energy expression `2(n-1) - 4 phi(n)/n`
/// for cyclic groups, `2(n-1)` otherwise. For cyclic groups this does not
/// in general equal the energy of the graph; see the known-discrepancy list.
pub fn laplacian_energy_closed_form(n: usize, cyclic: bool) -> BigRational {
    let base = BigRational::from_integer(BigInt::from(2 * (n as i64 - 1)));
    if cyclic {
        base - BigRational::new(BigInt::from(4 * phi(n)), BigInt::from(n))
    } else {
        base
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, strong_power_graph};
    use crate::group::make_cyclic;

    fn ps_cyclic(n: usize) -> Graph {
        strong_power_graph(&make_cyclic(n).unwrap())
    }

    #[test]
    fn matrices() {
        let l = laplacian(&complete_graph(2));
        assert_eq!(
            l,
            IntMatrix::from_rows(&[vec![1, -1], vec![-1, 1]]).unwrap()
        );
        let l4 = laplacian(&ps_cyclic(4));
        let diag: Vec<BigInt> = (0..4).map(|i| l4.get(i, i).clone()).collect();
        assert_eq!(diag, [1, 2, 3, 2].map(BigInt::from).to_vec());
        for i in 0..4 {
            assert!(l4.row(i).iter().sum::<BigInt>().is_zero());
        }
        assert_eq!(adjacency(&Graph::empty(3)), IntMatrix::zeros(3));
    }

    #[test]
    fn closed_form_spectra() {
        assert_eq!(
            closed_form_spectrum(4, true).pairs(),
            &[(4, 1), (3, 1), (1, 1), (0, 1)]
        );
        assert_eq!(closed_form_spectrum(4, false).pairs(), &[(4, 3), (0, 1)]);
        assert_eq!(closed_form_spectrum(5, true).pairs(), &[(4, 3), (0, 2)]);
        assert_eq!(closed_form_spectrum(2, true).pairs(), &[(0, 2)]);
        assert_eq!(closed_form_spectrum(1, true).pairs(), &[(0, 1)]);
        for n in 1..200 {
            assert_eq!(closed_form_spectrum(n, true).order(), n);
        }
    }

    #[test]
    fn closed_form_polys() {
        assert_eq!(
            closed_form_char_poly(4).to_string(),
            "x^4 - 8x^3 + 19x^2 - 12x"
        );
        assert_eq!(closed_form_char_poly(2).to_string(), "x^2");
        assert_eq!(closed_form_char_poly(3).to_string(), "x^3 - 2x^2");
        assert_eq!(
            noncyclic_char_poly(4).to_string(),
            "x^4 - 12x^3 + 48x^2 - 64x"
        );
    }

    #[test]
    fn numeric_eigenvalues() {
        let e = eigenvalues_numeric(&laplacian(&complete_graph(3)), DEFAULT_EIGEN_TOL).unwrap();
        for (got, want) in e.iter().zip([0.0, 3.0, 3.0]) {
            assert!((got - want).abs() < 1e-9);
        }
        let e = eigenvalues_numeric(&laplacian(&ps_cyclic(4)), DEFAULT_EIGEN_TOL).unwrap();
        for (got, want) in e.iter().zip([0.0, 1.0, 3.0, 4.0]) {
            assert!((got - want).abs() < 1e-9);
        }
        assert_eq!(
            eigenvalues_numeric(&IntMatrix::zeros(3), DEFAULT_EIGEN_TOL).unwrap(),
            vec![0.0; 3]
        );
        let asym = IntMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert!(matches!(
            eigenvalues_numeric(&asym, DEFAULT_EIGEN_TOL),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn integer_spectrum_rejects_irrational() {
        // Path on 3 vertices has Laplacian eigenvalues 0, 1, 3.
        let p3 = crate::graph::path_graph(3);
        let s = integer_spectrum(&laplacian(&p3)).unwrap().unwrap();
        assert_eq!(s.pairs(), &[(3, 1), (1, 1), (0, 1)]);
        // Path on 4 vertices: 2 - 2cos(k pi / 4) is irrational for k = 1, 3.
        let p4 = crate::graph::path_graph(4);
        assert!(integer_spectrum(&laplacian(&p4)).unwrap().is_none());
    }

    #[test]
    fn derived_invariants() {
        let s6 = closed_form_spectrum(6, true);
        assert_eq!(algebraic_connectivity(&s6).unwrap(), 3);
        assert_eq!(
            algebraic_connectivity(&closed_form_spectrum(4, false)).unwrap(),
            4
        );
        assert_eq!(
            algebraic_connectivity(&closed_form_spectrum(5, true)).unwrap(),
            0
        );
        assert_eq!(
            algebraic_connectivity(&ExactSpectrum::default()),
            Err(Error::EmptySpectrum)
        );
    }

    #[test]
    fn spanning_trees() {
        assert_eq!(
            spanning_tree_count_kirchhoff(&ps_cyclic(4)).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(spanning_tree_count_formula(4, false), BigInt::from(16));
        assert_eq!(spanning_tree_count_formula(4, true), BigInt::from(3));
        assert_eq!(spanning_tree_count_formula(5, true), BigInt::zero());
        assert_eq!(spanning_tree_count_formula(2, true), BigInt::zero());
        assert_eq!(
            spanning_tree_count_from_spectrum(&closed_form_spectrum(4, true)).unwrap(),
            BigInt::from(3)
        );
        assert!(spanning_tree_count_kirchhoff(&complete_graph(65)).is_err());
    }

    #[test]
    fn energies() {
        let s4 = closed_form_spectrum(4, true);
        let le = laplacian_energy_from_spectrum(&s4, 4, 4).unwrap();
        assert_eq!(le, BigRational::from_integer(BigInt::from(6)));
        assert_eq!(
            laplacian_energy_closed_form(4, true),
            BigRational::from_integer(BigInt::from(4))
        );
        let k4 = closed_form_spectrum(4, false);
        assert_eq!(
            laplacian_energy_from_spectrum(&k4, 6, 4).unwrap(),
            BigRational::from_integer(BigInt::from(6))
        );
        assert!(matches!(
            laplacian_energy_from_spectrum(&k4, 6, 5),
            Err(Error::SizeMismatch { .. })
        ));
        assert_eq!(
            format_rational(&BigRational::new(BigInt::from(10), BigInt::from(4))),
            "5/2"
        );
    }

    #[test]
    fn spectrum_json() {
        assert_eq!(closed_form_spectrum(4, false).to_json(), "[[4,3],[0,1]]");
        assert_eq!(closed_form_spectrum(4, true).to_string(), "4^1 3^1 1^1 0^1");
    }
}
