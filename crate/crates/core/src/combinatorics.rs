//! Exact factorials, binomials and powers over `BigInt`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(a, b)`, zero whenever `b < 0`, `a < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Memoized `0!, 1!, ...` within one formula evaluation.
#[derive(Debug, Clone)]
pub struct Factorials {
    table: Vec<BigInt>,
}

impl Default for Factorials {
    fn default() -> Self {
        Factorials {
            table: vec![BigInt::one()],
        }
    }
}

impl Factorials {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, k: usize) -> &BigInt {
        while self.table.len() <= k {
            let next = self.table.last().unwrap() * self.table.len();
            self.table.push(next);
        }
        &self.table[k]
    }
}

pub fn factorial(k: usize) -> BigInt {
    Factorials::new().get(k).clone()
}

/// Memoized powers of a fixed base.
#[derive(Debug, Clone)]
pub struct Powers {
    table: Vec<BigInt>,
    base: BigInt,
}

impl Powers {
    pub fn new(base: impl Into<BigInt>) -> Self {
        Powers {
            table: vec![BigInt::one()],
            base: base.into(),
        }
    }

    pub fn get(&mut self, k: usize) -> &BigInt {
        while self.table.len() <= k {
            let next = self.table.last().unwrap() * &self.base;
            self.table.push(next);
        }
        &self.table[k]
    }
}

/// `(-1)^k` as a sign.
pub fn alternating(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
