//! Exact Fibonacci numbers over signed indices and the identities the
//! extremal arguments lean on.

use std::sync::{LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision nonnegative integer.
pub type BigNat = BigUint;

/// Indices below this are served from a shared table filled by simple
/// iteration; larger ones use fast doubling.
pub const TABLE_LIMIT: usize = 20_000;

static TABLE: LazyLock<RwLock<Vec<BigUint>>> = LazyLock::new(|| RwLock::new(vec![BigUint::zero(), BigUint::one()]));

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("identity requires 1 <= k <= n, got n={n}, k={k}")]
    Domain { n: i64, k: i64 },
    #[error("chain requires n >= 2, got {0}")]
    ChainTooShort(i64),
    #[error("chain for n={n} not strictly increasing at j={j}")]
    ChainViolation { n: i64, j: i64 },
}

/// `F_n` for `n >= 0`.
pub fn fib_nat(n: usize) -> BigUint {
    if n >= TABLE_LIMIT {
        return doubling(n).0;
    }
    {
        let table = TABLE.read().expect("fib table poisoned");
        if let Some(f) = table.get(n) {
            return f.clone();
        }
    }
    let mut table = TABLE.write().expect("fib table poisoned");
    while table.len() <= n {
        let len = table.len();
        let next = &table[len - 1] + &table[len - 2];
        table.push(next);
    }
    table[n].clone()
}

/// `(F_n, F_{n+1})` by fast doubling.
fn doubling(n: usize) -> (BigUint, BigUint) {
    if n == 0 {
        return (BigUint::zero(), BigUint::one());
    }
    let (a, b) = doubling(n / 2);
    // F_2k = F_k (2 F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2
    let c = &a * (&b + &b - &a);
    let d = &a * &a + &b * &b;
    if n % 2 == 0 {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

/// `F_n` for any signed `n`, using `F_{-n} = (-1)^{n+1} F_n`.
pub fn fib(n: i64) -> BigInt {
    let magnitude = BigInt::from(fib_nat(n.unsigned_abs() as usize));
    if n < 0 && n % 2 == 0 {
        -magnitude
    } else {
        magnitude
    }
}

/// Nonnegative-index shorthand used by the closed forms. Panics on a
/// negative index, which would mean a caller skipped its side conditions.
pub(crate) fn f(n: i64) -> BigUint {
    assert!(n >= 0, "negative Fibonacci index {n} in a closed form");
    fib_nat(n as usize)
}

/// `F_n = F_k F_{n-k+1} + F_{k-1} F_{n-k}` for `1 <= k <= n`.
pub fn check_splitting_identity(n: i64, k: i64) -> Result<bool, ArithError> {
    if !(1 <= k && k <= n) {
        return Err(ArithError::Domain { n, k });
    }
    let rhs = fib(k) * fib(n - k + 1) + fib(k - 1) * fib(n - k);
    Ok(fib(n) == rhs)
}

/// `F_m F_{n+1} - F_n F_{m+1} = (-1)^n F_{m-n}`, for any signed `m`, `n`.
pub fn check_cassini_like(m: i64, n: i64) -> bool {
    let lhs = fib(m) * fib(n + 1) - fib(n) * fib(m + 1);
    let rhs = fib(m - n);
    let rhs = if n.rem_euclid(2) == 1 { -rhs } else { rhs };
    lhs == rhs
}

/// Indices `j` of the products `F_j F_{n-j}` in increasing order of the
/// product: with `n = 4m + i` and `l = floor(i / 2)`, the even indices
/// `0, 2, ..., 2m` followed by the odd indices `2m - 1 + 2l, ..., 3, 1`.
pub fn product_chain_indices(n: usize) -> Vec<usize> {
    let m = n / 4;
    let l = (n % 4) / 2;
    let mut out: Vec<usize> = (0..=m).map(|t| 2 * t).collect();
    let top_odd = (2 * m + 2 * l).checked_sub(1);
    if let Some(top) = top_odd {
        out.extend((1..=top).rev().step_by(2));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLink {
    pub j: i64,
    pub complement: i64,
    pub product: BigInt,
}

/// The products `F_j F_{n-j}` in chain order, checked to be strictly
/// increasing.
pub fn fib_product_chain(n: i64) -> Result<Vec<ChainLink>, ArithError> {
    if n < 2 {
        return Err(ArithError::ChainTooShort(n));
    }
    let links: Vec<ChainLink> = product_chain_indices(n as usize)
        .into_iter()
        .map(|j| {
            let j = j as i64;
            ChainLink {
                j,
                complement: n - j,
                product: fib(j) * fib(n - j),
            }
        })
        .collect();
    for w in links.windows(2) {
        if w[0].product >= w[1].product {
            return Err(ArithError::ChainViolation { n, j: w[1].j });
        }
    }
    Ok(links)
}
