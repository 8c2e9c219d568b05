//! Formula-level comparisons among named families, valid for any order, and
//! the Fibonacci identity sweep.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::ordering::lollipop_classes;
use super::{require, CheckResult, VerifyError, Witness};
use crate::families::FamilySpec;
use crate::fib::{check_cassini_like, check_splitting_identity, fib, fib_nat, fib_product_chain, BigNat};
use crate::hosoya::hosoya;

/// Largest order accepted by [`verify_claims`].
pub const MAX_CLAIMS_ORDER: usize = 200;

/// Largest `max` accepted by [`verify_identities`].
pub const MAX_IDENTITY_RANGE: usize = 1000;

/// Evaluates specs by closed form and cross-checks each against the
/// computed index of the built graph.
struct Evaluator<'a> {
    result: &'a mut CheckResult,
    seen: HashMap<String, BigNat>,
}

impl Evaluator<'_> {
    fn z(&mut self, spec: &FamilySpec) -> BigNat {
        let key = spec.to_string();
        if let Some(z) = self.seen.get(&key) {
            return z.clone();
        }
        let z = self.evaluate(spec);
        self.seen.insert(key, z.clone());
        z
    }

    fn evaluate(&mut self, spec: &FamilySpec) -> BigNat {
        let g = spec.build().expect("claim specs are valid");
        let computed = hosoya(&g);
        match spec.closed_form_z() {
            Ok(closed) => {
                if closed != computed {
                    self.result.fail(
                        Witness::new(format!("closed form of {spec} disagrees with the computed value"))
                            .with_graph(&g)
                            .with_value("closed form", &closed)
                            .with_value("computed", &computed),
                    );
                }
                closed
            }
            Err(_) => computed,
        }
    }

    /// Asserts `Z(a) > Z(b)`.
    fn greater(&mut self, a: &FamilySpec, b: &FamilySpec, claim: &str) {
        let (za, zb) = (self.z(a), self.z(b));
        if za <= zb {
            self.result.fail(
                Witness::new(format!("{claim}: Z({a}) > Z({b}) fails"))
                    .with_graph(&b.build().expect("valid"))
                    .with_value(format!("Z({a})"), za)
                    .with_value(format!("Z({b})"), zb),
            );
        }
    }

    fn equal(&mut self, a: &FamilySpec, b: &FamilySpec, claim: &str) {
        let (za, zb) = (self.z(a), self.z(b));
        if za != zb {
            self.result.fail(
                Witness::new(format!("{claim}: Z({a}) = Z({b}) fails"))
                    .with_graph(&b.build().expect("valid"))
                    .with_value(format!("Z({a})"), za)
                    .with_value(format!("Z({b})"), zb),
            );
        }
    }

    fn equals_value(&mut self, a: &FamilySpec, want: &BigNat, formula: &str, claim: &str) {
        let za = self.z(a);
        if &za != want {
            self.result.fail(
                Witness::new(format!("{claim}: Z({a}) = {formula} fails"))
                    .with_graph(&a.build().expect("valid"))
                    .with_value(format!("Z({a})"), za)
                    .with_value(formula, want),
            );
        }
    }

    fn strictly_decreasing(&mut self, specs: &[FamilySpec], claim: &str) {
        for w in specs.windows(2) {
            self.greater(&w[0], &w[1], claim);
        }
    }
}

fn signed(x: BigNat) -> BigInt {
    BigInt::from(x)
}

/// Girths `k` of the `L1` chain in strictly decreasing order of value:
/// `4, 6, ..., 2m`, then `2m - 1 + 2l, ..., 5, 3` with `n = 4m + i`,
/// `l = floor(i / 2)`.
pub fn l1_chain(n: usize) -> Vec<usize> {
    let m = n / 4;
    let l = (n % 4) / 2;
    let mut out: Vec<usize> = (2..=m).map(|t| 2 * t).collect();
    out.extend((3..=2 * m + 2 * l - 1).rev().step_by(2));
    out
}

/// Formula-level claims at order `n`:
///
/// 1. `Z(L1_{n,k})` strictly decreases along [`l1_chain`], and
///    `Z(L1_{n,k}) = Z(L1_{n,n-k})`;
/// 2. lollipop values strictly decrease along [`lollipop_classes`], equal
///    within each class;
/// 3. `Z(L3_{n,k}) < Z(L3_{n,4})` for `3 <= k <= n-4`, `k != 4`, with the
///    gap at `k = n-5` equal to `F_{n-9}`;
/// 4. the displayed values of `L1_{n,4}`, `L3_{n,4}`, `U'`, `U''`, and
///    `Z(L1_{n,4}) > Z(U'') > Z(U')`, `Z(L3_{n,4}) > Z(L1_{n,4})`,
///    `Z(L_{n,3}) - Z(L3_{n,4}) = F_{n-9} > 0`.
///
/// Every closed form used is also cross-checked against the computed index.
pub fn verify_claims(n: usize) -> Result<CheckResult, VerifyError> {
    require("claims", "n", n, 11..=MAX_CLAIMS_ORDER)?;
    let mut result = CheckResult::new(
        "claims",
        "L1 chain and symmetry; lollipop chain and pairing; L3_{n,4} maximal among L3; \
         closed values and comparisons of L1_{n,4}, L3_{n,4}, U', U''",
    )
    .param("n", n);
    result.mode = Some("formula-only".into());
    let f = |i: usize| fib_nat(i);
    let mut ev = Evaluator {
        result: &mut result,
        seen: HashMap::new(),
    };

    // 1
    let l1 = |k| FamilySpec::L1Max { n, k };
    let chain: Vec<FamilySpec> = l1_chain(n).into_iter().map(l1).collect();
    ev.strictly_decreasing(&chain, "L1 chain");
    for k in 3..=n - 3 {
        ev.equal(&l1(k), &l1(n - k), "L1 symmetry");
    }

    // 2
    let lol = |k| FamilySpec::Lollipop { n, k };
    let classes = lollipop_classes(n);
    for class in &classes {
        for &k in &class[1..] {
            ev.equal(&lol(class[0]), &lol(k), "lollipop pairing");
        }
    }
    let reps: Vec<FamilySpec> = classes.iter().map(|c| lol(c[0])).collect();
    ev.strictly_decreasing(&reps, "lollipop chain");

    // 3
    let l3 = |k| FamilySpec::L3Max { n, k };
    for k in (3..=n - 4).filter(|&k| k != 4) {
        ev.greater(&l3(4), &l3(k), "L3 maximal at girth 4");
    }
    let gap = signed(ev.z(&l3(4))) - signed(ev.z(&l3(n - 5)));
    if gap != signed(f(n - 9)) {
        ev.result.fail(
            Witness::new(format!("Z(L3_{{{n},4}}) - Z(L3_{{{n},{}}}) = F_{} fails", n - 5, n - 9))
                .with_graph(&l3(n - 5).build()?)
                .with_value("difference", &gap)
                .with_value(format!("F_{}", n - 9), f(n - 9)),
        );
    }

    // 4
    let (up, upp) = (FamilySpec::UPrime(n), FamilySpec::UDoublePrime(n));
    ev.equal(&l1(4), &l1(n - 4), "L1 symmetry at girth 4");
    ev.equals_value(
        &l1(4),
        &(f(n + 1) + f(n - 5) * 4u32),
        "F_{n+1} + 4F_{n-5}",
        "L1_{n,4} value",
    );
    let l3_value = f(n - 1) * 2u32 + f(n - 3) * 2u32 + f(n - 6) * 5u32;
    ev.equals_value(&l3(4), &l3_value, "2F_{n-1} + 2F_{n-3} + 5F_{n-6}", "L3_{n,4} value");
    ev.equals_value(&up, &(f(n + 1) + f(n - 3)), "F_{n+1} + F_{n-3}", "U' value");
    ev.equals_value(&upp, &(f(n + 1) + f(n - 4) * 2u32), "F_{n+1} + 2F_{n-4}", "U'' value");
    ev.greater(&l1(4), &upp, "L1_{n,4} above U''");
    ev.greater(&upp, &up, "U'' above U'");
    ev.greater(&l3(4), &l1(4), "L3_{n,4} above L1_{n,4}");
    let delta = signed(ev.z(&lol(3))) - signed(ev.z(&l3(4)));
    if delta != signed(f(n - 9)) {
        ev.result.fail(
            Witness::new(format!("Z(L_{{{n},3}}) - Z(L3_{{{n},4}}) = F_{} fails", n - 9))
                .with_graph(&l3(4).build()?)
                .with_value("difference", &delta)
                .with_value(format!("F_{}", n - 9), f(n - 9)),
        );
    }
    let l3_at_4 = ev.z(&l3(4));
    result.value("Z(L3_{n,4})", l3_at_4);
    result.value("Z(L_{n,3}) - Z(L3_{n,4})", delta);
    Ok(result)
}

/// Sweeps the Fibonacci identities up to `max`: the recurrence on
/// `-max..=max`, the negative-index rule on `0..=max`, the splitting
/// identity on `1 <= k <= n <= max`, the Cassini-like identity on
/// `0 <= m, n <= max`, the product chain for `2..=max`, and strict growth
/// from `F_2` on.
pub fn verify_identities(max: usize) -> Result<CheckResult, VerifyError> {
    require("identities", "max", max, 2..=MAX_IDENTITY_RANGE)?;
    let mut result = CheckResult::new(
        "identities",
        "recurrence, negative indices, splitting, Cassini-like, product chain, monotonicity",
    )
    .param("max", max);
    let top = max as i64;

    let first_failure = |name: &str, bad: Option<String>, result: &mut CheckResult| {
        if let Some(at) = bad {
            result.fail(Witness::new(format!("{name} fails at {at}")));
        }
    };

    let bad = (-top..=top)
        .into_par_iter()
        .find_first(|&n| fib(n + 2) != fib(n + 1) + fib(n))
        .map(|n| format!("n = {n}"));
    first_failure("recurrence", bad, &mut result);

    let bad = (0..=top)
        .into_par_iter()
        .find_first(|&n| {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            fib(-n) != fib(n) * BigInt::from(sign)
        })
        .map(|n| format!("n = {n}"));
    first_failure("negative-index rule", bad, &mut result);

    let bad = (1..=top).into_par_iter().find_map_first(|n| {
        (1..=n)
            .find(|&k| check_splitting_identity(n, k) != Ok(true))
            .map(|k| format!("n = {n}, k = {k}"))
    });
    first_failure("splitting identity", bad, &mut result);

    let bad = (0..=top).into_par_iter().find_map_first(|m| {
        (0..=top)
            .find(|&n| !check_cassini_like(m, n))
            .map(|n| format!("m = {m}, n = {n}"))
    });
    first_failure("Cassini-like identity", bad, &mut result);

    let bad = (2..=top)
        .into_par_iter()
        .find_first(|&n| fib_product_chain(n).is_err())
        .map(|n| format!("n = {n}"));
    first_failure("product chain", bad, &mut result);

    let bad = (2..top).find(|&n| fib(n + 1) <= fib(n)).map(|n| format!("n = {n}"));
    first_failure("strict growth", bad, &mut result);

    result.value("splitting pairs", max * (max + 1) / 2);
    result.value("Cassini pairs", (max + 1) * (max + 1));
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l1_chain_examples() {
        // n = 11 = 4*2 + 3: 4, then 5, 3
        assert_eq!(l1_chain(11), vec![4, 5, 3]);
        assert_eq!(l1_chain(12), vec![4, 6, 5, 3]);
        assert_eq!(l1_chain(14), vec![4, 6, 7, 5, 3]);
    }

    #[test]
    fn claims_small_order() {
        let r = verify_claims(11).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert!(r
            .values
            .iter()
            .any(|v| v.name == "Z(L_{n,3}) - Z(L3_{n,4})" && v.value == "1"));
        assert!(verify_claims(10).is_err());
    }

    #[test]
    fn identities_small_range() {
        assert!(verify_identities(40).unwrap().passed());
        assert!(verify_identities(1).is_err());
    }
}
