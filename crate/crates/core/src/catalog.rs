//! Built-in coefficient sequences and the named numbers recovered from their
//! reciprocals.
//!
//! | name             | `a_n` (n > 0)          | named value from `b_n`          |
//! |------------------|------------------------|---------------------------------|
//! | `bernoulli`      | `1/(n+1)!`             | `B_n = n! b_n`                  |
//! | `even_bernoulli` | `2/(2n+2)!`            | `B_2n = -(2n)! b_n / (2n-1)`    |
//! | `euler`          | `(1+(-1)^n)/(2 n!)`    | `E_n = n! b_n`                  |
//! | `even_euler`     | `1/(2n)!`              | `E_2n = (2n)! b_n`              |
//! | `fibonacci`      | `((-1)^n-1)/2`         | `F_n = b_n`                     |
//! | `even_fibonacci` | `-n`                   | `F_2n = b_n`                    |
//!
//! Every entry has `a_0 = 1`, whatever the closed form gives at zero.
//! Euler numbers use the secant convention (`E_2 = -1`, `E_4 = 5`, odd
//! indices zero).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{factorial, Rational};
use crate::recurrence::{b_recursion, evaluate, CoefficientSequence, MethodId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CatalogEntry {
    Bernoulli,
    EvenBernoulli,
    Euler,
    EvenEuler,
    Fibonacci,
    EvenFibonacci,
}

impl CatalogEntry {
    pub const ALL: [CatalogEntry; 6] = [
        CatalogEntry::Bernoulli,
        CatalogEntry::EvenBernoulli,
        CatalogEntry::Euler,
        CatalogEntry::EvenEuler,
        CatalogEntry::Fibonacci,
        CatalogEntry::EvenFibonacci,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogEntry::Bernoulli => "bernoulli",
            CatalogEntry::EvenBernoulli => "even_bernoulli",
            CatalogEntry::Euler => "euler",
            CatalogEntry::EvenEuler => "even_euler",
            CatalogEntry::Fibonacci => "fibonacci",
            CatalogEntry::EvenFibonacci => "even_fibonacci",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            CatalogEntry::Bernoulli => "Bernoulli numbers B_n = n! b_n, a_n = 1/(n+1)!",
            CatalogEntry::EvenBernoulli => {
                "even-index Bernoulli numbers B_2n = -(2n)! b_n/(2n-1), a_n = 2/(2n+2)!"
            }
            CatalogEntry::Euler => "Euler (secant) numbers E_n = n! b_n, a_n = (1+(-1)^n)/(2 n!)",
            CatalogEntry::EvenEuler => "even-index Euler numbers E_2n = (2n)! b_n, a_n = 1/(2n)!",
            CatalogEntry::Fibonacci => "Fibonacci numbers F_n = b_n, a_n = ((-1)^n-1)/2",
            CatalogEntry::EvenFibonacci => "even-index Fibonacci numbers F_2n = b_n, a_n = -n",
        }
    }

    /// Smallest `n` for which [`named_value`] is defined.
    pub fn valid_from(self) -> usize {
        1
    }

    /// `a_n` for this entry.
    pub fn coefficient(self, n: usize) -> Rational {
        if n == 0 {
            return Rational::one();
        }
        let inv = |d: BigInt| Rational::new(1.into(), d).expect("factorials are nonzero");
        match self {
            CatalogEntry::Bernoulli => inv(factorial(n + 1)),
            CatalogEntry::EvenBernoulli => inv(factorial(2 * n + 2)).mul_int(&BigInt::from(2)),
            CatalogEntry::Euler => {
                if n.is_multiple_of(2) {
                    inv(factorial(n))
                } else {
                    Rational::zero()
                }
            }
            CatalogEntry::EvenEuler => inv(factorial(2 * n)),
            CatalogEntry::Fibonacci => Rational::from(if n.is_multiple_of(2) { 0 } else { -1 }),
            CatalogEntry::EvenFibonacci => Rational::from(-(n as i64)),
        }
    }

    /// The coefficient sequence `a` of this entry.
    pub fn sequence(self) -> CoefficientSequence {
        CoefficientSequence::from_rule(self.name(), move |k| self.coefficient(k))
            .expect("catalog coefficients start at 1")
    }

    /// Recovers the named number (B, E or F) from `b_n`.
    pub fn transform(self, n: usize, b: &Rational) -> Result<Rational> {
        if n < self.valid_from() {
            return Err(Error::Domain(format!(
                "{} is defined for n >= {}",
                self.name(),
                self.valid_from()
            )));
        }
        Ok(match self {
            CatalogEntry::Bernoulli | CatalogEntry::Euler => b.mul_int(&factorial(n)),
            CatalogEntry::EvenBernoulli => {
                -b.mul_int(&factorial(2 * n)).div_int(&BigInt::from(2 * n - 1))?
            }
            CatalogEntry::EvenEuler => b.mul_int(&factorial(2 * n)),
            CatalogEntry::Fibonacci | CatalogEntry::EvenFibonacci => b.clone(),
        })
    }

    /// The index of the named number produced at position `n`: `2n` for the
    /// even-index entries, `n` otherwise.
    pub fn named_index(self, n: usize) -> usize {
        match self {
            CatalogEntry::EvenBernoulli | CatalogEntry::EvenEuler | CatalogEntry::EvenFibonacci => {
                2 * n
            }
            _ => n,
        }
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogEntry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CatalogEntry::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::UnknownSequence(s.to_string()))
    }
}

/// `a_n` for the entry called `name`.
pub fn catalog_coefficient(name: &str, n: usize) -> Result<Rational> {
    Ok(name.parse::<CatalogEntry>()?.coefficient(n))
}

/// Computes `b_n` with `method` and maps it to the entry's named number.
pub fn named_value(
    entry: CatalogEntry,
    n: usize,
    method: MethodId,
    composition_cap: usize,
) -> Result<Rational> {
    named_value_in(entry, &entry.sequence(), n, method, composition_cap)
}

/// Like [`named_value`] but reuses an existing sequence (and its memo).
pub fn named_value_in(
    entry: CatalogEntry,
    sequence: &CoefficientSequence,
    n: usize,
    method: MethodId,
    composition_cap: usize,
) -> Result<Rational> {
    if n < entry.valid_from() {
        return Err(Error::Domain(format!(
            "{} is defined for n >= {}",
            entry.name(),
            entry.valid_from()
        )));
    }
    let b = evaluate(sequence, n, method, composition_cap)?.value;
    entry.transform(n, &b)
}

/// `F_n` from `F_1 = F_2 = 1` and `F_n = F_{n-1} + F_{n-2}` (with `F_0 = 0`).
pub fn fibonacci_reference(n: usize) -> Rational {
    let (mut prev, mut cur) = (BigInt::from(0), BigInt::from(1));
    if n == 0 {
        return Rational::zero();
    }
    for _ in 1..n {
        let next = &prev + &cur;
        prev = std::mem::replace(&mut cur, next);
    }
    Rational::from(cur)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// `F_2n = F_1 + F_3 + ... + F_{2n-1}`
    FibonacciOddSum,
    /// `F_{2n+1} = 1 + F_2 + F_4 + ... + F_2n`
    FibonacciEvenSum,
    /// `F_2n = n + sum_{h=1}^{n-1} F_2h (n-h)`
    FibonacciWeightedSum,
    /// `F_n = (1-(-1)^n)/2 + sum_{h=1}^{n-1} F_h (1-(-1)^{n-h})/2`
    FibonacciOddConvolution,
    /// `B_{2n+1} = 0` through the `bernoulli` entry.
    BernoulliOddVanish,
    /// `even_bernoulli` at `n` equals `bernoulli` at `2n`.
    EvenBernoulliAgrees,
    /// `even_euler` at `n` equals `euler` at `2n`.
    EvenEulerAgrees,
    /// `even_fibonacci` `b_n` equals `fibonacci` `b_2n`.
    EvenFibonacciAgrees,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::FibonacciOddSum,
        Identity::FibonacciEvenSum,
        Identity::FibonacciWeightedSum,
        Identity::FibonacciOddConvolution,
        Identity::BernoulliOddVanish,
        Identity::EvenBernoulliAgrees,
        Identity::EvenEulerAgrees,
        Identity::EvenFibonacciAgrees,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::FibonacciOddSum => "fibonacci_odd_sum",
            Identity::FibonacciEvenSum => "fibonacci_even_sum",
            Identity::FibonacciWeightedSum => "fibonacci_weighted_sum",
            Identity::FibonacciOddConvolution => "fibonacci_odd_convolution",
            Identity::BernoulliOddVanish => "bernoulli_odd_vanish",
            Identity::EvenBernoulliAgrees => "even_bernoulli_agrees",
            Identity::EvenEulerAgrees => "even_euler_agrees",
            Identity::EvenFibonacciAgrees => "even_fibonacci_agrees",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub n: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub n_max: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

/// Checks every [`Identity`] for `1 <= n <= n_max`. Catalog values come from
/// the recursion, Fibonacci values in the sum identities from
/// [`fibonacci_reference`].
pub fn identity_suite(n_max: usize) -> Result<IdentityReport> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let fib: Vec<Rational> = (0..=2 * n_max + 1).map(fibonacci_reference).collect();
    let int = |k: usize| Rational::from(k as i64);
    let sequences: Vec<CoefficientSequence> =
        CatalogEntry::ALL.iter().map(|e| e.sequence()).collect();
    let seq = |e: CatalogEntry| &sequences[e as usize];
    let named = |e: CatalogEntry, n: usize| -> Result<Rational> {
        e.transform(n, &b_recursion(seq(e), n)?)
    };

    let mut checks = Vec::new();
    for n in 1..=n_max {
        let mut push = |identity, lhs, rhs| checks.push(IdentityCheck { identity, n, lhs, rhs });

        let odd_sum: Rational = (1..=n).map(|h| &fib[2 * h - 1]).sum();
        push(Identity::FibonacciOddSum, fib[2 * n].clone(), odd_sum);

        let even_sum: Rational = (1..=n).map(|h| &fib[2 * h]).sum();
        push(Identity::FibonacciEvenSum, fib[2 * n + 1].clone(), Rational::one() + even_sum);

        let weighted: Rational = (1..n).map(|h| &fib[2 * h] * &int(n - h)).sum();
        push(Identity::FibonacciWeightedSum, fib[2 * n].clone(), int(n) + weighted);

        let odd_indicator = |k: usize| int(k % 2);
        let convolution: Rational = (1..n).map(|h| &fib[h] * &odd_indicator(n - h)).sum();
        push(
            Identity::FibonacciOddConvolution,
            fib[n].clone(),
            odd_indicator(n) + convolution,
        );

        push(
            Identity::BernoulliOddVanish,
            named(CatalogEntry::Bernoulli, 2 * n + 1)?,
            Rational::zero(),
        );
        push(
            Identity::EvenBernoulliAgrees,
            named(CatalogEntry::EvenBernoulli, n)?,
            named(CatalogEntry::Bernoulli, 2 * n)?,
        );
        push(
            Identity::EvenEulerAgrees,
            named(CatalogEntry::EvenEuler, n)?,
            named(CatalogEntry::Euler, 2 * n)?,
        );
        push(
            Identity::EvenFibonacciAgrees,
            b_recursion(seq(CatalogEntry::EvenFibonacci), n)?,
            b_recursion(seq(CatalogEntry::Fibonacci), 2 * n)?,
        );
    }
    Ok(IdentityReport { n_max, checks })
}
