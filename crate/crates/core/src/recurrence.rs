//! Reciprocal sequences: given `a` with `a0 = 1`, the unique `b` with
//! `sum_{h=0..n} a_{n-h} b_h = [n == 0]`.
//!
//! Six independent routes compute `b_n`:
//!
//! | method              | sums over                                    |
//! |---------------------|----------------------------------------------|
//! | `recursion`         | `b_n = -sum_{h<n} a_{n-h} b_h` (memoized)    |
//! | `composition`       | all `2^(n-1)` compositions of `n`            |
//! | `partition`         | partitions of `n`, weighted by `mu(p)`       |
//! | `diophantine`       | solutions of `q1 + 2 q2 + ... + n qn = n`    |
//! | `determinant`       | `(-1)^n det` of the lower-Hessenberg matrix  |
//! | `series_reciprocal` | geometric expansion of `1 / (1 + (a - 1))`   |
//!
//! The recursion is the reference the others are checked against.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{factorial, Rational};
use crate::partitions::{self, multiplicity, DEFAULT_COMPOSITION_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodId {
    Recursion,
    Composition,
    Partition,
    Diophantine,
    Determinant,
    SeriesReciprocal,
}

impl MethodId {
    pub const ALL: [MethodId; 6] = [
        MethodId::Recursion,
        MethodId::Composition,
        MethodId::Partition,
        MethodId::Diophantine,
        MethodId::Determinant,
        MethodId::SeriesReciprocal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodId::Recursion => "recursion",
            MethodId::Composition => "composition",
            MethodId::Partition => "partition",
            MethodId::Diophantine => "diophantine",
            MethodId::Determinant => "determinant",
            MethodId::SeriesReciprocal => "series_reciprocal",
        }
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MethodId::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown method {s:?}")))
    }
}

type Rule = Arc<dyn Fn(usize) -> Rational + Send + Sync>;

#[derive(Clone)]
enum Source {
    Rule(Rule),
    Finite(Arc<[Rational]>),
}

/// The sequence `a0, a1, ...` with `a0 = 1`.
///
/// Coefficients and the recursion results are memoized behind mutexes, so a
/// sequence can be shared between threads.
pub struct CoefficientSequence {
    name: String,
    source: Source,
    values: Mutex<Vec<Rational>>,
    reciprocal: Mutex<Vec<Rational>>,
}

impl fmt::Debug for CoefficientSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.source {
            Source::Rule(_) => "rule".to_string(),
            Source::Finite(v) => format!("{} coefficients", v.len()),
        };
        f.debug_struct("CoefficientSequence")
            .field("name", &self.name)
            .field("source", &kind)
            .finish()
    }
}

impl Clone for CoefficientSequence {
    fn clone(&self) -> Self {
        Self::with_source(self.name.clone(), self.source.clone())
    }
}

impl CoefficientSequence {
    fn with_source(name: String, source: Source) -> Self {
        CoefficientSequence {
            name,
            source,
            values: Mutex::new(Vec::new()),
            reciprocal: Mutex::new(Vec::new()),
        }
    }

    /// A sequence given by a rule for `a_k`. The rule must return 1 at `k = 0`.
    pub fn from_rule(
        name: impl Into<String>,
        rule: impl Fn(usize) -> Rational + Send + Sync + 'static,
    ) -> Result<Self> {
        let a0 = rule(0);
        if !a0.is_one() {
            return Err(Error::LeadingCoefficient { found: a0.to_string() });
        }
        Ok(Self::with_source(name.into(), Source::Rule(Arc::new(rule))))
    }

    /// A finitely known sequence `a0..a_m`; asking for `a_k` with `k > m` is an error.
    pub fn from_coefficients(name: impl Into<String>, coefficients: Vec<Rational>) -> Result<Self> {
        match coefficients.first() {
            None => Err(Error::Domain("a coefficient sequence needs at least a0".into())),
            Some(a0) if !a0.is_one() => Err(Error::LeadingCoefficient { found: a0.to_string() }),
            Some(_) => Ok(Self::with_source(name.into(), Source::Finite(coefficients.into()))),
        }
    }

    /// Divides every coefficient by `a0` first, so `a0` may be any nonzero value.
    pub fn normalized_from(name: impl Into<String>, coefficients: Vec<Rational>) -> Result<Self> {
        let a0 = coefficients
            .first()
            .ok_or_else(|| Error::Domain("a coefficient sequence needs at least a0".into()))?
            .clone();
        if a0.is_zero() {
            return Err(Error::Domain("a0 = 0 cannot be normalized to 1".into()));
        }
        let scaled = coefficients.iter().map(|c| c / &a0).collect();
        Self::from_coefficients(name, scaled)
    }

    /// Reads `{"name": ..., "coefficients": ["1", "-1/2", ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CoefficientFile = serde_json::from_str(text).map_err(|e| Error::CoefficientFile {
            path: "<json>".into(),
            reason: e.to_string(),
        })?;
        file.into_sequence()
    }

    pub fn from_json_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::CoefficientFile {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        Self::from_json(&text).map_err(|e| match e {
            Error::CoefficientFile { reason, .. } => Error::CoefficientFile {
                path: path.display().to_string(),
                reason,
            },
            other => other,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of known coefficients, or `None` for rule-based sequences.
    pub fn known_len(&self) -> Option<usize> {
        match &self.source {
            Source::Rule(_) => None,
            Source::Finite(v) => Some(v.len()),
        }
    }

    pub fn coefficient(&self, k: usize) -> Result<Rational> {
        Ok(self.coefficients(k)?.swap_remove(k))
    }

    /// `a0..=a_n`.
    pub fn coefficients(&self, n: usize) -> Result<Vec<Rational>> {
        match &self.source {
            Source::Finite(v) => {
                if n >= v.len() {
                    return Err(Error::MissingCoefficient {
                        name: self.name.clone(),
                        index: n,
                        len: v.len(),
                    });
                }
                Ok(v[..=n].to_vec())
            }
            Source::Rule(rule) => {
                let mut values = self.values.lock().unwrap_or_else(|e| e.into_inner());
                while values.len() <= n {
                    let k = values.len();
                    values.push(rule(k));
                }
                Ok(values[..=n].to_vec())
            }
        }
    }

    pub fn to_file(&self, n: usize) -> Result<CoefficientFile> {
        Ok(CoefficientFile {
            name: self.name.clone(),
            coefficients: self.coefficients(n)?.iter().map(|c| c.to_string()).collect(),
        })
    }
}

/// On-disk form of a coefficient sequence. Coefficients are rational strings,
/// index 0 first, and the first one must be `"1"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientFile {
    pub name: String,
    pub coefficients: Vec<String>,
}

impl CoefficientFile {
    pub fn into_sequence(self) -> Result<CoefficientSequence> {
        let values = self
            .coefficients
            .iter()
            .map(|c| Rational::parse(c))
            .collect::<Result<Vec<_>>>()?;
        CoefficientSequence::from_coefficients(self.name, values)
    }
}

/// A seeded random sequence `1, a1, ..., a_len` with numerators in `[-9, 9]`
/// and denominators in `[1, 9]`.
pub fn random_sequence(seed: u64, len: usize) -> CoefficientSequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coefficients = vec![Rational::one()];
    for _ in 0..len {
        let num: i64 = rng.random_range(-9..=9);
        let den: i64 = rng.random_range(1..=9);
        coefficients.push(Rational::ratio(num, den));
    }
    CoefficientSequence::from_coefficients(format!("random-{seed}"), coefficients)
        .expect("a0 is 1")
}

/// A computed `b_n` together with how many summands the method processed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: Rational,
    pub terms: u128,
}

/// Computes `b_n` with the given method. `composition_cap` bounds the
/// composition method only.
pub fn evaluate(
    a: &CoefficientSequence,
    n: usize,
    method: MethodId,
    composition_cap: usize,
) -> Result<Evaluation> {
    match method {
        MethodId::Recursion => {
            let value = b_recursion(a, n)?;
            Ok(Evaluation {
                value,
                terms: triangular(n),
            })
        }
        MethodId::Composition => composition_sum(a, n, composition_cap),
        MethodId::Partition => partition_sum(a, n),
        MethodId::Diophantine => diophantine_sum(a, n),
        MethodId::Determinant => {
            let value = b_determinant(a, n)?;
            Ok(Evaluation {
                value,
                terms: triangular(n),
            })
        }
        MethodId::SeriesReciprocal => {
            let series = series_reciprocal(a, n)?;
            Ok(Evaluation {
                value: series.coefficients()[n].clone(),
                terms: n as u128 * triangular(n + 1),
            })
        }
    }
}

fn triangular(n: usize) -> u128 {
    let n = n as u128;
    n * (n + 1) / 2
}

fn negated(a: &CoefficientSequence, n: usize) -> Result<Vec<Rational>> {
    Ok(a.coefficients(n)?.into_iter().map(|x| -x).collect())
}

/// `b_0 = 1`, `b_n = -sum_{h=0}^{n-1} a_{n-h} b_h`, memoized on `a`.
pub fn b_recursion(a: &CoefficientSequence, n: usize) -> Result<Rational> {
    {
        let memo = a.reciprocal.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(b) = memo.get(n) {
            return Ok(b.clone());
        }
    }
    let coeffs = a.coefficients(n)?;
    let mut memo = a.reciprocal.lock().unwrap_or_else(|e| e.into_inner());
    if memo.is_empty() {
        memo.push(Rational::one());
    }
    while memo.len() <= n {
        let k = memo.len();
        let mut acc = Rational::zero();
        for h in 0..k {
            if !coeffs[k - h].is_zero() {
                acc += &coeffs[k - h] * &memo[h];
            }
        }
        memo.push(-acc);
    }
    Ok(memo[n].clone())
}

/// Sum over all compositions `c` of `n` of `prod_{part in c} (-a_part)`.
pub fn b_composition(a: &CoefficientSequence, n: usize, composition_cap: usize) -> Result<Rational> {
    composition_sum(a, n, composition_cap).map(|e| e.value)
}

// Every composition product has a denominator dividing
// D = prod_k den(a_k)^floor(n/k), since part k occurs at most n/k times.
// Terms are accumulated as integers over D and reduced once at the end.
fn composition_sum(a: &CoefficientSequence, n: usize, cap: usize) -> Result<Evaluation> {
    let compositions = partitions::compositions(n, cap)?;
    let neg_a = negated(a, n)?;
    let mut common = BigInt::from(1);
    for (k, c) in neg_a.iter().enumerate().skip(1) {
        if !c.is_zero() {
            common *= num_traits::pow(c.denom().clone(), n / k);
        }
    }
    // prefix[j] = (numerator of the first j factors, D / their denominator)
    let mut prefix: Vec<(BigInt, BigInt)> = vec![(BigInt::from(1), common.clone())];
    let mut previous: Vec<usize> = Vec::new();
    let mut total = BigInt::from(0);
    let mut terms = 0u128;
    for c in compositions {
        let parts = c.parts();
        let shared = previous.iter().zip(parts).take_while(|(x, y)| x == y).count();
        prefix.truncate(shared + 1);
        for &part in &parts[shared..] {
            let (num, cofactor) = prefix.last().expect("prefix holds the empty product");
            let next = if num.is_zero() || neg_a[part].is_zero() {
                (BigInt::from(0), BigInt::from(0))
            } else {
                (num * neg_a[part].numer(), cofactor / neg_a[part].denom())
            };
            prefix.push(next);
        }
        let (num, cofactor) = prefix.last().expect("non-empty");
        if !num.is_zero() {
            total += num * cofactor;
        }
        terms += 1;
        previous.clear();
        previous.extend_from_slice(parts);
    }
    Ok(Evaluation {
        value: Rational::new(total, common)?,
        terms,
    })
}

/// Sum over partitions `p` of `n` of `mu(p) * prod_{part in p} (-a_part)`.
pub fn b_partition(a: &CoefficientSequence, n: usize) -> Result<Rational> {
    partition_sum(a, n).map(|e| e.value)
}

fn partition_sum(a: &CoefficientSequence, n: usize) -> Result<Evaluation> {
    let parts = partitions::partitions(n)?;
    let neg_a = negated(a, n)?;
    let mut total = Rational::zero();
    let mut terms = 0u128;
    for p in parts {
        terms += 1;
        let mut product = Rational::one();
        for &(value, count) in p.multiplicities() {
            product *= &neg_a[value].pow(count as u32);
            if product.is_zero() {
                break;
            }
        }
        if !product.is_zero() {
            total += product.mul_int(&multiplicity(&p));
        }
    }
    Ok(Evaluation { value: total, terms })
}

/// Sum over solutions `q` of `q1 + 2 q2 + ... + n qn = n` of
/// `(-1)^q q!/(q1! ... qn!) a1^q1 ... an^qn` with `q = q1 + ... + qn`.
pub fn b_diophantine(a: &CoefficientSequence, n: usize) -> Result<Rational> {
    diophantine_sum(a, n).map(|e| e.value)
}

fn diophantine_sum(a: &CoefficientSequence, n: usize) -> Result<Evaluation> {
    let solutions = partitions::diophantine(n)?;
    let coeffs = a.coefficients(n)?;
    let mut total = Rational::zero();
    let mut terms = 0u128;
    for s in solutions {
        terms += 1;
        let mut product = Rational::one();
        let mut denom = BigInt::from(1);
        for (i, &qi) in s.q().iter().enumerate() {
            if qi == 0 {
                continue;
            }
            product *= &coeffs[i + 1].pow(qi as u32);
            if qi > 1 {
                denom *= factorial(qi);
            }
        }
        if product.is_zero() {
            continue;
        }
        let q = s.total();
        let weight = factorial(q) / denom;
        let term = product.mul_int(&weight);
        if q % 2 == 1 {
            total -= &term;
        } else {
            total += &term;
        }
    }
    Ok(Evaluation { value: total, terms })
}

/// The `n x n` lower-Hessenberg matrix with row `i` equal to
/// `(a_i, a_{i-1}, ..., a_1, 1, 0, ..., 0)`.
pub fn reciprocal_matrix(a: &CoefficientSequence, n: usize) -> Result<Vec<Vec<Rational>>> {
    let coeffs = a.coefficients(n)?;
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| if j <= i + 1 { coeffs[i + 1 - j].clone() } else { Rational::zero() })
                .collect()
        })
        .collect())
}

/// Determinant of a lower-Hessenberg matrix (zero above the first
/// superdiagonal) by the division-free recurrence
/// `D_k = sum_{j<=k} (-1)^{k-j} h[k][j] (h[j][j+1] ... h[k-1][k]) D_{j-1}`.
///
/// Entries above the superdiagonal are ignored.
pub fn lower_hessenberg_det(h: &[Vec<Rational>]) -> Rational {
    let n = h.len();
    let mut minors = Vec::with_capacity(n + 1);
    minors.push(Rational::one());
    for k in 0..n {
        let mut acc = Rational::zero();
        // chain = product of superdiagonal entries h[j][j+1] .. h[k-1][k]
        let mut chain = Rational::one();
        for j in (0..=k).rev() {
            if j < k {
                chain *= &h[j][j + 1];
                if chain.is_zero() {
                    break;
                }
            }
            if h[k][j].is_zero() {
                continue;
            }
            let term = &(&h[k][j] * &chain) * &minors[j];
            if (k - j) % 2 == 1 {
                acc -= &term;
            } else {
                acc += &term;
            }
        }
        minors.push(acc);
    }
    minors.pop().expect("at least D_0")
}

/// `b_n = (-1)^n det` of [`reciprocal_matrix`].
pub fn b_determinant(a: &CoefficientSequence, n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Domain("the determinant form needs n >= 1".into()));
    }
    let det = lower_hessenberg_det(&reciprocal_matrix(a, n)?);
    Ok(if n % 2 == 1 { -det } else { det })
}

/// A power series known up to `x^order`; all arithmetic discards higher terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    coefficients: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(coefficients: Vec<Rational>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::Domain("a truncated series needs at least one coefficient".into()));
        }
        Ok(TruncatedSeries { coefficients })
    }

    pub fn of(a: &CoefficientSequence, order: usize) -> Result<Self> {
        Self::new(a.coefficients(order)?)
    }

    /// `1 + 0 x + ... + 0 x^order`.
    pub fn one(order: usize) -> Self {
        let mut coefficients = vec![Rational::zero(); order + 1];
        coefficients[0] = Rational::one();
        TruncatedSeries { coefficients }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<Rational> {
        self.coefficients
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::Domain(format!(
                "series known to order {} cannot be read to order {order}",
                self.order()
            )));
        }
        Ok(TruncatedSeries {
            coefficients: self.coefficients[..=order].to_vec(),
        })
    }

    pub fn is_delta(&self) -> bool {
        self.coefficients[0].is_one() && self.coefficients[1..].iter().all(Rational::is_zero)
    }
}

/// Coefficients `0..=order` of the product `a(x) b(x)`.
pub fn cauchy_product(a: &TruncatedSeries, b: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    let (a, b) = (a.truncate(order)?, b.truncate(order)?);
    let (a, b) = (a.coefficients(), b.coefficients());
    let mut out = vec![Rational::zero(); order + 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b[..=order - i].iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    Ok(TruncatedSeries { coefficients: out })
}

/// `b_0..b_order` from `1/a(x) = sum_k (-u(x))^k` with `u = a - 1`. Since
/// `u` has no constant term, `u^k` vanishes below `x^k` and `k <= order`
/// suffices.
pub fn series_reciprocal(a: &CoefficientSequence, order: usize) -> Result<TruncatedSeries> {
    let mut minus_u = TruncatedSeries::of(a, order)?;
    minus_u.coefficients[0] = Rational::zero();
    for c in &mut minus_u.coefficients[1..] {
        *c = -&*c;
    }
    let mut power = TruncatedSeries::one(order);
    let mut total = TruncatedSeries::one(order);
    for _ in 1..=order {
        power = cauchy_product(&power, &minus_u, order)?;
        for (t, p) in total.coefficients.iter_mut().zip(&power.coefficients) {
            *t += p;
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Mismatch { expected: Rational, got: Rational },
    Skipped { reason: String },
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Mismatch { .. } => "FAIL",
            Outcome::Skipped { .. } => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRow {
    pub n: usize,
    pub method: MethodId,
    #[serde(flatten)]
    pub outcome: Outcome,
    pub terms: Option<u128>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub sequence: String,
    pub rows: Vec<VerificationRow>,
}

impl VerificationReport {
    /// True when every row passed or was skipped.
    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationRow> {
        self.rows
            .iter()
            .filter(|r| matches!(r.outcome, Outcome::Mismatch { .. }))
    }
}

/// Checks every non-recursion method against [`b_recursion`] for
/// `1 <= n <= n_max`. The composition method is reported as skipped above
/// `composition_cap`.
pub fn verify_all_methods(
    a: &CoefficientSequence,
    n_max: usize,
    composition_cap: usize,
) -> Result<VerificationReport> {
    verify_methods(a, n_max, &MethodId::ALL[1..], composition_cap)
}

pub fn verify_methods(
    a: &CoefficientSequence,
    n_max: usize,
    methods: &[MethodId],
    composition_cap: usize,
) -> Result<VerificationReport> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let expected = b_recursion(a, n)?;
        for &method in methods {
            let start = Instant::now();
            let row = match evaluate(a, n, method, composition_cap) {
                Ok(e) => VerificationRow {
                    n,
                    method,
                    outcome: if e.value == expected {
                        Outcome::Pass
                    } else {
                        Outcome::Mismatch {
                            expected: expected.clone(),
                            got: e.value,
                        }
                    },
                    terms: Some(e.terms),
                    elapsed: start.elapsed(),
                },
                Err(err @ Error::CompositionCap { .. }) => VerificationRow {
                    n,
                    method,
                    outcome: Outcome::Skipped { reason: err.to_string() },
                    terms: None,
                    elapsed: Duration::ZERO,
                },
                Err(err) => return Err(err),
            };
            rows.push(row);
        }
    }
    Ok(VerificationReport {
        sequence: a.name().to_string(),
        rows,
    })
}

/// Convenience: verification with the default composition cap.
pub fn verify_default(a: &CoefficientSequence, n_max: usize) -> Result<VerificationReport> {
    verify_all_methods(a, n_max, DEFAULT_COMPOSITION_CAP)
}
