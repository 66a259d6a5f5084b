//! Partitions, compositions, and solutions of `q1 + 2 q2 + ... + n qn = n`.
//!
//! All three enumerators are lazy iterators with a fixed, documented order:
//!
//! * [`partitions`] walks partitions in reverse-lexicographic order, so for
//!   `n = 4` it yields `[4], [3,1], [2,2], [2,1,1], [1,1,1,1]`.
//! * [`compositions`] maps each subset of the cut points `{1, ..., n-1}` to a
//!   composition and walks the subsets as a binary counter. The cut point `p`
//!   is bit `n-1-p`, so consecutive items share their leading parts.
//! * [`diophantine`] walks solution vectors in decreasing lexicographic order
//!   of `(q_n, q_{n-1}, ..., q_2)`, with `q_1` taking up the remainder.
//!
//! Partitions and diophantine solutions are in bijection: value `i` occurring
//! `q_i` times.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::factorial;

/// Default largest `n` for which all compositions may be enumerated.
pub const DEFAULT_COMPOSITION_CAP: usize = 26;

/// Hard ceiling on the composition cap: the cut-point mask lives in a `u64`.
pub const MAX_COMPOSITION_CAP: usize = 63;

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Domain("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// A partition of `n`: parts in non-increasing order, with the multiplicity
/// of each distinct value computed once at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
    // (value, count), values strictly decreasing
    multiplicities: Vec<(usize, usize)>,
}

impl Partition {
    /// Builds a partition from parts in any order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Domain("a partition needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(parts))
    }

    fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let n = parts.iter().sum();
        let mut multiplicities: Vec<(usize, usize)> = Vec::new();
        for &p in &parts {
            match multiplicities.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => multiplicities.push((p, 1)),
            }
        }
        Partition {
            parts,
            n,
            multiplicities,
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parts, `l(p)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Distinct values with how often each occurs, largest value first.
    pub fn multiplicities(&self) -> &[(usize, usize)] {
        &self.multiplicities
    }

    /// How many times `value` occurs.
    pub fn multiplicity_of(&self, value: usize) -> usize {
        self.multiplicities
            .iter()
            .find(|(v, _)| *v == value)
            .map_or(0, |(_, c)| *c)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

fn write_bracketed(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

/// An ordered list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
    n: usize,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Domain("composition parts must be positive and non-empty".into()));
        }
        let n = parts.iter().sum();
        Ok(Composition { parts, n })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The partition obtained by forgetting the order of the parts.
    pub fn to_partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.parts)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{self}")
    }
}

/// Non-negative `(q_1, ..., q_n)` with `sum i * q_i = n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiophantineSolution {
    q: Vec<usize>,
}

impl DiophantineSolution {
    /// `q[i-1]` is `q_i`; `n` is taken to be `q.len()`.
    pub fn new(q: Vec<usize>) -> Result<Self> {
        require_positive(q.len())?;
        let weighted: usize = q.iter().enumerate().map(|(i, &qi)| (i + 1) * qi).sum();
        if weighted != q.len() {
            return Err(Error::Domain(format!(
                "sum of i*q_i is {weighted}, expected {}",
                q.len()
            )));
        }
        Ok(DiophantineSolution { q })
    }

    pub fn q(&self) -> &[usize] {
        &self.q
    }

    pub fn n(&self) -> usize {
        self.q.len()
    }

    /// `q = q_1 + ... + q_n`, the length of the matching partition.
    pub fn total(&self) -> usize {
        self.q.iter().sum()
    }
}

impl fmt::Display for DiophantineSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.q)
    }
}

impl fmt::Debug for DiophantineSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diophantine{self}")
    }
}

/// Number of distinct compositions that rearrange `p`:
/// `l(p)! / prod m_p(v)!`.
pub fn multiplicity(p: &Partition) -> BigInt {
    let mut denom = BigInt::from(1);
    for &(_, count) in p.multiplicities() {
        if count > 1 {
            denom *= factorial(count);
        }
    }
    factorial(p.len()) / denom
}

pub fn partition_to_diophantine(p: &Partition) -> DiophantineSolution {
    let mut q = vec![0; p.n()];
    for &(value, count) in p.multiplicities() {
        q[value - 1] = count;
    }
    DiophantineSolution { q }
}

pub fn diophantine_to_partition(s: &DiophantineSolution) -> Partition {
    let mut parts = Vec::with_capacity(s.total());
    for (i, &count) in s.q.iter().enumerate().rev() {
        parts.extend(std::iter::repeat_n(i + 1, count));
    }
    Partition::from_sorted(parts)
}

/// Lazy reverse-lexicographic stream of the partitions of `n`.
pub fn partitions(n: usize) -> Result<Partitions> {
    require_positive(n)?;
    Ok(Partitions {
        current: Vec::new(),
        n,
        done: false,
    })
}

#[derive(Debug, Clone)]
pub struct Partitions {
    current: Vec<usize>,
    n: usize,
    done: bool,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if self.current.is_empty() {
            self.current.push(self.n);
        } else {
            // Rightmost part larger than one; everything after it is a 1.
            let Some(k) = self.current.iter().rposition(|&x| x > 1) else {
                self.done = true;
                return None;
            };
            let v = self.current[k] - 1;
            let mut remaining = v + self.current.len() - k;
            self.current.truncate(k);
            while remaining > 0 {
                let part = v.min(remaining);
                self.current.push(part);
                remaining -= part;
            }
        }
        Some(Partition::from_sorted(self.current.clone()))
    }
}

/// Lazy stream of all `2^(n-1)` compositions of `n`, refusing `n > cap`.
pub fn compositions(n: usize, cap: usize) -> Result<Compositions> {
    require_positive(n)?;
    let cap = cap.min(MAX_COMPOSITION_CAP);
    if n > cap {
        return Err(Error::CompositionCap { n, cap });
    }
    Ok(Compositions {
        n,
        mask: 0,
        end: 1u64 << (n - 1),
    })
}

/// `2^(n-1)`, the number of compositions of `n`.
pub fn composition_count(n: usize) -> u128 {
    1u128 << (n.max(1) - 1)
}

#[derive(Debug, Clone)]
pub struct Compositions {
    n: usize,
    mask: u64,
    end: u64,
}

impl Compositions {
    fn composition_for(&self, mask: u64) -> Composition {
        let mut parts = Vec::with_capacity(mask.count_ones() as usize + 1);
        let mut start = 0;
        for cut in 1..self.n {
            if mask >> (self.n - 1 - cut) & 1 == 1 {
                parts.push(cut - start);
                start = cut;
            }
        }
        parts.push(self.n - start);
        Composition { parts, n: self.n }
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.mask >= self.end {
            return None;
        }
        let c = self.composition_for(self.mask);
        self.mask += 1;
        Some(c)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.mask) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Compositions {}

/// Lazy stream of the solutions of `q1 + 2 q2 + ... + n qn = n`.
pub fn diophantine(n: usize) -> Result<DiophantineSolutions> {
    require_positive(n)?;
    Ok(DiophantineSolutions {
        q: Vec::new(),
        n,
        done: false,
    })
}

#[derive(Debug, Clone)]
pub struct DiophantineSolutions {
    q: Vec<usize>,
    n: usize,
    done: bool,
}

impl DiophantineSolutions {
    // Greedily assigns q_j for j = top..2 from `rest`, leaving q_1 the remainder.
    fn fill_greedy(&mut self, top: usize, mut rest: usize) {
        for j in (2..=top).rev() {
            self.q[j - 1] = rest / j;
            rest -= j * self.q[j - 1];
        }
        self.q[0] = rest;
    }
}

impl Iterator for DiophantineSolutions {
    type Item = DiophantineSolution;

    fn next(&mut self) -> Option<DiophantineSolution> {
        if self.done {
            return None;
        }
        if self.q.is_empty() {
            self.q = vec![0; self.n];
            self.fill_greedy(self.n, self.n);
        } else {
            // Lowest index i >= 2 that can still be decreased.
            let Some(i) = (2..=self.n).find(|&i| self.q[i - 1] > 0) else {
                self.done = true;
                return None;
            };
            self.q[i - 1] -= 1;
            let rest = self.q[0] + i;
            self.fill_greedy(i - 1, rest);
        }
        Some(DiophantineSolution { q: self.q.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn lists<T: fmt::Display>(items: impl Iterator<Item = T>) -> Vec<String> {
        items.map(|x| x.to_string()).collect()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_four_in_listed_order() {
        assert_eq!(
            lists(partitions(4).unwrap()),
            ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]
        );
        assert_eq!(lists(partitions(1).unwrap()), ["[1]"]);
    }

    #[test]
    fn zero_is_a_domain_error() {
        assert!(matches!(partitions(0), Err(Error::Domain(_))));
        assert!(matches!(compositions(0, 26), Err(Error::Domain(_))));
        assert!(matches!(diophantine(0), Err(Error::Domain(_))));
    }

    #[test]
    fn compositions_of_three() {
        assert_eq!(
            lists(compositions(3, 26).unwrap()),
            ["[3]", "[2,1]", "[1,2]", "[1,1,1]"]
        );
        assert_eq!(lists(compositions(1, 26).unwrap()), ["[1]"]);
    }

    #[test]
    fn composition_cap_enforced() {
        let err = compositions(27, DEFAULT_COMPOSITION_CAP).unwrap_err();
        assert_eq!(err, Error::CompositionCap { n: 27, cap: 26 });
        assert!(err.to_string().contains("2^26"));
        assert!(compositions(5, 4).is_err());
        assert_eq!(compositions(64, 1000).unwrap_err(), Error::CompositionCap { n: 64, cap: 63 });
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(&part(&[3, 1])), BigInt::from(2));
        assert_eq!(multiplicity(&part(&[2, 1, 1])), BigInt::from(3));
        assert_eq!(multiplicity(&part(&[5])), BigInt::from(1));
        assert_eq!(multiplicity(&part(&[1, 1, 1, 1])), BigInt::from(1));
    }

    #[test]
    fn bijection_examples() {
        let d = partition_to_diophantine(&part(&[2, 1, 1]));
        assert_eq!(d.q(), [2, 1, 0, 0]);
        assert_eq!(partition_to_diophantine(&part(&[4])).q(), [0, 0, 0, 1]);
        assert_eq!(partition_to_diophantine(&part(&[3, 1])).q(), [1, 0, 1, 0]);
        assert_eq!(diophantine_to_partition(&d), part(&[2, 1, 1]));
        let four = DiophantineSolution::new(vec![0, 0, 0, 1]).unwrap();
        assert_eq!(diophantine_to_partition(&four).parts(), [4]);
    }

    #[test]
    fn diophantine_validation() {
        assert!(DiophantineSolution::new(vec![1, 1, 1]).is_err());
        assert!(DiophantineSolution::new(vec![]).is_err());
        assert!(DiophantineSolution::new(vec![1, 1, 0, 0, 0]).is_err());
        assert_eq!(DiophantineSolution::new(vec![1, 1, 0]).unwrap().total(), 2);
    }

    #[test]
    fn diophantine_small_cases() {
        assert_eq!(lists(diophantine(1).unwrap()), ["[1]"]);
        assert_eq!(diophantine(4).unwrap().count(), 5);
        let all: Vec<_> = diophantine(6).unwrap().collect();
        for s in &all {
            assert!(DiophantineSolution::new(s.q().to_vec()).is_ok());
        }
    }

    // Nested bounded loops over q_n, ..., q_1, independent of the iterator.
    fn diophantine_by_loops(n: usize) -> usize {
        fn go(i: usize, rest: usize) -> usize {
            if i == 1 {
                return 1;
            }
            (0..=rest / i).map(|qi| go(i - 1, rest - qi * i)).sum()
        }
        go(n, n)
    }

    #[test]
    fn diophantine_counts_match_loops() {
        for n in 1..=14 {
            assert_eq!(diophantine(n).unwrap().count(), diophantine_by_loops(n), "n={n}");
        }
        assert_eq!(diophantine_by_loops(10), 42);
    }

    #[test]
    fn compositions_group_into_partitions_by_multiplicity() {
        for n in 1..=16 {
            let mut groups: HashMap<Vec<usize>, u64> = HashMap::new();
            for c in compositions(n, 26).unwrap() {
                *groups.entry(c.to_partition().parts().to_vec()).or_default() += 1;
            }
            let parts: Vec<_> = partitions(n).unwrap().collect();
            assert_eq!(groups.len(), parts.len());
            for p in parts {
                assert_eq!(BigInt::from(groups[p.parts()]), multiplicity(&p), "{p}");
            }
        }
    }

    #[test]
    fn multiplicities_sum_to_composition_count() {
        for n in 1..=20 {
            let total: BigInt = partitions(n).unwrap().map(|p| multiplicity(&p)).sum();
            assert_eq!(total, BigInt::from(composition_count(n)), "n={n}");
        }
    }

    #[test]
    fn bijection_round_trips_on_all_partitions() {
        for n in 1..=16 {
            let mut images = std::collections::HashSet::new();
            for p in partitions(n).unwrap() {
                let d = partition_to_diophantine(&p);
                assert_eq!(d.total(), p.len());
                assert_eq!(diophantine_to_partition(&d), p);
                images.insert(d);
            }
            let solutions: std::collections::HashSet<_> = diophantine(n).unwrap().collect();
            assert_eq!(images, solutions, "n={n}");
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = lists(partitions(12).unwrap()).join("\n");
        let b = lists(partitions(12).unwrap()).join("\n");
        assert_eq!(a, b);
        let a = lists(compositions(10, 26).unwrap());
        let b = lists(compositions(10, 26).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn partitions_strictly_decrease_in_lex_order() {
        let all: Vec<_> = partitions(15).unwrap().collect();
        for w in all.windows(2) {
            assert!(w[0].parts() > w[1].parts());
        }
    }
}
