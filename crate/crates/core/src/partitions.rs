//! Integer partitions, cycle types, and the product formulas attached to
//! shapes: tableaux counts, centralizer orders, padding and meta-hook tests.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A partition: non-increasing positive parts. The empty partition has
/// weight zero. Parts are stored without trailing zeros, so equality and
/// hashing work on the canonical representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u64,
}

impl Partition {
    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            weight: 0,
        }
    }

    /// Builds a partition from parts in any order; rejects non-positive parts.
    pub fn from_parts(parts: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        if parts.contains(&0) {
            return Err(Error::Parse {
                token: "0".into(),
                reason: "non-positive part".into(),
            });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let weight = parts.iter().map(|&p| p as u64).sum();
        Ok(Partition { parts, weight })
    }

    /// Parses the comma form `3,2,1` or the frequency form `2^3 1^4`
    /// (whitespace-separated `part^multiplicity` tokens, `^1` optional).
    /// Empty input is the empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts: Vec<u32> = Vec::new();
        if text.contains('^') || text.contains(char::is_whitespace) {
            for token in text.split_whitespace() {
                let (base, count) = match token.split_once('^') {
                    Some((b, c)) => (b, c),
                    None => (token, "1"),
                };
                let part = parse_part(base, token)?;
                let count: u32 = count.parse().map_err(|_| Error::Parse {
                    token: token.into(),
                    reason: "multiplicity is not a non-negative integer".into(),
                })?;
                parts.extend(std::iter::repeat_n(part, count as usize));
            }
        } else {
            for token in text.split(',') {
                parts.push(parse_part(token.trim(), token.trim())?);
            }
        }
        Partition::from_parts(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Number of parts (rows).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the diagram. An involution.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 0..cols {
            let count = self.parts.iter().take_while(|&&p| p as usize > c).count();
            parts.push(count as u32);
        }
        Partition {
            parts,
            weight: self.weight,
        }
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut multiplicities = BTreeMap::new();
        for &p in &self.parts {
            *multiplicities.entry(p).or_insert(0u32) += 1;
        }
        CycleType { multiplicities }
    }

    /// Appends `n - |self|` ones. `self` plays the role of the fixed prefix
    /// whose parts must all be at least 2.
    pub fn pad_with_ones(&self, n: u64) -> Result<Partition> {
        if self.parts.iter().any(|&p| p < 2) {
            return Err(Error::InvalidRequest(
                "prefix partition must have all parts >= 2".into(),
            ));
        }
        if n < self.weight {
            return Err(Error::InvalidRequest(format!(
                "cannot pad weight {} up to {}",
                self.weight, n
            )));
        }
        let ones = (n - self.weight) as usize;
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, ones));
        Ok(Partition { parts, weight: n })
    }

    /// True iff the diagram has no cell in row k+1, column l+1, i.e. the
    /// (k+1)-th part is at most l.
    pub fn in_meta_hook(&self, k: usize, l: u32) -> bool {
        self.part(k) <= l
    }

    /// True iff the shape is a hook (j, 1, 1, ..., 1).
    pub fn is_hook(&self) -> bool {
        self.in_meta_hook(1, 1) && !self.is_empty()
    }
}

fn parse_part(s: &str, token: &str) -> Result<u32> {
    let v: i64 = s.parse().map_err(|_| Error::Parse {
        token: token.into(),
        reason: "not an integer".into(),
    })?;
    if v <= 0 {
        return Err(Error::Parse {
            token: token.into(),
            reason: "non-positive part".into(),
        });
    }
    Ok(v as u32)
}

impl fmt::Display for Partition {
    /// Canonical comma form; the empty partition prints as nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Frequency notation for a partition: part size -> multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleType {
    multiplicities: BTreeMap<u32, u32>,
}

impl CycleType {
    pub fn multiplicities(&self) -> &BTreeMap<u32, u32> {
        &self.multiplicities
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.multiplicities.get(&part).copied().unwrap_or(0)
    }

    /// Expands back to the partition (sorted non-increasing).
    pub fn expand(&self) -> Partition {
        let mut parts = Vec::new();
        for (&p, &a) in self.multiplicities.iter().rev() {
            parts.extend(std::iter::repeat_n(p, a as usize));
        }
        let weight = parts.iter().map(|&p| p as u64).sum();
        Partition { parts, weight }
    }

    /// The order of the centralizer of a permutation with this cycle type:
    /// the product over part sizes i of i^(a_i) * a_i!.
    pub fn centralizer_order(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (&i, &a) in &self.multiplicities {
            for _ in 0..a {
                acc *= i;
            }
            acc *= factorial(a as u64);
        }
        acc
    }
}

/// Centralizer order straight from a partition's cycle type.
pub fn centralizer_order(mu: &Partition) -> BigInt {
    mu.cycle_type().centralizer_order()
}

/// Streams every partition of `n` with at most `max_parts` parts
/// (`None` = unbounded), each exactly once, in reverse-lexicographic order:
/// (n) first, all-ones last.
pub fn partitions_of(n: u64, max_parts: Option<usize>) -> PartitionIter {
    PartitionIter {
        n,
        max_parts: max_parts.unwrap_or(usize::MAX),
        state: IterState::Fresh,
    }
}

pub struct PartitionIter {
    n: u64,
    max_parts: usize,
    state: IterState,
}

enum IterState {
    Fresh,
    Running(Vec<u64>),
    Done,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        match std::mem::replace(&mut self.state, IterState::Done) {
            IterState::Fresh => {
                if self.n == 0 {
                    // weight 0: only the empty partition
                    self.state = IterState::Done;
                    return Some(Partition::empty());
                }
                if self.max_parts == 0 {
                    return None;
                }
                let first = vec![self.n];
                self.state = IterState::Running(first.clone());
                Some(to_partition(&first))
            }
            IterState::Running(cur) => match next_bounded(&cur, self.max_parts) {
                Some(next) => {
                    let item = to_partition(&next);
                    self.state = IterState::Running(next);
                    Some(item)
                }
                None => None,
            },
            IterState::Done => None,
        }
    }
}

fn to_partition(parts: &[u64]) -> Partition {
    Partition {
        parts: parts.iter().map(|&p| p as u32).collect(),
        weight: parts.iter().sum(),
    }
}

/// Reverse-lexicographic successor among partitions with at most
/// `max_parts` parts, or None when `cur` is the last one.
///
/// Scans for the rightmost position whose part can be decremented such
/// that the freed weight still fits into the remaining positions; the new
/// tail is the rev-lex-greatest filling (greedy blocks of the new part).
fn next_bounded(cur: &[u64], max_parts: usize) -> Option<Vec<u64>> {
    for i in (0..cur.len()).rev() {
        let v = cur[i] - 1;
        if v == 0 {
            continue;
        }
        let suffix: u64 = cur[i..].iter().sum();
        let w = suffix - v;
        let slots = (max_parts - i - 1) as u64;
        // ceil(w / v) parts of size <= v needed for the tail
        if w.div_ceil(v) > slots {
            continue;
        }
        let mut next = cur[..i].to_vec();
        next.push(v);
        let mut rest = w;
        while rest > 0 {
            let p = rest.min(v);
            next.push(p);
            rest -= p;
        }
        return Some(next);
    }
    None
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Number of standard Young tableaux of the shape, by the determinant-free
/// product form: prod_{i<j} (l_i - l_j) * n! / prod_i l_i! with
/// l_i = lambda_i + r - i. Exact integer arithmetic throughout; the large
/// factorial quotient n!/l_1! is telescoped before the remaining division.
pub fn f_lambda(shape: &Partition) -> BigInt {
    let r = shape.len();
    if r == 0 {
        return BigInt::one();
    }
    let n = shape.weight();
    let ells: Vec<u64> = (0..r)
        .map(|i| shape.part(i) as u64 + (r - i - 1) as u64)
        .collect();
    let mut num = BigInt::one();
    for i in 0..r {
        for j in (i + 1)..r {
            num *= ells[i] - ells[j];
        }
    }
    // l_1 <= n always (each of the other r-1 parts is >= 1)
    debug_assert!(ells[0] <= n);
    for k in (ells[0] + 1)..=n {
        num *= k;
    }
    let mut den = BigInt::one();
    for &l in &ells[1..] {
        den *= factorial(l);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn p(text: &str) -> Partition {
        Partition::parse(text).unwrap()
    }

    #[test]
    fn parse_comma_and_frequency_forms() {
        assert_eq!(p("3,2").parts(), &[3, 2]);
        assert_eq!(p("2^3 1^4").parts(), &[2, 2, 2, 1, 1, 1, 1]);
        assert_eq!(p("3^1 2^1 1^1").parts(), &[3, 2, 1]);
        assert_eq!(p("1,3,2").parts(), &[3, 2, 1]); // order irrelevant
        assert_eq!(p(""), Partition::empty());
        assert!(matches!(
            Partition::parse("0,2"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Partition::parse("2,x"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Partition::parse("2^-1"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn display_is_comma_form() {
        assert_eq!(p("2^2 1^1").to_string(), "2,2,1");
        assert_eq!(Partition::empty().to_string(), "");
    }

    #[test]
    fn enumeration_small_cases() {
        let got: Vec<Partition> = partitions_of(4, Some(2)).collect();
        assert_eq!(got, vec![p("4"), p("3,1"), p("2,2")]);

        assert_eq!(partitions_of(4, None).count(), 5);
        assert_eq!(
            partitions_of(0, None).collect::<Vec<_>>(),
            vec![Partition::empty()]
        );
        assert_eq!(partitions_of(3, Some(0)).count(), 0);
    }

    #[test]
    fn enumeration_is_reverse_lexicographic_and_duplicate_free() {
        for n in 0..=12u64 {
            for r in [1, 2, 3, 5, usize::MAX] {
                let all: Vec<Partition> = partitions_of(n, Some(r)).collect();
                for w in all.windows(2) {
                    assert!(w[0].parts() > w[1].parts(), "order violated at n={n}");
                }
                for q in &all {
                    assert_eq!(q.weight(), n);
                    assert!(q.len() <= r);
                }
                // duplicate-free follows from strict ordering; cross-check count
                let unbounded = partitions_of(n, None)
                    .filter(|q| q.len() <= r)
                    .count();
                assert_eq!(all.len(), unbounded);
            }
        }
    }

    #[test]
    fn conjugate_examples_and_involution() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("2,2").conjugate(), p("2,2"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for n in 0..=9u64 {
            for q in partitions_of(n, None) {
                assert_eq!(q.conjugate().conjugate(), q);
            }
        }
    }

    #[test]
    fn cycle_type_round_trips() {
        for n in 0..=9u64 {
            for q in partitions_of(n, None) {
                assert_eq!(q.cycle_type().expand(), q);
            }
        }
    }

    /// Brute-force SYT count: strip one outer corner at a time.
    fn syt_count(parts: &[u32]) -> u64 {
        if parts.is_empty() {
            return 1;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let is_corner = parts[i] > 0 && (i + 1 == parts.len() || parts[i + 1] < parts[i]);
            if !is_corner {
                continue;
            }
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            if smaller[i] == 0 {
                smaller.remove(i);
            }
            total += syt_count(&smaller);
        }
        total
    }

    #[test]
    fn f_lambda_matches_brute_force_tableau_enumeration() {
        assert_eq!(f_lambda(&p("2,2")), BigInt::from(2)); // frozen from syt_count
        assert_eq!(f_lambda(&p("3,2")), BigInt::from(5));
        assert_eq!(f_lambda(&p("7")), BigInt::from(1));
        assert_eq!(f_lambda(&Partition::empty()), BigInt::from(1));
        for n in 0..=8u64 {
            for q in partitions_of(n, None) {
                assert_eq!(
                    f_lambda(&q).to_u64().unwrap(),
                    syt_count(q.parts()),
                    "shape {q}"
                );
            }
        }
    }

    #[test]
    fn f_lambda_is_conjugation_invariant() {
        for n in 0..=10u64 {
            for q in partitions_of(n, None) {
                assert_eq!(f_lambda(&q), f_lambda(&q.conjugate()));
            }
        }
    }

    #[test]
    fn f_lambda_squares_sum_to_factorial() {
        for n in 0..=10u64 {
            let sum: BigInt = partitions_of(n, None)
                .map(|q| {
                    let f = f_lambda(&q);
                    &f * &f
                })
                .sum();
            assert_eq!(sum, factorial(n));
        }
    }

    #[test]
    fn centralizer_order_examples() {
        assert_eq!(p("1,1,1,1").cycle_type().centralizer_order(), BigInt::from(24));
        assert_eq!(p("2,1,1").cycle_type().centralizer_order(), BigInt::from(4));
        assert_eq!(
            Partition::empty().cycle_type().centralizer_order(),
            BigInt::from(1)
        );
    }

    #[test]
    fn pad_with_ones_examples() {
        assert_eq!(p("3,2").pad_with_ones(7).unwrap(), p("3,2,1,1"));
        assert_eq!(Partition::empty().pad_with_ones(5).unwrap(), p("1,1,1,1,1"));
        assert!(p("2").pad_with_ones(1).is_err());
        assert!(p("2,1").pad_with_ones(5).is_err()); // part 1 in prefix
    }

    #[test]
    fn meta_hook_membership() {
        assert!(p("5,1").in_meta_hook(1, 1));
        assert!(!p("2,2").in_meta_hook(1, 1));
        assert!(p("4").in_meta_hook(1, 0));
        assert!(!p("4,2,1").in_meta_hook(2, 0));
        assert!(p("4,2").in_meta_hook(2, 0));
        assert!(p("5,1").is_hook());
        assert!(!p("2,2").is_hook());
    }
}
