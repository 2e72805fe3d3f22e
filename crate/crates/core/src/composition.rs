//! Compositions, partitions and Lyndon compositions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// A finite sequence of positive integers.
///
/// Ordered by weight first and then lexicographically on the parts, which is
/// also the print order of every linear combination keyed by compositions.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return invalid(format!("composition parts must be positive: {:?}", parts));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Basis condition for the convergent subalgebra: empty, or last part > 1.
    pub fn is_admissible(&self) -> bool {
        self.0.last().is_none_or(|&p| p > 1)
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    pub fn split_at(&self, i: usize) -> (Composition, Composition) {
        (Composition(self.0[..i].to_vec()), Composition(self.0[i..].to_vec()))
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Strictly smaller than every proper cyclic rotation.
    pub fn is_lyndon(&self) -> bool {
        let n = self.0.len();
        if n == 0 {
            return false;
        }
        (1..n).all(|r| {
            let rotated = self.0[r..].iter().chain(&self.0[..r]);
            self.0.iter().cmp(rotated) == Ordering::Less
        })
    }

    pub fn sorted_partition(&self) -> Partition {
        Partition::new(self.0.clone())
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `2,1`, `(2,1)` or `()`.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = match trimmed.strip_prefix('(') {
            Some(rest) => rest.strip_suffix(')').ok_or_else(|| Error::Parse {
                pos: trimmed.len(),
                msg: "expected ')'".into(),
            })?,
            None => trimmed,
        };
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        let mut offset = 0;
        for piece in inner.split(',') {
            let p: u32 = piece.trim().parse().map_err(|_| Error::Parse {
                pos: offset,
                msg: format!("expected a positive integer, found {:?}", piece.trim()),
            })?;
            if p == 0 {
                return Err(Error::Parse { pos: offset, msg: "composition parts must be positive".into() });
            }
            parts.push(p);
            offset += piece.len() + 1;
        }
        Ok(Self(parts))
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the given parts into non-increasing order. Zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// All distinct rearrangements of the parts, in increasing composition order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut parts = self.0.clone();
        parts.sort_unstable();
        let mut out = vec![Composition(parts.clone())];
        while next_permutation(&mut parts) {
            out.push(Composition(parts.clone()));
        }
        out
    }

    /// Product of factorials of the part multiplicities.
    pub fn multiplicity_factorial(&self) -> u64 {
        let mut out = 1u64;
        let mut run = 0u64;
        for (i, p) in self.0.iter().enumerate() {
            run = if i > 0 && self.0[i - 1] == *p { run + 1 } else { 1 };
            out *= run;
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&Composition(self.0.clone()), f)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All compositions of `n`, in increasing order.
pub fn compositions_of(n: u32) -> Vec<Composition> {
    fn go(n: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for p in 1..=n {
            prefix.push(p);
            go(n - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All compositions of weight at most `max_weight`, including the empty one.
pub fn compositions_up_to(max_weight: u32) -> Vec<Composition> {
    (0..=max_weight).flat_map(compositions_of).collect()
}

/// Partitions of `n` in increasing order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Lyndon compositions of weight at most `max_weight`, sorted by weight and
/// then lexicographically.
pub fn lyndon_words(max_weight: u32) -> Result<Vec<Composition>> {
    if max_weight < 1 {
        return invalid("lyndon_words requires max_weight >= 1");
    }
    // Duval's algorithm generates Lyndon words over {1..n} of length <= n in
    // lexicographic order; keep those whose weight fits.
    let n = max_weight as usize;
    let alphabet = max_weight;
    let mut out = Vec::new();
    let mut w: Vec<u32> = vec![1];
    while !w.is_empty() {
        if w.iter().sum::<u32>() <= max_weight {
            out.push(Composition(w.clone()));
        }
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last == alphabet {
                w.pop();
            } else {
                break;
            }
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn brute_force_lyndon(max_weight: u32) -> Vec<Composition> {
        let mut out: Vec<_> = compositions_up_to(max_weight)
            .into_iter()
            .filter(|w| {
                let p = w.parts();
                let n = p.len();
                n > 0
                    && (1..n).all(|r| {
                        let rot: Vec<u32> = p[r..].iter().chain(&p[..r]).copied().collect();
                        p < &rot[..]
                    })
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn lyndon_weight_two() {
        assert_eq!(lyndon_words(2).unwrap(), vec![c(&[1]), c(&[2])]);
    }

    #[test]
    fn lyndon_membership() {
        assert!(c(&[1, 2]).is_lyndon());
        assert!(!c(&[2, 1]).is_lyndon());
        assert!(!c(&[1, 1]).is_lyndon());
    }

    #[test]
    fn lyndon_matches_rotation_oracle() {
        for w in 1..=7 {
            let fast = lyndon_words(w).unwrap();
            assert_eq!(fast, brute_force_lyndon(w), "max_weight {}", w);
            let mut dedup = fast.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), fast.len());
        }
        // counts per exact weight 1..5 from the rotation oracle
        let counts: Vec<usize> = (1..=5)
            .map(|n| brute_force_lyndon(5).iter().filter(|w| w.weight() == n).count())
            .collect();
        let fast: Vec<usize> = (1..=5)
            .map(|n| lyndon_words(5).unwrap().iter().filter(|w| w.weight() == n).count())
            .collect();
        assert_eq!(counts, fast);
        assert_eq!(counts, vec![1, 1, 2, 3, 6]);
    }

    #[test]
    fn lyndon_rejects_zero() {
        assert!(matches!(lyndon_words(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn admissibility() {
        assert!(!c(&[2, 1]).is_admissible());
        assert!(c(&[1, 2]).is_admissible());
        assert!(Composition::empty().is_admissible());
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("2,1".parse::<Composition>().unwrap(), c(&[2, 1]));
        assert_eq!("(2,1)".parse::<Composition>().unwrap(), c(&[2, 1]));
        assert_eq!("()".parse::<Composition>().unwrap(), Composition::empty());
        assert_eq!(c(&[3, 1, 2]).to_string(), "(3,1,2)");
        assert!("2,0".parse::<Composition>().is_err());
        assert!("2,a".parse::<Composition>().is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        for n in 1..=8 {
            assert_eq!(compositions_of(n).len(), 1 << (n - 1));
        }
        let p: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn rearrangements_are_distinct() {
        let p = Partition::new(vec![1, 2, 1]);
        assert_eq!(p.parts(), &[2, 1, 1]);
        assert_eq!(p.rearrangements(), vec![c(&[1, 1, 2]), c(&[1, 2, 1]), c(&[2, 1, 1])]);
        assert_eq!(p.multiplicity_factorial(), 2);
    }

    #[test]
    fn order_is_weight_then_lex() {
        assert!(c(&[3]) < c(&[1, 1, 1, 1]));
        assert!(c(&[1, 2]) < c(&[2, 1]));
        assert!(Composition::empty() < c(&[1]));
    }
}
