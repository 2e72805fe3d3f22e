//! Truncated polynomials in commuting variables `t1..tv`, used as the
//! independent oracle for products and symmetry tests.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::composition::{compositions_up_to, Composition};
use crate::lincomb::{LinComb, Rational};

/// Exact polynomial with every term of total degree `<= max_deg`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedPoly {
    num_vars: usize,
    max_deg: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl TruncatedPoly {
    pub fn zero(num_vars: usize, max_deg: u32) -> Self {
        assert!(num_vars >= 1, "a truncated polynomial needs at least one variable");
        Self { num_vars, max_deg, terms: BTreeMap::new() }
    }

    pub fn one(num_vars: usize, max_deg: u32) -> Self {
        let mut p = Self::zero(num_vars, max_deg);
        p.add_monomial(vec![0; num_vars], Rational::one());
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn max_deg(&self) -> u32 {
        self.max_deg
    }

    pub fn add_monomial(&mut self, exponents: Vec<u32>, c: Rational) {
        assert_eq!(exponents.len(), self.num_vars);
        if exponents.iter().sum::<u32>() > self.max_deg || c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_monomial(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.num_vars, self.max_deg);
        for (e, x) in &self.terms {
            out.add_monomial(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            let d1: u32 = e1.iter().sum();
            for (e2, c2) in &other.terms {
                if d1 + e2.iter().sum::<u32>() > self.max_deg {
                    continue;
                }
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Self { num_vars: self.num_vars, max_deg: self.max_deg, terms: acc }
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            self.num_vars == other.num_vars && self.max_deg == other.max_deg,
            "truncation windows differ"
        );
    }

    /// Within the truncation window: the coefficient of `t_{i1}^{p1}⋯t_{ik}^{pk}`
    /// equals that of `t_1^{p1}⋯t_k^{pk}` for every `i1 < ⋯ < ik`.
    pub fn is_quasi_symmetric(&self) -> bool {
        // Every monomial present must match its front-packed form, and every
        // front-packed monomial present must appear at all spreads.
        let packed = |e: &Vec<u32>| -> Vec<u32> {
            let mut p: Vec<u32> = e.iter().copied().filter(|&x| x > 0).collect();
            p.resize(self.num_vars, 0);
            p
        };
        for (e, c) in &self.terms {
            if self.coeff(&packed(e)) != *c {
                return false;
            }
        }
        for comp in compositions_up_to(self.max_deg) {
            if comp.len() > self.num_vars {
                continue;
            }
            let mut front = comp.parts().to_vec();
            front.resize(self.num_vars, 0);
            let c = self.coeff(&front);
            if c.is_zero() {
                continue;
            }
            let mut ok = true;
            for_each_increasing_tuple(self.num_vars, comp.len(), |idx| {
                let mut e = vec![0; self.num_vars];
                for (&i, &p) in idx.iter().zip(comp.parts()) {
                    e[i] = p;
                }
                if self.coeff(&e) != c {
                    ok = false;
                }
            });
            if !ok {
                return false;
            }
        }
        true
    }

    /// Invariant under every permutation of the variables.
    pub fn is_symmetric(&self) -> bool {
        let sorted = |e: &Vec<u32>| -> Vec<u32> {
            let mut s = e.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            s
        };
        let mut classes: BTreeMap<Vec<u32>, (Rational, usize)> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key = sorted(e);
            match classes.get_mut(&key) {
                Some((first, count)) => {
                    if first != c {
                        return false;
                    }
                    *count += 1;
                }
                None => {
                    classes.insert(key, (c.clone(), 1));
                }
            }
        }
        classes.iter().all(|(key, (_, count))| *count == distinct_permutations(key))
    }
}

fn distinct_permutations(e: &[u32]) -> usize {
    let fact = |n: usize| (1..=n).product::<usize>();
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &x in e {
        *counts.entry(x).or_default() += 1;
    }
    let denom: usize = counts.values().map(|&c| fact(c)).product();
    fact(e.len()) / denom
}

fn for_each_increasing_tuple<F: FnMut(&[usize])>(n: usize, k: usize, mut f: F) {
    fn go<F: FnMut(&[usize])>(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut F) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::new(), &mut f);
}

/// Expands `Σ c_I M_I` into the first `num_vars` variables, keeping degrees `<= max_deg`.
pub fn expand_truncated(f: &LinComb<Composition>, num_vars: usize, max_deg: u32) -> TruncatedPoly {
    let mut out = TruncatedPoly::zero(num_vars, max_deg);
    for (comp, c) in f.iter() {
        if comp.weight() > max_deg || comp.len() > num_vars {
            continue;
        }
        for_each_increasing_tuple(num_vars, comp.len(), |idx| {
            let mut e = vec![0; num_vars];
            for (&i, &p) in idx.iter().zip(comp.parts()) {
                e[i] = p;
            }
            out.add_monomial(e, c.clone());
        });
    }
    out
}

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        for (i, (e, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mag = c.abs();
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| if x == 1 { format!("t{}", v + 1) } else { format!("t{}^{}", v + 1, x) })
                .collect();
            if monomial.is_empty() {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                write!(f, "{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::integer;

    fn m(parts: &[u32]) -> LinComb<Composition> {
        LinComb::basis(Composition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn expand_single_part() {
        assert_eq!(expand_truncated(&m(&[1]), 2, 1).to_string(), "t1 + t2");
        assert_eq!(expand_truncated(&m(&[2]), 3, 2).to_string(), "t1^2 + t2^2 + t3^2");
    }

    #[test]
    fn expand_two_parts_two_vars() {
        let p = expand_truncated(&m(&[1, 2]), 2, 3);
        assert_eq!(p.to_string(), "t1*t2^2");
        assert_eq!(p.coeff(&[1, 2]), integer(1));
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn truncation_drops_high_degree() {
        assert!(expand_truncated(&m(&[3]), 2, 2).is_empty());
    }

    #[test]
    fn quasi_symmetry() {
        assert!(expand_truncated(&m(&[1, 2]), 3, 3).is_quasi_symmetric());
        let mut lone = TruncatedPoly::zero(3, 3);
        lone.add_monomial(vec![1, 2, 0], integer(1));
        assert!(!lone.is_quasi_symmetric());
        // coefficient of t1*t3^2 is 0, not 1
        assert_eq!(lone.coeff(&[1, 0, 2]), integer(0));
        let sym = &m(&[1, 2]) + &m(&[2, 1]);
        let p = expand_truncated(&sym, 3, 3);
        assert!(p.is_quasi_symmetric());
        assert!(p.is_symmetric());
        assert!(!expand_truncated(&m(&[1, 2]), 3, 3).is_symmetric());
    }

    #[test]
    fn multiplication_truncates() {
        let a = expand_truncated(&m(&[1]), 2, 2);
        let sq = a.mul(&a);
        assert_eq!(sq.to_string(), "t1^2 + 2*t1*t2 + t2^2");
        let cube = sq.mul(&a);
        assert!(cube.is_empty());
    }
}
