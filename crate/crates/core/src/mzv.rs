//! Multiple zeta values by truncated nested summation.
//!
//! `M_(p1,…,pk)` is sent to `ζ(pk,…,p1) = Σ_{i1>⋯>ik≥1} 1/(i1^{pk} ⋯ ik^{p1})`:
//! the largest summation index carries the last part of the composition.

use std::collections::HashMap;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::composition::Composition;
use crate::error::{invalid, Error, Result};
use crate::lincomb::LinComb;
use crate::words::{word_to_comp, AdmissibleWord, Word};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ZetaValue {
    pub value: f64,
    /// `|value(N) - value(⌊N/2⌋)|`.
    pub error_estimate: f64,
    #[serde(rename = "N")]
    pub truncation_n: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RelationReport {
    pub value: f64,
    pub error_estimate: f64,
    #[serde(rename = "N")]
    pub truncation_n: u64,
    pub pass: bool,
}

/// Anything that indexes a multiple zeta value.
pub trait ZetaIndex {
    fn zeta_composition(&self) -> Result<Composition>;
}

impl ZetaIndex for Composition {
    fn zeta_composition(&self) -> Result<Composition> {
        if !self.is_admissible() {
            return Err(Error::DivergentSeries(format!(
                "M{} is not admissible (last part must exceed 1)",
                self
            )));
        }
        Ok(self.clone())
    }
}

impl ZetaIndex for AdmissibleWord {
    fn zeta_composition(&self) -> Result<Composition> {
        Ok(word_to_comp(self))
    }
}

impl ZetaIndex for Word {
    fn zeta_composition(&self) -> Result<Composition> {
        AdmissibleWord::new(self.clone())
            .map(|w| word_to_comp(&w))
            .map_err(|_| Error::DivergentSeries(format!("W({}) is not in H0", self)))
    }
}

/// Truncated sums at `N` and `⌊N/2⌋`, computed in one sweep.
///
/// Level `j` holds `T_j(n) = Σ_{m≤n} m^{-p_j} T_{j-1}(m-1)` with `T_0 ≡ 1`;
/// after processing `p1, …, pk` in order, `T_k(N)` is the nested sum.
fn nested_sums(parts: &[u32], n: usize) -> (f64, f64) {
    if parts.is_empty() {
        return (1.0, 1.0);
    }
    let mut prev = vec![1.0f64; n + 1];
    let mut cur = vec![0.0f64; n + 1];
    for &p in parts {
        cur[0] = 0.0;
        for m in 1..=n {
            cur[m] = cur[m - 1] + prev[m - 1] / (m as f64).powi(p as i32);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    (prev[n], prev[n / 2])
}

pub fn zeta_truncated(index: &Composition, n: u64) -> Result<ZetaValue> {
    let comp = index.zeta_composition()?;
    if n < 2 {
        return invalid(format!("truncation N must be at least 2, got {}", n));
    }
    let (full, half) = nested_sums(comp.parts(), n as usize);
    Ok(ZetaValue { value: full, error_estimate: (full - half).abs(), truncation_n: n })
}

/// Linear extension of [`zeta_truncated`]; each distinct composition is summed once.
pub fn zeta_of_lincomb<B: ZetaIndex + Ord + Clone>(a: &LinComb<B>, n: u64) -> Result<ZetaValue> {
    ZetaEvaluator::new(n)?.eval(a)
}

/// Truncated evaluation at a fixed `N`, remembering every composition already summed.
#[derive(Debug)]
pub struct ZetaEvaluator {
    n: u64,
    cache: HashMap<Composition, (f64, f64)>,
}

impl ZetaEvaluator {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return invalid(format!("truncation N must be at least 2, got {}", n));
        }
        Ok(Self { n, cache: HashMap::new() })
    }

    pub fn truncation_n(&self) -> u64 {
        self.n
    }

    pub fn eval<B: ZetaIndex + Ord + Clone>(&mut self, a: &LinComb<B>) -> Result<ZetaValue> {
        let (mut full, mut half) = (0.0, 0.0);
        for (b, c) in a.iter() {
            let comp = b.zeta_composition()?;
            let n = self.n as usize;
            let (f, h) = *self.cache.entry(comp).or_insert_with_key(|comp| nested_sums(comp.parts(), n));
            let c = c.to_f64().unwrap_or(f64::NAN);
            full += c * f;
            half += c * h;
        }
        Ok(ZetaValue { value: full, error_estimate: (full - half).abs(), truncation_n: self.n })
    }

    /// Passes iff `|value| <= max(tol, 3·error_estimate)`.
    pub fn verify<B: ZetaIndex + Ord + Clone>(&mut self, a: &LinComb<B>, tol: f64) -> Result<RelationReport> {
        let z = self.eval(a)?;
        Ok(RelationReport {
            value: z.value,
            error_estimate: z.error_estimate,
            truncation_n: z.truncation_n,
            pass: z.value.abs() <= tol.max(3.0 * z.error_estimate),
        })
    }
}

/// Passes iff `|value| <= max(tol, 3·error_estimate)`.
pub fn verify_relation<B: ZetaIndex + Ord + Clone>(a: &LinComb<B>, n: u64, tol: f64) -> Result<RelationReport> {
    ZetaEvaluator::new(n)?.verify(a, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::integer;
    use crate::words::{double_shuffle_delta, ohno_action, tau_admissible};

    fn c(p: &[u32]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    const N: u64 = 1_000_000;

    #[test]
    fn zeta_two() {
        let z = zeta_truncated(&c(&[2]), N).unwrap();
        assert!((z.value - std::f64::consts::PI.powi(2) / 6.0).abs() < 2e-6);
        assert!(z.error_estimate < 2e-6);
        assert_eq!(z.truncation_n, N);
    }

    #[test]
    fn euler_relation() {
        let a = zeta_truncated(&c(&[1, 2]), N).unwrap();
        let b = zeta_truncated(&c(&[3]), N).unwrap();
        assert!((a.value - b.value).abs() < 1e-4);
        let rel = LinComb::basis(c(&[1, 2])) - LinComb::basis(c(&[3]));
        assert!(zeta_of_lincomb(&rel, N).unwrap().value.abs() < 1e-4);
    }

    #[test]
    fn empty_and_zero() {
        assert_eq!(zeta_truncated(&Composition::empty(), 10).unwrap().value, 1.0);
        let zero: LinComb<Composition> = LinComb::zero();
        assert_eq!(zeta_of_lincomb(&zero, 10).unwrap().value, 0.0);
        let rep = verify_relation(&zero, 10, 1e-4).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.value, 0.0);
    }

    #[test]
    fn errors() {
        assert!(matches!(zeta_truncated(&c(&[2, 1]), N), Err(Error::DivergentSeries(_))));
        assert!(matches!(zeta_truncated(&c(&[2]), 1), Err(Error::InvalidArgument(_))));
        let bad = LinComb::basis(c(&[2])) + LinComb::basis(c(&[1]));
        match zeta_of_lincomb(&bad, 100) {
            Err(Error::DivergentSeries(msg)) => assert!(msg.contains("M(1)")),
            other => panic!("unexpected {:?}", other),
        }
        let w: Word = "xyx".parse().unwrap();
        assert!(zeta_of_lincomb(&LinComb::basis(w), 100).is_err());
    }

    #[test]
    fn shuffle_against_stuffle_for_zeta_two_squared() {
        let words = |s: &[(&str, i64)]| -> LinComb<AdmissibleWord> {
            s.iter().map(|(w, k)| (w.parse().unwrap(), integer(*k))).collect()
        };
        let shuffle_side = zeta_of_lincomb(&words(&[("xxyy", 4), ("xyxy", 2)]), N).unwrap();
        let m2 = crate::qsym::QSymElement::monomial(&[2]).unwrap();
        let stuffle_side = zeta_of_lincomb(m2.mul(&m2).terms(), N).unwrap();
        assert!((shuffle_side.value - stuffle_side.value).abs() < 1e-4);
        let z2 = zeta_truncated(&c(&[2]), N).unwrap().value;
        assert!((stuffle_side.value - z2 * z2).abs() < 1e-12);
        let delta = double_shuffle_delta(&"xy".parse().unwrap(), &"xy".parse().unwrap()).unwrap();
        assert!(zeta_of_lincomb(&delta, N).unwrap().value.abs() < 1e-4);
    }

    #[test]
    fn verify_relation_directions() {
        let w: AdmissibleWord = "xxy".parse().unwrap();
        let rel = &ohno_action(1, &w).unwrap() - &ohno_action(1, &tau_admissible(&w)).unwrap();
        let rep = verify_relation(&rel, N, 1e-4).unwrap();
        assert!(rep.pass, "{:?}", rep);
        let bad = verify_relation(&LinComb::basis(c(&[2])), N, 1e-4).unwrap();
        assert!(!bad.pass);
        assert!((bad.value - 1.6449).abs() < 1e-3);
    }

    #[test]
    fn monotone_in_n() {
        for comp in [c(&[2]), c(&[1, 2]), c(&[1, 1, 3]), c(&[2, 2])] {
            let mut last = 0.0;
            for n in [2u64, 10, 100, 1000, 10_000] {
                let v = zeta_truncated(&comp, n).unwrap().value;
                assert!(v >= last);
                last = v;
            }
        }
    }

    #[test]
    fn truncated_values_are_stuffle_multiplicative() {
        let admissible: Vec<Composition> = crate::composition::compositions_up_to(4)
            .into_iter()
            .filter(|c| c.is_admissible() && !c.is_empty())
            .collect();
        for a in &admissible {
            for b in &admissible {
                let prod = crate::qsym::quasi_shuffle(a.parts(), b.parts());
                let lhs = zeta_of_lincomb(&prod, 100_000).unwrap().value;
                let rhs = zeta_truncated(a, 100_000).unwrap().value * zeta_truncated(b, 100_000).unwrap().value;
                assert!((lhs - rhs).abs() < 1e-3);
            }
        }
    }

    #[test]
    fn word_and_composition_agree_exactly() {
        let w: AdmissibleWord = "xxyxy".parse().unwrap();
        let via_word = zeta_of_lincomb(&LinComb::basis(w.clone()), 5000).unwrap();
        let via_comp = zeta_truncated(&word_to_comp(&w), 5000).unwrap();
        assert_eq!(via_word.value.to_bits(), via_comp.value.to_bits());
    }
}
