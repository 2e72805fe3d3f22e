//! Quasi-symmetric functions in the monomial basis and their graded dual,
//! noncommutative symmetric functions in the complete basis.

use std::fmt;

use num_traits::{One, Zero};

use crate::composition::{compositions_of, Composition};
use crate::hopf::{Elem, GradedHopf};
use crate::lincomb::{integer, LinComb, Rational};
use crate::series::{expand_truncated, TruncatedPoly};

/// QSym with basis `M_I`: quasi-shuffle product, deconcatenation coproduct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSym;

/// NSym with basis `S_I = S_{i1}⋯S_{ik}`, dual to `M_I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NSym;

pub type QSymElement = Elem<QSym>;
pub type NSymElement = Elem<NSym>;

/// Quasi-shuffle (stuffle) of two compositions.
pub fn quasi_shuffle(a: &[u32], b: &[u32]) -> LinComb<Composition> {
    let (Some((&x, rest_a)), Some((&y, rest_b))) = (a.split_first(), b.split_first()) else {
        let rest = if a.is_empty() { b } else { a };
        return LinComb::basis(Composition::from_parts_unchecked(rest.to_vec()));
    };
    let prepend = |head: u32, lc: LinComb<Composition>| -> LinComb<Composition> {
        lc.map_linear(|c| {
            let mut parts = vec![head];
            parts.extend_from_slice(c.parts());
            LinComb::basis(Composition::from_parts_unchecked(parts))
        })
    };
    let mut out = prepend(x, quasi_shuffle(rest_a, b));
    out += &prepend(y, quasi_shuffle(a, rest_b));
    out += &prepend(x + y, quasi_shuffle(rest_a, rest_b));
    out
}

fn deconcatenation(c: &Composition) -> LinComb<(Composition, Composition)> {
    (0..=c.len()).map(|i| (c.split_at(i), Rational::one())).collect()
}

fn fmt_tagged(tag: &str, c: &Composition, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}{}", tag, c)
}

impl GradedHopf for QSym {
    type Basis = Composition;

    fn one() -> Composition {
        Composition::empty()
    }

    fn degree(b: &Composition) -> usize {
        b.weight() as usize
    }

    fn mul_basis(a: &Composition, b: &Composition) -> LinComb<Composition> {
        quasi_shuffle(a.parts(), b.parts())
    }

    fn coproduct_basis(b: &Composition) -> LinComb<(Composition, Composition)> {
        deconcatenation(b)
    }

    fn fmt_basis(b: &Composition, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tagged("M", b, f)
    }
}

impl GradedHopf for NSym {
    type Basis = Composition;

    fn one() -> Composition {
        Composition::empty()
    }

    fn degree(b: &Composition) -> usize {
        b.weight() as usize
    }

    fn mul_basis(a: &Composition, b: &Composition) -> LinComb<Composition> {
        LinComb::basis(a.concat(b))
    }

    /// `Δ(S_n) = Σ_{i+j=n} S_i ⊗ S_j`, extended multiplicatively.
    fn coproduct_basis(b: &Composition) -> LinComb<(Composition, Composition)> {
        let mut splits: Vec<(Vec<u32>, Vec<u32>)> = vec![(Vec::new(), Vec::new())];
        for &p in b.parts() {
            let mut next = Vec::with_capacity(splits.len() * (p as usize + 1));
            for (l, r) in &splits {
                for i in 0..=p {
                    let mut l = l.clone();
                    let mut r = r.clone();
                    if i > 0 {
                        l.push(i);
                    }
                    if i < p {
                        r.push(p - i);
                    }
                    next.push((l, r));
                }
            }
            splits = next;
        }
        splits
            .into_iter()
            .map(|(l, r)| {
                (
                    (Composition::from_parts_unchecked(l), Composition::from_parts_unchecked(r)),
                    Rational::one(),
                )
            })
            .collect()
    }

    fn fmt_basis(b: &Composition, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tagged("S", b, f)
    }
}

impl QSymElement {
    pub fn monomial(parts: &[u32]) -> crate::Result<Self> {
        Ok(Self::basis(Composition::new(parts.to_vec())?))
    }

    /// Truncated series expansion, see [`expand_truncated`].
    pub fn expand(&self, num_vars: usize, max_deg: u32) -> TruncatedPoly {
        expand_truncated(self.terms(), num_vars, max_deg)
    }

    /// Coefficients are constant on rearrangement classes of compositions.
    pub fn is_symmetric(&self) -> bool {
        self.terms().iter().all(|(comp, c)| {
            comp.sorted_partition()
                .rearrangements()
                .iter()
                .all(|r| self.coeff(r) == *c)
        })
    }
}

impl NSymElement {
    pub fn complete(parts: &[u32]) -> crate::Result<Self> {
        Ok(Self::basis(Composition::new(parts.to_vec())?))
    }

    /// The product `e_{i1}⋯e_{ik}` expanded in the `S` basis.
    pub fn elementary(parts: &[u32]) -> crate::Result<Self> {
        let word = Composition::new(parts.to_vec())?;
        Ok(Self::from_e_basis(&LinComb::basis(word)))
    }

    /// Converts coordinates in the `e`-word basis into the `S` basis via
    /// `e_n = Σ_{I⊨n} (-1)^{n-ℓ(I)} S_I`.
    pub fn from_e_basis(words: &LinComb<Composition>) -> Self {
        Self::new(words.map_linear(sign_expansion_of_word))
    }

    /// Coordinates in the `e`-word basis, using the same involutive
    /// expansion `S_n = Σ_{I⊨n} (-1)^{n-ℓ(I)} e_I`.
    pub fn to_e_basis(&self) -> LinComb<Composition> {
        self.terms().map_linear(sign_expansion_of_word)
    }
}

/// `Σ_{I⊨n} (-1)^{n-ℓ(I)} X_I` for a single generator index `n`.
fn sign_expansion(n: u32) -> LinComb<Composition> {
    compositions_of(n)
        .into_iter()
        .map(|c| {
            let sign = if (n as usize - c.len()).is_multiple_of(2) { 1 } else { -1 };
            (c, integer(sign))
        })
        .collect()
}

fn sign_expansion_of_word(w: &Composition) -> LinComb<Composition> {
    w.parts().iter().fold(LinComb::basis(Composition::empty()), |acc, &p| {
        acc.bilinear(&sign_expansion(p), |a, b| LinComb::basis(a.concat(b)))
    })
}

/// `⟨M_I, S_J⟩ = δ_{I,J}`.
pub fn pair_qsym_nsym(a: &QSymElement, b: &NSymElement) -> Rational {
    a.terms().iter().fold(Rational::zero(), |acc, (comp, c)| acc + c * b.coeff(comp))
}

/// Pairing of `QSym ⊗ QSym` against `NSym ⊗ NSym`, factor by factor.
pub fn pair_tensor(a: &LinComb<(Composition, Composition)>, b: &LinComb<(Composition, Composition)>) -> Rational {
    a.iter().fold(Rational::zero(), |acc, (k, c)| acc + c * b.coeff(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::compositions_up_to;
    use crate::hopf::{antipode_holds, coassociativity_holds, compatibility_holds, counit_holds, TensorDisplay};

    fn m(parts: &[u32]) -> QSymElement {
        QSymElement::monomial(parts).unwrap()
    }

    fn s(parts: &[u32]) -> NSymElement {
        NSymElement::complete(parts).unwrap()
    }

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn product_examples() {
        assert_eq!(m(&[1]).mul(&m(&[1])).to_string(), "2*M(1,1) + M(2)");
        assert_eq!(m(&[2]).mul(&m(&[2])), &m(&[4]) + &m(&[2, 2]).scale(&integer(2)));
        assert_eq!(QSymElement::one().mul(&m(&[3, 1])), m(&[3, 1]));
    }

    #[test]
    fn product_matches_series_oracle() {
        // frozen from the series expansion in 4 variables at degree 2 and 4
        let lhs = m(&[1]).mul(&m(&[1])).expand(4, 2);
        let rhs = m(&[1]).expand(4, 2).mul(&m(&[1]).expand(4, 2));
        assert_eq!(lhs, rhs);
        let lhs = m(&[2]).mul(&m(&[2])).expand(4, 4);
        let rhs = m(&[2]).expand(4, 4).mul(&m(&[2]).expand(4, 4));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_examples() {
        let d = m(&[2, 1]).coproduct();
        assert_eq!(TensorDisplay::<QSym>(&d).to_string(), "M() ⊗ M(2,1) + M(2) ⊗ M(1) + M(2,1) ⊗ M()");
        let d = m(&[3]).coproduct();
        assert_eq!(d, LinComb::basis((c(&[]), c(&[3]))) + LinComb::basis((c(&[3]), c(&[]))));
        let d = m(&[1, 1]).coproduct();
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&(c(&[1]), c(&[1]))), integer(1));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(QSymElement::one().antipode(), QSymElement::one());
        assert_eq!(m(&[1]).antipode(), -&m(&[1]));
        // S(M_11) = -M_11 + M_1·M_1 = M_11 + M_2
        let s11 = m(&[1, 1]).antipode();
        assert_eq!(s11, &m(&[1, 1]) + &m(&[2]));
        assert_eq!(s11, &m(&[1]).mul(&m(&[1])) - &m(&[1, 1]));
        assert!(antipode_holds::<QSym>(&c(&[1, 1])));
    }

    /// `S(M_I) = (-1)^{ℓ(I)} Σ_{J coarser than rev(I)} M_J`.
    fn closed_antipode(comp: &Composition) -> QSymElement {
        let rev = comp.reversed();
        let k = rev.len();
        let sign = if k.is_multiple_of(2) { 1 } else { -1 };
        let mut out = LinComb::zero();
        if k == 0 {
            return QSymElement::one();
        }
        for mask in 0u32..(1 << (k - 1)) {
            let mut parts = vec![rev.parts()[0]];
            for i in 1..k {
                if mask & (1 << (i - 1)) != 0 {
                    *parts.last_mut().unwrap() += rev.parts()[i];
                } else {
                    parts.push(rev.parts()[i]);
                }
            }
            out.add_term(Composition::new(parts).unwrap(), integer(sign));
        }
        QSymElement::new(out)
    }

    #[test]
    fn antipode_matches_closed_coarsening_formula() {
        for comp in compositions_up_to(6) {
            assert_eq!(QSymElement::basis(comp.clone()).antipode(), closed_antipode(&comp), "{}", comp);
        }
    }

    #[test]
    fn hopf_axioms_qsym_and_nsym() {
        for b in compositions_up_to(5) {
            assert!(coassociativity_holds::<QSym>(&b));
            assert!(counit_holds::<QSym>(&b));
            assert!(antipode_holds::<QSym>(&b));
            assert!(coassociativity_holds::<NSym>(&b));
            assert!(counit_holds::<NSym>(&b));
            assert!(antipode_holds::<NSym>(&b));
        }
        for a in compositions_up_to(3) {
            for b in compositions_up_to(3) {
                assert!(compatibility_holds::<QSym>(&a, &b));
                assert!(compatibility_holds::<NSym>(&a, &b));
            }
        }
    }

    #[test]
    fn symmetric_detection() {
        assert!(!m(&[1, 2]).is_symmetric());
        assert!((&m(&[1, 2]) + &m(&[2, 1])).is_symmetric());
        assert!(QSymElement::one().is_symmetric());
        assert!(m(&[1, 1]).is_symmetric());
    }

    #[test]
    fn nsym_examples() {
        assert_eq!(s(&[2]).mul(&s(&[1])), s(&[2, 1]));
        assert_ne!(s(&[2]).mul(&s(&[1])), s(&[1]).mul(&s(&[2])));
        let e1 = NSymElement::elementary(&[1]).unwrap();
        assert_eq!(e1.mul(&e1), s(&[1, 1]));
        let e2 = NSymElement::elementary(&[2]).unwrap();
        assert_eq!(e2, &s(&[1, 1]) - &s(&[2]));
        // Δ(e_2) = 1⊗e_2 + e_1⊗e_1 + e_2⊗1
        let expected = &(&e2.terms().tensor(NSymElement::one().terms()) + &e1.terms().tensor(e1.terms()))
            + &NSymElement::one().terms().tensor(e2.terms());
        assert_eq!(e2.coproduct(), expected);
    }

    #[test]
    fn e_basis_round_trip() {
        for comp in compositions_up_to(5) {
            let x = NSymElement::basis(comp.clone());
            assert_eq!(NSymElement::from_e_basis(&x.to_e_basis()), x);
        }
        let s2 = s(&[2]).to_e_basis();
        assert_eq!(s2, LinComb::from_terms([(c(&[1, 1]), integer(1)), (c(&[2]), integer(-1))]));
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pair_qsym_nsym(&m(&[2, 1]), &s(&[2, 1])), integer(1));
        assert_eq!(pair_qsym_nsym(&m(&[2, 1]), &s(&[1, 2])), integer(0));
        let lhs = pair_qsym_nsym(&m(&[1]).mul(&m(&[1])), &s(&[1, 1]));
        let rhs = pair_tensor(&m(&[1]).terms().tensor(m(&[1]).terms()), &s(&[1, 1]).coproduct());
        assert_eq!(lhs, integer(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_adjointness_small() {
        let basis = compositions_up_to(4);
        for a in &basis {
            for b in &basis {
                let prod = QSymElement::basis(a.clone()).mul(&QSymElement::basis(b.clone()));
                for cc in compositions_of(a.weight() + b.weight()) {
                    let lhs = pair_qsym_nsym(&prod, &NSymElement::basis(cc.clone()));
                    let rhs = NSymElement::basis(cc).coproduct().coeff(&(a.clone(), b.clone()));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
