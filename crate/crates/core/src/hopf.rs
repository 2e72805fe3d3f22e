//! Graded connected Hopf algebras given by structure constants on a basis.
//!
//! Each algebra in the crate implements [`GradedHopf`] on a marker type. The
//! antipode and the axiom checks are written once here against that trait.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};

use num_traits::One;

use crate::lincomb::{LinComb, Rational};

pub trait GradedHopf: Clone + fmt::Debug + PartialEq + Eq + Hash {
    type Basis: Clone + Ord + Hash + fmt::Debug;

    /// The basis element serving as unit (degree 0).
    fn one() -> Self::Basis;
    fn degree(b: &Self::Basis) -> usize;
    fn mul_basis(a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;
    fn coproduct_basis(b: &Self::Basis) -> LinComb<(Self::Basis, Self::Basis)>;
    fn fmt_basis(b: &Self::Basis, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

pub type Tensor2<B> = LinComb<(B, B)>;
pub type Tensor3<B> = LinComb<(B, B, B)>;

pub fn mul<A: GradedHopf>(a: &LinComb<A::Basis>, b: &LinComb<A::Basis>) -> LinComb<A::Basis> {
    a.bilinear(b, A::mul_basis)
}

pub fn coproduct<A: GradedHopf>(a: &LinComb<A::Basis>) -> Tensor2<A::Basis> {
    a.map_linear(A::coproduct_basis)
}

pub fn counit<A: GradedHopf>(a: &LinComb<A::Basis>) -> Rational {
    a.coeff(&A::one())
}

/// Componentwise product in `A ⊗ A`.
pub fn mul_tensor<A: GradedHopf>(x: &Tensor2<A::Basis>, y: &Tensor2<A::Basis>) -> Tensor2<A::Basis> {
    x.bilinear(y, |(a, b), (c, d)| A::mul_basis(a, c).tensor(&A::mul_basis(b, d)))
}

/// Antipode by the recursion `S(x) = -Σ S(x')x''` over the coproduct terms
/// with `x'' ≠ 1`.
pub fn antipode<A: GradedHopf>(a: &LinComb<A::Basis>) -> LinComb<A::Basis> {
    let mut memo = HashMap::new();
    a.map_linear(|b| antipode_basis::<A>(b, &mut memo))
}

fn antipode_basis<A: GradedHopf>(
    b: &A::Basis,
    memo: &mut HashMap<A::Basis, LinComb<A::Basis>>,
) -> LinComb<A::Basis> {
    if let Some(s) = memo.get(b) {
        return s.clone();
    }
    let one = A::one();
    let result = if *b == one {
        LinComb::basis(one)
    } else {
        let mut out = LinComb::zero();
        for ((left, right), c) in A::coproduct_basis(b).iter() {
            if *right == one {
                debug_assert!(left == b && c.is_one(), "coproduct is not connected at {:?}", b);
                continue;
            }
            let s_left = antipode_basis::<A>(left, memo);
            out.add_scaled(&mul::<A>(&s_left, &LinComb::basis(right.clone())), &-c.clone());
        }
        out
    };
    memo.insert(b.clone(), result.clone());
    result
}

pub fn coassociativity_holds<A: GradedHopf>(b: &A::Basis) -> bool {
    let delta = A::coproduct_basis(b);
    let left: Tensor3<A::Basis> = delta.map_linear(|(x, y)| {
        A::coproduct_basis(x).map_linear(|(p, q)| LinComb::basis((p.clone(), q.clone(), y.clone())))
    });
    let right: Tensor3<A::Basis> = delta.map_linear(|(x, y)| {
        A::coproduct_basis(y).map_linear(|(p, q)| LinComb::basis((x.clone(), p.clone(), q.clone())))
    });
    left == right
}

pub fn counit_holds<A: GradedHopf>(b: &A::Basis) -> bool {
    let one = A::one();
    let delta = A::coproduct_basis(b);
    let left = delta.map_linear(|(x, y)| if *x == one { LinComb::basis(y.clone()) } else { LinComb::zero() });
    let right = delta.map_linear(|(x, y)| if *y == one { LinComb::basis(x.clone()) } else { LinComb::zero() });
    let expected = LinComb::basis(b.clone());
    left == expected && right == expected
}

/// Both convolution identities `m(S⊗id)Δ = m(id⊗S)Δ = ηε` on one basis element.
pub fn antipode_holds<A: GradedHopf>(b: &A::Basis) -> bool {
    let one = A::one();
    let delta = A::coproduct_basis(b);
    let expected = if *b == one { LinComb::basis(one) } else { LinComb::zero() };
    let left = delta.map_linear(|(x, y)| mul::<A>(&antipode::<A>(&LinComb::basis(x.clone())), &LinComb::basis(y.clone())));
    let right = delta.map_linear(|(x, y)| mul::<A>(&LinComb::basis(x.clone()), &antipode::<A>(&LinComb::basis(y.clone()))));
    left == expected && right == expected
}

pub fn compatibility_holds<A: GradedHopf>(a: &A::Basis, b: &A::Basis) -> bool {
    let lhs = coproduct::<A>(&A::mul_basis(a, b));
    let rhs = mul_tensor::<A>(&A::coproduct_basis(a), &A::coproduct_basis(b));
    lhs == rhs
}

pub fn associativity_holds<A: GradedHopf>(a: &A::Basis, b: &A::Basis, c: &A::Basis) -> bool {
    let (a, b, c) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()), LinComb::basis(c.clone()));
    mul::<A>(&mul::<A>(&a, &b), &c) == mul::<A>(&a, &mul::<A>(&b, &c))
}

pub fn unit_holds<A: GradedHopf>(b: &A::Basis) -> bool {
    let one = A::one();
    let expected = LinComb::basis(b.clone());
    A::mul_basis(&one, b) == expected && A::mul_basis(b, &one) == expected
}

/// An element of the algebra `A`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Elem<A: GradedHopf> {
    terms: LinComb<A::Basis>,
    algebra: PhantomData<A>,
}

impl<A: GradedHopf> Default for Elem<A> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<A: GradedHopf> Elem<A> {
    pub fn new(terms: LinComb<A::Basis>) -> Self {
        Self { terms, algebra: PhantomData }
    }

    pub fn zero() -> Self {
        Self::new(LinComb::zero())
    }

    pub fn one() -> Self {
        Self::basis(A::one())
    }

    pub fn basis(b: A::Basis) -> Self {
        Self::new(LinComb::basis(b))
    }

    pub fn terms(&self) -> &LinComb<A::Basis> {
        &self.terms
    }

    pub fn into_terms(self) -> LinComb<A::Basis> {
        self.terms
    }

    pub fn coeff(&self, b: &A::Basis) -> Rational {
        self.terms.coeff(b)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.terms.scale(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(mul::<A>(&self.terms, &other.terms))
    }

    pub fn coproduct(&self) -> Tensor2<A::Basis> {
        coproduct::<A>(&self.terms)
    }

    pub fn antipode(&self) -> Self {
        Self::new(antipode::<A>(&self.terms))
    }

    pub fn counit(&self) -> Rational {
        counit::<A>(&self.terms)
    }

    /// `Some(d)` if every term has degree `d`; the zero element has no degree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(A::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Terms of degree exactly `d`.
    pub fn component(&self, d: usize) -> Self {
        Self::new(self.terms.filter(|b| A::degree(b) == d))
    }
}

impl<A: GradedHopf> fmt::Display for Elem<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.terms.fmt_with(f, A::fmt_basis)
    }
}

impl<A: GradedHopf> fmt::Debug for Elem<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<A: GradedHopf> Add for &Elem<A> {
    type Output = Elem<A>;
    fn add(self, rhs: Self) -> Elem<A> {
        Elem::new(&self.terms + &rhs.terms)
    }
}

impl<A: GradedHopf> Sub for &Elem<A> {
    type Output = Elem<A>;
    fn sub(self, rhs: Self) -> Elem<A> {
        Elem::new(&self.terms - &rhs.terms)
    }
}

impl<A: GradedHopf> Neg for &Elem<A> {
    type Output = Elem<A>;
    fn neg(self) -> Elem<A> {
        Elem::new(-&self.terms)
    }
}

/// Display adapter for an element of `A ⊗ A`, printed as `x ⊗ y` terms.
pub struct TensorDisplay<'a, A: GradedHopf>(pub &'a Tensor2<A::Basis>);

impl<A: GradedHopf> fmt::Display for TensorDisplay<'_, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f, |(x, y), f| {
            A::fmt_basis(x, f)?;
            write!(f, " ⊗ ")?;
            A::fmt_basis(y, f)
        })
    }
}
