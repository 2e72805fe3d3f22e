//! Symmetric functions in the `m`, `e`, `h` and `p` bases.
//!
//! Transition matrices are built once per (basis, degree) by expanding the
//! basis elements as truncated polynomials in `n` variables at degree `n` and
//! reading off monomial coordinates; the reverse direction is the exact inverse.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::composition::{compositions_of, partitions_of, Composition, Partition};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::lincomb::{LinComb, Rational};
use crate::qsym::{NSymElement, QSymElement};
use crate::series::{expand_truncated, TruncatedPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymBasis {
    /// Monomial symmetric functions `m_λ`.
    M,
    /// Elementary `e_λ = e_{λ1}e_{λ2}⋯`.
    E,
    /// Complete homogeneous `h_λ`.
    H,
    /// Power sums `p_λ`.
    P,
}

impl SymBasis {
    pub fn tag(self) -> char {
        match self {
            SymBasis::M => 'm',
            SymBasis::E => 'e',
            SymBasis::H => 'h',
            SymBasis::P => 'p',
        }
    }

    pub fn from_tag(c: char) -> Option<Self> {
        match c {
            'm' => Some(SymBasis::M),
            'e' => Some(SymBasis::E),
            'h' => Some(SymBasis::H),
            'p' => Some(SymBasis::P),
            _ => None,
        }
    }
}

impl FromStr for SymBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (chars.next().and_then(SymBasis::from_tag), chars.next()) {
            (Some(b), None) => Ok(b),
            _ => Err(Error::InvalidArgument(format!("unknown symmetric basis {:?}", s))),
        }
    }
}

/// A symmetric function written in one of the four classical bases.
///
/// Equality is structural: two elements in different bases compare unequal
/// even if they represent the same function. Use [`SymElement::same_as`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymElement {
    basis: SymBasis,
    terms: LinComb<Partition>,
}

impl SymElement {
    pub fn new(basis: SymBasis, terms: LinComb<Partition>) -> Self {
        Self { basis, terms }
    }

    pub fn zero(basis: SymBasis) -> Self {
        Self::new(basis, LinComb::zero())
    }

    pub fn one(basis: SymBasis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: SymBasis, lambda: Partition) -> Self {
        Self::new(basis, LinComb::basis(lambda))
    }

    pub fn e(n: u32) -> Self {
        Self::basis_element(SymBasis::E, Partition::new(vec![n]))
    }

    pub fn h(n: u32) -> Self {
        Self::basis_element(SymBasis::H, Partition::new(vec![n]))
    }

    pub fn p(n: u32) -> Self {
        Self::basis_element(SymBasis::P, Partition::new(vec![n]))
    }

    pub fn m(parts: &[u32]) -> Self {
        Self::basis_element(SymBasis::M, Partition::new(parts.to_vec()))
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Partition> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let other = other.to_basis(self.basis);
        Self::new(self.basis, &self.terms + &other.terms)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.basis, self.terms.scale(c))
    }

    /// Equality as symmetric functions, regardless of basis.
    pub fn same_as(&self, other: &Self) -> bool {
        self.terms == other.to_basis(self.basis).terms
    }

    /// Exact change of basis.
    pub fn to_basis(&self, target: SymBasis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let mut by_degree: BTreeMap<u32, Vec<(&Partition, &Rational)>> = BTreeMap::new();
        for (lambda, c) in self.terms.iter() {
            by_degree.entry(lambda.weight()).or_default().push((lambda, c));
        }
        let mut out = LinComb::zero();
        for (n, terms) in by_degree {
            let src = transition(self.basis, n);
            let dst = transition(target, n);
            let mut coords = vec![Rational::zero(); src.partitions.len()];
            for (lambda, c) in terms {
                coords[src.index[lambda]] += c;
            }
            let in_m = linalg::mat_vec(&src.to_m, &coords);
            let in_target = linalg::mat_vec(&dst.from_m, &in_m);
            for (lambda, c) in dst.partitions.iter().zip(in_target) {
                out.add_term(lambda.clone(), c);
            }
        }
        Self::new(target, out)
    }

    /// Product, returned in the basis of `self`.
    pub fn mul(&self, other: &Self) -> Self {
        let work = if self.basis == SymBasis::M { SymBasis::E } else { self.basis };
        let a = self.to_basis(work);
        let b = other.to_basis(work);
        let prod = a.terms.bilinear(&b.terms, |x, y| LinComb::basis(x.union(y)));
        Self::new(work, prod).to_basis(self.basis)
    }

    /// Coproduct in the `e` basis, `Δ(e_n) = Σ e_i ⊗ e_{n-i}` extended multiplicatively.
    pub fn coproduct_e(&self) -> LinComb<(Partition, Partition)> {
        self.to_basis(SymBasis::E).terms.map_linear(|lambda| {
            let mut acc: LinComb<(Partition, Partition)> =
                LinComb::basis((Partition::empty(), Partition::empty()));
            for &part in lambda.parts() {
                let split: LinComb<(Partition, Partition)> = (0..=part)
                    .map(|i| ((Partition::new(vec![i]), Partition::new(vec![part - i])), Rational::one()))
                    .collect();
                acc = acc.bilinear(&split, |(a, b), (c, d)| LinComb::basis((a.union(c), b.union(d))));
            }
            acc
        })
    }

    /// Embedding into QSym: `m_λ ↦ Σ M_I` over distinct rearrangements `I` of `λ`.
    pub fn to_qsym(&self) -> QSymElement {
        QSymElement::new(
            self.to_basis(SymBasis::M)
                .terms
                .map_linear(|lambda| lambda.rearrangements().into_iter().map(|c| (c, Rational::one())).collect()),
        )
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = self.basis.tag();
        self.terms.fmt_with(f, |lambda, f| write!(f, "{}{}", tag, lambda))
    }
}

impl fmt::Debug for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Algebra map `NSym → Sym` sending `e_i` to `e_i`; the result is in the `e` basis.
pub fn abelianize(a: &NSymElement) -> SymElement {
    SymElement::new(
        SymBasis::E,
        a.to_e_basis().map_linear(|w| LinComb::basis(w.sorted_partition())),
    )
}

/// Transition data for one (basis, degree).
struct Transition {
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// Column `λ` holds the `m`-coordinates of the basis element `λ`.
    to_m: Matrix,
    from_m: Matrix,
}

type TransitionCache = RwLock<HashMap<(SymBasis, u32), Arc<Transition>>>;

fn transition(basis: SymBasis, n: u32) -> Arc<Transition> {
    static CACHE: OnceLock<TransitionCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("transition cache poisoned").get(&(basis, n)) {
        return t.clone();
    }
    let built = Arc::new(build_transition(basis, n));
    cache
        .write()
        .expect("transition cache poisoned")
        .entry((basis, n))
        .or_insert(built)
        .clone()
}

/// Truncated expansion of a single generator `b_k` in `vars` variables.
fn generator_poly(basis: SymBasis, k: u32, vars: usize, deg: u32) -> TruncatedPoly {
    let lc: LinComb<Composition> = match basis {
        SymBasis::E => LinComb::basis(Composition::from_parts_unchecked(vec![1; k as usize])),
        SymBasis::H => compositions_of(k).into_iter().map(|c| (c, Rational::one())).collect(),
        SymBasis::P => LinComb::basis(Composition::from_parts_unchecked(vec![k])),
        SymBasis::M => unreachable!("m is not multiplicative"),
    };
    expand_truncated(&lc, vars, deg)
}

/// Expansion of `b_λ` as a polynomial in `n` variables at degree `n`.
pub(crate) fn basis_poly(basis: SymBasis, lambda: &Partition, n: u32) -> TruncatedPoly {
    let vars = n.max(1) as usize;
    match basis {
        SymBasis::M => {
            let lc = lambda.rearrangements().into_iter().map(|c| (c, Rational::one())).collect();
            expand_truncated(&lc, vars, n)
        }
        _ => lambda
            .parts()
            .iter()
            .fold(TruncatedPoly::one(vars, n), |acc, &k| acc.mul(&generator_poly(basis, k, vars, n))),
    }
}

fn build_transition(basis: SymBasis, n: u32) -> Transition {
    let partitions = partitions_of(n);
    let index: HashMap<Partition, usize> = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let size = partitions.len();
    let vars = n.max(1) as usize;
    let mut to_m = vec![vec![Rational::zero(); size]; size];
    for (col, lambda) in partitions.iter().enumerate() {
        let poly = basis_poly(basis, lambda, n);
        for (row, mu) in partitions.iter().enumerate() {
            let mut exps = mu.parts().to_vec();
            exps.resize(vars, 0);
            to_m[row][col] = poly.coeff(&exps);
        }
    }
    let from_m = linalg::inverse(&to_m).expect("symmetric function bases are invertible");
    Transition { partitions, index, to_m, from_m }
}
