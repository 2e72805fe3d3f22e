//! The rooted-tree Hopf algebras: Kreimer's `H_K` (forests, admissible cuts),
//! Foissy's planar `H_F`, and the Grossman–Larson algebra `T`, together with
//! the maps relating them to symmetric functions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::composition::{partitions_of, Composition, Partition};
use crate::error::{invalid, Result};
use crate::hopf::{Elem, GradedHopf, Tensor2};
use crate::lincomb::{LinComb, Rational};
use crate::qsym::NSymElement;
use crate::sym::{SymBasis, SymElement};
use crate::trees::{ladder, planar_ladder, trees_by_size, Forest, PlanarForest, PlanarTree, RootedTree};

/// Largest degree accepted by [`kappa`] and [`epsilon`].
pub const MAX_KAPPA_DEGREE: usize = 8;
/// Largest degree accepted by [`phi_star`].
pub const MAX_PHI_STAR_DEGREE: usize = 6;

/// Kreimer's commutative algebra on forests; graded by vertex count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HK;

/// Foissy's noncommutative algebra on planar forests; graded by vertex count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HF;

/// Grossman–Larson algebra on rooted trees; graded by non-root vertices, unit `•`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GL;

pub type HKElement = Elem<HK>;
pub type HFElement = Elem<HF>;
pub type TElement = Elem<GL>;

/// All admissible cuts of `t` (including the empty cut) as
/// (pruned trees, trunk children) pairs. Planar order is kept.
fn planar_cuts(t: &PlanarTree) -> Vec<(Vec<PlanarTree>, Vec<PlanarTree>)> {
    let mut acc: Vec<(Vec<PlanarTree>, Vec<PlanarTree>)> = vec![(Vec::new(), Vec::new())];
    for child in t.children() {
        let child_cuts = planar_cuts(child);
        let mut next = Vec::with_capacity(acc.len() * (child_cuts.len() + 1));
        for (pruned, kept) in &acc {
            let mut p = pruned.clone();
            p.push(child.clone());
            next.push((p, kept.clone()));
            for (cp, ck) in &child_cuts {
                let mut p = pruned.clone();
                p.extend(cp.iter().cloned());
                let mut k = kept.clone();
                k.push(PlanarTree::from_children(ck.clone()));
                next.push((p, k));
            }
        }
        acc = next;
    }
    acc
}

fn planar_tree_coproduct(t: &PlanarTree) -> Tensor2<PlanarForest> {
    let mut out = LinComb::basis((PlanarForest::single(t.clone()), PlanarForest::empty()));
    for (pruned, kept) in planar_cuts(t) {
        let trunk = PlanarForest::single(PlanarTree::from_children(kept));
        out.add_term((PlanarForest::new(pruned), trunk), Rational::one());
    }
    out
}

fn rooted_tree_coproduct(t: &RootedTree) -> Tensor2<Forest> {
    // Cuts of the canonical planar representative, with the order forgotten.
    planar_tree_coproduct(&t.to_planar()).map_linear(|(a, b)| LinComb::basis((a.to_rooted(), b.to_rooted())))
}

impl GradedHopf for HK {
    type Basis = Forest;

    fn one() -> Forest {
        Forest::empty()
    }

    fn degree(b: &Forest) -> usize {
        b.vertices()
    }

    fn mul_basis(a: &Forest, b: &Forest) -> LinComb<Forest> {
        LinComb::basis(a.union(b))
    }

    /// `Δ(t) = t⊗1 + Σ_c P^c(t) ⊗ R^c(t)` over admissible cuts, pruned part on the left.
    fn coproduct_basis(b: &Forest) -> Tensor2<Forest> {
        b.trees().iter().fold(LinComb::basis((Forest::empty(), Forest::empty())), |acc, t| {
            acc.bilinear(&rooted_tree_coproduct(t), |(a1, b1), (a2, b2)| {
                LinComb::basis((a1.union(a2), b1.union(b2)))
            })
        })
    }

    fn fmt_basis(b: &Forest, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if b.is_empty() {
            write!(f, "K()")
        } else {
            write!(f, "K{}", b)
        }
    }
}

impl GradedHopf for HF {
    type Basis = PlanarForest;

    fn one() -> PlanarForest {
        PlanarForest::empty()
    }

    fn degree(b: &PlanarForest) -> usize {
        b.vertices()
    }

    fn mul_basis(a: &PlanarForest, b: &PlanarForest) -> LinComb<PlanarForest> {
        LinComb::basis(a.concat(b))
    }

    fn coproduct_basis(b: &PlanarForest) -> Tensor2<PlanarForest> {
        b.trees().iter().fold(LinComb::basis((PlanarForest::empty(), PlanarForest::empty())), |acc, t| {
            acc.bilinear(&planar_tree_coproduct(t), |(a1, b1), (a2, b2)| {
                LinComb::basis((a1.concat(a2), b1.concat(b2)))
            })
        })
    }

    fn fmt_basis(b: &PlanarForest, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if b.is_empty() {
            write!(f, "F()")
        } else {
            write!(f, "F{}", b)
        }
    }
}

impl GradedHopf for GL {
    type Basis = RootedTree;

    fn one() -> RootedTree {
        RootedTree::single()
    }

    fn degree(b: &RootedTree) -> usize {
        b.non_root()
    }

    fn mul_basis(a: &RootedTree, b: &RootedTree) -> LinComb<RootedTree> {
        gl_product(a, b)
    }

    /// `Δ(B_+(f)) = Σ B_+(f1) ⊗ B_+(f2)` over ordered splittings of the branches.
    fn coproduct_basis(b: &RootedTree) -> Tensor2<RootedTree> {
        let branches = b.children();
        let m = branches.len();
        let mut out = LinComb::zero();
        for mask in 0u64..(1u64 << m) {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (i, s) in branches.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    left.push(s.clone());
                } else {
                    right.push(s.clone());
                }
            }
            out.add_term(
                (RootedTree::from_children(left), RootedTree::from_children(right)),
                Rational::one(),
            );
        }
        out
    }

    fn fmt_basis(b: &RootedTree, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", b)
    }
}

/// Grossman–Larson product: with `t1 = B_+(s1,…,sm)`, sum over all maps from
/// the branches `s_j` to vertices of `t2` of the tree obtained by attaching
/// each `s_j` below its image.
pub fn gl_product(t1: &RootedTree, t2: &RootedTree) -> LinComb<RootedTree> {
    let branches = t1.children();
    let sites = t2.size();
    let mut out = LinComb::zero();
    let mut assignment = vec![0usize; branches.len()];
    loop {
        let mut attached: Vec<Vec<&RootedTree>> = vec![Vec::new(); sites];
        for (s, &v) in branches.iter().zip(&assignment) {
            attached[v].push(s);
        }
        let mut next_id = 0;
        out.add_term(rebuild_with(t2, &mut next_id, &attached), Rational::one());
        // advance the mixed-radix counter
        let mut i = 0;
        loop {
            if i == assignment.len() {
                return out;
            }
            assignment[i] += 1;
            if assignment[i] < sites {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

/// Copies `t`, numbering vertices in preorder, and adds `attached[v]` as extra children of vertex `v`.
fn rebuild_with(t: &RootedTree, next_id: &mut usize, attached: &[Vec<&RootedTree>]) -> RootedTree {
    let id = *next_id;
    *next_id += 1;
    let mut kids: Vec<RootedTree> = t.children().iter().map(|c| rebuild_with(c, next_id, attached)).collect();
    kids.extend(attached[id].iter().map(|&s| s.clone()));
    RootedTree::from_children(kids)
}

/// `κ_n = Σ_{|t|=n} t / |Symm(t)|`, the sum over trees with `n` non-root vertices.
pub fn kappa(n: usize) -> Result<TElement> {
    if !(1..=MAX_KAPPA_DEGREE).contains(&n) {
        return invalid(format!("kappa needs 1 <= n <= {}, got {}", MAX_KAPPA_DEGREE, n));
    }
    let trees = trees_by_size(n + 1).swap_remove(n + 1);
    Ok(TElement::new(
        trees
            .into_iter()
            .map(|t| {
                let w = Rational::new(BigInt::one(), BigInt::from(t.symm_order()));
                (t, w)
            })
            .collect(),
    ))
}

/// `ε_n = (-1)^n S(κ_n)`.
pub fn epsilon(n: usize) -> Result<TElement> {
    let s = kappa(n)?.antipode();
    Ok(if n.is_multiple_of(2) { s } else { -&s })
}

/// `N(x) = ℓ2 ∘ x` applied `k` times.
pub fn n_operator(t: &TElement, k: usize) -> TElement {
    let l2 = ladder(2).expect("ladder of two vertices");
    (0..k).fold(t.clone(), |acc, _| TElement::new(acc.terms().map_linear(|x| gl_product(&l2, x))))
}

/// `n(t; t')`: coefficient of `t'` in `N^{|t'|-|t|}(t)`, or zero if `t'` is smaller.
pub fn n_coefficient(t: &RootedTree, target: &RootedTree) -> Rational {
    if target.size() < t.size() {
        return Rational::zero();
    }
    n_operator(&TElement::basis(t.clone()), target.size() - t.size()).coeff(target)
}

/// `n(•; t)`, the tree multiplicity.
pub fn tree_multiplicity(t: &RootedTree) -> BigInt {
    n_coefficient(&RootedTree::single(), t).to_integer()
}

/// `(1/(m1! m2! ⋯)) · (n1+⋯+nk choose n1,…,nk)` with `m_i = #{j : n_j = i}`.
pub fn multiplicity_formula(ns: &[u32]) -> Result<Rational> {
    if ns.is_empty() || ns.contains(&0) {
        return invalid("multiplicity_formula needs k >= 1 positive block sizes");
    }
    let fact = |n: u64| (1..=n).fold(BigInt::one(), |acc, i| acc * i);
    let total: u64 = ns.iter().map(|&n| n as u64).sum();
    let mut denom = ns.iter().fold(BigInt::one(), |acc, &n| acc * fact(n as u64));
    denom *= Partition::new(ns.to_vec()).multiplicity_factorial();
    Ok(Rational::new(fact(total), denom))
}

/// `B_+(ℓ_{n1} ⋯ ℓ_{nk})`.
pub fn ladder_bouquet(ns: &[u32]) -> Result<RootedTree> {
    let branches = ns.iter().map(|&n| ladder(n as usize)).collect::<Result<Vec<_>>>()?;
    Ok(RootedTree::from_children(branches))
}

/// `φ: Sym → H_K`, `e_λ ↦ ℓ_{λ1} ℓ_{λ2} ⋯`.
pub fn phi(s: &SymElement) -> HKElement {
    HKElement::new(s.to_basis(SymBasis::E).terms().map_linear(|lambda| {
        let trees = lambda.parts().iter().map(|&i| ladder(i as usize).expect("positive part")).collect();
        LinComb::basis(Forest::new(trees))
    }))
}

/// `Φ: NSym → H_F`, `e_{i1}⋯e_{ik} ↦` the planar forest of ladders in that order.
pub fn phi_planar(a: &NSymElement) -> HFElement {
    HFElement::new(a.to_e_basis().map_linear(e_word_to_planar))
}

fn e_word_to_planar(w: &Composition) -> LinComb<PlanarForest> {
    let trees = w.parts().iter().map(|&i| planar_ladder(i as usize).expect("positive part")).collect();
    LinComb::basis(PlanarForest::new(trees))
}

/// `π: H_F → H_K`, forgetting planar order.
pub fn pi(a: &HFElement) -> HKElement {
    HKElement::new(a.terms().map_linear(|f| LinComb::basis(f.to_rooted())))
}

/// `⟨B_+(g), f⟩ = |Symm(f)|` if `g = f`, else 0.
pub fn pair_tree_forest(t: &RootedTree, f: &Forest) -> Rational {
    if t.children() == f.trees() {
        Rational::from_integer(BigInt::from(f.symm_order()))
    } else {
        Rational::zero()
    }
}

pub fn pair_t_hk(a: &TElement, b: &HKElement) -> Rational {
    a.terms().pair_with(b.terms(), pair_tree_forest)
}

pub fn pair_t_hk_tensor(a: &Tensor2<RootedTree>, b: &Tensor2<Forest>) -> Rational {
    a.pair_with(b, |(t1, t2), (f1, f2)| pair_tree_forest(t1, f1) * pair_tree_forest(t2, f2))
}

/// `φ*(a) = Σ_{λ⊢n} ⟨a, φ(m_λ)⟩ e_λ` for `a` homogeneous of degree `n`.
pub fn phi_star(a: &TElement) -> Result<SymElement> {
    if a.is_zero() {
        return Ok(SymElement::zero(SymBasis::E));
    }
    let Some(n) = a.homogeneous_degree() else {
        return invalid("phi_star needs a homogeneous element");
    };
    if n > MAX_PHI_STAR_DEGREE {
        return invalid(format!("phi_star supports degree <= {}, got {}", MAX_PHI_STAR_DEGREE, n));
    }
    let mut out = LinComb::zero();
    for lambda in partitions_of(n as u32) {
        let image = phi(&SymElement::basis_element(SymBasis::M, lambda.clone()));
        out.add_term(lambda, pair_t_hk(a, &image));
    }
    Ok(SymElement::new(SymBasis::E, out))
}

/// Rooted trees with at most `max_vertices` vertices.
pub fn trees_up_to(max_vertices: usize) -> Vec<RootedTree> {
    trees_by_size(max_vertices).into_iter().flatten().collect()
}
