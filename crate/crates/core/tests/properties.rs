use proptest::prelude::*;

use hopf_core::expr::{parse_in, Algebra, Value};
use hopf_core::hopf_trees::{gl_product, HKElement, TElement};
use hopf_core::qsym::quasi_shuffle;
use hopf_core::trees::{PlanarForest, PlanarTree};
use hopf_core::words::{shuffle, tau};
use hopf_core::{expand_truncated, Composition, LinComb, QSymElement, Rational, RootedTree, Word};

fn composition(max_len: usize, max_part: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|p| Composition::new(p).unwrap())
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..=max_len)
        .prop_map(|bits| bits.into_iter().map(|b| if b { 'x' } else { 'y' }).collect::<String>().parse().unwrap())
}

fn planar_tree(max_vertices: u32) -> impl Strategy<Value = PlanarTree> {
    let leaf = Just(PlanarTree::single());
    leaf.prop_recursive(4, max_vertices, 3, |inner| {
        prop::collection::vec(inner, 0..=3).prop_map(PlanarTree::from_children)
    })
}

fn coeff() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| hopf_core::lincomb::rational(n, d))
}

fn reversed(t: &PlanarTree) -> PlanarTree {
    PlanarTree::from_children(t.children().iter().rev().map(reversed).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quasi_shuffle_is_commutative_and_matches_series(a in composition(3, 3), b in composition(3, 3)) {
        let ab = quasi_shuffle(a.parts(), b.parts());
        prop_assert_eq!(&ab, &quasi_shuffle(b.parts(), a.parts()));
        let deg = a.weight() + b.weight();
        let lhs = expand_truncated(&ab, 5, deg);
        let rhs = expand_truncated(&LinComb::basis(a), 5, deg).mul(&expand_truncated(&LinComb::basis(b), 5, deg));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quasi_shuffle_is_associative(a in composition(2, 2), b in composition(2, 2), c in composition(2, 2)) {
        let (a, b, c) = (QSymElement::basis(a), QSymElement::basis(b), QSymElement::basis(c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn qsym_antipode_is_an_involution(a in composition(4, 2)) {
        let x = QSymElement::basis(a);
        prop_assert_eq!(x.antipode().antipode(), x);
    }

    #[test]
    fn lincomb_never_stores_zero(terms in prop::collection::vec((composition(2, 2), coeff()), 0..6)) {
        let a: LinComb<Composition> = terms.into_iter().collect();
        prop_assert!(a.iter().all(|(_, c)| *c != Rational::from_integer(0.into())));
        let b = &a - &a;
        prop_assert!(b.is_zero());
        prop_assert_eq!(b.to_string(), "0");
    }

    #[test]
    fn printed_qsym_reparses(terms in prop::collection::vec((composition(3, 3), coeff()), 0..6)) {
        let v = Value::QSym(QSymElement::new(terms.into_iter().collect()));
        prop_assert_eq!(parse_in(&v.to_string(), Algebra::QSym).unwrap(), v);
    }

    #[test]
    fn tau_is_an_involutive_antiautomorphism(u in word(5), v in word(5)) {
        prop_assert_eq!(tau(&tau(&u)), u.clone());
        prop_assert_eq!(tau(&u.concat(&v)), tau(&v).concat(&tau(&u)));
        prop_assert_eq!(u.is_admissible() && !u.is_empty(), tau(&u).is_admissible() && !tau(&u).is_empty());
    }

    #[test]
    fn shuffle_has_binomial_mass(u in word(4), v in word(4)) {
        let s = shuffle(&u, &v);
        let total = s.iter().fold(Rational::from_integer(0.into()), |acc, (_, c)| acc + c);
        let n = (u.len() + v.len()) as u64;
        let k = u.len() as u64;
        let binom: u64 = (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1));
        prop_assert_eq!(total, Rational::from_integer(binom.into()));
        prop_assert_eq!(s, shuffle(&v, &u));
    }

    #[test]
    fn canonical_form_forgets_child_order(t in planar_tree(7)) {
        let rooted = t.to_rooted();
        prop_assert_eq!(reversed(&t).to_rooted(), rooted.clone());
        prop_assert_eq!(rooted.to_string().parse::<RootedTree>().unwrap(), rooted.clone());
        prop_assert_eq!(rooted.size(), t.size());
        let text = t.to_string();
        prop_assert_eq!(text.parse::<PlanarTree>().unwrap(), t.clone());
        let forest = PlanarForest::new(vec![t.clone(), reversed(&t)]);
        prop_assert_eq!(forest.to_string().parse::<PlanarForest>().unwrap(), forest);
    }

    #[test]
    fn tree_antipodes_square_to_identity(t in planar_tree(5)) {
        // T is cocommutative and H_K commutative, so S² = id in both
        let tree = t.to_rooted();
        let x = TElement::basis(tree.clone());
        prop_assert_eq!(x.antipode().antipode(), x);
        let f = HKElement::basis(tree.branches());
        prop_assert_eq!(f.antipode().antipode(), f);
    }

    #[test]
    fn gl_dot_is_a_unit(t in planar_tree(6)) {
        let tree = t.to_rooted();
        prop_assert_eq!(gl_product(&RootedTree::single(), &tree), LinComb::basis(tree.clone()));
        prop_assert_eq!(gl_product(&tree, &RootedTree::single()), LinComb::basis(tree));
    }
}
