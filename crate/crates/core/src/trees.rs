//! Rooted trees (unordered, canonical) and planar rooted trees, with forests.
//!
//! Sizes here count all vertices. The Grossman–Larson grading by non-root
//! vertices is applied in `hopf_trees`.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// Largest vertex count accepted by [`enumerate_trees`].
pub const MAX_ENUMERATION_VERTICES: usize = 12;

/// An unordered rooted tree in canonical form.
///
/// Children are kept sorted by the tree order: vertex count first, then the
/// (recursively canonical) child sequences lexicographically. The derived
/// order relies on the field order below.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedTree {
    size: usize,
    children: Vec<RootedTree>,
}

impl RootedTree {
    pub fn single() -> Self {
        Self { size: 1, children: Vec::new() }
    }

    /// `B_+` of the given children, canonicalised.
    pub fn from_children(mut children: Vec<RootedTree>) -> Self {
        children.sort();
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        Self { size, children }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of non-root vertices.
    pub fn non_root(&self) -> usize {
        self.size - 1
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    /// Forest of the root's branches.
    pub fn branches(&self) -> Forest {
        Forest::from_sorted(self.children.clone())
    }

    /// Order of the automorphism group: product over vertices of the
    /// factorials of multiplicities of isomorphic child subtrees.
    pub fn symm_order(&self) -> u64 {
        let mut out: u64 = self.children.iter().map(RootedTree::symm_order).product();
        let mut run = 0u64;
        for (i, c) in self.children.iter().enumerate() {
            run = if i > 0 && self.children[i - 1] == *c { run + 1 } else { 1 };
            out *= run;
        }
        out
    }

    pub fn to_planar(&self) -> PlanarTree {
        PlanarTree::from_children(self.children.iter().map(RootedTree::to_planar).collect())
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for c in &self.children {
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RootedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(s.parse::<PlanarTree>()?.to_rooted())
    }
}

/// A multiset of rooted trees, canonically sorted. Ordered by total vertex
/// count, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Forest {
    vertices: usize,
    trees: Vec<RootedTree>,
}

impl Forest {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(mut trees: Vec<RootedTree>) -> Self {
        trees.sort();
        Self::from_sorted(trees)
    }

    fn from_sorted(trees: Vec<RootedTree>) -> Self {
        debug_assert!(trees.windows(2).all(|w| w[0] <= w[1]));
        let vertices = trees.iter().map(RootedTree::size).sum();
        Self { vertices, trees }
    }

    pub fn single(t: RootedTree) -> Self {
        Self { vertices: t.size, trees: vec![t] }
    }

    pub fn trees(&self) -> &[RootedTree] {
        &self.trees
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Disjoint union.
    pub fn union(&self, other: &Forest) -> Forest {
        let mut trees = self.trees.clone();
        trees.extend_from_slice(&other.trees);
        Forest::new(trees)
    }

    /// `|Symm|` of the forest, equal to that of `B_+` of it.
    pub fn symm_order(&self) -> u64 {
        self.clone().graft().symm_order()
    }

    /// `B_+`: attach every tree to a new root.
    pub fn graft(self) -> RootedTree {
        RootedTree { size: self.vertices + 1, children: self.trees }
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.trees {
            write!(f, "{}", t)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trees.is_empty() {
            write!(f, "()")
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

impl FromStr for Forest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(s.parse::<PlanarForest>()?.to_rooted())
    }
}

/// A planar rooted tree: children are ordered and the order is significant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarTree {
    size: usize,
    children: Vec<PlanarTree>,
}

impl PlanarTree {
    pub fn single() -> Self {
        Self { size: 1, children: Vec::new() }
    }

    pub fn from_children(children: Vec<PlanarTree>) -> Self {
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        Self { size, children }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn children(&self) -> &[PlanarTree] {
        &self.children
    }

    /// Forgets the planar order.
    pub fn to_rooted(&self) -> RootedTree {
        RootedTree::from_children(self.children.iter().map(PlanarTree::to_rooted).collect())
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for c in &self.children {
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PlanarTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let forest: PlanarForest = s.parse()?;
        match forest.trees.len() {
            1 => Ok(forest.trees.into_iter().next().expect("one tree")),
            n => Err(Error::Parse { pos: 0, msg: format!("expected a single tree, found a forest of {}", n) }),
        }
    }
}

/// An ordered sequence of planar trees. Ordered by total vertex count, then
/// lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlanarForest {
    vertices: usize,
    trees: Vec<PlanarTree>,
}

impl PlanarForest {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(trees: Vec<PlanarTree>) -> Self {
        let vertices = trees.iter().map(PlanarTree::size).sum();
        Self { vertices, trees }
    }

    pub fn single(t: PlanarTree) -> Self {
        Self::new(vec![t])
    }

    pub fn trees(&self) -> &[PlanarTree] {
        &self.trees
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn concat(&self, other: &PlanarForest) -> PlanarForest {
        let mut trees = self.trees.clone();
        trees.extend_from_slice(&other.trees);
        PlanarForest::new(trees)
    }

    pub fn graft(self) -> PlanarTree {
        PlanarTree { size: self.vertices + 1, children: self.trees }
    }

    pub fn to_rooted(&self) -> Forest {
        Forest::new(self.trees.iter().map(PlanarTree::to_rooted).collect())
    }
}

impl fmt::Display for PlanarForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.trees {
            write!(f, "{}", t)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PlanarForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trees.is_empty() {
            write!(f, "()")
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

/// Parses a sequence of bracket trees, e.g. `[][[]]`. `()` or the empty
/// string is the empty forest.
impl FromStr for PlanarForest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let trees = parse_planar_forest(bytes, &mut pos)?;
        if trees.is_empty() && s[pos..].trim() == "()" {
            return Ok(PlanarForest::empty());
        }
        skip_ws(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(Error::Parse { pos, msg: format!("unexpected character {:?}", bytes[pos] as char) });
        }
        Ok(PlanarForest::new(trees))
    }
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

/// Reads as many `[...]` trees as follow `pos`.
pub(crate) fn parse_planar_forest(bytes: &[u8], pos: &mut usize) -> Result<Vec<PlanarTree>> {
    let mut trees = Vec::new();
    loop {
        skip_ws(bytes, pos);
        if *pos < bytes.len() && bytes[*pos] == b'[' {
            trees.push(parse_planar_tree(bytes, pos)?);
        } else {
            return Ok(trees);
        }
    }
}

fn parse_planar_tree(bytes: &[u8], pos: &mut usize) -> Result<PlanarTree> {
    debug_assert_eq!(bytes[*pos], b'[');
    *pos += 1;
    let children = parse_planar_forest(bytes, pos)?;
    skip_ws(bytes, pos);
    if *pos >= bytes.len() || bytes[*pos] != b']' {
        return Err(Error::Parse { pos: *pos, msg: "expected ']'".into() });
    }
    *pos += 1;
    Ok(PlanarTree::from_children(children))
}

/// The unbranched tree with `i` vertices.
pub fn ladder(i: usize) -> Result<RootedTree> {
    if i < 1 {
        return invalid("ladder needs at least one vertex");
    }
    Ok((1..i).fold(RootedTree::single(), |t, _| RootedTree::from_children(vec![t])))
}

pub fn planar_ladder(i: usize) -> Result<PlanarTree> {
    Ok(ladder(i)?.to_planar())
}

/// `B_+(•ⁿ)`: `n` leaves attached directly to the root.
pub fn corolla(n: usize) -> RootedTree {
    RootedTree::from_children(vec![RootedTree::single(); n])
}

pub fn b_plus(f: &Forest) -> RootedTree {
    f.clone().graft()
}

pub fn b_plus_planar(f: &PlanarForest) -> PlanarTree {
    f.clone().graft()
}

/// All canonical rooted trees with exactly `n` vertices, in tree order.
pub fn enumerate_trees(n: usize) -> Result<Vec<RootedTree>> {
    if !(1..=MAX_ENUMERATION_VERTICES).contains(&n) {
        return invalid(format!("enumerate_trees needs 1 <= n <= {}, got {}", MAX_ENUMERATION_VERTICES, n));
    }
    Ok(trees_by_size(n).swap_remove(n))
}

/// `out[k]` lists the trees with `k` vertices for `k <= n`.
pub(crate) fn trees_by_size(n: usize) -> Vec<Vec<RootedTree>> {
    let mut by_size: Vec<Vec<RootedTree>> = vec![Vec::new(); n + 1];
    if n >= 1 {
        by_size[1].push(RootedTree::single());
    }
    for k in 2..=n {
        let pool: Vec<&RootedTree> = by_size[1..k].iter().flatten().collect();
        let mut out = Vec::new();
        multisets(&pool, 0, k - 1, &mut Vec::new(), &mut |children| {
            out.push(RootedTree::from_children(children.to_vec()));
        });
        out.sort();
        by_size[k] = out;
    }
    by_size
}

/// Multisets of trees from `pool` (sorted ascending) with total size `left`,
/// chosen as non-decreasing index sequences.
fn multisets<F: FnMut(&[RootedTree])>(
    pool: &[&RootedTree],
    start: usize,
    left: usize,
    cur: &mut Vec<RootedTree>,
    f: &mut F,
) {
    if left == 0 {
        f(cur);
        return;
    }
    for i in start..pool.len() {
        if pool[i].size() > left {
            continue;
        }
        cur.push(pool[i].clone());
        multisets(pool, i, left - pool[i].size(), cur, f);
        cur.pop();
    }
}

/// All forests with exactly `n` vertices, in forest order.
pub fn enumerate_forests(n: usize) -> Vec<Forest> {
    let by_size = trees_by_size(n);
    let pool: Vec<&RootedTree> = by_size.iter().flatten().collect();
    let mut out = Vec::new();
    multisets(&pool, 0, n, &mut Vec::new(), &mut |trees| out.push(Forest::new(trees.to_vec())));
    out.sort();
    out
}

/// All planar forests with exactly `n` vertices.
pub fn enumerate_planar_forests(n: usize) -> Vec<PlanarForest> {
    let mut forests: Vec<Vec<PlanarForest>> = vec![vec![PlanarForest::empty()]];
    for k in 1..=n {
        let mut out = Vec::new();
        // first tree has j vertices: B_+ of a planar forest with j-1 vertices
        for j in 1..=k {
            for inner in &forests[j - 1] {
                let first = inner.clone().graft();
                for rest in &forests[k - j] {
                    out.push(PlanarForest::single(first.clone()).concat(rest));
                }
            }
        }
        out.sort();
        forests.push(out);
    }
    forests.swap_remove(n)
}

pub fn enumerate_planar_trees(n: usize) -> Vec<PlanarTree> {
    if n == 0 {
        return Vec::new();
    }
    enumerate_planar_forests(n - 1).into_iter().map(PlanarForest::graft).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> RootedTree {
        s.parse().unwrap()
    }

    /// Number of rooted trees via `a(n+1) = (1/n) Σ_{k=1}^{n} (Σ_{d|k} d·a(d)) a(n-k+1)`.
    fn rooted_tree_counts(max: usize) -> Vec<u64> {
        let mut a = vec![0u64; max + 1];
        a[1] = 1;
        for n in 1..max {
            let mut s = 0u64;
            for k in 1..=n {
                let inner: u64 = (1..=k).filter(|d| k % d == 0).map(|d| d as u64 * a[d]).sum();
                s += inner * a[n - k + 1];
            }
            a[n + 1] = s / n as u64;
        }
        a
    }

    #[test]
    fn enumeration_counts_match_recurrence() {
        let expected = rooted_tree_counts(10);
        for n in 1..=10 {
            let trees = enumerate_trees(n).unwrap();
            assert_eq!(trees.len() as u64, expected[n], "n = {}", n);
            let mut dedup = trees.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), trees.len());
            assert!(trees.iter().all(|t| t.size() == n));
        }
        assert_eq!(&expected[1..9], &[1, 1, 2, 4, 9, 20, 48, 115]);
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_trees(1).unwrap(), vec![t("[]")]);
        assert_eq!(enumerate_trees(3).unwrap(), vec![t("[[][]]"), t("[[[]]]")]);
        assert_eq!(enumerate_trees(4).unwrap().len(), 4);
        assert_eq!(enumerate_trees(5).unwrap().len(), 9);
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(13).is_err());
    }

    #[test]
    fn symmetry_orders() {
        for n in 1..=6 {
            assert_eq!(ladder(n).unwrap().symm_order(), 1);
        }
        assert_eq!(corolla(4).symm_order(), 24);
        assert_eq!(t("[[][[]]]").symm_order(), 1);
        assert_eq!(t("[[[][]][[][]]]").symm_order(), 8);
    }

    /// Counts root-fixing permutations of the vertex set that preserve the parent map.
    fn brute_force_automorphisms(tree: &RootedTree) -> u64 {
        let mut parent = Vec::new();
        fn flatten(t: &RootedTree, p: Option<usize>, parent: &mut Vec<Option<usize>>) {
            let id = parent.len();
            parent.push(p);
            for c in t.children() {
                flatten(c, Some(id), parent);
            }
        }
        flatten(tree, None, &mut parent);
        let n = parent.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0;
        loop {
            let ok = (0..n).all(|v| parent[perm[v]] == parent[v].map(|p| perm[p]));
            if ok {
                count += 1;
            }
            // next permutation
            let mut i = n - 1;
            while i > 0 && perm[i - 1] >= perm[i] {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            let mut j = n - 1;
            while perm[j] <= perm[i - 1] {
                j -= 1;
            }
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        count
    }

    #[test]
    fn symm_order_matches_brute_force() {
        for n in 1..=6 {
            for tree in enumerate_trees(n).unwrap() {
                assert_eq!(tree.symm_order(), brute_force_automorphisms(&tree), "{}", tree);
            }
        }
    }

    #[test]
    fn grafting() {
        assert_eq!(b_plus(&Forest::empty()), t("[]"));
        assert_eq!(b_plus(&"[][]".parse().unwrap()), t("[[][]]"));
        assert_eq!(b_plus(&Forest::single(ladder(2).unwrap())), ladder(3).unwrap());
        assert_eq!(b_plus_planar(&PlanarForest::empty()).to_string(), "[]");
    }

    #[test]
    fn ladders() {
        assert_eq!(ladder(1).unwrap().to_string(), "[]");
        assert_eq!(ladder(2).unwrap().to_string(), "[[]]");
        assert_eq!(ladder(3).unwrap().to_string(), "[[[]]]");
        assert!(ladder(0).is_err());
    }

    #[test]
    fn forgetting_planar_order() {
        let a: PlanarTree = "[[][[]]]".parse().unwrap();
        let b: PlanarTree = "[[[]][]]".parse().unwrap();
        assert_ne!(a, b);
        assert_eq!(a.to_rooted(), b.to_rooted());
        assert_eq!(planar_ladder(4).unwrap().to_rooted(), ladder(4).unwrap());
        let f1: PlanarForest = "[][[]]".parse().unwrap();
        let f2: PlanarForest = "[[]][]".parse().unwrap();
        assert_eq!(f1.to_rooted(), f2.to_rooted());
    }

    #[test]
    fn canonicalisation_collapses_all_child_orders() {
        for n in 1..=6 {
            let planar = enumerate_planar_trees(n);
            let mut images: Vec<RootedTree> = planar.iter().map(PlanarTree::to_rooted).collect();
            images.sort();
            images.dedup();
            assert_eq!(images, enumerate_trees(n).unwrap());
            for tree in &images {
                assert_eq!(tree.to_planar().to_rooted(), *tree);
            }
        }
    }

    #[test]
    fn planar_counts_are_catalan() {
        let catalan = [1usize, 1, 2, 5, 14, 42, 132];
        for n in 0..=6 {
            assert_eq!(enumerate_planar_forests(n).len(), catalan[n]);
        }
    }

    #[test]
    fn forest_counts() {
        // forests with n vertices biject with trees on n + 1 vertices
        for n in 0..=7 {
            assert_eq!(enumerate_forests(n).len(), enumerate_trees(n + 1).unwrap().len());
        }
    }

    #[test]
    fn parse_errors() {
        assert!("[[]".parse::<RootedTree>().is_err());
        assert!("[]]".parse::<RootedTree>().is_err());
        assert!("[][]".parse::<RootedTree>().is_err());
        assert_eq!("()".parse::<Forest>().unwrap(), Forest::empty());
    }
}
