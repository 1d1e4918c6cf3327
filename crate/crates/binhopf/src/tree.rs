//! Canonical nonplanar rooted full binary trees and forests.
//!
//! A `Tree` is an isomorphism-class representative: children of every
//! internal node are stored so that `enc(left) <= enc(right)`. The canonical
//! encoding `enc` doubles as the total order used everywhere downstream.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Enumeration cap for trees by leaf count.
pub const MAX_TREE_LEAVES: usize = 12;
/// Enumeration cap for forests by total leaf count.
pub const MAX_FOREST_LEAVES: usize = 10;
/// Cap for binary-admissible cut enumeration.
pub const MAX_CUT_LEAVES: usize = 16;

/// A leaf label: identifier text over `[A-Za-z0-9_]`, with `*` meaning unlabelled.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(String);

impl Label {
    pub fn new(text: &str) -> Result<Self> {
        let ok = text == "*"
            || (!text.is_empty()
                && text.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_'));
        if ok {
            Ok(Label(text.to_string()))
        } else {
            Err(Error::BadLabel(text.to_string()))
        }
    }

    pub fn unlabelled() -> Self {
        Label("*".to_string())
    }

    pub fn is_unlabelled(&self) -> bool {
        self.0 == "*"
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug)]
pub enum TreeKind {
    Leaf(Label),
    Node(Tree, Tree),
}

#[derive(Debug)]
struct TreeInner {
    kind: TreeKind,
    enc: String,
    n_leaves: usize,
    aut_order: u64,
}

/// A canonical nonplanar rooted full binary tree. Cheap to clone (shared).
#[derive(Debug, Clone)]
pub struct Tree(Arc<TreeInner>);

impl Tree {
    pub fn leaf(label: Label) -> Tree {
        let enc = format!("L:{}", label.as_str());
        Tree(Arc::new(TreeInner {
            kind: TreeKind::Leaf(label),
            enc,
            n_leaves: 1,
            aut_order: 1,
        }))
    }

    /// The unlabelled single-vertex tree.
    pub fn bullet() -> Tree {
        Tree::leaf(Label::unlabelled())
    }

    /// Join two trees under a new root, storing children in canonical order.
    pub fn node(a: &Tree, b: &Tree) -> Tree {
        let (l, r) = if a.enc() <= b.enc() { (a, b) } else { (b, a) };
        let enc = format!("({},{})", l.enc(), r.enc());
        let equal = l.enc() == r.enc();
        let aut = l.aut_order() * r.aut_order() * if equal { 2 } else { 1 };
        Tree(Arc::new(TreeInner {
            kind: TreeKind::Node(l.clone(), r.clone()),
            enc,
            n_leaves: l.n_leaves() + r.n_leaves(),
            aut_order: aut,
        }))
    }

    pub fn kind(&self) -> &TreeKind {
        &self.0.kind
    }

    pub fn enc(&self) -> &str {
        &self.0.enc
    }

    pub fn n_leaves(&self) -> usize {
        self.0.n_leaves
    }

    pub fn n_internal(&self) -> usize {
        self.0.n_leaves - 1
    }

    /// Real edges only; the ghost root edge is excluded.
    pub fn n_edges(&self) -> usize {
        2 * self.0.n_leaves - 2
    }

    /// Edge count including the ghost root edge (index 0).
    pub fn n_edges_with_ghost(&self) -> usize {
        2 * self.0.n_leaves - 1
    }

    /// Symmetry coefficient s_T = 2^(internal nodes with identical children).
    pub fn aut_order(&self) -> u64 {
        self.0.aut_order
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.0.kind, TreeKind::Leaf(_))
    }

    /// Leaf labels in depth-first order over the canonical form.
    pub fn leaves(&self) -> Vec<Label> {
        let mut out = Vec::with_capacity(self.n_leaves());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Label>) {
        match self.kind() {
            TreeKind::Leaf(l) => out.push(l.clone()),
            TreeKind::Node(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    /// The subtree hanging below edge `e` (edge 0 is the ghost root edge,
    /// whose subtree is the whole tree). Edges are numbered depth-first over
    /// the canonical form: a subtree rooted at edge `i` with left child of
    /// `k` leaves has its left edge at `i + 1` and right edge at `i + 2k`.
    pub fn subtree_at_edge(&self, e: usize) -> Result<&Tree> {
        if e == 0 {
            return Ok(self);
        }
        match self.kind() {
            TreeKind::Leaf(_) => Err(Error::BadIndex(e)),
            TreeKind::Node(a, b) => {
                let span_a = a.n_edges_with_ghost();
                if e <= span_a {
                    a.subtree_at_edge(e - 1)
                } else if e <= span_a + b.n_edges_with_ghost() {
                    b.subtree_at_edge(e - 1 - span_a)
                } else {
                    Err(Error::BadIndex(e))
                }
            }
        }
    }

    /// Split edge `e` and hang `s` from the new vertex. Edge 0 (ghost)
    /// yields the merge term: both trees under a common root.
    pub fn insert_at_edge(&self, e: usize, s: &Tree) -> Result<Tree> {
        if e >= self.n_edges_with_ghost() {
            return Err(Error::BadIndex(e));
        }
        if e == 0 {
            return Ok(Tree::node(self, s));
        }
        Ok(self.insert_inner(e, s))
    }

    fn insert_inner(&self, e: usize, s: &Tree) -> Tree {
        debug_assert!(e >= 1);
        match self.kind() {
            TreeKind::Leaf(_) => unreachable!("edge index checked by caller"),
            TreeKind::Node(a, b) => {
                let span_a = a.n_edges_with_ghost();
                if e <= span_a {
                    let e_in_a = e - 1;
                    let new_a = if e_in_a == 0 {
                        Tree::node(a, s)
                    } else {
                        a.insert_inner(e_in_a, s)
                    };
                    Tree::node(&new_a, b)
                } else {
                    let e_in_b = e - 1 - span_a;
                    let new_b = if e_in_b == 0 {
                        Tree::node(b, s)
                    } else {
                        b.insert_inner(e_in_b, s)
                    };
                    Tree::node(a, &new_b)
                }
            }
        }
    }

    /// Simultaneous insertion: `plan[e]` is the ordered list of trees to
    /// insert at edge `e`, read top to bottom along the split edge.
    pub fn insert_many(&self, plan: &HashMap<usize, Vec<Tree>>) -> Tree {
        self.insert_many_inner(plan, 0)
    }

    fn insert_many_inner(&self, plan: &HashMap<usize, Vec<Tree>>, my_edge: usize) -> Tree {
        let rebuilt = match self.kind() {
            TreeKind::Leaf(_) => self.clone(),
            TreeKind::Node(a, b) => {
                let span_a = a.n_edges_with_ghost();
                let ra = a.insert_many_inner(plan, my_edge + 1);
                let rb = b.insert_many_inner(plan, my_edge + 1 + span_a);
                Tree::node(&ra, &rb)
            }
        };
        // Ladder-wrap: the listed trees hang from new vertices ordered from
        // the source of the edge down to its target.
        match plan.get(&my_edge) {
            None => rebuilt,
            Some(list) => list
                .iter()
                .rev()
                .fold(rebuilt, |acc, s| Tree::node(&acc, s)),
        }
    }

    /// Delete the leaf at `pos` (depth-first leaf order) and contract the
    /// resulting unary vertex. A single-leaf tree maps to the empty result.
    pub fn remove_leaf(&self, pos: usize) -> Result<Option<Tree>> {
        if pos >= self.n_leaves() {
            return Err(Error::BadIndex(pos));
        }
        let mut counter = 0usize;
        Ok(self.remove_leaf_inner(pos, &mut counter))
    }

    fn remove_leaf_inner(&self, pos: usize, counter: &mut usize) -> Option<Tree> {
        match self.kind() {
            TreeKind::Leaf(_) => {
                let here = *counter;
                *counter += 1;
                if here == pos {
                    None
                } else {
                    Some(self.clone())
                }
            }
            TreeKind::Node(a, b) => {
                let ra = a.remove_leaf_inner(pos, counter);
                let rb = b.remove_leaf_inner(pos, counter);
                match (ra, rb) {
                    (Some(x), Some(y)) => Some(Tree::node(&x, &y)),
                    (Some(x), None) => Some(x),
                    (None, Some(y)) => Some(y),
                    (None, None) => unreachable!("only one leaf removed"),
                }
            }
        }
    }
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        self.enc() == other.enc()
    }
}
impl Eq for Tree {}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n_leaves(), self.enc()).cmp(&(other.n_leaves(), other.enc()))
    }
}

impl std::hash::Hash for Tree {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.enc().hash(state);
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            TreeKind::Leaf(l) => write!(f, "{l}"),
            TreeKind::Node(a, b) => write!(f, "({a} {b})"),
        }
    }
}

/// Raw unordered tree description, as produced by parsing or scrambling.
#[derive(Debug, Clone)]
pub struct RawTree {
    pub label: Option<String>,
    pub children: Vec<RawTree>,
}

impl RawTree {
    pub fn leaf(label: &str) -> RawTree {
        RawTree {
            label: Some(label.to_string()),
            children: Vec::new(),
        }
    }

    pub fn node(children: Vec<RawTree>) -> RawTree {
        RawTree {
            label: None,
            children,
        }
    }
}

/// Reduce a raw description to the unique canonical representative.
/// Idempotent; invariant under any child-order permutation of the input.
pub fn canonicalize(raw: &RawTree) -> Result<Tree> {
    match raw.children.len() {
        0 => {
            let text = raw
                .label
                .as_deref()
                .ok_or_else(|| Error::MalformedTree("unlabelled leaf".to_string()))?;
            Ok(Tree::leaf(Label::new(text)?))
        }
        2 => {
            let a = canonicalize(&raw.children[0])?;
            let b = canonicalize(&raw.children[1])?;
            Ok(Tree::node(&a, &b))
        }
        n => Err(Error::MalformedTree(format!(
            "internal node with {n} children"
        ))),
    }
}

/// An at-most-binary rooted tree, possibly with unary vertices. The
/// intermediate shape of coproduct remainders before contraction.
#[derive(Debug, Clone)]
pub enum Sapling {
    Leaf(Label),
    One(Box<Sapling>),
    Two(Box<Sapling>, Box<Sapling>),
}

impl Sapling {
    pub fn from_raw(raw: &RawTree) -> Result<Sapling> {
        match raw.children.len() {
            0 => {
                let text = raw
                    .label
                    .as_deref()
                    .ok_or_else(|| Error::MalformedTree("unlabelled leaf".to_string()))?;
                Ok(Sapling::Leaf(Label::new(text)?))
            }
            1 => Ok(Sapling::One(Box::new(Sapling::from_raw(&raw.children[0])?))),
            2 => Ok(Sapling::Two(
                Box::new(Sapling::from_raw(&raw.children[0])?),
                Box::new(Sapling::from_raw(&raw.children[1])?),
            )),
            n => Err(Error::NonBinaryInput(n)),
        }
    }
}

/// Contract every unary vertex to its child, producing the unique full
/// binary tree. A unary chain over a leaf becomes that leaf. Empty in,
/// empty out.
pub fn contract_to_binary(s: Option<&Sapling>) -> Option<Tree> {
    s.map(contract_sapling)
}

pub fn contract_sapling(s: &Sapling) -> Tree {
    match s {
        Sapling::Leaf(l) => Tree::leaf(l.clone()),
        Sapling::One(x) => contract_sapling(x),
        Sapling::Two(a, b) => Tree::node(&contract_sapling(a), &contract_sapling(b)),
    }
}

/// A canonical multiset of trees: the monomial basis of the algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Forest {
    trees: Vec<Tree>,
}

// Degree-first order so linear combinations iterate by grading.
impl Ord for Forest {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n_leaves(), &self.trees).cmp(&(other.n_leaves(), &other.trees))
    }
}

impl PartialOrd for Forest {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Forest {
    /// The empty forest, i.e. the unit 1.
    pub fn empty() -> Forest {
        Forest { trees: Vec::new() }
    }

    pub fn single(t: Tree) -> Forest {
        Forest { trees: vec![t] }
    }

    pub fn from_trees(mut trees: Vec<Tree>) -> Forest {
        trees.sort();
        Forest { trees }
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn n_trees(&self) -> usize {
        self.trees.len()
    }

    pub fn n_leaves(&self) -> usize {
        self.trees.iter().map(Tree::n_leaves).sum()
    }

    /// Disjoint union (the product of the algebra on basis elements).
    pub fn union(&self, other: &Forest) -> Forest {
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        Forest::from_trees(trees)
    }

    /// Distinct tree classes with multiplicities, in canonical order.
    pub fn multiplicities(&self) -> Vec<(&Tree, usize)> {
        let mut out: Vec<(&Tree, usize)> = Vec::new();
        for t in &self.trees {
            match out.last_mut() {
                Some((u, m)) if *u == t => *m += 1,
                _ => out.push((t, 1)),
            }
        }
        out
    }

    /// s_F = prod a_i! * s_{T_i}^{a_i} over distinct classes.
    pub fn aut_order(&self) -> u64 {
        let mut s = 1u64;
        for (t, m) in self.multiplicities() {
            for k in 1..=m as u64 {
                s *= k;
            }
            s *= t.aut_order().pow(m as u32);
        }
        s
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trees.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.trees.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(", "))
    }
}

/// An edge of a forest: component index plus depth-first edge index within
/// that component. Edge 0 is the ghost root edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub component: usize,
    pub edge: usize,
}

/// All isomorphism classes of unlabelled trees with `n` leaves, sorted.
/// The counts follow the Wedderburn-Etherington numbers.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>> {
    if n > MAX_TREE_LEAVES {
        return Err(Error::ResourceLimit(format!(
            "tree enumeration capped at {MAX_TREE_LEAVES} leaves, got {n}"
        )));
    }
    let mut memo: Vec<Vec<Tree>> = vec![Vec::new(); n + 1];
    Ok(enumerate_trees_memo(n, &mut memo))
}

fn enumerate_trees_memo(n: usize, memo: &mut Vec<Vec<Tree>>) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    if !memo[n].is_empty() {
        return memo[n].clone();
    }
    let mut out = Vec::new();
    if n == 1 {
        out.push(Tree::bullet());
    } else {
        for i in 1..=n / 2 {
            let left = enumerate_trees_memo(i, memo);
            let right = enumerate_trees_memo(n - i, memo);
            for (ai, a) in left.iter().enumerate() {
                for (bi, b) in right.iter().enumerate() {
                    if 2 * i == n && bi < ai {
                        continue;
                    }
                    out.push(Tree::node(a, b));
                }
            }
        }
    }
    out.sort_by(|a, b| a.enc().cmp(b.enc()));
    out.dedup();
    memo[n] = out.clone();
    out
}

/// All multisets of unlabelled trees with total leaf count `n`.
pub fn enumerate_forests(n: usize) -> Result<Vec<Forest>> {
    if n > MAX_FOREST_LEAVES {
        return Err(Error::ResourceLimit(format!(
            "forest enumeration capped at {MAX_FOREST_LEAVES} leaves, got {n}"
        )));
    }
    // One flat pool of all trees with <= n leaves, in canonical order.
    let mut pool: Vec<Tree> = Vec::new();
    for k in 1..=n {
        pool.extend(enumerate_trees(k)?);
    }
    pool.sort();
    let mut out = Vec::new();
    let mut acc: Vec<Tree> = Vec::new();
    pick_forests(&pool, 0, n, &mut acc, &mut out);
    out.sort();
    Ok(out)
}

fn pick_forests(
    pool: &[Tree],
    from: usize,
    remaining: usize,
    acc: &mut Vec<Tree>,
    out: &mut Vec<Forest>,
) {
    if remaining == 0 {
        out.push(Forest::from_trees(acc.clone()));
        return;
    }
    for i in from..pool.len() {
        let k = pool[i].n_leaves();
        if k > remaining {
            break;
        }
        acc.push(pool[i].clone());
        pick_forests(pool, i, remaining - k, acc, out);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_forest, parse_tree};

    fn t(s: &str) -> Tree {
        parse_tree(s).unwrap()
    }

    #[test]
    fn nonplanarity_identification() {
        assert_eq!(t("((a b) c)"), t("(c (b a))"));
        assert_eq!(t("((a b) c)").enc(), t("(c (b a))").enc());
    }

    #[test]
    fn aut_orders_from_table() {
        assert_eq!(t("a").aut_order(), 1);
        assert_eq!(t("(a b)").aut_order(), 1);
        assert_eq!(t("(a a)").aut_order(), 2);
        assert_eq!(t("((a b) c)").aut_order(), 1);
        assert_eq!(t("((a a) b)").aut_order(), 2);
        assert_eq!(t("((a b) (a b))").aut_order(), 2);
        assert_eq!(t("((a a) (b b))").aut_order(), 4);
        assert_eq!(t("((a a) (a a))").aut_order(), 8);
    }

    #[test]
    fn forest_aut_orders() {
        let f = parse_forest("*, *, (* *)").unwrap();
        assert_eq!(f.aut_order(), 4);
        assert_eq!(Forest::empty().aut_order(), 1);
        assert_eq!(Forest::single(t("((a b) (a b))")).aut_order(), 2);
    }

    #[test]
    fn wedderburn_etherington_counts() {
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23];
        for (i, w) in expected.iter().enumerate() {
            assert_eq!(enumerate_trees(i + 1).unwrap().len(), *w, "n={}", i + 1);
        }
        assert!(enumerate_trees(13).is_err());
    }

    #[test]
    fn forest_dimension_counts() {
        // dim H_n for n = 0..7.
        let expected = [1usize, 1, 2, 3, 6, 10, 20, 37];
        for (n, d) in expected.iter().enumerate() {
            assert_eq!(enumerate_forests(n).unwrap().len(), *d, "n={n}");
        }
        assert_eq!(enumerate_forests(0).unwrap(), vec![Forest::empty()]);
    }

    #[test]
    fn edge_counts() {
        for n in 1..=10 {
            for tr in enumerate_trees(n).unwrap() {
                assert_eq!(tr.n_edges(), 2 * n - 2);
                assert_eq!(tr.n_internal(), n - 1);
            }
        }
    }

    #[test]
    fn remove_leaf_examples() {
        let tr = t("((a b) c)");
        // leaves in DFS order: a, b, c
        assert_eq!(tr.remove_leaf(2).unwrap().unwrap(), t("(a b)"));
        assert_eq!(tr.remove_leaf(0).unwrap().unwrap(), t("(b c)"));
        assert_eq!(Tree::bullet().remove_leaf(0).unwrap(), None);
        assert!(tr.remove_leaf(3).is_err());
    }

    #[test]
    fn contract_examples() {
        // chain root -> x -> leaf a contracts to the leaf
        let chain = Sapling::One(Box::new(Sapling::One(Box::new(Sapling::Leaf(
            Label::new("a").unwrap(),
        )))));
        assert_eq!(contract_sapling(&chain), t("a"));
        // root with a single child (b c)
        let s = Sapling::One(Box::new(Sapling::Two(
            Box::new(Sapling::Leaf(Label::new("b").unwrap())),
            Box::new(Sapling::Leaf(Label::new("c").unwrap())),
        )));
        assert_eq!(contract_sapling(&s), t("(b c)"));
        assert_eq!(contract_to_binary(None), None);
    }

    #[test]
    fn malformed_inputs() {
        let raw = RawTree::node(vec![
            RawTree::leaf("a"),
            RawTree::leaf("b"),
            RawTree::leaf("c"),
        ]);
        assert!(matches!(
            canonicalize(&raw),
            Err(Error::MalformedTree(_))
        ));
        assert!(Label::new("").is_err());
        assert!(Label::new("a b").is_err());
        assert!(matches!(
            Sapling::from_raw(&raw),
            Err(Error::NonBinaryInput(3))
        ));
    }

    #[test]
    fn insert_at_edge_basics() {
        let tr = t("((a b) c)");
        let s = t("(d e)");
        // edge 1 is the edge above the (a b) cherry
        assert_eq!(tr.insert_at_edge(1, &s).unwrap(), t("(((a b) (d e)) c)"));
        assert_eq!(tr.insert_at_edge(0, &s).unwrap(), t("(((a b) c) (d e))"));
        let b = Tree::bullet();
        assert_eq!(b.insert_at_edge(0, &b).unwrap(), t("(* *)"));
        assert!(b.insert_at_edge(1, &b).is_err());
    }

    #[test]
    fn subtree_at_edge_indexing() {
        let tr = t("((a b) c)");
        assert_eq!(tr.subtree_at_edge(0).unwrap(), &tr);
        assert_eq!(tr.subtree_at_edge(1).unwrap(), &t("(a b)"));
        assert_eq!(tr.subtree_at_edge(2).unwrap(), &t("a"));
        assert_eq!(tr.subtree_at_edge(3).unwrap(), &t("b"));
        assert_eq!(tr.subtree_at_edge(4).unwrap(), &t("c"));
        assert!(tr.subtree_at_edge(5).is_err());
    }

    #[test]
    fn canonicalize_scramble_invariance() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..=8 {
            for tr in enumerate_trees(n).unwrap() {
                // also exercise a labelled variant
                for labelled in [false, true] {
                    let base = if labelled {
                        distinct_labelled(&tr)
                    } else {
                        tr.clone()
                    };
                    for _ in 0..(1000 / 8) {
                        let raw = scramble(&base, &mut rng);
                        assert_eq!(canonicalize(&raw).unwrap(), base);
                    }
                }
            }
        }
    }

    fn distinct_labelled(t: &Tree) -> Tree {
        let mut i = 0usize;
        fn go(t: &Tree, i: &mut usize) -> Tree {
            match t.kind() {
                TreeKind::Leaf(_) => {
                    let l = Label::new(&format!("x{}", *i)).unwrap();
                    *i += 1;
                    Tree::leaf(l)
                }
                TreeKind::Node(a, b) => Tree::node(&go(a, i), &go(b, i)),
            }
        }
        go(t, &mut i)
    }

    fn scramble<R: rand::Rng>(t: &Tree, rng: &mut R) -> RawTree {
        match t.kind() {
            TreeKind::Leaf(l) => RawTree::leaf(l.as_str()),
            TreeKind::Node(a, b) => {
                let (x, y) = (scramble(a, rng), scramble(b, rng));
                if rng.gen_bool(0.5) {
                    RawTree::node(vec![x, y])
                } else {
                    RawTree::node(vec![y, x])
                }
            }
        }
    }

    // Brute-force automorphism count: a leaf permutation extends to a
    // root-preserving automorphism iff it preserves labels and all pairwise
    // LCA depths.
    fn aut_brute(t: &Tree) -> u64 {
        let n = t.n_leaves();
        let labels = t.leaves();
        let mut depth = vec![vec![0usize; n]; n];
        fn fill(t: &Tree, d: usize, off: usize, depth: &mut Vec<Vec<usize>>) {
            if let TreeKind::Node(a, b) = t.kind() {
                let na = a.n_leaves();
                for i in 0..na {
                    for j in na..t.n_leaves() {
                        depth[off + i][off + j] = d;
                        depth[off + j][off + i] = d;
                    }
                }
                fill(a, d + 1, off, depth);
                fill(b, d + 1, off + na, depth);
            }
        }
        fill(t, 0, 0, &mut depth);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0u64;
        loop {
            let ok = (0..n).all(|i| labels[i] == labels[perm[i]])
                && (0..n).all(|i| (0..n).all(|j| depth[i][j] == depth[perm[i]][perm[j]]));
            if ok {
                count += 1;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        count
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn aut_order_matches_brute_force() {
        for n in 1..=6 {
            for tr in enumerate_trees(n).unwrap() {
                assert_eq!(tr.aut_order(), aut_brute(&tr), "tree {tr}");
            }
        }
        // spot-check labelled ones from the table
        for s in ["(a a)", "((a a) b)", "((a b) (a b))", "((a a) (b b))"] {
            let tr = t(s);
            assert_eq!(tr.aut_order(), aut_brute(&tr), "tree {tr}");
        }
    }

    #[test]
    fn aut_power_of_two_up_to_ten_leaves() {
        for n in 1..=10 {
            for tr in enumerate_trees(n).unwrap() {
                let s = tr.aut_order();
                assert!(s.is_power_of_two());
            }
        }
    }
}
