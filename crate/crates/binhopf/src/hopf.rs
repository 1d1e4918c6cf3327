//! The Hopf algebra of binary forests: coproduct by binary-admissible cuts,
//! counit, iterated coproduct, antipode (recursive and by total cuts), the
//! comb-tree closed formula, and the leaf-count character.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use num::One;

use crate::error::{Error, Result};
use crate::linear::{rat, rat_u, LinComb, Rational, Tensor2, TensorN};
use crate::tree::{EdgeRef, Forest, Label, Tree, TreeKind, MAX_CUT_LEAVES};

/// Bound on the iterated coproduct depth.
pub const MAX_ITERATED: usize = 6;

/// A subset of leaf positions of a tree; indexes one coproduct term.
#[derive(Debug, Clone)]
pub struct CutSubset {
    pub tree: Tree,
    pub leaves: BTreeSet<usize>,
}

/// An edge subset with at most one edge per root-to-leaf path and never
/// both children of one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryAdmissibleCut {
    pub tree: Tree,
    pub edges: Vec<EdgeRef>,
}

/// Result of translating a leaf subset into a cut: the full subset is the
/// distinguished total cut, everything else is binary-admissible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutForSubset {
    Cut(BinaryAdmissibleCut),
    Total,
}

// One coproduct term per leaf subset: `full` marks the subset covering the
// entire subtree, in which case the whole subtree is pruned intact.
struct SplitEntry {
    full: bool,
    pruned: Vec<Tree>,
    remainder: Option<Tree>,
}

fn split_terms(t: &Tree) -> Vec<SplitEntry> {
    match t.kind() {
        TreeKind::Leaf(_) => vec![
            SplitEntry {
                full: false,
                pruned: Vec::new(),
                remainder: Some(t.clone()),
            },
            SplitEntry {
                full: true,
                pruned: vec![t.clone()],
                remainder: None,
            },
        ],
        TreeKind::Node(a, b) => {
            let ea = split_terms(a);
            let eb = split_terms(b);
            let mut out = Vec::with_capacity(ea.len() * eb.len());
            for x in &ea {
                for y in &eb {
                    if x.full && y.full {
                        out.push(SplitEntry {
                            full: true,
                            pruned: vec![t.clone()],
                            remainder: None,
                        });
                        continue;
                    }
                    let mut pruned = x.pruned.clone();
                    pruned.extend(y.pruned.iter().cloned());
                    let remainder = match (&x.remainder, &y.remainder) {
                        (Some(ra), Some(rb)) => Some(Tree::node(ra, rb)),
                        (Some(ra), None) => Some(ra.clone()),
                        (None, Some(rb)) => Some(rb.clone()),
                        (None, None) => unreachable!("handled by the full case"),
                    };
                    out.push(SplitEntry {
                        full: false,
                        pruned,
                        remainder,
                    });
                }
            }
            out
        }
    }
}

/// Coproduct of a single tree: one term per subset of leaf positions,
/// pruned part left, remainder right. Total coefficient mass is 2^n.
pub fn coproduct_tree(t: &Tree) -> Tensor2 {
    let mut out = Tensor2::zero();
    for e in split_terms(t) {
        let left = Forest::from_trees(e.pruned);
        let right = match e.remainder {
            Some(r) => Forest::single(r),
            None => Forest::empty(),
        };
        out.add_term((left, right), Rational::one());
    }
    out
}

fn coproduct_forest(f: &Forest) -> Tensor2 {
    let mut out = Tensor2::zero();
    out.add_term((Forest::empty(), Forest::empty()), Rational::one());
    for t in f.trees() {
        out = out.product(&coproduct_tree(t));
    }
    out
}

/// Multiplicative and linear extension of the coproduct.
pub fn coproduct(f: &LinComb) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (forest, c) in f.terms() {
        for (k, x) in coproduct_forest(forest).terms() {
            out.add_term(k.clone(), c * x);
        }
    }
    out
}

enum SubsetCut {
    Full,
    Partial(Vec<usize>),
}

fn subset_cut(t: &Tree, root_edge: usize, leaf_offset: usize, subset: &BTreeSet<usize>) -> SubsetCut {
    match t.kind() {
        TreeKind::Leaf(_) => {
            if subset.contains(&leaf_offset) {
                SubsetCut::Full
            } else {
                SubsetCut::Partial(Vec::new())
            }
        }
        TreeKind::Node(a, b) => {
            let a_edge = root_edge + 1;
            let b_edge = root_edge + 1 + a.n_edges_with_ghost();
            let ra = subset_cut(a, a_edge, leaf_offset, subset);
            let rb = subset_cut(b, b_edge, leaf_offset + a.n_leaves(), subset);
            match (ra, rb) {
                (SubsetCut::Full, SubsetCut::Full) => SubsetCut::Full,
                (SubsetCut::Full, SubsetCut::Partial(mut e)) => {
                    e.push(a_edge);
                    SubsetCut::Partial(e)
                }
                (SubsetCut::Partial(e), SubsetCut::Full) => {
                    let mut e = e;
                    e.push(b_edge);
                    SubsetCut::Partial(e)
                }
                (SubsetCut::Partial(ea), SubsetCut::Partial(eb)) => {
                    let mut e = ea;
                    e.extend(eb);
                    SubsetCut::Partial(e)
                }
            }
        }
    }
}

/// The unique binary-admissible cut pruning exactly the given leaves; the
/// full subset maps to the total-cut marker.
pub fn cut_for_subset(c: &CutSubset) -> CutForSubset {
    match subset_cut(&c.tree, 0, 0, &c.leaves) {
        SubsetCut::Full => CutForSubset::Total,
        SubsetCut::Partial(mut edges) => {
            edges.sort_unstable();
            CutForSubset::Cut(BinaryAdmissibleCut {
                tree: c.tree.clone(),
                edges: edges
                    .into_iter()
                    .map(|e| EdgeRef {
                        component: 0,
                        edge: e,
                    })
                    .collect(),
            })
        }
    }
}

// Valid cut options for the subtree hanging at `root_edge`: either the root
// edge itself is cut (bool flag true) or a cut-set strictly below it.
fn cut_options(t: &Tree, root_edge: usize) -> Vec<(bool, Vec<usize>)> {
    let mut out = vec![(true, vec![root_edge])];
    match t.kind() {
        TreeKind::Leaf(_) => out.push((false, Vec::new())),
        TreeKind::Node(a, b) => {
            let a_edge = root_edge + 1;
            let b_edge = root_edge + 1 + a.n_edges_with_ghost();
            for (ca, ea) in cut_options(a, a_edge) {
                for (cb, eb) in cut_options(b, b_edge) {
                    if ca && cb {
                        continue;
                    }
                    let mut e = ea.clone();
                    e.extend(eb.iter().copied());
                    out.push((false, e));
                }
            }
        }
    }
    out
}

/// All binary-admissible cuts of `t`; there are 2^n - 1 of them.
pub fn enumerate_binary_admissible_cuts(t: &Tree) -> Result<Vec<BinaryAdmissibleCut>> {
    if t.n_leaves() > MAX_CUT_LEAVES {
        return Err(Error::ResourceLimit(format!(
            "cut enumeration capped at {MAX_CUT_LEAVES} leaves"
        )));
    }
    let mut cuts = Vec::new();
    match t.kind() {
        TreeKind::Leaf(_) => cuts.push(Vec::new()),
        TreeKind::Node(a, b) => {
            let a_edge = 1;
            let b_edge = 1 + a.n_edges_with_ghost();
            for (ca, ea) in cut_options(a, a_edge) {
                for (cb, eb) in cut_options(b, b_edge) {
                    if ca && cb {
                        continue;
                    }
                    let mut e = ea.clone();
                    e.extend(eb.iter().copied());
                    e.sort_unstable();
                    cuts.push(e);
                }
            }
        }
    }
    cuts.sort();
    Ok(cuts
        .into_iter()
        .map(|edges| BinaryAdmissibleCut {
            tree: t.clone(),
            edges: edges
                .into_iter()
                .map(|e| EdgeRef {
                    component: 0,
                    edge: e,
                })
                .collect(),
        })
        .collect())
}

/// Left-nested iterated coproduct; a rank-(k+1) tensor.
pub fn iterated_coproduct(f: &LinComb, k: usize) -> Result<TensorN> {
    if k == 0 || k > MAX_ITERATED {
        return Err(Error::ResourceLimit(format!(
            "iterated coproduct depth must be in 1..={MAX_ITERATED}"
        )));
    }
    Ok(iterated_left(f, k))
}

fn iterated_left(f: &LinComb, k: usize) -> TensorN {
    if k == 1 {
        let mut out = TensorN::zero();
        for ((l, r), c) in coproduct(f).terms() {
            out.add_term(vec![l.clone(), r.clone()], c.clone());
        }
        return out;
    }
    let mut out = TensorN::zero();
    for ((l, r), c) in coproduct(f).terms() {
        let inner = iterated_left(&LinComb::from_forest(l.clone()), k - 1);
        for (key, x) in inner.terms() {
            let mut key = key.clone();
            key.push(r.clone());
            out.add_term(key, c * x);
        }
    }
    out
}

/// Right-nested variant; equal to the left-nested one by coassociativity.
pub fn iterated_coproduct_right(f: &LinComb, k: usize) -> Result<TensorN> {
    if k == 0 || k > MAX_ITERATED {
        return Err(Error::ResourceLimit(format!(
            "iterated coproduct depth must be in 1..={MAX_ITERATED}"
        )));
    }
    Ok(iterated_right(f, k))
}

fn iterated_right(f: &LinComb, k: usize) -> TensorN {
    if k == 1 {
        return iterated_left(f, 1);
    }
    let mut out = TensorN::zero();
    for ((l, r), c) in coproduct(f).terms() {
        let inner = iterated_right(&LinComb::from_forest(r.clone()), k - 1);
        for (key, x) in inner.terms() {
            let mut full = vec![l.clone()];
            full.extend(key.iter().cloned());
            out.add_term(full, c * x);
        }
    }
    out
}

/// Coefficient of the empty forest.
pub fn counit(f: &LinComb) -> Rational {
    f.coefficient_of(&Forest::empty())
}

fn antipode_memo() -> &'static Mutex<HashMap<String, LinComb>> {
    static MEMO: OnceLock<Mutex<HashMap<String, LinComb>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn antipode_tree(t: &Tree) -> LinComb {
    if let Some(hit) = antipode_memo().lock().unwrap().get(t.enc()) {
        return hit.clone();
    }
    // S(T) = -T - sum S(T') T'' over the reduced coproduct.
    let mut out = LinComb::from_term(Forest::single(t.clone()), rat(-1));
    for ((p, r), c) in coproduct_tree(t).terms() {
        if p.is_empty() || r.is_empty() {
            continue;
        }
        let term = antipode_forest(p).multiply(&LinComb::from_forest(r.clone()));
        out = out.add(&term.scale(&-c.clone()));
    }
    antipode_memo()
        .lock()
        .unwrap()
        .insert(t.enc().to_string(), out.clone());
    out
}

fn antipode_forest(f: &Forest) -> LinComb {
    // S is an algebra homomorphism here (H is commutative).
    let mut out = LinComb::one();
    for t in f.trees() {
        out = out.multiply(&antipode_tree(t));
    }
    out
}

/// The antipode, extended linearly and multiplicatively.
pub fn antipode(f: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (forest, c) in f.terms() {
        out = out.add(&antipode_forest(forest).scale(c));
    }
    out
}

/// A choice at each internal node: keep both children, or cut one child edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeChoice {
    Keep,
    CutLeft,
    CutRight,
}

/// One of the 3^(n-1) binary-total cuts of a tree, as the per-node choices
/// in depth-first node order.
#[derive(Debug, Clone)]
pub struct BinaryTotalCut {
    pub tree: Tree,
    pub choices: Vec<NodeChoice>,
}

fn total_cut_terms(t: &Tree) -> Vec<(Vec<Tree>, Tree)> {
    // Returns (severed components, contracted root component) per cut.
    match t.kind() {
        TreeKind::Leaf(_) => vec![(Vec::new(), t.clone())],
        TreeKind::Node(a, b) => {
            let ta = total_cut_terms(a);
            let tb = total_cut_terms(b);
            let mut out = Vec::with_capacity(3 * ta.len() * tb.len());
            for (ca, ra) in &ta {
                for (cb, rb) in &tb {
                    let mut both = ca.clone();
                    both.extend(cb.iter().cloned());
                    // keep
                    out.push((both.clone(), Tree::node(ra, rb)));
                    // cut the left child edge: ra becomes its own component
                    let mut cl = both.clone();
                    cl.push(ra.clone());
                    out.push((cl, rb.clone()));
                    // cut the right child edge
                    let mut cr = both;
                    cr.push(rb.clone());
                    out.push((cr, ra.clone()));
                }
            }
            out
        }
    }
}

/// Antipode via the total-cut expansion: sum over binary-total cuts of
/// (-1)^(components) times the forest of contracted components.
pub fn antipode_by_total_cuts(t: &Tree) -> LinComb {
    let mut out = LinComb::zero();
    for (severed, root) in total_cut_terms(t) {
        let k = severed.len() + 1;
        let sign = if k % 2 == 1 { rat(-1) } else { rat(1) };
        let mut trees = severed;
        trees.push(root);
        out.add_term(Forest::from_trees(trees), sign);
    }
    out
}

/// Number of binary-total cuts of `t`, i.e. 3^(n-1).
pub fn count_binary_total_cuts(t: &Tree) -> u64 {
    3u64.pow((t.n_leaves() - 1) as u32)
}

/// The unlabelled comb tree with n leaves: C_1 = bullet, C_n = (C_{n-1} *).
pub fn comb_tree(n: usize) -> Tree {
    assert!(n >= 1);
    let mut t = Tree::bullet();
    for _ in 1..n {
        t = Tree::node(&t, &Tree::bullet());
    }
    t
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut r = 1u64;
    for i in 0..k.min(n - k) {
        r = r * (n - i) as u64 / (i + 1) as u64;
    }
    r
}

fn comb_power(i: usize) -> Forest {
    Forest::from_trees(vec![Tree::bullet(); i])
}

/// The closed formula for the coproduct of C_n on the comb basis.
pub fn comb_coproduct_formula(n: usize) -> Tensor2 {
    assert!(n >= 1);
    if n == 1 {
        return coproduct_tree(&comb_tree(1));
    }
    let mut out = Tensor2::zero();
    for i in 0..=n - 2 {
        out.add_term(
            (comb_power(i), Forest::single(comb_tree(n - i))),
            rat_u(binom(n - 2, i)),
        );
    }
    for j in 0..=n - 2 {
        out.add_term(
            (comb_power(j + 1), Forest::single(comb_tree(n - j - 1))),
            rat_u(2 * binom(n - 2, j)),
        );
    }
    for k in 2..=n - 1 {
        for l in 0..=n - k - 1 {
            let mut left = vec![comb_tree(k)];
            left.extend(vec![Tree::bullet(); l]);
            out.add_term(
                (Forest::from_trees(left), Forest::single(comb_tree(n - k - l))),
                rat_u(binom(n - k - 1, l)),
            );
        }
    }
    out.add_term(
        (Forest::single(comb_tree(n)), Forest::empty()),
        Rational::one(),
    );
    out
}

/// Exponent vector of leaf labels: the image of a forest under the
/// character morphism into a polynomial algebra.
pub fn leaf_character(f: &Forest) -> BTreeMap<Label, u64> {
    let mut out = BTreeMap::new();
    for t in f.trees() {
        for l in t.leaves() {
            *out.entry(l).or_insert(0) += 1;
        }
    }
    out
}
