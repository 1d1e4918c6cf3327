//! Edge-insertion pre-Lie structure, its extension to simultaneous grafting
//! on forest monomials (triangle and star products, shuffle coproduct), and
//! the growth/pruning operators with the pre-Lie exponential.

use std::collections::{BTreeMap, HashMap};

use num::One;

use crate::error::{Error, Result};
use crate::linear::{rat_frac, LinComb, Rational, Tensor2};
use crate::tree::{EdgeRef, Forest, Tree};

/// Upper bound on the number of grafts enumerated in one product.
pub const MAX_GRAFTS: usize = 10_000_000;

/// Largest degree accepted by the pre-Lie exponential.
pub const MAX_EXP_DEGREE: usize = 8;

/// Where one inserted tree goes: a concrete edge, or skipped entirely
/// (allowed only in the star product).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraftTarget {
    Edge(EdgeRef),
    Skip,
}

/// One simultaneous grafting of an indexed list of trees into a forest.
/// Identical inserted trees are distinguished by index; each targeted edge
/// carries a linear order of its indices, read top to bottom.
#[derive(Debug, Clone)]
pub struct Graft {
    pub base: Forest,
    pub inserted: Vec<Tree>,
    pub assignment: Vec<GraftTarget>,
    pub orders: BTreeMap<EdgeRef, Vec<usize>>,
}

/// All grafts of `inserted` into `base`. Skipping is permitted only when
/// `allow_skip` is set.
/// Number of grafts of `k` trees into a base with `e` edges: rising
/// factorials, summed over skipped subsets when skipping is allowed.
pub fn count_grafts(e: usize, k: usize, allow_skip: bool) -> u128 {
    fn rising(e: u128, m: usize) -> u128 {
        (0..m as u128)
            .map(|i| e + i)
            .fold(1u128, |a, b| a.saturating_mul(b))
    }
    if !allow_skip {
        return rising(e as u128, k);
    }
    let mut total = 0u128;
    let mut choose = 1u128; // C(k, j)
    for j in 0..=k {
        total = total.saturating_add(choose.saturating_mul(rising(e as u128, k - j)));
        if j < k {
            choose = choose * (k - j) as u128 / (j + 1) as u128;
        }
    }
    total
}

pub fn enumerate_grafts(base: &Forest, inserted: &[Tree], allow_skip: bool) -> Result<Vec<Graft>> {
    let mut edges = Vec::new();
    for (ci, t) in base.trees().iter().enumerate() {
        for e in 0..t.n_edges_with_ghost() {
            edges.push(EdgeRef { component: ci, edge: e });
        }
    }
    if count_grafts(edges.len(), inserted.len(), allow_skip) > MAX_GRAFTS as u128 {
        return Err(Error::ResourceLimit(format!(
            "graft enumeration capped at {MAX_GRAFTS}"
        )));
    }
    let mut out = Vec::new();
    let mut assignment = Vec::new();
    let mut orders: BTreeMap<EdgeRef, Vec<usize>> = BTreeMap::new();
    fn go(
        base: &Forest,
        inserted: &[Tree],
        edges: &[EdgeRef],
        allow_skip: bool,
        i: usize,
        assignment: &mut Vec<GraftTarget>,
        orders: &mut BTreeMap<EdgeRef, Vec<usize>>,
        out: &mut Vec<Graft>,
    ) -> Result<()> {
        if i == inserted.len() {
            if out.len() >= MAX_GRAFTS {
                return Err(Error::ResourceLimit(format!(
                    "graft enumeration capped at {MAX_GRAFTS}"
                )));
            }
            out.push(Graft {
                base: base.clone(),
                inserted: inserted.to_vec(),
                assignment: assignment.clone(),
                orders: orders.clone(),
            });
            return Ok(());
        }
        for &e in edges {
            assignment.push(GraftTarget::Edge(e));
            let len = orders.get(&e).map_or(0, |v| v.len());
            for pos in 0..=len {
                orders.entry(e).or_default().insert(pos, i);
                go(base, inserted, edges, allow_skip, i + 1, assignment, orders, out)?;
                orders.get_mut(&e).unwrap().remove(pos);
            }
            if orders.get(&e).is_some_and(|v| v.is_empty()) {
                orders.remove(&e);
            }
            assignment.pop();
        }
        if allow_skip {
            assignment.push(GraftTarget::Skip);
            go(base, inserted, edges, allow_skip, i + 1, assignment, orders, out)?;
            assignment.pop();
        }
        Ok(())
    }
    go(
        base, inserted, &edges, allow_skip, 0, &mut assignment, &mut orders, &mut out,
    )?;
    Ok(out)
}

/// The forest produced by performing one graft.
pub fn apply_graft(g: &Graft) -> Forest {
    let mut trees = Vec::with_capacity(g.base.n_trees());
    for (ci, t) in g.base.trees().iter().enumerate() {
        let mut plan: HashMap<usize, Vec<Tree>> = HashMap::new();
        for (e, idxs) in &g.orders {
            if e.component == ci {
                plan.insert(e.edge, idxs.iter().map(|&i| g.inserted[i].clone()).collect());
            }
        }
        trees.push(t.insert_many(&plan));
    }
    for (i, target) in g.assignment.iter().enumerate() {
        if matches!(target, GraftTarget::Skip) {
            trees.push(g.inserted[i].clone());
        }
    }
    Forest::from_trees(trees)
}

/// Triangle product on monomials: the sum over all no-skip grafts.
pub fn triangle_monomials(base: &Forest, inserted: &Forest) -> Result<LinComb> {
    let mut out = LinComb::zero();
    for g in enumerate_grafts(base, inserted.trees(), false)? {
        out.add_term(apply_graft(&g), Rational::one());
    }
    Ok(out)
}

/// Star product on monomials: grafts where any subset may be skipped.
pub fn star_monomials(base: &Forest, inserted: &Forest) -> Result<LinComb> {
    let mut out = LinComb::zero();
    for g in enumerate_grafts(base, inserted.trees(), true)? {
        out.add_term(apply_graft(&g), Rational::one());
    }
    Ok(out)
}

fn bilinear(
    a: &LinComb,
    b: &LinComb,
    op: impl Fn(&Forest, &Forest) -> Result<LinComb>,
) -> Result<LinComb> {
    let mut out = LinComb::zero();
    for (fa, ca) in a.terms() {
        for (fb, cb) in b.terms() {
            out = out.add(&op(fa, fb)?.scale(&(ca * cb)));
        }
    }
    Ok(out)
}

/// Bilinear triangle product.
pub fn triangle(a: &LinComb, b: &LinComb) -> Result<LinComb> {
    bilinear(a, b, triangle_monomials)
}

/// Bilinear star product.
pub fn star(a: &LinComb, b: &LinComb) -> Result<LinComb> {
    bilinear(a, b, star_monomials)
}

/// The pre-Lie product of two trees: one insertion per edge of `t`,
/// including the ghost root edge (the merge term).
pub fn prelie(t: &Tree, s: &Tree) -> LinComb {
    let mut out = LinComb::zero();
    for e in 0..t.n_edges_with_ghost() {
        out.add_term(
            Forest::single(t.insert_at_edge(e, s).expect("edge in range")),
            Rational::one(),
        );
    }
    out
}

/// Associator (x ◁ y) ◁ z - x ◁ (y ◁ z).
pub fn associator(x: &LinComb, y: &LinComb, z: &LinComb) -> Result<LinComb> {
    Ok(triangle(&triangle(x, y)?, z)?.sub(&triangle(x, &triangle(y, z)?)?))
}

/// Commutator bracket x ◁ y - y ◁ x.
pub fn lie_bracket(x: &LinComb, y: &LinComb) -> Result<LinComb> {
    Ok(triangle(x, y)?.sub(&triangle(y, x)?))
}

/// Unshuffle of a monomial over its component indices.
pub fn shuffle_coproduct(f: &Forest) -> Tensor2 {
    let n = f.n_trees();
    let mut out = Tensor2::zero();
    for mask in 0u64..(1u64 << n) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (i, t) in f.trees().iter().enumerate() {
            if mask & (1 << i) != 0 {
                left.push(t.clone());
            } else {
                right.push(t.clone());
            }
        }
        out.add_term(
            (Forest::from_trees(left), Forest::from_trees(right)),
            Rational::one(),
        );
    }
    out
}

/// Growth operator: insert one new leaf in every possible edge position.
pub fn growth(a: &LinComb) -> Result<LinComb> {
    triangle(a, &LinComb::from_forest(Forest::single(Tree::bullet())))
}

/// Pruning operator: remove one leaf in every possible position; the
/// single-leaf tree prunes to the empty monomial.
pub fn pruning(a: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (f, c) in a.terms() {
        for (ci, t) in f.trees().iter().enumerate() {
            for pos in 0..t.n_leaves() {
                let mut trees: Vec<Tree> = f.trees().to_vec();
                match t.remove_leaf(pos).expect("position in range") {
                    Some(rest) => trees[ci] = rest,
                    None => {
                        trees.remove(ci);
                    }
                }
                out.add_term(Forest::from_trees(trees), c.clone());
            }
        }
    }
    out
}

/// Truncated pre-Lie exponential of the single-leaf tree: the sum over
/// k of growth^(k-1)(leaf) / k!, through the requested degree.
pub fn prelie_exponential(max_degree: usize) -> Result<LinComb> {
    if max_degree == 0 || max_degree > MAX_EXP_DEGREE {
        return Err(Error::ResourceLimit(format!(
            "exponential degree must be in 1..={MAX_EXP_DEGREE}"
        )));
    }
    let mut out = LinComb::zero();
    let mut power = LinComb::from_forest(Forest::single(Tree::bullet()));
    let mut factorial: i64 = 1;
    for k in 1..=max_degree {
        factorial *= k as i64;
        out = out.add(&power.scale(&rat_frac(1, factorial)));
        if k < max_degree {
            power = growth(&power)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{rat, rat_u};
    use crate::parse::{parse_forest, parse_tree};
    use crate::tree::enumerate_trees;

    fn t(s: &str) -> Tree {
        parse_tree(s).unwrap()
    }
    fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }
    fn lc(s: &str) -> LinComb {
        LinComb::from_forest(f(s))
    }

    #[test]
    fn prelie_five_tree_display() {
        // ((a b) c) with (d e) inserted along each of the five edges.
        let got = prelie(&t("((a b) c)"), &t("(d e)"));
        assert_eq!(got.len(), 5);
        for s in [
            "(((a b) c) (d e))",
            "((a b) ((d e) c))",
            "(((a (d e)) b) c)",
            "((a ((d e) b)) c)",
            "(((a b) (d e)) c)",
        ] {
            assert_eq!(got.coefficient_of(&f(s)), rat(1), "{s}");
        }
    }

    #[test]
    fn prelie_unlabelled_examples() {
        assert_eq!(
            prelie(&t("(* *)"), &t("*")),
            LinComb::from_term(f("((* *) *)"), rat(3))
        );
        assert_eq!(prelie(&t("*"), &t("(* *)")), lc("((* *) *)"));
    }

    #[test]
    fn prelie_agrees_with_triangle_on_trees() {
        for (a, b) in [("(* *)", "*"), ("((a b) c)", "(d e)"), ("*", "((* *) *)")] {
            assert_eq!(
                prelie(&t(a), &t(b)),
                triangle_monomials(&Forest::single(t(a)), &Forest::single(t(b))).unwrap()
            );
        }
    }

    #[test]
    fn graft_count_twelve() {
        // two trees into the cherry: 3 edges, so 6 ordered same-edge
        // placements plus 6 distinct-edge placements.
        let gs = enumerate_grafts(&f("(* *)"), &[t("c"), t("d")], false).unwrap();
        assert_eq!(gs.len(), 12);
        let same_edge = gs
            .iter()
            .filter(|g| g.orders.len() == 1 && g.orders.values().next().unwrap().len() == 2)
            .count();
        assert_eq!(same_edge, 6);
    }

    #[test]
    fn graft_counts_formula() {
        // no-skip graft count: sum over assignments of per-edge factorials.
        let base = f("((* *) *)");
        let ins = [t("*"), t("*"), t("*")];
        let gs = enumerate_grafts(&base, &ins, false).unwrap();
        // 5 edges, 3 items: 5*6*7 ordered placements (stars-and-bars with order)
        assert_eq!(gs.len(), 5 * 6 * 7);
        // skipping sums over skipped subsets: C(3,j) * rising factorials
        let with_skip = enumerate_grafts(&base, &ins, true).unwrap();
        assert_eq!(with_skip.len(), 5 * 6 * 7 + 3 * (5 * 6) + 3 * 5 + 1);
        assert_eq!(count_grafts(5, 3, true), with_skip.len() as u128);
        assert_eq!(count_grafts(5, 3, false), gs.len() as u128);
    }

    #[test]
    fn star_of_two_leaves() {
        let got = star(&lc("*"), &lc("*")).unwrap();
        assert_eq!(got.coefficient_of(&f("(* *)")), rat(1));
        assert_eq!(got.coefficient_of(&f("*, *")), rat(1));
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn star_coefficient_fourteen() {
        let got = star_monomials(&f("(* *)"), &f("*, *, (* *)")).unwrap();
        let target = f("((((* *) *) (* *)) *)");
        assert_eq!(got.coefficient_of(&target), rat(14));
    }

    #[test]
    fn triangle_unit_behaviour() {
        // grafting nothing is the identity; the empty base absorbs nothing.
        let x = lc("((* *) *)");
        assert_eq!(triangle(&x, &LinComb::one()).unwrap(), x);
        assert_eq!(
            star(&LinComb::one(), &lc("(* *)")).unwrap(),
            lc("(* *)")
        );
        assert_eq!(triangle(&LinComb::one(), &lc("*")).unwrap(), LinComb::zero());
    }

    #[test]
    fn vinberg_identity() {
        // right-symmetry of the associator on tree arguments
        let cases = [
            ("*", "*", "(* *)"),
            ("(* *)", "*", "*"),
            ("(a b)", "c", "(d e)"),
            ("((* *) *)", "(* *)", "*"),
        ];
        for (x, y, z) in cases {
            let a = associator(&lc(x), &lc(y), &lc(z)).unwrap();
            let b = associator(&lc(x), &lc(z), &lc(y)).unwrap();
            assert_eq!(a, b, "({x}, {y}, {z})");
        }
    }

    #[test]
    fn bracket_antisymmetry_and_leaf() {
        let a = lc("(* *)");
        let b = lc("*");
        let ab = lie_bracket(&a, &b).unwrap();
        let ba = lie_bracket(&b, &a).unwrap();
        assert_eq!(ab, ba.scale(&rat(-1)));
        // [wedge, leaf] = 3 C3 - C3 = 2 C3
        assert_eq!(ab, LinComb::from_term(f("((* *) *)"), rat(2)));
    }

    #[test]
    fn shuffle_coproduct_example() {
        let d = shuffle_coproduct(&f("*, *"));
        assert_eq!(d.coefficient_of(&(Forest::empty(), f("*, *"))), rat(1));
        assert_eq!(d.coefficient_of(&(f("*"), f("*"))), rat(2));
        assert_eq!(d.coefficient_of(&(f("*, *"), Forest::empty())), rat(1));
        assert_eq!(d.mass(), rat(4));
        let d = shuffle_coproduct(&Forest::empty());
        assert_eq!(d.mass(), rat(1));
    }

    #[test]
    fn growth_series() {
        let mut x = lc("*");
        x = growth(&x).unwrap();
        assert_eq!(x, lc("(* *)"));
        x = growth(&x).unwrap();
        assert_eq!(x, LinComb::from_term(f("((* *) *)"), rat(3)));
        x = growth(&x).unwrap();
        assert_eq!(x.coefficient_of(&f("(((* *) *) *)")), rat(12));
        assert_eq!(x.coefficient_of(&f("((* *) (* *))")), rat(3));
        assert_eq!(x.len(), 2);
        x = growth(&x).unwrap();
        assert_eq!(x.coefficient_of(&f("((((* *) *) *) *)")), rat(60));
        assert_eq!(x.coefficient_of(&f("(((* *) (* *)) *)")), rat(15));
        assert_eq!(x.coefficient_of(&f("(((* *) *) (* *))")), rat(30));
        assert_eq!(x.len(), 3);
    }

    #[test]
    fn pruning_examples() {
        assert_eq!(pruning(&lc("*")), LinComb::one());
        assert_eq!(pruning(&lc("(* *)")), lc("*").scale(&rat(2)));
        assert_eq!(pruning(&lc("((* *) *)")), lc("(* *)").scale(&rat(3)));
        // forests prune one component at a time
        let got = pruning(&lc("*, (* *)"));
        assert_eq!(got.coefficient_of(&f("(* *)")), rat(1));
        assert_eq!(got.coefficient_of(&f("*, *")), rat(2));
    }

    #[test]
    fn iterated_pruning_factorial() {
        for n in 1..=6 {
            for tr in enumerate_trees(n).unwrap() {
                let mut x = LinComb::from_forest(Forest::single(tr.clone()));
                for _ in 1..n {
                    x = pruning(&x);
                }
                let mut fact = 1u64;
                for k in 2..=n as u64 {
                    fact *= k;
                }
                assert_eq!(
                    x,
                    LinComb::from_term(f("*"), rat_u(fact)),
                    "tree {tr}"
                );
            }
        }
    }

    #[test]
    fn exponential_truncations() {
        let w3 = prelie_exponential(3).unwrap();
        assert_eq!(w3.to_string(), "1 * + 1/2 (* *) + 1/2 ((* *) *)");
        let w5 = prelie_exponential(5).unwrap();
        // every coefficient is the reciprocal symmetry factor
        for (forest, c) in w5.terms() {
            assert_eq!(forest.n_trees(), 1);
            let s = forest.trees()[0].aut_order();
            assert_eq!(c, &rat_frac(1, s as i64), "{forest}");
        }
        assert_eq!(w5.len(), 1 + 1 + 1 + 2 + 3);
        assert!(prelie_exponential(0).is_err());
        assert!(prelie_exponential(MAX_EXP_DEGREE + 1).is_err());
    }

    #[test]
    fn graft_guardrail() {
        // 13 edges, 8 inserted leaves: far past the cap
        let base = f("((((* *) *) *) ((* *) *))");
        let ins = vec![t("*"); 8];
        assert!(matches!(
            enumerate_grafts(&base, &ins, false),
            Err(Error::ResourceLimit(_))
        ));
    }
}
