//! Verification suites: exhaustive machine checks of the algebraic laws at
//! desk scale, with independent oracles where a second route exists.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::error::Result;
use crate::hopf::{
    antipode, antipode_by_total_cuts, comb_coproduct_formula, comb_tree, coproduct,
    coproduct_tree, counit, count_binary_total_cuts, enumerate_binary_admissible_cuts,
};
use crate::linear::{
    rat, rat_frac, rat_u, t2_split_left, t2_split_right, LinComb, Rational, Tensor2,
};
use crate::pairing::{adjointness_check, duality_check, duality_sweep, pair_tensor2};
use crate::prelie::{
    growth, prelie, prelie_exponential, pruning, shuffle_coproduct, star, star_monomials,
    triangle, triangle_monomials,
};
use crate::tree::{enumerate_forests, enumerate_trees, Forest, Label, Tree, TreeKind};

/// One named check with a human-readable outcome.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn ok(name: &str, detail: String) -> Check {
        Check {
            name: name.to_string(),
            pass: true,
            detail,
        }
    }
    fn fail(name: &str, detail: String) -> Check {
        Check {
            name: name.to_string(),
            pass: false,
            detail,
        }
    }
    fn from(name: &str, pass: bool, detail: String) -> Check {
        if pass {
            Check::ok(name, detail)
        } else {
            Check::fail(name, detail)
        }
    }
}

/// A suite: a list of checks under one heading.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": "binhopf/1",
            "suite": self.name,
            "pass": self.pass(),
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "pass": c.pass,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

impl std::fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "suite {}: {}", self.name, if self.pass() { "PASS" } else { "FAIL" })?;
        for c in &self.checks {
            writeln!(
                f,
                "  {} {}: {}",
                if c.pass { "ok " } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

/// The tree with distinct labels a, b, c, ... in leaf order, same shape.
pub fn with_distinct_labels(t: &Tree) -> Tree {
    fn go(t: &Tree, next: &mut u8) -> Tree {
        match t.kind() {
            TreeKind::Leaf(_) => {
                let l = Label::new(&((b'a' + *next) as char).to_string()).unwrap();
                *next += 1;
                Tree::leaf(l)
            }
            TreeKind::Node(a, b) => {
                let la = go(a, next);
                let lb = go(b, next);
                Tree::node(&la, &lb)
            }
        }
    }
    let mut next = 0u8;
    go(t, &mut next)
}

fn tree_lc(t: &Tree) -> LinComb {
    LinComb::from_forest(Forest::single(t.clone()))
}

fn forest_lc(f: &Forest) -> LinComb {
    LinComb::from_forest(f.clone())
}

// ---------------------------------------------------------------- hopf suite

fn check_enumeration_counts() -> Result<Check> {
    let we: Vec<usize> = (1..=8)
        .map(|n| enumerate_trees(n).map(|v| v.len()))
        .collect::<Result<_>>()?;
    let fd: Vec<usize> = (0..=7)
        .map(|n| enumerate_forests(n).map(|v| v.len()))
        .collect::<Result<_>>()?;
    let pass = we == [1, 1, 1, 2, 3, 6, 11, 23] && fd == [1, 1, 2, 3, 6, 10, 20, 37];
    Ok(Check::from(
        "enumeration-counts",
        pass,
        format!("trees {we:?}, forests {fd:?}"),
    ))
}

fn check_golden_coproduct() -> Result<Check> {
    use crate::parse::{parse_forest, parse_tree};
    let t = parse_tree("((a b) c)")?;
    let d = coproduct_tree(&t);
    let mut pass = d.len() == 8;
    for (l, r) in [
        ("1", "((a b) c)"),
        ("a", "(b c)"),
        ("b", "(a c)"),
        ("c", "(a b)"),
        ("(a b)", "c"),
        ("a, c", "b"),
        ("b, c", "a"),
        ("((a b) c)", "1"),
    ] {
        let key = (parse_forest(l)?, parse_forest(r)?);
        pass &= d.coefficient_of(&key) == rat(1);
    }
    Ok(Check::from(
        "golden-coproduct",
        pass,
        format!("{} terms of the three-leaf coproduct", d.len()),
    ))
}

fn check_golden_antipode() -> Result<Check> {
    use crate::parse::parse_forest;
    let mut pass = antipode(&forest_lc(&parse_forest("a")?))
        == forest_lc(&parse_forest("a")?).scale(&rat(-1));
    let s2 = antipode(&forest_lc(&parse_forest("(a b)")?));
    pass &= s2.coefficient_of(&parse_forest("(a b)")?) == rat(-1)
        && s2.coefficient_of(&parse_forest("a, b")?) == rat(2)
        && s2.len() == 2;
    let s3 = antipode(&forest_lc(&parse_forest("((a b) c)")?));
    pass &= s3.coefficient_of(&parse_forest("((a b) c)")?) == rat(-1)
        && s3.coefficient_of(&parse_forest("a, (b c)")?) == rat(1)
        && s3.coefficient_of(&parse_forest("b, (a c)")?) == rat(1)
        && s3.coefficient_of(&parse_forest("c, (a b)")?) == rat(2)
        && s3.coefficient_of(&parse_forest("a, b, c")?) == rat(-4)
        && s3.len() == 5;
    Ok(Check::from(
        "golden-antipode",
        pass,
        "one-, two- and three-leaf antipodes with coefficients 2 and -4".to_string(),
    ))
}

fn coassociative_on(t: &Tree) -> bool {
    let d = coproduct_tree(t);
    let dd = |g: &Forest| coproduct(&forest_lc(g));
    t2_split_left(dd, &d) == t2_split_right(dd, &d)
}

fn check_coassociativity(max_leaves: usize) -> Result<Check> {
    let mut count = 0usize;
    for n in 1..=max_leaves {
        for t in enumerate_trees(n)? {
            if !coassociative_on(&t) {
                return Ok(Check::fail("coassociativity", format!("fails on {t}")));
            }
            count += 1;
            if n <= 5 {
                let lt = with_distinct_labels(&t);
                if !coassociative_on(&lt) {
                    return Ok(Check::fail("coassociativity", format!("fails on {lt}")));
                }
                count += 1;
            }
        }
    }
    Ok(Check::ok(
        "coassociativity",
        format!("{count} trees up to {max_leaves} leaves (labelled up to 5)"),
    ))
}

fn check_counit_and_antipode_axioms(max_leaves: usize) -> Result<Check> {
    let mut count = 0usize;
    for n in 0..=max_leaves {
        for f in enumerate_forests(n)? {
            let x = forest_lc(&f);
            let d = coproduct(&x);
            let mut eps_id = LinComb::zero();
            let mut id_eps = LinComb::zero();
            let mut s_id = LinComb::zero();
            let mut id_s = LinComb::zero();
            for ((l, r), c) in d.terms() {
                if l.is_empty() {
                    eps_id.add_term(r.clone(), c.clone());
                }
                if r.is_empty() {
                    id_eps.add_term(l.clone(), c.clone());
                }
                s_id = s_id.add(&antipode(&forest_lc(l)).multiply(&forest_lc(r)).scale(c));
                id_s = id_s.add(&forest_lc(l).multiply(&antipode(&forest_lc(r))).scale(c));
            }
            let unit = LinComb::one().scale(&counit(&x));
            if eps_id != x || id_eps != x || s_id != unit || id_s != unit {
                return Ok(Check::fail(
                    "hopf-axioms",
                    format!("counit or antipode axiom fails on {f}"),
                ));
            }
            count += 1;
        }
    }
    Ok(Check::ok(
        "hopf-axioms",
        format!("{count} forests up to {max_leaves} leaves"),
    ))
}

fn check_antipode_total_cuts(max_leaves: usize) -> Result<Check> {
    for n in 1..=max_leaves {
        for t in enumerate_trees(n)? {
            let a = antipode(&tree_lc(&t));
            let b = antipode_by_total_cuts(&t);
            if a != b {
                return Ok(Check::fail("antipode-total-cuts", format!("routes differ on {t}")));
            }
            if b.abs_mass() != rat_u(count_binary_total_cuts(&t)) {
                return Ok(Check::fail(
                    "antipode-total-cuts",
                    format!("mass is not 3^(n-1) on {t}"),
                ));
            }
            for (forest, c) in b.terms() {
                if (c < &rat(0)) != (forest.n_trees() % 2 == 1) {
                    return Ok(Check::fail(
                        "antipode-total-cuts",
                        format!("sign of {forest} wrong in S({t})"),
                    ));
                }
            }
        }
    }
    Ok(Check::ok(
        "antipode-total-cuts",
        format!("both routes and 3^(n-1) masses up to {max_leaves} leaves"),
    ))
}

fn check_subset_bijection(max_leaves: usize) -> Result<Check> {
    for n in 1..=max_leaves.min(6) {
        for shape in enumerate_trees(n)? {
            let t = with_distinct_labels(&shape);
            let d = coproduct_tree(&t);
            if d.len() != 1 << n {
                return Ok(Check::fail(
                    "subset-bijection",
                    format!("{t} has {} terms, wanted 2^{n}", d.len()),
                ));
            }
            let mut label_sets = std::collections::BTreeSet::new();
            for ((l, _), c) in d.terms() {
                if c != &rat(1) {
                    return Ok(Check::fail(
                        "subset-bijection",
                        format!("non-unit coefficient in coproduct of {t}"),
                    ));
                }
                let mut set: Vec<String> = Vec::new();
                for tree in l.trees() {
                    for lab in tree.leaves() {
                        set.push(lab.as_str().to_string());
                    }
                }
                set.sort();
                label_sets.insert(set);
            }
            if label_sets.len() != 1 << n {
                return Ok(Check::fail(
                    "subset-bijection",
                    format!("pruned label sets of {t} do not enumerate subsets"),
                ));
            }
            // cut count agrees: 2^n - 1 proper cuts plus the total cut
            if enumerate_binary_admissible_cuts(&t)?.len() != (1 << n) - 1 {
                return Ok(Check::fail(
                    "subset-bijection",
                    format!("cut count wrong on {t}"),
                ));
            }
        }
    }
    Ok(Check::ok(
        "subset-bijection",
        format!("2^n unit terms on labelled trees up to {} leaves", max_leaves.min(6)),
    ))
}

fn check_comb_formula() -> Result<Check> {
    for n in 2..=8 {
        if comb_coproduct_formula(n) != coproduct_tree(&comb_tree(n)) {
            return Ok(Check::fail("comb-formula", format!("mismatch at n = {n}")));
        }
    }
    Ok(Check::ok("comb-formula", "closed formula matches for 2..=8 leaves".to_string()))
}

fn binom_u(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut r = 1u64;
    for i in 0..k.min(n - k) {
        r = r * (n - i) as u64 / (i + 1) as u64;
    }
    r
}

fn check_character_binomial(max_leaves: usize) -> Result<Check> {
    // Collapsing every forest to its leaf count carries the coproduct to
    // the binomial coproduct on one variable.
    for n in 0..=max_leaves {
        for f in enumerate_forests(n)? {
            let mut buckets: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
            for ((l, r), c) in coproduct(&forest_lc(&f)).terms() {
                *buckets
                    .entry((l.n_leaves(), r.n_leaves()))
                    .or_insert_with(Rational::zero) += c;
            }
            for k in 0..=n {
                let got = buckets.remove(&(k, n - k)).unwrap_or_else(Rational::zero);
                if got != rat_u(binom_u(n, k)) {
                    return Ok(Check::fail(
                        "character-binomial",
                        format!("bucket ({k},{}) of {f} is {got}", n - k),
                    ));
                }
            }
            if !buckets.is_empty() {
                return Ok(Check::fail(
                    "character-binomial",
                    format!("stray graded bucket in coproduct of {f}"),
                ));
            }
        }
    }
    Ok(Check::ok(
        "character-binomial",
        format!("binomial coproduct image up to {max_leaves} leaves"),
    ))
}

/// Coalgebra-side suite: enumeration, golden values, coassociativity,
/// Hopf axioms, both antipode routes, cut bijections, comb formula,
/// leaf-count character.
pub fn suite_hopf(max_leaves: usize) -> Result<SuiteReport> {
    Ok(SuiteReport {
        name: "hopf".to_string(),
        checks: vec![
            check_enumeration_counts()?,
            check_golden_coproduct()?,
            check_golden_antipode()?,
            check_coassociativity(max_leaves.min(8))?,
            check_counit_and_antipode_axioms(max_leaves.min(6))?,
            check_antipode_total_cuts(max_leaves.min(7))?,
            check_subset_bijection(max_leaves)?,
            check_comb_formula()?,
            check_character_binomial(max_leaves.min(6))?,
        ],
    })
}

// -------------------------------------------------------------- prelie suite

fn check_golden_prelie() -> Result<Check> {
    use crate::parse::{parse_forest, parse_tree};
    let got = prelie(&parse_tree("((a b) c)")?, &parse_tree("(d e)")?);
    let mut pass = got.len() == 5;
    for s in [
        "(((a b) c) (d e))",
        "((a b) ((d e) c))",
        "(((a (d e)) b) c)",
        "((a ((d e) b)) c)",
        "(((a b) (d e)) c)",
    ] {
        pass &= got.coefficient_of(&parse_forest(s)?) == rat(1);
    }
    let wedge = parse_tree("(* *)")?;
    let leaf = Tree::bullet();
    let c3 = parse_tree("((* *) *)")?;
    pass &= prelie(&wedge, &leaf) == LinComb::from_term(Forest::single(c3.clone()), rat(3));
    pass &= prelie(&leaf, &wedge) == tree_lc(&c3);
    Ok(Check::from(
        "golden-prelie",
        pass,
        "five-tree insertion display and the two cherry products".to_string(),
    ))
}

fn check_vinberg(max_total: usize) -> Result<Check> {
    let mut count = 0usize;
    for nx in 1..=max_total - 2 {
        for x in enumerate_trees(nx)? {
            for ny in 1..=max_total - nx - 1 {
                for y in enumerate_trees(ny)? {
                    for nz in 1..=max_total - nx - ny {
                        for z in enumerate_trees(nz)? {
                            let a = crate::prelie::associator(
                                &tree_lc(&x),
                                &tree_lc(&y),
                                &tree_lc(&z),
                            )?;
                            let b = crate::prelie::associator(
                                &tree_lc(&x),
                                &tree_lc(&z),
                                &tree_lc(&y),
                            )?;
                            if a != b {
                                return Ok(Check::fail(
                                    "vinberg",
                                    format!("associator asymmetry on ({x}, {y}, {z})"),
                                ));
                            }
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(Check::ok(
        "vinberg",
        format!("{count} tree triples with total <= {max_total} leaves"),
    ))
}

fn check_star_associativity(max_total: usize) -> Result<Check> {
    let mut count = 0usize;
    for na in 0..=max_total {
        for a in enumerate_forests(na)? {
            for nb in 0..=max_total - na {
                for b in enumerate_forests(nb)? {
                    for nc in 0..=max_total - na - nb {
                        for c in enumerate_forests(nc)? {
                            let la = forest_lc(&a);
                            let lb = forest_lc(&b);
                            let lc = forest_lc(&c);
                            let left = star(&star(&la, &lb)?, &lc)?;
                            let right = star(&la, &star(&lb, &lc)?)?;
                            if left != right {
                                return Ok(Check::fail(
                                    "star-associativity",
                                    format!("fails on ({a}; {b}; {c})"),
                                ));
                            }
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(Check::ok(
        "star-associativity",
        format!("{count} forest triples with total <= {max_total} leaves"),
    ))
}

/// Oracle: the triangle product by the defining recursion
/// (1) A ◁ 1 = A, (2) X ◁ AY = (X ◁ A) ◁ Y - X ◁ (A ◁ Y),
/// (3) AB ◁ C = Σ (A ◁ C') (B ◁ C''), with single insertions as base case.
pub fn triangle_by_recursion(base: &Forest, inserted: &Forest) -> Result<LinComb> {
    if inserted.is_empty() {
        return Ok(forest_lc(base));
    }
    if base.is_empty() {
        return Ok(LinComb::zero());
    }
    if base.n_trees() >= 2 {
        let trees = base.trees();
        let a = Forest::single(trees[0].clone());
        let b = Forest::from_trees(trees[1..].to_vec());
        let mut out = LinComb::zero();
        for ((c1, c2), coef) in shuffle_coproduct(inserted).terms() {
            let left = triangle_by_recursion(&a, c1)?;
            let right = triangle_by_recursion(&b, c2)?;
            out = out.add(&left.multiply(&right).scale(coef));
        }
        return Ok(out);
    }
    let x = &base.trees()[0];
    if inserted.n_trees() == 1 {
        return Ok(prelie(x, &inserted.trees()[0]));
    }
    // X ◁ AY with Y the last inserted component
    let ins = inserted.trees();
    let y = ins[ins.len() - 1].clone();
    let a = Forest::from_trees(ins[..ins.len() - 1].to_vec());
    let xa = triangle_by_recursion(&Forest::single(x.clone()), &a)?;
    let first = triangle(&xa, &tree_lc(&y))?;
    let ay = triangle_by_recursion(&a, &Forest::single(y))?;
    let second = triangle(&tree_lc(x), &ay)?;
    Ok(first.sub(&second))
}

fn check_guin_oudom_recursion(max_total: usize) -> Result<Check> {
    let mut count = 0usize;
    for nb in 0..=max_total {
        for base in enumerate_forests(nb)? {
            for ni in 0..=max_total - nb {
                for ins in enumerate_forests(ni)? {
                    if base.is_empty() && !ins.is_empty() {
                        // enumeration route: no edges, no grafts => 0 too
                        if !triangle_monomials(&base, &ins)?.is_zero() {
                            return Ok(Check::fail(
                                "guin-oudom-recursion",
                                format!("empty base nonzero for {ins}"),
                            ));
                        }
                        count += 1;
                        continue;
                    }
                    let direct = triangle_monomials(&base, &ins)?;
                    let recursive = triangle_by_recursion(&base, &ins)?;
                    if direct != recursive {
                        return Ok(Check::fail(
                            "guin-oudom-recursion",
                            format!("routes differ on {base} ◁ {ins}"),
                        ));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(Check::ok(
        "guin-oudom-recursion",
        format!("{count} monomial pairs with total <= {max_total} leaves"),
    ))
}

fn check_star_shuffle_split(max_total: usize) -> Result<Check> {
    // A * B = Σ (A ◁ B') ⊔ B'' over shuffle splits of B.
    for na in 0..=max_total {
        for a in enumerate_forests(na)? {
            for nb in 0..=max_total - na {
                for b in enumerate_forests(nb)? {
                    let direct = star_monomials(&a, &b)?;
                    let mut split = LinComb::zero();
                    for ((b1, b2), coef) in shuffle_coproduct(&b).terms() {
                        let ins = triangle_monomials(&a, b1)?;
                        split = split.add(&ins.multiply(&forest_lc(b2)).scale(coef));
                    }
                    if direct != split {
                        return Ok(Check::fail(
                            "star-shuffle-split",
                            format!("fails on {a} * {b}"),
                        ));
                    }
                }
            }
        }
    }
    Ok(Check::ok(
        "star-shuffle-split",
        format!("splits agree with skip grafts, total <= {max_total} leaves"),
    ))
}

fn check_shuffle_bialgebra(max_leaves: usize) -> Result<Check> {
    // coassociative, cocommutative, multiplicative on disjoint unions
    for n in 0..=max_leaves {
        for f in enumerate_forests(n)? {
            let d = shuffle_coproduct(&f);
            if d != d.swap() {
                return Ok(Check::fail("shuffle-bialgebra", format!("not cocommutative on {f}")));
            }
            let left = t2_split_left(|g| shuffle_coproduct(g), &d);
            let right = t2_split_right(|g| shuffle_coproduct(g), &d);
            if left != right {
                return Ok(Check::fail("shuffle-bialgebra", format!("not coassociative on {f}")));
            }
        }
    }
    for na in 0..=max_leaves / 2 {
        for a in enumerate_forests(na)? {
            for b in enumerate_forests(na)? {
                let prod = shuffle_coproduct(&a.union(&b));
                let pointwise = shuffle_coproduct(&a).product(&shuffle_coproduct(&b));
                if prod != pointwise {
                    return Ok(Check::fail(
                        "shuffle-bialgebra",
                        format!("not multiplicative on {a}, {b}"),
                    ));
                }
            }
        }
    }
    Ok(Check::ok(
        "shuffle-bialgebra",
        format!("coassociative, cocommutative, multiplicative up to {max_leaves} leaves"),
    ))
}

/// Pre-Lie suite: golden insertions, Vinberg identity, the Guin–Oudom
/// recursion oracle, star associativity, shuffle bialgebra laws.
pub fn suite_prelie(max_leaves: usize) -> Result<SuiteReport> {
    Ok(SuiteReport {
        name: "prelie".to_string(),
        checks: vec![
            check_golden_prelie()?,
            check_vinberg(max_leaves.min(7))?,
            check_guin_oudom_recursion(max_leaves.min(6))?,
            check_star_associativity(max_leaves.min(5))?,
            check_star_shuffle_split(max_leaves.min(6))?,
            check_shuffle_bialgebra(max_leaves.min(5))?,
        ],
    })
}

// ------------------------------------------------------------- duality suite

fn check_duality_sweep(max_leaves: usize) -> Result<Check> {
    let reports = duality_sweep(max_leaves)?;
    let failures: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    if let Some(r) = failures.first() {
        let (a, b, c) = &r.triple;
        return Ok(Check::fail(
            "duality-sweep",
            format!("({a}; {b}; {c}): {} != {}", r.lhs, r.rhs),
        ));
    }
    Ok(Check::ok(
        "duality-sweep",
        format!("{} triples with target degree <= {max_leaves}", reports.len()),
    ))
}

fn check_duality_worked_example() -> Result<Check> {
    use crate::parse::parse_forest;
    let r = duality_check(
        &parse_forest("(* *)")?,
        &parse_forest("*, *, (* *)")?,
        &parse_forest("((((* *) *) (* *)) *)")?,
    )?;
    let pass = r.n_count == rat(14) && r.m_count == rat(7) && r.lhs == rat(56) && r.pass;
    Ok(Check::from(
        "duality-worked-example",
        pass,
        format!("n = {}, m = {}, both sides {}", r.n_count, r.m_count, r.lhs),
    ))
}

fn check_shuffle_adjunction(max_leaves: usize) -> Result<Check> {
    for n in 0..=max_leaves {
        for f in enumerate_forests(n)? {
            let sh = shuffle_coproduct(&f);
            for ng in 0..=n {
                for g in enumerate_forests(ng)? {
                    for h in enumerate_forests(n - ng)? {
                        let mut gh = Tensor2::zero();
                        gh.add_term((g.clone(), h.clone()), Rational::one());
                        let lhs = pair_tensor2(&sh, &gh);
                        let rhs = crate::pairing::pair(&f, &g.union(&h));
                        if lhs != rhs {
                            return Ok(Check::fail(
                                "shuffle-adjunction",
                                format!("fails on {f} | {g} (x) {h}"),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(Check::ok(
        "shuffle-adjunction",
        format!("pairing adjunction up to {max_leaves} leaves"),
    ))
}

/// Duality suite: the pairing identity between grafts and cuts.
pub fn suite_duality(max_leaves: usize) -> Result<SuiteReport> {
    Ok(SuiteReport {
        name: "duality".to_string(),
        checks: vec![
            check_duality_sweep(max_leaves.min(5))?,
            check_duality_worked_example()?,
            check_shuffle_adjunction(max_leaves.min(5))?,
        ],
    })
}

// ----------------------------------------------------------------- exp suite

fn check_exponential_coefficients(degree: usize) -> Result<Check> {
    let w = prelie_exponential(degree)?;
    let mut count = 0usize;
    for n in 1..=degree {
        for t in enumerate_trees(n)? {
            let c = w.coefficient_of(&Forest::single(t.clone()));
            if c != rat_frac(1, t.aut_order() as i64) {
                return Ok(Check::fail(
                    "exponential-coefficients",
                    format!("coefficient of {t} is {c}, wanted 1/{}", t.aut_order()),
                ));
            }
            count += 1;
        }
    }
    let expected_terms: usize = (1..=degree).map(|n| enumerate_trees(n).unwrap().len()).sum();
    if w.len() != expected_terms {
        return Ok(Check::fail(
            "exponential-coefficients",
            format!("{} terms, wanted {expected_terms}", w.len()),
        ));
    }
    Ok(Check::ok(
        "exponential-coefficients",
        format!("1/s_T for all {count} trees of degree <= {degree}"),
    ))
}

fn check_growth_series() -> Result<Check> {
    use crate::parse::parse_forest;
    let mut x = tree_lc(&Tree::bullet());
    x = growth(&x)?;
    let mut pass = x == forest_lc(&parse_forest("(* *)")?);
    x = growth(&x)?;
    pass &= x == LinComb::from_term(parse_forest("((* *) *)")?, rat(3));
    x = growth(&x)?;
    pass &= x.coefficient_of(&parse_forest("(((* *) *) *)")?) == rat(12)
        && x.coefficient_of(&parse_forest("((* *) (* *))")?) == rat(3)
        && x.len() == 2;
    x = growth(&x)?;
    pass &= x.coefficient_of(&parse_forest("((((* *) *) *) *)")?) == rat(60)
        && x.coefficient_of(&parse_forest("(((* *) (* *)) *)")?) == rat(15)
        && x.coefficient_of(&parse_forest("(((* *) *) (* *))")?) == rat(30)
        && x.len() == 3;
    Ok(Check::from(
        "growth-series",
        pass,
        "iterated growth of the leaf through degree 5".to_string(),
    ))
}

fn check_pruning_factorial(max_leaves: usize) -> Result<Check> {
    for n in 1..=max_leaves {
        for t in enumerate_trees(n)? {
            let mut x = tree_lc(&t);
            for _ in 1..n {
                x = pruning(&x);
            }
            let mut fact = 1u64;
            for k in 2..=n as u64 {
                fact *= k;
            }
            if x != LinComb::from_term(Forest::single(Tree::bullet()), rat_u(fact)) {
                return Ok(Check::fail(
                    "pruning-factorial",
                    format!("iterated pruning of {t} is not {n}! times the leaf"),
                ));
            }
        }
    }
    Ok(Check::ok(
        "pruning-factorial",
        format!("k! collapse for all trees up to {max_leaves} leaves"),
    ))
}

fn check_adjointness(max_leaves: usize) -> Result<Check> {
    Ok(Check::from(
        "growth-pruning-adjoint",
        adjointness_check(max_leaves)?,
        format!("pairing adjointness up to {max_leaves} leaves, powers <= 3"),
    ))
}

/// Growth/pruning/exponential suite.
pub fn suite_exp(degree: usize) -> Result<SuiteReport> {
    Ok(SuiteReport {
        name: "exp".to_string(),
        checks: vec![
            check_exponential_coefficients(degree.clamp(1, 6))?,
            check_growth_series()?,
            check_pruning_factorial(7)?,
            check_adjointness(7)?,
        ],
    })
}

/// Every suite, at its default desk-scale bounds.
pub fn suite_all(max_leaves: usize, degree: usize) -> Result<Vec<SuiteReport>> {
    Ok(vec![
        suite_hopf(max_leaves)?,
        suite_prelie(max_leaves)?,
        suite_duality(max_leaves)?,
        suite_exp(degree)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hopf_suite_passes() {
        let r = suite_hopf(6).unwrap();
        assert!(r.pass(), "{r}");
        assert!(r.checks.len() >= 8);
    }

    #[test]
    fn prelie_suite_passes() {
        let r = suite_prelie(5).unwrap();
        assert!(r.pass(), "{r}");
    }

    #[test]
    fn duality_suite_passes() {
        let r = suite_duality(4).unwrap();
        assert!(r.pass(), "{r}");
    }

    #[test]
    fn exp_suite_passes() {
        let r = suite_exp(6).unwrap();
        assert!(r.pass(), "{r}");
    }

    #[test]
    fn recursion_oracle_spot_checks() {
        use crate::parse::parse_forest;
        let base = parse_forest("(* *)").unwrap();
        let ins = parse_forest("*, *").unwrap();
        let direct = triangle_monomials(&base, &ins).unwrap();
        let rec = triangle_by_recursion(&base, &ins).unwrap();
        assert_eq!(direct, rec);
        assert_eq!(direct.mass(), rat(12));
    }

    #[test]
    fn report_rendering() {
        let r = suite_duality(3).unwrap();
        let text = r.to_string();
        assert!(text.contains("suite duality: PASS"));
        let json = r.to_json();
        assert_eq!(json["schema"], "binhopf/1");
        assert_eq!(json["pass"], true);
    }

    #[test]
    fn distinct_labels_shapes() {
        let t = comb_tree(3);
        let lt = with_distinct_labels(&t);
        assert_eq!(lt.to_string(), "((a b) c)");
    }
}
