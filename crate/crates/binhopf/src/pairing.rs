//! The symmetric pairing on forest monomials and the duality between
//! cut multiplicities and graft multiplicities.

use num::Zero;

use crate::error::Result;
use crate::hopf::coproduct;
use crate::linear::{rat_u, LinComb, Rational, Tensor2};
use crate::prelie::{growth, pruning, star_monomials};
use crate::tree::{enumerate_forests, enumerate_trees, Forest};

/// Diagonal pairing: the symmetry factor on equal monomials, zero otherwise.
pub fn pair(f: &Forest, g: &Forest) -> Rational {
    if f == g {
        rat_u(f.aut_order())
    } else {
        Rational::zero()
    }
}

/// Bilinear extension of the pairing.
pub fn pair_linear(a: &LinComb, b: &LinComb) -> Rational {
    let mut out = Rational::zero();
    for (f, ca) in a.terms() {
        let cb = b.coefficient_of(f);
        if !cb.is_zero() {
            out += ca * cb * pair(f, f);
        }
    }
    out
}

/// Componentwise pairing of rank-2 tensors.
pub fn pair_tensor2(a: &Tensor2, b: &Tensor2) -> Rational {
    let mut out = Rational::zero();
    for ((l, r), ca) in a.terms() {
        let cb = b.coefficient_of(&(l.clone(), r.clone()));
        if !cb.is_zero() {
            out += ca * cb * pair(l, l) * pair(r, r);
        }
    }
    out
}

/// One verified instance of the duality identity
/// n(a,b;c) * s_c = m(a,b;c) * s_a * s_b.
#[derive(Debug, Clone)]
pub struct DualityReport {
    pub triple: (Forest, Forest, Forest),
    pub n_count: Rational,
    pub m_count: Rational,
    pub lhs: Rational,
    pub rhs: Rational,
    pub pass: bool,
}

/// Compare the graft multiplicity of `c` in `a * b` against the cut
/// multiplicity of `b (x) a` in the coproduct of `c` (pruned side `b`,
/// remainder side `a`), each weighted by symmetry factors.
pub fn duality_check(a: &Forest, b: &Forest, c: &Forest) -> Result<DualityReport> {
    let (n_count, m_count) = if a.n_leaves() + b.n_leaves() == c.n_leaves() {
        let n = star_monomials(a, b)?.coefficient_of(c);
        let m = coproduct(&LinComb::from_forest(c.clone()))
            .coefficient_of(&(b.clone(), a.clone()));
        (n, m)
    } else {
        (Rational::zero(), Rational::zero())
    };
    let lhs = &n_count * rat_u(c.aut_order());
    let rhs = &m_count * rat_u(a.aut_order()) * rat_u(b.aut_order());
    let pass = lhs == rhs;
    Ok(DualityReport {
        triple: (a.clone(), b.clone(), c.clone()),
        n_count,
        m_count,
        lhs,
        rhs,
        pass,
    })
}

/// Duality reports for every unlabelled triple with deg a + deg b = deg c
/// and deg c at most `max_leaves`.
pub fn duality_sweep(max_leaves: usize) -> Result<Vec<DualityReport>> {
    let mut out = Vec::new();
    for nc in 0..=max_leaves {
        for c in enumerate_forests(nc)? {
            for na in 0..=nc {
                for a in enumerate_forests(na)? {
                    for b in enumerate_forests(nc - na)? {
                        out.push(duality_check(&a, &b, &c)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Growth and pruning are adjoint: <N(T), T'> = <T, P(T')> for all
/// unlabelled trees with |T'| = |T| + 1, and for iterated powers up to 3.
pub fn adjointness_check(max_leaves: usize) -> Result<bool> {
    for k in 1..=3usize {
        for n in 1..max_leaves.saturating_sub(k - 1) {
            for t in enumerate_trees(n)? {
                let mut grown = LinComb::from_forest(Forest::single(t.clone()));
                for _ in 0..k {
                    grown = growth(&grown)?;
                }
                for tp in enumerate_trees(n + k)? {
                    let mut pruned = LinComb::from_forest(Forest::single(tp.clone()));
                    for _ in 0..k {
                        pruned = pruning(&pruned);
                    }
                    let lhs =
                        pair_linear(&grown, &LinComb::from_forest(Forest::single(tp.clone())));
                    let rhs =
                        pair_linear(&LinComb::from_forest(Forest::single(t.clone())), &pruned);
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
