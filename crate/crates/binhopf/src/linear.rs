//! Exact rational scalars and finitely supported linear combinations over
//! the forest basis, plus tensor squares and cubes.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde_json::{json, Value};

use crate::tree::Forest;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_u(n: u64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Render a rational as "p/q", omitting "/q" when the denominator is 1.
pub fn rat_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A finitely supported map Forest -> Rational; no zero values stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinComb {
    terms: BTreeMap<Forest, Rational>,
}

impl LinComb {
    pub fn zero() -> LinComb {
        LinComb::default()
    }

    /// The unit: the empty forest with coefficient 1.
    pub fn one() -> LinComb {
        LinComb::from_forest(Forest::empty())
    }

    pub fn from_forest(f: Forest) -> LinComb {
        LinComb::from_term(f, Rational::one())
    }

    pub fn from_term(f: Forest, c: Rational) -> LinComb {
        let mut lc = LinComb::zero();
        lc.add_term(f, c);
        lc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Forest, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, f: Forest, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(f);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        for (f, c) in other.terms() {
            out.add_term(f.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LinComb) -> LinComb {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> LinComb {
        if c.is_zero() {
            return LinComb::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(f, v)| (f.clone(), v * c))
                .collect(),
        }
    }

    /// Bilinear extension of forest disjoint union.
    pub fn multiply(&self, other: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (f, a) in self.terms() {
            for (g, b) in other.terms() {
                out.add_term(f.union(g), a * b);
            }
        }
        out
    }

    pub fn coefficient_of(&self, f: &Forest) -> Rational {
        self.terms.get(f).cloned().unwrap_or_else(Rational::zero)
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> Rational {
        self.terms.values().sum()
    }

    /// Sum of absolute values of coefficients.
    pub fn abs_mass(&self) -> Rational {
        self.terms.values().map(|c| c.abs()).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": "binhopf/1",
            "terms": self.terms.iter().map(|(f, c)| json!({
                "coef": rat_string(c),
                "forest": f.trees().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>()
        })
    }
}

/// Shared sign-aware term formatting: "c1 F1 + c2 F2 - c3 F3".
pub(crate) fn format_terms<I: Iterator<Item = (String, Rational)>>(terms: I) -> String {
    let mut out = String::new();
    for (body, c) in terms {
        if out.is_empty() {
            if c.is_negative() {
                out.push_str("- ");
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&rat_string(&c.abs()));
        out.push(' ');
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(
            self.terms.iter().map(|(g, c)| (g.to_string(), c.clone())),
        ))
    }
}

macro_rules! tensor_impl {
    ($name:ident, $key:ty, $arity:literal) => {
        #[derive(Debug, Clone, PartialEq, Eq, Default)]
        pub struct $name {
            terms: BTreeMap<$key, Rational>,
        }

        impl $name {
            pub fn zero() -> Self {
                Self::default()
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn len(&self) -> usize {
                self.terms.len()
            }

            pub fn is_empty(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn terms(&self) -> impl Iterator<Item = (&$key, &Rational)> {
                self.terms.iter()
            }

            pub fn add_term(&mut self, k: $key, c: Rational) {
                if c.is_zero() {
                    return;
                }
                match self.terms.entry(k) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += c;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }

            pub fn coefficient_of(&self, k: &$key) -> Rational {
                self.terms.get(k).cloned().unwrap_or_else(Rational::zero)
            }

            pub fn mass(&self) -> Rational {
                self.terms.values().sum()
            }
        }
    };
}

tensor_impl!(Tensor2, (Forest, Forest), 2);
tensor_impl!(Tensor3, (Forest, Forest, Forest), 3);

/// Rank-n tensor with a uniform key shape; used by the iterated coproduct.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorN {
    terms: BTreeMap<Vec<Forest>, Rational>,
}

impl TensorN {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Forest>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, k: Vec<Forest>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn mass(&self) -> Rational {
        self.terms.values().sum()
    }
}

pub fn tensor(a: &LinComb, b: &LinComb) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (f, x) in a.terms() {
        for (g, y) in b.terms() {
            out.add_term((f.clone(), g.clone()), x * y);
        }
    }
    out
}

pub fn tensor3(a: &LinComb, b: &LinComb, c: &LinComb) -> Tensor3 {
    let mut out = Tensor3::zero();
    for (f, x) in a.terms() {
        for (g, y) in b.terms() {
            for (h, z) in c.terms() {
                out.add_term((f.clone(), g.clone(), h.clone()), x * y * z);
            }
        }
    }
    out
}

/// Apply a linear map to the left leg of a rank-2 tensor.
pub fn t2_apply_left<F: Fn(&Forest) -> LinComb>(op: F, t: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::zero();
    for ((l, r), c) in t.terms() {
        for (f, x) in op(l).terms() {
            out.add_term((f.clone(), r.clone()), c * x);
        }
    }
    out
}

/// Apply a linear map to the right leg of a rank-2 tensor.
pub fn t2_apply_right<F: Fn(&Forest) -> LinComb>(op: F, t: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::zero();
    for ((l, r), c) in t.terms() {
        for (f, x) in op(r).terms() {
            out.add_term((l.clone(), f.clone()), c * x);
        }
    }
    out
}

/// Expand the left leg with a tensor-valued map (e.g. a coproduct).
pub fn t2_split_left<F: Fn(&Forest) -> Tensor2>(op: F, t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((l, r), c) in t.terms() {
        for ((a, b), x) in op(l).terms() {
            out.add_term((a.clone(), b.clone(), r.clone()), c * x);
        }
    }
    out
}

/// Expand the right leg with a tensor-valued map.
pub fn t2_split_right<F: Fn(&Forest) -> Tensor2>(op: F, t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((l, r), c) in t.terms() {
        for ((a, b), x) in op(r).terms() {
            out.add_term((l.clone(), a.clone(), b.clone()), c * x);
        }
    }
    out
}

impl Tensor2 {
    /// Componentwise product: (a (x) b)(c (x) d) = ac (x) bd.
    pub fn product(&self, other: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((l1, r1), c1) in self.terms() {
            for ((l2, r2), c2) in other.terms() {
                out.add_term((l1.union(l2), r1.union(r2)), c1 * c2);
            }
        }
        out
    }

    pub fn swap(&self) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((l, r), c) in self.terms() {
            out.add_term((r.clone(), l.clone()), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": "binhopf/1",
            "terms": self.terms.iter().map(|((l, r), c)| json!({
                "coef": rat_string(c),
                "left": l.trees().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                "right": r.trees().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>()
        })
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms.iter().map(|((l, r), c)| {
            (format!("{l} \u{2a02} {r}"), c.clone())
        })))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_forest;

    fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }

    #[test]
    fn add_cancels_to_empty_support() {
        let a = LinComb::from_term(f("(a b)"), rat(2));
        let b = LinComb::from_term(f("(a b)"), rat(-2));
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn scale_and_coefficient() {
        let a = LinComb::from_forest(f("(a b)")).scale(&rat_frac(1, 2));
        assert_eq!(a.coefficient_of(&f("(a b)")), rat_frac(1, 2));
        assert_eq!(a.coefficient_of(&f("c")), rat(0));
    }

    #[test]
    fn multiply_basics() {
        let ab = LinComb::from_forest(f("(a b)"));
        assert_eq!(ab.multiply(&LinComb::one()), ab);
        let b = LinComb::from_forest(f("*"));
        assert_eq!(
            b.multiply(&b),
            LinComb::from_forest(f("*, *"))
        );
        let x = LinComb::from_term(f("a"), rat(2));
        let y = LinComb::from_term(f("b"), rat(3));
        assert_eq!(x.multiply(&y), LinComb::from_term(f("a, b"), rat(6)));
    }

    #[test]
    fn tensor_basics() {
        let z = tensor(&LinComb::zero(), &LinComb::one());
        assert!(z.is_zero());
        let t = tensor(&LinComb::from_forest(f("a")), &LinComb::from_forest(f("b")));
        assert_eq!(t2_apply_left(|g| LinComb::from_forest(g.clone()), &t), t);
    }

    #[test]
    fn display_format() {
        let mut lc = LinComb::from_term(f("((a b) c)"), rat(-1));
        lc.add_term(f("a, b, c"), rat(-4));
        lc.add_term(f("c, (a b)"), rat(2));
        assert_eq!(lc.to_string(), "- 4 a, b, c + 2 c, (a b) - 1 ((a b) c)");
        assert_eq!(LinComb::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let lc = LinComb::from_term(f("(* *)"), rat_frac(1, 2));
        let v = lc.to_json();
        assert_eq!(v["terms"][0]["coef"], "1/2");
        assert_eq!(v["terms"][0]["forest"][0], "(* *)");
    }

    // Naive independent rational arithmetic over big integers, used to
    // cross-check the num-backed scalars.
    #[derive(Clone, Debug, PartialEq)]
    struct NaiveRat {
        num: BigInt,
        den: BigInt,
    }

    impl NaiveRat {
        fn new(num: BigInt, den: BigInt) -> Self {
            assert!(!den.is_zero());
            let mut r = NaiveRat { num, den };
            r.reduce();
            r
        }
        fn reduce(&mut self) {
            use num::Integer;
            if self.den < BigInt::from(0) {
                self.num = -self.num.clone();
                self.den = -self.den.clone();
            }
            let g = self.num.gcd(&self.den);
            if !g.is_zero() {
                self.num = &self.num / &g;
                self.den = &self.den / &g;
            }
        }
        fn add(&self, o: &NaiveRat) -> NaiveRat {
            NaiveRat::new(
                &self.num * &o.den + &o.num * &self.den,
                &self.den * &o.den,
            )
        }
        fn mul(&self, o: &NaiveRat) -> NaiveRat {
            NaiveRat::new(&self.num * &o.num, &self.den * &o.den)
        }
        fn sub(&self, o: &NaiveRat) -> NaiveRat {
            NaiveRat::new(
                &self.num * &o.den - &o.num * &self.den,
                &self.den * &o.den,
            )
        }
    }

    #[test]
    fn rational_matches_naive_cross_implementation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..10_000 {
            let (a, b): (i64, i64) = (rng.gen_range(-1000..1000), rng.gen_range(1..1000));
            let (c, d): (i64, i64) = (rng.gen_range(-1000..1000), rng.gen_range(1..1000));
            let x = BigRational::new(BigInt::from(a), BigInt::from(b));
            let y = BigRational::new(BigInt::from(c), BigInt::from(d));
            let nx = NaiveRat::new(BigInt::from(a), BigInt::from(b));
            let ny = NaiveRat::new(BigInt::from(c), BigInt::from(d));
            for (got, want) in [
                (&x + &y, nx.add(&ny)),
                (&x * &y, nx.mul(&ny)),
                (&x - &y, nx.sub(&ny)),
            ] {
                assert_eq!(got.numer(), &want.num);
                assert_eq!(got.denom(), &want.den);
            }
        }
    }
}
