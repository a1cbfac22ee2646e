use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{MathError, RatFunc, Rational, Universe};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Box<[u16]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e.into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self::from_exponents)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    fn pow(&self, k: u16) -> Self {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in ascending graded-lex order; the leading term is the last.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    universe: Arc<Universe>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        Universe::same(&self.universe, &other.universe) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(universe: &Arc<Universe>) -> Self {
        MultiPoly {
            universe: universe.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(universe: &Arc<Universe>) -> Self {
        Self::constant(universe, Rational::one())
    }

    pub fn constant(universe: &Arc<Universe>, c: Rational) -> Self {
        let mut p = Self::zero(universe);
        p.add_term(Monomial::one(universe.len()), c);
        p
    }

    pub fn var(universe: &Arc<Universe>, index: usize) -> Self {
        let mut p = Self::zero(universe);
        p.add_term(Monomial::var(universe.len(), index), Rational::one());
        p
    }

    pub fn var_named(universe: &Arc<Universe>, name: &str) -> Result<Self, MathError> {
        universe
            .index_of(name)
            .map(|i| Self::var(universe, i))
            .ok_or_else(|| MathError::UnknownIdentifier(name.to_string()))
    }

    pub fn monomial(universe: &Arc<Universe>, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(universe);
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; like terms are combined.
    pub fn from_terms<I>(universe: &Arc<Universe>, terms: I) -> Result<Self, MathError>
    where
        I: IntoIterator<Item = (Vec<u16>, Rational)>,
    {
        let mut p = Self::zero(universe);
        for (e, c) in terms {
            if e.len() != universe.len() {
                return Err(MathError::SizeMismatch {
                    expected: universe.len(),
                    got: e.len(),
                });
            }
            p.add_term(Monomial::from_exponents(e), c);
        }
        Ok(p)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial, `None` otherwise.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading_term()
            .map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    /// Product of the smallest power of each variable dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.universe.len()),
            Some(first) => it.fold(first.clone(), |g, m| g.gcd(m)),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    /// `self += c * m * other`.
    fn add_scaled_shifted(&mut self, other: &Self, m: &Monomial, c: &Rational) {
        for (om, oc) in &other.terms {
            self.add_term(om.mul(m), oc * c);
        }
    }

    fn check(&self, other: &Self) -> Result<(), MathError> {
        if Universe::same(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(MathError::UniverseMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, MathError> {
        self.check(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, MathError> {
        self.check(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c);
        }
        Ok(r)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, MathError> {
        self.check(other)?;
        let mut r = Self::zero(&self.universe);
        for (m, c) in &self.terms {
            r.add_scaled_shifted(other, m, c);
        }
        Ok(r)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.universe);
        }
        MultiPoly {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            universe: self.universe.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        if self.is_monomial() {
            let (m, c) = self.terms.iter().next().unwrap();
            return Self::monomial(
                &self.universe,
                m.pow(k as u16),
                num_traits::pow(c.clone(), k as usize),
            );
        }
        let mut result = Self::one(&self.universe);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self`.
    pub fn exact_div(&self, d: &Self) -> Result<Self, MathError> {
        self.check(d)?;
        let (lm, lc) = d.leading_term().ok_or(MathError::DivisionByZero)?;
        if d.is_monomial() {
            let inv = lc.recip();
            let mut q = Self::zero(&self.universe);
            for (m, c) in &self.terms {
                q.add_term(m.div(lm).ok_or(MathError::DivisionNotExact)?, c * &inv);
            }
            return Ok(q);
        }
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut r = self.clone();
        let mut q = Self::zero(&self.universe);
        while let Some((rm, rc)) = r.leading_term() {
            let m = rm.div(&lm).ok_or(MathError::DivisionNotExact)?;
            let c = rc / &lc;
            r.add_scaled_shifted(d, &m, &-c.clone());
            q.add_term(m, c);
        }
        Ok(q)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, MathError> {
        if point.len() != self.universe.len() {
            return Err(MathError::SizeMismatch {
                expected: self.universe.len(),
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.0.iter()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes `images[i]` for variable `i`; the images share one target universe.
    pub fn compose(&self, images: &[RatFunc]) -> Result<RatFunc, MathError> {
        if images.len() != self.universe.len() {
            return Err(MathError::SizeMismatch {
                expected: self.universe.len(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(f) => f.universe().clone(),
            None => return Ok(RatFunc::constant(&self.universe, self.leading_coeff())),
        };
        if images
            .iter()
            .any(|f| !Universe::same(f.universe(), &target))
        {
            return Err(MathError::UniverseMismatch);
        }
        let mut powers: Vec<Vec<RatFunc>> = vec![Vec::new(); images.len()];
        let mut acc = RatFunc::zero(&target);
        for (m, c) in &self.terms {
            let mut t = RatFunc::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(images[i].clone());
                }
                while cache.len() < e as usize {
                    let next = &cache[cache.len() - 1] * &images[i];
                    cache.push(next);
                }
                t = &t * &cache[e as usize - 1];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Coefficients with respect to `var`, keyed by exponent, with `var` removed.
    pub fn coefficients_in(&self, var: usize) -> BTreeMap<u16, MultiPoly> {
        let mut out: BTreeMap<u16, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            let mut stripped = m.0.to_vec();
            stripped[var] = 0;
            out.entry(e)
                .or_insert_with(|| Self::zero(&self.universe))
                .add_term(Monomial::from_exponents(stripped), c.clone());
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        let mut r = Self::zero(&self.universe);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), f(c));
        }
        r
    }

    pub(crate) fn make_monic(&self) -> Self {
        let lc = self.leading_coeff();
        if lc.is_zero() || lc.is_one() {
            self.clone()
        } else {
            self.scale(&lc.recip())
        }
    }

    pub(crate) fn fmt_monomial(&self, m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.universe.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                self.fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$inner(rhs).expect("polynomial universes differ")
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}
