use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{poly_gcd, MathError, MultiPoly, Rational, Universe};

/// Quotient of polynomials kept in lowest terms with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, MathError> {
        if den.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        if num.universe() != den.universe() {
            return Err(MathError::UniverseMismatch);
        }
        if num.is_zero() {
            let one = MultiPoly::one(num.universe());
            return Ok(RatFunc { num, den: one });
        }
        if let Some(c) = den.constant_value() {
            let inv = c.recip();
            let one = MultiPoly::one(num.universe());
            return Ok(RatFunc {
                num: num.scale(&inv),
                den: one,
            });
        }
        let g = poly_gcd(&num, &den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        let lc = den.leading_coeff().recip();
        Ok(RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.universe());
        RatFunc { num: p, den }
    }

    pub fn zero(universe: &Arc<Universe>) -> Self {
        Self::from_poly(MultiPoly::zero(universe))
    }

    pub fn one(universe: &Arc<Universe>) -> Self {
        Self::from_poly(MultiPoly::one(universe))
    }

    pub fn constant(universe: &Arc<Universe>, c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(universe, c))
    }

    pub fn var(universe: &Arc<Universe>, index: usize) -> Self {
        Self::from_poly(MultiPoly::var(universe, index))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.num.universe()
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&MultiPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_polynomial() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, MathError> {
        if self.den == o.den {
            return Self::new(self.num.try_add(&o.num)?, self.den.clone());
        }
        Self::new(
            self.num
                .try_mul(&o.den)?
                .try_add(&o.num.try_mul(&self.den)?)?,
            self.den.try_mul(&o.den)?,
        )
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, MathError> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, MathError> {
        if self.is_polynomial() && o.is_polynomial() {
            return Ok(Self::from_poly(self.num.try_mul(&o.num)?));
        }
        Self::new(self.num.try_mul(&o.num)?, self.den.try_mul(&o.den)?)
    }

    pub fn inv(&self) -> Result<Self, MathError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn try_div(&self, o: &Self) -> Result<Self, MathError> {
        self.try_mul(&o.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatFunc {
            num: self.num.scale(c),
            den: if c.is_zero() {
                MultiPoly::one(self.universe())
            } else {
                self.den.clone()
            },
        }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i32) -> Result<Self, MathError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, MathError> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        Ok(self.num.eval(point)? / d)
    }

    pub fn compose(&self, images: &[RatFunc]) -> Result<Self, MathError> {
        let n = self.num.compose(images)?;
        if self.is_polynomial() {
            return Ok(n);
        }
        n.try_div(&self.den.compose(images)?)
    }

    /// Replaces the listed variables, leaving the others in place.
    pub fn substitute(&self, subs: &[(usize, RatFunc)]) -> Result<Self, MathError> {
        let u = self.universe();
        let mut images: Vec<RatFunc> = (0..u.len()).map(|i| RatFunc::var(u, i)).collect();
        for (i, f) in subs {
            if *i >= images.len() {
                return Err(MathError::IndexOutOfRange {
                    index: *i,
                    limit: images.len(),
                });
            }
            images[*i] = f.clone();
        }
        self.compose(&images)
    }
}

/// Returns `c` with `p = c * q` for a nonzero rational `c`, if one exists.
///
/// Two zero functions are related by `c = 1`.
pub fn equal_up_to_scalar(p: &RatFunc, q: &RatFunc) -> Option<Rational> {
    if p.universe() != q.universe() {
        return None;
    }
    match (p.is_zero(), q.is_zero()) {
        (true, true) => return Some(Rational::one()),
        (true, false) | (false, true) => return None,
        _ => {}
    }
    let a = &p.num * &q.den;
    let b = &q.num * &p.den;
    if a.num_terms() != b.num_terms() {
        return None;
    }
    let c = a.leading_coeff() / b.leading_coeff();
    (a == b.scale(&c)).then_some(c)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

macro_rules! rf_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                self.$inner(rhs)
                    .expect("rational function universes differ")
            }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
    };
}

rf_binop!(Add, add, try_add);
rf_binop!(Sub, sub, try_sub);
rf_binop!(Mul, mul, try_mul);

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, parse_ratfunc, NoConstants};

    fn u() -> Arc<Universe> {
        Universe::new(["x", "y"])
    }

    fn f(s: &str) -> RatFunc {
        parse_ratfunc(s, &u(), &NoConstants).unwrap()
    }

    #[test]
    fn normalization_cancels_and_makes_denominator_monic() {
        let r = f("(2*x^2 - 2*y^2)/(-4*x - 4*y)");
        assert_eq!(r, f("-1/2*x + 1/2*y"));
        assert!(r.is_polynomial());
        let s = f("(x*y)/(3*x^2*y + 3*x)");
        assert_eq!(s.to_string(), "(1/3*y)/(x*y + 1)");
    }

    #[test]
    fn field_operations() {
        let a = f("1/x + 1/y");
        assert_eq!(a, f("(x + y)/(x*y)"));
        assert_eq!(&a * &f("x*y"), f("x + y"));
        assert_eq!(a.try_div(&a).unwrap(), RatFunc::one(&u()));
        assert_eq!(RatFunc::zero(&u()).inv(), Err(MathError::DivisionByZero));
        assert_eq!(f("x/y").pow(-2).unwrap(), f("y^2/x^2"));
    }

    #[test]
    fn scalar_equivalence() {
        assert_eq!(equal_up_to_scalar(&f("2*x/y"), &f("x/(3*y)")), Some(int(6)));
        assert_eq!(equal_up_to_scalar(&f("x"), &f("x + 1")), None);
        assert_eq!(equal_up_to_scalar(&f("0"), &f("0")), Some(int(1)));
        assert_eq!(equal_up_to_scalar(&f("0"), &f("x")), None);
    }

    #[test]
    fn substitution() {
        let r = f("x^2 - y").substitute(&[(1, f("x^2"))]).unwrap();
        assert!(r.is_zero());
        assert_eq!(
            f("x/y").eval(&[int(3), int(0)]),
            Err(MathError::DivisionByZero)
        );
    }
}
