//! Multivariate gcd over the rationals by recursive primitive remainder sequences.

use super::{MathError, Monomial, MultiPoly};

/// Monic greatest common divisor (zero only when both inputs are zero).
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, MathError> {
    if a.universe() != b.universe() && a.universe().names() != b.universe().names() {
        return Err(MathError::UniverseMismatch);
    }
    Ok(gcd(a, b))
}

fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.make_monic();
    }
    if b.is_zero() {
        return a.make_monic();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(a.universe());
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let m = ma.gcd(&mb);
    let a1 = strip(a, &ma);
    let b1 = strip(b, &mb);
    gcd_no_monomial(&a1, &b1).mul_monomial(&m).make_monic()
}

fn strip(p: &MultiPoly, m: &Monomial) -> MultiPoly {
    if m.is_one() {
        p.clone()
    } else {
        let mono = MultiPoly::monomial(p.universe(), m.clone(), num_traits::One::one());
        p.exact_div(&mono).expect("monomial content divides")
    }
}

fn gcd_no_monomial(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(a.universe());
    }
    let n = a.universe().len();
    let common = (0..n).find(|&v| a.uses_var(v) && b.uses_var(v));
    let v = match common {
        Some(v) => v,
        None => {
            let v = (0..n).find(|&v| a.uses_var(v)).expect("non-constant");
            return gcd(&content_in(a, v), b);
        }
    };
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let gc = gcd(&ca, &cb);
    let gp = primitive_prs(pa, pb, v);
    (&gc * &gp).make_monic()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
fn content_in(p: &MultiPoly, var: usize) -> MultiPoly {
    let coeffs = p.coefficients_in(var);
    let mut it = coeffs.values();
    let first = it
        .next()
        .cloned()
        .unwrap_or_else(|| MultiPoly::zero(p.universe()));
    it.fold(
        first.make_monic(),
        |g, c| if g.is_one() { g } else { gcd(&g, c) },
    )
}

fn primitive_part_in(p: &MultiPoly, var: usize) -> MultiPoly {
    let c = content_in(p, var);
    p.exact_div(&c).expect("content divides").make_monic()
}

fn lead_in(p: &MultiPoly, var: usize) -> (u16, MultiPoly) {
    let coeffs = p.coefficients_in(var);
    let (d, c) = coeffs.into_iter().next_back().expect("nonzero");
    (d, c)
}

fn pseudo_rem(f: &MultiPoly, g: &MultiPoly, var: usize) -> MultiPoly {
    let (dg, lg) = lead_in(g, var);
    let mut r = f.clone();
    while !r.is_zero() {
        let (dr, lr) = lead_in(&r, var);
        if dr < dg {
            break;
        }
        let shift = Monomial::var(r.universe().len(), var);
        let mut shifted = g.clone();
        for _ in 0..(dr - dg) {
            shifted = shifted.mul_monomial(&shift);
        }
        r = &(&lg * &r) - &(&lr * &shifted);
    }
    r
}

fn primitive_prs(a: MultiPoly, b: MultiPoly, var: usize) -> MultiPoly {
    let (mut f, mut g) = if a.degree_in(var) >= b.degree_in(var) {
        (a, b)
    } else {
        (b, a)
    };
    loop {
        let r = pseudo_rem(&f, &g, var);
        if r.is_zero() {
            return primitive_part_in(&g, var);
        }
        if r.degree_in(var) == 0 {
            return MultiPoly::one(f.universe());
        }
        f = g;
        g = primitive_part_in(&r, var);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{parse_poly, Universe};

    #[test]
    fn gcd_of_products() {
        let u = Universe::new(["x", "y", "z"]);
        let p = |s: &str| parse_poly(s, &u).unwrap();
        let a = p("(x + y)*(x - y)^2*z");
        let b = p("(x + y)^2*(x + 2)*z^2");
        assert_eq!(poly_gcd(&a, &b).unwrap(), p("x*z + y*z"));
        assert_eq!(poly_gcd(&p("x*y + 1"), &p("z + 1")).unwrap(), p("1"));
        assert_eq!(poly_gcd(&p("2*x^2*y"), &p("6*x*y^3")).unwrap(), p("x*y"));
        assert_eq!(poly_gcd(&p("0"), &p("3*x + 6")).unwrap(), p("x + 2"));
    }

    #[test]
    fn gcd_with_coefficient_variables() {
        let u = Universe::new(["x", "y", "z"]);
        let p = |s: &str| parse_poly(s, &u).unwrap();
        let g = p("x*y - z^2 + 1");
        let a = &g * &p("x^2 + y*z");
        let b = &g * &p("x*z - 3");
        assert_eq!(poly_gcd(&a, &b).unwrap(), g.make_monic());
    }
}
