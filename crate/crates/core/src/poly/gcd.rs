//! Multivariate GCD over `Q` by recursive content/primitive-part splitting.
//!
//! A polynomial is viewed in `(Q[x_1..x_{v-1}])[x_v]` where `x_v` is the
//! highest-index variable that occurs; the gcd of the contents is found
//! recursively and the primitive parts are combined through a primitive
//! pseudo-remainder sequence in `x_v`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;

use super::{Polynomial, PowerProduct, TermOrder};

/// GCD normalized to integer content 1 and a positive DegRevLex leading
/// coefficient. `gcd(f, 0)` is `f` normalized; `gcd(0, 0)` is 0.
pub fn multivariate_gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let f = f.with_order(TermOrder::DegRevLex);
    let g = g.with_order(TermOrder::DegRevLex);
    gcd_rec(&f, &g)
}

/// GCD of a whole list (0 for an empty list).
pub fn gcd_of_all<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> Option<Polynomial> {
    let mut acc: Option<Polynomial> = None;
    for p in polys {
        acc = Some(match acc {
            None => p.with_order(TermOrder::DegRevLex).normalized(),
            Some(a) if a.is_constant() && !a.is_zero() => return Some(a),
            Some(a) => multivariate_gcd(&a, p),
        });
    }
    acc
}

fn gcd_rec(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return g.normalized();
    }
    if g.is_zero() {
        return f.normalized();
    }
    if f.is_constant() || g.is_constant() {
        return Polynomial::one(f.ring());
    }
    let v = main_variable(f).max(main_variable(g));
    let (cf, pf) = split_content(f, v);
    let (cg, pg) = split_content(g, v);
    let content = gcd_rec(&cf, &cg);

    let (mut a, mut b) = if pf.degree_in(v) >= pg.degree_in(v) {
        (pf, pg)
    } else {
        (pg, pf)
    };
    while !b.is_zero() {
        if b.degree_in(v) == 0 {
            // b is primitive in x_v and free of x_v, hence a unit
            a = Polynomial::one(f.ring());
            break;
        }
        let r = pseudo_remainder(&a, &b, v);
        a = b;
        b = if r.is_zero() { r } else { split_content(&r, v).1 };
    }
    let primitive = if a.is_constant() {
        a
    } else {
        split_content(&a, v).1
    };
    (&content * &primitive).normalized()
}

fn main_variable(f: &Polynomial) -> usize {
    f.terms()
        .iter()
        .filter_map(|(p, _)| p.exponents().iter().rposition(|&e| e > 0))
        .max()
        .unwrap_or(0)
}

/// Coefficients of `f` as a polynomial in `x_v`, keyed by the power of `x_v`.
fn coefficients_in(f: &Polynomial, v: usize) -> BTreeMap<u32, Polynomial> {
    let mut groups: BTreeMap<u32, Vec<(PowerProduct, BigRational)>> = BTreeMap::new();
    for (p, c) in f.terms() {
        groups
            .entry(p.exponent(v))
            .or_default()
            .push((p.with_exponent(v, 0), c.clone()));
    }
    groups
        .into_iter()
        .map(|(e, terms)| (e, Polynomial::from_terms(f.ring(), f.order(), terms)))
        .collect()
}

/// `(content, primitive part)` of `f` with respect to `x_v`.
fn split_content(f: &Polynomial, v: usize) -> (Polynomial, Polynomial) {
    let coeffs = coefficients_in(f, v);
    let mut content: Option<Polynomial> = None;
    for c in coeffs.values() {
        content = Some(match content.take() {
            None => c.normalized(),
            Some(acc) if acc.is_constant() => {
                content = Some(acc);
                break;
            }
            Some(acc) => gcd_rec(&acc, c),
        });
    }
    let content = content.unwrap_or_else(|| Polynomial::one(f.ring()));
    let primitive = if content.is_constant() {
        f.normalized()
    } else {
        f.exact_div(&content)
            .expect("content divides every coefficient")
            .normalized()
    };
    (content, primitive)
}

fn pseudo_remainder(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let db = b.degree_in(v);
    let lcb = coefficients_in(b, v).remove(&db).expect("leading coefficient");
    let n = a.ring().arity();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lcr = coefficients_in(&r, v).remove(&dr).expect("leading coefficient");
        let shift = PowerProduct::var_power(n, v, dr - db);
        let t = (&lcr * b).mul_term(&shift, &BigRational::one());
        r = &(&lcb * &r) - &t;
    }
    r
}
